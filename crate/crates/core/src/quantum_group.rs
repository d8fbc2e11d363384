//! Quantum-group presentations from Cartan data: an ESC over a free
//! abelian group enriched with a Cartan matrix and square roots ξ_i of the
//! g_i, the two relator families (the δ-commutators and the q-Serre sums)
//! generating a Hopf ideal I of the semi-path Hopf algebra, the presented
//! algebra U with generators K_i^{±1}, X_i, and the mutually inverse maps
//! Φ: kQ^s/I → U and Ψ: U → kQ^s/I.
//!
//! The rewriting in U is deliberately not a general normal-form engine: K
//! letters always migrate to the left of a word, commutators move
//! plain-block letters left past σ-block letters inserting the δ-term, and
//! a q-Serre rewrite fires on X_i^{r_ij}·X_j. These reductions terminate
//! and suffice for the identities verified here, mirroring the explicit
//! computations they certify.

use std::collections::BTreeMap;
use std::fmt;

use crate::bimodule::ArrowBimodule;
use crate::braided::{BraidedAlgebra, BraidedElement, YdModule};
use crate::error::{Error, Result};
use crate::group::{Character, Elem, Group};
use crate::scalar::{q_binomial, QConvention, Scalar};
use crate::semipath::{TensorElement, TensorWord};
use crate::structure::Esc;
use crate::taft::{CheckLine, Report};

/// An ESC over the free abelian group on ξ_1..ξ_n enriched with
/// Cartan-type metadata. Indices 0..n are the plain block J⁽¹⁾ and n..2n
/// their σ-partners, σ(i) = i + n; ξ_{σ(i)} = ξ_i⁻¹ and g_i = ξ_i².
#[derive(Debug, Clone)]
pub struct FlData {
    pub esc: Esc,
    pub n: usize,
    /// Partition of 0..n into blocks J_u (a single block for the
    /// non-local types).
    pub blocks: Vec<Vec<usize>>,
    pub cartan: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    /// One deformation parameter per block.
    pub q_u: Vec<Scalar>,
    /// r_ij for i ≠ j in J⁽¹⁾ (r_{σ(i)σ(j)} = r_ij).
    pub r: Vec<Vec<u64>>,
}

impl FlData {
    /// ξ_i as a group element (i over all of J).
    pub fn xi(&self, i: usize) -> Elem {
        let mut v = vec![0i64; self.n];
        if i < self.n {
            v[i] = 1;
        } else {
            v[i - self.n] = -1;
        }
        Elem::Vector(v)
    }

    pub fn sigma(&self, i: usize) -> usize {
        if i < self.n {
            i + self.n
        } else {
            i - self.n
        }
    }

    /// χ_i(x).
    pub fn chi(&self, i: usize, x: &Elem) -> Scalar {
        self.esc.items[i].chi.eval(x)
    }

    pub fn g(&self, i: usize) -> &Elem {
        &self.esc.items[i].g
    }

    /// The block (index into `blocks`) containing a J⁽¹⁾ index.
    fn block_of(&self, i: usize) -> usize {
        let i = if i < self.n { i } else { i - self.n };
        self.blocks
            .iter()
            .position(|b| b.contains(&i))
            .expect("index belongs to a block")
    }

    fn r_of(&self, i: usize, j: usize) -> u64 {
        let (i, j) = (
            if i < self.n { i } else { i - self.n },
            if j < self.n { j } else { j - self.n },
        );
        self.r[i][j]
    }
}

/// Which of the four FL-type definitions the data satisfies.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FlType {
    pub matrix: bool,
    pub fl: bool,
    pub free: bool,
    pub quantum_group: bool,
    pub local: bool,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct FlReport {
    pub conditions: Vec<CheckLine>,
    pub fl_type: FlType,
}

impl FlReport {
    pub fn pass(&self) -> bool {
        self.conditions.iter().all(|c| c.pass)
    }
}

impl fmt::Display for FlReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.conditions {
            writeln!(
                f,
                "{}: {}{}",
                c.name,
                if c.pass { "pass" } else { "FAIL" },
                c.witness
                    .as_ref()
                    .map(|w| format!(" ({w})"))
                    .unwrap_or_default()
            )?;
        }
        let t = &self.fl_type;
        let prefix = if t.local { "local " } else { "" };
        let mut kinds = Vec::new();
        if t.matrix {
            kinds.push(format!("{prefix}FL-matrix type"));
        }
        if t.fl {
            kinds.push(format!("{prefix}FL type"));
        }
        if t.free {
            kinds.push(format!("{prefix}FL-free type"));
        }
        if t.quantum_group {
            kinds.push(format!("{prefix}FL-quantum-group type"));
        }
        if kinds.is_empty() {
            kinds.push("no FL type".into());
        }
        writeln!(f, "type: {}", kinds.join(", "))
    }
}

/// Evaluates the seven conditions and classifies the data.
pub fn validate_fl(data: &FlData) -> Result<FlReport> {
    let mut lines: Vec<CheckLine> = Vec::new();
    let mut push = |name: &str, res: std::result::Result<(), String>| {
        lines.push(match res {
            Ok(()) => CheckLine {
                name: name.into(),
                pass: true,
                witness: None,
            },
            Err(w) => CheckLine {
                name: name.into(),
                pass: false,
                witness: Some(w),
            },
        });
    };

    let n = data.n;
    // FL1: the blocks partition J⁽¹⁾ (σ-copies mirror them).
    let mut seen = vec![false; n];
    let mut fl1 = Ok(());
    for b in &data.blocks {
        for &i in b {
            if i >= n || seen[i] {
                fl1 = Err(format!("index {i} misplaced in the block partition"));
            } else {
                seen[i] = true;
            }
        }
    }
    if seen.iter().any(|s| !s) {
        fl1 = Err("blocks do not cover the index set".into());
    }
    push("FL1 block partition", fl1);

    // FL2: σ is the shift bijection; total index count 2n.
    push(
        "FL2 sigma bijection",
        if data.esc.len() == 2 * n {
            Ok(())
        } else {
            Err(format!("expected {} indices, found {}", 2 * n, data.esc.len()))
        },
    );

    // FL3: Cartan shape and symmetrizability inside blocks.
    let mut fl3 = Ok(());
    for i in 0..n {
        if data.cartan[i][i] != 2 {
            fl3 = Err(format!("a_{{{i}{i}}} ≠ 2"));
        }
        for j in 0..n {
            if i != j && data.cartan[i][j] > 0 {
                fl3 = Err(format!("a_{{{i}{j}}} > 0"));
            }
        }
    }
    'fl3: for b in &data.blocks {
        for &i in b {
            for &j in b {
                if data.d[i] * data.cartan[i][j] != data.d[j] * data.cartan[j][i] {
                    fl3 = Err(format!("d_{i}·a_{{{i}{j}}} ≠ d_{j}·a_{{{j}{i}}}"));
                    break 'fl3;
                }
            }
        }
    }
    push("FL3 symmetrizable Cartan matrix", fl3);

    // FL4: χ_i(g_j) = q_u^{−2·d_i·a_ij}, χ_{σ(i)}(g_j) = χ_i(g_j)⁻¹,
    // g_{σ(j)} = g_j.
    let mut fl4 = Ok(());
    'fl4: for (u, b) in data.blocks.iter().enumerate() {
        for &i in b {
            for &j in b {
                let lhs = data.chi(i, data.g(j));
                let rhs = data.q_u[u].pow(-2 * data.d[i] * data.cartan[i][j]);
                if lhs != rhs {
                    fl4 = Err(format!("χ_{i}(g_{j}) ≠ q^(-2·d_{i}·a_{{{i}{j}}})"));
                    break 'fl4;
                }
                if data.chi(data.sigma(i), data.g(j)) != lhs.inv().unwrap() {
                    fl4 = Err(format!("χ_σ({i})(g_{j}) ≠ χ_{i}(g_{j})⁻¹"));
                    break 'fl4;
                }
                if data.g(data.sigma(j)) != data.g(j) {
                    fl4 = Err(format!("g_σ({j}) ≠ g_{j}"));
                    break 'fl4;
                }
            }
        }
    }
    push("FL4 character values against the Cartan matrix", fl4);

    // FL5: χ_{σ(i)}(ξ_j) = χ_i(ξ_j)⁻¹, ξ_{σ(i)} = ξ_i⁻¹, g_i = ξ_i²,
    // r_{σ(i)σ(j)} = r_ij ≥ 1.
    let mut fl5 = Ok(());
    'fl5: for b in &data.blocks {
        for &i in b {
            for &j in b {
                let xi_j = data.xi(j);
                if data.chi(data.sigma(i), &xi_j) != data.chi(i, &xi_j).inv().unwrap() {
                    fl5 = Err(format!("χ_σ({i})(ξ_{j}) ≠ χ_{i}(ξ_{j})⁻¹"));
                    break 'fl5;
                }
            }
            let g = data.esc.group.mul(&data.xi(i), &data.xi(i));
            if *data.g(i) != g || *data.g(data.sigma(i)) != g {
                fl5 = Err(format!("g_{i} ≠ ξ_{i}²"));
                break 'fl5;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && data.r[i][j] == 0 {
                fl5 = Err(format!("r_{{{i}{j}}} must be positive"));
            }
        }
    }
    push("FL5 square roots and r symmetry", fl5);

    // FL6: χ_j(g_i)·χ_i(g_j)·χ_i(g_i)^{r_ij−1} = 1, χ_i(ξ_j) = χ_j(ξ_i),
    // χ_i(g_i)^{(r_ij−1)/2}·χ_j(g_i) = 1 (the half power is χ_i(ξ_i)^{r_ij−1}).
    let mut fl6 = Ok(());
    'fl6: for b in &data.blocks {
        for &i in b {
            for &j in b {
                if i == j {
                    continue;
                }
                let r = data.r[i][j];
                let c1 = data
                    .chi(j, data.g(i))
                    .mul(&data.chi(i, data.g(j)))
                    .mul(&data.chi(i, data.g(i)).pow(r as i64 - 1));
                if !c1.is_one() {
                    fl6 = Err(format!("first compatibility fails at ({i},{j})"));
                    break 'fl6;
                }
                if data.chi(i, &data.xi(j)) != data.chi(j, &data.xi(i)) {
                    fl6 = Err(format!("χ_{i}(ξ_{j}) ≠ χ_{j}(ξ_{i})"));
                    break 'fl6;
                }
                let c3 = data
                    .chi(i, &data.xi(i))
                    .pow(r as i64 - 1)
                    .mul(&data.chi(j, data.g(i)));
                if !c3.is_one() {
                    fl6 = Err(format!("half-power compatibility fails at ({i},{j})"));
                    break 'fl6;
                }
            }
        }
    }
    push("FL6 Serre compatibilities", fl6);

    // FL7: G free abelian on the ξ_i.
    push(
        "FL7 free abelian on the xi generators",
        if data.esc.group.rank() == Some(n) {
            Ok(())
        } else {
            Err("group is not free abelian of the right rank".into())
        },
    );

    let ok = |name: &str| lines.iter().find(|l| l.name.starts_with(name)).unwrap().pass;
    let (c1, c2, c3, c4) = (ok("FL1"), ok("FL2"), ok("FL3"), ok("FL4"));
    let (c5, c6, c7) = (ok("FL5"), ok("FL6"), ok("FL7"));
    let local = !(data.blocks.len() == 1 && data.blocks[0] == (0..n).collect::<Vec<_>>());
    let fl_type = FlType {
        matrix: c1 && c2 && c3 && c4,
        fl: c1 && c2 && c5 && c6,
        free: c1 && c2 && c5 && c6 && c7,
        quantum_group: c1 && c2 && c3 && c4 && c7,
        local,
    };
    Ok(FlReport {
        conditions: lines,
        fl_type,
    })
}

/// Builds FL-quantum-group-type data from a symmetrizable generalized
/// Cartan matrix: χ_i(ξ_j) = q^{−d_i·a_ij}, χ_{σ(i)} = χ_i⁻¹, r_ij = 1 − a_ij.
pub fn cartan_to_esc(cartan: &[Vec<i64>], d: &[i64], q: &Scalar) -> Result<FlData> {
    let n = cartan.len();
    if n == 0 || cartan.iter().any(|row| row.len() != n) || d.len() != n {
        return Err(Error::Config("Cartan matrix and symmetrizers must be square".into()));
    }
    for i in 0..n {
        if cartan[i][i] != 2 {
            return Err(Error::Config(format!("a_{{{i}{i}}} must be 2")));
        }
        if d[i] <= 0 {
            return Err(Error::Config("symmetrizers must be positive".into()));
        }
        for j in 0..n {
            if i != j && cartan[i][j] > 0 {
                return Err(Error::Config("off-diagonal entries must be ≤ 0".into()));
            }
            if d[i] * cartan[i][j] != d[j] * cartan[j][i] {
                return Err(Error::Config(format!(
                    "not symmetrizable: d_{i}·a_{{{i}{j}}} ≠ d_{j}·a_{{{j}{i}}}"
                )));
            }
        }
    }
    if q.is_zero() || q.root_of_unity_order().is_some() {
        return Err(Error::Config(
            "the deformation parameter must be nonzero and not a root of unity".into(),
        ));
    }
    let group = Group::free_abelian(n)?;
    let mut items = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut g = vec![0i64; n];
        g[i] = 2;
        let values: Vec<Scalar> = (0..n).map(|j| q.pow(-d[i] * cartan[i][j])).collect();
        items.push(crate::structure::EscItem {
            g: Elem::Vector(g),
            chi: Character::generator_values(values),
        });
    }
    for i in 0..n {
        let mut g = vec![0i64; n];
        g[i] = 2;
        let values: Vec<Scalar> = (0..n).map(|j| q.pow(d[i] * cartan[i][j])).collect();
        items.push(crate::structure::EscItem {
            g: Elem::Vector(g),
            chi: Character::generator_values(values),
        });
    }
    let esc = Esc::new(group, items)?;
    let mut r = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                r[i][j] = (1 - cartan[i][j]) as u64;
            }
        }
    }
    Ok(FlData {
        esc,
        n,
        blocks: vec![(0..n).collect()],
        cartan: cartan.to_vec(),
        d: d.to_vec(),
        q_u: vec![q.clone()],
        r,
    })
}

/// The relators of the ideal I ⊂ kQ^s: the δ-commutators (one per pair
/// i ∈ J_u, j ∈ J_u') and the q-Serre sums (one per ordered pair of
/// distinct indices in the same block or its σ-copy).
pub fn build_ideal(data: &FlData, bm: &ArrowBimodule) -> Result<Vec<TensorElement>> {
    let group = &data.esc.group;
    let id = group.identity();
    let word_ee = |a: usize, b: usize| TensorWord {
        leading: id.clone(),
        arrows: vec![bm.e_arrow(a), bm.e_arrow(b)],
    };
    let mut out = Vec::new();
    for b in &data.blocks {
        // δ-commutators
        for &i in b {
            for &jj in b {
                let j = data.sigma(jj);
                let den = data
                    .chi(i, &data.xi(i))
                    .sub(&data.chi(i, &data.xi(i)).inv().unwrap());
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let mut rel = TensorElement::zero();
                rel.add_term(word_ee(i, j), data.chi(j, &data.xi(i)));
                rel.add_term(
                    word_ee(j, i),
                    data.chi(i, &data.xi(j)).inv().unwrap().neg(),
                );
                if data.sigma(i) == j {
                    let gi2 = group.mul(data.g(i), data.g(i));
                    let c = den.inv().unwrap();
                    rel.add_term(TensorWord::vertex(gi2), c.neg());
                    rel.add_term(TensorWord::vertex(id.clone()), c);
                }
                out.push(rel);
            }
        }
        // q-Serre relators on the block and on its σ-copy
        for side in [false, true] {
            for &i0 in b {
                for &j0 in b {
                    if i0 == j0 {
                        continue;
                    }
                    let (i, j) = if side {
                        (data.sigma(i0), data.sigma(j0))
                    } else {
                        (i0, j0)
                    };
                    let r = data.r_of(i, j);
                    // guard: r−1 < ord(χ_i(g_i))
                    if let Some(ord) = data.chi(i, data.g(i)).root_of_unity_order() {
                        if r - 1 >= ord {
                            continue;
                        }
                    }
                    let base = data.chi(i, &data.xi(i)).inv().unwrap();
                    let mut rel = TensorElement::zero();
                    for m in 0..=r {
                        let coeff = q_binomial(r, m, &base, QConvention::Symmetric)?;
                        let sign = if m % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
                        let mut arrows = Vec::new();
                        for _ in 0..(r - m) {
                            arrows.push(bm.e_arrow(i));
                        }
                        arrows.push(bm.e_arrow(j));
                        for _ in 0..m {
                            arrows.push(bm.e_arrow(i));
                        }
                        rel.add_term(
                            TensorWord {
                                leading: id.clone(),
                                arrows,
                            },
                            sign.mul(&coeff),
                        );
                    }
                    out.push(rel);
                }
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// The presented algebra U
// ---------------------------------------------------------------------------

/// An element of U: sums of K-monomials (integer exponent vectors over
/// J⁽¹⁾, with K_{σ(i)} = K_i⁻¹ folded in) times X-letter words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UElement {
    terms: BTreeMap<(Vec<i64>, Vec<usize>), Scalar>,
}

impl UElement {
    pub fn zero() -> UElement {
        UElement::default()
    }

    pub fn from_term(k: Vec<i64>, xs: Vec<usize>, c: Scalar) -> UElement {
        let mut e = UElement::zero();
        e.add_term(k, xs, c);
        e
    }

    pub fn one(n: usize) -> UElement {
        UElement::from_term(vec![0; n], vec![], Scalar::one())
    }

    pub fn add_term(&mut self, k: Vec<i64>, xs: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (k, xs);
        let cur = self.terms.remove(&key).unwrap_or_else(Scalar::zero);
        let s = cur.add(&c);
        if !s.is_zero() {
            self.terms.insert(key, s);
        }
    }

    pub fn add(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        for ((k, xs), c) in &other.terms {
            out.add_term(k.clone(), xs.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> UElement {
        if c.is_zero() {
            return UElement::zero();
        }
        UElement {
            terms: self
                .terms
                .iter()
                .map(|(key, s)| (key.clone(), s.mul(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &UElement) -> UElement {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<i64>, Vec<usize>), &Scalar)> {
        self.terms.iter()
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((k, xs), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts = Vec::new();
            if !c.is_one() || (k.iter().all(|&e| e == 0) && xs.is_empty()) {
                parts.push(format!("({c})"));
            }
            for (i, &e) in k.iter().enumerate() {
                if e == 1 {
                    parts.push(format!("K{}", i + 1));
                } else if e != 0 {
                    parts.push(format!("K{}^{}", i + 1, e));
                }
            }
            for &x in xs {
                parts.push(format!("X{}", x + 1));
            }
            write!(f, "{}", parts.join("·"))?;
        }
        Ok(())
    }
}

/// The presented algebra U of an FL datum, with just enough rewriting to
/// verify the identities of interest.
pub struct UAlgebra {
    pub data: FlData,
}

impl UAlgebra {
    pub fn new(data: FlData) -> UAlgebra {
        UAlgebra { data }
    }

    pub fn n(&self) -> usize {
        self.data.n
    }

    pub fn k_gen(&self, i: usize) -> UElement {
        let n = self.n();
        let mut k = vec![0i64; n];
        if i < n {
            k[i] = 1;
        } else {
            k[i - n] = -1;
        }
        UElement::from_term(k, vec![], Scalar::one())
    }

    pub fn x_gen(&self, i: usize) -> UElement {
        UElement::from_term(vec![0; self.n()], vec![i], Scalar::one())
    }

    /// χ_j(ξ^k): the scalar picked up by the K-monomial K^k crossing X_j
    /// from right to left.
    fn crossing(&self, k: &[i64], j: usize) -> Scalar {
        self.data.chi(j, &Elem::Vector(k.to_vec()))
    }

    /// Product with immediate K-normalization.
    pub fn multiply(&self, a: &UElement, b: &UElement) -> UElement {
        let mut out = UElement::zero();
        for ((k1, x1), c1) in a.terms() {
            for ((k2, x2), c2) in b.terms() {
                // move K^{k2} left through x1
                let mut scalar = c1.mul(c2);
                for &j in x1 {
                    scalar = scalar.mul(&self.crossing(k2, j));
                }
                let k: Vec<i64> = k1.iter().zip(k2).map(|(a, b)| a + b).collect();
                let mut xs = x1.clone();
                xs.extend_from_slice(x2);
                out.add_term(k, xs, scalar);
            }
        }
        out
    }

    /// The δ-term (K_i² − K_i⁻²)/(χ_i(ξ_i) − χ_i(ξ_i)⁻¹).
    fn delta_term(&self, i: usize) -> Result<UElement> {
        let n = self.n();
        let chi = self.data.chi(i, &self.data.xi(i));
        let den = chi.sub(&chi.inv().ok_or(Error::DivisionByZero)?);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = den.inv().unwrap();
        let mut k2 = vec![0i64; n];
        k2[if i < n { i } else { i - n }] = 2;
        let mut km2 = vec![0i64; n];
        km2[if i < n { i } else { i - n }] = -2;
        let mut out = UElement::zero();
        out.add_term(k2, vec![], c.clone());
        out.add_term(km2, vec![], c.neg());
        Ok(out)
    }

    /// Reduces to the fixed point of the commutator and Serre rewrites.
    pub fn reduce(&self, x: &UElement) -> Result<UElement> {
        let n = self.n();
        let mut work: Vec<(Vec<i64>, Vec<usize>, Scalar)> = x
            .terms()
            .map(|((k, xs), c)| (k.clone(), xs.clone(), c.clone()))
            .collect();
        let mut out = UElement::zero();
        let mut steps = 0usize;
        while let Some((k, xs, c)) = work.pop() {
            steps += 1;
            if steps > 100_000 {
                return Err(Error::BoundExceeded(
                    "U reduction exceeded the step budget".into(),
                ));
            }
            // commutator rewrite: X_j X_i with j ∈ J⁽²⁾, i ∈ J⁽¹⁾, same block
            let site_a = (0..xs.len().saturating_sub(1)).find(|&p| {
                xs[p] >= n
                    && xs[p + 1] < n
                    && self.data.block_of(xs[p]) == self.data.block_of(xs[p + 1])
            });
            if let Some(p) = site_a {
                let j = xs[p];
                let i = xs[p + 1];
                // X_jX_i = X_iX_j − δ_{σ(i),j}·c_i(K)
                let mut swapped = xs.clone();
                swapped.swap(p, p + 1);
                work.push((k.clone(), swapped, c.clone()));
                if self.data.sigma(i) == j {
                    let left = UElement::from_term(k.clone(), xs[..p].to_vec(), c.neg());
                    let right =
                        UElement::from_term(vec![0; n], xs[p + 2..].to_vec(), Scalar::one());
                    let mid = self.delta_term(i)?;
                    let prod = self.multiply(&self.multiply(&left, &mid), &right);
                    for ((k2, xs2), c2) in prod.terms() {
                        work.push((k2.clone(), xs2.clone(), c2.clone()));
                    }
                }
                continue;
            }
            // Serre rewrite: X_i^{r_ij} X_j within one side of a block
            let mut fired = false;
            'scan: for p in 0..xs.len() {
                let i = xs[p];
                let same_side = |a: usize| (a < n) == (i < n);
                let mut run = 1usize;
                while p + run < xs.len() && xs[p + run] == i {
                    run += 1;
                }
                if p + run >= xs.len() {
                    continue;
                }
                let j = xs[p + run];
                if j == i || !same_side(j) || self.data.block_of(i) != self.data.block_of(j) {
                    continue;
                }
                let r = self.data.r_of(i, j) as usize;
                if run < r {
                    continue;
                }
                // the last r copies of X_i before X_j rewrite
                if let Some(ord) = self.data.chi(i, self.data.g(i)).root_of_unity_order() {
                    if (r as u64) - 1 >= ord {
                        continue;
                    }
                }
                let base = self.data.chi(i, &self.data.xi(i)).inv().unwrap();
                let start = p + run - r;
                for m in 1..=r {
                    let coeff = q_binomial(r as u64, m as u64, &base, QConvention::Symmetric)?;
                    let sign = if m % 2 == 0 { Scalar::int(-1) } else { Scalar::one() };
                    // −(−1)^m: m odd → +, m even → −
                    let mut new_xs = xs[..start].to_vec();
                    for _ in 0..(r - m) {
                        new_xs.push(i);
                    }
                    new_xs.push(j);
                    for _ in 0..m {
                        new_xs.push(i);
                    }
                    new_xs.extend_from_slice(&xs[p + run + 1..]);
                    work.push((k.clone(), new_xs, c.mul(&sign).mul(&coeff)));
                }
                fired = true;
                break 'scan;
            }
            if fired {
                continue;
            }
            out.add_term(k, xs, c);
        }
        Ok(out)
    }
}

/// A rendered presentation of U, plus the structural data the renderer
/// used (for programmatic comparison).
#[derive(Debug, Clone, serde::Serialize)]
pub struct UPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub coalgebra: Vec<String>,
    pub rank: usize,
    /// (i, σ(i)) commutator pairs carrying a δ-term.
    pub commutator_pairs: Vec<(usize, usize)>,
    /// (i, j, r_ij) Serre relations.
    pub serre_relations: Vec<(usize, usize, u64)>,
    /// χ_j(ξ_i) for the K-commutation χ_j(ξ_i)·K_i·X_j = X_j·K_i.
    pub k_commutation: Vec<(usize, usize, Scalar)>,
}

/// Renders the presentation of U for an FL datum.
pub fn build_u(data: &FlData) -> Result<UPresentation> {
    let n = data.n;
    let mut generators = Vec::new();
    for i in 0..n {
        generators.push(format!("K{}", i + 1));
        generators.push(format!("K{}^-1", i + 1));
    }
    for i in 0..2 * n {
        generators.push(format!("X{}", i + 1));
    }
    let mut relations = Vec::new();
    let mut commutator_pairs = Vec::new();
    let mut serre_relations = Vec::new();
    let mut k_commutation = Vec::new();
    for i in 0..n {
        relations.push(format!("K{i1}·K{i1}^-1 = 1", i1 = i + 1));
    }
    relations.push("K_i·K_j = K_j·K_i".into());
    for b in &data.blocks {
        for &i in b {
            for &jj in b {
                let j = data.sigma(jj);
                if data.sigma(i) == j {
                    let chi = data.chi(i, &data.xi(i));
                    relations.push(format!(
                        "X{}·X{} − X{}·X{} = (K{}² − K{}⁻²)/(({chi}) − ({chi})⁻¹)",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1,
                        i + 1,
                        i + 1,
                    ));
                    commutator_pairs.push((i, j));
                } else {
                    relations.push(format!(
                        "X{}·X{} = X{}·X{}",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    ));
                }
            }
        }
    }
    for i in 0..2 * n {
        for kgen in 0..n {
            let chi = data.chi(i, &data.xi(kgen));
            k_commutation.push((kgen, i, chi.clone()));
            relations.push(format!(
                "({chi})·K{}·X{} = X{}·K{}",
                kgen + 1,
                i + 1,
                i + 1,
                kgen + 1
            ));
        }
    }
    for b in &data.blocks {
        for side in [false, true] {
            for &i0 in b {
                for &j0 in b {
                    if i0 == j0 {
                        continue;
                    }
                    let (i, j) = if side {
                        (data.sigma(i0), data.sigma(j0))
                    } else {
                        (i0, j0)
                    };
                    let r = data.r_of(i, j);
                    serre_relations.push((i, j, r));
                    relations.push(format!(
                        "Σ_m (−1)^m [{r} m]·X{}^({r}−m)·X{}·X{}^m = 0",
                        i + 1,
                        j + 1,
                        i + 1
                    ));
                }
            }
        }
    }
    let mut coalgebra = Vec::new();
    for i in 0..n {
        coalgebra.push(format!("Δ(K{0}) = K{0}⊗K{0}, ε(K{0}) = 1, S(K{0}) = K{0}^-1", i + 1));
    }
    for i in 0..2 * n {
        let partner = data.sigma(i);
        let (kp, kq) = if i < n { (i, partner) } else { (partner, i) };
        let _ = kq;
        let s = data.chi(i, &data.xi(i)).neg();
        coalgebra.push(format!(
            "Δ(X{0}) = X{0}⊗K{1}{2} + K{1}⊗X{0}, ε(X{0}) = 0, S(X{0}) = ({3})·X{0}",
            i + 1,
            kp + 1,
            if i < n { "^-1" } else { "" },
            s
        ));
    }
    Ok(UPresentation {
        generators,
        relations,
        coalgebra,
        rank: n,
        commutator_pairs,
        serre_relations,
        k_commutation,
    })
}

/// Structural comparison against the classical rank-one presentation:
/// one δ-commutator pair, mutually inverse K-commutation scalars, no
/// Serre relations.
pub fn matches_rank_one_presentation(p: &UPresentation) -> bool {
    p.rank == 1
        && p.commutator_pairs == vec![(0, 1)]
        && p.serre_relations.is_empty()
        && p.k_commutation.len() == 2
        && {
            let a = &p.k_commutation[0].2;
            let b = &p.k_commutation[1].2;
            a.mul(b).is_one() && !a.is_one()
        }
}

/// The algebra map Φ: ξ_i ↦ K_i and a^{(i)}_{h·g_i, h} ↦ Φ(h)·K_{i'}·X_i
/// with i' the J⁽¹⁾ partner of i, applied to a normal-form tensor word.
pub fn phi_map(data: &FlData, bm: &ArrowBimodule, w: &TensorWord) -> UElement {
    let u = UAlgebra::new(data.clone());
    let n = data.n;
    let lead = match &w.leading {
        Elem::Vector(v) => v.clone(),
        _ => panic!("free abelian group elements are vectors"),
    };
    let mut acc = UElement::from_term(lead, vec![], Scalar::one());
    for a in &w.arrows {
        let j = bm
            .esc_index_of(a.class, a.index)
            .expect("arrow belongs to the ESC quiver");
        let i = if j < n { j } else { j - n };
        let mut k = vec![0i64; n];
        k[i] = 1;
        let factor = UElement::from_term(k, vec![j], Scalar::one());
        acc = u.multiply(&acc, &factor);
    }
    acc
}

pub fn phi_map_element(data: &FlData, bm: &ArrowBimodule, x: &TensorElement) -> UElement {
    let mut out = UElement::zero();
    for (w, c) in x.terms() {
        out = out.add(&phi_map(data, bm, w).scale(c));
    }
    out
}

/// Checks Φ(I) = 0: every relator of the ideal reduces to zero in U.
pub fn verify_phi_kills_ideal(data: &FlData) -> Result<Report> {
    let bm = ArrowBimodule::from_esc(&data.esc);
    let relators = build_ideal(data, &bm)?;
    let u = UAlgebra::new(data.clone());
    let mut report = Report { checks: vec![] };
    for (idx, rel) in relators.iter().enumerate() {
        let image = phi_map_element(data, &bm, rel);
        let reduced = u.reduce(&image)?;
        report.checks.push(CheckLine {
            name: format!("Φ(relator {}) = 0", idx + 1),
            pass: reduced.is_zero(),
            witness: if reduced.is_zero() {
                None
            } else {
                Some(format!("{reduced}"))
            },
        });
    }
    Ok(report)
}

/// The map Ψ on generators: K_i ↦ ξ_i, X_i ↦ ξ_i⁻¹·E_i,
/// X_{σ(i)} ↦ ξ_i⁻¹·E_{σ(i)}.
pub fn psi_on_x(data: &FlData, bm: &ArrowBimodule, i: usize) -> TensorElement {
    let n = data.n;
    let ip = if i < n { i } else { i - n };
    let xi_inv = data.esc.group.inv(&data.xi(ip));
    TensorElement::from_word(TensorWord {
        leading: xi_inv,
        arrows: vec![bm.e_arrow(i)],
    })
}

/// Verifies Ψ∘Φ = id and Φ∘Ψ = id on all generators (ξ_i, E_i on one
/// side; K_i, X_i on the other), computing representatives in kQ^s and
/// reducing in U.
pub fn psi_phi_roundtrip(data: &FlData) -> Result<Report> {
    let bm = ArrowBimodule::from_esc(&data.esc);
    let u = UAlgebra::new(data.clone());
    let n = data.n;
    let mut report = Report { checks: vec![] };
    // Ψ(Φ(ξ_i)) = ξ_i and Ψ(Φ(E_j)) = E_j
    for i in 0..n {
        let xi_word = TensorWord::vertex(data.xi(i));
        let img = phi_map(data, &bm, &xi_word); // K_i
        // Ψ of a pure K-monomial K^v is the vertex ξ^v
        let mut ok = true;
        for ((k, xs), c) in img.terms() {
            ok &= xs.is_empty() && *c == Scalar::one() && *k == vec![0; n].iter().enumerate().map(|(p, _)| if p == i { 1 } else { 0 }).collect::<Vec<i64>>();
        }
        report.checks.push(CheckLine {
            name: format!("Ψ(Φ(ξ{})) = ξ{}", i + 1, i + 1),
            pass: ok,
            witness: if ok { None } else { Some(format!("{img}")) },
        });
    }
    for j in 0..2 * n {
        // Φ(E_j) = K_{j'}X_j; Ψ of that = ξ_{j'}·(ξ_{j'}⁻¹·E_j) = E_j
        let e_word = TensorWord {
            leading: data.esc.group.identity(),
            arrows: vec![bm.e_arrow(j)],
        };
        let img = phi_map(data, &bm, &e_word);
        let mut back = TensorElement::zero();
        for ((k, xs), c) in img.terms() {
            // Ψ(K^k ∏X) = ξ^k · ∏ Ψ(X)
            let mut acc = TensorElement::from_word(TensorWord::vertex(Elem::Vector(k.clone())));
            for &x in xs {
                acc = crate::semipath::multiply(&bm, &acc, &psi_on_x(data, &bm, x));
            }
            back = back.add(&acc.scale(c));
        }
        let expected = TensorElement::from_word(e_word);
        let pass = back == expected;
        report.checks.push(CheckLine {
            name: format!("Ψ(Φ(E{})) = E{}", j + 1, j + 1),
            pass,
            witness: if pass { None } else { Some(format!("{back}")) },
        });
    }
    // Φ(Ψ(K_i)) = K_i and Φ(Ψ(X_j)) = X_j
    for i in 0..n {
        let back = phi_map(data, &bm, &TensorWord::vertex(data.xi(i)));
        let pass = back == u.k_gen(i);
        report.checks.push(CheckLine {
            name: format!("Φ(Ψ(K{})) = K{}", i + 1, i + 1),
            pass,
            witness: if pass { None } else { Some(format!("{back}")) },
        });
    }
    for j in 0..2 * n {
        let psi_x = psi_on_x(data, &bm, j);
        let back = u.reduce(&phi_map_element(data, &bm, &psi_x))?;
        let pass = back == u.x_gen(j);
        report.checks.push(CheckLine {
            name: format!("Φ(Ψ(X{})) = X{}", j + 1, j + 1),
            pass,
            witness: if pass { None } else { Some(format!("{back}")) },
        });
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// q-Serre primitivity (braided side)
// ---------------------------------------------------------------------------

/// Input for the braided q-Serre primitivity check: two YD lines with
/// coaction elements g and action characters χ (the action used is
/// h·x = χ(h⁻¹)·x, the diagram-side convention).
#[derive(Debug, Clone)]
pub struct SerreData {
    pub group: Group,
    pub g: [Elem; 2],
    pub chi: [Character; 2],
}

/// Forms Σ_m (−1)^m [r m]_{√χ₁(g₁⁻¹)}·x₁^{r−m}·x₂·x₁^m in the braided
/// tensor algebra, verifies it is primitive and equals the iterated
/// braided commutator (ad_c x₁)^r x₂, and reports the applicability
/// conditions.
pub fn serre_primitive_check(data: &SerreData, r: u64, cutoff: usize) -> Result<Report> {
    let mut report = Report { checks: vec![] };
    let chi1_g1 = data.chi[0].eval(&data.g[0]);
    let chi1_g2 = data.chi[0].eval(&data.g[1]);
    let chi2_g1 = data.chi[1].eval(&data.g[0]);

    // conditions: χ₂(g₁)·χ₁(g₂)·χ₁(g₁)^{r−1} = 1,
    //             χ₁(g₁)^{(r−1)/2}·χ₂(g₁) = 1, r−1 < ord(χ₁(g₁))
    let c1 = chi2_g1
        .mul(&chi1_g2)
        .mul(&chi1_g1.pow(r as i64 - 1))
        .is_one();
    report.checks.push(CheckLine {
        name: "χ₂(g₁)·χ₁(g₂)·χ₁(g₁)^(r−1) = 1".into(),
        pass: c1,
        witness: None,
    });
    let sqrt_q = chi1_g1
        .sqrt()
        .ok_or_else(|| Error::Precondition("χ₁(g₁) needs a square root".into()))?;
    let c2 = sqrt_q.pow(r as i64 - 1).mul(&chi2_g1).is_one();
    report.checks.push(CheckLine {
        name: "χ₁(g₁)^((r−1)/2)·χ₂(g₁) = 1".into(),
        pass: c2,
        witness: None,
    });
    let c3 = match chi1_g1.root_of_unity_order() {
        Some(ord) => r - 1 < ord,
        None => true,
    };
    report.checks.push(CheckLine {
        name: "r−1 < ord(χ₁(g₁))".into(),
        pass: c3,
        witness: None,
    });

    // the braided module with inverted action
    let module = YdModule {
        group: data.group.clone(),
        lines: vec![
            (data.g[0].clone(), data.chi[0].inverse()),
            (data.g[1].clone(), data.chi[1].inverse()),
        ],
    };
    let alg = BraidedAlgebra::tensor(module);

    // binomial base √(χ₁(g₁⁻¹)) = √(χ₁(g₁))⁻¹
    let base = sqrt_q.inv().ok_or(Error::DivisionByZero)?;
    let mut serre = BraidedElement::zero();
    for m in 0..=r {
        let coeff = q_binomial(r, m, &base, QConvention::Symmetric)?;
        let sign = if m % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
        let mut word = Vec::new();
        for _ in 0..(r - m) {
            word.push(0usize);
        }
        word.push(1);
        for _ in 0..m {
            word.push(0);
        }
        serre = serre.add(&BraidedElement::from_term(word, sign.mul(&coeff)));
    }

    // (ad_c x₁)^r x₂ with (ad_c x)y = x·y − (g_x ▷ y)·x
    let mut ad = BraidedElement::generator(1);
    for _ in 0..r {
        let mut next = alg.multiply(&BraidedElement::generator(0), &ad);
        for (w, c) in ad.terms() {
            let act = alg.module.word_action(&data.g[0], w);
            let mut word = w.clone();
            word.push(0);
            next.add_term(word, c.mul(&act).neg());
        }
        ad = next;
    }
    let matches_ad = serre.sub(&ad).is_zero();
    report.checks.push(CheckLine {
        name: "binomial sum equals (ad_c x₁)^r x₂".into(),
        pass: matches_ad,
        witness: if matches_ad {
            None
        } else {
            Some(format!("sum = {serre}, ad = {ad}"))
        },
    });

    let defect = alg.primitive_defect(&serre, cutoff.max(r as usize + 1))?;
    let primitive = defect.is_zero();
    report.checks.push(CheckLine {
        name: "q-Serre element is primitive".into(),
        pass: primitive,
        witness: if primitive {
            None
        } else {
            let ((l, r), c) = defect.terms().next().unwrap();
            Some(format!("Δ-defect term ({c})·[{l:?}]⊗[{r:?}]"))
        },
    });
    Ok(report)
}

/// Degree-two special case: √χ₂(g₁)·x₁x₂ − √χ₁(g₂)·x₂x₁ is primitive when
/// √χ₁(g₂)·√χ₂(g₁) = 1.
pub fn skew_pair_primitive_check(data: &SerreData) -> Result<Report> {
    let mut report = Report { checks: vec![] };
    let s12 = data.chi[0]
        .eval(&data.g[1])
        .sqrt()
        .ok_or_else(|| Error::Precondition("χ₁(g₂) needs a square root".into()))?;
    let s21 = data.chi[1]
        .eval(&data.g[0])
        .sqrt()
        .ok_or_else(|| Error::Precondition("χ₂(g₁) needs a square root".into()))?;
    let cond = s12.mul(&s21).is_one();
    report.checks.push(CheckLine {
        name: "√χ₁(g₂)·√χ₂(g₁) = 1".into(),
        pass: cond,
        witness: None,
    });
    let module = YdModule {
        group: data.group.clone(),
        lines: vec![
            (data.g[0].clone(), data.chi[0].inverse()),
            (data.g[1].clone(), data.chi[1].inverse()),
        ],
    };
    let alg = BraidedAlgebra::tensor(module);
    let mut el = BraidedElement::from_term(vec![0, 1], s21);
    el.add_term(vec![1, 0], s12.neg());
    let defect = alg.primitive_defect(&el, 3)?;
    report.checks.push(CheckLine {
        name: "skew pair is primitive".into(),
        pass: defect.is_zero(),
        witness: if defect.is_zero() {
            None
        } else {
            Some("nonzero Δ-defect".into())
        },
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> FlData {
        cartan_to_esc(&[vec![2]], &[1], &Scalar::q()).unwrap()
    }

    fn sl3() -> FlData {
        cartan_to_esc(
            &[vec![2, -1], vec![-1, 2]],
            &[1, 1],
            &Scalar::q(),
        )
        .unwrap()
    }

    #[test]
    fn cartan_validation() {
        assert!(cartan_to_esc(&[vec![2, -1], vec![-2, 2]], &[1, 1], &Scalar::q()).is_err());
        assert!(cartan_to_esc(&[vec![2]], &[1], &Scalar::zeta(5)).is_err());
        let d = sl3();
        assert_eq!(d.r[0][1], 2);
        assert_eq!(d.chi(0, &d.xi(1)), Scalar::q());
    }

    #[test]
    fn fl_conditions_hold_for_cartan_data() {
        for data in [sl2(), sl3()] {
            let report = validate_fl(&data).unwrap();
            assert!(report.pass(), "{report}");
            assert!(report.fl_type.quantum_group);
            assert!(report.fl_type.free);
            assert!(!report.fl_type.local);
        }
    }

    #[test]
    fn broken_symmetrizability_fails_fl3() {
        let mut data = sl3();
        data.cartan[0][1] = -2; // d_i a_ij ≠ d_j a_ji now
        let report = validate_fl(&data).unwrap();
        assert!(!report.pass());
        assert!(!report.conditions[2].pass, "FL3 must fail");
    }

    #[test]
    fn wrong_r_breaks_fl_consistency() {
        let mut data = sl3();
        data.r[0][1] = 3; // should be 1 − a_ij = 2
        let report = validate_fl(&data).unwrap();
        // FL6 contains χ_i(g_i)^{r−1} conditions which now fail
        assert!(!report.pass(), "{report}");
    }

    #[test]
    fn ideal_shapes() {
        let data = sl2();
        let bm = ArrowBimodule::from_esc(&data.esc);
        let rels = build_ideal(&data, &bm).unwrap();
        // one δ-commutator, no Serre relators for rank one
        assert_eq!(rels.len(), 1);
        // δ-term present: four terms total (two words + two vertices)
        assert_eq!(rels[0].terms().count(), 4);

        let data = sl3();
        let bm = ArrowBimodule::from_esc(&data.esc);
        let rels = build_ideal(&data, &bm).unwrap();
        // 4 commutators (i ∈ J₁ × j ∈ J₁′) + 2 + 2 Serre relators
        assert_eq!(rels.len(), 8);
        // an sl₃ Serre relator has 3 terms: E₁²E₂, E₁E₂E₁, E₂E₁²
        let serre = rels
            .iter()
            .filter(|r| r.terms().any(|(w, _)| w.degree() == 3))
            .count();
        assert_eq!(serre, 4);
        // and the middle coefficient is the symmetric [2] at q²
        let rel = rels
            .iter()
            .find(|r| r.terms().any(|(w, _)| w.degree() == 3))
            .unwrap();
        let q = Scalar::q();
        let expected_mid = q.pow(2).add(&q.pow(-2)).neg();
        assert!(rel.terms().any(|(_, c)| *c == expected_mid));
    }

    #[test]
    fn phi_kills_the_ideal() {
        for data in [sl2(), sl3()] {
            let report = verify_phi_kills_ideal(&data).unwrap();
            assert!(report.pass(), "{report}");
        }
    }

    #[test]
    fn wrong_serre_exponent_leaves_residue() {
        // negative control: a Serre-type relator with r = 3 instead of
        // r₁₂ = 2 maps to a nonzero residue in the (correct) U
        let data = sl3();
        let bm = ArrowBimodule::from_esc(&data.esc);
        let u = UAlgebra::new(data.clone());
        let base = data.chi(0, &data.xi(0)).inv().unwrap();
        let r = 3u64;
        let mut rel = TensorElement::zero();
        for m in 0..=r {
            let coeff = q_binomial(r, m, &base, QConvention::Symmetric).unwrap();
            let sign = if m % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
            let mut arrows = Vec::new();
            for _ in 0..(r - m) {
                arrows.push(bm.e_arrow(0));
            }
            arrows.push(bm.e_arrow(1));
            for _ in 0..m {
                arrows.push(bm.e_arrow(0));
            }
            rel.add_term(
                TensorWord {
                    leading: data.esc.group.identity(),
                    arrows,
                },
                sign.mul(&coeff),
            );
        }
        let image = phi_map_element(&data, &bm, &rel);
        let reduced = u.reduce(&image).unwrap();
        assert!(!reduced.is_zero(), "wrong exponent must leave a residue");
    }

    #[test]
    fn roundtrip_identities() {
        for data in [sl2(), sl3()] {
            let report = psi_phi_roundtrip(&data).unwrap();
            assert!(report.pass(), "{report}");
        }
    }

    #[test]
    fn rank_one_presentation_matches() {
        let p = build_u(&sl2()).unwrap();
        assert!(matches_rank_one_presentation(&p));
        assert_eq!(p.commutator_pairs, vec![(0, 1)]);
        let p3 = build_u(&sl3()).unwrap();
        assert!(!matches_rank_one_presentation(&p3));
        assert_eq!(p3.serre_relations.len(), 4);
        assert!(p3.serre_relations.iter().all(|&(_, _, r)| r == 2));
    }

    #[test]
    fn u_reduction_examples() {
        let data = sl2();
        let u = UAlgebra::new(data);
        // X₂X₁ reduces to X₁X₂ − δ-term
        let x21 = UElement::from_term(vec![0], vec![1, 0], Scalar::one());
        let red = u.reduce(&x21).unwrap();
        assert!(red.terms().any(|((_, xs), _)| *xs == vec![0, 1]));
        assert!(red.terms().any(|((k, xs), _)| xs.is_empty() && *k == vec![2]));
        // K-crossing scalars: X₁K₁ = χ₁(ξ₁)K₁X₁
        let x1 = u.x_gen(0);
        let k1 = u.k_gen(0);
        let prod = u.multiply(&x1, &k1);
        let ((k, xs), c) = prod.terms().next().unwrap();
        assert_eq!(*k, vec![1]);
        assert_eq!(*xs, vec![0]);
        assert_eq!(*c, Scalar::q().pow(-2));
    }

    #[test]
    fn serre_primitivity_rank_one_type() {
        // r = 1 with χ₂(g₁) = χ₁(g₂) = 1: x₁x₂ − x₂x₁ is primitive
        let g = Group::free_abelian(2).unwrap();
        let data = SerreData {
            group: g,
            g: [Elem::Vector(vec![2, 0]), Elem::Vector(vec![0, 2])],
            chi: [
                Character::generator_values(vec![Scalar::q(), Scalar::one()]),
                Character::generator_values(vec![Scalar::one(), Scalar::q()]),
            ],
        };
        let report = serre_primitive_check(&data, 1, 4).unwrap();
        assert!(report.pass(), "{report}");
    }

    #[test]
    fn serre_primitivity_sl3_type() {
        // the sl₃ datum restricted to x₁ = E₁, x₂ = E₂ with r = 2
        let fl = sl3();
        let data = SerreData {
            group: fl.esc.group.clone(),
            g: [fl.g(0).clone(), fl.g(1).clone()],
            chi: [fl.esc.items[0].chi.clone(), fl.esc.items[1].chi.clone()],
        };
        let report = serre_primitive_check(&data, 2, 4).unwrap();
        assert!(report.pass(), "{report}");
    }

    #[test]
    fn serre_negative_control() {
        // tweak χ₂ so the compatibility fails: the element is no longer
        // primitive
        let fl = sl3();
        let bad_chi2 = Character::generator_values(vec![Scalar::q().pow(3), Scalar::q().pow(-2)]);
        let data = SerreData {
            group: fl.esc.group.clone(),
            g: [fl.g(0).clone(), fl.g(1).clone()],
            chi: [fl.esc.items[0].chi.clone(), bad_chi2],
        };
        let report = serre_primitive_check(&data, 2, 4).unwrap();
        assert!(!report.pass());
        let prim_line = report
            .checks
            .iter()
            .find(|c| c.name.contains("primitive"))
            .unwrap();
        assert!(!prim_line.pass, "negative control must be non-primitive");
    }

    #[test]
    fn skew_pair_case() {
        let fl = sl3();
        let data = SerreData {
            group: fl.esc.group.clone(),
            g: [fl.g(0).clone(), fl.g(1).clone()],
            chi: [
                fl.esc.items[0].chi.clone(),
                fl.esc.items[3].chi.clone(), // χ_{σ(2)} has inverse values on ξ₁
            ],
        };
        // √χ₁(g₂)·√χ₂(g₁): χ₁(g₂) = q², χ_{σ(2)}(g₁) = q⁻² → product 1
        let report = skew_pair_primitive_check(&data).unwrap();
        assert!(report.pass(), "{report}");
    }
}
