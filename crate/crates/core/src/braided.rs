//! Pointed Yetter–Drinfeld modules V(G, g_i, χ_i) with diagonal braiding
//! c(x_i ⊗ x_j) = χ_j(g_i)·x_j ⊗ x_i, and the braided algebras built on
//! them: the quantum tensor algebra (free), the quantum symmetric algebra
//! (commutation relations x_i x_j = χ_j(g_i) x_j x_i) and the quantum
//! linear space (additionally x_l^{N_l} = 0). Comultiplication is the
//! quantum shuffle, computed by induction on word length. The Radford
//! biproduct R # kG realizes the bosonization.
//!
//! The module stores exactly the characters it is given; diagrams of
//! quiver Hopf algebras act through inverted characters, so callers choose
//! the convention at construction time.

use std::collections::BTreeMap;
use std::fmt;

use crate::bimodule::ArrowBimodule;
use crate::error::{Error, Result};
use crate::group::{Character, Elem, Group};
use crate::scalar::Scalar;
use crate::structure::{Esc, EscItem};

/// A pointed YD module presented by basis lines: line i carries the
/// coaction element g_i (central) and the action character χ_i, so
/// h·x_i = χ_i(h)·x_i and δ⁻(x_i) = g_i ⊗ x_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YdModule {
    pub group: Group,
    pub lines: Vec<(Elem, Character)>,
}

impl YdModule {
    pub fn from_esc(esc: &Esc) -> YdModule {
        YdModule {
            group: esc.group.clone(),
            lines: esc
                .items
                .iter()
                .map(|it| (it.g.clone(), it.chi.clone()))
                .collect(),
        }
    }

    /// The same module with all characters inverted (the diagram-side
    /// convention).
    pub fn inverted(&self) -> YdModule {
        YdModule {
            group: self.group.clone(),
            lines: self
                .lines
                .iter()
                .map(|(g, chi)| (g.clone(), chi.inverse()))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// χ_i(h).
    pub fn action(&self, h: &Elem, i: usize) -> Scalar {
        self.lines[i].1.eval(h)
    }

    /// The braiding scalar of one crossing: c(x_i ⊗ x_j) = q·x_j ⊗ x_i
    /// with q = χ_j(g_i).
    pub fn braid_scalar(&self, i: usize, j: usize) -> Scalar {
        self.action(&self.lines[i].0, j)
    }

    /// The group element of a word, ∏ g_{letters}.
    pub fn word_group_element(&self, word: &[usize]) -> Elem {
        let mut acc = self.group.identity();
        for &l in word {
            acc = self.group.mul(&acc, &self.lines[l].0);
        }
        acc
    }

    /// The action of h on a word, ∏ χ_letters(h).
    pub fn word_action(&self, h: &Elem, word: &[usize]) -> Scalar {
        let mut acc = Scalar::one();
        for &l in word {
            acc = acc.mul(&self.action(h, l));
        }
        acc
    }

    /// N_i = ord(χ_i(g_i)) with q_i = 1 or non-roots of unity giving ∞.
    pub fn nilpotency_order(&self, i: usize) -> Option<u64> {
        let q = self.action(&self.lines[i].0, i);
        match q.root_of_unity_order() {
            Some(1) | None => None,
            Some(n) => Some(n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Flavor {
    /// The free quantum tensor algebra 𝒯.
    #[serde(rename = "tensor")]
    Tensor,
    /// The quantum symmetric algebra 𝒮.
    #[serde(rename = "symmetric")]
    Symmetric,
    /// The quantum linear space ℛ (nilpotent generators).
    #[serde(rename = "linear")]
    Linear,
}

/// One of the three braided algebras on a pointed YD module. Words are
/// letter-index sequences; the symmetric and linear flavors keep words
/// sorted via x_i x_j = χ_j(g_i)·x_j x_i.
#[derive(Debug, Clone)]
pub struct BraidedAlgebra {
    pub module: YdModule,
    pub flavor: Flavor,
}

/// A linear combination of (normal form) words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BraidedElement {
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl BraidedElement {
    pub fn zero() -> BraidedElement {
        BraidedElement::default()
    }

    pub fn one() -> BraidedElement {
        BraidedElement::from_term(vec![], Scalar::one())
    }

    pub fn generator(i: usize) -> BraidedElement {
        BraidedElement::from_term(vec![i], Scalar::one())
    }

    pub fn from_term(word: Vec<usize>, c: Scalar) -> BraidedElement {
        let mut e = BraidedElement::zero();
        e.add_term(word, c);
        e
    }

    pub fn add_term(&mut self, word: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let cur = self.terms.remove(&word).unwrap_or_else(Scalar::zero);
        let s = cur.add(&c);
        if !s.is_zero() {
            self.terms.insert(word, s);
        }
    }

    pub fn add(&self, other: &BraidedElement) -> BraidedElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> BraidedElement {
        if c.is_zero() {
            return BraidedElement::zero();
        }
        BraidedElement {
            terms: self
                .terms
                .iter()
                .map(|(w, s)| (w.clone(), s.mul(c)))
                .collect(),
        }
    }

    pub fn neg(&self) -> BraidedElement {
        self.scale(&Scalar::int(-1))
    }

    pub fn sub(&self, other: &BraidedElement) -> BraidedElement {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[usize]) -> Scalar {
        self.terms.get(word).cloned().unwrap_or_else(Scalar::zero)
    }
}

impl fmt::Display for BraidedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter()
                    .map(|l| format!("x{}", l + 1))
                    .collect::<Vec<_>>()
                    .join("·")
            };
            if c.is_one() {
                write!(f, "{word}")?;
            } else {
                write!(f, "({c})·{word}")?;
            }
        }
        Ok(())
    }
}

/// A sum of two-fold tensors of words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BraidedSquare {
    terms: BTreeMap<(Vec<usize>, Vec<usize>), Scalar>,
}

impl BraidedSquare {
    pub fn zero() -> BraidedSquare {
        BraidedSquare::default()
    }

    pub fn add_term(&mut self, l: Vec<usize>, r: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (l, r);
        let cur = self.terms.remove(&key).unwrap_or_else(Scalar::zero);
        let s = cur.add(&c);
        if !s.is_zero() {
            self.terms.insert(key, s);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<usize>, Vec<usize>), &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, other: &BraidedSquare) -> BraidedSquare {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.neg());
        }
        out
    }
}

impl BraidedAlgebra {
    pub fn new(module: YdModule, flavor: Flavor) -> Result<BraidedAlgebra> {
        if flavor != Flavor::Tensor {
            // the commutation relations are only consistent when
            // χ_i(g_j)·χ_j(g_i) = 1 for i ≠ j
            for i in 0..module.len() {
                for j in 0..module.len() {
                    if i != j {
                        let prod = module
                            .action(&module.lines[j].0, i)
                            .mul(&module.action(&module.lines[i].0, j));
                        if !prod.is_one() {
                            return Err(Error::Precondition(
                                "symmetric/linear flavors need a quantum weakly commutative module"
                                    .into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(BraidedAlgebra { module, flavor })
    }

    pub fn tensor(module: YdModule) -> BraidedAlgebra {
        BraidedAlgebra {
            module,
            flavor: Flavor::Tensor,
        }
    }

    /// Rewrites a scalar multiple of a word into normal form: sorted for
    /// the symmetric and linear flavors, with nilpotent powers collapsing
    /// to zero in the linear flavor.
    pub fn normal_form(&self, word: &[usize], coeff: Scalar) -> BraidedElement {
        match self.flavor {
            Flavor::Tensor => BraidedElement::from_term(word.to_vec(), coeff),
            Flavor::Symmetric | Flavor::Linear => {
                let mut w = word.to_vec();
                let mut c = coeff;
                // bubble sort, collecting one braiding scalar per swap:
                // x_a x_b (a > b) = χ_b(g_a)·x_b x_a
                loop {
                    let mut swapped = false;
                    for k in 0..w.len().saturating_sub(1) {
                        if w[k] > w[k + 1] {
                            c = c.mul(&self.module.braid_scalar(w[k], w[k + 1]));
                            w.swap(k, k + 1);
                            swapped = true;
                        }
                    }
                    if !swapped {
                        break;
                    }
                }
                if self.flavor == Flavor::Linear {
                    let mut run = 1usize;
                    for k in 0..w.len() {
                        if k > 0 && w[k] == w[k - 1] {
                            run += 1;
                        } else {
                            run = 1;
                        }
                        if let Some(n) = self.module.nilpotency_order(w[k]) {
                            if run as u64 >= n {
                                return BraidedElement::zero();
                            }
                        }
                    }
                }
                BraidedElement::from_term(w, c)
            }
        }
    }

    pub fn reduce(&self, x: &BraidedElement) -> BraidedElement {
        let mut out = BraidedElement::zero();
        for (w, c) in x.terms() {
            out = out.add(&self.normal_form(w, c.clone()));
        }
        out
    }

    pub fn multiply(&self, a: &BraidedElement, b: &BraidedElement) -> BraidedElement {
        let mut out = BraidedElement::zero();
        for (u, c1) in a.terms() {
            for (v, c2) in b.terms() {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out = out.add(&self.normal_form(&w, c1.mul(c2)));
            }
        }
        out
    }

    /// The braiding c(u ⊗ v) = χ_v(g_u)·(v ⊗ u) on words.
    pub fn braiding(&self, u: &[usize], v: &[usize]) -> (Scalar, Vec<usize>, Vec<usize>) {
        let g_u = self.module.word_group_element(u);
        let scalar = self.module.word_action(&g_u, v);
        (scalar, v.to_vec(), u.to_vec())
    }

    /// Product on R ⊗ R with the braided middle exchange:
    /// (a⊗b)(c⊗d) = χ_c(g_b)·(ac ⊗ bd).
    pub fn square_multiply(&self, x: &BraidedSquare, y: &BraidedSquare) -> BraidedSquare {
        let mut out = BraidedSquare::zero();
        for ((a, b), c1) in x.terms() {
            for ((c, d), c2) in y.terms() {
                let g_b = self.module.word_group_element(b);
                let cross = self.module.word_action(&g_b, c);
                let left = self.multiply(
                    &BraidedElement::from_term(a.clone(), Scalar::one()),
                    &BraidedElement::from_term(c.clone(), Scalar::one()),
                );
                let right = self.multiply(
                    &BraidedElement::from_term(b.clone(), Scalar::one()),
                    &BraidedElement::from_term(d.clone(), Scalar::one()),
                );
                let coeff = c1.mul(c2).mul(&cross);
                for (lw, lc) in left.terms() {
                    for (rw, rc) in right.terms() {
                        out.add_term(lw.clone(), rw.clone(), coeff.mul(lc).mul(rc));
                    }
                }
            }
        }
        out
    }

    /// The quantum-shuffle comultiplication: Δ(x_i) = x_i⊗1 + 1⊗x_i
    /// extended as a braided algebra map, with both legs reduced to the
    /// flavor's normal form.
    pub fn comultiply_word(&self, word: &[usize], cutoff: usize) -> Result<BraidedSquare> {
        if word.len() > cutoff {
            return Err(Error::BoundExceeded(format!(
                "braided comultiplication degree {} exceeds cutoff {cutoff}",
                word.len()
            )));
        }
        let mut acc = BraidedSquare::zero();
        acc.add_term(vec![], vec![], Scalar::one());
        for &l in word {
            let mut factor = BraidedSquare::zero();
            factor.add_term(vec![l], vec![], Scalar::one());
            factor.add_term(vec![], vec![l], Scalar::one());
            acc = self.square_multiply(&acc, &factor);
        }
        Ok(acc)
    }

    pub fn comultiply(&self, x: &BraidedElement, cutoff: usize) -> Result<BraidedSquare> {
        let mut out = BraidedSquare::zero();
        for (w, c) in x.terms() {
            for ((l, r), s) in self.comultiply_word(w, cutoff)?.terms() {
                out.add_term(l.clone(), r.clone(), c.mul(s));
            }
        }
        Ok(out)
    }

    /// Δ(x) − x⊗1 − 1⊗x.
    pub fn primitive_defect(&self, x: &BraidedElement, cutoff: usize) -> Result<BraidedSquare> {
        let mut defect = self.comultiply(x, cutoff)?;
        for (w, c) in x.terms() {
            defect.add_term(w.clone(), vec![], c.neg());
            defect.add_term(vec![], w.clone(), c.neg());
        }
        Ok(defect)
    }

    /// Normal-form monomial basis of the degree-d slice.
    pub fn slice_basis(&self, degree: usize) -> Vec<Vec<usize>> {
        let n = self.module.len();
        let mut level: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..degree {
            let mut next = Vec::new();
            for w in &level {
                for l in 0..n {
                    match self.flavor {
                        Flavor::Tensor => {
                            let mut v = w.clone();
                            v.push(l);
                            next.push(v);
                        }
                        Flavor::Symmetric | Flavor::Linear => {
                            // nondecreasing words only
                            if w.last().is_some_and(|&last| l < last) {
                                continue;
                            }
                            let mut v = w.clone();
                            v.push(l);
                            if self.flavor == Flavor::Linear {
                                let run = v.iter().rev().take_while(|&&x| x == l).count();
                                if let Some(nl) = self.module.nilpotency_order(l) {
                                    if run as u64 >= nl {
                                        continue;
                                    }
                                }
                            }
                            next.push(v);
                        }
                    }
                }
            }
            level = next;
        }
        level
    }

    /// A basis of the primitive elements in the degree-d slice, found by
    /// solving the exact linear system Δ(x) = x⊗1 + 1⊗x.
    pub fn primitives_in_degree(&self, degree: usize, cutoff: usize) -> Result<Vec<BraidedElement>> {
        let basis = self.slice_basis(degree);
        if basis.is_empty() {
            return Ok(Vec::new());
        }
        // columns of the linear system: the middle tensor keys
        let mut columns: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
        let mut defects = Vec::with_capacity(basis.len());
        for b in &basis {
            let d = self
                .primitive_defect(&BraidedElement::from_term(b.clone(), Scalar::one()), cutoff)?;
            for (key, _) in d.terms() {
                let next = columns.len();
                columns.entry(key.clone()).or_insert(next);
            }
            defects.push(d);
        }
        let kernel = if columns.is_empty() {
            // no constraints: the whole slice is primitive
            (0..basis.len())
                .map(|i| {
                    let mut v = vec![Scalar::zero(); basis.len()];
                    v[i] = Scalar::one();
                    v
                })
                .collect()
        } else {
            let mut matrix = vec![vec![Scalar::zero(); basis.len()]; columns.len()];
            for (bi, d) in defects.iter().enumerate() {
                for (key, c) in d.terms() {
                    matrix[columns[key]][bi] = c.clone();
                }
            }
            crate::linalg::nullspace(&matrix)
        };
        Ok(kernel
            .into_iter()
            .map(|coeffs| {
                let mut e = BraidedElement::zero();
                for (b, c) in basis.iter().zip(coeffs) {
                    e.add_term(b.clone(), c);
                }
                e
            })
            .collect())
    }
}

// ---------------------------------------------------------------------------
// Bosonization R # kG
// ---------------------------------------------------------------------------

/// An element of the biproduct R # kG.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiproductElement {
    terms: BTreeMap<(Vec<usize>, Elem), Scalar>,
}

impl BiproductElement {
    pub fn zero() -> BiproductElement {
        BiproductElement::default()
    }

    pub fn from_term(word: Vec<usize>, g: Elem, c: Scalar) -> BiproductElement {
        let mut e = BiproductElement::zero();
        e.add_term(word, g, c);
        e
    }

    pub fn add_term(&mut self, word: Vec<usize>, g: Elem, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (word, g);
        let cur = self.terms.remove(&key).unwrap_or_else(Scalar::zero);
        let s = cur.add(&c);
        if !s.is_zero() {
            self.terms.insert(key, s);
        }
    }

    pub fn add(&self, other: &BiproductElement) -> BiproductElement {
        let mut out = self.clone();
        for ((w, g), c) in &other.terms {
            out.add_term(w.clone(), g.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> BiproductElement {
        if c.is_zero() {
            return BiproductElement::zero();
        }
        BiproductElement {
            terms: self
                .terms
                .iter()
                .map(|(k, s)| (k.clone(), s.mul(c)))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<usize>, Elem), &Scalar)> {
        self.terms.iter()
    }
}

/// The biproduct algebra/coalgebra on R # kG: multiplication
/// (r#b)(r'#b') = r·(b▷r') # bb' and comultiplication
/// Δ(r#b) = Σ (r⁽¹⁾ # g_{r⁽²⁾}·b) ⊗ (r⁽²⁾ # b).
pub struct Biproduct {
    pub algebra: BraidedAlgebra,
}

impl Biproduct {
    pub fn new(algebra: BraidedAlgebra) -> Biproduct {
        Biproduct { algebra }
    }

    pub fn multiply(&self, x: &BiproductElement, y: &BiproductElement) -> BiproductElement {
        let group = &self.algebra.module.group;
        let mut out = BiproductElement::zero();
        for ((r, b), c1) in x.terms() {
            for ((r2, b2), c2) in y.terms() {
                // b ▷ r2 = ∏ χ_letters(b) · r2
                let act = self.algebra.module.word_action(b, r2);
                let prod = self.algebra.multiply(
                    &BraidedElement::from_term(r.clone(), Scalar::one()),
                    &BraidedElement::from_term(r2.clone(), Scalar::one()),
                );
                let coeff = c1.mul(c2).mul(&act);
                for (w, wc) in prod.terms() {
                    out.add_term(w.clone(), group.mul(b, b2), coeff.mul(wc));
                }
            }
        }
        out
    }

    pub fn comultiply(
        &self,
        x: &BiproductElement,
        cutoff: usize,
    ) -> Result<BTreeMap<((Vec<usize>, Elem), (Vec<usize>, Elem)), Scalar>> {
        let group = &self.algebra.module.group;
        let mut out: BTreeMap<((Vec<usize>, Elem), (Vec<usize>, Elem)), Scalar> = BTreeMap::new();
        for ((r, b), c) in x.terms() {
            for ((r1, r2), s) in self.algebra.comultiply_word(r, cutoff)?.terms() {
                let g_r2 = self.algebra.module.word_group_element(r2);
                let key = (
                    (r1.clone(), group.mul(&g_r2, b)),
                    (r2.clone(), b.clone()),
                );
                let cur = out.remove(&key).unwrap_or_else(Scalar::zero);
                let total = cur.add(&c.mul(s));
                if !total.is_zero() {
                    out.insert(key, total);
                } else {
                    out.remove(&key);
                }
            }
        }
        Ok(out)
    }
}

/// The adjoint YD structure on the arrows based at 1: g▷a = g·a·g⁻¹ with
/// the arrow coaction. Asserts the action is diagonal with χ_j(g⁻¹) and
/// returns the matching pointed module (inverted characters).
pub fn adjoint_arrow_module(esc: &Esc) -> Result<YdModule> {
    let bm = ArrowBimodule::from_esc(esc);
    let group = esc.group.clone();
    let probes: Vec<Elem> = if group.is_free_abelian() {
        let rank = group.rank().unwrap();
        (0..rank)
            .map(|j| {
                let mut v = vec![0i64; rank];
                v[j] = 1;
                Elem::Vector(v)
            })
            .collect()
    } else {
        group.elements()
    };
    for (j, item) in esc.items.iter().enumerate() {
        let e = bm.e_arrow(j);
        for h in &probes {
            let (s, moved) = bm.right_action(&e, &group.inv(h));
            let back = bm.left_action(h, &moved);
            if back != e {
                return Err(Error::Verification(
                    "adjoint action is not diagonal on the arrow basis".into(),
                ));
            }
            let expected = item.chi.eval(&group.inv(h));
            if s != expected {
                return Err(Error::Verification(format!(
                    "adjoint action scalar differs from χ(h⁻¹) at index {j}"
                )));
            }
        }
        // coaction: δ⁻(E_j) = t(E_j) ⊗ E_j = g_j ⊗ E_j
        if e.target != item.g {
            return Err(Error::Verification("arrow coaction mismatch".into()));
        }
    }
    Ok(YdModule::from_esc(esc).inverted())
}

/// Reads off an ESC from diagonal action/coaction tables: line i comes
/// with its coaction element and action values on the invariant-factor
/// generators. Rejects non-central coactions and non-character actions.
pub fn pointed_yd_decompose(
    group: &Group,
    lines: Vec<(Elem, Vec<Scalar>)>,
) -> Result<Esc> {
    let factors = group
        .abelian_factors()
        .ok_or_else(|| Error::Unsupported("decomposition needs a finite abelian group".into()))?
        .to_vec();
    let n = factors.iter().fold(1u64, |a, &b| num_integer::lcm(a, b));
    let mut items = Vec::new();
    for (g, values) in lines {
        if !group.is_central(&g) {
            return Err(Error::Precondition(format!(
                "coaction element {g} is not central"
            )));
        }
        if values.len() != factors.len() {
            return Err(Error::Config("one action value per generator".into()));
        }
        let mut exps = Vec::new();
        for (&f, v) in factors.iter().zip(&values) {
            // the value on a generator of order f must be an f-th root of
            // unity ζ_n^{t·(n/f)}; otherwise the module is not pointed
            let mut t = 0u64;
            let mut p = Scalar::one();
            let step = Scalar::zeta(n).pow((n / f) as i64);
            loop {
                if p == *v {
                    break;
                }
                p = p.mul(&step);
                t += 1;
                if t >= f {
                    return Err(Error::Precondition(
                        "action values do not define a character (module not pointed)".into(),
                    ));
                }
            }
            exps.push(t);
        }
        items.push(EscItem {
            g: group.normalize(&g),
            chi: Character::exponents(factors.clone(), exps),
        });
    }
    Esc::new(group.clone(), items)
}
