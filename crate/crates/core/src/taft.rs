//! Multiple Taft algebras kG[kQ_1^c, G, g_i, χ_i; i ∈ J]: the subalgebra
//! of the co-path Hopf algebra generated by the vertices and the loops
//! E_j = a^{(j)}_{g_j,1}, presented through PBW normal forms
//! g·E_{ν_1}^{m_1}⋯E_{ν_t}^{m_t} with ν_1 ≺ ν_2 ≺ … and 0 ≤ m_ν < N_ν.
//!
//! The rewriting rules are monomial: group elements merge and move left
//! through E_j·h = χ_j(h)·h·E_j, out-of-order generator pairs swap through
//! E_i·E_j = χ_j(g_i⁻¹)·E_j·E_i (i ≻ j), and E_j^{N_j} = 0 for finite N_j.
//! Normal forms are independent of the application order; the seeded
//! random strategy exists to test exactly that.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bimodule::ArrowBimodule;
use crate::braided::{BraidedAlgebra, Flavor, YdModule};
use crate::copath::{self, PathElement};
use crate::error::{Error, Result};
use crate::group::Elem;
use crate::scalar::Scalar;
use crate::structure::{quantum_commutativity, Esc, QuantumCommutativity};

/// A letter of an unreduced word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Letter {
    Group(Elem),
    Gen(usize),
}

/// A PBW basis monomial g·E₁^{m_1}⋯E_t^{m_t} (exponents indexed by J in
/// the ESC order, which is the total order ≺).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial {
    pub g: Elem,
    pub exps: Vec<u32>,
}

impl PbwMonomial {
    pub fn unit(g: Elem, arity: usize) -> PbwMonomial {
        PbwMonomial {
            g,
            exps: vec![0; arity],
        }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![self.g.render()];
        for (j, &m) in self.exps.iter().enumerate() {
            if m == 1 {
                parts.push(format!("E{}", j + 1));
            } else if m > 1 {
                parts.push(format!("E{}^{}", j + 1, m));
            }
        }
        write!(f, "{}", parts.join("·"))
    }
}

/// A linear combination of PBW monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TaftElement {
    terms: BTreeMap<PbwMonomial, Scalar>,
}

impl TaftElement {
    pub fn zero() -> TaftElement {
        TaftElement::default()
    }

    pub fn from_term(m: PbwMonomial, c: Scalar) -> TaftElement {
        let mut e = TaftElement::zero();
        e.add_term(m, c);
        e
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let cur = self.terms.remove(&m).unwrap_or_else(Scalar::zero);
        let s = cur.add(&c);
        if !s.is_zero() {
            self.terms.insert(m, s);
        }
    }

    pub fn add(&self, other: &TaftElement) -> TaftElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> TaftElement {
        if c.is_zero() {
            return TaftElement::zero();
        }
        TaftElement {
            terms: self
                .terms
                .iter()
                .map(|(m, s)| (m.clone(), s.mul(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &TaftElement) -> TaftElement {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Scalar)> {
        self.terms.iter()
    }
}

impl fmt::Display for TaftElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})·{m}")?;
            }
        }
        Ok(())
    }
}

/// The dimension |G|·N₁⋯N_t, infinite as soon as the group or one N_j is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Dimension {
    #[serde(rename = "finite")]
    Finite(u64),
    #[serde(rename = "infinite")]
    Infinite,
}

/// A multiple Taft algebra over a quantum weakly commutative ESC.
#[derive(Debug, Clone)]
pub struct TaftAlgebra {
    pub esc: Esc,
    pub bimodule: ArrowBimodule,
    orders: Vec<Option<u64>>,
}

impl TaftAlgebra {
    pub fn new(esc: Esc) -> Result<TaftAlgebra> {
        if quantum_commutativity(&esc) == QuantumCommutativity::Neither {
            return Err(Error::Precondition(
                "the PBW normal form needs a quantum weakly commutative ESC".into(),
            ));
        }
        let bimodule = ArrowBimodule::from_esc(&esc);
        let orders = (0..esc.len()).map(|i| esc.n_i(i)).collect();
        Ok(TaftAlgebra {
            esc,
            bimodule,
            orders,
        })
    }

    pub fn arity(&self) -> usize {
        self.esc.len()
    }

    /// N_j (None = ∞).
    pub fn order(&self, j: usize) -> Option<u64> {
        self.orders[j]
    }

    /// dim = |G|·∏N_j.
    pub fn dimension(&self) -> Dimension {
        let Some(g) = self.esc.group.order() else {
            return Dimension::Infinite;
        };
        let mut total = g;
        for o in &self.orders {
            match o {
                None => return Dimension::Infinite,
                Some(n) => total *= n,
            }
        }
        Dimension::Finite(total)
    }

    /// All PBW monomials of a finite-dimensional algebra, in lexicographic
    /// order. Errors above the bound.
    pub fn enumerate_basis(&self, bound: u64) -> Result<Vec<PbwMonomial>> {
        let Dimension::Finite(dim) = self.dimension() else {
            return Err(Error::Unsupported(
                "cannot enumerate an infinite-dimensional basis".into(),
            ));
        };
        if dim > bound {
            return Err(Error::BoundExceeded(format!(
                "basis of size {dim} exceeds bound {bound}"
            )));
        }
        let mut out = Vec::with_capacity(dim as usize);
        for g in self.esc.group.elements() {
            let mut exp_sets: Vec<Vec<u32>> = vec![vec![]];
            for o in &self.orders {
                let n = o.unwrap() as u32;
                let mut next = Vec::new();
                for e in &exp_sets {
                    for m in 0..n {
                        let mut v = e.clone();
                        v.push(m);
                        next.push(v);
                    }
                }
                exp_sets = next;
            }
            for exps in exp_sets {
                out.push(PbwMonomial { g: g.clone(), exps });
            }
        }
        Ok(out)
    }

    /// Monomials of the diagram (g = 1) with total degree ≤ cutoff.
    pub fn diagram_basis(&self, cutoff: u32) -> Vec<PbwMonomial> {
        let id = self.esc.group.identity();
        let mut out = Vec::new();
        let mut exp_sets: Vec<Vec<u32>> = vec![vec![]];
        for o in &self.orders {
            let max = match o {
                Some(n) => (*n as u32 - 1).min(cutoff),
                None => cutoff,
            };
            let mut next = Vec::new();
            for e in &exp_sets {
                let used: u32 = e.iter().sum();
                for m in 0..=max.min(cutoff - used) {
                    let mut v = e.clone();
                    v.push(m);
                    next.push(v);
                }
            }
            exp_sets = next;
        }
        for exps in exp_sets {
            out.push(PbwMonomial {
                g: id.clone(),
                exps,
            });
        }
        out.sort();
        out
    }

    fn letters(&self, m: &PbwMonomial) -> Vec<Letter> {
        let mut out = vec![Letter::Group(m.g.clone())];
        for (j, &e) in m.exps.iter().enumerate() {
            for _ in 0..e {
                out.push(Letter::Gen(j));
            }
        }
        out
    }

    /// Reduces a word to its normal form with the deterministic
    /// leftmost-rule strategy.
    pub fn normal_form(&self, word: &[Letter]) -> TaftElement {
        self.reduce(word, None)
    }

    /// Reduces a word applying the rewrite rules in a seeded random order;
    /// the result must agree with [`TaftAlgebra::normal_form`].
    pub fn normal_form_seeded(&self, word: &[Letter], seed: u64) -> TaftElement {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.reduce(word, Some(&mut rng))
    }

    fn reduce(&self, word: &[Letter], mut rng: Option<&mut ChaCha8Rng>) -> TaftElement {
        let group = self.esc.group.clone();
        let mut letters: Vec<Letter> = word.to_vec();
        let mut coeff = Scalar::one();
        loop {
            // collect applicable rule sites
            let mut sites: Vec<usize> = Vec::new();
            for k in 0..letters.len().saturating_sub(1) {
                match (&letters[k], &letters[k + 1]) {
                    (Letter::Group(_), Letter::Group(_)) => sites.push(k),
                    (Letter::Gen(_), Letter::Group(_)) => sites.push(k),
                    (Letter::Gen(i), Letter::Gen(j)) if i > j => sites.push(k),
                    _ => {}
                }
            }
            // nilpotency: any run of N_j consecutive Gen(j)
            let mut run_len = 0usize;
            let mut run_gen = usize::MAX;
            for l in &letters {
                match l {
                    Letter::Gen(j) => {
                        if *j == run_gen {
                            run_len += 1;
                        } else {
                            run_gen = *j;
                            run_len = 1;
                        }
                        if let Some(n) = self.orders[*j] {
                            if run_len as u64 >= n {
                                return TaftElement::zero();
                            }
                        }
                    }
                    Letter::Group(_) => {
                        run_gen = usize::MAX;
                        run_len = 0;
                    }
                }
            }
            if sites.is_empty() {
                break;
            }
            let site = match rng.as_deref_mut() {
                Some(r) => sites[r.random_range(0..sites.len())],
                None => sites[0],
            };
            match (letters[site].clone(), letters[site + 1].clone()) {
                (Letter::Group(a), Letter::Group(b)) => {
                    letters[site] = Letter::Group(group.mul(&a, &b));
                    letters.remove(site + 1);
                }
                (Letter::Gen(j), Letter::Group(h)) => {
                    // E_j·h = χ_j(h)·h·E_j
                    coeff = coeff.mul(&self.esc.items[j].chi.eval(&h));
                    letters[site] = Letter::Group(h);
                    letters[site + 1] = Letter::Gen(j);
                }
                (Letter::Gen(i), Letter::Gen(j)) => {
                    // E_i·E_j = χ_j(g_i⁻¹)·E_j·E_i for i ≻ j
                    let gi_inv = group.inv(&self.esc.items[i].g);
                    coeff = coeff.mul(&self.esc.items[j].chi.eval(&gi_inv));
                    letters[site] = Letter::Gen(j);
                    letters[site + 1] = Letter::Gen(i);
                }
                _ => unreachable!(),
            }
        }
        // assemble the monomial
        let mut g = group.identity();
        let mut exps = vec![0u32; self.arity()];
        let mut seen_gen = false;
        for l in letters {
            match l {
                Letter::Group(h) => {
                    debug_assert!(!seen_gen, "group letters must all be leftmost");
                    g = group.mul(&g, &h);
                }
                Letter::Gen(j) => {
                    seen_gen = true;
                    exps[j] += 1;
                }
            }
        }
        TaftElement::from_term(PbwMonomial { g, exps }, coeff)
    }

    pub fn multiply(&self, a: &TaftElement, b: &TaftElement) -> TaftElement {
        let mut out = TaftElement::zero();
        for (m1, c1) in a.terms() {
            for (m2, c2) in b.terms() {
                let mut word = self.letters(m1);
                word.extend(self.letters(m2));
                out = out.add(&self.normal_form(&word).scale(&c1.mul(c2)));
            }
        }
        out
    }

    /// Realizes a PBW monomial inside the co-path Hopf algebra by actually
    /// multiplying the vertex and the loop arrows there.
    pub fn to_copath(&self, m: &PbwMonomial) -> Result<PathElement> {
        let cutoff = m.degree() as usize + 1;
        let mut acc = PathElement::vertex(m.g.clone());
        for (j, &e) in m.exps.iter().enumerate() {
            let arrow = PathElement::from_path(crate::quiver::Path::from_arrows(vec![
                self.bimodule.e_arrow(j),
            ]));
            for _ in 0..e {
                acc = copath::multiply(&self.bimodule, &acc, &arrow, cutoff.max(4))?;
            }
        }
        Ok(acc)
    }

    pub fn element_to_copath(&self, x: &TaftElement) -> Result<PathElement> {
        let mut acc = PathElement::zero();
        for (m, c) in x.terms() {
            acc = acc.add(&self.to_copath(m)?.scale(c));
        }
        Ok(acc)
    }

    /// The diagram's braided algebra ℛ(G, g_i, χ_i⁻¹).
    pub fn diagram_algebra(&self) -> Result<BraidedAlgebra> {
        BraidedAlgebra::new(YdModule::from_esc(&self.esc).inverted(), Flavor::Linear)
    }
}

/// One line of a verification report.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Report {
    pub checks: Vec<CheckLine>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn push(&mut self, name: &str, result: std::result::Result<(), String>) {
        match result {
            Ok(()) => self.checks.push(CheckLine {
                name: name.into(),
                pass: true,
                witness: None,
            }),
            Err(w) => self.checks.push(CheckLine {
                name: name.into(),
                pass: false,
                witness: Some(w),
            }),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
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
        Ok(())
    }
}

/// Checks that the primitives of the diagram live exactly in degree one,
/// through the given degree.
pub fn nichols_check(esc: &Esc, cutoff: u32) -> Result<Report> {
    let taft = TaftAlgebra::new(esc.clone())?;
    let alg = taft.diagram_algebra()?;
    let mut report = Report { checks: vec![] };
    let c = cutoff as usize;
    // degree 0: the unit is group-like, never primitive
    let deg0 = alg.primitives_in_degree(0, c + 1)?;
    report.push(
        "no primitives in degree 0",
        if deg0.is_empty() {
            Ok(())
        } else {
            Err("the unit appeared primitive".into())
        },
    );
    let expected1 = alg.slice_basis(1).len();
    let found1 = alg.primitives_in_degree(1, c + 1)?.len();
    report.push(
        "degree 1 is primitive",
        if found1 == expected1 {
            Ok(())
        } else {
            Err(format!("expected {expected1} primitives, found {found1}"))
        },
    );
    for d in 2..=c {
        let prim = alg.primitives_in_degree(d, c + 1)?;
        report.push(
            &format!("no primitives in degree {d}"),
            if prim.is_empty() {
                Ok(())
            } else {
                Err(format!("{}", prim[0]))
            },
        );
    }
    Ok(report)
}

/// Verifies the presentation conditions with X_j := E_j, computing inside
/// the co-path algebra: group-likeness of the vertices, skew-primitivity
/// of the generators, the commutation relations, and the linear
/// independence of the monomials {h·E^m} (so kG ∩ span{h·E_i} = 0).
pub fn presentation_check(esc: &Esc, basis_bound: u64) -> Result<Report> {
    let taft = TaftAlgebra::new(esc.clone())?;
    let bm = &taft.bimodule;
    let group = esc.group.clone();
    let mut report = Report { checks: vec![] };

    // (i)/(iii): vertices group-like, generators (1, g_j)-primitive
    let mut ok = Ok(());
    'outer: for g in group.elements() {
        let d = copath::comultiply(&crate::quiver::Path::vertex(g.clone()));
        for ((l, r), _) in d.terms() {
            if !(l.is_empty() && r.is_empty() && l.source == g && r.source == g) {
                ok = Err(format!("vertex {g} is not group-like"));
                break 'outer;
            }
        }
    }
    report.push("vertices are group-like", ok);

    let mut ok = Ok(());
    for j in 0..esc.len() {
        let e = bm.e_arrow(j);
        let p = crate::quiver::Path::from_arrows(vec![e.clone()]);
        let d = copath::comultiply(&p);
        // expect E⊗1 + g_j⊗E
        let mut expected = copath::PathTensor::zero();
        expected.add_term(
            p.clone(),
            crate::quiver::Path::vertex(group.identity()),
            Scalar::one(),
        );
        expected.add_term(
            crate::quiver::Path::vertex(esc.items[j].g.clone()),
            p.clone(),
            Scalar::one(),
        );
        if !d.sub(&expected).is_zero() {
            ok = Err(format!("Δ(E{}) is not skew-primitive", j + 1));
        }
    }
    report.push("generators are (1, g_j)-primitive", ok);

    // (iv): E_j·g = χ_j(g)·g·E_j in the co-path product
    let mut ok = Ok(());
    'outer4: for j in 0..esc.len() {
        let e = PathElement::from_path(crate::quiver::Path::from_arrows(vec![bm.e_arrow(j)]));
        for g in group.elements() {
            let vg = PathElement::vertex(g.clone());
            let lhs = copath::multiply(bm, &e, &vg, 4)?;
            let rhs = copath::multiply(bm, &vg, &e, 4)?.scale(&esc.items[j].chi.eval(&g));
            if lhs != rhs {
                ok = Err(format!("E{}·{} ≠ χ(g)·g·E{}", j + 1, g, j + 1));
                break 'outer4;
            }
        }
    }
    report.push("E_j·g = χ_j(g)·g·E_j", ok);

    // (v): E_j·E_i = χ_j(g_i)·E_i·E_j for i ≠ j
    let mut ok = Ok(());
    'outer5: for i in 0..esc.len() {
        for j in 0..esc.len() {
            if i == j {
                continue;
            }
            let ei = PathElement::from_path(crate::quiver::Path::from_arrows(vec![bm.e_arrow(i)]));
            let ej = PathElement::from_path(crate::quiver::Path::from_arrows(vec![bm.e_arrow(j)]));
            let lhs = copath::multiply(bm, &ej, &ei, 4)?;
            let rhs = copath::multiply(bm, &ei, &ej, 4)?.scale(&esc.q_ji(i, j));
            if lhs != rhs {
                ok = Err(format!("E{}E{} ≠ χ_{}(g_{})·E{}E{}", j + 1, i + 1, j + 1, i + 1, i + 1, j + 1));
                break 'outer5;
            }
        }
    }
    report.push("E_j·E_i = χ_j(g_i)·E_i·E_j (i ≠ j)", ok);

    // (ii)/(vi): PBW monomials realize as linearly independent elements of
    // the co-path algebra (finite case), in particular kG ∩ A₍₁₎ = 0.
    let ok = match taft.dimension() {
        Dimension::Finite(dim) if dim <= basis_bound => {
            let basis = taft.enumerate_basis(basis_bound)?;
            let realized: Result<Vec<PathElement>> =
                basis.iter().map(|m| taft.to_copath(m)).collect();
            let realized = realized?;
            // coordinates over the union of path supports
            let mut coords: BTreeMap<crate::quiver::Path, usize> = BTreeMap::new();
            for r in &realized {
                for (p, _) in r.terms() {
                    let next = coords.len();
                    coords.entry(p.clone()).or_insert(next);
                }
            }
            let vectors: Vec<Vec<Scalar>> = realized
                .iter()
                .map(|r| {
                    let mut v = vec![Scalar::zero(); coords.len()];
                    for (p, c) in r.terms() {
                        v[coords[p]] = c.clone();
                    }
                    v
                })
                .collect();
            if crate::linalg::independent(&vectors) {
                Ok(())
            } else {
                Err(format!("{} monomials are dependent in kQ^c", basis.len()))
            }
        }
        _ => {
            // infinite dimension: check degree ≤ 2 realizations instead
            let mut vecs = Vec::new();
            let mut coords: BTreeMap<crate::quiver::Path, usize> = BTreeMap::new();
            let add = |r: &PathElement, coords: &mut BTreeMap<crate::quiver::Path, usize>| {
                for (p, _) in r.terms() {
                    let next = coords.len();
                    coords.entry(p.clone()).or_insert(next);
                }
            };
            let mut elements = Vec::new();
            for g in group_sample(&group) {
                elements.push(taft.to_copath(&PbwMonomial::unit(g.clone(), esc.len()))?);
                for j in 0..esc.len() {
                    let mut exps = vec![0u32; esc.len()];
                    exps[j] = 1;
                    elements.push(taft.to_copath(&PbwMonomial { g: g.clone(), exps })?);
                }
            }
            for e in &elements {
                add(e, &mut coords);
            }
            for e in &elements {
                let mut v = vec![Scalar::zero(); coords.len()];
                for (p, c) in e.terms() {
                    v[coords[p]] = c.clone();
                }
                vecs.push(v);
            }
            if crate::linalg::independent(&vecs) {
                Ok(())
            } else {
                Err("degree ≤ 1 monomials are dependent in kQ^c".into())
            }
        }
    };
    report.push("PBW monomials are linearly independent", ok);
    Ok(report)
}

fn group_sample(group: &crate::group::Group) -> Vec<Elem> {
    if group.order().is_some() {
        group.elements()
    } else {
        let rank = group.rank().unwrap();
        (-1..=1i64)
            .map(|a| {
                let mut v = vec![0i64; rank];
                v[0] = a;
                Elem::Vector(v)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::group::{Character, Group};
    use crate::structure::EscItem;

    fn z4_taft() -> TaftAlgebra {
        TaftAlgebra::new(fixtures::taft_esc(4)).unwrap()
    }

    #[test]
    fn nilpotency_rule() {
        let t = z4_taft();
        // E^4 = 0, E^3 ≠ 0
        let word: Vec<Letter> = std::iter::repeat_n(Letter::Gen(0), 4).collect();
        assert!(t.normal_form(&word).is_zero());
        let word: Vec<Letter> = std::iter::repeat_n(Letter::Gen(0), 3).collect();
        assert!(!t.normal_form(&word).is_zero());
    }

    #[test]
    fn group_commutation_rule() {
        let t = z4_taft();
        let g = Elem::Vector(vec![1]);
        // E·g = χ(g)·g·E
        let nf = t.normal_form(&[Letter::Gen(0), Letter::Group(g.clone())]);
        let (m, c) = nf.terms().next().unwrap();
        assert_eq!(m.g, g);
        assert_eq!(m.exps, vec![1]);
        assert_eq!(*c, Scalar::zeta(4));
    }

    #[test]
    fn generator_swap_rule() {
        let t = TaftAlgebra::new(fixtures::qls_esc()).unwrap();
        // E2·E1 = χ_1(g_2⁻¹)·E1·E2
        let nf = t.normal_form(&[Letter::Gen(1), Letter::Gen(0)]);
        let (m, c) = nf.terms().next().unwrap();
        assert_eq!(m.exps, vec![1, 1]);
        let expected = t
            .esc
            .items[0]
            .chi
            .eval(&t.esc.group.inv(&t.esc.items[1].g));
        assert_eq!(*c, expected);
    }

    #[test]
    fn rejects_non_weakly_commutative() {
        let g4 = Group::abelian(vec![4]).unwrap();
        let esc = Esc::new(
            g4,
            vec![
                EscItem {
                    g: Elem::Vector(vec![1]),
                    chi: Character::exponents(vec![4], vec![1]),
                },
                EscItem {
                    g: Elem::Vector(vec![1]),
                    chi: Character::exponents(vec![4], vec![1]),
                },
            ],
        )
        .unwrap();
        assert!(matches!(
            TaftAlgebra::new(esc),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn lemma_commutation_fails_without_weak_commutativity() {
        // in the co-path algebra, E₁E₂ ≠ χ₂(g₁⁻¹)E₂E₁ when the ESC is not
        // weakly commutative
        let g4 = Group::abelian(vec![4]).unwrap();
        let esc = Esc::new(
            g4,
            vec![
                EscItem {
                    g: Elem::Vector(vec![1]),
                    chi: Character::exponents(vec![4], vec![1]),
                },
                EscItem {
                    g: Elem::Vector(vec![1]),
                    chi: Character::exponents(vec![4], vec![1]),
                },
            ],
        )
        .unwrap();
        let bm = ArrowBimodule::from_esc(&esc);
        let e1 = PathElement::from_path(crate::quiver::Path::from_arrows(vec![bm.e_arrow(0)]));
        let e2 = PathElement::from_path(crate::quiver::Path::from_arrows(vec![bm.e_arrow(1)]));
        let lhs = copath::multiply(&bm, &e1, &e2, 4).unwrap();
        let gi_inv = esc.group.inv(&esc.items[0].g);
        let rhs = copath::multiply(&bm, &e2, &e1, 4)
            .unwrap()
            .scale(&esc.items[1].chi.eval(&gi_inv));
        assert_ne!(lhs, rhs);
        // and the weakly commutative fixture satisfies it
        let esc = fixtures::qls_esc();
        let bm = ArrowBimodule::from_esc(&esc);
        let e1 = PathElement::from_path(crate::quiver::Path::from_arrows(vec![bm.e_arrow(0)]));
        let e2 = PathElement::from_path(crate::quiver::Path::from_arrows(vec![bm.e_arrow(1)]));
        let lhs = copath::multiply(&bm, &e1, &e2, 4).unwrap();
        let gi_inv = esc.group.inv(&esc.items[0].g);
        let rhs = copath::multiply(&bm, &e2, &e1, 4)
            .unwrap()
            .scale(&esc.items[1].chi.eval(&gi_inv));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dimension_formula() {
        for n in [2u64, 3, 4, 5] {
            let t = TaftAlgebra::new(fixtures::taft_esc(n)).unwrap();
            assert_eq!(t.dimension(), Dimension::Finite(n * n));
            assert_eq!(t.enumerate_basis(4096).unwrap().len() as u64, n * n);
        }
        // Z₂×Z₂ with two indices: 4·N₁·N₂ = 16
        let t = TaftAlgebra::new(fixtures::qls_esc()).unwrap();
        assert_eq!(t.dimension(), Dimension::Finite(16));
        // trivial character: N = ∞
        let g2 = Group::abelian(vec![2]).unwrap();
        let esc = Esc::new(
            g2,
            vec![EscItem {
                g: Elem::Vector(vec![0]),
                chi: Character::exponents(vec![2], vec![1]),
            }],
        )
        .unwrap();
        // χ(1) = 1, so N₁ = ∞
        let t = TaftAlgebra::new(esc).unwrap();
        assert_eq!(t.dimension(), Dimension::Infinite);
        // empty J → |G|
        let esc = Esc::new(Group::abelian(vec![3]).unwrap(), vec![]).unwrap();
        let t = TaftAlgebra::new(esc).unwrap();
        assert_eq!(t.dimension(), Dimension::Finite(3));
    }

    #[test]
    fn multiplication_matches_copath() {
        // the abstract product equals the co-path product under the
        // embedding, on all products of basis monomials of degree ≤ 3
        for esc in [fixtures::taft_esc(3), fixtures::qls_esc()] {
            let t = TaftAlgebra::new(esc).unwrap();
            let basis = t.enumerate_basis(4096).unwrap();
            let small: Vec<&PbwMonomial> =
                basis.iter().filter(|m| m.degree() <= 1).collect();
            for a in &small {
                for b in &small {
                    let abstract_prod =
                        t.multiply(
                            &TaftElement::from_term((*a).clone(), Scalar::one()),
                            &TaftElement::from_term((*b).clone(), Scalar::one()),
                        );
                    let lhs = t.element_to_copath(&abstract_prod).unwrap();
                    let rhs = copath::multiply(
                        &t.bimodule,
                        &t.to_copath(a).unwrap(),
                        &t.to_copath(b).unwrap(),
                        6,
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs, "embedding at {a}·{b}");
                }
            }
        }
    }

    #[test]
    fn multiplication_unit_and_nilpotency() {
        let t = z4_taft();
        let basis = t.enumerate_basis(4096).unwrap();
        let unit = TaftElement::from_term(
            PbwMonomial::unit(t.esc.group.identity(), 1),
            Scalar::one(),
        );
        for m in basis.iter().take(6) {
            let e = TaftElement::from_term(m.clone(), Scalar::one());
            assert_eq!(t.multiply(&unit, &e), e);
            assert_eq!(t.multiply(&e, &unit), e);
        }
        // E^3·E = 0
        let e3 = TaftElement::from_term(
            PbwMonomial {
                g: t.esc.group.identity(),
                exps: vec![3],
            },
            Scalar::one(),
        );
        let e1 = TaftElement::from_term(
            PbwMonomial {
                g: t.esc.group.identity(),
                exps: vec![1],
            },
            Scalar::one(),
        );
        assert!(t.multiply(&e3, &e1).is_zero());
    }

    #[test]
    fn multiplication_is_associative_spot_check() {
        let t = TaftAlgebra::new(fixtures::qls_esc()).unwrap();
        let basis = t.enumerate_basis(4096).unwrap();
        let small: Vec<TaftElement> = basis
            .iter()
            .filter(|m| m.degree() <= 1)
            .map(|m| TaftElement::from_term(m.clone(), Scalar::one()))
            .collect();
        for a in small.iter().step_by(2) {
            for b in small.iter().step_by(3) {
                for c in small.iter().step_by(4) {
                    let lhs = t.multiply(&t.multiply(a, b), c);
                    let rhs = t.multiply(a, &t.multiply(b, c));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn confluence_under_random_rule_order() {
        let t = z4_taft();
        let g = Elem::Vector(vec![1]);
        let word = vec![
            Letter::Gen(0),
            Letter::Group(g.clone()),
            Letter::Gen(0),
            Letter::Group(g.clone()),
            Letter::Gen(0),
        ];
        let reference = t.normal_form(&word);
        for seed in 0..20u64 {
            assert_eq!(t.normal_form_seeded(&word, seed), reference);
        }
    }

    #[test]
    fn diagram_basis_examples() {
        // one generator, N = 3: [1, E, E²]
        let t = TaftAlgebra::new(fixtures::taft_esc(3)).unwrap();
        assert_eq!(t.diagram_basis(5).len(), 3);
        assert_eq!(t.diagram_basis(0).len(), 1);
        // two generators, N₁ = N₂ = 2: [1, E₁, E₂, E₁E₂]
        let t = TaftAlgebra::new(fixtures::qls_esc()).unwrap();
        assert_eq!(t.diagram_basis(4).len(), 4);
    }

    #[test]
    fn nichols_reports_pass_on_taft_fixtures() {
        for n in [2u64, 3, 4, 5] {
            let report = nichols_check(&fixtures::taft_esc(n), (n as u32 - 1).min(4)).unwrap();
            assert!(report.pass(), "Taft n = {n}:\n{report}");
        }
        let report = nichols_check(&fixtures::qls_esc(), 2).unwrap();
        assert!(report.pass(), "{report}");
    }

    #[test]
    fn presentation_passes_on_taft_fixture() {
        let report = presentation_check(&fixtures::taft_esc(4), 4096).unwrap();
        assert!(report.pass(), "{report}");
        let report = presentation_check(&fixtures::qls_esc(), 4096).unwrap();
        assert!(report.pass(), "{report}");
    }

    #[test]
    fn diagram_comultiplication_matches_braided_module() {
        // Δ_R computed through ω on the co-path side agrees with the
        // quantum shuffle on ℛ(G, g_i, χ_i⁻¹): middle coefficients of E^k
        // are the Gaussian binomials at q⁻¹.
        let t = TaftAlgebra::new(fixtures::taft_esc(5)).unwrap();
        let alg = t.diagram_algebra().unwrap();
        let q_inv = Scalar::zeta(5).inv().unwrap();
        for k in 2..=4usize {
            let d = alg.comultiply_word(&vec![0; k], 5).unwrap();
            for j in 1..k {
                let c = d
                    .terms()
                    .find(|((l, r), _)| l.len() == j && r.len() == k - j)
                    .map(|(_, c)| c.clone())
                    .unwrap();
                let expected = crate::scalar::q_binomial(
                    k as u64,
                    j as u64,
                    &q_inv,
                    crate::scalar::QConvention::Gauss,
                )
                .unwrap();
                assert_eq!(c, expected, "k={k}, j={j}");
            }
        }
    }
}
