//! The semi-path Hopf algebra kQ^s, the tensor algebra over kG on the
//! arrow bimodule. Its basis words are g·A₁⊗…⊗A_t with every arrow factor
//! based at the identity vertex; multiplication concatenates and pushes
//! interior group elements to the left through the right bimodule action,
//! so a word picks up one character scalar per arrow factor crossed.

use std::collections::BTreeMap;
use std::fmt;

use crate::bimodule::ArrowBimodule;
use crate::error::{Error, Result};
use crate::group::Elem;
use crate::quiver::Arrow;
use crate::scalar::Scalar;

/// A normal-form basis word of kQ^s: leading group element, then arrow
/// factors all of which have source 1. Degree 0 words are group elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorWord {
    pub leading: Elem,
    pub arrows: Vec<Arrow>,
}

impl TensorWord {
    pub fn vertex(g: Elem) -> TensorWord {
        TensorWord {
            leading: g,
            arrows: Vec::new(),
        }
    }

    pub fn new(bm: &ArrowBimodule, leading: Elem, arrows: Vec<Arrow>) -> TensorWord {
        let id = bm.rsc.group.identity();
        for a in &arrows {
            assert_eq!(a.source, id, "tensor word arrows must be based at 1");
        }
        TensorWord { leading, arrows }
    }

    pub fn degree(&self) -> usize {
        self.arrows.len()
    }

    pub fn render(&self, bm: &ArrowBimodule) -> String {
        let mut parts = vec![self.leading.render()];
        for a in &self.arrows {
            match bm.esc_index_of(a.class, a.index) {
                Some(j) => parts.push(format!("E{}", j + 1)),
                None => parts.push(format!("a{}[{}]", a.index + 1, a.target.render())),
            }
        }
        parts.join(" * ")
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![self.leading.render()];
        for a in &self.arrows {
            parts.push(format!("a{}[{}]", a.index + 1, a.target.render()));
        }
        write!(f, "{}", parts.join(" * "))
    }
}

/// A linear combination of tensor words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<TensorWord, Scalar>,
}

impl TensorElement {
    pub fn zero() -> TensorElement {
        TensorElement::default()
    }

    pub fn from_word(w: TensorWord) -> TensorElement {
        TensorElement::from_term(w, Scalar::one())
    }

    pub fn from_term(w: TensorWord, c: Scalar) -> TensorElement {
        let mut e = TensorElement::zero();
        e.add_term(w, c);
        e
    }

    pub fn add_term(&mut self, w: TensorWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let cur = self.terms.remove(&w).unwrap_or_else(Scalar::zero);
        let s = cur.add(&c);
        if !s.is_zero() {
            self.terms.insert(w, s);
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        if c.is_zero() {
            return TensorElement::zero();
        }
        TensorElement {
            terms: self
                .terms
                .iter()
                .map(|(w, s)| (w.clone(), s.mul(c)))
                .collect(),
        }
    }

    pub fn neg(&self) -> TensorElement {
        self.scale(&Scalar::int(-1))
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn counit(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in &self.terms {
            if w.degree() == 0 {
                acc = acc.add(c);
            }
        }
        acc
    }
}

impl fmt::Display for TensorElement {
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
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c})·{w}")?;
            }
        }
        Ok(())
    }
}

/// A sum of two-fold tensors of words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorSquare {
    terms: BTreeMap<(TensorWord, TensorWord), Scalar>,
}

impl TensorSquare {
    pub fn zero() -> TensorSquare {
        TensorSquare::default()
    }

    pub fn add_term(&mut self, l: TensorWord, r: TensorWord, c: Scalar) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&(TensorWord, TensorWord), &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, other: &TensorSquare) -> TensorSquare {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.neg());
        }
        out
    }

    /// Componentwise product in kQ^s ⊗ kQ^s.
    pub fn multiply(&self, other: &TensorSquare, bm: &ArrowBimodule) -> TensorSquare {
        let mut out = TensorSquare::zero();
        for ((a, b), c1) in &self.terms {
            for ((x, y), c2) in &other.terms {
                let (sl, l) = multiply_words(bm, a, x);
                let (sr, r) = multiply_words(bm, b, y);
                out.add_term(l, r, c1.mul(c2).mul(&sl).mul(&sr));
            }
        }
        out
    }
}

/// Concatenation with left normalization: the right factor's leading
/// element is pushed through the left factor's arrows, picking up
/// χ^{(i)}_C(ζ_θ(h)) per arrow and conjugating non-central arrow targets.
pub fn multiply_words(bm: &ArrowBimodule, u: &TensorWord, v: &TensorWord) -> (Scalar, TensorWord) {
    let group = &bm.rsc.group;
    let h = &v.leading;
    let mut scalar = Scalar::one();
    let mut arrows = Vec::with_capacity(u.arrows.len() + v.arrows.len());
    for a in &u.arrows {
        // a·h = χ(ζ_θ(h)) · h · (h⁻¹·a·h); the conjugated arrow is again
        // based at 1.
        let (s, moved) = bm.right_action(a, h);
        scalar = scalar.mul(&s);
        arrows.push(bm.left_action(&group.inv(h), &moved));
    }
    arrows.extend(v.arrows.iter().cloned());
    (
        scalar,
        TensorWord {
            leading: group.mul(&u.leading, h),
            arrows,
        },
    )
}

pub fn multiply(bm: &ArrowBimodule, a: &TensorElement, b: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (u, c1) in a.terms() {
        for (v, c2) in b.terms() {
            let (s, w) = multiply_words(bm, u, v);
            out.add_term(w, c1.mul(c2).mul(&s));
        }
    }
    out
}

/// Δ on kQ^s: group-like on kG, and Δ(a) = a⊗1 + t(a)⊗a on arrows based at
/// 1, extended multiplicatively.
pub fn comultiply_word(bm: &ArrowBimodule, w: &TensorWord, cutoff: usize) -> Result<TensorSquare> {
    if w.degree() > cutoff {
        return Err(Error::BoundExceeded(format!(
            "comultiplication degree {} exceeds cutoff {cutoff}",
            w.degree()
        )));
    }
    let mut acc = TensorSquare::zero();
    acc.add_term(
        TensorWord::vertex(w.leading.clone()),
        TensorWord::vertex(w.leading.clone()),
        Scalar::one(),
    );
    for a in &w.arrows {
        let mut factor = TensorSquare::zero();
        factor.add_term(
            TensorWord {
                leading: bm.rsc.group.identity(),
                arrows: vec![a.clone()],
            },
            TensorWord::vertex(bm.rsc.group.identity()),
            Scalar::one(),
        );
        factor.add_term(
            TensorWord::vertex(a.target.clone()),
            TensorWord {
                leading: bm.rsc.group.identity(),
                arrows: vec![a.clone()],
            },
            Scalar::one(),
        );
        acc = acc.multiply(&factor, bm);
    }
    Ok(acc)
}

pub fn comultiply_element(
    bm: &ArrowBimodule,
    x: &TensorElement,
    cutoff: usize,
) -> Result<TensorSquare> {
    let mut out = TensorSquare::zero();
    for (w, c) in x.terms() {
        for ((l, r), s) in comultiply_word(bm, w, cutoff)?.terms() {
            out.add_term(l.clone(), r.clone(), c.mul(s));
        }
    }
    Ok(out)
}

/// Graded antipode by the convolution recursion: S(g) = g⁻¹ and
/// S(w)·g = −Σ_{deg w₍₁₎ < deg w} S(w₍₁₎)·w₍₂₎ for a word w with leading
/// element g.
pub fn antipode(bm: &ArrowBimodule, x: &TensorElement, cutoff: usize) -> Result<TensorElement> {
    let mut out = TensorElement::zero();
    for (w, c) in x.terms() {
        out = out.add(&antipode_word(bm, w, cutoff)?.scale(c));
    }
    Ok(out)
}

fn antipode_word(bm: &ArrowBimodule, w: &TensorWord, cutoff: usize) -> Result<TensorElement> {
    let group = &bm.rsc.group;
    if w.degree() == 0 {
        return Ok(TensorElement::from_word(TensorWord::vertex(
            group.inv(&w.leading),
        )));
    }
    if w.degree() > cutoff {
        return Err(Error::BoundExceeded(format!(
            "antipode degree {} exceeds cutoff {cutoff}",
            w.degree()
        )));
    }
    let mut acc = TensorElement::zero();
    for ((w1, w2), c) in comultiply_word(bm, w, cutoff)?.terms() {
        if w1.degree() == w.degree() {
            // the S(w)·g term — skip; it is the unknown being solved for
            debug_assert_eq!(w1, w);
            continue;
        }
        let s1 = antipode_word(bm, w1, cutoff)?;
        let prod = multiply(bm, &s1, &TensorElement::from_word(w2.clone()));
        acc = acc.add(&prod.scale(c));
    }
    let g_inv = TensorElement::from_word(TensorWord::vertex(group.inv(&w.leading)));
    Ok(multiply(bm, &acc, &g_inv).neg())
}

/// Basis words of degree ≤ cutoff whose leading element ranges over the
/// given vertex set (all elements when `None`, finite groups only).
pub fn basis_words(
    bm: &ArrowBimodule,
    cutoff: usize,
    vertex_window: Option<&[Elem]>,
) -> Vec<TensorWord> {
    let leads: Vec<Elem> = match vertex_window {
        Some(w) => w.to_vec(),
        None => bm.rsc.group.elements(),
    };
    let letters = bm.quiver.arrows_from(&bm.rsc.group.identity());
    let mut out = Vec::new();
    let mut level: Vec<Vec<Arrow>> = vec![vec![]];
    for t in 0..=cutoff {
        for lead in &leads {
            for arrows in &level {
                out.push(TensorWord {
                    leading: lead.clone(),
                    arrows: arrows.clone(),
                });
            }
        }
        if t < cutoff {
            let mut next = Vec::new();
            for arrows in &level {
                for a in &letters {
                    let mut v = arrows.clone();
                    v.push(a.clone());
                    next.push(v);
                }
            }
            level = next;
        }
    }
    out
}

/// Basis of the right coinvariants up to the degree cutoff: exactly the
/// words with leading element 1.
pub fn coinvariants_basis(bm: &ArrowBimodule, cutoff: usize) -> Vec<TensorWord> {
    basis_words(bm, cutoff, Some(&[bm.rsc.group.identity()]))
}

/// Projection ω = id∗(ι₀π₀S) onto the coinvariants: for a word with
/// leading element g this is right multiplication by g⁻¹.
pub fn coinvariant_projection(bm: &ArrowBimodule, w: &TensorWord) -> (Scalar, TensorWord) {
    let g_inv = TensorWord::vertex(bm.rsc.group.inv(&w.leading));
    multiply_words(bm, w, &g_inv)
}

/// The braided comultiplication of the diagram of kQ^s on a coinvariant
/// word: Δ_R = (ω ⊗ id)Δ.
pub fn diagram_comultiply(
    bm: &ArrowBimodule,
    w: &TensorWord,
    cutoff: usize,
) -> Result<TensorSquare> {
    assert_eq!(
        w.leading,
        bm.rsc.group.identity(),
        "diagram elements are coinvariant words"
    );
    let mut out = TensorSquare::zero();
    for ((l, r), c) in comultiply_word(bm, w, cutoff)?.terms() {
        let (s, lw) = coinvariant_projection(bm, l);
        out.add_term(lw, r.clone(), c.mul(&s));
    }
    Ok(out)
}

/// Exhaustive Hopf-axiom verification on basis words up to the cutoff.
pub fn verify_bialgebra(
    bm: &ArrowBimodule,
    cutoff: usize,
    vertex_window: Option<&[Elem]>,
) -> Result<()> {
    let words = basis_words(bm, cutoff, vertex_window);
    let unit = TensorElement::from_word(TensorWord::vertex(bm.rsc.group.identity()));
    for w in &words {
        let delta = comultiply_word(bm, w, cutoff)?;
        // coassociativity
        let mut left: BTreeMap<(TensorWord, TensorWord, TensorWord), Scalar> = BTreeMap::new();
        let mut right = left.clone();
        for ((a, b), c) in delta.terms() {
            for ((a1, a2), c2) in comultiply_word(bm, a, cutoff)?.terms() {
                add3(&mut left, (a1.clone(), a2.clone(), b.clone()), c.mul(c2));
            }
            for ((b1, b2), c2) in comultiply_word(bm, b, cutoff)?.terms() {
                add3(&mut right, (a.clone(), b1.clone(), b2.clone()), c.mul(c2));
            }
        }
        if left != right {
            return Err(Error::Verification(format!(
                "coassociativity fails at word {w}"
            )));
        }
        // counit laws: ε kills positive degree and is 1 on every group
        // element, so (ε⊗id)Δ sums the degree-0 left legs
        let mut lc = TensorElement::zero();
        let mut rc = TensorElement::zero();
        for ((a, b), c) in delta.terms() {
            if a.degree() == 0 {
                lc.add_term(b.clone(), c.clone());
            }
            if b.degree() == 0 {
                rc.add_term(a.clone(), c.clone());
            }
        }
        let this = TensorElement::from_word(w.clone());
        if lc != this || rc != this {
            return Err(Error::Verification(format!("counit law fails at {w}")));
        }
        // antipode identities
        let eps = if w.degree() == 0 { Scalar::one() } else { Scalar::zero() };
        let mut conv_l = TensorElement::zero();
        let mut conv_r = TensorElement::zero();
        for ((a, b), c) in delta.terms() {
            let sa = antipode_word(bm, a, cutoff)?;
            let sb = antipode_word(bm, b, cutoff)?;
            conv_l = conv_l.add(&multiply(bm, &sa, &TensorElement::from_word(b.clone())).scale(c));
            conv_r = conv_r.add(&multiply(bm, &TensorElement::from_word(a.clone()), &sb).scale(c));
        }
        let expected = unit.scale(&eps);
        if conv_l != expected || conv_r != expected {
            return Err(Error::Verification(format!(
                "antipode identity fails at {w}"
            )));
        }
    }
    // Δ and ε multiplicative
    for u in &words {
        for v in &words {
            if u.degree() + v.degree() > cutoff {
                continue;
            }
            let (s, uv) = multiply_words(bm, u, v);
            let lhs = comultiply_word(bm, &uv, cutoff)?;
            let mut lhs_scaled = TensorSquare::zero();
            for ((l, r), c) in lhs.terms() {
                lhs_scaled.add_term(l.clone(), r.clone(), c.mul(&s));
            }
            let rhs = comultiply_word(bm, u, cutoff)?
                .multiply(&comultiply_word(bm, v, cutoff)?, bm);
            if lhs_scaled != rhs {
                return Err(Error::Verification(format!(
                    "Δ is not multiplicative at ({u}, {v})"
                )));
            }
        }
    }
    Ok(())
}

fn add3(
    map: &mut BTreeMap<(TensorWord, TensorWord, TensorWord), Scalar>,
    key: (TensorWord, TensorWord, TensorWord),
    c: Scalar,
) {
    let cur = map.remove(&key).unwrap_or_else(Scalar::zero);
    let s = cur.add(&c);
    if !s.is_zero() {
        map.insert(key, s);
    }
}
