//! Ramification systems with characters (RSC) and element systems with
//! characters (ESC): validation, the central-RSC ↔ ESC correspondence,
//! exhaustive isomorphism testing, and desk-scale classification of all
//! RSCs over a fixed (G, r).

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::group::{
    dual_group, isomorphisms, Character, ConjClass, Elem, Group, GroupMap,
    DEFAULT_AUTOMORPHISM_BOUND,
};
use crate::scalar::Scalar;

/// Default bound on the number of enumerated character assignments in
/// [`classify_rsc`].
pub const DEFAULT_CLASSIFY_BOUND: u64 = 65536;

/// One ramified conjugacy class: the class (with representative u(C) and
/// centralizer) plus one centralizer character per arrow index. r_C is the
/// number of characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RscClass {
    pub class: ConjClass,
    pub characters: Vec<Character>,
}

/// A ramification system with characters over a group. Only classes with
/// r_C ≠ 0 are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rsc {
    pub group: Group,
    pub classes: Vec<RscClass>,
}

impl Rsc {
    pub fn new(group: Group, classes: Vec<RscClass>) -> Result<Rsc> {
        let mut seen_reps = BTreeSet::new();
        for rc in &classes {
            if rc.characters.is_empty() {
                return Err(Error::Config("RSC class with zero ramification".into()));
            }
            if !seen_reps.insert(rc.class.rep.clone()) {
                return Err(Error::Config("duplicate RSC class".into()));
            }
            for chi in &rc.characters {
                validate_character(&group, chi, &rc.class.centralizer)?;
            }
        }
        Ok(Rsc { group, classes })
    }

    /// Builds a central RSC from (central element, characters) pairs; each
    /// class is the singleton {g}.
    pub fn central(group: Group, data: Vec<(Elem, Vec<Character>)>) -> Result<Rsc> {
        let mut classes = Vec::new();
        for (g, characters) in data {
            let g = group.normalize(&g);
            if !group.is_central(&g) {
                return Err(Error::Config(format!("element {g} is not central")));
            }
            classes.push(RscClass {
                class: ConjClass::central(&group, g),
                characters,
            });
        }
        Rsc::new(group, classes)
    }

    /// True when every ramified class is a central singleton.
    pub fn is_central(&self) -> bool {
        self.classes
            .iter()
            .all(|rc| rc.class.size() == 1 && self.group.is_central(&rc.class.rep))
    }

    pub fn total_ramification(&self) -> usize {
        self.classes.iter().map(|rc| rc.characters.len()).sum()
    }

    /// r_C for the class containing w (0 when unramified).
    pub fn ramification_at(&self, w: &Elem) -> usize {
        self.classes
            .iter()
            .find(|rc| rc.class.members.contains(w))
            .map(|rc| rc.characters.len())
            .unwrap_or(0)
    }
}

fn validate_character(group: &Group, chi: &Character, centralizer: &[Elem]) -> Result<()> {
    match chi {
        Character::Exponents { factors, .. } => {
            let gf = group
                .abelian_factors()
                .ok_or_else(|| Error::Config("exponent character over non-abelian group".into()))?;
            if factors != gf {
                return Err(Error::Config("character factors do not match group".into()));
            }
            Ok(())
        }
        Character::GeneratorValues { values } => {
            let rank = group
                .rank()
                .ok_or_else(|| Error::Config("generator-value character needs a free abelian group".into()))?;
            if values.len() != rank {
                return Err(Error::Config("character arity does not match rank".into()));
            }
            Ok(())
        }
        Character::Table { values } => {
            for z in centralizer {
                if !values.contains_key(z) {
                    return Err(Error::Config(format!(
                        "table character missing value at {z}"
                    )));
                }
            }
            chi.verify_homomorphism(group, centralizer)
        }
    }
}

/// One line of an element system with characters: a central element g_i and
/// a character χ_i of the whole group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EscItem {
    pub g: Elem,
    pub chi: Character,
}

/// An element system with characters (G, g_i, χ_i; i ∈ J); J is the index
/// range of `items`, whose order also fixes the total order ≺ used for PBW
/// bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Esc {
    pub group: Group,
    pub items: Vec<EscItem>,
}

impl Esc {
    pub fn new(group: Group, items: Vec<EscItem>) -> Result<Esc> {
        for item in &items {
            if !group.is_central(&item.g) {
                return Err(Error::Config(format!("ESC element {} is not central", item.g)));
            }
            let domain = if group.is_free_abelian() {
                Vec::new()
            } else {
                group.elements()
            };
            validate_character(&group, &item.chi, &domain)?;
        }
        let items = items
            .into_iter()
            .map(|it| EscItem {
                g: group.normalize(&it.g),
                chi: it.chi,
            })
            .collect();
        Ok(Esc { group, items })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// q_{ji} := χ_i(g_j).
    pub fn q_ji(&self, j: usize, i: usize) -> Scalar {
        self.items[i].chi.eval(&self.items[j].g)
    }

    /// q_i := χ_i(g_i).
    pub fn q_i(&self, i: usize) -> Scalar {
        self.q_ji(i, i)
    }

    /// N_i = order of q_i, with N_i = ∞ (None) when q_i is not a root of
    /// unity or q_i = 1.
    pub fn n_i(&self, i: usize) -> Option<u64> {
        match self.q_i(i).root_of_unity_order() {
            Some(1) | None => None,
            Some(n) => Some(n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum QuantumCommutativity {
    #[serde(rename = "commutative")]
    Commutative,
    #[serde(rename = "weakly_commutative")]
    WeaklyCommutative,
    #[serde(rename = "neither")]
    Neither,
}

/// Checks χ_i(g_j)·χ_j(g_i) = 1 for all pairs (commutative) or all pairs
/// with i ≠ j (weakly commutative).
pub fn quantum_commutativity(esc: &Esc) -> QuantumCommutativity {
    let n = esc.len();
    let one = Scalar::one();
    let weakly = (0..n).all(|i| {
        (0..n)
            .filter(|&j| j != i)
            .all(|j| esc.q_ji(i, j).mul(&esc.q_ji(j, i)) == one)
    });
    if !weakly {
        return QuantumCommutativity::Neither;
    }
    let diag = (0..n).all(|i| esc.q_i(i).mul(&esc.q_i(i)) == one);
    if diag {
        QuantumCommutativity::Commutative
    } else {
        QuantumCommutativity::WeaklyCommutative
    }
}

/// ESC → central RSC: indices with equal g_i collapse into the singleton
/// class {g_i}, whose character list collects their χ's in index order.
pub fn esc_to_crsc(esc: &Esc) -> Rsc {
    let mut order: Vec<Elem> = Vec::new();
    let mut grouped: BTreeMap<Elem, Vec<Character>> = BTreeMap::new();
    for item in &esc.items {
        if !grouped.contains_key(&item.g) {
            order.push(item.g.clone());
        }
        grouped
            .entry(item.g.clone())
            .or_default()
            .push(item.chi.clone());
    }
    let data: Vec<(Elem, Vec<Character>)> = order
        .into_iter()
        .map(|g| {
            let chars = grouped.remove(&g).unwrap();
            (g, chars)
        })
        .collect();
    Rsc::central(esc.group.clone(), data).expect("ESC data always yields a valid central RSC")
}

/// Central RSC → ESC: J is the disjoint union of the per-class index sets.
pub fn crsc_to_esc(rsc: &Rsc) -> Result<Esc> {
    if !rsc.is_central() {
        return Err(Error::Precondition(
            "crsc_to_esc requires a central ramification".into(),
        ));
    }
    let mut items = Vec::new();
    for rc in &rsc.classes {
        for chi in &rc.characters {
            items.push(EscItem {
                g: rc.class.rep.clone(),
                chi: chi.clone(),
            });
        }
    }
    Esc::new(rsc.group.clone(), items)
}

/// Witness for an RSC isomorphism: the group isomorphism φ, the conjugating
/// element h_C per class, and the character matching per class.
#[derive(Debug, Clone)]
pub struct RscWitness {
    pub phi: GroupMap,
    pub per_class: Vec<ClassWitness>,
}

#[derive(Debug, Clone)]
pub struct ClassWitness {
    /// Index into the source RSC's class list.
    pub class: usize,
    /// Index into the target RSC's class list.
    pub image_class: usize,
    pub h: Elem,
    /// matching[i] = index of the matched character in the image class.
    pub matching: Vec<usize>,
}

/// Exhaustive isomorphism test per the three defining conditions: a group
/// isomorphism φ, elements h_C with φ(h_C⁻¹·u(C)·h_C) = u'(φ(C)), and
/// bijections of character indices with χ'_{φC(i)}(φ(h_C⁻¹·h·h_C)) = χ_i(h)
/// on the whole centralizer.
pub fn rsc_isomorphic(a: &Rsc, b: &Rsc, bound: u64) -> Result<Option<RscWitness>> {
    if a.total_ramification() != b.total_ramification() || a.classes.len() != b.classes.len() {
        return Ok(None);
    }
    let isos = isomorphisms(&a.group, &b.group, bound)?;
    for phi in isos {
        if let Some(w) = rsc_witness_for_phi(a, b, &phi) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn rsc_witness_for_phi(a: &Rsc, b: &Rsc, phi: &GroupMap) -> Option<RscWitness> {
    let mut per_class = Vec::new();
    let mut used_images = BTreeSet::new();
    for (ci, rc) in a.classes.iter().enumerate() {
        let img_u = phi.apply(&b.group, &rc.class.rep);
        // The image class of C under φ is the class of b containing φ(u(C)).
        let (bi, brc) = b
            .classes
            .iter()
            .enumerate()
            .find(|(_, brc)| brc.class.members.contains(&img_u))?;
        if used_images.contains(&bi) || brc.characters.len() != rc.characters.len() {
            return None;
        }
        let witness = class_witness(a, b, rc, brc, phi, ci, bi)?;
        used_images.insert(bi);
        per_class.push(witness);
    }
    Some(RscWitness {
        phi: phi.clone(),
        per_class,
    })
}

fn class_witness(
    a: &Rsc,
    b: &Rsc,
    rc: &RscClass,
    brc: &RscClass,
    phi: &GroupMap,
    ci: usize,
    bi: usize,
) -> Option<ClassWitness> {
    let g = &a.group;
    let candidates = if rc.class.size() == 1 {
        vec![g.identity()]
    } else {
        g.elements()
    };
    for h in candidates {
        // x ↦ φ(h⁻¹·x·h)
        let conj =
            |x: &Elem| -> Elem { phi.apply(&b.group, &g.mul(&g.mul(&g.inv(&h), x), &h)) };
        if conj(&rc.class.rep) != brc.class.rep {
            continue;
        }
        let r = rc.characters.len();
        let mut allowed = vec![vec![false; r]; r];
        for (i, chi) in rc.characters.iter().enumerate() {
            for (j, chi2) in brc.characters.iter().enumerate() {
                allowed[i][j] = rc
                    .class
                    .centralizer
                    .iter()
                    .all(|z| chi2.eval(&conj(z)) == chi.eval(z));
            }
        }
        if let Some(matching) = perfect_matching(&allowed) {
            return Some(ClassWitness {
                class: ci,
                image_class: bi,
                h,
                matching,
            });
        }
    }
    None
}

/// Witness for an ESC isomorphism: φ and the index bijection σ.
#[derive(Debug, Clone)]
pub struct EscWitness {
    pub phi: GroupMap,
    pub sigma: Vec<usize>,
}

/// Exhaustive test for φ(g_i) = g'_{σ(i)} and χ'_{σ(i)}∘φ = χ_i.
pub fn esc_isomorphic(a: &Esc, b: &Esc, bound: u64) -> Result<Option<EscWitness>> {
    if a.len() != b.len() {
        return Ok(None);
    }
    let isos = isomorphisms(&a.group, &b.group, bound)?;
    let probes = character_probes(&a.group);
    for phi in isos {
        let n = a.len();
        let mut allowed = vec![vec![false; n]; n];
        for (i, ai) in a.items.iter().enumerate() {
            for (j, bj) in b.items.iter().enumerate() {
                allowed[i][j] = phi.apply(&b.group, &ai.g) == bj.g
                    && probes
                        .iter()
                        .all(|x| bj.chi.eval(&phi.apply(&b.group, x)) == ai.chi.eval(x));
            }
        }
        if let Some(sigma) = perfect_matching(&allowed) {
            return Ok(Some(EscWitness { phi, sigma }));
        }
    }
    Ok(None)
}

/// Elements on which two characters must agree to be equal as
/// homomorphisms: every group element (finite case).
fn character_probes(group: &Group) -> Vec<Elem> {
    group.elements()
}

fn perfect_matching(allowed: &[Vec<bool>]) -> Option<Vec<usize>> {
    let n = allowed.len();
    let mut assignment = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        allowed: &[Vec<bool>],
        i: usize,
        used: &mut Vec<bool>,
        assignment: &mut Vec<usize>,
    ) -> bool {
        if i == allowed.len() {
            return true;
        }
        for j in 0..allowed.len() {
            if allowed[i][j] && !used[j] {
                used[j] = true;
                assignment[i] = j;
                if go(allowed, i + 1, used, assignment) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    if go(allowed, 0, &mut used, &mut assignment) {
        Some(assignment)
    } else {
        None
    }
}

/// Classifies all RSCs over a finite abelian group with the given central
/// ramification r (element ↦ multiplicity): returns one canonical
/// representative per isomorphism class, deterministically ordered.
pub fn classify_rsc(group: &Group, ramification: &[(Elem, usize)]) -> Result<Vec<Rsc>> {
    classify_rsc_with_bound(group, ramification, DEFAULT_CLASSIFY_BOUND)
}

pub fn classify_rsc_with_bound(
    group: &Group,
    ramification: &[(Elem, usize)],
    bound: u64,
) -> Result<Vec<Rsc>> {
    if group.abelian_factors().is_none() {
        return Err(Error::Unsupported(
            "classification is implemented for finite abelian groups".into(),
        ));
    }
    let chars = dual_group(group)?;
    let ram: Vec<(Elem, usize)> = ramification
        .iter()
        .filter(|(_, r)| *r > 0)
        .map(|(g, r)| (group.normalize(g), *r))
        .collect();
    let total: usize = ram.iter().map(|(_, r)| r).sum();
    let count = (chars.len() as u64).checked_pow(total as u32);
    match count {
        Some(c) if c <= bound => {}
        _ => {
            return Err(Error::BoundExceeded(format!(
                "classification would enumerate |Ĝ|^{total} > {bound} assignments"
            )))
        }
    }
    // Automorphisms preserving the ramification.
    let autos: Vec<GroupMap> = isomorphisms(group, group, DEFAULT_AUTOMORPHISM_BOUND)?
        .into_iter()
        .filter(|phi| {
            ram.iter().all(|(g, r)| {
                let img = phi.apply(group, g);
                ram.iter()
                    .any(|(g2, r2)| *g2 == img && r2 == r)
            })
        })
        .collect();

    let mut assignments: Vec<Vec<Vec<usize>>> = vec![vec![]];
    // assignment = per ramified class, a vector of character indices
    for (_, r) in &ram {
        let tuples = index_tuples(chars.len(), *r);
        let mut next = Vec::new();
        for partial in &assignments {
            for t in &tuples {
                let mut v = partial.clone();
                v.push(t.clone());
                next.push(v);
            }
        }
        assignments = next;
    }

    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for assignment in assignments {
        let key = canonical_key(group, &ram, &assignment, &autos, &chars);
        if seen.insert(key.clone()) {
            let rsc = rsc_from_key(group, &chars, &key)?;
            reps.push(rsc);
        }
    }
    Ok(reps)
}

type ClassifyKey = Vec<(Elem, Vec<Vec<u64>>)>;

fn canonical_key(
    group: &Group,
    ram: &[(Elem, usize)],
    assignment: &[Vec<usize>],
    autos: &[GroupMap],
    chars: &[Character],
) -> ClassifyKey {
    let mut best: Option<ClassifyKey> = None;
    for phi in autos {
        let mut key: ClassifyKey = Vec::new();
        for ((g, _), idxs) in ram.iter().zip(assignment) {
            let img = phi.apply(group, g);
            // χ' = χ∘φ⁻¹ on the transformed class; equivalently we tag the
            // image class with the multiset of transported characters.
            let mut transported: Vec<Vec<u64>> = idxs
                .iter()
                .map(|&ci| transport_exponents(group, &chars[ci], phi))
                .collect();
            transported.sort();
            key.push((img, transported));
        }
        key.sort();
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    best.expect("at least the identity automorphism")
}

/// The exponent vector of χ∘φ⁻¹ for an abelian group, computed by
/// evaluating the transported character on the generators.
fn transport_exponents(group: &Group, chi: &Character, phi: &GroupMap) -> Vec<u64> {
    let factors = group.abelian_factors().unwrap();
    let n = factors.iter().fold(1u64, |a, &b| num_integer::lcm(a, b));
    let k = factors.len();
    // φ⁻¹ as a map: brute-force inverse images of generators.
    let mut exps = Vec::with_capacity(k);
    for j in 0..k {
        let mut gen = vec![0i64; k];
        gen[j] = 1;
        let gen = Elem::Vector(gen);
        let pre = group
            .elements()
            .into_iter()
            .find(|x| phi.apply(group, x) == gen)
            .expect("automorphism is surjective");
        // χ(φ⁻¹(e_j)) = ζ_n^t; recover t by scanning powers.
        let val = chi.eval(&pre);
        let mut p = Scalar::one();
        let mut t = 0u64;
        while p != val {
            p = p.mul(&Scalar::zeta(n));
            t += 1;
            assert!(t <= n, "character value is not a root of unity of order n");
        }
        // convert the ζ_n exponent into a generator exponent for factor f_j
        let f = factors[j];
        let step = n / f;
        assert!(t % step == 0, "transported character not defined on factor");
        exps.push((t / step) % f);
    }
    exps
}

fn rsc_from_key(group: &Group, _chars: &[Character], key: &ClassifyKey) -> Result<Rsc> {
    let factors = group.abelian_factors().unwrap().to_vec();
    let data: Vec<(Elem, Vec<Character>)> = key
        .iter()
        .map(|(g, exp_vecs)| {
            let cs: Vec<Character> = exp_vecs
                .iter()
                .map(|e| Character::exponents(factors.clone(), e.clone()))
                .collect();
            (g.clone(), cs)
        })
        .collect();
    Rsc::central(group.clone(), data)
}

fn index_tuples(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        let mut next = Vec::with_capacity(out.len() * n);
        for t in &out {
            for i in 0..n {
                let mut v = t.clone();
                v.push(i);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

// The FL-condition checker works on the enriched ESC data defined with the
// quantum-group machinery; it is re-exported here as part of the
// classification surface.
pub use crate::quantum_group::{validate_fl, FlData, FlReport, FlType};
