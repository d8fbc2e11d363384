//! Finite groups (Cayley table or abelian invariant factors) and free
//! abelian groups, together with the coset and character machinery that
//! drives the arrow bimodule: conjugacy classes, centralizers, coset
//! representative systems with the factorization g_θ·h = ζ_θ(h)·g_θ',
//! characters, and brute-force automorphism/isomorphism search.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default bound on |G| for exhaustive automorphism search.
pub const DEFAULT_AUTOMORPHISM_BOUND: u64 = 64;

/// A group element: an index into a Cayley table, or an integer exponent
/// vector over the declared generators (abelian / free abelian).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    Index(usize),
    Vector(Vec<i64>),
}

impl Elem {
    pub fn render(&self) -> String {
        match self {
            Elem::Index(i) => format!("#{i}"),
            Elem::Vector(v) => {
                let body: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("g^[{}]", body.join(","))
            }
        }
    }

    pub fn parse(s: &str) -> Result<Elem> {
        let s = s.trim();
        if let Some(idx) = s.strip_prefix('#') {
            return Ok(Elem::Index(idx.parse().map_err(|_| {
                Error::Parse(format!("bad element index `{s}`"))
            })?));
        }
        if let Some(body) = s.strip_prefix("g^[").and_then(|t| t.strip_suffix(']')) {
            if body.trim().is_empty() {
                return Ok(Elem::Vector(vec![]));
            }
            let v: std::result::Result<Vec<i64>, _> =
                body.split(',').map(|p| p.trim().parse()).collect();
            return Ok(Elem::Vector(v.map_err(|_| {
                Error::Parse(format!("bad element vector `{s}`"))
            })?));
        }
        Err(Error::Parse(format!("bad element literal `{s}`")))
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Cayley {
        table: Vec<Vec<usize>>,
        identity: usize,
        inverses: Vec<usize>,
    },
    Abelian {
        factors: Vec<u64>,
    },
    FreeAbelian {
        rank: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    kind: Kind,
}

impl Group {
    /// A finite group from its Cayley table: `table[a][b]` is the index of
    /// the product a·b. The table is checked to be a Latin square with an
    /// identity, two-sided inverses and associativity.
    pub fn cayley(table: Vec<Vec<usize>>) -> Result<Group> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(Error::Config("Cayley table must be square".into()));
        }
        for row in &table {
            if row.iter().any(|&x| x >= n) {
                return Err(Error::Config("Cayley table entry out of range".into()));
            }
        }
        for i in 0..n {
            let row: BTreeSet<usize> = table[i].iter().copied().collect();
            let col: BTreeSet<usize> = (0..n).map(|j| table[j][i]).collect();
            if row.len() != n || col.len() != n {
                return Err(Error::Config(format!(
                    "Cayley table is not a Latin square at line {i}"
                )));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::Config("Cayley table has no identity".into()))?;
        let mut inverses = vec![usize::MAX; n];
        for (a, inv_slot) in inverses.iter_mut().enumerate() {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::Config(format!("element #{a} has no two-sided inverse")))?;
            *inv_slot = inv;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Config(format!(
                            "Cayley table not associative at (#{a}, #{b}, #{c})"
                        )));
                    }
                }
            }
        }
        Ok(Group {
            kind: Kind::Cayley {
                table,
                identity,
                inverses,
            },
        })
    }

    /// A finite abelian group ∏ Z_{n_j} in invariant-factor form.
    pub fn abelian(factors: Vec<u64>) -> Result<Group> {
        if factors.is_empty() || factors.iter().any(|&f| f < 2) {
            return Err(Error::Config(
                "abelian invariant factors must be a nonempty list of integers >= 2".into(),
            ));
        }
        Ok(Group {
            kind: Kind::Abelian { factors },
        })
    }

    /// The free abelian group Z^rank.
    pub fn free_abelian(rank: usize) -> Result<Group> {
        if rank == 0 {
            return Err(Error::Config("free abelian rank must be positive".into()));
        }
        Ok(Group {
            kind: Kind::FreeAbelian { rank },
        })
    }

    pub fn is_cayley(&self) -> bool {
        matches!(self.kind, Kind::Cayley { .. })
    }

    pub fn is_free_abelian(&self) -> bool {
        matches!(self.kind, Kind::FreeAbelian { .. })
    }

    pub fn abelian_factors(&self) -> Option<&[u64]> {
        match &self.kind {
            Kind::Abelian { factors } => Some(factors),
            _ => None,
        }
    }

    pub fn rank(&self) -> Option<usize> {
        match &self.kind {
            Kind::FreeAbelian { rank } => Some(*rank),
            _ => None,
        }
    }

    pub fn order(&self) -> Option<u64> {
        match &self.kind {
            Kind::Cayley { table, .. } => Some(table.len() as u64),
            Kind::Abelian { factors } => Some(factors.iter().product()),
            Kind::FreeAbelian { .. } => None,
        }
    }

    pub fn identity(&self) -> Elem {
        match &self.kind {
            Kind::Cayley { identity, .. } => Elem::Index(*identity),
            Kind::Abelian { factors } => Elem::Vector(vec![0; factors.len()]),
            Kind::FreeAbelian { rank } => Elem::Vector(vec![0; *rank]),
        }
    }

    pub fn normalize(&self, e: &Elem) -> Elem {
        match (&self.kind, e) {
            (Kind::Abelian { factors }, Elem::Vector(v)) => {
                assert_eq!(v.len(), factors.len(), "element arity mismatch");
                Elem::Vector(
                    v.iter()
                        .zip(factors)
                        .map(|(&x, &f)| x.rem_euclid(f as i64))
                        .collect(),
                )
            }
            _ => e.clone(),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.kind, a, b) {
            (Kind::Cayley { table, .. }, Elem::Index(i), Elem::Index(j)) => {
                Elem::Index(table[*i][*j])
            }
            (Kind::Abelian { .. } | Kind::FreeAbelian { .. }, Elem::Vector(x), Elem::Vector(y)) => {
                assert_eq!(x.len(), y.len(), "element arity mismatch");
                self.normalize(&Elem::Vector(
                    x.iter().zip(y).map(|(a, b)| a + b).collect(),
                ))
            }
            _ => panic!("element kind does not match group kind"),
        }
    }

    pub fn inv(&self, a: &Elem) -> Elem {
        match (&self.kind, a) {
            (Kind::Cayley { inverses, .. }, Elem::Index(i)) => Elem::Index(inverses[*i]),
            (Kind::Abelian { .. } | Kind::FreeAbelian { .. }, Elem::Vector(x)) => {
                self.normalize(&Elem::Vector(x.iter().map(|a| -a).collect()))
            }
            _ => panic!("element kind does not match group kind"),
        }
    }

    pub fn conjugate(&self, g: &Elem, x: &Elem) -> Elem {
        self.mul(&self.mul(g, x), &self.inv(g))
    }

    pub fn pow(&self, a: &Elem, e: i64) -> Elem {
        let mut acc = self.identity();
        let base = if e < 0 { self.inv(a) } else { a.clone() };
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        acc
    }

    /// All elements in a fixed deterministic order. Finite groups only.
    pub fn elements(&self) -> Vec<Elem> {
        match &self.kind {
            Kind::Cayley { table, .. } => (0..table.len()).map(Elem::Index).collect(),
            Kind::Abelian { factors } => {
                let mut out = vec![vec![]];
                for &f in factors {
                    let mut next = Vec::with_capacity(out.len() * f as usize);
                    for prefix in &out {
                        for x in 0..f as i64 {
                            let mut v = prefix.clone();
                            v.push(x);
                            next.push(v);
                        }
                    }
                    out = next;
                }
                out.into_iter().map(Elem::Vector).collect()
            }
            Kind::FreeAbelian { .. } => panic!("cannot enumerate a free abelian group"),
        }
    }

    pub fn is_abelian(&self) -> bool {
        match &self.kind {
            Kind::Cayley { table, .. } => {
                let n = table.len();
                (0..n).all(|a| (0..n).all(|b| table[a][b] == table[b][a]))
            }
            _ => true,
        }
    }

    pub fn is_central(&self, x: &Elem) -> bool {
        match &self.kind {
            Kind::Cayley { .. } => self
                .elements()
                .iter()
                .all(|g| self.mul(g, x) == self.mul(x, g)),
            _ => true,
        }
    }

    pub fn elem_order(&self, x: &Elem) -> Option<u64> {
        match &self.kind {
            Kind::FreeAbelian { .. } => {
                if *x == self.identity() {
                    Some(1)
                } else {
                    None
                }
            }
            _ => {
                let id = self.identity();
                let mut p = x.clone();
                let mut k = 1;
                while p != id {
                    p = self.mul(&p, x);
                    k += 1;
                }
                Some(k)
            }
        }
    }

    /// The exponent (lcm of element orders) of a finite group.
    pub fn exponent(&self) -> Option<u64> {
        match &self.kind {
            Kind::Abelian { factors } => Some(factors.iter().fold(1u64, |a, &b| a.lcm(&b))),
            Kind::Cayley { .. } => {
                let mut m = 1u64;
                for e in self.elements() {
                    m = m.lcm(&self.elem_order(&e).unwrap());
                }
                Some(m)
            }
            Kind::FreeAbelian { .. } => None,
        }
    }

    /// Conjugacy classes with deterministically chosen representatives
    /// (minimal element in enumeration order) and centralizers.
    pub fn conjugacy_classes(&self) -> Result<Vec<ConjClass>> {
        if self.is_free_abelian() {
            return Err(Error::Unsupported(
                "conjugacy classes of a free abelian group are singletons; handle per element"
                    .into(),
            ));
        }
        let els = self.elements();
        let mut seen: BTreeSet<Elem> = BTreeSet::new();
        let mut classes = Vec::new();
        for x in &els {
            if seen.contains(x) {
                continue;
            }
            let mut mset = BTreeSet::new();
            for g in &els {
                mset.insert(self.conjugate(g, x));
            }
            let rep = els
                .iter()
                .find(|e| mset.contains(e))
                .expect("class has a member")
                .clone();
            let centralizer: Vec<Elem> = els
                .iter()
                .filter(|g| self.mul(g, &rep) == self.mul(&rep, g))
                .cloned()
                .collect();
            for m in &mset {
                seen.insert(m.clone());
            }
            let members: Vec<Elem> = els.iter().filter(|e| mset.contains(*e)).cloned().collect();
            classes.push(ConjClass {
                rep,
                members,
                centralizer,
            });
        }
        Ok(classes)
    }
}

/// A conjugacy class with its chosen representative u(C) and the
/// centralizer Z_{u(C)}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub rep: Elem,
    pub members: Vec<Elem>,
    pub centralizer: Vec<Elem>,
}

impl ConjClass {
    /// The singleton class of a central element. For free abelian groups
    /// the centralizer (the whole group) is left empty rather than
    /// enumerated.
    pub fn central(group: &Group, g: Elem) -> ConjClass {
        debug_assert!(group.is_central(&g));
        let centralizer = if group.is_free_abelian() {
            Vec::new()
        } else {
            group.elements()
        };
        ConjClass {
            rep: g.clone(),
            members: vec![g],
            centralizer,
        }
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A coset representative system G = ⋃_θ Z_{u(C)}·g_θ for one class. The
/// representative of the coset Z_{u(C)} itself is the identity by default.
/// Every class member w determines a unique θ with w = g_θ⁻¹·u(C)·g_θ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSystem {
    pub class: ConjClass,
    pub reps: Vec<Elem>,
    coset_index: BTreeMap<Elem, usize>,
    theta_of_member: BTreeMap<Elem, usize>,
    trivial: bool,
}

impl CosetSystem {
    /// Greedy representative choice in element order, identity coset first.
    pub fn new(group: &Group, class: &ConjClass) -> CosetSystem {
        if class.size() == 1 && !group.is_cayley() {
            return CosetSystem::trivial(class);
        }
        let centralizer: BTreeSet<Elem> = class.centralizer.iter().cloned().collect();
        let mut reps = vec![group.identity()];
        let mut coset_index = BTreeMap::new();
        for z in &centralizer {
            coset_index.insert(z.clone(), 0usize);
        }
        for x in group.elements() {
            if coset_index.contains_key(&x) {
                continue;
            }
            let theta = reps.len();
            reps.push(x.clone());
            for z in &centralizer {
                coset_index.insert(group.mul(z, &x), theta);
            }
        }
        Self::finish(group, class, reps, coset_index)
    }

    /// Builds a system from explicit representatives; they must hit every
    /// centralizer coset exactly once.
    pub fn with_reps(group: &Group, class: &ConjClass, reps: Vec<Elem>) -> Result<CosetSystem> {
        if class.size() == 1 && !group.is_cayley() {
            if reps.len() <= 1 {
                return Ok(CosetSystem::trivial(class));
            }
            return Err(Error::Config("central class admits a single coset".into()));
        }
        let centralizer: BTreeSet<Elem> = class.centralizer.iter().cloned().collect();
        let mut coset_index = BTreeMap::new();
        for (theta, r) in reps.iter().enumerate() {
            for z in &centralizer {
                if coset_index.insert(group.mul(z, r), theta).is_some() {
                    return Err(Error::Config(
                        "coset representatives overlap a centralizer coset".into(),
                    ));
                }
            }
        }
        if coset_index.len() != group.order().unwrap() as usize {
            return Err(Error::Config(
                "coset representatives do not cover the group".into(),
            ));
        }
        Ok(Self::finish(group, class, reps, coset_index))
    }

    fn finish(
        group: &Group,
        class: &ConjClass,
        reps: Vec<Elem>,
        coset_index: BTreeMap<Elem, usize>,
    ) -> CosetSystem {
        let mut theta_of_member = BTreeMap::new();
        for (theta, r) in reps.iter().enumerate() {
            let w = group.mul(&group.mul(&group.inv(r), &class.rep), r);
            theta_of_member.insert(w, theta);
        }
        debug_assert_eq!(theta_of_member.len(), class.size(), "|Θ_C| = |C| fails");
        CosetSystem {
            class: class.clone(),
            reps,
            coset_index,
            theta_of_member,
            trivial: false,
        }
    }

    fn trivial(class: &ConjClass) -> CosetSystem {
        let mut theta_of_member = BTreeMap::new();
        theta_of_member.insert(class.rep.clone(), 0);
        CosetSystem {
            class: class.clone(),
            reps: Vec::new(),
            coset_index: BTreeMap::new(),
            theta_of_member,
            trivial: true,
        }
    }

    /// True for central classes over abelian/free-abelian groups, where
    /// ζ_θ = id and the only coset is the whole group.
    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    pub fn theta_count(&self) -> usize {
        if self.trivial {
            1
        } else {
            self.reps.len()
        }
    }

    pub fn rep(&self, group: &Group, theta: usize) -> Elem {
        if self.trivial {
            assert_eq!(theta, 0);
            group.identity()
        } else {
            self.reps[theta].clone()
        }
    }

    /// The unique θ with w = g_θ⁻¹·u(C)·g_θ, for a member w of the class.
    pub fn theta_of(&self, w: &Elem) -> Option<usize> {
        if self.trivial {
            return if *w == self.class.rep { Some(0) } else { None };
        }
        self.theta_of_member.get(w).copied()
    }

    /// Solves g_θ·h = h'·g_θ' with h' = ζ_θ(h) in the centralizer.
    pub fn zeta(&self, group: &Group, theta: usize, h: &Elem) -> (Elem, usize) {
        if self.trivial {
            return (h.clone(), 0);
        }
        let t = group.mul(&self.reps[theta], h);
        let theta2 = *self
            .coset_index
            .get(&t)
            .expect("element not covered by coset system");
        let hp = group.mul(&t, &group.inv(&self.reps[theta2]));
        debug_assert!(self.class.centralizer.contains(&hp));
        (hp, theta2)
    }
}

// ---------------------------------------------------------------------------
// Characters
// ---------------------------------------------------------------------------

/// A one-dimensional character. Abelian domains store an exponent vector
/// against the invariant-factor generators; free abelian domains store the
/// values on the standard generators; arbitrary finite domains store an
/// explicit value table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Character {
    Exponents { factors: Vec<u64>, exps: Vec<u64> },
    GeneratorValues { values: Vec<Scalar> },
    Table { values: BTreeMap<Elem, Scalar> },
}

impl Character {
    pub fn exponents(factors: Vec<u64>, exps: Vec<u64>) -> Character {
        assert_eq!(factors.len(), exps.len());
        let exps = exps.iter().zip(&factors).map(|(&e, &f)| e % f).collect();
        Character::Exponents { factors, exps }
    }

    pub fn trivial_abelian(factors: &[u64]) -> Character {
        Character::exponents(factors.to_vec(), vec![0; factors.len()])
    }

    pub fn generator_values(values: Vec<Scalar>) -> Character {
        assert!(values.iter().all(|v| !v.is_zero()));
        Character::GeneratorValues { values }
    }

    pub fn table(values: BTreeMap<Elem, Scalar>) -> Character {
        Character::Table { values }
    }

    pub fn eval(&self, x: &Elem) -> Scalar {
        match (self, x) {
            (Character::Exponents { factors, exps }, Elem::Vector(v)) => {
                assert_eq!(v.len(), factors.len());
                let n = factors.iter().fold(1u64, |a, &b| a.lcm(&b));
                let mut total: i64 = 0;
                for ((&e, &f), &xi) in exps.iter().zip(factors).zip(v.iter()) {
                    total += (n / f) as i64 * e as i64 * xi;
                }
                Scalar::zeta(n).pow(total.rem_euclid(n as i64))
            }
            (Character::GeneratorValues { values }, Elem::Vector(v)) => {
                assert_eq!(v.len(), values.len());
                let mut acc = Scalar::one();
                for (s, &e) in values.iter().zip(v.iter()) {
                    acc = acc.mul(&s.pow(e));
                }
                acc
            }
            (Character::Table { values }, x) => values
                .get(x)
                .cloned()
                .unwrap_or_else(|| panic!("character not defined at {x}")),
            _ => panic!("character domain does not match element kind"),
        }
    }

    /// Pointwise product of characters over the same domain.
    pub fn product(&self, other: &Character) -> Character {
        match (self, other) {
            (
                Character::Exponents { factors, exps },
                Character::Exponents {
                    factors: f2,
                    exps: e2,
                },
            ) => {
                assert_eq!(factors, f2);
                Character::exponents(
                    factors.clone(),
                    exps.iter().zip(e2).map(|(a, b)| a + b).collect(),
                )
            }
            (Character::GeneratorValues { values }, Character::GeneratorValues { values: v2 }) => {
                Character::generator_values(
                    values.iter().zip(v2).map(|(a, b)| a.mul(b)).collect(),
                )
            }
            (Character::Table { values }, Character::Table { values: v2 }) => {
                assert_eq!(values.len(), v2.len());
                Character::Table {
                    values: values
                        .iter()
                        .map(|(k, v)| (k.clone(), v.mul(&v2[k])))
                        .collect(),
                }
            }
            _ => panic!("character kinds do not match"),
        }
    }

    pub fn inverse(&self) -> Character {
        match self {
            Character::Exponents { factors, exps } => Character::exponents(
                factors.clone(),
                exps.iter()
                    .zip(factors)
                    .map(|(&e, &f)| (f - e % f) % f)
                    .collect(),
            ),
            Character::GeneratorValues { values } => Character::generator_values(
                values.iter().map(|v| v.inv().expect("unit value")).collect(),
            ),
            Character::Table { values } => Character::Table {
                values: values
                    .iter()
                    .map(|(k, v)| (k.clone(), v.inv().expect("unit value")))
                    .collect(),
            },
        }
    }

    /// Checks χ(gh) = χ(g)χ(h) on an explicit domain (used for table
    /// characters of centralizers inside Cayley groups).
    pub fn verify_homomorphism(&self, group: &Group, domain: &[Elem]) -> Result<()> {
        for a in domain {
            for b in domain {
                let lhs = self.eval(&group.mul(a, b));
                let rhs = self.eval(a).mul(&self.eval(b));
                if lhs != rhs {
                    return Err(Error::Config(format!(
                        "character is not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// All |G| characters of a finite abelian group, as exponent vectors in a
/// fixed enumeration order.
pub fn dual_group(group: &Group) -> Result<Vec<Character>> {
    let factors = group
        .abelian_factors()
        .ok_or_else(|| Error::Unsupported("dual_group needs an abelian group".into()))?
        .to_vec();
    let mut out = vec![vec![]];
    for &f in &factors {
        let mut next = Vec::with_capacity(out.len() * f as usize);
        for prefix in &out {
            for e in 0..f {
                let mut v = prefix.clone();
                v.push(e);
                next.push(v);
            }
        }
        out = next;
    }
    Ok(out
        .into_iter()
        .map(|exps| Character::exponents(factors.clone(), exps))
        .collect())
}

// ---------------------------------------------------------------------------
// Homomorphisms, automorphisms, isomorphisms
// ---------------------------------------------------------------------------

/// A bijective homomorphism between groups, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupMap {
    /// Image of each domain generator (abelian invariant-factor domains).
    AbelianImages(Vec<Elem>),
    /// Image of each element index (Cayley domains).
    Perm(Vec<usize>),
}

impl GroupMap {
    pub fn apply(&self, codomain: &Group, x: &Elem) -> Elem {
        match (self, x) {
            (GroupMap::AbelianImages(images), Elem::Vector(v)) => {
                assert_eq!(images.len(), v.len());
                let mut acc = codomain.identity();
                for (img, &e) in images.iter().zip(v.iter()) {
                    acc = codomain.mul(&acc, &codomain.pow(img, e));
                }
                acc
            }
            (GroupMap::Perm(p), Elem::Index(i)) => Elem::Index(p[*i]),
            _ => panic!("map kind does not match element kind"),
        }
    }

    pub fn identity(group: &Group) -> GroupMap {
        if let Some(factors) = group.abelian_factors() {
            let k = factors.len();
            GroupMap::AbelianImages(
                (0..k)
                    .map(|j| {
                        let mut v = vec![0i64; k];
                        v[j] = 1;
                        Elem::Vector(v)
                    })
                    .collect(),
            )
        } else {
            let n = group.order().expect("finite group") as usize;
            GroupMap::Perm((0..n).collect())
        }
    }
}

/// Complete list of isomorphisms G → H by brute force, in a deterministic
/// order. Groups must be finite with |G| within `bound`.
pub fn isomorphisms(g: &Group, h: &Group, bound: u64) -> Result<Vec<GroupMap>> {
    let (Some(ng), Some(nh)) = (g.order(), h.order()) else {
        return Err(Error::Unsupported(
            "isomorphism search needs finite groups".into(),
        ));
    };
    if ng > bound {
        return Err(Error::BoundExceeded(format!(
            "isomorphism search bound {bound} < |G| = {ng}"
        )));
    }
    if ng != nh {
        return Ok(Vec::new());
    }
    match (&g.kind, &h.kind) {
        (Kind::Abelian { factors }, Kind::Abelian { .. }) => {
            let mut stack: Vec<Vec<Elem>> = vec![Vec::new()];
            for &f in factors {
                let cands: Vec<Elem> = h
                    .elements()
                    .into_iter()
                    .filter(|e| f % h.elem_order(e).unwrap() == 0)
                    .collect();
                let mut next = Vec::new();
                for partial in &stack {
                    for c in &cands {
                        let mut v = partial.clone();
                        v.push(c.clone());
                        next.push(v);
                    }
                }
                stack = next;
            }
            let mut out = Vec::new();
            for images in stack {
                let map = GroupMap::AbelianImages(images);
                if is_bijective(g, h, &map) {
                    out.push(map);
                }
            }
            Ok(out)
        }
        (Kind::Cayley { .. }, Kind::Cayley { .. }) => cayley_isomorphisms(g, h),
        _ => Err(Error::Unsupported(
            "isomorphism search between mixed group kinds".into(),
        )),
    }
}

pub fn automorphisms(group: &Group) -> Result<Vec<GroupMap>> {
    automorphisms_with_bound(group, DEFAULT_AUTOMORPHISM_BOUND)
}

pub fn automorphisms_with_bound(group: &Group, bound: u64) -> Result<Vec<GroupMap>> {
    isomorphisms(group, group, bound)
}

fn is_bijective(g: &Group, h: &Group, map: &GroupMap) -> bool {
    let mut seen = BTreeSet::new();
    for x in g.elements() {
        if !seen.insert(map.apply(h, &x)) {
            return false;
        }
    }
    true
}

fn cayley_isomorphisms(g: &Group, h: &Group) -> Result<Vec<GroupMap>> {
    let n = g.order().unwrap() as usize;
    let id_idx = match g.identity() {
        Elem::Index(i) => i,
        _ => unreachable!(),
    };
    // Greedy generating sequence; every element gets an expression
    // (parent, generator position) discovered by closure.
    let mut gens: Vec<usize> = Vec::new();
    let mut expr: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut reached: Vec<usize> = vec![id_idx];
    let mut in_sub = vec![false; n];
    in_sub[id_idx] = true;
    while reached.len() < n {
        let next_gen = (0..n).find(|&i| !in_sub[i]).unwrap();
        gens.push(next_gen);
        let mut queue = reached.clone();
        while let Some(x) = queue.pop() {
            for (pos, &gen) in gens.iter().enumerate() {
                let y = match g.mul(&Elem::Index(x), &Elem::Index(gen)) {
                    Elem::Index(i) => i,
                    _ => unreachable!(),
                };
                if !in_sub[y] {
                    in_sub[y] = true;
                    expr[y] = Some((x, pos));
                    reached.push(y);
                    queue.push(y);
                }
            }
        }
    }
    let order = reached;
    let mut image_choices: Vec<Vec<usize>> = Vec::new();
    for &gen in &gens {
        let go = g.elem_order(&Elem::Index(gen));
        image_choices.push(
            (0..n)
                .filter(|&i| h.elem_order(&Elem::Index(i)) == go)
                .collect(),
        );
    }
    let mut out = Vec::new();
    let mut assignment = vec![0usize; gens.len()];
    cayley_search(
        g,
        h,
        &image_choices,
        &order,
        &expr,
        id_idx,
        0,
        &mut assignment,
        &mut out,
    );
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cayley_search(
    g: &Group,
    h: &Group,
    image_choices: &[Vec<usize>],
    order: &[usize],
    expr: &[Option<(usize, usize)>],
    id_idx: usize,
    pos: usize,
    assignment: &mut Vec<usize>,
    out: &mut Vec<GroupMap>,
) {
    if pos == image_choices.len() {
        let n = order.len();
        let mut map = vec![usize::MAX; n];
        let h_id = match h.identity() {
            Elem::Index(i) => i,
            _ => unreachable!(),
        };
        map[id_idx] = h_id;
        for &x in order {
            if x == id_idx {
                continue;
            }
            let (parent, gen_pos) = expr[x].expect("expression for non-identity element");
            map[x] = match h.mul(&Elem::Index(map[parent]), &Elem::Index(assignment[gen_pos])) {
                Elem::Index(i) => i,
                _ => unreachable!(),
            };
        }
        let mut seen = vec![false; n];
        for &m in &map {
            if seen[m] {
                return;
            }
            seen[m] = true;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = match g.mul(&Elem::Index(a), &Elem::Index(b)) {
                    Elem::Index(i) => i,
                    _ => unreachable!(),
                };
                let img = match h.mul(&Elem::Index(map[a]), &Elem::Index(map[b])) {
                    Elem::Index(i) => i,
                    _ => unreachable!(),
                };
                if map[ab] != img {
                    return;
                }
            }
        }
        out.push(GroupMap::Perm(map));
        return;
    }
    for &choice in &image_choices[pos] {
        assignment[pos] = choice;
        cayley_search(
            g,
            h,
            image_choices,
            order,
            expr,
            id_idx,
            pos + 1,
            assignment,
            out,
        );
    }
}

/// Builds a Cayley table from a permutation representation: elements are
/// permutations of {0..d-1} composed as (a·b)(x) = a(b(x)).
pub fn cayley_from_permutations(perms: &[Vec<usize>]) -> Result<Group> {
    let n = perms.len();
    let mut table = vec![vec![0usize; n]; n];
    for (i, a) in perms.iter().enumerate() {
        for (j, b) in perms.iter().enumerate() {
            let prod: Vec<usize> = (0..a.len()).map(|x| a[b[x]]).collect();
            let k = perms
                .iter()
                .position(|p| *p == prod)
                .ok_or_else(|| Error::Config("permutation set is not closed".into()))?;
            table[i][j] = k;
        }
    }
    Group::cayley(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn z2_classes() {
        let g = Group::abelian(vec![2]).unwrap();
        let classes = g.conjugacy_classes().unwrap();
        assert_eq!(classes.len(), 2);
        for c in &classes {
            assert_eq!(c.size(), 1);
            assert_eq!(c.centralizer.len(), 2);
        }
    }

    #[test]
    fn z4_singleton_classes() {
        let g = Group::abelian(vec![4]).unwrap();
        assert_eq!(g.conjugacy_classes().unwrap().len(), 4);
    }

    #[test]
    fn s3_classes_and_centralizers() {
        let g = fixtures::s3();
        let classes = g.conjugacy_classes().unwrap();
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        for c in &classes {
            assert_eq!(c.centralizer.len() * c.size(), 6);
        }
    }

    #[test]
    fn zeta_theta_exact_on_small_groups() {
        // g_θ·h = ζ_θ(h)·g_θ' exactly, for every θ and h.
        for g in [fixtures::s3(), fixtures::d4()] {
            for class in g.conjugacy_classes().unwrap() {
                let cs = CosetSystem::new(&g, &class);
                assert_eq!(cs.theta_count(), class.size(), "|Θ_C| = |C|");
                for theta in 0..cs.theta_count() {
                    for h in g.elements() {
                        let (hp, theta2) = cs.zeta(&g, theta, &h);
                        assert!(class.centralizer.contains(&hp));
                        let lhs = g.mul(&cs.rep(&g, theta), &h);
                        let rhs = g.mul(&hp, &cs.rep(&g, theta2));
                        assert_eq!(lhs, rhs);
                    }
                    let (hp, t2) = cs.zeta(&g, theta, &g.identity());
                    assert_eq!(hp, g.identity());
                    assert_eq!(t2, theta);
                }
            }
        }
    }

    #[test]
    fn theta_determined_by_class_member() {
        let g = fixtures::s3();
        for class in g.conjugacy_classes().unwrap() {
            let cs = CosetSystem::new(&g, &class);
            let mut seen = BTreeSet::new();
            for w in &class.members {
                let theta = cs.theta_of(w).unwrap();
                assert!(seen.insert(theta), "θ must be unique per member");
                let r = cs.rep(&g, theta);
                assert_eq!(g.mul(&g.mul(&g.inv(&r), &class.rep), &r), *w);
            }
        }
    }

    #[test]
    fn abelian_zeta_is_identity() {
        let g = Group::abelian(vec![6]).unwrap();
        for class in g.conjugacy_classes().unwrap() {
            let cs = CosetSystem::new(&g, &class);
            for h in g.elements() {
                let (hp, theta2) = cs.zeta(&g, 0, &h);
                assert_eq!(hp, h);
                assert_eq!(theta2, 0);
            }
        }
    }

    #[test]
    fn dual_group_small_cases() {
        let z2 = Group::abelian(vec![2]).unwrap();
        let chars = dual_group(&z2).unwrap();
        assert_eq!(chars.len(), 2);
        let g = Elem::Vector(vec![1]);
        let vals: Vec<Scalar> = chars.iter().map(|c| c.eval(&g)).collect();
        assert!(vals.contains(&Scalar::one()));
        assert!(vals.contains(&Scalar::int(-1)));

        let z3 = Group::abelian(vec![3]).unwrap();
        let chars = dual_group(&z3).unwrap();
        assert_eq!(chars.len(), 3);
        let g = Elem::Vector(vec![1]);
        let vals: BTreeSet<Scalar> = chars.iter().map(|c| c.eval(&g)).collect();
        let expected: BTreeSet<Scalar> =
            [Scalar::one(), Scalar::zeta(3), Scalar::zeta(3).pow(2)].into();
        assert_eq!(vals, expected);

        let z2z2 = Group::abelian(vec![2, 2]).unwrap();
        assert_eq!(dual_group(&z2z2).unwrap().len(), 4);
    }

    #[test]
    fn characters_multiplicative_and_closed() {
        let g = Group::abelian(vec![2, 4]).unwrap();
        let chars = dual_group(&g).unwrap();
        assert_eq!(chars.len(), 8);
        for a in &chars {
            for b in &chars {
                assert!(chars.contains(&a.product(b)));
            }
            for x in g.elements() {
                for y in g.elements() {
                    assert_eq!(
                        a.eval(&g.mul(&x, &y)),
                        a.eval(&x).mul(&a.eval(&y)),
                        "χ(gh) = χ(g)χ(h)"
                    );
                }
            }
        }
        // pairwise distinct
        for (i, a) in chars.iter().enumerate() {
            for b in chars.iter().skip(i + 1) {
                assert!(g.elements().iter().any(|x| a.eval(x) != b.eval(x)));
            }
        }
    }

    #[test]
    fn automorphism_counts() {
        let z2 = Group::abelian(vec![2]).unwrap();
        assert_eq!(automorphisms(&z2).unwrap().len(), 1);
        let z3 = Group::abelian(vec![3]).unwrap();
        assert_eq!(automorphisms(&z3).unwrap().len(), 2);
        let z2z2 = Group::abelian(vec![2, 2]).unwrap();
        assert_eq!(automorphisms(&z2z2).unwrap().len(), 6);
        let s3 = fixtures::s3();
        assert_eq!(automorphisms(&s3).unwrap().len(), 6);
    }

    #[test]
    fn automorphism_bound_is_enforced() {
        let big = Group::abelian(vec![128]).unwrap();
        assert!(matches!(automorphisms(&big), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn free_abelian_basics() {
        let g = Group::free_abelian(2).unwrap();
        let a = Elem::Vector(vec![1, -2]);
        let b = Elem::Vector(vec![3, 1]);
        assert_eq!(g.mul(&a, &b), Elem::Vector(vec![4, -1]));
        assert!(g.is_central(&a));
        assert!(g.conjugacy_classes().is_err());
        let chi = Character::generator_values(vec![Scalar::q(), Scalar::q().inv().unwrap()]);
        assert_eq!(chi.eval(&a), Scalar::q().pow(3));
    }

    #[test]
    fn element_literals_roundtrip() {
        for e in [Elem::Index(3), Elem::Vector(vec![1, 0, -2])] {
            assert_eq!(Elem::parse(&e.render()).unwrap(), e);
        }
    }
}
