//! Hopf quivers: for a ramification datum r on G there are exactly r_C
//! parallel arrows x → y whenever x⁻¹y lies in the class C. Paths compose
//! right to left (a_n ⋯ a_1), a 0-path is a vertex, and thin splits
//! distribute the arrows of an n-path over n+m positions.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{ConjClass, CosetSystem, Elem, Group};
use crate::structure::Rsc;

/// Default bound on n+m in thin-split enumeration.
pub const DEFAULT_THIN_SPLIT_BOUND: u64 = 12;

/// One ramified class of a Hopf quiver, with its coset representative
/// system and arrow multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverClass {
    pub coset: CosetSystem,
    pub arrow_count: usize,
}

/// The Hopf quiver (Q, G, r). Vertices are the group elements; arrows are
/// generated on demand for infinite (free abelian) groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfQuiver {
    pub group: Group,
    pub classes: Vec<QuiverClass>,
}

/// An arrow a^{(i)}_{y,x}: source x, target y = x·(g_θ⁻¹·u(C)·g_θ), class
/// index, coset index θ determined by x⁻¹y, and parallel index i ∈ I_C(r).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub source: Elem,
    pub target: Elem,
    pub class: usize,
    pub theta: usize,
    pub index: usize,
}

impl HopfQuiver {
    /// Builds the quiver for a ramification given as (class member,
    /// multiplicity) pairs; members are resolved to their classes.
    pub fn new(group: Group, ramification: &[(Elem, usize)]) -> Result<HopfQuiver> {
        let mut classes = Vec::new();
        if group.is_cayley() {
            let all = group.conjugacy_classes()?;
            for (w, r) in ramification {
                if *r == 0 {
                    continue;
                }
                let class = all
                    .iter()
                    .find(|c| c.members.contains(w))
                    .ok_or_else(|| Error::Config(format!("no conjugacy class contains {w}")))?;
                classes.push(QuiverClass {
                    coset: CosetSystem::new(&group, class),
                    arrow_count: *r,
                });
            }
        } else {
            for (w, r) in ramification {
                if *r == 0 {
                    continue;
                }
                let w = group.normalize(w);
                let class = ConjClass::central(&group, w);
                classes.push(QuiverClass {
                    coset: CosetSystem::new(&group, &class),
                    arrow_count: *r,
                });
            }
        }
        Ok(HopfQuiver { group, classes })
    }

    /// The quiver of an RSC, reusing its classes and multiplicities.
    pub fn from_rsc(rsc: &Rsc) -> HopfQuiver {
        let classes = rsc
            .classes
            .iter()
            .map(|rc| QuiverClass {
                coset: CosetSystem::new(&rsc.group, &rc.class),
                arrow_count: rc.characters.len(),
            })
            .collect();
        HopfQuiver {
            group: rsc.group.clone(),
            classes,
        }
    }

    /// The arrow a^{(i)}_{y,x} for y = x·w with w in the given class.
    pub fn arrow(&self, class: usize, source: &Elem, theta: usize, index: usize) -> Arrow {
        let qc = &self.classes[class];
        assert!(index < qc.arrow_count, "arrow index out of range");
        let g = &self.group;
        let w = if qc.coset.is_trivial() {
            qc.coset.class.rep.clone()
        } else {
            let r = qc.coset.rep(g, theta);
            g.mul(&g.mul(&g.inv(&r), &qc.coset.class.rep), &r)
        };
        Arrow {
            source: source.clone(),
            target: g.mul(source, &w),
            class,
            theta,
            index,
        }
    }

    /// The arrows from x to y: empty unless x⁻¹y lies in a ramified class,
    /// in which case there are exactly r_C of them.
    pub fn arrows_between(&self, source: &Elem, target: &Elem) -> Vec<Arrow> {
        let w = self.group.mul(&self.group.inv(source), target);
        let mut out = Vec::new();
        for (ci, qc) in self.classes.iter().enumerate() {
            if let Some(theta) = qc.coset.theta_of(&w) {
                for i in 0..qc.arrow_count {
                    out.push(self.arrow(ci, source, theta, i));
                }
            }
        }
        out
    }

    /// All arrows with the given source.
    pub fn arrows_from(&self, source: &Elem) -> Vec<Arrow> {
        let mut out = Vec::new();
        for (ci, qc) in self.classes.iter().enumerate() {
            for theta in 0..qc.coset.theta_count() {
                for i in 0..qc.arrow_count {
                    out.push(self.arrow(ci, source, theta, i));
                }
            }
        }
        out
    }

    /// All arrows of a finite quiver.
    pub fn all_arrows(&self) -> Vec<Arrow> {
        self.group
            .elements()
            .iter()
            .flat_map(|x| self.arrows_from(x))
            .collect()
    }

    /// All paths of exactly the given length starting anywhere (finite
    /// quivers).
    pub fn paths_of_length(&self, len: usize) -> Vec<Path> {
        let mut paths: Vec<Path> = self
            .group
            .elements()
            .into_iter()
            .map(Path::vertex)
            .collect();
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &paths {
                for a in self.arrows_from(p.target()) {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path {
                        source: p.source.clone(),
                        arrows,
                    });
                }
            }
            paths = next;
        }
        paths
    }

    pub fn render_arrow(&self, a: &Arrow) -> String {
        format!("a{}[{}<-{}]", a.index + 1, a.target.render(), a.source.render())
    }

    pub fn render_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return p.source.render();
        }
        let parts: Vec<String> = p
            .arrows
            .iter()
            .rev()
            .map(|a| self.render_arrow(a))
            .collect();
        parts.join("·")
    }
}

/// A path a_n ⋯ a_1 with t(a_k) = s(a_{k+1}); `arrows[0]` is a_1, the first
/// arrow applied. A path of length 0 is the vertex `source`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub source: Elem,
    pub arrows: Vec<Arrow>,
}

impl Path {
    pub fn vertex(v: Elem) -> Path {
        Path {
            source: v,
            arrows: Vec::new(),
        }
    }

    pub fn from_arrows(arrows: Vec<Arrow>) -> Path {
        assert!(!arrows.is_empty());
        for k in 1..arrows.len() {
            assert_eq!(
                arrows[k - 1].target, arrows[k].source,
                "arrows do not compose"
            );
        }
        Path {
            source: arrows[0].source.clone(),
            arrows,
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self) -> &Elem {
        self.arrows.last().map(|a| &a.target).unwrap_or(&self.source)
    }

    /// The subpath a_k ⋯ a_1 of the first k arrows (a vertex when k = 0).
    pub fn prefix(&self, k: usize) -> Path {
        if k == 0 {
            Path::vertex(self.source.clone())
        } else {
            Path {
                source: self.source.clone(),
                arrows: self.arrows[..k].to_vec(),
            }
        }
    }

    /// The subpath a_n ⋯ a_{k+1} of the remaining arrows (a vertex when
    /// k = n).
    pub fn suffix(&self, k: usize) -> Path {
        if k == self.arrows.len() {
            Path::vertex(self.target().clone())
        } else {
            Path {
                source: self.arrows[k].source.clone(),
                arrows: self.arrows[k..].to_vec(),
            }
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            return write!(f, "{}", self.source.render());
        }
        let parts: Vec<String> = self
            .arrows
            .iter()
            .rev()
            .map(|a| {
                format!(
                    "a{}[{}<-{}]",
                    a.index + 1,
                    a.target.render(),
                    a.source.render()
                )
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// A 0/1 vector d ∈ D_n^{n+m}; `bit(i)` is d_i for positions i = 1..n+m,
/// position 1 rightmost in the display convention (d_{n+m}, …, d_1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinSplit {
    bits: Vec<bool>,
}

impl ThinSplit {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// d_i, 1-based.
    pub fn bit(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    /// d(i) = Σ_{j ≤ i} d_j, 1-based; d(0) = 0.
    pub fn ones_up_to(&self, i: usize) -> usize {
        self.bits[..i].iter().filter(|&&b| b).count()
    }

    pub fn ones(&self) -> usize {
        self.ones_up_to(self.bits.len())
    }

    /// The complementary split d̄.
    pub fn complement(&self) -> ThinSplit {
        ThinSplit {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }
}

impl fmt::Display for ThinSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .bits
            .iter()
            .rev()
            .map(|&b| if b { "1".into() } else { "0".to_string() })
            .collect();
        write!(f, "({})", s.join(","))
    }
}

/// All C(n+m, n) thin splits with exactly n ones, in lexicographic order of
/// the displayed tuple (d_{n+m}, …, d_1).
pub fn thin_splits(n: usize, m: usize) -> Result<Vec<ThinSplit>> {
    thin_splits_with_bound(n, m, DEFAULT_THIN_SPLIT_BOUND)
}

pub fn thin_splits_with_bound(n: usize, m: usize, bound: u64) -> Result<Vec<ThinSplit>> {
    let total = n + m;
    if total as u64 > bound {
        return Err(Error::BoundExceeded(format!(
            "thin split length {total} exceeds bound {bound}"
        )));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << total) {
        if mask.count_ones() as usize != n {
            continue;
        }
        // Position i carries mask bit i−1, so the displayed tuple
        // (d_{n+m}, …, d_1) is the binary expansion of `mask` and the
        // output is lexicographically ordered.
        let mut bits = vec![false; total];
        for (k, bit) in bits.iter_mut().enumerate() {
            *bit = (mask >> k) & 1 == 1;
        }
        out.push(ThinSplit { bits });
    }
    Ok(out)
}

/// A position of a thin-split application: either an arrow of the path or
/// a vertex standing in for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitEntry {
    Vertex(Elem),
    Arrow(Arrow),
}

/// (dA)_i = a_{d(i)} at positions with d_i = 1 and t(a_{d(i)}) (with
/// t(a_0) = s(A)) at positions with d_i = 0. Returned in position order
/// 1..n+m.
pub fn apply_thin_split(d: &ThinSplit, path: &Path) -> Result<Vec<SplitEntry>> {
    if d.ones() != path.len() {
        return Err(Error::Argument(format!(
            "thin split has {} ones but the path has length {}",
            d.ones(),
            path.len()
        )));
    }
    let mut out = Vec::with_capacity(d.len());
    for i in 1..=d.len() {
        let k = d.ones_up_to(i);
        if d.bit(i) {
            out.push(SplitEntry::Arrow(path.arrows[k - 1].clone()));
        } else if k == 0 {
            out.push(SplitEntry::Vertex(path.source.clone()));
        } else {
            out.push(SplitEntry::Vertex(path.arrows[k - 1].target.clone()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;

    fn z2_quiver(loops: usize, cross: usize) -> HopfQuiver {
        let g = Group::abelian(vec![2]).unwrap();
        let one = Elem::Vector(vec![0]);
        let gen = Elem::Vector(vec![1]);
        HopfQuiver::new(g, &[(one, loops), (gen, cross)]).unwrap()
    }

    #[test]
    fn z2_loop_quiver() {
        // m loops at each vertex, no cross arrows
        let q = z2_quiver(3, 0);
        let one = Elem::Vector(vec![0]);
        let gen = Elem::Vector(vec![1]);
        assert_eq!(q.arrows_between(&one, &one).len(), 3);
        assert_eq!(q.arrows_between(&gen, &gen).len(), 3);
        assert!(q.arrows_between(&one, &gen).is_empty());
        assert!(q.arrows_between(&gen, &one).is_empty());
    }

    #[test]
    fn z2_cross_quiver() {
        let q = z2_quiver(0, 1);
        let one = Elem::Vector(vec![0]);
        let gen = Elem::Vector(vec![1]);
        assert_eq!(q.arrows_between(&one, &gen).len(), 1);
        assert_eq!(q.arrows_between(&gen, &one).len(), 1);
        assert!(q.arrows_between(&one, &one).is_empty());
    }

    #[test]
    fn arrowless_quiver() {
        let q = z2_quiver(0, 0);
        assert!(q.all_arrows().is_empty());
        assert_eq!(q.paths_of_length(0).len(), 2);
        assert!(q.paths_of_length(1).is_empty());
    }

    #[test]
    fn arrow_count_matches_ramification_on_s3() {
        let g = crate::fixtures::s3();
        let classes = g.conjugacy_classes().unwrap();
        let transposition = classes.iter().find(|c| c.size() == 3).unwrap().rep.clone();
        let threecycle = classes.iter().find(|c| c.size() == 2).unwrap().rep.clone();
        let q = HopfQuiver::new(g.clone(), &[(transposition, 2), (threecycle, 1)]).unwrap();
        for x in g.elements() {
            for y in g.elements() {
                let w = g.mul(&g.inv(&x), &y);
                let expected = if classes.iter().any(|c| c.size() == 3 && c.members.contains(&w)) {
                    2
                } else if classes.iter().any(|c| c.size() == 2 && c.members.contains(&w)) {
                    1
                } else {
                    0
                };
                assert_eq!(q.arrows_between(&x, &y).len(), expected);
            }
        }
    }

    #[test]
    fn thin_split_counts_and_order() {
        let s = thin_splits(1, 1).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].to_string(), "(0,1)");
        assert_eq!(s[1].to_string(), "(1,0)");
        assert_eq!(thin_splits(2, 1).unwrap().len(), 3);
        assert_eq!(thin_splits(2, 2).unwrap().len(), 6);
        for (n, m) in [(3usize, 4usize), (5, 2), (0, 4)] {
            let all = thin_splits(n, m).unwrap();
            let binom = {
                let mut b = 1usize;
                for i in 0..n {
                    b = b * (n + m - i) / (i + 1);
                }
                b
            };
            assert_eq!(all.len(), binom);
            // no duplicates
            for (i, a) in all.iter().enumerate() {
                for b in all.iter().skip(i + 1) {
                    assert_ne!(a, b);
                }
            }
        }
        assert!(thin_splits(8, 8).is_err());
    }

    #[test]
    fn apply_split_examples() {
        let q = z2_quiver(1, 0);
        let one = Elem::Vector(vec![0]);
        let a = q.arrows_between(&one, &one)[0].clone();
        let p = Path::from_arrows(vec![a.clone()]);

        // all-ones: the path itself
        let d = thin_splits(1, 0).unwrap();
        let applied = apply_thin_split(&d[0], &p).unwrap();
        assert_eq!(applied, vec![SplitEntry::Arrow(a.clone())]);

        // (1,0): position 1 is a vertex with d(1) = 0 → s(a)
        let d = thin_splits(1, 1).unwrap();
        // d[1] = (1,0): d_1 = 0, d_2 = 1
        let applied = apply_thin_split(&d[1], &p).unwrap();
        assert_eq!(
            applied,
            vec![
                SplitEntry::Vertex(one.clone()),
                SplitEntry::Arrow(a.clone())
            ]
        );
        // (0,1): arrow then target vertex
        let applied = apply_thin_split(&d[0], &p).unwrap();
        assert_eq!(
            applied,
            vec![
                SplitEntry::Arrow(a.clone()),
                SplitEntry::Vertex(one.clone())
            ]
        );
    }

    #[test]
    fn split_positions_carry_arrows_in_order() {
        let q = z2_quiver(2, 0);
        let one = Elem::Vector(vec![0]);
        let arrows = q.arrows_between(&one, &one);
        let p = Path::from_arrows(vec![arrows[0].clone(), arrows[1].clone()]);
        for d in thin_splits(2, 2).unwrap() {
            let applied = apply_thin_split(&d, &p).unwrap();
            let seen: Vec<&Arrow> = applied
                .iter()
                .filter_map(|e| match e {
                    SplitEntry::Arrow(a) => Some(a),
                    _ => None,
                })
                .collect();
            assert_eq!(seen.len(), 2);
            assert_eq!(*seen[0], p.arrows[0]);
            assert_eq!(*seen[1], p.arrows[1]);
        }
    }

    #[test]
    fn free_abelian_quiver_paths() {
        let g = Group::free_abelian(1).unwrap();
        let gen = Elem::Vector(vec![1]);
        let q = HopfQuiver::new(g, &[(gen.clone(), 1)]).unwrap();
        let from_zero = q.arrows_from(&Elem::Vector(vec![0]));
        assert_eq!(from_zero.len(), 1);
        assert_eq!(from_zero[0].target, gen);
    }
}
