//! Shared concrete objects used by tests, the acceptance suite and the
//! shipped CLI configurations: small benchmark groups and the standard
//! ramification/character data exercised throughout the crate.

use std::collections::BTreeMap;

use crate::group::{cayley_from_permutations, Character, Elem, Group};
use crate::quantum_group::{cartan_to_esc, FlData};
use crate::scalar::Scalar;
use crate::structure::{Esc, EscItem, Rsc, RscClass};

/// The symmetric group S₃ as a Cayley group, elements ordered
/// e, (01), (02), (12), (012), (021) acting on {0,1,2}.
pub fn s3() -> Group {
    let perms: Vec<Vec<usize>> = vec![
        vec![0, 1, 2],
        vec![1, 0, 2],
        vec![2, 1, 0],
        vec![0, 2, 1],
        vec![1, 2, 0],
        vec![2, 0, 1],
    ];
    cayley_from_permutations(&perms).expect("S3 table")
}

/// The dihedral group of order 8 acting on square vertices.
pub fn d4() -> Group {
    let perms: Vec<Vec<usize>> = vec![
        vec![0, 1, 2, 3],
        vec![1, 2, 3, 0],
        vec![2, 3, 0, 1],
        vec![3, 0, 1, 2],
        vec![3, 2, 1, 0],
        vec![2, 1, 0, 3],
        vec![1, 0, 3, 2],
        vec![0, 3, 2, 1],
    ];
    cayley_from_permutations(&perms).expect("D4 table")
}

/// Z₂ with m parallel loops at each vertex: the ramification is carried by
/// the class of the identity, and the i-th loop (0-based) gets the trivial
/// character for i < n and the sign character otherwise. With x_i the loop
/// at 1 and y_i the loop at g this gives g·x_i = y_i and x_i·g = ±y_i.
pub fn example_116_rsc(m: usize, n: usize) -> Rsc {
    let group = Group::abelian(vec![2]).expect("Z2");
    let characters: Vec<Character> = (0..m)
        .map(|i| Character::exponents(vec![2], vec![if i < n { 0 } else { 1 }]))
        .collect();
    Rsc::central(group, vec![(Elem::Vector(vec![0]), characters)]).expect("valid RSC")
}

/// One arrow on the transposition class of S₃ with the sign character of
/// the order-2 centralizer. The coset map ζ_θ is genuinely nontrivial here.
pub fn s3_rsc() -> Rsc {
    let group = s3();
    let classes = group.conjugacy_classes().expect("finite");
    let transpositions = classes.iter().find(|c| c.size() == 3).unwrap().clone();
    let mut values = BTreeMap::new();
    for z in &transpositions.centralizer {
        let v = if *z == group.identity() {
            Scalar::one()
        } else {
            Scalar::int(-1)
        };
        values.insert(z.clone(), v);
    }
    let rsc_class = RscClass {
        class: transpositions,
        characters: vec![Character::table(values)],
    };
    Rsc::new(group, vec![rsc_class]).expect("valid RSC")
}

/// S₃ with one arrow on the transposition class (sign character of the
/// Z₂ centralizer) and one arrow on the 3-cycle class (a faithful
/// character of the Z₃ centralizer).
pub fn s3_rsc_both_classes() -> Rsc {
    let group = s3();
    let classes = group.conjugacy_classes().expect("finite");
    let transpositions = classes.iter().find(|c| c.size() == 3).unwrap().clone();
    let threecycles = classes.iter().find(|c| c.size() == 2).unwrap().clone();
    let mut sign = BTreeMap::new();
    for z in &transpositions.centralizer {
        let v = if *z == group.identity() {
            Scalar::one()
        } else {
            Scalar::int(-1)
        };
        sign.insert(z.clone(), v);
    }
    let mut omega = BTreeMap::new();
    let u = threecycles.rep.clone();
    for z in &threecycles.centralizer {
        let v = if *z == group.identity() {
            Scalar::one()
        } else if *z == u {
            Scalar::zeta(3)
        } else {
            Scalar::zeta(3).pow(2)
        };
        omega.insert(z.clone(), v);
    }
    Rsc::new(
        group,
        vec![
            RscClass {
                class: transpositions,
                characters: vec![Character::table(sign)],
            },
            RscClass {
                class: threecycles,
                characters: vec![Character::table(omega)],
            },
        ],
    )
    .expect("valid RSC")
}

/// The single-index ESC over Z_n with χ(g) = ζ_n on the generator g: the
/// data of the classical n²-dimensional example.
pub fn taft_esc(n: u64) -> Esc {
    let group = Group::abelian(vec![n]).expect("cyclic");
    let chi = Character::exponents(vec![n], vec![1]);
    Esc::new(
        group,
        vec![EscItem {
            g: Elem::Vector(vec![1]),
            chi,
        }],
    )
    .expect("valid ESC")
}

/// Rank-one Cartan data [[2]] with d = (1) over the generic parameter q.
pub fn sl2_fl() -> FlData {
    cartan_to_esc(&[vec![2]], &[1], &Scalar::q()).expect("rank-one Cartan data")
}

/// The rank-two Cartan matrix [[2,−1],[−1,2]] with d = (1,1) over the
/// generic parameter q.
pub fn sl3_fl() -> FlData {
    cartan_to_esc(&[vec![2, -1], vec![-1, 2]], &[1, 1], &Scalar::q())
        .expect("rank-two Cartan data")
}

/// Two-index ESC over Z₂×Z₂ with g₁, g₂ the standard generators and
/// characters χ₁ = (−1, 1), χ₂ = (1, −1): quantum weakly commutative with
/// N₁ = N₂ = 2 (a two-generator quantum linear space).
pub fn qls_esc() -> Esc {
    let group = Group::abelian(vec![2, 2]).expect("Z2xZ2");
    Esc::new(
        group,
        vec![
            EscItem {
                g: Elem::Vector(vec![1, 0]),
                chi: Character::exponents(vec![2, 2], vec![1, 0]),
            },
            EscItem {
                g: Elem::Vector(vec![0, 1]),
                chi: Character::exponents(vec![2, 2], vec![0, 1]),
            },
        ],
    )
    .expect("valid ESC")
}
