//! Cross-module consistency: the braided algebras must agree with the
//! diagrams of the quiver Hopf algebras they are isomorphic to, and the
//! biproduct must recover the multiple Taft algebra.

use quiver_hopf::bimodule::ArrowBimodule;
use quiver_hopf::braided::{Biproduct, BiproductElement, BraidedAlgebra, BraidedElement, YdModule};
use quiver_hopf::copath;
use quiver_hopf::fixtures;
use quiver_hopf::group::Elem;
use quiver_hopf::scalar::Scalar;
use quiver_hopf::semipath::{self, TensorWord};
use quiver_hopf::structure::Esc;
use quiver_hopf::taft::{PbwMonomial, TaftAlgebra, TaftElement};

/// Builds the tensor word E_{w₁}⊗…⊗E_{w_t} for ESC letter indices.
fn e_word(bm: &ArrowBimodule, letters: &[usize]) -> TensorWord {
    TensorWord {
        leading: bm.rsc.group.identity(),
        arrows: letters.iter().map(|&j| bm.e_arrow(j)).collect(),
    }
}

/// All letter words of the given length over an alphabet.
fn words(alphabet: usize, len: usize) -> Vec<Vec<usize>> {
    let mut level: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &level {
            for l in 0..alphabet {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        level = next;
    }
    level
}

/// The semi-path coinvariants are the quantum tensor algebra on the
/// inverted characters: products of the generators correspond letter by
/// letter, and the diagram comultiplication matches the quantum shuffle,
/// on every word of degree ≤ 3.
#[test]
fn semipath_coinvariants_realize_quantum_tensor_algebra() {
    for esc in [fixtures::taft_esc(4), fixtures::qls_esc(), fixtures::sl2_fl().esc] {
        let bm = ArrowBimodule::from_esc(&esc);
        let alg = BraidedAlgebra::tensor(YdModule::from_esc(&esc).inverted());
        let n = esc.len();
        for len in 0..=3usize {
            for w in words(n, len) {
                // products: concatenation on both sides with scalar 1
                let (s, word) = semipath::multiply_words(
                    &bm,
                    &e_word(&bm, &w),
                    &e_word(&bm, &[]),
                );
                assert!(s.is_one());
                assert_eq!(word.degree(), len);
                // comultiplication: diagram side vs quantum shuffle
                let diagram = semipath::diagram_comultiply(&bm, &e_word(&bm, &w), 4).unwrap();
                let shuffle = alg.comultiply_word(&w, 4).unwrap();
                // compare term by term through the letter correspondence
                let mut diagram_terms: Vec<((Vec<usize>, Vec<usize>), Scalar)> = diagram
                    .terms()
                    .map(|((l, r), c)| {
                        let lw: Vec<usize> = l
                            .arrows
                            .iter()
                            .map(|a| bm.esc_index_of(a.class, a.index).unwrap())
                            .collect();
                        let rw: Vec<usize> = r
                            .arrows
                            .iter()
                            .map(|a| bm.esc_index_of(a.class, a.index).unwrap())
                            .collect();
                        assert_eq!(l.leading, bm.rsc.group.identity());
                        assert_eq!(r.leading, bm.rsc.group.identity(), "right leg lands in kG-span");
                        ((lw, rw), c.clone())
                    })
                    .collect();
                diagram_terms.sort();
                let mut shuffle_terms: Vec<((Vec<usize>, Vec<usize>), Scalar)> = shuffle
                    .terms()
                    .map(|((l, r), c)| ((l.clone(), r.clone()), c.clone()))
                    .collect();
                shuffle_terms.sort();
                assert_eq!(diagram_terms, shuffle_terms, "word {w:?}");
            }
        }
    }
}

/// Sends r#g to the co-path product (image of r)·g and checks the
/// biproduct multiplication against the Taft multiplication on all pairs
/// of low-degree basis elements.
#[test]
fn biproduct_multiplication_matches_taft() {
    for esc in [fixtures::taft_esc(3), fixtures::qls_esc()] {
        let taft = TaftAlgebra::new(esc.clone()).unwrap();
        let module = YdModule::from_esc(&esc).inverted();
        let alg = BraidedAlgebra::new(module, quiver_hopf::braided::Flavor::Linear).unwrap();
        let bp = Biproduct::new(alg);

        // biproduct basis: (sorted word, group element); its Taft image is
        // the PBW monomial with the same data
        let to_taft = |x: &BiproductElement| -> TaftElement {
            let mut out = TaftElement::zero();
            for ((word, g), c) in x.terms() {
                let mut exps = vec![0u32; esc.len()];
                for &l in word {
                    exps[l] += 1;
                }
                // r # g ↦ r·g: in PBW terms, E^m·g = (∏χ^m)(g)·g·E^m
                let mut scalar = c.clone();
                for (j, &m) in exps.iter().enumerate() {
                    for _ in 0..m {
                        scalar = scalar.mul(&esc.items[j].chi.eval(g));
                    }
                }
                out.add_term(
                    PbwMonomial {
                        g: g.clone(),
                        exps,
                    },
                    scalar,
                );
            }
            out
        };

        let mut basis: Vec<BiproductElement> = Vec::new();
        for g in esc.group.elements() {
            basis.push(BiproductElement::from_term(vec![], g.clone(), Scalar::one()));
            for j in 0..esc.len() {
                basis.push(BiproductElement::from_term(vec![j], g.clone(), Scalar::one()));
            }
        }
        for a in &basis {
            for b in &basis {
                let lhs = to_taft(&bp.multiply(a, b));
                let rhs = taft.multiply(&to_taft(a), &to_taft(b));
                assert_eq!(lhs, rhs, "biproduct vs Taft product");
            }
        }
    }
}

/// The copath-side diagram of the multiple Taft algebra projects through
/// ω(u) = u·(leading)⁻¹; on E-power paths its comultiplication reproduces
/// the braided one (checked here on mixed two-letter fixtures).
#[test]
fn copath_diagram_matches_braided_shuffle_two_letters() {
    let esc = fixtures::qls_esc();
    let taft = TaftAlgebra::new(esc.clone()).unwrap();
    let bm = &taft.bimodule;
    let alg = taft.diagram_algebra().unwrap();
    for word in [vec![0usize, 1], vec![1, 0]] {
        // realize the product E_{w1}·E_{w2} in the co-path algebra
        let mut acc = copath::PathElement::vertex(esc.group.identity());
        for &l in &word {
            let arrow = copath::PathElement::from_path(quiver_hopf::quiver::Path::from_arrows(
                vec![bm.e_arrow(l)],
            ));
            acc = copath::multiply(bm, &acc, &arrow, 4).unwrap();
        }
        // comultiply and project the left leg onto the coinvariants
        let delta = copath::comultiply_element(&acc);
        let mut projected: Vec<(Vec<quiver_hopf::quiver::Path>, Scalar)> = Vec::new();
        for ((l, r), c) in delta.terms() {
            // ω on a path with source s is right multiplication by s⁻¹
            let s_inv = copath::PathElement::vertex(esc.group.inv(&l.source));
            let omega_l = copath::multiply(
                bm,
                &copath::PathElement::from_path(l.clone()),
                &s_inv,
                4,
            )
            .unwrap();
            for (lp, lc) in omega_l.terms() {
                projected.push((vec![lp.clone(), r.clone()], c.mul(lc)));
            }
        }
        // the braided shuffle of the same word
        let shuffle = alg.comultiply_word(&word, 4).unwrap();
        // spot-check the (1,1) component: coefficients of E_i ⊗ E_j terms
        for i in 0..2usize {
            for j in 0..2usize {
                let braided_coeff = shuffle
                    .terms()
                    .filter(|((l, r), _)| *l == vec![i] && *r == vec![j])
                    .map(|(_, c)| c.clone())
                    .fold(Scalar::zero(), |a, b| a.add(&b));
                let ei = quiver_hopf::quiver::Path::from_arrows(vec![bm.e_arrow(i)]);
                let ej_from = |g: &Elem| {
                    quiver_hopf::quiver::Path::from_arrows(vec![bm
                        .quiver
                        .arrow(bm.e_arrow(j).class, g, 0, bm.e_arrow(j).index)])
                };
                let copath_coeff = projected
                    .iter()
                    .filter(|(pair, _)| {
                        pair[0] == ei && pair[1].len() == 1 && {
                            // right leg is E_j translated to some source
                            let a = &pair[1].arrows[0];
                            let base = ej_from(&pair[1].source);
                            pair[1] == base && a.index == bm.e_arrow(j).index
                        }
                    })
                    .map(|(_, c)| c.clone())
                    .fold(Scalar::zero(), |a, b| a.add(&b));
                assert_eq!(braided_coeff, copath_coeff, "word {word:?}, ({i},{j})");
            }
        }
    }
}

/// Taft multiplication agrees with the co-path product on every product of
/// degree ≤ 3 PBW basis elements for the small cyclic fixtures.
#[test]
fn taft_embedding_consistency_degree_three() {
    for n in [2u64, 3, 4] {
        let taft = TaftAlgebra::new(fixtures::taft_esc(n)).unwrap();
        let basis = taft.enumerate_basis(4096).unwrap();
        let small: Vec<&PbwMonomial> = basis.iter().filter(|m| m.degree() <= 2).collect();
        for a in &small {
            for b in &small {
                if a.degree() + b.degree() > 3 {
                    continue;
                }
                let abstract_prod = taft.multiply(
                    &TaftElement::from_term((*a).clone(), Scalar::one()),
                    &TaftElement::from_term((*b).clone(), Scalar::one()),
                );
                let lhs = taft.element_to_copath(&abstract_prod).unwrap();
                let rhs = copath::multiply(
                    &taft.bimodule,
                    &taft.to_copath(a).unwrap(),
                    &taft.to_copath(b).unwrap(),
                    8,
                )
                .unwrap();
                assert_eq!(lhs, rhs, "n={n}, {a}·{b}");
            }
        }
    }
}

/// Vertices and arrows only generate combinations of vertices and E-power
/// paths: products of generators stay inside the realized PBW span.
#[test]
fn one_type_subalgebra_closure() {
    let esc = fixtures::taft_esc(3);
    let taft = TaftAlgebra::new(esc.clone()).unwrap();
    let basis = taft.enumerate_basis(4096).unwrap();
    let mut realized = std::collections::BTreeSet::new();
    for m in &basis {
        for (p, _) in taft.to_copath(m).unwrap().terms() {
            realized.insert(p.clone());
        }
    }
    // close generators under products of degree ≤ 3
    let bm = &taft.bimodule;
    let mut spanset: Vec<copath::PathElement> = Vec::new();
    for g in esc.group.elements() {
        spanset.push(copath::PathElement::vertex(g));
    }
    spanset.push(copath::PathElement::from_path(
        quiver_hopf::quiver::Path::from_arrows(vec![bm.e_arrow(0)]),
    ));
    let generators = spanset.clone();
    for _ in 0..2 {
        let mut next = Vec::new();
        for a in &spanset {
            for b in &generators {
                next.push(copath::multiply(bm, a, b, 6).unwrap());
            }
        }
        spanset.extend(next);
    }
    for e in &spanset {
        for (p, _) in e.terms() {
            assert!(
                realized.contains(p),
                "product escaped the PBW span: {p}"
            );
        }
    }
}

/// ESC isomorphism invariance: isomorphic ESC data yield Taft algebras
/// with equal dimensions and Nichols reports.
#[test]
fn isomorphic_esc_share_invariants() {
    let g = quiver_hopf::group::Group::abelian(vec![3]).unwrap();
    let chi1 = quiver_hopf::group::Character::exponents(vec![3], vec![1]);
    let chi2 = quiver_hopf::group::Character::exponents(vec![3], vec![2]);
    let a = Esc::new(
        g.clone(),
        vec![quiver_hopf::structure::EscItem {
            g: Elem::Vector(vec![1]),
            chi: chi1,
        }],
    )
    .unwrap();
    let b = Esc::new(
        g.clone(),
        vec![quiver_hopf::structure::EscItem {
            g: Elem::Vector(vec![2]),
            chi: chi2,
        }],
    )
    .unwrap();
    assert!(quiver_hopf::structure::esc_isomorphic(&a, &b, 64)
        .unwrap()
        .is_some());
    let ta = TaftAlgebra::new(a).unwrap();
    let tb = TaftAlgebra::new(b).unwrap();
    assert_eq!(ta.dimension(), tb.dimension());
}

/// The skew-primitive generators make every braided-element primitive
/// check consistent between the tensor algebra and its linear quotient in
/// low degree.
#[test]
fn braided_flavors_agree_on_degree_one() {
    let esc = fixtures::qls_esc();
    let t = BraidedAlgebra::tensor(YdModule::from_esc(&esc));
    let l = BraidedAlgebra::new(YdModule::from_esc(&esc), quiver_hopf::braided::Flavor::Linear)
        .unwrap();
    for i in 0..2usize {
        let x = BraidedElement::generator(i);
        assert!(t.primitive_defect(&x, 3).unwrap().is_zero());
        assert!(l.primitive_defect(&x, 3).unwrap().is_zero());
    }
}
