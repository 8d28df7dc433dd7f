mod common;

use common::{build, Table};
use hcpairs::hcp::examples::*;
use hcpairs::hcp::*;
use hcpairs::hopfcore::examples::{exterior_algebra, function_algebra, group_algebra, GroupTable};
use hcpairs::hopfcore::{
    check_conormal, dual, is_hopf_isomorphism, odd_primitives, verify_hopf, verify_super_commutative,
};
use hcpairs::dhcp::{build_h, examples as dhcp_examples};
use hcpairs::superlin::{Field, Matrix, SparseVec, Vector};
use hcpairs::Error;
use proptest::prelude::*;

const FIELDS: [Field; 3] = [Field::Rational, Field::Prime(3), Field::Prime(5)];

/// `k^{Z/2} (x) ∧(k w)` with the sign coaction, worked out by hand from the
/// smash coproduct, e.g. `Δ(e1 w) = -e0 w ⊗ e1 + e1 w ⊗ e0 + e0 ⊗ e1 w + e1 ⊗ e0 w`
/// since `(e0 - e1) e1 = -e1`.
fn z2_sign_oracle(field: Field) -> hcpairs::hopfcore::HopfSuperAlgebra {
    build(
        field,
        &Table {
            basis: &[("e0", 0), ("e1", 0), ("e0w", 1), ("e1w", 1)],
            unit: &[("e0", 1), ("e1", 1)],
            mult: &[
                ("e0", "e0", &[("e0", 1)]),
                ("e1", "e1", &[("e1", 1)]),
                ("e0", "e0w", &[("e0w", 1)]),
                ("e0w", "e0", &[("e0w", 1)]),
                ("e1", "e1w", &[("e1w", 1)]),
                ("e1w", "e1", &[("e1w", 1)]),
            ],
            comult: &[
                ("e0", &[("e0", "e0", 1), ("e1", "e1", 1)]),
                ("e1", &[("e0", "e1", 1), ("e1", "e0", 1)]),
                ("e0w", &[("e0w", "e0", 1), ("e1w", "e1", -1), ("e0", "e0w", 1), ("e1", "e1w", 1)]),
                ("e1w", &[("e0w", "e1", -1), ("e1w", "e0", 1), ("e0", "e1w", 1), ("e1", "e0w", 1)]),
            ],
            counit: &[("e0", 1)],
        },
    )
}

#[test]
fn associated_action_matches_the_defining_pairing() {
    for f in FIELDS {
        for (name, h) in corpus(f).unwrap() {
            let p = associated_dhcp(&h).unwrap();
            let zero = f.zero();
            // <w_k* <| c_g*, w_i> = sum <w_k*, (w_i)_0><c_g*, (w_i)_1>
            for k in 0..h.dim_w() {
                for g in 0..h.c.dim() {
                    let got = p.act(&p.x_vector(k), &g);
                    for i in 0..h.dim_w() {
                        let mut want = f.zero();
                        for (&(j, gg), c) in &h.coaction[i] {
                            if j == k && gg == g {
                                want += c;
                            }
                        }
                        assert_eq!(got.coeff(&i, &zero), want, "{name}");
                    }
                }
            }
        }
    }
}

#[test]
fn associated_pairs_of_small_examples() {
    let f = Field::Rational;
    let p = associated_dhcp(&z2_sign(f, 1).unwrap()).unwrap();
    // e1* is evaluation at the generator of Z/2
    assert_eq!(p.act(&p.x_vector(0), &1), Vector::singleton(0, f.from_i64(-1)));
    assert_eq!(p.act(&p.x_vector(0), &0), p.x_vector(0));
    let c = function_algebra(f, &GroupTable::cyclic(3)).unwrap();
    let p = associated_dhcp(&HcpData::trivial(c.clone(), vec!["a".into(), "b".into()]).unwrap()).unwrap();
    for g in 0..3 {
        for x in 0..2 {
            // the basis of J = kZ/3 is grouplike, so the trivial action is the identity
            assert_eq!(p.act(&p.x_vector(x), &g), p.x_vector(x));
        }
    }
    let p = associated_dhcp(&trivial_hcp(f, 2).unwrap()).unwrap();
    assert_eq!(p.j().hopf().dim(), 1);
    assert!(p.bracket(0, 1).is_zero());
}

#[test]
fn verify_hcp_examples() {
    for f in FIELDS {
        for (name, h) in corpus(f).unwrap() {
            let r = verify_hcp(&h);
            assert!(r.passed(), "{name}: {}", r.to_table());
        }
    }
    let r = verify_hcp(&non_coassociative(Field::Rational).unwrap());
    let c = r.first_failure().unwrap();
    assert_eq!(c.name, "comodule-coassociativity");
    assert_eq!(c.witness.as_ref().unwrap().at, vec!["w1"]);
    for p in [3, 5] {
        let r = verify_hcp(&non_colinear(p).unwrap());
        assert!(!r.get("bracket-colinear").unwrap().passed);
        assert!(!r.get("pair-bracket-equivariance").unwrap().passed);
    }
}

#[test]
fn colinearity_agrees_with_equivariance_on_all_brackets_over_f3() {
    // every symmetric bracket into k t* on the two-dimensional unipotent comodule
    let base = truncated_unipotent(3).unwrap();
    let f = base.field();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let mut h = base.clone();
                let t = |n: i64| Vector::singleton(1, f.one()).scaled(&f.from_i64(n));
                h.bracket = vec![vec![t(a), t(b)], vec![t(b), t(c)]];
                let r = verify_hcp(&h);
                assert_eq!(
                    r.get("bracket-colinear").unwrap().passed,
                    r.get("pair-bracket-equivariance").unwrap().passed,
                    "{a} {b} {c}"
                );
                // only the zero bracket survives here
                assert_eq!(r.passed(), (a, b, c) == (0, 0, 0), "{a} {b} {c}");
            }
        }
    }
}

#[test]
fn build_a_small_cases() {
    let f = Field::Rational;
    let a = build_a(&trivial_hcp(f, 1).unwrap()).unwrap();
    assert_eq!(a.dim(), 2);
    let ext = exterior_algebra(f, &["w1"]).unwrap();
    assert!(is_hopf_isomorphism(&ext, &a.hopf, &Matrix::identity(f, 2)).passed());
    assert_eq!(a.hopf.names(), &["1", "1⊗w1"]);

    let a = build_a(&z2_sign(f, 1).unwrap()).unwrap();
    assert_eq!(a.dim(), 4);
    let r = is_hopf_isomorphism(&z2_sign_oracle(f), &a.hopf, &Matrix::identity(f, 4));
    assert!(r.passed(), "{}", r.to_table());

    let a = build_a(&trivial_hcp(f, 3).unwrap()).unwrap();
    let ext = exterior_algebra(f, &["w1", "w2", "w3"]).unwrap();
    assert!(is_hopf_isomorphism(&ext, &a.hopf, &Matrix::identity(f, 8)).passed());
}

#[test]
fn build_a_on_the_corpus() {
    for f in FIELDS {
        for (name, h) in corpus(f).unwrap() {
            let a = build_a(&h).unwrap();
            assert_eq!(a.dim(), h.c.dim() << h.dim_w(), "{name}");
            assert_eq!(a.annihilator_dim, a.dim());
            assert!(verify_hopf(&a.hopf).passed(), "{name}");
            assert!(verify_super_commutative(&a.hopf).passed, "{name}");
            // the graded structures pair correctly, independently of A
            assert!(verify_graded_pairing(&h, 2).passed(), "{name}");
            // coinvariants of W give odd primitives of A
            if !h.coinvariants().is_empty() {
                assert!(!odd_primitives(&a.hopf).unwrap().is_empty(), "{name}");
            }
        }
    }
}

#[test]
fn build_a_rejects_invalid_pairs() {
    let h = non_coassociative(Field::Rational).unwrap();
    assert!(matches!(build_a(&h), Err(Error::InvalidPair(_))));
    assert!(matches!(build_a(&non_colinear(3).unwrap()), Err(Error::InvalidPair(_))));
}

#[test]
fn psi_prime_examples() {
    let f = Field::Rational;
    let h = trivial_hcp(f, 1).unwrap();
    let a = build_a(&h).unwrap();
    let psi = psi_prime(&h, &a, &[0]).unwrap();
    assert!(psi.matrix.is_identity());
    assert!(psi.report.passed());
    assert!(matches!(psi_prime(&h, &a, &[1]), Err(Error::InvalidStructure(_))));

    // with zero bracket the order does not matter
    let h = trivial_hcp(f, 2).unwrap();
    let a = build_a(&h).unwrap();
    let psi = psi_prime(&h, &a, &[1, 0]).unwrap();
    assert!(psi.report.passed(), "{}", psi.report.to_table());
    assert!(psi.matrix.is_identity());

    // with [w1*, w2*] = t* the two orders give different isomorphisms
    let h = truncated_bracket(3).unwrap();
    let a = build_a(&h).unwrap();
    let (p01, p10) = (psi_prime(&h, &a, &[0, 1]).unwrap(), psi_prime(&h, &a, &[1, 0]).unwrap());
    assert!(p01.report.passed() && p10.report.passed());
    assert!(p01.matrix.is_identity());
    assert_ne!(p01.matrix, p10.matrix);
}

#[test]
fn psi_prime_keeps_degree_zero_in_c() {
    for (name, h) in corpus(Field::Prime(5)).unwrap() {
        let a = build_a(&h).unwrap();
        let psi = psi_prime(&h, &a, &(0..h.dim_w()).collect::<Vec<_>>()).unwrap();
        assert!(psi.report.passed(), "{name}");
        assert_eq!(psi.matrix.nrows(), psi.matrix.ncols());
        for (i, k) in a.labels.iter().enumerate() {
            if k.1.is_empty() {
                assert!(psi.matrix.column(i).keys().all(|&r| a.labels[r].1.is_empty()), "{name}");
            }
        }
    }
}

#[test]
fn pairing_with_h() {
    let f = Field::Rational;
    let h = trivial_hcp(f, 1).unwrap();
    let a = build_a(&h).unwrap();
    let pr = pair_h_a(&associated_dhcp(&h).unwrap(), &a).unwrap();
    assert_eq!((pr.matrix.nrows(), pr.matrix.ncols()), (2, 2));
    assert_eq!(pr.matrix.get(0, 0), f.one());
    assert!(pr.report.passed());

    let h = z2_sign(f, 1).unwrap();
    let a = build_a(&h).unwrap();
    let pr = pair_h_a(&associated_dhcp(&h).unwrap(), &a).unwrap();
    assert_eq!(pr.matrix.rank(), 4);
    assert!(pr.report.passed(), "{}", pr.report.to_table());

    for fl in FIELDS {
        for (name, h) in corpus(fl).unwrap() {
            let a = build_a(&h).unwrap();
            let pr = pair_h_a(&associated_dhcp(&h).unwrap(), &a).unwrap();
            assert!(pr.report.passed(), "{name}: {}", pr.report.to_table());
        }
    }
    // a pair of the wrong size
    let a = build_a(&z2_sign(f, 1).unwrap()).unwrap();
    let p = associated_dhcp(&trivial_hcp(f, 1).unwrap()).unwrap();
    assert!(matches!(pair_h_a(&p, &a), Err(Error::Dimension(_))));
}

#[test]
fn recover_small_cases() {
    let f = Field::Rational;
    let rec = recover_hcp(&exterior_algebra(f, &["w"]).unwrap()).unwrap();
    assert_eq!(rec.hcp.c.dim(), 1);
    assert_eq!(rec.hcp.w_names, vec!["w"]);
    assert_eq!(rec.hcp.coaction[0], SparseVec::singleton((0, 0), f.one()));
    assert!(rec.hcp.bracket[0][0].is_zero());

    let rec = recover_hcp(&function_algebra(f, &GroupTable::s3()).unwrap()).unwrap();
    assert_eq!(rec.hcp.dim_w(), 0);
    assert_eq!(rec.hcp.c.dim(), 6);

    let rec = recover_hcp(&z2_sign_oracle(f)).unwrap();
    assert_eq!(rec.hcp.c.dim(), 2);
    assert_eq!(rec.hcp.dim_w(), 1);
    assert!(verify_hcp(&rec.hcp).passed());

    assert!(matches!(
        recover_hcp(&group_algebra(f, &GroupTable::s3()).unwrap()),
        Err(Error::NotCommutative(_))
    ));
}

#[test]
fn roundtrips_on_the_corpus() {
    for f in FIELDS {
        for (name, h) in corpus(f).unwrap() {
            let (m, r) = roundtrip_hcp(&h).unwrap();
            assert!(r.passed(), "{name}: {}", r.to_table());
            assert_eq!(m.f.nrows(), h.c.dim());
            let a = build_a(&h).unwrap();
            assert!(verify_hcp(&recover_hcp(&a.hopf).unwrap().hcp).passed(), "{name}");
            let beta = beta_roundtrip(&a.hopf).unwrap();
            assert!(beta.report.passed(), "{name}: {}", beta.report.to_table());
        }
    }
}

#[test]
fn beta_on_algebras_not_built_here() {
    let f = Field::Rational;
    let ext = exterior_algebra(f, &["x", "y"]).unwrap();
    let b = beta_roundtrip(&ext).unwrap();
    assert!(b.matrix.is_identity());
    assert!(b.report.passed());

    let fun = function_algebra(f, &GroupTable::s3()).unwrap();
    let b = beta_roundtrip(&fun).unwrap();
    assert!(b.matrix.is_identity());

    let b = beta_roundtrip(&z2_sign_oracle(f)).unwrap();
    assert_eq!(b.matrix.rank(), 4);
    assert!(b.report.passed());

    // duals of H(J, V) are super-commutative
    for p in [dhcp_examples::z2_pair(f), dhcp_examples::trivial_pair(f)] {
        let a = dual(&build_h(&p.unwrap()).unwrap());
        let b = beta_roundtrip(&a).unwrap();
        assert!(b.report.passed(), "{}", b.report.to_table());
    }
    let a = dual(&build_h(&dhcp_examples::divided_power_pair(Field::Prime(3)).unwrap()).unwrap());
    assert!(beta_roundtrip(&a).unwrap().report.passed());
}

#[test]
fn unipotence_flags() {
    let f = Field::Rational;
    let u = unipotence_check(&exterior_algebra(f, &["w"]).unwrap()).unwrap();
    assert_eq!(u, Unipotence { a_irreducible: true, abar_irreducible: true });
    let u = unipotence_check(&z2_sign_oracle(f)).unwrap();
    assert_eq!(u, Unipotence { a_irreducible: false, abar_irreducible: false });
    let mut seen = (false, false);
    for fl in FIELDS {
        for (name, h) in corpus(fl).unwrap() {
            let u = unipotence_check(&build_a(&h).unwrap().hopf).unwrap();
            assert!(u.agree(), "{name}");
            if u.a_irreducible {
                seen.0 = true;
            } else {
                seen.1 = true;
            }
        }
    }
    assert_eq!(seen, (true, true));
}

fn identity_morphism(h: &HcpData) -> HcpMorphism {
    let f = h.field();
    HcpMorphism {
        f: Matrix::identity(f, h.c.dim()),
        g: Matrix::identity(f, h.dim_w()),
    }
}

#[test]
fn morphisms() {
    for (name, h) in corpus(Field::Prime(3)).unwrap() {
        assert!(is_hcp_isomorphism(&h, &h, &identity_morphism(&h)).unwrap().passed(), "{name}");
    }
    // scaling W breaks a nonzero bracket
    let h = truncated_bracket(3).unwrap();
    let mut m = identity_morphism(&h);
    m.g = m.g.mul(&Matrix::identity(h.field(), 2)).transpose();
    m.g.set(0, 0, h.field().from_i64(2));
    let r = check_hcp_morphism(&h, &h, &m).unwrap();
    assert_eq!(r.first_failure().unwrap().name, "dual-bracket");
    // on a zero bracket the same scaling is fine
    let h = truncated_unipotent(3).unwrap();
    let mut m = identity_morphism(&h);
    m.g = Matrix::identity(h.field(), 2).mul(&Matrix::identity(h.field(), 2));
    m.g.set(0, 0, h.field().from_i64(2));
    m.g.set(1, 1, h.field().from_i64(2));
    assert!(check_hcp_morphism(&h, &h, &m).unwrap().passed());
}

/// Conormality of `A(f, g)` straight from the adjoint coaction on `A`.
fn conormal_directly(src: &HcpData, tgt: &HcpData, m: &HcpMorphism) -> bool {
    let (a1, a2) = (build_a(src).unwrap(), build_a(tgt).unwrap());
    let map = build_a_morphism(src, &a1, tgt, &a2, &m.f, &m.g).unwrap();
    assert!(hcpairs::hopfcore::check_hopf_morphism(&a1.hopf, &a2.hopf, &map).passed());
    check_conormal(&a1.hopf, &a2.hopf, &map).passed
}

#[test]
fn conormal_quotients() {
    let f = Field::Rational;
    let src = z2_mixed(f).unwrap();
    // killing the coinvariant w2
    let tgt = z2_sign(f, 1).unwrap();
    let m = HcpMorphism {
        f: Matrix::identity(f, 2),
        g: Matrix::from_rows(f, 2, vec![Vector::singleton(0, f.one())]),
    };
    assert!(check_hcp_morphism(&src, &tgt, &m).unwrap().passed());
    let r = check_conormal_hcp(&src, &tgt, &m).unwrap();
    assert!(r.passed(), "{}", r.to_table());
    assert!(conormal_directly(&src, &tgt, &m));

    // killing the sign vector w1 leaves a quotient on which Z/2 acts by -1
    let tgt = HcpData::trivial(function_algebra(f, &GroupTable::cyclic(2)).unwrap(), vec!["w2".into()]).unwrap();
    let m = HcpMorphism {
        f: Matrix::identity(f, 2),
        g: Matrix::from_rows(f, 2, vec![Vector::singleton(1, f.one())]),
    };
    assert!(check_hcp_morphism(&src, &tgt, &m).unwrap().passed());
    let r = check_conormal_hcp(&src, &tgt, &m).unwrap();
    assert!(!r.passed());
    assert!(!conormal_directly(&src, &tgt, &m));

    // not surjective on W
    let m = HcpMorphism {
        f: Matrix::identity(f, 2),
        g: Matrix::zeros(f, 1, 2),
    };
    assert!(matches!(check_conormal_hcp(&src, &tgt, &m), Err(Error::NotInjective(_))));
}

#[test]
fn short_exact_sequences() {
    let f = Field::Rational;
    let point = trivial_hcp(f, 0).unwrap();
    let h = z2_sign(f, 1).unwrap();
    let unit = HcpMorphism {
        f: Matrix::from_columns(f, 2, &[h.c.unit().clone()]),
        g: Matrix::zeros(f, 1, 0),
    };
    let r = check_short_exact_hcp([&point, &h, &h], &unit, &identity_morphism(&h)).unwrap();
    assert!(r.passed(), "{}", r.to_table());

    let counit = HcpMorphism {
        f: Matrix::from_rows(f, 2, vec![Vector::singleton(0, f.one())]),
        g: Matrix::zeros(f, 0, 1),
    };
    assert!(check_hcp_morphism(&h, &point, &counit).unwrap().passed());
    let r = check_short_exact_hcp([&point, &h, &point], &unit, &counit).unwrap();
    assert!(!r.passed());

    // ∧(k w2) -> A(z2-mixed) -> A(z2-sign)
    let mixed = z2_mixed(f).unwrap();
    let ext = HcpData::trivial(group_algebra(f, &GroupTable::cyclic(1)).unwrap(), vec!["w2".into()]).unwrap();
    let first = HcpMorphism {
        f: Matrix::from_columns(f, 2, &[mixed.c.unit().clone()]),
        g: Matrix::from_columns(f, 2, &[Vector::singleton(1, f.one())]),
    };
    let second = HcpMorphism {
        f: Matrix::identity(f, 2),
        g: Matrix::from_rows(f, 2, vec![Vector::singleton(0, f.one())]),
    };
    assert!(check_hcp_morphism(&ext, &mixed, &first).unwrap().passed());
    assert!(check_hcp_morphism(&mixed, &h, &second).unwrap().passed());
    let r = check_short_exact_hcp([&ext, &mixed, &h], &first, &second).unwrap();
    assert!(r.passed(), "{}", r.to_table());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn psi_prime_for_any_order(order in Just((0..3).collect::<Vec<usize>>()).prop_shuffle()) {
        let h = z2_sign(Field::Rational, 3).unwrap();
        let a = build_a(&h).unwrap();
        let psi = psi_prime(&h, &a, &order).unwrap();
        prop_assert!(psi.report.passed());
    }

    #[test]
    fn sign_comodules(signs in proptest::collection::vec(any::<bool>(), 1..=3), p in prop_oneof![Just(0u64), Just(3), Just(5)]) {
        let f = if p == 0 { Field::Rational } else { Field::Prime(p) };
        let h = group_comodule(f, &GroupTable::cyclic(2), &|g| {
            let m = signs.len();
            (0..m).map(|i| (0..m).map(|j| if i != j { 0 } else if g == 1 && signs[i] { -1 } else { 1 }).collect()).collect()
        }).unwrap();
        let a = build_a(&h).unwrap();
        prop_assert_eq!(a.dim(), 2 << signs.len());
        prop_assert!(roundtrip_hcp(&h).unwrap().1.passed());
        let trivial = signs.iter().filter(|s| !**s).count();
        prop_assert_eq!(h.coinvariants().len(), trivial);
        prop_assert_eq!(!odd_primitives(&a.hopf).unwrap().is_empty(), trivial > 0);
    }
}
