use proptest::prelude::*;

use super::*;
use crate::cohomology::{extension_from_cocycle, g3_cocycle, heis_cocycle};
use crate::linalg::Matrix;
use crate::suite::{ordered_examples, random_law, valid_orders};

fn order(v: &[usize]) -> LexOrder {
    LexOrder::new(v.to_vec()).unwrap()
}

fn rows(m: &Matrix<f64>) -> Vec<Vec<f64>> {
    m.to_rows()
}

fn assert_matrix(m: &Matrix<f64>, want: &[&[f64]]) {
    let got = rows(m);
    for (g, w) in got.iter().zip(want) {
        for (a, b) in g.iter().zip(w.iter()) {
            assert!((a - b).abs() < 1e-12, "{got:?} vs {want:?}");
        }
    }
}

#[test]
fn group_level_examples() {
    let c = classify_group(&GroupLaw::Ec(3.0)).unwrap();
    assert_eq!(c.label(), ClassLabel::Heis);
    assert!(c.verified());
    assert_matrix(&c.witness.inverse().matrix(), &[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 6.0]]);

    let c = classify_group(&GroupLaw::Tk(-2.0)).unwrap();
    assert_eq!(c.label(), ClassLabel::G3);
    assert_matrix(&c.witness.matrix(), &[&[-0.5, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]]);
    assert!(c.verified());

    let c = classify_group(&GroupLaw::<f64>::Additive(3)).unwrap();
    assert_eq!(c.label(), ClassLabel::R3);
    assert!(c.witness.map.is_identity() && c.verified());
}

#[test]
fn group_level_families() {
    let cases: Vec<(GroupLaw<f64>, ClassLabel<f64>)> = vec![
        (GroupLaw::Additive(1), ClassLabel::R),
        (GroupLaw::Additive(2), ClassLabel::R2Abelian),
        (GroupLaw::SemidirectRR(-2.0), ClassLabel::Aff),
        (GroupLaw::SemidirectRR(0.0), ClassLabel::R2Abelian),
        (GroupLaw::Ec(0.0), ClassLabel::R3),
        (GroupLaw::Sut3, ClassLabel::Heis),
        (GroupLaw::GCd(2.0, 3.0), ClassLabel::ProdAff),
        (GroupLaw::GCd(0.0, 0.0), ClassLabel::R3),
        (GroupLaw::KCd(1.0, 2.0), ClassLabel::Sd2(0.5)),
        (GroupLaw::KCd(2.0, 1.0), ClassLabel::Sd2(0.5)),
        (GroupLaw::KCd(-2.0, 4.0), ClassLabel::Sd2(-0.5)),
        (GroupLaw::KCd(3.0, 3.0), ClassLabel::Sd2(1.0)),
        (GroupLaw::KCd(0.0, 2.0), ClassLabel::ProdAff),
        (GroupLaw::Tk(3.0), ClassLabel::G3),
        (GroupLaw::Tk(0.0), ClassLabel::Sd2(1.0)),
        (extension_from_cocycle(&heis_cocycle(-1.0)).unwrap(), ClassLabel::Heis),
        (extension_from_cocycle(&g3_cocycle(2.0)).unwrap(), ClassLabel::G3),
    ];
    for (law, want) in cases {
        let c = classify_group(&law).unwrap();
        assert_eq!(c.label(), want, "{law:?}");
        assert!(c.verified(), "{law:?}: {:?}", c.report);
        assert!(!c.label().is_ordered() || matches!(want, ClassLabel::R | ClassLabel::R2Abelian | ClassLabel::R3));
    }
}

#[test]
fn ordered_examples_from_the_catalog() {
    let c = classify_ordered(&GroupLaw::SemidirectRR(-2.0), &order(&[1, 0])).unwrap();
    assert_eq!(c.label(), ClassLabel::AffMinus);
    assert_matrix(&c.witness.matrix(), &[&[1.0, 0.0], &[0.0, 2.0]]);
    assert!(c.verified() && c.witness.flags.order_verified);

    let c = classify_ordered(&GroupLaw::GCd(2.0, 3.0), &order(&[0, 1, 2])).unwrap();
    assert_eq!(c.label(), ClassLabel::ProdAffOrderZyx(1));
    assert_matrix(&c.witness.matrix(), &[&[1.0, 0.0, 0.0], &[2.0, 3.0, 0.0], &[0.0, 0.0, 1.0]]);
    assert!(c.verified());

    let c = classify_ordered(&GroupLaw::Ec(-4.0), &order(&[0, 1, 2])).unwrap();
    assert_eq!(c.label(), ClassLabel::EMinus);
    assert_matrix(&c.witness.matrix(), &[&[4.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]]);

    let c = classify_ordered(&GroupLaw::KCd(2.0, 6.0), &order(&[0, 1, 2])).unwrap();
    assert_eq!(c.label(), ClassLabel::KPlus(3.0));
    let c = classify_ordered(&GroupLaw::KCd(-2.0, 3.0), &order(&[0, 1, 2])).unwrap();
    assert_eq!(c.label(), ClassLabel::KMinus(1.5));
    assert_eq!(c.label().alias().unwrap(), "K_{-1,1.5}");

    let c = classify_ordered(&GroupLaw::Tk(-3.0), &order(&[2, 1, 0])).unwrap();
    assert_eq!(c.label(), ClassLabel::TMinus);
    assert!(c.verified());
}

#[test]
fn rejects_orders_that_are_not_bi_invariant() {
    let e = classify_ordered(&GroupLaw::SemidirectRR(1.0), &order(&[0, 1])).unwrap_err();
    assert!(matches!(e, Error::Domain(_)));
    assert!(e.to_string().contains("translation fails"), "{e}");
    assert!(classify_ordered(&GroupLaw::Ec(1.0), &order(&[2, 0, 1])).is_err());
    assert!(classify_ordered(&GroupLaw::Ec(1.0), &order(&[0, 1])).is_err());
}

#[test]
fn representative_inputs_classify_with_verified_witnesses() {
    for (law, o) in ordered_examples() {
        let c = classify_ordered(&law, &o).unwrap_or_else(|e| panic!("{law:?} {o:?}: {e}"));
        assert!(c.verified(), "{law:?} {o:?}: {:?}", c.report);
    }
}

#[test]
fn canonical_inputs_are_fixed_points() {
    for dim in 1..=3 {
        for class in enumerate_canonical::<f64>(dim).unwrap() {
            let c = classify_ordered(&class.law, &class.order).unwrap();
            assert_eq!(c.label(), class.label);
            assert!(c.witness.map.is_identity(), "{:?}", class.label);
            assert!(c.verified());
        }
    }
}

#[test]
fn composed_witnesses_relate_any_two_heisenberg_charts() {
    for (c, d) in [(3.0, -0.5), (-2.0, 2.0), (0.25, 7.0)] {
        let a = classify_group(&GroupLaw::Ec(c)).unwrap();
        let b = classify_group(&GroupLaw::Ec(d)).unwrap();
        let w = a.witness.compose(&b.witness.inverse()).unwrap();
        assert_eq!((w.source.clone(), w.target.clone()), (GroupLaw::Ec(c), GroupLaw::Ec(d)));
        let r = verify_witness(&w, &SampleConfig::default(), &Tolerance::default());
        assert!(r.pass, "{r:?}");
        assert!(a.witness.compose(&a.witness).is_err());
    }
}

#[test]
fn corrupted_witness_fails() {
    let c = classify_ordered(&GroupLaw::GCd(2.0, 3.0), &order(&[0, 1, 2])).unwrap();
    let mut bad = c.witness.clone();
    bad.map = bad.map.with_linear_entry(1, 0, 1e-3).unwrap();
    let r = verify_witness(&bad, &SampleConfig::default(), &Tolerance::default());
    assert!(!r.pass && r.homomorphism.max_abs > 0.0);
    assert!(r.homomorphism.worst_at.is_some());
}

#[test]
fn chart_and_swap_witnesses() {
    let cfg = SampleConfig::default();
    let tol = Tolerance::default();
    let w = IsoWitness::new(GroupLaw::Sut3, GroupLaw::heis(), CoordinateMap::sut3_to_heis(), None).unwrap();
    let r = verify_witness(&w, &cfg, &Tolerance::new(1e-12, 1e-12).unwrap());
    assert!(r.pass && !w.map.is_linear());
    for c in [2.0, -3.0] {
        let m = Matrix::from_f64_rows(&[&[c, 0.0, 0.0], &[0.0, 0.0, 1.0], &[0.0, 1.0, 0.0]]).unwrap();
        let w = IsoWitness::new(GroupLaw::KCd(c, 1.0), GroupLaw::KCd(1.0 / c, 1.0), CoordinateMap::linear(m).unwrap(), None).unwrap();
        assert!(verify_witness(&w, &cfg, &tol).pass);
    }
    assert!(CoordinateMap::linear(Matrix::<f64>::zeros(2, 2)).is_err());
}

#[test]
fn map_composition_cancels() {
    let m = CoordinateMap::<f64>::sut3_to_heis();
    assert!(m.then(&m.inverse()).is_identity());
    let d = CoordinateMap::<f64>::diag(&[2.0, 1.0, 0.5]);
    assert!(d.then(&d.inverse()).is_identity());
    let p = CoordinateMap::<f64>::permutation(&[2, 0, 1]);
    assert_eq!(p.apply_raw(&[1.0, 2.0, 3.0]).coords(), &[3.0, 1.0, 2.0]);
}

#[test]
fn separation_examples() {
    let cfg = SampleConfig::default().with_count(300);
    let tol = Tolerance::default();
    let spec = |l: ClassLabel<f64>| {
        let c = l.realize();
        OrderedGroupSpec::new(c.law, c.order).unwrap()
    };
    let s = separating_invariant(&spec(ClassLabel::EPlus), &spec(ClassLabel::EMinus), &cfg, &tol);
    match s {
        Separation::Separated(e) => {
            assert_eq!(e.invariant, Invariant::CommutatorSign);
            assert_eq!((e.left, e.right), (Outcome::Sign(1), Outcome::Sign(-1)));
        }
        Separation::NotSeparated => panic!("E_plus and E_minus not separated"),
    }
    let s = separating_invariant(&spec(ClassLabel::AffPlus), &spec(ClassLabel::AffMinus), &cfg, &tol);
    assert_eq!(s.invariant(), Some(Invariant::ConjugationDirection));
    assert_eq!(separating_invariant(&spec(ClassLabel::EPlus), &spec(ClassLabel::EPlus), &cfg, &tol), Separation::NotSeparated);
    let s = separating_invariant(&spec(ClassLabel::R), &spec(ClassLabel::AffPlus), &cfg, &tol);
    assert_eq!(s.invariant(), Some(Invariant::Dimension));
}

#[test]
fn catalog_pairs_are_separated_except_same_sign_k_parameters() {
    let cfg = SampleConfig::default().with_count(100);
    let tol = Tolerance::default();
    for dim in 2..=3 {
        let classes = enumerate_canonical::<f64>(dim).unwrap();
        for (i, a) in classes.iter().enumerate() {
            for b in &classes[i + 1..] {
                let sa = OrderedGroupSpec::new(a.law.clone(), a.order.clone()).unwrap();
                let sb = OrderedGroupSpec::new(b.law.clone(), b.order.clone()).unwrap();
                // Conjugation only sees the sign of f, so K classes that agree
                // in both signs are told apart by the catalog alone.
                let same_k_family = match (a.label, b.label) {
                    (ClassLabel::KPlus(f), ClassLabel::KPlus(g)) | (ClassLabel::KMinus(f), ClassLabel::KMinus(g)) => {
                        f.signum() == g.signum()
                    }
                    _ => false,
                };
                let separated = separating_invariant(&sa, &sb, &cfg, &tol) != Separation::NotSeparated;
                assert_eq!(separated, !same_k_family, "{:?} vs {:?}", a.label, b.label);
                assert!(catalog_distinct(&a.label, &b.label));
            }
        }
    }
}

#[test]
fn catalog_sizes() {
    assert_eq!(enumerate_canonical::<f64>(1).unwrap().len(), 1);
    let names: Vec<&str> = enumerate_canonical::<f64>(2).unwrap().iter().map(|c| c.label.name()).collect();
    assert_eq!(names, ["R2_abelian", "Aff_plus", "Aff_minus"]);
    let three = enumerate_canonical::<f64>(3).unwrap();
    for name in ["R3", "E_plus", "E_minus", "T_plus", "T_minus", "K_plus", "K_minus"] {
        assert!(three.iter().any(|c| c.label.name() == name), "{name}");
    }
    assert!(enumerate_canonical::<f64>(4).is_err());
}

#[test]
fn decision_table_agrees_with_the_order_checker() {
    let probe = SampleConfig::default().with_count(256);
    let mut s = SampleConfig::default().with_seed(11).sampler();
    for _ in 0..60 {
        let law = random_law(&mut s);
        let valid = valid_orders(&law, &probe);
        let dim = law.dim();
        let all = crate::suite::valid_orders(&GroupLaw::Additive(dim), &probe);
        for o in all {
            let result = classify_ordered(&law, &o);
            assert_eq!(result.is_ok(), valid.contains(&o), "{law:?} {o:?}: {:?}", result.as_ref().err());
            if let Ok(c) = result {
                assert!(c.verified(), "{law:?} {o:?}");
            }
        }
    }
}

#[test]
fn one_parameter_subgroup_endpoints() {
    let h = OneParameterSubgroup::<f64>::new(1.5, -2.0, 0.7, 1.3);
    assert_eq!(h.at(0.0).coords(), &[0.0, 0.0, 0.0]);
    let one = h.at(1.0);
    assert!((one[0] - 0.7).abs() < 1e-15 && (one[1] - 1.5).abs() < 1e-14 && (one[2] + 2.0).abs() < 1e-14);
    let flat = OneParameterSubgroup::new(1.5, -2.0, 0.0, 1.3);
    assert_eq!(flat.at(2.0).coords(), &[0.0, 3.0, -4.0]);
    assert_eq!(h.law(), GroupLaw::KCd(1.3, 1.0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn one_parameter_subgroup_is_a_homomorphism(
        x in -3.0..3.0f64, y in -3.0..3.0f64, z in -3.0..3.0f64, d in -3.0..3.0f64,
        w in -1.0..1.0f64, v in -1.0..1.0f64,
    ) {
        let tol = Tolerance::<f64>::default();
        for z in [z, 0.0] {
            let h = OneParameterSubgroup::new(x, y, z, d);
            let rhs = h.law().mul_raw(h.at(w).coords(), h.at(v).coords());
            prop_assert!(tol.close_slices(h.at(w + v).coords(), rhs.coords()));
        }
    }

    #[test]
    fn ec_commutator_is_2ack(c in -3.0..3.0f64, a in -3.0..3.0f64, b in -3.0..3.0f64, k in -3.0..3.0f64, z in -3.0..3.0f64, l in -3.0..3.0f64) {
        let got = GroupLaw::Ec(c).comm_raw(&[a, b, z], &[0.0, k, l]);
        prop_assert!(Tolerance::<f64>::default().close_slices(got.coords(), &[0.0, 0.0, 2.0 * a * c * k]));
    }

    #[test]
    fn ordered_classification_is_idempotent(seed in any::<u64>()) {
        let mut s = SampleConfig::default().with_seed(seed).sampler();
        let law = random_law(&mut s);
        let orders = valid_orders(&law, &SampleConfig::default().with_count(128));
        prop_assume!(!orders.is_empty());
        let o = &orders[s.index(orders.len())];
        let cfg = SampleConfig::default().with_count(200);
        let first = classify_ordered_with(&law, o, &cfg, &Tolerance::default()).unwrap();
        let again = classify_ordered_with(&first.class.law, &first.class.order, &cfg, &Tolerance::default()).unwrap();
        prop_assert_eq!(again.label(), first.label());
        prop_assert!(again.witness.map.is_identity());
    }
}
