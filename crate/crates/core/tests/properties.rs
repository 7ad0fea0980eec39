use proptest::prelude::*;

use qhsa_core::document::{parse_structure, serialize_structure, StructureDocument};
use qhsa_core::fixtures;
use qhsa_core::suite::{run_suites, Suite};
use qhsa_core::twist::{
    check_opposite_twist, compare_structures, opposite_structure, twist_composition_check, twist_structure, twisted_alpha,
    twisted_beta, twisted_phi, twisted_r, Twistor,
};
use qhsa_core::{FieldSpec, QhsaStructure, Scalar, TensorElement};

/// Even words of `H (x) H` whose legs both lie in the kernel of the counit.
fn nilpotent_slots(name: &str) -> Vec<[usize; 2]> {
    match name {
        "ext" => vec![[1, 1]],
        "h2" | "h2r" => vec![[1, 1]],
        "h2ext" => vec![[1, 1], [1, 3], [3, 1], [3, 3], [2, 2]],
        _ => unreachable!(),
    }
}

fn random_twistor(h: &QhsaStructure, slots: &[[usize; 2]], coeffs: &[(i64, i64)]) -> Option<Twistor> {
    let field = h.algebra().field();
    let terms = slots
        .iter()
        .zip(coeffs)
        .map(|(w, (n, d))| (w.to_vec(), Scalar::from_ratio(field, *n, *d)));
    let n = TensorElement::from_terms(h.algebra(), 2, terms).unwrap();
    Twistor::new(&h.unit(2) + &n, None).ok()
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-3i64..=3, 1i64..=3), 5)
}

fn fixture() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["ext", "h2", "h2r", "h2ext"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn twisted_structures_pass_every_suite(name in fixture(), c in coeffs()) {
        let h = fixtures::structure(name).unwrap();
        let slots = nilpotent_slots(name);
        prop_assume!(c.iter().take(slots.len()).any(|(n, _)| *n != 0));
        let Some(f) = random_twistor(&h, &slots, &c) else { return Ok(()) };
        let report = run_suites(&twist_structure(&h, &f), &Suite::defaults());
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn opposite_commutes_with_twisting(name in fixture(), c in coeffs()) {
        let h = fixtures::structure(name).unwrap();
        let Some(f) = random_twistor(&h, &nilpotent_slots(name), &c) else { return Ok(()) };
        let report = check_opposite_twist(&h, &f);
        prop_assert!(report.failed_ids().is_empty(), "{}", report);
    }

    #[test]
    fn twists_compose(name in fixture(), c in coeffs(), d in coeffs()) {
        let h = fixtures::structure(name).unwrap();
        let slots = nilpotent_slots(name);
        let (Some(f), Some(g)) = (random_twistor(&h, &slots, &c), random_twistor(&h, &slots, &d)) else {
            return Ok(())
        };
        let report = twist_composition_check(&h, &f, &g);
        prop_assert!(report.failed_ids().is_empty(), "{}", report);
    }

    #[test]
    fn rescaling_a_twistor(name in fixture(), c in coeffs(), n in 1i64..5, d in 1i64..5, neg in any::<bool>()) {
        let h = fixtures::structure(name).unwrap();
        let Some(f) = random_twistor(&h, &nilpotent_slots(name), &c) else { return Ok(()) };
        let s = Scalar::from_ratio(h.algebra().field(), if neg { -n } else { n }, d);
        let sf = f.scaled(&s).unwrap();
        prop_assert_eq!(twisted_phi(&h, &sf), twisted_phi(&h, &f));
        prop_assert_eq!(twisted_alpha(&h, &sf), twisted_alpha(&h, &f).scale(&s.inverse().unwrap()));
        prop_assert_eq!(twisted_beta(&h, &sf), twisted_beta(&h, &f).scale(&s));
        if let Some(r) = h.r() {
            prop_assert_eq!(twisted_r(r, &sf), twisted_r(r, &f));
        }
    }

    #[test]
    fn twisted_documents_roundtrip(name in fixture(), c in coeffs()) {
        let h = fixtures::structure(name).unwrap();
        let Some(f) = random_twistor(&h, &nilpotent_slots(name), &c) else { return Ok(()) };
        let t = twist_structure(&h, &f);
        let text = serialize_structure(&StructureDocument::from_structure(&t));
        let back = parse_structure(&text).unwrap();
        prop_assert_eq!(serialize_structure(&back), text);
        let again = back.to_structure().unwrap();
        prop_assert!(compare_structures(&again, &t, "rt").failed_ids().is_empty());
    }

    #[test]
    fn cyclotomic_field_axioms(a in prop::collection::vec(-4i64..=4, 4), b in prop::collection::vec(-4i64..=4, 4), c in prop::collection::vec(-4i64..=4, 4)) {
        let field = FieldSpec::Cyclotomic(5);
        let mk = |v: &[i64]| {
            let text = format!("[{}]", v.iter().map(i64::to_string).collect::<Vec<_>>().join(", "));
            Scalar::parse(&text, field).unwrap()
        };
        let (x, y, z) = (mk(&a), mk(&b), mk(&c));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert!((&x * &x.inverse().unwrap()).is_one());
        }
        prop_assert_eq!(Scalar::parse(&x.to_string(), field).unwrap(), x);
    }
}

#[test]
fn opposite_structures_pass_every_suite() {
    for name in fixtures::POSITIVE {
        let h = fixtures::structure(name).unwrap();
        let report = run_suites(&opposite_structure(&h).unwrap(), &Suite::defaults());
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn drinfeld_battery_with_unnormalized_alpha() {
    use qhsa_core::drinfeld::DrinfeldData;
    use qhsa_core::twist::prime_structure;
    for name in ["ext", "h2", "h2ext"] {
        let h = fixtures::structure(name).unwrap();
        let field = h.algebra().field();
        let c = Scalar::from_ratio(field, -2, 3);
        let scaled = Twistor::trivial(&h).scaled(&c).unwrap();
        let t = twist_structure(&h, &scaled);
        let ea = t.eps(t.alpha());
        assert_eq!(ea, c.inverse().unwrap());
        let report = run_suites(&t, &Suite::defaults());
        assert!(report.passed(), "{report}");
        // the strict twist reproduces alpha' only up to eps(alpha)^2
        let data = DrinfeldData::compute(&t).unwrap();
        let strict = twist_structure(&t, &data.strict_twistor().unwrap());
        let prime = prime_structure(&t).unwrap();
        assert_ne!(strict.alpha(), prime.alpha());
        assert_eq!(strict.alpha(), &prime.alpha().scale(&(&ea * &ea)));
    }
}
