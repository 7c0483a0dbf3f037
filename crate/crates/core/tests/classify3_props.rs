mod common;

use common::*;
use proptest::prelude::*;
use qent_core::classify3::{
    correlation_tensors, ghz_witness_expectation, ghz_witness_value, slocc_classify,
    CanonicalThreeQubit, Witness,
};
use qent_core::measures::{concurrence_2q, tangle_pure};
use qent_core::qmat::partial_trace;

fn params() -> impl Strategy<Value = CanonicalThreeQubit> {
    prop::array::uniform5(0.0f64..1.0).prop_filter_map("zero vector", |raw| {
        CanonicalThreeQubit::normalized(raw, 0.0).ok()
    })
}

fn sq(x: f64) -> f64 {
    x * x
}

/// mu_max(T_x^T T_x) for the canonical real state, worked out by hand:
/// the larger of 4 l0^2 l4^2 and 2 l0^2 (k + sqrt(k^2 - 4 (l2 l3 - l1 l4)^2)), k = 1 - l0^2.
fn mu_max_closed(p: &CanonicalThreeQubit) -> f64 {
    let [l0, l1, l2, l3, l4] = p.lambda;
    let u = 4.0 * sq(l0 * l4);
    let k = 1.0 - sq(l0);
    let v = 2.0 * sq(l0) * (k + (sq(k) - 4.0 * sq(l2 * l3 - l1 * l4)).max(0.0).sqrt());
    u.max(v)
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn closed_form_matches_operator(p in params()) {
        for w in Witness::ALL {
            let a = ghz_witness_value(&p, w).unwrap();
            let b = ghz_witness_expectation(&p, w).unwrap();
            prop_assert!((a - b).abs() <= 1e-10, "{}: {} vs {}", w, a, b);
        }
    }

    #[test]
    fn s1_witnesses_nonnegative(l0 in 0.01f64..1.0, l4 in 0.01f64..1.0) {
        let p = CanonicalThreeQubit::normalized([l0, 0.0, 0.0, 0.0, l4], 0.0).unwrap();
        for w in Witness::ALL {
            prop_assert!(ghz_witness_value(&p, w).unwrap() >= -1e-9, "{}", w);
        }
    }

    #[test]
    fn correlation_eigenvalues_match_closed_forms(p in params()) {
        let t = correlation_tensors(&p.density()).unwrap();
        prop_assert!((t.mu_max_x().unwrap() - mu_max_closed(&p)).abs() <= 1e-10);
        prop_assert!(t.mu_min_y().unwrap().abs() <= 1e-10);
    }

    #[test]
    fn tangle_and_pair_concurrence(p in params()) {
        let [l0, _, _, l3, l4] = p.lambda;
        prop_assert!((tangle_pure(&p.state_vector()).unwrap().value - 4.0 * sq(l0 * l4)).abs() <= 1e-12);
        let ab = partial_trace(&p.density(), &[0, 1]).unwrap();
        prop_assert!((concurrence_2q(&ab).unwrap().value - 2.0 * l0 * l3).abs() <= 1e-9);
    }

    #[test]
    fn slocc_invariant_under_local_unitaries(rho in state(&[2, 2, 2]), ua in unitary(2), ub in unitary(2), uc in unitary(2)) {
        let before = slocc_classify(&rho).unwrap();
        let after = slocc_classify(&conjugate(&local(&[&ua, &ub, &uc]), &rho)).unwrap();
        for k in 0..3 {
            prop_assert!((before.lambdas[k] - after.lambdas[k]).abs() <= 1e-9);
        }
        prop_assert_eq!(before.outcome, after.outcome);
    }
}
