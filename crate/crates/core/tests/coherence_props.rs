mod common;

use common::*;
use proptest::prelude::*;
use qent_core::coherence::{
    classify_by_coherence, coherence_product_rule, ensemble_state, marginal_product_check,
    mixed_biseparable_bound, separable_bound, tensor_coherence, Ensemble, EnsembleTerm, Factor,
};
use qent_core::detect::Outcome;
use qent_core::qmat::DensityMatrix;

fn factor(parties: &[usize], state: DensityMatrix) -> Factor {
    Factor {
        parties: parties.to_vec(),
        state,
    }
}

fn pure(v: &[qent_core::qmat::C64], dims: &[usize]) -> DensityMatrix {
    DensityMatrix::from_pure(v, dims).unwrap()
}

proptest! {
    #![proptest_config(config(500))]

    #[test]
    fn product_rule_is_exact(a in state(&[2]), b in state(&[3]), c in state(&[3]), d in state(&[2, 2])) {
        prop_assert!((coherence_product_rule(a.mat(), b.mat()) - tensor_coherence(a.mat(), b.mat())).abs() <= 1e-12);
        prop_assert!((coherence_product_rule(c.mat(), d.mat()) - tensor_coherence(c.mat(), d.mat())).abs() <= 1e-12);
    }
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn term_order_does_not_change_verdicts(
        a in state(&[2]), bc in state(&[2, 2]), b in state(&[2]), ac in state(&[2, 2]), q in 0.05f64..0.95,
    ) {
        let t1 = EnsembleTerm { weight: q, factors: vec![factor(&[0], a), factor(&[1, 2], bc)] };
        let t2 = EnsembleTerm { weight: 1.0 - q, factors: vec![factor(&[1], b), factor(&[0, 2], ac)] };
        let e1 = Ensemble::new(vec![2, 2, 2], vec![t1.clone(), t2.clone()]).unwrap();
        let e2 = Ensemble::new(vec![2, 2, 2], vec![t2, t1]).unwrap();
        let rho = ensemble_state(&e1).unwrap();
        prop_assert!(rho.mat().max_diff(ensemble_state(&e2).unwrap().mat()) <= 1e-14);
        let v1 = mixed_biseparable_bound(&e1, &rho).unwrap();
        let v2 = mixed_biseparable_bound(&e2, &rho).unwrap();
        prop_assert_eq!(v1.outcome, v2.outcome);
        prop_assert!((v1.evidence - v2.evidence).abs() <= 1e-12);
        // the ensemble is a genuine decomposition of rho, so the bound holds
        prop_assert_eq!(v1.outcome, Outcome::ConditionSatisfied);
    }

    #[test]
    fn pure_products_saturate_the_separable_bound(a in vector(2), b in vector(3), c in vector(2)) {
        let (fa, fb, fc) = (pure(&a, &[2]), pure(&b, &[3]), pure(&c, &[2]));
        let e = Ensemble::new(
            vec![2, 3, 2],
            vec![EnsembleTerm { weight: 1.0, factors: vec![factor(&[0], fa), factor(&[1], fb), factor(&[2], fc)] }],
        )
        .unwrap();
        let rho = ensemble_state(&e).unwrap();
        let v = separable_bound(&e, &rho).unwrap();
        prop_assert_eq!(v.outcome, Outcome::ConditionSatisfied);
        prop_assert!(v.evidence.abs() <= 1e-12);
        let m = marginal_product_check(&rho, &[0]).unwrap();
        prop_assert_eq!(m.outcome, Outcome::ConditionSatisfied);
    }

    #[test]
    fn classification_input_order(a in state(&[2]), b in state(&[2]), c in state(&[2]), bc in state(&[2, 2])) {
        let sep = Ensemble::new(
            vec![2, 2, 2],
            vec![EnsembleTerm { weight: 1.0, factors: vec![factor(&[0], a.clone()), factor(&[1], b), factor(&[2], c)] }],
        )
        .unwrap();
        let cut = Ensemble::new(
            vec![2, 2, 2],
            vec![EnsembleTerm { weight: 1.0, factors: vec![factor(&[0], a), factor(&[1, 2], bc)] }],
        )
        .unwrap();
        let rho = ensemble_state(&sep).unwrap();
        let x = classify_by_coherence(&rho, &[sep.clone(), cut.clone()]).unwrap();
        let y = classify_by_coherence(&rho, &[cut, sep]).unwrap();
        prop_assert_eq!(x.genuine, y.genuine);
        prop_assert_eq!(x.checks[0].outcome, y.checks[1].outcome);
        prop_assert_eq!(x.checks[1].outcome, y.checks[0].outcome);
        prop_assert!(!x.genuine);
    }
}
