use proptest::prelude::*;

use superop::graded::{
    graded_abs, graded_spectrum, iota, is_epsilon_positive, is_superpositive, random_graded, twisted_product,
    GradedOperator, GradedSpace, RandomKind,
};
use superop::linalg::{self, real_matrix};
use superop::norms::{derived_matrix_norm, sigma_strong_norm, strong_norm};
use superop::{Cx, Operator32};

fn space(p: usize, q: usize, swap: bool) -> GradedSpace {
    if swap { GradedSpace::swap(p.max(1)).unwrap() } else { GradedSpace::diag(p, q).unwrap() }
}

fn spaces() -> impl Strategy<Value = GradedSpace> {
    (0usize..=3, 0usize..=3, any::<bool>())
        .prop_filter("nonempty", |(p, q, _)| p + q > 0)
        .prop_map(|(p, q, s)| space(p, q, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn iota_turns_the_twisted_product_into_the_ordinary_one(sp in spaces(), seed in any::<u64>()) {
        let x = random_graded::<f64>(RandomKind::Generic, sp, seed);
        let y = random_graded::<f64>(RandomKind::Generic, sp, seed ^ 1);
        let lhs = iota(&twisted_product(&x, &y, Cx::new(-1.0, 0.0)).unwrap());
        let rhs = iota(&x).data() * iota(&y).data();
        prop_assert!(linalg::max_abs(&(lhs.data() - rhs)) <= 1e-12 * (1.0 + x.op_norm() * y.op_norm()));
    }

    #[test]
    fn superinvolution_is_an_involution(sp in spaces(), seed in any::<u64>()) {
        let x = random_graded::<f64>(RandomKind::Generic, sp, seed);
        prop_assert_eq!(x.superinvolve().superinvolve(), x);
    }

    #[test]
    fn iota_norm_estimate(sp in spaces(), seed in any::<u64>()) {
        let x = random_graded::<f64>(RandomKind::Generic, sp, seed);
        let (n, ni) = (x.op_norm(), iota(&x).op_norm());
        prop_assert!(0.5 * n <= ni + 1e-10 && ni <= 2.0 * n + 1e-10);
    }

    #[test]
    fn strong_norm_of_hermitian_is_operator_norm(sp in spaces(), seed in any::<u64>()) {
        let h = random_graded::<f64>(RandomKind::Hermitian, sp, seed);
        prop_assert!((strong_norm(&h, 1e-12).unwrap().value - h.op_norm()).abs() <= 1e-6);
    }

    #[test]
    fn derived_norm_is_operator_norm(sp in spaces(), seed in any::<u64>()) {
        let x = random_graded::<f64>(RandomKind::Generic, sp, seed);
        prop_assert!((derived_matrix_norm(&x, 1e-12).unwrap() - x.op_norm()).abs() <= 1e-5);
    }

    #[test]
    fn sampled_cones_pass_their_tests(sp in spaces(), seed in any::<u64>()) {
        prop_assert!(is_superpositive(&random_graded::<f64>(RandomKind::Superpositive, sp, seed), 1e-9));
        prop_assert!(is_epsilon_positive(&random_graded::<f64>(RandomKind::EpsPositive, sp, seed), 1e-9));
    }
}

fn separating() -> GradedOperator<f64> {
    GradedOperator::new(GradedSpace::diag(1, 1).unwrap(), real_matrix(&[&[1.0, 1.0], &[-1.0, -1.0]])).unwrap()
}

#[test]
fn cone_separation() {
    let x = separating();
    assert!(is_epsilon_positive(&x, 1e-9));
    assert!(!is_superpositive(&x, 1e-9));
    let mut spec: Vec<f64> = graded_spectrum(&x).unwrap().iter().map(|z| z.re).collect();
    spec.sort_by(f64::total_cmp);
    assert!((spec[0] - 0.0).abs() <= 1e-10 && (spec[1] - 2.0).abs() <= 1e-10);
    let a = graded_abs(&x);
    let want = linalg::identity::<f64>(2) * Cx::new(2f64.sqrt(), 0.0);
    assert!(linalg::max_abs(&(a.data() - want)) <= 1e-9);
    assert!((strong_norm(&x, 1e-12).unwrap().value - 2.0).abs() <= 1e-6);
}

#[test]
fn single_precision_smoke() {
    let sp = GradedSpace::diag(2, 1).unwrap();
    let x: Operator32 = random_graded(RandomKind::Generic, sp, 3);
    let h: Operator32 = random_graded(RandomKind::Hermitian, sp, 4);
    let s = strong_norm(&h, 1e-5).unwrap().value;
    assert!((s - h.op_norm()).abs() <= 1e-4);
    let sig = sigma_strong_norm(&x, 1e-5).unwrap().value;
    assert!(sig.is_finite() && sig >= 0.0);
    assert_eq!(x.superinvolve().superinvolve(), x);
}
