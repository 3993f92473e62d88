//! Values frozen from independent reference computations.

use superop::linalg::{self, complex_matrix, real_matrix};
use superop::norms::numerical_radius;
use superop::tensor::{factorization_matrix, haagerup_norm, TensorConfig, TensorElement, UpperWitness};
use superop::CMat;

fn unit(n: usize, i: usize, j: usize) -> CMat<f64> {
    linalg::unit(n, i, j)
}

#[test]
fn numerical_radius_matches_dense_angle_scan() {
    let cases: [(&[&[(f64, f64)]], f64); 4] = [
        (&[&[(1.0, 0.0), (1.0, 0.0), (0.0, 0.0)], &[(0.0, 0.0), (1.0, 0.0), (1.0, 0.0)], &[(0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]], 1.7071067811865475),
        (&[&[(0.0, 1.0), (2.0, 0.0), (0.0, 0.0)], &[(0.0, 0.0), (-1.0, 0.0), (1.0, -1.0)], &[(0.5, 0.0), (0.0, 0.0), (2.0, 0.0)]], 2.2509044255253254),
        (&[&[(0.0, 0.0), (2.0, 0.0)], &[(0.0, 0.5), (1.0, 0.0)]], 1.7385485327684072),
        (&[&[(1.0, 0.0), (3.0, 0.0)], &[(-1.0, 0.0), (0.0, 1.0)]], 2.5979648227763468),
    ];
    for (rows, want) in cases {
        let r = numerical_radius(&complex_matrix::<f64>(rows), 1e-12).unwrap();
        assert!((r.value - want).abs() <= 1e-9, "got {} want {want}", r.value);
        assert!(r.certified_error <= 1e-9);
    }
}

#[test]
fn radius_witness_attains_the_value() {
    let m = complex_matrix::<f64>(&[&[(0.0, 1.0), (2.0, 0.0)], &[(0.0, 0.0), (-1.0, 0.0)]]);
    let r = numerical_radius(&m, 1e-12).unwrap();
    let v = &r.maximizer_vector;
    let q = (v.adjoint() * &m * v)[(0, 0)];
    assert!((q.norm() - r.value).abs() <= 1e-9);
}

fn oracle_elements() -> Vec<(TensorElement<f64>, f64)> {
    let c = |rows: &[&[(f64, f64)]]| complex_matrix::<f64>(rows);
    let r = |rows: &[&[f64]]| real_matrix::<f64>(rows);
    vec![
        (
            TensorElement::new(
                2,
                2,
                vec![
                    (r(&[&[1.0, 2.0], &[0.0, 1.0]]), r(&[&[0.0, 1.0], &[1.0, 0.0]])),
                    (c(&[&[(0.0, 0.0), (0.0, 1.0)], &[(1.0, 0.0), (0.0, 0.0)]]), r(&[&[1.0, 0.0], &[0.0, -1.0]])),
                    (r(&[&[1.0, 0.0], &[1.0, 1.0]]), c(&[&[(2.0, 0.0), (0.0, 0.0)], &[(0.0, 1.0), (1.0, 0.0)]])),
                ],
            )
            .unwrap(),
            6.5555222688,
        ),
        (
            TensorElement::new(
                2,
                3,
                vec![
                    (r(&[&[1.0, -1.0], &[0.0, 2.0]]), r(&[&[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0], &[0.0, 1.0, 0.0]])),
                    (
                        c(&[&[(0.0, 0.0), (1.0, 0.0)], &[(1.0, 0.0), (0.0, 1.0)]]),
                        r(&[&[0.0, 1.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 0.0, 2.0]]),
                    ),
                ],
            )
            .unwrap(),
            5.0124006567,
        ),
        (TensorElement::new(3, 3, (0..3).map(|i| (unit(3, 0, i), unit(3, i, 0))).collect()).unwrap(), 3.0),
    ]
}

#[test]
fn haagerup_matches_reference_solver() {
    for (t, want) in oracle_elements() {
        let br = haagerup_norm(&t, &TensorConfig::default()).unwrap();
        assert!((br.upper - want).abs() <= 1e-6, "upper {} want {want}", br.upper);
        assert!(br.lower <= br.upper);
    }
}

#[test]
fn haagerup_witness_reproduces_element_and_value() {
    for (t, _) in oracle_elements() {
        let br = haagerup_norm(&t, &TensorConfig::default()).unwrap();
        let UpperWitness::Factorization { left, right } = &br.upper_witness else {
            panic!("expected a factorization witness");
        };
        let m = factorization_matrix(left, right, t.a_dim(), t.b_dim());
        assert!((m - t.kron_matrix()).norm() <= 1e-9);
        assert!((br.upper_witness.value() - br.upper).abs() <= 1e-9);
    }
}
