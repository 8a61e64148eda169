use nuclear_core::matrix::{self, Matrix};
use nuclear_core::*;
use proptest::prelude::*;

fn complex_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec((-10.0..10.0f64, -10.0..10.0f64), n * n).prop_map(move |v| {
        Matrix::new(
            n,
            n,
            v.into_iter().map(|(re, im)| C64::new(re, im)).collect(),
        )
        .unwrap()
    })
}

fn sized_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=6).prop_flat_map(complex_matrix)
}

fn tensor() -> impl Strategy<Value = TensorElement> {
    (1usize..=4, 1usize..=4, 0usize..=5).prop_flat_map(|(m, n, k)| {
        let vec = |d| prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64), d);
        prop::collection::vec((vec(m), vec(n)), k).prop_map(move |pairs| {
            let mut f = TensorElement::zero(m, n);
            for (x, y) in pairs {
                let to_c =
                    |v: Vec<(f64, f64)>| v.into_iter().map(|(a, b)| C64::new(a, b)).collect();
                f.push(to_c(x), to_c(y)).unwrap();
            }
            f
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_chain(t in sized_matrix()) {
        let op = operator_norm(&t).unwrap();
        let hs = hs_norm(&t);
        let tr = trace_norm(&t).unwrap();
        let scale = tr.max(1e-300);
        prop_assert!(op <= hs + 1e-9 * scale);
        prop_assert!(hs <= tr + 1e-9 * scale);
        prop_assert!(hs * hs <= op * tr + 1e-9 * scale * scale);
        prop_assert!((schatten_norm(&t, f64::INFINITY).unwrap() - op).abs() <= 1e-12 * scale);
        prop_assert!((schatten_norm(&t, 1.0).unwrap() - tr).abs() <= 1e-12 * scale);
    }

    #[test]
    fn abs_preserves_vector_norms(t in sized_matrix(), seed in any::<u64>()) {
        let n = t.rows();
        let mut rng = ensemble::trial_rng(seed, "abs", n, 0);
        let x = ensemble::unit_vector(&mut rng, n);
        let a = abs_op(&t).unwrap();
        let lhs = matrix::norm(&t.mul_vec(&x));
        let rhs = matrix::norm(&a.mul_vec(&x));
        prop_assert!((lhs - rhs).abs() <= 1e-9 * operator_norm(&t).unwrap().max(1e-300));
    }

    #[test]
    fn polar_reconstructs(t in sized_matrix()) {
        let f = polar(&t).unwrap();
        prop_assert!((&f.reconstruct() - &t).frobenius_norm() <= 1e-9 * t.frobenius_norm().max(1e-300));
    }

    #[test]
    fn matrix_json_round_trip(t in sized_matrix()) {
        let s = serde_json::to_string(&t).unwrap();
        let back: Matrix = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn tensor_json_round_trip(f in tensor()) {
        let s = serde_json::to_string(&f).unwrap();
        let back: TensorElement = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn crossnorm_sandwich(f in tensor()) {
        let inj = injective_norm(&f).unwrap();
        let proj = projective_norm(&f).unwrap();
        let cost = f.representation_cost();
        prop_assert!(inj <= proj + 1e-9 * cost.max(1e-300));
        prop_assert!(proj <= cost + 1e-9 * cost.max(1e-300));
        prop_assert!(operator_norm(&k_map(&f)).unwrap() <= proj + 1e-9 * cost.max(1e-300));
    }

    #[test]
    fn nuclear_norm_is_trace_norm(t in sized_matrix()) {
        let tr = trace_norm(&t).unwrap();
        prop_assert!((nuclear_norm(&t).unwrap() - tr).abs() <= 1e-9 * tr.max(1e-300));
        let rep = optimal_rep(&t).unwrap();
        prop_assert!((rep_cost(&rep) - tr).abs() <= 1e-9 * tr.max(1e-300));
        prop_assert!((&rep.to_matrix() - &t).frobenius_norm() <= 1e-9 * tr.max(1e-300));
    }
}

#[test]
fn malformed_matrix_json_is_rejected() {
    for bad in [
        r#"{"rows": 2, "cols": 2, "data": [[1,0],[0,0],[0,0]]}"#,
        r#"{"rows": 0, "cols": 0, "data": []}"#,
        r#"{"rows": 1, "cols": 1, "data": [[1]]}"#,
        r#"{"rows": 1, "cols": 1}"#,
        r#"[1, 2]"#,
    ] {
        assert!(serde_json::from_str::<Matrix>(bad).is_err(), "{bad}");
    }
}
