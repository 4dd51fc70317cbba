mod common;

use common::{cofactor_det, invariant_factors_by_minors, random_unimodular};
use conejac::linalg::{cokernel, smith_normal_form};
use conejac::{IntMatrix, IntPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
            IntMatrix::from_vec(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

fn square(max_n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * n).prop_map(move |v| {
            IntMatrix::from_vec(n, n, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

#[test]
fn frozen_minor_gcd_values() {
    // δ1 = 2, δ2 = |det| = 8
    let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
    assert_eq!(
        invariant_factors_by_minors(&m),
        vec![BigInt::from(2), BigInt::from(4)]
    );
    let m = IntMatrix::from_rows(&[vec![3, -1, -1], vec![-1, 3, -1], vec![-1, -1, 3]]);
    assert_eq!(
        invariant_factors_by_minors(&m),
        vec![BigInt::from(1), BigInt::from(4), BigInt::from(4)]
    );
    let m = IntMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
    assert_eq!(
        invariant_factors_by_minors(&m),
        vec![BigInt::from(1), BigInt::from(3), BigInt::from(0)]
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bareiss_matches_cofactor_expansion(m in square(6, 9)) {
        prop_assert_eq!(m.determinant().unwrap(), cofactor_det(&m.to_rows()));
    }

    #[test]
    fn smith_diagonal_matches_minor_gcds(m in matrix(5, 5, 4)) {
        let snf = smith_normal_form(&m);
        prop_assert!(snf.diagonal.iter().all(|d| !d.is_negative()));
        for w in snf.diagonal.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]) || w[0].is_zero() && w[1].is_zero());
        }
        prop_assert_eq!(snf.diagonal, invariant_factors_by_minors(&m));
    }

    #[test]
    fn cokernel_order_is_abs_determinant(m in square(6, 6)) {
        let det = m.determinant().unwrap();
        let g = cokernel(&m);
        if det.is_zero() {
            prop_assert!(g.free_rank() > 0);
        } else {
            prop_assert_eq!(g.order().unwrap(), det.abs());
        }
    }

    #[test]
    fn char_poly_agrees_with_determinants(m in square(6, 5)) {
        let chi = IntPoly::char_poly(&m).unwrap();
        prop_assert_eq!(chi.degree(), Some(m.rows()));
        for x in -2..=3 {
            let x = BigInt::from(x);
            let direct = cofactor_det(&m.neg().add_scalar_identity(&x).unwrap().to_rows());
            prop_assert_eq!(chi.eval(&x), direct);
        }
    }

    #[test]
    fn powers_add(m in square(3, 3), a in 0i64..6, b in 0i64..6) {
        let lhs = m.pow(a + b).unwrap();
        let rhs = m.pow(a).unwrap().mul(&m.pow(b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cokernel_is_invariant_under_unimodular_change(m in matrix(5, 5, 5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_unimodular(&mut rng, m.rows(), 12);
        let v = random_unimodular(&mut rng, m.cols(), 12);
        prop_assert_eq!(u.determinant().unwrap().abs(), BigInt::from(1));
        let moved = u.mul(&m).unwrap().mul(&v).unwrap();
        prop_assert_eq!(cokernel(&moved), cokernel(&m));
    }

    #[test]
    fn unimodular_inverse_and_negative_powers(seed in any::<u64>(), n in 1usize..6, e in 1i64..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_unimodular(&mut rng, n, 10);
        let inv = u.inverse_unimodular().unwrap();
        prop_assert_eq!(u.mul(&inv).unwrap(), IntMatrix::identity(n));
        prop_assert_eq!(u.pow(-e).unwrap().mul(&u.pow(e).unwrap()).unwrap(), IntMatrix::identity(n));
    }
}
