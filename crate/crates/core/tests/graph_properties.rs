mod common;

use common::random_multigraph;
use conejac::fastpath::LaurentPoly;
use conejac::invariants::{
    cone_tree_count_via_charpoly, forest_count, forest_group, jacobian, joint_char_poly,
    laplacian_char_poly, tree_count, tree_count_via_charpoly,
};
use conejac::oracle::{enumerate_rooted_forests, enumerate_spanning_trees};
use conejac::{CirculantSpec, CobordismSpec, IntMatrix, IntPoly, Multigraph};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n, 0..=max_m, any::<u64>()).prop_map(|(n, m, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_multigraph(&mut rng, n, m)
    })
}

fn circulant_spec() -> impl Strategy<Value = CirculantSpec> {
    (3usize..=14).prop_flat_map(|n| {
        prop::sample::subsequence((1..=n / 2).collect::<Vec<_>>(), 0..=(n / 2).min(3))
            .prop_map(move |jumps| CirculantSpec::new(n, jumps).unwrap())
    })
}

fn shift_matrix(n: usize, power: i64) -> IntMatrix {
    LaurentPoly::monomial(1, power).at_cyclic_shift(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn laplacian_rows_and_columns_sum_to_zero(g in multigraph(9, 20)) {
        let l = g.laplacian();
        prop_assert_eq!(l.clone(), l.transpose());
        for i in 0..l.rows() {
            prop_assert!(l.row(i).iter().sum::<BigInt>().is_zero());
        }
        let degrees = g.degrees();
        for (v, d) in degrees.iter().enumerate() {
            prop_assert_eq!(&l[(v, v)], &BigInt::from(*d));
        }
    }

    #[test]
    fn cone_is_join_with_a_point(g in multigraph(8, 16)) {
        let cone = g.cone();
        prop_assert_eq!(&cone, &g.join(&Multigraph::empty(1)));
        prop_assert_eq!(cone.degree(g.n_vertices()), g.n_vertices());
        prop_assert_eq!(cone.edge_count(), g.edge_count() + g.n_vertices());
    }

    #[test]
    fn circulant_laplacian_is_a_shift_polynomial(spec in circulant_spec()) {
        let n = spec.n();
        let l = spec.graph().laplacian();
        let degree: i64 = spec.jumps().iter().map(|&s| if 2 * s == n { 1 } else { 2 }).sum();
        let mut expected = IntMatrix::identity(n).scale(&BigInt::from(degree));
        for &s in spec.jumps() {
            expected = expected.sub(&shift_matrix(n, s as i64)).unwrap();
            if 2 * s != n {
                expected = expected.sub(&shift_matrix(n, -(s as i64))).unwrap();
            }
        }
        prop_assert_eq!(l, expected);
    }

    #[test]
    fn tree_count_paths_agree(g in multigraph(8, 18)) {
        let t = tree_count(&g);
        prop_assert_eq!(&t, &tree_count_via_charpoly(&g));
        prop_assert_eq!(t.is_zero(), !g.is_connected());
        if g.is_connected() {
            prop_assert_eq!(jacobian(&g).order().unwrap(), t.clone());
        }
        let f = forest_count(&g);
        prop_assert!(f >= BigInt::one());
        if g.is_connected() {
            prop_assert!(f >= t * BigInt::from(g.n_vertices()));
        }
    }

    #[test]
    fn forest_group_is_finite_of_forest_count_order(g in multigraph(9, 20)) {
        let fg = forest_group(&g);
        prop_assert_eq!(fg.free_rank(), 0);
        prop_assert_eq!(fg.order().unwrap(), forest_count(&g));
        prop_assert_eq!(cone_tree_count_via_charpoly(&g), forest_count(&g));
    }

    #[test]
    fn joint_polynomial_of_cone(g in multigraph(8, 16)) {
        let x = IntPoly::from_i64(&[0, 1]);
        let joint = joint_char_poly(&laplacian_char_poly(&g), g.n_vertices(), &x, 1).unwrap();
        prop_assert_eq!(joint, laplacian_char_poly(&g.cone()));
    }

    #[test]
    fn joint_polynomial_of_general_join(a in multigraph(4, 6), b in multigraph(4, 6)) {
        let joint = joint_char_poly(
            &laplacian_char_poly(&a), a.n_vertices(),
            &laplacian_char_poly(&b), b.n_vertices(),
        ).unwrap();
        prop_assert_eq!(joint, laplacian_char_poly(&a.join(&b)));
    }

    #[test]
    fn oracles_match_determinants(g in multigraph(7, 12)) {
        let trees = enumerate_spanning_trees(&g).unwrap();
        let forests = enumerate_rooted_forests(&g).unwrap();
        prop_assert_eq!(BigInt::from(trees), tree_count(&g));
        prop_assert_eq!(BigInt::from(forests), forest_count(&g));
        if g.is_connected() {
            prop_assert!(forests >= trees * g.n_vertices() as u64);
        }
    }

    #[test]
    fn invariants_do_not_depend_on_labels(g in multigraph(7, 14), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.n_vertices()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm);
        prop_assert_eq!(tree_count(&g), tree_count(&h));
        prop_assert_eq!(forest_group(&g), forest_group(&h));
    }
}

#[test]
fn cobordism_laplacian_block_form() {
    for n in 3usize..=9 {
        let jump_sets: Vec<Vec<usize>> = (1..n.div_ceil(2))
            .flat_map(|a| {
                std::iter::once(vec![a]).chain((a + 1..n.div_ceil(2)).map(move |b| vec![a, b]))
            })
            .collect();
        for j1 in &jump_sets {
            for j2 in &jump_sets {
                let spec = CobordismSpec::new(n, j1.clone(), j2.clone()).unwrap();
                let l = spec.graph().laplacian();
                let layer = |jumps: &[usize]| {
                    let k = jumps.len() as i64;
                    jumps.iter().fold(
                        IntMatrix::identity(n).scale(&BigInt::from(2 * k + 1)),
                        |acc, &s| {
                            acc.sub(&shift_matrix(n, s as i64))
                                .unwrap()
                                .sub(&shift_matrix(n, -(s as i64)))
                                .unwrap()
                        },
                    )
                };
                let (b1, b2) = (layer(j1), layer(j2));
                for i in 0..n {
                    for j in 0..n {
                        let minus_id = if i == j {
                            -BigInt::one()
                        } else {
                            BigInt::zero()
                        };
                        assert_eq!(l[(i, j)], b1[(i, j)], "{spec}");
                        assert_eq!(l[(n + i, n + j)], b2[(i, j)], "{spec}");
                        assert_eq!(l[(i, n + j)], minus_id, "{spec}");
                        assert_eq!(l[(n + i, j)], minus_id, "{spec}");
                    }
                }
            }
        }
    }
}
