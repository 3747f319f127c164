mod common;

use num_rational::BigRational;
use proptest::prelude::*;
use truncdim::graph::DistanceMatrix;
use truncdim::solvers::simplex;
use truncdim::{generators, resolve, solvers, Graph, VertexSet};

fn connected() -> impl Strategy<Value = Graph> {
    (2usize..=9, 0.15f64..0.9, any::<u64>())
        .prop_map(|(n, p, seed)| generators::random_connected(n, p, seed).unwrap())
}

fn q(n: i64, d: i64) -> BigRational {
    common::q(n, d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rk_forms_agree(g in connected(), k in 1u32..=5) {
        let d = DistanceMatrix::new(&g);
        let raw = common::raw_pair_sets(&g, k);
        let mut i = 0;
        for x in 0..g.order() {
            for y in x + 1..g.order() {
                let a = resolve::r_k_pair(&d, k, x, y).unwrap();
                prop_assert_eq!(&a, &resolve::r_k_pair_neighborhood_form(&d, k, x, y).unwrap());
                prop_assert_eq!(&a.to_vec(), &raw[i]);
                i += 1;
            }
        }
    }

    #[test]
    fn truncated_distance_monotone_in_k(g in connected(), k in 1u32..=5) {
        let d = DistanceMatrix::new(&g);
        for x in 0..g.order() {
            for y in 0..g.order() {
                let (a, b) = (d.truncated(k, x, y).unwrap(), d.truncated(k + 1, x, y).unwrap());
                prop_assert!(a <= b && b <= a + 1);
            }
        }
    }

    #[test]
    fn ball_is_union_of_shells(g in connected(), k in 0u32..=4) {
        let d = DistanceMatrix::new(&g);
        for v in 0..g.order() {
            let mut u = VertexSet::new(g.order());
            for i in 0..=k {
                u.union_with(&d.shell(i, v));
            }
            prop_assert_eq!(u, d.ball(k, v));
        }
    }

    #[test]
    fn join_has_diameter_at_most_two(g in connected(), h in connected()) {
        let j = g.join(&h);
        prop_assert_eq!(j.order(), g.order() + h.order());
        prop_assert!(common::diameter(&j) <= 2);
    }

    #[test]
    fn dominance_reduction_preserves_optima(g in connected(), k in 1u32..=3) {
        let raw = common::raw_pair_sets(&g, k);
        let unreduced = simplex::solve_covering(g.order(), &raw);
        prop_assert_eq!(&unreduced.value, &solvers::dim_kf(&g, k).unwrap().total);
        let brute = common::min_hitting_brute(g.order(), &raw);
        prop_assert_eq!(brute, solvers::dim_k_exact(&g, k).unwrap().size);
    }

    #[test]
    fn sandwich_bounds(g in connected(), k in 1u32..=3) {
        let n = g.order() as i64;
        let fk = solvers::dim_kf(&g, k).unwrap().total;
        let fk1 = solvers::dim_kf(&g, k + 1).unwrap().total;
        let dk = solvers::dim_k_exact(&g, k).unwrap().size as i64;
        let df = solvers::dim_f(&g).unwrap().total;
        prop_assert!(q(1, 1) <= df.clone() && df <= fk1.clone());
        prop_assert!(fk1 <= fk.clone() && fk.clone() <= q(dk, 1) && fk <= q(n, 2));
        prop_assert!(dk < n);
    }
}
