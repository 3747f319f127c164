//! The test-side oracles checked against hand-computed values.

mod common;

use common::q;
use truncdim::generators;

#[test]
fn pair_sets_of_small_graphs() {
    let p3 = generators::path(3).unwrap();
    // The far endpoint distinguishes each adjacent pair.
    assert_eq!(common::raw_pair_sets(&p3, 1), vec![vec![0, 1, 2], vec![0, 2], vec![0, 1, 2]]);
    let k3 = generators::complete(3).unwrap();
    assert_eq!(common::raw_pair_sets(&k3, 1), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    // P_5 at k = 1: vertex 4 sees 0 and 1 both at truncated distance 2.
    let p5 = generators::path(5).unwrap();
    assert_eq!(common::raw_pair_sets(&p5, 1)[0], vec![0, 1, 2]);
}

#[test]
fn vertex_enumeration_on_known_polytopes() {
    // K_n: pair sets are exactly the pairs, optimum n/2 at the all-halves vertex.
    for n in 2..=6 {
        let g = generators::complete(n).unwrap();
        assert_eq!(common::vertex_enumeration_min(n, &common::raw_pair_sets(&g, 1)).0, q(n as i64, 2));
    }
    // One set of size 3, plus a singleton covering constraint.
    assert_eq!(common::vertex_enumeration_min(3, &[vec![0, 1, 2]]).0, q(1, 1));
    assert_eq!(common::vertex_enumeration_min(3, &[vec![0], vec![1, 2]]).0, q(2, 1));
    // Odd cycle of pairs: 5 pairs around a pentagon, optimum 5/2.
    let sets: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
    let (v, vertices) = common::vertex_enumeration_min(5, &sets);
    assert_eq!(v, q(5, 2));
    assert!(vertices >= 2);
}

#[test]
fn brute_force_hitting() {
    let sets: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
    assert_eq!(common::min_hitting_brute(5, &sets), 3);
    assert_eq!(common::min_hitting_brute(3, &[vec![0, 1, 2]]), 1);
}

#[test]
fn closed_forms_at_hand_values() {
    assert_eq!(common::cycle_kf(8, 1), q(2, 1));
    assert_eq!(common::cycle_kf(5, 1), q(5, 4));
    assert_eq!(common::path_kf(4, 1).0 .0, q(4, 3));
    assert_eq!(common::path_kf(9, 1).0 .0, q(5, 2));
    assert_eq!(common::fan_kf(8), (q(2, 1), q(5, 2)));
    assert_eq!(common::wheel_kf(6), q(3, 2));
    assert_eq!(common::multipartite_f(&[2, 3]), q(5, 2));
    assert_eq!(common::multipartite_f(&[1, 3]), q(3, 2));
    assert_eq!(common::path_cycle_dim_k(9, 1, true).0, 4);
    assert_eq!(common::path_cycle_dim_k(4, 1, false).0, 2);
}

#[test]
fn tree_counts_and_twins() {
    let cat = generators::leaf_cluster_caterpillar(2, 3).unwrap();
    assert_eq!(common::tree_counts(&cat), (6, 2, 0));
    let spider = generators::spider(&[1, 2, 3]).unwrap();
    assert_eq!(common::tree_counts(&spider), (3, 1, 0));
    assert_eq!(common::tree_counts(&generators::path(5).unwrap()), (2, 0, 0));
    assert!(common::every_vertex_has_twin(&generators::complete(4).unwrap()));
    assert!(!common::every_vertex_has_twin(&generators::path(4).unwrap()));
    assert!(common::is_path_graph(&generators::path(4).unwrap()));
    assert!(!common::is_path_graph(&generators::cycle(4).unwrap()));
}
