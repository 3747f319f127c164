//! Structural predicates for the "if and only if" results, and the tree
//! profile (leaves, major vertices, terminal degrees) they rely on.
//!
//! Nothing here calls a solver: each predicate is meant to be compared
//! against a solver-computed equality.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::{DistanceMatrix, Graph, GraphError};
use crate::resolve::twin_classes;
use crate::Error;

/// Leaf/major-vertex structure of a tree.
///
/// A leaf `ℓ` is a terminal vertex of the major vertex `v` when `v` is
/// strictly the closest major vertex to `ℓ`. `T_v` is induced by `v` and the
/// paths from `v` to its terminal vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeProfile {
    pub leaves: Vec<usize>,
    /// Degree ≥ 3.
    pub major: Vec<usize>,
    /// Terminal vertices of every major vertex (possibly empty).
    pub terminals: BTreeMap<usize, Vec<usize>>,
    /// Exterior major vertices: positive terminal degree.
    pub m: Vec<usize>,
    pub m1: Vec<usize>,
    pub m2: Vec<usize>,
    pub exterior_deg2: Vec<usize>,
    /// Degree-2 vertices on no major-to-terminal path (for a path graph,
    /// every degree-2 vertex).
    pub interior_deg2: Vec<usize>,
    pub sigma: usize,
    pub ex: usize,
    pub ex_1: usize,
    /// Vertex set of `T_v` for each `v ∈ M`.
    pub subtrees: BTreeMap<usize, Vec<usize>>,
}

impl TreeProfile {
    pub fn terminal_degree(&self, v: usize) -> usize {
        self.terminals.get(&v).map_or(0, Vec::len)
    }
}

fn on_geodesic(d: &DistanceMatrix, a: usize, x: usize, b: usize) -> bool {
    let get = |p, q| d.get(p, q).expect("trees are connected");
    get(a, x) + get(x, b) == get(a, b)
}

pub fn tree_profile(t: &Graph) -> Result<TreeProfile, Error> {
    if t.order() < 2 {
        return Err(Error::TooSmall(t.order()));
    }
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    let d = DistanceMatrix::new(t);
    let dist = |a, b| d.get(a, b).expect("trees are connected");
    let leaves: Vec<usize> = (0..n).filter(|&v| t.degree(v) == 1).collect();
    let major: Vec<usize> = (0..n).filter(|&v| t.degree(v) >= 3).collect();

    let mut terminals: BTreeMap<usize, Vec<usize>> = major.iter().map(|&v| (v, Vec::new())).collect();
    for &leaf in &leaves {
        let closest = major.iter().copied().min_by_key(|&v| (dist(leaf, v), v));
        if let Some(v) = closest {
            let unique = major.iter().all(|&w| w == v || dist(leaf, v) < dist(leaf, w));
            if unique {
                terminals.get_mut(&v).unwrap().push(leaf);
            }
        }
    }
    let m: Vec<usize> = major.iter().copied().filter(|v| !terminals[v].is_empty()).collect();
    let m1: Vec<usize> = m.iter().copied().filter(|v| terminals[v].len() == 1).collect();
    let m2: Vec<usize> = m.iter().copied().filter(|v| terminals[v].len() >= 2).collect();

    let mut subtrees = BTreeMap::new();
    for &v in &m {
        let members: Vec<usize> = (0..n)
            .filter(|&x| terminals[&v].iter().any(|&l| on_geodesic(&d, v, x, l)))
            .collect();
        subtrees.insert(v, members);
    }
    let (exterior_deg2, interior_deg2): (Vec<usize>, Vec<usize>) = (0..n)
        .filter(|&x| t.degree(x) == 2)
        .partition(|&x| subtrees.values().any(|s: &Vec<usize>| s.contains(&x)));

    Ok(TreeProfile {
        sigma: leaves.len(),
        ex: m.len(),
        ex_1: m1.len(),
        leaves,
        major,
        terminals,
        m,
        m1,
        m2,
        exterior_deg2,
        interior_deg2,
        subtrees,
    })
}

/// `G` is a path of order `2..=k+2`.
pub fn is_short_path(g: &Graph, k: u32) -> bool {
    let n = g.order();
    g.is_path() && n >= 2 && n <= k as usize + 2
}

/// Every twin class has at least two vertices, i.e. `G` is a blowup of a
/// connected graph by cliques and independent sets of size ≥ 2.
pub fn all_twin_classes_ge2(g: &Graph) -> Result<bool, Error> {
    if g.order() < 2 {
        return Err(Error::TooSmall(g.order()));
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    Ok(twin_classes(g).iter().all(|c| c.len() >= 2))
}

/// `T ∈ {P_2, P_3}`, or `ex(T) ≥ 1` and `V(T) = M_2(T) ∪ L(T)`.
pub fn tree_dim1f_eq_dimf(t: &Graph) -> Result<bool, Error> {
    let p = tree_profile(t)?;
    if t.is_path() {
        return Ok(t.order() <= 3);
    }
    Ok(p.ex >= 1 && p.m2.len() + p.leaves.len() == t.order())
}

/// `T ∈ {P_2, P_3}`, or `T` is a star `K_{1,x}` (`x ≥ 3`) with at most
/// `x − 1` edges subdivided exactly once.
pub fn tree_dim1_eq_dim(t: &Graph) -> Result<bool, Error> {
    let p = tree_profile(t)?;
    if t.is_path() {
        return Ok(t.order() <= 3);
    }
    if p.major.len() != 1 {
        return Ok(false);
    }
    let center = p.major[0];
    let d = DistanceMatrix::new(t);
    let legs: Vec<u32> = p.terminals[&center]
        .iter()
        .map(|&l| d.get(center, l).unwrap())
        .collect();
    Ok(legs.len() == t.degree(center)
        && legs.iter().all(|&l| l <= 2)
        && legs.contains(&1))
}

/// For a tree with exactly one exterior major vertex `v`: every terminal
/// vertex of `v` lies within distance `k`.
pub fn tree_single_major_kf_eq_f(t: &Graph, k: u32) -> Result<bool, Error> {
    let p = tree_profile(t)?;
    if p.ex != 1 {
        return Err(Error::Precondition(format!(
            "expected exactly one exterior major vertex, found {}",
            p.ex
        )));
    }
    let v = p.m[0];
    let d = DistanceMatrix::new(t);
    Ok(p.terminals[&v].iter().all(|&l| d.get(v, l).unwrap() <= k))
}

/// `P_s × P_t` with `dim_{1,f} = dim_f`: one of `P_2×P_2`, `P_3×P_2`,
/// `P_4×P_2`, `P_3×P_3`. Sides may be given in either order.
pub fn grid_dim1f_eq_dimf(s: usize, t: usize) -> Result<bool, Error> {
    let (s, t) = (s.max(t), s.min(t));
    if t < 2 {
        return Err(Error::Precondition("grid sides must be at least 2".into()));
    }
    Ok(matches!((s, t), (2, 2) | (3, 2) | (4, 2) | (3, 3)))
}
