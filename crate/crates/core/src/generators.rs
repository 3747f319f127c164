//! Deterministic constructors for the graph families studied here, plus
//! seeded random trees and connected graphs.
//!
//! Vertex numbering is part of each constructor's contract:
//!
//! * `path(n)`, `cycle(n)`: vertices in traversal order `u_1..u_n` ↦ `0..n-1`.
//! * `grid(s, t)`: vertex `(i, j)` with `1 ≤ i ≤ s`, `1 ≤ j ≤ t` ↦ `(i-1)·t + (j-1)`.
//! * `wheel(n)`, `fan(n)`: rim first, hub last.
//! * `petersen()`: 2-subsets of `{0..4}` in lexicographic order, adjacent when disjoint.
//! * `spider`, `subdivided_star`: center `0`, then each leg outward from the center.
//! * `leaf_cluster_caterpillar(x, α)`: spine `v_1..v_x` ↦ `0..x-1`, then the
//!   `α` leaves of `v_i` ↦ `x + (i-1)·α ..`.
//! * `complete_multipartite`, `blowup`: blocks laid out consecutively.
//!
//! Random generation uses ChaCha8 seeded with the 64-bit seed through
//! `SeedableRng::seed_from_u64`, which is portable across platforms.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid parameter for {family}: {reason}")]
pub struct GenError {
    pub family: &'static str,
    pub reason: String,
}

fn invalid<T>(family: &'static str, reason: impl Into<String>) -> Result<T, GenError> {
    Err(GenError {
        family,
        reason: reason.into(),
    })
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edge_list(n, edges).expect("generator produced a valid edge list")
}

pub fn path(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return invalid("path", "n must be at least 1");
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(build(n, &edges))
}

pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return invalid("cycle", "n must be at least 3");
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &edges))
}

pub fn complete(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return invalid("complete", "n must be at least 1");
    }
    let mut edges = Vec::new();
    for u in 0..n {
        edges.extend((u + 1..n).map(|v| (u, v)));
    }
    Ok(build(n, &edges))
}

/// The grid `P_s × P_t`.
pub fn grid(s: usize, t: usize) -> Result<Graph, GenError> {
    if s < 1 || t < 1 {
        return invalid("grid", "both sides must be at least 1");
    }
    let id = |i: usize, j: usize| i * t + j;
    let mut edges = Vec::new();
    for i in 0..s {
        for j in 0..t {
            if j + 1 < t {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < s {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Ok(build(s * t, &edges))
}

pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    build(10, &edges)
}

/// The wheel `W_n = C_{n-1} + K_1` of order `n ≥ 5`.
pub fn wheel(n: usize) -> Result<Graph, GenError> {
    if n < 5 {
        return invalid("wheel", "order must be at least 5");
    }
    Ok(cycle(n - 1)?.join(&complete(1)?))
}

/// The fan `P_n + K_1` (order `n + 1`).
pub fn fan(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return invalid("fan", "path order must be at least 1");
    }
    Ok(path(n)?.join(&complete(1)?))
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GenError> {
    if parts.len() < 2 {
        return invalid("complete_multipartite", "need at least 2 parts");
    }
    if parts.contains(&0) {
        return invalid("complete_multipartite", "part sizes must be positive");
    }
    let mut block = Vec::new();
    for (b, &size) in parts.iter().enumerate() {
        block.extend(std::iter::repeat_n(b, size));
    }
    let n = block.len();
    let mut edges = Vec::new();
    for u in 0..n {
        edges.extend((u + 1..n).filter(|&v| block[u] != block[v]).map(|v| (u, v)));
    }
    Ok(build(n, &edges))
}

/// A center with pendant paths of the given lengths.
pub fn spider(legs: &[usize]) -> Result<Graph, GenError> {
    if legs.len() < 3 {
        return invalid("spider", "need at least 3 legs");
    }
    if legs.contains(&0) {
        return invalid("spider", "leg lengths must be positive");
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok(build(next, &edges))
}

/// Spine path `v_1..v_x`, each spine vertex carrying `alpha` pendant leaves.
pub fn leaf_cluster_caterpillar(x: usize, alpha: usize) -> Result<Graph, GenError> {
    if x < 1 {
        return invalid("leaf_cluster_caterpillar", "spine length must be at least 1");
    }
    if alpha < 3 {
        return invalid("leaf_cluster_caterpillar", "alpha must be at least 3");
    }
    let mut edges: Vec<_> = (1..x).map(|i| (i - 1, i)).collect();
    for i in 0..x {
        edges.extend((0..alpha).map(|j| (i, x + i * alpha + j)));
    }
    Ok(build(x + x * alpha, &edges))
}

/// The star `K_{1,x}` with its first `s` edges subdivided once.
pub fn subdivided_star(x: usize, s: usize) -> Result<Graph, GenError> {
    if x < 3 {
        return invalid("subdivided_star", "need at least 3 leaves");
    }
    if s > x {
        return invalid("subdivided_star", "cannot subdivide more edges than exist");
    }
    let legs: Vec<usize> = (0..x).map(|i| if i < s { 2 } else { 1 }).collect();
    spider(&legs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Clique,
    Independent,
}

/// Replaces every vertex `u_i` of `h` by a clique or independent set of the
/// given size (≥ 2); blocks are joined exactly when `u_i u_j ∈ E(h)`.
pub fn blowup(h: &Graph, assignment: &[(BlockKind, usize)]) -> Result<Graph, GenError> {
    if assignment.len() != h.order() {
        return invalid("blowup", "one block per vertex of H is required");
    }
    if !h.is_connected() {
        return invalid("blowup", "H must be connected");
    }
    if assignment.iter().any(|&(_, size)| size < 2) {
        return invalid("blowup", "every block needs at least 2 vertices");
    }
    let mut start = Vec::with_capacity(assignment.len());
    let mut n = 0;
    for &(_, size) in assignment {
        start.push(n);
        n += size;
    }
    let block = |i: usize| start[i]..start[i] + assignment[i].1;
    let mut edges = Vec::new();
    for (i, &(kind, _)) in assignment.iter().enumerate() {
        if kind == BlockKind::Clique {
            for u in block(i) {
                edges.extend((u + 1..block(i).end).map(|v| (u, v)));
            }
        }
        for &j in h.neighbors(i).iter().filter(|&&j| j > i) {
            for u in block(i) {
                edges.extend(block(j).map(|v| (u, v)));
            }
        }
    }
    Ok(build(n, &edges))
}

/// A complete graph `H` embedded in a diameter-2 graph `G` whose fractional
/// dimension is much smaller.
#[derive(Clone, Debug)]
pub struct GapConstruction {
    pub h: Graph,
    pub g: Graph,
    /// `embedding[v]` is the id in `g` of vertex `v` of `h`.
    pub embedding: Vec<usize>,
    /// The attached vertices `u_1..u_m`, a resolving set of `g`.
    pub attached: Vec<usize>,
}

/// `H = K_{m(m+1)/2}` with parts `V_i = {w_{i,1}..w_{i,i}}` (`w_{i,j}` ↦
/// `i(i-1)/2 + j - 1`), and `G = H` plus `u_1..u_m` where `u_i` is adjacent
/// to `V_i` and to `w_{j,i}` for every `j > i`.
pub fn gap_construction(m: usize) -> Result<GapConstruction, GenError> {
    if m < 3 {
        return invalid("gap_construction", "m must be at least 3");
    }
    let core = m * (m + 1) / 2;
    let w = |i: usize, j: usize| i * (i - 1) / 2 + j - 1;
    let h = complete(core)?;
    let mut edges = h.edges();
    let attached: Vec<usize> = (0..m).map(|i| core + i).collect();
    for i in 1..=m {
        let u = attached[i - 1];
        edges.extend((1..=i).map(|j| (u, w(i, j))));
        edges.extend((i + 1..=m).map(|j| (u, w(j, i))));
    }
    Ok(GapConstruction {
        g: build(core + m, &edges),
        h,
        embedding: (0..core).collect(),
        attached,
    })
}

/// Uniform labeled tree via a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 2 {
        return invalid("random_tree", "n must be at least 2");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Ok(build(n, &prufer_decode(n, &prufer)))
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = leaves.pop_first().expect("Prüfer decoding always has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Erdős-Rényi `G(n, p)`, resampled until connected.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if n < 2 {
        return invalid("random_connected", "n must be at least 2");
    }
    if !(p > 0.0 && p <= 1.0) {
        return invalid("random_connected", "p must lie in (0, 1]");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = build(n, &edges);
        if g.is_connected() {
            return Ok(g);
        }
    }
}

/// Random connected graph `H` of order `h_order` blown up with random block
/// kinds and sizes in `2..=max_block`.
pub fn random_blowup(h_order: usize, max_block: usize, seed: u64) -> Result<Graph, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = if h_order == 1 {
        complete(1)?
    } else {
        random_connected(h_order, 0.5, rng.gen())?
    };
    let kinds = [BlockKind::Clique, BlockKind::Independent];
    let assignment: Vec<_> = (0..h_order)
        .map(|_| {
            (
                *kinds.choose(&mut rng).unwrap(),
                rng.gen_range(2..=max_block.max(2)),
            )
        })
        .collect();
    blowup(&h, &assignment)
}

/// A named family instance, parseable from `family p1 p2 ...`.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Grid(usize, usize),
    Petersen,
    Wheel(usize),
    Fan(usize),
    Multipartite(Vec<usize>),
    Spider(Vec<usize>),
    Caterpillar(usize, usize),
    SubdividedStar(usize, usize),
    GapH(usize),
    GapG(usize),
    RandomTree(usize, u64),
    RandomConnected(usize, f64, u64),
}

impl Family {
    pub fn build(&self) -> Result<Graph, GenError> {
        match self {
            Family::Path(n) => path(*n),
            Family::Cycle(n) => cycle(*n),
            Family::Complete(n) => complete(*n),
            Family::Grid(s, t) => grid(*s, *t),
            Family::Petersen => Ok(petersen()),
            Family::Wheel(n) => wheel(*n),
            Family::Fan(n) => fan(*n),
            Family::Multipartite(parts) => complete_multipartite(parts),
            Family::Spider(legs) => spider(legs),
            Family::Caterpillar(x, a) => leaf_cluster_caterpillar(*x, *a),
            Family::SubdividedStar(x, s) => subdivided_star(*x, *s),
            Family::GapH(m) => Ok(gap_construction(*m)?.h),
            Family::GapG(m) => Ok(gap_construction(*m)?.g),
            Family::RandomTree(n, seed) => random_tree(*n, *seed),
            Family::RandomConnected(n, p, seed) => random_connected(*n, *p, *seed),
        }
    }

    /// Parses `name` and its positional parameters; `seed` feeds the random
    /// families.
    pub fn parse(name: &str, params: &[String], seed: u64) -> Result<Family, GenError> {
        let ints = |family: &'static str| -> Result<Vec<usize>, GenError> {
            params
                .iter()
                .map(|p| {
                    p.parse::<usize>().map_err(|_| GenError {
                        family,
                        reason: format!("`{p}` is not a nonnegative integer"),
                    })
                })
                .collect()
        };
        let exactly = |family: &'static str, want: usize| -> Result<Vec<usize>, GenError> {
            let v = ints(family)?;
            if v.len() != want {
                return invalid(family, format!("expected {want} parameter(s), got {}", v.len()));
            }
            Ok(v)
        };
        Ok(match name {
            "path" => Family::Path(exactly("path", 1)?[0]),
            "cycle" => Family::Cycle(exactly("cycle", 1)?[0]),
            "complete" => Family::Complete(exactly("complete", 1)?[0]),
            "grid" => {
                let v = exactly("grid", 2)?;
                Family::Grid(v[0], v[1])
            }
            "petersen" => {
                exactly("petersen", 0)?;
                Family::Petersen
            }
            "wheel" => Family::Wheel(exactly("wheel", 1)?[0]),
            "fan" => Family::Fan(exactly("fan", 1)?[0]),
            "multipartite" => Family::Multipartite(ints("multipartite")?),
            "spider" => Family::Spider(ints("spider")?),
            "caterpillar" => {
                let v = exactly("caterpillar", 2)?;
                Family::Caterpillar(v[0], v[1])
            }
            "substar" => {
                let v = exactly("substar", 2)?;
                Family::SubdividedStar(v[0], v[1])
            }
            "gap-h" => Family::GapH(exactly("gap-h", 1)?[0]),
            "gap-g" => Family::GapG(exactly("gap-g", 1)?[0]),
            "random-tree" => Family::RandomTree(exactly("random-tree", 1)?[0], seed),
            "random" => {
                if params.len() != 2 {
                    return invalid("random", "expected n and p");
                }
                let n = params[0].parse().map_err(|_| GenError {
                    family: "random",
                    reason: format!("`{}` is not an integer", params[0]),
                })?;
                let p = f64::from_str(&params[1]).map_err(|_| GenError {
                    family: "random",
                    reason: format!("`{}` is not a probability", params[1]),
                })?;
                Family::RandomConnected(n, p, seed)
            }
            _ => {
                return Err(GenError {
                    family: "gen",
                    reason: format!("unknown family `{name}`"),
                })
            }
        })
    }
}

fn join_list(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "P_{n}"),
            Family::Cycle(n) => write!(f, "C_{n}"),
            Family::Complete(n) => write!(f, "K_{n}"),
            Family::Grid(s, t) => write!(f, "P_{s}xP_{t}"),
            Family::Petersen => write!(f, "Petersen"),
            Family::Wheel(n) => write!(f, "W_{n}"),
            Family::Fan(n) => write!(f, "P_{n}+K_1"),
            Family::Multipartite(p) => write!(f, "K_{{{}}}", join_list(p)),
            Family::Spider(l) => write!(f, "spider[{}]", join_list(l)),
            Family::Caterpillar(x, a) => write!(f, "caterpillar({x},{a})"),
            Family::SubdividedStar(x, s) => write!(f, "substar({x},{s})"),
            Family::GapH(m) => write!(f, "gapH({m})"),
            Family::GapG(m) => write!(f, "gapG({m})"),
            Family::RandomTree(n, s) => write!(f, "tree(n={n},seed={s})"),
            Family::RandomConnected(n, p, s) => write!(f, "gnp(n={n},p={p},seed={s})"),
        }
    }
}
