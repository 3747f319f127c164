//! Test-side oracles. Nothing here calls the crate's distance, pair-set or
//! solver code; graphs are read only through their edge lists.

#![allow(dead_code)]

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use truncdim::Graph;

/// All-pairs hop distances by BFS from every vertex.
pub fn distances(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.order();
    let mut adj = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                let du = d[u].unwrap();
                for &w in &adj[u] {
                    if d[w].is_none() {
                        d[w] = Some(du + 1);
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn diameter(g: &Graph) -> u32 {
    distances(g).iter().flatten().map(|d| d.expect("connected")).max().unwrap()
}

/// `R_k{x,y}` for every pair `x < y`, straight from the definition.
pub fn raw_pair_sets(g: &Graph, k: u32) -> Vec<Vec<usize>> {
    let d = distances(g);
    let n = g.order();
    let dk = |a: usize, b: usize| d[a][b].expect("connected").min(k + 1);
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            out.push((0..n).filter(|&z| dk(z, x) != dk(z, y)).collect());
        }
    }
    out
}

pub fn hits_all(sets: &[Vec<usize>], chosen: &[usize]) -> bool {
    sets.iter().all(|s| s.iter().any(|v| chosen.contains(v)))
}

pub fn covers_all(sets: &[Vec<usize>], values: &[BigRational]) -> bool {
    let one = BigRational::one();
    values.iter().all(|v| *v >= BigRational::zero() && *v <= one)
        && sets.iter().all(|s| s.iter().map(|&v| &values[v]).sum::<BigRational>() >= one)
}

/// Minimum of `Σ g` over `{g ≥ 0 : Σ_{v∈S} g_v ≥ 1 for every S}`, taken over
/// every vertex of the polyhedron. Vertices are enumerated exhaustively by
/// the double description method on the homogenized cone
/// `{(g, t) ≥ 0 : Σ_{v∈S} g_v ≥ t}`: every extreme ray with `t > 0` is a
/// vertex `g / t`. Returns the optimum and the number of vertices seen.
pub fn vertex_enumeration_min(n: usize, sets: &[Vec<usize>]) -> (BigRational, usize) {
    let rows = minimal_sets(sets);
    let d = n + 1;
    assert!(d + rows.len() <= 128, "zero sets are tracked in a u128");
    // Ray coordinates: g_0..g_{n-1}, then t. Constraint j < d is coordinate j ≥ 0.
    let mut rays: Vec<(Vec<i128>, u128)> = (0..d)
        .map(|i| {
            let mut r = vec![0; d];
            r[i] = 1;
            (r, ((1u128 << d) - 1) & !(1u128 << i))
        })
        .collect();
    for (j, row) in rows.iter().enumerate() {
        let bit = 1u128 << (d + j);
        let eval = |r: &[i128]| row.iter().map(|&v| r[v]).sum::<i128>() - r[n];
        let vals: Vec<i128> = rays.iter().map(|(r, _)| eval(r)).collect();
        let mut next = Vec::new();
        for (i, (r, z)) in rays.iter().enumerate() {
            match vals[i].signum() {
                1 => next.push((r.clone(), *z)),
                0 => next.push((r.clone(), *z | bit)),
                _ => {}
            }
        }
        for (p, (rp, zp)) in rays.iter().enumerate().filter(|(i, _)| vals[*i] > 0) {
            for (q, (rq, zq)) in rays.iter().enumerate().filter(|(i, _)| vals[*i] < 0) {
                let common = zp & zq;
                if (common.count_ones() as usize) < d - 2 {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(o, (_, zo))| o == p || o == q || zo & common != common);
                if !adjacent {
                    continue;
                }
                let (a, b) = (vals[p], -vals[q]);
                let mut r: Vec<i128> = rq
                    .iter()
                    .zip(rp)
                    .map(|(&x, &y)| a.checked_mul(x).and_then(|ax| b.checked_mul(y).and_then(|by| ax.checked_add(by))).expect("ray entries fit in i128"))
                    .collect();
                let g = r.iter().fold(0i128, |g, &x| g.gcd(&x));
                if g > 1 {
                    r.iter_mut().for_each(|x| *x /= g);
                }
                next.push((r, common | bit));
            }
        }
        rays = next;
    }
    let mut best: Option<BigRational> = None;
    let mut vertices = 0;
    for (r, _) in &rays {
        if r[n] > 0 {
            vertices += 1;
            let total: i128 = r[..n].iter().sum();
            let v = BigRational::new(BigInt::from(total), BigInt::from(r[n]));
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    (best.expect("the all-ones vector is feasible"), vertices)
}

/// Distinct sets with no proper subset in the family; the others are
/// implied constraints.
fn minimal_sets(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut s: Vec<Vec<usize>> = sets.to_vec();
    s.iter_mut().for_each(|x| x.sort_unstable());
    s.sort();
    s.dedup();
    s.iter()
        .filter(|a| !s.iter().any(|b| b.len() < a.len() && b.iter().all(|v| a.contains(v))))
        .cloned()
        .collect()
}

pub fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Brute-force minimum hitting set size over all subsets, for small `n`.
pub fn min_hitting_brute(n: usize, sets: &[Vec<usize>]) -> usize {
    assert!(n <= 20);
    let masks: Vec<u32> = sets.iter().map(|s| s.iter().fold(0, |m, &v| m | 1 << v)).collect();
    (0u32..1 << n)
        .filter(|c| masks.iter().all(|m| m & c != 0))
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

/// Closed interval; `lo == hi` for exact values.
pub type Range = (BigRational, BigRational);

fn point(v: BigRational) -> Range {
    (v.clone(), v)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    (a + b - 1) / b
}

pub fn cycle_kf(n: i64, k: i64) -> BigRational {
    if n >= 2 * k + 4 {
        q(n, 2 * (k + 1))
    } else if n % 2 == 1 {
        q(n, n - 1)
    } else {
        q(n, n - 2)
    }
}

/// `dim_{k,f}(P_n)` with the case label it came from.
pub fn path_kf(n: i64, k: i64) -> (Range, &'static str) {
    if n <= k + 2 {
        return (point(q(1, 1)), "a");
    }
    if n <= 2 * k + 3 {
        return (point(q(6 + 2 * k - n, 5 + 2 * k - n)), "b");
    }
    let r = n % (2 * k + 2);
    let c = ceil_div(n, 2 * k + 2);
    if r == 1 {
        (point(q(n + k, 2 * k + 2)), "c-i")
    } else if (2..=k + 2).contains(&r) {
        (point(q(c, 1)), "c-ii")
    } else {
        ((q(c, 1), q(2 * c + 1, 2)), "c-iii")
    }
}

/// `dim_{k,f}(P_n + K_1)` for `n ≥ 1`, any `k`.
pub fn fan_kf(n: i64) -> Range {
    match n {
        1..=3 => point(q(n + 1, 2)),
        4 | 5 => point(q(5, 3)),
        _ => match n % 4 {
            1 | 3 => point(q(n + 1, 4)),
            2 => point(q(n + 2, 4)),
            _ => (q(n, 4), q(n + 2, 4)),
        },
    }
}

/// `dim_{k,f}` of the wheel of order `n ≥ 4` (hub plus `C_{n-1}`).
pub fn wheel_kf(n: i64) -> BigRational {
    match n {
        4 | 5 => q(2, 1),
        6 => q(3, 2),
        _ => q(n - 1, 4),
    }
}

pub fn multipartite_f(parts: &[usize]) -> BigRational {
    let n = parts.iter().sum::<usize>() as i64;
    if parts.iter().filter(|&&a| a == 1).count() == 1 {
        q(n - 1, 2)
    } else {
        q(n, 2)
    }
}

/// `dim_k` of `P_n` (`cycle = false`) or `C_n`, with the case label.
pub fn path_cycle_dim_k(n: i64, k: i64, cycle: bool) -> (i64, &'static str) {
    if !cycle && n <= k + 2 {
        return (1, "a");
    }
    if n <= 3 * k + 3 {
        return (2, if cycle { "b-cycle" } else { "b-path" });
    }
    let m = 3 * k + 2;
    let r = n % m;
    let h = ceil_div(3 * k + 5, 2);
    if r <= k + 2 {
        ((2 * n + 3 * k - 1) / m, "c-low")
    } else if r < h {
        ((2 * n + 4 * k - 1) / m, "c-mid")
    } else {
        ((2 * n + 3 * k - 1) / m, "c-high")
    }
}

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.order()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

pub fn is_path_graph(g: &Graph) -> bool {
    let adj = adjacency(g);
    g.edges().len() + 1 == g.order() && adj.iter().all(|a| a.len() <= 2) && distances(g)[0].iter().all(Option::is_some)
}

/// `(σ, ex, ex_1)`: leaves, exterior major vertices, and those with exactly
/// one terminal vertex. A leaf's closest major vertex is the first vertex
/// of degree at least 3 on the walk inward along degree-2 vertices.
pub fn tree_counts(g: &Graph) -> (usize, usize, usize) {
    let adj = adjacency(g);
    let mut terminals = vec![0usize; g.order()];
    let mut sigma = 0;
    for leaf in (0..g.order()).filter(|&v| adj[v].len() == 1) {
        sigma += 1;
        let (mut prev, mut cur) = (leaf, adj[leaf][0]);
        while adj[cur].len() == 2 {
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
        }
        if adj[cur].len() >= 3 {
            terminals[cur] += 1;
        }
    }
    let ex = terminals.iter().filter(|&&t| t > 0).count();
    let ex_1 = terminals.iter().filter(|&&t| t == 1).count();
    (sigma, ex, ex_1)
}

/// Every vertex has a twin: some `y ≠ x` with `N(x) − y = N(y) − x`.
pub fn every_vertex_has_twin(g: &Graph) -> bool {
    let adj = adjacency(g);
    let strip = |v: usize, o: usize| {
        let mut s: Vec<usize> = adj[v].iter().copied().filter(|&w| w != o).collect();
        s.sort_unstable();
        s
    };
    (0..g.order()).all(|x| (0..g.order()).any(|y| y != x && strip(x, y) == strip(y, x)))
}
