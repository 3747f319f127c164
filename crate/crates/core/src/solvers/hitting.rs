//! Minimum hitting set over a [`ConstraintSystem`] by branch and bound.
//!
//! Branching takes the residual constraint with the fewest available
//! vertices; its vertices are tried in order of residual coverage (ties by
//! id), the `i`-th branch including vertex `i` and excluding the earlier ones.
//! A node is pruned when `|chosen| + ⌈LP(residual)⌉` reaches the incumbent.
//! A disjoint-constraint packing bound is tried before the LP since it is
//! cheaper and never larger.
//!
//! Before branching each node is reduced to a fixpoint: a constraint with a
//! single available vertex forces that vertex, constraints containing another
//! residual constraint are dropped, and a vertex whose residual constraints
//! are a subset of another available vertex's is excluded.

use crate::resolve::ConstraintSystem;
use crate::solvers::simplex;
use crate::vset::VertexSet;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub lp_solves: u64,
}

/// Max-coverage greedy hitting set followed by removal of redundant picks.
pub fn greedy_hitting_set(sys: &ConstraintSystem) -> VertexSet {
    let n = sys.n;
    let mut chosen = VertexSet::new(n);
    let mut open: Vec<&VertexSet> = sys.constraints.iter().collect();
    while !open.is_empty() {
        let best = (0..n)
            .max_by_key(|&v| (open.iter().filter(|c| c.contains(v)).count(), std::cmp::Reverse(v)))
            .expect("n ≥ 1");
        chosen.insert(best);
        open.retain(|c| !c.contains(best));
    }
    let picks: Vec<usize> = chosen.iter().collect();
    for v in picks.into_iter().rev() {
        chosen.remove(v);
        if !sys.constraints.iter().all(|c| c.intersects(&chosen)) {
            chosen.insert(v);
        }
    }
    chosen
}

struct Search<'a> {
    n: usize,
    best: VertexSet,
    best_size: usize,
    stats: &'a mut SearchStats,
}

#[derive(Clone)]
struct Node {
    chosen: VertexSet,
    excluded: VertexSet,
    /// Unhit constraints restricted to available vertices, all nonempty.
    residual: Vec<VertexSet>,
}

impl Node {
    fn include(&mut self, v: usize) {
        self.chosen.insert(v);
        self.residual.retain(|c| !c.contains(v));
    }

    /// Returns `false` if some constraint ran out of vertices.
    fn exclude(&mut self, v: usize) -> bool {
        self.excluded.insert(v);
        for c in &mut self.residual {
            c.remove(v);
            if c.is_empty() {
                return false;
            }
        }
        true
    }

    /// Unit propagation, constraint dominance and vertex dominance to a
    /// fixpoint. Returns `false` on infeasibility.
    fn reduce(&mut self, n: usize) -> bool {
        loop {
            let mut changed = false;
            while let Some(v) = self.residual.iter().find(|c| c.len() == 1).map(|c| c.iter().next().unwrap()) {
                self.include(v);
                changed = true;
            }
            self.residual.sort_by_key(VertexSet::len);
            let mut kept: Vec<VertexSet> = Vec::with_capacity(self.residual.len());
            for c in self.residual.drain(..) {
                if !kept.iter().any(|k| k.is_subset(&c)) {
                    kept.push(c);
                }
            }
            self.residual = kept;

            let m = self.residual.len();
            let incidence: Vec<Option<VertexSet>> = (0..n)
                .map(|v| {
                    if self.chosen.contains(v) || self.excluded.contains(v) {
                        return None;
                    }
                    Some(VertexSet::from_iter_with(
                        m,
                        self.residual.iter().enumerate().filter(|(_, c)| c.contains(v)).map(|(i, _)| i),
                    ))
                })
                .collect();
            for u in 0..n {
                let Some(iu) = &incidence[u] else { continue };
                if self.excluded.contains(u) {
                    continue;
                }
                let dominated = (0..n).any(|w| {
                    w != u
                        && !self.excluded.contains(w)
                        && matches!(&incidence[w], Some(iw) if iu.is_subset(iw) && (iu != iw || w < u))
                });
                if dominated {
                    if !self.exclude(u) {
                        return false;
                    }
                    changed = true;
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn packing_bound(&self) -> usize {
        let mut used: Option<VertexSet> = None;
        let mut count = 0;
        for c in &self.residual {
            match &mut used {
                Some(u) if u.intersects(c) => {}
                Some(u) => {
                    u.union_with(c);
                    count += 1;
                }
                None => {
                    used = Some(c.clone());
                    count += 1;
                }
            }
        }
        count
    }

    fn lp_bound(&self, n: usize) -> usize {
        let mut index = vec![usize::MAX; n];
        let mut next = 0;
        let sets: Vec<Vec<usize>> = self
            .residual
            .iter()
            .map(|c| {
                c.iter()
                    .map(|v| {
                        if index[v] == usize::MAX {
                            index[v] = next;
                            next += 1;
                        }
                        index[v]
                    })
                    .collect()
            })
            .collect();
        let sol = simplex::solve_covering(next, &sets);
        let ceil = crate::rational::ceil_int(&sol.value);
        usize::try_from(ceil).expect("bound fits in usize")
    }
}

impl Search<'_> {
    fn run(&mut self, mut node: Node) {
        self.stats.nodes += 1;
        if !node.reduce(self.n) {
            return;
        }
        let size = node.chosen.len();
        if node.residual.is_empty() {
            if size < self.best_size {
                self.best_size = size;
                self.best = node.chosen;
            }
            return;
        }
        if size + 1 >= self.best_size || size + node.packing_bound() >= self.best_size {
            return;
        }
        self.stats.lp_solves += 1;
        if size + node.lp_bound(self.n) >= self.best_size {
            return;
        }

        // `reduce` sorted the residual by size, so the first is smallest.
        let target = node.residual[0].clone();
        let mut order: Vec<(usize, usize)> = target
            .iter()
            .map(|v| (node.residual.iter().filter(|c| c.contains(v)).count(), v))
            .collect();
        order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut base = node;
        for (_, v) in order {
            let mut child = base.clone();
            child.include(v);
            self.run(child);
            if !base.exclude(v) {
                break;
            }
        }
    }
}

/// Exact minimum hitting set of `sys`.
pub fn min_hitting_set(sys: &ConstraintSystem, stats: &mut SearchStats) -> VertexSet {
    let incumbent = greedy_hitting_set(sys);
    let n = sys.n;
    let mut search = Search {
        n,
        best_size: incumbent.len(),
        best: incumbent,
        stats,
    };
    let root = Node {
        chosen: VertexSet::new(n),
        excluded: VertexSet::new(n),
        residual: sys.constraints.clone(),
    };
    search.run(root);
    search.best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(n: usize, v: &[&[usize]]) -> ConstraintSystem {
        ConstraintSystem::from_sets(
            n,
            v.iter().map(|s| VertexSet::from_iter_with(n, s.iter().copied())).collect(),
        )
    }

    fn brute_force(sys: &ConstraintSystem) -> usize {
        (0u64..1 << sys.n)
            .filter(|mask| {
                sys.constraints
                    .iter()
                    .all(|c| c.iter().any(|v| mask >> v & 1 == 1))
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn triangle_pairs() {
        let sys = sets(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(greedy_hitting_set(&sys).len(), 2);
        assert_eq!(min_hitting_set(&sys, &mut SearchStats::default()).len(), 2);
    }

    #[test]
    fn matches_brute_force_on_cyclic_families() {
        for n in 4..12 {
            for width in 2..4 {
                let raw: Vec<Vec<usize>> = (0..n)
                    .map(|i| (0..width).map(|j| (i + j * j + j) % n).collect())
                    .collect();
                let refs: Vec<&[usize]> = raw.iter().map(Vec::as_slice).collect();
                let sys = sets(n, &refs);
                let best = min_hitting_set(&sys, &mut SearchStats::default());
                assert!(sys.constraints.iter().all(|c| c.intersects(&best)));
                assert_eq!(best.len(), brute_force(&sys), "n={n} width={width}");
            }
        }
    }
}
