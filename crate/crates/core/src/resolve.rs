//! Pair-distinguishing sets `R_k{x,y}`, twin classes, and the reduced
//! covering system shared by the LP and hitting-set solvers.

use std::collections::HashMap;

use serde::Serialize;

use crate::graph::{DistanceMatrix, Graph};
use crate::rational::{self, Rational};
use crate::vset::VertexSet;
use crate::Error;

/// `R_k{x,y}` by scanning every `z` and comparing truncated distances.
pub fn r_k_pair(d: &DistanceMatrix, k: u32, x: usize, y: usize) -> Result<VertexSet, Error> {
    if x == y {
        return Err(Error::SamePair(x));
    }
    Ok(VertexSet::from_iter_with(
        d.order(),
        (0..d.order()).filter(|&z| d.truncated(k, x, z) != d.truncated(k, y, z)),
    ))
}

/// `R_k{x,y} = (N_k[x] ∪ N_k[y]) − ⋃_{i=1..k} (N_i(x) ∩ N_i(y))`.
pub fn r_k_pair_neighborhood_form(
    d: &DistanceMatrix,
    k: u32,
    x: usize,
    y: usize,
) -> Result<VertexSet, Error> {
    if x == y {
        return Err(Error::SamePair(x));
    }
    let mut out = d.ball(k, x);
    out.union_with(&d.ball(k, y));
    for i in 1..=k {
        let mut common = d.shell(i, x);
        common.intersect_with(&d.shell(i, y));
        out.difference_with(&common);
    }
    Ok(out)
}

pub fn are_twins(g: &Graph, x: usize, y: usize) -> bool {
    let strip = |v: usize, other: usize| g.neighbors(v).iter().copied().filter(move |&w| w != other);
    x != y && strip(x, y).eq(strip(y, x))
}

/// Classes of the twin relation `N(x) − {y} = N(y) − {x}`, each sorted,
/// ordered by smallest member.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'outer: for v in 0..g.order() {
        for class in &mut classes {
            if are_twins(g, class[0], v) {
                class.push(v);
                continue 'outer;
            }
        }
        classes.push(vec![v]);
    }
    classes
}

/// Deduplicated, dominance-reduced family of `R_k` sets.
#[derive(Clone, Debug, Serialize)]
pub struct ConstraintSystem {
    pub n: usize,
    pub k: u32,
    /// `k ≥ diam − 1`: truncation changes nothing.
    pub untruncated: bool,
    pub constraints: Vec<VertexSet>,
    /// Lexicographically smallest pair `(x, y)` whose set is the constraint.
    pub provenance: Vec<(usize, usize)>,
}

impl ConstraintSystem {
    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Builds a system from arbitrary nonempty sets over `0..n`, applying the
    /// same deduplication and dominance pruning. Representative pairs are
    /// unavailable here and are recorded as `(0, 0)`.
    pub fn from_sets(n: usize, sets: Vec<VertexSet>) -> Self {
        let tagged = sets.into_iter().map(|s| (s, (0, 0))).collect();
        let (constraints, provenance) = reduce(tagged);
        ConstraintSystem {
            n,
            k: 0,
            untruncated: false,
            constraints,
            provenance,
        }
    }
}

/// Constraint sets in first-seen order, then drop any set containing another.
fn reduce(tagged: Vec<(VertexSet, (usize, usize))>) -> (Vec<VertexSet>, Vec<(usize, usize)>) {
    let mut seen: HashMap<VertexSet, (usize, usize)> = HashMap::with_capacity(tagged.len());
    let mut unique = Vec::new();
    for (set, pair) in tagged {
        if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(set.clone()) {
            e.insert(pair);
            unique.push((set, pair));
        }
    }
    unique.sort_by_key(|(s, _)| s.len());
    let mut kept: Vec<(VertexSet, (usize, usize))> = Vec::new();
    for (set, pair) in unique {
        if !kept.iter().any(|(k, _)| k.is_subset(&set)) {
            kept.push((set, pair));
        }
    }
    kept.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    kept.into_iter().unzip()
}

fn require_solvable(g: &Graph) -> Result<DistanceMatrix, Error> {
    if g.order() < 2 {
        return Err(Error::TooSmall(g.order()));
    }
    let d = DistanceMatrix::new(g);
    if !d.is_connected() {
        return Err(Error::Graph(crate::graph::GraphError::Disconnected));
    }
    Ok(d)
}

fn all_pair_sets(d: &DistanceMatrix, k: u32) -> impl Iterator<Item = ((usize, usize), VertexSet)> + '_ {
    let n = d.order();
    (0..n).flat_map(move |x| {
        (x + 1..n).map(move |y| ((x, y), r_k_pair(d, k, x, y).expect("x < y")))
    })
}

pub fn constraint_system(g: &Graph, k: u32) -> Result<ConstraintSystem, Error> {
    if k < 1 {
        return Err(Error::InvalidK);
    }
    let d = require_solvable(g)?;
    let diam = d.diameter()?;
    let tagged = all_pair_sets(&d, k).map(|(p, s)| (s, p)).collect();
    let (constraints, provenance) = reduce(tagged);
    Ok(ConstraintSystem {
        n: g.order(),
        k,
        untruncated: k + 1 >= diam,
        constraints,
        provenance,
    })
}

/// Does `s` meet every `R_k{x,y}`? Recomputed from the raw pairs.
pub fn check_resolving_set(g: &Graph, k: u32, s: &VertexSet) -> Result<bool, Error> {
    let d = require_solvable(g)?;
    let ok = all_pair_sets(&d, k).all(|(_, r)| r.intersects(s));
    Ok(ok)
}

/// Does `values` put mass at least 1 on every `R_k{x,y}`? Recomputed from
/// the raw pairs.
pub fn check_resolving_function(g: &Graph, k: u32, values: &[Rational]) -> Result<bool, Error> {
    if values.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            got: values.len(),
        });
    }
    if let Some((v, val)) = values
        .iter()
        .enumerate()
        .find(|(_, val)| !rational::is_unit_interval(val))
    {
        return Err(Error::ValueOutOfRange {
            vertex: v,
            value: rational::format(val),
        });
    }
    let d = require_solvable(g)?;
    let one = rational::int(1);
    let ok = all_pair_sets(&d, k).all(|(_, r)| r.iter().map(|z| &values[z]).sum::<Rational>() >= one);
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::rational::ratio;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_iter_with(n, v.iter().copied())
    }

    #[test]
    fn pair_sets_on_small_graphs() {
        let d = DistanceMatrix::new(&path(4).unwrap());
        assert_eq!(r_k_pair(&d, 1, 0, 1).unwrap(), set(4, &[0, 1, 2]));
        assert_eq!(r_k_pair_neighborhood_form(&d, 1, 0, 1).unwrap(), set(4, &[0, 1, 2]));
        assert!(matches!(r_k_pair(&d, 1, 2, 2), Err(Error::SamePair(2))));

        let k5 = DistanceMatrix::new(&complete(5).unwrap());
        assert_eq!(r_k_pair(&k5, 3, 1, 4).unwrap(), set(5, &[1, 4]));

        let c6 = DistanceMatrix::new(&cycle(6).unwrap());
        for x in 0..6 {
            assert_eq!(r_k_pair(&c6, 2, x, (x + 1) % 6).unwrap(), VertexSet::full(6));
        }
    }

    #[test]
    fn petersen_forms_agree() {
        let d = DistanceMatrix::new(&petersen());
        for x in 0..10 {
            for y in x + 1..10 {
                assert_eq!(
                    r_k_pair(&d, 1, x, y).unwrap(),
                    r_k_pair_neighborhood_form(&d, 1, x, y).unwrap()
                );
            }
        }
    }

    #[test]
    fn twins() {
        assert_eq!(twin_classes(&cycle(4).unwrap()), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(twin_classes(&path(4).unwrap()).len(), 4);
        assert_eq!(twin_classes(&complete(5).unwrap()), vec![vec![0, 1, 2, 3, 4]]);
        let star = spider(&[1, 1, 1]).unwrap();
        assert_eq!(twin_classes(&star), vec![vec![0], vec![1, 2, 3]]);
    }

    #[test]
    fn systems() {
        let k3 = constraint_system(&complete(3).unwrap(), 2).unwrap();
        assert_eq!(k3.len(), 3);
        assert!(k3.constraints.iter().all(|c| c.len() == 2));
        assert!(k3.untruncated);

        // P_3 at k = 1: R{0,1} = {0,1,2} ⊇ R{0,2} = {0,2}; R{1,2} = {0,1,2}.
        let p3 = constraint_system(&path(3).unwrap(), 1).unwrap();
        assert_eq!(p3.constraints, vec![set(3, &[0, 2])]);
        assert_eq!(p3.provenance, vec![(0, 2)]);

        let c8 = constraint_system(&cycle(8).unwrap(), 1).unwrap();
        assert!(c8.constraints.iter().all(|c| c.len() >= 4));
        assert!(!c8.untruncated);

        let disconnected = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(constraint_system(&disconnected, 1).is_err());
        assert!(matches!(
            constraint_system(&complete(1).unwrap(), 1),
            Err(Error::TooSmall(1))
        ));
        assert!(matches!(constraint_system(&complete(2).unwrap(), 0), Err(Error::InvalidK)));
    }

    #[test]
    fn dominance_keeps_smallest_representative() {
        let sys = ConstraintSystem::from_sets(
            4,
            vec![set(4, &[0, 1, 2]), set(4, &[1, 2]), set(4, &[1, 2]), set(4, &[3])],
        );
        assert_eq!(sys.constraints, vec![set(4, &[1, 2]), set(4, &[3])]);
    }

    #[test]
    fn checkers() {
        let c5 = cycle(5).unwrap();
        assert!(check_resolving_function(&c5, 2, &vec![ratio(1, 4); 5]).unwrap());
        assert!(!check_resolving_function(&c5, 2, &vec![ratio(1, 5); 5]).unwrap());
        let g = petersen();
        assert!(check_resolving_function(&g, 1, &vec![ratio(1, 2); 10]).unwrap());
        assert!(matches!(
            check_resolving_function(&g, 1, &vec![ratio(3, 2); 10]),
            Err(Error::ValueOutOfRange { vertex: 0, .. })
        ));
        assert!(check_resolving_function(&g, 1, &vec![ratio(1, 2); 3]).is_err());

        let k4 = complete(4).unwrap();
        assert!(check_resolving_set(&k4, 1, &set(4, &[0, 1, 2])).unwrap());
        assert!(!check_resolving_set(&k4, 1, &set(4, &[0, 1])).unwrap());
    }
}
