//! Exact `dim_{k,f}` (rational simplex) and `dim_k` (branch and bound), each
//! returning a witness that is re-verified against the raw pair sets.

pub mod hitting;
pub mod simplex;

use serde::Serialize;

use crate::graph::Graph;
use crate::rational::{self, Rational};
use crate::resolve::{self, ConstraintSystem};
use crate::vset::VertexSet;
use crate::Error;

pub use hitting::SearchStats;

/// Default largest order accepted by [`dim_k_exact`].
pub const DEFAULT_EXACT_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FractionalWitness {
    #[serde(serialize_with = "ser_rationals")]
    pub values: Vec<Rational>,
    #[serde(serialize_with = "ser_rational")]
    pub total: Rational,
    /// Packing-dual solution, one entry per reduced constraint; its sum equals
    /// `total`, certifying optimality.
    #[serde(serialize_with = "ser_rationals")]
    pub dual: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntegerWitness {
    pub set: VertexSet,
    pub size: usize,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational::format(r))
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(rational::format))
}

/// Minimum-weight fractional cover of `sys`, with a dual of equal value.
pub fn simplex_min_exact(sys: &ConstraintSystem) -> FractionalWitness {
    let sets: Vec<Vec<usize>> = sys.constraints.iter().map(VertexSet::to_vec).collect();
    let sol = simplex::solve_covering(sys.n, &sets);
    // Costs are 1 and rows are 0/1 with right-hand side 1, so the dropped
    // bounds g ≤ 1 never bind at an optimum.
    assert!(
        sol.primal.iter().all(rational::is_unit_interval),
        "optimal covering solution left [0, 1]"
    );
    FractionalWitness {
        values: sol.primal,
        total: sol.value,
        dual: sol.dual,
    }
}

fn check_k(k: u32) -> Result<(), Error> {
    if k < 1 {
        Err(Error::InvalidK)
    } else {
        Ok(())
    }
}

/// `dim_{k,f}(G)` with a verified minimum resolving function.
pub fn dim_kf(g: &Graph, k: u32) -> Result<FractionalWitness, Error> {
    check_k(k)?;
    let sys = resolve::constraint_system(g, k)?;
    let w = simplex_min_exact(&sys);
    if !resolve::check_resolving_function(g, k, &w.values)? {
        return Err(Error::Verification(format!(
            "fractional witness of total {} misses a pair",
            rational::format(&w.total)
        )));
    }
    if w.values.iter().sum::<Rational>() != w.total {
        return Err(Error::Verification("witness values do not sum to total".into()));
    }
    Ok(w)
}

/// `dim_f(G) = dim_{diam,f}(G)`.
pub fn dim_f(g: &Graph) -> Result<FractionalWitness, Error> {
    let k = g.diameter()?.max(1);
    dim_kf(g, k)
}

/// Feasible (not necessarily minimum) hitting set by max-coverage greedy.
pub fn greedy_upper_bound(sys: &ConstraintSystem) -> IntegerWitness {
    let set = hitting::greedy_hitting_set(sys);
    IntegerWitness {
        size: set.len(),
        set,
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ExactOptions {
    pub limit: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            limit: DEFAULT_EXACT_LIMIT,
        }
    }
}

/// `dim_k(G)` by branch and bound, using the default size limit.
pub fn dim_k_exact(g: &Graph, k: u32) -> Result<IntegerWitness, Error> {
    dim_k_exact_with(g, k, ExactOptions::default(), &mut SearchStats::default())
}

pub fn dim_k_exact_with(
    g: &Graph,
    k: u32,
    opts: ExactOptions,
    stats: &mut SearchStats,
) -> Result<IntegerWitness, Error> {
    check_k(k)?;
    if g.order() > opts.limit {
        return Err(Error::SizeLimit {
            n: g.order(),
            limit: opts.limit,
        });
    }
    let sys = resolve::constraint_system(g, k)?;
    let set = hitting::min_hitting_set(&sys, stats);
    if !resolve::check_resolving_set(g, k, &set)? {
        return Err(Error::Verification(format!(
            "resolving set {:?} misses a pair",
            set
        )));
    }
    Ok(IntegerWitness {
        size: set.len(),
        set,
    })
}

/// `dim(G) = dim_{diam}(G)`.
pub fn dim(g: &Graph) -> Result<IntegerWitness, Error> {
    let k = g.diameter()?.max(1);
    dim_k_exact(g, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::rational::{int, ratio};

    #[test]
    fn fractional_examples() {
        let k2 = resolve::constraint_system(&complete(2).unwrap(), 1).unwrap();
        assert_eq!(simplex_min_exact(&k2).total, int(1));
        assert_eq!(dim_f(&cycle(5).unwrap()).unwrap().total, ratio(5, 4));
        assert_eq!(dim_kf(&petersen(), 1).unwrap().total, ratio(5, 3));
        assert_eq!(dim_kf(&path(3).unwrap(), 1).unwrap().total, int(1));
        assert_eq!(dim_kf(&cycle(8).unwrap(), 1).unwrap().total, int(2));
        assert_eq!(dim_kf(&complete(4).unwrap(), 1).unwrap().total, int(2));
        assert_eq!(dim_f(&path(7).unwrap()).unwrap().total, int(1));
        assert_eq!(dim_f(&grid(4, 3).unwrap()).unwrap().total, int(2));
        assert_eq!(
            dim_f(&complete_multipartite(&[2, 3]).unwrap()).unwrap().total,
            ratio(5, 2)
        );
    }

    #[test]
    fn witnesses_carry_dual_certificates() {
        let w = dim_kf(&petersen(), 2).unwrap();
        assert_eq!(w.dual.iter().sum::<Rational>(), w.total);
        assert!(w.values.iter().all(rational::is_unit_interval));
    }

    #[test]
    fn integer_examples() {
        assert_eq!(dim_k_exact(&cycle(10).unwrap(), 1).unwrap().size, 4);
        assert_eq!(dim_k_exact(&path(4).unwrap(), 1).unwrap().size, 2);
        for k in 1..4 {
            assert_eq!(dim_k_exact(&complete(5).unwrap(), k).unwrap().size, 4);
        }
        let k3 = resolve::constraint_system(&complete(3).unwrap(), 1).unwrap();
        assert_eq!(greedy_upper_bound(&k3).size, 2);
        let p5 = resolve::constraint_system(&path(5).unwrap(), 4).unwrap();
        let w = greedy_upper_bound(&p5);
        assert_eq!(w.size, 1);
        assert!(resolve::check_resolving_set(&path(5).unwrap(), 4, &w.set).unwrap());
    }

    #[test]
    fn refusals() {
        let big = path(70).unwrap();
        assert!(matches!(
            dim_k_exact(&big, 1),
            Err(Error::SizeLimit { n: 70, limit: 64 })
        ));
        assert!(matches!(dim_kf(&complete(1).unwrap(), 1), Err(Error::TooSmall(1))));
        assert!(matches!(dim_kf(&path(3).unwrap(), 0), Err(Error::InvalidK)));
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(dim_kf(&two, 1).is_err());
    }
}
