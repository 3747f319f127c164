//! Tree suite: closed forms for `dim_f` and `dim`, the three tree
//! characterizations, and the structure of minimum resolving functions.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{coverage, job, run_jobs, Case, Instance, Job, Resolved};
use crate::characterize::{self, TreeProfile};
use crate::formulas;
use crate::generators::{self, Family};
use crate::graph::Graph;
use crate::rational::{self, int, ratio, Rational};
use crate::solvers;
use crate::Error;

const RANDOM_TREES: usize = 200;
/// Relabelings tried when the first optimal witness misses a structural
/// property that some optimal witness must have.
const RELABEL_ATTEMPTS: u64 = 8;

const DIM1F: &str = "tree dim_1f = dim_f iff P_2, P_3 or V = M_2 + leaves";
const DIM1: &str = "tree dim_1 = dim iff P_2, P_3 or star with at most x-1 edges subdivided once";
const SPIDER: &str = "single exterior major: dim_kf = dim_f iff every terminal within k";

fn corpus(r: &Resolved) -> Result<Vec<(String, Graph)>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(r.seed.wrapping_add(2));
    let mut out = Vec::new();
    for i in 0..RANDOM_TREES {
        let n = rng.gen_range(2..=r.max_n.max(2));
        let seed = rng.gen::<u64>();
        let t = generators::random_tree(n, seed)?;
        out.push((format!("random/{i:03}"), t));
    }
    let mut extras = vec![
        Family::Path(2),
        Family::Path(3),
        Family::Path(4),
        Family::Spider(vec![1, 1, 2]),
        Family::Spider(vec![2, 2, 2]),
    ];
    for x in 3..=6 {
        extras.push(Family::Spider(vec![1; x]));
    }
    for x in 1..=3 {
        for a in 3..=5 {
            extras.push(Family::Caterpillar(x, a));
        }
    }
    for (i, f) in extras.into_iter().enumerate() {
        out.push((format!("extra/{i:02}"), f.build()?));
    }
    for x in 3..=5 {
        for s in 0..=x {
            out.push((format!("substar/x={x}/s={s}"), generators::subdivided_star(x, s)?));
        }
    }
    Ok(out)
}

/// Leg multisets over lengths `1..=4` with 3 or 4 legs.
fn spider_legs() -> Vec<Vec<usize>> {
    fn rec(len: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for l in min..=4 {
            cur.push(l);
            rec(len, l, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for len in 3..=4 {
        rec(len, 1, &mut Vec::new(), &mut out);
    }
    out
}

pub(super) fn instances(r: &Resolved) -> Result<Vec<Instance>, Error> {
    let mut out = Vec::new();
    for (label, t) in corpus(r)? {
        let diam = t.diameter()?;
        let mut ks = vec![1, diam];
        ks.dedup();
        out.push(Instance::new(label, t, ks));
    }
    for legs in spider_legs() {
        let t = generators::spider(&legs)?;
        let mut ks: Vec<u32> = (1..=r.max_k).collect();
        ks.push(t.diameter()?);
        ks.sort_unstable();
        ks.dedup();
        out.push(Instance::new(Family::Spider(legs).to_string(), t, ks));
    }
    Ok(out)
}

fn sum_over(values: &[Rational], vs: impl IntoIterator<Item = usize>) -> Rational {
    vs.into_iter().map(|v| &values[v]).sum()
}

/// Properties every minimum resolving function of a tree with `ex ≥ 1`
/// has: mass `α/2` on `T_v − v` for each `v ∈ M_2`, these masses summing to
/// `dim_f`, and zero on major vertices, interior degree-2 vertices and each
/// `T_v` with `v ∈ M_1`.
fn witness_structure(p: &TreeProfile, values: &[Rational], dim_f: &Rational) -> Result<(), String> {
    let mut total = Rational::from_integer(0.into());
    for &v in &p.m2 {
        let mass = sum_over(values, p.subtrees[&v].iter().copied().filter(|&x| x != v));
        let alpha = p.terminal_degree(v);
        if mass != ratio(alpha as i64, 2) {
            return Err(format!("T_{v} - {v} has mass {}, want {alpha}/2", rational::format(&mass)));
        }
        total += mass;
    }
    if &total != dim_f {
        return Err(format!("M_2 subtrees carry {}, want {}", rational::format(&total), rational::format(dim_f)));
    }
    let mut zero: Vec<usize> = p.major.clone();
    zero.extend(&p.interior_deg2);
    for v in &p.m1 {
        zero.extend(&p.subtrees[v]);
    }
    if let Some(&x) = zero.iter().find(|&&x| values[x] != int(0)) {
        return Err(format!("vertex {x} should carry 0, has {}", rational::format(&values[x])));
    }
    Ok(())
}

fn relabel(t: &Graph, perm: &[usize]) -> Result<Graph, Error> {
    let edges: Vec<(usize, usize)> = t.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Ok(Graph::from_edge_list(t.order(), &edges)?)
}

/// Checks the first optimal witness, then witnesses obtained from
/// relabeled copies (which the simplex may resolve to other optima).
fn witness_case(key: String, label: &str, t: &Graph, p: &TreeProfile, first: &[Rational], dim_f: &Rational) -> Case {
    let case = Case::builder(key, "minimum resolving function of a tree: T_v masses and forced zeros", label, None);
    let mut last = match witness_structure(p, first, dim_f) {
        Ok(()) => return case.holds("some optimal witness has the structure", "first witness".into(), true),
        Err(e) => e,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(t.order() as u64);
    for attempt in 1..=RELABEL_ATTEMPTS {
        let mut perm: Vec<usize> = (0..t.order()).collect();
        perm.shuffle(&mut rng);
        let solved = relabel(t, &perm).and_then(|g| solvers::dim_f(&g));
        let w = match solved {
            Ok(w) => w,
            Err(e) => return case.error(&e),
        };
        let back: Vec<Rational> = (0..t.order()).map(|v| w.values[perm[v]].clone()).collect();
        match witness_structure(p, &back, dim_f) {
            Ok(()) => {
                return case.holds(
                    "some optimal witness has the structure",
                    format!("witness after {attempt} relabeling(s)"),
                    true,
                )
            }
            Err(e) => last = e,
        }
    }
    case.holds("some optimal witness has the structure", format!("none found: {last}"), false)
}

/// Consequences of `dim_{1,f} = dim_f` for trees with `ex ≥ 1`.
fn equality_structure(t: &Graph, p: &TreeProfile) -> Result<(), String> {
    for &v in &p.m2 {
        if let Some(&l) = p.terminals[&v].iter().find(|&&l| !t.has_edge(v, l)) {
            return Err(format!("terminal {l} of {v} not adjacent"));
        }
    }
    if !p.m1.is_empty() {
        return Err(format!("terminal-degree-1 majors {:?}", p.m1));
    }
    if let Some(&v) = p.major.iter().find(|&&v| p.terminal_degree(v) == 0) {
        return Err(format!("terminal-degree-0 major {v}"));
    }
    if !p.interior_deg2.is_empty() {
        return Err(format!("interior degree-2 vertices {:?}", p.interior_deg2));
    }
    Ok(())
}

fn tree_cases(key: &str, label: &str, t: &Graph) -> Vec<Case> {
    let c = |suffix: &str, claim: &str, k: Option<u32>| Case::builder(format!("tree/{key}/{suffix}"), claim, label, k);
    let run = || -> Result<Vec<Case>, Error> {
        let p = characterize::tree_profile(t)?;
        let f = solvers::dim_f(t)?;
        let f1 = solvers::dim_kf(t, 1)?;
        let d = solvers::dim(t)?.size;
        let d1 = solvers::dim_k_exact(t, 1)?.size;
        let mut out = Vec::new();
        let tf = formulas::tree_f(t)?;
        out.push(c("f", "tree dim_f = (sigma - ex_1)/2", None).formula(&tf.value, tf.branch, &f.total));
        if p.ex == 0 {
            out.push(c("dim", "path dim = 1", None).int(1, d as u64));
        } else {
            out.push(c("dim", "tree dim = sigma - ex", None).int(formulas::tree_dim(t)? as u64, d as u64));
        }
        let eq1f = f1.total == f.total;
        out.push(c("1f", DIM1F, Some(1)).agree(characterize::tree_dim1f_eq_dimf(t)?, eq1f));
        out.push(c("1", DIM1, Some(1)).agree(characterize::tree_dim1_eq_dim(t)?, d1 == d));
        if p.ex >= 1 {
            out.push(witness_case(format!("tree/{key}/witness"), label, t, &p, &f.values, &f.total));
            if eq1f {
                let r = equality_structure(t, &p);
                out.push(
                    c("1f-structure", "tree with dim_1f = dim_f: terminals adjacent, no M_1, no interior vertices", Some(1))
                        .holds("all hold", r.clone().err().unwrap_or_else(|| "all hold".into()), r.is_ok()),
                );
            }
        }
        Ok(out)
    };
    run().unwrap_or_else(|e| vec![c("solve", "tree suite", None).error(&e)])
}

fn spider_cases(legs: &[usize], max_k: u32) -> Vec<Case> {
    let label = Family::Spider(legs.to_vec()).to_string();
    let tag: String = legs.iter().map(ToString::to_string).collect();
    let run = || -> Result<Vec<Case>, Error> {
        let t = generators::spider(legs)?;
        let f = solvers::dim_f(&t)?;
        let mut out = Vec::new();
        for k in 1..=max_k {
            let fk = solvers::dim_kf(&t, k)?;
            let pred = characterize::tree_single_major_kf_eq_f(&t, k)?;
            out.push(Case::builder(format!("tree/spider/{tag:0<4}/k={k}"), SPIDER, label.clone(), Some(k)).agree(pred, fk.total == f.total));
        }
        Ok(out)
    };
    run().unwrap_or_else(|e| vec![Case::builder(format!("tree/spider/{tag}"), SPIDER, label.clone(), None).error(&e)])
}

pub(super) fn suite(r: &Resolved) -> Result<Vec<Case>, Error> {
    let trees = corpus(r)?;
    let legs = spider_legs();
    let max_k = r.max_k.max(1);
    let mut jobs: Vec<Job<'_>> = trees
        .iter()
        .map(|(key, t)| job(move || tree_cases(key, key, t)))
        .collect();
    for l in &legs {
        jobs.push(job(move || spider_cases(l, max_k)));
    }
    let mut cases = run_jobs(jobs);
    coverage(&mut cases, "tree", &[DIM1F, DIM1, SPIDER]);
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spider_leg_count() {
        // Multisets of size 3 and 4 over 4 lengths.
        assert_eq!(spider_legs().len(), 20 + 35);
    }

    #[test]
    fn caterpillar_witness_structure() {
        let t = generators::leaf_cluster_caterpillar(2, 3).unwrap();
        let p = characterize::tree_profile(&t).unwrap();
        let f = solvers::dim_f(&t).unwrap();
        assert!(witness_structure(&p, &f.values, &f.total).is_ok());
        let bad = vec![int(1); t.order()];
        assert!(witness_structure(&p, &bad, &f.total).is_err());
    }
}
