//! Suites over the named families: closed forms for `dim_{k,f}` and
//! `dim_k`, the grid characterization and block bounds, the gap
//! constructions and the cycle/path pair.

use std::collections::BTreeSet;

use super::{coverage, job, run_jobs, Case, Instance, Job, Resolved};
use crate::characterize;
use crate::formulas::{self, Formula, PathOrCycle};
use crate::generators::{self, Family};
use crate::graph::DistanceMatrix;
use crate::rational::{self, int, ratio, Rational};
use crate::resolve;
use crate::solvers;
use crate::vset::VertexSet;
use crate::Error;

fn ks(max_k: u32) -> Vec<u32> {
    (1..=max_k).collect()
}

fn build(f: &Family) -> Result<Instance, Error> {
    let g = f.build()?;
    Ok(Instance::new(f.to_string(), g, Vec::new()))
}

/// One job per `(instance, k)` comparing the LP with a closed form.
fn lp_against<'a, F>(prefix: &'a str, claim: &'a str, insts: &'a [(Instance, u64)], formula: F) -> Vec<Job<'a>>
where
    F: Fn(u64, u64) -> Result<Formula, Error> + Copy + Send + Sync + 'a,
{
    let mut jobs = Vec::new();
    for (inst, param) in insts {
        for &k in &inst.ks {
            jobs.push(job(move || {
                let case = Case::builder(
                    format!("{prefix}/{param:03}/k={k}"),
                    claim,
                    inst.label.clone(),
                    Some(k),
                );
                let got = solvers::dim_kf(&inst.graph, k);
                let want = formula(*param, u64::from(k));
                vec![match (got, want) {
                    (Ok(w), Ok(f)) => case.formula(&f.value, f.branch, &w.total),
                    (Err(e), _) | (_, Err(e)) => case.error(&e),
                }]
            }));
        }
    }
    jobs
}

fn with_param(insts: Vec<Instance>, param: impl Fn(&Instance) -> u64) -> Vec<(Instance, u64)> {
    insts.into_iter().map(|i| {
        let p = param(&i);
        (i, p)
    }).collect()
}

pub(super) fn cycle_instances(r: &Resolved) -> Result<Vec<Instance>, Error> {
    (3..=r.max_n)
        .map(|n| Ok(Instance { ks: ks(r.max_k), ..build(&Family::Cycle(n))? }))
        .collect()
}

pub(super) fn cycles(r: &Resolved) -> Result<Vec<Case>, Error> {
    let insts = with_param(cycle_instances(r)?, |i| i.graph.order() as u64);
    Ok(run_jobs(lp_against("C", "cycle dim_kf closed form", &insts, formulas::cycle_kf)))
}

pub(super) fn path_instances(r: &Resolved) -> Result<Vec<Instance>, Error> {
    (2..=r.max_n)
        .map(|n| Ok(Instance { ks: ks(r.max_k), ..build(&Family::Path(n))? }))
        .collect()
}

pub(super) fn paths(r: &Resolved) -> Result<Vec<Case>, Error> {
    let insts = with_param(path_instances(r)?, |i| i.graph.order() as u64);
    Ok(run_jobs(lp_against("P", "path dim_kf closed form or bounds", &insts, formulas::path_kf)))
}

/// `P_n + K_1` for graph orders up to `max_n`.
pub(super) fn fan_instances(r: &Resolved) -> Result<Vec<Instance>, Error> {
    (1..r.max_n)
        .map(|n| Ok(Instance { ks: ks(r.max_k), ..build(&Family::Fan(n))? }))
        .collect()
}

pub(super) fn fans(r: &Resolved) -> Result<Vec<Case>, Error> {
    let insts = with_param(fan_instances(r)?, |i| i.graph.order() as u64 - 1);
    Ok(run_jobs(lp_against("fan", "fan dim_kf closed form or bounds", &insts, formulas::fan_kf)))
}

/// `C_n + K_1` for graph orders `4..=max_n`; order 4 is `K_4`.
pub(super) fn wheel_instances(r: &Resolved) -> Result<Vec<Instance>, Error> {
    (4..=r.max_n)
        .map(|order| {
            let inst = if order == 4 {
                Instance::new("W_4=K_4", generators::complete(4)?, Vec::new())
            } else {
                build(&Family::Wheel(order))?
            };
            Ok(Instance { ks: ks(r.max_k), ..inst })
        })
        .collect()
}

pub(super) fn wheels(r: &Resolved) -> Result<Vec<Case>, Error> {
    let insts = with_param(wheel_instances(r)?, |i| i.graph.order() as u64 - 1);
    Ok(run_jobs(lp_against("wheel", "wheel dim_kf closed form", &insts, formulas::wheel_kf)))
}

/// Non-increasing partitions of `n` into at least two parts.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn multipartite_ks(r: &Resolved) -> Vec<u32> {
    let mut v = vec![1, r.max_k.max(1)];
    v.dedup();
    v
}

pub(super) fn multipartite_instances(r: &Resolved) -> Result<Vec<Instance>, Error> {
    let mut out = Vec::new();
    for n in 2..=r.max_n {
        for p in partitions(n) {
            out.push(Instance { ks: multipartite_ks(r), ..build(&Family::Multipartite(p))? });
        }
    }
    Ok(out)
}

pub(super) fn multipartite(r: &Resolved) -> Result<Vec<Case>, Error> {
    let mut parts = Vec::new();
    for n in 2..=r.max_n {
        parts.extend(partitions(n));
    }
    let insts = multipartite_instances(r)?;
    let jobs: Vec<Job<'_>> = parts
        .iter()
        .zip(&insts)
        .map(|(p, inst)| {
            job(move || {
                let tag = p.iter().map(|a| format!("{a:02}")).collect::<Vec<_>>().join(",");
                let mut cases = Vec::new();
                let mut values = Vec::new();
                for &k in &inst.ks {
                    let case = Case::builder(format!("K/{tag}/k={k}"), "multipartite dim_kf closed form", inst.label.clone(), Some(k));
                    match (solvers::dim_kf(&inst.graph, k), formulas::multipartite_f(p)) {
                        (Ok(w), Ok(f)) => {
                            values.push(w.total.clone());
                            cases.push(case.formula(&f.value, f.branch, &w.total));
                        }
                        (Err(e), _) | (_, Err(e)) => cases.push(case.error(&e)),
                    }
                }
                let diam = inst.graph.diameter().unwrap_or(u32::MAX);
                let same = values.windows(2).all(|w| w[0] == w[1]);
                let shown = values.iter().map(rational::format).collect::<Vec<_>>().join(" ");
                cases.push(
                    Case::builder(format!("K/{tag}/independence"), "diameter <= 2 makes dim_kf independent of k", inst.label.clone(), None)
                        .holds("diam <= 2 and equal values", format!("diam {diam}, values {shown}"), diam <= 2 && same && !values.is_empty()),
                );
                cases
            })
        })
        .collect();
    Ok(run_jobs(jobs))
}

pub(super) fn petersen_instances(r: &Resolved) -> Result<Vec<Instance>, Error> {
    Ok(vec![Instance { ks: ks(r.max_k), ..build(&Family::Petersen)? }])
}

pub(super) fn petersen(r: &Resolved) -> Result<Vec<Case>, Error> {
    let insts = with_param(petersen_instances(r)?, |_| 0);
    let mut jobs = lp_against("petersen", "petersen dim_kf = 5/3", &insts, |_, k| formulas::petersen_kf(k));
    jobs.push(job(|| {
        let case = Case::builder("petersen/dim_f", "petersen dim_f = 5/3", "Petersen", None);
        vec![match solvers::dim_f(&generators::petersen()) {
            Ok(w) => case.rational(&ratio(5, 3), &w.total),
            Err(e) => case.error(&e),
        }]
    }));
    Ok(run_jobs(jobs))
}

fn grid_sides(r: &Resolved) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for s in 2..=r.max_n {
        for t in 2..=s {
            out.push((s, t));
        }
    }
    out
}

pub(super) fn grid_instances(r: &Resolved) -> Result<Vec<Instance>, Error> {
    let mut out = Vec::new();
    for (s, t) in grid_sides(r) {
        let inst = build(&Family::Grid(s, t))?;
        let diam = inst.graph.diameter()?;
        let mut ks = vec![1, diam];
        ks.dedup();
        out.push(Instance { ks, ..inst });
    }
    out.push(Instance { ks: vec![1], ..build(&Family::Grid(8, 6))? });
    Ok(out)
}

/// Blocks `P_{2k+2} × P_{2k+1}` tiling `P_{2(2k+2)} × P_{2(2k+1)}`: each
/// contains `R_k` of its two adjacent central vertices.
fn block_containment(k: u32) -> Result<Vec<Case>, Error> {
    let (bs, bt) = (2 * k as usize + 2, 2 * k as usize + 1);
    let (s, t) = (2 * bs, 2 * bt);
    let g = generators::grid(s, t)?;
    let d = DistanceMatrix::new(&g);
    let id = |i: usize, j: usize| i * t + j;
    let mut cases = Vec::new();
    for bi in 0..2 {
        for bj in 0..2 {
            let (oi, oj) = (bi * bs, bj * bt);
            let block = VertexSet::from_iter_with(
                g.order(),
                (oi..oi + bs).flat_map(|i| (oj..oj + bt).map(move |j| id(i, j))),
            );
            let c = k as usize;
            let (x, y) = (id(oi + c, oj + c), id(oi + c + 1, oj + c));
            let rk = resolve::r_k_pair(&d, k, x, y)?;
            cases.push(
                Case::builder(
                    format!("grid/blocks/k={k}/{bi}{bj}"),
                    "central pair of a grid block is distinguished only inside the block",
                    format!("P_{s}xP_{t}"),
                    Some(k),
                )
                .holds("R_k{x,y} within block", format!("|R_k| = {}, inside = {}", rk.len(), rk.is_subset(&block)), rk.is_subset(&block)),
            );
        }
    }
    Ok(cases)
}

pub(super) fn grids(r: &Resolved) -> Result<Vec<Case>, Error> {
    let sides = grid_sides(r);
    let mut jobs: Vec<Job<'_>> = Vec::new();
    for &(s, t) in &sides {
        jobs.push(job(move || {
            let label = Family::Grid(s, t).to_string();
            let key = format!("grid/{s:02}x{t:02}");
            let g = match generators::grid(s, t) {
                Ok(g) => g,
                Err(e) => return vec![Case::builder(key, "grid dim_f = 2", label, None).error(&e.into())],
            };
            let f = solvers::dim_f(&g);
            let f1 = solvers::dim_kf(&g, 1);
            let mut out = Vec::new();
            let case = Case::builder(format!("{key}/f"), "grid dim_f = 2", label.clone(), None);
            out.push(match (&f, formulas::grid_f(s as u64, t as u64)) {
                (Ok(w), Ok(fm)) => case.formula(&fm.value, fm.branch, &w.total),
                (Err(e), _) => case.error(e),
                (_, Err(e)) => case.error(&e),
            });
            let case = Case::builder(format!("{key}/1f"), "grid dim_1f = dim_f iff small grid", label, Some(1));
            out.push(match (&f, &f1, characterize::grid_dim1f_eq_dimf(s, t)) {
                (Ok(a), Ok(b), Ok(pred)) => case.agree(pred, a.total == b.total),
                (Err(e), _, _) | (_, Err(e), _) => case.error(e),
                (_, _, Err(e)) => case.error(&e),
            });
            out
        }));
    }
    jobs.push(job(|| {
        let case = Case::builder("grid/blocks/08x06/lp", "disjoint block lower bound", "P_8xP_6", Some(1));
        vec![match generators::grid(8, 6).map_err(Error::from).and_then(|g| solvers::dim_kf(&g, 1)) {
            Ok(w) => case.holds(">= 4", rational::format(&w.total), w.total >= int(4)),
            Err(e) => case.error(&e),
        }]
    }));
    for k in 1..=2 {
        jobs.push(job(move || block_containment(k).unwrap_or_else(|e| {
            vec![Case::builder(format!("grid/blocks/k={k}"), "central pair of a grid block is distinguished only inside the block", "grid", Some(k)).error(&e)]
        })));
    }
    let mut cases = run_jobs(jobs);
    coverage(&mut cases, "grid", &["grid dim_1f = dim_f iff small grid"]);
    Ok(cases)
}

pub(super) fn dimk_instances(r: &Resolved) -> Result<Vec<Instance>, Error> {
    let mut out = path_instances(r)?;
    out.extend(cycle_instances(r)?);
    Ok(out)
}

const DIMK_BRANCHES: &[&str] = &[
    "path: n <= k+2",
    "n <= 3k+3",
    "n >= 3k+4, n = 0..k+2 mod 3k+2",
    "n >= 3k+4, n = k+3..ceil((3k+5)/2)-1 mod 3k+2",
    "n >= 3k+4, n = ceil((3k+5)/2)..3k+1 mod 3k+2",
];

pub(super) fn dimk_formulas(r: &Resolved) -> Result<Vec<Case>, Error> {
    let insts = dimk_instances(r)?;
    let mut jobs: Vec<Job<'_>> = Vec::new();
    for inst in &insts {
        let family = if inst.graph.is_path() { PathOrCycle::Path } else { PathOrCycle::Cycle };
        let tag = if family == PathOrCycle::Path { "P" } else { "C" };
        let n = inst.graph.order();
        for &k in &inst.ks {
            jobs.push(job(move || {
                let case = Case::builder(format!("dimk/{tag}/{n:03}/k={k}"), "path/cycle dim_k closed form", inst.label.clone(), Some(k));
                vec![match (solvers::dim_k_exact(&inst.graph, k), formulas::path_cycle_dim_k(n as u64, u64::from(k), family)) {
                    (Ok(w), Ok((want, branch))) => {
                        let mut c = case.int(want, w.size as u64);
                        c.note = Some(branch.to_string());
                        c
                    }
                    (Err(e), _) | (_, Err(e)) => case.error(&e),
                }]
            }));
        }
    }
    let mut cases = run_jobs(jobs);
    let seen: BTreeSet<&str> = cases.iter().filter_map(|c| c.note.as_deref()).collect();
    let missing: Vec<&str> = DIMK_BRANCHES.iter().copied().filter(|b| !seen.contains(b)).collect();
    let case = Case::builder("dimk/coverage", "every residue branch exercised", "corpus", None).holds(
        "all five branches",
        if missing.is_empty() { "all present".into() } else { format!("missing: {}", missing.join("; ")) },
        missing.is_empty(),
    );
    cases.push(case);
    Ok(cases)
}

/// `(C_n, P_n)` at `k` with `dim_k` equal and `dim_{k,f}` different.
fn noniso_case(key: String, n: usize, k: u32) -> Case {
    let case = Case::builder(key, "cycle and path share dim_k but not dim_kf", format!("C_{n} vs P_{n}"), Some(k));
    let run = || -> Result<(usize, usize, Rational, Rational), Error> {
        let c = generators::cycle(n)?;
        let p = generators::path(n)?;
        Ok((
            solvers::dim_k_exact(&c, k)?.size,
            solvers::dim_k_exact(&p, k)?.size,
            solvers::dim_kf(&c, k)?.total,
            solvers::dim_kf(&p, k)?.total,
        ))
    };
    match run() {
        Ok((dc, dp, fc, fp)) => {
            let (n64, k64) = (n as u64, u64::from(k));
            let mut expected = "dim_k equal, dim_kf different".to_string();
            let mut pass = dc == dp && fc != fp;
            if let (Ok(cf), Ok(pf)) = (formulas::cycle_kf(n64, k64), formulas::path_kf(n64, k64)) {
                if let (Some(a), Some(b)) = (cf.value.exact(), pf.value.exact()) {
                    expected = format!("dim_k equal, dim_kf {} vs {}", rational::format(a), rational::format(b));
                    pass &= a == &fc && b == &fp;
                }
            }
            case.holds(
                &expected,
                format!("dim_k {dc} vs {dp}, dim_kf {} vs {}", rational::format(&fc), rational::format(&fp)),
                pass,
            )
        }
        Err(e) => case.error(&e),
    }
}

fn noniso_sweep() -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    for k in 1..=2u32 {
        let period = 2 * k as usize + 2;
        for n in (3 * k as usize + 4)..=28 {
            if n % period == 1 {
                out.push((n, k));
            }
        }
    }
    out
}

pub(super) fn noniso_instances(r: &Resolved) -> Result<Vec<Instance>, Error> {
    let mut out = Vec::new();
    let mut pairs = vec![(r.max_n, r.max_k)];
    pairs.extend(noniso_sweep());
    for (n, k) in pairs {
        out.push(Instance { ks: vec![k], ..build(&Family::Cycle(n))? });
        out.push(Instance { ks: vec![k], ..build(&Family::Path(n))? });
    }
    Ok(out)
}

pub(super) fn noniso_pair(r: &Resolved) -> Result<Vec<Case>, Error> {
    let (n, k) = (r.max_n, r.max_k);
    let mut jobs: Vec<Job<'_>> = vec![job(move || vec![noniso_case(format!("noniso/{n:03}/k={k}"), n, k)])];
    for (n, k) in noniso_sweep() {
        jobs.push(job(move || vec![noniso_case(format!("noniso/sweep/k={k}/{n:03}"), n, k)]));
    }
    Ok(run_jobs(jobs))
}

fn gap_ms(r: &Resolved) -> Vec<usize> {
    (3..=r.max_n.max(3)).collect()
}

const CATERPILLARS: &[(usize, usize)] = &[(1, 3), (1, 4), (2, 3), (2, 4), (3, 3), (3, 4)];

/// `(x, k)` with `C_{x(k+1)(k+5)}` of order at most 28.
fn cycle_ratio_params() -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    for x in 1..=2 {
        for k in 1..=2u32 {
            if x * (k as usize + 1) * (k as usize + 5) <= 28 {
                out.push((x, k));
            }
        }
    }
    out
}

pub(super) fn gap_instances(r: &Resolved) -> Result<Vec<Instance>, Error> {
    let mut out = Vec::new();
    for m in gap_ms(r) {
        let gc = generators::gap_construction(m)?;
        let mut ksg = ks(r.max_k);
        ksg.push(gc.g.diameter()?);
        ksg.dedup();
        out.push(Instance::new(Family::GapH(m).to_string(), gc.h, ks(r.max_k)));
        out.push(Instance::new(Family::GapG(m).to_string(), gc.g, ksg));
    }
    for &(x, a) in CATERPILLARS {
        let inst = build(&Family::Caterpillar(x, a))?;
        let mut k = ks(r.max_k);
        k.push(inst.graph.diameter()?);
        out.push(Instance { ks: k, ..inst });
    }
    for (x, k) in cycle_ratio_params() {
        let n = x * (k as usize + 1) * (k as usize + 5);
        let inst = build(&Family::Cycle(n))?;
        out.push(Instance { ks: vec![k, inst.graph.diameter()?], ..inst });
    }
    Ok(out)
}

fn gap_case(m: usize, max_k: u32) -> Vec<Case> {
    let label = format!("{} in {}", Family::GapH(m), Family::GapG(m));
    let key = format!("gap/m={m}");
    let gc = match generators::gap_construction(m) {
        Ok(gc) => gc,
        Err(e) => return vec![Case::builder(key, "gap construction", label, None).error(&e.into())],
    };
    let mut out = Vec::new();

    let embedded = gc.embedding.len() == gc.h.order()
        && gc.embedding.iter().collect::<BTreeSet<_>>().len() == gc.h.order()
        && gc.h.edges().iter().all(|&(u, v)| gc.g.has_edge(gc.embedding[u], gc.embedding[v]));
    out.push(Case::builder(format!("{key}/subgraph"), "H is a subgraph of G", label.clone(), None).holds(
        "injective, edge-preserving embedding",
        embedded.to_string(),
        embedded,
    ));

    let attached = VertexSet::from_iter_with(gc.g.order(), gc.attached.iter().copied());
    let resolves = gc
        .g
        .diameter()
        .map_err(Error::from)
        .and_then(|d| resolve::check_resolving_set(&gc.g, d, &attached));
    out.push(match resolves {
        Ok(ok) => Case::builder(format!("{key}/resolving"), "attached vertices resolve G", label.clone(), None).holds(
            "true",
            ok.to_string(),
            ok,
        ),
        Err(e) => Case::builder(format!("{key}/resolving"), "attached vertices resolve G", label.clone(), None).error(&e),
    });

    let fh = solvers::dim_f(&gc.h);
    let fg = solvers::dim_f(&gc.g);
    let want_h = ratio((m * (m + 1)) as i64, 4);
    let case = Case::builder(format!("{key}/dim_f(H)"), "gap H value m(m+1)/4", label.clone(), None);
    out.push(match &fh {
        Ok(w) => case.rational(&want_h, &w.total),
        Err(e) => case.error(e),
    });
    let case = Case::builder(format!("{key}/dim_f(G)"), "gap G value at most m", label.clone(), None);
    out.push(match &fg {
        Ok(w) => case.holds(&format!("<= {m}"), rational::format(&w.total), w.total <= int(m as i64)),
        Err(e) => case.error(e),
    });
    let case = Case::builder(format!("{key}/ratio"), "gap ratio at least (m+1)/4", label.clone(), None);
    out.push(match (&fh, &fg) {
        (Ok(h), Ok(g)) => {
            let q = &h.total / &g.total;
            let bound = ratio(m as i64 + 1, 4);
            case.holds(&format!(">= {}", rational::format(&bound)), rational::format(&q), q >= bound)
        }
        (Err(e), _) | (_, Err(e)) => case.error(e),
    });
    for k in 1..=max_k {
        let case = Case::builder(format!("{key}/k={k}"), "gap values independent of k", label.clone(), Some(k));
        let both = solvers::dim_kf(&gc.h, k).and_then(|h| Ok((h, solvers::dim_kf(&gc.g, k)?)));
        out.push(match (both, &fh, &fg) {
            (Ok((h, g)), Ok(fh), Ok(fg)) => case.holds(
                &format!("{} and {}", rational::format(&fh.total), rational::format(&fg.total)),
                format!("{} and {}", rational::format(&h.total), rational::format(&g.total)),
                h.total == fh.total && g.total == fg.total,
            ),
            (Err(e), _, _) => case.error(&e),
            (_, Err(e), _) | (_, _, Err(e)) => case.error(e),
        });
    }
    out
}

fn caterpillar_cases(x: usize, a: usize, max_k: u32) -> Vec<Case> {
    let fam = Family::Caterpillar(x, a);
    let label = fam.to_string();
    let key = format!("caterpillar/{x}x{a}");
    let run = || -> Result<Vec<Case>, Error> {
        let g = fam.build()?;
        let mut out = Vec::new();
        let half_xa = ratio((x * a) as i64, 2);
        let gap = ratio((x * (a - 2)) as i64, 2);
        let f = solvers::dim_f(&g)?;
        let d = solvers::dim(&g)?;
        for k in 1..=max_k {
            let fk = solvers::dim_kf(&g, k)?;
            out.push(Case::builder(format!("{key}/k={k}"), "leaf-cluster caterpillar dim_kf = x*alpha/2", label.clone(), Some(k)).rational(&half_xa, &fk.total));
            let dk = solvers::dim_k_exact(&g, k)?;
            let diff = int(dk.size as i64) - &fk.total;
            out.push(
                Case::builder(format!("{key}/k={k}/gap"), "dim_k - dim_kf at least x(alpha-2)/2", label.clone(), Some(k))
                    .holds(&format!(">= {}", rational::format(&gap)), rational::format(&diff), diff >= gap),
            );
        }
        out.push(Case::builder(format!("{key}/dim-dim_f"), "dim - dim_f = x(alpha-2)/2", label.clone(), None).rational(&gap, &(int(d.size as i64) - &f.total)));
        Ok(out)
    };
    run().unwrap_or_else(|e| vec![Case::builder(key, "leaf-cluster caterpillar", label, None).error(&e)])
}

fn cycle_ratio_case(x: usize, k: u32) -> Case {
    let n = x * (k as usize + 1) * (k as usize + 5);
    let case = Case::builder(format!("cycle-ratio/x={x}/k={k}"), "dim_kf(C_n)/dim(C_n) = x(k+5)/4", format!("C_{n}"), Some(k));
    let run = || -> Result<Rational, Error> {
        let g = generators::cycle(n)?;
        Ok(solvers::dim_kf(&g, k)?.total / int(solvers::dim(&g)?.size as i64))
    };
    match run() {
        Ok(q) => case.rational(&ratio((x * (k as usize + 5)) as i64, 4), &q),
        Err(e) => case.error(&e),
    }
}

pub(super) fn gap_constructions(r: &Resolved) -> Result<Vec<Case>, Error> {
    let max_k = r.max_k;
    let mut jobs: Vec<Job<'_>> = gap_ms(r).into_iter().map(|m| job(move || gap_case(m, max_k))).collect();
    for &(x, a) in CATERPILLARS {
        jobs.push(job(move || caterpillar_cases(x, a, max_k)));
    }
    for (x, k) in cycle_ratio_params() {
        jobs.push(job(move || vec![cycle_ratio_case(x, k)]));
    }
    Ok(run_jobs(jobs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        // p(n) − 1 partitions with at least two parts.
        let counts: Vec<usize> = (2..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 6, 10, 14, 21, 29, 41]);
    }

    #[test]
    fn block_pairs_stay_inside() {
        for k in 1..=2 {
            assert!(block_containment(k).unwrap().iter().all(Case::passed));
        }
    }
}
