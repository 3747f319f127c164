//! Suites over seeded random corpora: bounds, monotonicity in `k`, the
//! extremal characterizations, and the two forms of `R_k`.

use super::{coverage, half, job, random_graphs, run_jobs, Case, Instance, Job, Resolved};
use crate::characterize;
use crate::generators::{self, Family};
use crate::graph::{DistanceMatrix, Graph};
use crate::rational::{self, int, Rational};
use crate::resolve;
use crate::solvers;
use crate::Error;

const BOUNDS_CORPUS: usize = 300;
const RK_CORPUS: usize = 100;
const RK_RANDOM_MAX_N: usize = 12;

/// The random corpus plus short paths and twin blowups, so that both sides
/// of each characterization occur.
fn bounds_graphs(r: &Resolved) -> Result<Vec<(String, Graph)>, Error> {
    let mut out = random_graphs(BOUNDS_CORPUS, r.max_n, r.seed)?;
    for n in 2..=r.max_n.min(8) {
        out.push((Family::Path(n).to_string(), generators::path(n)?));
    }
    for i in 0..30u64 {
        let h_order = 2 + (i % 3) as usize;
        let g = generators::random_blowup(h_order, 3, r.seed ^ (0xb10b << 8) ^ i)?;
        if g.order() <= r.max_n {
            out.push((format!("blowup#{i:02}(h={h_order},n={})", g.order()), g));
        }
    }
    Ok(out)
}

pub(super) fn bounds_instances(r: &Resolved) -> Result<Vec<Instance>, Error> {
    bounds_graphs(r)?
        .into_iter()
        .map(|(label, g)| {
            let mut ks: Vec<u32> = (1..=r.max_k).collect();
            ks.push(g.diameter()?.max(1));
            ks.sort_unstable();
            ks.dedup();
            Ok(Instance::new(label, g, ks))
        })
        .collect()
}

const SHORT_PATH_F: &str = "dim_kf = 1 iff short path";
const HALF_F: &str = "dim_kf = n/2 iff every twin class has >= 2 vertices";
const SHORT_PATH_I: &str = "dim_k = 1 iff short path";
const PATH_F: &str = "dim_f = 1 iff path";
const HALF_BIJECTION: &str = "dim_f = n/2 iff a fixed-point-free partner map with |R| = 2 exists";

struct Solved {
    f: Vec<Rational>,
    values: Vec<Vec<Rational>>,
    i: Vec<usize>,
    dim_f: Rational,
    dim: usize,
}

fn solve_all(g: &Graph, max_k: u32) -> Result<Solved, Error> {
    let mut s = Solved {
        f: Vec::new(),
        values: Vec::new(),
        i: Vec::new(),
        dim_f: solvers::dim_f(g)?.total,
        dim: solvers::dim(g)?.size,
    };
    for k in 1..=max_k {
        let w = solvers::dim_kf(g, k)?;
        s.f.push(w.total);
        s.values.push(w.values);
        s.i.push(solvers::dim_k_exact(g, k)?.size);
    }
    Ok(s)
}

/// Every vertex has a partner `w ≠ v` with `|R{v,w}| = 2`.
fn has_partner_map(g: &Graph) -> Result<bool, Error> {
    let d = DistanceMatrix::new(g);
    let k = d.diameter()?.max(1);
    for v in 0..g.order() {
        let mut found = false;
        for w in 0..g.order() {
            if w != v && resolve::r_k_pair(&d, k, v, w)?.len() == 2 {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

fn chain(values: &[String]) -> String {
    values.join(" <= ")
}

fn bounds_cases(idx: usize, label: &str, g: &Graph, max_k: u32) -> Vec<Case> {
    let key = format!("bounds/{idx:03}");
    let s = match solve_all(g, max_k) {
        Ok(s) => s,
        Err(e) => return vec![Case::builder(key, "solvable", label, None).error(&e)],
    };
    let n = g.order();
    let one = int(1);
    let half_n = half(n);
    let mut out = Vec::new();
    let c = |suffix: &str, claim: &str, k: Option<u32>| Case::builder(format!("{key}/{suffix}"), claim, label, k);

    let in_range = s.f.iter().all(|f| *f >= one && *f <= half_n);
    out.push(c("range", "1 <= dim_kf <= n/2", None).holds(
        &format!("all in [1, {}]", rational::format(&half_n)),
        s.f.iter().map(rational::format).collect::<Vec<_>>().join(" "),
        in_range,
    ));

    // dim_f ≤ dim_{K,f} ≤ … ≤ dim_{1,f} ≤ dim_1.
    let mut frac: Vec<Rational> = vec![s.dim_f.clone()];
    frac.extend(s.f.iter().rev().cloned());
    let d1 = int(s.i[0] as i64);
    let ok = frac.windows(2).all(|w| w[0] <= w[1]) && *frac.last().unwrap() <= d1;
    let mut shown: Vec<String> = frac.iter().map(rational::format).collect();
    shown.push(s.i[0].to_string());
    out.push(c("chain/f", "dim_f <= dim_kf <= dim_k'f <= dim_1f <= dim_1 for k > k'", None).holds(
        "non-decreasing",
        chain(&shown),
        ok,
    ));

    let mut ints: Vec<usize> = vec![s.dim];
    ints.extend(s.i.iter().rev());
    let ok = ints.windows(2).all(|w| w[0] <= w[1]) && ints.iter().all(|&v| v >= 1 && v < n.max(2));
    out.push(c("chain/i", "1 <= dim <= dim_k <= dim_k' <= dim_1 <= n-1 for k > k'", None).holds(
        "non-decreasing, within [1, n-1]",
        chain(&ints.iter().map(ToString::to_string).collect::<Vec<_>>()),
        ok,
    ));

    let ok = s.f.iter().zip(&s.i).all(|(f, i)| *f <= int(*i as i64)) && s.dim_f <= int(s.dim as i64);
    out.push(c("frac<=int", "dim_kf <= dim_k and dim_f <= dim", None).holds(
        "true",
        ok.to_string(),
        ok,
    ));

    let twins_ok = match characterize::all_twin_classes_ge2(g) {
        Ok(t) => t,
        Err(e) => return vec![c("twins", HALF_F, None).error(&e)],
    };
    let diam = g.diameter().unwrap_or(0);
    let classes = resolve::twin_classes(g);
    for k in 1..=max_k {
        let ki = (k - 1) as usize;
        let short = characterize::is_short_path(g, k);
        out.push(c(&format!("k={k}/short-f"), SHORT_PATH_F, Some(k)).agree(short, s.f[ki] == one));
        out.push(c(&format!("k={k}/short-i"), SHORT_PATH_I, Some(k)).agree(short, s.i[ki] == 1));
        out.push(c(&format!("k={k}/half"), HALF_F, Some(k)).agree(twins_ok, s.f[ki] == half_n));
        if k + 1 >= diam {
            let ok = s.f[ki] == s.dim_f && s.i[ki] == s.dim;
            out.push(c(&format!("k={k}/inert"), "k >= diam-1 gives dim_kf = dim_f and dim_k = dim", Some(k)).holds(
                "equal",
                format!(
                    "{} vs {}, {} vs {}",
                    rational::format(&s.f[ki]),
                    rational::format(&s.dim_f),
                    s.i[ki],
                    s.dim
                ),
                ok,
            ));
        }
        let vals = &s.values[ki];
        let bad = classes
            .iter()
            .flat_map(|cl| cl.iter().enumerate().flat_map(move |(a, &x)| cl[a + 1..].iter().map(move |&y| (x, y))))
            .find(|&(x, y)| &vals[x] + &vals[y] < one);
        out.push(c(&format!("k={k}/twins"), "twin pairs carry mass >= 1", Some(k)).holds(
            "every twin pair",
            bad.map_or("ok".to_string(), |(x, y)| format!("pair ({x}, {y}) below 1")),
            bad.is_none(),
        ));
    }
    out.push(c("path-f", PATH_F, None).agree(g.is_path(), s.dim_f == one));
    match has_partner_map(g) {
        Ok(p) => out.push(c("bijection", HALF_BIJECTION, None).agree(p, s.dim_f == half_n)),
        Err(e) => out.push(c("bijection", HALF_BIJECTION, None).error(&e)),
    }
    out
}

pub(super) fn bounds(r: &Resolved) -> Result<Vec<Case>, Error> {
    let graphs = bounds_graphs(r)?;
    let max_k = r.max_k.max(1);
    let jobs: Vec<Job<'_>> = graphs
        .iter()
        .enumerate()
        .map(|(i, (label, g))| job(move || bounds_cases(i, label, g, max_k)))
        .collect();
    let mut cases = run_jobs(jobs);
    coverage(&mut cases, "bounds", &[SHORT_PATH_F, HALF_F, SHORT_PATH_I, PATH_F, HALF_BIJECTION]);
    Ok(cases)
}

fn named_graphs(max_n: usize) -> Result<Vec<Family>, Error> {
    let mut fams = Vec::new();
    for n in 2..=max_n {
        fams.push(Family::Path(n));
    }
    for n in 3..=max_n {
        fams.push(Family::Cycle(n));
    }
    for n in 2..=max_n.min(8) {
        fams.push(Family::Complete(n));
    }
    for s in 2..=max_n {
        for t in 2..=s {
            if s * t <= max_n {
                fams.push(Family::Grid(s, t));
            }
        }
    }
    if max_n >= 10 {
        fams.push(Family::Petersen);
    }
    for n in 5..=max_n {
        fams.push(Family::Wheel(n));
    }
    for n in 1..max_n {
        fams.push(Family::Fan(n));
    }
    for parts in [vec![1, 1], vec![2, 3], vec![1, 2, 3], vec![3, 3], vec![1, 1, 4], vec![2, 2, 2, 2]] {
        if parts.iter().sum::<usize>() <= max_n {
            fams.push(Family::Multipartite(parts));
        }
    }
    for legs in [vec![1, 1, 1], vec![1, 2, 3], vec![2, 2, 2], vec![3, 3, 3], vec![1, 1, 1, 1], vec![4, 1, 2, 2]] {
        if legs.iter().sum::<usize>() < max_n {
            fams.push(Family::Spider(legs));
        }
    }
    for x in 1..=3 {
        for a in 3..=4 {
            if x * (a + 1) <= max_n {
                fams.push(Family::Caterpillar(x, a));
            }
        }
    }
    for x in 3..=5 {
        for s in 0..=x {
            if 1 + x + s <= max_n {
                fams.push(Family::SubdividedStar(x, s));
            }
        }
    }
    for m in 3..=4 {
        if m * (m + 3) / 2 <= max_n {
            fams.push(Family::GapH(m));
            fams.push(Family::GapG(m));
        }
    }
    Ok(fams)
}

fn rk_graphs(r: &Resolved) -> Result<Vec<(String, Graph)>, Error> {
    let mut out = Vec::new();
    for f in named_graphs(r.max_n)? {
        out.push((f.to_string(), f.build()?));
    }
    out.extend(random_graphs(RK_CORPUS, RK_RANDOM_MAX_N, r.seed.wrapping_add(1))?);
    Ok(out)
}

fn rk_ks(r: &Resolved, g: &Graph) -> Result<Vec<u32>, Error> {
    let top = if r.max_k == 0 { g.diameter()?.max(1) } else { r.max_k };
    Ok((1..=top).collect())
}

pub(super) fn rk_instances(r: &Resolved) -> Result<Vec<Instance>, Error> {
    rk_graphs(r)?
        .into_iter()
        .map(|(label, g)| {
            let ks = rk_ks(r, &g)?;
            Ok(Instance::new(label, g, ks))
        })
        .collect()
}

fn rk_case(idx: usize, label: &str, g: &Graph, k: u32) -> Case {
    let case = Case::builder(format!("rk/{idx:03}/k={k:02}"), "R_k definition equals neighborhood form", label, Some(k));
    let d = DistanceMatrix::new(g);
    let n = g.order();
    let mut pairs = 0usize;
    for x in 0..n {
        for y in x + 1..n {
            pairs += 1;
            match (resolve::r_k_pair(&d, k, x, y), resolve::r_k_pair_neighborhood_form(&d, k, x, y)) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(a), Ok(b)) => {
                    return case.holds("identical on every pair", format!("pair ({x}, {y}): {a:?} vs {b:?}"), false)
                }
                (Err(e), _) | (_, Err(e)) => return case.error(&e),
            }
        }
    }
    case.holds("identical on every pair", format!("{pairs} pairs identical"), true)
}

pub(super) fn rk_identity(r: &Resolved) -> Result<Vec<Case>, Error> {
    let insts = rk_instances(r)?;
    let mut jobs: Vec<Job<'_>> = Vec::new();
    for (i, inst) in insts.iter().enumerate() {
        for &k in &inst.ks {
            jobs.push(job(move || vec![rk_case(i, &inst.label, &inst.graph, k)]));
        }
    }
    Ok(run_jobs(jobs))
}
