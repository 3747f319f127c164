//! Executable suites that confront the solvers with the closed forms and the
//! structural predicates, one report per suite.
//!
//! Every suite is a list of independent jobs; jobs run on the rayon pool and
//! their cases are sorted by key afterwards, so a report depends only on
//! the parameters. Wall time is kept out of the serialized form for the
//! same reason.

mod families;
mod general;
mod trees;

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::formulas::FormulaValue;
use crate::generators;
use crate::graph::Graph;
use crate::rational::{self, Rational};
use crate::Error;

pub const DEFAULT_SEED: u64 = 0x7a11_c0de;

pub const SUITES: &[&str] = &[
    "cycles",
    "paths",
    "fans",
    "wheels",
    "multipartite",
    "petersen",
    "grids",
    "trees",
    "bounds_monotonicity",
    "rk_identity",
    "dimk_formulas",
    "gap_constructions",
    "noniso_pair",
];

/// Size knobs. `None` selects the suite's default, listed in
/// [`SuiteParams::resolved`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteParams {
    pub max_n: Option<usize>,
    pub max_k: Option<u32>,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            max_n: None,
            max_k: None,
            seed: DEFAULT_SEED,
        }
    }
}

/// Effective parameters after defaults.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Resolved {
    pub max_n: usize,
    pub max_k: u32,
    pub seed: u64,
}

impl SuiteParams {
    /// | suite | max_n | max_k |
    /// |---|---|---|
    /// | cycles, paths | 28 | 5 |
    /// | fans, wheels (graph order) | 24 | 2 |
    /// | multipartite | 10 | 3 |
    /// | petersen | 10 | 3 |
    /// | grids (side) | 6 | 1 |
    /// | trees | 14 | 4 |
    /// | bounds_monotonicity | 10 | 4 |
    /// | rk_identity (named families) | 20 | diameter |
    /// | dimk_formulas | 28 | 4 |
    /// | gap_constructions | 4 | 2 |
    /// | noniso_pair | 9 | 1 |
    pub fn resolved(&self, suite: &str) -> Resolved {
        let (n, k) = match suite {
            "cycles" | "paths" => (28, 5),
            "fans" | "wheels" => (24, 2),
            "multipartite" | "petersen" => (10, 3),
            "grids" => (6, 1),
            "trees" => (14, 4),
            "bounds_monotonicity" => (10, 4),
            "rk_identity" => (20, 0),
            "dimk_formulas" => (28, 4),
            "gap_constructions" => (4, 2),
            "noniso_pair" => (9, 1),
            _ => (0, 0),
        };
        Resolved {
            max_n: self.max_n.unwrap_or(n),
            max_k: self.max_k.unwrap_or(k),
            seed: self.seed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub key: String,
    pub claim: String,
    pub graph: String,
    pub k: Option<u32>,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Case {
    fn builder(key: impl Into<String>, claim: &str, graph: impl Into<String>, k: Option<u32>) -> CaseBuilder {
        CaseBuilder {
            key: key.into(),
            claim: claim.to_string(),
            graph: graph.into(),
            k,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

struct CaseBuilder {
    key: String,
    claim: String,
    graph: String,
    k: Option<u32>,
}

impl CaseBuilder {
    fn finish(self, expected: String, computed: String, pass: bool, note: Option<String>) -> Case {
        Case {
            key: self.key,
            claim: self.claim,
            graph: self.graph,
            k: self.k,
            expected,
            computed,
            verdict: if pass { Verdict::Pass } else { Verdict::Fail },
            note,
        }
    }

    /// Exact equality, or interval membership with the LP value noted.
    fn formula(self, expected: &FormulaValue, branch: &str, computed: &Rational) -> Case {
        let pass = expected.contains(computed);
        let note = match expected {
            FormulaValue::Exact(_) => branch.to_string(),
            FormulaValue::Interval(lo, hi) => format!(
                "{branch}; LP value {} (lower gap {}, upper gap {})",
                rational::format(computed),
                rational::format(&(computed - lo)),
                rational::format(&(hi - computed)),
            ),
        };
        self.finish(expected.to_string(), rational::format(computed), pass, Some(note))
    }

    fn rational(self, expected: &Rational, computed: &Rational) -> Case {
        self.finish(rational::format(expected), rational::format(computed), expected == computed, None)
    }

    fn int(self, expected: u64, computed: u64) -> Case {
        self.finish(expected.to_string(), computed.to_string(), expected == computed, None)
    }

    /// Predicate (`expected`) against the solver-side truth (`computed`).
    fn agree(self, expected: bool, computed: bool) -> Case {
        self.finish(expected.to_string(), computed.to_string(), expected == computed, None)
    }

    /// A check whose expectation is stated in words.
    fn holds(self, expected: &str, computed: String, pass: bool) -> Case {
        self.finish(expected.to_string(), computed, pass, None)
    }

    fn error(self, e: &Error) -> Case {
        self.finish("no error".into(), format!("error: {e}"), false, None)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Resolved,
    pub cases: Vec<Case>,
    pub summary: Summary,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed())
    }

    /// Cases grouped by claim, with pass counts.
    pub fn by_claim(&self) -> BTreeMap<&str, (usize, usize)> {
        let mut out: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for c in &self.cases {
            let e = out.entry(c.claim.as_str()).or_default();
            e.0 += usize::from(c.passed());
            e.1 += 1;
        }
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {}/{} passed in {:.2?}",
            self.suite, self.summary.passed, self.summary.total, self.wall_time
        )?;
        for (claim, (pass, total)) in self.by_claim() {
            writeln!(f, "  {pass:>5}/{total:<5} {claim}")?;
        }
        for c in self.failures() {
            writeln!(
                f,
                "  FAIL {} [{}] expected {} computed {}{}",
                c.key,
                c.claim,
                c.expected,
                c.computed,
                c.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default()
            )?;
        }
        Ok(())
    }
}

type Job<'a> = Box<dyn Fn() -> Vec<Case> + Send + Sync + 'a>;

fn job<'a>(f: impl Fn() -> Vec<Case> + Send + Sync + 'a) -> Job<'a> {
    Box::new(f)
}

fn run_jobs(jobs: Vec<Job<'_>>) -> Vec<Case> {
    let mut cases: Vec<Case> = jobs.par_iter().flat_map_iter(|j| j()).collect();
    cases.sort_by(|a, b| a.key.cmp(&b.key).then_with(|| a.claim.cmp(&b.claim)));
    cases
}

/// A graph together with the truncation levels a suite solves it at.
#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub graph: Graph,
    pub ks: Vec<u32>,
}

impl Instance {
    fn new(label: impl Into<String>, graph: Graph, ks: Vec<u32>) -> Self {
        Instance {
            label: label.into(),
            graph,
            ks,
        }
    }
}

/// Every (graph, k) the named suite solves, for external cross-checking.
pub fn instances(suite: &str, params: &SuiteParams) -> Result<Vec<Instance>, Error> {
    let r = params.resolved(suite);
    match suite {
        "cycles" => families::cycle_instances(&r),
        "paths" => families::path_instances(&r),
        "fans" => families::fan_instances(&r),
        "wheels" => families::wheel_instances(&r),
        "multipartite" => families::multipartite_instances(&r),
        "petersen" => families::petersen_instances(&r),
        "grids" => families::grid_instances(&r),
        "trees" => trees::instances(&r),
        "bounds_monotonicity" => general::bounds_instances(&r),
        "rk_identity" => general::rk_instances(&r),
        "dimk_formulas" => families::dimk_instances(&r),
        "gap_constructions" => families::gap_instances(&r),
        "noniso_pair" => families::noniso_instances(&r),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let r = params.resolved(name);
    let cases = match name {
        "cycles" => families::cycles(&r)?,
        "paths" => families::paths(&r)?,
        "fans" => families::fans(&r)?,
        "wheels" => families::wheels(&r)?,
        "multipartite" => families::multipartite(&r)?,
        "petersen" => families::petersen(&r)?,
        "grids" => families::grids(&r)?,
        "trees" => trees::suite(&r)?,
        "bounds_monotonicity" => general::bounds(&r)?,
        "rk_identity" => general::rk_identity(&r)?,
        "dimk_formulas" => families::dimk_formulas(&r)?,
        "gap_constructions" => families::gap_constructions(&r)?,
        "noniso_pair" => families::noniso_pair(&r)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    let passed = cases.iter().filter(|c| c.passed()).count();
    Ok(VerificationReport {
        suite: name.to_string(),
        params: r,
        summary: Summary {
            total: cases.len(),
            passed,
            failed: cases.len() - passed,
        },
        cases,
        wall_time: start.elapsed(),
    })
}

/// Adds one case per biconditional claim in `claims`, passing when the
/// predicate side took both truth values across `cases`.
fn coverage(cases: &mut Vec<Case>, prefix: &str, claims: &[&str]) {
    for claim in claims {
        let mut seen = [0usize; 2];
        for c in cases.iter().filter(|c| c.claim == *claim) {
            seen[usize::from(c.expected == "true")] += 1;
        }
        let case = Case::builder(format!("{prefix}/coverage/{claim}"), "both directions exercised", "corpus", None)
            .holds(
                "predicate true and false at least once",
                format!("true {} false {}", seen[1], seen[0]),
                seen[0] > 0 && seen[1] > 0,
            );
        cases.push(case);
    }
    cases.sort_by(|a, b| a.key.cmp(&b.key).then_with(|| a.claim.cmp(&b.claim)));
}

/// Orders and edge probabilities of the seeded random connected corpus.
fn random_graphs(count: usize, max_n: usize, seed: u64) -> Result<Vec<(String, Graph)>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let n = rng.gen_range(2..=max_n.max(2));
        let p = 0.2 + 0.6 * f64::from(rng.gen_range(0u32..=60)) / 60.0;
        let s = rng.gen::<u64>();
        let g = generators::random_connected(n, p, s)?;
        out.push((format!("gnp#{i:03}(n={n},p={p:.2})"), g));
    }
    Ok(out)
}

fn half(n: usize) -> Rational {
    rational::ratio(n as i64, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(matches!(
            run_suite("nope", &SuiteParams::default()),
            Err(Error::UnknownSuite(_))
        ));
        assert!(instances("nope", &SuiteParams::default()).is_err());
    }

    #[test]
    fn small_reports_are_reproducible() {
        let p = SuiteParams {
            max_n: Some(9),
            max_k: Some(2),
            ..SuiteParams::default()
        };
        let a = run_suite("cycles", &p).unwrap();
        let b = run_suite("cycles", &p).unwrap();
        assert!(a.all_passed(), "{a}");
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn every_suite_has_defaults() {
        for s in SUITES {
            let r = SuiteParams::default().resolved(s);
            assert!(r.max_n > 0, "{s}");
        }
    }
}
