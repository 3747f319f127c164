//! Closed-form values of `dim_{k,f}` and `dim_k` on the families with known
//! formulas. Cases where only bounds are known return an interval; every
//! value carries the name of the case that produced it.

use std::fmt;

use serde::Serialize;

use crate::characterize::tree_profile;
use crate::graph::Graph;
use crate::rational::{self, int, ratio, Rational};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaValue {
    Exact(Rational),
    /// Closed interval `[lo, hi]`, `lo ≤ hi`.
    Interval(Rational, Rational),
}

impl FormulaValue {
    pub fn contains(&self, x: &Rational) -> bool {
        match self {
            FormulaValue::Exact(v) => v == x,
            FormulaValue::Interval(lo, hi) => lo <= x && x <= hi,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            FormulaValue::Exact(v) => Some(v),
            FormulaValue::Interval(..) => None,
        }
    }
}

/// `num/den` or `lo/den..hi/den`.
impl fmt::Display for FormulaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaValue::Exact(v) => write!(f, "{}", rational::format(v)),
            FormulaValue::Interval(lo, hi) => {
                write!(f, "{}..{}", rational::format(lo), rational::format(hi))
            }
        }
    }
}

impl Serialize for FormulaValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A formula value together with the case that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Formula {
    pub value: FormulaValue,
    pub branch: &'static str,
}

fn exact(v: Rational, branch: &'static str) -> Formula {
    Formula {
        value: FormulaValue::Exact(v),
        branch,
    }
}

fn interval(lo: Rational, hi: Rational, branch: &'static str) -> Formula {
    debug_assert!(lo <= hi);
    Formula {
        value: FormulaValue::Interval(lo, hi),
        branch,
    }
}

fn out_of_range(what: &str) -> Error {
    Error::Precondition(what.to_string())
}

fn i(v: u64) -> i64 {
    i64::try_from(v).expect("parameter fits in i64")
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// `dim_{k,f}(P_n)`.
pub fn path_kf(n: u64, k: u64) -> Result<Formula, Error> {
    if n < 2 {
        return Err(out_of_range("path formula needs n ≥ 2"));
    }
    if k < 1 {
        return Err(Error::InvalidK);
    }
    let (n_, k_) = (i(n), i(k));
    if n <= k + 2 {
        return Ok(exact(int(1), "path: n <= k+2"));
    }
    if n <= 2 * k + 3 {
        return Ok(exact(
            ratio(6 + 2 * k_ - n_, 5 + 2 * k_ - n_),
            "path: k+3 <= n <= 2k+3",
        ));
    }
    let period = 2 * k + 2;
    let r = n % period;
    let c = int(i(ceil_div(n, period)));
    Ok(if r == 1 {
        exact(ratio(n_ + k_, i(period)), "path: n >= 2k+4, n = 1 mod 2k+2")
    } else if (2..=k + 2).contains(&r) {
        exact(c, "path: n >= 2k+4, n = 2..k+2 mod 2k+2")
    } else {
        let hi = &c + ratio(1, 2);
        interval(c, hi, "path: n >= 2k+4, n = 0 or k+3..2k+1 mod 2k+2 (bounds only)")
    })
}

/// `dim_{k,f}(C_n)`.
pub fn cycle_kf(n: u64, k: u64) -> Result<Formula, Error> {
    if n < 3 {
        return Err(out_of_range("cycle formula needs n ≥ 3"));
    }
    if k < 1 {
        return Err(Error::InvalidK);
    }
    let n_ = i(n);
    Ok(if n >= 2 * k + 4 {
        exact(ratio(n_, i(2 * k + 2)), "cycle: n >= 2k+4")
    } else if n % 2 == 1 {
        exact(ratio(n_, n_ - 1), "cycle: n <= 2k+3, odd")
    } else {
        exact(ratio(n_, n_ - 2), "cycle: n <= 2k+3, even")
    })
}

/// `dim_{k,f}(P_n + K_1)`, independent of `k` (diameter ≤ 2).
pub fn fan_kf(n: u64, k: u64) -> Result<Formula, Error> {
    if n < 1 {
        return Err(out_of_range("fan formula needs path order n ≥ 1"));
    }
    if k < 1 {
        return Err(Error::InvalidK);
    }
    let n_ = i(n);
    Ok(match n {
        1..=3 => exact(ratio(n_ + 1, 2), "fan: n in 1..3"),
        4 | 5 => exact(ratio(5, 3), "fan: n in {4,5}"),
        _ if n % 4 == 1 || n % 4 == 3 => exact(ratio(n_ + 1, 4), "fan: n >= 6, n = 1,3 mod 4"),
        _ if n % 4 == 2 => exact(ratio(n_ + 2, 4), "fan: n >= 6, n = 2 mod 4"),
        _ => interval(
            ratio(n_, 4),
            ratio(n_ + 2, 4),
            "fan: n >= 8, n = 0 mod 4 (bounds only)",
        ),
    })
}

/// `dim_{k,f}(C_n + K_1)` where `n` is the cycle length, so the wheel has
/// order `n + 1` (the generator [`crate::generators::wheel`] takes the order).
pub fn wheel_kf(n: u64, k: u64) -> Result<Formula, Error> {
    if n < 3 {
        return Err(out_of_range("wheel formula needs cycle length n ≥ 3"));
    }
    if k < 1 {
        return Err(Error::InvalidK);
    }
    Ok(match n {
        3 | 4 => exact(int(2), "wheel: n in {3,4}"),
        5 => exact(ratio(3, 2), "wheel: n = 5"),
        _ => exact(ratio(i(n), 4), "wheel: n >= 6"),
    })
}

/// `dim_f` (and every `dim_{k,f}`) of the complete multipartite graph.
pub fn multipartite_f(parts: &[usize]) -> Result<Formula, Error> {
    if parts.len() < 2 || parts.contains(&0) {
        return Err(out_of_range("need at least 2 nonempty parts"));
    }
    let n = i(parts.iter().sum::<usize>() as u64);
    let singletons = parts.iter().filter(|&&a| a == 1).count();
    Ok(if singletons == 1 {
        exact(ratio(n - 1, 2), "multipartite: exactly one singleton part")
    } else {
        exact(ratio(n, 2), "multipartite: singleton count != 1")
    })
}

pub fn petersen_kf(k: u64) -> Result<Formula, Error> {
    if k < 1 {
        return Err(Error::InvalidK);
    }
    Ok(exact(ratio(5, 3), "petersen"))
}

/// `dim_f(P_s × P_t)`.
pub fn grid_f(s: u64, t: u64) -> Result<Formula, Error> {
    if s < 2 || t < 2 {
        return Err(out_of_range("grid formula needs s, t ≥ 2"));
    }
    Ok(exact(int(2), "grid"))
}

/// `dim_f(T) = (σ(T) − ex_1(T)) / 2`.
pub fn tree_f(t: &Graph) -> Result<Formula, Error> {
    let p = tree_profile(t)?;
    Ok(exact(
        ratio(i((p.sigma - p.ex_1) as u64), 2),
        "tree: (sigma - ex_1)/2",
    ))
}

/// `dim(T) = σ(T) − ex(T)` for trees that are not paths.
pub fn tree_dim(t: &Graph) -> Result<usize, Error> {
    let p = tree_profile(t)?;
    if p.ex == 0 {
        return Err(out_of_range("metric dimension formula excludes paths"));
    }
    Ok(p.sigma - p.ex)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PathOrCycle {
    Path,
    Cycle,
}

/// `dim_k(P_n)` or `dim_k(C_n)`, with the case that produced it.
pub fn path_cycle_dim_k(n: u64, k: u64, family: PathOrCycle) -> Result<(u64, &'static str), Error> {
    if k < 1 {
        return Err(Error::InvalidK);
    }
    match family {
        PathOrCycle::Path if n < 2 => return Err(out_of_range("path needs n ≥ 2")),
        PathOrCycle::Cycle if n < 3 => return Err(out_of_range("cycle needs n ≥ 3")),
        _ => {}
    }
    if family == PathOrCycle::Path && n <= k + 2 {
        return Ok((1, "path: n <= k+2"));
    }
    if n <= 3 * k + 3 {
        return Ok((2, "n <= 3k+3"));
    }
    let period = 3 * k + 2;
    let r = n % period;
    let upper_mid = (3 * k + 5).div_ceil(2);
    Ok(if r <= k + 2 {
        ((2 * n + 3 * k - 1) / period, "n >= 3k+4, n = 0..k+2 mod 3k+2")
    } else if r < upper_mid {
        ((2 * n + 4 * k - 1) / period, "n >= 3k+4, n = k+3..ceil((3k+5)/2)-1 mod 3k+2")
    } else {
        ((2 * n + 3 * k - 1) / period, "n >= 3k+4, n = ceil((3k+5)/2)..3k+1 mod 3k+2")
    })
}
