//! Exact primal simplex for the covering LP
//!
//! ```text
//! minimize Σ_v g(v)  subject to  Σ_{v ∈ C} g(v) ≥ 1 for every C,  g ≥ 0
//! ```
//!
//! The solver works on the packing dual `max Σ_C y(C)` subject to
//! `Σ_{C ∋ v} y(C) ≤ 1`, `y ≥ 0`, whose slack basis is feasible at the origin.
//! At optimality the slack reduced costs give the primal `g`, so every solve
//! returns a primal/dual pair with equal objective. Pricing is described at
//! [`PivotRule`].
//!
//! The tableau is fraction-free: every entry is an integer and the true
//! tableau is the stored one divided by a common denominator, the basis
//! determinant. A pivot updates `a ← (p·a − f·q) / d`, where the division is
//! exact. Checked `i128` is tried first; on overflow the solve restarts over
//! `BigInt`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Integer arithmetic that may report overflow.
pub trait Int: Clone + Ord + Zero + One {
    fn times(&self, o: &Self) -> Option<Self>;
    fn minus(&self, o: &Self) -> Option<Self>;
    /// Division known to be exact.
    fn div_exact(&self, o: &Self) -> Self;
    fn to_big(&self) -> BigInt;
    fn positive(&self) -> bool {
        *self > Self::zero()
    }
}

impl Int for i128 {
    fn times(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn minus(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert_eq!(self % o, 0);
        self / o
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Int for BigInt {
    fn times(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn minus(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn positive(&self) -> bool {
        self.is_positive()
    }
}

/// Optimal primal (`primal[v]`) and dual (`dual[c]`) solutions with their
/// common objective value.
#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub value: Rational,
    pub primal: Vec<Rational>,
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

/// Entering-variable rule.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotRule {
    /// Bland's rule throughout.
    Bland,
    /// Largest reduced cost, switching to Bland's rule after
    /// [`STALL_LIMIT`] consecutive degenerate pivots and back after the next
    /// improving one. Cycling needs an unbroken run of degenerate pivots, and
    /// Bland's rule cannot cycle, so this terminates.
    #[default]
    Hybrid,
}

pub const STALL_LIMIT: usize = 32;

/// Row `r` is `a[r] · x = b[r]` over `m` structural columns followed by
/// `n` slacks; `cost` holds reduced costs and `rhs0` minus the objective, all
/// scaled by `det`.
struct Tableau<T> {
    width: usize,
    a: Vec<T>,
    b: Vec<T>,
    cost: Vec<T>,
    rhs0: T,
    det: T,
    basis: Vec<usize>,
}

impl<T: Int> Tableau<T> {
    fn new(n: usize, sets: &[Vec<usize>]) -> Self {
        let m = sets.len();
        let width = m + n;
        let mut a = vec![T::zero(); n * width];
        for (j, set) in sets.iter().enumerate() {
            for &v in set {
                a[v * width + j] = T::one();
            }
        }
        for v in 0..n {
            a[v * width + m + v] = T::one();
        }
        let mut cost = vec![T::zero(); width];
        cost[..m].iter_mut().for_each(|c| *c = T::one());
        Tableau {
            width,
            a,
            b: vec![T::one(); n],
            cost,
            rhs0: T::zero(),
            det: T::one(),
            basis: (m..m + n).collect(),
        }
    }

    fn at(&self, r: usize, c: usize) -> &T {
        &self.a[r * self.width + c]
    }

    /// Entering column: the lowest index with positive reduced cost under
    /// Bland, the largest reduced cost (lowest index on ties) otherwise.
    /// Leaving row: minimum ratio, ties to the lowest basic index.
    fn choose(&self, bland: bool) -> Option<Result<(usize, usize), ()>> {
        let col = if bland {
            (0..self.width).find(|&j| self.cost[j].positive())?
        } else {
            let mut best: Option<usize> = None;
            for j in 0..self.width {
                if self.cost[j].positive() && best.is_none_or(|b| self.cost[j] > self.cost[b]) {
                    best = Some(j);
                }
            }
            best?
        };
        let mut best: Option<usize> = None;
        for r in 0..self.b.len() {
            let coef = self.at(r, col);
            if !coef.positive() {
                continue;
            }
            let better = match best {
                None => true,
                Some(br) => {
                    // b[r]/coef < b[br]/coef_br, denominators positive.
                    let Some(lhs) = self.b[r].times(self.at(br, col)) else {
                        return Some(Err(()));
                    };
                    let Some(rhs) = self.b[br].times(coef) else {
                        return Some(Err(()));
                    };
                    lhs < rhs || (lhs == rhs && self.basis[r] < self.basis[br])
                }
            };
            if better {
                best = Some(r);
            }
        }
        // The region is bounded (every column has a positive entry).
        let row = best.expect("packing LP is bounded");
        Some(Ok((row, col)))
    }

    fn pivot(&mut self, row: usize, col: usize) -> Option<()> {
        let w = self.width;
        let p = self.at(row, col).clone();
        let d = self.det.clone();
        let pivot_row: Vec<(usize, T)> = (0..w)
            .filter(|&c| !self.at(row, c).is_zero())
            .map(|c| (c, self.at(row, c).clone()))
            .collect();
        let pivot_b = self.b[row].clone();

        // (p·e − f·q) / d, with q absent where the pivot row is zero.
        let update = |e: &T, f: &T, q: Option<&T>| -> Option<T> {
            let scaled = e.times(&p)?;
            let num = match q {
                Some(q) => scaled.minus(&f.times(q)?)?,
                None => scaled,
            };
            Some(num.div_exact(&d))
        };
        let update_row = |entries: &mut [T], f: &T| -> Option<()> {
            let mut k = 0;
            for (c, e) in entries.iter_mut().enumerate() {
                let q = match pivot_row.get(k) {
                    Some((pc, q)) if *pc == c => {
                        k += 1;
                        Some(q)
                    }
                    _ => None,
                };
                if e.is_zero() && (q.is_none() || f.is_zero()) {
                    continue;
                }
                if f.is_zero() && p == d {
                    continue;
                }
                *e = update(e, f, q)?;
            }
            Some(())
        };
        for r in 0..self.b.len() {
            if r == row {
                continue;
            }
            let f = self.at(r, col).clone();
            update_row(&mut self.a[r * w..(r + 1) * w], &f)?;
            self.b[r] = update(&self.b[r], &f, Some(&pivot_b))?;
        }
        let f = self.cost[col].clone();
        update_row(&mut self.cost, &f)?;
        self.rhs0 = update(&self.rhs0, &f, Some(&pivot_b))?;
        self.det = p;
        self.basis[row] = col;
        Some(())
    }

    fn value(&self, e: &T) -> Rational {
        Rational::new(e.to_big(), self.det.to_big())
    }
}

fn solve_with<T: Int>(n: usize, sets: &[Vec<usize>], rule: PivotRule) -> Option<LpSolution> {
    let m = sets.len();
    let mut t = Tableau::<T>::new(n, sets);
    let mut pivots = 0;
    let mut stall = 0;
    loop {
        let bland = rule == PivotRule::Bland || stall >= STALL_LIMIT;
        let Some(step) = t.choose(bland) else { break };
        let (row, col) = step.ok()?;
        let degenerate = t.b[row].is_zero();
        t.pivot(row, col)?;
        pivots += 1;
        stall = if degenerate { stall + 1 } else { 0 };
    }
    let mut dual = vec![Rational::zero(); m];
    for (r, &j) in t.basis.iter().enumerate() {
        if j < m {
            dual[j] = t.value(&t.b[r]);
        }
    }
    let primal = (0..n).map(|v| -t.value(&t.cost[m + v])).collect();
    Some(LpSolution {
        value: -t.value(&t.rhs0),
        primal,
        dual,
        pivots,
    })
}

/// Solves the covering LP over variables `0..n` for the given nonempty
/// constraint sets (lists of variable indices).
pub fn solve_covering(n: usize, sets: &[Vec<usize>]) -> LpSolution {
    solve_covering_with(n, sets, PivotRule::default())
}

pub fn solve_covering_with(n: usize, sets: &[Vec<usize>], rule: PivotRule) -> LpSolution {
    assert!(
        sets.iter().all(|s| !s.is_empty() && s.iter().all(|&v| v < n)),
        "covering constraints must be nonempty and in range"
    );
    solve_with::<i128>(n, sets, rule).unwrap_or_else(|| solve_covering_big(n, sets, rule))
}

/// Same as [`solve_covering_with`] but always over `BigInt`.
pub fn solve_covering_big(n: usize, sets: &[Vec<usize>], rule: PivotRule) -> LpSolution {
    solve_with::<BigInt>(n, sets, rule).expect("BigInt arithmetic cannot overflow")
}
