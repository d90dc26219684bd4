//! Bounded exhaustive search for `a·x^m + k = (a+ℓ)·y^n`.
//!
//! The equations with `k ≠ ℓ` or exponents beyond 2 have no known general
//! solution method, so this module is an explorer: it scans a finite box
//! `[1, x_bound] × [1, y_bound]` completely and exactly, nothing more. The
//! one algebraic shortcut is the congruence obstruction: reducing mod
//! `gcd(a, ℓ)` shows `k ≢ 0 (mod gcd(a, ℓ))` leaves no solutions at all,
//! so such queries are answered without scanning.
//!
//! The scan is y-major: for each `y` the candidate `x` is pinned by
//! `x^m = ((a+ℓ)·y^n − k) / a`, a divisibility plus an exact-root check, so
//! the box costs `O(y_bound)` root extractions instead of the full double
//! loop (which survives in the tests as the independent oracle).

use crate::arith::{exact_root, gcd};
use crate::Natural;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

/// One bounded query against `a·x^m + k = (a+ℓ)·y^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerEquationQuery {
    pub a: Natural,
    pub k: Natural,
    /// The translation applied to `a` on the right-hand side.
    pub ell: Natural,
    pub m: u32,
    pub n: u32,
    pub x_bound: Natural,
    pub y_bound: Natural,
    /// Least admissible `x` and `y`: 1 scans all positive pairs, 2 keeps only
    /// pairs relevant to geometric progressions.
    pub min_xy: u64,
}

impl PowerEquationQuery {
    pub fn new(
        a: Natural,
        k: Natural,
        ell: Natural,
        m: u32,
        n: u32,
        x_bound: Natural,
        y_bound: Natural,
    ) -> Self {
        PowerEquationQuery {
            a,
            k,
            ell,
            m,
            n,
            x_bound,
            y_bound,
            min_xy: 1,
        }
    }

    pub fn with_min_xy(mut self, min_xy: u64) -> Self {
        self.min_xy = min_xy;
        self
    }

    fn validate(&self) {
        assert!(self.m >= 2 && self.n >= 2, "exponents must be at least 2");
        assert!(
            !self.a.is_zero() && !self.k.is_zero() && !self.ell.is_zero(),
            "a, k, ell must be positive"
        );
        assert!(
            !self.x_bound.is_zero() && !self.y_bound.is_zero(),
            "bounds must be positive"
        );
        assert!(self.min_xy >= 1, "min_xy must be positive");
    }
}

/// Outcome of one bounded scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    /// All `(x, y)` in the box satisfying the equation exactly, ascending in `y`.
    pub solutions: Vec<(Natural, Natural)>,
    /// True when the result is complete for the box. Obstructed queries are
    /// complete without scanning.
    pub exhausted: bool,
    /// True when the gcd obstruction ruled out all solutions.
    pub obstructed: bool,
}

/// True iff `k ≢ 0 (mod gcd(a, ℓ))`, in which case no solutions exist:
/// mod `gcd(a, ℓ)` the left side is `k` and the right side is `0`.
pub fn gcd_obstruction(q: &PowerEquationQuery) -> bool {
    !q.k.is_multiple_of(&gcd(&q.a, &q.ell))
}

/// Scan the full box with a single worker.
pub fn search_solutions(q: &PowerEquationQuery) -> SearchResult {
    search_solutions_with_workers(q, 1)
}

/// Scan the full box in `workers` y-stripes. The stripe results are merged
/// in stripe order, so the output is identical for every worker count.
pub fn search_solutions_with_workers(q: &PowerEquationQuery, workers: usize) -> SearchResult {
    q.validate();
    assert!(workers >= 1, "at least one worker");

    if gcd_obstruction(q) {
        return SearchResult {
            solutions: Vec::new(),
            exhausted: true,
            obstructed: true,
        };
    }

    let y_lo = q.min_xy;
    let y_hi = q
        .y_bound
        .to_u64()
        .expect("y_bound exceeds the scannable range");
    let solutions = if y_lo > y_hi {
        Vec::new()
    } else if workers == 1 {
        scan_stripe(q, y_lo, y_hi)
    } else {
        stripes(y_lo, y_hi, workers)
            .into_par_iter()
            .map(|(lo, hi)| scan_stripe(q, lo, hi))
            .collect::<Vec<_>>()
            .concat()
    };

    SearchResult {
        solutions,
        exhausted: true,
        obstructed: false,
    }
}

/// Contiguous equal-ish stripes covering `[lo, hi]`, in ascending order.
fn stripes(lo: u64, hi: u64, workers: usize) -> Vec<(u64, u64)> {
    let span = hi - lo + 1;
    let count = (workers as u64).min(span);
    let base = span / count;
    let extra = span % count;
    let mut out = Vec::with_capacity(count as usize);
    let mut start = lo;
    for i in 0..count {
        let len = base + u64::from(i < extra);
        out.push((start, start + len - 1));
        start += len;
    }
    out
}

fn scan_stripe(q: &PowerEquationQuery, y_lo: u64, y_hi: u64) -> Vec<(Natural, Natural)> {
    let shifted = &q.a + &q.ell;
    let min_x = Natural::from(q.min_xy);
    let mut found = Vec::new();
    for y in y_lo..=y_hi {
        let y = Natural::from(y);
        let rhs = &shifted * y.pow(q.n);
        if rhs <= q.k {
            continue;
        }
        let w = rhs - &q.k;
        if !w.is_multiple_of(&q.a) {
            continue;
        }
        if let Some(x) = exact_root(&(w / &q.a), q.m) {
            if x >= min_x && x <= q.x_bound {
                found.push((x, y));
            }
        }
    }
    found
}

/// One cell of a survey table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub a: Natural,
    pub k: Natural,
    pub ell: Natural,
    pub m: u32,
    pub n: u32,
    pub count: usize,
    pub obstructed: bool,
    pub exhausted: bool,
}

/// Run one search per grid cell. Rows come out lexicographic in `(a, k, ell)`
/// whatever order the value lists arrive in.
#[allow(clippy::too_many_arguments)]
pub fn survey(
    a_values: &[Natural],
    k_values: &[Natural],
    ell_values: &[Natural],
    m: u32,
    n: u32,
    x_bound: &Natural,
    y_bound: &Natural,
    min_xy: u64,
    workers: usize,
) -> Vec<SurveyRow> {
    let mut a_values = a_values.to_vec();
    let mut k_values = k_values.to_vec();
    let mut ell_values = ell_values.to_vec();
    for values in [&mut a_values, &mut k_values, &mut ell_values] {
        values.sort();
        values.dedup();
    }

    let mut rows = Vec::with_capacity(a_values.len() * k_values.len() * ell_values.len());
    for a in &a_values {
        for k in &k_values {
            for ell in &ell_values {
                let q = PowerEquationQuery::new(
                    a.clone(),
                    k.clone(),
                    ell.clone(),
                    m,
                    n,
                    x_bound.clone(),
                    y_bound.clone(),
                )
                .with_min_xy(min_xy);
                let result = search_solutions_with_workers(&q, workers);
                rows.push(SurveyRow {
                    a: a.clone(),
                    k: k.clone(),
                    ell: ell.clone(),
                    m,
                    n,
                    count: result.solutions.len(),
                    obstructed: result.obstructed,
                    exhausted: result.exhausted,
                });
            }
        }
    }
    rows
}
