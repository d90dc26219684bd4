//! Pell's equation `u² − d·v² = 1` by continued fractions.
//!
//! For nonsquare `d` the expansion of `√d` is periodic and is produced by the
//! integer PQa recurrence on states `(P, Q)` representing `(√d + P) / Q`:
//!
//! ```text
//! a_0 = ⌊√d⌋,  P_0 = 0,  Q_0 = 1
//! P_k = a_{k−1}·Q_{k−1} − P_{k−1}
//! Q_k = (d − P_k²) / Q_{k−1}        (exact division)
//! a_k = ⌊(a_0 + P_k) / Q_k⌋
//! ```
//!
//! The period ends at the first `k ≥ 1` with `Q_k = 1`, where `a_k = 2·a_0`.
//! The fundamental solution is the first convergent `p/q` of the expansion
//! with `p² − d·q² = 1` (end of the period for even period length, end of the
//! doubled period for odd). Every further solution is a power of the
//! fundamental one under composition, i.e. multiplication of `u + v√d` in
//! `Q(√d)`.

use crate::arith::{is_perfect_square, isqrt};
use crate::error::{Error, Result};
use crate::Natural;
use num_traits::One;

/// A positive solution of `u² − d·v² = 1` over a fixed nonsquare `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PellSolution {
    pub d: Natural,
    pub u: Natural,
    pub v: Natural,
}

impl PellSolution {
    /// Exact check of the defining equation.
    pub fn is_valid(&self) -> bool {
        &self.u * &self.u == &self.d * &self.v * &self.v + 1u32
    }
}

/// The periodic continued-fraction expansion of `√d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    /// `⌊√d⌋`.
    pub a0: Natural,
    /// The periodic partial quotients; the last one equals `2·a0`.
    pub period: Vec<Natural>,
}

/// One step of the PQa recurrence.
struct PqaState {
    d: Natural,
    a0: Natural,
    p: Natural,
    q: Natural,
}

impl PqaState {
    fn new(d: Natural, a0: Natural) -> Self {
        PqaState {
            d,
            a0,
            p: Natural::ZERO,
            q: Natural::one(),
        }
    }

    /// Advance to the next state and return the partial quotient `a_k`.
    fn step(&mut self, prev_quotient: &Natural) -> Natural {
        let p_next = prev_quotient * &self.q - &self.p;
        let q_next = (&self.d - &p_next * &p_next) / &self.q;
        let a = (&self.a0 + &p_next) / &q_next;
        self.p = p_next;
        self.q = q_next;
        a
    }
}

/// Exact periodic expansion of `√d`, stopping at the first period.
///
/// Errors with [`Error::SquareInput`] when `d` is a perfect square (the
/// expansion would be finite and there is no Pell solution).
pub fn continued_fraction_sqrt(d: &Natural) -> Result<ContinuedFraction> {
    let a0 = require_nonsquare(d)?;
    let mut state = PqaState::new(d.clone(), a0.clone());
    let mut period = Vec::new();
    let mut quot = a0.clone();
    loop {
        quot = state.step(&quot);
        period.push(quot.clone());
        if state.q.is_one() {
            return Ok(ContinuedFraction { a0, period });
        }
    }
}

/// The minimal positive solution of `u² − d·v² = 1`.
pub fn fundamental_solution(d: &Natural) -> Result<PellSolution> {
    let a0 = require_nonsquare(d)?;
    let mut state = PqaState::new(d.clone(), a0.clone());

    // convergents p_k / q_k; k = 0 gives a0 / 1 with a0² − d < 0
    let mut p_prev = Natural::one();
    let mut q_prev = Natural::ZERO;
    let mut p = a0.clone();
    let mut q = Natural::one();
    let mut quot = a0;

    loop {
        quot = state.step(&quot);
        let p_next = &quot * &p + &p_prev;
        let q_next = &quot * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);

        if &p * &p == d * &q * &q + 1u32 {
            return Ok(PellSolution {
                d: d.clone(),
                u: p,
                v: q,
            });
        }
    }
}

/// Compose two solutions over the same `d`:
/// `(u₁ + v₁√d)(u₂ + v₂√d) = (u₁u₂ + d·v₁v₂) + (u₁v₂ + u₂v₁)√d`.
pub fn compose(s: &PellSolution, t: &PellSolution) -> Result<PellSolution> {
    if s.d != t.d {
        return Err(Error::MismatchedD(s.d.clone(), t.d.clone()));
    }
    Ok(PellSolution {
        d: s.d.clone(),
        u: &s.u * &t.u + &s.d * &s.v * &t.v,
        v: &s.u * &t.v + &t.u * &s.v,
    })
}

/// The infinite ascending stream of all positive Pell solutions over `d`:
/// the fundamental solution followed by its successive powers.
pub fn pell_solutions(d: &Natural) -> Result<PellSolutions> {
    let fundamental = fundamental_solution(d)?;
    Ok(PellSolutions {
        next: fundamental.clone(),
        fundamental,
    })
}

/// Iterator form of the solution stream; never terminates.
#[derive(Debug, Clone)]
pub struct PellSolutions {
    fundamental: PellSolution,
    next: PellSolution,
}

impl PellSolutions {
    /// The generator the stream is built from.
    pub fn fundamental(&self) -> &PellSolution {
        &self.fundamental
    }
}

impl Iterator for PellSolutions {
    type Item = PellSolution;

    fn next(&mut self) -> Option<PellSolution> {
        let step = compose(&self.next, &self.fundamental).expect("stream holds a single d");
        Some(std::mem::replace(&mut self.next, step))
    }
}

fn require_nonsquare(d: &Natural) -> Result<Natural> {
    if is_perfect_square(d).is_some() {
        return Err(Error::SquareInput(d.clone()));
    }
    Ok(isqrt(d))
}
