//! Finite samples of gap-bounded sets and the `{a, a·x²}` dichotomy.
//!
//! An infinite set with gaps bounded by `ℓ` is fully described on `[1, H]`
//! by any finite prefix reaching `H`; that prefix plus its horizon is a
//! [`SyndeticSample`]. Against such a sample the two hypotheses (adjacent
//! pairs `{a, a+k}` inside the set, and every window `{a, a+k}` hitting the
//! set) become checkable, and the constructive dichotomy can run: for an
//! adjacent pair at `a`, take the first witness `(x, y)` of
//! `a·x² + k = (a+k)·y²` and let `b = a·x²`; either `b` is in the set (a
//! `{a, a·x²}` subset) or `b+k = (a+k)·y²` is (a `{a+k, (a+k)·y²}` subset),
//! provided the hitting hypothesis holds at `b`. At finite horizon the
//! third possibility is that `b+k` overshoots the sample; that outcome is
//! reported explicitly, never dropped.

use crate::error::{Error, Result};
use crate::shift_square::{witness_family, ShiftInstance};
use crate::Natural;
use num_traits::{ToPrimitive, Zero};

/// A finite, gap-bounded prefix of an infinite set, with the horizon on
/// which it fully determines membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndeticSample {
    elements: Vec<Natural>,
    gap_bound: u64,
    horizon: u64,
}

impl SyndeticSample {
    /// Build a sample from strictly increasing positive elements.
    ///
    /// Disorder, duplicates, and zero elements are hard errors. Gap and
    /// coverage problems are *not* errors here; [`SyndeticSample::verify`]
    /// reports them.
    pub fn new(elements: Vec<Natural>, gap_bound: u64, horizon: u64) -> Result<Self> {
        assert!(gap_bound >= 1, "gap bound must be positive");
        assert!(horizon >= 1, "horizon must be positive");
        for (i, e) in elements.iter().enumerate() {
            if e.is_zero() {
                return Err(Error::MalformedSet {
                    line: i + 1,
                    reason: "elements must be positive".into(),
                });
            }
            if i > 0 && elements[i - 1] >= *e {
                return Err(Error::MalformedSet {
                    line: i + 1,
                    reason: format!("{} does not exceed its predecessor {}", e, elements[i - 1]),
                });
            }
        }
        Ok(SyndeticSample {
            elements,
            gap_bound,
            horizon,
        })
    }

    /// Parse the set file format: one positive decimal integer per line,
    /// strictly ascending, `#` starts a comment line, blank lines are
    /// malformed.
    pub fn parse_elements(text: &str) -> Result<Vec<Natural>> {
        let mut elements = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.starts_with('#') {
                continue;
            }
            if trimmed.is_empty() {
                return Err(Error::MalformedSet {
                    line,
                    reason: "blank line".into(),
                });
            }
            let value: Natural = trimmed.parse().map_err(|_| Error::MalformedSet {
                line,
                reason: format!("not a positive decimal integer: {trimmed:?}"),
            })?;
            elements.push(value);
        }
        Ok(elements)
    }

    pub fn elements(&self) -> &[Natural] {
        &self.elements
    }

    pub fn gap_bound(&self) -> u64 {
        self.gap_bound
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    /// Exact membership test (the sample is sorted; binary search).
    pub fn contains(&self, n: &Natural) -> bool {
        self.elements.binary_search(n).is_ok()
    }

    /// Check the gap and coverage invariants; violations are report content,
    /// not errors. Ordering and positivity cannot be violated post-construction.
    pub fn verify(&self) -> SampleReport {
        let mut violations = Vec::new();
        let horizon = Natural::from(self.horizon);
        let gap_bound = Natural::from(self.gap_bound);

        match self.elements.first() {
            None => violations.push(SampleViolation::Empty),
            Some(first) => {
                if *first > gap_bound {
                    violations.push(SampleViolation::FirstElementBeyondGapBound {
                        first: first.clone(),
                    });
                }
            }
        }
        for (i, pair) in self.elements.windows(2).enumerate() {
            // gaps only constrain the part of the set at or below the horizon
            if pair[0] >= horizon {
                break;
            }
            let gap = &pair[1] - &pair[0];
            if gap > gap_bound {
                violations.push(SampleViolation::GapExceeded {
                    index: i,
                    from: pair[0].clone(),
                    to: pair[1].clone(),
                });
            }
        }
        if let Some(max) = self.elements.last() {
            if *max < horizon {
                violations.push(SampleViolation::HorizonNotCovered { max: max.clone() });
            }
        }
        SampleReport { violations }
    }

    /// Membership bitmap over `[0, horizon]` for window scans.
    fn bitmap(&self) -> Vec<bool> {
        let h = usize::try_from(self.horizon).expect("horizon exceeds address space");
        let mut bits = vec![false; h + 1];
        let horizon = Natural::from(self.horizon);
        for e in &self.elements {
            if *e > horizon {
                break;
            }
            let idx = e.to_u64().expect("bounded by horizon") as usize;
            bits[idx] = true;
        }
        bits
    }
}

/// One invariant violation, with enough position information to fix the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleViolation {
    Empty,
    FirstElementBeyondGapBound { first: Natural },
    GapExceeded { index: usize, from: Natural, to: Natural },
    HorizonNotCovered { max: Natural },
}

impl std::fmt::Display for SampleViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SampleViolation::Empty => write!(f, "sample has no elements"),
            SampleViolation::FirstElementBeyondGapBound { first } => {
                write!(f, "first element {first} exceeds the gap bound")
            }
            SampleViolation::GapExceeded { index, from, to } => {
                write!(f, "gap {from} -> {to} (pair {index}) exceeds the gap bound")
            }
            SampleViolation::HorizonNotCovered { max } => {
                write!(f, "largest element {max} is below the horizon")
            }
        }
    }
}

/// Outcome of [`SyndeticSample::verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleReport {
    pub violations: Vec<SampleViolation>,
}

impl SampleReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// All `a` with `a` and `a+k` both in the sample and `a+k ≤ horizon`, ascending.
pub fn find_adjacent_pairs(sample: &SyndeticSample, k: &Natural) -> Vec<Natural> {
    let horizon = Natural::from(sample.horizon);
    assert!(*k < horizon, "k must be below the horizon");
    sample
        .elements
        .iter()
        .filter(|e| *e + k <= horizon && sample.contains(&(*e + k)))
        .cloned()
        .collect()
}

/// True iff every window `{a, a+k}` with `a ≤ horizon − k` meets the sample.
pub fn verify_hitting(sample: &SyndeticSample, k: &Natural) -> bool {
    let horizon = sample.horizon;
    let k = k.to_u64().filter(|k| *k < horizon).expect("k must be below the horizon");
    let bits = sample.bitmap();
    (1..=horizon - k).all(|a| bits[a as usize] || bits[(a + k) as usize])
}

/// Which side of the dichotomy produced a geometric pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairBranch {
    /// `{a, a·x²}` with both members in the sample.
    Direct,
    /// `{a+k, (a+k)·y²}` with both members in the sample.
    Shifted,
}

/// An exhibited subset `{base, base·ratio_root²}` of the sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricPairWitness {
    pub base: Natural,
    pub ratio_root: Natural,
    /// `base · ratio_root²`.
    pub product: Natural,
    pub branch: PairBranch,
    /// The adjacent pair `(a, a+k)` the witness came from.
    pub source_pair: (Natural, Natural),
}

/// Horizon-relative outcome of the dichotomy at one adjacent pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairOutcome {
    Found(GeometricPairWitness),
    /// `b+k` exceeds the horizon; membership of the pair is undecidable here.
    OutOfHorizon { product: Natural },
    /// Both `b` and `b+k` are inside the horizon yet outside the sample, so
    /// the hitting hypothesis fails at `b`.
    HypothesisViolation { product: Natural },
    /// `a(a+k)` is a perfect square; no witness family exists for this pair.
    SquareSkipped { root: Natural },
}

/// Run the dichotomy at every adjacent pair, trying up to `tries` family
/// members per pair and reporting the first decisive outcome. Results are
/// ascending in the source `a`.
pub fn find_geometric_pairs(
    sample: &SyndeticSample,
    k: &Natural,
    tries: usize,
) -> Vec<(Natural, PairOutcome)> {
    assert!(tries >= 1, "at least one family member must be tried");
    let horizon = Natural::from(sample.horizon);

    find_adjacent_pairs(sample, k)
        .into_iter()
        .map(|a| {
            let outcome = pair_outcome(sample, &a, k, tries, &horizon);
            (a, outcome)
        })
        .collect()
}

fn pair_outcome(
    sample: &SyndeticSample,
    a: &Natural,
    k: &Natural,
    tries: usize,
    horizon: &Natural,
) -> PairOutcome {
    let inst = ShiftInstance::new(a.clone(), k.clone());
    if let Some(root) = inst.square_root_of_d() {
        return PairOutcome::SquareSkipped { root };
    }

    let source_pair = (a.clone(), inst.shifted());
    let mut first_violation: Option<Natural> = None;
    let mut beyond: Option<Natural> = None;

    let family = witness_family(&inst).expect("nonsquare d checked above");
    for w in family.take(tries) {
        let b = a * &w.x * &w.x;
        let b_plus_k = &b + k;
        if b_plus_k > *horizon {
            // later members are larger still
            beyond = Some(b);
            break;
        }
        if sample.contains(&b) {
            return PairOutcome::Found(GeometricPairWitness {
                base: a.clone(),
                product: b,
                ratio_root: w.x,
                branch: PairBranch::Direct,
                source_pair,
            });
        }
        if sample.contains(&b_plus_k) {
            return PairOutcome::Found(GeometricPairWitness {
                base: inst.shifted(),
                product: b_plus_k,
                ratio_root: w.y,
                branch: PairBranch::Shifted,
                source_pair,
            });
        }
        first_violation.get_or_insert(b);
    }

    match (first_violation, beyond) {
        // an in-horizon miss certifies the violation even if later members overshoot
        (Some(b), _) => PairOutcome::HypothesisViolation { product: b },
        (None, Some(b)) => PairOutcome::OutOfHorizon { product: b },
        (None, None) => unreachable!("every tried member yields an outcome"),
    }
}

/// Built-in sample constructions.
pub mod generators {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Every positive integer up to the horizon; gap bound 1.
    pub fn all_integers(horizon: u64) -> SyndeticSample {
        assert!(horizon >= 1);
        let elements = (1..=horizon).map(Natural::from).collect();
        SyndeticSample::new(elements, 1, horizon).expect("construction is clean")
    }

    /// The odd numbers, extended to reach the horizon; gap bound 2.
    pub fn odd_numbers(horizon: u64) -> SyndeticSample {
        assert!(horizon >= 1);
        let elements = (1..=horizon.div_ceil(2)).map(|i| Natural::from(2 * i - 1)).collect();
        SyndeticSample::new(elements, 2, horizon).expect("construction is clean")
    }

    /// All integers avoiding one residue class mod `modulus`; gap bound 2.
    pub fn avoid_residue(residue: u64, modulus: u64, horizon: u64) -> Result<SyndeticSample> {
        if modulus < 2 {
            return Err(Error::InvalidGenerator(format!(
                "modulus {modulus} leaves no integers when a class is removed"
            )));
        }
        if residue >= modulus {
            return Err(Error::InvalidGenerator(format!(
                "residue {residue} is not a class mod {modulus}"
            )));
        }
        assert!(horizon >= 1);
        let mut elements = Vec::new();
        let mut n = 1u64;
        loop {
            if n % modulus != residue {
                elements.push(Natural::from(n));
                if n >= horizon {
                    break;
                }
            }
            n += 1;
        }
        SyndeticSample::new(elements, 2, horizon)
    }

    /// A seeded random set with consecutive gaps uniform in `1..=gap_bound`.
    pub fn random_gap_bounded(gap_bound: u64, horizon: u64, seed: u64) -> SyndeticSample {
        assert!(gap_bound >= 1 && horizon >= 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut elements = Vec::new();
        let mut cur = rng.random_range(1..=gap_bound);
        elements.push(Natural::from(cur));
        while cur < horizon {
            cur += rng.random_range(1..=gap_bound);
            elements.push(Natural::from(cur));
        }
        SyndeticSample::new(elements, gap_bound, horizon).expect("construction is clean")
    }
}
