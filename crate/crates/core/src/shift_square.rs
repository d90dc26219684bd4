//! Exact witnesses of the shifted-square equation `a·x² + k = (a+k)·y²`.
//!
//! For positive `a`, `k` with `d = a(a+k)` nonsquare, every positive Pell
//! solution `(u, v)` of `u² − d·v² = 1` yields the witness
//!
//! ```text
//! x = u + a·v + k·v,   y = u + a·v
//! ```
//!
//! so each instance carries an infinite family of exact solutions. The family
//! is the Pell orbit of the norm form `z² − d·x² = k(a+k)` seeded at the base
//! solution `(z₀, x₀) = (a+k, 1)`: writing `z = (a+k)·y` turns the equation
//! into that norm form, and composing the base with Pell units walks the
//! family. Both views are exposed here and stay index-aligned.

use crate::arith::is_perfect_square;
use crate::error::{Error, Result};
use crate::pell::{pell_solutions, PellSolution, PellSolutions};
use crate::Natural;
use num_traits::Zero;

/// The equation context: parameters `(a, k)` with `d = a(a+k)` cached.
///
/// Instances with square `d` are constructible (other modules need to reason
/// about them) but refuse to generate families; see [`ShiftInstance::family`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftInstance {
    a: Natural,
    k: Natural,
    d: Natural,
}

impl ShiftInstance {
    /// Build the instance for positive `a` and `k`.
    pub fn new(a: Natural, k: Natural) -> Self {
        assert!(!a.is_zero() && !k.is_zero(), "a and k must be positive");
        let d = &a * (&a + &k);
        ShiftInstance { a, k, d }
    }

    pub fn a(&self) -> &Natural {
        &self.a
    }

    pub fn k(&self) -> &Natural {
        &self.k
    }

    /// `d = a(a+k)`.
    pub fn d(&self) -> &Natural {
        &self.d
    }

    /// `a + k`.
    pub fn shifted(&self) -> Natural {
        &self.a + &self.k
    }

    /// `Some(r)` with `r² = d` when the instance is degenerate.
    pub fn square_root_of_d(&self) -> Option<Natural> {
        is_perfect_square(&self.d)
    }

    fn require_nonsquare_d(&self) -> Result<()> {
        if self.square_root_of_d().is_some() {
            return Err(Error::SquareD {
                a: self.a.clone(),
                k: self.k.clone(),
                d: self.d.clone(),
            });
        }
        Ok(())
    }

    /// Convenience alias for [`witness_family`].
    pub fn family(&self) -> Result<WitnessFamily> {
        witness_family(self)
    }
}

/// A pair `(x, y)` satisfying `a·x² + k = (a+k)·y²` exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub x: Natural,
    pub y: Natural,
}

/// A pair `(z, x)` satisfying `z² − d·x² = k(a+k)` exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormFormSolution {
    pub z: Natural,
    pub x: Natural,
}

/// Map one Pell solution over `d = a(a+k)` to a witness.
pub fn witness_from_pell(inst: &ShiftInstance, p: &PellSolution) -> Result<Witness> {
    if p.d != inst.d {
        return Err(Error::MismatchedD(p.d.clone(), inst.d.clone()));
    }
    inst.require_nonsquare_d()?;
    let y = &p.u + &inst.a * &p.v;
    let x = &y + &inst.k * &p.v;
    Ok(Witness { x, y })
}

/// Exact check of `a·x² + k = (a+k)·y²`.
pub fn verify_witness(inst: &ShiftInstance, w: &Witness) -> bool {
    &inst.a * &w.x * &w.x + &inst.k == inst.shifted() * &w.y * &w.y
}

/// The closed-form witness `(4a+3, 4a+1)` for `k = 1`.
///
/// `a(4a+3)² + 1 = (a+1)(4a+1)²` is an identity in `a`; the pair coincides
/// with the first member of the `k = 1` family because the fundamental
/// solution of `u² − a(a+1)·v² = 1` is `(2a+1, 2)`.
pub fn patil_witness(a: &Natural) -> Witness {
    assert!(!a.is_zero(), "a must be positive");
    let four_a = a * 4u32;
    Witness {
        x: &four_a + 3u32,
        y: four_a + 1u32,
    }
}

/// The infinite witness family of an instance, strictly increasing in `x`.
pub fn witness_family(inst: &ShiftInstance) -> Result<WitnessFamily> {
    inst.require_nonsquare_d()?;
    Ok(WitnessFamily {
        inst: inst.clone(),
        pell: pell_solutions(&inst.d)?,
    })
}

/// Iterator over the witnesses produced by successive Pell solutions.
#[derive(Debug, Clone)]
pub struct WitnessFamily {
    inst: ShiftInstance,
    pell: PellSolutions,
}

impl Iterator for WitnessFamily {
    type Item = Witness;

    fn next(&mut self) -> Option<Witness> {
        let p = self.pell.next()?;
        Some(witness_from_pell(&self.inst, &p).expect("stream shares the instance d"))
    }
}

/// The base norm-form solution `(z₀, x₀) = (a+k, 1)`:
/// `(a+k)² − a(a+k) = k(a+k)` identically.
pub fn norm_form_base(inst: &ShiftInstance) -> NormFormSolution {
    NormFormSolution {
        z: inst.shifted(),
        x: Natural::from(1u32),
    }
}

/// Exact check of `z² − d·x² = k(a+k)`.
pub fn verify_norm_form(inst: &ShiftInstance, s: &NormFormSolution) -> bool {
    &s.z * &s.z == &inst.d * &s.x * &s.x + &inst.k * inst.shifted()
}

/// The norm-form orbit of the base solution under the fundamental Pell unit.
///
/// Element `i` equals the base composed with the `(i+1)`-th Pell solution, so
/// the stream is index-aligned with [`witness_family`]: element `i` is
/// `((a+k)·yᵢ, xᵢ)`. The untouched base itself is [`norm_form_base`].
pub fn norm_form_solutions(inst: &ShiftInstance) -> Result<NormFormSolutions> {
    inst.require_nonsquare_d()?;
    let fundamental = pell_solutions(&inst.d)?.fundamental().clone();
    Ok(NormFormSolutions {
        d: inst.d.clone(),
        current: norm_form_base(inst),
        fundamental,
    })
}

/// Iterator over norm-form solutions; never terminates.
#[derive(Debug, Clone)]
pub struct NormFormSolutions {
    d: Natural,
    current: NormFormSolution,
    fundamental: PellSolution,
}

impl Iterator for NormFormSolutions {
    type Item = NormFormSolution;

    fn next(&mut self) -> Option<NormFormSolution> {
        // (z, x) ← (z·u + x·v·d, z·v + x·u)
        let z = &self.current.z * &self.fundamental.u
            + &self.current.x * &self.fundamental.v * &self.d;
        let x = &self.current.z * &self.fundamental.v + &self.current.x * &self.fundamental.u;
        self.current = NormFormSolution { z, x };
        Some(self.current.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nat;
    use crate::pell::fundamental_solution;

    fn inst(a: u64, k: u64) -> ShiftInstance {
        ShiftInstance::new(nat(a), nat(k))
    }

    #[test]
    fn witness_from_small_pell_solutions() {
        let i = inst(1, 1);
        let p = fundamental_solution(&nat(2)).unwrap();
        let w = witness_from_pell(&i, &p).unwrap();
        assert_eq!((w.x.clone(), w.y.clone()), (nat(7), nat(5)));
        assert_eq!(nat(1) * 49u32 + 1u32, nat(2) * 25u32);

        let i = inst(2, 1);
        let p = fundamental_solution(&nat(6)).unwrap();
        let w = witness_from_pell(&i, &p).unwrap();
        assert_eq!((w.x, w.y), (nat(11), nat(9)));

        let i = inst(1, 2);
        let p = fundamental_solution(&nat(3)).unwrap();
        let w = witness_from_pell(&i, &p).unwrap();
        assert_eq!((w.x.clone(), w.y.clone()), (nat(5), nat(3)));
        assert!(verify_witness(&i, &w));
    }

    #[test]
    fn family_members() {
        let family: Vec<_> = witness_family(&inst(1, 1)).unwrap().take(2).collect();
        assert_eq!((family[0].x.clone(), family[0].y.clone()), (nat(7), nat(5)));
        assert_eq!((family[1].x.clone(), family[1].y.clone()), (nat(41), nat(29)));
        // second member by hand: (17,12) gives x = 17+12+12 = 41, y = 29
        assert_eq!(nat(1681) + 1u32, nat(2) * nat(841));

        let first = witness_family(&inst(1, 2)).unwrap().next().unwrap();
        assert_eq!((first.x, first.y), (nat(5), nat(3)));
    }

    #[test]
    fn verify_witness_examples() {
        assert!(verify_witness(&inst(1, 1), &Witness { x: nat(7), y: nat(5) }));
        assert!(!verify_witness(&inst(1, 1), &Witness { x: nat(7), y: nat(6) }));
        assert!(verify_witness(&inst(3, 1), &Witness { x: nat(15), y: nat(13) }));
    }

    #[test]
    fn patil_closed_form() {
        let w = patil_witness(&nat(1));
        assert_eq!((w.x, w.y), (nat(7), nat(5)));
        let w = patil_witness(&nat(2));
        assert_eq!((w.x, w.y), (nat(11), nat(9)));
        let w = patil_witness(&nat(10));
        assert_eq!((w.x.clone(), w.y.clone()), (nat(43), nat(41)));
        assert_eq!(nat(10) * nat(1849) + 1u32, nat(11) * nat(1681));
        assert!(verify_witness(&inst(10, 1), &w));
    }

    #[test]
    fn patil_equals_first_family_member() {
        for a in 1u64..=500 {
            let expected = patil_witness(&nat(a));
            let first = witness_family(&inst(a, 1)).unwrap().next().unwrap();
            assert_eq!(first, expected, "a = {a}");
        }
    }

    #[test]
    fn norm_form_orbit() {
        let i = inst(1, 1);
        let base = norm_form_base(&i);
        assert_eq!((base.z.clone(), base.x.clone()), (nat(2), nat(1)));
        assert!(verify_norm_form(&i, &base));

        let first = norm_form_solutions(&i).unwrap().next().unwrap();
        assert_eq!((first.z.clone(), first.x.clone()), (nat(10), nat(7)));
        assert_eq!(nat(100) - nat(2) * nat(49), nat(2));

        let i = inst(1, 2);
        let base = norm_form_base(&i);
        assert_eq!((base.z, base.x), (nat(3), nat(1)));
        let first = norm_form_solutions(&i).unwrap().next().unwrap();
        assert_eq!((first.z, first.x), (nat(9), nat(5)));
    }

    #[test]
    fn norm_form_base_identity_holds_broadly() {
        for a in 1u64..=40 {
            for k in 1u64..=15 {
                let i = inst(a, k);
                assert!(verify_norm_form(&i, &norm_form_base(&i)));
            }
        }
    }

    #[test]
    fn families_and_norm_forms_stay_aligned() {
        for (a, k) in [(1u64, 1u64), (2, 1), (1, 2), (5, 2), (3, 7)] {
            let i = inst(a, k);
            let shifted = i.shifted();
            let witnesses = witness_family(&i).unwrap().take(6);
            let norms = norm_form_solutions(&i).unwrap().take(6);
            for (w, n) in witnesses.zip(norms) {
                assert!(verify_witness(&i, &w));
                assert!(verify_norm_form(&i, &n));
                assert_eq!(n.z, &shifted * &w.y);
                assert_eq!(n.x, w.x);
                assert!(n.z.clone() % &shifted == nat(0));
            }
        }
    }

    #[test]
    fn family_is_strictly_increasing_with_x_above_y() {
        let members: Vec<_> = witness_family(&inst(5, 2)).unwrap().take(8).collect();
        for w in &members {
            assert!(w.x > w.y);
        }
        for pair in members.windows(2) {
            assert!(pair[0].x < pair[1].x && pair[0].y < pair[1].y);
        }
    }

    #[test]
    fn degenerate_instances_are_flagged() {
        // a = 1, k = 3 gives d = 4 = 2²
        let i = inst(1, 3);
        assert_eq!(i.square_root_of_d(), Some(nat(2)));
        match witness_family(&i) {
            Err(Error::SquareD { d, .. }) => assert_eq!(d, nat(4)),
            other => panic!("expected SquareD, got {other:?}"),
        }
        assert!(norm_form_solutions(&i).is_err());

        let p = fundamental_solution(&nat(2)).unwrap();
        assert_eq!(
            witness_from_pell(&i, &p),
            Err(Error::MismatchedD(nat(2), nat(4)))
        );
    }
}
