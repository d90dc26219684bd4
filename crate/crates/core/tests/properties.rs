//! Property tests pitting each module against an independent oracle.

use num_traits::ToPrimitive;
use pellshift_core::arith::{is_perfect_square, isqrt, squarefree_decompose};
use pellshift_core::pell::{continued_fraction_sqrt, pell_solutions};
use pellshift_core::power_search::{
    search_solutions, search_solutions_with_workers, PowerEquationQuery,
};
use pellshift_core::shift_square::{
    norm_form_solutions, patil_witness, verify_norm_form, verify_witness, witness_family,
    ShiftInstance,
};
use pellshift_core::square_products::{enumerate_square_products, is_square_product};
use pellshift_core::syndetic::{
    find_geometric_pairs, generators, verify_hitting, PairBranch, PairOutcome,
};
use pellshift_core::{nat, Natural};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

fn is_square_u64(n: u64) -> bool {
    let r = n.isqrt();
    r * r == n
}

/// Trial-division squarefree test, independent of the library decomposition.
fn squarefree_by_trial_division(n: u64) -> bool {
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// The full double loop over the box, in machine integers.
fn double_loop_oracle(a: u64, k: u64, ell: u64, m: u32, n: u32, bound: u64) -> Vec<(u64, u64)> {
    let mut found = Vec::new();
    for y in 1..=bound {
        let rhs = (a + ell) as u128 * (y as u128).pow(n);
        for x in 1..=bound {
            if a as u128 * (x as u128).pow(m) + k as u128 == rhs {
                found.push((x, y));
            }
        }
    }
    found
}

proptest! {
    #[test]
    fn isqrt_brackets_its_input(n in 0u64..=1_000_000) {
        let n = nat(n);
        let r = isqrt(&n);
        prop_assert!(&r * &r <= n);
        prop_assert!((&r + 1u32) * (&r + 1u32) > n);
    }

    #[test]
    fn perfect_square_agrees_with_isqrt(n in 0u64..=1_000_000) {
        let big = nat(n);
        let r = isqrt(&big);
        prop_assert_eq!(is_perfect_square(&big).is_some(), &r * &r == big);
        prop_assert_eq!(is_perfect_square(&big).is_some(), is_square_u64(n));
    }

    #[test]
    fn squarefree_decomposition_is_sound(n in 1u64..=100_000) {
        let (b, c) = squarefree_decompose(&nat(n));
        prop_assert_eq!(&b * &b * &c, nat(n));
        prop_assert!(squarefree_by_trial_division(c.to_u64().unwrap()));
    }

    #[test]
    fn pell_streams_are_exact_and_increasing(d in 2u64..=1000) {
        prop_assume!(!is_square_u64(d));
        let d = nat(d);
        let sols: Vec<_> = pell_solutions(&d).unwrap().take(5).collect();
        for s in &sols {
            prop_assert!(s.is_valid());
        }
        for pair in sols.windows(2) {
            prop_assert!(pair[0].v < pair[1].v);
            prop_assert!(pair[0].u < pair[1].u);
        }
        let cf = continued_fraction_sqrt(&d).unwrap();
        prop_assert_eq!(cf.period.last().unwrap().clone(), &cf.a0 * 2u32);
    }

    #[test]
    fn witness_families_hold_exactly(a in 1u64..=100, k in 1u64..=20) {
        prop_assume!(!is_square_u64(a * (a + k)));
        let inst = ShiftInstance::new(nat(a), nat(k));
        let shifted = inst.shifted();
        let witnesses: Vec<_> = witness_family(&inst).unwrap().take(10).collect();
        let norms = norm_form_solutions(&inst).unwrap().take(10);

        for (w, n) in witnesses.iter().zip(norms) {
            prop_assert!(verify_witness(&inst, w));
            prop_assert!(w.x > w.y);
            prop_assert!(verify_norm_form(&inst, &n));
            prop_assert_eq!(&n.z, &(&shifted * &w.y));
            prop_assert_eq!(&n.x, &w.x);
        }
        for pair in witnesses.windows(2) {
            prop_assert!(pair[0].x < pair[1].x && pair[0].y < pair[1].y);
        }
    }

    #[test]
    fn patil_matches_the_family(a in 1u64..=10_000) {
        let first = witness_family(&ShiftInstance::new(nat(a), nat(1)))
            .unwrap()
            .next()
            .unwrap();
        prop_assert_eq!(first, patil_witness(&nat(a)));
    }

    #[test]
    fn square_product_enumeration_matches_scan(k in 1u64..=100) {
        let k_nat = nat(k);
        let enumerated = enumerate_square_products(&k_nat);
        for cert in &enumerated {
            prop_assert!(cert.verify(&k_nat));
            prop_assert_eq!(is_square_product(&cert.a, &k_nat), Some(cert.root()));
        }
        let in_range: Vec<u64> = enumerated
            .iter()
            .filter_map(|cert| cert.a.to_u64())
            .filter(|a| *a <= 100_000)
            .collect();
        let scan: Vec<u64> = (1..=100_000u64).filter(|&a| is_square_u64(a * (a + k))).collect();
        prop_assert_eq!(in_range, scan);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn y_major_scan_equals_double_loop(
        a in 1u64..=12,
        k in 1u64..=12,
        ell in 1u64..=12,
        m in 2u32..=4,
        n in 2u32..=4,
        bound in 1u64..=60,
    ) {
        let q = PowerEquationQuery::new(nat(a), nat(k), nat(ell), m, n, nat(bound), nat(bound));
        let result = search_solutions(&q);
        let oracle = double_loop_oracle(a, k, ell, m, n, bound);
        if result.obstructed {
            prop_assert!(oracle.is_empty());
            prop_assert!(result.solutions.is_empty());
        } else {
            let got: Vec<(u64, u64)> = result
                .solutions
                .iter()
                .map(|(x, y)| (x.to_u64().unwrap(), y.to_u64().unwrap()))
                .collect();
            prop_assert_eq!(got, oracle);
        }
        prop_assert_eq!(search_solutions_with_workers(&q, 4), result);
    }

    #[test]
    fn dichotomy_is_sound_on_random_samples(seed in 0u64..=10_000) {
        // gap bound 2 forbids two adjacent missing integers, so the k = 1
        // hitting hypothesis holds for every such sample
        let sample = generators::random_gap_bounded(2, 2_000, seed);
        prop_assert!(verify_hitting(&sample, &nat(1)));
        check_dichotomy_outcomes(&sample, 1)?;
    }
}

/// Shared outcome audit: with the hitting hypothesis verified, every pair must
/// resolve to Found, OutOfHorizon, or SquareSkipped, never a violation.
fn check_dichotomy_outcomes(
    sample: &pellshift_core::SyndeticSample,
    k: u64,
) -> Result<(), TestCaseError> {
    let horizon = Natural::from(sample.horizon());
    for (a, outcome) in find_geometric_pairs(sample, &nat(k), 1) {
        match outcome {
            PairOutcome::Found(w) => {
                prop_assert!(w.ratio_root >= nat(2));
                prop_assert_eq!(&w.product, &(&w.base * &w.ratio_root * &w.ratio_root));
                prop_assert!(sample.contains(&w.base));
                prop_assert!(sample.contains(&w.product));
                prop_assert_eq!(&w.source_pair, &(a.clone(), &a + nat(k)));
                match w.branch {
                    PairBranch::Direct => {
                        prop_assert_eq!(&w.base, &a);
                        let inst = ShiftInstance::new(a.clone(), nat(k));
                        let first = witness_family(&inst).unwrap().next().unwrap();
                        prop_assert!(verify_witness(&inst, &first));
                        prop_assert_eq!(&w.product + nat(k), inst.shifted() * &first.y * &first.y);
                    }
                    PairBranch::Shifted => {
                        prop_assert_eq!(&w.base, &(&a + nat(k)));
                    }
                }
            }
            PairOutcome::OutOfHorizon { product } => {
                prop_assert!(product + nat(k) > horizon.clone());
            }
            PairOutcome::SquareSkipped { root } => {
                let d = &a * (&a + nat(k));
                prop_assert_eq!(&root * &root, d);
            }
            PairOutcome::HypothesisViolation { product } => {
                prop_assert!(false, "violation at b = {} despite hitting", product);
            }
        }
    }
    Ok(())
}

/// No v below the fundamental one solves the equation, sampled up to 10⁵;
/// where the fundamental v is huge (d = 61, 109, 181, …) the full scanned
/// prefix is checked.
#[test]
fn fundamental_solutions_are_minimal() {
    for d in 2u64..=200 {
        if d.isqrt().pow(2) == d {
            continue;
        }
        let fundamental = pell_solutions(&nat(d)).unwrap().next().unwrap();
        let v_cap = fundamental.v.to_u64().unwrap_or(u64::MAX).min(100_001);
        for v in 1..v_cap {
            let n = d * v * v + 1;
            assert!(!is_square_u64(n), "smaller solution v = {v} exists for d = {d}");
        }
    }
}

/// For residue-class samples the hitting hypothesis is provable whenever the
/// modulus does not divide k, which lets the dichotomy run at larger shifts.
#[test]
fn dichotomy_is_sound_on_residue_samples() {
    for modulus in 2u64..=6 {
        for residue in 0..modulus {
            for k in 1u64..=5 {
                if k % modulus == 0 {
                    continue;
                }
                let sample = generators::avoid_residue(residue, modulus, 3_000).unwrap();
                assert!(verify_hitting(&sample, &nat(k)), "m={modulus} r={residue} k={k}");
                check_dichotomy_outcomes(&sample, k).unwrap();
            }
        }
    }
}
