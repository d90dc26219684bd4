//! Shared exact integer utilities.
//!
//! All arithmetic is arbitrary precision: no floating point, no modular
//! wraparound. Root extraction delegates to the exact Newton iteration in
//! `num-integer`/`num-bigint`; factor-based helpers use plain trial division,
//! which is ample for the small (parameter-derived) inputs this crate feeds
//! them.

use crate::Natural;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Floor of the square root: the unique `r` with `r² ≤ n < (r+1)²`.
pub fn isqrt(n: &Natural) -> Natural {
    n.sqrt()
}

/// Floor of the `m`th root: the unique `r` with `r^m ≤ n < (r+1)^m`.
///
/// `m` must be at least 1.
pub fn nth_root(n: &Natural, m: u32) -> Natural {
    assert!(m >= 1, "root degree must be positive");
    n.nth_root(m)
}

/// `Some(r)` with `r² = n` when `n` is a perfect square, otherwise `None`.
pub fn is_perfect_square(n: &Natural) -> Option<Natural> {
    let r = isqrt(n);
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// `Some(r)` with `r^m = n` when `n` is an exact `m`th power, otherwise `None`.
pub fn exact_root(n: &Natural, m: u32) -> Option<Natural> {
    let r = nth_root(n, m);
    if r.pow(m) == *n {
        Some(r)
    } else {
        None
    }
}

/// Decompose `n ≥ 1` as `n = b²·c` with `c` squarefree.
///
/// The decomposition is unique, so the output is deterministic.
pub fn squarefree_decompose(n: &Natural) -> (Natural, Natural) {
    assert!(!n.is_zero(), "squarefree_decompose requires n >= 1");
    let mut b = Natural::one();
    let mut c = Natural::one();
    let mut rest = n.clone();
    let two = Natural::from(2u32);

    let mut p = two.clone();
    while (&p * &p) <= rest {
        if rest.is_multiple_of(&p) {
            let mut exp = 0u64;
            while rest.is_multiple_of(&p) {
                rest /= &p;
                exp += 1;
            }
            for _ in 0..exp / 2 {
                b *= &p;
            }
            if exp % 2 == 1 {
                c *= &p;
            }
        }
        p = if p == two { Natural::from(3u32) } else { p + &two };
    }
    // whatever is left is prime, hence squarefree
    c *= rest;
    (b, c)
}

/// All positive divisors of `n ≥ 1`, in ascending order.
pub fn divisors(n: &Natural) -> Vec<Natural> {
    assert!(!n.is_zero(), "divisors requires n >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = Natural::one();
    while &(&d * &d) <= n {
        if n.is_multiple_of(&d) {
            let q = n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1u32;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Greatest common divisor.
pub fn gcd(a: &Natural, b: &Natural) -> Natural {
    a.gcd(b)
}
