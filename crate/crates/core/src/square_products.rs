//! The finitely many `a` with `a(a+k)` a perfect square, with certificates.
//!
//! Write `a = b²·c` with `c` squarefree. `a(a+k)` being a square forces `c`
//! to divide `k`, say `k = c·ell`, and reduces to `t² − b² = ell`. Each
//! squarefree divisor `c` of `k` therefore contributes the solutions of a
//! difference-of-squares equation: factor `ell = d₁·d₂` with `d₁ < d₂` of
//! equal parity and read off `t = (d₁+d₂)/2`, `b = (d₂−d₁)/2`. That makes
//! the whole set finite and directly enumerable, and gives each `a` a
//! certificate whose validity is a handful of exact identities.

use crate::arith::{divisors, is_perfect_square, squarefree_decompose};
use crate::Natural;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A verified decomposition showing that `a(a+k)` is the square of `b·c·t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareProductCertificate {
    /// The degenerate parameter, `a = b²·c`.
    pub a: Natural,
    pub b: Natural,
    /// Squarefree part of `a`; divides `k`.
    pub c: Natural,
    /// Satisfies `t² − b² = ell`.
    pub t: Natural,
    /// The cofactor `k / c`.
    pub ell: Natural,
}

impl SquareProductCertificate {
    /// The square root of `a(a+k)`, namely `b·c·t`.
    pub fn root(&self) -> Natural {
        &self.b * &self.c * &self.t
    }

    /// Check every certificate identity against `k` by exact arithmetic.
    pub fn verify(&self, k: &Natural) -> bool {
        let a_ok = self.a == &self.b * &self.b * &self.c;
        let k_ok = &self.c * &self.ell == *k;
        let t_ok = &self.t * &self.t == &self.b * &self.b + &self.ell;
        let root = self.root();
        let square_ok = &self.a * (&self.a + k) == &root * &root;
        a_ok && k_ok && t_ok && square_ok
    }
}

/// All positive `a` such that `a(a+k)` is a perfect square, ascending in `a`,
/// each with its certificate. The list is always finite; empty is a valid
/// answer (e.g. `k = 1`).
pub fn enumerate_square_products(k: &Natural) -> Vec<SquareProductCertificate> {
    assert!(!k.is_zero(), "k must be positive");
    let mut found = Vec::new();

    for c in divisors(k) {
        if !squarefree_decompose(&c).0.is_one() {
            continue;
        }
        let ell = k / &c;
        for d1 in divisors(&ell) {
            let d2 = &ell / &d1;
            // d1 < d2 keeps b positive; equal parity keeps t and b integral
            if d1 >= d2 || (&d1 + &d2).is_odd() {
                continue;
            }
            let t = (&d1 + &d2) / 2u32;
            let b = (&d2 - &d1) / 2u32;
            let a = &b * &b * &c;
            found.push(SquareProductCertificate {
                a,
                b,
                c: c.clone(),
                t,
                ell: ell.clone(),
            });
        }
    }

    found.sort_by(|lhs, rhs| (&lhs.a, &lhs.c).cmp(&(&rhs.a, &rhs.c)));
    // (b, c) is determined by a via squarefree decomposition, so duplicates
    // cannot occur; keep the smallest-c certificate if that ever breaks.
    found.dedup_by(|current, kept| {
        let dup = current.a == kept.a;
        debug_assert!(!dup, "duplicate certificate for a = {}", current.a);
        dup
    });
    found
}

/// `Some(r)` with `a(a+k) = r²` when the product is a square, else `None`.
///
/// The direct check; serves as the independent oracle for
/// [`enumerate_square_products`].
pub fn is_square_product(a: &Natural, k: &Natural) -> Option<Natural> {
    is_perfect_square(&(a * (a + k)))
}
