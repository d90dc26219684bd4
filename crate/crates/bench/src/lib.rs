//! Shared inputs for the criterion benchmarks in `benches/`.

use pellshift_core::{nat, Natural};

/// Nonsquare d values ordered by how nasty their fundamental solutions are.
pub fn pell_inputs() -> Vec<(&'static str, Natural)> {
    vec![
        ("d=61", nat(61)),
        ("d=991", nat(991)),
        ("d=9949", nat(9949)),
        ("d=1000099", nat(1_000_099)),
    ]
}
