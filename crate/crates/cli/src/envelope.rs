//! Structured output. Every numeric value is the exact decimal rendering of
//! an arbitrary-precision integer (strings, never JSON numbers), so nothing
//! is ever truncated or switched to scientific notation. The whole envelope
//! round-trips through serde unchanged.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub version: String,
    /// Fully-resolved invocation parameters, sorted by name.
    pub parameters: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    pub payload: Payload,
}

impl OutputEnvelope {
    pub fn new(command: &str, parameters: BTreeMap<String, String>, payload: Payload) -> Self {
        OutputEnvelope {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            parameters,
            warnings: Vec::new(),
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Pell {
        d: String,
        /// `⌊√d⌋` and the periodic partial quotients of `√d`.
        a0: String,
        period: Vec<String>,
        fundamental: PellRow,
        solutions: Vec<PellRow>,
    },
    Family {
        a: String,
        k: String,
        d: String,
        square_d: bool,
        witnesses: Vec<WitnessRow>,
    },
    Squares {
        k: String,
        certificates: Vec<CertificateRow>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        oracle: Option<OracleCheck>,
    },
    Syndetic {
        source: String,
        k: String,
        horizon: String,
        gap_bound: String,
        tries: u64,
        element_count: u64,
        adjacent_pair_count: u64,
        hitting: bool,
        outcomes: Vec<OutcomeRow>,
    },
    Search {
        a: String,
        k: String,
        ell: String,
        m: u32,
        n: u32,
        x_bound: String,
        y_bound: String,
        min_xy: u64,
        obstructed: bool,
        exhausted: bool,
        solutions: Vec<SolutionRow>,
    },
    Survey {
        m: u32,
        n: u32,
        x_bound: String,
        y_bound: String,
        min_xy: u64,
        rows: Vec<SurveyTableRow>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellRow {
    pub index: u64,
    pub u: String,
    pub v: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRow {
    pub index: u64,
    pub x: String,
    pub y: String,
    /// `a·x² + k`, evaluated exactly.
    pub lhs: String,
    /// `(a+k)·y²`, evaluated exactly; always equals `lhs`.
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRow {
    pub a: String,
    pub b: String,
    pub c: String,
    pub t: String,
    pub ell: String,
    /// `b·c·t`, the square root of `a(a+k)`.
    pub root: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub limit: String,
    /// Degenerate `a ≤ limit` found by direct scan.
    pub scan: Vec<String>,
    /// True when the scan equals the enumeration restricted to the limit.
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OutcomeRow {
    Found {
        a: String,
        branch: String,
        base: String,
        ratio_root: String,
        product: String,
    },
    OutOfHorizon {
        a: String,
        product: String,
    },
    HypothesisViolation {
        a: String,
        product: String,
    },
    SquareSkipped {
        a: String,
        root: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRow {
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyTableRow {
    pub a: String,
    pub k: String,
    pub ell: String,
    pub m: u32,
    pub n: u32,
    pub count: u64,
    pub obstructed: bool,
    pub exhausted: bool,
}
