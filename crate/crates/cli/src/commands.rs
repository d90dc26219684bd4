//! Command execution: flags in, envelope out. Worker counts never appear in
//! the envelope; output is a function of the query alone.

use crate::envelope::*;
use crate::{CliError, CliResult};
use num_traits::ToPrimitive;
use pellshift_core::pell::{continued_fraction_sqrt, pell_solutions};
use pellshift_core::power_search::{search_solutions_with_workers, survey, PowerEquationQuery};
use pellshift_core::shift_square::{witness_family, ShiftInstance};
use pellshift_core::square_products::{enumerate_square_products, is_square_product};
use pellshift_core::syndetic::{
    find_adjacent_pairs, find_geometric_pairs, generators, verify_hitting, PairBranch,
    PairOutcome, SyndeticSample,
};
use pellshift_core::{nat, Natural};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

fn dec(n: &Natural) -> String {
    n.to_string()
}

pub fn cmd_pell(d: &Natural, count: u64) -> CliResult<OutputEnvelope> {
    let cf = continued_fraction_sqrt(d)?;
    let solutions: Vec<PellRow> = pell_solutions(d)?
        .take(count as usize)
        .enumerate()
        .map(|(i, s)| PellRow {
            index: i as u64 + 1,
            u: dec(&s.u),
            v: dec(&s.v),
        })
        .collect();
    let fundamental = solutions
        .first()
        .cloned()
        .unwrap_or_else(|| {
            let f = pell_solutions(d).expect("checked nonsquare").fundamental().clone();
            PellRow {
                index: 1,
                u: dec(&f.u),
                v: dec(&f.v),
            }
        });

    let mut parameters = BTreeMap::new();
    parameters.insert("d".into(), dec(d));
    parameters.insert("count".into(), count.to_string());
    Ok(OutputEnvelope::new(
        "pell",
        parameters,
        Payload::Pell {
            d: dec(d),
            a0: dec(&cf.a0),
            period: cf.period.iter().map(dec).collect(),
            fundamental,
            solutions,
        },
    ))
}

pub fn cmd_family(a: &Natural, k: &Natural, count: u64) -> CliResult<OutputEnvelope> {
    let inst = ShiftInstance::new(a.clone(), k.clone());
    if inst.square_root_of_d().is_some() {
        return Err(CliError::Domain(square_instance_message(&inst)));
    }

    let shifted = inst.shifted();
    let witnesses: Vec<WitnessRow> = witness_family(&inst)?
        .take(count as usize)
        .enumerate()
        .map(|(i, w)| {
            let lhs = a * &w.x * &w.x + k;
            let rhs = &shifted * &w.y * &w.y;
            debug_assert_eq!(lhs, rhs);
            WitnessRow {
                index: i as u64 + 1,
                x: dec(&w.x),
                y: dec(&w.y),
                lhs: dec(&lhs),
                rhs: dec(&rhs),
            }
        })
        .collect();

    let mut parameters = BTreeMap::new();
    parameters.insert("a".into(), dec(a));
    parameters.insert("k".into(), dec(k));
    parameters.insert("count".into(), count.to_string());
    Ok(OutputEnvelope::new(
        "family",
        parameters,
        Payload::Family {
            a: dec(a),
            k: dec(k),
            d: dec(inst.d()),
            square_d: false,
            witnesses,
        },
    ))
}

/// Degenerate instances are refused with their certificate spelled out.
fn square_instance_message(inst: &ShiftInstance) -> String {
    let cert = enumerate_square_products(inst.k())
        .into_iter()
        .find(|cert| cert.a == *inst.a())
        .expect("square d implies an enumerated certificate");
    format!(
        "a(a+k) = {} is a perfect square: a = {} = {}^2*{}, t = {} with t^2 - b^2 = {}, \
         and a(a+k) = ({})^2; no witness family exists",
        inst.d(),
        cert.a,
        cert.b,
        cert.c,
        cert.t,
        cert.ell,
        cert.root(),
    )
}

pub fn cmd_squares(k: &Natural, oracle_limit: Option<u64>) -> CliResult<OutputEnvelope> {
    let certificates = enumerate_square_products(k);
    let rows: Vec<CertificateRow> = certificates
        .iter()
        .map(|cert| CertificateRow {
            a: dec(&cert.a),
            b: dec(&cert.b),
            c: dec(&cert.c),
            t: dec(&cert.t),
            ell: dec(&cert.ell),
            root: dec(&cert.root()),
        })
        .collect();

    let oracle = oracle_limit.map(|limit| {
        let scan: Vec<Natural> = (1..=limit)
            .map(nat)
            .filter(|a| is_square_product(a, k).is_some())
            .collect();
        let enumerated_in_range: Vec<Natural> = certificates
            .iter()
            .map(|cert| cert.a.clone())
            .filter(|a| *a <= nat(limit))
            .collect();
        OracleCheck {
            limit: limit.to_string(),
            matched: scan == enumerated_in_range,
            scan: scan.iter().map(dec).collect(),
        }
    });

    let mut parameters = BTreeMap::new();
    parameters.insert("k".into(), dec(k));
    if let Some(limit) = oracle_limit {
        parameters.insert("oracle".into(), limit.to_string());
    }
    Ok(OutputEnvelope::new(
        "squares",
        parameters,
        Payload::Squares {
            k: dec(k),
            certificates: rows,
            oracle,
        },
    ))
}

/// Where a syndetic sample comes from.
#[derive(Debug, Clone)]
pub enum SampleSource {
    File {
        path: PathBuf,
        gap_bound: u64,
        horizon: Option<u64>,
    },
    All {
        horizon: u64,
    },
    Odd {
        horizon: u64,
    },
    AvoidResidue {
        residue: u64,
        modulus: u64,
        horizon: u64,
    },
    Random {
        gap_bound: u64,
        horizon: u64,
        seed: u64,
    },
}

impl SampleSource {
    fn describe(&self) -> String {
        match self {
            SampleSource::File { path, .. } => format!("file:{}", path.display()),
            SampleSource::All { .. } => "gen:all".into(),
            SampleSource::Odd { .. } => "gen:odd".into(),
            SampleSource::AvoidResidue { residue, modulus, .. } => {
                format!("gen:avoid-residue {residue} {modulus}")
            }
            SampleSource::Random { seed, .. } => format!("gen:random seed={seed}"),
        }
    }

    fn build(&self) -> CliResult<SyndeticSample> {
        match self {
            SampleSource::File {
                path,
                gap_bound,
                horizon,
            } => load_sample_file(path, *gap_bound, *horizon),
            SampleSource::All { horizon } => Ok(generators::all_integers(*horizon)),
            SampleSource::Odd { horizon } => Ok(generators::odd_numbers(*horizon)),
            SampleSource::AvoidResidue {
                residue,
                modulus,
                horizon,
            } => Ok(generators::avoid_residue(*residue, *modulus, *horizon)?),
            SampleSource::Random {
                gap_bound,
                horizon,
                seed,
            } => Ok(generators::random_gap_bounded(*gap_bound, *horizon, *seed)),
        }
    }
}

fn load_sample_file(path: &Path, gap_bound: u64, horizon: Option<u64>) -> CliResult<SyndeticSample> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
    let elements = SyndeticSample::parse_elements(&text)?;
    let horizon = match horizon {
        Some(h) => h,
        None => elements
            .last()
            .and_then(|max| max.to_u64())
            .filter(|h| *h <= 10_000_000)
            .ok_or_else(|| {
                CliError::Domain(
                    "set file is empty or its largest element is beyond the supported horizon \
                     (10^7); pass an explicit --horizon"
                        .into(),
                )
            })?,
    };
    let sample = SyndeticSample::new(elements, gap_bound, horizon)?;
    let report = sample.verify();
    if !report.is_valid() {
        let details: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(CliError::Domain(format!(
            "set file {} is not a valid sample: {}",
            path.display(),
            details.join("; ")
        )));
    }
    Ok(sample)
}

pub fn cmd_syndetic(source: &SampleSource, k: &Natural, tries: u64) -> CliResult<OutputEnvelope> {
    let sample = source.build()?;
    if *k >= Natural::from(sample.horizon()) {
        return Err(CliError::Usage(format!(
            "k = {k} must be below the horizon {}",
            sample.horizon()
        )));
    }

    let adjacent = find_adjacent_pairs(&sample, k);
    let hitting = verify_hitting(&sample, k);
    let mut warnings = Vec::new();
    if !hitting {
        warnings.push(format!(
            "the hitting hypothesis fails for k = {k}; outcomes may include hypothesis violations"
        ));
    }
    if adjacent.is_empty() {
        warnings.push(format!("no adjacent pairs {{a, a+{k}}} inside the horizon"));
    }
    let outcomes: Vec<OutcomeRow> = find_geometric_pairs(&sample, k, tries as usize)
        .into_iter()
        .map(|(a, outcome)| outcome_row(&a, outcome))
        .collect();

    let mut parameters = BTreeMap::new();
    parameters.insert("source".into(), source.describe());
    parameters.insert("k".into(), dec(k));
    parameters.insert("horizon".into(), sample.horizon().to_string());
    parameters.insert("gap_bound".into(), sample.gap_bound().to_string());
    parameters.insert("tries".into(), tries.to_string());
    let mut envelope = OutputEnvelope::new(
        "syndetic",
        parameters,
        Payload::Syndetic {
            source: source.describe(),
            k: dec(k),
            horizon: sample.horizon().to_string(),
            gap_bound: sample.gap_bound().to_string(),
            tries,
            element_count: sample.elements().len() as u64,
            adjacent_pair_count: adjacent.len() as u64,
            hitting,
            outcomes,
        },
    );
    envelope.warnings = warnings;
    Ok(envelope)
}

fn outcome_row(a: &Natural, outcome: PairOutcome) -> OutcomeRow {
    match outcome {
        PairOutcome::Found(w) => OutcomeRow::Found {
            a: dec(a),
            branch: match w.branch {
                PairBranch::Direct => "direct".into(),
                PairBranch::Shifted => "shifted".into(),
            },
            base: dec(&w.base),
            ratio_root: dec(&w.ratio_root),
            product: dec(&w.product),
        },
        PairOutcome::OutOfHorizon { product } => OutcomeRow::OutOfHorizon {
            a: dec(a),
            product: dec(&product),
        },
        PairOutcome::HypothesisViolation { product } => OutcomeRow::HypothesisViolation {
            a: dec(a),
            product: dec(&product),
        },
        PairOutcome::SquareSkipped { root } => OutcomeRow::SquareSkipped {
            a: dec(a),
            root: dec(&root),
        },
    }
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_search(
    a: &Natural,
    k: &Natural,
    ell: &Natural,
    m: u32,
    n: u32,
    x_bound: &Natural,
    y_bound: &Natural,
    min_xy: u64,
    workers: usize,
) -> CliResult<OutputEnvelope> {
    let query = PowerEquationQuery::new(
        a.clone(),
        k.clone(),
        ell.clone(),
        m,
        n,
        x_bound.clone(),
        y_bound.clone(),
    )
    .with_min_xy(min_xy);
    let result = search_solutions_with_workers(&query, workers);

    let mut parameters = BTreeMap::new();
    parameters.insert("a".into(), dec(a));
    parameters.insert("k".into(), dec(k));
    parameters.insert("ell".into(), dec(ell));
    parameters.insert("m".into(), m.to_string());
    parameters.insert("n".into(), n.to_string());
    parameters.insert("x_bound".into(), dec(x_bound));
    parameters.insert("y_bound".into(), dec(y_bound));
    parameters.insert("min_xy".into(), min_xy.to_string());
    Ok(OutputEnvelope::new(
        "search",
        parameters,
        Payload::Search {
            a: dec(a),
            k: dec(k),
            ell: dec(ell),
            m,
            n,
            x_bound: dec(x_bound),
            y_bound: dec(y_bound),
            min_xy,
            obstructed: result.obstructed,
            exhausted: result.exhausted,
            solutions: result
                .solutions
                .iter()
                .map(|(x, y)| SolutionRow {
                    x: dec(x),
                    y: dec(y),
                })
                .collect(),
        },
    ))
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_survey(
    a_values: &[Natural],
    k_values: &[Natural],
    ell_values: &[Natural],
    m: u32,
    n: u32,
    x_bound: &Natural,
    y_bound: &Natural,
    min_xy: u64,
    workers: usize,
) -> CliResult<OutputEnvelope> {
    let rows = survey(
        a_values, k_values, ell_values, m, n, x_bound, y_bound, min_xy, workers,
    );

    let describe = |values: &[Natural]| -> String {
        let parts: Vec<String> = values.iter().map(dec).collect();
        parts.join(",")
    };
    let mut parameters = BTreeMap::new();
    parameters.insert("a".into(), describe(a_values));
    parameters.insert("k".into(), describe(k_values));
    parameters.insert("ell".into(), describe(ell_values));
    parameters.insert("m".into(), m.to_string());
    parameters.insert("n".into(), n.to_string());
    parameters.insert("x_bound".into(), dec(x_bound));
    parameters.insert("y_bound".into(), dec(y_bound));
    parameters.insert("min_xy".into(), min_xy.to_string());

    Ok(OutputEnvelope::new(
        "survey",
        parameters,
        Payload::Survey {
            m,
            n,
            x_bound: dec(x_bound),
            y_bound: dec(y_bound),
            min_xy,
            rows: rows
                .into_iter()
                .map(|row| SurveyTableRow {
                    a: dec(&row.a),
                    k: dec(&row.k),
                    ell: dec(&row.ell),
                    m: row.m,
                    n: row.n,
                    count: row.count as u64,
                    obstructed: row.obstructed,
                    exhausted: row.exhausted,
                })
                .collect(),
        },
    ))
}
