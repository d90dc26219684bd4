//! Human-readable rendering of an [`OutputEnvelope`]. The same data as the
//! JSON mode, laid out as aligned tables.

use crate::envelope::{OutcomeRow, OutputEnvelope, Payload};

pub fn render(envelope: &OutputEnvelope) -> String {
    let mut text = render_payload(envelope);
    for warning in &envelope.warnings {
        text.push_str("warning: ");
        text.push_str(warning);
        text.push('\n');
    }
    text
}

fn render_payload(envelope: &OutputEnvelope) -> String {
    match &envelope.payload {
        Payload::Pell {
            d,
            a0,
            period,
            fundamental,
            solutions,
        } => {
            let mut out = String::new();
            line(&mut out, format!("pell: d = {d}"));
            line(
                &mut out,
                format!("sqrt(d) = [{a0}; ({})], period length {}", period.join(", "), period.len()),
            );
            line(
                &mut out,
                format!("fundamental solution: u = {}, v = {}", fundamental.u, fundamental.v),
            );
            let rows = solutions
                .iter()
                .map(|s| vec![s.index.to_string(), s.u.clone(), s.v.clone()])
                .collect();
            table(&mut out, &["#", "u", "v"], rows);
            out
        }
        Payload::Family {
            a,
            k,
            d,
            square_d,
            witnesses,
        } => {
            let mut out = String::new();
            let status = if *square_d { "square" } else { "nonsquare" };
            line(&mut out, format!("family: a = {a}, k = {k}, d = a(a+k) = {d} ({status})"));
            let rows = witnesses
                .iter()
                .map(|w| {
                    vec![
                        w.index.to_string(),
                        w.x.clone(),
                        w.y.clone(),
                        w.lhs.clone(),
                        w.rhs.clone(),
                    ]
                })
                .collect();
            table(&mut out, &["#", "x", "y", "a*x^2+k", "(a+k)*y^2"], rows);
            out
        }
        Payload::Squares {
            k,
            certificates,
            oracle,
        } => {
            let mut out = String::new();
            line(&mut out, format!("squares: k = {k}"));
            if certificates.is_empty() {
                line(&mut out, "no positive a makes a(a+k) a perfect square".to_string());
            } else {
                let rows = certificates
                    .iter()
                    .map(|c| {
                        vec![
                            c.a.clone(),
                            c.b.clone(),
                            c.c.clone(),
                            c.t.clone(),
                            c.ell.clone(),
                            c.root.clone(),
                        ]
                    })
                    .collect();
                table(&mut out, &["a", "b", "c", "t", "ell", "root"], rows);
            }
            if let Some(check) = oracle {
                let verdict = if check.matched { "matched" } else { "MISMATCH" };
                line(
                    &mut out,
                    format!(
                        "oracle scan a <= {}: {} (scan found: {})",
                        check.limit,
                        verdict,
                        if check.scan.is_empty() {
                            "none".to_string()
                        } else {
                            check.scan.join(", ")
                        }
                    ),
                );
            }
            out
        }
        Payload::Syndetic {
            source,
            k,
            horizon,
            gap_bound,
            tries,
            element_count,
            adjacent_pair_count,
            hitting,
            outcomes,
        } => {
            let mut out = String::new();
            line(
                &mut out,
                format!("syndetic: source {source}, k = {k}, horizon = {horizon}, gap bound = {gap_bound}, tries = {tries}"),
            );
            line(
                &mut out,
                format!(
                    "elements: {element_count}, adjacent pairs: {adjacent_pair_count}, hitting hypothesis: {}",
                    if *hitting { "holds" } else { "FAILS" }
                ),
            );
            let rows = outcomes
                .iter()
                .map(|o| match o {
                    OutcomeRow::Found {
                        a,
                        branch,
                        base,
                        ratio_root,
                        product,
                    } => vec![
                        a.clone(),
                        "found".into(),
                        format!("{branch}: {{{base}, {product}}}, ratio root {ratio_root}"),
                    ],
                    OutcomeRow::OutOfHorizon { a, product } => {
                        vec![a.clone(), "out-of-horizon".into(), format!("b = {product}")]
                    }
                    OutcomeRow::HypothesisViolation { a, product } => {
                        vec![a.clone(), "hypothesis-violation".into(), format!("b = {product}")]
                    }
                    OutcomeRow::SquareSkipped { a, root } => {
                        vec![a.clone(), "square-skipped".into(), format!("a(a+k) = {root}^2")]
                    }
                })
                .collect();
            table(&mut out, &["a", "status", "detail"], rows);
            out
        }
        Payload::Search {
            a,
            k,
            ell,
            m,
            n,
            x_bound,
            y_bound,
            min_xy,
            obstructed,
            exhausted,
            solutions,
        } => {
            let mut out = String::new();
            line(
                &mut out,
                format!("search: {a}*x^{m} + {k} = ({a}+{ell})*y^{n}, box x <= {x_bound}, y <= {y_bound}, min x,y = {min_xy}"),
            );
            line(
                &mut out,
                format!(
                    "obstructed: {}, exhausted: {}, solutions: {}",
                    yn(*obstructed),
                    yn(*exhausted),
                    solutions.len()
                ),
            );
            let rows = solutions
                .iter()
                .map(|s| vec![s.x.clone(), s.y.clone()])
                .collect();
            table(&mut out, &["x", "y"], rows);
            out
        }
        Payload::Survey {
            m,
            n,
            x_bound,
            y_bound,
            min_xy,
            rows,
        } => {
            let mut out = String::new();
            line(
                &mut out,
                format!("survey: exponents ({m}, {n}), box x <= {x_bound}, y <= {y_bound}, min x,y = {min_xy}"),
            );
            let body = rows
                .iter()
                .map(|r| {
                    vec![
                        r.a.clone(),
                        r.k.clone(),
                        r.ell.clone(),
                        r.count.to_string(),
                        yn(r.obstructed).into(),
                        yn(r.exhausted).into(),
                    ]
                })
                .collect();
            table(&mut out, &["a", "k", "ell", "count", "obstructed", "exhausted"], body);
            out
        }
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn line(out: &mut String, text: String) {
    out.push_str(&text);
    out.push('\n');
}

fn table(out: &mut String, header: &[&str], rows: Vec<Vec<String>>) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut emit = |cells: Vec<String>| {
        let mut text = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                text.push_str("  ");
            }
            text.push_str(&format!("{cell:>width$}", width = widths[i]));
        }
        line(out, text);
    };
    emit(header.iter().map(|h| h.to_string()).collect());
    for row in rows {
        emit(row);
    }
}
