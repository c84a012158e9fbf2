//! One function per subcommand. Each returns the complete output text so
//! callers (and tests) can compare runs byte for byte.

use std::fmt::Write as _;

use thiserror::Error;
use treeirr::extremal::{
    k3_irr_max, k3_irr_max_product_form, k3_irr_min, sweep_hypothesis, HypothesisError,
};
use treeirr::{
    enumerate_realizations, enumerate_realizations_with, parse_sequence, EnumerationError,
    EnumerationOptions, ExtremalResult, IndexKind, InternalDegreeSequence, Realization,
    SequenceError,
};

use crate::args::{Command, Format, IndexChoice};
use crate::claims::{claims_for, compare, published_claims, Comparison, Status};
use crate::report::{
    ComparisonJson, ConjectureJson, EnumerationJson, ExtremalJson, ExtremeJson, FormulaCheckJson,
    PaperTablesJson, RealizationJson, SweepJson, TableJson,
};
use crate::table;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Hypothesis(#[from] HypothesisError),
    #[error("{0}")]
    Unsupported(String),
}

impl CliError {
    /// Variant name printed in diagnostics, e.g. `EntryBelowTwo`.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Sequence(e) => e.code(),
            CliError::Enumeration(e) => e.code(),
            CliError::Hypothesis(HypothesisError::WrongArity(_)) => "WrongArity",
            CliError::Hypothesis(HypothesisError::MaxDegreeTooSmall(_)) => "MaxDegreeTooSmall",
            CliError::Hypothesis(HypothesisError::Enumeration(e)) => e.code(),
            CliError::Unsupported(_) => "UnsupportedFormat",
        }
    }
}

pub fn run(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Validate { seq } => cmd_validate(seq),
        Command::Enumerate { seq, format, max_k } => {
            cmd_enumerate(seq, *format, &EnumerationOptions { max_k: *max_k })
        }
        Command::Extremal {
            seq,
            index,
            format,
            check_paper,
            max_k,
        } => cmd_extremal(
            seq,
            *index,
            *format,
            *check_paper,
            &EnumerationOptions { max_k: *max_k },
        ),
        Command::Conjecture { max_degree, format } => cmd_conjecture(*max_degree, *format),
        Command::PaperTables { format } => cmd_paper_tables(*format),
    }
}

fn dashed(degrees: &[u32]) -> String {
    degrees
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join("-")
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn no_dot(command: &str) -> CliError {
    CliError::Unsupported(format!(
        "dot output is only available for enumerate, not {command}"
    ))
}

pub fn cmd_validate(seq_text: &str) -> Result<String, CliError> {
    let seq = parse_sequence(seq_text)?;
    let c = seq.realization_counts();
    Ok(format!(
        "k={}, n={}, leaves={}\n",
        seq.len(),
        c.total_vertices,
        c.leaf_count
    ))
}

fn dot_block(seq: &InternalDegreeSequence, id: usize, r: &Realization) -> String {
    let t = r.tree();
    let deg = t.degrees();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "// {seq} #{id} code={} {} irr={} sigma={}",
        r.code(),
        r.arrangement(),
        treeirr::albertson_index(t),
        treeirr::sigma_index(t)
    );
    out.push_str("graph {\n");
    for (v, d) in deg.iter().enumerate() {
        let _ = writeln!(out, "  {v} [label=\"{d}\"];");
    }
    for &(u, v) in t.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

pub fn cmd_enumerate(
    seq_text: &str,
    format: Format,
    opts: &EnumerationOptions,
) -> Result<String, CliError> {
    let seq = parse_sequence(seq_text)?;
    let rs = enumerate_realizations_with(&seq, opts)?;
    let counts = seq.realization_counts();
    let rows: Vec<Vec<String>> = rs
        .iter()
        .enumerate()
        .map(|(i, r)| {
            vec![
                i.to_string(),
                r.code().to_hex(),
                treeirr::albertson_index(r.tree()).to_string(),
                treeirr::sigma_index(r.tree()).to_string(),
                r.arrangement().to_string(),
            ]
        })
        .collect();
    let headers = ["id", "canonical_code", "irr", "sigma", "arrangement"];
    Ok(match format {
        Format::Table => {
            let mut out = format!(
                "sequence {seq}: {} realizations, n={}, leaves={}\n",
                rs.len(),
                counts.total_vertices,
                counts.leaf_count
            );
            out.push_str(&table::render(&headers, &rows));
            out
        }
        Format::Csv => table::csv(&headers, &rows),
        Format::Json => to_json(&EnumerationJson {
            sequence: seq.degrees().to_vec(),
            vertex_count: counts.total_vertices,
            leaf_count: counts.leaf_count,
            realizations: rs
                .iter()
                .enumerate()
                .map(|(i, r)| RealizationJson::new(i, r))
                .collect(),
        }),
        Format::Dot => rs
            .iter()
            .enumerate()
            .map(|(i, r)| dot_block(&seq, i, r))
            .collect(),
    })
}

fn comparison_row(c: &Comparison) -> Vec<String> {
    vec![
        c.claim.target.to_string(),
        c.claim.index.to_string(),
        c.claim.value.to_string(),
        c.computed.map_or_else(|| "-".into(), |v| v.to_string()),
        c.status.to_string(),
    ]
}

fn comparison_json(c: &Comparison) -> ComparisonJson {
    ComparisonJson {
        table: c.claim.table.clone(),
        sequence: c.claim.sequence.degrees().to_vec(),
        index: c.claim.index.to_string(),
        target: c.claim.target.to_string(),
        claimed: c.claim.value,
        computed: c.computed,
        status: c.status.to_string(),
        source: c.claim.source.clone(),
    }
}

pub fn cmd_extremal(
    seq_text: &str,
    index: IndexChoice,
    format: Format,
    check_paper: bool,
    opts: &EnumerationOptions,
) -> Result<String, CliError> {
    if format == Format::Dot {
        return Err(no_dot("extremal"));
    }
    let seq = parse_sequence(seq_text)?;
    let rs = enumerate_realizations_with(&seq, opts)?;
    let kinds: &[IndexKind] = match index {
        IndexChoice::Irr => &[IndexKind::Albertson],
        IndexChoice::Sigma => &[IndexKind::Sigma],
        IndexChoice::Both => &IndexKind::ALL,
    };
    let results: Vec<ExtremalResult> = kinds
        .iter()
        .map(|&k| ExtremalResult::over(&rs, k).expect("enumeration is never empty"))
        .collect();
    let comparisons: Option<Vec<Comparison>> = check_paper.then(|| {
        claims_for(&seq)
            .filter(|c| kinds.contains(&c.index))
            .map(|c| compare(c, &rs))
            .collect()
    });

    Ok(match format {
        Format::Table => {
            let mut out = format!("sequence {seq}: {} realizations\n", rs.len());
            for e in &results {
                let _ = writeln!(out, "{}: min {}, max {}", e.kind, e.min_value, e.max_value);
                for (label, ws) in [("min", &e.min_witnesses), ("max", &e.max_witnesses)] {
                    let _ = writeln!(out, "  {label} witnesses ({}):", ws.len());
                    for w in ws {
                        let _ = writeln!(out, "    {}  {}", w.code(), w.arrangement());
                    }
                }
            }
            if let Some(cs) = &comparisons {
                if cs.is_empty() {
                    let _ = writeln!(out, "published values: none recorded for {seq}");
                } else {
                    out.push_str("published values:\n");
                    let rows: Vec<Vec<String>> = cs.iter().map(comparison_row).collect();
                    out.push_str(&table::render(
                        &["target", "index", "claimed", "computed", "status"],
                        &rows,
                    ));
                }
            }
            out
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for e in &results {
                for (label, value, ws) in [
                    ("min", e.min_value, &e.min_witnesses),
                    ("max", e.max_value, &e.max_witnesses),
                ] {
                    for w in ws {
                        rows.push(vec![
                            "witness".into(),
                            e.kind.to_string(),
                            label.into(),
                            value.to_string(),
                            String::new(),
                            String::new(),
                            w.code().to_hex(),
                            w.arrangement().to_string(),
                        ]);
                    }
                }
            }
            for c in comparisons.iter().flatten() {
                rows.push(vec![
                    "claim".into(),
                    c.claim.index.to_string(),
                    c.claim.target.to_string(),
                    c.computed.map_or_else(String::new, |v| v.to_string()),
                    c.claim.value.to_string(),
                    c.status.to_string(),
                    String::new(),
                    String::new(),
                ]);
            }
            table::csv(
                &[
                    "row",
                    "index",
                    "target",
                    "value",
                    "claimed",
                    "status",
                    "canonical_code",
                    "arrangement",
                ],
                &rows,
            )
        }
        Format::Json => {
            let witnesses = |ws: &[Realization]| -> Vec<RealizationJson> {
                ws.iter()
                    .map(|w| {
                        let id = rs
                            .iter()
                            .position(|r| r.code() == w.code())
                            .expect("witness is enumerated");
                        RealizationJson::new(id, w)
                    })
                    .collect()
            };
            to_json(&ExtremalJson {
                sequence: seq.degrees().to_vec(),
                realization_count: rs.len(),
                extremes: results
                    .iter()
                    .map(|e| ExtremeJson {
                        index: e.kind.to_string(),
                        min: e.min_value,
                        max: e.max_value,
                        min_witnesses: witnesses(&e.min_witnesses),
                        max_witnesses: witnesses(&e.max_witnesses),
                    })
                    .collect(),
                comparisons: comparisons.map(|cs| cs.iter().map(comparison_json).collect()),
            })
        }
        Format::Dot => unreachable!(),
    })
}

pub fn cmd_conjecture(max_degree: u32, format: Format) -> Result<String, CliError> {
    if format == Format::Dot {
        return Err(no_dot("conjecture"));
    }
    let sweep = sweep_hypothesis(max_degree)?;
    let n = sweep.reports.len();
    let rows: Vec<Vec<String>> = sweep
        .reports
        .iter()
        .map(|r| {
            vec![
                dashed(r.sequence.degrees()),
                r.predicted_gap.to_string(),
                r.irr_min.to_string(),
                r.irr_max.to_string(),
                r.oracle_gap.to_string(),
                r.verdict.to_string(),
            ]
        })
        .collect();
    let headers = [
        "sequence",
        "predicted_gap",
        "irr_min",
        "irr_max",
        "oracle_gap",
        "verdict",
    ];
    Ok(match format {
        Format::Table => {
            let mut out = format!(
                "gap 2(d2-d3) over 2 <= d3 <= d2 <= d1 <= {max_degree}\n{n} sequence{}, {} confirmed, {} refuted\n",
                if n == 1 { "" } else { "s" },
                sweep.confirmed(),
                sweep.refuted()
            );
            out.push_str(&table::render(&headers, &rows));
            out
        }
        Format::Csv => table::csv(&headers, &rows),
        Format::Json => to_json(&SweepJson {
            max_degree,
            sequences: n,
            confirmed: sweep.confirmed(),
            refuted: sweep.refuted(),
            reports: sweep
                .reports
                .iter()
                .map(|r| ConjectureJson {
                    sequence: r.sequence.degrees().to_vec(),
                    predicted_gap: r.predicted_gap,
                    irr_min: r.irr_min,
                    irr_max: r.irr_max,
                    oracle_gap: r.oracle_gap,
                    verdict: r.verdict.to_string(),
                })
                .collect(),
        }),
        Format::Dot => unreachable!(),
    })
}

/// Every published claim grouped by table, in file order, each recomputed.
pub fn published_comparisons() -> Result<Vec<(String, Vec<Comparison>)>, CliError> {
    let mut tables: Vec<(String, Vec<Comparison>)> = Vec::new();
    let mut cache: Vec<(InternalDegreeSequence, Vec<Realization>)> = Vec::new();
    for claim in published_claims() {
        if !cache.iter().any(|(s, _)| s == &claim.sequence) {
            cache.push((
                claim.sequence.clone(),
                enumerate_realizations(&claim.sequence)?,
            ));
        }
        let rs = &cache
            .iter()
            .find(|(s, _)| s == &claim.sequence)
            .expect("cached")
            .1;
        let cmp = compare(claim, rs);
        match tables.iter_mut().find(|(t, _)| t == &claim.table) {
            Some((_, rows)) => rows.push(cmp),
            None => tables.push((claim.table.clone(), vec![cmp])),
        }
    }
    Ok(tables)
}

/// Closed forms for three internal degrees evaluated at (4,3,2), against
/// enumeration.
pub fn closed_form_checks() -> Result<Vec<(String, u64, u64, Status)>, CliError> {
    let seq = InternalDegreeSequence::new(vec![4, 3, 2])?;
    let irr = treeirr::extremal_search(&seq, IndexKind::Albertson)?;
    let checks = [
        (
            "irr max (published product form)",
            k3_irr_max_product_form(4, 3, 2),
            irr.max_value,
        ),
        (
            "irr max (additive form)",
            k3_irr_max(4, 3, 2),
            irr.max_value,
        ),
        ("irr min", k3_irr_min(4, 3, 2), irr.min_value),
    ];
    Ok(checks
        .into_iter()
        .map(|(name, v, e)| {
            let v = v.expect("(4,3,2) satisfies every formula precondition");
            (
                name.to_string(),
                v,
                e,
                if v == e {
                    Status::Match
                } else {
                    Status::Mismatch
                },
            )
        })
        .collect())
}

const CLOSED_FORM_TITLE: &str = "closed forms at 4-3-2";

pub fn cmd_paper_tables(format: Format) -> Result<String, CliError> {
    if format == Format::Dot {
        return Err(no_dot("paper-tables"));
    }
    let tables = published_comparisons()?;
    let forms = closed_form_checks()?;
    Ok(match format {
        Format::Table => {
            let mut out = String::new();
            for (title, rows) in &tables {
                let _ = writeln!(out, "== {title} ==");
                let body: Vec<Vec<String>> = rows
                    .iter()
                    .map(|c| {
                        let mut row = comparison_row(c);
                        row.push(c.claim.source.clone());
                        row
                    })
                    .collect();
                out.push_str(&table::render(
                    &["target", "index", "claimed", "computed", "status", "source"],
                    &body,
                ));
                out.push('\n');
            }
            let _ = writeln!(out, "== {CLOSED_FORM_TITLE} ==");
            let body: Vec<Vec<String>> = forms
                .iter()
                .map(|(n, v, e, s)| vec![n.clone(), v.to_string(), e.to_string(), s.to_string()])
                .collect();
            out.push_str(&table::render(
                &["formula", "value", "enumeration", "status"],
                &body,
            ));
            out
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for (title, cs) in &tables {
                for c in cs {
                    rows.push(vec![
                        title.clone(),
                        dashed(c.claim.sequence.degrees()),
                        c.claim.index.to_string(),
                        c.claim.target.to_string(),
                        c.claim.value.to_string(),
                        c.computed.map_or_else(String::new, |v| v.to_string()),
                        c.status.to_string(),
                    ]);
                }
            }
            for (name, v, e, s) in &forms {
                rows.push(vec![
                    CLOSED_FORM_TITLE.into(),
                    "4-3-2".into(),
                    "irr".into(),
                    name.clone(),
                    v.to_string(),
                    e.to_string(),
                    s.to_string(),
                ]);
            }
            table::csv(
                &[
                    "table", "sequence", "index", "target", "claimed", "computed", "status",
                ],
                &rows,
            )
        }
        Format::Json => to_json(&PaperTablesJson {
            tables: tables
                .iter()
                .map(|(title, cs)| TableJson {
                    title: title.clone(),
                    rows: cs.iter().map(comparison_json).collect(),
                })
                .collect(),
            closed_forms: forms
                .iter()
                .map(|(n, v, e, s)| FormulaCheckJson {
                    formula: n.clone(),
                    value: *v,
                    enumeration: *e,
                    status: s.to_string(),
                })
                .collect(),
        }),
        Format::Dot => unreachable!(),
    })
}
