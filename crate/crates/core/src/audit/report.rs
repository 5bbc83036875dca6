// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.
//! JSON, CSV and Markdown renderings of an audit report.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use super::{AuditRecord, AuditReport, Summary};
use crate::error::{Error, Result};
use crate::registry::{self, Quantity};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            other => Err(Error::param(format!(
                "unknown report format `{other}`; expected json, csv or md"
            ))),
        }
    }
}

pub fn render(report: &AuditReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut text =
                serde_json::to_string_pretty(&to_json(report)).expect("report serializes");
            text.push('\n');
            text
        }
        ReportFormat::Csv => to_csv(report),
        ReportFormat::Markdown => to_markdown(report),
    }
}

/// `cn` values as JSON numbers, arbitrary-precision quantities as strings.
fn value_json(q: Quantity, v: &BigInt) -> Value {
    match (q, v.to_i64()) {
        (Quantity::Cn, Some(i)) => json!(i),
        _ => json!(v.to_string()),
    }
}

fn set_json(q: Quantity, set: Option<&BTreeSet<BigInt>>) -> Value {
    match set {
        Some(values) => Value::Array(values.iter().map(|v| value_json(q, v)).collect()),
        None => Value::Null,
    }
}

fn record_json(r: &AuditRecord) -> Value {
    let verdicts: Map<String, Value> = r
        .verdicts
        .iter()
        .map(|(q, v)| (q.to_string(), json!(v.as_str())))
        .collect();
    json!({
        "params": r.params,
        "predicted_cn": set_json(Quantity::Cn, r.predicted(Quantity::Cn)),
        "predicted_cnc": set_json(Quantity::Cnc, r.predicted(Quantity::Cnc)),
        "predicted_vartheta": set_json(Quantity::Vartheta, r.predicted(Quantity::Vartheta)),
        "computed_cn": r.computed.cn,
        "computed_cnc": r.computed.cnc.to_string(),
        "computed_vartheta": r.computed.vartheta.to_string(),
        "verdict": r.verdict.as_str(),
        "verdicts": verdicts,
        "case_labels": r.case_labels,
        "ledger": r.ledger,
    })
}

pub(crate) fn to_json(report: &AuditReport) -> Value {
    json!({
        "formula_id": report.formula_id,
        "spec": report.spec,
        "summary": report.summary,
        "records": report.records.iter().map(record_json).collect::<Vec<_>>(),
    })
}

fn set_text(set: Option<&BTreeSet<BigInt>>) -> String {
    match set {
        None => "-".to_string(),
        Some(values) => {
            let parts: Vec<String> = values.iter().map(BigInt::to_string).collect();
            format!("{{{}}}", parts.join(", "))
        }
    }
}

const CSV_HEADER: [&str; 10] = [
    "formula_id",
    "params",
    "predicted_cn",
    "predicted_cnc",
    "predicted_vartheta",
    "computed_cn",
    "computed_cnc",
    "computed_vartheta",
    "verdict",
    "ledger",
];

fn to_csv(report: &AuditReport) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in &report.records {
        w.write_record([
            r.formula_id.to_string(),
            r.params.to_string(),
            set_text(r.predicted(Quantity::Cn)),
            set_text(r.predicted(Quantity::Cnc)),
            set_text(r.predicted(Quantity::Vartheta)),
            r.computed.cn.to_string(),
            r.computed.cnc.to_string(),
            r.computed.vartheta.to_string(),
            r.verdict.to_string(),
            r.ledger.join(" "),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
}

pub(crate) fn summary_line(s: &Summary) -> String {
    let points = s.matches + s.mismatch + s.ambiguous_match + s.gap + s.out_of_domain;
    format!(
        "{points} point{}: {} match, {} mismatch, {} ambiguous_match, {} gap, {} out_of_domain; {} outside the discrepancy ledger",
        if points == 1 { "" } else { "s" },
        s.matches,
        s.mismatch,
        s.ambiguous_match,
        s.gap,
        s.out_of_domain,
        s.uncovered,
    )
}

fn to_markdown(report: &AuditReport) -> String {
    let info = registry::builtin()
        .get(report.formula_id)
        .map(|f| f.info().clone());
    let mut out = String::new();
    match &info {
        Ok(info) => {
            let _ = writeln!(out, "# Audit {}: {}\n", report.formula_id, info.family);
            let _ = writeln!(out, "- formula: `{}`", info.expression);
            let _ = writeln!(out, "- domain: {}", info.domain);
        }
        Err(_) => {
            let _ = writeln!(out, "# Audit {}\n", report.formula_id);
        }
    }
    let ranges: Vec<String> = report
        .spec
        .ranges
        .iter()
        .map(|(k, (lo, hi))| format!("{k}={lo}..{hi}"))
        .collect();
    if !ranges.is_empty() {
        let _ = writeln!(
            out,
            "- sweep: {} (cap {})",
            ranges.join(", "),
            report.spec.cap
        );
    }
    if let Some(c) = &report.spec.caterpillar {
        let _ = writeln!(
            out,
            "- sweep: spines {}..{} with leaf counts 0..{}, plus {} random longer spines (seed {}) (cap {})",
            c.min_spine, c.max_spine, c.max_leaf, c.random, c.seed, report.spec.cap
        );
    }
    let _ = writeln!(out, "\n**{}**\n", summary_line(&report.summary));

    let quantities: Vec<Quantity> = info
        .as_ref()
        .map(|i| i.quantities.to_vec())
        .unwrap_or_else(|_| vec![Quantity::Cn, Quantity::Cnc]);
    let mut header = vec!["params".to_string()];
    for q in &quantities {
        header.push(format!("predicted {q}"));
        header.push(format!("computed {q}"));
    }
    header.extend(["verdict".to_string(), "ledger".to_string()]);
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
    for r in &report.records {
        let mut cells = vec![r.params.to_string()];
        for &q in &quantities {
            cells.push(set_text(r.predicted(q)));
            cells.push(r.computed.get(q).to_string());
        }
        cells.push(r.verdict.to_string());
        cells.push(r.ledger.join(", "));
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out
}
