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
//! Reproduction of the standard-graph table (formulas F1 to F7).

use std::fmt::Write as _;

use super::report::summary_line;
use super::{run_audit, AuditReport, SweepSpec};
use crate::error::{Error, Result};
use crate::registry::{self, FormulaId, Quantity};

/// One sweep per table row, in row order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRanges {
    pub rows: Vec<SweepSpec>,
}

fn row(n: u8) -> SweepSpec {
    SweepSpec::new(FormulaId::new(n).expect("table rows are F1..F7"))
}

impl TableRanges {
    /// Every row from its smallest admissible size up to `max_n`.
    pub fn up_to(max_n: i64) -> Result<Self> {
        if max_n < 4 {
            return Err(Error::param(
                "table needs --max-n >= 4 so every row has a point",
            ));
        }
        Ok(Self {
            rows: vec![
                row(1).range("n", 1, max_n),
                row(2).range("m", 1, max_n).range("n", 1, max_n),
                row(3).range("n", 1, max_n),
                row(4).range("n", 3, max_n),
                row(5).range("n", 3, max_n),
                row(6).range("n", 4, max_n),
                row(7).range("n", 2, max_n),
            ],
        })
    }

    /// Sizes at which every row is claimed to hold exactly.
    pub fn safe_domain() -> Self {
        Self {
            rows: vec![
                row(1).range("n", 1, 10),
                row(2).range("m", 1, 8).range("n", 1, 8),
                row(3).range("n", 1, 8),
                row(4).range("n", 5, 12),
                row(5).range("n", 3, 12),
                row(6).range("n", 5, 12),
                row(7).range("n", 4, 10),
            ],
        }
    }
}

pub fn reproduce_table(ranges: &TableRanges) -> Result<Vec<AuditReport>> {
    ranges.rows.iter().map(run_audit).collect()
}

/// Markdown with one section per row.
pub fn render_table(reports: &[AuditReport]) -> String {
    let mut out = String::from("# Curling numbers of standard graphs\n");
    for report in reports {
        let Ok(formula) = registry::builtin().get(report.formula_id) else {
            continue;
        };
        let info = formula.info();
        let _ = writeln!(
            out,
            "\n## {} {}: `{}`\n",
            report.formula_id, info.claim, info.expression
        );
        let _ = writeln!(out, "{}\n", summary_line(&report.summary));
        let _ = writeln!(
            out,
            "| params | cn computed | cn predicted | cnc computed | cnc predicted | verdict | ledger |"
        );
        let _ = writeln!(out, "|---|---|---|---|---|---|---|");
        for r in &report.records {
            let predicted = |q| {
                r.predicted(q)
                    .map(|s| {
                        s.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    })
                    .unwrap_or_default()
            };
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} |",
                r.params,
                r.computed.cn,
                predicted(Quantity::Cn),
                r.computed.cnc,
                predicted(Quantity::Cnc),
                r.verdict,
                r.ledger.join(", ")
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audit::Verdict;

    #[test]
    fn cycle_row_matches() {
        let reports = reproduce_table(&TableRanges::up_to(8).unwrap()).unwrap();
        let cycles = &reports[4];
        let c6 = cycles
            .records
            .iter()
            .find(|r| r.params.to_string() == "n=6")
            .unwrap();
        assert_eq!(c6.computed.cn, 6);
        assert_eq!(c6.verdict, Verdict::Match);
        let text = render_table(&reports);
        assert!(text.contains("| n=8 | 8 | 8 | 8 | 8 | match |"), "{text}");
    }

    #[test]
    fn boundary_rows_are_ledgered() {
        let reports = reproduce_table(&TableRanges::up_to(4).unwrap()).unwrap();
        let p3 = &reports[3].records[0];
        assert_eq!(p3.params.to_string(), "n=3");
        assert_eq!(p3.verdict_for(Quantity::Cn), Some(Verdict::Mismatch));
        assert!(!p3.uncovered);
        let l2 = &reports[6].records[0];
        assert_eq!(l2.computed.cn, 4);
        assert_eq!(l2.verdict, Verdict::Mismatch);
        assert!(!l2.uncovered);
    }

    #[test]
    fn tiny_tables_are_rejected() {
        assert!(TableRanges::up_to(3).is_err());
    }
}
