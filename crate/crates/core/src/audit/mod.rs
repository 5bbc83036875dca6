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
//! Formula audits: sweep a parameter range, predict with the registry,
//! measure on explicitly constructed graphs, and classify each point.

mod families;
mod ledger;
mod report;
mod table;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::CurlingReport;
use crate::registry::{self, FormulaId, Params, Quantity};

pub use families::{families, family, Family, GraphBuilder};
pub use ledger::{covering_entries, ledger, LedgerEntry};
pub use report::{render, ReportFormat};
pub use table::{render_table, reproduce_table, TableRanges};

/// Default bound on the number of points in one sweep.
pub const DEFAULT_POINT_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    AmbiguousMatch,
    Gap,
    Mismatch,
    OutOfDomain,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::AmbiguousMatch => "ambiguous_match",
            Verdict::Gap => "gap",
            Verdict::Mismatch => "mismatch",
            Verdict::OutOfDomain => "out_of_domain",
        }
    }

    /// Match and ambiguous match agree with ground truth.
    pub fn is_agreement(self) -> bool {
        matches!(self, Verdict::Match | Verdict::AmbiguousMatch)
    }

    /// Compares one predicted set with a computed value.
    pub fn classify(predicted: &BTreeSet<BigInt>, computed: &BigInt) -> Verdict {
        if predicted.is_empty() {
            Verdict::Gap
        } else if !predicted.contains(computed) {
            Verdict::Mismatch
        } else if predicted.len() == 1 {
            Verdict::Match
        } else {
            Verdict::AmbiguousMatch
        }
    }

    /// Overall verdict of a point: the most severe of its quantities.
    fn severity(self) -> u8 {
        match self {
            Verdict::Match => 0,
            Verdict::AmbiguousMatch => 1,
            Verdict::Gap => 2,
            Verdict::Mismatch => 3,
            Verdict::OutOfDomain => 4,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Ground truth measured on a constructed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measured {
    pub cn: usize,
    pub cnc: BigUint,
    pub vartheta: BigUint,
}

impl Measured {
    fn from_report(r: CurlingReport) -> Self {
        Self {
            cn: r.cn,
            cnc: r.cnc,
            vartheta: r.vartheta,
        }
    }

    pub fn get(&self, q: Quantity) -> BigInt {
        match q {
            Quantity::Cn => BigInt::from(self.cn),
            Quantity::Cnc => BigInt::from(self.cnc.clone()),
            Quantity::Vartheta => BigInt::from(self.vartheta.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRecord {
    pub formula_id: FormulaId,
    pub params: Params,
    pub predicted: BTreeMap<Quantity, BTreeSet<BigInt>>,
    pub computed: Measured,
    pub verdicts: BTreeMap<Quantity, Verdict>,
    pub verdict: Verdict,
    pub case_labels: Vec<&'static str>,
    /// Ledger entries covering this point's disagreements.
    pub ledger: Vec<&'static str>,
    /// A disagreement no ledger entry covers.
    pub uncovered: bool,
}

impl AuditRecord {
    pub fn predicted(&self, q: Quantity) -> Option<&BTreeSet<BigInt>> {
        self.predicted.get(&q)
    }

    pub fn verdict_for(&self, q: Quantity) -> Option<Verdict> {
        self.verdicts.get(&q).copied()
    }
}

/// Caterpillar leaf-count vectors to sweep: every vector with spine length
/// in `min_spine..=max_spine` and entries in `0..=max_leaf`, plus `random`
/// longer spines drawn from a seeded generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaterpillarSweep {
    pub min_spine: usize,
    pub max_spine: usize,
    pub max_leaf: usize,
    pub random: usize,
    pub seed: u64,
}

impl Default for CaterpillarSweep {
    fn default() -> Self {
        Self {
            min_spine: 3,
            max_spine: 6,
            max_leaf: 3,
            random: 100,
            seed: 0,
        }
    }
}

impl CaterpillarSweep {
    fn vectors(&self) -> Result<Vec<Vec<i64>>> {
        if self.min_spine == 0 || self.min_spine > self.max_spine {
            return Err(Error::param(
                "caterpillar sweep needs 1 <= min_spine <= max_spine",
            ));
        }
        let mut out = BTreeSet::new();
        let base = self.max_leaf as i64 + 1;
        for len in self.min_spine..=self.max_spine {
            let total = (base as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
            if total > 1 << 24 {
                return Err(Error::CapExceeded {
                    points: usize::MAX,
                    cap: DEFAULT_POINT_CAP,
                });
            }
            for mut code in 0..total as i64 {
                let mut v = vec![0; len];
                for slot in v.iter_mut().rev() {
                    *slot = code % base;
                    code /= base;
                }
                out.insert((len, v));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let end_max = self.max_leaf.max(1) as i64;
        for _ in 0..self.random {
            let len = rng.gen_range(self.max_spine + 1..=self.max_spine + 6);
            let mut v: Vec<i64> = (0..len)
                .map(|_| rng.gen_range(0..=self.max_leaf as i64))
                .collect();
            v[0] = rng.gen_range(1..=end_max);
            v[len - 1] = rng.gen_range(1..=end_max);
            out.insert((len, v));
        }
        Ok(out.into_iter().map(|(_, v)| v).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSpec {
    pub formula_id: FormulaId,
    /// Inclusive integer range per parameter.
    pub ranges: BTreeMap<String, (i64, i64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caterpillar: Option<CaterpillarSweep>,
    pub cap: usize,
}

impl SweepSpec {
    pub fn new(formula_id: FormulaId) -> Self {
        Self {
            formula_id,
            ranges: BTreeMap::new(),
            caterpillar: None,
            cap: DEFAULT_POINT_CAP,
        }
    }

    pub fn range(mut self, name: &str, lo: i64, hi: i64) -> Self {
        self.ranges.insert(name.to_string(), (lo, hi));
        self
    }

    pub fn caterpillar(mut self, sweep: CaterpillarSweep) -> Self {
        self.caterpillar = Some(sweep);
        self
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// The sweep used when none is given: the ranges the acceptance suite
    /// runs for each formula.
    pub fn default_for(id: FormulaId) -> Self {
        let s = Self::new(id);
        match id.number() {
            1 => s.range("n", 1, 10),
            2 => s.range("m", 1, 8).range("n", 1, 8),
            3 => s.range("n", 1, 8),
            4 => s.range("n", 3, 12),
            5 => s.range("n", 3, 12),
            6 => s.range("n", 4, 12),
            7 => s.range("n", 2, 10),
            8 | 9 => s.range("n", 3, 30).range("r", 1, 29),
            10 | 17 => s.range("n", 5, 14).range("r", 1, 7),
            11 | 12 => s.range("m", 3, 10).range("n", 1, 8).range("r", 1, 13),
            13 => s.range("h", 2, 5).range("r", 1, 10),
            14 => s.range("k", 2, 4).range("h", 2, 5).range("r", 1, 10),
            15 | 16 => s.caterpillar(CaterpillarSweep::default()),
            18 => s.range("ic", 1, 8),
            19 => s.range("a", 1, 8).range("b", 1, 8),
            _ => s.range("m", 3, 8).range("n", 1, 6).range("r", 1, 16),
        }
    }

    /// Parameter points in lexicographic order of the formula's parameters.
    pub fn points(&self) -> Result<Vec<Params>> {
        let formula = registry::builtin().get(self.formula_id)?;
        let names = formula.info().params;
        if names == ["leaves"] {
            let sweep = self.caterpillar.clone().unwrap_or_default();
            let vectors = sweep.vectors()?;
            if vectors.len() > self.cap {
                return Err(Error::CapExceeded {
                    points: vectors.len(),
                    cap: self.cap,
                });
            }
            return Ok(vectors
                .into_iter()
                .map(|v| Params::new().with_list("leaves", v))
                .collect());
        }
        let mut axes = Vec::with_capacity(names.len());
        let mut total: usize = 1;
        for name in names {
            let &(lo, hi) = self
                .ranges
                .get(*name)
                .ok_or_else(|| Error::MissingParameter((*name).to_string()))?;
            if lo > hi {
                return Err(Error::param(format!("empty range {lo}..{hi} for `{name}`")));
            }
            let len = usize::try_from(hi - lo + 1).unwrap_or(usize::MAX);
            total = total.saturating_mul(len);
            axes.push((*name, lo, hi));
        }
        if let Some(extra) = self.ranges.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(Error::param(format!(
                "{} has no parameter `{extra}`",
                self.formula_id
            )));
        }
        if total > self.cap {
            return Err(Error::CapExceeded {
                points: total,
                cap: self.cap,
            });
        }
        let mut points = vec![Params::new()];
        for (name, lo, hi) in axes {
            points = points
                .into_iter()
                .flat_map(|p| (lo..=hi).map(move |v| p.clone().with(name, v)))
                .collect();
        }
        Ok(points)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    #[serde(rename = "match")]
    pub matches: usize,
    pub ambiguous_match: usize,
    pub gap: usize,
    pub mismatch: usize,
    pub out_of_domain: usize,
    /// Gaps and mismatches outside the discrepancy ledger.
    pub uncovered: usize,
}

impl Summary {
    pub fn of(records: &[AuditRecord], out_of_domain: usize) -> Self {
        let mut s = Summary {
            out_of_domain,
            ..Default::default()
        };
        for r in records {
            match r.verdict {
                Verdict::Match => s.matches += 1,
                Verdict::AmbiguousMatch => s.ambiguous_match += 1,
                Verdict::Gap => s.gap += 1,
                Verdict::Mismatch => s.mismatch += 1,
                Verdict::OutOfDomain => s.out_of_domain += 1,
            }
            if r.uncovered {
                s.uncovered += 1;
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub formula_id: FormulaId,
    pub spec: SweepSpec,
    pub records: Vec<AuditRecord>,
    pub summary: Summary,
}

impl AuditReport {
    /// Every disagreement is covered by the ledger.
    pub fn passes(&self) -> bool {
        self.summary.uncovered == 0
    }
}

/// Predicts, measures and classifies a single point. `None` when the point
/// is outside the formula's domain.
pub fn audit_point(
    id: FormulaId,
    params: &Params,
    builder: &mut GraphBuilder,
) -> Result<Option<AuditRecord>> {
    let formula = registry::builtin().get(id)?;
    let prediction = registry::builtin().predict(id, params)?;
    if !prediction.is_in_domain() {
        return Ok(None);
    }
    let graph = builder.build(family(formula.info().family)?, params)?;
    let computed = Measured::from_report(CurlingReport::of(&graph)?);

    let mut verdicts = BTreeMap::new();
    let mut ledger_ids: Vec<&'static str> = Vec::new();
    let mut uncovered = false;
    for (&q, set) in &prediction.predicted {
        let v = Verdict::classify(set, &computed.get(q));
        verdicts.insert(q, v);
        if v != Verdict::Match {
            let covering = covering_entries(id, q, params);
            if covering.is_empty() && !v.is_agreement() {
                uncovered = true;
            }
            for entry in covering {
                if !ledger_ids.contains(&entry.id) {
                    ledger_ids.push(entry.id);
                }
            }
        }
    }
    let verdict = verdicts
        .values()
        .copied()
        .max_by_key(|v| v.severity())
        .unwrap_or(Verdict::Match);
    Ok(Some(AuditRecord {
        formula_id: id,
        params: params.clone(),
        predicted: prediction.predicted,
        computed,
        verdicts,
        verdict,
        case_labels: prediction.case_labels,
        ledger: ledger_ids,
        uncovered,
    }))
}

pub fn run_audit(spec: &SweepSpec) -> Result<AuditReport> {
    let points = spec.points()?;
    let mut builder = GraphBuilder::default();
    let mut records = Vec::with_capacity(points.len());
    let mut out_of_domain = 0;
    for params in &points {
        match audit_point(spec.formula_id, params, &mut builder)? {
            Some(record) => records.push(record),
            None => out_of_domain += 1,
        }
    }
    let summary = Summary::of(&records, out_of_domain);
    Ok(AuditReport {
        formula_id: spec.formula_id,
        spec: spec.clone(),
        records,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(n: u8) -> FormulaId {
        FormulaId::new(n).unwrap()
    }

    fn set(vs: &[i64]) -> BTreeSet<BigInt> {
        vs.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn verdict_classification() {
        let c = BigInt::from(2);
        assert_eq!(Verdict::classify(&set(&[2]), &c), Verdict::Match);
        assert_eq!(
            Verdict::classify(&set(&[2, 1]), &c),
            Verdict::AmbiguousMatch
        );
        assert_eq!(Verdict::classify(&set(&[]), &c), Verdict::Gap);
        assert_eq!(Verdict::classify(&set(&[1, 3]), &c), Verdict::Mismatch);
    }

    #[test]
    fn points_are_lexicographic() {
        let spec = SweepSpec::new(id(8)).range("r", 1, 2).range("n", 3, 4);
        let pts: Vec<String> = spec
            .points()
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(pts, ["n=3 r=1", "n=3 r=2", "n=4 r=1", "n=4 r=2"]);
    }

    #[test]
    fn sweep_errors() {
        let spec = SweepSpec::new(id(8)).range("n", 3, 4);
        assert!(matches!(spec.points(), Err(Error::MissingParameter(p)) if p == "r"));
        let spec = SweepSpec::new(id(8))
            .range("n", 3, 400)
            .range("r", 1, 400)
            .cap(1000);
        let err = spec.points().unwrap_err();
        assert!(matches!(
            err,
            Error::CapExceeded {
                points: 159_200,
                cap: 1000
            }
        ));
        assert!(err.to_string().contains("1000"));
        let spec = SweepSpec::new(id(1)).range("n", 5, 4);
        assert!(spec.points().is_err());
        let spec = SweepSpec::new(id(1)).range("n", 1, 4).range("q", 1, 2);
        assert!(spec.points().is_err());
    }

    #[test]
    fn caterpillar_vectors() {
        let sweep = CaterpillarSweep {
            random: 0,
            ..Default::default()
        };
        assert_eq!(sweep.vectors().unwrap().len(), 64 + 256 + 1024 + 4096);
        let seeded = CaterpillarSweep {
            random: 100,
            ..Default::default()
        };
        let a = seeded.vectors().unwrap();
        let b = seeded.vectors().unwrap();
        assert_eq!(a, b);
        assert!(a.len() > 5440);
        assert!(a.iter().all(|v| v.len() >= 3 && v.len() <= 12));
        let other = CaterpillarSweep {
            seed: 7,
            ..seeded.clone()
        };
        assert_ne!(other.vectors().unwrap(), a);
    }

    #[test]
    fn cycle_power_sweep_matches() {
        let report = run_audit(&SweepSpec::new(id(10)).range("n", 5, 10).range("r", 1, 5)).unwrap();
        assert!(report.records.iter().all(|r| r.verdict == Verdict::Match));
        assert!(report.summary.out_of_domain > 0);
        assert!(report.passes());
    }

    #[test]
    fn path_power_points() {
        let mut b = GraphBuilder::default();
        let p = Params::new().with("n", 7).with("r", 3);
        let r = audit_point(id(8), &p, &mut b).unwrap().unwrap();
        assert_eq!(r.verdict, Verdict::AmbiguousMatch);
        assert_eq!(r.computed.cn, 2);
        let p = Params::new().with("n", 6).with("r", 2);
        let r = audit_point(id(8), &p, &mut b).unwrap().unwrap();
        assert_eq!(r.verdict, Verdict::Gap);
        assert!(!r.uncovered);
    }

    #[test]
    fn caterpillar_constant_is_flagged() {
        let mut b = GraphBuilder::default();
        let p = Params::new().with_list("leaves", vec![1, 1, 1, 1]);
        let r = audit_point(id(16), &p, &mut b).unwrap().unwrap();
        assert_eq!(r.verdict, Verdict::Mismatch);
        assert_eq!(r.computed.cn, 4);
        assert_eq!(r.predicted(Quantity::Cn), Some(&set(&[8])));
        assert!(!r.uncovered);
    }
}
