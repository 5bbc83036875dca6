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
//! Caterpillars given by their per-spine-vertex leaf counts.

use std::collections::BTreeMap;

use super::{CaseValue, Formula, FormulaId, FormulaInfo, FormulaRegistry, Params, Quantity};
use crate::error::Result;

pub(super) fn register(r: &mut FormulaRegistry) {
    r.register(Box::new(LeafCountForm));
    r.register(Box::new(SpineDegreeForm));
}

/// Domain shared by both forms: a spine of at least three vertices whose
/// ends carry leaves, so that deleting the leaves leaves exactly the spine.
fn caterpillar_in_domain(p: &Params) -> Result<bool> {
    let leaves = p.list("leaves")?;
    Ok(leaves.len() >= 3
        && leaves.iter().all(|&l| l >= 0)
        && leaves[0] >= 1
        && leaves[leaves.len() - 1] >= 1)
}

/// Spine degrees implied by the leaf counts: `l_i + 1` at the ends and
/// `l_i + 2` inside.
pub(crate) fn spine_degrees(leaves: &[i64]) -> Vec<i64> {
    let last = leaves.len().saturating_sub(1);
    leaves
        .iter()
        .enumerate()
        .map(|(i, &l)| if i == 0 || i == last { l + 1 } else { l + 2 })
        .collect()
}

/// Largest number of spine vertices sharing one degree.
fn eta(spine: &[i64]) -> i64 {
    let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
    for &d in spine {
        *counts.entry(d).or_default() += 1;
    }
    counts.values().copied().max().unwrap_or(0)
}

struct LeafCountForm;

impl Formula for LeafCountForm {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(15),
            family: "caterpillar",
            params: &["leaves"],
            quantities: &[Quantity::Cn],
            domain: "spine length n >= 3, leaf counts >= 0, l_1 >= 1 and l_n >= 1",
            expression: "cn = max{eta, sum_i l_i}",
            claim: "caterpillar cn from leaf counts",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        caterpillar_in_domain(p)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let leaves = p.list("leaves")?;
        let eta = eta(&spine_degrees(leaves));
        let total: i64 = leaves.iter().sum();
        Ok(vec![CaseValue::new(
            "caterpillar",
            Quantity::Cn,
            eta.max(total),
        )])
    }
}

struct SpineDegreeForm;

impl Formula for SpineDegreeForm {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(16),
            family: "caterpillar",
            params: &["leaves"],
            quantities: &[Quantity::Cn],
            domain: "spine length n >= 3, leaf counts >= 0, l_1 >= 1 and l_n >= 1",
            expression: "cn = max{eta, sum_i d(u_i) - 2(n - 3)}",
            claim: "caterpillar cn from spine degrees",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        caterpillar_in_domain(p)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let leaves = p.list("leaves")?;
        let spine = spine_degrees(leaves);
        let n = spine.len() as i64;
        let degree_sum: i64 = spine.iter().sum();
        let value = eta(&spine).max(degree_sum - 2 * (n - 3));
        Ok(vec![CaseValue::new("caterpillar", Quantity::Cn, value)])
    }
}
