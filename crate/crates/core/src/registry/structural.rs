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
//! Formulas over measured structure: the identity-run count and unions.

use num_bigint::BigInt;

use super::{CaseValue, Formula, FormulaId, FormulaInfo, FormulaRegistry, Params, Quantity};
use crate::error::{Error, Result};
use crate::graph::{complete, path};
use crate::invariants::union_rule_cn;

pub(super) fn register(r: &mut FormulaRegistry) {
    r.register(Box::new(CurlingSubsequenceCount));
    r.register(Box::new(UnionRule));
}

/// `vartheta` as a function of `ic`, audited on `P_{2 ic}^{ic}`, whose
/// degrees take exactly `ic` values.
struct CurlingSubsequenceCount;

impl Formula for CurlingSubsequenceCount {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(18),
            family: "vartheta_witness",
            params: &["ic"],
            quantities: &[Quantity::Vartheta],
            domain: "ic >= 1",
            expression: "vartheta = 1 if ic = 1; ic + ic! otherwise",
            claim: "count of curling subsequences",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        Ok(p.int("ic")? >= 1)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let ic = p.int("ic")?;
        if ic == 1 {
            return Ok(vec![CaseValue::new("ic = 1", Quantity::Vartheta, 1)]);
        }
        let factorial: BigInt = (1..=ic).map(BigInt::from).product();
        Ok(vec![CaseValue::new(
            "otherwise",
            Quantity::Vartheta,
            factorial + ic,
        )])
    }
}

/// Union rule on `K_a` and `P_b`.
struct UnionRule;

impl Formula for UnionRule {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(19),
            family: "union_complete_path",
            params: &["a", "b"],
            quantities: &[Quantity::Cn],
            domain: "a >= 1, b >= 1 (components K_a and P_b)",
            expression: "cn(G_1 u ... u G_m) = max cn(G_i) if no degree value is shared; \
                         otherwise the largest summed multiplicity of a shared value",
            claim: "cn of a disjoint union",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        Ok(p.int("a")? >= 1 && p.int("b")? >= 1)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let size = |name: &str| {
            usize::try_from(p.int(name)?)
                .map_err(|_| Error::param(format!("`{name}` out of range")))
        };
        let components = [complete(size("a")?)?, path(size("b")?)?];
        let rule = union_rule_cn(&components)?;
        let label = if rule.shared_degree {
            "similar identity runs"
        } else {
            "no similar identity runs"
        };
        Ok(vec![CaseValue::new(
            label,
            Quantity::Cn,
            rule.rule_value as i64,
        )])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::predict;

    #[test]
    fn vartheta_formula() {
        let v = |ic| {
            predict(FormulaId(18), &Params::new().with("ic", ic))
                .unwrap()
                .get(Quantity::Vartheta)
                .unwrap()
                .iter()
                .next()
                .cloned()
                .unwrap()
        };
        assert_eq!(v(1), BigInt::from(1));
        assert_eq!(v(2), BigInt::from(4));
        assert_eq!(v(3), BigInt::from(9));
        assert_eq!(v(5), BigInt::from(125));
    }

    #[test]
    fn union_rule_cases() {
        let p = predict(FormulaId(19), &Params::new().with("a", 3).with("b", 4)).unwrap();
        assert_eq!(p.case_labels, vec!["similar identity runs"]);
        assert!(p.predicted_cn().unwrap().contains(&BigInt::from(5)));
        let p = predict(FormulaId(19), &Params::new().with("a", 4).with("b", 3)).unwrap();
        assert_eq!(p.case_labels, vec!["no similar identity runs"]);
        assert!(p.predicted_cn().unwrap().contains(&BigInt::from(4)));
    }
}
