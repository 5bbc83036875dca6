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
//! The standard-graph table and the regular-graph identity.

use num_bigint::BigInt;

use super::{half, CaseValue, Formula, FormulaId, FormulaInfo, FormulaRegistry, Params, Quantity};
use crate::error::Result;

const BOTH: &[Quantity] = &[Quantity::Cn, Quantity::Cnc];

pub(super) fn register(r: &mut FormulaRegistry) {
    r.register(Box::new(CompleteGraph));
    r.register(Box::new(CompleteBipartite));
    r.register(Box::new(BalancedBipartite));
    r.register(Box::new(PathGraph));
    r.register(Box::new(CycleGraph));
    r.register(Box::new(WheelGraph));
    r.register(Box::new(LadderGraph));
    r.register(Box::new(RegularIdentity));
}

fn pair(label: &'static str, cn: i64, cnc: i64) -> Vec<CaseValue> {
    vec![
        CaseValue::new(label, Quantity::Cn, cn),
        CaseValue::new(label, Quantity::Cnc, cnc),
    ]
}

pub(super) struct CompleteGraph;

impl Formula for CompleteGraph {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(1),
            family: "complete",
            params: &["n"],
            quantities: BOTH,
            domain: "n >= 1",
            expression: "cn = n; cnc = n",
            claim: "standard-graph table, row 1 (K_n)",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        Ok(p.int("n")? >= 1)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let n = p.int("n")?;
        Ok(pair("K_n", n, n))
    }
}

struct CompleteBipartite;

impl Formula for CompleteBipartite {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(2),
            family: "complete_bipartite",
            params: &["m", "n"],
            quantities: BOTH,
            domain: "m, n >= 1 and m != n",
            expression: "cn = max{m, n}; cnc = mn",
            claim: "standard-graph table, row 2 (K_{m,n}, m != n)",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        let (m, n) = (p.int("m")?, p.int("n")?);
        Ok(m >= 1 && n >= 1 && m != n)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let (m, n) = (p.int("m")?, p.int("n")?);
        Ok(pair("K_{m,n}", m.max(n), m * n))
    }
}

struct BalancedBipartite;

impl Formula for BalancedBipartite {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(3),
            family: "balanced_bipartite",
            params: &["n"],
            quantities: BOTH,
            domain: "n >= 1",
            expression: "cn = 2n; cnc = n^2",
            claim: "standard-graph table, row 3 (K_{n,n})",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        Ok(p.int("n")? >= 1)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let n = p.int("n")?;
        Ok(pair("K_{n,n}", 2 * n, n * n))
    }
}

struct PathGraph;

impl Formula for PathGraph {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(4),
            family: "path",
            params: &["n"],
            quantities: BOTH,
            domain: "n >= 3",
            expression: "cn = n - 2; cnc = 2(n - 2)",
            claim: "standard-graph table, row 4 (P_n)",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        Ok(p.int("n")? >= 3)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let n = p.int("n")?;
        Ok(pair("P_n", n - 2, 2 * (n - 2)))
    }
}

struct CycleGraph;

impl Formula for CycleGraph {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(5),
            family: "cycle",
            params: &["n"],
            quantities: BOTH,
            domain: "n >= 3",
            expression: "cn = n; cnc = n",
            claim: "standard-graph table, row 5 (C_n)",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        Ok(p.int("n")? >= 3)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let n = p.int("n")?;
        Ok(pair("C_n", n, n))
    }
}

struct WheelGraph;

impl Formula for WheelGraph {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(6),
            family: "wheel",
            params: &["n"],
            quantities: BOTH,
            domain: "n >= 4",
            expression: "cn = n - 1; cnc = n - 1",
            claim: "standard-graph table, row 6 (W_n = C_{n-1} + K_1)",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        Ok(p.int("n")? >= 4)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let n = p.int("n")?;
        Ok(pair("W_n", n - 1, n - 1))
    }
}

struct LadderGraph;

impl Formula for LadderGraph {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(7),
            family: "ladder",
            params: &["n"],
            quantities: BOTH,
            domain: "n >= 2",
            expression: "cn = 2(n - 2); cnc = 8(n - 2)",
            claim: "standard-graph table, row 7 (L_n = P_n x P_2)",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        Ok(p.int("n")? >= 2)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let n = p.int("n")?;
        Ok(pair("L_n", 2 * (n - 2), 8 * (n - 2)))
    }
}

/// Regular graphs have `cnc = cn`; audited on cycle powers, which are
/// regular on `n` vertices, so both equal `n`.
struct RegularIdentity;

impl Formula for RegularIdentity {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(17),
            family: "cycle_power",
            params: &["n", "r"],
            quantities: BOTH,
            domain: "n >= 3, 1 <= r <= floor(n/2) (C_n^r is regular)",
            expression: "cnc = cn = |V| for a regular graph",
            claim: "regular graphs have cnc = cn",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        let (n, r) = (p.int("n")?, p.int("r")?);
        Ok(n >= 3 && 1 <= r && r <= half(n))
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let n = BigInt::from(p.int("n")?);
        Ok(vec![
            CaseValue::new("regular", Quantity::Cn, n.clone()),
            CaseValue::new("regular", Quantity::Cnc, n),
        ])
    }
}
