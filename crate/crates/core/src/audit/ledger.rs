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
//! Expected-discrepancy ledger.
//!
//! Each entry names a formula, optionally one quantity, and a parameter
//! predicate. A gap or mismatch is covered when some entry applies to it.
//! Predicates may over-approximate the disagreeing region; the audit only
//! requires that no disagreement falls outside every entry.

use crate::registry::{FormulaId, ParamValue, Params, Quantity};

pub struct LedgerEntry {
    pub id: &'static str,
    pub formula: u8,
    /// `None` covers every quantity the formula predicts.
    pub quantity: Option<Quantity>,
    pub description: &'static str,
    pub applies: fn(&Params) -> bool,
}

fn int(params: &Params, name: &str) -> i64 {
    match params.get(name) {
        Some(ParamValue::Int(v)) => *v,
        _ => 0,
    }
}

fn always(_: &Params) -> bool {
    true
}

fn below_half_minus_one(p: &Params) -> bool {
    int(p, "r") == int(p, "n") / 2 - 1
}

fn tree_power_complete(p: &Params) -> bool {
    int(p, "r") == 2 * int(p, "h")
}

fn tree_levels_merge(p: &Params) -> bool {
    let (h, r) = (int(p, "h"), int(p, "r"));
    r > h || h > 2 * r
}

static LEDGER: &[LedgerEntry] = &[
    LedgerEntry {
        id: "balanced-bipartite-cnc",
        formula: 3,
        quantity: Some(Quantity::Cnc),
        description: "K_{n,n} is regular, so its degree string is one run and cnc = cn = 2n; the printed n^2 agrees only at n = 2",
        applies: |p| int(p, "n") != 2,
    },
    LedgerEntry {
        id: "path-small",
        formula: 4,
        quantity: None,
        description: "short paths: P_3 has degrees {1,1,2}, so cn = 2 while n - 2 = 1",
        applies: |p| matches!(int(p, "n"), 3 | 4),
    },
    LedgerEntry {
        id: "wheel-k4",
        formula: 6,
        quantity: None,
        description: "W_4 is K_4, which is 3-regular on 4 vertices, so cn = cnc = 4",
        applies: |p| int(p, "n") == 4,
    },
    LedgerEntry {
        id: "ladder-small",
        formula: 7,
        quantity: None,
        description: "L_2 is C_4 and L_3 has degree string (2)^4 (3)^2; the printed 2(n-2) is 0 and 2",
        applies: |p| matches!(int(p, "n"), 2 | 3),
    },
    LedgerEntry {
        id: "path-power-case-gap",
        formula: 8,
        quantity: Some(Quantity::Cn),
        description: "r = floor(n/2) - 1 falls between the case conditions, so no value is predicted",
        applies: below_half_minus_one,
    },
    LedgerEntry {
        id: "path-power-case-overlap",
        formula: 8,
        quantity: Some(Quantity::Cn),
        description: "r = floor(n/2) satisfies two case conditions, which predict different values for odd n",
        applies: |p| int(p, "r") == int(p, "n") / 2,
    },
    LedgerEntry {
        id: "path-power-cnc-case-gap",
        formula: 9,
        quantity: Some(Quantity::Cnc),
        description: "r = floor(n/2) - 1 falls between the case conditions, so no value is predicted",
        applies: below_half_minus_one,
    },
    LedgerEntry {
        id: "path-power-cnc-complete",
        formula: 9,
        quantity: Some(Quantity::Cnc),
        description: "r = n is covered by no case; the power is complete there",
        applies: |p| int(p, "r") == int(p, "n"),
    },
    LedgerEntry {
        id: "path-power-cnc-third-case",
        formula: 9,
        quantity: Some(Quantity::Cnc),
        description: "for floor(n/2) < r <= n - 1 the printed 2^(r-1)(r+1) - n does not follow the degree string",
        applies: |p| {
            let (n, r) = (int(p, "n"), int(p, "r"));
            n / 2 < r && r < n
        },
    },
    LedgerEntry {
        id: "tadpole-power-short",
        formula: 11,
        quantity: Some(Quantity::Cn),
        description: "the count assumes the r-th power leaves a run of degree-2r vertices on both cycle and tail; it fails once m < 2r + 1 or n < 2r",
        applies: |p| {
            let (m, n, r) = (int(p, "m"), int(p, "n"), int(p, "r"));
            m < 2 * r + 1 || n < 2 * r
        },
    },
    LedgerEntry {
        id: "tadpole-power-cnc-structure",
        formula: 12,
        quantity: Some(Quantity::Cnc),
        description: "the assumed degree string (3)^(r-1) (1)^r (2r)^(...) does not match the power; at r = 1 the factor r - 1 forces 0",
        applies: always,
    },
    LedgerEntry {
        id: "binary-tree-power-complete",
        formula: 13,
        quantity: None,
        description: "at r = 2h the power is complete, so cn = cnc = 2^(h+1) - 1",
        applies: tree_power_complete,
    },
    LedgerEntry {
        id: "binary-tree-power-levels",
        formula: 13,
        quantity: Some(Quantity::Cnc),
        description: "levels share a degree once r > h or h > 2r, merging runs the product over levels counts separately",
        applies: tree_levels_merge,
    },
    LedgerEntry {
        id: "kary-tree-power-complete",
        formula: 14,
        quantity: None,
        description: "at r = 2h the power is complete, so cn = cnc = (k^(h+1) - 1)/(k - 1)",
        applies: tree_power_complete,
    },
    LedgerEntry {
        id: "kary-tree-power-levels",
        formula: 14,
        quantity: Some(Quantity::Cnc),
        description: "levels share a degree once r > h or h > 2r, merging runs the product over levels counts separately",
        applies: tree_levels_merge,
    },
    LedgerEntry {
        id: "caterpillar-constant",
        formula: 16,
        quantity: Some(Quantity::Cn),
        description: "the correction -2(n-3) overshoots the leaf count Σd(u_i) - 2(n-1) by 4 on every caterpillar",
        applies: always,
    },
];

pub fn ledger() -> &'static [LedgerEntry] {
    LEDGER
}

pub fn covering_entries(id: FormulaId, q: Quantity, params: &Params) -> Vec<&'static LedgerEntry> {
    LEDGER
        .iter()
        .filter(|e| e.formula == id.number())
        .filter(|e| e.quantity.is_none_or(|eq| eq == q))
        .filter(|e| (e.applies)(params))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = ledger().iter().map(|e| e.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), ledger().len());
    }

    #[test]
    fn quantity_filter() {
        let f3 = FormulaId::new(3).unwrap();
        let p = Params::new().with("n", 4);
        assert_eq!(covering_entries(f3, Quantity::Cnc, &p).len(), 1);
        assert!(covering_entries(f3, Quantity::Cn, &p).is_empty());
        assert!(covering_entries(f3, Quantity::Cnc, &Params::new().with("n", 2)).is_empty());
    }
}
