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
//! Closed-form curling predictions for graph families.
//!
//! Every formula is a [`Formula`] strategy object registered under its id
//! (`F1` to `F20`). A formula evaluates each of its stated cases whose guard
//! holds; when guards overlap the prediction becomes multi-valued, and when
//! none holds inside the domain the prediction is empty. Formulas are encoded
//! exactly as stated and never corrected here: known disagreements with
//! ground truth live in the audit's discrepancy ledger.

mod caterpillar;
mod powers;
mod structural;
mod table;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormulaId(u8);

impl FormulaId {
    pub const COUNT: u8 = 20;

    pub fn new(n: u8) -> Result<Self> {
        if (1..=Self::COUNT).contains(&n) {
            Ok(Self(n))
        } else {
            Err(Error::UnknownFormula(format!("F{n}")))
        }
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = FormulaId> {
        (1..=Self::COUNT).map(FormulaId)
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0)
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.strip_prefix(['F', 'f'])
            .and_then(|n| n.parse::<u8>().ok())
            .and_then(|n| FormulaId::new(n).ok())
            .ok_or_else(|| Error::UnknownFormula(s.to_string()))
    }
}

impl Serialize for FormulaId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    List(Vec<i64>),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::List(vs) => {
                let parts: Vec<String> = vs.iter().map(i64::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// Named parameters of one evaluation point.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Params(BTreeMap<String, ParamValue>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: i64) -> Self {
        self.0.insert(name.to_string(), ParamValue::Int(value));
        self
    }

    pub fn with_list(mut self, name: &str, values: Vec<i64>) -> Self {
        self.0.insert(name.to_string(), ParamValue::List(values));
        self
    }

    pub fn insert(&mut self, name: &str, value: ParamValue) {
        self.0.insert(name.to_string(), value);
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.contains_key(name)
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.0.get(name)
    }

    pub fn int(&self, name: &str) -> Result<i64> {
        match self.0.get(name) {
            Some(ParamValue::Int(v)) => Ok(*v),
            Some(ParamValue::List(_)) => Err(Error::param(format!("`{name}` must be an integer"))),
            None => Err(Error::MissingParameter(name.to_string())),
        }
    }

    pub fn list(&self, name: &str) -> Result<&[i64]> {
        match self.0.get(name) {
            Some(ParamValue::List(v)) => Ok(v),
            Some(ParamValue::Int(_)) => Err(Error::param(format!("`{name}` must be a list"))),
            None => Err(Error::MissingParameter(name.to_string())),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &ParamValue)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Cn,
    Cnc,
    Vartheta,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Cn => "cn",
            Quantity::Cnc => "cnc",
            Quantity::Vartheta => "vartheta",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Applicability {
    InDomain,
    OutOfDomain,
}

/// Static description of a formula.
#[derive(Debug, Clone, Serialize)]
pub struct FormulaInfo {
    pub formula_id: FormulaId,
    /// Ground-truth graph family the parameters describe.
    pub family: &'static str,
    pub params: &'static [&'static str],
    pub quantities: &'static [Quantity],
    pub domain: &'static str,
    pub expression: &'static str,
    pub claim: &'static str,
}

/// One matched case of a formula and the value it assigns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseValue {
    pub label: &'static str,
    pub quantity: Quantity,
    pub value: BigInt,
}

impl CaseValue {
    pub fn new(label: &'static str, quantity: Quantity, value: impl Into<BigInt>) -> Self {
        Self {
            label,
            quantity,
            value: value.into(),
        }
    }
}

/// A closed-form prediction strategy.
pub trait Formula: Send + Sync {
    fn info(&self) -> &FormulaInfo;

    /// Whether the point lies in the formula's stated domain. All declared
    /// parameters are present when this is called.
    fn in_domain(&self, params: &Params) -> Result<bool>;

    /// Every case whose guard holds at an in-domain point.
    fn cases(&self, params: &Params) -> Result<Vec<CaseValue>>;

    fn id(&self) -> FormulaId {
        self.info().formula_id
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaPrediction {
    pub formula_id: FormulaId,
    pub params: Params,
    pub applicability: Applicability,
    /// Keys are the quantities the formula speaks about; a key with an
    /// empty set is an in-domain point no case covers.
    pub predicted: BTreeMap<Quantity, BTreeSet<BigInt>>,
    pub case_labels: Vec<&'static str>,
}

impl FormulaPrediction {
    pub fn get(&self, q: Quantity) -> Option<&BTreeSet<BigInt>> {
        self.predicted.get(&q)
    }

    pub fn predicted_cn(&self) -> Option<&BTreeSet<BigInt>> {
        self.get(Quantity::Cn)
    }

    pub fn predicted_cnc(&self) -> Option<&BTreeSet<BigInt>> {
        self.get(Quantity::Cnc)
    }

    pub fn is_in_domain(&self) -> bool {
        self.applicability == Applicability::InDomain
    }
}

pub struct FormulaRegistry {
    formulas: Vec<Box<dyn Formula>>,
}

impl FormulaRegistry {
    pub fn empty() -> Self {
        Self {
            formulas: Vec::new(),
        }
    }

    pub fn builtin() -> Self {
        let mut r = Self::empty();
        table::register(&mut r);
        powers::register(&mut r);
        caterpillar::register(&mut r);
        structural::register(&mut r);
        r.formulas.sort_by_key(|f| f.id());
        r
    }

    /// Adds a formula, replacing any existing one with the same id.
    pub fn register(&mut self, formula: Box<dyn Formula>) {
        self.formulas.retain(|f| f.id() != formula.id());
        self.formulas.push(formula);
    }

    pub fn get(&self, id: FormulaId) -> Result<&dyn Formula> {
        self.formulas
            .iter()
            .find(|f| f.id() == id)
            .map(|f| f.as_ref())
            .ok_or_else(|| Error::UnknownFormula(id.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Formula> {
        self.formulas.iter().map(|f| f.as_ref())
    }

    pub fn list(&self) -> Vec<FormulaInfo> {
        self.iter().map(|f| f.info().clone()).collect()
    }

    pub fn catalog_json(&self) -> String {
        serde_json::to_string_pretty(&self.list()).expect("catalog serializes")
    }

    pub fn predict(&self, id: FormulaId, params: &Params) -> Result<FormulaPrediction> {
        let formula = self.get(id)?;
        let info = formula.info();
        for name in info.params {
            if !params.contains(name) {
                return Err(Error::MissingParameter((*name).to_string()));
            }
        }
        let mut predicted: BTreeMap<Quantity, BTreeSet<BigInt>> = info
            .quantities
            .iter()
            .map(|&q| (q, BTreeSet::new()))
            .collect();
        if !formula.in_domain(params)? {
            return Ok(FormulaPrediction {
                formula_id: id,
                params: params.clone(),
                applicability: Applicability::OutOfDomain,
                predicted,
                case_labels: Vec::new(),
            });
        }
        let mut case_labels = Vec::new();
        for case in formula.cases(params)? {
            predicted
                .entry(case.quantity)
                .or_default()
                .insert(case.value);
            if !case_labels.contains(&case.label) {
                case_labels.push(case.label);
            }
        }
        Ok(FormulaPrediction {
            formula_id: id,
            params: params.clone(),
            applicability: Applicability::InDomain,
            predicted,
            case_labels,
        })
    }
}

impl Default for FormulaRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

pub fn builtin() -> &'static FormulaRegistry {
    static REGISTRY: OnceLock<FormulaRegistry> = OnceLock::new();
    REGISTRY.get_or_init(FormulaRegistry::builtin)
}

pub fn predict(id: FormulaId, params: &Params) -> Result<FormulaPrediction> {
    builtin().predict(id, params)
}

pub fn list_formulas() -> Vec<FormulaInfo> {
    builtin().list()
}

/// Floor of `n / 2` for the nonnegative values the domains admit.
pub(crate) fn half(n: i64) -> i64 {
    n.div_euclid(2)
}
