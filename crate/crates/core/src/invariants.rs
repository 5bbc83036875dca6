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
//! Graph-level curling invariants.
//!
//! A graph's degrees are arranged into identity runs (maximal blocks of one
//! degree value). The canonical arrangement orders runs by exponent, then by
//! value, so a longest run is the suffix and the curling number of the
//! string is the largest degree multiplicity.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Graph};
use crate::sequence::{self, compound_curling, run_decompose, RunDecomposition};

/// Largest multiset accepted by [`max_arrangement_cn`]; 9! permutations.
pub const MAX_ARRANGEMENT_SIZE: usize = 9;

fn nonempty(g: &Graph) -> Result<()> {
    if g.is_empty() {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

/// `(degree, multiplicity)` ordered by multiplicity, then degree.
fn canonical_runs_of(g: &Graph) -> Vec<(i64, usize)> {
    let mut runs: Vec<(i64, usize)> = g
        .degree_sequence()
        .multiplicities()
        .into_iter()
        .map(|(d, k)| (d as i64, k))
        .collect();
    runs.sort_by_key(|&(d, k)| (k, d));
    runs
}

pub fn canonical_degree_string(g: &Graph) -> Result<Vec<i64>> {
    nonempty(g)?;
    Ok(canonical_runs_of(g)
        .into_iter()
        .flat_map(|(d, k)| std::iter::repeat_n(d, k))
        .collect())
}

pub fn canonical_runs(g: &Graph) -> Result<RunDecomposition> {
    Ok(run_decompose(&canonical_degree_string(g)?))
}

pub fn cn_graph(g: &Graph) -> Result<usize> {
    sequence::curling_number(&canonical_degree_string(g)?)
}

pub fn cnc_graph(g: &Graph) -> Result<BigUint> {
    compound_curling(&canonical_runs(g)?)
}

/// Number of distinct degree values.
pub fn ic_graph(g: &Graph) -> Result<usize> {
    nonempty(g)?;
    Ok(g.degree_sequence().multiplicities().len())
}

/// `1` when `ic = 1`, otherwise `ic + ic!`.
pub fn vartheta_from_ic(ic: usize) -> BigUint {
    if ic == 1 {
        return BigUint::from(1u32);
    }
    let factorial: BigUint = (1..=ic).map(BigUint::from).product();
    factorial + ic
}

pub fn vartheta_graph(g: &Graph) -> Result<BigUint> {
    Ok(vartheta_from_ic(ic_graph(g)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurlingReport {
    pub cn: usize,
    pub cnc: BigUint,
    pub ic: usize,
    pub vartheta: BigUint,
    pub runs: RunDecomposition,
}

impl CurlingReport {
    pub fn of(g: &Graph) -> Result<Self> {
        let runs = canonical_runs(g)?;
        let cn = sequence::curling_number(&runs.expand())?;
        let cnc = compound_curling(&runs)?;
        let ic = runs.len();
        Ok(Self {
            cn,
            cnc,
            ic,
            vartheta: vartheta_from_ic(ic),
            runs,
        })
    }
}

struct RunsAsPairs<'a>(&'a RunDecomposition);

impl Serialize for RunsAsPairs<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for run in self.0.runs() {
            seq.serialize_element(&(run.value, run.exponent))?;
        }
        seq.end()
    }
}

// Arbitrary-precision values go out as decimal strings.
impl Serialize for CurlingReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CurlingReport", 5)?;
        st.serialize_field("cn", &self.cn)?;
        st.serialize_field("cnc", &self.cnc.to_string())?;
        st.serialize_field("ic", &self.ic)?;
        st.serialize_field("vartheta", &self.vartheta.to_string())?;
        st.serialize_field("runs", &RunsAsPairs(&self.runs))?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnionRule {
    /// Value given by the two-case union rule.
    pub rule_value: usize,
    /// `cn` of the disjoint union, computed directly.
    pub computed_value: usize,
    pub agree: bool,
    /// Whether some degree value occurs in two or more components.
    pub shared_degree: bool,
}

/// Applies the union rule with "similar identity runs" read as runs of the
/// same degree value, and checks it against the union graph itself.
pub fn union_rule_cn(components: &[Graph]) -> Result<UnionRule> {
    if components.is_empty() {
        return Err(Error::param("union rule needs at least one component"));
    }
    let mut owners: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut component_cn = Vec::with_capacity(components.len());
    for g in components {
        nonempty(g)?;
        if !g.is_connected() {
            return Err(Error::param("union rule components must be connected"));
        }
        component_cn.push(cn_graph(g)?);
        for (degree, k) in g.degree_sequence().multiplicities() {
            let entry = owners.entry(degree).or_insert((0, 0));
            entry.0 += 1;
            entry.1 += k;
        }
    }
    let shared_degree = owners.values().any(|&(count, _)| count > 1);
    let rule_value = if shared_degree {
        owners.values().map(|&(_, total)| total).max().unwrap_or(0)
    } else {
        component_cn.iter().copied().max().unwrap_or(0)
    };
    let computed_value = cn_graph(&disjoint_union(components)?)?;
    Ok(UnionRule {
        rule_value,
        computed_value,
        agree: rule_value == computed_value,
        shared_degree,
    })
}

/// Rearranges `s` into the next lexicographic permutation; false once the
/// last permutation has been passed.
fn next_permutation(s: &mut [i64]) -> bool {
    let Some(i) = s.windows(2).rposition(|w| w[0] < w[1]) else {
        s.reverse();
        return false;
    };
    let j = s
        .iter()
        .rposition(|&x| x > s[i])
        .expect("pivot has a successor");
    s.swap(i, j);
    s[i + 1..].reverse();
    true
}

/// Maximum curling number over every distinct ordering of `degrees`.
pub fn max_arrangement_cn(degrees: &[i64]) -> Result<usize> {
    if degrees.is_empty() || degrees.len() > MAX_ARRANGEMENT_SIZE {
        return Err(Error::param(format!(
            "arrangement oracle takes 1..={MAX_ARRANGEMENT_SIZE} values, got {}",
            degrees.len()
        )));
    }
    let strategy = sequence::default_strategy();
    let mut current = degrees.to_vec();
    current.sort_unstable();
    let mut best = 1;
    loop {
        best = best.max(strategy.curling_number_unchecked(&current));
        if !next_permutation(&mut current) {
            return Ok(best);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, empty, path, tadpole, wheel};

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(
            canonical_degree_string(&path(5).unwrap()).unwrap(),
            vec![1, 1, 2, 2, 2]
        );
        assert_eq!(
            canonical_degree_string(&complete(4).unwrap()).unwrap(),
            vec![3; 4]
        );
        assert_eq!(
            canonical_degree_string(&complete_bipartite(2, 3).unwrap()).unwrap(),
            vec![3, 3, 2, 2, 2]
        );
        assert!(matches!(
            canonical_degree_string(&empty(0)),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn standard_graph_values() {
        for n in 1..8 {
            assert_eq!(cn_graph(&complete(n).unwrap()).unwrap(), n);
        }
        assert_eq!(cn_graph(&complete_bipartite(2, 5).unwrap()).unwrap(), 5);
        assert_eq!(
            cnc_graph(&complete_bipartite(2, 5).unwrap()).unwrap(),
            big(10)
        );
        assert_eq!(cn_graph(&complete_bipartite(3, 3).unwrap()).unwrap(), 6);
        assert_eq!(cn_graph(&path(7).unwrap()).unwrap(), 5);
        assert_eq!(cnc_graph(&path(7).unwrap()).unwrap(), big(10));
        assert_eq!(cn_graph(&wheel(6).unwrap()).unwrap(), 5);
        let c = cycle(9).unwrap();
        assert_eq!(big(cn_graph(&c).unwrap() as u64), cnc_graph(&c).unwrap());
    }

    #[test]
    fn ic_and_vartheta() {
        assert_eq!(ic_graph(&complete(5).unwrap()).unwrap(), 1);
        assert_eq!(ic_graph(&path(5).unwrap()).unwrap(), 2);
        assert_eq!(ic_graph(&tadpole(3, 2).unwrap()).unwrap(), 3);
        assert_eq!(vartheta_graph(&complete(6).unwrap()).unwrap(), big(1));
        assert_eq!(vartheta_graph(&path(5).unwrap()).unwrap(), big(4));
        assert_eq!(vartheta_graph(&tadpole(3, 2).unwrap()).unwrap(), big(9));
        assert_eq!(
            vartheta_from_ic(25).to_string(),
            "15511210043330985984000025"
        );
    }

    #[test]
    fn single_vertex() {
        let r = CurlingReport::of(&empty(1)).unwrap();
        assert_eq!((r.cn, r.ic), (1, 1));
        assert_eq!((r.cnc.clone(), r.vartheta.clone()), (big(1), big(1)));
        assert_eq!(r.runs.expand(), vec![0]);
    }

    #[test]
    fn report_json_shape() {
        let r = CurlingReport::of(&path(5).unwrap()).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"cn":3,"cnc":"6","ic":2,"vartheta":"4","runs":[[1,2],[2,3]]}"#
        );
    }

    #[test]
    fn union_rule_examples() {
        let k3 = complete(3).unwrap();
        let r = union_rule_cn(&[k3.clone(), path(4).unwrap()]).unwrap();
        assert_eq!(
            (r.rule_value, r.computed_value, r.agree, r.shared_degree),
            (5, 5, true, true)
        );
        let r = union_rule_cn(&[k3.clone(), k3]).unwrap();
        assert_eq!((r.rule_value, r.computed_value, r.agree), (6, 6, true));
        let r = union_rule_cn(&[complete(4).unwrap(), path(3).unwrap()]).unwrap();
        assert_eq!(
            (r.rule_value, r.computed_value, r.agree, r.shared_degree),
            (4, 4, true, false)
        );
        assert!(union_rule_cn(&[]).is_err());
        assert!(union_rule_cn(&[empty(2)]).is_err());
    }

    #[test]
    fn arrangement_oracle_examples() {
        assert_eq!(max_arrangement_cn(&[1, 1, 2, 2, 2]).unwrap(), 3);
        assert_eq!(max_arrangement_cn(&[7]).unwrap(), 1);
        assert_eq!(max_arrangement_cn(&[4, 9, 4, 9]).unwrap(), 2);
        assert!(max_arrangement_cn(&[]).is_err());
        assert!(max_arrangement_cn(&[1; 10]).is_err());
    }

    #[test]
    fn permutations_are_distinct_and_complete() {
        let mut s = vec![1, 1, 2, 2, 2];
        let mut count = 1;
        while next_permutation(&mut s) {
            count += 1;
        }
        assert_eq!(count, 10);
        assert_eq!(s, vec![1, 1, 2, 2, 2]);
    }
}
