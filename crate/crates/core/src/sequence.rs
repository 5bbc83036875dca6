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
//! Curling numbers of finite integer sequences.
//!
//! A nonempty sequence can always be written as `X Y^k` with `Y` nonempty;
//! the largest such `k` is its curling number. Two interchangeable
//! algorithms are provided behind [`CurlingStrategy`]: a naive suffix
//! enumeration used as the reference, and a linear Z-function scan of the
//! reversed sequence used everywhere else.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An algorithm computing the curling number of a nonempty sequence.
pub trait CurlingStrategy: Send + Sync {
    fn name(&self) -> &'static str;

    /// Curling number of `s`. Callers guarantee `s` is nonempty.
    fn curling_number_unchecked(&self, s: &[i64]) -> usize;

    fn curling_number(&self, s: &[i64]) -> Result<usize> {
        if s.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(self.curling_number_unchecked(s))
    }
}

/// Tries every block length and counts how many copies of the final block
/// end the sequence. Quadratic comparisons per block length.
#[derive(Debug, Clone, Copy, Default)]
pub struct NaiveSuffixScan;

impl CurlingStrategy for NaiveSuffixScan {
    fn name(&self) -> &'static str {
        "naive"
    }

    fn curling_number_unchecked(&self, s: &[i64]) -> usize {
        let len = s.len();
        let mut best = 1;
        for p in 1..=len {
            let block = &s[len - p..];
            let mut copies = 1;
            while (copies + 1) * p <= len {
                let end = len - copies * p;
                if &s[end - p..end] != block {
                    break;
                }
                copies += 1;
            }
            best = best.max(copies);
        }
        best
    }
}

/// Z-function over the reversed sequence: `z[p]` is the length over which
/// the reversed sequence agrees with itself shifted by `p`, so the final
/// block of length `p` repeats `(p + z[p]) / p` times.
#[derive(Debug, Clone, Copy, Default)]
pub struct ReversedZScan;

impl CurlingStrategy for ReversedZScan {
    fn name(&self) -> &'static str {
        "zscan"
    }

    fn curling_number_unchecked(&self, s: &[i64]) -> usize {
        let reversed: Vec<i64> = s.iter().rev().copied().collect();
        let z = z_function(&reversed);
        z.iter()
            .enumerate()
            .skip(1)
            .map(|(p, &len)| (p + len) / p)
            .fold(1, usize::max)
    }
}

static NAIVE: NaiveSuffixScan = NaiveSuffixScan;
static ZSCAN: ReversedZScan = ReversedZScan;
static STRATEGIES: [&dyn CurlingStrategy; 2] = [&ZSCAN, &NAIVE];

/// All registered strategies; the first one is the default.
pub fn strategies() -> &'static [&'static dyn CurlingStrategy] {
    &STRATEGIES
}

pub fn strategy(name: &str) -> Result<&'static dyn CurlingStrategy> {
    STRATEGIES
        .iter()
        .copied()
        .find(|s| s.name() == name)
        .ok_or_else(|| Error::UnknownStrategy(name.to_string()))
}

pub fn default_strategy() -> &'static dyn CurlingStrategy {
    STRATEGIES[0]
}

/// Z-function: `z[i]` is the length of the longest common prefix of `s`
/// and `s[i..]`, with `z[0] = s.len()`.
pub fn z_function<T: PartialEq>(s: &[T]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        if i < r {
            z[i] = (r - i).min(z[i - l]);
        }
        while i + z[i] < n && s[z[i]] == s[i + z[i]] {
            z[i] += 1;
        }
        if i + z[i] > r {
            l = i;
            r = i + z[i];
        }
    }
    z
}

/// Curling number with the default strategy.
pub fn curling_number(s: &[i64]) -> Result<usize> {
    default_strategy().curling_number(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Run {
    pub value: i64,
    pub exponent: usize,
}

/// A sequence written as maximal runs of equal values.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RunDecomposition {
    runs: Vec<Run>,
}

impl RunDecomposition {
    /// Builds a decomposition from explicit runs, merging adjacent runs with
    /// equal values and rejecting zero exponents.
    pub fn from_runs(runs: impl IntoIterator<Item = (i64, usize)>) -> Result<Self> {
        let mut out: Vec<Run> = Vec::new();
        for (value, exponent) in runs {
            if exponent == 0 {
                return Err(Error::param("run exponent must be positive"));
            }
            match out.last_mut() {
                Some(last) if last.value == value => last.exponent += exponent,
                _ => out.push(Run { value, exponent }),
            }
        }
        Ok(Self { runs: out })
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn max_exponent(&self) -> Option<usize> {
        self.runs.iter().map(|r| r.exponent).max()
    }

    pub fn expand(&self) -> Vec<i64> {
        self.runs
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value, r.exponent))
            .collect()
    }
}

impl fmt::Display for RunDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, run) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({})^{}", run.value, run.exponent)?;
        }
        Ok(())
    }
}

pub fn run_decompose(s: &[i64]) -> RunDecomposition {
    let mut runs: Vec<Run> = Vec::new();
    for &value in s {
        match runs.last_mut() {
            Some(last) if last.value == value => last.exponent += 1,
            _ => runs.push(Run { value, exponent: 1 }),
        }
    }
    RunDecomposition { runs }
}

/// Product of the run exponents.
pub fn compound_curling(d: &RunDecomposition) -> Result<BigUint> {
    if d.is_empty() {
        return Err(Error::EmptyDecomposition);
    }
    Ok(d.runs.iter().map(|r| BigUint::from(r.exponent)).product())
}

/// Appends the current curling number `steps` times.
pub fn extend_by_curling(s: &[i64], steps: usize) -> Result<Vec<i64>> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let strategy = default_strategy();
    let mut out = Vec::with_capacity(s.len() + steps);
    out.extend_from_slice(s);
    for _ in 0..steps {
        let k = strategy.curling_number_unchecked(&out);
        out.push(k as i64);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome", content = "step")]
pub enum StepsOutcome {
    /// A 1 was appended at this step (0 when the start already holds a 1).
    Reached(usize),
    Exhausted,
}

pub fn steps_until_one(s: &[i64], cap: usize) -> Result<StepsOutcome> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    if s.contains(&1) {
        return Ok(StepsOutcome::Reached(0));
    }
    let strategy = default_strategy();
    let mut seq = s.to_vec();
    for step in 1..=cap {
        let k = strategy.curling_number_unchecked(&seq);
        if k == 1 {
            return Ok(StepsOutcome::Reached(step));
        }
        seq.push(k as i64);
    }
    Ok(StepsOutcome::Exhausted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(s: &[i64]) -> usize {
        let a = NaiveSuffixScan.curling_number(s).unwrap();
        let b = ReversedZScan.curling_number(s).unwrap();
        assert_eq!(a, b, "strategies disagree on {s:?}");
        a
    }

    #[test]
    fn curling_number_examples() {
        assert_eq!(both(&[2, 2, 2]), 3);
        assert_eq!(both(&[3]), 1);
        assert_eq!(both(&[1, 2, 1, 2]), 2);
        assert_eq!(both(&[4, 4, 4, 4, 4]), 5);
        assert_eq!(both(&[1, 2, 3, 2, 3, 2, 3]), 3);
        assert_eq!(both(&[-1, 0, -1, 0]), 2);
    }

    #[test]
    fn empty_sequence_is_an_error() {
        for s in strategies() {
            assert!(matches!(s.curling_number(&[]), Err(Error::EmptySequence)));
        }
        assert!(matches!(
            extend_by_curling(&[], 3),
            Err(Error::EmptySequence)
        ));
        assert!(matches!(steps_until_one(&[], 3), Err(Error::EmptySequence)));
    }

    #[test]
    fn strategy_lookup() {
        assert_eq!(strategy("naive").unwrap().name(), "naive");
        assert_eq!(strategy("zscan").unwrap().name(), "zscan");
        assert_eq!(default_strategy().name(), "zscan");
        assert!(matches!(strategy("kmp"), Err(Error::UnknownStrategy(_))));
    }

    #[test]
    fn z_function_basics() {
        assert_eq!(z_function(b"aabxaab"), vec![7, 1, 0, 0, 3, 1, 0]);
        assert!(z_function::<u8>(&[]).is_empty());
    }

    #[test]
    fn run_decompose_examples() {
        let d = run_decompose(&[1, 1, 2, 2, 2]);
        assert_eq!(d, RunDecomposition::from_runs([(1, 2), (2, 3)]).unwrap());
        assert!(run_decompose(&[]).is_empty());
        let d = run_decompose(&[5, 5, 3, 5]);
        assert_eq!(
            d.runs(),
            &[
                Run {
                    value: 5,
                    exponent: 2
                },
                Run {
                    value: 3,
                    exponent: 1
                },
                Run {
                    value: 5,
                    exponent: 1
                }
            ]
        );
        assert_eq!(d.to_string(), "(5)^2 (3)^1 (5)^1");
    }

    #[test]
    fn from_runs_merges_and_rejects_zero() {
        let d = RunDecomposition::from_runs([(2, 1), (2, 2), (3, 1)]).unwrap();
        assert_eq!(d.len(), 2);
        assert!(RunDecomposition::from_runs([(2, 0)]).is_err());
    }

    #[test]
    fn compound_curling_examples() {
        let d = RunDecomposition::from_runs([(1, 2), (2, 3)]).unwrap();
        assert_eq!(compound_curling(&d).unwrap(), BigUint::from(6u32));
        let d = RunDecomposition::from_runs([(4, 7)]).unwrap();
        assert_eq!(compound_curling(&d).unwrap(), BigUint::from(7u32));
        let d = RunDecomposition::from_runs([(2, 4), (3, 4)]).unwrap();
        assert_eq!(compound_curling(&d).unwrap(), BigUint::from(16u32));
        assert!(matches!(
            compound_curling(&RunDecomposition::default()),
            Err(Error::EmptyDecomposition)
        ));
    }

    #[test]
    fn extend_examples() {
        assert_eq!(extend_by_curling(&[1], 1).unwrap(), vec![1, 1]);
        assert_eq!(extend_by_curling(&[2, 3], 1).unwrap(), vec![2, 3, 1]);
        assert_eq!(extend_by_curling(&[2, 2], 2).unwrap(), vec![2, 2, 2, 3]);
        assert_eq!(extend_by_curling(&[7], 0).unwrap(), vec![7]);
    }

    #[test]
    fn steps_until_one_examples() {
        assert_eq!(
            steps_until_one(&[1, 5, 5], 10).unwrap(),
            StepsOutcome::Reached(0)
        );
        assert_eq!(
            steps_until_one(&[2, 3], 10).unwrap(),
            StepsOutcome::Reached(1)
        );
        // (2,2) -> 2 -> 3 -> 1: the 1 is the third appended value.
        assert_eq!(
            steps_until_one(&[2, 2], 10).unwrap(),
            StepsOutcome::Reached(3)
        );
        assert_eq!(
            steps_until_one(&[2, 2], 2).unwrap(),
            StepsOutcome::Exhausted
        );
    }

    #[test]
    fn gijswijt_prefix() {
        // Starting from (1) the process generates Gijswijt's sequence.
        let s = extend_by_curling(&[1], 19).unwrap();
        assert_eq!(
            s,
            vec![1, 1, 2, 1, 1, 2, 2, 2, 3, 1, 1, 2, 1, 1, 2, 2, 2, 3, 2, 1]
        );
    }
}
