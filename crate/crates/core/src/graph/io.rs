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
//! Edge-list text format and generator spec strings.
//!
//! Edge lists are `n m` on the first line followed by `m` lines `u v` of
//! 0-based vertex ids. Generator specs look like `tadpole:5,3`.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use super::{
    caterpillar, complete, complete_bipartite, complete_kary_tree, cycle, ladder, path, tadpole,
    wheel, Graph,
};
use crate::error::{Error, Result};

/// Writes `n m` and one sorted `u v` line per edge (`u < v`), LF endings.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::EdgeList(format!("not a nonnegative integer: `{t}`")))
    });
    let mut next = |what: &str| -> Result<usize> {
        tokens
            .next()
            .unwrap_or_else(|| Err(Error::EdgeList(format!("missing {what}"))))
    };
    let n = next("vertex count")?;
    let m = next("edge count")?;
    let mut seen = BTreeSet::new();
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let u = next(&format!("endpoint of edge {i}"))?;
        let v = next(&format!("endpoint of edge {i}"))?;
        if u >= n || v >= n {
            return Err(Error::EdgeList(format!(
                "edge ({u}, {v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::EdgeList(format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::EdgeList(format!("duplicate edge ({u}, {v})")));
        }
        edges.push((u, v));
    }
    if next("").is_ok() {
        return Err(Error::EdgeList(format!("more than {m} edges listed")));
    }
    Graph::from_edges(n, edges)
}

/// A named graph family with its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Wheel(usize),
    Ladder(usize),
    Tadpole(usize, usize),
    KaryTree { k: usize, h: usize },
    Caterpillar(Vec<usize>),
}

impl GeneratorSpec {
    pub const FAMILIES: [&'static str; 9] = [
        "path",
        "cycle",
        "complete",
        "kmn",
        "wheel",
        "ladder",
        "tadpole",
        "ktree",
        "caterpillar",
    ];

    pub fn build(&self) -> Result<Graph> {
        match self {
            GeneratorSpec::Path(n) => path(*n),
            GeneratorSpec::Cycle(n) => cycle(*n),
            GeneratorSpec::Complete(n) => complete(*n),
            GeneratorSpec::CompleteBipartite(m, n) => complete_bipartite(*m, *n),
            GeneratorSpec::Wheel(n) => wheel(*n),
            GeneratorSpec::Ladder(n) => ladder(*n),
            GeneratorSpec::Tadpole(m, n) => tadpole(*m, *n),
            GeneratorSpec::KaryTree { k, h } => complete_kary_tree(*k, *h),
            GeneratorSpec::Caterpillar(leaves) => caterpillar(leaves),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let fail = |reason: String| Error::GeneratorSpec {
            spec: spec.to_string(),
            reason,
        };
        let (family, args) = spec
            .split_once(':')
            .ok_or_else(|| fail("expected `family:p1,p2,...`".to_string()))?;
        let params = args
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| fail(format!("`{p}` is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        let arity = |want: usize| {
            if params.len() == want {
                Ok(())
            } else {
                Err(fail(format!(
                    "`{family}` takes {want} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        Ok(match family {
            "path" => arity(1).map(|_| GeneratorSpec::Path(params[0]))?,
            "cycle" => arity(1).map(|_| GeneratorSpec::Cycle(params[0]))?,
            "complete" => arity(1).map(|_| GeneratorSpec::Complete(params[0]))?,
            "kmn" => arity(2).map(|_| GeneratorSpec::CompleteBipartite(params[0], params[1]))?,
            "wheel" => arity(1).map(|_| GeneratorSpec::Wheel(params[0]))?,
            "ladder" => arity(1).map(|_| GeneratorSpec::Ladder(params[0]))?,
            "tadpole" => arity(2).map(|_| GeneratorSpec::Tadpole(params[0], params[1]))?,
            "ktree" => arity(2).map(|_| GeneratorSpec::KaryTree {
                k: params[0],
                h: params[1],
            })?,
            "caterpillar" => GeneratorSpec::Caterpillar(params),
            other => {
                return Err(fail(format!(
                    "unknown family `{other}`; expected one of {}",
                    Self::FAMILIES.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Path(n) => write!(f, "path:{n}"),
            GeneratorSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GeneratorSpec::Complete(n) => write!(f, "complete:{n}"),
            GeneratorSpec::CompleteBipartite(m, n) => write!(f, "kmn:{m},{n}"),
            GeneratorSpec::Wheel(n) => write!(f, "wheel:{n}"),
            GeneratorSpec::Ladder(n) => write!(f, "ladder:{n}"),
            GeneratorSpec::Tadpole(m, n) => write!(f, "tadpole:{m},{n}"),
            GeneratorSpec::KaryTree { k, h } => write!(f, "ktree:{k},{h}"),
            GeneratorSpec::Caterpillar(leaves) => {
                let parts: Vec<String> = leaves.iter().map(usize::to_string).collect();
                write!(f, "caterpillar:{}", parts.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_format() {
        let g = path(3).unwrap();
        assert_eq!(write_edge_list(&g), "3 2\n0 1\n1 2\n");
        assert_eq!(parse_edge_list("3 2\n1 0\n2 1\n").unwrap(), g);
        assert_eq!(parse_edge_list("  4 0 ").unwrap().vertex_count(), 4);
    }

    #[test]
    fn edge_list_errors() {
        for bad in [
            "",
            "3",
            "3 2\n0 1\n",
            "3 1\n0 3\n",
            "3 1\n1 1\n",
            "3 2\n0 1\n1 0\n",
            "3 1\n0 1\n1 2\n",
            "3 1\n0 x\n",
            "-1 0",
        ] {
            assert!(
                matches!(parse_edge_list(bad), Err(Error::EdgeList(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn generator_specs() {
        let cases = [
            ("path:7", GeneratorSpec::Path(7)),
            ("tadpole:5,3", GeneratorSpec::Tadpole(5, 3)),
            ("ktree:2,4", GeneratorSpec::KaryTree { k: 2, h: 4 }),
            (
                "caterpillar:1,0,2,1",
                GeneratorSpec::Caterpillar(vec![1, 0, 2, 1]),
            ),
            ("kmn:2,3", GeneratorSpec::CompleteBipartite(2, 3)),
        ];
        for (text, spec) in cases {
            let parsed: GeneratorSpec = text.parse().unwrap();
            assert_eq!(parsed, spec);
            assert_eq!(parsed.to_string(), text);
        }
        assert_eq!(
            "ktree:2,4"
                .parse::<GeneratorSpec>()
                .unwrap()
                .build()
                .unwrap()
                .vertex_count(),
            31
        );
    }

    #[test]
    fn generator_spec_errors() {
        for bad in [
            "path",
            "path:",
            "path:1,2",
            "star:4",
            "tadpole:3",
            "cycle:-3",
        ] {
            assert!(
                matches!(
                    bad.parse::<GeneratorSpec>(),
                    Err(Error::GeneratorSpec { .. })
                ),
                "{bad}"
            );
        }
        assert!("cycle:2".parse::<GeneratorSpec>().unwrap().build().is_err());
    }
}
