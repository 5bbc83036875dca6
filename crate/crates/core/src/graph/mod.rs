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
//! Simple undirected graphs with contiguous vertex ids.
//!
//! Graphs are immutable once built; every operation returns a new graph.
//! Adjacency is kept as one sorted neighbor list per vertex.

mod generators;
mod io;
mod ops;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use generators::{
    caterpillar, complete, complete_bipartite, complete_kary_tree, cycle, empty, ladder, path,
    tadpole, wheel,
};
pub use io::{parse_edge_list, write_edge_list, GeneratorSpec};
pub use ops::{
    cartesian_product, corona_k1, disjoint_union, distances, join, power, power_from_distances,
    power_with_advisory, Diameter, DistanceTable, Power,
};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Repeated edges collapse to one;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::param(format!("self-loop at vertex {u}")));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Self {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    /// Edges produced internally are valid by construction.
    pub(crate) fn from_edges_unchecked<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            debug_assert!(u != v && u < n && v < n);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Self { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees = self.degrees();
        degrees.sort_unstable();
        DegreeSequence(degrees)
    }

    pub fn is_regular(&self) -> bool {
        let mut it = self.adj.iter().map(Vec::len);
        match it.next() {
            Some(d) => it.all(|x| x == d),
            None => true,
        }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|list| list.len() + 1 == n)
    }

    pub fn is_connected(&self) -> bool {
        if self.adj.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.adj.len()
    }

    /// True when every edge of `self` is an edge of `other` on the same
    /// vertex set.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edges().all(|(u, v)| other.has_edge(u, v))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Vertex degrees sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// `(degree, multiplicity)` pairs in ascending degree order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &d in &self.0 {
            match out.last_mut() {
                Some((value, count)) if *value == d => *count += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(d: DegreeSequence) -> Self {
        d.0
    }
}
