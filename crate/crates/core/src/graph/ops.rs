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
use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::Graph;
use crate::error::{Error, Result};

const UNREACHABLE: u32 = u32::MAX;

/// All-pairs unweighted distances, one breadth-first search per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceTable {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `None` when `v` is unreachable from `u`.
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        match self.dist[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> Diameter {
        let mut max = 0;
        for &d in &self.dist {
            if d == UNREACHABLE {
                return Diameter::Infinite;
            }
            max = max.max(d);
        }
        Diameter::Finite(max as usize)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("infinite"),
        }
    }
}

pub fn distances(g: &Graph) -> DistanceTable {
    let n = g.vertex_count();
    let mut dist = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for source in 0..n {
        let row = &mut dist[source * n..(source + 1) * n];
        row[source] = 0;
        queue.clear();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = row[u] + 1;
            for &v in g.neighbors(u) {
                if row[v] == UNREACHABLE {
                    row[v] = next;
                    queue.push_back(v);
                }
            }
        }
    }
    DistanceTable { n, dist }
}

impl Graph {
    pub fn diameter(&self) -> Diameter {
        distances(self).diameter()
    }
}

/// `r`-th power: `u ~ v` iff `0 < dist(u, v) <= r`.
pub fn power(g: &Graph, r: usize) -> Result<Graph> {
    if r < 1 {
        return Err(Error::param("graph power needs r >= 1"));
    }
    if r == 1 {
        return Ok(g.clone());
    }
    Ok(power_from_distances(&distances(g), r))
}

/// Builds the `r`-th power from a precomputed distance table, so sweeps
/// over several `r` share one all-pairs search.
pub fn power_from_distances(table: &DistanceTable, r: usize) -> Graph {
    let n = table.vertex_count();
    let r = r.min(u32::MAX as usize - 1) as u32;
    let adj = (0..n)
        .map(|u| {
            table
                .row(u)
                .iter()
                .enumerate()
                .filter(|&(_, &d)| d != 0 && d <= r)
                .map(|(v, _)| v)
                .collect()
        })
        .collect();
    Graph { adj }
}

#[derive(Debug, Clone)]
pub struct Power {
    pub graph: Graph,
    pub diameter: Diameter,
    /// Set when `r` exceeds the finite diameter, so the power is complete.
    pub beyond_diameter: bool,
}

pub fn power_with_advisory(g: &Graph, r: usize) -> Result<Power> {
    if r < 1 {
        return Err(Error::param("graph power needs r >= 1"));
    }
    let table = distances(g);
    let diameter = table.diameter();
    let beyond_diameter = matches!(diameter, Diameter::Finite(d) if r > d);
    Ok(Power {
        graph: power_from_distances(&table, r),
        diameter,
        beyond_diameter,
    })
}

/// Vertex `(g, h)` has id `g * |V(H)| + h`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let width = h.vertex_count();
    let id = |a: usize, b: usize| a * width + b;
    let along_h =
        (0..g.vertex_count()).flat_map(|a| h.edges().map(move |(b, c)| (id(a, b), id(a, c))));
    let along_g = g
        .edges()
        .flat_map(|(a, c)| (0..width).map(move |b| (id(a, b), id(c, b))));
    Graph::from_edges_unchecked(
        g.vertex_count() * width,
        along_h.chain(along_g).collect::<Vec<_>>(),
    )
}

/// Disjoint union of `g` and `h` (ids of `h` shifted by `|V(G)|`) plus
/// every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let offset = g.vertex_count();
    let cross = (0..offset).flat_map(|u| (0..h.vertex_count()).map(move |v| (u, v + offset)));
    let edges: Vec<_> = g
        .edges()
        .chain(h.edges().map(|(u, v)| (u + offset, v + offset)))
        .chain(cross)
        .collect();
    Graph::from_edges_unchecked(offset + h.vertex_count(), edges)
}

/// Attaches a new leaf `n + v` to every vertex `v`.
pub fn corona_k1(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let edges: Vec<_> = g.edges().chain((0..n).map(|v| (v, n + v))).collect();
    Graph::from_edges_unchecked(2 * n, edges)
}

pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph> {
    if graphs.is_empty() {
        return Err(Error::param("disjoint union of an empty list"));
    }
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in graphs {
        edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += g.vertex_count();
    }
    Ok(Graph::from_edges_unchecked(offset, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, empty, ladder, path, wheel};

    #[test]
    fn diameters() {
        assert_eq!(path(4).unwrap().diameter(), Diameter::Finite(3));
        assert_eq!(cycle(6).unwrap().diameter(), Diameter::Finite(3));
        assert_eq!(complete(5).unwrap().diameter(), Diameter::Finite(1));
        assert_eq!(empty(2).diameter(), Diameter::Infinite);
        assert_eq!(empty(1).diameter(), Diameter::Finite(0));
        assert_eq!(Diameter::Infinite.to_string(), "infinite");
    }

    #[test]
    fn distance_lookup() {
        let t = distances(&path(4).unwrap());
        assert_eq!(t.get(0, 3), Some(3));
        assert_eq!(t.get(2, 2), Some(0));
        let t = distances(&empty(2));
        assert_eq!(t.get(0, 1), None);
    }

    #[test]
    fn powers() {
        assert_eq!(power(&path(4).unwrap(), 3).unwrap(), complete(4).unwrap());
        let c = cycle(6).unwrap();
        assert_eq!(power(&c, 1).unwrap(), c);
        let sq = power(&c, 2).unwrap();
        assert!(sq.degrees().iter().all(|&d| d == 4));
        assert!(power(&c, 0).is_err());
        // Pairs in different components stay apart.
        let u = disjoint_union(&[path(2).unwrap(), path(2).unwrap()]).unwrap();
        assert_eq!(power(&u, 5).unwrap().edge_count(), 2);
    }

    #[test]
    fn power_advisory() {
        let p = power_with_advisory(&path(4).unwrap(), 5).unwrap();
        assert!(p.beyond_diameter);
        assert!(p.graph.is_complete());
        let p = power_with_advisory(&path(4).unwrap(), 3).unwrap();
        assert!(!p.beyond_diameter);
    }

    #[test]
    fn products() {
        assert_eq!(
            cartesian_product(&path(5).unwrap(), &path(2).unwrap()),
            ladder(5).unwrap()
        );
        let g = cycle(5).unwrap();
        assert_eq!(cartesian_product(&g, &empty(1)), g);
        assert_eq!(cartesian_product(&empty(1), &g), g);
        let sq = cartesian_product(&path(2).unwrap(), &path(2).unwrap());
        assert!(sq.degrees().iter().all(|&d| d == 2));
        assert!(sq.is_connected());
    }

    #[test]
    fn joins() {
        assert_eq!(
            join(&cycle(4).unwrap(), &complete(1).unwrap()),
            wheel(5).unwrap()
        );
        assert_eq!(
            join(&complete(2).unwrap(), &complete(3).unwrap()),
            complete(5).unwrap()
        );
        assert_eq!(
            join(&empty(2), &empty(3)),
            complete_bipartite(2, 3).unwrap()
        );
    }

    #[test]
    fn coronas() {
        assert_eq!(corona_k1(&empty(1)), path(2).unwrap());
        let c = corona_k1(&cycle(3).unwrap());
        assert_eq!(c.vertex_count(), 6);
        assert_eq!(c.degrees(), vec![3, 3, 3, 1, 1, 1]);
    }

    #[test]
    fn unions() {
        let k3 = complete(3).unwrap();
        let u = disjoint_union(&[k3.clone(), k3.clone()]).unwrap();
        assert_eq!(u.degrees(), vec![2; 6]);
        assert_eq!(disjoint_union(&[k3.clone(), empty(0)]).unwrap(), k3);
        let u = disjoint_union(&[path(3).unwrap(), cycle(4).unwrap()]).unwrap();
        assert_eq!(Vec::from(u.degree_sequence()), vec![1, 1, 2, 2, 2, 2, 2]);
        assert!(disjoint_union(&[]).is_err());
    }
}
