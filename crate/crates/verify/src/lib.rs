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
//! Reference implementations used to check `curling-core` independently of
//! its own algorithms: curling numbers straight from the definition,
//! breadth-first distances, brute-force isomorphism and random connected
//! graphs.

#[cfg(test)]
mod properties;

use curling_core::graph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Random connected graph on `n` vertices: a random labelled tree plus each
/// remaining pair independently with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((order[i], parent));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid edges")
}

/// Brute-force isomorphism test for small graphs.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, 0, &mut map, &mut used)
}

fn extend(a: &Graph, b: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == map.len() {
        return true;
    }
    for w in 0..map.len() {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    false
}

/// Curling number by definition: the largest k such that the sequence ends
/// with some block repeated k times.
pub fn curling_by_definition(s: &[i64]) -> usize {
    let n = s.len();
    let mut best = 1;
    for len in 1..=n / 2 {
        let mut k = 1;
        while (k + 1) * len <= n {
            let a = &s[n - len..];
            let b = &s[n - (k + 1) * len..n - k * len];
            if a != b {
                break;
            }
            k += 1;
        }
        best = best.max(k);
    }
    best
}

/// Distance between two vertices by breadth-first search.
pub fn bfs_distance(g: &Graph, s: usize, t: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue = std::collections::VecDeque::from([s]);
    dist[s] = 0;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    (dist[t] != usize::MAX).then_some(dist[t])
}
