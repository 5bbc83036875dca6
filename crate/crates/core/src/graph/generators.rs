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
use super::ops::{cartesian_product, join};
use super::Graph;
use crate::error::{Error, Result};

/// Trees larger than this are refused rather than allocated.
const MAX_TREE_VERTICES: usize = 1 << 22;

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Parameter(msg()))
    }
}

/// `n` isolated vertices.
pub fn empty(n: usize) -> Graph {
    Graph::from_edges_unchecked(n, std::iter::empty())
}

/// Path on `n` vertices; endpoints are `0` and `n - 1`.
pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, || format!("path needs n >= 1, got {n}"))?;
    Ok(Graph::from_edges_unchecked(n, (1..n).map(|v| (v - 1, v))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Ok(Graph::from_edges_unchecked(
        n,
        (0..n).map(|v| (v, (v + 1) % n)),
    ))
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, || format!("complete graph needs n >= 1, got {n}"))?;
    Ok(Graph::from_edges_unchecked(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
    ))
}

/// Parts are `0..m` and `m..m + n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    require(m >= 1 && n >= 1, || {
        format!("complete bipartite graph needs m, n >= 1, got ({m}, {n})")
    })?;
    Ok(join(&empty(m), &empty(n)))
}

/// `C_{n-1}` joined with a hub; the hub is vertex `n - 1`.
pub fn wheel(n: usize) -> Result<Graph> {
    require(n >= 4, || format!("wheel needs n >= 4, got {n}"))?;
    Ok(join(&cycle(n - 1)?, &complete(1)?))
}

/// `P_n x P_2`; vertex `(i, j)` has id `2 i + j`.
pub fn ladder(n: usize) -> Result<Graph> {
    require(n >= 2, || format!("ladder needs n >= 2, got {n}"))?;
    Ok(cartesian_product(&path(n)?, &path(2)?))
}

/// Cycle `C_m` on ids `0..m` and path `P_n` on ids `m..m + n`, with a
/// bridge from cycle vertex 0 to path vertex `m`.
pub fn tadpole(m: usize, n: usize) -> Result<Graph> {
    require(m >= 3 && n >= 1, || {
        format!("tadpole needs m >= 3 and n >= 1, got ({m}, {n})")
    })?;
    let cycle_edges = (0..m).map(|v| (v, (v + 1) % m));
    let bridge = std::iter::once((0, m));
    let tail = (m + 1..m + n).map(|v| (v - 1, v));
    Ok(Graph::from_edges_unchecked(
        m + n,
        cycle_edges.chain(bridge).chain(tail),
    ))
}

/// Complete `k`-ary tree of height `h`, numbered breadth first: the root
/// is 0 and the children of `v` are `k v + 1 ..= k v + k`.
pub fn complete_kary_tree(k: usize, h: usize) -> Result<Graph> {
    require(k >= 2, || format!("k-ary tree needs k >= 2, got {k}"))?;
    let mut total: usize = 0;
    let mut level: usize = 1;
    for depth in 0..=h {
        total = total
            .checked_add(level)
            .filter(|&t| t <= MAX_TREE_VERTICES)
            .ok_or_else(|| Error::param(format!("tree k={k}, h={h} is too large")))?;
        if depth < h {
            level = level
                .checked_mul(k)
                .ok_or_else(|| Error::param(format!("tree k={k}, h={h} is too large")))?;
        }
    }
    Ok(Graph::from_edges_unchecked(
        total,
        (1..total).map(|v| ((v - 1) / k, v)),
    ))
}

/// Spine `u_1..u_n` on ids `0..n`, then the pendant leaves of `u_1`,
/// `u_2`, ... in order.
///
/// Spines of length 1 or 2 are accepted as degenerate caterpillars; a spine
/// end without leaves is itself a leaf of the resulting tree.
pub fn caterpillar(leaf_counts: &[usize]) -> Result<Graph> {
    require(!leaf_counts.is_empty(), || {
        "caterpillar needs a spine of at least one vertex".to_string()
    })?;
    let n = leaf_counts.len();
    let total = n + leaf_counts.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    let mut next = n;
    for (u, &count) in leaf_counts.iter().enumerate() {
        for _ in 0..count {
            edges.push((u, next));
            next += 1;
        }
    }
    Ok(Graph::from_edges_unchecked(total, edges))
}
