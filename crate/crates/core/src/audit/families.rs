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
//! Ground-truth graph families, one builder per family name.
//!
//! Values measured on these graphs never pass through the formula registry.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{
    caterpillar, complete, complete_bipartite, complete_kary_tree, cycle, disjoint_union,
    distances, ladder, path, power_from_distances, tadpole, wheel, DistanceTable, Graph,
};
use crate::registry::Params;

/// Builds the graph a parameter point describes, as a base graph and the
/// power to raise it to.
pub trait Family: Send + Sync {
    fn name(&self) -> &'static str;

    fn base(&self, params: &Params) -> Result<Graph>;

    /// Identifies the base graph so powers of it can share one distance
    /// table.
    fn base_key(&self, params: &Params) -> Result<String>;

    fn exponent(&self, _params: &Params) -> Result<usize> {
        Ok(1)
    }
}

fn size(params: &Params, name: &str) -> Result<usize> {
    let v = params.int(name)?;
    usize::try_from(v).map_err(|_| Error::param(format!("`{name}` = {v} must be nonnegative")))
}

macro_rules! simple_family {
    ($ty:ident, $name:literal, [$($p:literal),*], |$params:ident| $build:expr) => {
        struct $ty;

        impl Family for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn base(&self, $params: &Params) -> Result<Graph> {
                $build
            }

            fn base_key(&self, params: &Params) -> Result<String> {
                let parts: Vec<String> = [$($p),*]
                    .iter()
                    .map(|p| params.int(p).map(|v| v.to_string()))
                    .collect::<Result<_>>()?;
                Ok(format!("{}:{}", $name, parts.join(",")))
            }
        }
    };
}

simple_family!(Complete, "complete", ["n"], |p| complete(size(p, "n")?));
simple_family!(Bipartite, "complete_bipartite", ["m", "n"], |p| {
    complete_bipartite(size(p, "m")?, size(p, "n")?)
});
simple_family!(Balanced, "balanced_bipartite", ["n"], |p| {
    let n = size(p, "n")?;
    complete_bipartite(n, n)
});
simple_family!(Path, "path", ["n"], |p| path(size(p, "n")?));
simple_family!(Cycle, "cycle", ["n"], |p| cycle(size(p, "n")?));
simple_family!(Wheel, "wheel", ["n"], |p| wheel(size(p, "n")?));
simple_family!(Ladder, "ladder", ["n"], |p| ladder(size(p, "n")?));
simple_family!(Union, "union_complete_path", ["a", "b"], |p| {
    disjoint_union(&[complete(size(p, "a")?)?, path(size(p, "b")?)?])
});

macro_rules! power_family {
    ($ty:ident, $name:literal, [$($p:literal),*], |$params:ident| $build:expr) => {
        struct $ty;

        impl Family for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn base(&self, $params: &Params) -> Result<Graph> {
                $build
            }

            fn base_key(&self, params: &Params) -> Result<String> {
                let parts: Vec<String> = [$($p),*]
                    .iter()
                    .map(|p| params.int(p).map(|v| v.to_string()))
                    .collect::<Result<_>>()?;
                Ok(format!("{}:{}", $name, parts.join(",")))
            }

            fn exponent(&self, params: &Params) -> Result<usize> {
                let r = size(params, "r")?;
                if r == 0 {
                    return Err(Error::param("power exponent r must be >= 1"));
                }
                Ok(r)
            }
        }
    };
}

power_family!(PathPower, "path_power", ["n"], |p| path(size(p, "n")?));
power_family!(CyclePower, "cycle_power", ["n"], |p| cycle(size(p, "n")?));
power_family!(TadpolePower, "tadpole_power", ["m", "n"], |p| {
    tadpole(size(p, "m")?, size(p, "n")?)
});
power_family!(BinaryTreePower, "binary_tree_power", ["h"], |p| {
    complete_kary_tree(2, size(p, "h")?)
});
power_family!(KaryTreePower, "kary_tree_power", ["k", "h"], |p| {
    complete_kary_tree(size(p, "k")?, size(p, "h")?)
});

struct Caterpillar;

impl Family for Caterpillar {
    fn name(&self) -> &'static str {
        "caterpillar"
    }

    fn base(&self, params: &Params) -> Result<Graph> {
        let leaves = params
            .list("leaves")?
            .iter()
            .map(|&l| {
                usize::try_from(l).map_err(|_| Error::param("leaf counts must be nonnegative"))
            })
            .collect::<Result<Vec<_>>>()?;
        caterpillar(&leaves)
    }

    fn base_key(&self, params: &Params) -> Result<String> {
        Ok(format!("caterpillar:{:?}", params.list("leaves")?))
    }
}

/// `P_{2 ic}^{ic}`: degrees `ic..2 ic - 1`, each twice.
struct VarthetaWitness;

impl Family for VarthetaWitness {
    fn name(&self) -> &'static str {
        "vartheta_witness"
    }

    fn base(&self, params: &Params) -> Result<Graph> {
        path(2 * size(params, "ic")?)
    }

    fn base_key(&self, params: &Params) -> Result<String> {
        Ok(format!("path:{}", 2 * params.int("ic")?))
    }

    fn exponent(&self, params: &Params) -> Result<usize> {
        size(params, "ic")
    }
}

static FAMILIES: [&dyn Family; 15] = [
    &Complete,
    &Bipartite,
    &Balanced,
    &Path,
    &Cycle,
    &Wheel,
    &Ladder,
    &PathPower,
    &CyclePower,
    &TadpolePower,
    &BinaryTreePower,
    &KaryTreePower,
    &Caterpillar,
    &VarthetaWitness,
    &Union,
];

pub fn families() -> &'static [&'static dyn Family] {
    &FAMILIES
}

pub fn family(name: &str) -> Result<&'static dyn Family> {
    FAMILIES
        .iter()
        .copied()
        .find(|f| f.name() == name)
        .ok_or_else(|| Error::UnknownStrategy(name.to_string()))
}

/// Builds graphs for a sweep, reusing distance tables across powers of the
/// same base graph.
#[derive(Default)]
pub struct GraphBuilder {
    tables: HashMap<String, DistanceTable>,
}

impl GraphBuilder {
    pub fn build(&mut self, family: &dyn Family, params: &Params) -> Result<Graph> {
        let r = family.exponent(params)?;
        if r == 1 {
            return family.base(params);
        }
        let key = family.base_key(params)?;
        if !self.tables.contains_key(&key) {
            let base = family.base(params)?;
            self.tables.insert(key.clone(), distances(&base));
        }
        Ok(power_from_distances(&self.tables[&key], r))
    }
}
