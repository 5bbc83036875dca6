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
//! Graph powers: paths, cycles, tadpoles and complete trees.

use num_bigint::BigInt;
use num_traits::{One, Pow};

use super::{half, CaseValue, Formula, FormulaId, FormulaInfo, FormulaRegistry, Params, Quantity};
use crate::error::{Error, Result};

pub(super) fn register(r: &mut FormulaRegistry) {
    r.register(Box::new(PathPowerCn));
    r.register(Box::new(PathPowerCnc));
    r.register(Box::new(CyclePowerInvariance));
    r.register(Box::new(TadpolePowerCn));
    r.register(Box::new(TadpolePowerCnc));
    r.register(Box::new(BinaryTreePower));
    r.register(Box::new(KaryTreePower));
    r.register(Box::new(CompleteAtDiameter));
}

fn exponent(name: &str, v: i64) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::param(format!("exponent `{name}` = {v} out of range")))
}

fn pow2(e: u32) -> BigInt {
    BigInt::from(2).pow(e)
}

/// `floor(m/2) + n`, the diameter of `T_{m,n}`.
fn tadpole_diameter(m: i64, n: i64) -> i64 {
    half(m) + n
}

fn tadpole_in_range(p: &Params) -> Result<bool> {
    let (m, n, r) = (p.int("m")?, p.int("n")?, p.int("r")?);
    Ok(m >= 3 && n >= 1 && 1 <= r && r <= tadpole_diameter(m, n))
}

struct PathPowerCn;

impl Formula for PathPowerCn {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(8),
            family: "path_power",
            params: &["n", "r"],
            quantities: &[Quantity::Cn],
            domain: "n >= 3, 1 <= r <= n - 1",
            expression: "cn(P_n^r) = 2 if r = floor(n/2); n - 2r if r < floor(n/2) - 1; \
                         2(r + 1) - n if floor(n/2) <= r <= n - 1",
            claim: "cn of path powers, by cases on r",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        let (n, r) = (p.int("n")?, p.int("r")?);
        Ok(n >= 3 && 1 <= r && r < n)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let (n, r) = (p.int("n")?, p.int("r")?);
        let h = half(n);
        let mut out = Vec::new();
        if r == h {
            out.push(CaseValue::new("r = floor(n/2)", Quantity::Cn, 2));
        }
        if r < h - 1 {
            out.push(CaseValue::new(
                "r < floor(n/2) - 1",
                Quantity::Cn,
                n - 2 * r,
            ));
        }
        if h <= r && r < n {
            out.push(CaseValue::new(
                "floor(n/2) <= r <= n - 1",
                Quantity::Cn,
                2 * (r + 1) - n,
            ));
        }
        Ok(out)
    }
}

struct PathPowerCnc;

impl Formula for PathPowerCnc {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(9),
            family: "path_power",
            params: &["n", "r"],
            quantities: &[Quantity::Cnc],
            domain: "n >= 1, 1 <= r <= n",
            expression: "cnc(P_n^r) = 2^r if r = floor(n/2); 2^r (n - 2r) if r < floor(n/2) - 1; \
                         2^(r-1) (r + 1) - n if floor(n/2) <= r <= n - 1",
            claim: "cnc of path powers, by cases on r",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        let (n, r) = (p.int("n")?, p.int("r")?);
        Ok(n >= 1 && 1 <= r && r <= n)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let (n, r) = (p.int("n")?, p.int("r")?);
        let h = half(n);
        let e = exponent("r", r)?;
        let mut out = Vec::new();
        if r == h {
            out.push(CaseValue::new("r = floor(n/2)", Quantity::Cnc, pow2(e)));
        }
        if r < h - 1 {
            out.push(CaseValue::new(
                "r < floor(n/2) - 1",
                Quantity::Cnc,
                pow2(e) * (n - 2 * r),
            ));
        }
        if h <= r && r < n {
            // Encoded as printed: 2^(r-1)(r+1) - n.
            out.push(CaseValue::new(
                "floor(n/2) <= r <= n - 1",
                Quantity::Cnc,
                pow2(e - 1) * (r + 1) - n,
            ));
        }
        Ok(out)
    }
}

struct CyclePowerInvariance;

impl Formula for CyclePowerInvariance {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(10),
            family: "cycle_power",
            params: &["n", "r"],
            quantities: &[Quantity::Cn],
            domain: "n >= 3, 1 <= r <= floor(n/2)",
            expression: "cn(C_n^r) = cn(C_n) = n",
            claim: "cn is invariant under powers of a cycle",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        let (n, r) = (p.int("n")?, p.int("r")?);
        Ok(n >= 3 && 1 <= r && r <= half(n))
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        Ok(vec![CaseValue::new(
            "1 <= r <= floor(n/2)",
            Quantity::Cn,
            p.int("n")?,
        )])
    }
}

struct TadpolePowerCn;

impl Formula for TadpolePowerCn {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(11),
            family: "tadpole_power",
            params: &["m", "n", "r"],
            quantities: &[Quantity::Cn],
            domain: "m >= 3, n >= 1, 1 <= r <= diameter(T_{m,n}) = floor(m/2) + n",
            expression: "cn(T_{m,n}^r) = m + n - 2(2r - 1)",
            claim: "cn of tadpole powers",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        tadpole_in_range(p)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let (m, n, r) = (p.int("m")?, p.int("n")?, p.int("r")?);
        Ok(vec![CaseValue::new(
            "tadpole",
            Quantity::Cn,
            m + n - 2 * (2 * r - 1),
        )])
    }
}

struct TadpolePowerCnc;

impl Formula for TadpolePowerCnc {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(12),
            family: "tadpole_power",
            params: &["m", "n", "r"],
            quantities: &[Quantity::Cnc],
            domain: "m >= 3, n >= 1, 1 <= r <= diameter(T_{m,n}) = floor(m/2) + n",
            expression: "cnc(T_{m,n}^r) = r(r - 1)(m + n - 2(2r - 1))",
            claim: "cnc of tadpole powers",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        tadpole_in_range(p)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let (m, n, r) = (p.int("m")?, p.int("n")?, p.int("r")?);
        let value = BigInt::from(r) * (r - 1) * (m + n - 2 * (2 * r - 1));
        Ok(vec![CaseValue::new("tadpole", Quantity::Cnc, value)])
    }
}

struct BinaryTreePower;

impl Formula for BinaryTreePower {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(13),
            family: "binary_tree_power",
            params: &["h", "r"],
            quantities: &[Quantity::Cn, Quantity::Cnc],
            domain: "h >= 2, 1 <= r <= diameter = 2h",
            expression: "cn(G^r) = 2^h; cnc(G^r) = 2^C(h+1, 2)",
            claim: "cn and cnc of complete binary tree powers",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        let (h, r) = (p.int("h")?, p.int("r")?);
        Ok(h >= 2 && 1 <= r && r <= 2 * h)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let h = exponent("h", p.int("h")?)?;
        let choose = (h + 1)
            .checked_mul(h)
            .map(|x| x / 2)
            .ok_or_else(|| Error::param("h too large"))?;
        Ok(vec![
            CaseValue::new("any integral power", Quantity::Cn, pow2(h)),
            CaseValue::new("any integral power", Quantity::Cnc, pow2(choose)),
        ])
    }
}

struct KaryTreePower;

impl Formula for KaryTreePower {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(14),
            family: "kary_tree_power",
            params: &["k", "h", "r"],
            quantities: &[Quantity::Cn, Quantity::Cnc],
            domain: "k >= 2, h >= 1, 1 <= r <= diameter = 2h",
            expression: "cn(G^r) = k^h; cnc(G^r) = prod_{i=0}^{h} k^i",
            claim: "cn and cnc of complete k-ary tree powers",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        let (k, h, r) = (p.int("k")?, p.int("h")?, p.int("r")?);
        Ok(k >= 2 && h >= 1 && 1 <= r && r <= 2 * h)
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let k = BigInt::from(p.int("k")?);
        let h = exponent("h", p.int("h")?)?;
        let product: BigInt = (0..=h)
            .map(|i| Pow::pow(&k, i))
            .fold(BigInt::one(), |a, b| a * b);
        Ok(vec![
            CaseValue::new("any integral power", Quantity::Cn, Pow::pow(&k, h)),
            CaseValue::new("any integral power", Quantity::Cnc, product),
        ])
    }
}

/// Powers at or beyond the diameter are complete, audited on tadpoles.
struct CompleteAtDiameter;

impl Formula for CompleteAtDiameter {
    fn info(&self) -> &FormulaInfo {
        static INFO: FormulaInfo = FormulaInfo {
            formula_id: FormulaId(20),
            family: "tadpole_power",
            params: &["m", "n", "r"],
            quantities: &[Quantity::Cn, Quantity::Cnc],
            domain: "m >= 3, n >= 1, r >= diameter(T_{m,n}) = floor(m/2) + n",
            expression: "G^r = K_|V| for r >= diameter, so cn = cnc = m + n",
            claim: "the power at the diameter is complete",
        };
        &INFO
    }

    fn in_domain(&self, p: &Params) -> Result<bool> {
        let (m, n, r) = (p.int("m")?, p.int("n")?, p.int("r")?);
        Ok(m >= 3 && n >= 1 && r >= tadpole_diameter(m, n))
    }

    fn cases(&self, p: &Params) -> Result<Vec<CaseValue>> {
        let order = p.int("m")? + p.int("n")?;
        Ok(vec![
            CaseValue::new("r >= diameter", Quantity::Cn, order),
            CaseValue::new("r >= diameter", Quantity::Cnc, order),
        ])
    }
}
