//! Code parameters and the quantities derived from them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParamsReason, Result};

const UPPER: u64 = 1 << 31;

/// A validated `(n, k, r)` triple together with its derived quantities.
///
/// `n1 = ceil(n/(r+1))`, `n2 = n1(r+1) - n`, `k1 = ceil(k/r)`, `k2 = k1 r - k`
/// and `d_star = n - k - k1 + 2`, the upper bound on the minimum distance of
/// any code with these parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub n1: usize,
    pub n2: usize,
    pub k1: usize,
    pub k2: usize,
    pub d_star: usize,
}

impl CodeParams {
    pub fn new(n: usize, k: usize, r: usize) -> Result<Self> {
        derive_params(n as u64, k as u64, r as u64)
    }

    /// Number of parity checks, `n - k`.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }
}

pub fn derive_params(n: u64, k: u64, r: u64) -> Result<CodeParams> {
    let reject = |reason| Err(Error::InvalidParams { n, k, r, reason });
    if n == 0 || k == 0 || r == 0 {
        return reject(ParamsReason::NonPositive);
    }
    if n >= UPPER || k >= UPPER || r >= UPPER {
        return reject(ParamsReason::OutOfRange);
    }
    if r > k {
        return reject(ParamsReason::LocalityAboveDimension);
    }
    if k >= n {
        return reject(ParamsReason::DimensionNotBelowLength);
    }
    let n1 = n.div_ceil(r + 1);
    let n2 = n1 * (r + 1) - n;
    let k1 = k.div_ceil(r);
    let k2 = k1 * r - k;
    if n - k < k1 {
        return reject(ParamsReason::RateBound);
    }
    let d_star = n - k - k1 + 2;
    Ok(CodeParams {
        n: n as usize,
        k: k as usize,
        r: r as usize,
        n1: n1 as usize,
        n2: n2 as usize,
        k1: k1 as usize,
        k2: k2 as usize,
        d_star: d_star as usize,
    })
}

#[derive(Deserialize)]
struct RawParams {
    n: u64,
    k: u64,
    r: u64,
}

impl<'de> Deserialize<'de> for CodeParams {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawParams::deserialize(d)?;
        derive_params(raw.n, raw.k, raw.r).map_err(serde::de::Error::custom)
    }
}
