//! Decision tables over parameter ranges.

use serde::Serialize;

use crate::decider::{Decider, Decision, RuleId, Status};
use crate::error::Result;
use crate::params::CodeParams;

/// One decided instance, flattened for tabular output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub n1: usize,
    pub n2: usize,
    pub k1: usize,
    pub k2: usize,
    pub d_star: usize,
    /// Empty when unresolved; the answer then lies in `[d_star - 1, d_star]`.
    pub value: Option<usize>,
    pub status: Status,
    pub rule: Option<RuleId>,
    /// Whether the witness is almost regular; empty without a witness.
    pub witness_almost_regular: Option<bool>,
}

impl From<&Decision> for SweepRow {
    fn from(d: &Decision) -> Self {
        let p = d.params;
        SweepRow {
            n: p.n,
            k: p.k,
            r: p.r,
            n1: p.n1,
            n2: p.n2,
            k1: p.k1,
            k2: p.k2,
            d_star: p.d_star,
            value: d.value.exact(),
            status: d.status,
            rule: d.rule,
            witness_almost_regular: d.witness.as_ref().map(|w| w.is_almost_regular()),
        }
    }
}

/// Every valid `(n, k, r)` with `n <= n_max` and `r <= r_max`, ordered by
/// `n`, then `k`, then `r`.
pub fn valid_triples(n_max: usize, r_max: usize) -> Vec<CodeParams> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for k in 1..n {
            for r in 1..=r_max.min(k) {
                if let Ok(p) = CodeParams::new(n, k, r) {
                    out.push(p);
                }
            }
        }
    }
    out
}

pub fn sweep(decider: &Decider, n_max: usize, r_max: usize) -> Result<Vec<SweepRow>> {
    valid_triples(n_max, r_max)
        .iter()
        .map(|p| decider.decide(p).map(|d| SweepRow::from(&d)))
        .collect()
}
