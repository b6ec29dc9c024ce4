//! Seeded random instances for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::params::CodeParams;
use crate::tanner::{f2p, FullTannerGraph, PrunedGraph};

/// `size` edges, each between a uniformly random pair of distinct vertices.
pub fn random_multigraph<R: Rng>(rng: &mut R, order: usize, size: usize) -> Result<Multigraph> {
    if order < 2 && size > 0 {
        return Err(Error::BadArgs(format!("no edges fit on {order} vertex")));
    }
    let mut g = Multigraph::empty(order);
    for _ in 0..size {
        let u = rng.gen_range(0..order);
        let mut v = rng.gen_range(0..order - 1);
        if v >= u {
            v += 1;
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// A full Tanner graph with a uniformly chosen number of local checks.
/// Variables are first dealt round-robin over the local checks in random
/// order so that each is covered, then checks are filled at random.
pub fn random_full_tanner<R: Rng>(rng: &mut R, p: &CodeParams) -> FullTannerGraph {
    let locals = rng.gen_range(p.n1..=p.n - p.k);
    let mut order: Vec<usize> = (0..p.n).collect();
    order.shuffle(rng);
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); locals];
    // n <= locals * (r + 1), so round-robin never overfills a check
    for (i, v) in order.into_iter().enumerate() {
        checks[i % locals].push(v);
    }
    for c in &mut checks {
        let mut rest: Vec<usize> = (0..p.n).filter(|v| !c.contains(v)).collect();
        rest.shuffle(rng);
        c.extend(rest.into_iter().take(p.r + 1 - c.len()));
    }
    FullTannerGraph::new(p.n, p.k, p.r, checks, p.n - p.k - locals)
        .expect("construction meets every invariant")
}

/// `f2p` of a random full Tanner graph.
pub fn random_pruned<R: Rng>(rng: &mut R, p: &CodeParams) -> PrunedGraph {
    f2p(&random_full_tanner(rng, p)).expect("f2p of a valid graph")
}
