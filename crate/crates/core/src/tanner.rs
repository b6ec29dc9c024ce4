//! Tanner graphs of LRCs and the pruned graphs derived from them.
//!
//! A full Tanner graph has `n - k` check nodes: local checks of degree
//! exactly `r + 1` and global checks adjacent to every variable. Dropping
//! the global checks and then every variable of degree one gives a pruned
//! graph (`f2p`); padding a pruned graph back out gives a full Tanner graph
//! (`p2f`). Pruned graphs with `n1` checks and only degree-two variables
//! are exactly multigraphs of order `n1` and size `n2`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::params::CodeParams;

/// Largest `n - k` accepted by [`tanner_min_distance`].
pub const CHECK_ENVELOPE: usize = 24;
/// Largest `n` representable by the neighborhood bitsets.
pub const VARIABLE_ENVELOPE: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FullTannerGraph {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub local_checks: Vec<Vec<usize>>,
    pub global_count: usize,
}

#[derive(Deserialize)]
struct RawTanner {
    n: usize,
    k: usize,
    r: usize,
    local_checks: Vec<Vec<usize>>,
    global_count: usize,
}

impl<'de> Deserialize<'de> for FullTannerGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawTanner::deserialize(d)?;
        FullTannerGraph::new(raw.n, raw.k, raw.r, raw.local_checks, raw.global_count)
            .map_err(serde::de::Error::custom)
    }
}

impl FullTannerGraph {
    pub fn new(
        n: usize,
        k: usize,
        r: usize,
        mut local_checks: Vec<Vec<usize>>,
        global_count: usize,
    ) -> Result<Self> {
        let p = CodeParams::new(n, k, r)?;
        let bad = |msg: String| Err(Error::InvalidTanner(msg));
        if local_checks.len() + global_count != n - k {
            return bad(format!(
                "{} local + {global_count} global checks, expected n - k = {}",
                local_checks.len(),
                n - k
            ));
        }
        let mut covered = vec![false; n];
        for (j, check) in local_checks.iter_mut().enumerate() {
            check.sort_unstable();
            check.dedup();
            if check.len() != r + 1 {
                return bad(format!("local check {j} has degree {}, expected {}", check.len(), r + 1));
            }
            for &v in check.iter() {
                if v >= n {
                    return bad(format!("local check {j} names variable {v} >= n"));
                }
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return bad(format!("variable {v} has no local check"));
        }
        debug_assert!(local_checks.len() >= p.n1);
        Ok(FullTannerGraph {
            n,
            k,
            r,
            local_checks,
            global_count,
        })
    }

    pub fn params(&self) -> CodeParams {
        CodeParams::new(self.n, self.k, self.r).expect("validated on construction")
    }

    pub fn check_count(&self) -> usize {
        self.local_checks.len() + self.global_count
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrunedGraph {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    /// Variable count; variables are `0..m`.
    pub m: usize,
    pub checks: Vec<Vec<usize>>,
}

impl PrunedGraph {
    /// Builds and validates a pruned graph.
    pub fn new(n: usize, k: usize, r: usize, m: usize, mut checks: Vec<Vec<usize>>) -> Result<Self> {
        for c in &mut checks {
            c.sort_unstable();
        }
        let g = PrunedGraph { n, k, r, m, checks };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let p = CodeParams::new(self.n, self.k, self.r)?;
        let bad = |msg: String| Err(Error::InvalidPruned(msg));
        let h = self.checks.len();
        if self.m > self.n {
            return bad(format!("{} variables exceed n = {}", self.m, self.n));
        }
        if h < p.n1 || h > self.n - self.k {
            return bad(format!("{h} checks outside [{}, {}]", p.n1, self.n - self.k));
        }
        let mut deg = vec![0usize; self.m];
        for (j, c) in self.checks.iter().enumerate() {
            if c.len() > self.r + 1 {
                return bad(format!("check {j} has degree {} > r + 1", c.len()));
            }
            if c.windows(2).any(|w| w[0] == w[1]) {
                return bad(format!("check {j} repeats a variable"));
            }
            for &v in c {
                if v >= self.m {
                    return bad(format!("check {j} names variable {v} >= m"));
                }
                deg[v] += 1;
            }
        }
        if let Some(v) = deg.iter().position(|&d| d < 2) {
            return bad(format!("variable {v} has degree {} < 2", deg[v]));
        }
        let edges = self.edge_count();
        let expected = (h * (self.r + 1)) as isize - (self.n - self.m) as isize;
        if edges as isize != expected {
            return bad(format!("{edges} edges, expected h(r+1) - (n-m) = {expected}"));
        }
        Ok(())
    }

    pub fn h(&self) -> usize {
        self.checks.len()
    }

    pub fn edge_count(&self) -> usize {
        self.checks.iter().map(Vec::len).sum()
    }

    pub fn variable_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.m];
        for c in &self.checks {
            for &v in c {
                deg[v] += 1;
            }
        }
        deg
    }

    /// All variables have degree two and there are exactly `n1` checks.
    pub fn is_refined(&self) -> bool {
        let p = CodeParams::new(self.n, self.k, self.r).expect("valid parameters");
        self.h() == p.n1 && self.variable_degrees().iter().all(|&d| d == 2)
    }

    /// Reads a refined graph as a multigraph: checks are vertices and each
    /// variable joins its two checks.
    pub fn to_multigraph(&self) -> Result<Multigraph> {
        let mut ends = vec![Vec::new(); self.m];
        for (j, c) in self.checks.iter().enumerate() {
            for &v in c {
                ends[v].push(j);
            }
        }
        let mut g = Multigraph::empty(self.h());
        for (v, e) in ends.iter().enumerate() {
            match e.as_slice() {
                [a, b] => g.add_edge(*a, *b)?,
                _ => {
                    return Err(Error::ShapeMismatch(format!(
                        "variable {v} has degree {}, expected 2",
                        e.len()
                    )))
                }
            }
        }
        Ok(g)
    }
}

/// How `p2f` picks a check for each fresh variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AttachPolicy {
    #[default]
    LowestIndex,
    HighestIndex,
    RoundRobin,
    MostSpare,
    Seeded(u64),
}

/// Drops global checks, then variables left with degree one.
pub fn f2p(t: &FullTannerGraph) -> Result<PrunedGraph> {
    let t = FullTannerGraph::new(t.n, t.k, t.r, t.local_checks.clone(), t.global_count)?;
    let mut deg = vec![0usize; t.n];
    for c in &t.local_checks {
        for &v in c {
            deg[v] += 1;
        }
    }
    let mut relabel = vec![usize::MAX; t.n];
    let mut m = 0;
    for v in 0..t.n {
        if deg[v] >= 2 {
            relabel[v] = m;
            m += 1;
        }
    }
    let checks = t
        .local_checks
        .iter()
        .map(|c| c.iter().filter(|&&v| deg[v] >= 2).map(|&v| relabel[v]).collect())
        .collect();
    let p = PrunedGraph::new(t.n, t.k, t.r, m, checks)?;
    Ok(p)
}

/// Adds `n - m` fresh variables, each attached to one check with spare
/// capacity, then tops up with global checks.
pub fn p2f(p: &PrunedGraph, policy: AttachPolicy) -> Result<FullTannerGraph> {
    p.validate()?;
    let cap = p.r + 1;
    let h = p.h();
    let mut checks = p.checks.clone();
    let mut rng = match policy {
        AttachPolicy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut cursor = 0;
    for v in p.m..p.n {
        let open: Vec<usize> = (0..h).filter(|&j| checks[j].len() < cap).collect();
        // the edge-count identity leaves exactly n - m free slots
        assert!(!open.is_empty(), "validated pruned graph ran out of capacity");
        let j = match policy {
            AttachPolicy::LowestIndex => open[0],
            AttachPolicy::HighestIndex => *open.last().unwrap(),
            AttachPolicy::RoundRobin => {
                let j = open.iter().copied().find(|&j| j >= cursor).unwrap_or(open[0]);
                cursor = (j + 1) % h;
                j
            }
            AttachPolicy::MostSpare => *open
                .iter()
                .min_by_key(|&&j| (checks[j].len(), j))
                .unwrap(),
            AttachPolicy::Seeded(_) => *open.choose(rng.as_mut().unwrap()).unwrap(),
        };
        checks[j].push(v);
    }
    FullTannerGraph::new(p.n, p.k, p.r, checks, p.n - p.k - h)
}

fn bitset(vars: &[usize]) -> u128 {
    vars.iter().fold(0u128, |acc, &v| acc | 1u128 << v)
}

/// `|N(S)|` for a set of check indices; locals come first, then globals.
pub fn neighborhood_size(t: &FullTannerGraph, s: &[usize]) -> Result<usize> {
    let count = t.check_count();
    if let Some(&c) = s.iter().find(|&&c| c >= count) {
        return Err(Error::UnknownCheck { check: c, count });
    }
    if s.iter().any(|&c| c >= t.local_checks.len()) {
        return Ok(t.n);
    }
    let mut seen = vec![false; t.n];
    for &c in s {
        for &v in &t.local_checks[c] {
            seen[v] = true;
        }
    }
    Ok(seen.iter().filter(|&&b| b).count())
}

/// `|N_P(S)|` and `|E_P(S)|` for a set of pruned-graph checks.
pub fn pruned_neighborhood(p: &PrunedGraph, s: &[usize]) -> Result<(usize, usize)> {
    let mut seen = vec![false; p.m];
    let mut edges = 0;
    for &c in s {
        let check = p.checks.get(c).ok_or(Error::UnknownCheck {
            check: c,
            count: p.h(),
        })?;
        edges += check.len();
        for &v in check {
            seen[v] = true;
        }
    }
    Ok((seen.iter().filter(|&&b| b).count(), edges))
}

/// Minimum `|N(S)|` over local-check subsets of each size `0..=L`.
fn min_local_neighborhoods(t: &FullTannerGraph) -> Vec<usize> {
    let sets: Vec<u128> = t.local_checks.iter().map(|c| bitset(c)).collect();
    let l = sets.len();
    let mut best = vec![usize::MAX; l + 1];
    best[0] = 0;
    if l == 0 {
        return best;
    }
    fn walk(sets: &[u128], start: usize, depth: usize, acc: u128, best: &mut [usize]) {
        for i in start..sets.len() {
            let u = acc | sets[i];
            let size = u.count_ones() as usize;
            if size < best[depth + 1] {
                best[depth + 1] = size;
            }
            walk(sets, i + 1, depth + 1, u, best);
        }
    }
    let per_first: Vec<Vec<usize>> = (0..l)
        .into_par_iter()
        .map(|i| {
            let mut b = vec![usize::MAX; l + 1];
            b[1] = sets[i].count_ones() as usize;
            walk(&sets, i + 1, 1, sets[i], &mut b);
            b
        })
        .collect();
    for b in per_first {
        for (x, y) in best.iter_mut().zip(b) {
            *x = (*x).min(y);
        }
    }
    best
}

/// Largest `d` such that, for every `eta` in `[n-k-d+2, n-k]`, every
/// `eta` checks together touch at least `eta + k` variables.
///
/// Sets holding a global check touch all `n` variables, so only subsets of
/// local checks can fail. With `eta*` the largest failing size (0 if none)
/// the answer is `n - k + 1 - eta*`, which ranges over `[1, n - k + 1]`.
pub fn tanner_min_distance(t: &FullTannerGraph) -> Result<usize> {
    let checks = t.n - t.k;
    if checks > CHECK_ENVELOPE {
        return Err(Error::EnvelopeExceeded {
            what: "n - k",
            value: checks,
            limit: CHECK_ENVELOPE,
        });
    }
    if t.n > VARIABLE_ENVELOPE {
        return Err(Error::EnvelopeExceeded {
            what: "n",
            value: t.n,
            limit: VARIABLE_ENVELOPE,
        });
    }
    let best = min_local_neighborhoods(t);
    let worst = (1..best.len()).rev().find(|&eta| best[eta] < eta + t.k).unwrap_or(0);
    Ok(checks + 1 - worst)
}

/// Minimum distance of a pruned graph, through the default `p2f`.
pub fn pruned_min_distance(p: &PrunedGraph) -> Result<usize> {
    tanner_min_distance(&p2f(p, AttachPolicy::default())?)
}

/// Removes one check node without lowering the minimum distance.
///
/// Drops a check of minimum degree `l`, removes `r + 1 - l` edges from
/// variables of maximum degree, then drops variables left with degree one.
pub fn reduce_check_nodes(p: &PrunedGraph) -> Result<PrunedGraph> {
    p.validate()?;
    let params = CodeParams::new(p.n, p.k, p.r)?;
    if p.h() <= params.n1 {
        return Err(Error::NothingToReduce);
    }
    let mut checks = p.checks.clone();
    let drop = (0..checks.len()).min_by_key(|&j| (checks[j].len(), j)).unwrap();
    let l = checks.remove(drop).len();
    let mut deg = vec![0usize; p.m];
    for c in &checks {
        for &v in c {
            deg[v] += 1;
        }
    }
    for _ in 0..(p.r + 1 - l) {
        let v = (0..p.m)
            .filter(|&v| deg[v] >= 2)
            .max_by_key(|&v| (deg[v], std::cmp::Reverse(v)))
            .expect("edge count leaves a removable edge");
        // strip the edge to its fullest check, later index on ties
        let j = (0..checks.len())
            .filter(|&j| checks[j].contains(&v))
            .max_by_key(|&j| (checks[j].len(), j))
            .unwrap();
        checks[j].retain(|&x| x != v);
        deg[v] -= 1;
    }
    let mut relabel = vec![usize::MAX; p.m];
    let mut m = 0;
    for v in 0..p.m {
        if deg[v] >= 2 {
            relabel[v] = m;
            m += 1;
        }
    }
    let checks = checks
        .iter()
        .map(|c| c.iter().filter(|&&v| deg[v] >= 2).map(|&v| relabel[v]).collect())
        .collect();
    PrunedGraph::new(p.n, p.k, p.r, m, checks)
}

/// Reduces to `n1` checks, then splits variables of degree above two until
/// every variable has degree exactly two.
pub fn refine(p: &PrunedGraph) -> Result<PrunedGraph> {
    let params = CodeParams::new(p.n, p.k, p.r)?;
    let mut cur = p.clone();
    cur.validate()?;
    while cur.h() > params.n1 {
        cur = reduce_check_nodes(&cur)?;
    }
    loop {
        let deg = cur.variable_degrees();
        let Some(v) = (0..cur.m).filter(|&v| deg[v] > 2).max_by_key(|&v| (deg[v], std::cmp::Reverse(v)))
        else {
            break;
        };
        let adjacent: Vec<usize> = (0..cur.h()).filter(|&j| cur.checks[j].contains(&v)).collect();
        let (c1, c2) = (adjacent[0], adjacent[1]);
        let fresh = cur.m;
        cur.m += 1;
        cur.checks[c1].push(fresh);
        cur.checks[c2].retain(|&x| x != v);
        cur.checks[c2].push(fresh);
    }
    for c in &mut cur.checks {
        c.sort_unstable();
    }
    cur.validate()?;
    debug_assert_eq!(cur.m, params.n2);
    Ok(cur)
}

/// Vertices become checks and each edge a variable joined to its two ends.
pub fn graph_to_pruned(g: &Multigraph, p: &CodeParams) -> Result<PrunedGraph> {
    if g.order() != p.n1 || g.size() != p.n2 {
        return Err(Error::ShapeMismatch(format!(
            "graph has order {} and size {}, expected {} and {}",
            g.order(),
            g.size(),
            p.n1,
            p.n2
        )));
    }
    let mut checks = vec![Vec::new(); p.n1];
    for (v, (a, b)) in g.edge_list().into_iter().enumerate() {
        checks[a].push(v);
        checks[b].push(v);
    }
    PrunedGraph::new(p.n, p.k, p.r, p.n2, checks)
}

/// Full Tanner graph realizing a multigraph, with the default `p2f`.
pub fn graph_to_tanner(g: &Multigraph, p: &CodeParams) -> Result<FullTannerGraph> {
    p2f(&graph_to_pruned(g, p)?, AttachPolicy::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::ForbiddenFamily;

    fn double_edge() -> Multigraph {
        Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn double_edge_instance() {
        let p = CodeParams::new(6, 3, 3).unwrap();
        let pruned = graph_to_pruned(&double_edge(), &p).unwrap();
        assert_eq!((pruned.h(), pruned.m), (2, 2));
        assert_eq!(pruned.checks, vec![vec![0, 1], vec![0, 1]]);
        let t = p2f(&pruned, AttachPolicy::default()).unwrap();
        assert_eq!(t.global_count, 1);
        assert_eq!(tanner_min_distance(&t).unwrap(), 4);
        let back = f2p(&t).unwrap();
        assert_eq!((back.h(), back.m, back.edge_count()), (2, 2, 4));
    }

    #[test]
    fn cycle_instance() {
        let p = CodeParams::new(16, 9, 4).unwrap();
        let c4 = crate::constructions::cycle_graph(4).unwrap();
        let pruned = graph_to_pruned(&c4, &p).unwrap();
        assert_eq!((pruned.h(), pruned.m, pruned.edge_count()), (4, 4, 8));
        let t = graph_to_tanner(&c4, &p).unwrap();
        assert_eq!(tanner_min_distance(&t).unwrap(), p.d_star);
    }

    #[test]
    fn empty_graph_instance() {
        let p = CodeParams::new(12, 7, 3).unwrap();
        let pruned = graph_to_pruned(&Multigraph::empty(3), &p).unwrap();
        assert_eq!(pruned.m, 0);
        let t = p2f(&pruned, AttachPolicy::default()).unwrap();
        assert_eq!(t.local_checks.len(), 3);
        assert!(t.local_checks.iter().all(|c| c.len() == 4));
        assert_eq!(f2p(&t).unwrap().m, 0);
    }

    #[test]
    fn neighborhoods() {
        let t = FullTannerGraph::new(
            12,
            7,
            3,
            vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7], vec![8, 9, 10, 11], vec![2, 3, 4, 5]],
            1,
        )
        .unwrap();
        assert_eq!(neighborhood_size(&t, &[0, 1]).unwrap(), 8);
        assert_eq!(neighborhood_size(&t, &[0, 3]).unwrap(), 6);
        assert_eq!(neighborhood_size(&t, &[0, 4]).unwrap(), 12);
        assert!(matches!(
            neighborhood_size(&t, &[5]),
            Err(Error::UnknownCheck { check: 5, count: 5 })
        ));
    }

    #[test]
    fn single_check_reaches_singleton_bound() {
        let t = FullTannerGraph::new(4, 3, 3, vec![vec![0, 1, 2, 3]], 0).unwrap();
        assert_eq!(tanner_min_distance(&t).unwrap(), 2);
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(FullTannerGraph::new(6, 3, 3, vec![vec![0, 1, 2, 3]], 2).is_err());
        assert!(FullTannerGraph::new(6, 3, 3, vec![vec![0, 1, 2]], 2).is_err());
        assert!(FullTannerGraph::new(6, 3, 3, vec![vec![0, 1, 2, 3], vec![0, 1, 2, 3]], 1).is_err());
        let json = r#"{"n":6,"k":3,"r":3,"local_checks":[[0,1,2,3]],"global_count":2}"#;
        assert!(serde_json::from_str::<FullTannerGraph>(json).is_err());
        // degree-one variable
        assert!(PrunedGraph::new(6, 3, 3, 1, vec![vec![0], vec![]]).is_err());
        let p = CodeParams::new(6, 3, 3).unwrap();
        assert!(graph_to_pruned(&Multigraph::empty(2), &p).is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = graph_to_tanner(&double_edge(), &CodeParams::new(6, 3, 3).unwrap()).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<FullTannerGraph>(&s).unwrap(), t);
    }

    #[test]
    fn reduction_stops_at_n1() {
        let p = CodeParams::new(6, 3, 3).unwrap();
        let pruned = graph_to_pruned(&double_edge(), &p).unwrap();
        assert!(matches!(reduce_check_nodes(&pruned), Err(Error::NothingToReduce)));
        assert_eq!(refine(&pruned).unwrap(), pruned);
    }

    // Distance d* exactly when the graph is F_{k1,k2}-free, on every multigraph with n1 = 3 and n2 <= 3.
    #[test]
    fn distance_reflects_freeness() {
        let shapes = [(9, 4, 3), (10, 5, 3), (8, 3, 2), (9, 3, 3), (10, 7, 3), (9, 6, 3), (8, 5, 2), (7, 4, 2)];
        for (n, k, r) in shapes {
            let p = CodeParams::new(n, k, r).unwrap();
            assert_eq!(p.n1, 3);
            let pairs = [(0, 1), (0, 2), (1, 2)];
            let f = ForbiddenFamily::new(p.k1, p.k2).unwrap();
            let mut counts = vec![0; 3];
            loop {
                if counts.iter().sum::<usize>() == p.n2 {
                    let mut g = Multigraph::empty(3);
                    for (&(a, b), &c) in pairs.iter().zip(&counts) {
                        g.add_edges(a, b, c as u32).unwrap();
                    }
                    let d = tanner_min_distance(&graph_to_tanner(&g, &p).unwrap()).unwrap();
                    let free = g.is_family_free(&f).unwrap();
                    assert_eq!(d == p.d_star, free, "{p:?} {:?}", g.edge_list());
                    assert!(d <= p.d_star);
                }
                let mut i = 0;
                while i < 3 && counts[i] >= p.n2 {
                    counts[i] = 0;
                    i += 1;
                }
                if i == 3 {
                    break;
                }
                counts[i] += 1;
            }
        }
    }
}
