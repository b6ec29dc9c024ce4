//! Loopless multigraphs and the induced-size queries the decision problem is
//! phrased in.
//!
//! A [`Multigraph`] of order `n1` and size `n2` corresponds to a refined
//! pruned Tanner graph: vertices are local check nodes and every edge is a
//! degree-two variable node. The code is optimal exactly when no `k1`-vertex
//! subset induces more than `k2` edges, i.e. when the graph is
//! [`ForbiddenFamily`]-free.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Loopless multigraph stored as a sparse map from ordered pairs `u < v` to
/// positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multigraph {
    order: usize,
    mult: BTreeMap<(usize, usize), u32>,
    size: usize,
}

/// The family of all multigraphs of order `order` with more than `max_size`
/// edges. A graph is free of it when every `order`-subset of its vertices
/// induces at most `max_size` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ForbiddenFamily {
    pub order: usize,
    pub max_size: usize,
}

impl ForbiddenFamily {
    pub fn new(order: usize, max_size: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::BadArgs("forbidden family order must be >= 1".into()));
        }
        Ok(ForbiddenFamily { order, max_size })
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Multigraph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Multigraph {
            order,
            mult: BTreeMap::new(),
            size: 0,
        }
    }

    /// Builds a graph from an edge list; repeated pairs add multiplicity.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Multigraph::empty(order);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.add_edges(u, v, 1)
    }

    /// Adds `count` parallel edges between `u` and `v`.
    pub fn add_edges(&mut self, u: usize, v: usize, count: u32) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        if count > 0 {
            *self.mult.entry(ordered(u, v)).or_insert(0) += count;
            self.size += count as usize;
        }
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            Err(Error::UnknownVertex {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges counted with multiplicity.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        if u == v {
            return 0;
        }
        self.mult.get(&ordered(u, v)).copied().unwrap_or(0)
    }

    /// Distinct adjacent pairs `(u, v, multiplicity)` with `u < v`, in
    /// lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.mult.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    /// All edges with parallel edges repeated, lexicographically ordered.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size);
        for (u, v, m) in self.pairs() {
            for _ in 0..m {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees()[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.order];
        for (u, v, m) in self.pairs() {
            deg[u] += m as usize;
            deg[v] += m as usize;
        }
        deg
    }

    /// Vertices of positive degree, ascending.
    pub fn non_isolated(&self) -> Vec<usize> {
        let mut seen = std::collections::BTreeSet::new();
        for (u, v, _) in self.pairs() {
            seen.insert(u);
            seen.insert(v);
        }
        seen.into_iter().collect()
    }

    /// `true` when all vertex degrees differ by at most one.
    pub fn is_almost_regular(&self) -> bool {
        let deg = self.degrees();
        match (deg.iter().min(), deg.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    }

    /// The subgraph formed by the first `size` edges of [`Self::edge_list`].
    pub fn truncated(&self, size: usize) -> Self {
        let mut g = Multigraph::empty(self.order);
        for (u, v) in self.edge_list().into_iter().take(size) {
            g.add_edge(u, v).expect("edge of a valid graph");
        }
        g
    }

    /// Same edges on a larger vertex set.
    pub fn with_order(&self, order: usize) -> Result<Self> {
        if let Some(v) = self.mult.keys().map(|&(_, v)| v).max() {
            if v >= order {
                return Err(Error::UnknownVertex { vertex: v, order });
            }
        }
        Ok(Multigraph {
            order,
            mult: self.mult.clone(),
            size: self.size,
        })
    }

    /// Number of edges with both endpoints in `vertices`.
    pub fn induced_size(&self, vertices: &[usize]) -> Result<usize> {
        let mut inside = vec![false; self.order];
        for &v in vertices {
            self.check_vertex(v)?;
            inside[v] = true;
        }
        Ok(self
            .pairs()
            .filter(|&(u, v, _)| inside[u] && inside[v])
            .map(|(_, _, m)| m as usize)
            .sum())
    }

    /// Maximum induced size over all `k`-vertex subsets, by exhaustive
    /// enumeration. Isolated vertices never contribute, so only subsets of
    /// the non-isolated vertices are enumerated.
    pub fn k_density(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.order {
            return Err(Error::BadK {
                k,
                order: self.order,
            });
        }
        let active = self.non_isolated();
        if k >= active.len() {
            return Ok(self.size);
        }
        let w = active.len();
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in active.iter().enumerate() {
            index[v] = i;
        }
        let mut dense = vec![0usize; w * w];
        for (u, v, m) in self.pairs() {
            let (a, b) = (index[u], index[v]);
            dense[a * w + b] = m as usize;
            dense[b * w + a] = m as usize;
        }
        let mut chosen = Vec::with_capacity(k);
        let mut best = 0;
        densest(&dense, w, k, 0, &mut chosen, 0, &mut best);
        Ok(best)
    }

    /// `true` iff no `f.order`-subset induces more than `f.max_size` edges.
    pub fn is_family_free(&self, f: &ForbiddenFamily) -> Result<bool> {
        Ok(self.k_density(f.order)? <= f.max_size)
    }

    /// Exact isomorphism test: vertices are bucketed by degree, then a
    /// backtracking search maps bucket to bucket.
    pub fn is_isomorphic(&self, other: &Multigraph) -> bool {
        if self.order != other.order || self.size != other.size {
            return false;
        }
        let da = self.degrees();
        let db = other.degrees();
        let mut sa = da.clone();
        let mut sb = db.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
        let n = self.order;
        let mut order: Vec<usize> = (0..n).collect();
        // most constrained (highest degree) first
        order.sort_by_key(|&v| std::cmp::Reverse(da[v]));
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        iso_extend(self, other, &da, &db, &order, 0, &mut map, &mut used)
    }
}

fn densest(
    dense: &[usize],
    w: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    current: usize,
    best: &mut usize,
) {
    if chosen.len() == k {
        *best = (*best).max(current);
        return;
    }
    let need = k - chosen.len();
    for v in start..=(w - need) {
        let gain: usize = chosen.iter().map(|&u| dense[u * w + v]).sum();
        chosen.push(v);
        densest(dense, w, k, v + 1, chosen, current + gain, best);
        chosen.pop();
    }
}

#[allow(clippy::too_many_arguments)]
fn iso_extend(
    a: &Multigraph,
    b: &Multigraph,
    da: &[usize],
    db: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..b.order {
        if used[w] || db[w] != da[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.multiplicity(u, v) == b.multiplicity(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if iso_extend(a, b, da, db, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// On-disk form: `{"order": N, "edges": [[u, v], ...]}`, repeated pairs
/// encoding multiplicity.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    pub order: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Multigraph> for GraphFile {
    fn from(g: &Multigraph) -> Self {
        GraphFile {
            order: g.order,
            edges: g.edge_list().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphFile> for Multigraph {
    type Error = Error;

    fn try_from(f: GraphFile) -> Result<Self> {
        let edges: Vec<(usize, usize)> = f.edges.iter().map(|e| (e[0], e[1])).collect();
        Multigraph::from_edges(f.order, &edges)
    }
}

impl Serialize for Multigraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphFile::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multigraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = GraphFile::deserialize(d)?;
        Multigraph::try_from(file).map_err(serde::de::Error::custom)
    }
}
