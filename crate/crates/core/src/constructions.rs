//! Witness graphs used by the decision rules.

use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// Sizes of `components` parts of `order` vertices differing by at most one,
/// largest first.
pub fn balanced_parts(order: usize, components: usize) -> Vec<usize> {
    let base = order / components;
    let extra = order % components;
    (0..components)
        .map(|i| if i < extra { base + 1 } else { base })
        .collect()
}

/// Forest of `components` paths whose orders differ by at most one.
pub fn balanced_forest(order: usize, components: usize) -> Result<Multigraph> {
    if components == 0 || components > order {
        return Err(Error::BadArgs(format!(
            "forest needs 1 <= components <= order, got {components} components on {order} vertices"
        )));
    }
    let mut g = Multigraph::empty(order);
    let mut start = 0;
    for len in balanced_parts(order, components) {
        for v in start..start + len - 1 {
            g.add_edge(v, v + 1)?;
        }
        start += len;
    }
    Ok(g)
}

/// `k`-density of a forest with the given tree orders: `k` minus the fewest
/// trees needed to gather `k` vertices.
pub fn forest_density(tree_orders: &[usize], k: usize) -> usize {
    let mut sorted = tree_orders.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut gathered = 0;
    for (taken, size) in sorted.iter().enumerate() {
        gathered += size;
        if gathered >= k {
            return k - (taken + 1);
        }
    }
    // fewer than k vertices in total
    gathered.saturating_sub(sorted.len())
}

/// Cycle on `order` vertices. Order two gives a double edge.
pub fn cycle_graph(order: usize) -> Result<Multigraph> {
    if order < 2 {
        return Err(Error::BadArgs(format!("cycle needs order >= 2, got {order}")));
    }
    let mut g = Multigraph::empty(order);
    for v in 0..order {
        g.add_edge(v, (v + 1) % order)?;
    }
    Ok(g)
}

/// `k`-density of [`cycle_graph`]`(order)` without building it.
pub fn cycle_density(order: usize, k: usize) -> usize {
    if k >= order {
        order
    } else {
        k.saturating_sub(1)
    }
}

/// Every unordered pair carries exactly `pair_multiplicity` edges.
pub fn saturated_pair_graph(order: usize, pair_multiplicity: u32) -> Multigraph {
    let mut g = Multigraph::empty(order);
    for u in 0..order {
        for v in u + 1..order {
            g.add_edges(u, v, pair_multiplicity).expect("in range");
        }
    }
    g
}

/// Complete multipartite graph with `parts` balanced parts.
pub fn turan_graph(order: usize, parts: usize) -> Result<Multigraph> {
    if parts == 0 || parts > order {
        return Err(Error::BadArgs(format!(
            "Turan graph needs 1 <= parts <= order, got {parts} parts on {order} vertices"
        )));
    }
    let mut part_of = Vec::with_capacity(order);
    for (p, len) in balanced_parts(order, parts).into_iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, len));
    }
    let mut g = Multigraph::empty(order);
    for u in 0..order {
        for v in u + 1..order {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Number of edges of [`turan_graph`]`(order, parts)`.
pub fn turan_size(order: usize, parts: usize) -> usize {
    if parts == 0 {
        return 0;
    }
    let inside: usize = balanced_parts(order, parts)
        .iter()
        .map(|&s| s * s.saturating_sub(1) / 2)
        .sum();
    order * order.saturating_sub(1) / 2 - inside
}

/// Degree sequence kept in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::BadArgs("degree sequence must be non-empty".into()));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence { degrees })
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn max(&self) -> usize {
        self.degrees[0]
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

/// A sequence is the degree sequence of some loopless multigraph iff its sum
/// is even and the maximum does not exceed the sum of the others.
pub fn is_graphic(d: &DegreeSequence) -> bool {
    let sum = d.sum();
    sum.is_multiple_of(2) && d.max() <= sum - d.max()
}

/// Realizes a graphic sequence by repeatedly joining the two vertices with
/// the largest residual degree. Vertex `i` of the result has degree
/// `d.degrees()[i]`.
pub fn realize(d: &DegreeSequence) -> Result<Multigraph> {
    if !is_graphic(d) {
        return Err(Error::NotGraphic);
    }
    let n = d.degrees.len();
    let mut g = Multigraph::empty(n);
    // ties go to the lower index
    let mut heap: BinaryHeap<(usize, std::cmp::Reverse<usize>)> = d
        .degrees
        .iter()
        .enumerate()
        .filter(|(_, &deg)| deg > 0)
        .map(|(v, &deg)| (deg, std::cmp::Reverse(v)))
        .collect();
    while let Some((da, std::cmp::Reverse(a))) = heap.pop() {
        let (db, std::cmp::Reverse(b)) = heap.pop().ok_or(Error::NotGraphic)?;
        g.add_edge(a, b)?;
        if da > 1 {
            heap.push((da - 1, std::cmp::Reverse(a)));
        }
        if db > 1 {
            heap.push((db - 1, std::cmp::Reverse(b)));
        }
    }
    Ok(g)
}

/// Almost-regular multigraph of the given order and size: `2·size mod order`
/// vertices of degree `ceil(2·size/order)`, the rest `floor(2·size/order)`.
pub fn almost_regular(order: usize, size: usize) -> Result<Multigraph> {
    if size == 0 {
        return Ok(Multigraph::empty(order));
    }
    if order < 2 {
        return Err(Error::BadArgs(format!(
            "no loopless multigraph of order {order} has {size} edges"
        )));
    }
    let low = 2 * size / order;
    let high_count = 2 * size % order;
    // with low == 0 only the degree-one vertices need to be realized
    let active = if low == 0 { high_count } else { order };
    let degrees: Vec<usize> = (0..active)
        .map(|i| if i < high_count { low + 1 } else { low })
        .collect();
    realize(&DegreeSequence::new(degrees)?)?.with_order(order)
}
