//! Exact extremal numbers for small orders by exhaustive search.
//!
//! Three queries are supported:
//!
//! * `eX(n, F_{k,s})`: most edges of an `n`-vertex multigraph in which every
//!   `k`-subset induces at most `s` edges;
//! * `ex(n, F_{k,s})`: the same over simple graphs;
//! * `ex(n, C_k)`: most edges of a simple graph with no cycle of length at
//!   most `k`.
//!
//! The search assigns multiplicities to vertex pairs in lexicographic order.
//! Labelings are restricted to those with non-increasing vertex degrees,
//! which every graph admits, so each isomorphism class is still reached.
//! A maximum is found by asking "is there a free graph with exactly `m`
//! edges?" for growing `m`, starting from the optimum one order lower and
//! stopping at the first infeasible `m` or at the averaging upper bound
//! `floor(n · opt(n-1) / (n-2))`. Knowing `opt(n-1)` also bounds every
//! degree from below by `m - opt(n-1)`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::{ForbiddenFamily, Multigraph};

/// Largest order the oracles accept.
pub const ORACLE_ENVELOPE: usize = 10;

/// What the searched graphs must avoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Query {
    /// Multigraphs free of `F_{order,max_size}`.
    Multigraph { family: ForbiddenFamily },
    /// Simple graphs free of `F_{order,max_size}`.
    Simple { family: ForbiddenFamily },
    /// Simple graphs of girth greater than `k`.
    Girth { k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    pub value: usize,
    pub witness: Multigraph,
    /// `false` only when a node budget cut the search short; `value` is then
    /// a lower bound.
    pub exhaustive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Ceil,
    Floor,
}

/// Result of a fixed-size existence search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(Multigraph),
    Infeasible,
    BudgetExceeded,
}

/// Memoizing front end to the exact searches.
pub struct Oracle {
    pool: Option<rayon::ThreadPool>,
    node_budget: Option<u64>,
    maxima: Mutex<HashMap<(usize, Query), ExtremalResult>>,
    found: Mutex<HashMap<(usize, Query, usize), Search>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(1)
    }
}

impl Oracle {
    /// `jobs > 1` fans the search out over a dedicated thread pool. Results
    /// do not depend on `jobs`.
    pub fn new(jobs: usize) -> Self {
        let pool = if jobs > 1 {
            rayon::ThreadPoolBuilder::new().num_threads(jobs).build().ok()
        } else {
            None
        };
        Oracle {
            pool,
            node_budget: None,
            maxima: Mutex::new(HashMap::new()),
            found: Mutex::new(HashMap::new()),
        }
    }

    /// Caps the number of search nodes per existence query.
    pub fn with_node_budget(mut self, budget: u64) -> Self {
        self.node_budget = Some(budget);
        self
    }

    /// Exact maximum size over graphs of the given order satisfying `query`.
    pub fn max_size(&self, order: usize, query: Query) -> Result<ExtremalResult> {
        validate(order, query)?;
        if let Some(hit) = self.maxima.lock().unwrap().get(&(order, query)) {
            return Ok(hit.clone());
        }
        let prev = if order > base_order(query) {
            Some(self.max_size(order - 1, query)?)
        } else {
            None
        };
        let upper = upper_bound(order, query, prev.as_ref().map(|p| p.value));
        let mut best = match &prev {
            Some(p) => p.witness.with_order(order)?,
            None => Multigraph::empty(order),
        };
        let mut exhaustive = prev.as_ref().is_none_or(|p| p.exhaustive);
        for target in best.size() + 1..=upper {
            let min_degree = prev.as_ref().map_or(0, |p| target.saturating_sub(p.value));
            match self.run(order, query, target, min_degree) {
                Search::Found(g) => best = g,
                Search::Infeasible => break,
                Search::BudgetExceeded => {
                    exhaustive = false;
                    break;
                }
            }
        }
        let result = ExtremalResult {
            value: best.size(),
            witness: best,
            exhaustive,
        };
        self.maxima
            .lock()
            .unwrap()
            .insert((order, query), result.clone());
        Ok(result)
    }

    /// Looks for a graph with exactly `size` edges satisfying `query`;
    /// returns the first one in search order.
    pub fn find(&self, order: usize, query: Query, size: usize) -> Result<Search> {
        if order > ORACLE_ENVELOPE {
            return Err(Error::EnvelopeExceeded {
                what: "order",
                value: order,
                limit: ORACLE_ENVELOPE,
            });
        }
        if let Query::Girth { k } = query {
            if k < 3 {
                return Err(Error::BadArgs(format!("girth bound k must be >= 3, got {k}")));
            }
        }
        let key = (order, query, size);
        if let Some(hit) = self.found.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        // reuse a known optimum when there is one
        let known = self.maxima.lock().unwrap().get(&(order, query)).cloned();
        let outcome = match known {
            Some(best) if best.exhaustive && size > best.value => Search::Infeasible,
            Some(best) if size == best.value => Search::Found(best.witness),
            _ => self.run(order, query, size, 0),
        };
        self.found.lock().unwrap().insert(key, outcome.clone());
        Ok(outcome)
    }

    fn run(&self, order: usize, query: Query, target: usize, min_degree: usize) -> Search {
        let searcher = Searcher::new(order, query, target, min_degree, self.node_budget);
        match &self.pool {
            Some(pool) => pool.install(|| searcher.run_parallel()),
            None => searcher.run_sequential(),
        }
    }
}

fn validate(order: usize, query: Query) -> Result<()> {
    if order > ORACLE_ENVELOPE {
        return Err(Error::EnvelopeExceeded {
            what: "order",
            value: order,
            limit: ORACLE_ENVELOPE,
        });
    }
    match query {
        Query::Multigraph { family } | Query::Simple { family } => {
            if family.order == 0 || family.order > order {
                return Err(Error::BadArgs(format!(
                    "forbidden order {} must lie in 1..={order}",
                    family.order
                )));
            }
            if family.order == 1 && matches!(query, Query::Multigraph { .. }) {
                return Err(Error::Unbounded(
                    "every multigraph is free of 1-vertex subgraphs".into(),
                ));
            }
        }
        Query::Girth { k } => {
            if k < 3 {
                return Err(Error::BadArgs(format!("girth bound k must be >= 3, got {k}")));
            }
        }
    }
    Ok(())
}

/// Smallest order at which the recursion bottoms out.
fn base_order(query: Query) -> usize {
    match query {
        Query::Multigraph { family } | Query::Simple { family } => family.order,
        Query::Girth { .. } => 1,
    }
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn upper_bound(order: usize, query: Query, prev: Option<usize>) -> usize {
    let mut bound = match query {
        Query::Multigraph { family } => {
            // k >= 2 here; each pair lies in C(n-2, k-2) of the k-subsets
            let k = family.order;
            (family.max_size * order * (order - 1)) / (k * (k - 1))
        }
        Query::Simple { family } => {
            let k = family.order;
            let pair_bound = pairs(order);
            if k >= 2 {
                pair_bound.min((family.max_size * order * (order - 1)) / (k * (k - 1)))
            } else {
                pair_bound
            }
        }
        Query::Girth { .. } => pairs(order),
    };
    if let Some(p) = prev {
        if order >= 3 {
            bound = bound.min(order * p / (order - 2));
        }
    }
    bound
}

/// Maximum size of an `F_{family}`-free multigraph of the given order.
pub fn max_size_multigraph(order: usize, family: ForbiddenFamily) -> Result<ExtremalResult> {
    Oracle::default().max_size(order, Query::Multigraph { family })
}

/// Maximum size of an `F_{family}`-free simple graph of the given order.
pub fn max_size_simple(order: usize, family: ForbiddenFamily) -> Result<ExtremalResult> {
    Oracle::default().max_size(order, Query::Simple { family })
}

/// Maximum size of a simple graph of the given order with girth above `k`.
pub fn max_size_girth(order: usize, k: usize) -> Result<ExtremalResult> {
    Oracle::default().max_size(order, Query::Girth { k })
}

/// Greedy min-degree deletion bound: starting from `t_{n1} = n2`, iterate
/// `t_{m-1} = t_m - round(2 t_m / m)` down to `m = k1 + 1` and return `t_{k1}`.
/// Every multigraph of order `n1` and size `n2` has a `k1`-vertex subgraph
/// with at least this many edges when rounding down.
pub fn t_bound(n1: usize, n2: usize, k1: usize, rounding: Rounding) -> Result<usize> {
    if k1 == 0 || k1 > n1 {
        return Err(Error::BadArgs(format!("t_bound needs 1 <= k1 <= n1, got k1={k1}, n1={n1}")));
    }
    let mut t = n2;
    let mut m = n1;
    while m > k1 {
        if t == 0 {
            break;
        }
        if rounding == Rounding::Floor && 2 * t < m {
            // floor(2t/m) = 0 until m drops to 2t
            m = (2 * t).max(k1);
            continue;
        }
        let removed = match rounding {
            Rounding::Ceil => (2 * t).div_ceil(m),
            Rounding::Floor => 2 * t / m,
        };
        t -= removed;
        m -= 1;
    }
    Ok(t)
}

#[derive(Clone)]
struct State {
    mult: Vec<u32>,
    deg: Vec<usize>,
    size: usize,
}

struct Searcher {
    n: usize,
    query: Query,
    target: usize,
    min_degree: usize,
    cap: u32,
    pairs: Vec<(usize, usize)>,
    budget: Option<u64>,
    nodes: AtomicU64,
    aborted: AtomicBool,
}

impl Searcher {
    fn new(n: usize, query: Query, target: usize, min_degree: usize, budget: Option<u64>) -> Self {
        let cap = match query {
            Query::Multigraph { family } if family.order >= 2 => family.max_size.min(target),
            Query::Multigraph { .. } => target,
            Query::Simple { .. } | Query::Girth { .. } => 1.min(target),
        };
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j));
            }
        }
        Searcher {
            n,
            query,
            target,
            min_degree,
            cap: cap.min(u32::MAX as usize) as u32,
            pairs,
            budget,
            nodes: AtomicU64::new(0),
            aborted: AtomicBool::new(false),
        }
    }

    fn fresh(&self) -> State {
        State {
            mult: vec![0; self.n * self.n],
            deg: vec![0; self.n],
            size: 0,
        }
    }

    fn outcome(&self, found: Option<State>) -> Search {
        match found {
            Some(st) => Search::Found(self.to_graph(&st)),
            None if self.aborted.load(Ordering::Relaxed) => Search::BudgetExceeded,
            None => Search::Infeasible,
        }
    }

    fn run_sequential(&self) -> Search {
        let mut st = self.fresh();
        let found = self.dfs(&mut st, 0).then_some(st);
        self.outcome(found)
    }

    /// Splits after the first row, then takes the first success in
    /// sequential order so the witness matches [`Self::run_sequential`].
    fn run_parallel(&self) -> Search {
        let split = self.n.saturating_sub(1).min(self.pairs.len());
        let mut prefixes = Vec::new();
        let mut st = self.fresh();
        self.collect(&mut st, 0, split, &mut prefixes);
        let found = prefixes.into_par_iter().find_map_first(|mut st| {
            if self.dfs(&mut st, split) {
                Some(st)
            } else {
                None
            }
        });
        self.outcome(found)
    }

    fn to_graph(&self, st: &State) -> Multigraph {
        let mut g = Multigraph::empty(self.n);
        for &(i, j) in &self.pairs {
            g.add_edges(i, j, st.mult[i * self.n + j]).expect("in range");
        }
        g
    }

    /// Checks made once the row of vertex `v` is complete.
    fn row_done_ok(&self, st: &State, v: usize) -> bool {
        let d = st.deg[v];
        if d < self.min_degree {
            return false;
        }
        if v > 0 && d > st.deg[v - 1] {
            return false;
        }
        // vertices after v end with degree at most d
        let fixed: usize = st.deg[..=v].iter().sum();
        fixed + (self.n - 1 - v) * d >= 2 * self.target
    }

    fn tick(&self) -> bool {
        if let Some(limit) = self.budget {
            if self.nodes.fetch_add(1, Ordering::Relaxed) >= limit {
                self.aborted.store(true, Ordering::Relaxed);
            }
        }
        !self.aborted.load(Ordering::Relaxed)
    }

    fn collect(&self, st: &mut State, p: usize, stop: usize, out: &mut Vec<State>) {
        if p == stop {
            out.push(st.clone());
            return;
        }
        self.branch(st, p, &mut |s, next| {
            self.collect(s, next, stop, out);
            false
        });
    }

    fn dfs(&self, st: &mut State, p: usize) -> bool {
        if !self.tick() {
            return false;
        }
        if p == self.pairs.len() {
            if st.size != self.target {
                return false;
            }
            return (0..self.n).all(|v| self.row_done_ok(st, v));
        }
        self.branch(st, p, &mut |s, next| self.dfs(s, next))
    }

    /// Tries every admissible multiplicity of pair `p`,
    /// calling `descend` after each; stops when it returns `true`.
    fn branch(
        &self,
        st: &mut State,
        p: usize,
        descend: &mut dyn FnMut(&mut State, usize) -> bool,
    ) -> bool {
        let n = self.n;
        let (i, j) = self.pairs[p];
        // first pair of row i: row i-1 is now complete
        if j == i + 1 && i > 0 && !self.row_done_ok(st, i - 1) {
            return false;
        }
        let degree_cap = if i > 0 { st.deg[i - 1] } else { usize::MAX };
        let remaining_in_row = n - 1 - j;
        let budget_left = self.target - st.size;
        let mut hi = (self.cap as usize).min(budget_left);
        if degree_cap != usize::MAX {
            hi = hi.min(degree_cap - st.deg[i].min(degree_cap));
            hi = hi.min(degree_cap - st.deg[j].min(degree_cap));
        }
        // simple edges first, so witnesses avoid parallel edges when they can
        let order = (hi >= 1)
            .then_some(1)
            .into_iter()
            .chain((2..=hi).rev())
            .chain(std::iter::once(0));
        for v in order {
            // vertex i must still be able to reach the minimum degree
            if st.deg[i] + v + remaining_in_row * (self.cap as usize) < self.min_degree {
                continue;
            }
            if v > 0 && !self.admits(st, i, j, v as u32) {
                continue;
            }
            self.set(st, i, j, v as u32);
            let ok = self.room_left(st, p + 1, degree_cap) && descend(st, p + 1);
            if ok {
                return true;
            }
            self.set(st, i, j, 0);
            if self.aborted.load(Ordering::Relaxed) {
                return false;
            }
        }
        false
    }

    fn set(&self, st: &mut State, i: usize, j: usize, v: u32) {
        let n = self.n;
        let old = st.mult[i * n + j];
        st.mult[i * n + j] = v;
        st.mult[j * n + i] = v;
        st.deg[i] = st.deg[i] + v as usize - old as usize;
        st.deg[j] = st.deg[j] + v as usize - old as usize;
        st.size = st.size + v as usize - old as usize;
    }

    /// Remaining pairs can still supply the missing edges.
    fn room_left(&self, st: &State, next: usize, degree_cap: usize) -> bool {
        let missing = self.target - st.size;
        if missing == 0 {
            return true;
        }
        if next == self.pairs.len() {
            return false;
        }
        let slots = self.pairs.len() - next;
        if slots * (self.cap as usize) < missing {
            return false;
        }
        if degree_cap == usize::MAX {
            return true;
        }
        // every remaining edge joins two vertices at or after the current row
        let first = self.pairs[next].0;
        let spare: usize = st.deg[first..]
            .iter()
            .map(|&d| degree_cap.saturating_sub(d))
            .sum();
        spare >= 2 * missing
    }

    /// Would setting pair `(i, j)` to multiplicity `v` keep the graph valid?
    fn admits(&self, st: &State, i: usize, j: usize, v: u32) -> bool {
        match self.query {
            Query::Multigraph { family } | Query::Simple { family } => {
                let k = family.order;
                if k < 2 || k > self.n {
                    return true;
                }
                let base = v as usize;
                if base > family.max_size {
                    return false;
                }
                let others: Vec<usize> = (0..self.n).filter(|&t| t != i && t != j).collect();
                let mut chosen = Vec::with_capacity(k - 2);
                self.densest_with(st, i, j, &others, k - 2, 0, &mut chosen, base) <= family.max_size
            }
            Query::Girth { k } => {
                debug_assert_eq!(v, 1);
                self.distance_at_least(st, i, j, k)
            }
        }
    }

    /// Largest induced size of `{i, j} ∪ T` over `need`-subsets `T` of
    /// `others`; stops early once the family bound is exceeded.
    #[allow(clippy::too_many_arguments)]
    fn densest_with(
        &self,
        st: &State,
        i: usize,
        j: usize,
        others: &[usize],
        need: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        current: usize,
    ) -> usize {
        if need == 0 {
            return current;
        }
        let n = self.n;
        let mut best = current;
        for idx in start..=(others.len() - need) {
            let t = others[idx];
            let gain = st.mult[i * n + t] as usize
                + st.mult[j * n + t] as usize
                + chosen.iter().map(|&c| st.mult[c * n + t] as usize).sum::<usize>();
            chosen.push(t);
            let got = self.densest_with(st, i, j, others, need - 1, idx + 1, chosen, current + gain);
            chosen.pop();
            best = best.max(got);
            if let Query::Multigraph { family } | Query::Simple { family } = self.query {
                if best > family.max_size {
                    return best;
                }
            }
        }
        best
    }

    /// No path of fewer than `k` edges joins `i` and `j`, so a new edge
    /// closes no cycle of length at most `k`.
    fn distance_at_least(&self, st: &State, i: usize, j: usize, k: usize) -> bool {
        let n = self.n;
        let mut dist = vec![usize::MAX; n];
        let mut frontier = vec![i];
        dist[i] = 0;
        let mut depth = 0;
        while !frontier.is_empty() && depth + 1 < k {
            depth += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for w in 0..n {
                    if st.mult[u * n + w] > 0 && dist[w] == usize::MAX {
                        if w == j {
                            return false;
                        }
                        dist[w] = depth;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(k: usize, s: usize) -> ForbiddenFamily {
        ForbiddenFamily::new(k, s).unwrap()
    }

    // Independent oracle: enumerate every simple graph on n <= 6 vertices.
    fn brute_simple(n: usize, ok: impl Fn(&Multigraph) -> bool) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut best = 0;
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if edges.len() <= best {
                continue;
            }
            let g = Multigraph::from_edges(n, &edges).unwrap();
            if ok(&g) {
                best = edges.len();
            }
        }
        best
    }

    fn has_short_cycle(g: &Multigraph, k: usize) -> bool {
        // a cycle of length <= k exists iff some edge (u,v) has another u-v
        // path of length <= k-1
        for (u, v) in g.edge_list() {
            let mut h = Multigraph::empty(g.order());
            for (a, b) in g.edge_list() {
                if (a, b) != (u, v) {
                    h.add_edge(a, b).unwrap();
                }
            }
            let mut dist = vec![usize::MAX; g.order()];
            dist[u] = 0;
            let mut queue = std::collections::VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                for y in 0..g.order() {
                    if h.multiplicity(x, y) > 0 && dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            if dist[v] < k {
                return true;
            }
        }
        false
    }

    #[test]
    fn mantel_small() {
        let r = max_size_multigraph(4, fam(3, 2)).unwrap();
        assert_eq!(r.value, 4);
        assert!(r.exhaustive);
        assert!(r
            .witness
            .is_isomorphic(&crate::constructions::cycle_graph(4).unwrap()));
        assert_eq!(max_size_multigraph(5, fam(3, 2)).unwrap().value, 6);
        assert_eq!(max_size_multigraph(3, fam(2, 0)).unwrap().value, 0);
    }

    #[test]
    fn simple_examples() {
        assert_eq!(max_size_simple(4, fam(3, 2)).unwrap().value, 4);
        // C5 itself is a 5-subset with 5 edges, so the optimum is a tree
        assert_eq!(max_size_simple(5, fam(5, 4)).unwrap().value, 4);
        assert_eq!(max_size_simple(3, fam(3, 2)).unwrap().value, 2);
    }

    #[test]
    fn girth_examples() {
        let r = max_size_girth(5, 4).unwrap();
        assert_eq!(r.value, 5);
        assert!(r.witness.is_isomorphic(&crate::constructions::cycle_graph(5).unwrap()));
        assert_eq!(max_size_girth(5, 5).unwrap().value, 4);
        assert_eq!(max_size_girth(4, 3).unwrap().value, 4);
    }

    #[test]
    fn simple_family_matches_enumeration() {
        for n in 2..=6 {
            for k in 2..=n {
                for s in 0..=k * (k - 1) / 2 {
                    let f = fam(k, s);
                    let brute = brute_simple(n, |g| g.is_family_free(&f).unwrap());
                    assert_eq!(max_size_simple(n, f).unwrap().value, brute, "n={n} k={k} s={s}");
                }
            }
        }
    }

    #[test]
    fn girth_matches_enumeration() {
        for n in 1..=6 {
            for k in 3..=6 {
                let brute = brute_simple(n, |g| !has_short_cycle(g, k));
                assert_eq!(max_size_girth(n, k).unwrap().value, brute, "n={n} k={k}");
            }
        }
    }

    // Multigraph oracle: every multiplicity matrix with entries <= cap.
    fn brute_multi(n: usize, f: ForbiddenFamily, cap: u32) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let base = cap as usize + 1;
        let total = base.pow(pairs.len() as u32);
        let mut best = 0;
        for code in 0..total {
            let mut c = code;
            let mut g = Multigraph::empty(n);
            for &(u, v) in &pairs {
                g.add_edges(u, v, (c % base) as u32).unwrap();
                c /= base;
            }
            if g.size() > best && g.is_family_free(&f).unwrap() {
                best = g.size();
            }
        }
        best
    }

    #[test]
    fn multigraph_matches_enumeration() {
        for n in 2..=5 {
            for k in 2..=n {
                for s in 0..=3 {
                    let f = fam(k, s);
                    let brute = brute_multi(n, f, s as u32);
                    assert_eq!(max_size_multigraph(n, f).unwrap().value, brute, "n={n} k={k} s={s}");
                }
            }
        }
    }

    #[test]
    fn witnesses_satisfy_their_query() {
        let oracle = Oracle::default();
        for n in 3..=7 {
            for k in 2..=n.min(5) {
                for s in 0..=3 {
                    let q = Query::Multigraph { family: fam(k, s) };
                    let r = oracle.max_size(n, q).unwrap();
                    assert_eq!(r.witness.size(), r.value);
                    assert!(r.witness.is_family_free(&fam(k, s)).unwrap());
                }
            }
            let r = oracle.max_size(n, Query::Girth { k: 4 }).unwrap();
            assert!(!has_short_cycle(&r.witness, 4));
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq = Oracle::new(1);
        let par = Oracle::new(3);
        for n in 5..=7 {
            for (k, s) in [(3, 2), (4, 3), (4, 4), (5, 5)] {
                let q = Query::Multigraph { family: fam(k, s) };
                let a = seq.max_size(n, q).unwrap();
                let b = par.max_size(n, q).unwrap();
                assert_eq!(a, b, "n={n} k={k} s={s}");
            }
        }
    }

    #[test]
    fn find_returns_exact_size() {
        let oracle = Oracle::default();
        let q = Query::Multigraph { family: fam(3, 2) };
        match oracle.find(5, q, 6).unwrap() {
            Search::Found(g) => {
                assert_eq!(g.size(), 6);
                assert!(g.is_family_free(&fam(3, 2)).unwrap());
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(oracle.find(5, q, 7).unwrap(), Search::Infeasible);
    }

    #[test]
    fn budget_marks_non_exhaustive() {
        let oracle = Oracle::default().with_node_budget(5);
        let r = oracle
            .max_size(7, Query::Multigraph { family: fam(3, 2) })
            .unwrap();
        assert!(!r.exhaustive);
        assert!(r.witness.is_family_free(&fam(3, 2)).unwrap());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            max_size_multigraph(11, fam(3, 2)),
            Err(Error::EnvelopeExceeded { .. })
        ));
        assert!(matches!(
            max_size_multigraph(4, fam(1, 0)),
            Err(Error::Unbounded(_))
        ));
        assert!(max_size_multigraph(3, fam(4, 1)).is_err());
        assert!(max_size_girth(5, 2).is_err());
        assert_eq!(max_size_simple(4, fam(1, 0)).unwrap().value, 6);
    }

    #[test]
    fn t_bound_examples() {
        assert_eq!(t_bound(5, 7, 3, Rounding::Ceil).unwrap(), 2);
        assert_eq!(t_bound(5, 7, 3, Rounding::Floor).unwrap(), 3);
        for n2 in 0..10 {
            assert_eq!(t_bound(6, n2, 6, Rounding::Ceil).unwrap(), n2);
            assert_eq!(t_bound(6, n2, 6, Rounding::Floor).unwrap(), n2);
        }
        assert!(t_bound(3, 1, 4, Rounding::Floor).is_err());
        assert!(t_bound(3, 1, 0, Rounding::Floor).is_err());
    }

    // The shortcuts in t_bound must agree with plain iteration.
    #[test]
    fn t_bound_matches_plain_recursion() {
        fn plain(n1: usize, n2: usize, k1: usize, r: Rounding) -> usize {
            let mut t = n2;
            for m in (k1 + 1..=n1).rev() {
                t -= match r {
                    Rounding::Ceil => (2 * t).div_ceil(m),
                    Rounding::Floor => 2 * t / m,
                };
            }
            t
        }
        for n1 in 1..40 {
            for k1 in 1..=n1 {
                for n2 in 0..30 {
                    for r in [Rounding::Ceil, Rounding::Floor] {
                        assert_eq!(t_bound(n1, n2, k1, r).unwrap(), plain(n1, n2, k1, r));
                    }
                }
            }
        }
    }
}
