//! Prime-field parity-check matrices realizing a Tanner graph, with
//! exhaustive distance and locality checks and single-erasure repair.
//!
//! Nonzero entries are drawn uniformly from `GF(q)*` on the Tanner
//! adjacencies. If the Tanner graph has distance `d`, each set of `d - 1`
//! columns fails to be independent with probability at most `(d-1)/q`
//! (Schwartz-Zippel on a matched square minor), so a draw fails with
//! probability at most `eps = (d-1) C(n, d-1) / q`. The default field takes
//! `q` just above `(d-1) C(n, d-1)`, where that bound is barely below one;
//! the observed rate is far better. Supplying a smaller field raises `eps`
//! and `max_retries` then buys `1 - eps^max_retries`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::decider::{Decider, Decision, Status};
use crate::error::{Error, Result};
use crate::params::CodeParams;
use crate::tanner::{graph_to_tanner, FullTannerGraph};

/// Largest `n` accepted by [`min_distance`].
pub const LENGTH_ENVELOPE: usize = 20;
/// Largest claimed distance accepted by [`min_distance`].
pub const DISTANCE_ENVELOPE: usize = 8;

/// Deterministic Miller-Rabin; these bases are exact for all of `u64`.
pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if q.is_multiple_of(b) {
            return q == b;
        }
    }
    let mut d = q - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'bases: for &a in &BASES {
        let mut x = pow_mod(a, d, q);
        if x == 1 || x == q - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, q);
            if x == q - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1 % q;
    a %= q;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, q);
        }
        a = mul_mod(a, a, q);
        e >>= 1;
    }
    acc
}

/// `C(n, k)`, or `None` on overflow.
fn binomial(n: u64, k: u64) -> Option<u128> {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i + 1) as u128;
    }
    Some(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if is_prime(q) {
            Ok(PrimeField { q })
        } else {
            Err(Error::NotPrime(q))
        }
    }

    /// Smallest prime above `(d* - 1) C(n, d* - 1)`.
    pub fn default_for(p: &CodeParams) -> Result<Self> {
        let d = (p.d_star - 1) as u64;
        let bound = binomial(p.n as u64, d)
            .and_then(|c| c.checked_mul(d as u128))
            .filter(|&b| b < u64::MAX as u128 - 1_000)
            .ok_or(Error::FieldTooLarge)?;
        let mut q = bound as u64 + 1;
        while !is_prime(q) {
            q = q.checked_add(1).ok_or(Error::FieldTooLarge)?;
        }
        Ok(PrimeField { q })
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.q as u128) as u64
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.q - b % self.q)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.q)
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.q));
        pow_mod(a, self.q - 2, self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    pub params: CodeParams,
    pub field: PrimeField,
    /// `(n - k) x n`; local rows come first.
    pub h: Vec<Vec<u64>>,
    pub claimed_distance: usize,
    pub verified: bool,
}

#[derive(Serialize, Deserialize)]
struct CodeFile {
    n: usize,
    k: usize,
    r: usize,
    q: u64,
    #[serde(rename = "H")]
    h: Vec<Vec<u64>>,
    claimed_distance: usize,
    verified: bool,
}

impl Serialize for LinearCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CodeFile {
            n: self.params.n,
            k: self.params.k,
            r: self.params.r,
            q: self.field.q,
            h: self.h.clone(),
            claimed_distance: self.claimed_distance,
            verified: self.verified,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let f = CodeFile::deserialize(d)?;
        LinearCode::new(
            CodeParams::new(f.n, f.k, f.r).map_err(serde::de::Error::custom)?,
            PrimeField::new(f.q).map_err(serde::de::Error::custom)?,
            f.h,
            f.claimed_distance,
            f.verified,
        )
        .map_err(serde::de::Error::custom)
    }
}

impl LinearCode {
    /// Checks the matrix shape and entry range only.
    pub fn new(
        params: CodeParams,
        field: PrimeField,
        h: Vec<Vec<u64>>,
        claimed_distance: usize,
        verified: bool,
    ) -> Result<Self> {
        let rows = params.n - params.k;
        if h.len() != rows || h.iter().any(|row| row.len() != params.n) {
            return Err(Error::Malformed(format!(
                "H must be {rows} x {} for (n, k) = ({}, {})",
                params.n, params.n, params.k
            )));
        }
        if h.iter().flatten().any(|&x| x >= field.q) {
            return Err(Error::Malformed(format!("H entries must lie in [0, {})", field.q)));
        }
        Ok(LinearCode {
            params,
            field,
            h,
            claimed_distance,
            verified,
        })
    }

    pub fn rank(&self) -> usize {
        rank(&self.field, &self.h)
    }

    fn column(&self, j: usize) -> Vec<u64> {
        self.h.iter().map(|row| row[j]).collect()
    }
}

fn rank(f: &PrimeField, m: &[Vec<u64>]) -> usize {
    let mut basis = Basis::default();
    m.iter().filter(|row| basis.insert(f, (*row).clone())).count()
}

/// Echelon basis supporting incremental membership tests.
#[derive(Default, Clone)]
struct Basis {
    rows: Vec<(usize, Vec<u64>)>,
}

impl Basis {
    fn reduce(&self, f: &PrimeField, mut v: Vec<u64>) -> Vec<u64> {
        for (piv, b) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        v
    }

    /// Adds `v` if independent; returns whether it was.
    fn insert(&mut self, f: &PrimeField, v: Vec<u64>) -> bool {
        let mut v = self.reduce(f, v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[piv]);
        for x in &mut v {
            *x = f.mul(*x, inv);
        }
        self.rows.push((piv, v));
        true
    }
}

/// Uniform nonzero entries on the Tanner adjacencies; global rows last.
pub fn build_parity_check(t: &FullTannerGraph, field: PrimeField, seed: u64) -> LinearCode {
    build_with_stream(t, field, seed, 0)
}

fn build_with_stream(t: &FullTannerGraph, field: PrimeField, seed: u64, stream: u64) -> LinearCode {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut draw = || rng.gen_range(1..field.q);
    let mut h = Vec::with_capacity(t.n - t.k);
    for check in &t.local_checks {
        let mut row = vec![0; t.n];
        for &v in check {
            row[v] = draw();
        }
        h.push(row);
    }
    for _ in 0..t.global_count {
        h.push((0..t.n).map(|_| draw()).collect());
    }
    LinearCode {
        params: t.params(),
        field,
        h,
        claimed_distance: 0,
        verified: false,
    }
}

/// Exact minimum distance: the fewest linearly dependent columns of `H`.
///
/// Walks independent column sets in increasing index order; a set plus one
/// later column in its span is a minimal dependency. Branches that cannot
/// beat the best dependency found so far are cut.
pub fn min_distance(c: &LinearCode) -> Result<usize> {
    let n = c.params.n;
    if n > LENGTH_ENVELOPE {
        return Err(Error::EnvelopeExceeded {
            what: "n",
            value: n,
            limit: LENGTH_ENVELOPE,
        });
    }
    if c.claimed_distance > DISTANCE_ENVELOPE {
        return Err(Error::EnvelopeExceeded {
            what: "claimed distance",
            value: c.claimed_distance,
            limit: DISTANCE_ENVELOPE,
        });
    }
    let expected = n - c.params.k;
    let rank = c.rank();
    if rank != expected {
        return Err(Error::DegenerateCode { rank, expected });
    }
    let columns: Vec<Vec<u64>> = (0..n).map(|j| c.column(j)).collect();
    // any n - k + 1 columns of a rank n - k matrix are dependent
    let mut best = expected + 1;
    fn walk(f: &PrimeField, cols: &[Vec<u64>], basis: &Basis, start: usize, best: &mut usize) {
        let size = basis.rows.len();
        for j in start..cols.len() {
            if size + 1 >= *best {
                return;
            }
            let mut next = basis.clone();
            if !next.insert(f, cols[j].clone()) {
                *best = size + 1;
                return;
            }
            walk(f, cols, &next, j + 1, best);
        }
    }
    walk(&c.field, &columns, &Basis::default(), 0, &mut best);
    Ok(best)
}

/// Every coordinate has a nonzero coefficient in some row of weight at
/// most `r + 1`.
pub fn verify_locality(c: &LinearCode) -> bool {
    (0..c.params.n).all(|j| local_row(c, j).is_some())
}

fn local_row(c: &LinearCode, j: usize) -> Option<usize> {
    c.h.iter().position(|row| {
        row[j] != 0 && row.iter().filter(|&&x| x != 0).count() <= c.params.r + 1
    })
}

/// Systematic encoder from the reduced row echelon form of `H`.
#[derive(Debug, Clone)]
pub struct Encoder {
    field: PrimeField,
    n: usize,
    /// `(pivot column, reduced row)` for each parity position.
    pivots: Vec<(usize, Vec<u64>)>,
    /// Information positions in increasing order.
    pub info: Vec<usize>,
}

impl Encoder {
    pub fn new(c: &LinearCode) -> Result<Self> {
        let f = c.field;
        let n = c.params.n;
        let mut m = c.h.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..m.len()).find(|&i| m[i][col] != 0) else { continue };
            m.swap(row, p);
            let inv = f.inv(m[row][col]);
            for x in &mut m[row] {
                *x = f.mul(*x, inv);
            }
            for i in 0..m.len() {
                if i != row && m[i][col] != 0 {
                    let factor = m[i][col];
                    let pivot_row = m[row].clone();
                    for (x, y) in m[i].iter_mut().zip(pivot_row) {
                        *x = f.sub(*x, f.mul(factor, y));
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == m.len() {
                break;
            }
        }
        let pivots: Vec<(usize, Vec<u64>)> = pivot_cols.into_iter().zip(m).collect();
        if pivots.len() != n - c.params.k {
            return Err(Error::DegenerateCode {
                rank: pivots.len(),
                expected: n - c.params.k,
            });
        }
        let info = (0..n).filter(|j| !pivots.iter().any(|(p, _)| p == j)).collect();
        Ok(Encoder {
            field: f,
            n,
            pivots,
            info,
        })
    }

    /// Places `message` on the information positions and solves for parity.
    pub fn encode(&self, message: &[u64]) -> Result<Vec<u64>> {
        if message.len() != self.info.len() {
            return Err(Error::ShapeMismatch(format!(
                "message has {} symbols, expected {}",
                message.len(),
                self.info.len()
            )));
        }
        let f = &self.field;
        let mut word = vec![0; self.n];
        for (&pos, &x) in self.info.iter().zip(message) {
            word[pos] = x % f.q;
        }
        for (col, row) in &self.pivots {
            let s = self.info.iter().fold(0, |acc, &j| f.add(acc, f.mul(row[j], word[j])));
            word[*col] = f.neg(s);
        }
        Ok(word)
    }
}

/// Syndrome is zero.
pub fn is_codeword(c: &LinearCode, word: &[u64]) -> bool {
    let f = &c.field;
    c.h.iter()
        .all(|row| row.iter().zip(word).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))) == 0)
}

/// Recovers the single erased symbol from a local row; reads at most `r`
/// other symbols.
pub fn repair_symbol(c: &LinearCode, word: &[Option<u64>]) -> Result<u64> {
    if word.len() != c.params.n {
        return Err(Error::ShapeMismatch(format!(
            "word has {} symbols, expected {}",
            word.len(),
            c.params.n
        )));
    }
    let erased: Vec<usize> = (0..word.len()).filter(|&i| word[i].is_none()).collect();
    let [j] = erased[..] else {
        return Err(Error::BadErasure(erased.len()));
    };
    let row = &c.h[local_row(c, j).ok_or(Error::NoLocalCover(j))?];
    let f = &c.field;
    let s = (0..word.len())
        .filter(|&i| i != j && row[i] != 0)
        .fold(0, |acc, i| f.add(acc, f.mul(row[i], word[i].unwrap())));
    Ok(f.mul(f.neg(s), f.inv(row[j])))
}

#[derive(Debug, Clone, Serialize)]
pub struct Construction {
    pub code: LinearCode,
    /// Attempts used, counting the successful one.
    pub attempts: usize,
    pub decision: Decision,
    pub tanner: FullTannerGraph,
}

/// Builds and verifies an LRC of distance `d*` with the default decider.
pub fn construct_optimal_lrc(
    p: &CodeParams,
    field: Option<PrimeField>,
    seed: u64,
    max_retries: usize,
) -> Result<Construction> {
    construct_with(&Decider::default(), p, field, seed, max_retries)
}

/// Witness multigraph, then its Tanner graph, then random parity checks
/// until one verifies. Attempt `i` draws from stream `i` of `seed`.
pub fn construct_with(
    decider: &Decider,
    p: &CodeParams,
    field: Option<PrimeField>,
    seed: u64,
    max_retries: usize,
) -> Result<Construction> {
    construct_observed(decider, p, field, seed, max_retries, |_, _| {})
}

/// Why one construction attempt was accepted or rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum AttemptOutcome {
    RankDeficient { rank: usize },
    NotLocal,
    Distance { found: usize },
    Verified,
}

/// [`construct_with`], reporting each attempt to `observe`.
pub fn construct_observed(
    decider: &Decider,
    p: &CodeParams,
    field: Option<PrimeField>,
    seed: u64,
    max_retries: usize,
    mut observe: impl FnMut(usize, AttemptOutcome),
) -> Result<Construction> {
    let decision = decider.decide(p)?;
    if decision.status == Status::Unresolved {
        return Err(Error::Undecided);
    }
    let Some(witness) = decision.witness.clone() else {
        return Err(Error::NotAchievable {
            decided: p.d_star - 1,
        });
    };
    let field = match field {
        Some(f) => f,
        None => PrimeField::default_for(p)?,
    };
    let tanner = graph_to_tanner(&witness, p)?;
    let attempts = max_retries.max(1);
    for attempt in 0..attempts {
        let mut code = build_with_stream(&tanner, field, seed, attempt as u64);
        code.claimed_distance = p.d_star;
        let rank = code.rank();
        let outcome = if rank != p.n - p.k {
            AttemptOutcome::RankDeficient { rank }
        } else if !verify_locality(&code) {
            AttemptOutcome::NotLocal
        } else {
            let found = min_distance(&code)?;
            assert!(found <= p.d_star, "distance {found} above the bound {}", p.d_star);
            if found == p.d_star {
                AttemptOutcome::Verified
            } else {
                AttemptOutcome::Distance { found }
            }
        };
        observe(attempt + 1, outcome);
        if outcome == AttemptOutcome::Verified {
            code.verified = true;
            return Ok(Construction {
                code,
                attempts: attempt + 1,
                decision,
                tanner,
            });
        }
    }
    Err(Error::RetriesExhausted { attempts })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(n: usize, k: usize, r: usize, q: u64, h: Vec<Vec<u64>>) -> LinearCode {
        LinearCode::new(
            CodeParams::new(n, k, r).unwrap(),
            PrimeField::new(q).unwrap(),
            h,
            0,
            false,
        )
        .unwrap()
    }

    // Independent oracle: enumerate every codeword through the encoder.
    fn brute_min_weight(c: &LinearCode) -> usize {
        let enc = Encoder::new(c).unwrap();
        let q = c.field.order();
        let k = enc.info.len();
        let mut msg = vec![0u64; k];
        let mut best = usize::MAX;
        loop {
            let mut i = 0;
            while i < k && msg[i] == q - 1 {
                msg[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
            msg[i] += 1;
            let w = enc.encode(&msg).unwrap();
            assert!(is_codeword(c, &w));
            best = best.min(w.iter().filter(|&&x| x != 0).count());
        }
        best
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..60).filter(|&q| is_prime(q)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(matches!(PrimeField::new(21), Err(Error::NotPrime(21))));
    }

    #[test]
    fn default_field() {
        let p = CodeParams::new(12, 7, 3).unwrap();
        // 3 * C(12, 3) = 660
        assert_eq!(PrimeField::default_for(&p).unwrap().order(), 661);
        let p = CodeParams::new(16, 9, 4).unwrap();
        // 5 * C(16, 5) = 21840
        assert_eq!(PrimeField::default_for(&p).unwrap().order(), 21841);
        let p = CodeParams::new(2_000, 1_000, 999).unwrap();
        assert!(matches!(PrimeField::default_for(&p), Err(Error::FieldTooLarge)));
    }

    #[test]
    fn field_arithmetic() {
        let f = PrimeField::new(13).unwrap();
        for a in 1..13 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
            assert_eq!(f.add(a, f.neg(a)), 0);
        }
    }

    #[test]
    fn small_distances() {
        let c = code(4, 2, 1, 2, vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]]);
        assert_eq!(min_distance(&c).unwrap(), 2);
        assert_eq!(brute_min_weight(&c), 2);
        let c = code(4, 2, 2, 5, vec![vec![1, 0, 2, 0], vec![0, 0, 1, 3]]);
        assert_eq!(min_distance(&c).unwrap(), 1);
        let c = code(4, 2, 1, 2, vec![vec![1, 1, 0, 0], vec![1, 1, 0, 0]]);
        assert!(matches!(min_distance(&c), Err(Error::DegenerateCode { rank: 1, expected: 2 })));
    }

    #[test]
    fn parity_check_follows_tanner_graph() {
        let p = CodeParams::new(12, 7, 3).unwrap();
        let g = crate::multigraph::Multigraph::empty(3);
        let t = graph_to_tanner(&g, &p).unwrap();
        let binary = build_parity_check(&t, PrimeField::new(2).unwrap(), 5);
        let big = build_parity_check(&t, PrimeField::new(661).unwrap(), 5);
        assert_eq!(big, build_parity_check(&t, PrimeField::new(661).unwrap(), 5));
        for (i, check) in t.local_checks.iter().enumerate() {
            for j in 0..12 {
                assert_eq!(binary.h[i][j], check.contains(&j) as u64);
                assert_eq!(big.h[i][j] != 0, check.contains(&j));
            }
        }
        assert!(big.h[3..].iter().flatten().all(|&x| x != 0));
    }

    #[test]
    fn locality() {
        let c = code(4, 2, 1, 2, vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]]);
        assert!(verify_locality(&c));
        let c = code(4, 1, 1, 5, vec![vec![1, 1, 0, 0], vec![1, 1, 1, 1], vec![1, 2, 3, 4]]);
        assert!(!verify_locality(&c));
        let c = code(4, 3, 3, 5, vec![vec![1, 2, 3, 4]]);
        assert!(verify_locality(&c));
    }

    #[test]
    fn constructs_examples() {
        let p = CodeParams::new(12, 7, 3).unwrap();
        let built = construct_optimal_lrc(&p, None, 0, 10).unwrap();
        assert!(built.code.verified);
        assert_eq!(min_distance(&built.code).unwrap(), 4);
        assert!(matches!(
            construct_optimal_lrc(&CodeParams::new(10, 4, 2).unwrap(), None, 0, 10),
            Err(Error::NotAchievable { decided: 5 })
        ));
    }

    #[test]
    fn distance_matches_codeword_enumeration() {
        // q^k <= 2^20 throughout
        for (n, k, r, q) in [(6, 3, 3, 7), (9, 5, 2, 5), (9, 5, 4, 7), (10, 6, 4, 7), (8, 5, 4, 11)] {
            let p = CodeParams::new(n, k, r).unwrap();
            let built = construct_optimal_lrc(&p, Some(PrimeField::new(q).unwrap()), 1, 50)
                .unwrap_or_else(|e| panic!("{p:?} over GF({q}): {e}"));
            assert_eq!(brute_min_weight(&built.code), p.d_star, "{p:?}");
            // random matrices too, optimal or not
            for seed in 0..5 {
                let c = build_parity_check(&built.tanner, built.code.field, seed);
                if c.rank() == n - k {
                    assert_eq!(min_distance(&c).unwrap(), brute_min_weight(&c), "{p:?} seed {seed}");
                }
            }
        }
    }

    #[test]
    fn repair_round_trips() {
        let p = CodeParams::new(16, 9, 4).unwrap();
        let built = construct_optimal_lrc(&p, None, 3, 10).unwrap();
        let enc = Encoder::new(&built.code).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let q = built.code.field.order();
        for _ in 0..100 {
            let msg: Vec<u64> = (0..9).map(|_| rng.gen_range(0..q)).collect();
            let word = enc.encode(&msg).unwrap();
            assert!(is_codeword(&built.code, &word));
            let j = rng.gen_range(0..16);
            let mut damaged: Vec<Option<u64>> = word.iter().copied().map(Some).collect();
            damaged[j] = None;
            assert_eq!(repair_symbol(&built.code, &damaged).unwrap(), word[j]);
        }
        let mut two = vec![Some(0); 16];
        two[0] = None;
        two[1] = None;
        assert!(matches!(repair_symbol(&built.code, &two), Err(Error::BadErasure(2))));
    }

    #[test]
    fn binary_repair_is_xor() {
        let c = code(6, 3, 2, 2, vec![vec![1, 1, 1, 0, 0, 0], vec![0, 0, 0, 1, 1, 1], vec![1, 0, 0, 1, 0, 0]]);
        let enc = Encoder::new(&c).unwrap();
        let word = enc.encode(&[1, 0, 1]).unwrap();
        for j in 0..6 {
            let mut damaged: Vec<Option<u64>> = word.iter().copied().map(Some).collect();
            damaged[j] = None;
            assert_eq!(repair_symbol(&c, &damaged).unwrap(), word[j]);
        }
    }

    #[test]
    fn json_round_trip() {
        let built = construct_optimal_lrc(&CodeParams::new(12, 7, 3).unwrap(), None, 0, 5).unwrap();
        let s = serde_json::to_string(&built.code).unwrap();
        assert!(s.contains("\"H\""));
        assert_eq!(serde_json::from_str::<LinearCode>(&s).unwrap(), built.code);
        let bad = r#"{"n":4,"k":2,"r":1,"q":2,"H":[[1,1,0,0]],"claimed_distance":2,"verified":false}"#;
        assert!(serde_json::from_str::<LinearCode>(bad).is_err());
    }
}
