//! Exhaustive oracles that recompute each maximum by enumerating every pair
//! of words. They share nothing with the closed forms in
//! [`crate::formulas`] beyond the ball constructions.

use std::cmp::Ordering;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::balls::{deletion_ball_unordered, edit_distance, insertion_ball_unordered};
use crate::error::{domain, Error, Result};
use crate::formulas::FormulaParams;
use crate::word::{word_count, Word};

/// Environment variable that overrides [`Budget::default`].
pub const BUDGET_ENV: &str = "TRACE_RECON_BUDGET";

/// Upper bound on the number of word pairs an exhaustive search may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Budget(pub u128);

impl Budget {
    pub const DEFAULT: Budget = Budget(1 << 26);
    pub const UNLIMITED: Budget = Budget(u128::MAX);

    /// The default budget, or the value of `TRACE_RECON_BUDGET` if it parses.
    pub fn from_env() -> Budget {
        std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()).map(Budget).unwrap_or(Budget::DEFAULT)
    }

    pub fn check(self, needed: u128) -> Result<()> {
        if needed > self.0 {
            Err(Error::Budget { needed, budget: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// A maximum found by exhaustive search and a pair attaining it.
///
/// The witness is the lexicographically least maximizing pair; it is `None`
/// only when no pair satisfies the distance constraint at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub value: BigUint,
    pub witness: Option<(Word, Word)>,
}

/// `|I_k(x) ∩ I_t(y)|` by explicit set intersection.
pub fn oracle_common_supersequences(x: &Word, y: &Word, k: usize, t: usize, q: u8) -> Result<BigUint> {
    if x.len() + k != y.len() + t {
        return Err(domain(format!("length mismatch: |x|+k = {} but |y|+t = {}", x.len() + k, y.len() + t)));
    }
    let a = insertion_ball_unordered(x, k, q);
    let b = insertion_ball_unordered(y, t, q);
    let (small, large) = if a.len() <= b.len() { (&a, &b) } else { (&b, &a) };
    Ok(BigUint::from(small.iter().filter(|w| large.contains(*w)).count()))
}

/// `|D_t(x) ∩ D_t(y)|` by explicit set intersection.
pub fn oracle_common_subsequences(x: &Word, y: &Word, t: usize) -> Result<BigUint> {
    let a = deletion_ball_unordered(x, t)?;
    let b = deletion_ball_unordered(y, t)?;
    Ok(BigUint::from(a.intersection(&b).count()))
}

/// Best pair seen so far: highest count, then least `(first, second)` index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Best {
    count: u64,
    first: u64,
    second: u64,
}

impl Best {
    fn better_than(&self, other: &Best) -> bool {
        match self.count.cmp(&other.count) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => (self.first, self.second) < (other.first, other.second),
        }
    }
}

fn merge(into: &mut Option<Best>, cand: Best) {
    if into.is_none_or(|b| cand.better_than(&b)) {
        *into = Some(cand);
    }
}

/// For each exact edit distance, the best positive-count pair.
type DistanceTable = Vec<Option<Best>>;

fn merge_tables(mut a: DistanceTable, b: DistanceTable) -> DistanceTable {
    if a.len() < b.len() {
        a.resize(b.len(), None);
    }
    for (slot, cand) in a.iter_mut().zip(b) {
        if let Some(c) = cand {
            merge(slot, c);
        }
    }
    a
}

fn record(table: &mut DistanceTable, d: usize, cand: Best) {
    if table.len() <= d {
        table.resize(d + 1, None);
    }
    merge(&mut table[d], cand);
}

fn best_at_least(table: &DistanceTable, min_distance: usize) -> Option<Best> {
    let mut out = None;
    for b in table.iter().skip(min_distance).flatten() {
        merge(&mut out, *b);
    }
    out
}

fn space(len: u64, q: u32) -> Result<u64> {
    let q = u8::try_from(q).map_err(|_| domain(format!("alphabet size {q} too large")))?;
    let len = usize::try_from(len).map_err(|_| domain("length too large"))?;
    word_count(len, q).ok_or_else(|| domain("word space exceeds 2^64"))
}

/// Maximum of `|I_k(x) ∩ I_t(y)|` over `x` of length `n+t-k` and `y` of
/// length `n` at edit distance at least `t - k + 2l`.
///
/// Unlike the closed form, `l > k` is accepted (the maximum is then zero).
pub fn oracle_n_plus(params: &FormulaParams, budget: Budget) -> Result<OracleResult> {
    let profile = NPlusProfile::compute(params.n, params.t, params.k, params.q, budget)?;
    profile.at_least(params.min_distance() as usize)
}

/// The full per-distance sweep behind [`oracle_n_plus`], reusable across `l`.
#[derive(Debug, Clone)]
pub struct NPlusProfile {
    n: u64,
    t: u64,
    k: u64,
    q: u8,
    table: DistanceTable,
}

impl NPlusProfile {
    pub fn compute(n: u64, t: u64, k: u64, q: u32, budget: Budget) -> Result<Self> {
        if q < 2 {
            return Err(domain("alphabet size must be at least 2"));
        }
        if t < k {
            return Err(domain(format!("requires t >= k (t={t}, k={k})")));
        }
        let short_space = space(n, q)?;
        let long_space = space(n + t - k, q)?;
        budget.check(u128::from(short_space) * u128::from(long_space))?;
        let qb = q as u8;
        let long_len = (n + t - k) as usize;

        let table = (0..short_space)
            .into_par_iter()
            .map_init(
                || (vec![0u32; long_space as usize], Vec::<u64>::new()),
                |(counts, touched), y_idx| {
                    let y = Word::from_index(y_idx, n as usize, qb);
                    for w in insertion_ball_unordered(&y, t as usize, qb) {
                        let shorter = deletion_ball_unordered(&w, k as usize).expect("k <= |w|");
                        for x in shorter {
                            let xi = x.index(qb);
                            if counts[xi as usize] == 0 {
                                touched.push(xi);
                            }
                            counts[xi as usize] += 1;
                        }
                    }
                    let mut table = DistanceTable::new();
                    for &xi in touched.iter() {
                        let x = Word::from_index(xi, long_len, qb);
                        let d = edit_distance(&x, &y);
                        let cand = Best { count: u64::from(counts[xi as usize]), first: xi, second: y_idx };
                        record(&mut table, d, cand);
                        counts[xi as usize] = 0;
                    }
                    touched.clear();
                    table
                },
            )
            .reduce(DistanceTable::new, merge_tables);

        Ok(NPlusProfile { n, t, k, q: qb, table })
    }

    /// Maximum over pairs at edit distance at least `min_distance`.
    pub fn at_least(&self, min_distance: usize) -> Result<OracleResult> {
        let (n, long) = (self.n as usize, (self.n + self.t - self.k) as usize);
        if let Some(b) = best_at_least(&self.table, min_distance) {
            return Ok(OracleResult {
                value: BigUint::from(b.count),
                witness: Some((Word::from_index(b.first, long, self.q), Word::from_index(b.second, n, self.q))),
            });
        }
        // No pair at this distance shares a supersequence: report the least
        // pair that satisfies the constraint, if there is one.
        let witness = first_pair_at_distance(long, n, self.q, min_distance);
        Ok(OracleResult { value: BigUint::from(0u32), witness })
    }

    /// Maximum for distance parameter `l`, i.e. distance at least `t - k + 2l`.
    pub fn for_l(&self, l: u64) -> Result<OracleResult> {
        self.at_least((self.t - self.k + 2 * l) as usize)
    }
}

fn first_pair_at_distance(first_len: usize, second_len: usize, q: u8, min_distance: usize) -> Option<(Word, Word)> {
    let a_space = word_count(first_len, q)?;
    let b_space = word_count(second_len, q)?;
    for a in 0..a_space {
        let x = Word::from_index(a, first_len, q);
        for b in 0..b_space {
            let y = Word::from_index(b, second_len, q);
            if edit_distance(&x, &y) >= min_distance && (first_len != second_len || a < b) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Maximum of `|D_t(x) ∩ D_t(y)|` over distinct length-`n` words at edit
/// distance at least `min_distance`. The witness has `x < y`.
pub fn oracle_n_minus(n: u64, t: u64, q: u32, min_distance: usize, budget: Budget) -> Result<OracleResult> {
    if q < 2 {
        return Err(domain("alphabet size must be at least 2"));
    }
    if t > n {
        return Err(domain(format!("requires t <= n (t={t}, n={n})")));
    }
    let words = space(n, q)?;
    budget.check(u128::from(words) * u128::from(words))?;
    let qb = q as u8;
    let (n, t) = (n as usize, t as usize);
    let short_space = space((n - t) as u64, q)? as usize;

    let balls: Vec<Vec<u64>> = (0..words)
        .into_par_iter()
        .map(|xi| {
            let x = Word::from_index(xi, n, qb);
            let mut v: Vec<u64> = deletion_ball_unordered(&x, t).expect("t <= n").iter().map(|s| s.index(qb)).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let mut containing: Vec<Vec<u32>> = vec![Vec::new(); short_space];
    for (xi, ball) in balls.iter().enumerate() {
        for &s in ball {
            containing[s as usize].push(xi as u32);
        }
    }

    let best = (0..words)
        .into_par_iter()
        .map_init(
            || (vec![0u32; words as usize], Vec::<u32>::new()),
            |(counts, touched), xi| {
                for &s in &balls[xi as usize] {
                    for &other in &containing[s as usize] {
                        if u64::from(other) <= xi {
                            continue;
                        }
                        if counts[other as usize] == 0 {
                            touched.push(other);
                        }
                        counts[other as usize] += 1;
                    }
                }
                let mut cands: Vec<(u32, u32)> = touched.iter().map(|&o| (counts[o as usize], o)).collect();
                for &o in touched.iter() {
                    counts[o as usize] = 0;
                }
                touched.clear();
                cands.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
                let x = Word::from_index(xi, n, qb);
                cands
                    .into_iter()
                    .find(|&(_, o)| {
                        min_distance <= 2 || edit_distance(&x, &Word::from_index(u64::from(o), n, qb)) >= min_distance
                    })
                    .map(|(c, o)| Best { count: u64::from(c), first: xi, second: u64::from(o) })
            },
        )
        .reduce(
            || None,
            |a, b| match (a, b) {
                (Some(a), Some(b)) => Some(if b.better_than(&a) { b } else { a }),
                (a, None) => a,
                (None, b) => b,
            },
        );

    Ok(match best {
        Some(b) => OracleResult {
            value: BigUint::from(b.count),
            witness: Some((Word::from_index(b.first, n, qb), Word::from_index(b.second, n, qb))),
        },
        None => {
            OracleResult { value: BigUint::from(0u32), witness: first_pair_at_distance(n, n, qb, min_distance.max(1)) }
        }
    })
}
