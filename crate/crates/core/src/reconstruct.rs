//! Exact reconstruction from a pool of distinct insertion traces by
//! filtering an explicit candidate set.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::balls::insertion_ball_size;
use crate::error::{domain, Result};
use crate::formulas::n_plus_equal;
use crate::word::Word;

/// Distinct traces of a length-`n` source, each carrying `t` insertions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracePool {
    n: usize,
    t: usize,
    traces: BTreeSet<Word>,
}

impl TracePool {
    /// Fails on an empty pool, mixed trace lengths, traces shorter than `n`
    /// or repeated traces.
    pub fn new(n: usize, traces: impl IntoIterator<Item = Word>) -> Result<Self> {
        let mut set = BTreeSet::new();
        let mut len = None;
        for w in traces {
            match len {
                None => len = Some(w.len()),
                Some(l) if l != w.len() => {
                    return Err(domain(format!("trace {w} has length {} but earlier traces have length {l}", w.len())));
                }
                _ => {}
            }
            if w.len() < n {
                return Err(domain(format!("trace {w} is shorter than the source length {n}")));
            }
            if let Some(dup) = set.replace(w) {
                return Err(domain(format!("trace {dup} appears more than once")));
            }
        }
        let len = len.ok_or_else(|| domain("trace pool is empty"))?;
        Ok(TracePool { n, t: len - n, traces: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.traces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traces.is_empty()
    }

    pub fn traces(&self) -> impl Iterator<Item = &Word> {
        self.traces.iter()
    }

    /// True when every trace is a supersequence of `x`.
    pub fn consistent_with(&self, x: &Word) -> bool {
        x.len() == self.n && self.traces.iter().all(|w| subsequence_contains(x, w))
    }
}

/// Number of distinct traces that always pins down a codeword of a code
/// with minimum edit distance `2l`: `N+_q(n, t, l) + 1`.
pub fn required_traces(n: u64, t: u64, l: u64, q: u32) -> Result<BigUint> {
    Ok(n_plus_equal(n, t, l, q)? + BigUint::one())
}

/// Every candidate consistent with the pool; empty or with at least two
/// entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmbiguityReport {
    pub consistent: Vec<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reconstruction {
    Unique(Word),
    Ambiguous(AmbiguityReport),
}

impl Reconstruction {
    pub fn unique(&self) -> Option<&Word> {
        match self {
            Reconstruction::Unique(w) => Some(w),
            Reconstruction::Ambiguous(_) => None,
        }
    }
}

/// Keeps the candidates of which every trace is a supersequence.
pub fn reconstruct_exact<I>(pool: &TracePool, candidates: I, q: u8) -> Result<Reconstruction>
where
    I: IntoIterator<Item = Word>,
{
    let candidates: BTreeSet<Word> = candidates.into_iter().collect();
    for c in &candidates {
        if c.len() != pool.n {
            return Err(domain(format!("candidate {c} has length {} but the source length is {}", c.len(), pool.n)));
        }
        c.check_alphabet(q)?;
    }
    for w in &pool.traces {
        w.check_alphabet(q)?;
    }
    let candidates: Vec<Word> = candidates.into_iter().collect();
    let mut consistent: Vec<Word> = candidates.into_par_iter().filter(|c| pool.consistent_with(c)).collect();
    Ok(if consistent.len() == 1 {
        Reconstruction::Unique(consistent.pop().expect("one element"))
    } else {
        Reconstruction::Ambiguous(AmbiguityReport { consistent })
    })
}

/// Whether `x` is a subsequence of `w`, by greedy left-to-right matching.
pub fn subsequence_contains(x: &Word, w: &Word) -> bool {
    let mut it = w.symbols().iter();
    x.symbols().iter().all(|s| it.any(|c| c == s))
}

/// One trace: `t` uniformly chosen symbols inserted at uniformly chosen
/// positions.
pub fn random_supersequence<R: Rng>(x: &Word, t: usize, q: u8, rng: &mut R) -> Word {
    let mut v = x.symbols().to_vec();
    for _ in 0..t {
        let pos = rng.gen_range(0..=v.len());
        v.insert(pos, rng.gen_range(0..q));
    }
    Word::new(v)
}

/// A pool of `count` distinct random traces of `x`.
pub fn sample_pool(x: &Word, t: usize, q: u8, count: usize, seed: u64) -> Result<TracePool> {
    let ball = insertion_ball_size(x.len() as u64, t as u64, u32::from(q));
    if BigUint::from(count) > ball {
        return Err(domain(format!("asked for {count} distinct traces but I_{t}({x}) has only {ball}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut traces = BTreeSet::new();
    while traces.len() < count {
        traces.insert(random_supersequence(x, t, q, &mut rng));
    }
    TracePool::new(x.len(), traces)
}
