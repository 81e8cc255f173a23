//! Varshamov-Tenengolts codes, their single-indel decoder, and the family of
//! codeword pairs whose insertion balls share the maximal number of words.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::balls::edit_distance;
use crate::error::{domain, Error, Result};
use crate::formulas::n_plus_equal;
use crate::oracle::Budget;
use crate::word::Word;

/// The code `{x in F_2^n : sum_i i x_i = a mod (n+1)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VtCode {
    pub n: usize,
    pub a: usize,
}

impl VtCode {
    pub fn new(n: usize, a: usize) -> Result<Self> {
        if n == 0 {
            return Err(domain("VT code length must be at least 1"));
        }
        if a > n {
            return Err(domain(format!("residue a={a} must lie in [0, {n}]")));
        }
        Ok(VtCode { n, a })
    }

    pub fn contains(&self, x: &Word) -> bool {
        x.len() == self.n && vt_checksum(x).is_ok_and(|c| c == self.a)
    }
}

impl fmt::Display for VtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VT({}, {})", self.n, self.a)
    }
}

/// `sum_{i=1}^{n} i x_i mod (n+1)`.
pub fn vt_checksum(x: &Word) -> Result<usize> {
    if x.is_empty() {
        return Err(domain("checksum of the empty word is undefined"));
    }
    x.check_alphabet(2)?;
    Ok(raw_sum(x.symbols()) % (x.len() + 1))
}

fn raw_sum(bits: &[u8]) -> usize {
    bits.iter().enumerate().map(|(i, &b)| (i + 1) * usize::from(b)).sum()
}

/// All codewords in lexicographic order.
pub fn vt_enumerate(code: VtCode, budget: Budget) -> Result<Vec<Word>> {
    let total = 1u128
        .checked_shl(code.n as u32)
        .filter(|_| code.n < 64)
        .ok_or(Error::Budget { needed: u128::MAX, budget: budget.0 })?;
    budget.check(total)?;
    let modulus = code.n + 1;
    Ok((0..total as u64)
        .map(|i| Word::from_index(i, code.n, 2))
        .filter(|w| raw_sum(w.symbols()) % modulus == code.a)
        .collect())
}

/// Recovers the codeword from a word that suffered at most one insertion or
/// deletion.
pub fn vt_decode(received: &Word, code: VtCode) -> Result<Word> {
    received.check_alphabet(2)?;
    let n = code.n;
    let bits = received.symbols();
    let modulus = n + 1;
    let sum = raw_sum(bits) % modulus;
    let weight = bits.iter().filter(|&&b| b == 1).count();

    let candidate = if bits.len() == n {
        received.clone()
    } else if bits.len() + 1 == n {
        let delta = (code.a + modulus - sum) % modulus;
        let mut v = bits.to_vec();
        if delta <= weight {
            // A 0 went missing with `delta` ones to its right.
            let pos = (0..=v.len()).find(|&i| ones(&v[i..]) == delta).expect("delta <= weight");
            v.insert(pos, 0);
        } else {
            // A 1 went missing with `delta - weight - 1` zeros to its left.
            let zeros_left = delta - weight - 1;
            let pos = (0..=v.len()).find(|&i| i - ones(&v[..i]) == zeros_left).ok_or_else(|| {
                Error::DecodeFailure(format!("no codeword of {code} within one deletion of {received}"))
            })?;
            v.insert(pos, 1);
        }
        Word::new(v)
    } else if bits.len() == n + 1 {
        let delta = (sum + modulus - code.a % modulus) % modulus;
        let mut v = bits.to_vec();
        let pos = if delta == 0 {
            Some(v.len() - 1)
        } else if delta < weight {
            (0..v.len()).find(|&i| v[i] == 0 && ones(&v[i + 1..]) == delta)
        } else if delta == weight {
            Some(0)
        } else {
            let zeros_left = delta - weight;
            (0..v.len()).find(|&i| v[i] == 1 && i - ones(&v[..i]) == zeros_left)
        };
        let pos = pos
            .ok_or_else(|| Error::DecodeFailure(format!("no codeword of {code} within one insertion of {received}")))?;
        v.remove(pos);
        Word::new(v)
    } else {
        return Err(domain(format!("received length {} is not within one of n={n}", bits.len())));
    };

    if code.contains(&candidate) {
        Ok(candidate)
    } else {
        Err(Error::DecodeFailure(format!("no codeword of {code} within distance 1 of {received}")))
    }
}

fn ones(bits: &[u8]) -> usize {
    bits.iter().filter(|&&b| b == 1).count()
}

/// Positions (1-indexed) whose bits steer a word into any VT residue while
/// avoiding the two central positions of the worst-case templates.
pub fn fp_set(n: usize) -> Result<Vec<usize>> {
    if n < 7 {
        return Err(domain(format!("FP(n) is defined for n >= 7 (n={n})")));
    }
    let half = n / 2;
    let mut set = vec![1usize];
    loop {
        let t: usize = set.iter().sum();
        let next = if t >= n {
            break;
        } else if t + 1 == half || (n.is_multiple_of(2) && t + 1 == half + 1) {
            half - 1
        } else if !n.is_multiple_of(2) && t + 1 == half + 2 {
            half + 1
        } else {
            t + 1
        };
        set.push(next);
    }
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

/// The lexicographically least subset of `positions` (as an ascending list)
/// summing to `m`.
pub fn subset_for_sum(positions: &[usize], m: usize) -> Result<Vec<usize>> {
    let mut sorted = positions.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() > 24 {
        return Err(domain("subset search limited to 24 positions"));
    }
    (0u32..1 << sorted.len())
        .map(|mask| sorted.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect::<Vec<_>>())
        .filter(|s| s.iter().sum::<usize>() == m)
        .min()
        .ok_or_else(|| Error::Internal(format!("no subset of {sorted:?} sums to {m}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TemplateKind {
    /// `1 1` against `0 0` inserted before `v_p`.
    XZ,
    /// `0 v_p 0` against `1 v_p 1`.
    YW,
}

/// Builds the two template words around position `p` of a length-`(n-2)`
/// binary word `v`. Returns `(X, Z)` or `(Y, W)`.
pub fn worst_pair_templates(n: usize, p: usize, v: &Word, kind: TemplateKind) -> Result<(Word, Word)> {
    if n < 3 || v.len() != n - 2 {
        return Err(domain(format!("template needs |V| = n-2 (n={n}, |V|={})", v.len())));
    }
    v.check_alphabet(2)?;
    let s = v.symbols();
    let build = |mid: &[u8], rest_from: usize| {
        let mut out = s[..p - 1].to_vec();
        out.extend_from_slice(mid);
        out.extend_from_slice(&s[rest_from..]);
        Word::new(out)
    };
    match kind {
        TemplateKind::XZ => {
            if !(1..=n - 1).contains(&p) {
                return Err(domain(format!("XZ position p={p} must lie in [1, {}]", n - 1)));
            }
            Ok((build(&[1, 1], p - 1), build(&[0, 0], p - 1)))
        }
        TemplateKind::YW => {
            if !(1..=n - 2).contains(&p) {
                return Err(domain(format!("YW position p={p} must lie in [1, {}]", n - 2)));
            }
            let vp = s[p - 1];
            Ok((build(&[0, vp, 0], p), build(&[1, vp, 1], p)))
        }
    }
}

/// A uniformly random word steered into `code` through the positions of
/// `FP(n)`; for `n < 7` a uniform pick from the enumerated code.
pub fn random_codeword<R: Rng>(code: VtCode, rng: &mut R) -> Result<Word> {
    let n = code.n;
    if n < 7 {
        let words = vt_enumerate(code, Budget::UNLIMITED)?;
        return Ok(words[rng.gen_range(0..words.len())].clone());
    }
    let fp = fp_set(n)?;
    let mut bits: Vec<u8> = (0..n).map(|_| rng.gen_range(0..2)).collect();
    for &pos in &fp {
        bits[pos - 1] = 0;
    }
    let modulus = n + 1;
    let m = (code.a + modulus - raw_sum(&bits) % modulus) % modulus;
    for pos in subset_for_sum(&fp, m)? {
        bits[pos - 1] = 1;
    }
    Ok(Word::new(bits))
}

/// Unordered pair of distinct words, stored in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WorstCasePair {
    pub first: Word,
    pub second: Word,
}

impl WorstCasePair {
    pub fn new(a: Word, b: Word) -> Self {
        if a <= b {
            WorstCasePair { first: a, second: b }
        } else {
            WorstCasePair { first: b, second: a }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generation {
    /// Free positions enumerated in lexicographic order, optionally capped.
    Exhaustive { limit: Option<usize> },
    /// Free positions drawn uniformly; duplicates are dropped.
    Sampled { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairFamily {
    pub code: VtCode,
    pub t: usize,
    pub pairs: Vec<WorstCasePair>,
    /// True when every assignment of the free positions was enumerated.
    pub complete: bool,
}

impl PairFamily {
    /// `N+_2(n, t, 2)`, the intersection every pair attains.
    pub fn intersection(&self) -> Result<BigUint> {
        n_plus_equal(self.code.n as u64, self.t as u64, 2, 2)
    }

    /// Rows `n,a,t,E,F,intersection`, without a header.
    pub fn csv_rows(&self) -> Result<Vec<String>> {
        let value = self.intersection()?;
        Ok(self
            .pairs
            .iter()
            .map(|p| format!("{},{},{},{},{},{}", self.code.n, self.code.a, self.t, p.first, p.second, value))
            .collect())
    }
}

pub const PAIR_CSV_HEADER: &str = "n,a,t,E,F,intersection";

/// `2^{n - |FP(n)| - 2}`, the number of pairs the construction yields.
pub fn family_size(n: usize) -> Result<BigUint> {
    let fp = fp_set(n)?;
    Ok(BigUint::from(1u32) << (n - fp.len() - 2))
}

/// `2^{n - ceil(log2 n) - 3}`.
pub fn family_size_bound(n: usize) -> BigUint {
    let log = ceil_log2(n);
    if n < log + 3 {
        return BigUint::from(1u32);
    }
    BigUint::from(1u32) << (n - log - 3)
}

pub(crate) fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

struct Layout {
    code: VtCode,
    free: Vec<usize>,
    centers: [usize; 2],
    subsets: Vec<Vec<usize>>,
}

impl Layout {
    fn new(code: VtCode) -> Result<Self> {
        let n = code.n;
        let fp = fp_set(n)?;
        let half = n / 2;
        let centers = if n.is_multiple_of(2) { [half, half + 1] } else { [half, half + 2] };
        let fixed: BTreeSet<usize> = fp.iter().copied().chain(centers).collect();
        if fixed.len() != fp.len() + 2 {
            return Err(Error::Internal(format!("FP({n}) = {fp:?} meets the central positions {centers:?}")));
        }
        let free = (1..=n).filter(|i| !fixed.contains(i)).collect();
        let subsets = (0..=n).map(|m| subset_for_sum(&fp, m)).collect::<Result<_>>()?;
        Ok(Layout { code, free, centers, subsets })
    }

    /// Completes the free bits into a pair and checks it.
    fn pair(&self, free_bits: &[u8]) -> Result<WorstCasePair> {
        let n = self.code.n;
        let modulus = n + 1;
        let mut e = vec![0u8; n];
        for (&pos, &b) in self.free.iter().zip(free_bits) {
            e[pos - 1] = b;
        }
        let c = raw_sum(&e) % modulus;
        let m = (self.code.a + modulus - c) % modulus;
        for &pos in &self.subsets[m] {
            e[pos - 1] = 1;
        }
        let mut f = e.clone();
        for &pos in &self.centers {
            f[pos - 1] = 1;
        }
        let (e, f) = (Word::new(e), Word::new(f));
        if !self.code.contains(&e) || !self.code.contains(&f) || edit_distance(&e, &f) != 4 {
            return Err(Error::Internal(format!(
                "constructed pair ({e}, {f}) fails the {} membership or distance check",
                self.code
            )));
        }
        Ok(WorstCasePair::new(e, f))
    }
}

/// Pairs of codewords of `code` whose `t`-insertion balls meet in
/// `N+_2(n, t, 2)` words, built from the positional basis `FP(n)`.
pub fn generate_worst_pairs(code: VtCode, t: usize, mode: Generation) -> Result<PairFamily> {
    if t < 2 {
        return Err(domain(format!("worst-case pairs need t >= 2 (t={t})")));
    }
    let layout = Layout::new(code)?;
    let free = layout.free.len();
    match mode {
        Generation::Exhaustive { limit } => {
            if free >= 64 {
                return Err(Error::Budget { needed: u128::MAX, budget: u128::from(u64::MAX) });
            }
            let total = 1u64 << free;
            let take = limit.map_or(total, |l| total.min(l as u64));
            let pairs = (0..take)
                .into_par_iter()
                .map(|i| layout.pair(Word::from_index(i, free, 2).symbols()))
                .collect::<Result<Vec<_>>>()?;
            Ok(PairFamily { code, t, pairs, complete: take == total })
        }
        Generation::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pairs = BTreeSet::new();
            for _ in 0..count {
                let bits: Vec<u8> = (0..free).map(|_| rng.gen_range(0..2)).collect();
                pairs.insert(layout.pair(&bits)?);
            }
            Ok(PairFamily { code, t, pairs: pairs.into_iter().collect(), complete: false })
        }
    }
}
