//! Edit distance and exhaustive insertion, deletion and indel balls.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::binom::{binomial, pow_u};
use crate::error::{domain, Result};
use crate::word::Word;

/// Length of a longest common subsequence.
pub fn lcs_len(x: &[u8], y: &[u8]) -> usize {
    if x.is_empty() || y.is_empty() {
        return 0;
    }
    let mut prev = vec![0usize; y.len() + 1];
    let mut cur = vec![0usize; y.len() + 1];
    for &a in x {
        for (j, &b) in y.iter().enumerate() {
            cur[j + 1] = if a == b { prev[j] + 1 } else { prev[j + 1].max(cur[j]) };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[y.len()]
}

/// Insertion/deletion distance (no substitutions): `|x| + |y| - 2 LCS(x, y)`.
pub fn edit_distance(x: &Word, y: &Word) -> usize {
    x.len() + y.len() - 2 * lcs_len(x.symbols(), y.symbols())
}

fn one_insertion(words: &HashSet<Word>, q: u8) -> HashSet<Word> {
    let mut out = HashSet::with_capacity(words.len() * 4);
    for w in words {
        let s = w.symbols();
        for pos in 0..=s.len() {
            for c in 0..q {
                let mut v = Vec::with_capacity(s.len() + 1);
                v.extend_from_slice(&s[..pos]);
                v.push(c);
                v.extend_from_slice(&s[pos..]);
                out.insert(Word::new(v));
            }
        }
    }
    out
}

fn one_deletion(words: &HashSet<Word>) -> HashSet<Word> {
    let mut out = HashSet::with_capacity(words.len() * 2);
    for w in words {
        let s = w.symbols();
        for pos in 0..s.len() {
            let mut v = Vec::with_capacity(s.len() - 1);
            v.extend_from_slice(&s[..pos]);
            v.extend_from_slice(&s[pos + 1..]);
            out.insert(Word::new(v));
        }
    }
    out
}

/// All distinct words of length `|x| + t` obtained by `t` insertions into `x`.
pub fn insertion_ball(x: &Word, t: usize, q: u8) -> BTreeSet<Word> {
    insertion_ball_unordered(x, t, q).into_iter().collect()
}

pub(crate) fn insertion_ball_unordered(x: &Word, t: usize, q: u8) -> HashSet<Word> {
    let mut level = HashSet::from([x.clone()]);
    for _ in 0..t {
        level = one_insertion(&level, q);
    }
    level
}

/// All distinct length-`|x| - v` subsequences of `x`.
pub fn deletion_ball(x: &Word, v: usize) -> Result<BTreeSet<Word>> {
    Ok(deletion_ball_unordered(x, v)?.into_iter().collect())
}

pub(crate) fn deletion_ball_unordered(x: &Word, v: usize) -> Result<HashSet<Word>> {
    if v > x.len() {
        return Err(domain(format!("cannot delete {v} symbols from a word of length {}", x.len())));
    }
    let mut level = HashSet::from([x.clone()]);
    for _ in 0..v {
        level = one_deletion(&level);
    }
    Ok(level)
}

/// `I_t(D_t(x))`: every word reachable by `t` deletions followed by `t` insertions.
pub fn indel_ball(x: &Word, t: usize, q: u8) -> Result<BTreeSet<Word>> {
    let mut out = BTreeSet::new();
    for d in deletion_ball_unordered(x, t)? {
        out.extend(insertion_ball_unordered(&d, t, q));
    }
    Ok(out)
}

/// Size of any `t`-insertion ball around a length-`n` word:
/// `sum_{i=0}^{t} C(n+t, i) (q-1)^i`.
pub fn insertion_ball_size(n: u64, t: u64, q: u32) -> BigUint {
    (0..=t).map(|i| binomial(n + t, i) * pow_u(q as u64 - 1, i)).sum()
}

/// Largest `t`-deletion ball over all length-`n` words of a `q`-ary alphabet.
///
/// Uses `D_q(n,t) = sum_i C(n-t, i) D_{q-1}(t, t-i)` with `D_1(n,t) = 1` when
/// `n >= t >= 0`; zero whenever `n < t`.
pub fn max_deletion_ball_size(n: i64, t: i64, q: u32) -> BigUint {
    if t < 0 || n < t || q == 0 {
        return BigUint::zero();
    }
    if q == 1 {
        return BigUint::one();
    }
    (0..=t).map(|i| binomial((n - t) as u64, i as u64) * max_deletion_ball_size(t, t - i, q - 1)).sum()
}

/// Number of maximal runs of identical symbols.
pub fn run_count(x: &Word) -> Result<usize> {
    let s = x.symbols();
    if s.is_empty() {
        return Err(domain("the empty word has no runs"));
    }
    Ok(1 + s.windows(2).filter(|p| p[0] != p[1]).count())
}

/// The alternating binary word of length `n` whose first symbol is `leading`.
pub fn circular_string(n: usize, leading: u8) -> Word {
    let leading = leading & 1;
    Word::new((0..n).map(|i| leading ^ (i as u8 & 1)).collect())
}

/// `|I_t(D_t(C_n))|` for the alternating word: `sum_{i=0}^{2t} C(n, i)`,
/// and `2^n` once `n < 2t` (every word of length `n` is reachable).
pub fn circular_indel_ball_size(n: u64, t: u64) -> BigUint {
    if n < 2 * t {
        return BigUint::one() << n;
    }
    (0..=2 * t).map(|i| binomial(n, i)).sum()
}
