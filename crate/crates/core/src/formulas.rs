//! Closed-form counts of common supersequences and subsequences.
//!
//! Every binomial here goes through [`binom_gen`], so edge terms with a
//! negative or undersized upper argument follow one convention throughout.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::balls::max_deletion_ball_size;
use crate::binom::{binom_gen, pow_i};
use crate::error::{domain, Error, Result};

/// Arguments of the common-supersequence count: a length-`n` word receives
/// `t` insertions, a length-`(n + t - k)` word receives `k`, and the two are
/// at edit distance at least `t - k + 2l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FormulaParams {
    pub n: u64,
    pub t: u64,
    pub k: u64,
    pub l: u64,
    pub q: u32,
}

impl FormulaParams {
    pub fn new(n: u64, t: u64, k: u64, l: u64, q: u32) -> Result<Self> {
        let p = FormulaParams { n, t, k, l, q };
        p.validate()?;
        Ok(p)
    }

    /// Equal-length case `k = t`.
    pub fn equal(n: u64, t: u64, l: u64, q: u32) -> Result<Self> {
        Self::new(n, t, t, l, q)
    }

    pub fn validate(&self) -> Result<()> {
        let FormulaParams { n, t, k, l, q } = *self;
        if q < 2 {
            return Err(domain(format!("alphabet size q={q} must be at least 2")));
        }
        if n < 1 {
            return Err(domain("length n must be positive"));
        }
        if t < k {
            return Err(domain(format!("requires t >= k (t={t}, k={k})")));
        }
        if k < l {
            return Err(domain(format!("requires k >= l (k={k}, l={l})")));
        }
        if n < l {
            return Err(domain(format!("requires n >= l (n={n}, l={l})")));
        }
        Ok(())
    }

    /// Length of the longer word, `n + t - k`.
    pub fn long_len(&self) -> u64 {
        self.n + self.t - self.k
    }

    /// Minimum edit distance between the two words, `t - k + 2l`.
    pub fn min_distance(&self) -> u64 {
        self.t - self.k + 2 * self.l
    }
}

fn to_count(v: BigInt, what: &str) -> Result<BigUint> {
    match v.sign() {
        Sign::Minus => Err(Error::Internal(format!("{what} evaluated to negative {v}"))),
        _ => Ok(v.magnitude().clone()),
    }
}

/// The double sum for the maximum number of common supersequences, evaluated
/// for any arguments (no hypotheses checked). An empty `j` range gives zero.
///
/// `sum_{j=l}^{k} sum_{i=0}^{k-j} C(t-k+2j, j) C(t+j-i, t-k+2j) C(n+t, i) (q-1)^i (-1)^{k+j-i}`
pub fn n_plus_formula(n: i64, t: i64, k: i64, l: i64, q: i64) -> BigInt {
    let mut total = BigInt::zero();
    for j in l.max(0)..=k {
        let outer = binom_gen(t - k + 2 * j, j);
        if outer.is_zero() {
            continue;
        }
        for i in 0..=(k - j) {
            let mut term = &outer * binom_gen(t + j - i, t - k + 2 * j) * binom_gen(n + t, i) * pow_i(q - 1, i as u64);
            if (k + j - i).rem_euclid(2) == 1 {
                term = -term;
            }
            total += term;
        }
    }
    total
}

/// Maximum number of common supersequences under the hypotheses of
/// [`FormulaParams::validate`].
pub fn n_plus(params: &FormulaParams) -> Result<BigUint> {
    params.validate()?;
    let FormulaParams { n, t, k, l, q } = *params;
    to_count(n_plus_formula(n as i64, t as i64, k as i64, l as i64, i64::from(q)), "n_plus")
}

/// Equal-length maximum, evaluated from its own single-parameter form
/// `sum_{j=l}^{t} sum_{i=0}^{t-j} C(2j, j) C(t+j-i, 2j) C(n+t, i) (q-1)^i (-1)^{t+j-i}`.
pub fn n_plus_equal(n: u64, t: u64, l: u64, q: u32) -> Result<BigUint> {
    FormulaParams::equal(n, t, l, q)?;
    let (n, t, l, q) = (n as i64, t as i64, l as i64, i64::from(q));
    let mut total = BigInt::zero();
    for j in l..=t {
        let central = binom_gen(2 * j, j);
        for i in 0..=(t - j) {
            let mut term = &central * binom_gen(t + j - i, 2 * j) * binom_gen(n + t, i) * pow_i(q - 1, i as u64);
            if (t + j - i) % 2 == 1 {
                term = -term;
            }
            total += term;
        }
    }
    to_count(total, "n_plus_equal")
}

/// Uncoded maximum `sum_{i=0}^{t-1} C(n+t, i) (q-1)^i (1 - (-1)^{t-i})`.
pub fn n_plus_levenshtein(n: u64, t: u64, q: u32) -> BigUint {
    let (n, t, q) = (n as i64, t as i64, i64::from(q));
    let mut total = BigInt::zero();
    for i in 0..t {
        if (t - i) % 2 == 1 {
            total += binom_gen(n + t, i) * pow_i(q - 1, i as u64) * 2;
        }
    }
    total.magnitude().clone()
}

/// Binary form `sum_{j=l}^{k} C(t-k+2j, j) C(n+k-(2j+1), k-j)`.
pub fn n_plus_binary(n: u64, t: u64, k: u64, l: u64) -> Result<BigUint> {
    FormulaParams::new(n, t, k, l, 2)?;
    let (n, t, k, l) = (n as i64, t as i64, k as i64, l as i64);
    let total: BigInt = (l..=k).map(|j| binom_gen(t - k + 2 * j, j) * binom_gen(n + k - (2 * j + 1), k - j)).sum();
    to_count(total, "n_plus_binary")
}

fn max_del(n: i64, t: i64, q: u32) -> BigUint {
    max_deletion_ball_size(n, t, q)
}

/// Maximum number of common length-`(n-t)` subsequences of two distinct
/// length-`n` words:
/// `sum_{i=1}^{q-1} D_q(n-i-1, t-i) + D_q(n-2, t-1)`.
///
/// At `t = n` both words collapse to the empty word, so the value is 1.
pub fn n_minus_uncoded(n: u64, t: u64, q: u32) -> Result<BigUint> {
    if q < 2 {
        return Err(domain(format!("alphabet size q={q} must be at least 2")));
    }
    if n < 2 {
        return Err(domain(format!("requires n >= 2 (n={n})")));
    }
    if t > n {
        return Err(domain(format!("requires t <= n (t={t}, n={n})")));
    }
    if t == n {
        return Ok(BigUint::one());
    }
    let (ni, ti) = (n as i64, t as i64);
    let mut total: BigUint = (1..=i64::from(q) - 1).map(|i| max_del(ni - i - 1, ti - i, q)).sum();
    total += max_del(ni - 2, ti - 1, q);
    Ok(total)
}

/// Binary deletion-side count for words at edit distance at least 4:
/// `2 sum_{i<t} C(n-t-1, i) - 2 C(n-t-3, t-1) - C(n-t-4, t-3) - C(n-t-5, t-3)`.
pub fn n_minus_binary_vt(n: u64, t: u64) -> Result<BigUint> {
    if t < 3 || 2 * t > n {
        return Err(domain(format!("requires 3 <= t <= n/2 (n={n}, t={t})")));
    }
    let (n, t) = (n as i64, t as i64);
    let mut total: BigInt = (0..t).map(|i| binom_gen(n - t - 1, i)).sum::<BigInt>() * 2;
    total -= binom_gen(n - t - 3, t - 1) * 2;
    total -= binom_gen(n - t - 4, t - 3);
    total -= binom_gen(n - t - 5, t - 3);
    to_count(total, "n_minus_binary_vt")
}

/// The same quantity through maximal deletion-ball sizes:
/// `2D(n-4,t-2) + 2D(n-5,t-2) + 2D(n-7,t-2) + D(n-6,t-3) + D(n-7,t-3)`.
pub fn n_minus_binary_vt_recursive(n: u64, t: u64) -> Result<BigUint> {
    if t < 3 || 2 * t > n {
        return Err(domain(format!("requires 3 <= t <= n/2 (n={n}, t={t})")));
    }
    let (n, t) = (n as i64, t as i64);
    let d = |a: i64, b: i64| max_del(a, b, 2);
    Ok(d(n - 4, t - 2) * 2u32 + d(n - 5, t - 2) * 2u32 + d(n - 7, t - 2) * 2u32 + d(n - 6, t - 3) + d(n - 7, t - 3))
}

/// Number of words reachable from both alternating words of length `n` by
/// `t` deletions followed by `t` insertions, a lower bound on the indel-channel
/// reconstruction count.
///
/// The two deletion balls are insertion balls around the alternating words
/// of length `n - 2t`, so the value is the uncoded maximum at
/// `(n - 2t, 2t)`: `2 sum_{i < 2t, i odd} C(n, i)`. At `n = 2t` the two centers
/// coincide (both empty) and every one of the `2^n` words is shared.
pub fn indel_lower_bound(n: u64, t: u64) -> Result<BigUint> {
    if t < 1 || n < 2 * t {
        return Err(domain(format!("requires n >= 2t >= 2 (n={n}, t={t})")));
    }
    if n == 2 * t {
        return Ok(BigUint::one() << n);
    }
    Ok(n_plus_levenshtein(n - 2 * t, 2 * t, 2))
}

/// Both sides of `sum_{j=0}^{m} C(2j, j) C(m+j, 2j) (-1)^{m+j} = 1`.
pub fn central_alternating_identity(m: u64) -> (BigInt, BigInt) {
    let m = m as i64;
    let lhs = (0..=m)
        .map(|j| {
            let term = binom_gen(2 * j, j) * binom_gen(m + j, 2 * j);
            if (m + j) % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum();
    (lhs, BigInt::one())
}

/// Both sides of
/// `sum_{i=0}^{m} C(t+j-i, t+j-m) C(n+t, i) (-1)^{m-i} = C(n+m-j-1, m)`,
/// stated for `t + j >= m`.
pub fn shifted_alternating_identity(n: u64, m: u64, t: u64, j: u64) -> (BigInt, BigInt) {
    let (n, m, t, j) = (n as i64, m as i64, t as i64, j as i64);
    let lhs = (0..=m)
        .map(|i| {
            let term = binom_gen(t + j - i, t + j - m) * binom_gen(n + t, i);
            if (m - i) % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum();
    (lhs, binom_gen(n + m - j - 1, m))
}

/// Both sides of `N(n,t,k,l) = N(n-1,t,k,l) + (q-1) N(n,t-1,k-1,l)`.
pub fn length_recursion(n: i64, t: i64, k: i64, l: i64, q: i64) -> (BigInt, BigInt) {
    let lhs = n_plus_formula(n, t, k, l, q);
    let rhs = n_plus_formula(n - 1, t, k, l, q) + n_plus_formula(n, t - 1, k - 1, l, q) * (q - 1);
    (lhs, rhs)
}

/// Both sides of
/// `N(n,t,k,l) = N(n,t-1,k,l) + N(n-1,t,k-1,l-1) + (q-2) N(n,t-1,k-1,l)`.
pub fn head_mismatch_recursion(n: i64, t: i64, k: i64, l: i64, q: i64) -> (BigInt, BigInt) {
    let lhs = n_plus_formula(n, t, k, l, q);
    let rhs = n_plus_formula(n, t - 1, k, l, q)
        + n_plus_formula(n - 1, t, k - 1, l - 1, q)
        + n_plus_formula(n, t - 1, k - 1, l, q) * (q - 2);
    (lhs, rhs)
}

/// Natural log of a positive big integer.
pub fn ln_big(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        // Exact enough: f64 holds up to ~1e308.
        let f: f64 = v.to_string().parse().unwrap_or(f64::INFINITY);
        if f.is_finite() {
            return f.ln();
        }
    }
    let shift = bits - 64;
    let top: BigUint = v >> shift;
    let top: f64 = top.to_string().parse().expect("64-bit prefix");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
