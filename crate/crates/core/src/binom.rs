//! Exact binomial coefficients, including the generalized coefficient with a
//! negative upper argument.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Ordinary binomial coefficient `C(n, k)` for nonnegative arguments.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // Each partial product is itself a binomial coefficient, so the
        // division is exact.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial coefficient `a (a-1) ... (a-b+1) / b!`.
///
/// Zero for `b < 0` and one for `b = 0` whatever `a` is. A negative upper
/// argument gives `(-1)^b C(b-a-1, b)`.
pub fn binom_gen(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if a >= 0 {
        return BigInt::from(binomial(a as u64, b as u64));
    }
    let magnitude = BigInt::from(binomial((b - a - 1) as u64, b as u64));
    if b % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

pub(crate) fn pow_u(base: u64, exp: u64) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

pub(crate) fn pow_i(base: i64, exp: u64) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}
