//! Small exact counting helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient with `C(n, 0) = 1` for every `n` (including
/// negative `n`) and zero whenever `k < 0` or `0 <= n < k`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if k == 0 {
        return BigInt::one();
    }
    if n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i);
        acc /= i + 1;
    }
    acc
}

/// Multinomial `n! / (parts[0]! parts[1]! ...)`, zero when any part is
/// negative or the parts do not sum to `n`.
pub fn multinomial(n: i64, parts: &[i64]) -> BigInt {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    let mut rest = n;
    for &p in parts {
        acc *= binomial(rest, p);
        rest -= p;
    }
    acc
}

pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

/// Euler (zigzag) numbers `E_0..=E_max`, the Taylor coefficients of
/// `sec x + tan x`, from `2 E_{n+1} = sum_k C(n,k) E_k E_{n-k}` (n >= 1).
pub fn euler_numbers(max: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::one()];
    if max >= 1 {
        e.push(BigInt::one());
    }
    for n in 1..max {
        let s: BigInt = (0..=n)
            .map(|k| binomial(n as i64, k as i64) * &e[k] * &e[n - k])
            .sum();
        let (q, r) = s.div_rem(&BigInt::from(2));
        assert!(r.is_zero());
        e.push(q);
    }
    e
}
