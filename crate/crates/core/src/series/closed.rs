//! Closed-form plane-tree counts obtained by Lagrange inversion.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, factorial, multinomial};

fn exact_div(num: BigInt, den: BigInt, what: &str) -> BigInt {
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "{what}: division is not exact");
    q
}

fn half(v: i64) -> Option<i64> {
    (v >= 0 && v % 2 == 0).then_some(v / 2)
}

fn fact(v: i64) -> BigInt {
    assert!(v >= 0, "factorial of a negative number");
    factorial(v as u64)
}

/// Number of plane trees with `(oe, ee, oo, eo) = (i, j, k, l)`:
///
/// `(i+k) ((i+k+l)/2 + j - 1)! ((j+k+l-1)/2 + i - 1)!`
/// `/ (i! j! k! l! ((i+k-l)/2)! ((j+l-k-1)/2)!)`
///
/// when both halves are nonnegative integers, zero otherwise. The formula
/// covers trees with at least one edge; the single-node tree
/// `(0, 1, 0, 0)` is added separately.
pub fn closed_count(i: u32, j: u32, k: u32, l: u32) -> BigInt {
    if (i, j, k, l) == (0, 1, 0, 0) {
        return BigInt::one();
    }
    let (i, j, k, l) = (i as i64, j as i64, k as i64, l as i64);
    let (Some(h1), Some(h2)) = (half(i + k - l), half(j + l - k - 1)) else {
        return BigInt::zero();
    };
    if i + k == 0 {
        return BigInt::zero();
    }
    let num = BigInt::from(i + k) * fact((i + k + l) / 2 + j - 1) * fact((j + k + l - 1) / 2 + i - 1);
    let den = fact(i) * fact(j) * fact(k) * fact(l) * fact(h1) * fact(h2);
    exact_div(num, den, "closed count")
}

/// The six-term multinomial sum read directly off the Lagrange extraction
/// at `t = 1`, before simplification. Same single-node convention as
/// [`closed_count`].
pub fn six_term_count(i: u32, j: u32, k: u32, l: u32) -> BigInt {
    if (i, j, k, l) == (0, 1, 0, 0) {
        return BigInt::one();
    }
    let (i, j, k, l) = (i as i64, j as i64, k as i64, l as i64);
    if (i + k - l) % 2 != 0 || (j + l - k - 1) % 2 != 0 {
        return BigInt::zero();
    }
    let h1 = (i + k - l).div_euclid(2);
    let h2 = (j + l - k - 1).div_euclid(2);
    // multinomial with its top equal to the sum of the parts
    let mn = |parts: [i64; 3]| multinomial(parts.iter().sum(), &parts);
    let a = mn([h1, l, j - 1]);
    let a_l = mn([h1, l - 1, j]);
    let a_low = mn([h1 - 1, l, j]);
    let b = mn([h2, k, i - 1]);
    let b_k = mn([h2, k - 1, i]);
    let b_low = mn([h2 - 1, k, i]);
    &a * &b + &a * &b_k + &a_l * &b
        - BigInt::from(2) * &a_low * &b_k
        - BigInt::from(2) * &a_l * &b_low
        - BigInt::from(4) * &a_low * &b_low
}

/// Plane trees with `odd = 0`, `oe = 2i`, `ee = 2j+1`:
/// `C(2j+i, i) C(2i+j-1, j) / (2j+1)`.
pub fn jaco2_count(i: u32, j: u32) -> BigInt {
    let (i, j) = (i as i64, j as i64);
    exact_div(
        binomial(2 * j + i, i) * binomial(2 * i + j - 1, j),
        BigInt::from(2 * j + 1),
        "jaco2 count",
    )
}

/// Plane trees with `ee = 0`, `oe = 2i+1`, `odd = 2j+1`:
/// `(2i+2j+1) / ((2i+1)(2j+1)) C(2i+j, j) C(2j+i, i)`.
pub fn fish_count(i: u32, j: u32) -> BigInt {
    let (i, j) = (i as i64, j as i64);
    exact_div(
        BigInt::from(2 * i + 2 * j + 1) * binomial(2 * i + j, j) * binomial(2 * j + i, i),
        BigInt::from((2 * i + 1) * (2 * j + 1)),
        "fish count",
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TernaryCheck {
    pub n: u32,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl TernaryCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `C(3n, n) / (2n+1)` against
/// `sum_{j<n} C(n+j, 2j) C(2n-j-1, j) / (2j+1)`, for `n >= 1`.
pub fn ternary_identity(n: u32) -> TernaryCheck {
    assert!(n >= 1, "the identity is stated for n >= 1");
    let n64 = n as i64;
    let lhs = exact_div(binomial(3 * n64, n64), BigInt::from(2 * n64 + 1), "ternary");
    let rhs = (0..n64)
        .map(|j| {
            exact_div(
                binomial(n64 + j, 2 * j) * binomial(2 * n64 - j - 1, j),
                BigInt::from(2 * j + 1),
                "ternary term",
            )
        })
        .sum();
    TernaryCheck { n, lhs, rhs }
}
