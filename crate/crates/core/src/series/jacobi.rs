//! Taylor coefficients of the Jacobi elliptic functions as polynomials in
//! `a = alpha^2`, and their comparison with Schett coefficients.
//!
//! The coefficients come from `sn' = cn dn`, `cn' = -sn dn`,
//! `dn' = -a sn cn` with `sn(0) = 0`, `cn(0) = dn(0) = 1`: the `k`-th
//! derivative of a product at 0 is `sum_i C(k, i) f_i g_{k-i}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::binomial;
use crate::poly::schett::s_coeffs;
use crate::poly::upoly::UPoly;

pub type APoly = UPoly<BigInt>;

/// Entry `k` of each table is the coefficient of `u^k / k!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiTaylor {
    pub sn: Vec<APoly>,
    pub cn: Vec<APoly>,
    pub dn: Vec<APoly>,
}

fn product_derivative(f: &[APoly], g: &[APoly], k: usize) -> APoly {
    (0..=k).fold(APoly::zero(), |acc, i| {
        let c = binomial(k as i64, i as i64);
        acc.add(&f[i].mul(&g[k - i]).scale(&c))
    })
}

pub fn jacobi_taylor(order: usize) -> JacobiTaylor {
    let one = APoly::from_ints(&[1]);
    let minus_a = APoly::from_ints(&[0, -1]);
    let mut sn = vec![APoly::zero()];
    let mut cn = vec![one.clone()];
    let mut dn = vec![one];
    for k in 0..order {
        let s = product_derivative(&cn, &dn, k);
        let c = product_derivative(&sn, &dn, k).scale(&BigInt::from(-1));
        let d = product_derivative(&sn, &cn, k).mul(&minus_a);
        sn.push(s);
        cn.push(c);
        dn.push(d);
    }
    JacobiTaylor { sn, cn, dn }
}

/// One comparison between a Taylor coefficient and two Schett
/// coefficients that should both equal its magnitude.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiRow {
    pub function: String,
    /// Power of `u`.
    pub power: usize,
    /// Power of `alpha^2`.
    pub alpha2: usize,
    pub taylor: BigInt,
    /// Expected sign `(-1)^n` of the Taylor coefficient.
    pub expected_sign: i8,
    pub s_left: BigInt,
    pub s_right: BigInt,
}

impl JacobiRow {
    pub fn holds(&self) -> bool {
        let sign_ok = self.taylor.is_zero()
            || (self.taylor.is_positive() == (self.expected_sign > 0));
        sign_ok && self.taylor.abs() == self.s_left && self.taylor.abs() == self.s_right
    }
}

/// For `n <= max_n`:
/// * `sn`, `u^{2n+1}`, `alpha^{2j}` against `s_{2n,0,j}` and `s_{2n+1,0,j}`;
/// * `cn`, `u^{2n}`, `alpha^{2i}` against `s_{2n-1,i,0}` and `s_{2n,i,0}`;
/// * `dn`, `u^{2n}`, `alpha^{2n-2i}` against the same pair.
///
/// Every index where either side is nonzero is listed.
pub fn jacobi_schett_rows(max_n: usize) -> Vec<JacobiRow> {
    let taylor = jacobi_taylor(2 * max_n + 1);
    let s: BTreeMap<usize, BTreeMap<(u32, u32), BigInt>> =
        (0..=2 * max_n + 1).map(|m| (m, s_coeffs(m))).collect();
    let get = |m: usize, i: usize, j: usize| -> BigInt {
        s[&m].get(&(i as u32, j as u32)).cloned().unwrap_or_default()
    };
    let mut rows = Vec::new();
    for n in 0..=max_n {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let coeff = &taylor.sn[2 * n + 1];
        for j in 0..=n {
            rows.push(JacobiRow {
                function: "sn".into(),
                power: 2 * n + 1,
                alpha2: j,
                taylor: coeff.coeff(j),
                expected_sign: sign,
                s_left: get(2 * n, 0, j),
                s_right: get(2 * n + 1, 0, j),
            });
        }
        if n == 0 {
            continue;
        }
        for i in 0..=n {
            rows.push(JacobiRow {
                function: "cn".into(),
                power: 2 * n,
                alpha2: i,
                taylor: taylor.cn[2 * n].coeff(i),
                expected_sign: sign,
                s_left: get(2 * n - 1, i, 0),
                s_right: get(2 * n, i, 0),
            });
            rows.push(JacobiRow {
                function: "dn".into(),
                power: 2 * n,
                alpha2: n - i,
                taylor: taylor.dn[2 * n].coeff(n - i),
                expected_sign: sign,
                s_left: get(2 * n - 1, i, 0),
                s_right: get(2 * n, i, 0),
            });
        }
    }
    rows
}
