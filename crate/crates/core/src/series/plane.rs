//! The plane-tree generating function
//! `N = sum_T t^{edges} x^oe y^ee z^oo w^eo` and its algebraic equations.
//!
//! Series coefficients live in the context `w, x, y, z`, which is also the
//! printing order.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinat::multinomial;
use crate::poly::mpoly::{parse_mpoly, MPoly, VarContext};
use crate::poly::schett::{wxyz, xyz, IntPoly};
use crate::series::TruncSeries;

pub type IntSeries = TruncSeries<BigInt>;

const W: usize = 0;
const X: usize = 1;
const Y: usize = 2;
const Z: usize = 3;

fn poly(s: &str) -> IntPoly {
    parse_mpoly(&wxyz(), s).expect("fixed polynomial")
}

/// `N*(x, y, z, w) = N(y, x, w, z)`.
pub fn star(n: &IntSeries) -> IntSeries {
    n.map(|c| c.swap_vars(X, Y).swap_vars(Z, W))
}

/// Solves `N = y + w t N* + N (t N*)^2`, `N* = x + z t N + N* (t N)^2`
/// by fixpoint iteration; each round fixes one more power of `t`.
pub fn plane_gf(order: usize) -> IntSeries {
    let ctx = wxyz();
    let y = IntSeries::term(&MPoly::var(&ctx, Y), 0, order);
    let wt = poly("w");
    let mut n = y.clone();
    for _ in 0..=order + 1 {
        let ns = star(&n);
        let tns = ns.shift(1);
        let next = y.add(&tns.scale(&wt)).add(&n.mul(&tns.mul(&tns)));
        if next == n {
            break;
        }
        n = next;
    }
    n
}

/// Residual of a series equation: `None` when it vanishes identically,
/// otherwise the first power of `t` with a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicReport {
    pub order: usize,
    pub alg_n_first_nonzero: Option<usize>,
    pub alg_n_w_eq_z_first_nonzero: Option<usize>,
    /// First power where `N|_{w=z}` is not symmetric in `x` and `z`.
    pub xz_asymmetry: Option<usize>,
}

impl AlgebraicReport {
    pub fn passed(&self) -> bool {
        self.alg_n_first_nonzero.is_none()
            && self.alg_n_w_eq_z_first_nonzero.is_none()
            && self.xz_asymmetry.is_none()
    }
}

/// The quintic satisfied by `N`, evaluated at `n`.
pub fn alg_n_residual(n: &IntSeries) -> IntSeries {
    let order = n.order();
    let c = |s: &str, k: usize| IntSeries::term(&poly(s), k, order);
    let n2 = n.mul(n);
    let n3 = n2.mul(n);
    let n4 = n3.mul(n);
    let n5 = n4.mul(n);
    n5.mul(&c("1", 4))
        .sub(&n4.mul(&c("y", 4)))
        .sub(&n3.mul(&c("2", 2)))
        .add(&n2.mul(&c("2y", 2)))
        .add(n)
        .sub(&c("y", 0))
        .sub(&c("wx", 1))
        .add(&n3.mul(&c("wz-z^2", 4)))
        .add(&n2.mul(&c("wx-2xz", 3)))
        .sub(&n.mul(&c("wz+x^2", 2)))
}

/// The specialisation at `w = z`, evaluated at `n` (whose coefficients
/// must not involve `w`).
pub fn alg_n_w_eq_z_residual(n: &IntSeries) -> IntSeries {
    let order = n.order();
    let c = |s: &str, k: usize| IntSeries::term(&poly(s), k, order);
    let n2 = n.mul(n);
    let n3 = n2.mul(n);
    let n4 = n3.mul(n);
    let n5 = n4.mul(n);
    n5.mul(&c("1", 4))
        .sub(&n4.mul(&c("y", 4)))
        .sub(&n3.mul(&c("2", 2)))
        .add(&n2.mul(&c("2y", 2).sub(&c("xz", 3))))
        .add(n)
        .sub(&n.mul(&c("z^2+x^2", 2)))
        .sub(&c("y", 0))
        .sub(&c("zx", 1))
}

/// `N` with `w` replaced by `z`.
pub fn at_w_eq_z(n: &IntSeries) -> IntSeries {
    let z = MPoly::var(&wxyz(), Z);
    n.map(|c| c.substitute(W, &z).expect("same context"))
}

pub fn check_algebraic_eq(order: usize) -> AlgebraicReport {
    let n = plane_gf(order);
    let nwz = at_w_eq_z(&n);
    let swapped = nwz.map(|c| c.swap_vars(X, Z));
    AlgebraicReport {
        order,
        alg_n_first_nonzero: alg_n_residual(&n).valuation(),
        alg_n_w_eq_z_first_nonzero: alg_n_w_eq_z_residual(&nwz).valuation(),
        xz_asymmetry: nwz.sub(&swapped).valuation(),
    }
}

/// Rewrites the coefficient of `t^n` in `N` (plane trees with `n` edges)
/// as `sum x^ee y^oe z^odd`, with `odd = oo + eo`.
pub fn plane_schett(n_coeff: &IntPoly) -> IntPoly {
    let ctx = xyz();
    let mut out = MPoly::zero(&ctx);
    for (e, c) in n_coeff.terms() {
        out.add_term(&[e[Y], e[X], e[Z] + e[W]], c.clone());
    }
    out
}

fn tctx() -> VarContext {
    VarContext::new(&["t", "w", "x", "y", "z"])
}

/// `K` as `(a, b, t, monomial in w,x,y,z, coefficient)`.
const K_TERMS: [(u32, u32, u32, [u32; 4], i64); 6] = [
    (0, 0, 0, [0, 1, 1, 0], 1),
    (1, 0, 1, [0, 0, 1, 1], 1),
    (0, 1, 1, [1, 1, 0, 0], 1),
    (2, 2, 3, [0, 0, 0, 1], -2),
    (2, 2, 3, [1, 0, 0, 0], -2),
    (3, 3, 4, [0, 0, 0, 0], -4),
];

/// `[a^n b^{m+1}] K (t^2 a b^2 + t w b + y)^n (t^2 b a^2 + t z a + x)^m`
/// as a polynomial in `t, w, x, y, z`.
///
/// The powers are expanded by choosing how many factors take each of the
/// three summands, so only the requested `a, b` degree is ever formed.
pub fn lagrange_coeff(n: u32, m: u32) -> MPoly<BigInt> {
    let ctx = tctx();
    let mut out = MPoly::zero(&ctx);
    let (ni, mi) = (n as i64, m as i64);
    for c1 in 0..=n {
        for c2 in 0..=n - c1 {
            let c3 = n - c1 - c2;
            for d1 in 0..=m {
                for d2 in 0..=m - d1 {
                    let d3 = m - d1 - d2;
                    let a = c1 + 2 * d1 + d2;
                    let b = 2 * c1 + c2 + d1;
                    for &(ka, kb, kt, kmon, kc) in &K_TERMS {
                        if a + ka != n || b + kb != m + 1 {
                            continue;
                        }
                        let weight = multinomial(ni, &[c1 as i64, c2 as i64, c3 as i64])
                            * multinomial(mi, &[d1 as i64, d2 as i64, d3 as i64])
                            * BigInt::from(kc);
                        let t = 2 * c1 + c2 + 2 * d1 + d2 + kt;
                        let e = [
                            t,
                            c2 + kmon[0],
                            d3 + kmon[1],
                            c3 + kmon[2],
                            d2 + kmon[3],
                        ];
                        out.add_term(&e, weight);
                    }
                }
            }
        }
    }
    out
}

/// Assembles `N` from the Lagrange coefficients. The extraction formula
/// accounts for every tree with at least one edge; the single-node tree
/// contributes the separate constant `y`.
pub fn lagrange_series(order: usize) -> IntSeries {
    let ctx = wxyz();
    let mut coeffs = vec![MPoly::zero(&ctx); order + 1];
    coeffs[0] = MPoly::var(&ctx, Y);
    // every unit of a- or b-degree costs at least 2/3 of a power of t
    let max_nm = (3 * order) / 2;
    for n in 0..=max_nm as u32 {
        for m in 0..=max_nm as u32 - n {
            for (e, c) in lagrange_coeff(n, m).terms() {
                let k = e[0] as usize;
                if k <= order {
                    coeffs[k].add_term(&e[1..], c.clone());
                }
            }
        }
    }
    IntSeries::from_coeffs(&ctx, coeffs)
}
