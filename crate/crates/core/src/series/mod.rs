//! Truncated power series in `t` with polynomial coefficients, and the
//! generating-function and closed-form checks built on them.

pub mod closed;
pub mod jacobi;
pub mod plane;

use std::fmt;

use crate::poly::mpoly::{MPoly, TermOrder, VarContext};
use crate::scalar::Ring;

/// `sum_{k <= order} c_k t^k`, exact modulo `t^{order+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<R> {
    ctx: VarContext,
    coeffs: Vec<MPoly<R>>,
}

impl<R: Ring> TruncSeries<R> {
    pub fn zero(ctx: &VarContext, order: usize) -> Self {
        Self {
            ctx: ctx.clone(),
            coeffs: vec![MPoly::zero(ctx); order + 1],
        }
    }

    /// The polynomial `c` placed at `t^k` (dropped when `k > order`).
    pub fn term(c: &MPoly<R>, k: usize, order: usize) -> Self {
        let mut s = Self::zero(c.context(), order);
        if k <= order {
            s.coeffs[k] = c.clone();
        }
        s
    }

    pub fn from_coeffs(ctx: &VarContext, coeffs: Vec<MPoly<R>>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the t^0 coefficient");
        assert!(coeffs.iter().all(|c| c.context() == ctx));
        Self {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    pub fn coeff(&self, k: usize) -> &MPoly<R> {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MPoly<R>] {
        &self.coeffs
    }

    /// Smallest `k` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &Self, f: impl Fn(&MPoly<R>, &MPoly<R>) -> MPoly<R>) -> Self {
        assert_eq!(self.order(), other.order(), "series of different orders");
        Self {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series of different orders");
        let n = self.order();
        let mut out = Self::zero(&self.ctx, n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::term(&MPoly::one(&self.ctx), 0, self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies every coefficient by the polynomial `c`.
    pub fn scale(&self, c: &MPoly<R>) -> Self {
        Self {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `t^k`, truncating.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(&self.ctx, n);
        for i in 0..=n.saturating_sub(k) {
            if i + k <= n {
                out.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map(&self, f: impl Fn(&MPoly<R>) -> MPoly<R>) -> Self {
        let coeffs: Vec<MPoly<R>> = self.coeffs.iter().map(f).collect();
        Self {
            ctx: coeffs[0].context().clone(),
            coeffs,
        }
    }

    pub fn format_with(&self, order: &TermOrder) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = c.format_with(order);
            let body = if c.len() > 1 && k > 0 {
                format!("({body})")
            } else {
                body
            };
            parts.push(match k {
                0 => body,
                1 => format!("{body}t"),
                _ => format!("{body}t^{k}"),
            });
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut s = parts.join("+");
        s.push_str(&format!("+O(t^{})", self.order() + 1));
        s.replace("+-", "-")
    }
}

impl<R: Ring> fmt::Display for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&TermOrder::lex_desc(&self.ctx)))
    }
}
