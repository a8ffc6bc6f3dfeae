//! Formal derivatives of context-free grammars.
//!
//! A grammar assigns to each variable a polynomial; the derivative `D`
//! acts on variables by the rules and extends to polynomials by linearity
//! and the Leibniz rule, so `D(x^k) = k x^{k-1} D(x)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::mpoly::{parse_mpoly, MPoly, VarContext};
use crate::scalar::Ring;
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
pub struct GrammarRules<R> {
    ctx: VarContext,
    rules: BTreeMap<usize, MPoly<R>>,
}

impl<R: Ring> GrammarRules<R> {
    /// Builds a grammar from `(variable, right-hand side)` pairs. Variables
    /// without a rule are constants (`D v = 0`).
    pub fn new(ctx: &VarContext, rules: Vec<(&str, MPoly<R>)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (name, rhs) in rules {
            let idx = ctx.index(name)?;
            if rhs.context() != ctx {
                return Err(Error::ContextMismatch {
                    expected: ctx.len(),
                    found: rhs.context().len(),
                });
            }
            map.insert(idx, rhs);
        }
        Ok(Self {
            ctx: ctx.clone(),
            rules: map,
        })
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    /// One application of `D`.
    pub fn derive_once(&self, f: &MPoly<R>) -> MPoly<R> {
        let mut out = MPoly::zero(&self.ctx);
        for (e, c) in f.terms() {
            for (&v, rhs) in &self.rules {
                let k = e[v];
                if k == 0 {
                    continue;
                }
                let coeff = c.clone() * R::from_i64(k as i64);
                for (re, rc) in rhs.terms() {
                    let mut ne: Vec<u32> = e.iter().zip(re).map(|(a, b)| a + b).collect();
                    ne[v] -= 1;
                    out.add_term(&ne, coeff.clone() * rc.clone());
                }
            }
        }
        out
    }

    /// `D^n(start)`.
    pub fn derive(&self, start: &MPoly<R>, n: usize) -> MPoly<R> {
        self.derive_all(start, n).pop().unwrap()
    }

    /// `[start, D(start), ..., D^n(start)]`.
    pub fn derive_all(&self, start: &MPoly<R>, n: usize) -> Vec<MPoly<R>> {
        let mut out = Vec::with_capacity(n + 1);
        out.push(start.clone());
        for _ in 0..n {
            let next = self.derive_once(out.last().unwrap());
            out.push(next);
        }
        out
    }
}

/// Parses rules such as `x -> yz, y -> xz` over `ctx`. Every variable in a
/// right-hand side must be declared.
pub fn parse_grammar(ctx: &VarContext, text: &str) -> Result<GrammarRules<BigInt>> {
    let mut rules = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (lhs, rhs) = item.split_once("->").ok_or_else(|| Error::Syntax {
            pos: 0,
            msg: format!("expected `var -> polynomial`, found `{item}`"),
        })?;
        rules.push((lhs.trim(), parse_mpoly(ctx, rhs)?));
    }
    GrammarRules::new(ctx, rules)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eulerian_grammar() {
        let ctx = VarContext::new(&["x", "y"]);
        let g = parse_grammar(&ctx, "x -> xy, y -> xy").unwrap();
        let x = MPoly::var(&ctx, 0);
        assert_eq!(g.derive(&x, 0), x);
        assert_eq!(g.derive(&x, 2).to_string(), "x^2y+xy^2");
        assert_eq!(g.derive(&x, 3).to_string(), "x^3y+4x^2y^2+xy^3");
    }

    #[test]
    fn undeclared_variables_are_rejected() {
        let ctx = VarContext::new(&["x", "y"]);
        assert_eq!(
            parse_grammar(&ctx, "x -> yq").unwrap_err(),
            Error::UndeclaredVariable("q".into())
        );
        assert_eq!(
            parse_grammar(&ctx, "q -> y").unwrap_err(),
            Error::UndeclaredVariable("q".into())
        );
    }

    #[test]
    fn constants_have_zero_derivative() {
        let ctx = VarContext::new(&["x", "c"]);
        let g = parse_grammar(&ctx, "x -> x").unwrap();
        let f = parse_mpoly(&ctx, "3c^2").unwrap();
        assert!(g.derive_once(&f).is_zero());
    }
}
