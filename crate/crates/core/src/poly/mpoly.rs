//! Sparse multivariate polynomials over an exact ring.
//!
//! A polynomial lives in a [`VarContext`] (an ordered list of variable
//! names) and stores only nonzero terms, keyed by exponent vectors in
//! context order. Arithmetic between polynomials from different contexts
//! is a programming error and panics; the fallible entry points (parsing,
//! substitution) report [`Error::ContextMismatch`] instead.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::Ring;

pub type Exponents = SmallVec<[u32; 8]>;

/// Ordered variable names shared by all polynomials of one computation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarContext(Arc<[String]>);

impl VarContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Self(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UndeclaredVariable(name.to_string()))
    }

    fn check(&self, other: &VarContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                expected: self.len(),
                found: other.len(),
            })
        }
    }
}

/// How terms are listed when a polynomial is printed: the exponent of each
/// listed variable is compared in turn, ascending or descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    keys: Vec<(usize, bool)>,
}

impl TermOrder {
    /// Lexicographic, highest power first, in context order.
    pub fn lex_desc(ctx: &VarContext) -> Self {
        Self {
            keys: (0..ctx.len()).map(|i| (i, false)).collect(),
        }
    }

    /// Keys as `(variable index, ascending)` pairs.
    pub fn by_keys(keys: Vec<(usize, bool)>) -> Self {
        Self { keys }
    }

    fn compare(&self, a: &[u32], b: &[u32]) -> std::cmp::Ordering {
        for &(v, asc) in &self.keys {
            let ord = a[v].cmp(&b[v]);
            if ord.is_ne() {
                return if asc { ord } else { ord.reverse() };
            }
        }
        a.cmp(b).reverse()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MPoly<R> {
    ctx: VarContext,
    terms: BTreeMap<Exponents, R>,
}

impl<R: Ring> MPoly<R> {
    pub fn zero(ctx: &VarContext) -> Self {
        Self {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &VarContext, c: R) -> Self {
        Self::monomial(ctx, &vec![0; ctx.len()], c)
    }

    pub fn one(ctx: &VarContext) -> Self {
        Self::constant(ctx, R::one())
    }

    pub fn var(ctx: &VarContext, index: usize) -> Self {
        let mut e = vec![0; ctx.len()];
        e[index] = 1;
        Self::monomial(ctx, &e, R::one())
    }

    pub fn var_named(ctx: &VarContext, name: &str) -> Result<Self> {
        Ok(Self::var(ctx, ctx.index(name)?))
    }

    pub fn monomial(ctx: &VarContext, exps: &[u32], c: R) -> Self {
        assert_eq!(exps.len(), ctx.len(), "exponent vector has wrong length");
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(exps.iter().copied().collect(), c);
        }
        p
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &R)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> R {
        self.terms.get(exps).cloned().unwrap_or_else(R::zero)
    }

    /// Adds `c * x^exps` in place.
    pub fn add_term(&mut self, exps: &[u32], c: R) {
        if c.is_zero() {
            return;
        }
        let key: Exponents = exps.iter().copied().collect();
        match self.terms.get_mut(&key) {
            Some(v) => {
                let sum = v.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(&self.ctx);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            let p = v.clone() * c.clone();
            if !p.is_zero() {
                out.terms.insert(e.clone(), p);
            }
        }
        out
    }

    /// Multiplies by `x_var^k`.
    pub fn shift(&self, var: usize, k: u32) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (e, v) in &self.terms {
            let mut e = e.clone();
            e[var] += k;
            out.terms.insert(e, v.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The polynomial with variables permuted: variable `i` of `self`
    /// becomes variable `perm[i]` of the result.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.ctx.len());
        let mut out = Self::zero(&self.ctx);
        for (e, v) in &self.terms {
            let mut ne: Exponents = SmallVec::from_elem(0, e.len());
            for (i, &x) in e.iter().enumerate() {
                ne[perm[i]] = x;
            }
            out.terms.insert(ne, v.clone());
        }
        out
    }

    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.ctx.len()).collect();
        perm.swap(a, b);
        self.permute(&perm)
    }

    /// Collects terms by the power of `var`: entry `k` is the coefficient
    /// of `x_var^k`, still written in the full context (with that exponent
    /// zeroed).
    pub fn slices(&self, var: usize) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (e, v) in &self.terms {
            let k = e[var];
            let mut e = e.clone();
            e[var] = 0;
            out.entry(k)
                .or_insert_with(|| Self::zero(&self.ctx))
                .terms
                .insert(e, v.clone());
        }
        out
    }

    /// Substitutes `value` for variable `var`.
    pub fn substitute(&self, var: usize, value: &Self) -> Result<Self> {
        self.ctx.check(&value.ctx)?;
        let mut out = Self::zero(&self.ctx);
        let mut powers: Vec<Self> = vec![Self::one(&self.ctx)];
        for (k, slice) in self.slices(var) {
            while powers.len() <= k as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            out += &(&slice * &powers[k as usize]);
        }
        Ok(out)
    }

    /// Evaluates every variable.
    pub fn eval(&self, point: &[R]) -> R {
        assert_eq!(point.len(), self.ctx.len());
        let mut sum = R::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                for _ in 0..k {
                    term = term * x.clone();
                }
            }
            sum = sum + term;
        }
        sum
    }

    /// Maps every coefficient, dropping the ones that become zero.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MPoly<S> {
        let mut out = MPoly::zero(&self.ctx);
        for (e, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                out.terms.insert(e.clone(), v);
            }
        }
        out
    }

    /// Re-expresses the polynomial in a context that contains every
    /// variable of the current one.
    pub fn embed(&self, target: &VarContext) -> Result<Self> {
        let map: Vec<usize> = self
            .ctx
            .names()
            .iter()
            .map(|n| target.index(n))
            .collect::<Result<_>>()?;
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne: Exponents = SmallVec::from_elem(0, target.len());
            for (i, &k) in e.iter().enumerate() {
                ne[map[i]] = k;
            }
            out.terms.insert(ne, c.clone());
        }
        Ok(out)
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.signum_i8() >= 0)
    }

    pub fn format_with(&self, order: &TermOrder) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Exponents, &R)> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.compare(a.0, b.0));
        let mut out = String::new();
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let negative = c.signum_i8() < 0;
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if negative {
                out.push('-');
            } else if idx > 0 {
                out.push('+');
            }
            let vars = self.format_monomial(e);
            if vars.is_empty() || !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
            }
            out.push_str(&vars);
        }
        out
    }

    fn format_monomial(&self, e: &[u32]) -> String {
        let mut s = String::new();
        for (name, &k) in self.ctx.names().iter().zip(e) {
            match k {
                0 => {}
                1 => s.push_str(name),
                _ => {
                    s.push_str(name);
                    s.push('^');
                    s.push_str(&k.to_string());
                }
            }
        }
        s
    }
}

impl<R: Ring> fmt::Display for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&TermOrder::lex_desc(&self.ctx)))
    }
}

impl<R: Ring> AddAssign<&MPoly<R>> for MPoly<R> {
    fn add_assign(&mut self, rhs: &MPoly<R>) {
        assert_eq!(self.ctx, rhs.ctx, "polynomials from different contexts");
        for (e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl<R: Ring> SubAssign<&MPoly<R>> for MPoly<R> {
    fn sub_assign(&mut self, rhs: &MPoly<R>) {
        assert_eq!(self.ctx, rhs.ctx, "polynomials from different contexts");
        for (e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl<R: Ring> Add for &MPoly<R> {
    type Output = MPoly<R>;

    fn add(self, rhs: &MPoly<R>) -> MPoly<R> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<R: Ring> Sub for &MPoly<R> {
    type Output = MPoly<R>;

    fn sub(self, rhs: &MPoly<R>) -> MPoly<R> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<R: Ring> Neg for &MPoly<R> {
    type Output = MPoly<R>;

    fn neg(self) -> MPoly<R> {
        self.scale(&-R::one())
    }
}

impl<R: Ring> Mul for &MPoly<R> {
    type Output = MPoly<R>;

    fn mul(self, rhs: &MPoly<R>) -> MPoly<R> {
        assert_eq!(self.ctx, rhs.ctx, "polynomials from different contexts");
        let mut out = MPoly::zero(&self.ctx);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.add_term(&e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr for MPoly<R> {
            type Output = MPoly<R>;

            fn $m(self, rhs: MPoly<R>) -> MPoly<R> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Parses `xy^4+14xy^2z^2-3*x z` style text. Terms are separated by `+`
/// or `-`; a term is an optional integer followed by variables with
/// optional `^k`. `*` and whitespace between factors are ignored.
/// Variable names are matched longest first.
pub fn parse_mpoly(ctx: &VarContext, text: &str) -> Result<MPoly<BigInt>> {
    let bytes = text.as_bytes();
    let mut names: Vec<(usize, &str)> = ctx
        .names()
        .iter()
        .enumerate()
        .map(|(i, n)| (i, n.as_str()))
        .collect();
    names.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));

    let mut pos = 0;
    let skip = |pos: &mut usize| {
        while *pos < bytes.len() && (bytes[*pos].is_ascii_whitespace() || bytes[*pos] == b'*') {
            *pos += 1;
        }
    };
    let syntax = |pos: usize, msg: &str| Error::Syntax {
        pos,
        msg: msg.to_string(),
    };
    let number = |pos: &mut usize| -> Option<u64> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (start < *pos).then(|| text[start..*pos].parse().ok()).flatten()
    };

    let mut out = MPoly::zero(ctx);
    skip(&mut pos);
    if pos == bytes.len() {
        return Err(syntax(pos, "empty polynomial"));
    }
    let mut first = true;
    while pos < bytes.len() {
        let mut sign = BigInt::from(1);
        match bytes[pos] {
            b'+' => pos += 1,
            b'-' => {
                sign = BigInt::from(-1);
                pos += 1;
            }
            _ if first => {}
            _ => return Err(syntax(pos, "expected `+` or `-`")),
        }
        first = false;
        skip(&mut pos);
        let mut coeff = sign;
        let mut any = false;
        if pos < bytes.len() && bytes[pos].is_ascii_digit() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let v: BigInt = text[start..pos].parse().unwrap();
            coeff *= v;
            any = true;
        }
        let mut exps = vec![0u32; ctx.len()];
        loop {
            skip(&mut pos);
            let Some((idx, name)) = names
                .iter()
                .find(|(_, n)| text[pos..].starts_with(n))
                .copied()
            else {
                break;
            };
            pos += name.len();
            let mut k = 1;
            if bytes.get(pos) == Some(&b'^') {
                pos += 1;
                let at = pos;
                k = number(&mut pos).ok_or_else(|| syntax(at, "expected an exponent"))? as u32;
            }
            exps[idx] += k;
            any = true;
        }
        if !any {
            if pos < bytes.len() && bytes[pos].is_ascii_alphabetic() {
                let end = text[pos..]
                    .find(|c: char| !c.is_ascii_alphanumeric())
                    .map_or(text.len(), |e| pos + e);
                return Err(Error::UndeclaredVariable(text[pos..end].to_string()));
            }
            return Err(syntax(pos, "expected a coefficient or a variable"));
        }
        out.add_term(&exps, coeff);
        skip(&mut pos);
        if pos < bytes.len() && bytes[pos].is_ascii_alphabetic() {
            let end = text[pos..]
                .find(|c: char| !c.is_ascii_alphanumeric())
                .map_or(text.len(), |e| pos + e);
            return Err(Error::UndeclaredVariable(text[pos..end].to_string()));
        }
    }
    Ok(out)
}
