//! Schett polynomials, their multiset versions and the partial
//! gamma-expansion of the reduced polynomial.
//!
//! Tree-side polynomials use the variables `x, y, z` for the statistics
//! `ee, oe, odd` (reduced: their halves, rounded down).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::binary::{bstats, rho, BStatVector};
use crate::enumerate::for_each_tree;
use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::poly::grammar::{parse_grammar, GrammarRules};
use crate::poly::mpoly::{MPoly, TermOrder, VarContext};
use crate::poly::upoly::UPoly;
use crate::tree::{stats, StatVector};

pub type IntPoly = MPoly<BigInt>;

pub fn xyz() -> VarContext {
    VarContext::new(&["x", "y", "z"])
}

pub fn wxyz() -> VarContext {
    VarContext::new(&["w", "x", "y", "z"])
}

/// `x -> yz, y -> xz, z -> xy`.
pub fn schett_grammar() -> GrammarRules<BigInt> {
    parse_grammar(&xyz(), "x -> yz, y -> xz, z -> xy").expect("fixed grammar")
}

/// `w -> wy, x -> yz, y -> xz, z -> xy`.
pub fn four_var_grammar() -> GrammarRules<BigInt> {
    parse_grammar(&wxyz(), "w -> wy, x -> yz, y -> xz, z -> xy").expect("fixed grammar")
}

/// Printing order for Schett polynomials: ascending in `x`, then
/// descending in `y` and `z`.
pub fn schett_order() -> TermOrder {
    TermOrder::by_keys(vec![(0, true), (1, false), (2, false)])
}

pub fn format_schett(p: &IntPoly) -> String {
    p.format_with(&schett_order())
}

/// `S_n = D^n(x)`.
pub fn schett_poly(n: usize) -> IntPoly {
    schett_grammar().derive(&MPoly::var(&xyz(), 0), n)
}

/// `S_0, ..., S_n`.
pub fn schett_polys(n: usize) -> Vec<IntPoly> {
    schett_grammar().derive_all(&MPoly::var(&xyz(), 0), n)
}

/// `D^n(w)` under the four-variable grammar.
pub fn four_var_poly(n: usize) -> IntPoly {
    four_var_grammar().derive(&MPoly::var(&wxyz(), 0), n)
}

/// `s_{n,i,j}`: coefficients of `S_n` keyed by
/// `(floor(ee/2), floor(oe/2))`.
pub fn s_coeffs_of(s_n: &IntPoly) -> BTreeMap<(u32, u32), BigInt> {
    let mut out = BTreeMap::new();
    for (e, c) in s_n.terms() {
        let prev = out.insert((e[0] / 2, e[1] / 2), c.clone());
        assert!(prev.is_none(), "two monomials share the index {:?}", (e[0] / 2, e[1] / 2));
    }
    out
}

pub fn s_coeffs(n: usize) -> BTreeMap<(u32, u32), BigInt> {
    s_coeffs_of(&schett_poly(n))
}

/// `t_{n,i,j}`: coefficients of `D^n(w)` keyed by
/// `(exponent of x, floor(exponent of y / 2))`.
pub fn t_coeffs(n: usize) -> BTreeMap<(u32, u32), BigInt> {
    let mut out = BTreeMap::new();
    for (e, c) in four_var_poly(n).terms() {
        assert_eq!(e[0], 1, "every term of D^n(w) carries exactly one w");
        let prev = out.insert((e[1], e[2] / 2), c.clone());
        assert!(prev.is_none(), "two monomials share the index {:?}", (e[1], e[2] / 2));
    }
    out
}

/// One line of the `s`/`t` comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StRow {
    pub n: usize,
    pub i: u32,
    pub j: u32,
    pub s: BigInt,
    pub t_sum: BigInt,
}

/// Compares `s_{2m-1,i,j}` with `t_{2m-1,2i-1,j} + t_{2m-1,2i,j}` and
/// `s_{2m,i,j}` with `t_{2m,2i+1,j} + t_{2m,2i,j}` over every index pair
/// where either side is nonzero.
pub fn st_relations(m: usize) -> Vec<StRow> {
    assert!(m >= 1, "the relations start at m = 1");
    let mut rows = Vec::new();
    for n in [2 * m - 1, 2 * m] {
        let s = s_coeffs(n);
        let t = t_coeffs(n);
        let get = |i: i64, j: u32| -> BigInt {
            if i < 0 {
                BigInt::zero()
            } else {
                t.get(&(i as u32, j)).cloned().unwrap_or_default()
            }
        };
        let mut keys: Vec<(u32, u32)> = s.keys().copied().collect();
        for &(ti, tj) in t.keys() {
            let si = if n % 2 == 1 { (ti + 1) / 2 } else { ti / 2 };
            keys.push((si, tj));
        }
        keys.sort_unstable();
        keys.dedup();
        for (i, j) in keys {
            let i64i = i as i64;
            let t_sum = if n % 2 == 1 {
                get(2 * i64i - 1, j) + get(2 * i64i, j)
            } else {
                get(2 * i64i + 1, j) + get(2 * i64i, j)
            };
            rows.push(StRow {
                n,
                i,
                j,
                s: s.get(&(i, j)).cloned().unwrap_or_default(),
                t_sum,
            });
        }
    }
    rows
}

/// Sums `x^a y^b z^c` over `T_M`, with `(a, b, c)` chosen by `key`.
pub fn stat_poly(
    m: &Multiset,
    bound: usize,
    key: impl Fn(&StatVector) -> [u32; 3],
) -> Result<IntPoly> {
    let mut counts: BTreeMap<[u32; 3], u64> = BTreeMap::new();
    for_each_tree(m, bound, |t| *counts.entry(key(&stats(&t))).or_insert(0) += 1)?;
    Ok(poly_from_counts(counts))
}

/// [`stat_poly`] over statistic vectors that are already computed.
pub fn stat_poly_of<'a>(
    all: impl IntoIterator<Item = &'a StatVector>,
    key: impl Fn(&StatVector) -> [u32; 3],
) -> IntPoly {
    let mut counts: BTreeMap<[u32; 3], u64> = BTreeMap::new();
    for s in all {
        *counts.entry(key(s)).or_insert(0) += 1;
    }
    poly_from_counts(counts)
}

fn poly_from_counts(counts: BTreeMap<[u32; 3], u64>) -> IntPoly {
    let mut out = MPoly::zero(&xyz());
    for (e, c) in counts {
        out.add_term(&e, BigInt::from(c));
    }
    out
}

/// Exponents of `S_M`.
pub fn ee_oe_odd(s: &StatVector) -> [u32; 3] {
    [s.ee as u32, s.oe as u32, s.odd as u32]
}

/// Exponents of `S^_M`.
pub fn reduced_exponents(s: &StatVector) -> [u32; 3] {
    ee_oe_odd(s).map(|v| v / 2)
}

/// `S_M = sum x^ee y^oe z^odd` over `T_M`.
pub fn multiset_schett(m: &Multiset, bound: usize) -> Result<IntPoly> {
    stat_poly(m, bound, ee_oe_odd)
}

/// `S^_M`: the same sum with every exponent halved and rounded down.
pub fn reduced_schett(m: &Multiset, bound: usize) -> Result<IntPoly> {
    stat_poly(m, bound, reduced_exponents)
}

/// Halves every exponent (rounding down), turning `S_M` into `S^_M`.
pub fn reduce(p: &IntPoly) -> IntPoly {
    let mut out = MPoly::zero(p.context());
    for (e, c) in p.terms() {
        let h: Vec<u32> = e.iter().map(|v| v / 2).collect();
        out.add_term(&h, c.clone());
    }
    out
}

/// `S^_{M,i}(t)`: the coefficient of `x^i` in `S^_M` at `y = t, z = 1`.
pub fn reduced_slice(reduced: &IntPoly, i: u32) -> UPoly<BigInt> {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for (e, c) in reduced.terms() {
        if e[0] != i {
            continue;
        }
        let k = e[1] as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        coeffs[k] += c;
    }
    UPoly::new(coeffs)
}

/// Coefficients `g_{i,j}` of
/// `S^_M = sum_i x^i sum_j g_{i,j} (yz)^j (y+z)^{floor(p/2)-i-2j}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaTable {
    pub p: usize,
    pub entries: BTreeMap<(u32, u32), BigInt>,
}

impl GammaTable {
    pub fn get(&self, i: u32, j: u32) -> BigInt {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|v| !v.is_negative())
    }

    /// Rebuilds the reduced polynomial from the table.
    pub fn expand(&self) -> IntPoly {
        let ctx = xyz();
        let yz = MPoly::monomial(&ctx, &[0, 1, 1], BigInt::from(1));
        let y_plus_z = &MPoly::var(&ctx, 1) + &MPoly::var(&ctx, 2);
        let mut out = MPoly::zero(&ctx);
        for (&(i, j), g) in &self.entries {
            let d = (self.p / 2) as u32 - i;
            let basis = &yz.pow(j) * &y_plus_z.pow(d - 2 * j);
            out += &basis.shift(0, i).scale(g);
        }
        out
    }
}

/// Peels the partial gamma-expansion off the reduced polynomial of a
/// multiset of size `p`. For each `x^i` slice of degree `d`, the basis
/// element `(yz)^j (y+z)^{d-2j}` is the only one still reaching
/// `y^{d-j} z^j` once the smaller `j` are removed, so the coefficients are
/// read off in order of increasing `j`. Any residual is an error.
pub fn gamma_expand(reduced: &IntPoly, p: usize) -> Result<GammaTable> {
    let ctx = xyz();
    let half = (p / 2) as i64;
    let mut entries = BTreeMap::new();
    for (i, slice) in reduced.slices(0) {
        let d = half - i as i64;
        if d < 0 {
            return Err(Error::Expansion(format!(
                "x^{i} exceeds the maximal power {half}"
            )));
        }
        let d = d as u32;
        let yz = MPoly::monomial(&ctx, &[0, 1, 1], BigInt::from(1));
        let y_plus_z = &MPoly::var(&ctx, 1) + &MPoly::var(&ctx, 2);
        let mut residual = slice;
        for j in 0..=d / 2 {
            let g = residual.coeff(&[0, d - j, j]);
            if g.is_zero() {
                continue;
            }
            let basis = &yz.pow(j) * &y_plus_z.pow(d - 2 * j);
            residual -= &basis.scale(&g);
            entries.insert((i, j), g);
        }
        if !residual.is_zero() {
            return Err(Error::Expansion(format!(
                "x^{i} slice leaves residual {residual}"
            )));
        }
    }
    Ok(GammaTable { p, entries })
}

/// `gamma_expand` applied to the enumerated reduced polynomial of `M`.
pub fn gamma_expand_multiset(m: &Multiset, bound: usize) -> Result<GammaTable> {
    gamma_expand(&reduced_schett(m, bound)?, m.size())
}

/// Gamma coefficients counted on binary trees: trees with no active even
/// node, grouped by `floor(eler/2)` and by `j` with
/// `act = floor(p/2) - i - 2j`. Trees where no such `j` exists are
/// reported as an error.
pub fn gamma_by_action(m: &Multiset, bound: usize) -> Result<GammaTable> {
    let mut all = Vec::new();
    for_each_tree(m, bound, |t| all.push(bstats(&rho(&t))))?;
    gamma_by_action_of(m.size(), &all)
}

/// [`gamma_by_action`] over the binary statistics of every tree of `B_M`.
pub fn gamma_by_action_of(p: usize, all: &[BStatVector]) -> Result<GammaTable> {
    let half = (p / 2) as i64;
    let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for s in all.iter().filter(|s| s.eact == 0) {
        let i = (s.eler / 2) as i64;
        let rest = half - i - s.act as i64;
        if rest < 0 || rest % 2 != 0 {
            return Err(Error::Expansion(format!(
                "active count does not fit the expansion shape: act = {}, i = {i}",
                s.act
            )));
        }
        *counts.entry((i as u32, (rest / 2) as u32)).or_insert(0) += 1;
    }
    Ok(GammaTable {
        p,
        entries: counts
            .into_iter()
            .map(|(k, v)| (k, BigInt::from(v)))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::mpoly::parse_mpoly;

    #[test]
    fn first_schett_polynomials() {
        let s: Vec<String> = schett_polys(4).iter().map(format_schett).collect();
        assert_eq!(s[0], "x");
        assert_eq!(s[1], "yz");
        assert_eq!(s[2], "xy^2+xz^2");
        assert_eq!(s[3], "y^3z+yz^3+4x^2yz");
        assert_eq!(s[4], "xy^4+14xy^2z^2+xz^4+4x^3y^2+4x^3z^2");
    }

    #[test]
    fn four_var_small() {
        assert_eq!(four_var_poly(1).to_string(), "wy");
        assert_eq!(t_coeffs(1), BTreeMap::from([((0, 0), BigInt::from(1))]));
    }

    #[test]
    fn reduction_halves_exponents() {
        let p = parse_mpoly(&xyz(), "x^3y^2z+5xz^4").unwrap();
        assert_eq!(reduce(&p), parse_mpoly(&xyz(), "xy+5z^2").unwrap());
    }

    #[test]
    fn gamma_on_known_expansion() {
        // 3x(y+z) + (y+z)^2 + 8yz with p = 4
        let r = parse_mpoly(&xyz(), "3xy+3xz+y^2+10yz+z^2").unwrap();
        let g = gamma_expand(&r, 4).unwrap();
        assert_eq!(g.get(1, 0), BigInt::from(3));
        assert_eq!(g.get(0, 0), BigInt::from(1));
        assert_eq!(g.get(0, 1), BigInt::from(8));
        assert_eq!(g.entries.len(), 3);
        assert_eq!(g.expand(), r);
    }

    #[test]
    fn gamma_rejects_non_symmetric_input() {
        let r = parse_mpoly(&xyz(), "y^2+z").unwrap();
        assert!(matches!(gamma_expand(&r, 4), Err(Error::Expansion(_))));
        let r = parse_mpoly(&xyz(), "x^3").unwrap();
        assert!(matches!(gamma_expand(&r, 4), Err(Error::Expansion(_))));
    }

    #[test]
    fn slices_read_the_y_exponent() {
        let r = parse_mpoly(&xyz(), "3xy+3xz+y^2+10yz+z^2").unwrap();
        assert_eq!(reduced_slice(&r, 1), UPoly::from_ints(&[3, 3]));
        assert_eq!(reduced_slice(&r, 0), UPoly::from_ints(&[1, 10, 1]));
        assert!(reduced_slice(&r, 5).is_zero());
    }
}
