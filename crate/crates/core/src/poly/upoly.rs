//! Dense univariate polynomials and exact real-root counting.

use std::fmt;

use crate::scalar::{Field, FromBigInt, Ring};
use num_bigint::BigInt;

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * R::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Removes the largest power of the variable dividing the polynomial and
    /// returns it with the quotient.
    pub fn strip_low_powers(&self) -> (usize, Self) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (k, Self::new(self.coeffs[k.min(self.coeffs.len())..].to_vec()))
    }

    /// `a_k = a_{d-k}` for the degree `d`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Coefficients weakly increase and then weakly decrease.
    pub fn is_unimodal(&self) -> bool {
        let mut falling = false;
        for w in self.coeffs.windows(2) {
            let step = (w[1].clone() - w[0].clone()).signum_i8();
            if step > 0 && falling {
                return false;
            }
            if step < 0 {
                falling = true;
            }
        }
        true
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| c.signum_i8() >= 0)
    }
}

impl<F: Field> UPoly<F> {
    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = rem[top].clone() / lead.clone();
            let shift = top - dd;
            for (k, dc) in d.coeffs.iter().enumerate() {
                rem[shift + k] = rem[shift + k].clone() - c.clone() * dc.clone();
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = F::one() / l.clone();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `f / gcd(f, f')`: same roots, each simple.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Sturm chain `p, p', -rem(p, p'), ...`.
    pub fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![self.clone()];
        if self.is_zero() {
            return seq;
        }
        let d = self.derivative();
        if d.is_zero() {
            return seq;
        }
        seq.push(d);
        loop {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&-F::one()));
        }
        seq
    }

    /// Number of distinct real roots, from sign variations of the Sturm
    /// chain at minus and plus infinity.
    pub fn count_real_roots(&self) -> usize {
        let seq = self.sturm_sequence();
        let signs_at = |plus: bool| -> Vec<i8> {
            seq.iter()
                .filter_map(|p| {
                    let d = p.degree()?;
                    let s = p.leading()?.signum_i8();
                    Some(if plus || d % 2 == 0 { s } else { -s })
                })
                .collect()
        };
        variations(&signs_at(false)) - variations(&signs_at(true))
    }
}

fn variations(signs: &[i8]) -> usize {
    let nz: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Evidence for a real-rootedness verdict.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct RootReport {
    pub degree: Option<usize>,
    /// Power of the variable divided out before counting (roots at 0).
    pub zero_root_multiplicity: usize,
    pub squarefree_degree: usize,
    pub distinct_real_roots: usize,
    pub real_rooted: bool,
    /// The polynomial was identically zero.
    pub vacuous: bool,
}

/// Decides exactly whether an integer polynomial has only real roots.
///
/// All roots are real precisely when the squarefree part has as many
/// distinct real roots as its degree.
pub fn real_rooted<F: Field + FromBigInt>(p: &UPoly<BigInt>) -> RootReport {
    if p.is_zero() {
        return RootReport {
            degree: None,
            zero_root_multiplicity: 0,
            squarefree_degree: 0,
            distinct_real_roots: 0,
            real_rooted: true,
            vacuous: true,
        };
    }
    let (k, rest) = p.strip_low_powers();
    let f: UPoly<F> = UPoly::new(rest.coeffs().iter().map(F::from_bigint).collect());
    let sf = f.squarefree_part();
    let sd = sf.degree().unwrap_or(0);
    let roots = sf.count_real_roots();
    RootReport {
        degree: p.degree(),
        zero_root_multiplicity: k,
        squarefree_degree: sd,
        distinct_real_roots: roots,
        real_rooted: roots == sd,
        vacuous: false,
    }
}

impl<R: Ring> fmt::Display for UPoly<R> {
    /// Ascending powers of `t`, e.g. `3+3t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum_i8() < 0;
            let mag = if neg { -c.clone() } else { c.clone() };
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = UPoly<BigRational>;
    type Z = UPoly<BigInt>;

    #[test]
    fn division_and_gcd() {
        let a = Q::from_ints(&[-1, 0, 1]); // t^2 - 1
        let b = Q::from_ints(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Q::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&Q::from_ints(&[-1, 1])), Q::from_ints(&[-1, 1]));
    }

    #[test]
    fn sturm_counts() {
        // (t-1)(t-2)(t-3)
        assert_eq!(Q::from_ints(&[-6, 11, -6, 1]).count_real_roots(), 3);
        // t^2 + 1
        assert_eq!(Q::from_ints(&[1, 0, 1]).count_real_roots(), 0);
        // (t+1)^2 has one distinct root
        assert_eq!(Q::from_ints(&[1, 2, 1]).count_real_roots(), 1);
        assert_eq!(Q::from_ints(&[5]).count_real_roots(), 0);
    }

    #[test]
    fn real_rootedness_verdicts() {
        let r = real_rooted::<BigRational>(&Z::from_ints(&[3, 3]));
        assert!(r.real_rooted);
        assert_eq!(r.distinct_real_roots, 1);
        assert!(real_rooted::<BigRational>(&Z::from_ints(&[7])).real_rooted);
        assert!(real_rooted::<BigRational>(&Z::from_ints(&[1, 2, 1])).real_rooted);
        assert!(!real_rooted::<BigRational>(&Z::from_ints(&[1, 1, 1])).real_rooted);
        // t^2 (t^2 + 1)
        let r = real_rooted::<BigRational>(&Z::from_ints(&[0, 0, 1, 0, 1]));
        assert_eq!(r.zero_root_multiplicity, 2);
        assert!(!r.real_rooted);
        assert!(real_rooted::<BigRational>(&Z::zero()).vacuous);
    }

    #[test]
    fn shape_predicates() {
        assert!(Z::from_ints(&[1, 14, 1]).is_palindromic());
        assert!(Z::from_ints(&[1, 3, 3, 1]).is_unimodal());
        assert!(!Z::from_ints(&[2, 1, 2]).is_unimodal());
        assert!(Z::from_ints(&[1, 1, 2, 2, 1]).is_unimodal());
        assert_eq!(Z::from_ints(&[3, 0, -1]).to_string(), "3-t^2");
        assert_eq!(Z::from_ints(&[0, 1]).derivative(), Z::from_ints(&[1]));
    }
}
