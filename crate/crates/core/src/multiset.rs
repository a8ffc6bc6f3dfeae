//! Multisets `{1^p_1, ..., n^p_n}` and the closed-form tree count.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::binomial;
use crate::error::{Error, Result};

/// The multiset `{1^p_1, 2^p_2, ..., n^p_n}` with every `p_i >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multiset {
    mult: Vec<u32>,
}

impl Multiset {
    pub fn new(multiplicities: Vec<u32>) -> Result<Self> {
        if let Some(pos) = multiplicities.iter().position(|&p| p == 0) {
            return Err(Error::Multiset(format!(
                "label {} has multiplicity 0",
                pos + 1
            )));
        }
        Ok(Self {
            mult: multiplicities,
        })
    }

    pub fn empty() -> Self {
        Self { mult: Vec::new() }
    }

    /// `[n] = {1, 2, ..., n}`.
    pub fn set(n: usize) -> Self {
        Self { mult: vec![1; n] }
    }

    /// `{1^n}`.
    pub fn uniform(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self {
                mult: vec![n as u32],
            }
        }
    }

    /// Number of distinct labels `n`.
    pub fn letters(&self) -> usize {
        self.mult.len()
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    pub fn multiplicity(&self, label: u32) -> u32 {
        if label == 0 {
            return 0;
        }
        self.mult.get(label as usize - 1).copied().unwrap_or(0)
    }

    /// Total size `p`.
    pub fn size(&self) -> usize {
        self.mult.iter().map(|&p| p as usize).sum()
    }

    /// Prefix sums `N_1, ..., N_n`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        self.mult
            .iter()
            .scan(0usize, |acc, &p| {
                *acc += p as usize;
                Some(*acc)
            })
            .collect()
    }

    pub fn is_set(&self) -> bool {
        self.mult.iter().all(|&p| p == 1)
    }

    pub fn is_uniform(&self) -> bool {
        self.mult.len() <= 1
    }

    /// The non-root labels in weakly increasing order.
    pub fn labels(&self) -> Vec<u32> {
        self.mult
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| std::iter::repeat(i as u32 + 1).take(p as usize))
            .collect()
    }

    /// Builds the multiset of a sorted label list, rejecting gaps.
    pub fn from_labels(labels: &[u32]) -> Result<Self> {
        let max = labels.iter().copied().max().unwrap_or(0);
        let mut mult = vec![0u32; max as usize];
        for &l in labels {
            if l == 0 {
                return Err(Error::Multiset("label 0 is reserved for the root".into()));
            }
            mult[l as usize - 1] += 1;
        }
        Self::new(mult).map_err(|_| {
            Error::Multiset(format!("labels must be contiguous from 1 to {max}"))
        })
    }

    /// Every multiset of total size `p` (the compositions of `p`), in
    /// lexicographic order of multiplicity vectors.
    pub fn all_of_size(p: usize) -> Vec<Multiset> {
        fn go(rest: usize, cur: &mut Vec<u32>, out: &mut Vec<Multiset>) {
            if rest == 0 {
                out.push(Multiset { mult: cur.clone() });
                return;
            }
            for first in 1..=rest {
                cur.push(first as u32);
                go(rest - first, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(p, &mut Vec::new(), &mut out);
        out
    }

    /// Every multiset with `p <= max_size`, smallest first.
    pub fn all_up_to(max_size: usize) -> Vec<Multiset> {
        (0..=max_size).flat_map(Self::all_of_size).collect()
    }

    /// Canonical `label:count` form, e.g. `1:2,2:2`.
    pub fn to_spec(&self) -> String {
        self.mult
            .iter()
            .enumerate()
            .map(|(i, p)| format!("{}:{}", i + 1, p))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl FromStr for Multiset {
    type Err = Error;

    /// Parses the `label:count,label:count` form. Labels must cover `1..n`
    /// exactly once each; order is irrelevant.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let mut pairs = Vec::new();
        for item in s.split(',') {
            let (l, c) = item.trim().split_once(':').ok_or_else(|| {
                Error::Multiset(format!("expected label:count, found `{item}`"))
            })?;
            let l: u32 = l
                .trim()
                .parse()
                .map_err(|_| Error::Multiset(format!("bad label `{l}`")))?;
            let c: u32 = c
                .trim()
                .parse()
                .map_err(|_| Error::Multiset(format!("bad count `{c}`")))?;
            pairs.push((l, c));
        }
        pairs.sort_unstable();
        let mut mult = Vec::with_capacity(pairs.len());
        for (idx, &(l, c)) in pairs.iter().enumerate() {
            if l as usize != idx + 1 {
                return Err(Error::Multiset(format!(
                    "labels must be 1..{} without gaps or repeats (found {l} at position {})",
                    pairs.len(),
                    idx + 1
                )));
            }
            mult.push(c);
        }
        Self::new(mult)
    }
}

impl fmt::Display for Multiset {
    /// `{1^2,2^2}` notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.mult.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if *p == 1 {
                write!(f, "{}", i + 1)?;
            } else {
                write!(f, "{}^{}", i + 1, p)?;
            }
        }
        write!(f, "}}")
    }
}

/// `|T_M| = 1/(1+N_n) * prod_i C(N_i + p_i, p_i)`.
pub fn count_trees(m: &Multiset) -> BigInt {
    let mut prod = BigInt::one();
    for (&p, n) in m.multiplicities().iter().zip(m.prefix_sums()) {
        prod *= binomial((n + p as usize) as i64, p as i64);
    }
    let (q, r) = prod.div_rem(&BigInt::from(1 + m.size()));
    assert!(r.is_zero(), "product formula left a remainder for {m}");
    q
}
