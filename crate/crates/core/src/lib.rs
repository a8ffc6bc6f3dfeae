//! Exact enumeration and algebra for weakly increasing trees on multisets.
//!
//! A weakly increasing tree on `M = {1^p_1, ..., n^p_n}` is a plane tree
//! whose root is labeled 0, whose other nodes carry the elements of `M`,
//! and whose labels weakly increase along root paths and across siblings.
//!
//! The crate provides
//! * multisets, trees, their statistics and exhaustive enumeration;
//! * the maps `hat`, `tilde`, `psi`, `theta` and the binary-tree encoding
//!   `rho` with the branch-swapping group action;
//! * sparse polynomials, grammar derivatives, Schett polynomials and the
//!   partial gamma-expansion, with exact real-root counting;
//! * truncated series for the plane-tree generating function, Lagrange
//!   extraction, closed-form counts and Jacobi elliptic coefficients;
//! * [`checks`], which runs every identity above exhaustively.
//!
//! All arithmetic is exact. Polynomial containers are generic over
//! [`scalar::Ring`]; the aliases below fix the usual coefficient types.

pub mod binary;
pub mod checks;
pub mod combinat;
pub mod enumerate;
pub mod error;
pub mod multiset;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod transforms;
pub mod tree;

pub use binary::{
    bstats, lambda, modified_preorder, orbit, parse_binary, rho, rho_inv, BStatVector, WBTree,
};
pub use enumerate::{
    enumerate_binary, enumerate_trees, enumerate_trees_bounded, for_each_tree, DEFAULT_BOUND,
};
pub use error::{Error, Result};
pub use multiset::{count_trees, Multiset};
pub use transforms::{hat, psi, theta, tilde, TreeMap};
pub use tree::{format_tree, parse_tree, stats, StatVector, WTree};

/// Integer polynomial.
pub type IntPoly = poly::MPoly<num_bigint::BigInt>;
/// Rational polynomial.
pub type RatPoly = poly::MPoly<num_rational::BigRational>;
/// Univariate integer polynomial.
pub type IntUPoly = poly::UPoly<num_bigint::BigInt>;
/// Univariate rational polynomial, used for Sturm chains.
pub type RatUPoly = poly::UPoly<num_rational::BigRational>;
/// Truncated series with integer polynomial coefficients.
pub type IntSeries = series::TruncSeries<num_bigint::BigInt>;
