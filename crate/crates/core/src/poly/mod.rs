//! Polynomial algebra: sparse multivariate and dense univariate
//! polynomials, grammar derivatives and the Schett family.

pub mod grammar;
pub mod mpoly;
pub mod schett;
pub mod upoly;

pub use grammar::{parse_grammar, GrammarRules};
pub use mpoly::{parse_mpoly, Exponents, MPoly, TermOrder, VarContext};
pub use upoly::{real_rooted, RootReport, UPoly};
