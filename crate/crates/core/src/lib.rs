//! Exact combinatorics of the two-row Specht module `S^(n,n)`.
//!
//! Standard tableaux and noncrossing matchings (webs) index two bases of the
//! same representation of the symmetric group. This crate enumerates both,
//! builds their labeled graphs and the reachability poset, implements the
//! web action and the Specht action, and computes the transition matrix
//! between the bases together with checks of its structure.
//!
//! Linear algebra is generic over [`scalar::Coefficient`]; the aliases below
//! fix the exact integer and rational choices used by the checks.

pub mod error;
pub mod graphs;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod specht;
pub mod suites;
pub mod tableaux;
pub mod transition;
pub mod webaction;
pub mod webs;

pub use error::{Error, Result};
pub use graphs::{LabeledDigraph, PosetRelation};
pub use report::Report;
pub use tableaux::{Filling, Permutation, Tableau};
pub use transition::Bases;
pub use webaction::WebBasis;
pub use webs::{Arc, Web};

/// Exact integer coefficients.
pub type Int = num_bigint::BigInt;
/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
/// A vector in the web basis with integer coefficients.
pub type WebVec = webaction::WebVector<Int>;
/// The integer transition matrix.
pub type Transition = transition::TransitionMatrix<Int>;
/// A dense rational matrix.
pub type RationalMatrix = linalg::Matrix<Rational>;
