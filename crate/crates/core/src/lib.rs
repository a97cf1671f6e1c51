//! Exact finite-field machinery for verifying rank lower bounds on affine
//! spaces of structured matrices, and the dimension bounds they imply.
//!
//! The crate is organized around:
//!
//! - [`field`]: arithmetic in GF(p) for small primes.
//! - [`matrix`]: dense matrices with rank, determinant and two Pfaffian
//!   algorithms.
//! - [`graph`]: graphs with loops, matching numbers nu/mu, and the extremal
//!   edge-count bounds u_a/u_s.
//! - [`space`]: affine matrix spaces, canonical bases, leading graphs,
//!   max-rank oracles, extremal and random constructions, and file I/O.
//! - [`poly`]: sparse multivariate polynomials for the symbolic expansions.
//! - [`theorem`]: coefficient checks and grid witness searches.
//! - [`suite`]: seeded verification suites with JSON-serializable reports.

pub mod field;
pub mod graph;
pub mod matrix;
pub mod poly;
pub mod rng;
pub mod space;
pub mod suite;
pub mod theorem;

pub use field::{FieldElem, FieldError, FieldSpec};
pub use graph::{Edge, GraphError, LoopGraph, Matching};
pub use matrix::{Matrix, MatrixError};
pub use poly::Polynomial;
pub use rng::SplitMix64;
pub use space::{
    colex_cmp, extremal, extremal_max_rank_member, leading_cell, parse_space, random_space,
    AffineSpace, Cell, ExtremalKind, RandomKind, SpaceError, SpaceKind, DEFAULT_ORACLE_CAP,
    SPAN_CHECK_CAP,
};
pub use suite::{SuiteError, VerificationReport};
pub use theorem::{
    coeff_check_pf, coeff_check_prop1, det_polynomial, pf_polynomial, restrict,
    witness_search_alt, witness_search_ws, MatchingSelection, TheoremError, WitnessResult,
};
