//! Additive cyclic codes over the mixed alphabet Z_{p^r}^alpha x Z_{p^r}^beta x Z_{p^s}^gamma.
//!
//! A code here is a subgroup of the mixed-alphabet ambient space that is closed
//! under the simultaneous cyclic shift of all three blocks and under the scalar
//! action of Z_{p^s} (acting through reduction mod p^r on the first two blocks).
//! The crate provides:
//!
//! * exact arithmetic in Z_{p^a} and in the quotient rings Z_{p^a}[x]/(x^n - 1)
//!   ([`ringcore`], [`polyring`]), including factorization of x^n - 1 and Hensel
//!   lifting of the factors to prime-power moduli;
//! * canonical echelon (Howell) forms, span sizes, membership tests and
//!   orthogonal-complement computations for generator matrices over the mixed
//!   alphabet ([`chainlinalg`]);
//! * cyclic codes over a single chain ring presented by divisor chains
//!   f_{a-1} | ... | f_0 | x^n - 1 ([`cycliccode`]);
//! * the three-generator standard form (A|0|0), (l|B|0), (l1|l2|G) for mixed
//!   additive cyclic codes, with validation, extraction from arbitrary
//!   generating sets, projections, separability and shape classification
//!   ([`additivecode`]);
//! * the weighted duality theory: inner products, dual codes, size identities
//!   and the polynomial orthogonality test ([`dualop`]);
//! * distance and weight-distribution analysis plus reproduction of the
//!   reference table of optimal binary codes ([`analysis`]);
//! * a line-oriented text format for describing codes ([`codespec`]).
//!
//! All computations are exact; nothing is floating point. Sizes are returned as
//! u128 powers of p. The intended scale is "desk scale": block lengths up to a
//! few dozen, moduli up to p^s < 2^31.

pub mod additivecode;
pub mod analysis;
pub mod chainlinalg;
pub mod codespec;
pub mod cycliccode;
pub mod dualop;
pub mod polyring;
pub mod ringcore;

use thiserror::Error;

/// Crate-wide error type. Internal invariant violations panic; everything
/// reachable from user input (CLI arguments, spec files, hand-built chains)
/// reports through this enum.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("division requires a unit leading coefficient: {0}")]
    NonUnitLeadingCoeff(String),
    #[error("exact division failed: {0}")]
    InexactDivision(String),
    #[error("factorization requires gcd(n, p) = 1, got n = {n}, p = {p}")]
    NonCoprimeLength { n: usize, p: u64 },
    #[error("chain violation: {0}")]
    ChainViolation(String),
    #[error("degree violation: {0}")]
    DegreeViolation(String),
    #[error("divisibility violation: {0}")]
    DivisibilityViolation(String),
    #[error("enumeration too large: size {size} exceeds cap {cap}")]
    EnumerationTooLarge { size: u128, cap: u128 },
    #[error("operation requires p = 2 and r = s = 1, got p = {p}, r = {r}, s = {s}")]
    NotBinary { p: u64, r: u32, s: u32 },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
