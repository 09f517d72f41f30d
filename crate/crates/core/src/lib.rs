//! Exact-arithmetic toolkit for cyclic sieving of bounded multisets.
//!
//! Everything here works over arbitrary-precision integers; there is no
//! floating point anywhere. The main pieces are:
//!
//! - [`poly`]: dense univariate polynomials over `BigInt` ([`IntPoly`]),
//!   with exact division and multisection.
//! - [`qcomb`]: q-integers, Gaussian binomials, b-nomial coefficients,
//!   the two-variable generating function for `<n,k>_q^(b)`, and
//!   cyclotomic polynomials.
//! - [`cyclotomic`]: arithmetic in `Z[q]/Phi_d(q)`, i.e. exact evaluation
//!   of integer polynomials at a primitive d-th root of unity.
//! - [`multiset`]: enumeration of bounded-multiplicity multisets, the
//!   rotation actions `rho`/`tau`, fixed-point counting, and cyclic
//!   sieving reports.
//! - [`specialization`]: closed-form generating functions for the
//!   root-of-unity specializations in the three divisibility regimes,
//!   plus the alternating coin formula.
//! - [`coin`]: two-coin Frobenius machinery — denumerants, Sylvester
//!   sets, the double abacus, rectangle decomposition and multisections.
//! - [`partition`] / [`symfun`]: integer partitions and symmetric
//!   polynomials in the monomial basis, with e/h/p/s bases, the
//!   b-bounded family, power-sum and dual-Cauchy expansions.
//! - [`verify`]: the deterministic desk-scale sweeps used by the
//!   acceptance suite and the `verify` CLI subcommand.

pub mod coin;
pub mod cyclotomic;
pub mod error;
pub mod multiset;
pub mod partition;
pub mod poly;
pub mod qcomb;
pub mod specialization;
pub mod symfun;
pub mod verify;

pub use coin::CoinPair;
pub use cyclotomic::CycElem;
pub use error::Error;
pub use multiset::BoundedVector;
pub use partition::Partition;
pub use poly::IntPoly;
pub use qcomb::{BivariateGf, Bound};
pub use symfun::SymPoly;
