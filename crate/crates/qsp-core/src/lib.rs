//! Exact algebra for the coideal subalgebra of quantum sl2.
//!
//! Everything here works over the Laurent polynomial ring `Z[q, q^-1]` with
//! arbitrary-precision coefficients, so every identity the crate checks is
//! checked exactly. The modules build on each other roughly in this order:
//!
//! - [`laurent`]: Laurent polynomials, rational functions, quantum integers.
//! - [`paths`]: binary lattice paths, weight indices and their path encodings.
//! - [`hecke`]: type-B Hecke modules and parabolic Kazhdan-Lusztig polynomials.
//! - [`ballot`]: ballot-strip tilings and their generating polynomials.
//! - [`quantum`]: tensor products of `U_q(sl2)` modules, bar involutions and
//!   the intertwiner of the coideal.
//! - [`basis`]: diagrams and the canonical and dual canonical bases.
//! - [`coideal`]: the action of the coideal generator `Y`, its spectrum and
//!   its top eigenvector.
//!
//! The crate is `no_std` and only needs an allocator.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod ballot;
pub mod basis;
pub mod coideal;
pub mod hecke;
pub mod laurent;
pub mod linalg;
pub mod paths;
pub mod quantum;

mod error;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, RationalFn};
pub use paths::{BinaryPath, Shape, Sign, Weight};
