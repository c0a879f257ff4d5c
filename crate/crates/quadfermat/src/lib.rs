//! Exact arithmetic in quadratic fields K = Q(sqrt(d)) and tools for the
//! Diophantine equation A·x^p + B·y^p + C·z^p = 0 over K.
//!
//! Everything here is exact: elements of K carry arbitrary-precision rational
//! coordinates, equality is structural, and no floating point is used anywhere.
//! The crate provides
//!
//! * field and ring arithmetic ([`quad`], [`ring`]), including unit groups and
//!   fundamental units of real quadratic fields,
//! * closed forms and decision procedures for when the real or imaginary part
//!   of (a + b·sqrt(d))^p vanishes ([`power`]),
//! * the change of variables between solutions of the equation and points on
//!   the hyperelliptic curve Y^2 = X^p + A^2(BC)^(p-1)/4, with exact point and
//!   solution classification ([`curve`]),
//! * bounded-height exhaustive search and verification harnesses ([`search`]),
//! * a line-oriented record format and CSV export ([`record`]).
//!
//! Searches are data-parallel (rayon) when the default `parallel` feature is
//! enabled and fall back to a sequential scan otherwise; reports are
//! byte-identical either way.

pub mod curve;
pub mod factor;
pub mod power;
pub mod quad;
pub mod rational;
pub mod record;
pub mod ring;
pub mod search;

mod error;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
