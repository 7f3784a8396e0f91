//! Numerical toolkit for the starlike class generated by `cos z`.
//!
//! Every analytic function is represented as a [`TruncatedSeries`] of complex
//! Taylor coefficients. Bounded analytic functions (`|ψ| ≤ 1`) and Schwarz
//! functions (`φ(0) = 0`) are realized as finite Blaschke products, members of
//! the class are built constructively from a Schwarz function, and the
//! majorization radius reduces to the first positive root of
//! `(1 - r²) cos r - 2r`.
//!
//! The math is generic over the real scalar type (`f32` or `f64`) through the
//! [`Real`] trait; the `*64` aliases below fix it to `f64`.

// `!(x <= cap)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod classes;
pub mod error;
pub mod functions;
pub mod geometry;
pub mod grid;
pub mod radius;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use scalar::Real;
pub use series::{Elementary, TruncatedSeries};

pub use num_complex::Complex;

pub type Complex64 = Complex<f64>;
pub type Series64 = series::TruncatedSeries<f64>;
pub type Blaschke64 = functions::BlaschkeProduct<f64>;
pub type BoundedAnalytic64 = functions::BoundedAnalytic<f64>;
pub type Schwarz64 = functions::SchwarzFunction<f64>;
pub type Polyline64 = geometry::BoundaryPolyline<f64>;
pub type Normalized64 = classes::NormalizedFunction<f64>;
pub type Member64 = classes::StarlikeMember<f64>;
pub type Pair64 = classes::MajorizationPair<f64>;
pub type RadiusResult64 = radius::RadiusResult<f64>;

/// Crate version, embedded in CLI reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
