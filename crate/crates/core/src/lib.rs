//! Dickson polynomials and their incomplete-gamma generating functions.
//!
//! The crate has four layers:
//!
//! * [`gamma`]: complex gamma, log-gamma, upper/lower incomplete gamma with
//!   winding continuation, and Pochhammer symbols.
//! * [`quadrature`]: trapezoidal contour integrals of the Cauchy-type kernels,
//!   used as an independent oracle for the closed forms.
//! * [`dickson`]: Dickson polynomials of both kinds, their classical generating
//!   functions and functional equations.
//! * [`identity`]: both sides of the incomplete-gamma generating-function
//!   identities, with terminating, convergent and asymptotic (optimally
//!   truncated) summation.
//!
//! Everything numeric is generic over [`Real`] (`f32`/`f64`); the aliases below
//! fix the double-precision instantiation used by the harness. Pochhammer
//! symbols and Dickson polynomials only need a ring, so they also run on exact
//! rationals.

pub mod branch;
pub mod dickson;
mod error;
pub mod gamma;
pub mod identity;
pub mod quadrature;
mod scalar;
pub mod summation;

pub use error::{Error, Result};
pub use scalar::{as_integer, cplx, is_finite, real, Real};

pub use num_complex::Complex;

/// Double-precision complex scalar.
pub type Complex64 = Complex<f64>;
/// Single-precision complex scalar.
pub type Complex32 = Complex<f32>;

pub type IdentityCase64 = identity::IdentityCase<f64>;
pub type EvalResult64 = identity::EvalResult<f64>;
pub type ResidualReport64 = identity::ResidualReport<f64>;
pub type TruncationPolicy64 = identity::TruncationPolicy<f64>;
pub type ContourSpec64 = quadrature::ContourSpec<f64>;
pub type GFParams64 = dickson::GFParams<f64>;
