//! Double-series identities for incomplete gamma functions and Dickson polynomials.
//!
//! Each [`IdentityCase`] names an identity and binds its parameters. The left
//! side is a double series summed under a [`TruncationPolicy`]; the right side
//! is a closed form built from the gamma kernels (or, for `P3`, a second series).

mod case;
mod closed;
mod policy;
mod residual;
mod series;
mod terms;
mod validate;

pub use case::{IdentityCase, IdentityId, Regime, Symbol};
pub use closed::{rhs_closed, rhs_closed_with, rhs_on_sheets, DEGENERACY_GAP};
pub use policy::{Conventions, EvalResult, T7Exponent, T8Sign, TruncationMode, TruncationPolicy};
pub use residual::{residual, Acceptance, ResidualReport};
pub use series::{
    double_product, gamma_quotient, lhs_series, outer_terms, p3_rhs_series, p3_rhs_terms, quotient_prefactor,
    quotient_terms,
};
