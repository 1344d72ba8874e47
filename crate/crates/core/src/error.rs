use thiserror::Error;

/// Errors raised by the kernels, the quadrature oracle and the identity engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A gamma-type function was evaluated at one of its poles.
    #[error("pole: {0}")]
    Pole(String),
    /// An iterative kernel exhausted its budget.
    #[error("{what} did not converge after {iterations} iterations")]
    Convergence { what: &'static str, iterations: usize },
    /// A reciprocal product or rational form hit an exact zero.
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    /// Argument outside the supported domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A closed form is singular at the requested parameters; names the violated precondition.
    #[error("singular configuration: {0}")]
    Singular(String),
    /// Refining the quadrature grid kept changing the result by more than the tolerance.
    #[error("quadrature did not converge: last node doubling changed the value by {change:e} (tolerance {tol:e}, {nodes} nodes)")]
    Discretization { change: f64, tol: f64, nodes: usize },
    /// The contour passes too close to a pole of the integrand.
    #[error("contour passes within {distance:e} of the pole at w = -x (limit {limit:e})")]
    PoleProximity { distance: f64, limit: f64 },
    /// The contour cannot represent the requested integral.
    #[error("invalid contour: {0}")]
    Contour(String),
    /// Outer terms kept growing where the policy expects a convergent series.
    #[error("series diverges: outer terms grow for three consecutive indices after n = {after}")]
    Divergence { after: usize },
    /// The truncation policy does not fit the convergence regime of the case.
    #[error("policy {policy} is incompatible with the {regime} regime of {case}")]
    IncompatiblePolicy { policy: &'static str, regime: &'static str, case: &'static str },
    /// Parameter set does not match the identity signature.
    #[error("invalid case: {0}")]
    InvalidCase(String),
    /// Principal branches cannot be trusted for the requested parameters.
    #[error("branch ambiguity: {0}")]
    BranchAmbiguity(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
