use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::case::Regime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TruncationMode {
    /// Sum exactly the nonzero support of a terminating series.
    Terminating,
    /// Sum outer indices `0..=max_n`.
    FixedN,
    /// Stop once two consecutive outer terms fall below `tol` relative to the partial sum.
    TailTolerance,
    /// Stop before the smallest outer term within `0..=max_n`.
    OptimalTruncation,
}

impl TruncationMode {
    pub fn name(self) -> &'static str {
        match self {
            Self::Terminating => "terminating",
            Self::FixedN => "fixed_n",
            Self::TailTolerance => "tail_tolerance",
            Self::OptimalTruncation => "optimal_truncation",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Self::Terminating, Self::FixedN, Self::TailTolerance, Self::OptimalTruncation]
            .into_iter()
            .find(|m| m.name() == s)
    }

    /// Whether the mode is meaningful for a regime.
    pub fn fits(self, regime: Regime) -> bool {
        match self {
            Self::FixedN => true,
            Self::Terminating => regime == Regime::Terminating,
            Self::TailTolerance => regime != Regime::Asymptotic,
            Self::OptimalTruncation => regime == Regime::Asymptotic,
        }
    }
}

/// How an infinite double series is cut off.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy<T> {
    pub mode: TruncationMode,
    pub max_n: usize,
    pub tol: T,
}

impl<T: Real> TruncationPolicy<T> {
    pub fn new(mode: TruncationMode, max_n: usize, tol: T) -> Result<Self> {
        if max_n < 1 {
            return Err(Error::InvalidCase("policy max_n must be at least 1".into()));
        }
        if !(tol > T::zero()) {
            return Err(Error::InvalidCase("policy tol must be positive".into()));
        }
        Ok(Self { mode, max_n, tol })
    }

    pub fn terminating() -> Self {
        Self { mode: TruncationMode::Terminating, max_n: 1, tol: T::epsilon() }
    }

    pub fn fixed(max_n: usize) -> Self {
        Self { mode: TruncationMode::FixedN, max_n: max_n.max(1), tol: T::epsilon() }
    }

    pub fn tail(tol: T, max_n: usize) -> Self {
        Self { mode: TruncationMode::TailTolerance, max_n: max_n.max(1), tol }
    }

    pub fn optimal(max_n: usize) -> Self {
        Self { mode: TruncationMode::OptimalTruncation, max_n: max_n.max(1), tol: T::epsilon() }
    }

    /// The policy a regime is normally summed with.
    pub fn default_for(regime: Regime) -> Self {
        match regime {
            Regime::Terminating => Self::terminating(),
            Regime::Convergent => Self::tail(T::epsilon(), 2000),
            Regime::Asymptotic => Self::optimal(400),
        }
    }
}

/// Value of a truncated series and what the truncation did.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T> {
    pub value: Complex<T>,
    /// Estimated absolute truncation error; zero for exact finite support.
    pub abs_err_estimate: T,
    /// Outer indices summed (`0..terms_used`).
    pub terms_used: usize,
    /// Whole nonzero support was summed.
    pub terminated: bool,
    /// Magnitude of the outer term the sum stopped before (optimal truncation),
    /// or of the last summed term otherwise.
    pub smallest_term: T,
    pub regime: Regime,
}

/// Exponent of `(b/u + u)` in the first-kind functional-equation series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum T7Exponent {
    /// `2 - j`, the literal reading.
    AsPrinted,
    /// `n - 2j`, the pattern of the classical functional equation.
    FunctionalPattern,
    /// `-2j`, so that `(b/u+u)^{-2j} (-(b/u+u)/a)^n = (b/u+u)^{n-2j} (-1/a)^n`.
    NegTwoJ,
}

impl T7Exponent {
    pub const ALL: [T7Exponent; 3] = [Self::AsPrinted, Self::FunctionalPattern, Self::NegTwoJ];

    pub fn name(self) -> &'static str {
        match self {
            Self::AsPrinted => "2-j",
            Self::FunctionalPattern => "n-2j",
            Self::NegTwoJ => "-2j",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == s)
    }
}

/// Overall sign of the second-kind functional-equation closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum T8Sign {
    AsPrinted,
    /// Negated; agrees with the second-kind generating function at `x = y + beta/y`.
    Corrected,
}

impl T8Sign {
    pub fn name(self) -> &'static str {
        match self {
            Self::AsPrinted => "as_printed",
            Self::Corrected => "corrected",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Self::AsPrinted, Self::Corrected].into_iter().find(|v| v.name() == s)
    }
}

/// Variant choices for the two identities whose literal form does not balance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Conventions {
    pub t7_exponent: T7Exponent,
    pub t8_sign: T8Sign,
}

impl Default for Conventions {
    fn default() -> Self {
        Self { t7_exponent: T7Exponent::NegTwoJ, t8_sign: T8Sign::Corrected }
    }
}

impl Conventions {
    pub fn as_printed() -> Self {
        Self { t7_exponent: T7Exponent::AsPrinted, t8_sign: T8Sign::AsPrinted }
    }
}
