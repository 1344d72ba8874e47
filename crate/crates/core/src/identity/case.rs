use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{as_integer, Real};

/// Which identity a case exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// First-kind generating function in `x`, `alpha`.
    T1,
    /// First-kind generating function in `z`, `alpha`.
    T2,
    /// First-kind generating function in `x`, `z` (Dickson parameter integrated).
    T3,
    /// Second-kind counterpart of `T1`.
    T4,
    /// Second-kind counterpart of `T2`.
    T5,
    /// Second-kind counterpart of `T3`.
    T6,
    /// First-kind functional equation at `x = u + b/u`.
    T7,
    /// Second-kind functional equation at `x = y + beta/y`.
    T8,
    /// `-2x Gamma(1-k)` as a double series.
    P1,
    /// `-2a z^2 alpha Gamma(-k)` as a double series.
    P2,
    /// Two double series equal to each other.
    P3,
    /// `Gamma(k)` as a quotient of two double series.
    GQ,
    /// The quotient at `k = 1/2, a = 2, x = 1/2, z = 1/3`, i.e. `sqrt(pi)`.
    EX1,
    /// Double product of exponentials.
    EX2,
}

impl IdentityId {
    pub const ALL: [IdentityId; 14] = [
        Self::T1,
        Self::T2,
        Self::T3,
        Self::T4,
        Self::T5,
        Self::T6,
        Self::T7,
        Self::T8,
        Self::P1,
        Self::P2,
        Self::P3,
        Self::GQ,
        Self::EX1,
        Self::EX2,
    ];

    pub const THEOREMS: [IdentityId; 8] =
        [Self::T1, Self::T2, Self::T3, Self::T4, Self::T5, Self::T6, Self::T7, Self::T8];

    pub fn name(self) -> &'static str {
        match self {
            Self::T1 => "T1",
            Self::T2 => "T2",
            Self::T3 => "T3",
            Self::T4 => "T4",
            Self::T5 => "T5",
            Self::T6 => "T6",
            Self::T7 => "T7",
            Self::T8 => "T8",
            Self::P1 => "P1",
            Self::P2 => "P2",
            Self::P3 => "P3",
            Self::GQ => "GQ",
            Self::EX1 => "EX1",
            Self::EX2 => "EX2",
        }
    }

    /// Parameter symbols the identity takes, in canonical order.
    pub fn signature(self) -> &'static [Symbol] {
        use Symbol::*;
        match self {
            Self::T1 | Self::T4 => &[K, A, Alpha, X],
            Self::T2 | Self::T5 => &[K, A, Alpha, Z],
            Self::T3 | Self::T6 | Self::P3 | Self::GQ => &[K, A, X, Z],
            Self::T7 => &[K, A, B, U],
            Self::T8 => &[K, A, Beta, Y],
            Self::P1 => &[K, A, X],
            Self::P2 => &[K, A, Alpha, Z],
            Self::EX1 => &[],
            Self::EX2 => &[A, Alpha, Z],
        }
    }

    /// Number of incomplete-gamma calls in the closed right-hand side (branch diagnostics).
    pub fn gamma_slots(self) -> usize {
        match self {
            Self::T1 | Self::T3 | Self::T4 | Self::T7 | Self::T8 => 2,
            Self::T2 | Self::T5 | Self::T6 => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidCase(format!("unknown identity id {s:?}")))
    }
}

/// Parameter names used across the identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    K,
    A,
    Alpha,
    X,
    Z,
    B,
    U,
    Beta,
    Y,
}

impl Symbol {
    pub const ALL: [Symbol; 9] =
        [Self::K, Self::A, Self::Alpha, Self::X, Self::Z, Self::B, Self::U, Self::Beta, Self::Y];

    pub fn name(self) -> &'static str {
        match self {
            Self::K => "k",
            Self::A => "a",
            Self::Alpha => "alpha",
            Self::X => "x",
            Self::Z => "z",
            Self::B => "b",
            Self::U => "u",
            Self::Beta => "beta",
            Self::Y => "y",
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|sym| sym.name() == s)
            .ok_or_else(|| Error::InvalidCase(format!("unknown parameter {s:?}")))
    }
}

/// One identity together with its parameter bindings.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCase<T> {
    pub id: IdentityId,
    pub params: BTreeMap<Symbol, Complex<T>>,
}

impl<T: Real> IdentityCase<T> {
    /// Builds a case, rejecting missing or extra parameters.
    pub fn new(id: IdentityId, params: BTreeMap<Symbol, Complex<T>>) -> Result<Self> {
        let sig = id.signature();
        for s in sig {
            if !params.contains_key(s) {
                return Err(Error::InvalidCase(format!("{id} needs parameter {s}")));
            }
        }
        if let Some(extra) = params.keys().find(|s| !sig.contains(s)) {
            return Err(Error::InvalidCase(format!("{id} does not take parameter {extra}")));
        }
        Ok(Self { id, params })
    }

    /// Convenience constructor from `(name, value)` pairs.
    pub fn from_pairs(id: IdentityId, pairs: &[(&str, Complex<T>)]) -> Result<Self> {
        let mut params = BTreeMap::new();
        for (name, v) in pairs {
            params.insert(name.parse::<Symbol>()?, *v);
        }
        Self::new(id, params)
    }

    /// Parameter value; panics on a symbol outside the signature (validated at construction).
    pub fn get(&self, s: Symbol) -> Complex<T> {
        self.params[&s]
    }

    pub fn regime(&self) -> Regime {
        regime_of(self.id, self.params.get(&Symbol::K).copied())
    }
}

/// Convergence behaviour of the double series of a case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// Finite support: a Pochhammer factor vanishes beyond a fixed outer index.
    Terminating,
    /// Geometrically convergent.
    Convergent,
    /// Factorially divergent; summed by optimal truncation.
    Asymptotic,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Self::Terminating => "terminating",
            Self::Convergent => "convergent",
            Self::Asymptotic => "asymptotic",
        }
    }
}

fn positive_integer<T: Real>(k: Option<Complex<T>>) -> Option<usize> {
    k.and_then(as_integer).filter(|&n| n >= 1).map(|n| n as usize)
}

pub(crate) fn regime_of<T: Real>(id: IdentityId, k: Option<Complex<T>>) -> Regime {
    use IdentityId::*;
    match id {
        T1 | T4 | T7 | T8 if positive_integer(k).is_some() => Regime::Terminating,
        T2 | T3 | T5 | T6 if positive_integer(k).is_some() => Regime::Convergent,
        EX2 => Regime::Convergent,
        _ => Regime::Asymptotic,
    }
}

/// Largest outer index with a nonzero term, for terminating cases.
pub(crate) fn terminating_support<T: Real>(case: &IdentityCase<T>) -> Option<usize> {
    match case.regime() {
        // (1-k)_{n-1} = 0 once n - 1 >= k
        Regime::Terminating => positive_integer(case.params.get(&Symbol::K).copied()),
        _ => None,
    }
}
