//! Parameter preconditions shared by both sides of the identities.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{as_integer, is_finite, Real};

use super::case::{IdentityCase, IdentityId, Symbol};

fn singular<T>(what: &str) -> Result<T> {
    Err(Error::Singular(what.to_string()))
}

pub(crate) fn nonneg_integer<T: Real>(k: Complex<T>) -> bool {
    as_integer(k).is_some_and(|n| n >= 0)
}

/// Conditions under which the left-hand series is defined.
pub(crate) fn check_lhs<T: Real>(case: &IdentityCase<T>) -> Result<()> {
    use IdentityId::*;
    if let Some((s, _)) = case.params.iter().find(|(_, v)| !is_finite(**v)) {
        return Err(Error::InvalidCase(format!("parameter {s} is not finite")));
    }
    let id = case.id;
    if !matches!(id, EX1 | EX2) && case.get(Symbol::A).is_zero() {
        return singular("a = 0");
    }
    match id {
        T7 => {
            let (b, u) = (case.get(Symbol::B), case.get(Symbol::U));
            if u.is_zero() {
                return singular("u = 0");
            }
            if (b / u + u).is_zero() {
                return singular("b/u + u = 0");
            }
        }
        T8 if case.get(Symbol::Y).is_zero() => return singular("y = 0"),
        P1 if nonneg_integer(case.get(Symbol::K)) => return singular("Γ(n−k) pole: k is a nonnegative integer"),
        P2 if nonneg_integer(case.get(Symbol::K)) => return singular("Γ(−k) pole: k is a nonnegative integer"),
        P3 if nonneg_integer(case.get(Symbol::K)) => return singular("Γ(j−k) pole: k is a nonnegative integer"),
        GQ if as_integer(case.get(Symbol::K)).is_some_and(|n| n <= 1) => {
            return singular("Γ(k−1) pole: k is an integer ≤ 1")
        }
        _ => {}
    }
    Ok(())
}
