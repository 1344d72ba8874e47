//! Pochhammer symbols by literal products.
//!
//! `(a)_n = a (a+1) ... (a+n-1)` for `n >= 0` and
//! `(a)_{-p} = 1 / ((a-1)(a-2) ... (a-p))` for negative indices. Products keep
//! exact zeros at integer offsets, which is what makes the identity series
//! terminate. Generic over any ring with division, so it also runs on exact
//! rationals.

use num_traits::Num;

use crate::error::{Error, Result};

/// Rising factorial `(a)_n` for any integer `n`.
pub fn pochhammer<T: Clone + Num>(a: &T, n: i64) -> Result<T> {
    let mut offset = T::zero();
    let mut acc = T::one();
    if n >= 0 {
        for _ in 0..n {
            acc = acc * (a.clone() + offset.clone());
            offset = offset + T::one();
        }
        return Ok(acc);
    }
    for _ in 0..(-n) {
        offset = offset + T::one();
        acc = acc * (a.clone() - offset.clone());
    }
    if acc.is_zero() {
        return Err(Error::DivisionByZero(format!("(a)_{n} has a vanishing factor")));
    }
    Ok(T::one() / acc)
}

/// `true` when `(a)_n` is exactly zero, i.e. some factor `a + i`, `0 <= i < n`, vanishes.
pub fn pochhammer_vanishes<T: Clone + Num>(a: &T, n: i64) -> bool {
    n > 0 && pochhammer(a, n).map(|p| p.is_zero()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn small_cases() {
        assert_eq!(pochhammer(&3.0, 2).unwrap(), 12.0);
        assert_eq!(pochhammer(&Complex64::new(0.7, 0.2), 0).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(pochhammer(&0.0, 3).unwrap(), 0.0);
        assert_eq!(pochhammer(&0.0, -1).unwrap(), -1.0);
        assert_eq!(pochhammer(&5i64, -2).unwrap(), 0); // integer ring: 1/12 truncates
    }

    #[test]
    fn negative_index_hitting_zero() {
        assert!(matches!(pochhammer(&2.0, -3), Err(Error::DivisionByZero(_))));
    }

    #[test]
    fn vanishing_detection() {
        assert!(pochhammer_vanishes(&-2.0, 3));
        assert!(!pochhammer_vanishes(&-2.0, 2));
        assert!(!pochhammer_vanishes(&0.5, 40));
    }
}
