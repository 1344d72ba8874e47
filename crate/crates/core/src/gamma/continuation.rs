//! Continuation of the incomplete gamma functions onto other sheets of `z`.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::complete::gamma;
use super::incomplete::{lower_incomplete, upper_incomplete, upper_incomplete_scaled};
use crate::branch::exp_two_pi_i;
use crate::error::{Error, Result};
use crate::scalar::{as_integer, real, Real};

/// Winding count `m` of `z e^{2 pi i m}` around the origin; `0` is the principal sheet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BranchIndex(pub i64);

impl BranchIndex {
    pub const PRINCIPAL: Self = Self(0);

    pub fn is_principal(self) -> bool {
        self.0 == 0
    }
}

impl From<i64> for BranchIndex {
    fn from(m: i64) -> Self {
        Self(m)
    }
}

fn winding_phase<T: Real>(a: Complex<T>, m: BranchIndex) -> Complex<T> {
    exp_two_pi_i(a * real(T::of(m.0)))
}

/// `Gamma(a, z e^{2 pi i m}) = e^{2 pi i m a} Gamma(a, z) + (1 - e^{2 pi i m a}) Gamma(a)`.
pub fn continue_upper<T: Real>(a: Complex<T>, z: Complex<T>, m: BranchIndex) -> Result<Complex<T>> {
    if z.is_zero() {
        return Err(Error::Domain("continuation needs z != 0".into()));
    }
    // integer a: both coefficients collapse and Gamma(a, .) is single valued
    if m.is_principal() || as_integer(a).is_some() {
        return upper_incomplete(a, z);
    }
    let phase = winding_phase(a, m);
    Ok(phase * upper_incomplete(a, z)? + (Complex::<T>::one() - phase) * gamma(a)?)
}

/// `e^z Gamma(a, z e^{2 pi i m})`, the continuation of [`upper_incomplete_scaled`].
pub fn continue_upper_scaled<T: Real>(a: Complex<T>, z: Complex<T>, m: BranchIndex) -> Result<Complex<T>> {
    if z.is_zero() {
        return Err(Error::Domain("continuation needs z != 0".into()));
    }
    if m.is_principal() || as_integer(a).is_some() {
        return upper_incomplete_scaled(a, z);
    }
    let phase = winding_phase(a, m);
    Ok(phase * upper_incomplete_scaled(a, z)? + (Complex::<T>::one() - phase) * gamma(a)? * z.exp())
}

/// `gamma(a, z e^{2 pi i m}) = e^{2 pi i m a} gamma(a, z)`.
pub fn continue_lower<T: Real>(a: Complex<T>, z: Complex<T>, m: BranchIndex) -> Result<Complex<T>> {
    if z.is_zero() {
        return Err(Error::Domain("continuation needs z != 0".into()));
    }
    let base = lower_incomplete(a, z)?;
    if m.is_principal() {
        return Ok(base);
    }
    Ok(winding_phase(a, m) * base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cplx;

    #[test]
    fn unit_order_is_single_valued() {
        let z = cplx::<f64>(0.7, -1.2);
        for m in -3..=3 {
            let v = continue_upper(cplx(1.0, 0.0), z, BranchIndex(m)).unwrap();
            assert!((v - (-z).exp()).norm() < 1e-15);
            let l = continue_lower(cplx(2.0, 0.0), z, BranchIndex(m)).unwrap();
            assert_eq!(l, lower_incomplete(cplx(2.0, 0.0), z).unwrap());
        }
    }

    #[test]
    fn zero_argument_rejected() {
        assert!(continue_upper(cplx::<f64>(0.5, 0.0), cplx(0.0, 0.0), BranchIndex(1)).is_err());
    }
}
