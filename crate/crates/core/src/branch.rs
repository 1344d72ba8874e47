//! Branch policy for every multivalued operation in the crate.
//!
//! All non-integer powers are `exp(s * Log w)` with the principal logarithm,
//! `arg w` in `(-pi, pi]`. A negative real number carrying a `-0.0` imaginary
//! part is treated as lying on the upper side of the cut.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Principal argument in `(-pi, pi]`.
#[inline]
pub fn principal_arg<T: Real>(w: Complex<T>) -> T {
    if w.im == T::zero() && w.re < T::zero() {
        return T::PI();
    }
    w.im.atan2(w.re)
}

/// Principal logarithm `ln|w| + i arg w`.
pub fn principal_log<T: Real>(w: Complex<T>) -> Result<Complex<T>> {
    if w.is_zero() {
        return Err(Error::Domain("logarithm of zero".into()));
    }
    Ok(Complex::new(w.norm().ln(), principal_arg(w)))
}

/// Principal power `w^s = exp(s Log w)`.
///
/// `0^s` is `1` for `s = 0`, `0` for `Re s > 0` and an error otherwise.
pub fn principal_pow<T: Real>(w: Complex<T>, s: Complex<T>) -> Result<Complex<T>> {
    if w.is_zero() {
        return if s.is_zero() {
            Ok(Complex::one())
        } else if s.re > T::zero() {
            Ok(Complex::zero())
        } else {
            Err(Error::Pole(format!("0^({}{:+}i)", s.re, s.im)))
        };
    }
    if s.im == T::zero() && s.re.fract() == T::zero() && s.re.abs() <= T::lit(64.0) {
        // integer exponents are single valued; repeated multiplication is exact-er
        return Ok(powi(w, s.re.to_i32().unwrap()));
    }
    Ok((s * principal_log(w)?).exp())
}

/// `w^s * exp(shift)`, combined in log space so neither factor overflows on its own.
pub fn pow_times_exp<T: Real>(w: Complex<T>, s: Complex<T>, shift: Complex<T>) -> Result<Complex<T>> {
    if w.is_zero() {
        return Ok(principal_pow(w, s)? * shift.exp());
    }
    Ok((s * principal_log(w)? + shift).exp())
}

/// Integer power by repeated squaring; `powi(w, 0) == 1` for every `w`.
#[inline]
pub fn powi<T: Real>(w: Complex<T>, n: i32) -> Complex<T> {
    if n == 0 {
        return Complex::one();
    }
    w.powi(n)
}

/// Principal square root (cut along the negative real axis, `Re >= 0`).
#[inline]
pub fn principal_sqrt<T: Real>(w: Complex<T>) -> Complex<T> {
    if w.im == T::zero() && w.re < T::zero() {
        return Complex::new(T::zero(), (-w.re).sqrt());
    }
    w.sqrt()
}

/// `exp(2 pi i t)` with the integer part of `Re t` removed exactly first.
pub fn exp_two_pi_i<T: Real>(t: Complex<T>) -> Complex<T> {
    let frac = t.re - t.re.round();
    let angle = T::TAU() * frac;
    let scale = (-T::TAU() * t.im).exp();
    Complex::new(angle.cos() * scale, angle.sin() * scale)
}

/// `sin(pi z)` with exact reduction of the real part, so zeros at integers are exact.
pub fn sin_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    let n = z.re.round();
    let r = z.re - n;
    let (s, c) = (T::PI() * r).sin_cos();
    let y = T::PI() * z.im;
    let v = Complex::new(s * y.cosh(), c * y.sinh());
    if (n.to_i64().unwrap_or(0) & 1) == 1 {
        -v
    } else {
        v
    }
}
