//! Upper and lower incomplete gamma functions on the principal sheet.
//!
//! Region switch: power series for `|z| < |a| + 1`, Legendre continued fraction
//! otherwise. Near the negative real axis the continued fraction is replaced by
//! the alternating-free Kummer series. Small positive integer `a` uses the
//! finite sum `(a-1)! e^-z sum_{m<a} z^m/m!`, valid everywhere. Nonpositive
//! integer `a` is lifted from `Gamma(0, z) = E1(z)` with
//! `Gamma(a, z) = (Gamma(a+1, z) - z^a e^-z) / a`.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::complete::gamma;
use crate::branch::{pow_times_exp, powi, principal_log};
use crate::error::{Error, Result};
use crate::scalar::{as_integer, is_finite, real, Real};

/// Continued-fraction iteration budget.
pub const CF_MAX_ITER: usize = 500;
const SERIES_MAX_ITER: usize = 500;
/// `|z| + Re z` above which the continued fraction is preferred even for `Re z < 0`.
/// Below it the Kummer series loses at most a factor `e^6` to cancellation.
const NEAR_CUT: f64 = 6.0;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
/// Largest integer order evaluated by the finite sum.
const FINITE_SUM_MAX: i64 = 64;

/// Which evaluation route produced a kernel value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelMethod {
    /// `Gamma(a, 0) = Gamma(a)`.
    Complete,
    /// `Gamma(a) - gamma(a, z)` with the `e^-z` power series.
    LowerSeries,
    /// `Gamma(a) - gamma(a, z)` with the Kummer series (used for `Re z < 0`).
    KummerSeries,
    /// Legendre continued fraction.
    ContinuedFraction,
    /// Exponential-integral series at `a = 0`.
    ExpIntegral,
    /// Recurrence lift from `Gamma(0, z)` for nonpositive integer `a`.
    IntegerLift,
    /// Finite sum for small positive integer `a`.
    FiniteSum,
}

/// A kernel value with its evaluation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelEval<T> {
    pub value: Complex<T>,
    pub method: KernelMethod,
    pub iterations: usize,
}

/// `gamma(a, z)` by power series. Returns `(value, iterations, method)`.
fn lower_series<T: Real>(a: Complex<T>, z: Complex<T>) -> Result<(Complex<T>, usize, KernelMethod)> {
    let tol = T::kernel_tol();
    let budget = SERIES_MAX_ITER + 2 * z.norm().ceil().to_usize().unwrap_or(0);
    let zn = z.norm();
    let mut sum = Complex::zero();
    if z.re >= T::zero() {
        // gamma = z^a e^-z sum z^n / (a)_{n+1}
        let mut term = a.inv();
        for n in 0..budget {
            sum = sum + term;
            let next = real(T::of(n as i64 + 1));
            if term.norm() <= tol * sum.norm() && (a + next).norm() > zn {
                return Ok((pow_times_exp(z, a, -z)? * sum, n + 1, KernelMethod::LowerSeries));
            }
            term = term * z / (a + next);
        }
    } else {
        // gamma = z^a sum (-z)^n / (n! (a + n))
        let mut power = Complex::<T>::one();
        for n in 0..budget {
            let nn = real(T::of(n as i64));
            let term = power / (a + nn);
            sum = sum + term;
            if term.norm() <= tol * sum.norm() && T::of(n as i64) > zn {
                return Ok((pow_times_exp(z, a, Complex::zero())? * sum, n + 1, KernelMethod::KummerSeries));
            }
            power = power * (-z) / real(T::of(n as i64 + 1));
        }
    }
    Err(Error::Convergence { what: "incomplete gamma power series", iterations: budget })
}

/// `e^z z^-a Gamma(a, z)` by the Legendre continued fraction (modified Lentz).
fn upper_continued_fraction<T: Real>(a: Complex<T>, z: Complex<T>) -> Result<(Complex<T>, usize)> {
    let tiny = T::min_positive_value().sqrt();
    let tol = T::kernel_tol();
    let one = Complex::<T>::one();
    let two = real(T::lit(2.0));
    let mut b = z + one - a;
    let mut c = real(T::one() / tiny);
    let mut d = if b.norm() < tiny { real(T::one() / tiny) } else { b.inv() };
    let mut h = d;
    for i in 1..=CF_MAX_ITER {
        let ii = real(T::of(i as i64));
        let an = -ii * (ii - a);
        b = b + two;
        d = an * d + b;
        if d.norm() < tiny {
            d = real(tiny);
        }
        c = b + an / c;
        if c.norm() < tiny {
            c = real(tiny);
        }
        d = d.inv();
        let del = d * c;
        h = h * del;
        if (del - one).norm() <= tol {
            return Ok((h, i));
        }
    }
    Err(Error::Convergence { what: "incomplete gamma continued fraction", iterations: CF_MAX_ITER })
}

/// `Gamma(0, z) = E1(z)` by its power series.
fn exp_integral_series<T: Real>(z: Complex<T>) -> Result<(Complex<T>, usize)> {
    let tol = T::kernel_tol();
    let zn = z.norm();
    let mut power = Complex::<T>::one();
    let mut sum = Complex::zero();
    for n in 1..=SERIES_MAX_ITER {
        power = power * (-z) / real(T::of(n as i64));
        let term = power / real(T::of(n as i64));
        sum = sum + term;
        if term.norm() <= tol * sum.norm() && T::of(n as i64) > zn {
            return Ok((-real(T::lit(EULER_GAMMA)) - principal_log(z)? - sum, n));
        }
    }
    Err(Error::Convergence { what: "exponential integral series", iterations: SERIES_MAX_ITER })
}

/// `e^z Gamma(n, z) = (n-1)! sum_{m<n} z^m / m!`.
fn finite_sum_scaled<T: Real>(n: i64, z: Complex<T>) -> Complex<T> {
    let mut term = Complex::<T>::one();
    let mut sum = Complex::<T>::zero();
    for m in 0..n {
        sum = sum + term;
        term = term * z / T::of(m + 1);
    }
    let mut fact = T::one();
    for m in 1..n {
        fact = fact * T::of(m);
    }
    sum * fact
}

fn small_positive_integer<T: Real>(a: Complex<T>) -> Option<i64> {
    as_integer(a).filter(|&n| (1..=FINITE_SUM_MAX).contains(&n))
}

fn in_series_region<T: Real>(a: Complex<T>, z: Complex<T>) -> bool {
    z.norm() < a.norm() + T::one()
}

fn prefers_fraction<T: Real>(z: Complex<T>) -> bool {
    z.re >= T::zero() || z.norm() + z.re > T::lit(NEAR_CUT)
}

/// Upper incomplete gamma `Gamma(a, z)` with evaluation diagnostics.
pub fn upper_incomplete_eval<T: Real>(a: Complex<T>, z: Complex<T>) -> Result<KernelEval<T>> {
    if !is_finite(a) || !is_finite(z) {
        return Err(Error::Domain("non-finite incomplete gamma argument".into()));
    }
    if z.is_zero() {
        if a.re > T::zero() {
            return Ok(KernelEval { value: gamma(a)?, method: KernelMethod::Complete, iterations: 0 });
        }
        return Err(Error::Pole("Gamma(a, 0) diverges for Re a <= 0".into()));
    }
    if let Some(n) = small_positive_integer(a) {
        let value = finite_sum_scaled(n, z) * (-z).exp();
        return Ok(KernelEval { value, method: KernelMethod::FiniteSum, iterations: n as usize });
    }
    if !in_series_region(a, z) && prefers_fraction(z) {
        match upper_continued_fraction(a, z) {
            Ok((h, iterations)) => {
                let value = pow_times_exp(z, a, -z)? * h;
                return Ok(KernelEval { value, method: KernelMethod::ContinuedFraction, iterations });
            }
            Err(Error::Convergence { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    match as_integer(a) {
        Some(0) => {
            let (value, iterations) = exp_integral_series(z)?;
            Ok(KernelEval { value, method: KernelMethod::ExpIntegral, iterations })
        }
        Some(m) if m < 0 => {
            if m < -1000 {
                return Err(Error::Domain("integer lift deeper than 1000 steps".into()));
            }
            let base = upper_incomplete_eval(a + Complex::one(), z)?;
            let value = (base.value - powi(z, m as i32) * (-z).exp()) / a;
            Ok(KernelEval { value, method: KernelMethod::IntegerLift, iterations: base.iterations })
        }
        _ => {
            let (lower, iterations, method) = lower_series(a, z)?;
            Ok(KernelEval { value: gamma(a)? - lower, method, iterations })
        }
    }
}

/// Upper incomplete gamma `Gamma(a, z) = int_z^inf t^(a-1) e^-t dt`, principal sheet.
pub fn upper_incomplete<T: Real>(a: Complex<T>, z: Complex<T>) -> Result<Complex<T>> {
    upper_incomplete_eval(a, z).map(|e| e.value)
}

/// `e^z Gamma(a, z)`, computed without forming `e^z` where the kernel allows,
/// so it stays finite for large `|z|` in the right half-plane.
pub fn upper_incomplete_scaled<T: Real>(a: Complex<T>, z: Complex<T>) -> Result<Complex<T>> {
    if !is_finite(a) || !is_finite(z) {
        return Err(Error::Domain("non-finite incomplete gamma argument".into()));
    }
    if let Some(n) = small_positive_integer(a) {
        return Ok(finite_sum_scaled(n, z));
    }
    if !z.is_zero() && !in_series_region(a, z) && prefers_fraction(z) {
        if let Ok((h, _)) = upper_continued_fraction(a, z) {
            return Ok(pow_times_exp(z, a, Complex::zero())? * h);
        }
    }
    Ok(upper_incomplete(a, z)? * z.exp())
}

/// Lower incomplete gamma `gamma(a, z) = int_0^z t^(a-1) e^-t dt`, principal sheet.
///
/// Meromorphic in `a` with simple poles at `a = 0, -1, -2, ...`.
pub fn lower_incomplete<T: Real>(a: Complex<T>, z: Complex<T>) -> Result<Complex<T>> {
    if let Some(n) = as_integer(a) {
        if n <= 0 {
            return Err(Error::Pole(format!("lower incomplete gamma at a = {n}")));
        }
    }
    if z.is_zero() {
        if a.re > T::zero() {
            return Ok(Complex::zero());
        }
        return Err(Error::Domain("gamma(a, 0) with Re a <= 0".into()));
    }
    if in_series_region(a, z) || !prefers_fraction(z) {
        return lower_series(a, z).map(|(v, _, _)| v);
    }
    Ok(gamma(a)? - upper_incomplete(a, z)?)
}

/// Lower, upper and complete gamma at one point; `lower + upper == total`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaPair<T> {
    pub lower: Complex<T>,
    pub upper: Complex<T>,
    pub total: Complex<T>,
}

/// Evaluates the decomposition `gamma(a, z) + Gamma(a, z) = Gamma(a)`.
pub fn incomplete_pair<T: Real>(a: Complex<T>, z: Complex<T>) -> Result<GammaPair<T>> {
    let total = gamma(a)?;
    let lower = lower_incomplete(a, z)?;
    let upper = upper_incomplete(a, z)?;
    Ok(GammaPair { lower, upper, total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cplx;

    fn close(a: Complex<f64>, b: Complex<f64>, rel: f64) -> bool {
        (a - b).norm() <= rel * b.norm().max(1e-300)
    }

    #[test]
    fn elementary_values() {
        let g = upper_incomplete(cplx(1.0, 0.0), cplx(2.0, 0.0)).unwrap();
        assert!(close(g, cplx((-2.0f64).exp(), 0.0), 1e-15));
        assert_eq!(upper_incomplete(cplx::<f64>(3.0, 0.0), cplx(0.0, 0.0)).unwrap(), cplx(2.0, 0.0));
        let l = lower_incomplete(cplx(1.0, 0.0), cplx(2.0, 0.0)).unwrap();
        assert!(close(l, cplx(1.0 - (-2.0f64).exp(), 0.0), 1e-15));
        assert_eq!(lower_incomplete(cplx::<f64>(2.0, 0.0), cplx(0.0, 0.0)).unwrap(), cplx(0.0, 0.0));
    }

    #[test]
    fn method_switch_is_recorded() {
        let s = upper_incomplete_eval(cplx::<f64>(3.5, 0.0), cplx(1.0, 0.5)).unwrap();
        assert_eq!(s.method, KernelMethod::LowerSeries);
        let f = upper_incomplete_eval(cplx::<f64>(3.0, 0.0), cplx(1.0, 0.5)).unwrap();
        assert_eq!(f.method, KernelMethod::FiniteSum);
        let c = upper_incomplete_eval(cplx::<f64>(0.5, 0.0), cplx(8.0, 1.0)).unwrap();
        assert_eq!(c.method, KernelMethod::ContinuedFraction);
        assert!(c.iterations <= CF_MAX_ITER);
        let k = upper_incomplete_eval(cplx::<f64>(0.5, 0.0), cplx(-3.0, 0.1)).unwrap();
        assert_eq!(k.method, KernelMethod::KummerSeries);
        let l = upper_incomplete_eval(cplx::<f64>(-2.0, 0.0), cplx(0.5, 0.1)).unwrap();
        assert_eq!(l.method, KernelMethod::IntegerLift);
    }

    #[test]
    fn lower_pole_at_nonpositive_integer() {
        assert!(matches!(lower_incomplete(cplx::<f64>(-1.0, 0.0), cplx(1.0, 0.0)), Err(Error::Pole(_))));
        assert!(matches!(upper_incomplete(cplx::<f64>(-1.0, 0.0), cplx(0.0, 0.0)), Err(Error::Pole(_))));
    }
}
