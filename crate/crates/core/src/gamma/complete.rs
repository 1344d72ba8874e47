//! Complete gamma and log-gamma over the complex plane (Lanczos, g = 7, n = 9).

use num_complex::Complex;
use num_traits::One;

use crate::branch::{principal_log, sin_pi};
use crate::error::{Error, Result};
use crate::scalar::{as_integer, real, Real};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Sum `A(z)` of the Lanczos series for `Gamma(z + 1)`.
fn lanczos_sum<T: Real>(z: Complex<T>) -> Complex<T> {
    let mut acc = real(T::lit(LANCZOS[0]));
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + real(T::lit(p)) / (z + real(T::of(i as i64)));
    }
    acc
}

/// Log-gamma on `Re z >= 1/2`.
fn ln_gamma_right<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    let zm = z - Complex::one();
    let t = zm + real(T::lit(LANCZOS_G + 0.5));
    let half_ln_two_pi = T::lit(0.918_938_533_204_672_8);
    Ok(real(half_ln_two_pi) + (zm + real(T::lit(0.5))) * principal_log(t)? - t + principal_log(lanczos_sum(zm))?)
}

fn pole_check<T: Real>(z: Complex<T>) -> Result<()> {
    match as_integer(z) {
        Some(n) if n <= 0 => Err(Error::Pole(format!("gamma at nonpositive integer {n}"))),
        _ => Ok(()),
    }
}

/// Log-gamma with the standard branch: real on the positive axis and continuous
/// off the negative real axis, so `exp(ln_gamma(z)) == gamma(z)`.
pub fn ln_gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    pole_check(z)?;
    let half = T::lit(0.5);
    if z.re >= half {
        return ln_gamma_right(z);
    }
    // shift right; the sum of principal logs keeps the analytic branch
    let shift = (half - z.re).ceil().to_i64().unwrap_or(i64::MAX);
    if shift > 100_000 {
        return Err(Error::Domain("ln_gamma argument too far left".into()));
    }
    let mut acc = Complex::new(T::zero(), T::zero());
    for i in 0..shift {
        acc = acc + principal_log(z + real(T::of(i)))?;
    }
    Ok(ln_gamma_right(z + real(T::of(shift)))? - acc)
}

/// Gamma function; nonpositive integers are poles.
pub fn gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    pole_check(z)?;
    if let Some(n) = as_integer(z) {
        if n <= 20 {
            let mut f = T::one();
            for i in 2..n {
                f = f * T::of(i);
            }
            return Ok(real(f));
        }
    }
    if z.re >= T::lit(0.5) {
        return Ok(ln_gamma_right(z)?.exp());
    }
    // reflection, with exact argument reduction in sin(pi z)
    let s = sin_pi(z);
    let g = ln_gamma_right(Complex::<T>::one() - z)?.exp();
    Ok(real(T::PI()) / (s * g))
}

/// Reciprocal gamma; entire, zero at the poles of gamma.
pub fn rgamma<T: Real>(z: Complex<T>) -> Complex<T> {
    match gamma(z) {
        Ok(g) => g.inv(),
        Err(_) => Complex::new(T::zero(), T::zero()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cplx;

    #[test]
    fn unit_and_half() {
        assert!(ln_gamma(cplx::<f64>(1.0, 0.0)).unwrap().norm() < 1e-15);
        let h = ln_gamma(cplx::<f64>(0.5, 0.0)).unwrap();
        assert!((h.re - 0.572_364_942_924_700_1).abs() < 1e-14);
        assert_eq!(gamma(cplx::<f64>(3.0, 0.0)).unwrap(), cplx(2.0, 0.0));
    }

    #[test]
    fn poles_are_errors() {
        assert!(matches!(gamma(cplx::<f64>(-3.0, 0.0)), Err(Error::Pole(_))));
        assert!(matches!(ln_gamma(cplx::<f64>(0.0, 0.0)), Err(Error::Pole(_))));
        assert_eq!(rgamma(cplx::<f64>(-1.0, 0.0)), cplx(0.0, 0.0));
    }

    #[test]
    fn single_precision_is_usable() {
        let g = gamma(cplx::<f32>(4.5, 0.0)).unwrap();
        assert!((g.re - 11.631_728_f32).abs() < 1e-4);
    }
}
