//! Summands of the identity double series.
//!
//! Every outer term is `sum_{j=0}^{floor(n/2)} t(n, j)`. Asymptotic cases carry
//! Gamma-function growth, so their summands are assembled in log space; the
//! other regimes multiply directly, which keeps Pochhammer zeros exact.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::branch::{powi, principal_log};
use crate::error::{Error, Result};
use crate::gamma::{gamma, ln_gamma, pochhammer};
use crate::scalar::{as_integer, real, Real};
use crate::summation::CompensatedSum;

use super::case::{IdentityCase, IdentityId, Regime, Symbol};
use super::policy::{Conventions, T7Exponent};

/// `n / (n - j)`, taken as zero at `n = 0`.
pub(crate) fn ratio<T: Real>(n: usize, j: usize) -> T {
    if n == 0 {
        T::zero()
    } else {
        T::of(n as i64) / T::of((n - j) as i64)
    }
}

/// `C(n, k)` as a float; the multiplicative form stays finite well past `u128` range.
pub(crate) fn binom<T: Real>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 1..=k {
        acc = acc * T::of((n - k + i) as i64) / T::of(i as i64);
    }
    acc.round()
}

/// `exp(w)` with the phase reduced in units of `pi`, so a phase that is an exact
/// multiple of `pi` (negative real factors) leaves no imaginary residue.
fn exp_exact_phase<T: Real>(w: Complex<T>) -> Complex<T> {
    let t = w.im / T::PI();
    let n = t.round();
    let (s, c) = (T::PI() * (t - n)).sin_cos();
    let m = w.re.exp();
    let m = if n.to_i64().unwrap_or(0) % 2 == 0 { m } else { -m };
    Complex::new(c * m, s * m)
}

/// Product of factors, either accumulated directly or as `scale * exp(log)`.
pub(crate) struct Factors<T> {
    log_space: bool,
    scale: Complex<T>,
    log: Complex<T>,
    zero: bool,
}

impl<T: Real> Factors<T> {
    pub(crate) fn new(log_space: bool) -> Self {
        Self { log_space, scale: Complex::one(), log: Complex::zero(), zero: false }
    }

    pub(crate) fn mul(&mut self, c: Complex<T>) -> &mut Self {
        if c.is_zero() {
            self.zero = true;
        }
        if !self.zero {
            self.scale = self.scale * c;
        }
        self
    }

    pub(crate) fn pow(&mut self, base: Complex<T>, e: i64) -> Result<&mut Self> {
        if self.zero || e == 0 {
            return Ok(self);
        }
        if base.is_zero() {
            if e > 0 {
                self.zero = true;
                return Ok(self);
            }
            return Err(Error::DivisionByZero("zero base raised to a negative power".into()));
        }
        if self.log_space {
            self.log = self.log + principal_log(base)? * T::of(e);
        } else {
            self.scale = self.scale * powi(base, e as i32);
        }
        Ok(self)
    }

    /// Multiplies by `(a)_n`.
    pub(crate) fn poch(&mut self, a: Complex<T>, n: i64) -> Result<&mut Self> {
        if self.zero {
            return Ok(self);
        }
        let at_pole = |w: Complex<T>| as_integer(w).is_some_and(|m| m <= 0);
        if self.log_space && !at_pole(a) && !at_pole(a + T::of(n)) {
            self.log = self.log + ln_gamma(a + T::of(n))? - ln_gamma(a)?;
            return Ok(self);
        }
        let p = pochhammer(&a, n)?;
        Ok(self.mul(p))
    }

    /// Multiplies by `Gamma(w)`.
    pub(crate) fn gamma(&mut self, w: Complex<T>) -> Result<&mut Self> {
        if self.zero {
            return Ok(self);
        }
        if self.log_space {
            self.log = self.log + ln_gamma(w)?;
            return Ok(self);
        }
        let g = gamma(w)?;
        Ok(self.mul(g))
    }

    pub(crate) fn value(&self) -> Complex<T> {
        if self.zero {
            Complex::zero()
        } else if self.log_space {
            self.scale * exp_exact_phase(self.log)
        } else {
            self.scale
        }
    }
}

/// Generator of outer terms for one case.
pub(crate) struct Series<'a, T> {
    case: &'a IdentityCase<T>,
    conv: Conventions,
    log_space: bool,
    /// Which of the two quotient series a GQ/EX1 case generates.
    denominator: bool,
}

impl<'a, T: Real> Series<'a, T> {
    pub(crate) fn new(case: &'a IdentityCase<T>, conv: Conventions) -> Self {
        Self { case, conv, log_space: case.regime() == Regime::Asymptotic, denominator: false }
    }

    pub(crate) fn quotient_part(case: &'a IdentityCase<T>, denominator: bool) -> Self {
        Self { case, conv: Conventions::default(), log_space: true, denominator }
    }

    fn p(&self, s: Symbol) -> Complex<T> {
        self.case.get(s)
    }

    /// Outer term `n`, summed over `j` with compensation.
    pub(crate) fn outer(&self, n: usize) -> Result<Complex<T>> {
        let mut s = CompensatedSum::new();
        for j in 0..=n / 2 {
            s.add(self.term(n, j)?);
        }
        Ok(s.value())
    }

    fn term(&self, n: usize, j: usize) -> Result<Complex<T>> {
        use IdentityId::*;
        let (ni, ji) = (n as i64, j as i64);
        let c = real(binom::<T>(n - j, j));
        let r = real(ratio::<T>(n, j));
        let one = Complex::<T>::one();
        let mut f = Factors::new(self.log_space);
        let id = self.case.id;
        let k = if matches!(id, EX1 | EX2) { Complex::zero() } else { self.p(Symbol::K) };
        let a = if id == EX1 { one } else { self.p(Symbol::A) };
        match id {
            T1 | T4 => {
                let (al, x) = (self.p(Symbol::Alpha), self.p(Symbol::X));
                f.poch(one - k, ni - 1)?.mul(c);
                if id == T1 {
                    f.mul(r);
                }
                f.pow(-al, ji)?.pow(x, ni - 2 * ji)?.pow(-a.inv(), ni)?;
            }
            T2 | T5 => {
                let (al, z) = (self.p(Symbol::Alpha), self.p(Symbol::Z));
                f.poch(one - k, ni - 1 - 2 * ji)?.mul(c);
                if id == T2 {
                    f.mul(r);
                }
                f.pow(-(a * a * al), ji)?.pow(-z / a, ni)?;
            }
            T3 | T6 | P3 => {
                let (x, z) = (self.p(Symbol::X), self.p(Symbol::Z));
                f.poch(one - k, ji - 1)?.mul(c);
                if id != T6 {
                    f.mul(r);
                }
                f.pow(a, -ji)?.pow(x, ni - 2 * ji)?.pow(z, ni)?;
            }
            T7 => {
                let (b, u) = (self.p(Symbol::B), self.p(Symbol::U));
                let w = b / u + u;
                let e = match self.conv.t7_exponent {
                    T7Exponent::AsPrinted => 2 - ji,
                    T7Exponent::FunctionalPattern => ni - 2 * ji,
                    T7Exponent::NegTwoJ => -2 * ji,
                };
                f.poch(one - k, ni - 1)?.mul(c * r);
                f.pow(-b, ji)?.pow(w, e)?.pow(-w / a, ni)?;
            }
            T8 => {
                let (be, y) = (self.p(Symbol::Beta), self.p(Symbol::Y));
                f.poch(one - k, ni - 1)?.mul(c);
                f.pow(-be, ji)?.pow(y + be / y, ni - 2 * ji)?.pow(-a.inv(), ni)?;
            }
            P1 => {
                let x = self.p(Symbol::X);
                let poly = (k - T::of(ni)) * x * x / a + r * (a * T::lit(2.0) - k * x);
                f.mul(poly * c);
                f.pow(real(T::lit(-0.25)), ji)?.gamma(real(T::of(ni)) - k)?.pow(-x / a, ni)?;
            }
            P2 => {
                let (al, z) = (self.p(Symbol::Alpha), self.p(Symbol::Z));
                let z2a = z * z * al;
                // (j-n)/(n-j) is -1 throughout, including n = j = 0
                let poly = -(k + T::of(2 * ji - ni)) * z * (one - z2a) + a * (one + z2a) * r;
                f.mul(poly * c);
                f.pow(-z / a, ni)?.pow(-(a * a * al), ji)?.gamma(real(T::of(ni - 2 * ji)) - k)?;
            }
            GQ | EX1 => {
                let (k, a, x, z) = quotient_params(self.case);
                if self.denominator {
                    f.poch(k, ji - 1)?.mul(c * r);
                } else {
                    let poly = a * x + z * (k + T::of(ji - 1)) * T::lit(2.0);
                    f.mul(poly * c).gamma(k + T::of(ji - 1))?;
                }
                f.pow(a, -ji)?.pow(x, ni - 2 * ji)?.pow(z, ni)?;
            }
            EX2 => {
                if n == 0 {
                    return Ok(Complex::zero());
                }
                let (al, z) = (self.p(Symbol::Alpha), self.p(Symbol::Z));
                let two_pow = T::lit(2.0).powi(-(ni as i32) - 1);
                let w = two_pow * (T::lit(2.0).powi(ni as i32 + 1) - T::one()) / T::of(ni + 1);
                f.poch(Complex::zero(), ni - 2 * ji - 1)?.mul(real(w) * r * c * z);
                f.pow(-(a * T::lit(2.0)).exp() * al, ji)?.pow(-(-a).exp() * z, ni)?;
            }
        }
        Ok(f.value())
    }

    /// Right-hand series of `P3`.
    pub(crate) fn p3_rhs_outer(&self, n: usize) -> Result<Complex<T>> {
        let mut s = CompensatedSum::new();
        let (k, a, x, z) = (self.p(Symbol::K), self.p(Symbol::A), self.p(Symbol::X), self.p(Symbol::Z));
        let one = Complex::<T>::one();
        for j in 0..=n / 2 {
            let ji = j as i64;
            let c = real(binom::<T>(n - j, j));
            let mut f = Factors::new(true);
            let poly = a * x + (real(T::of(ji)) - k) * z * T::lit(2.0);
            f.mul(poly * c / a);
            f.pow(a, -ji)?.pow(x, n as i64 - 2 * ji)?.pow(z, n as i64 + 1)?;
            // Gamma(j-k) / Gamma(1-k)
            f.gamma(real(T::of(ji)) - k)?;
            f.log = f.log - ln_gamma(one - k)?;
            s.add(f.value());
        }
        Ok(s.value())
    }
}

/// Parameters of a quotient case; `EX1` pins them.
pub(crate) fn quotient_params<T: Real>(case: &IdentityCase<T>) -> (Complex<T>, Complex<T>, Complex<T>, Complex<T>) {
    if case.id == IdentityId::EX1 {
        return (real(T::lit(0.5)), real(T::lit(2.0)), real(T::lit(0.5)), real(T::one() / T::lit(3.0)));
    }
    (case.get(Symbol::K), case.get(Symbol::A), case.get(Symbol::X), case.get(Symbol::Z))
}
