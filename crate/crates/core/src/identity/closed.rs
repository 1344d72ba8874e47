//! Closed right-hand sides, assembled from the gamma kernels.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::branch::{principal_arg, principal_log, principal_pow, principal_sqrt};
use crate::error::{Error, Result};
use crate::gamma::{continue_upper_scaled, gamma, BranchIndex};
use crate::scalar::{real, Real};

use super::case::{IdentityCase, IdentityId, Symbol};
use super::policy::{Conventions, T8Sign};
use super::validate::{check_lhs, nonneg_integer};

/// Minimum `|x^2 - 4 alpha|` (and analogues) below which the closed forms are
/// treated as sitting on their removable singularity.
pub const DEGENERACY_GAP: f64 = 1e-8;

fn singular<T>(what: &str) -> Result<T> {
    Err(Error::Singular(what.to_string()))
}

fn away_from_zero<T: Real>(w: Complex<T>, what: &str) -> Result<()> {
    if w.norm() <= T::lit(DEGENERACY_GAP) {
        return singular(what);
    }
    Ok(())
}

/// Closed form on the principal sheet with default conventions.
pub fn rhs_closed<T: Real>(case: &IdentityCase<T>) -> Result<Complex<T>> {
    rhs_closed_with(case, Conventions::default())
}

pub fn rhs_closed_with<T: Real>(case: &IdentityCase<T>, conv: Conventions) -> Result<Complex<T>> {
    rhs_on_sheets(case, conv, &[])
}

/// Closed form with the incomplete-gamma slot `i` continued to sheet `sheets[i]`
/// (missing entries are principal).
pub fn rhs_on_sheets<T: Real>(case: &IdentityCase<T>, conv: Conventions, sheets: &[BranchIndex]) -> Result<Complex<T>> {
    use IdentityId::*;
    check_lhs(case)?;
    let mut slot = 0usize;
    // every incomplete gamma in the closed forms comes as e^w Gamma(s, w)
    let mut eg = |s: Complex<T>, w: Complex<T>| -> Result<Complex<T>> {
        let m = sheets.get(slot).copied().unwrap_or(BranchIndex::PRINCIPAL);
        slot += 1;
        continue_upper_scaled(s, w, m)
    };
    let pw = principal_pow::<T>;
    let one = Complex::<T>::one();
    let two = T::lit(2.0);
    let id = case.id;
    let k = match id {
        EX1 | EX2 => Complex::zero(),
        _ => case.get(Symbol::K),
    };
    if matches!(id, T2 | T3 | T4 | T5 | T6 | T7 | T8) && k.is_zero() {
        return singular("1/k at k = 0");
    }
    let a = match id {
        EX1 => one,
        _ => case.get(Symbol::A),
    };
    let v = match id {
        T1 | T4 => {
            let (al, x) = (case.get(Symbol::Alpha), case.get(Symbol::X));
            if al.is_zero() {
                return singular("alpha = 0");
            }
            let disc = x * x - al * T::lit(4.0);
            away_from_zero(disc, "x^2 - 4 alpha = 0")?;
            let r = principal_sqrt(disc);
            let (w1, w2) = (a * (x - r) / (al * two), a * (x + r) / (al * two));
            let (p1, p2) = ((x - r) / al, (x + r) / al);
            let pre = pw(real(two) / a, k)?;
            if id == T1 {
                pre * (-(eg(k, w1)? / pw(p1, k)?) - eg(k, w2)? / pw(p2, k)?)
            } else {
                let k1 = k + one;
                -pre * two / (r * k) * (eg(k1, w1)? / pw(p1, k1)? - eg(k1, w2)? / pw(p2, k1)?)
            }
        }
        T2 | T5 => {
            let (al, z) = (case.get(Symbol::Alpha), case.get(Symbol::Z));
            if z.is_zero() {
                return singular("z = 0");
            }
            let z2a = z * z * al;
            away_from_zero(one + z2a, "1 + z^2 alpha = 0")?;
            let q = z.inv() + z * al;
            let aq = a * q;
            let den = pw(a, k)? * pw(q, k)? * (one + z2a) * k;
            if id == T2 {
                (k * (z2a - one) * eg(k, aq)? + z2a * two * pw(aq, k)?) / den
            } else {
                -eg(k + one, aq)? / den
            }
        }
        T3 | T6 => {
            let (x, z) = (case.get(Symbol::X), case.get(Symbol::Z));
            if z.is_zero() {
                return singular("z = 0");
            }
            away_from_zero(x * z - one, "x z = 1")?;
            let q = (x * z - one) / (z * z);
            let aq = a * q;
            let den = pw(a, k)? * pw(q, k + one)? * k * z * z;
            if id == T3 {
                (x * z * eg(k + one, aq)? - k * two * (x * z - one) * eg(k, aq)?) / den
            } else {
                eg(k + one, aq)? / den
            }
        }
        T7 => {
            let (b, u) = (case.get(Symbol::B), case.get(Symbol::U));
            if b.is_zero() {
                return singular("b = 0");
            }
            let (w1, w2) = (a / u, a * u / b);
            let k1 = k + one;
            pw(b / a, k)? * (pw(a / b, k)? * two - pw(u / b, k)? * eg(k1, w1)? - pw(u, -k)? * eg(k1, w2)?) / k
        }
        T8 => {
            let (be, y) = (case.get(Symbol::Beta), case.get(Symbol::Y));
            if be.is_zero() {
                return singular("beta = 0");
            }
            away_from_zero(y * y - be, "y^2 = beta")?;
            let (w1, w2) = (a / y, y * a / be);
            let k1 = k + one;
            let printed =
                (pw(y, k + two)? * eg(k1, w1)? - pw(be / y, k)? * be * eg(k1, w2)?) / (pw(a, k)? * k * (y * y - be));
            match conv.t8_sign {
                T8Sign::AsPrinted => printed,
                T8Sign::Corrected => -printed,
            }
        }
        P1 => -case.get(Symbol::X) * two * gamma(one - k)?,
        P2 => {
            let (al, z) = (case.get(Symbol::Alpha), case.get(Symbol::Z));
            debug_assert!(!nonneg_integer(k));
            -a * two * z * z * al * gamma(-k)?
        }
        P3 => {
            return Err(Error::InvalidCase("P3 has a series on both sides; use p3_rhs_series".into()));
        }
        GQ => gamma(k)?,
        EX1 => gamma(real(T::lit(0.5)))?,
        EX2 => ex2_closed(a, case.get(Symbol::Alpha), case.get(Symbol::Z))?,
    };
    Ok(v)
}

/// Closed double product; rejects inputs whose principal powers would jump sheets.
fn ex2_closed<T: Real>(a: Complex<T>, al: Complex<T>, z: Complex<T>) -> Result<Complex<T>> {
    if al.is_zero() {
        return singular("alpha = 0");
    }
    let one = Complex::<T>::one();
    let i = Complex::<T>::i();
    let two = T::lit(2.0);
    let e = (-a).exp();
    let sa = principal_sqrt(al);
    let z2a = al * z * z;
    let num = z2a + i * sa * z + two;
    let den = z2a - i * sa * z + two;
    away_from_zero(den, "alpha z^2 - i sqrt(alpha) z + 2 = 0")?;
    let quotient = num / den;
    let inner = one - real(T::lit(3.0)) / (z2a + T::lit(4.0));
    let limit = T::FRAC_PI_2();
    if principal_arg(quotient).abs() > limit || principal_arg(inner).abs() > limit {
        return Err(Error::BranchAmbiguity("double-product powers leave the principal neighbourhood".into()));
    }
    let quartic = al * al * z * z * z * z + z2a * T::lit(5.0) + T::lit(4.0);
    away_from_zero(quartic, "alpha^2 z^4 + 5 alpha z^2 + 4 = 0")?;
    // log num - log den keeps the conjugate symmetry that log(num / den) loses to rounding
    let mut lq = principal_log(num)? - principal_log(den)?;
    let pi = T::PI();
    if lq.im > pi {
        lq.im = lq.im - pi * two;
    } else if lq.im <= -pi {
        lq.im = lq.im + pi * two;
    }
    Ok(principal_pow(real(two), e / al)?
        * (lq * i / sa).exp()
        * (z - e * z * z * T::lit(3.0) / quartic).exp()
        * principal_pow(inner, e / (al * two))?)
}
