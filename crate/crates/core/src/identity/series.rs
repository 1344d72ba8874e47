//! Truncation engine for the identity double series.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{is_finite, Real};
use crate::summation::CompensatedSum;

use super::case::{terminating_support, IdentityCase, IdentityId, Regime};
use super::closed::rhs_closed;
use super::policy::{Conventions, EvalResult, TruncationMode, TruncationPolicy};
use super::terms::{quotient_params, Series};
use super::validate::check_lhs;

/// Consecutive growing terms past the running minimum that count as divergence.
const GROWTH_RUN: usize = 3;

/// Outer terms `0..=n_max` of the left-hand series.
///
/// Generation stops early at the first non-finite term.
pub fn outer_terms<T: Real>(case: &IdentityCase<T>, n_max: usize, conv: Conventions) -> Result<Vec<Complex<T>>> {
    check_lhs(case)?;
    if is_quotient(case.id) {
        return Err(Error::InvalidCase(format!("{} is a quotient; use quotient_terms", case.id)));
    }
    collect(|n| Series::new(case, conv).outer(n), n_max)
}

/// Outer terms of the numerator and denominator series of a quotient case.
pub fn quotient_terms<T: Real>(case: &IdentityCase<T>, n_max: usize) -> Result<(Vec<Complex<T>>, Vec<Complex<T>>)> {
    check_lhs(case)?;
    if !is_quotient(case.id) {
        return Err(Error::InvalidCase(format!("{} is not a quotient", case.id)));
    }
    let num = collect(|n| Series::quotient_part(case, false).outer(n), n_max)?;
    let den = collect(|n| Series::quotient_part(case, true).outer(n), n_max)?;
    Ok((num, den))
}

/// `z / a`, the factor multiplying the ratio of the two quotient series.
pub fn quotient_prefactor<T: Real>(case: &IdentityCase<T>) -> Result<Complex<T>> {
    if !is_quotient(case.id) {
        return Err(Error::InvalidCase(format!("{} is not a quotient", case.id)));
    }
    let (_, a, _, z) = quotient_params(case);
    Ok(z / a)
}

pub(crate) fn is_quotient(id: IdentityId) -> bool {
    matches!(id, IdentityId::GQ | IdentityId::EX1)
}

fn collect<T: Real>(mut f: impl FnMut(usize) -> Result<Complex<T>>, n_max: usize) -> Result<Vec<Complex<T>>> {
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let t = f(n)?;
        if !is_finite(t) {
            break;
        }
        out.push(t);
    }
    Ok(out)
}

/// Index of the smallest nonzero outer term with `n >= 1`.
///
/// Exact zeros come from parity or vanishing Pochhammer factors and say nothing
/// about where an asymptotic series turns.
fn smallest_index<T: Real>(terms: &[Complex<T>]) -> Option<usize> {
    terms
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, t)| !t.is_zero())
        .min_by(|(_, x), (_, y)| x.norm().partial_cmp(&y.norm()).unwrap())
        .map(|(i, _)| i)
}

fn sum<T: Real>(terms: &[Complex<T>]) -> Complex<T> {
    terms.iter().copied().collect::<CompensatedSum<T>>().value()
}

/// Sums a precomputed (or lazily generated) sequence of outer terms under a policy.
pub(crate) fn truncate<T: Real>(
    mut term: impl FnMut(usize) -> Result<Complex<T>>,
    policy: &TruncationPolicy<T>,
    regime: Regime,
    support: Option<usize>,
) -> Result<EvalResult<T>> {
    let done = |value, err: T, used, terminated, smallest: T| EvalResult {
        value,
        abs_err_estimate: err,
        terms_used: used,
        terminated,
        smallest_term: smallest,
        regime,
    };
    match policy.mode {
        TruncationMode::Terminating => {
            let last = support.ok_or(Error::IncompatiblePolicy {
                policy: "terminating",
                regime: regime.name(),
                case: "series without finite support",
            })?;
            let terms = collect(&mut term, last)?;
            Ok(done(sum(&terms), T::zero(), last + 1, true, T::zero()))
        }
        TruncationMode::FixedN => {
            let terms = collect(&mut term, policy.max_n)?;
            let tail = terms.last().map_or(T::zero(), |t| t.norm());
            let terminated = support.is_some_and(|s| policy.max_n >= s);
            let err = if terminated { T::zero() } else { tail };
            Ok(done(sum(&terms), err, terms.len(), terminated, tail))
        }
        TruncationMode::TailTolerance => tail_tolerance(term, policy, regime, support),
        TruncationMode::OptimalTruncation => {
            let terms = collect(&mut term, policy.max_n)?;
            match smallest_index(&terms) {
                Some(m) => {
                    let smallest = terms[m].norm();
                    Ok(done(sum(&terms[..m]), smallest, m, false, smallest))
                }
                // at most the n = 0 term is nonzero
                None => Ok(done(sum(&terms), T::zero(), terms.len(), true, T::zero())),
            }
        }
    }
}

fn tail_tolerance<T: Real>(
    mut term: impl FnMut(usize) -> Result<Complex<T>>,
    policy: &TruncationPolicy<T>,
    regime: Regime,
    support: Option<usize>,
) -> Result<EvalResult<T>> {
    let mut acc = CompensatedSum::new();
    let mut quiet = 0usize;
    let mut min_mag = T::infinity();
    let mut min_at = 0usize;
    let mut growth = 0usize;
    let mut prev = T::zero();
    for n in 0..=policy.max_n {
        let t = term(n)?;
        if !is_finite(t) {
            return Err(Error::Divergence { after: min_at });
        }
        acc.add(t);
        let mag = t.norm();
        if support.is_some_and(|s| n >= s) {
            return Ok(EvalResult {
                value: acc.value(),
                abs_err_estimate: T::zero(),
                terms_used: n + 1,
                terminated: true,
                smallest_term: mag,
                regime,
            });
        }
        if mag <= policy.tol * acc.value().norm() {
            quiet += 1;
        } else {
            quiet = 0;
        }
        if quiet >= 2 {
            return Ok(EvalResult {
                value: acc.value(),
                abs_err_estimate: mag,
                terms_used: n + 1,
                terminated: false,
                smallest_term: mag,
                regime,
            });
        }
        if mag.is_zero() {
            continue;
        }
        if n >= 1 && mag < min_mag {
            min_mag = mag;
            min_at = n;
            growth = 0;
        } else if n > min_at && mag > prev && mag > min_mag * T::lit(10.0) {
            growth += 1;
            // early growth of a polynomial prefactor is not divergence
            if growth >= GROWTH_RUN && n >= 8 {
                return Err(Error::Divergence { after: min_at });
            }
        } else {
            growth = 0;
        }
        prev = mag;
    }
    Err(Error::Convergence { what: "identity series tail", iterations: policy.max_n })
}

/// Left-hand side of a case under a truncation policy.
///
/// `EX2` returns the exponential of its series; quotient cases return the
/// truncated quotient.
pub fn lhs_series<T: Real>(
    case: &IdentityCase<T>,
    policy: &TruncationPolicy<T>,
    conv: Conventions,
) -> Result<EvalResult<T>> {
    check_lhs(case)?;
    let regime = case.regime();
    if !policy.mode.fits(regime) {
        return Err(Error::IncompatiblePolicy {
            policy: policy.mode.name(),
            regime: regime.name(),
            case: case.id.name(),
        });
    }
    if is_quotient(case.id) {
        return gamma_quotient_case(case, policy);
    }
    let series = Series::new(case, conv);
    let mut res = truncate(|n| series.outer(n), policy, regime, terminating_support(case))?;
    if case.id == IdentityId::EX2 {
        res.value = res.value.exp();
        res.abs_err_estimate = res.abs_err_estimate * res.value.norm();
    }
    Ok(res)
}

/// Right-hand series of `P3`, truncated under the same policy.
pub fn p3_rhs_series<T: Real>(case: &IdentityCase<T>, policy: &TruncationPolicy<T>) -> Result<EvalResult<T>> {
    if case.id != IdentityId::P3 {
        return Err(Error::InvalidCase(format!("{} has no right-hand series", case.id)));
    }
    check_lhs(case)?;
    let series = Series::new(case, Conventions::default());
    truncate(|n| series.p3_rhs_outer(n), policy, Regime::Asymptotic, None)
}

/// Outer terms of the right-hand series of `P3`.
pub fn p3_rhs_terms<T: Real>(case: &IdentityCase<T>, n_max: usize) -> Result<Vec<Complex<T>>> {
    if case.id != IdentityId::P3 {
        return Err(Error::InvalidCase(format!("{} has no right-hand series", case.id)));
    }
    check_lhs(case)?;
    let series = Series::new(case, Conventions::default());
    collect(|n| series.p3_rhs_outer(n), n_max)
}

/// `(z/a) * N / D` from the two quotient series, each truncated on its own.
pub fn gamma_quotient<T: Real>(
    k: Complex<T>,
    a: Complex<T>,
    x: Complex<T>,
    z: Complex<T>,
    policy: &TruncationPolicy<T>,
) -> Result<EvalResult<T>> {
    let case = IdentityCase::from_pairs(IdentityId::GQ, &[("k", k), ("a", a), ("x", x), ("z", z)])?;
    gamma_quotient_case(&case, policy)
}

fn gamma_quotient_case<T: Real>(case: &IdentityCase<T>, policy: &TruncationPolicy<T>) -> Result<EvalResult<T>> {
    if !matches!(policy.mode, TruncationMode::OptimalTruncation | TruncationMode::FixedN) {
        return Err(Error::IncompatiblePolicy {
            policy: policy.mode.name(),
            regime: Regime::Asymptotic.name(),
            case: case.id.name(),
        });
    }
    check_lhs(case)?;
    let prefactor = quotient_prefactor(case)?;
    let num_s = Series::quotient_part(case, false);
    let den_s = Series::quotient_part(case, true);
    let num = truncate(|n| num_s.outer(n), policy, Regime::Asymptotic, None)?;
    let den = truncate(|n| den_s.outer(n), policy, Regime::Asymptotic, None)?;
    if den.value.is_zero() {
        return Err(Error::DivisionByZero("quotient denominator series vanishes".into()));
    }
    let value = prefactor * num.value / den.value;
    let rel = |r: &EvalResult<T>| if r.value.is_zero() { T::zero() } else { r.abs_err_estimate / r.value.norm() };
    Ok(EvalResult {
        value,
        abs_err_estimate: value.norm() * (rel(&num) + rel(&den)),
        terms_used: num.terms_used.max(den.terms_used),
        terminated: false,
        smallest_term: num.smallest_term.max(den.smallest_term),
        regime: Regime::Asymptotic,
    })
}

/// Both sides of the double-product identity: `exp` of the double series and the closed product.
pub fn double_product<T: Real>(
    a: Complex<T>,
    alpha: Complex<T>,
    z: Complex<T>,
    policy: &TruncationPolicy<T>,
) -> Result<(EvalResult<T>, Complex<T>)> {
    let case = IdentityCase::from_pairs(IdentityId::EX2, &[("a", a), ("alpha", alpha), ("z", z)])?;
    let lhs = lhs_series(&case, policy, Conventions::default())?;
    Ok((lhs, rhs_closed(&case)?))
}
