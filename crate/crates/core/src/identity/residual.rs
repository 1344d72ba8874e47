use num_complex::Complex;

use crate::error::{Error, Result};
use crate::gamma::BranchIndex;
use crate::scalar::Real;

use super::case::{IdentityCase, IdentityId, Regime};
use super::closed::rhs_on_sheets;
use super::policy::{Conventions, EvalResult, TruncationPolicy};
use super::series::{lhs_series, p3_rhs_series};

/// Residual at which a winding must improve on the principal sheet to be flagged.
const BRANCH_GAIN: f64 = 1e6;

/// Pass thresholds on the relative residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Acceptance<T> {
    pub terminating: T,
    pub convergent: T,
    /// Asymptotic threshold is `max(asymptotic_floor, asymptotic_factor * err / |rhs|)`.
    pub asymptotic_factor: T,
    pub asymptotic_floor: T,
}

impl<T: Real> Default for Acceptance<T> {
    fn default() -> Self {
        Self {
            terminating: T::lit(1e-9),
            convergent: T::lit(1e-9),
            asymptotic_factor: T::lit(10.0),
            asymptotic_floor: T::lit(1e-8),
        }
    }
}

/// Outcome of comparing both sides of one case. Evaluation errors are folded in
/// rather than propagated, so a sweep never aborts on one bad draw.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport<T> {
    pub case: IdentityCase<T>,
    pub regime: Regime,
    pub lhs: Option<EvalResult<T>>,
    pub rhs: Option<Complex<T>>,
    pub abs_residual: T,
    pub rel_residual: T,
    pub tolerance: T,
    pub pass: bool,
    /// A non-principal sheet of some incomplete-gamma slot fits far better.
    pub branch_flag: bool,
    /// Sheet per gamma slot that fit best, when flagged.
    pub branch_sheets: Vec<i64>,
    pub error: Option<Error>,
}

impl<T: Real> ResidualReport<T> {
    fn failed(case: &IdentityCase<T>, err: Error) -> Self {
        Self {
            case: case.clone(),
            regime: case.regime(),
            lhs: None,
            rhs: None,
            abs_residual: T::nan(),
            rel_residual: T::nan(),
            tolerance: T::nan(),
            pass: false,
            branch_flag: false,
            branch_sheets: Vec::new(),
            error: Some(err),
        }
    }
}

fn rel<T: Real>(lhs: Complex<T>, rhs: Complex<T>) -> (T, T) {
    let abs = (lhs - rhs).norm();
    let scale = lhs.norm().max(rhs.norm()).max(T::lit(1e-30));
    (abs, abs / scale)
}

/// Evaluates both sides of a case and compares them.
pub fn residual<T: Real>(
    case: &IdentityCase<T>,
    policy: &TruncationPolicy<T>,
    conv: Conventions,
    acceptance: &Acceptance<T>,
) -> ResidualReport<T> {
    match residual_inner(case, policy, conv, acceptance) {
        Ok(r) => r,
        Err(e) => ResidualReport::failed(case, e),
    }
}

fn residual_inner<T: Real>(
    case: &IdentityCase<T>,
    policy: &TruncationPolicy<T>,
    conv: Conventions,
    acceptance: &Acceptance<T>,
) -> Result<ResidualReport<T>> {
    let lhs = lhs_series(case, policy, conv)?;
    let (rhs, rhs_err) = if case.id == IdentityId::P3 {
        let r = p3_rhs_series(case, policy)?;
        (r.value, r.abs_err_estimate)
    } else {
        (rhs_on_sheets(case, conv, &[])?, T::zero())
    };
    let (abs, relative) = rel(lhs.value, rhs);
    let regime = case.regime();
    let tolerance = match regime {
        Regime::Terminating => acceptance.terminating,
        Regime::Convergent => acceptance.convergent,
        Regime::Asymptotic => {
            let scaled =
                acceptance.asymptotic_factor * (lhs.abs_err_estimate + rhs_err) / rhs.norm().max(T::lit(1e-30));
            acceptance.asymptotic_floor.max(scaled)
        }
    };
    let pass = relative <= tolerance;
    let mut report = ResidualReport {
        case: case.clone(),
        regime,
        lhs: Some(lhs),
        rhs: Some(rhs),
        abs_residual: abs,
        rel_residual: relative,
        tolerance,
        pass,
        branch_flag: false,
        branch_sheets: Vec::new(),
        error: None,
    };
    if !pass {
        if let Some(best) = best_sheets(case, conv, lhs.value) {
            if best.1 * T::lit(BRANCH_GAIN) <= relative {
                report.branch_flag = true;
                report.branch_sheets = best.0;
            }
        }
    }
    Ok(report)
}

/// Sheet assignment in `{-1, 0, 1}` per gamma slot minimising the residual.
fn best_sheets<T: Real>(case: &IdentityCase<T>, conv: Conventions, lhs: Complex<T>) -> Option<(Vec<i64>, T)> {
    let slots = case.id.gamma_slots();
    if slots == 0 {
        return None;
    }
    let mut best: Option<(Vec<i64>, T)> = None;
    for code in 0..3usize.pow(slots as u32) {
        let sheets: Vec<i64> = (0..slots).map(|i| (code / 3usize.pow(i as u32) % 3) as i64 - 1).collect();
        if sheets.iter().all(|&m| m == 0) {
            continue;
        }
        let idx: Vec<BranchIndex> = sheets.iter().map(|&m| BranchIndex(m)).collect();
        let Ok(rhs) = rhs_on_sheets(case, conv, &idx) else { continue };
        let (_, r) = rel(lhs, rhs);
        if r.is_finite() && best.as_ref().is_none_or(|b| r < b.1) {
            best = Some((sheets, r));
        }
    }
    best
}
