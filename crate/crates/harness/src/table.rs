//! Convergence tables: partial sums at selected truncation orders.

use dickson_core::identity::{outer_terms, quotient_prefactor, quotient_terms, Conventions, IdentityCase, IdentityId};
use dickson_core::summation::CompensatedSum;
use dickson_core::{Complex64, Error};

use crate::error::HarnessError;
use crate::parse::fmt_real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub n: usize,
    pub value: Complex64,
    /// `|value - previous value|`; absent on the first row.
    pub delta: Option<f64>,
    /// Smallest outer-term magnitude among `1..=n` (for quotients, the smaller
    /// relative term of the two series, scaled by the quotient).
    pub smallest_term: f64,
}

/// Partial sums of the left-hand side at each requested `N` (ascending order not required).
pub fn convergence_table(
    case: &IdentityCase<f64>,
    n_values: &[usize],
    conv: Conventions,
) -> Result<Vec<TableRow>, HarnessError> {
    let n_max = n_values.iter().copied().max().ok_or_else(|| HarnessError::Usage("empty N list".into()))?;
    let quotient = matches!(case.id, IdentityId::GQ | IdentityId::EX1);
    let (num, den) =
        if quotient { quotient_terms(case, n_max)? } else { (outer_terms(case, n_max, conv)?, Vec::new()) };
    let available = if quotient { num.len().min(den.len()) } else { num.len() };
    if available <= n_max {
        return Err(Error::Divergence { after: available.saturating_sub(1) }.into());
    }
    let scale = if quotient { quotient_prefactor(case)? } else { Complex64::new(1.0, 0.0) };
    let mut n_sorted = n_values.to_vec();
    n_sorted.sort_unstable();
    n_sorted.dedup();
    let mut rows = Vec::with_capacity(n_sorted.len());
    let mut prev: Option<Complex64> = None;
    for &n in &n_sorted {
        let ns: Complex64 = num[..=n].iter().copied().collect::<CompensatedSum<f64>>().value();
        let (value, smallest) = if quotient {
            let ds: Complex64 = den[..=n].iter().copied().collect::<CompensatedSum<f64>>().value();
            if ds.norm() == 0.0 {
                return Err(Error::DivisionByZero("quotient denominator series vanishes".into()).into());
            }
            let q = scale * ns / ds;
            let smallest = (1..=n)
                .map(|i| q.norm() * (num[i].norm() / ns.norm()).min(den[i].norm() / ds.norm()))
                .fold(f64::INFINITY, f64::min);
            (q, smallest)
        } else {
            let v = if case.id == IdentityId::EX2 { ns.exp() } else { ns };
            let smallest = num[1..=n].iter().map(|t| t.norm()).fold(f64::INFINITY, f64::min);
            (v, smallest)
        };
        rows.push(TableRow { n, value, delta: prev.map(|p| (value - p).norm()), smallest_term: smallest });
        prev = Some(value);
    }
    Ok(rows)
}

/// CSV rendering: `N,re,im,delta,smallest_term`.
pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("N,re,im,delta,smallest_term\n");
    for r in rows {
        let delta = r.delta.map(fmt_real).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            fmt_real(r.value.re),
            fmt_real(r.value.im),
            delta,
            fmt_real(r.smallest_term)
        ));
    }
    out
}
