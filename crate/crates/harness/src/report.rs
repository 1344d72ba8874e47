//! Per-case report records and their JSON Lines / CSV encodings.

use std::collections::BTreeMap;
use std::io::Write;

use dickson_core::identity::{Conventions, ResidualReport, TruncationPolicy};
use dickson_core::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::OutputFormat;
use crate::error::HarnessError;

/// Complex number as `{"re": .., "im": ..}`; serde_json writes shortest round-trip digits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexRecord {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexRecord {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexRecord> for Complex64 {
    fn from(c: ComplexRecord) -> Self {
        Complex64::new(c.re, c.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolicyRecord {
    pub mode: String,
    pub max_n: usize,
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// One line of the report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub case_id: String,
    pub k_index: usize,
    pub draw: usize,
    pub params: BTreeMap<String, ComplexRecord>,
    pub regime: String,
    pub policy: PolicyRecord,
    pub t7_exponent: String,
    pub t8_sign: String,
    pub status: Status,
    pub lhs: Option<ComplexRecord>,
    pub rhs: Option<ComplexRecord>,
    pub abs_err_estimate: Option<f64>,
    pub terms_used: Option<usize>,
    pub terminated: Option<bool>,
    pub smallest_term: Option<f64>,
    pub abs_residual: Option<f64>,
    pub rel_residual: Option<f64>,
    pub tolerance: Option<f64>,
    pub branch_flag: bool,
    pub branch_sheets: Vec<i64>,
    pub error: Option<String>,
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

impl Record {
    pub fn from_report(
        k_index: usize,
        draw: usize,
        report: &ResidualReport<f64>,
        policy: &TruncationPolicy<f64>,
        conv: Conventions,
    ) -> Self {
        let status = match (&report.error, report.pass) {
            (Some(_), _) => Status::Error,
            (None, true) => Status::Pass,
            (None, false) => Status::Fail,
        };
        let lhs = report.lhs.as_ref();
        Self {
            case_id: report.case.id.name().to_string(),
            k_index,
            draw,
            params: report.case.params.iter().map(|(s, v)| (s.name().to_string(), (*v).into())).collect(),
            regime: report.regime.name().to_string(),
            policy: PolicyRecord { mode: policy.mode.name().to_string(), max_n: policy.max_n, tol: policy.tol },
            t7_exponent: conv.t7_exponent.name().to_string(),
            t8_sign: conv.t8_sign.name().to_string(),
            status,
            lhs: lhs.map(|l| l.value.into()),
            rhs: report.rhs.map(Into::into),
            abs_err_estimate: lhs.and_then(|l| finite(l.abs_err_estimate)),
            terms_used: lhs.map(|l| l.terms_used),
            terminated: lhs.map(|l| l.terminated),
            smallest_term: lhs.and_then(|l| finite(l.smallest_term)),
            abs_residual: finite(report.abs_residual),
            rel_residual: finite(report.rel_residual),
            tolerance: finite(report.tolerance),
            branch_flag: report.branch_flag,
            branch_sheets: report.branch_sheets.clone(),
            error: report.error.as_ref().map(ToString::to_string),
        }
    }

    /// A record for a draw that never reached the engine.
    pub fn sampling_failure(
        case_id: &str,
        k_index: usize,
        draw: usize,
        policy: &TruncationPolicy<f64>,
        reason: &str,
    ) -> Self {
        Self {
            case_id: case_id.to_string(),
            k_index,
            draw,
            params: BTreeMap::new(),
            regime: String::new(),
            policy: PolicyRecord { mode: policy.mode.name().to_string(), max_n: policy.max_n, tol: policy.tol },
            t7_exponent: String::new(),
            t8_sign: String::new(),
            status: Status::Error,
            lhs: None,
            rhs: None,
            abs_err_estimate: None,
            terms_used: None,
            terminated: None,
            smallest_term: None,
            abs_residual: None,
            rel_residual: None,
            tolerance: None,
            branch_flag: false,
            branch_sheets: Vec::new(),
            error: Some(format!("sampling: {reason}")),
        }
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

const CSV_HEADER: &str = "case_id,k_index,draw,params,regime,policy,status,lhs_re,lhs_im,rhs_re,rhs_im,abs_err_estimate,terms_used,abs_residual,rel_residual,tolerance,branch_flag,error";

fn csv_row(r: &Record) -> String {
    let params = r.params.iter().map(|(k, v)| format!("{k}={}{:+}i", v.re, v.im)).collect::<Vec<_>>().join(";");
    let part = |c: Option<ComplexRecord>, re: bool| c.map(|c| if re { c.re } else { c.im });
    let status = match r.status {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Error => "error",
    };
    [
        quote(&r.case_id),
        r.k_index.to_string(),
        r.draw.to_string(),
        quote(&params),
        r.regime.clone(),
        r.policy.mode.clone(),
        status.to_string(),
        opt(part(r.lhs, true)),
        opt(part(r.lhs, false)),
        opt(part(r.rhs, true)),
        opt(part(r.rhs, false)),
        opt(r.abs_err_estimate),
        r.terms_used.map(|n| n.to_string()).unwrap_or_default(),
        opt(r.abs_residual),
        opt(r.rel_residual),
        opt(r.tolerance),
        r.branch_flag.to_string(),
        quote(r.error.as_deref().unwrap_or("")),
    ]
    .join(",")
}

/// Encodes records in the requested format.
pub fn write_records(out: &mut impl Write, records: &[Record], format: OutputFormat) -> Result<(), HarnessError> {
    match format {
        OutputFormat::Json => {
            for r in records {
                let line = serde_json::to_string(r).map_err(|e| HarnessError::Encode(e.to_string()))?;
                writeln!(out, "{line}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in records {
                writeln!(out, "{}", csv_row(r))?;
            }
        }
    }
    Ok(())
}

/// Parses a JSON Lines report back into records.
pub fn read_jsonl(text: &str) -> Result<Vec<Record>, HarnessError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| HarnessError::Encode(e.to_string())))
        .collect()
}
