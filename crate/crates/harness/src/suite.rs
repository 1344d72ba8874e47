//! Batch verification runs.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::time::{Duration, Instant};

use dickson_core::identity::{residual, TruncationPolicy};
use rayon::prelude::*;

use crate::config::SuiteConfig;
use crate::error::HarnessError;
use crate::report::{write_records, Record, Status};
use crate::sampling::sample_case;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RunSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
    pub branch_flagged: usize,
    pub wall_time: Duration,
}

impl RunSummary {
    pub fn from_records(records: &[Record], wall_time: Duration) -> Self {
        let count = |s| records.iter().filter(|r| r.status == s).count();
        Self {
            total: records.len(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            errored: count(Status::Error),
            branch_flagged: records.iter().filter(|r| r.branch_flag).count(),
            wall_time,
        }
    }

    /// 0 when every case passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.failed + self.errored == 0 {
            0
        } else {
            1
        }
    }
}

/// Samples and evaluates every case. Records come back ordered by suite entry,
/// then `k` sweep position, then draw index, whatever the thread count.
pub fn evaluate_suite(cfg: &SuiteConfig) -> Vec<Record> {
    let mut jobs = Vec::new();
    for (stream, case_cfg) in cfg.cases.iter().enumerate() {
        for draw in sample_case(case_cfg, cfg.seed, stream as u64) {
            jobs.push((case_cfg, draw));
        }
    }
    jobs.par_iter()
        .map(|(case_cfg, draw)| match &draw.case {
            Ok(case) => {
                let policy = case_cfg.policy.unwrap_or_else(|| TruncationPolicy::default_for(case.regime()));
                let report = residual(case, &policy, case_cfg.conventions, &cfg.tolerances);
                Record::from_report(draw.k_index, draw.draw, &report, &policy, case_cfg.conventions)
            }
            Err(reason) => {
                let policy = case_cfg.policy.unwrap_or_else(|| TruncationPolicy::optimal(1));
                Record::sampling_failure(case_cfg.id.name(), draw.k_index, draw.draw, &policy, reason)
            }
        })
        .collect()
}

/// Runs a suite and writes its report to `cfg.output.path`.
pub fn run_suite(cfg: &SuiteConfig) -> Result<RunSummary, HarnessError> {
    let start = Instant::now();
    let records = evaluate_suite(cfg);
    let mut out = BufWriter::new(File::create(&cfg.output.path)?);
    write_records(&mut out, &records, cfg.output.format)?;
    out.flush()?;
    Ok(RunSummary::from_records(&records, start.elapsed()))
}
