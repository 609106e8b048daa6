use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::config::SuiteConfig;

pub const REPORT_VERSION: u32 = 1;

/// Aggregate over all trials of one section.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectionReport {
    pub inequality: String,
    pub trials: usize,
    pub passes: usize,
    /// Largest finite tightness seen; `null` for sections without one.
    pub max_tightness: Option<f64>,
    /// Largest relative residual, for the identity sections.
    pub max_residual: Option<f64>,
    /// First 16 hex digits of the SHA-256 of the instance file that
    /// produced the maximum.
    pub argmax_digest: Option<String>,
    /// Lower bound the maximum tightness must reach (tightness scans).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub required_tightness: Option<f64>,
    /// `trial: message` for the first failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl SectionReport {
    pub fn new(inequality: &str) -> Self {
        SectionReport {
            inequality: inequality.to_string(),
            trials: 0,
            passes: 0,
            max_tightness: None,
            max_residual: None,
            argmax_digest: None,
            required_tightness: None,
            first_failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        let reached = match (self.required_tightness, self.max_tightness) {
            (Some(req), Some(t)) => t >= req,
            (Some(_), None) => self.trials == 0,
            (None, _) => true,
        };
        self.passes == self.trials && reached
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub version: u32,
    pub config: SuiteConfig,
    pub sections: Vec<SectionReport>,
    /// Seconds spent; shown in text output only so that JSON reports are
    /// byte-identical across runs.
    #[serde(skip)]
    pub wall_time_secs: f64,
}

impl SuiteReport {
    pub fn new(config: SuiteConfig) -> Self {
        SuiteReport {
            version: REPORT_VERSION,
            config,
            sections: Vec::new(),
            wall_time_secs: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.sections.iter().all(SectionReport::passed)
    }

    pub fn section(&self, id: &str) -> Option<&SectionReport> {
        self.sections.iter().find(|s| s.inequality == id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.6e}"))
}

pub fn emit_report(report: &SuiteReport, format: ReportFormat, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        ReportFormat::Text => {
            writeln!(
                out,
                "{:<10} {:>7} {:>7} {:>14} {:>14}  {:<16}  status",
                "inequality", "trials", "passes", "max_tightness", "max_residual", "argmax"
            )?;
            if report.sections.is_empty() {
                return Ok(());
            }
            for s in &report.sections {
                writeln!(
                    out,
                    "{:<10} {:>7} {:>7} {:>14} {:>14}  {:<16}  {}",
                    s.inequality,
                    s.trials,
                    s.passes,
                    fmt_opt(s.max_tightness),
                    fmt_opt(s.max_residual),
                    s.argmax_digest.as_deref().unwrap_or("-"),
                    if s.passed() { "ok" } else { "FAIL" }
                )?;
                if let Some(f) = &s.first_failure {
                    writeln!(out, "           first failure: {f}")?;
                }
            }
            writeln!(
                out,
                "seed {}  trials {}  wall time {:.2} s  overall {}",
                report.config.seed,
                report.config.trials,
                report.wall_time_secs,
                if report.passed() { "PASS" } else { "FAIL" }
            )
        }
    }
}
