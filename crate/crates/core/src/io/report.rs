use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use crate::verdict::{Certificate, CheckResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    /// One `key=value` record per line.
    Structured,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "structured" => Ok(Format::Structured),
            _ => Err(format!("unknown format `{s}`; expected text or structured")),
        }
    }
}

/// Outcome of one job. Everything except `timing` is a function of the input and seed.
#[derive(Clone, Debug)]
pub struct Report {
    pub job: String,
    pub summary: Vec<(String, String)>,
    pub checks: Vec<CheckResult>,
    pub certificate: Certificate,
    pub timing: Option<Duration>,
}

impl Report {
    pub fn new(job: impl Into<String>) -> Self {
        Report {
            job: job.into(),
            summary: Vec::new(),
            checks: Vec::new(),
            certificate: Certificate::WindowedCertified,
            timing: None,
        }
    }

    /// Empty values are written as `-`.
    pub fn note(&mut self, key: impl Into<String>, value: impl ToString) {
        let value = value.to_string();
        let value = if value.is_empty() { "-".to_string() } else { value };
        self.summary.push((key.into(), value));
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    /// Recomputes the certificate from the checks.
    pub fn finish(mut self) -> Self {
        self.certificate = Certificate::from_checks(&self.checks);
        self
    }

    pub fn exit_code(&self) -> i32 {
        self.certificate.exit_code()
    }
}

/// Newlines inside values would break the record format.
fn flat(s: &str) -> String {
    s.replace('\n', " ")
}

pub fn emit(report: &Report, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            let _ = writeln!(out, "job: {}", report.job);
            for (k, v) in &report.summary {
                let _ = writeln!(out, "  {k}: {v}");
            }
            for c in &report.checks {
                let _ = writeln!(out, "[{}] {}: {}", c.outcome, c.name, c.detail);
                if let Some(w) = &c.witness_text {
                    let _ = writeln!(out, "    witness: {w}");
                }
            }
            let _ = writeln!(out, "certificate: {}", report.certificate);
            if let Some(t) = report.timing {
                let _ = writeln!(out, "time: {:.3} s", t.as_secs_f64());
            }
        }
        Format::Structured => {
            let _ = writeln!(out, "job={}", report.job);
            for (k, v) in &report.summary {
                let _ = writeln!(out, "summary.{k}={}", flat(v));
            }
            for (n, c) in report.checks.iter().enumerate() {
                let _ = writeln!(out, "check.{n}.name={}", c.name);
                let _ = writeln!(out, "check.{n}.outcome={}", c.outcome);
                let _ = writeln!(out, "check.{n}.detail={}", flat(&c.detail));
                if let Some(w) = &c.witness_text {
                    let _ = writeln!(out, "check.{n}.witness={}", flat(w));
                }
            }
            let _ = writeln!(out, "certificate={}", report.certificate);
            let _ = writeln!(out, "exit={}", report.exit_code());
            if let Some(t) = report.timing {
                let _ = writeln!(out, "time_ms={}", t.as_millis());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_the_certificate() {
        let mut r = Report::new("demo");
        r.push(CheckResult::pass("a", "ok"));
        assert_eq!(r.clone().finish().exit_code(), 0);
        r.push(CheckResult::new("b", crate::verdict::Outcome::Inconclusive, "window"));
        assert_eq!(r.clone().finish().exit_code(), 2);
        r.push(CheckResult::fail("c", "bad").with_note("x · y = z"));
        let r = r.finish();
        assert_eq!(r.exit_code(), 1);
        let text = emit(&r, Format::Structured);
        assert!(text.contains("check.2.witness=x · y = z\n"));
        assert!(text.ends_with("certificate=refuted\nexit=1\n"));
    }
}
