//! Seeded verification suites. Each suite returns a [`Report`] whose checks
//! carry their own pinned tolerances; output depends only on the config.

mod graded_core;
mod golden;
mod group;
mod norms;
mod tensor;

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::report::{PropertyCheck, Report};
use crate::tensor::TensorConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Core,
    Norms,
    Tensor,
    Group,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 4] = [Suite::Core, Suite::Norms, Suite::Tensor, Suite::Group];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Norms => "norms",
            Suite::Tensor => "tensor",
            Suite::Group => "group",
            Suite::All => "all",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        [Suite::Core, Suite::Norms, Suite::Tensor, Suite::Group, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unknown { what: "suite", value: s.into() })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub seed: u64,
    /// Base sample count; expensive properties use a fixed fraction of it.
    pub samples: usize,
    /// Tolerance of the boolean predicates (hermiticity, PSD tests).
    pub tol: f64,
    pub budgets: TensorConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { suite: Suite::All, seed: 0, samples: 1000, tol: 1e-9, budgets: TensorConfig::default() }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidConfig("samples must be at least 1".into()));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidConfig(format!("tol must be positive, got {}", self.tol)));
        }
        self.budgets.validate()
    }

    /// `samples / div`, at least one.
    fn share(&self, div: usize) -> usize {
        (self.samples / div).max(1)
    }

    /// Seed for one property, so adding a property never shifts the others.
    fn stream(&self, tag: u64) -> u64 {
        self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ tag.wrapping_mul(0xc2b2_ae3d_27d4_eb4f)
    }
}

/// Result of one suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub report: Report,
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let report = match suite {
        Suite::Core => graded_core::run(cfg)?,
        Suite::Norms => norms::run(cfg)?,
        Suite::Tensor => tensor::run(cfg)?,
        Suite::Group => group::run(cfg)?,
        Suite::All => return Err(Error::InvalidConfig("run the parts of \"all\" one at a time".into())),
    };
    Ok(SuiteReport { suite, report })
}

/// Every suite named by `cfg.suite`, in a fixed order.
pub fn run(cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    let parts: Vec<Suite> = match cfg.suite {
        Suite::All => Suite::PARTS.to_vec(),
        s => vec![s],
    };
    parts.into_iter().map(|s| run_suite(s, cfg)).collect()
}

fn fmt_margin(m: f64) -> String {
    if m.is_infinite() {
        if m > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{m:.3e}")
    }
}

pub fn render_check(suite: Suite, c: &PropertyCheck) -> String {
    let mut line = format!(
        "[{}] {} {} samples={} worst_margin={}",
        suite.name(),
        if c.passed { "PASS" } else { "FAIL" },
        c.name,
        c.samples,
        fmt_margin(c.worst_margin),
    );
    if let Some(i) = c.worst_index {
        let _ = write!(line, " worst_index={i}");
    }
    if let Some(n) = &c.note {
        let _ = write!(line, " ({n})");
    }
    line
}

/// Plain-text rendering: one line per check, then a summary per suite and overall.
pub fn render(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        for c in &r.report.checks {
            out.push_str(&render_check(r.suite, c));
            out.push('\n');
        }
        let passed = r.report.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(out, "suite {}: {}/{} passed", r.suite.name(), passed, r.report.checks.len());
    }
    let ok = reports.iter().all(|r| r.report.passed());
    let _ = writeln!(out, "overall: {}", if ok { "PASS" } else { "FAIL" });
    out
}

/// Accumulates named boolean sub-cases into one check; the note names the first failure.
pub(crate) struct Cases {
    check: PropertyCheck,
    index: usize,
}

impl Cases {
    pub(crate) fn new(name: &str) -> Self {
        Self { check: PropertyCheck::new(name), index: 0 }
    }

    /// Records `ok` under `label`.
    pub(crate) fn case(&mut self, label: &str, ok: bool) {
        if ok {
            self.check.record(self.index, 1.0);
        } else {
            self.check.fail(self.index, label.to_string());
        }
        self.index += 1;
    }

    /// Records `|got − want| ≤ tol` under `label`.
    pub(crate) fn close(&mut self, label: &str, got: f64, want: f64, tol: f64) {
        let margin = tol - (got - want).abs();
        if margin >= 0.0 {
            self.check.record(self.index, margin);
        } else {
            self.check.fail(self.index, format!("{label}: got {got:.12}, want {want:.12}"));
        }
        self.index += 1;
    }

    /// Records a fallible sub-case, failing it on error.
    pub(crate) fn attempt(&mut self, label: &str, f: impl FnOnce() -> Result<bool>) {
        match f() {
            Ok(ok) => self.case(label, ok),
            Err(e) => {
                self.check.fail(self.index, format!("{label}: {e}"));
                self.index += 1;
            }
        }
    }

    pub(crate) fn finish(self) -> PropertyCheck {
        self.check
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::Core, Suite::Norms, Suite::Tensor, Suite::Group, Suite::All] {
            assert_eq!(Suite::parse(s.name()).unwrap(), s);
        }
        assert!(Suite::parse("everything").is_err());
    }

    #[test]
    fn render_is_line_per_check() {
        let mut c = PropertyCheck::new("p");
        c.record(0, 0.25);
        let rep = SuiteReport { suite: Suite::Core, report: Report { checks: vec![c] } };
        let text = render(&[rep]);
        assert_eq!(text, "[core] PASS p samples=1 worst_margin=2.500e-1 worst_index=0\nsuite core: 1/1 passed\noverall: PASS\n");
    }
}
