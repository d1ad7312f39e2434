//! Commands behind the `hyperell` binary. Each returns the rendered output
//! and whether every check passed; errors map to exit status 2.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use crate::config::{ObjectKind, RunConfig};
use crate::error::{Error, Result};
use crate::extension::build_wprime;
use crate::involution::godeaux_assembly;
use crate::series::{read_numerator, GodeauxAnalysis, NumeratorReading};
use crate::suites::{run_suites, SuiteReport};
use crate::tower::{construct_curve, construct_e, construct_k3, project_t, VarietyPresentation};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Config(format!("unknown format `{s}`; expected text or json"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub output: String,
    pub passed: bool,
    /// Printed on stderr when the command fails.
    pub failure: Option<String>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Serialize)]
pub struct DumpEquation {
    pub index: usize,
    pub degree: Option<i64>,
    pub terms: usize,
    pub homogeneous: bool,
    pub pullback_zero: bool,
    pub text: String,
}

/// A constructed variety with the verdict on every equation.
#[derive(Debug, Clone, Serialize)]
pub struct PresentationDump {
    pub schema: u32,
    pub object: String,
    pub name: String,
    pub ambient: Vec<(String, u32)>,
    pub parametrization: Vec<(String, String)>,
    pub equations: Vec<DumpEquation>,
    pub metadata: Vec<(String, String)>,
    pub verified: bool,
}

impl PresentationDump {
    pub fn new(object: ObjectKind, v: &VarietyPresentation) -> Result<Self> {
        let report = v.verify()?;
        let names = v.ambient.names();
        Ok(Self {
            schema: SCHEMA,
            object: object.name().into(),
            name: v.name.clone(),
            ambient: v.weights(),
            parametrization: names
                .iter()
                .zip(v.parametrization.images())
                .map(|(n, p)| (n.clone(), p.to_string()))
                .collect(),
            equations: report
                .checks
                .iter()
                .map(|c| DumpEquation {
                    index: c.index + 1,
                    degree: c.degree,
                    terms: c.terms,
                    homogeneous: c.homogeneous,
                    pullback_zero: c.pullback_zero,
                    text: c.equation.clone(),
                })
                .collect(),
            metadata: v.metadata.clone(),
            verified: report.passed(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let ambient: Vec<String> = self.ambient.iter().map(|(n, w)| format!("{n}:{w}")).collect();
        let _ = writeln!(out, "{} ({})", self.name, self.object);
        let _ = writeln!(out, "ambient {}", ambient.join(" "));
        for (n, p) in &self.parametrization {
            let _ = writeln!(out, "  {n} -> {p}");
        }
        for e in &self.equations {
            let verdict = if e.pullback_zero && e.homogeneous { "ok" } else { "FAIL" };
            let degree = e.degree.map_or("-".to_string(), |d| d.to_string());
            let _ = writeln!(
                out,
                "[{verdict}] eq {} deg {degree} terms {}: {}",
                e.index, e.terms, e.text
            );
        }
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "{k}: {v}");
        }
        let _ = writeln!(
            out,
            "{} equations, {}",
            self.equations.len(),
            if self.verified { "all verified" } else { "verification FAILED" }
        );
        out
    }
}

pub fn build_object(cfg: &RunConfig, object: ObjectKind) -> Result<VarietyPresentation> {
    match object {
        ObjectKind::Curve => construct_curve(&cfg.curve_data()?),
        ObjectKind::E => construct_e(&cfg.curve_data()?),
        ObjectKind::K3 => construct_k3(&cfg.k3_data()?),
        ObjectKind::Tprime => project_t(&cfg.params()),
        ObjectKind::Wprime => build_wprime(&cfg.params()),
    }
}

pub fn construct(cfg: &RunConfig, object: Option<ObjectKind>, format: Format) -> Result<Outcome> {
    let object = object
        .or(cfg.object)
        .ok_or_else(|| Error::Config("construct needs an object: curve, E, K3, Tprime or Wprime".into()))?;
    let dump = PresentationDump::new(object, &build_object(cfg, object)?)?;
    let failure = (!dump.verified).then(|| {
        let bad = dump.equations.iter().find(|e| !(e.pullback_zero && e.homogeneous));
        bad.map_or_else(String::new, |e| format!("equation {} fails: {}", e.index, e.text))
    });
    Ok(Outcome {
        output: match format {
            Format::Text => dump.render_text(),
            Format::Json => to_json(&dump),
        },
        passed: dump.verified,
        failure,
    })
}

fn suite_lines(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        for c in &r.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{verdict}] {}: {} | {}", r.suite, c.id, c.identity);
            if let Some(d) = &c.detail {
                let _ = writeln!(out, "       {d}");
            }
        }
    }
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failed: usize = reports.iter().map(|r| r.checks.iter().filter(|c| !c.passed).count()).sum();
    let _ = writeln!(out, "{} checks, {} failed", total, failed);
    out
}

fn first_failure(reports: &[SuiteReport]) -> Option<String> {
    reports.iter().find_map(|r| {
        r.first_failure().map(|c| {
            let detail = c.detail.as_deref().unwrap_or("");
            format!("{} {} failed: {}\n{detail}", r.suite, c.id, c.identity)
        })
    })
}

pub fn verify(cfg: &RunConfig, format: Format) -> Result<Outcome> {
    let reports = run_suites(&cfg.suites, &cfg.suite_options()?);
    let passed = reports.iter().all(SuiteReport::passed);
    let output = match format {
        Format::Text => suite_lines(&reports),
        Format::Json => to_json(&json!({
            "schema": SCHEMA,
            "command": "verify",
            "seed": cfg.seed,
            "passed": passed,
            "suites": reports.iter().map(|r| json!({
                "suite": r.suite,
                "passed": r.passed(),
                "checks": r.checks,
            })).collect::<Vec<_>>(),
        })),
    };
    Ok(Outcome {
        output,
        passed,
        failure: first_failure(&reports),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct HilbertDump {
    pub schema: u32,
    pub truncation: usize,
    pub denominator: String,
    pub series: Vec<[i64; 2]>,
    pub numerator: Vec<[i64; 2]>,
    pub extended_denominator: String,
    pub extended_numerator: Vec<[i64; 2]>,
    pub reading: Vec<NumeratorReading>,
}

pub fn hilbert_dump(truncation: usize) -> Result<HilbertDump> {
    let a = GodeauxAnalysis::run(truncation)?;
    Ok(HilbertDump {
        schema: SCHEMA,
        truncation,
        denominator: a.denominator.to_string(),
        series: a.series.to_pairs(),
        numerator: a.numerator.to_pairs(),
        extended_denominator: a.extended_denominator.to_string(),
        extended_numerator: a.extended_numerator.to_pairs(),
        reading: read_numerator(&a.numerator, truncation),
    })
}

pub fn hilbert(cfg: &RunConfig, format: Format) -> Result<Outcome> {
    let a = GodeauxAnalysis::run(cfg.truncation)?;
    let output = match format {
        Format::Json => to_json(&hilbert_dump(cfg.truncation)?),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "P(t, e) = {}", a.series);
            let _ = writeln!(out, "denominator {}", a.denominator);
            let _ = writeln!(out, "numerator = {}", a.numerator);
            let _ = writeln!(out, "denominator {}", a.extended_denominator);
            let _ = writeln!(out, "numerator = {}", a.extended_numerator);
            for r in read_numerator(&a.numerator, cfg.truncation) {
                let _ = writeln!(
                    out,
                    "degree {}: {} ({} invariant, {} anti-invariant)",
                    r.degree, r.coefficient, r.invariant, r.anti_invariant
                );
            }
            out
        }
    };
    Ok(Outcome {
        output,
        passed: true,
        failure: None,
    })
}

/// Every suite, the series and the Godeaux sections in one document.
pub fn report(cfg: &RunConfig, format: Format) -> Result<Outcome> {
    let opts = cfg.suite_options()?;
    let reports = run_suites(&cfg.suites, &opts);
    let passed = reports.iter().all(SuiteReport::passed);
    let godeaux = godeaux_assembly(&cfg.godeaux, &cfg.alpha, &cfg.l)?;
    let output = match format {
        Format::Json => to_json(&json!({
            "schema": SCHEMA,
            "command": "report",
            "seed": cfg.seed,
            "passed": passed,
            "suites": reports.iter().map(|r| json!({
                "suite": r.suite,
                "passed": r.passed(),
                "checks": r.checks,
            })).collect::<Vec<_>>(),
            "hilbert": hilbert_dump(cfg.truncation)?,
            "godeaux": godeaux,
        })),
        Format::Text => {
            let mut out = suite_lines(&reports);
            out.push('\n');
            out.push_str(&hilbert(cfg, Format::Text)?.output);
            out.push('\n');
            for s in &godeaux.sections {
                let sign = if s.sign > 0 { '+' } else { '-' };
                let _ = writeln!(out, "section ({}{sign}): {}", s.degree, s.form);
            }
            for (k, e) in godeaux.wprime_equations.iter().enumerate() {
                let _ = writeln!(out, "W' equation {}: {e}", k + 1);
            }
            let f = &godeaux.free_scalars;
            let _ = writeln!(
                out,
                "free scalars (informational): {} in the sections, {} in W', {} total",
                f.sections, f.wprime, f.total
            );
            out
        }
    };
    Ok(Outcome {
        output,
        passed,
        failure: first_failure(&reports),
    })
}
