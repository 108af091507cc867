use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::config::Suite;

/// Upper bounds pass when the residual is below the tolerance; lower bounds
/// certify that a quantity is genuinely nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Below,
    Above,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: Suite,
    pub id: String,
    pub anchor: String,
    pub bound: Bound,
    pub max_residual: String,
    pub tolerance: String,
    pub pass: bool,
    pub points: usize,
}

impl CheckRecord {
    pub fn residual(&self) -> f64 {
        self.max_residual.parse().unwrap_or(f64::NAN)
    }
}

/// Values reported alongside the checks but not gated.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InfoRecord {
    pub suite: Suite,
    pub id: String,
    pub note: String,
    pub value: String,
    pub points: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub seed: u64,
    pub points: usize,
    pub versions: Vec<(String, String)>,
    pub wall_time_s: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub manifold: String,
    pub suites: Vec<Suite>,
    pub status: Status,
    pub checks: Vec<CheckRecord>,
    pub info: Vec<InfoRecord>,
    pub environment: Environment,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Shortest round-trip decimal form; identical inputs give identical bytes.
pub fn decimal(x: f64) -> String {
    format!("{x:e}")
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn info(&self, id: &str) -> Option<&InfoRecord> {
        self.info.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with the wall-time field blanked, for determinism comparisons.
    pub fn to_json_timeless(&self) -> String {
        let mut r = self.clone();
        r.environment.wall_time_s = String::new();
        r.to_json()
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let op = if c.bound == Bound::Below { "<" } else { ">" };
            s += &format!(
                "{} {}/{} [{}] {} {} {} ({} pts)\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.suite,
                c.id,
                c.anchor,
                c.max_residual,
                op,
                c.tolerance,
                c.points
            );
        }
        for i in &self.info {
            s += &format!("INFO {}/{} [{}] {} ({} pts)\n", i.suite, i.id, i.note, i.value, i.points);
        }
        s += &format!(
            "{} {}: {} checks, {} failed, seed {}, {} s\n",
            if self.passed() { "PASS" } else { "FAIL" },
            self.manifold,
            self.checks.len(),
            self.checks.iter().filter(|c| !c.pass).count(),
            self.environment.seed,
            self.environment.wall_time_s
        );
        s
    }
}

pub fn emit_report(report: &SuiteReport, format: Format, sink: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            sink.write_all(report.to_json().as_bytes())?;
            sink.write_all(b"\n")?;
        }
        Format::Text => sink.write_all(report.to_text().as_bytes())?,
    }
    sink.flush()
}
