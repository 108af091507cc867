use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use manifold_core::manifold::BUILTIN_NAMES;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ConfigError {
    #[error("unknown manifold '{0}' (known: {})", BUILTIN_NAMES.join(", "))]
    UnknownManifold(String),
    #[error("unknown suite '{0}' (known: {})", Suite::ALL.map(|s| s.name()).join(", "))]
    UnknownSuite(String),
    #[error("points must be at least 1")]
    NoPoints,
    #[error("bad tolerance '{0}', expected <suite>=<value>")]
    BadTolerance(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Frames,
    Appendix2,
    Darboux,
    Currents,
    CurrentsPlus,
    Brst,
    Witten,
    Nijenhuis,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Frames,
        Suite::Appendix2,
        Suite::Darboux,
        Suite::Currents,
        Suite::CurrentsPlus,
        Suite::Brst,
        Suite::Witten,
        Suite::Nijenhuis,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Frames => "frames",
            Suite::Appendix2 => "appendix2",
            Suite::Darboux => "darboux",
            Suite::Currents => "currents",
            Suite::CurrentsPlus => "currents_plus",
            Suite::Brst => "brst",
            Suite::Witten => "witten",
            Suite::Nijenhuis => "nijenhuis",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

/// Default tolerances. The first row for a suite is its base tolerance; later
/// rows name checks that carry their own bound. A CLI override for a suite
/// replaces every upper-bound tolerance in it.
///
/// | suite         | check        | tolerance |
/// |---------------|--------------|-----------|
/// | frames        | *            | 1e-10     |
/// | frames        | CSF, CSF-cot | 1e-8      |
/// | appendix2     | *            | 1e-7      |
/// | appendix2     | A-DJ         | 1e-8      |
/// | darboux       | *            | 1e-7      |
/// | currents      | *            | 1e-7      |
/// | currents      | T21-sync     | 1e-8      |
/// | currents      | T21-abelian  | 1e-14     |
/// | currents      | P3-mixed     | 1e-10     |
/// | currents      | OmegaV       | 1e-10     |
/// | currents_plus | *            | 1e-7      |
/// | currents_plus | OmegaV-plus  | 1e-10     |
/// | brst          | *            | 1e-7      |
/// | brst          | nil-*        | 1e-6      |
/// | brst          | Ppp-*        | 1e-10     |
/// | witten        | *            | 1e-6      |
/// | nijenhuis     | *            | 1e-10     |
/// | nijenhuis     | N-oracle     | 1e-12     |
pub const TOLERANCES: &[(Suite, &str, f64)] = &[
    (Suite::Frames, "*", 1e-10),
    (Suite::Frames, "CSF", 1e-8),
    (Suite::Frames, "CSF-cot", 1e-8),
    (Suite::Appendix2, "*", 1e-7),
    (Suite::Appendix2, "A-DJ", 1e-8),
    (Suite::Darboux, "*", 1e-7),
    (Suite::Currents, "*", 1e-7),
    (Suite::Currents, "T21-sync", 1e-8),
    (Suite::Currents, "T21-abelian", 1e-14),
    (Suite::Currents, "P3-mixed", 1e-10),
    (Suite::Currents, "OmegaV", 1e-10),
    (Suite::CurrentsPlus, "*", 1e-7),
    (Suite::CurrentsPlus, "OmegaV-plus", 1e-10),
    (Suite::Brst, "*", 1e-7),
    (Suite::Brst, "nil-*", 1e-6),
    (Suite::Brst, "Ppp-*", 1e-10),
    (Suite::Witten, "*", 1e-6),
    (Suite::Nijenhuis, "*", 1e-10),
    (Suite::Nijenhuis, "N-oracle", 1e-12),
];

fn matches(pat: &str, id: &str) -> bool {
    match pat.strip_suffix('*') {
        Some(p) => id.starts_with(p),
        None => pat == id,
    }
}

/// Most specific row wins: exact id, then the longest prefix pattern.
pub fn default_tolerance(suite: Suite, id: &str) -> f64 {
    TOLERANCES
        .iter()
        .filter(|(s, p, _)| *s == suite && matches(p, id))
        .max_by_key(|(_, p, _)| if p.ends_with('*') { p.len() } else { usize::MAX })
        .map(|r| r.2)
        .expect("every suite has a base row")
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub manifold: String,
    pub suites: Vec<Suite>,
    pub points: usize,
    pub seed: u64,
    pub tolerance_overrides: BTreeMap<Suite, f64>,
}

impl SuiteConfig {
    pub fn new(manifold: &str, suites: &[Suite]) -> Self {
        SuiteConfig { manifold: manifold.to_string(), suites: suites.to_vec(), points: 100, seed: 1, tolerance_overrides: BTreeMap::new() }
    }

    pub fn points(mut self, n: usize) -> Self {
        self.points = n;
        self
    }

    pub fn seed(mut self, s: u64) -> Self {
        self.seed = s;
        self
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !BUILTIN_NAMES.contains(&self.manifold.as_str()) {
            return Err(ConfigError::UnknownManifold(self.manifold.clone()));
        }
        if self.points == 0 {
            return Err(ConfigError::NoPoints);
        }
        Ok(())
    }

    pub fn tolerance(&self, suite: Suite, id: &str) -> f64 {
        self.tolerance_overrides.get(&suite).copied().unwrap_or_else(|| default_tolerance(suite, id))
    }
}

/// Comma-separated suite names; "all" expands to every suite. Duplicates
/// collapse, order follows the input.
pub fn parse_suites(list: &str) -> Result<Vec<Suite>, ConfigError> {
    let mut out: Vec<Suite> = Vec::new();
    for s in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let add: Vec<Suite> = if s == "all" { Suite::ALL.to_vec() } else { vec![s.parse()?] };
        for x in add {
            if !out.contains(&x) {
                out.push(x);
            }
        }
    }
    Ok(out)
}

pub fn parse_tolerance(s: &str) -> Result<(Suite, f64), ConfigError> {
    let bad = || ConfigError::BadTolerance(s.to_string());
    let (k, v) = s.split_once('=').ok_or_else(bad)?;
    let suite: Suite = k.trim().parse()?;
    let v: f64 = v.trim().parse().map_err(|_| bad())?;
    if !(v.is_finite() && v > 0.0) {
        return Err(bad());
    }
    Ok((suite, v))
}
