//! Suite runner and report emission behind the `akv` binary.

pub mod config;
pub mod report;
pub mod suites;

use std::time::Instant;

use manifold_core::AmbientStructure;

pub use config::{default_tolerance, parse_suites, parse_tolerance, ConfigError, Suite, SuiteConfig, TOLERANCES};
pub use report::{decimal, emit_report, Bound, CheckRecord, Environment, Format, InfoRecord, Status, SuiteReport};
use suites::Kind;

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport, ConfigError> {
    config.validate()?;
    let t0 = Instant::now();
    let amb = AmbientStructure::builtin(&config.manifold).map_err(|_| ConfigError::UnknownManifold(config.manifold.clone()))?;
    let mut checks = Vec::new();
    let mut info = Vec::new();
    for &suite in &config.suites {
        for o in suites::run(suite, &amb, config.points, config.seed) {
            match o.kind {
                Kind::Info => info.push(InfoRecord { suite, id: o.id, note: o.anchor, value: decimal(o.value), points: o.points }),
                Kind::Below => {
                    let tol = config.tolerance(suite, &o.id);
                    checks.push(CheckRecord {
                        suite,
                        pass: o.value < tol,
                        id: o.id,
                        anchor: o.anchor,
                        bound: Bound::Below,
                        max_residual: decimal(o.value),
                        tolerance: decimal(tol),
                        points: o.points,
                    });
                }
                Kind::Above(t) => checks.push(CheckRecord {
                    suite,
                    pass: o.value > t,
                    id: o.id,
                    anchor: o.anchor,
                    bound: Bound::Above,
                    max_residual: decimal(o.value),
                    tolerance: decimal(t),
                    points: o.points,
                }),
            }
        }
    }
    let status = if checks.iter().all(|c| c.pass) { Status::Pass } else { Status::Fail };
    Ok(SuiteReport {
        manifold: config.manifold.clone(),
        suites: config.suites.clone(),
        status,
        checks,
        info,
        environment: Environment {
            seed: config.seed,
            points: config.points,
            versions: vec![("akv".into(), env!("CARGO_PKG_VERSION").into()), ("report-schema".into(), "1".into())],
            wall_time_s: format!("{:.3}", t0.elapsed().as_secs_f64()),
        },
    })
}
