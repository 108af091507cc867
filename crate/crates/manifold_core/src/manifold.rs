//! Charted manifolds loaded from TOML text; three built-ins compiled in.

use crate::expr::{parse, Expr, ParseError};
use crate::linalg::Mat;
use crate::scalar::Scalar;
use serde::Deserialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ManifoldError {
    #[error("config: {0}")]
    Config(String),
    #[error("field '{field}': {err}")]
    Expr { field: String, err: ParseError },
    #[error("unknown tensor field '{0}'")]
    UnknownField(String),
    #[error("point outside the sample domain in coordinate {0}")]
    OutsideDomain(usize),
    #[error("unknown manifold '{0}'")]
    UnknownManifold(String),
    #[error("derivative order {0} unsupported (max 2)")]
    Order(usize),
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

#[derive(Clone, Debug)]
pub struct TensorFieldSpec {
    /// (contravariant, covariant)
    pub valence: (usize, usize),
    pub components: Vec<Expr>,
    pub sources: Vec<String>,
}

impl TensorFieldSpec {
    pub fn rank(&self) -> usize {
        self.valence.0 + self.valence.1
    }
}

#[derive(Clone, Debug)]
pub struct ChartedManifold {
    pub name: String,
    pub dim: usize,
    pub coordinate_names: Vec<String>,
    pub sample_domain: Vec<(f64, f64)>,
    pub tensor_fields: BTreeMap<String, TensorFieldSpec>,
    pub source: String,
}

#[derive(Deserialize)]
struct RawConfig {
    name: String,
    dim: usize,
    coordinates: Vec<String>,
    domain: Vec<[f64; 2]>,
    fields: BTreeMap<String, Vec<Vec<String>>>,
}

pub const BUILTIN_NAMES: [&str; 3] = ["flat_kahler", "sphere", "nilmanifold"];

fn builtin_source(name: &str) -> Option<&'static str> {
    match name {
        "flat_kahler" => Some(include_str!("../builtin/flat_kahler.toml")),
        "sphere" => Some(include_str!("../builtin/sphere.toml")),
        "nilmanifold" => Some(include_str!("../builtin/nilmanifold.toml")),
        _ => None,
    }
}

fn valence_of(label: &str) -> (usize, usize) {
    match label {
        "J" => (1, 1),
        "ginv" => (2, 0),
        _ => (0, 2),
    }
}

impl ChartedManifold {
    pub fn builtin(name: &str) -> Result<Self, ManifoldError> {
        let src = builtin_source(name).ok_or_else(|| ManifoldError::UnknownManifold(name.into()))?;
        Self::from_toml(src)
    }

    pub fn from_toml(src: &str) -> Result<Self, ManifoldError> {
        let raw: RawConfig = toml::from_str(src).map_err(|e| ManifoldError::Config(e.to_string()))?;
        if raw.dim < 2 || raw.dim > 8 {
            return Err(ManifoldError::Config(format!("dim {} outside 2..=8", raw.dim)));
        }
        if raw.coordinates.len() != raw.dim || raw.domain.len() != raw.dim {
            return Err(ManifoldError::Config("coordinate/domain count differs from dim".into()));
        }
        if raw.domain.iter().any(|d| !(d[0] < d[1])) {
            return Err(ManifoldError::Config("empty domain interval".into()));
        }
        let mut tensor_fields = BTreeMap::new();
        for (label, rows) in raw.fields {
            if rows.len() != raw.dim || rows.iter().any(|r| r.len() != raw.dim) {
                return Err(ManifoldError::Config(format!("field '{label}' must be {0}x{0}", raw.dim)));
            }
            let sources: Vec<String> = rows.into_iter().flatten().collect();
            let components = sources
                .iter()
                .map(|s| parse(s, &raw.coordinates))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|err| ManifoldError::Expr { field: label.clone(), err })?;
            tensor_fields.insert(label.clone(), TensorFieldSpec { valence: valence_of(&label), components, sources });
        }
        for req in ["g", "omega"] {
            if !tensor_fields.contains_key(req) {
                return Err(ManifoldError::Config(format!("missing field '{req}'")));
            }
        }
        if raw.dim % 2 != 0 {
            return Err(ManifoldError::Config("ambient dimension must be even".into()));
        }
        Ok(ChartedManifold {
            name: raw.name,
            dim: raw.dim,
            coordinate_names: raw.coordinates,
            sample_domain: raw.domain.into_iter().map(|d| (d[0], d[1])).collect(),
            tensor_fields,
            source: src.to_string(),
        })
    }

    pub fn field(&self, label: &str) -> Result<&TensorFieldSpec, ManifoldError> {
        self.tensor_fields.get(label).ok_or_else(|| ManifoldError::UnknownField(label.into()))
    }

    pub fn check_point(&self, point: &[f64]) -> Result<(), ManifoldError> {
        for (k, (&x, &(lo, hi))) in point.iter().zip(&self.sample_domain).enumerate() {
            if !(lo..=hi).contains(&x) {
                return Err(ManifoldError::OutsideDomain(k));
            }
        }
        Ok(())
    }

    /// Components of a rank-2 field as a matrix, generic in the scalar.
    pub fn matrix<S: Scalar>(&self, label: &str, u: &[S]) -> Result<Mat<S>, ManifoldError> {
        let f = self.field(label)?;
        let n = self.dim;
        Ok(Mat::from_fn(n, n, |i, j| f.components[i * n + j].eval(u)))
    }
}

/// Evaluate a registered field in the coordinate basis.
pub fn eval_tensor(m: &ChartedManifold, label: &str, point: &[f64]) -> Result<Vec<f64>, ManifoldError> {
    m.check_point(point)?;
    let f = m.field(label)?;
    Ok(f.components.iter().map(|e| e.eval(point)).collect())
}

/// Exact partial derivative of every component along one coordinate.
pub fn partial_derivative(
    m: &ChartedManifold,
    label: &str,
    point: &[f64],
    direction: usize,
    order: usize,
) -> Result<Vec<f64>, ManifoldError> {
    use crate::scalar::{seed, Dual};
    m.check_point(point)?;
    let f = m.field(label)?;
    match order {
        1 => {
            let u = seed(point, direction);
            Ok(f.components.iter().map(|e| e.eval(&u).d).collect())
        }
        2 => {
            let inner = seed(point, direction);
            let u: Vec<Dual<Dual<f64>>> = inner
                .iter()
                .enumerate()
                .map(|(k, &x)| Dual::new(x, if k == direction { Dual::constant(1.0) } else { Dual::constant(0.0) }))
                .collect();
            Ok(f.components.iter().map(|e| e.eval(&u).d.d).collect())
        }
        o => Err(ManifoldError::Order(o)),
    }
}
