//! Charted local manifold models with evaluable tensor fields and an exact
//! dual-number differentiation kernel.

pub mod ambient;
pub mod expr;
pub mod linalg;
pub mod manifold;
pub mod sample;
pub mod scalar;

pub use ambient::{build_compatible_triple, AmbientStructure, SurfaceStructure};
pub use linalg::Mat;
pub use manifold::{eval_tensor, partial_derivative, ChartedManifold, ManifoldError, TensorFieldSpec};
pub use scalar::{Dual, Scalar};

pub type Real = f64;
/// First-order dual over f64.
pub type D1 = Dual<f64>;
/// Second-order nested dual.
pub type D2 = Dual<Dual<f64>>;
/// Third-order nested dual.
pub type D3 = Dual<Dual<Dual<f64>>>;
pub type Complex64 = num_complex::Complex<f64>;
