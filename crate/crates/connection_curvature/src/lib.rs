//! Levi-Civita connection, curvature, Cartan structure functions, Darboux
//! frames and the almost-Kähler identity suite.

pub mod appendix;
pub mod connection;
pub mod darboux;
pub mod tensor;

pub use appendix::{a13_rhs, appendix2_identity_suite, cartan_total_antisymmetry, ricci_identity_residual, Appendix2Report, QuasiC, WittenC};
pub use connection::{
    anholonomic, cartan_from_brackets, cartan_from_gamma, christoffel, gamma_matrices, ricci, riemann, riemann_holonomic,
    riemann_via_holonomic,
};
pub use darboux::{darboux_frame, darboux_identity_check, synchronous_frame, DarbouxReport};
pub use tensor::{covariant_derivative, frame_derivative, idx, max_abs, CartanField, CartanLowered, CovD, JField, MetricField, TensorField};
