//! Covariant phase space of embeddings Σ → M: multimomenta, vertical
//! multisymplectic forms, currents and their brackets, and the induced
//! structure on pseudoholomorphic momenta.

pub mod full;
pub mod momenta;
pub mod plus;
pub mod point;

pub use full::{contract, jacobian, max_diff, wedge, BracketReport, VerticalField};
pub use momenta::{max_block, FramedMomenta};
pub use plus::PlusReport;
pub use point::{sample_phase_points, PhasePoint, PhaseSpace};
