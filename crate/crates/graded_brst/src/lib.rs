//! Graded (ghost-extended) phase space and the BRST transformation.

pub mod full;
pub mod graded;
pub mod grassmann;
pub mod plus;
pub mod report;
pub mod structural;
pub mod system;

pub use full::{derived_forms, FullBrst, FullObs, FullObsFn, Signs, NILPOTENT};
pub use graded::{graded_project, sample_graded_points, GradedPhasePoint};
pub use grassmann::{max_monomial_diff, Grass, Mono};
pub use plus::{theorem61_closed, theorem_closed, Obs, PlusBrst, PlusObs, Substitution, WRITTEN_SIGNS};
pub use report::{brst_check, control_check, ghost_number_violation, leibniz_residual, witten_check, BrstReport, ControlReport, NIL_LABELS, T61_LABELS, T71_LABELS};
pub use structural::{graded_structural, GradedStructReport};
pub use system::{apply_delta, coords, worst, worst_diff, Coords, Delta, GradedSystem, GrassFn};
