//! Vielbein families: real orthonormal, J-pseudoholomorphic, surface
//! holomorphic and the combination frames, with their identity checks.

pub mod complex;
pub mod field;
pub mod identities;

pub use complex::{build_surface_frame, combine_frames, CombinedFrame, EigenFrame, PseudoholomorphicFrame, SurfaceFrame};
pub use field::{cayley, gram_schmidt, j0, j_adapted, FrameError, FrameField};
pub use identities::{verify_frame_identities, IdentityReport};

use manifold_core::{AmbientStructure, Mat, Scalar};

/// Orthonormal frame at a point: E (columns E_A) and its inverse.
#[derive(Clone, Debug)]
pub struct RealOrthonormalFrame<S: Scalar> {
    pub e: Mat<S>,
    pub theta: Mat<S>,
}

pub fn build_orthonormal_frame<S: Scalar>(amb: &AmbientStructure, u: &[S]) -> Result<RealOrthonormalFrame<S>, FrameError> {
    let e = gram_schmidt(&amb.g(u))?;
    let theta = e.inverse().expect("invertible");
    Ok(RealOrthonormalFrame { e, theta })
}

pub fn build_pseudoholomorphic_frame<S: Scalar>(amb: &AmbientStructure, u: &[S]) -> Result<PseudoholomorphicFrame<S>, FrameError> {
    let e = gram_schmidt(&amb.g(u))?;
    EigenFrame::build(&amb.j(u), &e)
}
