//! Pseudoholomorphic, surface and combination vielbeins.

use crate::field::FrameError;
use manifold_core::linalg::Entry;
use manifold_core::{Mat, Scalar, SurfaceStructure};
use num_complex::Complex;
use num_traits::{One, Zero};

pub type C<S> = Complex<S>;

/// Eigenvectors of a real complex structure for +i, chosen from the
/// projections ½(1 − iK)v of the given real vectors by pivoted elimination,
/// plus the dual coframe. Works for J on M and ε on Σ alike.
#[derive(Clone, Debug)]
pub struct EigenFrame<S: Scalar> {
    /// m × n, columns E_a (eigenvalue +i)
    pub hol: Mat<C<S>>,
    /// m × n, columns E_{a*} = conj(E_a)
    pub antihol: Mat<C<S>>,
    /// n × m, rows E^a
    pub co_hol: Mat<C<S>>,
    /// n × m, rows E^{a*} = conj(E^a)
    pub co_antihol: Mat<C<S>>,
}

impl<S: Scalar> EigenFrame<S> {
    pub fn build(k: &Mat<S>, real_vectors: &Mat<S>) -> Result<Self, FrameError> {
        let m = k.rows;
        let n = m / 2;
        let i = C::new(S::zero(), S::one());
        let half = C::new(S::from_f64(0.5), S::zero());
        let kc = k.to_complex();
        let proj = Mat::<C<S>>::identity(m).sub(&kc.scale(i)).scale(half);
        let cand = proj.mul(&real_vectors.to_complex());
        // pivoted elimination on a working copy decides which columns to keep
        let mut work = cand.clone();
        let mut chosen = Vec::new();
        let mut used_rows = vec![false; m];
        for c in 0..m {
            if chosen.len() == n {
                break;
            }
            let piv = (0..m).filter(|&r| !used_rows[r]).max_by(|&a, &b| work[(a, c)].mag().total_cmp(&work[(b, c)].mag()));
            let Some(r) = piv else { break };
            if work[(r, c)].mag() < 1e-10 {
                continue;
            }
            used_rows[r] = true;
            chosen.push(c);
            for c2 in c + 1..m {
                let f = work[(r, c2)] / work[(r, c)];
                for rr in 0..m {
                    let v = work[(rr, c)];
                    work[(rr, c2)] = work[(rr, c2)] - f * v;
                }
            }
        }
        if chosen.len() != n {
            return Err(FrameError::Rank(chosen.len(), n));
        }
        let hol = Mat::from_fn(m, n, |r, a| cand[(r, chosen[a])]);
        let antihol = hol.conj();
        let full = Mat::from_fn(m, m, |r, c| if c < n { hol[(r, c)] } else { antihol[(r, c - n)] });
        let inv = full.inverse().ok_or(FrameError::Rank(0, n))?;
        let co_hol = Mat::from_fn(n, m, |a, r| inv[(a, r)]);
        let co_antihol = co_hol.conj();
        Ok(EigenFrame { hol, antihol, co_hol, co_antihol })
    }

    pub fn half_dim(&self) -> usize {
        self.hol.cols
    }
}

pub type PseudoholomorphicFrame<S> = EigenFrame<S>;

/// Frame on the surface chart: E_κ = ∂/∂z, E^κ = dz for standard ε.
pub type SurfaceFrame = EigenFrame<f64>;

pub fn build_surface_frame(surface: &SurfaceStructure) -> Result<SurfaceFrame, FrameError> {
    EigenFrame::build(&surface.eps, &Mat::identity(2))
}

/// Combination vielbeins E_a^A := E_a^i E_i^A and the inverse blocks.
#[derive(Clone, Debug)]
pub struct CombinedFrame<S: Scalar> {
    /// m × n: E_a^A (row A, column a)
    pub hol: Mat<C<S>>,
    pub antihol: Mat<C<S>>,
    /// n × m: E^a_A
    pub co_hol: Mat<C<S>>,
    pub co_antihol: Mat<C<S>>,
}

pub fn combine_frames<S: Scalar>(real: &Mat<S>, pseudo: &EigenFrame<S>) -> Result<CombinedFrame<S>, FrameError> {
    if real.rows != pseudo.hol.rows {
        return Err(FrameError::Dimension(real.rows, pseudo.hol.rows));
    }
    let theta = real.inverse().expect("frame invertible").to_complex();
    let e = real.to_complex();
    let hol = theta.mul(&pseudo.hol);
    let antihol = hol.conj();
    let co_hol = pseudo.co_hol.mul(&e);
    let co_antihol = co_hol.conj();
    Ok(CombinedFrame { hol, antihol, co_hol, co_antihol })
}

pub fn cmax<S: Scalar>(m: &Mat<C<S>>) -> f64 {
    m.max_abs()
}

pub fn cid<S: Scalar>(n: usize) -> Mat<C<S>> {
    Mat::from_fn(n, n, |a, b| if a == b { C::one() } else { C::zero() })
}
