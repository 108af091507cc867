//! Real frame fields as generic functions of the chart point.
//!
//! `E` is stored with columns = frame vectors: `E[(i, A)] = E_A^i`.
//! The coframe is its inverse: `θ[(A, i)] = E^A_i`.

use manifold_core::{AmbientStructure, Mat, Scalar};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FrameError {
    #[error("Gram-Schmidt pivot {0:e} below threshold: metric not positive definite")]
    Pivot(f64),
    #[error("projected column set has rank {0}, expected {1}")]
    Rank(usize, usize),
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
}

/// Cayley map (1 − X/2)⁻¹(1 + X/2); orthogonal for antisymmetric X.
pub fn cayley<S: Scalar>(x: &Mat<S>) -> Mat<S> {
    let n = x.rows;
    let half = x.scale(S::from_f64(0.5));
    let id = Mat::identity(n);
    id.sub(&half).inverse().expect("cayley invertible").mul(&id.add(&half))
}

#[derive(Clone, Debug)]
pub enum FrameField {
    /// Gram-Schmidt of the coordinate basis, in coordinate order.
    GramSchmidt,
    /// Orthonormal, ordered (e_1..e_n, Je_1..Je_n) so J is constant
    /// `[[0, −1], [1, 0]]` in frame indices.
    JAdapted,
    /// base(u) · Cayley(−K(u)) with K(u) = Σ_j K_j (u − u0)^j.
    /// Used for Darboux and synchronous frames; the K_j come from the
    /// connection at u0.
    Corrected { base: Box<FrameField>, u0: Vec<f64>, k: Vec<Mat<f64>> },
    /// base(u) · O for a constant orthogonal O.
    Regauged { base: Box<FrameField>, o: Mat<f64> },
}

impl FrameField {
    pub fn vectors<S: Scalar>(&self, amb: &AmbientStructure, u: &[S]) -> Mat<S> {
        self.try_vectors(amb, u).expect("frame construction")
    }

    pub fn try_vectors<S: Scalar>(&self, amb: &AmbientStructure, u: &[S]) -> Result<Mat<S>, FrameError> {
        match self {
            FrameField::GramSchmidt => gram_schmidt(&amb.g(u)),
            FrameField::JAdapted => j_adapted(&amb.g(u), &amb.j(u)),
            FrameField::Corrected { base, u0, k } => {
                let e = base.try_vectors(amb, u)?;
                let n = e.cols;
                let mut kk = Mat::<S>::zeros(n, n);
                for (j, kj) in k.iter().enumerate() {
                    let du = u[j] - S::from_f64(u0[j]);
                    kk = kk.add(&kj.lift::<S>().scale(du));
                }
                Ok(e.mul(&cayley(&kk.scale(-S::one()))))
            }
            FrameField::Regauged { base, o } => Ok(base.try_vectors(amb, u)?.mul(&o.lift())),
        }
    }

    pub fn coframe<S: Scalar>(&self, amb: &AmbientStructure, u: &[S]) -> Mat<S> {
        self.vectors(amb, u).inverse().expect("frame invertible")
    }

    /// J in frame indices, J^A_B = θ^A_i J^i_j E_B^j.
    pub fn j_frame<S: Scalar>(&self, amb: &AmbientStructure, u: &[S]) -> Mat<S> {
        let e = self.vectors(amb, u);
        e.inverse().unwrap().mul(&amb.j(u)).mul(&e)
    }
}

fn inner<S: Scalar>(g: &Mat<S>, a: &[S], b: &[S]) -> S {
    let mut s = S::zero();
    for i in 0..g.rows {
        for j in 0..g.cols {
            s += a[i] * g[(i, j)] * b[j];
        }
    }
    s
}

fn orthonormalize<S: Scalar>(g: &Mat<S>, basis: &[Vec<S>], v: &[S]) -> (Vec<S>, S) {
    let mut w = v.to_vec();
    for b in basis {
        let c = inner(g, b, &w);
        for (wi, bi) in w.iter_mut().zip(b) {
            *wi -= c * *bi;
        }
    }
    let nrm2 = inner(g, &w, &w);
    (w, nrm2)
}

pub fn gram_schmidt<S: Scalar>(g: &Mat<S>) -> Result<Mat<S>, FrameError> {
    let n = g.rows;
    let mut basis: Vec<Vec<S>> = Vec::with_capacity(n);
    for k in 0..n {
        let ek: Vec<S> = (0..n).map(|i| if i == k { S::one() } else { S::zero() }).collect();
        let (w, nrm2) = orthonormalize(g, &basis, &ek);
        if nrm2.re() <= 1e-12 {
            return Err(FrameError::Pivot(nrm2.re()));
        }
        let s = S::one() / nrm2.sqrt();
        basis.push(w.into_iter().map(|x| x * s).collect());
    }
    Ok(Mat::from_fn(n, n, |i, a| basis[a][i]))
}

pub fn j_adapted<S: Scalar>(g: &Mat<S>, j: &Mat<S>) -> Result<Mat<S>, FrameError> {
    let m = g.rows;
    let n = m / 2;
    let mut first: Vec<Vec<S>> = Vec::new();
    let mut all: Vec<Vec<S>> = Vec::new();
    for k in 0..m {
        if first.len() == n {
            break;
        }
        let ek: Vec<S> = (0..m).map(|i| if i == k { S::one() } else { S::zero() }).collect();
        let (w, nrm2) = orthonormalize(g, &all, &ek);
        if nrm2.re() <= 1e-8 {
            continue;
        }
        let s = S::one() / nrm2.sqrt();
        let e: Vec<S> = w.into_iter().map(|x| x * s).collect();
        let je = j.mul_vec(&e);
        all.push(e.clone());
        all.push(je);
        first.push(e);
    }
    if first.len() != n {
        return Err(FrameError::Rank(first.len(), n));
    }
    let second: Vec<Vec<S>> = first.iter().map(|e| j.mul_vec(e)).collect();
    Ok(Mat::from_fn(m, m, |i, a| if a < n { first[a][i] } else { second[a - n][i] }))
}

/// Standard complex structure in J-adapted frame indices.
pub fn j0(m: usize) -> Mat<f64> {
    let n = m / 2;
    Mat::from_fn(m, m, |a, b| {
        if a >= n && b < n && a - n == b {
            1.0
        } else if a < n && b >= n && b - n == a {
            -1.0
        } else {
            0.0
        }
    })
}
