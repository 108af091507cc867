//! Almost-Kähler data on a chart: g, ω, J, compatible-triple construction
//! and the Nijenhuis tensor.

use crate::linalg::{spd_inv_sqrt, sym_eigen, Mat};
use crate::manifold::{ChartedManifold, ManifoldError};
use crate::scalar::{seed, Dual, Scalar};
use std::sync::Arc;

/// Derivatives of a matrix-valued function: entry `l` is ∂_l F.
pub fn d_mat<S: Scalar>(u: &[S], f: impl Fn(&[Dual<S>]) -> Mat<Dual<S>>) -> Vec<Mat<S>> {
    (0..u.len()).map(|l| f(&seed(u, l)).map(|x| x.d)).collect()
}

/// J = A (−A²)^(−1/2) with A = g_aux⁻¹ ωᵀ, and g_compat(X, Y) = ω(X, JY).
///
/// With these index conventions ω = Jᵀ g, i.e. ω_ij = J^k_i g_kj. The
/// square root is taken in the g_aux-symmetric form so that a symmetric
/// solver applies.
pub fn build_compatible_triple<S: Scalar>(g_aux: &Mat<S>, omega: &Mat<S>) -> Result<(Mat<S>, Mat<S>), ManifoldError> {
    let n = g_aux.rows;
    if omega.det().re().abs() < 1e-12 {
        return Err(ManifoldError::Degenerate("omega is singular".into()));
    }
    let ginv = g_aux.inverse().ok_or_else(|| ManifoldError::Degenerate("g_aux is singular".into()))?;
    let a = ginv.mul(&omega.t());
    let h_inv = spd_inv_sqrt(g_aux).ok_or_else(|| ManifoldError::Degenerate("g_aux not positive definite".into()))?;
    let h = h_inv.inverse().unwrap();
    // Ŝ = H⁻¹ (ωᵀ g⁻¹ ω) H⁻¹ is the symmetric image of −A².
    let s_hat = h_inv.mul(&omega.t().mul(&ginv).mul(omega)).mul(&h_inv);
    let (w, _) = sym_eigen(&s_hat.values());
    if w.iter().any(|&x| x < 1e-12) {
        return Err(ManifoldError::Degenerate(format!("eigenvalue of -A^2 below floor: {w:?}")));
    }
    let s_inv_sqrt = spd_inv_sqrt(&s_hat).ok_or_else(|| ManifoldError::Degenerate("square root failed".into()))?;
    let j = a.mul(&h_inv).mul(&s_inv_sqrt).mul(&h);
    let g_compat = omega.mul(&j);
    debug_assert_eq!(j.rows, n);
    Ok((j, g_compat))
}

#[derive(Clone, Debug)]
pub struct AmbientStructure {
    pub manifold: Arc<ChartedManifold>,
    explicit_j: bool,
}

impl AmbientStructure {
    pub fn new(manifold: ChartedManifold) -> Self {
        let explicit_j = manifold.tensor_fields.contains_key("J");
        AmbientStructure { manifold: Arc::new(manifold), explicit_j }
    }

    pub fn builtin(name: &str) -> Result<Self, ManifoldError> {
        Ok(Self::new(ChartedManifold::builtin(name)?))
    }

    pub fn dim(&self) -> usize {
        self.manifold.dim
    }

    pub fn name(&self) -> &str {
        &self.manifold.name
    }

    pub fn omega<S: Scalar>(&self, u: &[S]) -> Mat<S> {
        self.manifold.matrix("omega", u).expect("omega registered")
    }

    /// The compatible metric: the registered g when J is registered,
    /// otherwise ω(·, J·) built from the auxiliary g.
    pub fn g<S: Scalar>(&self, u: &[S]) -> Mat<S> {
        let g = self.manifold.matrix("g", u).expect("g registered");
        if self.explicit_j {
            g
        } else {
            build_compatible_triple(&g, &self.omega(u)).expect("valid triple").1
        }
    }

    /// J^i_j stored as row i, column j.
    pub fn j<S: Scalar>(&self, u: &[S]) -> Mat<S> {
        if self.explicit_j {
            self.manifold.matrix("J", u).expect("J registered")
        } else {
            let g = self.manifold.matrix("g", u).expect("g registered");
            build_compatible_triple(&g, &self.omega(u)).expect("valid triple").0
        }
    }

    pub fn ginv<S: Scalar>(&self, u: &[S]) -> Mat<S> {
        self.g(u).inverse().expect("metric invertible")
    }

    pub fn dg<S: Scalar>(&self, u: &[S]) -> Vec<Mat<S>> {
        d_mat(u, |v| self.g(v))
    }

    pub fn dj<S: Scalar>(&self, u: &[S]) -> Vec<Mat<S>> {
        d_mat(u, |v| self.j(v))
    }

    /// Structural invariants at a point, as maximal absolute residuals.
    pub fn residuals(&self, u: &[f64]) -> AmbientResiduals {
        let n = self.dim();
        let g = self.g(u);
        let om = self.omega(u);
        let j = self.j(u);
        let j2 = j.mul(&j).add(&Mat::identity(n)).max_abs();
        let g_sym = g.sub(&g.t()).max_abs();
        let om_anti = om.add(&om.t()).max_abs();
        let compat = om.sub(&j.t().mul(&g)).max_abs();
        let dom = d_mat(u, |v| self.omega(v));
        let mut closed: f64 = 0.0;
        for i in 0..n {
            for jx in 0..n {
                for k in 0..n {
                    let c = dom[i][(jx, k)] + dom[jx][(k, i)] + dom[k][(i, jx)];
                    closed = closed.max(c.abs());
                }
            }
        }
        let (w, _) = sym_eigen(&g.map(|x| x).add(&g.t()).scale(0.5));
        AmbientResiduals { j_squared: j2, g_symmetric: g_sym, omega_antisymmetric: om_anti, compatibility: compat, d_omega: closed, g_min_eigen: w.iter().cloned().fold(f64::INFINITY, f64::min) }
    }

    /// N^i_jk from N(X,Y) = [JX,JY] − J[JX,Y] − J[X,JY] − [X,Y].
    /// Index layout: out[(i * n + j) * n + k].
    pub fn nijenhuis<S: Scalar>(&self, u: &[S]) -> Vec<S> {
        let n = self.dim();
        let j = self.j(u);
        let dj = self.dj(u);
        let mut out = vec![S::zero(); n * n * n];
        for i in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let mut s = S::zero();
                    for l in 0..n {
                        s += j[(l, a)] * dj[l][(i, b)] - j[(l, b)] * dj[l][(i, a)];
                        s -= j[(i, l)] * (dj[a][(l, b)] - dj[b][(l, a)]);
                    }
                    out[(i * n + a) * n + b] = s;
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct AmbientResiduals {
    pub j_squared: f64,
    pub g_symmetric: f64,
    pub omega_antisymmetric: f64,
    pub compatibility: f64,
    pub d_omega: f64,
    pub g_min_eigen: f64,
}

/// Complex structure ε on the 2-dimensional surface chart, ε^α_β row α.
#[derive(Clone, Debug)]
pub struct SurfaceStructure {
    pub eps: Mat<f64>,
}

impl SurfaceStructure {
    /// ε ∂x = ∂y.
    pub fn standard() -> Self {
        SurfaceStructure { eps: Mat::from_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]) }
    }

    pub fn new(eps: Mat<f64>) -> Result<Self, ManifoldError> {
        if eps.rows != 2 || eps.cols != 2 {
            return Err(ManifoldError::Config("surface structure must be 2x2".into()));
        }
        if eps.mul(&eps).add(&Mat::identity(2)).max_abs() > 1e-12 {
            return Err(ManifoldError::Degenerate("eps^2 != -1".into()));
        }
        Ok(SurfaceStructure { eps })
    }
}

pub fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}
