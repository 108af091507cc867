//! The unconstrained phase space: Θ^V, Ω^V, the currents 𝔍_A, their
//! Hamiltonian vector fields and brackets.
//!
//! Vertical coordinates are z = (u^i, p_i^1, p_i^2); every horizontal
//! component α is handled separately. A vertical 2-form ½W_IJ dz^I∧dz^J is
//! stored as the antisymmetric matrix W, and X⌟ρ has components X^I W_IJ.

use crate::point::{PhasePoint, PhaseSpace};
use connection_curvature::{anholonomic, cartan_from_gamma, idx};
use manifold_core::ambient::d_mat;
use manifold_core::scalar::{seed, Dual};
use manifold_core::{Mat, Scalar};

/// ∂_I of every component of a vector-valued function, as rows I.
pub fn jacobian<S: Scalar>(z: &[S], f: impl Fn(&[Dual<S>]) -> Vec<Dual<S>>) -> Vec<Vec<S>> {
    (0..z.len()).map(|i| f(&seed(z, i)).into_iter().map(|x| x.d).collect()).collect()
}

pub fn wedge(a: &[f64], b: &[f64]) -> Mat<f64> {
    let n = a.len();
    Mat::from_fn(n, n, |i, j| a[i] * b[j] - a[j] * b[i])
}

pub fn contract(x: &[f64], w: &Mat<f64>) -> Vec<f64> {
    (0..w.cols).map(|j| (0..w.rows).map(|i| x[i] * w[(i, j)]).sum()).collect()
}

/// A vertical vector field in z-coordinates.
pub type VerticalField = Vec<f64>;

pub fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

impl<'a> PhaseSpace<'a> {
    /// 𝔍_A components p_A^α = E_A^i p_i^α, layout [A][α] flattened.
    pub fn currents<S: Scalar>(&self, z: &[S]) -> Vec<S> {
        let m = self.dim();
        let e = self.frame.vectors(self.amb, &z[..m]);
        let mut out = vec![S::zero(); 2 * m];
        for a in 0..m {
            for al in 0..2 {
                let mut s = S::zero();
                for i in 0..m {
                    s += e[(i, a)] * z[m + al * m + i];
                }
                out[2 * a + al] = s;
            }
        }
        out
    }

    /// Θ^V_α = p_A^α θ^A as a covector on z, layout [α][I].
    pub fn theta_v<S: Scalar>(&self, z: &[S]) -> Vec<S> {
        let m = self.dim();
        let th = self.frame.coframe(self.amb, &z[..m]);
        let pa = self.currents(z);
        let nz = 3 * m;
        let mut out = vec![S::zero(); 2 * nz];
        for al in 0..2 {
            for i in 0..m {
                let mut s = S::zero();
                for a in 0..m {
                    s += pa[2 * a + al] * th[(a, i)];
                }
                out[al * nz + i] = s;
            }
        }
        out
    }

    /// −d^VΘ^V_α by differentiating Θ^V.
    pub fn omega_from_potential(&self, z: &[f64]) -> [Mat<f64>; 2] {
        let nz = z.len();
        let jac = jacobian(z, |v| self.theta_v(v));
        let f = |al: usize| Mat::from_fn(nz, nz, |i, j| -(jac[i][al * nz + j] - jac[j][al * nz + i]));
        [f(0), f(1)]
    }

    /// Ω^V_α = θ^A ∧ dp_A^α + ½ p_A^α C^A_BC θ^B ∧ θ^C in z-coordinates.
    pub fn omega_v(&self, z: &[f64]) -> [Mat<f64>; 2] {
        let m = self.dim();
        let nz = 3 * m;
        let u = &z[..m];
        let e = self.frame.vectors(self.amb, u);
        let th = e.inverse().unwrap();
        let de = d_mat(u, |v| self.frame.vectors(self.amb, v));
        let c = cartan_from_gamma(&anholonomic(self.amb, &self.frame, u));
        let pa = self.currents(z);
        let mk = |al: usize| {
            let mut w = Mat::zeros(nz, nz);
            for a in 0..m {
                let mut ta = vec![0.0; nz];
                let mut dpa = vec![0.0; nz];
                for i in 0..m {
                    ta[i] = th[(a, i)];
                    dpa[m + al * m + i] = e[(i, a)];
                    for j in 0..m {
                        dpa[i] += z[m + al * m + j] * de[i][(j, a)];
                    }
                }
                w = w.add(&wedge(&ta, &dpa));
            }
            for i in 0..m {
                for j in 0..m {
                    let mut s = 0.0;
                    for a in 0..m {
                        for b in 0..m {
                            for cc in 0..m {
                                s += pa[2 * a + al] * c[idx(m, &[a, b, cc])] * th[(b, i)] * th[(cc, j)];
                            }
                        }
                    }
                    w[(i, j)] += s;
                }
            }
            w
        };
        [mk(0), mk(1)]
    }

    /// Σ_i du^i ∧ dp_i^α.
    pub fn omega_holonomic(&self) -> [Mat<f64>; 2] {
        let m = self.dim();
        let nz = 3 * m;
        let mk = |al: usize| Mat::from_fn(nz, nz, |i, j| {
            if i < m && j == m + al * m + i {
                1.0
            } else if j < m && i == m + al * m + j {
                -1.0
            } else {
                0.0
            }
        });
        [mk(0), mk(1)]
    }

    /// 𝔛[𝔍_D] = θ̂_D + p_E^ν C^E_DG ∂/∂p_G^ν, rewritten in z-coordinates.
    pub fn hamiltonian_field(&self, z: &[f64], d: usize) -> VerticalField {
        let m = self.dim();
        let u = &z[..m];
        let e = self.frame.vectors(self.amb, u);
        let th = e.inverse().unwrap();
        let dth = d_mat(u, |v| self.frame.coframe(self.amb, v));
        let c = cartan_from_gamma(&anholonomic(self.amb, &self.frame, u));
        let pa = self.currents(z);
        let mut x = vec![0.0; 3 * m];
        for i in 0..m {
            x[i] = e[(i, d)];
        }
        for nu in 0..2 {
            for i in 0..m {
                let mut s = 0.0;
                for a in 0..m {
                    for j in 0..m {
                        s += e[(j, d)] * dth[j][(a, i)] * pa[2 * a + nu];
                    }
                    for g in 0..m {
                        s += th[(g, i)] * pa[2 * a + nu] * c[idx(m, &[a, d, g])];
                    }
                }
                x[m + nu * m + i] = s;
            }
        }
        x
    }

    /// max over α, J of |𝔛⌟Ω^V_α − d^V f_α| for f = 𝔍_D.
    pub fn structural_residual(&self, z: &[f64], x: &[f64], d: usize, omega: &[Mat<f64>; 2]) -> f64 {
        let grad = jacobian(z, |v| self.currents(v));
        let mut r = 0.0f64;
        for (al, w) in omega.iter().enumerate() {
            let lhs = contract(x, w);
            for (j, l) in lhs.iter().enumerate() {
                r = r.max((l - grad[j][2 * d + al]).abs());
            }
        }
        r
    }
}

#[derive(Clone, Debug, Default)]
pub struct BracketReport {
    /// max |{𝔍_B, 𝔍_C} − C^A_BC 𝔍_A|
    pub algebra: f64,
    /// max |{𝔍_B, 𝔍_C} + {𝔍_C, 𝔍_B}|
    pub antisymmetry: f64,
    /// max |{𝔍_B, 𝔍_C}|
    pub max_bracket: f64,
    /// max structural-equation residual over D
    pub structural: f64,
    /// max |Ω^V (frame form) + d^VΘ^V|
    pub exactness: f64,
    /// max |Ω^V (frame form) − du∧dp|
    pub holonomic: f64,
}

impl<'a> PhaseSpace<'a> {
    /// {𝔍_B, 𝔍_C}_α = 𝔛[𝔍_B](p_C^α), layout [B][C][α].
    pub fn brackets(&self, pt: &PhasePoint) -> Vec<f64> {
        let m = self.dim();
        let z = pt.z();
        let grad = jacobian(&z, |v| self.currents(v));
        let mut out = vec![0.0; m * m * 2];
        for b in 0..m {
            let x = self.hamiltonian_field(&z, b);
            for c in 0..m {
                for al in 0..2 {
                    out[(b * m + c) * 2 + al] = (0..z.len()).map(|i| x[i] * grad[i][2 * c + al]).sum();
                }
            }
        }
        out
    }

    pub fn bracket_algebra_check(&self, pt: &PhasePoint) -> BracketReport {
        let m = self.dim();
        let z = pt.z();
        let br = self.brackets(pt);
        let c = cartan_from_gamma(&anholonomic(self.amb, &self.frame, &pt.u));
        let pa = self.currents(&z);
        let mut rep = BracketReport::default();
        for b in 0..m {
            for cc in 0..m {
                for al in 0..2 {
                    let v = br[(b * m + cc) * 2 + al];
                    let want: f64 = (0..m).map(|a| c[idx(m, &[a, b, cc])] * pa[2 * a + al]).sum();
                    rep.algebra = rep.algebra.max((v - want).abs());
                    rep.antisymmetry = rep.antisymmetry.max((v + br[(cc * m + b) * 2 + al]).abs());
                    rep.max_bracket = rep.max_bracket.max(v.abs());
                }
            }
        }
        let om = self.omega_v(&z);
        for d in 0..m {
            let x = self.hamiltonian_field(&z, d);
            rep.structural = rep.structural.max(self.structural_residual(&z, &x, d, &om));
        }
        let pot = self.omega_from_potential(&z);
        let hol = self.omega_holonomic();
        for al in 0..2 {
            rep.exactness = rep.exactness.max(om[al].sub(&pot[al]).max_abs());
            rep.holonomic = rep.holonomic.max(om[al].sub(&hol[al]).max_abs());
        }
        rep
    }
}
