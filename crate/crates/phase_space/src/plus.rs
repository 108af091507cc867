//! The pseudoholomorphic subbundle p_a^{κ*} = p_{a*}^κ = 0.
//!
//! Coordinates w = (u^i, Re q_a, Im q_a) with q_a = p_a^κ and
//! p_{a*}^{κ*} = conj(q_a). The embedding into the full space is
//! p_i^α = E^a_i q_a E_κ^α + c.c.; Ω^V|₊ and 𝔍_A|₊ are computed by
//! numerical pullback of the full objects, and the Hamiltonian fields are
//! the displayed closed forms.

use crate::full::{contract, jacobian, wedge};
use crate::point::{PhasePoint, PhaseSpace};
use connection_curvature::{anholonomic, cartan_from_gamma, idx};
use frames::{combine_frames, EigenFrame};
use manifold_core::linalg::sym_eigen;
use manifold_core::{Complex64, Mat, Scalar};
use num_complex::Complex;

#[derive(Clone, Debug, Default)]
pub struct PlusReport {
    /// max |{𝔍_B|₊, 𝔍_C|₊} − C^A_BC 𝔍_A|₊| with the displayed fields
    pub algebra: f64,
    pub antisymmetry: f64,
    pub max_bracket: f64,
    /// max |𝔛[𝔍_D|₊]⌟Ω^V|₊ − d^V𝔍_D|₊| with the displayed fields
    pub structural: f64,
    /// the same for the least-squares solution of the structural equation
    pub ls_structural: f64,
    /// the bracket algebra with the least-squares fields
    pub ls_algebra: f64,
    /// one least-squares field per horizontal component: structural residual
    pub per_component_structural: f64,
    /// and the bracket algebra built from those fields
    pub per_component_algebra: f64,
    /// displayed Ω^V|₊ against the pullback
    pub displayed_omega: f64,
    /// the same with the connection term's sign reversed
    pub displayed_omega_flipped: f64,
    /// pullback of Ω^V against −d^V of the pulled-back potential
    pub pullback_exactness: f64,
}

impl<'a> PhaseSpace<'a> {
    pub fn plus_dim(&self) -> usize {
        2 * self.dim()
    }

    /// Constrained coordinates of a point already on the subbundle.
    pub fn to_plus(&self, pt: &PhasePoint) -> Vec<f64> {
        let fm = self.to_framed(pt);
        let mut w = pt.u.clone();
        w.extend(fm.hol_hol.iter().map(|z| z.re));
        w.extend(fm.hol_hol.iter().map(|z| z.im));
        w
    }

    /// ι: w ↦ z.
    pub fn embed<S: Scalar>(&self, w: &[S]) -> Vec<S> {
        let m = self.dim();
        let n = m / 2;
        let u = &w[..m];
        let e = self.frame.vectors(self.amb, u);
        let pf = EigenFrame::build(&self.amb.j(u), &e).expect("pseudoholomorphic frame");
        let mut z = u.to_vec();
        for al in 0..2 {
            let s = self.sframe.hol[(al, 0)];
            let s = Complex::new(S::from_f64(s.re), S::from_f64(s.im));
            for i in 0..m {
                let mut acc = Complex::new(S::zero(), S::zero());
                for a in 0..n {
                    let q = Complex::new(w[m + a], w[m + n + a]);
                    acc = acc + pf.co_hol[(a, i)] * q * s;
                }
                z.push(acc.re + acc.re);
            }
        }
        z
    }

    /// Θ^V|₊_α = ι^*Θ^V_α as a covector on w, layout [α][K].
    pub fn theta_plus<S: Scalar>(&self, w: &[S]) -> Vec<S> {
        let z = self.embed(w);
        let t = self.theta_v(&z);
        let jac = jacobian(w, |v| self.embed(v));
        let (nz, nw) = (z.len(), w.len());
        let mut out = vec![S::zero(); 2 * nw];
        for al in 0..2 {
            for k in 0..nw {
                let mut s = S::zero();
                for i in 0..nz {
                    s += jac[k][i] * t[al * nz + i];
                }
                out[al * nw + k] = s;
            }
        }
        out
    }

    /// −d^V(Θ^V|₊), an independent route to Ω^V|₊.
    pub fn omega_plus_from_potential(&self, w: &[f64]) -> [Mat<f64>; 2] {
        let nw = w.len();
        let jac = jacobian(w, |v| self.theta_plus(v));
        let f = |al: usize| Mat::from_fn(nw, nw, |i, j| -(jac[i][al * nw + j] - jac[j][al * nw + i]));
        [f(0), f(1)]
    }

    pub fn currents_plus<S: Scalar>(&self, w: &[S]) -> Vec<S> {
        self.currents(&self.embed(w))
    }

    /// Ω^V|₊_α = ι^*Ω^V_α.
    pub fn omega_plus(&self, w: &[f64]) -> [Mat<f64>; 2] {
        let z = self.embed(w);
        let jac = jacobian(w, |v| self.embed(v));
        let om = self.omega_v(&z);
        let nw = w.len();
        let pull = |wa: &Mat<f64>| {
            Mat::from_fn(nw, nw, |k, l| {
                let mut s = 0.0;
                for i in 0..z.len() {
                    for j in 0..z.len() {
                        s += jac[k][i] * wa[(i, j)] * jac[l][j];
                    }
                }
                s
            })
        };
        [pull(&om[0]), pull(&om[1])]
    }

    /// The displayed form E^a_A θ^A∧dp_a^κ∧dx_κ − p_a^κ Γ^a_CA θ^C∧θ^A∧dx_κ + c.c.,
    /// with dx_κ = E_κ^α dx_α and ω^a_b E^b_A + ω^a_{b*} E^{b*}_A = Γ^a_CA θ^C.
    pub fn omega_plus_displayed(&self, w: &[f64]) -> [Mat<f64>; 2] {
        self.omega_plus_connection_sign(w, -1.0)
    }

    /// As above with the sign of the connection term as a parameter.
    pub fn omega_plus_connection_sign(&self, w: &[f64], sign: f64) -> [Mat<f64>; 2] {
        let m = self.dim();
        let n = m / 2;
        let nw = 2 * m;
        let u = &w[..m];
        let e = self.frame.vectors(self.amb, u);
        let th = e.inverse().unwrap();
        let pf = EigenFrame::build(&self.amb.j(u), &e).unwrap();
        let cf = combine_frames(&e, &pf).unwrap();
        let gam = anholonomic(self.amb, &self.frame, u);
        let cw = |a: &[Complex64], b: &[Complex64]| -> (Mat<f64>, Mat<f64>) {
            let re = |v: &[Complex64]| v.iter().map(|z| z.re).collect::<Vec<_>>();
            let im = |v: &[Complex64]| v.iter().map(|z| z.im).collect::<Vec<_>>();
            let r = wedge(&re(a), &re(b)).sub(&wedge(&im(a), &im(b)));
            let i = wedge(&re(a), &im(b)).add(&wedge(&im(a), &re(b)));
            (r, i)
        };
        let mut acc = Mat::<Complex64>::zeros(nw, nw);
        let zero = Complex::new(0.0, 0.0);
        for a in 0..n {
            let q = Complex::new(w[m + a], w[m + n + a]);
            // θ^a = E^a_A θ^A
            let mut ta = vec![zero; nw];
            for i in 0..m {
                for aa in 0..m {
                    ta[i] += cf.co_hol[(a, aa)] * th[(aa, i)];
                }
            }
            let mut dq = vec![zero; nw];
            dq[m + a] = Complex::new(1.0, 0.0);
            dq[m + n + a] = Complex::new(0.0, 1.0);
            let (r, i) = cw(&ta, &dq);
            acc = acc.add(&Mat::from_fn(nw, nw, |x, y| Complex::new(r[(x, y)], i[(x, y)])));
            for c in 0..m {
                for aa in 0..m {
                    let mut g = zero;
                    for b in 0..m {
                        g += cf.co_hol[(a, b)] * gam[idx(m, &[b, c, aa])];
                    }
                    let tc: Vec<Complex64> = (0..nw).map(|i| if i < m { Complex::new(th[(c, i)], 0.0) } else { zero }).collect();
                    let t_a: Vec<Complex64> = (0..nw).map(|i| if i < m { Complex::new(th[(aa, i)], 0.0) } else { zero }).collect();
                    let (r, i) = cw(&tc, &t_a);
                    let coef = q * g * sign;
                    acc = acc.add(&Mat::from_fn(nw, nw, |x, y| coef * Complex::new(r[(x, y)], i[(x, y)])));
                }
            }
        }
        let mk = |al: usize| {
            let s = self.sframe.hol[(al, 0)];
            acc.map(|z| 2.0 * (z * s).re)
        };
        [mk(0), mk(1)]
    }

    /// 𝔛[𝔍_D|₊] = θ̂_D + p_a^κ (Γ^a_(Cb)E^b_D + Γ^a_(Cb*)E^{b*}_D) E^C_d ∂/∂p_d^κ
    ///          + 2 p_a^κ (Γ^a_[Cb]E^b_D + Γ^a_[Cb*]E^{b*}_D) E^C_d ∂/∂p_d^κ + c.c.
    /// with weight-½ (anti)symmetrization, Γ^a_CB := E^a_A Γ^A_CB.
    pub fn hamiltonian_field_plus<S: Scalar>(&self, w: &[S], d: usize) -> Vec<S> {
        let m = self.dim();
        let n = m / 2;
        let u = &w[..m];
        let e = self.frame.vectors(self.amb, u);
        let pf = EigenFrame::build(&self.amb.j(u), &e).unwrap();
        let cf = combine_frames(&e, &pf).unwrap();
        let gam = anholonomic(self.amb, &self.frame, u);
        let (c15, c05) = (S::from_f64(1.5), S::from_f64(0.5));
        let mut x = vec![S::zero(); 2 * m];
        for i in 0..m {
            x[i] = e[(i, d)];
        }
        for dd in 0..n {
            let mut y = Complex::new(S::zero(), S::zero());
            for a in 0..n {
                let q = Complex::new(w[m + a], w[m + n + a]);
                for aa in 0..m {
                    for c in 0..m {
                        let g = c15 * gam[idx(m, &[aa, c, d])] - c05 * gam[idx(m, &[aa, d, c])];
                        y = y + q * cf.co_hol[(a, aa)] * cf.hol[(c, dd)] * Complex::new(g, S::zero());
                    }
                }
            }
            x[m + dd] = y.re;
            x[m + n + dd] = y.im;
        }
        x
    }

    /// Least-squares solution of X⌟Ω^V|₊_α = d^V𝔍_D|₊_α for both α at once.
    pub fn least_squares_field_plus(&self, w: &[f64], d: usize, om: &[Mat<f64>; 2], grad: &[Vec<f64>]) -> Vec<f64> {
        self.least_squares_field_plus_for(w, d, om, grad, &[0, 1])
    }

    /// Least squares restricted to the listed horizontal components.
    pub fn least_squares_field_plus_for(&self, w: &[f64], d: usize, om: &[Mat<f64>; 2], grad: &[Vec<f64>], alphas: &[usize]) -> Vec<f64> {
        let nw = w.len();
        let na = alphas.len();
        // rows (α, L), columns K: Ω_α[K][L]
        let a = Mat::from_fn(na * nw, nw, |r, k| om[alphas[r / nw]][(k, r % nw)]);
        let g: Vec<f64> = (0..na * nw).map(|r| grad[r % nw][2 * d + alphas[r / nw]]).collect();
        let ata = a.t().mul(&a);
        let atg = a.t().mul_vec(&g);
        let (vals, vecs) = sym_eigen(&ata);
        let top = vals.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let mut x = vec![0.0; nw];
        for (c, &lam) in vals.iter().enumerate() {
            if lam.abs() <= 1e-12 * top.max(1.0) {
                continue;
            }
            let coef: f64 = (0..nw).map(|i| vecs[(i, c)] * atg[i]).sum::<f64>() / lam;
            for i in 0..nw {
                x[i] += coef * vecs[(i, c)];
            }
        }
        x
    }

    pub fn plus_algebra_check(&self, pt: &PhasePoint) -> PlusReport {
        let m = self.dim();
        let w = self.to_plus(pt);
        let om = self.omega_plus(&w);
        let grad = jacobian(&w, |v| self.currents_plus(v));
        let f = self.currents_plus(&w);
        let c = cartan_from_gamma(&anholonomic(self.amb, &self.frame, &pt.u));
        let mut rep = PlusReport::default();
        let disp = self.omega_plus_displayed(&w);
        let flip = self.omega_plus_connection_sign(&w, 1.0);
        let pot = self.omega_plus_from_potential(&w);
        for al in 0..2 {
            rep.displayed_omega = rep.displayed_omega.max(disp[al].sub(&om[al]).max_abs());
            rep.displayed_omega_flipped = rep.displayed_omega_flipped.max(flip[al].sub(&om[al]).max_abs());
            rep.pullback_exactness = rep.pullback_exactness.max(pot[al].sub(&om[al]).max_abs());
        }
        let structural = |x: &[f64], d: usize| -> f64 {
            let mut r = 0.0f64;
            for (al, wa) in om.iter().enumerate() {
                for (l, v) in contract(x, wa).iter().enumerate() {
                    r = r.max((v - grad[l][2 * d + al]).abs());
                }
            }
            r
        };
        let fields: Vec<Vec<f64>> = (0..m).map(|d| self.hamiltonian_field_plus(&w, d)).collect();
        let ls: Vec<Vec<f64>> = (0..m).map(|d| self.least_squares_field_plus(&w, d, &om, &grad)).collect();
        let per: Vec<[Vec<f64>; 2]> =
            (0..m).map(|d| [0, 1].map(|al| self.least_squares_field_plus_for(&w, d, &om, &grad, &[al]))).collect();
        for d in 0..m {
            for al in 0..2 {
                for (l, v) in contract(&per[d][al], &om[al]).iter().enumerate() {
                    rep.per_component_structural = rep.per_component_structural.max((v - grad[l][2 * d + al]).abs());
                }
            }
        }
        for d in 0..m {
            rep.structural = rep.structural.max(structural(&fields[d], d));
            rep.ls_structural = rep.ls_structural.max(structural(&ls[d], d));
        }
        let br = |x: &[f64], cc: usize, al: usize| -> f64 { (0..w.len()).map(|k| x[k] * grad[k][2 * cc + al]).sum() };
        for b in 0..m {
            for cc in 0..m {
                for al in 0..2 {
                    let want: f64 = (0..m).map(|a| c[idx(m, &[a, b, cc])] * f[2 * a + al]).sum();
                    let v = br(&fields[b], cc, al);
                    rep.algebra = rep.algebra.max((v - want).abs());
                    rep.antisymmetry = rep.antisymmetry.max((v + br(&fields[cc], b, al)).abs());
                    rep.max_bracket = rep.max_bracket.max(v.abs());
                    rep.ls_algebra = rep.ls_algebra.max((br(&ls[b], cc, al) - want).abs());
                    rep.per_component_algebra = rep.per_component_algebra.max((br(&per[b][al], cc, al) - want).abs());
                }
            }
        }
        rep
    }
}
