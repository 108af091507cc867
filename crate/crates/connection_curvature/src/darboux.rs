//! Darboux and synchronous frames, and the E3/E4 residuals.
//!
//! Both frames are first-order corrections of a base frame at a point u0:
//! E(u) = E_base(u) · Cayley(−K(u)), K(u) = Σ_j K_j (u − u0)^j, which changes
//! the connection at u0 to Γ'_B = Γ_B − θ̂_B(K).
//!
//! Synchronous: K_j = θ^B_j Γ_B removes Γ entirely at u0.
//! Darboux: start from the J-adapted frame (ω and J constant), and remove
//! only the J0-commuting part of each Γ_B. That part lies in u(n), so the
//! correction keeps ω and J constant to first order, and the remaining Γ_B
//! anticommute with J0, which is what E3 says when J is constant.

use crate::connection::{anholonomic, cartan_from_gamma, gamma_matrices};
use crate::tensor::{covariant_derivative, idx, JField};
use frames::{j0, FrameField};
use manifold_core::{AmbientStructure, Mat};

fn correction(amb: &AmbientStructure, base: FrameField, u0: &[f64], part: impl Fn(&Mat<f64>) -> Mat<f64>) -> FrameField {
    let m = amb.dim();
    let th = base.coframe(amb, u0);
    let gam = gamma_matrices(&anholonomic(amb, &base, u0), m);
    let k = (0..m)
        .map(|j| {
            let mut kj = Mat::zeros(m, m);
            for (b, gb) in gam.iter().enumerate() {
                kj = kj.add(&part(gb).scale(th[(b, j)]));
            }
            kj
        })
        .collect();
    FrameField::Corrected { base: Box::new(base), u0: u0.to_vec(), k }
}

pub fn synchronous_frame(amb: &AmbientStructure, u0: &[f64]) -> FrameField {
    correction(amb, FrameField::GramSchmidt, u0, |g| g.clone())
}

pub fn darboux_frame(amb: &AmbientStructure, u0: &[f64]) -> FrameField {
    let jz = j0(amb.dim());
    correction(amb, FrameField::JAdapted, u0, |g| g.sub(&jz.mul(g).mul(&jz)).scale(0.5))
}

#[derive(Clone, Debug)]
pub struct DarbouxReport {
    /// |Γ^A_BC − ½J^A_D D_B J^D_C|
    pub e3: f64,
    /// |C^A_BC − ½J^A_D (D_B J^D_C − D_C J^D_B)|, weight-1 antisymmetrization
    pub e4: f64,
    /// same with weight ½ on the bracket, reported for comparison
    pub e4_half: f64,
    /// first-order constancy of ω in the frame at the point
    pub omega_drift: f64,
}

pub fn darboux_identity_check(amb: &AmbientStructure, frame: &FrameField, u0: &[f64]) -> DarbouxReport {
    let m = amb.dim();
    let gam = anholonomic(amb, frame, u0);
    let cc = cartan_from_gamma(&gam);
    let dj = covariant_derivative(&JField, amb, frame, u0);
    let j = frame.j_frame(amb, u0);
    let (mut e3, mut e4, mut e4h) = (0.0f64, 0.0f64, 0.0f64);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let (mut rb, mut rc) = (0.0, 0.0);
                for d in 0..m {
                    rb += j[(a, d)] * dj[idx(m, &[b, d, c])];
                    rc += j[(a, d)] * dj[idx(m, &[c, d, b])];
                }
                let i = idx(m, &[a, b, c]);
                e3 = e3.max((gam[i] - 0.5 * rb).abs());
                e4 = e4.max((cc[i] - 0.5 * (rb - rc)).abs());
                e4h = e4h.max((cc[i] - 0.25 * (rb - rc)).abs());
            }
        }
    }
    let w = |u: &[manifold_core::D1]| {
        let e = frame.vectors(amb, u);
        e.t().mul(&amb.omega(u)).mul(&e)
    };
    let drift = manifold_core::ambient::d_mat(u0, w).iter().fold(0.0f64, |acc, d| acc.max(d.max_abs()));
    DarbouxReport { e3, e4, e4_half: e4h, omega_drift: drift }
}
