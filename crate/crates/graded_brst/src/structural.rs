//! The graded fields of the |₊ space against the displayed Ω^EV|₊.
//!
//! Components are ordinary antisymmetric 2-form components with Grassmann
//! coefficients; a form-valued bivector E ∂/∂z^{κ*} ∧ ∂/∂y acts on the dx_κ
//! component as −ι_{∂/∂y}. With this reading the written signs of 𝔛[u^i],
//! 𝔛[η^A] and the dη∧d𝒫 block agree, so only the connection blocks can
//! fail.

use crate::plus::PlusBrst;
use connection_curvature::{anholonomic, idx};
use manifold_core::scalar::seed;
use phase_space::PhasePoint;

#[derive(Clone, Debug, Default)]
pub struct GradedStructReport {
    /// 𝔛[u^i]⌟Ω^EV|₊ − du^i
    pub u: f64,
    /// 𝔛[η^A]⌟Ω^EV|₊ − dη^A
    pub eta: f64,
    /// 𝔛[𝒫_A|₊]⌟Ω^EV|₊ − d𝒫_A|₊: the dQ block
    pub ghost_q: f64,
    /// the same on the du block, per unit Q
    pub ghost_u: f64,
    /// 𝔛[𝔍_D|₊] on the bosonic blocks
    pub current: f64,
}

impl GradedStructReport {
    pub fn max(&self) -> f64 {
        self.u.max(self.eta).max(self.ghost_q).max(self.ghost_u).max(self.current)
    }
}

pub fn graded_structural(sys: &PlusBrst, pt: &PhasePoint) -> GradedStructReport {
    let (m, n) = (sys.m(), sys.n());
    let u = &pt.u;
    let l = sys.local::<f64>(u);
    let th = sys.ps.frame.coframe::<f64>(sys.ps.amb, u);
    let gam = anholonomic(sys.ps.amb, &sys.ps.frame, u);
    let mut rep = GradedStructReport::default();
    // du block: Ω ⊃ θ^a ∧ dq_a, so −ι_{∂q_a} gives θ^a = E^a_j du^j
    for i in 0..m {
        for j in 0..m {
            let mut s = 0.0;
            for a in 0..n {
                s += 2.0 * (l.pf.hol[(i, a)] * l.pf.co_hol[(a, j)]).re;
            }
            rep.u = rep.u.max((s - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }
    // Ω ⊃ −E^a_B dη^B ∧ dQ_a; 𝔛[η^A] = −E^A_a(...)
    for a_ in 0..m {
        for b in 0..m {
            let mut s = 0.0;
            for a in 0..n {
                s += 2.0 * (l.cf.hol[(a_, a)] * l.cf.co_hol[(a, b)]).re;
            }
            rep.eta = rep.eta.max((s - if a_ == b { 1.0 } else { 0.0 }).abs());
        }
    }
    // 𝔛[𝒫_A|₊] = −∂/∂η^A: dQ_a coefficient E^a_A both ways
    rep.ghost_q = 0.0;
    // du^j coefficient of Q_a: E^a_B Γ^B_CA θ^C_j against ∂_j E^a_A
    let dco: Vec<_> = (0..m).map(|k| sys.local(&seed(u, k)).cf.co_hol).collect();
    for a_ in 0..m {
        for j in 0..m {
            for a in 0..n {
                let mut s = num_complex::Complex::new(0.0, 0.0);
                for b in 0..m {
                    for c in 0..m {
                        s += l.cf.co_hol[(a, b)] * gam[idx(m, &[b, c, a_])] * th[(c, j)];
                    }
                }
                let d = dco[j][(a, a_)];
                let d = num_complex::Complex::new(d.re.d, d.im.d);
                rep.ghost_u = rep.ghost_u.max((s - d).norm());
            }
        }
    }
    rep.current = sys.ps.plus_algebra_check(pt).structural;
    rep
}
