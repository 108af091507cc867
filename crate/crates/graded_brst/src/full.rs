//! Unprojected graded space: bosonic w = z = (u, p_i^1, p_i^2), odd
//! generators η^A (bits 0..m) and 𝒫_A^α (bit m + αm + A).

use crate::grassmann::Grass;
use crate::system::{tangent, GradedSystem, GrassFn};
use connection_curvature::{anholonomic, cartan_from_gamma, frame_derivative, idx, CartanField};
use manifold_core::scalar::seed;
use manifold_core::{Dual, Scalar};
use phase_space::PhaseSpace;

/// Sign conventions for the momentum-type transformations:
/// δp = sp ∂Υ/∂u, δ𝒫 = sg ∂^LΥ/∂η.
#[derive(Clone, Copy, Debug)]
pub struct Signs {
    pub sp: f64,
    pub sg: f64,
}

pub const NILPOTENT: Signs = Signs { sp: -1.0, sg: 1.0 };

pub struct FullBrst<'a> {
    pub ps: PhaseSpace<'a>,
    pub signs: Signs,
}

impl<'a> FullBrst<'a> {
    pub fn new(ps: PhaseSpace<'a>) -> Self {
        FullBrst { ps, signs: NILPOTENT }
    }

    pub fn m(&self) -> usize {
        self.ps.dim()
    }

    pub fn eta(&self, a: usize) -> usize {
        a
    }

    pub fn ghost_p(&self, a: usize, al: usize) -> usize {
        self.m() + al * self.m() + a
    }

    /// Υ_α = η^A 𝔍_A^α − ½ C^A_BC η^B η^C 𝒫_A^α.
    pub fn upsilon<S: Scalar>(&self, w: &[S]) -> [Grass<S>; 2] {
        let m = self.m();
        let c = cartan_from_gamma(&anholonomic(self.ps.amb, &self.ps.frame, &w[..m]));
        let pa = self.ps.currents(w);
        let half = S::from_f64(0.5);
        let mk = |al: usize| {
            let mut y = Grass::zero();
            for a in 0..m {
                y = y.add(&Grass::gen(self.eta(a)).scale_re(pa[2 * a + al]));
            }
            for a in 0..m {
                let pg = Grass::gen(self.ghost_p(a, al));
                for b in 0..m {
                    for cc in 0..m {
                        let k = c[idx(m, &[a, b, cc])];
                        if k.is_zero() {
                            continue;
                        }
                        let t = Grass::gen(self.eta(b)).mul(&Grass::gen(self.eta(cc))).mul(&pg);
                        y = y.sub(&t.scale_re(half * k));
                    }
                }
            }
            y
        };
        [mk(0), mk(1)]
    }
}

impl<'a> GradedSystem for FullBrst<'a> {
    fn n_bos(&self) -> usize {
        3 * self.m()
    }

    fn n_gen(&self) -> usize {
        3 * self.m()
    }

    fn ghost(&self, g: usize) -> i32 {
        if g < self.m() {
            1
        } else {
            -1
        }
    }

    fn delta_bos<S: Scalar>(&self, w: &[S]) -> Vec<Grass<S>> {
        let m = self.m();
        let sp = S::from_f64(self.signs.sp);
        let mut out = Vec::with_capacity(3 * m);
        // δu^i = ∂Υ_1/∂p_i^1
        for i in 0..m {
            out.push(tangent(&self.upsilon(&seed(w, m + i))[0]));
        }
        let du: Vec<[Grass<Dual<S>>; 2]> = (0..m).map(|i| self.upsilon(&seed(w, i))).collect();
        for al in 0..2 {
            for d in &du {
                out.push(tangent(&d[al]).scale_re(sp));
            }
        }
        out
    }

    fn delta_gen<S: Scalar>(&self, w: &[S]) -> Vec<Grass<S>> {
        let m = self.m();
        let y = self.upsilon(w);
        let sg = S::from_f64(self.signs.sg);
        let mut out: Vec<Grass<S>> = (0..m).map(|a| y[0].right_deriv(self.ghost_p(a, 0))).collect();
        for yal in &y {
            for a in 0..m {
                out.push(yal.left_deriv(self.eta(a)).scale_re(sg));
            }
        }
        out
    }
}

/// χ^i = E^i_A η^A and 𝔍_A^α (layout [A][α]) on the unprojected space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FullObs {
    Chi,
    Current,
}

pub struct FullObsFn<'s, 'a>(pub &'s FullBrst<'a>, pub FullObs);

impl<'s, 'a> GrassFn for FullObsFn<'s, 'a> {
    fn eval<S: Scalar>(&self, w: &[S]) -> Vec<Grass<S>> {
        let m = self.0.m();
        match self.1 {
            FullObs::Chi => {
                let e = self.0.ps.frame.vectors(self.0.ps.amb, &w[..m]);
                (0..m)
                    .map(|i| (0..m).fold(Grass::zero(), |g, a| g.add(&Grass::gen(a).scale_re(e[(i, a)]))))
                    .collect()
            }
            FullObs::Current => self.0.ps.currents(w).into_iter().map(Grass::real).collect(),
        }
    }
}

/// What the contraction gives, worked out by hand for the given signs:
/// δ𝒫_A^α = sg (𝔍_A^α − C^D_AC η^C 𝒫_D^α) (layout [α][A]) and
/// δ𝔍_A^α = sp (η^C C^D_AC 𝔍_D^α − ½ θ̂_A(C^D_BC) η^B η^C 𝒫_D^α) (layout [A][α]).
pub fn derived_forms(sys: &FullBrst, w: &[f64]) -> (Vec<Grass<f64>>, Vec<Grass<f64>>) {
    let m = sys.m();
    let u = &w[..m];
    let c = cartan_from_gamma(&anholonomic(sys.ps.amb, &sys.ps.frame, u));
    let dc = frame_derivative(&CartanField, sys.ps.amb, &sys.ps.frame, u);
    let pa = sys.ps.currents(w);
    let eta = |a: usize| Grass::<f64>::gen(a);
    let mut dg = vec![Grass::zero(); 2 * m];
    let mut dj = vec![Grass::zero(); 2 * m];
    for al in 0..2 {
        for a in 0..m {
            let mut g = Grass::real(pa[2 * a + al]);
            let mut h = Grass::zero();
            for cc in 0..m {
                for d in 0..m {
                    let pd = Grass::gen(sys.ghost_p(d, al));
                    let k = c[idx(m, &[d, a, cc])];
                    g = g.sub(&eta(cc).mul(&pd).scale_re(k));
                    h = h.add(&eta(cc).scale_re(k * pa[2 * d + al]));
                    for b in 0..m {
                        let t = eta(b).mul(&eta(cc)).mul(&pd);
                        h = h.sub(&t.scale_re(0.5 * dc[idx(m, &[a, d, b, cc])]));
                    }
                }
            }
            dg[al * m + a] = g.scale_re(sys.signs.sg);
            dj[2 * a + al] = h.scale_re(sys.signs.sp);
        }
    }
    (dg, dj)
}
