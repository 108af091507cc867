//! Graded phase points: a bosonic point plus numerical ghost multimomenta
//! 𝒫_A^α (frame index), projected by ℙ₊₊ with the same vielbein dictionary
//! as the momenta.

use manifold_core::AmbientStructure;
use phase_space::{sample_phase_points, FramedMomenta, PhasePoint, PhaseSpace};

#[derive(Clone, Debug, PartialEq)]
pub struct GradedPhasePoint {
    pub base: PhasePoint,
    /// 𝒫_A^α, layout [A][α]
    pub ghost: Vec<[f64; 2]>,
}

pub fn sample_graded_points(amb: &AmbientStructure, n: usize, seed: u64) -> Vec<GradedPhasePoint> {
    let base = sample_phase_points(amb, n, seed);
    let extra = sample_phase_points(amb, n, seed.wrapping_add(0x9e37_79b9));
    base.into_iter().zip(extra).map(|(b, e)| GradedPhasePoint { base: b, ghost: e.p }).collect()
}

impl GradedPhasePoint {
    /// The ghost momenta rewritten with a holonomic index, 𝒫_i = θ^A_i 𝒫_A,
    /// as a bosonic point at the same u.
    pub fn ghost_point(&self, ps: &PhaseSpace) -> PhasePoint {
        let th = ps.frame.coframe::<f64>(ps.amb, &self.base.u);
        let m = ps.dim();
        let p = (0..m)
            .map(|i| {
                let mut v = [0.0; 2];
                for (a, g) in self.ghost.iter().enumerate() {
                    v[0] += th[(a, i)] * g[0];
                    v[1] += th[(a, i)] * g[1];
                }
                v
            })
            .collect();
        PhasePoint::new(self.base.u.clone(), p)
    }

    fn from_ghost_point(&self, ps: &PhaseSpace, gp: &PhasePoint) -> Vec<[f64; 2]> {
        let e = ps.frame.vectors::<f64>(ps.amb, &self.base.u);
        (0..ps.dim())
            .map(|a| {
                let mut v = [0.0; 2];
                for (i, g) in gp.p.iter().enumerate() {
                    v[0] += e[(i, a)] * g[0];
                    v[1] += e[(i, a)] * g[1];
                }
                v
            })
            .collect()
    }

    pub fn ghost_blocks(&self, ps: &PhaseSpace) -> FramedMomenta {
        ps.to_framed(&self.ghost_point(ps))
    }

    /// Largest error of rebuilding p and 𝒫 from their four frame blocks.
    pub fn reconstruction_residual(&self, ps: &PhaseSpace) -> f64 {
        let mut r = 0.0f64;
        for pt in [self.base.clone(), self.ghost_point(ps)] {
            let back = ps.from_blocks(&pt.u, &ps.to_framed(&pt));
            for (x, y) in back.iter().zip(&pt.p) {
                r = r.max((x[0] - y[0]).abs()).max((x[1] - y[1]).abs());
            }
        }
        r
    }

    /// max of the pseudoholomorphicity residuals of p and 𝒫.
    pub fn phe_residual(&self, ps: &PhaseSpace) -> f64 {
        ps.phe_residual(&self.base).max(ps.phe_residual(&self.ghost_point(ps)))
    }
}

/// ℙ₊₊: drop the mixed blocks of both p and 𝒫.
pub fn graded_project(ps: &PhaseSpace, pt: &GradedPhasePoint) -> GradedPhasePoint {
    let base = ps.project(&pt.base);
    let gp = ps.project(&pt.ghost_point(ps));
    GradedPhasePoint { ghost: pt.from_ghost_point(ps, &gp), base }
}
