//! Phase points, fixtures, and the space they live in.

use frames::{build_surface_frame, FrameField, SurfaceFrame};
use manifold_core::sample::{rng, sample_point, uniform};
use manifold_core::{AmbientStructure, SurfaceStructure};
use serde::{Deserialize, Serialize};

/// (x^α, u^i, p_i^α). `p[i][α]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhasePoint {
    pub x: [f64; 2],
    pub u: Vec<f64>,
    pub p: Vec<[f64; 2]>,
}

impl PhasePoint {
    pub fn new(u: Vec<f64>, p: Vec<[f64; 2]>) -> Self {
        PhasePoint { x: [0.0; 2], u, p }
    }

    pub fn zero_momenta(u: Vec<f64>) -> Self {
        let m = u.len();
        Self::new(u, vec![[0.0; 2]; m])
    }

    /// Vertical coordinates z = (u, p_·^1, p_·^2).
    pub fn z(&self) -> Vec<f64> {
        let mut z = self.u.clone();
        for a in 0..2 {
            z.extend(self.p.iter().map(|r| r[a]));
        }
        z
    }

    pub fn from_z(z: &[f64]) -> Self {
        let m = z.len() / 3;
        let p = (0..m).map(|i| [z[m + i], z[2 * m + i]]).collect();
        Self::new(z[..m].to_vec(), p)
    }

    pub fn to_fixture(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_fixture(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// u sampled in the chart domain, p uniform in [−1, 1].
pub fn sample_phase_points(amb: &AmbientStructure, n: usize, seed: u64) -> Vec<PhasePoint> {
    let mut r = rng(seed);
    let m = amb.dim();
    (0..n)
        .map(|_| {
            let u = sample_point(&amb.manifold, &mut r);
            let flat = uniform(&mut r, 2 * m, -1.0, 1.0);
            let p = (0..m).map(|i| [flat[2 * i], flat[2 * i + 1]]).collect();
            PhasePoint::new(u, p)
        })
        .collect()
}

/// Ambient model, real frame field and surface structure bundled together.
#[derive(Clone)]
pub struct PhaseSpace<'a> {
    pub amb: &'a AmbientStructure,
    pub frame: FrameField,
    pub surface: SurfaceStructure,
    pub sframe: SurfaceFrame,
}

impl<'a> PhaseSpace<'a> {
    pub fn new(amb: &'a AmbientStructure, frame: FrameField) -> Self {
        let surface = SurfaceStructure::standard();
        let sframe = build_surface_frame(&surface).expect("standard surface frame");
        PhaseSpace { amb, frame, surface, sframe }
    }

    pub fn dim(&self) -> usize {
        self.amb.dim()
    }
}
