//! Multimomenta in the real, pseudoholomorphic and surface frames, the
//! projection ℙ₊ and the pseudoholomorphicity condition.

use crate::point::{PhasePoint, PhaseSpace};
use frames::EigenFrame;
use manifold_core::linalg::sym_eigen;
use manifold_core::{Complex64, Mat};
use num_complex::Complex;

/// p_A^α and the four complex blocks. Blocks are indexed by a only, the
/// surface has a single κ.
#[derive(Clone, Debug)]
pub struct FramedMomenta {
    pub p_frame: Vec<[f64; 2]>,
    /// p_a^κ
    pub hol_hol: Vec<Complex64>,
    /// p_{a*}^κ
    pub anti_hol: Vec<Complex64>,
    /// p_a^{κ*}
    pub hol_anti: Vec<Complex64>,
    /// p_{a*}^{κ*}
    pub anti_anti: Vec<Complex64>,
}

impl<'a> PhaseSpace<'a> {
    pub fn pseudo_frame(&self, u: &[f64]) -> EigenFrame<f64> {
        let e = self.frame.vectors(self.amb, u);
        EigenFrame::build(&self.amb.j(u), &e).expect("pseudoholomorphic frame")
    }

    pub fn to_framed(&self, pt: &PhasePoint) -> FramedMomenta {
        let m = self.dim();
        let e = self.frame.vectors(self.amb, &pt.u);
        let p_frame = (0..m)
            .map(|a| {
                let mut r = [0.0; 2];
                for (i, pi) in pt.p.iter().enumerate() {
                    r[0] += e[(i, a)] * pi[0];
                    r[1] += e[(i, a)] * pi[1];
                }
                r
            })
            .collect();
        let pf = self.pseudo_frame(&pt.u);
        let n = pf.half_dim();
        // E_α^κ: row κ of the surface coframe
        let sk: Vec<Complex64> = (0..2).map(|al| self.sframe.co_hol[(0, al)]).collect();
        let block = |vec: &Mat<Complex64>, a: usize, s: &[Complex64]| -> Complex64 {
            let mut acc = Complex::new(0.0, 0.0);
            for i in 0..m {
                for al in 0..2 {
                    acc += vec[(i, a)] * pt.p[i][al] * s[al];
                }
            }
            acc
        };
        let skc: Vec<Complex64> = sk.iter().map(|z| z.conj()).collect();
        FramedMomenta {
            p_frame,
            hol_hol: (0..n).map(|a| block(&pf.hol, a, &sk)).collect(),
            anti_hol: (0..n).map(|a| block(&pf.antihol, a, &sk)).collect(),
            hol_anti: (0..n).map(|a| block(&pf.hol, a, &skc)).collect(),
            anti_anti: (0..n).map(|a| block(&pf.antihol, a, &skc)).collect(),
        }
    }

    /// p_i^α = E^a_i p_a^κ E_κ^α + E^{a*}_i p_{a*}^κ E_κ^α + E^a_i p_a^{κ*} E_{κ*}^α + E^{a*}_i p_{a*}^{κ*} E_{κ*}^α.
    pub fn from_blocks(&self, u: &[f64], fm: &FramedMomenta) -> Vec<[f64; 2]> {
        let m = self.dim();
        let pf = self.pseudo_frame(u);
        let n = pf.half_dim();
        let sv: Vec<Complex64> = (0..2).map(|al| self.sframe.hol[(al, 0)]).collect();
        (0..m)
            .map(|i| {
                let mut r = [0.0; 2];
                for (al, ra) in r.iter_mut().enumerate() {
                    let mut acc = Complex::new(0.0, 0.0);
                    for a in 0..n {
                        acc += pf.co_hol[(a, i)] * fm.hol_hol[a] * sv[al];
                        acc += pf.co_antihol[(a, i)] * fm.anti_hol[a] * sv[al];
                        acc += pf.co_hol[(a, i)] * fm.hol_anti[a] * sv[al].conj();
                        acc += pf.co_antihol[(a, i)] * fm.anti_anti[a] * sv[al].conj();
                    }
                    *ra = acc.re;
                }
                r
            })
            .collect()
    }

    /// ℙ₊: zero the mixed blocks and reconstruct.
    pub fn project(&self, pt: &PhasePoint) -> PhasePoint {
        let mut fm = self.to_framed(pt);
        for z in fm.anti_hol.iter_mut().chain(fm.hol_anti.iter_mut()) {
            *z = Complex::new(0.0, 0.0);
        }
        PhasePoint { x: pt.x, u: pt.u.clone(), p: self.from_blocks(&pt.u, &fm) }
    }

    /// max_{j,α} |J^i_j p_i^α − ε^α_β p_j^β|.
    pub fn phe_residual(&self, pt: &PhasePoint) -> f64 {
        let m = self.dim();
        let j = self.amb.j(&pt.u);
        let eps = &self.surface.eps;
        let mut r = 0.0f64;
        for jj in 0..m {
            for al in 0..2 {
                let mut s = 0.0;
                for i in 0..m {
                    s += j[(i, jj)] * pt.p[i][al];
                }
                for be in 0..2 {
                    s -= eps[(al, be)] * pt.p[jj][be];
                }
                r = r.max(s.abs());
            }
        }
        r
    }

    /// Basis of solutions of the pseudoholomorphicity condition at u, as
    /// the null space of the linear map p ↦ Jᵀp − pεᵀ.
    pub fn phe_solutions(&self, u: &[f64]) -> Vec<Vec<[f64; 2]>> {
        let m = self.dim();
        let j = self.amb.j(u);
        let eps = &self.surface.eps;
        let nn = 2 * m;
        // unknown index k = 2i + α, equation index e = 2j + α
        let l = Mat::from_fn(nn, nn, |e, k| {
            let (jj, al) = (e / 2, e % 2);
            let (i, be) = (k / 2, k % 2);
            let mut v = 0.0;
            if be == al {
                v += j[(i, jj)];
            }
            if i == jj {
                v -= eps[(al, be)];
            }
            v
        });
        let (vals, vecs) = sym_eigen(&l.t().mul(&l));
        (0..nn)
            .filter(|&c| vals[c].abs() < 1e-12)
            .map(|c| (0..m).map(|i| [vecs[(2 * i, c)], vecs[(2 * i + 1, c)]]).collect())
            .collect()
    }
}

pub fn max_block(b: &[Complex64]) -> f64 {
    b.iter().fold(0.0, |m, z| m.max(z.norm()))
}
