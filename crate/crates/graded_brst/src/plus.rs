//! The BRST current on the doubly projected space ℙ₊₊.
//!
//! Bosonic w = (u^i, Re q_a, Im q_a) as in the bosonic |₊ space; odd
//! generators η^A (bits 0..m), Q_a = 𝒫_a^κ (m + a) and Q̄_a = 𝒫_{a*}^{κ*}
//! (m + n + a). Everything is stored through its κ component: the
//! dx_κ coefficient of a horizontal 1-form F_α dx^α is E^κ_α F_α.

use crate::full::Signs;
use crate::grassmann::Grass;
use crate::system::{tangent, GradedSystem, GrassFn};
use connection_curvature::{anholonomic, cartan_from_gamma, covariant_derivative, idx, CartanField};
use frames::{combine_frames, CombinedFrame, EigenFrame};
use manifold_core::scalar::{seed, seed_vec};
use manifold_core::{Complex64, Mat, Scalar};
use num_complex::Complex;
use phase_space::PhaseSpace;

/// The fields as written: δ𝔍 = 𝔛[𝔍|₊]⌟dΥ|₊ and 𝔛[𝒫_A|₊] = −∂/∂η^A.
pub const WRITTEN_SIGNS: Signs = Signs { sp: 1.0, sg: -1.0 };

pub struct PlusBrst<'a> {
    pub ps: PhaseSpace<'a>,
    pub signs: Signs,
}

pub(crate) fn cx<S: Scalar>(z: Complex64) -> Complex<S> {
    Complex::new(S::from_f64(z.re), S::from_f64(z.im))
}

fn re<S: Scalar>(x: S) -> Complex<S> {
    Complex::new(x, S::zero())
}

pub(crate) struct Local<S: Scalar> {
    pub pf: EigenFrame<S>,
    pub cf: CombinedFrame<S>,
}

impl<'a> PlusBrst<'a> {
    pub fn new(ps: PhaseSpace<'a>, signs: Signs) -> Self {
        PlusBrst { ps, signs }
    }

    pub fn m(&self) -> usize {
        self.ps.dim()
    }

    pub fn n(&self) -> usize {
        self.m() / 2
    }

    pub fn q_gen(&self, a: usize) -> usize {
        self.m() + a
    }

    pub fn qbar_gen(&self, a: usize) -> usize {
        self.m() + self.n() + a
    }

    pub(crate) fn local<S: Scalar>(&self, u: &[S]) -> Local<S> {
        let e = self.ps.frame.vectors(self.ps.amb, u);
        let pf = EigenFrame::build(&self.ps.amb.j(u), &e).expect("pseudoholomorphic frame");
        let cf = combine_frames(&e, &pf).expect("combined frame");
        Local { pf, cf }
    }

    fn kappa<S: Scalar>(&self, al: usize) -> Complex<S> {
        cx(self.ps.sframe.co_hol[(0, al)])
    }

    /// 𝔍_A|₊ components p_A^α, layout [A][α].
    fn currents<S: Scalar>(&self, w: &[S]) -> Vec<S> {
        self.ps.currents_plus(w)
    }

    /// 𝒫_A|κ = E^a_A Q_a.
    fn ghost_kappa<S: Scalar>(&self, l: &Local<S>, a_idx: usize) -> Grass<S> {
        let mut g = Grass::zero();
        for a in 0..self.n() {
            g = g.add(&Grass::gen(self.q_gen(a)).scale(l.cf.co_hol[(a, a_idx)]));
        }
        g
    }

    /// [Υ|₊_κ, Υ|₊_κ*] with Υ_α = η^A 𝔍_A^α − ½ C^A_BC η^B η^C 𝒫_A^α|₊.
    pub fn upsilon<S: Scalar>(&self, w: &[S]) -> [Grass<S>; 2] {
        let (m, n) = (self.m(), self.n());
        let u = &w[..m];
        let l = self.local(u);
        let c = cartan_from_gamma(&anholonomic(self.ps.amb, &self.ps.frame, u));
        let pa = self.currents(w);
        let half = S::from_f64(0.5);
        let mut ys = Vec::with_capacity(2);
        for al in 0..2 {
            let s: Complex<S> = cx(self.ps.sframe.hol[(al, 0)]);
            let mut y = Grass::zero();
            for a in 0..m {
                y = y.add(&Grass::gen(a).scale_re(pa[2 * a + al]));
            }
            for a in 0..m {
                let mut pg = Grass::zero();
                for b in 0..n {
                    let e = l.cf.co_hol[(b, a)] * s;
                    pg = pg.add(&Grass::gen(self.q_gen(b)).scale(e));
                    pg = pg.add(&Grass::gen(self.qbar_gen(b)).scale(e.conj()));
                }
                for b in 0..m {
                    for cc in 0..m {
                        let k = c[idx(m, &[a, b, cc])];
                        if k.is_zero() {
                            continue;
                        }
                        let t = Grass::gen(b).mul(&Grass::gen(cc)).mul(&pg);
                        y = y.sub(&t.scale_re(half * k));
                    }
                }
            }
            ys.push(y);
        }
        let mk = |conj: bool| {
            let mut out = Grass::zero();
            for (al, y) in ys.iter().enumerate() {
                let k: Complex<S> = self.kappa(al);
                out = out.add(&y.scale(if conj { k.conj() } else { k }));
            }
            out
        };
        [mk(false), mk(true)]
    }
}

impl<'a> GradedSystem for PlusBrst<'a> {
    fn n_bos(&self) -> usize {
        2 * self.m()
    }

    fn n_gen(&self) -> usize {
        2 * self.m()
    }

    fn ghost(&self, g: usize) -> i32 {
        if g < self.m() {
            1
        } else {
            -1
        }
    }

    fn delta_bos<S: Scalar>(&self, w: &[S]) -> Vec<Grass<S>> {
        let (m, n) = (self.m(), self.n());
        let u = &w[..m];
        let l = self.local(u);
        let half = S::from_f64(0.5);
        let i_unit = Complex::new(S::zero(), S::one());
        // Wirtinger derivatives ∂Υ_κ/∂q_a and ∂Υ_κ*/∂q̄_a
        let mut dq = Vec::with_capacity(n);
        let mut dqb = Vec::with_capacity(n);
        for a in 0..n {
            let tx = self.upsilon(&seed(w, m + a)).map(|g| tangent(&g));
            let ty = self.upsilon(&seed(w, m + n + a)).map(|g| tangent(&g));
            dq.push(tx[0].sub(&ty[0].scale(i_unit)).scale_re(half));
            dqb.push(tx[1].add(&ty[1].scale(i_unit)).scale_re(half));
        }
        let mut out = Vec::with_capacity(2 * m);
        for i in 0..m {
            let mut g = Grass::zero();
            for a in 0..n {
                let e = l.pf.hol[(i, a)];
                g = g.add(&dq[a].scale(e)).add(&dqb[a].scale(e.conj()));
            }
            out.push(g);
        }
        // δ𝔍_D|κ = sp 𝔛[𝔍_D|₊](Υ_κ), then δq from δ(E^b_D q_b)
        let sp = S::from_f64(self.signs.sp);
        let dj: Vec<[Grass<S>; 2]> = (0..m)
            .map(|d| {
                let x = self.ps.hamiltonian_field_plus(w, d);
                self.upsilon(&seed_vec(w, &x)).map(|g| tangent(&g).scale_re(sp))
            })
            .collect();
        let dco: Vec<Mat<Complex<S>>> = (0..m)
            .map(|k| self.local(&seed(u, k)).cf.co_hol.map(|z| Complex::new(z.re.d, z.im.d)))
            .collect();
        let q: Vec<Complex<S>> = (0..n).map(|a| Complex::new(w[m + a], w[m + n + a])).collect();
        let mut dqv = Vec::with_capacity(n);
        let mut dqbv = Vec::with_capacity(n);
        for a in 0..n {
            let (mut g, mut gb) = (Grass::zero(), Grass::zero());
            for d in 0..m {
                let mut corr = Grass::zero();
                let mut corrb = Grass::zero();
                for (k, du) in out.iter().enumerate().take(m) {
                    for b in 0..n {
                        let e = dco[k][(b, d)];
                        corr = corr.add(&du.scale(e * q[b]));
                        corrb = corrb.add(&du.scale((e * q[b]).conj()));
                    }
                }
                let h = l.cf.hol[(d, a)];
                g = g.add(&dj[d][0].sub(&corr).scale(h));
                gb = gb.add(&dj[d][1].sub(&corrb).scale(h.conj()));
            }
            dqv.push(g);
            dqbv.push(gb);
        }
        for a in 0..n {
            out.push(dqv[a].add(&dqbv[a]).scale_re(half));
        }
        for a in 0..n {
            out.push(dqv[a].sub(&dqbv[a]).scale(Complex::new(S::zero(), -half)));
        }
        out
    }

    fn delta_gen<S: Scalar>(&self, w: &[S]) -> Vec<Grass<S>> {
        let (m, n) = (self.m(), self.n());
        let l = self.local(&w[..m]);
        let y = self.upsilon(w);
        let sg = S::from_f64(self.signs.sg);
        let mut out = Vec::with_capacity(2 * m);
        for a in 0..m {
            let mut g = Grass::zero();
            for b in 0..n {
                let h = l.cf.hol[(a, b)];
                g = g.add(&y[0].right_deriv(self.q_gen(b)).scale(h));
                g = g.add(&y[1].right_deriv(self.qbar_gen(b)).scale(h.conj()));
            }
            out.push(g);
        }
        for conj in [false, true] {
            for b in 0..n {
                let mut g = Grass::zero();
                for a in 0..m {
                    let h = l.cf.hol[(a, b)];
                    let h = if conj { h.conj() } else { h };
                    g = g.add(&y[conj as usize].left_deriv(a).scale(h));
                }
                out.push(g.scale_re(sg));
            }
        }
        out
    }
}

/// Observables of Theorem 6.1, as Grassmann-valued functions on w.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Obs {
    /// u^i
    U,
    /// χ^i = E^i_A η^A
    Chi,
    /// 𝒫_A|κ
    Ghost,
    /// 𝔍_A|κ
    Current,
}

pub struct PlusObs<'s, 'a>(pub &'s PlusBrst<'a>, pub Obs);

impl<'s, 'a> GrassFn for PlusObs<'s, 'a> {
    fn eval<S: Scalar>(&self, w: &[S]) -> Vec<Grass<S>> {
        let sys = self.0;
        let m = sys.m();
        match self.1 {
            Obs::U => w[..m].iter().map(|&x| Grass::real(x)).collect(),
            Obs::Chi => {
                let e = sys.ps.frame.vectors(sys.ps.amb, &w[..m]);
                (0..m)
                    .map(|i| (0..m).fold(Grass::zero(), |g, a| g.add(&Grass::gen(a).scale_re(e[(i, a)]))))
                    .collect()
            }
            Obs::Ghost => {
                let l = sys.local(&w[..m]);
                (0..m).map(|a| sys.ghost_kappa(&l, a)).collect()
            }
            Obs::Current => {
                let pa = sys.currents(w);
                (0..m)
                    .map(|a| {
                        let v = (0..2).fold(Complex::new(S::zero(), S::zero()), |s, al| s + sys.kappa::<S>(al) * re(pa[2 * a + al]));
                        Grass::scalar(v)
                    })
                    .collect()
            }
        }
    }
}

/// Closed forms of Theorem 6.1 at w, in the order U, Chi, Ghost, Current.
pub fn theorem61_closed(sys: &PlusBrst, w: &[f64]) -> [Vec<Grass<f64>>; 4] {
    theorem_closed(sys, w, &Substitution::Cartan)
}

/// Which tensors stand in for C and D_A C in the closed forms.
pub enum Substitution {
    /// C and D_A C of the frame itself.
    Cartan,
    /// C = ½J D_[B J_C] and the expansion of D_A C given by `dc`, scaled.
    Witten { c: Vec<f64>, dc: Vec<f64>, dc_scale: f64 },
}

pub fn theorem_closed(sys: &PlusBrst, w: &[f64], sub: &Substitution) -> [Vec<Grass<f64>>; 4] {
    let m = sys.m();
    let u = &w[..m];
    let (c, dc, scale) = match sub {
        Substitution::Cartan => {
            let c = cartan_from_gamma(&anholonomic(sys.ps.amb, &sys.ps.frame, u));
            let dc = covariant_derivative(&CartanField, sys.ps.amb, &sys.ps.frame, u);
            (c, dc, -0.5)
        }
        Substitution::Witten { c, dc, dc_scale } => (c.clone(), dc.clone(), -*dc_scale),
    };
    let chi = PlusObs(sys, Obs::Chi).eval(w);
    let ghost = PlusObs(sys, Obs::Ghost).eval(w);
    let cur = PlusObs(sys, Obs::Current).eval(w);
    let eta = |a: usize| Grass::<f64>::gen(a);
    let mut dghost = Vec::with_capacity(m);
    let mut dcur = Vec::with_capacity(m);
    for a in 0..m {
        let mut g = cur[a].clone();
        for b in 0..m {
            for cc in 0..m {
                g = g.add(&eta(cc).mul(&ghost[b]).scale_re(c[idx(m, &[b, a, cc])]));
            }
        }
        dghost.push(g.scale_re(-1.0));
        let mut h = Grass::zero();
        for cc in 0..m {
            for d in 0..m {
                h = h.add(&eta(cc).mul(&cur[d]).scale_re(c[idx(m, &[d, a, cc])]));
                for b in 0..m {
                    let k = scale * dc[idx(m, &[a, d, b, cc])];
                    h = h.add(&eta(b).mul(&eta(cc)).mul(&ghost[d]).scale_re(k));
                }
            }
        }
        dcur.push(h);
    }
    [chi, vec![Grass::zero(); m], dghost, dcur]
}
