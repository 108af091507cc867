//! Per-point BRST reports.

use crate::full::{derived_forms, FullBrst, FullObs, FullObsFn};
use crate::grassmann::{Grass, Mono};
use crate::plus::{theorem61_closed, theorem_closed, Obs, PlusBrst, PlusObs, Substitution, WRITTEN_SIGNS};
use crate::system::{apply_delta, coords, worst, worst_diff, Delta, GradedSystem, GrassFn};
use connection_curvature::{a13_rhs, darboux_frame, TensorField, WittenC};
use manifold_core::{AmbientStructure, Scalar};
use phase_space::{PhasePoint, PhaseSpace};

pub const T61_LABELS: [&str; 4] = ["T6.1-a", "T6.1-b", "T6.1-c", "T6.1-d"];
pub const T71_LABELS: [&str; 4] = ["T7.1-a", "T7.1-b", "T7.1-c", "T7.1-d"];
pub const NIL_LABELS: [&str; 4] = ["nil-u", "nil-chi", "nil-P", "nil-J"];
const OBS: [Obs; 4] = [Obs::U, Obs::Chi, Obs::Ghost, Obs::Current];

#[derive(Clone, Debug, Default)]
pub struct BrstReport {
    /// contraction against the closed forms, lines a..d
    pub t61: [f64; 4],
    /// worst (component, monomial) per line
    pub t61_at: [(usize, Mono); 4],
    /// δ² on u, χ, 𝒫|₊, 𝔍|₊
    pub nil: [f64; 4],
    pub nil_at: [(usize, Mono); 4],
    /// δ² on every coordinate and generator
    pub nil_coords: f64,
    /// largest coefficient of δ(coordinate) with the wrong ghost number
    pub ghost_number: f64,
    /// odd-derivation Leibniz rule on products of coordinates
    pub leibniz: f64,
}

impl BrstReport {
    pub fn t61_max(&self) -> f64 {
        self.t61.iter().fold(0.0, |a, &b| a.max(b))
    }

    pub fn nil_max(&self) -> f64 {
        self.nil.iter().fold(self.nil_coords, |a, &b| a.max(b))
    }
}

/// Products F_i F_j of coordinate functions.
struct Pairs<F> {
    f: F,
    pairs: Vec<(usize, usize)>,
}

impl<F: GrassFn> GrassFn for Pairs<F> {
    fn eval<S: Scalar>(&self, w: &[S]) -> Vec<Grass<S>> {
        let v = self.f.eval(w);
        self.pairs.iter().map(|&(i, j)| v[i].mul(&v[j])).collect()
    }
}

/// max |δ(F_iF_j) − δF_i F_j − (−1)^{|F_i|} F_i δF_j| over mixed pairs.
pub fn leibniz_residual<Y: GradedSystem>(sys: &Y, w: &[f64]) -> f64 {
    let c = coords(sys);
    let nb = sys.n_bos();
    let nt = nb + sys.n_gen();
    let mut pairs = Vec::new();
    for i in 0..nt {
        for j in 0..nt {
            if (i * 7 + j * 3) % 5 == 0 && i != j {
                pairs.push((i, j));
            }
        }
    }
    let v = c.eval(w);
    let dv = apply_delta(sys, &c, w);
    let lhs = apply_delta(sys, &Pairs { f: coords(sys), pairs: pairs.clone() }, w);
    let mut r = 0.0f64;
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let sign = if i >= nb { -1.0 } else { 1.0 };
        let rhs = dv[i].mul(&v[j]).add(&v[i].mul(&dv[j]).scale_re(sign));
        r = r.max(worst(&[lhs[k].sub(&rhs)]).0);
    }
    r
}

/// Largest coefficient of δz carrying ghost number other than gh(z) + 1.
pub fn ghost_number_violation<Y: GradedSystem>(sys: &Y, w: &[f64]) -> f64 {
    let gh = |m: Mono| -> i32 { (0..sys.n_gen()).filter(|k| m & (1 << k) != 0).map(|k| sys.ghost(k)).sum() };
    let mut r = 0.0f64;
    let bos = sys.delta_bos(w).into_iter().map(|g| (g, 1));
    let gen = sys.delta_gen(w).into_iter().enumerate().map(|(k, g)| (g, sys.ghost(k) + 1));
    for (g, want) in bos.chain(gen) {
        for (&m, c) in &g.terms {
            if gh(m) != want {
                r = r.max(c.norm());
            }
        }
    }
    r
}

pub fn brst_check(sys: &PlusBrst, pt: &PhasePoint) -> BrstReport {
    let w = sys.ps.to_plus(pt);
    let closed = theorem61_closed(sys, &w);
    let mut rep = BrstReport::default();
    for (k, o) in OBS.into_iter().enumerate() {
        let d = apply_delta(sys, &PlusObs(sys, o), &w);
        let (r, c, m) = worst_diff(&d, &closed[k]);
        rep.t61[k] = r;
        rep.t61_at[k] = (c, m);
        let (r, c, m) = worst(&apply_delta(sys, &Delta(sys, PlusObs(sys, o)), &w));
        rep.nil[k] = r;
        rep.nil_at[k] = (c, m);
    }
    rep.nil_coords = worst(&apply_delta(sys, &Delta(sys, coords(sys)), &w)).0;
    rep.ghost_number = ghost_number_violation(sys, &w);
    rep.leibniz = leibniz_residual(sys, &w);
    rep
}

/// Theorem 6.1 against its Darboux-frame rewriting, lines a..d.
pub fn witten_check(amb: &AmbientStructure, pt: &PhasePoint) -> [f64; 4] {
    let frame = darboux_frame(amb, &pt.u);
    let sys = PlusBrst::new(PhaseSpace::new(amb, frame.clone()), WRITTEN_SIGNS);
    let w = sys.ps.to_plus(pt);
    let six = theorem61_closed(&sys, &w);
    let sub = Substitution::Witten { c: WittenC.eval(amb, &frame, &pt.u), dc: a13_rhs(amb, &frame, &pt.u), dc_scale: 0.25 };
    let seven = theorem_closed(&sys, &w, &sub);
    let mut out = [0.0; 4];
    for k in 0..4 {
        out[k] = worst_diff(&six[k], &seven[k]).0;
    }
    out
}

/// The unprojected system with its own signs: δ² and the hand-derived
/// transformation rules.
#[derive(Clone, Debug, Default)]
pub struct ControlReport {
    pub nil: f64,
    pub chi: f64,
    pub ghost: f64,
    pub current: f64,
}

pub fn control_check(sys: &FullBrst, pt: &PhasePoint) -> ControlReport {
    let w = pt.z();
    let m = sys.m();
    let (dg, dj) = derived_forms(sys, &w);
    let du: Vec<Grass<f64>> = sys.delta_bos(&w).into_iter().take(m).collect();
    let ghost: Vec<Grass<f64>> = sys.delta_gen(&w).into_iter().skip(m).collect();
    ControlReport {
        nil: worst(&apply_delta(sys, &Delta(sys, coords(sys)), &w)).0,
        chi: worst_diff(&du, &FullObsFn(sys, FullObs::Chi).eval(&w)).0,
        ghost: worst_diff(&ghost, &dg).0,
        current: worst_diff(&apply_delta(sys, &FullObsFn(sys, FullObs::Current), &w), &dj).0,
    }
}
