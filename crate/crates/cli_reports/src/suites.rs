//! One function per suite. Each returns raw outcomes; tolerances are applied
//! when the report is assembled.

use connection_curvature::{
    anholonomic, appendix2_identity_suite, cartan_from_brackets, cartan_from_gamma, covariant_derivative, darboux_frame,
    darboux_identity_check, idx, synchronous_frame, JField,
};
use frames::identities::GATED as FRAME_GATED;
use frames::{verify_frame_identities, FrameField};
use graded_brst::{
    brst_check, control_check, graded_project, graded_structural, sample_graded_points, witten_check, FullBrst, PlusBrst,
    NIL_LABELS, WRITTEN_SIGNS, T61_LABELS, T71_LABELS,
};
use manifold_core::sample::sample_points;
use manifold_core::{AmbientStructure, SurfaceStructure};
use phase_space::{max_block, sample_phase_points, PhasePoint, PhaseSpace};
use rayon::prelude::*;

use crate::config::Suite;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Kind {
    /// residual, passes below the tolerance
    Below,
    /// certified nonzero: passes above the fixed threshold
    Above(f64),
    Info,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: String,
    pub anchor: String,
    pub kind: Kind,
    pub value: f64,
    pub points: usize,
}

fn below(id: &str, anchor: &str, value: f64, points: usize) -> Outcome {
    Outcome { id: id.into(), anchor: anchor.into(), kind: Kind::Below, value, points }
}

fn info(id: &str, note: &str, value: f64, points: usize) -> Outcome {
    Outcome { id: id.into(), anchor: note.into(), kind: Kind::Info, value, points }
}

/// Models whose J is integrable; DJ must vanish there.
pub const KAHLER: [&str; 2] = ["flat_kahler", "sphere"];

/// Pinned max |N| at the origin for the strictly almost-Kähler models.
pub fn nijenhuis_oracle(name: &str) -> Option<f64> {
    (name == "nilmanifold").then_some(1.0)
}

/// NaN is worse than anything.
fn worse(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| worse(m, x.abs()))
}

fn diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| worse(m, (x - y).abs()))
}

/// Per-point vectors of residuals in parallel, reduced by max in point order.
fn worst<P: Sync>(pts: &[P], k: usize, f: impl Fn(&P) -> Vec<f64> + Sync) -> Vec<f64> {
    let per: Vec<Vec<f64>> = pts.par_iter().map(&f).collect();
    per.iter().fold(vec![0.0; k], |acc, v| acc.iter().zip(v).map(|(a, b)| worse(*a, *b)).collect())
}

pub fn run(suite: Suite, amb: &AmbientStructure, n: usize, seed: u64) -> Vec<Outcome> {
    match suite {
        Suite::Frames => frames_suite(amb, n, seed),
        Suite::Appendix2 => appendix2_suite(amb, n, seed),
        Suite::Darboux => darboux_suite(amb, n, seed),
        Suite::Currents => currents_suite(amb, n, seed),
        Suite::CurrentsPlus => currents_plus_suite(amb, n, seed),
        Suite::Brst => brst_suite(amb, n, seed),
        Suite::Witten => witten_suite(amb, n, seed),
        Suite::Nijenhuis => nijenhuis_suite(amb, n, seed),
    }
}

fn letter(i: usize) -> char {
    (b'a' + i as u8) as char
}

const REAL_FRAMES: [FrameField; 2] = [FrameField::GramSchmidt, FrameField::JAdapted];

fn frames_suite(amb: &AmbientStructure, n: usize, seed: u64) -> Vec<Outcome> {
    let pts = sample_points(&amb.manifold, n, seed);
    let surf = SurfaceStructure::standard();
    let k = FRAME_GATED.len();
    let r = worst(&pts, k + 1, |u| {
        let mut v = vec![0.0; k + 1];
        for f in &REAL_FRAMES {
            match verify_frame_identities(amb, f, &surf, u) {
                Ok(rep) => {
                    for (i, id) in FRAME_GATED.iter().enumerate() {
                        v[i] = worse(v[i], rep.get(id).unwrap_or(f64::NAN));
                    }
                }
                Err(_) => v[..k].fill(f64::INFINITY),
            }
            let c = diff(&cartan_from_gamma(&anholonomic(amb, f, u)), &cartan_from_brackets(amb, f, u));
            v[k] = worse(v[k], c);
        }
        v
    });
    let mut out: Vec<Outcome> = FRAME_GATED
        .iter()
        .zip(&r)
        .map(|(id, &x)| {
            let anchor = if id.starts_with("EIG") { "eigenvector relations".to_string() } else { format!("App. I {id}") };
            below(id, &anchor, x, n)
        })
        .collect();
    out.push(below("CSF", "Eq. (CSF)", r[k], n));
    if amb.name() == "sphere" {
        let cot = &pts[..n.min(20)];
        let r = worst(cot, 1, |u| {
            let c = cartan_from_gamma(&anholonomic(amb, &FrameField::GramSchmidt, u));
            vec![(c[idx(2, &[1, 0, 1])] + u[0].cos() / u[0].sin()).abs()]
        });
        out.push(below("CSF-cot", "Eq. (CSF), sphere C = -cot(theta)", r[0], cot.len()));
    }
    out
}

const A2_INFO: [&str; 3] = ["A2", "A3-partial", "A13-direct"];

fn appendix2_suite(amb: &AmbientStructure, n: usize, seed: u64) -> Vec<Outcome> {
    use connection_curvature::appendix::{GATED, GATED_A13};
    let pts = sample_points(&amb.manifold, n, seed);
    let ids: Vec<&str> = GATED.iter().copied().chain([GATED_A13]).chain(A2_INFO).collect();
    let kahler = KAHLER.contains(&amb.name());
    let k = ids.len();
    let r = worst(&pts, k + 1, |u| {
        let df = darboux_frame(amb, u);
        let rep = appendix2_identity_suite(amb, &df, u);
        let mut v: Vec<f64> = ids.iter().map(|id| rep.get(id).unwrap_or(f64::NAN)).collect();
        v.push(if kahler { max_abs(&covariant_derivative(&JField, amb, &df, u)) } else { 0.0 });
        v
    });
    let mut out = Vec::new();
    for (i, id) in ids.iter().enumerate() {
        let anchor = format!("App. II A.{}", id.trim_start_matches('A'));
        if A2_INFO.contains(id) {
            out.push(info(id, &anchor, r[i], n));
        } else {
            out.push(below(id, &anchor, r[i], n));
        }
    }
    if kahler {
        out.push(below("A-DJ", "App. II, Kahler control DJ = 0", r[k], n));
    }
    out
}

fn darboux_suite(amb: &AmbientStructure, n: usize, seed: u64) -> Vec<Outcome> {
    let pts = sample_points(&amb.manifold, n, seed);
    let r = worst(&pts, 4, |u| {
        let d = darboux_identity_check(amb, &darboux_frame(amb, u), u);
        vec![d.e3, d.e4, d.e4_half, d.omega_drift]
    });
    vec![
        below("E3", "Sec. 7 Prop., Gamma = 1/2 J DJ", r[0], n),
        below("E4", "Sec. 7 Cor., C = 1/2 J D[J]", r[1], n),
        info("E4-half", "E4 with weight 1/2 antisymmetrization", r[2], n),
        info("omega-drift", "first-order constancy of omega", r[3], n),
    ]
}

fn currents_suite(amb: &AmbientStructure, n: usize, seed: u64) -> Vec<Outcome> {
    let pts = sample_phase_points(amb, n, seed);
    let r = worst(&pts, 6, |pt| {
        let mut v = vec![0.0; 6];
        for f in &REAL_FRAMES {
            let b = PhaseSpace::new(amb, f.clone()).bracket_algebra_check(pt);
            for (x, y) in v.iter_mut().zip([b.algebra, b.structural, b.exactness, b.antisymmetry, b.max_bracket, b.holonomic]) {
                *x = worse(*x, y);
            }
        }
        v
    });
    let mut out = vec![
        below("T21", "Thm 2.1", r[0], n),
        below("SE-full", "structural eq., X[J] . Omega^V = d^V J", r[1], n),
        below("OmegaV", "Omega^V = -d^V Theta^V", r[2], n),
        info("T21-antisymmetry", "bracket antisymmetry", r[3], n),
        info("T21-max-bracket", "largest single bracket", r[4], n),
    ];
    if amb.name() == "flat_kahler" {
        out.push(below("T21-abelian", "Thm 2.1, flat: brackets vanish", r[4], n));
    }
    let p0 = &pts[0];
    let s = PhaseSpace::new(amb, synchronous_frame(amb, &p0.u)).bracket_algebra_check(p0);
    out.push(below("T21-sync", "Remark after Thm 2.1, synchronous frame", worse(s.algebra, s.max_bracket), 1));

    let ps = PhaseSpace::new(amb, FrameField::GramSchmidt);
    let per: Vec<[f64; 2]> = pts
        .par_iter()
        .map(|pt| {
            let mut mixed = 0.0;
            let mut witness = 0.0f64;
            for s in ps.phe_solutions(&pt.u) {
                let sp = PhasePoint::new(pt.u.clone(), s);
                let fm = ps.to_framed(&sp);
                mixed = worse(mixed, ps.phe_residual(&sp));
                mixed = worse(mixed, max_block(&fm.anti_hol).max(max_block(&fm.hol_anti)));
                witness = witness.max(max_block(&fm.hol_hol).min(max_block(&fm.anti_anti)));
            }
            [mixed, witness]
        })
        .collect();
    let mixed = per.iter().fold(0.0, |m, x| worse(m, x[0]));
    let witness = per.iter().fold(f64::INFINITY, |m, x| m.min(x[1]));
    out.push(below("P3-mixed", "Sec. 3 Prop., mixed blocks of (phe) solutions", mixed, n));
    out.push(Outcome {
        id: "P3-witness".into(),
        anchor: "Sec. 3 Prop., unmixed blocks stay free".into(),
        kind: Kind::Above(1e-3),
        value: witness,
        points: n,
    });
    out
}

fn currents_plus_suite(amb: &AmbientStructure, n: usize, seed: u64) -> Vec<Outcome> {
    let pts = sample_phase_points(amb, n, seed);
    let ps = PhaseSpace::new(amb, FrameField::GramSchmidt);
    let r = worst(&pts, 10, |pt| {
        let p = ps.plus_algebra_check(&ps.project(pt));
        vec![
            p.algebra,
            p.structural,
            p.pullback_exactness,
            p.antisymmetry,
            p.ls_structural,
            p.ls_algebra,
            p.per_component_structural,
            p.per_component_algebra,
            p.displayed_omega,
            p.displayed_omega_flipped,
        ]
    });
    vec![
        below("T41", "Thm 4.1", r[0], n),
        below("SE-plus", "structural eq. on the |+ bundle", r[1], n),
        below("OmegaV-plus", "pulled-back Omega^V exact", r[2], n),
        info("T41-antisymmetry", "bracket antisymmetry", r[3], n),
        info("SE-plus-lsq", "structural residual of the least-squares field", r[4], n),
        info("T41-lsq", "algebra with least-squares fields", r[5], n),
        info("SE-plus-per-component", "one least-squares field per horizontal component", r[6], n),
        info("T41-per-component", "algebra with per-component fields", r[7], n),
        info("OmegaV-plus-displayed", "displayed Omega^V|+ against the pullback", r[8], n),
        info("OmegaV-plus-flipped", "same with the connection term reversed", r[9], n),
    ]
}

const GRADED_IDS: [&str; 5] = ["SE-graded-u", "SE-graded-eta", "SE-graded-Pq", "SE-graded-Pu", "SE-graded-J"];

fn brst_suite(amb: &AmbientStructure, n: usize, seed: u64) -> Vec<Outcome> {
    let pts = sample_phase_points(amb, n, seed);
    let sys = PlusBrst::new(PhaseSpace::new(amb, FrameField::GramSchmidt), WRITTEN_SIGNS);
    let control = FullBrst::new(PhaseSpace::new(amb, FrameField::GramSchmidt));
    let r = worst(&pts, 18, |pt| {
        let b = brst_check(&sys, pt);
        let g = graded_structural(&sys, pt);
        let c = control_check(&control, pt);
        let mut v = b.t61.to_vec();
        v.extend(b.nil);
        v.extend([b.nil_coords, b.ghost_number, b.leibniz]);
        v.extend([g.u, g.eta, g.ghost_q, g.ghost_u, g.current]);
        v.extend([c.nil, c.chi.max(c.ghost).max(c.current)]);
        v
    });
    let mut out = Vec::new();
    for (i, l) in T61_LABELS.iter().enumerate() {
        out.push(below(&l.replace(['.', '-'], ""), &format!("Thm 6.1 ({})", letter(i)), r[i], n));
    }
    for (i, l) in NIL_LABELS.iter().enumerate() {
        out.push(below(l, "Thm 6.1, delta^2 = 0", r[4 + i], n));
    }
    out.push(below("nil-coords", "delta^2 = 0 on every coordinate", r[8], n));
    out.push(below("ghost-number", "delta raises ghost number by one", r[9], n));
    out.push(below("odd-Leibniz", "delta is an odd derivation", r[10], n));
    for (i, id) in GRADED_IDS.iter().enumerate() {
        out.push(below(id, "graded structural eq. against Omega^EV|+", r[11 + i], n));
    }
    out.push(info("control-nil", "delta^2 of the unprojected system", r[16], n));
    out.push(info("control-derived", "unprojected system against hand-derived forms", r[17], n));

    let ps = &sys.ps;
    let gpts = sample_graded_points(amb, n, seed);
    let g = worst(&gpts, 3, |gp| {
        let once = graded_project(ps, gp);
        let twice = graded_project(ps, &once);
        let mut idem = 0.0;
        for (x, y) in once.ghost.iter().zip(&twice.ghost).chain(once.base.p.iter().zip(&twice.base.p)) {
            idem = worse(idem, diff(x, y));
        }
        vec![gp.reconstruction_residual(ps), once.phe_residual(ps), idem]
    });
    out.push(below("Ppp-reconstruction", "P++ block decomposition", g[0], n));
    out.push(below("Ppp-phe", "P++ image satisfies (phe) for p and ghost momenta", g[1], n));
    out.push(below("Ppp-idempotent", "P++ is a projection", g[2], n));
    out
}

fn witten_suite(amb: &AmbientStructure, n: usize, seed: u64) -> Vec<Outcome> {
    let pts = sample_phase_points(amb, n, seed);
    let r = worst(&pts, 4, |pt| witten_check(amb, pt).to_vec());
    T71_LABELS
        .iter()
        .enumerate()
        .map(|(i, l)| below(&l.replace(['.', '-'], ""), &format!("Thm 7.1 ({})", letter(i)), r[i], n))
        .collect()
}

fn nijenhuis_suite(amb: &AmbientStructure, n: usize, seed: u64) -> Vec<Outcome> {
    let pts = sample_points(&amb.manifold, n, seed);
    let r = worst(&pts, 1, |u| vec![max_abs(&amb.nijenhuis(u))]);
    match nijenhuis_oracle(amb.name()) {
        Some(pinned) => {
            let at0 = max_abs(&amb.nijenhuis(&vec![0.0; amb.dim()]));
            vec![
                Outcome {
                    id: "N-nonzero".into(),
                    anchor: "strictly almost Kahler: N != 0 at the origin".into(),
                    kind: Kind::Above(0.1),
                    value: at0,
                    points: 1,
                },
                below("N-oracle", "max |N| at the origin against the pinned value", (at0 - pinned).abs(), 1),
                info("N-max", "max |N| over the sample", r[0], n),
            ]
        }
        None => vec![below("N-vanishing", "integrable J: N = 0", r[0], n)],
    }
}
