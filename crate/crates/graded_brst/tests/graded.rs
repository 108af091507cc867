use frames::FrameField;
use graded_brst::*;
use manifold_core::AmbientStructure;
use num_complex::Complex;
use phase_space::{sample_phase_points, PhaseSpace};
use proptest::prelude::*;

fn g(k: usize) -> Grass<f64> {
    Grass::gen(k)
}

fn amb(name: &str) -> AmbientStructure {
    AmbientStructure::builtin(name).unwrap()
}

#[test]
fn grassmann_examples() {
    assert!(g(0).mul(&g(0)).terms.values().all(|c| c.norm() == 0.0));
    let e12 = g(0).mul(&g(1));
    assert_eq!(e12.left_deriv(0), g(1));
    assert_eq!(e12.left_deriv(1), g(0).scale_re(-1.0));
    assert_eq!(e12.right_deriv(1), g(0));
    assert_eq!(e12.right_deriv(0), g(1).scale_re(-1.0));
    let lhs = e12.mul(&g(2).mul(&g(3)));
    let other = g(0).mul(&g(2)).mul(&g(1).mul(&g(3)));
    assert_eq!(lhs.terms[&0b1111], Complex::new(1.0, 0.0));
    assert_eq!(other.scale_re(-1.0), lhs);
}

fn elem() -> impl Strategy<Value = Grass<f64>> {
    prop::collection::vec((0u16..64, -2.0f64..2.0), 1..6).prop_map(|v| {
        let mut x = Grass::zero();
        for (m, c) in v {
            x.add_term(m, Complex::new(c, 0.0));
        }
        x
    })
}

fn close(a: &Grass<f64>, b: &Grass<f64>) -> bool {
    max_monomial_diff(a, b).0 < 1e-12
}

fn parity_split(x: &Grass<f64>) -> (Grass<f64>, Grass<f64>) {
    let mut ev = Grass::zero();
    let mut od = Grass::zero();
    for (&m, &c) in &x.terms {
        if m.count_ones() % 2 == 0 {
            ev.add_term(m, c);
        } else {
            od.add_term(m, c);
        }
    }
    (ev, od)
}

proptest! {
    #[test]
    fn product_associative(a in elem(), b in elem(), c in elem()) {
        prop_assert!(close(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))));
    }

    #[test]
    fn left_derivative_graded_leibniz(a in elem(), b in elem(), k in 0usize..6) {
        let (ae, ao) = parity_split(&a);
        for (part, sign) in [(ae, 1.0), (ao, -1.0)] {
            let lhs = part.mul(&b).left_deriv(k);
            let rhs = part.left_deriv(k).mul(&b).add(&part.mul(&b.left_deriv(k)).scale_re(sign));
            prop_assert!(close(&lhs, &rhs));
        }
    }
}

fn plus<'a>(a: &'a AmbientStructure) -> PlusBrst<'a> {
    PlusBrst::new(PhaseSpace::new(a, FrameField::JAdapted), WRITTEN_SIGNS)
}

#[test]
fn current_grading() {
    let flat = amb("flat_kahler");
    let pt = &sample_phase_points(&flat, 1, 3)[0];
    let sys = plus(&flat);
    let y = sys.upsilon(&sys.ps.to_plus(pt));
    assert!(y.iter().all(|x| x.terms.keys().all(|m| m.count_ones() == 1)));
    let nil = amb("nilmanifold");
    let sys = plus(&nil);
    let pt = &sample_phase_points(&nil, 1, 3)[0];
    let y = sys.upsilon(&sys.ps.to_plus(pt));
    let gh = |m: &Mono| (0..8).filter(|k| m & (1 << k) != 0).map(|k| sys.ghost(k)).sum::<i32>();
    let degrees: Vec<u32> = y[0].terms.iter().filter(|(_, c)| c.norm() > 1e-12).map(|(m, _)| m.count_ones()).collect();
    assert!(degrees.contains(&1) && degrees.contains(&3));
    assert!(y[0].terms.keys().all(|m| gh(m) == 1));
}

#[test]
fn control_is_nilpotent_and_matches_hand_derivation() {
    for name in ["flat_kahler", "nilmanifold", "sphere"] {
        let a = amb(name);
        for pt in sample_phase_points(&a, 3, 21) {
            for fr in [FrameField::GramSchmidt, FrameField::JAdapted] {
                let r = control_check(&FullBrst::new(PhaseSpace::new(&a, fr)), &pt);
                assert!(r.nil < 1e-12 && r.chi < 1e-12 && r.ghost < 1e-12 && r.current < 1e-12, "{name} {r:?}");
            }
        }
    }
}

#[test]
fn control_other_signs_are_not_nilpotent() {
    let a = amb("nilmanifold");
    let pt = &sample_phase_points(&a, 1, 21)[0];
    for (sp, sg) in [(1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)] {
        let mut sys = FullBrst::new(PhaseSpace::new(&a, FrameField::GramSchmidt));
        sys.signs = Signs { sp, sg };
        let r = worst(&apply_delta(&sys, &Delta(&sys, coords(&sys)), &pt.z()));
        assert!(r.0 > 0.1, "{sp} {sg}");
    }
}

#[test]
fn abelian_limit() {
    let a = amb("flat_kahler");
    for pt in sample_phase_points(&a, 3, 5) {
        let r = brst_check(&plus(&a), &pt);
        assert!(r.t61_max() < 1e-12 && r.nil_max() < 1e-12, "{r:?}");
        let sys = plus(&a);
        let w = sys.ps.to_plus(&pt);
        let cur = PlusObs(&sys, Obs::Current).eval(&w);
        let dp = apply_delta(&sys, &PlusObs(&sys, Obs::Ghost), &w);
        let neg: Vec<Grass<f64>> = cur.iter().map(|c| c.scale_re(-1.0)).collect();
        assert!(worst_diff(&dp, &neg).0 < 1e-12);
        assert!(worst(&apply_delta(&sys, &PlusObs(&sys, Obs::Current), &w)).0 < 1e-12);
    }
}

#[test]
fn brst_on_curved_models() {
    for name in ["nilmanifold", "sphere"] {
        let a = amb(name);
        for pt in sample_phase_points(&a, 3, 8) {
            let r = brst_check(&plus(&a), &pt);
            // χ and δχ = 0 come out of the contraction exactly
            assert!(r.t61[0] < 1e-12 && r.t61[1] < 1e-12, "{name} {r:?}");
            assert!(r.nil[0] < 1e-12 && r.nil[1] < 1e-12);
            assert!(r.ghost_number < 1e-12 && r.leibniz < 1e-12);
            // the 𝒫 and 𝔍 lines do not
            assert!(r.t61[2] > 0.1 && r.t61[3] > 0.1, "{name} {r:?}");
            assert!(r.nil[2] > 0.1, "{name} {r:?}");
        }
    }
    let a = amb("nilmanifold");
    for pt in sample_phase_points(&a, 3, 8) {
        assert!((brst_check(&plus(&a), &pt).t61[2] - 1.5).abs() < 1e-9);
    }
}

#[test]
fn no_sign_choice_makes_the_projected_current_nilpotent() {
    for name in ["nilmanifold", "sphere"] {
        let a = amb(name);
        let pt = &sample_phase_points(&a, 1, 8)[0];
        for sp in [1.0, -1.0] {
            for sg in [1.0, -1.0] {
                let sys = PlusBrst::new(PhaseSpace::new(&a, FrameField::JAdapted), Signs { sp, sg });
                let w = sys.ps.to_plus(pt);
                let r = worst(&apply_delta(&sys, &Delta(&sys, coords(&sys)), &w)).0;
                assert!(r > 0.1, "{name} {sp} {sg}: {r}");
            }
        }
    }
}

#[test]
fn witten_rewriting() {
    let a = amb("flat_kahler");
    for pt in sample_phase_points(&a, 2, 4) {
        assert!(witten_check(&a, &pt).iter().all(|&r| r < 1e-12));
    }
    for (name, d) in [("nilmanifold", 0.375), ("sphere", 1.25)] {
        let a = amb(name);
        for pt in sample_phase_points(&a, 3, 4) {
            let r = witten_check(&a, &pt);
            assert!(r[0] < 1e-10 && r[1] < 1e-10 && r[2] < 1e-10, "{name} {r:?}");
            assert!((r[3] - d).abs() < 1e-8, "{name} {r:?}");
        }
    }
}

#[test]
fn graded_structural_blocks() {
    let a = amb("flat_kahler");
    let pt = &sample_phase_points(&a, 1, 2)[0];
    assert!(graded_structural(&plus(&a), pt).max() < 1e-12);
    let a = amb("nilmanifold");
    for pt in sample_phase_points(&a, 3, 2) {
        let r = graded_structural(&plus(&a), &pt);
        assert!(r.u < 1e-12 && r.eta < 1e-12 && r.ghost_q < 1e-12, "{r:?}");
        assert!((r.ghost_u - 0.5).abs() < 1e-9, "{r:?}");
    }
}

#[test]
fn graded_projection() {
    for name in ["flat_kahler", "nilmanifold", "sphere"] {
        let a = amb(name);
        let ps = PhaseSpace::new(&a, FrameField::GramSchmidt);
        for gp in sample_graded_points(&a, 20, 13) {
            assert!(gp.reconstruction_residual(&ps) < 1e-10);
            let once = graded_project(&ps, &gp);
            assert!(once.phe_residual(&ps) < 1e-10, "{name}");
            let twice = graded_project(&ps, &once);
            for (x, y) in once.ghost.iter().zip(&twice.ghost).chain(once.base.p.iter().zip(&twice.base.p)) {
                assert!((x[0] - y[0]).abs() < 1e-10 && (x[1] - y[1]).abs() < 1e-10);
            }
            let b = once.ghost_blocks(&ps);
            assert!(phase_space::max_block(&b.hol_anti) < 1e-10 && phase_space::max_block(&b.anti_hol) < 1e-10);
        }
        let zero = GradedPhasePoint { base: phase_space::PhasePoint::zero_momenta(sample_phase_points(&a, 1, 1)[0].u.clone()), ghost: vec![[0.0; 2]; a.dim()] };
        assert_eq!(graded_project(&ps, &zero), zero);
    }
}
