use connection_curvature::synchronous_frame;
use frames::{cayley, FrameField};
use manifold_core::{AmbientStructure, Mat};
use num_complex::Complex;
use phase_space::*;

fn amb(name: &str) -> AmbientStructure {
    AmbientStructure::builtin(name).unwrap()
}

const BUILTINS: [&str; 3] = ["flat_kahler", "sphere", "nilmanifold"];

#[test]
fn current_components() {
    let a = amb("flat_kahler");
    let ps = PhaseSpace::new(&a, FrameField::GramSchmidt);
    let mut p = vec![[0.0; 2]; 4];
    p[0][0] = 1.0;
    let pt = PhasePoint::new(vec![0.1, 0.2, 0.3, 0.4], p);
    let c = ps.currents(&pt.z());
    assert_eq!(c, vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    assert!(ps.currents(&PhasePoint::zero_momenta(pt.u.clone()).z()).iter().all(|x| *x == 0.0));

    let a = amb("nilmanifold");
    let ps = PhaseSpace::new(&a, FrameField::JAdapted);
    for pt in sample_phase_points(&a, 10, 1) {
        let e = FrameField::JAdapted.vectors(&a, &pt.u);
        let c = ps.currents(&pt.z());
        for aa in 0..4 {
            for al in 0..2 {
                let want: f64 = (0..4).map(|i| e[(i, aa)] * pt.p[i][al]).sum();
                assert!((c[2 * aa + al] - want).abs() < 1e-15);
            }
        }
    }
}

#[test]
fn flat_blocks_by_hand() {
    // E_1 = ½(e1 − i e3), E_κ = ½(∂x − i∂y), so every block of p_1^1 is ½
    let a = amb("flat_kahler");
    let ps = PhaseSpace::new(&a, FrameField::JAdapted);
    let mut p = vec![[0.0; 2]; 4];
    p[0][0] = 1.0;
    let fm = ps.to_framed(&PhasePoint::new(vec![0.0; 4], p));
    let half = Complex::new(0.5, 0.0);
    let zero = Complex::new(0.0, 0.0);
    for b in [&fm.hol_hol, &fm.anti_hol, &fm.hol_anti, &fm.anti_anti] {
        assert!((b[0] - half).norm() < 1e-15);
        assert!((b[1] - zero).norm() < 1e-15);
    }
}

#[test]
fn block_round_trip_and_reality() {
    for n in BUILTINS {
        let a = amb(n);
        let ps = PhaseSpace::new(&a, FrameField::GramSchmidt);
        for pt in sample_phase_points(&a, 100, 2) {
            let fm = ps.to_framed(&pt);
            let back = ps.from_blocks(&pt.u, &fm);
            for (x, y) in back.iter().zip(&pt.p) {
                assert!((x[0] - y[0]).abs() < 1e-10 && (x[1] - y[1]).abs() < 1e-10);
            }
            for (h, aa) in fm.hol_hol.iter().zip(&fm.anti_anti) {
                assert!((h.conj() - aa).norm() < 1e-12);
            }
        }
    }
}

#[test]
fn projection_is_idempotent_and_lands_on_constraint() {
    for n in BUILTINS {
        let a = amb(n);
        let ps = PhaseSpace::new(&a, FrameField::GramSchmidt);
        for pt in sample_phase_points(&a, 20, 3) {
            let p1 = ps.project(&pt);
            assert!(ps.phe_residual(&p1) < 1e-10, "{n}");
            let p2 = ps.project(&p1);
            for (x, y) in p1.p.iter().zip(&p2.p) {
                assert!((x[0] - y[0]).abs() < 1e-12 && (x[1] - y[1]).abs() < 1e-12);
            }
        }
        let z = PhasePoint::zero_momenta(a.manifold.sample_domain.iter().map(|(lo, hi)| 0.5 * (lo + hi)).collect());
        assert!(ps.project(&z).p.iter().all(|r| r[0] == 0.0 && r[1] == 0.0));
    }
}

#[test]
fn pseudoholomorphic_solutions_have_vanishing_mixed_blocks() {
    for n in BUILTINS {
        let a = amb(n);
        let ps = PhaseSpace::new(&a, FrameField::GramSchmidt);
        for pt in sample_phase_points(&a, 10, 4) {
            let sols = ps.phe_solutions(&pt.u);
            assert_eq!(sols.len(), a.dim(), "{n}");
            for s in sols {
                let sp = PhasePoint::new(pt.u.clone(), s);
                assert!(ps.phe_residual(&sp) < 1e-10);
                let fm = ps.to_framed(&sp);
                assert!(max_block(&fm.anti_hol) < 1e-10 && max_block(&fm.hol_anti) < 1e-10);
                // no constraint on the other two blocks
                assert!(max_block(&fm.hol_hol) > 1e-3 && max_block(&fm.anti_anti) > 1e-3);
                // unchanged by the projection
                let pp = ps.project(&sp);
                for (x, y) in pp.p.iter().zip(&sp.p) {
                    assert!((x[0] - y[0]).abs() < 1e-10 && (x[1] - y[1]).abs() < 1e-10);
                }
            }
        }
    }
}

#[test]
fn full_algebra_on_all_builtins() {
    for n in BUILTINS {
        let a = amb(n);
        for f in [FrameField::GramSchmidt, FrameField::JAdapted] {
            let ps = PhaseSpace::new(&a, f);
            for pt in sample_phase_points(&a, 25, 5) {
                let r = ps.bracket_algebra_check(&pt);
                assert!(r.algebra < 1e-7 && r.antisymmetry < 1e-8 && r.structural < 1e-8, "{n} {r:?}");
                assert!(r.exactness < 1e-8 && r.holonomic < 1e-8, "{n} {r:?}");
                if n == "flat_kahler" {
                    assert_eq!(r.max_bracket, 0.0);
                    assert_eq!(r.algebra, 0.0);
                }
            }
        }
    }
}

#[test]
fn flat_field_has_no_momentum_part() {
    let a = amb("flat_kahler");
    let ps = PhaseSpace::new(&a, FrameField::GramSchmidt);
    let pt = &sample_phase_points(&a, 1, 6)[0];
    let x = ps.hamiltonian_field(&pt.z(), 2);
    assert_eq!(x[..4], [0.0, 0.0, 1.0, 0.0]);
    assert!(x[4..].iter().all(|v| *v == 0.0));
}

#[test]
fn sphere_bracket_is_minus_cot_theta() {
    let a = amb("sphere");
    let ps = PhaseSpace::new(&a, FrameField::GramSchmidt);
    for pt in sample_phase_points(&a, 10, 7) {
        let br = ps.brackets(&pt);
        let c = ps.currents(&pt.z());
        let cot = pt.u[0].cos() / pt.u[0].sin();
        for al in 0..2 {
            // {𝔍_1, 𝔍_2} = C²_12 𝔍_2
            assert!((br[(0 * 2 + 1) * 2 + al] + cot * c[2 + al]).abs() < 1e-8 * cot.abs().max(1.0));
            assert!(br[al].abs() < 1e-12);
        }
        // θ̂∧θ̂ block of Ω^V in (u, p_A) coordinates is p_A C^A_BC
        let y: Vec<f64> = pt.u.iter().copied().chain(c.iter().step_by(2).copied()).chain(c.iter().skip(1).step_by(2).copied()).collect();
        let to_z = |v: &[manifold_core::D1]| {
            let th = FrameField::GramSchmidt.coframe(&a, &v[..2]);
            let mut z = v[..2].to_vec();
            for al in 0..2 {
                for i in 0..2 {
                    let mut s = th[(0, i)] * v[2 + al * 2];
                    s += th[(1, i)] * v[2 + al * 2 + 1];
                    z.push(s);
                }
            }
            z
        };
        let jac = jacobian(&y, to_z);
        let om = ps.omega_v(&pt.z());
        let mut uu = 0.0;
        for i in 0..6 {
            for j in 0..6 {
                uu += jac[0][i] * om[0][(i, j)] * jac[1][j];
            }
        }
        let e = FrameField::GramSchmidt.vectors(&a, &pt.u);
        // du^θ∧du^φ coefficient → frame components via E
        let blk = uu * e[(0, 0)] * e[(1, 1)];
        assert!((blk + cot * c[2]).abs() < 1e-8 * cot.abs().max(1.0), "{blk} {}", -cot * c[2]);
    }
}

#[test]
fn synchronous_frame_abelianises() {
    for n in BUILTINS {
        let a = amb(n);
        for pt in sample_phase_points(&a, 5, 8) {
            let ps = PhaseSpace::new(&a, synchronous_frame(&a, &pt.u));
            let r = ps.bracket_algebra_check(&pt);
            assert!(r.algebra < 1e-8 && r.max_bracket < 1e-8, "{n} {r:?}");
        }
    }
}

#[test]
fn regauging_is_covariant() {
    let a = amb("nilmanifold");
    let k = Mat::from_fn(4, 4, |i, j| if i < j { 0.3 * (i + 2 * j) as f64 } else if i > j { -0.3 * (j + 2 * i) as f64 } else { 0.0 });
    let o = cayley(&k);
    let base = PhaseSpace::new(&a, FrameField::GramSchmidt);
    let turned = PhaseSpace::new(&a, FrameField::Regauged { base: Box::new(FrameField::GramSchmidt), o });
    for pt in sample_phase_points(&a, 10, 9) {
        let r0 = base.bracket_algebra_check(&pt);
        let r1 = turned.bracket_algebra_check(&pt);
        assert!((r0.algebra - r1.algebra).abs() < 1e-7);
        assert!(r1.algebra < 1e-7);
    }
}

#[test]
fn induced_structure_flat() {
    let a = amb("flat_kahler");
    let ps = PhaseSpace::new(&a, FrameField::JAdapted);
    for pt in sample_phase_points(&a, 5, 10) {
        let r = ps.plus_algebra_check(&ps.project(&pt));
        assert_eq!(r.algebra, 0.0);
        assert!(r.structural < 1e-14);
    }
}

#[test]
fn induced_structure_curved() {
    // Frozen behaviour: the pulled-back form is exact and every horizontal
    // component is separately Hamiltonian with a closing algebra, but the
    // displayed single field solves neither, and no single field exists.
    for n in ["sphere", "nilmanifold"] {
        let a = amb(n);
        let ps = PhaseSpace::new(&a, FrameField::JAdapted);
        for pt in sample_phase_points(&a, 5, 11) {
            let r = ps.plus_algebra_check(&ps.project(&pt));
            assert!(r.pullback_exactness < 1e-10);
            assert!(r.displayed_omega_flipped < 1e-10, "{n} {r:?}");
            assert!(r.per_component_structural < 1e-10 && r.per_component_algebra < 1e-10);
            assert!(r.structural > 1e-2 && r.ls_structural > 1e-2 && r.algebra > 1e-2, "{n} {r:?}");
        }
    }
}

#[test]
fn fixture_round_trip() {
    let a = amb("nilmanifold");
    let pt = sample_phase_points(&a, 1, 12).remove(0);
    let s = pt.to_fixture();
    assert_eq!(PhasePoint::from_fixture(&s).unwrap(), pt);
    assert_eq!(PhasePoint::from_z(&pt.z()), pt);
    assert!(PhasePoint::from_fixture("{\"u\": 3}").is_err());
}
