use frames::*;
use manifold_core::manifold::BUILTIN_NAMES;
use manifold_core::sample::sample_points;
use manifold_core::{AmbientStructure, Mat, SurfaceStructure};
use num_complex::Complex;

#[test]
fn identities_hold_on_builtins() {
    let s = SurfaceStructure::standard();
    for name in BUILTIN_NAMES {
        let a = AmbientStructure::builtin(name).unwrap();
        for field in [FrameField::GramSchmidt, FrameField::JAdapted] {
            for p in sample_points(&a.manifold, 100, 1) {
                let r = verify_frame_identities(&a, &field, &s, &p).unwrap();
                for id in identities::GATED {
                    let v = r.get(id).unwrap();
                    assert!(v < 1e-10, "{name} {id} {v}");
                }
            }
        }
    }
}

#[test]
fn flat_identities_are_tight() {
    let a = AmbientStructure::builtin("flat_kahler").unwrap();
    let r = verify_frame_identities(&a, &FrameField::GramSchmidt, &SurfaceStructure::standard(), &[0.1, 0.2, 0.3, 0.4]).unwrap();
    assert!(r.max() < 1e-12);
}

#[test]
fn orthonormal_frame_examples() {
    let flat = AmbientStructure::builtin("flat_kahler").unwrap();
    let f = build_orthonormal_frame(&flat, &[0.0; 4]).unwrap();
    assert_eq!(f.e, Mat::identity(4));
    let sphere = AmbientStructure::builtin("sphere").unwrap();
    let f = build_orthonormal_frame(&sphere, &[std::f64::consts::FRAC_PI_2, 0.0]).unwrap();
    assert!(f.e.sub(&Mat::identity(2)).max_abs() < 1e-15);
    let th = 0.7f64;
    let f = build_orthonormal_frame(&sphere, &[th, 0.1]).unwrap();
    assert!((f.e[(1, 1)] - 1.0 / th.sin()).abs() < 1e-15);
    let nil = AmbientStructure::builtin("nilmanifold").unwrap();
    let f = build_orthonormal_frame(&nil, &[1.0, 0.0, 0.0, 0.0]).unwrap();
    let g = nil.g(&[1.0, 0.0, 0.0, 0.0]);
    assert!(f.e.t().mul(&g).mul(&f.e).sub(&Mat::identity(4)).max_abs() < 1e-12);
}

#[test]
fn gram_schmidt_rejects_indefinite_metric() {
    let g = Mat::from_rows(&[vec![1.0, 0.0], vec![0.0, -1.0]]);
    assert!(matches!(gram_schmidt(&g), Err(FrameError::Pivot(_))));
}

#[test]
fn nilmanifold_j_adapted_frame_is_left_invariant() {
    let nil = AmbientStructure::builtin("nilmanifold").unwrap();
    let x = 0.6;
    let e = FrameField::JAdapted.vectors(&nil, &[x, 0.2, -0.1, 0.3]);
    let want = Mat::from_rows(&[
        vec![1.0, 0.0, 0.0, 0.0],
        vec![0.0, 1.0, 0.0, 0.0],
        vec![0.0, x, 1.0, 0.0],
        vec![0.0, 0.0, 0.0, 1.0],
    ]);
    assert!(e.sub(&want).max_abs() < 1e-14);
    let jf = FrameField::JAdapted.j_frame(&nil, &[x, 0.2, -0.1, 0.3]);
    assert!(jf.sub(&j0(4)).max_abs() < 1e-14);
}

#[test]
fn pseudoholomorphic_frame_examples() {
    let flat = AmbientStructure::builtin("flat_kahler").unwrap();
    let ph = build_pseudoholomorphic_frame(&flat, &[0.0; 4]).unwrap();
    let j = flat.j(&[0.0f64; 4]);
    for a in 0..2 {
        for i in 0..4 {
            let ea = if i == a { 1.0 } else { 0.0 };
            let want = Complex::new(0.5 * ea, -0.5 * j[(i, a)]);
            assert!((ph.hol[(i, a)] - want).norm() < 1e-15);
        }
    }
    // conjugation symmetry is exact
    assert_eq!(ph.antihol, ph.hol.conj());
    assert_eq!(ph.co_antihol, ph.co_hol.conj());
}

#[test]
fn surface_frame_is_d_dz() {
    let sf = build_surface_frame(&SurfaceStructure::standard()).unwrap();
    assert_eq!(sf.hol[(0, 0)], Complex::new(0.5, 0.0));
    assert_eq!(sf.hol[(1, 0)], Complex::new(0.0, -0.5));
    assert!((sf.co_hol[(0, 1)] - Complex::new(0.0, 1.0)).norm() < 1e-15);
    assert_eq!(sf.co_hol.mul(&sf.antihol)[(0, 0)], Complex::new(0.0, 0.0));
}

#[test]
fn combined_frame_dimension_mismatch() {
    let nil = AmbientStructure::builtin("nilmanifold").unwrap();
    let ph = build_pseudoholomorphic_frame(&nil, &[0.0; 4]).unwrap();
    assert!(matches!(combine_frames(&Mat::<f64>::identity(2), &ph), Err(FrameError::Dimension(2, 4))));
}

#[test]
fn regauged_frame_stays_orthonormal() {
    let nil = AmbientStructure::builtin("nilmanifold").unwrap();
    let x = Mat::from_rows(&[
        vec![0.0, 0.3, -0.2, 0.1],
        vec![-0.3, 0.0, 0.5, 0.0],
        vec![0.2, -0.5, 0.0, 0.4],
        vec![-0.1, 0.0, -0.4, 0.0],
    ]);
    let o = cayley(&x);
    let f = FrameField::Regauged { base: Box::new(FrameField::GramSchmidt), o };
    let p = [0.2, 0.1, -0.4, 0.5];
    let r = verify_frame_identities(&nil, &f, &SurfaceStructure::standard(), &p).unwrap();
    assert!(r.max() < 1e-10 || r.get("RA3-literal").unwrap() > 1e-10);
    for id in identities::GATED {
        assert!(r.get(id).unwrap() < 1e-10);
    }
}
