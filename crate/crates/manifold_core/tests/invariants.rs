use manifold_core::ambient::max_abs;
use manifold_core::sample::sample_points;
use manifold_core::*;
use proptest::prelude::*;

fn all() -> Vec<AmbientStructure> {
    manifold::BUILTIN_NAMES.iter().map(|n| AmbientStructure::builtin(n).unwrap()).collect()
}

#[test]
fn builtin_structures_are_almost_kahler() {
    for a in all() {
        for p in sample_points(&a.manifold, 100, 7) {
            let r = a.residuals(&p);
            assert!(r.j_squared < 1e-10, "{} J^2", a.name());
            assert!(r.g_symmetric < 1e-12);
            assert!(r.omega_antisymmetric < 1e-12);
            assert!(r.compatibility < 1e-10, "{} compat {}", a.name(), r.compatibility);
            assert!(r.d_omega < 1e-10, "{} d omega", a.name());
            assert!(r.g_min_eigen > 0.0);
        }
    }
}

#[test]
fn eval_tensor_examples() {
    let flat = ChartedManifold::builtin("flat_kahler").unwrap();
    let g = eval_tensor(&flat, "g", &[0.1, 0.2, 0.3, 0.4]).unwrap();
    assert_eq!(g, Mat::<f64>::identity(4).data);
    let om = eval_tensor(&flat, "omega", &[0.0; 4]).unwrap();
    assert_eq!(om[2], 1.0);
    assert_eq!(om[7], 1.0);
    assert_eq!(om[8], -1.0);
    let nil = ChartedManifold::builtin("nilmanifold").unwrap();
    let g = eval_tensor(&nil, "g", &[1.0, 0.0, 0.0, 0.0]).unwrap();
    assert_eq!(g[5], 2.0);
    assert!(matches!(eval_tensor(&nil, "h", &[0.0; 4]), Err(ManifoldError::UnknownField(_))));
    assert!(matches!(eval_tensor(&nil, "g", &[3.0, 0.0, 0.0, 0.0]), Err(ManifoldError::OutsideDomain(0))));
}

#[test]
fn partial_derivative_examples() {
    let nil = ChartedManifold::builtin("nilmanifold").unwrap();
    let d = partial_derivative(&nil, "g", &[1.0, 0.0, 0.0, 0.0], 0, 1).unwrap();
    assert_eq!(d[5], 2.0);
    let h = 1e-5;
    let c = [0.9, 0.0, 0.0, 0.0];
    let a = eval_tensor(&nil, "g", &[0.9 + h, 0.0, 0.0, 0.0]).unwrap();
    let b = eval_tensor(&nil, "g", &[0.9 - h, 0.0, 0.0, 0.0]).unwrap();
    let exact = partial_derivative(&nil, "g", &c, 0, 1).unwrap();
    assert!(((a[5] - b[5]) / (2.0 * h) - exact[5]).abs() < 1e-8);
    let dd = partial_derivative(&nil, "g", &c, 0, 2).unwrap();
    assert_eq!(dd[5], 2.0);
    let flat = ChartedManifold::builtin("flat_kahler").unwrap();
    assert!(max_abs(&partial_derivative(&flat, "J", &[0.3; 4], 2, 1).unwrap()) == 0.0);
    assert!(matches!(partial_derivative(&flat, "g", &[0.0; 4], 0, 3), Err(ManifoldError::Order(3))));
}

#[test]
fn duals_agree_with_finite_differences() {
    let h = 1e-5;
    for a in all() {
        let m = &a.manifold;
        for p in sample_points(m, 10, 3) {
            for label in ["g", "omega", "J"] {
                for dir in 0..m.dim {
                    let exact = partial_derivative(m, label, &p, dir, 1).unwrap();
                    let mut hi = p.clone();
                    let mut lo = p.clone();
                    hi[dir] += h;
                    lo[dir] -= h;
                    let f = m.field(label).unwrap();
                    for (k, e) in f.components.iter().enumerate() {
                        let fd = (e.eval(&hi) - e.eval(&lo)) / (2.0 * h);
                        assert!((fd - exact[k]).abs() <= 1e-7 * (1.0 + exact[k].abs()));
                    }
                }
            }
        }
    }
}

#[test]
fn compatible_triple_examples() {
    let om = Mat::from_rows(&[
        vec![0.0, 0.0, 1.0, 0.0],
        vec![0.0, 0.0, 0.0, 1.0],
        vec![-1.0, 0.0, 0.0, 0.0],
        vec![0.0, -1.0, 0.0, 0.0],
    ]);
    let (j, g) = build_compatible_triple(&Mat::identity(4), &om).unwrap();
    let flat = AmbientStructure::builtin("flat_kahler").unwrap();
    assert!(j.sub(&flat.j(&[0.0; 4])).max_abs() < 1e-12);
    assert!(g.sub(&Mat::identity(4)).max_abs() < 1e-12);

    let mut gaux = Mat::identity(4);
    gaux[(0, 0)] = 4.0;
    let (j, g) = build_compatible_triple(&gaux, &om).unwrap();
    assert!(j.mul(&j).add(&Mat::identity(4)).max_abs() < 1e-12);
    assert!(om.sub(&j.t().mul(&g)).max_abs() < 1e-12);
    assert!(g.sub(&g.t()).max_abs() < 1e-12);

    let degenerate = Mat::<f64>::zeros(4, 4);
    assert!(matches!(build_compatible_triple(&gaux, &degenerate), Err(ManifoldError::Degenerate(_))));
}

#[test]
fn compatible_triple_is_idempotent_on_builtins() {
    for a in all() {
        for p in sample_points(&a.manifold, 20, 11) {
            let (j, g) = build_compatible_triple(&a.g(&p), &a.omega(&p)).unwrap();
            assert!(j.sub(&a.j(&p)).max_abs() < 1e-10, "{}", a.name());
            let (j2, _) = build_compatible_triple(&g, &a.omega(&p)).unwrap();
            assert!(j2.sub(&j).max_abs() < 1e-10);
        }
    }
}

#[test]
fn derived_j_differentiates_like_explicit_j() {
    let src = include_str!("../builtin/nilmanifold.toml");
    let stripped: String = src.lines().filter(|l| !l.starts_with("J =")).collect::<Vec<_>>().join("\n");
    let derived = AmbientStructure::new(ChartedManifold::from_toml(&stripped).unwrap());
    let explicit = AmbientStructure::builtin("nilmanifold").unwrap();
    let p = [0.4, -0.3, 0.2, 0.7];
    let a = derived.dj(&p);
    let b = explicit.dj(&p);
    for (x, y) in a.iter().zip(&b) {
        assert!(x.sub(y).max_abs() < 1e-10);
    }
}

#[test]
fn nijenhuis_oracle() {
    // Symbolic expansion of the four bracket terms at the origin gives
    // eight components of magnitude 1.
    let nil = AmbientStructure::builtin("nilmanifold").unwrap();
    let n = nil.nijenhuis(&[0.0f64; 4]);
    let expected = [
        ((0, 0, 3), -1.0),
        ((0, 1, 2), 1.0),
        ((0, 2, 1), -1.0),
        ((0, 3, 0), 1.0),
        ((2, 0, 1), -1.0),
        ((2, 1, 0), 1.0),
        ((2, 2, 3), 1.0),
        ((2, 3, 2), -1.0),
    ];
    let mut want = vec![0.0; 64];
    for ((i, j, k), v) in expected {
        want[(i * 4 + j) * 4 + k] = v;
    }
    for (a, b) in n.iter().zip(&want) {
        assert!((a - b).abs() < 1e-14);
    }
    assert_eq!(max_abs(&n), 1.0);
    for name in ["flat_kahler", "sphere"] {
        let a = AmbientStructure::builtin(name).unwrap();
        for p in sample_points(&a.manifold, 50, 5) {
            assert!(max_abs(&a.nijenhuis(&p)) < 1e-10);
        }
    }
}

#[test]
fn config_errors() {
    assert!(ChartedManifold::from_toml("name = 1").is_err());
    let bad = "name='q'\ndim=2\ncoordinates=['a','b']\ndomain=[[0.0,1.0],[0.0,1.0]]\n[fields]\ng=[['1','0'],['0','c']]\nomega=[['0','1'],['-1','0']]\n";
    assert!(matches!(ChartedManifold::from_toml(bad), Err(ManifoldError::Expr { .. })));
    assert!(matches!(ChartedManifold::builtin("torus"), Err(ManifoldError::UnknownManifold(_))));
}

proptest! {
    #[test]
    fn dual_product_rule(a in -2.0f64..2.0, b in -2.0f64..2.0) {
        let x = Dual::variable(a);
        let f = x.sin() * x.exp();
        let exact = a.cos() * a.exp() + a.sin() * a.exp();
        prop_assert!((f.d - exact).abs() < 1e-12);
        let y = Dual::new(b, 1.0);
        let q = y / (y * y + Dual::constant(1.0));
        let dq = (1.0 - b * b) / (1.0 + b * b).powi(2);
        prop_assert!((q.d - dq).abs() < 1e-12);
    }

    #[test]
    fn flat_j_squares_to_minus_one(p in proptest::collection::vec(-1.0f64..1.0, 4)) {
        let a = AmbientStructure::builtin("flat_kahler").unwrap();
        prop_assert!(a.residuals(&p).j_squared == 0.0);
    }
}
