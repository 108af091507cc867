//! Levi-Civita connection in holonomic and anholonomic form, Cartan
//! structure functions by two routes, and the Riemann tensor.
//!
//! Convention: Γ^A_BC is the A-component of ∇_{θ̂_B} θ̂_C, so B is the
//! derivative direction. C^A_BC = Γ^A_BC − Γ^A_CB and
//! [θ̂_B, θ̂_C] = C^A_BC θ̂_A. Curvature: R^A_BCD is the A-component of
//! R(θ̂_C, θ̂_D)θ̂_B with R(X, Y) = [∇_X, ∇_Y] − ∇_[X,Y], so (C, D) is the
//! derivative pair and the Ricci identity reads
//! [D_C, D_D] V^A = R^A_BCD V^B. Ricci: R_BD = R^A_BAD.

use crate::tensor::idx;
use frames::FrameField;
use manifold_core::ambient::d_mat;
use manifold_core::scalar::{seed, seed_vec, Dual};
use manifold_core::{AmbientStructure, Mat, Scalar};

/// Γ^i_jk = ½ g^il (∂_j g_lk + ∂_k g_lj − ∂_l g_jk), layout [i][j][k].
pub fn christoffel<S: Scalar>(amb: &AmbientStructure, u: &[S]) -> Vec<S> {
    let m = amb.dim();
    let gi = amb.ginv(u);
    let dg = amb.dg(u);
    let half = S::from_f64(0.5);
    let mut out = vec![S::zero(); m * m * m];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let mut s = S::zero();
                for l in 0..m {
                    s += gi[(i, l)] * (dg[j][(l, k)] + dg[k][(l, j)] - dg[l][(j, k)]);
                }
                out[idx(m, &[i, j, k])] = s * half;
            }
        }
    }
    out
}

/// Γ^A_BC = E^A_i (E_B^j ∂_j E_C^i + E_B^j E_C^k Γ^i_jk), layout [A][B][C].
pub fn anholonomic<S: Scalar>(amb: &AmbientStructure, frame: &FrameField, u: &[S]) -> Vec<S> {
    let m = amb.dim();
    let e = frame.vectors(amb, u);
    let th = e.inverse().expect("frame invertible");
    let de = d_mat(u, |v| frame.vectors(amb, v));
    let gam = christoffel(amb, u);
    let mut out = vec![S::zero(); m * m * m];
    for b in 0..m {
        for c in 0..m {
            // w^i = E_B^j ∂_j E_C^i + E_B^j E_C^k Γ^i_jk
            let mut w = vec![S::zero(); m];
            for i in 0..m {
                let mut s = S::zero();
                for j in 0..m {
                    s += e[(j, b)] * de[j][(i, c)];
                    for k in 0..m {
                        s += e[(j, b)] * e[(k, c)] * gam[idx(m, &[i, j, k])];
                    }
                }
                w[i] = s;
            }
            for a in 0..m {
                let mut s = S::zero();
                for i in 0..m {
                    s += th[(a, i)] * w[i];
                }
                out[idx(m, &[a, b, c])] = s;
            }
        }
    }
    out
}

pub fn cartan_from_gamma<S: Scalar>(gam: &[S]) -> Vec<S> {
    let m = (gam.len() as f64).cbrt().round() as usize;
    let mut out = vec![S::zero(); gam.len()];
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                out[idx(m, &[a, b, c])] = gam[idx(m, &[a, b, c])] - gam[idx(m, &[a, c, b])];
            }
        }
    }
    out
}

/// C^A_BC from [θ̂_B, θ̂_C]^i = E_B^j ∂_j E_C^i − E_C^j ∂_j E_B^i.
/// Uses only frame derivatives, no Christoffel symbols.
pub fn cartan_from_brackets<S: Scalar>(amb: &AmbientStructure, frame: &FrameField, u: &[S]) -> Vec<S> {
    let m = amb.dim();
    let e = frame.vectors(amb, u);
    let th = e.inverse().expect("frame invertible");
    let mut out = vec![S::zero(); m * m * m];
    // directional derivatives of the frame along each frame vector
    let along: Vec<Mat<S>> = (0..m)
        .map(|b| {
            let uu: Vec<Dual<S>> = seed_vec(u, &e.col(b));
            frame.vectors(amb, &uu).map(|x| x.d)
        })
        .collect();
    for b in 0..m {
        for c in 0..m {
            for a in 0..m {
                let mut s = S::zero();
                for i in 0..m {
                    s += th[(a, i)] * (along[b][(i, c)] - along[c][(i, b)]);
                }
                out[idx(m, &[a, b, c])] = s;
            }
        }
    }
    out
}

/// Holonomic R^i_jkl = ∂_kΓ^i_lj − ∂_lΓ^i_kj + Γ^i_km Γ^m_lj − Γ^i_lm Γ^m_kj.
pub fn riemann_holonomic<S: Scalar>(amb: &AmbientStructure, u: &[S]) -> Vec<S> {
    let m = amb.dim();
    let gam = christoffel(amb, u);
    let dgam: Vec<Vec<S>> = (0..m)
        .map(|k| christoffel(amb, &seed(u, k)).into_iter().map(|x| x.d).collect())
        .collect();
    let mut out = vec![S::zero(); m.pow(4)];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                for l in 0..m {
                    let mut s = dgam[k][idx(m, &[i, l, j])] - dgam[l][idx(m, &[i, k, j])];
                    for n in 0..m {
                        s += gam[idx(m, &[i, k, n])] * gam[idx(m, &[n, l, j])] - gam[idx(m, &[i, l, n])] * gam[idx(m, &[n, k, j])];
                    }
                    out[idx(m, &[i, j, k, l])] = s;
                }
            }
        }
    }
    out
}

/// Anholonomic curvature from Γ^A_BC, its frame derivatives and C:
/// R^A_BCD = θ̂_C Γ^A_DB − θ̂_D Γ^A_CB + Γ^A_CE Γ^E_DB − Γ^A_DE Γ^E_CB − C^E_CD Γ^A_EB.
pub fn riemann<S: Scalar>(amb: &AmbientStructure, frame: &FrameField, u: &[S]) -> Vec<S> {
    let m = amb.dim();
    let e = frame.vectors(amb, u);
    let gam = anholonomic(amb, frame, u);
    let cc = cartan_from_gamma(&gam);
    let dgam: Vec<Vec<S>> = (0..m)
        .map(|c| {
            let uu: Vec<Dual<S>> = seed_vec(u, &e.col(c));
            anholonomic(amb, frame, &uu).into_iter().map(|x| x.d).collect()
        })
        .collect();
    let g = |a: usize, b: usize, c: usize| gam[idx(m, &[a, b, c])];
    let mut out = vec![S::zero(); m.pow(4)];
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for d in 0..m {
                    let mut s = dgam[c][idx(m, &[a, d, b])] - dgam[d][idx(m, &[a, c, b])];
                    for k in 0..m {
                        s += g(a, c, k) * g(k, d, b) - g(a, d, k) * g(k, c, b) - cc[idx(m, &[k, c, d])] * g(a, k, b);
                    }
                    out[idx(m, &[a, b, c, d])] = s;
                }
            }
        }
    }
    out
}

/// Holonomic curvature transported into the frame, for cross-checking.
pub fn riemann_via_holonomic<S: Scalar>(amb: &AmbientStructure, frame: &FrameField, u: &[S]) -> Vec<S> {
    let m = amb.dim();
    let e = frame.vectors(amb, u);
    let th = e.inverse().unwrap();
    let r = riemann_holonomic(amb, u);
    let mut out = vec![S::zero(); m.pow(4)];
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for d in 0..m {
                    let mut s = S::zero();
                    for i in 0..m {
                        for j in 0..m {
                            for k in 0..m {
                                for l in 0..m {
                                    s += th[(a, i)] * r[idx(m, &[i, j, k, l])] * e[(j, b)] * e[(k, c)] * e[(l, d)];
                                }
                            }
                        }
                    }
                    out[idx(m, &[a, b, c, d])] = s;
                }
            }
        }
    }
    out
}

pub fn ricci<S: Scalar>(r: &[S], m: usize) -> Vec<S> {
    let mut out = vec![S::zero(); m * m];
    for b in 0..m {
        for d in 0..m {
            let mut s = S::zero();
            for a in 0..m {
                s += r[idx(m, &[a, b, a, d])];
            }
            out[b * m + d] = s;
        }
    }
    out
}

/// Γ as m matrices: (Γ_B)^A_C = Γ^A_BC.
pub fn gamma_matrices(gam: &[f64], m: usize) -> Vec<Mat<f64>> {
    (0..m).map(|b| Mat::from_fn(m, m, |a, c| gam[idx(m, &[a, b, c])])).collect()
}
