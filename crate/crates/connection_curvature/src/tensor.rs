//! Frame-index tensor fields and their covariant derivatives.
//!
//! Components are flat arrays in row-major index order. A field knows
//! which slots are contravariant; the covariant derivative prepends one
//! covariant slot (the derivative direction comes first).

use crate::connection::anholonomic;
use frames::FrameField;
use manifold_core::scalar::{seed_vec, Dual};
use manifold_core::{AmbientStructure, Scalar};

pub fn idx(m: usize, ix: &[usize]) -> usize {
    ix.iter().fold(0, |acc, &i| acc * m + i)
}

pub trait TensorField {
    /// true = contravariant slot
    fn slots(&self) -> Vec<bool>;
    fn eval<S: Scalar>(&self, amb: &AmbientStructure, frame: &FrameField, u: &[S]) -> Vec<S>;
}

/// J^A_B.
pub struct JField;

impl TensorField for JField {
    fn slots(&self) -> Vec<bool> {
        vec![true, false]
    }
    fn eval<S: Scalar>(&self, amb: &AmbientStructure, frame: &FrameField, u: &[S]) -> Vec<S> {
        frame.j_frame(amb, u).data
    }
}

/// g_AB in the frame.
pub struct MetricField;

impl TensorField for MetricField {
    fn slots(&self) -> Vec<bool> {
        vec![false, false]
    }
    fn eval<S: Scalar>(&self, amb: &AmbientStructure, frame: &FrameField, u: &[S]) -> Vec<S> {
        let e = frame.vectors(amb, u);
        e.t().mul(&amb.g(u)).mul(&e).data
    }
}

/// Cartan structure functions C^A_BC = Γ^A_BC − Γ^A_CB.
pub struct CartanField;

impl TensorField for CartanField {
    fn slots(&self) -> Vec<bool> {
        vec![true, false, false]
    }
    fn eval<S: Scalar>(&self, amb: &AmbientStructure, frame: &FrameField, u: &[S]) -> Vec<S> {
        crate::connection::cartan_from_gamma(&anholonomic(amb, frame, u))
    }
}

/// Cartan structure functions with all indices lowered by the frame metric
/// (δ for orthonormal frames): C_ABC := C^A_BC.
pub struct CartanLowered;

impl TensorField for CartanLowered {
    fn slots(&self) -> Vec<bool> {
        vec![false, false, false]
    }
    fn eval<S: Scalar>(&self, amb: &AmbientStructure, frame: &FrameField, u: &[S]) -> Vec<S> {
        CartanField.eval(amb, frame, u)
    }
}

/// Covariant derivative D_C T of another field, derivative slot first.
pub struct CovD<F>(pub F);

impl<F: TensorField> TensorField for CovD<F> {
    fn slots(&self) -> Vec<bool> {
        let mut s = vec![false];
        s.extend(self.0.slots());
        s
    }
    fn eval<S: Scalar>(&self, amb: &AmbientStructure, frame: &FrameField, u: &[S]) -> Vec<S> {
        covariant_derivative(&self.0, amb, frame, u)
    }
}

/// D_C T^{...}_{...} = θ̂_C(T) + Γ^A_CE T^{..E..} − Γ^E_CB T_{..E..}.
pub fn covariant_derivative<F: TensorField, S: Scalar>(
    field: &F,
    amb: &AmbientStructure,
    frame: &FrameField,
    u: &[S],
) -> Vec<S> {
    let m = amb.dim();
    let slots = field.slots();
    let r = slots.len();
    let t = field.eval(amb, frame, u);
    let e = frame.vectors(amb, u);
    let gam = anholonomic(amb, frame, u);
    let size = m.pow(r as u32);
    let mut out = vec![S::zero(); m * size];
    for c in 0..m {
        let dir: Vec<S> = e.col(c);
        let uu: Vec<Dual<S>> = seed_vec(u, &dir);
        let dt: Vec<S> = field.eval(amb, frame, &uu).into_iter().map(|x| x.d).collect();
        for flat in 0..size {
            let mut ix = vec![0usize; r];
            let mut f = flat;
            for s in (0..r).rev() {
                ix[s] = f % m;
                f /= m;
            }
            let mut v = dt[flat];
            for (s, &up) in slots.iter().enumerate() {
                let orig = ix[s];
                for k in 0..m {
                    let mut jx = ix.clone();
                    jx[s] = k;
                    let tv = t[idx(m, &jx)];
                    if up {
                        v += gam[idx(m, &[orig, c, k])] * tv;
                    } else {
                        v -= gam[idx(m, &[k, c, orig])] * tv;
                    }
                }
            }
            out[c * size + flat] = v;
        }
    }
    out
}

/// θ̂_C of every component, derivative slot first.
pub fn frame_derivative<F: TensorField, S: Scalar>(field: &F, amb: &AmbientStructure, frame: &FrameField, u: &[S]) -> Vec<S> {
    let m = amb.dim();
    let e = frame.vectors(amb, u);
    let mut out = Vec::new();
    for c in 0..m {
        let uu: Vec<Dual<S>> = seed_vec(u, &e.col(c));
        out.extend(field.eval(amb, frame, &uu).into_iter().map(|x| x.d));
    }
    out
}

pub fn max_abs<S: Scalar>(v: &[S]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.re().abs()))
}
