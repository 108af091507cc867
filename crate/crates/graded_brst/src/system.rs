//! δ as an odd derivation on Grassmann-valued functions of the bosonic
//! coordinates.

use crate::grassmann::{Grass, Mono};
use manifold_core::scalar::seed;
use manifold_core::{Dual, Scalar};

/// A graded phase space: bosonic coordinates w plus odd generators, with δ
/// known on every coordinate.
pub trait GradedSystem {
    fn n_bos(&self) -> usize;
    fn n_gen(&self) -> usize;
    /// δw_b for every bosonic coordinate.
    fn delta_bos<S: Scalar>(&self, w: &[S]) -> Vec<Grass<S>>;
    /// δ of every generator.
    fn delta_gen<S: Scalar>(&self, w: &[S]) -> Vec<Grass<S>>;
    /// Ghost number of generator g.
    fn ghost(&self, g: usize) -> i32;
}

/// A list of Grassmann-valued functions of the bosonic coordinates.
pub trait GrassFn {
    fn eval<S: Scalar>(&self, w: &[S]) -> Vec<Grass<S>>;
}

pub fn tangent<S: Scalar>(g: &Grass<Dual<S>>) -> Grass<S> {
    g.map(|x| x.d)
}

fn mono<S: Scalar>(m: Mono) -> Grass<S> {
    let mut g = Grass::zero();
    g.add_term(m, num_complex::Complex::new(S::one(), S::zero()));
    g
}

/// δ of a bare monomial, given δ on each generator.
pub fn delta_mono<S: Scalar>(m: Mono, dgen: &[Grass<S>]) -> Grass<S> {
    let mut out = Grass::zero();
    let mut seen = 0u32;
    for (k, dg) in dgen.iter().enumerate() {
        let bit: Mono = 1 << k;
        if m & bit == 0 {
            continue;
        }
        let before = m & (bit - 1);
        let after = m & !(bit | (bit - 1));
        let t = mono::<S>(before).mul(dg).mul(&mono(after));
        out = if seen % 2 == 1 { out.sub(&t) } else { out.add(&t) };
        seen += 1;
    }
    out
}

/// δF = Σ_b δw_b ∂_bF + Σ_M f_M δM, componentwise.
pub fn apply_delta<Y: GradedSystem, F: GrassFn, S: Scalar>(sys: &Y, f: &F, w: &[S]) -> Vec<Grass<S>> {
    let dbos = sys.delta_bos(w);
    let dgen = sys.delta_gen(w);
    let mut out: Vec<Grass<S>> = f
        .eval(w)
        .iter()
        .map(|fk| {
            let mut acc = Grass::zero();
            for (&m, &c) in &fk.terms {
                if m != 0 {
                    acc = acc.add(&delta_mono(m, &dgen).scale(c));
                }
            }
            acc
        })
        .collect();
    for (b, db) in dbos.iter().enumerate() {
        if db.terms.is_empty() {
            continue;
        }
        let df = f.eval(&seed(w, b));
        for (o, g) in out.iter_mut().zip(&df) {
            *o = o.add(&db.mul(&tangent(g)));
        }
    }
    out
}

/// The coordinate functions themselves: bosonic first, then generators.
pub struct Coords {
    pub n_bos: usize,
    pub n_gen: usize,
}

impl GrassFn for Coords {
    fn eval<S: Scalar>(&self, w: &[S]) -> Vec<Grass<S>> {
        let bos = w[..self.n_bos].iter().map(|&x| Grass::real(x));
        bos.chain((0..self.n_gen).map(Grass::gen)).collect()
    }
}

pub fn coords<Y: GradedSystem>(sys: &Y) -> Coords {
    Coords { n_bos: sys.n_bos(), n_gen: sys.n_gen() }
}

/// F ↦ δF as a function in its own right.
pub struct Delta<'s, Y, F>(pub &'s Y, pub F);

impl<'s, Y: GradedSystem, F: GrassFn> GrassFn for Delta<'s, Y, F> {
    fn eval<S: Scalar>(&self, w: &[S]) -> Vec<Grass<S>> {
        apply_delta(self.0, &self.1, w)
    }
}

/// Largest coefficient over a list, with the component and monomial.
pub fn worst<S: Scalar>(v: &[Grass<S>]) -> (f64, usize, Mono) {
    let mut best = (0.0, 0, 0);
    for (k, g) in v.iter().enumerate() {
        for (&m, c) in &g.terms {
            let r = c.re.re().abs().max(c.im.re().abs());
            if r > best.0 {
                best = (r, k, m);
            }
        }
    }
    best
}

/// Componentwise a − b, worst entry.
pub fn worst_diff<S: Scalar>(a: &[Grass<S>], b: &[Grass<S>]) -> (f64, usize, Mono) {
    let d: Vec<Grass<S>> = a.iter().zip(b).map(|(x, y)| x.sub(y)).collect();
    worst(&d)
}
