//! Finite Grassmann algebra over up to 16 odd generators with complex
//! coefficients. A monomial is a bitmask, generators in ascending order.

use manifold_core::Scalar;
use num_complex::Complex;
use num_traits::Zero;
use std::collections::BTreeMap;

pub type Mono = u16;

#[derive(Clone, Debug, PartialEq)]
pub struct Grass<S: Scalar> {
    pub terms: BTreeMap<Mono, Complex<S>>,
}

/// Sign of moving monomial b past monomial a into canonical order in a·b.
fn product_sign(a: Mono, b: Mono) -> bool {
    // count pairs (i in a, j in b) with i > j
    let mut n = 0u32;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        n += (a >> (j + 1)).count_ones();
        bb &= bb - 1;
    }
    n % 2 == 1
}

pub fn degree(m: Mono) -> u32 {
    m.count_ones()
}

impl<S: Scalar> Grass<S> {
    pub fn zero() -> Self {
        Grass { terms: BTreeMap::new() }
    }

    pub fn scalar(c: Complex<S>) -> Self {
        let mut g = Self::zero();
        g.terms.insert(0, c);
        g
    }

    pub fn real(c: S) -> Self {
        Self::scalar(Complex::new(c, S::zero()))
    }

    pub fn gen(k: usize) -> Self {
        let mut g = Self::zero();
        g.terms.insert(1 << k, Complex::new(S::one(), S::zero()));
        g
    }

    pub fn add_term(&mut self, m: Mono, c: Complex<S>) {
        let e = self.terms.entry(m).or_insert_with(Complex::zero);
        *e = *e + c;
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&m, &c) in &o.terms {
            r.add_term(m, c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(Complex::new(-S::one(), S::zero())))
    }

    pub fn scale(&self, c: Complex<S>) -> Self {
        Grass { terms: self.terms.iter().map(|(&m, &v)| (m, v * c)).collect() }
    }

    pub fn scale_re(&self, c: S) -> Self {
        self.scale(Complex::new(c, S::zero()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (&a, &x) in &self.terms {
            for (&b, &y) in &o.terms {
                if a & b != 0 {
                    continue;
                }
                let v = x * y;
                r.add_term(a | b, if product_sign(a, b) { -v } else { v });
            }
        }
        r
    }

    /// ∂/∂g_k acting from the left.
    pub fn left_deriv(&self, k: usize) -> Self {
        let bit: Mono = 1 << k;
        let mut r = Self::zero();
        for (&m, &c) in &self.terms {
            if m & bit != 0 {
                let before = (m & (bit - 1)).count_ones();
                r.add_term(m & !bit, if before % 2 == 1 { -c } else { c });
            }
        }
        r
    }

    /// ∂/∂g_k acting from the right.
    pub fn right_deriv(&self, k: usize) -> Self {
        let bit: Mono = 1 << k;
        let mut r = Self::zero();
        for (&m, &c) in &self.terms {
            if m & bit != 0 {
                let after = (m >> (k + 1)).count_ones();
                r.add_term(m & !bit, if after % 2 == 1 { -c } else { c });
            }
        }
        r
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(S) -> T) -> Grass<T> {
        Grass { terms: self.terms.iter().map(|(&m, c)| (m, Complex::new(f(c.re), f(c.im)))).collect() }
    }

    pub fn conj(&self) -> Self {
        Grass { terms: self.terms.iter().map(|(&m, c)| (m, c.conj())).collect() }
    }

    /// Largest coefficient modulus, on the value part.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().fold(0.0, |a, c| a.max(c.re.re().abs()).max(c.im.re().abs()))
    }

    /// Ghost numbers of all monomials with nonnegligible coefficients.
    pub fn ghost_numbers(&self, weight: impl Fn(usize) -> i32, tol: f64) -> Vec<i32> {
        let mut out: Vec<i32> = self
            .terms
            .iter()
            .filter(|(_, c)| c.re.re().abs().max(c.im.re().abs()) > tol)
            .map(|(&m, _)| (0..16).filter(|k| m & (1 << k) != 0).map(&weight).sum())
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Coefficient difference a − b per monomial: the largest modulus and the
/// offending monomial.
pub fn max_monomial_diff<S: Scalar>(a: &Grass<S>, b: &Grass<S>) -> (f64, Mono) {
    let d = a.sub(b);
    d.terms.iter().fold((0.0, 0), |acc, (&m, c)| {
        let v = c.re.re().abs().max(c.im.re().abs());
        if v > acc.0 {
            (v, m)
        } else {
            acc
        }
    })
}
