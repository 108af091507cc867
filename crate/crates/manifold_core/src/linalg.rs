//! Small dense matrices, generic over real scalars and complex entries.

use crate::scalar::Scalar;
use num_complex::Complex;
use num_traits::Num;
use std::fmt::Debug;
use std::ops::{Index, IndexMut, Neg};

pub trait Entry: Num + Copy + Debug + Neg<Output = Self> {
    /// Magnitude of the bottom-level value, used for pivoting and residuals.
    fn mag(&self) -> f64;
}

impl<S: Scalar> Entry for S {
    fn mag(&self) -> f64 {
        self.re().abs()
    }
}

impl<S: Scalar> Entry for Complex<S> {
    fn mag(&self) -> f64 {
        self.re.re().hypot(self.im.re())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: Entry> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Mat::from_fn(r, c, |i, j| rows[i][j])
    }

    pub fn t(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                for j in 0..o.cols {
                    out[(i, j)] = out[(i, j)] + a * o[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        (0..self.rows)
            .map(|i| (0..self.cols).fold(T::zero(), |acc, j| acc + self[(i, j)] * v[j]))
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + o[(i, j)])
    }

    pub fn sub(&self, o: &Self) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - o[(i, j)])
    }

    pub fn scale(&self, s: T) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)] * s)
    }

    pub fn map<U: Entry>(&self, f: impl Fn(T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.mag()))
    }

    /// Gauss-Jordan with partial pivoting on the bottom-level magnitude.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n).max_by(|&x, &y| a[(x, c)].mag().total_cmp(&a[(y, c)].mag()))?;
            if a[(p, c)].mag() < 1e-300 {
                return None;
            }
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                    inv.data.swap(p * n + j, c * n + j);
                }
            }
            let piv = T::one() / a[(c, c)];
            for j in 0..n {
                a[(c, j)] = a[(c, j)] * piv;
                inv[(c, j)] = inv[(c, j)] * piv;
            }
            for r in 0..n {
                if r != c {
                    let f = a[(r, c)];
                    if f.mag() != 0.0 || !f.is_zero() {
                        for j in 0..n {
                            a[(r, j)] = a[(r, j)] - f * a[(c, j)];
                            inv[(r, j)] = inv[(r, j)] - f * inv[(c, j)];
                        }
                    }
                }
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for c in 0..n {
            let p = (c..n).max_by(|&x, &y| a[(x, c)].mag().total_cmp(&a[(y, c)].mag())).unwrap();
            if a[(p, c)].is_zero() {
                return T::zero();
            }
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            det = det * a[(c, c)];
            for r in c + 1..n {
                let f = a[(r, c)] / a[(c, c)];
                for j in c..n {
                    a[(r, j)] = a[(r, j)] - f * a[(c, j)];
                }
            }
        }
        det
    }
}

impl<S: Scalar> Mat<S> {
    pub fn to_complex(&self) -> Mat<Complex<S>> {
        self.map(|x| Complex::new(x, S::zero()))
    }
    pub fn values(&self) -> Mat<f64> {
        self.map(|x| x.re())
    }
}

impl Mat<f64> {
    pub fn lift<S: Scalar>(&self) -> Mat<S> {
        self.map(S::from_f64)
    }
}

impl<S: Scalar> Mat<Complex<S>> {
    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

/// Symmetric eigendecomposition by cyclic Jacobi rotations (f64 only).
/// Returns eigenvalues and the orthogonal matrix of eigenvectors (columns).
pub fn sym_eigen(a: &Mat<f64>) -> (Vec<f64>, Mat<f64>) {
    let n = a.rows;
    let mut m = a.clone();
    let mut v = Mat::<f64>::identity(n);
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[(i, j)] * m[(i, j)])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[(p, q)].abs() < 1e-300 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * m[(p, q)]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    ((0..n).map(|i| m[(i, i)]).collect(), v)
}

/// Inverse square root of a symmetric positive definite matrix by the
/// Denman-Beavers iteration. Smooth in the entries, so it differentiates
/// correctly through dual numbers (an eigen-solver would not).
pub fn spd_inv_sqrt<S: Scalar>(a: &Mat<S>) -> Option<Mat<S>> {
    let n = a.rows;
    // normalise so the iteration starts well conditioned
    let scale = (0..n).fold(S::zero(), |acc, i| acc + a[(i, i)]) / S::from_f64(n as f64);
    let mut y = a.scale(S::one() / scale);
    let mut z = Mat::identity(n);
    let half = S::from_f64(0.5);
    for _ in 0..60 {
        let yi = y.inverse()?;
        let zi = z.inverse()?;
        let yn = y.add(&zi).scale(half);
        let zn = z.add(&yi).scale(half);
        let delta = yn.sub(&y).max_abs();
        y = yn;
        z = zn;
        if delta < 1e-15 {
            // two more steps let the derivative parts settle as well
            for _ in 0..3 {
                let yi = y.inverse()?;
                let zi = z.inverse()?;
                let yn = y.add(&zi).scale(half);
                z = z.add(&yi).scale(half);
                y = yn;
            }
            break;
        }
    }
    Some(z.scale(S::one() / scale.sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let a = Mat::from_rows(&[vec![4.0, 1.0, 0.5], vec![1.0, 3.0, 0.2], vec![0.5, 0.2, 2.0]]);
        let i = a.mul(&a.inverse().unwrap());
        assert!(i.sub(&Mat::identity(3)).max_abs() < 1e-14);
    }

    #[test]
    fn inv_sqrt_agrees_with_eigen() {
        let a = Mat::from_rows(&[vec![4.0, 1.0], vec![1.0, 3.0]]);
        let z = spd_inv_sqrt(&a).unwrap();
        let (w, v) = sym_eigen(&a);
        let d = Mat::from_fn(2, 2, |i, j| if i == j { 1.0 / w[i].sqrt() } else { 0.0 });
        let e = v.mul(&d).mul(&v.t());
        assert!(z.sub(&e).max_abs() < 1e-13);
    }
}
