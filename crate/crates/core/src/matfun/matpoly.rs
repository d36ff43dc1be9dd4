//! Polynomials in x with square matrix coefficients.

use super::mat::Mat;
use super::poly::Poly;
use super::rat::{ri, Rat};
use num_traits::Zero;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixPolynomial {
    size: usize,
    coeffs: Vec<Mat>,
}

impl MatrixPolynomial {
    pub fn new(size: usize, coeffs: Vec<Mat>) -> Self {
        assert!(coeffs.iter().all(|c| c.rows() == size && c.cols() == size));
        let mut p = MatrixPolynomial { size, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero(size: usize) -> Self {
        MatrixPolynomial { size, coeffs: vec![] }
    }

    pub fn constant(m: Mat) -> Self {
        let n = m.rows();
        MatrixPolynomial::new(n, vec![m])
    }

    pub fn identity(size: usize) -> Self {
        MatrixPolynomial::constant(Mat::identity(size))
    }

    /// `m · x^k`
    pub fn monomial(m: Mat, k: usize) -> Self {
        let n = m.rows();
        let mut coeffs = vec![Mat::zeros(n, n); k];
        coeffs.push(m);
        MatrixPolynomial::new(n, coeffs)
    }

    /// Builds a matrix of scalar polynomials.
    pub fn from_entries(entries: &[Vec<Poly>]) -> Self {
        let n = entries.len();
        let deg = entries.iter().flatten().filter_map(|p| p.degree()).max();
        let Some(deg) = deg else {
            return MatrixPolynomial::zero(n);
        };
        let coeffs = (0..=deg)
            .map(|k| {
                let mut m = Mat::zeros(n, n);
                for (i, row) in entries.iter().enumerate() {
                    assert_eq!(row.len(), n);
                    for (j, p) in row.iter().enumerate() {
                        m[(i, j)] = p.coeff(k);
                    }
                }
                m
            })
            .collect();
        MatrixPolynomial::new(n, coeffs)
    }

    pub fn entry(&self, i: usize, j: usize) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c[(i, j)].clone()).collect())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn coeffs(&self) -> &[Mat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Mat {
        self.coeffs.get(k).cloned().unwrap_or_else(|| Mat::zeros(self.size, self.size))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Mat> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.size, o.size);
        let n = self.coeffs.len().max(o.coeffs.len());
        MatrixPolynomial::new(self.size, (0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.size, o.size);
        let n = self.coeffs.len().max(o.coeffs.len());
        MatrixPolynomial::new(self.size, (0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.size, o.size);
        if self.is_zero() || o.is_zero() {
            return MatrixPolynomial::zero(self.size);
        }
        let mut out = vec![Mat::zeros(self.size, self.size); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        MatrixPolynomial::new(self.size, out)
    }

    pub fn mul_mat_right(&self, m: &Mat) -> Self {
        MatrixPolynomial::new(self.size, self.coeffs.iter().map(|c| c * m).collect())
    }

    pub fn mul_mat_left(&self, m: &Mat) -> Self {
        MatrixPolynomial::new(self.size, self.coeffs.iter().map(|c| m * c).collect())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        MatrixPolynomial::new(self.size, self.coeffs.iter().map(|m| m.scale(c)).collect())
    }

    /// Multiplication by a scalar polynomial.
    pub fn mul_poly(&self, p: &Poly) -> Self {
        if self.is_zero() || p.is_zero() {
            return MatrixPolynomial::zero(self.size);
        }
        let mut out = vec![Mat::zeros(self.size, self.size); self.coeffs.len() + p.coeffs().len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out[i + j] = &out[i + j] + &a.scale(c);
                }
            }
        }
        MatrixPolynomial::new(self.size, out)
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Mat::zeros(self.size, self.size); k];
        coeffs.extend(self.coeffs.iter().cloned());
        MatrixPolynomial::new(self.size, coeffs)
    }

    pub fn derivative(&self) -> Self {
        MatrixPolynomial::new(
            self.size,
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.scale(&ri(k as i64))).collect(),
        )
    }

    pub fn transpose(&self) -> Self {
        MatrixPolynomial::new(self.size, self.coeffs.iter().map(Mat::transpose).collect())
    }

    pub fn eval(&self, x: &Rat) -> Mat {
        self.coeffs.iter().rev().fold(Mat::zeros(self.size, self.size), |acc, c| &acc.scale(x) + c)
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(Mat::is_symmetric)
    }

    /// Exact determinant by cofactor expansion over ℚ[x].
    pub fn det(&self) -> Poly {
        let entries: Vec<Vec<Poly>> =
            (0..self.size).map(|i| (0..self.size).map(|j| self.entry(i, j)).collect()).collect();
        poly_det(&entries)
    }
}

fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    match n {
        0 => Poly::constant(ri(1)),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = Poly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][j] * &poly_det(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

impl fmt::Display for MatrixPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.size {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.size {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matfun::rat::ri;

    #[test]
    fn trailing_zeros_trimmed() {
        let p = MatrixPolynomial::new(2, vec![Mat::identity(2), Mat::zeros(2, 2)]);
        assert_eq!(p.degree(), Some(0));
        assert!(MatrixPolynomial::new(2, vec![Mat::zeros(2, 2)]).is_zero());
    }

    #[test]
    fn product_rule_on_derivative() {
        let a = MatrixPolynomial::new(2, vec![Mat::from_i64(&[&[1, 2], &[0, 1]]), Mat::from_i64(&[&[0, 1], &[1, 0]])]);
        let b = MatrixPolynomial::new(2, vec![Mat::from_i64(&[&[3, 0], &[1, 1]]), Mat::identity(2), Mat::from_i64(&[&[1, 1], &[1, 1]])]);
        let lhs = a.mul(&b).derivative();
        let rhs = a.derivative().mul(&b).add(&a.mul(&b.derivative()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn det_of_diagonal() {
        let p = MatrixPolynomial::from_entries(&[
            vec![Poly::x(), Poly::zero()],
            vec![Poly::zero(), Poly::linear(ri(1), ri(-1))],
        ]);
        assert_eq!(p.det(), Poly::new(vec![ri(0), ri(1), ri(-1)]));
    }
}
