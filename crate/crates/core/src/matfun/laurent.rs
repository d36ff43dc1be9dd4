//! Laurent polynomials in `s = x^(1/2)` and square matrices of them.
//!
//! Every base-change matrix in the catalog has entries in ℚ[s, s⁻¹], so this
//! ring is closed under everything the pipeline needs: products, transposes,
//! `d/dx`, and exact division by a determinant.

use super::mat::Mat;
use super::matpoly::MatrixPolynomial;
use super::poly::Poly;
use super::rat::{fmt_rat, r, ri, Rat};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Map from s-exponent to nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HalfLaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl HalfLaurentPoly {
    pub fn zero() -> Self {
        HalfLaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        HalfLaurentPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        HalfLaurentPoly::monomial(c, 0)
    }

    /// `c · s^k`
    pub fn monomial(c: Rat, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        HalfLaurentPoly { terms }
    }

    pub fn s() -> Self {
        HalfLaurentPoly::monomial(Rat::one(), 1)
    }

    pub fn x() -> Self {
        HalfLaurentPoly::monomial(Rat::one(), 2)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(it: I) -> Self {
        let mut p = HalfLaurentPoly::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    /// Embeds a polynomial in x.
    pub fn from_x_poly(p: &Poly) -> Self {
        HalfLaurentPoly::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| (2 * k as i64, c.clone())))
    }

    /// `a + b x`
    pub fn x_linear(a: Rat, b: Rat) -> Self {
        HalfLaurentPoly::from_terms([(0, a), (2, b)])
    }

    fn add_term(&mut self, k: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> Rat {
        self.terms.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::one())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = HalfLaurentPoly::zero();
        for (i, a) in &self.terms {
            for (j, b) in &o.terms {
                out.add_term(i + j, a * b);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return HalfLaurentPoly::zero();
        }
        HalfLaurentPoly { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// Multiplication by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        HalfLaurentPoly { terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect() }
    }

    /// `d/dx`, using `d(s^k)/dx = (k/2) s^(k-2)`.
    pub fn differentiate_x(&self) -> Self {
        HalfLaurentPoly::from_terms(self.terms.iter().map(|(k, c)| (k - 2, c * r(*k, 2))))
    }

    /// Exact division in ℚ[s, s⁻¹]; any remainder is an error.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (Some(dmin), Some(dmax)) = (d.min_exp(), d.max_exp()) else {
            return Err(Error::SingularMatrix);
        };
        let Some(nmin) = self.min_exp() else {
            return Ok(HalfLaurentPoly::zero());
        };
        // Normalize both to polynomials in s; the divisor then has a nonzero constant term.
        let mut rem: BTreeMap<i64, Rat> = self.terms.iter().map(|(k, c)| (k - nmin, c.clone())).collect();
        let dlen = dmax - dmin;
        let lead = d.coeff(dmax).recip();
        let mut q = HalfLaurentPoly::zero();
        while let Some((&top, _)) = rem.iter().next_back() {
            if top < dlen {
                return Err(Error::InexactDivision);
            }
            let c = &rem[&top] * &lead;
            let shift = top - dlen;
            for (k, dc) in &d.terms {
                let e = k - dmin + shift;
                let v = rem.entry(e).or_insert_with(Rat::zero);
                *v -= &c * dc;
                if v.is_zero() {
                    rem.remove(&e);
                }
            }
            q.add_term(shift, c);
        }
        Ok(q.shift(nmin - dmin))
    }

    /// Converts to a polynomial in x when only even, nonnegative s-powers occur.
    /// Errors carry the offending exponent with a placeholder entry (0, 0).
    pub fn to_x_poly(&self) -> Result<Poly> {
        let mut coeffs = Vec::new();
        for (k, c) in &self.terms {
            if k % 2 != 0 {
                return Err(Error::OddPowerResidue { row: 0, col: 0, exponent: *k });
            }
            if *k < 0 {
                return Err(Error::NegativePower { row: 0, col: 0, exponent: *k });
            }
            let idx = (*k / 2) as usize;
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, Rat::zero());
            }
            coeffs[idx] = c.clone();
        }
        Ok(Poly::new(coeffs))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let s = x.sqrt();
        self.terms.iter().map(|(k, c)| super::rat::to_f64(c) * s.powi(*k as i32)).sum()
    }
}

impl fmt::Display for HalfLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            match (*k, mag.is_one()) {
                (0, _) => write!(f, "{}", fmt_rat(&mag))?,
                (1, true) => write!(f, "s")?,
                (1, false) => write!(f, "{}*s", fmt_rat(&mag))?,
                (_, true) => write!(f, "s^{k}")?,
                (_, false) => write!(f, "{}*s^{k}", fmt_rat(&mag))?,
            }
        }
        Ok(())
    }
}

/// Square matrix over ℚ[s, s⁻¹].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfLaurentMatrix {
    size: usize,
    entries: Vec<HalfLaurentPoly>,
}

impl HalfLaurentMatrix {
    pub fn new(rows: Vec<Vec<HalfLaurentPoly>>) -> Self {
        let n = rows.len();
        assert!(n > 0 && rows.iter().all(|r| r.len() == n), "HalfLaurentMatrix must be square");
        HalfLaurentMatrix { size: n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn zeros(n: usize) -> Self {
        HalfLaurentMatrix { size: n, entries: vec![HalfLaurentPoly::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = HalfLaurentMatrix::zeros(n);
        for i in 0..n {
            *m.get_mut(i, i) = HalfLaurentPoly::one();
        }
        m
    }

    pub fn from_mat(m: &Mat) -> Self {
        assert!(m.is_square());
        let n = m.rows();
        HalfLaurentMatrix::new(
            (0..n).map(|i| (0..n).map(|j| HalfLaurentPoly::constant(m[(i, j)].clone())).collect()).collect(),
        )
    }

    pub fn from_matrix_polynomial(p: &MatrixPolynomial) -> Self {
        let n = p.size();
        HalfLaurentMatrix::new(
            (0..n).map(|i| (0..n).map(|j| HalfLaurentPoly::from_x_poly(&p.entry(i, j))).collect()).collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &HalfLaurentPoly {
        &self.entries[i * self.size + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut HalfLaurentPoly {
        &mut self.entries[i * self.size + j]
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &HalfLaurentPoly)> {
        self.entries.iter().enumerate().map(move |(k, p)| ((k / self.size, k % self.size), p))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(HalfLaurentPoly::is_zero)
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.size == o.size {
            Ok(())
        } else {
            Err(Error::SizeMismatch(self.size, o.size))
        }
    }

    fn map(&self, f: impl Fn(&HalfLaurentPoly) -> HalfLaurentPoly) -> Self {
        HalfLaurentMatrix { size: self.size, entries: self.entries.iter().map(f).collect() }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(HalfLaurentMatrix {
            size: self.size,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(HalfLaurentMatrix {
            size: self.size,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.size;
        let mut out = HalfLaurentMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = HalfLaurentPoly::zero();
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(o.get(k, j)));
                }
                *out.get_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    /// Coefficients are real, so this is the transpose.
    pub fn conjugate_transpose(&self) -> Self {
        let n = self.size;
        let mut out = HalfLaurentMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                *out.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn scalar_mul(&self, c: &Rat) -> Self {
        self.map(|p| p.scale(c))
    }

    /// Entry-wise multiplication by a scalar Laurent polynomial.
    pub fn mul_scalar_poly(&self, p: &HalfLaurentPoly) -> Self {
        self.map(|e| e.mul(p))
    }

    pub fn differentiate_x(&self) -> Self {
        self.map(HalfLaurentPoly::differentiate_x)
    }

    pub fn collapse_to_x(&self) -> Result<MatrixPolynomial> {
        let n = self.size;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let p = self.get(i, j).to_x_poly().map_err(|e| match e {
                    Error::OddPowerResidue { exponent, .. } => Error::OddPowerResidue { row: i, col: j, exponent },
                    Error::NegativePower { exponent, .. } => Error::NegativePower { row: i, col: j, exponent },
                    other => other,
                })?;
                row.push(p);
            }
            rows.push(row);
        }
        Ok(MatrixPolynomial::from_entries(&rows))
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> Self {
        let n = self.size;
        HalfLaurentMatrix::new(
            (0..n)
                .filter(|&i| i != skip_r)
                .map(|i| (0..n).filter(|&j| j != skip_c).map(|j| self.get(i, j).clone()).collect())
                .collect(),
        )
    }

    /// Cofactor expansion along the first row.
    pub fn det(&self) -> HalfLaurentPoly {
        let n = self.size;
        if n == 1 {
            return self.get(0, 0).clone();
        }
        let mut acc = HalfLaurentPoly::zero();
        for j in 0..n {
            if self.get(0, j).is_zero() {
                continue;
            }
            let term = self.get(0, j).mul(&self.minor(0, j).det());
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    pub fn adjugate(&self) -> Self {
        let n = self.size;
        if n == 1 {
            return HalfLaurentMatrix::identity(1);
        }
        let mut out = HalfLaurentMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(j, i).det();
                *out.get_mut(i, j) = if (i + j) % 2 == 0 { c } else { c.neg() };
            }
        }
        out
    }

    /// `self⁻¹ · b` via the adjugate and exact division by the determinant.
    pub fn inverse_times(&self, b: &Self) -> Result<Self> {
        self.check(b)?;
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let num = self.adjugate().mul(b)?;
        let mut entries = Vec::with_capacity(num.entries.len());
        for e in &num.entries {
            entries.push(e.div_exact(&det)?);
        }
        Ok(HalfLaurentMatrix { size: self.size, entries })
    }

    /// Constant (s⁰) and x (s²) coefficient matrices when the matrix is affine in x.
    pub fn affine_parts(&self) -> Option<(Mat, Mat)> {
        let n = self.size;
        let mut c0 = Mat::zeros(n, n);
        let mut c1 = Mat::zeros(n, n);
        for ((i, j), p) in self.entries() {
            for (k, c) in p.terms() {
                match k {
                    0 => c0[(i, j)] = c.clone(),
                    2 => c1[(i, j)] = c.clone(),
                    _ => return None,
                }
            }
        }
        Some((c0, c1))
    }

    pub fn eval_f64(&self, x: f64) -> Vec<Vec<f64>> {
        (0..self.size).map(|i| (0..self.size).map(|j| self.get(i, j).eval_f64(x)).collect()).collect()
    }

    /// Minimum s-exponent over all entries.
    pub fn min_exp(&self) -> Option<i64> {
        self.entries.iter().filter_map(HalfLaurentPoly::min_exp).min()
    }

    pub fn shift(&self, k: i64) -> Self {
        self.map(|p| p.shift(k))
    }
}

impl fmt::Display for HalfLaurentMatrix {
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
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Shorthand for `c · s^k` with integer `c`.
pub fn hl(c: i64, k: i64) -> HalfLaurentPoly {
    HalfLaurentPoly::monomial(ri(c), k)
}
