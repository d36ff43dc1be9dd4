//! Tirao's matrix hypergeometric series
//! `₂H₁(U, V; C; x) = Σ xⁱ/i! [C,U,V]_i`, solving `x(1−x)F″ + (C − xU)F′ − VF = 0`,
//! and the monic C1 polynomials it produces.

use crate::catalog::{c1_m_matrix, eigenvalue_catalog, CaseDescriptor, FamilyId};
use crate::error::{Error, Result};
use crate::matfun::rat::rat_factorial;
use crate::matfun::{ri, Mat, MatrixPolynomial, Rat};
use crate::odekit::build_operator;
use num_traits::One;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergeometricParams {
    pub c: Mat,
    pub u: Mat,
    pub v: Mat,
}

impl HypergeometricParams {
    pub fn size(&self) -> usize {
        self.c.rows()
    }

    /// Scalar Gauss parameters: `C = c`, `U = a+b+1`, `V = ab`.
    pub fn gauss(a: &Rat, b: &Rat, c: &Rat) -> Self {
        HypergeometricParams {
            c: Mat::scalar(1, c),
            u: Mat::scalar(1, &(a + b + ri(1))),
            v: Mat::scalar(1, &(a * b)),
        }
    }
}

/// `[C,U,V]_{i+1} = (C+i)⁻¹ (i² + i(U−1) + V) [C,U,V]_i`, `[C,U,V]_0 = I`.
pub fn step(p: &HypergeometricParams, i: usize, prev: &Mat) -> Result<Mat> {
    let n = p.size();
    let ir = ri(i as i64);
    let shift = &p.c + &Mat::scalar(n, &ir);
    let num = &(&Mat::scalar(n, &(&ir * &ir)) + &(&p.u - &Mat::identity(n)).scale(&ir)) + &p.v;
    shift.solve(&(&num * prev)).ok_or(Error::SingularShift(i))
}

pub fn h_coefficients(p: &HypergeometricParams, kmax: usize) -> Result<Vec<Mat>> {
    let mut out = vec![Mat::identity(p.size())];
    for i in 0..kmax {
        let next = step(p, i, &out[i])?;
        out.push(next);
    }
    Ok(out)
}

/// Partial sum `Σ_{i≤kmax} xⁱ/i! [C,U,V]_i f0`.
pub fn evaluate_2h1(p: &HypergeometricParams, f0: &Mat, x: &Rat, kmax: usize) -> Result<Mat> {
    let coeffs = h_coefficients(p, kmax)?;
    let mut acc = Mat::zeros(p.size(), f0.cols());
    let mut xi = Rat::one();
    for (i, c) in coeffs.iter().enumerate() {
        let w = &xi / rat_factorial(i as u64);
        acc = &acc + &(c * f0).scale(&w);
        xi *= x;
    }
    Ok(acc)
}

/// Hypergeometric data of `D F = λ F`: `C = −C0`, `U = C1`, `V = A0 − λ`.
pub fn params_for_eigenvalue(case: &CaseDescriptor, lambda: &Rat) -> Result<HypergeometricParams> {
    let d = build_operator(case)?;
    let n = d.size();
    Ok(HypergeometricParams { c: -&d.c0, u: d.c1.clone(), v: &d.a0 - &Mat::scalar(n, lambda) })
}

/// Monic `P_d` for C1, built column by column from polynomial ₂H₁ solutions.
///
/// The columns of `P_d M⁻¹` are eigenfunctions with eigenvalues `λ_d(1)`, `λ_d(2)`
/// and leading coefficients `M⁻¹ e_i`, so column i is
/// `₂H₁(U, V_i; C; x) F_d(i)` with `F_d(i) = d! [C,U,V_i]_d⁻¹ M⁻¹ e_i`.
pub fn monic_via_hypergeometric(case: &CaseDescriptor, d: usize) -> Result<MatrixPolynomial> {
    if case.family != FamilyId::C1 {
        return Err(Error::UnsupportedFamily(case.family.to_string()));
    }
    let n = case.param("n").expect("C1 has n");
    let m = c1_m_matrix(n, d as u64);
    let m_inv = m.inverse().expect("unipotent");
    let mut q = vec![Mat::zeros(2, 2); d + 1];
    for slot in 1..=2 {
        let lambda = eigenvalue_catalog(case, d as u64, slot)?;
        let p = params_for_eigenvalue(case, &lambda)?;
        let coeffs = h_coefficients(&p, d + 1)?;
        let lead = &m_inv * &Mat::unit(2, slot - 1);
        let f = coeffs[d]
            .solve(&lead.scale(&rat_factorial(d as u64)))
            .ok_or_else(|| Error::NonTerminating(format!("[C,U,V]_{d} singular for slot {slot}")))?;
        let tail = &coeffs[d + 1] * &f;
        if !tail.is_zero() {
            return Err(Error::NonTerminating(format!("term {} is {} for slot {slot}", d + 1, tail)));
        }
        for (k, qk) in q.iter_mut().enumerate() {
            let col = (&coeffs[k] * &f).scale(&rat_factorial(k as u64).recip());
            qk.set_col(slot - 1, &col);
        }
    }
    Ok(MatrixPolynomial::new(2, q).mul_mat_right(&m))
}
