//! First-order data `(S̃, R̃)`, the weight `W`, the operator `D`, and the exact
//! checks that make `(W, D)` a classical pair.

use crate::catalog::CaseDescriptor;
use crate::error::{Error, Result};
use crate::matfun::{ri, HalfLaurentMatrix, HalfLaurentPoly, Mat, MatrixPolynomial, Poly, Rat};
use num_traits::{One, Zero};

/// `x(1−x) Ψ₀′ = Ψ₀ (S̃ + x R̃)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstOrderData {
    pub s_tilde: Mat,
    pub r_tilde: Mat,
}

/// `D = x(x−1)∂² + (C0 + C1 x)∂ + A0`, acting on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondOrderOperator {
    pub c0: Mat,
    pub c1: Mat,
    pub a0: Mat,
}

impl SecondOrderOperator {
    pub fn size(&self) -> usize {
        self.a0.rows()
    }

    /// `A1(x) = C0 + C1 x`
    pub fn a1(&self) -> MatrixPolynomial {
        MatrixPolynomial::new(self.size(), vec![self.c0.clone(), self.c1.clone()])
    }
}

/// `x^β (1−x)^α · core(x)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedMatrix {
    pub alpha: Rat,
    pub beta: Rat,
    pub core: MatrixPolynomial,
}

impl WeightedMatrix {
    pub fn size(&self) -> usize {
        self.core.size()
    }
}

fn x_one_minus_x() -> HalfLaurentPoly {
    HalfLaurentPoly::from_terms([(2, Rat::one()), (4, -Rat::one())])
}

pub fn extract_rs(psi0: &HalfLaurentMatrix) -> Result<FirstOrderData> {
    let rhs = psi0.differentiate_x().mul_scalar_poly(&x_one_minus_x());
    let e = psi0.inverse_times(&rhs).map_err(|err| match err {
        Error::InexactDivision => Error::NotAffine("Ψ₀⁻¹ x(1−x)Ψ₀′ is not a Laurent polynomial".into()),
        other => other,
    })?;
    let (s_tilde, r_tilde) = e.affine_parts().ok_or_else(|| Error::NotAffine(e.to_string()))?;
    Ok(FirstOrderData { s_tilde, r_tilde })
}

/// `x(1−x)Ψ₀′ − Ψ₀(S̃ + xR̃)`, identically zero for valid data.
pub fn first_order_residual(psi0: &HalfLaurentMatrix, fo: &FirstOrderData) -> HalfLaurentMatrix {
    let n = psi0.size();
    let mut affine = HalfLaurentMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            *affine.get_mut(i, j) =
                HalfLaurentPoly::x_linear(fo.s_tilde[(i, j)].clone(), fo.r_tilde[(i, j)].clone());
        }
    }
    let lhs = psi0.differentiate_x().mul_scalar_poly(&x_one_minus_x());
    lhs.sub(&psi0.mul(&affine).expect("same size")).expect("same size")
}

/// `x^β(1−x)^α Ψ₀ᵀ T Ψ₀`, with any common even power of `s` folded into `β`.
pub fn weight_from_parts(psi0: &HalfLaurentMatrix, t: &Mat, alpha: &Rat, beta: &Rat) -> Result<WeightedMatrix> {
    let full = psi0.conjugate_transpose().mul(&HalfLaurentMatrix::from_mat(t))?.mul(psi0)?;
    let k = full.min_exp().unwrap_or(0);
    let (full, fold) = if k % 2 == 0 { (full.shift(-k), k / 2) } else { (full, 0) };
    let core = full.collapse_to_x()?;
    if !core.is_symmetric() {
        return Err(Error::NonSymmetricCore);
    }
    Ok(WeightedMatrix { alpha: alpha.clone(), beta: beta + ri(fold), core })
}

pub fn build_weight(case: &CaseDescriptor) -> Result<WeightedMatrix> {
    weight_from_parts(&case.psi0, &case.t, &case.constants.alpha, &case.constants.beta)
}

pub fn operator_from(case: &CaseDescriptor, fo: &FirstOrderData) -> SecondOrderOperator {
    let n = case.size();
    let k = &case.constants;
    let two = ri(2);
    SecondOrderOperator {
        c0: &Mat::scalar(n, &k.c0_scalar()) - &fo.s_tilde.scale(&two),
        c1: &Mat::scalar(n, &k.c1_scalar()) - &fo.r_tilde.scale(&two),
        a0: case.lambda0.scale(&k.rp2.recip()),
    }
}

pub fn build_operator(case: &CaseDescriptor) -> Result<SecondOrderOperator> {
    Ok(operator_from(case, &extract_rs(&case.psi0)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub identity1: bool,
    pub identity2: bool,
    pub residual1: MatrixPolynomial,
    pub residual2: MatrixPolynomial,
}

impl SymmetryReport {
    pub fn passed(&self) -> bool {
        self.identity1 && self.identity2
    }
}

/// Checks
/// `A1ᵀW = −WA1 + 2(x(x−1)W)′` and `A0ᵀW = WA0 − (WA1)′ + (x(x−1)W)″`.
///
/// With `W = ŵ·g·K`, `ŵ = x^(β−1)(1−x)^(α−1)`, `g = x(1−x)` and `ŵ′ = ŵ·h/g`
/// where `h = (β−1) − (α+β−2)x`, both identities divide through by `ŵ`
/// (and the first also by `g`) to polynomial identities in x:
///
/// * `A1ᵀK + KA1 + 2hK + 4g′K + 2gK′ = 0`
/// * `g(A0ᵀK − KA0) + hKA1 + (gKA1)′ + hG + (gG)′ = 0`, `G = hK + 2g′K + gK′`.
pub fn verify_symmetry(w: &WeightedMatrix, d: &SecondOrderOperator) -> SymmetryReport {
    let k = &w.core;
    let g = Poly::new(vec![Rat::zero(), Rat::one(), -Rat::one()]);
    let gp = g.derivative();
    let h = Poly::linear(&w.beta - ri(1), -(&w.alpha + &w.beta - ri(2)));
    let a1 = d.a1();
    let kp = k.derivative();

    let r1 = a1
        .transpose()
        .mul(k)
        .add(&k.mul(&a1))
        .add(&k.mul_poly(&h.scale(&ri(2))))
        .add(&k.mul_poly(&gp.scale(&ri(4))))
        .add(&kp.mul_poly(&g.scale(&ri(2))));

    let big_g = k.mul_poly(&h).add(&k.mul_poly(&gp.scale(&ri(2)))).add(&kp.mul_poly(&g));
    let ka1 = k.mul(&a1);
    let comm = k.mul_mat_left(&d.a0.transpose()).sub(&k.mul_mat_right(&d.a0));
    let r2 = comm
        .mul_poly(&g)
        .add(&ka1.mul_poly(&h))
        .add(&ka1.mul_poly(&g).derivative())
        .add(&big_g.mul_poly(&h))
        .add(&big_g.mul_poly(&g).derivative());

    SymmetryReport { identity1: r1.is_zero(), identity2: r2.is_zero(), residual1: r1, residual2: r2 }
}

/// Factors `det(core)` as `c · x^a · (1−x)^b`.
pub fn det_factor_check(w: &WeightedMatrix) -> Result<(Rat, u32, u32)> {
    let mut p = w.core.det();
    if p.is_zero() {
        return Err(Error::ExtraFactor("0".into()));
    }
    let mut a = 0;
    while p.coeff(0).is_zero() {
        p = Poly::new(p.coeffs()[1..].to_vec());
        a += 1;
    }
    let one_minus_x = Poly::linear(Rat::one(), -Rat::one());
    let mut b = 0;
    loop {
        let (q, rem) = p.div_rem(&one_minus_x);
        if !rem.is_zero() {
            break;
        }
        p = q;
        b += 1;
    }
    if p.degree() != Some(0) {
        return Err(Error::ExtraFactor(p.to_string()));
    }
    Ok((p.coeff(0), a, b))
}

/// Basis of the constant matrices `X` with `X W(x) = W(x) X` for all x.
pub fn commutant(w: &WeightedMatrix) -> Vec<Mat> {
    let n = w.size();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for kc in w.core.coeffs() {
        for i in 0..n {
            for j in 0..n {
                // (X K − K X)_{ij} as a linear form in X_{ab}, index a*n + b.
                let mut row = vec![Rat::zero(); n * n];
                for b in 0..n {
                    row[i * n + b] += &kc[(b, j)];
                }
                for a in 0..n {
                    row[a * n + j] -= &kc[(i, a)];
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        rows.push(vec![Rat::zero(); n * n]);
    }
    Mat::from_rows(rows)
        .nullspace()
        .into_iter()
        .map(|v| Mat::from_rows(v.chunks(n).map(|c| c.to_vec()).collect()))
        .collect()
}
