//! Monic matrix orthogonal polynomials from moments, and their checks
//! against the second-order operator.

use crate::error::{Error, Result};
use crate::matfun::rat::{as_i64, rat_factorial, to_f64};
use crate::matfun::{ri, Mat, MatrixPolynomial, Rat};
use crate::odekit::{SecondOrderOperator, WeightedMatrix};
use num_traits::{One, Zero};
use rayon::prelude::*;
use statrs::function::gamma::ln_gamma;

/// `M_k = ∫₀¹ x^k x^β (1−x)^α core(x) dx` for `k = 0..=kmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentTable {
    pub alpha: Rat,
    pub beta: Rat,
    pub moments: Vec<Mat>,
}

impl MomentTable {
    pub fn kmax(&self) -> usize {
        self.moments.len() - 1
    }

    fn get(&self, k: usize) -> Result<&Mat> {
        self.moments.get(k).ok_or(Error::MomentRangeExceeded { have: self.kmax(), need: k })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicFamily {
    pub moments: MomentTable,
    pub polys: Vec<MatrixPolynomial>,
}

fn integrable(w: &WeightedMatrix) -> Result<()> {
    if w.alpha <= ri(-1) {
        return Err(Error::NonIntegrable(format!("(1−x)^{} at x = 1", w.alpha)));
    }
    if w.beta <= ri(-1) {
        return Err(Error::NonIntegrable(format!("x^{} at x = 0", w.beta)));
    }
    Ok(())
}

/// `∫₀¹ x^p (1−x)^q dx = p! q! / (p+q+1)!`
pub fn beta_integral(p: u64, q: u64) -> Rat {
    rat_factorial(p) * rat_factorial(q) / rat_factorial(p + q + 1)
}

/// Exact moments; needs integer α and β.
pub fn moments(w: &WeightedMatrix, kmax: usize) -> Result<MomentTable> {
    integrable(w)?;
    let (Some(a), Some(b)) = (as_i64(&w.alpha), as_i64(&w.beta)) else {
        return Err(Error::ExactUnavailable);
    };
    let n = w.size();
    let moments = (0..=kmax)
        .map(|k| {
            let mut m = Mat::zeros(n, n);
            for (p, c) in w.core.coeffs().iter().enumerate() {
                let beta = beta_integral((b + (k + p) as i64) as u64, a as u64);
                m = &m + &c.scale(&beta);
            }
            m
        })
        .collect();
    Ok(MomentTable { alpha: w.alpha.clone(), beta: w.beta.clone(), moments })
}

/// Gauss–Jacobi rule on `[0, 1]` for the weight `x^β (1−x)^α`.
///
/// Newton iteration on the Jacobi three-term recurrence with the usual
/// asymptotic starting guesses; nodes come out in decreasing order.
#[allow(clippy::approx_constant)]
pub fn gauss_jacobi(npts: usize, alpha: f64, beta: f64) -> (Vec<f64>, Vec<f64>) {
    assert!(npts >= 4, "gauss_jacobi needs at least 4 nodes");
    let (alf, bet) = (alpha, beta);
    let n = npts;
    let nf = n as f64;
    let alfbet = alf + bet;
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    // Γ(a+n)Γ(b+n) / (Γ(n+1)Γ(n+a+b+1)) as a product; exp of large lnΓ values loses digits.
    let mut gratio = (ln_gamma(alf + 1.0) + ln_gamma(bet + 1.0) - ln_gamma(alfbet + 2.0)).exp() / nf;
    for k in 1..n {
        let kf = k as f64;
        gratio *= (alf + kf) * (bet + kf) / (kf * (alfbet + 1.0 + kf));
    }
    let mut z = 0.0f64;
    for i in 1..=n {
        z = if i == 1 {
            let an = alf / nf;
            let bn = bet / nf;
            let r1 = (1.0 + alf) * (2.78 / (4.0 + nf * nf) + 0.768 * an / nf);
            let r2 = 1.0 + 1.48 * an + 0.96 * bn + 0.452 * an * an + 0.83 * an * bn;
            1.0 - r1 / r2
        } else if i == 2 {
            let r1 = (4.1 + alf) / ((1.0 + alf) * (1.0 + 0.156 * alf));
            let r2 = 1.0 + 0.06 * (nf - 8.0) * (1.0 + 0.12 * alf) / nf;
            let r3 = 1.0 + 0.012 * bet * (1.0 + 0.25 * alf.abs()) / nf;
            z - (1.0 - z) * r1 * r2 * r3
        } else if i == 3 {
            let r1 = (1.67 + 0.28 * alf) / (1.0 + 0.37 * alf);
            let r2 = 1.0 + 0.22 * (nf - 8.0) / nf;
            let r3 = 1.0 + 8.0 * bet / ((6.28 + bet) * nf * nf);
            z - (x[0] - z) * r1 * r2 * r3
        } else if i == n - 1 {
            let r1 = (1.0 + 0.235 * bet) / (0.766 + 0.119 * bet);
            let r2 = 1.0 / (1.0 + 0.639 * (nf - 4.0) / (1.0 + 0.71 * (nf - 4.0)));
            let r3 = 1.0 / (1.0 + 20.0 * alf / ((7.5 + alf) * nf * nf));
            z + (z - x[n - 4]) * r1 * r2 * r3
        } else if i == n {
            let r1 = (1.0 + 0.37 * bet) / (1.67 + 0.28 * bet);
            let r2 = 1.0 / (1.0 + 0.22 * (nf - 8.0) / nf);
            let r3 = 1.0 / (1.0 + 8.0 * alf / ((6.28 + alf) * nf * nf));
            z + (z - x[n - 3]) * r1 * r2 * r3
        } else {
            3.0 * x[i - 2] - 3.0 * x[i - 3] + x[i - 4]
        };
        let jacobi = |z: f64| {
            let mut temp = 2.0 + alfbet;
            let mut p1 = (alf - bet + temp * z) / 2.0;
            let mut p2 = 1.0;
            for j in 2..=n {
                let jf = j as f64;
                let p3 = p2;
                p2 = p1;
                temp = 2.0 * jf + alfbet;
                let a = 2.0 * jf * (jf + alfbet) * (temp - 2.0);
                let b = (temp - 1.0) * (alf * alf - bet * bet + temp * (temp - 2.0) * z);
                let c = 2.0 * (jf - 1.0 + alf) * (jf - 1.0 + bet) * temp;
                p1 = (b * p2 - c * p3) / a;
            }
            let pp = (nf * (alf - bet - temp * z) * p1 + 2.0 * (nf + alf) * (nf + bet) * p2) / (temp * (1.0 - z * z));
            (p1, p2, pp, temp)
        };
        for _ in 0..100 {
            let (p1, _, pp, _) = jacobi(z);
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-16 {
                break;
            }
        }
        let (_, p2, pp, temp) = jacobi(z);
        x[i - 1] = z;
        w[i - 1] = gratio * temp * 2f64.powf(alfbet) / (pp * p2);
    }
    // Map t ∈ [−1, 1] with (1−t)^α (1+t)^β onto x = (1+t)/2.
    let scale = 2f64.powf(-(alfbet + 1.0));
    let nodes = x.iter().map(|t| (1.0 + t) / 2.0).collect();
    let weights = w.iter().map(|v| v * scale).collect();
    (nodes, weights)
}

/// Floating-point moments by Gauss–Jacobi quadrature; works for any α, β > −1.
pub fn moments_quadrature(w: &WeightedMatrix, kmax: usize, npts: usize) -> Result<Vec<Vec<Vec<f64>>>> {
    integrable(w)?;
    let (nodes, weights) = gauss_jacobi(npts, to_f64(&w.alpha), to_f64(&w.beta));
    let n = w.size();
    let core: Vec<Vec<Vec<f64>>> = w.core.coeffs().iter().map(Mat::to_f64).collect();
    let mut out = vec![vec![vec![0.0; n]; n]; kmax + 1];
    for (x, wt) in nodes.iter().zip(&weights) {
        let mut val = vec![vec![0.0; n]; n];
        for c in core.iter().rev() {
            for i in 0..n {
                for j in 0..n {
                    val[i][j] = val[i][j] * x + c[i][j];
                }
            }
        }
        let mut xk = *wt;
        for m in out.iter_mut() {
            for i in 0..n {
                for j in 0..n {
                    m[i][j] += xk * val[i][j];
                }
            }
            xk *= x;
        }
    }
    Ok(out)
}

/// Node count that integrates `x^kmax · core` exactly.
pub fn quadrature_nodes(w: &WeightedMatrix, kmax: usize) -> usize {
    w.core.degree().unwrap_or(0) / 2 + kmax + 2
}

/// The monic `P_d` with `⟨x^j I, P_d⟩ = 0` for `j < d`, via one block-Hankel solve.
pub fn monic_mvop(mt: &MomentTable, d: usize) -> Result<MatrixPolynomial> {
    let n = mt.moments[0].rows();
    if d == 0 {
        return Ok(MatrixPolynomial::identity(n));
    }
    mt.get(2 * d - 1)?;
    let mut h = Mat::zeros(d * n, d * n);
    let mut rhs = Mat::zeros(d * n, n);
    for j in 0..d {
        for k in 0..d {
            let m = &mt.moments[j + k];
            for a in 0..n {
                for b in 0..n {
                    h[(j * n + a, k * n + b)] = m[(a, b)].clone();
                }
            }
        }
        let m = &mt.moments[j + d];
        for a in 0..n {
            for b in 0..n {
                rhs[(j * n + a, b)] = -m[(a, b)].clone();
            }
        }
    }
    let gamma = h.solve(&rhs).ok_or(Error::SingularHankel(d))?;
    let mut coeffs: Vec<Mat> = (0..d)
        .map(|k| {
            let mut g = Mat::zeros(n, n);
            for a in 0..n {
                for b in 0..n {
                    g[(a, b)] = gamma[(k * n + a, b)].clone();
                }
            }
            g
        })
        .collect();
    coeffs.push(Mat::identity(n));
    Ok(MatrixPolynomial::new(n, coeffs))
}

/// `P_0..=P_dmax`, one independent solve per degree.
pub fn monic_family(mt: &MomentTable, dmax: usize) -> Result<MonicFamily> {
    let polys = (0..=dmax).into_par_iter().map(|d| monic_mvop(mt, d)).collect::<Result<Vec<_>>>()?;
    Ok(MonicFamily { moments: mt.clone(), polys })
}

/// `⟨P, Q⟩ = Σ P_iᵀ M_{i+j} Q_j`
pub fn inner_product(p: &MatrixPolynomial, q: &MatrixPolynomial, mt: &MomentTable) -> Result<Mat> {
    let n = p.size();
    let mut acc = Mat::zeros(n, n);
    for (i, pi) in p.coeffs().iter().enumerate() {
        let pt = pi.transpose();
        for (j, qj) in q.coeffs().iter().enumerate() {
            acc = &acc + &(&(&pt * mt.get(i + j)?) * qj);
        }
    }
    Ok(acc)
}

/// `x(x−1)p″ + (C0 + C1 x)p′ + A0 p`
pub fn apply_operator(d: &SecondOrderOperator, p: &MatrixPolynomial) -> MatrixPolynomial {
    let xx1 = crate::matfun::Poly::new(vec![Rat::zero(), -Rat::one(), Rat::one()]);
    let p1 = p.derivative();
    p1.derivative().mul_poly(&xx1).add(&d.a1().mul(&p1)).add(&p.mul_mat_left(&d.a0))
}

/// The eigenvalue `Λ̃ = dd(dd−1) I + dd C1 + A0` of a monic degree-`dd` polynomial,
/// or the residual `D p − p Λ̃` when `p` is not an eigenfunction.
pub fn eigen_check(d: &SecondOrderOperator, p: &MatrixPolynomial) -> std::result::Result<Mat, MatrixPolynomial> {
    let n = p.size();
    let dd = p.degree().unwrap_or(0) as i64;
    let lam = &(&Mat::scalar(n, &ri(dd * (dd - 1))) + &d.c1.scale(&ri(dd))) + &d.a0;
    let res = apply_operator(d, p).sub(&p.mul_mat_right(&lam));
    if res.is_zero() {
        Ok(lam)
    } else {
        Err(res)
    }
}

/// `(B_d, C_d)` with `x P_d = P_{d+1} + P_d B_d + P_{d−1} C_d`, for `d < dmax`.
pub fn three_term(mf: &MonicFamily) -> Result<Vec<(Mat, Mat)>> {
    let mt = &mf.moments;
    let n = mt.moments[0].rows();
    let mut out = Vec::new();
    for d in 0..mf.polys.len().saturating_sub(1) {
        let pd = &mf.polys[d];
        let xpd = pd.shift(1);
        let hd = inner_product(pd, pd, mt)?;
        let b = hd.solve(&inner_product(pd, &xpd, mt)?).ok_or(Error::SingularMatrix)?;
        let c = if d == 0 {
            Mat::zeros(n, n)
        } else {
            let pm = &mf.polys[d - 1];
            inner_product(pm, pm, mt)?.solve(&inner_product(pm, &xpd, mt)?).ok_or(Error::SingularMatrix)?
        };
        out.push((b, c));
    }
    Ok(out)
}

/// `x P_d − P_{d+1} − P_d B_d − P_{d−1} C_d`
pub fn recurrence_residual(mf: &MonicFamily, d: usize, b: &Mat, c: &Mat) -> MatrixPolynomial {
    let p = &mf.polys;
    let mut r = p[d].shift(1).sub(&p[d + 1]).sub(&p[d].mul_mat_right(b));
    if d > 0 {
        r = r.sub(&p[d - 1].mul_mat_right(c));
    }
    r
}
