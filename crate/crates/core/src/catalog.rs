//! Case descriptors: base-change matrices Ψ₀, the diagonal data `T`, `Λ₀`,
//! and the per-group constants, with parameter validation.
//!
//! Ψ₀ is stored in the normalized variable `x ∈ [0, 1]` with `s = √x`.

use crate::error::{Error, Result};
use crate::matfun::{hl, r, ri, HalfLaurentMatrix, HalfLaurentPoly, Mat, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    A1,
    A2,
    B,
    C1,
    C2,
    G1,
    SP3x3,
}

impl FamilyId {
    pub const ALL: [FamilyId; 7] =
        [FamilyId::A1, FamilyId::A2, FamilyId::B, FamilyId::C1, FamilyId::C2, FamilyId::G1, FamilyId::SP3x3];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::A1 => "A1",
            FamilyId::A2 => "A2",
            FamilyId::B => "B",
            FamilyId::C1 => "C1",
            FamilyId::C2 => "C2",
            FamilyId::G1 => "G1",
            FamilyId::SP3x3 => "SP3x3",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyId::A1 | FamilyId::A2 => &["n", "i", "m"],
            FamilyId::B => &["n", "i"],
            FamilyId::C1 | FamilyId::C2 => &["n"],
            FamilyId::G1 => &[],
            FamilyId::SP3x3 => &["j"],
        }
    }

    /// Human-readable parameter bounds.
    pub fn bounds(self) -> &'static str {
        match self {
            FamilyId::A1 => "n ≥ 2, 1 ≤ i ≤ n−1, m ≥ 0 (m integer)",
            FamilyId::A2 => "n ≥ 2, 1 ≤ i ≤ n−1, m < 0 (m integer)",
            FamilyId::B => "n ≥ 2, 1 ≤ i ≤ n−2",
            FamilyId::C1 | FamilyId::C2 => "n ≥ 3",
            FamilyId::G1 => "no parameters",
            FamilyId::SP3x3 => "j ≥ 1 (j integer)",
        }
    }

    pub fn group(self) -> &'static str {
        match self {
            FamilyId::A1 | FamilyId::A2 => "(SU(n+1), U(n))",
            FamilyId::B => "(SO(2n+1), SO(2n))",
            FamilyId::C1 | FamilyId::C2 => "(USp(2n), USp(2n-2) x USp(2))",
            FamilyId::G1 => "(G2, SU(3))",
            FamilyId::SP3x3 => "(USp(6), USp(4) x USp(2))",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// One row of the group data table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyConstants {
    pub lambda1: Rat,
    pub phi_min: Rat,
    pub phi_max: Rat,
    pub rp2: Rat,
    pub alpha: Rat,
    pub beta: Rat,
}

impl FamilyConstants {
    pub fn su(n: &Rat) -> Self {
        FamilyConstants {
            lambda1: ri(2) * n + ri(2),
            phi_min: -n.recip(),
            phi_max: Rat::one(),
            rp2: ri(2),
            alpha: n - ri(1),
            beta: Rat::zero(),
        }
    }

    pub fn so_odd(n: &Rat) -> Self {
        FamilyConstants {
            lambda1: ri(2) * n,
            phi_min: ri(-1),
            phi_max: Rat::one(),
            rp2: Rat::one(),
            alpha: n - ri(1),
            beta: n - ri(1),
        }
    }

    pub fn usp(n: &Rat) -> Self {
        FamilyConstants {
            lambda1: ri(4) * n,
            phi_min: -(n - ri(1)).recip(),
            phi_max: Rat::one(),
            rp2: ri(2),
            alpha: ri(2) * n - ri(3),
            beta: Rat::one(),
        }
    }

    pub fn g2() -> Self {
        FamilyConstants {
            lambda1: ri(12),
            phi_min: ri(-1),
            phi_max: Rat::one(),
            rp2: ri(2),
            alpha: ri(2),
            beta: ri(2),
        }
    }

    /// Scalar part of the constant first-order coefficient, `λ₁m / (rp²(M−m))`.
    pub fn c0_scalar(&self) -> Rat {
        &self.lambda1 * &self.phi_min / (&self.rp2 * (&self.phi_max - &self.phi_min))
    }

    /// Scalar part of the linear first-order coefficient, `λ₁ / rp²`.
    pub fn c1_scalar(&self) -> Rat {
        &self.lambda1 / &self.rp2
    }
}

pub type Params = BTreeMap<String, Rat>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseDescriptor {
    pub family: FamilyId,
    pub params: Params,
    pub constants: FamilyConstants,
    pub psi0: HalfLaurentMatrix,
    pub t: Mat,
    pub lambda0: Mat,
}

impl CaseDescriptor {
    pub fn size(&self) -> usize {
        self.t.rows()
    }

    pub fn param(&self, name: &str) -> Option<&Rat> {
        self.params.get(name)
    }

    /// `family(n=3, i=1)`
    pub fn label(&self) -> String {
        let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}({})", self.family, ps.join(", "))
    }
}

/// Builds a parameter map from `(name, value)` pairs.
pub fn params<'a>(items: impl IntoIterator<Item = (&'a str, Rat)>) -> Params {
    items.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn oob(msg: impl Into<String>) -> Error {
    Error::ParamOutOfBounds(msg.into())
}

fn require(p: &Params, name: &str) -> Result<Rat> {
    p.get(name).cloned().ok_or_else(|| oob(format!("missing parameter {name}")))
}

fn require_int(p: &Params, name: &str) -> Result<i64> {
    let v = require(p, name)?;
    crate::matfun::rat::as_i64(&v).ok_or_else(|| oob(format!("{name} must be an integer (got {v})")))
}

fn check(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(oob(msg))
    }
}

fn c(v: Rat) -> HalfLaurentPoly {
    HalfLaurentPoly::constant(v)
}

/// `(a + b x) · s^k`
fn lin_s(a: Rat, b: Rat, k: i64) -> HalfLaurentPoly {
    HalfLaurentPoly::x_linear(a, b).shift(k)
}

fn lambda0(d: &[Rat]) -> Mat {
    Mat::diag(d)
}

pub fn instantiate(family: FamilyId, p: &Params) -> Result<CaseDescriptor> {
    for k in p.keys() {
        if !family.param_names().contains(&k.as_str()) {
            return Err(oob(format!("unknown parameter {k} for {family}")));
        }
    }
    let one = Rat::one;
    let (constants, psi0, t, l0) = match family {
        FamilyId::A1 | FamilyId::A2 => {
            let n = require(p, "n")?;
            let i = require(p, "i")?;
            let m = require_int(p, "m")?;
            check(n >= ri(2), "n ≥ 2")?;
            check(i >= ri(1) && i <= &n - ri(1), "1 ≤ i ≤ n−1")?;
            let mr = ri(m);
            let t = Mat::diag(&[i.clone(), &n - &i]);
            if family == FamilyId::A1 {
                check(m >= 0, "m ≥ 0")?;
                let den = (&i - &n).recip();
                let e = lin_s((&mr + ri(1)) * &den, -(&mr + &n - &i + ri(1)) * &den, m);
                let psi = HalfLaurentMatrix::new(vec![vec![hl(1, m + 1), hl(1, m + 1)], vec![hl(1, m), e]]);
                let l0 = lambda0(&[Rat::zero(), ri(2) * (&mr + &n - &i + ri(1))]);
                (FamilyConstants::su(&n), psi, t, l0)
            } else {
                check(m < 0, "m < 0")?;
                let k = -(m + 1);
                let e = lin_s(&mr / &i, (&i - &mr) / &i, k);
                let psi = HalfLaurentMatrix::new(vec![vec![e, hl(1, k)], vec![hl(1, k + 1), hl(1, k + 1)]]);
                // The listed diag(0, m−i) is half of what the symmetry equations require.
                let l0 = lambda0(&[Rat::zero(), ri(2) * (&mr - &i)]);
                (FamilyConstants::su(&n), psi, t, l0)
            }
        }
        FamilyId::B => {
            let n = require(p, "n")?;
            let i = require(p, "i")?;
            check(n >= ri(2), "n ≥ 2")?;
            check(i >= ri(1) && i <= &n - ri(2), "1 ≤ i ≤ n−2")?;
            let d = HalfLaurentPoly::x_linear(ri(-1), ri(2));
            let psi = HalfLaurentMatrix::new(vec![vec![d.clone(), c(one())], vec![c(one()), d]]);
            let t = Mat::diag(&[i.clone(), &n - &i]);
            // Consistent with T = diag(i, n−i); see `b_alternative` for the other reading.
            let l0 = lambda0(&[Rat::zero(), ri(2) * (&n - ri(2) * &i)]);
            (FamilyConstants::so_odd(&n), psi, t, l0)
        }
        FamilyId::C1 => {
            let n = require(p, "n")?;
            check(n >= ri(3), "n ≥ 3")?;
            let den = (&n - ri(2)).recip();
            let e = lin_s(-&den, (&n - ri(1)) * &den, 0);
            let psi = HalfLaurentMatrix::new(vec![vec![hl(1, 1), hl(1, 1)], vec![c(one()), e]]);
            let t = Mat::diag(&[ri(2), ri(2) * &n - ri(4)]);
            let l0 = lambda0(&[Rat::zero(), ri(4) * (&n - ri(1))]);
            (FamilyConstants::usp(&n), psi, t, l0)
        }
        FamilyId::C2 => {
            let n = require(p, "n")?;
            check(n >= ri(3), "n ≥ 3")?;
            let nm1 = &n - ri(1);
            let psi = HalfLaurentMatrix::new(vec![
                vec![lin_s(r(1, 2), r(1, 2), 0), lin_s(ri(-2) / &nm1, (&n + ri(1)) / &nm1, 0)],
                vec![hl(1, 1), lin_s((&n - ri(5)) / (ri(2) * &nm1), (&n + ri(3)) / (ri(2) * &nm1), 1)],
            ]);
            let t = Mat::diag(&[ri(2) / (&n + ri(1)), ri(2) / (&n - ri(2))]);
            let l0 = lambda0(&[Rat::zero(), ri(2) * &n + ri(6)]);
            (FamilyConstants::usp(&n), psi, t, l0)
        }
        FamilyId::G1 => {
            let psi = HalfLaurentMatrix::new(vec![vec![hl(1, 2), hl(1, 2)], vec![hl(1, 1), lin_s(ri(-2), ri(3), 1)]]);
            let t = Mat::diag(&[ri(1), ri(2)]);
            // Twice the listed diag(0, 6): the G₂ Casimir gap is 24 − 12.
            let l0 = lambda0(&[Rat::zero(), ri(12)]);
            (FamilyConstants::g2(), psi, t, l0)
        }
        FamilyId::SP3x3 => {
            let j = require_int(p, "j")?;
            check(j >= 1, "j ≥ 1")?;
            let jr = ri(j);
            let q = j - 1;
            let psi = HalfLaurentMatrix::new(vec![
                vec![lin_s(-jr.recip(), (&jr + ri(1)) / &jr, q), hl(1, q), lin_s(r(1, 5), r(4, 5), q)],
                vec![hl(1, q), lin_s(-jr.clone(), &jr + ri(1), q), lin_s(-&jr / ri(5), (&jr + ri(5)) / ri(5), q)],
                vec![
                    hl(1, q + 1),
                    hl(1, q + 1),
                    lin_s(-(ri(2) * &jr + ri(5)) / ri(5), ri(2) * (&jr + ri(5)) / ri(5), q + 1),
                ],
            ]);
            let t = Mat::diag(&[jr.clone(), &jr + ri(2), ri(2) * &jr + ri(2)]);
            let l0 = lambda0(&[Rat::zero(), ri(2) * (&jr + ri(1)), ri(2) * (&jr + ri(5))]);
            (FamilyConstants::usp(&ri(3)), psi, t, l0)
        }
    };
    Ok(CaseDescriptor { family, params: p.clone(), constants, psi0, t, lambda0: l0 })
}

/// Case b under the alternative reading `T = diag(i, 2n−i)` with `Λ₀ = diag(0, 2(n−i))`.
pub fn b_alternative(n: &Rat, i: &Rat) -> Result<CaseDescriptor> {
    let mut d = instantiate(FamilyId::B, &params([("n", n.clone()), ("i", i.clone())]))?;
    d.t = Mat::diag(&[i.clone(), ri(2) * n - i]);
    d.lambda0 = Mat::diag(&[Rat::zero(), ri(2) * (n - i)]);
    Ok(d)
}

/// Closed-form eigenvalues for C1: `λ_d(1) = d(d+2n)`, `λ_d(2) = d(d+2n+1)+2n−2`.
pub fn eigenvalue_catalog(case: &CaseDescriptor, d: u64, slot: usize) -> Result<Rat> {
    if case.family != FamilyId::C1 {
        return Err(Error::UnsupportedFamily(case.family.to_string()));
    }
    let n = case.param("n").expect("C1 has n");
    let d = ri(d as i64);
    match slot {
        1 => Ok(&d * (&d + ri(2) * n)),
        2 => Ok(&d * (&d + ri(2) * n + ri(1)) + ri(2) * n - ri(2)),
        _ => Err(Error::PreconditionViolated(format!("slot {slot} not in {{1, 2}}"))),
    }
}

/// `M = [[1, d/(d+2n−2)], [0, 1]]`, the change of basis that diagonalizes the C1 eigenvalue matrix.
pub fn c1_m_matrix(n: &Rat, d: u64) -> Mat {
    let d = ri(d as i64);
    let off = &d / (&d + ri(2) * n - ri(2));
    Mat::from_rows(vec![vec![Rat::one(), off], vec![Rat::zero(), Rat::one()]])
}
