use mvcp::catalog::*;
use mvcp::hyper2h1::*;
use mvcp::matfun::*;
use mvcp::odekit::*;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-5i64..=5, 1i64..=3).prop_map(|(a, b)| r(a, b))
}

fn mat2() -> impl Strategy<Value = Mat> {
    prop::collection::vec(rat(), 4).prop_map(|v| Mat::from_rows(vec![v[..2].to_vec(), v[2..].to_vec()]))
}

fn poch(a: &Rat, k: u64) -> Rat {
    (0..k).fold(ri(1), |acc, j| acc * (a + ri(j as i64)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// The truncated series solves x(1−x)F″ + (C − xU)F′ − VF = 0 up to its last order.
    #[test]
    fn series_satisfies_the_equation(c in mat2(), u in mat2(), v in mat2()) {
        let p = HypergeometricParams { c, u, v };
        let kmax = 10;
        let h = match h_coefficients(&p, kmax) {
            Ok(h) => h,
            Err(_) => return Ok(()),
        };
        let f: Vec<Mat> = h.iter().enumerate().map(|(k, m)| m.scale(&mvcp::matfun::rat::rat_factorial(k as u64).recip())).collect();
        let f = MatrixPolynomial::new(2, f);
        let xx = Poly::new(vec![ri(0), ri(1), ri(-1)]);
        let res = f.derivative().derivative().mul_poly(&xx)
            .add(&f.derivative().mul_mat_left(&p.c))
            .sub(&f.derivative().shift(1).mul_mat_left(&p.u))
            .sub(&f.mul_mat_left(&p.v));
        for k in 0..kmax {
            prop_assert!(res.coeff(k).is_zero(), "order {}", k);
        }
    }

    #[test]
    fn scalar_reduces_to_pochhammer(a in rat(), b in rat(), c in (1i64..=9, 1i64..=4).prop_map(|(p, q)| r(p, q))) {
        let h = h_coefficients(&HypergeometricParams::gauss(&a, &b, &c), 15).unwrap();
        for (k, m) in h.iter().enumerate() {
            let k = k as u64;
            prop_assert_eq!(m[(0, 0)].clone(), poch(&a, k) * poch(&b, k) / poch(&c, k));
        }
    }
}

#[test]
fn c1_series_terminate() {
    for n in 3..=5 {
        let case = instantiate(FamilyId::C1, &params([("n", ri(n))])).unwrap();
        for d in 0..=6 {
            let p = monic_via_hypergeometric(&case, d).unwrap();
            assert_eq!(p.degree(), Some(d));
            assert_eq!(p.leading(), Some(&Mat::identity(2)));
        }
        assert_eq!(monic_via_hypergeometric(&case, 0).unwrap(), MatrixPolynomial::identity(2));
    }
}

#[test]
fn c1_parameters_from_operator() {
    let case = instantiate(FamilyId::C1, &params([("n", ri(3))])).unwrap();
    let d = build_operator(&case).unwrap();
    let p = params_for_eigenvalue(&case, &ri(7)).unwrap();
    assert_eq!(p.c, -&d.c0);
    assert_eq!(p.u, d.c1);
    assert_eq!(p.v, &d.a0 - &Mat::scalar(2, &ri(7)));
}

#[test]
fn other_families_unsupported() {
    let case = instantiate(FamilyId::C2, &params([("n", ri(4))])).unwrap();
    assert!(matches!(monic_via_hypergeometric(&case, 1), Err(mvcp::Error::UnsupportedFamily(_))));
}
