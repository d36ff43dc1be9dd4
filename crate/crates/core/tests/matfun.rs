use mvcp::matfun::*;
use num_traits::Zero;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| r(a, b))
}

fn mat(n: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(rat(), n * n).prop_map(move |v| Mat::from_rows(v.chunks(n).map(<[Rat]>::to_vec).collect()))
}

fn matpoly(n: usize, deg: usize) -> impl Strategy<Value = MatrixPolynomial> {
    prop::collection::vec(mat(n), deg + 1).prop_map(move |cs| MatrixPolynomial::new(n, cs))
}

fn laurent() -> impl Strategy<Value = HalfLaurentPoly> {
    prop::collection::vec((-3i64..=4, rat()), 0..4).prop_map(HalfLaurentPoly::from_terms)
}

fn laurent_matrix(n: usize) -> impl Strategy<Value = HalfLaurentMatrix> {
    prop::collection::vec(laurent(), n * n)
        .prop_map(move |v| HalfLaurentMatrix::new(v.chunks(n).map(<[HalfLaurentPoly]>::to_vec).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_product_is_associative(a in mat(3), b in mat(3), c in mat(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn transpose_reverses_products(a in mat(3), b in mat(3)) {
        prop_assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
    }

    #[test]
    fn solve_inverts_nonsingular(a in mat(3), b in mat(3)) {
        prop_assume!(!a.det().is_zero());
        let x = a.solve(&b).unwrap();
        prop_assert_eq!(&a * &x, b);
        prop_assert_eq!(&a * &a.inverse().unwrap(), Mat::identity(3));
    }

    #[test]
    fn det_is_multiplicative(a in mat(3), b in mat(3)) {
        prop_assert_eq!((&a * &b).det(), a.det() * b.det());
    }

    #[test]
    fn leibniz_rule(p in matpoly(2, 3), q in matpoly(2, 2)) {
        let lhs = p.mul(&q).derivative();
        let rhs = p.derivative().mul(&q).add(&p.mul(&q.derivative()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn matpoly_eval_is_a_homomorphism(p in matpoly(2, 3), q in matpoly(2, 2), x in rat()) {
        prop_assert_eq!(p.mul(&q).eval(&x), &p.eval(&x) * &q.eval(&x));
    }

    #[test]
    fn collapse_inverts_embedding(p in matpoly(3, 3)) {
        prop_assert_eq!(HalfLaurentMatrix::from_matrix_polynomial(&p).collapse_to_x().unwrap(), p);
    }

    #[test]
    fn inverse_times_self_is_identity(a in laurent_matrix(2)) {
        prop_assume!(!a.det().is_zero());
        prop_assert_eq!(a.inverse_times(&a).unwrap(), HalfLaurentMatrix::identity(2));
    }

    #[test]
    fn exact_division_recovers_factor(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn x_derivative_obeys_product_rule(a in laurent(), b in laurent()) {
        let lhs = a.mul(&b).differentiate_x();
        let rhs = a.differentiate_x().mul(&b).add(&a.mul(&b.differentiate_x()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn laurent_eval_matches_product(a in laurent(), b in laurent(), x in 0.1f64..2.0) {
        let lhs = a.mul(&b).eval_f64(x);
        let rhs = a.eval_f64(x) * b.eval_f64(x);
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + rhs.abs()));
    }

    #[test]
    fn poly_division_identity(a in prop::collection::vec(rat(), 1..6), b in prop::collection::vec(rat(), 1..4)) {
        let (a, b) = (Poly::new(a), Poly::new(b));
        prop_assume!(!b.is_zero());
        let (q, rem) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &rem, a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }
}

#[test]
fn odd_power_residue_reports_entry() {
    let m = HalfLaurentMatrix::new(vec![vec![hl(1, 0), hl(1, 2)], vec![hl(1, 0), hl(2, 3)]]);
    match m.collapse_to_x() {
        Err(mvcp::Error::OddPowerResidue { row, col, exponent }) => assert_eq!((row, col, exponent), (1, 1, 3)),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn inexact_division() {
    let a = HalfLaurentPoly::x_linear(ri(1), ri(0));
    let b = HalfLaurentPoly::x_linear(ri(1), ri(1));
    assert_eq!(a.div_exact(&b), Err(mvcp::Error::InexactDivision));
}

#[test]
fn rational_parsing_round_trip() {
    for s in ["0", "-3", "7/2", "-1/6"] {
        assert_eq!(fmt_rat(&parse_rat(s).unwrap()), s);
    }
    assert_eq!(parse_rat("1/0"), None);
    assert_eq!(parse_rat("x"), None);
}
