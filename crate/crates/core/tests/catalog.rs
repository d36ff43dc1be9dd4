use mvcp::catalog::*;
use mvcp::matfun::*;
use mvcp::Error;
use num_traits::Zero;

fn grid() -> Vec<CaseDescriptor> {
    let mut out = Vec::new();
    for n in 3..=5 {
        for i in 1..=n - 2 {
            for m in [-2, 0, 2] {
                let f = if m < 0 { FamilyId::A2 } else { FamilyId::A1 };
                out.push(instantiate(f, &params([("n", ri(n)), ("i", ri(i)), ("m", ri(m))])).unwrap());
            }
            out.push(instantiate(FamilyId::B, &params([("n", ri(n)), ("i", ri(i))])).unwrap());
        }
        out.push(instantiate(FamilyId::C1, &params([("n", ri(n))])).unwrap());
        out.push(instantiate(FamilyId::C2, &params([("n", ri(n))])).unwrap());
    }
    out.push(instantiate(FamilyId::G1, &params([])).unwrap());
    for j in 1..=3 {
        out.push(instantiate(FamilyId::SP3x3, &params([("j", ri(j))])).unwrap());
    }
    out
}

#[test]
fn families_parse_case_insensitively() {
    assert_eq!(FamilyId::ALL.len(), 7);
    for f in FamilyId::ALL {
        assert_eq!(f.name().to_lowercase().parse::<FamilyId>().unwrap(), f);
    }
    assert_eq!("d".parse::<FamilyId>(), Err(Error::UnknownFamily("d".into())));
}

#[test]
fn bounds_are_enforced() {
    let oob = |f, p: Params| matches!(instantiate(f, &p), Err(Error::ParamOutOfBounds(_)));
    assert!(oob(FamilyId::C1, params([("n", ri(2))])));
    assert!(oob(FamilyId::A1, params([("n", ri(3)), ("i", ri(1)), ("m", ri(-1))])));
    assert!(oob(FamilyId::A2, params([("n", ri(3)), ("i", ri(1)), ("m", ri(0))])));
    assert!(oob(FamilyId::A1, params([("n", ri(3)), ("i", ri(1)), ("m", r(1, 2))])));
    assert!(oob(FamilyId::B, params([("n", ri(3)), ("i", ri(2))])));
    assert!(oob(FamilyId::SP3x3, params([("j", ri(0))])));
    assert!(oob(FamilyId::C1, params([])));
    assert!(oob(FamilyId::G1, params([("n", ri(3))])));
}

#[test]
fn psi0_is_normalized_at_one() {
    for c in grid() {
        let v = c.psi0.eval_f64(1.0);
        assert!(v.iter().flatten().all(|&e| (e - 1.0).abs() < 1e-12), "{}: {v:?}", c.label());
    }
}

#[test]
fn t_is_positive_diagonal() {
    for c in grid() {
        assert!(c.t.is_diagonal() && c.t.diagonal().iter().all(|t| *t > Rat::zero()), "{}", c.label());
        assert!(c.lambda0.is_diagonal() && c.lambda0[(0, 0)].is_zero(), "{}", c.label());
    }
}

#[test]
fn lambda0_nonnegative_where_expected() {
    for c in grid() {
        let skip = match c.family {
            FamilyId::A2 => true,
            FamilyId::B => ri(2) * c.param("i").unwrap() > *c.param("n").unwrap(),
            _ => false,
        };
        if !skip {
            assert!(c.lambda0.diagonal().iter().all(|l| *l >= Rat::zero()), "{}", c.label());
        }
    }
}

#[test]
fn table_constants() {
    let c1 = instantiate(FamilyId::C1, &params([("n", ri(3))])).unwrap();
    assert_eq!((c1.constants.alpha.clone(), c1.constants.beta.clone()), (ri(3), ri(1)));
    assert_eq!(c1.constants.c0_scalar(), ri(-2));
    assert_eq!(c1.constants.c1_scalar(), ri(6));
    let g = instantiate(FamilyId::G1, &params([])).unwrap();
    assert_eq!((g.constants.alpha.clone(), g.constants.beta.clone()), (ri(2), ri(2)));
    assert_eq!(g.label(), "G1()");
    assert_eq!(c1.label(), "C1(n=3)");
}

#[test]
fn c1_eigenvalue_catalog() {
    let c = instantiate(FamilyId::C1, &params([("n", ri(3))])).unwrap();
    assert_eq!(eigenvalue_catalog(&c, 0, 1).unwrap(), ri(0));
    assert_eq!(eigenvalue_catalog(&c, 0, 2).unwrap(), ri(4));
    assert_eq!(eigenvalue_catalog(&c, 2, 1).unwrap(), ri(16));
    assert_eq!(eigenvalue_catalog(&c, 2, 2).unwrap(), ri(22));
    assert_eq!(c1_m_matrix(&ri(3), 1), Mat::from_rows(vec![vec![ri(1), r(1, 5)], vec![ri(0), ri(1)]]));
    let g = instantiate(FamilyId::G1, &params([])).unwrap();
    assert!(matches!(eigenvalue_catalog(&g, 1, 1), Err(Error::UnsupportedFamily(_))));
}
