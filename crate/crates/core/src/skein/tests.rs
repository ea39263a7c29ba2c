use super::*;
use crate::bracket::{jones, DEFAULT_STATE_CAP};
use crate::diagram::Braid;

fn braid(s: &str) -> Braid {
    Braid::parse(s).unwrap()
}

fn p(terms: &[(i64, i64, i64)]) -> LaurentPoly2 {
    LaurentPoly2::from_int_terms(HOMFLY_VARS, terms.iter().copied())
}

#[test]
fn unknot_and_unlink() {
    let cfg = SkeinConfig::default();
    assert_eq!(homfly(&Diagram::unknot(), cfg).unwrap(), LaurentPoly2::one(HOMFLY_VARS));
    assert_eq!(homfly(&Diagram::unlink(2), cfg).unwrap(), delta());
}

#[test]
fn hopf_and_trefoil() {
    let cfg = SkeinConfig::default();
    let hopf = p(&[(1, 1, -1), (3, -1, 1), (1, -1, 1)]);
    assert_eq!(homfly(&Diagram::from_braid(&braid("2: 1 1")), cfg).unwrap(), hopf);
    assert_eq!(homfly_braid(&braid("2: 1 1"), cfg).unwrap(), hopf);
    let tre = p(&[(2, 2, 1), (4, 0, -1), (2, 0, -2)]);
    assert_eq!(homfly(&Diagram::from_braid(&braid("2: 1 1 1")), cfg).unwrap(), tre);
    assert_eq!(homfly_braid(&braid("2: 1 1 1"), cfg).unwrap(), tre);
}

#[test]
fn mirror_rule() {
    let cfg = SkeinConfig::default();
    for w in ["3: 1 -2 1 -2", "3: 1 1 2 -1 2", "2: 1 1 1 1 1"] {
        let b = braid(w);
        let d = Diagram::from_braid(&b);
        assert_eq!(homfly(&d.mirror(), cfg).unwrap(), mirror_homfly(&homfly(&d, cfg).unwrap()));
    }
}

#[test]
fn braid_and_diagram_routes_agree() {
    let cfg = SkeinConfig::default();
    for w in ["3: 1 -2 1 -2", "3: 1 1 2 -1 2 2", "4: 1 2 3 -1 2 -3 1", "3: 1 2 1 2 1 2 1", "4: 1 -2 3 1 2 -3 2 -1"] {
        let b = braid(w);
        let d = Diagram::from_braid(&b);
        assert_eq!(homfly(&d, cfg).unwrap(), homfly_braid(&b, cfg).unwrap(), "{w}");
    }
}

#[test]
fn jones_from_homfly_matches_bracket() {
    let cfg = SkeinConfig::default();
    for w in ["3: 1 -2 1 -2", "4: 1 2 3 -1 2 -3 1", "3: 1 2 1 2 1 2 1 1", "4: 1 -2 3 1 2 -3 2 -1"] {
        let d = Diagram::from_braid(&braid(w));
        assert_eq!(jones_via_skein(&d, cfg).unwrap(), jones(&d, DEFAULT_STATE_CAP).unwrap(), "{w}");
    }
}

#[test]
fn alexander_forms() {
    let cfg = SkeinConfig::default();
    let d = Diagram::from_braid(&braid("2: 1 1 1"));
    let a = alexander_symmetric(&d, cfg).unwrap();
    assert_eq!(a, LaurentPoly1::from_coeffs(crate::Var::T, -1, &[1, -1, 1]));
    let f8 = Diagram::from_braid(&braid("3: 1 -2 1 -2"));
    let a8 = alexander_nonneg(&f8, cfg).unwrap();
    assert_eq!(a8, LaurentPoly1::from_coeffs(crate::Var::T, 0, &[1, -3, 1]));
}

#[test]
fn morton_on_trefoil() {
    let d = Diagram::from_braid(&braid("2: 1 1 1"));
    let pp = homfly(&d, SkeinConfig::default()).unwrap();
    let m = morton_report(&d, &pp).unwrap();
    assert!(m.holds && m.sharp);
    assert_eq!(m.lower_l, 2);
}

#[test]
fn budget_is_reported() {
    let d = Diagram::from_braid(&braid("3: 1 -2 1 -2 1 -2"));
    let err = homfly(&d, SkeinConfig { node_budget: 3, memo_cap: 10 }).unwrap_err();
    assert!(matches!(err, SkeinError::BudgetExhausted { .. }));
}
