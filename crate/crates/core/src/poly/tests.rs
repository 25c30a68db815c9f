use proptest::prelude::*;

use super::*;
use crate::scalars::{Field, QuadExt, Rational, Ring, rat, rat_int};

fn p(s: &str) -> MultiPoly<Rational> {
    parse_rational_poly(s).unwrap()
}

fn up(c: &[i64]) -> UPoly<Rational> {
    UPoly::new(c.iter().map(|&v| rat_int(v)).collect())
}

#[test]
fn gcd_of_difference_of_squares() {
    let g = poly_gcd(&p("x^2 - 1"), &p("x - 1"));
    assert_eq!(g, p("x - 1"));
}

#[test]
fn multivariate_gcd_recovers_common_factor() {
    let f = p("a*c + 3*a - c^2");
    let g = p("a^2 - 2*c + 7");
    let h = p("c*a - a + 1");
    let d = poly_gcd(&(f.clone() * &g), &(f.clone() * &h));
    assert!(d.proportional_to(&f));
}

#[test]
fn resultant_of_linear_and_quadratic() {
    let r = resultant(&p("x^2 - 1"), &p("x - 2"), "x").unwrap();
    assert_eq!(r.as_constant(), Some(rat_int(3)));
}

#[test]
fn resultant_sign_convention_matches_sylvester() {
    let a = up(&[1, 0, 2, -1]);
    let b = up(&[3, 1, 0, 5]);
    assert_eq!(resultant_upoly(&a, &b).unwrap(), sylvester_resultant(&a, &b).unwrap());
    assert_eq!(resultant_upoly(&b, &a).unwrap(), sylvester_resultant(&b, &a).unwrap());
}

#[test]
fn resultant_rejects_constant_input() {
    assert_eq!(resultant(&p("a + 1"), &p("x - 2"), "x"), Err(PolyError::ZeroDegree("x".into())));
}

#[test]
fn multivariate_resultant_eliminates_variable() {
    let r = resultant(&p("x^2 + a*x + c"), &p("2*x + a"), "x").unwrap();
    // discriminant up to sign and the leading coefficient
    assert_eq!(r, p("4*c - a^2"));
}

#[test]
fn bareiss_matches_cofactor() {
    let m: Vec<Vec<Rational>> = [[0, 2, 1, 3], [4, 0, 1, 1], [2, 5, 0, 7], [1, 1, 1, 0]]
        .iter()
        .map(|r| r.iter().map(|&v| rat_int(v)).collect())
        .collect();
    assert_eq!(det_fraction_free(&m).unwrap(), det_cofactor(&m));
}

#[test]
fn bareiss_over_polynomials() {
    let m = vec![vec![p("a"), p("c")], vec![p("1"), p("a + c")]];
    assert_eq!(det_fraction_free(&m).unwrap(), p("a^2 + a*c - c"));
}

#[test]
fn cramer_solves_small_system() {
    let m = vec![vec![rat_int(2), rat_int(1)], vec![rat_int(1), rat_int(3)]];
    let (nums, d) = cramer(&m, &[rat_int(5), rat_int(10)]).unwrap();
    assert_eq!(nums[0].clone() / d.clone(), rat_int(1));
    assert_eq!(nums[1].clone() / d, rat_int(3));
}

#[test]
fn nullspace_has_expected_dimension() {
    let m = vec![vec![rat_int(1), rat_int(2), rat_int(3)], vec![rat_int(2), rat_int(4), rat_int(6)]];
    let sys = LinearSystem::new(m.clone(), vec!["u".into(), "v".into(), "w".into()]).unwrap();
    let ker = sys.solve_nullspace();
    assert_eq!(ker.len(), 2);
    for v in ker {
        for row in &m {
            let dot = row.iter().zip(&v).fold(rat_int(0), |acc, (a, b)| acc + a.clone() * b);
            assert!(dot.is_zero());
        }
    }
    assert!(LinearSystem::new(vec![vec![rat_int(1)]], vec![]).is_err());
}

#[test]
fn exact_division_round_trip() {
    let f = p("a^3*c - 2*a*c^2 + 5");
    let g = p("a + c - 1");
    let q = (f.clone() * &g).exact_divide(&g).unwrap().unwrap();
    assert_eq!(q, f);
    assert_eq!(f.exact_divide(&g).unwrap(), None);
}

#[test]
fn multiplicity_counts_repeated_factor() {
    let g = p("x - 3");
    let f = g.pow(5) * &p("x + 5");
    let (k, rest) = f.multiplicity_of(&g).unwrap();
    assert_eq!(k, 5);
    assert_eq!(rest, p("x + 5"));
}

#[test]
fn squarefree_decomposition_of_repeated_roots() {
    let f = up(&[-1, 1]).pow(3) * up(&[2, 0, 1]) * up(&[0, 1]).pow(3);
    let (lc, parts) = f.squarefree_decomposition();
    assert_eq!(lc, rat_int(1));
    assert_eq!(parts.len(), 3);
    assert_eq!(parts[0], up(&[2, 0, 1]));
    assert_eq!(parts[1].degree(), Some(0));
    assert_eq!(parts[2], up(&[0, -1, 1]));
}

#[test]
fn gcd_free_basis_is_coprime_and_covers() {
    let a = up(&[-1, 0, 1]);
    let b = up(&[1, 2, 1]) * up(&[5, 1]);
    let c = up(&[-1, 1]) * up(&[5, 1]);
    let basis = gcd_free_basis(&[a.clone(), b.clone(), c.clone()]);
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i + 1..] {
            assert_eq!(x.gcd(y).degree(), Some(0));
        }
    }
    for f in [a, b, c] {
        assert!(factor_over_basis(&f, &basis).is_some());
    }
    assert_eq!(basis.len(), 3);
}

#[test]
fn xgcd_bezout_identity() {
    let a = up(&[1, 0, 0, 1]);
    let b = up(&[-2, 3, 1]);
    let (g, s, t) = a.xgcd(&b);
    assert_eq!(s * &a + &(t * &b), g);
    let inv = up(&[1, 1]).inv_mod(&up(&[1, 0, 1])).unwrap();
    assert_eq!((inv * &up(&[1, 1])).rem(&up(&[1, 0, 1])), up(&[1]));
}

#[test]
fn ratfunc_reduces_and_differentiates() {
    let f = RatFunc::new(p("x^2 - 1"), p("2*x - 2")).unwrap();
    assert_eq!(f.numer(), &p("1/2*x + 1/2"));
    assert!(f.is_polynomial());
    let g = RatFunc::new(p("1"), p("x")).unwrap();
    assert_eq!(g.derivative("x"), RatFunc::new(p("-1"), p("x^2")).unwrap());
    assert_eq!(g.clone() * &g.inv(), RatFunc::one());
    assert!(RatFunc::new(p("1"), p("0")).is_err());
}

#[test]
fn parse_reports_offset_of_dangling_operator() {
    match parse_poly("x +") {
        Err(PolyError::Parse { offset, .. }) => assert_eq!(offset, 3),
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(parse_poly("x / y"), Err(PolyError::Parse { offset: 4, .. })));
    assert!(matches!(parse_poly("(x"), Err(PolyError::Parse { .. })));
    assert!(parse_poly("sqrt(5) + sqrt(105)").is_err());
}

#[test]
fn parse_simplifies_radicands() {
    let q = parse_poly("sqrt(420)").unwrap().as_constant().unwrap();
    assert_eq!(q, QuadExt::new(rat_int(0), rat_int(2), 105).unwrap());
    assert_eq!(parse_poly("sqrt(49)").unwrap(), parse_poly("7").unwrap());
}

#[test]
fn display_is_readable() {
    assert_eq!(p("3/4*a^2*c - x + 5").to_string(), "3/4*a^2*c - x + 5");
}

#[test]
fn derivative_and_substitution() {
    let f = p("a^3 + a*c");
    assert_eq!(f.derivative("a"), p("3*a^2 + c"));
    assert_eq!(f.substitute("c", &p("-25/24*a")), p("a^3 - 25/24*a^2"));
    let v = f.eval_named(|c| c.clone(), &[("a", rat_int(2)), ("c", rat(1, 2))]).unwrap();
    assert_eq!(v, rat_int(9));
}

#[test]
fn primitive_integer_normalizes() {
    let (k, q) = p("-2/3*a + 4/9").primitive_integer();
    assert_eq!(q, p("3*a - 2"));
    assert_eq!(p("-2/3*a + 4/9").scale(&k), q);
}

fn small_poly() -> impl Strategy<Value = MultiPoly<Rational>> {
    prop::collection::vec((0u32..3, 0u32..3, -6i64..7), 1..6).prop_map(|ts| {
        let vars = vec!["a".to_string(), "c".to_string()];
        MultiPoly::from_terms(&vars, ts.into_iter().map(|(i, j, k)| (vec![i, j], rat_int(k))))
    })
}

proptest! {
    #[test]
    fn parse_inverts_display(f in small_poly()) {
        prop_assert_eq!(parse_rational_poly(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn gcd_divides_both(f in small_poly(), g in small_poly(), h in small_poly()) {
        let (x, y) = (f.clone() * &h, g.clone() * &h);
        let d = poly_gcd(&x, &y);
        if !d.is_zero() {
            prop_assert!(x.exact_divide(&d).unwrap().is_some());
            prop_assert!(y.exact_divide(&d).unwrap().is_some());
            if !h.is_zero() {
                prop_assert!(d.exact_divide(&normalize(&h)).unwrap().is_some());
            }
        }
    }

    #[test]
    fn resultant_agrees_with_sylvester(a in prop::collection::vec(-5i64..6, 1..6), b in prop::collection::vec(-5i64..6, 1..6)) {
        let (a, b) = (up(&a), up(&b));
        prop_assert_eq!(resultant_upoly(&a, &b).unwrap(), sylvester_resultant(&a, &b).unwrap());
    }

    #[test]
    fn bareiss_agrees_with_cofactor(v in prop::collection::vec(-4i64..5, 16)) {
        let m: Vec<Vec<Rational>> = v.chunks(4).map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect();
        prop_assert_eq!(det_fraction_free(&m).unwrap(), det_cofactor(&m));
    }

    #[test]
    fn multiplication_is_commutative_and_distributive(f in small_poly(), g in small_poly(), h in small_poly()) {
        prop_assert_eq!(f.clone() * &g, g.clone() * &f);
        prop_assert_eq!(f.clone() * &(g.clone() + &h), f.clone() * &g + &(f.clone() * &h));
    }
}
