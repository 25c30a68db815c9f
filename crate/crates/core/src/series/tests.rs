use proptest::prelude::*;

use super::*;
use crate::poly::{MultiPoly, UPoly, parse_poly, parse_rational_poly};
use crate::scalars::{QuadExt, Rational, Ring, rat, rat_int};

type P = MultiPoly<Rational>;

fn p(s: &str) -> P {
    parse_rational_poly(s).unwrap()
}

fn quartic_in_x(s: &str) -> UPoly<P> {
    p(s).to_upoly("x")
}

#[test]
fn sqrt_of_generic_quartic_at_origin() {
    let f = quartic_in_x("1 + a*x + b*x^2 + c*x^3 + x^4");
    let e = expand_y(&f, &LocalPlace::Finite { x0: P::zero(), y0: P::one() }, 3).unwrap();
    assert_eq!(e.y.coefficient_of(0).unwrap(), p("1"));
    assert_eq!(e.y.coefficient_of(1).unwrap(), p("1/2*a"));
    assert_eq!(e.y.coefficient_of(2).unwrap(), p("1/2*b - 1/8*a^2"));
    assert!(matches!(e.y.coefficient_of(3), Err(SeriesError::InsufficientPrecision { .. })));
}

#[test]
fn minus_branch_at_infinity_has_printed_cubic_term() {
    let f = quartic_in_x("1 + a*x + (1/4*a^2 - 25/12)*x^2 + c*x^3 + x^4");
    let e = expand_y(&f, &LocalPlace::Infinite(Branch::Minus), 10).unwrap();
    let x3y = e.x.pow(3).unwrap() * &e.y;
    assert_eq!(x3y.coefficient_of(-5).unwrap(), p("-1"));
    assert_eq!(x3y.coefficient_of(-4).unwrap(), p("-1/2*c"));
    assert_eq!(x3y.coefficient_of(-3).unwrap(), p("25/24 - 1/8*a^2 + 1/8*c^2"));
    assert_eq!(x3y.coefficient_of(-1).unwrap(), p("1/128*a^4 + 25/64*c^2 + 5/128*c^4 - 25/192*a^2 + 1/4*a*c + 49/1152 - 3/64*c^2*a^2"));
}

#[test]
fn sqrt_of_one_and_of_one_plus_t() {
    let one = LaurentSeries::constant("t", rat_int(1), 12);
    assert_eq!(one.sqrt().unwrap(), one);
    let s = LaurentSeries::new("t", 0, vec![rat_int(1), rat_int(1)], 12);
    let r = s.sqrt().unwrap();
    assert_eq!(r.coefficient_of(2).unwrap(), rat(-1, 8));
    assert_eq!(r.clone() * &r, s);
}

#[test]
fn sqrt_rejects_odd_valuation_and_non_squares() {
    let s = LaurentSeries::new("t", 1, vec![rat_int(1)], 8);
    assert_eq!(s.sqrt(), Err(SeriesError::OddValuation(1)));
    let s = LaurentSeries::new("t", 0, vec![rat_int(2)], 8);
    assert_eq!(s.sqrt(), Err(SeriesError::NonSquareLeading));
}

#[test]
fn cubic_place_at_infinity_over_quadratic_field() {
    let f = parse_poly("420*x^3 - (119 + 9*45*sqrt(105))*x^2 + 14*(1515 - 45*sqrt(105))*x + 420*(420 - 45*sqrt(105))")
        .unwrap()
        .to_dense("x")
        .unwrap();
    let e = expand_y(&f, &LocalPlace::InfiniteCubic, 10).unwrap();
    assert_eq!(e.x.valuation(), Some(-2));
    assert_eq!(e.y.valuation(), Some(-3));
    let lhs = e.y.clone() * &e.y;
    let rhs = e.x.eval_upoly(&f);
    let diff = lhs - &rhs;
    assert!(diff.is_zero());
    assert!(diff.precision() >= -6 + 10);
    assert_eq!(e.x.leading_coeff().unwrap(), &QuadExt::rational(rat(1, 420)));
}

#[test]
fn ramified_place_uses_y_as_parameter() {
    let f = UPoly::new(vec![rat_int(1), rat_int(0), rat_int(0), rat_int(1)]);
    let e = expand_y(&f, &LocalPlace::Ramified { x0: rat_int(-1) }, 8).unwrap();
    assert_eq!(e.x.coefficient_of(2).unwrap(), rat(1, 3));
    let diff = e.y.clone() * &e.y - &e.x.eval_upoly(&f);
    assert!(diff.is_zero());
    assert!(diff.precision() >= 8);
}

#[test]
fn expansion_rejects_bad_requests() {
    let f = UPoly::new(vec![rat_int(1), rat_int(0), rat_int(0), rat_int(1)]);
    assert!(matches!(expand_y(&f, &LocalPlace::InfiniteCubic, 0), Err(SeriesError::OrderTooSmall)));
    assert!(matches!(expand_y(&f, &LocalPlace::InfiniteCubic, 65), Err(SeriesError::CapExceeded(65))));
    let bad = LocalPlace::Finite { x0: rat_int(0), y0: rat_int(2) };
    assert!(matches!(expand_y(&f, &bad, 4), Err(SeriesError::NotOnCurve)));
    assert!(matches!(expand_y(&f, &LocalPlace::Infinite(Branch::Plus), 4), Err(SeriesError::UnsupportedPlace(_))));
}

#[test]
fn reversion_inverts_composition() {
    let g = LaurentSeries::new("t", 1, vec![rat_int(2), rat_int(3), rat_int(-1), rat_int(5)], 10);
    let h = g.reversion().unwrap();
    let id = g.compose(&h).unwrap();
    assert_eq!(id.coefficients(0, 10).unwrap(), (0..10).map(|k| if k == 1 { rat_int(1) } else { rat_int(0) }).collect::<Vec<_>>());
}

#[test]
fn display_shows_truncation() {
    let s = LaurentSeries::new("t", -1, vec![rat_int(1), rat_int(0), rat(-1, 2)], 3);
    assert_eq!(s.to_string(), "t^-1 - 1/2*t + O(t^3)");
}

#[test]
fn product_precision_is_conservative() {
    let a = LaurentSeries::new("t", 0, vec![rat_int(1), rat_int(1)], 5);
    let b = LaurentSeries::new("t", 2, vec![rat_int(1)], 4);
    let c = a * &b;
    assert_eq!(c.precision(), 4);
}

fn rseries(val: i64) -> impl Strategy<Value = LaurentSeries<Rational>> {
    (prop::collection::vec(-9i64..10, 1..10), 1i64..5).prop_map(move |(v, lead)| {
        let mut c: Vec<Rational> = v.into_iter().map(rat_int).collect();
        c[0] = rat_int(lead * lead);
        LaurentSeries::new("t", val, c, val + 12)
    })
}

proptest! {
    #[test]
    fn sqrt_squares_back(s in rseries(-2)) {
        let r = s.sqrt().unwrap();
        let back = r.clone() * &r;
        prop_assert_eq!(back.precision(), s.precision());
        prop_assert!((back - &s).is_zero());
    }

    #[test]
    fn inverse_multiplies_to_one(s in rseries(1)) {
        let i = s.inverse().unwrap();
        let one = s * &i;
        prop_assert_eq!(one.coefficient_of(0).unwrap(), rat_int(1));
        prop_assert!((one - &LaurentSeries::constant("t", rat_int(1), 100)).is_zero());
    }

    #[test]
    fn quartic_branches_are_negatives(c in prop::collection::vec(-5i64..6, 4)) {
        let f = UPoly::new(vec![rat_int(c[0]), rat_int(c[1]), rat_int(c[2]), rat_int(c[3]), rat_int(1)]);
        let plus = expand_y(&f, &LocalPlace::Infinite(Branch::Plus), 8).unwrap();
        let minus = expand_y(&f, &LocalPlace::Infinite(Branch::Minus), 8).unwrap();
        let prod = plus.y.clone() * &minus.y + &plus.x.eval_upoly(&f);
        prop_assert!(prod.is_zero());
        for e in [plus, minus] {
            prop_assert!((e.y.clone() * &e.y - &e.x.eval_upoly(&f)).is_zero());
        }
    }

    #[test]
    fn finite_expansion_satisfies_curve(c in prop::collection::vec(-5i64..6, 4), y0 in 1i64..4) {
        let f = UPoly::new(vec![rat_int(y0 * y0), rat_int(c[0]), rat_int(c[1]), rat_int(c[2]), rat_int(c[3])]);
        let e = expand_y(&f, &LocalPlace::Finite { x0: rat_int(0), y0: rat_int(y0) }, 9).unwrap();
        let d = e.y.clone() * &e.y - &e.x.eval_upoly(&f);
        prop_assert!(d.is_zero());
        prop_assert_eq!(d.precision(), 9);
    }
}
