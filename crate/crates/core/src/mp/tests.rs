use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::curve::CurveModel;
use crate::poly::{RatFunc, UPoly, parse_rational_poly};
use crate::scalars::{Rational, rat_int};
use crate::series::{Branch, EXACT};

type E = FunctionFieldElement<Rational>;

fn up(c: &[i64]) -> UPoly<Rational> {
    UPoly::new(c.iter().map(|&v| rat_int(v)).collect())
}

fn model(c: &[i64]) -> Arc<CurveModel<Rational>> {
    Arc::new(CurveModel::new(up(c)).unwrap())
}

#[test]
fn inverse_identity_on_coordinates() {
    let m = model(&[1, 0, 0, 1]);
    for b in [E::x(m.clone()), E::y(m.clone())] {
        assert!(mp_inverse_identity(&b).unwrap());
    }
}

#[test]
fn recover_from_exact_pair() {
    let m = model(&[1, 0, 0, 1]);
    let x = E::x(m.clone());
    let a = mp(&x).unwrap();
    let b = mp(&x.inverse().unwrap()).unwrap();
    assert_eq!(recover_beta(&a, &b).unwrap(), x);
    assert_eq!(recover_beta(&a.scale(&rat_int(7)), &b).unwrap(), x.scale(&rat_int(7)));
    let zero = QuadDifferential::new(E::constant(m, rat_int(0)));
    assert_eq!(recover_beta(&a, &zero), Err(MpError::ZeroDifferential));
}

#[test]
fn constant_has_no_differential() {
    let m = model(&[1, 0, 0, 1]);
    assert_eq!(mp(&E::constant(m, rat_int(3))), Err(MpError::Constant));
}

#[test]
fn residues_are_minus_pole_order_squared() {
    let m = model(&[1, 0, 0, 1]);
    let inf = LocalPlace::InfiniteCubic;
    assert_eq!(mp(&E::x(m.clone())).unwrap().residue_at(&inf).unwrap(), rat_int(-4));
    assert_eq!(mp(&E::y(m.clone())).unwrap().residue_at(&inf).unwrap(), rat_int(-9));
    let q = model(&[1, 2, 3, 5, 1]);
    let d = mp(&E::x(q)).unwrap();
    assert_eq!(d.residue_at(&LocalPlace::Infinite(Branch::Plus)).unwrap(), rat_int(-1));
    assert_eq!(d.residue_at(&LocalPlace::Infinite(Branch::Minus)).unwrap(), rat_int(-1));
}

#[test]
fn higher_poles_are_rejected() {
    let m = model(&[1, 0, 0, 1]);
    let x = E::x(m);
    let d = QuadDifferential::new(x.mul(&x).unwrap());
    assert_eq!(d.residue_at(&LocalPlace::InfiniteCubic), Err(MpError::PoleTooHigh(4)));
}

#[test]
fn symbolic_ansatz_residues_at_infinity() {
    type F = RatFunc<Rational>;
    let c = |s: &str| F::from_poly(parse_rational_poly(s).unwrap());
    let f = UPoly::new(vec![c("1"), c("2"), c("-3"), c("5"), c("1")]);
    let m = Arc::new(CurveModel::new(f).unwrap());
    let u = FunctionFieldElement::from_polys(m, UPoly::new(vec![c("p"), c("q"), c("r")]), UPoly::constant(c("s")));
    let d = QuadDifferential::new(u);
    assert_eq!(d.residue_at(&LocalPlace::Infinite(Branch::Plus)).unwrap(), c("r + s"));
    assert_eq!(d.residue_at(&LocalPlace::Infinite(Branch::Minus)).unwrap(), c("r - s"));
}

#[test]
fn differential_is_symmetric_under_one_minus() {
    let m = model(&[1, 2, 3, 5, 1]);
    let b = E::from_polys(m, up(&[1, 2]), up(&[0, 1]));
    let c = b.neg().add_constant(&rat_int(1));
    assert_eq!(mp(&b).unwrap(), mp(&c).unwrap());
}

#[test]
fn local_residue_matches_differential() {
    let m = model(&[1, 2, 3, 5, 1]);
    let b = E::from_polys(m, up(&[1, 2, 1]), up(&[0, 1]));
    let d = mp(&b).unwrap();
    for place in [LocalPlace::Infinite(Branch::Plus), LocalPlace::Infinite(Branch::Minus)] {
        assert_eq!(mp_residue_at(&b, &place).unwrap(), d.residue_at(&place).unwrap());
    }
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..5, 1..=max_deg + 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn residue_invariant_under_parameter_change(c in prop::collection::vec(-9i64..10, 6), alpha in -5i64..6) {
        let mut coeffs: Vec<Rational> = c.into_iter().map(rat_int).collect();
        coeffs[0] = rat_int(3);
        let g = LaurentSeries::new("t", -2, coeffs, 4);
        let inner = LaurentSeries::new("t", 1, vec![rat_int(1), rat_int(alpha)], EXACT);
        let dt = inner.derivative();
        let changed = g.compose(&inner).unwrap() * &dt * &dt;
        prop_assert_eq!(quadratic_residue(&changed).unwrap(), quadratic_residue(&g).unwrap());
    }

    #[test]
    fn inverse_identity_holds(p in small_poly(2), q in small_poly(1)) {
        let m = model(&[1, -1, 0, 1]);
        let b = E::from_polys(m, up(&p), up(&q));
        prop_assume!(!b.is_constant());
        prop_assert!(mp_inverse_identity(&b).unwrap());
    }

    #[test]
    fn residue_at_infinity_matches_pole_order(p in small_poly(3), q in small_poly(1)) {
        let m = model(&[1, -1, 0, 1]);
        let b = E::from_polys(m, up(&p), up(&q));
        prop_assume!(!b.is_constant());
        let k = -b.order_at(&LocalPlace::InfiniteCubic).unwrap();
        prop_assume!(k > 0);
        prop_assert_eq!(mp(&b).unwrap().residue_at(&LocalPlace::InfiniteCubic).unwrap(), rat_int(-k * k));
        prop_assert_eq!(mp_residue_at(&b, &LocalPlace::InfiniteCubic).unwrap(), rat_int(-k * k));
    }

    #[test]
    fn divisor_of_differential_by_arithmetic(p in small_poly(2), q in small_poly(1)) {
        let m = model(&[1, 0, 0, 1]);
        let b = E::from_polys(m, up(&p), up(&q));
        prop_assume!(!b.is_constant());
        let prec = 160;
        let lhs = mp(&b).unwrap().divisor().unwrap().numeric(prec).unwrap();
        let d = divisor_of(&b.d_over_omega()).unwrap().numeric(prec).unwrap();
        let z = divisor_of(&b).unwrap().numeric(prec).unwrap();
        let o = divisor_of(&b.neg().add_constant(&rat_int(1))).unwrap().numeric(prec).unwrap();
        let rhs = d.add(&d).add(&z.negate()).add(&o.negate());
        prop_assert!(lhs.approx_eq(&rhs));
    }
}
