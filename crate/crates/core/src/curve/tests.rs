use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::poly::{UPoly, URatFunc, parse_poly};
use crate::scalars::{QuadExt, Rational, Ring, rat, rat_int};
use crate::series::{Branch, LocalPlace};

type E = FunctionFieldElement<Rational>;

fn up(c: &[i64]) -> UPoly<Rational> {
    UPoly::new(c.iter().map(|&v| rat_int(v)).collect())
}

fn model(c: &[i64]) -> Arc<CurveModel<Rational>> {
    Arc::new(CurveModel::new(up(c)).unwrap())
}

fn elem(m: &Arc<CurveModel<Rational>>, p: &[i64], q: &[i64]) -> E {
    E::from_polys(m.clone(), up(p), up(q))
}

fn bundled_model(sign: i64) -> CurveModel<QuadExt> {
    let g = if sign > 0 { "45*sqrt(105)" } else { "-45*sqrt(105)" };
    let src = format!("420*x^3 - (119 + 9*({g}))*x^2 + 14*(1515 - ({g}))*x + 420*(420 - ({g}))");
    CurveModel::new(parse_poly(&src).unwrap().to_dense("x").unwrap()).unwrap()
}

#[test]
fn rejects_bad_models() {
    assert_eq!(CurveModel::new(up(&[1, 0, 1])), Err(CurveError::BadDegree(2)));
    assert_eq!(CurveModel::new(up(&[0, 0, 1, 1])), Err(CurveError::Singular));
}

#[test]
fn divisor_of_y_on_cubic() {
    let m = model(&[1, 0, 0, 1]);
    let d = divisor_of(&E::y(m.clone())).unwrap();
    assert_eq!(d.entries(), &[(Cluster::Ramified(up(&[1, 0, 0, 1])), 1), (Cluster::InfiniteCubic, -3)]);
    assert_eq!(d.to_string(), "1*[x^3 + 1 = 0, y = 0] - 3*[inf]");
}

#[test]
fn divisor_of_x_on_quartic() {
    let m = model(&[1, 1, 2, 3, 1]);
    let d = divisor_of(&E::x(m.clone())).unwrap();
    assert_eq!(d.multiplicity_at(&LocalPlace::Finite { x0: rat_int(0), y0: rat_int(1) }), 1);
    assert_eq!(d.multiplicity_at(&LocalPlace::Finite { x0: rat_int(0), y0: rat_int(-1) }), 1);
    assert_eq!(d.multiplicity_at(&LocalPlace::Infinite(Branch::Plus)), -1);
    assert_eq!(d.multiplicity_at(&LocalPlace::Infinite(Branch::Minus)), -1);
    assert_eq!(d.entries().len(), 3);
}

#[test]
fn non_split_infinity_is_a_pair() {
    let m = model(&[1, 1, 0, 0, 2]);
    let d = divisor_of(&E::x(m)).unwrap();
    assert_eq!(d.entries(), &[(Cluster::Fiber(up(&[0, 1])), 1), (Cluster::InfinitePair, -1)]);
}

#[test]
fn tangent_function_separates_branches() {
    let m = model(&[1, 0, 0, 1]);
    let h = elem(&m, &[-1], &[1]);
    let d = divisor_of(&h).unwrap();
    let top = LocalPlace::Finite { x0: rat_int(0), y0: rat_int(1) };
    let bottom = LocalPlace::Finite { x0: rat_int(0), y0: rat_int(-1) };
    assert_eq!(d.multiplicity_at(&top), 3);
    assert_eq!(d.multiplicity_at(&bottom), 0);
    assert_eq!(h.order_at(&top).unwrap(), 3);
    assert_eq!(h.order_at(&bottom).unwrap(), 0);
    assert_eq!(h.order_at(&LocalPlace::InfiniteCubic).unwrap(), -3);
}

#[test]
fn osculating_function_at_base_point() {
    // y - (1 + a x / 2 + (b/2 - a^2/8) x^2) on y^2 = 1 + 2x + 3x^2 + 5x^3 + x^4
    let m = model(&[1, 2, 3, 5, 1]);
    let h = E::from_polys(m.clone(), UPoly::new(vec![rat_int(-1), rat_int(-1), rat(-1, 1)]), up(&[1]));
    let a1 = LocalPlace::Finite { x0: rat_int(0), y0: rat_int(1) };
    assert_eq!(h.order_at(&a1).unwrap(), 3);
    assert_eq!(divisor_of(&h).unwrap().multiplicity_at(&a1), 3);
    assert_eq!(E::x(m).order_at(&a1).unwrap(), 1);
}

#[test]
fn zero_has_no_order() {
    let m = model(&[1, 0, 0, 1]);
    let z = elem(&m, &[], &[]);
    assert_eq!(z.order_at(&LocalPlace::InfiniteCubic), Err(CurveError::ZeroElement));
    assert!(divisor_of(&z).is_err());
    assert!(z.inverse().is_err());
}

#[test]
fn differentials_of_coordinates() {
    let m = model(&[1, 0, 0, 1]);
    let dy = E::y(m.clone()).d_over_omega();
    assert_eq!(dy, E::new(m.clone(), URatFunc::from_poly(UPoly::new(vec![rat_int(0), rat_int(0), rat(3, 2)])), URatFunc::zero()));
    assert_eq!(E::x(m.clone()).d_over_omega(), E::y(m.clone()));
    let q = URatFunc::new(UPoly::new(vec![rat_int(0), rat_int(0), rat(3, 2)]), up(&[1, 0, 0, 1])).unwrap();
    assert_eq!(E::y(m.clone()).dx_derivative(), E::new(m, URatFunc::zero(), q));
}

#[test]
fn norms_of_simple_elements() {
    let m = model(&[1, 0, 0, 1]);
    let (n0, n1) = norms(&E::y(m.clone()));
    assert_eq!(n0, URatFunc::from_poly(up(&[-1, 0, 0, -1])));
    assert_eq!(n1, URatFunc::from_poly(up(&[0, 0, 0, -1])));
    let (n0, n1) = norms(&E::constant(m, rat_int(5)));
    assert_eq!((n0, n1), (URatFunc::constant(rat_int(25)), URatFunc::constant(rat_int(16))));
}

#[test]
fn j_of_standard_curves() {
    assert_eq!(model(&[1, 0, 0, 1]).j_invariant(), rat_int(0));
    assert_eq!(model(&[0, 1, 0, 1]).j_invariant(), rat_int(1728));
    assert_eq!(model(&[1, 0, 0, 0, 1]).j_invariant(), rat_int(1728));
}

#[test]
fn j_of_both_dessins() {
    let plus = bundled_model(1).j_numeric(256).to_f64_pair().0;
    let minus = bundled_model(-1).j_numeric(256).to_f64_pair().0;
    assert!((plus - 1315.640).abs() < 5e-3, "{plus}");
    assert!((minus - 20.3167).abs() < 5e-4, "{minus}");
    let exact = bundled_model(1).j_invariant();
    assert!(!exact.is_rational());
    assert_eq!(exact.conj(), bundled_model(-1).j_invariant());
}

#[test]
fn twist_preserves_j() {
    let m = model(&[3, 1, 0, 1]);
    assert_eq!(m.twist(&rat_int(-7)).unwrap().j_invariant(), m.j_invariant());
}

#[test]
fn products_with_inverse() {
    let m = model(&[1, 1, 2, 3, 1]);
    let h = elem(&m, &[1, 2], &[3, 0, 1]);
    let one = h.mul(&h.inverse().unwrap()).unwrap();
    assert_eq!(one, E::constant(m.clone(), rat_int(1)));
    assert_eq!(h.pow(-2).unwrap().mul(&h.pow(2).unwrap()).unwrap(), one);
    let other = E::y(model(&[1, 0, 0, 1]));
    assert_eq!(h.mul(&other), Err(CurveError::MismatchedModels));
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..5, 0..=max_deg + 1)
}

fn cubic_or_quartic() -> impl Strategy<Value = Vec<i64>> {
    prop_oneof![
        Just(vec![1, -1, 0, 1]),
        Just(vec![1, 0, 0, 1]),
        Just(vec![1, 2, 3, 5, 1]),
        Just(vec![1, 1, 0, 0, 2]),
        Just(vec![0, 3, 0, -2, 1]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn divisor_degree_is_zero(c in cubic_or_quartic(), p in small_poly(3), q in small_poly(2)) {
        let m = model(&c);
        let h = elem(&m, &p, &q);
        prop_assume!(!h.is_zero());
        let d = divisor_of(&h).unwrap();
        prop_assert_eq!(d.degree(), 0);
    }

    #[test]
    fn divisor_is_multiplicative(c in cubic_or_quartic(), p1 in small_poly(2), q1 in small_poly(1), p2 in small_poly(2), q2 in small_poly(1)) {
        let m = model(&c);
        let (h1, h2) = (elem(&m, &p1, &q1), elem(&m, &p2, &q2));
        prop_assume!(!h1.is_zero() && !h2.is_zero());
        let lhs = divisor_of(&h1.mul(&h2).unwrap()).unwrap().numeric(160).unwrap();
        let rhs = divisor_of(&h1).unwrap().numeric(160).unwrap().add(&divisor_of(&h2).unwrap().numeric(160).unwrap());
        prop_assert!(lhs.approx_eq(&rhs));
    }

    #[test]
    fn series_order_matches_divisor(p in small_poly(3), q in small_poly(2)) {
        let m = model(&[1, 0, 0, 1]);
        let h = elem(&m, &p, &q);
        prop_assume!(!h.is_zero());
        let d = divisor_of(&h).unwrap();
        let places = [
            LocalPlace::Finite { x0: rat_int(0), y0: rat_int(1) },
            LocalPlace::Finite { x0: rat_int(0), y0: rat_int(-1) },
            LocalPlace::Finite { x0: rat_int(2), y0: rat_int(3) },
            LocalPlace::Finite { x0: rat_int(2), y0: rat_int(-3) },
            LocalPlace::Ramified { x0: rat_int(-1) },
            LocalPlace::InfiniteCubic,
        ];
        for pl in &places {
            prop_assert_eq!(h.order_at(pl).unwrap(), d.multiplicity_at(pl), "{}", pl);
        }
    }

    #[test]
    fn norm_difference_identity(p in small_poly(4), q in small_poly(3), dp in small_poly(2)) {
        let m = model(&[1, 2, 3, 5, 1]);
        let den = up(&dp);
        prop_assume!(!den.is_zero());
        let pp = URatFunc::new(up(&p), den).unwrap();
        let h = E::new(m, pp.clone(), URatFunc::from_poly(up(&q)));
        let (n0, n1) = norms(&h);
        prop_assert_eq!(n0 - n1, pp.scale(&rat_int(2)) - URatFunc::one());
    }

    #[test]
    fn j_survives_model_changes(c in prop::collection::vec(-6i64..7, 4), u in 1i64..4, r in -3i64..4, lam in 1i64..5) {
        let f = up(&c) + &up(&[0, 0, 0, 0, 1]);
        let Ok(m) = CurveModel::new(f.clone()) else { return Ok(()); };
        let inner = up(&[r, u]);
        let g = f.compose(&inner).scale(&rat_int(lam));
        let m2 = CurveModel::new(g).unwrap();
        prop_assert_eq!(m.j_invariant(), m2.j_invariant());
    }

    #[test]
    fn quartic_and_cubic_j_agree(c in prop::collection::vec(-6i64..7, 3), lead in 1i64..4) {
        // x f(x) with f cubic, versus X^4 f(1/X) after moving the root x = 0 to infinity
        let quartic = up(&[0, lead, c[0], c[1], c[2]]);
        let cubic = up(&[c[2], c[1], c[0], lead]);
        let (Ok(q), Ok(k)) = (CurveModel::new(quartic), CurveModel::new(cubic)) else { return Ok(()); };
        prop_assert_eq!(q.j_invariant(), k.j_invariant());
    }
}
