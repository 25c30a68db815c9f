use proptest::prelude::*;

use super::pipeline::{Stage, canonical_roots, case4_discriminant_ok, excluded_branch, proportional};
use super::symbolic::*;
use crate::poly::parse_rational_poly;
use crate::scalars::{Rational, Ring, rat, rat_int};
use crate::series::expand_y;

fn p(s: &str) -> Poly {
    parse_rational_poly(s).unwrap()
}

fn staged() -> AnsatzState {
    let mut st = AnsatzState::new();
    solve_u_at_a1(&mut st).unwrap();
    apply_residue_ratio(&mut st).unwrap();
    st
}

#[test]
fn stage_names_round_trip() {
    for s in Stage::ALL {
        assert_eq!(s.name().parse::<Stage>().unwrap(), s);
    }
    assert!("nonsense".parse::<Stage>().is_err());
}

#[test]
fn u_specializes_to_minus_one() {
    let mut st = AnsatzState::new();
    let u = solve_u_at_a1(&mut st).unwrap();
    let at = |q: &Poly| q.substitute("s", &Poly::one()).substitute("a", &Poly::zero()).substitute("b", &Poly::zero());
    assert_eq!(at(&u[0]), konst(-1, 1));
    assert!(at(&u[1]).is_zero());
    assert!(at(&u[2]).is_zero());
}

#[test]
fn u_vanishes_to_order_three_at_a1() {
    let mut st = AnsatzState::new();
    solve_u_at_a1(&mut st).unwrap();
    let e = expand_y(&st.f, &a1_place(), 6).unwrap();
    let (pp, s) = u_parts(&st);
    let u = e.x.eval_upoly(&pp) + &e.y.scale(&s);
    for k in 0..3 {
        assert!(u.coefficient_of(k).unwrap().is_zero());
    }
    assert!(!u.coefficient_of(3).unwrap().is_zero());
}

#[test]
fn rejected_ratio_is_negative() {
    let mut st = AnsatzState::new();
    solve_u_at_a1(&mut st).unwrap();
    let r = apply_residue_ratio(&mut st).unwrap();
    let one = Rational::one();
    assert_eq!((r.r_over_s.clone() + &one) / &(r.r_over_s - &one), rat_int(49));
    assert_eq!(r.rejected_r_over_s, rat(-25, 24));
}

#[test]
fn second_point_lies_on_both_curves() {
    let st = staged();
    let a2 = locate_a2(&st).unwrap();
    assert_eq!(a2.y_of_x.eval(&a2.x), a2.y);
    assert_eq!(a2.y.clone() * &a2.y, st.f.eval(&a2.x));
    let origin = a2.x.substitute("a", &Poly::zero()).substitute("c", &Poly::zero());
    assert!(origin.is_zero());
}

#[test]
fn q_formulas_specialize() {
    let mut st = staged();
    let q = solve_qr_at_c2(&mut st).unwrap();
    let at = |f: &Poly| {
        let mut f = f.substitute("r3", &Poly::one());
        for v in ["r0", "r1", "r2", "a", "c"] {
            f = f.substitute(v, &Poly::zero());
        }
        f.as_constant().unwrap()
    };
    assert_eq!(at(&q[5]), rat_int(1));
    assert_eq!(at(&q[4]), rat_int(0));
    assert_eq!(at(&q[3]), rat(-25, 24));
    assert!(c2_order_ok(&st).unwrap());
}

#[test]
fn proportional_detects_scalar_multiples() {
    assert!(proportional(&p("2*a + 4*c"), &p("a + 2*c")));
    assert!(!proportional(&p("2*a + 4*c"), &p("a + c")));
    assert!(!proportional(&p("a"), &Poly::zero()));
}

#[test]
fn discriminant_split() {
    let (ok, text) = case4_discriminant_ok(&p("5670*a^4 - 1439865*a^2 + 13942756"));
    assert!(ok, "{text}");
    assert!(!case4_discriminant_ok(&p("a^4 + a^2 + 1")).0);
}

#[test]
fn canonical_roots_pick_one_per_sign() {
    let r = canonical_roots(&p("a^4 - 1"), 128).unwrap();
    assert_eq!(r.len(), 2);
    let pairs: Vec<(f64, f64)> = r.iter().map(|z| z.to_f64_pair()).collect();
    assert!(pairs.iter().any(|(x, y)| (x - 1.0).abs() < 1e-12 && y.abs() < 1e-12));
    assert!(pairs.iter().any(|(x, y)| x.abs() < 1e-12 && (y - 1.0).abs() < 1e-12));
}

#[test]
fn excluded_branch_on_toy_system() {
    let factors = [p("a - 1"), p("a + 2")];
    let e = excluded_branch(&p("c - a"), &p("c + a - 2"), &p("c - 1"), &factors).unwrap();
    assert_eq!(e.meets_cases, vec![1]);
    assert!(!e.empty);
    let e = excluded_branch(&p("c - a"), &p("c + a"), &p("c - 1"), &factors).unwrap();
    assert!(e.empty);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn u_is_linear_in_s(n in 1i64..50, d in 1i64..50) {
        let mut st = AnsatzState::new();
        let u = solve_u_at_a1(&mut st).unwrap();
        let lam = rat(n, d);
        let scaled_s = var("s").scale(&lam);
        for part in &u {
            prop_assert_eq!(part.substitute("s", &scaled_s), part.scale(&lam));
        }
    }

    #[test]
    fn q_is_linear_in_r(n in 1i64..50, d in 1i64..50) {
        let mut st = staged();
        let q = solve_qr_at_c2(&mut st).unwrap();
        let lam = rat(n, d);
        for f in &q {
            let mut g = f.clone();
            for v in R_VARS {
                g = g.substitute(v, &var(v).scale(&lam));
            }
            prop_assert_eq!(g, f.scale(&lam));
        }
    }
}
