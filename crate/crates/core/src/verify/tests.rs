use super::*;
use crate::scalars::rat_int;

fn claim(sign: Gamma) -> BelyiClaim<QuadExt> {
    bundled_claim(sign).parse().unwrap()
}

#[test]
fn both_conjugates_certify() {
    for g in [Gamma::Plus, Gamma::Minus] {
        let cert = certify(&claim(g));
        assert!(cert.passed, "{g:?}: {:?}", cert.failure);
        assert!(cert.twist.is_some());
        let rh = cert.riemann_hurwitz.unwrap();
        assert_eq!(rh.identity, "16 = 2*8 + 0");
        let res = cert.residues.unwrap();
        assert_eq!(res.ratio_poles, "49");
        assert_eq!(res.ratio_zeros, "25/9");
    }
}

#[test]
fn claim_json_roundtrip() {
    let file = bundled_claim(Gamma::Plus);
    assert_eq!(ClaimFile::from_json(&file.to_json()).unwrap(), file);
    assert!(matches!(ClaimFile::from_json("{"), Err(ClaimError::Json(_))));
}

#[test]
fn perturbed_norm_fails_reconstruction() {
    let mut file = bundled_claim(Gamma::Plus);
    file.n0.num = format!("{} + 64*x - 105 + gamma", file.n0.num);
    let cert = certify(&file.parse().unwrap());
    assert!(!cert.passed);
    assert_eq!(cert.outcome, Outcome::Reconstruct);
}

#[test]
fn swapped_norms_fail_divisors() {
    let mut file = bundled_claim(Gamma::Plus);
    std::mem::swap(&mut file.n0, &mut file.n1);
    let cert = certify(&file.parse().unwrap());
    assert!(!cert.passed);
    assert_eq!(cert.outcome, Outcome::Divisors);
}

#[test]
fn mismatched_conjugate_fails_reconstruction() {
    let mut c = claim(Gamma::Plus);
    c.model = claim(Gamma::Minus).model;
    assert_eq!(certify(&c).outcome, Outcome::Reconstruct);
}

#[test]
fn shifted_claim_still_certifies() {
    let c = claim(Gamma::Plus);
    for r in [rat_int(1), rat_int(-3)] {
        let s = shift_claim(&c, &QuadExt::from_rational(&r)).unwrap();
        assert!(certify(&s).passed);
    }
}

#[test]
fn constant_claim_is_degenerate() {
    let file = ClaimFile {
        name: "constant".into(),
        gamma: None,
        f: "x^3 + 1".into(),
        n0: RationalText { num: "1/4".into(), den: "1".into() },
        n1: RationalText { num: "1/4".into(), den: "1".into() },
    };
    let err = reconstruct_beta(&file.parse().unwrap()).unwrap_err();
    assert_eq!(err, VerifyError::Degenerate);
}

#[test]
fn coordinate_function_has_wrong_pattern() {
    // beta = x on y^2 = x^3 + 1 has norms x^2 and (x - 1)^2
    let file = ClaimFile {
        name: "x".into(),
        gamma: None,
        f: "x^3 + 1".into(),
        n0: RationalText { num: "x^2".into(), den: "1".into() },
        n1: RationalText { num: "(x - 1)^2".into(), den: "1".into() },
    };
    let cert = certify(&file.parse().unwrap());
    assert_eq!(cert.outcome, Outcome::Divisors);
    let d = cert.divisors.unwrap();
    assert_eq!(d.observed.poles, vec![2]);
}

#[test]
fn riemann_hurwitz_shortfall() {
    let rh = rh_certificate(&[5, 3], &[2, 2, 2, 1, 1], &[7, 1], 1);
    assert!(!rh.certified);
    assert_eq!(rh.total, 15);
    assert_eq!(rh.budget, 16);
    let ok = rh_certificate(&[5, 3], &[2, 2, 2, 2], &[7, 1], 1);
    assert!(ok.certified);
}

#[test]
fn pattern_counts_conjugate_points() {
    let c = claim(Gamma::Plus);
    let rec = reconstruct_beta(&c).unwrap();
    let data = check_divisor_structure(&rec.beta).unwrap();
    assert_eq!(data.check.observed, Pattern::target());
    assert_eq!(data.zeros.degree(), 0);
    assert_eq!(data.ones.degree(), 0);
}


