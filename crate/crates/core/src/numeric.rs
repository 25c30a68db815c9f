//! Multiprecision numerics: embeddings into the complex numbers and polynomial roots.

use thiserror::Error;

use crate::poly::UPoly;
use crate::scalars::{BigFloat, Complex, QuadExt, Rational, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumericError {
    #[error("root finder did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error("polynomial has no roots to find")]
    Constant,
}

/// Maps exact values into `C` at a given working precision.
pub trait Embed {
    fn to_complex(&self, prec: u32) -> Complex;
}

impl Embed for Rational {
    fn to_complex(&self, prec: u32) -> Complex {
        Complex::from_rational_prec(self, prec)
    }
}

/// Uses the positive square root of the radicand.
impl Embed for QuadExt {
    fn to_complex(&self, prec: u32) -> Complex {
        Complex::real(self.to_bigfloat(prec))
    }
}

impl Embed for Complex {
    fn to_complex(&self, prec: u32) -> Complex {
        self.with_precision(prec)
    }
}

impl Embed for BigFloat {
    fn to_complex(&self, prec: u32) -> Complex {
        Complex::real(self.with_precision(prec))
    }
}

pub fn embed_poly<K: Embed + Ring>(p: &UPoly<K>, prec: u32) -> UPoly<Complex> {
    UPoly::new(p.coeffs().iter().map(|c| c.to_complex(prec)).collect())
}

pub fn float(n: i64, prec: u32) -> BigFloat {
    BigFloat::from_i64(n).with_precision(prec)
}

pub fn cfloat(n: i64, prec: u32) -> Complex {
    Complex::real(float(n, prec))
}

/// An approximate root with a rigorous-in-spirit error radius `n |p/p'|`.
#[derive(Clone, Debug)]
pub struct RootApprox {
    pub z: Complex,
    pub radius: BigFloat,
}

/// All complex roots of a square-free polynomial by the Aberth iteration.
pub fn aberth_roots(p: &UPoly<Complex>, prec: u32) -> Result<Vec<RootApprox>, NumericError> {
    match aberth_iterate(p, prec)? {
        (roots, true) => Ok(roots),
        (_, false) => Err(NumericError::NoConvergence(max_iterations(p, prec))),
    }
}

/// Like [`aberth_roots`] but returns the last iterate when the iteration stalls,
/// which happens near multiple roots; the flag reports convergence.
pub fn aberth_approximations(p: &UPoly<Complex>, prec: u32) -> Result<(Vec<RootApprox>, bool), NumericError> {
    aberth_iterate(p, prec)
}

fn max_iterations(p: &UPoly<Complex>, prec: u32) -> usize {
    40 * p.degree().unwrap_or(0) + 4 * prec as usize
}

fn aberth_iterate(p: &UPoly<Complex>, prec: u32) -> Result<(Vec<RootApprox>, bool), NumericError> {
    let n = p.degree().ok_or(NumericError::Constant)?;
    if n == 0 {
        return Err(NumericError::Constant);
    }
    let p: UPoly<Complex> = UPoly::new(p.coeffs().iter().map(|c| c.with_precision(prec)).collect());
    let lc = p.lc();
    let monic = UPoly::new(p.coeffs().iter().map(|c| c.clone() / &lc).collect());
    let dp = monic.derivative();
    let bound = monic.coeffs()[..n].iter().map(|c| c.abs().to_f64()).fold(0.0f64, f64::max) + 1.0;
    let radius = BigFloat::from_rational(&crate::scalars::f64_to_rational(bound.min(1e300)), prec);
    let mut z: Vec<Complex> = (0..n).map(|k| Complex::unit_seed(k, n, prec).scale(&radius)).collect();
    let tol = BigFloat::pow2(-(prec as i64) + 16);
    let max_iter = max_iterations(&p, prec);
    for _ in 0..max_iter {
        let mut worst = BigFloat::zero_with(prec);
        for i in 0..n {
            let pv = monic.eval(&z[i]);
            if pv.is_zero() {
                continue;
            }
            let w = pv / &dp.eval(&z[i]);
            let mut s = Complex::zero().with_precision(prec);
            for j in 0..n {
                if j != i {
                    s = s + &(Complex::one() / &(z[i].clone() - &z[j]));
                }
            }
            let step = w.clone() / &(Complex::one() - &(w * &s));
            let size = step.abs() / &(z[i].abs() + &BigFloat::from_i64(1));
            if size > worst {
                worst = size;
            }
            z[i] = z[i].clone() - &step;
        }
        if worst < tol {
            return Ok((finish(&monic, &dp, z, n, prec), true));
        }
    }
    Ok((finish(&monic, &dp, z, n, prec), false))
}

fn finish(p: &UPoly<Complex>, dp: &UPoly<Complex>, z: Vec<Complex>, n: usize, prec: u32) -> Vec<RootApprox> {
    // one Newton polish per root, then the error radius
    let mut out: Vec<RootApprox> = z
        .into_iter()
        .map(|r| {
            let d = dp.eval(&r);
            let r = if d.is_zero() { r } else { r.clone() - &(p.eval(&r) / &d) };
            let d = dp.eval(&r);
            let radius = if d.is_zero() {
                BigFloat::pow2(0)
            } else {
                (p.eval(&r) / &d).abs() * &float(n as i64, prec)
            };
            RootApprox { z: r, radius }
        })
        .collect();
    out.sort_by(|a, b| {
        let (ar, ai) = a.z.to_f64_pair();
        let (br, bi) = b.z.to_f64_pair();
        ar.total_cmp(&br).then(ai.total_cmp(&bi))
    });
    out
}

/// Relative agreement of two complex numbers, in bits.
pub fn agree_bits(a: &Complex, b: &Complex) -> i64 {
    let d = (a.clone() - b).abs();
    if Ring::is_zero(&d) {
        return i64::MAX;
    }
    let scale = a.abs().top().max(b.abs().top()).max(0);
    scale - d.top()
}

/// `10^-digits` as a float at the given precision.
pub fn decimal_tolerance(digits: u32, prec: u32) -> BigFloat {
    let ten = float(10, prec);
    let mut t = float(1, prec);
    for _ in 0..digits {
        t = t / &ten;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, rat_int};

    fn cpoly(c: &[i64], prec: u32) -> UPoly<Complex> {
        UPoly::new(c.iter().map(|&v| cfloat(v, prec)).collect())
    }

    #[test]
    fn roots_of_unity_cubed() {
        let roots = aberth_roots(&cpoly(&[-1, 0, 0, 1], 128), 128).unwrap();
        assert_eq!(roots.len(), 3);
        for r in &roots {
            let z3 = r.z.clone() * &r.z * &r.z;
            assert!((z3 - &Complex::one()).abs() < decimal_tolerance(30, 128));
            assert!(r.radius < decimal_tolerance(30, 128));
        }
        let (re, im) = roots[0].z.to_f64_pair();
        assert!((re + 0.5).abs() < 1e-12 && (im.abs() - 0.75f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn sqrt_two_to_high_precision() {
        let roots = aberth_roots(&cpoly(&[-2, 0, 1], 256), 256).unwrap();
        let r = &roots[1].z;
        let sq = r.clone() * r;
        assert!((sq - &cfloat(2, 256)).abs() < decimal_tolerance(70, 256));
    }

    #[test]
    fn embedding_quadratic_uses_positive_root() {
        let g = QuadExt::new(rat_int(0), rat_int(45), 105).unwrap();
        let (re, _) = g.to_complex(128).to_f64_pair();
        assert!((re - 461.112_785_4).abs() < 1e-6);
        let (h, _) = rat(1, 3).to_complex(128).to_f64_pair();
        assert!((h - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn constant_has_no_roots() {
        assert!(aberth_roots(&cpoly(&[5], 64), 64).is_err());
    }
}
