use serde::Serialize;

use crate::numeric::{aberth_approximations, aberth_roots, agree_bits};
use crate::poly::UPoly;
use crate::scalars::{BigFloat, Complex, Rational, Ring, rat};

use super::DeriveError;
use super::symbolic::{Poly, Q_VARS, R_VARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseStatus {
    Inconsistent,
    NonBelyi,
    Belyi,
    ExcludedByCount,
}

/// Everything the numeric stage needs about the symbolic pipeline.
#[derive(Clone, Debug)]
pub struct EliminationData {
    pub f10: Poly,
    pub numerator: Poly,
    pub q_formulas: Vec<Poly>,
    pub rows: Vec<Vec<Poly>>,
    pub l: Poly,
    pub d: Poly,
    pub x2: Poly,
}

/// One common zero `(a, c)` and what became of it.
#[derive(Clone, Debug)]
pub struct NumericSolution {
    pub a: Complex,
    pub c: Complex,
    pub on_l: bool,
    pub on_d: bool,
    pub candidate: Option<Candidate>,
}

/// The quotient `u (Q + yR)` with `s = r3 = 1` and its critical values off `{0, infinity}`.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub r: [Complex; 4],
    pub rank_residual: BigFloat,
    pub critical_points: Vec<(Complex, Complex)>,
    pub critical_values: Vec<Complex>,
    /// Smallest agreement, in bits, among the critical values.
    pub spread_bits: i64,
    pub is_belyi: bool,
}

pub(crate) fn cx(r: &Rational, prec: u32) -> Complex {
    Complex::from_rational_prec(r, prec)
}

pub fn eval2(p: &Poly, a: &Complex, c: &Complex, prec: u32) -> Result<Complex, DeriveError> {
    Ok(p.eval_named(|q| cx(q, prec), &[("a", a.clone()), ("c", c.clone())])?)
}

/// `p(a0, c)` as a polynomial in `c`.
fn in_c(p: &Poly, a: &Complex, prec: u32) -> Result<UPoly<Complex>, DeriveError> {
    let coeffs = p
        .coefficients_in("c")
        .iter()
        .map(|k| Ok(k.eval_named(|q| cx(q, prec), &[("a", a.clone())])?))
        .collect::<Result<Vec<_>, DeriveError>>()?;
    Ok(UPoly::new(coeffs))
}

/// `|p(z)| / sum |p_i| |z|^i`.
fn relative_value(p: &UPoly<Complex>, z: &Complex) -> BigFloat {
    let v = p.eval(z).abs();
    let mut scale = BigFloat::from_i64(0);
    let mut pow = BigFloat::from_i64(1);
    let az = z.abs();
    for c in p.coeffs() {
        scale = scale + &(c.abs() * &pow);
        pow = pow * &az;
    }
    if Ring::is_zero(&scale) { v } else { v / &scale }
}

fn small(x: &BigFloat, prec: u32) -> bool {
    *x < BigFloat::pow2(-(prec as i64) / 4)
}

pub fn roots_of(g: &UPoly<Rational>, prec: u32) -> Result<Vec<Complex>, DeriveError> {
    let p = UPoly::new(g.coeffs().iter().map(|c| cx(c, prec)).collect());
    Ok(aberth_roots(&p, prec).map_err(|e| DeriveError::Numeric(e.to_string()))?.into_iter().map(|r| r.z).collect())
}

/// Common zeros of the degree-ten factor and the residue numerator over `a = a0`.
pub fn common_solutions(data: &EliminationData, a: &Complex, prec: u32) -> Result<Vec<NumericSolution>, DeriveError> {
    let f = in_c(&data.f10, a, prec)?;
    let n = in_c(&data.numerator, a, prec)?;
    let mut out = Vec::new();
    for c in roots_of_complex(&f, prec)? {
        if !small(&relative_value(&n, &c), prec) {
            continue;
        }
        let lv = eval2(&data.l, a, &c, prec)?.abs();
        let dv = eval2(&data.d, a, &c, prec)?.abs();
        let on_l = small(&lv, prec);
        let on_d = small(&dv, prec);
        let candidate = if on_l || on_d { None } else { Some(candidate(data, a, &c, prec)?) };
        out.push(NumericSolution { a: a.clone(), c, on_l, on_d, candidate });
    }
    Ok(out)
}

fn roots_of_complex(p: &UPoly<Complex>, prec: u32) -> Result<Vec<Complex>, DeriveError> {
    Ok(aberth_approximations(p, prec).map_err(|e| DeriveError::Numeric(e.to_string()))?.0.into_iter().map(|r| r.z).collect())
}

fn simple_roots(p: &UPoly<Complex>, prec: u32) -> Result<Vec<Complex>, DeriveError> {
    Ok(aberth_roots(p, prec).map_err(|e| DeriveError::Numeric(e.to_string()))?.into_iter().map(|r| r.z).collect())
}

#[allow(clippy::needless_range_loop)]
fn solve3(m: [[Complex; 3]; 3], rhs: [Complex; 3]) -> Option<[Complex; 3]> {
    let mut a: Vec<Vec<Complex>> = (0..3).map(|i| {
        let mut row = m[i].to_vec();
        row.push(rhs[i].clone());
        row
    }).collect();
    for k in 0..3 {
        let p = (k..3).max_by(|&i, &j| a[i][k].abs().partial_cmp(&a[j][k].abs()).unwrap_or(std::cmp::Ordering::Equal))?;
        a.swap(k, p);
        if Ring::is_zero(&a[k][k]) {
            return None;
        }
        for i in k + 1..3 {
            let f = a[i][k].clone() / &a[k][k];
            for j in k..4 {
                let t = f.clone() * &a[k][j];
                a[i][j] = a[i][j].clone() - &t;
            }
        }
    }
    let mut x: [Complex; 3] = [Complex::zero(), Complex::zero(), Complex::zero()];
    for i in (0..3).rev() {
        let mut s = a[i][3].clone();
        for j in i + 1..3 {
            s = s - &(a[i][j].clone() * &x[j]);
        }
        x[i] = s / &a[i][i];
    }
    Some(x)
}

fn upoly_c(coeffs: Vec<Complex>) -> UPoly<Complex> {
    UPoly::new(coeffs)
}

/// Drops coefficients above `deg`.
fn truncate(p: &UPoly<Complex>, deg: usize) -> UPoly<Complex> {
    UPoly::new(p.coeffs().iter().take(deg + 1).cloned().collect())
}

/// Divides by `(x - z)` and discards the remainder.
fn deflate(p: &UPoly<Complex>, z: &Complex) -> UPoly<Complex> {
    let c = p.coeffs();
    let n = c.len();
    if n < 2 {
        return p.clone();
    }
    let mut q = vec![Complex::zero(); n - 1];
    let mut acc = c[n - 1].clone();
    for k in (0..n - 1).rev() {
        q[k] = acc.clone();
        acc = c[k].clone() + &(acc * z);
    }
    upoly_c(q)
}

/// Builds the quotient for `(a, c)` and evaluates it at its extra critical points.
pub fn candidate(data: &EliminationData, a: &Complex, c: &Complex, prec: u32) -> Result<Candidate, DeriveError> {
    let rows: Vec<Vec<Complex>> = data
        .rows
        .iter()
        .map(|r| r.iter().map(|p| eval2(p, a, c, prec)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    let m = [0, 1, 2].map(|i| [0, 1, 2].map(|j| rows[i][j].clone()));
    let rhs = [0, 1, 2].map(|i| -rows[i][3].clone());
    let sol = solve3(m, rhs).ok_or_else(|| DeriveError::Numeric("rank below three".into()))?;
    let r = [sol[0].clone(), sol[1].clone(), sol[2].clone(), Complex::one()];
    let residual = (0..4).fold(Complex::zero(), |acc, j| acc + &(rows[3][j].clone() * &r[j]));
    let row_scale = rows[3].iter().fold(BigFloat::from_i64(0), |acc, v| acc + &v.abs());
    let rank_residual = residual.abs() / &row_scale;

    let binding: Vec<(&str, Complex)> = [("a", a.clone()), ("c", c.clone())]
        .into_iter()
        .chain(R_VARS.iter().zip(r.iter()).map(|(n, v)| (*n, v.clone())))
        .collect();
    let ev = |p: &Poly| -> Result<Complex, DeriveError> { Ok(p.eval_named(|q| cx(q, prec), &binding)?) };
    let q = upoly_c(data.q_formulas.iter().map(ev).collect::<Result<_, _>>()?);
    debug_assert_eq!(data.q_formulas.len(), Q_VARS.len());
    let rr = upoly_c(r.to_vec());
    let k = |n: i64, d: i64| cx(&rat(n, d), prec);
    let b = a.clone() * a * &k(1, 4) - &k(25, 12);
    let f = upoly_c(vec![k(1, 1), a.clone(), b, c.clone(), k(1, 1)]);
    let u0 = upoly_c(vec![k(-1, 1), -(a.clone() * &k(1, 2)), k(25, 24)]);
    // u (Q + yR) = (u0 Q + f R) + y (u0 R + Q) with u = u0 + y
    let pb = u0.clone() * &q + &(f.clone() * &rr);
    let qb = u0 * &rr + &q;
    let fp = f.derivative();
    let h0 = f.clone() * &qb.derivative() + &(fp * &qb).scale(&k(1, 2));
    let h1 = pb.derivative();
    let norm = truncate(&(h0.clone() * &h0 - &(f.clone() * &h1 * &h1)), 10);
    // zeros of order four at x = 0 and two at x(A2)
    let mut rest = UPoly::new(norm.coeffs().iter().skip(4).cloned().collect());
    let x2 = eval2(&data.x2, a, c, prec)?;
    rest = deflate(&deflate(&rest, &x2), &x2);
    let xs = simple_roots(&rest, prec)?;
    let mut points = Vec::new();
    let mut values = Vec::new();
    for x in xs {
        let y0 = f.eval(&x).sqrt();
        let plus = (h0.eval(&x) + &(y0.clone() * &h1.eval(&x))).abs();
        let minus = (h0.eval(&x) - &(y0.clone() * &h1.eval(&x))).abs();
        let y = if plus <= minus { y0 } else { -y0 };
        values.push(pb.eval(&x) + &(y.clone() * &qb.eval(&x)));
        points.push((x, y));
    }
    let spread_bits = values.iter().skip(1).map(|v| agree_bits(&values[0], v)).min().unwrap_or(i64::MAX);
    let nonzero = values.first().is_some_and(|v| !small(&v.abs(), prec));
    let is_belyi = nonzero && spread_bits > prec as i64 / 4;
    Ok(Candidate { r, rank_residual, critical_points: points, critical_values: values, spread_bits, is_belyi })
}
