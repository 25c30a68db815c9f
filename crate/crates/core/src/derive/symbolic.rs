use std::collections::BTreeSet;

use crate::poly::{MultiPoly, UPoly, cramer, det_fraction_free, poly_gcd};
use crate::scalars::{Rational, Ring, rat};
use crate::series::{Branch, EXACT, LaurentSeries, LocalPlace, expand_y};

use super::DeriveError;

pub type Poly = MultiPoly<Rational>;

pub fn var(name: &str) -> Poly {
    Poly::var(name)
}

pub fn konst(n: i64, d: i64) -> Poly {
    Poly::constant(rat(n, d))
}

/// Coefficients of each unknown in a linear form, plus the part free of them.
pub fn linear_parts(e: &Poly, unknowns: &[&str]) -> (Vec<Poly>, Poly) {
    let coeffs = unknowns.iter().map(|u| e.coeff_of(u, 1)).collect();
    let rest = unknowns.iter().fold(e.clone(), |acc, u| acc.coeff_of(u, 0));
    (coeffs, rest)
}

/// Solves linear equations whose Cramer quotients are polynomial.
pub fn solve_polynomial(eqs: &[Poly], unknowns: &[&str]) -> Result<Vec<Poly>, DeriveError> {
    let mut m = Vec::new();
    let mut rhs = Vec::new();
    for e in eqs {
        let (c, rest) = linear_parts(e, unknowns);
        m.push(c);
        rhs.push(-rest);
    }
    let (nums, det) = cramer(&m, &rhs)?;
    if det.is_zero() {
        return Err(DeriveError::Singular("polynomial solve".into()));
    }
    nums.iter()
        .map(|n| n.exact_divide(&det)?.ok_or_else(|| DeriveError::Singular("non-polynomial solution".into())))
        .collect()
}

/// Current curve, unknowns and the substitutions applied so far.
#[derive(Clone, Debug)]
pub struct AnsatzState {
    pub f: UPoly<Poly>,
    pub substitutions: Vec<(String, Poly)>,
    pub free: BTreeSet<String>,
}

impl AnsatzState {
    pub fn new() -> Self {
        let f = UPoly::new(vec![konst(1, 1), var("a"), var("b"), var("c"), konst(1, 1)]);
        let free = ["a", "b", "c", "p", "q", "r", "s"].iter().map(|s| s.to_string()).collect();
        AnsatzState { f, substitutions: Vec::new(), free }
    }

    pub fn substitute(&mut self, name: &str, value: Poly) -> Result<(), DeriveError> {
        if !self.free.remove(name) {
            return Err(DeriveError::Inconsistent(format!("{name} is not free")));
        }
        if value.used_vars().iter().any(|v| v == name) {
            return Err(DeriveError::Inconsistent(format!("{name} occurs in its own value")));
        }
        self.f = self.f.map(|c| c.substitute(name, &value));
        for (_, v) in self.substitutions.iter_mut() {
            *v = v.substitute(name, &value);
        }
        self.substitutions.push((name.to_string(), value));
        Ok(())
    }

    pub fn introduce(&mut self, names: &[&str]) {
        self.free.extend(names.iter().map(|s| s.to_string()));
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        self.substitutions.iter().fold(p.clone(), |acc, (n, v)| acc.substitute(n, v))
    }

    pub fn lookup(&self, name: &str) -> Option<&Poly> {
        self.substitutions.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

impl Default for AnsatzState {
    fn default() -> Self {
        Self::new()
    }
}

pub fn a1_place() -> LocalPlace<Poly> {
    LocalPlace::Finite { x0: Poly::zero(), y0: Poly::one() }
}

/// `y` at `A1 = (0, 1)` to `order` terms.
pub fn y_at_a1(f: &UPoly<Poly>, order: usize) -> Result<LaurentSeries<Poly>, DeriveError> {
    Ok(expand_y(f, &a1_place(), order)?.y)
}

fn series_of_poly(p: &UPoly<Poly>, x: &LaurentSeries<Poly>) -> LaurentSeries<Poly> {
    x.eval_upoly(p)
}

/// `p + q x + r x^2 + s y` with the current substitutions.
pub fn u_parts(state: &AnsatzState) -> (UPoly<Poly>, Poly) {
    let p = UPoly::new(vec![state.apply(&var("p")), state.apply(&var("q")), state.apply(&var("r"))]);
    (p, state.apply(&var("s")))
}

/// Forces the `x^0, x^1, x^2` coefficients of `u` at `A1` to vanish.
pub fn solve_u_at_a1(state: &mut AnsatzState) -> Result<[Poly; 3], DeriveError> {
    let y = y_at_a1(&state.f, 3)?;
    let (pp, s) = u_parts(state);
    let x = LaurentSeries::new("t", 1, vec![Poly::one()], EXACT);
    let u = series_of_poly(&pp, &x) + &y.scale(&s);
    let eqs: Vec<Poly> = (0..3).map(|k| u.coefficient_of(k)).collect::<Result<_, _>>()?;
    let sol = solve_polynomial(&eqs, &["p", "q", "r"])?;
    for (n, v) in ["p", "q", "r"].iter().zip(&sol) {
        state.substitute(n, v.clone())?;
    }
    Ok([sol[0].clone(), sol[1].clone(), sol[2].clone()])
}

/// `u (dx/dt)^2 / y^2` at a place at infinity, coefficient of `t^-2`.
pub fn u_residue(state: &AnsatzState, branch: Branch) -> Result<Poly, DeriveError> {
    let e = expand_y(&state.f, &LocalPlace::Infinite(branch), 8)?;
    let (pp, s) = u_parts(state);
    let u = series_of_poly(&pp, &e.x) + &e.y.scale(&s);
    let dx = e.dx();
    let form = u * &dx * &dx * &e.y.cap_relative(8).inverse()?.pow(2)?;
    Ok(form.coefficient_of(-2)?)
}

/// Result of imposing the ratio of residues at the two places at infinity.
#[derive(Clone, Debug)]
pub struct RatioOutcome {
    pub residue_plus: Poly,
    pub residue_minus: Poly,
    pub r_over_s: Rational,
    pub rejected_r_over_s: Rational,
    pub b: Poly,
}

/// Imposes `res(C1) / res(C2) = 49` and solves for `b`.
pub fn apply_residue_ratio(state: &mut AnsatzState) -> Result<RatioOutcome, DeriveError> {
    let plus = u_residue(state, Branch::Plus)?;
    let minus = u_residue(state, Branch::Minus)?;
    let ratio_root = |k: Rational| -> Result<Rational, DeriveError> {
        let e = var("r") + &var("s") - &(var("r") - &var("s")).scale(&k);
        let sol = solve_polynomial(&[e.substitute("s", &Poly::one())], &["r"])?;
        sol[0].as_constant().ok_or_else(|| DeriveError::Inconsistent("ratio root".into()))
    };
    let root = ratio_root(rat(49, 1))?;
    let rejected = ratio_root(rat(1, 49))?;
    let eq = state.apply(&var("r")) - &state.apply(&var("s")).scale(&root);
    let (cb, rest) = linear_parts(&eq, &["b"]);
    let b = (-rest).exact_divide(&cb[0])?.ok_or_else(|| DeriveError::Inconsistent("b is not polynomial".into()))?;
    state.substitute("b", b.clone())?;
    Ok(RatioOutcome { residue_plus: plus, residue_minus: minus, r_over_s: root, rejected_r_over_s: rejected, b })
}

/// The fourth intersection of `u = 0` with the curve.
#[derive(Clone, Debug)]
pub struct SecondPoint {
    pub x: Poly,
    pub y: Poly,
    /// `Y(x)` with `u = s (y - Y(x))`.
    pub y_of_x: UPoly<Poly>,
}

pub fn locate_a2(state: &AnsatzState) -> Result<SecondPoint, DeriveError> {
    let (pp, s) = u_parts(state);
    let mut ys = Vec::new();
    for c in pp.coeffs() {
        ys.push((-c.clone()).exact_divide(&s)?.ok_or_else(|| DeriveError::Inconsistent("u is not a multiple of s".into()))?);
    }
    let y_of_x = UPoly::new(ys);
    let n = y_of_x.clone() * &y_of_x - &state.f;
    if (0..3).any(|k| !n.coeff(k).is_zero()) || n.degree() != Some(4) {
        return Err(DeriveError::Inconsistent("u does not osculate to order three at A1".into()));
    }
    let x = (-n.coeff(3)).exact_divide(&n.coeff(4))?.ok_or_else(|| DeriveError::Inconsistent("x(A2) is not polynomial".into()))?;
    let y = y_of_x.eval(&x);
    Ok(SecondPoint { x, y, y_of_x })
}

pub const R_VARS: [&str; 4] = ["r0", "r1", "r2", "r3"];
pub const Q_VARS: [&str; 6] = ["q0", "q1", "q2", "q3", "q4", "q5"];

pub fn r_poly() -> UPoly<Poly> {
    UPoly::new(R_VARS.iter().map(|v| var(v)).collect())
}

pub fn q_poly(state: &AnsatzState) -> UPoly<Poly> {
    UPoly::new(Q_VARS.iter().map(|v| state.apply(&var(v))).collect())
}

/// `Q + yR` at `C2` (the place at infinity with `y ~ -x^2`).
pub fn e_at_c2(state: &AnsatzState) -> Result<LaurentSeries<Poly>, DeriveError> {
    let e = expand_y(&state.f, &LocalPlace::Infinite(Branch::Minus), 10)?;
    Ok(series_of_poly(&q_poly(state), &e.x) + &(e.y * &series_of_poly(&r_poly(), &e.x)))
}

/// Forces the `x^5 .. x^0` coefficients of `Q + yR` at `C2` to vanish.
pub fn solve_qr_at_c2(state: &mut AnsatzState) -> Result<Vec<Poly>, DeriveError> {
    state.introduce(&Q_VARS);
    state.introduce(&R_VARS);
    let e = e_at_c2(state)?;
    let eqs: Vec<Poly> = (-5..=0).rev().map(|k| e.coefficient_of(k)).collect::<Result<_, _>>()?;
    let sol = solve_polynomial(&eqs, &Q_VARS)?;
    for (n, v) in Q_VARS.iter().zip(&sol) {
        state.substitute(n, v.clone())?;
    }
    Ok(sol)
}

/// Valuation of `Q + yR` at `C2` is at least one.
pub fn c2_order_ok(state: &AnsatzState) -> Result<bool, DeriveError> {
    let e = e_at_c2(state)?;
    Ok((-5..=0).all(|k| e.coefficient_of(k).map(|c| c.is_zero()).unwrap_or(false)))
}

/// The homogeneous `4 x 4` system in `r0..r3` with the row scalings applied.
#[derive(Clone, Debug)]
pub struct LinearSystems {
    pub rows: Vec<Vec<Poly>>,
    /// Coefficients of `x^2` of `Q + yR` at `A1`.
    pub k1_row: Vec<Poly>,
    /// `8 y2^3` times the `(x - x2)^2` coefficient at `A2`.
    pub k2_row: Vec<Poly>,
    pub second: SecondPoint,
    pub d: Poly,
    pub l: Poly,
}

fn lin_row(e: &Poly) -> Vec<Poly> {
    let (c, rest) = linear_parts(e, &R_VARS);
    debug_assert!(rest.is_zero());
    c
}

pub fn linear_systems(state: &AnsatzState) -> Result<LinearSystems, DeriveError> {
    let second = locate_a2(state)?;
    let q = q_poly(state);
    let r = r_poly();
    let y = y_at_a1(&state.f, 3)?;
    let x = LaurentSeries::new("t", 1, vec![Poly::one()], EXACT);
    let e1 = series_of_poly(&q, &x) + &(y * &series_of_poly(&r, &x));
    let a1: Vec<Poly> = (0..3).map(|k| e1.coefficient_of(k)).collect::<Result<_, _>>()?;

    let x2 = &second.x;
    let y2 = &second.y;
    let d = y2.scale(&rat(-2401, 1));
    let l = var("a").scale(&rat(25, 1)) + &var("c").scale(&rat(24, 1));
    let ft = state.f.taylor_shift(x2);
    let qt = q.taylor_shift(x2);
    let rt = r.taylor_shift(x2);
    let (f1, f2) = (ft.coeff(1), ft.coeff(2));
    let value = qt.coeff(0) + &(y2.clone() * &rt.coeff(0));
    // D y'(x2) = -2401 f'(x2) / 2
    let dy1 = f1.scale(&rat(-2401, 2));
    let slope = d.clone() * &qt.coeff(1) + &(d.clone() * y2 * &rt.coeff(1)) + &(dy1 * &rt.coeff(0));
    let y2sq = y2.clone() * y2;
    let k2 = (y2sq.clone() * y2).scale(&rat(8, 1)) * &qt.coeff(2)
        + &((y2sq.clone() * &y2sq).scale(&rat(8, 1)) * &rt.coeff(2))
        + &((y2sq.clone() * &f1).scale(&rat(4, 1)) * &rt.coeff(1))
        + &(((y2sq.clone() * &f2).scale(&rat(4, 1)) - &(f1.clone() * &f1)) * &rt.coeff(0));

    let s1 = rat(2304, 1);
    let s2 = rat(2304 * 282_475_249, 1);
    let rows = vec![
        lin_row(&a1[0].scale(&s1)),
        lin_row(&a1[1].scale(&s1)),
        lin_row(&value.scale(&s2)),
        lin_row(&(slope * &d).scale(&s2)),
    ];
    Ok(LinearSystems { rows, k1_row: lin_row(&a1[2]), k2_row: lin_row(&k2), second, d, l })
}

pub fn determinant(sys: &LinearSystems) -> Result<Poly, DeriveError> {
    Ok(det_fraction_free(&sys.rows)?)
}

/// Splits `det = k L^4 D F` and returns `(k, F)` with `F` primitive.
pub fn split_determinant(det: &Poly, sys: &LinearSystems) -> Result<(Rational, Poly), DeriveError> {
    let rest = det.exact_divide(&sys.l.pow(4))?.ok_or_else(|| DeriveError::Inconsistent("(25a + 24c)^4 does not divide the determinant".into()))?;
    let rest = rest.exact_divide(&sys.d)?.ok_or_else(|| DeriveError::Inconsistent("D does not divide the determinant".into()))?;
    let (k, prim) = rest.primitive_integer();
    Ok((Rational::one() / &k, prim))
}

/// `k1` and `k2` as quotients over the common Cramer denominator (with `r3 = 1`).
#[derive(Clone, Debug)]
pub struct ResidueData {
    /// Cramer numerators for `r0, r1, r2`, then the denominator.
    pub nums: Vec<Poly>,
    pub den: Poly,
    /// `k1 = k1_num / den`.
    pub k1_num: Poly,
    /// `k2 = k2_num / (8 y2^3 den)`.
    pub k2_num: Poly,
    /// Numerator of `9 k2 y2^2 - 25 k1` in lowest terms, primitive.
    pub numerator: Poly,
}

fn combine(row: &[Poly], nums: &[Poly], den: &Poly) -> Poly {
    let mut acc = row[3].clone() * den;
    for (c, n) in row.iter().zip(nums) {
        acc = acc + &(c.clone() * n);
    }
    acc
}

pub fn residue_equation(sys: &LinearSystems) -> Result<ResidueData, DeriveError> {
    let m: Vec<Vec<Poly>> = sys.rows[..3].iter().map(|r| r[..3].to_vec()).collect();
    let rhs: Vec<Poly> = sys.rows[..3].iter().map(|r| -r[3].clone()).collect();
    let (nums, den) = cramer(&m, &rhs)?;
    let k1_num = combine(&sys.k1_row, &nums, &den);
    let k2_num = combine(&sys.k2_row, &nums, &den);
    // 9 k2 y2^2 - 25 k1 = (9 k2_num - 200 y2 k1_num) / (8 y2 den)
    let raw = k2_num.scale(&rat(9, 1)) - &(sys.second.y.clone() * &k1_num).scale(&rat(200, 1));
    let mut n = raw;
    let mut den_left = den.clone() * &sys.d;
    loop {
        let g = poly_gcd(&n, &den_left);
        if g.is_constant() {
            break;
        }
        n = n.exact_divide(&g)?.ok_or(DeriveError::Inconsistent("gcd does not divide".into()))?;
        den_left = den_left.exact_divide(&g)?.ok_or(DeriveError::Inconsistent("gcd does not divide".into()))?;
    }
    let numerator = n.primitive_integer().1;
    Ok(ResidueData { nums, den, k1_num, k2_num, numerator })
}
