use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::scalars::{Rational, Ring};

use super::PolyError;
use super::upoly::UPoly;

/// Exponent vector ordered graded-lexicographically (total degree first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over a coefficient ring with named variables.
///
/// Operands with different variable lists are aligned on the union of their
/// lists, keeping the left operand's order first.
#[derive(Clone, Debug)]
pub struct MultiPoly<R> {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, R>,
}

fn empty_vars() -> Arc<[String]> {
    Arc::from(Vec::<String>::new())
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero_in(vars: &[&str]) -> Self {
        MultiPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn constant(c: R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(vec![]), c);
        }
        MultiPoly { vars: empty_vars(), terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), R::one());
        MultiPoly { vars: Arc::from(vec![name.to_string()]), terms }
    }

    /// Builds `c * prod vars[i]^exps[i]`.
    pub fn monomial(vars: &[String], exps: Vec<u32>, c: R) -> Self {
        assert_eq!(vars.len(), exps.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(exps), c);
        }
        MultiPoly { vars: Arc::from(vars.to_vec()), terms }
    }

    pub fn from_terms(vars: &[String], terms: impl IntoIterator<Item = (Vec<u32>, R)>) -> Self {
        let mut p = MultiPoly { vars: Arc::from(vars.to_vec()), terms: BTreeMap::new() };
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len());
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = v.clone() + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> R {
        self.terms
            .iter()
            .find(|(m, _)| m.degree() == 0)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(R::zero)
    }

    pub fn as_constant(&self) -> Option<R> {
        if self.is_constant() { Some(self.constant_term()) } else { None }
    }

    /// Re-expresses the polynomial over a variable list containing all of its variables.
    pub fn with_vars(&self, vars: &[String]) -> Result<Self, PolyError> {
        if *self.vars == *vars {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).ok_or_else(|| PolyError::UnknownVariable(v.clone())))
            .collect::<Result<_, _>>()
            .or_else(|e| {
                // Variables absent from the target list are allowed when unused.
                let used = self.used_vars();
                if used.iter().all(|u| vars.contains(u)) {
                    Ok(self.vars.iter().map(|v| vars.iter().position(|w| w == v).unwrap_or(usize::MAX)).collect())
                } else {
                    Err(e)
                }
            })?;
        let mut out = MultiPoly { vars: Arc::from(vars.to_vec()), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let mut e = vec![0u32; vars.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    e[map[i]] = k;
                }
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Variables that actually occur with positive degree.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|m| m.0[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    pub fn drop_unused_vars(&self) -> Self {
        self.with_vars(&self.used_vars()).expect("subset of own variables")
    }

    fn union_vars(&self, other: &Self) -> Arc<[String]> {
        if Arc::ptr_eq(&self.vars, &other.vars) || *self.vars == *other.vars {
            return self.vars.clone();
        }
        if self.terms.is_empty() && !self.vars.iter().any(|v| !other.vars.contains(v)) {
            return other.vars.clone();
        }
        let mut v: Vec<String> = self.vars.to_vec();
        for w in other.vars.iter() {
            if !v.contains(w) {
                v.push(w.clone());
            }
        }
        Arc::from(v)
    }

    fn aligned(&self, vars: &Arc<[String]>) -> Self {
        if Arc::ptr_eq(&self.vars, vars) || *self.vars == **vars {
            MultiPoly { vars: vars.clone(), terms: self.terms.clone() }
        } else {
            let mut p = self.with_vars(vars).expect("union contains all variables");
            p.vars = vars.clone();
            p
        }
    }

    fn into_aligned(self, vars: &Arc<[String]>) -> Self {
        if Arc::ptr_eq(&self.vars, vars) || *self.vars == **vars {
            MultiPoly { vars: vars.clone(), terms: self.terms }
        } else {
            self.aligned(vars)
        }
    }

    fn binary<F: Fn(&mut Self, &Self)>(self, other: &Self, f: F) -> Self {
        let vars = self.union_vars(other);
        let mut a = self.into_aligned(&vars);
        let b = if *other.vars == *vars {
            std::borrow::Cow::Borrowed(other)
        } else {
            std::borrow::Cow::Owned(other.aligned(&vars))
        };
        f(&mut a, &b);
        a
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        let mut terms = BTreeMap::new();
        for (m, v) in &self.terms {
            let p = v.clone() * c;
            if !p.is_zero() {
                terms.insert(m.clone(), p);
            }
        }
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MultiPoly<S> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                terms.insert(m.clone(), v);
            }
        }
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn degree_in(&self, var: &str) -> Option<u32> {
        let i = self.var_index(var);
        self.terms.keys().map(|m| i.map_or(0, |i| m.0[i])).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &R)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> R {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(R::zero)
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, var: &str, k: u32) -> Self {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        match self.var_index(var) {
            None => {
                if k == 0 {
                    out.terms = self.terms.clone();
                }
            }
            Some(i) => {
                for (m, c) in &self.terms {
                    if m.0[i] == k {
                        let mut e = m.clone();
                        e.0[i] = 0;
                        out.terms.insert(e, c.clone());
                    }
                }
            }
        }
        out
    }

    /// Dense coefficient list in `var`, lowest power first.
    pub fn coefficients_in(&self, var: &str) -> Vec<Self> {
        let d = self.degree_in(var).unwrap_or(0);
        let mut out = vec![MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() }; d as usize + 1];
        match self.var_index(var) {
            None => out[0].terms = self.terms.clone(),
            Some(i) => {
                for (m, c) in &self.terms {
                    let mut e = m.clone();
                    let k = e.0[i] as usize;
                    e.0[i] = 0;
                    out[k].terms.insert(e, c.clone());
                }
            }
        }
        out
    }

    /// View as a univariate polynomial in `var` with polynomial coefficients.
    pub fn to_upoly(&self, var: &str) -> UPoly<Self> {
        UPoly::new(self.coefficients_in(var))
    }

    pub fn from_upoly(u: &UPoly<Self>, var: &str) -> Self {
        let x = MultiPoly::var(var);
        let mut acc = MultiPoly::zero();
        for c in u.coeffs().iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    /// Dense coefficients of a polynomial that involves at most `var`.
    pub fn to_dense(&self, var: &str) -> Result<UPoly<R>, PolyError> {
        for u in self.used_vars() {
            if u != var {
                return Err(PolyError::NotUnivariate(u));
            }
        }
        let cs = self.coefficients_in(var);
        Ok(UPoly::new(cs.iter().map(|c| c.constant_term()).collect()))
    }

    pub fn from_dense(u: &UPoly<R>, var: &str) -> Self {
        let vars = vec![var.to_string()];
        MultiPoly::from_terms(&vars, u.coeffs().iter().enumerate().map(|(k, c)| (vec![k as u32], c.clone())))
    }

    pub fn derivative(&self, var: &str) -> Self {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        if let Some(i) = self.var_index(var) {
            for (m, c) in &self.terms {
                let k = m.0[i];
                if k > 0 {
                    let mut e = m.clone();
                    e.0[i] = k - 1;
                    out.add_term(e, c.clone() * &R::from_i64(k as i64));
                }
            }
        }
        out
    }

    /// Substitutes a polynomial for one variable.
    pub fn substitute(&self, var: &str, value: &Self) -> Self {
        if self.var_index(var).is_none() {
            return self.clone();
        }
        let cs = self.coefficients_in(var);
        let mut acc = MultiPoly::zero();
        for c in cs.iter().rev() {
            acc = acc * value + c;
        }
        acc
    }

    /// Evaluates every variable through `coeff` and `values` (given in `self.vars()` order).
    pub fn eval_map<T: Ring>(&self, coeff: impl Fn(&R) -> T, values: &[T]) -> T {
        assert_eq!(values.len(), self.vars.len());
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = coeff(c);
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    t = t * &values[i].pow(k);
                }
            }
            acc = acc + &t;
        }
        acc
    }

    /// Evaluates with variables bound by name; unbound variables are an error.
    pub fn eval_named<T: Ring>(&self, coeff: impl Fn(&R) -> T, binding: &[(&str, T)]) -> Result<T, PolyError> {
        let values = self
            .vars
            .iter()
            .map(|v| {
                binding
                    .iter()
                    .find(|(n, _)| *n == v.as_str())
                    .map(|(_, t)| t.clone())
                    .or_else(|| if self.used_vars().contains(v) { None } else { Some(T::zero()) })
                    .ok_or_else(|| PolyError::UnknownVariable(v.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.eval_map(coeff, &values))
    }

    /// Exact quotient `self / q`, or `None` when `q` does not divide `self`.
    pub fn exact_divide(&self, q: &Self) -> Result<Option<Self>, PolyError> {
        if q.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let vars = self.union_vars(q);
        let mut rem = self.aligned(&vars);
        let q = q.aligned(&vars);
        let (lm, lc) = q.leading_term().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero divisor");
        let mut quot = MultiPoly { vars: vars.clone(), terms: BTreeMap::new() };
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&m) {
                return Ok(None);
            }
            let Some(k) = c.try_div(&lc) else { return Ok(None) };
            let tm = m.div(&lm);
            for (qm, qc) in &q.terms {
                rem.add_term(qm.mul(&tm), -(qc.clone() * &k));
            }
            quot.terms.insert(tm, k);
        }
        Ok(Some(quot))
    }

    /// Multiplicity of `q` as a factor of `self` (with `q` nonconstant).
    pub fn multiplicity_of(&self, q: &Self) -> Result<(u32, Self), PolyError> {
        let mut k = 0;
        let mut cur = self.clone();
        if q.is_constant() || self.is_zero() {
            return Ok((0, cur));
        }
        while let Some(next) = cur.exact_divide(q)? {
            cur = next;
            k += 1;
        }
        Ok((k, cur))
    }
}

impl MultiPoly<Rational> {
    /// Scales to integer coefficients with content one and positive leading coefficient.
    pub fn primitive_integer(&self) -> (Rational, Self) {
        if self.is_zero() {
            return (<Rational as Ring>::one(), self.clone());
        }
        let l = crate::scalars::denominator_lcm(self.terms.values());
        let scaled = self.scale(&Rational::from_integer(l.clone()));
        let g = crate::scalars::numerator_gcd(scaled.terms.values());
        let mut k = Rational::new(l, g);
        if self.leading_coeff().is_negative_display() {
            k = -k;
        }
        (k.clone(), self.scale(&k))
    }

    /// Equality up to a nonzero rational factor.
    pub fn proportional_to(&self, other: &Self) -> bool {
        self.primitive_integer().1 == other.primitive_integer().1
    }
}

impl<R: Ring> PartialEq for MultiPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        if *self.vars == *other.vars {
            return self.terms == other.terms;
        }
        let vars = self.union_vars(other);
        self.aligned(&vars).terms == other.aligned(&vars).terms
    }
}

fn fmt_monomial(vars: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &k) in vars.iter().zip(&m.0) {
        match k {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{k}")),
        }
    }
    parts.join("*")
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative_display();
            let c = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = fmt_monomial(&self.vars, m);
            let ctext = if c.needs_parens() { format!("({c})") } else { c.to_string() };
            if mono.is_empty() {
                write!(f, "{ctext}")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{ctext}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> Add<&MultiPoly<R>> for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn add(self, o: &MultiPoly<R>) -> MultiPoly<R> {
        self.binary(o, |a, b| {
            for (m, c) in &b.terms {
                a.add_term(m.clone(), c.clone());
            }
        })
    }
}

impl<R: Ring> Add for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn add(self, o: MultiPoly<R>) -> MultiPoly<R> {
        self + &o
    }
}

impl<R: Ring> Sub<&MultiPoly<R>> for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn sub(self, o: &MultiPoly<R>) -> MultiPoly<R> {
        self.binary(o, |a, b| {
            for (m, c) in &b.terms {
                a.add_term(m.clone(), -c.clone());
            }
        })
    }
}

impl<R: Ring> Sub for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn sub(self, o: MultiPoly<R>) -> MultiPoly<R> {
        self - &o
    }
}

impl<R: Ring> Mul<&MultiPoly<R>> for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn mul(self, o: &MultiPoly<R>) -> MultiPoly<R> {
        let vars = self.union_vars(o);
        let a = self.aligned(&vars);
        let b = o.aligned(&vars);
        let mut out = MultiPoly { vars, terms: BTreeMap::new() };
        if let Some(c) = a.as_constant_fast() {
            return b.scale(&c).with_arc(out.vars);
        }
        if let Some(c) = b.as_constant_fast() {
            return a.scale(&c).with_arc(out.vars);
        }
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb);
            }
        }
        out
    }
}

impl<R: Ring> MultiPoly<R> {
    fn as_constant_fast(&self) -> Option<R> {
        if self.terms.len() <= 1 { self.as_constant() } else { None }
    }

    fn with_arc(mut self, vars: Arc<[String]>) -> Self {
        self.vars = vars;
        self
    }
}

impl<R: Ring> Mul for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn mul(self, o: MultiPoly<R>) -> MultiPoly<R> {
        self * &o
    }
}

impl<R: Ring> Neg for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn neg(self) -> MultiPoly<R> {
        let terms = self.terms.into_iter().map(|(m, c)| (m, -c)).collect();
        MultiPoly { vars: self.vars, terms }
    }
}

impl<R: Ring> Ring for MultiPoly<R> {
    fn zero() -> Self {
        MultiPoly { vars: empty_vars(), terms: BTreeMap::new() }
    }
    fn one() -> Self {
        MultiPoly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.as_constant().is_some_and(|c| c.is_one())
    }
    fn from_rational(r: &Rational) -> Self {
        MultiPoly::constant(R::from_rational(r))
    }
    fn try_inv(&self) -> Option<Self> {
        self.as_constant()?.try_inv().map(MultiPoly::constant)
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        self.exact_divide(other).ok().flatten()
    }
    fn try_sqrt(&self) -> Option<Self> {
        if self.is_constant() {
            return self.constant_term().try_sqrt().map(MultiPoly::constant);
        }
        None
    }
    fn is_negative_display(&self) -> bool {
        self.leading_coeff().is_negative_display()
    }
    fn needs_parens(&self) -> bool {
        self.terms.len() > 1 || self.terms.values().any(|c| c.needs_parens())
    }
}

