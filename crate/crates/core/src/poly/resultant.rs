use crate::scalars::{Field, Ring};

use super::{MultiPoly, PolyError, UPoly};

/// Resultant of two univariate polynomials over an integral domain (subresultant sequence).
pub fn resultant_upoly<R: Ring>(a: &UPoly<R>, b: &UPoly<R>) -> Result<R, PolyError> {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return Ok(R::zero());
    };
    if da == 0 {
        return Ok(a.lc().pow(db as u32));
    }
    if db == 0 {
        return Ok(b.lc().pow(da as u32));
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut sign_neg = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = true;
        }
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let (dega, degb) = (a.deg_i(), b.deg_i());
        let delta = (dega - degb) as u32;
        if dega % 2 == 1 && degb % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = a.pseudo_rem(&b)?;
        a = b;
        let div = g.clone() * &h.pow(delta);
        b = r.exact_div_scalar(&div)?;
        g = a.lc();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).try_div(&h.pow(delta - 1)).ok_or(PolyError::NotDivisible)?
        };
        if b.is_zero() {
            return Ok(R::zero());
        }
        if b.degree() == Some(0) {
            break;
        }
    }
    let dega = a.deg_i() as u32;
    let res = if dega == 0 {
        h
    } else {
        b.lc().pow(dega).try_div(&h.pow(dega - 1)).ok_or(PolyError::NotDivisible)?
    };
    Ok(if sign_neg { -res } else { res })
}

/// Resultant eliminating `var`; both inputs need positive degree in `var`.
pub fn resultant<K: Field>(p: &MultiPoly<K>, q: &MultiPoly<K>, var: &str) -> Result<MultiPoly<K>, PolyError> {
    for r in [p, q] {
        if r.degree_in(var).unwrap_or(0) == 0 {
            return Err(PolyError::ZeroDegree(var.to_string()));
        }
    }
    let rest: Vec<String> = {
        let mut v: Vec<String> = p.used_vars();
        for w in q.used_vars() {
            if !v.contains(&w) {
                v.push(w);
            }
        }
        v.retain(|w| w != var);
        v
    };
    let strip = |c: &MultiPoly<K>| c.with_vars(&rest).expect("coefficients avoid the eliminated variable");
    let a = UPoly::new(p.coefficients_in(var).iter().map(strip).collect());
    let b = UPoly::new(q.coefficients_in(var).iter().map(strip).collect());
    resultant_upoly(&a, &b)
}

/// Resultant via the Sylvester determinant; a slow oracle used to cross-check.
pub fn sylvester_resultant<R: Ring>(a: &UPoly<R>, b: &UPoly<R>) -> Result<R, PolyError> {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        return Ok(R::zero());
    };
    let size = m + n;
    if size == 0 {
        return Ok(R::one());
    }
    let mut mat = vec![vec![R::zero(); size]; size];
    for i in 0..n {
        for k in 0..=m {
            mat[i][i + k] = a.coeff(m - k);
        }
    }
    for i in 0..m {
        for k in 0..=n {
            mat[n + i][i + k] = b.coeff(n - k);
        }
    }
    super::det_fraction_free(&mat)
}
