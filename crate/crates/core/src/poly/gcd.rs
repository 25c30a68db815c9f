use crate::scalars::{Field, Ring};

use super::{MultiPoly, PolyError, UPoly};

/// Makes the graded-lex leading coefficient one.
pub fn normalize<K: Field>(p: &MultiPoly<K>) -> MultiPoly<K> {
    if p.is_zero() {
        return p.clone();
    }
    p.scale(&p.leading_coeff().inv())
}

/// Greatest common divisor, normalized to leading coefficient one.
///
/// Recursive: content and primitive part in the first variable that occurs,
/// with the primitive parts combined by a subresultant remainder sequence.
pub fn poly_gcd<K: Field>(p: &MultiPoly<K>, q: &MultiPoly<K>) -> MultiPoly<K> {
    normalize(&gcd_rec(p, q))
}

fn gcd_rec<K: Field>(p: &MultiPoly<K>, q: &MultiPoly<K>) -> MultiPoly<K> {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one();
    }
    if coprime_by_images(p, q) {
        return MultiPoly::one();
    }
    let (small, big) = if p.num_terms() <= q.num_terms() { (p, q) } else { (q, p) };
    if let Ok(Some(_)) = big.exact_divide(small) {
        return small.clone();
    }
    let pv = p.used_vars();
    let qv = q.used_vars();
    let var = pv.iter().find(|v| qv.contains(v)).or_else(|| pv.first()).expect("nonconstant").clone();
    if let (Some(a), Some(b)) = (univariate_view(p, &var), univariate_view(q, &var)) {
        let g = a.gcd(&b);
        return MultiPoly::from_dense(&g, &var);
    }
    let a = p.to_upoly(&var);
    let b = q.to_upoly(&var);
    let ca = content(&a);
    let cb = content(&b);
    let gc = gcd_rec(&ca, &cb);
    let pa = a.exact_div_scalar(&ca).expect("content divides");
    let pb = b.exact_div_scalar(&cb).expect("content divides");
    let g = subresultant_gcd(&pa, &pb);
    let g = if g.degree() == Some(0) {
        UPoly::constant(MultiPoly::one())
    } else {
        let cg = content(&g);
        g.exact_div_scalar(&cg).expect("content divides")
    };
    MultiPoly::from_upoly(&g, &var) * &gc
}

/// Image in one variable with the others set to small integers.
fn image<K: Field>(p: &MultiPoly<K>, keep: &str, point: &[(String, K)]) -> UPoly<K> {
    let vars = p.vars();
    let mut dense: Vec<K> = Vec::new();
    for (m, c) in p.terms() {
        let mut v = c.clone();
        let mut k = 0usize;
        for (name, &e) in vars.iter().zip(&m.0) {
            if e == 0 {
                continue;
            }
            if name == keep {
                k = e as usize;
            } else {
                let x = &point.iter().find(|(n, _)| n == name).expect("every variable has a value").1;
                v = v * &x.pow(e);
            }
        }
        if dense.len() <= k {
            dense.resize(k + 1, K::zero());
        }
        dense[k] = dense[k].clone() + &v;
    }
    UPoly::new(dense)
}

/// Proves `gcd(p, q) = 1` when, for every variable, images under an evaluation that keeps
/// both degrees are coprime. Returns false when the test is inconclusive.
fn coprime_by_images<K: Field>(p: &MultiPoly<K>, q: &MultiPoly<K>) -> bool {
    let mut names = p.used_vars();
    for v in q.used_vars() {
        if !names.contains(&v) {
            names.push(v);
        }
    }
    'var: for keep in &names {
        let (dp, dq) = (p.degree_in(keep).unwrap_or(0), q.degree_in(keep).unwrap_or(0));
        if dp == 0 || dq == 0 {
            continue;
        }
        for attempt in 0..3i64 {
            let point: Vec<(String, K)> = names
                .iter()
                .enumerate()
                .filter(|(_, n)| *n != keep)
                .map(|(i, n)| (n.clone(), K::from_i64(7 + 13 * i as i64 + 31 * attempt + (i as i64 * attempt) % 5)))
                .collect();
            let (ip, iq) = (image(p, keep, &point), image(q, keep, &point));
            if ip.deg_i() != dp as i64 || iq.deg_i() != dq as i64 {
                continue;
            }
            if ip.gcd(&iq).degree() == Some(0) {
                continue 'var;
            }
            return false;
        }
        return false;
    }
    true
}

fn univariate_view<K: Field>(p: &MultiPoly<K>, var: &str) -> Option<UPoly<K>> {
    p.to_dense(var).ok()
}

/// Gcd of all coefficients of a univariate polynomial with polynomial coefficients.
pub fn content<K: Field>(a: &UPoly<MultiPoly<K>>) -> MultiPoly<K> {
    let mut g = MultiPoly::zero();
    for c in a.coeffs() {
        g = gcd_rec(&g, c);
        if g.is_constant() && !g.is_zero() {
            return MultiPoly::one();
        }
    }
    normalize(&g)
}

/// Last nonzero remainder of the subresultant sequence of primitive inputs.
fn subresultant_gcd<R: Ring>(a: &UPoly<R>, b: &UPoly<R>) -> UPoly<R> {
    let (mut a, mut b) = if a.deg_i() >= b.deg_i() { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    if b.is_zero() {
        return a;
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let delta = (a.deg_i() - b.deg_i()) as u32;
        let r = a.pseudo_rem(&b).expect("nonzero divisor");
        if r.is_zero() {
            return b;
        }
        if r.degree() == Some(0) {
            return UPoly::constant(R::one());
        }
        a = b;
        let div = g.clone() * &h.pow(delta);
        b = r.exact_div_scalar(&div).expect("subresultant division is exact");
        g = a.lc();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).try_div(&h.pow(delta - 1)).expect("subresultant division is exact")
        };
    }
}

/// Square-free decomposition of a univariate polynomial: `lc * prod parts[i]^(i+1)`.
pub fn squarefree_decomposition<K: Field>(
    p: &MultiPoly<K>,
    var: &str,
) -> Result<(K, Vec<MultiPoly<K>>), PolyError> {
    let u = p.to_dense(var)?;
    let (lc, parts) = u.squarefree_decomposition();
    Ok((lc, parts.iter().map(|f| MultiPoly::from_dense(f, var)).collect()))
}

/// Pairwise coprime monic polynomials such that every input is, up to a unit,
/// a product of powers of members.
pub fn gcd_free_basis<K: Field>(inputs: &[UPoly<K>]) -> Vec<UPoly<K>> {
    let mut basis: Vec<UPoly<K>> = Vec::new();
    let mut work: Vec<UPoly<K>> = Vec::new();
    for p in inputs {
        if p.degree().unwrap_or(0) > 0 {
            work.extend(p.squarefree_decomposition().1);
        }
    }
    while let Some(p) = work.pop() {
        if p.degree().unwrap_or(0) == 0 {
            continue;
        }
        let hit = basis.iter().enumerate().find_map(|(i, b)| {
            let g = b.gcd(&p);
            (g.degree().unwrap_or(0) > 0).then_some((i, g))
        });
        match hit {
            Some((i, g)) => {
                let b = basis.remove(i);
                let rest = b.exact_div(&g).expect("gcd divides");
                basis.push(g.clone());
                if rest.degree().unwrap_or(0) > 0 {
                    basis.push(rest.monic());
                }
                work.push(p.exact_div(&g).expect("gcd divides"));
            }
            None => basis.push(p.monic()),
        }
    }
    basis.sort_by(|a, b| a.deg_i().cmp(&b.deg_i()).then_with(|| a.to_string().cmp(&b.to_string())));
    basis
}

/// Exponents of each basis element in `p` (which must factor over the basis up to a unit).
pub fn factor_over_basis<K: Field>(p: &UPoly<K>, basis: &[UPoly<K>]) -> Option<Vec<u32>> {
    let mut rest = p.clone();
    let mut out = Vec::with_capacity(basis.len());
    for b in basis {
        let mut k = 0;
        while let Some(q) = rest.exact_div(b) {
            rest = q;
            k += 1;
        }
        out.push(k);
    }
    if rest.degree() == Some(0) { Some(out) } else { None }
}
