use std::fmt;
use std::sync::Arc;

use crate::numeric::{Embed, aberth_roots, embed_poly};
use crate::poly::{UPoly, gcd_free_basis};
use crate::scalars::{BigFloat, Complex, Field, Ring};
use crate::series::{Branch, LocalPlace};

use super::{CurveError, CurveModel, FunctionFieldElement};

/// A Galois-stable set of places, described without leaving the base field.
#[derive(Clone, Debug, PartialEq)]
pub enum Cluster<K> {
    /// Both places `(θ, ±sqrt f(θ))` over every root `θ` of `g`.
    Fiber(UPoly<K>),
    /// The places `(θ, Y(θ))` over the roots of `g`.
    Branch { g: UPoly<K>, y: UPoly<K> },
    /// The places `(θ, 0)` for roots `θ` of `g`, where `g | f`.
    Ramified(UPoly<K>),
    Infinite(Branch),
    /// Both places over infinity of a quartic whose leading coefficient is not a square.
    InfinitePair,
    InfiniteCubic,
}

impl<K: Field> Cluster<K> {
    /// Number of geometric places in the cluster.
    pub fn degree(&self) -> usize {
        match self {
            Cluster::Fiber(g) => 2 * g.deg_i() as usize,
            Cluster::Branch { g, .. } | Cluster::Ramified(g) => g.deg_i() as usize,
            Cluster::Infinite(_) | Cluster::InfiniteCubic => 1,
            Cluster::InfinitePair => 2,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Cluster::Infinite(_) | Cluster::InfinitePair | Cluster::InfiniteCubic)
    }

    /// The x-polynomial of a finite cluster.
    pub fn x_poly(&self) -> Option<&UPoly<K>> {
        match self {
            Cluster::Fiber(g) | Cluster::Ramified(g) | Cluster::Branch { g, .. } => Some(g),
            _ => None,
        }
    }

    pub fn contains(&self, place: &LocalPlace<K>) -> bool {
        match (self, place) {
            (Cluster::Fiber(g), LocalPlace::Finite { x0, .. }) => g.eval(x0).is_zero(),
            (Cluster::Branch { g, y }, LocalPlace::Finite { x0, y0 }) => g.eval(x0).is_zero() && y.eval(x0) == *y0,
            (Cluster::Ramified(g), LocalPlace::Ramified { x0 }) => g.eval(x0).is_zero(),
            (Cluster::Infinite(b), LocalPlace::Infinite(c)) => b == c,
            (Cluster::InfinitePair, LocalPlace::Infinite(_)) => true,
            (Cluster::InfiniteCubic, LocalPlace::InfiniteCubic) => true,
            _ => false,
        }
    }

    fn sort_key(&self) -> (u8, i64, String) {
        let kind = match self {
            Cluster::Ramified(_) => 0,
            Cluster::Fiber(_) => 1,
            Cluster::Branch { .. } => 2,
            Cluster::Infinite(_) => 3,
            Cluster::InfinitePair => 4,
            Cluster::InfiniteCubic => 5,
        };
        let deg = self.x_poly().map_or(0, |g| g.deg_i());
        (kind, deg, self.to_string())
    }
}

impl<K: Field> fmt::Display for Cluster<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cluster::Fiber(g) => write!(f, "[{g} = 0]"),
            Cluster::Branch { g, y } => write!(f, "[{g} = 0, y = {y}]"),
            Cluster::Ramified(g) => write!(f, "[{g} = 0, y = 0]"),
            Cluster::Infinite(Branch::Plus) => write!(f, "[inf+]"),
            Cluster::Infinite(Branch::Minus) => write!(f, "[inf-]"),
            Cluster::InfinitePair => write!(f, "[inf+, inf-]"),
            Cluster::InfiniteCubic => write!(f, "[inf]"),
        }
    }
}

/// A divisor as integer combinations of clusters.
#[derive(Clone, Debug)]
pub struct Divisor<K: Field> {
    model: Arc<CurveModel<K>>,
    entries: Vec<(Cluster<K>, i64)>,
}

impl<K: Field> Divisor<K> {
    pub fn entries(&self) -> &[(Cluster<K>, i64)] {
        &self.entries
    }

    pub fn model(&self) -> &Arc<CurveModel<K>> {
        &self.model
    }

    pub fn degree(&self) -> i64 {
        self.entries.iter().map(|(c, m)| c.degree() as i64 * m).sum()
    }

    pub fn zeros(&self) -> impl Iterator<Item = &(Cluster<K>, i64)> {
        self.entries.iter().filter(|(_, m)| *m > 0)
    }

    pub fn poles(&self) -> impl Iterator<Item = &(Cluster<K>, i64)> {
        self.entries.iter().filter(|(_, m)| *m < 0)
    }

    /// Multiplicity at a base-field place.
    pub fn multiplicity_at(&self, place: &LocalPlace<K>) -> i64 {
        self.entries.iter().filter(|(c, _)| c.contains(place)).map(|(_, m)| m).sum()
    }

    /// Multiplicity of the cluster lying over the x-polynomial `g`, if any.
    pub fn multiplicity_over(&self, g: &UPoly<K>) -> Vec<(Cluster<K>, i64)> {
        let g = g.monic();
        self.entries.iter().filter(|(c, _)| c.x_poly() == Some(&g)).cloned().collect()
    }

    /// All places with certified-by-refinement complex coordinates.
    pub fn numeric(&self, prec: u32) -> Result<NumericDivisor, CurveError>
    where
        K: Embed,
    {
        let f = embed_poly(self.model.f(), prec);
        let mut out = NumericDivisor::new(prec);
        for (c, m) in &self.entries {
            match c {
                Cluster::Infinite(b) => out.push(NumericPoint::Infinity(*b), *m),
                Cluster::InfinitePair => {
                    out.push(NumericPoint::Infinity(Branch::Plus), *m);
                    out.push(NumericPoint::Infinity(Branch::Minus), *m);
                }
                Cluster::InfiniteCubic => out.push(NumericPoint::CubicInfinity, *m),
                Cluster::Fiber(g) | Cluster::Ramified(g) | Cluster::Branch { g, .. } => {
                    let roots = aberth_roots(&embed_poly(g, prec), prec).map_err(|e| CurveError::Numeric(e.to_string()))?;
                    for r in roots {
                        let x = r.z;
                        match c {
                            Cluster::Fiber(_) => {
                                let y = f.eval(&x).sqrt();
                                out.push(NumericPoint::Affine { x: x.clone(), y: -y.clone() }, *m);
                                out.push(NumericPoint::Affine { x, y }, *m);
                            }
                            Cluster::Ramified(_) => out.push(NumericPoint::Affine { x, y: Complex::zero().with_precision(prec) }, *m),
                            Cluster::Branch { y, .. } => {
                                let yv = embed_poly(y, prec).eval(&x);
                                out.push(NumericPoint::Affine { x, y: yv }, *m);
                            }
                            _ => unreachable!(),
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

impl<K: Field> fmt::Display for Divisor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.entries.iter().enumerate() {
            let sign = if *m < 0 { "-" } else { "+" };
            if i == 0 {
                if *m < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            write!(f, "{}*{c}", m.abs())?;
        }
        Ok(())
    }
}

/// A complex point of the embedded curve.
#[derive(Clone, Debug)]
pub enum NumericPoint {
    Affine { x: Complex, y: Complex },
    /// A place over infinity of a quartic; `Plus` has `y/x^2 -> +sqrt(lc)` with the principal root.
    Infinity(Branch),
    CubicInfinity,
}

impl NumericPoint {
    fn close(&self, o: &Self, tol: &BigFloat) -> bool {
        match (self, o) {
            (NumericPoint::Affine { x, y }, NumericPoint::Affine { x: u, y: v }) => {
                let scale = BigFloat::from_i64(1) + &x.abs() + &y.abs();
                let d = (x.clone() - u).abs() + &(y.clone() - v).abs();
                d < tol.clone() * &scale
            }
            (NumericPoint::Infinity(a), NumericPoint::Infinity(b)) => a == b,
            (NumericPoint::CubicInfinity, NumericPoint::CubicInfinity) => true,
            _ => false,
        }
    }
}

/// Places with multiplicities, compared up to a working-precision tolerance.
#[derive(Clone, Debug)]
pub struct NumericDivisor {
    points: Vec<(NumericPoint, i64)>,
    tol: BigFloat,
}

impl NumericDivisor {
    pub fn new(prec: u32) -> Self {
        NumericDivisor { points: Vec::new(), tol: BigFloat::pow2(-(prec as i64) / 3) }
    }

    pub fn points(&self) -> &[(NumericPoint, i64)] {
        &self.points
    }

    pub fn push(&mut self, p: NumericPoint, m: i64) {
        if let Some(slot) = self.points.iter_mut().find(|(q, _)| q.close(&p, &self.tol)) {
            slot.1 += m;
        } else {
            self.points.push((p, m));
        }
        self.points.retain(|(_, m)| *m != 0);
    }

    pub fn add(&self, o: &NumericDivisor) -> NumericDivisor {
        let mut out = self.clone();
        for (p, m) in &o.points {
            out.push(p.clone(), *m);
        }
        out
    }

    pub fn negate(&self) -> NumericDivisor {
        NumericDivisor { points: self.points.iter().map(|(p, m)| (p.clone(), -m)).collect(), tol: self.tol.clone() }
    }

    pub fn degree(&self) -> i64 {
        self.points.iter().map(|(_, m)| m).sum()
    }

    pub fn approx_eq(&self, o: &NumericDivisor) -> bool {
        self.add(&o.negate()).points.is_empty()
    }
}

fn valuation<K: Field>(p: &UPoly<K>, g: &UPoly<K>) -> Option<i64> {
    if p.is_zero() {
        return None;
    }
    let mut rest = p.clone();
    let mut k = 0;
    while let Some(q) = rest.exact_div(g) {
        rest = q;
        k += 1;
    }
    Some(k)
}

fn degree_of<K: Ring>(p: &UPoly<K>) -> Option<i64> {
    p.degree().map(|d| d as i64)
}

/// Writes `h = (A + y B) / D` with polynomial `A`, `B`, `D`.
fn common_denominator<K: Field>(h: &FunctionFieldElement<K>) -> (UPoly<K>, UPoly<K>, UPoly<K>) {
    let (p, q) = (h.p(), h.q());
    let g = p.denom().gcd(q.denom());
    let d = p.denom().clone() * &q.denom().exact_div(&g).expect("gcd divides");
    let a = p.numer().clone() * &d.exact_div(p.denom()).expect("denominator divides lcm");
    let b = q.numer().clone() * &d.exact_div(q.denom()).expect("denominator divides lcm");
    (a, b, d)
}

/// The full divisor of a nonzero function, grouped into clusters.
pub fn divisor_of<K: Field>(h: &FunctionFieldElement<K>) -> Result<Divisor<K>, CurveError> {
    if h.is_zero() {
        return Err(CurveError::ZeroElement);
    }
    let model = h.model().clone();
    let f = model.f().clone();
    let (a, b, d) = common_denominator(h);
    let n = a.clone() * &a - &(f.clone() * &b * &b);
    if n.is_zero() {
        return Err(CurveError::ZeroElement);
    }
    let inputs: Vec<UPoly<K>> = [&f, &a, &b, &d, &n].into_iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut entries: Vec<(Cluster<K>, i64)> = Vec::new();
    for g in gcd_free_basis(&inputs) {
        let vd = valuation(&d, &g).unwrap_or(0);
        let (va, vb) = (valuation(&a, &g), valuation(&b, &g));
        if f.rem(&g).is_zero() {
            let v = match (va, vb) {
                (Some(x), Some(y)) => (2 * x).min(2 * y + 1),
                (Some(x), None) => 2 * x,
                (None, Some(y)) => 2 * y + 1,
                (None, None) => unreachable!(),
            };
            entries.push((Cluster::Ramified(g), v - 2 * vd));
            continue;
        }
        match (va, vb) {
            (Some(x), Some(y)) if x == y => {
                let ge = g.pow(x as u32);
                let a1 = a.exact_div(&ge).expect("valuation");
                let b1 = b.exact_div(&ge).expect("valuation");
                let n1 = a1.clone() * &a1 - &(f.clone() * &b1 * &b1);
                let m = valuation(&n1, &g).unwrap_or(0);
                if m > 0 {
                    let binv = b1.inv_mod(&g).expect("coprime to the basis element");
                    let y = (-(a1 * &binv)).rem(&g);
                    let ny = (-y.clone()).rem(&g);
                    entries.push((Cluster::Branch { g: g.clone(), y }, x - vd + m));
                    entries.push((Cluster::Branch { g, y: ny }, x - vd));
                } else {
                    entries.push((Cluster::Fiber(g), x - vd));
                }
            }
            (Some(x), Some(y)) => entries.push((Cluster::Fiber(g), x.min(y) - vd)),
            (Some(x), None) | (None, Some(x)) => entries.push((Cluster::Fiber(g), x - vd)),
            (None, None) => unreachable!(),
        }
    }
    let dd = degree_of(&d).expect("nonzero denominator");
    let min_opt = |u: Option<i64>, v: Option<i64>| match (u, v) {
        (Some(u), Some(v)) => u.min(v),
        (Some(u), None) | (None, Some(u)) => u,
        (None, None) => unreachable!(),
    };
    if model.is_cubic() {
        let v = min_opt(degree_of(&a).map(|x| -2 * x), degree_of(&b).map(|x| -3 - 2 * x)) + 2 * dd;
        entries.push((Cluster::InfiniteCubic, v));
    } else if model.split_at_infinity() {
        for br in [Branch::Plus, Branch::Minus] {
            entries.push((Cluster::Infinite(br), h.order_at(&LocalPlace::Infinite(br))?));
        }
    } else {
        let v = min_opt(degree_of(&a).map(|x| -x), degree_of(&b).map(|x| -2 - x)) + dd;
        entries.push((Cluster::InfinitePair, v));
    }
    entries.retain(|(_, m)| *m != 0);
    entries.sort_by_cached_key(|(c, _)| c.sort_key());
    let out = Divisor { model, entries };
    let total = out.degree();
    if total != 0 {
        return Err(CurveError::NonzeroDegree(total));
    }
    Ok(out)
}
