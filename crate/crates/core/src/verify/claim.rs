use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::{CurveError, CurveModel};
use crate::poly::{MultiPoly, PolyError, URatFunc, parse_poly};
use crate::scalars::{Field, QuadExt};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClaimError {
    #[error("cannot read claim: {0}")]
    Json(String),
    #[error("bad polynomial `{text}`: {source}")]
    Poly { text: String, source: PolyError },
    #[error("bad curve: {0}")]
    Curve(#[from] CurveError),
    #[error("zero denominator")]
    ZeroDenominator,
}

/// `num / den` as polynomial text in `x`, optionally using `gamma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalText {
    pub num: String,
    #[serde(default = "one")]
    pub den: String,
}

fn one() -> String {
    "1".into()
}

/// On-disk claim: `y^2 = f(x)` together with the norms `n0`, `n1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimFile {
    pub name: String,
    /// Value substituted for `gamma` in every polynomial.
    #[serde(default)]
    pub gamma: Option<String>,
    pub f: String,
    pub n0: RationalText,
    pub n1: RationalText,
}

/// A parsed claim over the field `K`.
#[derive(Clone, Debug)]
pub struct BelyiClaim<K: Field> {
    pub name: String,
    pub model: Arc<CurveModel<K>>,
    pub n0: URatFunc<K>,
    pub n1: URatFunc<K>,
}

impl ClaimFile {
    pub fn from_json(src: &str) -> Result<Self, ClaimError> {
        serde_json::from_str(src).map_err(|e| ClaimError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("claims serialize")
    }

    fn poly(&self, text: &str) -> Result<crate::poly::UPoly<QuadExt>, ClaimError> {
        let err = |source| ClaimError::Poly { text: text.to_string(), source };
        let mut p: MultiPoly<QuadExt> = parse_poly(text).map_err(err)?;
        if let Some(g) = &self.gamma {
            let gv = parse_poly(g).map_err(|source| ClaimError::Poly { text: g.clone(), source })?;
            p = p.substitute("gamma", &gv);
        }
        p.to_dense("x").map_err(err)
    }

    fn ratfunc(&self, r: &RationalText) -> Result<URatFunc<QuadExt>, ClaimError> {
        let den = self.poly(&r.den)?;
        if den.is_zero() {
            return Err(ClaimError::ZeroDenominator);
        }
        URatFunc::new(self.poly(&r.num)?, den).map_err(|source| ClaimError::Poly { text: r.den.clone(), source })
    }

    pub fn parse(&self) -> Result<BelyiClaim<QuadExt>, ClaimError> {
        Ok(BelyiClaim {
            name: self.name.clone(),
            model: Arc::new(CurveModel::new(self.poly(&self.f)?)?),
            n0: self.ratfunc(&self.n0)?,
            n1: self.ratfunc(&self.n1)?,
        })
    }
}

/// Sign of `gamma = 45 sqrt(105)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Gamma {
    Plus,
    Minus,
}

impl Gamma {
    pub fn value(self) -> &'static str {
        match self {
            Gamma::Plus => "45*sqrt(105)",
            Gamma::Minus => "-45*sqrt(105)",
        }
    }
}

impl std::str::FromStr for Gamma {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plus" | "+" => Ok(Gamma::Plus),
            "minus" | "-" => Ok(Gamma::Minus),
            _ => Err(format!("expected `plus` or `minus`, got `{s}`")),
        }
    }
}

const SCALE: &str = "343*(39*gamma + 17983)/(512*243*125)";

/// The degree-eight pair on `y^2 = f(x)` for the given sign of `gamma`.
pub fn bundled_claim(sign: Gamma) -> ClaimFile {
    let tag = match sign {
        Gamma::Plus => "plus",
        Gamma::Minus => "minus",
    };
    ClaimFile {
        name: format!("gamma-{tag}"),
        gamma: Some(sign.value().into()),
        f: "420*x^3 - (119 + 9*gamma)*x^2 + 14*(1515 - gamma)*x + 420*(420 - gamma)".into(),
        n0: RationalText { num: format!("{SCALE}*(x + 5)^3*(x - 3)^5"), den: "64*x - 105 + gamma".into() },
        n1: RationalText {
            num: format!("{SCALE}*(x^4 - 30*x^2 + 40*x + (135*gamma - 60825)/14)^2"),
            den: "64*x - 105 + gamma".into(),
        },
    }
}
