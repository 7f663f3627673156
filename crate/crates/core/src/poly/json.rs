//! Canonical JSON form of a bivariate polynomial:
//! `{"var_order":["x","y"],"coeffs":[[...],[...]]}` where row `j` holds the
//! coefficients of `y^j` in increasing powers of `x`. Coefficients are
//! written as strings `"p"` or `"p/q"`; plain JSON integers are accepted on
//! input.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ring::{parse_rat, rat_to_string, Rat};

use super::{BiPoly, RatPoly};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BiPolyJson {
    pub var_order: Vec<String>,
    pub coeffs: Vec<Vec<Value>>,
}

pub fn to_json(p: &BiPoly) -> BiPolyJson {
    BiPolyJson {
        var_order: vec!["x".into(), "y".into()],
        coeffs: p
            .coeffs()
            .iter()
            .map(|row| row.coeffs().iter().map(|c| Value::String(rat_to_string(c))).collect())
            .collect(),
    }
}

pub fn rat_from_value(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s).ok_or_else(|| Error::Invalid(format!("bad rational '{s}'"))),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rat::from_integer(i.into()))
            .ok_or_else(|| Error::Invalid(format!("non-integer JSON number {n}; use \"p/q\""))),
        other => Err(Error::Invalid(format!("expected a rational, got {other}"))),
    }
}

pub fn from_json(j: &BiPolyJson) -> Result<BiPoly> {
    if j.var_order != ["x", "y"] {
        return Err(Error::Invalid("var_order must be [\"x\",\"y\"]".into()));
    }
    let rows = j
        .coeffs
        .iter()
        .map(|row| row.iter().map(rat_from_value).collect::<Result<Vec<_>>>().map(RatPoly::new))
        .collect::<Result<Vec<_>>>()?;
    Ok(BiPoly::new(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_bipoly;

    #[test]
    fn roundtrip() {
        let p = parse_bipoly("(y^2-1)^2 - 1/3*x^3*y").unwrap();
        let text = serde_json::to_string(&to_json(&p)).unwrap();
        assert!(text.starts_with("{\"var_order\":[\"x\",\"y\"],\"coeffs\":[[\"1\"]"));
        let back: BiPolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(from_json(&back).unwrap(), p);
    }

    #[test]
    fn accepts_integers() {
        let j: BiPolyJson = serde_json::from_str(r#"{"var_order":["x","y"],"coeffs":[[-1,0,1],[],[1]]}"#).unwrap();
        assert_eq!(from_json(&j).unwrap(), parse_bipoly("x^2+y^2-1").unwrap());
    }
}
