//! JSON encodings of elements, ideals, points, group elements and sections.
//!
//! Rationals travel as `"p/q"` strings, elements of quadratic rings as
//! `{"a": .., "b": ..}` meaning `a + b√d`. Decoding is lenient where the
//! shape is unambiguous (plain integers, one-element arrays around a
//! coordinate, optional `{"point": ..}` / `{"gn": ..}` wrappers).

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::bundle::Bundle;
use crate::error::{Error, Result};
use crate::ideal::{FractionalIdeal, PrimeIdealFactorization};
use crate::pgl::{GnElement, Matrix};
use crate::point::ProjPoint;
use crate::ring::{PrimeIdeal, RingDescriptor, RingElement};
use crate::zero_scheme::{Section, ZeroSchemeIdeal};

fn parse_err(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, got {v}"))
}

fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|x| BigRational::from_integer(x.into()))
            .ok_or_else(|| parse_err("an integer or a \"p/q\" string", v)),
        Value::String(s) => {
            let s = s.trim();
            let (num, den) = match s.split_once('/') {
                Some((n, d)) => (n.trim(), d.trim()),
                None => (s, "1"),
            };
            let num = BigInt::from_str(num).map_err(|_| parse_err("a rational", v))?;
            let den = BigInt::from_str(den).map_err(|_| parse_err("a rational", v))?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(num, den))
        }
        Value::Array(items) if items.len() == 1 => parse_rational(&items[0]),
        _ => Err(parse_err("a rational", v)),
    }
}

/// An element of `ring`; integers, `"p/q"` strings, `{"a","b"}` objects, or one of those in a 1-array.
pub fn parse_element(ring: RingDescriptor, v: &Value) -> Result<RingElement> {
    match v {
        Value::Object(map) => {
            let part = |key: &str| match map.get(key) {
                Some(x) => parse_rational(x),
                None => Ok(BigRational::zero()),
            };
            RingElement::from_parts(ring, part("a")?, part("b")?)
        }
        Value::Array(items) if items.len() == 1 => parse_element(ring, &items[0]),
        _ => RingElement::from_rational(ring, parse_rational(v)?),
    }
}

pub fn element_json(x: &RingElement) -> Value {
    if let Some(r) = x.residue() {
        return Value::String(r.to_string());
    }
    let (a, b) = x.rational_parts().expect("domain element");
    if x.ring().quadratic_d().is_some() {
        json!({"a": rational_string(&a), "b": rational_string(&b)})
    } else {
        Value::String(rational_string(&a))
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(what, v))
}

fn field<'a>(map: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    map.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field \"{key}\"")))
}

/// `{"gens": [..]}` or `{"ideal": {"gens": [..]}}`, generators in R or K.
pub fn parse_ideal(ring: RingDescriptor, v: &Value) -> Result<FractionalIdeal> {
    let map = v.as_object().ok_or_else(|| parse_err("an ideal object", v))?;
    if let Some(inner) = map.get("ideal") {
        return parse_ideal(ring, inner);
    }
    let field_ring = ring.section_ring();
    let gens = array(field(map, "gens")?, "a generator list")?
        .iter()
        .map(|g| parse_element(field_ring, g))
        .collect::<Result<Vec<_>>>()?;
    FractionalIdeal::from_generators(ring, &gens)
}

pub fn ideal_json(ideal: &FractionalIdeal) -> Value {
    json!({
        "gens": ideal.basis().iter().map(element_json).collect::<Vec<_>>(),
        "display": ideal.to_string(),
    })
}

/// `"trivial"`, absent, or an ideal.
pub fn parse_bundle(ring: RingDescriptor, v: Option<&Value>) -> Result<Bundle> {
    match v {
        None | Some(Value::Null) => Ok(Bundle::trivial(ring)),
        Some(Value::String(s)) if s == "trivial" => Ok(Bundle::trivial(ring)),
        Some(v) => {
            if !ring.is_domain() {
                return Err(Error::Unsupported {
                    operation: "nontrivial bundles",
                    ring,
                });
            }
            Ok(Bundle::Ideal(parse_ideal(ring, v)?))
        }
    }
}

pub fn bundle_json(bundle: &Bundle) -> Value {
    match bundle {
        Bundle::Ideal(ideal) if !bundle.is_trivial() => ideal_json(ideal),
        _ => Value::String("trivial".into()),
    }
}

/// `{"bundle", "a0", "a1"}`, optionally under `"point"`, or a pair `[a0, a1]` on the trivial bundle.
pub fn parse_point(ring: RingDescriptor, v: &Value) -> Result<ProjPoint> {
    match v {
        Value::Array(items) if items.len() == 2 => {
            let sr = ring.section_ring();
            ProjPoint::trivial(ring, &parse_element(sr, &items[0])?, &parse_element(sr, &items[1])?)
        }
        Value::Object(map) => {
            if let Some(inner) = map.get("point") {
                return parse_point(ring, inner);
            }
            let bundle = parse_bundle(ring, map.get("bundle"))?;
            let sr = bundle.section_ring();
            let a0 = parse_element(sr, field(map, "a0")?)?;
            let a1 = parse_element(sr, field(map, "a1")?)?;
            ProjPoint::new(bundle, &a0, &a1)
        }
        _ => Err(parse_err("a point", v)),
    }
}

pub fn point_json(p: &ProjPoint) -> Value {
    json!({
        "bundle": bundle_json(p.bundle()),
        "a0": element_json(p.a0()),
        "a1": element_json(p.a1()),
    })
}

pub fn parse_points(ring: RingDescriptor, v: &Value) -> Result<Vec<ProjPoint>> {
    array(v, "a list of points")?
        .iter()
        .map(|p| parse_point(ring, p))
        .collect()
}

pub fn parse_matrix(ring: RingDescriptor, v: &Value) -> Result<Matrix> {
    array(v, "a matrix")?
        .iter()
        .map(|row| {
            array(row, "a matrix row")?
                .iter()
                .map(|x| parse_element(ring, x))
                .collect()
        })
        .collect()
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        m.iter()
            .map(|row| Value::Array(row.iter().map(element_json).collect()))
            .collect(),
    )
}

/// `{"n", "bundle", "M"}`, optionally under `"gn"`.
pub fn parse_gn(ring: RingDescriptor, v: &Value) -> Result<GnElement> {
    let map = v.as_object().ok_or_else(|| parse_err("a group element", v))?;
    if let Some(inner) = map.get("gn") {
        return parse_gn(ring, inner);
    }
    let bundle = parse_bundle(ring, map.get("bundle"))?;
    let matrix = parse_matrix(bundle.section_ring(), field(map, "M")?)?;
    if let Some(n) = map.get("n") {
        let n = n.as_u64().ok_or_else(|| parse_err("a dimension", n))?;
        if n as usize != matrix.len() {
            return Err(Error::DimensionMismatch(format!("n = {n} but M has {} rows", matrix.len())));
        }
    }
    GnElement::new(bundle, matrix)
}

pub fn gn_json(g: &GnElement) -> Value {
    json!({
        "n": g.n(),
        "bundle": bundle_json(g.bundle()),
        "M": matrix_json(g.matrix()),
    })
}

/// `{"coords": [..]}` for a section of R^m, or `{"bundle": ideal, "s": x}`.
pub fn parse_section(ring: RingDescriptor, v: &Value) -> Result<Section> {
    let map = v.as_object().ok_or_else(|| parse_err("a section", v))?;
    if let Some(coords) = map.get("coords") {
        let coords = array(coords, "a coordinate list")?
            .iter()
            .map(|x| parse_element(ring, x))
            .collect::<Result<Vec<_>>>()?;
        return Section::free(ring, coords);
    }
    let ideal = match parse_bundle(ring, map.get("bundle"))? {
        Bundle::Ideal(ideal) => ideal,
        Bundle::Trivial(_) => {
            let s = parse_element(ring, field(map, "s")?)?;
            return Section::free(ring, vec![s]);
        }
    };
    let s = parse_element(ring.section_ring(), field(map, "s")?)?;
    Section::of_ideal(ideal, &s)
}

pub fn zero_scheme_ideal_json(ideal: &ZeroSchemeIdeal) -> Value {
    json!({
        "gens": ideal.generators().iter().map(element_json).collect::<Vec<_>>(),
        "display": ideal.to_string(),
        "unit": ideal.is_unit_ideal(),
        "zero": ideal.is_zero(),
    })
}

pub fn prime_json(p: &PrimeIdeal) -> Value {
    Value::String(p.to_string())
}

pub fn factorization_json(f: &PrimeIdealFactorization) -> Value {
    Value::Array(
        f.factors
            .iter()
            .map(|(prime, e)| json!({"prime": prime.to_string(), "gens": ideal_json(prime)["gens"], "exponent": e}))
            .collect(),
    )
}

/// A descriptor from `{"ring": ..}` JSON.
pub fn parse_ring(v: &Value) -> Result<RingDescriptor> {
    serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("ring descriptor: {e}")))
}

pub fn ring_json(ring: RingDescriptor) -> Value {
    serde_json::to_value(ring).expect("descriptor serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements_round_trip() {
        let k = RingDescriptor::quadratic_fraction_field(-5).unwrap();
        let x = RingElement::from_parts(k, BigRational::new(1.into(), 2.into()), BigRational::from_integer((-3).into())).unwrap();
        assert_eq!(parse_element(k, &element_json(&x)).unwrap(), x);
        let q = RingDescriptor::Rationals;
        let y = RingElement::from_rational(q, BigRational::new((-4).into(), 3.into())).unwrap();
        assert_eq!(element_json(&y), json!("-4/3"));
        assert_eq!(parse_element(q, &json!(["-4/3"])).unwrap(), y);
        assert_eq!(parse_element(q, &json!(7)).unwrap(), RingElement::from_int(q, 7));
        assert!(parse_element(RingDescriptor::Integers, &json!("1/2")).is_err());
    }

    #[test]
    fn points_and_groups_round_trip() {
        let r = RingDescriptor::quadratic_order(-5).unwrap();
        let v = json!({"point": {"bundle": {"gens": ["2", {"a": "1", "b": "1"}]}, "a0": "2", "a1": {"a": 1, "b": 1}}});
        let p = parse_point(r, &v).unwrap();
        assert!(!p.bundle().is_trivial());
        assert_eq!(parse_point(r, &point_json(&p)).unwrap(), p);
        let p = parse_point(RingDescriptor::Rationals, &json!([["2"], ["1"]])).unwrap();
        assert_eq!(point_json(&p)["bundle"], json!("trivial"));

        let g = json!({"gn": {"n": 2, "bundle": {"gens": ["2", {"a": 1, "b": 1}]}, "M": [["2", {"a": 1, "b": 1}], [{"a": 1, "b": -1}, "2"]]}});
        let g = parse_gn(r, &g).unwrap();
        assert_eq!(parse_gn(r, &gn_json(&g)).unwrap(), g);
    }

    #[test]
    fn rings() {
        let v = json!({"ring": "Zmod", "n": 6});
        let ring = parse_ring(&v).unwrap();
        assert_eq!(ring_json(ring), v);
        assert!(parse_ring(&json!({"ring": "Fp", "p": 6})).is_err());
    }
}
