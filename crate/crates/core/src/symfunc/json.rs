//! JSON forms of symmetric functions and polynomials.
//!
//! Coefficients are written as an exact `num`/`den` pair of JSON integers of
//! arbitrary size; terms follow partition order.

use std::collections::BTreeMap;
use std::str::FromStr;

use num::{BigInt, Zero};
use serde_json::{json, Map, Number, Value};

use super::{Basis, BivarPoly, SymFunc, SymFunc2, TPoly};
use crate::combinatorics::IntegerPartition;
use crate::error::{Error, Result};
use crate::Rational;

fn big(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

fn coeff_fields(obj: &mut Map<String, Value>, c: &Rational) {
    obj.insert("num".into(), big(c.numer()));
    obj.insert("den".into(), big(c.denom()));
}

fn partition_json(l: &IntegerPartition) -> Value {
    Value::Array(l.parts().iter().map(|&p| json!(p)).collect())
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

fn read_int(v: &Value, what: &str) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(bad(format!("{what} must be an integer"))),
    };
    BigInt::from_str(&text).map_err(|_| bad(format!("{what} must be an integer, got {text}")))
}

fn read_coeff(term: &Value) -> Result<Rational> {
    let num = read_int(term.get("num").ok_or_else(|| bad("term is missing \"num\""))?, "num")?;
    let den = match term.get("den") {
        Some(v) => read_int(v, "den")?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

fn read_partition(v: Option<&Value>, what: &str) -> Result<IntegerPartition> {
    let arr = v
        .and_then(Value::as_array)
        .ok_or_else(|| bad(format!("term is missing array \"{what}\"")))?;
    let parts = arr
        .iter()
        .map(|p| {
            p.as_u64()
                .filter(|&x| x > 0 && x <= u32::MAX as u64)
                .map(|x| x as u32)
                .ok_or_else(|| bad(format!("\"{what}\" entries must be positive integers")))
        })
        .collect::<Result<Vec<_>>>()?;
    let lam = IntegerPartition::new(parts.clone())?;
    if lam.parts() != parts.as_slice() {
        return Err(bad(format!("\"{what}\" must be weakly decreasing")));
    }
    Ok(lam)
}

fn read_basis(v: &Value) -> Result<Basis> {
    match v.get("basis") {
        Some(Value::String(s)) => s.parse(),
        None => Ok(Basis::P),
        _ => Err(bad("\"basis\" must be a string")),
    }
}

fn read_terms(v: &Value) -> Result<&Vec<Value>> {
    v.get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("expected an object with a \"terms\" array"))
}

pub fn sym_to_json(g: &SymFunc, basis: Basis) -> Result<Value> {
    let terms: Vec<Value> = g
        .convert(basis)?
        .iter()
        .map(|(l, c)| {
            let mut obj = Map::new();
            obj.insert("partition".into(), partition_json(l));
            coeff_fields(&mut obj, c);
            Value::Object(obj)
        })
        .collect();
    Ok(json!({ "basis": basis.name(), "terms": terms }))
}

pub fn sym_from_json(v: &Value) -> Result<SymFunc> {
    let basis = read_basis(v)?;
    let mut coeffs: BTreeMap<IntegerPartition, Rational> = BTreeMap::new();
    for term in read_terms(v)? {
        let lam = read_partition(term.get("partition"), "partition")?;
        super::insert_term(&mut coeffs, lam, read_coeff(term)?);
    }
    SymFunc::from_basis(basis, &coeffs)
}

pub fn sym2_to_json(g: &SymFunc2, basis: Basis) -> Result<Value> {
    let terms: Vec<Value> = g
        .convert_x(basis)?
        .iter()
        .map(|((l, m), c)| {
            let mut obj = Map::new();
            obj.insert("x_partition".into(), partition_json(l));
            obj.insert("y_partition".into(), partition_json(m));
            coeff_fields(&mut obj, c);
            Value::Object(obj)
        })
        .collect();
    Ok(json!({ "basis": basis.name(), "y_basis": "p", "terms": terms }))
}

pub fn sym2_from_json(v: &Value) -> Result<SymFunc2> {
    let basis = read_basis(v)?;
    if let Some(y) = v.get("y_basis") {
        if y != "p" {
            return Err(bad("only \"p\" is supported for \"y_basis\""));
        }
    }
    let mut coeffs = BTreeMap::new();
    for term in read_terms(v)? {
        let l = read_partition(term.get("x_partition"), "x_partition")?;
        let m = read_partition(term.get("y_partition"), "y_partition")?;
        super::insert_term(&mut coeffs, (l, m), read_coeff(term)?);
    }
    SymFunc2::from_x_basis(basis, &coeffs)
}

pub fn bivar_to_json(p: &BivarPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(&(a, b), c)| {
            let mut obj = Map::new();
            obj.insert("exponents".into(), json!([a, b]));
            coeff_fields(&mut obj, c);
            Value::Object(obj)
        })
        .collect();
    json!({ "vars": p.vars(), "terms": terms })
}

pub fn bivar_from_json(v: &Value) -> Result<BivarPoly> {
    let vars = v
        .get("vars")
        .and_then(Value::as_array)
        .filter(|a| a.len() == 2 && a.iter().all(Value::is_string))
        .ok_or_else(|| bad("\"vars\" must be an array of two names"))?;
    let names = [vars[0].as_str().unwrap(), vars[1].as_str().unwrap()];
    let mut p = BivarPoly::zero(names);
    for term in read_terms(v)? {
        let e = term
            .get("exponents")
            .and_then(Value::as_array)
            .filter(|a| a.len() == 2)
            .and_then(|a| Some((a[0].as_u64()? as u32, a[1].as_u64()? as u32)))
            .ok_or_else(|| bad("\"exponents\" must be two non-negative integers"))?;
        p.add_term(e.0, e.1, read_coeff(term)?);
    }
    Ok(p)
}

pub fn tpoly_to_json(t: &TPoly) -> Value {
    let mut terms = Vec::new();
    for (l, by_k) in t.by_partition() {
        for (k, c) in by_k {
            let mut obj = Map::new();
            obj.insert("t".into(), json!(k));
            obj.insert("partition".into(), partition_json(&l));
            coeff_fields(&mut obj, &c);
            terms.push(Value::Object(obj));
        }
    }
    json!({ "basis": "p", "terms": terms })
}

pub fn tpoly_from_json(v: &Value) -> Result<TPoly> {
    if read_basis(v)? != Basis::P {
        return Err(bad("X_G(t) is read in the p basis only"));
    }
    let mut out = TPoly::zero();
    for term in read_terms(v)? {
        let k = term
            .get("t")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("term is missing integer \"t\""))?;
        let lam = read_partition(term.get("partition"), "partition")?;
        out.add_term(k as u32, &SymFunc::from_p_terms([(lam, read_coeff(term)?)]));
    }
    Ok(out)
}

/// A parsed function document of either alphabet count.
#[derive(Clone, Debug, PartialEq)]
pub enum FunctionDoc {
    One(SymFunc),
    Two(SymFunc2),
}

/// Reads either a one-alphabet or a two-alphabet document, deciding by the
/// shape of the first term (an empty document is one-alphabet).
pub fn function_from_json(v: &Value) -> Result<FunctionDoc> {
    let two = read_terms(v)?
        .first()
        .map(|t| t.get("x_partition").is_some() || t.get("y_partition").is_some())
        .unwrap_or(false)
        || v.get("y_basis").is_some();
    if two {
        sym2_from_json(v).map(FunctionDoc::Two)
    } else {
        sym_from_json(v).map(FunctionDoc::One)
    }
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}
