use std::str::FromStr;

use num::BigRational;
use serde_json::{Map, Value};

use super::{BiLaurent, LaurentQ, RatFun};
use crate::error::{Result, SkeinError};

fn terms_json<'a>(it: impl Iterator<Item = ((i32, i32), &'a BigRational)>) -> Value {
    let mut m = Map::new();
    for ((i, j), c) in it {
        m.insert(format!("({i},{j})"), Value::String(c.to_string()));
    }
    Value::Object(m)
}

pub fn bilaurent_to_json(p: &BiLaurent) -> Value {
    terms_json(p.terms())
}

pub fn laurent_to_json(p: &LaurentQ) -> Value {
    let v: Vec<_> = p.terms().map(|(e, c)| ((0, e), c)).collect();
    terms_json(v.into_iter())
}

pub fn ratfun_to_json(x: &RatFun) -> Value {
    let mut m = Map::new();
    m.insert("num".into(), bilaurent_to_json(x.num()));
    m.insert("den".into(), bilaurent_to_json(x.den()));
    Value::Object(m)
}

fn perr(field: &str, message: impl Into<String>) -> SkeinError {
    SkeinError::Parse { field: field.to_string(), message: message.into() }
}

fn parse_key(field: &str, k: &str) -> Result<(i32, i32)> {
    let inner = k
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| perr(field, format!("bad exponent key {k:?}")))?;
    let (a, b) = inner.split_once(',').ok_or_else(|| perr(field, format!("bad exponent key {k:?}")))?;
    let i = a.trim().parse().map_err(|_| perr(field, format!("bad exponent key {k:?}")))?;
    let j = b.trim().parse().map_err(|_| perr(field, format!("bad exponent key {k:?}")))?;
    Ok((i, j))
}

pub fn bilaurent_from_json(field: &str, v: &Value) -> Result<BiLaurent> {
    let obj = v.as_object().ok_or_else(|| perr(field, "expected an object"))?;
    let mut out = BiLaurent::zero();
    for (k, c) in obj {
        let key = parse_key(field, k)?;
        let s = c.as_str().ok_or_else(|| perr(field, "coefficient must be a string"))?;
        let r = BigRational::from_str(s).map_err(|_| perr(field, format!("bad rational {s:?}")))?;
        out.add_term(key, r);
    }
    Ok(out)
}

pub fn ratfun_from_json(v: &Value) -> Result<RatFun> {
    let num = bilaurent_from_json("num", v.get("num").ok_or_else(|| perr("num", "missing"))?)?;
    let den = match v.get("den") {
        Some(d) => bilaurent_from_json("den", d)?,
        None => BiLaurent::one(),
    };
    RatFun::new(num, den).map_err(|_| perr("den", "zero denominator"))
}
