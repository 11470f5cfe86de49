//! JSON forms for scalars, matrices, and coordinate vectors.
//!
//! Exact rationals travel as strings ("3/2", "-5") so nothing overflows or
//! rounds; Gaussian rationals as {"re": ..., "im": ...}; floating values as
//! bare JSON floats (real case) or {"approx": [re, im]}. Integral JSON
//! numbers parse exactly, non-integral ones parse as floating.

use std::fmt;

use pmcs_core::matrix::CoordKind;
use pmcs_core::num_bigint::BigInt;
use pmcs_core::num_rational::BigRational;
use pmcs_core::num_traits::{One, Zero};
use pmcs_core::{Scalar, SquareMatrix, SubsetVector, SymVector};
use serde_json::{Map, Value};

#[derive(Debug)]
pub struct JsonError(pub String);

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for JsonError {}

fn err<T>(msg: impl Into<String>) -> Result<T, JsonError> {
    Err(JsonError(msg.into()))
}

fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_from_str(s: &str) -> Result<BigRational, JsonError> {
    let parse_int = |part: &str| {
        part.trim()
            .parse::<BigInt>()
            .map_err(|_| JsonError(format!("bad integer literal {part:?}")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(parse_int(num)?, den))
        }
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(r) => Value::String(rational_to_string(r)),
        Scalar::Gaussian { re, im } => {
            let mut map = Map::new();
            map.insert("re".into(), Value::String(rational_to_string(re)));
            map.insert("im".into(), Value::String(rational_to_string(im)));
            Value::Object(map)
        }
        Scalar::Approx(z) => {
            if z.im == 0.0 {
                Value::from(z.re)
            } else {
                let mut map = Map::new();
                map.insert("approx".into(), Value::from(vec![z.re, z.im]));
                Value::Object(map)
            }
        }
    }
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar, JsonError> {
    match v {
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Ok(Scalar::from_integer(i))
            } else if let Some(f) = num.as_f64() {
                Ok(Scalar::approx(f, 0.0))
            } else {
                err(format!("unrepresentable number {num}"))
            }
        }
        Value::String(s) => Ok(Scalar::from_rational(rational_from_str(s)?)),
        Value::Object(map) => {
            if let Some(approx) = map.get("approx") {
                let parts = approx
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| JsonError("\"approx\" wants [re, im]".into()))?;
                let re = parts[0].as_f64().ok_or_else(|| JsonError("approx re must be a number".into()))?;
                let im = parts[1].as_f64().ok_or_else(|| JsonError("approx im must be a number".into()))?;
                return Ok(Scalar::approx(re, im));
            }
            let part = |key: &str| -> Result<BigRational, JsonError> {
                match map.get(key) {
                    Some(Value::String(s)) => rational_from_str(s),
                    Some(Value::Number(num)) => num
                        .as_i64()
                        .map(|i| BigRational::from_integer(BigInt::from(i)))
                        .ok_or_else(|| JsonError(format!("\"{key}\" must be exact"))),
                    Some(other) => err(format!("bad \"{key}\" value: {other}")),
                    None => err(format!("scalar object needs \"{key}\" (or \"approx\")")),
                }
            };
            let re = part("re")?;
            let im = part("im")?;
            Ok(Scalar::gaussian(re, im))
        }
        other => err(format!("cannot read a scalar from {other}")),
    }
}

pub fn matrix_to_json(a: &SquareMatrix) -> Value {
    let rows: Vec<Value> = (0..a.n())
        .map(|i| Value::from((0..a.n()).map(|j| scalar_to_json(a.get(i, j))).collect::<Vec<_>>()))
        .collect();
    let mut map = Map::new();
    map.insert("n".into(), Value::from(a.n()));
    map.insert("entries".into(), Value::from(rows));
    Value::Object(map)
}

pub fn matrix_from_json(v: &Value) -> Result<SquareMatrix, JsonError> {
    let obj = v.as_object().ok_or_else(|| JsonError("matrix wants {\"n\", \"entries\"}".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| JsonError("matrix needs integer \"n\"".into()))? as usize;
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| JsonError("matrix needs \"entries\" rows".into()))?;
    if entries.len() != n {
        return err(format!("expected {n} rows, got {}", entries.len()));
    }
    let mut rows = Vec::with_capacity(n);
    for (i, row) in entries.iter().enumerate() {
        let cells = row
            .as_array()
            .ok_or_else(|| JsonError(format!("row {i} is not an array")))?;
        if cells.len() != n {
            return err(format!("row {i} has {} entries, expected {n}", cells.len()));
        }
        let mut out = Vec::with_capacity(n);
        for (j, cell) in cells.iter().enumerate() {
            out.push(
                scalar_from_json(cell)
                    .map_err(|e| JsonError(format!("entry ({i}, {j}): {e}")))?,
            );
        }
        rows.push(out);
    }
    SquareMatrix::new(rows).map_err(|e| JsonError(e.to_string()))
}

pub fn kind_name(kind: CoordKind) -> &'static str {
    match kind {
        CoordKind::Minors => "minors",
        CoordKind::CycleSums => "cyclesums",
    }
}

pub fn kind_from_name(name: &str) -> Result<CoordKind, JsonError> {
    match name {
        "minors" => Ok(CoordKind::Minors),
        "cyclesums" => Ok(CoordKind::CycleSums),
        other => err(format!("unknown kind {other:?}, want \"minors\" or \"cyclesums\"")),
    }
}

fn mask_key(mask: u32, n: usize) -> String {
    format!("0b{mask:0n$b}", n = n)
}

pub fn subset_vector_to_json(v: &SubsetVector) -> Value {
    let mut values = Map::new();
    for mask in 0..(1u32 << v.n()) {
        values.insert(mask_key(mask, v.n()), scalar_to_json(v.get(mask)));
    }
    let mut map = Map::new();
    map.insert("kind".into(), Value::from(kind_name(v.kind())));
    map.insert("level".into(), Value::from("subset"));
    map.insert("n".into(), Value::from(v.n()));
    map.insert("values".into(), Value::Object(values));
    Value::Object(map)
}

pub fn subset_vector_from_json(v: &Value) -> Result<SubsetVector, JsonError> {
    let obj = v
        .as_object()
        .ok_or_else(|| JsonError("subset vector wants {\"kind\", \"n\", \"values\"}".into()))?;
    let kind = kind_from_name(
        obj.get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| JsonError("subset vector needs string \"kind\"".into()))?,
    )?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| JsonError("subset vector needs integer \"n\"".into()))? as usize;
    if n > 16 {
        return err(format!("subset vectors support n <= 16, got {n}"));
    }
    let values = obj
        .get("values")
        .and_then(Value::as_object)
        .ok_or_else(|| JsonError("subset vector needs \"values\" object".into()))?;
    let size = 1usize << n;
    if values.len() != size {
        return err(format!("expected {size} masks for n = {n}, got {}", values.len()));
    }
    let mut out = vec![Scalar::zero(); size];
    for (key, val) in values {
        let digits = key
            .strip_prefix("0b")
            .ok_or_else(|| JsonError(format!("mask key {key:?} must start with \"0b\"")))?;
        let mask = u32::from_str_radix(digits, 2)
            .map_err(|_| JsonError(format!("bad mask key {key:?}")))?;
        if mask as usize >= size {
            return err(format!("mask key {key:?} out of range for n = {n}"));
        }
        out[mask as usize] =
            scalar_from_json(val).map_err(|e| JsonError(format!("mask {key}: {e}")))?;
    }
    if !out[0].is_one() {
        return err("the empty-set value must be 1");
    }
    SubsetVector::new(n, kind, out).map_err(|e| JsonError(e.to_string()))
}

pub fn sym_values_to_json(v: &SymVector) -> Value {
    Value::from(v.values().iter().map(scalar_to_json).collect::<Vec<_>>())
}

/// Reads a bare array as a symmetrized vector. The leading entry is the
/// normalization and must be 1.
pub fn sym_vector_from_json(v: &Value, kind: CoordKind) -> Result<SymVector, JsonError> {
    let arr = v
        .as_array()
        .ok_or_else(|| JsonError("symmetrized vector wants a bare array [1, v_1, ...]".into()))?;
    if arr.is_empty() {
        return err("symmetrized vector needs at least the leading 1");
    }
    let mut values = Vec::with_capacity(arr.len());
    for (k, item) in arr.iter().enumerate() {
        values.push(scalar_from_json(item).map_err(|e| JsonError(format!("index {k}: {e}")))?);
    }
    if !values[0].is_one() {
        return err(format!("leading entry must be 1, got {}", arr[0]));
    }
    Ok(SymVector::from_tail(kind, values[1..].to_vec()))
}
