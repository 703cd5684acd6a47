//! JSON wire formats. Structural counts (ranks, row counts, `n`) are
//! plain JSON numbers; every mathematical integer is a decimal string so
//! that arbitrary-precision values survive any JSON parser untouched;
//! rationals are `"numerator/denominator"` strings. Parsers are lenient
//! and also accept plain JSON integers where a string is expected.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeVector};
use crate::matrix::IntMat;

pub fn bigint_to_value(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn bigint_from_value(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| Error::InvalidParameter(format!("not an integer: {s:?}"))),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::InvalidParameter(format!(
                    "not an integer: {n} (use a decimal string for non-integers)"
                )))
            }
        }
        other => Err(Error::InvalidParameter(format!(
            "expected an integer, got {other}"
        ))),
    }
}

pub fn vector_to_value(coords: &[BigInt]) -> Value {
    Value::Array(coords.iter().map(bigint_to_value).collect())
}

pub fn vector_from_value(v: &Value) -> Result<Vec<BigInt>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidParameter(format!("expected a vector array, got {v}")))?;
    arr.iter().map(bigint_from_value).collect()
}

pub fn matrix_to_value(m: &IntMat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| vector_to_value(&m.row(i)))
            .collect(),
    )
}

/// Accepts either a bare 2D array or an object carrying the matrix under
/// a `"gram"` key (the lattice wire format).
pub fn matrix_from_value(v: &Value) -> Result<IntMat> {
    let arr = match v {
        Value::Array(a) => a,
        Value::Object(o) => o
            .get("gram")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidParameter("object lacks a \"gram\" array".into()))?,
        other => {
            return Err(Error::InvalidParameter(format!(
                "expected a matrix, got {other}"
            )))
        }
    };
    let rows: Result<Vec<Vec<BigInt>>> = arr.iter().map(vector_from_value).collect();
    IntMat::from_rows(rows?)
}

pub fn lattice_to_value(l: &Lattice) -> Value {
    json!({
        "rank": l.rank(),
        "gram": matrix_to_value(l.gram()),
    })
}

pub fn lattice_from_value(v: &Value) -> Result<Lattice> {
    let gram = matrix_from_value(v)?;
    if let Some(rank) = v.get("rank") {
        let r = rank
            .as_u64()
            .ok_or_else(|| Error::InvalidParameter("\"rank\" must be a number".into()))?;
        if r as usize != gram.rows() {
            return Err(Error::InvalidParameter(format!(
                "declared rank {r} does not match a {}x{} gram matrix",
                gram.rows(),
                gram.cols()
            )));
        }
    }
    Lattice::new(gram)
}

pub fn lattice_vector_to_value(v: &LatticeVector) -> Value {
    vector_to_value(v.coords())
}

pub fn rational_to_value(x: &BigRational) -> Value {
    if x.denom().is_one() {
        Value::String(x.numer().to_string())
    } else {
        Value::String(format!("{}/{}", x.numer(), x.denom()))
    }
}

pub fn rational_from_value(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => {
            let s = s.trim();
            match s.split_once('/') {
                Some((num, den)) => {
                    let n = num.trim().parse::<BigInt>().map_err(|_| {
                        Error::InvalidParameter(format!("bad rational numerator: {s:?}"))
                    })?;
                    let d = den.trim().parse::<BigInt>().map_err(|_| {
                        Error::InvalidParameter(format!("bad rational denominator: {s:?}"))
                    })?;
                    if d == BigInt::from(0) {
                        return Err(Error::InvalidParameter("zero denominator".into()));
                    }
                    Ok(BigRational::new(n, d))
                }
                None => Ok(BigRational::from(s.parse::<BigInt>().map_err(|_| {
                    Error::InvalidParameter(format!("not a rational: {s:?}"))
                })?)),
            }
        }
        Value::Number(_) => Ok(BigRational::from(bigint_from_value(v)?)),
        other => Err(Error::InvalidParameter(format!(
            "expected a rational, got {other}"
        ))),
    }
}

pub fn rational_vector_from_value(v: &Value) -> Result<Vec<BigRational>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidParameter(format!("expected a vector array, got {v}")))?;
    arr.iter().map(rational_from_value).collect()
}

pub fn rational_vector_to_value(w: &[BigRational]) -> Value {
    Value::Array(w.iter().map(rational_to_value).collect())
}

/// Fetches a required object field.
pub fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::InvalidParameter(format!("missing field {key:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn integers_round_trip_as_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let v = bigint_to_value(&big);
        assert_eq!(v, Value::String("123456789012345678901234567890".into()));
        assert_eq!(bigint_from_value(&v).unwrap(), big);
        // Plain JSON numbers are accepted on input.
        assert_eq!(bigint_from_value(&json!(-42)).unwrap(), BigInt::from(-42));
        assert!(bigint_from_value(&json!(1.5)).is_err());
        assert!(bigint_from_value(&json!("abc")).is_err());
    }

    #[test]
    fn matrices_round_trip() {
        let m = IntMat::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let v = matrix_to_value(&m);
        assert_eq!(matrix_from_value(&v).unwrap(), m);
        let l = Lattice::new(m).unwrap();
        let lv = lattice_to_value(&l);
        assert_eq!(lv["rank"], json!(2));
        assert_eq!(lattice_from_value(&lv).unwrap(), l);
        // Rank mismatch is rejected.
        let bad = json!({"rank": 3, "gram": [["0","1"],["1","0"]]});
        assert!(lattice_from_value(&bad).is_err());
    }

    #[test]
    fn rationals_round_trip() {
        let x = BigRational::new(BigInt::from(-3), BigInt::from(6));
        let v = rational_to_value(&x);
        assert_eq!(v, Value::String("-1/2".into()));
        assert_eq!(rational_from_value(&v).unwrap(), x);
        assert_eq!(
            rational_from_value(&json!("7")).unwrap(),
            BigRational::from(BigInt::from(7))
        );
        assert_eq!(
            rational_from_value(&json!(0)).unwrap(),
            BigRational::zero()
        );
        assert!(rational_from_value(&json!("1/0")).is_err());
    }
}
