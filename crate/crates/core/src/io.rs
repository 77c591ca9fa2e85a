//! JSON forms of matrices and field specifications.
//!
//! A matrix document looks like
//! `{"n": 5, "d": [2,1,2], "field": "Fp:32003", "entries": [[0,0,1,0,0], ...]}`.
//! On input, `"sparse": [[row, col, value], ...]` with 1-based indices may be
//! given instead of `entries`. Values are JSON integers or strings such as
//! `"-3"` or `"2/5"`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::composition::DimensionVector;
use crate::error::{Error, Result};
use crate::linalg::{Domain, ExactScalar, Fp, Matrix};

/// Primes available for `Fp:<p>`; prime fields are compiled per modulus.
pub const SUPPORTED_PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 101, 251, 32003, 65521];

/// Runs `$body` with the type alias `$F` bound to `Fp<p>` for a supported
/// runtime prime `p`; evaluates to `Err(UnsupportedField)` otherwise.
#[macro_export]
macro_rules! with_prime_field {
    ($p:expr, $F:ident => $body:expr) => {{
        match $p {
            2 => { type $F = $crate::Fp<2>; Ok($body) }
            3 => { type $F = $crate::Fp<3>; Ok($body) }
            5 => { type $F = $crate::Fp<5>; Ok($body) }
            7 => { type $F = $crate::Fp<7>; Ok($body) }
            11 => { type $F = $crate::Fp<11>; Ok($body) }
            13 => { type $F = $crate::Fp<13>; Ok($body) }
            101 => { type $F = $crate::Fp<101>; Ok($body) }
            251 => { type $F = $crate::Fp<251>; Ok($body) }
            32003 => { type $F = $crate::Fp<32003>; Ok($body) }
            65521 => { type $F = $crate::Fp<65521>; Ok($body) }
            other => Err($crate::Error::UnsupportedField(format!(
                "F_{other} (supported primes: {:?})",
                $crate::io::SUPPORTED_PRIMES
            ))),
        }
    }};
}

impl FromStr for Domain {
    type Err = Error;

    /// Accepts `Z`, `Q`, `Fp:<p>`, `F<p>` or a bare prime `p`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let domain = match s {
            "Z" | "z" => Domain::Z,
            "Q" | "q" => Domain::Q,
            _ => {
                let digits = s
                    .strip_prefix("Fp:")
                    .or_else(|| s.strip_prefix("F_"))
                    .or_else(|| s.strip_prefix('F'))
                    .unwrap_or(s);
                let p: u64 = digits
                    .parse()
                    .map_err(|_| Error::UnsupportedField(format!("cannot parse field {s:?}")))?;
                if !SUPPORTED_PRIMES.contains(&p) {
                    return Err(Error::UnsupportedField(format!(
                        "F_{p} (supported primes: {SUPPORTED_PRIMES:?})"
                    )));
                }
                Domain::Fp(p)
            }
        };
        Ok(domain)
    }
}

/// Scalars that can be read from and written to matrix documents.
pub trait EntryScalar: ExactScalar {
    fn from_rational(q: &BigRational) -> Result<Self>;
    fn to_json(&self) -> Value;
}

fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

impl EntryScalar for BigInt {
    fn from_rational(q: &BigRational) -> Result<Self> {
        if q.is_integer() {
            Ok(q.to_integer())
        } else {
            Err(Error::MalformedMatrix(format!("{q} is not an integer")))
        }
    }

    fn to_json(&self) -> Value {
        int_json(self)
    }
}

impl EntryScalar for BigRational {
    fn from_rational(q: &BigRational) -> Result<Self> {
        Ok(q.clone())
    }

    fn to_json(&self) -> Value {
        if self.is_integer() {
            int_json(&self.to_integer())
        } else {
            Value::from(self.to_string())
        }
    }
}

impl<const P: u64> EntryScalar for Fp<P> {
    fn from_rational(q: &BigRational) -> Result<Self> {
        let p = BigInt::from(P);
        let red = |x: &BigInt| -> u64 {
            let r = ((x % &p) + &p) % &p;
            r.to_u64().expect("reduced below p")
        };
        let den = red(q.denom());
        if den == 0 {
            return Err(Error::MalformedMatrix(format!("denominator of {q} vanishes mod {P}")));
        }
        Ok(Fp::new(red(q.numer())) / Fp::new(den))
    }

    fn to_json(&self) -> Value {
        Value::from(self.value())
    }
}

fn parse_value(v: &Value) -> Result<BigRational> {
    let bad = || Error::MalformedMatrix(format!("bad entry {v}"));
    match v {
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Ok(BigRational::from_integer(BigInt::from(i)))
            } else if let Some(u) = num.as_u64() {
                Ok(BigRational::from_integer(BigInt::from(u)))
            } else {
                Err(bad())
            }
        }
        Value::String(s) => {
            let s = s.trim();
            let (n, d) = match s.split_once('/') {
                Some((n, d)) => (n.trim(), d.trim()),
                None => (s, "1"),
            };
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        _ => Err(bad()),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub n: usize,
    pub d: Vec<usize>,
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sparse: Option<Vec<(usize, usize, Value)>>,
}

impl MatrixDoc {
    pub fn from_matrix<S: EntryScalar>(a: &Matrix<S>, d: &DimensionVector) -> Self {
        MatrixDoc {
            n: a.rows(),
            d: d.parts().to_vec(),
            field: S::domain().to_string(),
            entries: Some(a.to_rows().iter().map(|r| r.iter().map(EntryScalar::to_json).collect()).collect()),
            sparse: None,
        }
    }

    pub fn domain(&self) -> Result<Domain> {
        self.field.parse()
    }

    pub fn dims(&self) -> Result<DimensionVector> {
        let d = DimensionVector::new(self.d.clone())?;
        if d.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: d.n(),
                found: self.n,
            });
        }
        Ok(d)
    }

    /// Reads the entries into scalars of type `S` (rationals are reduced for
    /// prime fields).
    pub fn to_matrix<S: EntryScalar>(&self) -> Result<Matrix<S>> {
        let n = self.n;
        let mut a = Matrix::zeros(n, n);
        match (&self.entries, &self.sparse) {
            (Some(rows), None) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::MalformedMatrix(format!("entries must be {n}x{n}")));
                }
                for (r, row) in rows.iter().enumerate() {
                    for (c, v) in row.iter().enumerate() {
                        a[(r, c)] = S::from_rational(&parse_value(v)?)?;
                    }
                }
            }
            (None, Some(triples)) => {
                for (r, c, v) in triples {
                    if *r == 0 || *c == 0 || *r > n || *c > n {
                        return Err(Error::MalformedMatrix(format!("sparse index ({r},{c}) out of 1..={n}")));
                    }
                    a[(r - 1, c - 1)] = S::from_rational(&parse_value(v)?)?;
                }
            }
            _ => return Err(Error::MalformedMatrix("exactly one of entries/sparse is required".into())),
        }
        Ok(a)
    }
}

/// `Σ E_uv` notation with 1-based indices for 0/1 matrices, e.g. `E14+E45`;
/// other entries are written as coefficients, e.g. `3*E13`.
pub fn elementary_sum<S: EntryScalar>(a: &Matrix<S>) -> String {
    let terms: Vec<String> = a
        .support()
        .into_iter()
        .map(|(r, c)| {
            let v = &a[(r, c)];
            let e = if a.rows() > 9 { format!("E{},{}", r + 1, c + 1) } else { format!("E{}{}", r + 1, c + 1) };
            if v.is_one() { e } else { format!("{}*{e}", v.to_json().to_string().trim_matches('"')) }
        })
        .collect();
    if terms.is_empty() { "0".into() } else { terms.join("+") }
}
