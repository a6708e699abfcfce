//! Exact scalar rings: arbitrary-precision integers, rationals, and
//! one-variable Laurent polynomials with integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ring {
    #[serde(rename = "int")]
    Int,
    #[serde(rename = "rat")]
    Rat,
    #[serde(rename = "laurent")]
    Laurent,
}

impl Ring {
    pub fn name(self) -> &'static str {
        match self {
            Ring::Int => "int",
            Ring::Rat => "rat",
            Ring::Laurent => "laurent",
        }
    }
}

/// Laurent polynomial: a dense coefficient window starting at exponent
/// `lo`, trimmed so that neither end coefficient is zero (the zero
/// polynomial is the empty window).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    pub lo: i64,
    pub coeffs: Vec<BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Laurent::single(0, c)
    }

    /// `c * q^e`
    pub fn single(e: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Laurent::zero()
        } else {
            Laurent { lo: e, coeffs: vec![c] }
        }
    }

    pub fn from_window(lo: i64, coeffs: Vec<BigInt>) -> Self {
        Laurent { lo, coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.lo += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.lo {
            return BigInt::zero();
        }
        let k = (e - self.lo) as usize;
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = (self.lo + self.coeffs.len() as i64).max(other.lo + other.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.lo - lo) as usize + k] += c;
        }
        Laurent { lo, coeffs }.trimmed()
    }

    pub fn neg(&self) -> Laurent {
        Laurent {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                coeffs[a + b] += ca * cb;
            }
        }
        Laurent {
            lo: self.lo + other.lo,
            coeffs,
        }
        .trimmed()
    }

    /// Units of the Laurent ring are the monomials with coefficient +-1.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn unit_inverse(&self) -> Option<Laurent> {
        if self.is_unit() {
            Some(Laurent::single(-self.lo, self.coeffs[0].clone()))
        } else {
            None
        }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.lo + k as i64;
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// A scalar from one of the three exact rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(BigInt),
    Rat(BigRational),
    Laurent(Laurent),
}

impl Value {
    pub fn ring(&self) -> Ring {
        match self {
            Value::Int(_) => Ring::Int,
            Value::Rat(_) => Ring::Rat,
            Value::Laurent(_) => Ring::Laurent,
        }
    }

    pub fn zero(ring: Ring) -> Value {
        match ring {
            Ring::Int => Value::Int(BigInt::zero()),
            Ring::Rat => Value::Rat(BigRational::zero()),
            Ring::Laurent => Value::Laurent(Laurent::zero()),
        }
    }

    pub fn one(ring: Ring) -> Value {
        match ring {
            Ring::Int => Value::Int(BigInt::one()),
            Ring::Rat => Value::Rat(BigRational::one()),
            Ring::Laurent => Value::Laurent(Laurent::constant(1)),
        }
    }

    pub fn from_int(ring: Ring, k: i64) -> Value {
        match ring {
            Ring::Int => Value::Int(k.into()),
            Ring::Rat => Value::Rat(BigRational::from_integer(k.into())),
            Ring::Laurent => Value::Laurent(Laurent::constant(k)),
        }
    }

    /// `q^e` in the Laurent ring.
    pub fn monomial(e: i64) -> Value {
        Value::Laurent(Laurent::single(e, 1))
    }

    pub fn rational(num: i64, den: i64) -> Value {
        Value::Rat(BigRational::new(num.into(), den.into()))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Int(a) => a.is_zero(),
            Value::Rat(a) => a.is_zero(),
            Value::Laurent(a) => a.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Value::Int(a) => a.is_one(),
            Value::Rat(a) => a.is_one(),
            Value::Laurent(a) => a.coeffs.len() == 1 && a.lo == 0 && a.coeffs[0].is_one(),
        }
    }

    /// Multiplicative inverse, when one exists in the ring.
    pub fn inverse(&self) -> Result<Value> {
        match self {
            Value::Int(a) => {
                if a.abs().is_one() {
                    Ok(Value::Int(a.clone()))
                } else {
                    Err(Error::NotInvertible)
                }
            }
            Value::Rat(a) => {
                if a.is_zero() {
                    Err(Error::NotInvertible)
                } else {
                    Ok(Value::Rat(a.recip()))
                }
            }
            Value::Laurent(a) => a
                .unit_inverse()
                .map(Value::Laurent)
                .ok_or(Error::NotInvertible),
        }
    }

    fn mismatch(&self, other: &Value) -> ! {
        panic!(
            "ring mismatch in scalar arithmetic: {} vs {}",
            self.ring().name(),
            other.ring().name()
        );
    }
}

impl Add for &Value {
    type Output = Value;
    fn add(self, rhs: &Value) -> Value {
        match (self, rhs) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a + b),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Laurent(a), Value::Laurent(b)) => Value::Laurent(a.add(b)),
            _ => self.mismatch(rhs),
        }
    }
}

impl Sub for &Value {
    type Output = Value;
    fn sub(self, rhs: &Value) -> Value {
        self + &(-rhs)
    }
}

impl Mul for &Value {
    type Output = Value;
    fn mul(self, rhs: &Value) -> Value {
        match (self, rhs) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a * b),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Laurent(a), Value::Laurent(b)) => Value::Laurent(a.mul(b)),
            _ => self.mismatch(rhs),
        }
    }
}

impl Neg for &Value {
    type Output = Value;
    fn neg(self) -> Value {
        match self {
            Value::Int(a) => Value::Int(-a),
            Value::Rat(a) => Value::Rat(-a),
            Value::Laurent(a) => Value::Laurent(a.neg()),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(a) => write!(f, "{a}"),
            Value::Rat(a) => write!(f, "{a}"),
            Value::Laurent(a) => write!(f, "{a}"),
        }
    }
}

// --- serialization -------------------------------------------------------
//
// int entries: JSON number (decimal string when out of i64 range)
// rat entries: "num/den" string, plain numbers accepted
// laurent entries: {"lo": E, "coeffs": [...]}

fn bigint_to_json(a: &BigInt) -> serde_json::Value {
    match i64::try_from(a.clone()) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(a.to_string()),
    }
}

fn bigint_from_json(v: &serde_json::Value) -> Option<BigInt> {
    if let Some(k) = v.as_i64() {
        return Some(k.into());
    }
    v.as_str().and_then(|s| s.parse().ok())
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Int(a) => bigint_to_json(a).serialize(ser),
            Value::Rat(a) => {
                if a.is_integer() {
                    bigint_to_json(a.numer()).serialize(ser)
                } else {
                    format!("{}/{}", a.numer(), a.denom()).serialize(ser)
                }
            }
            Value::Laurent(a) => {
                let coeffs: Vec<serde_json::Value> = a.coeffs.iter().map(bigint_to_json).collect();
                serde_json::json!({"lo": a.lo, "coeffs": coeffs}).serialize(ser)
            }
        }
    }
}

/// Entries deserialize through a tagged helper because the ring is stored
/// once per matrix, not per entry.
pub fn value_from_json(ring: Ring, v: &serde_json::Value) -> Result<Value> {
    let bad = || Error::Parse(format!("bad {} entry: {v}", ring.name()));
    match ring {
        Ring::Int => bigint_from_json(v).map(Value::Int).ok_or_else(bad),
        Ring::Rat => {
            if let Some(a) = bigint_from_json(v) {
                if v.as_str().map_or(true, |s| !s.contains('/')) {
                    return Ok(Value::Rat(BigRational::from_integer(a)));
                }
            }
            let s = v.as_str().ok_or_else(bad)?;
            let (num, den) = s.split_once('/').ok_or_else(bad)?;
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Value::Rat(BigRational::new(num, den)))
        }
        Ring::Laurent => {
            let lo = v.get("lo").and_then(|x| x.as_i64()).ok_or_else(bad)?;
            let coeffs = v
                .get("coeffs")
                .and_then(|x| x.as_array())
                .ok_or_else(bad)?
                .iter()
                .map(|x| bigint_from_json(x).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()?;
            Ok(Value::Laurent(Laurent::from_window(lo, coeffs)))
        }
    }
}

impl<'de> Deserialize<'de> for Ring {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        match s.as_str() {
            "int" => Ok(Ring::Int),
            "rat" => Ok(Ring::Rat),
            "laurent" => Ok(Ring::Laurent),
            other => Err(D::Error::custom(format!("unknown ring `{other}`"))),
        }
    }
}

impl Serialize for Ring {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.name())
    }
}
