use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The base field: the rationals or a prime field of odd characteristic.
///
/// Characteristic two is rejected at construction, so every value of this
/// type admits division by two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn prime(p: u32) -> Result<Self> {
        if p == 2 {
            return Err(Error::Field("characteristic 2 is not supported".into()));
        }
        if !is_prime(p) {
            return Err(Error::Field(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p as u64),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        self.from_i64(num)
            .checked_div(&self.from_i64(den))
            .ok_or_else(|| Error::Parse(format!("{den} is not invertible in {self}")))
    }

    /// Parses the textual scalar grammar: `n` or `n/d` over the rationals,
    /// an integer residue over GF(p). Inputs are canonicalized (lowest terms,
    /// residues reduced), so `"2/4"` and `"-1"` are accepted.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::Parse(format!("invalid scalar {text:?} for field {self}"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad());
        }
        match *self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::Prime(p) => {
                let reduce = |v: &BigInt| -> u32 {
                    let m = BigInt::from(p);
                    (((v % &m) + &m) % &m).to_u32().expect("residue fits in u32")
                };
                let n = Scalar::Residue { value: reduce(&num), modulus: p };
                let d = Scalar::Residue { value: reduce(&den), modulus: p };
                n.checked_div(&d).ok_or_else(bad)
            }
        }
    }

    /// All field elements in residue order. Only meaningful for prime fields.
    pub fn elements(&self) -> Vec<Scalar> {
        match *self {
            FieldSpec::Rationals => Vec::new(),
            FieldSpec::Prime(p) => (0..p).map(|v| Scalar::Residue { value: v, modulus: p }).collect(),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Accepts `Q`, `GF3` and `GF(3)` (case-insensitive).
impl std::str::FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        if t == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("GF")
            .map(|r| r.trim_start_matches('(').trim_end_matches(')'))
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?}")))?;
        let p: u32 = digits.parse().map_err(|_| Error::Parse(format!("unknown field {s:?}")))?;
        FieldSpec::prime(p)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
///
/// Rationals are kept in lowest terms with a positive denominator (this is
/// what `BigRational` maintains); residues are always reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|r| self * &r)
    }

    /// Multiplies by `(-1)^bit`.
    pub fn signed(self, negate: bool) -> Scalar {
        if negate {
            -self
        } else {
            self
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Residue { .. } => None,
        }
    }

    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    /// True when this is a negative rational. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue { value: ((*a as u64 + *b as u64) % *p as u64) as u32, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue { value: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue { value: ((*a as u64 * *b as u64) % *p as u64) as u32, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// JSON form of a [`FieldSpec`]: `{"kind":"Q"}` or `{"kind":"GF","p":3}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldJson {
    Q,
    GF { p: u32 },
}

impl From<FieldSpec> for FieldJson {
    fn from(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rationals => FieldJson::Q,
            FieldSpec::Prime(p) => FieldJson::GF { p },
        }
    }
}

impl TryFrom<FieldJson> for FieldSpec {
    type Error = Error;
    fn try_from(f: FieldJson) -> Result<Self> {
        match f {
            FieldJson::Q => Ok(FieldSpec::Rationals),
            FieldJson::GF { p } => FieldSpec::prime(p),
        }
    }
}
