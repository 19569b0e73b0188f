use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Prime field of characteristic `p`; rejects composite moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::Invalid(format!("prime {p} exceeds the supported 32-bit range")));
        }
        Ok(Field::Prime(p))
    }

    /// Parses the textual descriptor `Q` or `Fp:<prime>`.
    pub fn parse_descriptor(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime in field descriptor `{s}`")))?;
            return Field::prime(p);
        }
        Err(Error::Parse(format!("unknown field descriptor `{s}` (expected `Q` or `Fp:<prime>`)")))
    }

    pub fn descriptor(&self) -> String {
        match self {
            Field::Rationals => "Q".to_string(),
            Field::Prime(p) => format!("Fp:{p}"),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Small(Ratio::from_integer(n)),
            Field::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    /// `num / den` in this field; fails when `den` vanishes in the field.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        d.inv()
            .map(|di| &self.from_i64(num) * &di)
            .ok_or_else(|| Error::Invalid(format!("{num}/{den}: denominator vanishes in {}", self.descriptor())))
    }

    /// Parses a decimal integer or a fraction `p/q`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let bad = || Error::Parse(format!("`{s}` is not an exact field element"));
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Parse(format!("`{s}` has a zero denominator")));
        }
        match self {
            Field::Rationals => Ok(Scalar::from_big(BigRational::new(num, den))),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let n = num.mod_floor(&pb).to_u64().unwrap();
                let d = den.mod_floor(&pb).to_u64().unwrap();
                let dn = Scalar::Mod { value: d, modulus: *p };
                let dinv = dn.inv().ok_or_else(|| {
                    Error::Parse(format!("`{s}`: denominator vanishes modulo {p}"))
                })?;
                Ok(&Scalar::Mod { value: n, modulus: *p } * &dinv)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
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
/// Rationals use a machine-word fast path and promote to arbitrary precision
/// on overflow, so arithmetic never rounds or wraps.
#[derive(Clone, Debug)]
pub enum Scalar {
    Small(Ratio<i64>),
    Big(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    fn from_big(r: BigRational) -> Scalar {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar::Small(Ratio::new_raw(n, d)),
            _ => Scalar::Big(r),
        }
    }

    fn to_big(r: &Ratio<i64>) -> BigRational {
        BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Small(_) | Scalar::Big(_) => Field::Rationals,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_zero(),
            Scalar::Big(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_one(),
            Scalar::Big(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Small(r) => match r.numer().checked_abs() {
                Some(_) => Scalar::Small(r.recip()),
                None => Scalar::from_big(Self::to_big(r).recip()),
            },
            Scalar::Big(r) => Scalar::from_big(r.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// `self + a * b`, the accumulation step of every matrix product.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        let p = a * b;
        *self = &*self + &p;
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut acc = 1u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!(
        "field mismatch: {} vs {}",
        a.field().descriptor(),
        b.field().descriptor()
    )
}

macro_rules! rational_op {
    ($a:expr, $b:expr, $checked:ident, $op:tt) => {
        match ($a, $b) {
            (Scalar::Small(x), Scalar::Small(y)) => match x.$checked(y) {
                Some(r) => Scalar::Small(r),
                None => Scalar::from_big(Scalar::to_big(x) $op Scalar::to_big(y)),
            },
            (Scalar::Small(x), Scalar::Big(y)) => Scalar::from_big(Scalar::to_big(x) $op y),
            (Scalar::Big(x), Scalar::Small(y)) => Scalar::from_big(x $op Scalar::to_big(y)),
            (Scalar::Big(x), Scalar::Big(y)) => Scalar::from_big(x $op y),
            (a, b) => mismatch(a, b),
        }
    };
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        if let (Scalar::Mod { value: x, modulus: p }, Scalar::Mod { value: y, modulus: q }) = (self, rhs) {
            if p != q {
                mismatch(self, rhs);
            }
            return Scalar::Mod {
                value: ((*x as u128 + *y as u128) % *p as u128) as u64,
                modulus: *p,
            };
        }
        rational_op!(self, rhs, checked_add, +)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        if let (Scalar::Mod { value: x, modulus: p }, Scalar::Mod { value: y, modulus: q }) = (self, rhs) {
            if p != q {
                mismatch(self, rhs);
            }
            return Scalar::Mod {
                value: ((*x as u128 + *p as u128 - *y as u128) % *p as u128) as u64,
                modulus: *p,
            };
        }
        rational_op!(self, rhs, checked_sub, -)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if let (Scalar::Mod { value: x, modulus: p }, Scalar::Mod { value: y, modulus: q }) = (self, rhs) {
            if p != q {
                mismatch(self, rhs);
            }
            return Scalar::Mod {
                value: ((*x as u128 * *y as u128) % *p as u128) as u64,
                modulus: *p,
            };
        }
        rational_op!(self, rhs, checked_mul, *)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        if rhs.is_zero() {
            panic!("division by zero");
        }
        if let Scalar::Mod { .. } = self {
            return self * &rhs.inv().unwrap();
        }
        rational_op!(self, rhs, checked_div, /)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Small(r) => match r.numer().checked_neg() {
                Some(n) => Scalar::Small(Ratio::new_raw(n, *r.denom())),
                None => Scalar::from_big(-Scalar::to_big(r)),
            },
            Scalar::Big(r) => Scalar::from_big(-r),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
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

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Small(x), Scalar::Small(y)) => x == y,
            (Scalar::Big(x), Scalar::Big(y)) => x == y,
            (Scalar::Small(x), Scalar::Big(y)) | (Scalar::Big(y), Scalar::Small(x)) => {
                &Scalar::to_big(x) == y
            }
            (Scalar::Mod { value: x, modulus: p }, Scalar::Mod { value: y, modulus: q }) => {
                p == q && x == y
            }
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Big(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Scalar {
    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_negative(),
            Scalar::Big(r) => r.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_to_big() {
        let q = Field::Rationals;
        let big = q.from_i64(i64::MAX);
        let s = &big + &big;
        assert!(matches!(s, Scalar::Big(_)));
        let back = &s - &big;
        assert!(matches!(back, Scalar::Small(_)));
        assert_eq!(back, big);
        let sq = &big * &big;
        assert_eq!(&sq / &big, big);
    }

    #[test]
    fn min_value_negation_is_exact() {
        let q = Field::Rationals;
        let m = q.from_i64(i64::MIN);
        let n = -&m;
        assert_eq!(&n + &m, q.zero());
        assert_eq!(m.inv().unwrap().inv().unwrap(), m);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let three = f.from_i64(3);
        assert_eq!(&three * &three.inv().unwrap(), f.one());
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(4));
        assert_eq!(f.parse("-1").unwrap(), f.from_i64(6));
        assert!(f.parse("1/7").is_err());
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn parse_rationals() {
        let q = Field::Rationals;
        assert_eq!(q.parse("-6/4").unwrap(), q.ratio(-3, 2).unwrap());
        assert_eq!(q.parse(" 12 ").unwrap(), q.from_i64(12));
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
        assert_eq!(q.parse("-3/2").unwrap().to_string(), "-3/2");
        assert_eq!(
            q.parse("123456789012345678901234567890").unwrap().to_string(),
            "123456789012345678901234567890"
        );
    }

    #[test]
    fn descriptors() {
        assert_eq!(Field::parse_descriptor("Q").unwrap(), Field::Rationals);
        assert_eq!(Field::parse_descriptor("Fp:5").unwrap(), Field::Prime(5));
        assert!(Field::parse_descriptor("Fp:6").is_err());
        assert!(Field::parse_descriptor("R").is_err());
    }
}
