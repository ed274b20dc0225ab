//! Exact field elements.
//!
//! A [`Field`] is a runtime descriptor (the rationals, or a prime field
//! 𝔽ₚ) and a [`Scalar`] is an element carrying enough of that descriptor to
//! check compatibility. Rationals are always kept reduced with a positive
//! denominator and residues always lie in `[0, p)`, so derived equality and
//! hashing are equality of field elements.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted for prime fields. Products of two residues must
/// fit in `u64` after widening, and primality is checked by trial division.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// Ground field descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Prime field 𝔽ₚ. Rejects composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p > MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a supported prime modulus")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Residue { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Residue { value: v.rem_euclid(p as i64) as u64, modulus: p },
        }
    }

    /// Image of a rational number in this field. Fails in 𝔽ₚ when `p`
    /// divides the denominator.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let num = q.numer().mod_floor(&pb).to_u64().unwrap_or(0);
                let den = q.denom().mod_floor(&pb).to_u64().unwrap_or(0);
                if den == 0 {
                    return Err(Error::Parse(format!("denominator of {q} vanishes mod {p}")));
                }
                Ok(Scalar::Residue { value: mul_mod(num, inv_mod(den, p), p), modulus: p })
            }
        }
    }

    /// Parses `"p/q"` or an integer string.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let t = s.trim();
        let bad = || Error::Parse(format!("invalid scalar {s:?}"));
        let q = match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(t.parse::<BigInt>().map_err(|_| bad())?),
        };
        self.from_rational(&q)
    }

    /// Textual descriptor used by algebra files: `Q` or `Fp:<prime>`.
    pub fn descriptor(self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::Prime(p) => format!("Fp:{p}"),
        }
    }

    pub fn from_descriptor(s: &str) -> Result<Field> {
        let t = s.trim();
        if t == "Q" {
            return Ok(Field::Rational);
        }
        match t.strip_prefix("Fp:") {
            Some(p) => {
                let p: u64 = p.trim().parse().map_err(|_| Error::InvalidField(s.to_string()))?;
                Field::prime(p)
            }
            None => Err(Error::InvalidField(s.to_string())),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
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

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => {
                Scalar::Residue { value: inv_mod(*value, *modulus), modulus: *modulus }
            }
        })
    }

    /// `self - a * b`, the elimination kernel.
    pub fn sub_mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() || b.is_zero() {
            return self.clone();
        }
        self - &(a * b)
    }
}

#[track_caller]
fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Residue { value: (a + b) % p, modulus: *p }
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
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Residue { value: (a + p - b) % p, modulus: *p }
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
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Residue { value: mul_mod(*a, *b, *p), modulus: *p }
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
            Scalar::Residue { value, modulus } => {
                Scalar::Residue { value: (modulus - value) % modulus, modulus: *modulus }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_reduce() {
        let q = Field::Rational;
        let a = q.parse_scalar("4/6").unwrap();
        assert_eq!(a, q.parse_scalar("2/3").unwrap());
        assert_eq!(a.to_string(), "2/3");
        assert_eq!(q.parse_scalar("3/-6").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn residues_canonical() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_i64(-1), Scalar::Residue { value: 6, modulus: 7 });
        let half = f.parse_scalar("1/2").unwrap();
        assert_eq!((&half * &f.from_i64(2)), f.one());
        assert!(f.parse_scalar("1/7").is_err());
        assert_eq!((&f.from_i64(3)).inv().unwrap(), f.from_i64(5));
    }

    #[test]
    fn bad_moduli_rejected() {
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::from_descriptor("Fp:11").is_ok());
        assert!(Field::from_descriptor("R").is_err());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_arithmetic_panics() {
        let _ = &Field::Rational.one() + &Field::Prime(5).one();
    }
}
