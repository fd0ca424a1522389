//! Exact field scalars: rationals or prime-field elements (p ≠ 2).
//!
//! Every algebraic object in this crate fixes one [`Field`] at construction;
//! mixing scalars from different fields is a programming error and panics.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The ground field of an algebra instance.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Field {
    /// The rational numbers ℚ.
    Rationals,
    /// The prime field 𝔽_p. Characteristic 2 is rejected.
    Prime(u64),
}

impl Field {
    /// Characteristic of the field (0 for ℚ).
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    /// Checks that the field is usable: p must be an odd prime.
    pub fn validate(&self) -> Result<(), FieldError> {
        match self {
            Field::Rationals => Ok(()),
            Field::Prime(p) => {
                if *p == 2 {
                    return Err(FieldError::CharacteristicTwo);
                }
                if *p < 2 || !is_prime(*p) {
                    return Err(FieldError::NotPrime(*p));
                }
                Ok(())
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(p) => Scalar::Mod(0, *p),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Prime(p) => Scalar::Mod(1, *p),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Mod(m, *p)
            }
        }
    }

    /// Builds n/d in the field. For 𝔽_p the denominator is inverted mod p.
    pub fn fraction(&self, n: i64, d: i64) -> Scalar {
        assert!(d != 0, "zero denominator");
        let num = self.from_i64(n);
        let den = self.from_i64(d);
        num / den
    }

    /// Parses a decimal-free rational string such as `-3/4` or `7`.
    pub fn parse(&self, s: &str) -> Result<Scalar, FieldError> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num_str
            .parse()
            .map_err(|_| FieldError::Parse(s.to_string()))?;
        let den: BigInt = den_str
            .parse()
            .map_err(|_| FieldError::Parse(s.to_string()))?;
        if den.is_zero() {
            return Err(FieldError::Parse(s.to_string()));
        }
        match self {
            Field::Rationals => Ok(Scalar::Rat(BigRational::new(num, den))),
            Field::Prime(p) => {
                let pm = BigInt::from(*p);
                let nm = ((num % &pm) + &pm) % &pm;
                let dm = ((den % &pm) + &pm) % &pm;
                let n64: u64 = nm.try_into().unwrap();
                let d64: u64 = dm.try_into().unwrap();
                if d64 == 0 {
                    return Err(FieldError::Parse(s.to_string()));
                }
                Ok(Scalar::Mod(n64, *p) * Scalar::Mod(d64, *p).inv())
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FieldError {
    CharacteristicTwo,
    NotPrime(u64),
    Parse(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::CharacteristicTwo => write!(f, "characteristic 2 is not supported"),
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::Parse(s) => write!(f, "cannot parse scalar `{s}`"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for FieldError {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar: a rational number or an element of 𝔽_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64, u64),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::Mod(_, p) => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod(v, _) => *v == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => {
                assert!(!r.is_zero(), "division by zero");
                Scalar::Rat(r.recip())
            }
            Scalar::Mod(v, p) => {
                assert!(*v != 0, "division by zero");
                Scalar::Mod(mod_inv(*v, *p), *p)
            }
        }
    }

    /// The underlying rational, if the field is ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod(..) => None,
        }
    }

    fn match_fields(&self, other: &Scalar) {
        match (self, other) {
            (Scalar::Rat(_), Scalar::Rat(_)) => {}
            (Scalar::Mod(_, p), Scalar::Mod(_, q)) if p == q => {}
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p), p prime
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "not invertible mod {p}");
    (t.rem_euclid(p as i128)) as u64
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.match_fields(&rhs);
                match (self, rhs) {
                    (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a $op b),
                    (Scalar::Mod(a, p), Scalar::Mod(b, _)) => {
                        let r = scalar_binop!(@mod $method, a, b, p);
                        Scalar::Mod(r, p)
                    }
                    _ => unreachable!(),
                }
            }
        }
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.clone().$method(rhs.clone())
            }
        }
    };
    (@mod add, $a:ident, $b:ident, $p:ident) => { (($a as u128 + $b as u128) % $p as u128) as u64 };
    (@mod sub, $a:ident, $b:ident, $p:ident) => { (($a as u128 + $p as u128 - $b as u128) % $p as u128) as u64 };
    (@mod mul, $a:ident, $b:ident, $p:ident) => { (($a as u128 * $b as u128) % $p as u128) as u64 };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        let inv = rhs.inv();
        self * inv
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Mod(v, p) => Scalar::Mod(if v == 0 { 0 } else { p - v }, p),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = self.clone() + rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = self.clone() - rhs;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = self.clone() * rhs;
    }
}

impl Scalar {
    /// Absolute height used to order witness-search candidates: |num|+|den|.
    pub fn height(&self) -> u64 {
        match self {
            Scalar::Rat(r) => {
                let n = r.numer().abs();
                let d = r.denom().abs();
                let sum = n + d;
                sum.try_into().unwrap_or(u64::MAX)
            }
            Scalar::Mod(v, _) => *v,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = Field::Rationals;
        let half = q.fraction(1, 2);
        let third = q.fraction(1, 3);
        let sum = half.clone() + third.clone();
        assert_eq!(sum, q.fraction(5, 6));
        assert_eq!(half * third, q.fraction(1, 6));
        assert_eq!(q.parse("-3/4").unwrap(), q.fraction(-3, 4));
        assert_eq!(q.parse("7").unwrap(), q.from_i64(7));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::Prime(7);
        assert!(f.validate().is_ok());
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(a.clone() + b.clone(), f.from_i64(1));
        assert_eq!(a.clone() * b.clone(), f.from_i64(1));
        assert_eq!(a.inv(), f.from_i64(5));
        assert_eq!(f.fraction(1, 2), f.from_i64(4));
        assert_eq!(-f.from_i64(2), f.from_i64(5));
    }

    #[test]
    fn characteristic_two_rejected() {
        assert_eq!(
            Field::Prime(2).validate(),
            Err(FieldError::CharacteristicTwo)
        );
        assert_eq!(Field::Prime(9).validate(), Err(FieldError::NotPrime(9)));
        assert!(Field::Prime(3).validate().is_ok());
    }

    #[test]
    #[should_panic(expected = "mixed-field")]
    fn mixed_fields_panic() {
        let _ = Field::Rationals.one() + Field::Prime(5).one();
    }
}
