//! Coefficient fields: ℚ and 𝔽_p for primes below 2^31.
//!
//! Coefficients are always `BigRational`. Over 𝔽_p they are kept as
//! integers in `0..p`.

use crate::error::{KrullError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(KrullError::unsupported(format!("GF({p}): characteristic must be below 2^31")));
        }
        if !is_prime(p) {
            return Err(KrullError::input(format!("GF({p}): {p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    /// Canonical representative, or `None` when the denominator vanishes
    /// in characteristic `p`.
    pub fn try_norm(&self, c: &BigRational) -> Option<BigRational> {
        match self {
            Field::Rationals => Some(c.clone()),
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                let num = c.numer().mod_floor(&p);
                let den = c.denom().mod_floor(&p);
                if den.is_zero() {
                    return None;
                }
                let inv = den.modpow(&(&p - 2u32), &p);
                Some(BigRational::from_integer((num * inv).mod_floor(&p)))
            }
        }
    }

    pub fn norm(&self, c: &BigRational) -> BigRational {
        self.try_norm(c)
            .unwrap_or_else(|| panic!("{c} has no image in {self}"))
    }

    pub fn from_int(&self, n: impl Into<BigInt>) -> BigRational {
        self.norm(&BigRational::from_integer(n.into()))
    }

    pub fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.norm(&(a + b))
    }

    pub fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.norm(&(a - b))
    }

    pub fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.norm(&(a * b))
    }

    pub fn neg(&self, a: &BigRational) -> BigRational {
        self.norm(&-a)
    }

    /// Panics on zero.
    pub fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "division by zero in {self}");
        self.norm(&a.recip())
    }

    pub fn div(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.mul(a, &self.inv(b))
    }

    /// Integers print as integers; over 𝔽_p values above `p/2` print as
    /// negatives so that small polynomials stay readable.
    pub fn format(&self, c: &BigRational) -> String {
        match self {
            Field::Rationals => {
                if c.is_integer() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            }
            Field::Prime(p) => {
                let v = c.numer().to_u64().unwrap_or(0);
                if v > p / 2 {
                    format!("-{}", p - v)
                } else {
                    v.to_string()
                }
            }
        }
    }

    pub fn is_negative_repr(&self, c: &BigRational) -> bool {
        match self {
            Field::Rationals => c.is_negative(),
            Field::Prime(p) => c.numer().to_u64().is_some_and(|v| v > p / 2),
        }
    }

    pub fn is_one(&self, c: &BigRational) -> bool {
        c.is_one()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.norm(&q(1, 3)), q(5, 1));
        assert_eq!(f.mul(&q(3, 1), &f.inv(&q(3, 1))), q(1, 1));
        assert_eq!(f.format(&q(6, 1)), "-1");
        assert!(f.try_norm(&q(1, 7)).is_none());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1 << 31).is_err());
    }

    #[test]
    fn rationals_stay_exact() {
        let f = Field::Rationals;
        assert_eq!(f.add(&q(1, 2), &q(1, 3)), q(5, 6));
        assert_eq!(f.format(&q(-3, 4)), "-3/4");
    }
}
