use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{write_poly, ExactPoly};
use crate::error::Result;

/// Laurent polynomial in a single variable `q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QLaurent(ExactPoly);

impl QLaurent {
    pub fn zero() -> Self {
        Self(ExactPoly::zero(1))
    }

    pub fn one() -> Self {
        Self(ExactPoly::one(1))
    }

    /// `c·q^k`.
    pub fn monomial(k: i32, c: BigInt) -> Self {
        Self(ExactPoly::monomial(vec![k], c))
    }

    pub fn q_pow(k: i32) -> Self {
        Self::monomial(k, BigInt::one())
    }

    pub fn coeff(&self, k: i32) -> BigInt {
        self.0.coeff(&[k])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.0.terms().map(|(e, c)| (e[0], c))
    }

    /// `p(q^{-1})`.
    pub fn bar(&self) -> Self {
        Self(ExactPoly::from_terms(1, self.0.terms().map(|(e, c)| (vec![-e[0]], c.clone()))))
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.bar() == *self
    }

    pub fn div_exact(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.div_exact(&other.0)?))
    }

    pub fn as_poly(&self) -> &ExactPoly {
        &self.0
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        QLaurent(&self.0 + &rhs.0)
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        QLaurent(&self.0 - &rhs.0)
    }
}

impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        QLaurent(&self.0 * &rhs.0)
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.0.terms(), &|_| "q".to_string())
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_ascending() {
        let p = &(&QLaurent::q_pow(-1) + &QLaurent::q_pow(1)) + &QLaurent::monomial(0, BigInt::from(2));
        assert_eq!(p.to_string(), "q^-1 + 2 + q");
        assert_eq!(QLaurent::zero().to_string(), "0");
        assert_eq!(QLaurent::monomial(3, BigInt::from(-4)).to_string(), "-4*q^3");
    }

    #[test]
    fn bar_and_division() {
        let q2 = &QLaurent::q_pow(-1) + &QLaurent::q_pow(1);
        assert!(q2.is_bar_invariant());
        let sq = &q2 * &q2;
        assert_eq!(sq.div_exact(&q2).unwrap(), q2);
        assert!(QLaurent::one().div_exact(&q2).is_err());
    }
}
