use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Multivariate polynomial with arbitrary-size integer coefficients.
///
/// Exponents are signed so the same type carries Laurent polynomials in `q`;
/// every other use keeps them nonnegative. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactPoly {
    arity: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl ExactPoly {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigInt::one())
    }

    pub fn constant(arity: usize, c: BigInt) -> Self {
        Self::monomial(vec![0; arity], c)
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index {i} out of range for arity {arity}");
        let mut e = vec![0; arity];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn monomial(exps: Vec<i32>, c: BigInt) -> Self {
        let arity = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { arity, terms }
    }

    pub fn from_terms<I>(arity: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, BigInt)>,
    {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            assert_eq!(e.len(), arity);
            p.add_term(e, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Lexicographically largest exponent vector with its coefficient.
    pub fn leading(&self) -> Option<(&Vec<i32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exps: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, exps: &[i32], c: &BigInt) -> Self {
        assert_eq!(exps.len(), self.arity);
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Self {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), v * c))
                .collect(),
        }
    }

    /// Multiply by `x_{i+1}^k`.
    pub fn mul_var_pow(&self, i: usize, k: i32) -> Self {
        Self {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| {
                    let mut e = e.clone();
                    e[i] += k;
                    (e, v.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.arity);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exchange variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        Self {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| {
                    let mut e = e.clone();
                    e.swap(i, j);
                    (e, v.clone())
                })
                .collect(),
        }
    }

    /// Divided difference `(f - s_k f) / (x_k - x_{k+1})` in variables `k, k+1`.
    /// Negative exponents have no polynomial quotient and are rejected.
    pub fn divided_difference(&self, k: usize) -> Result<Self> {
        let mut q = Self::zero(self.arity);
        for (e, c) in &self.terms {
            let (p, r) = (e[k], e[k + 1]);
            if p < 0 || r < 0 {
                return Err(Error::InexactDivision);
            }
            let (hi, lo, sign) = if p > r { (p, r, 1) } else { (r, p, -1) };
            for t in 0..(hi - lo) {
                let mut ne = e.clone();
                ne[k] = hi - 1 - t;
                ne[k + 1] = lo + t;
                q.add_term(ne, if sign > 0 { c.clone() } else { -c.clone() });
            }
        }
        Ok(q)
    }

    fn min_exponents(&self) -> Vec<i32> {
        let mut m = vec![0; self.arity];
        for e in self.terms.keys() {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        m
    }

    /// Exact division; fails if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if self.arity != divisor.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: divisor.arity });
        }
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        // Laurent inputs are shifted into the polynomial range first.
        let sf = self.min_exponents();
        let sd = divisor.min_exponents();
        let one = BigInt::one();
        let f = self.mul_monomial(&sf.iter().map(|x| -x).collect::<Vec<_>>(), &one);
        let d = divisor.mul_monomial(&sd.iter().map(|x| -x).collect::<Vec<_>>(), &one);

        let (dl_exp, dl_c) = d.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = f;
        let mut quot = Self::zero(self.arity);
        while let Some((le, lc)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let shift: Vec<i32> = le.iter().zip(&dl_exp).map(|(a, b)| a - b).collect();
            if shift.iter().any(|&s| s < 0) {
                return Err(Error::InexactDivision);
            }
            let (c, r) = lc.div_rem(&dl_c);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            rem -= &d.mul_monomial(&shift, &c);
            quot.add_term(shift, c);
        }
        let back: Vec<i32> = sf.iter().zip(&sd).map(|(a, b)| a - b).collect();
        Ok(quot.mul_monomial(&back, &one))
    }

    /// Substitute an integer point (nonnegative exponents only).
    pub fn evaluate(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.arity);
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                assert!(k >= 0, "evaluate needs nonnegative exponents");
                t *= num_traits::pow(x.clone(), k as usize);
            }
            acc += t;
        }
        acc
    }

    /// Symmetric under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.arity.saturating_sub(1)).all(|k| self.swap_vars(k, k + 1) == *self)
    }

    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Embed into a ring with more variables, appended on the right.
    pub fn extend_arity(&self, arity: usize) -> Self {
        assert!(arity >= self.arity);
        Self {
            arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(arity, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Rename variable `i` to `map[i]` inside a ring of the given arity.
    pub fn relabel(&self, arity: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.arity);
        let mut p = Self::zero(arity);
        for (e, c) in &self.terms {
            let mut ne = vec![0; arity];
            for (i, &k) in e.iter().enumerate() {
                ne[map[i]] += k;
            }
            p.add_term(ne, c.clone());
        }
        p
    }
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactPoly({self})")
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &[i32], names: &dyn Fn(usize) -> String) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{}", names(i))?;
        } else {
            write!(f, "{}^{}", names(i), k)?;
        }
    }
    Ok(())
}

pub(crate) fn write_poly<'a, I>(
    f: &mut fmt::Formatter<'_>,
    terms: I,
    names: &dyn Fn(usize) -> String,
) -> fmt::Result
where
    I: Iterator<Item = (&'a Vec<i32>, &'a BigInt)>,
{
    let mut first = true;
    for (e, c) in terms {
        let constant = e.iter().all(|&k| k == 0);
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        if constant {
            write!(f, "{abs}")?;
        } else {
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write_monomial(f, e, names)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.terms.iter().rev(), &|i| format!("x{}", i + 1))
    }
}

impl AddAssign<&ExactPoly> for ExactPoly {
    fn add_assign(&mut self, rhs: &ExactPoly) {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&ExactPoly> for ExactPoly {
    fn sub_assign(&mut self, rhs: &ExactPoly) {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c.clone());
        }
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let mut r = self.clone();
        r -= rhs;
        r
    }
}

impl Add for ExactPoly {
    type Output = ExactPoly;
    fn add(mut self, rhs: ExactPoly) -> ExactPoly {
        self += &rhs;
        self
    }
}

impl Sub for ExactPoly {
    type Output = ExactPoly;
    fn sub(mut self, rhs: ExactPoly) -> ExactPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        -&self
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut r = ExactPoly::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }
}

impl Mul for ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: ExactPoly) -> ExactPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> ExactPoly {
        ExactPoly::var(n, i)
    }

    #[test]
    fn arithmetic_drops_zero_terms() {
        let p = &x(2, 0) + &x(2, 1);
        let q = &p - &x(2, 1);
        assert_eq!(q, x(2, 0));
        assert_eq!(q.len(), 1);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = &x(3, 0) - &x(3, 1);
        let b = &(&x(3, 0) * &x(3, 2)) + &ExactPoly::constant(3, BigInt::from(7));
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn inexact_division_is_rejected() {
        let a = &x(2, 0) - &x(2, 1);
        assert_eq!(x(2, 0).div_exact(&a), Err(Error::InexactDivision));
        let two = ExactPoly::constant(2, BigInt::from(2));
        assert_eq!(x(2, 0).div_exact(&two), Err(Error::InexactDivision));
    }

    #[test]
    fn laurent_division() {
        // (q^2 - q^-2) / (q - q^-1) = q + q^-1
        let m = |k: i32| ExactPoly::monomial(vec![k], BigInt::one());
        let num = &m(2) - &m(-2);
        let den = &m(1) - &m(-1);
        assert_eq!(num.div_exact(&den).unwrap(), &m(1) + &m(-1));
    }

    #[test]
    fn divided_difference_of_x1_is_one() {
        assert_eq!(x(2, 0).divided_difference(0).unwrap(), ExactPoly::one(2));
        assert_eq!(x(2, 1).divided_difference(0).unwrap(), -ExactPoly::one(2));
        let sym = &x(2, 0) * &x(2, 1);
        assert!(sym.divided_difference(0).unwrap().is_zero());
    }

    #[test]
    fn divided_difference_matches_quotient() {
        // x1^3 x2 x3^2 in three variables, acting on (x2, x3)
        let f = ExactPoly::monomial(vec![3, 1, 2], BigInt::from(5));
        let dd = f.divided_difference(1).unwrap();
        let num = &f - &f.swap_vars(1, 2);
        let den = &x(3, 1) - &x(3, 2);
        assert_eq!(dd, num.div_exact(&den).unwrap());
    }

    #[test]
    fn display_orders_terms() {
        let p = &(&x(2, 0) * &x(2, 0)) - &ExactPoly::constant(2, BigInt::from(3));
        assert_eq!(p.to_string(), "x1^2 - 3");
        assert_eq!(ExactPoly::zero(1).to_string(), "0");
    }
}
