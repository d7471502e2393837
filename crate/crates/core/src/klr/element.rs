use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::cartan::{pairing, Color};
use super::perm::{perm_of_word, top_colors};
use super::reduce::{add_term, compose_terms, cross_on, dot_on, word_on, Basis, Terms};
use crate::error::{Error, Result};

/// A thin generator. Positions are 0-based; a crossing at `k` involves the
/// strands at `k` and `k+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    Dot(usize),
    Cross(usize),
}

/// An unreduced word of generators over a bottom color sequence, top first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThinDiagram {
    bottom: Vec<Color>,
    gens: Vec<Gen>,
}

impl ThinDiagram {
    pub fn new(bottom: Vec<Color>, gens: Vec<Gen>) -> Result<Self> {
        let k = bottom.len();
        for g in &gens {
            let (p, limit) = match *g {
                Gen::Dot(p) => (p, k),
                Gen::Cross(p) => (p, k.saturating_sub(1)),
            };
            if p >= limit {
                return Err(Error::PositionOutOfRange { position: p + 1, strands: k });
            }
        }
        Ok(Self { bottom, gens })
    }

    pub fn bottom(&self) -> &[Color] {
        &self.bottom
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn top(&self) -> Vec<Color> {
        let mut cols = self.bottom.clone();
        for g in self.gens.iter().rev() {
            if let Gen::Cross(k) = *g {
                cols.swap(k, k + 1);
            }
        }
        cols
    }

    /// Dots count 2, a crossing of colors `i`, `j` counts `-i·j`.
    pub fn degree(&self) -> i64 {
        let mut cols = self.bottom.clone();
        let mut deg = 0;
        for g in self.gens.iter().rev() {
            match *g {
                Gen::Dot(_) => deg += 2,
                Gen::Cross(k) => {
                    deg -= pairing(cols[k], cols[k + 1]) as i64;
                    cols.swap(k, k + 1);
                }
            }
        }
        deg
    }

    pub fn reduce(&self) -> ThinElement {
        let mut e = ThinElement::identity(self.bottom.clone());
        for g in self.gens.iter().rev() {
            e = match *g {
                Gen::Dot(p) => e.dot_above(p),
                Gen::Cross(k) => e.cross_above(k),
            };
        }
        e
    }
}

/// Integer combination of basis diagrams with a fixed boundary, always kept
/// in normal form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ThinElement {
    bottom: Vec<Color>,
    top: Vec<Color>,
    terms: Terms,
}

impl ThinElement {
    pub fn zero(bottom: Vec<Color>, top: Vec<Color>) -> Self {
        Self { bottom, top, terms: Terms::new() }
    }

    pub fn identity(bottom: Vec<Color>) -> Self {
        Self::monomial(bottom, &[], &[]).expect("identity is well formed")
    }

    /// `ψ_word x^dots e(bottom)` reduced. `word` is top first; `dots` may be
    /// empty for no dots.
    pub fn monomial(bottom: Vec<Color>, word: &[u8], dots: &[u16]) -> Result<Self> {
        let k = bottom.len();
        if let Some(&c) = word.iter().find(|&&c| c as usize + 1 >= k) {
            return Err(Error::PositionOutOfRange { position: c as usize + 1, strands: k });
        }
        let dots = if dots.is_empty() { vec![0; k] } else { dots.to_vec() };
        if dots.len() != k {
            return Err(Error::InvalidParameters(format!("{} dot exponents for {k} strands", dots.len())));
        }
        let top = top_colors(&perm_of_word(word, k), &bottom);
        let terms = word_on(&bottom, word, &dots);
        Ok(Self { bottom, top, terms })
    }

    pub fn dot(bottom: Vec<Color>, p: usize) -> Result<Self> {
        ThinDiagram::new(bottom, vec![Gen::Dot(p)]).map(|d| d.reduce())
    }

    pub fn crossing(bottom: Vec<Color>, k: usize) -> Result<Self> {
        ThinDiagram::new(bottom, vec![Gen::Cross(k)]).map(|d| d.reduce())
    }


    pub fn bottom(&self) -> &[Color] {
        &self.bottom
    }

    pub fn top(&self) -> &[Color] {
        &self.top
    }

    pub fn strands(&self) -> usize {
        self.bottom.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Basis, &BigInt)> {
        self.terms.iter()
    }


    /// Number of basis terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &Basis) -> BigInt {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    /// Common degree of the terms; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next().map(|b| b.degree(&self.bottom))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|b| b.degree(&self.bottom));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn dot_above(&self, p: usize) -> Self {
        assert!(p < self.strands(), "dot position out of range");
        Self { bottom: self.bottom.clone(), top: self.top.clone(), terms: dot_on(&self.bottom, p, &self.terms) }
    }

    pub fn cross_above(&self, k: usize) -> Self {
        assert!(k + 1 < self.strands(), "crossing position out of range");
        let mut top = self.top.clone();
        top.swap(k, k + 1);
        Self { bottom: self.bottom.clone(), top, terms: cross_on(&self.bottom, k, &self.terms) }
    }

    /// `self ∘ below`: `self` stacked on top of `below`.
    pub fn compose(&self, below: &ThinElement) -> Result<Self> {
        if self.bottom != below.top {
            return Err(Error::BoundaryMismatch {
                expected: format!("{:?}", self.bottom),
                found: format!("{:?}", below.top),
            });
        }
        let terms = if self.is_zero() || below.is_zero() {
            Terms::new()
        } else {
            compose_terms(&below.bottom, &self.terms, &below.terms)
        };
        Ok(Self { bottom: below.bottom.clone(), top: self.top.clone(), terms })
    }

    /// `self` on the left, `right` on the right.
    pub fn tensor(&self, right: &ThinElement) -> Self {
        let mut terms = Terms::new();
        for (b1, c1) in &self.terms {
            for (b2, c2) in &right.terms {
                add_term(&mut terms, b1.tensor(b2), c1 * c2);
            }
        }
        let cat = |x: &[Color], y: &[Color]| [x, y].concat();
        Self { bottom: cat(&self.bottom, &right.bottom), top: cat(&self.top, &right.top), terms }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.bottom.clone(), self.top.clone());
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(b, k)| (b.clone(), k * c)).collect();
        }
        out
    }

    pub fn check_boundary(&self, other: &Self) -> Result<()> {
        if self.bottom != other.bottom || self.top != other.top {
            return Err(Error::BoundaryMismatch {
                expected: format!("{:?} -> {:?}", self.bottom, self.top),
                found: format!("{:?} -> {:?}", other.bottom, other.top),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_boundary(other)?;
        let mut terms = self.terms.clone();
        for (b, c) in &other.terms {
            add_term(&mut terms, b.clone(), c.clone());
        }
        Ok(Self { terms, ..self.clone() })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-BigInt::one()))
    }

    /// Equality of normal forms; errors when the boundaries differ.
    pub fn equal(&self, other: &Self) -> Result<bool> {
        self.check_boundary(other)?;
        Ok(self.terms == other.terms)
    }
}

impl Add for &ThinElement {
    type Output = ThinElement;
    fn add(self, rhs: &ThinElement) -> ThinElement {
        self.try_add(rhs).expect("boundary mismatch in sum")
    }
}

impl Sub for &ThinElement {
    type Output = ThinElement;
    fn sub(self, rhs: &ThinElement) -> ThinElement {
        self.try_sub(rhs).expect("boundary mismatch in difference")
    }
}

impl Neg for &ThinElement {
    type Output = ThinElement;
    fn neg(self) -> ThinElement {
        self.scale(&-BigInt::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(bottom: &[u8], gens: &[Gen]) -> ThinElement {
        ThinDiagram::new(bottom.to_vec(), gens.to_vec()).unwrap().reduce()
    }

    fn mono(bottom: &[u8], word: &[u8], dots: &[u16]) -> ThinElement {
        ThinElement::monomial(bottom.to_vec(), word, dots).unwrap()
    }

    use Gen::{Cross, Dot};

    #[test]
    fn degrees() {
        assert_eq!(ThinDiagram::new(vec![1], vec![Dot(0)]).unwrap().degree(), 2);
        assert_eq!(ThinDiagram::new(vec![1, 1], vec![Cross(0)]).unwrap().degree(), -2);
        assert_eq!(ThinDiagram::new(vec![1, 2], vec![Cross(0)]).unwrap().degree(), 1);
        assert_eq!(ThinDiagram::new(vec![1, 3], vec![Cross(0)]).unwrap().degree(), 0);
        assert!(ThinDiagram::new(vec![1, 3], vec![Cross(1)]).is_err());
    }

    #[test]
    fn r2_relations() {
        assert!(diag(&[2, 2], &[Cross(0), Cross(0)]).is_zero());
        let adj = diag(&[1, 2], &[Cross(0), Cross(0)]);
        assert_eq!(adj, &mono(&[1, 2], &[], &[1, 0]) + &mono(&[1, 2], &[], &[0, 1]));
        let adj = diag(&[2, 1], &[Cross(0), Cross(0)]);
        assert_eq!(adj, &mono(&[2, 1], &[], &[1, 0]) + &mono(&[2, 1], &[], &[0, 1]));
        assert_eq!(diag(&[1, 3], &[Cross(0), Cross(0)]), ThinElement::identity(vec![1, 3]));
    }

    #[test]
    fn nilhecke_dot_relations() {
        let id = ThinElement::identity(vec![1, 1]);
        let a = diag(&[1, 1], &[Dot(0), Cross(0)]);
        let b = diag(&[1, 1], &[Cross(0), Dot(1)]);
        assert_eq!(&a - &b, id);
        let a = diag(&[1, 1], &[Cross(0), Dot(0)]);
        let b = diag(&[1, 1], &[Dot(1), Cross(0)]);
        assert_eq!(&a - &b, id);
        for cols in [[1u8, 2], [2, 1], [1, 3]] {
            assert_eq!(diag(&cols, &[Dot(0), Cross(0)]), diag(&cols, &[Cross(0), Dot(1)]));
            assert_eq!(diag(&cols, &[Cross(0), Dot(0)]), diag(&cols, &[Dot(1), Cross(0)]));
        }
    }

    #[test]
    fn r3_relations() {
        for cols in [[1u8, 2, 1], [2, 1, 2]] {
            let l = diag(&cols, &[Cross(0), Cross(1), Cross(0)]);
            let r = diag(&cols, &[Cross(1), Cross(0), Cross(1)]);
            assert_eq!(&l - &r, ThinElement::identity(cols.to_vec()));
        }
        for cols in [[1u8, 1, 1], [1, 2, 3], [1, 1, 2], [2, 1, 1], [1, 3, 1], [3, 2, 1], [2, 3, 2]] {
            let l = diag(&cols, &[Cross(0), Cross(1), Cross(0)]);
            let r = diag(&cols, &[Cross(1), Cross(0), Cross(1)]);
            if cols == [2, 3, 2] {
                assert_eq!(&l - &r, ThinElement::identity(cols.to_vec()));
            } else {
                assert_eq!(l, r, "{cols:?}");
            }
        }
    }

    #[test]
    fn compose_and_tensor() {
        let b = vec![1u8, 2];
        let x = ThinElement::dot(b.clone(), 0).unwrap();
        let id = ThinElement::identity(b.clone());
        assert_eq!(id.compose(&x).unwrap(), x);
        assert_eq!(x.compose(&id).unwrap(), x);
        assert_eq!(x.compose(&x).unwrap(), mono(&b, &[], &[2, 0]));
        let d = ThinElement::dot(vec![1], 0).unwrap();
        assert_eq!(d.tensor(&ThinElement::identity(vec![2])), x);
        let psi = ThinElement::crossing(b.clone(), 0).unwrap();
        assert!(psi.compose(&psi).is_err());
        assert_eq!(psi.top(), &[2, 1]);
    }

    #[test]
    fn dot_migration_small() {
        // x1^2 ψ - ψ x2^2 = x1 + x2
        let b = vec![1u8, 1];
        let l = diag(&b, &[Dot(0), Dot(0), Cross(0)]);
        let r = diag(&b, &[Cross(0), Dot(1), Dot(1)]);
        assert_eq!(&l - &r, &mono(&b, &[], &[1, 0]) + &mono(&b, &[], &[0, 1]));
    }

    #[test]
    fn reduce_is_idempotent_on_basis_words() {
        let b = vec![1u8, 1, 2, 1];
        let e = diag(&b, &[Cross(1), Cross(0), Dot(2), Cross(2), Cross(1), Cross(0)]);
        for (t, c) in e.terms() {
            let again = mono(&b, t.word(), t.dots());
            assert_eq!(again.len(), 1);
            assert!(c.is_one() || !c.is_zero());
        }
        assert!(e.is_homogeneous());
    }
}
