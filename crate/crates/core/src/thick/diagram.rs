use num_bigint::BigInt;
use num_traits::Zero;

use super::generators::{act_idempotent, generator, idempotent, GenKey, Segment};
use super::object::{Strand, ThickObject};
use crate::error::{Error, Result};
use crate::klr::{Color, Gen, PolyRep, ThinDiagram, ThinElement};
use crate::symfunc::{ExactPoly, Partition};

/// Composition tree of thick generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThickDiagram {
    /// Identity on an object, i.e. `e_{a_1} ⊗ ⋯ ⊗ e_{a_k}`.
    Id(ThickObject),
    Gen(GenKey),
    /// `upper ∘ lower`.
    Compose(Box<ThickDiagram>, Box<ThickDiagram>),
    Tensor(Box<ThickDiagram>, Box<ThickDiagram>),
    Sum { bottom: ThickObject, top: ThickObject, terms: Vec<(BigInt, ThickDiagram)> },
}

impl ThickDiagram {
    pub fn id(obj: ThickObject) -> Self {
        ThickDiagram::Id(obj)
    }

    pub fn strand(i: Color, a: u32) -> Self {
        Self::id(ThickObject::single(i, a))
    }

    pub fn zero(bottom: ThickObject, top: ThickObject) -> Self {
        ThickDiagram::Sum { bottom, top, terms: Vec::new() }
    }

    /// `(a, b) → a+b`; a zero thickness makes it an identity.
    pub fn merge(i: Color, a: u32, b: u32) -> Self {
        if a == 0 || b == 0 {
            return Self::strand(i, a + b);
        }
        ThickDiagram::Gen(GenKey::Merge(i, a, b))
    }

    /// `a+b → (a, b)`.
    pub fn split(i: Color, a: u32, b: u32) -> Self {
        if a == 0 || b == 0 {
            return Self::strand(i, a + b);
        }
        ThickDiagram::Gen(GenKey::Split(i, a, b))
    }

    /// Thickness-`a` strand decorated by `π_α`.
    pub fn dot(i: Color, a: u32, al: &Partition) -> Self {
        if al.is_empty() {
            return Self::strand(i, a);
        }
        if al.len() > a as usize {
            let o = ThickObject::single(i, a);
            return Self::zero(o.clone(), o);
        }
        ThickDiagram::Gen(GenKey::Dot(i, a, al.clone()))
    }

    /// `(i^a, j^b) → (j^b, i^a)`.
    pub fn cross(i: Color, a: u32, j: Color, b: u32) -> Self {
        if a == 0 || b == 0 {
            return Self::id(ThickObject::from_pairs(&[(i, a), (j, b)]));
        }
        ThickDiagram::Gen(GenKey::Cross(i, a, j, b))
    }

    pub fn bottom(&self) -> ThickObject {
        match self {
            ThickDiagram::Id(o) => o.clone(),
            ThickDiagram::Gen(k) => gen_bottom(k),
            ThickDiagram::Compose(_, lower) => lower.bottom(),
            ThickDiagram::Tensor(l, r) => l.bottom().concat(&r.bottom()),
            ThickDiagram::Sum { bottom, .. } => bottom.clone(),
        }
    }

    pub fn top(&self) -> ThickObject {
        match self {
            ThickDiagram::Id(o) => o.clone(),
            ThickDiagram::Gen(k) => gen_top(k),
            ThickDiagram::Compose(upper, _) => upper.top(),
            ThickDiagram::Tensor(l, r) => l.top().concat(&r.top()),
            ThickDiagram::Sum { top, .. } => top.clone(),
        }
    }

    /// `upper ∘ lower`.
    pub fn compose(upper: ThickDiagram, lower: ThickDiagram) -> Result<Self> {
        let (t, b) = (lower.top(), upper.bottom());
        if !t.same_strands(&b) {
            return Err(Error::BoundaryMismatch { expected: b.to_string(), found: t.to_string() });
        }
        Ok(ThickDiagram::Compose(Box::new(upper), Box::new(lower)))
    }

    /// Stacks diagrams listed bottom first.
    pub fn chain(layers: impl IntoIterator<Item = ThickDiagram>) -> Result<Self> {
        let mut it = layers.into_iter();
        let mut acc = it.next().ok_or_else(|| Error::InvalidDiagram("empty chain".into()))?;
        for d in it {
            acc = Self::compose(d, acc)?;
        }
        Ok(acc)
    }

    pub fn beside(left: ThickDiagram, right: ThickDiagram) -> Self {
        ThickDiagram::Tensor(Box::new(left), Box::new(right))
    }

    /// Left-to-right tensor product.
    pub fn row(parts: impl IntoIterator<Item = ThickDiagram>) -> Self {
        parts
            .into_iter()
            .reduce(Self::beside)
            .unwrap_or_else(|| Self::id(ThickObject::default()))
    }

    pub fn sum(bottom: ThickObject, top: ThickObject, terms: Vec<(BigInt, ThickDiagram)>) -> Result<Self> {
        for (_, t) in &terms {
            if !t.bottom().same_strands(&bottom) || !t.top().same_strands(&top) {
                return Err(Error::BoundaryMismatch {
                    expected: format!("{bottom} -> {top}"),
                    found: format!("{} -> {}", t.bottom(), t.top()),
                });
            }
        }
        Ok(ThickDiagram::Sum { bottom, top, terms })
    }

    pub fn scale(self, c: impl Into<BigInt>) -> Self {
        let (bottom, top) = (self.bottom(), self.top());
        ThickDiagram::Sum { bottom, top, terms: vec![(c.into(), self)] }
    }

    /// Compiles to a reduced thin element.
    pub fn explode(&self) -> Result<ThinElement> {
        Ok(match self {
            ThickDiagram::Id(o) => o
                .strands()
                .iter()
                .map(|s| (*idempotent(s.color, s.thickness)).clone())
                .reduce(|l, r| l.tensor(&r))
                .unwrap_or_else(|| ThinElement::identity(Vec::new())),
            ThickDiagram::Gen(k) => (*generator(k)).clone(),
            ThickDiagram::Compose(u, l) => u.explode()?.compose(&l.explode()?)?,
            ThickDiagram::Tensor(l, r) => l.explode()?.tensor(&r.explode()?),
            ThickDiagram::Sum { bottom, top, terms } => {
                let mut acc = ThinElement::zero(bottom.thin_colors(), top.thin_colors());
                for (c, t) in terms {
                    if !c.is_zero() {
                        acc = acc.try_add(&t.explode()?.scale(c))?;
                    }
                }
                acc
            }
        })
    }

    /// Polynomial-representation action on variables `offset..`, computed
    /// from generator words without any reduction.
    pub fn act(&self, rep: &PolyRep, offset: usize, f: &ExactPoly) -> Result<ExactPoly> {
        match self {
            ThickDiagram::Id(o) => {
                let mut p = f.clone();
                let mut off = offset;
                for s in o.strands() {
                    p = act_key(rep, &GenKey::Idempotent(s.color, s.thickness), off, &p)?;
                    off += s.thickness as usize;
                }
                Ok(p)
            }
            ThickDiagram::Gen(k) => act_key(rep, k, offset, f),
            ThickDiagram::Compose(u, l) => u.act(rep, offset, &l.act(rep, offset, f)?),
            ThickDiagram::Tensor(l, r) => {
                let w = l.bottom().width();
                l.act(rep, offset, &r.act(rep, offset + w, f)?)
            }
            ThickDiagram::Sum { terms, .. } => {
                let mut acc = ExactPoly::zero(f.arity());
                for (c, t) in terms {
                    acc += &t.act(rep, offset, f)?.scale(c);
                }
                Ok(acc)
            }
        }
    }

    /// Thin degree read off the generator words; `None` for a diagram with no
    /// terms. Errors on sums of mixed degree.
    pub fn thin_degree(&self) -> Result<Option<i64>> {
        Ok(match self {
            ThickDiagram::Id(_) => Some(0),
            ThickDiagram::Gen(k) => {
                let raw = k.raw();
                match raw.first() {
                    None => None,
                    Some((_, w)) => Some(ThinDiagram::new(k.bottom(), w.clone())?.degree()),
                }
            }
            ThickDiagram::Compose(a, b) | ThickDiagram::Tensor(a, b) => match (a.thin_degree()?, b.thin_degree()?) {
                (Some(x), Some(y)) => Some(x + y),
                _ => None,
            },
            ThickDiagram::Sum { terms, .. } => {
                let mut deg = None;
                for (c, t) in terms {
                    if c.is_zero() {
                        continue;
                    }
                    match (deg, t.thin_degree()?) {
                        (_, None) => {}
                        (None, d) => deg = d,
                        (Some(x), Some(y)) if x != y => {
                            return Err(Error::InvalidDiagram(format!("sum mixes degrees {x} and {y}")))
                        }
                        _ => {}
                    }
                }
                deg
            }
        })
    }

    /// Number of top-level summands (1 for a non-sum).
    pub fn summands(&self) -> usize {
        match self {
            ThickDiagram::Sum { terms, .. } => terms.len(),
            _ => 1,
        }
    }
}

fn act_key(rep: &PolyRep, k: &GenKey, offset: usize, f: &ExactPoly) -> Result<ExactPoly> {
    let bottom = k.bottom();
    let mut acc = ExactPoly::zero(f.arity());
    for (c, segs) in k.segments() {
        let mut p = f.clone();
        let mut cols = bottom.clone();
        for seg in segs.iter().rev() {
            match seg {
                Segment::Idem { start, a } => p = act_idempotent(rep, cols[*start], *a, offset + start, &p)?,
                Segment::Word(w) => {
                    p = rep.act_gens(&cols, w, offset, &p)?;
                    for g in w.iter().rev() {
                        if let Gen::Cross(j) = *g {
                            cols.swap(j, j + 1);
                        }
                    }
                }
            }
        }
        acc += &p.scale(&c);
    }
    Ok(acc)
}

fn gen_bottom(k: &GenKey) -> ThickObject {
    match *k {
        GenKey::Idempotent(i, a) | GenKey::Dot(i, a, _) => ThickObject::single(i, a),
        GenKey::Merge(i, a, b) => ThickObject::from_pairs(&[(i, a), (i, b)]),
        GenKey::Split(i, a, b) => ThickObject::single(i, a + b),
        GenKey::Cross(i, a, j, b) => ThickObject::from_pairs(&[(i, a), (j, b)]),
    }
}

fn gen_top(k: &GenKey) -> ThickObject {
    match *k {
        GenKey::Idempotent(i, a) | GenKey::Dot(i, a, _) => ThickObject::single(i, a),
        GenKey::Merge(i, a, b) => ThickObject::single(i, a + b),
        GenKey::Split(i, a, b) => ThickObject::from_pairs(&[(i, a), (i, b)]),
        GenKey::Cross(i, a, j, b) => ThickObject::new([Strand::new(j, b), Strand::new(i, a)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::klr::{monomial_family, Family};

    fn one() -> BigInt {
        BigInt::one()
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn oracle_agrees(d: &ThickDiagram) {
        let e = d.explode().unwrap();
        let rep = PolyRep::default();
        for m in monomial_family(e.strands(), Family::Box) {
            assert_eq!(d.act(&rep, 0, &m).unwrap(), rep.act_element(&e, 0, &m).unwrap());
        }
    }

    #[test]
    fn explode_examples() {
        assert_eq!(ThickDiagram::strand(1, 1).explode().unwrap(), ThinElement::identity(vec![1]));
        let digon = ThickDiagram::compose(ThickDiagram::merge(1, 1, 1), ThickDiagram::split(1, 1, 1)).unwrap();
        assert!(digon.explode().unwrap().is_zero());
        assert!(ThickDiagram::compose(ThickDiagram::merge(1, 1, 1), ThickDiagram::strand(1, 3)).is_err());
    }

    #[test]
    fn explode_respects_reassociation() {
        let a = ThickDiagram::split(1, 1, 1);
        let b = ThickDiagram::beside(ThickDiagram::dot(1, 1, &p(&[1])), ThickDiagram::strand(1, 1));
        let c = ThickDiagram::merge(1, 1, 1);
        let left = ThickDiagram::compose(c.clone(), ThickDiagram::compose(b.clone(), a.clone()).unwrap()).unwrap();
        let right = ThickDiagram::compose(ThickDiagram::compose(c, b).unwrap(), a).unwrap();
        assert_eq!(left.explode().unwrap(), right.explode().unwrap());
        assert_eq!(left.explode().unwrap(), ThickDiagram::strand(1, 2).explode().unwrap());
        oracle_agrees(&left);
    }

    #[test]
    fn oracle_matches_exploded_generators() {
        for d in [
            ThickDiagram::merge(1, 2, 1),
            ThickDiagram::split(2, 1, 2),
            ThickDiagram::cross(1, 1, 2, 2),
            ThickDiagram::cross(1, 1, 1, 2),
            ThickDiagram::dot(1, 2, &p(&[2, 1])),
        ] {
            oracle_agrees(&d);
        }
    }

    #[test]
    fn degrees() {
        assert_eq!(ThickDiagram::merge(1, 2, 1).thin_degree().unwrap(), Some(-4));
        assert_eq!(ThickDiagram::dot(1, 2, &p(&[1])).thin_degree().unwrap(), Some(2));
        assert_eq!(ThickDiagram::cross(1, 1, 2, 1).thin_degree().unwrap(), Some(1));
        let mixed = ThickDiagram::sum(
            ThickObject::single(1, 1),
            ThickObject::single(1, 1),
            vec![(one(), ThickDiagram::strand(1, 1)), (one(), ThickDiagram::dot(1, 1, &p(&[1])))],
        )
        .unwrap();
        assert!(mixed.thin_degree().is_err());
    }

    #[test]
    fn zero_thickness_degenerates() {
        assert_eq!(ThickDiagram::merge(1, 2, 0), ThickDiagram::strand(1, 2));
        assert_eq!(ThickDiagram::cross(1, 0, 2, 1).bottom(), ThickObject::single(2, 1));
        assert!(ThickDiagram::dot(1, 1, &p(&[1, 1])).explode().unwrap().is_zero());
    }
}
