//! Thin formulas for the thick generators.
//!
//! `e_a = ψ_{w₀} x^{δ_a}` with `δ_a = (a-1, …, 1, 0)`; a split is
//! `(e_a ⊗ e_b) ∘ e_{a+b}`, a merge is `e_{a+b} ∘ Ψ_{a,b} ∘ (e_a ⊗ e_b)` where
//! `Ψ_{a,b}` moves the right block of `b` strands across the left block.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::klr::perm::{block_transposition, canonical_word, longest};
use crate::error::Result;
use crate::klr::{Color, Gen, PolyRep, ThinElement};
use crate::symfunc::{ExactPoly, Partition};

/// A sum of unreduced generator words (top first) over a thin bottom.
pub type RawWords = Vec<(BigInt, Vec<Gen>)>;

/// Piece of a generator word: plain generators, or `e_a` on strands
/// `start..start+a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Segment {
    Word(Vec<Gen>),
    Idem { start: usize, a: usize },
}

impl Segment {
    fn word(&self) -> Vec<Gen> {
        match *self {
            Segment::Word(ref w) => w.clone(),
            Segment::Idem { start, a } => side_by_side(&[], start, &idempotent_word(a)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKey {
    Idempotent(Color, u32),
    Merge(Color, u32, u32),
    Split(Color, u32, u32),
    Dot(Color, u32, Partition),
    Cross(Color, u32, Color, u32),
}

impl fmt::Display for GenKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenKey::Idempotent(i, a) => write!(f, "idem:{i}:{a}"),
            GenKey::Merge(i, a, b) => write!(f, "merge:{i}:{a}:{b}"),
            GenKey::Split(i, a, b) => write!(f, "split:{i}:{a}:{b}"),
            GenKey::Dot(i, a, al) => write!(f, "dot:{i}:{a}:{}", al.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")),
            GenKey::Cross(i, a, j, b) => write!(f, "cross:{i}:{a}:{j}:{b}"),
        }
    }
}

impl std::str::FromStr for GenKey {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        let bad = || crate::Error::Cache(format!("bad generator key {s:?}"));
        let f: Vec<&str> = s.split(':').collect();
        let n = |i: usize| f.get(i).and_then(|t| t.parse::<u32>().ok()).ok_or_else(bad);
        let c = |i: usize| f.get(i).and_then(|t| t.parse::<Color>().ok()).ok_or_else(bad);
        let key = match (f[0], f.len()) {
            ("idem", 3) => GenKey::Idempotent(c(1)?, n(2)?),
            ("merge", 4) => GenKey::Merge(c(1)?, n(2)?, n(3)?),
            ("split", 4) => GenKey::Split(c(1)?, n(2)?, n(3)?),
            ("dot", 4) => GenKey::Dot(c(1)?, n(2)?, f[3].parse().map_err(|_| bad())?),
            ("cross", 5) => GenKey::Cross(c(1)?, n(2)?, c(3)?, n(4)?),
            _ => return Err(bad()),
        };
        Ok(key)
    }
}

impl GenKey {
    pub fn bottom(&self) -> Vec<Color> {
        let rep = |c: Color, n: u32| vec![c; n as usize];
        match *self {
            GenKey::Idempotent(i, a) | GenKey::Dot(i, a, _) => rep(i, a),
            GenKey::Merge(i, a, b) => rep(i, a + b),
            GenKey::Split(i, a, b) => rep(i, a + b),
            GenKey::Cross(i, a, j, b) => [rep(i, a), rep(j, b)].concat(),
        }
    }

    /// Unreduced words realizing the generator, for the polynomial oracle.
    pub fn raw(&self) -> RawWords {
        self.segments()
            .into_iter()
            .map(|(c, segs)| (c, segs.iter().flat_map(Segment::word).collect()))
            .collect()
    }

    /// `raw` with each idempotent kept as a block, top first.
    pub(crate) fn segments(&self) -> Vec<(BigInt, Vec<Segment>)> {
        let one = |w: Vec<Segment>| vec![(BigInt::one(), w)];
        let idem = |start: usize, a: usize| Segment::Idem { start, a };
        let pair = |a: usize, b: usize| [idem(0, a), idem(a, b)];
        match self {
            GenKey::Idempotent(_, a) => one(vec![idem(0, *a as usize)]),
            GenKey::Split(_, a, b) => {
                let (a, b) = (*a as usize, *b as usize);
                one([&pair(a, b)[..], &[idem(0, a + b)]].concat())
            }
            GenKey::Merge(_, a, b) => {
                let (a, b) = (*a as usize, *b as usize);
                let psi = Segment::Word(crossings(&canonical_word(&block_transposition(a, b))));
                one([&[idem(0, a + b), psi][..], &pair(a, b)].concat())
            }
            GenKey::Dot(_, a, al) => {
                let a = *a as usize;
                if al.len() > a {
                    return Vec::new();
                }
                let mut w = crossings(&canonical_word(&longest(a)));
                w.extend(dots(&dot_vector(al, a)));
                one(vec![idem(0, a), Segment::Word(w), idem(0, a)])
            }
            GenKey::Cross(i, a, j, b) if i == j => {
                let split = GenKey::Split(*i, *b, *a).segments();
                let merge = GenKey::Merge(*i, *a, *b).segments();
                one([split[0].1.clone(), merge[0].1.clone()].concat())
            }
            GenKey::Cross(_, a, _, b) => {
                let (a, b) = (*a as usize, *b as usize);
                let psi = Segment::Word(crossings(&canonical_word(&block_transposition(a, b))));
                one([&[psi][..], &pair(a, b)].concat())
            }
        }
    }

    fn build(&self) -> ThinElement {
        let col = |c: Color, n: u32| vec![c; n as usize];
        match self {
            GenKey::Idempotent(i, a) => {
                let a = *a as usize;
                let delta: Vec<u16> = (0..a as u16).rev().collect();
                ThinElement::monomial(vec![*i; a], &canonical_word(&longest(a)), &delta).expect("valid e_a")
            }
            GenKey::Split(i, a, b) => {
                let below = generator(&GenKey::Idempotent(*i, a + b));
                let above = generator(&GenKey::Idempotent(*i, *a)).tensor(&generator(&GenKey::Idempotent(*i, *b)));
                above.compose(&below).expect("split boundary")
            }
            GenKey::Merge(i, a, b) => {
                let below = generator(&GenKey::Idempotent(*i, *a)).tensor(&generator(&GenKey::Idempotent(*i, *b)));
                let psi = ThinElement::monomial(col(*i, a + b), &canonical_word(&block_transposition(*a as usize, *b as usize)), &[])
                    .expect("block crossing");
                let top = generator(&GenKey::Idempotent(*i, a + b));
                top.compose(&psi.compose(&below).expect("merge boundary")).expect("merge boundary")
            }
            GenKey::Dot(i, a, al) => {
                let e = generator(&GenKey::Idempotent(*i, *a));
                if al.len() > *a as usize {
                    return ThinElement::zero(col(*i, *a), col(*i, *a));
                }
                let n = *a as usize;
                let mid = ThinElement::monomial(col(*i, *a), &canonical_word(&longest(n)), &dot_vector(al, n)).expect("dot");
                e.compose(&mid.compose(&e).expect("dot boundary")).expect("dot boundary")
            }
            GenKey::Cross(i, a, j, b) if i == j => {
                let m = generator(&GenKey::Merge(*i, *a, *b));
                let s = generator(&GenKey::Split(*i, *b, *a));
                s.compose(&m).expect("thick crossing boundary")
            }
            GenKey::Cross(i, a, j, b) => {
                let below = generator(&GenKey::Idempotent(*i, *a)).tensor(&generator(&GenKey::Idempotent(*j, *b)));
                let word = canonical_word(&block_transposition(*a as usize, *b as usize));
                let psi = ThinElement::monomial([col(*i, *a), col(*j, *b)].concat(), &word, &[]).expect("block crossing");
                psi.compose(&below).expect("thick crossing boundary")
            }
        }
    }
}

/// `α_j + a - j` on the `j`-th thin strand.
pub fn dot_vector(al: &Partition, a: usize) -> Vec<u16> {
    (0..a).map(|j| (al.part(j) as usize + a - 1 - j) as u16).collect()
}

fn idempotent_word(a: usize) -> Vec<Gen> {
    let mut w = crossings(&canonical_word(&longest(a)));
    w.extend(dots(&(0..a as u16).rev().collect::<Vec<_>>()));
    w
}

/// `e_a` on variables `start..start+a`. On polynomials already symmetric
/// there it is the identity, since `∂_{w₀}` is linear over symmetric
/// polynomials and `∂_{w₀} x^δ = 1`.
pub(crate) fn act_idempotent(rep: &PolyRep, color: Color, a: usize, start: usize, f: &ExactPoly) -> Result<ExactPoly> {
    if (start..start + a.saturating_sub(1)).all(|k| f.swap_vars(k, k + 1) == *f) {
        return Ok(f.clone());
    }
    rep.act_gens(&vec![color; a], &idempotent_word(a), start, f)
}

fn crossings(word: &[u8]) -> Vec<Gen> {
    word.iter().map(|&c| Gen::Cross(c as usize)).collect()
}

fn dots(v: &[u16]) -> Vec<Gen> {
    v.iter().enumerate().flat_map(|(p, &d)| std::iter::repeat_n(Gen::Dot(p), d as usize)).collect()
}

/// `l ⊗ r` as a single word, `l` acting on the first `width` strands.
fn side_by_side(l: &[Gen], width: usize, r: &[Gen]) -> Vec<Gen> {
    let shift = |g: &Gen| match *g {
        Gen::Dot(p) => Gen::Dot(p + width),
        Gen::Cross(k) => Gen::Cross(k + width),
    };
    l.iter().copied().chain(r.iter().map(shift)).collect()
}

type Cache = RwLock<HashMap<GenKey, Arc<ThinElement>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Reduced thin element of a generator, memoized process-wide.
pub fn generator(key: &GenKey) -> Arc<ThinElement> {
    if let Some(e) = cache().read().unwrap().get(key) {
        return e.clone();
    }
    let e = Arc::new(key.build());
    cache().write().unwrap().entry(key.clone()).or_insert(e).clone()
}

pub(crate) fn cached_generators() -> Vec<(GenKey, Arc<ThinElement>)> {
    let mut v: Vec<_> = cache().read().unwrap().iter().map(|(k, e)| (k.clone(), e.clone())).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

pub(crate) fn seed_generator(key: GenKey, e: ThinElement) {
    cache().write().unwrap().entry(key).or_insert_with(|| Arc::new(e));
}

/// `e_a` on `a` strands of color `i`.
pub fn idempotent(i: Color, a: u32) -> Arc<ThinElement> {
    generator(&GenKey::Idempotent(i, a))
}

pub fn split(i: Color, a: u32, b: u32) -> Arc<ThinElement> {
    generator(&GenKey::Split(i, a, b))
}

pub fn merge(i: Color, a: u32, b: u32) -> Arc<ThinElement> {
    generator(&GenKey::Merge(i, a, b))
}

/// Thickness-`a` strand decorated by `π_α`; zero when `α` has more than `a` parts.
pub fn thick_dot(i: Color, a: u32, al: &Partition) -> Arc<ThinElement> {
    generator(&GenKey::Dot(i, a, al.clone()))
}

pub fn thick_cross(i: Color, a: u32, j: Color, b: u32) -> Arc<ThinElement> {
    generator(&GenKey::Cross(i, a, j, b))
}
