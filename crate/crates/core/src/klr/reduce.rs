//! Normal-form engine: multiplies generators onto basis terms
//! `ψ_w x^a e(i)` (canonical word `w`, dots below every crossing).
//!
//! Each product is computed once per thread and memoized; all results are
//! expressed again in the basis, so reduction is just repeated multiplication.

use std::cell::RefCell;
use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::cartan::{link, pairing, Link};
use super::perm::{canonical_word, identity, is_reduced, perm_of_word, Perm, Word};

/// Basis diagram `ψ_w x^a` over a fixed bottom color sequence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Basis {
    word: Word,
    perm: Perm,
    dots: Vec<u16>,
}

impl Basis {
    pub fn identity(dots: Vec<u16>) -> Self {
        let k = dots.len();
        Self { word: Vec::new(), perm: identity(k), dots }
    }

    pub fn from_perm(perm: Perm, dots: Vec<u16>) -> Self {
        assert_eq!(perm.len(), dots.len());
        Self { word: canonical_word(&perm), perm, dots }
    }

    /// Canonical reduced word, top letter first, 0-based positions.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    /// Dot exponents by bottom position.
    pub fn dots(&self) -> &[u16] {
        &self.dots
    }

    pub fn strands(&self) -> usize {
        self.dots.len()
    }

    pub fn crossings(&self) -> usize {
        self.word.len()
    }

    pub fn degree(&self, bottom: &[u8]) -> i64 {
        let dots: i64 = self.dots.iter().map(|&d| d as i64).sum();
        let mut arr = identity(self.strands());
        let mut deg = 2 * dots;
        for &c in self.word.iter().rev() {
            let c = c as usize;
            deg -= pairing(bottom[arr[c] as usize], bottom[arr[c + 1] as usize]) as i64;
            arr.swap(c, c + 1);
        }
        deg
    }

    /// Side-by-side placement with `other` to the right.
    pub fn tensor(&self, other: &Basis) -> Basis {
        let k = self.strands() as u8;
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|c| c + k));
        let mut perm = self.perm.clone();
        perm.extend(other.perm.iter().map(|p| p + k));
        let mut dots = self.dots.clone();
        dots.extend_from_slice(&other.dots);
        Basis { word, perm, dots }
    }
}

impl Ord for Basis {
    /// Fewer crossings first, then by word; within a word, higher dot degree
    /// first and lexicographically larger dot vectors first.
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |b: &Basis| {
            let total: u32 = b.dots.iter().map(|&d| d as u32).sum();
            (b.word.len(), b.word.clone(), Reverse(total), Reverse(b.dots.clone()))
        };
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for Basis {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type Terms = BTreeMap<Basis, BigInt>;

pub(crate) fn add_term(acc: &mut Terms, b: Basis, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match acc.entry(b) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

fn add_scaled(acc: &mut Terms, src: &Terms, c: &BigInt) {
    for (b, k) in src {
        add_term(acc, b.clone(), k * c);
    }
}

/// `ψ_u = ψ_word + Σ coef·ψ_corr` for a reduced word `u`.
struct Rewrite {
    word: Word,
    corrections: Vec<(i32, Word)>,
}

fn prefixed<'a>(prefix: &[u8], corr: &'a [(i32, Word)]) -> impl Iterator<Item = (i32, Word)> + 'a {
    let prefix = prefix.to_vec();
    corr.iter().map(move |(s, w)| {
        let mut v = prefix.clone();
        v.extend_from_slice(w);
        (*s, v)
    })
}

type Memo = RefCell<HashMap<Basis, Vec<Option<Rc<Terms>>>>>;

struct Engine {
    bottom: Vec<u8>,
    dot_memo: Memo,
    cross_memo: Memo,
    canon_memo: RefCell<HashMap<Word, Rc<Rewrite>>>,
    front_memo: RefCell<HashMap<(Word, u8), Rc<Rewrite>>>,
}

impl Engine {
    fn new(bottom: Vec<u8>) -> Self {
        Self {
            bottom,
            dot_memo: Default::default(),
            cross_memo: Default::default(),
            canon_memo: Default::default(),
            front_memo: Default::default(),
        }
    }

    fn k(&self) -> usize {
        self.bottom.len()
    }

    fn lookup(memo: &Memo, b: &Basis, i: usize) -> Option<Rc<Terms>> {
        memo.borrow().get(b).and_then(|v| v[i].clone())
    }

    fn store(&self, memo: &Memo, b: &Basis, i: usize, t: Rc<Terms>) {
        let k = self.k();
        memo.borrow_mut().entry(b.clone()).or_insert_with(|| vec![None; k])[i] = Some(t);
    }

    /// `x_p · b`, the dot placed at top position `p`.
    fn mul_dot(&self, p: usize, b: &Basis) -> Rc<Terms> {
        if let Some(t) = Self::lookup(&self.dot_memo, b, p) {
            return t;
        }
        let mut acc = Terms::new();
        let n = b.word.len();
        let mut below = vec![identity(self.k()); n];
        let mut arr = identity(self.k());
        for m in (0..n).rev() {
            below[m] = arr.clone();
            let c = b.word[m] as usize;
            arr.swap(c, c + 1);
        }
        let mut pos = p;
        for m in 0..n {
            let c = b.word[m] as usize;
            if pos != c && pos != c + 1 {
                continue;
            }
            let arr = &below[m];
            if self.bottom[arr[c] as usize] == self.bottom[arr[c + 1] as usize] {
                // x_c ψ = ψ x_{c+1} + 1 and x_{c+1} ψ = ψ x_c - 1
                let sign = if pos == c { 1 } else { -1 };
                let suffix = Basis { word: b.word[m + 1..].to_vec(), perm: arr.clone(), dots: b.dots.clone() };
                let mut start = Terms::new();
                start.insert(suffix, BigInt::one());
                let t = self.apply_word(&b.word[..m], start);
                add_scaled(&mut acc, &t, &BigInt::from(sign));
            }
            pos = if pos == c { c + 1 } else { c };
        }
        let mut dots = b.dots.clone();
        dots[pos] += 1;
        add_term(&mut acc, Basis { word: b.word.clone(), perm: b.perm.clone(), dots }, BigInt::one());
        let acc = Rc::new(acc);
        self.store(&self.dot_memo, b, p, acc.clone());
        acc
    }

    /// `ψ_k · b`.
    fn mul_cross(&self, k: usize, b: &Basis) -> Rc<Terms> {
        if let Some(t) = Self::lookup(&self.cross_memo, b, k) {
            return t;
        }
        let mut acc = Terms::new();
        let mut perm = b.perm.clone();
        perm.swap(k, k + 1);
        if b.perm[k] < b.perm[k + 1] {
            let mut u = vec![k as u8];
            u.extend_from_slice(&b.word);
            let rw = self.canonize(&u);
            add_term(&mut acc, Basis { word: rw.word.clone(), perm, dots: b.dots.clone() }, BigInt::one());
            for (s, w) in &rw.corrections {
                add_scaled(&mut acc, &self.word_on(w, &b.dots), &BigInt::from(*s));
            }
        } else {
            // ψ_w = ψ_k ψ_{w'} - Σ corrections, then ψ_k² acts on ψ_{w'}.
            let cw = canonical_word(&perm);
            let mut u = vec![k as u8];
            u.extend_from_slice(&cw);
            let rw = self.canonize(&u);
            debug_assert_eq!(rw.word, b.word);
            let lower = Basis { word: cw, perm: perm.clone(), dots: b.dots.clone() };
            let (l, r) = (self.bottom[perm[k] as usize], self.bottom[perm[k + 1] as usize]);
            match link(l, r) {
                Link::Same => {}
                Link::Distant => add_term(&mut acc, lower, BigInt::one()),
                Link::Adjacent => {
                    add_scaled(&mut acc, &self.mul_dot(k, &lower), &BigInt::one());
                    add_scaled(&mut acc, &self.mul_dot(k + 1, &lower), &BigInt::one());
                }
            }
            for (s, w) in &rw.corrections {
                let t = self.word_on(w, &b.dots);
                let coef = BigInt::from(-*s);
                for (tb, tc) in &t {
                    add_scaled(&mut acc, &self.mul_cross(k, tb), &(tc * &coef));
                }
            }
        }
        let acc = Rc::new(acc);
        self.store(&self.cross_memo, b, k, acc.clone());
        acc
    }

    /// Letters applied on top of `terms`, bottom letter first.
    fn apply_word(&self, word: &[u8], mut terms: Terms) -> Terms {
        for &c in word.iter().rev() {
            let mut next = Terms::new();
            for (b, coef) in &terms {
                add_scaled(&mut next, &self.mul_cross(c as usize, b), coef);
            }
            terms = next;
        }
        terms
    }

    fn apply_dots(&self, dots: &[u16], mut terms: Terms) -> Terms {
        for (p, &d) in dots.iter().enumerate() {
            for _ in 0..d {
                let mut next = Terms::new();
                for (b, coef) in &terms {
                    add_scaled(&mut next, &self.mul_dot(p, b), coef);
                }
                terms = next;
            }
        }
        terms
    }

    /// `ψ_w x^a` for an arbitrary word.
    fn word_on(&self, w: &[u8], dots: &[u16]) -> Terms {
        let mut out = Terms::new();
        if is_reduced(w, self.k()) {
            let rw = self.canonize(w);
            let perm = perm_of_word(w, self.k());
            add_term(&mut out, Basis { word: rw.word.clone(), perm, dots: dots.to_vec() }, BigInt::one());
            for (s, c) in &rw.corrections {
                add_scaled(&mut out, &self.word_on(c, dots), &BigInt::from(*s));
            }
        } else {
            out.insert(Basis::identity(dots.to_vec()), BigInt::one());
            out = self.apply_word(w, out);
        }
        out
    }

    fn canonize(&self, u: &[u8]) -> Rc<Rewrite> {
        if let Some(r) = self.canon_memo.borrow().get(u) {
            return r.clone();
        }
        let c = canonical_word(&perm_of_word(u, self.k()));
        let rw = if c == u {
            Rewrite { word: c, corrections: Vec::new() }
        } else {
            let first = c[0];
            let f = self.to_front(u, first);
            let tail = self.canonize(&f.word[1..]);
            debug_assert_eq!(tail.word[..], c[1..]);
            let mut corrections = f.corrections.clone();
            corrections.extend(prefixed(&[first], &tail.corrections));
            Rewrite { word: c, corrections }
        };
        let rw = Rc::new(rw);
        self.canon_memo.borrow_mut().insert(u.to_vec(), rw.clone());
        rw
    }

    /// Rewrites a reduced word into one starting with `c`, which must be a
    /// top descent of its permutation.
    fn to_front(&self, u: &[u8], c: u8) -> Rc<Rewrite> {
        if u[0] == c {
            return Rc::new(Rewrite { word: u.to_vec(), corrections: Vec::new() });
        }
        let key = (u.to_vec(), c);
        if let Some(r) = self.front_memo.borrow().get(&key) {
            return r.clone();
        }
        let d = u[0];
        let r1 = self.to_front(&u[1..], c);
        let mut corrections: Vec<(i32, Word)> = prefixed(&[d], &r1.corrections).collect();
        let word = if d.abs_diff(c) >= 2 {
            let mut w = vec![c, d];
            w.extend_from_slice(&r1.word[1..]);
            w
        } else {
            let r2 = self.to_front(&r1.word[1..], d);
            corrections.extend(prefixed(&[d, c], &r2.corrections));
            let rest = &r2.word[1..];
            let arr = perm_of_word(rest, self.k());
            let m = c.min(d) as usize;
            let col = |i: usize| self.bottom[arr[m + i] as usize];
            if col(0) == col(2) && link(col(0), col(1)) == Link::Adjacent {
                // ψ_m ψ_{m+1} ψ_m = ψ_{m+1} ψ_m ψ_{m+1} + 1 on (i, j, i)
                let sign = if d as usize == m { 1 } else { -1 };
                corrections.push((sign, rest.to_vec()));
            }
            let mut w = vec![c, d, c];
            w.extend_from_slice(rest);
            w
        };
        let rw = Rc::new(Rewrite { word, corrections });
        self.front_memo.borrow_mut().insert(key, rw.clone());
        rw
    }
}

thread_local! {
    static ENGINES: RefCell<HashMap<Vec<u8>, Rc<Engine>>> = RefCell::new(HashMap::new());
}

fn engine(bottom: &[u8]) -> Rc<Engine> {
    ENGINES.with(|e| {
        e.borrow_mut()
            .entry(bottom.to_vec())
            .or_insert_with(|| Rc::new(Engine::new(bottom.to_vec())))
            .clone()
    })
}

/// Drops this thread's memo tables.
pub fn clear_caches() {
    ENGINES.with(|e| e.borrow_mut().clear());
}

/// `x_p · terms`.
pub(crate) fn dot_on(bottom: &[u8], p: usize, terms: &Terms) -> Terms {
    let e = engine(bottom);
    let mut acc = Terms::new();
    for (b, c) in terms {
        add_scaled(&mut acc, &e.mul_dot(p, b), c);
    }
    acc
}

/// `ψ_k · terms`.
pub(crate) fn cross_on(bottom: &[u8], k: usize, terms: &Terms) -> Terms {
    let e = engine(bottom);
    let mut acc = Terms::new();
    for (b, c) in terms {
        add_scaled(&mut acc, &e.mul_cross(k, b), c);
    }
    acc
}

/// `f ∘ g` where `f`'s terms are basis diagrams sitting on top of `g`.
pub(crate) fn compose_terms(bottom: &[u8], f: &Terms, g: &Terms) -> Terms {
    let e = engine(bottom);
    let mut by_word: BTreeMap<&Word, Vec<(&Basis, &BigInt)>> = BTreeMap::new();
    for (b, c) in f {
        by_word.entry(&b.word).or_default().push((b, c));
    }
    let mut acc = Terms::new();
    for (word, group) in by_word {
        let mut dotted = Terms::new();
        for (b, c) in group {
            add_scaled(&mut dotted, &e.apply_dots(&b.dots, g.clone()), c);
        }
        let t = e.apply_word(word, dotted);
        for (b, c) in t {
            add_term(&mut acc, b, c);
        }
    }
    acc
}

/// `ψ_word x^dots` in normal form, `word` arbitrary (top letter first).
pub(crate) fn word_on(bottom: &[u8], word: &[u8], dots: &[u16]) -> Terms {
    engine(bottom).word_on(word, dots)
}
