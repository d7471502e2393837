use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::klr::{Color, PolyRep, ThinDiagram, ThinElement};
use crate::symfunc::{ExactPoly, Partition};
use crate::thick::{RawWords, ThickDiagram};

/// One parameter value of a grid tuple.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Int(u32),
    Color(Color),
    Colors(Vec<Color>),
    Ints(Vec<u32>),
    Part(Partition),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Color(c) => write!(f, "{c}"),
            Value::Colors(cs) => {
                let s: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
                write!(f, "[{}]", s.join(" "))
            }
            Value::Ints(ns) => {
                let s: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
                write!(f, "[{}]", s.join(" "))
            }
            Value::Part(p) => write!(f, "{p}"),
            Value::Text(t) => f.write_str(t),
        }
    }
}

/// Named parameters of a grid tuple, in builder order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params(Vec<(String, Value)>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, v: Value) -> Self {
        self.0.push((key.to_string(), v));
        self
    }

    pub fn int(self, key: &str, n: u32) -> Self {
        self.with(key, Value::Int(n))
    }

    pub fn color(self, key: &str, c: Color) -> Self {
        self.with(key, Value::Color(c))
    }

    pub fn part(self, key: &str, p: &Partition) -> Self {
        self.with(key, Value::Part(p.clone()))
    }

    pub fn text(self, key: &str, t: &str) -> Self {
        self.with(key, Value::Text(t.to_string()))
    }

    pub fn get(&self, key: &str) -> Result<&Value> {
        self.0
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v)
            .ok_or_else(|| Error::InvalidParameters(format!("missing parameter {key}")))
    }

    pub fn get_int(&self, key: &str) -> Result<u32> {
        match self.get(key)? {
            Value::Int(n) => Ok(*n),
            v => Err(Error::InvalidParameters(format!("{key}={v} is not an integer"))),
        }
    }

    pub fn get_color(&self, key: &str) -> Result<Color> {
        match self.get(key)? {
            Value::Color(c) => Ok(*c),
            v => Err(Error::InvalidParameters(format!("{key}={v} is not a color"))),
        }
    }

    pub fn get_colors(&self, key: &str) -> Result<&[Color]> {
        match self.get(key)? {
            Value::Colors(c) => Ok(c),
            v => Err(Error::InvalidParameters(format!("{key}={v} is not a color list"))),
        }
    }

    pub fn get_ints(&self, key: &str) -> Result<&[u32]> {
        match self.get(key)? {
            Value::Ints(n) => Ok(n),
            v => Err(Error::InvalidParameters(format!("{key}={v} is not an integer list"))),
        }
    }

    pub fn get_part(&self, key: &str) -> Result<&Partition> {
        match self.get(key)? {
            Value::Part(p) => Ok(p),
            v => Err(Error::InvalidParameters(format!("{key}={v} is not a partition"))),
        }
    }

    pub fn get_text(&self, key: &str) -> Result<&str> {
        match self.get(key)? {
            Value::Text(t) => Ok(t),
            v => Err(Error::InvalidParameters(format!("{key}={v} is not text"))),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Value)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (k, v)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            match v {
                Value::Int(n) => m.serialize_entry(k, n)?,
                Value::Color(c) => m.serialize_entry(k, c)?,
                Value::Colors(cs) => m.serialize_entry(k, cs)?,
                Value::Ints(ns) => m.serialize_entry(k, ns)?,
                other => m.serialize_entry(k, &other.to_string())?,
            }
        }
        m.end()
    }
}

/// One side of an identity: a thick diagram, or a sum of unreduced thin words.
#[derive(Clone, Debug)]
pub enum Side {
    Thick(ThickDiagram),
    Thin { bottom: Vec<Color>, top: Vec<Color>, terms: RawWords },
}

impl Side {
    pub fn thin(bottom: &[Color], top: Option<Vec<Color>>, terms: RawWords) -> Result<Self> {
        let top = match (top, terms.first()) {
            (Some(t), _) => t,
            (None, Some((_, w))) => ThinDiagram::new(bottom.to_vec(), w.clone())?.top(),
            (None, None) => bottom.to_vec(),
        };
        Ok(Side::Thin { bottom: bottom.to_vec(), top, terms })
    }

    pub fn bottom(&self) -> Vec<Color> {
        match self {
            Side::Thick(d) => d.bottom().thin_colors(),
            Side::Thin { bottom, .. } => bottom.clone(),
        }
    }

    pub fn top(&self) -> Vec<Color> {
        match self {
            Side::Thick(d) => d.top().thin_colors(),
            Side::Thin { top, .. } => top.clone(),
        }
    }

    pub fn summands(&self) -> usize {
        match self {
            Side::Thick(d) => d.summands(),
            Side::Thin { terms, .. } => terms.len(),
        }
    }

    pub fn explode(&self) -> Result<ThinElement> {
        match self {
            Side::Thick(d) => d.explode(),
            Side::Thin { bottom, top, terms } => {
                let mut acc = ThinElement::zero(bottom.clone(), top.clone());
                for (c, w) in terms {
                    let e = ThinDiagram::new(bottom.clone(), w.clone())?.reduce();
                    acc = acc.try_add(&e.scale(c))?;
                }
                Ok(acc)
            }
        }
    }

    /// Polynomial action straight from the generator words.
    pub fn act(&self, rep: &PolyRep, f: &ExactPoly) -> Result<ExactPoly> {
        match self {
            Side::Thick(d) => d.act(rep, 0, f),
            Side::Thin { bottom, terms, .. } => {
                let mut acc = ExactPoly::zero(f.arity());
                for (c, w) in terms {
                    acc += &rep.act_gens(bottom, w, 0, f)?.scale(c);
                }
                Ok(acc)
            }
        }
    }

    /// Thin degree before any reduction; `None` for an empty sum.
    pub fn degree(&self) -> Result<Option<i64>> {
        match self {
            Side::Thick(d) => d.thin_degree(),
            Side::Thin { bottom, terms, .. } => {
                let mut deg = None;
                for (c, w) in terms {
                    if c.is_zero() {
                        continue;
                    }
                    let d = ThinDiagram::new(bottom.clone(), w.clone())?.degree();
                    match deg {
                        None => deg = Some(d),
                        Some(e) if e != d => {
                            return Err(Error::InvalidDiagram(format!("sum mixes degrees {e} and {d}")))
                        }
                        _ => {}
                    }
                }
                Ok(deg)
            }
        }
    }

    /// Negates the first summand that does not vanish; a vanishing side
    /// becomes the identity instead.
    pub fn corrupted(&self) -> Result<Side> {
        match self {
            Side::Thin { bottom, top, terms } => {
                let mut terms = terms.clone();
                for t in terms.iter_mut() {
                    let single = Side::Thin { bottom: bottom.clone(), top: top.clone(), terms: vec![t.clone()] };
                    if !single.explode()?.is_zero() {
                        t.0 = -t.0.clone();
                        return Ok(Side::Thin { bottom: bottom.clone(), top: top.clone(), terms });
                    }
                }
                if bottom != top {
                    return Err(Error::InvalidDiagram("cannot corrupt a vanishing non-endomorphism".into()));
                }
                terms.push((BigInt::one(), Vec::new()));
                Ok(Side::Thin { bottom: bottom.clone(), top: top.clone(), terms })
            }
            Side::Thick(d) => {
                let (bottom, top) = (d.bottom(), d.top());
                let mut terms = match d {
                    ThickDiagram::Sum { terms, .. } => terms.clone(),
                    other => vec![(BigInt::one(), other.clone())],
                };
                for t in terms.iter_mut() {
                    if !t.0.is_zero() && !t.1.explode()?.is_zero() {
                        t.0 = -t.0.clone();
                        return Ok(Side::Thick(ThickDiagram::sum(bottom, top, terms)?));
                    }
                }
                if !bottom.same_strands(&top) {
                    return Err(Error::InvalidDiagram("cannot corrupt a vanishing non-endomorphism".into()));
                }
                terms.push((BigInt::one(), ThickDiagram::id(bottom.clone())));
                Ok(Side::Thick(ThickDiagram::sum(bottom, top, terms)?))
            }
        }
    }
}

/// Both sides of one instance of an identity.
#[derive(Clone, Debug)]
pub struct Case {
    pub lhs: Side,
    pub rhs: Side,
    /// Number of summands the right side must have, when the statement fixes it.
    pub rhs_summands: Option<usize>,
}

impl Case {
    pub fn new(lhs: Side, rhs: Side) -> Self {
        Self { lhs, rhs, rhs_summands: None }
    }

    pub fn thick(lhs: ThickDiagram, rhs: ThickDiagram) -> Self {
        Self::new(Side::Thick(lhs), Side::Thick(rhs))
    }

    pub fn expecting(mut self, n: usize) -> Self {
        self.rhs_summands = Some(n);
        self
    }
}

/// Grid bounds: the thin-strand budget plus per-parameter maxima.
#[derive(Clone, Debug)]
pub struct GridConfig {
    pub max_strands: usize,
    /// `n` of `sl(n)`; colors run over `1..n`.
    pub rank: u8,
    pub overrides: BTreeMap<String, u32>,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self { max_strands: 6, rank: 4, overrides: BTreeMap::new() }
    }
}

impl GridConfig {
    pub fn new(max_strands: usize, rank: u8) -> Self {
        Self { max_strands, rank, overrides: BTreeMap::new() }
    }

    pub fn with_override(mut self, key: &str, max: u32) -> Self {
        self.overrides.insert(key.to_string(), max);
        self
    }

    /// Upper bound for `key`, unless overridden.
    pub fn bound(&self, key: &str, default: u32) -> u32 {
        self.overrides.get(key).copied().unwrap_or(default)
    }

    /// Thin strand budget: the identity's default, overridable by `strands`,
    /// never above `max_strands`.
    pub fn budget(&self, default: usize) -> usize {
        let b = self.overrides.get("strands").map(|&s| s as usize).unwrap_or(default);
        b.min(self.max_strands)
    }

    pub fn colors(&self) -> Vec<Color> {
        (1..self.rank).collect()
    }
}

pub type GridFn = fn(&GridConfig) -> Vec<Params>;
pub type BuildFn = fn(&Params) -> Result<Case>;

/// A registered identity: a parameter grid and a builder for both sides.
#[derive(Clone, Copy)]
pub struct IdentitySpec {
    pub name: &'static str,
    pub statement: &'static str,
    pub grid: GridFn,
    pub build: BuildFn,
}

impl fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentitySpec").field("name", &self.name).finish()
    }
}

impl IdentitySpec {
    pub fn tuples(&self, cfg: &GridConfig) -> Vec<Params> {
        let mut t = (self.grid)(cfg);
        t.sort();
        t.dedup();
        t
    }

    pub fn case(&self, p: &Params) -> Result<Case> {
        (self.build)(p)
    }
}
