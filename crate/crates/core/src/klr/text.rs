//! `coef * psi[w] x[a] e(i)` text form. Positions are 1-based; factors read
//! left to right go from the top of the diagram down.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::cartan::Color;
use super::element::ThinElement;
use crate::error::{Error, Result};

fn join<T: fmt::Display>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for ThinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let cols = join(self.bottom(), " ");
        for (n, (b, c)) in self.terms().enumerate() {
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs} * ")?;
            }
            if !b.word().is_empty() {
                let w: Vec<u16> = b.word().iter().map(|&k| k as u16 + 1).collect();
                write!(f, "psi[{}] ", join(&w, ","))?;
            }
            if b.dots().iter().any(|&d| d > 0) {
                write!(f, "x[{}] ", join(b.dots(), ","))?;
            }
            write!(f, "e({cols})")?;
        }
        Ok(())
    }
}

enum Factor {
    Psi(Vec<usize>),
    Dots(Vec<u16>),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let t = self.rest().trim_start();
        self.pos = self.src.len() - t.len();
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.err("expected a number");
        }
        let n = self.rest()[..len].parse().expect("ascii digits");
        self.pos += len;
        Ok(n)
    }

    fn small(&mut self) -> Result<usize> {
        let start = self.pos;
        let n = self.number()?;
        usize::try_from(&n).or_else(|_| {
            self.pos = start;
            self.err("number too large")
        })
    }

    /// Numbers separated by commas or whitespace up to `close`.
    fn list(&mut self, close: &str) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        loop {
            if self.eat(close) {
                return Ok(out);
            }
            if !out.is_empty() {
                self.eat(",");
            }
            out.push(self.small()?);
        }
    }

    fn term(&mut self) -> Result<ThinElement> {
        self.skip_ws();
        let coef = if self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            let c = self.number()?;
            self.eat("*");
            c
        } else {
            BigInt::one()
        };
        let mut factors = Vec::new();
        loop {
            let at = self.pos;
            if self.eat("psi[") {
                factors.push((at, Factor::Psi(self.list("]")?)));
            } else if self.eat("x[") {
                let v = self.list("]")?;
                let v = v.into_iter().map(|d| u16::try_from(d).map_err(|_| Error::Parse {
                    position: at,
                    message: "dot exponent too large".into(),
                }));
                factors.push((at, Factor::Dots(v.collect::<Result<_>>()?)));
            } else if self.eat("e(") {
                break;
            } else {
                return self.err("expected psi[..], x[..] or e(..)");
            }
        }
        let e_at = self.pos;
        let colors = self.list(")")?;
        let colors: Vec<Color> = colors
            .into_iter()
            .map(|c| Color::try_from(c).ok().filter(|&c| c > 0))
            .collect::<Option<_>>()
            .ok_or(Error::Parse { position: e_at, message: "colors must be in 1..=255".into() })?;
        let k = colors.len();
        let mut e = ThinElement::identity(colors);
        for (at, f) in factors.into_iter().rev() {
            let bad = |message: String| Error::Parse { position: at, message };
            match f {
                Factor::Dots(d) => {
                    if d.len() != k {
                        return Err(bad(format!("x[..] has {} entries for {k} strands", d.len())));
                    }
                    for (p, &n) in d.iter().enumerate() {
                        for _ in 0..n {
                            e = e.dot_above(p);
                        }
                    }
                }
                Factor::Psi(w) => {
                    for &c in w.iter().rev() {
                        if c == 0 || c >= k {
                            return Err(bad(format!("crossing {c} out of range for {k} strands")));
                        }
                        e = e.cross_above(c - 1);
                    }
                }
            }
        }
        Ok(e.scale(&coef))
    }

    fn element(&mut self) -> Result<ThinElement> {
        let negate = self.eat("-");
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            self.skip_ws();
            if self.pos == self.src.len() {
                return Ok(acc);
            }
            let at = self.pos;
            let sign = if self.eat("+") {
                1
            } else if self.eat("-") {
                -1
            } else {
                return self.err("expected '+' or '-'");
            };
            let t = self.term()?.scale(&BigInt::from(sign));
            acc = acc.try_add(&t).map_err(|e| Error::Parse { position: at, message: e.to_string() })?;
        }
    }
}

impl FromStr for ThinElement {
    type Err = Error;

    /// Parses the text form. A bare `0` carries no boundary; use
    /// [`ThinElement::parse_with_boundary`] for it.
    fn from_str(s: &str) -> Result<Self> {
        Parser { src: s, pos: 0 }.element()
    }
}

impl ThinElement {
    /// Like `FromStr`, but also accepts `0` for the given boundary.
    pub fn parse_with_boundary(s: &str, bottom: &[Color], top: &[Color]) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(ThinElement::zero(bottom.to_vec(), top.to_vec()));
        }
        let e: ThinElement = s.parse()?;
        if e.bottom() != bottom || e.top() != top {
            return Err(Error::BoundaryMismatch {
                expected: format!("{bottom:?} -> {top:?}"),
                found: format!("{:?} -> {:?}", e.bottom(), e.top()),
            });
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reduce(s: &str) -> String {
        s.parse::<ThinElement>().unwrap().to_string()
    }

    #[test]
    fn cli_examples() {
        assert_eq!(reduce("psi[1] psi[1] e(2 2)"), "0");
        assert_eq!(reduce("psi[1] psi[1] e(1 2)"), "x[1,0] e(1 2) + x[0,1] e(1 2)");
        assert_eq!(reduce("e(1)"), "e(1)");
    }

    #[test]
    fn round_trip() {
        for s in [
            "psi[1,2,1] x[2,0,1] e(1 1 1)",
            "x[0,3] psi[1] x[1,0] e(1 1)",
            "3 * psi[2,1,2] e(1 2 1) - psi[1] psi[2] psi[1] e(1 2 1)",
            "-2 * x[1] e(3)",
        ] {
            let once = reduce(s);
            assert_eq!(reduce(&once), once, "{s}");
        }
    }

    #[test]
    fn parse_errors() {
        let err = "psi[3] e(1 1)".parse::<ThinElement>().unwrap_err();
        assert!(matches!(err, Error::Parse { position: 0, .. }), "{err}");
        assert!("x[1] e(1 1)".parse::<ThinElement>().is_err());
        assert!("psi[1] e(1 2) + e(1 2)".parse::<ThinElement>().is_err());
        assert!("e(1 2) ?".parse::<ThinElement>().is_err());
        assert!("0".parse::<ThinElement>().is_err());
        assert!(ThinElement::parse_with_boundary("0", &[1], &[1]).unwrap().is_zero());
    }

    #[test]
    fn comma_or_space_separators() {
        assert_eq!(reduce("x[1 0] e(1,2)"), reduce("x[1,0] e(1 2)"));
    }
}
