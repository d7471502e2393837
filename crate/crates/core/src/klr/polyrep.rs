//! The polynomial representation: dots multiply, same-color crossings act by
//! divided differences, other crossings permute variables, with an extra
//! `x_k + x_{k+1}` for one ordering of adjacent colors.
//!
//! Operators commute with symmetric polynomials in all strand variables, so
//! agreement on `{x^a : a_i < k}` (which contains the staircase basis of the
//! polynomial ring over the symmetric ones) decides equality of operators.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::cartan::{link, Color, Link};
use super::element::{Gen, ThinDiagram, ThinElement};
use crate::error::Result;
use crate::symfunc::ExactPoly;

/// Which adjacent-color crossing carries the `x_k + x_{k+1}` factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Bottom colors `(i, j)` with `i < j`.
    #[default]
    LeftLess,
    /// Bottom colors `(i, j)` with `i > j`.
    LeftGreater,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::LeftLess => Orientation::LeftGreater,
            Orientation::LeftGreater => Orientation::LeftLess,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PolyRep {
    pub orientation: Orientation,
}

/// Monomials to test operators on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `x^a` with every `a_i < k`.
    Box,
    /// `x^a` with `a_i <= k-1-i`, the staircase basis.
    Staircase,
}

pub fn monomial_family(k: usize, family: Family) -> Vec<ExactPoly> {
    let bound = |i: usize| match family {
        Family::Box => k as i32 - 1,
        Family::Staircase => (k - 1 - i) as i32,
    };
    let mut out = Vec::new();
    let mut e = vec![0i32; k];
    loop {
        out.push(ExactPoly::monomial(e.clone(), BigInt::one()));
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            if e[i] < bound(i) {
                e[i] += 1;
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

impl PolyRep {
    pub fn new(orientation: Orientation) -> Self {
        Self { orientation }
    }

    /// Crossing at variable index `k` whose bottom colors are `(l, r)`.
    pub fn crossing(&self, l: Color, r: Color, k: usize, f: &ExactPoly) -> Result<ExactPoly> {
        match link(l, r) {
            Link::Same => f.divided_difference(k),
            Link::Distant => Ok(f.swap_vars(k, k + 1)),
            Link::Adjacent => {
                let s = f.swap_vars(k, k + 1);
                let weighted = match self.orientation {
                    Orientation::LeftLess => l < r,
                    Orientation::LeftGreater => l > r,
                };
                if weighted {
                    let n = f.arity();
                    Ok(&(&ExactPoly::var(n, k) + &ExactPoly::var(n, k + 1)) * &s)
                } else {
                    Ok(s)
                }
            }
        }
    }

    /// Generators read top first over `bottom`, acting on variables
    /// `offset..offset+bottom.len()` of `f`.
    pub fn act_gens(&self, bottom: &[Color], gens: &[Gen], offset: usize, f: &ExactPoly) -> Result<ExactPoly> {
        let mut cols = bottom.to_vec();
        let mut p = f.clone();
        for g in gens.iter().rev() {
            match *g {
                Gen::Dot(i) => p = p.mul_var_pow(offset + i, 1),
                Gen::Cross(k) => {
                    p = self.crossing(cols[k], cols[k + 1], offset + k, &p)?;
                    cols.swap(k, k + 1);
                }
            }
        }
        Ok(p)
    }

    pub fn act_diagram(&self, d: &ThinDiagram, f: &ExactPoly) -> Result<ExactPoly> {
        self.act_gens(d.bottom(), d.gens(), 0, f)
    }

    /// Action of a normal-form element, term by term.
    pub fn act_element(&self, e: &ThinElement, offset: usize, f: &ExactPoly) -> Result<ExactPoly> {
        let mut out = ExactPoly::zero(f.arity());
        for (b, c) in e.terms() {
            let mut gens: Vec<Gen> = b.word().iter().map(|&k| Gen::Cross(k as usize)).collect();
            for (i, &d) in b.dots().iter().enumerate() {
                gens.extend(std::iter::repeat_n(Gen::Dot(i), d as usize));
            }
            out += &self.act_gens(e.bottom(), &gens, offset, f)?.scale(c);
        }
        Ok(out)
    }

    /// Compares two operators on `k` strands over a monomial family.
    pub fn agree<F, G>(&self, k: usize, family: Family, lhs: F, rhs: G) -> Result<bool>
    where
        F: Fn(&ExactPoly) -> Result<ExactPoly>,
        G: Fn(&ExactPoly) -> Result<ExactPoly>,
    {
        for m in monomial_family(k, family) {
            if lhs(&m)? != rhs(&m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `e1` and `e2` act identically on `{x^a : a_i < k}`.
    pub fn oracle_equal(&self, e1: &ThinElement, e2: &ThinElement) -> Result<bool> {
        e1.check_boundary(e2)?;
        self.agree(e1.strands(), Family::Box, |f| self.act_element(e1, 0, f), |f| self.act_element(e2, 0, f))
    }
}
