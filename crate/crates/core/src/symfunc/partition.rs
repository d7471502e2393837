use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self::normalized(parts))
    }

    fn normalized(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `K_{rows,cols}`: the full rectangle.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        Self::normalized(vec![cols; rows])
    }

    /// The single column `(1^m)`.
    pub fn column(m: usize) -> Self {
        Self::rectangle(m, 1)
    }

    pub fn row(m: u32) -> Self {
        Self::normalized(vec![m])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `parts[i]`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn fits(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.part(i))
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0) as usize;
        let parts = (1..=width as u32)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Self(parts)
    }

    /// `K_{rows,cols} - self`: complement inside the rectangle, read backwards.
    pub fn rect_complement(&self, rows: usize, cols: u32) -> Result<Self> {
        if !self.fits(rows, cols) {
            return Err(Error::NotInRectangle { partition: self.to_string(), rows, cols });
        }
        Ok(Self::normalized((0..rows).rev().map(|i| cols - self.part(i)).collect()))
    }

    /// Conjugate of the rectangle complement; maps `P(rows,cols)` onto `P(cols,rows)`.
    pub fn hat(&self, rows: usize, cols: u32) -> Result<Self> {
        Ok(self.rect_complement(rows, cols)?.conjugate())
    }

    /// `self + K_{rows,cols}`, defined when `self` has at most `rows` parts.
    pub fn add_rectangle(&self, rows: usize, cols: u32) -> Result<Self> {
        if self.len() > rows {
            return Err(Error::InvalidPartition(format!("{self} has more than {rows} parts")));
        }
        Ok(Self::normalized((0..rows).map(|i| self.part(i) + cols).collect()))
    }

    /// Parts padded with zeros to length `n` (`n >= len`).
    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(n >= self.len());
        let mut v = self.0.clone();
        v.resize(n, 0);
        v
    }
}

/// All partitions of `n` in graded lexicographic order (largest first).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `P(rows, cols)`: partitions fitting in the rectangle, sorted.
pub fn enumerate_partitions(rows: usize, cols: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    fn rec(row: usize, rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::normalized(cur.clone()));
        if row == rows {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            rec(row + 1, rows, p, cur, out);
            cur.pop();
        }
    }
    rec(0, rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partitions with at most `rows` parts and size at most `max_size`.
pub fn partitions_with_rows(rows: usize, max_size: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = (0..=max_size)
        .flat_map(partitions_of)
        .filter(|p| p.len() <= rows)
        .collect();
    out.sort();
    out
}

impl Ord for Partition {
    /// Graded lexicographic: by size, then lexicographically on parts.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; `0` or an empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Subsets of the a x b grid closed under moving up/left, by brute force.
    fn brute_force_rectangle(a: usize, b: u32) -> Vec<Partition> {
        let cells = a * b as usize;
        let mut out = Vec::new();
        for mask in 0u32..(1 << cells) {
            let has = |r: usize, c: usize| mask & (1 << (r * b as usize + c)) != 0;
            let closed = (0..a).all(|r| {
                (0..b as usize).all(|c| {
                    !has(r, c) || ((r == 0 || has(r - 1, c)) && (c == 0 || has(r, c - 1)))
                })
            });
            if closed {
                let parts = (0..a).map(|r| (0..b as usize).filter(|&c| has(r, c)).count() as u32);
                out.push(Partition::normalized(parts.collect()));
            }
        }
        out.sort();
        out
    }

    #[test]
    fn trailing_zeros_are_insignificant() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn rectangle_enumeration_examples() {
        assert_eq!(enumerate_partitions(1, 1), vec![p(&[]), p(&[1])]);
        assert_eq!(enumerate_partitions(3, 0), vec![p(&[])]);
        let six = enumerate_partitions(2, 2);
        assert_eq!(six, vec![p(&[]), p(&[1]), p(&[1, 1]), p(&[2]), p(&[2, 1]), p(&[2, 2])]);
        assert_eq!(six, brute_force_rectangle(2, 2));
    }

    #[test]
    fn rectangle_enumeration_matches_brute_force() {
        for a in 0..=3 {
            for b in 0..=3 {
                assert_eq!(enumerate_partitions(a, b), brute_force_rectangle(a, b), "P({a},{b})");
            }
        }
    }

    #[test]
    fn rectangle_count_is_binomial() {
        for a in 0..=5usize {
            for b in 0..=5u32 {
                let n = a + b as usize;
                let binom = (1..=a).fold(1usize, |acc, i| acc * (n - a + i) / i);
                assert_eq!(enumerate_partitions(a, b).len(), binom);
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn hat_examples() {
        for a in 0..=3 {
            for b in 0..=3u32 {
                assert_eq!(p(&[]).hat(a, b).unwrap(), Partition::rectangle(b as usize, a as u32));
                assert_eq!(Partition::rectangle(a, b).hat(a, b).unwrap(), p(&[]));
            }
        }
        assert_eq!(p(&[1]).hat(1, 1).unwrap(), p(&[]));
        assert!(p(&[2]).hat(1, 1).is_err());
    }

    #[test]
    fn rect_complement_examples() {
        assert_eq!(p(&[]).rect_complement(2, 3).unwrap(), Partition::rectangle(2, 3));
        assert_eq!(p(&[1]).rect_complement(2, 2).unwrap(), p(&[2, 1]));
        assert_eq!(p(&[2]).rect_complement(1, 3).unwrap(), p(&[1]));
        assert!(p(&[1, 1, 1]).rect_complement(2, 2).is_err());
    }

    #[test]
    fn hat_is_involution_between_rectangles() {
        for a in 0..=4 {
            for b in 0..=4u32 {
                for al in enumerate_partitions(a, b) {
                    let h = al.hat(a, b).unwrap();
                    assert!(h.fits(b as usize, a as u32));
                    assert_eq!(h.hat(b as usize, a as u32).unwrap(), al);
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("0".parse::<Partition>().unwrap(), p(&[]));
        assert!("1,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1, 1]).to_string(), "(3,1,1)");
    }

    #[test]
    fn partitions_of_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(mut v in proptest::collection::vec(0u32..6, 0..6)) {
            v.sort_unstable_by(|a, b| b.cmp(a));
            let al = Partition::new(v).unwrap();
            prop_assume!(al.size() <= 12);
            prop_assert_eq!(al.conjugate().conjugate(), al.clone());
            prop_assert_eq!(al.conjugate().size(), al.size());
        }
    }
}
