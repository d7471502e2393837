use std::fmt;

use serde::{Deserialize, Serialize};

use crate::klr::Color;

/// A thick strand `E_i^{(a)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Strand {
    pub color: Color,
    pub thickness: u32,
}

impl Strand {
    pub fn new(color: Color, thickness: u32) -> Self {
        Self { color, thickness }
    }
}

/// Tensor product of thick strands with a grading shift. Thickness-zero
/// strands are dropped on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ThickObject {
    strands: Vec<Strand>,
    shift: i64,
}

impl ThickObject {
    pub fn new(strands: impl IntoIterator<Item = Strand>) -> Self {
        Self { strands: strands.into_iter().filter(|s| s.thickness > 0).collect(), shift: 0 }
    }

    pub fn single(color: Color, thickness: u32) -> Self {
        Self::new([Strand::new(color, thickness)])
    }

    pub fn from_pairs(pairs: &[(Color, u32)]) -> Self {
        Self::new(pairs.iter().map(|&(c, a)| Strand::new(c, a)))
    }

    pub fn with_shift(mut self, shift: i64) -> Self {
        self.shift = shift;
        self
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn width(&self) -> usize {
        self.strands.iter().map(|s| s.thickness as usize).sum()
    }

    /// Each color repeated by its thickness.
    pub fn thin_colors(&self) -> Vec<Color> {
        self.strands.iter().flat_map(|s| std::iter::repeat(s.color).take(s.thickness as usize)).collect()
    }

    pub fn concat(&self, other: &ThickObject) -> ThickObject {
        let mut strands = self.strands.clone();
        strands.extend_from_slice(&other.strands);
        Self { strands, shift: self.shift + other.shift }
    }

    /// Same strands, ignoring the shift tag.
    pub fn same_strands(&self, other: &ThickObject) -> bool {
        self.strands == other.strands
    }
}

impl fmt::Display for ThickObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.strands.is_empty() {
            return f.write_str("1");
        }
        for s in &self.strands {
            if s.thickness == 1 {
                write!(f, "E{}", s.color)?;
            } else {
                write!(f, "E{}^({})", s.color, s.thickness)?;
            }
        }
        if self.shift != 0 {
            write!(f, "{{{}}}", self.shift)?;
        }
        Ok(())
    }
}
