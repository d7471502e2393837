use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Colors are `1..=n-1`; `u8` is plenty for every rank we care about.
pub type Color = u8;

/// Cartan datum of `sl(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanSln {
    n: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Link {
    Same,
    Adjacent,
    Distant,
}

impl CartanSln {
    pub fn new(n: u8) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameters(format!("sl({n}) has no simple roots")));
        }
        Ok(Self { n })
    }

    pub fn rank(&self) -> u8 {
        self.n
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> {
        1..self.n
    }

    pub fn check(&self, color: Color) -> Result<()> {
        if color == 0 || color >= self.n {
            return Err(Error::InvalidColor { color, rank: self.n });
        }
        Ok(())
    }

    pub fn check_all(&self, colors: &[Color]) -> Result<()> {
        colors.iter().try_for_each(|&c| self.check(c))
    }

    pub fn pairing(&self, i: Color, j: Color) -> i32 {
        pairing(i, j)
    }
}

/// `i·j` for simply-laced type A; independent of the rank.
pub fn pairing(i: Color, j: Color) -> i32 {
    match link(i, j) {
        Link::Same => 2,
        Link::Adjacent => -1,
        Link::Distant => 0,
    }
}

pub fn link(i: Color, j: Color) -> Link {
    match i.abs_diff(j) {
        0 => Link::Same,
        1 => Link::Adjacent,
        _ => Link::Distant,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_table() {
        let c = CartanSln::new(5).unwrap();
        assert_eq!(c.pairing(2, 2), 2);
        assert_eq!(c.pairing(2, 3), -1);
        assert_eq!(c.pairing(3, 2), -1);
        assert_eq!(c.pairing(1, 3), 0);
        assert_eq!(c.colors().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert!(c.check(5).is_err());
        assert!(c.check(0).is_err());
        assert!(CartanSln::new(1).is_err());
    }
}
