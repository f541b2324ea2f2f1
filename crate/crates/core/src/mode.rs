use std::fmt;
use std::str::FromStr;

use crate::formula::UnaryOp;

/// Which unary operations the variety carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sidedness {
    Left,
    Right,
    TwoSided,
}

/// Variety selector: sidedness, and whether the identity element is present.
///
/// With the default pairing, left adequate formulas may use only `*` and
/// right adequate formulas only `+`. `swap_sided_ops` inverts that pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mode {
    pub sidedness: Sidedness,
    pub monoid: bool,
    pub swap_sided_ops: bool,
}

impl Mode {
    pub const ADEQUATE_MONOID: Mode = Mode::new(Sidedness::TwoSided, true);
    pub const ADEQUATE_SEMIGROUP: Mode = Mode::new(Sidedness::TwoSided, false);
    pub const LEFT_MONOID: Mode = Mode::new(Sidedness::Left, true);
    pub const RIGHT_MONOID: Mode = Mode::new(Sidedness::Right, true);

    pub const fn new(sidedness: Sidedness, monoid: bool) -> Self {
        Mode {
            sidedness,
            monoid,
            swap_sided_ops: false,
        }
    }

    pub const fn with_swapped_ops(mut self, swap: bool) -> Self {
        self.swap_sided_ops = swap;
        self
    }

    pub fn admits(&self, op: UnaryOp) -> bool {
        let left_op = if self.swap_sided_ops {
            UnaryOp::Plus
        } else {
            UnaryOp::Star
        };
        match self.sidedness {
            Sidedness::TwoSided => true,
            Sidedness::Left => op == left_op,
            Sidedness::Right => op != left_op,
        }
    }

    pub fn name(&self) -> &'static str {
        match (self.sidedness, self.monoid) {
            (Sidedness::TwoSided, true) => "adequate monoid",
            (Sidedness::TwoSided, false) => "adequate semigroup",
            (Sidedness::Left, true) => "left adequate monoid",
            (Sidedness::Left, false) => "left adequate semigroup",
            (Sidedness::Right, true) => "right adequate monoid",
            (Sidedness::Right, false) => "right adequate semigroup",
        }
    }
}

impl Default for Mode {
    fn default() -> Self {
        Mode::ADEQUATE_MONOID
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sidedness {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "adequate" | "two-sided" | "two_sided" => Ok(Sidedness::TwoSided),
            "left" => Ok(Sidedness::Left),
            "right" => Ok(Sidedness::Right),
            other => Err(format!("unknown mode '{other}' (expected adequate, left or right)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sided_ops() {
        assert!(Mode::LEFT_MONOID.admits(UnaryOp::Star));
        assert!(!Mode::LEFT_MONOID.admits(UnaryOp::Plus));
        assert!(Mode::RIGHT_MONOID.admits(UnaryOp::Plus));
        assert!(!Mode::RIGHT_MONOID.admits(UnaryOp::Star));
        let swapped = Mode::LEFT_MONOID.with_swapped_ops(true);
        assert!(swapped.admits(UnaryOp::Plus));
        assert!(!swapped.admits(UnaryOp::Star));
        assert!(Mode::ADEQUATE_SEMIGROUP.admits(UnaryOp::Plus));
        assert!(Mode::ADEQUATE_SEMIGROUP.admits(UnaryOp::Star));
    }
}
