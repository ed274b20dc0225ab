//! The eleven triassociative identities.
//!
//! Every identity has the shape `(x ∘₁ y) ∘₂ z = x ∘₃ (y ∘₄ z)`, so one
//! table drives both the algebra axioms and the 2-cocycle conditions
//! `f∘₂(x ∘₁ y, z) = f∘₃(x, y ∘₄ z)`. Indices follow the usual two-column
//! display read row by row: 1 is associativity of ⊢ and 11 is
//! associativity of ⊥.

use std::fmt;

use serde::{Deserialize, Serialize};

/// One of the three products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Vdash,
    Dashv,
    Perp,
}

impl Op {
    pub const ALL: [Op; 3] = [Op::Vdash, Op::Dashv, Op::Perp];

    pub fn index(self) -> usize {
        match self {
            Op::Vdash => 0,
            Op::Dashv => 1,
            Op::Perp => 2,
        }
    }

    /// Name used in algebra files.
    pub fn name(self) -> &'static str {
        match self {
            Op::Vdash => "vdash",
            Op::Dashv => "dashv",
            Op::Perp => "perp",
        }
    }

    pub fn from_name(s: &str) -> Option<Op> {
        Op::ALL.into_iter().find(|op| op.name() == s)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Op::Vdash => "⊢",
            Op::Dashv => "⊣",
            Op::Perp => "⊥",
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `(x left_inner y) left_outer z = x right_outer (y right_inner z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Axiom {
    /// 1-based position in the standard listing.
    pub index: usize,
    pub left_inner: Op,
    pub left_outer: Op,
    pub right_outer: Op,
    pub right_inner: Op,
}

const fn ax(index: usize, li: Op, lo: Op, ro: Op, ri: Op) -> Axiom {
    Axiom { index, left_inner: li, left_outer: lo, right_outer: ro, right_inner: ri }
}

use Op::{Dashv as D, Perp as P, Vdash as V};

pub const AXIOMS: [Axiom; 11] = [
    ax(1, V, V, V, V),
    ax(2, D, D, D, D),
    ax(3, D, V, V, V),
    ax(4, D, D, D, V),
    ax(5, V, D, V, D),
    ax(6, P, V, V, V),
    ax(7, D, D, D, P),
    ax(8, V, P, V, P),
    ax(9, P, D, P, D),
    ax(10, D, P, P, V),
    ax(11, P, P, P, P),
];

/// The diassociative identities among the eleven (those not mentioning ⊥).
pub const DIASSOCIATIVE: [usize; 5] = [1, 2, 3, 4, 5];

/// Associativity of ⊢, ⊣ and ⊥ respectively.
pub const ASSOCIATIVITY: [usize; 3] = [1, 2, 11];

impl Axiom {
    pub fn get(index: usize) -> &'static Axiom {
        &AXIOMS[index - 1]
    }

    pub fn mentions_perp(&self) -> bool {
        [self.left_inner, self.left_outer, self.right_outer, self.right_inner].contains(&Op::Perp)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) (x{}y){}z = x{}(y{}z)",
            self.index, self.left_inner, self.left_outer, self.right_outer, self.right_inner
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_is_indexed_in_order() {
        for (i, a) in AXIOMS.iter().enumerate() {
            assert_eq!(a.index, i + 1);
        }
        assert_eq!(AXIOMS[0].to_string(), "(1) (x⊢y)⊢z = x⊢(y⊢z)");
        assert_eq!(AXIOMS[10].to_string(), "(11) (x⊥y)⊥z = x⊥(y⊥z)");
    }

    #[test]
    fn dialgebra_subset_avoids_perp() {
        for i in DIASSOCIATIVE {
            assert!(!Axiom::get(i).mentions_perp());
        }
        assert_eq!(AXIOMS.iter().filter(|a| !a.mentions_perp()).count(), 5);
    }

    #[test]
    fn reflection_symmetry() {
        // Reversing the order of operations and swapping ⊢/⊣ maps the set of
        // identities to itself; three identities are fixed.
        let flip = |op: Op| match op {
            V => D,
            D => V,
            P => P,
        };
        let mut fixed = 0;
        for a in AXIOMS {
            let r = (flip(a.right_inner), flip(a.right_outer), flip(a.left_outer), flip(a.left_inner));
            let image = AXIOMS
                .iter()
                .find(|b| (b.left_inner, b.left_outer, b.right_outer, b.right_inner) == r)
                .expect("reflection of an identity is an identity");
            if image.index == a.index {
                fixed += 1;
            }
        }
        assert_eq!(fixed, 3);
    }
}
