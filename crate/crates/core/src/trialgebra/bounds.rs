//! Dimension bounds for derived ideals and defining pairs.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::exactlin::Subspace;
use crate::trialgebra::TriAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AlgebraClass {
    Lie,
    Leibniz,
    Associative,
    Diassociative,
    Triassociative,
}

impl AlgebraClass {
    pub const ALL: [AlgebraClass; 5] = [
        AlgebraClass::Lie,
        AlgebraClass::Leibniz,
        AlgebraClass::Associative,
        AlgebraClass::Diassociative,
        AlgebraClass::Triassociative,
    ];

    /// Upper bound on `dim K′` when `dim K/Z(K) = n`.
    pub fn derived_bound(self, n: u64) -> u64 {
        match self {
            AlgebraClass::Lie => n * n.saturating_sub(1) / 2,
            AlgebraClass::Leibniz | AlgebraClass::Associative => n * n,
            AlgebraClass::Diassociative => 2 * n * n,
            AlgebraClass::Triassociative => 3 * n * n,
        }
    }

    /// Upper bound on `dim K` for a defining pair of an `n`-dimensional algebra.
    pub fn cover_bound(self, n: u64) -> u64 {
        match self {
            AlgebraClass::Lie => n * (n + 1) / 2,
            AlgebraClass::Leibniz | AlgebraClass::Associative => n * (n + 1),
            AlgebraClass::Diassociative => n * (2 * n + 1),
            AlgebraClass::Triassociative => n * (3 * n + 1),
        }
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub class: AlgebraClass,
    pub n: u64,
    pub derived_bound: u64,
    pub cover_bound: u64,
}

/// All five classes evaluated at `n = 1..=n_max`, class by class.
pub fn bound_table(n_max: u64) -> Vec<BoundRow> {
    AlgebraClass::ALL
        .iter()
        .flat_map(|&class| {
            (1..=n_max).map(move |n| BoundRow {
                class,
                n,
                derived_bound: class.derived_bound(n),
                cover_bound: class.cover_bound(n),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefiningPairBound {
    pub kernel_dim: usize,
    /// `dim K/M`.
    pub base_dim: usize,
    /// Whether `M ⊆ Z(K) ∩ K′`.
    pub is_defining_pair: bool,
    pub dim_bound: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimBoundReport {
    pub dim: usize,
    pub center_dim: usize,
    /// `dim L/Z(L)`.
    pub central_quotient_dim: usize,
    pub derived_dim: usize,
    pub derived_bound: u64,
    pub derived_holds: bool,
    pub defining_pair: Option<DefiningPairBound>,
}

impl DimBoundReport {
    pub fn holds(&self) -> bool {
        self.derived_holds && self.defining_pair.as_ref().is_none_or(|d| d.holds)
    }

    /// Both bounds attained with equality.
    pub fn tight(&self) -> bool {
        self.derived_dim as u64 == self.derived_bound
            && self.defining_pair.as_ref().is_none_or(|d| self.dim as u64 == d.dim_bound)
    }
}

pub(super) fn check_dim_bounds(a: &TriAlgebra, kernel: Option<&Subspace>) -> Result<DimBoundReport> {
    let center = a.center().into_space();
    let derived = a.derived().into_space();
    let n = (a.dim() - center.dim()) as u64;
    let derived_bound = AlgebraClass::Triassociative.derived_bound(n);
    let defining_pair = match kernel {
        None => None,
        Some(m) => {
            a.subspace(m.clone())?;
            let is_defining_pair = m.is_subspace_of(&center.intersection(&derived)?);
            let base_dim = a.dim() - m.dim();
            let dim_bound = AlgebraClass::Triassociative.cover_bound(base_dim as u64);
            Some(DefiningPairBound {
                kernel_dim: m.dim(),
                base_dim,
                is_defining_pair,
                dim_bound,
                holds: !is_defining_pair || a.dim() as u64 <= dim_bound,
            })
        }
    };
    Ok(DimBoundReport {
        dim: a.dim(),
        center_dim: center.dim(),
        central_quotient_dim: n as usize,
        derived_dim: derived.dim(),
        derived_bound,
        derived_holds: derived.dim() as u64 <= derived_bound,
        defining_pair,
    })
}
