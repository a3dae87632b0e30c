//! Condition reports shared by the tropical and Euclidean verifiers.

use crate::bitset::ElementSet;

/// The first failing instance of a colorful precondition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `0 ∉ hull(V(B ∪ C))` for a basis `B` and cocircuit `C`.
    BasisCocircuit { basis: ElementSet, cocircuit: ElementSet, sector: Option<usize> },
    /// `0 ∉ hull(V(C ∪ D))` for two distinct cocircuits.
    CocircuitPair { first: ElementSet, second: ElementSet, sector: Option<usize> },
    /// `0 ∉ conv(V(S))` for a minimal set meeting every basis at least twice.
    Corank2 { set: ElementSet },
}

impl Violation {
    /// The set whose hull misses the origin.
    pub fn offending_set(&self) -> ElementSet {
        match *self {
            Self::BasisCocircuit { basis, cocircuit, .. } => basis.union(cocircuit),
            Self::CocircuitPair { first, second, .. } => first.union(second),
            Self::Corank2 { set } => set,
        }
    }

    /// The uncovered sector, for tropical verifiers.
    pub fn sector(&self) -> Option<usize> {
        match *self {
            Self::BasisCocircuit { sector, .. } | Self::CocircuitPair { sector, .. } => sector,
            Self::Corank2 { .. } => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionReport {
    Ok,
    Violated(Violation),
}

impl ConditionReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, Self::Ok)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Self::Ok => None,
            Self::Violated(v) => Some(v),
        }
    }
}
