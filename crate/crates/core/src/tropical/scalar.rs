use std::fmt;

use num_traits::{Signed, Zero};

use crate::Rational;

/// An element of the max-plus semiring `R ∪ {−∞}` with exact rational values.
///
/// The derived order puts `NegInf` below every finite value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropicalScalar {
    NegInf,
    Finite(Rational),
}

impl TropicalScalar {
    /// The tropical multiplicative unit `0`.
    pub fn zero() -> Self {
        Self::Finite(Rational::zero())
    }

    pub fn finite(value: Rational) -> Self {
        Self::Finite(value)
    }

    pub fn int(value: i64) -> Self {
        Self::Finite(Rational::from_integer(value.into()))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Self::Finite(_))
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, Self::NegInf)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            Self::Finite(q) => Some(q),
            Self::NegInf => None,
        }
    }

    /// Tropical addition `max(a, b)`.
    pub fn oplus(&self, other: &Self) -> Self {
        self.max(other).clone()
    }

    /// Tropical multiplication `a + b`, with `−∞` absorbing.
    pub fn otimes(&self, other: &Self) -> Self {
        match (self, other) {
            (Self::Finite(a), Self::Finite(b)) => Self::Finite(a + b),
            _ => Self::NegInf,
        }
    }

    /// Classical subtraction of a finite value.
    pub fn minus(&self, value: &Rational) -> Self {
        match self {
            Self::Finite(a) => Self::Finite(a - value),
            Self::NegInf => Self::NegInf,
        }
    }

    /// Classical negation of a finite value; `None` for `−∞`.
    pub fn negated(&self) -> Option<Self> {
        self.as_finite().map(|q| Self::Finite(-q))
    }

    pub fn is_positive(&self) -> bool {
        self.as_finite().is_some_and(|q| q.is_positive())
    }
}

impl From<Rational> for TropicalScalar {
    fn from(value: Rational) -> Self {
        Self::Finite(value)
    }
}

impl fmt::Display for TropicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NegInf => write!(f, "-inf"),
            Self::Finite(q) => write!(f, "{q}"),
        }
    }
}

/// Tropical sum `⊕` of a sequence; `−∞` when empty.
pub fn tropical_sum<'a>(values: impl IntoIterator<Item = &'a TropicalScalar>) -> TropicalScalar {
    values.into_iter().max().cloned().unwrap_or(TropicalScalar::NegInf)
}
