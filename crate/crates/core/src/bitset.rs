//! Fixed-width subsets of a ground set with at most 64 elements.
//!
//! Two newtypes share the same representation: [`ElementSet`] holds
//! 0-based element indices, [`SectorSet`] holds 1-based sector numbers
//! `1..=d+1`. Both order their values lexicographically by their sorted
//! element sequence, so `{0,1} < {0,1,2} < {0,2} < {1}`.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported ground set (and the largest number of sectors).
pub const MAX_BITS: usize = 64;

macro_rules! bitset_type {
    ($(#[$meta:meta])* $name:ident, $offset:expr) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
        pub struct $name(u64);

        impl $name {
            const OFFSET: usize = $offset;

            pub const fn empty() -> Self {
                Self(0)
            }

            /// Wraps a raw bit pattern; bit `i` stands for the value `i + offset`.
            pub const fn from_bits(bits: u64) -> Self {
                Self(bits)
            }

            pub const fn bits(self) -> u64 {
                self.0
            }

            /// The set of the first `count` values.
            pub fn full(count: usize) -> Self {
                assert!(count <= MAX_BITS, "at most {MAX_BITS} values supported");
                if count == MAX_BITS {
                    Self(u64::MAX)
                } else {
                    Self((1u64 << count) - 1)
                }
            }

            pub fn singleton(value: usize) -> Self {
                Self::empty().with(value)
            }

            fn bit(value: usize) -> u64 {
                let index = value
                    .checked_sub(Self::OFFSET)
                    .filter(|&i| i < MAX_BITS)
                    .unwrap_or_else(|| panic!("value {value} outside bitset range"));
                1u64 << index
            }

            pub fn contains(self, value: usize) -> bool {
                match value.checked_sub(Self::OFFSET) {
                    Some(i) if i < MAX_BITS => self.0 & (1u64 << i) != 0,
                    _ => false,
                }
            }

            pub fn insert(&mut self, value: usize) {
                self.0 |= Self::bit(value);
            }

            pub fn remove(&mut self, value: usize) {
                self.0 &= !Self::bit(value);
            }

            #[must_use]
            pub fn with(mut self, value: usize) -> Self {
                self.insert(value);
                self
            }

            #[must_use]
            pub fn without(mut self, value: usize) -> Self {
                self.remove(value);
                self
            }

            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            pub fn union(self, other: Self) -> Self {
                Self(self.0 | other.0)
            }

            pub fn intersection(self, other: Self) -> Self {
                Self(self.0 & other.0)
            }

            pub fn difference(self, other: Self) -> Self {
                Self(self.0 & !other.0)
            }

            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            pub fn is_disjoint(self, other: Self) -> bool {
                self.0 & other.0 == 0
            }

            /// Smallest value in the set.
            pub fn first(self) -> Option<usize> {
                (self.0 != 0).then(|| self.0.trailing_zeros() as usize + Self::OFFSET)
            }

            /// Largest value in the set.
            pub fn last(self) -> Option<usize> {
                (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize + Self::OFFSET)
            }

            /// Values in increasing order.
            pub fn iter(self) -> impl Iterator<Item = usize> {
                let mut rest = self.0;
                std::iter::from_fn(move || {
                    if rest == 0 {
                        return None;
                    }
                    let i = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i + Self::OFFSET)
                })
            }

            pub fn to_vec(self) -> Vec<usize> {
                self.iter().collect()
            }

            /// All subsets of `self`, in increasing order of their raw bits.
            pub fn subsets(self) -> impl Iterator<Item = Self> {
                let mask = self.0;
                let mut next = Some(0u64);
                std::iter::from_fn(move || {
                    let current = next?;
                    next = if current == mask {
                        None
                    } else {
                        Some((current.wrapping_sub(mask)) & mask)
                    };
                    Some(Self(current))
                })
            }
        }

        impl Ord for $name {
            fn cmp(&self, other: &Self) -> Ordering {
                lex_cmp(self.0, other.0)
            }
        }

        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                let mut set = Self::empty();
                for value in iter {
                    set.insert(value);
                }
                set
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{{")?;
                for (i, value) in self.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{value}")?;
                }
                write!(f, "}}")
            }
        }
    };
}

bitset_type!(
    /// A subset of the ground set `{0, …, n−1}`.
    ElementSet,
    0
);

bitset_type!(
    /// A subset of the sector indices `{1, …, d+1}`.
    SectorSet,
    1
);

/// Lexicographic comparison of the sorted sequences encoded by two bit patterns.
fn lex_cmp(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let t = diff.trailing_zeros();
    // Both sequences agree below `t`; the one holding `t` is smaller unless
    // the other one has already run out.
    let above = if t == 63 { 0 } else { !0u64 << (t + 1) };
    if a & (1u64 << t) != 0 {
        if b & above != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if a & above != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}
