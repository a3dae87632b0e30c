//! Clutters (antichains of sets) and their blockers.

use std::collections::BTreeSet;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::matroid::GroundSet;

/// An antichain of subsets of a ground set, kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clutter {
    ground: GroundSet,
    members: Vec<ElementSet>,
}

/// Witness that `(first ∖ element) ∪ f` is never a member for `f ∈ second ∖ first`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub first: ElementSet,
    pub second: ElementSet,
    pub element: usize,
}

/// Witness that `(member ∖ blocker_member) ∪ element` is not a member although
/// `member` and `blocker_member` meet in exactly one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockerViolation {
    pub member: ElementSet,
    pub blocker_member: ElementSet,
    pub element: usize,
}

/// Outcome of the two independent basis-family tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisClutterCheck {
    /// `false` only for the family with no members at all.
    pub nonempty: bool,
    pub exchange: Option<ExchangeViolation>,
    pub blocker_criterion: Option<BlockerViolation>,
}

impl BasisClutterCheck {
    /// Verdict of the exchange-axiom route.
    pub fn is_matroid(&self) -> bool {
        self.nonempty && self.exchange.is_none()
    }

    /// Verdict of the blocker route.
    pub fn blocker_says_matroid(&self) -> bool {
        self.nonempty && self.blocker_criterion.is_none()
    }
}

impl Clutter {
    /// Builds a clutter; duplicate members are merged, comparable pairs rejected.
    pub fn new(n: usize, members: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let mut unique = BTreeSet::new();
        for m in members {
            ground.check(m)?;
            unique.insert(m);
        }
        let members: Vec<_> = unique.into_iter().collect();
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                if a.is_subset(*b) {
                    return Err(Error::NotAntichain(a.to_string(), b.to_string()));
                }
                if b.is_subset(*a) {
                    return Err(Error::NotAntichain(b.to_string(), a.to_string()));
                }
            }
        }
        Ok(Self { ground, members })
    }

    /// The inclusion-minimal members of an arbitrary family.
    pub fn minimal(n: usize, family: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let mut sets: Vec<ElementSet> = Vec::new();
        for s in family {
            ground.check(s)?;
            sets.push(s);
        }
        Ok(Self { ground, members: minimize(sets) })
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// All inclusion-minimal sets meeting every member.
    ///
    /// A clutter containing the empty set has no transversal at all, so its
    /// blocker is the empty clutter; the blocker of the empty clutter is `{∅}`.
    pub fn blocker(&self) -> Clutter {
        // Berge's incremental construction: minimal transversals of the first
        // i members, extended one member at a time.
        let mut transversals = vec![ElementSet::empty()];
        for &member in &self.members {
            let mut next = Vec::new();
            for &t in &transversals {
                if !t.is_disjoint(member) {
                    next.push(t);
                } else {
                    next.extend(member.iter().map(|e| t.with(e)));
                }
            }
            transversals = minimize(next);
        }
        Clutter { ground: self.ground.clone(), members: transversals }
    }

    /// First failure of the exchange axiom, scanning pairs in lexicographic order.
    pub fn exchange_violation(&self) -> Option<ExchangeViolation> {
        exchange_violation(&self.members)
    }

    /// First failure of the blocker criterion: for every member `H`, every
    /// blocker member `K` with `|H ∩ K| = 1` and every `k ∈ K`, the set
    /// `(H ∖ K) ∪ k` must be a member.
    pub fn blocker_criterion_violation(&self) -> Option<BlockerViolation> {
        let blocker = self.blocker();
        let members: BTreeSet<_> = self.members.iter().copied().collect();
        for &h in &self.members {
            for &k_set in blocker.members() {
                if h.intersection(k_set).len() != 1 {
                    continue;
                }
                let rest = h.difference(k_set);
                if let Some(k) = k_set.iter().find(|&k| !members.contains(&rest.with(k))) {
                    return Some(BlockerViolation { member: h, blocker_member: k_set, element: k });
                }
            }
        }
        None
    }

    /// Decides whether the members are the bases of a matroid, by the exchange
    /// axiom and independently by the blocker criterion.
    pub fn is_matroid_basis_clutter(&self) -> BasisClutterCheck {
        BasisClutterCheck {
            nonempty: !self.members.is_empty(),
            exchange: self.exchange_violation(),
            blocker_criterion: self.blocker_criterion_violation(),
        }
    }
}

pub(crate) fn exchange_violation(members: &[ElementSet]) -> Option<ExchangeViolation> {
    let family: BTreeSet<_> = members.iter().copied().collect();
    for &first in members {
        for &second in members {
            for e in first.difference(second).iter() {
                let rest = first.without(e);
                if !second.difference(first).iter().any(|f| family.contains(&rest.with(f))) {
                    return Some(ExchangeViolation { first, second, element: e });
                }
            }
        }
    }
    None
}

/// Inclusion-minimal members, sorted and deduplicated.
fn minimize(mut sets: Vec<ElementSet>) -> Vec<ElementSet> {
    sets.sort_by_key(|s| (s.len(), *s));
    sets.dedup();
    let mut kept: Vec<ElementSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}
