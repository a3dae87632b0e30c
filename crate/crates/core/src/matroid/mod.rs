//! Finite matroids given by independence oracles.
//!
//! Every kind answers independence queries directly; rank, bases and
//! cocircuits are derived from that oracle so that all kinds share one
//! code path.

mod clutter;

pub use clutter::{BasisClutterCheck, BlockerViolation, Clutter, ExchangeViolation};

use itertools::Itertools;
use std::collections::BTreeSet;

use crate::bitset::{ElementSet, MAX_BITS};
use crate::error::{Error, Result};

/// The ground set `{0, …, n−1}` with optional element names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    n: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_BITS {
            return Err(Error::GroundSetTooLarge(n));
        }
        Ok(Self { n, labels: None })
    }

    pub fn labeled(labels: Vec<String>) -> Result<Self> {
        let mut ground = Self::new(labels.len())?;
        ground.set_labels(labels)?;
        Ok(ground)
    }

    fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.n {
            return Err(Error::LabelCount { expected: self.n, found: labels.len() });
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of `e`, or its index when the ground set is unlabeled.
    pub fn label(&self, e: usize) -> String {
        match &self.labels {
            Some(labels) => labels[e].clone(),
            None => e.to_string(),
        }
    }

    /// Resolves a label, falling back to a numeric index.
    pub fn index_of(&self, label: &str) -> Result<usize> {
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == label) {
                return Ok(i);
            }
        }
        match label.parse::<usize>() {
            Ok(i) if i < self.n => Ok(i),
            _ => Err(Error::UnknownLabel(label.to_string())),
        }
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn check(&self, set: ElementSet) -> Result<()> {
        match set.last() {
            Some(e) if e >= self.n => Err(Error::ElementOutOfRange { element: e, n: self.n }),
            _ => Ok(()),
        }
    }

    pub fn check_element(&self, e: usize) -> Result<()> {
        if e >= self.n {
            Err(Error::ElementOutOfRange { element: e, n: self.n })
        } else {
            Ok(())
        }
    }
}

/// How a matroid answers independence queries.
#[derive(Clone, Debug)]
pub enum MatroidKind {
    /// Independent iff the set meets each block at most once.
    Partition { blocks: Vec<ElementSet> },
    /// Independent iff the set has at most `rank` elements.
    Uniform { rank: usize },
    /// Element `i` is edge `edges[i]` of a multigraph; forests are independent.
    Graphic { edges: Vec<(usize, usize)> },
    /// Independent iff contained in a listed basis.
    Explicit { bases: Vec<ElementSet> },
    /// Independent in `inner` and of size at most `k`.
    Truncation { inner: Box<Matroid>, k: usize },
}

#[derive(Clone, Debug)]
pub struct Matroid {
    ground: GroundSet,
    kind: MatroidKind,
    rank: usize,
}

impl Matroid {
    fn from_kind(ground: GroundSet, kind: MatroidKind) -> Self {
        let mut matroid = Self { ground, kind, rank: 0 };
        matroid.rank = matroid.rank_unchecked(matroid.ground.full());
        matroid
    }

    pub fn partition(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let mut covered = ElementSet::empty();
        let mut sets = Vec::with_capacity(blocks.len());
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            let mut set = ElementSet::empty();
            for &e in block {
                ground.check_element(e)?;
                if covered.contains(e) || set.contains(e) {
                    return Err(Error::InvalidPartition(format!("element {e} appears twice")));
                }
                set.insert(e);
            }
            covered = covered.union(set);
            sets.push(set);
        }
        if covered != ground.full() {
            let missing = ground.full().difference(covered);
            return Err(Error::InvalidPartition(format!("elements {missing} are not covered")));
        }
        Ok(Self::from_kind(ground, MatroidKind::Partition { blocks: sets }))
    }

    pub fn uniform(n: usize, rank: usize) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        if rank > n {
            return Err(Error::RankOutOfRange { k: rank, rank: n });
        }
        Ok(Self::from_kind(ground, MatroidKind::Uniform { rank }))
    }

    /// The free matroid, in which every set is independent.
    pub fn free(n: usize) -> Result<Self> {
        Self::uniform(n, n)
    }

    /// Cycle matroid of a multigraph; element `i` is `edges[i]`. Graph loops
    /// become matroid loops.
    pub fn graphic(edges: Vec<(usize, usize)>) -> Result<Self> {
        let ground = GroundSet::new(edges.len())?;
        Ok(Self::from_kind(ground, MatroidKind::Graphic { edges }))
    }

    /// A matroid given by its list of bases. The exchange axiom is checked
    /// eagerly and violations are rejected.
    pub fn explicit(n: usize, bases: Vec<Vec<usize>>) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let mut sets = BTreeSet::new();
        for basis in &bases {
            let set: ElementSet = basis.iter().copied().collect();
            if set.len() != basis.len() {
                return Err(Error::InvalidBases(format!("basis {basis:?} repeats an element")));
            }
            ground.check(set)?;
            sets.insert(set);
        }
        Self::from_basis_sets(ground, sets.into_iter().collect())
    }

    fn from_basis_sets(ground: GroundSet, bases: Vec<ElementSet>) -> Result<Self> {
        let Some(first) = bases.first() else {
            return Err(Error::InvalidBases("no bases given".into()));
        };
        if let Some(b) = bases.iter().find(|b| b.len() != first.len()) {
            return Err(Error::InvalidBases(format!("bases {first} and {b} have different cardinalities")));
        }
        if let Some(v) = clutter::exchange_violation(&bases) {
            return Err(Error::InvalidBases(format!(
                "exchange fails for {} -> {} at element {}",
                v.first, v.second, v.element
            )));
        }
        Ok(Self::from_kind(ground, MatroidKind::Explicit { bases }))
    }

    /// Attaches element labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        self.ground.set_labels(labels)?;
        Ok(self)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn kind(&self) -> &MatroidKind {
        &self.kind
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// Rank of the whole ground set.
    pub fn full_rank(&self) -> usize {
        self.rank
    }

    pub fn is_independent(&self, set: ElementSet) -> Result<bool> {
        self.ground.check(set)?;
        Ok(self.independent(set))
    }

    /// Independence test without the range check.
    pub(crate) fn independent(&self, set: ElementSet) -> bool {
        match &self.kind {
            MatroidKind::Partition { blocks } => blocks.iter().all(|b| b.intersection(set).len() <= 1),
            MatroidKind::Uniform { rank } => set.len() <= *rank,
            MatroidKind::Graphic { edges } => is_forest(edges, set),
            MatroidKind::Explicit { bases } => bases.iter().any(|b| set.is_subset(*b)),
            MatroidKind::Truncation { inner, k } => set.len() <= *k && inner.independent(set),
        }
    }

    pub fn rank(&self, set: ElementSet) -> Result<usize> {
        self.ground.check(set)?;
        Ok(self.rank_unchecked(set))
    }

    pub(crate) fn rank_unchecked(&self, set: ElementSet) -> usize {
        self.greedy_independent(set, ElementSet::empty()).len()
    }

    /// Greedily extends the independent set `start` by elements of `within`
    /// in index order.
    pub(crate) fn greedy_independent(&self, within: ElementSet, start: ElementSet) -> ElementSet {
        let mut current = start;
        for e in within.difference(start).iter() {
            let candidate = current.with(e);
            if self.independent(candidate) {
                current = candidate;
            }
        }
        current
    }

    /// The lexicographically smallest basis.
    pub fn greedy_basis(&self) -> ElementSet {
        self.greedy_independent(self.ground.full(), ElementSet::empty())
    }

    pub fn is_basis(&self, set: ElementSet) -> bool {
        self.ground.check(set).is_ok() && set.len() == self.rank && self.independent(set)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        !self.independent(ElementSet::singleton(e))
    }

    pub fn loops(&self) -> ElementSet {
        (0..self.len()).filter(|&e| self.is_loop(e)).collect()
    }

    /// All bases in lexicographic order.
    pub fn bases(&self) -> Vec<ElementSet> {
        if let MatroidKind::Explicit { bases } = &self.kind {
            return bases.clone();
        }
        (0..self.len())
            .combinations(self.rank)
            .map(|c| c.into_iter().collect::<ElementSet>())
            .filter(|&s| self.independent(s))
            .collect()
    }

    /// Closure of `set`: the elements whose addition leaves the rank unchanged.
    pub fn closure(&self, set: ElementSet) -> ElementSet {
        let basis = self.greedy_independent(set, ElementSet::empty());
        let mut flat = set;
        for e in self.ground.full().difference(set).iter() {
            if !self.independent(basis.with(e)) {
                flat.insert(e);
            }
        }
        flat
    }

    /// All cocircuits in lexicographic order, as complements of hyperplanes.
    /// Every hyperplane is the closure of an independent set of size
    /// `rank − 1`; a rank-0 matroid has no cocircuits.
    pub fn cocircuits(&self) -> Vec<ElementSet> {
        if self.rank == 0 {
            return Vec::new();
        }
        let full = self.ground.full();
        let mut hyperplanes = BTreeSet::new();
        for combo in (0..self.len()).combinations(self.rank - 1) {
            let set: ElementSet = combo.into_iter().collect();
            if self.independent(set) {
                hyperplanes.insert(self.closure(set));
            }
        }
        let mut cocircuits: Vec<_> = hyperplanes.into_iter().map(|h| full.difference(h)).collect();
        cocircuits.sort();
        cocircuits
    }

    /// `{f : (B ∖ e) ∪ f is a basis}`, the unique cocircuit meeting `B` in `{e}`.
    pub fn fundamental_cocircuit(&self, basis: ElementSet, e: usize) -> Result<ElementSet> {
        self.ground.check(basis)?;
        if !self.is_basis(basis) {
            return Err(Error::NotABasis(basis.to_string()));
        }
        if !basis.contains(e) {
            return Err(Error::NotInBasis(e));
        }
        Ok(self.fundamental_cocircuit_unchecked(basis, e))
    }

    pub(crate) fn fundamental_cocircuit_unchecked(&self, basis: ElementSet, e: usize) -> ElementSet {
        let rest = basis.without(e);
        let mut cocircuit = ElementSet::singleton(e);
        for f in self.ground.full().difference(basis).iter() {
            if self.independent(rest.with(f)) {
                cocircuit.insert(f);
            }
        }
        cocircuit
    }

    /// The dual matroid as an explicit basis family.
    pub fn dual(&self) -> Matroid {
        let full = self.ground.full();
        let mut bases: Vec<_> = self.bases().into_iter().map(|b| full.difference(b)).collect();
        bases.sort();
        let rank = self.len() - self.rank;
        Self { ground: self.ground.clone(), kind: MatroidKind::Explicit { bases }, rank }
    }

    /// Caps independence at cardinality `k`.
    pub fn truncate(&self, k: usize) -> Result<Matroid> {
        if k > self.rank {
            return Err(Error::RankOutOfRange { k, rank: self.rank });
        }
        Ok(Self {
            ground: self.ground.clone(),
            kind: MatroidKind::Truncation { inner: Box::new(self.clone()), k },
            rank: k,
        })
    }

    /// Rank of every subset, indexed by raw bits. Only for small ground sets.
    pub fn rank_table(&self) -> Vec<usize> {
        assert!(self.len() <= 20, "rank table requested for {} elements", self.len());
        (0..1u64 << self.len()).map(|bits| self.rank_unchecked(ElementSet::from_bits(bits))).collect()
    }
}

fn is_forest(edges: &[(usize, usize)], set: ElementSet) -> bool {
    let vertices = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in set.iter() {
        let (u, v) = edges[i];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}
