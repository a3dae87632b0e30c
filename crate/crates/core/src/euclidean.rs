//! Exact convex hull membership in `Q^d` and brute-force verifiers for the
//! Euclidean matroid colorful Carathéodory conditions.

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::matroid::{GroundSet, Matroid};
use crate::report::{ConditionReport, Violation};
use crate::Rational;

/// A map from the ground set to `Q^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalConfiguration {
    dimension: usize,
    ground: GroundSet,
    points: Vec<Vec<Rational>>,
}

impl RationalConfiguration {
    pub fn new(dimension: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        let ground = GroundSet::new(points.len())?;
        for point in &points {
            if point.len() != dimension {
                return Err(Error::DimensionMismatch { expected: dimension, found: point.len() });
            }
        }
        Ok(Self { dimension, ground, points })
    }

    pub fn labeled(dimension: usize, labels: Vec<String>, points: Vec<Vec<Rational>>) -> Result<Self> {
        let mut config = Self::new(dimension, points)?;
        config.ground = GroundSet::labeled(labels)?;
        if config.ground.len() != config.points.len() {
            return Err(Error::LabelCount { expected: config.points.len(), found: config.ground.len() });
        }
        Ok(config)
    }

    /// Builds a configuration from integer coordinates.
    pub fn from_ints(dimension: usize, points: &[&[i64]]) -> Result<Self> {
        let points = points.iter().map(|p| p.iter().map(|&v| Rational::from_integer(v.into())).collect()).collect();
        Self::new(dimension, points)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn point(&self, e: usize) -> &[Rational] {
        &self.points[e]
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// Every point minus `origin`, so that `origin` becomes `0`.
    pub fn translated(&self, origin: &[Rational]) -> Result<Self> {
        if origin.len() != self.dimension {
            return Err(Error::DimensionMismatch { expected: self.dimension, found: origin.len() });
        }
        let points = self.points.iter().map(|p| p.iter().zip(origin).map(|(a, b)| a - b).collect()).collect();
        Ok(Self { dimension: self.dimension, ground: self.ground.clone(), points })
    }

    fn subset_points(&self, set: ElementSet) -> Vec<&[Rational]> {
        set.iter().map(|e| self.points[e].as_slice()).collect()
    }
}

/// Positive weights on `support` summing to one whose combination is `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarycentricCertificate {
    /// Indices into the point list (or ground elements), increasing.
    pub support: Vec<usize>,
    pub weights: Vec<Rational>,
}

impl BarycentricCertificate {
    /// Re-checks positivity, the weight sum and `Σ w_i v_i = 0` exactly.
    pub fn is_valid_for(&self, points: &[&[Rational]]) -> bool {
        if self.support.len() != self.weights.len() || self.support.iter().any(|&i| i >= points.len()) {
            return false;
        }
        if self.weights.iter().any(|w| !w.is_positive()) {
            return false;
        }
        if self.weights.iter().sum::<Rational>() != Rational::one() {
            return false;
        }
        let dimension = points.first().map_or(0, |p| p.len());
        (0..dimension).all(|k| {
            self.support.iter().zip(&self.weights).map(|(&i, w)| w * &points[i][k]).sum::<Rational>().is_zero()
        })
    }

    fn relabeled(self, elements: &[usize]) -> Self {
        Self { support: self.support.into_iter().map(|i| elements[i]).collect(), weights: self.weights }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HullMembership {
    Inside(BarycentricCertificate),
    Outside,
}

impl HullMembership {
    pub fn is_inside(&self) -> bool {
        matches!(self, Self::Inside(_))
    }
}

/// Solves `Σ w_i v_i = 0, Σ w_i = 1` and returns `w` when the solution
/// exists and is unique.
fn unique_affine_weights(points: &[&[Rational]]) -> Option<Vec<Rational>> {
    let cols = points.len();
    let dimension = points.first().map_or(0, |p| p.len());
    let mut rows: Vec<Vec<Rational>> = (0..dimension)
        .map(|k| {
            let mut row: Vec<Rational> = points.iter().map(|p| p[k].clone()).collect();
            row.push(Rational::zero());
            row
        })
        .collect();
    rows.push(vec![Rational::one(); cols + 1]);

    let mut pivot_row = 0;
    for col in 0..cols {
        let found = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(pivot_row, found);
        let inverse = rows[pivot_row][col].recip();
        for value in rows[pivot_row].iter_mut() {
            *value *= &inverse;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (value, p) in row.iter_mut().zip(&pivot) {
                    *value -= &factor * p;
                }
            }
        }
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some(rows[..cols].iter().map(|row| row[cols].clone()).collect())
}

/// Decides `0 ∈ conv(points)` by trying supports of size at most `d + 1`
/// in increasing size and lexicographic order, accepting the first whose
/// affine system has a unique, strictly positive solution.
pub fn conv_contains_origin(points: &[&[Rational]]) -> HullMembership {
    let dimension = points.first().map_or(0, |p| p.len());
    let largest = points.len().min(dimension + 1);
    for size in 1..=largest {
        for support in (0..points.len()).combinations(size) {
            let chosen: Vec<&[Rational]> = support.iter().map(|&i| points[i]).collect();
            if let Some(weights) = unique_affine_weights(&chosen) {
                if weights.iter().all(Signed::is_positive) {
                    return HullMembership::Inside(BarycentricCertificate { support, weights });
                }
            }
        }
    }
    HullMembership::Outside
}

/// Membership test for `V(set)`, with the certificate in ground elements.
pub fn subset_contains_origin(config: &RationalConfiguration, set: ElementSet) -> HullMembership {
    let elements = set.to_vec();
    match conv_contains_origin(&config.subset_points(set)) {
        HullMembership::Inside(cert) => HullMembership::Inside(cert.relabeled(&elements)),
        HullMembership::Outside => HullMembership::Outside,
    }
}

fn check_sizes(matroid: &Matroid, config: &RationalConfiguration) -> Result<()> {
    if matroid.len() != config.len() {
        return Err(Error::SizeMismatch { expected: matroid.len(), found: config.len() });
    }
    Ok(())
}

/// Checks `0 ∈ conv(V(B ∪ C))` for every basis `B` and cocircuit `C`,
/// reporting the lexicographically first failing pair.
pub fn verify_km_condition(matroid: &Matroid, config: &RationalConfiguration) -> Result<ConditionReport> {
    check_sizes(matroid, config)?;
    let cocircuits = matroid.cocircuits();
    for basis in matroid.bases() {
        for &cocircuit in &cocircuits {
            if !subset_contains_origin(config, basis.union(cocircuit)).is_inside() {
                return Ok(ConditionReport::Violated(Violation::BasisCocircuit { basis, cocircuit, sector: None }));
            }
        }
    }
    Ok(ConditionReport::Ok)
}

/// Inclusion-minimal sets meeting every basis in at least two elements,
/// by increasing size and then lexicographically.
pub fn minimal_corank2_sets(matroid: &Matroid) -> Vec<ElementSet> {
    let bases = matroid.bases();
    let qualifies = |s: ElementSet| !bases.is_empty() && bases.iter().all(|b| b.intersection(s).len() >= 2);
    let mut found = Vec::new();
    for size in 2..=matroid.len() {
        for combo in (0..matroid.len()).combinations(size) {
            let set: ElementSet = combo.into_iter().collect();
            if qualifies(set) && set.iter().all(|e| !qualifies(set.without(e))) {
                found.push(set);
            }
        }
    }
    found
}

/// Checks `0 ∈ conv(V(S))` for every minimal set `S` meeting each basis at
/// least twice.
pub fn verify_corank2_condition(matroid: &Matroid, config: &RationalConfiguration) -> Result<ConditionReport> {
    check_sizes(matroid, config)?;
    for set in minimal_corank2_sets(matroid) {
        if !subset_contains_origin(config, set).is_inside() {
            return Ok(ConditionReport::Violated(Violation::Corank2 { set }));
        }
    }
    Ok(ConditionReport::Ok)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KmBasis {
    pub basis: ElementSet,
    pub certificate: BarycentricCertificate,
}

/// The lexicographically first basis (containing `pin`, when given) whose
/// points contain the origin in their convex hull.
pub fn find_km_basis(matroid: &Matroid, config: &RationalConfiguration, pin: Option<usize>) -> Result<Option<KmBasis>> {
    check_sizes(matroid, config)?;
    if let Some(e) = pin {
        matroid.ground().check_element(e)?;
        if matroid.is_loop(e) {
            return Err(Error::LoopElement(e));
        }
    }
    for basis in matroid.bases() {
        if pin.is_some_and(|e| !basis.contains(e)) {
            continue;
        }
        if let HullMembership::Inside(certificate) = subset_contains_origin(config, basis) {
            return Ok(Some(KmBasis { basis, certificate }));
        }
    }
    Ok(None)
}
