//! Max-plus point configurations, affine sectors and covector graphs.
//!
//! For a finite target `p ∈ R^d` the space `T_max^d` splits into `d + 1`
//! affine sectors: `z` lies in sector `i` when coordinate `i` attains
//! `max(z_1 − p_1, …, z_d − p_d, 0)`, the trailing `0` standing for a virtual
//! coordinate `d + 1`. The target lies in the tropical hull of a set of
//! generators exactly when every sector contains one of them.

mod complex;
mod scalar;

pub use complex::{realize_complex, support_complex, SupportComplex};
pub use scalar::{tropical_sum, TropicalScalar};

use crate::bitset::{ElementSet, SectorSet, MAX_BITS};
use crate::error::{Error, Result};
use crate::matroid::GroundSet;
use crate::Rational;

/// Largest supported dimension; `d + 1` sectors must fit a [`SectorSet`].
pub const MAX_DIMENSION: usize = MAX_BITS - 1;

/// A map from the ground set to `T_max^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalConfiguration {
    dimension: usize,
    ground: GroundSet,
    points: Vec<Vec<TropicalScalar>>,
}

impl TropicalConfiguration {
    pub fn new(dimension: usize, points: Vec<Vec<TropicalScalar>>) -> Result<Self> {
        if dimension > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge(dimension));
        }
        let ground = GroundSet::new(points.len())?;
        for point in &points {
            if point.len() != dimension {
                return Err(Error::DimensionMismatch { expected: dimension, found: point.len() });
            }
        }
        Ok(Self { dimension, ground, points })
    }

    pub fn labeled(dimension: usize, labels: Vec<String>, points: Vec<Vec<TropicalScalar>>) -> Result<Self> {
        let mut config = Self::new(dimension, points)?;
        config.ground = GroundSet::labeled(labels)?;
        if config.ground.len() != config.points.len() {
            return Err(Error::LabelCount { expected: config.points.len(), found: config.ground.len() });
        }
        Ok(config)
    }

    /// Convenience constructor from integers, with `None` for `−∞`.
    pub fn from_ints(dimension: usize, points: &[&[Option<i64>]]) -> Result<Self> {
        let points = points
            .iter()
            .map(|p| p.iter().map(|v| v.map_or(TropicalScalar::NegInf, TropicalScalar::int)).collect())
            .collect();
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

    pub fn point(&self, e: usize) -> &[TropicalScalar] {
        &self.points[e]
    }

    pub fn points(&self) -> &[Vec<TropicalScalar>] {
        &self.points
    }

    /// The configuration `v ↦ v − p` for a finite `p`.
    pub fn translated(&self, target: &[TropicalScalar]) -> Result<Self> {
        let p = finite_target(target, self.dimension)?;
        let points = self.points.iter().map(|v| v.iter().zip(&p).map(|(x, y)| x.minus(y)).collect()).collect();
        Ok(Self { dimension: self.dimension, ground: self.ground.clone(), points })
    }

    /// Multiplies each generator tropically by a finite scalar.
    pub fn scaled(&self, factors: &[Rational]) -> Result<Self> {
        if factors.len() != self.len() {
            return Err(Error::SizeMismatch { expected: self.len(), found: factors.len() });
        }
        let points = self
            .points
            .iter()
            .zip(factors)
            .map(|(v, mu)| v.iter().map(|x| x.otimes(&TropicalScalar::Finite(mu.clone()))).collect())
            .collect();
        Ok(Self { dimension: self.dimension, ground: self.ground.clone(), points })
    }
}

/// Checks that `target` has length `dimension` and no `−∞` entry.
pub fn finite_target(target: &[TropicalScalar], dimension: usize) -> Result<Vec<Rational>> {
    if target.len() != dimension {
        return Err(Error::DimensionMismatch { expected: dimension, found: target.len() });
    }
    target.iter().map(|x| x.as_finite().cloned().ok_or(Error::InfiniteTarget)).collect()
}

/// The sectors of `target` containing `point`: the argmax set of
/// `(v_1 − p_1, …, v_d − p_d, 0)`. Never empty.
pub fn sector_neighbors(point: &[TropicalScalar], target: &[TropicalScalar]) -> Result<SectorSet> {
    if point.len() > MAX_DIMENSION {
        return Err(Error::DimensionTooLarge(point.len()));
    }
    let p = finite_target(target, point.len())?;
    Ok(neighbors_finite(point, &p))
}

fn neighbors_finite(point: &[TropicalScalar], target: &[Rational]) -> SectorSet {
    let d = point.len();
    let mut best = Rational::from_integer(0.into());
    let mut sectors = SectorSet::singleton(d + 1);
    for (k, (v, p)) in point.iter().zip(target).enumerate() {
        let TropicalScalar::Finite(v) = v else { continue };
        let diff = v - p;
        if diff > best {
            best = diff;
            sectors = SectorSet::singleton(k + 1);
        } else if diff == best {
            sectors.insert(k + 1);
        }
    }
    sectors
}

/// Bipartite adjacency between the ground set and the sectors `1..=d+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovectorGraph {
    dimension: usize,
    neighborhoods: Vec<SectorSet>,
}

impl CovectorGraph {
    pub fn from_neighborhoods(dimension: usize, neighborhoods: Vec<SectorSet>) -> Self {
        Self { dimension, neighborhoods }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn sector_count(&self) -> usize {
        self.dimension + 1
    }

    pub fn all_sectors(&self) -> SectorSet {
        SectorSet::full(self.dimension + 1)
    }

    pub fn neighborhood(&self, e: usize) -> SectorSet {
        self.neighborhoods[e]
    }

    pub fn neighborhoods(&self) -> &[SectorSet] {
        &self.neighborhoods
    }

    /// Union of the neighborhoods of the elements of `set`.
    pub fn cover(&self, set: ElementSet) -> SectorSet {
        set.iter().fold(SectorSet::empty(), |acc, e| acc.union(self.neighborhoods[e]))
    }

    pub fn covers_all(&self, set: ElementSet) -> bool {
        self.cover(set) == self.all_sectors()
    }

    /// The smallest sector not reached from `set`.
    pub fn first_uncovered(&self, set: ElementSet) -> Option<usize> {
        self.all_sectors().difference(self.cover(set)).first()
    }

    /// Elements attached to `sector`.
    pub fn sector_elements(&self, sector: usize) -> ElementSet {
        (0..self.neighborhoods.len()).filter(|&e| self.neighborhoods[e].contains(sector)).collect()
    }
}

/// The covector graph of `target` with respect to `config`.
pub fn covector_graph(config: &TropicalConfiguration, target: &[TropicalScalar]) -> Result<CovectorGraph> {
    let p = finite_target(target, config.dimension)?;
    Ok(CovectorGraph {
        dimension: config.dimension,
        neighborhoods: config.points.iter().map(|v| neighbors_finite(v, &p)).collect(),
    })
}

/// The covector graph of the origin.
pub fn covector_graph_at_origin(config: &TropicalConfiguration) -> CovectorGraph {
    let origin = vec![TropicalScalar::zero(); config.dimension];
    covector_graph(config, &origin).expect("origin is finite and of matching dimension")
}

/// Result of a tropical hull membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Coefficients `λ` with `⊕ λ_j ⊙ v_j = p` and `⊕ λ_j = 0`.
    Inside { coefficients: Vec<TropicalScalar> },
    /// A sector containing no generator.
    Outside { sector: usize },
}

impl Membership {
    pub fn is_inside(&self) -> bool {
        matches!(self, Self::Inside { .. })
    }
}

/// Decides whether `target` lies in the tropical hull of all generators.
pub fn tropical_membership(target: &[TropicalScalar], config: &TropicalConfiguration) -> Result<Membership> {
    tropical_membership_within(target, config, config.ground.full())
}

/// Membership in the hull of the generators indexed by `subset`; the
/// certificate assigns `−∞` to every other element.
///
/// The certificate is `λ_j = −max(max_k (v_jk − p_k), 0)`, the pointwise
/// largest coefficient vector with `λ_j ⊙ v_j ≤ p` and `λ_j ≤ 0`.
pub fn tropical_membership_within(
    target: &[TropicalScalar],
    config: &TropicalConfiguration,
    subset: ElementSet,
) -> Result<Membership> {
    config.ground.check(subset)?;
    let p = finite_target(target, config.dimension)?;
    let mut covered = SectorSet::empty();
    for e in subset.iter() {
        covered = covered.union(neighbors_finite(&config.points[e], &p));
    }
    let all = SectorSet::full(config.dimension + 1);
    if let Some(sector) = all.difference(covered).first() {
        return Ok(Membership::Outside { sector });
    }
    let coefficients = (0..config.len())
        .map(|e| {
            if !subset.contains(e) {
                return TropicalScalar::NegInf;
            }
            let mut worst = Rational::from_integer(0.into());
            for (v, pk) in config.points[e].iter().zip(&p) {
                if let TropicalScalar::Finite(v) = v {
                    let diff = v - pk;
                    if diff > worst {
                        worst = diff;
                    }
                }
            }
            TropicalScalar::Finite(-worst)
        })
        .collect();
    Ok(Membership::Inside { coefficients })
}

/// `⊕_j λ_j ⊙ v_j`, coordinatewise.
pub fn eval_combination(
    coefficients: &[TropicalScalar],
    config: &TropicalConfiguration,
) -> Result<Vec<TropicalScalar>> {
    if coefficients.len() != config.len() {
        return Err(Error::SizeMismatch { expected: config.len(), found: coefficients.len() });
    }
    let mut result = vec![TropicalScalar::NegInf; config.dimension];
    for (lambda, v) in coefficients.iter().zip(&config.points) {
        if lambda.is_neg_inf() {
            continue;
        }
        for (acc, x) in result.iter_mut().zip(v) {
            let term = lambda.otimes(x);
            if term > *acc {
                *acc = term;
            }
        }
    }
    Ok(result)
}

/// Checks an inside-certificate: the combination reproduces `target` and the
/// coefficients tropically sum to `0`.
pub fn is_valid_certificate(
    coefficients: &[TropicalScalar],
    config: &TropicalConfiguration,
    target: &[TropicalScalar],
) -> bool {
    match eval_combination(coefficients, config) {
        Ok(value) => value == target && tropical_sum(coefficients) == TropicalScalar::zero(),
        Err(_) => false,
    }
}
