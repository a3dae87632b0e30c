//! Seeded random instances and the two planar figure fixtures.
//!
//! Every generator takes an explicit RNG so that a fixed seed reproduces
//! the same instance; [`rng_from_seed`] builds the ChaCha generator used by
//! the command-line tool.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::euclidean::RationalConfiguration;
use crate::formats::parse_rational_instance;
use crate::lp::{ColorfulLpInstance, Constraint, DualHornSystem, ThreeDmInstance, TropicalMatrix};
use crate::matroid::Matroid;
use crate::tropical::{SupportComplex, TropicalConfiguration, TropicalScalar};
use crate::Rational;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The matroid families produced by [`random_matroid`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatroidFamily {
    Partition,
    Uniform,
    Graphic,
    Explicit,
    Truncation,
}

impl MatroidFamily {
    pub const ALL: [Self; 5] = [Self::Partition, Self::Uniform, Self::Graphic, Self::Explicit, Self::Truncation];
}

/// A random partition of `{0, …, n−1}` into `blocks` nonempty blocks.
pub fn random_partition<R: Rng>(rng: &mut R, n: usize, blocks: usize) -> Result<Vec<Vec<usize>>> {
    if blocks > n || (blocks == 0 && n > 0) {
        return Err(Error::InvalidPartition(format!("cannot split {n} elements into {blocks} nonempty blocks")));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut parts: Vec<Vec<usize>> = order[..blocks].iter().map(|&e| vec![e]).collect();
    for &e in &order[blocks..] {
        parts[rng.random_range(0..blocks)].push(e);
    }
    for part in &mut parts {
        part.sort_unstable();
    }
    parts.sort();
    Ok(parts)
}

/// A random matroid on `n` elements from the given family.
pub fn random_matroid<R: Rng>(rng: &mut R, n: usize, family: MatroidFamily) -> Result<Matroid> {
    match family {
        MatroidFamily::Partition => {
            let blocks = if n == 0 { 0 } else { rng.random_range(1..=n) };
            Matroid::partition(n, random_partition(rng, n, blocks)?)
        }
        MatroidFamily::Uniform => Matroid::uniform(n, rng.random_range(0..=n)),
        MatroidFamily::Graphic => {
            let vertices = rng.random_range(1..=n.max(1) + 1);
            let edges = (0..n).map(|_| (rng.random_range(0..vertices), rng.random_range(0..vertices))).collect();
            Matroid::graphic(edges)
        }
        MatroidFamily::Explicit => {
            let source = if rng.random_bool(0.5) { MatroidFamily::Graphic } else { MatroidFamily::Partition };
            let inner = random_matroid(rng, n, source)?;
            let seed = if rng.random_bool(0.5) { inner.dual() } else { inner };
            let bases = seed.bases().into_iter().map(|b| b.to_vec()).collect();
            Matroid::explicit(n, bases)
        }
        MatroidFamily::Truncation => {
            let source =
                [MatroidFamily::Partition, MatroidFamily::Uniform, MatroidFamily::Graphic][rng.random_range(0..3)];
            let inner = random_matroid(rng, n, source)?;
            let k = rng.random_range(0..=inner.full_rank());
            inner.truncate(k)
        }
    }
}

/// A random matroid of rank exactly `rank` on `n ≥ rank` elements. Draws
/// from `family` until the rank is at least `rank`, truncating when it is
/// larger, and falls back to the uniform matroid.
pub fn random_matroid_of_rank<R: Rng>(rng: &mut R, n: usize, rank: usize, family: MatroidFamily) -> Result<Matroid> {
    if rank > n {
        return Err(Error::RankOutOfRange { k: rank, rank: n });
    }
    for _ in 0..64 {
        let m = random_matroid(rng, n, family)?;
        if m.full_rank() == rank {
            return Ok(m);
        }
        if m.full_rank() > rank && rng.random_bool(0.5) {
            return m.truncate(rank);
        }
    }
    Matroid::uniform(n, rank)
}

/// A random integer or half-integer scalar in `[−range, range]`, or `−∞`
/// with probability `neg_inf`.
pub fn random_scalar<R: Rng>(rng: &mut R, range: i64, neg_inf: f64) -> TropicalScalar {
    if rng.random_bool(neg_inf) {
        return TropicalScalar::NegInf;
    }
    let denom = if rng.random_bool(0.25) { 2 } else { 1 };
    let numer = rng.random_range(-range * denom..=range * denom);
    TropicalScalar::Finite(Rational::new(numer.into(), denom.into()))
}

/// `n` random points of `T_max^d`, each coordinate `−∞` with probability
/// `neg_inf`.
pub fn random_tropical_configuration<R: Rng>(
    rng: &mut R,
    n: usize,
    d: usize,
    range: i64,
    neg_inf: f64,
) -> Result<TropicalConfiguration> {
    let points = (0..n).map(|_| (0..d).map(|_| random_scalar(rng, range, neg_inf)).collect()).collect();
    TropicalConfiguration::new(d, points)
}

/// A configuration in which every point lies in exactly one sector of the
/// origin. Returns the configuration and the chosen sectors.
pub fn random_generic_configuration<R: Rng>(
    rng: &mut R,
    n: usize,
    d: usize,
    range: i64,
) -> Result<(TropicalConfiguration, Vec<usize>)> {
    let range = range.max(1);
    let mut sectors = Vec::with_capacity(n);
    let points = (0..n)
        .map(|_| {
            let sector = rng.random_range(1..=d + 1);
            sectors.push(sector);
            if sector == d + 1 {
                (0..d)
                    .map(|_| {
                        if rng.random_bool(0.3) {
                            TropicalScalar::NegInf
                        } else {
                            TropicalScalar::int(-rng.random_range(1..=range))
                        }
                    })
                    .collect()
            } else {
                let top = rng.random_range(1..=range);
                (1..=d)
                    .map(|k| {
                        if k == sector {
                            TropicalScalar::int(top)
                        } else if rng.random_bool(0.3) {
                            TropicalScalar::NegInf
                        } else {
                            TropicalScalar::int(rng.random_range(-range..top))
                        }
                    })
                    .collect()
            }
        })
        .collect();
    Ok((TropicalConfiguration::new(d, points)?, sectors))
}

/// `n` random integer points of `Q^d` with entries in `[−range, range]`.
pub fn random_rational_configuration<R: Rng>(
    rng: &mut R,
    n: usize,
    d: usize,
    range: i64,
) -> Result<RationalConfiguration> {
    let points = (0..n)
        .map(|_| (0..d).map(|_| Rational::from_integer(rng.random_range(-range..=range).into())).collect())
        .collect();
    RationalConfiguration::new(d, points)
}

/// A random 3-partite hypergraph with parts `a1..ak`, `b1..bk`, `c1..ck`
/// and `edges` distinct hyperedges (capped at `k^3`).
pub fn random_3dm<R: Rng>(rng: &mut R, k: usize, edges: usize) -> Result<ThreeDmInstance> {
    let mut all: Vec<[usize; 3]> =
        (0..k).flat_map(|a| (0..k).flat_map(move |b| (0..k).map(move |c| [a, b, c]))).collect();
    all.shuffle(rng);
    all.truncate(edges);
    all.sort_unstable();
    let parts = ["a", "b", "c"].map(|p| (1..=k).map(|i| format!("{p}{i}")).collect());
    ThreeDmInstance::new(k, parts, all)
}

/// A random colorful program with `rows × n` entries (`−∞` with
/// probability `neg_inf`) and `r` color classes.
pub fn random_clp<R: Rng>(
    rng: &mut R,
    rows: usize,
    n: usize,
    r: usize,
    range: i64,
    neg_inf: f64,
) -> Result<ColorfulLpInstance> {
    if r > n {
        return Err(Error::InvalidInstance(format!("cannot split {n} columns into {r} nonempty classes")));
    }
    let classes = random_partition(rng, n, r)?;
    let entries = (0..rows).map(|_| (0..n).map(|_| random_scalar(rng, range, neg_inf)).collect()).collect();
    ColorfulLpInstance::new(TropicalMatrix::new(n, entries)?, classes)
}

/// A random complex on `n` elements with at most `max_facets` facets: the
/// maximal members of a family of random subsets.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize, max_facets: usize) -> Result<SupportComplex> {
    let count = rng.random_range(1..=max_facets.max(1));
    let family: Vec<ElementSet> = (0..count).map(|_| (0..n).filter(|_| rng.random_bool(0.45)).collect()).collect();
    let facets: Vec<ElementSet> =
        family.iter().copied().filter(|&f| !family.iter().any(|&g| f != g && f.is_subset(g))).collect();
    SupportComplex::new(n, facets)
}

/// A random `{−∞, 0}` system with `m` constraints.
pub fn random_horn<R: Rng>(rng: &mut R, n: usize, m: usize) -> Result<DualHornSystem> {
    let terms = |rng: &mut R| -> Vec<usize> {
        let len = rng.random_range(0..=3.min(n));
        (0..len).map(|_| rng.random_range(0..n)).collect()
    };
    let constraints = (0..m)
        .map(|_| {
            if n == 0 || rng.random_bool(0.25) {
                Constraint::Equation(terms(rng))
            } else {
                let lhs = rng.random_range(0..n);
                Constraint::Inequality { lhs, rhs: terms(rng) }
            }
        })
        .collect();
    DualHornSystem::new(n, constraints)
}

/// The first planar fixture: colors red, green, blue in the partition
/// matroid, origin `(0, 0)`.
pub fn figure1_json() -> Value {
    json!({
        "matroid": {"type": "partition", "blocks": [["r1", "r2"], ["g1", "g2"], ["b"]]},
        "configuration": {
            "d": 2,
            "points": {"r1": [-2, 1], "r2": [-2, 0], "g1": [2, 1], "g2": [2, 2], "b": [0, -1]},
            "origin": [0, 0]
        }
    })
}

/// The second planar fixture, with target `(0, 1/2)`.
pub fn figure2_json() -> Value {
    json!({
        "matroid": {"type": "partition", "blocks": [["r1", "r2"], ["g1", "g2"], ["b1", "b2", "b3", "b4"]]},
        "configuration": {
            "d": 2,
            "points": {
                "r1": [-2, 1], "r2": [-2, -1],
                "g1": [2, 1], "g2": [2, -1],
                "b1": [1, 1], "b2": [1, 0], "b3": [-1, 1], "b4": [-1, 0]
            },
            "origin": [0, "1/2"]
        }
    })
}

pub fn figure1() -> (Matroid, RationalConfiguration) {
    parse_rational_instance(&figure1_json()).expect("fixture is well formed")
}

pub fn figure2() -> (Matroid, RationalConfiguration) {
    parse_rational_instance(&figure2_json()).expect("fixture is well formed")
}
