//! Brute-force reference oracles for the test suites.
//!
//! Each oracle decides its question by plain enumeration or by a method
//! different from the library's, so that agreement is meaningful: tropical
//! hull membership by residuation instead of sector coverage, Euclidean
//! membership by searching for a strictly separating normal, cocircuits as
//! circuits of the dual, and so on. Everything here is exponential.

use num_traits::{Signed, Zero};
use tropmat_core::euclidean::RationalConfiguration;
use tropmat_core::lp::{ColorfulLpInstance, DualHornSystem, ThreeDmInstance, TropicalMatrix};
use tropmat_core::matroid::Matroid;
use tropmat_core::tropical::{TropicalConfiguration, TropicalScalar};
use tropmat_core::{ElementSet, Rational};

/// All subsets of `{0, …, n−1}` in increasing size, then lexicographically.
pub fn subsets_by_size(n: usize) -> Vec<ElementSet> {
    let mut all: Vec<ElementSet> = (0..1u64 << n).map(ElementSet::from_bits).collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    all
}

fn independent(m: &Matroid, s: ElementSet) -> bool {
    m.is_independent(s).expect("set is in range")
}

/// Bases as the independent sets of maximum size, found by scanning all subsets.
pub fn bases(m: &Matroid) -> Vec<ElementSet> {
    let all: Vec<ElementSet> = subsets_by_size(m.len()).into_iter().filter(|&s| independent(m, s)).collect();
    let r = all.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut out: Vec<ElementSet> = all.into_iter().filter(|s| s.len() == r).collect();
    out.sort();
    out
}

/// Rank as the size of the largest independent subset.
pub fn rank(m: &Matroid, set: ElementSet) -> usize {
    set.subsets().filter(|&s| independent(m, s)).map(|s| s.len()).max().unwrap_or(0)
}

/// Inclusion-minimal members of `family`, sorted.
pub fn minimal_members(mut family: Vec<ElementSet>) -> Vec<ElementSet> {
    family.sort();
    family.dedup();
    let mut out: Vec<ElementSet> =
        family.iter().copied().filter(|&f| !family.iter().any(|&g| g != f && g.is_subset(f))).collect();
    out.sort();
    out
}

/// Cocircuits as minimal dependent sets of the dual matroid.
pub fn cocircuits_via_dual(m: &Matroid) -> Vec<ElementSet> {
    let dual = m.dual();
    let dependent = subsets_by_size(m.len()).into_iter().filter(|&s| !independent(&dual, s)).collect();
    minimal_members(dependent)
}

/// Cocircuits as minimal sets meeting every basis.
pub fn cocircuits_via_transversals(m: &Matroid) -> Vec<ElementSet> {
    minimal_transversals(m.len(), &bases(m))
}

/// Minimal sets meeting every member of `family`.
pub fn minimal_transversals(n: usize, family: &[ElementSet]) -> Vec<ElementSet> {
    let hits = subsets_by_size(n).into_iter().filter(|&s| family.iter().all(|f| !f.is_disjoint(s))).collect();
    minimal_members(hits)
}

/// The exchange axiom for a family of sets, checked directly.
pub fn satisfies_exchange(family: &[ElementSet]) -> bool {
    family.iter().all(|&b1| {
        family.iter().all(|&b2| {
            b1.difference(b2).iter().all(|e| b2.difference(b1).iter().any(|f| family.contains(&b1.without(e).with(f))))
        })
    })
}

/// Sectors of `point` relative to a finite `target`, by direct comparison
/// with the virtual coordinate.
pub fn sectors(point: &[TropicalScalar], target: &[Rational]) -> Vec<usize> {
    let mut values: Vec<TropicalScalar> = point.iter().zip(target).map(|(v, p)| v.minus(p)).collect();
    values.push(TropicalScalar::zero());
    let best = values.iter().max().cloned().expect("virtual coordinate present");
    (0..values.len()).filter(|&i| values[i] == best).map(|i| i + 1).collect()
}

/// Tropical hull membership by residuation: `p ∈ tconv(V(S))` iff the
/// combination with the greatest coefficients `λ_j ⊙ (v_j, 0) ≤ (p, 0)`
/// reproduces `(p, 0)`.
pub fn tropical_hull_contains(config: &TropicalConfiguration, set: ElementSet, target: &[Rational]) -> bool {
    let d = config.dimension();
    let mut combination = vec![TropicalScalar::NegInf; d + 1];
    for e in set.iter() {
        let mut lifted: Vec<TropicalScalar> = config.point(e).to_vec();
        lifted.push(TropicalScalar::zero());
        let mut goal: Vec<Rational> = target.to_vec();
        goal.push(Rational::zero());
        let lambda = lifted
            .iter()
            .zip(&goal)
            .filter_map(|(v, p)| v.as_finite().map(|v| p - v))
            .min()
            .expect("virtual coordinate is finite");
        for (acc, v) in combination.iter_mut().zip(&lifted) {
            let term = v.otimes(&TropicalScalar::Finite(lambda.clone()));
            if term > *acc {
                *acc = term;
            }
        }
    }
    let mut goal: Vec<TropicalScalar> = target.iter().cloned().map(TropicalScalar::Finite).collect();
    goal.push(TropicalScalar::zero());
    combination == goal
}

pub fn origin(d: usize) -> Vec<Rational> {
    vec![Rational::zero(); d]
}

/// The first basis (in lexicographic order) whose points contain the
/// origin in their tropical hull, by scanning all subsets.
pub fn covering_basis(m: &Matroid, config: &TropicalConfiguration, pin: Option<usize>) -> Option<ElementSet> {
    let zero = origin(config.dimension());
    bases(m)
        .into_iter()
        .filter(|b| pin.is_none_or(|e| b.contains(e)))
        .find(|&b| tropical_hull_contains(config, b, &zero))
}

/// Some independent set contains the origin in its tropical hull.
pub fn covering_independent_set(m: &Matroid, config: &TropicalConfiguration) -> bool {
    let zero = origin(config.dimension());
    subsets_by_size(m.len()).into_iter().any(|s| independent(m, s) && tropical_hull_contains(config, s, &zero))
}

/// The basis/cocircuit condition with dual-derived cocircuits and the
/// residuation membership test.
pub fn bc_condition(m: &Matroid, config: &TropicalConfiguration) -> bool {
    let zero = origin(config.dimension());
    let cocircuits = cocircuits_via_dual(m);
    bases(m).iter().all(|b| cocircuits.iter().all(|c| tropical_hull_contains(config, b.union(*c), &zero)))
}

/// The two-cocircuit condition with dual-derived cocircuits.
pub fn two_cocircuit_condition(m: &Matroid, config: &TropicalConfiguration) -> bool {
    let zero = origin(config.dimension());
    let cocircuits = cocircuits_via_dual(m);
    cocircuits
        .iter()
        .enumerate()
        .all(|(i, c)| cocircuits[i + 1..].iter().all(|d| tropical_hull_contains(config, c.union(*d), &zero)))
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solves a square system exactly; `None` when singular.
fn solve_square(mut matrix: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !matrix[r][col].is_zero())?;
        matrix.swap(col, pivot);
        rhs.swap(col, pivot);
        let pivot_row = matrix[col].clone();
        for r in 0..n {
            if r != col && !matrix[r][col].is_zero() {
                let factor = &matrix[r][col] / &pivot_row[col];
                for (cell, p) in matrix[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    *cell -= &factor * p;
                }
                let delta = &factor * &rhs[col];
                rhs[r] -= delta;
            }
        }
    }
    Some((0..n).map(|i| &rhs[i] / &matrix[i][i]).collect())
}

/// The point of `aff(points)` closest to the origin, when the points are
/// affinely independent.
fn nearest_in_affine_hull(points: &[&[Rational]]) -> Option<Vec<Rational>> {
    let base = points[0];
    let directions: Vec<Vec<Rational>> =
        points[1..].iter().map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect()).collect();
    let k = directions.len();
    let gram: Vec<Vec<Rational>> =
        (0..k).map(|i| (0..k).map(|j| dot(&directions[i], &directions[j])).collect()).collect();
    let rhs: Vec<Rational> = directions.iter().map(|u| -dot(base, u)).collect();
    let coefficients = if k == 0 { Vec::new() } else { solve_square(gram, rhs)? };
    let mut q = base.to_vec();
    for (t, u) in coefficients.iter().zip(&directions) {
        for (qi, ui) in q.iter_mut().zip(u) {
            *qi += t * ui;
        }
    }
    Some(q)
}

/// Decides `0 ∉ conv(points)` by searching for a strictly separating
/// normal among the nearest points of affine hulls of at most `d`
/// affinely independent points. If the origin is outside, the nearest
/// point of the hull lies in the relative interior of such a face and is
/// itself a separating normal.
pub fn separated_from_origin(points: &[&[Rational]]) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    let d = first.len();
    let n = points.len();
    for mask in 1u64..(1 << n) {
        let chosen: Vec<&[Rational]> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| points[i]).collect();
        if chosen.len() > d.max(1) {
            continue;
        }
        let Some(q) = nearest_in_affine_hull(&chosen) else {
            continue;
        };
        if q.iter().all(Zero::is_zero) {
            continue;
        }
        if points.iter().all(|p| dot(&q, p).is_positive()) {
            return true;
        }
    }
    false
}

pub fn euclid_subset_points(config: &RationalConfiguration, set: ElementSet) -> Vec<&[Rational]> {
    set.iter().map(|e| config.point(e)).collect()
}

/// A perfect matching by scanning all `k`-subsets of hyperedges.
pub fn perfect_matching(instance: &ThreeDmInstance) -> Option<Vec<usize>> {
    let m = instance.edges().len();
    let k = instance.k();
    (0..1u64 << m)
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| (0..m).filter(|&h| mask >> h & 1 == 1).collect::<Vec<_>>())
        .find(|chosen| {
            let mut used = [vec![false; k], vec![false; k], vec![false; k]];
            chosen.iter().all(|&h| {
                instance.edges()[h].iter().enumerate().all(|(t, &i)| !std::mem::replace(&mut used[t][i], true))
            })
        })
}

/// All satisfying assignments (`true` meaning `0`) of a `{−∞, 0}` system.
pub fn horn_solutions(system: &DualHornSystem) -> Vec<Vec<bool>> {
    let n = system.variables();
    (0..1u64 << n)
        .map(|mask| (0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<bool>>())
        .filter(|x| system.is_satisfied_by(x))
        .collect()
}

fn evaluate(matrix: &TropicalMatrix, x: &[TropicalScalar]) -> Vec<TropicalScalar> {
    matrix
        .entries()
        .iter()
        .map(|row| row.iter().zip(x).map(|(a, v)| a.otimes(v)).max().unwrap_or(TropicalScalar::NegInf))
        .collect()
}

/// Max-plus residuation `x_j = min_i (−A_ij)` over finite entries.
pub fn residuated(matrix: &TropicalMatrix) -> Vec<TropicalScalar> {
    (0..matrix.cols())
        .map(|j| {
            let x = (0..matrix.rows())
                .filter_map(|i| matrix.entry(i, j).as_finite().map(|a| -a))
                .min()
                .unwrap_or_else(Rational::zero);
            TropicalScalar::Finite(x)
        })
        .collect()
}

/// The first feasible transversal (classes in order, columns in index
/// order) found by enumerating all of them.
pub fn clp_first_feasible(instance: &ColorfulLpInstance) -> Option<Vec<usize>> {
    let principal = residuated(&instance.matrix);
    let zero = TropicalScalar::zero();
    let mut choice = vec![0usize; instance.classes.len()];
    loop {
        let support: Vec<usize> = choice.iter().zip(&instance.classes).map(|(&i, c)| c[i]).collect();
        let mut x = vec![TropicalScalar::NegInf; instance.matrix.cols()];
        for &j in &support {
            x[j] = principal[j].clone();
        }
        if evaluate(&instance.matrix, &x).iter().all(|v| *v == zero) {
            return Some(support);
        }
        let mut pos = instance.classes.len();
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < instance.classes[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// All `x` on the grid `{−∞} ∪ {−2, −3/2, …, 2}`^n with `A ⊙ x = 0`.
pub fn grid_solutions(matrix: &TropicalMatrix) -> Vec<Vec<TropicalScalar>> {
    let mut grid = vec![TropicalScalar::NegInf];
    grid.extend((-4..=4).map(|k| TropicalScalar::Finite(Rational::new(k.into(), 2.into()))));
    let n = matrix.cols();
    let zero = TropicalScalar::zero();
    let mut out = Vec::new();
    let mut index = vec![0usize; n];
    loop {
        let x: Vec<TropicalScalar> = index.iter().map(|&i| grid[i].clone()).collect();
        if evaluate(matrix, &x).iter().all(|v| *v == zero) {
            out.push(x);
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            index[pos] += 1;
            if index[pos] < grid.len() {
                break;
            }
            index[pos] = 0;
        }
    }
}
