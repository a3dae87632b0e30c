//! Greedy colorful bases for tropical configurations.
//!
//! Everything here works on the covector graph of the origin: a set of
//! generators contains `0` in its tropical hull iff its neighborhoods cover
//! all `d + 1` sectors. The greedy algorithm walks from basis to basis,
//! trading an element whose sectors are covered by the rest of the basis
//! for an element of its fundamental cocircuit that reaches a new sector.

use crate::bitset::{ElementSet, SectorSet};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::report::{ConditionReport, Violation};
use crate::tropical::{
    covector_graph_at_origin, tropical_membership_within, CovectorGraph, Membership, TropicalConfiguration,
    TropicalScalar,
};

/// One exchange `B → (B ∖ removed) ∪ entering`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyStep {
    /// Basis before the exchange.
    pub basis: ElementSet,
    /// Sectors covered by `basis`.
    pub covered: SectorSet,
    /// The redundant element leaving the basis.
    pub removed: usize,
    /// Second redundant element considered by the two-cocircuit variant.
    pub partner: Option<usize>,
    /// Fundamental cocircuit of `basis` and `removed`.
    pub cocircuit: ElementSet,
    pub entering: usize,
    /// The uncovered sector reached by `entering`.
    pub target_sector: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GreedyTrace {
    pub steps: Vec<GreedyStep>,
}

impl GreedyTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// A basis whose generators contain the origin in their tropical hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorfulBasis {
    pub basis: ElementSet,
    /// Inside-certificate for the origin, `−∞` off the basis.
    pub coefficients: Vec<TropicalScalar>,
    pub trace: GreedyTrace,
    /// Set when the greedy walk stalled and exhaustive search found the basis.
    pub via_fallback: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColorfulOutcome {
    Found(ColorfulBasis),
    /// No covering basis. `violation` is a failing precondition instance; it
    /// is absent only when the precondition holds yet no basis covers, which
    /// can happen when `rank(M) < d + 1`.
    NotFound {
        violation: Option<Violation>,
    },
}

impl ColorfulOutcome {
    pub fn basis(&self) -> Option<&ColorfulBasis> {
        match self {
            Self::Found(b) => Some(b),
            Self::NotFound { .. } => None,
        }
    }
}

fn check_sizes(matroid: &Matroid, config: &TropicalConfiguration) -> Result<()> {
    if matroid.len() != config.len() {
        return Err(Error::SizeMismatch { expected: matroid.len(), found: config.len() });
    }
    Ok(())
}

fn check_rank_is_dim_plus_one(matroid: &Matroid, config: &TropicalConfiguration) -> Result<()> {
    let expected = config.dimension() + 1;
    if matroid.full_rank() != expected {
        return Err(Error::RankNotDimPlusOne { rank: matroid.full_rank(), expected });
    }
    Ok(())
}

fn first_bc_violation(matroid: &Matroid, graph: &CovectorGraph) -> Option<Violation> {
    let cocircuits = matroid.cocircuits();
    for basis in matroid.bases() {
        for &cocircuit in &cocircuits {
            if let Some(sector) = graph.first_uncovered(basis.union(cocircuit)) {
                return Some(Violation::BasisCocircuit { basis, cocircuit, sector: Some(sector) });
            }
        }
    }
    None
}

fn first_pair_violation(matroid: &Matroid, graph: &CovectorGraph) -> Option<Violation> {
    let cocircuits = matroid.cocircuits();
    for (i, &first) in cocircuits.iter().enumerate() {
        for &second in &cocircuits[i + 1..] {
            if let Some(sector) = graph.first_uncovered(first.union(second)) {
                return Some(Violation::CocircuitPair { first, second, sector: Some(sector) });
            }
        }
    }
    None
}

/// Checks `0 ∈ tconv(V(B ∪ C))` for every basis `B` and cocircuit `C`,
/// reporting the lexicographically first failing pair.
pub fn verify_bc_condition(matroid: &Matroid, config: &TropicalConfiguration) -> Result<ConditionReport> {
    check_sizes(matroid, config)?;
    let graph = covector_graph_at_origin(config);
    Ok(match first_bc_violation(matroid, &graph) {
        None => ConditionReport::Ok,
        Some(v) => ConditionReport::Violated(v),
    })
}

/// Checks `0 ∈ tconv(V(C ∪ D))` for all distinct cocircuits `C`, `D`.
/// Requires `rank(M) = d + 1`.
pub fn verify_two_cocircuit_condition(matroid: &Matroid, config: &TropicalConfiguration) -> Result<ConditionReport> {
    check_sizes(matroid, config)?;
    check_rank_is_dim_plus_one(matroid, config)?;
    let graph = covector_graph_at_origin(config);
    Ok(match first_pair_violation(matroid, &graph) {
        None => ConditionReport::Ok,
        Some(v) => ConditionReport::Violated(v),
    })
}

fn found(
    config: &TropicalConfiguration,
    basis: ElementSet,
    trace: GreedyTrace,
    via_fallback: bool,
) -> Result<ColorfulOutcome> {
    let origin = vec![TropicalScalar::zero(); config.dimension()];
    match tropical_membership_within(&origin, config, basis)? {
        Membership::Inside { coefficients } => {
            Ok(ColorfulOutcome::Found(ColorfulBasis { basis, coefficients, trace, via_fallback }))
        }
        Membership::Outside { sector } => {
            Err(Error::Internal(format!("basis {basis} reported as covering but misses sector {sector}")))
        }
    }
}

/// Redundant elements of `basis`: those whose removal keeps the cover.
fn redundant(graph: &CovectorGraph, basis: ElementSet) -> impl Iterator<Item = usize> + '_ {
    let cover = graph.cover(basis);
    basis.iter().filter(move |&b| graph.cover(basis.without(b)) == cover)
}

/// Finds a basis `B0` with `0 ∈ tconv(V(B0))`, containing `pin` when given.
///
/// Starts from the lexicographic greedy basis (extended from `pin`). Each
/// step removes the smallest redundant element `b` other than the pin and
/// inserts the smallest element of the fundamental cocircuit of `(B, b)`
/// adjacent to the smallest uncovered sector. Under the basis/cocircuit
/// condition and `rank(M) ≥ d + 1` this never stalls. On a stall the search
/// falls back to scanning all bases; when that fails too, the violating
/// basis/cocircuit pair met during the walk (or else the first one overall)
/// is returned.
pub fn colorful_basis(
    matroid: &Matroid,
    config: &TropicalConfiguration,
    pin: Option<usize>,
) -> Result<ColorfulOutcome> {
    check_sizes(matroid, config)?;
    if let Some(e) = pin {
        matroid.ground().check_element(e)?;
        if matroid.is_loop(e) {
            return Err(Error::LoopElement(e));
        }
    }
    let graph = covector_graph_at_origin(config);
    let all = graph.all_sectors();
    let full = matroid.ground().full();
    let start = pin.map_or(ElementSet::empty(), ElementSet::singleton);
    let mut basis = matroid.greedy_independent(full, start);
    let mut trace = GreedyTrace::default();

    let stall_violation = loop {
        let covered = graph.cover(basis);
        if covered == all {
            return found(config, basis, trace, false);
        }
        let Some(removed) = redundant(&graph, basis).find(|&b| Some(b) != pin) else {
            break None;
        };
        let cocircuit = matroid.fundamental_cocircuit_unchecked(basis, removed);
        let target_sector = all.difference(covered).first().expect("cover is incomplete");
        let Some(entering) = cocircuit.iter().find(|&c| graph.neighborhood(c).contains(target_sector)) else {
            break Some(Violation::BasisCocircuit { basis, cocircuit, sector: Some(target_sector) });
        };
        trace.steps.push(GreedyStep { basis, covered, removed, partner: None, cocircuit, entering, target_sector });
        basis = basis.without(removed).with(entering);
        debug_assert!(matroid.is_basis(basis));
    };

    let fallback =
        matroid.bases().into_iter().filter(|b| pin.is_none_or(|e| b.contains(e))).find(|&b| graph.covers_all(b));
    if let Some(b) = fallback {
        return found(config, b, trace, true);
    }
    let violation = stall_violation.or_else(|| first_bc_violation(matroid, &graph));
    Ok(ColorfulOutcome::NotFound { violation })
}

/// The exchange algorithm for the two-cocircuit condition, for
/// `rank(M) = d + 1`.
///
/// While the basis `B` misses a sector, `|B| = d + 1 > |N(B)|` forces at
/// least two redundant elements `p < q`. Their fundamental cocircuits
/// together reach every sector under the condition, so one of them holds an
/// element `r` adjacent to the smallest uncovered sector; swapping it in for
/// `p` (or `q`) strictly grows the cover. When no such `r` exists the pair
/// `(C_p, C_q)` is returned as a violation.
pub fn colorful_basis_two_cocircuit(matroid: &Matroid, config: &TropicalConfiguration) -> Result<ColorfulOutcome> {
    check_sizes(matroid, config)?;
    check_rank_is_dim_plus_one(matroid, config)?;
    let graph = covector_graph_at_origin(config);
    let all = graph.all_sectors();
    let mut basis = matroid.greedy_basis();
    let mut trace = GreedyTrace::default();
    loop {
        let covered = graph.cover(basis);
        if covered == all {
            return found(config, basis, trace, false);
        }
        let mut spare = redundant(&graph, basis);
        let (Some(p), Some(q)) = (spare.next(), spare.next()) else {
            return Err(Error::Internal(format!("basis {basis} has fewer than two redundant elements")));
        };
        let target_sector = all.difference(covered).first().expect("cover is incomplete");
        let cp = matroid.fundamental_cocircuit_unchecked(basis, p);
        let cq = matroid.fundamental_cocircuit_unchecked(basis, q);
        let adjacent = |c: ElementSet| c.iter().find(|&r| graph.neighborhood(r).contains(target_sector));
        let (removed, partner, cocircuit, entering) = match (adjacent(cp), adjacent(cq)) {
            (Some(r), _) => (p, q, cp, r),
            (None, Some(r)) => (q, p, cq, r),
            (None, None) => {
                let violation = Violation::CocircuitPair { first: cp, second: cq, sector: Some(target_sector) };
                return Ok(ColorfulOutcome::NotFound { violation: Some(violation) });
            }
        };
        trace.steps.push(GreedyStep {
            basis,
            covered,
            removed,
            partner: Some(partner),
            cocircuit,
            entering,
            target_sector,
        });
        basis = basis.without(removed).with(entering);
    }
}

/// Outcome of the Rado check on a generic configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadoVerdict {
    /// `ρ(⋃_{j∈J} E_j) ≥ |J|` for every sector set `J`, where `E_j` is the
    /// set of elements attached to sector `j`.
    pub holds: bool,
    /// The first sector set violating the rank inequality.
    pub violating: Option<SectorSet>,
    /// An independent set with one element per sector, found by search
    /// independently of the rank inequalities.
    pub transversal: Option<ElementSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadoReport {
    /// Every element lies in exactly one sector of the origin.
    pub generic: bool,
    /// Present only for generic input.
    pub rado: Option<RadoVerdict>,
}

/// For generic configurations, decides whether some independent set
/// contains the origin in its hull via Rado's rank condition over all
/// sector subsets `J ⊆ [d+1]`.
pub fn generic_rado_check(matroid: &Matroid, config: &TropicalConfiguration) -> Result<RadoReport> {
    check_sizes(matroid, config)?;
    let graph = covector_graph_at_origin(config);
    if graph.neighborhoods().iter().any(|n| n.len() != 1) {
        return Ok(RadoReport { generic: false, rado: None });
    }
    let sectors: Vec<ElementSet> = graph.all_sectors().iter().map(|j| graph.sector_elements(j)).collect();
    let violating = SectorSet::full(sectors.len()).subsets().find(|&j_set| {
        let union = j_set.iter().fold(ElementSet::empty(), |acc, j| acc.union(sectors[j - 1]));
        matroid.rank_unchecked(union) < j_set.len()
    });
    let transversal = independent_transversal(matroid, &sectors, 0, ElementSet::empty());
    Ok(RadoReport { generic: true, rado: Some(RadoVerdict { holds: violating.is_none(), violating, transversal }) })
}

fn independent_transversal(
    matroid: &Matroid,
    sectors: &[ElementSet],
    index: usize,
    chosen: ElementSet,
) -> Option<ElementSet> {
    let Some(&candidates) = sectors.get(index) else {
        return Some(chosen);
    };
    candidates
        .iter()
        .map(|e| chosen.with(e))
        .filter(|&next| matroid.independent(next))
        .find_map(|next| independent_transversal(matroid, sectors, index + 1, next))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::is_valid_certificate;

    fn set(values: &[usize]) -> ElementSet {
        values.iter().copied().collect()
    }

    fn line(values: &[i64]) -> TropicalConfiguration {
        let points: Vec<Vec<_>> = values.iter().map(|&v| vec![TropicalScalar::int(v)]).collect();
        TropicalConfiguration::new(1, points).unwrap()
    }

    fn two_blocks() -> Matroid {
        Matroid::partition(4, vec![vec![0, 1], vec![2, 3]]).unwrap()
    }

    #[test]
    fn bc_condition_holds_on_balanced_blocks() {
        let config = line(&[1, -1, 2, -2]);
        assert_eq!(verify_bc_condition(&two_blocks(), &config).unwrap(), ConditionReport::Ok);
    }

    #[test]
    fn bc_condition_violation_is_first_in_order() {
        let matroid = Matroid::partition(3, vec![vec![0], vec![1, 2]]).unwrap();
        let config = line(&[1, 2, -2]);
        let report = verify_bc_condition(&matroid, &config).unwrap();
        assert_eq!(
            report,
            ConditionReport::Violated(Violation::BasisCocircuit {
                basis: set(&[0, 1]),
                cocircuit: set(&[0]),
                sector: Some(2),
            })
        );
    }

    #[test]
    fn free_single_element_at_origin() {
        let matroid = Matroid::free(1).unwrap();
        let config = TropicalConfiguration::from_ints(3, &[&[Some(0), Some(0), Some(0)]]).unwrap();
        assert!(verify_bc_condition(&matroid, &config).unwrap().is_ok());
    }

    #[test]
    fn greedy_walk_on_balanced_blocks() {
        let config = line(&[1, -1, 2, -2]);
        let outcome = colorful_basis(&two_blocks(), &config, None).unwrap();
        let found = outcome.basis().expect("a covering basis exists");
        assert!(!found.via_fallback);
        assert_eq!(found.basis, set(&[1, 2]));
        assert_eq!(found.trace.len(), 1);
        let step = &found.trace.steps[0];
        assert_eq!((step.basis, step.removed, step.entering, step.target_sector), (set(&[0, 2]), 0, 1, 2));
        assert_eq!(step.cocircuit, set(&[0, 1]));
        let origin = vec![TropicalScalar::zero()];
        assert!(is_valid_certificate(&found.coefficients, &config, &origin));
    }

    #[test]
    fn covering_start_basis_gives_empty_trace() {
        let config = line(&[1, -1, -2, 2]);
        let found = colorful_basis(&two_blocks(), &config, None).unwrap();
        let found = found.basis().unwrap();
        assert_eq!(found.basis, set(&[0, 2]));
        assert!(found.trace.is_empty());
    }

    #[test]
    fn pinned_walk_keeps_the_pin() {
        let config = line(&[1, -1, 2, -2]);
        let found = colorful_basis(&two_blocks(), &config, Some(1)).unwrap();
        let found = found.basis().unwrap();
        assert!(found.basis.contains(1));
        assert_eq!(found.basis, set(&[1, 2]));
    }

    #[test]
    fn pinned_loop_is_rejected() {
        let matroid = Matroid::graphic(vec![(0, 0), (0, 1)]).unwrap();
        let config = line(&[1, -1]);
        assert_eq!(colorful_basis(&matroid, &config, Some(0)).unwrap_err(), Error::LoopElement(0));
    }

    #[test]
    fn low_rank_counterexample_has_no_basis_and_no_violation() {
        // Three generators, one per sector of T^2; the single cocircuit is
        // everything, so the precondition holds but no singleton covers.
        let matroid = Matroid::uniform(3, 1).unwrap();
        let config =
            TropicalConfiguration::from_ints(2, &[&[Some(1), None], &[None, Some(1)], &[Some(-1), Some(-1)]]).unwrap();
        assert!(verify_bc_condition(&matroid, &config).unwrap().is_ok());
        assert_eq!(colorful_basis(&matroid, &config, None).unwrap(), ColorfulOutcome::NotFound { violation: None });
    }

    #[test]
    fn two_cocircuit_examples() {
        let ok = line(&[1, 1, -1, -1]);
        assert_eq!(verify_two_cocircuit_condition(&two_blocks(), &ok).unwrap(), ConditionReport::Ok);
        let found = colorful_basis_two_cocircuit(&two_blocks(), &ok).unwrap();
        let found = found.basis().unwrap();
        assert_eq!(found.basis, set(&[0, 2]));
        assert!(found.trace.is_empty());

        let positive = line(&[1, 2, 3, 4]);
        let report = verify_two_cocircuit_condition(&two_blocks(), &positive).unwrap();
        assert_eq!(report.violation().unwrap().sector(), Some(2));
        let outcome = colorful_basis_two_cocircuit(&two_blocks(), &positive).unwrap();
        let ColorfulOutcome::NotFound { violation: Some(v) } = outcome else {
            panic!("expected a violation");
        };
        assert_eq!(v.sector(), Some(2));

        let rank_one = Matroid::uniform(2, 1).unwrap();
        assert!(matches!(
            verify_two_cocircuit_condition(&rank_one, &line(&[1, -1])),
            Err(Error::RankNotDimPlusOne { rank: 1, expected: 2 })
        ));
    }

    #[test]
    fn two_cocircuit_walk_makes_progress() {
        // Start basis {0, 2} sits entirely in sector 1.
        let config = line(&[1, -1, 2, -2]);
        assert!(verify_two_cocircuit_condition(&two_blocks(), &config).unwrap().is_ok());
        let found = colorful_basis_two_cocircuit(&two_blocks(), &config).unwrap();
        let found = found.basis().unwrap();
        assert_eq!(found.trace.len(), 1);
        let step = &found.trace.steps[0];
        assert_eq!((step.removed, step.partner, step.entering), (0, Some(2), 1));
        assert_eq!(found.basis, set(&[1, 2]));
    }

    #[test]
    fn rado_examples() {
        let matroid = Matroid::partition(2, vec![vec![0], vec![1]]).unwrap();
        let report = generic_rado_check(&matroid, &line(&[1, -1])).unwrap();
        let verdict = report.rado.unwrap();
        assert!(report.generic && verdict.holds);
        assert_eq!(verdict.transversal, Some(set(&[0, 1])));

        let tie = generic_rado_check(&matroid, &line(&[0, -1])).unwrap();
        assert_eq!(tie, RadoReport { generic: false, rado: None });

        let u12 = Matroid::uniform(2, 1).unwrap();
        let verdict = generic_rado_check(&u12, &line(&[1, -1])).unwrap().rado.unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.violating, Some([1, 2].into_iter().collect()));
        assert_eq!(verdict.transversal, None);
    }
}
