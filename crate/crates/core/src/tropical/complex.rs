//! Tropical support complexes: generator subsets whose hull misses the target.

use std::collections::BTreeSet;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::matroid::GroundSet;
use crate::tropical::{covector_graph, TropicalConfiguration, TropicalScalar};

/// A simplicial complex on `{0, …, n−1}` given by its facets, in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportComplex {
    n: usize,
    facets: Vec<ElementSet>,
}

impl SupportComplex {
    pub fn new(n: usize, facets: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let mut unique = BTreeSet::new();
        for f in facets {
            ground.check(f)?;
            unique.insert(f);
        }
        let facets: Vec<_> = unique.into_iter().collect();
        for (i, a) in facets.iter().enumerate() {
            for b in &facets[i + 1..] {
                if a.is_subset(*b) {
                    return Err(Error::NotAntichain(a.to_string(), b.to_string()));
                }
                if b.is_subset(*a) {
                    return Err(Error::NotAntichain(b.to_string(), a.to_string()));
                }
            }
        }
        Ok(Self { n, facets })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[ElementSet] {
        &self.facets
    }

    pub fn contains(&self, face: ElementSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }
}

/// Facets of `{σ : N(σ) ≠ [d+1]}`: the maximal sets among
/// `M_i = {e : i ∉ N(e)}`.
pub fn support_complex(config: &TropicalConfiguration, target: &[TropicalScalar]) -> Result<SupportComplex> {
    let graph = covector_graph(config, target)?;
    let full = config.ground().full();
    let avoiding: Vec<ElementSet> =
        graph.all_sectors().iter().map(|i| full.difference(graph.sector_elements(i))).collect();
    let maximal = avoiding.iter().copied().filter(|&m| !avoiding.iter().any(|&other| m != other && m.is_subset(other)));
    SupportComplex::new(config.len(), maximal)
}

/// A configuration in `T_max^{m−1}` whose support complex at the origin has
/// exactly the `m` given facets.
///
/// Element `e` must reach the sectors `T_e = {i : e ∉ σ_i}`. Coordinates in
/// `T_e` are set to `1` and the rest to `−∞`; when the virtual sector `m` is
/// in `T_e` the value `0` is used instead so that it ties with the virtual
/// coordinate.
pub fn realize_complex(complex: &SupportComplex) -> Result<TropicalConfiguration> {
    let m = complex.facets.len();
    if m == 0 {
        return Err(Error::NoFacets);
    }
    let d = m - 1;
    let mut points = Vec::with_capacity(complex.n);
    for e in 0..complex.n {
        let targets: Vec<usize> = (1..=m).filter(|&i| !complex.facets[i - 1].contains(e)).collect();
        if targets.is_empty() {
            return Err(Error::ElementInAllFacets(e));
        }
        let value = if targets.contains(&m) { TropicalScalar::zero() } else { TropicalScalar::int(1) };
        let point =
            (1..=d).map(|k| if targets.contains(&k) { value.clone() } else { TropicalScalar::NegInf }).collect();
        points.push(point);
    }
    TropicalConfiguration::new(d, points)
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF: Option<i64> = None;

    fn set(values: &[usize]) -> ElementSet {
        values.iter().copied().collect()
    }

    fn origin(d: usize) -> Vec<TropicalScalar> {
        vec![TropicalScalar::zero(); d]
    }

    #[test]
    fn support_complex_examples() {
        let config = TropicalConfiguration::from_ints(1, &[&[Some(-1)], &[Some(-1)], &[Some(1)]]).unwrap();
        let complex = support_complex(&config, &origin(1)).unwrap();
        assert_eq!(complex.facets(), &[set(&[0, 1]), set(&[2])]);

        let config = TropicalConfiguration::from_ints(2, &[&[Some(0), Some(0)]]).unwrap();
        assert_eq!(support_complex(&config, &origin(2)).unwrap().facets(), &[ElementSet::empty()]);

        let config = TropicalConfiguration::from_ints(2, &[&[Some(1), Some(1)]]).unwrap();
        assert_eq!(support_complex(&config, &origin(2)).unwrap().facets(), &[set(&[0])]);
    }

    #[test]
    fn realize_two_facets() {
        let complex = SupportComplex::new(3, [set(&[0, 1]), set(&[2])]).unwrap();
        let config = realize_complex(&complex).unwrap();
        assert_eq!(config.dimension(), 1);
        let expected = TropicalConfiguration::from_ints(1, &[&[INF], &[INF], &[Some(1)]]).unwrap();
        assert_eq!(config, expected);
        assert_eq!(support_complex(&config, &origin(1)).unwrap(), complex);
    }

    #[test]
    fn realize_empty_face_in_dimension_zero() {
        let complex = SupportComplex::new(1, [ElementSet::empty()]).unwrap();
        let config = realize_complex(&complex).unwrap();
        assert_eq!(config.dimension(), 0);
        assert!(config.point(0).is_empty());
        assert_eq!(support_complex(&config, &[]).unwrap(), complex);
    }

    #[test]
    fn realize_rejects_full_simplex() {
        let complex = SupportComplex::new(2, [set(&[0, 1])]).unwrap();
        assert_eq!(realize_complex(&complex).unwrap_err(), Error::ElementInAllFacets(0));
        let void = SupportComplex::new(2, []).unwrap();
        assert_eq!(realize_complex(&void).unwrap_err(), Error::NoFacets);
    }

    #[test]
    fn facets_must_form_an_antichain() {
        assert!(SupportComplex::new(3, [set(&[0]), set(&[0, 1])]).is_err());
    }
}
