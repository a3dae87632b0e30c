//! 3-dimensional matching as a colorful tropical linear program.
//!
//! One row per element of `A ⊔ B ⊔ C`, one column per hyperedge with `0`
//! in the rows of its three elements and `−∞` elsewhere, and one color
//! class per element `a ∈ A` collecting the hyperedges through `a`. A
//! feasible colorful solution picks one hyperedge per `a` covering every
//! row, which is a perfect matching.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::lp::{solve_clp, ClpSolution, ColorfulLpInstance, TropicalMatrix};
use crate::tropical::TropicalScalar;

/// A 3-partite 3-uniform hypergraph with parts of size `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeDmInstance {
    k: usize,
    parts: [Vec<String>; 3],
    /// Each hyperedge as indices into the three parts.
    edges: Vec<[usize; 3]>,
}

impl ThreeDmInstance {
    /// Validates parts of size exactly `k`, pairwise disjoint labels, and
    /// in-range hyperedges.
    pub fn new(k: usize, parts: [Vec<String>; 3], edges: Vec<[usize; 3]>) -> Result<Self> {
        let mut seen = HashSet::new();
        for part in &parts {
            if part.len() != k {
                return Err(Error::InvalidInstance(format!("part has {} elements, expected {k}", part.len())));
            }
            for label in part {
                if !seen.insert(label.as_str()) {
                    return Err(Error::DuplicateLabel(label.clone()));
                }
            }
        }
        for edge in &edges {
            if let Some(&bad) = edge.iter().find(|&&i| i >= k) {
                return Err(Error::ElementOutOfRange { element: bad, n: k });
            }
        }
        Ok(Self { k, parts, edges })
    }

    /// Builds an instance from labelled triples. Part `t` consists of the
    /// labels in position `t`, in order of first appearance, followed by
    /// `explicit` extra labels (or generated ones) up to size `k`.
    pub fn from_labeled_edges(k: usize, edges: &[[String; 3]], explicit: Option<[Vec<String>; 3]>) -> Result<Self> {
        let mut parts: [Vec<String>; 3] = explicit.unwrap_or_default();
        let mut index: [HashMap<String, usize>; 3] = Default::default();
        for (t, part) in parts.iter().enumerate() {
            for (i, label) in part.iter().enumerate() {
                index[t].insert(label.clone(), i);
            }
        }
        let mut encoded = Vec::with_capacity(edges.len());
        for edge in edges {
            let mut triple = [0; 3];
            for t in 0..3 {
                let label = &edge[t];
                triple[t] = match index[t].get(label) {
                    Some(&i) => i,
                    None => {
                        parts[t].push(label.clone());
                        index[t].insert(label.clone(), parts[t].len() - 1);
                        parts[t].len() - 1
                    }
                };
            }
            encoded.push(triple);
        }
        for (t, part) in parts.iter_mut().enumerate() {
            let prefix = ["a", "b", "c"][t];
            let mut next = 1;
            while part.len() < k {
                let label = format!("{prefix}#{next}");
                next += 1;
                if !index[t].contains_key(&label) {
                    part.push(label);
                }
            }
        }
        Self::new(k, parts, encoded)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn parts(&self) -> &[Vec<String>; 3] {
        &self.parts
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    /// The labels of hyperedge `h`.
    pub fn edge_labels(&self, h: usize) -> [&str; 3] {
        let [a, b, c] = self.edges[h];
        [&self.parts[0][a], &self.parts[1][b], &self.parts[2][c]]
    }

    /// The row of part `t`, element `i` in the encoding.
    pub fn row(&self, t: usize, i: usize) -> usize {
        t * self.k + i
    }

    /// Whether `chosen` hyperedges form a perfect matching.
    pub fn is_perfect_matching(&self, chosen: &[usize]) -> bool {
        if chosen.len() != self.k {
            return false;
        }
        let mut used = vec![false; 3 * self.k];
        for &h in chosen {
            let Some(edge) = self.edges.get(h) else {
                return false;
            };
            for (t, &i) in edge.iter().enumerate() {
                let row = self.row(t, i);
                if used[row] {
                    return false;
                }
                used[row] = true;
            }
        }
        used.into_iter().all(|u| u)
    }
}

/// The `3k × |H|` incidence matrix over `{0, −∞}`.
pub fn incidence_matrix(instance: &ThreeDmInstance) -> TropicalMatrix {
    let mut entries = vec![vec![TropicalScalar::NegInf; instance.edges.len()]; 3 * instance.k];
    for (h, edge) in instance.edges.iter().enumerate() {
        for (t, &i) in edge.iter().enumerate() {
            entries[instance.row(t, i)][h] = TropicalScalar::zero();
        }
    }
    TropicalMatrix::new(instance.edges.len(), entries).expect("rows have one entry per hyperedge")
}

/// The colorful program of the instance. Elements of `A` that lie in no
/// hyperedge produce empty classes, so the result may fail validation.
pub fn from_3dm(instance: &ThreeDmInstance) -> ColorfulLpInstance {
    let mut classes = vec![Vec::new(); instance.k];
    for (h, edge) in instance.edges.iter().enumerate() {
        classes[edge[0]].push(h);
    }
    ColorfulLpInstance { matrix: incidence_matrix(instance), classes }
}

/// Decides the instance through its colorful program. An element of `A`
/// in no hyperedge makes it infeasible without a search.
pub fn solve_3dm(instance: &ThreeDmInstance) -> Result<Option<Vec<usize>>> {
    let program = from_3dm(instance);
    if program.classes.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    match solve_clp(&program)? {
        Some(solution) => decode_matching(&solution, instance).map(Some),
        None => Ok(None),
    }
}

/// Reads the matching off a feasible solution of [`from_3dm`], checking
/// that it is perfect.
pub fn decode_matching(solution: &ClpSolution, instance: &ThreeDmInstance) -> Result<Vec<usize>> {
    let mut matching: Vec<usize> = (0..solution.x.len()).filter(|&h| solution.x[h].is_finite()).collect();
    matching.sort_unstable();
    if solution.x.len() != instance.edges.len() {
        return Err(Error::InvalidMatching(format!(
            "solution has {} coordinates for {} hyperedges",
            solution.x.len(),
            instance.edges.len()
        )));
    }
    if !instance.is_perfect_matching(&matching) {
        return Err(Error::InvalidMatching(format!("support {matching:?} is not a perfect matching")));
    }
    Ok(matching)
}
