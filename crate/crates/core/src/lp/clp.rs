//! Colorful tropical linear programs: find `x` with `A ⊙ x = 0` whose
//! support meets every color class in exactly one column.

use crate::error::{Error, Result};
use crate::lp::{principal_solution, TropicalMatrix};
use crate::tropical::TropicalScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorfulLpInstance {
    pub matrix: TropicalMatrix,
    /// Column indices of each color class.
    pub classes: Vec<Vec<usize>>,
}

impl ColorfulLpInstance {
    /// Builds and validates an instance.
    pub fn new(matrix: TropicalMatrix, classes: Vec<Vec<usize>>) -> Result<Self> {
        let instance = Self { matrix, classes };
        instance.validate()?;
        Ok(instance)
    }

    /// Classes must be nonempty, pairwise disjoint and cover every column.
    pub fn validate(&self) -> Result<()> {
        let n = self.matrix.cols();
        let mut owner = vec![None; n];
        for (c, class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::InvalidInstance(format!("class {c} is empty")));
            }
            for &j in class {
                if j >= n {
                    return Err(Error::ElementOutOfRange { element: j, n });
                }
                if let Some(other) = owner[j] {
                    return Err(Error::InvalidInstance(format!("column {j} lies in classes {other} and {c}")));
                }
                owner[j] = Some(c);
            }
        }
        if let Some(j) = owner.iter().position(Option::is_none) {
            return Err(Error::InvalidInstance(format!("column {j} lies in no class")));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClpSolution {
    /// Principal solution on the support, `−∞` elsewhere.
    pub x: Vec<TropicalScalar>,
    /// The chosen column of each class, in class order.
    pub support: Vec<usize>,
}

/// A set of matrix rows as a bit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
struct RowSet(Vec<u64>);

impl RowSet {
    fn empty(rows: usize) -> Self {
        Self(vec![0; rows.div_ceil(64)])
    }

    fn full(rows: usize) -> Self {
        let mut set = Self::empty(rows);
        for i in 0..rows {
            set.0[i / 64] |= 1 << (i % 64);
        }
        set
    }

    fn from_rows(rows: usize, members: &[usize]) -> Self {
        let mut set = Self::empty(rows);
        for &i in members {
            set.0[i / 64] |= 1 << (i % 64);
        }
        set
    }

    fn union(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    fn is_superset(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| b & !a == 0)
    }
}

struct Search<'a> {
    classes: &'a [Vec<usize>],
    tight: Vec<RowSet>,
    /// Rows reachable from each class onwards.
    reachable: Vec<RowSet>,
    all: RowSet,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, class: usize, covered: &RowSet) -> bool {
        if class == self.classes.len() {
            return covered.is_superset(&self.all);
        }
        if !covered.union(&self.reachable[class]).is_superset(&self.all) {
            return false;
        }
        for &j in &self.classes[class] {
            self.chosen.push(j);
            let next = covered.union(&self.tight[j]);
            if self.run(class + 1, &next) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

/// Backtracks over one column per class, classes in order and columns in
/// index order, returning the first feasible choice.
///
/// A support `S` is feasible iff the principal solution restricted to `S`
/// solves the system, which happens exactly when the rows attaining each
/// column maximum over `S` cover all rows. Partial choices are pruned when
/// the remaining classes cannot reach the uncovered rows.
pub fn solve_clp(instance: &ColorfulLpInstance) -> Result<Option<ClpSolution>> {
    instance.validate()?;
    let matrix = &instance.matrix;
    let rows = matrix.rows();
    let tight: Vec<RowSet> = (0..matrix.cols()).map(|j| RowSet::from_rows(rows, &matrix.tight_rows(j))).collect();
    let mut reachable = vec![RowSet::empty(rows); instance.classes.len() + 1];
    for c in (0..instance.classes.len()).rev() {
        let class_rows = instance.classes[c].iter().fold(RowSet::empty(rows), |acc, &j| acc.union(&tight[j]));
        reachable[c] = class_rows.union(&reachable[c + 1]);
    }
    let mut search = Search {
        classes: &instance.classes,
        tight,
        reachable,
        all: RowSet::full(rows),
        chosen: Vec::with_capacity(instance.classes.len()),
    };
    if !search.run(0, &RowSet::empty(rows)) {
        return Ok(None);
    }
    let principal = principal_solution(matrix);
    let mut x = vec![TropicalScalar::NegInf; matrix.cols()];
    for &j in &search.chosen {
        x[j] = TropicalScalar::Finite(principal[j].clone());
    }
    debug_assert!(matrix.is_solution(&x));
    Ok(Some(ClpSolution { x, support: search.chosen }))
}
