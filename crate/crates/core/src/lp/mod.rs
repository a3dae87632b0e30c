//! Tropical linear algebra for colorful linear programming.
//!
//! * [`TropicalMatrix`] with max-plus products and principal solutions.
//! * [`clp`]: the colorful program `A ⊙ x = 0`, one support column per class.
//! * [`three_dm`]: the encoding of 3-dimensional matching as a colorful program.
//! * [`horn`]: `{-inf, 0}` systems solved as dual-Horn formulas.

pub mod clp;
pub mod horn;
pub mod three_dm;

pub use clp::{solve_clp, ClpSolution, ColorfulLpInstance};
pub use horn::{maximal_model, solve_zero_inf, to_dual_horn, Clause, Constraint, DualHornSystem};
pub use three_dm::{decode_matching, from_3dm, incidence_matrix, solve_3dm, ThreeDmInstance};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::tropical::{tropical_sum, TropicalScalar};
use crate::Rational;

/// A dense `rows × cols` matrix over `T_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalMatrix {
    cols: usize,
    entries: Vec<Vec<TropicalScalar>>,
}

impl TropicalMatrix {
    /// Row-major entries; every row must have `cols` entries.
    pub fn new(cols: usize, entries: Vec<Vec<TropicalScalar>>) -> Result<Self> {
        for row in &entries {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
        }
        Ok(Self { cols, entries })
    }

    /// Infers the column count from the first row.
    pub fn from_rows(entries: Vec<Vec<TropicalScalar>>) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        Self::new(cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &TropicalScalar {
        &self.entries[row][col]
    }

    pub fn entries(&self) -> &[Vec<TropicalScalar>] {
        &self.entries
    }

    /// The max-plus product `A ⊙ x`.
    pub fn apply(&self, x: &[TropicalScalar]) -> Result<Vec<TropicalScalar>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: x.len() });
        }
        Ok(self
            .entries
            .iter()
            .map(|row| {
                let products: Vec<_> = row.iter().zip(x).map(|(a, v)| a.otimes(v)).collect();
                tropical_sum(&products)
            })
            .collect())
    }

    /// Whether `A ⊙ x = 0` holds exactly.
    pub fn is_solution(&self, x: &[TropicalScalar]) -> bool {
        let zero = TropicalScalar::zero();
        self.apply(x).is_ok_and(|y| y.iter().all(|v| *v == zero))
    }

    /// Rows attaining the maximum of column `col`; empty when the column has
    /// no finite entry.
    pub fn tight_rows(&self, col: usize) -> Vec<usize> {
        let column_max = tropical_sum(self.entries.iter().map(|row| &row[col]));
        if column_max.is_neg_inf() {
            return Vec::new();
        }
        (0..self.rows()).filter(|&i| self.entries[i][col] == column_max).collect()
    }
}

/// The greatest `x` with `A ⊙ x ≤ 0`: `x*_j = min_i (−A_ij)` over the finite
/// entries of column `j`, and `0` for columns without one. `A ⊙ x = 0` is
/// solvable exactly when `A ⊙ x* = 0`.
pub fn principal_solution(matrix: &TropicalMatrix) -> Vec<Rational> {
    (0..matrix.cols())
        .map(|j| {
            matrix.entries().iter().filter_map(|row| row[j].as_finite()).max().map_or_else(Rational::zero, |max| -max)
        })
        .collect()
}

/// The principal solution as a vector of tropical scalars.
pub fn principal_vector(matrix: &TropicalMatrix) -> Vec<TropicalScalar> {
    principal_solution(matrix).into_iter().map(TropicalScalar::Finite).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;

    const INF: TropicalScalar = TropicalScalar::NegInf;

    fn t(v: i64) -> TropicalScalar {
        TropicalScalar::int(v)
    }

    #[test]
    fn principal_solution_examples() {
        let identity = TropicalMatrix::from_rows(vec![vec![t(0), INF], vec![INF, t(0)]]).unwrap();
        assert_eq!(principal_solution(&identity), vec![rational(0, 1); 2]);
        assert!(identity.is_solution(&principal_vector(&identity)));

        let row = TropicalMatrix::from_rows(vec![vec![t(1), t(0)]]).unwrap();
        assert_eq!(principal_solution(&row), vec![rational(-1, 1), rational(0, 1)]);
        assert_eq!(row.apply(&principal_vector(&row)).unwrap(), vec![t(0)]);

        let empty_col = TropicalMatrix::from_rows(vec![vec![t(3), INF], vec![t(1), INF]]).unwrap();
        assert_eq!(principal_solution(&empty_col), vec![rational(-3, 1), rational(0, 1)]);
        assert_eq!(empty_col.tight_rows(0), vec![0]);
        assert!(empty_col.tight_rows(1).is_empty());
        assert!(!empty_col.is_solution(&principal_vector(&empty_col)));
    }

    #[test]
    fn shape_is_checked() {
        assert!(TropicalMatrix::from_rows(vec![vec![t(0)], vec![t(0), t(1)]]).is_err());
        let m = TropicalMatrix::from_rows(vec![vec![t(0)]]).unwrap();
        assert!(m.apply(&[t(0), t(0)]).is_err());
    }
}
