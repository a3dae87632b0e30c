//! Tropical `{−∞, 0}` systems as dual-Horn formulas.
//!
//! Reading `z_i = ⊤` as `x_i = 0` and `z_i = ⊥` as `x_i = −∞`, an equation
//! `⊕_{k∈J} x_k = 0` becomes the positive clause `⋁_{k∈J} z_k` and an
//! inequality `x_i ≤ ⊕_{k∈K} x_k` becomes `¬z_i ∨ ⋁_{k∈K} z_k`. Every clause
//! has at most one negative literal, and the solutions are closed under
//! pointwise max, so there is a unique maximal one.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::tropical::TropicalScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// `⊕_{k∈J} x_k = 0`.
    Equation(Vec<usize>),
    /// `x_lhs ≤ ⊕_{k∈rhs} x_k`; an empty `rhs` forces `x_lhs = −∞`.
    Inequality { lhs: usize, rhs: Vec<usize> },
}

/// A system over variables `x_0, …, x_{n−1}` ranging over `{−∞, 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualHornSystem {
    n: usize,
    constraints: Vec<Constraint>,
}

impl DualHornSystem {
    pub fn new(n: usize, constraints: Vec<Constraint>) -> Result<Self> {
        let check = |index: usize| {
            if index < n {
                Ok(())
            } else {
                Err(Error::VariableOutOfRange { index, n })
            }
        };
        for constraint in &constraints {
            match constraint {
                Constraint::Equation(terms) => terms.iter().try_for_each(|&k| check(k))?,
                Constraint::Inequality { lhs, rhs } => {
                    check(*lhs)?;
                    rhs.iter().try_for_each(|&k| check(k))?;
                }
            }
        }
        Ok(Self { n, constraints })
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Whether the assignment (`true` meaning `0`) satisfies every constraint.
    pub fn is_satisfied_by(&self, zero: &[bool]) -> bool {
        zero.len() == self.n
            && self.constraints.iter().all(|constraint| match constraint {
                Constraint::Equation(terms) => terms.iter().any(|&k| zero[k]),
                Constraint::Inequality { lhs, rhs } => !zero[*lhs] || rhs.iter().any(|&k| zero[k]),
            })
    }
}

/// A clause with at most one negative literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub negative: Option<usize>,
    pub positive: Vec<usize>,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let literals: Vec<String> = self
            .negative
            .iter()
            .map(|i| format!("¬z{i}"))
            .chain(self.positive.iter().map(|k| format!("z{k}")))
            .collect();
        if literals.is_empty() {
            write!(f, "⊥")
        } else {
            write!(f, "({})", literals.join(" ∨ "))
        }
    }
}

pub fn to_dual_horn(system: &DualHornSystem) -> Vec<Clause> {
    system
        .constraints
        .iter()
        .map(|constraint| match constraint {
            Constraint::Equation(terms) => Clause { negative: None, positive: terms.clone() },
            Constraint::Inequality { lhs, rhs } => Clause { negative: Some(*lhs), positive: rhs.clone() },
        })
        .collect()
}

/// The pointwise-maximal model of a dual-Horn formula over `n` variables.
///
/// Starts from all-true and propagates: a clause whose positive literals
/// are all false forces its negative variable false, or proves the formula
/// unsatisfiable when it has none. Each clause keeps a counter of its
/// positive literals that are still true, so the run is linear in the
/// total clause size.
pub fn maximal_model(n: usize, clauses: &[Clause]) -> Result<Option<Vec<bool>>> {
    let mut watchers: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut live = Vec::with_capacity(clauses.len());
    let mut queue = VecDeque::new();
    for (c, clause) in clauses.iter().enumerate() {
        for &k in clause.positive.iter().chain(&clause.negative) {
            if k >= n {
                return Err(Error::VariableOutOfRange { index: k, n });
            }
        }
        for &k in &clause.positive {
            watchers[k].push(c);
        }
        live.push(clause.positive.len());
        if clause.positive.is_empty() {
            queue.push_back(c);
        }
    }
    let mut value = vec![true; n];
    while let Some(c) = queue.pop_front() {
        let Some(i) = clauses[c].negative else {
            return Ok(None);
        };
        if !value[i] {
            continue;
        }
        value[i] = false;
        for &w in &watchers[i] {
            live[w] -= 1;
            if live[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    Ok(Some(value))
}

/// The pointwise-maximal solution in `{−∞, 0}^n`, or `None` when infeasible.
pub fn solve_zero_inf(system: &DualHornSystem) -> Option<Vec<TropicalScalar>> {
    let model = maximal_model(system.n, &to_dual_horn(system)).expect("constraints are range-checked");
    model
        .map(|zero| zero.into_iter().map(|z| if z { TropicalScalar::zero() } else { TropicalScalar::NegInf }).collect())
}
