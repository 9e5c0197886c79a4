//! One-step fraction-free (Bareiss) elimination without pivoting.
//!
//! After stage `t` the entry at `(i, j)`, `i, j > t`, is the bordered minor
//! `a_{i,j}^{(t)}`, so every division at stage `t` is by the previous pivot
//! `a_{t-1,t-1}^{(t-2)}` and is exact over the integers.

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Matrix state after stage `t` (stage 0 is the input).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub t: usize,
    pub matrix: Matrix,
}

/// One division performed while producing entry `(i, j)` at stage `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub t: usize,
    pub i: usize,
    pub j: usize,
    pub dividend: Scalar,
    pub divisor: Scalar,
    /// Zero-remainder flag for integer input; `None` when the input had
    /// non-integer entries and the check does not apply.
    pub exact: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EliminationTrace {
    pub steps: Vec<Stage>,
    pub divisions: Vec<Division>,
}

impl EliminationTrace {
    /// True when every division over integer input left no remainder.
    pub fn all_divisions_exact(&self) -> bool {
        self.divisions.iter().all(|d| d.exact != Some(false))
    }

    /// Pivots `a_{t,t}^{(t-1)}` read off the diagonal of the final stage.
    pub fn pivots(&self) -> Vec<Scalar> {
        let Some(last) = self.steps.last() else {
            return Vec::new();
        };
        (1..=last.matrix.rows())
            .map(|k| last.matrix.get(k, k).clone())
            .collect()
    }
}

/// Determinant by fraction-free elimination, with the full trace.
///
/// A vanishing leading principal minor of order `k < n` is reported as
/// [`Error::PivotFailure`]; rows are never swapped.
pub fn det_bareiss(m: &Matrix) -> Result<(Scalar, EliminationTrace)> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "elimination needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let integer_input = m.is_integer();
    let mut a: Vec<Vec<Scalar>> = (1..=n).map(|i| m.row(i).to_vec()).collect();
    let mut trace = EliminationTrace {
        steps: vec![Stage {
            t: 0,
            matrix: m.clone(),
        }],
        divisions: Vec::new(),
    };
    if n == 0 {
        return Ok((Scalar::one(), trace));
    }

    let mut prev = Scalar::one();
    for k in 0..n - 1 {
        let pivot = a[k][k].clone();
        if pivot.is_zero() {
            return Err(Error::PivotFailure { order: k + 1 });
        }
        let t = k + 1;
        for i in k + 1..n {
            for j in k + 1..n {
                let dividend = &pivot * &a[i][j] - &a[i][k] * &a[k][j];
                let exact = integer_input.then(|| {
                    let (_, r) = dividend.numer().div_rem(prev.numer());
                    r.is_zero()
                });
                a[i][j] = dividend
                    .checked_div(&prev)
                    .expect("previous pivot checked nonzero");
                trace.divisions.push(Division {
                    t,
                    i: i + 1,
                    j: j + 1,
                    dividend,
                    divisor: prev.clone(),
                    exact,
                });
            }
            a[i][k] = Scalar::zero();
        }
        prev = pivot;
        trace.steps.push(Stage {
            t,
            matrix: Matrix::new(n, n, a.iter().flatten().cloned().collect())?,
        });
    }
    Ok((a[n - 1][n - 1].clone(), trace))
}
