//! Sylvester's identity and its two textbook special cases: Chiò pivotal
//! condensation (`t = 1`) and the 2×2 block rule (`t = n - 2`).

use crate::det::{det_reference, extended_minor, leading_minor};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::IdentityReport;
use crate::scalar::Scalar;

fn require_square(m: &Matrix, what: &str) -> Result<usize> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(Error::Shape(format!(
            "{what} needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )))
    }
}

/// The `(n-t) × (n-t)` matrix of bordered minors `a_{i,j}^{(t)}`, `t < i,j <= n`.
pub fn bordered_minor_matrix(m: &Matrix, t: usize) -> Result<Matrix> {
    let n = require_square(m, "bordered minor matrix")?;
    let mut entries = Vec::with_capacity((n - t) * (n - t));
    for i in t + 1..=n {
        for j in t + 1..=n {
            entries.push(extended_minor(m, t, i, j)?);
        }
    }
    Matrix::new(n - t, n - t, entries)
}

/// `det M · (a_{t,t}^{(t-1)})^{n-t-1} = det (a_{i,j}^{(t)})`.
pub fn sylvester_check(m: &Matrix, t: usize) -> Result<IdentityReport> {
    let n = require_square(m, "Sylvester's identity")?;
    if n == 0 || t >= n {
        return Err(Error::Domain(format!(
            "Sylvester's identity needs 0 <= t <= n-1 (t={t}, n={n})"
        )));
    }
    let pivot = leading_minor(m, t)?;
    let lhs = det_reference(m)? * pivot.pow((n - t - 1) as u64);
    let rhs = det_reference(&bordered_minor_matrix(m, t)?)?;
    Ok(IdentityReport::new("sylvester", lhs, rhs)
        .param("n", n)
        .param("t", t))
}

/// Chiò condensation: `B = (a_{i+1,j+1}^{(1)})` of order `n-1`, checked as
/// `det B = det M · a11^{n-2}`.
pub fn chio_condense(m: &Matrix) -> Result<(Matrix, IdentityReport)> {
    let n = require_square(m, "Chiò condensation")?;
    if n < 2 {
        return Err(Error::Shape(format!(
            "Chiò condensation needs order >= 2, got {n}"
        )));
    }
    let a11 = m.get(1, 1).clone();
    if a11.is_zero() {
        return Err(Error::PivotFailure { order: 1 });
    }
    let b = bordered_minor_matrix(m, 1)?;
    let lhs = det_reference(&b)?;
    let rhs = det_reference(m)? * a11.pow((n - 2) as u64);
    let report = IdentityReport::new("chio", lhs, rhs).param("n", n);
    Ok((b, report))
}

/// Block rule `det M · det D = det A' · det D' - det B' · det C'` where `D` is
/// the central block of order `n - 2` and the primed blocks are the four
/// `(n-1)`-order corner submatrices.
pub fn block_rule_check(m: &Matrix) -> Result<IdentityReport> {
    let n = require_square(m, "block rule")?;
    if n < 2 {
        return Err(Error::Shape(format!("block rule needs order >= 2, got {n}")));
    }
    let head: Vec<usize> = (1..n).collect();
    let tail: Vec<usize> = (2..=n).collect();
    let core: Vec<usize> = (2..n).collect();

    let det_of = |rows: &[usize], cols: &[usize]| -> Result<Scalar> {
        det_reference(&m.submatrix(rows, cols)?)
    };
    let det_d = det_of(&core, &core)?;
    let det_a = det_of(&head, &head)?;
    let det_b = det_of(&head, &tail)?;
    let det_c = det_of(&tail, &head)?;
    let det_dp = det_of(&tail, &tail)?;

    let lhs = det_reference(m)? * det_d;
    let rhs = det_a * det_dp - det_b * det_c;
    Ok(IdentityReport::new("block", lhs, rhs).param("n", n))
}
