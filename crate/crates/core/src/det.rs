//! Reference determinant and minors.
//!
//! [`det_reference`] is the oracle every other determinant path is checked
//! against. It is Laplace expansion along the first row, memoized over column
//! subsets, carried out over the integers after clearing row denominators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Largest order accepted by [`det_reference`] by default.
pub const DEFAULT_DET_CAP: usize = 10;

fn require_square(m: &Matrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::Shape(format!(
            "determinant needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )))
    }
}

/// Exact determinant by cofactor expansion; orders above
/// [`DEFAULT_DET_CAP`] are rejected.
pub fn det_reference(m: &Matrix) -> Result<Scalar> {
    det_reference_with_cap(m, DEFAULT_DET_CAP)
}

pub fn det_reference_with_cap(m: &Matrix, cap: usize) -> Result<Scalar> {
    require_square(m)?;
    let n = m.rows();
    if n > cap {
        return Err(Error::Capacity {
            what: "reference determinant order",
            got: n,
            limit: cap,
        });
    }
    // Hard ceiling from the subset table, independent of the configured cap.
    if n > 24 {
        return Err(Error::Capacity {
            what: "reference determinant order",
            got: n,
            limit: 24,
        });
    }
    if n == 0 {
        return Ok(Scalar::one());
    }

    // Clear denominators row by row: det M = det(D M) / det D.
    let mut scale = BigInt::one();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 1..=n {
        let lcm = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        rows.push(
            m.row(i)
                .iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect(),
        );
        scale *= lcm;
    }

    let det = laplace_subsets(&rows);
    Ok(Scalar::ratio(det, scale).expect("row scale is nonzero"))
}

/// `table[mask]` = determinant of the last `popcount(mask)` rows restricted to
/// the columns in `mask`, expanded along its first row.
fn laplace_subsets(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let full = (1usize << n) - 1;
    let mut table: Vec<BigInt> = vec![BigInt::zero(); full + 1];
    table[0] = BigInt::one();
    for mask in 1..=full {
        let k = mask.count_ones() as usize;
        let r = n - k;
        let mut acc = BigInt::zero();
        let mut pos = 0usize;
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let x = &a[r][j];
            if !x.is_zero() {
                let sub = &table[mask ^ (1 << j)];
                if !sub.is_zero() {
                    let term = x * sub;
                    if pos % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
            }
            pos += 1;
        }
        table[mask] = acc;
    }
    std::mem::take(&mut table[full])
}

/// `M[I; J]`: determinant of the submatrix in listed order; 1 for empty lists.
pub fn minor_det(m: &Matrix, rows: &[usize], cols: &[usize]) -> Result<Scalar> {
    if rows.len() != cols.len() {
        return Err(Error::Shape(format!(
            "minor needs equal list lengths, got {} rows and {} columns",
            rows.len(),
            cols.len()
        )));
    }
    det_reference(&m.submatrix(rows, cols)?)
}

/// Bordered minor `a_{i,j}^{(t)}`: the leading `t × t` block extended by row
/// `i` and column `j`. `a_{i,j}^{(0)} = a_{ij}`.
pub fn extended_minor(m: &Matrix, t: usize, i: usize, j: usize) -> Result<Scalar> {
    let r = m.rows().min(m.cols());
    if r == 0 || t >= r {
        return Err(Error::Domain(format!(
            "bordered minor order t={t} must satisfy t <= min(rows,cols)-1 = {}",
            r as isize - 1
        )));
    }
    if i <= t || j <= t {
        return Err(Error::Domain(format!(
            "bordered minor needs i,j > t (got t={t}, i={i}, j={j})"
        )));
    }
    m.check_row(i)?;
    m.check_col(j)?;
    let mut rows: Vec<usize> = (1..=t).collect();
    let mut cols = rows.clone();
    rows.push(i);
    cols.push(j);
    minor_det(m, &rows, &cols)
}

/// Leading principal minor of order `t`, with order 0 giving 1.
pub fn leading_minor(m: &Matrix, t: usize) -> Result<Scalar> {
    let idx: Vec<usize> = (1..=t).collect();
    minor_det(m, &idx, &idx)
}
