//! Sylvester's identity with arbitrary leading row and column lists.
//!
//! For ordered `I`, `J` of size `t` with complements `I'`, `J'`:
//!
//! ```text
//! det M · M[I;J]^{n-t-1} = Σ_α (-1)^μ(α) Π_β M[I ∪ i'_{α_β} ; J ∪ j'_β]
//! ```
//!
//! Each bordered minor takes its rows and columns as ordered index lists, so
//! the extra row and column sit at their sorted positions. With that reading
//! the expansion holds for every admissible `I`, `J`; appending them at the
//! end instead introduces the sign `(-1)^{ΣI + ΣJ}`.

use crate::det::{det_reference, minor_det};
use crate::error::{Error, Result};
use crate::index::{enumerate_permutations, IndexList};
use crate::matrix::Matrix;
use crate::report::IdentityReport;
use crate::scalar::Scalar;

pub fn yakovlev_check(m: &Matrix, rows: &IndexList, cols: &IndexList) -> Result<IdentityReport> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "Yakovlev's identity needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if rows.len() != cols.len() {
        return Err(Error::Shape(format!(
            "row list {rows} and column list {cols} differ in length"
        )));
    }
    if !rows.is_ordered() || !cols.is_ordered() {
        return Err(Error::Domain("row and column lists must be ordered".into()));
    }
    let t = rows.len();
    if t == 0 || t >= n {
        return Err(Error::Domain(format!(
            "Yakovlev's identity needs 0 < t <= n-1 (t={t}, n={n})"
        )));
    }
    for &i in rows.iter() {
        m.check_row(i)?;
    }
    for &j in cols.iter() {
        m.check_col(j)?;
    }

    let row_rest = rows.complement(n);
    let col_rest = cols.complement(n);
    let k = n - t;

    // table[a][b] = M[I ∪ i'_a ; J ∪ j'_b]
    let mut table = vec![vec![Scalar::zero(); k]; k];
    for (a, &ip) in row_rest.iter().enumerate() {
        let r = rows.with(ip);
        for (b, &jp) in col_rest.iter().enumerate() {
            table[a][b] = minor_det(m, &r, &cols.with(jp))?;
        }
    }

    let positions = IndexList::range(t + 1, n);
    let perms = enumerate_permutations(&positions)?;
    let rhs: Scalar = perms
        .iter()
        .map(|p| {
            let prod: Scalar = p
                .arrangement
                .iter()
                .enumerate()
                .map(|(b, &alpha)| table[alpha - t - 1][b].clone())
                .product();
            if p.sign() > 0 {
                prod
            } else {
                -prod
            }
        })
        .sum();

    let lhs = det_reference(m)? * minor_det(m, rows, cols)?.pow((n - t - 1) as u64);
    Ok(IdentityReport::new("yakovlev", lhs, rhs)
        .param("n", n)
        .param("t", t)
        .param("I", rows)
        .param("J", cols)
        .param("I'", &row_rest)
        .param("J'", &col_rest)
        .note(format!("{} signed terms", perms.len())))
}
