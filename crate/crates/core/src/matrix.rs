//! Dense exact matrices with 1-based minor extraction and the plain-text
//! matrix format.
//!
//! The text format is a header line `R C` followed by `R` lines of `C`
//! whitespace-separated tokens, each an optionally-signed integer or `p/q`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Axis, Error, Result};
use crate::scalar::Scalar;

/// Immutable dense `rows × cols` matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from `f(i, j)` with 1-based `i`, `j`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Integer matrix from nested rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        assert!(
            rows.iter().all(|row| row.as_ref().len() == c),
            "ragged rows"
        );
        Matrix::from_fn(r, c, |i, j| Scalar::from(rows[i - 1].as_ref()[j - 1]))
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry `a_{ij}`, 1-based. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "entry ({i},{j}) outside {}x{}",
            self.rows,
            self.cols
        );
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[(i - 1) * self.cols..i * self.cols]
    }

    pub fn is_integer(&self) -> bool {
        self.entries.iter().all(Scalar::is_integer)
    }

    pub fn check_row(&self, i: usize) -> Result<()> {
        check_index(Axis::Row, i, self.rows)
    }

    pub fn check_col(&self, j: usize) -> Result<()> {
        check_index(Axis::Col, j, self.cols)
    }

    /// The `|I| × |J|` matrix with entry `(α, β) = a_{I[α], J[β]}`, in listed
    /// order. Lists may be unordered and may repeat.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Matrix> {
        for &i in rows {
            self.check_row(i)?;
        }
        for &j in cols {
            self.check_col(j)?;
        }
        Ok(Matrix::from_fn(rows.len(), cols.len(), |a, b| {
            self.get(rows[a - 1], cols[b - 1]).clone()
        }))
    }

    /// Leading principal submatrix of order `k`.
    pub fn leading(&self, k: usize) -> Result<Matrix> {
        let idx: Vec<usize> = (1..=k).collect();
        self.submatrix(&idx, &idx)
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot stack {} columns on {} columns",
                other.cols, self.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix::new(self.rows + other.rows, self.cols, entries)
    }

    /// Copy with row `i` multiplied by `k`.
    pub fn scale_row(&self, i: usize, k: &Scalar) -> Result<Matrix> {
        self.check_row(i)?;
        Ok(Matrix::from_fn(self.rows, self.cols, |a, b| {
            let x = self.get(a, b);
            if a == i {
                x * k
            } else {
                x.clone()
            }
        }))
    }

    /// Renders the matrix text format, LF-terminated.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 1..=self.rows {
            let mut first = true;
            for x in self.row(i) {
                if !first {
                    out.push(' ');
                }
                first = false;
                write!(out, "{x}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Matrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing header line \"R C\"".into(),
        })?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        let parse_dim = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line: hline,
                msg: format!("bad dimension {s:?}"),
            })
        };
        let (rows, cols) = match dims.as_slice() {
            [r, c] => (parse_dim(r)?, parse_dim(c)?),
            _ => {
                return Err(Error::Parse {
                    line: hline,
                    msg: "header must be \"R C\"".into(),
                })
            }
        };
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (line, body) = lines.next().ok_or(Error::Parse {
                line: hline + r + 1,
                msg: format!("expected {rows} rows, found {r}"),
            })?;
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if tokens.len() != cols {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected {cols} entries, found {}", tokens.len()),
                });
            }
            for tok in tokens {
                entries.push(tok.parse::<Scalar>().map_err(|e| Error::Parse {
                    line,
                    msg: e.to_string(),
                })?);
            }
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                msg: "trailing data after the last row".into(),
            });
        }
        Matrix::new(rows, cols, entries)
    }
}

fn check_index(axis: Axis, index: usize, limit: usize) -> Result<()> {
    if (1..=limit).contains(&index) {
        Ok(())
    } else {
        Err(Error::Bounds { axis, index, limit })
    }
}

impl FromStr for Matrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Matrix::parse_text(s)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
