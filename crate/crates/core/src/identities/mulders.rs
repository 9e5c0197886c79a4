//! Mulders' pair-class generalization.
//!
//! `ã_{i,j}^{(t)}` is the determinant of `[(1,1),…,(t,t)] ← [(i,j)]`, which
//! unlike `a_{i,j}^{(t)}` is defined for every `i`, `j`. The identity is
//!
//! ```text
//! a^{[(1,1)…(t,t)] ← [(p+1,q+1)…(p+s,q+s)]} · (ã_{t,t}^{(t-1)})^{s-1}
//!     = det (ã_{p+i,q+j}^{(t)})_{i,j=1..s}
//! ```

use crate::det::{det_reference, minor_det};
use crate::error::{Error, Result};
use crate::index::PairClass;
use crate::matrix::Matrix;
use crate::report::IdentityReport;
use crate::scalar::Scalar;

/// `a^{[pc]}`: rows and columns taken in pair order. The empty class gives 1
/// and a repeated column gives 0.
pub fn mulders_pair_det(m: &Matrix, pc: &PairClass) -> Result<Scalar> {
    for &(i, j) in pc.pairs() {
        m.check_row(i)?;
        m.check_col(j)?;
    }
    if pc.has_repeated_column() {
        return Ok(Scalar::zero());
    }
    minor_det(m, &pc.rows(), &pc.cols())
}

/// `ã_{i,j}^{(t)}`.
pub fn mulders_tilde(m: &Matrix, t: usize, i: usize, j: usize) -> Result<Scalar> {
    let update = PairClass::new(vec![(i, j)])?;
    mulders_pair_det(m, &PairClass::diagonal(t).arrow(&update))
}

pub fn mulders_check(m: &Matrix, t: usize, p: usize, q: usize, s: usize) -> Result<IdentityReport> {
    let (n, cols) = (m.rows(), m.cols());
    if t > n.min(cols) {
        return Err(Error::Domain(format!(
            "need t <= min(n,m) = {}, got t={t}",
            n.min(cols)
        )));
    }
    if p > t || q > t {
        return Err(Error::Domain(format!("need p,q <= t={t}, got p={p}, q={q}")));
    }
    if s == 0 || s > (n - p).min(cols - q) {
        return Err(Error::Domain(format!(
            "need 1 <= s <= min(n-p, m-q) = {}, got s={s}",
            (n - p).min(cols - q)
        )));
    }

    let update = PairClass::new((1..=s).map(|k| (p + k, q + k)).collect())?;
    let class = PairClass::diagonal(t).arrow(&update);
    let head = mulders_pair_det(m, &class)?;
    // ã_{t,t}^{(t-1)} is the leading t-minor; 1 when t = 0
    let pivot = if t == 0 {
        Scalar::one()
    } else {
        mulders_tilde(m, t - 1, t, t)?
    };
    let lhs = head * pivot.pow((s - 1) as u64);

    let mut entries = Vec::with_capacity(s * s);
    for i in 1..=s {
        for j in 1..=s {
            entries.push(mulders_tilde(m, t, p + i, q + j)?);
        }
    }
    let rhs = det_reference(&Matrix::new(s, s, entries)?)?;

    Ok(IdentityReport::new("mulders", lhs, rhs)
        .param("t", t)
        .param("p", p)
        .param("q", q)
        .param("s", s)
        .param("class", class))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::det::{extended_minor, leading_minor};
    use crate::identities::classical::sylvester_check;
    use crate::rng::SeedStream;

    fn seeded(seed: u64) -> Matrix {
        SeedStream::for_trial(seed, 0).matrix(7, 8, -9, 9)
    }

    #[test]
    fn pair_det_basics() {
        let m = Matrix::from_rows(&[[1, 2], [3, 4]]);
        assert_eq!(mulders_pair_det(&m, &PairClass::empty()).unwrap(), Scalar::one());
        assert_eq!(
            mulders_pair_det(&m, &PairClass::diagonal(2)).unwrap(),
            Scalar::from(-2)
        );
        let rep = PairClass::new(vec![(1, 2), (2, 2)]).unwrap();
        assert_eq!(mulders_pair_det(&m, &rep).unwrap(), Scalar::zero());
        // pair order does not matter
        let swapped = PairClass::new(vec![(2, 2), (1, 1)]).unwrap();
        assert_eq!(mulders_pair_det(&m, &swapped).unwrap(), Scalar::from(-2));
    }

    #[test]
    fn tilde_table() {
        let m = seeded(3);
        let t = 3;
        for i in 1..=7 {
            for j in 1..=8 {
                let v = mulders_tilde(&m, t, i, j).unwrap();
                if i > t && j > t {
                    assert_eq!(v, extended_minor(&m, t, i, j).unwrap());
                } else if j <= t && (i > t || i != j) {
                    assert!(v.is_zero(), "({i},{j})");
                } else if i == j {
                    assert_eq!(v, leading_minor(&m, t).unwrap());
                } else {
                    // i <= t < j: column i of the leading block replaced by j
                    let mut cols: Vec<usize> = (1..=t).collect();
                    cols[i - 1] = j;
                    assert_eq!(v, minor_det(&m, &[1, 2, 3], &cols).unwrap());
                }
            }
        }
        let small = Matrix::from_rows(&[[1, 2], [3, 4]]);
        assert_eq!(mulders_tilde(&small, 1, 1, 2).unwrap(), Scalar::from(2));
    }

    #[test]
    fn first_worked_parameters() {
        let m = seeded(11);
        let r = mulders_check(&m, 5, 3, 4, 3).unwrap();
        assert_eq!(r.params["class"], "[(1,1),(2,2),(3,3),(4,5),(5,6),(6,7)]");
        assert!(r.holds, "{r}");
        assert_eq!(mulders_tilde(&m, 5, 4, 5).unwrap(), Scalar::zero());
        assert_eq!(mulders_tilde(&m, 5, 6, 5).unwrap(), Scalar::zero());
    }

    #[test]
    fn second_worked_parameters() {
        let m = seeded(12);
        let r = mulders_check(&m, 6, 2, 3, 3).unwrap();
        assert_eq!(r.params["class"], "[(1,1),(2,2),(3,4),(4,5),(5,6),(6,6)]");
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (Scalar::zero(), Scalar::zero()));
    }

    #[test]
    fn reduces_to_sylvester() {
        let m = SeedStream::for_trial(13, 0).matrix(6, 6, -9, 9);
        for t in 0..6 {
            let r = mulders_check(&m, t, t, t, 6 - t).unwrap();
            let s = sylvester_check(&m, t).unwrap();
            assert_eq!((r.lhs, r.rhs), (s.lhs, s.rhs));
        }
    }

    #[test]
    fn parameter_errors() {
        let m = seeded(1);
        assert!(matches!(mulders_check(&m, 8, 0, 0, 1), Err(Error::Domain(_))));
        assert!(matches!(mulders_check(&m, 3, 4, 0, 1), Err(Error::Domain(_))));
        assert!(matches!(mulders_check(&m, 3, 1, 1, 0), Err(Error::Domain(_))));
        assert!(matches!(mulders_check(&m, 3, 1, 1, 7), Err(Error::Domain(_))));
        assert!(mulders_check(&m, 3, 1, 1, 6).unwrap().holds);
    }
}
