//! Certified fraction-free elimination and entry-growth measurement.
//!
//! [`bareiss_certified`] checks every intermediate of the elimination against
//! the bordered minor it is supposed to equal, so a passing run is a
//! machine-checked instance of Sylvester's identity at every stage.
//!
//! [`growth_report`] runs the same elimination next to textbook rational
//! Gaussian elimination and records the largest numerator per stage. The
//! rational path keeps each entry as an unreduced numerator/denominator pair,
//! as a naive implementation without gcd normalisation would; the reduced
//! size is tracked as well for comparison.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::det::{det_reference, extended_minor};
use crate::elimination::{det_bareiss, EliminationTrace};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rng::SeedStream;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub det: Scalar,
    pub trace: EliminationTrace,
    /// Number of stage entries compared against bordered minors.
    pub entries_checked: usize,
}

/// Runs [`det_bareiss`] on an integer matrix and certifies that each stage-`t`
/// entry `(i, j)` with `i, j > t` equals `a_{i,j}^{(t)}`, that every division
/// is exact, and that the result matches [`det_reference`].
pub fn bareiss_certified(m: &Matrix) -> Result<Certificate> {
    if !m.is_integer() {
        return Err(Error::Domain(
            "certification needs integer entries".into(),
        ));
    }
    let (det, trace) = det_bareiss(m)?;
    let n = m.rows();
    let mut entries_checked = 0;
    for stage in trace.steps.iter().skip(1) {
        let t = stage.t;
        for i in t + 1..=n {
            for j in t + 1..=n {
                let expected = extended_minor(m, t, i, j)?;
                let got = stage.matrix.get(i, j);
                if *got != expected {
                    return Err(Error::Certification {
                        t,
                        i,
                        j,
                        detail: format!("elimination gave {got}, bordered minor is {expected}"),
                    });
                }
                entries_checked += 1;
            }
        }
    }
    if let Some(d) = trace.divisions.iter().find(|d| d.exact != Some(true)) {
        return Err(Error::Certification {
            t: d.t,
            i: d.i,
            j: d.j,
            detail: format!("{} is not divisible by {}", d.dividend, d.divisor),
        });
    }
    let reference = det_reference(m)?;
    if reference != det {
        return Err(Error::Certification {
            t: n.saturating_sub(1),
            i: n,
            j: n,
            detail: format!("elimination determinant {det} differs from reference {reference}"),
        });
    }
    Ok(Certificate {
        det,
        trace,
        entries_checked,
    })
}

/// Largest numerator bit-lengths after each stage, over the active block
/// `i, j > t` (the whole matrix at stage 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageGrowth {
    pub stage: usize,
    pub ff_bits: u64,
    pub naive_bits: u64,
    pub reduced_bits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthStats {
    pub stages: Vec<StageGrowth>,
    pub ff_det: Scalar,
    pub naive_det: Scalar,
}

impl GrowthStats {
    pub fn ff_never_exceeds_naive(&self) -> bool {
        self.stages.iter().all(|s| s.ff_bits <= s.naive_bits)
    }

    pub fn dets_agree(&self) -> bool {
        self.ff_det == self.naive_det
    }
}

/// An unreduced fraction with positive denominator.
#[derive(Clone)]
struct Frac {
    num: BigInt,
    den: BigInt,
}

impl Frac {
    fn from_scalar(s: &Scalar) -> Self {
        Frac {
            num: s.numer().clone(),
            den: s.denom().clone(),
        }
    }

    /// `a_ij - (a_ik / a_kk) · a_kj` without cancelling common factors.
    fn eliminate(aij: &Frac, aik: &Frac, akk: &Frac, akj: &Frac) -> Frac {
        let num = &aij.num * &aik.den * &akk.num * &akj.den
            - &aik.num * &akk.den * &akj.num * &aij.den;
        let den = &aij.den * &aik.den * &akk.num * &akj.den;
        if den.is_negative() {
            Frac { num: -num, den: -den }
        } else {
            Frac { num, den }
        }
    }
}

fn max_bits<'a>(it: impl Iterator<Item = &'a BigInt>) -> u64 {
    it.map(BigInt::bits).max().unwrap_or(0)
}

fn active<T>(grid: &[Vec<T>], t: usize) -> impl Iterator<Item = &T> {
    grid.iter().skip(t).flat_map(move |row| row.iter().skip(t))
}

/// Runs both elimination paths on a square integer matrix.
pub fn growth_report(m: &Matrix) -> Result<GrowthStats> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "growth report needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if !m.is_integer() {
        return Err(Error::Domain("growth report needs integer entries".into()));
    }
    let n = m.rows();
    let (ff_det, trace) = det_bareiss(m)?;

    let mut naive: Vec<Vec<Frac>> = (1..=n)
        .map(|i| m.row(i).iter().map(Frac::from_scalar).collect())
        .collect();
    let mut reduced: Vec<Vec<Scalar>> = (1..=n).map(|i| m.row(i).to_vec()).collect();

    let mut stages = Vec::with_capacity(n.max(1));
    for t in 0..n.max(1) {
        if t > 0 {
            let k = t - 1;
            for i in t..n {
                for j in t..n {
                    naive[i][j] =
                        Frac::eliminate(&naive[i][j], &naive[i][k], &naive[k][k], &naive[k][j]);
                    let f = reduced[i][k]
                        .checked_div(&reduced[k][k])
                        .expect("pivot nonzero after fraction-free pass");
                    reduced[i][j] = &reduced[i][j] - &f * &reduced[k][j];
                }
            }
        }
        let ff = &trace.steps[t].matrix;
        let ff_bits = (t + 1..=n)
            .flat_map(|i| (t + 1..=n).map(move |j| (i, j)))
            .map(|(i, j)| ff.get(i, j).numer_bits())
            .max()
            .unwrap_or(0);
        stages.push(StageGrowth {
            stage: t,
            ff_bits,
            naive_bits: max_bits(active(&naive, t).map(|f| &f.num)),
            reduced_bits: max_bits(active(&reduced, t).map(Scalar::numer)),
        });
    }

    let naive_det = naive
        .iter()
        .enumerate()
        .map(|(k, row)| {
            Scalar::ratio(row[k].num.clone(), row[k].den.clone()).expect("positive denominator")
        })
        .product();
    Ok(GrowthStats {
        stages,
        ff_det,
        naive_det,
    })
}

/// Per-stage means over a batch of trials.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthTable {
    pub n: usize,
    pub used: usize,
    pub skipped: usize,
    /// `(stage, mean ff_bits, mean naive_bits)`.
    pub rows: Vec<(usize, f64, f64)>,
}

impl GrowthTable {
    pub fn from_stats(n: usize, stats: &[GrowthStats], skipped: usize) -> Self {
        let used = stats.len();
        let rows = (0..n.max(1))
            .map(|t| {
                let (ff, naive) = stats.iter().fold((0u64, 0u64), |(a, b), s| {
                    (a + s.stages[t].ff_bits, b + s.stages[t].naive_bits)
                });
                let denom = used.max(1) as f64;
                (t, ff as f64 / denom, naive as f64 / denom)
            })
            .collect();
        GrowthTable {
            n,
            used,
            skipped,
            rows,
        }
    }

    /// Tab-separated `stage ff_bits naive_bits` with a header line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("stage\tff_bits\tnaive_bits\n");
        for (t, ff, naive) in &self.rows {
            writeln!(out, "{t}\t{ff:.2}\t{naive:.2}").unwrap();
        }
        out
    }
}

/// Trial `trial` of a growth benchmark: `None` when the seeded matrix has a
/// vanishing leading minor and cannot be eliminated without pivoting.
pub fn growth_trial(n: usize, seed: u64, trial: u64, lo: i64, hi: i64) -> Result<Option<GrowthStats>> {
    let m = SeedStream::for_trial(seed, trial).matrix(n, n, lo, hi);
    match growth_report(&m) {
        Ok(stats) => Ok(Some(stats)),
        Err(Error::PivotFailure { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Sequential benchmark over `trials` seeded matrices.
pub fn growth_bench(n: usize, trials: usize, seed: u64, lo: i64, hi: i64) -> Result<GrowthTable> {
    let mut stats = Vec::with_capacity(trials);
    let mut skipped = 0;
    for trial in 0..trials as u64 {
        match growth_trial(n, seed, trial, lo, hi)? {
            Some(s) => stats.push(s),
            None => skipped += 1,
        }
    }
    Ok(GrowthTable::from_stats(n, &stats, skipped))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certifies_fixture() {
        let m = Matrix::from_rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 10]]);
        let c = bareiss_certified(&m).unwrap();
        assert_eq!(c.det, Scalar::from(-3));
        // stage 1: 4 entries, stage 2: 1 entry
        assert_eq!(c.entries_checked, 5);
    }

    #[test]
    fn certifies_seeded_matrices() {
        let mut done = 0;
        for trial in 0..40 {
            let m = SeedStream::for_trial(77, trial).matrix(5, 5, -9, 9);
            match bareiss_certified(&m) {
                Ok(c) => {
                    assert!(c.trace.all_divisions_exact());
                    done += 1;
                }
                Err(Error::PivotFailure { .. }) => {}
                Err(e) => panic!("{e}"),
            }
        }
        assert!(done > 30);
    }

    #[test]
    fn rejects_rational_input() {
        let m = Matrix::new(1, 1, vec![Scalar::ratio(1, 2).unwrap()]).unwrap();
        assert!(matches!(bareiss_certified(&m), Err(Error::Domain(_))));
        assert!(matches!(growth_report(&m), Err(Error::Domain(_))));
    }

    #[test]
    fn unreduced_step_matches_formula() {
        let f = |n: i64, d: i64| Frac {
            num: n.into(),
            den: d.into(),
        };
        // 1/2 - (3/4)/(-5/6) · (7/8)
        let r = Frac::eliminate(&f(1, 2), &f(3, 4), &f(-5, 6), &f(7, 8));
        assert!(r.den.is_positive());
        let value = Scalar::ratio(r.num.clone(), r.den.clone()).unwrap();
        let expected = Scalar::ratio(1, 2).unwrap()
            - Scalar::ratio(3, 4).unwrap()
                * Scalar::ratio(-6, 5).unwrap()
                * Scalar::ratio(7, 8).unwrap();
        assert_eq!(value, expected);
    }

    #[test]
    fn growth_on_integer_matrix() {
        let m = SeedStream::for_trial(3, 0).matrix(6, 6, -99, 99);
        let g = growth_report(&m).unwrap();
        assert_eq!(g.stages.len(), 6);
        assert!(g.dets_agree());
        assert_eq!(g.ff_det, det_reference(&m).unwrap());
        assert!(g.ff_never_exceeds_naive());
        // stages 0 and 1 coincide exactly on both paths
        assert_eq!(g.stages[0].ff_bits, g.stages[0].naive_bits);
        assert_eq!(g.stages[1].ff_bits, g.stages[1].naive_bits);
    }

    #[test]
    fn hilbert_like_matrix_shows_a_gap() {
        // 2520 / (i + j - 1): integer entries with Hilbert structure
        let m = Matrix::from_fn(6, 6, |i, j| Scalar::from(27720 / (i + j - 1) as i64));
        let g = growth_report(&m).unwrap();
        assert!(g.dets_agree());
        let last = g.stages.last().unwrap();
        assert!(last.naive_bits > last.ff_bits, "{g:?}");
    }

    #[test]
    fn bench_table() {
        let table = growth_bench(4, 6, 9, -9, 9).unwrap();
        assert_eq!(table.used + table.skipped, 6);
        let tsv = table.to_tsv();
        assert!(tsv.starts_with("stage\tff_bits\tnaive_bits\n"));
        assert_eq!(tsv.lines().count(), 5);
        assert_eq!(table, growth_bench(4, 6, 9, -9, 9).unwrap());
    }
}
