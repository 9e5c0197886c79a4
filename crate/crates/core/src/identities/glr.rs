//! The Gasca–López-Carmona–Ramírez generalization.
//!
//! For `n = t + q` and ordered column lists `J_1..J_q` of size `t+1` whose
//! consecutive intersections `S_k = J_k ∩ J_{k+1}` have size `t`, the
//! `q × q` matrix `b_{ik} = M[1..t, t+i ; J_k]` satisfies
//!
//! ```text
//! det B = c · det M · Π_{k<q} M[1..t ; S_k]
//! ```
//!
//! with a sign factor `c` that depends on the lists only.

use crate::det::{det_reference, minor_det};
use crate::error::{Error, Result};
use crate::index::{count_inversions, IndexList};
use crate::matrix::Matrix;
use crate::report::IdentityReport;
use crate::scalar::Scalar;

/// Validated column lists plus everything derived from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlrConfig {
    t: usize,
    lists: Vec<IndexList>,
    separators: Vec<IndexList>,
    union: IndexList,
    /// `(j_{h_k}^k, h_k)` for each k; empty when `q = 1`.
    pivots: Vec<(usize, usize)>,
}

impl GlrConfig {
    pub fn new(t: usize, lists: Vec<IndexList>) -> Result<Self> {
        let q = lists.len();
        if q == 0 {
            return Err(Error::Config("at least one column list is required".into()));
        }
        let n = t + q;
        for (k, list) in lists.iter().enumerate() {
            if !list.is_ordered() {
                return Err(Error::Config(format!("J_{} = {list} is not ordered", k + 1)));
            }
            if list.len() != t + 1 {
                return Err(Error::Config(format!(
                    "card(J_{}) = {} but t+1 = {}",
                    k + 1,
                    list.len(),
                    t + 1
                )));
            }
            if let Some(&bad) = list.iter().find(|&&j| j > n) {
                return Err(Error::Config(format!(
                    "J_{} contains {bad} outside N_{n}",
                    k + 1
                )));
            }
        }
        let separators: Vec<IndexList> = lists
            .windows(2)
            .map(|w| w[0].intersection(&w[1]))
            .collect();
        for (k, s) in separators.iter().enumerate() {
            if s.len() != t {
                return Err(Error::Config(format!(
                    "card(J_{} ∩ J_{}) = {} but t = {t}",
                    k + 1,
                    k + 2,
                    s.len()
                )));
            }
        }
        let union = lists
            .iter()
            .fold(IndexList::empty(), |acc, l| acc.union(l));

        let mut pivots = Vec::new();
        if q >= 2 {
            for (k, list) in lists.iter().enumerate() {
                let sep = if k == 0 { &separators[0] } else { &separators[k - 1] };
                let rest = list.difference(sep);
                if rest.len() != 1 {
                    return Err(Error::Config(format!(
                        "J_{} minus its neighbour has {} elements, expected 1",
                        k + 1,
                        rest.len()
                    )));
                }
                let j = rest[0];
                let h = list.iter().position(|&x| x == j).unwrap() + 1;
                pivots.push((j, h));
            }
        }

        Ok(GlrConfig {
            t,
            lists,
            separators,
            union,
            pivots,
        })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn q(&self) -> usize {
        self.lists.len()
    }

    pub fn n(&self) -> usize {
        self.t + self.lists.len()
    }

    pub fn lists(&self) -> &[IndexList] {
        &self.lists
    }

    pub fn separators(&self) -> &[IndexList] {
        &self.separators
    }

    pub fn union(&self) -> &IndexList {
        &self.union
    }

    pub fn pivots(&self) -> &[(usize, usize)] {
        &self.pivots
    }

    fn lists_string(&self) -> String {
        self.lists
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Sign factor of the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlrSign {
    /// -1, 0 or +1.
    pub c: i8,
    /// `q(q-1)/2 + Σ_k (j_{h_k}^k - h_k)`; 0 when `q = 1`.
    pub mu: u64,
    /// Inversions of the pivot sequence `(j_{h_1}^1, ..., j_{h_q}^q)`.
    pub pivot_inversions: u64,
}

impl GlrSign {
    /// `(-1)^mu` alone, without the pivot-order factor.
    pub fn parity_sign(&self) -> i8 {
        if self.mu % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// `c = 0` when the lists do not cover `N_{t+q}`; otherwise
/// `c = (-1)^{mu + inv(pivots)}`. The pivot-order factor is what keeps the
/// identity valid when the new columns do not enter in increasing order; it
/// is `+1` whenever they do. For `q = 1` the sign is `+1`.
pub fn glr_sign(cfg: &GlrConfig) -> GlrSign {
    let q = cfg.q() as u64;
    if cfg.q() == 1 {
        return GlrSign {
            c: 1,
            mu: 0,
            pivot_inversions: 0,
        };
    }
    let mu = q * (q - 1) / 2
        + cfg
            .pivots
            .iter()
            .map(|&(j, h)| (j - h) as u64)
            .sum::<u64>();
    let order: Vec<usize> = cfg.pivots.iter().map(|p| p.0).collect();
    let pivot_inversions = count_inversions(&order) as u64;
    let c = if cfg.union.len() < cfg.n() {
        0
    } else if (mu + pivot_inversions) % 2 == 0 {
        1
    } else {
        -1
    };
    GlrSign {
        c,
        mu,
        pivot_inversions,
    }
}

/// `b_{ik} = M[1..t, t+i ; J_k]`.
pub fn glr_matrix(m: &Matrix, cfg: &GlrConfig) -> Result<Matrix> {
    let (t, q) = (cfg.t(), cfg.q());
    let mut entries = Vec::with_capacity(q * q);
    for i in 1..=q {
        let rows: Vec<usize> = (1..=t).chain(std::iter::once(t + i)).collect();
        for list in cfg.lists() {
            entries.push(minor_det(m, &rows, list)?);
        }
    }
    Matrix::new(q, q, entries)
}

pub fn glr_check(m: &Matrix, cfg: &GlrConfig) -> Result<IdentityReport> {
    let n = cfg.n();
    if m.rows() != n || m.cols() != n {
        return Err(Error::Shape(format!(
            "configuration needs a {n}x{n} matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let sign = glr_sign(cfg);
    let lead: Vec<usize> = (1..=cfg.t()).collect();
    let lhs = det_reference(&glr_matrix(m, cfg)?)?;
    let mut rhs = det_reference(m)? * Scalar::from(sign.c as i64);
    for s in cfg.separators() {
        rhs = rhs * minor_det(m, &lead, s)?;
    }
    let mut report = IdentityReport::new("glr", lhs, rhs)
        .param("n", n)
        .param("t", cfg.t())
        .param("q", cfg.q())
        .param("J", cfg.lists_string())
        .param("c", sign.c)
        .param("mu", sign.mu);
    if cfg.q() == 1 {
        report = report.note("q=1: no separator lists, sign fixed to +1");
    } else if sign.pivot_inversions % 2 == 1 && sign.c != 0 {
        report = report.note(format!(
            "pivot order has {} inversions; (-1)^mu alone would give {}",
            sign.pivot_inversions,
            sign.parity_sign()
        ));
    }
    Ok(report)
}
