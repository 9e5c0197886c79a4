//! Beckermann–Gasca–Mühlbach bordered determinants.
//!
//! `B` is the `q × q` matrix whose `(i, j)` entry is `M[I_i ; J_i]` bordered
//! below by row `j` of `Z` restricted to `J_i`. The theorem says
//! `det B = c · M[I_0 | Z ; J^{(q)}]` for a constant `c` that does not depend
//! on `Z`. The constant is not available in closed form, so it is checked by
//! behaviour: proportionality across independent `Z`, the zero cases of the
//! two corollaries, and the Sylvester specialization where `c` is known.

use crate::det::{det_reference, leading_minor};
use crate::error::{Error, Result};
use crate::index::IndexList;
use crate::matrix::Matrix;
use crate::report::IdentityReport;
use crate::rng::SeedStream;
use crate::scalar::Scalar;

/// Range of the random border rows.
pub const Z_LO: i64 = -9;
pub const Z_HI: i64 = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BgmConfig {
    i_lists: Vec<IndexList>,
    j_lists: Vec<IndexList>,
    i0: Option<IndexList>,
}

impl BgmConfig {
    /// Builds a configuration. When `i0` is `None` the first
    /// `card(J^{(q)}) - q` elements of `I^{(q)}` are used if that many exist;
    /// otherwise the configuration has no `I_0` (only the corollaries apply).
    pub fn new(
        i_lists: Vec<IndexList>,
        j_lists: Vec<IndexList>,
        i0: Option<IndexList>,
    ) -> Result<Self> {
        if i_lists.is_empty() || i_lists.len() != j_lists.len() {
            return Err(Error::Config(format!(
                "need q >= 1 matching row and column lists, got {} and {}",
                i_lists.len(),
                j_lists.len()
            )));
        }
        for (k, (i, j)) in i_lists.iter().zip(&j_lists).enumerate() {
            if !i.is_ordered() || !j.is_ordered() {
                return Err(Error::Config(format!("I_{0} and J_{0} must be ordered", k + 1)));
            }
            if j.len() != i.len() + 1 {
                return Err(Error::Config(format!(
                    "card(J_{0}) = {1} but card(I_{0}) + 1 = {2}",
                    k + 1,
                    j.len(),
                    i.len() + 1
                )));
            }
        }
        let mut cfg = BgmConfig {
            i_lists,
            j_lists,
            i0: None,
        };
        let meet = cfg.i_meet(cfg.q());
        let union = cfg.j_union(cfg.q());
        match i0 {
            Some(i0) => {
                if !i0.is_ordered() || i0.iter().any(|&x| !meet.contains(x)) {
                    return Err(Error::Config(format!(
                        "I_0 = {i0} is not an ordered subset of I^(q) = {meet}"
                    )));
                }
                if i0.len() + cfg.q() != union.len() {
                    return Err(Error::Config(format!(
                        "card(I_0) = {} but card(J^(q)) - q = {}",
                        i0.len(),
                        union.len() as i64 - cfg.q() as i64
                    )));
                }
                cfg.i0 = Some(i0);
            }
            None => {
                if union.len() >= cfg.q() && union.len() - cfg.q() <= meet.len() {
                    cfg.i0 = Some(IndexList::ordered(meet[..union.len() - cfg.q()].to_vec())?);
                }
            }
        }
        Ok(cfg)
    }

    /// Sylvester's lists for order `n = t + q`: `I_k = I_0 = (1..t)`,
    /// `J_k = (1..t, t+k)`.
    pub fn sylvester(t: usize, q: usize) -> Self {
        let lead = IndexList::first(t);
        BgmConfig {
            i_lists: vec![lead.clone(); q],
            j_lists: (1..=q).map(|k| lead.appended(t + k)).collect(),
            i0: Some(lead),
        }
    }

    pub fn q(&self) -> usize {
        self.i_lists.len()
    }

    pub fn i_lists(&self) -> &[IndexList] {
        &self.i_lists
    }

    pub fn j_lists(&self) -> &[IndexList] {
        &self.j_lists
    }

    pub fn i0(&self) -> Option<&IndexList> {
        self.i0.as_ref()
    }

    /// `I^{(k)}`, the intersection of the first `k` row lists.
    pub fn i_meet(&self, k: usize) -> IndexList {
        self.i_lists[1..k]
            .iter()
            .fold(self.i_lists[0].clone(), |acc, l| acc.intersection(l))
    }

    /// `J^{(k)}`, the union of the first `k` column lists.
    pub fn j_union(&self, k: usize) -> IndexList {
        self.j_lists[..k]
            .iter()
            .fold(IndexList::empty(), |acc, l| acc.union(l))
    }

    fn check_dims(&self, m: &Matrix) -> Result<()> {
        for &i in self.i_lists.iter().flat_map(|l| l.iter()) {
            m.check_row(i)?;
        }
        for &j in self.j_lists.iter().flat_map(|l| l.iter()) {
            m.check_col(j)?;
        }
        Ok(())
    }

    fn lists_param(lists: &[IndexList]) -> String {
        lists
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(";")
    }

    fn tag(&self, r: IdentityReport) -> IdentityReport {
        let r = r
            .param("q", self.q())
            .param("I", Self::lists_param(&self.i_lists))
            .param("J", Self::lists_param(&self.j_lists));
        match &self.i0 {
            Some(i0) => r.param("I0", i0),
            None => r,
        }
    }
}

/// `M[rows | Z ; cols]`: the rows of `M` followed by every row of `Z`, all
/// restricted to `cols`.
fn bordered(m: &Matrix, rows: &[usize], z: &Matrix, z_rows: &[usize], cols: &[usize]) -> Result<Scalar> {
    let top = m.submatrix(rows, cols)?;
    let bottom = z.submatrix(z_rows, cols)?;
    det_reference(&top.stack(&bottom)?)
}

fn check_z(m: &Matrix, cfg: &BgmConfig, z: &Matrix) -> Result<()> {
    if z.rows() != cfg.q() || z.cols() != m.cols() {
        return Err(Error::Shape(format!(
            "Z must be {}x{}, got {}x{}",
            cfg.q(),
            m.cols(),
            z.rows(),
            z.cols()
        )));
    }
    Ok(())
}

pub fn bgm_build_b(m: &Matrix, cfg: &BgmConfig, z: &Matrix) -> Result<Matrix> {
    cfg.check_dims(m)?;
    check_z(m, cfg, z)?;
    let q = cfg.q();
    let mut entries = Vec::with_capacity(q * q);
    for (i_list, j_list) in cfg.i_lists.iter().zip(&cfg.j_lists) {
        for zr in 1..=q {
            entries.push(bordered(m, i_list, z, &[zr], j_list)?);
        }
    }
    Matrix::new(q, q, entries)
}

/// `M[I_0 | 1..q ; J^{(q)}]`, the right-hand minor of the theorem.
pub fn bgm_bordered_minor(m: &Matrix, cfg: &BgmConfig, z: &Matrix) -> Result<Scalar> {
    let i0 = cfg
        .i0()
        .ok_or_else(|| Error::Config("no admissible I_0 for these lists".into()))?;
    check_z(m, cfg, z)?;
    let z_rows: Vec<usize> = (1..=cfg.q()).collect();
    bordered(m, i0, z, &z_rows, &cfg.j_union(cfg.q()))
}

/// The `k` at which the first corollary's hypothesis
/// `card(I^{(k)}) > card(J^{(k)}) - k` holds, if any.
pub fn corollary_one_level(cfg: &BgmConfig) -> Option<usize> {
    (2..=cfg.q()).find(|&k| cfg.i_meet(k).len() + k > cfg.j_union(k).len())
}

/// Whether the second corollary applies: `card(J^{(q)}) < q`.
pub fn corollary_two_applies(cfg: &BgmConfig) -> bool {
    cfg.j_union(cfg.q()).len() < cfg.q()
}

/// Checks `det B = 0` when either corollary applies; `None` when neither
/// does.
pub fn bgm_corollary_checks(
    m: &Matrix,
    cfg: &BgmConfig,
    z: &Matrix,
) -> Result<Option<IdentityReport>> {
    let which = if corollary_two_applies(cfg) {
        format!(
            "card(J^(q)) = {} < q = {}",
            cfg.j_union(cfg.q()).len(),
            cfg.q()
        )
    } else if let Some(k) = corollary_one_level(cfg) {
        format!(
            "card(I^({k})) = {} > card(J^({k})) - {k} = {}",
            cfg.i_meet(k).len(),
            cfg.j_union(k).len() as i64 - k as i64
        )
    } else {
        return Ok(None);
    };
    let det_b = det_reference(&bgm_build_b(m, cfg, z)?)?;
    Ok(Some(
        cfg.tag(IdentityReport::new("bgm-corollary", det_b, Scalar::zero()))
            .note(which),
    ))
}

/// Draws `trials` border matrices `Z` and verifies that
/// `det B^{(a)} · minor^{(b)} = det B^{(b)} · minor^{(a)}` for every pair of
/// draws. The reported sides are those of the first failing pair, or of the
/// first two draws when all agree.
pub fn bgm_ratio_constancy(
    m: &Matrix,
    cfg: &BgmConfig,
    trials: usize,
    seed: u64,
) -> Result<IdentityReport> {
    if trials < 2 {
        return Err(Error::Config(format!(
            "ratio constancy needs at least 2 draws, got {trials}"
        )));
    }
    let mut pairs = Vec::with_capacity(trials);
    for d in 0..trials {
        let z = SeedStream::for_trial(seed, d as u64).matrix(cfg.q(), m.cols(), Z_LO, Z_HI);
        let det_b = det_reference(&bgm_build_b(m, cfg, &z)?)?;
        let minor = bgm_bordered_minor(m, cfg, &z)?;
        pairs.push((det_b, minor));
    }
    let base = cfg
        .tag(IdentityReport::new("bgm", Scalar::zero(), Scalar::zero()))
        .param("draws", trials)
        .param("seed", seed);

    if pairs.iter().all(|(_, minor)| minor.is_zero()) {
        // det B = c · 0 for every draw
        let offender = pairs.iter().find(|(b, _)| !b.is_zero());
        let lhs = offender.map_or_else(Scalar::zero, |(b, _)| b.clone());
        return Ok(IdentityReport {
            holds: lhs.is_zero(),
            lhs,
            ..base
        }
        .note("inconclusive: the bordered minor vanished for every draw"));
    }

    let mut first = None;
    for a in 0..trials {
        for b in a + 1..trials {
            let lhs = &pairs[a].0 * &pairs[b].1;
            let rhs = &pairs[b].0 * &pairs[a].1;
            if lhs != rhs {
                return Ok(IdentityReport {
                    holds: false,
                    lhs,
                    rhs,
                    ..base
                }
                .note(format!("draws {a} and {b} disagree")));
            }
            if first.is_none() {
                first = Some((lhs, rhs));
            }
        }
    }
    let (lhs, rhs) = first.expect("at least one pair");
    let c = pairs
        .iter()
        .find(|(_, minor)| !minor.is_zero())
        .and_then(|(b, minor)| b.checked_div(minor))
        .expect("some minor is nonzero");
    Ok(IdentityReport {
        holds: true,
        lhs,
        rhs,
        ..base
    }
    .note(format!("c = {c}")))
}

/// Sylvester's lists on a square `M` of order `t + q`. With Kronecker border
/// rows `z_k = e_{t+k}` the constant is `c = M[1..t;1..t]^{q-1}`; with
/// `z_k = ` row `t+k` of `M` the theorem becomes Sylvester's identity.
/// Both are checked in cross-multiplied form; the reported sides are
/// `det B` and `c · det M` for the second choice.
pub fn bgm_sylvester_specialization(m: &Matrix, t: usize) -> Result<IdentityReport> {
    if !m.is_square() || m.rows() <= t {
        return Err(Error::Shape(format!(
            "Sylvester specialization needs a square matrix of order > t={t}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let q = n - t;
    let cfg = BgmConfig::sylvester(t, q);
    let c = leading_minor(m, t)?.pow((q - 1) as u64);

    let kron = Matrix::from_fn(q, n, |k, l| {
        if l == t + k {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let kron_b = det_reference(&bgm_build_b(m, &cfg, &kron)?)?;
    let kron_minor = bgm_bordered_minor(m, &cfg, &kron)?;
    let kron_ok = kron_b == &c * &kron_minor;

    let tail_rows: Vec<usize> = (t + 1..=n).collect();
    let z = m.submatrix(&tail_rows, &(1..=n).collect::<Vec<_>>())?;
    let det_b = det_reference(&bgm_build_b(m, &cfg, &z)?)?;
    let minor = bgm_bordered_minor(m, &cfg, &z)?;
    let mut report = cfg.tag(IdentityReport::new("bgm-sylvester", det_b, &c * &minor));
    report.holds &= kron_ok;
    Ok(report
        .param("t", t)
        .param("c", &c)
        .note(if kron_ok {
            "Kronecker rows give det B = c · M[1..t;1..t]"
        } else {
            "Kronecker rows disagree with c = M[1..t;1..t]^(q-1)"
        }))
}
