//! Generalized Sylvester identity over a chain of leading submatrices.
//!
//! With `r = min(n, m) = t + q·s`, `M_k` is the leading block of order
//! `m_k = t + k·s` and `B_k` is the `s × s` matrix of bordered minors
//! `a_{m_k+i, m_k+j}^{(m_k)}`. Writing `e_i = (s-1)^{k-1-i}`, the identities
//! are checked without division:
//!
//! ```text
//! k even:  det M_k · Π_{j even ≤ k-2} (det B_j)^{e_j}
//!            = (det M_0)^{(s-1)^k} · Π_{i odd ≤ k-1} (det B_i)^{e_i}
//! k odd:   det M_k · (det M_0)^{(s-1)^k} · Π_{j odd ≤ k-2} (det B_j)^{e_j}
//!            = Π_{i even ≤ k-1} (det B_i)^{e_i}
//! ```
//!
//! Empty products and `0^0` are 1.

use num_traits::{One, Signed, Zero};

use crate::det::{det_reference, extended_minor};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::IdentityReport;
use crate::scalar::Scalar;

/// Upper bound on `exponent × bits(base)` for any single power.
pub const POWER_BIT_CAP: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NewGenConfig {
    t: usize,
    s: usize,
    q: usize,
}

impl NewGenConfig {
    /// Validates `0 < t`, `1 <= s <= min(n-t, m-t)` and `s | (min(n,m) - t)`.
    pub fn new(rows: usize, cols: usize, t: usize, s: usize) -> Result<Self> {
        let r = rows.min(cols);
        if t == 0 || t > r {
            return Err(Error::Config(format!("need 0 < t <= min(n,m) = {r}, got t={t}")));
        }
        if s == 0 || s > r - t {
            return Err(Error::Config(format!(
                "need 1 <= s <= min(n,m) - t = {}, got s={s}",
                r - t
            )));
        }
        if (r - t) % s != 0 {
            return Err(Error::Config(format!(
                "min(n,m) - t = {} is not a multiple of s={s}",
                r - t
            )));
        }
        Ok(NewGenConfig {
            t,
            s,
            q: (r - t) / s,
        })
    }

    pub fn for_matrix(m: &Matrix, t: usize, s: usize) -> Result<Self> {
        Self::new(m.rows(), m.cols(), t, s)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `m_k = t + k·s`.
    pub fn order(&self, k: usize) -> usize {
        self.t + k * self.s
    }
}

/// `M_0, …, M_q`.
pub fn newgen_chain(m: &Matrix, t: usize, s: usize) -> Result<Vec<Matrix>> {
    let cfg = NewGenConfig::for_matrix(m, t, s)?;
    (0..=cfg.q()).map(|k| m.leading(cfg.order(k))).collect()
}

/// `B_k`, for `0 <= k <= q-1`.
pub fn newgen_b(m: &Matrix, t: usize, s: usize, k: usize) -> Result<Matrix> {
    let cfg = NewGenConfig::for_matrix(m, t, s)?;
    if k >= cfg.q() {
        return Err(Error::Domain(format!(
            "B_k needs 0 <= k <= q-1 = {}, got k={k}",
            cfg.q() as isize - 1
        )));
    }
    let mk = cfg.order(k);
    let mut entries = Vec::with_capacity(s * s);
    for i in 1..=s {
        for j in 1..=s {
            entries.push(extended_minor(m, mk, mk + i, mk + j)?);
        }
    }
    Matrix::new(s, s, entries)
}

/// `base^{radix^height}` with the size guard. Bases 0 and ±1 are exempt
/// because their powers never grow.
fn tower_pow(base: &Scalar, radix: u64, height: u32) -> Result<Scalar> {
    let exp = radix.checked_pow(height);
    let r = base.as_rational();
    if r.is_zero() {
        return Ok(if exp == Some(0) {
            Scalar::one()
        } else {
            Scalar::zero()
        });
    }
    if r.abs().is_one() {
        // the exponent's parity is the radix's parity unless height = 0
        let odd = height == 0 || radix % 2 == 1;
        return Ok(if odd { base.clone() } else { Scalar::one() });
    }
    let bits = r.numer().bits() + r.denom().bits();
    match exp {
        Some(e) if e.saturating_mul(bits) <= POWER_BIT_CAP => Ok(base.pow(e)),
        _ => Err(Error::Capacity {
            what: "power bit-length",
            got: exp.map_or(u64::MAX, |e| e.saturating_mul(bits)) as usize,
            limit: POWER_BIT_CAP as usize,
        }),
    }
}

pub fn newgen_check(m: &Matrix, t: usize, s: usize, k: usize) -> Result<IdentityReport> {
    let cfg = NewGenConfig::for_matrix(m, t, s)?;
    if k > cfg.q() {
        return Err(Error::Domain(format!(
            "stage k={k} exceeds q={}",
            cfg.q()
        )));
    }
    let radix = (s - 1) as u64;
    let det_mk = det_reference(&m.leading(cfg.order(k))?)?;
    let det_m0 = det_reference(&m.leading(t)?)?;
    let m0_pow = tower_pow(&det_m0, radix, k as u32)?;

    // Π over i < k with i ≡ parity (mod 2) of (det B_i)^{(s-1)^{k-1-i}}
    let product = |parity: usize| -> Result<Scalar> {
        let mut acc = Scalar::one();
        for i in (parity..k).step_by(2) {
            let det_b = det_reference(&newgen_b(m, t, s, i)?)?;
            acc = acc * tower_pow(&det_b, radix, (k - 1 - i) as u32)?;
        }
        Ok(acc)
    };
    let odd_b = product(1)?;
    let even_b = product(0)?;

    let (lhs, rhs, form) = if k % 2 == 0 {
        (det_mk * even_b, m0_pow * odd_b, "even")
    } else {
        (det_mk * m0_pow * odd_b, even_b, "odd")
    };
    Ok(IdentityReport::new("newgen", lhs, rhs)
        .param("t", t)
        .param("s", s)
        .param("q", cfg.q())
        .param("k", k)
        .note(format!("{form}-k form")))
}

/// The `s = 2`, `k = q` case on a square matrix.
pub fn newgen_s2_check(m: &Matrix, t: usize) -> Result<IdentityReport> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "s=2 form needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if t == 0 || t >= n || (n - t) % 2 != 0 {
        return Err(Error::Config(format!(
            "s=2 form needs 0 < t < n with n-t even (n={n}, t={t})"
        )));
    }
    let q = (n - t) / 2;
    let mut r = newgen_check(m, t, 2, q)?;
    r.identity = "newgen-s2".into();
    r.notes = vec![if q % 2 == 0 {
        format!("q={q} even: det M · Π_(j even) det B_j = det A11 · Π_(i odd) det B_i")
    } else {
        format!("q={q} odd: det M · det A11 · Π_(j odd) det B_j = Π_(i even) det B_i")
    }];
    Ok(r)
}

/// For `M'` of order `t + 4` with 2-wide outer blocks around a central `D`
/// of order `t`, moves `D` to the leading position by the symmetric
/// permutation `(3..t+2, 1, 2, t+3, t+4)` and checks
/// `det M · det B_0 = det D · det B_1` with `s = q = 2`.
pub fn newgen_block_check(mprime: &Matrix, t: usize) -> Result<IdentityReport> {
    let n = mprime.rows();
    if !mprime.is_square() || n != t + 4 || t == 0 {
        return Err(Error::Shape(format!(
            "block form needs a square matrix of order t+4 with t > 0 (t={t}, got {}x{})",
            mprime.rows(),
            mprime.cols()
        )));
    }
    let perm: Vec<usize> = (3..=t + 2).chain([1, 2, t + 3, t + 4]).collect();
    let m = mprime.submatrix(&perm, &perm)?;
    let det_d = det_reference(&m.leading(t)?)?;
    let det_b0 = det_reference(&newgen_b(&m, t, 2, 0)?)?;
    let det_b1 = det_reference(&newgen_b(&m, t, 2, 1)?)?;
    let lhs = det_reference(mprime)? * det_b0;
    let rhs = det_d * det_b1;
    Ok(IdentityReport::new("newgen-block", lhs, rhs)
        .param("n", n)
        .param("t", t))
}
