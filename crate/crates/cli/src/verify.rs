//! The `verify` subcommand: one identity, checked on a matrix file or on a
//! seeded campaign of random matrices.

use std::fs;
use std::path::PathBuf;

use clap::Args;
use rayon::prelude::*;
use sylvester_core::identities::bgm::{corollary_one_level, corollary_two_applies, Z_HI, Z_LO};
use sylvester_core::identities::{
    bgm_corollary_checks, bgm_ratio_constancy, bgm_sylvester_specialization, block_rule_check,
    chio_condense, glr_check, mulders_check, newgen_block_check, newgen_check, newgen_s2_check,
    sylvester_check, yakovlev_check, BgmConfig, GlrConfig, NewGenConfig,
};
use sylvester_core::index::parse_list_of_lists;
use sylvester_core::{Error, IdentityReport, IndexList, Matrix, SeedStream};

use crate::{check_range, emit, CliError};

const IDENTITIES: [&str; 10] = [
    "sylvester",
    "chio",
    "block",
    "yakovlev",
    "glr",
    "bgm",
    "mulders",
    "newgen",
    "newgen-s2",
    "newgen-block",
];

#[derive(Args)]
pub struct VerifyArgs {
    /// One of sylvester, chio, block, yakovlev, glr, bgm, mulders, newgen,
    /// newgen-s2, newgen-block.
    identity: String,
    /// Matrix file in the text format. Without it a seeded campaign runs.
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long, default_value_t = -9)]
    lo: i64,
    #[arg(long, default_value_t = 9)]
    hi: i64,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Row list for yakovlev, e.g. "(1,3)".
    #[arg(long)]
    row_list: Option<String>,
    /// Column list for yakovlev.
    #[arg(long)]
    col_list: Option<String>,
    /// Column lists for glr and bgm, separated by ';'.
    #[arg(long)]
    j_lists: Option<String>,
    /// Row lists for bgm, separated by ';'.
    #[arg(long)]
    i_lists: Option<String>,
    /// Explicit I_0 for bgm.
    #[arg(long)]
    i0: Option<String>,
    /// Border draws for the bgm ratio check.
    #[arg(long, default_value_t = 5)]
    draws: usize,
    /// One JSON object per line instead of text.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Identity parameters after parsing, shared by every trial.
struct Params {
    identity: String,
    t: Option<usize>,
    s: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
    k: Option<usize>,
    row_list: Option<IndexList>,
    col_list: Option<IndexList>,
    j_lists: Option<Vec<IndexList>>,
    i_lists: Option<Vec<IndexList>>,
    i0: Option<IndexList>,
    draws: usize,
}

fn usage_list<T>(flag: &str, r: Result<T, Error>) -> Result<T, CliError> {
    r.map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
}

impl Params {
    fn from_args(a: &VerifyArgs) -> Result<Self, CliError> {
        let one = |flag: &str, s: &Option<String>| {
            s.as_deref()
                .map(|s| usage_list(flag, s.parse::<IndexList>()))
                .transpose()
        };
        let many = |flag: &str, s: &Option<String>| {
            s.as_deref()
                .map(|s| usage_list(flag, parse_list_of_lists(s)))
                .transpose()
        };
        Ok(Params {
            identity: a.identity.clone(),
            t: a.t,
            s: a.s,
            p: a.p,
            q: a.q,
            k: a.k,
            row_list: one("row-list", &a.row_list)?,
            col_list: one("col-list", &a.col_list)?,
            j_lists: many("j-lists", &a.j_lists)?,
            i_lists: many("i-lists", &a.i_lists)?,
            i0: one("i0", &a.i0)?,
            draws: a.draws,
        })
    }
}

fn need(v: Option<usize>, flag: &str, identity: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{identity} needs --{flag}")))
}

/// Runs every check the parameters ask for on one matrix. `stream` supplies
/// any random choices (lists, border seeds) so trials stay reproducible.
fn check_one(
    m: &Matrix,
    p: &Params,
    stream: &mut SeedStream,
) -> Result<Vec<IdentityReport>, CliError> {
    let id = p.identity.as_str();
    let reports = match id {
        "sylvester" => match p.t {
            Some(t) => vec![sylvester_check(m, t)?],
            None => (0..m.rows())
                .map(|t| sylvester_check(m, t))
                .collect::<Result<_, _>>()?,
        },
        "chio" => match chio_condense(m) {
            Ok((_, r)) => vec![r],
            Err(Error::PivotFailure { .. }) => {
                eprintln!("chio: a11 = 0, check skipped");
                Vec::new()
            }
            Err(e) => return Err(e.into()),
        },
        "block" => vec![block_rule_check(m)?],
        "yakovlev" => {
            let (rows, cols) = match (&p.row_list, &p.col_list) {
                (Some(r), Some(c)) => (r.clone(), c.clone()),
                (None, None) => {
                    let t = need(p.t, "t", id)?;
                    let n = m.rows();
                    if t > n {
                        return Err(CliError::Usage(format!("--t {t} exceeds order {n}")));
                    }
                    (
                        IndexList::ordered(stream.subset(n, t))?,
                        IndexList::ordered(stream.subset(n, t))?,
                    )
                }
                _ => {
                    return Err(CliError::Usage(
                        "yakovlev needs both --row-list and --col-list, or --t".into(),
                    ))
                }
            };
            vec![yakovlev_check(m, &rows, &cols)?]
        }
        "glr" => {
            let t = need(p.t, "t", id)?;
            let lists = match &p.j_lists {
                Some(l) => l.clone(),
                None => (1..=m.rows().saturating_sub(t))
                    .map(|k| IndexList::first(t).appended(t + k))
                    .collect(),
            };
            vec![glr_check(m, &GlrConfig::new(t, lists)?)?]
        }
        "bgm" => match (&p.i_lists, &p.j_lists) {
            (Some(i), Some(j)) => {
                let cfg = BgmConfig::new(i.clone(), j.clone(), p.i0.clone())?;
                if corollary_two_applies(&cfg) || corollary_one_level(&cfg).is_some() {
                    let z = stream.matrix(cfg.q(), m.cols(), Z_LO, Z_HI);
                    bgm_corollary_checks(m, &cfg, &z)?.into_iter().collect()
                } else {
                    vec![bgm_ratio_constancy(m, &cfg, p.draws, stream.next_u64())?]
                }
            }
            (None, None) => vec![bgm_sylvester_specialization(m, need(p.t, "t", id)?)?],
            _ => {
                return Err(CliError::Usage(
                    "bgm needs both --i-lists and --j-lists, or --t".into(),
                ))
            }
        },
        "mulders" => vec![mulders_check(
            m,
            need(p.t, "t", id)?,
            need(p.p, "p", id)?,
            need(p.q, "q", id)?,
            need(p.s, "s", id)?,
        )?],
        "newgen" => {
            let t = need(p.t, "t", id)?;
            let s = need(p.s, "s", id)?;
            match p.k {
                Some(k) => vec![newgen_check(m, t, s, k)?],
                None => (0..=NewGenConfig::for_matrix(m, t, s)?.q())
                    .map(|k| newgen_check(m, t, s, k))
                    .collect::<Result<_, _>>()?,
            }
        }
        "newgen-s2" => vec![newgen_s2_check(m, need(p.t, "t", id)?)?],
        "newgen-block" => {
            let t = match p.t {
                Some(t) => t,
                None => m.rows().checked_sub(4).ok_or_else(|| {
                    CliError::Usage(format!("newgen-block needs order >= 5, got {}", m.rows()))
                })?,
            };
            vec![newgen_block_check(m, t)?]
        }
        other => return Err(CliError::Usage(format!("unknown identity {other:?}"))),
    };
    Ok(reports)
}

fn load(path: &PathBuf) -> Result<Matrix, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Matrix::parse_text(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

pub fn run(a: VerifyArgs) -> Result<u8, CliError> {
    if !IDENTITIES.contains(&a.identity.as_str()) {
        return Err(CliError::Usage(format!(
            "unknown identity {:?}; expected one of {}",
            a.identity,
            IDENTITIES.join(", ")
        )));
    }
    let params = Params::from_args(&a)?;

    let batches: Vec<Vec<IdentityReport>> = match &a.matrix {
        Some(path) => {
            if a.trials.is_some() || a.rows.is_some() {
                return Err(CliError::Usage(
                    "--matrix excludes --trials, --rows and --cols".into(),
                ));
            }
            let m = load(path)?;
            vec![check_one(&m, &params, &mut SeedStream::for_trial(a.seed, 0))?]
        }
        None => {
            let trials = a.trials.unwrap_or(1);
            if trials == 0 {
                return Err(CliError::Usage("--trials must be at least 1".into()));
            }
            let rows = match a.rows {
                Some(r) if r > 0 => r,
                _ => {
                    return Err(CliError::Usage(
                        "give --matrix, or a positive --rows for a campaign".into(),
                    ))
                }
            };
            let cols = a.cols.unwrap_or(rows);
            if cols == 0 {
                return Err(CliError::Usage("--cols must be positive".into()));
            }
            check_range(a.lo, a.hi)?;
            (0..trials as u64)
                .into_par_iter()
                .map(|trial| {
                    let mut stream = SeedStream::for_trial(a.seed, trial);
                    let m = stream.matrix(rows, cols, a.lo, a.hi);
                    let reports = check_one(&m, &params, &mut stream)?;
                    Ok(reports
                        .into_iter()
                        .map(|r| r.param("trial", trial))
                        .collect())
                })
                .collect::<Result<_, CliError>>()?
        }
    };

    let mut text = String::new();
    let mut all_hold = true;
    for r in batches.iter().flatten() {
        all_hold &= r.holds;
        text.push_str(&if a.json { r.to_json() } else { r.to_string() });
        text.push('\n');
    }
    emit(a.out.as_deref(), &text)?;
    Ok(if all_hold { 0 } else { crate::EXIT_FAIL })
}
