//! One checker per determinantal identity. Every checker returns both sides
//! after cross-multiplication, so none of them divides.

pub mod bgm;
pub mod classical;
pub mod glr;
pub mod mulders;
pub mod newgen;
pub mod yakovlev;

pub use bgm::{
    bgm_bordered_minor, bgm_build_b, bgm_corollary_checks, bgm_ratio_constancy,
    bgm_sylvester_specialization, BgmConfig,
};
pub use classical::{block_rule_check, bordered_minor_matrix, chio_condense, sylvester_check};
pub use glr::{glr_check, glr_matrix, glr_sign, GlrConfig, GlrSign};
pub use mulders::{mulders_check, mulders_pair_det, mulders_tilde};
pub use newgen::{
    newgen_b, newgen_block_check, newgen_chain, newgen_check, newgen_s2_check, NewGenConfig,
};
pub use yakovlev::yakovlev_check;
