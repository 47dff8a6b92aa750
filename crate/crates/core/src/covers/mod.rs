//! Projective covers over a stratified algebra, built stratum by stratum.

mod certificate;
mod engine;

pub use certificate::{CertificateSummary, CoverCertificate};
pub use engine::{
    assemble_p, build_b, check_remark_q, construct_all_covers, extend_to_cover, find_q_epsilon, AssembledP,
    Candidate, ClosedStep, GlueState, Level, QSearch, DEFAULT_BUDGET,
};
