//! Exact R/K matrices, Yang-Baxter and reflection checks, and the
//! double-row transfer matrix.

mod checks;
mod matrices;
mod transfer;

pub use checks::{
    check_reflection, check_unitarity_regularity_k, check_unitarity_regularity_r,
    check_yang_baxter, local_from_spectral, run_suite, SuiteReport, Verdict,
    DEFAULT_POINTS_PER_VAR,
};
pub use matrices::{
    dissep_k, dissep_kbar, dissep_r, mirror_r, permutation, spectral_k, spectral_kbar,
    spectral_r, tasep_k, tasep_kbar, tasep_r, Side,
};
pub use transfer::{
    derive_ktilde, markov_from_transfer, transfer_markov_relation, transfer_matrix,
    TransferMarkovRelation,
};
