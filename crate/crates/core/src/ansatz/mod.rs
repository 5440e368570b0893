//! Matrix-product evaluation: word rewriting for the exclusion algebra,
//! truncated-representation evaluation for the diffusion-dissipation
//! algebra, and the spectral-parameter checks behind both.

mod rep;
mod spectral;
mod tasep;
mod word;

pub use rep::{
    build_truncated_rep, convergence_violations, dissep_evaluate, dissep_evaluate_converged,
    dissep_ma_steady, dissep_ma_steady_auto, dissep_z_series, ma_weights, ConvergedValue,
    TruncatedRep, DEFAULT_SHADOW_TOL, DEFAULT_TRUNCATION_CAP,
};
pub use spectral::{
    check_gz, check_gz_dissep_with, check_gz_tasep_with, check_telescoping_dissep,
    check_telescoping_tasep, check_zf, check_zf_dissep_with, check_zf_tasep_with,
    TelescopingReport,
};
pub use tasep::{
    tasep_evaluate, tasep_evaluate_symbolic, tasep_ma_steady, tasep_reduce, word_for_config,
    z_symbolic, z_word,
};
pub use word::{
    format_word, parse_word, Alphabet, Letter, LinComb, PairRule, ReductionSystem, Strategy,
    LETTER_D, LETTER_E, LETTER_G1, LETTER_G2, LETTER_G3,
};
