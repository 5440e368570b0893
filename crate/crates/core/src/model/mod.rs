//! Process definitions: rates, local jump operators, global generator.

mod config;
mod local;
mod markov;
mod spec;

pub use config::{config_from_index, config_index, config_string, Configuration};
pub use local::{build_local_operators, LocalOperators};
pub use markov::{apply_generator, assemble_markov, MarkovOperator, DEFAULT_DIM_CAP};
pub use spec::{DissepDerived, LeftTable, ModelSpec, RightTable};
