//! Exact stationary distributions and physical observables.

mod closed;
mod nullspace;
mod observables;

pub use closed::{
    catalan, dissep_currents_closed, dissep_density_closed, twotasep_closed_observables,
    twotasep_closed_spec, TwoTasepClosed,
};
pub use nullspace::{kernel_dimension, stationary, stationary_of, StationaryDistribution};
pub use observables::{
    density, dissep_microscopic_currents, observable_report, pair_probability, tasep_current,
    twotasep_microscopic_currents, BondCurrent, ObservableReport, SiteDensity,
    TasepCurrentReport,
};
