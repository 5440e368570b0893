//! Densities and currents measured on an exact stationary distribution.

use num_traits::Zero;
use serde::Serialize;

use super::nullspace::StationaryDistribution;
use crate::error::{ModelError, SteadyError};
use crate::exact::{format_rat, rat_to_f64, Rat};
use crate::model::{config_from_index, ModelSpec};

/// Marginal probability that site `site` (1-based) holds species `species`.
pub fn density(
    p: &StationaryDistribution,
    site: usize,
    species: u8,
) -> Result<Rat, SteadyError> {
    let l = p.lattice_len();
    if site == 0 || site > l {
        return Err(ModelError::SiteOutOfRange { site, l }.into());
    }
    let s = p.species();
    let mut acc = Rat::zero();
    for (idx, prob) in p.probs().iter().enumerate() {
        if prob.is_zero() {
            continue;
        }
        let tau = config_from_index(idx, l, s);
        if tau[site - 1] == species {
            acc += prob;
        }
    }
    Ok(acc)
}

/// Joint probability of the pair `(tau_i, tau_{i+1})` on bond `i` (1-based).
pub fn pair_probability(
    p: &StationaryDistribution,
    bond: usize,
    pair: (u8, u8),
) -> Result<Rat, SteadyError> {
    let l = p.lattice_len();
    if bond == 0 || bond + 1 > l {
        return Err(ModelError::SiteOutOfRange { site: bond, l }.into());
    }
    let s = p.species();
    let mut acc = Rat::zero();
    for (idx, prob) in p.probs().iter().enumerate() {
        if prob.is_zero() {
            continue;
        }
        let tau = config_from_index(idx, l, s);
        if tau[bond - 1] == pair.0 && tau[bond] == pair.1 {
            acc += prob;
        }
    }
    Ok(acc)
}

/// Bond current of the totally asymmetric process, checked site-independent.
#[derive(Debug, Clone, PartialEq)]
pub struct TasepCurrentReport {
    /// The common value `P(tau_i = 1, tau_{i+1} = 0)`.
    pub bond_current: Rat,
    /// Per-bond values (all equal in a stationary state).
    pub per_bond: Vec<Rat>,
    /// Injection flux `alpha * P(tau_1 = 0)`.
    pub left_flux: Rat,
    /// Ejection flux `beta * P(tau_L = 1)`.
    pub right_flux: Rat,
}

impl TasepCurrentReport {
    /// Every bond and both boundary fluxes agree.
    pub fn is_consistent(&self) -> bool {
        self.per_bond.iter().all(|j| *j == self.bond_current)
            && self.left_flux == self.bond_current
            && self.right_flux == self.bond_current
    }
}

/// Stationary current of the totally asymmetric process, plus the boundary
/// flux consistency data.
pub fn tasep_current(
    spec: &ModelSpec,
    p: &StationaryDistribution,
) -> Result<TasepCurrentReport, SteadyError> {
    let ModelSpec::Tasep { alpha, beta } = spec else {
        return Err(ModelError::UnsupportedModel(spec.name()).into());
    };
    let l = p.lattice_len();
    let left_flux = alpha * density(p, 1, 0)?;
    let right_flux = beta * density(p, l, 1)?;
    let per_bond: Vec<Rat> = (1..l)
        .map(|i| pair_probability(p, i, (1, 0)))
        .collect::<Result<_, _>>()?;
    // For L = 1 there is no bond; the boundary flux is the current.
    let bond_current = per_bond.first().cloned().unwrap_or_else(|| left_flux.clone());
    Ok(TasepCurrentReport {
        bond_current,
        per_bond,
        left_flux,
        right_flux,
    })
}

/// Microscopic currents of the diffusion-dissipation process on bond `i`:
/// lattice current `kappa^2 (P(10) - P(01))` and pair-exchange current
/// `P(11) - P(00)`.
pub fn dissep_microscopic_currents(
    spec: &ModelSpec,
    p: &StationaryDistribution,
    bond: usize,
) -> Result<(Rat, Rat), SteadyError> {
    let ModelSpec::Dissep { kappa, .. } = spec else {
        return Err(ModelError::UnsupportedModel(spec.name()).into());
    };
    let lat = (kappa * kappa)
        * (pair_probability(p, bond, (1, 0))? - pair_probability(p, bond, (0, 1))?);
    let eva = pair_probability(p, bond, (1, 1))? - pair_probability(p, bond, (0, 0))?;
    Ok((lat, eva))
}

/// Microscopic species currents of the two-species process on bond `i`:
/// `j_1 = P(10) - P(21)` and `j_2 = P(20) + P(21)`.
pub fn twotasep_microscopic_currents(
    p: &StationaryDistribution,
    bond: usize,
) -> Result<(Rat, Rat), SteadyError> {
    let j1 = pair_probability(p, bond, (1, 0))? - pair_probability(p, bond, (2, 1))?;
    let j2 = pair_probability(p, bond, (2, 0))? + pair_probability(p, bond, (2, 1))?;
    Ok((j1, j2))
}

#[derive(Debug, Clone, Serialize)]
pub struct SiteDensity {
    pub site: usize,
    pub species: u8,
    pub density: String,
    pub density_float: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BondCurrent {
    pub bond: usize,
    pub kind: &'static str,
    pub value: String,
    pub value_float: f64,
}

/// Exact observables of a stationary state, ready for CSV or JSON export.
#[derive(Debug, Clone, Serialize)]
pub struct ObservableReport {
    pub model: String,
    pub l: usize,
    pub densities: Vec<SiteDensity>,
    pub currents: Vec<BondCurrent>,
}

impl ObservableReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("record,site_or_bond,species_or_kind,value,value_float\n");
        for d in &self.densities {
            out.push_str(&format!(
                "density,{},{},{},{:.17e}\n",
                d.site, d.species, d.density, d.density_float
            ));
        }
        for c in &self.currents {
            out.push_str(&format!(
                "current,{},{},{},{:.17e}\n",
                c.bond, c.kind, c.value, c.value_float
            ));
        }
        out
    }
}

/// Collect densities for every site and species, plus the model's currents.
pub fn observable_report(
    spec: &ModelSpec,
    p: &StationaryDistribution,
) -> Result<ObservableReport, SteadyError> {
    let l = p.lattice_len();
    let s = p.species();
    let mut densities = Vec::new();
    for site in 1..=l {
        for species in 0..s as u8 {
            let value = density(p, site, species)?;
            densities.push(SiteDensity {
                site,
                species,
                density: format_rat(&value),
                density_float: rat_to_f64(&value),
            });
        }
    }
    let mut currents = Vec::new();
    let mut push = |bond: usize, kind: &'static str, value: Rat| {
        currents.push(BondCurrent {
            bond,
            kind,
            value: format_rat(&value),
            value_float: rat_to_f64(&value),
        });
    };
    match spec {
        ModelSpec::Tasep { .. } => {
            let report = tasep_current(spec, p)?;
            for (i, j) in report.per_bond.iter().enumerate() {
                push(i + 1, "lattice", j.clone());
            }
            if l == 1 {
                push(1, "lattice", report.bond_current);
            }
        }
        ModelSpec::Dissep { .. } => {
            for bond in 1..l {
                let (lat, eva) = dissep_microscopic_currents(spec, p, bond)?;
                push(bond, "lattice", lat);
                push(bond, "evaporation", eva);
            }
        }
        ModelSpec::TwoTasep { .. } => {
            for bond in 1..l {
                let (j1, j2) = twotasep_microscopic_currents(p, bond)?;
                push(bond, "species1", j1);
                push(bond, "species2", j2);
            }
        }
    }
    Ok(ObservableReport {
        model: spec.name().to_string(),
        l,
        densities,
        currents,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use crate::steady::stationary;

    #[test]
    fn tasep_l2_density_and_current() {
        let spec = ModelSpec::tasep(rat_int(1), rat_int(1)).unwrap();
        let p = stationary(&spec, 2).unwrap();
        // p = (1,1,2,1)/5: site 1 density = p(10) + p(11) = 3/5.
        assert_eq!(density(&p, 1, 1).unwrap(), rat(3, 5));
        assert_eq!(density(&p, 2, 1).unwrap(), rat(2, 5));
        let report = tasep_current(&spec, &p).unwrap();
        assert_eq!(report.bond_current, rat(2, 5));
        assert!(report.is_consistent());
    }

    #[test]
    fn tasep_l1_flux_balance() {
        let spec = ModelSpec::tasep(rat(1, 2), rat(1, 3)).unwrap();
        let p = stationary(&spec, 1).unwrap();
        let report = tasep_current(&spec, &p).unwrap();
        // alpha * beta / (alpha + beta) = (1/2)(1/3)/(5/6) = 1/5.
        assert_eq!(report.bond_current, rat(1, 5));
        assert_eq!(report.left_flux, report.right_flux);
    }

    #[test]
    fn densities_sum_to_one_per_site() {
        let spec = ModelSpec::dissep(rat(1, 2), rat(1, 3), rat(1, 7), rat(2, 5), rat(5, 4))
            .unwrap();
        let p = stationary(&spec, 3).unwrap();
        for site in 1..=3 {
            let total = density(&p, site, 0).unwrap() + density(&p, site, 1).unwrap();
            assert_eq!(total, rat_int(1));
        }
        assert!(density(&p, 4, 0).is_err());
    }

    #[test]
    fn report_exports() {
        let spec = ModelSpec::tasep(rat(1, 2), rat(1, 3)).unwrap();
        let p = stationary(&spec, 2).unwrap();
        let report = observable_report(&spec, &p).unwrap();
        assert_eq!(report.densities.len(), 4);
        assert_eq!(report.currents.len(), 1);
        let csv = report.to_csv();
        assert!(csv.starts_with("record,"));
        assert!(csv.lines().count() == 1 + 4 + 1);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["model"], "tasep");
    }
}
