//! Closed-form stationary observables, evaluated exactly.
//!
//! These are the model-specific formulas the exact null space is checked
//! against: boundary-oscillation densities and the two currents of the
//! diffusion-dissipation process, and the Catalan-number observables of the
//! two-species process at the special point `alpha = 1/2`, `beta = 1` with
//! the L2-R3 boundary tables.

use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{ExactError, ModelError, SteadyError};
use crate::exact::{pow_i, rat, rat_int, Int, Rat};
use crate::model::{LeftTable, ModelSpec, RightTable};

/// Site density of the diffusion-dissipation process,
/// `1/2 - (c phi^(i-1) + a d phi^(L+i-2) + d phi^(L-i) + b c phi^(2L-i-1))
///  / (2 (1 - a b phi^(2L-2)))`.
pub fn dissep_density_closed(
    spec: &ModelSpec,
    l: usize,
    site: usize,
) -> Result<Rat, SteadyError> {
    if site == 0 || site > l {
        return Err(ModelError::SiteOutOfRange { site, l }.into());
    }
    let p = spec
        .dissep_derived()
        .ok_or(ModelError::UnsupportedModel(spec.name()))?;
    let (l, i) = (l as i64, site as i64);
    let phi = |e: i64| pow_i(&p.phi, e).map_err(ModelError::from);
    let numer = &p.c * phi(i - 1)?
        + &p.a * &p.d * phi(l + i - 2)?
        + &p.d * phi(l - i)?
        + &p.b * &p.c * phi(2 * l - i - 1)?;
    let den = rat_int(2) * (Rat::one() - &p.a * &p.b * phi(2 * l - 2)?);
    if den.is_zero() {
        return Err(
            ModelError::from(ExactError::Degenerate("1 - a b phi^(2L-2) = 0".into())).into(),
        );
    }
    Ok(rat(1, 2) - numer / den)
}

/// Closed-form lattice and evaporation currents on bond `(i, i+1)` of the
/// diffusion-dissipation process.
pub fn dissep_currents_closed(
    spec: &ModelSpec,
    l: usize,
    bond: usize,
) -> Result<(Rat, Rat), SteadyError> {
    if bond == 0 || bond + 1 > l {
        return Err(ModelError::SiteOutOfRange { site: bond, l }.into());
    }
    let (ModelSpec::Dissep { kappa, .. }, Some(p)) = (spec, spec.dissep_derived()) else {
        return Err(SteadyError::Model(ModelError::UnsupportedModel(spec.name())));
    };
    let (l, i) = (l as i64, bond as i64);
    let phi = |e: i64| pow_i(&p.phi, e).map_err(ModelError::from);
    let den = Rat::one() - &p.a * &p.b * phi(2 * l - 2)?;
    if den.is_zero() {
        return Err(
            ModelError::from(ExactError::Degenerate("1 - a b phi^(2L-2) = 0".into())).into(),
        );
    }
    let head = &p.d * phi(l - i - 1)? + &p.b * &p.c * phi(2 * l - i - 2)?;
    let tail = &p.c * phi(i - 1)? + &p.a * &p.d * phi(l + i - 2)?;
    let kp1 = kappa + Rat::one();
    let lattice = (kappa * kappa / &kp1) * (head.clone() - tail.clone()) / &den;
    let evaporation = -(kappa / kp1) * (tail + head) / den;
    Ok((lattice, evaporation))
}

/// Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> Int {
    let n = Int::from(n);
    binomial(2 * n.clone(), n.clone()) / (n + 1)
}

/// Closed-form observables of the two-species process at `alpha = 1/2`,
/// `beta = 1` with the L2-R3 boundary tables.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoTasepClosed {
    pub l: usize,
    /// Partition-function factor `(2L+1) C_L C_{L+1}`.
    pub z_factor: Int,
    /// Current of the black particles, `1 / (2 (2L+1))`.
    pub j1: Rat,
    /// Current of the white particles, `(L+1) / (2 (2L+1))`.
    pub j2: Rat,
    /// Per-site densities of species 1, sites `1..=L`.
    pub density1: Vec<Rat>,
    /// Per-site densities of species 2, sites `1..=L`.
    pub density2: Vec<Rat>,
}

/// Evaluate the Catalan-sum densities and the two currents.
pub fn twotasep_closed_observables(l: usize) -> TwoTasepClosed {
    let c: Vec<Int> = (0..=l + 1).map(catalan).collect();
    let c_l1 = Rat::from_integer(c[l + 1].clone());
    let l_plus_2 = rat_int(l as i64 + 2);
    let mut density1 = Vec::with_capacity(l);
    let mut density2 = Vec::with_capacity(l);
    for k in 1..=l {
        let mut n1 = Rat::zero();
        let mut n2 = Rat::zero();
        for i in k..=l {
            let pair = Rat::from_integer(&c[i] * &c[l - i]);
            n1 += rat_int((l - i + 1) as i64) / &l_plus_2 * &pair;
            n2 += rat_int((i + 1) as i64) / &l_plus_2 * pair;
        }
        density1.push(n1 / &c_l1);
        density2.push(n2 / &c_l1);
    }
    let two_l1 = rat_int(2 * (2 * l as i64 + 1));
    TwoTasepClosed {
        l,
        z_factor: Int::from(2 * l + 1) * &c[l] * &c[l + 1],
        j1: Rat::one() / &two_l1,
        j2: rat_int(l as i64 + 1) / two_l1,
        density1,
        density2,
    }
}

/// The boundary pair the closed forms above apply to.
pub fn twotasep_closed_spec() -> ModelSpec {
    ModelSpec::two_tasep(
        LeftTable::L2,
        RightTable::R3,
        rat(1, 2),
        rat_int(1),
        rat_int(1),
        rat_int(1),
    )
    .expect("valid closed-form spec")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        let want = [1i64, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in want.iter().enumerate() {
            assert_eq!(catalan(n), Int::from(c));
        }
    }

    #[test]
    fn symmetric_rates_give_half() {
        // alpha = gamma and beta = delta make c = d = 0.
        let spec =
            ModelSpec::dissep(rat(1, 3), rat(2, 7), rat(1, 3), rat(2, 7), rat(5, 2)).unwrap();
        for i in 1..=4 {
            assert_eq!(dissep_density_closed(&spec, 4, i).unwrap(), rat(1, 2));
        }
        for i in 1..=3 {
            let (lat, eva) = dissep_currents_closed(&spec, 4, i).unwrap();
            assert!(lat.is_zero());
            assert!(eva.is_zero());
        }
    }

    #[test]
    fn kappa_one_interior_half() {
        // kappa = 1 means phi = 0; every phi power in the interior density
        // vanishes for 1 < i < L.
        let spec =
            ModelSpec::dissep(rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7), rat_int(1)).unwrap();
        for i in 2..=3 {
            assert_eq!(dissep_density_closed(&spec, 4, i).unwrap(), rat(1, 2));
        }
        // Edge sites keep a boundary correction (phi^0 terms survive).
        assert_ne!(dissep_density_closed(&spec, 4, 1).unwrap(), rat(1, 2));
    }

    #[test]
    fn two_tasep_closed_values() {
        let closed = twotasep_closed_observables(3);
        assert_eq!(closed.j1, rat(1, 14));
        assert_eq!(closed.j2, rat(2, 7));
        // Z_2 factor: 5 * C_2 * C_3 = 5 * 2 * 5 = 50.
        assert_eq!(twotasep_closed_observables(2).z_factor, Int::from(50));
        // Densities are probabilities and species sums stay below 1.
        for k in 0..3 {
            let total = &closed.density1[k] + &closed.density2[k];
            assert!(total < rat_int(1) && total > rat_int(0));
        }
    }
}
