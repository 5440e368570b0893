//! Lattice configurations and their index in the tensor-product ordering.
//!
//! Site 1 is the most significant digit, so for two sites the basis order is
//! `00, 01, 10, 11` (and `00, 01, 02, 10, ...` for three species), matching
//! the vector layout of the probability vector.

use std::fmt;

use crate::error::ModelError;

/// Occupation sequence `tau_1 .. tau_L` with entries `< s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    tau: Vec<u8>,
    species: usize,
}

impl Configuration {
    pub fn new(tau: Vec<u8>, species: usize) -> Result<Self, ModelError> {
        if tau.is_empty() {
            return Err(ModelError::BadDocument("empty configuration".into()));
        }
        if tau.iter().any(|&t| (t as usize) >= species) {
            return Err(ModelError::BadDocument(format!(
                "occupation out of range for {species} species"
            )));
        }
        Ok(Configuration { tau, species })
    }

    pub fn len(&self) -> usize {
        self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau.is_empty()
    }

    pub fn occupations(&self) -> &[u8] {
        &self.tau
    }

    pub fn index(&self) -> usize {
        config_index(&self.tau, self.species)
    }

    pub fn from_index(index: usize, l: usize, species: usize) -> Self {
        Configuration {
            tau: config_from_index(index, l, species),
            species,
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tau {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Index of an occupation sequence with `tau_1` most significant.
pub fn config_index(tau: &[u8], species: usize) -> usize {
    tau.iter().fold(0, |acc, &t| acc * species + t as usize)
}

/// Inverse of [`config_index`].
pub fn config_from_index(mut index: usize, l: usize, species: usize) -> Vec<u8> {
    let mut tau = vec![0u8; l];
    for site in (0..l).rev() {
        tau[site] = (index % species) as u8;
        index /= species;
    }
    tau
}

/// Digit string for a configuration index, e.g. `"01011"`.
pub fn config_string(index: usize, l: usize, species: usize) -> String {
    config_from_index(index, l, species)
        .iter()
        .map(|t| char::from(b'0' + t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_two_species() {
        for idx in 0..32 {
            let tau = config_from_index(idx, 5, 2);
            assert_eq!(config_index(&tau, 2), idx);
        }
        assert_eq!(config_index(&[0, 1, 0, 1, 1], 2), 0b01011);
        assert_eq!(config_string(0b01011, 5, 2), "01011");
    }

    #[test]
    fn round_trip_three_species() {
        for idx in 0..27 {
            let tau = config_from_index(idx, 3, 3);
            assert_eq!(config_index(&tau, 3), idx);
        }
        assert_eq!(config_index(&[2, 1, 0], 3), 2 * 9 + 3);
    }

    #[test]
    fn site_one_is_most_significant() {
        // (1,0) must come after (0,1) in the ordering.
        assert_eq!(config_index(&[0, 1], 2), 1);
        assert_eq!(config_index(&[1, 0], 2), 2);
    }

    #[test]
    fn validation() {
        assert!(Configuration::new(vec![0, 2], 2).is_err());
        assert!(Configuration::new(vec![], 2).is_err());
        let c = Configuration::new(vec![1, 0, 1], 2).unwrap();
        assert_eq!(c.to_string(), "101");
        assert_eq!(c.index(), 5);
    }
}
