//! Exact stationary states by sparse rational null-space computation.
//!
//! Rows are scaled to integers, eliminated fraction-free with pivoting on
//! sparsity counts, and the unique null vector is recovered by exact
//! back-substitution. The eliminator reports the nullity, so reducible
//! generators fail loudly instead of returning an arbitrary kernel vector.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::SteadyError;
use crate::exact::{Int, Rat};
use crate::model::{assemble_markov, MarkovOperator, ModelSpec};

/// Exact stationary distribution: `M p = 0`, `p >= 0`, `sum p = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct StationaryDistribution {
    l: usize,
    species: usize,
    probs: Vec<Rat>,
}

impl StationaryDistribution {
    pub fn lattice_len(&self) -> usize {
        self.l
    }

    pub fn species(&self) -> usize {
        self.species
    }

    pub fn probs(&self) -> &[Rat] {
        &self.probs
    }

    pub fn prob(&self, index: usize) -> &Rat {
        &self.probs[index]
    }

    /// Build from raw weights (any positive scaling); normalizes exactly.
    pub fn from_weights(
        l: usize,
        species: usize,
        weights: Vec<Rat>,
    ) -> Result<Self, SteadyError> {
        let total: Rat = weights.iter().sum();
        if total.is_zero() {
            return Err(SteadyError::NullSpaceDimension(0));
        }
        let signum = if total.is_negative() { -1 } else { 1 };
        let scale = Rat::from_integer(signum.into()) / total;
        let probs: Vec<Rat> = weights.into_iter().map(|w| w * &scale).collect();
        if probs.iter().any(Rat::is_negative) {
            return Err(SteadyError::MixedSigns);
        }
        Ok(StationaryDistribution { l, species, probs })
    }
}

/// Compute the stationary distribution of a model on `L` sites.
pub fn stationary(spec: &ModelSpec, l: usize) -> Result<StationaryDistribution, SteadyError> {
    let m = assemble_markov(spec, l)?;
    stationary_of(&m)
}

/// Compute the stationary distribution of an assembled generator.
pub fn stationary_of(m: &MarkovOperator) -> Result<StationaryDistribution, SteadyError> {
    let (vector, nullity) = null_vector(m)?;
    if nullity != 1 {
        return Err(SteadyError::NullSpaceDimension(nullity));
    }
    StationaryDistribution::from_weights(m.lattice_len(), m.species(), vector)
}

/// One kernel vector plus the kernel dimension of the generator.
fn null_vector(m: &MarkovOperator) -> Result<(Vec<Rat>, usize), SteadyError> {
    let dim = m.dim();

    // Row-major integer copy: scaling each row by the lcm of its
    // denominators preserves the null space exactly.
    let mut rows: Vec<BTreeMap<usize, Int>> = vec![BTreeMap::new(); dim];
    {
        let mut rational_rows: Vec<Vec<(usize, &Rat)>> = vec![Vec::new(); dim];
        for c in 0..dim {
            for (r, v) in m.column(c) {
                rational_rows[*r].push((c, v));
            }
        }
        for (r, entries) in rational_rows.into_iter().enumerate() {
            let mut lcm = Int::from(1);
            for (_, v) in &entries {
                lcm = lcm.lcm(v.denom());
            }
            for (c, v) in entries {
                let scaled = v.numer() * (&lcm / v.denom());
                if !scaled.is_zero() {
                    rows[r].insert(c, scaled);
                }
            }
        }
    }

    let mut col_counts = vec![0usize; dim];
    for row in &rows {
        for c in row.keys() {
            col_counts[*c] += 1;
        }
    }

    let mut active: Vec<bool> = rows.iter().map(|r| !r.is_empty()).collect();
    // (pivot row, pivot col) in elimination order.
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut col_used = vec![false; dim];

    loop {
        // Markowitz-style pivot choice: cheapest fill estimate
        // (row_nnz - 1) * (col_nnz - 1) among active entries.
        let mut best: Option<(usize, usize, usize)> = None;
        for (r, row) in rows.iter().enumerate() {
            if !active[r] {
                continue;
            }
            let rn = row.len();
            for c in row.keys() {
                if col_used[*c] {
                    continue;
                }
                let score = (rn - 1) * (col_counts[*c].saturating_sub(1));
                if best.map_or(true, |(_, _, s)| score < s) {
                    best = Some((r, *c, score));
                    if score == 0 {
                        break;
                    }
                }
            }
            if matches!(best, Some((_, _, 0))) {
                break;
            }
        }
        let Some((pr, pc, _)) = best else { break };

        let pivot_row = rows[pr].clone();
        let pivot_val = pivot_row[&pc].clone();
        active[pr] = false;
        col_used[pc] = true;
        pivots.push((pr, pc));
        for c in pivot_row.keys() {
            col_counts[*c] -= 1;
        }

        for r in 0..dim {
            if !active[r] {
                continue;
            }
            let Some(entry) = rows[r].get(&pc).cloned() else {
                continue;
            };
            // Fraction-free update: row <- (pivot * row - entry * pivot_row),
            // then strip the content gcd to keep the integers small.
            let g = pivot_val.gcd(&entry);
            let row_mul = &pivot_val / &g;
            let piv_mul = &entry / &g;

            for c in rows[r].keys().cloned().collect::<Vec<_>>() {
                col_counts[c] -= 1;
            }
            let mut updated: BTreeMap<usize, Int> = BTreeMap::new();
            for (c, v) in &rows[r] {
                updated.insert(*c, v * &row_mul);
            }
            for (c, v) in &pivot_row {
                let delta = v * &piv_mul;
                let slot = updated.entry(*c).or_insert_with(Int::zero);
                *slot -= delta;
                if slot.is_zero() {
                    updated.remove(c);
                }
            }
            let mut content = Int::zero();
            for v in updated.values() {
                content = content.gcd(v);
                if content == Int::from(1) {
                    break;
                }
            }
            if content > Int::from(1) {
                for v in updated.values_mut() {
                    *v = &*v / &content;
                }
            }
            for c in updated.keys() {
                col_counts[*c] += 1;
            }
            if updated.is_empty() {
                active[r] = false;
            }
            rows[r] = updated;
        }
    }

    let rank = pivots.len();
    let nullity = dim - rank;
    if nullity != 1 {
        return Ok((vec![Rat::zero(); dim], nullity));
    }

    let free_col = (0..dim).find(|&c| !col_used[c]).expect("one free column");
    let mut x = vec![Rat::zero(); dim];
    x[free_col] = Rat::from_integer(1.into());
    for (pr, pc) in pivots.iter().rev() {
        let row = &rows[*pr];
        let pivot_val = Rat::from_integer(row[pc].clone());
        let mut acc = Rat::zero();
        for (c, v) in row {
            if c != pc {
                acc += Rat::from_integer(v.clone()) * &x[*c];
            }
        }
        x[*pc] = -acc / pivot_val;
    }
    Ok((x, 1))
}

/// Kernel dimension of the generator (diagnostic companion to
/// [`stationary_of`]).
pub fn kernel_dimension(m: &MarkovOperator) -> Result<usize, SteadyError> {
    Ok(null_vector(m)?.1)
}
