//! The global Markov generator on the `s^L`-dimensional configuration space.
//!
//! `M = B_1 + sum_l m_{l,l+1} + Bbar_L`, stored sparsely by column: the
//! column of a configuration holds the rates of all transitions out of it
//! plus the balancing diagonal.

use num_traits::Zero;

use super::config::config_index;
use super::local::{build_local_operators, LocalOperators};
use super::spec::ModelSpec;
use crate::error::ModelError;
use crate::exact::{Mat, Rat};

/// Default cap on the state-space dimension (`s^L`).
pub const DEFAULT_DIM_CAP: usize = 20_000;

#[derive(Debug, Clone)]
pub struct MarkovOperator {
    l: usize,
    species: usize,
    dim: usize,
    /// `cols[c]` lists `(row, entry)` pairs sorted by row, diagonal included.
    cols: Vec<Vec<(usize, Rat)>>,
}

impl MarkovOperator {
    pub fn lattice_len(&self) -> usize {
        self.l
    }

    pub fn species(&self) -> usize {
        self.species
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, c: usize) -> &[(usize, Rat)] {
        &self.cols[c]
    }

    /// Matrix-free application `M p`.
    pub fn apply(&self, p: &[Rat]) -> Result<Vec<Rat>, ModelError> {
        if p.len() != self.dim {
            return Err(ModelError::LengthMismatch {
                got: p.len(),
                want: self.dim,
            });
        }
        let mut out = vec![Rat::zero(); self.dim];
        for (c, col) in self.cols.iter().enumerate() {
            if p[c].is_zero() {
                continue;
            }
            for (r, v) in col {
                out[*r] += v * &p[c];
            }
        }
        Ok(out)
    }

    /// Dense copy, for comparisons against transfer-matrix constructions.
    pub fn to_dense(&self) -> Mat<Rat> {
        let mut m = Mat::zeros(self.dim, self.dim);
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    /// Number of stored nonzero entries.
    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }
}

/// Assemble the generator for `L` sites with the default size cap.
pub fn assemble_markov(spec: &ModelSpec, l: usize) -> Result<MarkovOperator, ModelError> {
    assemble_markov_capped(spec, l, DEFAULT_DIM_CAP)
}

/// Assemble the generator for `L` sites, refusing state spaces above `cap`.
pub fn assemble_markov_capped(
    spec: &ModelSpec,
    l: usize,
    cap: usize,
) -> Result<MarkovOperator, ModelError> {
    if l == 0 {
        return Err(ModelError::BadDocument("lattice length must be >= 1".into()));
    }
    let ops = build_local_operators(spec)?;
    let s = ops.species();
    let dim = s
        .checked_pow(l as u32)
        .filter(|&d| d <= cap)
        .ok_or(ModelError::CapacityExceeded {
            dim: s.checked_pow(l as u32).unwrap_or(usize::MAX),
            cap,
        })?;

    let mut cols: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); dim];
    for (source, col) in cols.iter_mut().enumerate() {
        let tau = super::config::config_from_index(source, l, s);
        let mut diag = Rat::zero();
        let push = |row: usize, v: Rat, col: &mut Vec<(usize, Rat)>| {
            if v.is_zero() {
                return;
            }
            match col.binary_search_by_key(&row, |e| e.0) {
                Ok(pos) => col[pos].1 += v,
                Err(pos) => col.insert(pos, (row, v)),
            }
        };

        // Left boundary acting on site 1.
        single_site_transitions(ops.left(), &tau, 0, s, l, &mut diag, &mut |row, v| {
            push(row, v, col)
        });
        // Bulk bonds.
        for site in 0..l.saturating_sub(1) {
            bond_transitions(&ops, &tau, site, s, l, &mut diag, &mut |row, v| {
                push(row, v, col)
            });
        }
        // Right boundary acting on site L.
        single_site_transitions(ops.right(), &tau, l - 1, s, l, &mut diag, &mut |row, v| {
            push(row, v, col)
        });

        push(source, diag, col);
    }

    Ok(MarkovOperator {
        l,
        species: s,
        dim,
        cols,
    })
}

fn single_site_transitions(
    op: &Mat<Rat>,
    tau: &[u8],
    site: usize,
    s: usize,
    _l: usize,
    diag: &mut Rat,
    emit: &mut impl FnMut(usize, Rat),
) {
    let from = tau[site] as usize;
    *diag += op.get(from, from);
    let mut scratch = tau.to_vec();
    for to in 0..s {
        if to == from {
            continue;
        }
        let rate = op.get(to, from);
        if rate.is_zero() {
            continue;
        }
        scratch[site] = to as u8;
        emit(config_index(&scratch, s), rate.clone());
        scratch[site] = from as u8;
    }
}

fn bond_transitions(
    ops: &LocalOperators,
    tau: &[u8],
    site: usize,
    s: usize,
    _l: usize,
    diag: &mut Rat,
    emit: &mut impl FnMut(usize, Rat),
) {
    let from = tau[site] as usize * s + tau[site + 1] as usize;
    let bulk = ops.bulk();
    *diag += bulk.get(from, from);
    let mut scratch = tau.to_vec();
    for to in 0..s * s {
        if to == from {
            continue;
        }
        let rate = bulk.get(to, from);
        if rate.is_zero() {
            continue;
        }
        scratch[site] = (to / s) as u8;
        scratch[site + 1] = (to % s) as u8;
        emit(config_index(&scratch, s), rate.clone());
        scratch[site] = tau[site];
        scratch[site + 1] = tau[site + 1];
    }
}

/// `M p` for a caller-provided probability vector (matrix-free).
pub fn apply_generator(m: &MarkovOperator, p: &[Rat]) -> Result<Vec<Rat>, ModelError> {
    m.apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{embed_pair, embed_single, rat, rat_int};
    use num_traits::Signed;

    fn column_sums_zero(m: &MarkovOperator) {
        for c in 0..m.dim() {
            let mut sum = Rat::zero();
            for (r, v) in m.column(c) {
                if r != &c {
                    assert!(!v.is_negative(), "negative off-diagonal at ({r},{c})");
                }
                sum += v;
            }
            assert!(sum.is_zero(), "column {c} sums to {sum}");
        }
    }

    #[test]
    fn tasep_l1_is_two_state_exchange() {
        let spec = ModelSpec::tasep(rat(1, 2), rat(1, 3)).unwrap();
        let m = assemble_markov(&spec, 1).unwrap().to_dense();
        let expect = Mat::from_rows(vec![
            vec![rat(-1, 2), rat(1, 3)],
            vec![rat(1, 2), rat(-1, 3)],
        ])
        .unwrap();
        assert_eq!(m, expect);
    }

    #[test]
    fn tasep_l2_stationary_vector_annihilates() {
        // Hand balance: for alpha = beta = 1 the stationary vector in the
        // ordering (00, 01, 10, 11) is (1, 1, 2, 1)/5.
        let spec = ModelSpec::tasep(rat_int(1), rat_int(1)).unwrap();
        let m = assemble_markov(&spec, 2).unwrap();
        let p = vec![rat(1, 5), rat(1, 5), rat(2, 5), rat(1, 5)];
        let out = m.apply(&p).unwrap();
        assert!(out.iter().all(Rat::is_zero), "M p = {out:?}");
    }

    #[test]
    fn apply_on_basis_vector() {
        let spec = ModelSpec::tasep(rat(1, 2), rat(1, 3)).unwrap();
        let m = assemble_markov(&spec, 1).unwrap();
        let p = vec![rat_int(1), rat_int(0)];
        assert_eq!(m.apply(&p).unwrap(), vec![rat(-1, 2), rat(1, 2)]);
        assert!(m.apply(&[rat_int(1)]).is_err());
    }

    #[test]
    fn generator_property_all_models() {
        let specs = vec![
            ModelSpec::tasep(rat(2, 3), rat(1, 5)).unwrap(),
            ModelSpec::dissep(rat(1, 2), rat(1, 3), rat(1, 7), rat(2, 5), rat(5, 4)).unwrap(),
            ModelSpec::two_tasep(
                super::super::spec::LeftTable::L2,
                super::super::spec::RightTable::R3,
                rat(1, 2),
                rat_int(1),
                rat_int(1),
                rat_int(1),
            )
            .unwrap(),
        ];
        for spec in specs {
            for l in 1..=3 {
                column_sums_zero(&assemble_markov(&spec, l).unwrap());
            }
        }
    }

    #[test]
    fn matches_dense_tensor_assembly() {
        // Cross-check the sparse assembly against the literal
        // B (x) I^(L-1) + sum I^(l-1) (x) m (x) I^(L-l-1) + I^(L-1) (x) Bbar.
        let spec = ModelSpec::dissep(rat(1, 2), rat(1, 3), rat(1, 7), rat(2, 5), rat(3, 2))
            .unwrap();
        let l = 3;
        let ops = build_local_operators(&spec).unwrap();
        let mut dense = embed_single(ops.left(), 0, l, 2);
        for site in 0..l - 1 {
            dense = dense.add(&embed_pair(ops.bulk(), site, site + 1, l, 2)).unwrap();
        }
        dense = dense.add(&embed_single(ops.right(), l - 1, l, 2)).unwrap();
        assert_eq!(assemble_markov(&spec, l).unwrap().to_dense(), dense);
    }

    #[test]
    fn capacity_cap_respected() {
        let spec = ModelSpec::tasep(rat_int(1), rat_int(1)).unwrap();
        assert!(matches!(
            assemble_markov_capped(&spec, 10, 512),
            Err(ModelError::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn uniform_vector_maps_to_zero_sum() {
        let spec = ModelSpec::dissep(rat(1, 2), rat(1, 3), rat(1, 7), rat(2, 5), rat(3, 2))
            .unwrap();
        let m = assemble_markov(&spec, 3).unwrap();
        let p = vec![rat(1, 8); 8];
        let out = m.apply(&p).unwrap();
        let total: Rat = out.iter().sum();
        assert!(total.is_zero());
    }
}
