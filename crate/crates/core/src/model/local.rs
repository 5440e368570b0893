//! Local jump operators: bulk two-site generator and the two boundary
//! one-site generators, in Markov-generator form (columns sum to zero,
//! off-diagonal entries are nonnegative rates out of the column state).

use num_traits::{Signed, Zero};

use super::spec::{LeftTable, ModelSpec, RightTable};
use crate::error::ModelError;
use crate::exact::{rat_int, Mat, Rat};

/// The triple `(B, m, Bbar)` acting on one site, a bond, and the last site.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalOperators {
    species: usize,
    bulk: Mat<Rat>,
    left: Mat<Rat>,
    right: Mat<Rat>,
}

impl LocalOperators {
    pub fn new(
        species: usize,
        bulk: Mat<Rat>,
        left: Mat<Rat>,
        right: Mat<Rat>,
    ) -> Result<Self, ModelError> {
        let ops = LocalOperators {
            species,
            bulk,
            left,
            right,
        };
        ops.validate()?;
        Ok(ops)
    }

    fn validate(&self) -> Result<(), ModelError> {
        let s = self.species;
        for (mat, dim, name) in [
            (&self.left, s, "left boundary"),
            (&self.bulk, s * s, "bulk"),
            (&self.right, s, "right boundary"),
        ] {
            if mat.nrows() != dim || mat.ncols() != dim {
                return Err(ModelError::BadDocument(format!(
                    "{name} operator must be {dim}x{dim}"
                )));
            }
            for col in 0..dim {
                let mut sum = Rat::zero();
                for row in 0..dim {
                    let v = mat.get(row, col);
                    if row != col && v.is_negative() {
                        return Err(ModelError::BadDocument(format!(
                            "{name} operator has negative off-diagonal entry at ({row},{col})"
                        )));
                    }
                    sum += v;
                }
                if !sum.is_zero() {
                    return Err(ModelError::BadDocument(format!(
                        "{name} operator column {col} sums to a nonzero value"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn species(&self) -> usize {
        self.species
    }

    pub fn bulk(&self) -> &Mat<Rat> {
        &self.bulk
    }

    pub fn left(&self) -> &Mat<Rat> {
        &self.left
    }

    pub fn right(&self) -> &Mat<Rat> {
        &self.right
    }
}

/// Generator with the given off-diagonal rates `(target, source, rate)`;
/// diagonal entries balance each column.
fn generator_from_rates(dim: usize, rates: &[(usize, usize, Rat)]) -> Mat<Rat> {
    let mut m: Mat<Rat> = Mat::zeros(dim, dim);
    for (target, source, rate) in rates {
        let upd = m.get(*target, *source).clone() + rate.clone();
        m.set(*target, *source, upd);
    }
    for col in 0..dim {
        let mut out = Rat::zero();
        for row in 0..dim {
            if row != col {
                out += m.get(row, col);
            }
        }
        m.set(col, col, -out);
    }
    m
}

/// Build the exact local operators of a model.
pub fn build_local_operators(spec: &ModelSpec) -> Result<LocalOperators, ModelError> {
    match spec {
        ModelSpec::Tasep { alpha, beta } => {
            let left = generator_from_rates(2, &[(1, 0, alpha.clone())]);
            // Bulk: 10 -> 01 at rate 1 (pair index tau_i * 2 + tau_{i+1}).
            let bulk = generator_from_rates(4, &[(1, 2, rat_int(1))]);
            let right = generator_from_rates(2, &[(0, 1, beta.clone())]);
            LocalOperators::new(2, bulk, left, right)
        }
        ModelSpec::Dissep {
            alpha,
            beta,
            gamma,
            delta,
            kappa,
        } => {
            let left = generator_from_rates(
                2,
                &[(1, 0, alpha.clone()), (0, 1, gamma.clone())],
            );
            let right = generator_from_rates(
                2,
                &[(1, 0, delta.clone()), (0, 1, beta.clone())],
            );
            let hop = kappa * kappa;
            // Symmetric hops at rate kappa^2, pair evaporation 11 -> 00 and
            // condensation 00 -> 11 at rate 1.
            let bulk = generator_from_rates(
                4,
                &[
                    (1, 2, hop.clone()),
                    (2, 1, hop),
                    (0, 3, rat_int(1)),
                    (3, 0, rat_int(1)),
                ],
            );
            LocalOperators::new(2, bulk, left, right)
        }
        ModelSpec::TwoTasep {
            left,
            right,
            alpha,
            beta,
            mu,
            nu,
        } => {
            let one = rat_int(1);
            // Bulk rules at rate 1 each: 10 -> 01, 20 -> 02, 21 -> 12
            // (pair index tau_i * 3 + tau_{i+1}; the exchange 12 -> 21 is
            // forbidden).
            let bulk = generator_from_rates(
                9,
                &[
                    (1, 3, one.clone()),
                    (2, 6, one.clone()),
                    (5, 7, one.clone()),
                ],
            );
            let left_op = match left {
                LeftTable::L1 => generator_from_rates(3, &[(1, 0, mu.clone())]),
                LeftTable::L2 => generator_from_rates(
                    3,
                    &[
                        (1, 0, &one - alpha),
                        (2, 0, alpha.clone()),
                        (2, 1, alpha.clone()),
                    ],
                ),
                LeftTable::L3 => generator_from_rates(
                    3,
                    &[(2, 0, alpha.clone()), (2, 1, alpha.clone())],
                ),
                LeftTable::L4 => generator_from_rates(3, &[(2, 0, alpha.clone())]),
            };
            let right_op = match right {
                RightTable::R1 => generator_from_rates(3, &[(1, 2, nu.clone())]),
                RightTable::R2 => generator_from_rates(
                    3,
                    &[
                        (0, 1, beta.clone()),
                        (0, 2, beta.clone()),
                        (1, 2, &one - beta),
                    ],
                ),
                RightTable::R3 => generator_from_rates(
                    3,
                    &[(0, 1, beta.clone()), (0, 2, beta.clone())],
                ),
                RightTable::R4 => generator_from_rates(3, &[(0, 2, beta.clone())]),
            };
            LocalOperators::new(3, bulk, left_op, right_op)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn m(rows: &[&[Rat]]) -> Mat<Rat> {
        Mat::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn tasep_matches_displayed_matrices() {
        let spec = ModelSpec::tasep(rat(1, 2), rat(1, 3)).unwrap();
        let ops = build_local_operators(&spec).unwrap();
        let a = rat(1, 2);
        let b = rat(1, 3);
        let z = rat_int(0);
        assert_eq!(
            *ops.left(),
            m(&[&[-a.clone(), z.clone()], &[a, z.clone()]])
        );
        assert_eq!(
            *ops.right(),
            m(&[&[z.clone(), b.clone()], &[z.clone(), -b]])
        );
        let one = rat_int(1);
        assert_eq!(
            *ops.bulk(),
            m(&[
                &[z.clone(), z.clone(), z.clone(), z.clone()],
                &[z.clone(), z.clone(), one.clone(), z.clone()],
                &[z.clone(), z.clone(), -one, z.clone()],
                &[z.clone(), z.clone(), z.clone(), z.clone()],
            ])
        );
    }

    #[test]
    fn dissep_bulk_diagonal() {
        let spec =
            ModelSpec::dissep(rat_int(1), rat_int(1), rat_int(1), rat_int(1), rat_int(2))
                .unwrap();
        let ops = build_local_operators(&spec).unwrap();
        let diag: Vec<Rat> = (0..4).map(|i| ops.bulk().get(i, i).clone()).collect();
        assert_eq!(diag, vec![rat_int(-1), rat_int(-4), rat_int(-4), rat_int(-1)]);
        // Anti-diagonal condensation/evaporation entries are 1.
        assert_eq!(*ops.bulk().get(0, 3), rat_int(1));
        assert_eq!(*ops.bulk().get(3, 0), rat_int(1));
    }

    #[test]
    fn two_tasep_left_l2_columns() {
        let spec = ModelSpec::two_tasep(
            LeftTable::L2,
            RightTable::R3,
            rat(1, 4),
            rat_int(1),
            rat_int(1),
            rat_int(1),
        )
        .unwrap();
        let ops = build_local_operators(&spec).unwrap();
        let b = ops.left();
        // state 0: out 1-alpha to 1, alpha to 2, diagonal -1
        assert_eq!(*b.get(0, 0), rat_int(-1));
        assert_eq!(*b.get(1, 0), rat(3, 4));
        assert_eq!(*b.get(2, 0), rat(1, 4));
        // state 1: alpha to 2, diagonal -alpha
        assert_eq!(*b.get(1, 1), rat(-1, 4));
        assert_eq!(*b.get(2, 1), rat(1, 4));
        // state 2: absorbing at this boundary
        for row in 0..3 {
            assert_eq!(*b.get(row, 2), rat_int(0));
        }
    }

    #[test]
    fn two_tasep_bulk_rules() {
        let spec = ModelSpec::two_tasep(
            LeftTable::L2,
            RightTable::R3,
            rat(1, 2),
            rat_int(1),
            rat_int(1),
            rat_int(1),
        )
        .unwrap();
        let ops = build_local_operators(&spec).unwrap();
        let bulk = ops.bulk();
        // 10 -> 01, 20 -> 02, 21 -> 12 allowed; 12 -> 21 forbidden.
        assert_eq!(*bulk.get(1, 3), rat_int(1));
        assert_eq!(*bulk.get(2, 6), rat_int(1));
        assert_eq!(*bulk.get(5, 7), rat_int(1));
        assert_eq!(*bulk.get(7, 5), rat_int(0));
    }
}
