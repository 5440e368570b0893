//! Representation-free evaluation of the exclusion algebra.
//!
//! Boundary relations are eigenvalue relations (`<<W| E = <<W| / alpha`,
//! `D |V>> = |V>> / beta`), so every word evaluates by rewriting to the
//! `E^a D^b` normal form and replacing the monomials. Evaluation is exact,
//! and symbolically the result is a Laurent polynomial in `1/alpha`,
//! `1/beta`.

use num_traits::Zero;

use crate::error::{AnsatzError, SteadyError};
use crate::exact::{pow_i, FromRat, Laurent2, Rat, Ring};
use crate::model::config_from_index;
use crate::steady::StationaryDistribution;

use super::word::{LinComb, Letter, ReductionSystem, LETTER_D, LETTER_E};

/// Word of a configuration: `E` for a hole, `D` for a particle.
pub fn word_for_config(tau: &[u8]) -> Vec<Letter> {
    tau.iter()
        .map(|&t| if t == 0 { LETTER_E } else { LETTER_D })
        .collect()
}

/// Reduce to the `E^a D^b` normal form.
pub fn tasep_reduce<C: Ring + FromRat>(lc: &LinComb<C>) -> LinComb<C> {
    ReductionSystem::tasep().reduce(lc)
}

fn split_normal_monomial(word: &[Letter]) -> (i64, i64) {
    let a = word.iter().take_while(|&&l| l == LETTER_E).count();
    debug_assert!(
        word[a..].iter().all(|&l| l == LETTER_D),
        "word not in E^a D^b normal form"
    );
    (a as i64, (word.len() - a) as i64)
}

/// Exact value of `<<W| w |V>>` as a multiple of `<<W|V>>`.
pub fn tasep_evaluate(
    word: &[Letter],
    alpha: &Rat,
    beta: &Rat,
) -> Result<Rat, AnsatzError> {
    let reduced = tasep_reduce(&LinComb::monomial(word.to_vec(), Rat::from_integer(1.into())));
    let mut acc = Rat::zero();
    for (w, coeff) in reduced.terms() {
        let (a, b) = split_normal_monomial(w);
        acc += coeff * pow_i(alpha, -a)? * pow_i(beta, -b)?;
    }
    Ok(acc)
}

/// Symbolic value of `<<W| w |V>>` as a Laurent polynomial in
/// `(alpha, beta)` (exponents are never positive).
pub fn tasep_evaluate_symbolic(word: &[Letter]) -> Laurent2 {
    let reduced = tasep_reduce(&LinComb::monomial(word.to_vec(), Rat::from_integer(1.into())));
    let mut acc = Laurent2::zero();
    for (w, coeff) in reduced.terms() {
        let (a, b) = split_normal_monomial(w);
        acc = acc + Laurent2::monomial(coeff.clone(), -a, -b);
    }
    acc
}

/// The normalization word `(D + E)^L` as a linear combination.
pub fn z_word(l: usize) -> LinComb<Rat> {
    let mut site = LinComb::zero();
    site.add_term(vec![LETTER_E], Rat::from_integer(1.into()));
    site.add_term(vec![LETTER_D], Rat::from_integer(1.into()));
    let mut acc = LinComb::one();
    for _ in 0..l {
        acc = acc.concat(&site);
    }
    acc
}

/// Symbolic partition function `Z_L = <<W| (D+E)^L |V>>` in `(alpha, beta)`.
pub fn z_symbolic(l: usize) -> Laurent2 {
    let reduced = tasep_reduce(&z_word(l));
    let mut acc = Laurent2::zero();
    for (w, coeff) in reduced.terms() {
        let (a, b) = split_normal_monomial(w);
        acc = acc + Laurent2::monomial(coeff.clone(), -a, -b);
    }
    acc
}

/// Matrix-product stationary state: per-configuration weights
/// `<<W| w(C) |V>>`, normalized exactly.
pub fn tasep_ma_steady(
    alpha: &Rat,
    beta: &Rat,
    l: usize,
) -> Result<StationaryDistribution, AnsatzError> {
    let dim = 1usize << l;
    let mut weights = Vec::with_capacity(dim);
    for idx in 0..dim {
        let tau = config_from_index(idx, l, 2);
        weights.push(tasep_evaluate(&word_for_config(&tau), alpha, beta)?);
    }
    StationaryDistribution::from_weights(l, 2, weights).map_err(|e| match e {
        SteadyError::Model(m) => AnsatzError::Model(m),
        other => AnsatzError::Model(crate::error::ModelError::BadDocument(other.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use crate::model::ModelSpec;
    use crate::steady::stationary;

    #[test]
    fn worked_example_ededd() {
        // <<W| E D E D D |V>> = (alpha + beta) / (alpha^2 beta^3)
        let w = word_for_config(&[0, 1, 0, 1, 1]);
        let alpha = rat(1, 2);
        let beta = rat(1, 3);
        let want = (&alpha + &beta) / (&alpha * &alpha * &beta * &beta * &beta);
        assert_eq!(tasep_evaluate(&w, &alpha, &beta).unwrap(), want);
        // at alpha = beta = 1 the weight is 2
        assert_eq!(
            tasep_evaluate(&w, &rat_int(1), &rat_int(1)).unwrap(),
            rat_int(2)
        );
        // symbolically: alpha^-1 beta^-3 + alpha^-2 beta^-2
        let sym = tasep_evaluate_symbolic(&w);
        assert_eq!(sym.coeff(-1, -3), rat_int(1));
        assert_eq!(sym.coeff(-2, -2), rat_int(1));
        assert_eq!(sym.terms().count(), 2);
    }

    #[test]
    fn empty_word_is_unit() {
        assert_eq!(
            tasep_evaluate(&[], &rat(1, 2), &rat(1, 3)).unwrap(),
            rat_int(1)
        );
    }

    #[test]
    fn normal_word_evaluates_directly() {
        // E^2 D -> 1/(alpha^2 beta)
        let w = vec![LETTER_E, LETTER_E, LETTER_D];
        assert_eq!(
            tasep_evaluate(&w, &rat(1, 2), &rat(1, 3)).unwrap(),
            rat_int(12)
        );
    }

    #[test]
    fn ma_steady_equals_null_space_small() {
        for (a, b) in [((1i64, 1i64), (1i64, 1i64)), ((1, 2), (1, 3)), ((3, 4), (2, 5))] {
            let alpha = rat(a.0, a.1);
            let beta = rat(b.0, b.1);
            let spec = ModelSpec::tasep(alpha.clone(), beta.clone()).unwrap();
            for l in 1..=4 {
                let ma = tasep_ma_steady(&alpha, &beta, l).unwrap();
                let ns = stationary(&spec, l).unwrap();
                assert_eq!(ma.probs(), ns.probs(), "alpha={alpha} beta={beta} L={l}");
            }
        }
    }

    #[test]
    fn l1_closed_form() {
        let ma = tasep_ma_steady(&rat(1, 2), &rat(1, 3), 1).unwrap();
        // (beta, alpha)/(alpha+beta)
        assert_eq!(ma.probs(), &[rat(2, 5), rat(3, 5)]);
    }
}
