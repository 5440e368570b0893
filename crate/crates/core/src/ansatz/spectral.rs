//! Spectral-parameter checks tying the R/K matrices to the word algebras.
//!
//! The exchange relation `R12(x/y) A1(x) A2(y) = A2(y) A1(x)` is expanded
//! entrywise into words with two-variable Laurent coefficients (after
//! clearing the R-matrix denominators), reduced to normal form, and required
//! to cancel identically. The boundary relations
//! `<<W| A(x) = <<W| K(x) A(1/x)` and `A(x) |V>> = Kbar(x) A(1/x) |V>>`
//! are checked symbolically for the exclusion process (where the boundary
//! relations are eigenvalue substitutions) and on the truncated
//! representation for the diffusion-dissipation process.

use num_traits::{One, Zero};

use crate::error::{AnsatzError, ModelError};
use crate::exact::{pow_i, rat_int, rat_to_f64, ratio_subst, FromRat, Laurent2, Mat, Rat, RatFunc, Ring};
use crate::integrability::{spectral_k, spectral_kbar, spectral_r, tasep_k, tasep_kbar};
use crate::model::{assemble_markov, build_local_operators, ModelSpec};

use super::rep::{build_truncated_rep, ma_weights, TruncatedRep};
use super::tasep::tasep_ma_steady;
use super::word::{
    LinComb, ReductionSystem, LETTER_D, LETTER_E, LETTER_G1, LETTER_G2, LETTER_G3,
};

/// Which spectral variable a component carries in two-variable expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Var {
    X,
    Y,
}

fn var_pow(var: Var, k: i64) -> Laurent2 {
    match var {
        Var::X => Laurent2::monomial(Rat::one(), k, 0),
        Var::Y => Laurent2::monomial(Rat::one(), 0, k),
    }
}

/// Components of the exclusion spectral vector `A(x) = (E-1+x, D-1+1/x)`.
fn tasep_components(var: Var) -> Vec<LinComb<Laurent2>> {
    let mut e = LinComb::monomial(vec![LETTER_E], Laurent2::one());
    e.add_term(Vec::new(), var_pow(var, 1) - Laurent2::one());
    let mut d = LinComb::monomial(vec![LETTER_D], Laurent2::one());
    d.add_term(Vec::new(), var_pow(var, -1) - Laurent2::one());
    vec![e, d]
}

/// Components of the diffusion-dissipation spectral vector
/// `A(x) = (G1 x + G2 + G3/x, -G1 x + G2 - G3/x)`.
fn dissep_components(var: Var) -> Vec<LinComb<Laurent2>> {
    let mut plus = LinComb::monomial(vec![LETTER_G1], var_pow(var, 1));
    plus.add_term(vec![LETTER_G2], Laurent2::one());
    plus.add_term(vec![LETTER_G3], var_pow(var, -1));
    let mut minus = LinComb::monomial(vec![LETTER_G1], -var_pow(var, 1));
    minus.add_term(vec![LETTER_G2], Laurent2::one());
    minus.add_term(vec![LETTER_G3], -var_pow(var, -1));
    vec![plus, minus]
}

/// Expand `R12(x/y) A1(x) A2(y) - A2(y) A1(x)` (cleared of denominators),
/// reduce every tensor component with the rewriting system, and report
/// which components cancel.
fn zf_components(
    r: &Mat<RatFunc>,
    comps: &dyn Fn(Var) -> Vec<LinComb<Laurent2>>,
    sys: &ReductionSystem,
) -> Vec<bool> {
    let s = comps(Var::X).len();
    assert_eq!(r.nrows(), s * s, "R-matrix size matches the spectral vector");

    // Substitute the ratio x/y and clear denominators with one common
    // multiplier built from the distinct denominator polynomials.
    let pairs: Vec<Vec<(Laurent2, Laurent2)>> = (0..s * s)
        .map(|i| (0..s * s).map(|j| ratio_subst(r.get(i, j))).collect())
        .collect();
    let mut dens: Vec<Laurent2> = Vec::new();
    for row in &pairs {
        for (_, den) in row {
            if !dens.contains(den) {
                dens.push(den.clone());
            }
        }
    }
    let common = dens
        .iter()
        .fold(Laurent2::one(), |acc, d| acc * d.clone());

    let ax = comps(Var::X);
    let ay = comps(Var::Y);
    let mut results = Vec::with_capacity(s * s);
    for i in 0..s {
        for j in 0..s {
            let row = i * s + j;
            let mut lhs: LinComb<Laurent2> = LinComb::zero();
            for k in 0..s {
                for l in 0..s {
                    let (num, den) = &pairs[row][k * s + l];
                    if num.is_zero() {
                        continue;
                    }
                    let mult = dens
                        .iter()
                        .filter(|d| *d != den)
                        .fold(num.clone(), |acc, d| acc * d.clone());
                    lhs = lhs.add(&ax[k].concat(&ay[l]).scale(&mult));
                }
            }
            let rhs = ay[j].concat(&ax[i]).scale(&common);
            results.push(sys.reduce(&lhs.sub(&rhs)).is_zero());
        }
    }
    results
}

/// Exchange-relation check for the exclusion process with an explicit
/// rewriting system (mutation tests pass broken systems).
pub fn check_zf_tasep_with(sys: &ReductionSystem) -> bool {
    zf_components(&crate::integrability::tasep_r(), &tasep_components, sys)
        .iter()
        .all(|&b| b)
}

/// Exchange-relation check for the diffusion-dissipation process at the
/// spec's `phi`, with an explicit rewriting system.
pub fn check_zf_dissep_with(
    spec: &ModelSpec,
    sys: &ReductionSystem,
) -> Result<bool, ModelError> {
    let r = spectral_r(spec)?;
    Ok(zf_components(&r, &dissep_components, sys).iter().all(|&b| b))
}

/// Exchange-relation verdict for a model with its canonical rewriting
/// system.
pub fn check_zf(spec: &ModelSpec) -> Result<bool, ModelError> {
    match spec {
        ModelSpec::Tasep { .. } => Ok(check_zf_tasep_with(&ReductionSystem::tasep())),
        ModelSpec::Dissep { .. } => {
            let phi = spec.dissep_derived().expect("dissep").phi;
            check_zf_dissep_with(spec, &ReductionSystem::dissep(&phi))
        }
        ModelSpec::TwoTasep { .. } => Err(ModelError::UnsupportedModel(spec.name())),
    }
}

/// `A(x)` components over rational functions, optionally at argument `1/x`.
fn tasep_components_ratfunc(inverse: bool) -> Vec<LinComb<RatFunc>> {
    let x = if inverse {
        RatFunc::x().subst_x_pow(-1)
    } else {
        RatFunc::x()
    };
    let x_inv = if inverse {
        RatFunc::x()
    } else {
        RatFunc::x().subst_x_pow(-1)
    };
    let one = RatFunc::one();
    let mut e = LinComb::monomial(vec![LETTER_E], one.clone());
    e.add_term(Vec::new(), x - one.clone());
    let mut d = LinComb::monomial(vec![LETTER_D], one.clone());
    d.add_term(Vec::new(), x_inv - one);
    vec![e, d]
}

/// Substitute the left-boundary eigenvalue relation `<<W| E = <<W|/alpha`
/// into a normal-form combination.
fn boundary_left<C: Ring + FromRat>(
    lc: &LinComb<C>,
    alpha: &Rat,
) -> Result<LinComb<C>, AnsatzError> {
    let mut out = LinComb::zero();
    for (word, coeff) in lc.terms() {
        let a = word.iter().take_while(|&&l| l == LETTER_E).count();
        let rest: Vec<u8> = word[a..].to_vec();
        debug_assert!(rest.iter().all(|&l| l == LETTER_D));
        let factor = pow_i(alpha, -(a as i64))?;
        out.add_term(rest, coeff.clone() * C::from_rat(&factor));
    }
    Ok(out)
}

/// Substitute the right-boundary eigenvalue relation `D |V>> = |V>>/beta`.
fn boundary_right<C: Ring + FromRat>(
    lc: &LinComb<C>,
    beta: &Rat,
) -> Result<LinComb<C>, AnsatzError> {
    let mut out = LinComb::zero();
    for (word, coeff) in lc.terms() {
        let a = word.iter().take_while(|&&l| l == LETTER_E).count();
        let b = word.len() - a;
        debug_assert!(word[a..].iter().all(|&l| l == LETTER_D));
        let factor = pow_i(beta, -(b as i64))?;
        out.add_term(word[..a].to_vec(), coeff.clone() * C::from_rat(&factor));
    }
    Ok(out)
}

/// Boundary-relation check for the exclusion process with explicit K
/// matrices (mutation tests pass perturbed ones). Returns
/// `(left_pass, right_pass)`.
pub fn check_gz_tasep_with(
    k: &Mat<RatFunc>,
    kbar: &Mat<RatFunc>,
    alpha: &Rat,
    beta: &Rat,
) -> Result<(bool, bool), AnsatzError> {
    let sys = ReductionSystem::tasep();
    let direct = tasep_components_ratfunc(false);
    let inverted = tasep_components_ratfunc(true);

    let mut left = true;
    let mut right = true;
    for i in 0..2 {
        // <<W| [ A_i(x) - sum_j K_ij(x) A_j(1/x) ] = 0
        let mut diff = direct[i].clone();
        for j in 0..2 {
            diff = diff.sub(&inverted[j].scale(k.get(i, j)));
        }
        let reduced = sys.reduce(&diff);
        if !boundary_left(&reduced, alpha)?.is_zero() {
            left = false;
        }
        // [ A_i(x) - sum_j Kbar_ij(x) A_j(1/x) ] |V>> = 0
        let mut diff = direct[i].clone();
        for j in 0..2 {
            diff = diff.sub(&inverted[j].scale(kbar.get(i, j)));
        }
        let reduced = sys.reduce(&diff);
        if !boundary_right(&reduced, beta)?.is_zero() {
            right = false;
        }
    }
    Ok((left, right))
}

/// Boundary-relation check for the diffusion-dissipation process on the
/// truncated representation: the residual of
/// `A(x) - K(x) A(1/x)` applied to `<<W|` (and of the barred relation on
/// `|V>>`) must vanish on the truncation-safe block, at every sampled `x`.
pub fn check_gz_dissep_with(
    spec: &ModelSpec,
    k: &Mat<RatFunc>,
    kbar: &Mat<RatFunc>,
    rep: &TruncatedRep,
    samples: &[Rat],
) -> Result<(bool, bool), AnsatzError> {
    let n = rep.truncation();
    let mut left = true;
    let mut right = true;
    let _ = spec;
    for x in samples {
        let x_inv = x.recip();
        // A(x) coefficient triple per component, order (G1, G2, G3).
        let coeffs = |arg: &Rat| -> [[Rat; 3]; 2] {
            [
                [arg.clone(), Rat::one(), arg.recip()],
                [-arg.clone(), Rat::one(), -arg.recip()],
            ]
        };
        let a_x = coeffs(x);
        let a_inv = coeffs(&x_inv);
        for i in 0..2 {
            // Left relation on <<W|.
            let mut row = rep.apply_left_combo(&a_x[i], rep.w_vector());
            for j in 0..2 {
                let kij = k.get(i, j).eval(x).map_err(ModelError::from)?;
                if kij.is_zero() {
                    continue;
                }
                let term = rep.apply_left_combo(&a_inv[j], rep.w_vector());
                for (r, t) in row.iter_mut().zip(term) {
                    *r -= &kij * t;
                }
            }
            for ni in 0..n - 1 {
                for mi in 0..n {
                    if !row[ni * n + mi].is_zero() {
                        left = false;
                    }
                }
            }
            // Right relation on |V>>.
            let mut col = rep.apply_right_combo(&a_x[i], rep.v_vector());
            for j in 0..2 {
                let kij = kbar.get(i, j).eval(x).map_err(ModelError::from)?;
                if kij.is_zero() {
                    continue;
                }
                let term = rep.apply_right_combo(&a_inv[j], rep.v_vector());
                for (r, t) in col.iter_mut().zip(term) {
                    *r -= &kij * t;
                }
            }
            for ni in 0..n {
                for mi in 0..n - 1 {
                    if !col[ni * n + mi].is_zero() {
                        right = false;
                    }
                }
            }
        }
    }
    Ok((left, right))
}

/// Boundary-relation verdicts `(left, right)` for a model with its
/// canonical spectral matrices.
pub fn check_gz(spec: &ModelSpec) -> Result<(bool, bool), AnsatzError> {
    match spec {
        ModelSpec::Tasep { alpha, beta } => {
            check_gz_tasep_with(&tasep_k(alpha), &tasep_kbar(beta), alpha, beta)
        }
        ModelSpec::Dissep { .. } => {
            let rep = build_truncated_rep(spec, 10)?;
            let k = spectral_k(spec)?;
            let kbar = spectral_kbar(spec)?;
            let samples = [rat_int(2), rat_int(3), crate::exact::rat(1, 2), rat_int(5)];
            check_gz_dissep_with(spec, &k, &kbar, &rep, &samples)
        }
        ModelSpec::TwoTasep { .. } => {
            Err(AnsatzError::Model(ModelError::UnsupportedModel(spec.name())))
        }
    }
}

/// Outcome of the telescoping verification.
#[derive(Debug, Clone, PartialEq)]
pub struct TelescopingReport {
    /// Bulk identity `m (A (x) A) = const (Abar (x) A - A (x) Abar)`.
    pub bulk: bool,
    /// Left boundary identity on `<<W|`.
    pub left: bool,
    /// Right boundary identity on `|V>>`.
    pub right: bool,
    /// Largest residual component of `M p_MA` (exact zero for the
    /// exclusion process; float shadow of the truncated value otherwise).
    pub steady_residual: f64,
}

impl TelescopingReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.bulk && self.left && self.right && self.steady_residual <= tol
    }
}

/// Telescoping check for the exclusion process: fully symbolic bulk and
/// boundary identities, then `M p_MA = 0` exactly.
pub fn check_telescoping_tasep(
    alpha: &Rat,
    beta: &Rat,
    l: usize,
) -> Result<TelescopingReport, AnsatzError> {
    let spec = ModelSpec::tasep(alpha.clone(), beta.clone())?;
    let ops = build_local_operators(&spec)?;
    let sys = ReductionSystem::tasep();

    let a: Vec<LinComb<Rat>> = vec![
        LinComb::monomial(vec![LETTER_E], Rat::one()),
        LinComb::monomial(vec![LETTER_D], Rat::one()),
    ];
    let abar: Vec<Rat> = vec![Rat::one(), -Rat::one()];

    // m (A (x) A) = Abar (x) A - A (x) Abar, componentwise.
    let mut bulk = true;
    for i in 0..2 {
        for j in 0..2 {
            let row = i * 2 + j;
            let mut lhs: LinComb<Rat> = LinComb::zero();
            for k in 0..2 {
                for lcol in 0..2 {
                    let c = ops.bulk().get(row, k * 2 + lcol);
                    if c.is_zero() {
                        continue;
                    }
                    lhs = lhs.add(&a[k].concat(&a[lcol]).scale(c));
                }
            }
            let rhs = a[j].scale(&abar[i]).sub(&a[i].scale(&abar[j]));
            if !sys.reduce(&lhs.sub(&rhs)).is_zero() {
                bulk = false;
            }
        }
    }

    // <<W| B A = -<<W| Abar and Bbar A |V>> = Abar |V>>.
    let mut left = true;
    let mut right = true;
    for i in 0..2 {
        let mut lhs: LinComb<Rat> = LinComb::zero();
        for j in 0..2 {
            let c = ops.left().get(i, j);
            if !c.is_zero() {
                lhs = lhs.add(&a[j].scale(c));
            }
        }
        let lhs = boundary_left(&sys.reduce(&lhs), alpha)?;
        let rhs = LinComb::monomial(Vec::new(), -abar[i].clone());
        if !lhs.sub(&rhs).is_zero() {
            left = false;
        }

        let mut lhs: LinComb<Rat> = LinComb::zero();
        for j in 0..2 {
            let c = ops.right().get(i, j);
            if !c.is_zero() {
                lhs = lhs.add(&a[j].scale(c));
            }
        }
        let lhs = boundary_right(&sys.reduce(&lhs), beta)?;
        let rhs = LinComb::monomial(Vec::new(), abar[i].clone());
        if !lhs.sub(&rhs).is_zero() {
            right = false;
        }
    }

    // M p_MA = 0, exactly.
    let p = tasep_ma_steady(alpha, beta, l)?;
    let m = assemble_markov(&spec, l)?;
    let residual = m.apply(p.probs())?;
    let steady_residual = residual
        .iter()
        .map(|v| rat_to_f64(v).abs())
        .fold(0.0, f64::max);
    let exact_zero = residual.iter().all(Rat::is_zero);
    Ok(TelescopingReport {
        bulk,
        left,
        right,
        steady_residual: if exact_zero { 0.0 } else { steady_residual },
    })
}

/// Telescoping check for the diffusion-dissipation process on the truncated
/// representation. The bulk identity
/// `m (A (x) A) = -2 kappa (Abar (x) A - A (x) Abar)` with
/// `Abar = (G1 - G3)(1, -1)` holds exactly in the truncation (it is a
/// combination of the exchange relations); the boundary identities hold on
/// the truncation-safe blocks; `M p_MA` vanishes up to the series tail.
pub fn check_telescoping_dissep(
    spec: &ModelSpec,
    l: usize,
    n: usize,
) -> Result<TelescopingReport, AnsatzError> {
    let ModelSpec::Dissep { kappa, .. } = spec else {
        return Err(AnsatzError::Model(ModelError::UnsupportedModel(spec.name())));
    };
    let rep = build_truncated_rep(spec, n)?;
    let ops = build_local_operators(spec)?;
    let one = Rat::one();
    // Component coefficient triples over (G1, G2, G3).
    let a: [[Rat; 3]; 2] = [
        [one.clone(), one.clone(), one.clone()],
        [-one.clone(), one.clone(), -one.clone()],
    ];
    let abar: [[Rat; 3]; 2] = [
        [one.clone(), Rat::zero(), -one.clone()],
        [-one.clone(), Rat::zero(), one.clone()],
    ];
    let minus_two_kappa = -rat_int(2) * kappa;

    let dim = n * n;
    let mut bulk = true;
    'outer: for col in 0..dim {
        let mut basis = vec![Rat::zero(); dim];
        basis[col] = Rat::one();
        for i in 0..2 {
            for j in 0..2 {
                let row = i * 2 + j;
                let mut lhs = vec![Rat::zero(); dim];
                for k in 0..2 {
                    for lcol in 0..2 {
                        let c = ops.bulk().get(row, k * 2 + lcol);
                        if c.is_zero() {
                            continue;
                        }
                        let inner = rep.apply_right_combo(&a[lcol], &basis);
                        let outer = rep.apply_right_combo(&a[k], &inner);
                        for (acc, v) in lhs.iter_mut().zip(outer) {
                            *acc += c * v;
                        }
                    }
                }
                let t1 = rep.apply_right_combo(&a[j], &basis);
                let t1 = rep.apply_right_combo(&abar[i], &t1);
                let t2 = rep.apply_right_combo(&abar[j], &basis);
                let t2 = rep.apply_right_combo(&a[i], &t2);
                let rhs: Vec<Rat> = t1
                    .into_iter()
                    .zip(t2)
                    .map(|(p, q)| (p - q) * &minus_two_kappa)
                    .collect();
                if lhs != rhs {
                    bulk = false;
                    break 'outer;
                }
            }
        }
    }

    // <<W| B A = 2 kappa <<W| Abar on rows n <= N-2.
    let two_kappa = rat_int(2) * kappa;
    let mut left = true;
    for i in 0..2 {
        let mut lhs = vec![Rat::zero(); dim];
        for j in 0..2 {
            let c = ops.left().get(i, j);
            if c.is_zero() {
                continue;
            }
            let term = rep.apply_left_combo(&a[j], rep.w_vector());
            for (acc, v) in lhs.iter_mut().zip(term) {
                *acc += c * v;
            }
        }
        let rhs = rep.apply_left_combo(&abar[i], rep.w_vector());
        for ni in 0..n - 1 {
            for mi in 0..n {
                let idx = ni * n + mi;
                if lhs[idx] != &two_kappa * &rhs[idx] {
                    left = false;
                }
            }
        }
    }

    // Bbar A |V>> = -2 kappa Abar |V>> on components m <= N-2.
    let mut right = true;
    for i in 0..2 {
        let mut lhs = vec![Rat::zero(); dim];
        for j in 0..2 {
            let c = ops.right().get(i, j);
            if c.is_zero() {
                continue;
            }
            let term = rep.apply_right_combo(&a[j], rep.v_vector());
            for (acc, v) in lhs.iter_mut().zip(term) {
                *acc += c * v;
            }
        }
        let rhs = rep.apply_right_combo(&abar[i], rep.v_vector());
        for ni in 0..n {
            for mi in 0..n - 1 {
                let idx = ni * n + mi;
                if lhs[idx] != &minus_two_kappa * &rhs[idx] {
                    right = false;
                }
            }
        }
    }

    // M p_MA = 0 within the truncation tail.
    let weights = ma_weights(&rep, l);
    let total: Rat = weights.iter().sum();
    let m = assemble_markov(spec, l)?;
    let residual = m.apply(&weights)?;
    let scale = rat_to_f64(&total).abs().max(1e-300);
    let steady_residual = residual
        .iter()
        .map(|v| (rat_to_f64(v) / scale).abs())
        .fold(0.0, f64::max);
    Ok(TelescopingReport {
        bulk,
        left,
        right,
        steady_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ansatz::word::PairRule;
    use crate::exact::rat;

    fn dissep_spec() -> ModelSpec {
        ModelSpec::dissep(rat(1, 2), rat(2, 3), rat(1, 5), rat(1, 7), rat_int(3)).unwrap()
    }

    #[test]
    fn zf_passes_for_both_models() {
        let tasep = ModelSpec::tasep(rat(1, 2), rat(1, 3)).unwrap();
        assert!(check_zf(&tasep).unwrap());
        assert!(check_zf(&dissep_spec()).unwrap());
    }

    #[test]
    fn zf_mutations_flip_the_verdict() {
        // D E -> D + 2 E
        let mutated = ReductionSystem {
            alphabet: super::super::word::Alphabet::ED,
            rules: vec![PairRule {
                lhs: (LETTER_D, LETTER_E),
                rhs: vec![
                    (rat_int(1), vec![LETTER_D]),
                    (rat_int(2), vec![LETTER_E]),
                ],
            }],
        };
        assert!(!check_zf_tasep_with(&mutated));

        // Each diffusion-dissipation rule coefficient, mutated one at a time.
        let spec = dissep_spec();
        let phi = spec.dissep_derived().unwrap().phi;
        for idx in 0..3 {
            let mut sys = ReductionSystem::dissep(&phi);
            for (rc, _) in &mut sys.rules[idx].rhs {
                *rc = &*rc * rat_int(2);
            }
            assert!(
                !check_zf_dissep_with(&spec, &sys).unwrap(),
                "mutation of rule {idx} undetected"
            );
        }
    }

    #[test]
    fn gz_tasep_symbolic() {
        let (alpha, beta) = (rat(1, 2), rat(1, 3));
        let (l, r) =
            check_gz_tasep_with(&tasep_k(&alpha), &tasep_kbar(&beta), &alpha, &beta).unwrap();
        assert!(l && r);
    }

    #[test]
    fn gz_tasep_mutations_flip() {
        let (alpha, beta) = (rat(1, 2), rat(1, 3));
        // Perturb one K entry.
        let mut k = tasep_k(&alpha);
        let bumped = k.get(0, 0).clone() + RatFunc::from_int(1);
        k.set(0, 0, bumped);
        let (l, r) = check_gz_tasep_with(&k, &tasep_kbar(&beta), &alpha, &beta).unwrap();
        assert!(!l && r);
        // Perturb one Kbar entry.
        let mut kbar = tasep_kbar(&beta);
        let bumped = kbar.get(0, 1).clone() * RatFunc::from_int(3);
        kbar.set(0, 1, bumped);
        let (l, r) = check_gz_tasep_with(&tasep_k(&alpha), &kbar, &alpha, &beta).unwrap();
        assert!(l && !r);
    }

    #[test]
    fn gz_dissep_on_truncated_rep() {
        let spec = dissep_spec();
        let (l, r) = check_gz(&spec).unwrap();
        assert!(l && r);
    }

    #[test]
    fn gz_dissep_perturbed_k_fails() {
        let spec = dissep_spec();
        let rep = build_truncated_rep(&spec, 8).unwrap();
        let mut k = spectral_k(&spec).unwrap();
        let bumped = k.get(0, 0).clone() + RatFunc::from_int(1);
        k.set(0, 0, bumped);
        let kbar = spectral_kbar(&spec).unwrap();
        let samples = [rat_int(2), rat(1, 2)];
        let (l, r) = check_gz_dissep_with(&spec, &k, &kbar, &rep, &samples).unwrap();
        assert!(!l && r);
    }

    #[test]
    fn telescoping_tasep() {
        let rep = check_telescoping_tasep(&rat(1, 2), &rat(1, 3), 4).unwrap();
        assert!(rep.bulk && rep.left && rep.right);
        assert_eq!(rep.steady_residual, 0.0);
    }

    #[test]
    fn telescoping_dissep() {
        let spec = dissep_spec();
        let rep = check_telescoping_dissep(&spec, 3, 24).unwrap();
        assert!(rep.bulk, "bulk identity fails in truncation");
        assert!(rep.left, "left boundary identity fails on safe block");
        assert!(rep.right, "right boundary identity fails on safe block");
        assert!(
            rep.steady_residual < 1e-9,
            "steady residual {}",
            rep.steady_residual
        );
    }
}
