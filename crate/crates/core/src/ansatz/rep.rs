//! Truncated oscillator representation of the diffusion-dissipation algebra.
//!
//! The algebra `phi G1 G2 = G2 G1`, `G1 G3 = G3 G1`, `phi G2 G3 = G3 G2` is
//! realized on the tensor square of a ladder space:
//! `G1 = e (x) 1`, `G2 = A(phi) (x) A(phi)`, `G3 = 1 (x) d`, with `e`/`d`
//! the raising/lowering operators and `A(phi)` the diagonal `phi^n`. The
//! boundary vectors are the double series
//! `v_{n,m} = d^(m-n) b^n phi^((m-n)(m-n-1)/2) / ((1-phi^2)..(1-phi^(2n)))`
//! (with `d`, `b` the derived boundary parameters, negative powers of the
//! parameter `d` included) and the mirror-image `w_{n,m}`; they satisfy the
//! boundary relations on the truncated block and need `c != 0`, `d != 0`.
//!
//! Everything is exact at a given truncation order `N`; convergence in `N`
//! is assessed on the float shadow by comparing `N` with `N + 4`.

use num_traits::{One, Signed, Zero};

use crate::error::AnsatzError;
use crate::exact::{pow_i, rat_to_f64, Mat, Rat};
use crate::model::{config_from_index, DissepDerived, ModelSpec};
use crate::steady::StationaryDistribution;

use super::word::{Letter, LETTER_G1, LETTER_G2, LETTER_G3};

/// Default truncation-escalation cap.
pub const DEFAULT_TRUNCATION_CAP: usize = 64;
/// Default float-shadow tolerance for truncation convergence.
pub const DEFAULT_SHADOW_TOL: f64 = 1e-10;

/// Finite slice of the infinite-dimensional representation.
#[derive(Debug, Clone)]
pub struct TruncatedRep {
    n: usize,
    derived: DissepDerived,
    /// `phi^k` for `k < 2n`.
    phi_pows: Vec<Rat>,
    /// Row vector `<<W|`, index `nu = n_index * N + m_index`.
    w: Vec<Rat>,
    /// Column vector `|V>>`, same indexing.
    v: Vec<Rat>,
}

/// Triangular exponent `j (j - 1) / 2` (nonnegative for every integer `j`).
fn triangular(j: i64) -> i64 {
    j * (j - 1) / 2
}

impl TruncatedRep {
    pub fn truncation(&self) -> usize {
        self.n
    }

    pub fn derived(&self) -> &DissepDerived {
        &self.derived
    }

    pub fn w_vector(&self) -> &[Rat] {
        &self.w
    }

    pub fn v_vector(&self) -> &[Rat] {
        &self.v
    }

    fn phi_pow(&self, k: usize) -> &Rat {
        &self.phi_pows[k]
    }

    /// `G |x>` for a column vector.
    pub fn apply_right(&self, g: Letter, x: &[Rat]) -> Vec<Rat> {
        let n = self.n;
        let mut out = vec![Rat::zero(); n * n];
        match g {
            LETTER_G1 => {
                // e (x) 1: raises the first index.
                for row in 1..n {
                    for m in 0..n {
                        out[row * n + m] = x[(row - 1) * n + m].clone();
                    }
                }
            }
            LETTER_G2 => {
                for row in 0..n {
                    for m in 0..n {
                        let idx = row * n + m;
                        if !x[idx].is_zero() {
                            out[idx] = self.phi_pow(row + m) * &x[idx];
                        }
                    }
                }
            }
            LETTER_G3 => {
                // 1 (x) d: lowers the second index.
                for row in 0..n {
                    for m in 0..n - 1 {
                        out[row * n + m] = x[row * n + m + 1].clone();
                    }
                }
            }
            _ => panic!("letter outside the G alphabet"),
        }
        out
    }

    /// `<x| G` for a row vector.
    pub fn apply_left(&self, g: Letter, x: &[Rat]) -> Vec<Rat> {
        let n = self.n;
        let mut out = vec![Rat::zero(); n * n];
        match g {
            LETTER_G1 => {
                for row in 0..n - 1 {
                    for m in 0..n {
                        out[row * n + m] = x[(row + 1) * n + m].clone();
                    }
                }
            }
            LETTER_G2 => {
                for row in 0..n {
                    for m in 0..n {
                        let idx = row * n + m;
                        if !x[idx].is_zero() {
                            out[idx] = self.phi_pow(row + m) * &x[idx];
                        }
                    }
                }
            }
            LETTER_G3 => {
                for row in 0..n {
                    for m in 1..n {
                        out[row * n + m] = x[row * n + m - 1].clone();
                    }
                }
            }
            _ => panic!("letter outside the G alphabet"),
        }
        out
    }

    /// `<x| (c1 G1 + c2 G2 + c3 G3)` for a row vector.
    pub fn apply_left_combo(&self, coeffs: &[Rat; 3], x: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); x.len()];
        for (g, c) in [LETTER_G1, LETTER_G2, LETTER_G3].into_iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            let part = self.apply_left(g, x);
            for (o, p) in out.iter_mut().zip(part) {
                *o += c * p;
            }
        }
        out
    }

    /// `(c1 G1 + c2 G2 + c3 G3) |x>` for a column vector.
    pub fn apply_right_combo(&self, coeffs: &[Rat; 3], x: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); x.len()];
        for (g, c) in [LETTER_G1, LETTER_G2, LETTER_G3].into_iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            let part = self.apply_right(g, x);
            for (o, p) in out.iter_mut().zip(part) {
                *o += c * p;
            }
        }
        out
    }

    /// The ladder matrices on the single factor (for the representation
    /// invariants: `d e = 1`, `e d = 1 - A(0)` on the truncated block).
    pub fn raising_matrix(&self) -> Mat<Rat> {
        let mut e = Mat::zeros(self.n, self.n);
        for k in 0..self.n - 1 {
            e.set(k + 1, k, Rat::one());
        }
        e
    }

    pub fn lowering_matrix(&self) -> Mat<Rat> {
        self.raising_matrix().transpose()
    }

    pub fn diagonal_matrix(&self) -> Mat<Rat> {
        let mut a = Mat::zeros(self.n, self.n);
        for k in 0..self.n {
            a.set(k, k, self.phi_pow(k).clone());
        }
        a
    }

    /// Dense `N^2 x N^2` generator, for small-N identity tests.
    pub fn dense_generator(&self, g: Letter) -> Mat<Rat> {
        let dim = self.n * self.n;
        let mut out = Mat::zeros(dim, dim);
        for col in 0..dim {
            let mut basis = vec![Rat::zero(); dim];
            basis[col] = Rat::one();
            for (row, val) in self.apply_right(g, &basis).into_iter().enumerate() {
                if !val.is_zero() {
                    out.set(row, col, val);
                }
            }
        }
        out
    }
}

/// Build the truncated representation at order `N >= 2`.
///
/// Requires the derived boundary parameters `c` and `d` to be nonzero (the
/// series coefficients carry negative powers of them).
pub fn build_truncated_rep(spec: &ModelSpec, n: usize) -> Result<TruncatedRep, AnsatzError> {
    assert!(n >= 2, "truncation order must be at least 2");
    let derived = spec
        .dissep_derived()
        .ok_or(crate::error::ModelError::UnsupportedModel(spec.name()))?;
    if derived.c.is_zero() || derived.d.is_zero() {
        return Err(AnsatzError::DegenerateBoundary {
            c: crate::exact::format_rat(&derived.c),
            d: crate::exact::format_rat(&derived.d),
        });
    }
    // kappa > 0 keeps |phi| < 1 strictly, so the q-factorials below never
    // vanish; guard anyway.
    if derived.phi.abs() >= Rat::one() {
        return Err(AnsatzError::Model(crate::error::ModelError::BadDocument(
            "representation needs |phi| < 1".into(),
        )));
    }

    let mut phi_pows = Vec::with_capacity(2 * n);
    let mut acc = Rat::one();
    for _ in 0..2 * n {
        phi_pows.push(acc.clone());
        acc *= &derived.phi;
    }
    // q-factorial products Q_k = prod_{j=1..k} (1 - phi^(2j))
    let phi2 = &derived.phi * &derived.phi;
    let mut q = Vec::with_capacity(n);
    let mut qa = Rat::one();
    let mut phi2_pow = phi2.clone();
    q.push(Rat::one());
    for _ in 1..n {
        qa *= Rat::one() - &phi2_pow;
        phi2_pow *= &phi2;
        q.push(qa.clone());
    }

    let phi_tri = |j: i64| pow_i(&derived.phi, triangular(j)).expect("nonnegative exponent");
    let mut w = Vec::with_capacity(n * n);
    let mut v = Vec::with_capacity(n * n);
    for ni in 0..n {
        for mi in 0..n {
            let j = mi as i64 - ni as i64;
            let vv = pow_i(&derived.d, j).expect("d nonzero")
                * pow_i(&derived.b, ni as i64).map_err(|_| AnsatzError::DegenerateBoundary {
                    c: crate::exact::format_rat(&derived.c),
                    d: crate::exact::format_rat(&derived.d),
                })?
                * phi_tri(j)
                / &q[ni];
            v.push(vv);
            let wv = pow_i(&derived.c, -j).expect("c nonzero")
                * pow_i(&derived.a, mi as i64).map_err(|_| AnsatzError::DegenerateBoundary {
                    c: crate::exact::format_rat(&derived.c),
                    d: crate::exact::format_rat(&derived.d),
                })?
                * phi_tri(-j)
                / &q[mi];
            w.push(wv);
        }
    }
    Ok(TruncatedRep {
        n,
        derived,
        phi_pows,
        w,
        v,
    })
}

/// Left-hand sides of the appendix convergence inequalities; each returned
/// string describes one violated condition.
pub fn convergence_violations(spec: &ModelSpec, l: usize) -> Vec<String> {
    let Some(p) = spec.dissep_derived() else {
        return vec!["not a diffusion-dissipation spec".into()];
    };
    let mut out = Vec::new();
    if p.phi.abs() >= Rat::one() {
        out.push("|phi| >= 1".into());
    }
    if p.c.is_zero() || p.d.is_zero() {
        out.push("c = 0 or d = 0 (series coefficients undefined)".into());
        return out;
    }
    let phi_l = pow_i(&p.phi, l as i64).expect("nonnegative power");
    let one_minus_phi2 = Rat::one() - &p.phi * &p.phi;
    let first = (&p.b * &p.c * &phi_l / (&one_minus_phi2 * &p.d)).abs();
    let second = (&p.a * &p.d * &phi_l / (&one_minus_phi2 * &p.c)).abs();
    if first >= Rat::one() {
        out.push(format!(
            "|b c phi^L / ((1-phi^2) d)| = {} >= 1",
            crate::exact::format_rat(&first)
        ));
    }
    if second >= Rat::one() {
        out.push(format!(
            "|a d phi^L / ((1-phi^2) c)| = {} >= 1",
            crate::exact::format_rat(&second)
        ));
    }
    out
}

/// Exact `<<W| G_{w_1} .. G_{w_k} |V>>` at the representation's truncation.
pub fn dissep_evaluate(word: &[Letter], rep: &TruncatedRep) -> Rat {
    let mut row = rep.w.clone();
    for &g in word {
        row = rep.apply_left(g, &row);
    }
    dot(&row, &rep.v)
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// A value whose truncation error was checked on the float shadow.
#[derive(Debug, Clone)]
pub struct ConvergedValue {
    pub value: Rat,
    pub n: usize,
    pub shadow: f64,
    /// Relative float difference between `N` and `N + 4`.
    pub shadow_delta: f64,
}

fn shadow_close(a: f64, b: f64, tol: f64) -> (bool, f64) {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        return (true, 0.0);
    }
    let delta = (a - b).abs() / scale.max(1e-300);
    (delta <= tol, delta)
}

/// Evaluate a word with truncation escalation (`N, 2N, ...` up to `cap`),
/// accepting once the values at `N` and `N + 4` agree on the float shadow.
pub fn dissep_evaluate_converged(
    spec: &ModelSpec,
    word: &[Letter],
    start: usize,
    cap: usize,
    tol: f64,
) -> Result<ConvergedValue, AnsatzError> {
    let mut n = start.max(2);
    let mut last: Option<(usize, f64, f64)> = None;
    loop {
        let rep = build_truncated_rep(spec, n)?;
        let rep_next = build_truncated_rep(spec, n + 4)?;
        let value = dissep_evaluate(word, &rep);
        let value_next = dissep_evaluate(word, &rep_next);
        let a = rat_to_f64(&value);
        let b = rat_to_f64(&value_next);
        let (ok, delta) = shadow_close(a, b, tol);
        if ok {
            // Accept the value at N (within the cap); N + 4 only certifies
            // stability of the truncation.
            return Ok(ConvergedValue {
                value,
                n,
                shadow: a,
                shadow_delta: delta,
            });
        }
        last = Some((n, a, b));
        if 2 * n > cap {
            let (n_fail, at_n, at_next) = last.expect("at least one attempt");
            return Err(AnsatzError::NotConverged {
                n: n_fail,
                n_next: n_fail + 4,
                at_n,
                at_next,
                diff: delta,
            });
        }
        n *= 2;
    }
}

/// Matrix-product stationary state from the truncated representation at a
/// fixed truncation order.
pub fn dissep_ma_steady(
    spec: &ModelSpec,
    l: usize,
    n: usize,
) -> Result<StationaryDistribution, AnsatzError> {
    let rep = build_truncated_rep(spec, n)?;
    let weights = ma_weights(&rep, l);
    StationaryDistribution::from_weights(l, 2, weights).map_err(|e| {
        AnsatzError::Model(crate::error::ModelError::BadDocument(e.to_string()))
    })
}

/// Per-configuration weights `<<W| X_{tau_1} .. X_{tau_L} |V>>` with
/// `E = G2 + G1 + G3` (hole) and `D = G2 - G1 - G3` (particle).
pub fn ma_weights(rep: &TruncatedRep, l: usize) -> Vec<Rat> {
    let one = Rat::one();
    let e_coeffs = [one.clone(), one.clone(), one.clone()];
    let d_coeffs = [-one.clone(), one.clone(), -one];
    let dim = 1usize << l;
    let mut weights = Vec::with_capacity(dim);
    for idx in 0..dim {
        let tau = config_from_index(idx, l, 2);
        let mut row = rep.w_vector().to_vec();
        for &t in &tau {
            let coeffs = if t == 0 { &e_coeffs } else { &d_coeffs };
            row = rep.apply_left_combo(coeffs, &row);
        }
        weights.push(dot(&row, rep.v_vector()));
    }
    weights
}

/// Stationary state with automatic truncation escalation: accepts once the
/// normalized distributions at `N` and `N + 4` agree within `tol` on the
/// float shadow. Returns the accepted distribution and its truncation.
pub fn dissep_ma_steady_auto(
    spec: &ModelSpec,
    l: usize,
    start: usize,
    cap: usize,
    tol: f64,
) -> Result<(StationaryDistribution, usize), AnsatzError> {
    let mut n = start.max(2);
    loop {
        let p1 = dissep_ma_steady(spec, l, n)?;
        let p2 = dissep_ma_steady(spec, l, n + 4)?;
        let worst = p1
            .probs()
            .iter()
            .zip(p2.probs())
            .map(|(a, b)| (rat_to_f64(a) - rat_to_f64(b)).abs())
            .fold(0.0f64, f64::max);
        if worst <= tol {
            return Ok((p1, n));
        }
        if 2 * n > cap {
            return Err(AnsatzError::NotConverged {
                n,
                n_next: n + 4,
                at_n: rat_to_f64(p1.prob(0)),
                at_next: rat_to_f64(p2.prob(0)),
                diff: worst,
            });
        }
        n *= 2;
    }
}

/// Partial sum of the appendix double series for `<<W| G2^L |V>>`:
/// terms `(phi^L c b / d)^n (phi^L d a / c)^m phi^((m-n)^2) / (Q_n Q_m)`
/// over `n, m < N`. Requires `c != 0` and `d != 0`.
pub fn dissep_z_series(spec: &ModelSpec, l: usize, n: usize) -> Result<Rat, AnsatzError> {
    let derived = spec
        .dissep_derived()
        .ok_or(crate::error::ModelError::UnsupportedModel(spec.name()))?;
    if derived.c.is_zero() || derived.d.is_zero() {
        return Err(AnsatzError::DegenerateBoundary {
            c: crate::exact::format_rat(&derived.c),
            d: crate::exact::format_rat(&derived.d),
        });
    }
    let phi_l = pow_i(&derived.phi, l as i64).expect("nonnegative power");
    let x = &phi_l * &derived.c * &derived.b / &derived.d;
    let y = &phi_l * &derived.d * &derived.a / &derived.c;
    let phi2 = &derived.phi * &derived.phi;
    let mut q = Vec::with_capacity(n);
    q.push(Rat::one());
    let mut qa = Rat::one();
    let mut phi2_pow = phi2.clone();
    for _ in 1..n {
        qa *= Rat::one() - &phi2_pow;
        phi2_pow *= &phi2;
        q.push(qa.clone());
    }
    let mut total = Rat::zero();
    for ni in 0..n {
        let xn = pow_i(&x, ni as i64).expect("nonnegative");
        for mi in 0..n {
            let j = (mi as i64 - ni as i64).abs() as u32;
            let ym = pow_i(&y, mi as i64).expect("nonnegative");
            let phi_sq = pow_i(&derived.phi, (j * j) as i64).expect("nonnegative");
            total += &xn * ym * phi_sq / (&q[ni] * &q[mi]);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use crate::steady::stationary;

    fn friendly_spec() -> ModelSpec {
        // kappa = 3 -> phi = 1/2; asymmetric boundary rates keep c, d != 0.
        ModelSpec::dissep(rat(1, 2), rat(2, 3), rat(1, 5), rat(1, 7), rat_int(3)).unwrap()
    }

    #[test]
    fn boundary_vector_leading_coefficients() {
        let spec = friendly_spec();
        let rep = build_truncated_rep(&spec, 6).unwrap();
        let p = spec.dissep_derived().unwrap();
        // v_{0,0} = w_{0,0} = 1
        assert_eq!(rep.v_vector()[0], Rat::one());
        assert_eq!(rep.w_vector()[0], Rat::one());
        // v_{1,1} = b / (1 - phi^2)
        let n = rep.truncation();
        let want = &p.b / (Rat::one() - &p.phi * &p.phi);
        assert_eq!(rep.v_vector()[n + 1], want);
    }

    #[test]
    fn ladder_relations_on_truncated_block() {
        let spec = friendly_spec();
        let rep = build_truncated_rep(&spec, 5).unwrap();
        let e = rep.raising_matrix();
        let d = rep.lowering_matrix();
        let a = rep.diagonal_matrix();
        let de = d.mul(&e).unwrap();
        // d e = 1 on the first N-1 basis vectors
        for col in 0..4 {
            for row in 0..5 {
                let want = if row == col { Rat::one() } else { Rat::zero() };
                assert_eq!(*de.get(row, col), want);
            }
        }
        // e d = 1 - A(0) exactly (truncation does not disturb it)
        let ed = e.mul(&d).unwrap();
        for row in 0..5 {
            for col in 0..5 {
                let want = if row == col && row >= 1 {
                    Rat::one()
                } else {
                    Rat::zero()
                };
                assert_eq!(*ed.get(row, col), want);
            }
        }
        // A(phi) e = phi e A(phi) and d A(phi) = phi A(phi) d, exactly.
        let phi = spec.dissep_derived().unwrap().phi;
        assert_eq!(
            a.mul(&e).unwrap(),
            e.mul(&a).unwrap().scale(&phi)
        );
        assert_eq!(
            d.mul(&a).unwrap(),
            a.mul(&d).unwrap().scale(&phi)
        );
    }

    #[test]
    fn exchange_relations_exact_in_truncation() {
        let spec = friendly_spec();
        let rep = build_truncated_rep(&spec, 4).unwrap();
        let phi = spec.dissep_derived().unwrap().phi;
        let g1 = rep.dense_generator(LETTER_G1);
        let g2 = rep.dense_generator(LETTER_G2);
        let g3 = rep.dense_generator(LETTER_G3);
        // phi G1 G2 = G2 G1
        assert_eq!(
            g1.mul(&g2).unwrap().scale(&phi),
            g2.mul(&g1).unwrap()
        );
        // G1 G3 = G3 G1
        assert_eq!(g1.mul(&g3).unwrap(), g3.mul(&g1).unwrap());
        // phi G2 G3 = G3 G2
        assert_eq!(
            g2.mul(&g3).unwrap().scale(&phi),
            g3.mul(&g2).unwrap()
        );
    }

    #[test]
    fn left_boundary_residual_vanishes_on_block() {
        let spec = friendly_spec();
        let rep = build_truncated_rep(&spec, 8).unwrap();
        let p = spec.dissep_derived().unwrap();
        // <<W| (G1 - c G2 - a G3) = 0 on rows n <= N-2 (all m).
        let combo = [Rat::one(), -p.c.clone(), -p.a.clone()];
        let residual = rep.apply_left_combo(&combo, rep.w_vector());
        let n = rep.truncation();
        for ni in 0..n - 1 {
            for mi in 0..n {
                assert!(
                    residual[ni * n + mi].is_zero(),
                    "left residual at ({ni},{mi})"
                );
            }
        }
    }

    #[test]
    fn right_boundary_residual_vanishes_on_block() {
        let spec = friendly_spec();
        let rep = build_truncated_rep(&spec, 8).unwrap();
        let p = spec.dissep_derived().unwrap();
        // (G3 - b G1 - d G2) |V>> = 0 on components m <= N-2 (all n).
        let combo = [-p.b.clone(), -p.d.clone(), Rat::one()];
        let residual = rep.apply_right_combo(&combo, rep.v_vector());
        let n = rep.truncation();
        for ni in 0..n {
            for mi in 0..n - 1 {
                assert!(
                    residual[ni * n + mi].is_zero(),
                    "right residual at ({ni},{mi})"
                );
            }
        }
    }

    #[test]
    fn z_series_equals_g2_power_evaluation() {
        let spec = friendly_spec();
        for l in 1..=3 {
            for n in [2, 5, 9] {
                let rep = build_truncated_rep(&spec, n).unwrap();
                let word = vec![LETTER_G2; l];
                assert_eq!(
                    dissep_z_series(&spec, l, n).unwrap(),
                    dissep_evaluate(&word, &rep),
                    "L={l} N={n}"
                );
            }
        }
    }

    #[test]
    fn z_series_leading_term_is_one() {
        let spec = friendly_spec();
        assert_eq!(dissep_z_series(&spec, 3, 1).unwrap(), Rat::one());
    }

    #[test]
    fn degenerate_boundary_is_an_error() {
        // alpha = gamma makes c = 0.
        let spec =
            ModelSpec::dissep(rat(1, 3), rat(2, 3), rat(1, 3), rat(1, 7), rat_int(3)).unwrap();
        assert!(matches!(
            build_truncated_rep(&spec, 4),
            Err(AnsatzError::DegenerateBoundary { .. })
        ));
        assert!(dissep_z_series(&spec, 3, 4).is_err());
    }

    #[test]
    fn ma_steady_matches_null_space_shadow() {
        let spec = friendly_spec();
        for l in 2..=4 {
            let (ma, n) = dissep_ma_steady_auto(&spec, l, 8, 64, 1e-12).unwrap();
            assert!(n <= 64);
            let ns = stationary(&spec, l).unwrap();
            for (a, b) in ma.probs().iter().zip(ns.probs()) {
                assert!(
                    (rat_to_f64(a) - rat_to_f64(b)).abs() < 1e-10,
                    "L={l}: {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn convergence_domain_flags() {
        let spec = friendly_spec();
        // Large L: inequalities comfortably satisfied.
        assert!(convergence_violations(&spec, 6).is_empty());
        // Large kappa pushes phi toward 1: with near-equal small c and d
        // the b c phi^L / ((1-phi^2) d) combination exceeds 1 at small L.
        let lopsided =
            ModelSpec::dissep(rat_int(0), rat_int(1), rat_int(1), rat_int(0), rat_int(100))
                .unwrap();
        assert!(!convergence_violations(&lopsided, 1).is_empty());
    }
}
