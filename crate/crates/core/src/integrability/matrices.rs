//! Spectral R- and K-matrices as rational-function matrices.
//!
//! Entries are transcribed from the defining displays and kept exact; the
//! unitarity/regularity checks and the derivative links back to the local
//! jump operators live in the sibling modules.

use num_traits::{One, Zero};

use crate::error::{ExactError, ModelError};
use crate::exact::{rat_int, Mat, Poly, Rat, RatFunc};
use crate::model::ModelSpec;

/// Which boundary a K-matrix belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Permutation operator on `C^s (x) C^s`.
pub fn permutation(s: usize) -> Mat<Rat> {
    let mut p = Mat::zeros(s * s, s * s);
    for i in 0..s {
        for j in 0..s {
            p.set(i * s + j, j * s + i, Rat::one());
        }
    }
    p
}

fn c(v: Rat) -> Poly {
    Poly::constant(v)
}

fn x() -> Poly {
    Poly::x()
}

fn x2() -> Poly {
    Poly::monomial(Rat::one(), 2)
}

fn rf(num: Poly, den: Poly) -> RatFunc {
    RatFunc::new(num, den).expect("nonzero denominator polynomial")
}

fn rf_poly(p: Poly) -> RatFunc {
    RatFunc::from_poly(p)
}

/// R-matrix of the totally asymmetric process:
/// rows `(00, 01, 10, 11)`, entries `{1, x, 1, 1-x}` as displayed.
pub fn tasep_r() -> Mat<RatFunc> {
    let zero = RatFunc::zero();
    let one = RatFunc::one();
    let xf = RatFunc::x();
    let one_minus_x = rf_poly(c(Rat::one()) - x());
    Mat::from_rows(vec![
        vec![one.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), xf, zero.clone()],
        vec![zero.clone(), one.clone(), one_minus_x, zero.clone()],
        vec![zero.clone(), zero.clone(), zero.clone(), one],
    ])
    .expect("4x4")
}

/// Left K-matrix of the totally asymmetric process.
pub fn tasep_k(alpha: &Rat) -> Mat<RatFunc> {
    let a = alpha.clone();
    // denominator x alpha - x - alpha
    let den = c(-a.clone()) + c(&a - rat_int(1)) * x();
    // (-x alpha + alpha - 1) x
    let num00 = (c(&a - rat_int(1)) + c(-a.clone()) * x()) * x();
    // alpha (x^2 - 1)
    let num10 = c(a) * (x2() - c(Rat::one()));
    Mat::from_rows(vec![
        vec![rf(num00, den.clone()), RatFunc::zero()],
        vec![rf(num10, den), RatFunc::one()],
    ])
    .expect("2x2")
}

/// Right K-matrix of the totally asymmetric process.
pub fn tasep_kbar(beta: &Rat) -> Mat<RatFunc> {
    let b = beta.clone();
    // denominator -x^2 beta + x beta - x
    let den = c(-b.clone()) * x2() + c(&b - rat_int(1)) * x();
    // -(x^2 - 1) beta
    let num01 = c(-b.clone()) * (x2() - c(Rat::one()));
    // x beta - x - beta
    let num11 = c(-b.clone()) + c(&b - rat_int(1)) * x();
    Mat::from_rows(vec![
        vec![RatFunc::one(), rf(num01, den.clone())],
        vec![RatFunc::zero(), rf(num11, den)],
    ])
    .expect("2x2")
}

/// R-matrix of the diffusion-dissipation process.
pub fn dissep_r(kappa: &Rat) -> Result<Mat<RatFunc>, ExactError> {
    let k = kappa.clone();
    let one = c(Rat::one());
    // d1 = kappa (x+1) + x - 1, d2 = kappa (x-1) + x + 1
    let d1 = c(k.clone()) * (x() + one.clone()) + x() - one.clone();
    let d2 = c(k.clone()) * (x() - one.clone()) + x() + one.clone();
    if d1.is_zero() || d2.is_zero() {
        return Err(ExactError::Degenerate(
            "R-matrix denominator vanishes identically".into(),
        ));
    }
    let diag_out = rf(c(k.clone()) * (x() + one.clone()), d1.clone());
    let anti_out = rf(x() - one.clone(), d1);
    let diag_in = rf(c(k) * (x() - one.clone()), d2.clone());
    let anti_in = rf(x() + one, d2);
    let zero = RatFunc::zero();
    Mat::from_rows(vec![
        vec![diag_out.clone(), zero.clone(), zero.clone(), anti_out.clone()],
        vec![zero.clone(), diag_in.clone(), anti_in.clone(), zero.clone()],
        vec![zero.clone(), anti_in, diag_in, zero.clone()],
        vec![anti_out, zero.clone(), zero.clone(), diag_out],
    ])
    .map_err(|e| e)
}

fn dissep_boundary(
    minus: &Rat,  // (gamma - alpha) resp. (delta - beta)
    plus: &Rat,   // (alpha + gamma) resp. (delta + beta)
    kappa: &Rat,
    flip_plus: bool, // the right matrix flips the sign of the 2x(plus) terms
) -> Result<Mat<RatFunc>, ExactError> {
    let one = c(Rat::one());
    let four_k = c(rat_int(4) * kappa);
    let two_plus = c(rat_int(2) * plus);
    let diff = c(minus.clone());
    let xp1 = x2() + one.clone(); // x^2 + 1
    let xm1 = x2() - one.clone(); // x^2 - 1
    // den = 2x ( (x^2-1)(plus) + 2 kappa (x^2+1) ), with the (x^2-1) term
    // negated for the right boundary.
    let plus_term = if flip_plus {
        c(-plus.clone()) * xm1.clone()
    } else {
        c(plus.clone()) * xm1.clone()
    };
    let den = c(rat_int(2)) * x() * (plus_term + c(rat_int(2) * kappa) * xp1.clone());
    if den.is_zero() {
        return Err(ExactError::Degenerate(
            "K-matrix denominator vanishes identically".into(),
        ));
    }
    let sign = if flip_plus { -Rat::one() } else { Rat::one() };
    // (x^2+1)((x^2-1) diff + 4 x kappa)
    let n00 = xp1.clone() * (xm1.clone() * diff.clone() + four_k.clone() * x());
    // (x^2-1)((x^2+1) diff +/- 2 x plus)
    let n01 = xm1.clone() * (xp1.clone() * diff.clone() + c(sign.clone()) * two_plus.clone() * x());
    // -(x^2-1)((x^2+1) diff -/+ 2 x plus)
    let n10 =
        -(xm1.clone() * (xp1.clone() * diff.clone() - c(sign) * two_plus * x()));
    // -(x^2+1)((x^2-1) diff - 4 x kappa)
    let n11 = -(xp1 * (xm1 * diff - four_k * x()));
    Ok(Mat::from_rows(vec![
        vec![rf(n00, den.clone()), rf(n01, den.clone())],
        vec![rf(n10, den.clone()), rf(n11, den)],
    ])
    .expect("2x2"))
}

/// Left K-matrix of the diffusion-dissipation process.
pub fn dissep_k(alpha: &Rat, gamma: &Rat, kappa: &Rat) -> Result<Mat<RatFunc>, ExactError> {
    dissep_boundary(&(gamma - alpha), &(alpha + gamma), kappa, false)
}

/// Right K-matrix of the diffusion-dissipation process.
pub fn dissep_kbar(beta: &Rat, delta: &Rat, kappa: &Rat) -> Result<Mat<RatFunc>, ExactError> {
    dissep_boundary(&(delta - beta), &(delta + beta), kappa, true)
}

/// R-matrix of a model (the two-species process has no transcription here).
pub fn spectral_r(spec: &ModelSpec) -> Result<Mat<RatFunc>, ModelError> {
    match spec {
        ModelSpec::Tasep { .. } => Ok(tasep_r()),
        ModelSpec::Dissep { kappa, .. } => Ok(dissep_r(kappa)?),
        ModelSpec::TwoTasep { .. } => Err(ModelError::UnsupportedModel(spec.name())),
    }
}

/// Left boundary K-matrix of a model.
pub fn spectral_k(spec: &ModelSpec) -> Result<Mat<RatFunc>, ModelError> {
    match spec {
        ModelSpec::Tasep { alpha, .. } => Ok(tasep_k(alpha)),
        ModelSpec::Dissep {
            alpha,
            gamma,
            kappa,
            ..
        } => Ok(dissep_k(alpha, gamma, kappa)?),
        ModelSpec::TwoTasep { .. } => Err(ModelError::UnsupportedModel(spec.name())),
    }
}

/// Right boundary K-matrix of a model.
pub fn spectral_kbar(spec: &ModelSpec) -> Result<Mat<RatFunc>, ModelError> {
    match spec {
        ModelSpec::Tasep { beta, .. } => Ok(tasep_kbar(beta)),
        ModelSpec::Dissep {
            beta,
            delta,
            kappa,
            ..
        } => Ok(dissep_kbar(beta, delta, kappa)?),
        ModelSpec::TwoTasep { .. } => Err(ModelError::UnsupportedModel(spec.name())),
    }
}

/// Conjugate an `s^2 x s^2` matrix by the species-reversal map on both
/// factors (hole/particle mirror). Used by the right-boundary reflection
/// check: the right boundary is the left boundary of the mirrored chain.
pub fn mirror_r(r: &Mat<RatFunc>) -> Mat<RatFunc> {
    let s2 = r.nrows();
    let s = (1..).find(|k| k * k == s2).expect("square local dimension");
    let flip = |idx: usize| {
        let (i, j) = (idx / s, idx % s);
        (s - 1 - i) * s + (s - 1 - j)
    };
    let mut out = Mat::zeros(s2, s2);
    for i in 0..s2 {
        for j in 0..s2 {
            out.set(flip(i), flip(j), r.get(i, j).clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn tasep_r_is_regular() {
        let r = tasep_r();
        let at_one = r.try_map(|f| f.eval(&Rat::one())).unwrap();
        assert_eq!(at_one, permutation(2));
        // entry (2,2) of the display is 1 - x
        assert_eq!(
            r.get(2, 2).eval(&rat(1, 3)).unwrap(),
            rat(2, 3)
        );
        // entry (1,2) is x: value 1/2 at x = 1/2
        assert_eq!(r.get(1, 2).eval(&rat(1, 2)).unwrap(), rat(1, 2));
    }

    #[test]
    fn tasep_k_regular_and_derivative() {
        let alpha = rat(1, 2);
        let k = tasep_k(&alpha);
        assert!(k.try_map(|f| f.eval(&Rat::one())).unwrap().is_identity());
        // K'(1) entry (0,0) = 2 alpha (finite differences on the float
        // shadow converge to the same value).
        let d = k.get(0, 0).derivative().eval(&Rat::one()).unwrap();
        assert_eq!(d, rat_int(2) * &alpha);
        let f = |x: f64| {
            let a = 0.5;
            (-x * a + a - 1.0) * x / (x * a - x - a)
        };
        let h = 1e-6;
        let fd = (f(1.0 + h) - f(1.0 - h)) / (2.0 * h);
        assert!((fd - 1.0).abs() < 1e-6);
    }

    #[test]
    fn dissep_r_regular() {
        let r = dissep_r(&rat_int(2)).unwrap();
        let at_one = r.try_map(|f| f.eval(&Rat::one())).unwrap();
        assert_eq!(at_one, permutation(2));
        // entry (0,3) = (x-1)/(kappa(x+1)+x-1) at x = 3, kappa = 2: 2/10.
        assert_eq!(r.get(0, 3).eval(&rat_int(3)).unwrap(), rat(1, 5));
    }

    #[test]
    fn dissep_k_regular() {
        let k = dissep_k(&rat(1, 2), &rat(1, 3), &rat_int(2)).unwrap();
        assert!(k.try_map(|f| f.eval(&Rat::one())).unwrap().is_identity());
        let kbar = dissep_kbar(&rat(1, 3), &rat(1, 5), &rat_int(2)).unwrap();
        assert!(kbar.try_map(|f| f.eval(&Rat::one())).unwrap().is_identity());
    }

    #[test]
    fn mirror_fixes_dissep_r() {
        let r = dissep_r(&rat(3, 2)).unwrap();
        assert_eq!(mirror_r(&r), r);
        // The asymmetric R is not mirror-symmetric.
        let r = tasep_r();
        assert_ne!(mirror_r(&r), r);
    }
}
