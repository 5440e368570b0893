//! Mechanical verification of the integrability structure.
//!
//! Multivariate identities (Yang-Baxter, reflection) are checked exactly on
//! deterministic grids of rational points whose size exceeds the degree of
//! the cleared identity; one-variable identities (unitarity, regularity) are
//! verified as rational-function identities. Grid values that would hit a
//! pole of some entry are skipped and replaced while the grid is built.

use std::collections::HashMap;

use crate::error::{ExactError, ModelError};
use crate::exact::{embed_pair, rat_int, Mat, Rat, RatFunc};
use crate::model::{build_local_operators, LocalOperators, ModelSpec};

use super::matrices::{mirror_r, permutation, spectral_k, spectral_kbar, spectral_r, Side};

/// Default number of grid values per spectral variable.
pub const DEFAULT_POINTS_PER_VAR: usize = 25;

/// Outcome of a finite verification.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub pass: bool,
    /// Number of grid points actually evaluated.
    pub points: usize,
    /// First counterexample point, if any.
    pub witness: Option<Vec<Rat>>,
}

impl Verdict {
    fn pass(points: usize) -> Self {
        Verdict {
            pass: true,
            points,
            witness: None,
        }
    }

    fn fail(points: usize, witness: Vec<Rat>) -> Self {
        Verdict {
            pass: false,
            points,
            witness: Some(witness),
        }
    }

    fn symbolic(pass: bool) -> Self {
        Verdict {
            pass,
            points: 0,
            witness: None,
        }
    }
}

/// Cache of a rational-function matrix evaluated at rational points.
struct EvalCache<'a> {
    mat: &'a Mat<RatFunc>,
    values: HashMap<Rat, Option<Mat<Rat>>>,
}

impl<'a> EvalCache<'a> {
    fn new(mat: &'a Mat<RatFunc>) -> Self {
        EvalCache {
            mat,
            values: HashMap::new(),
        }
    }

    /// `None` when some entry has a pole at `x`.
    fn eval(&mut self, x: &Rat) -> Option<Mat<Rat>> {
        if let Some(v) = self.values.get(x) {
            return v.clone();
        }
        let v = self.mat.try_map(|f| f.eval(x)).ok();
        self.values.insert(x.clone(), v.clone());
        v
    }
}

/// Candidate grid values: 2, 3, 4, ...
fn candidates() -> impl Iterator<Item = Rat> {
    (2i64..).map(rat_int)
}

/// `R_{21} = P R P` for an evaluated matrix on `C^s (x) C^s`.
fn swap_spaces(r: &Mat<Rat>, s: usize) -> Mat<Rat> {
    let p = permutation(s);
    p.mul(r).expect("shape").mul(&p).expect("shape")
}

fn local_dim(r: &Mat<RatFunc>) -> usize {
    (1..).find(|k| k * k == r.nrows()).expect("square local dimension")
}

/// Verify the Yang-Baxter equation
/// `R12(x1/x2) R13(x1/x3) R23(x2/x3) = R23(x2/x3) R13(x1/x3) R12(x1/x2)`
/// on a grid with `points` values per variable.
pub fn check_yang_baxter(
    r: &Mat<RatFunc>,
    points: usize,
) -> Result<Verdict, ExactError> {
    let s = local_dim(r);
    let mut cache = EvalCache::new(r);

    // Build pole-free value lists: a candidate joins a list only if every
    // cross-ratio against the other lists evaluates. Rejected candidates are
    // the "skipped and replaced" points.
    let mut lists: [Vec<Rat>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    let mut stream = candidates();
    while lists.iter().any(|l| l.len() < points) {
        let slot = (0..3)
            .min_by_key(|&i| lists[i].len())
            .expect("three lists");
        let v = stream.next().expect("unbounded candidate stream");
        let ok = (0..3).all(|other| {
            if other == slot {
                return true;
            }
            lists[other].iter().all(|w| {
                cache.eval(&(&v / w)).is_some() && cache.eval(&(w / &v)).is_some()
            })
        });
        if ok {
            lists[slot].push(v);
        }
    }

    let mut evaluated = 0usize;
    for x1 in &lists[0] {
        for x2 in &lists[1] {
            let r12 = cache.eval(&(x1 / x2)).expect("pole-free grid");
            let e12 = embed_pair(&r12, 0, 1, 3, s);
            for x3 in &lists[2] {
                let r13 = cache.eval(&(x1 / x3)).expect("pole-free grid");
                let r23 = cache.eval(&(x2 / x3)).expect("pole-free grid");
                let e13 = embed_pair(&r13, 0, 2, 3, s);
                let e23 = embed_pair(&r23, 1, 2, 3, s);
                evaluated += 1;
                let lhs = e12.mul(&e13)?.mul(&e23)?;
                let rhs = e23.mul(&e13)?.mul(&e12)?;
                if lhs != rhs {
                    return Ok(Verdict::fail(
                        evaluated,
                        vec![x1.clone(), x2.clone(), x3.clone()],
                    ));
                }
            }
        }
    }
    Ok(Verdict::pass(evaluated))
}

/// Verify the reflection equation on a grid with `points` values per
/// variable.
///
/// Left boundary:
/// `R12(x1/x2) K1(x1) R21(x1 x2) K2(x2) = K2(x2) R12(x1 x2) K1(x1) R21(x1/x2)`.
///
/// Right boundary: the same equation for the hole/particle-mirrored
/// R-matrix with inverted spectral arguments,
/// `R~12(x2/x1) K1(x1) R~21(1/(x1 x2)) K2(x2)
///  = K2(x2) R~12(1/(x1 x2)) K1(x1) R~21(x2/x1)`,
/// which is the equation the right boundary of the mirrored chain
/// inherits from the left one.
pub fn check_reflection(
    r: &Mat<RatFunc>,
    k: &Mat<RatFunc>,
    side: Side,
    points: usize,
) -> Result<Verdict, ExactError> {
    let s = local_dim(r);
    let mirrored;
    let r_used = match side {
        Side::Left => r,
        Side::Right => {
            mirrored = mirror_r(r);
            &mirrored
        }
    };
    let mut rc = EvalCache::new(r_used);
    let mut kc = EvalCache::new(k);

    // Arguments needed for a pair (a, b), by side.
    let ratio_arg = |a: &Rat, b: &Rat| match side {
        Side::Left => a / b,
        Side::Right => b / a,
    };
    let product_arg = |a: &Rat, b: &Rat| match side {
        Side::Left => a * b,
        Side::Right => (a * b).recip(),
    };

    let mut lists: [Vec<Rat>; 2] = [Vec::new(), Vec::new()];
    let mut stream = candidates();
    while lists.iter().any(|l| l.len() < points) {
        let slot = (0..2).min_by_key(|&i| lists[i].len()).expect("two lists");
        let v = stream.next().expect("unbounded candidate stream");
        if kc.eval(&v).is_none() {
            continue;
        }
        let other = 1 - slot;
        let ok = lists[other].iter().all(|w| {
            let (a, b) = if slot == 0 { (&v, w) } else { (w, &v) };
            rc.eval(&ratio_arg(a, b)).is_some()
                && rc.eval(&ratio_arg(b, a)).is_some()
                && rc.eval(&product_arg(a, b)).is_some()
        });
        if ok {
            lists[slot].push(v);
        }
    }

    let mut evaluated = 0usize;
    let id = Mat::identity(s);
    for x1 in &lists[0] {
        let k1 = kc.eval(x1).expect("pole-free grid").tensor(&id);
        for x2 in &lists[1] {
            let k2 = id.tensor(&kc.eval(x2).expect("pole-free grid"));
            let r_ratio = rc.eval(&ratio_arg(x1, x2)).expect("pole-free grid");
            let r_prod = rc.eval(&product_arg(x1, x2)).expect("pole-free grid");
            evaluated += 1;
            let lhs = r_ratio
                .mul(&k1)?
                .mul(&swap_spaces(&r_prod, s))?
                .mul(&k2)?;
            let rhs = k2
                .mul(&r_prod)?
                .mul(&k1)?
                .mul(&swap_spaces(&r_ratio, s))?;
            if lhs != rhs {
                return Ok(Verdict::fail(evaluated, vec![x1.clone(), x2.clone()]));
            }
        }
    }
    Ok(Verdict::pass(evaluated))
}

/// Unitarity `R12(x) R21(1/x) = Id` and regularity `R(1) = P`, both as
/// exact rational-function identities.
pub fn check_unitarity_regularity_r(r: &Mat<RatFunc>) -> Result<Verdict, ExactError> {
    let s = local_dim(r);
    let at_one = r.try_map(|f| f.eval(&Rat::one()))?;
    let p_lift = permutation(s).map(|v| RatFunc::from_rat(v.clone()));
    if at_one != permutation(s) {
        return Ok(Verdict::symbolic(false));
    }
    let r_inv_arg = r.map(|f| f.subst_x_pow(-1));
    let r21_inv = p_lift.mul(&r_inv_arg)?.mul(&p_lift)?;
    let prod = r.mul(&r21_inv)?;
    Ok(Verdict::symbolic(prod.is_identity()))
}

/// Unitarity `K(x) K(1/x) = Id` and regularity `K(1) = Id`.
pub fn check_unitarity_regularity_k(k: &Mat<RatFunc>) -> Result<Verdict, ExactError> {
    let at_one = k.try_map(|f| f.eval(&Rat::one()))?;
    if !at_one.is_identity() {
        return Ok(Verdict::symbolic(false));
    }
    let prod = k.mul(&k.map(|f| f.subst_x_pow(-1)))?;
    Ok(Verdict::symbolic(prod.is_identity()))
}

use num_traits::One;

/// Recover the local jump operators from derivative combinations of the
/// spectral matrices:
///
/// - asymmetric exclusion: `m = -P R'(1)`, `B = -K'(1)/2`, `Bbar = Kbar'(1)/2`;
/// - diffusion-dissipation: `m = 2 kappa P R'(1)`, `B = kappa K'(1)`,
///   `Bbar = -kappa Kbar'(1)`.
///
/// Must equal [`build_local_operators`] entrywise.
pub fn local_from_spectral(spec: &ModelSpec) -> Result<LocalOperators, ModelError> {
    let deriv_at_one = |m: &Mat<RatFunc>| -> Result<Mat<Rat>, ExactError> {
        m.try_map(|f| f.derivative().eval(&Rat::one()))
    };
    let r = spectral_r(spec)?;
    let k = spectral_k(spec)?;
    let kbar = spectral_kbar(spec)?;
    let s = local_dim(&r);
    let p = permutation(s);
    let pr1 = p.mul(&deriv_at_one(&r)?).map_err(ExactError::from)?;
    let (bulk, left, right) = match spec {
        ModelSpec::Tasep { .. } => (
            pr1.neg(),
            deriv_at_one(&k)?.scale(&(-rat_int(1) / rat_int(2))),
            deriv_at_one(&kbar)?.scale(&(rat_int(1) / rat_int(2))),
        ),
        ModelSpec::Dissep { kappa, .. } => (
            pr1.scale(&(rat_int(2) * kappa)),
            deriv_at_one(&k)?.scale(kappa),
            deriv_at_one(&kbar)?.scale(&-kappa.clone()),
        ),
        ModelSpec::TwoTasep { .. } => {
            return Err(ModelError::UnsupportedModel(spec.name()))
        }
    };
    LocalOperators::new(s, bulk, left, right)
}

/// Run every integrability check of a model at the given grid resolution.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub model: String,
    pub yang_baxter: Verdict,
    pub reflection_left: Verdict,
    pub reflection_right: Verdict,
    pub unitarity_r: Verdict,
    pub unitarity_k: Verdict,
    pub unitarity_kbar: Verdict,
    pub local_link: bool,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.yang_baxter.pass
            && self.reflection_left.pass
            && self.reflection_right.pass
            && self.unitarity_r.pass
            && self.unitarity_k.pass
            && self.unitarity_kbar.pass
            && self.local_link
    }
}

pub fn run_suite(spec: &ModelSpec, points: usize) -> Result<SuiteReport, ModelError> {
    let r = spectral_r(spec)?;
    let k = spectral_k(spec)?;
    let kbar = spectral_kbar(spec)?;
    let local_link = local_from_spectral(spec)? == build_local_operators(spec)?;
    Ok(SuiteReport {
        model: spec.name().to_string(),
        yang_baxter: check_yang_baxter(&r, points)?,
        reflection_left: check_reflection(&r, &k, Side::Left, points)?,
        reflection_right: check_reflection(&r, &kbar, Side::Right, points)?,
        unitarity_r: check_unitarity_regularity_r(&r)?,
        unitarity_k: check_unitarity_regularity_k(&k)?,
        unitarity_kbar: check_unitarity_regularity_k(&kbar)?,
        local_link,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::integrability::matrices::{
        dissep_k, dissep_kbar, dissep_r, tasep_k, tasep_kbar, tasep_r,
    };

    #[test]
    fn tasep_yang_baxter_small_grid() {
        let v = check_yang_baxter(&tasep_r(), 4).unwrap();
        assert!(v.pass, "witness: {:?}", v.witness);
        assert_eq!(v.points, 64);
    }

    #[test]
    fn dissep_yang_baxter_small_grid() {
        let r = dissep_r(&rat_int(3)).unwrap();
        let v = check_yang_baxter(&r, 4).unwrap();
        assert!(v.pass, "witness: {:?}", v.witness);
    }

    #[test]
    fn perturbed_r_fails_with_witness() {
        let mut r = tasep_r();
        let doubled = r.get(1, 2).clone() * RatFunc::from_int(2);
        r.set(1, 2, doubled);
        let v = check_yang_baxter(&r, 3).unwrap();
        assert!(!v.pass);
        assert!(v.witness.is_some());
    }

    #[test]
    fn tasep_reflection_left() {
        let v = check_reflection(&tasep_r(), &tasep_k(&rat(1, 2)), Side::Left, 4).unwrap();
        assert!(v.pass, "witness: {:?}", v.witness);
    }

    #[test]
    fn tasep_reflection_right() {
        let v =
            check_reflection(&tasep_r(), &tasep_kbar(&rat(1, 3)), Side::Right, 4).unwrap();
        assert!(v.pass, "witness: {:?}", v.witness);
    }

    #[test]
    fn dissep_reflection_both_sides() {
        let r = dissep_r(&rat(3, 2)).unwrap();
        let k = dissep_k(&rat(1, 2), &rat(1, 7), &rat(3, 2)).unwrap();
        let kbar = dissep_kbar(&rat(1, 3), &rat(2, 5), &rat(3, 2)).unwrap();
        let v = check_reflection(&r, &k, Side::Left, 4).unwrap();
        assert!(v.pass, "left witness: {:?}", v.witness);
        let v = check_reflection(&r, &kbar, Side::Right, 4).unwrap();
        assert!(v.pass, "right witness: {:?}", v.witness);
    }

    #[test]
    fn perturbed_k_fails() {
        let alpha = rat(1, 2);
        let mut k = tasep_k(&alpha);
        // alpha -> alpha + 1 inside the (1,0) entry only
        let k_wrong = tasep_k(&(alpha + rat_int(1)));
        k.set(1, 0, k_wrong.get(1, 0).clone());
        let v = check_reflection(&tasep_r(), &k, Side::Left, 3).unwrap();
        assert!(!v.pass);
        assert!(v.witness.is_some());
    }

    #[test]
    fn unitarity_and_regularity() {
        assert!(check_unitarity_regularity_r(&tasep_r()).unwrap().pass);
        assert!(check_unitarity_regularity_k(&tasep_k(&rat(2, 3))).unwrap().pass);
        assert!(check_unitarity_regularity_k(&tasep_kbar(&rat(2, 7))).unwrap().pass);
        let r = dissep_r(&rat(5, 4)).unwrap();
        assert!(check_unitarity_regularity_r(&r).unwrap().pass);
        let k = dissep_k(&rat(1, 2), &rat(1, 7), &rat(5, 4)).unwrap();
        assert!(check_unitarity_regularity_k(&k).unwrap().pass);
        let kbar = dissep_kbar(&rat(1, 3), &rat(2, 5), &rat(5, 4)).unwrap();
        assert!(check_unitarity_regularity_k(&kbar).unwrap().pass);

        let mut broken = tasep_r();
        let doubled = broken.get(1, 2).clone() * RatFunc::from_int(2);
        broken.set(1, 2, doubled);
        assert!(!check_unitarity_regularity_r(&broken).unwrap().pass);
    }

    #[test]
    fn derivative_links_match_local_operators() {
        let tasep = ModelSpec::tasep(rat(1, 2), rat(1, 3)).unwrap();
        assert_eq!(
            local_from_spectral(&tasep).unwrap(),
            build_local_operators(&tasep).unwrap()
        );
        let dissep =
            ModelSpec::dissep(rat(1, 2), rat(1, 3), rat(1, 7), rat(2, 5), rat(5, 4)).unwrap();
        assert_eq!(
            local_from_spectral(&dissep).unwrap(),
            build_local_operators(&dissep).unwrap()
        );
    }
}
