//! Arbitrary-precision rational scalars.
//!
//! Every rate constant and every matrix entry in the exact pipeline is a
//! `Rat`. [`num_rational::BigRational`] already maintains the canonical form
//! we rely on everywhere (reduced fraction, positive denominator), so the
//! toolkit builds directly on it instead of wrapping a new type.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::ExactError;

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;

/// Rational `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse an exact rational literal: `"p"`, `"p/q"`, with optional sign.
pub fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    let s = s.trim();
    let bad = || ExactError::BadRationalLiteral(s.to_string());
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num_s.parse().map_err(|_| bad())?;
    let den: BigInt = match den_s {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Render as `"p"` or `"p/q"` (the wire format for exact values).
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Shadow value in floating point (diagnostics and simulation only).
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back through a quotient of lossy halves for extreme operands.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// `r^k` for signed `k`; negative exponents require `r != 0`.
pub fn pow_i(r: &Rat, k: i64) -> Result<Rat, ExactError> {
    if k >= 0 {
        Ok(pow_u(r, k as u64))
    } else if r.is_zero() {
        Err(ExactError::ZeroToNegativePower)
    } else {
        Ok(pow_u(&r.recip(), (-k) as u64))
    }
}

fn pow_u(r: &Rat, mut k: u64) -> Rat {
    let mut base = r.clone();
    let mut acc = Rat::from_integer(BigInt::from(1));
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// True if `r >= 0`.
pub fn is_nonnegative(r: &Rat) -> bool {
    !r.is_negative()
}

/// Coefficient rings that can absorb a rational scalar (rule coefficients of
/// the rewriting systems are rationals; word coefficients may be rational
/// functions or Laurent polynomials).
pub trait FromRat {
    fn from_rat(r: &Rat) -> Self;
}

impl FromRat for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}
