//! Univariate rational functions with exact coefficients.
//!
//! The canonical form (gcd removed, monic denominator) makes derived equality
//! mathematical equality, which the integrability checks lean on when they
//! assert identities like `R(x) R(1/x) = Id` symbolically.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::scalar::{format_rat, FromRat, Rat};
use crate::error::ExactError;

#[derive(Debug, Clone, PartialEq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// `num / den`, canonicalized. Errors if `den` is the zero polynomial.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let inv = Poly::constant(lead.recip());
            num = num * inv.clone();
            den = den * inv;
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_rat(Rat::from_integer(n.into()))
    }

    /// The identity function `x`.
    pub fn x() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().map_or(true, |d| d == 0) && self.den.degree() == Some(0)
    }

    /// Exact evaluation; a vanishing denominator is a pole error.
    pub fn eval(&self, x: &Rat) -> Result<Rat, ExactError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ExactError::Pole(format_rat(x)));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Quotient rule, canonicalized.
    pub fn derivative(&self) -> RatFunc {
        let num = self.num.derivative() * self.den.clone()
            - self.num.clone() * self.den.derivative();
        let den = self.den.clone() * self.den.clone();
        Self::reduced(num, den)
    }

    /// Multiplicative inverse; errors on the zero function.
    pub fn inv(&self) -> Result<RatFunc, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    /// Composition `f(x^k)` for any nonzero integer `k`.
    ///
    /// Negative `k` goes through `f(1/x)`, realized by reversing numerator
    /// and denominator coefficients against a common `x^d` factor.
    pub fn subst_x_pow(&self, k: i64) -> RatFunc {
        assert!(k != 0, "power substitution needs k != 0");
        if self.is_zero() {
            return RatFunc::zero();
        }
        let f = if k < 0 {
            let d = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
            Self::reduced(self.num.reversed(d), self.den.reversed(d))
        } else {
            self.clone()
        };
        let p = k.unsigned_abs() as usize;
        if p == 1 {
            f
        } else {
            Self::reduced(f.num.subst_x_pow(p), f.den.subst_x_pow(p))
        }
    }

    /// Composition `f(c * x)` for `c != 0`.
    pub fn scale_arg(&self, c: &Rat) -> RatFunc {
        assert!(!c.is_zero(), "argument scale must be nonzero");
        Self::reduced(self.num.scale_arg(c), self.den.scale_arg(c))
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        let num = self.num * rhs.den.clone() + rhs.num * self.den.clone();
        RatFunc::reduced(num, self.den * rhs.den)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + (-rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        RatFunc::reduced(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    /// Panics on division by the zero function; use [`RatFunc::inv`] to check.
    fn div(self, rhs: RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFunc::reduced(self.num * rhs.den, self.den * rhs.num)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
}

impl FromRat for RatFunc {
    fn from_rat(r: &Rat) -> Self {
        RatFunc::from_rat(r.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.coeff(0).is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
