//! Two-variable Laurent polynomials over the rationals.
//!
//! The symbolic exchange-relation checks work with words whose coefficients
//! depend on two spectral parameters (or on the two boundary rates) only
//! through monomials `x^i y^j` with integer exponents of either sign, so a
//! sparse exponent map is all that is needed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::scalar::{FromRat, Rat};

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Laurent2 {
    terms: BTreeMap<(i64, i64), Rat>,
}

impl Laurent2 {
    pub fn zero() -> Self {
        Laurent2::default()
    }

    pub fn from_rat(c: Rat) -> Self {
        Laurent2::monomial(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Laurent2::from_rat(Rat::from_integer(n.into()))
    }

    /// `c * x^i * y^j`.
    pub fn monomial(c: Rat, i: i64, j: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Laurent2 { terms }
    }

    /// First variable `x`.
    pub fn x() -> Self {
        Laurent2::monomial(Rat::one(), 1, 0)
    }

    /// Second variable `y`.
    pub fn y() -> Self {
        Laurent2::monomial(Rat::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: i64, j: i64) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    fn insert(&mut self, key: (i64, i64), c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }
}

impl Add for Laurent2 {
    type Output = Laurent2;
    fn add(mut self, rhs: Laurent2) -> Laurent2 {
        for (k, c) in rhs.terms {
            self.insert(k, c);
        }
        self
    }
}

impl Sub for Laurent2 {
    type Output = Laurent2;
    fn sub(self, rhs: Laurent2) -> Laurent2 {
        self + (-rhs)
    }
}

impl Neg for Laurent2 {
    type Output = Laurent2;
    fn neg(mut self) -> Laurent2 {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for Laurent2 {
    type Output = Laurent2;
    fn mul(self, rhs: Laurent2) -> Laurent2 {
        let mut out = Laurent2::zero();
        for ((i1, j1), a) in &self.terms {
            for ((i2, j2), b) in &rhs.terms {
                out.insert((i1 + i2, j1 + j2), a * b);
            }
        }
        out
    }
}

impl Zero for Laurent2 {
    fn zero() -> Self {
        Laurent2::zero()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl One for Laurent2 {
    fn one() -> Self {
        Laurent2::from_rat(Rat::one())
    }
}

impl FromRat for Laurent2 {
    fn from_rat(r: &Rat) -> Self {
        Laurent2::from_rat(r.clone())
    }
}

impl fmt::Display for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if *i != 0 {
                write!(f, "*x^{i}")?;
            }
            if *j != 0 {
                write!(f, "*y^{j}")?;
            }
        }
        Ok(())
    }
}

/// Substitute `x -> x/y` into a univariate rational function, returning the
/// pair `(num, den)` of Laurent polynomials with `f(x/y) = num / den`.
///
/// Both parts are multiplied by the same power of `y`, so the pair is exact.
pub fn ratio_subst(f: &RatFunc) -> (Laurent2, Laurent2) {
    let d = f
        .num()
        .degree()
        .unwrap_or(0)
        .max(f.den().degree().unwrap_or(0)) as i64;
    let lift = |p: &Poly| {
        let mut out = Laurent2::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.insert((k as i64, d - k as i64), c.clone());
            }
        }
        out
    };
    (lift(f.num()), lift(f.den()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Poly;
    use crate::exact::scalar::{rat, rat_int};

    #[test]
    fn ring_operations() {
        let x = Laurent2::x();
        let y = Laurent2::y();
        let xy_inv = Laurent2::monomial(rat_int(1), 1, -1);
        assert_eq!(x.clone() * Laurent2::monomial(rat_int(1), 0, -1), xy_inv);
        let sum = x.clone() + y.clone();
        let prod = sum.clone() * sum;
        // (x + y)^2 = x^2 + 2xy + y^2
        assert_eq!(prod.coeff(2, 0), rat_int(1));
        assert_eq!(prod.coeff(1, 1), rat_int(2));
        assert_eq!(prod.coeff(0, 2), rat_int(1));
        assert!((x.clone() - x).is_zero());
    }

    #[test]
    fn ratio_substitution() {
        // f = (1 - x) / (1 + x) becomes (y - x) / (y + x) after x -> x/y.
        let f = RatFunc::new(
            Poly::from_coeffs(vec![rat_int(1), rat_int(-1)]),
            Poly::from_coeffs(vec![rat_int(1), rat_int(1)]),
        )
        .unwrap();
        let (num, den) = ratio_subst(&f);
        assert_eq!(num, Laurent2::y() - Laurent2::x());
        assert_eq!(den, Laurent2::y() + Laurent2::x());
        // Constants stay constant up to the shared y-power convention.
        let c = RatFunc::from_rat(rat(3, 2));
        let (num, den) = ratio_subst(&c);
        assert_eq!(num, Laurent2::monomial(rat(3, 2), 0, 0));
        assert_eq!(den, Laurent2::one());
    }
}
