//! Rational functions in one variable, kept canonical at all times: the
//! denominator is monic and coprime to the numerator, so structural equality
//! is equality in the fraction field.

use std::fmt;

use super::rational::RatExt;

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Result, YbError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(YbError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFun {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero denominator").clone();
        let num = num.scale(&(Rational::one() / &lead));
        let den = den.monic();
        RatFun { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFun::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RatFun::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn var() -> Self {
        RatFun::from_poly(Poly::var())
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

    pub fn is_polynomial(&self) -> bool {
        self.den == Poly::one()
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        Self::canonical(num, self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        Self::canonical(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &RatFun) -> Result<RatFun> {
        if other.is_zero() {
            return Err(YbError::DivisionByZero);
        }
        Ok(Self::canonical(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        Self::canonical(self.num.scale(c), self.den.clone())
    }

    /// Evaluation at a point; errors when the point is a pole.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(YbError::Singular(format!("pole at {x}")));
        }
        Ok(self.num.eval(x) / d)
    }
}

/// Identity of two rational functions via cross-multiplication, independent of
/// canonicalization. With canonical representatives this agrees with `==`.
pub fn ratfun_eq(a: &RatFun, b: &RatFun) -> bool {
    a.num.mul(&b.den) == b.num.mul(&a.den)
}

/// Substitutes a rational function for the variable of a polynomial.
pub fn compose_poly(p: &Poly, arg: &RatFun) -> RatFun {
    let mut acc = RatFun::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(arg).add(&RatFun::constant(c.clone()));
    }
    acc
}

/// Substitutes a rational function into another: `f(g(z))`.
pub fn compose(f: &RatFun, g: &RatFun) -> Result<RatFun> {
    compose_poly(f.num(), g).div(&compose_poly(f.den(), g))
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
