//! Arbitrary-precision rationals, the ground field for every identity checked
//! by this crate. Values serialize as `"p/q"` (or `"p"` when `q = 1`), which is
//! exactly what [`malachite_q::Rational`]'s `Display` produces.
//!
//! The malachite backend matters for the dynamics module: orbit heights grow
//! quadratically with the step count, and its subquadratic gcd keeps
//! 100k-bit reductions tractable where a schoolbook gcd stalls.

use std::str::FromStr;

use malachite_base::num::basic::traits::{One as _, Zero as _};
use malachite_base::num::logic::traits::SignificantBits;
use malachite_nz::integer::Integer;

use crate::error::{Result, YbError};

pub type Rational = malachite_q::Rational;

/// The handful of num-traits-style helpers the rest of the crate leans on,
/// expressed over the malachite backend.
pub trait RatExt {
    fn zero() -> Rational;
    fn one() -> Rational;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn abs_val(&self) -> Rational;
}

impl RatExt for Rational {
    fn zero() -> Rational {
        Rational::ZERO
    }

    fn one() -> Rational {
        Rational::ONE
    }

    fn is_zero(&self) -> bool {
        *self == Rational::ZERO
    }

    fn is_one(&self) -> bool {
        *self == Rational::ONE
    }

    fn abs_val(&self) -> Rational {
        if *self < Rational::ZERO {
            -self
        } else {
            self.clone()
        }
    }
}

/// Shorthand for `n/d` from machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::from_signeds(n, d)
}

/// Shorthand for an integer rational.
pub fn rint(n: i64) -> Rational {
    Rational::from(n)
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || YbError::Parse(format!("bad rational {s:?}"));
    let t = s.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let n = Integer::from_str(n.trim()).map_err(|_| bad())?;
            let d = Integer::from_str(d.trim()).map_err(|_| bad())?;
            if d == 0 {
                return Err(YbError::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::from_integers(n, d))
        }
        None => {
            let n = Integer::from_str(t).map_err(|_| bad())?;
            Ok(Rational::from(n))
        }
    }
}

/// Bit length of a rational: the maximum bit length of numerator and
/// denominator, at least 1. Used as the arithmetic-height proxy.
pub fn bit_length(r: &Rational) -> u64 {
    let nbits = r.numerator_ref().significant_bits();
    let dbits = r.denominator_ref().significant_bits();
    nbits.max(dbits).max(1)
}
