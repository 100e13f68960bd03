//! Product maps `R(x,y) = (p(x), q(y))` built from a pair of univariate
//! rational maps. Such a map satisfies the Yang-Baxter relation exactly when
//! `p` and `q` commute under composition.

use super::YbMap;
use crate::algebra::ratfun::{compose, ratfun_eq, RatFun};
use crate::error::{Result, YbError};
use crate::state::{Site, SiteKind, TupleState};
use crate::yb::check_yb;

#[derive(Debug, Clone)]
pub struct LyubashenkoPair {
    pub p: RatFun,
    pub q: RatFun,
}

impl LyubashenkoPair {
    pub fn new(p: RatFun, q: RatFun) -> Result<Self> {
        let constant = |r: &RatFun| r.num().is_constant() && r.den().is_constant();
        if constant(&p) || constant(&q) {
            return Err(YbError::Config("p and q must be nonconstant".into()));
        }
        Ok(LyubashenkoPair { p, q })
    }

    /// Exact test of `p ∘ q = q ∘ p` as rational functions.
    pub fn commute(&self) -> Result<bool> {
        let pq = compose(&self.p, &self.q)?;
        let qp = compose(&self.q, &self.p)?;
        Ok(ratfun_eq(&pq, &qp))
    }
}

pub struct LyubashenkoMap {
    pair: LyubashenkoPair,
}

impl LyubashenkoMap {
    pub fn new(pair: LyubashenkoPair) -> Self {
        LyubashenkoMap { pair }
    }

    /// The monomial pair p(z) = z^a, q(z) = z^b (always commuting).
    pub fn powers(a: usize, b: usize) -> Self {
        let mono = |k: usize| {
            let mut coeffs = vec![crate::algebra::rational::rint(0); k + 1];
            coeffs[k] = crate::algebra::rational::rint(1);
            RatFun::from_poly(crate::algebra::poly::Poly::from_coeffs(coeffs))
        };
        LyubashenkoMap {
            pair: LyubashenkoPair {
                p: mono(a),
                q: mono(b),
            },
        }
    }

    pub fn pair(&self) -> &LyubashenkoPair {
        &self.pair
    }
}

impl YbMap for LyubashenkoMap {
    fn name(&self) -> &str {
        "lyubashenko"
    }

    fn kind(&self) -> Option<SiteKind> {
        Some(SiteKind::Scalar)
    }

    fn apply(&self, x: &Site, y: &Site) -> Result<(Site, Site)> {
        let a = self.pair.p.eval(x.as_scalar()?)?;
        let b = self.pair.q.eval(y.as_scalar()?)?;
        Ok((Site::scalar(a), Site::scalar(b)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationVerdict {
    /// Whether p ∘ q = q ∘ p as rational functions.
    pub maps_commute: bool,
    pub yb_pass: usize,
    pub yb_fail: usize,
    pub skipped: usize,
    /// True iff every non-singular sampled triple agreed with `maps_commute`.
    pub consistent: bool,
}

/// Checks, over the given scalar triples, that the Yang-Baxter verdict of the
/// product map matches the commutativity of `p` and `q`.
pub fn lyubashenko_yb_iff_commute(
    pair: &LyubashenkoPair,
    triples: &[TupleState],
) -> Result<CommutationVerdict> {
    let maps_commute = pair.commute()?;
    let map = LyubashenkoMap::new(pair.clone());
    let mut yb_pass = 0;
    let mut yb_fail = 0;
    let mut skipped = 0;
    let mut consistent = true;
    for t in triples {
        match check_yb(&map, t) {
            Ok(true) => {
                yb_pass += 1;
                if !maps_commute {
                    consistent = false;
                }
            }
            Ok(false) => {
                yb_fail += 1;
                if maps_commute {
                    consistent = false;
                }
            }
            Err(YbError::Singular(_)) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(CommutationVerdict {
        maps_commute,
        yb_pass,
        yb_fail,
        skipped,
        consistent,
    })
}
