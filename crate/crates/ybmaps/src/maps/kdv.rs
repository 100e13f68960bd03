//! The matrix-KdV soliton interaction map on rank-1 polarization data.

use crate::algebra::rational::RatExt;

use super::YbMap;
use crate::algebra::matrix::LaxMatrix;
use crate::algebra::ratfun::RatFun;
use crate::algebra::rational::Rational;
use crate::error::{Result, YbError};
use crate::state::{pairing, KdvSite, Site, SiteKind};

/// The two-soliton polarization exchange:
///
/// ```text
/// ξ̃1 = ξ1 + 2λ2(ξ1,η2)/((λ1−λ2)(ξ2,η2)) ξ2
/// η̃1 = η1 + 2λ2(ξ2,η1)/((λ1−λ2)(ξ2,η2)) η2
/// ξ̃2 = ξ2 + 2λ1(ξ2,η1)/((λ2−λ1)(ξ1,η1)) ξ1
/// η̃2 = η2 + 2λ1(ξ1,η2)/((λ2−λ1)(ξ1,η1)) η1
/// ```
///
/// Velocities stay attached to their slots. Output pairings are checked
/// eagerly so projector construction downstream cannot fail later.
pub fn kdv_r(s1: &KdvSite, s2: &KdvSite) -> Result<(KdvSite, KdvSite)> {
    if s1.d() != s2.d() {
        return Err(YbError::DimensionMismatch(s1.d(), s2.d()));
    }
    let dl = &s1.lambda - &s2.lambda;
    if dl.is_zero() {
        return Err(YbError::Singular("lambda1 = lambda2".into()));
    }
    let p11 = s1.pairing();
    let p22 = s2.pairing();
    let p12 = pairing(s1.xi(), s2.eta());
    let p21 = pairing(s2.xi(), s1.eta());
    let two = Rational::from(2);

    let c1 = &two * &s2.lambda / (&dl * &p22);
    let c2 = &two * &s1.lambda / (-&dl * &p11);

    let comb = |base: &[Rational], dir: &[Rational], c: &Rational| -> Vec<Rational> {
        base.iter().zip(dir).map(|(b, d)| b + c * d).collect()
    };

    let xi1 = comb(s1.xi(), s2.xi(), &(&c1 * &p12));
    let eta1 = comb(s1.eta(), s2.eta(), &(&c1 * &p21));
    let xi2 = comb(s2.xi(), s1.xi(), &(&c2 * &p21));
    let eta2 = comb(s2.eta(), s1.eta(), &(&c2 * &p12));

    let out1 = KdvSite::new(xi1, eta1, s1.lambda.clone())
        .map_err(|_| YbError::Singular("output pairing (xi~1, eta~1) = 0".into()))?;
    let out2 = KdvSite::new(xi2, eta2, s2.lambda.clone())
        .map_err(|_| YbError::Singular("output pairing (xi~2, eta~2) = 0".into()))?;
    Ok((out1, out2))
}

/// The rank-1 projector `P = ξ⊗η/(ξ,η)` as a constant matrix.
pub fn projector_of(s: &KdvSite) -> LaxMatrix {
    let p = s.pairing();
    let d = s.d();
    let rows: Vec<Vec<RatFun>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| RatFun::constant(&s.xi()[i] * &s.eta()[j] / &p))
                .collect()
        })
        .collect();
    LaxMatrix::from_rows(rows).expect("square by construction")
}

/// Projective equality of polarization states: representatives may differ by
/// scale, the projector may not.
pub fn projector_eq(s: &KdvSite, t: &KdvSite) -> bool {
    s.d() == t.d() && projector_of(s) == projector_of(t)
}

pub struct KdvMap;

impl YbMap for KdvMap {
    fn name(&self) -> &str {
        "kdv"
    }

    fn kind(&self) -> Option<SiteKind> {
        Some(SiteKind::Kdv)
    }

    fn apply(&self, x: &Site, y: &Site) -> Result<(Site, Site)> {
        let (a, b) = kdv_r(x.as_kdv()?, y.as_kdv()?)?;
        Ok((Site::Kdv(a), Site::Kdv(b)))
    }
}
