//! Adler's map, the symmetry of the periodic dressing chain.

use crate::algebra::rational::RatExt;

use super::YbMap;
use crate::error::{Result, YbError};
use crate::state::{DressingSite, Site, SiteKind};

/// `f̃1 = f2 − (β1 − β2)/(f1 + f2)`, `f̃2 = f1 − (β2 − β1)/(f1 + f2)`;
/// the chain parameters stay attached to their slots.
pub fn adler_r(x1: &DressingSite, x2: &DressingSite) -> Result<(DressingSite, DressingSite)> {
    let denom = &x1.f + &x2.f;
    if denom.is_zero() {
        return Err(YbError::Singular("f1 + f2 = 0".into()));
    }
    let delta = (&x1.beta - &x2.beta) / &denom;
    Ok((
        DressingSite {
            f: &x2.f - &delta,
            beta: x1.beta.clone(),
        },
        DressingSite {
            f: &x1.f + &delta,
            beta: x2.beta.clone(),
        },
    ))
}

pub struct AdlerMap;

impl YbMap for AdlerMap {
    fn name(&self) -> &str {
        "adler"
    }

    fn kind(&self) -> Option<SiteKind> {
        Some(SiteKind::Dressing)
    }

    fn apply(&self, x: &Site, y: &Site) -> Result<(Site, Site)> {
        let (a, b) = adler_r(x.as_dressing()?, y.as_dressing()?)?;
        Ok((Site::Dressing(a), Site::Dressing(b)))
    }
}
