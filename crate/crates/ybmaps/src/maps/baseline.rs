//! Trivial baseline maps: identity, the factor swap, and the non-example
//! `R(x,y) = (x+y, y)` used by the falsification suite.

use super::YbMap;
use crate::error::Result;
use crate::state::{Site, SiteKind};

pub struct IdentityMap;

impl YbMap for IdentityMap {
    fn name(&self) -> &str {
        "identity"
    }

    fn kind(&self) -> Option<SiteKind> {
        None
    }

    fn apply(&self, x: &Site, y: &Site) -> Result<(Site, Site)> {
        Ok((x.clone(), y.clone()))
    }
}

pub struct PermutationMap;

impl YbMap for PermutationMap {
    fn name(&self) -> &str {
        "permutation"
    }

    fn kind(&self) -> Option<SiteKind> {
        None
    }

    fn apply(&self, x: &Site, y: &Site) -> Result<(Site, Site)> {
        Ok((y.clone(), x.clone()))
    }
}

/// `R(x,y) = (x+y, y)` on scalars. Not a Yang-Baxter map; kept as a negative
/// control for every verifier.
pub struct SumLeftMap;

impl YbMap for SumLeftMap {
    fn name(&self) -> &str {
        "sumleft"
    }

    fn kind(&self) -> Option<SiteKind> {
        Some(SiteKind::Scalar)
    }

    fn apply(&self, x: &Site, y: &Site) -> Result<(Site, Site)> {
        let a = x.as_scalar()?;
        let b = y.as_scalar()?;
        Ok((Site::scalar(a + b), Site::scalar(b.clone())))
    }
}
