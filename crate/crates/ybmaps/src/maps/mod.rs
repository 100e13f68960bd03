//! Concrete Yang-Baxter maps and the registry the CLI resolves names
//! against.

mod adler;
mod baseline;
mod kdv;
mod lyubashenko;

pub use adler::{adler_r, AdlerMap};
pub use baseline::{IdentityMap, PermutationMap, SumLeftMap};
pub use kdv::{kdv_r, projector_eq, projector_of, KdvMap};
pub use lyubashenko::{lyubashenko_yb_iff_commute, CommutationVerdict, LyubashenkoMap, LyubashenkoPair};

use crate::error::Result;
use crate::state::{Site, SiteKind};

/// A two-in/two-out map `(x, y) ↦ (f(x,y), g(x,y))`. Spectral parameters
/// travel inside the sites according to each map's own rule.
pub trait YbMap {
    fn name(&self) -> &str;

    /// The site kind this map acts on; `None` means any kind (the map only
    /// moves sites around without touching their payload).
    fn kind(&self) -> Option<SiteKind>;

    fn apply(&self, x: &Site, y: &Site) -> Result<(Site, Site)>;
}

/// Resolves a map by registry name. The Lyubashenko entry uses the
/// commuting power pair p(z) = z^2, q(z) = z^3.
pub fn by_name(name: &str) -> Option<Box<dyn YbMap>> {
    match name {
        "adler" => Some(Box::new(AdlerMap)),
        "kdv" => Some(Box::new(KdvMap)),
        "lyubashenko" => Some(Box::new(LyubashenkoMap::powers(2, 3))),
        "identity" => Some(Box::new(IdentityMap)),
        "permutation" => Some(Box::new(PermutationMap)),
        "sumleft" => Some(Box::new(SumLeftMap)),
        _ => None,
    }
}

/// Registry names accepted by [`by_name`].
pub const MAP_NAMES: &[&str] = &[
    "adler",
    "kdv",
    "lyubashenko",
    "identity",
    "permutation",
    "sumleft",
];
