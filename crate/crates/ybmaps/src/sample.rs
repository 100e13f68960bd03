//! Seeded random exact states. Numerators are drawn from a small integer box
//! and denominators kept small so that long compositions stay tractable.

use crate::algebra::rational::RatExt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::rational::{rat, Rational};
use crate::error::Result;
use crate::state::{KdvSite, Site, SiteKind, TupleState};

pub const DEFAULT_NUM_BOUND: i64 = 20;
pub const DEFAULT_DEN_BOUND: i64 = 10;

pub struct Sampler {
    rng: ChaCha8Rng,
    num_bound: i64,
    den_bound: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            num_bound: DEFAULT_NUM_BOUND,
            den_bound: DEFAULT_DEN_BOUND,
        }
    }

    pub fn rational(&mut self) -> Rational {
        let n = self.rng.gen_range(-self.num_bound..=self.num_bound);
        let d = self.rng.gen_range(1..=self.den_bound);
        rat(n, d)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    fn kdv_site(&mut self, d: usize) -> KdvSite {
        loop {
            let xi: Vec<Rational> = (0..d).map(|_| self.rational()).collect();
            let eta: Vec<Rational> = (0..d).map(|_| self.rational()).collect();
            let lambda = self.nonzero_rational();
            if let Ok(s) = KdvSite::new(xi, eta, lambda) {
                return s;
            }
        }
    }

    /// A random homogeneous tuple. KdV tuples get pairwise distinct
    /// velocities so that no pair interaction is singular by construction.
    pub fn tuple(&mut self, kind: SiteKind, n: usize, d: usize) -> Result<TupleState> {
        let sites = match kind {
            SiteKind::Dressing => (0..n)
                .map(|_| Site::dressing(self.rational(), self.rational()))
                .collect(),
            SiteKind::Scalar => (0..n).map(|_| Site::scalar(self.rational())).collect(),
            SiteKind::Kdv => {
                let mut sites: Vec<Site> = Vec::with_capacity(n);
                while sites.len() < n {
                    let s = self.kdv_site(d);
                    let clash = sites.iter().any(|t| match t {
                        Site::Kdv(k) => k.lambda == s.lambda,
                        _ => false,
                    });
                    if !clash {
                        sites.push(Site::Kdv(s));
                    }
                }
                sites
            }
        };
        TupleState::new(sites)
    }
}
