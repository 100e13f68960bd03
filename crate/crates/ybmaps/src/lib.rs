//! Exact-arithmetic toolkit for Yang-Baxter maps and their monodromy
//! dynamics.
//!
//! Everything is computed over arbitrary-precision rationals, so every
//! identity this crate checks — the Yang-Baxter relation, reversibility,
//! commutativity of the monodromy maps, braid relations, conservation of the
//! spectral invariants and the matrix refactorization identity — is verified
//! with zero tolerance. Floating point appears only in the height-growth
//! slope diagnostic, which is reported and never asserted.
//!
//! Layout:
//! - [`algebra`]: rationals, polynomials, rational functions and matrices
//!   over the spectral variable.
//! - [`state`]: sites (dressing, KdV, scalar) and homogeneous tuple states.
//! - [`maps`]: the built-in two-site maps and their registry.
//! - [`yb`]: the operator calculus `R_ij`, `P_ij`, ω, `S_i`, `T_i` and the
//!   exact relation verifiers.
//! - [`lax`]: matrix families, monodromy matrices, spectral invariants and
//!   refactorization.
//! - [`dynamics`]: orbit iteration, conservation reports, height series.
//! - [`sample`]: seeded random exact states.
//! - [`cli`]: machinery behind the `ybmaps` command-line tool.

pub mod algebra {
    pub mod matrix;
    pub mod poly;
    pub mod ratfun;
    pub mod rational;
}

pub mod cli;
pub mod dynamics;
pub mod error;
pub mod lax;
pub mod maps;
pub mod sample;
pub mod state;
pub mod yb;

pub use error::{Result, YbError};
