//! wasm-bindgen surface for the browser demo. Three operations are exposed,
//! each taking simple arguments and returning a JSON string so the page
//! needs no generated TypeScript glue:
//!
//! - [`explore_orbit`]: iterate a monodromy map, returning the states,
//!   arithmetic heights and the conservation verdict.
//! - [`verify_relation`]: batch-verify one operator relation on seeded
//!   random exact states.
//! - [`kdv_collision`]: apply the soliton interaction map to a pair of
//!   polarizations and check the refactorization identity.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use ybmaps::cli::{self, Cli, Command, Format, OutputArgs, Relation, VerifyArgs};
use ybmaps::dynamics::{conservation_report, height_series, iterate};
use ybmaps::lax::{refactor_check, LaxFamily};
use ybmaps::maps::{by_name, KdvMap};
use ybmaps::state::parse_state;
use ybmaps::yb::check_reversibility;

#[derive(Serialize)]
struct OrbitOut {
    states: Vec<String>,
    heights: Vec<u64>,
    log_slope: Option<f64>,
    conserved: Option<bool>,
    first_divergence: Option<usize>,
    truncated: Option<String>,
}

fn err_json(e: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": e.to_string() }).to_string()
}

/// Iterates `T_generator` of the named map from a state literal like
/// `"(1,3; 2,1; 1,2)"`. For the adler map the spectral invariants are
/// checked for exact conservation along the orbit.
#[wasm_bindgen]
pub fn explore_orbit(map: &str, state: &str, generator: usize, steps: usize) -> String {
    let run = || -> ybmaps::Result<OrbitOut> {
        let map = by_name(map)
            .ok_or_else(|| ybmaps::YbError::Config(format!("unknown map {map:?}")))?;
        let start = parse_state(state)?;
        let orbit = iterate(map.as_ref(), &start, generator, steps);
        let series = height_series(&orbit);
        let family = match start.kind() {
            ybmaps::state::SiteKind::Dressing => Some(LaxFamily::Dressing),
            ybmaps::state::SiteKind::Kdv => Some(LaxFamily::Kdv),
            ybmaps::state::SiteKind::Scalar => None,
        };
        let report = family
            .map(|f| conservation_report(f, &orbit))
            .transpose()?;
        Ok(OrbitOut {
            states: orbit.states.iter().map(|s| s.to_string()).collect(),
            heights: series.heights,
            log_slope: series.log_slope,
            conserved: report.as_ref().map(|r| r.conserved),
            first_divergence: report.and_then(|r| r.first_divergence),
            truncated: orbit.truncated_at.map(|(k, msg)| format!("step {k}: {msg}")),
        })
    };
    match run() {
        Ok(out) => serde_json::to_string(&out).unwrap_or_else(err_json),
        Err(e) => err_json(e),
    }
}

/// Runs the `verify` subcommand machinery directly and returns the result
/// document as JSON.
#[wasm_bindgen]
pub fn verify_relation(map: &str, relation: &str, samples: usize, seed: u64) -> String {
    let relation = match relation {
        "yang-baxter" => Relation::YangBaxter,
        "reversibility" => Relation::Reversibility,
        "commutativity" => Relation::Commutativity,
        "product-identity" => Relation::ProductIdentity,
        "braid" => Relation::Braid,
        "involution" => Relation::Involution,
        other => return err_json(format!("unknown relation {other:?}")),
    };
    let parsed = Cli {
        command: Command::Verify(VerifyArgs {
            map: map.to_string(),
            relation,
            n: None,
            d: 2,
            samples,
            seed,
            out: OutputArgs {
                format: Format::Json,
                output: None,
                no_timestamp: true,
            },
        }),
    };
    match cli::run(&parsed) {
        Ok(doc) => cli::to_json(&doc),
        Err(e) => err_json(e),
    }
}

#[derive(Serialize)]
struct CollisionOut {
    out1: String,
    out2: String,
    reversible: bool,
    refactorizes: bool,
}

/// Collides two solitons given as a state literal
/// `"([xi1],[eta1],l1; [xi2],[eta2],l2)"` and reports the outgoing
/// polarizations, the reversibility check and the Lax refactorization
/// verdict.
#[wasm_bindgen]
pub fn kdv_collision(state: &str) -> String {
    let run = || -> ybmaps::Result<CollisionOut> {
        let pair = parse_state(state)?;
        let x = pair.site(1)?;
        let y = pair.site(2)?;
        let (a, b) = ybmaps::yb::apply_r(&KdvMap, x, y)?;
        Ok(CollisionOut {
            out1: a.to_string(),
            out2: b.to_string(),
            reversible: check_reversibility(&KdvMap, &pair)?,
            refactorizes: refactor_check(LaxFamily::Kdv, &KdvMap, x, y)?,
        })
    };
    match run() {
        Ok(out) => serde_json::to_string(&out).unwrap_or_else(err_json),
        Err(e) => err_json(e),
    }
}
