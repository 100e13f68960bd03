//! Orbit iteration of the monodromy maps, exact conservation reports and the
//! height-growth diagnostic.

use crate::error::{Result, YbError};
use crate::lax::{spectral_invariants, LaxFamily, SpectralInvariants};
use crate::maps::YbMap;
use crate::state::{kind_mismatch, TupleState};
use crate::yb::apply_ti;

/// A forward orbit of one monodromy map. Consecutive states are related by a
/// single application of `T_i`; the orbit truncates at the first singularity
/// and records it instead of failing.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub map_name: String,
    pub generator: usize,
    pub states: Vec<TupleState>,
    /// Step index and reason, when iteration hit a singular input.
    pub truncated_at: Option<(usize, String)>,
}

pub fn iterate(map: &dyn YbMap, start: &TupleState, i: usize, steps: usize) -> Orbit {
    let mut states = vec![start.clone()];
    let mut truncated_at = None;
    for k in 0..steps {
        match apply_ti(map, states.last().expect("nonempty"), i) {
            Ok(next) => states.push(next),
            Err(e) => {
                truncated_at = Some((k + 1, e.to_string()));
                break;
            }
        }
    }
    Orbit {
        map_name: map.name().to_string(),
        generator: i,
        states,
        truncated_at,
    }
}

/// Per-step spectral invariants with an exact equality verdict.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub per_step: Vec<SpectralInvariants>,
    pub conserved: bool,
    pub first_divergence: Option<usize>,
    /// Steps whose invariants could not be computed, with the reason.
    pub errors: Vec<(usize, String)>,
}

pub fn conservation_report(family: LaxFamily, orbit: &Orbit) -> Result<InvariantReport> {
    if orbit.states.is_empty() {
        return Err(YbError::Config("empty orbit".into()));
    }
    if orbit.states[0].kind() != family.kind() {
        return Err(kind_mismatch(family.kind(), orbit.states[0].kind()));
    }
    let mut per_step = Vec::with_capacity(orbit.states.len());
    let mut errors = Vec::new();
    let mut first_divergence = None;
    for (k, s) in orbit.states.iter().enumerate() {
        match spectral_invariants(family, s) {
            Ok(inv) => {
                if first_divergence.is_none() {
                    if let Some(first) = per_step.first() {
                        if &inv != first {
                            first_divergence = Some(k);
                        }
                    }
                }
                per_step.push(inv);
            }
            Err(YbError::Singular(msg)) => errors.push((k, msg)),
            Err(e) => return Err(e),
        }
    }
    Ok(InvariantReport {
        conserved: first_divergence.is_none() && errors.is_empty(),
        first_divergence,
        per_step,
        errors,
    })
}

/// Arithmetic heights along an orbit with least-squares slope diagnostics.
/// The slopes are reported, never asserted.
#[derive(Debug, Clone)]
pub struct HeightSeries {
    /// Max bit-length over all rational components, per step.
    pub heights: Vec<u64>,
    /// Slope of log h_k against k over the fit window (exponential signature).
    pub log_slope: Option<f64>,
    /// Slope of log log h_k against log k over the window (polynomial degree).
    pub loglog_slope: Option<f64>,
    /// Fit window: the last half of the series.
    pub window: (usize, usize),
}

pub fn height_series(orbit: &Orbit) -> HeightSeries {
    let heights: Vec<u64> = orbit.states.iter().map(TupleState::height).collect();
    let len = heights.len();
    let start = len / 2;
    let window = (start, len);
    let fit = |points: Vec<(f64, f64)>| -> Option<f64> {
        if points.len() < 2 {
            return None;
        }
        let n = points.len() as f64;
        let sx: f64 = points.iter().map(|p| p.0).sum();
        let sy: f64 = points.iter().map(|p| p.1).sum();
        let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
        let denom = n * sxx - sx * sx;
        if denom.abs() < 1e-12 {
            return None;
        }
        Some((n * sxy - sx * sy) / denom)
    };
    let log_slope = fit((start..len)
        .map(|k| (k as f64, (heights[k] as f64).ln()))
        .collect());
    let loglog_slope = fit((start.max(1)..len)
        .filter(|&k| heights[k] > 1)
        .map(|k| ((k as f64).ln(), (heights[k] as f64).ln().ln()))
        .collect());
    HeightSeries {
        heights,
        log_slope,
        loglog_slope,
        window,
    }
}

/// Path-independence scan over words in two commuting generators.
#[derive(Debug, Clone)]
pub struct FlowScanReport {
    pub depth: usize,
    pub words_checked: usize,
    pub consistent: bool,
    pub failures: Vec<String>,
}

/// Walks every word of length ≤ `depth` in {T_1, T_2} and checks that words
/// with the same exponent multiset agree exactly on `s`.
pub fn commuting_flow_scan(
    map: &dyn YbMap,
    s: &TupleState,
    depth: usize,
) -> Result<FlowScanReport> {
    let mut words_checked = 0;
    let mut failures = Vec::new();
    for len in 1..=depth {
        for bits in 0u32..(1 << len) {
            let word: Vec<usize> = (0..len)
                .map(|b| if bits >> b & 1 == 0 { 1 } else { 2 })
                .collect();
            words_checked += 1;
            // reference path: all T_1 applications first
            let ones = word.iter().filter(|&&g| g == 1).count();
            let mut reference = s.clone();
            for _ in 0..ones {
                reference = apply_ti(map, &reference, 1)?;
            }
            for _ in ones..len {
                reference = apply_ti(map, &reference, 2)?;
            }
            let mut walked = s.clone();
            for &g in word.iter().rev() {
                walked = apply_ti(map, &walked, g)?;
            }
            if walked != reference {
                failures.push(format!("word {word:?} disagrees with sorted path"));
            }
        }
    }
    Ok(FlowScanReport {
        depth,
        words_checked,
        consistent: failures.is_empty(),
        failures,
    })
}
