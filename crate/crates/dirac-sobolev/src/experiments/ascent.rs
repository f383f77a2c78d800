//! `ratio_maximize`: stochastic ascent on the norm ratio
//! `‖f‖_{S,1,p} / ‖f‖_{D,1,p}` over the unit sphere of the Dirac–Sobolev
//! norm.
//!
//! Starting from a random Gaussian spinor, each step draws a random
//! band-limited direction `v` with `‖v‖_{D,1,p} = 1`, tries
//! `f ± η·v`, and keeps the better candidate when it improves the ratio.
//! The walk stops after `steps` iterations or [`STALL_LIMIT`] consecutive
//! non-improvements.
//!
//! The two supported exponents behave oppositely, and that asymmetry is
//! the point:
//!
//! * `p = 1` — the ratio is unbounded; ascent makes visible progress
//!   (`ratio_improved`).
//! * `p = 2` — the two norms coincide, so the ratio is pinned at `1` and
//!   the search can find nothing (`p2_ratio_invariant`); the walk stalls
//!   out after [`STALL_LIMIT`] rejected steps.
//!
//! The trajectory is a pure function of the seed: the direction stream
//! never depends on accept/reject history.

use crate::error::{Error, Result};
use crate::experiments::{record_grid, rng_stream};
use crate::generators::{band_limit_cap, random_band_limited_spinor, random_gaussian_spinor};
use crate::grid::GridSpec;
use crate::norms::{dirac_sobolev_norm, norm_report};
use crate::report::{ExperimentReport, Row};

/// Consecutive rejected steps before the walk gives up.
pub const STALL_LIMIT: usize = 25;

/// Minimum ratio gain counted as an improvement.
const ACCEPT_EPS: f64 = 1e-12;

/// Gain the `p = 1` run must realize to pass.
const IMPROVEMENT_MIN: f64 = 1e-3;

/// Deviation from `1` tolerated in the `p = 2` run.
const P2_TOL: f64 = 1e-9;

/// Runs the ascent. Supported exponents: `p ∈ {1, 2}`.
pub fn ratio_maximize(
    grid: GridSpec,
    p: f64,
    steps: usize,
    step_size: f64,
    seed: u64,
) -> Result<ExperimentReport> {
    if p != 1.0 && p != 2.0 {
        return Err(Error::InvalidParam(format!(
            "ratio ascent supports p = 1 or p = 2, got {p}"
        )));
    }
    if steps == 0 {
        return Err(Error::InvalidParam("need at least one ascent step".into()));
    }
    if !step_size.is_finite() || step_size <= 0.0 || step_size > 10.0 {
        return Err(Error::InvalidParam(format!(
            "step size must lie in (0, 10], got {step_size}"
        )));
    }

    let mut report = ExperimentReport::new("ratio_maximize", seed);
    record_grid(&mut report, grid);
    report.set_param("p", p);
    report.set_param("steps", steps as u64);
    report.set_param("step_size", step_size);
    report.set_param("stall_limit", STALL_LIMIT as u64);

    let mut rng = rng_stream(seed, 0);
    let start = random_gaussian_spinor(grid, grid.box_length() / 8.0, &mut rng)?;
    let rep0 = norm_report(&start, p)?;
    let mut f = &start * (1.0 / rep0.dirac_sobolev);
    let initial = rep0.ratio;
    let mut best = initial;
    report.push_row(Row::new("step_0").with("ratio", best));

    let stride = (steps / 10).max(1);
    let kdir = band_limit_cap(grid, 3);
    let mut stall = 0usize;
    let mut accepted = 0usize;
    let mut steps_run = 0usize;
    for step in 1..=steps {
        if stall >= STALL_LIMIT {
            break;
        }
        steps_run = step;
        let raw = random_band_limited_spinor(grid, kdir, &mut rng);
        let v = &raw * (1.0 / dirac_sobolev_norm(&raw, p)?);

        let mut chosen: Option<(f64, f64)> = None; // (ratio, sign)
        for sign in [1.0, -1.0] {
            let cand = &f + &(&v * (sign * step_size));
            let ratio = norm_report(&cand, p)?.ratio;
            if chosen.is_none_or(|(r, _)| ratio > r) {
                chosen = Some((ratio, sign));
            }
        }
        let (ratio, sign) = chosen.expect("two candidates evaluated");
        if ratio > best + ACCEPT_EPS {
            let cand = &f + &(&v * (sign * step_size));
            f = &cand * (1.0 / dirac_sobolev_norm(&cand, p)?);
            best = ratio;
            accepted += 1;
            stall = 0;
        } else {
            stall += 1;
        }
        if step % stride == 0 {
            report.push_row(Row::new(format!("step_{step}")).with("ratio", best));
        }
    }

    report.push_row(
        Row::new("final")
            .with("initial_ratio", initial)
            .with("final_ratio", best)
            .with("gain", best - initial)
            .with("steps_run", steps_run as f64)
            .with("accepted", accepted as f64),
    );

    if p == 1.0 {
        let gain = best - initial;
        report.push_verdict(
            "ratio_improved",
            gain >= IMPROVEMENT_MIN,
            gain - IMPROVEMENT_MIN,
        );
    } else {
        let dev = (best - 1.0).abs().max((initial - 1.0).abs());
        report.push_verdict("p2_ratio_invariant", dev <= P2_TOL, P2_TOL - dev);
    }

    Ok(report)
}
