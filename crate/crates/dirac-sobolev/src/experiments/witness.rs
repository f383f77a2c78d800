//! `p1_witness`: the concentrating family that separates the two norms at
//! `p = 1`.
//!
//! For each mollifier scale `ε` the experiment builds a unit-mass bump
//! `δ_ε` at the box center, places it in the second spinor slot,
//! `g = ᵗ(0, δ_ε, 0, 0)`, and pulls it back through the resolvent,
//! `f_ε = (α·p + β)^{−1} g`. By construction `‖f_ε‖_{D,1,1}` stays
//! bounded (it is controlled by `‖g‖₁ = 1` plus lower-order terms), while
//! the full gradient `‖f_ε‖_{S,1,1}` picks up the second-order multipliers
//! `∂_j∂_k(1 − Δ)^{−1}` acting on `δ_ε` — Calderón–Zygmund operators whose
//! `L¹` growth on concentrating data is logarithmic in `1/ε`.
//!
//! Recorded per scale: both norms and their ratio at `p = 1`, the same
//! ratio at `p = 2` (which must stay pinned at `1`), and the local Hardy
//! norm `‖δ_ε‖_{h¹}`, which diverges at the same logarithmic rate.
//!
//! Verdicts:
//!
//! * `ratio_strictly_increasing` — the `p = 1` ratio grows as `ε` shrinks.
//! * `log_divergence_fit` — the ratio is affine in `log(1/ε)` with
//!   `R² ≥ 0.9` and positive slope.
//! * `p2_ratio_pinned` — the `p = 2` ratio stays within `10⁻⁶` of `1`.
//! * `hardy_tracks_log` — `‖δ_ε‖_{h¹}` is affine in `log(1/ε)` with
//!   `R² ≥ 0.9` and positive slope.
//!
//! Scales below the grid spacing are rejected: an unresolved mollifier
//! measures the lattice, not the operator.

use crate::error::{Error, Result};
use crate::experiments::record_grid;
use crate::field::SpinorField;
use crate::fit::affine_fit;
use crate::generators::mollified_delta;
use crate::grid::GridSpec;
use crate::multiplier::dirac_inverse_spectral;
use crate::norms::{local_hardy_norm, norm_report_multi};
use crate::report::{ExperimentReport, Row};

const MIN_SCALES: usize = 4;
const P2_TOL: f64 = 1e-6;
const FIT_R2_MIN: f64 = 0.9;

/// Validates and normalizes the scale list: finite, positive, at least
/// [`MIN_SCALES`] distinct entries, none below the grid spacing. Returns
/// the scales sorted from coarsest to finest.
fn check_scales(grid: GridSpec, eps_list: &[f64]) -> Result<Vec<f64>> {
    if eps_list.len() < MIN_SCALES {
        return Err(Error::InvalidParam(format!(
            "need at least {MIN_SCALES} mollifier scales, got {}",
            eps_list.len()
        )));
    }
    let mut eps: Vec<f64> = eps_list.to_vec();
    if eps.iter().any(|e| !e.is_finite() || *e <= 0.0) {
        return Err(Error::InvalidParam(
            "mollifier scales must be finite and positive".into(),
        ));
    }
    eps.sort_by(|a, b| b.partial_cmp(a).expect("finite scales"));
    if eps.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidParam(
            "mollifier scales must be distinct".into(),
        ));
    }
    let h = grid.h();
    let floor = h * (1.0 - 1e-12);
    if let Some(bad) = eps.iter().find(|e| **e < floor) {
        return Err(Error::InvalidParam(format!(
            "mollifier scale {bad} is below the grid spacing {h}; refine the grid or enlarge eps"
        )));
    }
    Ok(eps)
}

/// Runs the concentrating-family experiment. The rows appear from the
/// coarsest to the finest scale regardless of input order.
pub fn p1_witness(grid: GridSpec, eps_list: &[f64], seed: u64) -> Result<ExperimentReport> {
    let eps = check_scales(grid, eps_list)?;
    let mut report = ExperimentReport::new("p1_witness", seed);
    record_grid(&mut report, grid);
    report.set_param("eps_list", &eps);
    let center = [0.5 * grid.box_length(); 3];

    let mut ratios = Vec::with_capacity(eps.len());
    let mut ratios_p2 = Vec::with_capacity(eps.len());
    let mut hardys = Vec::with_capacity(eps.len());
    for (i, &e) in eps.iter().enumerate() {
        let delta = mollified_delta(grid, center, e)?;
        let hardy = local_hardy_norm(&delta)?;
        let g = SpinorField::from_single_component(2, delta)?;
        let f = dirac_inverse_spectral(&g)?;
        let reps = norm_report_multi(&f, &[1.0, 2.0])?;
        report.push_row(
            Row::new(format!("scale_{i}"))
                .with("eps", e)
                .with("sobolev", reps[0].sobolev)
                .with("dirac_sobolev", reps[0].dirac_sobolev)
                .with("ratio", reps[0].ratio)
                .with("ratio_p2", reps[1].ratio)
                .with("hardy_source", hardy),
        );
        ratios.push(reps[0].ratio);
        ratios_p2.push(reps[1].ratio);
        hardys.push(hardy);
    }

    let min_gap = ratios
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min);
    report.push_verdict("ratio_strictly_increasing", min_gap > 0.0, min_gap);

    let xs: Vec<f64> = eps.iter().map(|e| (1.0 / e).ln()).collect();
    let fit_ratio = affine_fit(&xs, &ratios)?;
    report.push_row(
        Row::new("fit_ratio_vs_log")
            .with("slope", fit_ratio.slope)
            .with("intercept", fit_ratio.intercept)
            .with("r_squared", fit_ratio.r_squared),
    );
    report.push_verdict(
        "log_divergence_fit",
        fit_ratio.r_squared >= FIT_R2_MIN && fit_ratio.slope > 0.0,
        (fit_ratio.r_squared - FIT_R2_MIN).min(fit_ratio.slope),
    );

    let p2_dev = ratios_p2
        .iter()
        .map(|r| (r - 1.0).abs())
        .fold(0.0, f64::max);
    report.push_verdict("p2_ratio_pinned", p2_dev <= P2_TOL, P2_TOL - p2_dev);

    let fit_hardy = affine_fit(&xs, &hardys)?;
    report.push_row(
        Row::new("fit_hardy_vs_log")
            .with("slope", fit_hardy.slope)
            .with("intercept", fit_hardy.intercept)
            .with("r_squared", fit_hardy.r_squared),
    );
    report.push_verdict(
        "hardy_tracks_log",
        fit_hardy.r_squared >= FIT_R2_MIN && fit_hardy.slope > 0.0,
        (fit_hardy.r_squared - FIT_R2_MIN).min(fit_hardy.slope),
    );

    Ok(report)
}
