//! `ds_inequality_probe`: refinement stability of the embedding quotient
//! `Q = ‖f‖_k / ‖f‖_{D,1,p}` for admissible target exponents.
//!
//! The first-order Dirac–Sobolev space embeds into `L^k` exactly for
//! `1 ≤ k < p(p + 3)/3` (at `p = 1`: `k < 4/3`, strictly below the
//! classical Sobolev threshold `3/2`). A grid experiment cannot prove an
//! embedding, but it can check the two falsifiable halves:
//!
//! * exponents outside the admissible window are refused as parameters;
//! * inside the window, the quotient `Q` computed for the *same* continuum
//!   field on a grid and on its dyadic refinement agrees to a small drift,
//!   so `Q` measures the field, not the mesh.
//!
//! Both norms are 1-homogeneous, so `Q` is insensitive to the per-grid
//! amplitude normalization of the generators.

use crate::error::{Error, Result};
use crate::experiments::{check_samples, record_grid, rng_stream, Family};
use crate::generators::band_limit_cap;
use crate::grid::{make_grid, GridSpec};
use crate::norms::dirac_sobolev_norm;
use crate::report::{ExperimentReport, Row};

const DRIFT_TOL: f64 = 0.02;

/// The admissibility threshold `p(p + 3)/3`.
pub fn exponent_ceiling(p: f64) -> f64 {
    p * (p + 3.0) / 3.0
}

/// Validates `1 ≤ k < p(p+3)/3`.
fn check_target_exponent(p: f64, k: f64) -> Result<()> {
    if !k.is_finite() || k < 1.0 {
        return Err(Error::InvalidParam(format!(
            "target exponent k must satisfy k >= 1, got {k}"
        )));
    }
    let ceiling = exponent_ceiling(p);
    if k >= ceiling {
        return Err(Error::InvalidParam(format!(
            "target exponent k = {k} is outside the admissible window \
             1 <= k < p(p+3)/3 = {ceiling} for p = {p}"
        )));
    }
    Ok(())
}

/// Measures the quotient on `grid` and on its dyadic refinement for
/// `samples` independent fields.
pub fn ds_inequality_probe(
    grid: GridSpec,
    p: f64,
    k: f64,
    family: Family,
    samples: usize,
    seed: u64,
) -> Result<ExperimentReport> {
    check_target_exponent(p, k)?;
    check_samples(samples, 2)?;
    // Band limits must fit the coarse grid, or the two grids would draw
    // different coefficient sets and represent different fields.
    let family = match family {
        Family::BandLimited { kmax } => Family::BandLimited {
            kmax: band_limit_cap(grid, kmax),
        },
        other => other,
    };
    let fine = make_grid(2 * grid.n(), grid.box_length())?;

    let mut report = ExperimentReport::new("ds_inequality_probe", seed);
    record_grid(&mut report, grid);
    report.set_param("p", p);
    report.set_param("k", k);
    report.set_param("k_ceiling", exponent_ceiling(p));
    report.set_param("family", family.describe());
    report.set_param("samples", samples as u64);
    report.set_param("fine_n", fine.n() as u64);

    let quotient = |g: GridSpec, i: u64| -> Result<f64> {
        let f = family.draw_spinor(g, &mut rng_stream(seed, i))?;
        Ok(f.lp_norm(k)? / dirac_sobolev_norm(&f, p)?)
    };

    let mut max_drift: f64 = 0.0;
    let mut max_q: f64 = 0.0;
    for i in 0..samples {
        let q_coarse = quotient(grid, i as u64)?;
        let q_fine = quotient(fine, i as u64)?;
        let drift = (q_fine - q_coarse).abs() / q_coarse;
        max_drift = max_drift.max(drift);
        max_q = max_q.max(q_fine);
        report.push_row(
            Row::new(format!("sample_{i}"))
                .with("q_coarse", q_coarse)
                .with("q_fine", q_fine)
                .with("drift", drift),
        );
    }
    report.push_row(
        Row::new("summary")
            .with("max_drift", max_drift)
            .with("max_quotient", max_q),
    );

    report.push_verdict(
        "refinement_stable",
        max_drift <= DRIFT_TOL,
        DRIFT_TOL - max_drift,
    );
    report.push_verdict(
        "quotients_positive",
        max_q.is_finite() && max_q > 0.0,
        if max_q.is_finite() { max_q } else { -1.0 },
    );

    Ok(report)
}
