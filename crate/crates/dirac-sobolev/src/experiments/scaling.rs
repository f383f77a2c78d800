//! `scaling_transfer`: exact `L¹` dilation identities on the lattice.
//!
//! The dilation `g(x) = r³ f(rx)` maps fields on the box of side `L` to
//! fields on the box of side `L/r`. On matching grids (same point count)
//! the samples of `g` are a pure relabeling of the samples of `f`, so the
//! discrete norms obey the continuum scaling laws to rounding error:
//!
//! ```text
//! ‖g‖₁        = ‖f‖₁
//! ‖∂g‖₁       = r · ‖∂f‖₁        (summed over components and axes)
//! ‖(α·p)g‖₁   = r · ‖(α·p)f‖₁
//! ```
//!
//! The experiment measures all three deviations for each requested ratio
//! and demands they vanish to `10⁻⁹` — far below any discretization
//! effect, since no interpolation happens on this path.

use crate::error::{Error, Result};
use crate::experiments::{record_grid, rng_stream};
use crate::generators::{band_limit_cap, random_band_limited_spinor};
use crate::grid::{make_grid, GridSpec};
use crate::norms::norm_report;
use crate::report::{ExperimentReport, Row};
use crate::rescale::rescale_spinor;

const TOL_DEV: f64 = 1e-9;

fn check_ratios(r_list: &[f64]) -> Result<()> {
    if r_list.is_empty() {
        return Err(Error::InvalidParam(
            "need at least one dilation ratio".into(),
        ));
    }
    if r_list.iter().any(|r| !r.is_finite() || *r <= 0.0) {
        return Err(Error::InvalidParam(
            "dilation ratios must be finite and positive".into(),
        ));
    }
    Ok(())
}

/// Checks the dilation identities for each ratio in `r_list`.
pub fn scaling_transfer(grid: GridSpec, r_list: &[f64], seed: u64) -> Result<ExperimentReport> {
    check_ratios(r_list)?;
    let mut report = ExperimentReport::new("scaling_transfer", seed);
    record_grid(&mut report, grid);
    report.set_param("r_list", r_list);
    let kmax = band_limit_cap(grid, 6);
    report.set_param("kmax", kmax as u64);

    let f = random_band_limited_spinor(grid, kmax, &mut rng_stream(seed, 0));
    let base = norm_report(&f, 1.0)?;

    let rel = |a: f64, b: f64| (a - b).abs() / b.abs().max(f64::MIN_POSITIVE);
    let mut worst: f64 = 0.0;
    for (i, &r) in r_list.iter().enumerate() {
        let target = make_grid(grid.n(), grid.box_length() / r)?;
        let g = rescale_spinor(&f, r, target)?;
        let rep = norm_report(&g, 1.0)?;
        let lp_dev = rel(rep.lp, base.lp);
        let grad_dev = rel(rep.grad_lp, r * base.grad_lp);
        let dirac_dev = rel(rep.dirac_lp, r * base.dirac_lp);
        worst = worst.max(lp_dev).max(grad_dev).max(dirac_dev);
        report.push_row(
            Row::new(format!("ratio_{i}"))
                .with("r", r)
                .with("lp", rep.lp)
                .with("grad_lp", rep.grad_lp)
                .with("dirac_lp", rep.dirac_lp)
                .with("lp_dev", lp_dev)
                .with("grad_dev", grad_dev)
                .with("dirac_dev", dirac_dev),
        );
    }
    report.push_verdict(
        "dilation_identities_exact",
        worst <= TOL_DEV,
        TOL_DEV - worst,
    );

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold_to_rounding_error() {
        let grid = make_grid(8, 5.0).unwrap();
        let report = scaling_transfer(grid, &[2.0, 4.0, 0.5], 0).unwrap();
        assert!(report.all_pass(), "{}", report.to_csv_string());
        let v = &report.verdicts[0];
        assert!(v.margin > TOL_DEV * 0.99, "deviation should be ~1e-13");
    }

    #[test]
    fn invalid_ratios_are_rejected() {
        let grid = make_grid(8, 5.0).unwrap();
        assert!(scaling_transfer(grid, &[], 0).is_err());
        assert!(scaling_transfer(grid, &[2.0, 0.0], 0).is_err());
        assert!(scaling_transfer(grid, &[-1.0], 0).is_err());
        assert!(scaling_transfer(grid, &[f64::NAN], 0).is_err());
    }

    #[test]
    fn reports_are_byte_deterministic() {
        let grid = make_grid(8, 5.0).unwrap();
        let a = scaling_transfer(grid, &[2.0, 3.0], 7).unwrap();
        let b = scaling_transfer(grid, &[2.0, 3.0], 7).unwrap();
        assert_eq!(a.to_json_string().unwrap(), b.to_json_string().unwrap());
    }
}
