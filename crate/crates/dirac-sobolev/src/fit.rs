//! Least-squares affine fitting, used by the experiments to quantify
//! logarithmic divergence: fit `y ≈ slope·x + intercept` and report the
//! coefficient of determination `R²`.

use crate::error::{Error, Result};
use serde::Serialize;

/// Result of an ordinary least-squares affine fit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AffineFit {
    pub slope: f64,
    pub intercept: f64,
    /// `R² = 1 − SS_res/SS_tot ∈ [0, 1]`: fraction of the variance in `y`
    /// explained by the line. A constant `y` fit exactly yields `1`.
    pub r_squared: f64,
}

/// Fits `y ≈ slope·x + intercept` by least squares.
///
/// Requires at least two points, finite data, and non-constant `x`.
pub fn affine_fit(xs: &[f64], ys: &[f64]) -> Result<AffineFit> {
    if xs.len() != ys.len() {
        return Err(Error::InvalidParam(format!(
            "fit needs matching lengths, got {} x's and {} y's",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() < 2 {
        return Err(Error::InvalidParam("fit needs at least two points".into()));
    }
    if xs.iter().chain(ys).any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("fit data".into()));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidParam(
            "fit needs non-constant abscissae".into(),
        ));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_tot: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum();
    let r_squared = if ss_tot == 0.0 {
        // Constant data: the line y = my is an exact fit.
        1.0
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    };
    Ok(AffineFit {
        slope,
        intercept,
        r_squared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_line_is_recovered() {
        let xs = [0.0, 1.0, 2.0, 3.0];
        let ys: Vec<f64> = xs.iter().map(|x| 2.5 * x - 0.75).collect();
        let fit = affine_fit(&xs, &ys).unwrap();
        assert!((fit.slope - 2.5).abs() <= 1e-12);
        assert!((fit.intercept + 0.75).abs() <= 1e-12);
        assert!((fit.r_squared - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn noise_lowers_r_squared_but_keeps_the_trend() {
        let xs = [0.0, 1.0, 2.0, 3.0, 4.0];
        let ys = [0.1, 0.9, 2.2, 2.8, 4.1];
        let fit = affine_fit(&xs, &ys).unwrap();
        assert!(fit.slope > 0.9 && fit.slope < 1.1);
        assert!(fit.r_squared > 0.98 && fit.r_squared < 1.0);
    }

    #[test]
    fn constant_ordinates_fit_perfectly() {
        let fit = affine_fit(&[0.0, 1.0, 2.0], &[3.0, 3.0, 3.0]).unwrap();
        assert_eq!(fit.slope, 0.0);
        assert_eq!(fit.intercept, 3.0);
        assert_eq!(fit.r_squared, 1.0);
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        assert!(affine_fit(&[1.0, 2.0], &[1.0]).is_err());
        assert!(affine_fit(&[1.0], &[1.0]).is_err());
        assert!(affine_fit(&[2.0, 2.0, 2.0], &[1.0, 2.0, 3.0]).is_err());
        assert!(affine_fit(&[0.0, f64::NAN], &[1.0, 2.0]).is_err());
    }
}
