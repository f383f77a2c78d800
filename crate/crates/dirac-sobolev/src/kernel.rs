//! The inverse operator as convolution with an explicit matrix kernel.
//!
//! On `ℝ³` the resolvent `(α·p + β)^{−1}` acts by convolution with
//!
//! ```text
//! K(x) = (Σ_j −i α_j ∂_j + β) G(x),      G(x) = e^{−|x|} / (4π|x|),
//! ```
//!
//! where `G` is the Green function of `1 − Δ` (unit mass: `∫G = 1`).
//! Carrying out the derivatives gives the explicit form
//!
//! ```text
//! K(x) = 1/(4π) · [ Σ_j i α_j (x_j/|x|³ + x_j/|x|²) + β/|x| ] e^{−|x|},
//! ```
//!
//! i.e. four scalar profiles: three odd Riesz-like pieces `s_j` and the
//! radial `s₄ = G`. This module samples those profiles on the periodic
//! grid (minimum-image convention) and realizes the operator as a
//! quadrature-weighted circular convolution, `Bf ≈ h³ · K ⊛ f`, evaluated
//! with FFTs — twelve transforms in total. An `O(N²)` direct-summation
//! twin exists for small grids as an independent oracle: both paths
//! compute the *same* discrete sum, so they must agree to rounding.
//!
//! The sampled kernel is singular at the origin. The odd pieces average to
//! zero over the origin cell and are sampled as `0` there; for `G` the cell
//! mean of `1/|x|` is used, which is `I₁/h` with
//! `I₁ = ∫_{[−1/2,1/2]³} du/|u| = 6·(asinh(1/√2) − atan(1/√3)/2)`.
//! With this regularization the discrete mass `h³ Σ G` reproduces
//! `∫G = 1` to well under a percent on production grids, and the
//! convolution path tracks the exact spectral inverse at second order in
//! `h` on smooth fields.

use crate::clifford::{dirac_matrices, CVec4, Matrix4};
use crate::error::{Error, Result};
use crate::field::{ScalarField, SpinorField};
use crate::grid::GridSpec;
use crate::C64;
use std::f64::consts::PI;

/// Mean of `1/|u|` over the unit cube `[−1/2, 1/2]³`, in closed form:
/// `6·(asinh(1/√2) − atan(1/√3)/2) ≈ 2.3800773639…`. Scaling to a cell of
/// side `h` divides by `h`.
pub fn cube_mean_inverse_distance() -> f64 {
    6.0 * ((1.0 / 2.0f64.sqrt()).asinh() - 0.5 * (1.0 / 3.0f64.sqrt()).atan())
}

/// The Green function `G(y) = e^{−|y|}/(4π|y|)` of `1 − Δ` on `ℝ³`.
/// Singular at the origin; callers must keep `|y| > 0`.
pub fn green_kernel(y: [f64; 3]) -> f64 {
    let r = y.iter().map(|t| t * t).sum::<f64>().sqrt();
    (-r).exp() / (4.0 * PI * r)
}

/// The odd scalar profile `s_j(y) = (y_j/|y|³ + y_j/|y|²) e^{−|y|} / 4π`,
/// so that `−i ∂_j G = i·s_j`. Singular at the origin.
pub fn dirac_kernel_profile(j: usize, y: [f64; 3]) -> f64 {
    assert!((1..=3).contains(&j), "axis index must be 1..=3");
    let r = y.iter().map(|t| t * t).sum::<f64>().sqrt();
    y[j - 1] * (1.0 / (r * r * r) + 1.0 / (r * r)) * (-r).exp() / (4.0 * PI)
}

/// The matrix kernel `K(y)` of the inverse operator at a point `y ≠ 0`.
pub fn dirac_kernel(y: [f64; 3]) -> Matrix4 {
    let (alpha, beta) = dirac_matrices();
    let i = C64::new(0.0, 1.0);
    let mut m = beta.scale(C64::new(green_kernel(y), 0.0));
    for (j, a) in alpha.iter().enumerate() {
        m = m.add(&a.scale(i * C64::new(dirac_kernel_profile(j + 1, y), 0.0)));
    }
    m
}

/// Minimum-image samples of `G` with the origin cell regularized to its
/// cell mean `I₁/(4πh)` (the factor `e^{−|y|}` is `1 + O(h)` there).
pub fn green_samples(grid: GridSpec) -> ScalarField {
    let origin = cube_mean_inverse_distance() / (4.0 * PI * grid.h());
    ScalarField::sample(grid, |x| {
        let y = grid.min_image_vec(x);
        if y.iter().all(|&t| t == 0.0) {
            C64::new(origin, 0.0)
        } else {
            C64::new(green_kernel(y), 0.0)
        }
    })
    .expect("kernel samples are finite")
}

/// Discrete mass `h³ Σ_x G(x)` of the sampled Green function; converges to
/// `∫G = 1` as the grid refines.
pub fn green_discrete_mass(grid: GridSpec) -> f64 {
    let g = green_samples(grid);
    g.values().iter().map(|z| z.re).sum::<f64>() * grid.h().powi(3)
}

/// Minimum-image samples of the four scalar kernel profiles
/// `(s₁, s₂, s₃, s₄ = G)`. The odd profiles are sampled as `0` at the
/// origin (their cell mean vanishes by symmetry).
pub fn dirac_kernel_samples(grid: GridSpec) -> [ScalarField; 4] {
    let odd = |j: usize| {
        ScalarField::sample(grid, |x| {
            let y = grid.min_image_vec(x);
            if y.iter().all(|&t| t == 0.0) {
                C64::default()
            } else {
                C64::new(dirac_kernel_profile(j, y), 0.0)
            }
        })
        .expect("kernel samples are finite")
    };
    [odd(1), odd(2), odd(3), green_samples(grid)]
}

/// Quadrature-weighted periodic convolution
/// `(a ∗ b)(x) = h³ Σ_y a(x − y) b(y)`, the discrete stand-in for
/// `∫ a(x − y) b(y) dy`. Computed spectrally; under the unitary DFT the
/// circular convolution picks up a factor `√N`.
pub fn convolve_scalar(a: &ScalarField, b: &ScalarField) -> ScalarField {
    assert!(
        a.grid() == b.grid(),
        "convolution requires matching grids (n={} vs n={})",
        a.grid().n(),
        b.grid().n()
    );
    let grid = a.grid();
    let scale = (grid.len() as f64).sqrt() * grid.h().powi(3);
    let ahat = a.fft_forward();
    let bhat = b.fft_forward();
    let spec: Vec<C64> = ahat
        .values()
        .iter()
        .zip(bhat.values())
        .map(|(x, y)| x * y * scale)
        .collect();
    ScalarField::from_raw(grid, spec).fft_inverse()
}

/// Nonzero coefficient table of the kernel matrix: for each `(k, l)` cell,
/// the three `α_j[k,l]` entries and `β[k,l]`, skipping all-zero cells.
fn kernel_cells() -> Vec<(usize, usize, [C64; 3], C64)> {
    let (alpha, beta) = dirac_matrices();
    let mut cells = Vec::new();
    for k in 0..4 {
        for l in 0..4 {
            let ca = [alpha[0].at(k, l), alpha[1].at(k, l), alpha[2].at(k, l)];
            let cb = beta.at(k, l);
            if ca.iter().any(|z| z.norm() != 0.0) || cb.norm() != 0.0 {
                cells.push((k, l, ca, cb));
            }
        }
    }
    cells
}

/// The inverse operator as a kernel convolution:
/// `(Bf)(x) = h³ Σ_y K(x − y) f(y)`, evaluated spectrally.
///
/// Uses 12 FFTs: four for the scalar kernel profiles, four for the input
/// components, four for the output. Agrees with
/// [`crate::multiplier::dirac_inverse_spectral`] up to the kernel's
/// discretization error, which vanishes at second order under refinement
/// on smooth inputs.
pub fn dirac_inverse_kernel(f: &SpinorField) -> Result<SpinorField> {
    let grid = f.grid();
    let s_hat: [ScalarField; 4] = dirac_kernel_samples(grid).map(|s| s.fft_forward());
    let f_hat = f.fft_forward();
    let scale = C64::new((grid.len() as f64).sqrt() * grid.h().powi(3), 0.0);
    let i = C64::new(0.0, 1.0);

    let mut out_spec: [Vec<C64>; 4] = [0; 4].map(|_| vec![C64::default(); grid.len()]);
    for (k, l, ca, cb) in kernel_cells() {
        let coeffs = [i * ca[0], i * ca[1], i * ca[2]];
        let fl = f_hat.component(l + 1).values();
        let acc = &mut out_spec[k];
        for bin in 0..grid.len() {
            let khat = coeffs[0] * s_hat[0].values()[bin]
                + coeffs[1] * s_hat[1].values()[bin]
                + coeffs[2] * s_hat[2].values()[bin]
                + cb * s_hat[3].values()[bin];
            acc[bin] += khat * fl[bin] * scale;
        }
    }
    let [a, b, c, d] = out_spec;
    let spec = SpinorField::from_components([
        ScalarField::from_raw(grid, a),
        ScalarField::from_raw(grid, b),
        ScalarField::from_raw(grid, c),
        ScalarField::from_raw(grid, d),
    ])
    .expect("grids match");
    Ok(spec.fft_inverse())
}

/// Direct `O(N²)` summation of the same discrete convolution — an oracle
/// for [`dirac_inverse_kernel`], restricted to `n ≤ 16` to keep the cost
/// sane.
pub fn dirac_inverse_kernel_direct(f: &SpinorField) -> Result<SpinorField> {
    let grid = f.grid();
    let n = grid.n();
    if n > 16 {
        return Err(Error::InvalidParam(format!(
            "direct kernel summation is limited to n <= 16, got n = {n}"
        )));
    }
    let samples = dirac_kernel_samples(grid);
    let i = C64::new(0.0, 1.0);
    // Kernel matrix per lattice offset, precomputed once: N 4×4 matrices.
    let kmats: Vec<Matrix4> = (0..grid.len())
        .map(|o| {
            let (alpha, beta) = dirac_matrices();
            let mut m = beta.scale(samples[3].values()[o]);
            for (j, a) in alpha.iter().enumerate() {
                m = m.add(&a.scale(i * samples[j].values()[o]));
            }
            m
        })
        .collect();

    let h3 = grid.h().powi(3);
    let mut out: [Vec<C64>; 4] = [0; 4].map(|_| vec![C64::default(); grid.len()]);
    for mz in 0..n {
        for my in 0..n {
            for mx in 0..n {
                let mut acc = CVec4::zero();
                for xz in 0..n {
                    for xy in 0..n {
                        for xx in 0..n {
                            let off =
                                grid.flat((mx + n - xx) % n, (my + n - xy) % n, (mz + n - xz) % n);
                            let v = kmats[off].apply(&f.at(grid.flat(xx, xy, xz)));
                            for (a, b) in acc.0.iter_mut().zip(v.0) {
                                *a += b;
                            }
                        }
                    }
                }
                let m = grid.flat(mx, my, mz);
                for (o, a) in out.iter_mut().zip(acc.0) {
                    o[m] = a * h3;
                }
            }
        }
    }
    let [a, b, c, d] = out;
    Ok(SpinorField::from_components([
        ScalarField::from_raw(grid, a),
        ScalarField::from_raw(grid, b),
        ScalarField::from_raw(grid, c),
        ScalarField::from_raw(grid, d),
    ])
    .expect("grids match"))
}
