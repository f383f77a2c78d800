//! Standard test-field families: periodized Gaussians, mollified deltas,
//! compact bumps, and band-limited random fields.
//!
//! Every generator respects the box's periodicity. Gaussians are wrapped by
//! summing lattice images (nine per axis, which puts the truncation error
//! below 1e−40 once the width is at most a quarter box); bumps are compactly
//! supported inside one period; band-limited fields are built directly in
//! frequency space so their spectral support is exact.
//!
//! Randomized generators take a caller-supplied RNG and draw in a fixed
//! iteration order, so a seeded RNG reproduces the same field on every run
//! and platform.

use crate::error::{Error, Result};
use crate::field::{ScalarField, SpinorField};
use crate::grid::GridSpec;
use crate::C64;
use rand::Rng;
use std::f64::consts::PI;

/// Lattice images summed per axis when periodizing a Gaussian.
const IMAGE_RANGE: i64 = 4;

fn check_scale(grid: GridSpec, value: f64, what: &str, max_frac: f64) -> Result<()> {
    let cap = grid.box_length() * max_frac;
    if !(value > 0.0 && value <= cap) {
        return Err(Error::InvalidParam(format!(
            "{what} must lie in (0, {cap}] for a box of length {}, got {value}",
            grid.box_length()
        )));
    }
    Ok(())
}

/// One-axis periodized Gaussian density `Σ_m φ_w(t − mL)` with
/// `φ_w(t) = exp(−t²/2w²)/√(2π w²)`, so the axis integral is 1.
fn gaussian_axis(t: f64, width: f64, box_length: f64) -> f64 {
    let norm = 1.0 / ((2.0 * PI).sqrt() * width);
    let mut sum = 0.0;
    for m in -IMAGE_RANGE..=IMAGE_RANGE {
        let d = t - m as f64 * box_length;
        sum += (-d * d / (2.0 * width * width)).exp();
    }
    norm * sum
}

/// Periodized isotropic Gaussian centered at `center` with standard
/// deviation `width`, normalized to unit continuum integral:
/// `g(x) = Π_j Σ_m φ_w(x_j − c_j − mL)`.
///
/// Requires `0 < width ≤ L/4` so the image truncation is negligible.
pub fn gaussian(grid: GridSpec, center: [f64; 3], width: f64) -> Result<ScalarField> {
    check_scale(grid, width, "gaussian width", 0.25)?;
    let l = grid.box_length();
    ScalarField::sample(grid, |x| {
        let v = (0..3)
            .map(|j| gaussian_axis(x[j] - center[j], width, l))
            .product::<f64>();
        C64::new(v, 0.0)
    })
}

/// Discrete mollified delta: a periodized Gaussian rescaled so the
/// rectangle-rule mass is exactly one, `h³ Σ_x δ_ε(x) = 1`.
///
/// As `ε ↓ 0` (while staying resolvable, `ε ≳ h`) this family concentrates
/// at `center` and is the crate's standard probe for short-distance
/// behavior. Requires `0 < ε ≤ L/4`.
pub fn mollified_delta(grid: GridSpec, center: [f64; 3], eps: f64) -> Result<ScalarField> {
    check_scale(grid, eps, "mollifier scale", 0.25)?;
    let raw = gaussian(grid, center, eps)?;
    let mass: f64 = raw.values().iter().map(|z| z.re).sum::<f64>() * grid.h().powi(3);
    if mass <= 0.0 {
        return Err(Error::NonFinite(
            "mollified delta has non-positive discrete mass".into(),
        ));
    }
    Ok(&raw * (1.0 / mass))
}

/// Smooth compactly supported bump of unit height,
/// `b(x) = exp(1 − 1/(1 − (r/R)²))` for `r = |x − c|` (measured on the
/// torus) below the radius `R`, and `0` outside.
///
/// Requires `0 < R ≤ L/2` so the support fits in one period.
pub fn bump(grid: GridSpec, center: [f64; 3], radius: f64) -> Result<ScalarField> {
    check_scale(grid, radius, "bump radius", 0.5)?;
    ScalarField::sample(grid, |x| {
        let r = grid.torus_distance(x, center) / radius;
        if r < 1.0 {
            let s = r * r;
            C64::new((1.0 - 1.0 / (1.0 - s)).exp(), 0.0)
        } else {
            C64::default()
        }
    })
}

/// Largest integer frequency kept by the band-limited generators: strictly
/// below the Nyquist index so every retained mode is a genuine lattice
/// plane wave with a conjugate partner.
pub fn band_limit_cap(grid: GridSpec, kmax: usize) -> usize {
    kmax.min(grid.n() / 2 - 1)
}

/// Random trigonometric polynomial with integer frequencies
/// `|k_j| ≤ min(kmax, n/2 − 1)`: each retained Fourier coefficient gets
/// independent real and imaginary parts uniform in `[−1, 1)`.
///
/// Modes are visited in a fixed `(k₃, k₂, k₁)` lexicographic order, so a
/// seeded RNG yields an identical field every time.
pub fn random_band_limited_scalar(grid: GridSpec, kmax: usize, rng: &mut impl Rng) -> ScalarField {
    let cap = band_limit_cap(grid, kmax) as i64;
    let n = grid.n();
    let idx = |k: i64| -> usize {
        if k < 0 {
            (k + n as i64) as usize
        } else {
            k as usize
        }
    };
    let mut spectrum = vec![C64::default(); grid.len()];
    for k3 in -cap..=cap {
        for k2 in -cap..=cap {
            for k1 in -cap..=cap {
                let re = rng.gen_range(-1.0..1.0);
                let im = rng.gen_range(-1.0..1.0);
                spectrum[grid.flat(idx(k1), idx(k2), idx(k3))] = C64::new(re, im);
            }
        }
    }
    ScalarField::new(grid, spectrum)
        .expect("uniform draws are finite")
        .fft_inverse()
}

/// Four independent draws of [`random_band_limited_scalar`], components
/// filled in order `f₁, f₂, f₃, f₄`.
pub fn random_band_limited_spinor(grid: GridSpec, kmax: usize, rng: &mut impl Rng) -> SpinorField {
    let components = [0; 4].map(|_| random_band_limited_scalar(grid, kmax, rng));
    SpinorField::from_components(components).expect("components share the grid")
}

/// Draws a point uniformly from the box `[0, L)³`.
fn random_center(grid: GridSpec, rng: &mut impl Rng) -> [f64; 3] {
    [0; 3].map(|_| rng.gen_range(0.0..grid.box_length()))
}

/// A random unimodular phase `e^{iθ}`.
fn random_phase(rng: &mut impl Rng) -> C64 {
    let theta = rng.gen_range(0.0..2.0 * PI);
    C64::new(theta.cos(), theta.sin())
}

/// Spinor whose components are periodized Gaussians of the given width at
/// independent random centers, each scaled by a random phase.
pub fn random_gaussian_spinor(
    grid: GridSpec,
    width: f64,
    rng: &mut impl Rng,
) -> Result<SpinorField> {
    let mut components = Vec::with_capacity(4);
    for _ in 0..4 {
        let g = gaussian(grid, random_center(grid, rng), width)?;
        components.push(&g * random_phase(rng));
    }
    let arr: [ScalarField; 4] = components.try_into().expect("four components");
    SpinorField::from_components(arr)
}

/// Spinor whose components are compact bumps of the given radius at
/// independent random centers, each scaled by a random phase.
pub fn random_bump_spinor(grid: GridSpec, radius: f64, rng: &mut impl Rng) -> Result<SpinorField> {
    let mut components = Vec::with_capacity(4);
    for _ in 0..4 {
        let b = bump(grid, random_center(grid, rng), radius)?;
        components.push(&b * random_phase(rng));
    }
    let arr: [ScalarField; 4] = components.try_into().expect("four components");
    SpinorField::from_components(arr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gaussian_has_unit_mass_on_the_grid() {
        let grid = make_grid(32, 10.0).unwrap();
        let g = gaussian(grid, [5.0, 5.0, 5.0], 1.0).unwrap();
        let mass: f64 = g.values().iter().map(|z| z.re).sum::<f64>() * grid.h().powi(3);
        // Rectangle rule on a smooth periodic function is spectrally
        // accurate, so the discrete mass matches the continuum integral.
        assert!((mass - 1.0).abs() <= 1e-10, "mass = {mass}");
    }

    #[test]
    fn gaussian_is_periodic_across_the_boundary() {
        let grid = make_grid(32, 10.0).unwrap();
        // Center on the boundary: the wrapped peak must be symmetric.
        let g = gaussian(grid, [0.0, 5.0, 5.0], 0.8).unwrap();
        let v = g.values();
        let left = v[grid.flat(1, 16, 16)];
        let right = v[grid.flat(31, 16, 16)];
        assert!((left - right).norm() <= 1e-12 * left.norm());
    }

    #[test]
    fn mollified_delta_mass_is_exactly_one() {
        let grid = make_grid(16, 8.0).unwrap();
        let d = mollified_delta(grid, [4.0, 4.0, 4.0], 0.7).unwrap();
        let mass: f64 = d.values().iter().map(|z| z.re).sum::<f64>() * grid.h().powi(3);
        assert!((mass - 1.0).abs() <= 1e-13);
    }

    #[test]
    fn bump_vanishes_outside_its_radius() {
        let grid = make_grid(16, 8.0).unwrap();
        let b = bump(grid, [4.0, 4.0, 4.0], 1.5).unwrap();
        for i in 0..grid.len() {
            let x = grid.position(i);
            let r = grid.torus_distance(x, [4.0, 4.0, 4.0]);
            if r >= 1.5 {
                assert_eq!(b.values()[i], C64::default(), "support leak at {x:?}");
            }
        }
        let peak = b.values()[grid.flat(8, 8, 8)];
        assert!((peak.re - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn out_of_range_scales_are_rejected() {
        let grid = make_grid(16, 8.0).unwrap();
        assert!(gaussian(grid, [0.0; 3], 0.0).is_err());
        assert!(gaussian(grid, [0.0; 3], 2.1).is_err()); // > L/4
        assert!(mollified_delta(grid, [0.0; 3], -1.0).is_err());
        assert!(bump(grid, [0.0; 3], 4.1).is_err()); // > L/2
        assert!(bump(grid, [0.0; 3], f64::NAN).is_err());
    }

    #[test]
    fn band_limited_field_has_no_energy_beyond_the_band() {
        let grid = make_grid(16, 5.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = random_band_limited_scalar(grid, 3, &mut rng);
        let spec = f.fft_forward();
        let n = grid.n();
        for i in 0..grid.len() {
            let ks = [i % n, (i / n) % n, i / (n * n)]
                .map(|idx| grid.freq_int(idx).unsigned_abs() as usize);
            if ks.iter().any(|&k| k > 3) {
                assert!(
                    spec.values()[i].norm() <= 1e-12,
                    "energy outside band at {ks:?}"
                );
            }
        }
    }

    #[test]
    fn band_limit_is_capped_below_nyquist() {
        let grid = make_grid(8, 5.0).unwrap();
        assert_eq!(band_limit_cap(grid, 100), 3);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = random_band_limited_scalar(grid, 100, &mut rng);
        let spec = f.fft_forward();
        let n = grid.n();
        // Round-tripping through the inverse transform leaves ~1e−16 dust,
        // so "empty" means below rounding, not bitwise zero.
        for i in 0..grid.len() {
            let ks = [i % n, (i / n) % n, i / (n * n)];
            if ks.contains(&(n / 2)) {
                assert!(
                    spec.values()[i].norm() <= 1e-13,
                    "Nyquist bin filled: {}",
                    spec.values()[i]
                );
            }
        }
    }

    #[test]
    fn seeded_generators_reproduce_bit_identically() {
        let grid = make_grid(8, 5.0).unwrap();
        let draw = || {
            let mut rng = ChaCha8Rng::seed_from_u64(42);
            random_band_limited_spinor(grid, 2, &mut rng)
        };
        assert_eq!(draw(), draw());
    }
}
