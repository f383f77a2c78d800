//! The periodic box discretization and its frequency lattice.
//!
//! A [`GridSpec`] is an `n × n × n` uniform grid on the box `[0, L)³` with
//! periodic identification, spacing `h = L/n` and sample points
//! `x = (i, j, k)·h`. Its discrete Fourier dual is the frequency lattice
//! `ξ(k) = 2πk/L` with integer indices `k ∈ {−n/2, …, n/2 − 1}` per axis —
//! symmetric about 0 except for the unpaired Nyquist index `−n/2`.
//!
//! Two views of the lattice are exposed:
//!
//! * [`GridSpec::xi_axis`] — the full lattice, used by symbols that are
//!   even in `ξ` (Laplacian, Bessel potentials);
//! * [`GridSpec::xi_tilde_axis`] — the *derivative lattice* `ξ̃`, identical
//!   except that the Nyquist entry is zeroed. Every symbol that is odd in `ξ`
//!   (first derivatives, Riesz-type transforms, the Dirac symbol) evaluates on
//!   `ξ̃`, the standard spectral-derivative convention that keeps real fields
//!   real and first-order operators exactly skew-adjoint on the grid.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Parameters of the periodic box discretization. Cheap to copy; validated
/// on construction so every instance satisfies `n` even, `n ≥ 4`, `L > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    n: usize,
    box_length: f64,
}

/// Builds a grid with `n` points per axis on a box of side `box_length`.
///
/// # Errors
///
/// Rejects odd `n`, `n < 4`, and non-positive or non-finite `box_length`.
///
/// # Examples
///
/// ```
/// use dirac_sobolev::grid::make_grid;
/// let g = make_grid(64, 20.0).unwrap();
/// assert_eq!(g.h(), 0.3125);
/// assert!(make_grid(5, 1.0).is_err()); // odd n rejected
/// ```
pub fn make_grid(n: usize, box_length: f64) -> Result<GridSpec> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidGrid(format!(
            "points per axis must be even and at least 4, got {n}"
        )));
    }
    if !box_length.is_finite() || box_length <= 0.0 {
        return Err(Error::InvalidGrid(format!(
            "box length must be positive and finite, got {box_length}"
        )));
    }
    Ok(GridSpec { n, box_length })
}

impl GridSpec {
    /// Points per axis.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Side length of the box.
    pub fn box_length(&self) -> f64 {
        self.box_length
    }

    /// Grid spacing `h = L/n`.
    pub fn h(&self) -> f64 {
        self.box_length / self.n as f64
    }

    /// Box volume `L³`.
    pub fn volume(&self) -> f64 {
        self.box_length.powi(3)
    }

    /// Total number of sample points `n³`.
    pub fn len(&self) -> usize {
        self.n * self.n * self.n
    }

    /// Always false — a valid grid has at least 4³ points.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Flat index of the sample at integer coordinates `(ix, iy, iz)`;
    /// the x index varies fastest.
    #[inline]
    pub fn flat(&self, ix: usize, iy: usize, iz: usize) -> usize {
        ix + self.n * (iy + self.n * iz)
    }

    /// Integer coordinates of a flat index (inverse of [`GridSpec::flat`]).
    #[inline]
    pub fn coords(&self, flat: usize) -> [usize; 3] {
        let ix = flat % self.n;
        let iy = (flat / self.n) % self.n;
        let iz = flat / (self.n * self.n);
        [ix, iy, iz]
    }

    /// Physical position of a flat index: `(ix, iy, iz)·h`.
    #[inline]
    pub fn position(&self, flat: usize) -> [f64; 3] {
        let h = self.h();
        self.coords(flat).map(|i| i as f64 * h)
    }

    /// Signed integer frequency for a storage index `idx ∈ {0, …, n−1}` in
    /// DFT ordering: `0, 1, …, n/2 − 1, −n/2, …, −1`.
    #[inline]
    pub fn freq_int(&self, idx: usize) -> i64 {
        if idx < self.n / 2 {
            idx as i64
        } else {
            idx as i64 - self.n as i64
        }
    }

    /// The per-axis frequency lattice `ξ(k) = 2πk/L` in storage order
    /// (length `n`).
    pub fn xi_axis(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| 2.0 * PI * self.freq_int(i) as f64 / self.box_length)
            .collect()
    }

    /// The derivative lattice `ξ̃`: as [`GridSpec::xi_axis`] but with the
    /// unpaired Nyquist entry (storage index `n/2`) set exactly to zero.
    pub fn xi_tilde_axis(&self) -> Vec<f64> {
        let mut v = self.xi_axis();
        v[self.n / 2] = 0.0;
        v
    }

    /// Wraps a coordinate difference into the symmetric interval
    /// `[−L/2, L/2)` (minimum-image convention on the torus).
    #[inline]
    pub fn min_image(&self, d: f64) -> f64 {
        let l = self.box_length;
        let mut r = d % l;
        if r < -l / 2.0 {
            r += l;
        } else if r >= l / 2.0 {
            r -= l;
        }
        r
    }

    /// Componentwise minimum image of a displacement vector.
    #[inline]
    pub fn min_image_vec(&self, d: [f64; 3]) -> [f64; 3] {
        d.map(|t| self.min_image(t))
    }

    /// Minimum-image distance between two positions on the torus.
    pub fn torus_distance(&self, a: [f64; 3], b: [f64; 3]) -> f64 {
        let mut s = 0.0;
        for j in 0..3 {
            let d = self.min_image(a[j] - b[j]);
            s += d * d;
        }
        s.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_frequencies_match_dft_ordering() {
        let g = make_grid(4, 2.0 * PI).unwrap();
        assert!((g.h() - PI / 2.0).abs() < 1e-15);
        let freqs: Vec<i64> = (0..4).map(|i| g.freq_int(i)).collect();
        assert_eq!(freqs, vec![0, 1, -2, -1]);
        let xi = g.xi_axis();
        assert!((xi[1] - 1.0).abs() < 1e-15); // 2π·1/(2π) = 1
        assert!((xi[2] + 2.0).abs() < 1e-15);
    }

    #[test]
    fn derivative_lattice_zeroes_only_the_nyquist_entry() {
        let g = make_grid(8, 5.0).unwrap();
        let xi = g.xi_axis();
        let xit = g.xi_tilde_axis();
        for i in 0..8 {
            if i == 4 {
                assert_eq!(xit[i], 0.0);
                assert!(xi[i] != 0.0);
            } else {
                assert_eq!(xit[i], xi[i]);
            }
        }
    }

    #[test]
    fn spacing_example() {
        let g = make_grid(64, 20.0).unwrap();
        assert_eq!(g.h(), 0.3125);
    }

    #[test]
    fn invalid_grids_are_rejected() {
        assert!(make_grid(5, 1.0).is_err());
        assert!(make_grid(2, 1.0).is_err());
        assert!(make_grid(0, 1.0).is_err());
        assert!(make_grid(8, 0.0).is_err());
        assert!(make_grid(8, -3.0).is_err());
        assert!(make_grid(8, f64::NAN).is_err());
    }

    #[test]
    fn flat_indexing_is_x_fastest() {
        let g = make_grid(4, 1.0).unwrap();
        assert_eq!(g.flat(1, 0, 0), 1);
        assert_eq!(g.flat(0, 1, 0), 4);
        assert_eq!(g.flat(0, 0, 1), 16);
        for flat in 0..g.len() {
            let [ix, iy, iz] = g.coords(flat);
            assert_eq!(g.flat(ix, iy, iz), flat);
        }
    }

    #[test]
    fn min_image_wraps_to_symmetric_interval() {
        let g = make_grid(4, 10.0).unwrap();
        assert_eq!(g.min_image(6.0), -4.0);
        assert_eq!(g.min_image(-6.0), 4.0);
        assert_eq!(g.min_image(2.0), 2.0);
        assert_eq!(g.min_image(5.0), -5.0); // half-open: L/2 maps to −L/2
    }
}
