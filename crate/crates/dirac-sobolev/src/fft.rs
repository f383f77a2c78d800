//! Unitary 3D fast Fourier transforms.
//!
//! Thin wrapper over `rustfft` that applies 1D transforms along each of the
//! three axes of an `n³` array stored x-fastest, with the *unitary*
//! normalization `1/n^{3/2}` on both directions, so that
//!
//! * `inverse(forward(f)) = f` to machine precision, and
//! * Parseval holds on the nose: `Σ |f̂|² = Σ |f|²`.
//!
//! Plans are cached per thread (the planner is not shared across threads, so
//! the engine is reentrant by construction).

use crate::C64;
use rustfft::{Fft, FftPlanner};
use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

/// Forward and inverse plans for one axis length.
type PlanPair = (Arc<dyn Fft<f64>>, Arc<dyn Fft<f64>>);

thread_local! {
    static PLAN_CACHE: RefCell<HashMap<usize, PlanPair>> = RefCell::new(HashMap::new());
}

/// A planned unitary 3D FFT for a fixed grid size `n` per axis.
pub struct Fft3 {
    n: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl Fft3 {
    /// Plans (or reuses a cached plan for) transforms of size `n` per axis.
    pub fn new(n: usize) -> Self {
        let (forward, inverse) = PLAN_CACHE.with(|cache| {
            let mut cache = cache.borrow_mut();
            cache
                .entry(n)
                .or_insert_with(|| {
                    let mut planner = FftPlanner::new();
                    (planner.plan_fft_forward(n), planner.plan_fft_inverse(n))
                })
                .clone()
        });
        Self {
            n,
            forward,
            inverse,
        }
    }

    /// In-place forward transform with unitary normalization.
    ///
    /// # Panics
    ///
    /// Panics if `values.len() != n³`.
    pub fn forward(&self, values: &mut [C64]) {
        self.transform(values, true);
    }

    /// In-place inverse transform with unitary normalization.
    pub fn inverse(&self, values: &mut [C64]) {
        self.transform(values, false);
    }

    fn transform(&self, values: &mut [C64], forward: bool) {
        let n = self.n;
        assert_eq!(values.len(), n * n * n, "buffer must hold n^3 samples");
        let plan = if forward {
            &self.forward
        } else {
            &self.inverse
        };
        let mut scratch = vec![C64::default(); plan.get_inplace_scratch_len()];

        // Axis x: rows are contiguous.
        for row in values.chunks_exact_mut(n) {
            plan.process_with_scratch(row, &mut scratch);
        }

        // Axes y and z: gather strided rows into a contiguous buffer.
        let mut buf = vec![C64::default(); n];
        let mut strided_pass = |values: &mut [C64], base: usize, stride: usize| {
            for (i, slot) in buf.iter_mut().enumerate() {
                *slot = values[base + i * stride];
            }
            plan.process_with_scratch(&mut buf, &mut scratch);
            for (i, slot) in buf.iter().enumerate() {
                values[base + i * stride] = *slot;
            }
        };
        // Axis y (stride n): one row per fixed (ix, iz).
        for iz in 0..n {
            for ix in 0..n {
                strided_pass(values, ix + iz * n * n, n);
            }
        }
        // Axis z (stride n²): one row per fixed (ix, iy).
        for iy in 0..n {
            for ix in 0..n {
                strided_pass(values, ix + iy * n, n * n);
            }
        }

        let scale = 1.0 / (n as f64).powi(3).sqrt();
        for v in values.iter_mut() {
            *v *= scale;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_volume(n: usize, seed: u64) -> Vec<C64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n * n * n)
            .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect()
    }

    #[test]
    fn round_trip_is_identity_to_machine_precision() {
        for n in [4, 6, 8, 16] {
            let fft = Fft3::new(n);
            let original = random_volume(n, 3);
            let mut v = original.clone();
            fft.forward(&mut v);
            fft.inverse(&mut v);
            let num: f64 = v
                .iter()
                .zip(&original)
                .map(|(a, b)| (a - b).norm_sqr())
                .sum::<f64>()
                .sqrt();
            let den: f64 = original.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            assert!(
                num / den <= 1e-12,
                "round trip error {} at n={n}",
                num / den
            );
        }
    }

    #[test]
    fn transform_is_unitary() {
        let n = 8;
        let fft = Fft3::new(n);
        let mut v = random_volume(n, 7);
        let before: f64 = v.iter().map(|a| a.norm_sqr()).sum();
        fft.forward(&mut v);
        let after: f64 = v.iter().map(|a| a.norm_sqr()).sum();
        assert!((before - after).abs() <= 1e-12 * before);
    }

    #[test]
    fn delta_transforms_to_constant_spectrum() {
        let n = 4;
        let fft = Fft3::new(n);
        let mut v = vec![C64::default(); n * n * n];
        v[0] = C64::new(1.0, 0.0);
        fft.forward(&mut v);
        let expected = 1.0 / (n as f64).powi(3).sqrt();
        for z in &v {
            assert!((z.re - expected).abs() <= 1e-14 && z.im.abs() <= 1e-14);
        }
    }

    #[test]
    fn plane_wave_transforms_to_single_bin() {
        // e^{2πi·k·x/n} with k = (1, 2, 3) occupies exactly one spectral bin.
        let n = 8;
        let fft = Fft3::new(n);
        let mut v: Vec<C64> = Vec::with_capacity(n * n * n);
        for iz in 0..n {
            for iy in 0..n {
                for ix in 0..n {
                    let phase = 2.0
                        * std::f64::consts::PI
                        * (ix as f64 * 1.0 + iy as f64 * 2.0 + iz as f64 * 3.0)
                        / n as f64;
                    v.push(C64::new(phase.cos(), phase.sin()));
                }
            }
        }
        fft.forward(&mut v);
        let hot = 1 + n * (2 + n * 3);
        for (i, z) in v.iter().enumerate() {
            if i == hot {
                assert!((z.norm() - (n as f64).powi(3).sqrt()).abs() < 1e-9);
            } else {
                assert!(z.norm() < 1e-9, "leakage at bin {i}: {}", z.norm());
            }
        }
    }
}
