//! The exact Dirac matrix algebra: anticommutation relations, the symbol
//! factorization `σ_H(ξ)·σ_B(ξ) = I`, and the isometry of each matrix on
//! every `ℓᵖ` norm of `ℂ⁴`.
//!
//! Run with `cargo run --example dirac_algebra`.

use dirac_sobolev::clifford::{
    apply_matrix, dirac_matrices, dirac_symbol, inverse_symbol, vec_p_norm, CVec4, Matrix4,
};
use dirac_sobolev::C64;
use rand::{Rng, SeedableRng};

fn main() {
    let (alpha, beta) = dirac_matrices();

    // Anticommutation: {α_j, α_k} = 2δ_jk I, {α_j, β} = 0, β² = I.
    // All entries are in {0, ±1, ±i}, so these hold with zero residual.
    let id2 = Matrix4::identity().scale(C64::new(2.0, 0.0));
    let mut worst = 0.0f64;
    for j in 0..3 {
        for k in 0..3 {
            let anti = alpha[j].mul(&alpha[k]).add(&alpha[k].mul(&alpha[j]));
            let target = if j == k { id2 } else { Matrix4::zero() };
            worst = worst.max(anti.sub(&target).max_abs_entry());
        }
        let anti = alpha[j].mul(&beta).add(&beta.mul(&alpha[j]));
        worst = worst.max(anti.max_abs_entry());
    }
    worst = worst.max(beta.mul(&beta).sub(&Matrix4::identity()).max_abs_entry());
    println!("anticommutation residual (exact zero expected): {worst:e}");

    // σ_H(ξ)·σ_B(ξ) = I at a generic frequency, by the Clifford identity
    // (α·ξ + β)² = (1 + |ξ|²)·I.
    let xi = [0.7, -1.3, 2.1];
    let product = dirac_symbol(xi, true).mul(&inverse_symbol(xi));
    let dev = product.sub(&Matrix4::identity()).max_abs_entry();
    println!("σ_H(ξ)·σ_B(ξ) − I at ξ = {xi:?}: max entry {dev:e}");

    // Each α_j and β permutes coordinates up to unimodular phases, so it is
    // an isometry of every ℓᵖ norm, not just ℓ².
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let v = CVec4([0; 4].map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))));
    println!("ℓᵖ isometry of α_1, α_2, α_3, β on a random vector:");
    for p in [1.0, 1.5, 2.0, 3.0, 10.0] {
        let base = vec_p_norm(&v, p).unwrap();
        let devs: Vec<f64> = alpha
            .iter()
            .chain(std::iter::once(&beta))
            .map(|m| (vec_p_norm(&apply_matrix(m, &v), p).unwrap() - base).abs() / base)
            .collect();
        let worst = devs.into_iter().fold(0.0f64, f64::max);
        println!("  p = {p:<4}  worst relative deviation {worst:e}");
    }
}
