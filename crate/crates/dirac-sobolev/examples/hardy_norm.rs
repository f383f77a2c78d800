//! The local Hardy norm `‖u‖_{h¹} = ‖u‖₁ + Σ_j ‖r'_j u‖₁` with smooth
//! truncated Riesz transforms `r'_j = ∂_j(1−Δ)^{−1/2}`.
//!
//! `h¹` is the right source space for the inverse Dirac operator at `p = 1`:
//! plain L¹ control is not enough. Two families show the divide —
//! fixed-scale Gaussians have `h¹ ≍ L¹`, while mollified deltas have
//! `‖φ_ε‖₁ = 1` but `‖φ_ε‖_{h¹} ~ c·log(1/ε) → ∞`.
//!
//! Run with `cargo run --release --example hardy_norm`.

use dirac_sobolev::fit::affine_fit;
use dirac_sobolev::generators::{gaussian, mollified_delta};
use dirac_sobolev::norms::local_hardy_norm;
use dirac_sobolev::{make_grid, Result};

fn main() -> Result<()> {
    let grid = make_grid(64, 20.0)?;
    let center = [10.0; 3];

    println!("fixed-scale Gaussians (h¹ comparable to L¹ = 1):");
    for width in [2.0, 1.5, 1.0] {
        let u = gaussian(grid, center, width)?;
        let ratio = local_hardy_norm(&u)? / u.lp_norm(1.0)?;
        println!("  width {width:<4} h¹/L¹ = {ratio:.4}");
    }

    println!("\nmollified deltas (L¹ = 1 but h¹ diverges like log(1/ε)):");
    let eps_list = [2.5, 1.25, 0.625, 0.3125];
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for eps in eps_list {
        let u = mollified_delta(grid, center, eps)?;
        let h1 = local_hardy_norm(&u)?;
        println!("  eps {eps:<7} L¹ = {:.6}  h¹ = {:.4}", u.lp_norm(1.0)?, h1);
        xs.push((1.0 / eps).ln());
        ys.push(h1);
    }
    let fit = affine_fit(&xs, &ys)?;
    println!(
        "fit h¹ ≈ {:.4}·log(1/ε) + {:.4}, R² = {:.4}",
        fit.slope, fit.intercept, fit.r_squared
    );
    Ok(())
}
