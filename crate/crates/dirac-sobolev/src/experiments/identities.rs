//! `verify_identities`: cross-checks between the matrix operator, its
//! Fourier symbols, and the componentwise first-order systems.
//!
//! All fields are band-limited (no energy at or above the Nyquist index),
//! so identities that compose odd- and even-order multipliers hold to
//! rounding error rather than up to the self-adjoint Nyquist convention.
//!
//! Checks, each with a pinned tolerance:
//!
//! 1. `componentwise_forward` — assembling `g = (α·p + β)f` from twelve
//!    scalar derivatives, one component at a time, matches the matrix
//!    operator.
//! 2. `inverse_two_sided` — the resolvent multiplier is a two-sided
//!    inverse: `B(Hf) = f` and `H(Bf) = f`.
//! 3. `laplacian_rows` — the twelve second-order rows
//!    `Δ∂_j f_k = Σ ± ∂_j ∂_a (i g_b)` recover second derivatives of `f`
//!    from first-order data of the massless image `g = (α·p)f`.
//! 4. `resolvent_derivative_transfer` — for a source in the second slot
//!    only, `∂_j (Bg)₄ = i·m_{j3}(D) g₂` with `m_{j3}` the second-order
//!    multiplier `−ξ_j ξ₃ (1 + |ξ|²)^{−1}`.
//! 5. `riesz_factorization` — `r'_j r'_k = m_{jk}(D)` exactly, bin by bin.
//! 6. `multiplier_bounds` — `sup |r'_j| ≤ 1` and `sup_{j≠k} |m_{jk}| ≤ 1/2`
//!    on the sampled lattice, with the suprema nearly attained.

use crate::error::Result;
use crate::experiments::{record_grid, rng_stream};
use crate::field::{relative_l2_scalar, relative_l2_spinor, ScalarField, SpinorField};
use crate::generators::{band_limit_cap, random_band_limited_scalar, random_band_limited_spinor};
use crate::grid::GridSpec;
use crate::multiplier::{
    apply_scalar, dirac_apply, dirac_inverse_spectral, for_each_bin, DiracScheme,
};
use crate::report::{ExperimentReport, Row};
use crate::symbols::{derivative, laplacian, riesz_smooth, second_order};
use crate::C64;

const TOL_FORWARD: f64 = 1e-10;
const TOL_INVERSE: f64 = 1e-10;
const TOL_LAPLACE: f64 = 1e-9;
const TOL_RESOLVENT: f64 = 1e-10;
const TOL_FACTOR: f64 = 1e-12;
const TOL_BOUND: f64 = 1e-10;

/// `Σ c_i · f_i` over pairs of coefficients and equal-grid fields.
fn combine(grid: GridSpec, terms: &[(C64, &ScalarField)]) -> ScalarField {
    let mut out = ScalarField::zeros(grid);
    for (c, f) in terms {
        for (o, v) in out.values_mut().iter_mut().zip(f.values()) {
            *o += c * v;
        }
    }
    out
}

/// `∂_j f_k` for one spinor component (1-based `k`).
fn d(f: &SpinorField, j: usize, k: usize) -> Result<ScalarField> {
    apply_scalar(f.component(k), &derivative(j))
}

/// `∂_j ∂_a u` via the product symbol.
fn dd(u: &ScalarField, j: usize, a: usize) -> Result<ScalarField> {
    apply_scalar(u, &derivative(j).product(&derivative(a)))
}

/// Assembles `g = (α·p + β)f` from scalar derivatives, row by row:
///
/// ```text
/// g₁ = −i∂₁f₄ − ∂₂f₄ − i∂₃f₃ + f₁
/// g₂ = −i∂₁f₃ + ∂₂f₃ + i∂₃f₄ + f₂
/// g₃ = −i∂₁f₂ − ∂₂f₂ − i∂₃f₁ − f₃
/// g₄ = −i∂₁f₁ + ∂₂f₁ + i∂₃f₂ − f₄
/// ```
fn componentwise_forward(f: &SpinorField) -> Result<SpinorField> {
    let grid = f.grid();
    let i = C64::i();
    let mi = -C64::i();
    let one = C64::new(1.0, 0.0);
    let g1 = combine(
        grid,
        &[
            (mi, &d(f, 1, 4)?),
            (-one, &d(f, 2, 4)?),
            (mi, &d(f, 3, 3)?),
            (one, f.component(1)),
        ],
    );
    let g2 = combine(
        grid,
        &[
            (mi, &d(f, 1, 3)?),
            (one, &d(f, 2, 3)?),
            (i, &d(f, 3, 4)?),
            (one, f.component(2)),
        ],
    );
    let g3 = combine(
        grid,
        &[
            (mi, &d(f, 1, 2)?),
            (-one, &d(f, 2, 2)?),
            (mi, &d(f, 3, 1)?),
            (-one, f.component(3)),
        ],
    );
    let g4 = combine(
        grid,
        &[
            (mi, &d(f, 1, 1)?),
            (one, &d(f, 2, 1)?),
            (i, &d(f, 3, 2)?),
            (-one, f.component(4)),
        ],
    );
    SpinorField::from_components([g1, g2, g3, g4])
}

/// The twelve second-order rows: for the massless image `g = (α·p)f` and
/// each axis `j`, recover `Δ∂_j f_k` from second derivatives of two `g`
/// components. Returns the worst relative residual per axis, ordered
/// `(f₁, f₂, f₃, f₄)`.
fn laplacian_rows(f: &SpinorField, g: &SpinorField, j: usize) -> Result<[f64; 4]> {
    let grid = f.grid();
    let i = C64::i();
    let one = C64::new(1.0, 0.0);
    let lap_dj = laplacian().product(&derivative(j));
    // Δ∂_j f₁ = i∂_j∂₁g₄ + ∂_j∂₂g₄ + i∂_j∂₃g₃
    // Δ∂_j f₂ = i∂_j∂₁g₃ − ∂_j∂₂g₃ − i∂_j∂₃g₄
    // Δ∂_j f₃ = i∂_j∂₁g₂ + ∂_j∂₂g₂ + i∂_j∂₃g₁
    // Δ∂_j f₄ = i∂_j∂₁g₁ − ∂_j∂₂g₁ − i∂_j∂₃g₂
    let rows: [(usize, usize, C64, usize); 4] = [
        (1, 4, one, 3),
        (2, 3, -one, 4),
        (3, 2, one, 1),
        (4, 1, -one, 2),
    ];
    let mut residuals = [0.0; 4];
    for (slot, (k, a, sign2, b)) in rows.iter().enumerate() {
        let lhs = apply_scalar(f.component(*k), &lap_dj)?;
        let ga = g.component(*a);
        let gb = g.component(*b);
        let rhs = combine(
            grid,
            &[
                (i, &dd(ga, j, 1)?),
                (*sign2, &dd(ga, j, 2)?),
                (i * sign2, &dd(gb, j, 3)?),
            ],
        );
        residuals[slot] = relative_l2_scalar(&lhs, &rhs);
    }
    Ok(residuals)
}

/// Runs the full identity suite on seeded band-limited fields.
pub fn verify_identities(grid: GridSpec, seed: u64) -> Result<ExperimentReport> {
    let mut report = ExperimentReport::new("verify_identities", seed);
    record_grid(&mut report, grid);
    let kmax = band_limit_cap(grid, 6);
    report.set_param("kmax", kmax as u64);

    let f = random_band_limited_spinor(grid, kmax, &mut rng_stream(seed, 0));

    // 1. Componentwise forward system vs. the matrix operator.
    let g_matrix = dirac_apply(&f, true, DiracScheme::Spectral)?;
    let g_rows = componentwise_forward(&f)?;
    let res_forward = relative_l2_spinor(&g_rows, &g_matrix);
    report.push_row(Row::new("componentwise_forward").with("residual", res_forward));
    report.push_verdict(
        "componentwise_forward",
        res_forward <= TOL_FORWARD,
        TOL_FORWARD - res_forward,
    );

    // 2. Two-sided inverse.
    let res_left = relative_l2_spinor(&dirac_inverse_spectral(&g_matrix)?, &f);
    let bf = dirac_inverse_spectral(&f)?;
    let res_right = relative_l2_spinor(&dirac_apply(&bf, true, DiracScheme::Spectral)?, &f);
    report.push_row(
        Row::new("inverse_two_sided")
            .with("residual_left", res_left)
            .with("residual_right", res_right),
    );
    let worst_inv = res_left.max(res_right);
    report.push_verdict(
        "inverse_two_sided",
        worst_inv <= TOL_INVERSE,
        TOL_INVERSE - worst_inv,
    );

    // 3. Laplacian rows from the massless image.
    let g0 = dirac_apply(&f, false, DiracScheme::Spectral)?;
    let mut worst_lap: f64 = 0.0;
    for j in 1..=3 {
        let res = laplacian_rows(&f, &g0, j)?;
        report.push_row(
            Row::new(format!("laplacian_rows_j{j}"))
                .with("residual_f1", res[0])
                .with("residual_f2", res[1])
                .with("residual_f3", res[2])
                .with("residual_f4", res[3]),
        );
        worst_lap = worst_lap.max(res.into_iter().fold(0.0, f64::max));
    }
    report.push_verdict(
        "laplacian_rows",
        worst_lap <= TOL_LAPLACE,
        TOL_LAPLACE - worst_lap,
    );

    // 4. Single-source resolvent: g = (0, u, 0, 0), f = Bg, then
    //    ∂_j f₄ = i·m_{j3}(D) u.
    let u = random_band_limited_scalar(grid, kmax, &mut rng_stream(seed, 1));
    let src = SpinorField::from_single_component(2, u.clone())?;
    let bsrc = dirac_inverse_spectral(&src)?;
    let mut row = Row::new("resolvent_derivative_transfer");
    let mut worst_res: f64 = 0.0;
    for j in 1..=3 {
        let lhs = apply_scalar(bsrc.component(4), &derivative(j))?;
        let rhs = &apply_scalar(&u, &second_order(j, 3))? * C64::i();
        let res = relative_l2_scalar(&lhs, &rhs);
        row = row.with(format!("residual_j{j}"), res);
        worst_res = worst_res.max(res);
    }
    report.push_row(row);
    report.push_verdict(
        "resolvent_derivative_transfer",
        worst_res <= TOL_RESOLVENT,
        TOL_RESOLVENT - worst_res,
    );

    // 5. r'_j r'_k = m_{jk}(D), checked as operators on u.
    let mut worst_fac: f64 = 0.0;
    for (j, k) in [(1, 1), (1, 2), (2, 3), (3, 3)] {
        let via_riesz = apply_scalar(&u, &riesz_smooth(j).product(&riesz_smooth(k)))?;
        let direct = apply_scalar(&u, &second_order(j, k))?;
        worst_fac = worst_fac.max(relative_l2_scalar(&via_riesz, &direct));
    }
    report.push_row(Row::new("riesz_factorization").with("max_residual", worst_fac));
    report.push_verdict(
        "riesz_factorization",
        worst_fac <= TOL_FACTOR,
        TOL_FACTOR - worst_fac,
    );

    // 6. Multiplier bounds over every sampled frequency.
    let mut sup_riesz: f64 = 0.0;
    let mut sup_mixed: f64 = 0.0;
    let riesz_syms = [riesz_smooth(1), riesz_smooth(2), riesz_smooth(3)];
    let mixed_syms = [second_order(1, 2), second_order(1, 3), second_order(2, 3)];
    for_each_bin(grid, |_, s| {
        for sym in &riesz_syms {
            sup_riesz = sup_riesz.max(sym.eval(s).norm());
        }
        for sym in &mixed_syms {
            sup_mixed = sup_mixed.max(sym.eval(s).norm());
        }
    });
    report.push_row(
        Row::new("multiplier_bounds")
            .with("sup_smooth_riesz", sup_riesz)
            .with("sup_mixed_second_order", sup_mixed),
    );
    let slack = (1.0 + TOL_BOUND - sup_riesz).min(0.5 + TOL_BOUND - sup_mixed);
    report.push_verdict("multiplier_bounds", slack >= 0.0, slack);

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;

    #[test]
    fn suite_passes_on_a_moderate_grid() {
        let grid = make_grid(16, 10.0).unwrap();
        let report = verify_identities(grid, 0).unwrap();
        assert!(report.all_pass(), "{}", report.to_csv_string());
        assert_eq!(report.verdicts.len(), 6);
    }

    #[test]
    fn reports_are_seed_sensitive_but_reproducible() {
        let grid = make_grid(8, 5.0).unwrap();
        let a = verify_identities(grid, 1)
            .unwrap()
            .to_json_string()
            .unwrap();
        let b = verify_identities(grid, 1)
            .unwrap()
            .to_json_string()
            .unwrap();
        assert_eq!(a, b);
        let c = verify_identities(grid, 2)
            .unwrap()
            .to_json_string()
            .unwrap();
        assert_ne!(a, c, "different seeds draw different fields");
    }

    #[test]
    fn componentwise_rows_detect_a_sign_error() {
        // Negative control: flipping the mass sign must break row agreement.
        let grid = make_grid(8, 5.0).unwrap();
        let f = random_band_limited_spinor(grid, 3, &mut rng_stream(9, 0));
        let good = componentwise_forward(&f).unwrap();
        let massless = dirac_apply(&f, false, DiracScheme::Spectral).unwrap();
        assert!(relative_l2_spinor(&good, &massless) > 1e-3);
    }
}
