//! The logarithmic divergence that separates the norms at `p = 1`.
//!
//! Along the mollified-delta family `φ_ε` placed in one spinor slot, the
//! ratio `‖f_ε‖_{S,1,1} / ‖f_ε‖_{D,1,1}` grows like `c·log(1/ε)`: the
//! Sobolev norm sees twelve partial derivatives whose L¹ masses diverge,
//! while the Dirac image keeps cancellations. At `p = 2` the same family
//! has ratio exactly 1 — the divergence is a genuinely `p = 1` phenomenon.
//!
//! Run with `cargo run --release --example p1_witness`.

use dirac_sobolev::experiments::p1_witness;
use dirac_sobolev::runner::default_eps_list;
use dirac_sobolev::{make_grid, Result};

fn main() -> Result<()> {
    let grid = make_grid(64, 20.0)?;
    let report = p1_witness(grid, &default_eps_list(20.0), 0)?;

    println!("mollified-delta witness family on a 64³ grid, box length 20:");
    println!(
        "  {:>8} {:>12} {:>12} {:>10}",
        "eps", "ratio (p=1)", "ratio (p=2)", "hardy h¹"
    );
    for row in report.rows.iter().filter(|r| r.label.starts_with("scale_")) {
        println!(
            "  {:>8.4} {:>12.6} {:>12.9} {:>10.4}",
            row.values["eps"],
            row.values["ratio"],
            row.values["ratio_p2"],
            row.values["hardy_source"]
        );
    }
    for row in report.rows.iter().filter(|r| r.label.starts_with("fit_")) {
        println!(
            "{}: slope {:.4}, intercept {:.4}, R² {:.4}",
            row.label, row.values["slope"], row.values["intercept"], row.values["r_squared"]
        );
    }
    for v in &report.verdicts {
        println!(
            "check {:<24} {}",
            v.check,
            if v.pass { "pass" } else { "FAIL" }
        );
    }
    Ok(())
}
