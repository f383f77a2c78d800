//! Stochastic ascent on the Sobolev / Dirac–Sobolev ratio.
//!
//! Maximizes `ρ(f) = ‖f‖_{S,1,p} / ‖f‖_{D,1,p}` over the Dirac–Sobolev unit
//! sphere by seeded random spectral steps. At `p = 1` the ratio climbs well
//! past its starting value — there is no upper equivalence constant to stop
//! it. At `p = 2` every step is rejected: the ratio is pinned at 1.
//!
//! Run with `cargo run --release --example ratio_ascent`.

use dirac_sobolev::experiments::ratio_maximize;
use dirac_sobolev::{make_grid, Result};

fn main() -> Result<()> {
    let grid = make_grid(16, 16.0)?;

    for p in [1.0, 2.0] {
        let report = ratio_maximize(grid, p, 120, 0.25, 11)?;
        println!("ascent at p = {p}:");
        for row in &report.rows {
            if let Some(ratio) = row.values.get("ratio") {
                println!("  {:<9} ratio {:.6}", row.label, ratio);
            }
        }
        if let Some(fin) = report.rows.iter().find(|r| r.label == "final") {
            println!(
                "  final: {:.6} → {:.6} in {} accepted steps",
                fin.values["initial_ratio"], fin.values["final_ratio"], fin.values["accepted"]
            );
        }
        for v in &report.verdicts {
            println!(
                "  check {:<22} {}",
                v.check,
                if v.pass { "pass" } else { "FAIL" }
            );
        }
        println!();
    }
    Ok(())
}
