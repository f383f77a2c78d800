//! The inverse Dirac operator as a real-space convolution.
//!
//! `(α·p + β)^{−1}` acts by convolution with the singular matrix kernel
//! `K(x) = (β − iα·(x/|x|²) − iα·(x/|x|³))·e^{−|x|}/(4π|x|)` built from the
//! Yukawa Green function `G(y) = e^{−|y|}/(4π|y|)`. This example samples the
//! kernel on the grid (with a finite-part correction on the origin cell) and
//! checks the convolution path against the exact spectral inverse.
//!
//! Run with `cargo run --example kernel_convolution`.

use dirac_sobolev::field::relative_l2_spinor;
use dirac_sobolev::generators::gaussian;
use dirac_sobolev::kernel::{
    cube_mean_inverse_distance, dirac_inverse_kernel, green_discrete_mass,
};
use dirac_sobolev::multiplier::dirac_inverse_spectral;
use dirac_sobolev::{make_grid, Result, SpinorField};

fn main() -> Result<()> {
    println!(
        "origin-cell mean of 1/|x| over the unit cube: {:.15}",
        cube_mean_inverse_distance()
    );

    for n in [32, 64] {
        let grid = make_grid(n, 20.0)?;
        // ∫G = 1 exactly; the discrete Riemann sum converges at O(h²).
        let mass = green_discrete_mass(grid);
        println!("n = {n}: discrete Green mass {:.6} (exact: 1)", mass);

        let f = SpinorField::from_single_component(2, gaussian(grid, [10.0; 3], 1.5)?)?;
        let via_kernel = dirac_inverse_kernel(&f)?;
        let via_symbol = dirac_inverse_spectral(&f)?;
        let dev = relative_l2_spinor(&via_kernel, &via_symbol);
        println!("n = {n}: kernel vs spectral inverse, rel L² {:.4e}", dev);
    }
    println!("(the deviation shrinks at O(h²): halving h cuts it ~4×)");
    Ok(())
}
