//! Fourier multiplier symbols on the discrete frequency lattice.
//!
//! A symbol is a function of the lattice frequency `ξ_k = 2πk/L`,
//! `k ∈ {−n/2, …, n/2 − 1}` per axis. Each lattice bin carries *two*
//! frequency readings, bundled in a [`FreqSample`]:
//!
//! * `xi` — the full lattice frequency, natural for even symbols such as
//!   `|ξ|²` or `(1 + |ξ|²)^{−1}`;
//! * `xi_tilde` — the same vector with the unpaired Nyquist component
//!   zeroed, the correct sampling for odd (first-derivative-like) factors.
//!
//! The zeroed-Nyquist reading keeps odd multipliers skew-adjoint and maps
//! real fields to real fields; it is exactly the symbol of the centered
//! difference limit on the even lattice. Symbols that mix parities take each
//! factor from its own reading — e.g. the Riesz-type multipliers use
//! `iξ̃_j` over a denominator in the full `ξ` — which makes compositions
//! like `r'_j r'_k = ∂_j∂_k(1 − Δ)^{−1}` hold *exactly*, bin by bin, and
//! avoids `0/0` at pure Nyquist bins. The Dirac symbol and its inverse use
//! `ξ̃` throughout, so the operator and its inverse annihilate each other to
//! machine precision on every discrete field.

use crate::clifford::{dirac_matrices, Matrix4};
use crate::error::{Error, Result};
use crate::C64;
use std::fmt;
use std::sync::Arc;

/// The two frequency readings of one lattice bin.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FreqSample {
    /// Full lattice frequency `ξ`.
    pub xi: [f64; 3],
    /// Derivative lattice frequency `ξ̃`: Nyquist components zeroed.
    pub xi_tilde: [f64; 3],
}

impl FreqSample {
    /// A sample away from the Nyquist sheet, where both readings agree.
    pub fn interior(xi: [f64; 3]) -> Self {
        Self { xi, xi_tilde: xi }
    }

    fn norm_sqr_full(&self) -> f64 {
        self.xi.iter().map(|x| x * x).sum()
    }
}

type ScalarEval = dyn Fn(&FreqSample) -> C64 + Send + Sync;
type MatrixEval = dyn Fn(&FreqSample) -> Matrix4 + Send + Sync;

/// A scalar Fourier multiplier `m(ξ)`.
#[derive(Clone)]
pub struct ScalarSymbol {
    name: String,
    eval: Arc<ScalarEval>,
}

impl ScalarSymbol {
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(&FreqSample) -> C64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, s: &FreqSample) -> C64 {
        (self.eval)(s)
    }

    /// Pointwise product `a(ξ)·b(ξ)` — the symbol of the composed operator.
    pub fn product(&self, other: &ScalarSymbol) -> ScalarSymbol {
        let a = Arc::clone(&self.eval);
        let b = Arc::clone(&other.eval);
        ScalarSymbol {
            name: format!("{}*{}", self.name, other.name),
            eval: Arc::new(move |s| a(s) * b(s)),
        }
    }
}

impl fmt::Debug for ScalarSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScalarSymbol")
            .field("name", &self.name)
            .finish()
    }
}

/// A 4×4 matrix-valued Fourier multiplier `M(ξ)`.
#[derive(Clone)]
pub struct MatrixSymbol {
    name: String,
    eval: Arc<MatrixEval>,
}

impl MatrixSymbol {
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(&FreqSample) -> Matrix4 + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, s: &FreqSample) -> Matrix4 {
        (self.eval)(s)
    }

    /// Pointwise matrix product `A(ξ)B(ξ)` (apply `B` first).
    pub fn product(&self, other: &MatrixSymbol) -> MatrixSymbol {
        let a = Arc::clone(&self.eval);
        let b = Arc::clone(&other.eval);
        MatrixSymbol {
            name: format!("{}*{}", self.name, other.name),
            eval: Arc::new(move |s| a(s).mul(&b(s))),
        }
    }
}

impl fmt::Debug for MatrixSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixSymbol")
            .field("name", &self.name)
            .finish()
    }
}

fn check_axis(j: usize) -> usize {
    assert!((1..=3).contains(&j), "axis index must be 1..=3, got {j}");
    j - 1
}

/// `iξ̃_j` — the partial derivative `∂_j`.
pub fn derivative(j: usize) -> ScalarSymbol {
    let a = check_axis(j);
    ScalarSymbol::new(format!("d{j}"), move |s| C64::new(0.0, s.xi_tilde[a]))
}

/// `−|ξ|²` — the Laplacian `Δ`.
pub fn laplacian() -> ScalarSymbol {
    ScalarSymbol::new("laplacian", |s| C64::new(-s.norm_sqr_full(), 0.0))
}

/// `(1 + |ξ|²)^{−order/2}` — the Bessel potential `(1 − Δ)^{−order/2}`.
///
/// `bessel(2.0)` inverts `1 − Δ`; `bessel(1.0)` is its square root;
/// negative orders give the forward powers, e.g. `bessel(-2.0)` is `1 − Δ`
/// itself.
pub fn bessel(order: f64) -> Result<ScalarSymbol> {
    if !order.is_finite() {
        return Err(Error::InvalidParam(format!(
            "bessel order must be finite, got {order}"
        )));
    }
    Ok(ScalarSymbol::new(format!("bessel{order}"), move |s| {
        C64::new((1.0 + s.norm_sqr_full()).powf(-order / 2.0), 0.0)
    }))
}

/// `iξ̃_j / |ξ|` — the Riesz transform `R_j`, with the constant mode (and
/// only it) mapped to zero.
pub fn riesz(j: usize) -> ScalarSymbol {
    let a = check_axis(j);
    ScalarSymbol::new(format!("riesz{j}"), move |s| {
        let norm = s.norm_sqr_full().sqrt();
        if norm == 0.0 {
            C64::default()
        } else {
            C64::new(0.0, s.xi_tilde[a] / norm)
        }
    })
}

/// `iξ̃_j (1 + |ξ|²)^{−1/2}` — the smoothly truncated Riesz transform
/// `r'_j = ∂_j (1 − Δ)^{−1/2}` that defines the local Hardy seminorm. At
/// high frequency it agrees with `riesz` to `O(|ξ|^{−2})`; at low frequency
/// it is a bounded derivative instead of a singular integral.
pub fn riesz_smooth(j: usize) -> ScalarSymbol {
    let a = check_axis(j);
    ScalarSymbol::new(format!("riesz-smooth{j}"), move |s| {
        C64::new(0.0, s.xi_tilde[a] / (1.0 + s.norm_sqr_full()).sqrt())
    })
}

/// `−ξ̃_j ξ̃_k (1 + |ξ|²)^{−1}` — the second-order multiplier
/// `∂_j ∂_k (1 − Δ)^{−1}`. By construction it agrees with
/// `riesz_smooth(j) * riesz_smooth(k)` on every bin to a rounding error
/// (one square root versus two), and both sides vanish identically
/// wherever a Nyquist component enters.
pub fn second_order(j: usize, k: usize) -> ScalarSymbol {
    let a = check_axis(j);
    let b = check_axis(k);
    ScalarSymbol::new(format!("d{j}d{k}-bessel"), move |s| {
        C64::new(
            -s.xi_tilde[a] * s.xi_tilde[b] / (1.0 + s.norm_sqr_full()),
            0.0,
        )
    })
}

/// Radial transition window for the cutoff Riesz variant: radii where the
/// low-frequency part is fully suppressed (`r0`) and fully passed (`r1`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutoffSpec {
    r0: f64,
    r1: f64,
}

impl CutoffSpec {
    /// Requires `0 < r0 < r1`.
    pub fn new(r0: f64, r1: f64) -> Result<Self> {
        if !(r0.is_finite() && r1.is_finite() && 0.0 < r0 && r0 < r1) {
            return Err(Error::InvalidParam(format!(
                "cutoff radii must satisfy 0 < r0 < r1, got r0={r0}, r1={r1}"
            )));
        }
        Ok(Self { r0, r1 })
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn r1(&self) -> f64 {
        self.r1
    }

    /// `C^∞` ramp: 0 for `|ξ| ≤ r0`, 1 for `|ξ| ≥ r1`, strictly increasing
    /// in between (built from the standard `exp(−1/t)` gluing function).
    pub fn high_pass(&self, xi_norm: f64) -> f64 {
        let t = (xi_norm - self.r0) / (self.r1 - self.r0);
        fn e(t: f64) -> f64 {
            if t <= 0.0 {
                0.0
            } else {
                (-1.0 / t).exp()
            }
        }
        e(t) / (e(t) + e(1.0 - t))
    }
}

impl Default for CutoffSpec {
    fn default() -> Self {
        Self { r0: 1.0, r1: 2.0 }
    }
}

/// `ψ(|ξ|)·iξ̃_j/|ξ|` — the sharply localized Riesz variant: the genuine
/// Riesz symbol away from the origin, smoothly cut to zero inside the window.
pub fn riesz_cutoff(j: usize, cutoff: CutoffSpec) -> ScalarSymbol {
    let a = check_axis(j);
    ScalarSymbol::new(format!("riesz-cutoff{j}"), move |s| {
        let norm = s.norm_sqr_full().sqrt();
        if norm == 0.0 {
            C64::default()
        } else {
            C64::new(0.0, cutoff.high_pass(norm) * s.xi_tilde[a] / norm)
        }
    })
}

/// The Dirac symbol `σ(ξ̃) = α·ξ̃ (+ β)`: kinetic part alone when
/// `mass = false`, the full massive symbol when `mass = true`.
pub fn dirac(mass: bool) -> MatrixSymbol {
    let (alpha, beta) = dirac_matrices();
    let name = if mass {
        "alpha-dot-xi+beta"
    } else {
        "alpha-dot-xi"
    };
    MatrixSymbol::new(name, move |s| {
        let mut m = Matrix4::zero();
        for (j, a) in alpha.iter().enumerate() {
            m = m.add(&a.scale(C64::new(s.xi_tilde[j], 0.0)));
        }
        if mass {
            m = m.add(&beta);
        }
        m
    })
}

/// The inverse symbol `σ_B(ξ̃) = (α·ξ̃ + β)(1 + |ξ̃|²)^{−1}`.
///
/// Both the numerator and the denominator read the derivative lattice
/// `ξ̃`, so `σ(ξ̃)σ_B(ξ̃) = I` holds exactly on every bin — including the
/// Nyquist sheet, where both collapse to the mass term.
pub fn dirac_inverse() -> MatrixSymbol {
    let forward = dirac(true);
    MatrixSymbol::new("dirac-inverse", move |s| {
        let denom = 1.0 + s.xi_tilde.iter().map(|x| x * x).sum::<f64>();
        forward.eval(s).scale(C64::new(1.0 / denom, 0.0))
    })
}
