//! Exact Dirac/Pauli matrix algebra and the momentum-space symbols of the
//! Dirac operator and its inverse.
//!
//! The 4×4 Dirac matrices are built from the 2×2 Pauli matrices in the
//! standard (Dirac) representation:
//!
//! ```text
//! α_j = ( 0₂  σ_j )        β = ( 1₂   0₂ )
//!       ( σ_j  0₂ ),           ( 0₂  −1₂ ),      j = 1, 2, 3,
//! ```
//!
//! with entries in `{0, ±1, ±i}`, so every algebraic identity below holds
//! *exactly* in double precision — no tolerance is needed for
//!
//! * Hermiticity and unitarity of each `α_j` and `β`,
//! * the anticommutation relations `α_jα_k + α_kα_j = 2δ_{jk}I₄`
//!   (with the convention `α₄ := β`), and
//! * the p-norm isometry `|α_j a|_p = |a|_p` for every vector `a ∈ ℂ⁴`
//!   (each `α_j` permutes components up to unimodular phases).
//!
//! The momentum-space symbols are
//!
//! * `σ_H(ξ) = α·ξ + β` — the symbol of the Dirac operator with mass term,
//!   satisfying `σ_H(ξ)² = (1 + |ξ|²) I₄`, and
//! * `σ_B(ξ) = (1 + |ξ|²)^{−1} σ_H(ξ)` — the symbol of its inverse, so that
//!   `σ_H σ_B = σ_B σ_H = I₄` for every `ξ`, including `ξ = 0`.

use crate::error::{Error, Result};
use crate::C64;

#[inline]
fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// A 2×2 complex matrix; houses the Pauli matrices `σ₁, σ₂, σ₃` and the
/// 2×2 zero/identity blocks from which the Dirac matrices are assembled.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix2 {
    pub entries: [[C64; 2]; 2],
}

impl Matrix2 {
    pub const fn new(entries: [[C64; 2]; 2]) -> Self {
        Self { entries }
    }

    pub fn zero() -> Self {
        Self::new([[ZERO; 2]; 2])
    }

    pub fn identity() -> Self {
        Self::new([[ONE, ZERO], [ZERO, ONE]])
    }

    /// The Pauli matrix `σ_j` for `j ∈ {1, 2, 3}` (1-based, as in the
    /// mathematical notation).
    ///
    /// # Panics
    ///
    /// Panics if `j` is not 1, 2 or 3.
    pub fn pauli(j: usize) -> Self {
        match j {
            1 => Self::new([[ZERO, ONE], [ONE, ZERO]]),
            2 => Self::new([[ZERO, c(0.0, -1.0)], [c(0.0, 1.0), ZERO]]),
            3 => Self::new([[ONE, ZERO], [ZERO, c(-1.0, 0.0)]]),
            _ => panic!("Pauli index must be 1, 2 or 3, got {j}"),
        }
    }

    pub fn mul(&self, rhs: &Matrix2) -> Matrix2 {
        let mut out = Matrix2::zero();
        for r in 0..2 {
            for col in 0..2 {
                let mut acc = ZERO;
                for m in 0..2 {
                    acc += self.entries[r][m] * rhs.entries[m][col];
                }
                out.entries[r][col] = acc;
            }
        }
        out
    }
}

/// A 4×4 complex matrix; houses `α_j`, `β`, the symbols `σ_H(ξ)`, `σ_B(ξ)`,
/// and the convolution kernel values `K(x)`.
///
/// Stored densely as 16 complex entries; at this size clarity beats any
/// sparse/permutation shortcut.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix4 {
    pub entries: [[C64; 4]; 4],
}

/// A complex 4-vector `a = ᵗ(a₁, a₂, a₃, a₄)`, the pointwise value of a
/// spinor field.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CVec4(pub [C64; 4]);

impl CVec4 {
    pub fn zero() -> Self {
        CVec4([ZERO; 4])
    }
}

impl Matrix4 {
    pub const fn new(entries: [[C64; 4]; 4]) -> Self {
        Self { entries }
    }

    pub fn zero() -> Self {
        Self::new([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.entries[i][i] = ONE;
        }
        m
    }

    /// Entry in row `r`, column `c` (0-based).
    #[inline]
    pub fn at(&self, r: usize, c: usize) -> C64 {
        self.entries[r][c]
    }

    /// Assembles a 4×4 matrix from four 2×2 blocks
    /// `( a  b ; c  d )` in row order.
    pub fn from_blocks(a: Matrix2, b: Matrix2, cblk: Matrix2, d: Matrix2) -> Self {
        let mut m = Self::zero();
        for r in 0..2 {
            for col in 0..2 {
                m.entries[r][col] = a.entries[r][col];
                m.entries[r][col + 2] = b.entries[r][col];
                m.entries[r + 2][col] = cblk.entries[r][col];
                m.entries[r + 2][col + 2] = d.entries[r][col];
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Matrix4) -> Matrix4 {
        let mut out = Matrix4::zero();
        for r in 0..4 {
            for col in 0..4 {
                let mut acc = ZERO;
                for m in 0..4 {
                    acc += self.entries[r][m] * rhs.entries[m][col];
                }
                out.entries[r][col] = acc;
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix4) -> Matrix4 {
        let mut out = *self;
        for r in 0..4 {
            for col in 0..4 {
                out.entries[r][col] += rhs.entries[r][col];
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix4) -> Matrix4 {
        let mut out = *self;
        for r in 0..4 {
            for col in 0..4 {
                out.entries[r][col] -= rhs.entries[r][col];
            }
        }
        out
    }

    pub fn scale(&self, s: C64) -> Matrix4 {
        let mut out = *self;
        for r in 0..4 {
            for col in 0..4 {
                out.entries[r][col] *= s;
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix4 {
        let mut out = Matrix4::zero();
        for r in 0..4 {
            for col in 0..4 {
                out.entries[r][col] = self.entries[col][r].conj();
            }
        }
        out
    }

    /// Matrix–vector product `M a`.
    pub fn apply(&self, a: &CVec4) -> CVec4 {
        let mut out = CVec4::zero();
        for r in 0..4 {
            let mut acc = ZERO;
            for m in 0..4 {
                acc += self.entries[r][m] * a.0[m];
            }
            out.0[r] = acc;
        }
        out
    }

    /// Largest entrywise absolute value — the natural gauge for the exact
    /// identities of this module (anticommutation deviations are compared
    /// against literal zero).
    pub fn max_abs_entry(&self) -> f64 {
        let mut m = 0.0f64;
        for row in &self.entries {
            for e in row {
                m = m.max(e.norm());
            }
        }
        m
    }

    /// Operator 2-norm (largest singular value), computed by power iteration
    /// on `M†M`. The matrices of interest here are scalar multiples of
    /// unitaries, for which the iteration is exact after one step; 100
    /// iterations make the routine robust for general input as well.
    pub fn op_norm_2(&self) -> f64 {
        let mtm = self.adjoint().mul(self);
        let mut v = CVec4([c(1.0, 0.0), c(0.5, 0.25), c(0.25, -0.5), c(0.125, 0.0)]);
        let mut lambda = 0.0f64;
        for _ in 0..100 {
            let w = mtm.apply(&v);
            let norm = (w.0.iter().map(|z| z.norm_sqr()).sum::<f64>()).sqrt();
            if norm == 0.0 {
                return 0.0;
            }
            lambda = norm;
            for k in 0..4 {
                v.0[k] = w.0[k] / norm;
            }
        }
        lambda.sqrt()
    }
}

/// The triple of Dirac matrices `(α₁, α₂, α₃)` and the fourth matrix `β`,
/// in the block form quoted in the module docs. Entries are exactly
/// `{0, ±1, ±i}`.
pub fn dirac_matrices() -> ([Matrix4; 3], Matrix4) {
    let zero = Matrix2::zero();
    let alpha = [1, 2, 3].map(|j| {
        let s = Matrix2::pauli(j);
        Matrix4::from_blocks(zero, s, s, zero)
    });
    let beta = {
        let mut m = Matrix4::identity();
        m.entries[2][2] = c(-1.0, 0.0);
        m.entries[3][3] = c(-1.0, 0.0);
        m
    };
    (alpha, beta)
}

/// Matrix–vector product as a free function (thin wrapper over
/// [`Matrix4::apply`], kept for discoverability next to [`vec_p_norm`]).
pub fn apply_matrix(m: &Matrix4, a: &CVec4) -> CVec4 {
    m.apply(a)
}

/// The vector p-norm `|a|_p = (Σ_k |a_k|^p)^{1/p}` on `ℂ⁴`.
///
/// Rejects `p < 1` (not a norm there) and non-finite `p`.
pub fn vec_p_norm(a: &CVec4, p: f64) -> Result<f64> {
    if !p.is_finite() || p < 1.0 {
        return Err(Error::InvalidParam(format!(
            "vector p-norm requires finite p >= 1, got {p}"
        )));
    }
    Ok(vec_p_norm_unchecked(a, p))
}

/// Same as [`vec_p_norm`] without the parameter check; used in quadrature
/// loops where `p` has already been validated once.
#[inline]
pub(crate) fn vec_p_norm_unchecked(a: &CVec4, p: f64) -> f64 {
    if p == 1.0 {
        a.0.iter().map(|z| z.norm()).sum()
    } else if p == 2.0 {
        a.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    } else {
        let s: f64 = a.0.iter().map(|z| z.norm().powf(p)).sum();
        s.powf(1.0 / p)
    }
}

/// The Dirac symbol `σ(ξ) = α·ξ` or, with the mass term, `σ_H(ξ) = α·ξ + β`.
pub fn dirac_symbol(xi: [f64; 3], mass_term: bool) -> Matrix4 {
    let (alpha, beta) = dirac_matrices();
    let mut m = Matrix4::zero();
    for j in 0..3 {
        m = m.add(&alpha[j].scale(c(xi[j], 0.0)));
    }
    if mass_term {
        m = m.add(&beta);
    }
    m
}

/// The inverse symbol `σ_B(ξ) = (1 + |ξ|²)^{−1} (α·ξ + β)`.
///
/// Well defined for every `ξ` including the origin, where it equals `β`.
/// Satisfies `σ_B(ξ) σ_H(ξ) = σ_H(ξ) σ_B(ξ) = I₄` exactly, because
/// `σ_H(ξ)² = (1 + |ξ|²) I₄` by anticommutation.
pub fn inverse_symbol(xi: [f64; 3]) -> Matrix4 {
    let q = 1.0 + xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
    dirac_symbol(xi, true).scale(c(1.0 / q, 0.0))
}
