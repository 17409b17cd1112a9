//! The C*-algebra of (G,alpha)-matrices.
//!
//! A (G,alpha)-matrix is determined by a vector `nu` in `C^G`; its dense form
//! has `(g, h)` entry `nu(g^-1 h) / alpha(g, g^-1 h)`. The algebra is
//! n-dimensional, so `nu` is the canonical storage and dense matrices are
//! materialised on demand. Products are twisted convolutions, adjoints twist
//! a conjugate, and the square-bracket variants of the theory reduce to
//! inverting the cocycle.

use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::cocycle::Cocycle;
use crate::group::{GroupIndex, IDENTITY};
use crate::numerics::{pseudoinverse_dense, CMatrix, ToleranceConfig};

#[derive(Debug, Error)]
pub enum GAlphaError {
    #[error("nu must have length {expected}, got {got}")]
    Length { expected: usize, got: usize },
    #[error("matrix must be {expected}x{expected}, got {rows}x{cols}")]
    Shape {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("not a (G,alpha)-matrix: worst entry at ({g}, {h}) deviates by {deviation:.3e}")]
    NotGAlpha {
        g: GroupIndex,
        h: GroupIndex,
        deviation: f64,
    },
    #[error("operation requires a unitary cocycle")]
    NotUnitary,
    #[error("cocycles or groups do not match")]
    Mismatch,
    #[error("pseudoinverse left the algebra (deviation {deviation:.3e}); inputs are inconsistent")]
    PseudoinverseEscaped { deviation: f64 },
}

/// Element of the algebra `M_(G,alpha)`, stored as its defining vector.
#[derive(Debug, Clone)]
pub struct GAlphaMatrix {
    cocycle: Arc<Cocycle>,
    nu: Vec<Complex64>,
}

impl GAlphaMatrix {
    pub fn new(cocycle: Arc<Cocycle>, nu: Vec<Complex64>) -> Result<Self, GAlphaError> {
        let n = cocycle.order();
        if nu.len() != n {
            return Err(GAlphaError::Length {
                expected: n,
                got: nu.len(),
            });
        }
        Ok(GAlphaMatrix { cocycle, nu })
    }

    /// The identity of the algebra: `I = alpha(1,1) M_alpha(e_1)`, so the
    /// defining vector is `alpha(1,1) e_1`.
    pub fn identity(cocycle: Arc<Cocycle>) -> GAlphaMatrix {
        let n = cocycle.order();
        let mut nu = vec![Complex64::new(0.0, 0.0); n];
        nu[IDENTITY] = cocycle.alpha(IDENTITY, IDENTITY);
        GAlphaMatrix { cocycle, nu }
    }

    /// `M_alpha(e_g)`.
    pub fn basis(cocycle: Arc<Cocycle>, g: GroupIndex) -> GAlphaMatrix {
        let n = cocycle.order();
        let mut nu = vec![Complex64::new(0.0, 0.0); n];
        nu[g] = Complex64::new(1.0, 0.0);
        GAlphaMatrix { cocycle, nu }
    }

    pub fn cocycle(&self) -> &Arc<Cocycle> {
        &self.cocycle
    }

    pub fn nu(&self) -> &[Complex64] {
        &self.nu
    }

    pub fn order(&self) -> usize {
        self.nu.len()
    }

    /// Dense `n x n` realisation with entry `nu(g^-1 h)/alpha(g, g^-1 h)`.
    pub fn to_dense(&self) -> CMatrix {
        let group = self.cocycle.group();
        let n = group.order();
        CMatrix::from_fn(n, n, |g, h| {
            let x = group.mul(group.inv(g), h);
            self.nu[x] / self.cocycle.alpha(g, x)
        })
    }

    /// Algebra product via the twisted convolution of defining vectors.
    pub fn mul(&self, other: &GAlphaMatrix) -> Result<GAlphaMatrix, GAlphaError> {
        if !self
            .cocycle
            .compatible(&other.cocycle, ToleranceConfig::default().structural_zero)
        {
            return Err(GAlphaError::Mismatch);
        }
        Ok(GAlphaMatrix {
            cocycle: Arc::clone(&self.cocycle),
            nu: alpha_convolve(&self.nu, &other.nu, &self.cocycle),
        })
    }

    /// Hermitian transpose, staying inside the algebra (unitary cocycle).
    pub fn adjoint(&self) -> Result<GAlphaMatrix, GAlphaError> {
        Ok(GAlphaMatrix {
            cocycle: Arc::clone(&self.cocycle),
            nu: star_adjoint(&self.nu, &self.cocycle)?,
        })
    }

    /// Moore-Penrose pseudoinverse. The algebra is closed under it, so the
    /// dense pseudoinverse must be recognisable again; failure to recognise
    /// signals inconsistent inputs.
    pub fn pseudoinverse(&self, tol: &ToleranceConfig) -> Result<GAlphaMatrix, GAlphaError> {
        if !self.cocycle.is_unitary() {
            return Err(GAlphaError::NotUnitary);
        }
        let pinv = pseudoinverse_dense(&self.to_dense(), tol);
        match recognize(&pinv, Arc::clone(&self.cocycle), tol) {
            Ok(m) => Ok(m),
            Err(GAlphaError::NotGAlpha { deviation, .. }) => {
                Err(GAlphaError::PseudoinverseEscaped { deviation })
            }
            Err(e) => Err(e),
        }
    }

    /// The same vector over the inverted cocycle: a square-bracket variant
    /// with dense entries `alpha(g, g^-1 h) nu(g^-1 h)`.
    pub fn to_bracket_variant(&self) -> GAlphaMatrix {
        GAlphaMatrix {
            cocycle: Arc::new(self.cocycle.inverse()),
            nu: self.nu.clone(),
        }
    }

    /// `J M J` for the unitary involution `J e_h = e_{h^-1}`; the result has
    /// `(g, h)` entry `nu(g h^-1) / alpha(g^-1, g h^-1)`.
    pub fn j_conjugate(&self) -> CMatrix {
        let group = self.cocycle.group();
        let n = group.order();
        let dense = self.to_dense();
        CMatrix::from_fn(n, n, |g, h| dense[(group.inv(g), group.inv(h))])
    }
}

/// The twisted convolution
/// `(nu * mu)(g) = sum_t nu(g t^-1) mu(t) / alpha(g t^-1, t)`,
/// which realises the matrix product: `M(nu) M(mu) = M(nu * mu)`.
pub fn alpha_convolve(nu: &[Complex64], mu: &[Complex64], cocycle: &Cocycle) -> Vec<Complex64> {
    let group = cocycle.group();
    let n = group.order();
    assert_eq!(nu.len(), n);
    assert_eq!(mu.len(), n);
    (0..n)
        .map(|g| {
            (0..n)
                .map(|t| {
                    let gt = group.mul(g, group.inv(t));
                    nu[gt] * mu[t] / cocycle.alpha(gt, t)
                })
                .sum()
        })
        .collect()
}

/// The vector of the Hermitian transpose:
/// `nu^*(a) = conj(nu(a^-1)) alpha(a, a^-1) alpha(1,1)`.
pub fn star_adjoint(nu: &[Complex64], cocycle: &Cocycle) -> Result<Vec<Complex64>, GAlphaError> {
    if !cocycle.is_unitary() {
        return Err(GAlphaError::NotUnitary);
    }
    let group = cocycle.group();
    let a11 = cocycle.alpha(IDENTITY, IDENTITY);
    Ok((0..group.order())
        .map(|a| {
            let ainv = group.inv(a);
            nu[ainv].conj() * cocycle.alpha(a, ainv) * a11
        })
        .collect())
}

/// Extracts `nu` from the identity row (`nu(h) = alpha(1,1) a_{1,h}`),
/// rebuilds the dense form, and accepts when the worst entry deviates by
/// less than `tol.projection * (1 + max |a|)`.
pub fn recognize(
    a: &CMatrix,
    cocycle: Arc<Cocycle>,
    tol: &ToleranceConfig,
) -> Result<GAlphaMatrix, GAlphaError> {
    let n = cocycle.order();
    if a.rows() != n || a.cols() != n {
        return Err(GAlphaError::Shape {
            expected: n,
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let a11 = cocycle.alpha(IDENTITY, IDENTITY);
    let nu: Vec<Complex64> = (0..n).map(|h| a11 * a[(IDENTITY, h)]).collect();
    let candidate = GAlphaMatrix { cocycle, nu };
    let rebuilt = candidate.to_dense();
    let mut worst = (IDENTITY, IDENTITY, 0.0f64);
    for g in 0..n {
        for h in 0..n {
            let dev = (rebuilt[(g, h)] - a[(g, h)]).norm();
            if dev > worst.2 {
                worst = (g, h, dev);
            }
        }
    }
    let threshold = tol.projection * (1.0 + a.max_abs());
    if worst.2 > threshold {
        return Err(GAlphaError::NotGAlpha {
            g: worst.0,
            h: worst.1,
            deviation: worst.2,
        });
    }
    Ok(candidate)
}

/// Vector of the transpose: `M_alpha(nu)^T` is the bracket-variant matrix of
/// `mu(g) = nu(g^-1) / (alpha(1,1) alpha(g, g^-1))`.
pub fn transpose_vector(nu: &[Complex64], cocycle: &Cocycle) -> Vec<Complex64> {
    let group = cocycle.group();
    let a11 = cocycle.alpha(IDENTITY, IDENTITY);
    (0..group.order())
        .map(|g| {
            let ginv = group.inv(g);
            nu[ginv] / (a11 * cocycle.alpha(g, ginv))
        })
        .collect()
}

/// Dual direction: a bracket-variant matrix `M(nu)` has transpose
/// `M_alpha(mu)` with `mu(g) = alpha(1,1) alpha(g, g^-1) nu(g^-1)`.
pub fn transpose_vector_from_bracket(nu: &[Complex64], cocycle: &Cocycle) -> Vec<Complex64> {
    let group = cocycle.group();
    let a11 = cocycle.alpha(IDENTITY, IDENTITY);
    (0..group.order())
        .map(|g| {
            let ginv = group.inv(g);
            a11 * cocycle.alpha(g, ginv) * nu[ginv]
        })
        .collect()
}
