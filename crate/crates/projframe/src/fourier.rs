//! The alpha-Fourier transform over a complete irreducible set, its inverse
//! and script variant, Plancherel checks, and the decomposition of a function
//! into rho-components and fine-scale pieces.
//!
//! The forward transform uses the unitary form `(F f)_rho = sum_a f(a) rho(a)*`
//! throughout; the complete set is validated unitary before use. The general
//! form with the explicit `alpha(a, a^-1) alpha(1,1)` divisor lives in the
//! test oracle as a cross-check.

use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::galpha::alpha_convolve;
use crate::numerics::{frobenius_inner, vec_inner, vec_norm, CMatrix, ToleranceConfig};
use crate::repn::IrreducibleSet;

#[derive(Debug, Error)]
pub enum FourierError {
    #[error("function must have length {expected}, got {got}")]
    Length { expected: usize, got: usize },
    #[error("every representation in the set must be unitary")]
    NonUnitarySet,
    #[error("block {index} must be {expected}x{expected}, got {rows}x{cols}")]
    BlockShape {
        index: usize,
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("expected {expected} blocks, got {got}")]
    BlockCount { expected: usize, got: usize },
    #[error("representation index {index} is out of range (set has {len})")]
    BadRepIndex { index: usize, len: usize },
    #[error("row index {j} is out of range for a {dim}-dimensional block")]
    BadRowIndex { j: usize, dim: usize },
}

/// The indexed family `{(F f)_rho}_{rho in R}` of square blocks.
#[derive(Debug, Clone)]
pub struct FourierImage {
    irreducibles: Arc<IrreducibleSet>,
    blocks: Vec<CMatrix>,
}

impl FourierImage {
    /// Wraps externally produced blocks, checking shapes against the set.
    pub fn from_blocks(
        irreducibles: Arc<IrreducibleSet>,
        blocks: Vec<CMatrix>,
    ) -> Result<Self, FourierError> {
        if blocks.len() != irreducibles.len() {
            return Err(FourierError::BlockCount {
                expected: irreducibles.len(),
                got: blocks.len(),
            });
        }
        for (index, block) in blocks.iter().enumerate() {
            let d = irreducibles.dim(index);
            if block.rows() != d || block.cols() != d {
                return Err(FourierError::BlockShape {
                    index,
                    expected: d,
                    rows: block.rows(),
                    cols: block.cols(),
                });
            }
        }
        Ok(FourierImage {
            irreducibles,
            blocks,
        })
    }

    pub fn irreducibles(&self) -> &Arc<IrreducibleSet> {
        &self.irreducibles
    }

    pub fn blocks(&self) -> &[CMatrix] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &CMatrix {
        &self.blocks[i]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Blockwise product; images multiply like the transforms they came from.
    pub fn mul(&self, other: &FourierImage) -> FourierImage {
        FourierImage {
            irreducibles: Arc::clone(&self.irreducibles),
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &FourierImage) -> f64 {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.max_abs_diff(b))
            .fold(0.0, f64::max)
    }
}

fn check_input(f: &[Complex64], r: &IrreducibleSet) -> Result<(), FourierError> {
    let n = r.group().order();
    if f.len() != n {
        return Err(FourierError::Length {
            expected: n,
            got: f.len(),
        });
    }
    if r.reps().iter().any(|rep| !rep.is_unitary()) {
        return Err(FourierError::NonUnitarySet);
    }
    Ok(())
}

/// The alpha-Fourier transform `(F f)_rho = sum_a f(a) rho(a)*`.
pub fn forward(f: &[Complex64], r: &Arc<IrreducibleSet>) -> Result<FourierImage, FourierError> {
    check_input(f, r)?;
    let blocks = r
        .reps()
        .iter()
        .map(|rep| {
            let d = rep.dim();
            let mut block = CMatrix::zeros(d, d);
            for (a, &fa) in f.iter().enumerate() {
                if fa == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let m = rep.matrix(a);
                for i in 0..d {
                    for j in 0..d {
                        // (rho(a)*)_{ij} = conj(rho(a)_{ji})
                        block[(i, j)] += fa * m[(j, i)].conj();
                    }
                }
            }
            block
        })
        .collect();
    Ok(FourierImage {
        irreducibles: Arc::clone(r),
        blocks,
    })
}

/// The script variant `(F' f)_rho = (F f~)_rho` with `f~(a) = f(a^-1)`.
pub fn forward_variant(
    f: &[Complex64],
    r: &Arc<IrreducibleSet>,
) -> Result<FourierImage, FourierError> {
    check_input(f, r)?;
    let group = r.group();
    let reflected: Vec<Complex64> = (0..group.order()).map(|a| f[group.inv(a)]).collect();
    forward(&reflected, r)
}

/// Inverse transform `(F^-1 A)(a) = (1/|G|) sum_rho d_rho trace(A_rho rho(a))`.
pub fn inverse(image: &FourierImage) -> Vec<Complex64> {
    let r = &image.irreducibles;
    let group = r.group();
    let n = group.order();
    (0..n)
        .map(|a| {
            let mut sum = Complex64::new(0.0, 0.0);
            for (idx, block) in image.blocks.iter().enumerate() {
                let rep = r.rep(idx);
                let d = rep.dim();
                let m = rep.matrix(a);
                let mut tr = Complex64::new(0.0, 0.0);
                for i in 0..d {
                    for k in 0..d {
                        tr += block[(i, k)] * m[(k, i)];
                    }
                }
                sum += tr * d as f64;
            }
            sum / n as f64
        })
        .collect()
}

/// Residuals of the Plancherel identities for a pair of functions.
#[derive(Debug, Clone, Copy)]
pub struct PlancherelReport {
    /// `|<nu, mu> - (1/|G|) sum_rho d_rho <(F nu)_rho, (F mu)_rho>|`
    /// (Frobenius pairing; unitary form).
    pub hermitian_residual: f64,
    /// Residual of the bilinear form
    /// `sum_a nu(a) mu(a^-1) / (alpha(a,a^-1) alpha(1,1))
    ///   = (1/|G|) sum_rho d_rho trace((F nu)_rho (F mu)_rho)`.
    pub bilinear_residual: f64,
}

/// Evaluates both Plancherel identities for `nu, mu`.
pub fn check_plancherel(
    nu: &[Complex64],
    mu: &[Complex64],
    r: &Arc<IrreducibleSet>,
) -> Result<PlancherelReport, FourierError> {
    check_input(nu, r)?;
    check_input(mu, r)?;
    let group = r.group();
    let cocycle = r.cocycle();
    let n = group.order() as f64;
    let fnu = forward(nu, r)?;
    let fmu = forward(mu, r)?;

    let lhs_h = vec_inner(nu, mu);
    let mut rhs_h = Complex64::new(0.0, 0.0);
    for (idx, (a, b)) in fnu.blocks.iter().zip(&fmu.blocks).enumerate() {
        rhs_h += frobenius_inner(a, b) * r.dim(idx) as f64;
    }
    rhs_h /= n;

    let a11 = cocycle.alpha(0, 0);
    let mut lhs_b = Complex64::new(0.0, 0.0);
    for a in group.elements() {
        let ainv = group.inv(a);
        lhs_b += nu[a] * mu[ainv] / (cocycle.alpha(a, ainv) * a11);
    }
    let mut rhs_b = Complex64::new(0.0, 0.0);
    for (idx, (x, y)) in fnu.blocks.iter().zip(&fmu.blocks).enumerate() {
        rhs_b += x.mul(y).trace() * r.dim(idx) as f64;
    }
    rhs_b /= n;

    Ok(PlancherelReport {
        hermitian_residual: (lhs_h - rhs_h).norm(),
        bilinear_residual: (lhs_b - rhs_b).norm(),
    })
}

/// The rho-component `f_rho(g) = (d_rho/|G|) trace((F f)_rho rho(g))` of the
/// orthogonal decomposition `f = sum_rho f_rho`.
pub fn rho_component(
    f: &[Complex64],
    r: &Arc<IrreducibleSet>,
    rho_index: usize,
) -> Result<Vec<Complex64>, FourierError> {
    if rho_index >= r.len() {
        return Err(FourierError::BadRepIndex {
            index: rho_index,
            len: r.len(),
        });
    }
    let image = forward(f, r)?;
    let rep = r.rep(rho_index);
    let d = rep.dim();
    let scale = d as f64 / r.group().order() as f64;
    let block = image.block(rho_index);
    Ok((0..r.group().order())
        .map(|g| {
            let m = rep.matrix(g);
            let mut tr = Complex64::new(0.0, 0.0);
            for i in 0..d {
                for k in 0..d {
                    tr += block[(i, k)] * m[(k, i)];
                }
            }
            tr * scale
        })
        .collect())
}

/// The fine-scale component
/// `f_{rho,j}(g) = (d_rho/|G|) <rho(g) (F f)_rho e_j, e_j>`
/// (0-based `j`), so that `sum_j f_{rho,j} = f_rho`.
pub fn fine_component(
    f: &[Complex64],
    r: &Arc<IrreducibleSet>,
    rho_index: usize,
    j: usize,
) -> Result<Vec<Complex64>, FourierError> {
    if rho_index >= r.len() {
        return Err(FourierError::BadRepIndex {
            index: rho_index,
            len: r.len(),
        });
    }
    let rep = r.rep(rho_index);
    let d = rep.dim();
    if j >= d {
        return Err(FourierError::BadRowIndex { j, dim: d });
    }
    let image = forward(f, r)?;
    let block = image.block(rho_index);
    let scale = d as f64 / r.group().order() as f64;
    let bj = block.col(j);
    Ok((0..r.group().order())
        .map(|g| {
            let m = rep.matrix(g);
            // (rho(g) B e_j)_j
            let mut v = Complex64::new(0.0, 0.0);
            for k in 0..d {
                v += m[(j, k)] * bj[k];
            }
            v * scale
        })
        .collect())
}

/// Is the Fourier image of `f` supported on the single representation
/// `rho_index`? All other blocks must stay below
/// `tol.structural_zero * ||f||`.
pub fn is_rho_function(
    f: &[Complex64],
    r: &Arc<IrreducibleSet>,
    rho_index: usize,
    tol: &ToleranceConfig,
) -> Result<bool, FourierError> {
    if rho_index >= r.len() {
        return Err(FourierError::BadRepIndex {
            index: rho_index,
            len: r.len(),
        });
    }
    let image = forward(f, r)?;
    let bound = tol.structural_zero * (1.0 + vec_norm(f));
    Ok(image
        .blocks
        .iter()
        .enumerate()
        .all(|(idx, block)| idx == rho_index || block.max_abs() <= bound))
}

/// Convolution theorem, as an identity between images:
/// `F(nu) F(mu) = F(mu * nu)` (note the order swap).
pub fn convolution_defect(
    nu: &[Complex64],
    mu: &[Complex64],
    r: &Arc<IrreducibleSet>,
) -> Result<f64, FourierError> {
    let lhs = forward(nu, r)?.mul(&forward(mu, r)?);
    let rhs = forward(&alpha_convolve(mu, nu, r.cocycle()), r)?;
    Ok(lhs.max_abs_diff(&rhs))
}
