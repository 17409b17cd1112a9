//! Simultaneous unitary block diagonalisation of (G,alpha)-matrices, and the
//! determinant and rank structure it exposes.
//!
//! The unitary matrix `E` stacks the scaled coordinate functions of a
//! complete unitary irreducible set. Conjugating a (G,alpha)-matrix by
//! `conj(E)` produces a block diagonal matrix whose blocks are the transposed
//! Fourier blocks `(F nu)_rho^T`, each repeated `d_rho` times. The operation
//! asserts the off-block residual rather than trusting the theorem, so bad
//! representation input surfaces immediately.

use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::fourier::{self, FourierError, FourierImage};
use crate::galpha::GAlphaMatrix;
use crate::numerics::{self, CMatrix, ToleranceConfig};
use crate::repn::IrreducibleSet;

#[derive(Debug, Error)]
pub enum BlockDiagError {
    #[error("incomplete irreducible set: sum of squared dimensions is {sum}, group order {order}")]
    IncompleteSet { sum: usize, order: usize },
    #[error("E is not unitary: max |E*E - I| = {defect:.3e}")]
    NotUnitary { defect: f64 },
    #[error("matrix and diagonalizer use different (G, alpha) data")]
    Mismatch,
    #[error("off-block residual {residual:.3e} exceeds {bound:.3e}; inputs are not a matching (G,alpha,R)")]
    DiagonalizationFailure { residual: f64, bound: f64 },
    #[error("block diagonalisation by E itself is only guaranteed for the trivial cocycle")]
    NontrivialCocycle,
    #[error(transparent)]
    Fourier(#[from] FourierError),
}

/// The unitary matrix `E = [E_{rho,k}]` with columns
/// `sqrt(d_rho/|G|) [rho_k1, ..., rho_kd]`, in `(rho, k, j)` column order.
#[derive(Debug, Clone)]
pub struct DiagonalizerE {
    irreducibles: Arc<IrreducibleSet>,
    matrix: CMatrix,
}

impl DiagonalizerE {
    /// Builds `E` from a complete unitary set, checking the dimension count
    /// and unitarity.
    pub fn build(
        irreducibles: Arc<IrreducibleSet>,
        tol: &ToleranceConfig,
    ) -> Result<Self, BlockDiagError> {
        let group = irreducibles.group();
        let n = group.order();
        let sum: usize = irreducibles.reps().iter().map(|r| r.dim() * r.dim()).sum();
        if sum != n {
            return Err(BlockDiagError::IncompleteSet { sum, order: n });
        }
        let mut matrix = CMatrix::zeros(n, n);
        let mut col = 0;
        for rep in irreducibles.reps() {
            let d = rep.dim();
            let scale = (d as f64 / n as f64).sqrt();
            for k in 0..d {
                for j in 0..d {
                    for g in 0..n {
                        matrix[(g, col)] = rep.matrix(g)[(k, j)] * scale;
                    }
                    col += 1;
                }
            }
        }
        let defect = matrix
            .adjoint()
            .mul(&matrix)
            .max_abs_diff(&CMatrix::identity(n));
        if defect > tol.structural_zero {
            return Err(BlockDiagError::NotUnitary { defect });
        }
        Ok(DiagonalizerE {
            irreducibles,
            matrix,
        })
    }

    pub fn irreducibles(&self) -> &Arc<IrreducibleSet> {
        &self.irreducibles
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Sizes of the diagonal blocks in column order: each `d_rho` repeated
    /// `d_rho` times.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = Vec::new();
        for rep in self.irreducibles.reps() {
            for _ in 0..rep.dim() {
                sizes.push(rep.dim());
            }
        }
        sizes
    }
}

fn check_match(m: &GAlphaMatrix, e: &DiagonalizerE, tol: &ToleranceConfig) -> Result<(), BlockDiagError> {
    if !m
        .cocycle()
        .compatible(e.irreducibles.cocycle(), tol.structural_zero)
    {
        return Err(BlockDiagError::Mismatch);
    }
    Ok(())
}

/// Extracts the diagonal blocks of `t` at the given sizes and verifies that
/// everything off those blocks stays below `bound`.
fn split_blocks(t: &CMatrix, sizes: &[usize], bound: f64) -> Result<Vec<CMatrix>, BlockDiagError> {
    let n = t.rows();
    let mut blocks = Vec::with_capacity(sizes.len());
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut offset = 0;
    for &s in sizes {
        offsets.push(offset);
        blocks.push(t.diagonal_block(offset, s));
        offset += s;
    }
    debug_assert_eq!(offset, n);
    let mut residual = 0.0f64;
    for i in 0..n {
        // index of the block containing row i
        let bi = offsets.iter().rposition(|&o| o <= i).unwrap();
        for j in 0..n {
            let inside = j >= offsets[bi] && j < offsets[bi] + sizes[bi];
            if !inside {
                residual = residual.max(t[(i, j)].norm());
            }
        }
    }
    if residual > bound {
        return Err(BlockDiagError::DiagonalizationFailure { residual, bound });
    }
    Ok(blocks)
}

/// Conjugates `M_alpha(nu)` by `conj(E)`: the result is block diagonal with
/// blocks `(F nu)_rho^T`, each repeated `d_rho` times, returned in column
/// order. Fails if the off-block mass exceeds `tol.projection * (1 + |M|)`.
pub fn block_diagonalize(
    m: &GAlphaMatrix,
    e: &DiagonalizerE,
    tol: &ToleranceConfig,
) -> Result<Vec<CMatrix>, BlockDiagError> {
    check_match(m, e, tol)?;
    let dense = m.to_dense();
    let e_conj = e.matrix.conj();
    let t = e_conj.adjoint().mul(&dense).mul(&e_conj);
    let bound = tol.projection * (1.0 + dense.max_abs());
    split_blocks(&t, &e.block_sizes(), bound)
}

/// Ordinary-representation form: conjugates by `E` itself, giving blocks
/// `(F' nu)_rho` (script variant). Guaranteed only for the trivial cocycle.
pub fn ordinary_block_diagonalize(
    m: &GAlphaMatrix,
    e: &DiagonalizerE,
    tol: &ToleranceConfig,
) -> Result<Vec<CMatrix>, BlockDiagError> {
    if !m.cocycle().is_trivial() {
        return Err(BlockDiagError::NontrivialCocycle);
    }
    check_match(m, e, tol)?;
    let dense = m.to_dense();
    let t = e.matrix.adjoint().mul(&dense).mul(&e.matrix);
    let bound = tol.projection * (1.0 + dense.max_abs());
    split_blocks(&t, &e.block_sizes(), bound)
}

/// Determinant through the factorisation
/// `det M_alpha(nu) = prod_rho det((F nu)_rho)^{d_rho}`.
pub fn determinant(
    m: &GAlphaMatrix,
    r: &Arc<IrreducibleSet>,
) -> Result<Complex64, BlockDiagError> {
    let image = fourier::forward(m.nu(), r)?;
    let mut det = Complex64::new(1.0, 0.0);
    for (idx, block) in image.blocks().iter().enumerate() {
        let d = numerics::determinant_dense(block);
        for _ in 0..r.dim(idx) {
            det *= d;
        }
    }
    Ok(det)
}

/// Rank of a (G,alpha)-matrix together with its per-block certificate.
#[derive(Debug, Clone)]
pub struct RankCertificate {
    pub rank: usize,
    /// `(label, block rank, d_rho)` per irreducible.
    pub blocks: Vec<(String, usize, usize)>,
}

/// Rank through the block structure: `rank = sum_rho d_rho rank((F nu)_rho)`.
/// The singular values of the dense matrix are exactly the block singular
/// values with multiplicities, so the cutoff is relative to the largest one
/// across all blocks; this keeps the certificate consistent with the dense
/// rank even when a whole block is numerically zero.
pub fn rank(
    m: &GAlphaMatrix,
    r: &Arc<IrreducibleSet>,
    tol: &ToleranceConfig,
) -> Result<RankCertificate, BlockDiagError> {
    let image = fourier::forward(m.nu(), r)?;
    let spectra: Vec<Vec<f64>> = image
        .blocks()
        .iter()
        .map(|block| numerics::singular_values(block, tol))
        .collect();
    let sigma_max = spectra
        .iter()
        .flatten()
        .fold(0.0f64, |acc, &s| acc.max(s));
    let mut total = 0;
    let mut blocks = Vec::with_capacity(r.len());
    for (idx, spectrum) in spectra.iter().enumerate() {
        let block_rank = if sigma_max == 0.0 {
            0
        } else {
            spectrum
                .iter()
                .filter(|&&s| s > tol.rank_cutoff * sigma_max)
                .count()
        };
        total += r.dim(idx) * block_rank;
        blocks.push((r.label(idx).to_string(), block_rank, r.dim(idx)));
    }
    Ok(RankCertificate {
        rank: total,
        blocks,
    })
}

/// Fourier image of the matrix (convenience for it sitting next to the block
/// operations).
pub fn fourier_image(
    m: &GAlphaMatrix,
    r: &Arc<IrreducibleSet>,
) -> Result<FourierImage, BlockDiagError> {
    Ok(fourier::forward(m.nu(), r)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::repn::{
        abelian_trivial_irreducibles, dihedral8_irreducibles, dihedral8_ordinary_irreducibles,
        klein_irreducibles, klein_rep_tilde, IrreducibleSet,
    };
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_nu(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
        (0..n)
            .map(|_| c(rng.random::<f64>() * 2.0 - 1.0, rng.random::<f64>() * 2.0 - 1.0))
            .collect()
    }

    #[test]
    fn klein_trivial_e_is_the_sign_matrix() {
        let set = Arc::new(abelian_trivial_irreducibles(Arc::new(FiniteGroup::klein())).unwrap());
        let e = DiagonalizerE::build(set, &tol()).unwrap();
        let expected = [
            [1.0, 1.0, 1.0, 1.0],
            [1.0, -1.0, 1.0, -1.0],
            [1.0, 1.0, -1.0, -1.0],
            [1.0, -1.0, -1.0, 1.0],
        ];
        for g in 0..4 {
            for t in 0..4 {
                assert_eq!(e.matrix()[(g, t)], c(expected[g][t] / 2.0, 0.0));
            }
        }
    }

    #[test]
    fn klein_projective_e_matches_the_worked_example() {
        let set = Arc::new(klein_irreducibles());
        let e = DiagonalizerE::build(set, &tol()).unwrap();
        let s = 1.0 / 2.0f64.sqrt();
        let expected = [
            [s, 0.0, 0.0, s],
            [0.0, s, s, 0.0],
            [s, 0.0, 0.0, -s],
            [0.0, -s, s, 0.0],
        ];
        for g in 0..4 {
            for col in 0..4 {
                assert!((e.matrix()[(g, col)] - c(expected[g][col], 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn klein_tilde_e_and_blocks_show_nonuniqueness() {
        // the equivalent representation gives a different E and different
        // (but again repeated) blocks: the invariant-subspace decomposition
        // is not unique
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(113);
        let set = Arc::new(
            IrreducibleSet::new(vec![klein_rep_tilde()], vec!["rho~".to_string()]).unwrap(),
        );
        let e = DiagonalizerE::build(Arc::clone(&set), &t).unwrap();
        let s = 1.0 / 2.0f64.sqrt();
        let expected = [
            [s, 0.0, 0.0, s],
            [s, 0.0, 0.0, -s],
            [0.0, s, s, 0.0],
            [0.0, s, -s, 0.0],
        ];
        for g in 0..4 {
            for col in 0..4 {
                assert!((e.matrix()[(g, col)] - c(expected[g][col], 0.0)).norm() < 1e-15);
            }
        }
        // blocks: C~ = ((n00+n10, n01+n11), (n01-n11, n00-n10)), twice
        let nu = random_nu(&mut rng, 4);
        let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), nu.clone()).unwrap();
        let blocks = block_diagonalize(&m, &e, &t).unwrap();
        let expected = CMatrix::from_rows(&[
            vec![nu[0] + nu[1], nu[2] + nu[3]],
            vec![nu[2] - nu[3], nu[0] - nu[1]],
        ]);
        for block in &blocks {
            assert!(block.max_abs_diff(&expected) < 1e-12);
        }
    }

    #[test]
    fn dihedral_e_matches_the_worked_matrix_exactly() {
        let set = Arc::new(dihedral8_irreducibles());
        let e = DiagonalizerE::build(set, &tol()).unwrap();
        let o = c(0.0, 0.0);
        let p = c(0.5, 0.0);
        let m = c(-0.5, 0.0);
        let i = c(0.0, 0.5);
        let mi = c(0.0, -0.5);
        let expected = [
            [p, o, o, p, p, o, o, p],
            [i, o, o, p, m, o, o, mi],
            [m, o, o, p, p, o, o, m],
            [mi, o, o, p, m, o, o, i],
            [o, p, p, o, o, p, p, o],
            [o, i, p, o, o, m, mi, o],
            [o, m, p, o, o, p, m, o],
            [o, mi, p, o, o, m, i, o],
        ];
        for g in 0..8 {
            for col in 0..8 {
                assert_eq!(e.matrix()[(g, col)], expected[g][col], "({g}, {col})");
            }
        }
    }

    #[test]
    fn e_is_unitary_for_all_built_ins() {
        for set in [
            Arc::new(klein_irreducibles()),
            Arc::new(dihedral8_irreducibles()),
            Arc::new(dihedral8_ordinary_irreducibles()),
            Arc::new(abelian_trivial_irreducibles(Arc::new(FiniteGroup::cyclic(7).unwrap())).unwrap()),
        ] {
            let n = set.group().order();
            let e = DiagonalizerE::build(set, &tol()).unwrap();
            let defect = e
                .matrix()
                .adjoint()
                .mul(e.matrix())
                .max_abs_diff(&CMatrix::identity(n));
            assert!(defect < 1e-12);
        }
    }

    #[test]
    fn incomplete_set_is_rejected() {
        // the single Klein rho over the *trivial* cocycle never arises, so
        // instead drop a representation from the dihedral ordinary set
        let full = dihedral8_ordinary_irreducibles();
        let partial = IrreducibleSet::new(
            vec![full.rep(0).clone(), full.rep(4).clone()],
            vec!["chi0".into(), "rho".into()],
        )
        .unwrap();
        assert!(matches!(
            DiagonalizerE::build(Arc::new(partial), &tol()),
            Err(BlockDiagError::IncompleteSet { sum: 5, order: 8 })
        ));
    }

    #[test]
    fn klein_block_diagonalization_matches_the_worked_blocks() {
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        let set = Arc::new(klein_irreducibles());
        let e = DiagonalizerE::build(Arc::clone(&set), &t).unwrap();
        for _ in 0..20 {
            let nu = random_nu(&mut rng, 4);
            let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), nu.clone()).unwrap();
            let blocks = block_diagonalize(&m, &e, &t).unwrap();
            assert_eq!(blocks.len(), 2);
            // C_rho = (F nu)_rho^T with rows ((n00+n01, n10-n11), (n10+n11, n00-n01))
            let expected = CMatrix::from_rows(&[
                vec![nu[0] + nu[2], nu[1] - nu[3]],
                vec![nu[1] + nu[3], nu[0] - nu[2]],
            ]);
            for block in &blocks {
                assert!(block.max_abs_diff(&expected) < 1e-12);
            }
        }
    }

    #[test]
    fn blocks_equal_transposed_fourier_blocks_with_repetitions() {
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for set in [
            Arc::new(klein_irreducibles()),
            Arc::new(dihedral8_irreducibles()),
            Arc::new(dihedral8_ordinary_irreducibles()),
            Arc::new(abelian_trivial_irreducibles(Arc::new(FiniteGroup::cyclic(6).unwrap())).unwrap()),
        ] {
            let n = set.group().order();
            let e = DiagonalizerE::build(Arc::clone(&set), &t).unwrap();
            for _ in 0..50 {
                let nu = random_nu(&mut rng, n);
                let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), nu.clone()).unwrap();
                let blocks = block_diagonalize(&m, &e, &t).unwrap();
                let image = fourier::forward(&nu, &set).unwrap();
                let mut b = 0;
                for idx in 0..set.len() {
                    let expected = image.block(idx).transpose();
                    for _ in 0..set.dim(idx) {
                        assert!(blocks[b].max_abs_diff(&expected) < 1e-10 * (1.0 + expected.max_abs()));
                        b += 1;
                    }
                }
            }
        }
    }

    #[test]
    fn mismatched_representation_set_fails_loudly() {
        // matrices for the Klein cocycle conjugated with an E built from an
        // equivalent-but-different representation still block diagonalise;
        // an E from the *trivial*-cocycle characters must not.
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(79);
        let nu = random_nu(&mut rng, 4);
        let m = GAlphaMatrix::new(Arc::new(crate::cocycle::klein_cocycle()), nu).unwrap();

        let tilde_set = Arc::new(
            IrreducibleSet::new(vec![klein_rep_tilde()], vec!["rho~".to_string()]).unwrap(),
        );
        let e_tilde = DiagonalizerE::build(tilde_set, &t).unwrap();
        assert!(block_diagonalize(&m, &e_tilde, &t).is_ok());

        let char_set = Arc::new(abelian_trivial_irreducibles(Arc::new(FiniteGroup::klein())).unwrap());
        let e_chars = DiagonalizerE::build(char_set, &t).unwrap();
        assert!(matches!(
            block_diagonalize(&m, &e_chars, &t),
            Err(BlockDiagError::Mismatch)
        ));
    }

    #[test]
    fn ordinary_diagonalization_on_cyclic_groups_is_the_dft() {
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(83);
        let set = Arc::new(
            abelian_trivial_irreducibles(Arc::new(FiniteGroup::cyclic(6).unwrap())).unwrap(),
        );
        let e = DiagonalizerE::build(Arc::clone(&set), &t).unwrap();
        let nu = random_nu(&mut rng, 6);
        let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), nu.clone()).unwrap();
        // circulant: E* M E diagonal, entries the variant transform values
        let blocks = ordinary_block_diagonalize(&m, &e, &t).unwrap();
        let image = fourier::forward_variant(&nu, &set).unwrap();
        for (idx, block) in blocks.iter().enumerate() {
            assert_eq!(block.rows(), 1);
            assert!((block[(0, 0)] - image.block(idx)[(0, 0)]).norm() < 1e-12);
        }
        // and conj(E) conjugation agrees with the plain transform
        let blocks = block_diagonalize(&m, &e, &t).unwrap();
        let image = fourier::forward(&nu, &set).unwrap();
        for (idx, block) in blocks.iter().enumerate() {
            assert!((block[(0, 0)] - image.block(idx)[(0, 0)]).norm() < 1e-12);
        }
    }

    #[test]
    fn ordinary_diagonalization_requires_the_trivial_cocycle() {
        let t = tol();
        let set = Arc::new(klein_irreducibles());
        let e = DiagonalizerE::build(Arc::clone(&set), &t).unwrap();
        let m = GAlphaMatrix::identity(Arc::clone(set.cocycle()));
        assert!(matches!(
            ordinary_block_diagonalize(&m, &e, &t),
            Err(BlockDiagError::NontrivialCocycle)
        ));
    }

    #[test]
    fn ordinary_diagonalization_of_dihedral_group_blocks() {
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(89);
        let set = Arc::new(dihedral8_ordinary_irreducibles());
        let e = DiagonalizerE::build(Arc::clone(&set), &t).unwrap();
        let nu = random_nu(&mut rng, 8);
        let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), nu.clone()).unwrap();
        let blocks = ordinary_block_diagonalize(&m, &e, &t).unwrap();
        let image = fourier::forward_variant(&nu, &set).unwrap();
        let mut b = 0;
        for idx in 0..set.len() {
            for _ in 0..set.dim(idx) {
                assert!(blocks[b].max_abs_diff(image.block(idx)) < 1e-10);
                b += 1;
            }
        }
    }

    #[test]
    fn identity_vector_gives_identity_blocks() {
        let t = tol();
        let set = Arc::new(dihedral8_irreducibles());
        let e = DiagonalizerE::build(Arc::clone(&set), &t).unwrap();
        let m = GAlphaMatrix::identity(Arc::clone(set.cocycle()));
        for block in block_diagonalize(&m, &e, &t).unwrap() {
            assert!(block.max_abs_diff(&CMatrix::identity(2)) < 1e-12);
        }
    }

    #[test]
    fn determinant_formulas_on_the_klein_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(97);
        // nontrivial alpha: det = (n00^2 + n11^2 - n10^2 - n01^2)^2
        let set = Arc::new(klein_irreducibles());
        for _ in 0..20 {
            let nu = random_nu(&mut rng, 4);
            let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), nu.clone()).unwrap();
            let formula = {
                let v = nu[0] * nu[0] + nu[3] * nu[3] - nu[1] * nu[1] - nu[2] * nu[2];
                v * v
            };
            let block_det = determinant(&m, &set).unwrap();
            let dense_det = numerics::determinant_dense(&m.to_dense());
            assert!((block_det - formula).norm() < 1e-10 * (1.0 + formula.norm()));
            assert!((dense_det - formula).norm() < 1e-10 * (1.0 + formula.norm()));
        }
        // nu = (1,2,3,4): (1 + 16 - 4 - 9)^2 = 16
        let nu: Vec<Complex64> = (1..=4).map(|k| c(k as f64, 0.0)).collect();
        let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), nu).unwrap();
        assert!((determinant(&m, &set).unwrap() - c(16.0, 0.0)).norm() < 1e-10);

        // trivial alpha: product of the four linear character sums
        let chars = Arc::new(abelian_trivial_irreducibles(Arc::new(FiniteGroup::klein())).unwrap());
        for _ in 0..20 {
            let nu = random_nu(&mut rng, 4);
            let m = GAlphaMatrix::new(Arc::clone(chars.cocycle()), nu.clone()).unwrap();
            let formula = (nu[0] + nu[1] + nu[2] + nu[3])
                * (nu[0] - nu[1] + nu[2] - nu[3])
                * (nu[0] + nu[1] - nu[2] - nu[3])
                * (nu[0] - nu[1] - nu[2] + nu[3]);
            let block_det = determinant(&m, &chars).unwrap();
            let dense_det = numerics::determinant_dense(&m.to_dense());
            assert!((block_det - formula).norm() < 1e-10 * (1.0 + formula.norm()));
            assert!((dense_det - formula).norm() < 1e-10 * (1.0 + formula.norm()));
        }
    }

    #[test]
    fn determinant_of_identity_is_one() {
        for set in [Arc::new(klein_irreducibles()), Arc::new(dihedral8_irreducibles())] {
            let m = GAlphaMatrix::identity(Arc::clone(set.cocycle()));
            assert!((determinant(&m, &set).unwrap() - c(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn determinant_agrees_with_dense_lu_on_random_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for set in [Arc::new(dihedral8_irreducibles()), Arc::new(dihedral8_ordinary_irreducibles())] {
            for _ in 0..20 {
                let nu = random_nu(&mut rng, 8);
                let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), nu).unwrap();
                let a = determinant(&m, &set).unwrap();
                let b = numerics::determinant_dense(&m.to_dense());
                assert!((a - b).norm() < 1e-8 * (1.0 + b.norm()));
            }
        }
    }

    #[test]
    fn rank_certificates() {
        let t = tol();
        let set = Arc::new(dihedral8_irreducibles());
        let cocycle = Arc::clone(set.cocycle());

        // invertible: full rank
        let eye = GAlphaMatrix::identity(Arc::clone(&cocycle));
        let cert = rank(&eye, &set, &t).unwrap();
        assert_eq!(cert.rank, 8);

        // zero matrix
        let zero = GAlphaMatrix::new(Arc::clone(&cocycle), vec![c(0.0, 0.0); 8]).unwrap();
        assert_eq!(rank(&zero, &set, &t).unwrap().rank, 0);

        // prescribe block ranks (1, 2) -> total 2*1 + 2*2 = 6
        let blocks = vec![
            CMatrix::from_fn(2, 2, |i, j| if i == 0 && j == 0 { c(1.0, 0.0) } else { c(0.0, 0.0) }),
            CMatrix::identity(2),
        ];
        let image = FourierImage::from_blocks(Arc::clone(&set), blocks).unwrap();
        let nu = fourier::inverse(&image);
        let m = GAlphaMatrix::new(Arc::clone(&cocycle), nu).unwrap();
        let cert = rank(&m, &set, &t).unwrap();
        assert_eq!(cert.rank, 6);
        assert_eq!(cert.blocks[0].1, 1);
        assert_eq!(cert.blocks[1].1, 2);
        assert_eq!(cert.rank, numerics::rank_dense(&m.to_dense(), &t));
    }

    #[test]
    fn dihedral_matrices_have_even_rank() {
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(103);
        let set = Arc::new(dihedral8_irreducibles());
        for _ in 0..50 {
            let nu = random_nu(&mut rng, 8);
            let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), nu).unwrap();
            let cert = rank(&m, &set, &t).unwrap();
            assert_eq!(cert.rank % 2, 0);
            assert_eq!(cert.rank, numerics::rank_dense(&m.to_dense(), &t));
        }
    }

    #[test]
    fn klein_fine_components_give_rank_two_matrices() {
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(107);
        let set = Arc::new(klein_irreducibles());
        let nu = random_nu(&mut rng, 4);
        let fine = fourier::fine_component(&nu, &set, 0, 0).unwrap();
        let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), fine).unwrap();
        let cert = rank(&m, &set, &t).unwrap();
        assert_eq!(cert.rank, 2);
        assert_eq!(cert.blocks[0].1, 1);
    }

    #[test]
    fn dihedral_golden_regression_e_star_m_e_is_also_block_diagonal() {
        // observed property of the order-8 dihedral example only: conjugating
        // by E itself (not conj E) still block diagonalises, because complex
        // conjugation permutes the row subspaces of the two representations.
        let t = tol();
        let mut rng = ChaCha8Rng::seed_from_u64(109);
        let set = Arc::new(dihedral8_irreducibles());
        let e = DiagonalizerE::build(Arc::clone(&set), &t).unwrap();
        let nu = random_nu(&mut rng, 8);
        let m = GAlphaMatrix::new(Arc::clone(set.cocycle()), nu.clone()).unwrap();
        let conj = e.matrix().adjoint().mul(&m.to_dense()).mul(e.matrix());
        let blocks = split_blocks(&conj, &e.block_sizes(), 1e-10 * (1.0 + conj.max_abs())).unwrap();
        assert_eq!(blocks.len(), 4);
        // the four blocks are pairwise different in general, unlike the
        // conj(E) form where each repeats d_rho times
        assert!(blocks[0].max_abs_diff(&blocks[1]) > 1e-6);

        // first block: rows ((n1+i na - na2 - i na3, nb + i nab - na2b - i na3b),
        //                              (nb - nab + na2b - na3b, n1 - na + na2 - na3))
        let i = c(0.0, 1.0);
        let expected0 = CMatrix::from_rows(&[
            vec![
                nu[0] + i * nu[1] - nu[2] - i * nu[3],
                nu[4] + i * nu[5] - nu[6] - i * nu[7],
            ],
            vec![
                nu[4] - nu[5] + nu[6] - nu[7],
                nu[0] - nu[1] + nu[2] - nu[3],
            ],
        ]);
        assert!(blocks[0].max_abs_diff(&expected0) < 1e-12);
    }

    #[test]
    fn dihedral_conjugate_row_spaces_permute() {
        // conj(row spaces): conj(U_{rho1,1}) = U_{rho2,2}, conj(U_{rho1,2}) =
        // U_{rho1,2}... checked through column spans of E as the golden
        // witness for the order-8 dihedral example.
        let t = tol();
        let set = Arc::new(dihedral8_irreducibles());
        let e = DiagonalizerE::build(Arc::clone(&set), &t).unwrap();
        // column groups of E: (rho, k) spans U_{rho,k} = span{rho_k1, rho_k2}
        let span_cols: Vec<(usize, usize)> = vec![(0, 1), (2, 3), (4, 5), (6, 7)];
        let labels = ["u_rho1_1", "u_rho1_2", "u_rho2_1", "u_rho2_2"];
        // expected images of conjugation: V_{rho1,1} = U_{rho2,2},
        // V_{rho1,2} = U_{rho1,2}, V_{rho2,1} = U_{rho2,1}, V_{rho2,2} = U_{rho1,1}
        let expected = [(0usize, 3usize), (1, 1), (2, 2), (3, 0)];
        for &(from, to) in &expected {
            let (c0, c1) = span_cols[from];
            let (t0, t1) = span_cols[to];
            // projector onto the target span
            let basis = CMatrix::from_fn(8, 2, |g, j| {
                e.matrix()[(g, if j == 0 { t0 } else { t1 })]
            });
            let projector = basis.mul(&basis.adjoint());
            for col in [c0, c1] {
                let v: Vec<Complex64> = (0..8).map(|g| e.matrix()[(g, col)].conj()).collect();
                let pv = projector.apply(&v);
                let defect: f64 = v
                    .iter()
                    .zip(&pv)
                    .map(|(a, b)| (a - b).norm())
                    .fold(0.0, f64::max);
                assert!(defect < 1e-12, "{} -> {}", labels[from], labels[to]);
            }
        }
    }
}
