//! Gramians of projective group orbits, tight-frame detection and
//! classification, and the reconstruction of a frame vector from a projection
//! Gramian.
//!
//! A projective orbit `(rho(g) v)_g` of a unitary representation has Gramian
//! `M_alpha(nu)` with `nu(g) = <rho(g) v, v>`. The frame is normalised tight
//! exactly when every Fourier coefficient `(F nu)_rho` is an orthogonal
//! projection; writing those projections as sums of rank-one terms recovers
//! an explicit vector whose orbit under block-diagonal copies of the
//! irreducibles reproduces the Gramian. Reconstruction compares Gramians,
//! never vectors: the eigenvalue-1 eigenspace is only determined up to a
//! unitary mixing.

use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::fourier::{self, FourierError, FourierImage};
use crate::galpha::{GAlphaError, GAlphaMatrix};
use crate::numerics::{
    hermitian_eigendecomposition, vec_inner, CMatrix, NumericsError, ToleranceConfig,
};
use crate::repn::{IrreducibleSet, ProjectiveRep, RepnError};

#[derive(Debug, Error)]
pub enum FrameError {
    #[error("orbit Gramians need a unitary representation")]
    NonUnitaryRep,
    #[error("orbit vector must be nonzero")]
    ZeroVector,
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not a frame Gramian: block `{label}` has eigenvalue {value:.3e} below the PSD floor")]
    NotPositiveSemidefinite { label: String, value: f64 },
    #[error("block `{label}` is not Hermitian (defect {defect:.3e})")]
    BlockNotHermitian { label: String, defect: f64 },
    #[error("block `{label}` is not an orthogonal projection (defect {defect:.3e}); run the PSD construction instead")]
    BlockNotProjection { label: String, defect: f64 },
    #[error("block `{label}` has eigenvalue {value:.6} too far from both 0 and 1 to cluster")]
    NumericalDegeneracy { label: String, value: f64 },
    #[error("rebuilt Gramian deviates by {residual:.3e}, beyond {bound:.3e}")]
    ReconstructionFailed { residual: f64, bound: f64 },
    #[error("subset index {index} is out of range (set has {len} members)")]
    BadSubsetIndex { index: usize, len: usize },
    #[error("component {component} has dimension {got}, expected {expected}")]
    BadComponent {
        component: usize,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    Fourier(#[from] FourierError),
    #[error(transparent)]
    GAlpha(#[from] GAlphaError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Repn(#[from] RepnError),
}

/// Provenance of a Gramian that came from an explicit orbit.
#[derive(Debug, Clone)]
pub struct FrameSource {
    pub rep: ProjectiveRep,
    pub vector: Vec<Complex64>,
}

/// A positive semidefinite (G,alpha)-matrix `M_alpha(nu)` with
/// `nu(g) = <rho(g) v, v>` for some orbit.
#[derive(Debug, Clone)]
pub struct FrameGramian {
    matrix: GAlphaMatrix,
    source: Option<FrameSource>,
}

impl FrameGramian {
    /// Wraps a (G,alpha)-matrix after checking it is Hermitian positive
    /// semidefinite (eigenvalues above `-tol.projection * (1 + |M|)`).
    pub fn from_matrix(matrix: GAlphaMatrix, tol: &ToleranceConfig) -> Result<Self, FrameError> {
        let dense = matrix.to_dense();
        let scale = 1.0 + dense.max_abs();
        let defect = dense.hermitian_defect();
        if defect > tol.projection * scale {
            return Err(FrameError::BlockNotHermitian {
                label: "dense".to_string(),
                defect,
            });
        }
        let (eigs, _) = hermitian_eigendecomposition(&dense, tol)?;
        if let Some(&lowest) = eigs.first() {
            if lowest < -tol.projection * scale {
                return Err(FrameError::NotPositiveSemidefinite {
                    label: "dense".to_string(),
                    value: lowest,
                });
            }
        }
        Ok(FrameGramian {
            matrix,
            source: None,
        })
    }

    /// Trusted constructor for Gramians that are PSD by construction.
    fn new_unchecked(matrix: GAlphaMatrix, source: Option<FrameSource>) -> Self {
        FrameGramian { matrix, source }
    }

    pub fn matrix(&self) -> &GAlphaMatrix {
        &self.matrix
    }

    pub fn nu(&self) -> &[Complex64] {
        self.matrix.nu()
    }

    pub fn source(&self) -> Option<&FrameSource> {
        self.source.as_ref()
    }

    pub fn to_dense(&self) -> CMatrix {
        self.matrix.to_dense()
    }

    /// The Fourier coefficients of the frame: the blocks of `F(nu)`.
    pub fn fourier_coefficients(
        &self,
        r: &Arc<IrreducibleSet>,
    ) -> Result<FourierImage, FrameError> {
        Ok(fourier::forward(self.matrix.nu(), r)?)
    }
}

/// The Gramian of the orbit `(rho(g) v)_g`: `nu(g) = <rho(g) v, v>`.
pub fn gramian_of_orbit(
    rep: &ProjectiveRep,
    v: &[Complex64],
    _tol: &ToleranceConfig,
) -> Result<FrameGramian, FrameError> {
    if !rep.is_unitary() {
        return Err(FrameError::NonUnitaryRep);
    }
    if v.len() != rep.dim() {
        return Err(FrameError::DimensionMismatch {
            expected: rep.dim(),
            got: v.len(),
        });
    }
    if v.iter().all(|z| z.norm() == 0.0) {
        return Err(FrameError::ZeroVector);
    }
    let nu: Vec<Complex64> = rep
        .matrices()
        .iter()
        .map(|m| vec_inner(&m.apply(v), v))
        .collect();
    let matrix = GAlphaMatrix::new(Arc::clone(rep.cocycle()), nu)?;
    Ok(FrameGramian::new_unchecked(
        matrix,
        Some(FrameSource {
            rep: rep.clone(),
            vector: v.to_vec(),
        }),
    ))
}

/// Per-block tightness diagnostics.
#[derive(Debug, Clone)]
pub struct TightnessReport {
    pub tight: bool,
    /// Labels of the blocks failing the projection test.
    pub failing: Vec<String>,
    pub max_idempotent_defect: f64,
    pub max_hermitian_defect: f64,
}

/// A Gramian is the Gramian of a normalised tight frame exactly when every
/// Fourier coefficient is an orthogonal projection: `|B^2 - B|` and
/// `|B* - B|` both below `tol.projection`.
pub fn is_tight(
    gramian: &FrameGramian,
    r: &Arc<IrreducibleSet>,
    tol: &ToleranceConfig,
) -> Result<TightnessReport, FrameError> {
    let image = gramian.fourier_coefficients(r)?;
    let mut failing = Vec::new();
    let mut max_idem = 0.0f64;
    let mut max_herm = 0.0f64;
    for (idx, block) in image.blocks().iter().enumerate() {
        let idem = block.mul(block).max_abs_diff(block);
        let herm = block.hermitian_defect();
        max_idem = max_idem.max(idem);
        max_herm = max_herm.max(herm);
        if idem >= tol.projection || herm >= tol.projection {
            failing.push(r.label(idx).to_string());
        }
    }
    Ok(TightnessReport {
        tight: failing.is_empty(),
        failing,
        max_idempotent_defect: max_idem,
        max_hermitian_defect: max_herm,
    })
}

/// Frame classes read off the shape of the Fourier coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameClassTag {
    /// Single nonzero coefficient of rank one.
    Irreducible,
    /// Single nonzero coefficient.
    Homogeneous,
    /// Abelian group, trivial cocycle, all coefficients 0 or 1.
    Harmonic,
    /// Every coefficient is 0 or a scalar multiple of the identity.
    Central,
    General,
}

impl FrameClassTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            FrameClassTag::Irreducible => "irreducible",
            FrameClassTag::Homogeneous => "homogeneous",
            FrameClassTag::Harmonic => "harmonic",
            FrameClassTag::Central => "central",
            FrameClassTag::General => "general",
        }
    }
}

/// Shape summary of one Fourier coefficient.
#[derive(Debug, Clone)]
pub struct BlockSummary {
    pub label: String,
    pub zero: bool,
    pub rank: usize,
    pub is_projection: bool,
    /// `Some(c)` when the block is `c I`.
    pub scalar: Option<Complex64>,
}

#[derive(Debug, Clone)]
pub struct FrameClass {
    pub tag: FrameClassTag,
    pub blocks: Vec<BlockSummary>,
}

/// Classifies a Gramian by its Fourier coefficients, returning the most
/// specific applicable tag (irreducible > homogeneous > harmonic > central).
pub fn classify(
    gramian: &FrameGramian,
    r: &Arc<IrreducibleSet>,
    tol: &ToleranceConfig,
) -> Result<FrameClass, FrameError> {
    let image = gramian.fourier_coefficients(r)?;
    let scale = 1.0 + image.blocks().iter().map(CMatrix::max_abs).fold(0.0, f64::max);
    let zero_bound = tol.structural_zero * scale;
    let mut blocks = Vec::with_capacity(r.len());
    for (idx, block) in image.blocks().iter().enumerate() {
        let d = r.dim(idx);
        let zero = block.max_abs() <= zero_bound;
        let rank = if zero {
            0
        } else {
            crate::numerics::rank_dense(block, tol)
        };
        let idem = block.mul(block).max_abs_diff(block);
        let herm = block.hermitian_defect();
        let is_projection = idem < tol.projection && herm < tol.projection;
        let mean = block.trace() / d as f64;
        let scalar_defect = block
            .sub(&CMatrix::identity(d).scale(mean))
            .max_abs();
        let scalar = if scalar_defect <= zero_bound {
            Some(mean)
        } else {
            None
        };
        blocks.push(BlockSummary {
            label: r.label(idx).to_string(),
            zero,
            rank,
            is_projection,
            scalar,
        });
    }

    let nonzero: Vec<&BlockSummary> = blocks.iter().filter(|b| !b.zero).collect();
    let all_scalar = blocks.iter().all(|b| b.zero || b.scalar.is_some());
    let harmonic = r.group().is_abelian()
        && r.cocycle().is_trivial()
        && blocks.iter().all(|b| {
            b.zero
                || b.scalar
                    .map(|s| (s - Complex64::new(1.0, 0.0)).norm() <= zero_bound)
                    .unwrap_or(false)
        });
    let tag = if nonzero.len() == 1 && nonzero[0].rank == 1 {
        FrameClassTag::Irreducible
    } else if nonzero.len() == 1 {
        FrameClassTag::Homogeneous
    } else if harmonic {
        FrameClassTag::Harmonic
    } else if all_scalar {
        FrameClassTag::Central
    } else {
        FrameClassTag::General
    };
    Ok(FrameClass { tag, blocks })
}

/// The tight central Gramian `M_alpha(sum_{xi in S} (d_xi/|G|) chi_xi)`.
/// Its nonzero Fourier coefficients are exactly the identity at `xi in S`;
/// the empty subset gives the zero matrix.
pub fn central_gramian(
    r: &Arc<IrreducibleSet>,
    subset: &[usize],
) -> Result<FrameGramian, FrameError> {
    let n = r.group().order();
    for &index in subset {
        if index >= r.len() {
            return Err(FrameError::BadSubsetIndex {
                index,
                len: r.len(),
            });
        }
    }
    let mut nu = vec![Complex64::new(0.0, 0.0); n];
    for &index in subset {
        let rep = r.rep(index);
        let chi = rep.character();
        let weight = rep.dim() as f64 / n as f64;
        for g in 0..n {
            nu[g] += chi.value(g) * weight;
        }
    }
    let matrix = GAlphaMatrix::new(Arc::clone(r.cocycle()), nu)?;
    Ok(FrameGramian::new_unchecked(matrix, None))
}

/// Reconstructed frame data: per irreducible, the stored vectors are the
/// `w_{xi,j}` scaled by `sqrt(d_xi/|G|)` (and by `sqrt(lambda_j)` in the PSD
/// case, with the eigenvalue kept in `weights`).
#[derive(Debug, Clone)]
pub struct FrameComponent {
    pub label: String,
    pub dim: usize,
    pub vectors: Vec<Vec<Complex64>>,
    pub weights: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct FrameVector {
    pub components: Vec<FrameComponent>,
}

impl FrameVector {
    /// Multiplicity of each irreducible in the reconstructed action.
    pub fn multiplicities(&self) -> Vec<(String, usize)> {
        self.components
            .iter()
            .map(|c| (c.label.clone(), c.vectors.len()))
            .collect()
    }

    /// `sum_xi m_xi d_xi`, the dimension of the reconstructed space.
    pub fn total_dim(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.vectors.len() * c.dim)
            .sum()
    }

    /// The frame vectors `phi_g = (xi(g) u_{xi,j})_{xi,j}` as rows of
    /// flattened coordinates, in `(xi, j, coordinate)` order.
    pub fn synthesize_orbit(&self, r: &Arc<IrreducibleSet>) -> Vec<Vec<Complex64>> {
        let n = r.group().order();
        (0..n)
            .map(|g| {
                let mut row = Vec::with_capacity(self.total_dim());
                for component in &self.components {
                    let idx = r
                        .index_of(&component.label)
                        .expect("component label present in the set");
                    let m = r.rep(idx).matrix(g);
                    for u in &component.vectors {
                        row.extend(m.apply(u));
                    }
                }
                row
            })
            .collect()
    }

    /// Gramian vector of the synthesized orbit:
    /// `nu(g) = sum_{xi,j} <xi(g) u_{xi,j}, u_{xi,j}>`.
    pub fn gramian_vector(&self, r: &Arc<IrreducibleSet>) -> Vec<Complex64> {
        let n = r.group().order();
        (0..n)
            .map(|g| {
                let mut sum = Complex64::new(0.0, 0.0);
                for component in &self.components {
                    let idx = r
                        .index_of(&component.label)
                        .expect("component label present in the set");
                    let m = r.rep(idx).matrix(g);
                    for u in &component.vectors {
                        sum += vec_inner(&m.apply(u), u);
                    }
                }
                sum
            })
            .collect()
    }
}

/// Result of rebuilding a frame from a Gramian.
#[derive(Debug, Clone)]
pub struct ConstructedFrame {
    pub vector: FrameVector,
    pub rebuilt: FrameGramian,
    /// Largest entrywise deviation between the input Gramian and the Gramian
    /// of the reconstructed orbit.
    pub residual: f64,
}

fn eigen_split(
    block: &CMatrix,
    label: &str,
    tol: &ToleranceConfig,
) -> Result<(Vec<f64>, CMatrix), FrameError> {
    let herm = block.hermitian_defect();
    if herm > tol.projection * (1.0 + block.max_abs()) {
        return Err(FrameError::BlockNotHermitian {
            label: label.to_string(),
            defect: herm,
        });
    }
    Ok(hermitian_eigendecomposition(block, tol)?)
}

fn rebuild_and_check(
    vector: FrameVector,
    input: &FrameGramian,
    r: &Arc<IrreducibleSet>,
    tol: &ToleranceConfig,
) -> Result<ConstructedFrame, FrameError> {
    let nu = vector.gramian_vector(r);
    let matrix = GAlphaMatrix::new(Arc::clone(r.cocycle()), nu)?;
    let rebuilt_dense = matrix.to_dense();
    let input_dense = input.to_dense();
    let residual = rebuilt_dense.max_abs_diff(&input_dense);
    let bound = tol.rank_cutoff * (1.0 + input_dense.max_abs());
    if residual > bound {
        return Err(FrameError::ReconstructionFailed { residual, bound });
    }
    Ok(ConstructedFrame {
        vector,
        rebuilt: FrameGramian::new_unchecked(matrix, None),
        residual,
    })
}

/// Rebuilds a frame vector from a tight Gramian: each Fourier coefficient is
/// an orthogonal projection, its eigenvalue-1 eigenvectors are the `w_{xi,j}`,
/// and the orbit of `v = (sqrt(d_xi/|G|) w_xi)_xi` under block-diagonal
/// copies of the irreducibles has the input Gramian. Eigenvalues must
/// cluster at {0, 1}; anything in between aborts with a diagnostic.
pub fn construct_frame(
    gramian: &FrameGramian,
    r: &Arc<IrreducibleSet>,
    tol: &ToleranceConfig,
) -> Result<ConstructedFrame, FrameError> {
    let image = gramian.fourier_coefficients(r)?;
    let mut components = Vec::with_capacity(r.len());
    for (idx, block) in image.blocks().iter().enumerate() {
        let label = r.label(idx);
        let idem = block.mul(block).max_abs_diff(block);
        let herm = block.hermitian_defect();
        if idem >= tol.projection || herm >= tol.projection {
            return Err(FrameError::BlockNotProjection {
                label: label.to_string(),
                defect: idem.max(herm),
            });
        }
        let (eigs, vecs) = eigen_split(block, label, tol)?;
        let d = r.dim(idx);
        let scale = (d as f64 / r.group().order() as f64).sqrt();
        let mut vectors = Vec::new();
        let mut weights = Vec::new();
        for (col, &lambda) in eigs.iter().enumerate() {
            if lambda >= 0.75 {
                let w = vecs.col(col);
                vectors.push(w.into_iter().map(|z| z * scale).collect());
                weights.push(1.0);
            } else if lambda > 0.25 {
                return Err(FrameError::NumericalDegeneracy {
                    label: label.to_string(),
                    value: lambda,
                });
            }
        }
        components.push(FrameComponent {
            label: label.to_string(),
            dim: d,
            vectors,
            weights,
        });
    }
    rebuild_and_check(FrameVector { components }, gramian, r, tol)
}

/// General (non-tight) realisation: positive semidefinite coefficients
/// `B = sum_j lambda_j w_j w_j*` give a frame with the `w_j` additionally
/// scaled by `sqrt(lambda_j)`. Eigenvalues below the rank cutoff are dropped;
/// negative ones beyond the PSD floor reject the input.
pub fn construct_from_psd(
    gramian: &FrameGramian,
    r: &Arc<IrreducibleSet>,
    tol: &ToleranceConfig,
) -> Result<ConstructedFrame, FrameError> {
    let image = gramian.fourier_coefficients(r)?;
    let mut spectra = Vec::with_capacity(r.len());
    let mut lambda_max = 0.0f64;
    let psd_floor_scale = 1.0
        + image
            .blocks()
            .iter()
            .map(CMatrix::max_abs)
            .fold(0.0, f64::max);
    for (idx, block) in image.blocks().iter().enumerate() {
        let label = r.label(idx);
        let (eigs, vecs) = eigen_split(block, label, tol)?;
        if let Some(&lowest) = eigs.first() {
            if lowest < -tol.projection * psd_floor_scale {
                return Err(FrameError::NotPositiveSemidefinite {
                    label: label.to_string(),
                    value: lowest,
                });
            }
        }
        lambda_max = eigs.iter().fold(lambda_max, |m, &l| m.max(l));
        spectra.push((eigs, vecs));
    }
    let cutoff = tol.rank_cutoff * lambda_max;
    let mut components = Vec::with_capacity(r.len());
    for (idx, (eigs, vecs)) in spectra.into_iter().enumerate() {
        let d = r.dim(idx);
        let scale = (d as f64 / r.group().order() as f64).sqrt();
        let mut vectors = Vec::new();
        let mut weights = Vec::new();
        for (col, &lambda) in eigs.iter().enumerate() {
            if lambda > cutoff {
                let root = lambda.sqrt();
                let w = vecs.col(col);
                vectors.push(w.into_iter().map(|z| z * scale * root).collect());
                weights.push(lambda);
            }
        }
        components.push(FrameComponent {
            label: r.label(idx).to_string(),
            dim: d,
            vectors,
            weights,
        });
    }
    rebuild_and_check(FrameVector { components }, gramian, r, tol)
}

/// One orbit-side tightness condition.
#[derive(Debug, Clone)]
pub struct ConditionCheck {
    pub description: String,
    pub value: f64,
    pub expected: f64,
    pub pass: bool,
}

/// Orbit-side report for a representation given in block form.
#[derive(Debug, Clone)]
pub struct OrbitTightnessReport {
    pub norm_conditions: Vec<ConditionCheck>,
    pub orthogonality_conditions: Vec<ConditionCheck>,
    pub tight: bool,
}

/// Checks the structure-theorem conditions for an orbit of a representation
/// given as an explicit direct sum of members of `R`: every component needs
/// `||v_j||^2 = d/|G|`, and components living in equal irreducibles must be
/// orthogonal (the intertwiners are identity maps in block form).
pub fn check_orbit_tightness_conditions(
    r: &Arc<IrreducibleSet>,
    components: &[(usize, Vec<Complex64>)],
    tol: &ToleranceConfig,
) -> Result<OrbitTightnessReport, FrameError> {
    let n = r.group().order() as f64;
    for (pos, (index, v)) in components.iter().enumerate() {
        if *index >= r.len() {
            return Err(FrameError::BadSubsetIndex {
                index: *index,
                len: r.len(),
            });
        }
        if v.len() != r.dim(*index) {
            return Err(FrameError::BadComponent {
                component: pos,
                expected: r.dim(*index),
                got: v.len(),
            });
        }
    }
    let mut norm_conditions = Vec::new();
    for (pos, (index, v)) in components.iter().enumerate() {
        let norm_sq = vec_inner(v, v).re;
        let expected = r.dim(*index) as f64 / n;
        norm_conditions.push(ConditionCheck {
            description: format!("||v_{pos}||^2 = dim/|G| for `{}`", r.label(*index)),
            value: norm_sq,
            expected,
            pass: (norm_sq - expected).abs() < tol.projection,
        });
    }
    let mut orthogonality_conditions = Vec::new();
    for i in 0..components.len() {
        for j in (i + 1)..components.len() {
            if components[i].0 != components[j].0 {
                continue;
            }
            let ip = vec_inner(&components[i].1, &components[j].1).norm();
            orthogonality_conditions.push(ConditionCheck {
                description: format!(
                    "<sigma v_{i}, v_{j}> = 0 within `{}`",
                    r.label(components[i].0)
                ),
                value: ip,
                expected: 0.0,
                pass: ip < tol.projection,
            });
        }
    }
    let tight = norm_conditions.iter().all(|c| c.pass)
        && orthogonality_conditions.iter().all(|c| c.pass);
    Ok(OrbitTightnessReport {
        norm_conditions,
        orthogonality_conditions,
        tight,
    })
}

/// Assembles the explicit direct-sum orbit for a component list: the
/// block-diagonal representation and the stacked vector.
pub fn assemble_block_orbit(
    r: &Arc<IrreducibleSet>,
    components: &[(usize, Vec<Complex64>)],
    tol: &ToleranceConfig,
) -> Result<(ProjectiveRep, Vec<Complex64>), FrameError> {
    let parts: Vec<&ProjectiveRep> = components.iter().map(|(idx, _)| r.rep(*idx)).collect();
    let rep = crate::repn::direct_sum(&parts, tol)?;
    let vector: Vec<Complex64> = components.iter().flat_map(|(_, v)| v.clone()).collect();
    Ok((rep, vector))
}

/// Draws a random normalised tight Gramian by filling each Fourier
/// coefficient with a projection onto a random subspace of random dimension
/// (at least one block nonzero).
pub fn random_tight_gramian<R: rand::Rng>(
    r: &Arc<IrreducibleSet>,
    rng: &mut R,
) -> FrameGramian {
    loop {
        let mut blocks = Vec::with_capacity(r.len());
        let mut total_rank = 0;
        for idx in 0..r.len() {
            let d = r.dim(idx);
            let m = rng.random_range(0..=d);
            total_rank += m;
            let basis = random_orthonormal(rng, d, m);
            let mut block = CMatrix::zeros(d, d);
            for w in &basis {
                for i in 0..d {
                    for j in 0..d {
                        block[(i, j)] += w[i] * w[j].conj();
                    }
                }
            }
            blocks.push(block);
        }
        if total_rank == 0 {
            continue;
        }
        let image = FourierImage::from_blocks(Arc::clone(r), blocks).expect("shapes match");
        let nu = fourier::inverse(&image);
        let matrix = GAlphaMatrix::new(Arc::clone(r.cocycle()), nu).expect("length matches");
        return FrameGramian::new_unchecked(matrix, None);
    }
}

/// Random orthonormal family of `m` vectors in dimension `d` (Gram-Schmidt
/// on random coordinates).
pub fn random_orthonormal<R: rand::Rng>(rng: &mut R, d: usize, m: usize) -> Vec<Vec<Complex64>> {
    assert!(m <= d);
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(m);
    while basis.len() < m {
        let mut v: Vec<Complex64> = (0..d)
            .map(|_| {
                Complex64::new(
                    rng.random::<f64>() * 2.0 - 1.0,
                    rng.random::<f64>() * 2.0 - 1.0,
                )
            })
            .collect();
        for b in &basis {
            let coeff = vec_inner(&v, b);
            for (x, y) in v.iter_mut().zip(b) {
                *x -= coeff * y;
            }
        }
        let norm = vec_inner(&v, &v).re.sqrt();
        if norm < 1e-6 {
            continue;
        }
        for x in v.iter_mut() {
            *x /= norm;
        }
        basis.push(v);
    }
    basis
}
