//! Projective representations: validation against a cocycle, the regular
//! alpha-representation, alpha-characters, irreducibility and equivalence
//! tests, and complete-set bookkeeping.
//!
//! Equivalence testing is character-based throughout, which is valid at a
//! fixed cocycle by the orthogonality of coordinates; no intertwiner search
//! is performed. Complete sets `R` are validated input: the library never
//! constructs irreducibles for an arbitrary `(G, alpha)` beyond the built-in
//! families and the character basis of an abelian group.

use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::cocycle::{dihedral_cocycle, klein_cocycle, Cocycle, UnitComplex};
use crate::group::{FiniteGroup, GroupIndex, IDENTITY};
use crate::numerics::{vec_inner, CMatrix, ToleranceConfig};

/// Integrality guard for multiplicity and irreducibility decisions: the
/// underlying quantity is provably an integer, so we round and reject values
/// that stray further than this from the nearest one.
const INTEGRALITY_GUARD: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum RepnError {
    #[error("representation property fails at pair ({g}, {h}), defect {defect:.3e}")]
    NotARepresentation {
        g: GroupIndex,
        h: GroupIndex,
        defect: f64,
    },
    #[error("expected {expected} matrices of size {dim}x{dim}, got {got}")]
    DimensionMismatch {
        expected: usize,
        dim: usize,
        got: String,
    },
    #[error("operation requires a unitary representation")]
    NonUnitary,
    #[error("operation requires an irreducible representation (norm-square of the character is {norm:.6})")]
    NotIrreducible { norm: f64 },
    #[error("representations have different cocycle tables and cannot be compared")]
    IncomparableCocycles,
    #[error("inner product {re:.6}+{im:.6}i is not |G| times an integer")]
    NonIntegralMultiplicity { re: f64, im: f64 },
    #[error("irreducible set is empty")]
    EmptySet,
    #[error("expected {expected} labels, got {got}")]
    LabelMismatch { expected: usize, got: usize },
    #[error("duplicate label `{0}` in irreducible set")]
    DuplicateLabel(String),
    #[error("dimension count fails: sum of squares is {sum}, group order is {order}")]
    IncompleteSet { sum: usize, order: usize },
    #[error("characters of `{a}` and `{b}` are not orthogonal: |<x,x>| = {value:.6}")]
    CharactersNotOrthogonal { a: String, b: String, value: f64 },
    #[error("coordinate orthogonality fails between `{a}` and `{b}`, defect {defect:.3e}")]
    CoordinateOrthogonality { a: String, b: String, defect: f64 },
    #[error("group is not abelian; the character basis exists only for abelian groups")]
    NotAbelian,
    #[error(transparent)]
    Group(#[from] crate::group::GroupError),
}

/// The trace function of a projective representation.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaCharacter {
    values: Vec<Complex64>,
    dim: usize,
}

impl AlphaCharacter {
    pub fn new(values: Vec<Complex64>, dim: usize) -> Self {
        AlphaCharacter { values, dim }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value(&self, g: GroupIndex) -> Complex64 {
        self.values[g]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `<x, y> = sum_g x(g) conj(y(g))`.
    pub fn inner(&self, other: &AlphaCharacter) -> Complex64 {
        vec_inner(&self.values, &other.values)
    }
}

/// Validation summary for a projective representation.
#[derive(Debug, Clone, Copy)]
pub struct RepReport {
    /// Largest entry of `rho(g) rho(h) - alpha(g,h) rho(gh)` over all pairs.
    pub max_product_defect: f64,
    /// Largest entry of `rho(g)* rho(g) - I`.
    pub max_unitarity_defect: f64,
    pub unitary: bool,
}

/// A map `g -> d x d` complex matrix with
/// `rho(g) rho(h) = alpha(g, h) rho(gh)`.
#[derive(Debug, Clone)]
pub struct ProjectiveRep {
    cocycle: Arc<Cocycle>,
    dim: usize,
    matrices: Vec<CMatrix>,
    unitary: bool,
}

/// Checks the representation property of a family of matrices against a
/// cocycle, reporting the worst pair on failure.
pub fn validate_matrices(
    cocycle: &Cocycle,
    matrices: &[CMatrix],
    tol: &ToleranceConfig,
) -> Result<RepReport, RepnError> {
    let group = cocycle.group();
    let n = group.order();
    if matrices.len() != n {
        return Err(RepnError::DimensionMismatch {
            expected: n,
            dim: matrices.first().map_or(0, CMatrix::rows),
            got: format!("{} matrices", matrices.len()),
        });
    }
    let dim = matrices[0].rows();
    for m in matrices {
        if m.rows() != dim || m.cols() != dim {
            return Err(RepnError::DimensionMismatch {
                expected: n,
                dim,
                got: format!("a {}x{} matrix", m.rows(), m.cols()),
            });
        }
    }
    let scale = 1.0 + matrices.iter().map(CMatrix::max_abs).fold(0.0, f64::max);
    let threshold = tol.structural_zero * scale * scale;

    // rho(1) = alpha(1,1) I comes first for a sharper witness.
    let id_defect = matrices[IDENTITY]
        .max_abs_diff(&CMatrix::identity(dim).scale(cocycle.alpha(IDENTITY, IDENTITY)));
    if id_defect > threshold {
        return Err(RepnError::NotARepresentation {
            g: IDENTITY,
            h: IDENTITY,
            defect: id_defect,
        });
    }

    let mut max_product_defect = 0.0f64;
    for g in 0..n {
        for h in 0..n {
            let lhs = matrices[g].mul(&matrices[h]);
            let rhs = matrices[group.mul(g, h)].scale(cocycle.alpha(g, h));
            let defect = lhs.max_abs_diff(&rhs);
            if defect > threshold {
                return Err(RepnError::NotARepresentation { g, h, defect });
            }
            max_product_defect = max_product_defect.max(defect);
        }
    }
    let eye = CMatrix::identity(dim);
    let max_unitarity_defect = matrices
        .iter()
        .map(|m| m.adjoint().mul(m).max_abs_diff(&eye))
        .fold(0.0, f64::max);
    Ok(RepReport {
        max_product_defect,
        max_unitarity_defect,
        unitary: max_unitarity_defect <= tol.structural_zero * scale,
    })
}

impl ProjectiveRep {
    /// Validates and wraps the matrix family; the unitary flag is computed,
    /// not trusted.
    pub fn new(
        cocycle: Arc<Cocycle>,
        matrices: Vec<CMatrix>,
        tol: &ToleranceConfig,
    ) -> Result<Self, RepnError> {
        let report = validate_matrices(&cocycle, &matrices, tol)?;
        Ok(ProjectiveRep {
            dim: matrices[0].rows(),
            cocycle,
            matrices,
            unitary: report.unitary,
        })
    }

    /// The regular alpha-representation `rho(g) e_h = alpha(g, h) e_{gh}`
    /// on `C^G`. Unitary exactly when the cocycle is.
    pub fn regular(cocycle: Arc<Cocycle>) -> ProjectiveRep {
        let group = Arc::clone(cocycle.group());
        let n = group.order();
        let matrices: Vec<CMatrix> = (0..n)
            .map(|g| {
                CMatrix::from_fn(n, n, |row, h| {
                    if row == group.mul(g, h) {
                        cocycle.alpha(g, h)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                })
            })
            .collect();
        let unitary = cocycle.is_unitary();
        ProjectiveRep {
            cocycle,
            dim: n,
            matrices,
            unitary,
        }
    }

    pub fn validate(&self, tol: &ToleranceConfig) -> Result<RepReport, RepnError> {
        validate_matrices(&self.cocycle, &self.matrices, tol)
    }

    pub fn cocycle(&self) -> &Arc<Cocycle> {
        &self.cocycle
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.cocycle.group()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_unitary(&self) -> bool {
        self.unitary
    }

    pub fn matrix(&self, g: GroupIndex) -> &CMatrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    /// The coordinate function `g -> rho(g)_{j k}` (0-based indices).
    pub fn coordinate(&self, j: usize, k: usize) -> Vec<Complex64> {
        self.matrices.iter().map(|m| m[(j, k)]).collect()
    }

    pub fn character(&self) -> AlphaCharacter {
        AlphaCharacter {
            values: self.matrices.iter().map(CMatrix::trace).collect(),
            dim: self.dim,
        }
    }

    /// Character test: `<x, x> = |G|` exactly when the unitary representation
    /// is irreducible. The ratio `<x, x>/|G|` is a positive integer, so it is
    /// rounded under an integrality guard rather than compared by tolerance.
    pub fn is_irreducible(&self) -> Result<bool, RepnError> {
        if !self.unitary {
            return Err(RepnError::NonUnitary);
        }
        let order = self.group().order() as f64;
        let ip = {
            let chi = self.character();
            chi.inner(&chi)
        };
        let ratio = ip.re / order;
        let rounded = ratio.round();
        if (ratio - rounded).abs() > INTEGRALITY_GUARD || (ip.im / order).abs() > INTEGRALITY_GUARD
        {
            return Err(RepnError::NonIntegralMultiplicity {
                re: ip.re,
                im: ip.im,
            });
        }
        Ok(rounded as i64 == 1)
    }

    /// Conjugates by an invertible matrix: `g -> T rho(g) T^-1`, with `T^-1`
    /// supplied by the caller.
    pub fn conjugated(
        &self,
        t: &CMatrix,
        t_inv: &CMatrix,
        tol: &ToleranceConfig,
    ) -> Result<ProjectiveRep, RepnError> {
        let matrices: Vec<CMatrix> = self.matrices.iter().map(|m| t.mul(m).mul(t_inv)).collect();
        ProjectiveRep::new(Arc::clone(&self.cocycle), matrices, tol)
    }
}

/// Character-orthogonality equivalence test for unitary irreducibles over the
/// same cocycle table. `<x1, x2>` is `|G|` for equivalent representations and
/// `0` otherwise, so the threshold sits at `|G|/2`.
pub fn are_equivalent(
    r1: &ProjectiveRep,
    r2: &ProjectiveRep,
    tol: &ToleranceConfig,
) -> Result<bool, RepnError> {
    if !r1.cocycle.compatible(&r2.cocycle, tol.structural_zero) {
        return Err(RepnError::IncomparableCocycles);
    }
    for r in [r1, r2] {
        if !r.is_irreducible()? {
            let chi = r.character();
            return Err(RepnError::NotIrreducible {
                norm: chi.inner(&chi).re / r.group().order() as f64,
            });
        }
    }
    let ip = r1.character().inner(&r2.character());
    Ok(ip.norm() > r1.group().order() as f64 / 2.0)
}

/// Multiplicity of the irreducible `xi` in a representation with character
/// `chi_total`, from `<chi_total, chi_xi> = m |G|`.
pub fn multiplicity(chi_total: &AlphaCharacter, xi: &ProjectiveRep) -> Result<usize, RepnError> {
    if !xi.unitary {
        return Err(RepnError::NonUnitary);
    }
    let order = xi.group().order() as f64;
    let ip = chi_total.inner(&xi.character());
    let ratio = ip.re / order;
    let rounded = ratio.round();
    if (ratio - rounded).abs() > INTEGRALITY_GUARD
        || (ip.im / order).abs() > INTEGRALITY_GUARD
        || rounded < 0.0
    {
        return Err(RepnError::NonIntegralMultiplicity {
            re: ip.re,
            im: ip.im,
        });
    }
    Ok(rounded as usize)
}

/// Block-diagonal direct sum of representations over one cocycle.
pub fn direct_sum(
    parts: &[&ProjectiveRep],
    tol: &ToleranceConfig,
) -> Result<ProjectiveRep, RepnError> {
    let first = parts.first().ok_or(RepnError::EmptySet)?;
    let cocycle = Arc::clone(&first.cocycle);
    for p in parts {
        if !p.cocycle.compatible(&cocycle, tol.structural_zero) {
            return Err(RepnError::IncomparableCocycles);
        }
    }
    let total: usize = parts.iter().map(|p| p.dim).sum();
    let n = cocycle.group().order();
    let matrices: Vec<CMatrix> = (0..n)
        .map(|g| {
            let mut m = CMatrix::zeros(total, total);
            let mut offset = 0;
            for p in parts {
                for i in 0..p.dim {
                    for j in 0..p.dim {
                        m[(offset + i, offset + j)] = p.matrices[g][(i, j)];
                    }
                }
                offset += p.dim;
            }
            m
        })
        .collect();
    ProjectiveRep::new(cocycle, matrices, tol)
}

/// Is `f` an alpha-class function, i.e.
/// `f(h g h^-1) alpha(h, g) = alpha(h g h^-1, h) f(g)` for all `g, h`?
pub fn is_alpha_class_function(f: &[Complex64], cocycle: &Cocycle, tol: &ToleranceConfig) -> bool {
    let group = cocycle.group();
    let n = group.order();
    if f.len() != n {
        return false;
    }
    let scale = 1.0 + f.iter().map(|z| z.norm()).fold(0.0, f64::max);
    for g in 0..n {
        for h in 0..n {
            let conj = group.conjugate(h, g);
            let lhs = f[conj] * cocycle.alpha(h, g);
            let rhs = cocycle.alpha(conj, h) * f[g];
            if (lhs - rhs).norm() > tol.structural_zero * scale {
                return false;
            }
        }
    }
    true
}

/// Validation summary for a complete irreducible set.
#[derive(Debug, Clone, Copy)]
pub struct CompleteSetReport {
    pub sum_of_dim_squares: usize,
    pub max_character_cross: f64,
    pub max_coordinate_defect: f64,
}

/// A complete set of inequivalent unitary irreducible projective
/// representations for one `(G, alpha)`.
#[derive(Debug, Clone)]
pub struct IrreducibleSet {
    cocycle: Arc<Cocycle>,
    reps: Vec<ProjectiveRep>,
    labels: Vec<String>,
}

impl IrreducibleSet {
    pub fn new(reps: Vec<ProjectiveRep>, labels: Vec<String>) -> Result<Self, RepnError> {
        let first = reps.first().ok_or(RepnError::EmptySet)?;
        let cocycle = Arc::clone(&first.cocycle);
        if labels.len() != reps.len() {
            return Err(RepnError::LabelMismatch {
                expected: reps.len(),
                got: labels.len(),
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(RepnError::DuplicateLabel(label.clone()));
            }
        }
        let tol = ToleranceConfig::default();
        for r in &reps {
            if !r.cocycle.compatible(&cocycle, tol.structural_zero) {
                return Err(RepnError::IncomparableCocycles);
            }
        }
        Ok(IrreducibleSet {
            cocycle,
            reps,
            labels,
        })
    }

    /// Full completeness check: every member unitary and irreducible, pairwise
    /// inequivalent (orthogonal characters), dimension count `sum d^2 = |G|`,
    /// and the orthogonality of coordinates
    /// `<rho_jk, xi_ml> = (|G|/d) [rho=xi][j=m][k=l]`.
    pub fn validate_complete(&self, tol: &ToleranceConfig) -> Result<CompleteSetReport, RepnError> {
        let order = self.group().order();
        let sum: usize = self.reps.iter().map(|r| r.dim * r.dim).sum();
        if sum != order {
            return Err(RepnError::IncompleteSet { sum, order });
        }
        for r in &self.reps {
            if !r.unitary {
                return Err(RepnError::NonUnitary);
            }
            if !r.is_irreducible()? {
                let chi = r.character();
                return Err(RepnError::NotIrreducible {
                    norm: chi.inner(&chi).re / order as f64,
                });
            }
        }
        let mut max_character_cross = 0.0f64;
        for i in 0..self.reps.len() {
            for j in (i + 1)..self.reps.len() {
                let ip = self.reps[i].character().inner(&self.reps[j].character());
                max_character_cross = max_character_cross.max(ip.norm());
                if ip.norm() > order as f64 / 2.0 {
                    return Err(RepnError::CharactersNotOrthogonal {
                        a: self.labels[i].clone(),
                        b: self.labels[j].clone(),
                        value: ip.norm(),
                    });
                }
            }
        }
        let mut max_coordinate_defect = 0.0f64;
        let bound = tol.rank_cutoff * order as f64;
        for (ri, rho) in self.reps.iter().enumerate() {
            for (si, xi) in self.reps.iter().enumerate() {
                for j in 0..rho.dim {
                    for k in 0..rho.dim {
                        let rho_jk = rho.coordinate(j, k);
                        for m in 0..xi.dim {
                            for l in 0..xi.dim {
                                let ip = vec_inner(&rho_jk, &xi.coordinate(m, l));
                                let expected = if ri == si && j == m && k == l {
                                    Complex64::new(order as f64 / rho.dim as f64, 0.0)
                                } else {
                                    Complex64::new(0.0, 0.0)
                                };
                                let defect = (ip - expected).norm();
                                max_coordinate_defect = max_coordinate_defect.max(defect);
                                if defect > bound {
                                    return Err(RepnError::CoordinateOrthogonality {
                                        a: self.labels[ri].clone(),
                                        b: self.labels[si].clone(),
                                        defect,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(CompleteSetReport {
            sum_of_dim_squares: sum,
            max_character_cross,
            max_coordinate_defect,
        })
    }

    pub fn cocycle(&self) -> &Arc<Cocycle> {
        &self.cocycle
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.cocycle.group()
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep(&self, i: usize) -> &ProjectiveRep {
        &self.reps[i]
    }

    pub fn reps(&self) -> &[ProjectiveRep] {
        &self.reps
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self, i: usize) -> usize {
        self.reps[i].dim
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

// ---------------------------------------------------------------------------
// Built-in families
// ---------------------------------------------------------------------------

fn mat2(rows: [[Complex64; 2]; 2]) -> CMatrix {
    CMatrix::from_rows(&[rows[0].to_vec(), rows[1].to_vec()])
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The two-dimensional projective representation of the Klein four-group for
/// the nontrivial multiplier, on elements ordered `1, a, b, ab`.
pub fn klein_rep() -> ProjectiveRep {
    let cocycle = Arc::new(klein_cocycle());
    let matrices = vec![
        mat2([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]),
        mat2([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]),
        mat2([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]]),
        mat2([[c(0.0, 0.0), c(-1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]),
    ];
    ProjectiveRep::new(cocycle, matrices, &ToleranceConfig::default())
        .expect("built-in Klein representation is valid")
}

/// The equivalent copy `T rho T^-1` with `T = (1/sqrt 2) [[1,1],[1,-1]]`.
pub fn klein_rep_tilde() -> ProjectiveRep {
    let cocycle = Arc::new(klein_cocycle());
    let matrices = vec![
        mat2([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]),
        mat2([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]]),
        mat2([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]),
        mat2([[c(0.0, 0.0), c(1.0, 0.0)], [c(-1.0, 0.0), c(0.0, 0.0)]]),
    ];
    ProjectiveRep::new(cocycle, matrices, &ToleranceConfig::default())
        .expect("built-in Klein representation is valid")
}

/// Complete irreducible set for the Klein four-group with its nontrivial
/// multiplier: the single two-dimensional `rho`.
pub fn klein_irreducibles() -> IrreducibleSet {
    IrreducibleSet::new(vec![klein_rep()], vec!["rho".to_string()]).unwrap()
}

/// The inequivalent two-dimensional projective representations `rho_1, rho_2`
/// of the dihedral group of order 8 for the cocycle `i^(k l)`:
/// `rho_r(a^j b^k) = diag(i^r, i^(1-r))^j swap^k`.
pub fn dihedral8_rep(r: u32) -> ProjectiveRep {
    assert!(r == 1 || r == 2, "only rho_1 and rho_2 exist");
    let cocycle = Arc::new(dihedral_cocycle(4).unwrap());
    let r = r as i64;
    let matrices: Vec<CMatrix> = (0..8usize)
        .map(|x| {
            let j = (x % 4) as i64;
            let k = x / 4;
            let d1 = UnitComplex::root(r * j, 4).value();
            let d2 = UnitComplex::root((1 - r) * j, 4).value();
            if k == 0 {
                mat2([[d1, c(0.0, 0.0)], [c(0.0, 0.0), d2]])
            } else {
                mat2([[c(0.0, 0.0), d1], [d2, c(0.0, 0.0)]])
            }
        })
        .collect();
    ProjectiveRep::new(cocycle, matrices, &ToleranceConfig::default())
        .expect("built-in dihedral representation is valid")
}

pub fn dihedral8_irreducibles() -> IrreducibleSet {
    IrreducibleSet::new(
        vec![dihedral8_rep(1), dihedral8_rep(2)],
        vec!["rho1".to_string(), "rho2".to_string()],
    )
    .unwrap()
}

/// Complete ordinary irreducible set for the dihedral group of order 8:
/// four linear characters `(-1)^(s j + t k)` and one two-dimensional
/// representation `diag(i, -i)^j swap^k`.
pub fn dihedral8_ordinary_irreducibles() -> IrreducibleSet {
    let cocycle = Arc::new(Cocycle::trivial(Arc::new(FiniteGroup::dihedral(4).unwrap())));
    let tol = ToleranceConfig::default();
    let mut reps = Vec::new();
    let mut labels = Vec::new();
    for (idx, (s, t)) in [(0i64, 0i64), (1, 0), (0, 1), (1, 1)].iter().enumerate() {
        let matrices: Vec<CMatrix> = (0..8usize)
            .map(|x| {
                let j = (x % 4) as i64;
                let k = (x / 4) as i64;
                let v = UnitComplex::root((s * j + t * k) * 2, 4).value();
                CMatrix::from_rows(&[vec![v]])
            })
            .collect();
        reps.push(ProjectiveRep::new(Arc::clone(&cocycle), matrices, &tol).unwrap());
        labels.push(format!("chi{idx}"));
    }
    let two_dim: Vec<CMatrix> = (0..8usize)
        .map(|x| {
            let j = (x % 4) as i64;
            let k = x / 4;
            let d1 = UnitComplex::root(j, 4).value();
            let d2 = UnitComplex::root(-j, 4).value();
            if k == 0 {
                mat2([[d1, c(0.0, 0.0)], [c(0.0, 0.0), d2]])
            } else {
                mat2([[c(0.0, 0.0), d1], [d2, c(0.0, 0.0)]])
            }
        })
        .collect();
    reps.push(ProjectiveRep::new(Arc::clone(&cocycle), two_dim, &tol).unwrap());
    labels.push("rho".to_string());
    IrreducibleSet::new(reps, labels).unwrap()
}

/// The exact character table of an abelian group, one row per character.
///
/// Characters are built by extending along a chain of cyclic steps: at each
/// stage the smallest element `g` outside the current subgroup is adjoined,
/// `chi(g)` is chosen among the `k`-th roots of the already-determined value
/// `chi(g^k)`, and the choice index for the first adjoined generator varies
/// fastest. For a cyclic group this is exactly the discrete Fourier basis.
pub fn abelian_character_table(group: &FiniteGroup) -> Result<Vec<Vec<UnitComplex>>, RepnError> {
    if !group.is_abelian() {
        return Err(RepnError::NotAbelian);
    }
    let n = group.order();
    // expr[x] = exponents of x over the chain generators.
    let mut expr: Vec<Option<Vec<usize>>> = vec![None; n];
    expr[IDENTITY] = Some(Vec::new());
    // (generator, relative order k, index of generator^k)
    let mut chain: Vec<(GroupIndex, usize, GroupIndex)> = Vec::new();
    while expr.iter().any(Option::is_none) {
        let g = (0..n).find(|&x| expr[x].is_none()).unwrap();
        let mut power = g;
        let mut k = 1;
        while expr[power].is_none() {
            power = group.mul(power, g);
            k += 1;
        }
        let stage = chain.len();
        chain.push((g, k, power));
        let members: Vec<GroupIndex> = (0..n).filter(|&x| expr[x].is_some()).collect();
        for &m in &members {
            let mut base = expr[m].clone().unwrap();
            base.resize(stage + 1, 0);
            let mut x = m;
            for s in 1..k {
                x = group.mul(g, x);
                let mut e = base.clone();
                e[stage] = s;
                debug_assert!(expr[x].is_none());
                expr[x] = Some(e);
            }
        }
    }
    for e in expr.iter_mut().flatten() {
        e.resize(chain.len(), 0);
    }

    let mut table = Vec::with_capacity(n);
    for idx in 0..n {
        // Decode the choice tuple, first stage fastest.
        let mut rest = idx;
        let mut gen_values: Vec<UnitComplex> = Vec::with_capacity(chain.len());
        for &(_, k, base) in &chain {
            let t = (rest % k) as i64;
            rest /= k;
            // chi(g)^k = chi(g^k): take the principal k-th root of the value
            // at `base` (expressible over earlier generators) and twist by
            // the chosen root of unity.
            let base_expr = expr[base].as_ref().unwrap();
            let mut base_value = UnitComplex::ONE;
            for (stage, &s) in base_expr.iter().enumerate() {
                if stage >= gen_values.len() {
                    break;
                }
                for _ in 0..s {
                    base_value = base_value.mul(&gen_values[stage]);
                }
            }
            let value = match base_value {
                UnitComplex::Root { num, den } => UnitComplex::root(num + den * t, den * k as i64),
                UnitComplex::Approx(_) => unreachable!("chain values stay exact"),
            };
            gen_values.push(value);
        }
        let row: Vec<UnitComplex> = (0..n)
            .map(|x| {
                let mut v = UnitComplex::ONE;
                for (stage, &s) in expr[x].as_ref().unwrap().iter().enumerate() {
                    for _ in 0..s {
                        v = v.mul(&gen_values[stage]);
                    }
                }
                v
            })
            .collect();
        table.push(row);
    }
    Ok(table)
}

/// The character basis of an abelian group as a complete set of
/// one-dimensional ordinary representations (trivial cocycle).
pub fn abelian_trivial_irreducibles(group: Arc<FiniteGroup>) -> Result<IrreducibleSet, RepnError> {
    let table = abelian_character_table(&group)?;
    let cocycle = Arc::new(Cocycle::trivial(group));
    let tol = ToleranceConfig::default();
    let mut reps = Vec::with_capacity(table.len());
    let mut labels = Vec::with_capacity(table.len());
    for (idx, row) in table.iter().enumerate() {
        let matrices: Vec<CMatrix> = row
            .iter()
            .map(|v| CMatrix::from_rows(&[vec![v.value()]]))
            .collect();
        reps.push(ProjectiveRep::new(Arc::clone(&cocycle), matrices, &tol)?);
        labels.push(format!("chi{idx}"));
    }
    IrreducibleSet::new(reps, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    fn cplx(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn klein_rep_validates_against_its_cocycle() {
        let rep = klein_rep();
        let report = rep.validate(&tol()).unwrap();
        assert!(report.unitary);
        assert!(report.max_product_defect == 0.0);
    }

    #[test]
    fn klein_rep_fails_against_the_trivial_cocycle() {
        let rep = klein_rep();
        let trivial = Arc::new(Cocycle::trivial(Arc::clone(rep.group())));
        let err = ProjectiveRep::new(trivial, rep.matrices().to_vec(), &tol()).unwrap_err();
        assert!(matches!(err, RepnError::NotARepresentation { .. }));
    }

    #[test]
    fn dihedral_reps_validate() {
        for r in [1, 2] {
            let rep = dihedral8_rep(r);
            assert!(rep.is_unitary());
            assert_eq!(rep.dim(), 2);
        }
    }

    #[test]
    fn regular_rep_of_cyclic_group_is_permutations() {
        let cocycle = Arc::new(Cocycle::trivial(Arc::new(FiniteGroup::cyclic(5).unwrap())));
        let reg = ProjectiveRep::regular(cocycle);
        assert!(reg.validate(&tol()).is_ok());
        for g in 0..5 {
            for i in 0..5 {
                for j in 0..5 {
                    let v = reg.matrix(g)[(i, j)];
                    assert!(v == cplx(0.0) || v == cplx(1.0));
                }
            }
        }
    }

    #[test]
    fn regular_rep_character_is_order_times_e1() {
        for cocycle in [
            Arc::new(klein_cocycle()),
            Arc::new(dihedral_cocycle(4).unwrap()),
        ] {
            let n = cocycle.group().order();
            let a11 = cocycle.alpha(0, 0);
            let reg = ProjectiveRep::regular(cocycle);
            assert!(reg.validate(&tol()).is_ok());
            let chi = reg.character();
            assert_eq!(chi.value(0), a11 * n as f64);
            for g in 1..n {
                assert!(chi.value(g).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn klein_regular_rep_is_signed_permutations() {
        let reg = ProjectiveRep::regular(Arc::new(klein_cocycle()));
        for g in 0..4 {
            for i in 0..4 {
                for j in 0..4 {
                    let v = reg.matrix(g)[(i, j)].re.abs();
                    assert!(v == 0.0 || v == 1.0);
                    assert_eq!(reg.matrix(g)[(i, j)].im, 0.0);
                }
            }
        }
    }

    #[test]
    fn klein_character_values() {
        let chi = klein_rep().character();
        assert_eq!(chi.values(), &[cplx(2.0), cplx(0.0), cplx(0.0), cplx(0.0)]);
    }

    #[test]
    fn irreducibility_by_character_norm() {
        assert!(klein_rep().is_irreducible().unwrap());
        assert!(dihedral8_rep(1).is_irreducible().unwrap());
        assert!(dihedral8_rep(2).is_irreducible().unwrap());
        let rep = klein_rep();
        let doubled = direct_sum(&[&rep, &rep], &tol()).unwrap();
        assert!(!doubled.is_irreducible().unwrap());
    }

    #[test]
    fn equivalence_tests() {
        let rho = klein_rep();
        let rho_tilde = klein_rep_tilde();
        assert!(are_equivalent(&rho, &rho_tilde, &tol()).unwrap());
        // conjugating by the explicit self-inverse T lands exactly on rho~
        let s = 1.0 / 2.0f64.sqrt();
        let t = mat2([[cplx(s), cplx(s)], [cplx(s), cplx(-s)]]);
        let conj = rho.conjugated(&t, &t, &tol()).unwrap();
        for g in 0..4 {
            assert!(conj.matrix(g).max_abs_diff(rho_tilde.matrix(g)) < 1e-12);
        }
        assert!(!are_equivalent(&dihedral8_rep(1), &dihedral8_rep(2), &tol()).unwrap());
        // different cocycle tables are incomparable
        let trivial_set = abelian_trivial_irreducibles(Arc::new(FiniteGroup::klein())).unwrap();
        assert!(matches!(
            are_equivalent(&rho, trivial_set.rep(0), &tol()),
            Err(RepnError::IncomparableCocycles)
        ));
    }

    #[test]
    fn equivalence_survives_a_random_unitary_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let rho = dihedral8_rep(1);
        // a random unitary from a rotation angle and a phase
        let (a, b): (f64, f64) = (rng.random::<f64>() * 6.0, rng.random::<f64>() * 6.0);
        let (ca, sa) = (a.cos(), a.sin());
        let phase = Complex64::new(b.cos(), b.sin());
        let t = mat2([
            [Complex64::new(ca, 0.0), phase * sa],
            [-phase.conj() * sa, Complex64::new(ca, 0.0)],
        ]);
        let t_inv = t.adjoint();
        let conj = rho.conjugated(&t, &t_inv, &tol()).unwrap();
        assert!(conj.is_unitary());
        assert!(are_equivalent(&rho, &conj, &tol()).unwrap());
    }

    #[test]
    fn non_unitary_reps_are_accepted_but_rejected_by_spectral_ops() {
        // conjugating by an invertible non-unitary T keeps the representation
        // property and the cocycle, but destroys unitarity
        let rho = klein_rep();
        let t = mat2([[cplx(2.0), cplx(0.0)], [cplx(0.0), cplx(1.0)]]);
        let t_inv = mat2([[cplx(0.5), cplx(0.0)], [cplx(0.0), cplx(1.0)]]);
        let skewed = rho.conjugated(&t, &t_inv, &tol()).unwrap();
        assert!(!skewed.is_unitary());
        assert!(skewed.validate(&tol()).is_ok());
        assert!(matches!(skewed.is_irreducible(), Err(RepnError::NonUnitary)));
        assert!(matches!(
            multiplicity(&rho.character(), &skewed),
            Err(RepnError::NonUnitary)
        ));
        let set = IrreducibleSet::new(vec![skewed], vec!["skewed".into()]).unwrap();
        assert!(matches!(
            set.validate_complete(&tol()),
            Err(RepnError::NonUnitary)
        ));
    }

    #[test]
    fn multiplicities() {
        let rho = klein_rep();
        let reg = ProjectiveRep::regular(Arc::new(klein_cocycle()));
        assert_eq!(multiplicity(&reg.character(), &rho).unwrap(), 2);
        assert_eq!(multiplicity(&rho.character(), &rho).unwrap(), 1);
        let rho1 = dihedral8_rep(1);
        let rho2 = dihedral8_rep(2);
        assert_eq!(multiplicity(&rho1.character(), &rho2).unwrap(), 0);
        let reg8 = ProjectiveRep::regular(Arc::new(dihedral_cocycle(4).unwrap()));
        assert_eq!(multiplicity(&reg8.character(), &rho1).unwrap(), 2);
    }

    #[test]
    fn complete_set_validation() {
        let t = tol();
        let klein = klein_irreducibles();
        let report = klein.validate_complete(&t).unwrap();
        assert_eq!(report.sum_of_dim_squares, 4);

        let d8 = dihedral8_irreducibles();
        assert_eq!(d8.validate_complete(&t).unwrap().sum_of_dim_squares, 8);

        let d8_ord = dihedral8_ordinary_irreducibles();
        assert_eq!(d8_ord.validate_complete(&t).unwrap().sum_of_dim_squares, 8);

        // duplicate equivalence class: the dimension count already fails
        let dup = IrreducibleSet::new(
            vec![klein_rep(), klein_rep_tilde()],
            vec!["rho".into(), "rho_tilde".into()],
        )
        .unwrap();
        assert!(matches!(
            dup.validate_complete(&t),
            Err(RepnError::IncompleteSet { sum: 8, order: 4 })
        ));
    }

    #[test]
    fn schur_orthogonality_in_the_non_unitary_form() {
        // sum_g xi_lm(g^-1) rho_jk(g) / (alpha(g,g^-1) alpha(1,1))
        //   = (|G|/d) [rho=xi][j=m][k=l]
        for set in [klein_irreducibles(), dihedral8_irreducibles()] {
            let cocycle = set.cocycle();
            let group = set.group();
            let a11 = cocycle.alpha(0, 0);
            for (ri, rho) in set.reps().iter().enumerate() {
                for (si, xi) in set.reps().iter().enumerate() {
                    for j in 0..rho.dim() {
                        for k in 0..rho.dim() {
                            for l in 0..xi.dim() {
                                for m in 0..xi.dim() {
                                    let mut sum = Complex64::new(0.0, 0.0);
                                    for g in group.elements() {
                                        let ginv = group.inv(g);
                                        sum += xi.matrix(ginv)[(l, m)] * rho.matrix(g)[(j, k)]
                                            / (cocycle.alpha(g, ginv) * a11);
                                    }
                                    let expected = if ri == si && j == m && k == l {
                                        group.order() as f64 / rho.dim() as f64
                                    } else {
                                        0.0
                                    };
                                    assert!(
                                        (sum - cplx(expected)).norm() < 1e-10,
                                        "defect at ({ri},{si},{j},{k},{l},{m}): {sum}"
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn characters_are_alpha_class_functions() {
        let t = tol();
        for set in [
            klein_irreducibles(),
            dihedral8_irreducibles(),
            dihedral8_ordinary_irreducibles(),
        ] {
            let cocycle = set.cocycle();
            for rep in set.reps() {
                let chi = rep.character();
                assert!(is_alpha_class_function(chi.values(), cocycle, &t));
            }
            // a linear combination of irreducible characters still is one
            let n = set.group().order();
            let mut combo = vec![Complex64::new(0.0, 0.0); n];
            for (w, rep) in set.reps().iter().enumerate() {
                let chi = rep.character();
                for g in 0..n {
                    combo[g] += chi.value(g) * (w as f64 + 0.5);
                }
            }
            assert!(is_alpha_class_function(&combo, cocycle, &t));
        }
    }

    #[test]
    fn delta_function_is_not_a_class_function_off_centre() {
        let t = tol();
        let d8 = Arc::new(FiniteGroup::dihedral(4).unwrap());
        let trivial = Cocycle::trivial(d8);
        let mut f = vec![Complex64::new(0.0, 0.0); 8];
        f[1] = cplx(1.0); // e_a, and a is not central
        assert!(!is_alpha_class_function(&f, &trivial, &t));
        let mut e1 = vec![Complex64::new(0.0, 0.0); 8];
        e1[0] = cplx(1.0);
        assert!(is_alpha_class_function(&e1, &trivial, &t));
    }

    #[test]
    fn character_conjugation_identity() {
        // chi(g^-1) = alpha(g, g^-1) alpha(1,1) conj(chi(g)) for unitary reps
        for set in [klein_irreducibles(), dihedral8_irreducibles()] {
            let cocycle = set.cocycle();
            let group = set.group();
            let a11 = cocycle.alpha(0, 0);
            for rep in set.reps() {
                let chi = rep.character();
                for g in group.elements() {
                    let ginv = group.inv(g);
                    let lhs = chi.value(ginv);
                    let rhs = cocycle.alpha(g, ginv) * a11 * chi.value(g).conj();
                    assert!((lhs - rhs).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn abelian_character_table_of_z4_is_the_fourier_basis() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let table = abelian_character_table(&z4).unwrap();
        for (t_idx, row) in table.iter().enumerate() {
            for (x, v) in row.iter().enumerate() {
                assert_eq!(*v, UnitComplex::root((t_idx * x) as i64, 4));
            }
        }
    }

    #[test]
    fn abelian_character_table_of_klein_matches_sign_pattern() {
        let table = abelian_character_table(&FiniteGroup::klein()).unwrap();
        let signs: Vec<Vec<f64>> = table
            .iter()
            .map(|row| row.iter().map(|v| v.value().re).collect())
            .collect();
        assert_eq!(
            signs,
            vec![
                vec![1.0, 1.0, 1.0, 1.0],
                vec![1.0, -1.0, 1.0, -1.0],
                vec![1.0, 1.0, -1.0, -1.0],
                vec![1.0, -1.0, -1.0, 1.0],
            ]
        );
    }

    #[test]
    fn abelian_irreducibles_are_complete_for_various_groups() {
        let t = tol();
        for group in [
            FiniteGroup::cyclic(1).unwrap(),
            FiniteGroup::cyclic(6).unwrap(),
            FiniteGroup::cyclic(8).unwrap(),
            FiniteGroup::klein(),
            FiniteGroup::cyclic(2)
                .unwrap()
                .direct_product(&FiniteGroup::cyclic(4).unwrap()),
        ] {
            let n = group.order();
            let set = abelian_trivial_irreducibles(Arc::new(group)).unwrap();
            assert_eq!(set.len(), n);
            set.validate_complete(&t).unwrap();
        }
        assert!(matches!(
            abelian_trivial_irreducibles(Arc::new(FiniteGroup::dihedral(4).unwrap())),
            Err(RepnError::NotAbelian)
        ));
    }

    #[test]
    fn class_count_matches_set_size_for_built_ins() {
        let t = tol();
        let klein = klein_irreducibles();
        assert_eq!(klein.cocycle().alpha_regular_class_count(&t), klein.len());
        let d8 = dihedral8_irreducibles();
        assert_eq!(d8.cocycle().alpha_regular_class_count(&t), d8.len());
        let d8_ord = dihedral8_ordinary_irreducibles();
        assert_eq!(d8_ord.cocycle().alpha_regular_class_count(&t), d8_ord.len());
    }
}
