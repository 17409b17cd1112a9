//! Dense complex linear algebra kernels and the shared tolerance configuration.
//!
//! All matrices here are small (order at most a few hundred), so every kernel
//! is a straightforward O(n^3) routine: cyclic complex Jacobi for Hermitian
//! eigenproblems, LU with partial pivoting for determinants, and a
//! pseudoinverse built from the eigendecomposition of `A* A`.

use num_complex::Complex64;
use thiserror::Error;

/// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this
/// multiple of the matrix norm.
const JACOBI_OFF_TOL: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 64;

#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("matrix is not Hermitian: max |A - A*| entry = {defect:.3e}")]
    NotHermitian { defect: f64 },
    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("unknown tolerance name `{0}`")]
    UnknownTolerance(String),
}

/// Central numeric thresholds. All comparison tolerances used by the library
/// flow from here; modules never hard-code their own cutoffs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    /// Relative tolerance for structural checks (cocycle identity, rep
    /// validation, off-block residuals, zero tests).
    pub structural_zero: f64,
    /// Tolerance for projection/adjoint identities and matrix recognition.
    pub projection: f64,
    /// Relative singular-value cutoff for rank decisions.
    pub rank_cutoff: f64,
    /// Relative tolerance for transform round trips.
    pub roundtrip: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            structural_zero: 1e-10,
            projection: 1e-9,
            rank_cutoff: 1e-8,
            roundtrip: 1e-12,
        }
    }
}

impl ToleranceConfig {
    /// Overrides a field by name, for CLI `--tol name=value` flags.
    pub fn set(&mut self, name: &str, value: f64) -> Result<(), NumericsError> {
        if !(value > 0.0 && value.is_finite()) {
            return Err(NumericsError::UnknownTolerance(format!(
                "{name} (value must be a positive finite number)"
            )));
        }
        match name {
            "structural_zero" => self.structural_zero = value,
            "projection" => self.projection = value,
            "rank_cutoff" => self.rank_cutoff = value,
            "roundtrip" => self.roundtrip = value,
            other => return Err(NumericsError::UnknownTolerance(other.to_string())),
        }
        Ok(())
    }
}

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix entry by entry. Panics on non-finite values; untrusted
    /// input goes through [`CMatrix::try_from_rows`] instead.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = CMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let z = f(i, j);
                assert!(
                    z.re.is_finite() && z.im.is_finite(),
                    "non-finite entry at ({i}, {j})"
                );
                m[(i, j)] = z;
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        CMatrix::from_fn(r, c, |i, j| rows[i][j])
    }

    /// Validating constructor for data read from files.
    pub fn try_from_rows(rows: &[Vec<Complex64>]) -> Result<Self, NumericsError> {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(NumericsError::DimensionMismatch(format!(
                    "row {i} has length {} but row 0 has length {c}",
                    row.len()
                )));
            }
            for (j, z) in row.iter().enumerate() {
                if !(z.re.is_finite() && z.im.is_finite()) {
                    return Err(NumericsError::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(CMatrix::from_fn(r, c, |i, j| rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self[(i, k)];
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += aik * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + other[(i, j)])
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - other[(i, j)])
    }

    pub fn scale(&self, c: Complex64) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, |i, j| c * self[(i, j)])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry of `A - A*`.
    pub fn hermitian_defect(&self) -> f64 {
        assert!(self.is_square());
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Extracts the square submatrix of size `size` starting at `(offset, offset)`.
    pub fn diagonal_block(&self, offset: usize, size: usize) -> CMatrix {
        CMatrix::from_fn(size, size, |i, j| self[(offset + i, offset + j)])
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Frobenius inner product `trace(A B*) = sum_ij a_ij conj(b_ij)`.
pub fn frobenius_inner(a: &CMatrix, b: &CMatrix) -> Complex64 {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    a.data.iter().zip(&b.data).map(|(x, y)| x * y.conj()).sum()
}

pub fn vec_inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
}

pub fn vec_norm(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn vec_max_abs(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn vec_max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Returns the eigenvalues in ascending order together with a
/// unitary matrix whose columns are the matching eigenvectors, so that
/// `A = U diag(lambda) U*`.
///
/// Hermiticity is checked up to `tol.structural_zero` relative to the largest
/// entry; the iteration itself runs on the symmetrised matrix `(A + A*)/2`.
pub fn hermitian_eigendecomposition(
    a: &CMatrix,
    tol: &ToleranceConfig,
) -> Result<(Vec<f64>, CMatrix), NumericsError> {
    if !a.is_square() {
        return Err(NumericsError::DimensionMismatch(format!(
            "expected square matrix, got {}x{}",
            a.rows, a.cols
        )));
    }
    let n = a.rows;
    let defect = a.hermitian_defect();
    if defect > tol.structural_zero * (1.0 + a.max_abs()) {
        return Err(NumericsError::NotHermitian { defect });
    }
    // Symmetrise so the working diagonal is exactly real.
    let mut w = CMatrix::from_fn(n, n, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
    let mut v = CMatrix::identity(n);
    let norm = w.frobenius_norm();
    let target = JACOBI_OFF_TOL * norm;

    let off = |m: &CMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[(i, j)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut converged = norm == 0.0 || off(&w) <= target;
    let mut sweeps = 0;
    while !converged {
        if sweeps >= JACOBI_MAX_SWEEPS {
            return Err(NumericsError::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = w[(p, q)];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let phase = apq / r;
                let app = w[(p, p)].re;
                let aqq = w[(q, q)].re;
                // Smaller-magnitude root of t^2 + 2 theta t - 1 = 0.
                let theta = (aqq - app) / (2.0 * r);
                let t = if theta.abs() > 1e150 {
                    // Avoids overflow in theta*theta; the rotation is negligible.
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = phase * (t * c);

                // Rows p, q of J* W.
                for j in 0..n {
                    let wp = w[(p, j)];
                    let wq = w[(q, j)];
                    w[(p, j)] = wp * c - wq * s;
                    w[(q, j)] = wp * s.conj() + wq * c;
                }
                // Columns p, q of (J* W) J, and the eigenvector accumulator.
                for i in 0..n {
                    let wp = w[(i, p)];
                    let wq = w[(i, q)];
                    w[(i, p)] = wp * c - wq * s.conj();
                    w[(i, q)] = wp * s + wq * c;
                    let vp = v[(i, p)];
                    let vq = v[(i, q)];
                    v[(i, p)] = vp * c - vq * s.conj();
                    v[(i, q)] = vp * s + vq * c;
                }
                // Annihilated entries accumulate rounding noise otherwise.
                w[(p, q)] = Complex64::new(0.0, 0.0);
                w[(q, p)] = Complex64::new(0.0, 0.0);
            }
        }
        converged = off(&w) <= target;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| w[(i, i)].re.partial_cmp(&w[(j, j)].re).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| w[(i, i)].re).collect();
    let vectors = CMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok((eigenvalues, vectors))
}

/// Determinant by LU factorisation with partial pivoting.
pub fn determinant_dense(a: &CMatrix) -> Complex64 {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let n = a.rows;
    let mut m = a.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let (pivot_row, pivot_abs) = (k..n)
            .map(|i| (i, m[(i, k)].norm()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap();
        if pivot_abs == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot_row != k {
            for j in 0..n {
                let tmp = m[(k, j)];
                m[(k, j)] = m[(pivot_row, j)];
                m[(pivot_row, j)] = tmp;
            }
            det = -det;
        }
        let pivot = m[(k, k)];
        det *= pivot;
        for i in (k + 1)..n {
            let factor = m[(i, k)] / pivot;
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in k..n {
                let mkj = m[(k, j)];
                m[(i, j)] -= factor * mkj;
            }
        }
    }
    det
}

/// One-sided (Hestenes) Jacobi: rotates the columns of `A` until they are
/// pairwise orthogonal, returning `(W, V)` with `W = A V` and `V` unitary.
/// Column norms of `W` are the singular values of `A`, computed without the
/// precision loss of forming `A* A`.
fn orthogonalize_columns(a: &CMatrix) -> (CMatrix, CMatrix) {
    let (m, n) = (a.rows(), a.cols());
    let mut w = a.clone();
    let mut v = CMatrix::identity(n);
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let mut gpp = 0.0f64;
                let mut gqq = 0.0f64;
                let mut gpq = Complex64::new(0.0, 0.0);
                for i in 0..m {
                    gpp += w[(i, p)].norm_sqr();
                    gqq += w[(i, q)].norm_sqr();
                    // (W* W)_{pq} = <col_q, col_p> in the first-argument-linear
                    // convention; the rotation formulas expect exactly this.
                    gpq += w[(i, p)].conj() * w[(i, q)];
                }
                let r = gpq.norm();
                if r <= 1e-15 * (gpp * gqq).sqrt() || r == 0.0 {
                    continue;
                }
                rotated = true;
                // Diagonalise the 2x2 Gram block [[gpp, gpq], [gpq*, gqq]].
                let phase = gpq / r;
                let theta = (gqq - gpp) / (2.0 * r);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = phase * (t * c);
                for i in 0..m {
                    let wp = w[(i, p)];
                    let wq = w[(i, q)];
                    w[(i, p)] = wp * c - wq * s.conj();
                    w[(i, q)] = wp * s + wq * c;
                }
                for i in 0..n {
                    let vp = v[(i, p)];
                    let vq = v[(i, q)];
                    v[(i, p)] = vp * c - vq * s.conj();
                    v[(i, q)] = vp * s + vq * c;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    (w, v)
}

/// Singular values in descending order, by one-sided Jacobi.
pub fn singular_values(a: &CMatrix, _tol: &ToleranceConfig) -> Vec<f64> {
    // Work on the shape with fewer columns; the nonzero spectrum agrees.
    let work = if a.rows() < a.cols() { a.adjoint() } else { a.clone() };
    let (w, _) = orthogonalize_columns(&work);
    let mut sv: Vec<f64> = (0..w.cols())
        .map(|j| (0..w.rows()).map(|i| w[(i, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|x, y| y.partial_cmp(x).unwrap());
    sv
}

/// Numerical rank: singular values below `rank_cutoff` times the largest one
/// count as zero.
pub fn rank_dense(a: &CMatrix, tol: &ToleranceConfig) -> usize {
    let sv = singular_values(a, tol);
    let largest = sv.first().copied().unwrap_or(0.0);
    if largest == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol.rank_cutoff * largest).count()
}

/// Moore-Penrose pseudoinverse from the one-sided Jacobi factorisation
/// `A V = U Sigma`: directions with singular value above the rank cutoff
/// contribute `v_i u_i^* / sigma_i`.
pub fn pseudoinverse_dense(a: &CMatrix, tol: &ToleranceConfig) -> CMatrix {
    if a.rows() < a.cols() {
        // pinv(A) = pinv(A*)*
        return pseudoinverse_dense(&a.adjoint(), tol).adjoint();
    }
    let (w, v) = orthogonalize_columns(a);
    let (m, n) = (a.rows(), a.cols());
    let sigmas: Vec<f64> = (0..n)
        .map(|j| (0..m).map(|i| w[(i, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    let sigma_max = sigmas.iter().fold(0.0f64, |acc, &s| acc.max(s));
    let mut pinv = CMatrix::zeros(n, m);
    if sigma_max == 0.0 {
        return pinv;
    }
    for (j, &sigma) in sigmas.iter().enumerate() {
        if sigma <= tol.rank_cutoff * sigma_max {
            continue;
        }
        // u_j = w_j / sigma; contribution v_j u_j^* / sigma
        for r in 0..n {
            for c in 0..m {
                pinv[(r, c)] += v[(r, j)] * w[(c, j)].conj() / (sigma * sigma);
            }
        }
    }
    pinv
}
