//! Dense complex linear algebra for the small Hilbert spaces the protocol lives in.
//!
//! Everything here is a pure function of its inputs. Operators are stored as
//! row-major `d x d` matrices; a bipartite vector on `H_A (x) H_B` stores the
//! amplitude of `|i>_A (x) |j>_B` at index `i * dim_b + j`.

use nalgebra::{DMatrix, DVector, SymmetricEigen, SVD};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type ComplexMatrix = DMatrix<Complex64>;
pub type ComplexVector = DVector<Complex64>;

/// Absolute tolerance on `max |M - M^dagger|` accepted by [`HermitianOperator::new`].
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Eigenvalues above `SUPPORT_CUTOFF * lambda_max` span the support.
pub const SUPPORT_CUTOFF: f64 = 1e-10;
/// Eigenvalues in `[-PSD_CLAMP, 0)` are treated as round-off and clamped to zero.
pub const PSD_CLAMP: f64 = 1e-10;
/// Norm tolerance for unit vectors.
pub const NORM_TOL: f64 = 1e-10;
/// Trace tolerance for density operators.
pub const DENSITY_TOL: f64 = 1e-9;

pub(crate) fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[cfg(test)]
pub(crate) fn max_abs(m: &ComplexMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max |a_ij - b_ij|`.
pub fn max_abs_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub(crate) fn real_matrix(rows: usize, cols: usize, values: &[f64]) -> ComplexMatrix {
    DMatrix::from_row_iterator(rows, cols, values.iter().map(|&v| c(v, 0.0)))
}

/// Square complex matrix asserted Hermitian.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianOperator {
    matrix: ComplexMatrix,
}

impl HermitianOperator {
    /// Validates hermiticity within [`HERMITICITY_TOL`] and stores the symmetrized matrix.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::NotSquare {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        if matrix.nrows() == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if matrix.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let residual = max_abs_diff(&matrix, &matrix.adjoint());
        if residual > HERMITICITY_TOL {
            return Err(Error::NotHermitian { residual });
        }
        Ok(Self::symmetrized(matrix))
    }

    /// Wraps a matrix that is Hermitian by construction, up to round-off.
    pub(crate) fn symmetrized(matrix: ComplexMatrix) -> Self {
        let adj = matrix.adjoint();
        Self {
            matrix: (matrix + adj).scale(0.5),
        }
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let d = values.len();
        let mut m = ComplexMatrix::zeros(d, d);
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = c(v, 0.0);
        }
        Self { matrix: m }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(dim, dim),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::zeros(dim, dim),
        }
    }

    /// `|v><v|` (not normalized).
    pub fn outer(v: &ComplexVector) -> Self {
        Self::symmetrized(v * v.adjoint())
    }

    /// Real symmetric matrix from row-major entries.
    pub fn from_real_rows(dim: usize, values: &[f64]) -> Result<Self> {
        if values.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: values.len(),
            });
        }
        Self::new(real_matrix(dim, dim, values))
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    /// `Tr(self * other)`, real part.
    pub fn trace_product(&self, other: &HermitianOperator) -> f64 {
        (&self.matrix * &other.matrix).trace().re
    }

    pub fn eig(&self) -> EigenSystem {
        hermitian_eig(self)
    }

    /// `I - self`.
    pub fn complement(&self) -> Self {
        Self::symmetrized(ComplexMatrix::identity(self.dim(), self.dim()) - &self.matrix)
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            matrix: self.matrix.scale(factor),
        }
    }

    /// `X self X^dagger`.
    pub fn conjugate_by(&self, x: &ComplexMatrix) -> Self {
        Self::symmetrized(x * &self.matrix * x.adjoint())
    }

    /// `<v|self|v>`, real part.
    pub fn expectation(&self, v: &ComplexVector) -> f64 {
        v.dotc(&(&self.matrix * v)).re
    }
}

/// Eigenvalues in ascending order with matching orthonormal eigenvector columns.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl EigenSystem {
    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().expect("dim >= 1")
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn eigenvector(&self, index: usize) -> ComplexVector {
        self.eigenvectors.column(index).into_owned()
    }

    /// `V f(Lambda) V^dagger`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> HermitianOperator {
        self.map_indexed(|_, x| f(x))
    }

    /// Like [`EigenSystem::map`] with the eigenvalue's index passed along.
    pub fn map_indexed(&self, f: impl Fn(usize, f64) -> f64) -> HermitianOperator {
        let d = self.eigenvalues.len();
        let mut scaled = self.eigenvectors.clone();
        for (j, &lambda) in self.eigenvalues.iter().enumerate() {
            let fj = f(j, lambda);
            for i in 0..d {
                scaled[(i, j)] *= fj;
            }
        }
        HermitianOperator::symmetrized(scaled * self.eigenvectors.adjoint())
    }

    pub fn reconstruct(&self) -> HermitianOperator {
        self.map(|x| x)
    }
}

/// Eigendecomposition of a Hermitian operator, eigenvalues ascending.
pub fn hermitian_eig(h: &HermitianOperator) -> EigenSystem {
    let eig = SymmetricEigen::new(h.matrix.clone());
    let d = h.dim();
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .partial_cmp(&eig.eigenvalues[b])
            .expect("finite eigenvalues")
            .then(a.cmp(&b))
    });
    let eigenvalues = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut eigenvectors = ComplexMatrix::zeros(d, d);
    for (col, &k) in order.iter().enumerate() {
        eigenvectors.set_column(col, &eig.eigenvectors.column(k));
    }
    EigenSystem {
        eigenvalues,
        eigenvectors,
    }
}

fn checked_psd_eig(p: &HermitianOperator) -> Result<EigenSystem> {
    let eig = hermitian_eig(p);
    let min = eig.min_eigenvalue();
    if min < -PSD_CLAMP {
        return Err(Error::NotPsd {
            min_eigenvalue: min,
        });
    }
    Ok(eig)
}

/// Succeeds iff every eigenvalue is at least `-PSD_CLAMP`.
pub fn check_psd(p: &HermitianOperator) -> Result<()> {
    checked_psd_eig(p).map(|_| ())
}

/// Principal square root of a PSD operator.
pub fn psd_sqrt(p: &HermitianOperator) -> Result<HermitianOperator> {
    Ok(checked_psd_eig(p)?.map(|x| x.max(0.0).sqrt()))
}

fn support_mask(eig: &EigenSystem, relative_cutoff: f64) -> Vec<bool> {
    let lambda_max = eig.max_eigenvalue();
    eig.eigenvalues
        .iter()
        .map(|&x| lambda_max > 0.0 && x > relative_cutoff * lambda_max)
        .collect()
}

/// Projector onto the span of eigenvectors with eigenvalue above
/// `relative_cutoff * lambda_max`.
pub fn support_projector(p: &HermitianOperator, relative_cutoff: f64) -> Result<HermitianOperator> {
    let eig = checked_psd_eig(p)?;
    let mask = support_mask(&eig, relative_cutoff);
    Ok(eig.map_indexed(|k, _| if mask[k] { 1.0 } else { 0.0 }))
}

/// Inverse on the support (Moore-Penrose pseudo-inverse of a PSD operator).
pub fn pinv_on_support(p: &HermitianOperator) -> Result<HermitianOperator> {
    let eig = checked_psd_eig(p)?;
    let mask = support_mask(&eig, SUPPORT_CUTOFF);
    Ok(eig.map_indexed(|k, x| if mask[k] { 1.0 / x } else { 0.0 }))
}

/// Largest eigenvalue.
pub fn lambda_max(h: &HermitianOperator) -> f64 {
    hermitian_eig(h).max_eigenvalue()
}

/// `Tr sqrt(sqrt(tau) omega sqrt(tau))`. Subnormalized arguments are allowed.
pub fn fidelity(omega: &HermitianOperator, tau: &HermitianOperator) -> Result<f64> {
    if omega.dim() != tau.dim() {
        return Err(Error::DimensionMismatch {
            expected: omega.dim(),
            found: tau.dim(),
        });
    }
    for op in [omega, tau] {
        let trace = op.trace();
        if trace > 1.0 + DENSITY_TOL {
            return Err(Error::TraceTooLarge { trace });
        }
    }
    check_psd(omega)?;
    let sqrt_tau = psd_sqrt(tau)?;
    let inner = omega.conjugate_by(sqrt_tau.matrix());
    // inner is PSD by construction; any negative eigenvalue is round-off.
    Ok(inner
        .eig()
        .eigenvalues
        .iter()
        .map(|&x| x.max(0.0).sqrt())
        .sum())
}

/// Trace norm `Tr|X| = sum of singular values`.
pub fn trace_norm(x: &ComplexMatrix) -> f64 {
    SVD::new(x.clone(), false, false).singular_values.iter().sum()
}

/// Nearest unitary in Frobenius norm, via Newton iteration `X <- (X + X^-dagger) / 2`.
///
/// Returns `None` if an iterate becomes singular.
pub fn polar_unitary(x: &ComplexMatrix) -> Option<ComplexMatrix> {
    let mut u = x.clone();
    for _ in 0..100 {
        let inv = u.clone().try_inverse()?;
        let next = (&u + inv.adjoint()).scale(0.5);
        let delta = max_abs_diff(&next, &u);
        u = next;
        if delta < 1e-15 {
            break;
        }
    }
    Some(u)
}

/// `X (X^dagger X)^(-1/2)`: the isometry nearest to a full-column-rank `X`.
///
/// Returns `None` if `X^dagger X` is numerically singular.
pub fn nearest_isometry(x: &ComplexMatrix) -> Option<ComplexMatrix> {
    let gram = HermitianOperator::symmetrized(x.adjoint() * x);
    let eig = gram.eig();
    if eig.min_eigenvalue() <= 1e-14 * eig.max_eigenvalue().max(1e-300) {
        return None;
    }
    Some(x * eig.map(|v| 1.0 / v.sqrt()).matrix())
}

/// `max |U^dagger U - I|`.
pub fn unitarity_residual(u: &ComplexMatrix) -> f64 {
    let n = u.ncols();
    max_abs_diff(&(u.adjoint() * u), &ComplexMatrix::identity(n, n))
}

/// Unnormalized vector in `H_A (x) H_B`.
#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteVector {
    dim_a: usize,
    dim_b: usize,
    amplitudes: ComplexVector,
}

impl BipartiteVector {
    pub fn new(dim_a: usize, dim_b: usize, amplitudes: ComplexVector) -> Result<Self> {
        if dim_a == 0 || dim_b == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if amplitudes.len() != dim_a * dim_b {
            return Err(Error::DimensionMismatch {
                expected: dim_a * dim_b,
                found: amplitudes.len(),
            });
        }
        Ok(Self {
            dim_a,
            dim_b,
            amplitudes,
        })
    }

    /// Builds from the `dim_a x dim_b` coefficient matrix `Psi[i, j]`.
    pub fn from_matrix(psi: &ComplexMatrix) -> Self {
        let (dim_a, dim_b) = psi.shape();
        let amplitudes = DVector::from_iterator(
            dim_a * dim_b,
            (0..dim_a).flat_map(|i| (0..dim_b).map(move |j| psi[(i, j)])),
        );
        Self {
            dim_a,
            dim_b,
            amplitudes,
        }
    }

    /// `|a> (x) |b>`.
    pub fn product(a: &ComplexVector, b: &ComplexVector) -> Self {
        Self::from_matrix(&(a * b.transpose()))
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn amplitudes(&self) -> &ComplexVector {
        &self.amplitudes
    }

    /// Coefficient matrix `Psi[i, j]` of `|i>_A (x) |j>_B`.
    pub fn coefficient_matrix(&self) -> ComplexMatrix {
        DMatrix::from_row_slice(self.dim_a, self.dim_b, self.amplitudes.as_slice())
    }

    pub fn norm_squared(&self) -> f64 {
        self.amplitudes.norm_squared()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &BipartiteVector) -> Complex64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            amplitudes: self.amplitudes.map(|z| z * factor),
            ..self.clone()
        }
    }

    /// `(I (x) X)|self>`.
    pub fn apply_on_b(&self, x: &ComplexMatrix) -> Result<Self> {
        if x.nrows() != self.dim_b || x.ncols() != self.dim_b {
            return Err(Error::DimensionMismatch {
                expected: self.dim_b,
                found: x.nrows().max(x.ncols()),
            });
        }
        Ok(Self::from_matrix(&(self.coefficient_matrix() * x.transpose())))
    }

    /// `(X (x) I)|self>`.
    pub fn apply_on_a(&self, x: &ComplexMatrix) -> Result<Self> {
        if x.nrows() != self.dim_a || x.ncols() != self.dim_a {
            return Err(Error::DimensionMismatch {
                expected: self.dim_a,
                found: x.nrows().max(x.ncols()),
            });
        }
        Ok(Self::from_matrix(&(x * self.coefficient_matrix())))
    }

    /// `Tr_A |self><self|`, an operator on B.
    pub fn partial_trace_a(&self) -> HermitianOperator {
        let psi = self.coefficient_matrix();
        HermitianOperator::symmetrized((psi.adjoint() * psi).transpose())
    }

    /// `Tr_B |self><self|`, an operator on A.
    pub fn partial_trace_b(&self) -> HermitianOperator {
        let psi = self.coefficient_matrix();
        HermitianOperator::symmetrized(&psi * psi.adjoint())
    }

    pub fn normalized(&self) -> Result<BipartitePureState> {
        let n = self.norm_squared().sqrt();
        if n <= f64::MIN_POSITIVE || !n.is_finite() {
            return Err(Error::NotNormalized { norm: n });
        }
        Ok(BipartitePureState(self.scale(c(1.0 / n, 0.0))))
    }
}

/// Unit vector in `H_A (x) H_B`.
#[derive(Clone, Debug, PartialEq)]
pub struct BipartitePureState(BipartiteVector);

impl BipartitePureState {
    /// Accepts a vector whose norm is 1 within [`NORM_TOL`].
    pub fn new(vector: BipartiteVector) -> Result<Self> {
        let norm = vector.norm_squared().sqrt();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self(vector))
    }

    pub fn from_amplitudes(dim_a: usize, dim_b: usize, amplitudes: &[Complex64]) -> Result<Self> {
        Self::new(BipartiteVector::new(
            dim_a,
            dim_b,
            DVector::from_column_slice(amplitudes),
        )?)
    }

    pub fn vector(&self) -> &BipartiteVector {
        &self.0
    }

    pub fn into_vector(self) -> BipartiteVector {
        self.0
    }
}

impl std::ops::Deref for BipartitePureState {
    type Target = BipartiteVector;
    fn deref(&self) -> &BipartiteVector {
        &self.0
    }
}

pub fn partial_trace_a(state: &BipartitePureState) -> HermitianOperator {
    state.partial_trace_a()
}

pub fn partial_trace_b(state: &BipartitePureState) -> HermitianOperator {
    state.partial_trace_b()
}

pub fn apply_on_b(x: &ComplexMatrix, phi: &BipartiteVector) -> Result<BipartiteVector> {
    phi.apply_on_b(x)
}

/// `|phi> = sum_j s_j |e_j> (x) |f_j>` with `s_j` descending and strictly positive.
#[derive(Clone, Debug)]
pub struct SchmidtDecomposition {
    pub coefficients: Vec<f64>,
    pub basis_a: Vec<ComplexVector>,
    pub basis_b: Vec<ComplexVector>,
}

impl SchmidtDecomposition {
    pub fn rank(&self) -> usize {
        self.coefficients.len()
    }

    pub fn reconstruct(&self) -> BipartiteVector {
        let dim_a = self.basis_a[0].len();
        let dim_b = self.basis_b[0].len();
        let mut psi = ComplexMatrix::zeros(dim_a, dim_b);
        for ((s, e), f) in self.coefficients.iter().zip(&self.basis_a).zip(&self.basis_b) {
            psi += (e * f.transpose()).scale(*s);
        }
        BipartiteVector::from_matrix(&psi)
    }

    /// Columns `|e_j>`.
    pub fn basis_a_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_columns(&self.basis_a)
    }

    /// Columns `|f_j>`.
    pub fn basis_b_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_columns(&self.basis_b)
    }
}

/// Schmidt decomposition via the SVD of the coefficient matrix.
///
/// Coefficients at or below `SUPPORT_CUTOFF * s_max` are dropped.
pub fn schmidt_decompose(phi: &BipartitePureState) -> SchmidtDecomposition {
    let svd = SVD::new(phi.coefficient_matrix(), true, true);
    let u = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested V^dagger");
    let s_max = svd.singular_values.max();
    let mut decomposition = SchmidtDecomposition {
        coefficients: Vec::new(),
        basis_a: Vec::new(),
        basis_b: Vec::new(),
    };
    for (j, &s) in svd.singular_values.iter().enumerate() {
        if s > SUPPORT_CUTOFF * s_max {
            decomposition.coefficients.push(s);
            decomposition.basis_a.push(u.column(j).into_owned());
            // Psi = U S V^dagger, so the B-side vector of term j is row j of V^dagger.
            decomposition.basis_b.push(v_t.row(j).transpose());
        }
    }
    decomposition
}

/// Validates a density operator: Hermitian, PSD within [`PSD_CLAMP`], unit trace within [`DENSITY_TOL`].
pub fn check_density(rho: &HermitianOperator) -> Result<()> {
    let min = rho.eig().min_eigenvalue();
    if min < -PSD_CLAMP {
        return Err(Error::NotDensity {
            invariant: "positive semidefinite",
            residual: -min,
        });
    }
    let residual = (rho.trace() - 1.0).abs();
    if residual > DENSITY_TOL {
        return Err(Error::NotDensity {
            invariant: "unit trace",
            residual,
        });
    }
    Ok(())
}

/// `sum_i sqrt(lambda_i) |i>_A (x) |u_i>_B` over the descending eigensystem of `rho`.
pub fn canonical_purification(rho: &HermitianOperator) -> Result<BipartitePureState> {
    check_density(rho)?;
    let eig = rho.eig();
    let d = rho.dim();
    let mut psi = ComplexMatrix::zeros(d, d);
    for (row, k) in (0..d).rev().enumerate() {
        let weight = eig.eigenvalues[k].max(0.0).sqrt();
        for j in 0..d {
            psi[(row, j)] = eig.eigenvectors[(j, k)] * weight;
        }
    }
    BipartiteVector::from_matrix(&psi).normalized()
}

/// The operator `D` on A with `<e_k|D|e_j> = <f_k|E|f_j>` in the Schmidt bases of `phi`.
pub fn schmidt_equivalent(e: &HermitianOperator, phi: &BipartitePureState) -> Result<ComplexMatrix> {
    if e.dim() != phi.dim_b() {
        return Err(Error::DimensionMismatch {
            expected: phi.dim_b(),
            found: e.dim(),
        });
    }
    let schmidt = schmidt_decompose(phi);
    let w = schmidt.basis_a_matrix();
    let f = schmidt.basis_b_matrix();
    let g = f.adjoint() * e.matrix() * &f;
    Ok(&w * g * w.adjoint())
}

/// Both sides of `Tr_B((I (x) sqrt E)|phi><phi|(I (x) sqrt E)) = sqrt(omega) D^T sqrt(omega)`,
/// with the transpose taken in the eigenbasis of `omega = Tr_B |phi><phi|`.
pub fn lemma_lhs_rhs(
    phi: &BipartitePureState,
    e: &HermitianOperator,
) -> Result<(HermitianOperator, HermitianOperator)> {
    if e.dim() != phi.dim_b() {
        return Err(Error::DimensionMismatch {
            expected: phi.dim_b(),
            found: e.dim(),
        });
    }
    let sqrt_e = psd_sqrt(e)?;
    let lhs = phi.apply_on_b(sqrt_e.matrix())?.partial_trace_b();

    let omega = phi.partial_trace_b();
    let sqrt_omega = psd_sqrt(&omega)?;
    let schmidt = schmidt_decompose(phi);
    let w = schmidt.basis_a_matrix();
    let f = schmidt.basis_b_matrix();
    // Matrix of D in the e-basis equals the matrix of E in the f-basis.
    let d_in_basis = f.adjoint() * e.matrix() * &f;
    let d_transposed = &w * d_in_basis.transpose() * w.adjoint();
    let rhs = HermitianOperator::symmetrized(sqrt_omega.matrix() * d_transposed * sqrt_omega.matrix());
    Ok((lhs, rhs))
}
