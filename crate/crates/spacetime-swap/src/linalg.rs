//! Dense complex matrices, Hermitian eigendecomposition, and the
//! block-diagonal Sylvester solver everything else is built on.
//!
//! All operators in this crate are square, dense and desk-scale (side ≤ 256),
//! so a single heap-allocated matrix type is enough. The bipartite block
//! view `X = Σ E_ij ⊗ X_ij` is provided by [`BlockStructure`]: block (i,j)
//! of a (d·n)×(d·n) matrix is the n×n submatrix starting at row i·n and
//! column j·n.

use nalgebra::DMatrix;
use num_complex::Complex;

use crate::error::{Error, Result};

/// Complex scalar used throughout.
pub type Complex64 = Complex<f64>;

/// Dense complex matrix with value semantics.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    data: DMatrix<Complex64>,
}

impl ComplexMatrix {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            data: DMatrix::zeros(rows, cols),
        }
    }

    /// Identity of side `n`.
    pub fn identity(n: usize) -> Self {
        Self {
            data: DMatrix::identity(n, n),
        }
    }

    /// Build entrywise from a closure over (row, col).
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        Self {
            data: DMatrix::from_fn(rows, cols, f),
        }
    }

    /// Build from row-major nested slices of complex entries.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self::from_fn(nrows, ncols, |i, j| rows[i][j]))
    }

    /// Build from row-major real entries (imaginary parts zero).
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let complex: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&complex)
    }

    /// Diagonal matrix from real entries.
    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.data.nrows()
    }

    pub fn cols(&self) -> usize {
        self.data.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[(row, col)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[(row, col)] = value;
    }

    /// True when every entry is finite (no NaN/Inf in either component).
    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Conjugate transpose M†.
    pub fn adjoint(&self) -> Self {
        Self {
            data: self.data.adjoint(),
        }
    }

    /// Plain transpose Mᵀ.
    pub fn transpose(&self) -> Self {
        Self {
            data: self.data.transpose(),
        }
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Self {
        Self {
            data: self.data.map(|z| z.conj()),
        }
    }

    pub fn trace(&self) -> Complex64 {
        self.data.trace()
    }

    /// Frobenius norm ‖M‖_F.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.norm()
    }

    /// ‖M − M†‖_F, zero for Hermitian matrices.
    pub fn hermiticity_residual(&self) -> f64 {
        (&self.data - self.data.adjoint()).norm()
    }

    /// Hermitian within `tol` relative to the matrix norm.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.hermiticity_residual() <= tol * self.frobenius_norm().max(1.0)
    }

    /// Kronecker product, left factor slow: (A ⊗ B)[(i·n+k),(j·n+l)] = A[i,j]·B[k,l].
    pub fn kron(&self, other: &Self) -> Self {
        Self {
            data: self.data.kronecker(&other.data),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            data: self.data.map(|z| z * factor),
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub(crate) fn as_na(&self) -> &DMatrix<Complex64> {
        &self.data
    }

    pub(crate) fn from_na(data: DMatrix<Complex64>) -> Self {
        Self { data }
    }
}

impl std::ops::Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            data: &self.data + &rhs.data,
        }
    }
}

impl std::ops::Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            data: &self.data - &rhs.data,
        }
    }
}

impl std::ops::Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            data: &self.data * &rhs.data,
        }
    }
}

impl std::ops::Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        ComplexMatrix { data: -&self.data }
    }
}

/// ‖A − B‖_F. Zero iff the matrices are equal.
pub fn frobenius_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "{}×{} vs {}×{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok((a - b).frobenius_norm())
}

/// Bipartite index bookkeeping: side = dimA · dimB, block (i,j) is the
/// dimB×dimB submatrix X_ij in X = Σ E_ij ⊗ X_ij.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub dim_a: usize,
    pub dim_b: usize,
}

impl BlockStructure {
    pub fn new(dim_a: usize, dim_b: usize) -> Self {
        Self { dim_a, dim_b }
    }

    pub fn total(&self) -> usize {
        self.dim_a * self.dim_b
    }

    fn check_side(&self, x: &ComplexMatrix) -> Result<()> {
        if !x.is_square() || x.rows() != self.total() {
            return Err(Error::DimensionMismatch(format!(
                "expected square side {} = {}·{}, got {}×{}",
                self.total(),
                self.dim_a,
                self.dim_b,
                x.rows(),
                x.cols()
            )));
        }
        Ok(())
    }

    /// Extract block X_ij.
    pub fn block(&self, x: &ComplexMatrix, i: usize, j: usize) -> Result<ComplexMatrix> {
        self.check_side(x)?;
        if i >= self.dim_a || j >= self.dim_a {
            return Err(Error::DimensionMismatch(format!(
                "block index ({i},{j}) outside {}×{} grid",
                self.dim_a, self.dim_a
            )));
        }
        let n = self.dim_b;
        Ok(ComplexMatrix::from_fn(n, n, |k, l| {
            x.get(i * n + k, j * n + l)
        }))
    }

    /// Assemble Σ E_ij ⊗ f(i,j) from a block generator. Each block must be
    /// dimB×dimB.
    pub fn assemble(&self, f: impl Fn(usize, usize) -> ComplexMatrix) -> ComplexMatrix {
        let n = self.dim_b;
        let mut out = ComplexMatrix::zeros(self.total(), self.total());
        for i in 0..self.dim_a {
            for j in 0..self.dim_a {
                let blk = f(i, j);
                assert_eq!(
                    (blk.rows(), blk.cols()),
                    (n, n),
                    "assemble: block ({i},{j}) has wrong shape"
                );
                for k in 0..n {
                    for l in 0..n {
                        out.set(i * n + k, j * n + l, blk.get(k, l));
                    }
                }
            }
        }
        out
    }
}

/// Eigendecomposition of a Hermitian matrix: M = U · diag(λ) · U†, with the
/// eigenvalues sorted ascending and the columns of `unitary` the matching
/// eigenvectors.
#[derive(Clone, Debug)]
pub struct EigDecomposition {
    pub eigenvalues: Vec<f64>,
    pub unitary: ComplexMatrix,
}

impl EigDecomposition {
    /// U · diag(λ) · U†.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let lambda = ComplexMatrix::from_real_diagonal(&self.eigenvalues);
        &(&self.unitary * &lambda) * &self.unitary.adjoint()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }
}

/// Eigendecompose a Hermitian matrix. Fails with [`Error::NotHermitian`] if
/// ‖M − M†‖_F > tol_herm·‖M‖_F; the input is symmetrized before the solve so
/// tolerated asymmetry cannot leak into the output.
pub fn hermitian_eig(m: &ComplexMatrix, tol_herm: f64) -> Result<EigDecomposition> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigendecomposition needs a square matrix, got {}×{}",
            m.rows(),
            m.cols()
        )));
    }
    let residual = m.hermiticity_residual();
    let threshold = tol_herm * m.frobenius_norm();
    if residual > threshold {
        return Err(Error::NotHermitian {
            residual,
            tolerance: threshold,
        });
    }
    let symmetrized = (m.as_na() + m.as_na().adjoint()).map(|z| z * 0.5);
    let eig = symmetrized.symmetric_eigen();
    let n = m.rows();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let eigenvalues: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let unitary = DMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);

    Ok(EigDecomposition {
        eigenvalues,
        unitary: ComplexMatrix::from_na(unitary),
    })
}

/// True iff the smallest eigenvalue is ≥ −tol·max(1, ‖M‖_F).
pub fn is_psd(m: &ComplexMatrix, tol: f64) -> Result<bool> {
    let eig = hermitian_eig(m, crate::DEFAULT_TOL_HERM)?;
    Ok(eig.min_eigenvalue() >= -tol * m.frobenius_norm().max(1.0))
}

/// Solve (Λ⊗1)Z + Z(Λ⊗1) = D blockwise for diagonal Λ = diag(λ) ≥ 0 and
/// Hermitian PSD block matrix D.
///
/// Blocks with λ_i + λ_j above the zero threshold get D_ij/(λ_i+λ_j). On the
/// null diagonal (λ_i ≈ 0) the solution is gauge freedom; the canonical
/// choice here is Z_ii = 1/n, which is PSD with unit trace. Null off-diagonal
/// blocks are zero, and the input must carry no data there — positivity of D
/// forces those blocks to vanish, so a non-zero one means the system is
/// inconsistent.
pub fn solve_diagonal_sylvester(
    lambdas: &[f64],
    d_matrix: &ComplexMatrix,
    bs: BlockStructure,
    tol_zero: f64,
) -> Result<ComplexMatrix> {
    if lambdas.len() != bs.dim_a {
        return Err(Error::DimensionMismatch(format!(
            "{} eigenvalues for a {}-block structure",
            lambdas.len(),
            bs.dim_a
        )));
    }
    bs.check_side(d_matrix)?;

    // Zero decision is relative to the overall eigenvalue scale.
    let scale: f64 = lambdas.iter().sum::<f64>().max(1.0);
    let threshold = tol_zero * scale;
    let mut lam = Vec::with_capacity(lambdas.len());
    for &l in lambdas {
        if l < -threshold {
            return Err(Error::InvalidState(format!(
                "eigenvalue {l:.3e} below the clamping threshold −{threshold:.3e}"
            )));
        }
        lam.push(l.max(0.0));
    }

    let n = bs.dim_b;
    let zero_block_tol = tol_zero * d_matrix.frobenius_norm().max(1.0);
    for i in 0..bs.dim_a {
        for j in 0..bs.dim_a {
            if lam[i] + lam[j] <= threshold {
                let norm = bs.block(d_matrix, i, j)?.frobenius_norm();
                if norm > zero_block_tol {
                    return Err(Error::InconsistentSystem {
                        row: i,
                        col: j,
                        norm,
                    });
                }
            }
        }
    }

    Ok(bs.assemble(|i, j| {
        let sum = lam[i] + lam[j];
        if sum > threshold {
            bs.block(d_matrix, i, j)
                .expect("validated above")
                .scale_real(1.0 / sum)
        } else if i == j {
            ComplexMatrix::identity(n).scale_real(1.0 / n as f64)
        } else {
            ComplexMatrix::zeros(n, n)
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_TOL_ZERO;
    use nalgebra::DVector;

    const C0: Complex64 = Complex64::new(0.0, 0.0);
    const C1: Complex64 = Complex64::new(1.0, 0.0);

    fn sigma_x() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap()
    }

    fn sigma_y() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[
            vec![C0, Complex64::new(0.0, -1.0)],
            vec![Complex64::new(0.0, 1.0), C0],
        ])
        .unwrap()
    }

    fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::from_real_diagonal(&[1.0, -1.0])
    }

    fn swap_2x2() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[
            vec![1.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 1.0, 0.0],
            vec![0.0, 1.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, 1.0],
        ])
        .unwrap()
    }

    #[test]
    fn eig_of_identity_is_all_ones() {
        let eig = hermitian_eig(&ComplexMatrix::identity(2), 1e-12).unwrap();
        assert!((eig.eigenvalues[0] - 1.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eig_of_sigma_z_is_plus_minus_one_ascending() {
        let eig = hermitian_eig(&sigma_z(), 1e-12).unwrap();
        assert!((eig.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eig_of_hadamard_direction_is_plus_minus_one() {
        // (σ_x + σ_z)/√2 has characteristic polynomial λ² − 1.
        let m = (&sigma_x() + &sigma_z()).scale_real(1.0 / 2f64.sqrt());
        let eig = hermitian_eig(&m, 1e-12).unwrap();
        assert!((eig.eigenvalues[0] + 1.0).abs() < 1e-12);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-12);
        let recon_err = frobenius_distance(&eig.reconstruct(), &m).unwrap();
        assert!(recon_err < 1e-12);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(
            hermitian_eig(&m, 1e-12),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn eig_unitarity_and_reconstruction_on_random_hermitian() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in [2usize, 3, 5, 8] {
            let g = crate::random::complex_gaussian(n, n, &mut rng);
            let h = (&g + &g.adjoint()).scale_real(0.5);
            let eig = hermitian_eig(&h, 1e-10).unwrap();
            let uu = &eig.unitary.adjoint() * &eig.unitary;
            assert!(frobenius_distance(&uu, &ComplexMatrix::identity(n)).unwrap() < 1e-10);
            let err = frobenius_distance(&eig.reconstruct(), &h).unwrap();
            assert!(err <= 1e-12 * h.frobenius_norm().max(1.0));
            for w in eig.eigenvalues.windows(2) {
                assert!(w[0] <= w[1]);
            }
        }
    }

    #[test]
    fn psd_checks_match_the_spectrum() {
        assert!(is_psd(&ComplexMatrix::zeros(2, 2), DEFAULT_TOL_ZERO).unwrap());
        let neg = ComplexMatrix::from_real_diagonal(&[1.0, -0.5]);
        assert!(!is_psd(&neg, DEFAULT_TOL_ZERO).unwrap());
        // Bell projector |Φ+⟩⟨Φ+| is rank one with spectrum {1,0,0,0}.
        let bell = ComplexMatrix::from_real_rows(&[
            vec![0.5, 0.0, 0.0, 0.5],
            vec![0.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, 0.0],
            vec![0.5, 0.0, 0.0, 0.5],
        ])
        .unwrap();
        assert!(is_psd(&bell, DEFAULT_TOL_ZERO).unwrap());
    }

    #[test]
    fn block_of_kron_factorizes() {
        let a = ComplexMatrix::from_rows(&[
            vec![Complex64::new(1.0, 2.0), Complex64::new(3.0, -1.0)],
            vec![Complex64::new(0.5, 0.0), Complex64::new(-2.0, 0.25)],
        ])
        .unwrap();
        let b = (&sigma_x() + &sigma_y().scale_real(0.3)).scale_real(1.7);
        let bs = BlockStructure::new(2, 2);
        let x = a.kron(&b);
        for i in 0..2 {
            for j in 0..2 {
                let blk = bs.block(&x, i, j).unwrap();
                let expected = b.scale(a.get(i, j));
                assert!(frobenius_distance(&blk, &expected).unwrap() < 1e-14);
            }
        }
    }

    #[test]
    fn block_of_identity_off_diagonal_is_zero() {
        let bs = BlockStructure::new(2, 2);
        let blk = bs.block(&ComplexMatrix::identity(4), 0, 1).unwrap();
        assert_eq!(blk.frobenius_norm(), 0.0);
    }

    #[test]
    fn block_of_swap_is_matrix_unit() {
        // SWAP = Σ E_ij ⊗ E_ji, so block (0,1) is E_10.
        let bs = BlockStructure::new(2, 2);
        let blk = bs.block(&swap_2x2(), 0, 1).unwrap();
        let e10 = ComplexMatrix::from_real_rows(&[vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
        assert!(frobenius_distance(&blk, &e10).unwrap() < 1e-15);
    }

    #[test]
    fn blocks_reassemble_exactly() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let bs = BlockStructure::new(3, 2);
        let x = crate::random::complex_gaussian(6, 6, &mut rng);
        let rebuilt = bs.assemble(|i, j| bs.block(&x, i, j).unwrap());
        assert_eq!(rebuilt, x);
    }

    #[test]
    fn frobenius_distance_basics() {
        let m = sigma_x();
        assert_eq!(frobenius_distance(&m, &m).unwrap(), 0.0);
        let d = frobenius_distance(&ComplexMatrix::identity(2), &ComplexMatrix::zeros(2, 2))
            .unwrap();
        assert!((d - 2f64.sqrt()).abs() < 1e-15);
        // Entrywise |σ_x − σ_y|² sums to 4.
        let d = frobenius_distance(&sigma_x(), &sigma_y()).unwrap();
        assert!((d - 2.0).abs() < 1e-15);
        assert!(matches!(
            frobenius_distance(&sigma_x(), &ComplexMatrix::identity(3)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn sylvester_all_unit_eigenvalues_halves_the_input() {
        let bs = BlockStructure::new(2, 2);
        let d = ComplexMatrix::identity(4).scale_real(2.0);
        let z = solve_diagonal_sylvester(&[1.0, 1.0], &d, bs, DEFAULT_TOL_ZERO).unwrap();
        assert!(frobenius_distance(&z, &ComplexMatrix::identity(4)).unwrap() < 1e-14);
    }

    #[test]
    fn sylvester_inserts_gauge_block_on_null_diagonal() {
        let bs = BlockStructure::new(2, 2);
        let d00 = ComplexMatrix::from_real_rows(&[vec![1.5, 0.0], vec![0.0, 0.5]]).unwrap();
        let d = bs.assemble(|i, j| {
            if (i, j) == (0, 0) {
                d00.clone()
            } else {
                ComplexMatrix::zeros(2, 2)
            }
        });
        let z = solve_diagonal_sylvester(&[1.0, 0.0], &d, bs, DEFAULT_TOL_ZERO).unwrap();
        let expected = bs.assemble(|i, j| match (i, j) {
            (0, 0) => d00.scale_real(0.5),
            (1, 1) => ComplexMatrix::identity(2).scale_real(0.5),
            _ => ComplexMatrix::zeros(2, 2),
        });
        assert!(frobenius_distance(&z, &expected).unwrap() < 1e-14);
    }

    #[test]
    fn sylvester_rejects_data_on_null_blocks() {
        let bs = BlockStructure::new(2, 2);
        let d = bs.assemble(|i, j| {
            if (i, j) == (1, 1) {
                ComplexMatrix::identity(2)
            } else {
                ComplexMatrix::zeros(2, 2)
            }
        });
        assert!(matches!(
            solve_diagonal_sylvester(&[1.0, 0.0], &d, bs, DEFAULT_TOL_ZERO),
            Err(Error::InconsistentSystem { row: 1, col: 1, .. })
        ));
    }

    /// Brute-force oracle: solve the vectorized d²n² × d²n² linear system
    /// [(Λ⊗1)⊗1 + 1⊗(Λ⊗1)ᵀ] vec(Z) = vec(D) with a dense LU.
    fn sylvester_oracle(lambdas: &[f64], d_matrix: &ComplexMatrix, bs: BlockStructure) -> ComplexMatrix {
        let side = bs.total();
        let lam_kron = ComplexMatrix::from_real_diagonal(lambdas).kron(&ComplexMatrix::identity(bs.dim_b));
        let eye = ComplexMatrix::identity(side);
        // Column-major vec: vec(MZ) = (1⊗M)vec(Z), vec(ZM) = (Mᵀ⊗1)vec(Z).
        let big = &eye.kron(&lam_kron) + &lam_kron.transpose().kron(&eye);
        let rhs = DVector::from_fn(side * side, |k, _| {
            d_matrix.get(k % side, k / side)
        });
        let sol = big
            .as_na()
            .clone()
            .lu()
            .solve(&rhs)
            .expect("full-rank Sylvester system");
        ComplexMatrix::from_fn(side, side, |i, j| sol[j * side + i])
    }

    #[test]
    fn sylvester_matches_dense_oracle_on_random_full_rank_systems() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let bs = BlockStructure::new(2, 2);
        for _ in 0..20 {
            let lambdas: Vec<f64> = (0..2).map(|_| rng.random_range(0.05..2.0)).collect();
            let g = crate::random::complex_gaussian(4, 4, &mut rng);
            let d = &g * &g.adjoint();
            let z = solve_diagonal_sylvester(&lambdas, &d, bs, DEFAULT_TOL_ZERO).unwrap();
            let z_oracle = sylvester_oracle(&lambdas, &d, bs);
            assert!(frobenius_distance(&z, &z_oracle).unwrap() < 1e-10);
        }
    }

    #[test]
    fn sylvester_solution_is_psd_and_satisfies_the_equation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for (da, db) in [(2usize, 2usize), (3, 2), (2, 3)] {
            let bs = BlockStructure::new(da, db);
            for _ in 0..10 {
                let lambdas: Vec<f64> = (0..da).map(|_| rng.random_range(0.01..1.0)).collect();
                let g = crate::random::complex_gaussian(bs.total(), bs.total(), &mut rng);
                let d = &g * &g.adjoint();
                let z = solve_diagonal_sylvester(&lambdas, &d, bs, DEFAULT_TOL_ZERO).unwrap();
                assert!(is_psd(&z, 1e-9).unwrap());
                let lam_kron = ComplexMatrix::from_real_diagonal(&lambdas)
                    .kron(&ComplexMatrix::identity(db));
                let resid = &(&(&lam_kron * &z) + &(&z * &lam_kron)) - &d;
                assert!(resid.frobenius_norm() <= 1e-10 * d.frobenius_norm());
            }
        }
    }

    #[test]
    fn scalar_constants_are_what_they_claim() {
        assert_eq!(C1, Complex64::new(1.0, 0.0));
        let sx2 = &sigma_x() * &sigma_x();
        assert!(frobenius_distance(&sx2, &ComplexMatrix::identity(2)).unwrap() < 1e-15);
    }
}
