//! Quantum states, bipartite operators and dichotomic observables.
//!
//! Conventions: computational basis |0⟩ = (1,0), |1⟩ = (0,1); tensor products
//! are A-first (the left factor carries the slow index), matching the block
//! view `X = Σ E_ij ⊗ X_ij` of [`BlockStructure`]. Partial transposition over
//! B transposes each block in place; over A it swaps blocks.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, BlockStructure, Complex64, ComplexMatrix};
use crate::{DEFAULT_TOL_HERM, DEFAULT_TOL_ZERO, DICHOTOMIC_TOL};

/// Density operator: Hermitian, unit trace, positive semi-definite.
#[derive(Clone, Debug)]
pub struct DensityOperator {
    matrix: ComplexMatrix,
}

impl DensityOperator {
    /// Validate and wrap. Trace must be 1 within 1e-10, Hermiticity and
    /// positivity are checked at the crate default tolerances.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::InvalidState(format!(
                "state must be square, got {}×{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !matrix.is_finite() {
            return Err(Error::InvalidState("state has non-finite entries".into()));
        }
        if !matrix.is_hermitian(DEFAULT_TOL_HERM) {
            return Err(Error::InvalidState(format!(
                "state is not Hermitian (residual {:.3e})",
                matrix.hermiticity_residual()
            )));
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > 1e-10 || trace.im.abs() > 1e-10 {
            return Err(Error::InvalidState(format!(
                "state trace is {:.12} + {:.3e}i, expected 1",
                trace.re, trace.im
            )));
        }
        let eig = hermitian_eig(&matrix, DEFAULT_TOL_HERM)?;
        let floor = -DEFAULT_TOL_ZERO * matrix.frobenius_norm().max(1.0);
        if eig.min_eigenvalue() < floor {
            return Err(Error::InvalidState(format!(
                "state is not PSD (minimum eigenvalue {:.3e})",
                eig.min_eigenvalue()
            )));
        }
        Ok(Self { matrix })
    }

    /// Maximally mixed state 1/d.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Transposed state ρᵀ (again a valid state).
    pub fn transposed(&self) -> Self {
        Self {
            matrix: self.matrix.transpose(),
        }
    }

    /// View as a bipartite operator under the given split.
    pub fn as_bipartite(&self, bs: BlockStructure) -> Result<BipartiteOperator> {
        BipartiteOperator::new(self.matrix.clone(), bs)
    }
}

/// Square operator on a tensor-product space, carrying its block structure.
#[derive(Clone, Debug)]
pub struct BipartiteOperator {
    pub matrix: ComplexMatrix,
    pub bs: BlockStructure,
}

impl BipartiteOperator {
    pub fn new(matrix: ComplexMatrix, bs: BlockStructure) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() != bs.total() {
            return Err(Error::DimensionMismatch(format!(
                "bipartite operator must have side {}·{} = {}, got {}×{}",
                bs.dim_a,
                bs.dim_b,
                bs.total(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self { matrix, bs })
    }

    /// Tr_B: result[i,j] = Tr[X_ij].
    pub fn partial_trace_b(&self) -> ComplexMatrix {
        let n = self.bs.dim_b;
        ComplexMatrix::from_fn(self.bs.dim_a, self.bs.dim_a, |i, j| {
            let mut sum = Complex64::new(0.0, 0.0);
            for k in 0..n {
                sum += self.matrix.get(i * n + k, j * n + k);
            }
            sum
        })
    }

    /// Tr_A: result = Σ_i X_ii.
    pub fn partial_trace_a(&self) -> ComplexMatrix {
        let n = self.bs.dim_b;
        ComplexMatrix::from_fn(n, n, |k, l| {
            let mut sum = Complex64::new(0.0, 0.0);
            for i in 0..self.bs.dim_a {
                sum += self.matrix.get(i * n + k, i * n + l);
            }
            sum
        })
    }

    /// T_B: transpose every block in place.
    pub fn partial_transpose_b(&self) -> Self {
        let n = self.bs.dim_b;
        let matrix = ComplexMatrix::from_fn(self.bs.total(), self.bs.total(), |r, c| {
            let (i, k) = (r / n, r % n);
            let (j, l) = (c / n, c % n);
            self.matrix.get(i * n + l, j * n + k)
        });
        Self {
            matrix,
            bs: self.bs,
        }
    }

    /// T_A: swap blocks, leaving each block untouched.
    pub fn partial_transpose_a(&self) -> Self {
        let n = self.bs.dim_b;
        let matrix = ComplexMatrix::from_fn(self.bs.total(), self.bs.total(), |r, c| {
            let (i, k) = (r / n, r % n);
            let (j, l) = (c / n, c % n);
            self.matrix.get(j * n + k, i * n + l)
        });
        Self {
            matrix,
            bs: self.bs,
        }
    }

    /// Conjugate the A factor: (M⊗1) X (M†⊗1).
    pub fn conjugate_a(&self, m: &ComplexMatrix) -> Result<Self> {
        if m.rows() != self.bs.dim_a || m.cols() != self.bs.dim_a {
            return Err(Error::DimensionMismatch(format!(
                "A-factor conjugation needs a {0}×{0} matrix",
                self.bs.dim_a
            )));
        }
        let big = m.kron(&ComplexMatrix::identity(self.bs.dim_b));
        Self::new(&(&big * &self.matrix) * &big.adjoint(), self.bs)
    }
}

/// Word over the single-qubit basis {1, σx, σy, σz}, realizing the observable
/// σ_w = σ_{w1} ⊗ … ⊗ σ_{wm}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliWord {
    letters: Vec<u8>,
}

impl PauliWord {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.iter().any(|&l| l > 3) {
            return Err(Error::InvalidState(
                "Pauli letters must be in {0,1,2,3}".into(),
            ));
        }
        if letters.is_empty() {
            return Err(Error::InvalidState("empty Pauli word".into()));
        }
        Ok(Self { letters })
    }

    pub fn identity(qubits: usize) -> Self {
        Self {
            letters: vec![0; qubits],
        }
    }

    pub fn qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Word at position `index` in the base-4 enumeration of all words on
    /// `qubits` qubits (first letter is the most significant digit).
    pub fn from_index(index: usize, qubits: usize) -> Self {
        let mut letters = vec![0u8; qubits];
        let mut rest = index;
        for slot in letters.iter_mut().rev() {
            *slot = (rest % 4) as u8;
            rest /= 4;
        }
        debug_assert_eq!(rest, 0, "index out of range for word length");
        Self { letters }
    }

    /// Position of this word in the base-4 enumeration.
    pub fn index(&self) -> usize {
        self.letters.iter().fold(0, |acc, &l| acc * 4 + l as usize)
    }

    /// All 4^m words on `qubits` qubits, in index order.
    pub fn all(qubits: usize) -> impl Iterator<Item = PauliWord> {
        (0..4usize.pow(qubits as u32)).map(move |i| PauliWord::from_index(i, qubits))
    }

    /// The 2^m × 2^m observable this word realizes.
    pub fn matrix(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::identity(1);
        for &l in &self.letters {
            out = out.kron(&single_pauli(l));
        }
        out
    }
}

impl std::fmt::Display for PauliWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &l in &self.letters {
            f.write_str(match l {
                0 => "I",
                1 => "X",
                2 => "Y",
                3 => "Z",
                _ => unreachable!(),
            })?;
        }
        Ok(())
    }
}

fn single_pauli(letter: u8) -> ComplexMatrix {
    let c = Complex64::new;
    match letter {
        0 => ComplexMatrix::identity(2),
        1 => ComplexMatrix::from_fn(2, 2, |i, j| if i != j { c(1.0, 0.0) } else { c(0.0, 0.0) }),
        2 => ComplexMatrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 1) => c(0.0, -1.0),
            (1, 0) => c(0.0, 1.0),
            _ => c(0.0, 0.0),
        }),
        3 => ComplexMatrix::from_real_diagonal(&[1.0, -1.0]),
        _ => unreachable!("validated letters"),
    }
}

/// Matrix of the Pauli word σ_w.
pub fn pauli_matrix(word: &PauliWord) -> ComplexMatrix {
    word.matrix()
}

/// Hermitian observable with spectrum in {+1, −1}, tested as M² = 1.
///
/// Pauli words are dichotomic, but so are rotated combinations such as
/// (σz+σx)/√2 — the correlator machinery accepts any of them.
#[derive(Clone, Debug)]
pub struct DichotomicObservable {
    matrix: ComplexMatrix,
}

impl DichotomicObservable {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch(
                "observable must be square".into(),
            ));
        }
        let herm = matrix.hermiticity_residual();
        if herm > DICHOTOMIC_TOL * matrix.frobenius_norm().max(1.0) {
            return Err(Error::NotHermitian {
                residual: herm,
                tolerance: DICHOTOMIC_TOL,
            });
        }
        let squared = &matrix * &matrix;
        let residual = (&squared - &ComplexMatrix::identity(matrix.rows())).frobenius_norm();
        if residual > DICHOTOMIC_TOL {
            return Err(Error::NotDichotomic { residual });
        }
        Ok(Self { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(dim),
        }
    }

    pub fn from_pauli(word: &PauliWord) -> Self {
        Self {
            matrix: word.matrix(),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Projectors onto the ±1 eigenspaces: Π± = (1 ± M)/2. For the identity
    /// observable this gives Π+ = 1 and Π− = 0.
    pub fn projectors(&self) -> (ComplexMatrix, ComplexMatrix) {
        let eye = ComplexMatrix::identity(self.dim());
        let plus = (&eye + &self.matrix).scale_real(0.5);
        let minus = (&eye - &self.matrix).scale_real(0.5);
        (plus, minus)
    }
}

/// Projectors onto the ±1 eigenspaces of a dichotomic observable.
pub fn projectors(obs: &DichotomicObservable) -> (ComplexMatrix, ComplexMatrix) {
    obs.projectors()
}

/// Expand a Hermitian multi-qubit operator over the Pauli word basis:
/// X = Σ_w c_w σ_w with c_w = Tr[X σ_w] / 2^m. Returns the 4^m coefficients
/// in word-index order.
pub fn pauli_basis_expand(x: &ComplexMatrix) -> Result<Vec<f64>> {
    if !x.is_square() {
        return Err(Error::DimensionMismatch("expansion needs a square matrix".into()));
    }
    let side = x.rows();
    if side == 0 || !side.is_power_of_two() {
        return Err(Error::DimensionMismatch(format!(
            "side {side} is not a power of two"
        )));
    }
    let qubits = side.trailing_zeros() as usize;
    let norm = 1.0 / side as f64;
    Ok(PauliWord::all(qubits)
        .map(|w| ((x * &w.matrix()).trace() * norm).re)
        .collect())
}

/// Rebuild the operator from its Pauli coefficients (inverse of
/// [`pauli_basis_expand`]).
pub fn pauli_basis_reconstruct(coeffs: &[f64], qubits: usize) -> Result<ComplexMatrix> {
    let count = 4usize.pow(qubits as u32);
    if coeffs.len() != count {
        return Err(Error::DimensionMismatch(format!(
            "expected {count} coefficients, got {}",
            coeffs.len()
        )));
    }
    let side = 1usize << qubits;
    let mut out = ComplexMatrix::zeros(side, side);
    for (idx, &c) in coeffs.iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        let term = PauliWord::from_index(idx, qubits).matrix().scale_real(c);
        out = &out + &term;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frobenius_distance;
    use crate::random::{complex_gaussian, haar_unitary, seeded_rng};

    fn bell_projector() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[
            vec![0.5, 0.0, 0.0, 0.5],
            vec![0.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, 0.0],
            vec![0.5, 0.0, 0.0, 0.5],
        ])
        .unwrap()
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

    fn random_bipartite(bs: BlockStructure, seed: u64) -> BipartiteOperator {
        let mut rng = seeded_rng(seed);
        BipartiteOperator::new(complex_gaussian(bs.total(), bs.total(), &mut rng), bs).unwrap()
    }

    #[test]
    fn partial_trace_b_of_kron_factorizes() {
        let mut rng = seeded_rng(1);
        let a = complex_gaussian(2, 2, &mut rng);
        let b = complex_gaussian(3, 3, &mut rng);
        let x = BipartiteOperator::new(a.kron(&b), BlockStructure::new(2, 3)).unwrap();
        let expected = a.scale(b.trace());
        assert!(frobenius_distance(&x.partial_trace_b(), &expected).unwrap() < 1e-13);
    }

    #[test]
    fn partial_trace_b_of_bell_is_maximally_mixed() {
        let x = BipartiteOperator::new(bell_projector(), BlockStructure::new(2, 2)).unwrap();
        let expected = ComplexMatrix::identity(2).scale_real(0.5);
        assert!(frobenius_distance(&x.partial_trace_b(), &expected).unwrap() < 1e-15);
    }

    #[test]
    fn partial_trace_b_of_uniform_state() {
        let bs = BlockStructure::new(3, 2);
        let x = BipartiteOperator::new(
            ComplexMatrix::identity(6).scale_real(1.0 / 6.0),
            bs,
        )
        .unwrap();
        let expected = ComplexMatrix::identity(3).scale_real(1.0 / 3.0);
        assert!(frobenius_distance(&x.partial_trace_b(), &expected).unwrap() < 1e-15);
    }

    #[test]
    fn partial_trace_a_of_kron_factorizes() {
        let mut rng = seeded_rng(2);
        let a = complex_gaussian(3, 3, &mut rng);
        let b = complex_gaussian(2, 2, &mut rng);
        let x = BipartiteOperator::new(a.kron(&b), BlockStructure::new(3, 2)).unwrap();
        let expected = b.scale(a.trace());
        assert!(frobenius_distance(&x.partial_trace_a(), &expected).unwrap() < 1e-13);
    }

    #[test]
    fn partial_trace_a_of_identity_and_swap() {
        let bs = BlockStructure::new(2, 2);
        let eye = BipartiteOperator::new(ComplexMatrix::identity(4), bs).unwrap();
        let expected = ComplexMatrix::identity(2).scale_real(2.0);
        assert!(frobenius_distance(&eye.partial_trace_a(), &expected).unwrap() < 1e-15);

        // Σ_i block(SWAP, i, i) = Σ_i E_ii = 1.
        let swap = BipartiteOperator::new(swap_2x2(), bs).unwrap();
        assert!(
            frobenius_distance(&swap.partial_trace_a(), &ComplexMatrix::identity(2)).unwrap()
                < 1e-15
        );
    }

    #[test]
    fn partial_transpose_b_fixes_diagonals_and_splits_kron() {
        let bs = BlockStructure::new(2, 2);
        let diag = ComplexMatrix::from_real_diagonal(&[1.0, 2.0, 3.0, 4.0]);
        let x = BipartiteOperator::new(diag.clone(), bs).unwrap();
        assert!(frobenius_distance(&x.partial_transpose_b().matrix, &diag).unwrap() < 1e-15);

        let mut rng = seeded_rng(3);
        let a = complex_gaussian(2, 2, &mut rng);
        let b = complex_gaussian(2, 2, &mut rng);
        let kron = BipartiteOperator::new(a.kron(&b), bs).unwrap();
        let expected = a.kron(&b.transpose());
        assert!(
            frobenius_distance(&kron.partial_transpose_b().matrix, &expected).unwrap() < 1e-13
        );
    }

    #[test]
    fn partial_transpose_b_of_bell_is_half_swap() {
        let bs = BlockStructure::new(2, 2);
        let x = BipartiteOperator::new(bell_projector(), bs).unwrap();
        let expected = swap_2x2().scale_real(0.5);
        assert!(frobenius_distance(&x.partial_transpose_b().matrix, &expected).unwrap() < 1e-15);
        // Its spectrum is {½,½,½,−½}.
        let eig = hermitian_eig(&x.partial_transpose_b().matrix, 1e-12).unwrap();
        assert!((eig.eigenvalues[0] + 0.5).abs() < 1e-12);
        assert!((eig.eigenvalues[3] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn partial_transpose_a_swaps_blocks() {
        let bs = BlockStructure::new(2, 2);
        let mut rng = seeded_rng(4);
        let a = complex_gaussian(2, 2, &mut rng);
        let b = complex_gaussian(2, 2, &mut rng);
        let x = BipartiteOperator::new(a.kron(&b), bs).unwrap();
        let expected = a.transpose().kron(&b);
        assert!(
            frobenius_distance(&x.partial_transpose_a().matrix, &expected).unwrap() < 1e-13
        );
    }

    #[test]
    fn partial_transpose_a_is_full_transpose_after_b() {
        let bs = BlockStructure::new(2, 3);
        let x = random_bipartite(bs, 5);
        let direct = x.partial_transpose_a();
        let via_b = x.partial_transpose_b().matrix.transpose();
        assert!(frobenius_distance(&direct.matrix, &via_b).unwrap() < 1e-14);
    }

    #[test]
    fn partial_transpose_properties() {
        // Involution, trace and Hermiticity preservation.
        for (da, db) in [(2usize, 2usize), (3, 2), (2, 4)] {
            let bs = BlockStructure::new(da, db);
            let x = random_bipartite(bs, 100 + da as u64 * 10 + db as u64);
            let tb = x.partial_transpose_b();
            let back = tb.partial_transpose_b();
            assert!(frobenius_distance(&back.matrix, &x.matrix).unwrap() < 1e-14);
            assert!((tb.matrix.trace() - x.matrix.trace()).norm() < 1e-13);

            let h = &x.matrix + &x.matrix.adjoint();
            let hx = BipartiteOperator::new(h, bs).unwrap();
            assert!(hx.partial_transpose_b().matrix.is_hermitian(1e-12));
            assert!(hx.partial_transpose_a().matrix.is_hermitian(1e-12));
        }
    }

    #[test]
    fn trace_b_commutes_with_transposes() {
        // Tr_B∘T = T∘Tr_B and Tr_B∘T_A = T_A-on-result∘Tr_B.
        for seed in 0..100u64 {
            let bs = BlockStructure::new(3, 2);
            let x = random_bipartite(bs, 1000 + seed);
            let full_t = BipartiteOperator::new(x.matrix.transpose(), bs).unwrap();
            let lhs = full_t.partial_trace_b();
            let rhs = x.partial_trace_b().transpose();
            assert!(frobenius_distance(&lhs, &rhs).unwrap() < 1e-12);

            let lhs = x.partial_transpose_a().partial_trace_b();
            let rhs = x.partial_trace_b().transpose();
            assert!(frobenius_distance(&lhs, &rhs).unwrap() < 1e-12);
        }
    }

    #[test]
    fn trace_b_commutes_with_unitary_conjugation() {
        for seed in 0..100u64 {
            let bs = BlockStructure::new(2, 3);
            let mut rng = seeded_rng(2000 + seed);
            let x = BipartiteOperator::new(
                complex_gaussian(bs.total(), bs.total(), &mut rng),
                bs,
            )
            .unwrap();
            let u = haar_unitary(2, &mut rng);
            let lhs = x.conjugate_a(&u).unwrap().partial_trace_b();
            let rhs = &(&u * &x.partial_trace_b()) * &u.adjoint();
            assert!(frobenius_distance(&lhs, &rhs).unwrap() < 1e-11);
        }
    }

    #[test]
    fn transpose_a_antihomomorphism_on_a_factors() {
        // T_A((ρ⊗1)X) = T_A(X)·(ρᵀ⊗1).
        for seed in 0..100u64 {
            let bs = BlockStructure::new(3, 2);
            let mut rng = seeded_rng(3000 + seed);
            let rho = complex_gaussian(3, 3, &mut rng);
            let x = BipartiteOperator::new(
                complex_gaussian(bs.total(), bs.total(), &mut rng),
                bs,
            )
            .unwrap();
            let rho_big = rho.kron(&ComplexMatrix::identity(2));
            let lhs = BipartiteOperator::new(&rho_big * &x.matrix, bs)
                .unwrap()
                .partial_transpose_a();
            let rhs = &x.partial_transpose_a().matrix
                * &rho.transpose().kron(&ComplexMatrix::identity(2));
            assert!(frobenius_distance(&lhs.matrix, &rhs).unwrap() < 1e-11);
        }
    }

    #[test]
    fn pauli_words_realize_the_expected_matrices() {
        let id = PauliWord::new(vec![0]).unwrap();
        assert!(frobenius_distance(&id.matrix(), &ComplexMatrix::identity(2)).unwrap() < 1e-15);
        let z = PauliWord::new(vec![3]).unwrap();
        assert!(
            frobenius_distance(&z.matrix(), &ComplexMatrix::from_real_diagonal(&[1.0, -1.0]))
                .unwrap()
                < 1e-15
        );
        // σ_x ⊗ σ_z: ±1 entries on the anti-block-diagonal.
        let xz = PauliWord::new(vec![1, 3]).unwrap().matrix();
        let expected = ComplexMatrix::from_real_rows(&[
            vec![0.0, 0.0, 1.0, 0.0],
            vec![0.0, 0.0, 0.0, -1.0],
            vec![1.0, 0.0, 0.0, 0.0],
            vec![0.0, -1.0, 0.0, 0.0],
        ])
        .unwrap();
        assert!(frobenius_distance(&xz, &expected).unwrap() < 1e-15);
    }

    #[test]
    fn pauli_words_are_hermitian_involutions() {
        for w in PauliWord::all(2) {
            let m = w.matrix();
            assert!(m.is_hermitian(1e-14));
            let sq = &m * &m;
            assert!(frobenius_distance(&sq, &ComplexMatrix::identity(4)).unwrap() < 1e-14);
        }
    }

    #[test]
    fn pauli_transpose_signs() {
        // σ_xᵀ = σ_x, σ_yᵀ = −σ_y, σ_zᵀ = σ_z.
        for (letter, sign) in [(1u8, 1.0), (2, -1.0), (3, 1.0)] {
            let m = single_pauli(letter);
            assert!(
                frobenius_distance(&m.transpose(), &m.scale_real(sign)).unwrap() < 1e-15,
                "transpose sign of letter {letter}"
            );
        }
    }

    #[test]
    fn word_indexing_round_trips() {
        for idx in 0..64 {
            let w = PauliWord::from_index(idx, 3);
            assert_eq!(w.index(), idx);
        }
        assert_eq!(PauliWord::new(vec![1, 3]).unwrap().index(), 7);
        assert_eq!(format!("{}", PauliWord::new(vec![1, 3]).unwrap()), "XZ");
    }

    #[test]
    fn projector_pairs_behave() {
        let z = DichotomicObservable::from_pauli(&PauliWord::new(vec![3]).unwrap());
        let (p, m) = z.projectors();
        assert!(
            frobenius_distance(&p, &ComplexMatrix::from_real_diagonal(&[1.0, 0.0])).unwrap()
                < 1e-15
        );
        assert!(
            frobenius_distance(&m, &ComplexMatrix::from_real_diagonal(&[0.0, 1.0])).unwrap()
                < 1e-15
        );

        let id = DichotomicObservable::identity(2);
        let (p, m) = id.projectors();
        assert!(frobenius_distance(&p, &ComplexMatrix::identity(2)).unwrap() < 1e-15);
        assert_eq!(m.frobenius_norm(), 0.0);
    }

    #[test]
    fn rotated_observable_projectors_are_rank_one() {
        // S = −(σz+σx)/√2 squares to the identity; Π± reconstruct it.
        let s_mat = (&single_pauli(3) + &single_pauli(1)).scale_real(-1.0 / 2f64.sqrt());
        let s = DichotomicObservable::new(s_mat.clone()).unwrap();
        let (p, m) = s.projectors();
        for proj in [&p, &m] {
            let sq = proj * proj;
            assert!(frobenius_distance(&sq, proj).unwrap() < 1e-14);
            assert!((proj.trace().re - 1.0).abs() < 1e-12);
        }
        assert!((&p * &m).frobenius_norm() < 1e-14);
        assert!(frobenius_distance(&(&p - &m), &s_mat).unwrap() < 1e-14);
    }

    #[test]
    fn non_dichotomic_matrices_are_rejected() {
        let half = ComplexMatrix::from_real_diagonal(&[1.0, 0.5]);
        assert!(matches!(
            DichotomicObservable::new(half),
            Err(Error::NotDichotomic { .. })
        ));
    }

    #[test]
    fn pauli_expansion_known_coefficients() {
        let half = ComplexMatrix::identity(2).scale_real(0.5);
        let coeffs = pauli_basis_expand(&half).unwrap();
        assert!((coeffs[0] - 0.5).abs() < 1e-14);
        assert!(coeffs[1..].iter().all(|c| c.abs() < 1e-14));
    }

    #[test]
    fn pauli_expansion_round_trips_random_hermitian() {
        let mut rng = seeded_rng(6);
        let g = complex_gaussian(4, 4, &mut rng);
        let h = (&g + &g.adjoint()).scale_real(0.5);
        let coeffs = pauli_basis_expand(&h).unwrap();
        let back = pauli_basis_reconstruct(&coeffs, 2).unwrap();
        assert!(frobenius_distance(&back, &h).unwrap() < 1e-12);
    }

    #[test]
    fn pauli_expansion_rejects_non_power_of_two() {
        let m = ComplexMatrix::identity(3);
        assert!(matches!(
            pauli_basis_expand(&m),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn density_operator_validation() {
        assert!(DensityOperator::new(ComplexMatrix::identity(2).scale_real(0.5)).is_ok());
        // Wrong trace.
        assert!(DensityOperator::new(ComplexMatrix::identity(2)).is_err());
        // Negative eigenvalue.
        let m = ComplexMatrix::from_real_diagonal(&[1.5, -0.5]);
        assert!(matches!(
            DensityOperator::new(m),
            Err(Error::InvalidState(_))
        ));
    }
}
