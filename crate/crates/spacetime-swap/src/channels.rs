//! Quantum channels stored as Choi matrices, their Jamiołkowski partners,
//! conjugate channels, CPTP diagnostics, and the star product that turns a
//! channel plus an input state into a two-time pseudo-density operator.
//!
//! For a channel E : A → B with dim A = d, dim B = n:
//!
//! * Choi matrix  𝒞[E] = Σ E_ij ⊗ E(E_ij), PSD iff E is completely positive,
//!   Tr_B 𝒞[E] = 1 iff E is trace-preserving;
//! * Jamiołkowski matrix 𝒥[E] = Σ E_ij ⊗ E(E_ji) = 𝒞[E]^{T_A};
//! * star product  E ⋆ ρ = ½{ρ⊗1, 𝒥[E]}, Hermitian with unit trace but not
//!   positive in general.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, BlockStructure, ComplexMatrix};
use crate::operators::{BipartiteOperator, DensityOperator};
use crate::{CPTP_TOL, DEFAULT_TOL_HERM, PDM_TOL};

/// Completely positive trace-preserving map, stored canonically as its Choi
/// matrix on input ⊗ output.
#[derive(Clone, Debug)]
pub struct Channel {
    choi: ComplexMatrix,
    dim_in: usize,
    dim_out: usize,
}

/// Diagnostic verdict of [`is_cptp`]; reports the numeric margins rather than
/// failing.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct CptpVerdict {
    pub cp: bool,
    pub tp: bool,
    pub min_choi_eigenvalue: f64,
    pub tp_residual: f64,
    pub hermiticity_residual: f64,
}

impl Channel {
    /// Wrap a Choi matrix after verifying complete positivity and trace
    /// preservation at the crate tolerances.
    pub fn from_choi(choi: ComplexMatrix, dim_in: usize, dim_out: usize) -> Result<Self> {
        let bs = BlockStructure::new(dim_in, dim_out);
        let candidate = BipartiteOperator::new(choi, bs)?;
        let verdict = is_cptp(&candidate, CPTP_TOL);
        if !verdict.cp {
            return Err(Error::InvalidState(format!(
                "Choi matrix is not PSD (minimum eigenvalue {:.3e})",
                verdict.min_choi_eigenvalue
            )));
        }
        if !verdict.tp {
            return Err(Error::InvalidState(format!(
                "channel is not trace-preserving (residual {:.3e})",
                verdict.tp_residual
            )));
        }
        Ok(Self {
            choi: candidate.matrix,
            dim_in,
            dim_out,
        })
    }

    /// Identity channel on `dim` levels.
    pub fn identity(dim: usize) -> Self {
        let bs = BlockStructure::new(dim, dim);
        let choi = bs.assemble(|i, j| {
            ComplexMatrix::from_fn(dim, dim, |k, l| {
                if k == i && l == j {
                    num_complex::Complex::new(1.0, 0.0)
                } else {
                    num_complex::Complex::new(0.0, 0.0)
                }
            })
        });
        Self {
            choi,
            dim_in: dim,
            dim_out: dim,
        }
    }

    /// Replace channel ρ ↦ Tr[ρ]·σ.
    pub fn replace(dim_in: usize, sigma: &DensityOperator) -> Self {
        let choi = ComplexMatrix::identity(dim_in).kron(sigma.matrix());
        Self {
            choi,
            dim_in,
            dim_out: sigma.dim(),
        }
    }

    /// Unitary conjugation channel ρ ↦ UρU†.
    pub fn conjugation(u: &ComplexMatrix) -> Result<Self> {
        if !u.is_square() {
            return Err(Error::DimensionMismatch("unitary must be square".into()));
        }
        let dim = u.rows();
        let bs = BlockStructure::new(dim, dim);
        let choi = bs.assemble(|i, j| {
            let e_ij = ComplexMatrix::from_fn(dim, dim, |k, l| {
                if k == i && l == j {
                    num_complex::Complex::new(1.0, 0.0)
                } else {
                    num_complex::Complex::new(0.0, 0.0)
                }
            });
            &(u * &e_ij) * &u.adjoint()
        });
        Self::from_choi(choi, dim, dim)
    }

    /// Fully depolarizing channel ρ ↦ Tr[ρ]·1/dim.
    pub fn depolarizing(dim: usize) -> Self {
        Self::replace(dim, &DensityOperator::maximally_mixed(dim))
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn choi(&self) -> &ComplexMatrix {
        &self.choi
    }

    pub fn block_structure(&self) -> BlockStructure {
        BlockStructure::new(self.dim_in, self.dim_out)
    }

    /// Choi matrix viewed as a bipartite operator on input ⊗ output.
    pub fn choi_bipartite(&self) -> BipartiteOperator {
        BipartiteOperator::new(self.choi.clone(), self.block_structure())
            .expect("choi shape fixed at construction")
    }

    /// Jamiołkowski matrix 𝒥[E] = 𝒞[E]^{T_A}.
    pub fn jamiolkowski(&self) -> BipartiteOperator {
        self.choi_bipartite().partial_transpose_a()
    }

    /// Apply the channel: E(ρ) = Tr_A[(ρᵀ⊗1)·𝒞[E]].
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if rho.rows() != self.dim_in || rho.cols() != self.dim_in {
            return Err(Error::DimensionMismatch(format!(
                "channel input is {0}×{0}, got {1}×{2}",
                self.dim_in,
                rho.rows(),
                rho.cols()
            )));
        }
        let big = rho.transpose().kron(&ComplexMatrix::identity(self.dim_out));
        BipartiteOperator::new(&big * &self.choi, self.block_structure())
            .map(|x| x.partial_trace_a())
    }

    /// Conjugate channel Ē = T∘E∘T; its Choi matrix is the transpose of this
    /// channel's.
    pub fn conjugate(&self) -> Self {
        Self {
            choi: self.choi.transpose(),
            dim_in: self.dim_in,
            dim_out: self.dim_out,
        }
    }

    /// Star product E ⋆ ρ = ½{ρ⊗1, 𝒥[E]}: the pseudo-density operator of the
    /// sequential-measurement scenario that prepares ρ and evolves through E.
    pub fn star_product(&self, rho: &DensityOperator) -> Result<PseudoDensityOperator> {
        if rho.dim() != self.dim_in {
            return Err(Error::DimensionMismatch(format!(
                "star product needs a {}-level state, got {}",
                self.dim_in,
                rho.dim()
            )));
        }
        let jam = self.jamiolkowski().matrix;
        let rho_big = rho.matrix().kron(&ComplexMatrix::identity(self.dim_out));
        let anti = &(&rho_big * &jam) + &(&jam * &rho_big);
        PseudoDensityOperator::new(BipartiteOperator::new(
            anti.scale_real(0.5),
            self.block_structure(),
        )?)
    }
}

/// CP/TP diagnostic on a candidate Choi matrix: never fails, reports margins.
pub fn is_cptp(candidate: &BipartiteOperator, tol: f64) -> CptpVerdict {
    let herm_residual = candidate.matrix.hermiticity_residual();
    let scale = candidate.matrix.frobenius_norm().max(1.0);
    let herm_ok = herm_residual <= DEFAULT_TOL_HERM * scale;

    // Eigenvalues of the symmetrized part; meaningless margins are still
    // reported when the candidate is far from Hermitian, but CP is denied.
    let sym = (&candidate.matrix + &candidate.matrix.adjoint()).scale_real(0.5);
    let min_eig = hermitian_eig(&sym, f64::INFINITY)
        .map(|e| e.min_eigenvalue())
        .unwrap_or(f64::NEG_INFINITY);

    let tp_residual = (&candidate.partial_trace_b()
        - &ComplexMatrix::identity(candidate.bs.dim_a))
        .frobenius_norm();

    CptpVerdict {
        cp: herm_ok && min_eig >= -tol * scale,
        tp: tp_residual <= tol,
        min_choi_eigenvalue: min_eig,
        tp_residual,
        hermiticity_residual: herm_residual,
    }
}

/// Hermitian unit-trace bipartite operator; unlike a density operator it may
/// have negative eigenvalues, which witness correlations with no spacelike
/// realization.
#[derive(Clone, Debug)]
pub struct PseudoDensityOperator {
    op: BipartiteOperator,
}

impl PseudoDensityOperator {
    pub fn new(op: BipartiteOperator) -> Result<Self> {
        let herm = op.matrix.hermiticity_residual();
        if herm > PDM_TOL * op.matrix.frobenius_norm().max(1.0) {
            return Err(Error::NotHermitian {
                residual: herm,
                tolerance: PDM_TOL,
            });
        }
        let trace = op.matrix.trace();
        if (trace.re - 1.0).abs() > PDM_TOL || trace.im.abs() > PDM_TOL {
            return Err(Error::InvalidState(format!(
                "pseudo-density trace is {:.12}, expected 1",
                trace.re
            )));
        }
        Ok(Self { op })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.op.matrix
    }

    pub fn bipartite(&self) -> &BipartiteOperator {
        &self.op
    }

    pub fn block_structure(&self) -> BlockStructure {
        self.op.bs
    }
}
