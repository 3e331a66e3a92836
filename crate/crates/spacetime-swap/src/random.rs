//! Seedable random generators for states, unitaries and channels.
//!
//! Everything here takes an explicit `&mut impl Rng` so callers control
//! reproducibility; the crate convention is ChaCha8 seeded from a `u64`
//! (see [`seeded_rng`]).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::channels::Channel;
use crate::linalg::{BlockStructure, Complex64, ComplexMatrix};
use crate::operators::DensityOperator;

/// Identifier of the generator algorithm, recorded in run reports so results
/// can be tied to the exact random stream.
pub const RNG_ALGORITHM: &str = "chacha8";

/// The crate's canonical seeded generator.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Matrix with i.i.d. standard complex Gaussian entries.
pub fn complex_gaussian(rows: usize, cols: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let mut entries = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        entries.push(Complex64::new(re, im));
    }
    ComplexMatrix::from_fn(rows, cols, |i, j| entries[i * cols + j])
}

/// Haar-random unitary via QR of a Ginibre matrix with the standard phase
/// fix on the diagonal of R.
pub fn haar_unitary(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let g = complex_gaussian(dim, dim, rng);
    let qr = g.as_na().clone().qr();
    let q = qr.q();
    let r = qr.r();
    let phases: Vec<Complex64> = (0..dim)
        .map(|i| {
            let d = r[(i, i)];
            if d.norm() == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                d / d.norm()
            }
        })
        .collect();
    ComplexMatrix::from_fn(dim, dim, |i, j| q[(i, j)] * phases[j])
}

/// Haar-random isometry: `rows × cols` matrix V with V†V = 1 (needs rows ≥ cols).
pub fn haar_isometry(rows: usize, cols: usize, rng: &mut impl Rng) -> ComplexMatrix {
    assert!(rows >= cols, "isometry needs rows ≥ cols");
    let g = complex_gaussian(rows, cols, rng);
    let qr = g.as_na().clone().qr();
    let q = qr.q();
    let r = qr.r();
    let phases: Vec<Complex64> = (0..cols)
        .map(|i| {
            let d = r[(i, i)];
            if d.norm() == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                d / d.norm()
            }
        })
        .collect();
    ComplexMatrix::from_fn(rows, cols, |i, j| q[(i, j)] * phases[j])
}

/// Random pure state |ψ⟩⟨ψ| on `dim` levels.
pub fn random_pure_density(dim: usize, rng: &mut impl Rng) -> DensityOperator {
    let g = complex_gaussian(dim, 1, rng);
    let norm = g.frobenius_norm();
    let psi = g.scale_real(1.0 / norm);
    let rho = &psi * &psi.adjoint();
    DensityOperator::new(rho).expect("normalized projector is a state")
}

/// Random mixed state: reduce a Haar-random pure state on system ⊗ environment,
/// with an environment of `env_dim` levels (full-rank output for env_dim ≥ dim).
pub fn random_density(dim: usize, env_dim: usize, rng: &mut impl Rng) -> DensityOperator {
    let g = complex_gaussian(dim, env_dim, rng);
    let rho = &g * &g.adjoint();
    let tr = rho.trace().re;
    DensityOperator::new(rho.scale_real(1.0 / tr)).expect("Gram matrix is a state")
}

/// Random bipartite mixed state on the given block structure, obtained by
/// tracing out an environment of the same total dimension.
pub fn random_bipartite_density(bs: BlockStructure, rng: &mut impl Rng) -> DensityOperator {
    random_density(bs.total(), bs.total(), rng)
}

/// Random CPTP channel: E(ρ) = Tr_env[VρV†] for a Haar-random isometry
/// V : in → out ⊗ env with env dimension equal to the input dimension.
pub fn random_channel(dim_in: usize, dim_out: usize, rng: &mut impl Rng) -> Channel {
    let env = dim_in;
    let v = haar_isometry(dim_out * env, dim_in, rng);
    let out_env = BlockStructure::new(dim_out, env);
    let choi_bs = BlockStructure::new(dim_in, dim_out);
    let choi = choi_bs.assemble(|i, j| {
        // E(E_ij) = Tr_env[V E_ij V†] = Tr_env[(col_i of V)(col_j of V)†].
        let vi = ComplexMatrix::from_fn(dim_out * env, 1, |k, _| v.get(k, i));
        let vj = ComplexMatrix::from_fn(dim_out * env, 1, |k, _| v.get(k, j));
        let outer = &vi * &vj.adjoint();
        partial_trace_env(&outer, out_env)
    });
    Channel::from_choi(choi, dim_in, dim_out).expect("isometry reduction is CPTP")
}

fn partial_trace_env(x: &ComplexMatrix, bs: BlockStructure) -> ComplexMatrix {
    // Trace over the fast (environment) factor of an out ⊗ env operator.
    ComplexMatrix::from_fn(bs.dim_a, bs.dim_a, |i, j| {
        let mut sum = Complex64::new(0.0, 0.0);
        for k in 0..bs.dim_b {
            sum += x.get(i * bs.dim_b + k, j * bs.dim_b + k);
        }
        sum
    })
}
