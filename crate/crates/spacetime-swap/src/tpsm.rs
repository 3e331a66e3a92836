//! Two-point sequential measurement (TPSM) scenarios.
//!
//! A scenario (ρ, A, E, B) runs: prepare ρ, projectively measure the
//! dichotomic observable A, send the collapsed state through the channel E,
//! measure B. The two-time correlator ⟨A,B⟩ — the expectation of the product
//! of the two ±1 outcomes — is computed three independent ways:
//!
//! * [`correlator_direct`]: branch-by-branch from the projective update,
//!   Tr[E(Π⁺ρΠ⁺)B] − Tr[E(Π⁻ρΠ⁻)B];
//! * [`correlator_via_pdm`]: as Tr[ϱ(A⊗B)] against the pseudo-density
//!   operator ϱ = E ⋆ ρ;
//! * [`simulate_tpsm`]: seeded Monte Carlo over single-shot outcomes.
//!
//! Agreement of the first two is the central identity this crate exists to
//! exercise; the sampler provides the operational sanity check.

use serde::Serialize;

use crate::channels::{Channel, PseudoDensityOperator};
use crate::error::{Error, Result};
use crate::linalg::{frobenius_distance, hermitian_eig, ComplexMatrix};
use crate::operators::{
    pauli_basis_reconstruct, DensityOperator, DichotomicObservable, PauliWord,
};
use crate::DEFAULT_TOL_HERM;

/// Probabilities and eigenvalues this close to zero are treated as exact
/// zeros (never-sampled branches, negativity floor).
const BRANCH_EPS: f64 = 1e-12;

/// One sequential-measurement experiment: state, first observable, channel,
/// second observable.
#[derive(Clone, Debug)]
pub struct TpsmScenario {
    pub rho: DensityOperator,
    pub channel: Channel,
    pub obs_a: DichotomicObservable,
    pub obs_b: DichotomicObservable,
}

impl TpsmScenario {
    pub fn new(
        rho: DensityOperator,
        channel: Channel,
        obs_a: DichotomicObservable,
        obs_b: DichotomicObservable,
    ) -> Result<Self> {
        if rho.dim() != channel.dim_in() || obs_a.dim() != channel.dim_in() {
            return Err(Error::DimensionMismatch(format!(
                "state and first observable must live on the channel input ({})",
                channel.dim_in()
            )));
        }
        if obs_b.dim() != channel.dim_out() {
            return Err(Error::DimensionMismatch(format!(
                "second observable must live on the channel output ({})",
                channel.dim_out()
            )));
        }
        Ok(Self {
            rho,
            channel,
            obs_a,
            obs_b,
        })
    }
}

/// Exact two-time correlator from the projective branches:
/// ⟨A,B⟩ = Tr[E(Π⁺ρΠ⁺)B] − Tr[E(Π⁻ρΠ⁻)B].
pub fn correlator_direct(s: &TpsmScenario) -> Result<f64> {
    let (plus, minus) = s.obs_a.projectors();
    let branch = |p: &ComplexMatrix| -> Result<f64> {
        let collapsed = &(p * s.rho.matrix()) * p;
        let out = s.channel.apply(&collapsed)?;
        Ok((&out * s.obs_b.matrix()).trace().re)
    };
    Ok(branch(&plus)? - branch(&minus)?)
}

/// Same correlator through the anticommutator shortcut
/// ⟨A,B⟩ = Tr[E(½{A,ρ})·B]. Algebraically identical to
/// [`correlator_direct`]; kept as an independent code path for cross-checks.
pub fn correlator_anticommutator(s: &TpsmScenario) -> Result<f64> {
    let a = s.obs_a.matrix();
    let sym = (&(a * s.rho.matrix()) + &(s.rho.matrix() * a)).scale_real(0.5);
    let out = s.channel.apply(&sym)?;
    Ok((&out * s.obs_b.matrix()).trace().re)
}

/// Correlator read off a pseudo-density operator: Tr[ϱ(A⊗B)].
pub fn correlator_via_pdm(
    pdm: &PseudoDensityOperator,
    obs_a: &DichotomicObservable,
    obs_b: &DichotomicObservable,
) -> Result<f64> {
    let bs = pdm.block_structure();
    if obs_a.dim() != bs.dim_a || obs_b.dim() != bs.dim_b {
        return Err(Error::DimensionMismatch(format!(
            "observables must be {}×{} and {}×{}",
            bs.dim_a, bs.dim_a, bs.dim_b, bs.dim_b
        )));
    }
    let joint = obs_a.matrix().kron(obs_b.matrix());
    Ok((pdm.matrix() * &joint).trace().re)
}

/// Full table of two-time correlators over all Pauli word pairs.
#[derive(Clone, Debug, Serialize)]
pub struct CorrelatorTable {
    pub qubits_a: usize,
    pub qubits_b: usize,
    /// Row-major over (word on A, word on B) in base-4 index order.
    pub values: Vec<f64>,
}

impl CorrelatorTable {
    pub fn from_values(qubits_a: usize, qubits_b: usize, values: Vec<f64>) -> Result<Self> {
        let expected = 4usize.pow(qubits_a as u32) * 4usize.pow(qubits_b as u32);
        if values.len() != expected {
            return Err(Error::IncompleteTable {
                expected,
                found: values.len(),
            });
        }
        Ok(Self {
            qubits_a,
            qubits_b,
            values,
        })
    }

    pub fn get(&self, word_a: &PauliWord, word_b: &PauliWord) -> f64 {
        let num_b = 4usize.pow(self.qubits_b as u32);
        self.values[word_a.index() * num_b + word_b.index()]
    }
}

/// Measure every Pauli pair of a scenario's state/channel with the exact
/// branch formula. Requires power-of-two dimensions on both sides.
pub fn correlator_table(rho: &DensityOperator, channel: &Channel) -> Result<CorrelatorTable> {
    let (qubits_a, qubits_b) = qubit_counts(channel)?;
    let mut values = Vec::with_capacity(4usize.pow((qubits_a + qubits_b) as u32));
    for word_a in PauliWord::all(qubits_a) {
        for word_b in PauliWord::all(qubits_b) {
            let scenario = TpsmScenario::new(
                rho.clone(),
                channel.clone(),
                DichotomicObservable::from_pauli(&word_a),
                DichotomicObservable::from_pauli(&word_b),
            )?;
            values.push(correlator_direct(&scenario)?);
        }
    }
    CorrelatorTable::from_values(qubits_a, qubits_b, values)
}

fn qubit_counts(channel: &Channel) -> Result<(usize, usize)> {
    let (din, dout) = (channel.dim_in(), channel.dim_out());
    if !din.is_power_of_two() || !dout.is_power_of_two() {
        return Err(Error::DimensionMismatch(format!(
            "Pauli tables need power-of-two dimensions, got {din} and {dout}"
        )));
    }
    Ok((
        din.trailing_zeros() as usize,
        dout.trailing_zeros() as usize,
    ))
}

/// Reconstruct the unique pseudo-density operator with the given correlator
/// table: ϱ = 2^{−(m+n)} Σ c(α,β) σ_α⊗σ_β.
pub fn pdm_from_correlators(table: &CorrelatorTable) -> Result<PseudoDensityOperator> {
    let qubits = table.qubits_a + table.qubits_b;
    let side = 1usize << qubits;
    // c(α,β)/2^{m+n} are exactly the Pauli-basis coefficients of ϱ.
    let coeffs: Vec<f64> = table.values.iter().map(|&v| v / side as f64).collect();
    let matrix = pauli_basis_reconstruct(&coeffs, qubits)?;
    PseudoDensityOperator::new(crate::operators::BipartiteOperator::new(
        matrix,
        crate::linalg::BlockStructure::new(1 << table.qubits_a, 1 << table.qubits_b),
    )?)
}

/// Result of a Monte Carlo correlator estimate.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SampledCorrelator {
    pub estimate: f64,
    pub stderr: f64,
    pub shots: u64,
    pub seed: u64,
}

/// Sample the scenario shot by shot: draw Alice's outcome from the branch
/// probabilities Tr[Π^±ρΠ^±], collapse, push the branch through the channel,
/// draw Bob's outcome, and average the products. Deterministic for a fixed
/// seed (ChaCha8 stream, two uniform draws per shot). Branches with
/// probability below 1e-12 are never sampled.
pub fn simulate_tpsm(s: &TpsmScenario, shots: u64, seed: u64) -> Result<SampledCorrelator> {
    if shots == 0 {
        return Err(Error::InvalidState("shots must be ≥ 1".into()));
    }
    let (plus, minus) = s.obs_a.projectors();
    let collapse = |p: &ComplexMatrix| &(p * s.rho.matrix()) * p;
    let branch_plus = collapse(&plus);
    let branch_minus = collapse(&minus);
    let p_plus = branch_plus.trace().re.clamp(0.0, 1.0);
    let p_minus = branch_minus.trace().re.clamp(0.0, 1.0);

    let (proj_b_plus, _) = s.obs_b.projectors();
    // Probability of Bob's +1 outcome given Alice's branch; None when the
    // branch can never occur.
    let bob_plus_given = |branch: &ComplexMatrix, p: f64| -> Result<Option<f64>> {
        if p < BRANCH_EPS {
            return Ok(None);
        }
        let normalized = branch.scale_real(1.0 / p);
        let out = s.channel.apply(&normalized)?;
        Ok(Some((&proj_b_plus * &out).trace().re.clamp(0.0, 1.0)))
    };
    let q_plus = bob_plus_given(&branch_plus, p_plus)?;
    let q_minus = bob_plus_given(&branch_minus, p_minus)?;

    let mut rng = crate::random::seeded_rng(seed);
    let mut sum = 0.0f64;
    for _ in 0..shots {
        let u1: f64 = rand::Rng::random(&mut rng);
        let u2: f64 = rand::Rng::random(&mut rng);
        let (a, q) = match (q_plus, q_minus) {
            (Some(qp), Some(qm)) => {
                if u1 < p_plus {
                    (1.0, qp)
                } else {
                    (-1.0, qm)
                }
            }
            (Some(qp), None) => (1.0, qp),
            (None, Some(qm)) => (-1.0, qm),
            (None, None) => unreachable!("a unit-trace state has a reachable branch"),
        };
        let b = if u2 < q { 1.0 } else { -1.0 };
        sum += a * b;
    }
    let estimate = sum / shots as f64;
    let stderr = if shots > 1 {
        ((1.0 - estimate * estimate).max(0.0) / (shots - 1) as f64).sqrt()
    } else {
        0.0
    };
    Ok(SampledCorrelator {
        estimate,
        stderr,
        shots,
        seed,
    })
}

/// Negativity diagnostics of a pseudo-density operator.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct NegativityReport {
    pub min_eigenvalue: f64,
    /// Sum of |λ| over eigenvalues below −1e-12; zero iff PSD within that
    /// tolerance. A non-zero value witnesses correlations no spacelike
    /// separated pair can produce.
    pub negativity: f64,
}

/// Smallest eigenvalue and total negativity of a pseudo-density operator.
pub fn negativity_witness(pdm: &PseudoDensityOperator) -> Result<NegativityReport> {
    negativity_of(pdm.matrix())
}

/// Negativity diagnostics for any Hermitian matrix.
pub fn negativity_of(matrix: &ComplexMatrix) -> Result<NegativityReport> {
    let eig = hermitian_eig(matrix, DEFAULT_TOL_HERM)?;
    let negativity = eig
        .eigenvalues
        .iter()
        .filter(|&&l| l < -BRANCH_EPS)
        .map(|l| -l)
        .sum();
    Ok(NegativityReport {
        min_eigenvalue: eig.min_eigenvalue(),
        negativity,
    })
}

/// Locality-in-time condition: Alice's measurement disturbance has no causal
/// influence on Bob iff the channel erases the branch difference,
/// ‖E(Π⁺ρΠ⁺) − E(Π⁻ρΠ⁻)‖_F ≤ tol. The branches enter unnormalized, so for
/// the identity observable the condition degenerates to ‖E(ρ)‖ ≤ tol.
pub fn time_locality_check(s: &TpsmScenario, tol: f64) -> Result<bool> {
    let (plus, minus) = s.obs_a.projectors();
    let branch = |p: &ComplexMatrix| -> Result<ComplexMatrix> {
        s.channel.apply(&(&(p * s.rho.matrix()) * p))
    };
    let diff = frobenius_distance(&branch(&plus)?, &branch(&minus)?)?;
    Ok(diff <= tol)
}
