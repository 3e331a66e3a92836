//! Spatial and temporal CHSH experiments on the maximally entangled qubit
//! family, and the side-by-side report of what partial transposition does to
//! them.
//!
//! The state family is ¼(1⊗1 + Σ aᵢ σᵢ⊗σᵢ) with a₁ = a₃ = ±1 and a₂ = −1.
//! With the canonical setting Q = σ₃, R = σ₁, S = (σ₃+σ₁)/√2,
//! T = (σ₁−σ₃)/√2 the CHSH combination E_QS + E_RS + E_RT − E_QT equals
//! Tr[ρ·𝒪] with 𝒪 = √2(σ₁⊗σ₁ + σ₃⊗σ₃), hence √2(a₁+a₃) = ±2√2 — a maximal
//! violation of the classical bound 2 with the sign of a₁ = a₃.
//!
//! Partial transposition only flips a₂, and 𝒪 carries no σ₂⊗σ₂ term, so the
//! sequential-measurement experiment driven by the synthesized channel
//! violates the same inequality by the same amount: the violation moves from
//! space to time intact, while the σ₂⊗σ₂ correlator flips from −1 to +1 and
//! the partial transpose acquires eigenvalue −½.

use serde::Serialize;

use crate::channels::Channel;
use crate::error::{Error, Result};
use crate::linalg::{frobenius_distance, hermitian_eig, BlockStructure, ComplexMatrix};
use crate::operators::{DensityOperator, DichotomicObservable, PauliWord};
use crate::synthesis::synthesize;
use crate::tpsm::{
    correlator_direct, negativity_of, simulate_tpsm, SampledCorrelator, TpsmScenario,
};
use crate::DEFAULT_TOL_HERM;

/// Two-qubit state ¼(1⊗1 + Σ aᵢ σᵢ⊗σᵢ), valid iff (a₁,a₂,a₃) lies in the
/// state tetrahedron.
#[derive(Clone, Copy, Debug)]
pub struct BellDiagonalState {
    a: [f64; 3],
}

impl BellDiagonalState {
    /// Build and validate: positivity is checked through the spectrum, which
    /// for this family is ¼(1 + Σᵢ aᵢ sᵢ) over the four sign patterns
    /// s ∈ {(1,−1,1), (−1,1,1), (1,1,−1), (−1,−1,−1)}.
    pub fn new(a1: f64, a2: f64, a3: f64) -> Result<Self> {
        let state = Self { a: [a1, a2, a3] };
        let eig = hermitian_eig(&state.matrix(), DEFAULT_TOL_HERM)?;
        if eig.min_eigenvalue() < -1e-12 {
            return Err(Error::NotAState {
                min_eigenvalue: eig.min_eigenvalue(),
            });
        }
        Ok(state)
    }

    pub fn coefficients(&self) -> [f64; 3] {
        self.a
    }

    fn matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::identity(4);
        for (i, &coeff) in self.a.iter().enumerate() {
            let s = PauliWord::new(vec![i as u8 + 1]).expect("valid letter").matrix();
            m = &m + &s.kron(&s).scale_real(coeff);
        }
        m.scale_real(0.25)
    }

    pub fn density(&self) -> DensityOperator {
        DensityOperator::new(self.matrix()).expect("validated at construction")
    }
}

/// Build the Bell-diagonal state ¼(1⊗1 + Σ aᵢ σᵢ⊗σᵢ) as a density operator.
pub fn bell_diagonal(a1: f64, a2: f64, a3: f64) -> Result<DensityOperator> {
    Ok(BellDiagonalState::new(a1, a2, a3)?.density())
}

/// A CHSH measurement setting: two dichotomic observables per party.
#[derive(Clone, Debug)]
pub struct ChshSetting {
    pub q: DichotomicObservable,
    pub r: DichotomicObservable,
    pub s: DichotomicObservable,
    pub t: DichotomicObservable,
}

impl ChshSetting {
    pub fn new(
        q: DichotomicObservable,
        r: DichotomicObservable,
        s: DichotomicObservable,
        t: DichotomicObservable,
    ) -> Self {
        Self { q, r, s, t }
    }

    /// The canonical maximal-violation setting: Q = σ₃, R = σ₁,
    /// S = (σ₃+σ₁)/√2, T = (σ₁−σ₃)/√2. Chosen so the Bell-diagonal family
    /// gives CHSH = √2(a₁+a₃), i.e. +2√2 for a₁ = a₃ = +1.
    pub fn canonical() -> Self {
        let sq2 = 2f64.sqrt();
        let sx = PauliWord::new(vec![1]).expect("valid").matrix();
        let sz = PauliWord::new(vec![3]).expect("valid").matrix();
        Self {
            q: DichotomicObservable::new(sz.clone()).expect("Pauli is dichotomic"),
            r: DichotomicObservable::new(sx.clone()).expect("Pauli is dichotomic"),
            s: DichotomicObservable::new((&sz + &sx).scale_real(1.0 / sq2))
                .expect("rotated Pauli combination is dichotomic"),
            t: DichotomicObservable::new((&sx - &sz).scale_real(1.0 / sq2))
                .expect("rotated Pauli combination is dichotomic"),
        }
    }

    /// The CHSH operator 𝒪 = Q⊗S + R⊗S + R⊗T − Q⊗T.
    pub fn operator(&self) -> ComplexMatrix {
        let qs = self.q.matrix().kron(self.s.matrix());
        let rs = self.r.matrix().kron(self.s.matrix());
        let rt = self.r.matrix().kron(self.t.matrix());
        let qt = self.q.matrix().kron(self.t.matrix());
        &(&(&qs + &rs) + &rt) - &qt
    }
}

/// Spatial CHSH value Tr[ρ·𝒪] for a two-qubit state.
pub fn chsh_spatial(rho_ab: &DensityOperator, setting: &ChshSetting) -> Result<f64> {
    if rho_ab.dim() != 4 {
        return Err(Error::DimensionMismatch(
            "spatial CHSH needs a two-qubit state".into(),
        ));
    }
    Ok((rho_ab.matrix() * &setting.operator()).trace().re)
}

/// Temporal CHSH value: the same four correlators, but measured sequentially
/// — Alice measures Q or R on ρ_A, the channel carries her branch to Bob, Bob
/// measures S or T.
pub fn chsh_temporal(
    rho_a: &DensityOperator,
    channel: &Channel,
    setting: &ChshSetting,
) -> Result<f64> {
    let corr = |a: &DichotomicObservable, b: &DichotomicObservable| -> Result<f64> {
        correlator_direct(&TpsmScenario::new(
            rho_a.clone(),
            channel.clone(),
            a.clone(),
            b.clone(),
        )?)
    };
    Ok(corr(&setting.q, &setting.s)?
        + corr(&setting.r, &setting.s)?
        + corr(&setting.r, &setting.t)?
        - corr(&setting.q, &setting.t)?)
}

/// Monte Carlo estimates for the four temporal CHSH correlators.
#[derive(Clone, Debug, Serialize)]
pub struct ChshSamples {
    pub qs: SampledCorrelator,
    pub rs: SampledCorrelator,
    pub rt: SampledCorrelator,
    pub qt: SampledCorrelator,
    /// qs + rs + rt − qt.
    pub chsh_estimate: f64,
}

/// Sample the four temporal correlators with `shots` shots each. Setting k
/// (in the order QS, RS, RT, QT) uses seed `seed + k`.
pub fn chsh_temporal_sampled(
    rho_a: &DensityOperator,
    channel: &Channel,
    setting: &ChshSetting,
    shots: u64,
    seed: u64,
) -> Result<ChshSamples> {
    let sample = |a: &DichotomicObservable,
                  b: &DichotomicObservable,
                  offset: u64|
     -> Result<SampledCorrelator> {
        simulate_tpsm(
            &TpsmScenario::new(rho_a.clone(), channel.clone(), a.clone(), b.clone())?,
            shots,
            seed.wrapping_add(offset),
        )
    };
    let qs = sample(&setting.q, &setting.s, 0)?;
    let rs = sample(&setting.r, &setting.s, 1)?;
    let rt = sample(&setting.r, &setting.t, 2)?;
    let qt = sample(&setting.q, &setting.t, 3)?;
    let chsh_estimate = qs.estimate + rs.estimate + rt.estimate - qt.estimate;
    Ok(ChshSamples {
        qs,
        rs,
        rt,
        qt,
        chsh_estimate,
    })
}

/// Everything the space↔time comparison produces for one sign choice.
#[derive(Clone, Debug, Serialize)]
pub struct SwapReport {
    /// The sign of a₁ = a₃ (a₂ is always −1).
    pub sign: i8,
    /// Tr[ρ_AB·𝒪].
    pub spatial_chsh: f64,
    /// Four sequential correlators combined, driven by the synthesized channel.
    pub temporal_chsh: f64,
    /// Same quantity through Tr[ρ^{T_B}·𝒪] — an independent code path.
    pub temporal_chsh_via_pt: f64,
    /// ⟨σ₂⊗σ₂⟩ on the state: −1 (perfect anti-correlation).
    pub yy_spatial: f64,
    /// ⟨σ₂,σ₂⟩ sequentially: +1 (perfect correlation after the swap).
    pub yy_temporal: f64,
    /// Smallest eigenvalue of ρ^{T_B} (−½ for this family).
    pub pt_min_eigenvalue: f64,
    /// Σ|negative eigenvalues| of ρ^{T_B}.
    pub pt_negativity: f64,
    /// ‖ρ^{T_B} − ρ^{T_A}‖_F; zero for this family.
    pub pt_sides_distance: f64,
    /// Human-readable description of the synthesized channel.
    pub channel_kind: String,
    /// Frobenius distance of the synthesized Choi matrix to the identity
    /// channel's and to σ_y-conjugation's.
    pub choi_distance_identity: f64,
    pub choi_distance_y_conjugation: f64,
    /// Synthesis residuals.
    pub residual_tb: f64,
    pub residual_ta: f64,
}

/// Run the full spatial-versus-temporal comparison for a₁ = a₃ = ±1,
/// a₂ = −1 with the canonical setting.
pub fn swap_report(sign: i8) -> Result<SwapReport> {
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidState(format!(
            "sign must be +1 or −1, got {sign}"
        )));
    }
    let a = sign as f64;
    let state = bell_diagonal(a, -1.0, a)?;
    let bs = BlockStructure::new(2, 2);
    let setting = ChshSetting::canonical();

    let spatial_chsh = chsh_spatial(&state, &setting)?;

    let synthesis = synthesize(&state, bs)?;
    let rho_a = DensityOperator::new(state.as_bipartite(bs)?.partial_trace_b())?;
    let temporal_chsh = chsh_temporal(&rho_a, &synthesis.channel, &setting)?;

    let pt = state.as_bipartite(bs)?.partial_transpose_b();
    let temporal_chsh_via_pt = (&pt.matrix * &setting.operator()).trace().re;

    let sy = PauliWord::new(vec![2])?;
    let yy = sy.matrix().kron(&sy.matrix());
    let yy_spatial = (state.matrix() * &yy).trace().re;
    let yy_temporal = correlator_direct(&TpsmScenario::new(
        rho_a,
        synthesis.channel.clone(),
        DichotomicObservable::from_pauli(&sy),
        DichotomicObservable::from_pauli(&sy),
    )?)?;

    let witness = negativity_of(&pt.matrix)?;
    let pt_sides_distance = frobenius_distance(
        &pt.matrix,
        &state.as_bipartite(bs)?.partial_transpose_a().matrix,
    )?;

    let choi_distance_identity =
        frobenius_distance(synthesis.channel.choi(), Channel::identity(2).choi())?;
    let ad_y = Channel::conjugation(&sy.matrix())?;
    let choi_distance_y_conjugation =
        frobenius_distance(synthesis.channel.choi(), ad_y.choi())?;
    let channel_kind = if choi_distance_identity < 1e-8 {
        "identity".to_string()
    } else if choi_distance_y_conjugation < 1e-8 {
        "conjugation by σ_y".to_string()
    } else {
        "other".to_string()
    };

    Ok(SwapReport {
        sign,
        spatial_chsh,
        temporal_chsh,
        temporal_chsh_via_pt,
        yy_spatial,
        yy_temporal,
        pt_min_eigenvalue: witness.min_eigenvalue,
        pt_negativity: witness.negativity,
        pt_sides_distance,
        channel_kind,
        choi_distance_identity,
        choi_distance_y_conjugation,
        residual_tb: synthesis.residual_tb,
        residual_ta: synthesis.residual_ta,
    })
}

/// The synthesized channel for the swap experiment with the given sign, for
/// callers that want to drive it further (sampling, tables).
pub fn swap_channel(sign: i8) -> Result<(DensityOperator, Channel)> {
    let a = sign as f64;
    let state = bell_diagonal(a, -1.0, a)?;
    let bs = BlockStructure::new(2, 2);
    let synthesis = synthesize(&state, bs)?;
    let rho_a = DensityOperator::new(state.as_bipartite(bs)?.partial_trace_b())?;
    Ok((rho_a, synthesis.channel))
}
