//! The central correlator identity, three ways.
//!
//! For a sequential scenario (ρ, σ_α, E, σ_β), the two-time correlator can be
//! computed (a) operationally, from the projective branches; (b) from the
//! pseudo-density operator E ⋆ ρ as Tr[ϱ(σ_α⊗σ_β)]; and, when E was
//! synthesized from a bipartite state, (c) as Tr[ρ_AB^{T_B}(σ_α⊗σ_β)] —
//! spatial expectation values of the partially transposed state. All three
//! agree to machine precision, for every Pauli pair, which is exactly the
//! sense in which the partial transpose stores temporal correlations.
//!
//! Run with: cargo run --example correlator_identity

use spacetime_swap::linalg::BlockStructure;
use spacetime_swap::operators::{DensityOperator, DichotomicObservable, PauliWord};
use spacetime_swap::random::{random_bipartite_density, seeded_rng};
use spacetime_swap::synthesis::synthesize;
use spacetime_swap::tpsm::{correlator_direct, correlator_via_pdm, TpsmScenario};

fn main() {
    let mut rng = seeded_rng(2024);
    let bs = BlockStructure::new(2, 2);

    let mut worst_pdm = 0.0f64;
    let mut worst_pt = 0.0f64;
    for round in 0..20 {
        let rho_ab = random_bipartite_density(bs, &mut rng);
        let synthesis = synthesize(&rho_ab, bs).unwrap();
        let rho_a =
            DensityOperator::new(rho_ab.as_bipartite(bs).unwrap().partial_trace_b()).unwrap();
        let pdm = synthesis.channel.star_product(&rho_a).unwrap();
        let pt = rho_ab.as_bipartite(bs).unwrap().partial_transpose_b();

        for word_a in PauliWord::all(1) {
            for word_b in PauliWord::all(1) {
                let scenario = TpsmScenario::new(
                    rho_a.clone(),
                    synthesis.channel.clone(),
                    DichotomicObservable::from_pauli(&word_a),
                    DichotomicObservable::from_pauli(&word_b),
                )
                .unwrap();
                let direct = correlator_direct(&scenario).unwrap();
                let via_pdm = correlator_via_pdm(
                    &pdm,
                    &DichotomicObservable::from_pauli(&word_a),
                    &DichotomicObservable::from_pauli(&word_b),
                )
                .unwrap();
                let joint = word_a.matrix().kron(&word_b.matrix());
                let via_pt = (&pt.matrix * &joint).trace().re;

                worst_pdm = worst_pdm.max((direct - via_pdm).abs());
                worst_pt = worst_pt.max((direct - via_pt).abs());

                if round == 0 {
                    println!(
                        "<{word_a},{word_b}>  branches {direct:+.6}   pdm {via_pdm:+.6}   pt-trace {via_pt:+.6}"
                    );
                }
            }
        }
    }
    println!("\n20 random states x 16 Pauli pairs:");
    println!("  max |branches - pdm trace|  = {worst_pdm:.3e}");
    println!("  max |branches - pt trace|   = {worst_pt:.3e}");
    assert!(worst_pdm < 1e-10);
    assert!(worst_pt < 1e-8);
    println!("the partial transpose is the two-time correlation store");
}
