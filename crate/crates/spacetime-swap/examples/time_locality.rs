//! Locality in time: when Alice's measurement cannot influence Bob.
//!
//! In a sequential scenario the analogue of spacelike separation is the
//! condition E(Π⁺ρΠ⁺) = E(Π⁻ρΠ⁻): the channel wipes out the measurement
//! disturbance, so Bob's statistics carry no imprint of Alice's outcome.
//! The fully depolarizing channel satisfies it (for unbiased branches) and
//! its correlators vanish; the identity channel violates it maximally, which
//! is what makes the temporal CHSH violation possible.
//!
//! Run with: cargo run --example time_locality

use spacetime_swap::channels::Channel;
use spacetime_swap::operators::{DensityOperator, DichotomicObservable, PauliWord};
use spacetime_swap::tpsm::{correlator_direct, time_locality_check, TpsmScenario};

fn scenario(channel: Channel, letter_a: u8, letter_b: u8) -> TpsmScenario {
    TpsmScenario::new(
        DensityOperator::maximally_mixed(2),
        channel,
        DichotomicObservable::from_pauli(&PauliWord::new(vec![letter_a]).unwrap()),
        DichotomicObservable::from_pauli(&PauliWord::new(vec![letter_b]).unwrap()),
    )
    .unwrap()
}

fn main() {
    println!("channel         obsA  local-in-time   <A,Z> correlator");
    for (name, channel) in [
        ("depolarizing", Channel::depolarizing(2)),
        ("identity    ", Channel::identity(2)),
    ] {
        for letter in [1u8, 2, 3] {
            let s = scenario(channel.clone(), letter, 3);
            let local = time_locality_check(&s, 1e-12).unwrap();
            let corr = correlator_direct(&s).unwrap();
            println!(
                "{name}    s_{letter}   {}            {corr:+.6}",
                if local { "yes" } else { "no " }
            );
            if local {
                // No branch dependence means no correlation with any later
                // measurement.
                assert!(corr.abs() < 1e-12);
            }
        }
    }

    // The identity observable leaves branches rho and 0; the literal
    // condition then asks for E(rho) = 0, so the check reports "no".
    let s = TpsmScenario::new(
        DensityOperator::maximally_mixed(2),
        Channel::depolarizing(2),
        DichotomicObservable::identity(2),
        DichotomicObservable::from_pauli(&PauliWord::new(vec![3]).unwrap()),
    )
    .unwrap();
    println!(
        "\nidentity obsA edge case: local-in-time = {}",
        time_locality_check(&s, 1e-12).unwrap()
    );

    println!("\nthe temporal Bell violation needs non-locality in time, and has it");
}
