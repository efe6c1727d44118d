//! Samples protocol runs and compares frequencies with the exact game tree.
//!
//! cargo run --release --example monte_carlo

use wcf::oracle::monte_carlo_agreement;
use wcf::random::substream;
use wcf::{
    family_one, optimal_alice_state, sample_run, threshold_bob_strategy, AlicePlay, BobPlay,
};

fn main() -> wcf::Result<()> {
    let inst = family_one(0.8)?;

    let mut rng = substream(1, 0);
    let t = sample_run(&inst, &AlicePlay::Honest, &BobPlay::Honest, &mut rng)?;
    println!("one honest run: b = {}, outcome {:?}", t.announced_bit, t.outcome);
    for m in &t.messages {
        println!("  {m:?}");
    }

    let cases = [
        ("honest vs honest", AlicePlay::Honest, BobPlay::Honest),
        (
            "optimal Alice",
            AlicePlay::Cheat(optimal_alice_state(&inst)?),
            BobPlay::Honest,
        ),
        (
            "zero-risk Bob",
            AlicePlay::Honest,
            BobPlay::Cheat(threshold_bob_strategy(&inst)?),
        ),
    ];
    for (name, alice, bob) in &cases {
        let report = monte_carlo_agreement(&inst, alice, bob, 1_000_000, 7)?;
        println!("\n{name}, {} trials", report.trials);
        for row in &report.rows {
            println!(
                "  {:<20}{:>9}  freq {:.5}  exact {:.5}  z {:+.2}",
                row.outcome.name(),
                row.count,
                row.frequency,
                row.probability,
                row.z_score
            );
        }
    }
    Ok(())
}
