//! Builds the optimal and zero-risk cheating strategies for each party and
//! scores them, together with a hand-made Bob strategy.
//!
//! cargo run --example cheating_strategies

use wcf::{
    evaluate_alice, evaluate_bob, optimal_alice_state, optimal_bob_strategy,
    threshold_alice_state, threshold_bob_strategy, BobStrategy, ComplexMatrix, HermitianOperator,
    ProtocolInstance, StrategyAssessment,
};

fn show(label: &str, a: &StrategyAssessment) {
    println!(
        "{label:<28} win {:.6}  caught {:.6}  loses {:.6}",
        a.p_win, a.p_caught, a.p_opponent_wins
    );
}

fn main() -> wcf::Result<()> {
    let inst = ProtocolInstance::new(
        HermitianOperator::diagonal(&[0.5, 0.5]),
        HermitianOperator::diagonal(&[0.75, 0.25]),
    )?;

    show("Alice, optimal", &evaluate_alice(&inst, &optimal_alice_state(&inst)?)?);
    show("Alice, zero risk", &evaluate_alice(&inst, &threshold_alice_state(&inst)?)?);
    let bob = optimal_bob_strategy(&inst);
    show("Bob, optimal", &evaluate_bob(&inst, &bob)?);
    println!("  correction unitary:\n{}", bob.unitaries()[0]);
    let bob = threshold_bob_strategy(&inst)?;
    show("Bob, zero risk", &evaluate_bob(&inst, &bob)?);
    println!("  E0' = {}", bob.povm()[0].matrix());

    // Always announcing 0 without touching B.
    let id = ComplexMatrix::identity(2, 2);
    let lazy = BobStrategy::new(vec![HermitianOperator::identity(2)], vec![id], &[0])?;
    show("Bob, always announce 0", &evaluate_bob(&inst, &lazy)?);
    Ok(())
}
