//! Cheat-sensitive quantum weak coin flipping.
//!
//! Alice sends half of an entangled state to Bob, Bob measures a two-outcome
//! POVM `{E0, E1}` and announces the result, and whoever receives the other half
//! checks that the joint state is the honest post-measurement state. An instance
//! is fixed by Bob's reduced state `rho` and the POVM element `E0`, subject to
//! `Tr(rho E0) = 1/2`.
//!
//! - [`linalg`]: Hermitian eigensystems, square roots, support projectors,
//!   fidelity, partial traces, Schmidt decompositions.
//! - [`protocol`]: instance validation, the exact game tree, sampled runs.
//! - [`adversary`]: closed-form security figures, the strategies attaining them,
//!   exact evaluators for arbitrary strategies.
//! - [`oracle`]: numerical optimizers that rediscover the figures without the
//!   closed forms, plus Monte Carlo agreement checks.
//! - [`cli`]: instance files, reports and the `wcf` command line.

pub mod adversary;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod protocol;
pub mod random;

pub use adversary::{
    evaluate_alice, evaluate_bob, optimal_alice_state, optimal_bob_strategy, p_a_max, p_a_thresh,
    p_b_max, p_b_thresh, security_report, threshold_alice_state, threshold_bob_strategy,
    AliceStrategy, BobStrategy, SecurityReport, StrategyAssessment,
};
pub use error::{Error, Result};
pub use linalg::{BipartitePureState, BipartiteVector, ComplexMatrix, HermitianOperator};
pub use protocol::{
    family_one, family_two, outcome_distribution, sample_run, simulate, AlicePlay, BobPlay,
    Outcome, OutcomeDistribution, ProtocolInstance, Transcript,
};
