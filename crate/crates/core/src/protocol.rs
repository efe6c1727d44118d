//! The three-round weak coin flip.
//!
//! Round 1: Alice prepares `|psi>` on `A (x) B` and sends B to Bob.
//! Round 2: Bob measures `{E0, E1}` on B and announces the result `b`.
//! Round 3: for `b = 0` Bob returns B and Alice tests for `|psi_0>`; for `b = 1`
//! Alice sends A and Bob tests for `|psi_1>`, where
//! `|psi_b> = (I (x) sqrt E_b)|psi> / ||(I (x) sqrt E_b)|psi>||`.
//!
//! Bob wins on a passed `b = 0` test, Alice on a passed `b = 1` test, and a failed
//! test means the verifier caught the other party cheating.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::adversary::{AliceStrategy, BobStrategy};
use crate::error::{Error, Result};
use crate::linalg::{
    canonical_purification, max_abs_diff, BipartitePureState, BipartiteVector, ComplexMatrix,
    HermitianOperator, DENSITY_TOL, PSD_CLAMP,
};
use crate::random::substream;

/// Validation tolerances for [`ProtocolInstance::build`].
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    /// `|Tr(rho E0) - 1/2|`.
    pub fairness: f64,
    /// `|Tr rho - 1|`.
    pub density_trace: f64,
    /// Eigenvalues of `E0` must lie in `[-povm, 1 + povm]`.
    pub povm: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            fairness: 1e-9,
            density_trace: DENSITY_TOL,
            povm: 1e-9,
        }
    }
}

/// A validated pair `(rho, E0)` together with the honest objects it determines.
#[derive(Clone, Debug)]
pub struct ProtocolInstance {
    rho: HermitianOperator,
    e0: HermitianOperator,
    e1: HermitianOperator,
    sqrt_e0: HermitianOperator,
    sqrt_e1: HermitianOperator,
    psi: BipartitePureState,
    psi0: BipartitePureState,
    psi1: BipartitePureState,
    sigma: HermitianOperator,
}

impl ProtocolInstance {
    /// Builds with default tolerances and the canonical purification of `rho`.
    pub fn new(rho: HermitianOperator, e0: HermitianOperator) -> Result<Self> {
        Self::build(rho, e0, &Tolerances::default())
    }

    pub fn build(rho: HermitianOperator, e0: HermitianOperator, tol: &Tolerances) -> Result<Self> {
        validate_pair(&rho, &e0, tol)?;
        let psi = canonical_purification(&rho)?;
        Self::assemble(rho, e0, psi, tol)
    }

    /// Builds with a caller-supplied purification `psi` of `rho` (any `dim_a`).
    pub fn with_purification(
        rho: HermitianOperator,
        e0: HermitianOperator,
        psi: BipartitePureState,
        tol: &Tolerances,
    ) -> Result<Self> {
        validate_pair(&rho, &e0, tol)?;
        if psi.dim_b() != rho.dim() {
            return Err(Error::DimensionMismatch {
                expected: rho.dim(),
                found: psi.dim_b(),
            });
        }
        let residual = max_abs_diff(psi.partial_trace_a().matrix(), rho.matrix());
        if residual > tol.density_trace {
            return Err(Error::NotDensity {
                invariant: "purification reduces to rho",
                residual,
            });
        }
        Self::assemble(rho, e0, psi, tol)
    }

    fn assemble(
        rho: HermitianOperator,
        e0: HermitianOperator,
        psi: BipartitePureState,
        tol: &Tolerances,
    ) -> Result<Self> {
        // E0 and E1 share an eigenbasis; clamp into [0, 1] within the POVM tolerance.
        let eig = e0.eig();
        let sqrt_e0 = eig.map(|x| x.clamp(0.0, 1.0).sqrt());
        let sqrt_e1 = eig.map(|x| (1.0 - x).clamp(0.0, 1.0).sqrt());
        let e1 = e0.complement();
        let sigma = psi.partial_trace_b();
        let mut honest = Vec::with_capacity(2);
        for root in [&sqrt_e0, &sqrt_e1] {
            let v = psi.apply_on_b(root.matrix())?;
            let weight = v.norm_squared();
            // fairness carried to the purification: <psi|I (x) E_b|psi> = 1/2
            let residual = (weight - 0.5).abs();
            if residual > tol.fairness + 1e-12 {
                return Err(Error::FairnessViolation {
                    trace: weight,
                    residual,
                });
            }
            honest.push(v.normalized()?);
        }
        let psi1 = honest.pop().expect("two branches");
        let psi0 = honest.pop().expect("two branches");
        Ok(Self {
            rho,
            e0,
            e1,
            sqrt_e0,
            sqrt_e1,
            psi,
            psi0,
            psi1,
            sigma,
        })
    }

    pub fn dim(&self) -> usize {
        self.rho.dim()
    }

    pub fn rho(&self) -> &HermitianOperator {
        &self.rho
    }

    pub fn e0(&self) -> &HermitianOperator {
        &self.e0
    }

    pub fn e1(&self) -> &HermitianOperator {
        &self.e1
    }

    pub fn sqrt_e0(&self) -> &HermitianOperator {
        &self.sqrt_e0
    }

    pub fn sqrt_e1(&self) -> &HermitianOperator {
        &self.sqrt_e1
    }

    /// Alice's honest preparation.
    pub fn psi(&self) -> &BipartitePureState {
        &self.psi
    }

    /// Honest post-measurement state for `b = 0`, the target of Alice's test.
    pub fn psi0(&self) -> &BipartitePureState {
        &self.psi0
    }

    /// Honest post-measurement state for `b = 1`, the target of Bob's test.
    pub fn psi1(&self) -> &BipartitePureState {
        &self.psi1
    }

    pub fn psi_b(&self, bit: u8) -> &BipartitePureState {
        if bit == 0 {
            &self.psi0
        } else {
            &self.psi1
        }
    }

    /// `Tr_B |psi><psi|`, Alice's reduced state.
    pub fn sigma(&self) -> &HermitianOperator {
        &self.sigma
    }
}

fn validate_pair(rho: &HermitianOperator, e0: &HermitianOperator, tol: &Tolerances) -> Result<()> {
    if rho.dim() != e0.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: e0.dim(),
        });
    }
    let rho_eig = rho.eig();
    if rho_eig.min_eigenvalue() < -PSD_CLAMP {
        return Err(Error::NotDensity {
            invariant: "positive semidefinite",
            residual: -rho_eig.min_eigenvalue(),
        });
    }
    let trace_residual = (rho.trace() - 1.0).abs();
    if trace_residual > tol.density_trace {
        return Err(Error::NotDensity {
            invariant: "unit trace",
            residual: trace_residual,
        });
    }
    let e0_eig = e0.eig();
    if e0_eig.min_eigenvalue() < -tol.povm {
        return Err(Error::NotPovmElement {
            invariant: "E0 >= 0",
            residual: -e0_eig.min_eigenvalue(),
        });
    }
    if e0_eig.max_eigenvalue() > 1.0 + tol.povm {
        return Err(Error::NotPovmElement {
            invariant: "E0 <= I",
            residual: e0_eig.max_eigenvalue() - 1.0,
        });
    }
    let trace = rho.trace_product(e0);
    let residual = (trace - 0.5).abs();
    if residual > tol.fairness {
        return Err(Error::FairnessViolation { trace, residual });
    }
    Ok(())
}

pub fn build_instance(
    rho: HermitianOperator,
    e0: HermitianOperator,
    tol: &Tolerances,
) -> Result<ProtocolInstance> {
    ProtocolInstance::build(rho, e0, tol)
}

/// `rho = diag(x, 1 - x)`, `E0 = |0><0| / (2x)`, for `1/2 < x <= 1`.
pub fn family_one(x: f64) -> Result<ProtocolInstance> {
    if !(x > 0.5 && x <= 1.0) {
        return Err(Error::OutOfRange {
            parameter: "x",
            value: x,
            interval: "(1/2, 1]",
        });
    }
    ProtocolInstance::new(
        HermitianOperator::diagonal(&[x, 1.0 - x]),
        HermitianOperator::diagonal(&[1.0 / (2.0 * x), 0.0]),
    )
}

/// `rho = diag(x, 1 - x)`, `E0 = (1 - 1/(2x))|0><0| + |1><1|`, for `1/2 <= x < 1`.
pub fn family_two(x: f64) -> Result<ProtocolInstance> {
    if !(0.5..1.0).contains(&x) {
        return Err(Error::OutOfRange {
            parameter: "x",
            value: x,
            interval: "[1/2, 1)",
        });
    }
    ProtocolInstance::new(
        HermitianOperator::diagonal(&[x, 1.0 - x]),
        HermitianOperator::diagonal(&[1.0 - 1.0 / (2.0 * x), 1.0]),
    )
}

/// Alice's behavior in round 1.
#[derive(Clone, Debug)]
pub enum AlicePlay {
    Honest,
    Cheat(AliceStrategy),
}

/// Bob's behavior in rounds 2 and 3.
///
/// A cheating Bob who announces `b = 1` concedes: the outcome is recorded as an
/// Alice win without running his test.
#[derive(Clone, Debug)]
pub enum BobPlay {
    Honest,
    Cheat(BobStrategy),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Outcome {
    AliceWins,
    BobWins,
    AliceCatchesBob,
    BobCatchesAlice,
}

impl Outcome {
    /// Sampling and reporting order.
    pub const ALL: [Outcome; 4] = [
        Outcome::AliceWins,
        Outcome::BobWins,
        Outcome::AliceCatchesBob,
        Outcome::BobCatchesAlice,
    ];

    pub fn from_round_three(bit: u8, passed: bool) -> Self {
        match (bit, passed) {
            (0, true) => Outcome::BobWins,
            (0, false) => Outcome::AliceCatchesBob,
            (_, true) => Outcome::AliceWins,
            (_, false) => Outcome::BobCatchesAlice,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Outcome::AliceWins => 0,
            Outcome::BobWins => 1,
            Outcome::AliceCatchesBob => 2,
            Outcome::BobCatchesAlice => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Outcome::AliceWins => "alice_wins",
            Outcome::BobWins => "bob_wins",
            Outcome::AliceCatchesBob => "alice_catches_bob",
            Outcome::BobCatchesAlice => "bob_catches_alice",
        }
    }
}

/// Exact probability of each [`Outcome`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct OutcomeDistribution {
    pub alice_wins: f64,
    pub bob_wins: f64,
    pub alice_catches_bob: f64,
    pub bob_catches_alice: f64,
    /// Part of `alice_catches_bob` in which Bob played honestly.
    pub false_accusation: f64,
}

impl OutcomeDistribution {
    pub fn get(&self, outcome: Outcome) -> f64 {
        match outcome {
            Outcome::AliceWins => self.alice_wins,
            Outcome::BobWins => self.bob_wins,
            Outcome::AliceCatchesBob => self.alice_catches_bob,
            Outcome::BobCatchesAlice => self.bob_catches_alice,
        }
    }

    pub fn total(&self) -> f64 {
        Outcome::ALL.iter().map(|&o| self.get(o)).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Party {
    Alice,
    Bob,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum System {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Message {
    Quantum { round: u8, from: Party, system: System },
    Classical { round: u8, from: Party, bit: u8 },
}

/// One sampled execution.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Transcript {
    pub announced_bit: u8,
    pub verification_passed: bool,
    pub outcome: Outcome,
    /// Alice rejected a Bob who measured honestly.
    pub false_accusation: bool,
    /// Index of Bob's round-2 measurement outcome.
    pub measurement_outcome: usize,
    pub messages: Vec<Message>,
    pub verifier: Option<Party>,
}

/// One branch of Bob's round-2 measurement.
#[derive(Clone, Debug)]
struct Branch {
    bit: u8,
    probability: f64,
    /// Probability of passing the round-3 test given this branch.
    pass_probability: f64,
    bob_concedes: bool,
}

/// The game tree of one (instance, Alice play, Bob play) combination.
#[derive(Clone, Debug)]
pub struct GameTree {
    branches: Vec<Branch>,
    bob_honest: bool,
}

fn prepared_state<'a>(instance: &'a ProtocolInstance, alice: &'a AlicePlay) -> Result<&'a BipartitePureState> {
    match alice {
        AlicePlay::Honest => Ok(instance.psi()),
        AlicePlay::Cheat(s) => {
            let state = s.prepared_state();
            if state.dim_a() != instance.psi().dim_a() || state.dim_b() != instance.dim() {
                return Err(Error::DimensionMismatch {
                    expected: instance.psi().amplitudes().len(),
                    found: state.amplitudes().len(),
                });
            }
            Ok(state)
        }
    }
}

fn pass_weight(target: &BipartitePureState, v: &BipartiteVector) -> f64 {
    target.inner(v).norm_sqr()
}

impl GameTree {
    pub fn new(instance: &ProtocolInstance, alice: &AlicePlay, bob: &BobPlay) -> Result<Self> {
        let state = prepared_state(instance, alice)?;
        let mut branches = Vec::new();
        let mut push = |bit: u8, v: BipartiteVector, concedes: bool| {
            let probability = v.norm_squared();
            let passed = if concedes {
                probability
            } else {
                pass_weight(instance.psi_b(bit), &v)
            };
            let pass_probability = if probability > 0.0 {
                (passed / probability).clamp(0.0, 1.0)
            } else {
                1.0
            };
            branches.push(Branch {
                bit,
                probability,
                pass_probability,
                bob_concedes: concedes,
            });
        };
        match bob {
            BobPlay::Honest => {
                push(0, state.apply_on_b(instance.sqrt_e0().matrix())?, false);
                push(1, state.apply_on_b(instance.sqrt_e1().matrix())?, false);
            }
            BobPlay::Cheat(strategy) => {
                if strategy.dim() != instance.dim() {
                    return Err(Error::DimensionMismatch {
                        expected: instance.dim(),
                        found: strategy.dim(),
                    });
                }
                for (k, kraus) in strategy.kraus_operators().iter().enumerate() {
                    let v = state.apply_on_b(kraus)?;
                    if strategy.announces_zero(k) {
                        push(0, v, false);
                    } else {
                        push(1, v, true);
                    }
                }
            }
        }
        Ok(Self {
            branches,
            bob_honest: matches!(bob, BobPlay::Honest),
        })
    }

    pub fn distribution(&self) -> OutcomeDistribution {
        let mut d = OutcomeDistribution::default();
        for branch in &self.branches {
            let pass = branch.probability * branch.pass_probability;
            let fail = branch.probability - pass;
            if branch.bit == 0 {
                d.bob_wins += pass;
                d.alice_catches_bob += fail;
                if self.bob_honest {
                    d.false_accusation += fail;
                }
            } else {
                d.alice_wins += pass;
                d.bob_catches_alice += fail;
            }
        }
        d
    }

    /// Draws one execution: Bob's round-2 branch first, then the round-3 test.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Transcript {
        let u: f64 = rng.random();
        let total: f64 = self.branches.iter().map(|b| b.probability).sum();
        let mut acc = 0.0;
        let mut chosen = self.branches.len() - 1;
        for (k, branch) in self.branches.iter().enumerate() {
            acc += branch.probability / total;
            if u < acc {
                chosen = k;
                break;
            }
        }
        let branch = &self.branches[chosen];
        let v: f64 = rng.random();
        let passed = v < branch.pass_probability;
        let outcome = Outcome::from_round_three(branch.bit, passed);
        let mut messages = vec![
            Message::Quantum {
                round: 1,
                from: Party::Alice,
                system: System::B,
            },
            Message::Classical {
                round: 2,
                from: Party::Bob,
                bit: branch.bit,
            },
        ];
        let verifier = if branch.bit == 0 {
            messages.push(Message::Quantum {
                round: 3,
                from: Party::Bob,
                system: System::B,
            });
            Some(Party::Alice)
        } else {
            messages.push(Message::Quantum {
                round: 3,
                from: Party::Alice,
                system: System::A,
            });
            (!branch.bob_concedes).then_some(Party::Bob)
        };
        Transcript {
            announced_bit: branch.bit,
            verification_passed: passed,
            outcome,
            false_accusation: outcome == Outcome::AliceCatchesBob && self.bob_honest,
            measurement_outcome: chosen,
            messages,
            verifier,
        }
    }
}

/// Exact Born-rule evaluation of the full game tree.
pub fn outcome_distribution(
    instance: &ProtocolInstance,
    alice: &AlicePlay,
    bob: &BobPlay,
) -> Result<OutcomeDistribution> {
    Ok(GameTree::new(instance, alice, bob)?.distribution())
}

/// One sampled execution using the caller's random stream.
pub fn sample_run<R: Rng + ?Sized>(
    instance: &ProtocolInstance,
    alice: &AlicePlay,
    bob: &BobPlay,
    rng: &mut R,
) -> Result<Transcript> {
    Ok(GameTree::new(instance, alice, bob)?.sample(rng))
}

/// Outcome counts of a batch of sampled runs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OutcomeCounts {
    pub counts: [u64; 4],
    pub false_accusations: u64,
}

impl OutcomeCounts {
    pub fn get(&self, outcome: Outcome) -> u64 {
        self.counts[outcome.index()]
    }

    pub fn trials(&self) -> u64 {
        self.counts.iter().sum()
    }

    fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self.false_accusations += other.false_accusations;
        self
    }
}

/// Trials per independent random stream in [`simulate`].
pub const SIMULATION_CHUNK: u64 = 1 << 16;

/// Runs `trials` executions. Chunk `i` of [`SIMULATION_CHUNK`] trials draws from
/// stream `i` of `seed`, so the counts do not depend on the worker count.
pub fn simulate(
    instance: &ProtocolInstance,
    alice: &AlicePlay,
    bob: &BobPlay,
    trials: u64,
    seed: u64,
) -> Result<OutcomeCounts> {
    let tree = GameTree::new(instance, alice, bob)?;
    let chunks = trials.div_ceil(SIMULATION_CHUNK);
    Ok((0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = substream(seed, chunk);
            let n = SIMULATION_CHUNK.min(trials - chunk * SIMULATION_CHUNK);
            let mut counts = OutcomeCounts::default();
            for _ in 0..n {
                let t = tree.sample(&mut rng);
                counts.counts[t.outcome.index()] += 1;
                counts.false_accusations += u64::from(t.false_accusation);
            }
            counts
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(OutcomeCounts::default(), OutcomeCounts::merge))
}

/// Kraus operators of honest Bob: `sqrt E0`, `sqrt E1`.
pub fn honest_kraus(instance: &ProtocolInstance) -> [ComplexMatrix; 2] {
    [
        instance.sqrt_e0().matrix().clone(),
        instance.sqrt_e1().matrix().clone(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs_diff;
    use crate::random::{random_instance, substream};

    fn both_party() -> ProtocolInstance {
        ProtocolInstance::new(
            HermitianOperator::diagonal(&[0.5, 0.5]),
            HermitianOperator::diagonal(&[0.75, 0.25]),
        )
        .unwrap()
    }

    #[test]
    fn family_one_is_valid() {
        let inst = family_one(0.75).unwrap();
        assert!((inst.rho().trace_product(inst.e0()) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn e0_half_identity_leaves_psi_unchanged() {
        let inst = ProtocolInstance::new(
            HermitianOperator::diagonal(&[0.5, 0.5]),
            HermitianOperator::diagonal(&[0.5, 0.5]),
        )
        .unwrap();
        assert!((inst.psi0().amplitudes() - inst.psi().amplitudes()).norm() < 1e-15);
    }

    #[test]
    fn unfair_instance_rejected() {
        let err = ProtocolInstance::new(
            HermitianOperator::diagonal(&[0.5, 0.5]),
            HermitianOperator::identity(2),
        )
        .unwrap_err();
        match err {
            Error::FairnessViolation { trace, .. } => assert!((trace - 1.0).abs() < 1e-15),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn validation_errors_name_the_invariant() {
        let err = ProtocolInstance::new(
            HermitianOperator::diagonal(&[0.6, 0.6]),
            HermitianOperator::diagonal(&[0.5, 0.5]),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotDensity { invariant: "unit trace", .. }));
        let err = ProtocolInstance::new(
            HermitianOperator::diagonal(&[0.5, 0.5]),
            HermitianOperator::diagonal(&[1.5, -0.5]),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotPovmElement { .. }));
        let err = ProtocolInstance::new(
            HermitianOperator::diagonal(&[0.5, 0.5]),
            HermitianOperator::diagonal(&[0.5, 0.5, 0.5]),
        )
        .unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn family_domains() {
        assert!(family_one(0.4).is_err());
        assert!(family_one(0.5).is_err());
        assert!(family_one(1.0).is_ok());
        assert!(family_two(0.5).is_ok());
        assert!(family_two(1.0).is_err());
        let e0 = family_two(0.5).unwrap();
        assert!(max_abs_diff(e0.e0().matrix(), HermitianOperator::diagonal(&[0.0, 1.0]).matrix()) < 1e-15);
    }

    #[test]
    fn families_valid_on_grid() {
        for i in 0..50 {
            family_one(0.5 + 0.5 * (i + 1) as f64 / 50.0).unwrap();
            family_two(0.5 + 0.5 * i as f64 / 50.0).unwrap();
        }
    }

    #[test]
    fn honest_play_is_balanced_and_clean() {
        let mut rng = substream(11, 0);
        for inst in [both_party(), family_one(0.8).unwrap(), random_instance(3, &mut rng)] {
            let d = outcome_distribution(&inst, &AlicePlay::Honest, &BobPlay::Honest).unwrap();
            assert!((d.alice_wins - 0.5).abs() < 1e-9);
            assert!((d.bob_wins - 0.5).abs() < 1e-9);
            assert!(d.alice_catches_bob.abs() < 1e-12);
            assert!(d.bob_catches_alice.abs() < 1e-12);
            assert!((d.total() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn sample_run_is_reproducible() {
        let inst = both_party();
        let a = sample_run(&inst, &AlicePlay::Honest, &BobPlay::Honest, &mut substream(5, 0)).unwrap();
        let b = sample_run(&inst, &AlicePlay::Honest, &BobPlay::Honest, &mut substream(5, 0)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.messages.len(), 3);
        assert_eq!(a.outcome, Outcome::from_round_three(a.announced_bit, a.verification_passed));
    }

    #[test]
    fn simulate_independent_of_threads() {
        let inst = both_party();
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| simulate(&inst, &AlicePlay::Honest, &BobPlay::Honest, 200_000, 3).unwrap())
        };
        let one = run(1);
        assert_eq!(one, run(4));
        assert_eq!(one.trials(), 200_000);
        assert_eq!(one.get(Outcome::AliceCatchesBob) + one.get(Outcome::BobCatchesAlice), 0);
    }

    #[test]
    fn outcome_consistency() {
        for &o in &Outcome::ALL {
            let (bit, pass) = match o {
                Outcome::AliceWins => (1, true),
                Outcome::BobWins => (0, true),
                Outcome::AliceCatchesBob => (0, false),
                Outcome::BobCatchesAlice => (1, false),
            };
            assert_eq!(Outcome::from_round_three(bit, pass), o);
        }
    }
}
