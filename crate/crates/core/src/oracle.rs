//! Independent numerical checks of the security figures.
//!
//! Each oracle maximizes a cheating party's exact winning probability by
//! gradient ascent from seeded random starts, without the closed forms. The
//! closed form is consulted only afterwards to report `closed_form_delta`.
//!
//! Restart `r` draws from stream `r` of the oracle's seed and restarts run in
//! parallel; results are merged in restart order, so they are independent of
//! the worker count.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::adversary::{
    evaluate_alice, evaluate_bob, p_a_max, p_a_thresh, p_b_max, p_b_thresh, AliceStrategy,
    BobStrategy,
};
use crate::error::{Error, Result};
use crate::linalg::{
    c, lemma_lhs_rhs, max_abs_diff, nearest_isometry, polar_unitary, psd_sqrt, support_projector,
    BipartiteVector, ComplexMatrix, ComplexVector, HermitianOperator, SUPPORT_CUTOFF,
};
use crate::protocol::{
    outcome_distribution, simulate, AlicePlay, BobPlay, Outcome, ProtocolInstance,
};
use crate::random::{gaussian_matrix, gaussian_vector, random_psd, random_state, random_unitary, substream};

/// Largest Bob dimension accepted by [`bob_full_oracle`] and [`bob_threshold_oracle`].
pub const MAX_BOB_DIM: usize = 3;
/// Largest POVM size accepted by [`bob_full_oracle`].
pub const MAX_OUTCOMES: usize = 3;
/// Catch probability below which a probe counts as undetectable.
pub const ZERO_CATCH_TOL: f64 = 1e-10;

// Stream-family salts so that oracles sharing a seed do not share starts.
const ALICE_SALT: u64 = 0xa11c_e000;
const ALICE_THRESH_SALT: u64 = 0xa11c_e001;
const BOB_UNITARY_SALT: u64 = 0xb0b0_0000;
const BOB_FULL_SALT: u64 = 0xb0b0_0001;
const BOB_THRESH_SALT: u64 = 0xb0b0_0002;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OracleConfig {
    pub restarts: usize,
    pub max_iterations: usize,
    /// Ascent stops once an accepted step improves the objective by less than this.
    pub step_tolerance: f64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            restarts: 64,
            max_iterations: 2000,
            step_tolerance: 1e-10,
            seed: 0,
        }
    }
}

impl OracleConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.restarts == 0 || self.max_iterations == 0 {
            return Err(Error::Malformed(
                "restarts and max_iterations must be positive".into(),
            ));
        }
        if self.step_tolerance.is_nan() || self.step_tolerance <= 0.0 {
            return Err(Error::OutOfRange {
                parameter: "step_tolerance",
                value: self.step_tolerance,
                interval: "(0, inf)",
            });
        }
        Ok(())
    }
}

/// The strategy attaining an oracle's best value.
#[derive(Clone, Debug)]
pub enum OracleArgument {
    Alice(AliceStrategy),
    Bob(BobStrategy),
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub best_value: f64,
    pub best_argument: OracleArgument,
    /// Best value of each restart, in restart order.
    pub value_history: Vec<f64>,
    /// `best_value` minus the closed-form figure.
    pub closed_form_delta: f64,
    /// Largest catch probability over all probes (zero-catch oracles only).
    pub max_probe_catch: Option<f64>,
}

/// Backtracking ascent: a step that does not improve the objective is halved.
///
/// `value_grad` returns the value and an ascent direction at a point;
/// `retract` maps `(point, direction, step)` back onto the feasible set.
fn ascend<P: Clone>(
    start: P,
    value_grad: impl Fn(&P) -> (f64, P),
    retract: impl Fn(&P, &P, f64) -> Option<P>,
    config: &OracleConfig,
    mut on_accept: impl FnMut(&P, f64),
) -> (P, f64) {
    let mut x = start;
    let (mut value, mut grad) = value_grad(&x);
    on_accept(&x, value);
    let mut step = 1.0;
    for _ in 0..config.max_iterations {
        let mut accepted = None;
        while step > 1e-16 {
            if let Some(candidate) = retract(&x, &grad, step) {
                let (v, g) = value_grad(&candidate);
                if v > value {
                    accepted = Some((candidate, v, g));
                    break;
                }
            }
            step *= 0.5;
        }
        let Some((candidate, v, g)) = accepted else {
            break;
        };
        let gain = v - value;
        x = candidate;
        value = v;
        grad = g;
        on_accept(&x, value);
        if gain < config.step_tolerance {
            break;
        }
        step = (step * 2.0).min(1e6);
    }
    (x, value)
}

fn normalize(v: ComplexVector) -> Option<ComplexVector> {
    let n = v.norm();
    (n > 1e-300).then(|| v.unscale(n))
}

/// Runs `restarts` independent probes in parallel, in restart order.
fn run_restarts<T: Send>(
    config: &OracleConfig,
    salt: u64,
    probe: impl Fn(&mut rand_chacha::ChaCha8Rng) -> Result<(f64, T)> + Sync,
) -> Result<Vec<(f64, T)>> {
    (0..config.restarts as u64)
        .into_par_iter()
        .map(|r| probe(&mut substream(config.seed ^ salt, r)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// Index of the largest value, lowest index on ties.
fn best_index<T>(results: &[(f64, T)]) -> usize {
    let mut best = 0;
    for (i, (v, _)) in results.iter().enumerate() {
        if *v > results[best].0 {
            best = i;
        }
    }
    best
}

fn history<T>(results: &[(f64, T)]) -> Vec<f64> {
    results.iter().map(|(v, _)| *v).collect()
}

fn as_state(instance: &ProtocolInstance, v: &ComplexVector) -> Result<AliceStrategy> {
    let dim_a = instance.psi().dim_a();
    Ok(AliceStrategy::new(
        BipartiteVector::new(dim_a, instance.dim(), v.clone())?.normalized()?,
    ))
}

/// `(I (x) sqrt E1)|psi_1>`: Alice's win amplitude is `<w|psi'>`.
fn alice_win_vector(instance: &ProtocolInstance) -> Result<ComplexVector> {
    Ok(instance
        .psi1()
        .apply_on_b(instance.sqrt_e1().matrix())?
        .amplitudes()
        .clone())
}

fn alice_value_grad(w: &ComplexVector) -> impl Fn(&ComplexVector) -> (f64, ComplexVector) + '_ {
    move |x| {
        let amp = w.dotc(x);
        (amp.norm_sqr(), w * amp)
    }
}

/// Maximizes Alice's winning probability over pure preparations on the unit sphere.
pub fn alice_oracle(instance: &ProtocolInstance, config: &OracleConfig) -> Result<OracleResult> {
    config.validate()?;
    let w = alice_win_vector(instance)?;
    let n = w.len();
    let results = run_restarts(config, ALICE_SALT, |rng| {
        let start = normalize(gaussian_vector(n, rng)).expect("nonzero Gaussian vector");
        let (x, _) = ascend(
            start,
            alice_value_grad(&w),
            |x, g, t| normalize(x + g * c(t, 0.0)),
            config,
            |_, _| {},
        );
        let strategy = as_state(instance, &x)?;
        Ok((evaluate_alice(instance, &strategy)?.p_win, strategy))
    })?;
    let (best_value, strategy) = results[best_index(&results)].clone();
    Ok(OracleResult {
        best_value,
        best_argument: OracleArgument::Alice(strategy),
        value_history: history(&results),
        closed_form_delta: best_value - p_a_max(instance),
        max_probe_catch: None,
    })
}

/// Maximizes Alice's winning probability over `alpha |n> + |chi>`, where
/// `|n> = (I (x) Pi_E1)|psi>` normalized and `|chi>` ranges over `H_A (x) ker E1`.
///
/// Every accepted iterate is evaluated exactly and its catch probability recorded.
pub fn alice_threshold_oracle(
    instance: &ProtocolInstance,
    config: &OracleConfig,
) -> Result<OracleResult> {
    config.validate()?;
    let d = instance.dim();
    let dim_a = instance.psi().dim_a();
    let pi_e1 = support_projector(instance.e1(), SUPPORT_CUTOFF)?;
    let n = instance.psi().apply_on_b(pi_e1.matrix())?;
    if n.norm_squared() <= SUPPORT_CUTOFF {
        return Err(Error::DegenerateInstance(format!(
            "|(I (x) Pi_E1)|psi>|^2 = {:e}: E1 vanishes on Bob's share",
            n.norm_squared()
        )));
    }
    let n_hat = n.amplitudes().unscale(n.norm_squared().sqrt());
    let kernel = ComplexMatrix::identity(d, d) - pi_e1.matrix();
    let manifold = ComplexMatrix::identity(dim_a, dim_a).kronecker(&kernel)
        + &n_hat * n_hat.adjoint();
    let w = alice_win_vector(instance)?;

    let results = run_restarts(config, ALICE_THRESH_SALT, |rng| {
        let start = loop {
            if let Some(v) = normalize(&manifold * gaussian_vector(dim_a * d, rng)) {
                break v;
            }
        };
        let mut max_catch: f64 = 0.0;
        let mut failure = None;
        let (x, _) = ascend(
            start,
            alice_value_grad(&w),
            |x, g, t| normalize(&manifold * (x + g * c(t, 0.0))),
            config,
            |x, _| match as_state(instance, x).and_then(|s| evaluate_alice(instance, &s)) {
                Ok(a) => max_catch = max_catch.max(a.p_caught),
                Err(e) => failure = Some(e),
            },
        );
        if let Some(e) = failure {
            return Err(e);
        }
        let strategy = as_state(instance, &x)?;
        Ok((evaluate_alice(instance, &strategy)?.p_win, (strategy, max_catch)))
    })?;
    let max_probe_catch = results.iter().map(|(_, (_, m))| *m).fold(0.0, f64::max);
    let (best_value, (strategy, _)) = results[best_index(&results)].clone();
    Ok(OracleResult {
        best_value,
        best_argument: OracleArgument::Alice(strategy),
        value_history: history(&results),
        closed_form_delta: best_value - p_a_thresh(instance)?,
        max_probe_catch: Some(max_probe_catch),
    })
}

/// `K` with `<psi_0|(I (x) M)|psi> = Tr(M K)`.
fn cross_matrix(instance: &ProtocolInstance) -> ComplexMatrix {
    instance.psi().coefficient_matrix().transpose() * instance.psi0().coefficient_matrix().conjugate()
}

/// Maximizes `|<psi_0|(I (x) U)|psi>|^2` over unitaries `U` on B, re-projecting
/// each step onto the unitary group by Newton polar iteration.
pub fn bob_unitary_oracle(instance: &ProtocolInstance, config: &OracleConfig) -> Result<OracleResult> {
    config.validate()?;
    let d = instance.dim();
    let k = cross_matrix(instance);
    let k_dag = k.adjoint();
    let value_grad = |u: &ComplexMatrix| {
        let t = (u * &k).trace();
        (t.norm_sqr(), &k_dag * t)
    };
    let single = |u: &ComplexMatrix| BobStrategy::new(vec![HermitianOperator::identity(d)], vec![u.clone()], &[0]);
    let results = run_restarts(config, BOB_UNITARY_SALT, |rng| {
        let (u, _) = ascend(
            random_unitary(d, rng),
            value_grad,
            |u, g, t| polar_unitary(&(u + g * c(t, 0.0))),
            config,
            |_, _| {},
        );
        let strategy = single(&u)?;
        Ok((evaluate_bob(instance, &strategy)?.p_win, strategy))
    })?;
    let (best_value, strategy) = results[best_index(&results)].clone();
    Ok(OracleResult {
        best_value,
        best_argument: OracleArgument::Bob(strategy),
        value_history: history(&results),
        closed_form_delta: best_value - p_b_max(instance),
        max_probe_catch: None,
    })
}

fn check_bob_scale(instance: &ProtocolInstance) -> Result<()> {
    if instance.dim() > MAX_BOB_DIM {
        return Err(Error::ScaleLimit(format!(
            "Bob dimension {} exceeds {MAX_BOB_DIM}",
            instance.dim()
        )));
    }
    Ok(())
}

fn split_kraus(v: &ComplexMatrix, outcomes: usize, d: usize) -> Vec<ComplexMatrix> {
    (0..outcomes).map(|k| v.rows(k * d, d).into_owned()).collect()
}

/// Joint ascent over `num_outcomes`-outcome measurements with corrections and
/// every announce-zero set.
///
/// The Kraus operators `M_k = U_k sqrt(E_k')` are stacked into an isometry
/// `V = [M_0; ...; M_{K-1}]`, so `sum_k M_k^dagger M_k = V^dagger V = I` holds
/// by construction; each step is re-projected to the nearest isometry.
pub fn bob_full_oracle(
    instance: &ProtocolInstance,
    config: &OracleConfig,
    num_outcomes: usize,
) -> Result<OracleResult> {
    config.validate()?;
    check_bob_scale(instance)?;
    if num_outcomes == 0 || num_outcomes > MAX_OUTCOMES {
        return Err(Error::ScaleLimit(format!(
            "num_outcomes = {num_outcomes} outside 1..={MAX_OUTCOMES}"
        )));
    }
    let d = instance.dim();
    let k = cross_matrix(instance);
    let k_dag = k.adjoint();
    let sets: Vec<Vec<usize>> = (1u32..1 << num_outcomes)
        .map(|mask| (0..num_outcomes).filter(|&i| mask >> i & 1 == 1).collect())
        .collect();

    let mut results = Vec::new();
    for (index, set) in sets.iter().enumerate() {
        let value_grad = |v: &ComplexMatrix| {
            let mut value = 0.0;
            let mut grad = ComplexMatrix::zeros(num_outcomes * d, d);
            for &o in set {
                let t = (v.rows(o * d, d) * &k).trace();
                value += t.norm_sqr();
                grad.rows_mut(o * d, d).copy_from(&(&k_dag * t));
            }
            (value, grad)
        };
        let salted = OracleConfig {
            seed: config.seed.wrapping_add(index as u64),
            ..*config
        };
        results.extend(run_restarts(&salted, BOB_FULL_SALT, |rng| {
            let start = loop {
                if let Some(v) = nearest_isometry(&gaussian_matrix(num_outcomes * d, d, rng)) {
                    break v;
                }
            };
            let (v, _) = ascend(
                start,
                value_grad,
                |v, g, t| nearest_isometry(&(v + g * c(t, 0.0))),
                config,
                |_, _| {},
            );
            let strategy = BobStrategy::from_kraus(&split_kraus(&v, num_outcomes, d), set)?;
            Ok((evaluate_bob(instance, &strategy)?.p_win, strategy))
        })?);
    }
    let (best_value, strategy) = results[best_index(&results)].clone();
    Ok(OracleResult {
        best_value,
        best_argument: OracleArgument::Bob(strategy),
        value_history: history(&results),
        closed_form_delta: best_value - p_b_max(instance),
        max_probe_catch: None,
    })
}

/// Basis `{Z_j}` of the operators `M` on B with `(I (x) M)|psi>` parallel to `|psi_0>`.
fn zero_catch_basis(instance: &ProtocolInstance) -> Result<Vec<ComplexMatrix>> {
    let d = instance.dim();
    let psi = instance.psi();
    let psi0 = instance.psi0().amplitudes();
    let rows = psi.amplitudes().len();
    let mut map = ComplexMatrix::zeros(rows, d * d);
    for r in 0..d {
        for s in 0..d {
            let mut unit = ComplexMatrix::zeros(d, d);
            unit[(r, s)] = c(1.0, 0.0);
            let y = psi.apply_on_b(&unit)?.amplitudes().clone();
            let off = &y - psi0 * psi0.dotc(&y);
            map.set_column(r * d + s, &off);
        }
    }
    let gram = HermitianOperator::symmetrized(map.adjoint() * &map);
    let eig = gram.eig();
    let scale = eig.max_eigenvalue().max(1.0);
    Ok((0..d * d)
        .filter(|&j| eig.eigenvalues[j] <= 1e-12 * scale)
        .map(|j| ComplexMatrix::from_column_slice(d, d, eig.eigenvector(j).as_slice()).transpose())
        .collect())
}

/// Maximizes Bob's winning probability over two zero-catch announce-zero
/// outcomes plus a completing announce-one outcome.
///
/// With `M_k = sum_j a_kj Z_j` in the zero-catch subspace, rescaling so that
/// `sum_k M_k^dagger M_k <= I` turns the objective into
/// `sum_k p_k / lambda_max(sum_k M_k^dagger M_k)`, maximized over `a` on the unit sphere.
pub fn bob_threshold_oracle(
    instance: &ProtocolInstance,
    config: &OracleConfig,
) -> Result<OracleResult> {
    config.validate()?;
    check_bob_scale(instance)?;
    const ZERO_OUTCOMES: usize = 2;
    let d = instance.dim();
    let basis = zero_catch_basis(instance)?;
    let n = basis.len();
    if n == 0 {
        return Err(Error::DegenerateInstance(
            "no operator maps |psi> onto |psi_0>".into(),
        ));
    }
    let images: Vec<ComplexVector> = basis
        .iter()
        .map(|z| instance.psi().apply_on_b(z).map(|v| v.amplitudes().clone()))
        .collect::<Result<_>>()?;
    let weight_gram = ComplexMatrix::from_fn(n, n, |j, l| images[j].dotc(&images[l]));

    let kraus_of = |a: &ComplexVector| -> Vec<ComplexMatrix> {
        (0..ZERO_OUTCOMES)
            .map(|k| {
                basis
                    .iter()
                    .enumerate()
                    .fold(ComplexMatrix::zeros(d, d), |m, (j, z)| m + z * a[k * n + j])
            })
            .collect()
    };
    let load = |kraus: &[ComplexMatrix]| {
        HermitianOperator::symmetrized(
            kraus
                .iter()
                .fold(ComplexMatrix::zeros(d, d), |s, m| s + m.adjoint() * m),
        )
    };
    let value_grad = |a: &ComplexVector| {
        let kraus = kraus_of(a);
        let eig = load(&kraus).eig();
        let lambda = eig.max_eigenvalue();
        let top = eig.eigenvector(d - 1);
        let weight = outcome_weight(&weight_gram, a, n, ZERO_OUTCOMES);
        let mut grad = ComplexVector::zeros(ZERO_OUTCOMES * n);
        for (k, m) in kraus.iter().enumerate() {
            let g_a = &weight_gram * a.rows(k * n, n);
            let mv = m * &top;
            for j in 0..n {
                let h = (&basis[j] * &top).dotc(&mv);
                grad[k * n + j] = g_a[j] / lambda - h * (weight / (lambda * lambda));
            }
        }
        (weight / lambda, grad)
    };
    let strategy_of = |a: &ComplexVector| -> Result<BobStrategy> {
        let mut kraus = kraus_of(a);
        let lambda = load(&kraus).eig().max_eigenvalue();
        for m in kraus.iter_mut() {
            *m = m.unscale(lambda.sqrt());
        }
        let rest = load(&kraus).complement();
        let completing = psd_sqrt(&rest.eig().map(|x| x.max(0.0)))?;
        kraus.push(completing.into_matrix());
        BobStrategy::from_kraus(&kraus, &[0, 1])
    };

    let results = run_restarts(config, BOB_THRESH_SALT, |rng| {
        let start =
            normalize(gaussian_vector(ZERO_OUTCOMES * n, rng)).expect("nonzero Gaussian vector");
        let (a, _) = ascend(
            start,
            value_grad,
            |a, g, t| normalize(a + g * c(t, 0.0)),
            config,
            |_, _| {},
        );
        let strategy = strategy_of(&a)?;
        let assessment = evaluate_bob(instance, &strategy)?;
        // Probes that leak catch probability are discarded.
        let value = if assessment.p_caught <= ZERO_CATCH_TOL {
            assessment.p_win
        } else {
            0.0
        };
        Ok((value, (strategy, assessment.p_caught)))
    })?;
    let max_probe_catch = results.iter().map(|(_, (_, m))| *m).fold(0.0, f64::max);
    let (best_value, (strategy, _)) = results[best_index(&results)].clone();
    Ok(OracleResult {
        best_value,
        best_argument: OracleArgument::Bob(strategy),
        value_history: history(&results),
        closed_form_delta: best_value - p_b_thresh(instance)?,
        max_probe_catch: Some(max_probe_catch),
    })
}

/// `sum_k a_k^dagger G a_k`: total probability of the zero-catch outcomes before rescaling.
fn outcome_weight(gram: &ComplexMatrix, a: &ComplexVector, n: usize, outcomes: usize) -> f64 {
    (0..outcomes)
        .map(|k| {
            let a_k = a.rows(k * n, n);
            a_k.dotc(&(gram * a_k)).re
        })
        .sum()
}

/// Largest mixed-preparation winning probability over `probes` convex mixtures
/// of the best ascent state with random pure states, evaluated by linearity.
pub fn alice_mixture_probe(
    instance: &ProtocolInstance,
    config: &OracleConfig,
    probes: usize,
) -> Result<f64> {
    let best = match alice_oracle(instance, config)?.best_argument {
        OracleArgument::Alice(s) => s,
        OracleArgument::Bob(_) => unreachable!("alice_oracle returns an Alice strategy"),
    };
    let p_best = evaluate_alice(instance, &best)?.p_win;
    let mut rng = substream(config.seed ^ ALICE_SALT, u64::MAX);
    let mut max: f64 = 0.0;
    for _ in 0..probes {
        let other = AliceStrategy::new(random_state(best.prepared_state().dim_a(), instance.dim(), &mut rng));
        let p_other = evaluate_alice(instance, &other)?.p_win;
        let weight: f64 = rng.random();
        max = max.max(weight * p_best + (1.0 - weight) * p_other);
    }
    Ok(max)
}

/// Largest `max |LHS - RHS|` of the Schmidt-equivalence identity over `trials`
/// random full-Schmidt-rank states and random PSD operators.
pub fn lemma_check(dim: usize, trials: usize, seed: u64) -> Result<f64> {
    if dim < 2 {
        return Err(Error::OutOfRange {
            parameter: "dim",
            value: dim as f64,
            interval: "[2, inf)",
        });
    }
    let residuals: Vec<Result<f64>> = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = substream(seed, t);
            let phi = random_state(dim, dim, &mut rng);
            let e = random_psd(dim, &mut rng);
            let e = e.scale(1.0 / e.eig().max_eigenvalue());
            let (lhs, rhs) = lemma_lhs_rhs(&phi, &e)?;
            Ok(max_abs_diff(lhs.matrix(), rhs.matrix()))
        })
        .collect();
    residuals
        .into_iter()
        .try_fold(0.0f64, |m, r| Ok(m.max(r?)))
}

/// One outcome of a Monte Carlo run compared with its exact probability.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FrequencyRow {
    pub outcome: Outcome,
    pub count: u64,
    pub frequency: f64,
    pub probability: f64,
    /// `(count - n p) / sqrt(n p (1 - p))`; for `p` in `{0, 1}` it is 0 on an
    /// exact match and infinite otherwise.
    pub z_score: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarloReport {
    pub trials: u64,
    pub seed: u64,
    pub rows: Vec<FrequencyRow>,
    pub false_accusations: u64,
    pub false_accusation_probability: f64,
}

impl MonteCarloReport {
    pub fn row(&self, outcome: Outcome) -> &FrequencyRow {
        &self.rows[outcome.index()]
    }

    pub fn max_abs_z(&self) -> f64 {
        self.rows.iter().map(|r| r.z_score.abs()).fold(0.0, f64::max)
    }
}

fn z_score(count: u64, trials: u64, p: f64) -> f64 {
    let n = trials as f64;
    let variance = n * p * (1.0 - p);
    let diff = count as f64 - n * p;
    if variance > 0.0 {
        diff / variance.sqrt()
    } else if diff.abs() < 0.5 {
        0.0
    } else {
        diff.signum() * f64::INFINITY
    }
}

/// Sampled frequencies next to the exact outcome distribution, for any `trials >= 1`.
pub fn frequency_table(
    instance: &ProtocolInstance,
    alice: &AlicePlay,
    bob: &BobPlay,
    trials: u64,
    seed: u64,
) -> Result<MonteCarloReport> {
    if trials == 0 {
        return Err(Error::OutOfRange {
            parameter: "trials",
            value: 0.0,
            interval: "[1, inf)",
        });
    }
    let exact = outcome_distribution(instance, alice, bob)?;
    let counts = simulate(instance, alice, bob, trials, seed)?;
    let rows = Outcome::ALL
        .iter()
        .map(|&outcome| {
            let count = counts.get(outcome);
            let probability = exact.get(outcome);
            FrequencyRow {
                outcome,
                count,
                frequency: count as f64 / trials as f64,
                probability,
                z_score: z_score(count, trials, probability),
            }
        })
        .collect();
    Ok(MonteCarloReport {
        trials,
        seed,
        rows,
        false_accusations: counts.false_accusations,
        false_accusation_probability: exact.false_accusation,
    })
}

/// [`frequency_table`] restricted to runs large enough for the z-scores to be meaningful.
pub fn monte_carlo_agreement(
    instance: &ProtocolInstance,
    alice: &AlicePlay,
    bob: &BobPlay,
    trials: u64,
    seed: u64,
) -> Result<MonteCarloReport> {
    if trials < 1000 {
        return Err(Error::OutOfRange {
            parameter: "trials",
            value: trials as f64,
            interval: "[1000, inf)",
        });
    }
    frequency_table(instance, alice, bob, trials, seed)
}
