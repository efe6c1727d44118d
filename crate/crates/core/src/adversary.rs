//! Security figures, the optimal and zero-risk cheating strategies that attain
//! them, and exact evaluators for arbitrary cheating strategies.
//!
//! | figure      | closed form                         |
//! |-------------|-------------------------------------|
//! | `P_A^max`   | `2 Tr(rho E0^2)`                    |
//! | `P_A^thresh`| `1 / (2 Tr(rho Pi_{I-E0}))`         |
//! | `P_B^max`   | `2 (Tr sqrt(rho E0 rho))^2`         |
//! | `P_B^thresh`| `1 / (2 lambda_max(Pi_rho E0 Pi_rho))` |
//!
//! `Pi_X` is the projector onto the support of `X`. A threshold is the best
//! winning probability reachable with zero probability of being caught.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    fidelity, lambda_max, max_abs_diff, psd_sqrt, support_projector, trace_norm,
    unitarity_residual, BipartitePureState, BipartiteVector, ComplexMatrix, HermitianOperator,
    SUPPORT_CUTOFF,
};
use crate::protocol::ProtocolInstance;
use nalgebra::SVD;

/// Tolerance for POVM completeness and unitarity of a [`BobStrategy`].
pub const STRATEGY_TOL: f64 = 1e-9;

/// A cheating Alice prepares `|psi'>` instead of `|psi>`.
#[derive(Clone, Debug)]
pub struct AliceStrategy {
    prepared_state: BipartitePureState,
}

impl AliceStrategy {
    pub fn new(prepared_state: BipartitePureState) -> Self {
        Self { prepared_state }
    }

    pub fn honest(instance: &ProtocolInstance) -> Self {
        Self::new(instance.psi().clone())
    }

    pub fn prepared_state(&self) -> &BipartitePureState {
        &self.prepared_state
    }
}

/// A cheating Bob measures `{E_k'}` on B, applies `U_k` on outcome `k`, and
/// announces `b = 0` exactly when `k` is in the announce-zero set.
#[derive(Clone, Debug)]
pub struct BobStrategy {
    povm: Vec<HermitianOperator>,
    unitaries: Vec<ComplexMatrix>,
    announce_zero: Vec<bool>,
    kraus: Vec<ComplexMatrix>,
}

impl BobStrategy {
    pub fn new(
        povm: Vec<HermitianOperator>,
        unitaries: Vec<ComplexMatrix>,
        announce_zero_set: &[usize],
    ) -> Result<Self> {
        let n = povm.len();
        if n == 0 {
            return Err(Error::InvalidStrategy("empty POVM".into()));
        }
        if unitaries.len() != n {
            return Err(Error::InvalidStrategy(format!(
                "{} POVM elements but {} unitaries",
                n,
                unitaries.len()
            )));
        }
        let dim = povm[0].dim();
        let mut total = ComplexMatrix::zeros(dim, dim);
        let mut kraus = Vec::with_capacity(n);
        for (k, (e, u)) in povm.iter().zip(&unitaries).enumerate() {
            if e.dim() != dim || u.nrows() != dim || u.ncols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: e.dim().max(u.nrows()),
                });
            }
            let eig = e.eig();
            if eig.min_eigenvalue() < -STRATEGY_TOL {
                return Err(Error::InvalidStrategy(format!(
                    "POVM element {k} has eigenvalue {:e}",
                    eig.min_eigenvalue()
                )));
            }
            let residual = unitarity_residual(u);
            if residual > STRATEGY_TOL {
                return Err(Error::InvalidStrategy(format!(
                    "U_{k} is not unitary (residual {residual:e})"
                )));
            }
            total += e.matrix();
            let root = eig.map(|x| x.max(0.0).sqrt());
            kraus.push(u * root.matrix());
        }
        let residual = max_abs_diff(&total, &ComplexMatrix::identity(dim, dim));
        if residual > STRATEGY_TOL {
            return Err(Error::InvalidStrategy(format!(
                "POVM incomplete (residual {residual:e})"
            )));
        }
        let mut announce_zero = vec![false; n];
        for &k in announce_zero_set {
            if k >= n {
                return Err(Error::InvalidStrategy(format!(
                    "announce-zero index {k} out of range for {n} outcomes"
                )));
            }
            announce_zero[k] = true;
        }
        Ok(Self {
            povm,
            unitaries,
            announce_zero,
            kraus,
        })
    }

    /// Strategy with Kraus operators `M_k`: `E_k' = M_k^dagger M_k` and `U_k` the
    /// polar factor of `M_k`, so that `U_k sqrt(E_k') = M_k`.
    pub fn from_kraus(kraus: &[ComplexMatrix], announce_zero_set: &[usize]) -> Result<Self> {
        let mut povm = Vec::with_capacity(kraus.len());
        let mut unitaries = Vec::with_capacity(kraus.len());
        for m in kraus {
            if m.nrows() != m.ncols() {
                return Err(Error::NotSquare {
                    rows: m.nrows(),
                    cols: m.ncols(),
                });
            }
            povm.push(HermitianOperator::symmetrized(m.adjoint() * m));
            let svd = SVD::new(m.clone(), true, true);
            unitaries.push(svd.u.expect("requested U") * svd.v_t.expect("requested V^dagger"));
        }
        Self::new(povm, unitaries, announce_zero_set)
    }

    /// The honest measurement `{E0, E1}` with no correction, announcing the result.
    pub fn honest(instance: &ProtocolInstance) -> Self {
        let d = instance.dim();
        Self::new(
            vec![instance.e0().clone(), instance.e1().clone()],
            vec![ComplexMatrix::identity(d, d), ComplexMatrix::identity(d, d)],
            &[0],
        )
        .expect("honest POVM is complete")
    }

    pub fn dim(&self) -> usize {
        self.povm[0].dim()
    }

    pub fn povm(&self) -> &[HermitianOperator] {
        &self.povm
    }

    pub fn unitaries(&self) -> &[ComplexMatrix] {
        &self.unitaries
    }

    pub fn announce_zero_set(&self) -> Vec<usize> {
        (0..self.announce_zero.len())
            .filter(|&k| self.announce_zero[k])
            .collect()
    }

    pub fn announces_zero(&self, outcome: usize) -> bool {
        self.announce_zero[outcome]
    }

    /// `U_k sqrt(E_k')` for each outcome.
    pub fn kraus_operators(&self) -> &[ComplexMatrix] {
        &self.kraus
    }
}

/// Exact probabilities of one party's cheating strategy against an honest opponent.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StrategyAssessment {
    pub p_win: f64,
    pub p_caught: f64,
    pub p_opponent_wins: f64,
    /// Cheating Alice only: her own `b = 0` test rejects an honest Bob.
    pub p_false_accusation: f64,
}

impl StrategyAssessment {
    pub fn total(&self) -> f64 {
        self.p_win + self.p_caught + self.p_opponent_wins + self.p_false_accusation
    }
}

/// The four figures plus biases and the trade-off product.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SecurityReport {
    pub p_a_max: f64,
    pub p_a_thresh: f64,
    pub p_b_max: f64,
    pub p_b_thresh: f64,
    pub epsilon_a: f64,
    pub epsilon_b: f64,
    pub tradeoff_product: f64,
}

impl SecurityReport {
    /// `1/2 <= thresh <= max <= 1` for both parties, within `tol`.
    pub fn is_ordered(&self, tol: f64) -> bool {
        [(self.p_a_thresh, self.p_a_max), (self.p_b_thresh, self.p_b_max)]
            .iter()
            .all(|&(t, m)| 0.5 - tol <= t && t <= m + tol && m <= 1.0 + tol)
    }
}

/// `2 Tr(rho E0^2)`.
pub fn p_a_max(instance: &ProtocolInstance) -> f64 {
    let e0 = instance.e0().matrix();
    2.0 * (instance.rho().matrix() * e0 * e0).trace().re
}

fn alice_kernel_weight(instance: &ProtocolInstance) -> Result<f64> {
    let pi_e1 = support_projector(instance.e1(), SUPPORT_CUTOFF)?;
    let weight = instance.rho().trace_product(&pi_e1);
    if weight <= SUPPORT_CUTOFF {
        return Err(Error::DegenerateInstance(format!(
            "Tr(rho Pi_E1) = {weight:e}: Alice never reaches b = 1"
        )));
    }
    Ok(weight)
}

/// `1 / (2 Tr(rho Pi_{I - E0}))`.
pub fn p_a_thresh(instance: &ProtocolInstance) -> Result<f64> {
    Ok(1.0 / (2.0 * alice_kernel_weight(instance)?))
}

/// `2 (Tr sqrt(rho E0 rho))^2`.
pub fn p_b_max(instance: &ProtocolInstance) -> f64 {
    let rho_e0_rho = instance.e0().conjugate_by(instance.rho().matrix());
    let root = psd_sqrt(&rho_e0_rho).unwrap_or_else(|_| {
        // rho E0 rho is PSD by construction
        rho_e0_rho.eig().map(|x| x.max(0.0).sqrt())
    });
    2.0 * root.trace().powi(2)
}

/// `F(2 sqrt(rho) E0 sqrt(rho), rho)^2`, the fidelity form of `P_B^max`.
pub fn p_b_max_via_fidelity(instance: &ProtocolInstance) -> Result<f64> {
    let sqrt_rho = psd_sqrt(instance.rho())?;
    let sigma0 = instance.e0().conjugate_by(sqrt_rho.matrix()).scale(2.0);
    Ok(fidelity(&sigma0, instance.rho())?.powi(2))
}

fn bob_support_lambda(instance: &ProtocolInstance) -> Result<(HermitianOperator, f64)> {
    let pi_rho = support_projector(instance.rho(), SUPPORT_CUTOFF)?;
    let compressed = instance.e0().conjugate_by(pi_rho.matrix());
    let lambda = lambda_max(&compressed);
    if lambda <= SUPPORT_CUTOFF {
        return Err(Error::DegenerateInstance(format!(
            "lambda_max(Pi_rho E0 Pi_rho) = {lambda:e}: E0 vanishes on the support of rho"
        )));
    }
    Ok((compressed, lambda))
}

/// `1 / (2 lambda_max(Pi_rho E0 Pi_rho))`.
pub fn p_b_thresh(instance: &ProtocolInstance) -> Result<f64> {
    Ok(1.0 / (2.0 * bob_support_lambda(instance)?.1))
}

pub fn security_report(instance: &ProtocolInstance) -> Result<SecurityReport> {
    let p_a_max = p_a_max(instance);
    let p_b_max = p_b_max(instance);
    Ok(SecurityReport {
        p_a_max,
        p_a_thresh: p_a_thresh(instance)?,
        p_b_max,
        p_b_thresh: p_b_thresh(instance)?,
        epsilon_a: p_a_max - 0.5,
        epsilon_b: p_b_max - 0.5,
        tradeoff_product: p_a_max * p_b_max,
    })
}

/// `(I (x) sqrt E1)|psi_1>`, normalized: the state Alice submits to maximize her win.
pub fn optimal_alice_state(instance: &ProtocolInstance) -> Result<AliceStrategy> {
    let target = instance.psi1().apply_on_b(instance.sqrt_e1().matrix())?;
    let weight = target.norm_squared();
    if weight <= SUPPORT_CUTOFF {
        return Err(Error::DegenerateInstance(format!(
            "<psi_1|I (x) E1|psi_1> = {weight:e}"
        )));
    }
    Ok(AliceStrategy::new(target.normalized()?))
}

/// `(I (x) Pi_E1)|psi>`, normalized: the best state that always passes Bob's test.
pub fn threshold_alice_state(instance: &ProtocolInstance) -> Result<AliceStrategy> {
    alice_kernel_weight(instance)?;
    let pi_e1 = support_projector(instance.e1(), SUPPORT_CUTOFF)?;
    let projected = instance.psi().apply_on_b(pi_e1.matrix())?;
    Ok(AliceStrategy::new(projected.normalized()?))
}

/// The unitary `U` on B maximizing `|<to|(I (x) U)|from>|`.
///
/// With `K[n, m] = <to|(I (x) |m><n|)|from>` one has `<to|(I (x) U)|from> = Tr(U K)`;
/// for `K = P S Q^dagger` the maximizer is `U = Q P^dagger` with value `Tr S`.
pub fn uhlmann_unitary(from: &BipartiteVector, to: &BipartiteVector) -> ComplexMatrix {
    let k = from.coefficient_matrix().transpose() * to.coefficient_matrix().conjugate();
    let svd = SVD::new(k, true, true);
    let p = svd.u.expect("requested U");
    let q = svd.v_t.expect("requested V^dagger").adjoint();
    q * p.adjoint()
}

/// No measurement, announce `b = 0`, and rotate B by the Uhlmann unitary taking
/// `|psi>` closest to `|psi_0>`.
pub fn optimal_bob_strategy(instance: &ProtocolInstance) -> BobStrategy {
    let d = instance.dim();
    let u = uhlmann_unitary(instance.psi(), instance.psi0());
    BobStrategy::new(vec![HermitianOperator::identity(d)], vec![u], &[0])
        .expect("single-outcome strategy is valid")
}

/// `{E0', I - E0'}` with `E0' = Pi_rho E0 Pi_rho / lambda_max(Pi_rho E0 Pi_rho)`,
/// announcing `b = 0` on `E0'`.
///
/// `U_0` is the identity when that already reproduces `|psi_0>`; otherwise (a
/// rank-deficient `rho` whose support `E0` does not preserve) it is the Uhlmann
/// unitary between the post-measurement state and `|psi_0>`.
pub fn threshold_bob_strategy(instance: &ProtocolInstance) -> Result<BobStrategy> {
    let d = instance.dim();
    let (compressed, lambda) = bob_support_lambda(instance)?;
    let e0_prime = compressed.scale(1.0 / lambda);
    let e1_prime = e0_prime.complement();
    let identity = ComplexMatrix::identity(d, d);
    let plain = BobStrategy::new(
        vec![e0_prime.clone(), e1_prime.clone()],
        vec![identity.clone(), identity.clone()],
        &[0],
    )?;
    if evaluate_bob(instance, &plain)?.p_caught <= 1e-13 {
        return Ok(plain);
    }
    let post = instance.psi().apply_on_b(&plain.kraus_operators()[0])?;
    let u0 = uhlmann_unitary(&post, instance.psi0());
    BobStrategy::new(vec![e0_prime, e1_prime], vec![u0, identity], &[0])
}

fn check_alice_dims(instance: &ProtocolInstance, state: &BipartitePureState) -> Result<()> {
    if state.dim_a() != instance.psi().dim_a() || state.dim_b() != instance.dim() {
        return Err(Error::DimensionMismatch {
            expected: instance.psi().amplitudes().len(),
            found: state.amplitudes().len(),
        });
    }
    Ok(())
}

/// Cheating Alice against honest Bob.
///
/// `p_win = |<psi_1|(I (x) sqrt E1)|psi'>|^2`; the rest of the `b = 1` branch is
/// caught. On `b = 0` Alice runs her usual test against `|psi_0>`, and a failure
/// is a false accusation of an honest Bob.
pub fn evaluate_alice(instance: &ProtocolInstance, strategy: &AliceStrategy) -> Result<StrategyAssessment> {
    let state = strategy.prepared_state();
    check_alice_dims(instance, state)?;
    let v1 = state.apply_on_b(instance.sqrt_e1().matrix())?;
    let p_win = instance.psi1().inner(&v1).norm_sqr();
    let v0 = state.apply_on_b(instance.sqrt_e0().matrix())?;
    let p_opponent_wins = instance.psi0().inner(&v0).norm_sqr();
    Ok(StrategyAssessment {
        p_win,
        p_caught: (v1.norm_squared() - p_win).max(0.0),
        p_opponent_wins,
        p_false_accusation: (v0.norm_squared() - p_opponent_wins).max(0.0),
    })
}

/// Cheating Bob against honest Alice.
///
/// `p_win = sum_{k in S0} |<psi_0|(I (x) U_k sqrt E_k')|psi>|^2`; announcing
/// `b = 1` concedes the flip to Alice.
pub fn evaluate_bob(instance: &ProtocolInstance, strategy: &BobStrategy) -> Result<StrategyAssessment> {
    if strategy.dim() != instance.dim() {
        return Err(Error::DimensionMismatch {
            expected: instance.dim(),
            found: strategy.dim(),
        });
    }
    let mut a = StrategyAssessment {
        p_win: 0.0,
        p_caught: 0.0,
        p_opponent_wins: 0.0,
        p_false_accusation: 0.0,
    };
    for (k, kraus) in strategy.kraus_operators().iter().enumerate() {
        let v = instance.psi().apply_on_b(kraus)?;
        let p_k = v.norm_squared();
        if strategy.announces_zero(k) {
            let pass = instance.psi0().inner(&v).norm_sqr();
            a.p_win += pass;
            a.p_caught += (p_k - pass).max(0.0);
        } else {
            a.p_opponent_wins += p_k;
        }
    }
    Ok(a)
}

/// `Tr S` of the cross matrix between `|psi>` and `|psi_0>`; equals `F(sigma_0, sigma)`.
pub fn uhlmann_overlap(instance: &ProtocolInstance) -> f64 {
    let k = instance.psi().coefficient_matrix().transpose()
        * instance.psi0().coefficient_matrix().conjugate();
    trace_norm(&k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::{family_one, family_two};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn both_party() -> ProtocolInstance {
        ProtocolInstance::new(
            HermitianOperator::diagonal(&[0.5, 0.5]),
            HermitianOperator::diagonal(&[0.75, 0.25]),
        )
        .unwrap()
    }

    fn half_identity() -> ProtocolInstance {
        ProtocolInstance::new(
            HermitianOperator::diagonal(&[0.5, 0.5]),
            HermitianOperator::diagonal(&[0.5, 0.5]),
        )
        .unwrap()
    }

    const SQRT3: f64 = 1.7320508075688772;

    #[test]
    fn p_a_max_examples() {
        assert!((p_a_max(&both_party()) - 0.625).abs() < 1e-12);
        assert!((p_a_max(&family_one(0.75).unwrap()) - 2.0 / 3.0).abs() < 1e-12);
        // projector E0
        assert!((p_a_max(&family_two(0.5).unwrap()) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn p_a_thresh_examples() {
        assert!((p_a_thresh(&both_party()).unwrap() - 0.5).abs() < 1e-12);
        let f2 = family_two(0.75).unwrap();
        assert!((p_a_thresh(&f2).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!((p_a_thresh(&f2).unwrap() - p_a_max(&f2)).abs() < 1e-12);
        for x in [0.6, 0.75, 0.9, 1.0] {
            assert!((p_a_thresh(&family_one(x).unwrap()).unwrap() - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn p_b_max_examples() {
        assert!((p_b_max(&both_party()) - (0.5 + SQRT3 / 4.0)).abs() < 1e-12);
        assert!((p_b_max(&family_one(0.75).unwrap()) - 0.75).abs() < 1e-12);
        assert!((p_b_max(&half_identity()) - 1.0).abs() < 1e-12);
        for inst in [both_party(), family_one(0.75).unwrap(), family_two(0.6).unwrap()] {
            assert!((p_b_max(&inst) - p_b_max_via_fidelity(&inst).unwrap()).abs() < 1e-9);
        }
    }

    #[test]
    fn p_b_thresh_examples() {
        assert!((p_b_thresh(&both_party()).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        for x in [0.5, 0.7, 0.95] {
            assert!((p_b_thresh(&family_two(x).unwrap()).unwrap() - 0.5).abs() < 1e-12);
        }
        let f1 = family_one(0.75).unwrap();
        assert!((p_b_thresh(&f1).unwrap() - 0.75).abs() < 1e-12);
    }

    #[test]
    fn optimal_alice_examples() {
        let inst = both_party();
        let a = evaluate_alice(&inst, &optimal_alice_state(&inst).unwrap()).unwrap();
        assert!((a.p_win - 0.625).abs() < 1e-12);
        assert!((a.total() - 1.0).abs() < 1e-12);

        let inst = half_identity();
        let s = optimal_alice_state(&inst).unwrap();
        assert!((s.prepared_state().inner(inst.psi()).norm() - 1.0).abs() < 1e-12);
        assert!((evaluate_alice(&inst, &s).unwrap().p_win - 0.5).abs() < 1e-12);

        let inst = family_two(0.5).unwrap();
        let a = evaluate_alice(&inst, &optimal_alice_state(&inst).unwrap()).unwrap();
        assert!((a.p_win - 1.0).abs() < 1e-12);
    }

    #[test]
    fn threshold_alice_examples() {
        let inst = half_identity();
        let s = threshold_alice_state(&inst).unwrap();
        assert!((s.prepared_state().inner(inst.psi()).norm() - 1.0).abs() < 1e-12);

        for (inst, expected) in [(family_two(0.75).unwrap(), 2.0 / 3.0), (both_party(), 0.5)] {
            let a = evaluate_alice(&inst, &threshold_alice_state(&inst).unwrap()).unwrap();
            assert!(a.p_caught <= 1e-12);
            assert!((a.p_win - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn optimal_bob_examples() {
        for (inst, expected) in [
            (both_party(), 0.5 + SQRT3 / 4.0),
            (half_identity(), 1.0),
            (family_one(FRAC_1_SQRT_2).unwrap(), FRAC_1_SQRT_2),
        ] {
            let b = evaluate_bob(&inst, &optimal_bob_strategy(&inst)).unwrap();
            assert!((b.p_win - expected).abs() < 1e-9);
            assert!((b.total() - 1.0).abs() < 1e-12);
        }
        let inst = half_identity();
        let strategy = optimal_bob_strategy(&inst);
        assert!(max_abs_diff(&strategy.unitaries()[0], &ComplexMatrix::identity(2, 2)) < 1e-12);
    }

    #[test]
    fn threshold_bob_examples() {
        let inst = both_party();
        let s = threshold_bob_strategy(&inst).unwrap();
        let expected = HermitianOperator::diagonal(&[1.0, 1.0 / 3.0]);
        assert!(max_abs_diff(s.povm()[0].matrix(), expected.matrix()) < 1e-12);
        let b = evaluate_bob(&inst, &s).unwrap();
        assert!((b.p_win - 2.0 / 3.0).abs() < 1e-12);
        assert!(b.p_caught <= 1e-12);

        for x in [0.5, 0.8] {
            let inst = family_two(x).unwrap();
            let b = evaluate_bob(&inst, &threshold_bob_strategy(&inst).unwrap()).unwrap();
            assert!((b.p_win - 0.5).abs() < 1e-12 && b.p_caught <= 1e-12);
        }
        let inst = family_one(1.0).unwrap();
        let b = evaluate_bob(&inst, &threshold_bob_strategy(&inst).unwrap()).unwrap();
        assert!((b.p_win - 1.0).abs() < 1e-12 && b.p_caught <= 1e-12);
    }

    #[test]
    fn threshold_bob_needs_rotation_on_rank_deficient_rho() {
        // rho = |0><0|; E0 has <0|E0|0> = 1/2 but mixes |0> and |1>.
        let inst = ProtocolInstance::new(
            HermitianOperator::diagonal(&[1.0, 0.0]),
            HermitianOperator::from_real_rows(2, &[0.5, 0.3, 0.3, 0.5]).unwrap(),
        )
        .unwrap();
        let s = threshold_bob_strategy(&inst).unwrap();
        assert!(max_abs_diff(&s.unitaries()[0], &ComplexMatrix::identity(2, 2)) > 1e-3);
        let b = evaluate_bob(&inst, &s).unwrap();
        assert!(b.p_caught <= 1e-12);
        assert!((b.p_win - p_b_thresh(&inst).unwrap()).abs() < 1e-12);
        assert!((b.p_win - 1.0).abs() < 1e-12);
    }

    #[test]
    fn honest_strategies_are_neutral() {
        let inst = both_party();
        let a = evaluate_alice(&inst, &AliceStrategy::honest(&inst)).unwrap();
        assert!((a.p_win - 0.5).abs() < 1e-12 && a.p_caught < 1e-12 && a.p_false_accusation < 1e-12);
        let b = evaluate_bob(&inst, &BobStrategy::honest(&inst)).unwrap();
        assert!((b.p_win - 0.5).abs() < 1e-12 && b.p_caught < 1e-12);
        assert!((b.p_opponent_wins - 0.5).abs() < 1e-12);
    }

    #[test]
    fn security_report_examples() {
        let r = security_report(&family_one(FRAC_1_SQRT_2).unwrap()).unwrap();
        let eps = (2f64.sqrt() - 1.0) / 2.0;
        assert!((r.epsilon_a - eps).abs() < 1e-9 && (r.epsilon_b - eps).abs() < 1e-9);
        assert!((r.tradeoff_product - 0.5).abs() < 1e-9);
        let r = security_report(&both_party()).unwrap();
        assert!((r.p_a_max - 0.625).abs() < 1e-9);
        assert!((r.p_a_thresh - 0.5).abs() < 1e-9);
        assert!((r.p_b_max - 0.5 - SQRT3 / 4.0).abs() < 1e-9);
        assert!((r.p_b_thresh - 2.0 / 3.0).abs() < 1e-9);
        assert!(r.is_ordered(1e-9));
        let r = security_report(&family_one(0.9).unwrap()).unwrap();
        assert!((r.tradeoff_product - 0.5).abs() < 1e-9);
    }

    #[test]
    fn bob_strategy_validation() {
        let d = 2;
        let id = ComplexMatrix::identity(d, d);
        let half = HermitianOperator::diagonal(&[0.5, 0.5]);
        assert!(BobStrategy::new(vec![half.clone()], vec![id.clone()], &[0]).is_err());
        assert!(BobStrategy::new(vec![half.clone(), half.clone()], vec![id.clone()], &[0]).is_err());
        let not_unitary = id.scale(2.0);
        assert!(BobStrategy::new(vec![HermitianOperator::identity(2)], vec![not_unitary], &[0]).is_err());
        assert!(BobStrategy::new(vec![HermitianOperator::identity(2)], vec![id.clone()], &[1]).is_err());
        let negative = HermitianOperator::diagonal(&[1.5, -0.5]);
        let rest = HermitianOperator::diagonal(&[-0.5, 1.5]);
        assert!(BobStrategy::new(vec![negative, rest], vec![id.clone(), id], &[0]).is_err());
    }

    #[test]
    fn from_kraus_reproduces_operators() {
        let inst = both_party();
        let honest = BobStrategy::honest(&inst);
        let rebuilt = BobStrategy::from_kraus(honest.kraus_operators(), &[0]).unwrap();
        for (a, b) in honest.kraus_operators().iter().zip(rebuilt.kraus_operators()) {
            assert!(max_abs_diff(a, b) < 1e-12);
        }
        let half = ComplexMatrix::identity(2, 2).scale(0.5);
        assert!(BobStrategy::from_kraus(&[half], &[0]).is_err());
    }

    #[test]
    fn uhlmann_overlap_matches_fidelity() {
        for inst in [both_party(), family_two(0.6).unwrap()] {
            let f = fidelity(&inst.psi0().partial_trace_b(), inst.sigma()).unwrap();
            assert!((uhlmann_overlap(&inst) - f).abs() < 1e-9);
        }
    }
}
