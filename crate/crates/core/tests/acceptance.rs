//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::f64::consts::FRAC_1_SQRT_2;
use std::time::{Duration, Instant};

use common::{both_party, family_two_p_b_max, random_instances, SQRT3};
use wcf::oracle::{
    alice_oracle, alice_threshold_oracle, bob_threshold_oracle, bob_unitary_oracle, lemma_check,
    monte_carlo_agreement, OracleConfig,
};
use wcf::protocol::Tolerances;
use wcf::random::{random_purification, substream};
use wcf::{
    evaluate_alice, evaluate_bob, family_one, family_two, optimal_alice_state,
    optimal_bob_strategy, p_a_max, p_a_thresh, p_b_max, p_b_thresh, security_report,
    threshold_alice_state, threshold_bob_strategy, AlicePlay, BobPlay, Outcome, ProtocolInstance,
};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn timed(limit: Option<Duration>, check: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let mut v = check();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            v.pass = false;
        }
        v.detail = format!("{}; {:.2?} (limit {:?})", v.detail, elapsed, limit);
    } else {
        v.detail = format!("{}; {:.2?}", v.detail, elapsed);
    }
    v
}

fn both_party_example() -> Verdict {
    let r = security_report(&both_party()).unwrap();
    let expected = [0.625, 0.5, 0.5 + SQRT3 / 4.0, 2.0 / 3.0];
    let got = [r.p_a_max, r.p_a_thresh, r.p_b_max, r.p_b_thresh];
    let err = got
        .iter()
        .zip(expected)
        .map(|(g, e)| (g - e).abs())
        .fold(0.0, f64::max);
    verdict(err <= 1e-9, format!("figures {got:?}, max error {err:.1e}"))
}

fn fair_protocol() -> Verdict {
    let r = security_report(&family_one(FRAC_1_SQRT_2).unwrap()).unwrap();
    let eps = (2f64.sqrt() - 1.0) / 2.0;
    let err = [
        (r.p_a_max - FRAC_1_SQRT_2).abs(),
        (r.p_b_max - FRAC_1_SQRT_2).abs(),
        (r.epsilon_a - eps).abs(),
        (r.epsilon_b - eps).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    verdict(
        err <= 1e-9,
        format!("eps_A {:.12}, eps_B {:.12}, max error {err:.1e}", r.epsilon_a, r.epsilon_b),
    )
}

fn tradeoff_family_one() -> Verdict {
    let worst = (1..=50)
        .map(|i| 0.5 + 0.5 * i as f64 / 50.0)
        .map(|x| {
            let inst = family_one(x).unwrap();
            (p_a_max(&inst) * p_b_max(&inst) - 0.5).abs()
        })
        .fold(0.0, f64::max);
    verdict(worst < 1e-9, format!("50 points on (1/2, 1], max |product - 1/2| {worst:.1e}"))
}

fn family_two_closed_form() -> Verdict {
    let worst = (0..50)
        .map(|i| 0.5 + 0.5 * i as f64 / 50.0)
        .map(|x| (p_b_max(&family_two(x).unwrap()) - family_two_p_b_max(x)).abs())
        .fold(0.0, f64::max);
    verdict(worst < 1e-9, format!("50 points on [1/2, 1), max error {worst:.1e}"))
}

fn lower_bound() -> Verdict {
    let mut worst = f64::INFINITY;
    for d in [2, 3] {
        for inst in random_instances(d, 200, 1) {
            worst = worst.min(p_a_max(&inst) * p_b_max(&inst));
        }
    }
    verdict(
        worst >= 0.5 - 1e-9,
        format!("400 random instances, min product {worst:.12}"),
    )
}

fn oracle_equivalence() -> Verdict {
    let config = OracleConfig::with_seed(2024);
    let mut instances = random_instances(2, 20, 7);
    instances.extend(random_instances(3, 10, 7));
    let mut worst_gap: f64 = 0.0;
    let mut worst_excess = f64::NEG_INFINITY;
    let mut failures = Vec::new();
    for (i, inst) in instances.iter().enumerate() {
        let checks = [
            ("pa_max", alice_oracle(inst, &config).unwrap().best_value, p_a_max(inst)),
            (
                "pa_thresh",
                alice_threshold_oracle(inst, &config).unwrap().best_value,
                p_a_thresh(inst).unwrap(),
            ),
            ("pb_max", bob_unitary_oracle(inst, &config).unwrap().best_value, p_b_max(inst)),
            (
                "pb_thresh",
                bob_threshold_oracle(inst, &config).unwrap().best_value,
                p_b_thresh(inst).unwrap(),
            ),
        ];
        for (name, oracle, closed) in checks {
            let delta = oracle - closed;
            worst_gap = worst_gap.max(delta.abs());
            worst_excess = worst_excess.max(delta);
            if delta.abs() > 1e-4 || delta > 1e-6 {
                failures.push(format!("instance {i} {name}: delta {delta:.2e}"));
            }
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "30 instances x 4 oracles, max |delta| {worst_gap:.1e}, max excess {worst_excess:.1e}{}",
            if failures.is_empty() {
                String::new()
            } else {
                format!(", failures: {}", failures.join("; "))
            }
        ),
    )
}

fn lemma_identity() -> Verdict {
    let residuals: Vec<f64> = [2, 3, 4].iter().map(|&d| lemma_check(d, 100, 3).unwrap()).collect();
    let worst = residuals.iter().copied().fold(0.0, f64::max);
    let shown: Vec<String> = residuals.iter().map(|r| format!("{r:.1e}")).collect();
    verdict(worst < 1e-10, format!("max residual for d = 2, 3, 4: {}", shown.join(", ")))
}

fn zero_catch_thresholds() -> Verdict {
    let mut instances = vec![both_party(), family_one(0.9).unwrap(), family_two(0.75).unwrap()];
    instances.extend(random_instances(2, 10, 11));
    instances.extend(random_instances(3, 10, 11));
    let mut worst: f64 = 0.0;
    for inst in &instances {
        let a = evaluate_alice(inst, &threshold_alice_state(inst).unwrap()).unwrap();
        let b = evaluate_bob(inst, &threshold_bob_strategy(inst).unwrap()).unwrap();
        worst = worst.max(a.p_caught).max(b.p_caught);
    }
    let mut catches = 0;
    for (i, inst) in instances.iter().take(5).enumerate() {
        let alice = AlicePlay::Cheat(threshold_alice_state(inst).unwrap());
        let r = monte_carlo_agreement(inst, &alice, &BobPlay::Honest, 100_000, i as u64).unwrap();
        catches += r.row(Outcome::BobCatchesAlice).count;
        let bob = BobPlay::Cheat(threshold_bob_strategy(inst).unwrap());
        let r = monte_carlo_agreement(inst, &AlicePlay::Honest, &bob, 100_000, i as u64).unwrap();
        catches += r.row(Outcome::AliceCatchesBob).count;
    }
    verdict(
        worst <= 1e-12 && catches == 0,
        format!(
            "{} instances, max exact p_caught {worst:.1e}; 10 runs of 1e5 trials, {catches} catch events",
            instances.len()
        ),
    )
}

fn honest_balance() -> Verdict {
    let r = monte_carlo_agreement(&both_party(), &AlicePlay::Honest, &BobPlay::Honest, 1_000_000, 42)
        .unwrap();
    let freq = r.row(Outcome::AliceWins).frequency;
    let bound = 5.0 * 0.5 / 1000.0;
    let catches = r.row(Outcome::AliceCatchesBob).count + r.row(Outcome::BobCatchesAlice).count;
    verdict(
        (freq - 0.5).abs() < bound && catches == 0,
        format!("freq(AliceWins) {freq}, bound {bound}, {catches} catch events"),
    )
}

fn attained(inst: &ProtocolInstance) -> [f64; 4] {
    [
        evaluate_alice(inst, &optimal_alice_state(inst).unwrap()).unwrap().p_win,
        evaluate_alice(inst, &threshold_alice_state(inst).unwrap()).unwrap().p_win,
        evaluate_bob(inst, &optimal_bob_strategy(inst)).unwrap().p_win,
        evaluate_bob(inst, &threshold_bob_strategy(inst).unwrap()).unwrap().p_win,
    ]
}

fn purification_independence() -> Verdict {
    let mut rng = substream(5, 0);
    let mut worst: f64 = 0.0;
    let mut instances = random_instances(2, 10, 13);
    instances.extend(random_instances(3, 10, 13));
    for inst in &instances {
        let psi = random_purification(inst.psi(), &mut rng);
        let alt = ProtocolInstance::with_purification(
            inst.rho().clone(),
            inst.e0().clone(),
            psi,
            &Tolerances::default(),
        )
        .unwrap();
        let a = security_report(inst).unwrap();
        let b = security_report(&alt).unwrap();
        let closed = [
            (a.p_a_max - b.p_a_max).abs(),
            (a.p_a_thresh - b.p_a_thresh).abs(),
            (a.p_b_max - b.p_b_max).abs(),
            (a.p_b_thresh - b.p_b_thresh).abs(),
        ];
        let from_strategies = attained(inst)
            .iter()
            .zip(attained(&alt))
            .map(|(x, y)| (x - y).abs())
            .collect::<Vec<_>>();
        worst = closed
            .into_iter()
            .chain(from_strategies)
            .fold(worst, f64::max);
    }
    verdict(
        worst <= 1e-9,
        format!("20 instances, max difference of figures and attained values {worst:.1e}"),
    )
}

type Criterion = (&'static str, Option<Duration>, fn() -> Verdict);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("both-party example", Some(Duration::from_secs(1)), both_party_example),
        ("fair protocol", None, fair_protocol),
        ("trade-off on family 1", None, tradeoff_family_one),
        ("family-2 closed form", None, family_two_closed_form),
        ("lower-bound inequality", Some(Duration::from_secs(30)), lower_bound),
        ("oracle equivalence", Some(Duration::from_secs(600)), oracle_equivalence),
        ("lemma identity", None, lemma_identity),
        ("zero-catch thresholds", None, zero_catch_thresholds),
        ("honest balance", None, honest_balance),
        ("purification independence", None, purification_independence),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let v = timed(limit, check);
        println!("{} {name}: {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        failed += usize::from(!v.pass);
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
