//! Rediscovers the four figures of a random instance by numerical ascent and
//! compares them with the closed forms.
//!
//! cargo run --release --example oracle_verification [seed]

use wcf::oracle::{
    alice_oracle, alice_threshold_oracle, bob_full_oracle, bob_threshold_oracle,
    bob_unitary_oracle, OracleConfig,
};
use wcf::random::{random_instance, substream};

fn main() -> wcf::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let inst = random_instance(3, &mut substream(seed, 0));
    println!("rho =\n{}E0 =\n{}", inst.rho().matrix(), inst.e0().matrix());

    let config = OracleConfig::with_seed(seed);
    let results = [
        ("P_A^max", alice_oracle(&inst, &config)?),
        ("P_A^thresh", alice_threshold_oracle(&inst, &config)?),
        ("P_B^max", bob_unitary_oracle(&inst, &config)?),
        ("P_B^max, 3-outcome POVM", bob_full_oracle(&inst, &config, 3)?),
        ("P_B^thresh", bob_threshold_oracle(&inst, &config)?),
    ];
    for (name, r) in &results {
        println!(
            "{name:<26} oracle {:.10}  delta {:+.2e}",
            r.best_value, r.closed_form_delta
        );
    }
    Ok(())
}
