//! The four security figures for a few instances, including a hand-built one.
//!
//! cargo run --example security_report

use wcf::{family_one, family_two, security_report, HermitianOperator, ProtocolInstance};

fn main() -> wcf::Result<()> {
    let both = ProtocolInstance::new(
        HermitianOperator::diagonal(&[0.5, 0.5]),
        HermitianOperator::diagonal(&[0.75, 0.25]),
    )?;
    let instances = [
        ("rho = I/2, E0 = diag(3/4, 1/4)", both),
        ("family 1, x = 1/sqrt(2)", family_one(std::f64::consts::FRAC_1_SQRT_2)?),
        ("family 1, x = 0.9", family_one(0.9)?),
        ("family 2, x = 0.6", family_two(0.6)?),
    ];
    println!(
        "{:<32}{:>10}{:>10}{:>10}{:>10}{:>10}",
        "instance", "P_A^max", "P_A^thr", "P_B^max", "P_B^thr", "product"
    );
    for (name, inst) in &instances {
        let r = security_report(inst)?;
        println!(
            "{name:<32}{:>10.6}{:>10.6}{:>10.6}{:>10.6}{:>10.6}",
            r.p_a_max, r.p_a_thresh, r.p_b_max, r.p_b_thresh, r.tradeoff_product
        );
    }
    Ok(())
}
