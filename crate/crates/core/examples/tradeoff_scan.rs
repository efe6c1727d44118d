//! Sweeps both parametric families and prints plot-ready CSV to stdout.
//!
//! cargo run --example tradeoff_scan > scan.csv

use wcf::{family_one, family_two, security_report};

fn main() -> wcf::Result<()> {
    println!("family,x,p_a_max,p_b_max,p_a_thresh,p_b_thresh,product");
    let steps = 40;
    for i in 0..=steps {
        let t = i as f64 / steps as f64;
        // family 1 lives on (1/2, 1], family 2 on [1/2, 1)
        for (family, x) in [(1, 0.5 + 0.5 * t.max(1e-3)), (2, 0.5 + 0.5 * t.min(0.999))] {
            let inst = if family == 1 { family_one(x)? } else { family_two(x)? };
            let r = security_report(&inst)?;
            println!(
                "{family},{x},{},{},{},{},{}",
                r.p_a_max, r.p_b_max, r.p_a_thresh, r.p_b_thresh, r.tradeoff_product
            );
        }
    }
    Ok(())
}
