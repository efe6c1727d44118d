//! The Schmidt-equivalence identity on a random entangled state.
//!
//! cargo run --example schmidt_lemma

use wcf::linalg::{lemma_lhs_rhs, max_abs_diff, schmidt_decompose, schmidt_equivalent};
use wcf::oracle::lemma_check;
use wcf::random::{random_psd, random_state, substream};

fn main() -> wcf::Result<()> {
    let mut rng = substream(3, 0);
    let phi = random_state(3, 3, &mut rng);
    let e = random_psd(3, &mut rng);

    let schmidt = schmidt_decompose(&phi);
    println!("Schmidt coefficients: {:?}", schmidt.coefficients);
    println!("D (operator on A matching E) =\n{}", schmidt_equivalent(&e, &phi)?);

    let (lhs, rhs) = lemma_lhs_rhs(&phi, &e)?;
    println!("Tr_B((I (x) sqrt E)|phi><phi|(I (x) sqrt E)) =\n{}", lhs.matrix());
    println!("residual {:.2e}", max_abs_diff(lhs.matrix(), rhs.matrix()));

    for d in [2, 3, 4] {
        println!("d = {d}: max residual over 100 pairs {:.2e}", lemma_check(d, 100, 1)?);
    }
    Ok(())
}
