#![allow(dead_code)]

use wcf::linalg::HermitianOperator;
use wcf::random::{gaussian_matrix, random_fair_e0, random_instance, substream};
use wcf::ProtocolInstance;

pub const SQRT3: f64 = 1.7320508075688772;

/// rho = I/2, E0 = diag(3/4, 1/4).
pub fn both_party() -> ProtocolInstance {
    ProtocolInstance::new(
        HermitianOperator::diagonal(&[0.5, 0.5]),
        HermitianOperator::diagonal(&[0.75, 0.25]),
    )
    .unwrap()
}

pub fn random_instances(dim: usize, count: usize, seed: u64) -> Vec<ProtocolInstance> {
    let mut rng = substream(seed, dim as u64);
    (0..count).map(|_| random_instance(dim, &mut rng)).collect()
}

/// Random instance whose `rho` has rank `rank < dim`.
pub fn rank_deficient_instance(dim: usize, rank: usize, seed: u64) -> ProtocolInstance {
    let mut rng = substream(seed, 1000 + dim as u64);
    loop {
        let a = gaussian_matrix(dim, rank, &mut rng);
        let m = &a * a.adjoint();
        let t = m.trace().re;
        let rho = HermitianOperator::new(m.unscale(t)).unwrap();
        let e0 = random_fair_e0(&rho, &mut rng);
        if let Ok(inst) = ProtocolInstance::new(rho, e0) {
            return inst;
        }
    }
}

/// `P_B^max` of the second family written out in closed form.
pub fn family_two_p_b_max(x: f64) -> f64 {
    2.0 + 4.0 * x * x - 5.0 * x + 2.0 * (1.0 - x) * (2.0 * x * (2.0 * x - 1.0)).sqrt()
}
