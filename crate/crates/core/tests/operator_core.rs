mod common;

use proptest::prelude::*;
use wcf::linalg::{
    canonical_purification, fidelity, lemma_lhs_rhs, max_abs_diff, psd_sqrt, schmidt_decompose,
    support_projector, trace_norm, HermitianOperator, SUPPORT_CUTOFF,
};
use wcf::random::{gaussian_matrix, random_density, random_psd, random_state, substream};

/// PSD operator of the given rank, scaled to unit largest eigenvalue.
fn low_rank_psd(dim: usize, rank: usize, seed: u64) -> HermitianOperator {
    let a = gaussian_matrix(dim, rank, &mut substream(seed, 0));
    let p = HermitianOperator::new(&a * a.adjoint()).unwrap();
    let top = p.eig().max_eigenvalue();
    p.scale(1.0 / top)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn psd_sqrt_squares_back(seed in any::<u64>(), dim in 1usize..=4) {
        let p = random_psd(dim, &mut substream(seed, 0));
        let r = psd_sqrt(&p).unwrap();
        prop_assert!(r.eig().min_eigenvalue() >= -1e-12);
        let scale = p.eig().max_eigenvalue().max(1.0);
        prop_assert!(max_abs_diff(&(r.matrix() * r.matrix()), p.matrix()) < 1e-10 * scale);
    }

    #[test]
    fn support_projector_is_idempotent_and_commutes(seed in any::<u64>(), dim in 2usize..=4, rank in 1usize..=4) {
        let rank = rank.min(dim);
        let p = low_rank_psd(dim, rank, seed);
        let pi = support_projector(&p, SUPPORT_CUTOFF).unwrap();
        let m = pi.matrix();
        prop_assert!(max_abs_diff(&(m * m), m) < 1e-10);
        prop_assert!(max_abs_diff(&(m * p.matrix()), &(p.matrix() * m)) < 1e-10);
        prop_assert!((pi.trace() - rank as f64).abs() < 1e-9);
        prop_assert!(max_abs_diff(&(m * p.matrix()), p.matrix()) < 1e-10);
    }

    #[test]
    fn fidelity_is_symmetric_and_bounded(seed in any::<u64>(), dim in 1usize..=4) {
        let mut rng = substream(seed, 0);
        let a = random_density(dim, &mut rng);
        let b = random_density(dim, &mut rng);
        let fab = fidelity(&a, &b).unwrap();
        let fba = fidelity(&b, &a).unwrap();
        prop_assert!((fab - fba).abs() < 1e-9);
        prop_assert!((-1e-12..=1.0 + 1e-9).contains(&fab));
        prop_assert!((fidelity(&a, &a).unwrap() - 1.0).abs() < 1e-9);
        // Tr|sqrt(a) sqrt(b)| as an independent route
        let direct = trace_norm(&(psd_sqrt(&a).unwrap().matrix() * psd_sqrt(&b).unwrap().matrix()));
        prop_assert!((fab - direct).abs() < 1e-9);
    }

    #[test]
    fn canonical_purification_reduces_to_rho(seed in any::<u64>(), dim in 1usize..=4, rank in 1usize..=4) {
        let rank = rank.min(dim);
        let p = low_rank_psd(dim, rank, seed);
        let rho = p.scale(1.0 / p.trace());
        let psi = canonical_purification(&rho).unwrap();
        prop_assert!((psi.norm_squared() - 1.0).abs() < 1e-12);
        prop_assert!(max_abs_diff(psi.partial_trace_a().matrix(), rho.matrix()) < 1e-12);
    }

    #[test]
    fn lemma_holds(seed in any::<u64>(), dim in 2usize..=4) {
        let mut rng = substream(seed, 0);
        let phi = random_state(dim, dim, &mut rng);
        let e = random_psd(dim, &mut rng);
        let e = e.scale(1.0 / e.eig().max_eigenvalue());
        let (lhs, rhs) = lemma_lhs_rhs(&phi, &e).unwrap();
        prop_assert!(max_abs_diff(lhs.matrix(), rhs.matrix()) < 1e-10);
    }

    #[test]
    fn schmidt_reconstructs(seed in any::<u64>(), dim_a in 1usize..=4, dim_b in 1usize..=4) {
        let phi = random_state(dim_a, dim_b, &mut substream(seed, 0));
        let s = schmidt_decompose(&phi);
        prop_assert!(s.coefficients.windows(2).all(|w| w[0] >= w[1]));
        let total: f64 = s.coefficients.iter().map(|x| x * x).sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
        let back = s.reconstruct();
        prop_assert!((back.amplitudes() - phi.amplitudes()).norm() < 1e-10);
    }

    #[test]
    fn partial_traces_share_spectrum(seed in any::<u64>(), dim_a in 1usize..=4, dim_b in 1usize..=4) {
        let phi = random_state(dim_a, dim_b, &mut substream(seed, 0));
        let mut a = phi.partial_trace_b().eig().eigenvalues;
        let mut b = phi.partial_trace_a().eig().eigenvalues;
        a.retain(|x| *x > 1e-12);
        b.retain(|x| *x > 1e-12);
        prop_assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() < 1e-10);
        }
    }
}
