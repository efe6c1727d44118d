//! Seeded random matrices, states and protocol instances.

use nalgebra::DVector;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{
    c, BipartitePureState, BipartiteVector, ComplexMatrix, HermitianOperator,
};
use crate::protocol::ProtocolInstance;

/// Stream `stream` of the master `seed`. Sub-streams are independent of each other
/// and of how work is scheduled.
pub fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> num_complex::Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    c(re, im)
}

/// Matrix with iid standard complex Gaussian entries.
pub fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| gaussian_complex(rng))
}

pub fn gaussian_vector<R: Rng + ?Sized>(len: usize, rng: &mut R) -> DVector<num_complex::Complex64> {
    DVector::from_fn(len, |_, _| gaussian_complex(rng))
}

/// Haar-distributed unitary (QR of a Gaussian matrix with phase correction).
pub fn random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let qr = gaussian_matrix(dim, dim, rng).qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { c(1.0, 0.0) };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// `A A^dagger` for Gaussian `A`: PSD with full rank almost surely.
pub fn random_psd<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> HermitianOperator {
    let a = gaussian_matrix(dim, dim, rng);
    HermitianOperator::symmetrized(&a * a.adjoint())
}

/// `A A^dagger / Tr(A A^dagger)`.
pub fn random_density<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> HermitianOperator {
    let p = random_psd(dim, rng);
    let t = p.trace();
    p.scale(1.0 / t)
}

/// `V diag(u) V^dagger` with Haar `V` and `u_i` uniform on `[0, 1]`.
pub fn random_contraction<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> HermitianOperator {
    let v = random_unitary(dim, rng);
    let values: Vec<f64> = (0..dim).map(|_| rng.random::<f64>()).collect();
    HermitianOperator::diagonal(&values).conjugate_by(&v)
}

/// Uniformly random unit vector in `H_A (x) H_B`.
pub fn random_state<R: Rng + ?Sized>(dim_a: usize, dim_b: usize, rng: &mut R) -> BipartitePureState {
    BipartiteVector::new(dim_a, dim_b, gaussian_vector(dim_a * dim_b, rng))
        .expect("dimensions consistent")
        .normalized()
        .expect("nonzero Gaussian vector")
}

/// A POVM element `0 <= E0 <= I` with `Tr(rho E0) = 1/2`.
///
/// A random contraction `C` is rescaled to `C / (2 Tr(rho C))`, or failing that
/// shifted to `C + (1/2 - Tr(rho C)) I`; candidates leaving `[0, I]` are rejected.
pub fn random_fair_e0<R: Rng + ?Sized>(rho: &HermitianOperator, rng: &mut R) -> HermitianOperator {
    let dim = rho.dim();
    loop {
        let contraction = random_contraction(dim, rng);
        let t = rho.trace_product(&contraction);
        let eig = contraction.eig();
        if t > 0.0 && eig.max_eigenvalue() / (2.0 * t) <= 1.0 {
            return contraction.scale(1.0 / (2.0 * t));
        }
        let shift = 0.5 - t;
        if eig.min_eigenvalue() + shift >= 0.0 && eig.max_eigenvalue() + shift <= 1.0 {
            return HermitianOperator::symmetrized(
                contraction.matrix() + ComplexMatrix::identity(dim, dim).scale(shift),
            );
        }
    }
}

/// Random valid protocol instance of dimension `dim`.
pub fn random_instance<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ProtocolInstance {
    loop {
        let rho = random_density(dim, rng);
        let e0 = random_fair_e0(&rho, rng);
        if let Ok(instance) = ProtocolInstance::new(rho, e0) {
            return instance;
        }
    }
}

/// `(U (x) I)|psi>` for Haar `U` on A: another purification of the same reduced state on B.
pub fn random_purification<R: Rng + ?Sized>(
    state: &BipartitePureState,
    rng: &mut R,
) -> BipartitePureState {
    let u = random_unitary(state.dim_a(), rng);
    state
        .apply_on_a(&u)
        .expect("matching dimension")
        .normalized()
        .expect("unitary preserves norm")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{max_abs_diff, unitarity_residual};

    #[test]
    fn unitary_is_unitary() {
        let mut rng = substream(1, 0);
        for d in 1..5 {
            assert!(unitarity_residual(&random_unitary(d, &mut rng)) < 1e-12);
        }
    }

    #[test]
    fn fair_e0_is_fair_and_bounded() {
        let mut rng = substream(2, 0);
        for d in 2..5 {
            let rho = random_density(d, &mut rng);
            let e0 = random_fair_e0(&rho, &mut rng);
            assert!((rho.trace_product(&e0) - 0.5).abs() < 1e-12);
            let eig = e0.eig();
            assert!(eig.min_eigenvalue() >= -1e-12 && eig.max_eigenvalue() <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn substreams_reproduce() {
        let a: u64 = substream(9, 3).random();
        let b: u64 = substream(9, 3).random();
        let other: u64 = substream(9, 4).random();
        assert_eq!(a, b);
        assert_ne!(a, other);
    }

    #[test]
    fn random_purification_keeps_reduced_state() {
        let mut rng = substream(3, 0);
        let psi = random_state(3, 3, &mut rng);
        let alt = random_purification(&psi, &mut rng);
        assert!(max_abs_diff(alt.partial_trace_a().matrix(), psi.partial_trace_a().matrix()) < 1e-12);
    }
}
