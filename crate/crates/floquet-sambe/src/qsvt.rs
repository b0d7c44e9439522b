//! QSVT helpers shared by the emulation and the bound verifiers: the
//! amplitude-amplification polynomial f₃, polynomial application to Hermitian
//! matrices, and the approximate-QSVT error experiment.

use ndarray::Array2;
use num_complex::Complex64;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::numerics::{self, dagger, vec_norm, CMat, CVec, Hermitian};

/// Negative Chebyshev polynomial f₃(x) = -4x³ + 3x; f₃(1/2) = 1.
pub fn f3(x: f64) -> f64 {
    -4.0 * x * x * x + 3.0 * x
}

/// Apply a real polynomial (coefficients low-to-high) to a Hermitian matrix
/// through its eigendecomposition.
pub fn polynomial_of_hermitian(h: &Hermitian, coeffs: &[f64]) -> Result<CMat> {
    let eig = numerics::hermitian_eigendecompose(h)?;
    let n = h.dim();
    let mut vd = eig.eigenvectors.clone();
    for (j, lam) in eig.eigenvalues.iter().enumerate() {
        let mut p = 0.0;
        for c in coeffs.iter().rev() {
            p = p * lam + c;
        }
        let mut col = vd.column_mut(j);
        col.mapv_inplace(|z| z * Complex64::new(p, 0.0));
    }
    let _ = n;
    Ok(vd.dot(&dagger(&eig.eigenvectors)))
}

pub const F3_COEFFS: [f64; 4] = [0.0, 3.0, 0.0, -4.0];

/// q²·η·√n_max — the approximate-QSVT error bound for a degree-q polynomial
/// applied to a state spanned by n_max η-approximate eigenstates.
pub fn approx_qsvt_error_bound(q: u32, eta: f64, n_max: usize) -> f64 {
    assert!(eta >= 0.0 && n_max >= 1 && q >= 1);
    (q as f64).powi(2) * eta * (n_max as f64).sqrt()
}

#[derive(Debug, Clone)]
pub struct D1Experiment {
    pub dim: usize,
    pub eta: f64,
    pub measured: f64,
    pub bound: f64,
}

fn random_hermitian_normalized(rng: &mut ChaCha8Rng, dim: usize) -> Result<Hermitian> {
    let mut a: CMat = Array2::zeros((dim, dim));
    for i in 0..dim {
        for j in 0..dim {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            a[[i, j]] = Complex64::new(re, im);
        }
    }
    let h = (&a + &dagger(&a)).mapv(|z| z * 0.5);
    let nrm = numerics::operator_norm(&h);
    Hermitian::new(h.mapv(|z| z / (nrm * 1.05)))
}

/// One Prop. D1 instance: draw H with ||H|| <= 1, perturb its eigenbasis into
/// an approximate model H̃ spanned by n_max vectors, measure
/// ||f₃(H)ψ - f₃(H̃)ψ|| against q²η√n_max.
pub fn d1_experiment(dim: usize, q: u32, seed: u64) -> Result<D1Experiment> {
    if q != 3 {
        return Err(Error::Config("the experiment applies f₃, so q must be 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = random_hermitian_normalized(&mut rng, dim)?;
    let eig = numerics::hermitian_eigendecompose(&h)?;

    // Perturb the eigenbasis by a small random unitary e^{iεK} and the
    // eigenvalues by small shifts; this is the approximate model H̃.
    let eps: f64 = 1e-4 * (0.1 + rng.random::<f64>());
    let mut k: CMat = Array2::zeros((dim, dim));
    for i in 0..dim {
        for j in 0..dim {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            k[[i, j]] = Complex64::new(re, im);
        }
    }
    let k = Hermitian::new((&k + &dagger(&k)).mapv(|z| z * 0.5))?;
    let rot = numerics::matrix_exponential_i(&k, eps)?;
    let tilde_vecs = rot.dot(&eig.eigenvectors);
    let tilde_vals: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&lam| {
            let shift: f64 = rng.sample(StandardNormal);
            (lam + eps * 0.1 * shift).clamp(-1.0, 1.0)
        })
        .collect();

    // η = max_n ||(H - Ẽ_n)|φ̃_n>||.
    let mut eta = 0.0_f64;
    for n in 0..dim {
        let v = tilde_vecs.column(n).to_owned();
        let hv = h.matrix().dot(&v);
        let resid = &hv - &v.mapv(|z| z * tilde_vals[n]);
        eta = eta.max(vec_norm(&resid));
    }

    // Random unit ψ expanded in the approximate basis.
    let mut coeffs: CVec = ndarray::Array1::zeros(dim);
    for c in coeffs.iter_mut() {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        *c = Complex64::new(re, im);
    }
    let nrm = vec_norm(&coeffs);
    coeffs.mapv_inplace(|z| z / nrm);
    let psi = tilde_vecs.dot(&coeffs);

    // f₃(H)ψ exactly, and f₃(H̃)ψ via the approximate spectral model.
    let f_h = polynomial_of_hermitian(&h, &F3_COEFFS)?;
    let lhs = f_h.dot(&psi);
    let mut rhs: CVec = ndarray::Array1::zeros(dim);
    for n in 0..dim {
        let v = tilde_vecs.column(n).to_owned();
        let amp = numerics::inner(&v, &psi) * Complex64::new(f3(tilde_vals[n]), 0.0);
        rhs.zip_mut_with(&v, |a, b| *a += amp * b);
    }

    let measured = vec_norm(&(&lhs - &rhs));
    let bound = approx_qsvt_error_bound(q, eta, dim);
    Ok(D1Experiment {
        dim,
        eta,
        measured,
        bound,
    })
}

pub fn d1_experiments(
    max_dim: usize,
    q: u32,
    count: usize,
    seed: u64,
) -> Result<Vec<D1Experiment>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let dim = 2 + (rng.random::<u32>() as usize) % (max_dim - 1);
            d1_experiment(dim, q, rng.random())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f3_reference_points() {
        assert!((f3(0.5) - 1.0).abs() < 1e-15);
        assert!(f3(0.0).abs() < 1e-15);
        assert!((f3(1.0) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn bound_reference_value() {
        let b = approx_qsvt_error_bound(3, 1e-6, 4);
        assert!((b - 1.8e-5).abs() < 1e-12);
        assert_eq!(approx_qsvt_error_bound(3, 0.0, 10), 0.0);
    }

    #[test]
    fn d1_instances_within_bound() {
        for exp in d1_experiments(8, 3, 20, 42).unwrap() {
            assert!(
                exp.measured <= exp.bound,
                "measured {} > bound {} (dim {}, eta {})",
                exp.measured,
                exp.bound,
                exp.dim,
                exp.eta
            );
        }
    }
}
