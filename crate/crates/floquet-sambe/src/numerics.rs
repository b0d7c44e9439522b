//! Dense complex linear-algebra kernel with explicit tolerance contracts.
//!
//! Every operator in the crate (Fourier components, truncated Floquet
//! Hamiltonians, propagators, block-encodings) lives in dense
//! `Array2<Complex64>` storage. The eigen/SVD routines are backed by LAPACK
//! and every result is re-verified against the stated residual tolerances
//! before it is returned.

use std::sync::atomic::{AtomicU64, Ordering};

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eig, Eigh, SVD, UPLO};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMat = Array2<Complex64>;
pub type CVec = Array1<Complex64>;

pub const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };
pub const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
pub const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

// Global tolerance knob: a single scale factor applied to every fixed
// tolerance below. Stored as f64 bits so it can sit in an atomic.
static TOL_SCALE_BITS: AtomicU64 = AtomicU64::new(0x3FF0_0000_0000_0000); // 1.0

/// Scale every kernel tolerance by `scale` (default 1.0).
pub fn set_tolerance_scale(scale: f64) {
    assert!(scale.is_finite() && scale > 0.0);
    TOL_SCALE_BITS.store(scale.to_bits(), Ordering::Relaxed);
}

pub fn tolerance_scale() -> f64 {
    f64::from_bits(TOL_SCALE_BITS.load(Ordering::Relaxed))
}

/// Hermiticity tag tolerance: max|A - A†| <= tol * max(1, ||A||_F).
pub fn hermiticity_tol() -> f64 {
    1e-12 * tolerance_scale()
}

/// Eigendecomposition residual tolerance, relative to ||A||.
pub fn eig_residual_tol() -> f64 {
    1e-10 * tolerance_scale()
}

/// Unitarity tolerance for emitted propagators and encodings.
pub fn unitarity_tol() -> f64 {
    1e-10 * tolerance_scale()
}

/// Hard cap on dense dimensions, overridable through `FLOQUET_DIM_CAP`.
pub fn dim_cap() -> usize {
    std::env::var("FLOQUET_DIM_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(8192)
}

fn check_dim(dim: usize) -> Result<()> {
    let cap = dim_cap();
    if dim > cap {
        return Err(Error::Dimension(format!("dim {dim} exceeds cap {cap}")));
    }
    Ok(())
}

pub fn identity(n: usize) -> CMat {
    Array2::eye(n)
}

pub fn dagger(a: &CMat) -> CMat {
    a.t().mapv(|z| z.conj())
}

pub fn frobenius_norm(a: &CMat) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn max_abs_entry(a: &CMat) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn all_finite(a: &CMat) -> bool {
    a.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

pub fn vec_norm(v: &CVec) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn inner(a: &CVec, b: &CVec) -> Complex64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// Kronecker product, row-major convention: (A ⊗ B)[(i·p+k),(j·q+l)] = A[i,j]·B[k,l].
pub fn kron(a: &CMat, b: &CMat) -> CMat {
    ndarray::linalg::kron(a, b)
}

/// ||U†U - I|| in operator norm.
pub fn unitarity_defect(u: &CMat) -> f64 {
    let mut g = dagger(u).dot(u);
    for i in 0..g.nrows() {
        g[[i, i]] -= ONE;
    }
    operator_norm(&g)
}

/// Operator norm = largest singular value.
pub fn operator_norm(a: &CMat) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    singular_values(a).map(|s| s[0]).unwrap_or_else(|_| {
        // SVD convergence failures on finite input are effectively unreachable;
        // fall back to the Frobenius norm as a safe upper bound.
        frobenius_norm(a)
    })
}

/// Singular values in descending order.
pub fn singular_values(a: &CMat) -> Result<Vec<f64>> {
    check_dim(a.nrows().max(a.ncols()))?;
    if !all_finite(a) {
        return Err(Error::Contract("non-finite entries in SVD input".into()));
    }
    let (_, s, _) = a
        .svd(false, false)
        .map_err(|e| Error::Numeric(format!("SVD failed to converge: {e}")))?;
    Ok(s.to_vec())
}

/// A matrix validated to be Hermitian within [`hermiticity_tol`].
#[derive(Debug, Clone)]
pub struct Hermitian {
    mat: CMat,
}

impl Hermitian {
    pub fn new(mat: CMat) -> Result<Self> {
        if mat.nrows() != mat.ncols() {
            return Err(Error::Dimension(format!(
                "Hermitian matrix must be square, got {}x{}",
                mat.nrows(),
                mat.ncols()
            )));
        }
        check_dim(mat.nrows())?;
        if !all_finite(&mat) {
            return Err(Error::Contract("non-finite entries".into()));
        }
        let defect = hermiticity_defect(&mat);
        let tol = hermiticity_tol() * frobenius_norm(&mat).max(1.0);
        if defect > tol {
            return Err(Error::Contract(format!(
                "matrix is not Hermitian: max|A - A†| = {defect:.3e} > {tol:.3e}"
            )));
        }
        Ok(Self { mat })
    }

    pub fn matrix(&self) -> &CMat {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn into_matrix(self) -> CMat {
        self.mat
    }
}

impl std::ops::Deref for Hermitian {
    type Target = CMat;
    fn deref(&self) -> &CMat {
        &self.mat
    }
}

pub fn hermitian_defect(a: &CMat) -> f64 {
    hermiticity_defect(a)
}

fn hermiticity_defect(a: &CMat) -> f64 {
    let n = a.nrows();
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in i..n {
            let d = (a[[i, j]] - a[[j, i]].conj()).norm();
            worst = worst.max(d);
        }
    }
    worst
}

#[derive(Debug, Clone)]
pub struct Eigendecomposition {
    /// Ascending real eigenvalues.
    pub eigenvalues: Vec<f64>,
    /// Unitary matrix whose columns are the eigenvectors, same order.
    pub eigenvectors: CMat,
}

impl Eigendecomposition {
    pub fn eigenvector(&self, k: usize) -> CVec {
        self.eigenvectors.column(k).to_owned()
    }
}

/// Frobenius norm of A·V - V·diag(λ).
fn eig_residual_frobenius(a: &CMat, vals: &[f64], vecs: &CMat) -> f64 {
    let av = a.dot(vecs);
    let mut vd = vecs.clone();
    for (j, lam) in vals.iter().enumerate() {
        let mut col = vd.column_mut(j);
        col.mapv_inplace(|z| z * Complex64::new(*lam, 0.0));
    }
    frobenius_norm(&(&av - &vd))
}

/// LAPACK eigh with an eigenvector-convention fix-up: depending on the memory
/// layout handed to the backend, the returned vectors can belong to the
/// conjugate matrix. Keep whichever of {V, conj(V)} actually satisfies the
/// eigen equation.
pub(crate) fn eigh_fixed(a: &CMat) -> Result<(Vec<f64>, CMat)> {
    let (vals, vecs) = a
        .eigh(UPLO::Lower)
        .map_err(|e| Error::Numeric(format!("eigh failed to converge: {e}")))?;
    let vals: Vec<f64> = vals.to_vec();
    let r_direct = eig_residual_frobenius(a, &vals, &vecs);
    let conj = vecs.mapv(|z| z.conj());
    let r_conj = eig_residual_frobenius(a, &vals, &conj);
    if r_conj < r_direct {
        Ok((vals, conj))
    } else {
        Ok((vals, vecs))
    }
}

/// Diagonalize a Hermitian matrix. The result is re-verified:
/// ||A·V - V·diag(λ)|| <= tol·||A|| and ||V†V - I|| <= tol.
pub fn hermitian_eigendecompose(a: &Hermitian) -> Result<Eigendecomposition> {
    let (eigenvalues, vecs) = eigh_fixed(a.matrix())?;

    let scale = operator_norm(a.matrix()).max(1e-300);
    let av = a.matrix().dot(&vecs);
    let mut vd = vecs.clone();
    for (j, lam) in eigenvalues.iter().enumerate() {
        let mut col = vd.column_mut(j);
        col.mapv_inplace(|z| z * Complex64::new(*lam, 0.0));
    }
    let residual = operator_norm(&(&av - &vd));
    let tol = eig_residual_tol();
    if residual > tol * scale {
        return Err(Error::Numeric(format!(
            "eigendecomposition residual {residual:.3e} exceeds {:.3e}",
            tol * scale
        )));
    }
    let ortho = unitarity_defect(&vecs);
    if ortho > tol {
        return Err(Error::Numeric(format!(
            "eigenvector orthonormality defect {ortho:.3e} exceeds {tol:.3e}"
        )));
    }
    Ok(Eigendecomposition {
        eigenvalues,
        eigenvectors: vecs,
    })
}

/// exp(-i·A·t) for Hermitian A, built as V·diag(e^{-iλt})·V†.
/// Verified unitary within [`unitarity_tol`].
pub fn matrix_exponential_i(a: &Hermitian, t: f64) -> Result<CMat> {
    let eig = hermitian_eigendecompose(a)?;
    let u = exponential_from_eig(&eig, t);
    let defect = unitarity_defect(&u);
    if defect > unitarity_tol() {
        return Err(Error::Numeric(format!(
            "propagator unitarity defect {defect:.3e} exceeds {:.3e}",
            unitarity_tol()
        )));
    }
    Ok(u)
}

/// exp(-i·λ·t) recombination from a precomputed eigendecomposition.
pub fn exponential_from_eig(eig: &Eigendecomposition, t: f64) -> CMat {
    let v = &eig.eigenvectors;
    let mut vd = v.clone();
    for (j, lam) in eig.eigenvalues.iter().enumerate() {
        let phase = Complex64::from_polar(1.0, -lam * t);
        let mut col = vd.column_mut(j);
        col.mapv_inplace(|z| z * phase);
    }
    vd.dot(&dagger(v))
}

/// Eigendecomposition of a unitary matrix: eigenvalues on the unit circle and
/// orthonormal eigenvectors. Near-degenerate eigenphase clusters are
/// re-orthonormalized so that V†V = I within [`eig_residual_tol`] even when
/// LAPACK's general solver returns skewed vectors inside a degenerate block.
pub fn eig_unitary(u: &CMat) -> Result<(Vec<Complex64>, CMat)> {
    let defect = unitarity_defect(u);
    let tol_in = 1e-8 * tolerance_scale();
    if defect > tol_in {
        return Err(Error::Contract(format!(
            "input is not unitary: ||U†U - I|| = {defect:.3e} > {tol_in:.3e}"
        )));
    }
    let (vals, vecs) = u
        .eig()
        .map_err(|e| Error::Numeric(format!("eig failed to converge: {e}")))?;
    let n = u.nrows();
    let mut vals: Vec<Complex64> = vals.to_vec();

    // Backend-convention fix-up: the returned pairs may solve U^T instead of
    // U; in that case (conj λ, conj v) are genuine eigenpairs of U.
    let resid = |vals: &[Complex64], vecs: &CMat| -> f64 {
        let uv = u.dot(vecs);
        let mut vd = vecs.clone();
        for (j, lam) in vals.iter().enumerate() {
            let mut col = vd.column_mut(j);
            col.mapv_inplace(|z| z * *lam);
        }
        frobenius_norm(&(&uv - &vd))
    };
    let mut vecs = vecs;
    let r_direct = resid(&vals, &vecs);
    let conj_vals: Vec<Complex64> = vals.iter().map(|z| z.conj()).collect();
    let conj_vecs = vecs.mapv(|z| z.conj());
    if resid(&conj_vals, &conj_vecs) < r_direct {
        vals = conj_vals;
        vecs = conj_vecs;
    }

    // Sort by eigenphase for deterministic output and easy clustering.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        vals[i]
            .arg()
            .partial_cmp(&vals[j].arg())
            .unwrap()
            .then(i.cmp(&j))
    });
    let sorted_vals: Vec<Complex64> = order.iter().map(|&i| vals[i]).collect();
    let mut sorted_vecs = Array2::zeros((n, n));
    for (dst, &src) in order.iter().enumerate() {
        sorted_vecs.column_mut(dst).assign(&vecs.column(src));
    }

    // Orthonormalize within clusters of nearly equal eigenvalues.
    let cluster_tol = 1e-8;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (sorted_vals[end] - sorted_vals[end - 1]).norm() < cluster_tol {
            end += 1;
        }
        if end - start > 1 {
            gram_schmidt_columns(&mut sorted_vecs, start, end)?;
        } else {
            let nrm = vec_norm(&sorted_vecs.column(start).to_owned());
            let mut col = sorted_vecs.column_mut(start);
            col.mapv_inplace(|z| z / nrm);
        }
        start = end;
    }

    let ortho = unitarity_defect(&sorted_vecs);
    if ortho > eig_residual_tol() {
        return Err(Error::Numeric(format!(
            "unitary eigenvector orthonormality defect {ortho:.3e}"
        )));
    }
    let final_resid = resid(&sorted_vals, &sorted_vecs);
    let allowed = (defect * 10.0).max(1e-7 * tolerance_scale());
    if final_resid > allowed {
        return Err(Error::Numeric(format!(
            "unitary eigen-residual {final_resid:.3e} exceeds {allowed:.3e}"
        )));
    }
    Ok((sorted_vals, sorted_vecs))
}

#[derive(Debug, Clone)]
pub struct ThinSvd {
    /// Left singular vectors as columns, one per kept singular value.
    pub u: CMat,
    /// Kept singular values, descending, all above the rank cut.
    pub s: Vec<f64>,
    /// Right singular vectors as columns, matching order.
    pub v: CMat,
}

/// Thin SVD built from the verified Hermitian eigendecomposition of A†A,
/// keeping singular values above `rank_tol` (absolute). Avoids backend
/// singular-vector conventions entirely.
pub fn thin_svd(a: &CMat, rank_tol: f64) -> Result<ThinSvd> {
    let gram = Hermitian::new(dagger(a).dot(a))?;
    let eig = hermitian_eigendecompose(&gram)?;
    let n = a.ncols();
    let mut kept: Vec<(f64, usize)> = Vec::new();
    for (j, lam) in eig.eigenvalues.iter().enumerate() {
        let s = lam.max(0.0).sqrt();
        if s > rank_tol {
            kept.push((s, j));
        }
    }
    kept.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap().then(x.1.cmp(&y.1)));
    let r = kept.len();
    let mut u: CMat = Array2::zeros((a.nrows(), r));
    let mut v: CMat = Array2::zeros((n, r));
    let mut s = Vec::with_capacity(r);
    for (col, (sv, j)) in kept.iter().enumerate() {
        let vj = eig.eigenvectors.column(*j).to_owned();
        let uj = a.dot(&vj).mapv(|z| z / *sv);
        u.column_mut(col).assign(&uj);
        v.column_mut(col).assign(&vj);
        s.push(*sv);
    }
    // Reconstruction check on the kept part.
    let mut recon: CMat = Array2::zeros((a.nrows(), a.ncols()));
    for (col, sv) in s.iter().enumerate() {
        let uc = u.column(col);
        let vc = v.column(col);
        for i in 0..a.nrows() {
            for j in 0..a.ncols() {
                recon[[i, j]] += uc[i] * Complex64::new(*sv, 0.0) * vc[j].conj();
            }
        }
    }
    let err = operator_norm(&(a - &recon));
    let smax = s.first().copied().unwrap_or(0.0);
    let allowed = (rank_tol * 4.0).max(1e-10 * smax.max(1.0));
    if err > allowed {
        return Err(Error::Numeric(format!(
            "thin SVD reconstruction error {err:.3e} exceeds {allowed:.3e}"
        )));
    }
    Ok(ThinSvd { u, s, v })
}

fn gram_schmidt_columns(m: &mut CMat, start: usize, end: usize) -> Result<()> {
    for j in start..end {
        for _ in 0..2 {
            for k in start..j {
                let proj = inner(&m.column(k).to_owned(), &m.column(j).to_owned());
                let ck = m.column(k).to_owned();
                let mut cj = m.column_mut(j);
                cj.zip_mut_with(&ck, |a, b| *a -= proj * b);
            }
        }
        let nrm = vec_norm(&m.column(j).to_owned());
        if nrm < 1e-12 {
            return Err(Error::Numeric(
                "degenerate cluster produced a rank-deficient eigenbasis".into(),
            ));
        }
        let mut cj = m.column_mut(j);
        cj.mapv_inplace(|z| z / nrm);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    pub fn random_hermitian(n: usize, seed: u64) -> Hermitian {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = Array2::zeros((n, n));
        for i in 0..n {
            for j in 0..n {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                a[[i, j]] = Complex64::new(re, im);
            }
        }
        let h = (&a + &dagger(&a)).mapv(|z| z * 0.5);
        Hermitian::new(h).unwrap()
    }

    /// Independent oracle: exp(-iAt) by scaling-and-squaring of a plain
    /// Taylor series, never touching the eigensolver.
    fn expm_squaring_oracle(a: &CMat, t: f64) -> CMat {
        let n = a.nrows();
        let x = a.mapv(|z| z * Complex64::new(0.0, -t));
        let norm = frobenius_norm(&x);
        let s = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as u32
        } else {
            0
        };
        let xs = x.mapv(|z| z / (2f64.powi(s as i32)));
        let mut term = identity(n);
        let mut acc = identity(n);
        for k in 1..30 {
            term = term.dot(&xs).mapv(|z| z / (k as f64));
            acc = &acc + &term;
        }
        let mut out = acc;
        for _ in 0..s {
            out = out.dot(&out);
        }
        out
    }

    fn sigma_x() -> CMat {
        array![[ZERO, ONE], [ONE, ZERO]]
    }

    fn sigma_z() -> CMat {
        array![[ONE, ZERO], [ZERO, -ONE]]
    }

    #[test]
    fn eigendecompose_diagonal() {
        let a = Hermitian::new(array![
            [Complex64::new(1.0, 0.0), ZERO],
            [ZERO, Complex64::new(2.0, 0.0)]
        ])
        .unwrap();
        let eig = hermitian_eigendecompose(&a).unwrap();
        assert!((eig.eigenvalues[0] - 1.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 2.0).abs() < 1e-14);
        let v = &eig.eigenvectors;
        assert!((v[[0, 0]].norm() - 1.0).abs() < 1e-12);
        assert!((v[[1, 1]].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eigendecompose_pauli_x() {
        let a = Hermitian::new(sigma_x()).unwrap();
        let eig = hermitian_eigendecompose(&a).unwrap();
        assert!((eig.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-14);
        // Columns are |-> and |+> up to phase: components have equal magnitude
        // and the right relative sign.
        let minus = eig.eigenvector(0);
        let plus = eig.eigenvector(1);
        let r = 0.5_f64.sqrt();
        assert!((minus[0].norm() - r).abs() < 1e-12);
        assert!((minus[1] / minus[0] + ONE).norm() < 1e-12);
        assert!((plus[1] / plus[0] - ONE).norm() < 1e-12);
    }

    #[test]
    fn eigendecompose_roundtrip_random_16() {
        let a = random_hermitian(16, 7);
        let eig = hermitian_eigendecompose(&a).unwrap();
        let mut vd = eig.eigenvectors.clone();
        for (j, lam) in eig.eigenvalues.iter().enumerate() {
            let mut col = vd.column_mut(j);
            col.mapv_inplace(|z| z * Complex64::new(*lam, 0.0));
        }
        let recon = vd.dot(&dagger(&eig.eigenvectors));
        let err = operator_norm(&(&recon - a.matrix()));
        assert!(err <= 1e-10 * operator_norm(a.matrix()));
    }

    #[test]
    fn rejects_non_hermitian() {
        let a = array![[ZERO, ONE], [ZERO, ZERO]];
        assert!(matches!(Hermitian::new(a), Err(Error::Contract(_))));
    }

    #[test]
    fn exponential_of_zero_is_identity() {
        let a = Hermitian::new(Array2::zeros((3, 3))).unwrap();
        let u = matrix_exponential_i(&a, 1.3).unwrap();
        assert!(operator_norm(&(&u - &identity(3))) < 1e-14);
    }

    #[test]
    fn exponential_of_sigma_z() {
        let a = Hermitian::new(sigma_z()).unwrap();
        let u = matrix_exponential_i(&a, std::f64::consts::FRAC_PI_2).unwrap();
        let expect = array![
            [Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_2), ZERO],
            [ZERO, Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_2)]
        ];
        assert!(operator_norm(&(&u - &expect)) < 1e-12);
    }

    #[test]
    fn exponential_matches_squaring_oracle() {
        let a = random_hermitian(8, 21);
        let u = matrix_exponential_i(&a, 0.7).unwrap();
        let oracle = expm_squaring_oracle(a.matrix(), 0.7);
        assert!(operator_norm(&(&u - &oracle)) < 1e-9);
    }

    #[test]
    fn singular_values_identity() {
        let s = singular_values(&identity(5)).unwrap();
        assert!(s.iter().all(|&x| (x - 1.0).abs() < 1e-13));
    }

    #[test]
    fn singular_values_signed_diagonal() {
        let a = array![
            [Complex64::new(3.0, 0.0), ZERO],
            [ZERO, Complex64::new(-4.0, 0.0)]
        ];
        let s = singular_values(&a).unwrap();
        assert!((s[0] - 4.0).abs() < 1e-13);
        assert!((s[1] - 3.0).abs() < 1e-13);
    }

    #[test]
    fn operator_norm_matches_power_iteration() {
        for seed in 0..4u64 {
            let a = random_hermitian(12, 100 + seed).into_matrix();
            let direct = operator_norm(&a);
            // Power iteration on A†A.
            let g = dagger(&a).dot(&a);
            let mut v: CVec = Array1::from_elem(12, ONE);
            v.mapv_inplace(|z| z / (12f64).sqrt());
            for _ in 0..500 {
                let w = g.dot(&v);
                let nrm = vec_norm(&w);
                v = w.mapv(|z| z / nrm);
            }
            let lam = inner(&v, &g.dot(&v)).re;
            let oracle = lam.sqrt();
            assert!(
                (direct - oracle).abs() <= 1e-8 * oracle.max(1.0),
                "norm {direct} vs power-iteration {oracle}"
            );
        }
    }

    #[test]
    fn eig_unitary_identity_and_phase() {
        let (vals, vecs) = eig_unitary(&identity(4)).unwrap();
        assert!(vals.iter().all(|v| (v - ONE).norm() < 1e-12));
        assert!(unitarity_defect(&vecs) < 1e-10);

        let u = array![
            [Complex64::from_polar(1.0, 0.3), ZERO],
            [ZERO, Complex64::from_polar(1.0, -0.4)]
        ];
        let (vals, _) = eig_unitary(&u).unwrap();
        let mut args: Vec<f64> = vals.iter().map(|v| v.arg()).collect();
        args.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((args[0] + 0.4).abs() < 1e-12);
        assert!((args[1] - 0.3).abs() < 1e-12);
    }

    #[test]
    fn eig_unitary_rejects_non_unitary() {
        let a = array![[ONE, ONE], [ZERO, ONE]];
        assert!(matches!(eig_unitary(&a), Err(Error::Contract(_))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn roundtrip_residual_property(seed in 0u64..500) {
            let a = random_hermitian(6, seed);
            let eig = hermitian_eigendecompose(&a).unwrap();
            let mut vd = eig.eigenvectors.clone();
            for (j, lam) in eig.eigenvalues.iter().enumerate() {
                let mut col = vd.column_mut(j);
                col.mapv_inplace(|z| z * Complex64::new(*lam, 0.0));
            }
            let recon = vd.dot(&dagger(&eig.eigenvectors));
            let err = operator_norm(&(&recon - a.matrix()));
            prop_assert!(err <= 1e-10 * operator_norm(a.matrix()).max(1e-12));
        }

        #[test]
        fn exponentials_are_unitary(seed in 0u64..500, t in -3.0f64..3.0) {
            let a = random_hermitian(5, seed);
            let u = matrix_exponential_i(&a, t).unwrap();
            prop_assert!(unitarity_defect(&u) <= 1e-10);
        }
    }
}
