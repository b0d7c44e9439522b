//! Truncated Floquet Hamiltonians on the Fourier lattice, Brillouin-zone
//! folding, certified cutoff selection, and the tail-bound evaluators.
//!
//! The Sambe tensor order is fixed as (fourier ⊗ system); Fourier index l is
//! mapped to row block l + L - 1.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hamiltonian::FourierHamiltonian;
use crate::numerics::{self, CMat, CVec, Hermitian};

/// sinh(1)/(2π), the drive-strength prefactor in every tail exponent.
pub fn sinh1_over_2pi() -> f64 {
    1.0_f64.sinh() / (2.0 * std::f64::consts::PI)
}

/// Fourier-index window [L] = {-L+1, ..., L} with 2L lattice sites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SambeWindow {
    cutoff: i64,
}

impl SambeWindow {
    pub fn new(cutoff: i64) -> Result<Self> {
        if cutoff < 1 {
            return Err(Error::Dimension(format!(
                "window cutoff must be >= 1, got {cutoff}"
            )));
        }
        Ok(Self { cutoff })
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn fourier_dim(&self) -> usize {
        (2 * self.cutoff) as usize
    }

    pub fn contains(&self, l: i64) -> bool {
        l >= -self.cutoff + 1 && l <= self.cutoff
    }

    /// Row-block index of Fourier index l, i.e. l + L - 1.
    pub fn block_of(&self, l: i64) -> usize {
        debug_assert!(self.contains(l));
        (l + self.cutoff - 1) as usize
    }

    pub fn index_at(&self, block: usize) -> i64 {
        block as i64 - self.cutoff + 1
    }

    pub fn indices(&self) -> impl Iterator<Item = i64> {
        (-self.cutoff + 1)..=self.cutoff
    }

    /// Wraparound addition (l ⊕ m)_[L] = ((l + m + L - 1) mod 2L) - L + 1.
    pub fn wrap_add(&self, l: i64, m: i64) -> i64 {
        let two_l = 2 * self.cutoff;
        (l + m + self.cutoff - 1).rem_euclid(two_l) - self.cutoff + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Obc,
    Pbc,
}

/// Truncated Floquet Hamiltonian H_F^L (obc) or H_F,pbc^L on C^{2L} ⊗ C^{2^N}.
#[derive(Debug, Clone)]
pub struct SambeOperator {
    pub window: SambeWindow,
    pub system_dim: usize,
    pub boundary: Boundary,
    /// α_F^L = (2M+1)α + Lω (norm-bound analog + Lω in decaying mode).
    pub alpha_f: f64,
    pub omega: f64,
    matrix: Hermitian,
}

impl SambeOperator {
    pub fn matrix(&self) -> &Hermitian {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.window.fourier_dim() * self.system_dim
    }

    /// View of the (row_l, col_l) system-dim block.
    pub fn block(&self, row_l: i64, col_l: i64) -> CMat {
        let d = self.system_dim;
        let r = self.window.block_of(row_l) * d;
        let c = self.window.block_of(col_l) * d;
        self.matrix
            .matrix()
            .slice(ndarray::s![r..r + d, c..c + d])
            .to_owned()
    }
}

/// Assemble the truncated Floquet Hamiltonian for `h` on window cutoff `l_cut`.
pub fn build_floquet(
    h: &FourierHamiltonian,
    l_cut: i64,
    boundary: Boundary,
) -> Result<SambeOperator> {
    let window = SambeWindow::new(l_cut)?;
    let d = h.system_dim();
    let dim = window.fourier_dim() * d;
    if dim > numerics::dim_cap() {
        return Err(Error::Dimension(format!(
            "Sambe dimension {dim} exceeds cap {}",
            numerics::dim_cap()
        )));
    }
    let hop_range = h.support_m_max();
    if boundary == Boundary::Pbc && 2 * l_cut < 2 * hop_range + 1 {
        return Err(Error::Dimension(format!(
            "pbc window 2L = {} cannot host hopping range M = {hop_range} \
             without double-counting (need 2L >= 2M+1)",
            2 * l_cut
        )));
    }

    let omega = h.omega();
    let mut mat: CMat = Array2::zeros((dim, dim));
    for (m, hm) in h.components() {
        for l in window.indices() {
            let target = match boundary {
                Boundary::Obc => {
                    let t = l + m;
                    if !window.contains(t) {
                        continue;
                    }
                    t
                }
                Boundary::Pbc => window.wrap_add(l, m),
            };
            let r0 = window.block_of(target) * d;
            let c0 = window.block_of(l) * d;
            let mut block = mat.slice_mut(ndarray::s![r0..r0 + d, c0..c0 + d]);
            block.zip_mut_with(hm, |a, b| *a += b);
        }
    }
    for l in window.indices() {
        let off = window.block_of(l) * d;
        let shift = Complex64::new(-(l as f64) * omega, 0.0);
        for s in 0..d {
            mat[[off + s, off + s]] += shift;
        }
    }

    let alpha_f = h.norm_bound() + l_cut as f64 * omega;
    let matrix = Hermitian::new(mat)?;
    debug_assert!({
        let nrm = numerics::operator_norm(matrix.matrix());
        nrm <= alpha_f * (1.0 + 1e-12)
    });
    Ok(SambeOperator {
        window,
        system_dim: d,
        boundary,
        alpha_f,
        omega,
        matrix,
    })
}

/// Certified cutoff so that every eigenvalue of H_F^L near the central BZ
/// matches a quasienergy within ε (relative to ω):
/// L = ⌈(2M+1)(sinh1/2π·αT + ln(1/ε) + ln(9(2M+1)²αT))⌉ + 1,
/// with the third log clamped at 0 when its argument dips below 1.
pub fn cutoff_for_accuracy(m_max: i64, alpha_t: f64, eps: f64) -> Result<i64> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Domain(format!("eps must lie in (0,1), got {eps}")));
    }
    if !(alpha_t >= 0.0 && alpha_t.is_finite()) {
        return Err(Error::Domain(format!("alphaT must be >= 0, got {alpha_t}")));
    }
    let w = (2 * m_max + 1) as f64;
    let log_arg = 9.0 * w * w * alpha_t;
    let third = if log_arg > 1.0 { log_arg.ln() } else { 0.0 };
    let raw = w * (sinh1_over_2pi() * alpha_t + (1.0 / eps).ln() + third);
    Ok(raw.ceil() as i64 + 1)
}

/// Lieb-Robinson cutoff for the Sambe-space propagator, from the explicit
/// constants of the propagation bound 2·e^{(2M+1)eαt - d/M}:
/// L_LR = ⌈M((2M+1)e·αT + ln(2/ε))⌉ + 1, and L_LR = 1 when M = 0
/// (the propagator is exactly block-diagonal then).
pub fn cutoff_lieb_robinson(m_max: i64, alpha_t: f64, eps: f64) -> Result<i64> {
    if !(eps > 0.0 && eps < 2.0) {
        return Err(Error::Domain(format!("eps must lie in (0,2), got {eps}")));
    }
    if !(alpha_t >= 0.0 && alpha_t.is_finite()) {
        return Err(Error::Domain(format!("alphaT must be >= 0, got {alpha_t}")));
    }
    if m_max == 0 {
        return Ok(1);
    }
    let w = (2 * m_max + 1) as f64;
    let raw = m_max as f64 * (w * std::f64::consts::E * alpha_t + (2.0 / eps).ln());
    Ok(raw.ceil() as i64 + 1)
}

/// Fold an energy into the central Brillouin zone [-ω/2, ω/2).
pub fn fold_bz(x: f64, omega: f64) -> f64 {
    fold_with_quotient(x, omega).0
}

/// Fold and return (folded, k) with x = folded + k·ω and folded ∈ [-ω/2, ω/2).
pub fn fold_with_quotient(x: f64, omega: f64) -> (f64, i64) {
    assert!(omega > 0.0);
    let mut k = (x / omega + 0.5).floor() as i64;
    let mut folded = x - k as f64 * omega;
    if folded < -omega / 2.0 {
        folded += omega;
        k -= 1;
    }
    if folded >= omega / 2.0 {
        folded -= omega;
        k += 1;
    }
    (folded, k)
}

/// Index l of the Brillouin zone BZ_l = [(-l-1/2)ω, (-l+1/2)ω) containing x.
pub fn bz_index_of(x: f64, omega: f64) -> i64 {
    -fold_with_quotient(x, omega).1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftMode {
    /// Any support shifted outside the window is an error.
    Strict,
    /// Out-of-window components are dropped; the lost norm is reported.
    Lossy,
}

#[derive(Debug, Clone)]
pub struct ShiftOutcome {
    pub vector: CVec,
    pub lost_norm: f64,
}

/// Add_l on a Sambe vector: the component at l' moves to l' + shift.
pub fn shift_add(
    state: &CVec,
    shift: i64,
    window: SambeWindow,
    system_dim: usize,
    mode: ShiftMode,
) -> Result<ShiftOutcome> {
    let dim = window.fourier_dim() * system_dim;
    if state.len() != dim {
        return Err(Error::Dimension(format!(
            "state length {} does not match window dim {dim}",
            state.len()
        )));
    }
    let mut out: CVec = ndarray::Array1::zeros(dim);
    let mut lost_sq = 0.0;
    for l in window.indices() {
        let src = window.block_of(l) * system_dim;
        let target = l + shift;
        if window.contains(target) {
            let dst = window.block_of(target) * system_dim;
            for s in 0..system_dim {
                out[dst + s] = state[src + s];
            }
        } else {
            for s in 0..system_dim {
                lost_sq += state[src + s].norm_sqr();
            }
        }
    }
    let lost_norm = lost_sq.sqrt();
    if mode == ShiftMode::Strict && lost_norm > 0.0 {
        return Err(Error::Boundary { shift, lost_norm });
    }
    Ok(ShiftOutcome {
        vector: out,
        lost_norm,
    })
}

/// Tail-bound evaluators for Fourier components of Floquet eigenstates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailVariant {
    /// Exact Floquet eigenstate with quasienergy in the central BZ:
    /// exp(-(|l|-1/2)/(2M+1) + sinh1/2π·αT).
    Exact,
    /// Eigenvector of H_F^L with eigenvalue magnitude ε_max:
    /// exp(-(|l|-ε_max/ω)/(2M+1) + sinh1/2π·αT).
    Truncated { eps_max_over_omega: f64 },
    /// Exponentially decaying component class:
    /// exp(-(|l|-1/2)/(4ζ) + coth(1/4ζ)/(8πζ)·αT).
    ExpDecay { zeta: f64 },
    /// Summed tail over Z \ [L]: 9(2M+1)·exp(-L/(2M+1) + sinh1/2π·αT).
    TailSum { cutoff: i64 },
}

pub fn tail_bound(l: i64, m_max: i64, alpha_t: f64, variant: TailVariant) -> f64 {
    let w = (2 * m_max + 1) as f64;
    let drive = sinh1_over_2pi() * alpha_t;
    match variant {
        TailVariant::Exact => (-(l.abs() as f64 - 0.5) / w + drive).exp(),
        TailVariant::Truncated { eps_max_over_omega } => {
            (-(l.abs() as f64 - eps_max_over_omega) / w + drive).exp()
        }
        TailVariant::ExpDecay { zeta } => {
            let coth = 1.0 / (1.0 / (4.0 * zeta)).tanh();
            (-(l.abs() as f64 - 0.5) / (4.0 * zeta)
                + coth / (8.0 * std::f64::consts::PI * zeta) * alpha_t)
                .exp()
        }
        TailVariant::TailSum { cutoff } => {
            9.0 * w * (-(cutoff as f64) / w + drive).exp()
        }
    }
}

/// Register bits b_F^L = 1 + ⌈log₂(2 α_F^L / ω)⌉ so that H_F^L/(2^{b_F}ω)
/// has norm at most 1/2.
pub fn renormalization_bits(alpha_f: f64, omega: f64) -> u32 {
    assert!(alpha_f > 0.0 && omega > 0.0);
    let raw = (2.0 * alpha_f / omega).log2().ceil();
    1 + raw.max(0.0) as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;
    use crate::numerics::{operator_norm, ONE};
    use crate::spectral;
    use ndarray::Array1;
    use proptest::prelude::*;

    #[test]
    fn window_bookkeeping() {
        let w = SambeWindow::new(3).unwrap();
        assert_eq!(w.fourier_dim(), 6);
        assert_eq!(w.indices().collect::<Vec<_>>(), vec![-2, -1, 0, 1, 2, 3]);
        assert_eq!(w.block_of(-2), 0);
        assert_eq!(w.block_of(3), 5);
        assert_eq!(w.index_at(2), 0);
        assert_eq!(w.wrap_add(3, 1), -2);
        assert_eq!(w.wrap_add(-2, -1), 3);
        assert_eq!(w.wrap_add(1, 1), 2);
    }

    #[test]
    fn decoupled_blocks_for_m0() {
        // M = 0, H_0 = c σ_z: block-diagonal with blocks cσ_z - lω, spectrum
        // {±c - lω}.
        let h = models::trivial_sz();
        let omega = h.omega();
        let c = 0.25 * omega;
        let s = build_floquet(&h, 2, Boundary::Obc).unwrap();
        let eig = numerics::hermitian_eigendecompose(s.matrix()).unwrap();
        let mut expect: Vec<f64> = Vec::new();
        for l in [-1i64, 0, 1, 2] {
            expect.push(c - l as f64 * omega);
            expect.push(-c - l as f64 * omega);
        }
        expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in eig.eigenvalues.iter().zip(expect.iter()) {
            assert!((got - want).abs() < 1e-10 * omega);
        }
        // Off-diagonal blocks vanish.
        let off = s.block(1, 0);
        assert!(operator_norm(&off) < 1e-14);
    }

    #[test]
    fn obc_equals_pbc_for_m0() {
        let h = models::trivial_sz();
        let a = build_floquet(&h, 3, Boundary::Obc).unwrap();
        let b = build_floquet(&h, 3, Boundary::Pbc).unwrap();
        let diff = operator_norm(&(a.matrix().matrix() - b.matrix().matrix()));
        assert_eq!(diff, 0.0);
    }

    #[test]
    fn block_structure_and_scale() {
        let h = models::rabi();
        let omega = h.omega();
        let s = build_floquet(&h, 4, Boundary::Obc).unwrap();
        // Diagonal block at l equals H_0 - lω·I.
        for l in s.window.indices() {
            let blk = s.block(l, l);
            let expect = h.component(0).unwrap()
                - &(numerics::identity(2).mapv(|z| z * (l as f64) * omega));
            assert!(operator_norm(&(&blk - &expect)) < 1e-12);
        }
        // |l'-l| > M blocks vanish.
        assert!(operator_norm(&s.block(3, 0)) < 1e-15);
        // ||H_F^L|| <= alpha_F.
        let nrm = operator_norm(s.matrix().matrix());
        assert!(nrm <= s.alpha_f * (1.0 + 1e-12));
        assert!((s.alpha_f - (3.0 * 0.15 * omega + 4.0 * omega)).abs() < 1e-10);
    }

    #[test]
    fn pbc_wraparound_block() {
        let h = models::rabi();
        let s = build_floquet(&h, 4, Boundary::Pbc).unwrap();
        // Hop m=1 from l=4 wraps to l=-3.
        let blk = s.block(-3, 4);
        let h1 = h.component(1).unwrap();
        assert!(operator_norm(&(&blk - h1)) < 1e-13);
    }

    #[test]
    fn pbc_rejects_narrow_window() {
        let h = models::rabi();
        // 2L = 2 < 2M+1 = 3.
        assert!(matches!(
            build_floquet(&h, 1, Boundary::Pbc),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn obc_pbc_central_bz_agree_at_l8() {
        let h = models::rabi();
        let omega = h.omega();
        let a = spectral::diagonalize_sambe(&build_floquet(&h, 8, Boundary::Obc).unwrap()).unwrap();
        let b = spectral::diagonalize_sambe(&build_floquet(&h, 8, Boundary::Pbc).unwrap()).unwrap();
        let ca: Vec<f64> = a.central_bz().map(|e| e.eigenvalue).collect();
        let cb: Vec<f64> = b.central_bz().map(|e| e.eigenvalue).collect();
        assert_eq!(ca.len(), cb.len());
        for (x, y) in ca.iter().zip(cb.iter()) {
            assert!((x - y).abs() < 1e-8 * omega, "{x} vs {y}");
        }
    }

    #[test]
    fn cutoff_for_accuracy_reference_values() {
        assert_eq!(cutoff_for_accuracy(1, 1.0, 1e-3).unwrap(), 36);
        assert_eq!(cutoff_for_accuracy(0, 1.0, 1e-3).unwrap(), 11);
        assert!(matches!(
            cutoff_for_accuracy(1, 1.0, 1.0),
            Err(Error::Domain(_))
        ));
        // Monotone non-decreasing as ε shrinks.
        let mut prev = 0;
        for k in 1..12 {
            let l = cutoff_for_accuracy(1, 1.0, 10f64.powi(-k)).unwrap();
            assert!(l >= prev);
            prev = l;
        }
    }

    #[test]
    fn cutoff_lieb_robinson_reference_values() {
        let eps = 2.0 * (-5.0f64).exp();
        assert_eq!(cutoff_lieb_robinson(1, 0.0, eps).unwrap(), 6);
        assert_eq!(cutoff_lieb_robinson(1, 1.0, 0.01).unwrap(), 15);
        assert_eq!(cutoff_lieb_robinson(0, 5.0, 1e-9).unwrap(), 1);
        // Doubling αT adds ≈ M(2M+1)e·αT.
        let l1 = cutoff_lieb_robinson(1, 1.0, 0.01).unwrap();
        let l2 = cutoff_lieb_robinson(1, 2.0, 0.01).unwrap();
        let slope = 3.0 * std::f64::consts::E;
        assert!(((l2 - l1) as f64 - slope).abs() <= 1.0);
    }

    #[test]
    fn fold_reference_points() {
        let omega = 2.0;
        assert!((fold_bz(0.75 * omega, omega) + 0.25 * omega).abs() < 1e-15);
        assert!((fold_bz(-0.5 * omega, omega) + 0.5 * omega).abs() < 1e-15);
        assert!(fold_bz(2.0 * omega, omega).abs() < 1e-15);
        assert_eq!(bz_index_of(0.5 * omega, omega), -1);
        assert_eq!(bz_index_of(-2.8 * omega, omega), 3);
    }

    #[test]
    fn shift_add_basics() {
        let w = SambeWindow::new(4).unwrap();
        let d = 2;
        let mut v: CVec = Array1::zeros(w.fourier_dim() * d);
        v[w.block_of(0) * d] = ONE;
        // Add_0 = identity.
        let out = shift_add(&v, 0, w, d, ShiftMode::Strict).unwrap();
        assert_eq!(out.vector, v);
        // Delta at 0 shifted by 3 lands at 3.
        let out = shift_add(&v, 3, w, d, ShiftMode::Strict).unwrap();
        assert_eq!(out.vector[w.block_of(3) * d], ONE);
        // Add_{-3}·Add_3 = identity on interior support.
        let back = shift_add(&out.vector, -3, w, d, ShiftMode::Strict).unwrap();
        assert_eq!(back.vector, v);
        // Strict overflow errors with the lost norm.
        let err = shift_add(&v, 5, w, d, ShiftMode::Strict).unwrap_err();
        match err {
            Error::Boundary { lost_norm, .. } => assert!((lost_norm - 1.0).abs() < 1e-15),
            other => panic!("unexpected error {other}"),
        }
        let lossy = shift_add(&v, 5, w, d, ShiftMode::Lossy).unwrap();
        assert!((lossy.lost_norm - 1.0).abs() < 1e-15);
        assert!(numerics::vec_norm(&lossy.vector) < 1e-15);
    }

    #[test]
    fn tail_bound_reference_values() {
        let e = tail_bound(2, 1, 0.0, TailVariant::Exact);
        assert!((e - (-0.5f64).exp()).abs() < 1e-12);
        let vac = tail_bound(0, 1, 0.0, TailVariant::Exact);
        assert!((vac - (1.0f64 / 6.0).exp()).abs() < 1e-12);
        assert!(vac > 1.0);
        let ts = tail_bound(0, 1, 1.0, TailVariant::TailSum { cutoff: 20 });
        let expect = 27.0 * (-20.0 / 3.0 + sinh1_over_2pi()).exp();
        assert!((ts - expect).abs() < 1e-12);
        assert!((ts - 0.0415).abs() < 5e-4);
    }

    #[test]
    fn renormalization_bits_reference() {
        // M = 1, α = 1, L = 10, T = 1 (ω = 2π): α_F = 3 + 20π.
        let omega = 2.0 * std::f64::consts::PI;
        let alpha_f = 3.0 + 20.0 * std::f64::consts::PI;
        assert!((alpha_f - 65.83).abs() < 0.01);
        assert_eq!(renormalization_bits(alpha_f, omega), 6);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn fold_is_idempotent_and_periodic(x in -50.0f64..50.0, omega in 0.1f64..10.0) {
            let f = fold_bz(x, omega);
            prop_assert!((-omega / 2.0..omega / 2.0).contains(&f));
            // x - f is an integer multiple of ω.
            let k = (x - f) / omega;
            prop_assert!((k - k.round()).abs() < 1e-9);
            prop_assert!((fold_bz(f, omega) - f).abs() < 1e-12 * omega);
            let g = fold_bz(x + omega, omega);
            prop_assert!((g - f).abs() < 1e-9 * omega);
        }
    }
}
