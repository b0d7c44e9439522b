//! Explicit block-encoding unitaries: LCU encodings of the Fourier-component
//! Hamiltonians H_m, and the composite encoding of the pbc truncated Floquet
//! Hamiltonian built from O₁ (shift ⊗ LCU over m), O₂ (linear potential), and
//! the two-qubit combiner G_c.
//!
//! Conventions: the full space is ancilla ⊗ target with the ancilla factor
//! leading and its reference state at index 0, so the encoded block is the
//! top-left target_dim × target_dim corner of the unitary.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hamiltonian::{FourierHamiltonian, Pauli, PauliTerm};
use crate::numerics::{
    self, dagger, identity, kron, operator_norm, singular_values, CMat, CVec, ONE, ZERO,
};
use crate::sambe::SambeWindow;

#[derive(Debug, Clone)]
pub struct BlockEncoding {
    pub unitary: CMat,
    /// Product of all ancilla register dimensions (1 = no ancilla).
    pub ancilla_dim: usize,
    pub target_dim: usize,
    /// Normalization α̃ with block = A/α̃.
    pub alpha: f64,
    /// How many O_{H_m} sub-encodings the construction consumes.
    pub query_count: usize,
}

impl BlockEncoding {
    pub fn dim(&self) -> usize {
        self.ancilla_dim * self.target_dim
    }

    /// (⟨0|_a ⊗ I) U (|0⟩_a ⊗ I).
    pub fn block(&self) -> CMat {
        let d = self.target_dim;
        self.unitary.slice(ndarray::s![..d, ..d]).to_owned()
    }
}

#[derive(Debug, Clone)]
pub struct EncodingReport {
    /// ||⟨0|U|0⟩·α̃ - target|| in operator norm.
    pub block_error: f64,
    /// ||U†U - I||.
    pub unitarity_defect: f64,
}

/// Measure how well `be` encodes `target`.
pub fn verify_encoding(be: &BlockEncoding, target: &CMat) -> Result<EncodingReport> {
    if target.nrows() != be.target_dim || target.ncols() != be.target_dim {
        return Err(Error::Structural(format!(
            "target is {}x{} but encoding targets dim {}",
            target.nrows(),
            target.ncols(),
            be.target_dim
        )));
    }
    let scaled = be.block().mapv(|z| z * be.alpha);
    let block_error = operator_norm(&(&scaled - target));
    let unitarity_defect = if be.dim() <= 1024 {
        numerics::unitarity_defect(&be.unitary)
    } else {
        gram_defect_power(&be.unitary)
    };
    Ok(EncodingReport {
        block_error,
        unitarity_defect,
    })
}

/// ||U†U - I|| by power iteration on the Hermitian defect matrix; used for
/// unitaries too large for a dense SVD.
fn gram_defect_power(u: &CMat) -> f64 {
    let mut g = dagger(u).dot(u);
    let n = g.nrows();
    for i in 0..n {
        g[[i, i]] -= ONE;
    }
    let mut v: CVec = ndarray::Array1::from_elem(n, Complex64::new(1.0 / (n as f64).sqrt(), 0.0));
    let mut lam = 0.0;
    for _ in 0..60 {
        let w = g.dot(&v);
        let nrm = numerics::vec_norm(&w);
        if nrm < 1e-300 {
            return 0.0;
        }
        v = w.mapv(|z| z / nrm);
        lam = nrm;
    }
    lam
}

/// Unitary completion with a prescribed (unit-norm) first column, by
/// Gram-Schmidt against the standard basis minus the pivot coordinate.
pub fn completion_unitary(first_column: &CVec) -> Result<CMat> {
    let n = first_column.len();
    let nrm = numerics::vec_norm(first_column);
    if (nrm - 1.0).abs() > 1e-10 {
        return Err(Error::Contract(format!(
            "completion column must be unit norm, got {nrm}"
        )));
    }
    let pivot = (0..n)
        .max_by(|&i, &j| {
            first_column[i]
                .norm()
                .partial_cmp(&first_column[j].norm())
                .unwrap()
        })
        .unwrap();
    let mut cols: Vec<CVec> = vec![first_column.clone()];
    for j in 0..n {
        if j == pivot {
            continue;
        }
        let mut e: CVec = ndarray::Array1::zeros(n);
        e[j] = ONE;
        for c in &cols {
            let proj = numerics::inner(c, &e);
            e.zip_mut_with(c, |a, b| *a -= proj * b);
        }
        let en = numerics::vec_norm(&e);
        if en < 1e-8 {
            return Err(Error::Numeric("completion basis degenerated".into()));
        }
        cols.push(e.mapv(|z| z / en));
    }
    let mut g: CMat = Array2::zeros((n, n));
    for (j, c) in cols.iter().enumerate() {
        g.column_mut(j).assign(c);
    }
    Ok(g)
}

/// Exact Pauli-basis decomposition of a dense matrix on n qubits:
/// coeff(P) = tr(P·H)/2^N. Zero coefficients are dropped.
pub fn pauli_decompose(h: &CMat, n_qubits: usize) -> Vec<PauliTerm> {
    let dim = 1usize << n_qubits;
    assert_eq!(h.nrows(), dim);
    let scale = numerics::max_abs_entry(h).max(1.0);
    let mut out = Vec::new();
    let letters = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
    for code in 0..4usize.pow(n_qubits as u32) {
        let mut string = Vec::with_capacity(n_qubits);
        let mut c = code;
        for _ in 0..n_qubits {
            string.push(letters[c % 4]);
            c /= 4;
        }
        string.reverse();
        let term = PauliTerm {
            coefficient: ONE,
            string: string.clone(),
        };
        let p = term.matrix();
        let mut tr = ZERO;
        for i in 0..dim {
            for j in 0..dim {
                tr += p[[i, j]] * h[[j, i]];
            }
        }
        let coeff = tr / dim as f64;
        if coeff.norm() > 1e-13 * scale {
            out.push(PauliTerm {
                coefficient: coeff,
                string,
            });
        }
    }
    out
}

/// LCU block-encoding of Σ_k c_k P_k with normalization α ≥ Σ|c_k|. The
/// coefficient phases are absorbed into the select unitaries; leftover
/// normalization slack is burned on a ±I pair so the block stays exact.
pub fn build_pauli_encoding(
    terms: &[PauliTerm],
    n_qubits: usize,
    alpha: f64,
) -> Result<BlockEncoding> {
    if terms.is_empty() {
        return Err(Error::Validation(
            "refusing to encode an empty term list (H = 0)".into(),
        ));
    }
    let dim = 1usize << n_qubits;
    let mut weights: Vec<f64> = Vec::new();
    let mut unitaries: Vec<CMat> = Vec::new();
    let mut total = 0.0;
    for t in terms {
        if t.string.len() != n_qubits {
            return Err(Error::Validation(format!(
                "Pauli string length {} does not match n_qubits {n_qubits}",
                t.string.len()
            )));
        }
        let c = t.coefficient.norm();
        if c == 0.0 {
            continue;
        }
        let phase = t.coefficient / c;
        let phased = PauliTerm {
            coefficient: phase,
            string: t.string.clone(),
        };
        weights.push(c);
        unitaries.push(phased.matrix());
        total += c;
    }
    if weights.is_empty() {
        return Err(Error::Validation("all coefficients vanish (H = 0)".into()));
    }
    if alpha < total * (1.0 - 1e-12) {
        return Err(Error::Normalization(format!(
            "alpha = {alpha:.12e} is below the coefficient 1-norm {total:.12e}"
        )));
    }

    // Zero-ancilla fast path: a single term saturating the normalization.
    if weights.len() == 1 && (alpha - total).abs() <= 1e-12 * alpha.max(1.0) {
        return Ok(BlockEncoding {
            unitary: unitaries.pop().unwrap(),
            ancilla_dim: 1,
            target_dim: dim,
            alpha,
            query_count: 1,
        });
    }

    let slack = alpha - total;
    if slack > 1e-14 * alpha {
        weights.push(slack / 2.0);
        unitaries.push(identity(dim));
        weights.push(slack / 2.0);
        unitaries.push(identity(dim).mapv(|z| -z));
    }
    let k = weights.len();
    let prep_col: CVec = ndarray::Array1::from_iter(
        weights.iter().map(|w| Complex64::new((w / alpha).sqrt(), 0.0)),
    );
    let g = completion_unitary(&prep_col)?;

    let full = k * dim;
    let mut sel: CMat = Array2::zeros((full, full));
    for (idx, u) in unitaries.iter().enumerate() {
        let off = idx * dim;
        let mut blockview = sel.slice_mut(ndarray::s![off..off + dim, off..off + dim]);
        blockview.assign(u);
    }
    let g_emb = kron(&g, &identity(dim));
    let unitary = dagger(&g_emb).dot(&sel).dot(&g_emb);
    Ok(BlockEncoding {
        unitary,
        ancilla_dim: k,
        target_dim: dim,
        alpha,
        query_count: 1,
    })
}

/// O₁: block-encoding of Σ_m Add_m^{[L]} ⊗ H_m with normalization Σ_m α_m.
/// Ancilla = (m-register of dim 2M+1) ⊗ (padded LCU ancilla); target = f ⊗ sys.
pub fn build_shift_lcu(h: &FourierHamiltonian, l_cut: i64) -> Result<BlockEncoding> {
    let window = SambeWindow::new(l_cut)?;
    let m_max = h.support_m_max();
    if 2 * l_cut < 2 * m_max + 1 {
        return Err(Error::Dimension(format!(
            "pbc window 2L = {} cannot host hopping range M = {m_max}",
            2 * l_cut
        )));
    }
    let d = h.system_dim();
    let f_dim = window.fourier_dim();
    let n_m = (2 * m_max + 1) as usize;

    // Sub-encodings O_{H_m} with normalization α_m; absent components carry
    // zero prep weight and an identity placeholder.
    let mut subs: Vec<Option<BlockEncoding>> = Vec::with_capacity(n_m);
    let mut alpha_ms: Vec<f64> = Vec::with_capacity(n_m);
    for m in -m_max..=m_max {
        match h.component(m) {
            Some(hm) => {
                let am = h.alpha_m(m).expect("stored component has alpha_m");
                let terms = pauli_decompose(hm, h.n_qubits());
                subs.push(Some(build_pauli_encoding(&terms, h.n_qubits(), am)?));
                alpha_ms.push(am);
            }
            None => {
                subs.push(None);
                alpha_ms.push(0.0);
            }
        }
    }
    let alpha1: f64 = alpha_ms.iter().sum();
    let a_pad = subs
        .iter()
        .map(|s| s.as_ref().map_or(1, |b| b.ancilla_dim))
        .max()
        .unwrap();

    // SEL = Σ_m |m⟩⟨m| ⊗ [Add_m on f interleaved with O_{H_m} on (a_pad, sys)].
    let sub_dim = a_pad * f_dim * d;
    let total = n_m * sub_dim;
    let idx = |mi: usize, a: usize, lb: usize, s: usize| ((mi * a_pad + a) * f_dim + lb) * d + s;
    let mut sel: CMat = Array2::zeros((total, total));
    for (mi, sub) in subs.iter().enumerate() {
        let m = mi as i64 - m_max;
        // The sub-encoding on (a_pad ⊗ sys), padded with identity on the
        // extra ancilla states.
        let mut u_pad: CMat = Array2::zeros((a_pad * d, a_pad * d));
        match sub {
            Some(b) => {
                let bd = b.dim();
                let mut top = u_pad.slice_mut(ndarray::s![..bd, ..bd]);
                top.assign(&b.unitary);
                for i in bd..a_pad * d {
                    u_pad[[i, i]] = ONE;
                }
            }
            None => {
                for i in 0..a_pad * d {
                    u_pad[[i, i]] = ONE;
                }
            }
        }
        for l in window.indices() {
            let lb = window.block_of(l);
            let tb = window.block_of(window.wrap_add(l, m));
            for a_row in 0..a_pad {
                for s_row in 0..d {
                    for a_col in 0..a_pad {
                        for s_col in 0..d {
                            let val = u_pad[[a_row * d + s_row, a_col * d + s_col]];
                            if val != ZERO {
                                sel[[idx(mi, a_row, tb, s_row), idx(mi, a_col, lb, s_col)]] = val;
                            }
                        }
                    }
                }
            }
        }
    }

    // G_M prep over m with weights √(α_m / α₁).
    let prep: CVec = ndarray::Array1::from_iter(
        alpha_ms
            .iter()
            .map(|am| Complex64::new((am / alpha1).sqrt(), 0.0)),
    );
    let g_m = completion_unitary(&prep)?;
    let g_emb = kron(&g_m, &identity(sub_dim));
    let unitary = dagger(&g_emb).dot(&sel).dot(&g_emb);
    Ok(BlockEncoding {
        unitary,
        ancilla_dim: n_m * a_pad,
        target_dim: f_dim * d,
        alpha: alpha1,
        query_count: n_m,
    })
}

/// O₂: one-ancilla-qubit dilation of the linear potential,
/// ⟨0|O₂|0⟩ = -Σ_l (l/L)|l⟩⟨l|, normalization Lω. Target = f register.
pub fn build_linear_potential(l_cut: i64, omega: f64) -> Result<BlockEncoding> {
    let window = SambeWindow::new(l_cut)?;
    let f_dim = window.fourier_dim();
    let dim = 2 * f_dim;
    let mut u: CMat = Array2::zeros((dim, dim));
    for l in window.indices() {
        let lb = window.block_of(l);
        let dl = -(l as f64) / l_cut as f64;
        let s = (1.0 - dl * dl).max(0.0).sqrt();
        // 2x2 rotation [[d, -s], [s, d]] on the ancilla qubit, diagonal in l.
        u[[lb, lb]] = Complex64::new(dl, 0.0);
        u[[lb, f_dim + lb]] = Complex64::new(-s, 0.0);
        u[[f_dim + lb, lb]] = Complex64::new(s, 0.0);
        u[[f_dim + lb, f_dim + lb]] = Complex64::new(dl, 0.0);
    }
    Ok(BlockEncoding {
        unitary: u,
        ancilla_dim: 2,
        target_dim: f_dim,
        alpha: l_cut as f64 * omega,
        query_count: 0,
    })
}

/// Composite block-encoding of H_F,pbc^L with normalization α̃ ≥ α_F^L:
/// O₁ and O₂ combined through the two-qubit prep G_c. Ancilla registers are
/// ordered (c, m-register ⊗ LCU ancilla, O₂ qubit); target is f ⊗ sys.
pub fn build_floquet_encoding(
    h: &FourierHamiltonian,
    l_cut: i64,
    alpha_tilde: f64,
) -> Result<BlockEncoding> {
    let omega = h.omega();
    let alpha_f = h.norm_bound() + l_cut as f64 * omega;
    if alpha_tilde < alpha_f * (1.0 - 1e-14) {
        return Err(Error::Normalization(format!(
            "alpha_tilde = {alpha_tilde:.12e} is below alpha_F^L = {alpha_f:.12e}"
        )));
    }
    let o1 = build_shift_lcu(h, l_cut)?;
    let o2 = build_linear_potential(l_cut, omega)?;
    let d = h.system_dim();
    let f_dim = o2.target_dim;
    let target_dim = f_dim * d;
    let a1 = o1.ancilla_dim;

    // Common register space r = (a1) ⊗ (f'' qubit) ⊗ f ⊗ sys.
    let r_dim = a1 * 2 * target_dim;
    let idx = |a: usize, fp: usize, l: usize, s: usize| ((a * 2 + fp) * f_dim + l) * d + s;

    // O₁ embedded: acts on (a1, f, sys), identity on f''.
    let mut o1_emb: CMat = Array2::zeros((r_dim, r_dim));
    for ar in 0..a1 {
        for ac in 0..a1 {
            for lr in 0..f_dim {
                for lc in 0..f_dim {
                    for sr in 0..d {
                        for sc in 0..d {
                            let val =
                                o1.unitary[[(ar * f_dim + lr) * d + sr, (ac * f_dim + lc) * d + sc]];
                            if val != ZERO {
                                for fp in 0..2 {
                                    o1_emb[[idx(ar, fp, lr, sr), idx(ac, fp, lc, sc)]] = val;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // O₂ embedded: acts on (f'', f), identity on a1 and sys.
    let mut o2_emb: CMat = Array2::zeros((r_dim, r_dim));
    for fr in 0..2 {
        for fc in 0..2 {
            for lr in 0..f_dim {
                for lc in 0..f_dim {
                    let val = o2.unitary[[fr * f_dim + lr, fc * f_dim + lc]];
                    if val != ZERO {
                        for a in 0..a1 {
                            for s in 0..d {
                                o2_emb[[idx(a, fr, lr, s), idx(a, fc, lc, s)]] = val;
                            }
                        }
                    }
                }
            }
        }
    }

    // Two-qubit combiner: |00⟩ → √(α₁/α̃)|00⟩ + √(Lω/α̃)|01⟩ + √(slack/α̃)|10⟩.
    let slack = (alpha_tilde - o1.alpha - o2.alpha).max(0.0);
    let col: CVec = ndarray::Array1::from_vec(vec![
        Complex64::new((o1.alpha / alpha_tilde).sqrt(), 0.0),
        Complex64::new((o2.alpha / alpha_tilde).sqrt(), 0.0),
        Complex64::new((slack / alpha_tilde).sqrt(), 0.0),
        ZERO,
    ]);
    let g_c = completion_unitary(&col)?;

    // X = |00⟩⟨00|⊗O₁ + |01⟩⟨01|⊗O₂ + (|10⟩⟨11| + |11⟩⟨10|)⊗I, then
    // U = (G_c† ⊗ I) X (G_c ⊗ I), assembled c-block by c-block.
    let eye: CMat = identity(r_dim);
    let mut u: CMat = Array2::zeros((4 * r_dim, 4 * r_dim));
    for i in 0..4 {
        for j in 0..4 {
            let w1 = g_c[[0, i]].conj() * g_c[[0, j]];
            let w2 = g_c[[1, i]].conj() * g_c[[1, j]];
            let w3 = g_c[[2, i]].conj() * g_c[[3, j]] + g_c[[3, i]].conj() * g_c[[2, j]];
            if w1.norm() < 1e-16 && w2.norm() < 1e-16 && w3.norm() < 1e-16 {
                continue;
            }
            let mut block = u.slice_mut(ndarray::s![
                i * r_dim..(i + 1) * r_dim,
                j * r_dim..(j + 1) * r_dim
            ]);
            block.zip_mut_with(&o1_emb, |a, b| *a += w1 * b);
            block.zip_mut_with(&o2_emb, |a, b| *a += w2 * b);
            block.zip_mut_with(&eye, |a, b| *a += w3 * b);
        }
    }

    Ok(BlockEncoding {
        unitary: u,
        ancilla_dim: 4 * a1 * 2,
        target_dim,
        alpha: alpha_tilde,
        query_count: o1.query_count,
    })
}

/// Controlled version by direct-sum embedding: diag(I, U).
pub fn controlled(u: &CMat) -> CMat {
    let n = u.nrows();
    let mut out: CMat = Array2::zeros((2 * n, 2 * n));
    for i in 0..n {
        out[[i, i]] = ONE;
    }
    let mut lower = out.slice_mut(ndarray::s![n..2 * n, n..2 * n]);
    lower.assign(u);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;
    use crate::sambe::{build_floquet, renormalization_bits, Boundary};

    fn term(re: f64, im: f64, s: &str) -> PauliTerm {
        PauliTerm::parse(Complex64::new(re, im), s).unwrap()
    }

    #[test]
    fn zero_ancilla_single_pauli() {
        let be = build_pauli_encoding(&[term(1.0, 0.0, "X")], 1, 1.0).unwrap();
        assert_eq!(be.ancilla_dim, 1);
        let x = Pauli::X.matrix();
        assert!(operator_norm(&(&be.unitary - &x)) < 1e-14);
    }

    #[test]
    fn lcu_two_terms_exact() {
        let terms = [term(0.5, 0.0, "X"), term(0.5, 0.0, "Z")];
        let be = build_pauli_encoding(&terms, 1, 1.0).unwrap();
        let target = &Pauli::X.matrix().mapv(|z| z * 0.5) + &Pauli::Z.matrix().mapv(|z| z * 0.5);
        let rep = verify_encoding(&be, &target).unwrap();
        assert!(rep.block_error < 1e-12, "block error {}", rep.block_error);
        assert!(rep.unitarity_defect < 1e-12);
    }

    #[test]
    fn lcu_with_slack_and_phases() {
        let terms = [
            term(0.3, 0.4, "XY"),
            term(-0.2, 0.1, "ZI"),
            term(0.0, 0.25, "YY"),
        ];
        let mut target: CMat = Array2::zeros((4, 4));
        for t in &terms {
            target = &target + &t.matrix();
        }
        let be = build_pauli_encoding(&terms, 2, 2.0).unwrap();
        let rep = verify_encoding(&be, &target).unwrap();
        assert!(rep.block_error < 1e-12, "block error {}", rep.block_error);
        assert!(rep.unitarity_defect < 1e-12);
    }

    #[test]
    fn rejects_empty_and_small_alpha() {
        assert!(matches!(
            build_pauli_encoding(&[], 1, 1.0),
            Err(Error::Validation(_))
        ));
        let terms = [term(0.8, 0.0, "X"), term(0.8, 0.0, "Z")];
        assert!(matches!(
            build_pauli_encoding(&terms, 1, 1.0),
            Err(Error::Normalization(_))
        ));
    }

    #[test]
    fn identity_encoding_error_free_and_corruption_detected() {
        let be = build_pauli_encoding(&[term(1.0, 0.0, "I")], 1, 1.0).unwrap();
        let rep = verify_encoding(&be, &identity(2)).unwrap();
        assert_eq!(rep.block_error, 0.0);

        let mut corrupted = be.clone();
        corrupted.unitary[[0, 0]] += Complex64::new(1e-3, 0.0);
        let rep = verify_encoding(&corrupted, &identity(2)).unwrap();
        assert!((rep.block_error - 1e-3).abs() < 1e-10);
    }

    #[test]
    fn pauli_decompose_roundtrip() {
        let h = models::circular();
        for (_, hm) in h.components() {
            let terms = pauli_decompose(hm, 1);
            let mut recon: CMat = Array2::zeros((2, 2));
            for t in &terms {
                recon = &recon + &t.matrix();
            }
            assert!(operator_norm(&(&recon - hm)) < 1e-12);
        }
    }

    #[test]
    fn linear_potential_block() {
        let omega = 2.0 * std::f64::consts::PI;
        let be = build_linear_potential(3, omega).unwrap();
        let window = SambeWindow::new(3).unwrap();
        let mut target: CMat = Array2::zeros((6, 6));
        for l in window.indices() {
            let b = window.block_of(l);
            target[[b, b]] = Complex64::new(-(l as f64) * omega, 0.0);
        }
        let rep = verify_encoding(&be, &target).unwrap();
        assert!(rep.block_error < 1e-12);
        assert!(rep.unitarity_defect < 1e-12);
    }

    #[test]
    fn floquet_encoding_m0() {
        // M = 0, H_0 = (ω/4)σ_z, L = 1: block equals H_F,pbc / α̃.
        let h = models::trivial_sz();
        let omega = h.omega();
        let alpha_f = h.norm_bound() + omega;
        let be = build_floquet_encoding(&h, 1, alpha_f).unwrap();
        let target = build_floquet(&h, 1, Boundary::Pbc).unwrap();
        let rep = verify_encoding(&be, target.matrix().matrix()).unwrap();
        assert!(rep.block_error < 1e-10 * alpha_f, "{}", rep.block_error);
        assert!(rep.unitarity_defect < 1e-10);
    }

    #[test]
    fn floquet_encoding_rabi_l4() {
        let h = models::rabi();
        let omega = h.omega();
        let alpha_f = 3.0 * 0.15 * omega + 4.0 * omega;
        let be = build_floquet_encoding(&h, 4, alpha_f).unwrap();
        assert_eq!(be.query_count, 3);
        let target = build_floquet(&h, 4, Boundary::Pbc).unwrap();
        assert!((target.alpha_f - alpha_f).abs() < 1e-10);
        let rep = verify_encoding(&be, target.matrix().matrix()).unwrap();
        assert!(rep.block_error < 1e-10 * alpha_f, "{}", rep.block_error);
        assert!(rep.unitarity_defect < 1e-10);
        // Ancilla budget stays within the documented 2^{n_a}·8L·4 cap.
        let n_a = ((be.ancilla_dim / 8) as f64).log2().ceil();
        assert!(be.ancilla_dim as f64 <= 2f64.powf(n_a) * 8.0 * 4.0 * 4.0);
    }

    #[test]
    fn floquet_encoding_rejects_small_alpha() {
        let h = models::rabi();
        let omega = h.omega();
        let alpha_f = 3.0 * 0.15 * omega + 4.0 * omega;
        assert!(matches!(
            build_floquet_encoding(&h, 4, alpha_f - 1e-6),
            Err(Error::Normalization(_))
        ));
    }

    #[test]
    fn prop3_reference_values() {
        // M = 1, α = 1, L = 10, T = 1: α_F = 3 + 20π ≈ 65.83, b_F = 6.
        let omega = 2.0 * std::f64::consts::PI;
        let alpha_f = 3.0 * 1.0 + 10.0 * omega;
        assert!((alpha_f - 65.83).abs() < 0.01);
        assert_eq!(renormalization_bits(alpha_f, omega), 6);
    }

    #[test]
    fn controlled_embedding() {
        let x = Pauli::X.matrix();
        let c = controlled(&x);
        assert!(numerics::unitarity_defect(&c) < 1e-14);
        assert_eq!(c[[0, 0]], ONE);
        assert_eq!(c[[2, 3]], ONE);
    }

    #[test]
    fn completion_unitary_first_column() {
        let v: CVec = ndarray::Array1::from_vec(vec![
            Complex64::new(0.6, 0.0),
            Complex64::new(0.0, 0.8),
        ]);
        let g = completion_unitary(&v).unwrap();
        assert!(numerics::unitarity_defect(&g) < 1e-12);
        assert!((g[[0, 0]] - v[0]).norm() < 1e-12);
        assert!((g[[1, 0]] - v[1]).norm() < 1e-12);
    }

    #[test]
    fn shift_lcu_is_unitary() {
        let h = models::rabi();
        let be = build_shift_lcu(&h, 4).unwrap();
        let s = singular_values(&be.unitary).unwrap();
        assert!((s[0] - 1.0).abs() < 1e-10);
        assert!((s[s.len() - 1] - 1.0).abs() < 1e-10);
        let target = {
            // Σ_m Add_m ⊗ H_m = H_F,pbc + Σ_l lω|l⟩⟨l| ⊗ I.
            let full = build_floquet(&h, 4, Boundary::Pbc).unwrap();
            let mut t = full.matrix().matrix().clone();
            let wdw = full.window;
            for l in wdw.indices() {
                let off = wdw.block_of(l) * 2;
                for sdim in 0..2 {
                    t[[off + sdim, off + sdim]] += Complex64::new(l as f64 * h.omega(), 0.0);
                }
            }
            t
        };
        let rep = verify_encoding(&be, &target).unwrap();
        assert!(rep.block_error < 1e-10, "{}", rep.block_error);
    }
}
