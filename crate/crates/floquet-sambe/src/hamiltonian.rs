//! Time-periodic Hamiltonians H(t) = Σ_m H_m e^{-imωt}.
//!
//! Two input classes are supported: a bounded Fourier index |m| <= M with
//! M = O(1), and exponentially decaying components ||H_m|| <= α e^{-|m|/ζ}.
//! Components are entered either as Pauli sums or dense matrices; omitted
//! negative components are auto-filled as H_{-m} = H_m†.

use std::collections::BTreeMap;

use ndarray::Array2;
use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::numerics::{
    self, dagger, frobenius_norm, kron, max_abs_entry, CMat, Hermitian, ONE, ZERO,
};

/// Numerical floor below which decaying-mode components are treated as zero.
const ETA_MACHINE: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(Error::Parse(format!("unknown Pauli letter '{other}'"))),
        }
    }

    pub fn matrix(self) -> CMat {
        let i = Complex64::new(0.0, 1.0);
        match self {
            Pauli::I => ndarray::array![[ONE, ZERO], [ZERO, ONE]],
            Pauli::X => ndarray::array![[ZERO, ONE], [ONE, ZERO]],
            Pauli::Y => ndarray::array![[ZERO, -i], [i, ZERO]],
            Pauli::Z => ndarray::array![[ONE, ZERO], [ZERO, -ONE]],
        }
    }
}

/// One weighted Pauli string; the string length must equal the qubit count.
#[derive(Debug, Clone)]
pub struct PauliTerm {
    pub coefficient: Complex64,
    pub string: Vec<Pauli>,
}

impl PauliTerm {
    pub fn parse(coefficient: Complex64, s: &str) -> Result<Self> {
        let string = s.chars().map(Pauli::from_char).collect::<Result<Vec<_>>>()?;
        Ok(Self {
            coefficient,
            string,
        })
    }

    pub fn matrix(&self) -> CMat {
        let mut out = ndarray::array![[self.coefficient]];
        for p in &self.string {
            out = kron(&out, &p.matrix());
        }
        out
    }
}

pub fn pauli_sum_matrix(terms: &[PauliTerm], n_qubits: usize) -> Result<CMat> {
    let dim = 1usize << n_qubits;
    let mut acc: CMat = Array2::zeros((dim, dim));
    for t in terms {
        if t.string.len() != n_qubits {
            return Err(Error::Validation(format!(
                "Pauli string length {} does not match n_qubits {}",
                t.string.len(),
                n_qubits
            )));
        }
        acc = &acc + &t.matrix();
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Mode {
    /// Components vanish for |m| > m_max; m_max is O(1), enforced as <= 8.
    Bounded { m_max: i64 },
    /// ||H_m|| <= alpha e^{-|m|/zeta}; components beyond m_eff are dropped as
    /// numerically zero (below kernel tolerance).
    Decaying { alpha: f64, zeta: f64, m_eff: i64 },
}

#[derive(Debug, Clone)]
pub struct FourierHamiltonian {
    n_qubits: usize,
    period: f64,
    components: BTreeMap<i64, CMat>,
    alpha_m: BTreeMap<i64, f64>,
    mode: Mode,
    alpha: f64,
}

impl FourierHamiltonian {
    /// Build and validate from already-materialized dense components.
    /// `alpha_m` entries default to the measured ||H_m||.
    pub fn from_components(
        n_qubits: usize,
        period: f64,
        mode_in: ModeSpec,
        components: BTreeMap<i64, CMat>,
        alpha_m_in: BTreeMap<i64, f64>,
    ) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::Validation("n_qubits must be >= 1".into()));
        }
        if !(period.is_finite() && period > 0.0) {
            return Err(Error::Validation("period must be positive".into()));
        }
        let dim = 1usize << n_qubits;
        for (m, h) in &components {
            if h.nrows() != dim || h.ncols() != dim {
                return Err(Error::Validation(format!(
                    "component m={m} has shape {}x{} but system dim is {dim}",
                    h.nrows(),
                    h.ncols()
                )));
            }
            if !numerics::all_finite(h) {
                return Err(Error::Validation(format!(
                    "component m={m} has non-finite entries"
                )));
            }
        }

        // Auto-fill H_{-m} = H_m†.
        let mut components = components;
        let keys: Vec<i64> = components.keys().copied().collect();
        for m in keys {
            if !components.contains_key(&(-m)) {
                let adj = dagger(&components[&m]);
                components.insert(-m, adj);
            }
        }

        // Hermiticity of H(t): H_{-m} = H_m† entrywise.
        for (m, h) in &components {
            let other = &components[&(-m)];
            let diff = max_abs_entry(&(other - &dagger(h)));
            let tol = 1e-12 * frobenius_norm(h).max(1.0);
            if diff > tol {
                return Err(Error::Validation(format!(
                    "H_{{{}}} != H_{{{}}}† (max entry deviation {diff:.3e})",
                    -m, m
                )));
            }
        }

        // Drop numerically-zero components to keep the support minimal.
        components.retain(|_, h| max_abs_entry(h) > 0.0);

        let mut norms = BTreeMap::new();
        for (m, h) in &components {
            norms.insert(*m, numerics::operator_norm(h));
        }

        let mode = match mode_in {
            ModeSpec::Bounded { m_max } => {
                if m_max < 0 || m_max > 8 {
                    return Err(Error::Validation(format!(
                        "bounded mode requires 0 <= M <= 8, got {m_max}"
                    )));
                }
                if let Some((m, _)) = components.iter().find(|(m, _)| m.abs() > m_max) {
                    return Err(Error::Validation(format!(
                        "component m={m} exceeds bounded cutoff M={m_max}"
                    )));
                }
                Mode::Bounded { m_max }
            }
            ModeSpec::Decaying { alpha, zeta } => {
                if !(alpha > 0.0 && zeta > 0.0) {
                    return Err(Error::Validation(
                        "decaying mode requires alpha > 0 and zeta > 0".into(),
                    ));
                }
                let m_eff = (zeta * (alpha / ETA_MACHINE).ln()).ceil() as i64;
                components.retain(|m, _| m.abs() <= m_eff);
                norms.retain(|m, _| m.abs() <= m_eff);
                for (m, nrm) in &norms {
                    let ceiling = alpha * (-(m.abs() as f64) / zeta).exp();
                    if *nrm > ceiling * (1.0 + 1e-12) {
                        return Err(Error::Validation(format!(
                            "||H_{{{m}}}|| = {nrm:.6e} exceeds decay envelope {ceiling:.6e}"
                        )));
                    }
                }
                Mode::Decaying {
                    alpha,
                    zeta,
                    m_eff,
                }
            }
        };

        // alpha_m >= ||H_m||, defaulting to the measured norm.
        let mut alpha_m = BTreeMap::new();
        for (m, nrm) in &norms {
            let bound = alpha_m_in.get(m).copied().unwrap_or(*nrm);
            if bound < nrm - 1e-12 * nrm.max(1.0) {
                return Err(Error::Validation(format!(
                    "alpha_{m} = {bound:.6e} is below ||H_{m}|| = {nrm:.6e}"
                )));
            }
            alpha_m.insert(*m, bound.max(*nrm));
        }

        let alpha = match &mode {
            Mode::Bounded { .. } => alpha_m.values().copied().fold(0.0, f64::max),
            Mode::Decaying { alpha, .. } => *alpha,
        };
        if alpha <= 0.0 {
            return Err(Error::Validation(
                "Hamiltonian has no nonzero component".into(),
            ));
        }

        Ok(Self {
            n_qubits,
            period,
            components,
            alpha_m,
            mode,
            alpha,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn system_dim(&self) -> usize {
        1usize << self.n_qubits
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    pub fn omega(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.period
    }

    pub fn mode(&self) -> &Mode {
        &self.mode
    }

    /// Largest Fourier index of the model: M for bounded mode, the numeric
    /// cutoff m_eff for decaying mode.
    pub fn m_max(&self) -> i64 {
        match &self.mode {
            Mode::Bounded { m_max } => *m_max,
            Mode::Decaying { m_eff, .. } => *m_eff,
        }
    }

    /// Largest Fourier index actually carrying a nonzero component.
    /// Coincides with M in bounded mode; may be well below m_eff in
    /// decaying mode.
    pub fn support_m_max(&self) -> i64 {
        self.components.keys().map(|m| m.abs()).max().unwrap_or(0)
    }

    /// The scale α: max_m α_m in bounded mode, the envelope prefactor in
    /// decaying mode.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Dimensionless αT.
    pub fn alpha_t(&self) -> f64 {
        self.alpha * self.period
    }

    pub fn alpha_m(&self, m: i64) -> Option<f64> {
        self.alpha_m.get(&m).copied()
    }

    pub fn sum_alpha_m(&self) -> f64 {
        self.alpha_m.values().sum()
    }

    pub fn component(&self, m: i64) -> Option<&CMat> {
        self.components.get(&m)
    }

    pub fn components(&self) -> impl Iterator<Item = (i64, &CMat)> {
        self.components.iter().map(|(m, h)| (*m, h))
    }

    pub fn stored_indices(&self) -> Vec<i64> {
        self.components.keys().copied().collect()
    }

    /// H(t) = Σ_m H_m e^{-imωt}, Hermitian-tagged. The time argument is
    /// reduced mod T so that evaluate_at(t + T) == evaluate_at(t) to rounding.
    pub fn evaluate_at(&self, t: f64) -> Result<Hermitian> {
        let tau = t - self.period * (t / self.period).floor();
        let omega = self.omega();
        let dim = self.system_dim();
        let mut acc: CMat = Array2::zeros((dim, dim));
        for (m, h) in &self.components {
            let phase = Complex64::from_polar(1.0, -(*m as f64) * omega * tau);
            acc.zip_mut_with(h, |a, b| *a += phase * b);
        }
        Hermitian::new(acc)
    }

    /// Norm bound on H(t): (2M+1)α in bounded mode; the geometric-series
    /// analog α(2/(1-e^{-1/ζ}) - 1) in decaying mode (sum of the envelope
    /// over all m ∈ Z).
    pub fn norm_bound(&self) -> f64 {
        match &self.mode {
            Mode::Bounded { m_max } => (2 * m_max + 1) as f64 * self.alpha,
            Mode::Decaying { alpha, zeta, .. } => {
                alpha * (2.0 / (1.0 - (-1.0 / zeta).exp()) - 1.0)
            }
        }
    }
}

/// Mode selector used when constructing models programmatically.
#[derive(Debug, Clone, Copy)]
pub enum ModeSpec {
    Bounded { m_max: i64 },
    Decaying { alpha: f64, zeta: f64 },
}

// ---------------------------------------------------------------------------
// JSON config schema
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigDoc {
    n_qubits: usize,
    period: f64,
    units: UnitsCfg,
    mode: ModeCfg,
    components: Vec<ComponentCfg>,
    #[serde(default)]
    alpha_m: Option<BTreeMap<String, f64>>,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum UnitsCfg {
    Omega,
    Absolute,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum ModeCfg {
    Bounded {
        #[serde(rename = "M")]
        m: i64,
    },
    Decaying {
        alpha: f64,
        zeta: f64,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentCfg {
    m: i64,
    #[serde(default)]
    terms: Option<Vec<TermCfg>>,
    #[serde(default)]
    dense: Option<Vec<Vec<[f64; 2]>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermCfg {
    coeff: [f64; 2],
    pauli: String,
}

/// Parse and validate a Hamiltonian config document (see the JSON schema in
/// the README). Energies are interpreted in units of ω when
/// `"units": "omega"`, which also rescales decaying-mode α.
pub fn parse_hamiltonian(text: &str) -> Result<FourierHamiltonian> {
    let doc: ConfigDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))?;

    if !(doc.period.is_finite() && doc.period > 0.0) {
        return Err(Error::Validation("period must be positive".into()));
    }
    let omega = 2.0 * std::f64::consts::PI / doc.period;
    let unit = match doc.units {
        UnitsCfg::Omega => omega,
        UnitsCfg::Absolute => 1.0,
    };
    let dim = 1usize
        .checked_shl(doc.n_qubits as u32)
        .ok_or_else(|| Error::Validation("n_qubits too large".into()))?;

    let mut components: BTreeMap<i64, CMat> = BTreeMap::new();
    for comp in &doc.components {
        if components.contains_key(&comp.m) {
            return Err(Error::Parse(format!(
                "components[m={}]: duplicate Fourier index",
                comp.m
            )));
        }
        let mat = match (&comp.terms, &comp.dense) {
            (Some(terms), None) => {
                let parsed = terms
                    .iter()
                    .map(|t| {
                        PauliTerm::parse(
                            Complex64::new(t.coeff[0] * unit, t.coeff[1] * unit),
                            &t.pauli,
                        )
                    })
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| Error::Parse(format!("components[m={}]: {e}", comp.m)))?;
                pauli_sum_matrix(&parsed, doc.n_qubits)
                    .map_err(|e| Error::Parse(format!("components[m={}]: {e}", comp.m)))?
            }
            (None, Some(rows)) => {
                if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                    return Err(Error::Parse(format!(
                        "components[m={}]: dense matrix must be {dim}x{dim}",
                        comp.m
                    )));
                }
                let mut mat: CMat = Array2::zeros((dim, dim));
                for (i, row) in rows.iter().enumerate() {
                    for (j, z) in row.iter().enumerate() {
                        mat[[i, j]] = Complex64::new(z[0] * unit, z[1] * unit);
                    }
                }
                mat
            }
            _ => {
                return Err(Error::Parse(format!(
                    "components[m={}]: exactly one of \"terms\" or \"dense\" required",
                    comp.m
                )))
            }
        };
        components.insert(comp.m, mat);
    }

    let mode = match doc.mode {
        ModeCfg::Bounded { m } => ModeSpec::Bounded { m_max: m },
        ModeCfg::Decaying { alpha, zeta } => ModeSpec::Decaying {
            alpha: alpha * unit,
            zeta,
        },
    };

    let mut alpha_m = BTreeMap::new();
    if let Some(map) = &doc.alpha_m {
        for (k, v) in map {
            let m: i64 = k
                .parse()
                .map_err(|_| Error::Parse(format!("alpha_m key '{k}' is not an integer")))?;
            alpha_m.insert(m, v * unit);
        }
    }

    FourierHamiltonian::from_components(doc.n_qubits, doc.period, mode, components, alpha_m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;
    use num_complex::Complex64;

    #[test]
    fn parse_rabi_config() {
        let h = parse_hamiltonian(models::RABI_JSON).unwrap();
        let omega = h.omega();
        assert_eq!(h.m_max(), 1);
        assert!((h.alpha() - 0.15 * omega).abs() < 1e-12 * omega);
        // H_0 = 0.15 ω σ_z, H_{±1} = 0.125 ω σ_x
        let h0 = h.component(0).unwrap();
        assert!((h0[[0, 0]].re - 0.15 * omega).abs() < 1e-12 * omega);
        let h1 = h.component(1).unwrap();
        assert!((h1[[0, 1]].re - 0.125 * omega).abs() < 1e-12 * omega);
        assert!(h.component(-1).is_some());
    }

    #[test]
    fn rejects_hermiticity_breach() {
        // H_{-1} supplied but not equal to H_1†.
        let text = r#"{
            "n_qubits": 1, "period": 1.0, "units": "omega",
            "mode": {"bounded": {"M": 1}},
            "components": [
                {"m": 1, "terms": [{"coeff": [0.1, 0.0], "pauli": "X"}]},
                {"m": -1, "terms": [{"coeff": [0.2, 0.0], "pauli": "X"}]}
            ]
        }"#;
        let err = parse_hamiltonian(text).unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err}");
    }

    #[test]
    fn rejects_unknown_keys_and_alpha_too_small() {
        let text = r#"{"n_qubits": 1, "period": 1.0, "units": "omega",
            "mode": {"bounded": {"M": 0}}, "typo": 3,
            "components": [{"m": 0, "terms": [{"coeff": [0.5, 0.0], "pauli": "Z"}]}]}"#;
        assert!(matches!(parse_hamiltonian(text), Err(Error::Parse(_))));

        let text = r#"{"n_qubits": 1, "period": 1.0, "units": "absolute",
            "mode": {"bounded": {"M": 0}},
            "components": [{"m": 0, "terms": [{"coeff": [0.5, 0.0], "pauli": "Z"}]}],
            "alpha_m": {"0": 0.1}}"#;
        assert!(matches!(parse_hamiltonian(text), Err(Error::Validation(_))));
    }

    #[test]
    fn time_independent_case() {
        let text = r#"{"n_qubits": 1, "period": 2.0, "units": "absolute",
            "mode": {"bounded": {"M": 0}},
            "components": [{"m": 0, "terms": [{"coeff": [0.3, 0.0], "pauli": "Z"}]}]}"#;
        let h = parse_hamiltonian(text).unwrap();
        assert_eq!(h.m_max(), 0);
        let a = h.evaluate_at(0.0).unwrap();
        let b = h.evaluate_at(1.234).unwrap();
        assert!(numerics::max_abs_entry(&(a.matrix() - b.matrix())) < 1e-15);
    }

    #[test]
    fn rabi_evaluation_points() {
        let h = models::rabi();
        let t4 = h.period() / 4.0;
        // cos(ω T/4) = 0, so H(T/4) = H_0.
        let ht4 = h.evaluate_at(t4).unwrap();
        let h0 = h.component(0).unwrap();
        assert!(numerics::max_abs_entry(&(ht4.matrix() - h0)) < 1e-12);
        // H(0) = H_0 + 2 H_1 (real H_1).
        let h0t = h.evaluate_at(0.0).unwrap();
        let expect = h0 + &h.component(1).unwrap().mapv(|z| z * 2.0);
        assert!(numerics::max_abs_entry(&(h0t.matrix() - &expect)) < 1e-12);
    }

    #[test]
    fn evaluate_periodicity() {
        let h = models::rabi();
        for &t in &[0.0, 0.1, 0.77, 1.9] {
            let a = h.evaluate_at(t).unwrap();
            let b = h.evaluate_at(t + h.period()).unwrap();
            assert!(numerics::max_abs_entry(&(a.matrix() - b.matrix())) < 1e-13);
        }
    }

    #[test]
    fn norm_bound_values() {
        let text = r#"{"n_qubits": 1, "period": 1.0, "units": "absolute",
            "mode": {"bounded": {"M": 0}},
            "components": [{"m": 0, "terms": [{"coeff": [1.0, 0.0], "pauli": "Z"}]}]}"#;
        let h = parse_hamiltonian(text).unwrap();
        assert!((h.norm_bound() - 1.0).abs() < 1e-14);

        let rabi = models::rabi();
        let expect = 3.0 * 0.15 * rabi.omega();
        assert!((rabi.norm_bound() - expect).abs() < 1e-12);
    }

    #[test]
    fn norm_bound_dominates_grid() {
        for h in [models::rabi(), models::circular(), models::decaying_zeta1()] {
            let bound = h.norm_bound();
            let sum_alpha = h.sum_alpha_m();
            for k in 0..1000 {
                let t = h.period() * (k as f64) / 1000.0;
                let n = numerics::operator_norm(h.evaluate_at(t).unwrap().matrix());
                assert!(n <= bound * (1.0 + 1e-10), "||H({t})|| = {n} > {bound}");
                assert!(n <= sum_alpha * (1.0 + 1e-10));
            }
        }
    }

    #[test]
    fn fourier_roundtrip_trapezoid() {
        let h = models::rabi();
        let omega = h.omega();
        let samples = 4096;
        for m in -1..=1i64 {
            let dim = h.system_dim();
            let mut acc: CMat = Array2::zeros((dim, dim));
            for k in 0..samples {
                let t = h.period() * (k as f64) / (samples as f64);
                let phase = Complex64::from_polar(1.0, (m as f64) * omega * t);
                let ht = h.evaluate_at(t).unwrap();
                acc.zip_mut_with(ht.matrix(), |a, b| *a += phase * b);
            }
            acc.mapv_inplace(|z| z / samples as f64);
            let expect = h.component(m).unwrap();
            assert!(
                numerics::max_abs_entry(&(&acc - expect)) < 1e-8,
                "Fourier roundtrip failed for m={m}"
            );
        }
    }

    #[test]
    fn decaying_mode_tail_assertion() {
        let h = models::decaying_zeta1();
        let (alpha, zeta) = match h.mode() {
            Mode::Decaying { alpha, zeta, .. } => (*alpha, *zeta),
            _ => unreachable!(),
        };
        for (m, comp) in h.components() {
            let nrm = numerics::operator_norm(comp);
            assert!(nrm <= alpha * (-(m.abs() as f64) / zeta).exp() * (1.0 + 1e-12));
        }
    }
}
