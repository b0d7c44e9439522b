//! Built-in test models, each available both as a constructed
//! [`FourierHamiltonian`] and as the equivalent JSON config document.

use crate::hamiltonian::{parse_hamiltonian, FourierHamiltonian};

/// Rabi model: H(t) = 0.3(ω/2)σ_z + 0.5(ω/2)cos(ωt)σ_x, i.e.
/// H_0 = 0.15ω σ_z and H_{±1} = 0.125ω σ_x. M = 1, α = 0.15ω.
pub const RABI_JSON: &str = r#"{
  "n_qubits": 1,
  "period": 1.0,
  "units": "omega",
  "mode": {"bounded": {"M": 1}},
  "components": [
    {"m": 0, "terms": [{"coeff": [0.15, 0.0], "pauli": "Z"}]},
    {"m": 1, "terms": [{"coeff": [0.125, 0.0], "pauli": "X"}]}
  ]
}"#;

/// Time-independent single qubit: H_0 = (ω/4)σ_z, M = 0. Quasienergies ±ω/4.
pub const TRIVIAL_SZ_JSON: &str = r#"{
  "n_qubits": 1,
  "period": 1.0,
  "units": "omega",
  "mode": {"bounded": {"M": 0}},
  "components": [
    {"m": 0, "terms": [{"coeff": [0.25, 0.0], "pauli": "Z"}]}
  ]
}"#;

/// Time-independent single qubit with quasienergies ±0.15ω, which avoid the
/// b-bit register grid points used in the rounding-promise tests.
pub const SZ_OFFGRID_JSON: &str = r#"{
  "n_qubits": 1,
  "period": 1.0,
  "units": "omega",
  "mode": {"bounded": {"M": 0}},
  "components": [
    {"m": 0, "terms": [{"coeff": [0.15, 0.0], "pauli": "Z"}]}
  ]
}"#;

/// Circularly driven qubit: H(t) = (δ/2)σ_z + (Ω/2)(cos ωt σ_x + sin ωt σ_y)
/// with δ = 0.3ω, Ω = 0.4ω. H_1 = (Ω/2)σ_+ = (Ω/4)(X + iY).
/// Exactly solvable in the rotating frame.
pub const CIRCULAR_JSON: &str = r#"{
  "n_qubits": 1,
  "period": 1.0,
  "units": "omega",
  "mode": {"bounded": {"M": 1}},
  "components": [
    {"m": 0, "terms": [{"coeff": [0.15, 0.0], "pauli": "Z"}]},
    {"m": 1, "terms": [{"coeff": [0.1, 0.0], "pauli": "X"}, {"coeff": [0.0, 0.1], "pauli": "Y"}]}
  ]
}"#;

/// Exponentially decaying Fourier components, ζ = 1:
/// H_0 = 0.1ω σ_z, H_m = 0.1ω e^{-|m|} σ_x for 1 <= |m| <= 6,
/// envelope ||H_m|| <= α e^{-|m|/ζ} with α = 0.2ω.
pub const DECAYING_ZETA1_JSON: &str = r#"{
  "n_qubits": 1,
  "period": 1.0,
  "units": "omega",
  "mode": {"decaying": {"alpha": 0.2, "zeta": 1.0}},
  "components": [
    {"m": 0, "terms": [{"coeff": [0.1, 0.0], "pauli": "Z"}]},
    {"m": 1, "terms": [{"coeff": [0.036787944117144233, 0.0], "pauli": "X"}]},
    {"m": 2, "terms": [{"coeff": [0.013533528323661271, 0.0], "pauli": "X"}]},
    {"m": 3, "terms": [{"coeff": [0.004978706836786395, 0.0], "pauli": "X"}]},
    {"m": 4, "terms": [{"coeff": [0.0018315638888734182, 0.0], "pauli": "X"}]},
    {"m": 5, "terms": [{"coeff": [0.0006737946999085467, 0.0], "pauli": "X"}]},
    {"m": 6, "terms": [{"coeff": [0.0002478752176666358, 0.0], "pauli": "X"}]}
  ]
}"#;

pub fn rabi() -> FourierHamiltonian {
    parse_hamiltonian(RABI_JSON).expect("built-in Rabi model must parse")
}

pub fn trivial_sz() -> FourierHamiltonian {
    parse_hamiltonian(TRIVIAL_SZ_JSON).expect("built-in trivial model must parse")
}

pub fn sz_offgrid() -> FourierHamiltonian {
    parse_hamiltonian(SZ_OFFGRID_JSON).expect("built-in offgrid model must parse")
}

pub fn circular() -> FourierHamiltonian {
    parse_hamiltonian(CIRCULAR_JSON).expect("built-in circular model must parse")
}

pub fn decaying_zeta1() -> FourierHamiltonian {
    parse_hamiltonian(DECAYING_ZETA1_JSON).expect("built-in decaying model must parse")
}

/// (model_id, model) pairs used by the cross-method and register tests.
pub fn standard_trio() -> Vec<(&'static str, FourierHamiltonian)> {
    vec![
        ("trivial_sz", trivial_sz()),
        ("rabi", rabi()),
        ("circular", circular()),
    ]
}

pub fn by_name(name: &str) -> Option<FourierHamiltonian> {
    match name {
        "rabi" => Some(rabi()),
        "trivial_sz" => Some(trivial_sz()),
        "sz_offgrid" => Some(sz_offgrid()),
        "circular" => Some(circular()),
        "decaying_zeta1" => Some(decaying_zeta1()),
        _ => None,
    }
}
