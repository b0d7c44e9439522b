//! Sambe-space toolkit for time-periodic (Floquet) Hamiltonians.
//!
//! Builds certified-cutoff truncated Floquet Hamiltonians, computes
//! quasienergy spectra and Floquet eigenstates by independent methods,
//! constructs explicit block-encoding unitaries, and emulates the Floquet
//! phase-estimation and eigenstate-preparation algorithms at matrix level,
//! with every analytical bound exposed as a machine-checkable inequality.
//!
//! Entry points:
//! - [`hamiltonian::parse_hamiltonian`] / [`models`] — define H(t).
//! - [`sambe::build_floquet`] / [`sambe::cutoff_for_accuracy`] — truncation.
//! - [`spectral`] — quasienergies three ways, plus the bound verifiers.
//! - [`blockenc`] — explicit LCU and Floquet-Hamiltonian block-encodings.
//! - [`fqpe`] — Floquet QPE emulation for both eigenstate targets.
//! - [`prep`] — deterministic gapped-eigenstate preparation.
//!
//! The `examples/` directory has one runnable program per capability; the
//! `floquet-sambe` binary exposes the same flows as subcommands.

pub mod blockenc;
pub mod cli;
pub mod error;
pub mod fqpe;
pub mod hamiltonian;
pub mod models;
pub mod numerics;
pub mod oracles;
pub mod prep;
pub mod qsvt;
pub mod sambe;
pub mod spectral;

pub use error::{Error, Result};
