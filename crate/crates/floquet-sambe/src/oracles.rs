//! Closed-form reference solutions kept independent of the solver paths they
//! cross-check. Nothing here touches the Sambe builders, the discretized
//! propagator, or the LAPACK eigensolvers.

use num_complex::Complex64;

use crate::sambe::fold_bz;

/// Hand-rolled eigensystem of a·σ_z + b·σ_x (b real): eigenvalues ±r with
/// r = √(a²+b²), eigenvectors in closed form.
pub fn two_level_eigensystem(a: f64, b: f64) -> [(f64, [Complex64; 2]); 2] {
    let r = (a * a + b * b).sqrt();
    if r == 0.0 {
        return [
            (0.0, [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]),
            (0.0, [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]),
        ];
    }
    // θ from cos θ = a/r, sin θ = b/r; eigenvectors (cos θ/2, sin θ/2) and
    // (-sin θ/2, cos θ/2).
    let theta = b.atan2(a);
    let (s, c) = (theta / 2.0).sin_cos();
    [
        (r, [Complex64::new(c, 0.0), Complex64::new(s, 0.0)]),
        (-r, [Complex64::new(-s, 0.0), Complex64::new(c, 0.0)]),
    ]
}

/// Quasienergies of the circular drive
/// H(t) = (δ/2)σ_z + (Ω/2)(cos ωt σ_x + sin ωt σ_y),
/// from the rotating frame: diagonalize ((δ-ω)/2)σ_z + (Ω/2)σ_x, add ω/2,
/// fold into the BZ. Inputs are δ/ω and Ω/ω. Returned ascending.
pub fn circular_quasienergies(delta_over_omega: f64, rabi_over_omega: f64, omega: f64) -> Vec<f64> {
    let a = (delta_over_omega - 1.0) / 2.0 * omega;
    let b = rabi_over_omega / 2.0 * omega;
    let r = (a * a + b * b).sqrt();
    let mut eps = vec![fold_bz(r + omega / 2.0, omega), fold_bz(-r + omega / 2.0, omega)];
    eps.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eps
}

/// Floquet eigenstates φ_n(0) of the circular drive, paired with their folded
/// quasienergies. At t = 0 the rotating frame coincides with the lab frame,
/// so these are the eigenvectors of ((δ-ω)/2)σ_z + (Ω/2)σ_x.
pub fn circular_eigenstates(
    delta_over_omega: f64,
    rabi_over_omega: f64,
    omega: f64,
) -> Vec<(f64, [Complex64; 2])> {
    let a = (delta_over_omega - 1.0) / 2.0 * omega;
    let b = rabi_over_omega / 2.0 * omega;
    two_level_eigensystem(a, b)
        .into_iter()
        .map(|(e, v)| (fold_bz(e + omega / 2.0, omega), v))
        .collect()
}
