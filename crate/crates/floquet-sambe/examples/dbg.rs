use floquet_sambe::models;
use floquet_sambe::spectral::{floquet_operator, PropagatorMethod};

fn main() {
    let h = models::circular();
    let omega = h.omega();
    let t8 = 0.125 * h.period();
    let m = h.evaluate_at(t8).unwrap();
    println!("H(T/8)/omega:");
    for i in 0..2 {
        for j in 0..2 {
            print!("  ({:+.6},{:+.6})", m.matrix()[[i,j]].re/omega, m.matrix()[[i,j]].im/omega);
        }
        println!();
    }
    let u = floquet_operator(&h, PropagatorMethod::Discretized { steps: 100_000 }, h.period()).unwrap();
    println!("U(T;0):");
    for i in 0..2 {
        for j in 0..2 {
            print!("  ({:+.8},{:+.8})", u.matrix[[i,j]].re, u.matrix[[i,j]].im);
        }
        println!();
    }
}
