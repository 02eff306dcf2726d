//! Two-photon dressed-state ladder and its check against direct diagonalization.

use kphoton_jc::eigensolver::{hermitian_eigen, DEFAULT_TOL};
use kphoton_jc::model::{analytic_spectrum, build_hamiltonian, two_photon_energy, Branch, ModelParams};

fn main() -> kphoton_jc::Result<()> {
    let p = ModelParams::new(2, 1.0, 2.0, 0.1, 32)?;
    let oracle = hermitian_eigen(&build_hamiltonian(&p), DEFAULT_TOL)?;
    println!("k = 2, ω = 1, ω0 = 2 (resonance), λ = 0.1");
    println!("{:>3} {:>6} {:>20} {:>12}", "n", "branch", "energy", "|E − oracle|");
    for e in analytic_spectrum(&p, 6)? {
        let miss = oracle
            .values
            .iter()
            .map(|v| (v - e.total_energy).abs())
            .fold(f64::INFINITY, f64::min);
        println!("{:>3} {:>6} {:>20.15} {:>12.2e}", e.n, format!("{:?}", e.sector).to_lowercase() + &e.branch.to_string(), e.total_energy, miss);
    }
    let detuned = two_photon_energy(1.0, 2.4, 0.1, 0, Branch::Plus);
    println!("detuned (ω0 = 2.4) n = 0, + branch: {detuned:.15}");
    Ok(())
}
