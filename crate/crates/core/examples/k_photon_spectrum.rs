//! Dressed energies for k = 1..4 and the growth of the effective coupling with n.

use kphoton_jc::model::{analytic_spectrum, ModelParams, Sector};

fn main() -> kphoton_jc::Result<()> {
    for k in 1..=4 {
        let p = ModelParams::new(k, 1.0, 1.1 * k as f64, 0.05, 40)?;
        println!("k = {k}, Δ = {:.2}", p.detuning());
        for e in analytic_spectrum(&p, 4)? {
            match e.sector {
                Sector::Coupled => println!(
                    "  n = {}, {}: g_n = {:>10.5}, E = {:>12.6}",
                    e.n,
                    e.branch,
                    p.block_coupling(e.n),
                    e.total_energy
                ),
                Sector::Uncoupled => println!("  |{}, g⟩ uncoupled: E = {:>12.6}", e.n, e.total_energy),
            }
        }
    }
    Ok(())
}
