//! SU(2) number coherent states |ζ; j, µ⟩ for a few spins.

use kphoton_jc::su2::{perelomov_coherent_state, perelomov_number_state};
use kphoton_jc::C64;

fn main() -> kphoton_jc::Result<()> {
    let zeta = C64::from_polar(0.8, 0.6);
    for j in [0.5, 1.0, 2.5] {
        println!("j = {j}, ζ = {zeta:.3}");
        let mut mu = -j;
        while mu <= j + 1e-12 {
            let st = perelomov_number_state(j, mu, zeta)?;
            let amps: Vec<String> = st.coefficients.iter().map(|c| format!("{:.4}", c)).collect();
            println!("  µ = {mu:>4}: raw norm {:.12}, amplitudes [{}]", st.raw_norm, amps.join(", "));
            mu += 1.0;
        }
        let cs = perelomov_coherent_state(j, zeta)?;
        let lowest = perelomov_number_state(j, -j, zeta)?;
        let dev = cs
            .coefficients
            .iter()
            .zip(&lowest.coefficients)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        println!("  coherent state vs µ = −j number state: {dev:.2e}");
    }
    Ok(())
}
