//! Collapse and revival of the Rabi oscillations for a coherent field (k = 1).

use std::f64::consts::PI;

use kphoton_jc::c64;
use kphoton_jc::dynamics::{
    atomic_inversion, coherent_field_state, collapse_revival_scenario, time_grid, Propagator,
};
use kphoton_jc::model::{Atom, ModelParams};

fn main() -> kphoton_jc::Result<()> {
    let (alpha, coupling, dim) = (3.0, 0.1, 64);
    let markers = collapse_revival_scenario(alpha, coupling, dim)?;
    println!("α = {alpha}, λ = {coupling}: revival expected near t_r = {:.2}", markers.revival_time);
    println!(
        "collapse amplitude {:.4}, revival amplitude {:.4}, passes: {}",
        markers.collapse_amplitude,
        markers.revival_amplitude,
        markers.passes()
    );

    let p = ModelParams::new(1, 1.0, 1.0, coupling, dim)?;
    let field = coherent_field_state(c64(alpha, 0.0), Atom::Excited, dim)?;
    let times = time_grid(1.3 * 2.0 * PI * alpha / coupling, 120);
    let states = Propagator::new(&p)?.evolve(&field.state, &times)?;
    for (t, s) in times.iter().zip(&states) {
        let w = atomic_inversion(s);
        let bar = ((w + 1.0) * 30.0).round() as usize;
        println!("{t:>8.2} {w:>+7.3} {}", "#".repeat(bar));
    }
    Ok(())
}
