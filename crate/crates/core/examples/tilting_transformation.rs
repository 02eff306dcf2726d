//! The SU(2) tilting transformation D(ξ) acting on the spin-½ generators.

use kphoton_jc::su2::{
    displacement_matrix, gauss_decompose, gaussian_product, pauli_realization, tilt_generator,
    Generator, TiltParams,
};

fn main() -> kphoton_jc::Result<()> {
    let ops = pauli_realization();
    for (theta, phi) in [(0.4, 0.0), (std::f64::consts::FRAC_PI_2, 0.7), (2.5, -1.2)] {
        let t = TiltParams::new(theta, phi);
        println!("θ = {theta:.4}, φ = {phi:.4}: ξ = {:.4}, ζ = {:.4}, η = {:.4}", t.xi, t.zeta, t.eta);
        let d = displacement_matrix(&t);
        for g in [Generator::J0, Generator::JPlus, Generator::JMinus] {
            let closed = tilt_generator(g, &t)?;
            let explicit = &(&d.adjoint() * ops.get(g)) * &d;
            println!("  {g:?}: |closed form − D†JD| = {:.2e}", closed.max_abs_diff(&explicit));
        }
        let (zeta, eta) = gauss_decompose(&t)?;
        let dev = gaussian_product(zeta, eta).max_abs_diff(&d);
        println!("  Gaussian factorization e^(ζJ+) e^(ηJ0) e^(−ζ*J−): deviation {dev:.2e}");
    }
    Ok(())
}
