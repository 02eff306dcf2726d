//! Closed-form eigenspinors from the block tilt, checked against the full Hamiltonian.

use kphoton_jc::eigensolver::residual;
use kphoton_jc::model::{
    analytic_eigenspinor, build_hamiltonian, coupled_entry, mixing_angle, tilted_block, Branch,
    Convention, ModelParams,
};

fn main() -> kphoton_jc::Result<()> {
    let p = ModelParams::new(3, 1.0, 3.2, 0.02, 24)?;
    let h = build_hamiltonian(&p);
    for n in 0..5 {
        let (theta, _) = mixing_angle(&p, n)?;
        let diag = tilted_block(&p, n)?;
        println!(
            "block {n}: θ = {theta:.6}, D†BD = diag({:.6}, {:.6}), off-diagonal {:.1e}",
            diag[(0, 0)].re,
            diag[(1, 1)].re,
            diag[(0, 1)].norm()
        );
        for branch in Branch::BOTH {
            let s = analytic_eigenspinor(&p, n, branch)?;
            let e = coupled_entry(&p, n, branch, Convention::LambdaSquared).total_energy;
            let r = residual(&h, e, &s.to_state())?;
            println!(
                "  {branch}: {:.6}|{n},e⟩ + {:.6}|{},g⟩, ‖HΨ − EΨ‖ = {r:.1e}",
                s.up[n],
                s.down[n + p.k],
                n + p.k
            );
        }
    }
    Ok(())
}
