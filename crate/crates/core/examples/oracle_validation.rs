//! Full invariant suite, then the same suite with the linear-λ spectrum injected.

use kphoton_jc::model::{spectrum_discrepancy_report, Convention, ModelParams};
use kphoton_jc::validate::{run_validation, ValidationConfig};

fn main() -> kphoton_jc::Result<()> {
    let p = ModelParams::new(2, 1.0, 2.0, 0.1, 32)?;
    for convention in [Convention::LambdaSquared, Convention::LiteralLinear] {
        let mut cfg = ValidationConfig::new(p);
        cfg.convention = convention;
        let report = run_validation(&cfg)?;
        println!("convention {convention:?}: all passed = {}", report.passed());
        for c in &report.checks {
            println!("  [{}] {:<22} worst {:.2e} (tol {:.0e})", if c.passed { "ok" } else { "FAIL" }, c.name, c.worst, c.tolerance);
        }
    }
    let d = spectrum_discrepancy_report(&p, 3)?;
    println!("discrepancy verdict: {:?}", d.verdict);
    for row in &d.rows {
        println!("  n = {}: oracle {:.6}, λ² {:.6}, linear {:.6}", row.n, row.oracle, row.lambda_squared, row.literal);
    }
    Ok(())
}
