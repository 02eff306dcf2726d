//! The invariant suite run by `kjc validate`.
//!
//! Each check compares a closed form against an independent route (Jacobi
//! diagonalization, explicit matrix products) and records the worst
//! deviation next to its tolerance.

use std::f64::consts::PI;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::dynamics::{atomic_inversion, coherent_field_state, time_grid, Propagator, QuantumState};
use crate::eigensolver::{hermitian_eigen, residual, DEFAULT_TOL};
use crate::error::Result;
use crate::fock::{FockSpace, Ladder, Ordering};
use crate::matrix::{c64, C64, DenseMatrix};
use crate::model::{
    analytic_eigenspinor, analytic_spectrum_with, block_decompose, build_interaction_hamiltonian,
    build_hamiltonian, coupled_entry, spectrum_discrepancy_report, two_photon_energy, Atom, Branch,
    Convention, ModelParams,
};
use crate::su2::{
    displacement_matrix, gauss_decompose, gaussian_product, pauli_realization,
    perelomov_coherent_state, perelomov_number_state, tilt_generator, Generator, TiltParams,
};

/// Tolerances of the suite.
pub mod tol {
    /// Analytic energy against a Jacobi eigenvalue.
    pub const ORACLE: f64 = 1e-9;
    /// Linear-λ energy must miss the oracle by more than this at n = 0.
    pub const LITERAL_MISS: f64 = 1e-2;
    /// Closed-form reductions (k = 1 textbook, k = 2 special case).
    pub const REDUCTION: f64 = 1e-12;
    pub const SPINOR_RESIDUAL: f64 = 1e-10;
    pub const BLOCK_REASSEMBLY: f64 = 1e-14;
    pub const TILT: f64 = 1e-13;
    pub const PERELOMOV: f64 = 1e-12;
    pub const PSEUDO_INVERSE: f64 = 1e-13;
    pub const COMMUTATOR: f64 = 1e-13;
    pub const CONSERVATION: f64 = 1e-9;
    pub const RABI: f64 = 1e-6;
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub worst: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl CheckOutcome {
    fn below(name: &'static str, worst: f64, tolerance: f64, detail: impl Into<String>) -> Self {
        Self {
            name,
            passed: worst <= tolerance,
            worst,
            tolerance,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckOutcome>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone)]
pub struct ValidationConfig {
    pub params: ModelParams,
    /// Highest block checked; clamped to the safe window.
    pub n_max: usize,
    /// Convention used for the analytic spectrum under test.
    pub convention: Convention,
    /// Tolerance of the analytic-versus-oracle energy checks.
    pub oracle_tol: f64,
    pub seed: u64,
}

impl ValidationConfig {
    pub fn new(params: ModelParams) -> Self {
        Self {
            n_max: params.safe_max().min(40),
            params,
            convention: Convention::LambdaSquared,
            oracle_tol: tol::ORACLE,
            seed: 0x5eed,
        }
    }
}

pub fn run_validation(cfg: &ValidationConfig) -> Result<ValidationReport> {
    let p = cfg.params;
    p.validate()?;
    let n_max = cfg.n_max.min(p.safe_max());
    let mut rng = StdRng::seed_from_u64(cfg.seed);

    let checks = vec![
        check_spectrum_oracle(&p, n_max, cfg.convention, cfg.oracle_tol)?,
        check_discrepancy(&p, n_max)?,
        check_reductions(&p, n_max),
        check_eigenspinors(&p, n_max)?,
        check_block_structure(&p),
        check_fock(p.dim.max(8))?,
        check_pseudo_inverse()?,
        check_tilting(&mut rng)?,
        check_gaussian(&mut rng)?,
        check_perelomov(&mut rng)?,
        check_dynamics(&p)?,
    ];
    Ok(ValidationReport { checks })
}

fn check_spectrum_oracle(
    p: &ModelParams,
    n_max: usize,
    convention: Convention,
    oracle_tol: f64,
) -> Result<CheckOutcome> {
    let oracle = hermitian_eigen(&build_hamiltonian(p), DEFAULT_TOL)?;
    let analytic = analytic_spectrum_with(p, n_max, convention)?;
    let worst = analytic
        .iter()
        .map(|e| {
            oracle
                .values
                .iter()
                .map(|v| (v - e.total_energy).abs())
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max);
    Ok(CheckOutcome::below(
        "spectrum-oracle",
        worst,
        oracle_tol,
        format!("{} analytic energies against {} Jacobi eigenvalues", analytic.len(), oracle.values.len()),
    ))
}

/// Literal linear-λ energy versus the λ² reading at the reference point
/// `k = 2, Δ = 0, λ = 0.1`, plus the full report at the configured point.
fn check_discrepancy(p: &ModelParams, n_max: usize) -> Result<CheckOutcome> {
    let reference = ModelParams::new(2, 1.0, 2.0, 0.1, p.dim.max(6))?;
    let report = spectrum_discrepancy_report(&reference, 0)?;
    let row = report.rows[0];
    let mut passed = row.deviation_lambda_squared <= tol::ORACLE && row.deviation_literal > tol::LITERAL_MISS;
    let mut detail = format!(
        "k=2 Δ=0 λ=0.1 n=0: λ² off by {:.3e}, linear-λ off by {:.6}",
        row.deviation_lambda_squared, row.deviation_literal
    );
    if p.coupling != 0.0 {
        let own = spectrum_discrepancy_report(p, n_max)?;
        passed &= own.passes();
        detail.push_str(&format!("; configured point verdict {:?}", own.verdict));
    }
    Ok(CheckOutcome {
        name: "discrepancy",
        passed,
        worst: row.deviation_lambda_squared,
        tolerance: tol::ORACLE,
        detail,
    })
}

fn check_reductions(p: &ModelParams, n_max: usize) -> CheckOutcome {
    let mut worst = 0.0_f64;
    let k1 = ModelParams { k: 1, ..*p };
    let delta = k1.detuning();
    for n in 0..=n_max.min(k1.safe_max()) {
        for branch in Branch::BOTH {
            let textbook = p.omega * (2 * n + 1) as f64 / 2.0
                + branch.sign() * 0.5 * (delta * delta + 4.0 * p.coupling * p.coupling * (n + 1) as f64).sqrt();
            let general = coupled_entry(&k1, n, branch, Convention::LambdaSquared).total_energy;
            worst = worst.max((general - textbook).abs());
        }
    }
    let k2 = ModelParams { k: 2, ..*p };
    for n in 0..=n_max.min(k2.safe_max()) {
        for branch in Branch::BOTH {
            let general = coupled_entry(&k2, n, branch, Convention::LambdaSquared).total_energy;
            let special = two_photon_energy(p.omega, p.omega0, p.coupling, n, branch);
            worst = worst.max((general - special).abs());
        }
    }
    CheckOutcome::below("reductions", worst, tol::REDUCTION, "k=1 textbook and k=2 closed forms")
}

fn check_eigenspinors(p: &ModelParams, n_max: usize) -> Result<CheckOutcome> {
    let h = build_hamiltonian(p);
    let mut worst = 0.0_f64;
    let mut single_block = true;
    for n in 0..=n_max {
        for branch in Branch::BOTH {
            let s = analytic_eigenspinor(p, n, branch)?;
            let e = coupled_entry(p, n, branch, Convention::LambdaSquared).total_energy;
            worst = worst.max(residual(&h, e, &s.to_state())?);
            worst = worst.max((s.norm() - 1.0).abs());
            single_block &= s.is_single_block(0.0);
        }
    }
    let mut out = CheckOutcome::below(
        "eigenspinor-residual",
        worst,
        tol::SPINOR_RESIDUAL,
        format!("‖HΨ − EΨ‖ over n ≤ {n_max}, both branches"),
    );
    out.passed &= single_block;
    Ok(out)
}

fn check_block_structure(p: &ModelParams) -> CheckOutcome {
    let worst = block_decompose(p)
        .reassemble()
        .max_abs_diff(&build_interaction_hamiltonian(p));
    CheckOutcome::below("block-structure", worst, tol::BLOCK_REASSEMBLY, "direct sum of blocks equals H_I")
}

fn check_fock(dim: usize) -> Result<CheckOutcome> {
    let space = FockSpace::new(dim)?;
    let a = space.annihilation();
    let comm = a.commutator(&space.creation());
    let worst = comm.leading_block(dim - 1).max_abs_diff(&DenseMatrix::identity(dim - 1));
    Ok(CheckOutcome::below("fock-commutator", worst, tol::COMMUTATOR, format!("[a, a†] = 1 below the edge, dim {dim}")))
}

/// Worst deviation of `P·(a†)^k` and `(a†)^k·P` from their targets on the
/// stated ranges, over `k = 1..=4` at `dim = 32`.
pub fn pseudo_inverse_deviation(dim: usize) -> Result<f64> {
    let space = FockSpace::new(dim)?;
    let mut worst = 0.0_f64;
    for k in 1..=4 {
        let adk = space.ladder_power(k, Ladder::Creation)?;
        // (a†)^k·P = 1 on m ≥ k, anti-normal ordering
        let anti = space.pseudo_inverse_creation(k, Ordering::AntiNormal)?;
        let right = &adk * &anti.matrix;
        for m in anti.right_range() {
            let col = right.column(m);
            for (i, z) in col.iter().enumerate() {
                let target = if i == m { 1.0 } else { 0.0 };
                worst = worst.max((z - c64(target, 0.0)).norm());
            }
        }
        // P·(a†)^k = 1 − Σ_{m<k}|m⟩⟨m| on n ≤ dim−1−k, normal ordering
        let normal = space.pseudo_inverse_creation(k, Ordering::Normal)?;
        let left = &normal.matrix * &adk;
        for n in normal.left_range() {
            let col = left.column(n);
            for (i, z) in col.iter().enumerate() {
                let target = if i == n { normal.left_target(n) } else { 0.0 };
                worst = worst.max((z - c64(target, 0.0)).norm());
            }
        }
    }
    Ok(worst)
}

fn check_pseudo_inverse() -> Result<CheckOutcome> {
    Ok(CheckOutcome::below(
        "pseudo-inverse",
        pseudo_inverse_deviation(32)?,
        tol::PSEUDO_INVERSE,
        "one-sided inverses of (a†)^k, k = 1..4, dim 32",
    ))
}

/// Uniform `θ ∈ (0.01, 3.0)`, `φ ∈ (−π, π)`.
pub fn random_tilt(rng: &mut impl Rng) -> TiltParams {
    TiltParams::new(rng.gen_range(0.01..3.0), rng.gen_range(-PI..PI))
}

/// Largest entrywise gap between each tilting identity and `D†JD`.
pub fn tilting_deviation(tilt: &TiltParams) -> Result<f64> {
    let ops = pauli_realization();
    let d = displacement_matrix(tilt);
    let dh = d.adjoint();
    let mut worst = 0.0_f64;
    for g in [Generator::JPlus, Generator::JMinus, Generator::J0] {
        let explicit = &(&dh * ops.get(g)) * &d;
        worst = worst.max(tilt_generator(g, tilt)?.max_abs_diff(&explicit));
    }
    Ok(worst)
}

fn check_tilting(rng: &mut StdRng) -> Result<CheckOutcome> {
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        worst = worst.max(tilting_deviation(&random_tilt(rng))?);
    }
    Ok(CheckOutcome::below("tilting-identities", worst, tol::TILT, "100 random (θ, φ) against D†JD"))
}

fn check_gaussian(rng: &mut StdRng) -> Result<CheckOutcome> {
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let tilt = random_tilt(rng);
        let (zeta, eta) = gauss_decompose(&tilt)?;
        worst = worst.max(gaussian_product(zeta, eta).max_abs_diff(&displacement_matrix(&tilt)));
    }
    Ok(CheckOutcome::below("gaussian-decomposition", worst, tol::TILT, "exp(ζJ₊)exp(ηJ₀)exp(−ζ*J₋) = D(ξ)"))
}

/// `ζ` with `|ζ| ≤ 1.5` and a uniform phase.
pub fn random_zeta(rng: &mut impl Rng) -> C64 {
    C64::from_polar(rng.gen_range(0.0..1.5), rng.gen_range(-PI..PI))
}

/// Worst deviation over the three Perelomov checks for one `ζ` and spin `j`:
/// normalization of every `|ζ, j, µ⟩`, agreement of `µ = −j` with the
/// lowest-weight closed form, and (for `j = ½`) with the columns of `D(ξ)`.
pub fn perelomov_deviation(j2: u32, zeta: C64) -> Result<f64> {
    let j = f64::from(j2) / 2.0;
    let mut worst = 0.0_f64;
    for mu2 in (-(j2 as i32)..=j2 as i32).step_by(2) {
        let st = perelomov_number_state(j, f64::from(mu2) / 2.0, zeta)?;
        worst = worst.max((st.norm() - 1.0).abs());
    }
    let low = perelomov_number_state(j, -j, zeta)?;
    let closed = perelomov_coherent_state(j, zeta)?;
    for (a, b) in low.coefficients.iter().zip(&closed.coefficients) {
        worst = worst.max((a - b).norm());
    }
    if j2 == 1 {
        let d = displacement_matrix(&TiltParams::from_zeta(zeta));
        // D acts on (|+½⟩, |−½⟩); coefficients are indexed (m = −½, m = +½)
        for (mu, col) in [(0.5, 0), (-0.5, 1)] {
            let st = perelomov_number_state(0.5, mu, zeta)?;
            worst = worst.max((st.coefficients[1] - d[(0, col)]).norm());
            worst = worst.max((st.coefficients[0] - d[(1, col)]).norm());
        }
    }
    Ok(worst)
}

fn check_perelomov(rng: &mut StdRng) -> Result<CheckOutcome> {
    let mut worst = 0.0_f64;
    for j2 in 1..=10 {
        for _ in 0..20 {
            worst = worst.max(perelomov_deviation(j2, random_zeta(rng))?);
        }
    }
    Ok(CheckOutcome::below("perelomov", worst, tol::PERELOMOV, "j = 1/2..5, 20 random ζ each"))
}

fn check_dynamics(p: &ModelParams) -> Result<CheckOutcome> {
    let prop = Propagator::new(p)?;
    let h_norm = prop.hamiltonian.max_abs();
    let alpha = (p.dim as f64 / 8.0).sqrt().min(2.0);
    let s0 = coherent_field_state(c64(alpha, 0.0), Atom::Excited, p.dim)?.state;
    let e0 = s0.expectation(&prop.hamiltonian);
    let mut worst = 0.0_f64;
    for s in prop.evolve(&s0, &time_grid(50.0, 100))? {
        worst = worst.max((s.norm() - 1.0).abs());
        worst = worst.max((s.expectation(&prop.hamiltonian) - e0).abs() / h_norm);
    }
    let mut out = CheckOutcome::below("dynamics", worst, tol::CONSERVATION, "norm and energy along a coherent-state trajectory");

    // vacuum Rabi flop at resonance, k = 1
    let rabi = ModelParams::new(1, 1.0, 1.0, 0.1, 8)?;
    let t = PI / (2.0 * rabi.coupling);
    let s = &Propagator::new(&rabi)?.evolve(&QuantumState::basis(0, Atom::Excited, 8), &[t])?[0];
    let miss = (atomic_inversion(s) + 1.0).abs();
    out.passed &= miss <= tol::RABI;
    out.detail.push_str(&format!("; Rabi inversion miss {miss:.2e}"));
    Ok(out)
}
