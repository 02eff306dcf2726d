//! The `kjc` command-line front end.
//!
//! Four subcommands (`spectrum`, `validate`, `evolve`, `coherent-state`)
//! write a table as CSV (default) or JSON. CSV has a fixed header and prints
//! floats in 17-significant-digit scientific notation; JSON is an object
//! with the parsed `config` and a `rows` array.
//!
//! Exit codes: 0 success, 1 failed check or computation, 2 bad configuration.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::dynamics::{atomic_inversion, coherent_field_state, time_grid, Propagator, QuantumState};
use crate::error::Error;
use crate::matrix::C64;
use crate::model::{analytic_spectrum, Atom, Branch, Convention, ModelParams};
use crate::su2::{perelomov_number_state, TiltParams};
use crate::validate::{run_validation, tol, ValidationConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Clone, Parser, Serialize)]
#[command(name = "kjc", version, about = "Exact k-photon Jaynes-Cummings spectra, eigenstates and dynamics")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    /// Write to this file instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Closed-form dressed-state spectrum
    Spectrum(SpectrumArgs),
    /// Run the invariant suite against the Jacobi oracle
    Validate(ValidateArgs),
    /// Atomic inversion along an exact trajectory
    Evolve(EvolveArgs),
    /// Amplitudes of an SU(2) number coherent state or a coherent field
    CoherentState(CoherentArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ModelArgs {
    /// Photon order of the transition
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Field frequency
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub omega: f64,
    /// Atomic transition frequency
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub omega0: f64,
    /// Atom-field coupling
    #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
    pub coupling: f64,
    /// Fock truncation dimension
    #[arg(long, default_value_t = 32)]
    pub dim: usize,
}

impl ModelArgs {
    fn params(&self) -> Result<ModelParams, CliError> {
        ModelParams::new(self.k, self.omega, self.omega0, self.coupling, self.dim).map_err(CliError::config)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchArg {
    Both,
    Plus,
    Minus,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Highest block index (default: min(10, dim − 1 − k))
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Which coupled branch to print
    #[arg(long, value_enum, default_value_t = BranchArg::Both)]
    pub branch: BranchArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Highest block index checked (default: min(40, dim − 1 − k))
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Tolerance for analytic energies against the oracle
    #[arg(long, default_value_t = tol::ORACLE)]
    pub tolerance: f64,
    /// Seed for the randomized SU(2) checks
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Use the linear-λ energy formula in the spectrum check
    #[arg(long, hide = true)]
    pub inject_literal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AtomArg {
    E,
    G,
}

impl From<AtomArg> for Atom {
    fn from(a: AtomArg) -> Self {
        match a {
            AtomArg::E => Atom::Excited,
            AtomArg::G => Atom::Ground,
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EvolveArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Initial atomic level
    #[arg(long, value_enum, default_value_t = AtomArg::E)]
    pub atom: AtomArg,
    /// Initial photon number (ignored when --alpha is given)
    #[arg(long, default_value_t = 0)]
    pub photons: usize,
    /// Start from a coherent field of this (real) amplitude
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Phase of the coherent amplitude, radians
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha_phase: f64,
    /// Final time
    #[arg(long, default_value_t = 100.0)]
    pub t_max: f64,
    /// Number of time steps (rows = steps + 1)
    #[arg(long, default_value_t = 200)]
    pub steps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    /// D(ξ)|j, µ⟩ on the |j, m⟩ basis
    Perelomov,
    /// Coherent field |α⟩ on the Fock basis
    Field,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CoherentArgs {
    #[arg(long, value_enum, default_value_t = StateKind::Perelomov)]
    pub kind: StateKind,
    /// Spin j (half-integer)
    #[arg(long, default_value_t = 0.5)]
    pub j: f64,
    /// Spin projection µ of the displaced state
    #[arg(long, default_value_t = -0.5, allow_negative_numbers = true)]
    pub mu: f64,
    /// Tilt angle θ, |θ| < π
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub theta: f64,
    /// Tilt phase φ
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi: f64,
    /// Field amplitude for --kind field
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Phase of the field amplitude
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha_phase: f64,
    /// Fock dimension for --kind field
    #[arg(long, default_value_t = 32)]
    pub dim: usize,
}

#[derive(Debug)]
pub enum CliError {
    /// Invalid configuration; exit 2.
    Config(String),
    /// Failed check or computation; exit 1.
    Failed(String),
    Io(io::Error),
}

impl CliError {
    fn config(e: impl ToString) -> Self {
        CliError::Config(e.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Failed(_) | CliError::Io(_) => EXIT_CHECK_FAILED,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Failed(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => format_float(*x),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => Value::from(*i),
            Cell::Float(x) => Value::from(*x),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
        }
    }
}

/// 17 significant digits, scientific notation. Negative zero prints as zero.
pub fn format_float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self, config: &RunConfig) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| ((*c).to_owned(), v.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let doc = serde_json::json!({
            "config": config,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
        s.push('\n');
        s
    }
}

/// Result of one command: the table plus whether every check passed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub table: Table,
    /// Names of failed checks (validate only).
    pub failed: Vec<String>,
    /// Non-fatal notes for standard error.
    pub warnings: Vec<String>,
}

impl Outcome {
    fn ok(table: Table) -> Self {
        Self {
            table,
            failed: Vec::new(),
            warnings: Vec::new(),
        }
    }
}

pub fn spectrum_table(args: &SpectrumArgs) -> Result<Outcome, CliError> {
    let p = args.model.params()?;
    let n_max = args.n_max.unwrap_or_else(|| p.safe_max().min(10));
    if n_max > p.safe_max() {
        return Err(CliError::Config(format!(
            "--n-max {n_max} exceeds the exact window dim - 1 - k = {}",
            p.safe_max()
        )));
    }
    let keep = |b: Branch| match args.branch {
        BranchArg::Both => true,
        BranchArg::Plus => b == Branch::Plus,
        BranchArg::Minus => b == Branch::Minus,
    };
    let mut entries = analytic_spectrum(&p, n_max)?;
    entries.retain(|e| e.sector != crate::model::Sector::Coupled || keep(e.branch));
    entries.sort_by_key(|e| (e.sector, e.n, e.branch));
    let rows = entries
        .iter()
        .map(|e| {
            vec![
                Cell::Int(e.n as i64),
                Cell::Text(e.branch.to_string()),
                Cell::Text(e.sector.to_string()),
                Cell::Float(e.detuning),
                Cell::Float(e.interaction_energy),
                Cell::Float(e.total_energy),
            ]
        })
        .collect();
    Ok(Outcome::ok(Table {
        columns: vec!["n", "branch", "sector", "detuning", "interaction_energy", "total_energy"],
        rows,
    }))
}

pub fn validate_table(args: &ValidateArgs) -> Result<Outcome, CliError> {
    let p = args.model.params()?;
    if !(args.tolerance.is_finite() && args.tolerance > 0.0) {
        return Err(CliError::Config(format!("--tolerance must be positive, got {}", args.tolerance)));
    }
    let mut cfg = ValidationConfig::new(p);
    if let Some(n) = args.n_max {
        if n > p.safe_max() {
            return Err(CliError::Config(format!(
                "--n-max {n} exceeds the exact window dim - 1 - k = {}",
                p.safe_max()
            )));
        }
        cfg.n_max = n;
    }
    cfg.oracle_tol = args.tolerance;
    cfg.seed = args.seed;
    if args.inject_literal {
        cfg.convention = Convention::LiteralLinear;
    }
    let report = run_validation(&cfg)?;
    let rows = report
        .checks
        .iter()
        .map(|c| {
            vec![
                Cell::Text(c.name.to_owned()),
                Cell::Bool(c.passed),
                Cell::Float(c.worst),
                Cell::Float(c.tolerance),
                Cell::Text(c.detail.clone()),
            ]
        })
        .collect();
    Ok(Outcome {
        table: Table {
            columns: vec!["check", "passed", "worst", "tolerance", "detail"],
            rows,
        },
        failed: report.failures().map(|c| c.name.to_owned()).collect(),
        warnings: Vec::new(),
    })
}

pub fn evolve_table(args: &EvolveArgs) -> Result<Outcome, CliError> {
    let p = args.model.params()?;
    if !(args.t_max.is_finite() && args.t_max >= 0.0) {
        return Err(CliError::Config(format!("--t-max must be finite and >= 0, got {}", args.t_max)));
    }
    if !args.alpha_phase.is_finite() {
        return Err(CliError::Config("--alpha-phase must be finite".into()));
    }
    let mut warnings = Vec::new();
    let s0 = match args.alpha {
        Some(alpha) => {
            let field = coherent_field_state(C64::from_polar(alpha, args.alpha_phase), args.atom.into(), p.dim)
                .map_err(CliError::config)?;
            if !field.is_adequate() {
                warnings.push(format!(
                    "warning: coherent state loses {:.3e} probability to the truncation",
                    field.tail_mass
                ));
            }
            field.state
        }
        None => {
            if args.photons >= p.dim {
                return Err(CliError::Config(format!("--photons {} outside dim {}", args.photons, p.dim)));
            }
            QuantumState::basis(args.photons, args.atom.into(), p.dim)
        }
    };
    let prop = Propagator::new(&p)?;
    let times = time_grid(args.t_max, args.steps);
    let states = prop.evolve(&s0, &times)?;
    let rows = times
        .iter()
        .zip(&states)
        .map(|(&t, s)| {
            vec![
                Cell::Float(t),
                Cell::Float(atomic_inversion(s)),
                Cell::Float((s.norm() - 1.0).abs()),
            ]
        })
        .collect();
    Ok(Outcome {
        table: Table {
            columns: vec!["t", "inversion", "norm_error"],
            rows,
        },
        failed: Vec::new(),
        warnings,
    })
}

pub fn coherent_table(args: &CoherentArgs) -> Result<Outcome, CliError> {
    match args.kind {
        StateKind::Perelomov => {
            if !(args.theta.is_finite() && args.phi.is_finite()) {
                return Err(CliError::Config("--theta and --phi must be finite".into()));
            }
            let tilt = TiltParams::new(args.theta, args.phi);
            let (zeta, _) = crate::su2::gauss_decompose(&tilt).map_err(CliError::config)?;
            let st = perelomov_number_state(args.j, args.mu, zeta).map_err(CliError::config)?;
            let rows = st
                .coefficients
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    vec![
                        Cell::Float(i as f64 - st.j()),
                        Cell::Float(c.re),
                        Cell::Float(c.im),
                        Cell::Float(c.norm_sqr()),
                    ]
                })
                .collect();
            Ok(Outcome::ok(Table {
                columns: vec!["m", "re", "im", "probability"],
                rows,
            }))
        }
        StateKind::Field => {
            if !(args.alpha.is_finite() && args.alpha_phase.is_finite()) {
                return Err(CliError::Config("--alpha and --alpha-phase must be finite".into()));
            }
            let field = coherent_field_state(C64::from_polar(args.alpha, args.alpha_phase), Atom::Excited, args.dim)
                .map_err(CliError::config)?;
            let rows = (0..args.dim)
                .map(|n| {
                    let c = field.state.amplitude(n, Atom::Excited);
                    vec![Cell::Int(n as i64), Cell::Float(c.re), Cell::Float(c.im), Cell::Float(c.norm_sqr())]
                })
                .collect();
            let mut out = Outcome::ok(Table {
                columns: vec!["n", "re", "im", "probability"],
                rows,
            });
            if !field.is_adequate() {
                out.warnings.push(format!(
                    "warning: coherent state loses {:.3e} probability to the truncation",
                    field.tail_mass
                ));
            }
            Ok(out)
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match &cfg.command {
        Command::Spectrum(a) => spectrum_table(a),
        Command::Validate(a) => validate_table(a),
        Command::Evolve(a) => evolve_table(a),
        Command::CoherentState(a) => coherent_table(a),
    }
}

/// Renders the outcome in the configured format.
pub fn render(cfg: &RunConfig, outcome: &Outcome) -> Result<String, CliError> {
    match cfg.format {
        Format::Csv => outcome.table.to_csv(),
        Format::Json => Ok(outcome.table.to_json(cfg)),
    }
}

/// Runs a parsed configuration, writing the table to `--out` or `stdout`
/// and diagnostics to `stderr`. Returns the process exit code.
pub fn execute(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = run(cfg).and_then(|outcome| {
        let text = render(cfg, &outcome)?;
        match &cfg.out {
            Some(path) => File::create(path)?.write_all(text.as_bytes())?,
            None => stdout.write_all(text.as_bytes())?,
        }
        Ok(outcome)
    });
    match result {
        Ok(outcome) => {
            for w in &outcome.warnings {
                let _ = writeln!(stderr, "{w}");
            }
            if outcome.failed.is_empty() {
                EXIT_OK
            } else {
                for name in &outcome.failed {
                    let _ = writeln!(stderr, "check failed: {name}");
                }
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "kjc: {e}");
            e.exit_code()
        }
    }
}

/// Parses `args` (program name first) and executes. Clap errors exit 2,
/// `--help`/`--version` exit 0.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => execute(&cfg, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            code
        }
    }
}
