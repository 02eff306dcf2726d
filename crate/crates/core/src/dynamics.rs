//! Exact time evolution of the atom-field state by spectral decomposition of
//! the truncated Hamiltonian.

use std::f64::consts::PI;

use crate::eigensolver::{hermitian_eigen, EigenResult, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::matrix::{c64, inner, vec_norm, C64, DenseMatrix};
use crate::model::{build_hamiltonian, state_index, Atom, ModelParams};

/// Tail probability beyond the truncation above which a coherent state is
/// considered inadequately represented.
pub const TAIL_TOLERANCE: f64 = 1e-8;

/// Pure state over `|n⟩⊗{|e⟩, |g⟩}`, `2·dim` amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    pub amplitudes: Vec<C64>,
}

impl QuantumState {
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() || !amplitudes.len().is_multiple_of(2) {
            return Err(Error::InvalidParameter {
                name: "amplitudes",
                reason: format!("length must be a positive even number, got {}", amplitudes.len()),
            });
        }
        Ok(Self { amplitudes })
    }

    /// `|n⟩⊗|atom⟩`.
    pub fn basis(n: usize, atom: Atom, dim: usize) -> Self {
        assert!(n < dim, "photon number {n} outside dim {dim}");
        let mut amplitudes = vec![c64(0.0, 0.0); 2 * dim];
        amplitudes[state_index(n, atom)] = c64(1.0, 0.0);
        Self { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len() / 2
    }

    pub fn norm(&self) -> f64 {
        vec_norm(&self.amplitudes)
    }

    pub fn normalized(mut self) -> Self {
        let norm = self.norm();
        if norm > 0.0 {
            for a in &mut self.amplitudes {
                *a /= norm;
            }
        }
        self
    }

    pub fn amplitude(&self, n: usize, atom: Atom) -> C64 {
        self.amplitudes[state_index(n, atom)]
    }

    pub fn population(&self, n: usize, atom: Atom) -> f64 {
        self.amplitude(n, atom).norm_sqr()
    }

    /// `⟨a†a⟩`
    pub fn mean_photon_number(&self) -> f64 {
        (0..self.dim())
            .map(|n| n as f64 * (self.population(n, Atom::Excited) + self.population(n, Atom::Ground)))
            .sum()
    }

    /// `Re ⟨ψ|M|ψ⟩`
    pub fn expectation(&self, m: &DenseMatrix) -> f64 {
        inner(&self.amplitudes, &m.apply(&self.amplitudes)).re
    }
}

/// Coherent field state together with its truncation loss.
#[derive(Debug, Clone)]
pub struct CoherentField {
    pub state: QuantumState,
    /// Poisson weight that fell above `|dim−1⟩` before renormalization.
    pub tail_mass: f64,
}

impl CoherentField {
    pub fn is_adequate(&self) -> bool {
        self.tail_mass <= TAIL_TOLERANCE
    }
}

/// `|α⟩⊗|atom⟩` with `|α⟩ = e^{−|α|²/2} Σ αⁿ/√(n!) |n⟩`, cut at `dim` and
/// renormalized. Requires `|α|² ≤ dim/4`.
pub fn coherent_field_state(alpha: C64, atom: Atom, dim: usize) -> Result<CoherentField> {
    let mean = alpha.norm_sqr();
    if !mean.is_finite() || dim == 0 || mean > dim as f64 / 4.0 {
        return Err(Error::InvalidParameter {
            name: "alpha",
            reason: format!("|alpha|^2 = {mean} must not exceed dim/4 = {}", dim as f64 / 4.0),
        });
    }
    let mut field = Vec::with_capacity(dim);
    let mut c = c64((-0.5 * mean).exp(), 0.0);
    for n in 0..dim {
        if n > 0 {
            c = c * alpha / (n as f64).sqrt();
        }
        field.push(c);
    }
    // continue the Poisson series past the cut to measure what was lost
    let mut tail_mass = 0.0;
    let mut weight = c.norm_sqr();
    let mut n = dim;
    loop {
        weight *= mean / n as f64;
        tail_mass += weight;
        if weight <= tail_mass * 1e-17 || weight == 0.0 {
            break;
        }
        n += 1;
    }

    let mut amplitudes = vec![c64(0.0, 0.0); 2 * dim];
    for (n, &f) in field.iter().enumerate() {
        amplitudes[state_index(n, atom)] = f;
    }
    Ok(CoherentField {
        state: QuantumState { amplitudes }.normalized(),
        tail_mass,
    })
}

/// Spectral propagator `e^{−iHt}` built from one Jacobi diagonalization.
#[derive(Debug, Clone)]
pub struct Propagator {
    pub hamiltonian: DenseMatrix,
    pub eigen: EigenResult,
}

impl Propagator {
    pub fn new(p: &ModelParams) -> Result<Self> {
        p.validate()?;
        let hamiltonian = build_hamiltonian(p);
        let eigen = hermitian_eigen(&hamiltonian, DEFAULT_TOL)?;
        Ok(Self { hamiltonian, eigen })
    }

    /// Expansion coefficients `⟨v_j|s⟩`.
    pub fn overlaps(&self, s: &QuantumState) -> Result<Vec<C64>> {
        let size = self.eigen.values.len();
        if s.amplitudes.len() != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                got: s.amplitudes.len(),
            });
        }
        Ok((0..size).map(|j| inner(&self.eigen.vector(j), &s.amplitudes)).collect())
    }

    /// `Σ_j e^{−iE_j t}·c_j·|v_j⟩` for precomputed overlaps.
    pub fn state_at(&self, overlaps: &[C64], t: f64) -> QuantumState {
        let size = overlaps.len();
        let vecs = &self.eigen.vectors;
        let mut out = vec![c64(0.0, 0.0); size];
        for (j, (&c, &e)) in overlaps.iter().zip(&self.eigen.values).enumerate() {
            let w = c * C64::from_polar(1.0, -e * t);
            if w == c64(0.0, 0.0) {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                *o += w * vecs[(i, j)];
            }
        }
        QuantumState { amplitudes: out }
    }

    pub fn evolve(&self, s0: &QuantumState, times: &[f64]) -> Result<Vec<QuantumState>> {
        if let Some(&t) = times.iter().find(|t| !t.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "times",
                reason: format!("non-finite time {t}"),
            });
        }
        let overlaps = self.overlaps(s0)?;
        Ok(times.iter().map(|&t| self.state_at(&overlaps, t)).collect())
    }
}

/// States `s(t)` for each requested time.
pub fn evolve(p: &ModelParams, s0: &QuantumState, times: &[f64]) -> Result<Vec<QuantumState>> {
    Propagator::new(p)?.evolve(s0, times)
}

/// `⟨σ₀⟩ = Σ_n |c_{n,e}|² − |c_{n,g}|²`.
pub fn atomic_inversion(s: &QuantumState) -> f64 {
    (0..s.dim())
        .map(|n| s.population(n, Atom::Excited) - s.population(n, Atom::Ground))
        .sum()
}

/// `steps + 1` equally spaced times on `[0, t_max]`.
pub fn time_grid(t_max: f64, steps: usize) -> Vec<f64> {
    if steps == 0 {
        return vec![0.0];
    }
    (0..=steps).map(|i| t_max * i as f64 / steps as f64).collect()
}

/// Oscillation amplitude `√(2·⟨W²⟩)` over a centered window of the given
/// width, on a uniform grid. Equals the amplitude of a pure sinusoid.
pub fn running_amplitude(times: &[f64], values: &[f64], window: f64) -> Vec<f64> {
    assert_eq!(times.len(), values.len());
    if times.len() < 2 {
        return values.iter().map(|v| v.abs() * 2f64.sqrt()).collect();
    }
    let dt = times[1] - times[0];
    let half = ((0.5 * window / dt).round() as usize).max(1);
    let mut prefix = Vec::with_capacity(values.len() + 1);
    prefix.push(0.0);
    for v in values {
        prefix.push(prefix.last().unwrap() + v * v);
    }
    (0..values.len())
        .map(|i| {
            let lo = i.saturating_sub(half);
            let hi = (i + half + 1).min(values.len());
            let mean_sq = (prefix[hi] - prefix[lo]) / (hi - lo) as f64;
            (2.0 * mean_sq).sqrt()
        })
        .collect()
}

/// Collapse-and-revival markers of a resonant one-photon inversion trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollapseRevival {
    /// `2π|α|/λ`
    pub revival_time: f64,
    /// Largest running amplitude on `[0.25, 0.5]·t_r`.
    pub collapse_amplitude: f64,
    /// Largest running amplitude on `[0.85, 1.15]·t_r`.
    pub revival_amplitude: f64,
}

pub const COLLAPSE_THRESHOLD: f64 = 0.1;
pub const REVIVAL_THRESHOLD: f64 = 0.3;

impl CollapseRevival {
    /// Uses a running window of width `π/λ`.
    pub fn measure(times: &[f64], inversion: &[f64], coupling: f64, alpha_abs: f64) -> Self {
        let revival_time = 2.0 * PI * alpha_abs / coupling;
        let amp = running_amplitude(times, inversion, PI / coupling);
        let window_max = |lo: f64, hi: f64| {
            times
                .iter()
                .zip(&amp)
                .filter(|(t, _)| **t >= lo * revival_time && **t <= hi * revival_time)
                .map(|(_, a)| *a)
                .fold(f64::NAN, f64::max)
        };
        Self {
            revival_time,
            collapse_amplitude: window_max(0.25, 0.5),
            revival_amplitude: window_max(0.85, 1.15),
        }
    }

    pub fn passes(&self) -> bool {
        self.collapse_amplitude < COLLAPSE_THRESHOLD && self.revival_amplitude > REVIVAL_THRESHOLD
    }
}

/// Runs the resonant `k = 1` collapse-revival scenario for a coherent field
/// `|α⟩⊗|e⟩` and returns the measured markers.
pub fn collapse_revival_scenario(alpha: f64, coupling: f64, dim: usize) -> Result<CollapseRevival> {
    let p = ModelParams::new(1, 1.0, 1.0, coupling, dim)?;
    let field = coherent_field_state(c64(alpha, 0.0), Atom::Excited, dim)?;
    let t_r = 2.0 * PI * alpha.abs() / coupling;
    // ~20 samples per Rabi period of the mean photon number
    let rabi = PI / (coupling * (alpha * alpha + 1.0).sqrt());
    let steps = ((1.3 * t_r) / (rabi / 20.0)).ceil() as usize;
    let times = time_grid(1.3 * t_r, steps);
    let states = evolve(&p, &field.state, &times)?;
    let inversion: Vec<f64> = states.iter().map(atomic_inversion).collect();
    Ok(CollapseRevival::measure(&times, &inversion, coupling, alpha.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vacuum_coherent_state() {
        let f = coherent_field_state(c64(0.0, 0.0), Atom::Ground, 8).unwrap();
        assert_eq!(f.state, QuantumState::basis(0, Atom::Ground, 8));
        assert_eq!(f.tail_mass, 0.0);
    }

    #[test]
    fn coherent_mean_photon_number() {
        let f = coherent_field_state(c64(1.0, 0.0), Atom::Excited, 32).unwrap();
        assert!((f.state.mean_photon_number() - 1.0).abs() < 1e-8);
        assert!((f.state.norm() - 1.0).abs() < 1e-15);
        assert!(f.is_adequate());
    }

    #[test]
    fn coherent_truncation_checks() {
        assert!(coherent_field_state(c64(3.0, 0.0), Atom::Excited, 16).is_err());
        // |α|² = 4 = dim/4 is allowed but loses visible weight
        let f = coherent_field_state(c64(2.0, 0.0), Atom::Excited, 16).unwrap();
        assert!(f.tail_mass > 1e-8);
        assert!(!f.is_adequate());
        assert!((f.state.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(atomic_inversion(&QuantumState::basis(0, Atom::Excited, 4)), 1.0);
        assert_eq!(atomic_inversion(&QuantumState::basis(3, Atom::Ground, 4)), -1.0);
        let h = 0.5f64.sqrt();
        let mut s = QuantumState::basis(0, Atom::Excited, 4);
        s.amplitudes[0] = c64(h, 0.0);
        s.amplitudes[state_index(1, Atom::Ground)] = c64(0.0, h);
        assert!(atomic_inversion(&s).abs() < 1e-15);
    }

    #[test]
    fn evolve_at_zero_is_identity() {
        let p = ModelParams::new(2, 1.0, 2.1, 0.2, 10).unwrap();
        let s0 = coherent_field_state(c64(0.6, 0.3), Atom::Excited, 10).unwrap().state;
        let out = evolve(&p, &s0, &[0.0]).unwrap();
        let diff: f64 = out[0]
            .amplitudes
            .iter()
            .zip(&s0.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(diff < 1e-12);
    }

    #[test]
    fn decoupled_state_only_picks_up_phase() {
        let p = ModelParams::new(1, 1.0, 1.3, 0.0, 8).unwrap();
        let s0 = QuantumState::basis(0, Atom::Excited, 8);
        for s in evolve(&p, &s0, &time_grid(10.0, 20)).unwrap() {
            assert!((s.population(0, Atom::Excited) - 1.0).abs() < 1e-12);
            assert!((atomic_inversion(&s) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn vacuum_rabi_half_period() {
        let p = ModelParams::new(1, 1.0, 1.0, 0.1, 8).unwrap();
        let s0 = QuantumState::basis(0, Atom::Excited, 8);
        let t = PI / (2.0 * 0.1);
        let s = &evolve(&p, &s0, &[t]).unwrap()[0];
        assert!((atomic_inversion(s) + 1.0).abs() < 1e-6);
        assert!((s.population(1, Atom::Ground) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn evolve_rejects_bad_input() {
        let p = ModelParams::new(1, 1.0, 1.0, 0.1, 8).unwrap();
        let s0 = QuantumState::basis(0, Atom::Excited, 8);
        assert!(evolve(&p, &s0, &[f64::NAN]).is_err());
        let wrong = QuantumState::basis(0, Atom::Excited, 6);
        assert!(matches!(evolve(&p, &wrong, &[1.0]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn running_amplitude_of_sinusoid() {
        let times = time_grid(100.0, 10_000);
        let values: Vec<f64> = times.iter().map(|t| 0.7 * (3.0 * t).cos()).collect();
        let amp = running_amplitude(&times, &values, 2.0 * PI);
        // away from the ends the window covers whole periods
        for a in &amp[1000..9000] {
            assert!((a - 0.7).abs() < 0.01, "{a}");
        }
    }

    #[test]
    fn time_grid_shape() {
        assert_eq!(time_grid(1.0, 4), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(time_grid(3.0, 0), vec![0.0]);
    }
}
