//! su(2) in the Pauli realization and the SU(2) displacement operator.
//!
//! `D(ξ) = exp(ξJ₊ − ξ*J₋)` with `ξ = −(θ/2)e^{−iφ}`. In the spin-½ basis
//! `(|½,+½⟩, |½,−½⟩)` it has the closed form
//!
//! ```text
//! D(ξ) = [[ cos|ξ|,            (ξ/|ξ|)  sin|ξ| ],
//!         [ −(ξ*/|ξ|) sin|ξ|,   cos|ξ|         ]]
//! ```
//!
//! Conjugating the generators by `D` (the tilting transformation) gives
//! linear combinations of `J₀, J₊, J₋` with coefficients `δ = sin 2|ξ|` and
//! `ε = (cos 2|ξ| − 1)/2`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::fock::factorial;
use crate::matrix::{c64, C64, DenseMatrix};

/// The three su(2) generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    J0,
    JPlus,
    JMinus,
}

/// `(J₀, J₊, J₋)` as matrices.
#[derive(Debug, Clone)]
pub struct SpinOperators {
    pub j0: DenseMatrix,
    pub jplus: DenseMatrix,
    pub jminus: DenseMatrix,
}

impl SpinOperators {
    pub fn get(&self, which: Generator) -> &DenseMatrix {
        match which {
            Generator::J0 => &self.j0,
            Generator::JPlus => &self.jplus,
            Generator::JMinus => &self.jminus,
        }
    }

    /// Casimir `J² = J₀² + (J₊J₋ + J₋J₊)/2`.
    pub fn casimir(&self) -> DenseMatrix {
        let j0sq = &self.j0 * &self.j0;
        let sym = &(&self.jplus * &self.jminus) + &(&self.jminus * &self.jplus);
        &j0sq + &sym.scale_real(0.5)
    }
}

/// `J₀ = σ₀/2`, `J₊ = σ₊`, `J₋ = σ₋`, upper component = spin up.
pub fn pauli_realization() -> SpinOperators {
    SpinOperators {
        j0: DenseMatrix::from_diagonal(&[0.5, -0.5]),
        jplus: DenseMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]),
        jminus: DenseMatrix::from_real_rows(&[&[0.0, 0.0], &[1.0, 0.0]]),
    }
}

/// Spin-`j` generators on the basis `|j, m⟩`, `m = −j, …, j` (index `j + m`).
pub fn spin_operators(spin: Spin) -> SpinOperators {
    let d = spin.multiplicity();
    let j = spin.j();
    let mut j0 = DenseMatrix::zeros(d, d);
    let mut jplus = DenseMatrix::zeros(d, d);
    for i in 0..d {
        let m = i as f64 - j;
        j0[(i, i)] = c64(m, 0.0);
        if i + 1 < d {
            jplus[(i + 1, i)] = c64(((j - m) * (j + m + 1.0)).sqrt(), 0.0);
        }
    }
    let jminus = jplus.adjoint();
    SpinOperators { j0, jplus, jminus }
}

/// Coherent-state parameters of one displacement `D(ξ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TiltParams {
    pub theta: f64,
    pub varphi: f64,
    /// `ξ = −(θ/2)e^{−iφ}`
    pub xi: C64,
    /// `ζ = −tan(θ/2)e^{−iφ}`
    pub zeta: C64,
    /// `η = ln(1 + |ζ|²)`
    pub eta: f64,
    /// `δ = sin 2|ξ|`
    pub delta: f64,
    /// `ε = (cos 2|ξ| − 1)/2`
    pub epsilon: f64,
}

impl TiltParams {
    pub fn new(theta: f64, varphi: f64) -> Self {
        let phase = C64::from_polar(1.0, -varphi);
        let xi = phase * (-0.5 * theta);
        let zeta = phase * -(0.5 * theta).tan();
        let abs_xi = xi.norm();
        Self {
            theta,
            varphi,
            xi,
            zeta,
            eta: zeta.norm_sqr().ln_1p(),
            delta: (2.0 * abs_xi).sin(),
            epsilon: 0.5 * ((2.0 * abs_xi).cos() - 1.0),
        }
    }

    /// Recovers `(θ, φ)` from `ξ`, with `θ = 2|ξ| ≥ 0`.
    pub fn from_xi(xi: C64) -> Self {
        if xi.norm() == 0.0 {
            return Self::new(0.0, 0.0);
        }
        // −(θ/2)e^{−iφ} = ξ  ⇒  e^{−iφ} = −ξ/|ξ|
        let varphi = -(-xi).arg();
        Self::new(2.0 * xi.norm(), varphi)
    }

    /// Parameters with the given Gaussian-decomposition `ζ`.
    pub fn from_zeta(zeta: C64) -> Self {
        if zeta.norm() == 0.0 {
            return Self::new(0.0, 0.0);
        }
        // ζ = (ξ/|ξ|) tan|ξ|
        Self::from_xi(zeta / zeta.norm() * zeta.norm().atan())
    }

    #[inline]
    pub fn abs_xi(&self) -> f64 {
        self.xi.norm()
    }

    /// `η` through `−2 ln cos|ξ|`; equals [`TiltParams::eta`] for `|θ| < π`.
    pub fn eta_from_xi(&self) -> f64 {
        -2.0 * self.abs_xi().cos().ln()
    }

    /// Unit phase `ξ/|ξ|`, absent at `ξ = 0`.
    pub fn direction(&self) -> Option<C64> {
        let r = self.abs_xi();
        (r > 0.0).then(|| self.xi / r)
    }
}

/// Closed-form `D(ξ)` in the spin-½ representation; the identity at `ξ = 0`.
pub fn displacement_matrix(tilt: &TiltParams) -> DenseMatrix {
    let r = tilt.abs_xi();
    let Some(dir) = tilt.direction() else {
        return DenseMatrix::identity(2);
    };
    let (s, c) = r.sin_cos();
    DenseMatrix::from_rows(&[
        vec![c64(c, 0.0), dir * s],
        vec![-dir.conj() * s, c64(c, 0.0)],
    ])
}

/// Right-hand side of `D†(ξ) J D(ξ)` as a combination of the generators.
///
/// `ξ = 0` is rejected because the coefficients involve `ξ/|ξ|`; the
/// transformation there is the identity.
pub fn tilt_generator(which: Generator, tilt: &TiltParams) -> Result<DenseMatrix> {
    let dir = tilt.direction().ok_or(Error::DegenerateTilt)?;
    let ops = pauli_realization();
    let (delta, eps) = (tilt.delta, tilt.epsilon);
    let xi = tilt.xi;
    let combine = |c0: C64, cp: C64, cm: C64| {
        let t0 = ops.j0.scale(c0);
        let tp = ops.jplus.scale(cp);
        let tm = ops.jminus.scale(cm);
        &(&t0 + &tp) + &tm
    };
    let one = c64(1.0, 0.0);
    let m = match which {
        Generator::JPlus => combine(
            -dir.conj() * delta,
            one * (eps + 1.0),
            xi.conj() / xi * eps,
        ),
        Generator::JMinus => combine(-dir * delta, xi / xi.conj() * eps, one * (eps + 1.0)),
        Generator::J0 => combine(
            one * (2.0 * eps + 1.0),
            dir * (0.5 * delta),
            dir.conj() * (0.5 * delta),
        ),
    };
    Ok(m)
}

/// `(ζ, η)` of the normal-ordered form `D = exp(ζJ₊) exp(ηJ₀) exp(−ζ*J₋)`.
pub fn gauss_decompose(tilt: &TiltParams) -> Result<(C64, f64)> {
    if tilt.theta.is_nan() || tilt.theta.abs() >= PI {
        return Err(Error::TiltOutOfDomain { theta: tilt.theta });
    }
    Ok((tilt.zeta, tilt.eta))
}

/// `exp(ζJ₊)·exp(ηJ₀)·exp(−ζ*J₋)` in the spin-½ representation.
///
/// `J₊` and `J₋` are nilpotent there, so each factor is exact.
pub fn gaussian_product(zeta: C64, eta: f64) -> DenseMatrix {
    let raise = DenseMatrix::from_rows(&[vec![c64(1.0, 0.0), zeta], vec![c64(0.0, 0.0), c64(1.0, 0.0)]]);
    let weight = DenseMatrix::from_diagonal(&[(0.5 * eta).exp(), (-0.5 * eta).exp()]);
    let lower = DenseMatrix::from_rows(&[
        vec![c64(1.0, 0.0), c64(0.0, 0.0)],
        vec![-zeta.conj(), c64(1.0, 0.0)],
    ]);
    &(&raise * &weight) * &lower
}

/// Angular-momentum label stored as twice its value so half-integers are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Spin {
    twice: u32,
}

impl Spin {
    pub fn from_twice(twice: u32) -> Self {
        Self { twice }
    }

    pub fn new(j: f64) -> Result<Self> {
        let twice = 2.0 * j;
        if !(j >= 0.0 && (twice - twice.round()).abs() < 1e-12 && twice <= 100.0) {
            return Err(Error::InvalidSpin { j, mu: f64::NAN });
        }
        Ok(Self {
            twice: twice.round() as u32,
        })
    }

    pub fn j(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    pub fn twice(self) -> u32 {
        self.twice
    }

    /// `2j + 1`
    pub fn multiplicity(self) -> usize {
        self.twice as usize + 1
    }
}

/// `D(ξ)|j, µ⟩` expanded on `|j, m⟩`, `m = −j..j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PerelomovState {
    pub spin: Spin,
    /// `2µ`
    pub mu_twice: i32,
    pub zeta: C64,
    /// Amplitude on `|j, m⟩` at index `j + m`.
    pub coefficients: Vec<C64>,
    /// Norm of the summed coefficients before re-normalization.
    pub raw_norm: f64,
}

impl PerelomovState {
    pub fn j(&self) -> f64 {
        self.spin.j()
    }

    pub fn mu(&self) -> f64 {
        f64::from(self.mu_twice) / 2.0
    }

    /// Amplitude on `|j, m⟩`.
    pub fn amplitude(&self, m: f64) -> Option<C64> {
        let idx = m + self.j();
        if idx < 0.0 || (idx - idx.round()).abs() > 1e-12 {
            return None;
        }
        self.coefficients.get(idx.round() as usize).copied()
    }

    pub fn norm(&self) -> f64 {
        crate::matrix::vec_norm(&self.coefficients)
    }
}

fn spin_labels(j: f64, mu: f64) -> Result<(Spin, i32)> {
    let spin = Spin::new(j).map_err(|_| Error::InvalidSpin { j, mu })?;
    let mu2 = 2.0 * mu;
    let j2 = spin.twice() as i32;
    if (mu2 - mu2.round()).abs() > 1e-12 {
        return Err(Error::InvalidSpin { j, mu });
    }
    let mu2 = mu2.round() as i32;
    if mu2.abs() > j2 || (j2 - mu2) % 2 != 0 {
        return Err(Error::InvalidSpin { j, mu });
    }
    Ok((spin, mu2))
}

/// SU(2) number coherent state `|ζ, j, µ⟩ = D(ξ)|j, µ⟩`.
///
/// The double sum runs over every `(n, s)` for which all Gamma arguments are
/// positive integers: `0 ≤ n ≤ j+µ`, `0 ≤ s ≤ j−µ+n`. The result is divided by
/// its norm afterwards.
pub fn perelomov_number_state(j: f64, mu: f64, zeta: C64) -> Result<PerelomovState> {
    let (spin, mu2) = spin_labels(j, mu)?;
    let j2 = spin.twice() as i32;
    // a = j + µ, b = j − µ
    let a = ((j2 + mu2) / 2) as usize;
    let b = ((j2 - mu2) / 2) as usize;
    let eta = zeta.norm_sqr().ln_1p();
    let mu_val = f64::from(mu2) / 2.0;

    let mut coefficients = vec![C64::new(0.0, 0.0); spin.multiplicity()];
    for n in 0..=a {
        let lower = (-zeta.conj()).powu(n as u32) / factorial(n);
        let weight = (eta * (mu_val - n as f64)).exp() * factorial(b + n) / factorial(a - n);
        for s in 0..=b + n {
            let raise = zeta.powu(s as u32) / factorial(s);
            let root = (factorial(a) * factorial(a - n + s) / (factorial(b) * factorial(b + n - s))).sqrt();
            // ket |j, µ − n + s⟩ sits at index j + µ − n + s
            coefficients[a - n + s] += raise * lower * (weight * root);
        }
    }
    Ok(normalized(spin, mu2, zeta, coefficients))
}

/// Lowest-weight Perelomov state `|ζ⟩ = D(ξ)|j, −j⟩` in closed form.
pub fn perelomov_coherent_state(j: f64, zeta: C64) -> Result<PerelomovState> {
    let (spin, mu2) = spin_labels(j, -j)?;
    let j2 = spin.twice() as usize;
    let prefactor = (1.0 + zeta.norm_sqr()).powf(-spin.j());
    let coefficients = (0..=j2)
        .map(|p| {
            // p = j + m
            let binom = (factorial(j2) / (factorial(p) * factorial(j2 - p))).sqrt();
            zeta.powu(p as u32) * (binom * prefactor)
        })
        .collect();
    Ok(normalized(spin, mu2, zeta, coefficients))
}

fn normalized(spin: Spin, mu_twice: i32, zeta: C64, mut coefficients: Vec<C64>) -> PerelomovState {
    let raw_norm = crate::matrix::vec_norm(&coefficients);
    if raw_norm > 0.0 {
        for c in &mut coefficients {
            *c /= raw_norm;
        }
    }
    PerelomovState {
        spin,
        mu_twice,
        zeta,
        coefficients,
        raw_norm,
    }
}
