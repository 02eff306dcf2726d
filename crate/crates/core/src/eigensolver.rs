//! Cyclic Jacobi eigensolver for dense Hermitian matrices.
//!
//! This is the brute-force oracle every closed-form result is checked
//! against, so it depends on nothing but [`DenseMatrix`].

use crate::error::{Error, Result};
use crate::matrix::{vec_norm, C64, DenseMatrix};

/// Default convergence threshold, relative to the Frobenius norm of the input.
pub const DEFAULT_TOL: f64 = 1e-14;

const MAX_SWEEPS: usize = 100;
const MAX_SIZE: usize = 1024;
const HERMITIAN_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct EigenResult {
    /// Eigenvalues, ascending.
    pub values: Vec<f64>,
    /// Eigenvectors as columns, matched to `values`.
    pub vectors: DenseMatrix,
    /// Number of sweeps performed.
    pub iterations: usize,
    /// Off-diagonal Frobenius norm left after the last sweep.
    pub offdiag_residual: f64,
}

impl EigenResult {
    pub fn vector(&self, j: usize) -> Vec<C64> {
        self.vectors.column(j)
    }

    /// `V · diag(values) · V†`.
    pub fn reconstruct(&self) -> DenseMatrix {
        let n = self.values.len();
        let mut scaled = self.vectors.clone();
        for i in 0..n {
            for j in 0..n {
                scaled[(i, j)] *= self.values[j];
            }
        }
        &scaled * &self.vectors.adjoint()
    }
}

/// Diagonalizes a Hermitian matrix by cyclic Jacobi sweeps.
///
/// Sweeps run until the off-diagonal Frobenius norm is at most
/// `tol · ‖m‖_F`. Inputs with `max |M − M†| > 1e−12·max(1, ‖M‖_max)` are
/// rejected.
pub fn hermitian_eigen(m: &DenseMatrix, tol: f64) -> Result<EigenResult> {
    let n = m.ensure_square()?;
    if n > MAX_SIZE {
        return Err(Error::InvalidParameter {
            name: "matrix size",
            reason: format!("{n} exceeds the supported maximum {MAX_SIZE}"),
        });
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tol",
            reason: format!("must be positive and finite, got {tol}"),
        });
    }
    let deviation = m.hermiticity_error();
    if deviation > HERMITIAN_TOL * m.max_abs().max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }

    // symmetrize so the working copy is exactly Hermitian
    let mut a = m.clone();
    for i in 0..n {
        a[(i, i)] = C64::new(a[(i, i)].re, 0.0);
        for j in i + 1..n {
            let avg = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = avg;
            a[(j, i)] = avg.conj();
        }
    }
    let mut v = DenseMatrix::identity(n);

    let target = tol * a.frobenius_norm();
    let skip = target / (n.max(1) as f64) * 1e-3;
    let mut offdiag = a.offdiag_norm();
    let mut sweeps = 0;

    while offdiag > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                offdiag,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= skip {
                    continue;
                }
                rotate(&mut a, &mut v, p, q, apq, mag);
            }
        }
        sweeps += 1;
        offdiag = a.offdiag_norm();
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let columns: Vec<Vec<C64>> = order.iter().map(|&i| v.column(i)).collect();
    let vectors = if n == 0 {
        DenseMatrix::zeros(0, 0)
    } else {
        DenseMatrix::from_columns(&columns)
    };

    Ok(EigenResult {
        values,
        vectors,
        iterations: sweeps,
        offdiag_residual: offdiag,
    })
}

/// One complex Jacobi rotation `A ← G†AG`, `V ← VG`, zeroing `A[p, q]`.
///
/// `G = [[c, s·e^{iφ}], [−s·e^{−iφ}, c]]` on rows/columns `(p, q)` where
/// `A[p, q] = |A[p, q]|·e^{iφ}`.
fn rotate(a: &mut DenseMatrix, v: &mut DenseMatrix, p: usize, q: usize, apq: C64, mag: f64) {
    let n = a.rows();
    let phase = apq / mag;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let sp = phase * s; // s·e^{iφ}
    let sm = sp.conj(); // s·e^{−iφ}

    // columns: A ← A G
    for r in 0..n {
        let arp = a[(r, p)];
        let arq = a[(r, q)];
        a[(r, p)] = arp * c - arq * sm;
        a[(r, q)] = arp * sp + arq * c;
    }
    // rows: A ← G† A
    for r in 0..n {
        let apr = a[(p, r)];
        let aqr = a[(q, r)];
        a[(p, r)] = apr * c - aqr * sp;
        a[(q, r)] = apr * sm + aqr * c;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);

    for r in 0..n {
        let vrp = v[(r, p)];
        let vrq = v[(r, q)];
        v[(r, p)] = vrp * c - vrq * sm;
        v[(r, q)] = vrp * sp + vrq * c;
    }
}

/// `‖m·v − value·v‖₂ / ‖v‖₂`.
pub fn residual(m: &DenseMatrix, value: f64, vector: &[C64]) -> Result<f64> {
    if vector.len() != m.cols() {
        return Err(Error::DimensionMismatch {
            expected: m.cols(),
            got: vector.len(),
        });
    }
    let norm = vec_norm(vector);
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mv = m.apply(vector);
    let diff: Vec<C64> = mv.iter().zip(vector).map(|(x, y)| x - y * value).collect();
    Ok(vec_norm(&diff) / norm)
}
