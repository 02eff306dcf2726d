//! Truncated bosonic Fock space.
//!
//! Number states `|0⟩..|dim−1⟩` with the ladder operators, their powers, the
//! two ordered products `a^k (a†)^k` and `(a†)^k a^k`, and one-sided
//! pseudo-inverses of `(a†)^k`.
//!
//! Truncation only corrupts matrix elements that would need a state above
//! `|dim−1⟩`. For an operator of photon order `k` the *safe window* is
//! `n ≤ dim−1−k`; everything in that window is exact.

use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::matrix::{c64, C64, DenseMatrix};

/// `n!` as a float. Exact for `n ≤ 22`, correctly rounded well beyond.
pub fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

/// Rising product `(n+1)(n+2)…(n+k) = (n+k)!/n!`.
pub fn rising_factorial_ratio(n: usize, k: usize) -> f64 {
    (n + 1..=n + k).fold(1.0, |acc, i| acc * i as f64)
}

/// Falling product `n(n−1)…(n−k+1) = n!/(n−k)!`, zero when `n < k`.
pub fn falling_factorial_ratio(n: usize, k: usize) -> f64 {
    if n < k {
        return 0.0;
    }
    (n - k + 1..=n).fold(1.0, |acc, i| acc * i as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    Annihilation,
    Creation,
}

/// The two orderings of `a^k` and `(a†)^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ordering {
    /// `a^k (a†)^k`, diagonal `(n+k)!/n!`.
    AntiNormal,
    /// `(a†)^k a^k`, diagonal `n!/(n−k)!`.
    Normal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockSpace {
    dim: usize,
}

/// An operator together with the basis indices on which it is exact.
#[derive(Debug, Clone)]
pub struct TruncatedOperator {
    pub matrix: DenseMatrix,
    /// Number states whose matrix elements are unaffected by truncation.
    pub exact: RangeInclusive<usize>,
}

impl TruncatedOperator {
    pub fn is_exact_at(&self, n: usize) -> bool {
        self.exact.contains(&n)
    }
}

/// One-sided inverse of `(a†)^k`.
///
/// The anti-normal version is the left inverse `P (a†)^k = 1` (exact for
/// `n ≤ dim−1−k`), so `(a†)^k P` is the projector onto `n ≥ k`: the identity
/// there. The normal version additionally annihilates `|k⟩..|2k−1⟩` so that
/// `P (a†)^k = 1 − Σ_{m<k} |m⟩⟨m|`.
#[derive(Debug, Clone)]
pub struct CreationPseudoInverse {
    pub matrix: DenseMatrix,
    pub k: usize,
    pub ordering: Ordering,
    dim: usize,
}

impl CreationPseudoInverse {
    /// States on which `P·(a†)^k` reproduces its target.
    pub fn left_range(&self) -> RangeInclusive<usize> {
        0..=self.dim - 1 - self.k
    }

    /// States on which `(a†)^k·P` reproduces the identity.
    pub fn right_range(&self) -> RangeInclusive<usize> {
        self.k..=self.dim - 1
    }

    /// Target of `P·(a†)^k` on `|n⟩`: 1 or 0.
    pub fn left_target(&self, n: usize) -> f64 {
        match self.ordering {
            Ordering::AntiNormal => 1.0,
            Ordering::Normal if n < self.k => 0.0,
            Ordering::Normal => 1.0,
        }
    }
}

impl FockSpace {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter {
                name: "dim",
                reason: "Fock dimension must be positive".into(),
            });
        }
        Ok(Self { dim })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Largest `n` with `n + k ≤ dim − 1`, if any.
    pub fn safe_max(&self, k: usize) -> Option<usize> {
        (self.dim - 1).checked_sub(k)
    }

    /// Number state `|n⟩` as a column vector.
    pub fn basis(&self, n: usize) -> Vec<C64> {
        assert!(n < self.dim, "number state |{n}⟩ outside a {}-dim space", self.dim);
        let mut v = vec![C64::new(0.0, 0.0); self.dim];
        v[n] = C64::new(1.0, 0.0);
        v
    }

    /// `a` with `a[n−1, n] = √n`.
    pub fn annihilation(&self) -> DenseMatrix {
        let mut a = DenseMatrix::zeros(self.dim, self.dim);
        for n in 1..self.dim {
            a[(n - 1, n)] = C64::new((n as f64).sqrt(), 0.0);
        }
        a
    }

    pub fn creation(&self) -> DenseMatrix {
        self.annihilation().adjoint()
    }

    pub fn number(&self) -> DenseMatrix {
        let diag: Vec<f64> = (0..self.dim).map(|n| n as f64).collect();
        DenseMatrix::from_diagonal(&diag)
    }

    /// `a^k` or `(a†)^k`, filled with `√((n+k)!/n!)` directly so the entries
    /// agree bit for bit with the closed-form block couplings.
    pub fn ladder_power(&self, k: usize, ladder: Ladder) -> Result<DenseMatrix> {
        if k == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut out = DenseMatrix::zeros(self.dim, self.dim);
        for n in 0..self.dim.saturating_sub(k) {
            let value = c64(rising_factorial_ratio(n, k).sqrt(), 0.0);
            match ladder {
                Ladder::Annihilation => out[(n, n + k)] = value,
                Ladder::Creation => out[(n + k, n)] = value,
            }
        }
        Ok(out)
    }

    /// `a^k (a†)^k`. Exact (`(n+k)!/n!`) on the safe window only.
    pub fn antinormal_product(&self, k: usize) -> Result<TruncatedOperator> {
        let ak = self.ladder_power(k, Ladder::Annihilation)?;
        let adk = self.ladder_power(k, Ladder::Creation)?;
        let exact = match self.safe_max(k) {
            Some(max) => 0..=max,
            #[allow(clippy::reversed_empty_ranges)]
            None => 1..=0,
        };
        Ok(TruncatedOperator {
            matrix: &ak * &adk,
            exact,
        })
    }

    /// `(a†)^k a^k`. Exact everywhere: the low edge is a genuine kernel.
    pub fn normal_product(&self, k: usize) -> Result<TruncatedOperator> {
        let ak = self.ladder_power(k, Ladder::Annihilation)?;
        let adk = self.ladder_power(k, Ladder::Creation)?;
        Ok(TruncatedOperator {
            matrix: &adk * &ak,
            exact: 0..=self.dim - 1,
        })
    }

    /// Pseudo-inverse of `(a†)^k` adapted to the given ordering.
    ///
    /// Only `⟨n| ← |n+k⟩` transitions are populated, with weight
    /// `√(n!/(n+k)!)`. The normal-ordered version drops the rows `n < k`.
    pub fn pseudo_inverse_creation(
        &self,
        k: usize,
        ordering: Ordering,
    ) -> Result<CreationPseudoInverse> {
        if k == 0 {
            return Err(Error::ZeroOrder);
        }
        if self.dim <= k {
            return Err(Error::InsufficientTruncation {
                dim: self.dim,
                k,
                needed: k + 1,
            });
        }
        let mut p = DenseMatrix::zeros(self.dim, self.dim);
        let first = match ordering {
            Ordering::AntiNormal => 0,
            Ordering::Normal => k,
        };
        for n in first..self.dim - k {
            p[(n, n + k)] = C64::new(rising_factorial_ratio(n, k).sqrt().recip(), 0.0);
        }
        Ok(CreationPseudoInverse {
            matrix: p,
            k,
            ordering,
            dim: self.dim,
        })
    }
}
