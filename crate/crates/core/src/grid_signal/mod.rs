//! Uniform sampling of the real line and complex signals living on it.
//!
//! A [`Grid`] with `n` samples and extent `T` covers `[-T/2, T/2)` with
//! spacing `T/n`. Its dual grid (the frequency grid reached by [`fourier`])
//! has the same number of samples, spacing `1/T` and extent `n/T`, so taking
//! the dual twice returns the original grid.

mod fourier;
mod mask;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

pub use fourier::{bandlimited_derivative, bandlimited_refine, fourier, inverse_fourier};
pub use mask::{eval_mask, MaskKind, SineFrequency};

/// Default sample count; the Gaussian tail at the grid edge is far below `f64` noise.
pub const DEFAULT_N: usize = 2048;
/// Default extent of the time grid.
pub const DEFAULT_EXTENT: f64 = 16.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    n: usize,
    extent: f64,
}

impl Grid {
    pub fn new(n: usize, extent: f64) -> Result<Self> {
        if n < 2 || n % 2 != 0 {
            return Err(Error::invalid(format!(
                "grid size must be even and at least 2, got {n}"
            )));
        }
        if !(extent.is_finite() && extent > 0.0) {
            return Err(Error::invalid(format!(
                "grid extent must be positive and finite, got {extent}"
            )));
        }
        Ok(Grid { n, extent })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn extent(&self) -> f64 {
        self.extent
    }

    pub fn spacing(&self) -> f64 {
        self.extent / self.n as f64
    }

    /// Sample location `t_k = -T/2 + k * spacing`.
    pub fn point(&self, k: usize) -> f64 {
        -0.5 * self.extent + k as f64 * self.spacing()
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.n).map(move |k| self.point(k))
    }

    /// The frequency grid: spacing `1/T`, points `-n/(2T) .. (n/2 - 1)/T`.
    pub fn dual(&self) -> Grid {
        Grid {
            n: self.n,
            extent: self.n as f64 / self.extent,
        }
    }

    /// Index of the sample at `-t_k`. Index 0 sits at `-T/2` and is its own
    /// mirror under the periodic identification of the grid ends.
    pub fn mirror_index(&self, k: usize) -> usize {
        (self.n - k) % self.n
    }

    /// Equality up to representation roundoff in the extent.
    pub fn compatible(&self, other: &Grid) -> bool {
        self.n == other.n && (self.extent - other.extent).abs() <= 1e-12 * self.extent
    }
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            n: DEFAULT_N,
            extent: DEFAULT_EXTENT,
        }
    }
}

/// Complex samples of a function on a [`Grid`].
#[derive(Clone, Debug, PartialEq)]
pub struct GridSignal {
    grid: Grid,
    values: Vec<Complex64>,
}

impl GridSignal {
    pub fn new(grid: Grid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::invalid(format!(
                "signal has {} samples but the grid has {}",
                values.len(),
                grid.n()
            )));
        }
        if values.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::invalid("signal contains non-finite samples"));
        }
        Ok(GridSignal { grid, values })
    }

    pub fn zeros(grid: Grid) -> Self {
        GridSignal {
            grid,
            values: vec![Complex64::new(0.0, 0.0); grid.n()],
        }
    }

    /// Samples `f(t_k)` of a closure.
    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> Complex64) -> Self {
        GridSignal {
            grid,
            values: grid.points().map(f).collect(),
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// Discrete L2 inner product `sum conj(self_k) other_k * spacing`.
    pub fn inner(&self, other: &GridSignal) -> Result<Complex64> {
        self.check_same_grid(other)?;
        let sum: Complex64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.conj() * b)
            .sum();
        Ok(sum * self.grid.spacing())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.grid.spacing()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, c: Complex64) -> GridSignal {
        self.map(|v| v * c)
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> GridSignal {
        GridSignal {
            grid: self.grid,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Pointwise product with another signal on the same grid.
    pub fn mul(&self, other: &GridSignal) -> Result<GridSignal> {
        self.check_same_grid(other)?;
        Ok(GridSignal {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    /// `self - c * other`.
    pub fn sub_scaled(&self, c: Complex64, other: &GridSignal) -> Result<GridSignal> {
        self.check_same_grid(other)?;
        Ok(GridSignal {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - c * b)
                .collect(),
        })
    }

    /// Pointwise complex conjugate.
    pub fn conj(&self) -> GridSignal {
        self.map(|v| v.conj())
    }

    /// The conjugate reflection `f*(t) = conj(f(-t))`.
    pub fn conj_reflect(&self) -> GridSignal {
        GridSignal {
            grid: self.grid,
            values: (0..self.grid.n())
                .map(|k| self.values[self.grid.mirror_index(k)].conj())
                .collect(),
        }
    }

    pub(crate) fn check_same_grid(&self, other: &GridSignal) -> Result<()> {
        if self.grid.compatible(&other.grid) {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "grid mismatch: (n={}, T={}) vs (n={}, T={})",
                self.grid.n(),
                self.grid.extent(),
                other.grid.n(),
                other.grid.extent()
            )))
        }
    }
}

/// Bargmann's complex Gaussians `psi_pm(t) = exp(-(1 ± i) pi t^2)`.
///
/// They share the modulus of both the signal and its Fourier transform while
/// being conjugates of each other.
pub fn bargmann_pair(grid: Grid) -> (GridSignal, GridSignal) {
    let plus = GridSignal::from_fn(grid, |t| (Complex64::new(-PI * t * t, -PI * t * t)).exp());
    let minus = GridSignal::from_fn(grid, |t| (Complex64::new(-PI * t * t, PI * t * t)).exp());
    (plus, minus)
}
