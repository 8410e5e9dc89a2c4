//! Quadrature Fourier transform `F f(xi) = int f(t) exp(-2 pi i t xi) dt`.
//!
//! On a grid of `n` samples with extent `T` the Riemann sum
//! `h * sum_k f_k exp(-2 pi i t_k xi_j)` with `t_k xi_j = (k - n/2)(j - n/2)/n`
//! is a length-`n` DFT up to alternating signs, so it runs on an FFT. The
//! discrete map is exactly unitary between the grid and its dual.

use num_complex::Complex64;
use rustfft::FftPlanner;
use std::f64::consts::PI;

use super::{Grid, GridSignal};
use crate::error::Result;

fn alternate(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn centered_dft(values: &[Complex64], weight: f64, inverse: bool) -> Vec<Complex64> {
    let n = values.len();
    let mut buf: Vec<Complex64> = values
        .iter()
        .enumerate()
        .map(|(k, v)| v * alternate(k))
        .collect();
    let mut planner = FftPlanner::<f64>::new();
    let fft = if inverse {
        planner.plan_fft_inverse(n)
    } else {
        planner.plan_fft_forward(n)
    };
    fft.process(&mut buf);
    let global = weight * alternate(n / 2);
    buf.iter_mut()
        .enumerate()
        .for_each(|(j, v)| *v *= global * alternate(j));
    buf
}

/// Forward transform; the result lives on `sig.grid().dual()`.
pub fn fourier(sig: &GridSignal) -> GridSignal {
    let grid = *sig.grid();
    let values = centered_dft(sig.values(), grid.spacing(), false);
    GridSignal {
        grid: grid.dual(),
        values,
    }
}

/// Adjoint (and inverse) of [`fourier`]: maps samples on a dual grid back
/// to the grid it is dual to.
pub fn inverse_fourier(sig: &GridSignal) -> GridSignal {
    let grid = *sig.grid();
    let values = centered_dft(sig.values(), grid.spacing(), true);
    GridSignal {
        grid: grid.dual(),
        values,
    }
}

/// Band-limited interpolation of real samples on `grid` onto a grid `factor`
/// times finer over the same range. Fine index `factor * i` coincides with
/// coarse index `i`.
///
/// Exact when the inverse transform of the samples is supported well inside
/// the dual grid, e.g. for `|F|^2` with `F` the transform of a signal confined
/// to the middle half of its grid.
pub fn bandlimited_refine(values: &[f64], grid: &Grid, factor: usize) -> Result<Vec<f64>> {
    let coarse = GridSignal::new(*grid, values.iter().map(|&v| Complex64::new(v, 0.0)).collect())?;
    if factor <= 1 {
        return Ok(values.to_vec());
    }
    let time = inverse_fourier(&coarse);
    let n = grid.n();
    let fine_n = n * factor;
    let fine_grid = Grid::new(fine_n, time.grid().extent() * factor as f64)?;
    let mut padded = vec![Complex64::new(0.0, 0.0); fine_n];
    let offset = (fine_n - n) / 2;
    padded[offset..offset + n].copy_from_slice(time.values());
    let fine = fourier(&GridSignal {
        grid: fine_grid,
        values: padded,
    });
    Ok(fine.values.iter().map(|v| v.re).collect())
}

/// Derivative of band-limited real samples on `grid`, computed as the
/// transform of `-2 pi i t` times the inverse transform.
pub fn bandlimited_derivative(values: &[f64], grid: &Grid) -> Result<Vec<f64>> {
    let coarse = GridSignal::new(*grid, values.iter().map(|&v| Complex64::new(v, 0.0)).collect())?;
    let time = inverse_fourier(&coarse);
    let tgrid = *time.grid();
    let weighted: Vec<Complex64> = time
        .values()
        .iter()
        .zip(tgrid.points())
        .map(|(a, t)| a * Complex64::new(0.0, -2.0 * PI * t))
        .collect();
    let d = fourier(&GridSignal {
        grid: tgrid,
        values: weighted,
    });
    Ok(d.values.iter().map(|v| v.re).collect())
}
