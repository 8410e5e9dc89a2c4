//! Coded diffraction patterns `|F[mask * signal]|`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid_signal::{eval_mask, fourier, inverse_fourier, Grid, GridSignal, MaskKind, SineFrequency};

/// Phaseless measurement of one masked signal.
///
/// `grid` is the grid the mask was applied on; `magnitudes` are samples on
/// its dual (frequency) grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasurementRecord {
    pub mask: MaskKind,
    pub grid: Grid,
    pub magnitudes: Vec<f64>,
}

impl MeasurementRecord {
    pub fn new(mask: MaskKind, grid: Grid, magnitudes: Vec<f64>) -> Result<Self> {
        if magnitudes.len() != grid.n() {
            return Err(Error::invalid(format!(
                "record has {} magnitudes but the grid has {}",
                magnitudes.len(),
                grid.n()
            )));
        }
        if magnitudes.iter().any(|m| !(m.is_finite() && *m >= 0.0)) {
            return Err(Error::invalid("magnitudes must be finite and nonnegative"));
        }
        if let MaskKind::Custom { values } = &mask {
            if values.len() != grid.n() {
                return Err(Error::invalid("custom mask length does not match the grid"));
            }
        }
        Ok(MeasurementRecord {
            mask,
            grid,
            magnitudes,
        })
    }

    /// Grid on which the magnitudes are sampled.
    pub fn frequency_grid(&self) -> Grid {
        self.grid.dual()
    }

    pub fn max(&self) -> f64 {
        self.magnitudes.iter().copied().fold(0.0, f64::max)
    }

    /// Largest pointwise difference to another record.
    pub fn sup_distance(&self, other: &MeasurementRecord) -> f64 {
        self.magnitudes
            .iter()
            .zip(&other.magnitudes)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// `|F[mask * phi]|` sampled on the dual grid of `phi`.
pub fn coded_diffraction(phi: &GridSignal, mask: &MaskKind) -> Result<MeasurementRecord> {
    let m = eval_mask(mask, phi.grid())?;
    let spectrum = fourier(&phi.mul(&m)?);
    Ok(MeasurementRecord {
        mask: mask.clone(),
        grid: *phi.grid(),
        magnitudes: spectrum.values().iter().map(|v| v.norm()).collect(),
    })
}

/// Records for the Gaussian, the `2 pi t` Gaussian and the `(1 - 2 pi t)` Gaussian, in that order.
pub fn three_gaussian_measurements(
    phi: &GridSignal,
) -> Result<(MeasurementRecord, MeasurementRecord, MeasurementRecord)> {
    Ok((
        coded_diffraction(phi, &MaskKind::Gauss)?,
        coded_diffraction(phi, &MaskKind::GaussDeriv)?,
        coded_diffraction(phi, &MaskKind::GaussAffine)?,
    ))
}

/// Magnitudes of `F m F* phi` for a real mask `m`, which is self-adjoint.
pub fn selfadjoint_measurement(phi: &GridSignal, mask: &MaskKind) -> Result<MeasurementRecord> {
    if !mask.is_real() {
        return Err(Error::invalid("self-adjoint measurement requires a real-valued mask"));
    }
    coded_diffraction(&inverse_fourier(phi), mask)
}

/// Records for the Gaussian and the sine masks with frequencies `a` and `b`.
pub fn sine_measurements(
    phi: &GridSignal,
    a: SineFrequency,
    b: SineFrequency,
) -> Result<(MeasurementRecord, MeasurementRecord, MeasurementRecord)> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::invalid(format!(
            "sine frequencies must be positive, got {a} and {b}"
        )));
    }
    Ok((
        coded_diffraction(phi, &MaskKind::Gauss)?,
        coded_diffraction(phi, &MaskKind::sine(a))?,
        coded_diffraction(phi, &MaskKind::sine(b))?,
    ))
}
