//! JSON and CSV file formats.
//!
//! * signal: `{ "n", "extent", "values": [[re, im], ...] }`
//! * record: `{ "mask", "n", "extent", "magnitudes": [...] }`, CSV `xi,magnitude`
//! * polynomial: `{ "N", "coeffs": [[re, im], ...] }`; candidate lists are arrays of these
//! * samples: CSV `k,x_k,value`

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::grid_signal::{Grid, GridSignal, MaskKind};
use crate::measurement::MeasurementRecord;
use crate::trigpoly::TrigPoly;

#[derive(Serialize, Deserialize)]
struct SignalFile {
    n: usize,
    extent: f64,
    values: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct RecordFile {
    mask: MaskKind,
    n: usize,
    extent: f64,
    magnitudes: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct PolyFile {
    #[serde(rename = "N")]
    n: usize,
    coeffs: Vec<Complex64>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })
}

pub fn signal_to_json(sig: &GridSignal) -> Result<String> {
    Ok(serde_json::to_string(&SignalFile {
        n: sig.grid().n(),
        extent: sig.grid().extent(),
        values: sig.values().to_vec(),
    })?)
}

pub fn signal_from_json(text: &str) -> Result<GridSignal> {
    let f: SignalFile = serde_json::from_str(text)?;
    if f.values.len() != f.n {
        return Err(Error::invalid(format!(
            "signal declares n = {} but holds {} values",
            f.n,
            f.values.len()
        )));
    }
    GridSignal::new(Grid::new(f.n, f.extent)?, f.values)
}

pub fn read_signal(path: &Path) -> Result<GridSignal> {
    signal_from_json(&read(path)?)
}

pub fn write_signal(path: &Path, sig: &GridSignal) -> Result<()> {
    write(path, &signal_to_json(sig)?)
}

pub fn record_to_json(rec: &MeasurementRecord) -> Result<String> {
    Ok(serde_json::to_string(&RecordFile {
        mask: rec.mask.clone(),
        n: rec.grid.n(),
        extent: rec.grid.extent(),
        magnitudes: rec.magnitudes.clone(),
    })?)
}

pub fn record_from_json(text: &str) -> Result<MeasurementRecord> {
    let f: RecordFile = serde_json::from_str(text)?;
    MeasurementRecord::new(f.mask, Grid::new(f.n, f.extent)?, f.magnitudes)
}

pub fn read_record(path: &Path) -> Result<MeasurementRecord> {
    record_from_json(&read(path)?)
}

pub fn write_record(path: &Path, rec: &MeasurementRecord) -> Result<()> {
    write(path, &record_to_json(rec)?)
}

pub fn record_csv(rec: &MeasurementRecord) -> String {
    let mut out = String::from("xi,magnitude\n");
    for (xi, m) in rec.frequency_grid().points().zip(&rec.magnitudes) {
        let _ = writeln!(out, "{xi},{m}");
    }
    out
}

pub fn write_record_csv(path: &Path, rec: &MeasurementRecord) -> Result<()> {
    write(path, &record_csv(rec))
}

fn poly_file(p: &TrigPoly) -> PolyFile {
    PolyFile {
        n: p.len(),
        coeffs: p.coeffs().to_vec(),
    }
}

fn poly_from_file(f: PolyFile) -> Result<TrigPoly> {
    if f.coeffs.len() != f.n {
        return Err(Error::invalid(format!(
            "polynomial declares N = {} but holds {} coefficients",
            f.n,
            f.coeffs.len()
        )));
    }
    TrigPoly::new(f.coeffs)
}

pub fn poly_to_json(p: &TrigPoly) -> Result<String> {
    Ok(serde_json::to_string(&poly_file(p))?)
}

pub fn poly_from_json(text: &str) -> Result<TrigPoly> {
    poly_from_file(serde_json::from_str(text)?)
}

pub fn read_poly(path: &Path) -> Result<TrigPoly> {
    poly_from_json(&read(path)?)
}

pub fn write_poly(path: &Path, p: &TrigPoly) -> Result<()> {
    write(path, &poly_to_json(p)?)
}

pub fn polys_to_json(list: &[TrigPoly]) -> Result<String> {
    let files: Vec<PolyFile> = list.iter().map(poly_file).collect();
    Ok(serde_json::to_string(&files)?)
}

pub fn polys_from_json(text: &str) -> Result<Vec<TrigPoly>> {
    let files: Vec<PolyFile> = serde_json::from_str(text)?;
    files.into_iter().map(poly_from_file).collect()
}

/// Samples taken at `x_k = k / M`, `M = values.len()`.
pub fn samples_csv(values: &[f64]) -> String {
    let m = values.len();
    let mut out = String::from("k,x_k,value\n");
    for (k, v) in values.iter().enumerate() {
        let _ = writeln!(out, "{k},{},{v}", k as f64 / m as f64);
    }
    out
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    write(path, text)
}
