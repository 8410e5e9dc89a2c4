//! Inversion of the three Gaussian coded diffraction patterns.
//!
//! With `F = F[g phi]` for the Gaussian `g`, the three records give `|F|`,
//! `|F'|` and `|F - i F'|` (since `F' = -i F[2 pi t g phi]`). Expanding the
//! last modulus yields
//!
//! ```text
//! F' conj(F) = (|F|^2)' / 2 + i (|F - i F'|^2 - |F|^2 - |F'|^2) / 2
//! ```
//!
//! and `Im(F'/F) = Im(F' conj F) / |F|^2` is the derivative of the phase of
//! `F`. Integrating it on an interval where `|F|` stays away from zero gives
//! `F` up to one unimodular constant; dividing the inverse transform by `g`
//! gives `phi`.

mod analytic;

use num_complex::Complex64;

use crate::equivalence::{unit_phase, EquivalenceVerdict, VerdictKind};
use crate::error::{Error, Result};
use crate::grid_signal::{
    bandlimited_derivative, bandlimited_refine, inverse_fourier, Grid, GridSignal, MaskKind,
    SineFrequency,
};
use crate::measurement::MeasurementRecord;

pub use analytic::AnalyticSpectrum;

/// Default relative threshold for `classify_pair`.
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-6;

/// How `(|F|^2)'` is computed from the sampled `|F|^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Differentiation {
    /// Exact for band-limited samples (signal confined to the middle half of its grid).
    BandLimited,
    /// Second-order centered differences, one-sided at the ends.
    CenteredDifference,
}

/// Cumulative quadrature rule for the phase derivative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhaseQuadrature {
    Trapezoid,
    /// Six-point Lagrange rule per step, falling back to lower order near the ends.
    Lagrange6,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReconstructOptions {
    /// Samples with `|F| <= zero_tol * max |F|` are outside the integration interval.
    pub zero_tol: f64,
    /// Band-limited refinement factor of the frequency grid before integration.
    pub refine: usize,
    pub quadrature: PhaseQuadrature,
    pub differentiation: Differentiation,
    /// Time samples where the Gaussian falls below this value are set to zero.
    pub gamma_floor: f64,
}

impl Default for ReconstructOptions {
    fn default() -> Self {
        ReconstructOptions {
            zero_tol: 1e-8,
            refine: 32,
            quadrature: PhaseQuadrature::Lagrange6,
            differentiation: Differentiation::BandLimited,
            gamma_floor: 1e-6,
        }
    }
}

/// Recovered samples of `F` and `F'` on the frequency grid.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub grid: Grid,
    pub f: Vec<Complex64>,
    pub fprime: Vec<Complex64>,
    /// Inclusive index range where the phase was integrated.
    pub interval: (usize, usize),
}

impl Spectrum {
    /// True outside the integration interval, where the phase is held constant.
    pub fn is_extrapolated(&self, j: usize) -> bool {
        j < self.interval.0 || j > self.interval.1
    }
}

fn check_gaussian_triple(
    r1: &MeasurementRecord,
    r2: &MeasurementRecord,
    r3: &MeasurementRecord,
) -> Result<()> {
    let expected = [MaskKind::Gauss, MaskKind::GaussDeriv, MaskKind::GaussAffine];
    for (r, m) in [r1, r2, r3].into_iter().zip(&expected) {
        if &r.mask != m {
            return Err(Error::invalid(format!(
                "expected a '{}' record, got '{}'",
                m.tag(),
                r.mask.tag()
            )));
        }
        if !r.grid.compatible(&r1.grid) || r.magnitudes.len() != r1.grid.n() {
            return Err(Error::invalid("records live on different grids"));
        }
    }
    Ok(())
}

fn centered_difference(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    if n < 3 {
        let d = if n == 2 { (values[1] - values[0]) / h } else { 0.0 };
        return vec![d; n];
    }
    let mut out = Vec::with_capacity(n);
    out.push((-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * h));
    for j in 1..n - 1 {
        out.push((values[j + 1] - values[j - 1]) / (2.0 * h));
    }
    out.push((3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * h));
    out
}

/// Samples of `F' conj(F)` from the three Gaussian records, using band-limited
/// differentiation for the real part.
pub fn recover_fprime_fbar(
    r1: &MeasurementRecord,
    r2: &MeasurementRecord,
    r3: &MeasurementRecord,
) -> Result<Vec<Complex64>> {
    recover_fprime_fbar_with(r1, r2, r3, Differentiation::BandLimited)
}

pub fn recover_fprime_fbar_with(
    r1: &MeasurementRecord,
    r2: &MeasurementRecord,
    r3: &MeasurementRecord,
    differentiation: Differentiation,
) -> Result<Vec<Complex64>> {
    check_gaussian_triple(r1, r2, r3)?;
    let freq = r1.frequency_grid();
    let sq: Vec<f64> = r1.magnitudes.iter().map(|m| m * m).collect();
    let dsq = match differentiation {
        Differentiation::BandLimited => bandlimited_derivative(&sq, &freq)?,
        Differentiation::CenteredDifference => centered_difference(&sq, freq.spacing()),
    };
    Ok((0..sq.len())
        .map(|j| {
            let a = r1.magnitudes[j];
            let b = r2.magnitudes[j];
            let c = r3.magnitudes[j];
            Complex64::new(0.5 * dsq[j], 0.5 * (c * c - a * a - b * b))
        })
        .collect())
}

/// Longest run of indices where `mask` holds; the first one wins ties.
fn longest_run(mask: impl Iterator<Item = bool>) -> Option<(usize, usize)> {
    fn consider(s: usize, e: usize, best: &mut Option<(usize, usize)>) {
        if best.is_none_or(|(bs, be)| e - s > be - bs) {
            *best = Some((s, e));
        }
    }
    let mut best: Option<(usize, usize)> = None;
    let mut start = None;
    let mut last = 0;
    for (j, on) in mask.enumerate() {
        last = j;
        match (on, start) {
            (true, None) => start = Some(j),
            (false, Some(s)) => {
                consider(s, j - 1, &mut best);
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        consider(s, last, &mut best);
    }
    best
}

fn cumulative_integral(d: &[f64], h: f64, rule: PhaseQuadrature) -> Vec<f64> {
    let m = d.len();
    let mut out = Vec::with_capacity(m);
    let mut acc = 0.0;
    out.push(acc);
    for i in 0..m.saturating_sub(1) {
        let inc = match rule {
            PhaseQuadrature::Lagrange6 if i >= 2 && i + 3 < m => {
                h / 1440.0
                    * (11.0 * d[i - 2] - 93.0 * d[i - 1] + 802.0 * d[i] + 802.0 * d[i + 1]
                        - 93.0 * d[i + 2]
                        + 11.0 * d[i + 3])
            }
            PhaseQuadrature::Lagrange6 if i >= 1 && i + 2 < m => {
                h / 24.0 * (-d[i - 1] + 13.0 * d[i] + 13.0 * d[i + 1] - d[i + 2])
            }
            _ => 0.5 * h * (d[i] + d[i + 1]),
        };
        acc += inc;
        out.push(acc);
    }
    out
}

/// Recovers `F` from `F' conj(F)` and `|F|` with default options except `zero_tol`.
pub fn integrate_phase(
    fpf: &[Complex64],
    rec1: &MeasurementRecord,
    zero_tol: f64,
) -> Result<Spectrum> {
    let opts = ReconstructOptions {
        zero_tol,
        ..ReconstructOptions::default()
    };
    integrate_phase_with(fpf, rec1, &opts)
}

/// Integrates the phase derivative `Im(F' conj F) / |F|^2` over the longest
/// run where `|F|` exceeds `zero_tol * max |F|`, anchored at zero phase on the
/// left end. Outside the run the phase is held at its boundary value.
pub fn integrate_phase_with(
    fpf: &[Complex64],
    rec1: &MeasurementRecord,
    opts: &ReconstructOptions,
) -> Result<Spectrum> {
    let n = rec1.grid.n();
    if fpf.len() != n {
        return Err(Error::invalid(format!(
            "phase data has {} samples but the record has {}",
            fpf.len(),
            n
        )));
    }
    if !(opts.zero_tol > 0.0) {
        return Err(Error::invalid("zero_tol must be positive"));
    }
    let mags = &rec1.magnitudes;
    let max = rec1.max();
    let threshold = opts.zero_tol * max;
    let (a, b) = if max > 0.0 {
        longest_run(mags.iter().map(|&m| m > threshold))
    } else {
        None
    }
    .ok_or_else(|| Error::DegenerateSignal("|F| vanishes on the whole grid".into()))?;

    let freq = rec1.frequency_grid();
    let factor = opts.refine.max(1);
    let sq: Vec<f64> = mags.iter().map(|m| m * m).collect();
    let im: Vec<f64> = fpf.iter().map(|z| z.im).collect();
    let (sq_fine, im_fine) = if factor > 1 {
        (
            bandlimited_refine(&sq, &freq, factor)?,
            bandlimited_refine(&im, &freq, factor)?,
        )
    } else {
        (sq, im)
    };
    let dtheta: Vec<f64> = (factor * a..=factor * b)
        .map(|i| {
            if sq_fine[i] > 0.0 {
                im_fine[i] / sq_fine[i]
            } else {
                0.0
            }
        })
        .collect();
    let theta_fine = cumulative_integral(&dtheta, freq.spacing() / factor as f64, opts.quadrature);

    let theta_end = theta_fine[factor * (b - a)];
    let f: Vec<Complex64> = (0..n)
        .map(|j| {
            let theta = if j < a {
                0.0
            } else if j > b {
                theta_end
            } else {
                theta_fine[factor * (j - a)]
            };
            Complex64::from_polar(mags[j], theta)
        })
        .collect();
    let fprime = f
        .iter()
        .zip(fpf)
        .map(|(fj, p)| {
            let s = fj.norm_sqr();
            if s > 0.0 {
                p * fj / s
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    Ok(Spectrum {
        grid: freq,
        f,
        fprime,
        interval: (a, b),
    })
}

/// Reconstructs the signal (up to a unimodular constant) from the Gaussian,
/// `2 pi t` Gaussian and `(1 - 2 pi t)` Gaussian records.
pub fn reconstruct_three(
    r1: &MeasurementRecord,
    r2: &MeasurementRecord,
    r3: &MeasurementRecord,
) -> Result<GridSignal> {
    reconstruct_three_with(r1, r2, r3, &ReconstructOptions::default())
}

pub fn reconstruct_three_with(
    r1: &MeasurementRecord,
    r2: &MeasurementRecord,
    r3: &MeasurementRecord,
    opts: &ReconstructOptions,
) -> Result<GridSignal> {
    let fpf = recover_fprime_fbar_with(r1, r2, r3, opts.differentiation)?;
    let spectrum = integrate_phase_with(&fpf, r1, opts)?;
    let masked = inverse_fourier(&GridSignal::new(spectrum.grid, spectrum.f)?);
    let grid = r1.grid;
    let values = masked
        .values()
        .iter()
        .zip(grid.points())
        .map(|(v, t)| {
            let g = (-std::f64::consts::PI * t * t).exp();
            if g >= opts.gamma_floor {
                v / g
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    GridSignal::new(grid, values)
}

/// Classifies `psi` against `phi` modulo a global phase and the conjugate
/// reflection, with the default relative tolerance.
pub fn classify_pair(phi: &GridSignal, psi: &GridSignal) -> Result<EquivalenceVerdict> {
    classify_pair_with_tol(phi, psi, DEFAULT_CLASSIFY_TOL)
}

pub fn classify_pair_with_tol(
    phi: &GridSignal,
    psi: &GridSignal,
    tol: f64,
) -> Result<EquivalenceVerdict> {
    phi.check_same_grid(psi)?;
    let norm_phi = phi.norm();
    let norm_psi = psi.norm();
    if norm_phi == 0.0 {
        return Ok(if norm_psi == 0.0 {
            EquivalenceVerdict::global_phase(Complex64::new(1.0, 0.0), 0.0)
        } else {
            EquivalenceVerdict::distinct(1.0)
        });
    }

    let c1 = unit_phase(phi.inner(psi)?);
    let r1 = psi.sub_scaled(c1, phi)?.norm() / norm_phi;
    if r1 <= tol {
        return Ok(EquivalenceVerdict::global_phase(c1, r1));
    }

    let reflected = phi.conj_reflect();
    let c2 = unit_phase(reflected.inner(psi)?);
    let r2 = psi.sub_scaled(c2, &reflected)?.norm() / norm_phi;
    if r2 <= tol {
        return Ok(EquivalenceVerdict {
            kind: VerdictKind::ConjugateReflection,
            constant: Some(c2),
            residual: r2,
        });
    }
    Ok(EquivalenceVerdict::distinct(r1.min(r2)))
}

/// Builds `psi(t) = exp(-2 pi beta t - pi beta^2) phi(t + beta)` with
/// `beta = q / a`, which shares all three sine-family records with `phi` for
/// the frequencies `a` and `b = (p/q) a`.
///
/// The shift is realized exactly on the grid, so `beta` must be an integer
/// multiple of the grid spacing, and `phi` must vanish on the samples that the
/// shift pushes off the grid.
pub fn sine_rational_counterexample(
    phi: &GridSignal,
    a: SineFrequency,
    p: i64,
    q: i64,
) -> Result<GridSignal> {
    if q == 0 {
        return Err(Error::invalid("q must be nonzero"));
    }
    let a_val = a.value();
    if a_val == 0.0 {
        return Err(Error::invalid("sine frequency a must be nonzero"));
    }
    // b = (p/q) a must be representable; this also rejects overflow.
    a.times_ratio(p, q)?;

    let grid = *phi.grid();
    let beta = q as f64 / a_val;
    let steps = beta / grid.spacing();
    let shift = steps.round();
    if (steps - shift).abs() > 1e-9 * steps.abs().max(1.0) {
        return Err(Error::invalid(format!(
            "shift beta = {beta} is not a multiple of the grid spacing {}",
            grid.spacing()
        )));
    }
    let shift = shift as i64;
    let n = grid.n() as i64;
    let values = phi.values();
    let limit = 1e-12 * phi.max_abs();
    let dropped = (0..n).any(|j| {
        let k = j - shift;
        !(0..n).contains(&k) && values[j as usize].norm() > limit
    });
    if dropped {
        return Err(Error::invalid(
            "signal support is too close to the grid edge for the requested shift",
        ));
    }

    let out: Vec<Complex64> = (0..n)
        .map(|k| {
            let src = k + shift;
            if !(0..n).contains(&src) {
                return Complex64::new(0.0, 0.0);
            }
            let v = values[src as usize];
            if v.norm() == 0.0 {
                return v;
            }
            let t = grid.point(k as usize);
            let weight = (-2.0 * std::f64::consts::PI * beta * t
                - std::f64::consts::PI * beta * beta)
                .exp();
            v * weight
        })
        .collect();
    GridSignal::new(grid, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measurement::three_gaussian_measurements;
    use std::f64::consts::PI;

    fn gauss(grid: Grid) -> GridSignal {
        GridSignal::from_fn(grid, |t| Complex64::new((-PI * t * t).exp(), 0.0))
    }

    #[test]
    fn longest_run_picks_first_of_equal() {
        let m = [false, true, true, false, true, true, false];
        assert_eq!(longest_run(m.into_iter()), Some((1, 2)));
        let m = [true, false, true, true, true];
        assert_eq!(longest_run(m.into_iter()), Some((2, 4)));
        assert_eq!(longest_run([false, false].into_iter()), None);
    }

    #[test]
    fn quadrature_is_exact_on_quintics() {
        let h = 0.1;
        let d: Vec<f64> = (0..20).map(|i| (i as f64 * h).powi(5)).collect();
        let c = cumulative_integral(&d, h, PhaseQuadrature::Lagrange6);
        // interior steps use the six-point rule, exact for degree five
        for i in 3..17 {
            let x0 = (i as f64 - 1.0) * h;
            let x1 = i as f64 * h;
            let exact = (x1.powi(6) - x0.powi(6)) / 6.0;
            assert!(((c[i] - c[i - 1]) - exact).abs() < 1e-14, "step {i}");
        }
    }

    #[test]
    fn centered_difference_of_quadratic_is_exact() {
        let v: Vec<f64> = (0..6).map(|i| (i as f64).powi(2)).collect();
        let d = centered_difference(&v, 1.0);
        for (i, di) in d.iter().enumerate() {
            assert!((di - 2.0 * i as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_records_give_zero_phase_data() {
        let grid = Grid::new(128, 8.0).unwrap();
        let (a, b, c) = three_gaussian_measurements(&GridSignal::zeros(grid)).unwrap();
        for diff in [Differentiation::BandLimited, Differentiation::CenteredDifference] {
            let fpf = recover_fprime_fbar_with(&a, &b, &c, diff).unwrap();
            assert!(fpf.iter().all(|z| z.norm() == 0.0));
        }
        assert!(matches!(
            integrate_phase(&recover_fprime_fbar(&a, &b, &c).unwrap(), &a, 1e-6),
            Err(Error::DegenerateSignal(_))
        ));
        assert!(matches!(
            reconstruct_three(&a, &b, &c),
            Err(Error::DegenerateSignal(_))
        ));
    }

    #[test]
    fn mask_order_enforced() {
        let grid = Grid::new(128, 8.0).unwrap();
        let (a, b, c) = three_gaussian_measurements(&gauss(grid)).unwrap();
        assert!(matches!(
            recover_fprime_fbar(&a, &c, &b),
            Err(Error::InvalidArgument(_))
        ));
        let other = Grid::new(256, 8.0).unwrap();
        let (_, b2, _) = three_gaussian_measurements(&gauss(other)).unwrap();
        assert!(matches!(
            reconstruct_three(&a, &b2, &c),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn real_part_is_centered_difference_bitwise() {
        let grid = Grid::new(256, 8.0).unwrap();
        let phi = GridSignal::from_fn(grid, |t| {
            Complex64::new(1.0 + t, 0.5 - t * t) * (-PI * t * t).exp()
        });
        let (a, b, c) = three_gaussian_measurements(&phi).unwrap();
        let fpf = recover_fprime_fbar_with(&a, &b, &c, Differentiation::CenteredDifference).unwrap();
        let sq: Vec<f64> = a.magnitudes.iter().map(|m| m * m).collect();
        let d = centered_difference(&sq, a.frequency_grid().spacing());
        for (z, dj) in fpf.iter().zip(&d) {
            assert_eq!(z.re.to_bits(), (0.5 * dj).to_bits());
        }
        let again = recover_fprime_fbar_with(&a, &b, &c, Differentiation::CenteredDifference).unwrap();
        assert_eq!(fpf, again);
    }

    #[test]
    fn classify_trivial_cases() {
        let grid = Grid::new(128, 8.0).unwrap();
        let g = gauss(grid);
        let v = classify_pair(&g, &g.scale(Complex64::new(0.0, 1.0))).unwrap();
        assert_eq!(v.kind, VerdictKind::GlobalPhase);
        assert!((v.constant.unwrap() - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        let z = GridSignal::zeros(grid);
        let v = classify_pair(&z, &z).unwrap();
        assert_eq!(v.kind, VerdictKind::GlobalPhase);
        assert_eq!(v.constant, Some(Complex64::new(1.0, 0.0)));
        let v = classify_pair(&z, &g).unwrap();
        assert_eq!(v.kind, VerdictKind::Distinct);
        assert_eq!(v.residual, 1.0);
    }

    #[test]
    fn counterexample_argument_checks() {
        let grid = Grid::new(2048, 16.0).unwrap();
        let phi = gauss(grid);
        let one = SineFrequency::rational(1, 1).unwrap();
        assert!(sine_rational_counterexample(&phi, one, 1, 0).is_err());
        // beta = 1/3 is not a multiple of 1/128
        let three = SineFrequency::rational(3, 1).unwrap();
        assert!(sine_rational_counterexample(&phi, three, 1, 1).is_err());
        let z = GridSignal::zeros(grid);
        let psi = sine_rational_counterexample(&z, one, 1, 1).unwrap();
        assert!(psi.values().iter().all(|v| v.norm() == 0.0));
    }
}
