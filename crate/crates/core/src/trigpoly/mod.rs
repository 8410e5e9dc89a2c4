//! Analytic trigonometric polynomials `P(x) = sum_{j<N} psi_j exp(2 pi i j x)`
//! and their phaseless samples.
//!
//! `|P(x)|^2 = exp(-2 pi i (N-1) x) * sum_{l<2N-1} c_l exp(2 pi i l x)`, so the
//! squared modulus is pinned down by `2N - 1` samples. Together with `2N - 1`
//! samples of `|P'|` (or of the forward difference of `P`) this determines
//! `psi` up to a global phase; `2N - 2` samples do not, as the explicit pairs
//! from [`counterexample_continuous`] and [`counterexample_discrete`] show.

mod roots;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::str::FromStr;

use crate::equivalence::{unit_phase, EquivalenceVerdict};
use crate::error::{Error, Result};

pub use roots::{
    factorize, root_pairing_check, roots_on_plane, Factorization, PairKind, PairingReport,
    RootMultiplicity, RootPair,
};

/// Relative threshold of [`classify_poly_pair`].
pub const POLY_CLASSIFY_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct TrigPoly {
    coeffs: Vec<Complex64>,
}

impl TrigPoly {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::invalid("a trigonometric polynomial needs at least one coefficient"));
        }
        if coeffs.iter().any(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::invalid("coefficients must be finite"));
        }
        Ok(TrigPoly { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero(n: usize) -> Self {
        TrigPoly {
            coeffs: vec![Complex64::new(0.0, 0.0); n.max(1)],
        }
    }

    /// Number of coefficients `N`.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.norm() == 0.0)
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Zero-padded copy with `n >= len()` coefficients.
    pub fn padded(&self, n: usize) -> TrigPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n.max(self.len()), Complex64::new(0.0, 0.0));
        TrigPoly { coeffs }
    }

    /// `sum psi_j z^j` by Horner's rule.
    pub fn eval_algebraic(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        self.eval_algebraic(Complex64::from_polar(1.0, 2.0 * PI * x))
    }

    /// `P(k/M)`, reducing `k` modulo `M` so the root of unity is exact in its argument.
    pub fn eval_at_fraction(&self, k: i64, m: usize) -> Complex64 {
        let k = k.rem_euclid(m as i64) as f64;
        self.eval_algebraic(Complex64::from_polar(1.0, 2.0 * PI * k / m as f64))
    }

    /// `P'(x)`, whose coefficients are `2 pi i j psi_j`.
    pub fn derivative(&self) -> TrigPoly {
        TrigPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| c * Complex64::new(0.0, 2.0 * PI * j as f64))
                .collect(),
        }
    }

    /// Coefficients `c_l = sum_j psi_j conj(psi_{j - l + N - 1})`.
    pub fn autocorrelation(&self) -> AutocorrCoeffs {
        let n = self.len() as isize;
        let c = (0..2 * n - 1)
            .map(|l| {
                let shift = l - (n - 1);
                (0..n)
                    .filter_map(|j| {
                        let k = j - shift;
                        (0..n).contains(&k).then(|| {
                            self.coeffs[j as usize] * self.coeffs[k as usize].conj()
                        })
                    })
                    .sum()
            })
            .collect();
        AutocorrCoeffs { c }
    }
}

/// The `2N - 1` coefficients of `|P|^2` as a polynomial on the unit circle.
#[derive(Clone, Debug, PartialEq)]
pub struct AutocorrCoeffs {
    pub c: Vec<Complex64>,
}

impl AutocorrCoeffs {
    /// The `N` of the polynomial these coefficients describe.
    pub fn n(&self) -> usize {
        self.c.len().div_ceil(2)
    }

    pub fn eval_sq_modulus(&self, x: f64) -> f64 {
        let z = Complex64::from_polar(1.0, 2.0 * PI * x);
        let s = self
            .c
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
        (s * Complex64::from_polar(1.0, -2.0 * PI * (self.n() as f64 - 1.0) * x)).re
    }

    pub fn max_abs_diff(&self, other: &AutocorrCoeffs) -> f64 {
        if self.c.len() != other.c.len() {
            return f64::INFINITY;
        }
        self.c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Recovers the autocorrelation coefficients from `2N - 1` samples of `|P|`
/// taken at `x_k = k / (2N - 1)`.
pub fn interpolate_sq_modulus(samples: &[f64]) -> Result<AutocorrCoeffs> {
    let count = samples.len();
    if count == 0 || count % 2 == 0 {
        return Err(Error::invalid(format!(
            "expected 2N - 1 samples (an odd count), got {count}"
        )));
    }
    if samples.iter().any(|s| !(s.is_finite() && *s >= 0.0)) {
        return Err(Error::invalid("modulus samples must be finite and nonnegative"));
    }
    let n = count.div_ceil(2);
    let kf = count as f64;
    let c = (0..count)
        .map(|l| {
            let s: Complex64 = samples
                .iter()
                .enumerate()
                .map(|(k, &m)| {
                    // exponent (N-1-l) k / K, reduced mod K
                    let e = ((n as i64 - 1 - l as i64) * k as i64).rem_euclid(count as i64);
                    Complex64::from_polar(m * m, 2.0 * PI * e as f64 / kf)
                })
                .sum();
            s / kf
        })
        .collect();
    Ok(AutocorrCoeffs { c })
}

/// Which second quantity accompanies the modulus samples `|P(k/M)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleKind {
    /// `|P'(k/M)|`.
    ContinuousDeriv,
    /// `|P((k+1)/M) - P(k/M)|`.
    DiscreteDeriv,
}

impl FromStr for SampleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "continuous" | "continuous_deriv" => Ok(SampleKind::ContinuousDeriv),
            "discrete" | "discrete_deriv" => Ok(SampleKind::DiscreteDeriv),
            other => Err(Error::invalid(format!(
                "unknown sample kind '{other}' (expected continuous or discrete)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasurementSamples {
    pub modulus: Vec<f64>,
    pub derivative: Vec<f64>,
}

impl MeasurementSamples {
    /// Largest gap over both arrays; infinite when the lengths differ.
    pub fn sup_distance(&self, other: &MeasurementSamples) -> f64 {
        if self.modulus.len() != other.modulus.len()
            || self.derivative.len() != other.derivative.len()
        {
            return f64::INFINITY;
        }
        self.modulus
            .iter()
            .zip(&other.modulus)
            .chain(self.derivative.iter().zip(&other.derivative))
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

pub fn sample_measurements(p: &TrigPoly, m: usize, kind: SampleKind) -> Result<MeasurementSamples> {
    if m == 0 {
        return Err(Error::invalid("number of samples M must be positive"));
    }
    let values: Vec<Complex64> = (0..m as i64).map(|k| p.eval_at_fraction(k, m)).collect();
    let modulus = values.iter().map(|v| v.norm()).collect();
    let derivative = match kind {
        SampleKind::ContinuousDeriv => {
            let d = p.derivative();
            (0..m as i64).map(|k| d.eval_at_fraction(k, m).norm()).collect()
        }
        SampleKind::DiscreteDeriv => (0..m)
            .map(|k| (values[(k + 1) % m] - values[k]).norm())
            .collect(),
    };
    Ok(MeasurementSamples { modulus, derivative })
}

fn odd_half(n: usize) -> Result<usize> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::invalid(format!("N must be odd and at least 3, got {n}")));
    }
    Ok((n - 1) / 2)
}

/// `phi = z^m` and `psi = (z^{2m} + sqrt(3) i) / 2` for `N = 2m + 1`.
///
/// Both have `|P| = 1` at the `(2N-2)`-th roots of unity and `|P'| = 2 pi m`
/// everywhere on the circle.
pub fn counterexample_continuous(n: usize) -> Result<(TrigPoly, TrigPoly)> {
    let m = odd_half(n)?;
    let mut phi = vec![Complex64::new(0.0, 0.0); n];
    phi[m] = Complex64::new(1.0, 0.0);
    let mut psi = vec![Complex64::new(0.0, 0.0); n];
    psi[0] = Complex64::new(0.0, 3f64.sqrt() / 2.0);
    psi[2 * m] = Complex64::new(0.5, 0.0);
    Ok((TrigPoly { coeffs: phi }, TrigPoly { coeffs: psi }))
}

/// `phi = z^m` and `psi = (z^{2m} + i) / sqrt(2)` for `N = 2m + 1`, which agree
/// in modulus and forward-difference modulus at the `(2N-2)`-th roots of unity.
pub fn counterexample_discrete(n: usize) -> Result<(TrigPoly, TrigPoly)> {
    let m = odd_half(n)?;
    let mut phi = vec![Complex64::new(0.0, 0.0); n];
    phi[m] = Complex64::new(1.0, 0.0);
    let mut psi = vec![Complex64::new(0.0, 0.0); n];
    let r = std::f64::consts::FRAC_1_SQRT_2;
    psi[0] = Complex64::new(0.0, r);
    psi[2 * m] = Complex64::new(r, 0.0);
    Ok((TrigPoly { coeffs: phi }, TrigPoly { coeffs: psi }))
}

/// Global-phase test on coefficient vectors. There is no reflection branch:
/// the conjugate of an analytic polynomial has negative frequencies.
pub fn classify_poly_pair(p: &TrigPoly, q: &TrigPoly) -> EquivalenceVerdict {
    let n = p.len().max(q.len());
    let (p, q) = (p.padded(n), q.padded(n));
    let np = p.norm();
    if np == 0.0 {
        return if q.is_zero() {
            EquivalenceVerdict::global_phase(Complex64::new(1.0, 0.0), 0.0)
        } else {
            EquivalenceVerdict::distinct(1.0)
        };
    }
    let inner: Complex64 = p.coeffs.iter().zip(&q.coeffs).map(|(a, b)| a.conj() * b).sum();
    let lambda = unit_phase(inner);
    let misfit = p
        .coeffs
        .iter()
        .zip(&q.coeffs)
        .map(|(a, b)| (b - lambda * a).norm_sqr())
        .sum::<f64>()
        .sqrt()
        / np;
    if misfit <= POLY_CLASSIFY_TOL {
        EquivalenceVerdict::global_phase(lambda, misfit)
    } else {
        EquivalenceVerdict::distinct(misfit)
    }
}
