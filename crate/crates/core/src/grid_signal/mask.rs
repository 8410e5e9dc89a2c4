use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use super::{Grid, GridSignal};
use crate::error::{Error, Result};

/// Frequency `a` of a sine mask `sin(a pi t) exp(-pi t^2)`.
///
/// Whether two sine masks determine a signal depends on the rationality of
/// their frequency ratio, which floats cannot express. Frequencies given as
/// `p/q` keep their exact form.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SineFrequency {
    Rational(i64, i64),
    Real(f64),
}

impl SineFrequency {
    /// Reduced rational `num/den` with positive denominator.
    pub fn rational(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::invalid("rational frequency with zero denominator"));
        }
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i64;
        let sign = if den < 0 { -1 } else { 1 };
        Ok(SineFrequency::Rational(sign * num / g, sign * den / g))
    }

    pub fn value(&self) -> f64 {
        match *self {
            SineFrequency::Rational(p, q) => p as f64 / q as f64,
            SineFrequency::Real(a) => a,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.value() > 0.0
    }

    /// `Some(true)` when both frequencies are exact rationals (so their ratio is
    /// rational), `None` when either is a raw float and the question is undecidable.
    pub fn ratio_is_rational(&self, other: &SineFrequency) -> Option<bool> {
        match (self, other) {
            (SineFrequency::Rational(..), SineFrequency::Rational(..)) => Some(true),
            _ => None,
        }
    }

    /// Exact product with the rational `p/q`, if this frequency is rational.
    pub fn times_ratio(&self, p: i64, q: i64) -> Result<SineFrequency> {
        match *self {
            SineFrequency::Rational(a, b) => {
                let num = a.checked_mul(p);
                let den = b.checked_mul(q);
                match (num, den) {
                    (Some(n), Some(d)) => SineFrequency::rational(n, d),
                    _ => Err(Error::invalid("rational frequency overflow")),
                }
            }
            SineFrequency::Real(a) => {
                if q == 0 {
                    return Err(Error::invalid("zero denominator"));
                }
                Ok(SineFrequency::Real(a * p as f64 / q as f64))
            }
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl FromStr for SineFrequency {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("bad numerator in '{s}'")))?;
            let q: i64 = q
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("bad denominator in '{s}'")))?;
            return SineFrequency::rational(p, q);
        }
        if let Ok(p) = s.parse::<i64>() {
            return SineFrequency::rational(p, 1);
        }
        s.parse::<f64>()
            .ok()
            .filter(|a| a.is_finite())
            .map(SineFrequency::Real)
            .ok_or_else(|| Error::invalid(format!("cannot parse frequency '{s}'")))
    }
}

impl fmt::Display for SineFrequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SineFrequency::Rational(p, q) => write!(f, "{p}/{q}"),
            SineFrequency::Real(a) => write!(f, "{a}"),
        }
    }
}

/// The mask families applied before the Fourier transform.
///
/// With `g(t) = exp(-pi t^2)`:
/// `Gauss = g`, `GaussDeriv = 2 pi t g`, `GaussAffine = (1 - 2 pi t) g`,
/// `GaussSine(a) = sin(a pi t) g`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MaskKind {
    Gauss,
    GaussDeriv,
    GaussAffine,
    GaussSine { freq: SineFrequency },
    Custom { values: Vec<Complex64> },
}

impl MaskKind {
    pub fn sine(freq: SineFrequency) -> Self {
        MaskKind::GaussSine { freq }
    }

    /// Value of an analytic mask at `t`; `None` for custom masks.
    pub fn value_at(&self, t: f64) -> Option<f64> {
        let g = (-PI * t * t).exp();
        match self {
            MaskKind::Gauss => Some(g),
            MaskKind::GaussDeriv => Some(2.0 * PI * t * g),
            MaskKind::GaussAffine => Some((1.0 - 2.0 * PI * t) * g),
            MaskKind::GaussSine { freq } => Some((freq.value() * PI * t).sin() * g),
            MaskKind::Custom { .. } => None,
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            MaskKind::Custom { values } => values.iter().all(|v| v.im == 0.0),
            _ => true,
        }
    }

    /// Short tag used in file names and reports.
    pub fn tag(&self) -> &'static str {
        match self {
            MaskKind::Gauss => "gauss",
            MaskKind::GaussDeriv => "gauss_deriv",
            MaskKind::GaussAffine => "gauss_affine",
            MaskKind::GaussSine { .. } => "gauss_sine",
            MaskKind::Custom { .. } => "custom",
        }
    }
}

/// Samples a mask on `grid`.
pub fn eval_mask(kind: &MaskKind, grid: &Grid) -> Result<GridSignal> {
    match kind {
        MaskKind::Custom { values } => GridSignal::new(*grid, values.clone()),
        analytic => Ok(GridSignal::from_fn(*grid, |t| {
            Complex64::new(analytic.value_at(t).unwrap_or(0.0), 0.0)
        })),
    }
}
