//! Seeded test signals and the experiment harnesses driven by the CLI and
//! the acceptance suite. A seed fully determines every randomized run.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

use crate::ambiguity::{enumerate_ambiguities, filter_by_measurements};
use crate::error::Result;
use crate::grid_signal::{Grid, GridSignal};
use crate::trigpoly::{classify_poly_pair, sample_measurements, SampleKind, TrigPoly};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// `exp(-pi t^2) * p(t)` with `p` of random degree in `1..=max_degree` and
/// standard complex normal coefficients.
pub fn random_gaussian_weighted<R: Rng + ?Sized>(grid: Grid, rng: &mut R, max_degree: usize) -> GridSignal {
    let degree = rng.random_range(1..=max_degree.max(1));
    let coeffs: Vec<Complex64> = (0..=degree).map(|_| complex_normal(rng)).collect();
    GridSignal::from_fn(grid, |t| {
        let p = coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * t + c);
        p * (-PI * t * t).exp()
    })
}

/// Smooth bump `exp(1 - 1/(1 - s^2))`, `s = (t - center)/radius`, zero for `|s| >= 1`.
pub fn bump(grid: Grid, center: f64, radius: f64) -> GridSignal {
    GridSignal::from_fn(grid, |t| {
        let s = (t - center) / radius;
        if s.abs() < 1.0 {
            Complex64::new((1.0 - 1.0 / (1.0 - s * s)).exp(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

pub fn random_trigpoly<R: Rng + ?Sized>(n: usize, rng: &mut R) -> TrigPoly {
    TrigPoly::new((0..n).map(|_| complex_normal(rng)).collect())
        .expect("n >= 1 coefficients")
}

/// One run of the uniqueness experiment: enumerate the zero-flip ambiguities
/// of a polynomial and keep those whose samples at `M` points match.
#[derive(Clone, Debug, Serialize)]
pub struct SufficiencyTrial {
    pub coeffs: Vec<Complex64>,
    pub candidates: usize,
    pub survivors: usize,
    /// Survivors that are not a global-phase multiple of the source.
    pub nonequivalent_survivors: usize,
}

pub fn sufficiency_trial(p: &TrigPoly, m: usize, kind: SampleKind, tol: f64) -> Result<SufficiencyTrial> {
    let candidates = enumerate_ambiguities(p)?;
    let reference = sample_measurements(p, m, kind)?;
    let survivors = filter_by_measurements(&candidates, m, kind, &reference, tol)?;
    let nonequivalent = survivors
        .iter()
        .filter(|q| !classify_poly_pair(p, q).is_global_phase())
        .count();
    Ok(SufficiencyTrial {
        coeffs: p.coeffs().to_vec(),
        candidates: candidates.len(),
        survivors: survivors.len(),
        nonequivalent_survivors: nonequivalent,
    })
}

/// `trials` random polynomials in `C^n` drawn from `seed`, each checked at
/// `M = 2n - 1` samples. Trials run in parallel; output order follows the draw order.
pub fn sufficiency_experiment(
    n: usize,
    trials: usize,
    kind: SampleKind,
    tol: f64,
    seed: u64,
) -> Result<Vec<SufficiencyTrial>> {
    let mut rng = seeded_rng(seed);
    let polys: Vec<TrigPoly> = (0..trials).map(|_| random_trigpoly(n, &mut rng)).collect();
    let m = 2 * n - 1;
    polys
        .par_iter()
        .map(|p| sufficiency_trial(p, m, kind, tol))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_reproducible() {
        let grid = Grid::new(64, 8.0).unwrap();
        let a = random_gaussian_weighted(grid, &mut seeded_rng(5), 4);
        let b = random_gaussian_weighted(grid, &mut seeded_rng(5), 4);
        assert_eq!(a, b);
        let c = random_gaussian_weighted(grid, &mut seeded_rng(6), 4);
        assert_ne!(a, c);
    }

    #[test]
    fn bump_is_compact() {
        let grid = Grid::new(64, 8.0).unwrap();
        let b = bump(grid, 0.0, 1.0);
        for (t, v) in grid.points().zip(b.values()) {
            if t.abs() >= 1.0 {
                assert_eq!(v.norm(), 0.0);
            } else {
                assert!(v.re > 0.0);
            }
        }
        assert_eq!(b.values()[32].re, 1.0);
    }
}
