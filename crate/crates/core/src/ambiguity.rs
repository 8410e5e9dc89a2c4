//! Zero flipping: every polynomial with the same modulus on the unit circle as
//! `P` arises by replacing some nonzero roots `x` with `1 / conj(x)`.

use num_complex::Complex64;
use rayon::prelude::*;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::trigpoly::{
    classify_poly_pair, factorize, sample_measurements, Factorization, MeasurementSamples,
    SampleKind, TrigPoly,
};

/// Largest degree accepted by the exhaustive enumeration.
pub const MAX_ENUMERATION_DEGREE: usize = 20;
/// Roots closer than this (relative) to the unit circle are not flipped.
pub const CIRCLE_TOL: f64 = 1e-8;
const ROOT_MATCH_TOL: f64 = 1e-8;

/// Sorted, duplicate-free indices into the nonzero roots of a [`Factorization`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlipSet {
    indices: Vec<usize>,
}

impl FlipSet {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        FlipSet { indices }
    }

    pub fn empty() -> Self {
        FlipSet::default()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

fn on_circle(x: Complex64) -> bool {
    (x.norm() - 1.0).abs() <= CIRCLE_TOL
}

/// Indices of the roots of `f` that lie off the unit circle.
pub fn flippable_indices(f: &Factorization) -> Vec<usize> {
    (0..f.roots.len()).filter(|&i| !on_circle(f.roots[i])).collect()
}

fn flip_factored(f: &Factorization, flips: &FlipSet, n: usize) -> Vec<Complex64> {
    let mut g = f.clone();
    for &i in flips.indices() {
        let x = f.roots[i];
        g.leading *= x.norm();
        g.roots[i] = 1.0 / x.conj();
    }
    g.expand(n)
}

fn check_flips(f: &Factorization, flips: &FlipSet) -> Result<()> {
    for &i in flips.indices() {
        let x = *f.roots.get(i).ok_or_else(|| {
            Error::invalid(format!("flip index {i} out of range ({} roots)", f.roots.len()))
        })?;
        if on_circle(x) {
            return Err(Error::invalid(format!("root {x} lies on the unit circle")));
        }
    }
    Ok(())
}

/// `P` with the roots selected by `flips` reflected through the unit circle.
/// The empty set returns `P` unchanged.
pub fn zero_flip(p: &TrigPoly, flips: &FlipSet) -> Result<TrigPoly> {
    if flips.is_empty() {
        return Ok(p.clone());
    }
    if p.is_zero() {
        return Err(Error::invalid("the zero polynomial has no roots to flip"));
    }
    let f = factorize(p)?;
    check_flips(&f, flips)?;
    TrigPoly::new(flip_factored(&f, flips, p.len()))
}

fn degree(p: &TrigPoly) -> usize {
    p.coeffs().iter().rposition(|c| c.norm() != 0.0).unwrap_or(0)
}

/// Every subset of flippable roots, in lexicographic order of the index sets,
/// before removing duplicates.
pub fn enumerate_flips(p: &TrigPoly) -> Result<Vec<(FlipSet, TrigPoly)>> {
    if p.is_zero() {
        return Ok(vec![(FlipSet::empty(), p.clone())]);
    }
    let d = degree(p);
    if d > MAX_ENUMERATION_DEGREE {
        return Err(Error::ResourceLimit(format!(
            "degree {d} exceeds the enumeration limit {MAX_ENUMERATION_DEGREE}"
        )));
    }
    let f = factorize(p)?;
    let free = flippable_indices(&f);
    let mut sets: Vec<FlipSet> = (0u64..1 << free.len())
        .map(|mask| {
            FlipSet::new(
                free.iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &i)| i)
                    .collect(),
            )
        })
        .collect();
    sets.sort();
    sets.into_par_iter()
        .map(|s| {
            let q = if s.is_empty() {
                p.clone()
            } else {
                TrigPoly::new(flip_factored(&f, &s, p.len()))?
            };
            Ok((s, q))
        })
        .collect()
}

/// Labels each root value and its reflection so that equal values share a label.
fn value_labels(f: &Factorization) -> (Vec<usize>, Vec<usize>) {
    let mut reps: Vec<Complex64> = Vec::new();
    let mut label = |z: Complex64| {
        reps.iter()
            .position(|r| (r - z).norm() <= ROOT_MATCH_TOL * r.norm().max(z.norm()).max(1.0))
            .unwrap_or_else(|| {
                reps.push(z);
                reps.len() - 1
            })
    };
    let same: Vec<usize> = f.roots.iter().map(|&x| label(x)).collect();
    let flipped: Vec<usize> = f.roots.iter().map(|&x| label(1.0 / x.conj())).collect();
    (same, flipped)
}

/// Distinct polynomials, up to global phase, with the same modulus as `P` on
/// the unit circle. `P` itself comes first.
pub fn enumerate_ambiguities(p: &TrigPoly) -> Result<Vec<TrigPoly>> {
    let all = enumerate_flips(p)?;
    if p.is_zero() {
        return Ok(all.into_iter().map(|(_, q)| q).collect());
    }
    let f = factorize(p)?;
    let (same, flipped) = value_labels(&f);
    // Candidates with equal root multisets are confirmed pairwise before merging.
    let mut groups: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut kept: Vec<TrigPoly> = Vec::new();
    for (set, q) in all {
        let mut key: Vec<usize> = same.clone();
        for &i in set.indices() {
            key[i] = flipped[i];
        }
        key.sort_unstable();
        let bucket = groups.entry(key).or_default();
        if bucket.iter().any(|&k| classify_poly_pair(&kept[k], &q).is_global_phase()) {
            continue;
        }
        bucket.push(kept.len());
        kept.push(q);
    }
    Ok(kept)
}

/// Candidates whose samples at `M` points match `reference` within `tol` in
/// both arrays. An infinite `tol` keeps everything.
pub fn filter_by_measurements(
    candidates: &[TrigPoly],
    m: usize,
    kind: SampleKind,
    reference: &MeasurementSamples,
    tol: f64,
) -> Result<Vec<TrigPoly>> {
    if reference.modulus.len() != m || reference.derivative.len() != m {
        return Err(Error::invalid(format!(
            "reference holds {} and {} samples, expected {m}",
            reference.modulus.len(),
            reference.derivative.len()
        )));
    }
    if tol.is_nan() || tol < 0.0 {
        return Err(Error::invalid("tolerance must be nonnegative"));
    }
    if tol.is_infinite() {
        return Ok(candidates.to_vec());
    }
    let keep: Vec<bool> = candidates
        .par_iter()
        .map(|q| Ok(sample_measurements(q, m, kind)?.sup_distance(reference) <= tol))
        .collect::<Result<_>>()?;
    Ok(candidates
        .iter()
        .zip(keep)
        .filter_map(|(q, k)| k.then(|| q.clone()))
        .collect())
}
