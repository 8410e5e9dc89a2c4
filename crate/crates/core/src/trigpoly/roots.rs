use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::TrigPoly;
use crate::error::{Error, Result};

/// Relative distance under which two computed roots are merged.
pub const ROOT_CLUSTER_TOL: f64 = 1e-8;
const PAIRING_TOL: f64 = 1e-6;
const AUTOCORR_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootMultiplicity {
    pub root: Complex64,
    pub multiplicity: usize,
}

/// `P(z) = leading * z^zero_multiplicity * prod (z - roots[j])`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub leading: Complex64,
    pub zero_multiplicity: usize,
    /// Nonzero roots, repeated by multiplicity, sorted by real then imaginary part.
    pub roots: Vec<Complex64>,
}

impl Factorization {
    /// Coefficients `psi_0..psi_{n-1}` of the product, zero-padded to `n`.
    pub fn expand(&self, n: usize) -> Vec<Complex64> {
        let mut poly = vec![self.leading];
        for r in &self.roots {
            let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
            for (j, c) in poly.iter().enumerate() {
                next[j + 1] += c;
                next[j] -= c * r;
            }
            poly = next;
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.zero_multiplicity];
        out.extend(poly);
        out.resize(n.max(out.len()), Complex64::new(0.0, 0.0));
        out
    }

    pub fn degree(&self) -> usize {
        self.zero_multiplicity + self.roots.len()
    }
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        d = d * z + p;
        p = p * z + c;
    }
    (p, d)
}

fn polish(coeffs: &[Complex64], mut x: Complex64) -> Complex64 {
    let mut residual = horner(coeffs, x).0.norm();
    for _ in 0..50 {
        let (p, d) = horner(coeffs, x);
        if d.norm() == 0.0 || p.norm() == 0.0 {
            break;
        }
        let next = x - p / d;
        let r = horner(coeffs, next).0.norm();
        if r >= residual {
            break;
        }
        let step = (next - x).norm();
        x = next;
        residual = r;
        if step <= f64::EPSILON * x.norm() {
            break;
        }
    }
    x
}

/// Roots of `sum coeffs[j] z^j` with a nonzero constant and leading term.
fn companion_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let d = coeffs.len() - 1;
    if d == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[d];
    if d == 1 {
        return Ok(vec![-coeffs[0] / lead]);
    }
    let mut m = DMatrix::<Complex64>::zeros(d, d);
    for j in 0..d {
        m[(0, j)] = -coeffs[d - 1 - j] / lead;
    }
    for i in 1..d {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    let schur = nalgebra::Schur::try_new(m, f64::EPSILON, 10_000)
        .ok_or_else(|| Error::invalid("eigenvalue iteration did not converge"))?;
    let (_, t) = schur.unpack();
    Ok((0..d).map(|i| polish(coeffs, t[(i, i)])).collect())
}

fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

pub fn factorize(p: &TrigPoly) -> Result<Factorization> {
    let c = p.coeffs();
    let low = c
        .iter()
        .position(|v| v.norm() != 0.0)
        .ok_or_else(|| Error::invalid("the zero polynomial has no factorization"))?;
    let high = c.iter().rposition(|v| v.norm() != 0.0).unwrap_or(low);
    let mut roots = companion_roots(&c[low..=high])?;
    sort_roots(&mut roots);
    Ok(Factorization {
        leading: c[high],
        zero_multiplicity: low,
        roots,
    })
}

/// Distinct roots of `sum psi_j z^j` in the plane, the root at zero first.
pub fn roots_on_plane(p: &TrigPoly) -> Result<Vec<RootMultiplicity>> {
    let f = factorize(p)?;
    let mut out: Vec<RootMultiplicity> = Vec::new();
    if f.zero_multiplicity > 0 {
        out.push(RootMultiplicity {
            root: Complex64::new(0.0, 0.0),
            multiplicity: f.zero_multiplicity,
        });
    }
    let start = out.len();
    for r in f.roots {
        let hit = out[start..].iter_mut().find(|e| {
            (e.root - r).norm() <= ROOT_CLUSTER_TOL * e.root.norm().max(r.norm()).max(1.0)
        });
        match hit {
            Some(e) => {
                let k = e.multiplicity as f64;
                e.root = (e.root * k + r) / (k + 1.0);
                e.multiplicity += 1;
            }
            None => out.push(RootMultiplicity { root: r, multiplicity: 1 }),
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairKind {
    Identical,
    /// `q = 1 / conj(p)`.
    Reflected,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootPair {
    pub p_root: Complex64,
    pub q_root: Complex64,
    pub kind: PairKind,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairingReport {
    pub pairs: Vec<RootPair>,
    pub reflections: usize,
    /// Zero multiplicity of `Q` minus that of `P`.
    pub monomial_offset: i64,
}

/// Matches the nonzero roots of two polynomials with equal `|P| = |Q|` on the
/// circle, each root of `Q` equal to a root of `P` or to its reflection.
pub fn root_pairing_check(p: &TrigPoly, q: &TrigPoly) -> Result<PairingReport> {
    let n = p.len().max(q.len());
    let (p, q) = (p.padded(n), q.padded(n));
    let (ap, aq) = (p.autocorrelation(), q.autocorrelation());
    let scale = ap.c[n - 1].norm().max(1.0);
    let gap = ap.max_abs_diff(&aq);
    if gap > AUTOCORR_TOL * scale {
        return Err(Error::NotCircleEqual(format!(
            "autocorrelations differ by {gap:.3e}"
        )));
    }
    if p.is_zero() && q.is_zero() {
        return Ok(PairingReport {
            pairs: Vec::new(),
            reflections: 0,
            monomial_offset: 0,
        });
    }
    let (fp, fq) = (factorize(&p)?, factorize(&q)?);
    if fp.roots.len() != fq.roots.len() {
        return Err(Error::NotCircleEqual(format!(
            "{} nonzero roots against {}",
            fp.roots.len(),
            fq.roots.len()
        )));
    }
    let mut used = vec![false; fp.roots.len()];
    let mut pairs = Vec::with_capacity(fq.roots.len());
    for &y in &fq.roots {
        let best = fp
            .roots
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(i, &x)| {
                let same = (y - x).norm();
                let refl = (y - 1.0 / x.conj()).norm();
                let kind = if same <= refl { PairKind::Identical } else { PairKind::Reflected };
                (i, x, same.min(refl) / y.norm().max(1.0), kind)
            })
            .min_by(|a, b| a.2.total_cmp(&b.2));
        match best {
            Some((i, x, d, kind)) if d <= PAIRING_TOL => {
                used[i] = true;
                pairs.push(RootPair { p_root: x, q_root: y, kind });
            }
            _ => {
                return Err(Error::NotCircleEqual(format!(
                    "root {y} has no partner"
                )))
            }
        }
    }
    let reflections = pairs.iter().filter(|p| p.kind == PairKind::Reflected).count();
    Ok(PairingReport {
        pairs,
        reflections,
        monomial_offset: fq.zero_multiplicity as i64 - fp.zero_multiplicity as i64,
    })
}
