use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictKind {
    /// `psi = c * phi` with `|c| = 1`.
    GlobalPhase,
    /// `psi = c * phi*` with `phi*(t) = conj(phi(-t))`.
    ConjugateReflection,
    Distinct,
}

/// Outcome of comparing two signals modulo the trivial ambiguities.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceVerdict {
    pub kind: VerdictKind,
    /// Unimodular constant of the matching relation; `None` when distinct.
    pub constant: Option<Complex64>,
    /// Relative misfit of the best relation that was tried.
    pub residual: f64,
}

impl EquivalenceVerdict {
    pub fn global_phase(constant: Complex64, residual: f64) -> Self {
        EquivalenceVerdict {
            kind: VerdictKind::GlobalPhase,
            constant: Some(constant),
            residual,
        }
    }

    pub fn distinct(residual: f64) -> Self {
        EquivalenceVerdict {
            kind: VerdictKind::Distinct,
            constant: None,
            residual,
        }
    }

    pub fn is_global_phase(&self) -> bool {
        self.kind == VerdictKind::GlobalPhase
    }
}

/// Phase of `z`, or 1 when `z` vanishes.
pub(crate) fn unit_phase(z: Complex64) -> Complex64 {
    let r = z.norm();
    if r > 0.0 {
        z / r
    } else {
        Complex64::new(1.0, 0.0)
    }
}
