use num_complex::Complex64;
use proptest::prelude::*;
use rand::Rng;
use std::f64::consts::PI;

use phaseret::experiments::{random_trigpoly, seeded_rng};
use phaseret::trigpoly::{
    classify_poly_pair, counterexample_continuous, counterexample_discrete, interpolate_sq_modulus,
    root_pairing_check, roots_on_plane, sample_measurements, PairKind, SampleKind, TrigPoly,
};
use phaseret::{Error, VerdictKind};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `sum psi_j exp(2 pi i j x)` term by term, without Horner.
fn naive_eval(p: &TrigPoly, x: f64) -> Complex64 {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(j, v)| v * Complex64::from_polar(1.0, 2.0 * PI * j as f64 * x))
        .sum()
}

#[test]
fn autocorrelation_sums_to_value_at_zero() {
    let mut rng = seeded_rng(3);
    for n in 1..8 {
        let p = random_trigpoly(n, &mut rng);
        let sum: Complex64 = p.autocorrelation().c.iter().sum();
        assert!((sum.re - p.eval(0.0).norm_sqr()).abs() <= 1e-12 * sum.norm().max(1.0));
        assert!(sum.im.abs() <= 1e-12 * sum.norm().max(1.0));
    }
}

#[test]
fn sq_modulus_via_autocorrelation_matches_eval() {
    let mut rng = seeded_rng(4);
    let p = random_trigpoly(7, &mut rng);
    let a = p.autocorrelation();
    for _ in 0..100 {
        let x: f64 = rng.random();
        let want = naive_eval(&p, x).norm_sqr();
        assert!((a.eval_sq_modulus(x) - want).abs() <= 1e-10 * want.max(1.0));
    }
}

#[test]
fn roots_of_z_squared_minus_one() {
    let p = TrigPoly::from_real(&[-1.0, 0.0, 1.0]).unwrap();
    let r = roots_on_plane(&p).unwrap();
    assert_eq!(r.len(), 2);
    assert!(r.iter().any(|e| (e.root - c(1.0, 0.0)).norm() < 1e-14));
    assert!(r.iter().any(|e| (e.root - c(-1.0, 0.0)).norm() < 1e-14));
    let z = TrigPoly::from_real(&[0.0, 1.0]).unwrap();
    let r = roots_on_plane(&z).unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!((r[0].root, r[0].multiplicity), (c(0.0, 0.0), 1));
    assert!(matches!(roots_on_plane(&TrigPoly::zero(4)), Err(Error::InvalidArgument(_))));
}

#[test]
fn roots_reconstruct_random_sextics() {
    let mut rng = seeded_rng(5);
    for _ in 0..20 {
        let p = random_trigpoly(7, &mut rng);
        let roots = roots_on_plane(&p).unwrap();
        let total: usize = roots.iter().map(|e| e.multiplicity).sum();
        assert_eq!(total, 6);
        // expand lead * prod (z - r)^m independently of the library
        let mut poly = vec![p.coeffs()[6]];
        for e in &roots {
            for _ in 0..e.multiplicity {
                let mut next = vec![c(0.0, 0.0); poly.len() + 1];
                for (j, v) in poly.iter().enumerate() {
                    next[j + 1] += v;
                    next[j] -= v * e.root;
                }
                poly = next;
            }
        }
        let scale = p.norm();
        for (a, b) in poly.iter().zip(p.coeffs()) {
            assert!((a - b).norm() <= 1e-8 * scale);
        }
    }
}

#[test]
fn pairing_of_identical_polynomials() {
    let p = random_trigpoly(5, &mut seeded_rng(6));
    let rep = root_pairing_check(&p, &p).unwrap();
    assert_eq!(rep.pairs.len(), 4);
    assert!(rep.pairs.iter().all(|r| r.kind == PairKind::Identical));
    assert_eq!(rep.monomial_offset, 0);
}

#[test]
fn pairing_reports_a_flipped_root() {
    // (z - 2)(z - i/3) against 2 (z - 1/2)(z - i/3)
    let p = TrigPoly::new(vec![c(0.0, 2.0 / 3.0), c(-2.0, -1.0 / 3.0), c(1.0, 0.0)]).unwrap();
    let q = TrigPoly::new(vec![c(0.0, 1.0 / 3.0), c(-1.0, -2.0 / 3.0), c(2.0, 0.0)]).unwrap();
    let rep = root_pairing_check(&p, &q).unwrap();
    assert_eq!(rep.reflections, 1);
    let flipped = rep.pairs.iter().find(|r| r.kind == PairKind::Reflected).unwrap();
    assert!((flipped.p_root - c(2.0, 0.0)).norm() < 1e-12);
    assert!((flipped.q_root - c(0.5, 0.0)).norm() < 1e-12);
}

#[test]
fn pairing_counts_monomial_offset() {
    // z (z - 3) and 3 z^2 (z - 1/3) have equal modulus on the circle
    let p = TrigPoly::from_real(&[0.0, -3.0, 1.0, 0.0]).unwrap();
    let q = TrigPoly::from_real(&[0.0, -1.0, 3.0, 0.0]).unwrap();
    let rep = root_pairing_check(&p, &q).unwrap();
    assert_eq!(rep.reflections, 1);
    assert_eq!(rep.monomial_offset, 0);
    let shifted = TrigPoly::from_real(&[0.0, 0.0, -1.0, 3.0]).unwrap();
    let rep = root_pairing_check(&p, &shifted).unwrap();
    assert_eq!(rep.monomial_offset, 1);
}

#[test]
fn pairing_rejects_unequal_moduli() {
    let p = TrigPoly::from_real(&[-1.0, 1.0]).unwrap();
    let q = TrigPoly::from_real(&[1.0, 1.0]).unwrap();
    assert!(matches!(root_pairing_check(&p, &q), Err(Error::NotCircleEqual(_))));
}

#[test]
fn counterexamples_share_samples_at_2n_minus_2() {
    for n in [3, 5, 7, 9] {
        let m = 2 * n - 2;
        let (p, q) = counterexample_continuous(n).unwrap();
        let a = sample_measurements(&p, m, SampleKind::ContinuousDeriv).unwrap();
        let b = sample_measurements(&q, m, SampleKind::ContinuousDeriv).unwrap();
        assert!(a.sup_distance(&b) <= 1e-12, "continuous N = {n}");
        assert_eq!(classify_poly_pair(&p, &q).kind, VerdictKind::Distinct);

        let (p, q) = counterexample_discrete(n).unwrap();
        let a = sample_measurements(&p, m, SampleKind::DiscreteDeriv).unwrap();
        let b = sample_measurements(&q, m, SampleKind::DiscreteDeriv).unwrap();
        assert!(a.sup_distance(&b) <= 1e-12, "discrete N = {n}");
        assert_eq!(classify_poly_pair(&p, &q).kind, VerdictKind::Distinct);
    }
}

#[test]
fn counterexamples_separate_at_2n_minus_1() {
    for n in [3, 5, 7] {
        let m = 2 * n - 1;
        let (p, q) = counterexample_continuous(n).unwrap();
        let a = sample_measurements(&p, m, SampleKind::ContinuousDeriv).unwrap();
        let b = sample_measurements(&q, m, SampleKind::ContinuousDeriv).unwrap();
        assert!(a.sup_distance(&b) > 1e-3);
        let (p, q) = counterexample_discrete(n).unwrap();
        let a = sample_measurements(&p, m, SampleKind::DiscreteDeriv).unwrap();
        let b = sample_measurements(&q, m, SampleKind::DiscreteDeriv).unwrap();
        assert!(a.sup_distance(&b) > 1e-3);
    }
}

#[test]
fn counterexample_five_by_direct_evaluation() {
    let (p, q) = counterexample_discrete(5).unwrap();
    for k in 0..8 {
        let (x0, x1) = (k as f64 / 8.0, (k + 1) as f64 / 8.0);
        assert!((naive_eval(&p, x0).norm() - naive_eval(&q, x0).norm()).abs() <= 1e-12);
        let dp = (naive_eval(&p, x1) - naive_eval(&p, x0)).norm();
        let dq = (naive_eval(&q, x1) - naive_eval(&q, x0)).norm();
        assert!((dp - dq).abs() <= 1e-12);
    }
}

fn coeffs_strategy(max_n: usize) -> impl Strategy<Value = TrigPoly> {
    prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 1..=max_n)
        .prop_map(|v| TrigPoly::new(v.into_iter().map(|(a, b)| c(a, b)).collect()).unwrap())
}

proptest! {
    #[test]
    fn autocorrelation_is_hermitian(p in coeffs_strategy(10)) {
        let a = p.autocorrelation();
        let n = p.len();
        for k in 0..n {
            prop_assert_eq!(a.c[n - 1 + k], a.c[n - 1 - k].conj());
        }
        let norm_sq: f64 = p.coeffs().iter().map(|v| v.norm_sqr()).sum();
        prop_assert!(a.c[n - 1].im == 0.0 && a.c[n - 1].re >= 0.0);
        prop_assert!((a.c[n - 1].re - norm_sq).abs() <= 1e-12 * norm_sq.max(1.0));
    }

    #[test]
    fn interpolation_inverts_sampling(p in coeffs_strategy(12)) {
        let k = 2 * p.len() - 1;
        let samples: Vec<f64> = (0..k as i64).map(|j| p.eval_at_fraction(j, k).norm()).collect();
        let got = interpolate_sq_modulus(&samples).unwrap();
        prop_assert!(got.max_abs_diff(&p.autocorrelation()) <= 1e-10 * p.norm().powi(2).max(1.0));
    }

    #[test]
    fn eval_agrees_with_naive_sum(p in coeffs_strategy(10), x in 0.0f64..1.0) {
        let scale: f64 = p.coeffs().iter().map(|v| v.norm()).sum::<f64>().max(1.0);
        prop_assert!((p.eval(x) - naive_eval(&p, x)).norm() <= 1e-12 * scale);
    }

    #[test]
    fn samples_ignore_global_phase(p in coeffs_strategy(8), theta in 0.0f64..6.3, m in 1usize..20) {
        let rot = Complex64::from_polar(1.0, theta);
        let q = TrigPoly::new(p.coeffs().iter().map(|v| v * rot).collect()).unwrap();
        prop_assert!(classify_poly_pair(&p, &q).is_global_phase() || p.norm() < 1e-6);
        for kind in [SampleKind::ContinuousDeriv, SampleKind::DiscreteDeriv] {
            let a = sample_measurements(&p, m, kind).unwrap();
            let b = sample_measurements(&q, m, kind).unwrap();
            prop_assert!(a.sup_distance(&b) <= 1e-11 * p.norm().max(1.0) * (1.0 + 2.0 * PI * p.len() as f64));
        }
    }
}
