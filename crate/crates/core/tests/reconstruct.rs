use num_complex::Complex64;
use rand::Rng;
use std::f64::consts::PI;

use phaseret::experiments::{bump, random_gaussian_weighted, seeded_rng};
use phaseret::grid_signal::{bargmann_pair, Grid, GridSignal, MaskKind, SineFrequency};
use phaseret::measurement::{coded_diffraction, sine_measurements, three_gaussian_measurements};
use phaseret::reconstruct::{
    classify_pair, classify_pair_with_tol, integrate_phase, recover_fprime_fbar,
    recover_fprime_fbar_with, reconstruct_three, sine_rational_counterexample, AnalyticSpectrum,
    Differentiation,
};
use phaseret::{Error, VerdictKind};

fn grid() -> Grid {
    Grid::new(1024, 16.0).unwrap()
}

/// `F` and `F'` of the Gaussian-masked signal by direct Riemann sums on the dual grid.
fn direct_spectrum(phi: &GridSignal) -> (Vec<Complex64>, Vec<Complex64>) {
    let g = phi.grid();
    let h = g.spacing();
    let masked: Vec<(f64, Complex64)> = g
        .points()
        .zip(phi.values())
        .map(|(t, v)| (t, v * (-PI * t * t).exp()))
        .collect();
    g.dual()
        .points()
        .map(|xi| {
            let mut f = Complex64::new(0.0, 0.0);
            let mut fp = Complex64::new(0.0, 0.0);
            for &(t, v) in &masked {
                let e = v * Complex64::from_polar(1.0, -2.0 * PI * t * xi);
                f += e;
                fp += e * Complex64::new(0.0, -2.0 * PI * t);
            }
            (f * h, fp * h)
        })
        .unzip()
}

fn aligned_relative_error(truth: &[Complex64], got: &[Complex64]) -> f64 {
    let ip: Complex64 = truth.iter().zip(got).map(|(a, b)| a.conj() * b).sum();
    let c = ip / ip.norm();
    let num: f64 = truth.iter().zip(got).map(|(a, b)| (b - c * a).norm_sqr()).sum();
    let den: f64 = truth.iter().map(|a| a.norm_sqr()).sum();
    (num / den).sqrt()
}

#[test]
fn fprime_fbar_matches_direct_oracle() {
    for seed in [1, 2, 3] {
        let phi = random_gaussian_weighted(grid(), &mut seeded_rng(seed), 5);
        let (f, fp) = direct_spectrum(&phi);
        let (r1, r2, r3) = three_gaussian_measurements(&phi).unwrap();
        let got = recover_fprime_fbar(&r1, &r2, &r3).unwrap();
        let scale = f.iter().map(|v| v.norm_sqr()).fold(0.0, f64::max);
        for j in 0..f.len() {
            let want = fp[j] * f[j].conj();
            assert!((got[j] - want).norm() <= 1e-5 * scale, "seed {seed} index {j}");
        }
    }
}

#[test]
fn centered_differences_are_second_order_only() {
    let phi = random_gaussian_weighted(grid(), &mut seeded_rng(4), 3);
    let (f, fp) = direct_spectrum(&phi);
    let (r1, r2, r3) = three_gaussian_measurements(&phi).unwrap();
    let got = recover_fprime_fbar_with(&r1, &r2, &r3, Differentiation::CenteredDifference).unwrap();
    let scale = f.iter().map(|v| v.norm_sqr()).fold(0.0, f64::max);
    let err = (0..f.len())
        .map(|j| (got[j] - fp[j] * f[j].conj()).norm())
        .fold(0.0, f64::max);
    assert!(err <= 5e-2 * scale);
    // the imaginary part does not involve differentiation
    for j in 0..f.len() {
        assert!((got[j].im - (fp[j] * f[j].conj()).im).abs() <= 1e-10 * scale);
    }
}

#[test]
fn integrated_spectrum_matches_truth() {
    let phi = random_gaussian_weighted(grid(), &mut seeded_rng(5), 4);
    let (f, fp) = direct_spectrum(&phi);
    let (r1, r2, r3) = three_gaussian_measurements(&phi).unwrap();
    let fpf = recover_fprime_fbar(&r1, &r2, &r3).unwrap();
    let spec = integrate_phase(&fpf, &r1, 1e-8).unwrap();
    let (a, b) = spec.interval;
    assert!(a < b);
    assert!(aligned_relative_error(&f[a..=b], &spec.f[a..=b]) <= 1e-4);
    assert!(aligned_relative_error(&fp[a..=b], &spec.fprime[a..=b]) <= 1e-4);
    for j in 0..f.len() {
        assert!((spec.f[j].norm() - r1.magnitudes[j]).abs() <= 1e-12 * r1.max());
    }
}

#[test]
fn real_even_signal_has_flat_phase() {
    let g = grid();
    let phi = GridSignal::from_fn(g, |t| Complex64::new((-PI * t * t).exp(), 0.0));
    let (r1, r2, r3) = three_gaussian_measurements(&phi).unwrap();
    let fpf = recover_fprime_fbar(&r1, &r2, &r3).unwrap();
    let spec = integrate_phase(&fpf, &r1, 1e-8).unwrap();
    // the phase is flat up to the constant picked up next to the anchor
    let c = spec.f[512] / spec.f[512].norm();
    for (v, m) in spec.f.iter().zip(&r1.magnitudes) {
        assert!((v - c * m).norm() <= 1e-8 * r1.max());
    }
    assert!((c - Complex64::new(1.0, 0.0)).norm() <= 1e-3);
}

#[test]
fn zero_records_are_degenerate() {
    let phi = GridSignal::zeros(Grid::new(64, 8.0).unwrap());
    let (r1, r2, r3) = three_gaussian_measurements(&phi).unwrap();
    let fpf = recover_fprime_fbar(&r1, &r2, &r3).unwrap();
    assert!(fpf.iter().all(|v| v.norm() == 0.0));
    assert!(matches!(integrate_phase(&fpf, &r1, 1e-8), Err(Error::DegenerateSignal(_))));
    assert!(matches!(reconstruct_three(&r1, &r2, &r3), Err(Error::DegenerateSignal(_))));
}

#[test]
fn round_trip_up_to_global_phase() {
    let g = Grid::new(2048, 16.0).unwrap();
    let mut rng = seeded_rng(77);
    for _ in 0..4 {
        let phi = random_gaussian_weighted(g, &mut rng, 5).scale(Complex64::from_polar(1.0, 0.4));
        let (r1, r2, r3) = three_gaussian_measurements(&phi).unwrap();
        let rec = reconstruct_three(&r1, &r2, &r3).unwrap();
        let v = classify_pair_with_tol(&phi, &rec, 1e-3).unwrap();
        assert_eq!(v.kind, VerdictKind::GlobalPhase, "residual {}", v.residual);
    }
    let gauss = GridSignal::from_fn(g, |t| Complex64::new((-PI * t * t).exp(), 0.0));
    let (r1, r2, r3) = three_gaussian_measurements(&gauss).unwrap();
    let rec = reconstruct_three(&r1, &r2, &r3).unwrap();
    assert!(classify_pair_with_tol(&gauss, &rec, 1e-6).unwrap().is_global_phase());
}

#[test]
fn inconsistent_records_rejected() {
    let phi = random_gaussian_weighted(grid(), &mut seeded_rng(8), 2);
    let other = random_gaussian_weighted(Grid::new(512, 16.0).unwrap(), &mut seeded_rng(8), 2);
    let (r1, r2, r3) = three_gaussian_measurements(&phi).unwrap();
    let (_, s2, _) = three_gaussian_measurements(&other).unwrap();
    assert!(matches!(reconstruct_three(&r1, &s2, &r3), Err(Error::InvalidArgument(_))));
    assert!(matches!(reconstruct_three(&r1, &r3, &r2), Err(Error::InvalidArgument(_))));
    assert!(matches!(recover_fprime_fbar(&r2, &r1, &r3), Err(Error::InvalidArgument(_))));
}

#[test]
fn classify_examples() {
    let phi = random_gaussian_weighted(grid(), &mut seeded_rng(9), 3);
    let v = classify_pair(&phi, &phi.scale(Complex64::new(0.0, 1.0))).unwrap();
    assert_eq!(v.kind, VerdictKind::GlobalPhase);
    assert!((v.constant.unwrap() - Complex64::new(0.0, 1.0)).norm() <= 1e-12);

    let (plus, minus) = bargmann_pair(grid());
    let v = classify_pair(&plus, &minus).unwrap();
    assert_eq!(v.kind, VerdictKind::ConjugateReflection);
    assert!((v.constant.unwrap().norm() - 1.0).abs() <= 1e-10);
    assert!(v.residual <= 1e-6);

    let gauss = GridSignal::from_fn(grid(), |t| Complex64::new((-PI * t * t).exp(), 0.0));
    let deriv = GridSignal::from_fn(grid(), |t| Complex64::new(2.0 * PI * t * (-PI * t * t).exp(), 0.0));
    let v = classify_pair(&gauss, &deriv).unwrap();
    assert_eq!(v.kind, VerdictKind::Distinct);
    assert!(v.constant.is_none());
    assert!(v.residual > 0.5);

    let z = GridSignal::zeros(grid());
    assert!(classify_pair(&z, &z).unwrap().is_global_phase());
    let v = classify_pair(&z, &phi).unwrap();
    assert_eq!((v.kind, v.residual), (VerdictKind::Distinct, 1.0));
    let other = GridSignal::zeros(Grid::new(64, 16.0).unwrap());
    assert!(classify_pair(&phi, &other).is_err());
}

#[test]
fn sine_counterexample_from_bump() {
    let g = Grid::new(2048, 16.0).unwrap();
    let phi = bump(g, 0.0, 1.0);
    let a = SineFrequency::rational(1, 1).unwrap();
    let psi = sine_rational_counterexample(&phi, a, 1, 1).unwrap();
    let (f1, f2, f3) = sine_measurements(&phi, a, a).unwrap();
    let (g1, g2, g3) = sine_measurements(&psi, a, a).unwrap();
    for (x, y) in [(f1, g1), (f2, g2), (f3, g3)] {
        assert!(x.sup_distance(&y) <= 1e-8);
    }
    assert_eq!(classify_pair(&phi, &psi).unwrap().kind, VerdictKind::Distinct);

    let b = SineFrequency::rational(5, 2).unwrap();
    let psi = sine_rational_counterexample(&phi, SineFrequency::rational(1, 2).unwrap(), 5, 1).unwrap();
    let (f1, f2, f3) = sine_measurements(&phi, SineFrequency::rational(1, 2).unwrap(), b).unwrap();
    let (g1, g2, g3) = sine_measurements(&psi, SineFrequency::rational(1, 2).unwrap(), b).unwrap();
    for (x, y) in [(f1, g1), (f2, g2), (f3, g3)] {
        assert!(x.sup_distance(&y) <= 1e-8);
    }
}

#[test]
fn sine_counterexample_edge_cases() {
    let g = Grid::new(256, 16.0).unwrap();
    let a = SineFrequency::rational(1, 1).unwrap();
    let zero = GridSignal::zeros(g);
    let psi = sine_rational_counterexample(&zero, a, 1, 1).unwrap();
    assert!(psi.values().iter().all(|v| v.norm() == 0.0));
    let phi = bump(g, 0.0, 1.0);
    assert!(matches!(
        sine_rational_counterexample(&phi, a, 1, 0),
        Err(Error::InvalidArgument(_))
    ));
    // beta = 1/3 is not a multiple of the spacing 1/16
    assert!(sine_rational_counterexample(&phi, SineFrequency::rational(3, 1).unwrap(), 1, 1).is_err());
}

#[test]
fn gradient_of_modulus_equals_derivative_modulus() {
    let phi = random_gaussian_weighted(Grid::new(512, 16.0).unwrap(), &mut seeded_rng(12), 4);
    let spec = AnalyticSpectrum::new(&phi, &MaskKind::Gauss).unwrap();
    let mut rng = seeded_rng(13);
    for _ in 0..20 {
        let z = Complex64::new(rng.random_range(-1.5..1.5), rng.random_range(0.1..1.0) * if rng.random::<bool>() { 1.0 } else { -1.0 });
        let (gx, gy) = spec.modulus_gradient(z, 1e-5);
        let want = spec.derivative(z).norm();
        assert!((gx.hypot(gy) - want).abs() <= 1e-4 * want.max(1.0));
    }
}

#[test]
fn analytic_spectrum_agrees_with_records_on_the_axis() {
    let phi = random_gaussian_weighted(Grid::new(256, 16.0).unwrap(), &mut seeded_rng(14), 2);
    let spec = AnalyticSpectrum::new(&phi, &MaskKind::GaussDeriv).unwrap();
    let rec = coded_diffraction(&phi, &MaskKind::GaussDeriv).unwrap();
    for (j, xi) in rec.frequency_grid().points().enumerate().step_by(11) {
        assert!((spec.value(Complex64::new(xi, 0.0)).norm() - rec.magnitudes[j]).abs() <= 1e-12);
    }
}
