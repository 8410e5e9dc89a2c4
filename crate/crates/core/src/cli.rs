//! Command-line front end. Exit codes: 0 on success, 2 for invalid input or
//! I/O failures, 3 when the data are mathematically degenerate.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::ambiguity::{enumerate_ambiguities, filter_by_measurements};
use crate::equivalence::{unit_phase, EquivalenceVerdict};
use crate::error::{Error, Result};
use crate::experiments::{bump, random_gaussian_weighted, seeded_rng, sufficiency_experiment, SufficiencyTrial};
use crate::grid_signal::{
    bargmann_pair, fourier, Grid, GridSignal, SineFrequency, DEFAULT_EXTENT, DEFAULT_N,
};
use crate::io;
use crate::measurement::{sine_measurements, three_gaussian_measurements};
use crate::reconstruct::{classify_pair_with_tol, reconstruct_three_with, ReconstructOptions, DEFAULT_CLASSIFY_TOL};
use crate::trigpoly::{
    classify_poly_pair, counterexample_continuous, counterexample_discrete, sample_measurements,
    SampleKind, TrigPoly,
};

pub const THREADS_ENV: &str = "PHASERET_THREADS";

#[derive(Debug, Parser)]
#[command(name = "phaseret", version, about = "Phase retrieval experiments on the line and on the circle")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a test signal.
    Signal(SignalArgs),
    /// Simulate three coded diffraction patterns of a signal.
    Measure(MeasureArgs),
    /// Recover a signal from its three Gaussian records.
    Reconstruct(ReconstructArgs),
    /// Compare two signals modulo global phase and conjugate reflection.
    Classify(ClassifyArgs),
    /// Check the complex Gaussian pair sharing both Pauli magnitudes.
    Bargmann(GridArgs),
    /// Sampling experiments for analytic trigonometric polynomials.
    #[command(subcommand)]
    Discrete(DiscreteCommand),
}

#[derive(Debug, Args, Clone, Copy)]
pub struct GridArgs {
    #[arg(long, default_value_t = DEFAULT_N)]
    pub n: usize,
    #[arg(long, default_value_t = DEFAULT_EXTENT)]
    pub extent: f64,
}

impl GridArgs {
    fn grid(&self) -> Result<Grid> {
        Grid::new(self.n, self.extent)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignalFamily {
    /// `exp(-pi t^2)`
    Gauss,
    /// Gaussian times a random complex polynomial.
    Random,
    /// Compactly supported bump on `[-1, 1]`.
    Bump,
}

#[derive(Debug, Args)]
pub struct SignalArgs {
    #[arg(long, value_enum, default_value_t = SignalFamily::Gauss)]
    pub family: SignalFamily,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest polynomial degree for the random family.
    #[arg(long, default_value_t = 5)]
    pub degree: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MaskFamily {
    Gauss,
    Sine,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    /// Signal JSON file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = MaskFamily::Gauss)]
    pub family: MaskFamily,
    /// First sine frequency, `p/q` or a decimal.
    #[arg(long)]
    pub a: Option<SineFrequency>,
    /// Second sine frequency.
    #[arg(long)]
    pub b: Option<SineFrequency>,
    /// Output directory for `record1.json`, `record2.json`, `record3.json`.
    #[arg(long)]
    pub out: PathBuf,
    /// Also write `recordK.csv`.
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    /// The Gaussian, `2 pi t` Gaussian and `(1 - 2 pi t)` Gaussian records, in order.
    #[arg(long, num_args = 3, required = true)]
    pub records: Vec<PathBuf>,
    /// Signal to compare against.
    #[arg(long)]
    pub truth: Option<PathBuf>,
    #[arg(long)]
    pub zero_tol: Option<f64>,
    /// Where to write the reconstructed signal.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub first: PathBuf,
    #[arg(long)]
    pub second: PathBuf,
    #[arg(long, default_value_t = DEFAULT_CLASSIFY_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Continuous,
    Discrete,
}

impl From<KindArg> for SampleKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Continuous => SampleKind::ContinuousDeriv,
            KindArg::Discrete => SampleKind::DiscreteDeriv,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum DiscreteCommand {
    /// Random trials at `M = 2N - 1`: every surviving ambiguity should be trivial.
    Sufficiency {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Continuous)]
        kind: KindArg,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The explicit non-equivalent pair sampled at `M = 2N - 2`.
    Counterexample {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Continuous)]
        kind: KindArg,
        /// Directory for both polynomials and their sample CSVs.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the zero-flip ambiguities of a polynomial and filter them by samples.
    Oracle {
        /// Polynomial JSON file.
        #[arg(long)]
        input: PathBuf,
        /// Sample count; defaults to `2N - 1`.
        #[arg(long = "M")]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = KindArg::Continuous)]
        kind: KindArg,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Where to write the surviving candidates.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::DegenerateSignal(_) | Error::NotCircleEqual(_) => 3,
        _ => 2,
    }
}

fn emit<T: Serialize>(report: &T, out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    let text = serde_json::to_string_pretty(report)?;
    match out {
        Some(path) => io::write_text(path, &(text + "\n")),
        None => Ok(writeln!(stdout, "{text}")?),
    }
}

fn kind_name(kind: SampleKind) -> &'static str {
    match kind {
        SampleKind::ContinuousDeriv => "continuous",
        SampleKind::DiscreteDeriv => "discrete",
    }
}

fn sup_gap(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn cmd_signal(args: &SignalArgs) -> Result<()> {
    let grid = args.grid.grid()?;
    let sig = match args.family {
        SignalFamily::Gauss => {
            GridSignal::from_fn(grid, |t| Complex64::new((-std::f64::consts::PI * t * t).exp(), 0.0))
        }
        SignalFamily::Random => random_gaussian_weighted(grid, &mut seeded_rng(args.seed), args.degree),
        SignalFamily::Bump => bump(grid, 0.0, 1.0),
    };
    io::write_signal(&args.out, &sig)
}

#[derive(Serialize)]
struct MeasureReport {
    family: &'static str,
    records: Vec<String>,
}

fn cmd_measure(args: &MeasureArgs, stdout: &mut dyn Write) -> Result<()> {
    let phi = io::read_signal(&args.input)?;
    let (r1, r2, r3) = match args.family {
        MaskFamily::Gauss => three_gaussian_measurements(&phi)?,
        MaskFamily::Sine => {
            let (a, b) = args
                .a
                .zip(args.b)
                .ok_or_else(|| Error::invalid("the sine family needs both --a and --b"))?;
            sine_measurements(&phi, a, b)?
        }
    };
    std::fs::create_dir_all(&args.out)?;
    let mut records = Vec::new();
    for (i, r) in [r1, r2, r3].iter().enumerate() {
        let path = args.out.join(format!("record{}.json", i + 1));
        io::write_record(&path, r)?;
        records.push(path.display().to_string());
        if args.csv {
            io::write_record_csv(&args.out.join(format!("record{}.csv", i + 1)), r)?;
        }
    }
    let family = match args.family {
        MaskFamily::Gauss => "gauss",
        MaskFamily::Sine => "sine",
    };
    emit(&MeasureReport { family, records }, None, stdout)
}

#[derive(Serialize)]
struct ReconstructReport {
    n: usize,
    extent: f64,
    norm: f64,
    /// Relative L2 error after aligning the global phase.
    residual: Option<f64>,
    verdict: Option<EquivalenceVerdict>,
}

fn cmd_reconstruct(args: &ReconstructArgs, stdout: &mut dyn Write) -> Result<()> {
    let recs = args
        .records
        .iter()
        .map(|p| io::read_record(p))
        .collect::<Result<Vec<_>>>()?;
    let mut opts = ReconstructOptions::default();
    if let Some(z) = args.zero_tol {
        if !(z.is_finite() && z >= 0.0) {
            return Err(Error::invalid("--zero-tol must be nonnegative"));
        }
        opts.zero_tol = z;
    }
    let rec = reconstruct_three_with(&recs[0], &recs[1], &recs[2], &opts)?;
    let (residual, verdict) = match &args.truth {
        Some(path) => {
            let truth = io::read_signal(path)?;
            let c = unit_phase(truth.inner(&rec)?);
            let scale = truth.norm();
            let diff = rec.sub_scaled(c, &truth)?.norm();
            let residual = if scale > 0.0 { diff / scale } else { diff };
            (Some(residual), Some(classify_pair_with_tol(&truth, &rec, 1e-3)?))
        }
        None => (None, None),
    };
    if let Some(out) = &args.out {
        io::write_signal(out, &rec)?;
    }
    let report = ReconstructReport {
        n: rec.grid().n(),
        extent: rec.grid().extent(),
        norm: rec.norm(),
        residual,
        verdict,
    };
    emit(&report, None, stdout)
}

fn cmd_classify(args: &ClassifyArgs, stdout: &mut dyn Write) -> Result<()> {
    let a = io::read_signal(&args.first)?;
    let b = io::read_signal(&args.second)?;
    let verdict = classify_pair_with_tol(&a, &b, args.tol)?;
    emit(&verdict, args.out.as_deref(), stdout)
}

#[derive(Serialize)]
struct BargmannReport {
    n: usize,
    extent: f64,
    modulus_gap: f64,
    spectrum_modulus_gap: f64,
    verdict: EquivalenceVerdict,
}

fn cmd_bargmann(args: &GridArgs, stdout: &mut dyn Write) -> Result<()> {
    let grid = args.grid()?;
    let (plus, minus) = bargmann_pair(grid);
    let gap = |a: &GridSignal, b: &GridSignal| {
        a.values()
            .iter()
            .zip(b.values())
            .map(|(x, y)| (x.norm() - y.norm()).abs())
            .fold(0.0, f64::max)
    };
    let report = BargmannReport {
        n: grid.n(),
        extent: grid.extent(),
        modulus_gap: gap(&plus, &minus),
        spectrum_modulus_gap: gap(&fourier(&plus), &fourier(&minus)),
        verdict: classify_pair_with_tol(&plus, &minus, DEFAULT_CLASSIFY_TOL)?,
    };
    emit(&report, None, stdout)
}

#[derive(Serialize)]
struct SufficiencyReport {
    #[serde(rename = "N")]
    n: usize,
    #[serde(rename = "M")]
    m: usize,
    kind: &'static str,
    tol: f64,
    seed: u64,
    all_global_phase: bool,
    trials: Vec<SufficiencyTrial>,
}

#[derive(Serialize)]
struct CounterexampleReport {
    #[serde(rename = "N")]
    n: usize,
    #[serde(rename = "M")]
    m: usize,
    kind: &'static str,
    phi: Vec<Complex64>,
    psi: Vec<Complex64>,
    max_sample_gap: f64,
    verdict: EquivalenceVerdict,
}

#[derive(Serialize)]
struct OracleReport {
    #[serde(rename = "N")]
    n: usize,
    #[serde(rename = "M")]
    m: usize,
    kind: &'static str,
    tol: f64,
    candidates: usize,
    survivors: usize,
    nonequivalent_survivors: usize,
}

fn cmd_discrete(cmd: &DiscreteCommand, stdout: &mut dyn Write) -> Result<()> {
    match cmd {
        DiscreteCommand::Sufficiency { n, trials, kind, tol, seed, out } => {
            if *n == 0 {
                return Err(Error::invalid("N must be positive"));
            }
            let kind = SampleKind::from(*kind);
            let runs = sufficiency_experiment(*n, *trials, kind, *tol, *seed)?;
            let report = SufficiencyReport {
                n: *n,
                m: 2 * n - 1,
                kind: kind_name(kind),
                tol: *tol,
                seed: *seed,
                all_global_phase: runs.iter().all(|t| t.nonequivalent_survivors == 0),
                trials: runs,
            };
            emit(&report, out.as_deref(), stdout)
        }
        DiscreteCommand::Counterexample { n, kind, out } => {
            let kind = SampleKind::from(*kind);
            let (phi, psi) = match kind {
                SampleKind::ContinuousDeriv => counterexample_continuous(*n)?,
                SampleKind::DiscreteDeriv => counterexample_discrete(*n)?,
            };
            let m = 2 * n - 2;
            let sp = sample_measurements(&phi, m, kind)?;
            let sq = sample_measurements(&psi, m, kind)?;
            if let Some(dir) = out {
                std::fs::create_dir_all(dir)?;
                io::write_poly(&dir.join("phi.json"), &phi)?;
                io::write_poly(&dir.join("psi.json"), &psi)?;
                for (name, s) in [("phi", &sp), ("psi", &sq)] {
                    io::write_text(&dir.join(format!("{name}_modulus.csv")), &io::samples_csv(&s.modulus))?;
                    io::write_text(&dir.join(format!("{name}_derivative.csv")), &io::samples_csv(&s.derivative))?;
                }
            }
            let report = CounterexampleReport {
                n: *n,
                m,
                kind: kind_name(kind),
                phi: phi.coeffs().to_vec(),
                psi: psi.coeffs().to_vec(),
                max_sample_gap: sup_gap(&sp.modulus, &sq.modulus).max(sup_gap(&sp.derivative, &sq.derivative)),
                verdict: classify_poly_pair(&phi, &psi),
            };
            emit(&report, None, stdout)
        }
        DiscreteCommand::Oracle { input, m, kind, tol, out } => {
            let p: TrigPoly = io::read_poly(input)?;
            let kind = SampleKind::from(*kind);
            let m = m.unwrap_or(2 * p.len() - 1);
            let candidates = enumerate_ambiguities(&p)?;
            let reference = sample_measurements(&p, m, kind)?;
            let survivors = filter_by_measurements(&candidates, m, kind, &reference, *tol)?;
            if let Some(path) = out {
                io::write_text(path, &io::polys_to_json(&survivors)?)?;
            }
            let report = OracleReport {
                n: p.len(),
                m,
                kind: kind_name(kind),
                tol: *tol,
                candidates: candidates.len(),
                survivors: survivors.len(),
                nonequivalent_survivors: survivors
                    .iter()
                    .filter(|q| !classify_poly_pair(&p, q).is_global_phase())
                    .count(),
            };
            emit(&report, None, stdout)
        }
    }
}

pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Signal(a) => cmd_signal(a),
        Command::Measure(a) => cmd_measure(a, stdout),
        Command::Reconstruct(a) => cmd_reconstruct(a, stdout),
        Command::Classify(a) => cmd_classify(a, stdout),
        Command::Bargmann(a) => cmd_bargmann(a, stdout),
        Command::Discrete(c) => cmd_discrete(c, stdout),
    }
}

/// Caps the global thread pool at `PHASERET_THREADS` when set.
pub fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Error::invalid(format!("{THREADS_ENV} must be a positive integer, got '{value}'")))?;
    // a pool built earlier in the process wins
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

/// Parses the process arguments, runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = configure_threads().and_then(|_| run(&cli, &mut std::io::stdout().lock()));
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
