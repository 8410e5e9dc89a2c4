//! C ABI over `phaseret`.
//!
//! Objects cross the boundary as opaque handles created by `*_new`/`*_from_*`
//! functions and released with the matching `*_free`. Every fallible call
//! returns a [`PhaseretStatus`]; on failure the message is available from
//! [`phaseret_last_error_message`] on the same thread. Strings handed out by
//! the library are released with [`phaseret_string_free`].

use num_complex::Complex64;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use phaseret::ambiguity::{enumerate_ambiguities, filter_by_measurements};
use phaseret::experiments::{random_gaussian_weighted, seeded_rng};
use phaseret::grid_signal::{bargmann_pair, eval_mask, Grid, GridSignal, MaskKind, SineFrequency};
use phaseret::measurement::{sine_measurements, three_gaussian_measurements, MeasurementRecord};
use phaseret::reconstruct::{classify_pair_with_tol, reconstruct_three};
use phaseret::trigpoly::{
    classify_poly_pair, counterexample_continuous, counterexample_discrete, interpolate_sq_modulus,
    sample_measurements, SampleKind, TrigPoly,
};
use phaseret::{io, EquivalenceVerdict, Error, VerdictKind};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhaseretStatus {
    Ok = 0,
    InvalidArgument = 1,
    DegenerateSignal = 2,
    NotCircleEqual = 3,
    ResourceLimit = 4,
    Io = 5,
    Json = 6,
    NullPointer = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhaseretVerdictKind {
    GlobalPhase = 0,
    ConjugateReflection = 1,
    Distinct = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhaseretSampleKind {
    ContinuousDeriv = 0,
    DiscreteDeriv = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PhaseretComplex {
    pub re: f64,
    pub im: f64,
}

/// `constant` is meaningful only when `has_constant` is true.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseretVerdict {
    pub kind: PhaseretVerdictKind,
    pub has_constant: bool,
    pub constant: PhaseretComplex,
    pub residual: f64,
}

pub struct PhaseretSignal(GridSignal);
pub struct PhaseretRecord(MeasurementRecord);
pub struct PhaseretPoly(TrigPoly);
pub struct PhaseretPolyList(Vec<TrigPoly>);

enum Failure {
    Lib(Error),
    Null(&'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PhaseretStatus {
    match e {
        Error::InvalidArgument(_) => PhaseretStatus::InvalidArgument,
        Error::DegenerateSignal(_) => PhaseretStatus::DegenerateSignal,
        Error::NotCircleEqual(_) => PhaseretStatus::NotCircleEqual,
        Error::ResourceLimit(_) => PhaseretStatus::ResourceLimit,
        Error::Io(_) => PhaseretStatus::Io,
        Error::Json(_) => PhaseretStatus::Json,
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PhaseretStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            PhaseretStatus::Ok
        }
        Ok(Err(Failure::Lib(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_last_error(format!("null pointer: {what}"));
            PhaseretStatus::NullPointer
        }
        Err(_) => {
            set_last_error("internal panic".into());
            PhaseretStatus::Panic
        }
    }
}

unsafe fn as_ref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T, what: &'static str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null(what));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &'static str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn slice_mut<'a, T>(p: *mut T, len: usize, what: &'static str) -> Result<&'a mut [T], Failure> {
    if len == 0 {
        return Ok(&mut []);
    }
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    Ok(std::slice::from_raw_parts_mut(p, len))
}

unsafe fn read_str<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Lib(Error::InvalidArgument(format!("{what} is not valid UTF-8"))))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null("string output"));
    }
    *out = CString::new(s)
        .map_err(|_| Failure::Lib(Error::InvalidArgument("string contains NUL".into())))?
        .into_raw();
    Ok(())
}

fn copy_exact<T: Copy>(src: &[T], dst: &mut [T]) -> Result<(), Failure> {
    if dst.len() != src.len() {
        return Err(Failure::Lib(Error::InvalidArgument(format!(
            "buffer holds {} elements, expected {}",
            dst.len(),
            src.len()
        ))));
    }
    dst.copy_from_slice(src);
    Ok(())
}

fn to_c(z: Complex64) -> PhaseretComplex {
    PhaseretComplex { re: z.re, im: z.im }
}

fn from_c(z: &PhaseretComplex) -> Complex64 {
    Complex64::new(z.re, z.im)
}

fn verdict_to_c(v: &EquivalenceVerdict) -> PhaseretVerdict {
    PhaseretVerdict {
        kind: match v.kind {
            VerdictKind::GlobalPhase => PhaseretVerdictKind::GlobalPhase,
            VerdictKind::ConjugateReflection => PhaseretVerdictKind::ConjugateReflection,
            VerdictKind::Distinct => PhaseretVerdictKind::Distinct,
        },
        has_constant: v.constant.is_some(),
        constant: to_c(v.constant.unwrap_or_default()),
        residual: v.residual,
    }
}

fn sample_kind(k: PhaseretSampleKind) -> SampleKind {
    match k {
        PhaseretSampleKind::ContinuousDeriv => SampleKind::ContinuousDeriv,
        PhaseretSampleKind::DiscreteDeriv => SampleKind::DiscreteDeriv,
    }
}

/// Message of the last failed call on this thread, or NULL. Release with
/// [`phaseret_string_free`].
#[no_mangle]
pub extern "C" fn phaseret_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn phaseret_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- signals ----

/// # Safety
/// `values` must point to `n` elements; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_signal_new(
    n: usize,
    extent: f64,
    values: *const PhaseretComplex,
    out: *mut *mut PhaseretSignal,
) -> PhaseretStatus {
    guard(|| {
        let vals = slice(values, n, "values")?.iter().map(from_c).collect();
        let sig = GridSignal::new(Grid::new(n, extent)?, vals)?;
        write_out(out, PhaseretSignal(sig), "out")
    })
}

/// `exp(-pi t^2)` on the grid.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_signal_gauss(n: usize, extent: f64, out: *mut *mut PhaseretSignal) -> PhaseretStatus {
    guard(|| {
        let grid = Grid::new(n, extent)?;
        write_out(out, PhaseretSignal(eval_mask(&MaskKind::Gauss, &grid)?), "out")
    })
}

/// Gaussian times a seeded random complex polynomial of degree `1..=max_degree`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_signal_random(
    n: usize,
    extent: f64,
    seed: u64,
    max_degree: usize,
    out: *mut *mut PhaseretSignal,
) -> PhaseretStatus {
    guard(|| {
        let grid = Grid::new(n, extent)?;
        let sig = random_gaussian_weighted(grid, &mut seeded_rng(seed), max_degree);
        write_out(out, PhaseretSignal(sig), "out")
    })
}

/// # Safety
/// Both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_bargmann_pair(
    n: usize,
    extent: f64,
    out_plus: *mut *mut PhaseretSignal,
    out_minus: *mut *mut PhaseretSignal,
) -> PhaseretStatus {
    guard(|| {
        if out_plus.is_null() || out_minus.is_null() {
            return Err(Failure::Null("out"));
        }
        let (p, m) = bargmann_pair(Grid::new(n, extent)?);
        write_out(out_plus, PhaseretSignal(p), "out_plus")?;
        write_out(out_minus, PhaseretSignal(m), "out_minus")
    })
}

/// Number of samples, or 0 for NULL.
///
/// # Safety
/// `sig` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn phaseret_signal_len(sig: *const PhaseretSignal) -> usize {
    sig.as_ref().map_or(0, |s| s.0.values().len())
}

/// Copies the samples into `buf`, which must hold exactly `len` elements.
///
/// # Safety
/// `sig` must be a live handle and `buf` must point to `len` writable elements.
#[no_mangle]
pub unsafe extern "C" fn phaseret_signal_values(
    sig: *const PhaseretSignal,
    buf: *mut PhaseretComplex,
    len: usize,
) -> PhaseretStatus {
    guard(|| {
        let s = as_ref(sig, "signal")?;
        let vals: Vec<PhaseretComplex> = s.0.values().iter().map(|&z| to_c(z)).collect();
        copy_exact(&vals, slice_mut(buf, len, "buf")?)
    })
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_signal_from_json(json: *const c_char, out: *mut *mut PhaseretSignal) -> PhaseretStatus {
    guard(|| {
        let sig = io::signal_from_json(read_str(json, "json")?)?;
        write_out(out, PhaseretSignal(sig), "out")
    })
}

/// # Safety
/// `sig` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_signal_to_json(sig: *const PhaseretSignal, out: *mut *mut c_char) -> PhaseretStatus {
    guard(|| write_string(out, io::signal_to_json(&as_ref(sig, "signal")?.0)?))
}

/// # Safety
/// `sig` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn phaseret_signal_free(sig: *mut PhaseretSignal) {
    if !sig.is_null() {
        drop(Box::from_raw(sig));
    }
}

// ---- measurements ----

/// Records for the Gaussian, `2 pi t` Gaussian and `(1 - 2 pi t)` Gaussian masks.
///
/// # Safety
/// `sig` must be a live handle; the three outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_measure_gaussian(
    sig: *const PhaseretSignal,
    out1: *mut *mut PhaseretRecord,
    out2: *mut *mut PhaseretRecord,
    out3: *mut *mut PhaseretRecord,
) -> PhaseretStatus {
    guard(|| {
        if out1.is_null() || out2.is_null() || out3.is_null() {
            return Err(Failure::Null("out"));
        }
        let (a, b, c) = three_gaussian_measurements(&as_ref(sig, "signal")?.0)?;
        write_out(out1, PhaseretRecord(a), "out1")?;
        write_out(out2, PhaseretRecord(b), "out2")?;
        write_out(out3, PhaseretRecord(c), "out3")
    })
}

/// Records for the Gaussian and the sine masks with frequencies `a_num/a_den`, `b_num/b_den`.
///
/// # Safety
/// `sig` must be a live handle; the three outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_measure_sine(
    sig: *const PhaseretSignal,
    a_num: i64,
    a_den: i64,
    b_num: i64,
    b_den: i64,
    out1: *mut *mut PhaseretRecord,
    out2: *mut *mut PhaseretRecord,
    out3: *mut *mut PhaseretRecord,
) -> PhaseretStatus {
    guard(|| {
        if out1.is_null() || out2.is_null() || out3.is_null() {
            return Err(Failure::Null("out"));
        }
        let a = SineFrequency::rational(a_num, a_den)?;
        let b = SineFrequency::rational(b_num, b_den)?;
        let (r1, r2, r3) = sine_measurements(&as_ref(sig, "signal")?.0, a, b)?;
        write_out(out1, PhaseretRecord(r1), "out1")?;
        write_out(out2, PhaseretRecord(r2), "out2")?;
        write_out(out3, PhaseretRecord(r3), "out3")
    })
}

/// # Safety
/// `rec` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn phaseret_record_len(rec: *const PhaseretRecord) -> usize {
    rec.as_ref().map_or(0, |r| r.0.magnitudes.len())
}

/// # Safety
/// `rec` must be a live handle and `buf` must point to `len` writable elements.
#[no_mangle]
pub unsafe extern "C" fn phaseret_record_magnitudes(
    rec: *const PhaseretRecord,
    buf: *mut f64,
    len: usize,
) -> PhaseretStatus {
    guard(|| copy_exact(&as_ref(rec, "record")?.0.magnitudes, slice_mut(buf, len, "buf")?))
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_record_from_json(json: *const c_char, out: *mut *mut PhaseretRecord) -> PhaseretStatus {
    guard(|| {
        let rec = io::record_from_json(read_str(json, "json")?)?;
        write_out(out, PhaseretRecord(rec), "out")
    })
}

/// # Safety
/// `rec` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_record_to_json(rec: *const PhaseretRecord, out: *mut *mut c_char) -> PhaseretStatus {
    guard(|| write_string(out, io::record_to_json(&as_ref(rec, "record")?.0)?))
}

/// # Safety
/// `rec` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn phaseret_record_free(rec: *mut PhaseretRecord) {
    if !rec.is_null() {
        drop(Box::from_raw(rec));
    }
}

// ---- reconstruction ----

/// Recovers the signal up to a global phase from the three Gaussian records.
///
/// # Safety
/// The records must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_reconstruct(
    r1: *const PhaseretRecord,
    r2: *const PhaseretRecord,
    r3: *const PhaseretRecord,
    out: *mut *mut PhaseretSignal,
) -> PhaseretStatus {
    guard(|| {
        let sig = reconstruct_three(&as_ref(r1, "r1")?.0, &as_ref(r2, "r2")?.0, &as_ref(r3, "r3")?.0)?;
        write_out(out, PhaseretSignal(sig), "out")
    })
}

/// # Safety
/// Both signals must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_classify(
    a: *const PhaseretSignal,
    b: *const PhaseretSignal,
    tol: f64,
    out: *mut PhaseretVerdict,
) -> PhaseretStatus {
    guard(|| {
        let v = classify_pair_with_tol(&as_ref(a, "a")?.0, &as_ref(b, "b")?.0, tol)?;
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        *out = verdict_to_c(&v);
        Ok(())
    })
}

// ---- trigonometric polynomials ----

/// # Safety
/// `coeffs` must point to `n` elements; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_poly_new(
    coeffs: *const PhaseretComplex,
    n: usize,
    out: *mut *mut PhaseretPoly,
) -> PhaseretStatus {
    guard(|| {
        let p = TrigPoly::new(slice(coeffs, n, "coeffs")?.iter().map(from_c).collect())?;
        write_out(out, PhaseretPoly(p), "out")
    })
}

/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn phaseret_poly_len(p: *const PhaseretPoly) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// # Safety
/// `p` must be a live handle and `buf` must point to `len` writable elements.
#[no_mangle]
pub unsafe extern "C" fn phaseret_poly_coeffs(p: *const PhaseretPoly, buf: *mut PhaseretComplex, len: usize) -> PhaseretStatus {
    guard(|| {
        let c: Vec<PhaseretComplex> = as_ref(p, "poly")?.0.coeffs().iter().map(|&z| to_c(z)).collect();
        copy_exact(&c, slice_mut(buf, len, "buf")?)
    })
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_poly_from_json(json: *const c_char, out: *mut *mut PhaseretPoly) -> PhaseretStatus {
    guard(|| {
        let p = io::poly_from_json(read_str(json, "json")?)?;
        write_out(out, PhaseretPoly(p), "out")
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_poly_to_json(p: *const PhaseretPoly, out: *mut *mut c_char) -> PhaseretStatus {
    guard(|| write_string(out, io::poly_to_json(&as_ref(p, "poly")?.0)?))
}

/// # Safety
/// `p` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn phaseret_poly_free(p: *mut PhaseretPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// The explicit pair for odd `n >= 3` whose samples agree at `M = 2n - 2` points.
///
/// # Safety
/// Both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_counterexample(
    n: usize,
    kind: PhaseretSampleKind,
    out_phi: *mut *mut PhaseretPoly,
    out_psi: *mut *mut PhaseretPoly,
) -> PhaseretStatus {
    guard(|| {
        if out_phi.is_null() || out_psi.is_null() {
            return Err(Failure::Null("out"));
        }
        let (p, q) = match kind {
            PhaseretSampleKind::ContinuousDeriv => counterexample_continuous(n)?,
            PhaseretSampleKind::DiscreteDeriv => counterexample_discrete(n)?,
        };
        write_out(out_phi, PhaseretPoly(p), "out_phi")?;
        write_out(out_psi, PhaseretPoly(q), "out_psi")
    })
}

/// # Safety
/// Both polynomials must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_poly_classify(
    p: *const PhaseretPoly,
    q: *const PhaseretPoly,
    out: *mut PhaseretVerdict,
) -> PhaseretStatus {
    guard(|| {
        let v = classify_poly_pair(&as_ref(p, "p")?.0, &as_ref(q, "q")?.0);
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        *out = verdict_to_c(&v);
        Ok(())
    })
}

/// Writes `|P(k/m)|` to `modulus` and the derivative quantity of `kind` to
/// `derivative`; both buffers hold `m` values.
///
/// # Safety
/// `p` must be a live handle and both buffers must point to `m` writable elements.
#[no_mangle]
pub unsafe extern "C" fn phaseret_poly_sample(
    p: *const PhaseretPoly,
    m: usize,
    kind: PhaseretSampleKind,
    modulus: *mut f64,
    derivative: *mut f64,
) -> PhaseretStatus {
    guard(|| {
        let s = sample_measurements(&as_ref(p, "poly")?.0, m, sample_kind(kind))?;
        copy_exact(&s.modulus, slice_mut(modulus, m, "modulus")?)?;
        copy_exact(&s.derivative, slice_mut(derivative, m, "derivative")?)
    })
}

/// Autocorrelation coefficients from `count = 2N - 1` samples of `|P|`; `out`
/// holds `count` values.
///
/// # Safety
/// `samples` must point to `count` elements and `out` to `count` writable elements.
#[no_mangle]
pub unsafe extern "C" fn phaseret_interpolate_sq_modulus(
    samples: *const f64,
    count: usize,
    out: *mut PhaseretComplex,
) -> PhaseretStatus {
    guard(|| {
        let a = interpolate_sq_modulus(slice(samples, count, "samples")?)?;
        let c: Vec<PhaseretComplex> = a.c.iter().map(|&z| to_c(z)).collect();
        copy_exact(&c, slice_mut(out, count, "out")?)
    })
}

// ---- ambiguity lists ----

/// All zero-flip ambiguities of `p` up to global phase, `p` first.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_enumerate_ambiguities(p: *const PhaseretPoly, out: *mut *mut PhaseretPolyList) -> PhaseretStatus {
    guard(|| {
        let list = enumerate_ambiguities(&as_ref(p, "poly")?.0)?;
        write_out(out, PhaseretPolyList(list), "out")
    })
}

/// Members of `list` whose samples at `m` points match those of `reference` within `tol`.
///
/// # Safety
/// `list` and `reference` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_poly_list_filter(
    list: *const PhaseretPolyList,
    m: usize,
    kind: PhaseretSampleKind,
    reference: *const PhaseretPoly,
    tol: f64,
    out: *mut *mut PhaseretPolyList,
) -> PhaseretStatus {
    guard(|| {
        let kind = sample_kind(kind);
        let samples = sample_measurements(&as_ref(reference, "reference")?.0, m, kind)?;
        let kept = filter_by_measurements(&as_ref(list, "list")?.0, m, kind, &samples, tol)?;
        write_out(out, PhaseretPolyList(kept), "out")
    })
}

/// # Safety
/// `list` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn phaseret_poly_list_len(list: *const PhaseretPolyList) -> usize {
    list.as_ref().map_or(0, |l| l.0.len())
}

/// Copy of entry `index` as a new polynomial handle.
///
/// # Safety
/// `list` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_poly_list_get(
    list: *const PhaseretPolyList,
    index: usize,
    out: *mut *mut PhaseretPoly,
) -> PhaseretStatus {
    guard(|| {
        let l = &as_ref(list, "list")?.0;
        let p = l.get(index).cloned().ok_or_else(|| {
            Failure::Lib(Error::InvalidArgument(format!("index {index} out of range ({} entries)", l.len())))
        })?;
        write_out(out, PhaseretPoly(p), "out")
    })
}

/// # Safety
/// `list` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn phaseret_poly_list_to_json(list: *const PhaseretPolyList, out: *mut *mut c_char) -> PhaseretStatus {
    guard(|| write_string(out, io::polys_to_json(&as_ref(list, "list")?.0)?))
}

/// # Safety
/// `list` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn phaseret_poly_list_free(list: *mut PhaseretPolyList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}
