//! C ABI over `surgery_gate`.
//!
//! Every entry point returns an [`SgStatus`]; results go through out
//! pointers. Knot tables live behind the opaque [`SgKnotTable`] handle.
//! After a non-`OK` status, [`sg_last_error`] describes the failure on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::{c_char, c_int};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use surgery_gate::arith::{dedekind_sum, Rational, Slope};
use surgery_gate::classical::{casson_gordon, casson_walker};
use surgery_gate::cone::{d_surgery_signed, Determination};
use surgery_gate::cosmetic::{check_knot, Verdict};
use surgery_gate::io::{find_knot, parse_knot_file, parse_knot_str};
use surgery_gate::knot::KnotData;
use surgery_gate::lens::{d_lens, lambda_lens, LensSpace};
use surgery_gate::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Validation = 4,
    NotFound = 5,
    /// The inputs do not determine the value (e.g. a missing mirror profile).
    Indeterminate = 6,
    /// The value does not fit the `int64_t` fields of [`SgRational`].
    Overflow = 7,
    NearSingular = 8,
    Io = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SgVerdict {
    Obstructed = 0,
    NotObstructed = 1,
    Indeterminate = 2,
}

/// `num / den` in lowest terms, `den > 0`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SgRational {
    pub num: i64,
    pub den: i64,
}

/// Parsed, validated knot table.
pub struct SgKnotTable {
    knots: Vec<KnotData>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SgStatus {
    match e {
        Error::Parse { .. } => SgStatus::Parse,
        Error::Validation { .. } | Error::DuplicateName(_) | Error::InvalidAlexander(_) | Error::InvalidSeifert(_) => {
            SgStatus::Validation
        }
        Error::UnknownKnot(_) => SgStatus::NotFound,
        Error::NearSingular { .. } => SgStatus::NearSingular,
        Error::MissingSeifert(_) | Error::HypothesisFailed(_) | Error::Unsupported(_) => SgStatus::Indeterminate,
        Error::Io(_) => SgStatus::Io,
        _ => SgStatus::InvalidArgument,
    }
}

/// Runs `f`, turning errors and panics into a status and a message.
fn guard(f: impl FnOnce() -> Result<(), (SgStatus, String)>) -> SgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SgStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SgStatus::Panic
        }
    }
}

fn lift<T>(r: surgery_gate::Result<T>) -> Result<T, (SgStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn to_c(r: &Rational) -> Result<SgRational, (SgStatus, String)> {
    r.to_i64_pair()
        .map(|(num, den)| SgRational { num, den })
        .ok_or((SgStatus::Overflow, format!("{} does not fit in int64", r.to_fraction_string())))
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, (SgStatus, String)> {
    if s.is_null() {
        return Err((SgStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|e| (SgStatus::InvalidArgument, format!("not UTF-8: {e}")))
}

fn out_arg<'a, T>(p: *mut T) -> Result<&'a mut T, (SgStatus, String)> {
    // SAFETY: callers promise a non-null out pointer is valid for writes.
    unsafe { p.as_mut() }.ok_or((SgStatus::NullPointer, "null output pointer".into()))
}

unsafe fn knot_arg<'a>(table: *const SgKnotTable, name: *const c_char) -> Result<&'a KnotData, (SgStatus, String)> {
    let table = table.as_ref().ok_or((SgStatus::NullPointer, "null knot table".into()))?;
    lift(find_knot(&table.knots, str_arg(name)?))
}

/// Message for the last failing call on this thread; empty after success.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn sg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a JSON knot table from a NUL-terminated string.
///
/// # Safety
/// `json` must be a valid C string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sg_knot_table_parse(json: *const c_char, out: *mut *mut SgKnotTable) -> SgStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = ptr::null_mut();
        let knots = lift(parse_knot_str(str_arg(json)?))?;
        *out = Box::into_raw(Box::new(SgKnotTable { knots }));
        Ok(())
    })
}

/// Reads and parses a JSON knot table from a file.
///
/// # Safety
/// `path` must be a valid C string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sg_knot_table_load(path: *const c_char, out: *mut *mut SgKnotTable) -> SgStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = ptr::null_mut();
        let knots = lift(parse_knot_file(str_arg(path)?))?;
        *out = Box::into_raw(Box::new(SgKnotTable { knots }));
        Ok(())
    })
}

/// # Safety
/// `table` must come from this library and not be used afterwards. NULL is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn sg_knot_table_free(table: *mut SgKnotTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Number of knots in the table, 0 for NULL.
///
/// # Safety
/// `table` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sg_knot_table_len(table: *const SgKnotTable) -> usize {
    table.as_ref().map_or(0, |t| t.knots.len())
}

/// `s(q, p)` for coprime `q` and `p >= 1`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sg_dedekind_sum(q: i64, p: i64, out: *mut SgRational) -> SgStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = to_c(&lift(dedekind_sum(q, p))?)?;
        Ok(())
    })
}

/// `d(L(p,q), i)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sg_lens_d(p: i64, q: i64, i: i64, out: *mut SgRational) -> SgStatus {
    guard(|| {
        let out = out_arg(out)?;
        let lens = lift(LensSpace::new(p, q))?;
        *out = to_c(&lift(d_lens(&lens, i))?)?;
        Ok(())
    })
}

/// Casson–Walker invariant of `L(p,q)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sg_lens_lambda(p: i64, q: i64, out: *mut SgRational) -> SgStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = to_c(&lambda_lens(&lift(LensSpace::new(p, q))?))?;
        Ok(())
    })
}

/// `d(S³_{p/q}(K), i)`; `SG_STATUS_INDETERMINATE` for a negative slope
/// without a mirror profile.
///
/// # Safety
/// `table` must be a live handle, `name` a valid C string, `out` valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn sg_surgery_d(
    table: *const SgKnotTable,
    name: *const c_char,
    p: i64,
    q: i64,
    i: i64,
    out: *mut SgRational,
) -> SgStatus {
    guard(|| {
        let out = out_arg(out)?;
        let knot = knot_arg(table, name)?;
        let slope = lift(Slope::new(p, q))?;
        match lift(d_surgery_signed(knot, slope, i))? {
            Determination::Known(d) => *out = to_c(&d)?,
            Determination::Indeterminate(why) => return Err((SgStatus::Indeterminate, why)),
        }
        Ok(())
    })
}

/// `λ(S³_{p/q}(K))`.
///
/// # Safety
/// As for [`sg_surgery_d`].
#[no_mangle]
pub unsafe extern "C" fn sg_casson_walker(
    table: *const SgKnotTable,
    name: *const c_char,
    p: i64,
    q: i64,
    out: *mut SgRational,
) -> SgStatus {
    guard(|| {
        let out = out_arg(out)?;
        let knot = knot_arg(table, name)?;
        *out = to_c(&lift(casson_walker(knot, lift(Slope::new(p, q))?))?)?;
        Ok(())
    })
}

/// Total Casson–Gordon invariant of `S³_{p/q}(K)`, `p >= 1`.
///
/// # Safety
/// As for [`sg_surgery_d`].
#[no_mangle]
pub unsafe extern "C" fn sg_casson_gordon(
    table: *const SgKnotTable,
    name: *const c_char,
    p: i64,
    q: i64,
    out: *mut SgRational,
) -> SgStatus {
    guard(|| {
        let out = out_arg(out)?;
        let knot = knot_arg(table, name)?;
        *out = to_c(&lift(casson_gordon(knot, lift(Slope::new(p, q))?))?)?;
        Ok(())
    })
}

/// Verdict of the cosmetic-surgery gate for one knot.
///
/// # Safety
/// As for [`sg_surgery_d`].
#[no_mangle]
pub unsafe extern "C" fn sg_cosmetic_check(
    table: *const SgKnotTable,
    name: *const c_char,
    p_max: i64,
    q_max: i64,
    out: *mut SgVerdict,
) -> SgStatus {
    guard(|| {
        let out = out_arg(out)?;
        let knot = knot_arg(table, name)?;
        let report = lift(check_knot(knot, p_max, q_max))?;
        *out = match report.verdict {
            Verdict::Obstructed { .. } => SgVerdict::Obstructed,
            Verdict::NotObstructed { .. } => SgVerdict::NotObstructed,
            Verdict::Indeterminate { .. } => SgVerdict::Indeterminate,
        };
        Ok(())
    })
}

/// Runs a CLI invocation (`argv` without the program name). The report is
/// written to `*out_json` (free with [`sg_string_free`]); `*out_code` gets
/// the exit status. On a nonzero exit `*out_json` holds the error text.
///
/// # Safety
/// `argv` must point to `argc` valid C strings; out pointers valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn sg_run_command(
    argc: c_int,
    argv: *const *const c_char,
    out_json: *mut *mut c_char,
    out_code: *mut c_int,
) -> SgStatus {
    guard(|| {
        let out_json = out_arg(out_json)?;
        let out_code = out_arg(out_code)?;
        *out_json = ptr::null_mut();
        if argc < 0 || (argc > 0 && argv.is_null()) {
            return Err((SgStatus::InvalidArgument, "bad argc/argv".into()));
        }
        let mut args = Vec::with_capacity(argc as usize);
        for k in 0..argc as usize {
            args.push(str_arg(*argv.add(k))?.to_string());
        }
        let res = surgery_gate::cli::run_command(&args);
        let text = if res.code == 0 { res.stdout } else { res.stderr };
        *out_json =
            CString::new(text).map_err(|_| (SgStatus::InvalidArgument, "output contains NUL".to_string()))?.into_raw();
        *out_code = res.code;
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. NULL is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn sg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
