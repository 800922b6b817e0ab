//! C ABI for `mcpi`.
//!
//! Handles are opaque and owned by the caller, who releases them with the
//! matching `*_free` function. Every fallible call returns an [`McpiStatus`];
//! on failure a description is available from [`mcpi_last_error_message`]
//! on the same thread. Strings returned through `const char **` borrow from
//! their handle; strings returned through `char **` must be released with
//! [`mcpi_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use mcpi::config::RunConfig;
use mcpi::input::{self, Diagnostic};
use mcpi::interval::{self, ExclusionReport};
use mcpi::separation::{self, MetricOrder};
use mcpi::{report, DecisionMatrix, McpiResult};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum McpiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Io = 3,
    Validation = 4,
    OutOfRange = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum McpiMetric {
    Finite = 0,
    PositiveInfinity = 1,
    NegativeInfinity = 2,
}

/// Overall result of one alternative. Closeness values are fractions in
/// `[0, 1]`; `span` is in percentage points.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct McpiOverall {
    pub lower: f64,
    pub upper: f64,
    pub span: f64,
    pub normalized_span: f64,
    pub rank: usize,
    pub stars: u8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct McpiExclusionRow {
    pub lower: f64,
    pub upper: f64,
    pub span: f64,
    pub normalized_span: f64,
    pub rank: usize,
    pub baseline_rank: usize,
    pub delta_rank: i64,
    pub stars: u8,
}

/// A validated dataset with its computed results.
pub struct McpiAnalysis {
    config: RunConfig,
    matrix: DecisionMatrix,
    results: Vec<McpiResult>,
    names: Vec<CString>,
    dimension_ids: Vec<CString>,
}

/// Overall intervals recomputed without one dimension.
pub struct McpiExclusion {
    report: ExclusionReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(message).ok());
}

fn fail(status: McpiStatus, message: impl Into<String>) -> McpiStatus {
    set_error(message);
    status
}

fn guard(f: impl FnOnce() -> McpiStatus) -> McpiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(McpiStatus::Panic, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, McpiStatus> {
    if p.is_null() {
        return Err(fail(McpiStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(McpiStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn join(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n")
}

fn c_string(s: &str) -> Result<CString, McpiStatus> {
    CString::new(s).map_err(|_| fail(McpiStatus::Validation, format!("`{s}` contains a NUL byte")))
}

fn build(data: &str, config: &str) -> Result<McpiAnalysis, McpiStatus> {
    let config = RunConfig::check_json(config).map_err(|errs| {
        let diags: Vec<_> = errs.iter().map(Diagnostic::from_error).collect();
        fail(McpiStatus::Validation, join(&diags))
    })?;
    let matrix = input::parse_matrix(data).map_err(|d| fail(McpiStatus::Validation, join(&d)))?;
    let diags = input::check_against(&matrix, &config.schema);
    if !diags.is_empty() {
        return Err(fail(McpiStatus::Validation, join(&diags)));
    }
    let results = mcpi::evaluate(&config.schema, &matrix, config.options.rating_rule)
        .map_err(|e| fail(McpiStatus::Validation, format!("{}: {e}", e.code())))?;
    let names = matrix
        .alternatives()
        .iter()
        .map(|s| c_string(s))
        .collect::<Result<_, _>>()?;
    let dimension_ids = config
        .schema
        .dimension_ids()
        .into_iter()
        .map(c_string)
        .collect::<Result<_, _>>()?;
    Ok(McpiAnalysis {
        config,
        matrix,
        results,
        names,
        dimension_ids,
    })
}

unsafe fn store<T>(out: *mut *mut T, value: Result<T, McpiStatus>) -> McpiStatus {
    match value {
        Ok(v) => {
            *out = Box::into_raw(Box::new(v));
            McpiStatus::Ok
        }
        Err(status) => status,
    }
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(McpiStatus::NullPointer, concat!(stringify!($p), " is null"));
        })+
    };
}

/// Builds an analysis from CSV text and a JSON config.
///
/// # Safety
/// `data` and `config` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mcpi_analysis_from_strings(
    data: *const c_char,
    config: *const c_char,
    out: *mut *mut McpiAnalysis,
) -> McpiStatus {
    guard(|| {
        non_null!(out);
        *out = ptr::null_mut();
        let (data, config) = match (str_arg(data, "data"), str_arg(config, "config")) {
            (Ok(d), Ok(c)) => (d, c),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        store(out, build(data, config))
    })
}

/// Builds an analysis from a CSV file and a JSON config file.
///
/// # Safety
/// Both paths must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mcpi_analysis_from_files(
    data_path: *const c_char,
    config_path: *const c_char,
    out: *mut *mut McpiAnalysis,
) -> McpiStatus {
    guard(|| {
        non_null!(out);
        *out = ptr::null_mut();
        let read = |p: *const c_char, what: &str| -> Result<String, McpiStatus> {
            let path = str_arg(p, what)?;
            std::fs::read_to_string(Path::new(path))
                .map_err(|e| fail(McpiStatus::Io, format!("{path}: {e}")))
        };
        let (data, config) = match (
            read(data_path, "data_path"),
            read(config_path, "config_path"),
        ) {
            (Ok(d), Ok(c)) => (d, c),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        store(out, build(&data, &config))
    })
}

/// # Safety
/// `analysis` must come from an `mcpi_analysis_from_*` call, or be null.
#[no_mangle]
pub unsafe extern "C" fn mcpi_analysis_free(analysis: *mut McpiAnalysis) {
    if !analysis.is_null() {
        drop(Box::from_raw(analysis));
    }
}

/// # Safety
/// `analysis` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mcpi_analysis_alternative_count(
    analysis: *const McpiAnalysis,
    out: *mut usize,
) -> McpiStatus {
    non_null!(analysis, out);
    *out = (&*analysis).results.len();
    McpiStatus::Ok
}

/// # Safety
/// `analysis` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mcpi_analysis_dimension_count(
    analysis: *const McpiAnalysis,
    out: *mut usize,
) -> McpiStatus {
    non_null!(analysis, out);
    *out = (&*analysis).dimension_ids.len();
    McpiStatus::Ok
}

fn index_error(index: usize, len: usize) -> McpiStatus {
    fail(
        McpiStatus::OutOfRange,
        format!("index {index} out of range (len {len})"),
    )
}

/// Name of the alternative at `index` (input row order). The string lives as
/// long as the handle.
///
/// # Safety
/// `analysis` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mcpi_analysis_alternative_name(
    analysis: *const McpiAnalysis,
    index: usize,
    out: *mut *const c_char,
) -> McpiStatus {
    non_null!(analysis, out);
    match (&*analysis).names.get(index) {
        Some(name) => {
            *out = name.as_ptr();
            McpiStatus::Ok
        }
        None => index_error(index, (&*analysis).names.len()),
    }
}

/// Id of the dimension at `index` (config order). The string lives as long
/// as the handle.
///
/// # Safety
/// `analysis` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mcpi_analysis_dimension_id(
    analysis: *const McpiAnalysis,
    index: usize,
    out: *mut *const c_char,
) -> McpiStatus {
    non_null!(analysis, out);
    match (&*analysis).dimension_ids.get(index) {
        Some(id) => {
            *out = id.as_ptr();
            McpiStatus::Ok
        }
        None => index_error(index, (&*analysis).dimension_ids.len()),
    }
}

/// Overall interval, rank and rating of the alternative at `index` (input
/// row order).
///
/// # Safety
/// `analysis` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mcpi_analysis_overall(
    analysis: *const McpiAnalysis,
    index: usize,
    out: *mut McpiOverall,
) -> McpiStatus {
    non_null!(analysis, out);
    let results = &(&*analysis).results;
    let Some(r) = results.get(index) else {
        return index_error(index, results.len());
    };
    *out = McpiOverall {
        lower: r.overall.lower,
        upper: r.overall.upper,
        span: r.span,
        normalized_span: r.rating.normalized_span,
        rank: r.rank,
        stars: r.rating.stars,
    };
    McpiStatus::Ok
}

/// `[strong, weak]` closeness of one alternative on one dimension.
///
/// # Safety
/// `analysis` must be a live handle; `strong` and `weak` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mcpi_analysis_dimension_interval(
    analysis: *const McpiAnalysis,
    alternative: usize,
    dimension: usize,
    strong: *mut f64,
    weak: *mut f64,
) -> McpiStatus {
    non_null!(analysis, strong, weak);
    let results = &(&*analysis).results;
    let Some(r) = results.get(alternative) else {
        return index_error(alternative, results.len());
    };
    let Some(d) = r.dimension_scores.get(dimension) else {
        return index_error(dimension, r.dimension_scores.len());
    };
    *strong = d.strong;
    *weak = d.weak;
    McpiStatus::Ok
}

/// Recomputes overall intervals without the named dimension.
///
/// # Safety
/// `analysis` must be a live handle, `dimension` a NUL-terminated string and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mcpi_analysis_exclude(
    analysis: *const McpiAnalysis,
    dimension: *const c_char,
    out: *mut *mut McpiExclusion,
) -> McpiStatus {
    guard(|| {
        non_null!(analysis, out);
        *out = ptr::null_mut();
        let dim = match str_arg(dimension, "dimension") {
            Ok(d) => d,
            Err(s) => return s,
        };
        let a = &*analysis;
        let report = interval::exclude_dimension(&a.results, dim, a.config.options.rating_rule)
            .map(|report| McpiExclusion { report })
            .map_err(|e| fail(McpiStatus::Validation, format!("{}: {e}", e.code())));
        store(out, report)
    })
}

/// # Safety
/// `exclusion` must come from [`mcpi_analysis_exclude`], or be null.
#[no_mangle]
pub unsafe extern "C" fn mcpi_exclusion_free(exclusion: *mut McpiExclusion) {
    if !exclusion.is_null() {
        drop(Box::from_raw(exclusion));
    }
}

/// Row `index` of an exclusion, in the input row order of the analysis.
///
/// # Safety
/// `exclusion` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mcpi_exclusion_row(
    exclusion: *const McpiExclusion,
    index: usize,
    out: *mut McpiExclusionRow,
) -> McpiStatus {
    non_null!(exclusion, out);
    let rows = &(&*exclusion).report.rows;
    let Some(r) = rows.get(index) else {
        return index_error(index, rows.len());
    };
    *out = McpiExclusionRow {
        lower: r.overall.lower,
        upper: r.overall.upper,
        span: r.span,
        normalized_span: r.rating.normalized_span,
        rank: r.rank,
        baseline_rank: r.baseline_rank,
        delta_rank: r.delta_rank,
        stars: r.rating.stars,
    };
    McpiStatus::Ok
}

/// The JSON report (same document as `mcpi compute --format json`) using the
/// options of the config. Release with [`mcpi_string_free`].
///
/// # Safety
/// `analysis` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mcpi_analysis_report_json(
    analysis: *const McpiAnalysis,
    out: *mut *mut c_char,
) -> McpiStatus {
    guard(|| {
        non_null!(analysis, out);
        *out = ptr::null_mut();
        let a = &*analysis;
        let bundle = match report::compute(&a.config.schema, &a.matrix, &a.config.options) {
            Ok(b) => b,
            Err(e) => return fail(McpiStatus::Validation, format!("{}: {e}", e.code())),
        };
        match c_string(&bundle.to_json()) {
            Ok(s) => {
                *out = s.into_raw();
                McpiStatus::Ok
            }
            Err(status) => status,
        }
    })
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn mcpi_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Minkowski distance of order `p` (`metric == Finite`, `p >= 1`) or the
/// max / min absolute coordinate difference.
///
/// # Safety
/// `x` and `y` must point to `len` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mcpi_lp_distance(
    x: *const f64,
    y: *const f64,
    len: usize,
    metric: McpiMetric,
    p: f64,
    out: *mut f64,
) -> McpiStatus {
    non_null!(x, y, out);
    let order = match metric {
        McpiMetric::Finite => match MetricOrder::finite(p) {
            Ok(o) => o,
            Err(e) => return fail(McpiStatus::Validation, format!("{}: {e}", e.code())),
        },
        McpiMetric::PositiveInfinity => MetricOrder::PositiveInfinity,
        McpiMetric::NegativeInfinity => MetricOrder::NegativeInfinity,
    };
    let (x, y) = (
        std::slice::from_raw_parts(x, len),
        std::slice::from_raw_parts(y, len),
    );
    match separation::lp_distance(x, y, order) {
        Ok(d) => {
            *out = d;
            McpiStatus::Ok
        }
        Err(e) => fail(McpiStatus::Validation, format!("{}: {e}", e.code())),
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn mcpi_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
