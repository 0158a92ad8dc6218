//! C ABI for `twocubes`.
//!
//! Every operation returns a [`TwocubesStatus`] and writes its result through
//! an out-pointer. Tabular results come back as an opaque [`TwocubesTable`]
//! whose cells are read as decimal strings, since values routinely exceed 64
//! bits. Strings returned to the caller must be released with
//! [`twocubes_string_free`], tables with [`twocubes_table_free`].
//!
//! On failure, [`twocubes_last_error`] describes the most recent error on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use num_bigint::BigInt;

use twocubes::factor::DEFAULT_BUDGET;
use twocubes::io::{self, OutputFormat, Table};
use twocubes::search::{scan_ab_with, search_consecutive_with, SearchConfig};
use twocubes::{
    alpha_scan, divisor_representations, multi_representations, parametric_row, recurrence_rows, verify_record,
    CubeSumRecord, Error, FamilyId,
};

/// Result code of every call. Values match the command-line exit statuses where they overlap.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwocubesStatus {
    Ok = 0,
    /// A record or row failed verification.
    VerifyFailed = 1,
    InvalidArgument = 2,
    /// The oracle's trial-division budget ran out.
    BudgetExceeded = 3,
    NullPointer = 4,
    /// Internal panic caught at the boundary.
    Panic = 5,
}

pub const TWOCUBES_FORMAT_CSV: u32 = 0;
pub const TWOCUBES_FORMAT_JSON: u32 = 1;
pub const TWOCUBES_FORMAT_MARKDOWN: u32 = 2;
pub const TWOCUBES_FORMAT_BFILE: u32 = 3;

pub const TWOCUBES_FAMILY_BOTH: u32 = 0;
pub const TWOCUBES_FAMILY_ONE: u32 = 1;
pub const TWOCUBES_FAMILY_TWO: u32 = 2;

pub const TWOCUBES_METHOD_PARAMETRIC: u32 = 0;
pub const TWOCUBES_METHOD_RECURRENCE: u32 = 1;

/// Opaque table of named columns.
pub struct TwocubesTable {
    inner: Table,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(TwocubesStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match &e {
            _ if e.is_budget_exceeded() => TwocubesStatus::BudgetExceeded,
            Error::NotVerifying { .. } => TwocubesStatus::VerifyFailed,
            _ => TwocubesStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn invalid(msg: impl Into<String>) -> Fail {
    Fail(TwocubesStatus::InvalidArgument, msg.into())
}

fn guard<F>(f: F) -> TwocubesStatus
where
    F: FnOnce() -> Result<(), Fail> + UnwindSafe,
{
    match catch_unwind(f) {
        Ok(Ok(())) => TwocubesStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            TwocubesStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(TwocubesStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(format!("{what} is not valid UTF-8")))
}

unsafe fn read_int(p: *const c_char, what: &str) -> Result<BigInt, Fail> {
    let s = read_str(p, what)?;
    s.trim()
        .parse()
        .map_err(|_| invalid(format!("{what} is not a decimal integer: {s:?}")))
}

unsafe fn put_table(out: *mut *mut TwocubesTable, inner: Table) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(TwocubesStatus::NullPointer, "out is null".into()));
    }
    *out = Box::into_raw(Box::new(TwocubesTable { inner }));
    Ok(())
}

fn check_out<T>(out: *mut T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(TwocubesStatus::NullPointer, "out is null".into()));
    }
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn budget_or_default(budget: u64) -> u64 {
    if budget == 0 {
        DEFAULT_BUDGET
    } else {
        budget
    }
}

/// Message for the last failed call on this thread, or NULL. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn twocubes_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn twocubes_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn twocubes_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `table` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn twocubes_table_free(table: *mut TwocubesTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// # Safety
/// `table` must be a live table or NULL.
#[no_mangle]
pub unsafe extern "C" fn twocubes_table_rows(table: *const TwocubesTable) -> usize {
    table.as_ref().map_or(0, |t| t.inner.rows.len())
}

/// # Safety
/// `table` must be a live table or NULL.
#[no_mangle]
pub unsafe extern "C" fn twocubes_table_columns(table: *const TwocubesTable) -> usize {
    table.as_ref().map_or(0, |t| t.inner.columns.len())
}

/// Name of column `col`, newly allocated, or NULL when out of range.
///
/// # Safety
/// `table` must be a live table or NULL.
#[no_mangle]
pub unsafe extern "C" fn twocubes_table_column_name(table: *const TwocubesTable, col: usize) -> *mut c_char {
    match table.as_ref().and_then(|t| t.inner.columns.get(col)) {
        Some(name) => into_c_string(name.clone()),
        None => ptr::null_mut(),
    }
}

/// Cell text, newly allocated: a decimal integer, a root tag, or "" for an empty cell.
/// NULL when out of range.
///
/// # Safety
/// `table` must be a live table or NULL.
#[no_mangle]
pub unsafe extern "C" fn twocubes_table_cell(table: *const TwocubesTable, row: usize, col: usize) -> *mut c_char {
    let Some(cell) = table.as_ref().and_then(|t| t.inner.rows.get(row)?.get(col)) else {
        return ptr::null_mut();
    };
    let text = match cell {
        io::Cell::Int(v) => v.to_string(),
        io::Cell::Text(s) => s.clone(),
        io::Cell::Null => String::new(),
    };
    into_c_string(text)
}

/// Encodes the table as CSV, JSON, Markdown or b-file (`column` picks the
/// b-file column and may be NULL for other formats).
///
/// # Safety
/// `table` must be a live table, `column` NULL or a valid C string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn twocubes_table_encode(
    table: *const TwocubesTable,
    format: u32,
    column: *const c_char,
    out: *mut *mut c_char,
) -> TwocubesStatus {
    guard(|| {
        check_out(out)?;
        let t = table
            .as_ref()
            .ok_or_else(|| Fail(TwocubesStatus::NullPointer, "table is null".into()))?;
        let format = match format {
            TWOCUBES_FORMAT_CSV => OutputFormat::Csv,
            TWOCUBES_FORMAT_JSON => OutputFormat::Json,
            TWOCUBES_FORMAT_MARKDOWN => OutputFormat::Markdown,
            TWOCUBES_FORMAT_BFILE => OutputFormat::Bfile,
            other => return Err(invalid(format!("unknown format {other}"))),
        };
        let column = if column.is_null() {
            if format == OutputFormat::Bfile {
                return Err(invalid("b-file output needs a column"));
            }
            ""
        } else {
            read_str(column, "column")?
        };
        *out = into_c_string(t.inner.encode(format, column)?);
        Ok(())
    })
}

/// Solutions with `0 < n < n_max`, columns `n,a,b,root,N,x,y`. `jobs = 0` uses
/// all cores; `budget = 0` uses the default trial-division budget.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twocubes_search(
    n_max: u64,
    jobs: u32,
    budget: u64,
    out: *mut *mut TwocubesTable,
) -> TwocubesStatus {
    guard(|| {
        check_out(out)?;
        let config = SearchConfig::default()
            .with_jobs(jobs as usize)
            .with_budget(budget_or_default(budget));
        let records = search_consecutive_with(n_max, &config)?;
        put_table(out, io::records_table(&records))
    })
}

/// Closed-form roots over the `(a, b)` window, columns `n,a,b,root,N,x,y`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twocubes_scan_ab(
    a_max: i64,
    b_min: i64,
    n_limit: i64,
    out: *mut *mut TwocubesTable,
) -> TwocubesStatus {
    guard(|| {
        check_out(out)?;
        let records = scan_ab_with(a_max, b_min, n_limit, &SearchConfig::default())?;
        put_table(out, io::records_table(&records))
    })
}

/// Representations of the decimal integer `value`, columns `x,y`.
///
/// # Safety
/// `value` must be a valid C string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn twocubes_oracle(
    value: *const c_char,
    positive_only: bool,
    budget: u64,
    out: *mut *mut TwocubesTable,
) -> TwocubesStatus {
    guard(|| {
        check_out(out)?;
        let n = read_int(value, "value")?;
        let mut set = divisor_representations(&n, budget_or_default(budget))?;
        if positive_only {
            set = set.positive_only();
        }
        put_table(out, io::representation_table(&set))
    })
}

/// Rows `1..=count` of one or both families, columns `family,i,n,x,y,eta,N`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twocubes_families(
    family: u32,
    count: u64,
    method: u32,
    out: *mut *mut TwocubesTable,
) -> TwocubesStatus {
    guard(|| {
        check_out(out)?;
        let families: &[FamilyId] = match family {
            TWOCUBES_FAMILY_BOTH => &FamilyId::ALL,
            TWOCUBES_FAMILY_ONE => &[FamilyId::One],
            TWOCUBES_FAMILY_TWO => &[FamilyId::Two],
            other => return Err(invalid(format!("unknown family {other}"))),
        };
        let mut rows = Vec::new();
        for &f in families {
            match method {
                TWOCUBES_METHOD_PARAMETRIC => {
                    if count == 0 {
                        return Err(invalid("count must be at least 1"));
                    }
                    for i in 1..=count {
                        rows.push(parametric_row(f, i)?);
                    }
                }
                TWOCUBES_METHOD_RECURRENCE => rows.extend(recurrence_rows(f, count)?),
                other => return Err(invalid(format!("unknown method {other}"))),
            }
        }
        put_table(out, io::family_table(&rows))
    })
}

/// Integer roots for every alpha in `[alpha_min, alpha_max]`, columns `alpha,root,n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twocubes_alpha_scan(
    alpha_min: i64,
    alpha_max: i64,
    out: *mut *mut TwocubesTable,
) -> TwocubesStatus {
    guard(|| {
        check_out(out)?;
        put_table(out, io::alpha_table(&alpha_scan(alpha_min, alpha_max)?))
    })
}

/// Consecutive-cube sums up to `n_max` with at least `min_reps` representations,
/// columns `n,N,x,y`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn twocubes_multi(
    n_max: u64,
    min_reps: u32,
    budget: u64,
    out: *mut *mut TwocubesTable,
) -> TwocubesStatus {
    guard(|| {
        check_out(out)?;
        let found = multi_representations(n_max, min_reps as usize, budget_or_default(budget))?;
        put_table(out, io::multi_table(&found))
    })
}

/// Checks one record given as decimal strings. Returns `Ok` when it verifies,
/// `VerifyFailed` when it does not.
///
/// # Safety
/// All pointers must be valid C strings.
#[no_mangle]
pub unsafe extern "C" fn twocubes_verify_record(
    n: *const c_char,
    a: *const c_char,
    b: *const c_char,
    sum: *const c_char,
    x: *const c_char,
    y: *const c_char,
) -> TwocubesStatus {
    guard(|| {
        let record = CubeSumRecord {
            n: read_int(n, "n")?,
            a: read_int(a, "a")?,
            b: read_int(b, "b")?,
            sum: read_int(sum, "N")?,
            x: read_int(x, "x")?,
            y: read_int(y, "y")?,
            root: None,
        };
        if verify_record(&record) {
            Ok(())
        } else {
            Err(Fail(TwocubesStatus::VerifyFailed, "record does not verify".into()))
        }
    })
}
