//! C interface.
//!
//! Frameworks are opaque handles created by [`saf_framework_parse`] and
//! released with [`saf_framework_free`]. Results that are not scalars come
//! back as NUL-terminated JSON strings owned by the caller, to be released
//! with [`saf_string_free`]. Every fallible call returns a [`SafStatus`]; on
//! failure [`saf_last_error_message`] describes the error for the calling
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use saf::decision::{self, Subject, Task, TaskQuery};
use saf::initial::{decompose, enumerate_initial_sets};
use saf::io::json::{self, InitialSetDoc, SequenceDoc};
use saf::io::{self, Format};
use saf::serial::{enumerate_with_witnesses, SemanticsSpec};
use saf::{Error, Framework};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SafStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    UnknownArgument = 4,
    UnknownName = 5,
    NotAdmissible = 6,
    InvalidInput = 7,
    Panic = 8,
}

/// Opaque framework handle.
pub struct SafFramework(Framework);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Failure(SafStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } | Error::Json(_) | Error::InvalidFramework(_) => SafStatus::ParseError,
            Error::UnknownArgument(_) => SafStatus::UnknownArgument,
            Error::UnknownTask(_) => SafStatus::UnknownName,
            Error::NotAdmissible | Error::NotConflictFree => SafStatus::NotAdmissible,
            _ => SafStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

/// Runs `body`, recording any failure or panic as the thread's last error.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> SafStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            SafStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SafStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(SafStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SafStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn framework_arg<'a>(fw: *const SafFramework) -> Result<&'a Framework, Failure> {
    fw.as_ref()
        .map(|f| &f.0)
        .ok_or_else(|| Failure(SafStatus::NullPointer, "framework is null".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(SafStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(SafStatus::InvalidInput, "output contains NUL".into()))?;
    write_out(out, c.into_raw())
}

fn labels(raw: &str) -> impl Iterator<Item = &str> {
    raw.split(',').map(str::trim).filter(|l| !l.is_empty())
}

/// Parses `text` in `format` (`"tgf"`, `"apx"` or `"json"`) into a new
/// handle stored in `*out`.
///
/// # Safety
/// `text` and `format` must be NUL-terminated strings; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn saf_framework_parse(
    text: *const c_char,
    format: *const c_char,
    out: *mut *mut SafFramework,
) -> SafStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        let format: Format = str_arg(format, "format")?.parse()?;
        let f = io::parse(text, format)?;
        write_out(out, Box::into_raw(Box::new(SafFramework(f))))
    })
}

/// # Safety
/// `fw` must be null or a handle from [`saf_framework_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn saf_framework_free(fw: *mut SafFramework) {
    if !fw.is_null() {
        drop(Box::from_raw(fw));
    }
}

/// Number of arguments, or 0 for a null handle.
///
/// # Safety
/// `fw` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn saf_framework_num_arguments(fw: *const SafFramework) -> usize {
    fw.as_ref().map_or(0, |f| f.0.len())
}

/// Extensions of a preset (`"ad"`, `"co"`, `"gr"`, `"st"`, `"pr"`, `"sa"`,
/// `"uc"`) as a JSON array of `{extension, witness}` objects.
///
/// # Safety
/// `fw` must be a live handle, `semantics` a NUL-terminated string and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn saf_extensions_json(
    fw: *const SafFramework,
    semantics: *const c_char,
    out: *mut *mut c_char,
) -> SafStatus {
    guard(|| {
        let f = framework_arg(fw)?;
        let code = str_arg(semantics, "semantics")?;
        let spec = SemanticsSpec::from_code(code)
            .ok_or_else(|| Failure(SafStatus::UnknownName, format!("unknown semantics `{code}`")))?;
        let docs: Vec<serde_json::Value> = enumerate_with_witnesses(f, &spec)
            .iter()
            .map(|w| {
                serde_json::json!({
                    "extension": f.labels_of(&w.extension),
                    "witness": SequenceDoc::new(f, w),
                })
            })
            .collect();
        write_string(out, json::to_string(&docs))
    })
}

/// Classified initial sets as a JSON array of `{set, class, conflicts, scc}`.
///
/// # Safety
/// `fw` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn saf_initial_sets_json(fw: *const SafFramework, out: *mut *mut c_char) -> SafStatus {
    guard(|| {
        let f = framework_arg(fw)?;
        let docs: Vec<InitialSetDoc> = enumerate_initial_sets(f)
            .iter()
            .map(|i| InitialSetDoc::new(f, i))
            .collect();
        write_string(out, json::to_string(&docs))
    })
}

/// Canonical serialisation sequence of the admissible set given as
/// comma-separated labels.
///
/// # Safety
/// `fw` must be a live handle, `set` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn saf_decompose_json(
    fw: *const SafFramework,
    set: *const c_char,
    out: *mut *mut c_char,
) -> SafStatus {
    guard(|| {
        let f = framework_arg(fw)?;
        let s = f.set_of(labels(str_arg(set, "set")?))?;
        let seq = decompose(f, &s)?;
        write_string(out, json::to_string(&SequenceDoc::new(f, &seq)))
    })
}

/// Answers a decision task such as `"VER-IS-CH"`, `"EXISTS-IS-UC"` or
/// `"DS-IS"`. `subject` is a comma-separated set for VER, an argument label
/// for DC/DS and ignored (may be null) otherwise.
///
/// # Safety
/// `fw` must be a live handle, `task` a NUL-terminated string, `subject`
/// null or NUL-terminated, and `answer` writable.
#[no_mangle]
pub unsafe extern "C" fn saf_decide(
    fw: *const SafFramework,
    task: *const c_char,
    subject: *const c_char,
    answer: *mut bool,
) -> SafStatus {
    guard(|| {
        let f = framework_arg(fw)?;
        let (task, family) = decision::parse_code(str_arg(task, "task")?)?;
        let subject = match task {
            Task::Exists | Task::Unique => Subject::None,
            Task::Ver => Subject::Set(f.set_of(labels(str_arg(subject, "subject")?))?),
            Task::Cred | Task::Skept => {
                let label = str_arg(subject, "subject")?.trim();
                Subject::Argument(
                    f.index_of(label)
                        .ok_or_else(|| Error::UnknownArgument(label.into()))?,
                )
            }
        };
        let yes = decision::decide(
            f,
            &TaskQuery {
                task,
                family,
                subject,
            },
        )?;
        write_out(answer, yes)
    })
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn saf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn saf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
