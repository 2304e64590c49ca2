//! C ABI for the decision engine.
//!
//! Objects are opaque handles created and freed by this library. Every
//! fallible call returns an [`IntregStatus`]; on failure the message is
//! available from [`intreg_last_error`] on the same thread. Strings returned
//! to the caller are owned by the caller and released with
//! [`intreg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use intreg::automata::{compile_regex, Nfa, Word};
use intreg::engine::{decide, verify_witness, DecideOptions, Decision};
use intreg::problems::lookup;
use intreg::Error;

/// Result codes of the C API.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntregStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidAutomaton = 4,
    UnknownProblem = 5,
    Unsupported = 6,
    SearchLimit = 7,
    Internal = 8,
}

/// An automaton over the encoding alphabet.
pub struct IntregAutomaton {
    nfa: Nfa,
}

/// The outcome of [`intreg_decide`].
pub struct IntregDecision {
    decision: Decision,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: IntregStatus, message: impl Into<String>) -> IntregStatus {
    set_error(message.into());
    status
}

fn status_of(e: &Error) -> IntregStatus {
    match e {
        Error::RegexParse { .. } | Error::WordSyntax { .. } | Error::NotInEnc { .. } | Error::Json(_) => {
            IntregStatus::ParseError
        }
        Error::InvalidAutomaton(_) | Error::UnknownState(_) => IntregStatus::InvalidAutomaton,
        Error::UnknownProblem(_) => IntregStatus::UnknownProblem,
        Error::Unsupported { .. } => IntregStatus::Unsupported,
        Error::SearchLimit { .. } => IntregStatus::SearchLimit,
        _ => IntregStatus::Internal,
    }
}

fn from_error(e: Error) -> IntregStatus {
    fail(status_of(&e), e.to_string())
}

/// # Safety
/// `s` is null or a valid nul-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, IntregStatus> {
    if s.is_null() {
        return Err(fail(IntregStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(IntregStatus::InvalidUtf8, "argument is not UTF-8"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Compiles a regular expression into an automaton.
///
/// # Safety
/// `pattern` is a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn intreg_automaton_from_regex(
    pattern: *const c_char,
    out: *mut *mut IntregAutomaton,
) -> IntregStatus {
    if out.is_null() {
        return fail(IntregStatus::NullArgument, "null output pointer");
    }
    let pattern = try_status!(read_str(pattern));
    match compile_regex(pattern) {
        Ok(nfa) => {
            *out = Box::into_raw(Box::new(IntregAutomaton { nfa }));
            IntregStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Reads an automaton from its JSON form.
///
/// # Safety
/// `json` is a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn intreg_automaton_from_json(
    json: *const c_char,
    out: *mut *mut IntregAutomaton,
) -> IntregStatus {
    if out.is_null() {
        return fail(IntregStatus::NullArgument, "null output pointer");
    }
    let json = try_status!(read_str(json));
    match Nfa::from_json_str(json) {
        Ok(nfa) => {
            *out = Box::into_raw(Box::new(IntregAutomaton { nfa }));
            IntregStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Number of states, or 0 for a null handle.
///
/// # Safety
/// `automaton` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn intreg_automaton_num_states(automaton: *const IntregAutomaton) -> usize {
    automaton.as_ref().map_or(0, |a| a.nfa.num_states())
}

/// Whether the automaton accepts `word`. Writes the answer to `out`.
///
/// # Safety
/// `automaton` is a live handle, `word` a nul-terminated string and `out`
/// a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn intreg_automaton_accepts(
    automaton: *const IntregAutomaton,
    word: *const c_char,
    out: *mut bool,
) -> IntregStatus {
    let (Some(a), false) = (automaton.as_ref(), out.is_null()) else {
        return fail(IntregStatus::NullArgument, "null automaton or output pointer");
    };
    let word = try_status!(read_str(word));
    match word.parse::<Word>() {
        Ok(w) => {
            *out = a.nfa.contains(&w);
            IntregStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// # Safety
/// `automaton` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn intreg_automaton_free(automaton: *mut IntregAutomaton) {
    if !automaton.is_null() {
        drop(Box::from_raw(automaton));
    }
}

/// Decides whether the automaton's language contains a positive instance
/// of `problem`. `max_search` bounds the configurations explored; 0 selects
/// the default.
///
/// # Safety
/// `automaton` is a live handle, `problem` a nul-terminated string and `out`
/// a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn intreg_decide(
    automaton: *const IntregAutomaton,
    problem: *const c_char,
    max_search: u64,
    out: *mut *mut IntregDecision,
) -> IntregStatus {
    let (Some(a), false) = (automaton.as_ref(), out.is_null()) else {
        return fail(IntregStatus::NullArgument, "null automaton or output pointer");
    };
    let name = try_status!(read_str(problem));
    let spec = match lookup(name) {
        Ok(s) => s,
        Err(e) => return from_error(e),
    };
    let mut opts = DecideOptions::default();
    if max_search > 0 {
        opts.max_nodes = max_search;
    }
    match decide(&a.nfa, spec, &opts) {
        Ok(decision) => {
            *out = Box::into_raw(Box::new(IntregDecision { decision }));
            IntregStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// # Safety
/// `decision` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn intreg_decision_is_nonempty(decision: *const IntregDecision) -> bool {
    decision.as_ref().is_some_and(|d| d.decision.is_nonempty())
}

/// The witness word, or null when the language is empty. Free with
/// [`intreg_string_free`].
///
/// # Safety
/// `decision` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn intreg_decision_witness(decision: *const IntregDecision) -> *mut c_char {
    decision
        .as_ref()
        .and_then(|d| d.decision.witness.as_ref())
        .map_or(ptr::null_mut(), |w| into_c_string(w.word.to_string()))
}

/// The decision as JSON. Free with [`intreg_string_free`].
///
/// # Safety
/// `decision` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn intreg_decision_to_json(decision: *const IntregDecision) -> *mut c_char {
    decision.as_ref().map_or(ptr::null_mut(), |d| into_c_string(d.decision.to_json().to_string()))
}

/// # Safety
/// `decision` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn intreg_decision_free(decision: *mut IntregDecision) {
    if !decision.is_null() {
        drop(Box::from_raw(decision));
    }
}

/// Checks a witness word independently of the decision procedure.
///
/// # Safety
/// `automaton` is a live handle, `problem` and `word` nul-terminated strings
/// and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn intreg_verify_witness(
    automaton: *const IntregAutomaton,
    problem: *const c_char,
    word: *const c_char,
    out: *mut bool,
) -> IntregStatus {
    let (Some(a), false) = (automaton.as_ref(), out.is_null()) else {
        return fail(IntregStatus::NullArgument, "null automaton or output pointer");
    };
    let name = try_status!(read_str(problem));
    let word = try_status!(read_str(word));
    let spec = match lookup(name) {
        Ok(s) => s,
        Err(e) => return from_error(e),
    };
    match word.parse::<Word>() {
        Ok(w) => {
            *out = verify_witness(&a.nfa, spec, &w);
            IntregStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// The last error message on this thread, or null. Free with
/// [`intreg_string_free`].
#[no_mangle]
pub extern "C" fn intreg_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// # Safety
/// `s` is null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn intreg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
