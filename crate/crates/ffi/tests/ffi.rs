use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use intreg_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> Option<String> {
    if p.is_null() {
        return None;
    }
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    intreg_string_free(p);
    Some(s)
}

unsafe fn automaton(pattern: &str) -> *mut IntregAutomaton {
    let mut a = ptr::null_mut();
    assert_eq!(intreg_automaton_from_regex(cstr(pattern).as_ptr(), &mut a), IntregStatus::Ok);
    a
}

#[test]
fn decide_nonempty_and_empty() {
    unsafe {
        let a = automaton(">1$>a#>aa$");
        let mut d = ptr::null_mut();
        assert_eq!(intreg_decide(a, cstr("vertex-cover").as_ptr(), 0, &mut d), IntregStatus::Ok);
        assert!(intreg_decision_is_nonempty(d));
        let w = take_string(intreg_decision_witness(d)).unwrap();
        assert_eq!(w, ">1$>a#>aa$");
        let json: serde_json::Value = serde_json::from_str(&take_string(intreg_decision_to_json(d)).unwrap()).unwrap();
        assert_eq!(json["answer"], "nonempty");
        let mut ok = false;
        assert_eq!(intreg_verify_witness(a, cstr("vertex-cover").as_ptr(), cstr(&w).as_ptr(), &mut ok), IntregStatus::Ok);
        assert!(ok);
        intreg_decision_free(d);
        intreg_automaton_free(a);

        let a = automaton(">$(>a#>aa$)+");
        let mut d = ptr::null_mut();
        assert_eq!(intreg_decide(a, cstr("vertex-cover").as_ptr(), 0, &mut d), IntregStatus::Ok);
        assert!(!intreg_decision_is_nonempty(d));
        assert!(intreg_decision_witness(d).is_null());
        intreg_decision_free(d);
        intreg_automaton_free(a);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(intreg_automaton_from_regex(cstr("(a").as_ptr(), &mut a), IntregStatus::ParseError);
        assert!(a.is_null());
        let msg = take_string(intreg_last_error()).unwrap();
        assert!(msg.contains("position 2"), "{msg}");
        assert_eq!(intreg_automaton_from_regex(ptr::null(), &mut a), IntregStatus::NullArgument);
        assert_eq!(intreg_automaton_from_json(cstr("{").as_ptr(), &mut a), IntregStatus::ParseError);

        let a = automaton(">$");
        let mut d = ptr::null_mut();
        assert_eq!(intreg_decide(a, cstr("no-such").as_ptr(), 0, &mut d), IntregStatus::UnknownProblem);
        assert_eq!(intreg_decide(a, cstr("tree").as_ptr(), 0, &mut d), IntregStatus::Unsupported);
        assert!(d.is_null());
        let mut yes = false;
        assert_eq!(intreg_automaton_accepts(a, cstr(">$").as_ptr(), &mut yes), IntregStatus::Ok);
        assert!(yes);
        assert_eq!(intreg_automaton_accepts(a, cstr("x").as_ptr(), &mut yes), IntregStatus::ParseError);
        assert_eq!(intreg_automaton_num_states(a), 3);
        assert_eq!(intreg_automaton_num_states(ptr::null()), 0);
        intreg_automaton_free(a);
        intreg_automaton_free(ptr::null_mut());
        intreg_decision_free(ptr::null_mut());
    }
}

#[test]
fn search_limit_is_reported() {
    unsafe {
        let a = automaton(">11*$(>a*#>a*$)*>a#>aa$>aa#>aaa$>a#>aaa$");
        let mut d = ptr::null_mut();
        assert_eq!(intreg_decide(a, cstr("emptiness").as_ptr(), 5, &mut d), IntregStatus::SearchLimit);
        intreg_automaton_free(a);
    }
}

#[test]
fn header_declares_the_api_and_compiles_as_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/intreg.h")).unwrap();
    for name in ["intreg_automaton_from_regex", "intreg_decide", "intreg_decision_free", "intreg_last_error", "INTREG_STATUS_OK"] {
        assert!(header.contains(name), "{name}");
    }
    let probe = std::env::temp_dir().join(format!("intreg_header_probe_{}.c", std::process::id()));
    std::fs::write(&probe, "#include \"intreg.h\"\nint main(void) { IntregAutomaton *a = 0; return (int)intreg_automaton_num_states(a); }\n").unwrap();
    let status = Command::new("cc").arg("-fsyntax-only").arg("-I").arg(dir.join("include")).arg(&probe).status();
    std::fs::remove_file(&probe).ok();
    match status {
        Ok(s) => assert!(s.success(), "header does not compile"),
        Err(_) => eprintln!("no C compiler found; skipped the syntax check"),
    }
}
