//! C ABI over `brace_dend`.
//!
//! Every fallible function returns a [`BdStatus`]; on failure the message is
//! available from [`bd_last_error`] on the same thread. Handles are opaque
//! and owned by the caller, who releases them with the matching `*_free`.
//! Strings returned through out-pointers are released with [`bd_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use brace_dend::bialgebra::{self, format_tensor};
use brace_dend::dendriform::free::{self, Tilde};
use brace_dend::dendriform::parse_expr_tilde;
use brace_dend::envelope::{build_envelope, envelope_primitives, validate_brace, BraceStructure, TruncatedQuotient};
use brace_dend::exactlin::format_sum;
use brace_dend::operads::{compose_ape, compose_prelie, PlanarOp, PreLieOp};
use brace_dend::trees::{parse_planar, parse_rooted, Alphabet};
use brace_dend::verify::verify_suite;
use brace_dend::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidBrace = 4,
    DegreeOverflow = 5,
    UnknownSuite = 6,
    Domain = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BdSpecies {
    Ape = 0,
    Prelie = 1,
}

/// An element of the free dendriform algebra together with the names of its
/// generators.
pub struct BdElement {
    value: Tilde,
    alphabet: Alphabet,
}

/// A brace structure read from JSON.
pub struct BdBrace(BraceStructure);

/// A truncated envelope of a brace structure.
pub struct BdEnvelope(TruncatedQuotient);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(BdStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => BdStatus::Parse,
            Error::InvalidBrace(_) => BdStatus::InvalidBrace,
            Error::DegreeOverflow { .. } => BdStatus::DegreeOverflow,
            Error::UnknownSuite(_) => BdStatus::UnknownSuite,
            _ => BdStatus::Domain,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(BdStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BdStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BdStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            BdStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(BdStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(BdStatus::Domain, "interior NUL in output".into()))?;
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(c.into_raw());
    Ok(())
}

unsafe fn put_element(out: *mut *mut BdElement, value: Tilde, alphabet: Alphabet) -> Result<(), Failure> {
    put(out, Box::into_raw(Box::new(BdElement { value, alphabet })))
}

/// The message of the last failure on this thread, or null. Owned by the
/// library; valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn bd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn bd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a dendriform expression such as `a<(b>c)` over `gens` letters.
#[no_mangle]
pub unsafe extern "C" fn bd_element_parse(expr: *const c_char, gens: usize, out: *mut *mut BdElement) -> BdStatus {
    guard(|| {
        let expr = text(expr, "expr")?;
        let alphabet = Alphabet::letters(gens);
        let value = parse_expr_tilde(expr, &alphabet)?;
        put_element(out, value, alphabet)
    })
}

#[no_mangle]
pub unsafe extern "C" fn bd_element_free(e: *mut BdElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// The element as a sum of products, e.g. `a<b - b>a`.
#[no_mangle]
pub unsafe extern "C" fn bd_element_to_string(e: *const BdElement, out: *mut *mut c_char) -> BdStatus {
    guard(|| {
        let e = handle(e, "element")?;
        put_string(out, format_sum(&e.value, |t| t.to_expr(&e.alphabet)))
    })
}

/// The element as a sum of bracketed planar binary trees.
#[no_mangle]
pub unsafe extern "C" fn bd_element_to_bracket(e: *const BdElement, out: *mut *mut c_char) -> BdStatus {
    guard(|| {
        let e = handle(e, "element")?;
        put_string(out, format_sum(&e.value, |t| t.to_bracket(&e.alphabet)))
    })
}

#[no_mangle]
pub unsafe extern "C" fn bd_element_num_terms(e: *const BdElement, out: *mut usize) -> BdStatus {
    guard(|| put(out, handle(e, "element")?.value.len()))
}

unsafe fn binary(
    a: *const BdElement,
    b: *const BdElement,
    out: *mut *mut BdElement,
    op: impl FnOnce(&Tilde, &Tilde) -> brace_dend::Result<Tilde>,
) -> BdStatus {
    guard(|| {
        let (a, b) = (handle(a, "left operand")?, handle(b, "right operand")?);
        let alphabet = if a.alphabet.len() >= b.alphabet.len() {
            a.alphabet.clone()
        } else {
            b.alphabet.clone()
        };
        put_element(out, op(&a.value, &b.value)?, alphabet)
    })
}

#[no_mangle]
pub unsafe extern "C" fn bd_element_prec(
    a: *const BdElement,
    b: *const BdElement,
    out: *mut *mut BdElement,
) -> BdStatus {
    binary(a, b, out, free::prec)
}

#[no_mangle]
pub unsafe extern "C" fn bd_element_succ(
    a: *const BdElement,
    b: *const BdElement,
    out: *mut *mut BdElement,
) -> BdStatus {
    binary(a, b, out, free::succ)
}

#[no_mangle]
pub unsafe extern "C" fn bd_element_star(
    a: *const BdElement,
    b: *const BdElement,
    out: *mut *mut BdElement,
) -> BdStatus {
    binary(a, b, out, |x, y| Ok(free::star(x, y)))
}

/// The coproduct, written as `lhs (x) rhs` terms.
#[no_mangle]
pub unsafe extern "C" fn bd_element_coproduct(e: *const BdElement, out: *mut *mut c_char) -> BdStatus {
    guard(|| {
        let e = handle(e, "element")?;
        put_string(out, format_tensor(&bialgebra::coproduct(&e.value), &e.alphabet, true))
    })
}

#[no_mangle]
pub unsafe extern "C" fn bd_element_is_primitive(e: *const BdElement, out: *mut bool) -> BdStatus {
    guard(|| put(out, bialgebra::is_primitive(&handle(e, "element")?.value)))
}

/// Dimension of the primitives of degree `degree` on `gens` generators.
#[no_mangle]
pub unsafe extern "C" fn bd_primitive_dim(degree: usize, gens: usize, out: *mut usize) -> BdStatus {
    guard(|| put(out, bialgebra::primitives(degree, gens)?.len()))
}

/// Composes `inner` into `outer` at the vertex labeled `at` and writes the
/// resulting sum of trees.
#[no_mangle]
pub unsafe extern "C" fn bd_compose(
    species: BdSpecies,
    outer: *const c_char,
    inner: *const c_char,
    at: *const c_char,
    out: *mut *mut c_char,
) -> BdStatus {
    guard(|| {
        let (outer, inner, at) = (text(outer, "outer")?, text(inner, "inner")?, text(at, "at")?);
        let sum = match species {
            BdSpecies::Ape => compose_ape(
                &PlanarOp::basis(parse_planar(outer)?),
                at,
                &PlanarOp::basis(parse_planar(inner)?),
            )?
            .to_string(),
            BdSpecies::Prelie => compose_prelie(
                &PreLieOp::basis(parse_rooted(outer)?),
                at,
                &PreLieOp::basis(parse_rooted(inner)?),
            )?
            .to_string(),
        };
        put_string(out, sum)
    })
}

/// Runs a named verification suite; writes the number of checks and defects.
#[no_mangle]
pub unsafe extern "C" fn bd_verify(
    suite: *const c_char,
    bound: usize,
    checks: *mut usize,
    defects: *mut usize,
) -> BdStatus {
    guard(|| {
        let r = verify_suite(text(suite, "suite")?, bound)?;
        put(checks, r.checks)?;
        put(defects, r.defects.len())
    })
}

#[no_mangle]
pub unsafe extern "C" fn bd_brace_from_json(json: *const c_char, out: *mut *mut BdBrace) -> BdStatus {
    guard(|| {
        let b = BraceStructure::from_json(text(json, "json")?)?;
        put(out, Box::into_raw(Box::new(BdBrace(b))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn bd_brace_free(b: *mut BdBrace) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

#[no_mangle]
pub unsafe extern "C" fn bd_brace_dim(b: *const BdBrace, out: *mut usize) -> BdStatus {
    guard(|| put(out, handle(b, "brace")?.0.dim()))
}

/// Number of failing brace relations with arguments of arity `<= arity`.
#[no_mangle]
pub unsafe extern "C" fn bd_brace_validate(b: *const BdBrace, arity: usize, defects: *mut usize) -> BdStatus {
    guard(|| put(defects, validate_brace(&handle(b, "brace")?.0, arity)?.len()))
}

/// Builds the envelope truncated at weight `upto`.
#[no_mangle]
pub unsafe extern "C" fn bd_envelope_build(
    b: *const BdBrace,
    upto: usize,
    slack: usize,
    out: *mut *mut BdEnvelope,
) -> BdStatus {
    guard(|| {
        let q = build_envelope(&handle(b, "brace")?.0, upto, slack)?;
        put(out, Box::into_raw(Box::new(BdEnvelope(q))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn bd_envelope_free(q: *mut BdEnvelope) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Copies up to `cap` dimensions (weights `0..=upto`) into `dims` and writes
/// the total count to `len`. Pass `dims = NULL` to query the count.
#[no_mangle]
pub unsafe extern "C" fn bd_envelope_dims(
    q: *const BdEnvelope,
    dims: *mut usize,
    cap: usize,
    len: *mut usize,
) -> BdStatus {
    guard(|| {
        let d = handle(q, "envelope")?.0.dims();
        if !dims.is_null() {
            ptr::copy_nonoverlapping(d.as_ptr(), dims, d.len().min(cap));
        }
        put(len, d.len())
    })
}

#[no_mangle]
pub unsafe extern "C" fn bd_envelope_stable(q: *const BdEnvelope, out: *mut bool) -> BdStatus {
    guard(|| put(out, handle(q, "envelope")?.0.stable()))
}

/// Whether the primitives of the envelope are exactly the generators.
#[no_mangle]
pub unsafe extern "C" fn bd_envelope_primitives_ok(q: *const BdEnvelope, out: *mut bool) -> BdStatus {
    guard(|| put(out, envelope_primitives(&handle(q, "envelope")?.0)?.ok()))
}

/// Parses `expr` over the basis names of the brace structure and writes its
/// normal form in the envelope.
#[no_mangle]
pub unsafe extern "C" fn bd_envelope_reduce(
    q: *const BdEnvelope,
    expr: *const c_char,
    out: *mut *mut BdElement,
) -> BdStatus {
    guard(|| {
        let q = &handle(q, "envelope")?.0;
        let expr = text(expr, "expr")?;
        let alphabet = q.structure().alphabet();
        let value = q.reduce(&parse_expr_tilde(expr, &alphabet)?)?;
        put_element(out, value, alphabet)
    })
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn bd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
