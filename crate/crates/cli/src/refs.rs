//! Resolution of frame and algebra arguments.
//!
//! Frames: a fixture name (`K1`), `rho(<frame>)`, or a JSON file.
//! Algebras: `B1`, `B2`, `<frame>*`, `O(<algebra>)`, or a JSON file.

use std::path::Path;

use monadic_core::algebras::{open_algebra, Algebra};
use monadic_core::duality::complex_algebra;
use monadic_core::frames::{skeleton, Frame};
use monadic_core::io::{read_document, Document};
use monadic_core::{fixtures, Error, Result};

/// A bare word that names neither a fixture nor a file.
fn unknown(text: &str) -> Option<Error> {
    let looks_like_path = text.contains('/') || text.contains('.');
    (!looks_like_path && !Path::new(text).exists()).then(|| Error::UnknownFixture(text.to_string()))
}

fn wrapped<'a>(text: &'a str, head: &str) -> Option<&'a str> {
    text.strip_prefix(head)?.strip_suffix(')')
}

pub fn frame(text: &str) -> Result<Frame> {
    let text = text.trim();
    if let Some(inner) = wrapped(text, "rho(") {
        return match frame(inner)? {
            Frame::Ms4(g) => Ok(Frame::Mipc(skeleton(&g)?.frame)),
            Frame::Mipc(_) => Err(Error::KindMismatch(format!("`{inner}` is not an MS4 frame"))),
        };
    }
    if fixtures::NAMES.contains(&text) {
        return Ok(Frame::Ms4(fixtures::frame(text)?));
    }
    if let Some(e) = unknown(text) {
        return Err(e);
    }
    match read_document(Path::new(text))? {
        Document::Frame(f) => Ok(f),
        Document::Algebra(_) => Err(Error::KindMismatch(format!("`{text}` holds an algebra, not a frame"))),
    }
}

pub fn algebra(text: &str) -> Result<Algebra> {
    let text = text.trim();
    match text {
        "B1" => return Ok(Algebra::Ms4(fixtures::b1())),
        "B2" => return Ok(Algebra::Ms4(fixtures::b2())),
        _ => {}
    }
    if let Some(inner) = wrapped(text, "O(") {
        return match algebra(inner)? {
            Algebra::Ms4(b) => Ok(Algebra::Mha(open_algebra(&b)?.algebra)),
            Algebra::Mha(_) => Err(Error::KindMismatch(format!("`{inner}` is not an MS4-algebra"))),
        };
    }
    if let Some(inner) = text.strip_suffix('*') {
        return Ok(match frame(inner)? {
            Frame::Ms4(g) => Algebra::Ms4(complex_algebra(&g)?),
            Frame::Mipc(f) => Algebra::Mha(complex_algebra(&f)?),
        });
    }
    if let Some(e) = unknown(text) {
        return Err(e);
    }
    match read_document(Path::new(text))? {
        Document::Algebra(a) => Ok(a),
        Document::Frame(_) => Err(Error::KindMismatch(format!("`{text}` holds a frame, not an algebra"))),
    }
}
