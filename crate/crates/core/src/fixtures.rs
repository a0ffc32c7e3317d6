//! Built-in frames K1 to K5, H1 and H2, and the algebras B1, B2.

use crate::algebras::FiniteMs4Algebra;
use crate::duality::complex_algebra;
use crate::error::{Error, Result};
use crate::frames::Ms4Frame;
use crate::relation::{PointSet, Relation};

pub const NAMES: [&str; 7] = ["K1", "K2", "K3", "K4", "K5", "H1", "H2"];

/// An MS4 frame from Hasse edges of `R` (closed reflexively and
/// transitively) and the `E`-classes.
pub fn ms4_frame(points: &[&str], edges: &[(&str, &str)], classes: &[&[&str]]) -> Ms4Frame {
    let names: Vec<String> = points.iter().map(|p| p.to_string()).collect();
    let at = |p: &str| points.iter().position(|q| *q == p).expect("known point");
    let r =
        Relation::from_pairs(points.len(), edges.iter().map(|&(x, y)| (at(x), at(y)))).reflexive_transitive_closure();
    let classes: Vec<PointSet> = classes.iter().map(|c| c.iter().map(|&p| at(p)).collect()).collect();
    let e = Relation::from_classes(points.len(), &classes);
    Ms4Frame::new(names, r, e).expect("fixture shape")
}

pub fn k1() -> Ms4Frame {
    ms4_frame(
        &["u", "v", "w", "z"],
        &[("u", "v"), ("u", "w"), ("v", "z"), ("w", "z")],
        &[&["u"], &["v", "z"], &["w"]],
    )
}

pub fn k2() -> Ms4Frame {
    ms4_frame(&["a", "b", "c"], &[("a", "b"), ("b", "c")], &[&["a"], &["b", "c"]])
}

pub fn k3() -> Ms4Frame {
    ms4_frame(&["a", "b"], &[("a", "b")], &[&["a", "b"]])
}

pub fn k4() -> Ms4Frame {
    ms4_frame(&["a", "b"], &[("a", "b")], &[&["a"], &["b"]])
}

pub fn k5() -> Ms4Frame {
    ms4_frame(&["a"], &[], &[&["a"]])
}

pub fn h1() -> Ms4Frame {
    ms4_frame(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("c", "d"), ("b", "d"), ("d", "b")],
        &[&["a", "b"], &["c"], &["d"]],
    )
}

pub fn h2() -> Ms4Frame {
    ms4_frame(
        &["u", "v", "w"],
        &[("u", "v"), ("v", "w"), ("w", "v")],
        &[&["u", "v"], &["w"]],
    )
}

pub fn ms4_frames() -> Vec<(&'static str, Ms4Frame)> {
    NAMES.iter().map(|&n| (n, frame(n).expect("registered"))).collect()
}

pub fn frame(name: &str) -> Result<Ms4Frame> {
    match name {
        "K1" => Ok(k1()),
        "K2" => Ok(k2()),
        "K3" => Ok(k3()),
        "K4" => Ok(k4()),
        "K5" => Ok(k5()),
        "H1" => Ok(h1()),
        "H2" => Ok(h2()),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

/// The complex algebra of K1.
pub fn b1() -> FiniteMs4Algebra {
    complex_algebra(&k1()).expect("K1 is valid")
}

/// The complex algebra of K2.
pub fn b2() -> FiniteMs4Algebra {
    complex_algebra(&k2()).expect("K2 is valid")
}
