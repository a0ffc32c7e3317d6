//! Graphviz output. `R` is drawn as its Hasse diagram with solid arrows
//! (double arrows inside `R`-clusters); `E` (or `E_Q`) classes become boxes.

use std::fmt::Write;

use crate::frames::{FiniteFrame, MipcFrame, Ms4Frame};
use crate::relation::Relation;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn dot<F: FiniteFrame>(frame: &F, title: &str, classes: &Relation, class_label: &str) -> String {
    let r = frame.r();
    let n = frame.len();
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(title)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
    for (i, class) in classes.classes().iter().enumerate() {
        write!(
            out,
            "  subgraph cluster_{i} {{ label={}; style=rounded; color=red;",
            quote(class_label)
        )
        .unwrap();
        for x in class.iter() {
            write!(out, " {};", quote(frame.name(x))).unwrap();
        }
        writeln!(out, " }}").unwrap();
    }
    let strictly = |x: usize, y: usize| r.holds(x, y) && !r.holds(y, x);
    for x in 0..n {
        for y in 0..n {
            if x == y || !r.holds(x, y) {
                continue;
            }
            if r.holds(y, x) {
                if x < y {
                    writeln!(
                        out,
                        "  {} -> {} [dir=both];",
                        quote(frame.name(x)),
                        quote(frame.name(y))
                    )
                    .unwrap();
                }
                continue;
            }
            let covered = (0..n).any(|z| strictly(x, z) && strictly(z, y));
            // one representative arrow per pair of R-clusters
            let first_x = (0..n).find(|&a| r.holds(a, x) && r.holds(x, a)) == Some(x);
            let first_y = (0..n).find(|&b| r.holds(b, y) && r.holds(y, b)) == Some(y);
            if !covered && first_x && first_y {
                writeln!(out, "  {} -> {};", quote(frame.name(x)), quote(frame.name(y))).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn ms4_to_dot(frame: &Ms4Frame, title: &str) -> String {
    dot(frame, title, frame.e(), "E")
}

pub fn mipc_to_dot(frame: &MipcFrame, title: &str) -> String {
    dot(frame, title, &frame.e_q(), "E_Q")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k1_dot() {
        let text = ms4_to_dot(&fixtures::k1(), "K1");
        assert!(text.starts_with("digraph \"K1\" {"));
        assert_eq!(text.matches("->").count(), 4);
        assert_eq!(text.matches("subgraph cluster_").count(), 3);
        assert!(text.contains("\"u\" -> \"v\";"));
        assert!(!text.contains("\"u\" -> \"z\""));
    }

    #[test]
    fn h1_dot_has_double_arrow() {
        let text = ms4_to_dot(&fixtures::h1(), "H1");
        assert!(text.contains("\"b\" -> \"d\" [dir=both];"));
        assert!(text.contains("\"a\" -> \"b\";"));
        assert!(!text.contains("\"a\" -> \"d\""));
        assert!(text.contains("\"c\" -> \"b\";"));
    }
}
