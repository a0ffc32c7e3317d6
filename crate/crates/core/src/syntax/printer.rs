//! Printing with minimal parentheses. Expanded sugar is folded back where the
//! pattern is recognisable, so `parse(print(φ)) == φ`.

use std::fmt;

use super::{Formula, Lang, Node};

const IFF: u8 = 0;
const IMP: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const PREFIX: u8 = 4;
const ATOM: u8 = 5;

enum View<'a> {
    Atom(String),
    Prefix(&'static str, &'a Node),
    Binary(u8, &'static str, &'a Node, &'a Node),
}

fn negated(node: &Node) -> Option<&Node> {
    match node {
        Node::Imp(x, r) if **r == Node::Bot => Some(x),
        _ => None,
    }
}

fn view(node: &Node, lang: Lang) -> View<'_> {
    match node {
        Node::Bot => View::Atom("bot".into()),
        Node::Var(v) => View::Atom(v.clone()),
        Node::Imp(l, r) if **l == Node::Bot && **r == Node::Bot => View::Atom("top".into()),
        Node::Imp(l, r) if **r == Node::Bot => {
            if lang == Lang::Mod {
                match &**l {
                    Node::Forall(inner) => {
                        if let Some(x) = negated(inner) {
                            return View::Prefix("E ", x);
                        }
                    }
                    Node::Box(inner) => {
                        if let Some(x) = negated(inner) {
                            return View::Prefix("dia ", x);
                        }
                    }
                    _ => {}
                }
            }
            View::Prefix("~", l)
        }
        Node::Imp(l, r) => View::Binary(IMP, "->", l, r),
        Node::And(l, r) => match (&**l, &**r) {
            (Node::Imp(a, b), Node::Imp(b2, a2)) if a == a2 && b == b2 => View::Binary(IFF, "<->", a, b),
            _ => View::Binary(AND, "&", l, r),
        },
        Node::Or(l, r) => View::Binary(OR, "|", l, r),
        Node::Forall(s) => View::Prefix("A ", s),
        Node::Exists(s) => View::Prefix("E ", s),
        Node::Box(s) => View::Prefix("box ", s),
    }
}

fn write_node(f: &mut fmt::Formatter<'_>, node: &Node, lang: Lang, min: u8) -> fmt::Result {
    let v = view(node, lang);
    let level = match &v {
        View::Atom(_) => ATOM,
        View::Prefix(..) => PREFIX,
        View::Binary(level, ..) => *level,
    };
    let wrap = level < min;
    if wrap {
        f.write_str("(")?;
    }
    match v {
        View::Atom(s) => f.write_str(&s)?,
        View::Prefix(op, sub) => {
            f.write_str(op)?;
            write_node(f, sub, lang, PREFIX)?;
        }
        View::Binary(level, op, l, r) => {
            let (lmin, rmin) = match level {
                IFF => (IMP, IFF),
                IMP => (OR, IMP),
                OR => (OR, AND),
                _ => (AND, PREFIX),
            };
            write_node(f, l, lang, lmin)?;
            write!(f, " {op} ")?;
            write_node(f, r, lang, rmin)?;
        }
    }
    if wrap {
        f.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_node(f, &self.node, self.lang, IFF)
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_formula;
    use super::*;

    fn show(text: &str, lang: Lang) -> String {
        parse_formula(text, lang).unwrap().to_string()
    }

    #[test]
    fn sugar_comes_back() {
        assert_eq!(show("~p", Lang::Int), "~p");
        assert_eq!(show("top", Lang::Mod), "top");
        assert_eq!(show("E p", Lang::Mod), "E p");
        assert_eq!(show("dia p", Lang::Mod), "dia p");
        assert_eq!(show("p <-> q", Lang::Int), "p <-> q");
    }

    #[test]
    fn parentheses_are_minimal() {
        assert_eq!(show("(p & q) | r", Lang::Int), "p & q | r");
        assert_eq!(show("p & (q | r)", Lang::Int), "p & (q | r)");
        assert_eq!(show("(p -> q) -> r", Lang::Int), "(p -> q) -> r");
        assert_eq!(show("p -> (q -> r)", Lang::Int), "p -> q -> r");
        assert_eq!(show("A (p & q)", Lang::Int), "A (p & q)");
        assert_eq!(
            show("box(box(p -> box p) -> p) -> p", Lang::Mod),
            "box (box (p -> box p) -> p) -> p"
        );
    }
}
