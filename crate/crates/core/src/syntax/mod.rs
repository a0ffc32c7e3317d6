//! Formulas of the two monadic languages: the intuitionistic one with the
//! quantifier modalities `A`/`E`, and the modal one with `box` and `A`.
//!
//! Only a small core of connectives is represented; `~`, `top`, `<->`, `dia`,
//! the modal `E` and the master modality are expanded when formulas are built.

mod corpus;
mod parser;
mod printer;
mod translate;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use corpus::{axiom_corpus, grz, AxiomSet};
pub use parser::parse_formula;
pub use translate::{fresh_disjunction, godel_translate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Lang {
    /// Intuitionistic language with `A` and `E`.
    Int,
    /// Modal language with `box` and `A`.
    Mod,
}

impl Lang {
    pub fn name(self) -> &'static str {
        match self {
            Lang::Int => "int",
            Lang::Mod => "mod",
        }
    }
}

impl std::str::FromStr for Lang {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "int" => Ok(Lang::Int),
            "mod" => Ok(Lang::Mod),
            other => Err(Error::Language(format!("unknown language `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Bot,
    Var(String),
    And(Box<Node>, Box<Node>),
    Or(Box<Node>, Box<Node>),
    Imp(Box<Node>, Box<Node>),
    Forall(Box<Node>),
    /// Intuitionistic language only.
    Exists(Box<Node>),
    /// Modal language only.
    Box(Box<Node>),
}

impl Node {
    pub fn var(name: &str) -> Node {
        Node::Var(name.to_string())
    }

    pub fn and(l: Node, r: Node) -> Node {
        Node::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Node, r: Node) -> Node {
        Node::Or(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Node, r: Node) -> Node {
        Node::Imp(Box::new(l), Box::new(r))
    }

    pub fn forall(sub: Node) -> Node {
        Node::Forall(Box::new(sub))
    }

    pub fn exists(sub: Node) -> Node {
        Node::Exists(Box::new(sub))
    }

    pub fn boxed(sub: Node) -> Node {
        Node::Box(Box::new(sub))
    }

    pub fn top() -> Node {
        Node::imp(Node::Bot, Node::Bot)
    }

    pub fn negation(sub: Node) -> Node {
        Node::imp(sub, Node::Bot)
    }

    pub fn iff(l: Node, r: Node) -> Node {
        Node::and(Node::imp(l.clone(), r.clone()), Node::imp(r, l))
    }

    pub fn diamond(sub: Node) -> Node {
        Node::negation(Node::boxed(Node::negation(sub)))
    }

    /// The modal existential `¬∀¬`.
    pub fn modal_exists(sub: Node) -> Node {
        Node::negation(Node::forall(Node::negation(sub)))
    }

    /// The master modality `□∀`.
    pub fn master(sub: Node) -> Node {
        Node::boxed(Node::forall(sub))
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Node::Bot => {}
            Node::Var(v) => {
                out.insert(v.clone());
            }
            Node::And(l, r) | Node::Or(l, r) | Node::Imp(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Node::Forall(s) | Node::Exists(s) | Node::Box(s) => s.collect_vars(out),
        }
    }

    pub fn rename(&self, f: &impl Fn(&str) -> String) -> Node {
        match self {
            Node::Bot => Node::Bot,
            Node::Var(v) => Node::Var(f(v)),
            Node::And(l, r) => Node::and(l.rename(f), r.rename(f)),
            Node::Or(l, r) => Node::or(l.rename(f), r.rename(f)),
            Node::Imp(l, r) => Node::imp(l.rename(f), r.rename(f)),
            Node::Forall(s) => Node::forall(s.rename(f)),
            Node::Exists(s) => Node::exists(s.rename(f)),
            Node::Box(s) => Node::boxed(s.rename(f)),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Node::Bot | Node::Var(_) => 0,
            Node::And(l, r) | Node::Or(l, r) | Node::Imp(l, r) => 1 + l.depth().max(r.depth()),
            Node::Forall(s) | Node::Exists(s) | Node::Box(s) => 1 + s.depth(),
        }
    }

    fn first_foreign(&self, lang: Lang) -> Option<&'static str> {
        match self {
            Node::Bot | Node::Var(_) => None,
            Node::Exists(_) if lang == Lang::Mod => Some("primitive E"),
            Node::Box(_) if lang == Lang::Int => Some("box"),
            Node::And(l, r) | Node::Or(l, r) | Node::Imp(l, r) => {
                l.first_foreign(lang).or_else(|| r.first_foreign(lang))
            }
            Node::Forall(s) | Node::Exists(s) | Node::Box(s) => s.first_foreign(lang),
        }
    }
}

/// A formula tagged with its language. The tag applies to every subterm.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Formula {
    lang: Lang,
    node: Node,
}

impl Formula {
    /// Tags `node` with `lang`, rejecting constructors foreign to that language.
    pub fn new(lang: Lang, node: Node) -> Result<Self> {
        if let Some(what) = node.first_foreign(lang) {
            return Err(Error::Language(format!(
                "{what} does not belong to the {} language",
                lang.name()
            )));
        }
        Ok(Formula { lang, node })
    }

    pub fn lang(&self) -> Lang {
        self.lang
    }

    pub fn node(&self) -> &Node {
        &self.node
    }

    pub fn into_node(self) -> Node {
        self.node
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.node.collect_vars(&mut out);
        out
    }

    pub fn depth(&self) -> usize {
        self.node.depth()
    }

    pub fn rename(&self, f: impl Fn(&str) -> String) -> Formula {
        Formula {
            lang: self.lang,
            node: self.node.rename(&f),
        }
    }

    /// `■φ`, modal language only.
    pub fn master(&self) -> Result<Formula> {
        if self.lang != Lang::Mod {
            return Err(Error::Language("the master modality needs a modal formula".into()));
        }
        Ok(Formula {
            lang: Lang::Mod,
            node: Node::master(self.node.clone()),
        })
    }

    pub fn or(&self, other: &Formula) -> Result<Formula> {
        if self.lang != other.lang {
            return Err(Error::Language("disjuncts from different languages".into()));
        }
        Ok(Formula {
            lang: self.lang,
            node: Node::or(self.node.clone(), other.node.clone()),
        })
    }
}
