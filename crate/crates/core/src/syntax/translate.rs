use std::collections::{BTreeMap, BTreeSet};

use super::{Formula, Lang, Node};
use crate::error::{Error, Result};

fn translate_node(node: &Node) -> Node {
    match node {
        Node::Bot => Node::Bot,
        Node::Var(v) => Node::boxed(Node::var(v)),
        Node::And(l, r) => Node::and(translate_node(l), translate_node(r)),
        Node::Or(l, r) => Node::or(translate_node(l), translate_node(r)),
        Node::Imp(l, r) => Node::boxed(Node::or(Node::negation(translate_node(l)), translate_node(r))),
        Node::Forall(s) => Node::master(translate_node(s)),
        Node::Exists(s) => Node::modal_exists(translate_node(s)),
        Node::Box(_) => unreachable!("box in an intuitionistic formula"),
    }
}

/// Gödel translation of an intuitionistic formula into the modal language.
pub fn godel_translate(formula: &Formula) -> Result<Formula> {
    if formula.lang() != Lang::Int {
        return Err(Error::Language("only intuitionistic formulas can be translated".into()));
    }
    Formula::new(Lang::Mod, translate_node(formula.node()))
}

/// `φ ∨ ψ'` where `ψ'` renames every variable shared with `φ` to its least
/// primed variant unused in both formulas.
pub fn fresh_disjunction(left: &Formula, right: &Formula) -> Result<Formula> {
    if left.lang() != right.lang() {
        return Err(Error::Language("disjuncts from different languages".into()));
    }
    let left_vars = left.vars();
    let right_vars = right.vars();
    let mut taken: BTreeSet<String> = left_vars.union(&right_vars).cloned().collect();
    let mut renaming = BTreeMap::new();
    for v in right_vars.intersection(&left_vars) {
        let mut candidate = format!("{v}'");
        while taken.contains(&candidate) {
            candidate.push('\'');
        }
        taken.insert(candidate.clone());
        renaming.insert(v.clone(), candidate);
    }
    let renamed = right.rename(|v| renaming.get(v).cloned().unwrap_or_else(|| v.to_string()));
    left.or(&renamed)
}
