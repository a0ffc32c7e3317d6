//! Evaluation of formulas in finite algebras and validity by exhaustive
//! search over valuations.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebras::{open_algebra, subdirectly_irreducible, FiniteAlgebra, FiniteMha, FiniteMs4Algebra};
use crate::error::{Error, Result};
use crate::syntax::{fresh_disjunction, godel_translate, Formula, Lang, Node};

/// Variable assignment into the carrier.
pub type Valuation = BTreeMap<String, usize>;

/// Default bound on the number of variables `validates` will enumerate.
pub const DEFAULT_MAX_VARS: usize = 4;

#[derive(Clone, Copy, Debug)]
enum Instr {
    Bot,
    Var(usize),
    And,
    Or,
    Imp,
    Forall,
    Exists,
    Box,
}

/// Algebras that interpret one of the two languages.
pub trait Semantics: FiniteAlgebra {
    const LANG: Lang;

    fn apply_and(&self, a: usize, b: usize) -> usize {
        self.meet(a, b)
    }
    fn apply_or(&self, a: usize, b: usize) -> usize {
        self.join(a, b)
    }
    fn apply_imp(&self, a: usize, b: usize) -> usize;
    fn apply_forall(&self, a: usize) -> usize;
    fn apply_exists(&self, a: usize) -> usize;
    fn apply_box(&self, a: usize) -> usize;
}

impl Semantics for FiniteMha {
    const LANG: Lang = Lang::Int;

    fn apply_imp(&self, a: usize, b: usize) -> usize {
        self.imp(a, b)
    }
    fn apply_forall(&self, a: usize) -> usize {
        self.forall(a)
    }
    fn apply_exists(&self, a: usize) -> usize {
        self.exists(a)
    }
    fn apply_box(&self, _: usize) -> usize {
        unreachable!("box does not occur in intuitionistic formulas")
    }
}

impl Semantics for FiniteMs4Algebra {
    const LANG: Lang = Lang::Mod;

    fn apply_imp(&self, a: usize, b: usize) -> usize {
        self.imp(a, b)
    }
    fn apply_forall(&self, a: usize) -> usize {
        self.forall(a)
    }
    fn apply_exists(&self, a: usize) -> usize {
        self.exists(a)
    }
    fn apply_box(&self, a: usize) -> usize {
        self.boxed(a)
    }
}

/// A formula flattened to postfix form over numbered variables.
struct Compiled {
    code: Vec<Instr>,
    vars: Vec<String>,
}

impl Compiled {
    fn new(formula: &Formula) -> Self {
        let vars: Vec<String> = formula.vars().into_iter().collect();
        let mut code = Vec::new();
        fn emit(node: &Node, vars: &[String], code: &mut Vec<Instr>) {
            match node {
                Node::Bot => code.push(Instr::Bot),
                Node::Var(v) => code.push(Instr::Var(vars.binary_search(v).expect("variable collected"))),
                Node::And(l, r) | Node::Or(l, r) | Node::Imp(l, r) => {
                    emit(l, vars, code);
                    emit(r, vars, code);
                    code.push(match node {
                        Node::And(..) => Instr::And,
                        Node::Or(..) => Instr::Or,
                        _ => Instr::Imp,
                    });
                }
                Node::Forall(s) | Node::Exists(s) | Node::Box(s) => {
                    emit(s, vars, code);
                    code.push(match node {
                        Node::Forall(_) => Instr::Forall,
                        Node::Exists(_) => Instr::Exists,
                        _ => Instr::Box,
                    });
                }
            }
        }
        emit(formula.node(), &vars, &mut code);
        Compiled { code, vars }
    }

    fn run<A: Semantics>(&self, a: &A, values: &[usize], stack: &mut Vec<usize>) -> usize {
        stack.clear();
        for instr in &self.code {
            let v = match *instr {
                Instr::Bot => a.bot(),
                Instr::Var(i) => values[i],
                Instr::Forall | Instr::Exists | Instr::Box => {
                    let x = stack.pop().unwrap();
                    match instr {
                        Instr::Forall => a.apply_forall(x),
                        Instr::Exists => a.apply_exists(x),
                        _ => a.apply_box(x),
                    }
                }
                Instr::And | Instr::Or | Instr::Imp => {
                    let y = stack.pop().unwrap();
                    let x = stack.pop().unwrap();
                    match instr {
                        Instr::And => a.apply_and(x, y),
                        Instr::Or => a.apply_or(x, y),
                        _ => a.apply_imp(x, y),
                    }
                }
            };
            stack.push(v);
        }
        stack.pop().unwrap()
    }
}

fn check_lang<A: Semantics>(formula: &Formula) -> Result<()> {
    if formula.lang() != A::LANG {
        return Err(Error::KindMismatch(format!(
            "{} formula cannot be evaluated in an {} algebra",
            formula.lang().name(),
            A::KIND.name()
        )));
    }
    Ok(())
}

/// The value of `formula` under `valuation`.
pub fn evaluate<A: Semantics>(a: &A, valuation: &Valuation, formula: &Formula) -> Result<usize> {
    check_lang::<A>(formula)?;
    let compiled = Compiled::new(formula);
    let mut values = Vec::with_capacity(compiled.vars.len());
    for v in &compiled.vars {
        let x = *valuation.get(v).ok_or_else(|| Error::UnassignedVariable(v.clone()))?;
        if x >= a.size() {
            return Err(Error::Malformed(format!("value {x} of `{v}` is outside the carrier")));
        }
        values.push(x);
    }
    Ok(compiled.run(a, &values, &mut Vec::new()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validity {
    pub holds: bool,
    /// The lexicographically least valuation refuting the formula.
    pub counter: Option<Valuation>,
}

/// Validity with the default variable bound.
pub fn validates<A: Semantics>(a: &A, formula: &Formula) -> Result<Validity> {
    validates_with_limit(a, formula, DEFAULT_MAX_VARS)
}

/// Tries every valuation of the formula's variables in lexicographic order
/// (variables sorted by name) and stops at the first one not giving top.
pub fn validates_with_limit<A: Semantics>(a: &A, formula: &Formula, max_vars: usize) -> Result<Validity> {
    check_lang::<A>(formula)?;
    let compiled = Compiled::new(formula);
    let k = compiled.vars.len();
    if k > max_vars {
        return Err(Error::TooManyVariables {
            found: k,
            limit: max_vars,
        });
    }
    let n = a.size();
    let mut values = vec![0; k];
    let mut stack = Vec::new();
    loop {
        if compiled.run(a, &values, &mut stack) != a.top() {
            let counter = compiled.vars.iter().cloned().zip(values).collect();
            return Ok(Validity {
                holds: false,
                counter: Some(counter),
            });
        }
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(Validity {
                    holds: true,
                    counter: None,
                });
            }
            i -= 1;
            values[i] += 1;
            if values[i] < n {
                break;
            }
            values[i] = 0;
        }
    }
}

/// Compares validity of `formula` in `O(b)` with validity of its Gödel
/// translation in `b`.
pub fn translation_equivalence(b: &FiniteMs4Algebra, formula: &Formula) -> Result<bool> {
    let open = open_algebra(b)?.algebra;
    let left = validates(&open, formula)?.holds;
    let right = validates(b, &godel_translate(formula)?)?.holds;
    Ok(left == right)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionStep {
    /// `b ⊨ ■γ1 ∨′ ■γ2`
    pub disjunction_valid: bool,
    /// `b ⊨ γ1` or `b ⊨ γ2`
    pub some_disjunct_valid: bool,
}

impl IntersectionStep {
    pub fn holds(&self) -> bool {
        self.disjunction_valid == self.some_disjunct_valid
    }
}

/// On a subdirectly irreducible `b`, validity of `■γ1 ∨′ ■γ2` against
/// validity of one of `γ1`, `γ2`.
pub fn intersection_step(b: &FiniteMs4Algebra, g1: &Formula, g2: &Formula) -> Result<IntersectionStep> {
    if !subdirectly_irreducible(b)? {
        return Err(Error::NotSubdirectlyIrreducible);
    }
    let disjunction = fresh_disjunction(&g1.master()?, &g2.master()?)?;
    Ok(IntersectionStep {
        disjunction_valid: validates(b, &disjunction)?.holds,
        some_disjunct_valid: validates(b, g1)?.holds || validates(b, g2)?.holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::syntax::{axiom_corpus, grz, parse_formula, AxiomSet};

    fn int(s: &str) -> Formula {
        parse_formula(s, Lang::Int).unwrap()
    }

    fn modal(s: &str) -> Formula {
        parse_formula(s, Lang::Mod).unwrap()
    }

    #[test]
    fn forall_top_is_top() {
        let o = open_algebra(&fixtures::b2()).unwrap().algebra;
        let v = Valuation::from([("p".to_string(), o.top())]);
        assert_eq!(evaluate(&o, &v, &int("A p")).unwrap(), o.top());
    }

    #[test]
    fn left_commutativity_everywhere_in_b2() {
        let b = fixtures::b2();
        let f = modal("box A p -> A box p");
        for x in 0..b.size() {
            let v = Valuation::from([("p".to_string(), x)]);
            assert_eq!(evaluate(&b, &v, &f).unwrap(), b.top());
        }
    }

    #[test]
    fn grz_and_corpus() {
        assert!(validates(&fixtures::b1(), &grz()).unwrap().holds);
        assert!(validates(&fixtures::b2(), &grz()).unwrap().holds);
        let o = open_algebra(&fixtures::b1()).unwrap().algebra;
        for f in axiom_corpus(AxiomSet::Mipc) {
            assert!(validates(&o, &f).unwrap().holds, "{f}");
        }
        for f in axiom_corpus(AxiomSet::Ms4) {
            assert!(validates(&fixtures::b1(), &f).unwrap().holds, "{f}");
        }
    }

    #[test]
    fn excluded_middle_fails_in_open_b1() {
        let o = open_algebra(&fixtures::b1()).unwrap().algebra;
        let r = validates(&o, &int("p | ~p")).unwrap();
        assert!(!r.holds);
        let counter = r.counter.unwrap();
        // brute-force oracle: least element x with x ∨ ¬x ≠ ⊤
        let least = (0..o.size()).find(|&x| o.join(x, o.neg(x)) != o.top()).unwrap();
        assert_eq!(counter["p"], least);
    }

    #[test]
    fn errors() {
        let b = fixtures::b2();
        assert!(matches!(
            evaluate(&b, &Valuation::new(), &modal("p")),
            Err(Error::UnassignedVariable(_))
        ));
        assert!(matches!(validates(&b, &int("p")), Err(Error::KindMismatch(_))));
        assert!(matches!(
            validates(&b, &modal("p & q & r & s & t")),
            Err(Error::TooManyVariables { found: 5, limit: 4 })
        ));
    }

    #[test]
    fn translation_on_corpus_and_bot() {
        for b in [fixtures::b1(), fixtures::b2()] {
            for f in axiom_corpus(AxiomSet::Mipc) {
                assert!(translation_equivalence(&b, &f).unwrap());
            }
            assert!(translation_equivalence(&b, &int("bot")).unwrap());
        }
    }

    #[test]
    fn intersection_examples() {
        let b2 = fixtures::b2();
        let s = intersection_step(&b2, &modal("p -> p"), &modal("q")).unwrap();
        assert!(s.holds() && s.disjunction_valid);
        let s = intersection_step(&b2, &grz(), &modal("p | ~p")).unwrap();
        assert!(s.holds() && s.disjunction_valid);
        let s = intersection_step(&fixtures::b1(), &modal("p"), &modal("q")).unwrap();
        assert!(s.holds() && !s.disjunction_valid && !s.some_disjunct_valid);
        let k5 = fixtures::k5();
        let two = crate::duality::complex_algebra(&k5).unwrap();
        let prod = crate::algebras::product(&two, &two).unwrap();
        assert!(matches!(
            intersection_step(&prod, &modal("p"), &modal("q")),
            Err(Error::NotSubdirectlyIrreducible)
        ));
    }
}
