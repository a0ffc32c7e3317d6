use super::{parse_formula, Formula, Lang};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomSet {
    Mipc,
    Ms4,
    Grz,
}

impl std::str::FromStr for AxiomSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mipc" => Ok(AxiomSet::Mipc),
            "ms4" => Ok(AxiomSet::Ms4),
            "grz" => Ok(AxiomSet::Grz),
            other => Err(Error::UnknownCorpus(other.to_string())),
        }
    }
}

const MIPC: [&str; 9] = [
    // S4 for A
    "A(p & q) <-> (A p & A q)",
    "A p -> p",
    "A p -> A A p",
    // S5 for E
    "E(p | q) <-> (E p | E q)",
    "p -> E p",
    "E E p -> E p",
    "(E p & E q) -> E(E p & q)",
    // A and E together
    "E A p <-> A p",
    "E p <-> A E p",
];

const MS4: [&str; 8] = [
    // S4 for box
    "box(p & q) <-> (box p & box q)",
    "box p -> p",
    "box p -> box box p",
    // S5 for A
    "A(p & q) <-> (A p & A q)",
    "A p -> p",
    "A p -> A A p",
    "E p -> A E p",
    // left commutativity
    "box A p -> A box p",
];

const GRZ: &str = "box(box(p -> box p) -> p) -> p";

pub fn grz() -> Formula {
    parse_formula(GRZ, Lang::Mod).expect("grz parses")
}

/// The named axiom lists: the quantifier axioms of MIPC, the modal axioms of
/// MS4 (S4 for `box`, S5 for `A`, left commutativity), or the single `grz`.
pub fn axiom_corpus(set: AxiomSet) -> Vec<Formula> {
    let (lang, texts): (Lang, &[&str]) = match set {
        AxiomSet::Mipc => (Lang::Int, &MIPC),
        AxiomSet::Ms4 => (Lang::Mod, &MS4),
        AxiomSet::Grz => return vec![grz()],
    };
    texts
        .iter()
        .map(|t| parse_formula(t, lang).expect("built-in axiom parses"))
        .collect()
}
