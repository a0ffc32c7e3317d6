//! Finite monadic Heyting algebras and MS4-algebras given by explicit
//! operation tables over the carrier `0..n`.
//!
//! After construction element `0` is the bottom and `n - 1` the top.

mod construct;
mod filters;
mod iso;
mod mha;
mod ms4;
mod si;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::ValidationReport;

pub use construct::{atoms, generated_subalgebra, join_irreducibles, product, subalgebra, subalgebras};
pub use filters::{is_monadic_filter, monadic_filters, quotient, MonadicFilter, Quotient};
pub use iso::{algebras_isomorphic, is_embedding, is_homomorphism};
pub use mha::FiniteMha;
pub use ms4::{open_algebra, FiniteMs4Algebra, OpenAlgebra};
pub use si::{lemma_property_violation, subdirectly_irreducible};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Mha,
    Ms4,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Mha => "mha",
            AlgebraKind::Ms4 => "ms4",
        }
    }
}

/// A square operation table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Table {
    n: usize,
    cells: Vec<usize>,
}

impl Table {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push(f(a, b));
            }
        }
        Table { n, cells }
    }

    pub fn from_rows(rows: &[Vec<usize>], what: &str) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed(format!("{what} table is not square")));
        }
        if rows.iter().flatten().any(|&v| v >= n) {
            return Err(Error::Malformed(format!("{what} table has an entry out of range")));
        }
        Ok(Table {
            n,
            cells: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|c| c.to_vec())
            .collect()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b]
    }

    pub fn set(&mut self, a: usize, b: usize, v: usize) {
        self.cells[a * self.n + b] = v;
    }
}

impl std::fmt::Debug for Table {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// Operations every finite algebra here exposes. Binary operations always
/// start with meet and join; the remaining entries are kind specific.
pub trait FiniteAlgebra: Clone + std::fmt::Debug {
    const KIND: AlgebraKind;

    /// Builds an algebra from operation tables in the order given by
    /// [`binary_ops`](Self::binary_ops) and [`unary_ops`](Self::unary_ops),
    /// renumbering so that bottom is `0` and top is `n - 1`.
    fn from_ops(binary: Vec<Table>, unary: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self>;

    fn size(&self) -> usize;
    fn binary_ops(&self) -> Vec<(&'static str, &Table)>;
    fn unary_ops(&self) -> Vec<(&'static str, &[usize])>;
    fn labels(&self) -> Option<&[String]>;
    fn validate(&self) -> ValidationReport;

    /// `a ↔ b` in the algebra's own implication.
    fn biconditional(&self, a: usize, b: usize) -> usize;

    /// The operator a monadic filter must be closed under: `∀` for MHAs and
    /// `■` for MS4-algebras.
    fn filter_operator(&self, a: usize) -> usize;

    fn meet(&self, a: usize, b: usize) -> usize {
        self.binary_ops()[0].1.get(a, b)
    }

    fn join(&self, a: usize, b: usize) -> usize {
        self.binary_ops()[1].1.get(a, b)
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    fn bot(&self) -> usize {
        0
    }

    fn top(&self) -> usize {
        self.size().saturating_sub(1)
    }

    fn label(&self, a: usize) -> String {
        match self.labels() {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.ok() {
            Ok(())
        } else {
            Err(Error::InvalidAlgebra(report))
        }
    }

    /// The same algebra with new element labels (`None` labels by index).
    fn with_labels(&self, labels: Option<Vec<String>>) -> Result<Self> {
        self.rebuild(self.size(), &|x| x, &|x| x, labels)
    }

    /// Transports the operations to a new carrier `0..m`: each new element
    /// `x` stands for `to_old(x)`, and results are mapped back with `to_new`.
    fn rebuild(
        &self,
        m: usize,
        to_old: &dyn Fn(usize) -> usize,
        to_new: &dyn Fn(usize) -> usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let binary = self
            .binary_ops()
            .iter()
            .map(|(_, t)| Table::from_fn(m, |x, y| to_new(t.get(to_old(x), to_old(y)))))
            .collect();
        let unary = self
            .unary_ops()
            .iter()
            .map(|(_, u)| (0..m).map(|x| to_new(u[to_old(x)])).collect())
            .collect();
        Self::from_ops(binary, unary, labels)
    }
}

/// Either kind of algebra, as loaded from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Algebra {
    Mha(FiniteMha),
    Ms4(FiniteMs4Algebra),
}

impl Algebra {
    pub fn kind(&self) -> AlgebraKind {
        match self {
            Algebra::Mha(_) => AlgebraKind::Mha,
            Algebra::Ms4(_) => AlgebraKind::Ms4,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Algebra::Mha(a) => a.size(),
            Algebra::Ms4(b) => b.size(),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        match self {
            Algebra::Mha(a) => a.validate(),
            Algebra::Ms4(b) => b.validate(),
        }
    }
}

/// Checks shapes of the tables and returns the permutation bringing bottom to
/// `0` and top to `n - 1` (other elements keep their relative order).
pub(crate) fn normalizing_permutation(binary: &[Table], unary: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = binary
        .first()
        .map(Table::size)
        .ok_or_else(|| Error::Malformed("no operation tables".into()))?;
    if n == 0 {
        return Err(Error::Malformed("empty carrier".into()));
    }
    for t in binary {
        if t.size() != n {
            return Err(Error::Malformed("operation tables of different sizes".into()));
        }
    }
    for u in unary {
        if u.len() != n || u.iter().any(|&v| v >= n) {
            return Err(Error::Malformed(
                "unary operation has wrong length or an entry out of range".into(),
            ));
        }
    }
    let (meet, join) = (&binary[0], &binary[1]);
    let bot = (0..n)
        .find(|&b| (0..n).all(|x| meet.get(b, x) == b))
        .ok_or_else(|| Error::Malformed("no least element".into()))?;
    let top = (0..n)
        .find(|&t| (0..n).all(|x| join.get(t, x) == t))
        .ok_or_else(|| Error::Malformed("no greatest element".into()))?;
    if n > 1 && bot == top {
        return Err(Error::Malformed("bottom equals top in a nontrivial carrier".into()));
    }
    let mut order = vec![bot];
    order.extend((0..n).filter(|&x| x != bot && x != top));
    if top != bot {
        order.push(top);
    }
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    Ok(perm)
}

pub(crate) fn permute_ops(
    perm: &[usize],
    binary: Vec<Table>,
    unary: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
) -> (Vec<Table>, Vec<Vec<usize>>, Option<Vec<String>>) {
    if perm.iter().enumerate().all(|(i, &p)| i == p) {
        return (binary, unary, labels);
    }
    let n = perm.len();
    let mut inverse = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    let binary = binary
        .iter()
        .map(|t| Table::from_fn(n, |x, y| perm[t.get(inverse[x], inverse[y])]))
        .collect();
    let unary = unary
        .iter()
        .map(|u| (0..n).map(|x| perm[u[inverse[x]]]).collect())
        .collect();
    let labels = labels.map(|l| (0..n).map(|x| l[inverse[x]].clone()).collect());
    (binary, unary, labels)
}

/// Bounded distributive lattice laws shared by both kinds.
pub(crate) fn check_lattice<A: FiniteAlgebra>(a: &A, report: &mut ValidationReport) {
    let n = a.size();
    let l = |x: usize| a.label(x);
    for x in 0..n {
        if a.meet(x, x) != x || a.join(x, x) != x {
            report.push_once("idempotent", [l(x)]);
        }
        if a.meet(a.bot(), x) != a.bot() || a.join(a.top(), x) != a.top() {
            report.push_once("bounds", [l(x)]);
        }
        for y in 0..n {
            if a.meet(x, y) != a.meet(y, x) || a.join(x, y) != a.join(y, x) {
                report.push_once("commutative", [l(x), l(y)]);
            }
            if a.meet(x, a.join(x, y)) != x || a.join(x, a.meet(x, y)) != x {
                report.push_once("absorption", [l(x), l(y)]);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy_m = a.meet(x, y);
            let xy_j = a.join(x, y);
            for z in 0..n {
                if a.meet(xy_m, z) != a.meet(x, a.meet(y, z)) || a.join(xy_j, z) != a.join(x, a.join(y, z)) {
                    report.push_once("associative", [l(x), l(y), l(z)]);
                }
                if a.meet(x, a.join(y, z)) != a.join(xy_m, a.meet(x, z)) {
                    report.push_once("distributive", [l(x), l(y), l(z)]);
                }
            }
        }
    }
}
