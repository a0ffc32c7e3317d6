use super::{check_lattice, normalizing_permutation, permute_ops, AlgebraKind, FiniteAlgebra, FiniteMha, Table};
use crate::error::{Error, Result};
use crate::report::ValidationReport;

/// A finite MS4-algebra: a boolean algebra with an S4 box and an S5 universal
/// quantifier satisfying left commutativity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMs4Algebra {
    meet: Table,
    join: Table,
    neg: Vec<usize>,
    boxed: Vec<usize>,
    forall: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteMs4Algebra {
    pub fn new(
        meet: Table,
        join: Table,
        neg: Vec<usize>,
        boxed: Vec<usize>,
        forall: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        Self::from_ops(vec![meet, join], vec![neg, boxed, forall], labels)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn boxed(&self, a: usize) -> usize {
        self.boxed[a]
    }

    pub fn forall(&self, a: usize) -> usize {
        self.forall[a]
    }

    /// `∃a = ¬∀¬a`.
    pub fn exists(&self, a: usize) -> usize {
        self.neg[self.forall[self.neg[a]]]
    }

    /// The master modality `■a = □∀a`.
    pub fn master(&self, a: usize) -> usize {
        self.boxed[self.forall[a]]
    }

    /// Boolean implication `¬a ∨ b`.
    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.join(self.neg[a], b)
    }

    pub fn meet_table(&self) -> &Table {
        &self.meet
    }

    pub fn join_table(&self) -> &Table {
        &self.join
    }

    pub fn neg_vec(&self) -> &[usize] {
        &self.neg
    }

    pub fn box_vec(&self) -> &[usize] {
        &self.boxed
    }

    pub fn forall_vec(&self) -> &[usize] {
        &self.forall
    }

    /// `B0 = {∀a}`, after checking it equals the fixpoints of `∀`.
    pub fn fixpoint_subalgebra(&self) -> Result<Vec<usize>> {
        let mut image: Vec<usize> = self.forall.clone();
        image.sort_unstable();
        image.dedup();
        let fixed: Vec<usize> = (0..self.size()).filter(|&a| self.forall[a] == a).collect();
        if image != fixed {
            let mut report = ValidationReport::new();
            report.push("fixpoints-coincide", Vec::<String>::new());
            return Err(Error::InvalidAlgebra(report));
        }
        Ok(fixed)
    }

    /// The open elements, `□a = a`, in carrier order.
    pub fn open_elements(&self) -> Vec<usize> {
        (0..self.size()).filter(|&a| self.boxed[a] == a).collect()
    }
}

impl FiniteAlgebra for FiniteMs4Algebra {
    const KIND: AlgebraKind = AlgebraKind::Ms4;

    fn from_ops(binary: Vec<Table>, unary: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        if binary.len() != 2 || unary.len() != 3 {
            return Err(Error::Malformed(
                "an MS4-algebra needs meet, join, neg, box and forall".into(),
            ));
        }
        if labels.as_ref().is_some_and(|l| l.len() != binary[0].size()) {
            return Err(Error::Malformed("label count differs from carrier size".into()));
        }
        let perm = normalizing_permutation(&binary, &unary)?;
        let (binary, unary, labels) = permute_ops(&perm, binary, unary, labels);
        let mut b = binary.into_iter();
        let mut u = unary.into_iter();
        Ok(FiniteMs4Algebra {
            meet: b.next().unwrap(),
            join: b.next().unwrap(),
            neg: u.next().unwrap(),
            boxed: u.next().unwrap(),
            forall: u.next().unwrap(),
            labels,
        })
    }

    fn size(&self) -> usize {
        self.neg.len()
    }

    fn binary_ops(&self) -> Vec<(&'static str, &Table)> {
        vec![("meet", &self.meet), ("join", &self.join)]
    }

    fn unary_ops(&self) -> Vec<(&'static str, &[usize])> {
        vec![("neg", &self.neg), ("box", &self.boxed), ("forall", &self.forall)]
    }

    fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    fn biconditional(&self, a: usize, b: usize) -> usize {
        self.meet(self.imp(a, b), self.imp(b, a))
    }

    fn filter_operator(&self, a: usize) -> usize {
        self.master(a)
    }

    fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        check_lattice(self, &mut report);
        let n = self.size();
        let (top, bot) = (self.top(), self.bot());
        let l = |x: usize| self.label(x);
        for a in 0..n {
            if self.meet(a, self.neg[a]) != bot || self.join(a, self.neg[a]) != top {
                report.push_once("complement", [l(a)]);
            }
        }
        for (name, op) in [("box", &self.boxed), ("forall", &self.forall)] {
            if op[top] != top {
                report.push_once(&format!("{name}-top"), [l(top)]);
            }
            for a in 0..n {
                if !self.leq(op[a], a) {
                    report.push_once(&format!("{name}-deflationary"), [l(a)]);
                }
                if !self.leq(op[a], op[op[a]]) {
                    report.push_once(&format!("{name}-idempotent"), [l(a)]);
                }
                for b in 0..n {
                    if op[self.meet(a, b)] != self.meet(op[a], op[b]) {
                        report.push_once(&format!("{name}-meet"), [l(a), l(b)]);
                    }
                }
            }
        }
        for a in 0..n {
            if !self.leq(self.exists(a), self.forall[self.exists(a)]) {
                report.push_once("forall-s5", [l(a)]);
            }
            if !self.leq(self.boxed[self.forall[a]], self.forall[self.boxed[a]]) {
                report.push_once("left-commutativity", [l(a)]);
            }
        }
        if !report.ok() {
            return report;
        }
        for a in 0..n {
            let m = self.master(a);
            let values = [
                self.master(self.boxed[a]),
                self.boxed[m],
                self.master(self.forall[a]),
                self.forall[m],
            ];
            if values.iter().any(|&v| v != m) {
                report.push_once("master-identities", [l(a)]);
            }
        }
        if self.fixpoint_subalgebra().is_err() {
            report.push("fixpoints-coincide", Vec::<String>::new());
        }
        report
    }
}

/// The open-element algebra together with its inclusion into the source.
#[derive(Clone, Debug)]
pub struct OpenAlgebra {
    pub algebra: FiniteMha,
    /// `inclusion[i]` is the element of the MS4-algebra that `i` stands for.
    pub inclusion: Vec<usize>,
}

/// `O(B)`: the open elements with `a → b = □(¬a ∨ b)`, `∀ = ■` and `∃`
/// restricted.
pub fn open_algebra(b: &FiniteMs4Algebra) -> Result<OpenAlgebra> {
    b.ensure_valid()?;
    let carrier = b.open_elements();
    let m = carrier.len();
    let mut index = vec![usize::MAX; b.size()];
    for (i, &x) in carrier.iter().enumerate() {
        index[x] = i;
    }
    let to_new = |x: usize| -> Result<usize> {
        match index[x] {
            usize::MAX => Err(Error::CrossCheck(format!("element {} should be open", b.label(x)))),
            i => Ok(i),
        }
    };
    let binary_fn = |f: &dyn Fn(usize, usize) -> usize| -> Result<Table> {
        let mut t = Table::from_fn(m, |_, _| 0);
        for i in 0..m {
            for j in 0..m {
                t.set(i, j, to_new(f(carrier[i], carrier[j]))?);
            }
        }
        Ok(t)
    };
    let unary_fn =
        |f: &dyn Fn(usize) -> usize| -> Result<Vec<usize>> { carrier.iter().map(|&x| to_new(f(x))).collect() };
    let meet = binary_fn(&|x, y| b.meet(x, y))?;
    let join = binary_fn(&|x, y| b.join(x, y))?;
    let imp = binary_fn(&|x, y| b.boxed(b.imp(x, y)))?;
    let forall = unary_fn(&|x| b.master(x))?;
    let exists = unary_fn(&|x| b.exists(x))?;
    let labels = b.labels().map(|l| carrier.iter().map(|&x| l[x].clone()).collect());
    let algebra = FiniteMha::new(meet, join, imp, forall, exists, labels)?;
    Ok(OpenAlgebra {
        algebra,
        inclusion: carrier,
    })
}
