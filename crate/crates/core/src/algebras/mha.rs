use super::{check_lattice, normalizing_permutation, permute_ops, AlgebraKind, FiniteAlgebra, Table};
use crate::error::{Error, Result};
use crate::report::ValidationReport;

/// A finite monadic Heyting algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMha {
    meet: Table,
    join: Table,
    imp: Table,
    forall: Vec<usize>,
    exists: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteMha {
    pub fn new(
        meet: Table,
        join: Table,
        imp: Table,
        forall: Vec<usize>,
        exists: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        Self::from_ops(vec![meet, join, imp], vec![forall, exists], labels)
    }

    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.imp.get(a, b)
    }

    pub fn forall(&self, a: usize) -> usize {
        self.forall[a]
    }

    pub fn exists(&self, a: usize) -> usize {
        self.exists[a]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.imp(a, 0)
    }

    pub fn meet_table(&self) -> &Table {
        &self.meet
    }

    pub fn join_table(&self) -> &Table {
        &self.join
    }

    pub fn imp_table(&self) -> &Table {
        &self.imp
    }

    pub fn forall_vec(&self) -> &[usize] {
        &self.forall
    }

    pub fn exists_vec(&self) -> &[usize] {
        &self.exists
    }

    /// `H0 = {∀a}`, after checking it agrees with the fixpoints of `∀`, the
    /// fixpoints of `∃` and the image of `∃`.
    pub fn fixpoint_subalgebra(&self) -> Result<Vec<usize>> {
        let n = self.size();
        let mut image_forall: Vec<usize> = self.forall.clone();
        image_forall.sort_unstable();
        image_forall.dedup();
        let mut image_exists: Vec<usize> = self.exists.clone();
        image_exists.sort_unstable();
        image_exists.dedup();
        let fixed_forall: Vec<usize> = (0..n).filter(|&a| self.forall[a] == a).collect();
        let fixed_exists: Vec<usize> = (0..n).filter(|&a| self.exists[a] == a).collect();
        if image_forall != fixed_forall || fixed_forall != fixed_exists || fixed_exists != image_exists {
            let mut report = ValidationReport::new();
            report.push("fixpoints-coincide", Vec::<String>::new());
            return Err(Error::InvalidAlgebra(report));
        }
        Ok(fixed_forall)
    }
}

impl FiniteAlgebra for FiniteMha {
    const KIND: AlgebraKind = AlgebraKind::Mha;

    fn from_ops(binary: Vec<Table>, unary: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        if binary.len() != 3 || unary.len() != 2 {
            return Err(Error::Malformed(
                "a monadic Heyting algebra needs meet, join, imp, forall and exists".into(),
            ));
        }
        if labels.as_ref().is_some_and(|l| l.len() != binary[0].size()) {
            return Err(Error::Malformed("label count differs from carrier size".into()));
        }
        let perm = normalizing_permutation(&binary, &unary)?;
        let (binary, unary, labels) = permute_ops(&perm, binary, unary, labels);
        let mut b = binary.into_iter();
        let mut u = unary.into_iter();
        Ok(FiniteMha {
            meet: b.next().unwrap(),
            join: b.next().unwrap(),
            imp: b.next().unwrap(),
            forall: u.next().unwrap(),
            exists: u.next().unwrap(),
            labels,
        })
    }

    fn size(&self) -> usize {
        self.forall.len()
    }

    fn binary_ops(&self) -> Vec<(&'static str, &Table)> {
        vec![("meet", &self.meet), ("join", &self.join), ("imp", &self.imp)]
    }

    fn unary_ops(&self) -> Vec<(&'static str, &[usize])> {
        vec![("forall", &self.forall), ("exists", &self.exists)]
    }

    fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    fn biconditional(&self, a: usize, b: usize) -> usize {
        self.meet(self.imp(a, b), self.imp(b, a))
    }

    fn filter_operator(&self, a: usize) -> usize {
        self.forall[a]
    }

    fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        check_lattice(self, &mut report);
        let n = self.size();
        let l = |x: usize| self.label(x);
        let (all, ex) = (&self.forall, &self.exists);
        for a in 0..n {
            for b in 0..n {
                let ab = self.meet(a, b);
                for c in 0..n {
                    if self.leq(ab, c) != self.leq(a, self.imp(b, c)) {
                        report.push_once("residuation", [l(a), l(b), l(c)]);
                    }
                }
                if all[ab] != self.meet(all[a], all[b]) {
                    report.push_once("forall-meet", [l(a), l(b)]);
                }
                if ex[self.join(a, b)] != self.join(ex[a], ex[b]) {
                    report.push_once("exists-join", [l(a), l(b)]);
                }
                if !self.leq(self.meet(ex[a], ex[b]), ex[self.meet(ex[a], b)]) {
                    report.push_once("exists-meet", [l(a), l(b)]);
                }
            }
            if !self.leq(all[a], a) {
                report.push_once("forall-deflationary", [l(a)]);
            }
            if !self.leq(all[a], all[all[a]]) {
                report.push_once("forall-idempotent", [l(a)]);
            }
            if !self.leq(a, ex[a]) {
                report.push_once("exists-inflationary", [l(a)]);
            }
            if !self.leq(ex[ex[a]], ex[a]) {
                report.push_once("exists-idempotent", [l(a)]);
            }
            if ex[all[a]] != all[a] {
                report.push_once("exists-forall", [l(a)]);
            }
            if all[ex[a]] != ex[a] {
                report.push_once("forall-exists", [l(a)]);
            }
        }
        if all[self.top()] != self.top() {
            report.push_once("forall-top", [l(self.top())]);
        }
        if ex[self.bot()] != self.bot() {
            report.push_once("exists-bot", [l(self.bot())]);
        }
        if !report.ok() {
            return report;
        }
        let h0 = match self.fixpoint_subalgebra() {
            Ok(h0) => h0,
            Err(_) => {
                report.push("fixpoints-coincide", Vec::<String>::new());
                return report;
            }
        };
        let in_h0 = |x: usize| all[x] == x;
        for &h in &h0 {
            for &k in &h0 {
                for v in [self.meet(h, k), self.join(h, k), self.imp(h, k)] {
                    if !in_h0(v) {
                        report.push_once("fixpoints-subalgebra", [l(h), l(k)]);
                    }
                }
            }
            for a in 0..n {
                if self.leq(h, a) != self.leq(h, all[a]) {
                    report.push_once("forall-right-adjoint", [l(h), l(a)]);
                }
                if self.leq(ex[a], h) != self.leq(a, h) {
                    report.push_once("exists-left-adjoint", [l(a), l(h)]);
                }
            }
        }
        if !in_h0(self.bot()) || !in_h0(self.top()) {
            report.push_once("fixpoints-subalgebra", [l(self.bot()), l(self.top())]);
        }
        report
    }
}
