use super::{join_irreducibles, FiniteAlgebra};
use crate::report::ValidationReport;

/// Checks that `map` commutes with every operation; violations are named after
/// the operation.
pub fn is_homomorphism<A: FiniteAlgebra, B: FiniteAlgebra>(a: &A, b: &B, map: &[usize]) -> ValidationReport {
    let mut report = ValidationReport::new();
    if map.len() != a.size() || map.iter().any(|&y| y >= b.size()) {
        report.push("map-shape", [map.len().to_string()]);
        return report;
    }
    if A::KIND != B::KIND {
        report.push("kind", [A::KIND.name(), B::KIND.name()]);
        return report;
    }
    let n = a.size();
    for ((name, ta), (_, tb)) in a.binary_ops().iter().zip(b.binary_ops()) {
        'op: for x in 0..n {
            for y in 0..n {
                if map[ta.get(x, y)] != tb.get(map[x], map[y]) {
                    report.push(name, [a.label(x), a.label(y)]);
                    break 'op;
                }
            }
        }
    }
    for ((name, ua), (_, ub)) in a.unary_ops().iter().zip(b.unary_ops()) {
        if let Some(x) = (0..n).find(|&x| map[ua[x]] != ub[map[x]]) {
            report.push(name, [a.label(x)]);
        }
    }
    if map[a.bot()] != b.bot() || map[a.top()] != b.top() {
        report.push("bounds", [a.label(a.bot()), a.label(a.top())]);
    }
    report
}

pub fn is_embedding<A: FiniteAlgebra, B: FiniteAlgebra>(a: &A, b: &B, map: &[usize]) -> bool {
    let mut seen = vec![false; b.size()];
    is_homomorphism(a, b, map).ok() && map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
}

fn down_size<A: FiniteAlgebra>(a: &A, x: usize) -> usize {
    (0..a.size()).filter(|&y| a.leq(y, x)).count()
}

fn signature<A: FiniteAlgebra>(a: &A, x: usize) -> Vec<usize> {
    let mut sig = vec![down_size(a, x), (0..a.size()).filter(|&y| a.leq(x, y)).count()];
    for (_, u) in a.unary_ops() {
        sig.push(down_size(a, u[x]));
    }
    sig
}

/// An isomorphism `a → b`, found by matching join-irreducibles and extending
/// by joins. Deterministic: the first candidate in search order.
pub fn algebras_isomorphic<A: FiniteAlgebra>(a: &A, b: &A) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    let sig_a: Vec<Vec<usize>> = (0..n).map(|x| signature(a, x)).collect();
    let sig_b: Vec<Vec<usize>> = (0..n).map(|x| signature(b, x)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let ji_a = join_irreducibles(a);
    let ji_b = join_irreducibles(b);
    if ji_a.len() != ji_b.len() {
        return None;
    }

    struct Search<'s, A> {
        a: &'s A,
        b: &'s A,
        ji_a: &'s [usize],
        ji_b: &'s [usize],
        sig_a: &'s [Vec<usize>],
        sig_b: &'s [Vec<usize>],
        chosen: Vec<usize>,
        used: Vec<bool>,
    }

    impl<A: FiniteAlgebra> Search<'_, A> {
        fn extend(&self) -> Option<Vec<usize>> {
            let n = self.a.size();
            let mut map = vec![0; n];
            let mut hit = vec![false; n];
            for (x, slot) in map.iter_mut().enumerate() {
                let y = self
                    .ji_a
                    .iter()
                    .zip(&self.chosen)
                    .filter(|(&j, _)| self.a.leq(j, x))
                    .fold(self.b.bot(), |acc, (_, &k)| self.b.join(acc, self.ji_b[k]));
                if hit[y] {
                    return None;
                }
                hit[y] = true;
                *slot = y;
            }
            is_homomorphism(self.a, self.b, &map).ok().then_some(map)
        }

        fn run(&mut self) -> Option<Vec<usize>> {
            let i = self.chosen.len();
            if i == self.ji_a.len() {
                return self.extend();
            }
            let j = self.ji_a[i];
            for k in 0..self.ji_b.len() {
                let jb = self.ji_b[k];
                if self.used[k] || self.sig_a[j] != self.sig_b[jb] {
                    continue;
                }
                let order_ok = self.chosen.iter().enumerate().all(|(p, &q)| {
                    let (jp, jq) = (self.ji_a[p], self.ji_b[q]);
                    self.a.leq(jp, j) == self.b.leq(jq, jb) && self.a.leq(j, jp) == self.b.leq(jb, jq)
                });
                if !order_ok {
                    continue;
                }
                self.chosen.push(k);
                self.used[k] = true;
                if let Some(map) = self.run() {
                    return Some(map);
                }
                self.chosen.pop();
                self.used[k] = false;
            }
            None
        }
    }

    Search {
        a,
        b,
        ji_a: &ji_a,
        ji_b: &ji_b,
        sig_a: &sig_a,
        sig_b: &sig_b,
        chosen: Vec::new(),
        used: vec![false; ji_b.len()],
    }
    .run()
}
