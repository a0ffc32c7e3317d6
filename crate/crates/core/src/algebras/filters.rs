use serde::Serialize;

use super::FiniteAlgebra;
use crate::error::{Error, Result};

/// A monadic filter, stored as its sorted member list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MonadicFilter {
    members: Vec<usize>,
}

impl MonadicFilter {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The least member (filters of finite lattices are principal).
    pub fn generator<A: FiniteAlgebra>(&self, a: &A) -> usize {
        self.members.iter().fold(a.top(), |acc, &x| a.meet(acc, x))
    }

    /// Checks the defining conditions and builds the filter.
    pub fn new<A: FiniteAlgebra>(a: &A, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&x) = members.iter().find(|&&x| x >= a.size()) {
            return Err(Error::NotMonadicFilter(format!("element {x} out of range")));
        }
        let f = MonadicFilter { members };
        if !f.contains(a.top()) {
            return Err(Error::NotMonadicFilter("top is missing".into()));
        }
        for &x in &f.members {
            for y in 0..a.size() {
                if a.leq(x, y) && !f.contains(y) {
                    return Err(Error::NotMonadicFilter(format!(
                        "not upward closed: {} <= {}",
                        a.label(x),
                        a.label(y)
                    )));
                }
            }
            for &y in &f.members {
                if !f.contains(a.meet(x, y)) {
                    return Err(Error::NotMonadicFilter(format!(
                        "not closed under meet: {}, {}",
                        a.label(x),
                        a.label(y)
                    )));
                }
            }
            for (name, op) in a.unary_ops() {
                if (name == "forall" || name == "box") && !f.contains(op[x]) {
                    return Err(Error::NotMonadicFilter(format!(
                        "not closed under {name}: {}",
                        a.label(x)
                    )));
                }
            }
        }
        Ok(f)
    }

    pub fn principal<A: FiniteAlgebra>(a: &A, generator: usize) -> Result<Self> {
        Self::new(a, (0..a.size()).filter(|&y| a.leq(generator, y)))
    }
}

pub fn is_monadic_filter<A: FiniteAlgebra>(a: &A, members: &[usize]) -> bool {
    MonadicFilter::new(a, members.iter().copied()).is_ok()
}

/// All monadic filters, ordered by size and then by members. These are the
/// principal filters of the fixpoints of `∀` (MHA) or `■` (MS4).
pub fn monadic_filters<A: FiniteAlgebra>(a: &A) -> Vec<MonadicFilter> {
    let mut out: Vec<MonadicFilter> = (0..a.size())
        .filter(|&g| a.filter_operator(g) == g)
        .map(|g| MonadicFilter::principal(a, g).expect("fixpoint generates a monadic filter"))
        .collect();
    out.sort_by(|x, y| (x.len(), &x.members).cmp(&(y.len(), &y.members)));
    out
}

#[derive(Clone, Debug)]
pub struct Quotient<A> {
    pub algebra: A,
    /// `projection[x]` is the class of `x` in the quotient.
    pub projection: Vec<usize>,
}

/// Quotient by the congruence `a ≡ b ⇔ (a ↔ b) ∈ F`. Each class is
/// represented by its least element; classes keep carrier order except that
/// the class of top comes last.
pub fn quotient<A: FiniteAlgebra>(a: &A, filter: &MonadicFilter) -> Result<Quotient<A>> {
    let filter = MonadicFilter::new(a, filter.members().iter().copied())?;
    let n = a.size();
    let mut rep = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if rep[x] != usize::MAX {
            continue;
        }
        let class: Vec<usize> = (x..n)
            .filter(|&y| rep[y] == usize::MAX && filter.contains(a.biconditional(x, y)))
            .collect();
        let least = class.iter().fold(a.top(), |acc, &y| a.meet(acc, y));
        if !class.contains(&least) {
            return Err(Error::CrossCheck(format!(
                "congruence class of {} has no least element",
                a.label(x)
            )));
        }
        for &y in &class {
            rep[y] = least;
        }
        reps.push(least);
    }
    reps.sort_unstable();
    let top_rep = rep[a.top()];
    reps.retain(|&r| r != top_rep);
    reps.push(top_rep);
    let mut position = vec![usize::MAX; n];
    for (i, &r) in reps.iter().enumerate() {
        position[r] = i;
    }
    let projection: Vec<usize> = (0..n).map(|x| position[rep[x]]).collect();
    let labels = a.labels().map(|l| reps.iter().map(|&r| l[r].clone()).collect());
    let algebra = a.rebuild(reps.len(), &|i| reps[i], &|x| projection[x], labels)?;
    Ok(Quotient { algebra, projection })
}
