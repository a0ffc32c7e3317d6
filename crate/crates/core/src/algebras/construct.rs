use super::{FiniteAlgebra, FiniteMs4Algebra, Table};
use crate::error::{Error, Result};

/// Least subset containing `seed`, bottom and top, closed under every
/// operation.
pub fn generated_subalgebra<A: FiniteAlgebra>(a: &A, seed: &[usize]) -> Vec<usize> {
    let n = a.size();
    let mut inside = vec![false; n];
    let mut members = Vec::new();
    for &x in seed.iter().chain([a.bot(), a.top()].iter()) {
        if x < n && !inside[x] {
            inside[x] = true;
            members.push(x);
        }
    }
    let binary = a.binary_ops();
    let unary = a.unary_ops();
    let mut done = 0;
    while done < members.len() {
        let x = members[done];
        done += 1;
        let mut fresh = Vec::new();
        for (_, u) in &unary {
            fresh.push(u[x]);
        }
        for &y in &members[..done] {
            for (_, t) in &binary {
                fresh.push(t.get(x, y));
                fresh.push(t.get(y, x));
            }
        }
        for z in fresh {
            if !inside[z] {
                inside[z] = true;
                members.push(z);
            }
        }
    }
    members.sort_unstable();
    members
}

fn closure_failure<A: FiniteAlgebra>(a: &A, elements: &[usize]) -> Option<String> {
    let n = a.size();
    let mut inside = vec![false; n];
    for &x in elements {
        if x >= n {
            return Some(format!("element {x} out of range"));
        }
        inside[x] = true;
    }
    if !inside[a.bot()] || !inside[a.top()] {
        return Some("bottom or top missing".into());
    }
    for &x in elements {
        for (name, u) in a.unary_ops() {
            if !inside[u[x]] {
                return Some(format!("not closed under {name} at {}", a.label(x)));
            }
        }
        for &y in elements {
            for (name, t) in a.binary_ops() {
                if !inside[t.get(x, y)] {
                    return Some(format!("not closed under {name} at {}, {}", a.label(x), a.label(y)));
                }
            }
        }
    }
    None
}

/// The subalgebra on `elements`, which must be closed under all operations.
/// Its element `i` is the `i`-th smallest index of `elements`.
pub fn subalgebra<A: FiniteAlgebra>(a: &A, elements: &[usize]) -> Result<A> {
    let mut elements = elements.to_vec();
    elements.sort_unstable();
    elements.dedup();
    if let Some(reason) = closure_failure(a, &elements) {
        return Err(Error::Malformed(format!("not a subalgebra: {reason}")));
    }
    let mut position = vec![usize::MAX; a.size()];
    for (i, &x) in elements.iter().enumerate() {
        position[x] = i;
    }
    let labels = a.labels().map(|l| elements.iter().map(|&x| l[x].clone()).collect());
    a.rebuild(elements.len(), &|i| elements[i], &|x| position[x], labels)
}

/// Elements covering bottom.
pub fn atoms<A: FiniteAlgebra>(a: &A) -> Vec<usize> {
    let n = a.size();
    (0..n)
        .filter(|&x| x != a.bot())
        .filter(|&x| !(0..n).any(|y| y != a.bot() && y != x && a.leq(y, x)))
        .collect()
}

/// Nonzero elements that are not the join of the elements strictly below.
pub fn join_irreducibles<A: FiniteAlgebra>(a: &A) -> Vec<usize> {
    let n = a.size();
    (0..n)
        .filter(|&x| x != a.bot())
        .filter(|&x| {
            let below = (0..n)
                .filter(|&y| y != x && a.leq(y, x))
                .fold(a.bot(), |acc, y| a.join(acc, y));
            below != x
        })
        .collect()
}

/// Set partitions of `0..k` as restricted growth strings, in lexicographic
/// order.
fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, k: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        let limit = if prefix.is_empty() { 0 } else { max + 1 };
        for b in 0..=limit {
            prefix.push(b);
            go(prefix, k, max.max(b), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        out.push(Vec::new());
    } else {
        go(&mut Vec::new(), k, 0, &mut out);
    }
    out
}

/// All subalgebras of an MS4-algebra as sorted element lists. Boolean
/// subalgebras correspond to partitions of the atoms; those also closed under
/// `□` and `∀` are kept, in the order of the partitions.
pub fn subalgebras(b: &FiniteMs4Algebra) -> Result<Vec<Vec<usize>>> {
    let atoms = atoms(b);
    if atoms.len() >= usize::BITS as usize || 1usize << atoms.len() != b.size() {
        return Err(Error::KindMismatch("carrier is not the powerset of its atoms".into()));
    }
    let mut out = Vec::new();
    for partition in partitions(atoms.len()) {
        let blocks = partition.iter().max().map_or(0, |m| m + 1);
        let block_elems: Vec<usize> = (0..blocks)
            .map(|blk| {
                atoms
                    .iter()
                    .zip(&partition)
                    .filter(|(_, &p)| p == blk)
                    .fold(b.bot(), |acc, (&at, _)| b.join(acc, at))
            })
            .collect();
        let mut elements: Vec<usize> = (0..1usize << blocks)
            .map(|mask| {
                (0..blocks)
                    .filter(|i| mask >> i & 1 == 1)
                    .fold(b.bot(), |acc, i| b.join(acc, block_elems[i]))
            })
            .collect();
        elements.sort_unstable();
        elements.dedup();
        if closure_failure(b, &elements).is_none() {
            out.push(elements);
        }
    }
    Ok(out)
}

/// Componentwise product. The pair `(x1, x2)` has index `x1 + n1 * x2`.
pub fn product<A: FiniteAlgebra>(a1: &A, a2: &A) -> Result<A> {
    let (n1, n2) = (a1.size(), a2.size());
    let n = n1 * n2;
    let split = |x: usize| (x % n1, x / n1);
    let binary = a1
        .binary_ops()
        .iter()
        .zip(a2.binary_ops())
        .map(|((_, t1), (_, t2))| {
            Table::from_fn(n, |x, y| {
                let ((x1, x2), (y1, y2)) = (split(x), split(y));
                t1.get(x1, y1) + n1 * t2.get(x2, y2)
            })
        })
        .collect();
    let unary = a1
        .unary_ops()
        .iter()
        .zip(a2.unary_ops())
        .map(|((_, u1), (_, u2))| {
            (0..n)
                .map(|x| {
                    let (x1, x2) = split(x);
                    u1[x1] + n1 * u2[x2]
                })
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|x| {
            let (x1, x2) = split(x);
            format!("({},{})", a1.label(x1), a2.label(x2))
        })
        .collect();
    A::from_ops(binary, unary, Some(labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts_are_bell_numbers() {
        let counts: Vec<usize> = (0..6).map(|k| partitions(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52]);
        assert_eq!(partitions(3)[0], vec![0, 0, 0]);
        assert_eq!(partitions(3)[4], vec![0, 1, 2]);
    }
}
