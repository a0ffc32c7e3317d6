//! Bitset-backed point sets and binary relations on at most 64 points.

use std::fmt;

pub const MAX_POINTS: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(pub u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        PointSet(1u64 << i)
    }

    pub fn from_points(points: impl IntoIterator<Item = usize>) -> Self {
        points.into_iter().fold(Self::EMPTY, |s, p| s.with(p))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        PointSet(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Self {
        PointSet(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Formats the set as `{a,b}` using the given point names.
    pub fn render(self, names: &[String]) -> String {
        let inner: Vec<&str> = self.iter().map(|i| names[i].as_str()).collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::from_points(iter)
    }
}

/// A relation stored as successor sets: `rows[x] = R[x]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    rows: Vec<PointSet>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation {
            rows: vec![PointSet::EMPTY; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Relation {
            rows: (0..n).map(PointSet::singleton).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        Relation {
            rows: vec![PointSet::full(n); n],
        }
    }

    pub fn from_rows(rows: Vec<PointSet>) -> Self {
        Relation { rows }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut rel = Self::empty(n);
        for (x, y) in pairs {
            rel.insert(x, y);
        }
        rel
    }

    /// The equivalence relation whose classes are `classes`; points not listed
    /// form singleton classes.
    pub fn from_classes(n: usize, classes: &[PointSet]) -> Self {
        let mut rel = Self::identity(n);
        for &class in classes {
            for x in class.iter() {
                rel.rows[x] = rel.rows[x].union(class);
            }
        }
        rel
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.rows[x] = self.rows[x].with(y);
    }

    pub fn holds(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn rows(&self) -> &[PointSet] {
        &self.rows
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
    }

    /// `R[x]`
    pub fn image(&self, x: usize) -> PointSet {
        self.rows[x]
    }

    /// `R[S]`
    pub fn image_of(&self, set: PointSet) -> PointSet {
        set.iter().fold(PointSet::EMPTY, |acc, x| acc.union(self.rows[x]))
    }

    /// `R^{-1}[y]`
    pub fn preimage(&self, y: usize) -> PointSet {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, row)| row.contains(y))
            .map(|(x, _)| x)
            .collect()
    }

    /// `R^{-1}[S]`
    pub fn preimage_of(&self, set: PointSet) -> PointSet {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, row)| !row.intersection(set).is_empty())
            .map(|(x, _)| x)
            .collect()
    }

    pub fn inverse(&self) -> Relation {
        let n = self.size();
        Relation {
            rows: (0..n).map(|y| self.preimage(y)).collect(),
        }
    }

    /// Relational composite "first `self`, then `next`": `x ↦ next[self[x]]`.
    pub fn then(&self, next: &Relation) -> Relation {
        Relation {
            rows: self.rows.iter().map(|&row| next.image_of(row)).collect(),
        }
    }

    pub fn intersection(&self, other: &Relation) -> Relation {
        Relation {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.intersection(*b))
                .collect(),
        }
    }

    /// `R ∩ R^{-1}`
    pub fn symmetric_part(&self) -> Relation {
        self.intersection(&self.inverse())
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(*b))
    }

    pub fn reflexive_transitive_closure(&self) -> Relation {
        let n = self.size();
        let mut rows: Vec<PointSet> = (0..n).map(|x| self.rows[x].with(x)).collect();
        // Warshall over bitsets
        for k in 0..n {
            for x in 0..n {
                if rows[x].contains(k) {
                    rows[x] = rows[x].union(rows[k]);
                }
            }
        }
        Relation { rows }
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size()).all(|x| self.holds(x, x))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.size()).all(|x| self.image_of(self.rows[x]).is_subset(self.rows[x]))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(x, y)| self.holds(y, x))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs().all(|(x, y)| x == y || !self.holds(y, x))
    }

    pub fn is_upset(&self, set: PointSet) -> bool {
        self.image_of(set).is_subset(set)
    }

    /// Classes of an equivalence relation, ordered by least member.
    pub fn classes(&self) -> Vec<PointSet> {
        let mut seen = PointSet::EMPTY;
        let mut out = Vec::new();
        for x in 0..self.size() {
            if !seen.contains(x) {
                let class = self.rows[x];
                seen = seen.union(class);
                out.push(class);
            }
        }
        out
    }

    /// The restriction of the relation to `set`, renumbered in increasing order.
    pub fn restrict(&self, set: PointSet) -> Relation {
        let kept: Vec<usize> = set.iter().collect();
        Relation {
            rows: kept
                .iter()
                .map(|&x| {
                    kept.iter()
                        .enumerate()
                        .filter(|&(_, &y)| self.holds(x, y))
                        .map(|(i, _)| i)
                        .collect()
                })
                .collect(),
        }
    }

    /// Renumbers points: `perm[old] = new`.
    pub fn permute(&self, perm: &[usize]) -> Relation {
        let mut out = Relation::empty(self.size());
        for (x, y) in self.pairs() {
            out.insert(perm[x], perm[y]);
        }
        out
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_chain() {
        let r = Relation::from_pairs(3, [(0, 1), (1, 2)]).reflexive_transitive_closure();
        assert!(r.holds(0, 2));
        assert!(r.is_reflexive() && r.is_transitive() && r.is_antisymmetric());
        assert_eq!(r.image(0), PointSet::full(3));
        assert_eq!(r.preimage(2), PointSet::full(3));
    }

    #[test]
    fn composite_and_classes() {
        let r = Relation::from_pairs(3, [(0, 1)]).reflexive_transitive_closure();
        let e = Relation::from_classes(3, &[PointSet::from_points([1, 2])]);
        let q = r.then(&e);
        assert_eq!(q.image(0), PointSet::full(3));
        assert_eq!(e.classes(), vec![PointSet::singleton(0), PointSet::from_points([1, 2])]);
        assert_eq!(r.restrict(PointSet::from_points([0, 1])).image(0), PointSet::full(2));
    }

    #[test]
    fn pointset_iter_order() {
        let s = PointSet::from_points([5, 1, 3]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.first(), Some(1));
        assert!(PointSet::EMPTY.first().is_none());
    }
}
