//! Finite duality between frames and algebras.

use crate::algebras::{
    atoms, is_homomorphism, join_irreducibles, open_algebra, FiniteAlgebra, FiniteMha, FiniteMs4Algebra, Table,
};
use crate::error::{Error, Result};
use crate::frames::{skeleton, FiniteFrame, MipcFrame, Ms4Frame};
use crate::relation::{PointSet, Relation};
use crate::report::ValidationReport;

/// Complex algebras larger than this are refused.
pub const MAX_COMPLEX_SIZE: usize = 1024;

/// A complex algebra with the point set each element stands for.
#[derive(Clone, Debug)]
pub struct Complex<A> {
    pub algebra: A,
    /// Sorted by bitmask; `sets[i]` is element `i`.
    pub sets: Vec<PointSet>,
}

impl<A> Complex<A> {
    pub fn index_of(&self, set: PointSet) -> Option<usize> {
        self.sets.binary_search(&set).ok()
    }
}

/// Frames that have a complex algebra.
pub trait HasComplex: FiniteFrame {
    type Algebra: DualAlgebra<Frame = Self>;

    fn complex(&self) -> Result<Complex<Self::Algebra>>;
}

/// Algebras that have a dual frame. Points are named by the index of the
/// generating join-irreducible (MHA) or atom (MS4).
pub trait DualAlgebra: FiniteAlgebra {
    type Frame: HasComplex<Algebra = Self>;

    /// Join-irreducibles or atoms, in carrier order; point `i` of the dual is
    /// the principal filter of `generators()[i]`.
    fn generators(&self) -> Vec<usize>;

    fn dual(&self) -> Result<Self::Frame>;
}

pub fn complex_algebra<F: HasComplex>(frame: &F) -> Result<F::Algebra> {
    Ok(frame.complex()?.algebra)
}

pub fn dual_frame<A: DualAlgebra>(a: &A) -> Result<A::Frame> {
    a.dual()
}

/// Element `x` goes to the set of dual points (prime filters) containing it.
pub fn representation<A: DualAlgebra>(a: &A) -> Vec<PointSet> {
    let gens = a.generators();
    (0..a.size())
        .map(|x| {
            gens.iter()
                .enumerate()
                .filter(|(_, &g)| a.leq(g, x))
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}

/// The representation map into the complex algebra of the dual, checked to
/// be an isomorphism.
pub fn algebra_round_trip<A: DualAlgebra>(a: &A) -> Result<Vec<usize>> {
    let frame = a.dual()?;
    let complex = frame.complex()?;
    let mut map = Vec::with_capacity(a.size());
    for set in representation(a) {
        map.push(
            complex.index_of(set).ok_or_else(|| {
                Error::CrossCheck("representation of an element is not in the complex algebra".into())
            })?,
        );
    }
    if complex.algebra.size() != a.size() {
        return Err(Error::CrossCheck("representation is not onto".into()));
    }
    let report = is_homomorphism(a, &complex.algebra, &map);
    if !report.ok() {
        return Err(Error::CrossCheck(format!(
            "representation is not a homomorphism: {report}"
        )));
    }
    Ok(map)
}

fn upsets(r: &Relation, n: usize) -> Result<Vec<PointSet>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![PointSet::EMPTY];
    seen.insert(PointSet::EMPTY);
    while let Some(set) = stack.pop() {
        for x in set.complement(n).iter() {
            let next = set.union(r.image(x));
            if seen.insert(next) {
                if seen.len() > MAX_COMPLEX_SIZE {
                    return Err(Error::Malformed(format!(
                        "complex algebra would exceed {MAX_COMPLEX_SIZE} elements"
                    )));
                }
                stack.push(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

fn box_of(r: &Relation, n: usize, set: PointSet) -> PointSet {
    r.preimage_of(set.complement(n)).complement(n)
}

impl HasComplex for MipcFrame {
    type Algebra = FiniteMha;

    fn complex(&self) -> Result<Complex<FiniteMha>> {
        self.ensure_valid()?;
        let n = self.len();
        let r = self.r();
        let q = self.q();
        let sets = upsets(r, n)?;
        let m = sets.len();
        let index = |s: PointSet| sets.binary_search(&s).expect("operation yields an upset");
        let meet = Table::from_fn(m, |i, j| index(sets[i].intersection(sets[j])));
        let join = Table::from_fn(m, |i, j| index(sets[i].union(sets[j])));
        let imp = Table::from_fn(m, |i, j| {
            let (u, v) = (sets[i], sets[j]);
            index((0..n).filter(|&x| r.image(x).intersection(u).is_subset(v)).collect())
        });
        let forall = (0..m).map(|i| index(box_of(&q, n, sets[i]))).collect();
        let exists = (0..m).map(|i| index(q.image_of(sets[i]))).collect();
        let labels = sets.iter().map(|&s| self.render_set(s)).collect();
        let algebra = FiniteMha::new(meet, join, imp, forall, exists, Some(labels))?;
        Ok(Complex { algebra, sets })
    }
}

impl HasComplex for Ms4Frame {
    type Algebra = FiniteMs4Algebra;

    fn complex(&self) -> Result<Complex<FiniteMs4Algebra>> {
        self.ensure_valid()?;
        let n = self.len();
        if n >= usize::BITS as usize || 1usize << n > MAX_COMPLEX_SIZE {
            return Err(Error::Malformed(format!(
                "complex algebra would exceed {MAX_COMPLEX_SIZE} elements"
            )));
        }
        let m = 1usize << n;
        let sets: Vec<PointSet> = (0..m as u64).map(PointSet).collect();
        let meet = Table::from_fn(m, |i, j| i & j);
        let join = Table::from_fn(m, |i, j| i | j);
        let full = m - 1;
        let neg = (0..m).map(|i| full & !i).collect();
        let boxed = (0..m).map(|i| box_of(self.r(), n, sets[i]).bits() as usize).collect();
        let forall = (0..m).map(|i| box_of(self.e(), n, sets[i]).bits() as usize).collect();
        let labels = sets.iter().map(|&s| self.render_set(s)).collect();
        let algebra = FiniteMs4Algebra::new(meet, join, neg, boxed, forall, Some(labels))?;
        Ok(Complex { algebra, sets })
    }
}

fn relation_from(k: usize, holds: impl Fn(usize, usize) -> bool) -> Relation {
    Relation::from_pairs(
        k,
        (0..k)
            .flat_map(|x| (0..k).map(move |y| (x, y)))
            .filter(|&(x, y)| holds(x, y)),
    )
}

impl DualAlgebra for FiniteMha {
    type Frame = MipcFrame;

    fn generators(&self) -> Vec<usize> {
        join_irreducibles(self)
    }

    fn dual(&self) -> Result<MipcFrame> {
        self.ensure_valid()?;
        let gens = self.generators();
        let h0 = self.fixpoint_subalgebra()?;
        let k = gens.len();
        let r = relation_from(k, |x, y| self.leq(gens[y], gens[x]));
        let q = relation_from(k, |x, y| {
            h0.iter().all(|&h| !self.leq(gens[x], h) || self.leq(gens[y], h))
        });
        let names = gens.iter().map(|g| g.to_string()).collect();
        MipcFrame::new(names, r, q)
    }
}

impl DualAlgebra for FiniteMs4Algebra {
    type Frame = Ms4Frame;

    fn generators(&self) -> Vec<usize> {
        atoms(self)
    }

    fn dual(&self) -> Result<Ms4Frame> {
        self.ensure_valid()?;
        let gens = self.generators();
        let b0 = self.fixpoint_subalgebra()?;
        let k = gens.len();
        let n = self.size();
        let r = relation_from(k, |x, y| {
            (0..n).all(|a| !self.leq(gens[x], self.boxed(a)) || self.leq(gens[y], a))
        });
        let e = relation_from(k, |x, y| {
            b0.iter().all(|&h| self.leq(gens[x], h) == self.leq(gens[y], h))
        });
        let names = gens.iter().map(|g| g.to_string()).collect();
        Ms4Frame::new(names, r, e)
    }
}

/// Checks that `U ↦ π⁻¹[U]` is an isomorphism of monadic Heyting algebras
/// from the complex algebra of the skeleton onto the open elements of the
/// complex algebra. Violations name the failing operation.
pub fn check_skeleton_naturality(frame: &Ms4Frame) -> Result<ValidationReport> {
    let sk = skeleton(frame)?;
    let left = sk.frame.complex()?;
    let right_b = frame.complex()?;
    let right = open_algebra(&right_b.algebra)?;
    let mut report = ValidationReport::new();
    let mut map = Vec::with_capacity(left.sets.len());
    for &u in &left.sets {
        let pre: PointSet = (0..frame.len()).filter(|&y| u.contains(sk.projection[y])).collect();
        let b_index = pre.bits() as usize;
        match right.inclusion.binary_search(&b_index) {
            Ok(i) => map.push(i),
            Err(_) => {
                report.push("carrier", [sk.frame.render_set(u)]);
                return Ok(report);
            }
        }
    }
    if left.algebra.size() != right.algebra.size() {
        report.push(
            "bijective",
            [left.algebra.size().to_string(), right.algebra.size().to_string()],
        );
    }
    let mut seen = vec![false; right.algebra.size()];
    for (i, &y) in map.iter().enumerate() {
        if std::mem::replace(&mut seen[y], true) {
            report.push_once("bijective", [left.algebra.label(i)]);
        }
    }
    report.extend(is_homomorphism(&left.algebra, &right.algebra, &map));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::frames::frames_isomorphic;

    #[test]
    fn complex_algebra_sizes() {
        assert_eq!(complex_algebra(&fixtures::k2()).unwrap().size(), 8);
        let k5 = complex_algebra(&fixtures::k5()).unwrap();
        assert_eq!(k5.size(), 2);
        assert_eq!(k5.box_vec(), &[0, 1]);
        assert_eq!(k5.forall_vec(), &[0, 1]);
        let rho_k1 = skeleton(&fixtures::k1()).unwrap().frame;
        assert_eq!(complex_algebra(&rho_k1).unwrap().size(), 6);
    }

    #[test]
    fn frame_round_trips_on_fixtures() {
        for (name, g) in fixtures::ms4_frames() {
            let back = dual_frame(&complex_algebra(&g).unwrap()).unwrap();
            assert!(frames_isomorphic(&back, &g).is_some(), "{name}");
            let rho = skeleton(&g).unwrap().frame;
            let back = dual_frame(&complex_algebra(&rho).unwrap()).unwrap();
            assert!(frames_isomorphic(&back, &rho).is_some(), "rho({name})");
        }
    }

    #[test]
    fn algebra_round_trips_on_fixtures() {
        for (name, g) in fixtures::ms4_frames() {
            let b = complex_algebra(&g).unwrap();
            assert!(algebra_round_trip(&b).is_ok(), "{name}");
            let o = open_algebra(&b).unwrap().algebra;
            assert!(algebra_round_trip(&o).is_ok(), "O({name})");
        }
    }

    #[test]
    fn two_element_algebra_has_one_point_dual() {
        let b = complex_algebra(&fixtures::k5()).unwrap();
        assert_eq!(dual_frame(&b).unwrap().len(), 1);
    }

    #[test]
    fn naturality_on_fixtures() {
        for (name, g) in fixtures::ms4_frames() {
            let report = check_skeleton_naturality(&g).unwrap();
            assert!(report.ok(), "{name}: {report}");
        }
    }
}
