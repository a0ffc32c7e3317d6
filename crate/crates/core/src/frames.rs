//! Finite descriptive frames for MIPC `(X, R, Q)` and MS4 `(Y, R, E)`.
//!
//! Finite frames carry the discrete topology, so every topological clause of
//! the definitions holds trivially and only the relational clauses are checked.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relation::{PointSet, Relation, MAX_POINTS};
use crate::report::ValidationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Mipc,
    Ms4,
}

impl Category {
    pub fn name(self) -> &'static str {
        match self {
            Category::Mipc => "mipc",
            Category::Ms4 => "ms4",
        }
    }
}

/// Behaviour shared by both frame kinds. `side` is `Q` for MIPC frames and
/// `E` for MS4 frames.
pub trait FiniteFrame: Clone + std::fmt::Debug {
    const CATEGORY: Category;

    fn from_parts(points: Vec<String>, r: Relation, side: Relation) -> Result<Self>;
    fn points(&self) -> &[String];
    fn r(&self) -> &Relation;
    fn side(&self) -> &Relation;
    /// The quasi-order `Q`; derived as `E ∘ R` on MS4 frames.
    fn q(&self) -> Relation;
    fn validate(&self) -> ValidationReport;

    fn len(&self) -> usize {
        self.points().len()
    }

    fn is_empty(&self) -> bool {
        self.points().is_empty()
    }

    fn name(&self, i: usize) -> &str {
        &self.points()[i]
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.points().iter().position(|p| p == name)
    }

    fn all(&self) -> PointSet {
        PointSet::full(self.len())
    }

    fn render_set(&self, set: PointSet) -> String {
        set.render(self.points())
    }

    fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.ok() {
            Ok(())
        } else {
            Err(Error::InvalidFrame(report))
        }
    }

    /// Relabels the points: point `i` moves to position `perm[i]`.
    fn permuted(&self, perm: &[usize]) -> Self {
        let mut names = vec![String::new(); self.len()];
        for (i, &p) in perm.iter().enumerate() {
            names[p] = self.points()[i].clone();
        }
        Self::from_parts(names, self.r().permute(perm), self.side().permute(perm)).expect("permutation preserves shape")
    }
}

fn check_shape(points: &[String], rels: [&Relation; 2]) -> Result<()> {
    if points.len() > MAX_POINTS {
        return Err(Error::Malformed(format!(
            "{} points exceed the limit of {MAX_POINTS}",
            points.len()
        )));
    }
    let distinct: HashSet<&String> = points.iter().collect();
    if distinct.len() != points.len() {
        return Err(Error::Malformed("duplicate point names".into()));
    }
    for rel in rels {
        if rel.size() != points.len() {
            return Err(Error::Malformed(format!(
                "relation on {} points given for {} points",
                rel.size(),
                points.len()
            )));
        }
        if rel
            .rows()
            .iter()
            .any(|row| !row.is_subset(PointSet::full(points.len())))
        {
            return Err(Error::Malformed("relation refers to a missing point".into()));
        }
    }
    Ok(())
}

fn check_quasi_order(report: &mut ValidationReport, names: &[String], rel: &Relation, tag: &str) {
    let n = names.len();
    for (x, name) in names.iter().enumerate() {
        if !rel.holds(x, x) {
            report.push(&format!("{tag}-reflexive"), [name.clone()]);
        }
    }
    for x in 0..n {
        for y in rel.image(x).iter() {
            for z in rel.image(y).iter() {
                if !rel.holds(x, z) {
                    report.push(
                        &format!("{tag}-transitive"),
                        [names[x].clone(), names[y].clone(), names[z].clone()],
                    );
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MipcFrame {
    points: Vec<String>,
    r: Relation,
    q: Relation,
}

impl MipcFrame {
    pub fn new(points: Vec<String>, r: Relation, q: Relation) -> Result<Self> {
        check_shape(&points, [&r, &q])?;
        Ok(MipcFrame { points, r, q })
    }

    pub fn e_q(&self) -> Relation {
        self.q.symmetric_part()
    }

    /// Some point whose `Q`-successors are the whole frame, if any.
    pub fn q_root(&self) -> Option<usize> {
        (0..self.len()).find(|&x| self.q.image(x) == self.all())
    }
}

impl FiniteFrame for MipcFrame {
    const CATEGORY: Category = Category::Mipc;

    fn from_parts(points: Vec<String>, r: Relation, side: Relation) -> Result<Self> {
        Self::new(points, r, side)
    }

    fn points(&self) -> &[String] {
        &self.points
    }

    fn r(&self) -> &Relation {
        &self.r
    }

    fn side(&self) -> &Relation {
        &self.q
    }

    fn q(&self) -> Relation {
        self.q.clone()
    }

    fn validate(&self) -> ValidationReport {
        let names = &self.points;
        let n = self.len();
        let mut report = ValidationReport::new();
        check_quasi_order(&mut report, names, &self.r, "r");
        for x in 0..n {
            for y in self.r.image(x).iter() {
                if x < y && self.r.holds(y, x) {
                    report.push("r-antisymmetric", [names[x].clone(), names[y].clone()]);
                }
            }
        }
        check_quasi_order(&mut report, names, &self.q, "q");
        // Q[U] is an R-upset for every R-upset U. Every R-upset is a union of
        // principal ones and contains them, so the principal upsets suffice.
        for x in 0..n {
            let upset = self.r.image(x);
            let image = self.q.image_of(upset);
            if let Some((y, z)) = image
                .iter()
                .flat_map(|y| self.r.image(y).iter().map(move |z| (y, z)))
                .find(|&(_, z)| !image.contains(z))
            {
                report.push(
                    "q-upset-image",
                    [upset.render(names), names[y].clone(), names[z].clone()],
                );
            }
        }
        for (x, y) in self.r.pairs() {
            if !self.q.holds(x, y) {
                report.push("r-within-q", [names[x].clone(), names[y].clone()]);
            }
        }
        let e_q = self.e_q();
        for (x, y) in self.q.pairs() {
            if self.r.image(x).intersection(e_q.image(y)).is_empty() {
                report.push("q-factors", [names[x].clone(), names[y].clone()]);
            }
        }
        report
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ms4Frame {
    points: Vec<String>,
    r: Relation,
    e: Relation,
}

impl Ms4Frame {
    pub fn new(points: Vec<String>, r: Relation, e: Relation) -> Result<Self> {
        check_shape(&points, [&r, &e])?;
        Ok(Ms4Frame { points, r, e })
    }

    pub fn e(&self) -> &Relation {
        &self.e
    }

    pub fn q_root(&self) -> Option<usize> {
        let q = self.q();
        (0..self.len()).find(|&x| q.image(x) == self.all())
    }

    /// True when `R` is antisymmetric, i.e. the skeleton map is a bijection.
    pub fn is_partially_ordered(&self) -> bool {
        self.r.is_antisymmetric()
    }
}

impl FiniteFrame for Ms4Frame {
    const CATEGORY: Category = Category::Ms4;

    fn from_parts(points: Vec<String>, r: Relation, side: Relation) -> Result<Self> {
        Self::new(points, r, side)
    }

    fn points(&self) -> &[String] {
        &self.points
    }

    fn r(&self) -> &Relation {
        &self.r
    }

    fn side(&self) -> &Relation {
        &self.e
    }

    fn q(&self) -> Relation {
        self.r.then(&self.e)
    }

    fn validate(&self) -> ValidationReport {
        let names = &self.points;
        let n = self.len();
        let mut report = ValidationReport::new();
        check_quasi_order(&mut report, names, &self.r, "r");
        check_quasi_order(&mut report, names, &self.e, "e");
        for (x, y) in self.e.pairs() {
            if !self.e.holds(y, x) {
                report.push("e-symmetric", [names[x].clone(), names[y].clone()]);
            }
        }
        // x E y and y R z imply x R u and u E z for some u
        for x in 0..n {
            let reachable = self.e.image_of(self.r.image(x));
            for y in self.e.image(x).iter() {
                for z in self.r.image(y).iter() {
                    if !reachable.contains(z) {
                        report.push("e-r-commute", [names[x].clone(), names[y].clone(), names[z].clone()]);
                    }
                }
            }
        }
        report
    }
}

/// Either kind of frame, as loaded from a file or the fixture registry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Frame {
    Mipc(MipcFrame),
    Ms4(Ms4Frame),
}

impl Frame {
    pub fn category(&self) -> Category {
        match self {
            Frame::Mipc(_) => Category::Mipc,
            Frame::Ms4(_) => Category::Ms4,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        match self {
            Frame::Mipc(f) => f.validate(),
            Frame::Ms4(g) => g.validate(),
        }
    }

    pub fn points(&self) -> &[String] {
        match self {
            Frame::Mipc(f) => f.points(),
            Frame::Ms4(g) => g.points(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedRelations {
    pub e_r: Relation,
    pub e_q: Relation,
    pub q: Relation,
}

/// `E_R = R ∩ R⁻¹`, the quasi-order `Q` and `E_Q = Q ∩ Q⁻¹`.
pub fn derived_relations<F: FiniteFrame>(frame: &F) -> Result<DerivedRelations> {
    frame.ensure_valid()?;
    let q = frame.q();
    Ok(DerivedRelations {
        e_r: frame.r().symmetric_part(),
        e_q: q.symmetric_part(),
        q,
    })
}

/// The skeleton of an MS4 frame together with its quotient map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    pub frame: MipcFrame,
    /// `projection[y]` is the class of `y`.
    pub projection: Vec<usize>,
}

/// Quotient of an MS4 frame by `E_R`, carrying the induced `R'` and `Q'`.
///
/// Classes are numbered by least member; a singleton class keeps its point's
/// name, larger classes are named by joining member names with `=`.
pub fn skeleton(frame: &Ms4Frame) -> Result<Skeleton> {
    frame.ensure_valid()?;
    let classes = frame.r().symmetric_part().classes();
    let mut projection = vec![0; frame.len()];
    for (c, class) in classes.iter().enumerate() {
        for y in class.iter() {
            projection[y] = c;
        }
    }
    let names = classes
        .iter()
        .map(|class| class.iter().map(|y| frame.name(y)).collect::<Vec<_>>().join("="))
        .collect();
    let q = frame.q();
    let k = classes.len();
    let mut r2 = Relation::empty(k);
    let mut q2 = Relation::empty(k);
    for (x, y) in frame.r().pairs() {
        r2.insert(projection[x], projection[y]);
    }
    for (x, y) in q.pairs() {
        q2.insert(projection[x], projection[y]);
    }
    Ok(Skeleton {
        frame: MipcFrame::new(names, r2, q2)?,
        projection,
    })
}

/// All `Q`-upsets, ordered by size and then lexicographically by members.
pub fn q_upsets<F: FiniteFrame>(frame: &F) -> Vec<PointSet> {
    let q = frame.q();
    let mut seen: BTreeSet<PointSet> = BTreeSet::new();
    let mut stack = vec![PointSet::EMPTY];
    seen.insert(PointSet::EMPTY);
    while let Some(set) = stack.pop() {
        for x in set.complement(frame.len()).iter() {
            let next = set.union(q.image(x));
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    let mut out: Vec<PointSet> = seen.into_iter().collect();
    out.sort_by_key(|s| (s.len(), s.iter().collect::<Vec<_>>()));
    out
}

/// The subframe induced on a `Q`-upset.
pub fn restrict<F: FiniteFrame>(frame: &F, set: PointSet) -> Result<F> {
    if !set.is_subset(frame.all()) || !frame.q().is_upset(set) {
        return Err(Error::NotQUpset(set.render(frame.points())));
    }
    let names = set.iter().map(|i| frame.points()[i].clone()).collect();
    F::from_parts(names, frame.r().restrict(set), frame.side().restrict(set))
}

fn point_signature<F: FiniteFrame>(frame: &F, x: usize) -> [usize; 4] {
    [
        frame.r().image(x).len(),
        frame.r().preimage(x).len(),
        frame.side().image(x).len(),
        frame.side().preimage(x).len(),
    ]
}

/// A bijection preserving and reflecting both relations, if one exists.
/// The result is the first such map in lexicographic search order.
pub fn frames_isomorphic<F: FiniteFrame>(a: &F, b: &F) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let sig_a: Vec<_> = (0..a.len()).map(|x| point_signature(a, x)).collect();
    let sig_b: Vec<_> = (0..b.len()).map(|x| point_signature(b, x)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let mut map = Vec::with_capacity(a.len());
    let mut used = PointSet::EMPTY;
    fn consistent<F: FiniteFrame>(a: &F, b: &F, map: &[usize], x: usize, fx: usize) -> bool {
        map.iter().enumerate().all(|(y, &fy)| {
            [(a.r(), b.r()), (a.side(), b.side())]
                .iter()
                .all(|(ra, rb)| ra.holds(x, y) == rb.holds(fx, fy) && ra.holds(y, x) == rb.holds(fy, fx))
        }) && a.r().holds(x, x) == b.r().holds(fx, fx)
            && a.side().holds(x, x) == b.side().holds(fx, fx)
    }
    fn search<F: FiniteFrame>(
        a: &F,
        b: &F,
        sig_a: &[[usize; 4]],
        sig_b: &[[usize; 4]],
        map: &mut Vec<usize>,
        used: &mut PointSet,
    ) -> bool {
        let x = map.len();
        if x == a.len() {
            return true;
        }
        for fx in 0..b.len() {
            if used.contains(fx) || sig_a[x] != sig_b[fx] || !consistent(a, b, map, x, fx) {
                continue;
            }
            map.push(fx);
            *used = used.with(fx);
            if search(a, b, sig_a, sig_b, map, used) {
                return true;
            }
            map.pop();
            *used = used.without(fx);
        }
        false
    }
    search(a, b, &sig_a, &sig_b, &mut map, &mut used).then_some(map)
}

/// Deduplicates frames up to isomorphism, keeping first representatives.
pub fn dedup_isomorphic<F: FiniteFrame>(frames: Vec<F>) -> Vec<F> {
    let mut out: Vec<F> = Vec::new();
    for f in frames {
        if !out.iter().any(|g| frames_isomorphic(g, &f).is_some()) {
            out.push(f);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn set<F: FiniteFrame>(f: &F, pts: &[&str]) -> PointSet {
        pts.iter().map(|p| f.index_of(p).unwrap()).collect()
    }

    #[test]
    fn fixtures_validate() {
        for (name, g) in fixtures::ms4_frames() {
            assert!(g.validate().ok(), "{name}: {}", g.validate());
        }
    }

    #[test]
    fn commutation_violation_witness() {
        // E-classes {x,y},{z}; R = identity plus (y,z)
        let g = Ms4Frame::new(
            names(&["x", "y", "z"]),
            Relation::from_pairs(3, [(0, 0), (1, 1), (2, 2), (1, 2)]),
            Relation::from_classes(3, &[PointSet::from_points([0, 1])]),
        )
        .unwrap();
        let report = g.validate();
        assert!(!report.ok());
        assert_eq!(report.violations().len(), 1);
        let v = report.first().unwrap();
        assert_eq!(v.condition, "e-r-commute");
        assert_eq!(v.witness, names(&["x", "y", "z"]));
    }

    #[test]
    fn mipc_conditions_detected() {
        // Q not containing R
        let f = MipcFrame::new(
            names(&["a", "b"]),
            Relation::from_pairs(2, [(0, 1)]).reflexive_transitive_closure(),
            Relation::identity(2),
        )
        .unwrap();
        assert!(f.validate().has("r-within-q"));
        // R not antisymmetric
        let f = MipcFrame::new(names(&["a", "b"]), Relation::total(2), Relation::total(2)).unwrap();
        let report = f.validate();
        assert!(report.has("r-antisymmetric"));
        assert!(!report.has("q-factors"));
        // Q[U] of an upset fails to be an upset: a<b, Q relates c to a only.
        let r = Relation::from_pairs(3, [(0, 1)]).reflexive_transitive_closure();
        let q = Relation::from_pairs(3, [(0, 1), (2, 0), (0, 2)]).reflexive_transitive_closure();
        let f = MipcFrame::new(names(&["a", "b", "c"]), r, q).unwrap();
        assert!(f.validate().has("q-upset-image") || f.validate().has("q-factors"));
    }

    #[test]
    fn malformed_shapes_rejected() {
        assert!(MipcFrame::new(names(&["a"]), Relation::identity(2), Relation::identity(1)).is_err());
        assert!(Ms4Frame::new(names(&["a", "a"]), Relation::identity(2), Relation::identity(2)).is_err());
    }

    #[test]
    fn k1_derived_q() {
        let k1 = fixtures::k1();
        let d = derived_relations(&k1).unwrap();
        let w = k1.index_of("w").unwrap();
        assert_eq!(d.q.image(w), set(&k1, &["v", "w", "z"]));
        // R is a partial order, so E_R is the identity
        assert_eq!(d.e_r, Relation::identity(4));
    }

    #[test]
    fn identity_e_gives_q_equal_r() {
        let g = Ms4Frame::new(
            names(&["a", "b", "c"]),
            Relation::from_pairs(3, [(0, 1), (0, 2)]).reflexive_transitive_closure(),
            Relation::identity(3),
        )
        .unwrap();
        let d = derived_relations(&g).unwrap();
        assert_eq!(&d.q, g.r());
        assert_eq!(d.e_q, d.e_r);
        let sk = skeleton(&g).unwrap();
        assert_eq!(sk.frame.r(), sk.frame.side());
        assert_eq!(sk.projection, vec![0, 1, 2]);
    }

    #[test]
    fn skeleton_of_k2_clusters() {
        let sk = skeleton(&fixtures::k2()).unwrap();
        let classes = sk.frame.e_q().classes();
        assert_eq!(classes, vec![PointSet::singleton(0), PointSet::from_points([1, 2])]);
    }

    #[test]
    fn skeleton_of_h1() {
        let h1 = fixtures::h1();
        let sk = skeleton(&h1).unwrap();
        assert_eq!(sk.frame.points(), names(&["a", "b=d", "c"]).as_slice());
        assert!(sk.frame.validate().ok());
        let pa = sk.projection[h1.index_of("a").unwrap()];
        let pb = sk.projection[h1.index_of("b").unwrap()];
        let pc = sk.projection[h1.index_of("c").unwrap()];
        assert_eq!(sk.projection[h1.index_of("d").unwrap()], pb);
        let e_q = sk.frame.e_q();
        assert_eq!(e_q.image(pa), PointSet::from_points([pa, pb]));
        assert_eq!(e_q.image(pc), PointSet::singleton(pc));
        // π(a) and π(c) both lie below π(b)=π(d)
        assert!(sk.frame.r().holds(pa, pb) && sk.frame.r().holds(pc, pb));
    }

    #[test]
    fn q_upset_lists() {
        let k1 = fixtures::k1();
        let ups = q_upsets(&k1);
        assert_eq!(
            ups,
            vec![
                PointSet::EMPTY,
                set(&k1, &["v", "z"]),
                set(&k1, &["v", "w", "z"]),
                k1.all()
            ]
        );
        let k2 = fixtures::k2();
        assert_eq!(q_upsets(&k2), vec![PointSet::EMPTY, set(&k2, &["b", "c"]), k2.all()]);
        let k5 = fixtures::k5();
        assert_eq!(q_upsets(&k5), vec![PointSet::EMPTY, k5.all()]);
    }

    #[test]
    fn restriction() {
        let k1 = fixtures::k1();
        let sub = restrict(&k1, set(&k1, &["v", "w", "z"])).unwrap();
        assert_eq!(sub.len(), 3);
        assert!(sub.validate().ok());
        assert_eq!(restrict(&k1, k1.all()).unwrap(), k1);
        assert!(matches!(restrict(&k1, set(&k1, &["w"])), Err(Error::NotQUpset(_))));
        let k2 = fixtures::k2();
        let top = restrict(&k2, set(&k2, &["b", "c"])).unwrap();
        assert!(frames_isomorphic(&top, &fixtures::k3()).is_some());
    }

    #[test]
    fn isomorphism_cases() {
        assert!(frames_isomorphic(&fixtures::k3(), &fixtures::k4()).is_none());
        let k2 = fixtures::k2();
        let shuffled = k2.permuted(&[2, 0, 1]);
        let iso = frames_isomorphic(&k2, &shuffled).unwrap();
        assert_eq!(iso, vec![2, 0, 1]);
        // ρ(H2) is a two-point chain forming a single E_Q cluster
        let rho_h2 = skeleton(&fixtures::h2()).unwrap().frame;
        let chain = MipcFrame::new(
            names(&["0", "1"]),
            Relation::from_pairs(2, [(0, 1)]).reflexive_transitive_closure(),
            Relation::total(2),
        )
        .unwrap();
        assert!(frames_isomorphic(&rho_h2, &chain).is_some());
    }
}
