//! Frame morphisms: checking, exhaustive search, skeletons of morphisms, and
//! HS membership through dual frames.

use serde::{Deserialize, Serialize};

use crate::duality::{DualAlgebra, HasComplex};
use crate::error::{Error, Result};
use crate::frames::{dedup_isomorphic, q_upsets, restrict, skeleton, Category, FiniteFrame, MipcFrame, Ms4Frame};
use crate::relation::{PointSet, Relation};
use crate::report::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameMorphism<F> {
    pub src: F,
    pub dst: F,
    pub map: Vec<usize>,
    pub onto: bool,
    pub injective: bool,
}

impl<F: FiniteFrame> FrameMorphism<F> {
    pub fn category(&self) -> Category {
        F::CATEGORY
    }

    /// Checks the map and records its flags.
    pub fn new(src: F, dst: F, map: Vec<usize>) -> Result<Self> {
        let report = check_morphism(&src, &dst, &map)?;
        if !report.ok() {
            return Err(Error::InvalidMorphism(report));
        }
        Ok(Self::unchecked(src, dst, map))
    }

    fn unchecked(src: F, dst: F, map: Vec<usize>) -> Self {
        let image: PointSet = map.iter().copied().collect();
        let onto = image == dst.all();
        let injective = image.len() == map.len();
        FrameMorphism {
            src,
            dst,
            map,
            onto,
            injective,
        }
    }

    /// `(src point, dst point)` name pairs.
    pub fn pairs(&self) -> Vec<(String, String)> {
        self.map
            .iter()
            .enumerate()
            .map(|(x, &y)| (self.src.name(x).to_string(), self.dst.name(y).to_string()))
            .collect()
    }

    pub fn compose(&self, next: &FrameMorphism<F>) -> Result<FrameMorphism<F>> {
        if self.dst.points() != next.src.points() {
            return Err(Error::Malformed("morphisms are not composable".into()));
        }
        let map = self.map.iter().map(|&y| next.map[y]).collect();
        FrameMorphism::new(self.src.clone(), next.dst.clone(), map)
    }

    /// The inverse-image map between complex algebras, `U ↦ f⁻¹[U]`, as
    /// element indices from the complex algebra of `dst` to that of `src`.
    pub fn inverse_image(&self) -> Result<Vec<usize>>
    where
        F: HasComplex,
    {
        let dst = self.dst.complex()?;
        let src = self.src.complex()?;
        dst.sets
            .iter()
            .map(|&u| {
                let pre: PointSet = (0..self.src.len()).filter(|&x| u.contains(self.map[x])).collect();
                src.index_of(pre)
                    .ok_or_else(|| Error::CrossCheck("inverse image of an upset is not an upset".into()))
            })
            .collect()
    }
}

fn image_of(map: &[usize], set: PointSet) -> PointSet {
    set.iter().map(|x| map[x]).collect()
}

fn check_pmorphism(
    report: &mut ValidationReport,
    tag: &str,
    src_names: &[String],
    dst_names: &[String],
    map: &[usize],
    r1: &Relation,
    r2: &Relation,
) {
    for x in 0..map.len() {
        let ahead = image_of(map, r1.image(x));
        let target = r2.image(map[x]);
        if let Some(y) = ahead.difference(target).first() {
            report.push(&format!("{tag}-forth"), [src_names[x].clone(), dst_names[y].clone()]);
        }
        if let Some(y) = target.difference(ahead).first() {
            report.push(&format!("{tag}-back"), [src_names[x].clone(), dst_names[y].clone()]);
        }
    }
}

/// Checks each clause of the morphism definition for the frame category:
/// p-morphism for `R` and `E` (MS4), or for `R` and `Q` together with
/// `Q₂⁻¹[f(x)] = R₂⁻¹ f Q₁⁻¹[x]` (MIPC).
pub fn check_morphism<F: FiniteFrame>(src: &F, dst: &F, map: &[usize]) -> Result<ValidationReport> {
    if map.len() != src.len() || map.iter().any(|&y| y >= dst.len()) {
        return Err(Error::Malformed(format!(
            "map must send each of the {} source points to one of the {} target points",
            src.len(),
            dst.len()
        )));
    }
    let mut report = ValidationReport::new();
    let (n1, n2) = (src.points(), dst.points());
    check_pmorphism(&mut report, "r", n1, n2, map, src.r(), dst.r());
    match F::CATEGORY {
        Category::Ms4 => check_pmorphism(&mut report, "e", n1, n2, map, src.side(), dst.side()),
        Category::Mipc => {
            check_pmorphism(&mut report, "q", n1, n2, map, src.side(), dst.side());
            for x in 0..map.len() {
                let left = dst.side().preimage(map[x]);
                let right = dst.r().preimage_of(image_of(map, src.side().preimage(x)));
                if left != right {
                    let y = left.union(right).difference(left.intersection(right)).first();
                    report.push(
                        "q-inverse",
                        [n1[x].clone(), y.map_or_else(String::new, |y| n2[y].clone())],
                    );
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Require {
    #[default]
    Any,
    Onto,
    Injective,
    Iso,
}

impl std::str::FromStr for Require {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => Ok(Require::Any),
            "onto" => Ok(Require::Onto),
            "injective" => Ok(Require::Injective),
            "iso" => Ok(Require::Iso),
            other => Err(Error::Malformed(format!("unknown requirement `{other}`"))),
        }
    }
}

struct Search<'a, F> {
    src: &'a F,
    dst: &'a F,
    onto: bool,
    injective: bool,
    map: Vec<usize>,
    hit: Vec<usize>,
}

impl<F: FiniteFrame> Search<'_, F> {
    fn consistent(&self, x: usize, fx: usize) -> bool {
        let (s, d) = (self.src, self.dst);
        if self.injective && self.hit[fx] > 0 {
            return false;
        }
        if d.r().image(fx).len() > s.r().image(x).len() || d.side().image(fx).len() > s.side().image(x).len() {
            return false;
        }
        let rels = [(s.r(), d.r()), (s.side(), d.side())];
        let own = rels.iter().all(|(r1, r2)| !r1.holds(x, x) || r2.holds(fx, fx));
        own && self.map.iter().enumerate().all(|(y, &fy)| {
            rels.iter()
                .all(|(r1, r2)| (!r1.holds(x, y) || r2.holds(fx, fy)) && (!r1.holds(y, x) || r2.holds(fy, fx)))
        })
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let x = self.map.len();
        if x == self.src.len() {
            if self.onto && self.hit.contains(&0) {
                return false;
            }
            let ok = check_morphism(self.src, self.dst, &self.map)
                .map(|r| r.ok())
                .unwrap_or(false);
            return ok && visit(&self.map);
        }
        if self.onto {
            let missing = self.hit.iter().filter(|&&h| h == 0).count();
            if missing > self.src.len() - x {
                return false;
            }
        }
        for fx in 0..self.dst.len() {
            if !self.consistent(x, fx) {
                continue;
            }
            self.map.push(fx);
            self.hit[fx] += 1;
            let stop = self.run(visit);
            self.hit[fx] -= 1;
            self.map.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

/// Calls `visit` on each morphism in lexicographic order of maps; stops when
/// `visit` returns `true`.
fn search<F: FiniteFrame>(src: &F, dst: &F, require: Require, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let onto = matches!(require, Require::Onto | Require::Iso);
    let injective = matches!(require, Require::Injective | Require::Iso);
    if (onto && src.len() < dst.len()) || (injective && src.len() > dst.len()) {
        return;
    }
    if dst.is_empty() && !src.is_empty() {
        return;
    }
    Search {
        src,
        dst,
        onto,
        injective,
        map: Vec::with_capacity(src.len()),
        hit: vec![0; dst.len()],
    }
    .run(visit);
}

/// All morphisms `src → dst` meeting `require`, in lexicographic order.
pub fn enumerate_morphisms<F: FiniteFrame>(src: &F, dst: &F, require: Require) -> Result<Vec<FrameMorphism<F>>> {
    src.ensure_valid()?;
    dst.ensure_valid()?;
    let mut maps = Vec::new();
    search(src, dst, require, &mut |m| {
        maps.push(m.to_vec());
        false
    });
    Ok(maps
        .into_iter()
        .map(|m| FrameMorphism::unchecked(src.clone(), dst.clone(), m))
        .collect())
}

/// The first morphism in search order, if any.
pub fn first_morphism<F: FiniteFrame>(src: &F, dst: &F, require: Require) -> Result<Option<FrameMorphism<F>>> {
    src.ensure_valid()?;
    dst.ensure_valid()?;
    let mut found = None;
    search(src, dst, require, &mut |m| {
        found = Some(m.to_vec());
        true
    });
    Ok(found.map(|m| FrameMorphism::unchecked(src.clone(), dst.clone(), m)))
}

/// `ρ(f)` together with whether it is also a p-morphism for `E_Q'`.
#[derive(Clone, Debug)]
pub struct SkeletonMorphism {
    pub morphism: FrameMorphism<MipcFrame>,
    pub eq_pmorphism: bool,
    /// First skeleton point where the `E_Q'` condition fails.
    pub witness: Option<usize>,
}

impl SkeletonMorphism {
    pub fn witness_name(&self) -> Option<&str> {
        self.witness.map(|x| self.morphism.src.name(x))
    }
}

/// `ρ(f)(π₁(x)) = π₂(f(x))`.
pub fn skeleton_morphism(f: &FrameMorphism<Ms4Frame>) -> Result<SkeletonMorphism> {
    let report = check_morphism(&f.src, &f.dst, &f.map)?;
    if !report.ok() {
        return Err(Error::InvalidMorphism(report));
    }
    let s1 = skeleton(&f.src)?;
    let s2 = skeleton(&f.dst)?;
    let mut map = vec![usize::MAX; s1.frame.len()];
    for (x, &fx) in f.map.iter().enumerate() {
        let (a, b) = (s1.projection[x], s2.projection[fx]);
        if map[a] != usize::MAX && map[a] != b {
            return Err(Error::CrossCheck("skeleton map is not well defined".into()));
        }
        map[a] = b;
    }
    let report = check_morphism(&s1.frame, &s2.frame, &map)?;
    if !report.ok() {
        return Err(Error::CrossCheck(format!("skeleton of a morphism fails: {report}")));
    }
    let (e1, e2) = (s1.frame.e_q(), s2.frame.e_q());
    let witness = (0..map.len()).find(|&x| image_of(&map, e1.image(x)) != e2.image(map[x]));
    Ok(SkeletonMorphism {
        morphism: FrameMorphism::unchecked(s1.frame, s2.frame, map),
        eq_pmorphism: witness.is_none(),
        witness,
    })
}

/// Whether some `Q`-upset of `big` maps onto `small`; also returns that
/// upset and morphism.
pub fn onto_from_q_upset<F: FiniteFrame>(big: &F, small: &F) -> Result<Option<(PointSet, FrameMorphism<F>)>> {
    big.ensure_valid()?;
    small.ensure_valid()?;
    for z in q_upsets(big) {
        if z.len() < small.len() {
            continue;
        }
        let sub = restrict(big, z)?;
        if let Some(m) = first_morphism(&sub, small, Require::Onto)? {
            return Ok(Some((z, m)));
        }
    }
    Ok(None)
}

/// `small ∈ HS(big)`, decided on dual frames.
pub fn hs_member<A: DualAlgebra>(small: &A, big: &A) -> Result<bool> {
    Ok(onto_from_q_upset(&big.dual()?, &small.dual()?)?.is_some())
}

/// `a1` embeds into `a2`: the dual of `a2` maps onto the dual of `a1`.
pub fn embeds<A: DualAlgebra>(a1: &A, a2: &A) -> Result<bool> {
    Ok(first_morphism(&a2.dual()?, &a1.dual()?, Require::Onto)?.is_some())
}

/// The frame `f[frame]` for a map given as a block assignment, when the map
/// is a morphism onto it.
fn image_frame<F: FiniteFrame>(frame: &F, blocks: &[usize]) -> Option<F> {
    let k = blocks.iter().max().map_or(0, |m| m + 1);
    let names = (0..k)
        .map(|b| {
            (0..frame.len())
                .filter(|&x| blocks[x] == b)
                .map(|x| frame.name(x))
                .collect::<Vec<_>>()
                .join("/")
        })
        .collect();
    let push = |rel: &Relation| Relation::from_pairs(k, rel.pairs().map(|(x, y)| (blocks[x], blocks[y])));
    let image = F::from_parts(names, push(frame.r()), push(frame.side())).ok()?;
    if !image.validate().ok() {
        return None;
    }
    check_morphism(frame, &image, blocks).ok()?.ok().then_some(image)
}

fn block_assignments(k: usize, out: &mut Vec<Vec<usize>>) {
    fn go(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            prefix.push(b);
            go(prefix, k, out);
            prefix.pop();
        }
    }
    go(&mut Vec::new(), k, out);
}

/// Whether some point `x` has `Q[x]` equal to the whole frame.
pub fn strongly_q_rooted<F: FiniteFrame>(frame: &F) -> bool {
    let q = frame.q();
    (0..frame.len()).any(|x| q.image(x) == frame.all())
}

/// Strongly `Q`-rooted onto-images of nonempty `Q`-upsets of `frame`, one
/// per isomorphism class, largest first.
pub fn frame_spectrum<F: FiniteFrame>(frame: &F) -> Result<Vec<F>> {
    frame.ensure_valid()?;
    let mut found = Vec::new();
    for z in q_upsets(frame).into_iter().rev() {
        if z.is_empty() {
            continue;
        }
        let sub = restrict(frame, z)?;
        let mut assignments = Vec::new();
        block_assignments(sub.len(), &mut assignments);
        for blocks in assignments {
            if let Some(image) = image_frame(&sub, &blocks) {
                if strongly_q_rooted(&image) {
                    found.push(image);
                }
            }
        }
    }
    let mut out = dedup_isomorphic(found);
    out.sort_by_key(|f| std::cmp::Reverse(f.len()));
    Ok(out)
}

/// Dual frames of the subdirectly irreducible algebras in `HS(a)`.
pub fn hs_spectrum<A: DualAlgebra>(a: &A) -> Result<Vec<A::Frame>> {
    frame_spectrum(&a.dual()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::frames::frames_isomorphic;

    fn at<F: FiniteFrame>(f: &F, name: &str) -> usize {
        f.index_of(name).unwrap()
    }

    #[test]
    fn key_lemma_map_is_an_onto_mipc_morphism() {
        let r1 = skeleton(&fixtures::k1()).unwrap().frame;
        let r2 = skeleton(&fixtures::k2()).unwrap().frame;
        // u, v, w, z ↦ a, b, c, c
        let map = ["a", "b", "c", "c"].map(|p| at(&r2, p)).to_vec();
        let m = FrameMorphism::new(r1.clone(), r2.clone(), map.clone()).unwrap();
        assert!(m.onto);
        let all = enumerate_morphisms(&r1, &r2, Require::Onto).unwrap();
        assert!(all.iter().any(|f| f.map == map));
    }

    #[test]
    fn no_onto_ms4_morphism_from_k1_upsets() {
        let k1 = fixtures::k1();
        let k2 = fixtures::k2();
        let ups = q_upsets(&k1);
        assert_eq!(ups.len(), 4);
        for z in ups {
            let sub = restrict(&k1, z).unwrap();
            assert!(enumerate_morphisms(&sub, &k2, Require::Onto).unwrap().is_empty());
        }
    }

    #[test]
    fn identity_only_endomorphism_of_k5() {
        let k5 = fixtures::k5();
        let all = enumerate_morphisms(&k5, &k5, Require::Any).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].map, vec![0]);
    }

    #[test]
    fn example_h1_to_h2() {
        let (h1, h2) = (fixtures::h1(), fixtures::h2());
        let map = ["u", "v", "w", "w"].map(|p| at(&h2, p)).to_vec();
        let f = FrameMorphism::new(h1, h2, map).unwrap();
        let sk = skeleton_morphism(&f).unwrap();
        assert!(!sk.eq_pmorphism);
        assert_eq!(sk.witness_name(), Some("c"));
    }

    #[test]
    fn skeleton_of_identity_and_constant() {
        let k1 = fixtures::k1();
        let id = FrameMorphism::new(k1.clone(), k1.clone(), vec![0, 1, 2, 3]).unwrap();
        let sk = skeleton_morphism(&id).unwrap();
        assert!(sk.eq_pmorphism);
        assert_eq!(sk.morphism.map, vec![0, 1, 2, 3]);
        let c = FrameMorphism::new(fixtures::k3(), fixtures::k5(), vec![0, 0]).unwrap();
        assert!(skeleton_morphism(&c).unwrap().eq_pmorphism);
    }

    #[test]
    fn clause_violations_are_named() {
        let k4 = fixtures::k4();
        let k2 = fixtures::k2();
        // a ↦ a, b ↦ b misses c in R2[b]
        let report = check_morphism(&k4, &k2, &[0, 1]).unwrap();
        assert!(report.has("r-back"));
        assert!(check_morphism(&k4, &k2, &[0, 7]).is_err());
    }

    #[test]
    fn spectrum_of_b2() {
        let spec = hs_spectrum(&fixtures::b2()).unwrap();
        assert_eq!(spec.len(), 4);
        for k in [fixtures::k2(), fixtures::k3(), fixtures::k4(), fixtures::k5()] {
            assert!(spec.iter().any(|g| frames_isomorphic(g, &k).is_some()));
        }
    }

    #[test]
    fn hs_and_embedding_queries() {
        let (b1, b2) = (fixtures::b1(), fixtures::b2());
        assert!(!hs_member(&b2, &b1).unwrap());
        assert!(hs_member(&b1, &b1).unwrap());
        let k3 = crate::duality::complex_algebra(&fixtures::k3()).unwrap();
        assert!(hs_member(&k3, &b2).unwrap());
        assert!(embeds(&b2, &b2).unwrap());
    }
}
