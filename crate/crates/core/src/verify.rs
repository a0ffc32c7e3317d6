//! The end-to-end verification suite over the built-in fixtures.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebras::{
    algebras_isomorphic, lemma_property_violation, monadic_filters, open_algebra, product, subalgebra, subalgebras,
    subdirectly_irreducible, FiniteAlgebra, FiniteMha, FiniteMs4Algebra,
};
use crate::duality::{algebra_round_trip, check_skeleton_naturality, complex_algebra, dual_frame};
use crate::error::Result;
use crate::frames::{frames_isomorphic, q_upsets, restrict, skeleton, FiniteFrame, MipcFrame, Ms4Frame};
use crate::morphisms::{
    embeds, enumerate_morphisms, hs_member, hs_spectrum, skeleton_morphism, FrameMorphism, Require,
};
use crate::random::{random_int_formula, random_ms4_frame, rng};
use crate::relation::{PointSet, Relation};
use crate::semantics::{translation_equivalence, validates};
use crate::syntax::{axiom_corpus, grz, AxiomSet};

/// The frames the suite runs on; replaceable for fault injection.
#[derive(Clone, Debug)]
pub struct Fixtures {
    pub k1: Ms4Frame,
    pub k2: Ms4Frame,
    pub k3: Ms4Frame,
    pub k4: Ms4Frame,
    pub k5: Ms4Frame,
    pub h1: Ms4Frame,
    pub h2: Ms4Frame,
}

impl Default for Fixtures {
    fn default() -> Self {
        use crate::fixtures::*;
        Fixtures {
            k1: k1(),
            k2: k2(),
            k3: k3(),
            k4: k4(),
            k5: k5(),
            h1: h1(),
            h2: h2(),
        }
    }
}

impl Fixtures {
    pub fn frames(&self) -> [(&'static str, &Ms4Frame); 7] {
        [
            ("K1", &self.k1),
            ("K2", &self.k2),
            ("K3", &self.k3),
            ("K4", &self.k4),
            ("K5", &self.k5),
            ("H1", &self.h1),
            ("H2", &self.h2),
        ]
    }

    fn b1(&self) -> Result<FiniteMs4Algebra> {
        complex_algebra(&self.k1)
    }

    fn b2(&self) -> Result<FiniteMs4Algebra> {
        complex_algebra(&self.k2)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Run only checks whose name contains this text.
    pub only: Option<String>,
    pub parallel: bool,
    pub seed: u64,
    pub random_frames: usize,
    pub random_formulas: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            only: None,
            parallel: false,
            seed: 1,
            random_frames: 100,
            random_formulas: 200,
        }
    }
}

/// Pass or fail with short witness summaries.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub passed: bool,
    pub details: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            passed: true,
            details: Vec::new(),
        }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    /// Records a requirement; a false one fails the check.
    fn require(&mut self, ok: bool, line: impl Into<String>) {
        let line = line.into();
        if ok {
            self.details.push(line);
        } else {
            self.passed = false;
            self.details.push(format!("FAILED: {line}"));
        }
    }
}

pub struct Check {
    pub name: &'static str,
    pub anchor: &'static str,
    /// Number of the acceptance criterion this check belongs to.
    pub criterion: u8,
    pub run: fn(&Fixtures, &SuiteOptions) -> Result<Outcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub anchor: String,
    pub criterion: u8,
    pub passed: bool,
    pub details: Vec<String>,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.results.iter().find(|r| !r.passed)
    }

    /// Human-readable report; elapsed times only when asked for, so the
    /// default output is identical from run to run.
    pub fn render(&self, timings: bool) -> String {
        let mut out = String::new();
        for r in &self.results {
            let status = if r.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{status}] {} ({})", r.name, r.anchor));
            if timings {
                out.push_str(&format!(" {:.1} ms", r.elapsed.as_secs_f64() * 1000.0));
            }
            out.push('\n');
            for d in &r.details {
                out.push_str(&format!("    {d}\n"));
            }
        }
        let passed = self.results.iter().filter(|r| r.passed).count();
        out.push_str(&format!("{passed}/{} checks passed\n", self.results.len()));
        out
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

pub fn checks() -> Vec<Check> {
    vec![
        Check {
            name: "fixture-frames",
            anchor: "fixture frames are descriptive MS4-frames and their skeletons descriptive MIPC-frames",
            criterion: 1,
            run: fixture_frames,
        },
        Check {
            name: "skeletons",
            anchor: "skeletons of H1 and H2; a partially ordered frame is its own skeleton",
            criterion: 1,
            run: skeletons,
        },
        Check {
            name: "naturality",
            anchor: "the square relating skeleton and open elements commutes up to natural isomorphism",
            criterion: 5,
            run: naturality,
        },
        Check {
            name: "skeleton-morphism-eq",
            anchor: "the skeleton of an MS4 morphism need not be a p-morphism for E_Q'",
            criterion: 4,
            run: skeleton_morphism_eq,
        },
        Check {
            name: "key-lemma-mipc",
            anchor: "the skeleton of K1 maps onto the skeleton of K2",
            criterion: 2,
            run: key_lemma_mipc,
        },
        Check {
            name: "key-lemma-ms4",
            anchor: "no Q-upset of K1 maps onto K2",
            criterion: 3,
            run: key_lemma_ms4,
        },
        Check {
            name: "open-embedding",
            anchor: "O(B2) embeds into O(B1)",
            criterion: 7,
            run: open_embedding,
        },
        Check {
            name: "b2-not-in-hs-b1",
            anchor: "B2 is not in HS(B1)",
            criterion: 7,
            run: b2_not_in_hs_b1,
        },
        Check {
            name: "open-variety-exclusion",
            anchor: "O(B2) is not the open algebra of any member of Var(B1)",
            criterion: 7,
            run: open_variety_exclusion,
        },
        Check {
            name: "s-o-subalgebras",
            anchor: "O(B2) is in SO(B1) but not in OS(B1)",
            criterion: 8,
            run: s_o_subalgebras,
        },
        Check {
            name: "s-o-intersection",
            anchor: "O(B2) is not in SO of the intersection of Var(B1) and Var(B2)",
            criterion: 8,
            run: s_o_intersection,
        },
        Check {
            name: "s-o-spectra",
            anchor: "O(B2) lies in the variety of O(B1) although B2 is not in HS(B1)",
            criterion: 8,
            run: s_o_spectra,
        },
        Check {
            name: "spectra",
            anchor: "subdirectly irreducible members of Var(B2) and Var(O(B2))",
            criterion: 9,
            run: spectra,
        },
        Check {
            name: "si-join-property",
            anchor: "in a subdirectly irreducible algebra a join of fixpoints is top only if one of them is",
            criterion: 10,
            run: si_join_property,
        },
        Check {
            name: "translation",
            anchor: "O(B) validates a formula iff B validates its translation",
            criterion: 11,
            run: translation,
        },
        Check {
            name: "duality-round-trips",
            anchor: "finite frames and algebras are recovered from their duals",
            criterion: 6,
            run: duality_round_trips,
        },
        Check {
            name: "filters-and-upsets",
            anchor: "monadic filters correspond to Q-upsets of the dual frame",
            criterion: 12,
            run: filters_and_upsets,
        },
    ]
}

fn run_check(check: &Check, fixtures: &Fixtures, options: &SuiteOptions) -> CheckResult {
    let start = Instant::now();
    let outcome = match (check.run)(fixtures, options) {
        Ok(o) => o,
        Err(e) => Outcome {
            passed: false,
            details: vec![format!("FAILED: {e}")],
        },
    };
    CheckResult {
        name: check.name.to_string(),
        anchor: check.anchor.to_string(),
        criterion: check.criterion,
        passed: outcome.passed,
        details: outcome.details,
        elapsed: start.elapsed(),
    }
}

/// Runs the selected checks; results are always in declaration order.
pub fn run_suite(fixtures: &Fixtures, options: &SuiteOptions) -> SuiteReport {
    let selected: Vec<Check> = checks()
        .into_iter()
        .filter(|c| options.only.as_ref().is_none_or(|p| c.name.contains(p.as_str())))
        .collect();
    let results = if options.parallel {
        std::thread::scope(|scope| {
            let handles: Vec<_> = selected
                .iter()
                .map(|c| scope.spawn(move || run_check(c, fixtures, options)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("check thread panicked"))
                .collect()
        })
    } else {
        selected.iter().map(|c| run_check(c, fixtures, options)).collect()
    };
    SuiteReport { results }
}

fn at(frame: &impl FiniteFrame, name: &str) -> usize {
    frame.index_of(name).unwrap_or(usize::MAX)
}

fn fixture_frames(fx: &Fixtures, _: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    for (name, g) in fx.frames() {
        let report = g.validate();
        o.require(report.ok(), format!("{name} MS4: {report}"));
        if report.ok() {
            let sk = skeleton(g)?;
            let report = sk.frame.validate();
            o.require(report.ok(), format!("rho({name}) MIPC: {report}"));
        }
    }
    Ok(o)
}

fn skeletons(fx: &Fixtures, _: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    let h1 = &fx.h1;
    let sk = skeleton(h1)?;
    let p = |n: &str| sk.projection[at(h1, n)];
    let e_q = sk.frame.e_q();
    o.require(sk.frame.len() == 3, format!("rho(H1) has {} points", sk.frame.len()));
    o.require(p("b") == p("d"), "pi(b) = pi(d)");
    o.require(
        e_q.image(p("a")) == PointSet::from_points([p("a"), p("b")])
            && e_q.image(p("c")) == PointSet::singleton(p("c")),
        format!(
            "E_Q' classes of rho(H1): {}",
            e_q.classes()
                .iter()
                .map(|c| sk.frame.render_set(*c))
                .collect::<Vec<_>>()
                .join(" ")
        ),
    );
    let rho_h2 = skeleton(&fx.h2)?.frame;
    let chain = MipcFrame::new(
        vec!["0".into(), "1".into()],
        Relation::from_pairs(2, [(0, 1)]).reflexive_transitive_closure(),
        Relation::total(2),
    )?;
    o.require(
        frames_isomorphic(&rho_h2, &chain).is_some(),
        "rho(H2) is a 2-chain forming one E_Q' class",
    );
    for (name, g) in fx.frames() {
        if !g.is_partially_ordered() {
            continue;
        }
        let sk = skeleton(g)?;
        let bijective = sk.projection.iter().copied().collect::<PointSet>().len() == g.len();
        let same = bijective
            && (0..g.len()).all(|x| {
                (0..g.len()).all(|y| {
                    let (a, b) = (sk.projection[x], sk.projection[y]);
                    g.r().holds(x, y) == sk.frame.r().holds(a, b) && g.q().holds(x, y) == sk.frame.side().holds(a, b)
                })
            });
        o.require(same, format!("rho({name}) is a relabelling of {name}"));
    }
    Ok(o)
}

fn naturality(fx: &Fixtures, opts: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    for (name, g) in fx.frames() {
        let report = check_skeleton_naturality(g)?;
        o.require(report.ok(), format!("{name}: {report}"));
    }
    let mut r = rng(opts.seed);
    let mut failures = 0;
    for i in 0..opts.random_frames {
        let g = random_ms4_frame(&mut r, 5);
        let report = check_skeleton_naturality(&g)?;
        if !report.ok() {
            failures += 1;
            o.require(false, format!("random frame {i}: {report}"));
        }
    }
    o.require(
        failures == 0,
        format!(
            "{} random frames (seed {}, at most 5 points)",
            opts.random_frames, opts.seed
        ),
    );
    Ok(o)
}

fn skeleton_morphism_eq(fx: &Fixtures, _: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    let (h1, h2) = (&fx.h1, &fx.h2);
    let map = ["u", "v", "w", "w"].iter().map(|p| at(h2, p)).collect();
    let f = FrameMorphism::new(h1.clone(), h2.clone(), map)?;
    o.require(true, "a->u, b->v, c->w, d->w is an MS4 morphism");
    let sk = skeleton_morphism(&f)?;
    o.require(true, format!("rho(f) = {:?} is an MIPC morphism", sk.morphism.pairs()));
    o.require(
        !sk.eq_pmorphism && sk.witness_name() == Some("c"),
        format!(
            "E_Q' back condition fails at {}",
            sk.witness_name().unwrap_or("no point")
        ),
    );
    Ok(o)
}

fn key_lemma_mipc(fx: &Fixtures, _: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    let r1 = skeleton(&fx.k1)?.frame;
    let r2 = skeleton(&fx.k2)?.frame;
    let all = enumerate_morphisms(&r1, &r2, Require::Onto)?;
    o.note(format!("{} candidate maps", r2.len().pow(r1.len() as u32)));
    let target: Vec<usize> = ["a", "b", "c", "c"].iter().map(|p| at(&r2, p)).collect();
    let source: Vec<usize> = ["u", "v", "w", "z"].iter().map(|p| at(&r1, p)).collect();
    let found = all
        .iter()
        .any(|m| source.iter().zip(&target).all(|(&x, &y)| m.map.get(x) == Some(&y)));
    o.require(!all.is_empty(), format!("{} onto MIPC morphisms", all.len()));
    o.require(found, "u->a, v->b, w->c, z->c is among them");
    Ok(o)
}

fn key_lemma_ms4(fx: &Fixtures, _: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    let ups = q_upsets(&fx.k1);
    o.require(ups.len() == 4, format!("{} Q-upsets of K1", ups.len()));
    for z in ups {
        let sub = restrict(&fx.k1, z)?;
        let found = enumerate_morphisms(&sub, &fx.k2, Require::Onto)?;
        o.require(
            found.is_empty(),
            format!("{}: {} onto MS4 morphisms", fx.k1.render_set(z), found.len()),
        );
    }
    Ok(o)
}

fn opens(fx: &Fixtures) -> Result<(FiniteMha, FiniteMha)> {
    Ok((open_algebra(&fx.b1()?)?.algebra, open_algebra(&fx.b2()?)?.algebra))
}

fn open_embedding(fx: &Fixtures, _: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    let (o1, o2) = opens(fx)?;
    o.require(
        embeds(&o2, &o1)?,
        format!("|O(B1)| = {}, |O(B2)| = {}", o1.size(), o2.size()),
    );
    Ok(o)
}

fn b2_not_in_hs_b1(fx: &Fixtures, _: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    o.require(!hs_member(&fx.b2()?, &fx.b1()?)?, "no Q-upset of K1 maps onto K2");
    Ok(o)
}

fn open_variety_exclusion(fx: &Fixtures, _: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    let spectrum = hs_spectrum(&fx.b1()?)?;
    let rho_k2 = skeleton(&fx.k2)?.frame;
    o.note(format!("{} s.i. duals in Var(B1)", spectrum.len()));
    for g in &spectrum {
        let poset = g.is_partially_ordered();
        let grz_ok = validates(&complex_algebra(g)?, &grz())?.holds;
        o.require(
            poset && grz_ok,
            format!("{:?}: partially ordered, grz valid", g.points()),
        );
        let rho = skeleton(g)?.frame;
        o.require(
            frames_isomorphic(&rho, &rho_k2).is_none(),
            format!("{:?}: skeleton differs from rho(K2)", g.points()),
        );
    }
    Ok(o)
}

fn s_o_subalgebras(fx: &Fixtures, _: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    let b1 = fx.b1()?;
    let (o1, o2) = opens(fx)?;
    let subs = subalgebras(&b1)?;
    o.note(format!("{} of 15 atom partitions give subalgebras of B1", subs.len()));
    for s in &subs {
        let sub = subalgebra(&b1, s)?;
        let open = open_algebra(&sub)?.algebra;
        o.require(
            algebras_isomorphic(&open, &o2).is_none(),
            format!("subalgebra of size {}: |O| = {}, not O(B2)", sub.size(), open.size()),
        );
    }
    o.require(embeds(&o2, &o1)?, "O(B2) embeds into O(B1)");
    Ok(o)
}

fn s_o_intersection(fx: &Fixtures, _: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    let (_, o2) = opens(fx)?;
    let s1 = hs_spectrum(&fx.b1()?)?;
    let s2 = hs_spectrum(&fx.b2()?)?;
    let common: Vec<&Ms4Frame> = s1
        .iter()
        .filter(|g| s2.iter().any(|h| frames_isomorphic(*g, h).is_some()))
        .collect();
    o.note(format!("{} common s.i. duals", common.len()));
    for g in common {
        let og = open_algebra(&complex_algebra(g)?)?.algebra;
        o.require(!hs_member(&o2, &og)?, format!("O(B2) not in HS(O({:?}*))", g.points()));
    }
    Ok(o)
}

fn contains_up_to_iso(big: &[MipcFrame], small: &[MipcFrame]) -> bool {
    small
        .iter()
        .all(|f| big.iter().any(|g| frames_isomorphic(f, g).is_some()))
}

fn s_o_spectra(fx: &Fixtures, _: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    let (o1, o2) = opens(fx)?;
    let s1 = hs_spectrum(&o1)?;
    let s2 = hs_spectrum(&o2)?;
    o.require(
        contains_up_to_iso(&s1, &s2),
        format!("{} s.i. duals for O(B1) cover the {} for O(B2)", s1.len(), s2.len()),
    );
    o.require(!hs_member(&fx.b2()?, &fx.b1()?)?, "B2 not in HS(B1)");
    Ok(o)
}

fn spectra(fx: &Fixtures, _: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    let expected = [&fx.k2, &fx.k3, &fx.k4, &fx.k5];
    let b2 = fx.b2()?;
    let s = hs_spectrum(&b2)?;
    let matches = s.len() == expected.len()
        && expected
            .iter()
            .all(|k| s.iter().any(|g| frames_isomorphic(g, *k).is_some()));
    o.require(matches, format!("Var(B2): {} frames, K2 to K5", s.len()));
    let rhos = expected
        .iter()
        .map(|k| skeleton(k).map(|s| s.frame))
        .collect::<Result<Vec<_>>>()?;
    let s = hs_spectrum(&open_algebra(&b2)?.algebra)?;
    let matches = s.len() == rhos.len() && contains_up_to_iso(&s, &rhos);
    o.require(matches, format!("Var(O(B2)): {} frames, rho(K2) to rho(K5)", s.len()));
    Ok(o)
}

fn si_join_property(fx: &Fixtures, _: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    let (b1, b2) = (fx.b1()?, fx.b2()?);
    let (o1, o2) = opens(fx)?;
    for (name, si, violation) in [
        ("B1", subdirectly_irreducible(&b1)?, lemma_property_violation(&b1)),
        ("B2", subdirectly_irreducible(&b2)?, lemma_property_violation(&b2)),
        ("O(B1)", subdirectly_irreducible(&o1)?, lemma_property_violation(&o1)),
        ("O(B2)", subdirectly_irreducible(&o2)?, lemma_property_violation(&o2)),
    ] {
        o.require(si && violation.is_none(), format!("{name}: s.i. and no violating pair"));
    }
    let two = complex_algebra(&fx.k5)?.with_labels(None)?;
    let control = product(&two, &two)?;
    let si = subdirectly_irreducible(&control)?;
    let violation = lemma_property_violation(&control);
    let shown = violation.map(|(x, y)| format!("({}, {})", control.label(x), control.label(y)));
    o.require(
        !si && shown.as_deref() == Some("((1,0), (0,1))"),
        format!("K5* x K5*: not s.i., violating pair {}", shown.unwrap_or_default()),
    );
    Ok(o)
}

fn translation(fx: &Fixtures, opts: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    let algebras = [("B1", fx.b1()?), ("B2", fx.b2()?)];
    let corpus = axiom_corpus(AxiomSet::Mipc);
    for (name, b) in &algebras {
        let agree = corpus
            .iter()
            .map(|f| translation_equivalence(b, f))
            .collect::<Result<Vec<_>>>()?;
        o.require(
            agree.iter().all(|&a| a),
            format!("{name}: all {} axioms agree", corpus.len()),
        );
    }
    let mut r = rng(opts.seed);
    let formulas: Vec<_> = (0..opts.random_formulas)
        .map(|_| random_int_formula(&mut r, 3, 4))
        .collect();
    for (name, b) in &algebras {
        let mut disagreements = Vec::new();
        for f in &formulas {
            if !translation_equivalence(b, f)? {
                disagreements.push(f.to_string());
            }
        }
        o.require(
            disagreements.is_empty(),
            format!(
                "{name}: {} random formulas (seed {}), disagreements {:?}",
                formulas.len(),
                opts.seed,
                disagreements
            ),
        );
    }
    Ok(o)
}

fn duality_round_trips(fx: &Fixtures, opts: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    let mut frame_ok = true;
    let mut algebra_ok = true;
    let mut check = |g: &Ms4Frame| -> Result<()> {
        let b = complex_algebra(g)?;
        frame_ok &= frames_isomorphic(&dual_frame(&b)?, g).is_some();
        algebra_ok &= algebra_round_trip(&b).is_ok();
        let rho = skeleton(g)?.frame;
        let a = complex_algebra(&rho)?;
        frame_ok &= frames_isomorphic(&dual_frame(&a)?, &rho).is_some();
        algebra_ok &= algebra_round_trip(&a).is_ok();
        algebra_ok &= algebra_round_trip(&open_algebra(&b)?.algebra).is_ok();
        Ok(())
    };
    for (_, g) in fx.frames() {
        check(g)?;
    }
    let mut r = rng(opts.seed);
    for _ in 0..opts.random_frames {
        check(&random_ms4_frame(&mut r, 5))?;
    }
    let total = fx.frames().len() + opts.random_frames;
    o.require(
        frame_ok,
        format!("frames recovered from their complex algebras ({total} MS4 frames and skeletons)"),
    );
    o.require(algebra_ok, "algebras recovered from their dual frames");
    Ok(o)
}

fn filters_and_upsets(fx: &Fixtures, _: &SuiteOptions) -> Result<Outcome> {
    let mut o = Outcome::new();
    for (name, g, expected) in [("K1", &fx.k1, 4), ("K2", &fx.k2, 3)] {
        let filters = monadic_filters(&complex_algebra(g)?).len();
        let ups = q_upsets(g).len();
        o.require(
            filters == expected && ups == expected,
            format!("{name}: {filters} monadic filters, {ups} Q-upsets"),
        );
    }
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_passes() {
        let report = run_suite(&Fixtures::default(), &SuiteOptions::default());
        print!("{}", report.render(true));
        assert!(report.ok());
        assert_eq!(report.results.len(), checks().len());
    }

    #[test]
    fn only_filter() {
        let opts = SuiteOptions {
            only: Some("key-lemma".into()),
            ..SuiteOptions::default()
        };
        let report = run_suite(&Fixtures::default(), &opts);
        assert_eq!(report.results.len(), 2);
        assert!(report.ok(), "{report}");
    }

    #[test]
    fn corrupted_k1_fails_first_check() {
        let fx = Fixtures {
            k1: crate::fixtures::ms4_frame(
                &["u", "v", "w", "z"],
                &[("u", "v"), ("u", "w"), ("v", "z"), ("w", "z")],
                &[&["u", "z"], &["v"], &["w"]],
            ),
            ..Fixtures::default()
        };
        let opts = SuiteOptions {
            only: Some("fixture".into()),
            ..SuiteOptions::default()
        };
        let report = run_suite(&fx, &opts);
        assert_eq!(report.first_failure().unwrap().name, "fixture-frames");
    }
}
