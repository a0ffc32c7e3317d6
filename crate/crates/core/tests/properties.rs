use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::Rng;

use monadic_core::algebras::{
    algebras_isomorphic, is_homomorphism, lemma_property_violation, open_algebra, subdirectly_irreducible,
    FiniteAlgebra,
};
use monadic_core::duality::{algebra_round_trip, check_skeleton_naturality, complex_algebra, dual_frame};
use monadic_core::frames::{frames_isomorphic, q_upsets, skeleton, FiniteFrame, Frame, MipcFrame, Ms4Frame};
use monadic_core::io::FrameFile;
use monadic_core::morphisms::{check_morphism, enumerate_morphisms, hs_member, strongly_q_rooted, Require};
use monadic_core::random::{random_int_formula, random_mipc_frame, random_ms4_frame, rng};
use monadic_core::relation::{PointSet, Relation};
use monadic_core::semantics::{evaluate, translation_equivalence, validates, Valuation};
use monadic_core::syntax::{fresh_disjunction, godel_translate, parse_formula, Lang, Node};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

fn frame(seed: u64, max: usize) -> Ms4Frame {
    random_ms4_frame(&mut rng(seed), max)
}

fn all_maps(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..m.pow(n as u32)).map(move |mut code| {
        (0..n)
            .map(|_| {
                let v = code % m;
                code /= m;
                v
            })
            .collect()
    })
}

fn brute_upsets(n: usize, rel: &Relation) -> BTreeSet<u64> {
    (0u64..1 << n)
        .filter(|&bits| rel.image_of(PointSet(bits)).is_subset(PointSet(bits)))
        .collect()
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn printed_formulas_parse_back(seed in any::<u64>(), vars in 1usize..4, depth in 0usize..5) {
        let phi = random_int_formula(&mut rng(seed), vars, depth);
        prop_assert_eq!(&parse_formula(&phi.to_string(), Lang::Int).unwrap(), &phi);
        let t = godel_translate(&phi).unwrap();
        prop_assert_eq!(parse_formula(&t.to_string(), Lang::Mod).unwrap(), t);
    }

    #[test]
    fn fresh_disjuncts_share_no_variables(a in any::<u64>(), b in any::<u64>()) {
        let left = random_int_formula(&mut rng(a), 3, 3);
        let right = random_int_formula(&mut rng(b), 3, 3);
        let joined = fresh_disjunction(&left, &right).unwrap();
        let Node::Or(l, r) = joined.node() else { panic!("not a disjunction") };
        let (mut lv, mut rv) = (BTreeSet::new(), BTreeSet::new());
        l.collect_vars(&mut lv);
        r.collect_vars(&mut rv);
        prop_assert!(lv.is_disjoint(&rv));
        prop_assert_eq!(lv, left.vars());
        prop_assert_eq!(rv.len(), right.vars().len());
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn skeleton_is_a_valid_quotient(seed in any::<u64>()) {
        let g = frame(seed, 6);
        let sk = skeleton(&g).unwrap();
        prop_assert!(sk.frame.validate().ok());
        let image: PointSet = sk.projection.iter().copied().collect();
        prop_assert_eq!(image, sk.frame.all());
        for x in 0..g.len() {
            for y in 0..g.len() {
                let (px, py) = (sk.projection[x], sk.projection[y]);
                prop_assert_eq!(px == py, g.r().holds(x, y) && g.r().holds(y, x));
                if g.r().holds(x, y) {
                    prop_assert!(sk.frame.r().holds(px, py));
                }
                if g.q().holds(x, y) {
                    prop_assert!(sk.frame.side().holds(px, py));
                }
            }
        }
    }

    #[test]
    fn q_upsets_match_brute_force(seed in any::<u64>()) {
        let g = frame(seed, 6);
        let got: BTreeSet<u64> = q_upsets(&g).iter().map(|s| s.bits()).collect();
        prop_assert_eq!(&got, &brute_upsets(g.len(), &g.q()));
        for &a in &got {
            for &b in &got {
                prop_assert!(got.contains(&(a | b)) && got.contains(&(a & b)));
            }
        }
    }

    #[test]
    fn mipc_upset_condition_matches_all_upsets(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=5);
        let mut rel = Relation::empty(n);
        let mut q = Relation::empty(n);
        for x in 0..n {
            for y in 0..n {
                if x < y && r.gen_bool(0.3) {
                    rel.insert(x, y);
                    q.insert(x, y);
                }
                if x != y && r.gen_bool(0.2) {
                    q.insert(x, y);
                }
            }
        }
        let rel = rel.reflexive_transitive_closure();
        let q = q.reflexive_transitive_closure();
        let names = (0..n).map(|i| format!("x{i}")).collect();
        let f = MipcFrame::new(names, rel.clone(), q.clone()).unwrap();
        let oracle = brute_upsets(n, &rel)
            .iter()
            .any(|&u| !rel.is_upset(q.image_of(PointSet(u))));
        prop_assert_eq!(f.validate().has("q-upset-image"), oracle);
    }

    #[test]
    fn duality_round_trips(seed in any::<u64>()) {
        let g = frame(seed, 5);
        let b = complex_algebra(&g).unwrap();
        prop_assert!(b.validate().ok());
        prop_assert!(frames_isomorphic(&dual_frame(&b).unwrap(), &g).is_some());
        prop_assert!(algebra_round_trip(&b).is_ok());
        let h = random_mipc_frame(&mut rng(seed ^ 1), 5);
        let a = complex_algebra(&h).unwrap();
        prop_assert!(a.validate().ok());
        prop_assert!(frames_isomorphic(&dual_frame(&a).unwrap(), &h).is_some());
        prop_assert!(algebra_round_trip(&a).is_ok());
    }

    #[test]
    fn naturality_holds(seed in any::<u64>()) {
        let g = frame(seed, 5);
        let report = check_skeleton_naturality(&g).unwrap();
        prop_assert!(report.ok(), "{}", report);
        let o = open_algebra(&complex_algebra(&g).unwrap()).unwrap().algebra;
        let rho = complex_algebra(&skeleton(&g).unwrap().frame).unwrap();
        prop_assert!(algebras_isomorphic(&o, &rho).is_some());
    }

    #[test]
    fn frame_files_round_trip(seed in any::<u64>()) {
        let g = frame(seed, 5);
        let text = serde_json::to_string(&FrameFile::from_ms4(&g)).unwrap();
        let back: FrameFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.to_frame().unwrap(), Frame::Ms4(g.clone()));
        let sk = skeleton(&g).unwrap().frame;
        let back = FrameFile::from_mipc(&sk).to_frame().unwrap();
        prop_assert_eq!(back, Frame::Mipc(sk));
    }
}

fn check_enumeration<F: FiniteFrame>(g: &F, h: &F) -> Result<(), TestCaseError> {
    let found = enumerate_morphisms(g, h, Require::Any).unwrap();
    let brute: Vec<Vec<usize>> = all_maps(g.len(), h.len())
        .filter(|m| check_morphism(g, h, m).unwrap().ok())
        .collect();
    let mut got: Vec<Vec<usize>> = found.iter().map(|f| f.map.clone()).collect();
    got.sort();
    let mut want = brute;
    want.sort();
    prop_assert_eq!(got, want);
    Ok(())
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn enumeration_matches_brute_force(a in any::<u64>(), b in any::<u64>()) {
        check_enumeration(&frame(a, 4), &frame(b, 4))?;
        let (g, h) = (random_mipc_frame(&mut rng(a), 4), random_mipc_frame(&mut rng(b), 4));
        check_enumeration(&g, &h)?;
    }

    #[test]
    fn ms4_morphisms_are_q_pmorphisms(a in any::<u64>(), b in any::<u64>()) {
        let (g, h) = (frame(a, 4), frame(b, 4));
        for f in enumerate_morphisms(&g, &h, Require::Any).unwrap() {
            for x in 0..g.len() {
                let image: PointSet = g.q().image(x).iter().map(|y| f.map[y]).collect();
                prop_assert_eq!(image, h.q().image(f.map[x]));
            }
        }
    }

    #[test]
    fn inverse_image_is_functorial(a in any::<u64>(), b in any::<u64>()) {
        let (g, h) = (frame(a, 4), frame(b, 3));
        let (bg, bh) = (complex_algebra(&g).unwrap(), complex_algebra(&h).unwrap());
        let ends = enumerate_morphisms(&h, &h, Require::Any).unwrap();
        for f in enumerate_morphisms(&g, &h, Require::Any).unwrap() {
            let star = f.inverse_image().unwrap();
            prop_assert!(is_homomorphism(&bh, &bg, &star).ok());
            let injective = star.iter().collect::<BTreeSet<_>>().len() == star.len();
            prop_assert_eq!(f.onto, injective);
            for e in &ends {
                let composite = f.compose(e).unwrap().inverse_image().unwrap();
                let e_star = e.inverse_image().unwrap();
                let chained: Vec<usize> = e_star.iter().map(|&u| star[u]).collect();
                prop_assert_eq!(composite, chained);
            }
        }
    }

    #[test]
    fn hs_is_reflexive_and_transitive(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let algs: Vec<_> = [a, b, c]
            .iter()
            .map(|&s| complex_algebra(&frame(s, 3)).unwrap())
            .collect();
        for x in &algs {
            prop_assert!(hs_member(x, x).unwrap());
        }
        if hs_member(&algs[0], &algs[1]).unwrap() && hs_member(&algs[1], &algs[2]).unwrap() {
            prop_assert!(hs_member(&algs[0], &algs[2]).unwrap());
        }
    }

    #[test]
    fn si_matches_rootedness_and_join_property(seed in any::<u64>()) {
        let g = frame(seed, 5);
        let b = complex_algebra(&g).unwrap();
        let si = subdirectly_irreducible(&b).unwrap();
        prop_assert_eq!(si, strongly_q_rooted(&g));
        if si {
            prop_assert_eq!(lemma_property_violation(&b), None);
            let o = open_algebra(&b).unwrap().algebra;
            prop_assert!(subdirectly_irreducible(&o).unwrap());
            prop_assert_eq!(lemma_property_violation(&o), None);
        }
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn translation_agrees_on_random_frames(a in any::<u64>(), b in any::<u64>()) {
        let algebra = complex_algebra(&frame(a, 4)).unwrap();
        let phi = random_int_formula(&mut rng(b), 2, 3);
        prop_assert!(translation_equivalence(&algebra, &phi).unwrap(), "{}", phi);
    }

    #[test]
    fn translations_denote_open_elements(a in any::<u64>(), b in any::<u64>()) {
        let algebra = complex_algebra(&frame(a, 4)).unwrap();
        let t = godel_translate(&random_int_formula(&mut rng(b), 2, 3)).unwrap();
        let mut r = rng(b ^ 7);
        let valuation: Valuation = ["p", "q"]
            .iter()
            .map(|v| (v.to_string(), r.gen_range(0..algebra.size())))
            .collect();
        let value = evaluate(&algebra, &valuation, &t).unwrap();
        prop_assert_eq!(algebra.boxed(value), value);
    }

    #[test]
    fn validity_ignores_variable_names(a in any::<u64>(), b in any::<u64>()) {
        let algebra = complex_algebra(&frame(a, 4)).unwrap();
        let o = open_algebra(&algebra).unwrap().algebra;
        let phi = random_int_formula(&mut rng(b), 3, 3);
        let renamed = phi.rename(|v| format!("{v}_{v}"));
        prop_assert_eq!(validates(&o, &phi).unwrap().holds, validates(&o, &renamed).unwrap().holds);
        let t = godel_translate(&phi).unwrap();
        let swapped = t.rename(|v| match v { "p" => "q".into(), "q" => "p".into(), other => other.into() });
        prop_assert_eq!(validates(&algebra, &t).unwrap().holds, validates(&algebra, &swapped).unwrap().holds);
    }
}
