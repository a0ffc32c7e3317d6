use monadic_core::algebras::{
    algebras_isomorphic, generated_subalgebra, is_monadic_filter, lemma_property_violation, monadic_filters,
    open_algebra, product, quotient, subalgebra, subalgebras, subdirectly_irreducible, FiniteAlgebra, FiniteMha,
    FiniteMs4Algebra, MonadicFilter,
};
use monadic_core::duality::complex_algebra;
use monadic_core::fixtures;
use monadic_core::frames::{restrict, skeleton};
use monadic_core::relation::PointSet;

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
}

fn brute_filters<A: FiniteAlgebra>(a: &A) -> Vec<Vec<usize>> {
    subsets(a.size())
        .filter(|s| {
            !s.is_empty()
                && s.iter().all(|&x| {
                    (0..a.size()).all(|y| !a.leq(x, y) || s.contains(&y))
                        && s.iter().all(|&y| s.contains(&a.meet(x, y)))
                        && s.contains(&a.filter_operator(x))
                })
        })
        .collect()
}

fn closed_ms4(b: &FiniteMs4Algebra, s: &[usize]) -> bool {
    s.contains(&b.bot())
        && s.contains(&b.top())
        && s.iter().all(|&x| {
            s.contains(&b.neg(x))
                && s.contains(&b.boxed(x))
                && s.contains(&b.forall(x))
                && s.iter()
                    .all(|&y| s.contains(&b.meet(x, y)) && s.contains(&b.join(x, y)))
        })
}

fn opens() -> (FiniteMha, FiniteMha) {
    (
        open_algebra(&fixtures::b1()).unwrap().algebra,
        open_algebra(&fixtures::b2()).unwrap().algebra,
    )
}

#[test]
fn fixture_algebras_validate() {
    let (o1, o2) = opens();
    assert!(fixtures::b1().validate().ok());
    assert!(fixtures::b2().validate().ok());
    assert!(o1.validate().ok());
    assert!(o2.validate().ok());
    assert_eq!(fixtures::b1().size(), 16);
    assert_eq!(fixtures::b2().size(), 8);
}

#[test]
fn corrupted_box_is_reported() {
    let b = fixtures::b1();
    let mut boxed = b.box_vec().to_vec();
    boxed[b.top()] = b.bot();
    let bad = FiniteMs4Algebra::new(
        b.meet_table().clone(),
        b.join_table().clone(),
        b.neg_vec().to_vec(),
        boxed,
        b.forall_vec().to_vec(),
        None,
    )
    .unwrap();
    let report = bad.validate();
    assert!(report.has("box-top"), "{report}");
}

#[test]
fn open_algebra_shapes() {
    let (o1, o2) = opens();
    assert_eq!(o1.size(), 6);
    assert_eq!(o2.size(), 4);
    assert!((0..4).all(|x| (0..4).all(|y| o2.leq(x, y) || o2.leq(y, x))));
    let fixed: Vec<usize> = (0..4).filter(|&x| o2.forall(x) == x).collect();
    assert_eq!(fixed.len(), 3);
    assert_eq!(o2.fixpoint_subalgebra().unwrap(), fixed);
}

#[test]
fn open_elements_are_box_fixpoints() {
    let b = fixtures::b1();
    let brute: Vec<usize> = (0..b.size()).filter(|&x| b.boxed(x) == x).collect();
    assert_eq!(b.open_elements(), brute);
}

#[test]
fn filters_match_brute_force() {
    let (o1, o2) = opens();
    for (expected, count) in [(brute_filters(&fixtures::b1()), 4), (brute_filters(&fixtures::b2()), 3)] {
        assert_eq!(expected.len(), count);
    }
    let mut got: Vec<Vec<usize>> = monadic_filters(&fixtures::b1())
        .iter()
        .map(|f| f.members().to_vec())
        .collect();
    got.sort();
    let mut want = brute_filters(&fixtures::b1());
    want.sort();
    assert_eq!(got, want);
    for a in [&o1, &o2] {
        let mut got: Vec<Vec<usize>> = monadic_filters(a).iter().map(|f| f.members().to_vec()).collect();
        got.sort();
        let mut want = brute_filters(a);
        want.sort();
        assert_eq!(got, want);
        for s in subsets(a.size()) {
            assert_eq!(is_monadic_filter(a, &s), want.contains(&s));
        }
    }
}

#[test]
fn non_filter_rejected() {
    let b = fixtures::b2();
    // not up-closed
    assert!(MonadicFilter::new(&b, [4]).is_err());
    // {b} is not an R-upset, so ↑{b} is not box-closed
    assert!(MonadicFilter::principal(&b, 2).is_err());
    assert!(MonadicFilter::principal(&b, 6).is_ok());
}

#[test]
fn quotient_by_top_is_identity() {
    for b in [fixtures::b1(), fixtures::b2()] {
        let f = MonadicFilter::principal(&b, b.top()).unwrap();
        let q = quotient(&b, &f).unwrap();
        assert_eq!(q.algebra.size(), b.size());
        assert!(algebras_isomorphic(&q.algebra, &b).is_some());
    }
}

#[test]
fn quotient_matches_restriction() {
    let b2 = fixtures::b2();
    let k2 = fixtures::k2();
    let bc = PointSet::from_points([1, 2]);
    let f = MonadicFilter::principal(&b2, bc.bits() as usize).unwrap();
    let q = quotient(&b2, &f).unwrap();
    let expected = complex_algebra(&restrict(&k2, bc).unwrap()).unwrap();
    assert!(q.algebra.validate().ok());
    assert!(algebras_isomorphic(&q.algebra, &expected).is_some());
    for x in 0..b2.size() {
        for y in 0..b2.size() {
            assert_eq!(
                q.projection[b2.meet(x, y)],
                q.algebra.meet(q.projection[x], q.projection[y])
            );
        }
        assert_eq!(q.projection[b2.boxed(x)], q.algebra.boxed(q.projection[x]));
    }
}

#[test]
fn open_commutes_with_quotient() {
    let b1 = fixtures::b1();
    let open = open_algebra(&b1).unwrap();
    for f in monadic_filters(&b1) {
        let left = open_algebra(&quotient(&b1, &f).unwrap().algebra).unwrap().algebra;
        let members: Vec<usize> = (0..open.algebra.size())
            .filter(|&i| f.contains(open.inclusion[i]))
            .collect();
        let g = MonadicFilter::new(&open.algebra, members).unwrap();
        let right = quotient(&open.algebra, &g).unwrap().algebra;
        assert!(algebras_isomorphic(&left, &right).is_some(), "filter {:?}", f.members());
    }
}

#[test]
fn generated_subalgebras_are_least_closed_sets() {
    let b = fixtures::b1();
    let closed: Vec<Vec<usize>> = subsets(b.size()).filter(|s| closed_ms4(&b, s)).collect();
    for x in 0..b.size() {
        let least = closed
            .iter()
            .filter(|s| s.contains(&x))
            .min_by_key(|s| s.len())
            .unwrap();
        assert!(closed
            .iter()
            .filter(|s| s.contains(&x))
            .all(|s| least.iter().all(|y| s.contains(y))));
        assert_eq!(&generated_subalgebra(&b, &[x]), least);
    }
}

#[test]
fn subalgebra_enumeration_matches_brute_force() {
    for b in [fixtures::b1(), fixtures::b2()] {
        let mut brute: Vec<Vec<usize>> = subsets(b.size()).filter(|s| closed_ms4(&b, s)).collect();
        brute.sort();
        let mut got = subalgebras(&b).unwrap();
        got.sort();
        assert_eq!(got, brute);
        for s in &got {
            assert!(subalgebra(&b, s).unwrap().validate().ok());
        }
    }
    assert_eq!(subalgebras(&fixtures::b1()).unwrap().len(), 5);
}

#[test]
fn subalgebra_rejects_non_closed_sets() {
    let b = fixtures::b2();
    assert!(subalgebra(&b, &[0, 1, 7]).is_err());
}

#[test]
fn products() {
    let (b1, b2) = (fixtures::b1(), fixtures::b2());
    let p = product(&b1, &b2).unwrap();
    assert_eq!(p.size(), 128);
    assert!(p.validate().ok());
    let (o1, o2) = opens();
    let left = open_algebra(&p).unwrap().algebra;
    let right = product(&o1, &o2).unwrap();
    assert_eq!(left.size(), 24);
    assert!(algebras_isomorphic(&left, &right).is_some());
}

#[test]
fn subdirect_irreducibility() {
    let (o1, o2) = opens();
    assert!(subdirectly_irreducible(&fixtures::b1()).unwrap());
    assert!(subdirectly_irreducible(&fixtures::b2()).unwrap());
    assert!(subdirectly_irreducible(&o1).unwrap());
    assert!(subdirectly_irreducible(&o2).unwrap());
    let two = complex_algebra(&fixtures::k5()).unwrap();
    let p = product(&two, &two).unwrap();
    assert!(!subdirectly_irreducible(&p).unwrap());
    assert_eq!(lemma_property_violation(&p), Some((1, 2)));
}

#[test]
fn lemma_property_brute_force() {
    let (o1, o2) = opens();
    let b1 = fixtures::b1();
    let violated = |n: usize, op: &dyn Fn(usize) -> usize, join: &dyn Fn(usize, usize) -> usize| {
        let top = n - 1;
        (0..n).any(|x| (0..n).any(|y| join(op(x), op(y)) == top && x != top && y != top))
    };
    assert!(!violated(16, &|x| b1.master(x), &|x, y| b1.join(x, y)));
    assert!(!violated(6, &|x| o1.forall(x), &|x, y| o1.join(x, y)));
    assert!(!violated(4, &|x| o2.forall(x), &|x, y| o2.join(x, y)));
}

#[test]
fn quantifiers_are_adjoint_to_inclusion() {
    let (o1, o2) = opens();
    let h1 = complex_algebra(&skeleton(&fixtures::h1()).unwrap().frame).unwrap();
    for a in [o1, o2, h1] {
        let h0: Vec<usize> = (0..a.size()).filter(|&x| a.forall(x) == x).collect();
        for &h in &h0 {
            for x in 0..a.size() {
                assert_eq!(a.leq(h, x), a.leq(h, a.forall(x)));
                assert_eq!(a.leq(a.exists(x), h), a.leq(x, h));
            }
            for &k in &h0 {
                assert!(h0.contains(&a.imp(h, k)));
                assert!(h0.contains(&a.join(h, k)));
            }
        }
    }
}

#[test]
fn broken_exists_is_reported() {
    let (_, o2) = opens();
    let mut ex = o2.exists_vec().to_vec();
    ex[o2.bot()] = o2.top();
    let bad = FiniteMha::new(
        o2.meet_table().clone(),
        o2.join_table().clone(),
        o2.imp_table().clone(),
        o2.forall_vec().to_vec(),
        ex,
        None,
    )
    .unwrap();
    assert!(bad.validate().has("exists-bot"));
}
