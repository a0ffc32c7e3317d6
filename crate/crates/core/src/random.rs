//! Seeded generators for frames and formulas.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::frames::{skeleton, FiniteFrame, MipcFrame, Ms4Frame};
use crate::relation::{PointSet, Relation};
use crate::syntax::{Formula, Lang, Node};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A valid MS4 frame with between 1 and `max_points` points, by rejection.
pub fn random_ms4_frame<R: Rng>(rng: &mut R, max_points: usize) -> Ms4Frame {
    assert!(max_points >= 1);
    loop {
        let n = rng.gen_range(1..=max_points);
        let density = rng.gen_range(0.1..0.6);
        let mut r = Relation::empty(n);
        for x in 0..n {
            for y in 0..n {
                if x != y && rng.gen_bool(density) {
                    r.insert(x, y);
                }
            }
        }
        let r = r.reflexive_transitive_closure();
        let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
        let classes: Vec<PointSet> = (0..n)
            .map(|c| (0..n).filter(|&x| labels[x] == c).collect())
            .filter(|s: &PointSet| !s.is_empty())
            .collect();
        let e = Relation::from_classes(n, &classes);
        let names = (0..n).map(|i| format!("y{i}")).collect();
        let frame = Ms4Frame::new(names, r, e).expect("generated shape");
        if frame.validate().ok() {
            return frame;
        }
    }
}

/// A valid MIPC frame, obtained as the skeleton of a random MS4 frame.
pub fn random_mipc_frame<R: Rng>(rng: &mut R, max_points: usize) -> MipcFrame {
    let g = random_ms4_frame(rng, max_points);
    skeleton(&g).expect("generated frame is valid").frame
}

/// A random intuitionistic formula over the variables `p`, `q`, `r` (the
/// first `vars` of them), of depth at most `depth`. Every connective is
/// equally likely at inner positions.
pub fn random_int_formula<R: Rng>(rng: &mut R, vars: usize, depth: usize) -> Formula {
    const NAMES: [&str; 6] = ["p", "q", "r", "s", "t", "u"];
    assert!((1..=NAMES.len()).contains(&vars));
    fn go<R: Rng>(rng: &mut R, vars: usize, depth: usize) -> Node {
        let choice = if depth == 0 {
            rng.gen_range(0..2)
        } else {
            rng.gen_range(0..7)
        };
        match choice {
            0 => Node::var(NAMES[rng.gen_range(0..vars)]),
            1 => Node::Bot,
            2 => Node::and(go(rng, vars, depth - 1), go(rng, vars, depth - 1)),
            3 => Node::or(go(rng, vars, depth - 1), go(rng, vars, depth - 1)),
            4 => Node::imp(go(rng, vars, depth - 1), go(rng, vars, depth - 1)),
            5 => Node::forall(go(rng, vars, depth - 1)),
            _ => Node::exists(go(rng, vars, depth - 1)),
        }
    }
    Formula::new(Lang::Int, go(rng, vars, depth)).expect("only intuitionistic constructors")
}
