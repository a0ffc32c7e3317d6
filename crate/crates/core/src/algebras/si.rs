use super::{monadic_filters, FiniteAlgebra};
use crate::duality::{dual_frame, DualAlgebra};
use crate::error::{Error, Result};
use crate::frames::FiniteFrame;

/// Subdirect irreducibility, decided twice: by a least nontrivial monadic
/// filter and by a `Q`-root of the dual frame. Disagreement is an error.
pub fn subdirectly_irreducible<A: DualAlgebra>(a: &A) -> Result<bool> {
    a.ensure_valid()?;
    let nontrivial: Vec<_> = monadic_filters(a).into_iter().filter(|f| f.len() > 1).collect();
    let algebraic = nontrivial.iter().any(|least| {
        nontrivial
            .iter()
            .all(|f| least.members().iter().all(|&x| f.contains(x)))
    });
    let frame = dual_frame(a)?;
    let q = frame.q();
    let dual = (0..frame.len()).any(|x| q.image(x) == frame.all());
    if algebraic != dual {
        return Err(Error::CrossCheck(format!(
            "filters say {algebraic}, dual frame says {dual}"
        )));
    }
    Ok(algebraic)
}

/// First pair `(x, y)` with `op x ∨ op y = ⊤` but neither equal to `⊤`,
/// where `op` is `∀` on MHAs and `■` on MS4-algebras.
pub fn lemma_property_violation<A: FiniteAlgebra>(a: &A) -> Option<(usize, usize)> {
    let n = a.size();
    let top = a.top();
    for x in 0..n {
        for y in 0..n {
            if x != top && y != top && a.join(a.filter_operator(x), a.filter_operator(y)) == top {
                return Some((x, y));
            }
        }
    }
    None
}
