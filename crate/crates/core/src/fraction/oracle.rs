//! Brute-force span search, kept independent of the orbit/isotropy theory
//! so it can check [`morita_equivalent`](super::morita_equivalent) and
//! [`fraction_equal`](super::fraction_equal).

use std::ops::ControlFlow;
use std::sync::Arc;

use super::Fraction;
use crate::enumerate::{all_maps, for_each_map, groupoids_up_to, ENUMERATION_BOUND};
use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;
use crate::morphism::{find_nat_iso, is_weak_equivalence, same_groupoid, GroupoidMap};

fn check_bound(bound: usize) -> Result<()> {
    if bound > ENUMERATION_BOUND {
        Err(Error::Scale {
            what: "oracle apex arrows",
            size: bound,
            bound: ENUMERATION_BOUND,
        })
    } else {
        Ok(())
    }
}

fn has_weak_equivalence(h: &Arc<FiniteGroupoid>, g: &Arc<FiniteGroupoid>) -> bool {
    for_each_map(h, g, |m| {
        if is_weak_equivalence(&m) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .is_break()
}

/// Whether some apex with at most `bound` arrows admits weak equivalences
/// onto both `g` and `h`. Apexes are tried in canonical order.
pub fn span_search_oracle(g: &Arc<FiniteGroupoid>, h: &Arc<FiniteGroupoid>, bound: usize) -> Result<bool> {
    check_bound(bound)?;
    for apex in groupoids_up_to(bound)? {
        let apex = Arc::new(apex);
        if has_weak_equivalence(&apex, g) && has_weak_equivalence(&apex, h) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether some apex `H3` with at most `bound` arrows and maps
/// `a: H3 → H1`, `b: H3 → H2` satisfy: `φ1∘a` is a weak equivalence,
/// `φ1∘a ≅ φ2∘b` and `ψ1∘a ≅ ψ2∘b`.
pub fn fraction_equal_oracle(fr1: &Fraction, fr2: &Fraction, bound: usize) -> Result<bool> {
    check_bound(bound)?;
    if !same_groupoid(fr1.source(), fr2.source()) || !same_groupoid(fr1.target(), fr2.target()) {
        return Err(Error::EndpointMismatch("fractions have different endpoints".into()));
    }
    for apex in groupoids_up_to(bound)? {
        let apex = Arc::new(apex);
        let firsts: Vec<(GroupoidMap, GroupoidMap)> = all_maps(&apex, fr1.apex())
            .into_iter()
            .filter_map(|a| {
                let la = fr1.left().compose(&a).ok()?;
                is_weak_equivalence(&la).then_some((a, la))
            })
            .collect();
        if firsts.is_empty() {
            continue;
        }
        let seconds: Vec<(GroupoidMap, GroupoidMap)> = all_maps(&apex, fr2.apex())
            .into_iter()
            .map(|b| {
                let lb = fr2.left().compose(&b).expect("composable");
                (b, lb)
            })
            .collect();
        for (a, la) in &firsts {
            let ra = fr1.right().compose(a)?;
            for (b, lb) in &seconds {
                if find_nat_iso(la, lb)?.is_none() {
                    continue;
                }
                let rb = fr2.right().compose(b)?;
                if find_nat_iso(&ra, &rb)?.is_some() {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}
