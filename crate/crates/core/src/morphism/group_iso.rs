//! Brute-force isomorphism test for small groups.

use crate::error::{Error, Result};
use crate::group::Group;

/// Largest group order [`group_isomorphic`] accepts.
pub const GROUP_ISO_BOUND: usize = 48;

/// Decides whether two groups are isomorphic and returns an isomorphism
/// `witness[a] = φ(a)` when they are.
///
/// Cheap invariants (order, abelianness, multiset of element orders) are
/// compared first; then images of a greedy generating set are enumerated
/// among elements of matching order and each choice is extended to a
/// homomorphism by closure, rejecting on the first inconsistency.
pub fn group_isomorphic(a: &Group, b: &Group) -> Result<Option<Vec<usize>>> {
    for g in [a, b] {
        if g.order() > GROUP_ISO_BOUND {
            return Err(Error::Scale {
                what: "group order",
                size: g.order(),
                bound: GROUP_ISO_BOUND,
            });
        }
    }
    if a.order() != b.order() || a.is_abelian() != b.is_abelian() {
        return Ok(None);
    }
    let ord_a: Vec<usize> = (0..a.order()).map(|x| a.element_order(x)).collect();
    let ord_b: Vec<usize> = (0..b.order()).map(|x| b.element_order(x)).collect();
    let (mut sa, mut sb) = (ord_a.clone(), ord_b.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(None);
    }

    // Greedy generating set, largest orders first.
    let mut by_order: Vec<usize> = (0..a.order()).collect();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(ord_a[x]), x));
    let mut gens = Vec::new();
    let mut reached = a.generated_by(&[]);
    for x in by_order {
        if !reached[x] {
            gens.push(x);
            reached = a.generated_by(&gens);
        }
    }
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..b.order()).filter(|&y| ord_b[y] == ord_a[s]).collect())
        .collect();
    let mut images = vec![0; gens.len()];
    Ok(search(a, b, &gens, &candidates, &mut images, 0))
}

fn search(
    a: &Group,
    b: &Group,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
) -> Option<Vec<usize>> {
    // Prune partial assignments that already fail to extend.
    let phi = extend(a, b, &gens[..depth], &images[..depth])?;
    if depth == gens.len() {
        return phi.into_iter().collect();
    }
    for &y in &candidates[depth] {
        images[depth] = y;
        if let Some(found) = search(a, b, gens, candidates, images, depth + 1) {
            return Some(found);
        }
    }
    None
}

/// Extends generator images to an injective homomorphism on the generated
/// subgroup, or `None` when that is impossible.
fn extend(a: &Group, b: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<Option<usize>>> {
    let mut phi = vec![None; a.order()];
    let mut used = vec![false; b.order()];
    phi[a.identity()] = Some(b.identity());
    used[b.identity()] = true;
    let mut stack = vec![a.identity()];
    while let Some(x) = stack.pop() {
        let fx = phi[x].unwrap();
        for (&s, &fs) in gens.iter().zip(images) {
            let y = a.mul(x, s);
            let fy = b.mul(fx, fs);
            match phi[y] {
                Some(v) if v != fy => return None,
                Some(_) => {}
                None => {
                    if std::mem::replace(&mut used[fy], true) {
                        return None;
                    }
                    phi[y] = Some(fy);
                    stack.push(y);
                }
            }
        }
    }
    Some(phi)
}
