//! Fully faithful, essentially surjective and weak-equivalence predicates,
//! the orbit/isotropy characterisation, skeletons and quasi-inverses.

use std::collections::HashSet;
use std::sync::Arc;

use super::{GroupoidMap, NatIso};
use crate::error::{Error, Result};
use crate::groupoid::{orbit_labels, orbit_representatives, restriction, FiniteGroupoid};

/// `f` restricts to a bijection `G(y, x) → G'(f y, f x)` for every pair.
pub fn is_fully_faithful(f: &GroupoidMap) -> bool {
    let d = f.domain();
    let c = f.codomain();
    let dom_sizes = d.hom_sizes();
    let cod_sizes = c.hom_sizes();
    for y in d.objects() {
        for x in d.objects() {
            if dom_sizes[y][x] != cod_sizes[f.object(y)][f.object(x)] {
                return false;
            }
        }
    }
    for x in d.objects() {
        let mut images = HashSet::new();
        for &a in d.arrows_from(x) {
            if !images.insert((d.tgt(a), f.arrow(a))) {
                return false;
            }
        }
    }
    true
}

/// Every object of the codomain receives an arrow from the image of `f`.
///
/// Over finite sets the submersion half of the usual condition is vacuous,
/// so this is plain surjectivity of `(g, x) ↦ t(g)` on `G' ×_{M'} M`.
pub fn is_essentially_surjective(f: &GroupoidMap) -> bool {
    let c = f.codomain();
    let labels = orbit_labels(c);
    let n_orbits = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
    let mut hit = vec![false; n_orbits];
    for &y in f.on_objects() {
        hit[labels[y]] = true;
    }
    hit.into_iter().all(|h| h)
}

pub fn is_weak_equivalence(f: &GroupoidMap) -> bool {
    is_fully_faithful(f) && is_essentially_surjective(f)
}

/// Fully faithful and surjective on objects.
pub fn is_surjective_equivalence(f: &GroupoidMap) -> bool {
    let mut hit = vec![false; f.codomain().n_objects()];
    for &y in f.on_objects() {
        hit[y] = true;
    }
    hit.into_iter().all(|h| h) && is_fully_faithful(f)
}

/// The orbit/isotropy characterisation of weak equivalences: the induced
/// map of orbit sets is a bijection and every induced isotropy map
/// `G_x → G'_{f x}` is a group isomorphism.
///
/// Normal representations are zero-dimensional for finite groupoids, so
/// they impose no further condition. Computed independently of
/// [`is_weak_equivalence`] and expected to agree with it on every map.
pub fn charequi_check(f: &GroupoidMap) -> bool {
    let d = f.domain();
    let c = f.codomain();
    let dl = orbit_labels(d);
    let cl = orbit_labels(c);
    let n_cod_orbits = cl.iter().map(|&l| l + 1).max().unwrap_or(0);
    let n_dom_orbits = dl.iter().map(|&l| l + 1).max().unwrap_or(0);
    let mut orbit_map = vec![usize::MAX; n_dom_orbits];
    for x in d.objects() {
        orbit_map[dl[x]] = cl[f.object(x)];
    }
    let mut hit = vec![false; n_cod_orbits];
    for &o in &orbit_map {
        if std::mem::replace(&mut hit[o], true) {
            return false;
        }
    }
    if hit.iter().any(|h| !h) {
        return false;
    }
    for x in d.objects() {
        let loops = d.hom(x, x);
        let fx = f.object(x);
        if c.hom(fx, fx).len() != loops.len() {
            return false;
        }
        let images: HashSet<_> = loops.iter().map(|&a| f.arrow(a)).collect();
        if images.len() != loops.len() {
            return false;
        }
    }
    true
}

/// One object per orbit (the smallest) and its inclusion.
#[derive(Debug, Clone)]
pub struct Skeleton {
    pub groupoid: Arc<FiniteGroupoid>,
    pub inclusion: GroupoidMap,
}

pub fn skeleton(g: &Arc<FiniteGroupoid>) -> Skeleton {
    let reps = orbit_representatives(g);
    let r = restriction(g, &reps).expect("representatives are objects");
    debug_assert!(is_weak_equivalence(&r.inclusion));
    Skeleton {
        groupoid: r.groupoid,
        inclusion: r.inclusion,
    }
}

/// A quasi-inverse of a weak equivalence `f: H → G`: a map `q: G → H` and
/// a natural isomorphism `id_G ⇒ f ∘ q`.
///
/// Each object `y` is sent to the smallest `x` with an arrow `f(x) → y`,
/// using the smallest such arrow.
pub fn quasi_inverse(f: &GroupoidMap) -> Result<(GroupoidMap, NatIso)> {
    if !is_weak_equivalence(f) {
        return Err(Error::NotWeakEquivalence("map to invert"));
    }
    let h = f.domain();
    let g = f.codomain();
    let mut choice = vec![None; g.n_objects()];
    for x in h.objects() {
        for &a in g.arrows_from(f.object(x)) {
            let slot = &mut choice[g.tgt(a)];
            if slot.is_none() {
                *slot = Some((x, a));
            }
        }
    }
    let choice: Vec<_> = choice
        .into_iter()
        .map(|c| c.expect("essentially surjective"))
        .collect();
    // Arrow k: y -> z goes to the unique h: x_y -> x_z with f(h) = c_z⁻¹ k c_y.
    let mut on_arrows = Vec::with_capacity(g.n_arrows());
    for k in g.arrows() {
        let (xy, cy) = choice[g.src(k)];
        let (xz, cz) = choice[g.tgt(k)];
        let want = g.mul(g.mul(g.inverse(cz), k), cy);
        let hit = h
            .hom(xz, xy)
            .into_iter()
            .find(|&a| f.arrow(a) == want)
            .ok_or_else(|| Error::Internal("fully faithful map missed an arrow".into()))?;
        on_arrows.push(hit);
    }
    let q = GroupoidMap::new_unchecked(
        g.clone(),
        h.clone(),
        choice.iter().map(|c| c.0).collect(),
        on_arrows,
    );
    let fq = f.compose(&q)?;
    // component at y: y -> f(x_y), the inverse of c_y
    let alpha = choice.iter().map(|&(_, c)| g.inverse(c)).collect();
    let eta = NatIso::new_unchecked(GroupoidMap::identity(g), fq, alpha);
    Ok((q, eta))
}
