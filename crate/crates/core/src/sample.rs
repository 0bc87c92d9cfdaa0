//! Random generators for groups, groupoids, maps, fractions and bibundles.
//!
//! Everything is driven by a caller-supplied `Rng`, so seeded runs are
//! reproducible. Generated groupoids are shuffled so arrow ids carry no
//! structure.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bundle::{fraction_to_bibundle, Bibundle};
use crate::enumerate::{components, fill_component, group_homomorphisms, groups_of_order, ENUMERATION_BOUND};
use crate::error::Result;
use crate::fraction::Fraction;
use crate::group::Group;
use crate::groupoid::{
    cover_refinement, disjoint_union, group_groupoid, isotropy, orbits, pair_groupoid, product, relabel,
    restriction, FiniteGroupoid,
};
use crate::morphism::GroupoidMap;
use crate::ObjectId;

/// A group of order at most `max_order` (at least 1).
pub fn random_group(rng: &mut impl Rng, max_order: usize) -> Group {
    let n = rng.gen_range(1..=max_order.max(1));
    if n <= ENUMERATION_BOUND {
        let all = groups_of_order(n).expect("within the enumeration bound");
        return all.choose(rng).expect("every order has a group").clone();
    }
    if n % 2 == 0 && rng.gen_bool(0.5) {
        Group::dihedral(n / 2)
    } else {
        Group::cyclic(n)
    }
}

/// A transitive-by-pieces action of `group`: a disjoint union of coset
/// actions `G/H`, with `H` generated by random elements.
pub fn random_action(rng: &mut impl Rng, group: &Group, max_points: usize) -> Vec<Vec<usize>> {
    let mut orbits: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut points = 0;
    loop {
        let k = rng.gen_range(0..=2);
        let gens: Vec<usize> = (0..k).map(|_| rng.gen_range(0..group.order())).collect();
        let h = group.generated_by(&gens);
        let size = group.order() / h.iter().filter(|&&b| b).count();
        if points + size > max_points {
            break;
        }
        // coset label of each element: smallest representative of gH
        let mut label = vec![usize::MAX; group.order()];
        let mut reps = Vec::new();
        for g in 0..group.order() {
            if label[g] == usize::MAX {
                let id = reps.len();
                reps.push(g);
                for (e, &in_h) in h.iter().enumerate() {
                    if in_h {
                        label[group.mul(g, e)] = id;
                    }
                }
            }
        }
        let act = (0..group.order())
            .map(|a| reps.iter().map(|&r| label[group.mul(a, r)] + points).collect())
            .collect();
        orbits.push(act);
        points += size;
        if rng.gen_bool(0.4) {
            break;
        }
    }
    (0..group.order())
        .map(|a| orbits.iter().flat_map(|o| o[a].iter().copied()).collect())
        .collect()
}

/// A groupoid with at most `max_arrows` arrows, built as a disjoint union of
/// components `P(n) × K` and then shuffled.
pub fn random_groupoid(rng: &mut impl Rng, max_arrows: usize) -> FiniteGroupoid {
    let mut parts = Vec::new();
    let mut left = max_arrows;
    while left > 0 {
        let k = random_group(rng, left.min(2 * ENUMERATION_BOUND));
        let max_n = (1..).take_while(|n| n * n * k.order() <= left).last().unwrap_or(0);
        if max_n == 0 {
            if parts.is_empty() {
                continue;
            }
            break;
        }
        let n = rng.gen_range(1..=max_n);
        let c = product(&pair_groupoid(n), &group_groupoid(&k));
        left -= c.n_arrows();
        parts.push(c);
        if rng.gen_bool(0.35) {
            break;
        }
    }
    let g = disjoint_union(&parts);
    shuffled(rng, &g)
}

fn shuffled(rng: &mut impl Rng, g: &FiniteGroupoid) -> FiniteGroupoid {
    let (ob, ar) = random_perms(rng, g);
    relabel(g, &ob, &ar)
}

fn random_perms(rng: &mut impl Rng, g: &FiniteGroupoid) -> (Vec<ObjectId>, Vec<usize>) {
    let mut ob: Vec<ObjectId> = g.objects().collect();
    let mut ar: Vec<usize> = g.arrows().collect();
    ob.shuffle(rng);
    ar.shuffle(rng);
    (ob, ar)
}

/// A shuffled copy of `g` with its isomorphism onto `g`.
pub fn random_relabelling(rng: &mut impl Rng, g: &Arc<FiniteGroupoid>) -> GroupoidMap {
    let (ob, ar) = random_perms(rng, g);
    let copy = Arc::new(relabel(g, &ob, &ar));
    let mut on_objects = vec![0; g.n_objects()];
    for (old, &new) in ob.iter().enumerate() {
        on_objects[new] = old;
    }
    let mut on_arrows = vec![0; g.n_arrows()];
    for (old, &new) in ar.iter().enumerate() {
        on_arrows[new] = old;
    }
    GroupoidMap::new(copy, g.clone(), on_objects, on_arrows).expect("relabelling is a functor")
}

/// A uniformly chosen functor per component data: target base object,
/// isotropy homomorphism and tree-arrow images. `None` when `h` has objects
/// and `g` has none.
pub fn random_map(rng: &mut impl Rng, h: &Arc<FiniteGroupoid>, g: &Arc<FiniteGroupoid>) -> Option<GroupoidMap> {
    if h.n_objects() > 0 && g.n_objects() == 0 {
        return None;
    }
    let mut on_objects = vec![0; h.n_objects()];
    let mut on_arrows = vec![0; h.n_arrows()];
    for c in components(h) {
        let y = rng.gen_range(0..g.n_objects());
        let target_iso = isotropy(g, y).expect("object");
        let homs = group_homomorphisms(&c.iso_group, &target_iso.group);
        let phi = homs.choose(rng).expect("the trivial homomorphism exists");
        let out = g.arrows_from(y);
        let images: Vec<usize> = c
            .members
            .iter()
            .map(|&x| if x == c.base { g.unit(y) } else { *out.choose(rng).expect("unit") })
            .collect();
        let mut iso_pos = vec![usize::MAX; h.n_arrows()];
        for (i, &a) in c.iso_arrows.iter().enumerate() {
            iso_pos[a] = i;
        }
        fill_component(h, g, &c, &iso_pos, &target_iso, phi, &images, &mut on_objects, &mut on_arrows);
    }
    Some(GroupoidMap::new(h.clone(), g.clone(), on_objects, on_arrows).expect("assembled functor"))
}

/// A weak equivalence into `g`: restriction to a random subset meeting
/// every orbit, refined over a random cover, then shuffled.
pub fn random_weak_equivalence(rng: &mut impl Rng, g: &Arc<FiniteGroupoid>) -> GroupoidMap {
    let mut keep = vec![false; g.n_objects()];
    for orbit in orbits(g) {
        keep[*orbit.choose(rng).expect("orbits are nonempty")] = true;
        for &x in &orbit {
            if rng.gen_bool(0.5) {
                keep[x] = true;
            }
        }
    }
    let subset: Vec<ObjectId> = g.objects().filter(|&x| keep[x]).collect();
    let r = restriction(g, &subset).expect("subset of the objects");
    let n = r.groupoid.n_objects();
    let n_charts = rng.gen_range(1..=3);
    let mut cover = vec![Vec::new(); n_charts];
    for x in 0..n {
        cover[rng.gen_range(0..n_charts)].push(x);
        if rng.gen_bool(0.25) {
            cover[rng.gen_range(0..n_charts)].push(x);
        }
    }
    cover.retain(|c| !c.is_empty());
    if cover.is_empty() {
        cover.push(Vec::new());
    }
    let cr = cover_refinement(&r.groupoid, &cover).expect("covers every object");
    let shuffle = random_relabelling(rng, &cr.groupoid);
    r.inclusion
        .compose(&cr.refinement)
        .and_then(|m| m.compose(&shuffle))
        .expect("composable by construction")
}

/// A fraction `g ⇜ H → target` with a random weak equivalence on the left
/// and a random map on the right.
pub fn random_fraction(rng: &mut impl Rng, g: &Arc<FiniteGroupoid>, target: &Arc<FiniteGroupoid>) -> Option<Fraction> {
    let left = random_weak_equivalence(rng, g);
    let right = random_map(rng, left.domain(), target)?;
    Some(Fraction::new(left, right).expect("left leg is a weak equivalence"))
}

/// A right-principal bibundle `g ↷ P ↶ target`, presented by a random
/// fraction.
pub fn random_bibundle(rng: &mut impl Rng, g: &Arc<FiniteGroupoid>, target: &Arc<FiniteGroupoid>) -> Option<Result<Bibundle>> {
    let fr = random_fraction(rng, g, target)?;
    Some(fraction_to_bibundle(&fr).map(|fb| fb.bibundle))
}
