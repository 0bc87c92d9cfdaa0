//! Exhaustive enumeration of small groups, groupoids and maps.

use std::ops::ControlFlow;
use std::sync::{Arc, OnceLock};

use crate::canonical::canonical_form;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::groupoid::{disjoint_union, group_groupoid, isotropy, pair_groupoid, product, FiniteGroupoid, Isotropy};
use crate::morphism::GroupoidMap;
use crate::{ArrowId, ObjectId};

/// Largest group order and apex size the enumerators accept.
pub const ENUMERATION_BOUND: usize = 8;

/// One group per isomorphism class of order `n`, found by searching all
/// multiplication tables with identity 0 and keeping the first table of
/// each canonical form.
pub fn groups_of_order(n: usize) -> Result<Vec<Group>> {
    if n == 0 || n > ENUMERATION_BOUND {
        return Err(Error::Scale {
            what: "group order",
            size: n,
            bound: ENUMERATION_BOUND,
        });
    }
    static CACHE: OnceLock<Vec<Vec<Group>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| (1..=ENUMERATION_BOUND).map(search_groups).collect());
    Ok(all[n - 1].clone())
}

fn search_groups(n: usize) -> Vec<Group> {
    const FREE: usize = usize::MAX;
    let mut t = vec![vec![FREE; n]; n];
    for i in 0..n {
        t[0][i] = i;
        t[i][0] = i;
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
    let mut found: Vec<(FiniteGroupoid, Group)> = Vec::new();
    fill(&mut t, &cells, 0, &mut |t| {
        let g = Group::from_fn_unchecked(n, |a, b| t[a][b]);
        let c = canonical_form(&group_groupoid(&g))
            .expect("small groups stay within the canonical bound")
            .groupoid;
        if !found.iter().any(|(k, _)| *k == c) {
            found.push((c, g));
        }
    });
    found.sort_by(|a, b| a.0.to_tables().mul.cmp(&b.0.to_tables().mul));
    found.into_iter().map(|(_, g)| g).collect()
}

fn fill(t: &mut Vec<Vec<usize>>, cells: &[(usize, usize)], i: usize, done: &mut dyn FnMut(&[Vec<usize>])) {
    const FREE: usize = usize::MAX;
    let n = t.len();
    if i == cells.len() {
        done(t);
        return;
    }
    let (a, b) = cells[i];
    for v in 0..n {
        if (0..n).any(|k| t[a][k] == v || t[k][b] == v) {
            continue;
        }
        t[a][b] = v;
        if associative_so_far(t, a, b) {
            fill(t, cells, i + 1, done);
        }
        t[a][b] = FREE;
    }
}

/// Checks every associativity instance involving cell `(a, b)` whose
/// products are all known.
fn associative_so_far(t: &[Vec<usize>], a: usize, b: usize) -> bool {
    const FREE: usize = usize::MAX;
    let n = t.len();
    let get = |x: usize, y: usize| if x == FREE || y == FREE { FREE } else { t[x][y] };
    let v = t[a][b];
    for z in 0..n {
        // (a b) z = a (b z)
        let l = get(v, z);
        let r = get(a, get(b, z));
        if l != FREE && r != FREE && l != r {
            return false;
        }
        // z (a b) = (z a) b
        let l = get(z, v);
        let r = get(get(z, a), b);
        if l != FREE && r != FREE && l != r {
            return false;
        }
    }
    for x in 0..n {
        for y in 0..n {
            // (x y) b with x y = a
            if t[x][y] == a {
                let r = get(x, get(y, b));
                if r != FREE && r != v {
                    return false;
                }
            }
            // a (x y) with x y = b
            if t[x][y] == b {
                let l = get(get(a, x), y);
                if l != FREE && l != v {
                    return false;
                }
            }
        }
    }
    true
}

/// Isomorphism classes of groupoids with at most `max_arrows` arrows,
/// including the empty groupoid, each in canonical form, ordered by arrow
/// count and then by table.
///
/// Every finite groupoid is a disjoint union of components `P(n) × K` for a
/// pair groupoid `P(n)` and a group `K`; the classes are the multisets of
/// such components.
pub fn groupoids_up_to(max_arrows: usize) -> Result<Vec<FiniteGroupoid>> {
    if max_arrows > ENUMERATION_BOUND {
        return Err(Error::Scale {
            what: "enumerated groupoid arrows",
            size: max_arrows,
            bound: ENUMERATION_BOUND,
        });
    }
    static CACHE: OnceLock<Vec<FiniteGroupoid>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        let mut kinds: Vec<(usize, FiniteGroupoid)> = Vec::new();
        for n in 1..=ENUMERATION_BOUND {
            for k in 1..=ENUMERATION_BOUND / (n * n) {
                for grp in groups_of_order(k).expect("within bound") {
                    let c = product(&pair_groupoid(n), &group_groupoid(&grp));
                    kinds.push((c.n_arrows(), c));
                }
            }
        }
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        multisets(&kinds, 0, ENUMERATION_BOUND, &mut chosen, &mut |parts| {
            let g = disjoint_union(parts);
            out.push(canonical_form(&g).expect("small groupoids stay within bound").groupoid);
        });
        out.sort_by(|a, b| {
            (a.n_arrows(), a.n_objects(), a.to_tables()).cmp(&(b.n_arrows(), b.n_objects(), b.to_tables()))
        });
        out
    });
    Ok(all.iter().filter(|g| g.n_arrows() <= max_arrows).cloned().collect())
}

fn multisets(
    kinds: &[(usize, FiniteGroupoid)],
    start: usize,
    budget: usize,
    chosen: &mut Vec<FiniteGroupoid>,
    visit: &mut dyn FnMut(&[FiniteGroupoid]),
) {
    visit(chosen);
    for i in start..kinds.len() {
        if kinds[i].0 <= budget {
            chosen.push(kinds[i].1.clone());
            multisets(kinds, i, budget - kinds[i].0, chosen, visit);
            chosen.pop();
        }
    }
}

/// Every homomorphism `a → b`, as element tables.
pub fn group_homomorphisms(a: &Group, b: &Group) -> Vec<Vec<usize>> {
    let mut gens = Vec::new();
    let mut reached = a.generated_by(&[]);
    for x in 0..a.order() {
        if !reached[x] {
            gens.push(x);
            reached = a.generated_by(&gens);
        }
    }
    let mut out = Vec::new();
    let mut images = vec![0; gens.len()];
    homs(a, b, &gens, &mut images, 0, &mut out);
    out
}

fn homs(a: &Group, b: &Group, gens: &[usize], images: &mut Vec<usize>, depth: usize, out: &mut Vec<Vec<usize>>) {
    if depth == gens.len() {
        if let Some(phi) = extend_hom(a, b, gens, images) {
            out.push(phi);
        }
        return;
    }
    let order = a.element_order(gens[depth]);
    for y in 0..b.order() {
        if order % b.element_order(y) != 0 {
            continue;
        }
        images[depth] = y;
        homs(a, b, gens, images, depth + 1, out);
    }
}

fn extend_hom(a: &Group, b: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut phi = vec![usize::MAX; a.order()];
    phi[a.identity()] = b.identity();
    let mut stack = vec![a.identity()];
    while let Some(x) = stack.pop() {
        for (&s, &fs) in gens.iter().zip(images) {
            let y = a.mul(x, s);
            let fy = b.mul(phi[x], fs);
            if phi[y] == usize::MAX {
                phi[y] = fy;
                stack.push(y);
            } else if phi[y] != fy {
                return None;
            }
        }
    }
    // Closure over generators of a finite group reaches everything and
    // consistency on generator steps makes phi a homomorphism.
    Some(phi)
}

/// Calls `visit` on every map `h → g`, in a fixed order, until it breaks.
///
/// A map is determined on each connected component of `h` by the image of
/// the component's smallest object, a homomorphism out of its isotropy
/// group, and an arbitrary arrow out of that image for every other object
/// of the component.
pub fn for_each_map(
    h: &Arc<FiniteGroupoid>,
    g: &Arc<FiniteGroupoid>,
    mut visit: impl FnMut(GroupoidMap) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let comps = components(h);
    let mut on_objects = vec![0; h.n_objects()];
    let mut on_arrows = vec![0; h.n_arrows()];
    rec_components(h, g, &comps, 0, &mut on_objects, &mut on_arrows, &mut visit)
}

pub fn all_maps(h: &Arc<FiniteGroupoid>, g: &Arc<FiniteGroupoid>) -> Vec<GroupoidMap> {
    let mut out = Vec::new();
    let _ = for_each_map(h, g, |m| {
        out.push(m);
        ControlFlow::Continue(())
    });
    out
}

pub(crate) struct Component {
    pub(crate) base: ObjectId,
    pub(crate) members: Vec<ObjectId>,
    /// `tree[i]`: an arrow base → members[i].
    tree: Vec<ArrowId>,
    pub(crate) iso_arrows: Vec<ArrowId>,
    pub(crate) iso_group: Group,
    arrows: Vec<ArrowId>,
}

pub(crate) fn components(h: &FiniteGroupoid) -> Vec<Component> {
    let mut seen = vec![false; h.n_objects()];
    let mut out = Vec::new();
    for base in h.objects() {
        if seen[base] {
            continue;
        }
        let mut members = Vec::new();
        let mut tree = Vec::new();
        for &a in h.arrows_from(base) {
            let x = h.tgt(a);
            if !seen[x] {
                seen[x] = true;
                members.push(x);
                tree.push(if x == base { h.unit(base) } else { a });
            }
        }
        let mut order: Vec<usize> = (0..members.len()).collect();
        order.sort_by_key(|&i| members[i]);
        let members: Vec<_> = order.iter().map(|&i| members[i]).collect();
        let tree: Vec<_> = order.iter().map(|&i| tree[i]).collect();
        let iso = isotropy(h, base).expect("base is an object");
        let arrows = members.iter().flat_map(|&x| h.arrows_from(x).iter().copied()).collect();
        out.push(Component {
            base,
            members,
            tree,
            iso_arrows: iso.arrows,
            iso_group: iso.group,
            arrows,
        });
    }
    out
}

/// Writes the functor on one component: the base goes to `tgt(images)` of
/// the base slot, isotropy through `phi`, and each member `x` is sent along
/// `images[i]`, the image of the tree arrow base → x.
#[allow(clippy::too_many_arguments)]
pub(crate) fn fill_component(
    h: &FiniteGroupoid,
    g: &FiniteGroupoid,
    c: &Component,
    iso_pos: &[usize],
    target_iso: &Isotropy,
    phi: &[usize],
    images: &[ArrowId],
    on_objects: &mut [ObjectId],
    on_arrows: &mut [ArrowId],
) {
    for (i, &x) in c.members.iter().enumerate() {
        on_objects[x] = g.tgt(images[i]);
    }
    let idx = |x: ObjectId| c.members.binary_search(&x).expect("member");
    for &a in &c.arrows {
        let (sx, tx) = (idx(h.src(a)), idx(h.tgt(a)));
        // a = t_y ∘ k ∘ t_x⁻¹ with k in the base isotropy
        let k = h.mul(h.mul(h.inverse(c.tree[tx]), a), c.tree[sx]);
        let fk = target_iso.arrows[phi[iso_pos[k]]];
        on_arrows[a] = g.mul(g.mul(images[tx], fk), g.inverse(images[sx]));
    }
}

#[allow(clippy::too_many_arguments)]
fn rec_components(
    h: &Arc<FiniteGroupoid>,
    g: &Arc<FiniteGroupoid>,
    comps: &[Component],
    ci: usize,
    on_objects: &mut Vec<ObjectId>,
    on_arrows: &mut Vec<ArrowId>,
    visit: &mut dyn FnMut(GroupoidMap) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if ci == comps.len() {
        let m = GroupoidMap::new_unchecked(h.clone(), g.clone(), on_objects.clone(), on_arrows.clone());
        debug_assert!(m.check().is_ok());
        return visit(m);
    }
    let c = &comps[ci];
    let mut iso_pos = vec![usize::MAX; h.n_arrows()];
    for (i, &a) in c.iso_arrows.iter().enumerate() {
        iso_pos[a] = i;
    }
    for y in g.objects() {
        let target_iso = isotropy(g, y).expect("object");
        let homs = group_homomorphisms(&c.iso_group, &target_iso.group);
        let out_arrows = g.arrows_from(y).to_vec();
        for phi in &homs {
            // choices[i] = image of tree[i], ranging over arrows out of y
            let mut choice = vec![0usize; c.members.len()];
            loop {
                let images: Vec<ArrowId> = c
                    .members
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| if x == c.base { g.unit(y) } else { out_arrows[choice[i]] })
                    .collect();
                fill_component(h, g, c, &iso_pos, &target_iso, phi, &images, on_objects, on_arrows);
                rec_components(h, g, comps, ci + 1, on_objects, on_arrows, visit)?;
                // next choice vector, skipping the base slot
                let mut i = 0;
                loop {
                    if i == choice.len() {
                        break;
                    }
                    if c.members[i] == c.base {
                        i += 1;
                        continue;
                    }
                    choice[i] += 1;
                    if choice[i] < out_arrows.len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == choice.len() {
                    break;
                }
            }
        }
    }
    ControlFlow::Continue(())
}
