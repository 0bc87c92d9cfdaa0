//! Canonical relabeling of finite groupoids.
//!
//! A connected groupoid with `n` objects and isotropy `K` is isomorphic to
//! `P(n) × K`, so a component is labelled through its smallest object: every
//! arrow `y ← x` is written `t_y ∘ k ∘ t_x⁻¹` with fixed transports `t` out
//! of the base, and only `K` needs a canonical labeling. Components are then
//! sorted by their labelled tables.
//!
//! Groups are labelled through their generating tuples of minimal length,
//! see [`group_labels`]. Two groupoids are isomorphic iff their canonical
//! forms are equal.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::groupoid::{group_groupoid, isotropy, orbits, relabel, FiniteGroupoid, GroupoidTables};
use crate::{ArrowId, ObjectId};

/// Largest number of generating tuples tried for one isotropy group.
pub const CANONICAL_SEARCH_BOUND: u128 = 2_000_000;

#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub groupoid: FiniteGroupoid,
    /// Old object id to new.
    pub objects: Vec<ObjectId>,
    /// Old arrow id to new.
    pub arrows: Vec<ArrowId>,
}

pub fn canonical_form(g: &FiniteGroupoid) -> Result<CanonicalForm> {
    struct Part {
        key: (usize, GroupoidTables),
        members: Vec<ObjectId>,
        transports: Vec<ArrowId>,
        // isotropy element index of each loop at the base
        element: HashMap<ArrowId, usize>,
        // element index to canonical label
        label: Vec<usize>,
    }
    let mut parts = Vec::new();
    for members in orbits(g) {
        let base = members[0];
        let iso = isotropy(g, base)?;
        let label = group_labels(&iso.group)?;
        let kg = group_groupoid(&iso.group);
        let k = relabel(&kg, &[0], &label);
        let transports = members.iter().map(|&x| g.hom(x, base)[0]).collect();
        parts.push(Part {
            key: (members.len(), k.to_tables()),
            element: iso.arrows.iter().enumerate().map(|(i, &a)| (a, i)).collect(),
            label,
            members,
            transports,
        });
    }
    parts.sort_by(|a, b| a.key.cmp(&b.key));

    let mut objects = vec![0; g.n_objects()];
    let mut arrows = vec![0; g.n_arrows()];
    let (mut obj_off, mut arr_off) = (0, 0);
    for p in &parts {
        let n = p.members.len();
        let order = p.label.len();
        for (i, &x) in p.members.iter().enumerate() {
            objects[x] = obj_off + i;
        }
        for (ix, &x) in p.members.iter().enumerate() {
            for &a in g.arrows_from(x) {
                let iy = p.members.binary_search(&g.tgt(a)).expect("same component");
                let k = g.mul(g.mul(g.inverse(p.transports[iy]), a), p.transports[ix]);
                arrows[a] = arr_off + (iy * n + ix) * order + p.label[p.element[&k]];
            }
        }
        obj_off += n;
        arr_off += n * n * order;
    }
    Ok(CanonicalForm {
        groupoid: relabel(g, &objects, &arrows),
        objects,
        arrows,
    })
}

pub fn are_isomorphic(a: &FiniteGroupoid, b: &FiniteGroupoid) -> Result<bool> {
    if a.n_objects() != b.n_objects() || a.n_arrows() != b.n_arrows() {
        return Ok(false);
    }
    Ok(canonical_form(a)?.groupoid == canonical_form(b)?.groupoid)
}

/// Canonical labels of the elements of a group: over every ordered
/// generating tuple of minimal length, elements are numbered in
/// breadth-first order of words in the generators, and the numbering whose
/// multiplication table is lexicographically smallest wins.
fn group_labels(k: &Group) -> Result<Vec<usize>> {
    let n = k.order();
    let mut r = 0;
    loop {
        let candidates = (n as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
        if candidates > CANONICAL_SEARCH_BOUND {
            return Err(Error::Scale {
                what: "canonical labelings",
                size: usize::try_from(candidates).unwrap_or(usize::MAX),
                bound: CANONICAL_SEARCH_BOUND as usize,
            });
        }
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        let mut tuple = vec![0usize; r];
        loop {
            if let Some(label) = bfs_labels(k, &tuple) {
                let mut elem = vec![0; n];
                for (e, &l) in label.iter().enumerate() {
                    elem[l] = e;
                }
                let code: Vec<usize> = (0..n * n).map(|i| label[k.mul(elem[i / n], elem[i % n])]).collect();
                if best.as_ref().map_or(true, |b| code < b.0) {
                    best = Some((code, label));
                }
            }
            let Some(i) = tuple.iter().position(|&t| t + 1 < n) else {
                break;
            };
            tuple[i] += 1;
            for t in &mut tuple[..i] {
                *t = 0;
            }
        }
        if let Some((_, label)) = best {
            return Ok(label);
        }
        r += 1;
    }
}

/// Breadth-first numbering from the identity by right multiplication with
/// `gens`; `None` unless they generate.
fn bfs_labels(k: &Group, gens: &[usize]) -> Option<Vec<usize>> {
    let n = k.order();
    let mut label = vec![usize::MAX; n];
    let mut order = vec![k.identity()];
    label[k.identity()] = 0;
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for &g in gens {
            let y = k.mul(x, g);
            if label[y] == usize::MAX {
                label[y] = order.len();
                order.push(y);
            }
        }
        i += 1;
    }
    (order.len() == n).then_some(label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{disjoint_union, group_groupoid, pair_groupoid, product, unit_groupoid, Group};

    fn shuffle(g: &FiniteGroupoid, seed: usize) -> FiniteGroupoid {
        let rot = |n: usize| -> Vec<usize> {
            if n == 0 {
                return Vec::new();
            }
            // a fixed-point-free-ish permutation from the seed
            let step = (1..=n).find(|s| gcd(*s + seed, n) == 1).unwrap() + seed;
            (0..n).map(|i| (i * step + seed) % n).collect()
        };
        relabel(g, &rot(g.n_objects()), &rot(g.n_arrows()))
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    #[test]
    fn relabelled_copies_share_a_canonical_form() {
        let cases = [
            pair_groupoid(3),
            group_groupoid(&Group::symmetric(3)),
            product(&pair_groupoid(2), &group_groupoid(&Group::cyclic(2))),
            disjoint_union(&[group_groupoid(&Group::cyclic(3)), pair_groupoid(2), unit_groupoid(1)]),
            group_groupoid(&Group::cyclic(2).product(&Group::cyclic(2)).product(&Group::cyclic(2))),
        ];
        for g in &cases {
            let c = canonical_form(g).unwrap();
            c.groupoid.check_laws().unwrap();
            for seed in 0..4 {
                let h = shuffle(g, seed);
                h.check_laws().unwrap();
                assert_eq!(canonical_form(&h).unwrap().groupoid, c.groupoid);
            }
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let z4 = group_groupoid(&Group::cyclic(4));
        let v4 = group_groupoid(&Group::cyclic(2).product(&Group::cyclic(2)));
        assert!(!are_isomorphic(&z4, &v4).unwrap());
        let d4 = group_groupoid(&Group::dihedral(4));
        let q = group_groupoid(&Group::cyclic(4).product(&Group::cyclic(2)));
        assert!(!are_isomorphic(&d4, &q).unwrap());
        assert!(are_isomorphic(
            &group_groupoid(&Group::symmetric(3)),
            &group_groupoid(&Group::dihedral(3))
        )
        .unwrap());
    }

    #[test]
    fn relabel_maps_are_consistent() {
        let g = disjoint_union(&[pair_groupoid(2), group_groupoid(&Group::cyclic(2))]);
        let c = canonical_form(&g).unwrap();
        for a in g.arrows() {
            assert_eq!(c.groupoid.src(c.arrows[a]), c.objects[g.src(a)]);
            assert_eq!(c.groupoid.tgt(c.arrows[a]), c.objects[g.tgt(a)]);
        }
    }

    #[test]
    fn empty_groupoid() {
        let c = canonical_form(&unit_groupoid(0)).unwrap();
        assert_eq!(c.groupoid.n_arrows(), 0);
    }
}
