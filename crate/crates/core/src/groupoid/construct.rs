//! The standard constructions. Every output lists its objects and arrows
//! in lexicographic order of their defining data.

use std::collections::HashMap;
use std::sync::Arc;

use super::FiniteGroupoid;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::morphism::{GroupoidMap, NatIso};
use crate::{ArrowId, ObjectId};

/// `n` objects and only unit arrows.
pub fn unit_groupoid(n: usize) -> FiniteGroupoid {
    let ids: Vec<usize> = (0..n).collect();
    FiniteGroupoid::tabulate(n, ids.clone(), ids.clone(), ids.clone(), ids, |g2, _| g2)
}

/// Exactly one arrow `y ← x` for every pair; it has id `y * n + x`.
pub fn pair_groupoid(n: usize) -> FiniteGroupoid {
    let src = (0..n * n).map(|a| a % n).collect();
    let tgt = (0..n * n).map(|a| a / n).collect();
    let units = (0..n).map(|x| x * n + x).collect();
    let inv = (0..n * n).map(|a| (a % n) * n + a / n).collect();
    FiniteGroupoid::tabulate(n, src, tgt, units, inv, |g2, g1| (g2 / n) * n + g1 % n)
}

/// A group as a groupoid with a single object.
pub fn group_groupoid(group: &Group) -> FiniteGroupoid {
    let n = group.order();
    FiniteGroupoid::tabulate(
        1,
        vec![0; n],
        vec![0; n],
        vec![group.identity()],
        (0..n).map(|a| group.inverse(a)).collect(),
        |g2, g1| group.mul(g2, g1),
    )
}

/// The action groupoid of `action[g][x] = g·x`: arrow `(g, x)` has id
/// `g * n_points + x`, source `x` and target `g·x`.
pub fn action_groupoid(group: &Group, action: &[Vec<usize>]) -> Result<FiniteGroupoid> {
    let np = group.check_action(action)?;
    let n = group.order() * np;
    let src = (0..n).map(|a| a % np).collect();
    let tgt = (0..n).map(|a| action[a / np][a % np]).collect();
    let units = (0..np).map(|x| group.identity() * np + x).collect();
    let inv = (0..n)
        .map(|a| group.inverse(a / np) * np + action[a / np][a % np])
        .collect();
    Ok(FiniteGroupoid::tabulate(np, src, tgt, units, inv, |g2, g1| {
        group.mul(g2 / np, g1 / np) * np + g1 % np
    }))
}

/// Pairs `(y, x)` in the same fiber of `f`, as arrows `y ← x`.
pub fn kernel_pair_groupoid(f: &[usize]) -> FiniteGroupoid {
    let m = f.len();
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    for y in 0..m {
        for x in 0..m {
            if f[y] == f[x] {
                index.insert((y, x), pairs.len());
                pairs.push((y, x));
            }
        }
    }
    let src = pairs.iter().map(|p| p.1).collect();
    let tgt = pairs.iter().map(|p| p.0).collect();
    let units = (0..m).map(|x| index[&(x, x)]).collect();
    let inv = pairs.iter().map(|&(y, x)| index[&(x, y)]).collect();
    FiniteGroupoid::tabulate(m, src, tgt, units, inv, |g2, g1| {
        index[&(pairs[g2].0, pairs[g1].1)]
    })
}

/// Čech groupoid of a cover of `0..n_points`: objects are the pairs
/// `(chart, point)`, ordered by chart then point, and arrows are the
/// kernel pair of the tautological surjection onto the points.
pub fn cech_groupoid(n_points: usize, cover: &[Vec<usize>]) -> Result<FiniteGroupoid> {
    let charts = chart_objects(n_points, cover)?;
    let f: Vec<usize> = charts.iter().map(|&(_, x)| x).collect();
    Ok(kernel_pair_groupoid(&f))
}

fn chart_objects(n_points: usize, cover: &[Vec<usize>]) -> Result<Vec<(usize, usize)>> {
    let mut covered = vec![false; n_points];
    let mut objects = Vec::new();
    for (i, chart) in cover.iter().enumerate() {
        let mut members = chart.clone();
        members.sort_unstable();
        members.dedup();
        for &x in &members {
            if x >= n_points {
                return Err(Error::OutOfRange {
                    context: "cover element",
                    id: x,
                    bound: n_points,
                });
            }
            covered[x] = true;
            objects.push((i, x));
        }
    }
    if let Some(x) = covered.iter().position(|c| !c) {
        return Err(Error::NotACover(x));
    }
    Ok(objects)
}

/// `G_U ⇉ M_U` for a cover `U` of the objects of `G`, with its refinement
/// map onto `G`.
#[derive(Debug, Clone)]
pub struct CoverRefinement {
    pub cover: Vec<Vec<ObjectId>>,
    /// `(chart, object)` for every object of the refined groupoid.
    pub charts: Vec<(usize, ObjectId)>,
    pub groupoid: Arc<FiniteGroupoid>,
    /// The surjective equivalence `G_U → G`.
    pub refinement: GroupoidMap,
}

/// Refines `g` over a cover of its objects. Arrows `(i, y) ← (j, x)` are the
/// arrows `y ← x` of `g`, ordered by target, source, then arrow.
pub fn cover_refinement(g: &Arc<FiniteGroupoid>, cover: &[Vec<ObjectId>]) -> Result<CoverRefinement> {
    let charts = chart_objects(g.n_objects(), cover)?;
    let by_object: Vec<ObjectId> = charts.iter().map(|&(_, x)| x).collect();
    let mut arrows = Vec::new();
    let mut index = HashMap::new();
    for (ti, &(_, y)) in charts.iter().enumerate() {
        for (si, &(_, x)) in charts.iter().enumerate() {
            for a in g.hom(y, x) {
                index.insert((ti, si, a), arrows.len());
                arrows.push((ti, si, a));
            }
        }
    }
    let src = arrows.iter().map(|r| r.1).collect();
    let tgt = arrows.iter().map(|r| r.0).collect();
    let units = (0..charts.len())
        .map(|o| index[&(o, o, g.unit(by_object[o]))])
        .collect();
    let inv = arrows
        .iter()
        .map(|&(t, s, a)| index[&(s, t, g.inverse(a))])
        .collect();
    let refined = Arc::new(FiniteGroupoid::tabulate(
        charts.len(),
        src,
        tgt,
        units,
        inv,
        |g2, g1| {
            let (t, _, a2) = arrows[g2];
            let (_, s, a1) = arrows[g1];
            index[&(t, s, g.mul(a2, a1))]
        },
    ));
    let refinement = GroupoidMap::new_unchecked(
        refined.clone(),
        g.clone(),
        by_object,
        arrows.iter().map(|r| r.2).collect(),
    );
    Ok(CoverRefinement {
        cover: cover
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect(),
        charts,
        groupoid: refined,
        refinement,
    })
}

/// The gauge groupoid `(P × P)/G` of a free action of a group on a set.
/// Objects are the orbits, ordered by their smallest point.
pub fn gauge_groupoid(group: &Group, action: &[Vec<usize>]) -> Result<FiniteGroupoid> {
    let np = group.check_action(action)?;
    let g = Arc::new(group_groupoid(group));
    let mut table = Vec::new();
    for (a, row) in action.iter().enumerate() {
        for (p, &q) in row.iter().enumerate() {
            table.push([a, p, q]);
        }
    }
    let act = crate::bundle::GroupoidAction::new(
        g,
        crate::bundle::Side::Left,
        vec![0; np],
        &table,
    )?;
    Ok(crate::bundle::gauge_groupoid_of_action(&act)?.groupoid.as_ref().clone())
}

/// `G^I` with its structure maps to and from `G`.
#[derive(Debug, Clone)]
pub struct ArrowGroupoid {
    pub groupoid: Arc<FiniteGroupoid>,
    /// Arrow `i` of `G^I` is the chain `(a, b, c)` of arrows of `G`,
    /// `x -c-> x' -b-> y -a-> y'`, from object `b∘c` to object `a∘b`.
    pub squares: Vec<(ArrowId, ArrowId, ArrowId)>,
    pub source: GroupoidMap,
    pub target: GroupoidMap,
    pub unit: GroupoidMap,
    /// `source ≅ target`, with component `g` at the object `g`.
    pub tautological: NatIso,
}

/// The groupoid of arrows: objects are the arrows of `g`, arrows are
/// commutative squares, i.e. chains of three composable arrows.
pub fn arrow_groupoid(g: &Arc<FiniteGroupoid>) -> ArrowGroupoid {
    // squares are listed by a, then b, then c, so a square's position is
    // an offset for a, one for b within the arrows into src(a), and the
    // rank of c among the arrows into src(b)
    let mut rank = vec![0; g.n_arrows()];
    let mut into = vec![0; g.n_objects()];
    for k in g.arrows() {
        rank[k] = into[g.tgt(k)];
        into[g.tgt(k)] += 1;
    }
    let mut b_offset = vec![0; g.n_arrows()];
    let mut block = vec![0; g.n_objects()];
    for b in g.arrows() {
        b_offset[b] = block[g.tgt(b)];
        block[g.tgt(b)] += into[g.src(b)];
    }
    let mut a_offset = Vec::with_capacity(g.n_arrows());
    let mut squares = Vec::new();
    for a in g.arrows() {
        a_offset.push(squares.len());
        let y = g.src(a);
        for b in g.arrows().filter(|&b| g.tgt(b) == y) {
            for c in g.arrows().filter(|&c| g.tgt(c) == g.src(b)) {
                squares.push((a, b, c));
            }
        }
    }
    let index = |(a, b, c): (ArrowId, ArrowId, ArrowId)| a_offset[a] + b_offset[b] + rank[c];
    let src = squares.iter().map(|&(_, b, c)| g.mul(b, c)).collect();
    let tgt = squares.iter().map(|&(a, b, _)| g.mul(a, b)).collect();
    let units = g
        .arrows()
        .map(|k| index((g.unit(g.tgt(k)), k, g.unit(g.src(k)))))
        .collect();
    let inv = squares
        .iter()
        .map(|&(a, b, c)| index((g.inverse(a), g.mul(g.mul(a, b), c), g.inverse(c))))
        .collect();
    let gi = Arc::new(FiniteGroupoid::tabulate(
        g.n_arrows(),
        src,
        tgt,
        units,
        inv,
        |s2, s1| {
            let (a2, _, c2) = squares[s2];
            let (a1, b1, c1) = squares[s1];
            index((g.mul(a2, a1), g.mul(b1, g.inverse(c2)), g.mul(c2, c1)))
        },
    ));
    let source = GroupoidMap::new_unchecked(
        gi.clone(),
        g.clone(),
        g.arrows().map(|k| g.src(k)).collect(),
        squares.iter().map(|s| s.2).collect(),
    );
    let target = GroupoidMap::new_unchecked(
        gi.clone(),
        g.clone(),
        g.arrows().map(|k| g.tgt(k)).collect(),
        squares.iter().map(|s| s.0).collect(),
    );
    let unit = GroupoidMap::new_unchecked(
        g.clone(),
        gi.clone(),
        g.objects().map(|x| g.unit(x)).collect(),
        g.arrows()
            .map(|k| index((k, g.inverse(k), k)))
            .collect(),
    );
    let tautological = NatIso::new_unchecked(source.clone(), target.clone(), g.arrows().collect());
    ArrowGroupoid {
        groupoid: gi,
        squares,
        source,
        target,
        unit,
        tautological,
    }
}

/// The full subgroupoid on a set of objects, with its inclusion.
#[derive(Debug, Clone)]
pub struct Restriction {
    pub groupoid: Arc<FiniteGroupoid>,
    /// Original ids of the kept objects, ascending.
    pub objects: Vec<ObjectId>,
    /// Original ids of the kept arrows, ascending.
    pub arrows: Vec<ArrowId>,
    pub inclusion: GroupoidMap,
}

/// `G_A`: objects `A`, arrows with both ends in `A`.
pub fn restriction(g: &Arc<FiniteGroupoid>, subset: &[ObjectId]) -> Result<Restriction> {
    let mut objects = subset.to_vec();
    objects.sort_unstable();
    objects.dedup();
    for &x in &objects {
        g.check_object(x)?;
    }
    let mut new_obj = vec![usize::MAX; g.n_objects()];
    for (i, &x) in objects.iter().enumerate() {
        new_obj[x] = i;
    }
    let arrows: Vec<ArrowId> = g
        .arrows()
        .filter(|&a| new_obj[g.src(a)] != usize::MAX && new_obj[g.tgt(a)] != usize::MAX)
        .collect();
    let mut new_arrow = vec![usize::MAX; g.n_arrows()];
    for (i, &a) in arrows.iter().enumerate() {
        new_arrow[a] = i;
    }
    let sub = Arc::new(FiniteGroupoid::tabulate(
        objects.len(),
        arrows.iter().map(|&a| new_obj[g.src(a)]).collect(),
        arrows.iter().map(|&a| new_obj[g.tgt(a)]).collect(),
        objects.iter().map(|&x| new_arrow[g.unit(x)]).collect(),
        arrows.iter().map(|&a| new_arrow[g.inverse(a)]).collect(),
        |g2, g1| new_arrow[g.mul(arrows[g2], arrows[g1])],
    ));
    let inclusion = GroupoidMap::new_unchecked(sub.clone(), g.clone(), objects.clone(), arrows.clone());
    Ok(Restriction {
        groupoid: sub,
        objects,
        arrows,
        inclusion,
    })
}

/// Product groupoid; object `(x1, x2)` is `x1 * n2 + x2`, arrow `(g1, g2)`
/// is `g1 * m2 + g2`.
pub fn product(g1: &FiniteGroupoid, g2: &FiniteGroupoid) -> FiniteGroupoid {
    let (n2, m2) = (g2.n_objects(), g2.n_arrows());
    let m = g1.n_arrows() * m2;
    FiniteGroupoid::tabulate(
        g1.n_objects() * n2,
        (0..m).map(|a| g1.src(a / m2) * n2 + g2.src(a % m2)).collect(),
        (0..m).map(|a| g1.tgt(a / m2) * n2 + g2.tgt(a % m2)).collect(),
        (0..g1.n_objects() * n2)
            .map(|x| g1.unit(x / n2) * m2 + g2.unit(x % n2))
            .collect(),
        (0..m)
            .map(|a| g1.inverse(a / m2) * m2 + g2.inverse(a % m2))
            .collect(),
        |b, a| g1.mul(b / m2, a / m2) * m2 + g2.mul(b % m2, a % m2),
    )
}

/// Disjoint union; ids of later summands are shifted past earlier ones.
pub fn disjoint_union(parts: &[FiniteGroupoid]) -> FiniteGroupoid {
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    let mut units = Vec::new();
    let mut inv = Vec::new();
    let mut owner = Vec::new();
    let (mut obj_off, mut arr_off) = (0, 0);
    let mut offsets = Vec::new();
    for (k, p) in parts.iter().enumerate() {
        offsets.push(arr_off);
        for a in p.arrows() {
            src.push(p.src(a) + obj_off);
            tgt.push(p.tgt(a) + obj_off);
            inv.push(p.inverse(a) + arr_off);
            owner.push(k);
        }
        units.extend(p.objects().map(|x| p.unit(x) + arr_off));
        obj_off += p.n_objects();
        arr_off += p.n_arrows();
    }
    FiniteGroupoid::tabulate(obj_off, src, tgt, units, inv, |g2, g1| {
        let k = owner[g1];
        parts[k].mul(g2 - offsets[k], g1 - offsets[k]) + offsets[k]
    })
}

/// Renames objects and arrows: old id `i` becomes `perm[i]`.
pub fn relabel(g: &FiniteGroupoid, object_perm: &[ObjectId], arrow_perm: &[ArrowId]) -> FiniteGroupoid {
    let n = g.n_arrows();
    let mut back = vec![0; n];
    for (old, &new) in arrow_perm.iter().enumerate() {
        back[new] = old;
    }
    let mut back_obj = vec![0; g.n_objects()];
    for (old, &new) in object_perm.iter().enumerate() {
        back_obj[new] = old;
    }
    FiniteGroupoid::tabulate(
        g.n_objects(),
        (0..n).map(|a| object_perm[g.src(back[a])]).collect(),
        (0..n).map(|a| object_perm[g.tgt(back[a])]).collect(),
        (0..g.n_objects())
            .map(|x| arrow_perm[g.unit(back_obj[x])])
            .collect(),
        (0..n).map(|a| arrow_perm[g.inverse(back[a])]).collect(),
        |g2, g1| arrow_perm[g.mul(back[g2], back[g1])],
    )
}
