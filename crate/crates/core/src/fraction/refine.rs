//! Presenting a fraction over a cover refinement `ψ_U/φ_U`.

use std::sync::Arc;

use super::{homotopy_pullback, Fraction};
use crate::error::{Error, Result};
use crate::groupoid::{cover_refinement, CoverRefinement};
use crate::morphism::{is_surjective_equivalence, GroupoidMap};
use crate::ObjectId;

#[derive(Debug, Clone)]
pub struct Refinement {
    pub cover: Vec<Vec<ObjectId>>,
    pub refined: CoverRefinement,
    /// `G_U → N` into the apex of the rectified fraction.
    pub lift: GroupoidMap,
    /// `G_U → G'`.
    pub map: GroupoidMap,
    /// `map / φ_U`, equal to the input fraction.
    pub fraction: Fraction,
}

/// Replaces the left leg by a surjective equivalence, if it is not one
/// already, by pulling it back along the identity of its codomain.
pub fn rectify(fr: &Fraction) -> Result<Fraction> {
    if is_surjective_equivalence(fr.left()) {
        return Ok(fr.clone());
    }
    let id = GroupoidMap::identity(fr.source());
    let k = homotopy_pullback(fr.left(), &id)?;
    let left = k.to_second.clone();
    let right = fr.right().compose(&k.to_first)?;
    Fraction::new(left, right)
}

/// Refines over the cover whose `k`-th chart holds the objects with more
/// than `k` preimages under the rectified left leg, each chart using the
/// `k`-th smallest preimage as its section.
///
/// Charts pick out every apex object exactly once, so the refined groupoid
/// is isomorphic to the rectified apex through `lift`. The identity
/// fraction yields the trivial cover `{M}`.
pub fn refine_over_cover(fr: &Fraction) -> Result<Refinement> {
    let rect = rectify(fr)?;
    let fibers = fibers(&rect);
    let depth = fibers.iter().map(Vec::len).max().unwrap_or(0);
    let cover: Vec<Vec<ObjectId>> = (0..depth)
        .map(|k| (0..fibers.len()).filter(|&x| fibers[x].len() > k).collect())
        .collect();
    let cover = if cover.is_empty() { vec![Vec::new()] } else { cover };
    build(&rect, &cover, |chart, x| fibers[x][chart])
}

/// Refines over an explicit cover of the source objects, using the
/// smallest preimage of each object as its section on every chart.
pub fn refine_over(fr: &Fraction, cover: &[Vec<ObjectId>]) -> Result<Refinement> {
    let rect = rectify(fr)?;
    let fibers = fibers(&rect);
    build(&rect, cover, |_, x| fibers[x][0])
}

fn fibers(rect: &Fraction) -> Vec<Vec<ObjectId>> {
    let mut fibers = vec![Vec::new(); rect.source().n_objects()];
    for n in rect.apex().objects() {
        fibers[rect.left().object(n)].push(n);
    }
    fibers
}

fn build(
    rect: &Fraction,
    cover: &[Vec<ObjectId>],
    section: impl Fn(usize, ObjectId) -> ObjectId,
) -> Result<Refinement> {
    let phi = rect.left();
    let apex = rect.apex();
    let refined = cover_refinement(rect.source(), cover)?;
    let u = &refined.groupoid;
    let on_objects: Vec<ObjectId> = refined.charts.iter().map(|&(i, x)| section(i, x)).collect();
    let mut on_arrows = Vec::with_capacity(u.n_arrows());
    for a in u.arrows() {
        let (ny, nx) = (on_objects[u.tgt(a)], on_objects[u.src(a)]);
        let want = refined.refinement.arrow(a);
        let h = apex
            .hom(ny, nx)
            .into_iter()
            .find(|&h| phi.arrow(h) == want)
            .ok_or_else(|| Error::Internal("left leg is not full".into()))?;
        on_arrows.push(h);
    }
    let lift = GroupoidMap::new(u.clone(), Arc::clone(apex), on_objects, on_arrows)?;
    let map = rect.right().compose(&lift)?;
    let fraction = Fraction::new(refined.refinement.clone(), map.clone())?;
    Ok(Refinement {
        cover: refined.cover.clone(),
        refined,
        lift,
        map,
        fraction,
    })
}
