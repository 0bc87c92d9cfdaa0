//! Homotopy pullbacks `G1 ×̃_G G2`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;
use crate::morphism::{is_surjective_equivalence, is_weak_equivalence, same_groupoid, GroupoidMap, NatIso};
use crate::{ArrowId, ObjectId};

/// The homotopy pullback of `f1: G1 → G` and `f2: G2 → G`.
///
/// Objects are triples `(x1, g, x2)` with `g: f2(x2) → f1(x1)`, ordered
/// lexicographically. Arrows are triples `(k1, k2, k3)` with `k1: x1 → y1`,
/// `k3: x2 → y2` and the diagonal `k2: f2(y2) → f1(x1)`; the source is
/// `(x1, k2∘f2(k3), x2)` and the target `(y1, f1(k1)∘k2, y2)`. Arrows are
/// ordered lexicographically as triples.
#[derive(Debug, Clone)]
pub struct HomotopyPullback {
    pub groupoid: Arc<FiniteGroupoid>,
    pub objects: Vec<(ObjectId, ArrowId, ObjectId)>,
    pub arrows: Vec<(ArrowId, ArrowId, ArrowId)>,
    /// Projection onto `G1`; the base change of `f2`.
    pub to_first: GroupoidMap,
    /// Projection onto `G2`; the base change of `f1`.
    pub to_second: GroupoidMap,
    /// `f1 ∘ to_first ⇒ f2 ∘ to_second`, component `g⁻¹` at `(x1, g, x2)`.
    pub witness: NatIso,
    f1: GroupoidMap,
    f2: GroupoidMap,
    object_index: HashMap<(ObjectId, ArrowId, ObjectId), ObjectId>,
    arrow_index: HashMap<(ArrowId, ArrowId, ArrowId), ArrowId>,
}

/// Largest composition table (composable pairs) a pullback may have.
pub const PULLBACK_TABLE_BOUND: usize = 16_000_000;

pub fn homotopy_pullback(f1: &GroupoidMap, f2: &GroupoidMap) -> Result<HomotopyPullback> {
    if !same_groupoid(f1.codomain(), f2.codomain()) {
        return Err(Error::EndpointMismatch(
            "homotopy pullback needs a common codomain".into(),
        ));
    }
    let g = f1.codomain().clone();
    let g1 = f1.domain().clone();
    let g2 = f2.domain().clone();
    let mut fiber2 = vec![Vec::new(); g.n_objects()];
    for x2 in g2.objects() {
        fiber2[f2.object(x2)].push(x2);
    }
    let mut objects = Vec::new();
    for x1 in g1.objects() {
        let y = f1.object(x1);
        // arrows into y, ascending
        for a in g.arrows().filter(|&a| g.tgt(a) == y) {
            for &x2 in &fiber2[g.src(a)] {
                objects.push((x1, a, x2));
            }
        }
    }
    let table: u128 = objects
        .iter()
        .map(|&(x1, _, x2)| (g1.arrows_from(x1).len() * g2.arrows_from(x2).len()) as u128)
        .map(|d| d * d)
        .sum();
    if table > PULLBACK_TABLE_BOUND as u128 {
        return Err(Error::Scale {
            what: "homotopy pullback composition table",
            size: usize::try_from(table).unwrap_or(usize::MAX),
            bound: PULLBACK_TABLE_BOUND,
        });
    }
    let object_index: HashMap<_, _> = objects.iter().enumerate().map(|(i, &o)| (o, i)).collect();

    let mut arrows = Vec::new();
    for &(x1, a, x2) in &objects {
        for &k1 in g1.arrows_from(x1) {
            for &k3 in g2.arrows_from(x2) {
                let k2 = g.mul(a, g.inverse(f2.arrow(k3)));
                arrows.push((k1, k2, k3));
            }
        }
    }
    arrows.sort_unstable();
    let arrow_index: HashMap<_, _> = arrows.iter().enumerate().map(|(i, &r)| (r, i)).collect();

    let source_of = |&(k1, k2, k3): &(ArrowId, ArrowId, ArrowId)| {
        object_index[&(g1.src(k1), g.mul(k2, f2.arrow(k3)), g2.src(k3))]
    };
    let target_of = |&(k1, k2, k3): &(ArrowId, ArrowId, ArrowId)| {
        object_index[&(g1.tgt(k1), g.mul(f1.arrow(k1), k2), g2.tgt(k3))]
    };
    let src: Vec<_> = arrows.iter().map(source_of).collect();
    let tgt: Vec<_> = arrows.iter().map(target_of).collect();
    let units = objects
        .iter()
        .map(|&(x1, a, x2)| arrow_index[&(g1.unit(x1), a, g2.unit(x2))])
        .collect();
    let inv = arrows
        .iter()
        .enumerate()
        .map(|(i, &(k1, _, k3))| {
            let (_, h, _) = objects[tgt[i]];
            arrow_index[&(g1.inverse(k1), g.mul(h, f2.arrow(k3)), g2.inverse(k3))]
        })
        .collect();
    let k = Arc::new(FiniteGroupoid::tabulate(
        objects.len(),
        src,
        tgt,
        units,
        inv,
        |b, a| {
            let (k1b, _, k3b) = arrows[b];
            let (k1a, k2a, k3a) = arrows[a];
            arrow_index[&(
                g1.mul(k1b, k1a),
                g.mul(k2a, g.inverse(f2.arrow(k3b))),
                g2.mul(k3b, k3a),
            )]
        },
    ));
    let to_first = GroupoidMap::new_unchecked(
        k.clone(),
        g1.clone(),
        objects.iter().map(|o| o.0).collect(),
        arrows.iter().map(|r| r.0).collect(),
    );
    let to_second = GroupoidMap::new_unchecked(
        k.clone(),
        g2.clone(),
        objects.iter().map(|o| o.2).collect(),
        arrows.iter().map(|r| r.2).collect(),
    );
    let witness = NatIso::new_unchecked(
        f1.compose(&to_first)?,
        f2.compose(&to_second)?,
        objects.iter().map(|o| g.inverse(o.1)).collect(),
    );
    Ok(HomotopyPullback {
        groupoid: k,
        objects,
        arrows,
        to_first,
        to_second,
        witness,
        f1: f1.clone(),
        f2: f2.clone(),
        object_index,
        arrow_index,
    })
}

impl HomotopyPullback {
    /// The unique map `H → K` induced by `psi1: H → G1`, `psi2: H → G2` and
    /// `alpha: f1∘psi1 ⇒ f2∘psi2`. Checks that it commutes with both
    /// projections and carries the witness to `alpha`.
    pub fn mediator(&self, psi1: &GroupoidMap, psi2: &GroupoidMap, alpha: &NatIso) -> Result<GroupoidMap> {
        let g = self.f1.codomain();
        let expect_from = self.f1.compose(psi1)?;
        let expect_to = self.f2.compose(psi2)?;
        if *alpha.from_map() != expect_from || *alpha.to_map() != expect_to {
            return Err(Error::EndpointMismatch(
                "transformation does not run f1∘psi1 ⇒ f2∘psi2".into(),
            ));
        }
        alpha.check()?;
        let h = psi1.domain();
        let comp = alpha.components();
        let on_objects: Vec<_> = h
            .objects()
            .map(|z| self.object_index[&(psi1.object(z), g.inverse(comp[z]), psi2.object(z))])
            .collect();
        let on_arrows = h
            .arrows()
            .map(|k| {
                let k2 = g.mul(g.inverse(comp[h.src(k)]), g.inverse(self.f2.arrow(psi2.arrow(k))));
                self.arrow_index[&(psi1.arrow(k), k2, psi2.arrow(k))]
            })
            .collect();
        let m = GroupoidMap::new(h.clone(), self.groupoid.clone(), on_objects, on_arrows)?;
        if self.to_first.compose(&m)? != *psi1 || self.to_second.compose(&m)? != *psi2 {
            return Err(Error::Internal("mediator does not commute".into()));
        }
        if self.witness.whisker_right(&m)?.components() != comp {
            return Err(Error::Internal("mediator does not induce alpha".into()));
        }
        Ok(m)
    }

    pub fn object_id(&self, triple: (ObjectId, ArrowId, ObjectId)) -> Option<ObjectId> {
        self.object_index.get(&triple).copied()
    }

    pub fn arrow_id(&self, triple: (ArrowId, ArrowId, ArrowId)) -> Option<ArrowId> {
        self.arrow_index.get(&triple).copied()
    }
}

/// For a weak equivalence `f1`, whether the base change `K → G2` is a
/// surjective equivalence.
pub fn base_change_is_surjective_equivalence(f1: &GroupoidMap, f2: &GroupoidMap) -> Result<bool> {
    if !is_weak_equivalence(f1) {
        return Err(Error::NotWeakEquivalence("first leg of the pullback"));
    }
    let pb = homotopy_pullback(f1, f2)?;
    Ok(is_surjective_equivalence(&pb.to_second))
}
