use std::collections::HashMap;
use std::sync::Arc;

use super::action::same_partition;
use super::{gauge_groupoid_of_action, GaugeGroupoid, GroupoidAction, PrincipalBundle, Side};
use crate::error::{Error, Result};
use crate::fraction::{fraction_equal, Fraction};
use crate::groupoid::FiniteGroupoid;
use crate::morphism::{is_weak_equivalence, GroupoidMap};
use crate::{ArrowId, ObjectId};

/// `G ↷ P ↶ G'`: commuting left and right actions on one carrier, each
/// moment map invariant under the other action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bibundle {
    left: GroupoidAction,
    right: GroupoidAction,
}

impl Bibundle {
    pub fn new(left: GroupoidAction, right: GroupoidAction) -> Result<Self> {
        if left.side() != Side::Left || right.side() != Side::Right {
            return Err(Error::BibundleLaw("actions are on the wrong sides".into()));
        }
        if left.n_points() != right.n_points() {
            return Err(Error::BibundleLaw(format!(
                "carriers differ: {} and {} points",
                left.n_points(),
                right.n_points()
            )));
        }
        let b = Bibundle { left, right };
        b.check()?;
        Ok(b)
    }

    pub(crate) fn new_unchecked(left: GroupoidAction, right: GroupoidAction) -> Self {
        Bibundle { left, right }
    }

    /// Invariance of moments and commutation, on every defined triple.
    pub fn check(&self) -> Result<()> {
        let (l, r) = (&self.left, &self.right);
        for p in 0..self.carrier() {
            for g in l.arrows_at(p) {
                let q = l.act(g, p);
                if r.moment()[q] != r.moment()[p] {
                    return Err(Error::BibundleLaw(format!(
                        "left arrow {g} changes the right moment of {p}"
                    )));
                }
            }
            for h in r.arrows_at(p) {
                let q = r.act(h, p);
                if l.moment()[q] != l.moment()[p] {
                    return Err(Error::BibundleLaw(format!(
                        "right arrow {h} changes the left moment of {p}"
                    )));
                }
                for g in l.arrows_at(p) {
                    if r.act(h, l.act(g, p)) != l.act(g, q) {
                        return Err(Error::BibundleLaw(format!(
                            "({g}·{p})·{h} differs from {g}·({p}·{h})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn left_groupoid(&self) -> &Arc<FiniteGroupoid> {
        self.left.groupoid()
    }

    pub fn right_groupoid(&self) -> &Arc<FiniteGroupoid> {
        self.right.groupoid()
    }

    pub fn left_action(&self) -> &GroupoidAction {
        &self.left
    }

    pub fn right_action(&self) -> &GroupoidAction {
        &self.right
    }

    pub fn carrier(&self) -> usize {
        self.left.n_points()
    }

    pub fn lmom(&self) -> &[ObjectId] {
        self.left.moment()
    }

    pub fn rmom(&self) -> &[ObjectId] {
        self.right.moment()
    }

    /// The right action is principal over `lmom`, which is onto.
    pub fn is_right_principal(&self) -> bool {
        onto(self.lmom(), self.left_groupoid().n_objects())
            && self.right.is_free()
            && same_partition(&self.right.orbit_labels(), self.lmom())
    }

    /// The left action is principal over `rmom`, which is onto.
    pub fn is_left_principal(&self) -> bool {
        onto(self.rmom(), self.right_groupoid().n_objects())
            && self.left.is_free()
            && same_partition(&self.left.orbit_labels(), self.rmom())
    }

    /// The right underlying bundle `P → M` of `G'`.
    pub fn right_bundle(&self) -> Result<PrincipalBundle> {
        PrincipalBundle::new(self.right.clone(), self.left_groupoid().n_objects(), self.lmom().to_vec())
    }

    /// The left underlying bundle `P → M'` of `G`.
    pub fn left_bundle(&self) -> Result<PrincipalBundle> {
        PrincipalBundle::new(self.left.clone(), self.right_groupoid().n_objects(), self.rmom().to_vec())
    }
}

fn onto(f: &[usize], n: usize) -> bool {
    let mut hit = vec![false; n];
    for &y in f {
        hit[y] = true;
    }
    hit.into_iter().all(|h| h)
}

/// `G ↷ G ↶ G` by left and right multiplication on the arrows.
pub fn unit_bibundle(g: &Arc<FiniteGroupoid>) -> Bibundle {
    let left = GroupoidAction::from_fn_unchecked(
        g.clone(),
        Side::Left,
        g.arrows().map(|a| g.tgt(a)).collect(),
        |b, a| g.mul(b, a),
    );
    let right = GroupoidAction::from_fn_unchecked(
        g.clone(),
        Side::Right,
        g.arrows().map(|a| g.src(a)).collect(),
        |b, a| g.mul(a, b),
    );
    Bibundle::new_unchecked(left, right)
}

/// The fraction `π2/π1` of a right principal bibundle.
#[derive(Debug, Clone)]
pub struct BibundleFraction {
    pub fraction: Fraction,
    /// `(g, a, g')` for every arrow of the apex `G ⋉ P ⋊ G'`; it runs from
    /// `a` to `g·a·g'`.
    pub arrows: Vec<(ArrowId, usize, ArrowId)>,
}

/// The apex is the action groupoid of the simultaneous action, with
/// `π1(g, a, g') = g` and `π2(g, a, g') = g'⁻¹`.
pub fn bibundle_to_fraction(b: &Bibundle) -> Result<BibundleFraction> {
    if !b.is_right_principal() {
        return Err(Error::NotPrincipal("bibundle is not right principal".into()));
    }
    let (g, h) = (b.left_groupoid(), b.right_groupoid());
    let (l, r) = (&b.left, &b.right);
    let mut arrows = Vec::new();
    for x in g.arrows() {
        for a in 0..b.carrier() {
            if b.lmom()[a] != g.src(x) {
                continue;
            }
            for y in h.arrows().filter(|&y| h.tgt(y) == b.rmom()[a]) {
                arrows.push((x, a, y));
            }
        }
    }
    let index: HashMap<_, _> = arrows.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let both = |x: ArrowId, a: usize, y: ArrowId| l.act(x, r.act(y, a));
    let n = b.carrier();
    let apex = Arc::new(FiniteGroupoid::tabulate(
        n,
        arrows.iter().map(|t| t.1).collect(),
        arrows.iter().map(|&(x, a, y)| both(x, a, y)).collect(),
        (0..n)
            .map(|a| index[&(g.unit(b.lmom()[a]), a, h.unit(b.rmom()[a]))])
            .collect(),
        arrows
            .iter()
            .map(|&(x, a, y)| index[&(g.inverse(x), both(x, a, y), h.inverse(y))])
            .collect(),
        |k2, k1| {
            let (x2, _, y2) = arrows[k2];
            let (x1, a, y1) = arrows[k1];
            index[&(g.mul(x2, x1), a, h.mul(y1, y2))]
        },
    ));
    let left = GroupoidMap::new_unchecked(
        apex.clone(),
        g.clone(),
        b.lmom().to_vec(),
        arrows.iter().map(|t| t.0).collect(),
    );
    let right = GroupoidMap::new_unchecked(
        apex.clone(),
        h.clone(),
        b.rmom().to_vec(),
        arrows.iter().map(|t| h.inverse(t.2)).collect(),
    );
    if !is_weak_equivalence(&left) {
        return Err(Error::Internal("left leg of a right principal bibundle is not a weak equivalence".into()));
    }
    Ok(BibundleFraction {
        fraction: Fraction::new_unchecked(left, right),
        arrows,
    })
}

/// The bibundle of a fraction `ψ/φ` with apex `H`.
#[derive(Debug, Clone)]
pub struct FractionBibundle {
    pub bibundle: Bibundle,
    /// Smallest triple `(g, n, g')` of each class, one per carrier point.
    pub classes: Vec<(ArrowId, ObjectId, ArrowId)>,
    class_of: HashMap<(ArrowId, ObjectId, ArrowId), usize>,
}

impl FractionBibundle {
    /// The point `[g, n, g']`.
    pub fn class_of(&self, g: ArrowId, n: ObjectId, g2: ArrowId) -> Option<usize> {
        self.class_of.get(&(g, n, g2)).copied()
    }
}

/// Carrier `(G ×_M N ×_{M'} G')/H` where `h: n → n'` acts by
/// `(g, n, g') ↦ (g∘φ(h)⁻¹, n', ψ(h)∘g')`; `G` acts on the first factor
/// and `G'` on the last.
pub fn fraction_to_bibundle(fr: &Fraction) -> Result<FractionBibundle> {
    let (phi, psi) = (fr.left(), fr.right());
    let (g, h, k) = (fr.source(), fr.target(), fr.apex());
    let mut triples = Vec::new();
    for x in g.arrows() {
        for n in k.objects().filter(|&n| phi.object(n) == g.src(x)) {
            for y in h.arrows().filter(|&y| h.tgt(y) == psi.object(n)) {
                triples.push((x, n, y));
            }
        }
    }
    // triples are generated in lexicographic order, so the first unlabelled
    // one is the smallest of its class
    let mut class_of = HashMap::new();
    let mut classes = Vec::new();
    for &(x, n, y) in &triples {
        if class_of.contains_key(&(x, n, y)) {
            continue;
        }
        let id = classes.len();
        classes.push((x, n, y));
        for &a in k.arrows_from(n) {
            let t = (
                g.mul(x, g.inverse(phi.arrow(a))),
                k.tgt(a),
                h.mul(psi.arrow(a), y),
            );
            class_of.insert(t, id);
        }
    }
    let lmom: Vec<_> = classes.iter().map(|&(x, _, _)| g.tgt(x)).collect();
    let rmom: Vec<_> = classes.iter().map(|&(_, _, y)| h.src(y)).collect();
    let left = GroupoidAction::from_fn_unchecked(g.clone(), Side::Left, lmom, |a, p| {
        let (x, n, y) = classes[p];
        class_of[&(g.mul(a, x), n, y)]
    });
    let right = GroupoidAction::from_fn_unchecked(h.clone(), Side::Right, rmom, |a, p| {
        let (x, n, y) = classes[p];
        class_of[&(x, n, h.mul(y, a))]
    });
    let bibundle = Bibundle::new_unchecked(left, right);
    debug_assert!(bibundle.left.check().is_ok() && bibundle.right.check().is_ok());
    debug_assert!(bibundle.check().is_ok());
    Ok(FractionBibundle {
        bibundle,
        classes,
        class_of,
    })
}

/// `βα(b) ≅ b` by `[g, a, g'] ↦ g·a·g'`: a bijection of carriers that
/// commutes with both actions and both moments. Returns the map on points.
pub fn roundtrip_beta_alpha(b: &Bibundle) -> Result<Vec<usize>> {
    let alpha = bibundle_to_fraction(b)?;
    let beta = fraction_to_bibundle(&alpha.fraction)?;
    let bb = &beta.bibundle;
    let (l, r) = (&b.left, &b.right);
    let w: Vec<usize> = beta
        .classes
        .iter()
        .map(|&(x, a, y)| l.act(x, r.act(y, a)))
        .collect();
    let fail = |what: &str| Err(Error::Internal(format!("round trip witness {what}")));
    let mut seen = vec![false; b.carrier()];
    if w.len() != b.carrier() {
        return fail("has the wrong size");
    }
    for &p in &w {
        if std::mem::replace(&mut seen[p], true) {
            return fail("is not injective");
        }
    }
    for p in 0..bb.carrier() {
        if bb.lmom()[p] != b.lmom()[w[p]] || bb.rmom()[p] != b.rmom()[w[p]] {
            return fail("moves a moment");
        }
        for x in bb.left.arrows_at(p) {
            if w[bb.left.act(x, p)] != l.act(x, w[p]) {
                return fail("is not left equivariant");
            }
        }
        for y in bb.right.arrows_at(p) {
            if w[bb.right.act(y, p)] != r.act(y, w[p]) {
                return fail("is not right equivariant");
            }
        }
    }
    Ok(w)
}

/// Witness for `αβ(fr) = fr`.
#[derive(Debug, Clone)]
pub struct AlphaBetaWitness {
    pub fraction: Fraction,
    /// `H → G ⋉ P ⋊ G'` with `π1∘m = φ` and `π2∘m = ψ` on the nose.
    pub mediator: GroupoidMap,
}

pub fn roundtrip_alpha_beta(fr: &Fraction) -> Result<AlphaBetaWitness> {
    let beta = fraction_to_bibundle(fr)?;
    let alpha = bibundle_to_fraction(&beta.bibundle)?;
    let index: HashMap<_, _> = alpha.arrows.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let (phi, psi) = (fr.left(), fr.right());
    let (g, h, k) = (fr.source(), fr.target(), fr.apex());
    let point = |n: ObjectId| beta.class_of[&(g.unit(phi.object(n)), n, h.unit(psi.object(n)))];
    let on_objects: Vec<_> = k.objects().map(point).collect();
    let on_arrows = k
        .arrows()
        .map(|a| index[&(phi.arrow(a), point(k.src(a)), h.inverse(psi.arrow(a)))])
        .collect();
    let m = GroupoidMap::new(k.clone(), alpha.fraction.apex().clone(), on_objects, on_arrows)?;
    let f = &alpha.fraction;
    if f.left().compose(&m)? != *phi || f.right().compose(&m)? != *psi {
        return Err(Error::Internal("round trip mediator does not commute".into()));
    }
    if !fraction_equal(f, fr)? {
        return Err(Error::Internal("round trip changed the fraction".into()));
    }
    Ok(AlphaBetaWitness {
        fraction: alpha.fraction,
        mediator: m,
    })
}

/// The canonical isomorphism from the gauge groupoid of the left bundle
/// onto `G'`: `[a', a''] ↦` the unique `g''` with `a'·g'' = a''`.
#[derive(Debug, Clone)]
pub struct GaugeIsomorphism {
    pub gauge: GaugeGroupoid,
    pub iso: GroupoidMap,
}

pub fn gauge_from_bibundle(b: &Bibundle) -> Result<GaugeIsomorphism> {
    if !b.is_left_principal() || !b.is_right_principal() {
        return Err(Error::NotPrincipal("bibundle is not principal on both sides".into()));
    }
    let gauge = gauge_groupoid_of_action(&b.left)?;
    let h = b.right_groupoid();
    let r = &b.right;
    let on_objects = gauge.orbit_reps.iter().map(|&p| b.rmom()[p]).collect();
    let mut on_arrows = Vec::with_capacity(gauge.arrow_reps.len());
    for &(q, p) in &gauge.arrow_reps {
        // [q, p] runs orbit(p) → orbit(q); want y: rmom p → rmom q, q·y = p
        let y = r
            .arrows_at(q)
            .into_iter()
            .find(|&y| r.act(y, q) == p)
            .ok_or_else(|| Error::Internal(format!("no arrow carries {q} to {p}")))?;
        on_arrows.push(y);
    }
    let iso = GroupoidMap::new(gauge.groupoid.clone(), h.clone(), on_objects, on_arrows)?;
    if !iso.is_isomorphism() {
        return Err(Error::Internal("gauge map is not an isomorphism".into()));
    }
    Ok(GaugeIsomorphism { gauge, iso })
}
