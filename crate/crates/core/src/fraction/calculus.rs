use std::sync::Arc;

use super::homotopy_pullback;
use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;
use crate::morphism::{find_nat_iso, is_weak_equivalence, same_groupoid, skeleton, GroupoidMap, NatIso};

/// A span `G ←φ– H –ψ→ G'` whose left leg is a weak equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fraction {
    left: GroupoidMap,
    right: GroupoidMap,
}

impl Fraction {
    pub fn new(left: GroupoidMap, right: GroupoidMap) -> Result<Self> {
        if !same_groupoid(left.domain(), right.domain()) {
            return Err(Error::EndpointMismatch("legs do not share an apex".into()));
        }
        if !is_weak_equivalence(&left) {
            return Err(Error::NotWeakEquivalence("left leg"));
        }
        Ok(Fraction { left, right })
    }

    pub(crate) fn new_unchecked(left: GroupoidMap, right: GroupoidMap) -> Self {
        Fraction { left, right }
    }

    /// `id/id` on `g`.
    pub fn identity(g: &Arc<FiniteGroupoid>) -> Self {
        let id = GroupoidMap::identity(g);
        Fraction { left: id.clone(), right: id }
    }

    /// The fraction `f/id` presenting an honest map.
    pub fn from_map(f: &GroupoidMap) -> Self {
        Fraction {
            left: GroupoidMap::identity(f.domain()),
            right: f.clone(),
        }
    }

    pub fn apex(&self) -> &Arc<FiniteGroupoid> {
        self.left.domain()
    }

    pub fn left(&self) -> &GroupoidMap {
        &self.left
    }

    pub fn right(&self) -> &GroupoidMap {
        &self.right
    }

    pub fn source(&self) -> &Arc<FiniteGroupoid> {
        self.left.codomain()
    }

    pub fn target(&self) -> &Arc<FiniteGroupoid> {
        self.right.codomain()
    }

    /// Both legs restricted to a skeleton of the apex.
    pub fn on_skeleton(&self) -> Result<Fraction> {
        let sk = skeleton(self.apex());
        if sk.groupoid.n_objects() == self.apex().n_objects() {
            return Ok(self.clone());
        }
        Ok(Fraction::new_unchecked(
            self.left.compose(&sk.inclusion)?,
            self.right.compose(&sk.inclusion)?,
        ))
    }

    pub fn check(&self) -> Result<()> {
        self.left.check()?;
        self.right.check()?;
        Fraction::new(self.left.clone(), self.right.clone()).map(|_| ())
    }
}

pub fn make_fraction(phi: GroupoidMap, psi: GroupoidMap) -> Result<Fraction> {
    Fraction::new(phi, psi)
}

/// Exchanges the legs; the right leg must be a weak equivalence.
pub fn invert_fraction(fr: &Fraction) -> Result<Fraction> {
    if !is_weak_equivalence(&fr.right) {
        return Err(Error::NotWeakEquivalence("right leg"));
    }
    Ok(Fraction::new_unchecked(fr.right.clone(), fr.left.clone()))
}

/// The natural isomorphism that decides [`fraction_equal`], if any.
///
/// `K` is the homotopy pullback of the two left legs with projections `p1`,
/// `p2`; the fractions agree iff `ψ1∘p1 ≅ ψ2∘p2`. Any third span
/// `G ← H3 → G'` witnessing equality factors through `K` and the factor is
/// a weak equivalence by two-out-of-three, so nothing beyond `K` needs to be
/// searched.
///
/// Both fractions are first restricted to a skeleton of their apex. A
/// fraction restricted along a weak equivalence presents the same
/// generalized map, and the pullback of the skeleta is much smaller.
pub fn fraction_equal_witness(fr1: &Fraction, fr2: &Fraction) -> Result<Option<(Arc<FiniteGroupoid>, NatIso)>> {
    if !same_groupoid(fr1.source(), fr2.source()) || !same_groupoid(fr1.target(), fr2.target()) {
        return Err(Error::EndpointMismatch("fractions have different endpoints".into()));
    }
    let (fr1, fr2) = (&fr1.on_skeleton()?, &fr2.on_skeleton()?);
    let k = homotopy_pullback(&fr1.left, &fr2.left)?;
    let a = fr1.right.compose(&k.to_first)?;
    let b = fr2.right.compose(&k.to_second)?;
    Ok(find_nat_iso(&a, &b)?.map(|n| (k.groupoid, n)))
}

pub fn fraction_equal(fr1: &Fraction, fr2: &Fraction) -> Result<bool> {
    Ok(fraction_equal_witness(fr1, fr2)?.is_some())
}

/// `second ∘ first` for `first: G ⇢ G'` and `second: G' ⇢ G''`.
///
/// The apex is the homotopy pullback of `second.left` against
/// `first.right`; the new left leg runs through `first.left` and the new
/// right leg through `second.right`.
pub fn compose_fractions(first: &Fraction, second: &Fraction) -> Result<Fraction> {
    if !same_groupoid(first.target(), second.source()) {
        return Err(Error::EndpointMismatch("fractions do not chain".into()));
    }
    let k = homotopy_pullback(&second.left, &first.right)?;
    let left = first.left.compose(&k.to_second)?;
    let right = second.right.compose(&k.to_first)?;
    debug_assert!(is_weak_equivalence(&left));
    Ok(Fraction::new_unchecked(left, right))
}
