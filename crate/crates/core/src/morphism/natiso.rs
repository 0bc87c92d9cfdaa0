use super::{same_groupoid, GroupoidMap};
use crate::error::{Error, Result};
use crate::ArrowId;

/// A natural isomorphism `from ⇒ to`: for every object `x` of the shared
/// domain an arrow `alpha[x]: from(x) → to(x)` such that
/// `alpha(tgt g) ∘ from(g) = to(g) ∘ alpha(src g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatIso {
    from: GroupoidMap,
    to: GroupoidMap,
    alpha: Vec<ArrowId>,
}

impl NatIso {
    pub fn new(from: GroupoidMap, to: GroupoidMap, alpha: Vec<ArrowId>) -> Result<Self> {
        let n = Self::new_unchecked(from, to, alpha);
        n.check()?;
        Ok(n)
    }

    pub(crate) fn new_unchecked(from: GroupoidMap, to: GroupoidMap, alpha: Vec<ArrowId>) -> Self {
        NatIso { from, to, alpha }
    }

    /// Identity transformation of a map.
    pub fn identity(f: &GroupoidMap) -> Self {
        let c = f.codomain();
        let alpha = f.on_objects().iter().map(|&y| c.unit(y)).collect();
        Self::new_unchecked(f.clone(), f.clone(), alpha)
    }

    pub fn check(&self) -> Result<()> {
        check_endpoints(&self.from, &self.to)?;
        let d = self.from.domain();
        let c = self.from.codomain();
        if self.alpha.len() != d.n_objects() {
            return Err(Error::NatIsoLaw(format!(
                "{} components for {} objects",
                self.alpha.len(),
                d.n_objects()
            )));
        }
        for (x, &a) in self.alpha.iter().enumerate() {
            c.check_arrow(a)?;
            if c.src(a) != self.from.object(x) || c.tgt(a) != self.to.object(x) {
                return Err(Error::NatIsoLaw(format!(
                    "component at {x} does not run from({x}) -> to({x})"
                )));
            }
        }
        for g in d.arrows() {
            let lhs = c.mul(self.alpha[d.tgt(g)], self.from.arrow(g));
            let rhs = c.mul(self.to.arrow(g), self.alpha[d.src(g)]);
            if lhs != rhs {
                return Err(Error::NatIsoLaw(format!("naturality fails at arrow {g}")));
            }
        }
        Ok(())
    }

    pub fn from_map(&self) -> &GroupoidMap {
        &self.from
    }

    pub fn to_map(&self) -> &GroupoidMap {
        &self.to
    }

    pub fn components(&self) -> &[ArrowId] {
        &self.alpha
    }

    /// `to ⇒ from`.
    pub fn inverse(&self) -> NatIso {
        let c = self.from.codomain();
        let alpha = self.alpha.iter().map(|&a| c.inverse(a)).collect();
        Self::new_unchecked(self.to.clone(), self.from.clone(), alpha)
    }

    /// Vertical composite `self` then `next`.
    pub fn then(&self, next: &NatIso) -> Result<NatIso> {
        if self.to != next.from {
            return Err(Error::EndpointMismatch(
                "transformations do not chain".into(),
            ));
        }
        let c = self.from.codomain();
        let alpha = self
            .alpha
            .iter()
            .zip(&next.alpha)
            .map(|(&a, &b)| c.mul(b, a))
            .collect();
        Ok(Self::new_unchecked(self.from.clone(), next.to.clone(), alpha))
    }

    /// `self ∘ k` for a map `k` into the shared domain.
    pub fn whisker_right(&self, k: &GroupoidMap) -> Result<NatIso> {
        let from = self.from.compose(k)?;
        let to = self.to.compose(k)?;
        let alpha = k.on_objects().iter().map(|&x| self.alpha[x]).collect();
        Ok(Self::new_unchecked(from, to, alpha))
    }

    /// `m ∘ self` for a map `m` out of the shared codomain.
    pub fn whisker_left(&self, m: &GroupoidMap) -> Result<NatIso> {
        let from = m.compose(&self.from)?;
        let to = m.compose(&self.to)?;
        let alpha = self.alpha.iter().map(|&a| m.arrow(a)).collect();
        Ok(Self::new_unchecked(from, to, alpha))
    }
}

fn check_endpoints(f: &GroupoidMap, g: &GroupoidMap) -> Result<()> {
    if same_groupoid(f.domain(), g.domain()) && same_groupoid(f.codomain(), g.codomain()) {
        Ok(())
    } else {
        Err(Error::EndpointMismatch("maps do not share endpoints".into()))
    }
}

/// Whether `alpha` is a natural isomorphism `f ⇒ g`.
pub fn is_nat_iso(alpha: &[ArrowId], f: &GroupoidMap, g: &GroupoidMap) -> Result<bool> {
    check_endpoints(f, g)?;
    Ok(NatIso::new_unchecked(f.clone(), g.clone(), alpha.to_vec())
        .check()
        .is_ok())
}

/// Searches for a natural isomorphism `f ⇒ g`.
///
/// Works one connected component of the domain at a time: fixes the
/// component's smallest object as base, tries every arrow
/// `f(base) → g(base)` as the base component, propagates it along a
/// spanning tree and then checks naturality on every arrow of the
/// component. Returns `None` exactly when no natural isomorphism exists.
pub fn find_nat_iso(f: &GroupoidMap, g: &GroupoidMap) -> Result<Option<NatIso>> {
    check_endpoints(f, g)?;
    let d = f.domain();
    let c = f.codomain();
    let mut alpha = vec![usize::MAX; d.n_objects()];
    // tree[x] = an arrow base -> x
    let mut tree = vec![usize::MAX; d.n_objects()];
    for base in d.objects() {
        if tree[base] != usize::MAX {
            continue;
        }
        tree[base] = d.unit(base);
        let mut members = vec![base];
        let mut i = 0;
        while i < members.len() {
            let y = members[i];
            i += 1;
            for &a in d.arrows_from(y) {
                let z = d.tgt(a);
                if tree[z] == usize::MAX {
                    tree[z] = d.mul(a, tree[y]);
                    members.push(z);
                }
            }
        }
        let component_arrows: Vec<ArrowId> = members
            .iter()
            .flat_map(|&x| d.arrows_from(x).iter().copied())
            .collect();
        let mut found = false;
        for cand in c.hom(g.object(base), f.object(base)) {
            for &x in &members {
                let t = tree[x];
                alpha[x] = c.mul(c.mul(g.arrow(t), cand), c.inverse(f.arrow(t)));
            }
            let natural = component_arrows.iter().all(|&h| {
                c.mul(alpha[d.tgt(h)], f.arrow(h)) == c.mul(g.arrow(h), alpha[d.src(h)])
            });
            if natural {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    Ok(Some(NatIso::new_unchecked(f.clone(), g.clone(), alpha)))
}
