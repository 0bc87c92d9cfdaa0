//! Maps of groupoids, natural isomorphisms between them, and the
//! equivalence predicates built on top.

mod equivalence;
mod group_iso;
mod natiso;

pub use equivalence::*;
pub use group_iso::{group_isomorphic, GROUP_ISO_BOUND};
pub use natiso::*;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;
use crate::{ArrowId, ObjectId};

/// Same tables, either by pointer or by value.
pub fn same_groupoid(a: &Arc<FiniteGroupoid>, b: &Arc<FiniteGroupoid>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A map of groupoids `domain → codomain`, given by its object and arrow
/// tables.
#[derive(Debug, Clone)]
pub struct GroupoidMap {
    domain: Arc<FiniteGroupoid>,
    codomain: Arc<FiniteGroupoid>,
    on_objects: Vec<ObjectId>,
    on_arrows: Vec<ArrowId>,
}

impl PartialEq for GroupoidMap {
    fn eq(&self, other: &Self) -> bool {
        self.on_objects == other.on_objects
            && self.on_arrows == other.on_arrows
            && same_groupoid(&self.domain, &other.domain)
            && same_groupoid(&self.codomain, &other.codomain)
    }
}

impl Eq for GroupoidMap {}

impl GroupoidMap {
    /// Builds a map and checks that it preserves source, target and
    /// composition.
    pub fn new(
        domain: Arc<FiniteGroupoid>,
        codomain: Arc<FiniteGroupoid>,
        on_objects: Vec<ObjectId>,
        on_arrows: Vec<ArrowId>,
    ) -> Result<Self> {
        let m = Self::new_unchecked(domain, codomain, on_objects, on_arrows);
        m.check()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        domain: Arc<FiniteGroupoid>,
        codomain: Arc<FiniteGroupoid>,
        on_objects: Vec<ObjectId>,
        on_arrows: Vec<ArrowId>,
    ) -> Self {
        GroupoidMap {
            domain,
            codomain,
            on_objects,
            on_arrows,
        }
    }

    pub fn identity(g: &Arc<FiniteGroupoid>) -> Self {
        Self::new_unchecked(g.clone(), g.clone(), g.objects().collect(), g.arrows().collect())
    }

    /// Checks the map laws; the error names a witness arrow.
    pub fn check(&self) -> Result<()> {
        let (d, c) = (&self.domain, &self.codomain);
        if self.on_objects.len() != d.n_objects() || self.on_arrows.len() != d.n_arrows() {
            return Err(Error::Malformed(format!(
                "map tables have {} objects and {} arrows, domain has {} and {}",
                self.on_objects.len(),
                self.on_arrows.len(),
                d.n_objects(),
                d.n_arrows()
            )));
        }
        for &x in &self.on_objects {
            c.check_object(x)?;
        }
        for &a in &self.on_arrows {
            c.check_arrow(a)?;
        }
        for g in d.arrows() {
            let fg = self.on_arrows[g];
            if c.src(fg) != self.on_objects[d.src(g)] || c.tgt(fg) != self.on_objects[d.tgt(g)] {
                return Err(Error::MapLaw {
                    arrow: g,
                    reason: format!(
                        "image {fg} runs {} -> {}, expected {} -> {}",
                        c.src(fg),
                        c.tgt(fg),
                        self.on_objects[d.src(g)],
                        self.on_objects[d.tgt(g)]
                    ),
                });
            }
        }
        for g1 in d.arrows() {
            for &g2 in d.arrows_from(d.tgt(g1)) {
                let lhs = self.on_arrows[d.mul(g2, g1)];
                let rhs = c.mul(self.on_arrows[g2], self.on_arrows[g1]);
                if lhs != rhs {
                    return Err(Error::MapLaw {
                        arrow: g1,
                        reason: format!("composition with {g2} is not preserved"),
                    });
                }
            }
        }
        // Units and inverses follow from the above; assert them anyway.
        for x in d.objects() {
            if self.on_arrows[d.unit(x)] != c.unit(self.on_objects[x]) {
                return Err(Error::Internal(format!("unit of {x} not preserved")));
            }
        }
        for g in d.arrows() {
            if self.on_arrows[d.inverse(g)] != c.inverse(self.on_arrows[g]) {
                return Err(Error::Internal(format!("inverse of {g} not preserved")));
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &Arc<FiniteGroupoid> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteGroupoid> {
        &self.codomain
    }

    pub fn on_objects(&self) -> &[ObjectId] {
        &self.on_objects
    }

    pub fn on_arrows(&self) -> &[ArrowId] {
        &self.on_arrows
    }

    #[inline]
    pub fn object(&self, x: ObjectId) -> ObjectId {
        self.on_objects[x]
    }

    #[inline]
    pub fn arrow(&self, g: ArrowId) -> ArrowId {
        self.on_arrows[g]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupoidMap) -> Result<GroupoidMap> {
        if !same_groupoid(&inner.codomain, &self.domain) {
            return Err(Error::EndpointMismatch(
                "codomain of the inner map is not the domain of the outer map".into(),
            ));
        }
        Ok(Self::new_unchecked(
            inner.domain.clone(),
            self.codomain.clone(),
            inner.on_objects.iter().map(|&x| self.on_objects[x]).collect(),
            inner.on_arrows.iter().map(|&g| self.on_arrows[g]).collect(),
        ))
    }

    /// Bijective on objects and on arrows.
    pub fn is_isomorphism(&self) -> bool {
        is_bijection(&self.on_objects, self.codomain.n_objects())
            && is_bijection(&self.on_arrows, self.codomain.n_arrows())
    }

    /// The inverse of an isomorphism.
    pub fn inverse(&self) -> Option<GroupoidMap> {
        if !self.is_isomorphism() {
            return None;
        }
        let mut obj = vec![0; self.on_objects.len()];
        for (x, &y) in self.on_objects.iter().enumerate() {
            obj[y] = x;
        }
        let mut arr = vec![0; self.on_arrows.len()];
        for (g, &h) in self.on_arrows.iter().enumerate() {
            arr[h] = g;
        }
        Some(Self::new_unchecked(self.codomain.clone(), self.domain.clone(), obj, arr))
    }
}

fn is_bijection(table: &[usize], bound: usize) -> bool {
    if table.len() != bound {
        return false;
    }
    let mut seen = vec![false; bound];
    table.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
}
