//! Orbits, isotropy groups, anchor fibers, saturation and bisections.

use std::sync::Arc;

use super::{restriction, FiniteGroupoid};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::morphism::GroupoidMap;
use crate::{ArrowId, ObjectId};

/// Orbit index of every object; orbits are numbered by their smallest object.
pub fn orbit_labels(g: &FiniteGroupoid) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.n_objects()];
    let mut next = 0;
    for x in g.objects() {
        if label[x] != usize::MAX {
            continue;
        }
        label[x] = next;
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for &a in g.arrows_from(y) {
                let z = g.tgt(a);
                if label[z] == usize::MAX {
                    label[z] = next;
                    stack.push(z);
                }
            }
        }
        next += 1;
    }
    label
}

/// The orbit partition, each orbit ascending, orbits ordered by their
/// smallest object.
pub fn orbits(g: &FiniteGroupoid) -> Vec<Vec<ObjectId>> {
    let labels = orbit_labels(g);
    let n = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
    let mut out = vec![Vec::new(); n];
    for (x, &l) in labels.iter().enumerate() {
        out[l].push(x);
    }
    out
}

/// Smallest object of each orbit.
pub fn orbit_representatives(g: &FiniteGroupoid) -> Vec<ObjectId> {
    orbits(g).into_iter().map(|o| o[0]).collect()
}

/// The isotropy group at an object together with the arrows realising it.
#[derive(Debug, Clone)]
pub struct Isotropy {
    pub object: ObjectId,
    /// Element `i` of `group` is arrow `arrows[i]`; element 0 is the unit.
    pub arrows: Vec<ArrowId>,
    pub group: Group,
}

pub fn isotropy(g: &FiniteGroupoid, x: ObjectId) -> Result<Isotropy> {
    g.check_object(x)?;
    let mut arrows = g.hom(x, x);
    let u = g.unit(x);
    arrows.retain(|&a| a != u);
    arrows.insert(0, u);
    let pos = |a: ArrowId| arrows.iter().position(|&b| b == a).expect("loop stays at x");
    let group = Group::from_fn_unchecked(arrows.len(), |i, j| pos(g.mul(arrows[i], arrows[j])));
    Ok(Isotropy {
        object: x,
        arrows,
        group,
    })
}

/// `G(y, x)`.
pub fn anchor_fiber(g: &FiniteGroupoid, y: ObjectId, x: ObjectId) -> Result<Vec<ArrowId>> {
    g.check_object(y)?;
    g.check_object(x)?;
    Ok(g.hom(y, x))
}

/// `t(s⁻¹(A))`, ascending.
pub fn saturation(g: &FiniteGroupoid, subset: &[ObjectId]) -> Result<Vec<ObjectId>> {
    let mut hit = vec![false; g.n_objects()];
    for &x in subset {
        g.check_object(x)?;
        for &a in g.arrows_from(x) {
            hit[g.tgt(a)] = true;
        }
    }
    Ok((0..g.n_objects()).filter(|&x| hit[x]).collect())
}

/// A set of arrows on which source and target are both injective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bisection {
    pub arrows: Vec<ArrowId>,
}

impl Bisection {
    pub fn new(g: &FiniteGroupoid, mut arrows: Vec<ArrowId>) -> Result<Self> {
        arrows.sort_unstable();
        arrows.dedup();
        let mut seen_s = vec![false; g.n_objects()];
        let mut seen_t = vec![false; g.n_objects()];
        for &a in &arrows {
            g.check_arrow(a)?;
            if std::mem::replace(&mut seen_s[g.src(a)], true)
                || std::mem::replace(&mut seen_t[g.tgt(a)], true)
            {
                return Err(Error::Malformed(format!(
                    "arrow {a} breaks injectivity of source or target on the bisection"
                )));
            }
        }
        Ok(Bisection { arrows })
    }

    pub fn sources(&self, g: &FiniteGroupoid) -> Vec<ObjectId> {
        let mut v: Vec<_> = self.arrows.iter().map(|&a| g.src(a)).collect();
        v.sort_unstable();
        v
    }

    pub fn targets(&self, g: &FiniteGroupoid) -> Vec<ObjectId> {
        let mut v: Vec<_> = self.arrows.iter().map(|&a| g.tgt(a)).collect();
        v.sort_unstable();
        v
    }
}

/// `{g}` together with the units of every object other than its ends.
pub fn bisection_through(g: &FiniteGroupoid, a: ArrowId) -> Result<Bisection> {
    g.check_arrow(a)?;
    let ends = [g.src(a), g.tgt(a)];
    let mut arrows = vec![a];
    arrows.extend(g.objects().filter(|x| !ends.contains(x)).map(|x| g.unit(x)));
    Bisection::new(g, arrows)
}

/// Conjugation `h ↦ b_y h b_x⁻¹` by a bisection, as a map from the
/// restriction to its sources onto the restriction to its targets.
pub fn conjugation(g: &Arc<FiniteGroupoid>, b: &Bisection) -> Result<GroupoidMap> {
    let b = Bisection::new(g, b.arrows.clone())?;
    let dom = restriction(g, &b.sources(g))?;
    let cod = restriction(g, &b.targets(g))?;
    let mut through = vec![usize::MAX; g.n_objects()];
    for &a in &b.arrows {
        through[g.src(a)] = a;
    }
    let cod_obj = |x: ObjectId| cod.objects.binary_search(&x).expect("target in restriction");
    let cod_arrow = |a: ArrowId| cod.arrows.binary_search(&a).expect("arrow in restriction");
    let on_objects = dom
        .objects
        .iter()
        .map(|&x| cod_obj(g.tgt(through[x])))
        .collect();
    let on_arrows = dom
        .arrows
        .iter()
        .map(|&h| {
            let bx = through[g.src(h)];
            let by = through[g.tgt(h)];
            cod_arrow(g.mul(g.mul(by, h), g.inverse(bx)))
        })
        .collect();
    GroupoidMap::new(dom.groupoid, cod.groupoid, on_objects, on_arrows)
}
