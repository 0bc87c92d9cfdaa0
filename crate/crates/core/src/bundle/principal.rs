use std::collections::HashMap;
use std::sync::Arc;

use super::{GroupoidAction, Side};
use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;
use crate::{ArrowId, ObjectId};

/// A free action whose orbits are exactly the fibres of `projection`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalBundle {
    action: GroupoidAction,
    n_base: usize,
    projection: Vec<usize>,
}

impl PrincipalBundle {
    pub fn new(action: GroupoidAction, n_base: usize, projection: Vec<usize>) -> Result<Self> {
        if projection.len() != action.n_points() {
            return Err(Error::Shape(format!(
                "projection has {} entries for {} points",
                projection.len(),
                action.n_points()
            )));
        }
        if let Some(&b) = projection.iter().find(|&&b| b >= n_base) {
            return Err(Error::OutOfRange {
                context: "base point",
                id: b,
                bound: n_base,
            });
        }
        if let Some((arrow, element)) = action.free_violation() {
            return Err(Error::NotFree { arrow, element });
        }
        if !action.is_principal(&projection) {
            return Err(Error::NotPrincipal("orbits differ from the fibres".into()));
        }
        Ok(PrincipalBundle {
            action,
            n_base,
            projection,
        })
    }

    pub fn action(&self) -> &GroupoidAction {
        &self.action
    }

    pub fn n_base(&self) -> usize {
        self.n_base
    }

    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    /// Smallest point of every fibre, if every fibre is non-empty.
    pub fn global_section(&self) -> Option<Vec<usize>> {
        let mut s = vec![None; self.n_base];
        for (p, &b) in self.projection.iter().enumerate() {
            s[b].get_or_insert(p);
        }
        s.into_iter().collect()
    }
}

/// `G` acting on its arrows by left multiplication, moment `tgt`,
/// projection `src`.
pub fn unit_bundle(g: &Arc<FiniteGroupoid>) -> PrincipalBundle {
    let moment = g.arrows().map(|a| g.tgt(a)).collect();
    let action = GroupoidAction::from_fn_unchecked(g.clone(), Side::Left, moment, |b, a| g.mul(b, a));
    let projection = g.arrows().map(|a| g.src(a)).collect();
    PrincipalBundle::new(action, g.n_objects(), projection).expect("unit bundle is principal")
}

/// Pullback along `f: N' → N`. Points are the pairs `(p, n')` with
/// `π(p) = f(n')`, ordered lexicographically.
pub fn pullback_bundle(pb: &PrincipalBundle, n_new_base: usize, f: &[usize]) -> Result<(PrincipalBundle, Vec<(usize, usize)>)> {
    if f.len() != n_new_base {
        return Err(Error::Shape(format!("base map has {} entries for {n_new_base} points", f.len())));
    }
    if let Some(&b) = f.iter().find(|&&b| b >= pb.n_base) {
        return Err(Error::OutOfRange {
            context: "base point",
            id: b,
            bound: pb.n_base,
        });
    }
    let mut points = Vec::new();
    for p in 0..pb.action.n_points() {
        for (n, &fn_) in f.iter().enumerate() {
            if pb.projection[p] == fn_ {
                points.push((p, n));
            }
        }
    }
    let index: HashMap<_, _> = points.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let moment = points.iter().map(|&(p, _)| pb.action.moment()[p]).collect();
    let action = GroupoidAction::from_fn_unchecked(
        pb.action.groupoid().clone(),
        pb.action.side(),
        moment,
        |g, i| {
            let (p, n) = points[i];
            index[&(pb.action.act(g, p), n)]
        },
    );
    let projection = points.iter().map(|r| r.1).collect();
    Ok((PrincipalBundle::new(action, n_new_base, projection)?, points))
}

/// A bundle is trivial when it has a global section `s` and
/// `(g, n) ↦ g·s(n)` is a bijection from arrows acting on the section onto
/// the points.
pub fn is_trivial_bundle(pb: &PrincipalBundle) -> bool {
    let Some(s) = pb.global_section() else {
        return false;
    };
    let a = &pb.action;
    let mut seen = vec![false; a.n_points()];
    for &p in &s {
        for g in a.arrows_at(p) {
            let q = a.act(g, p);
            if std::mem::replace(&mut seen[q], true) {
                return false;
            }
        }
    }
    seen.into_iter().all(|x| x)
}

/// An equivariant map of principal bundles over a map of bases.
#[derive(Debug, Clone)]
pub struct BundleMap {
    pub source: PrincipalBundle,
    pub target: PrincipalBundle,
    pub on_points: Vec<usize>,
    pub on_base: Vec<usize>,
}

impl BundleMap {
    pub fn new(source: PrincipalBundle, target: PrincipalBundle, on_points: Vec<usize>, on_base: Vec<usize>) -> Result<Self> {
        let (a, b) = (&source.action, &target.action);
        if !Arc::ptr_eq(a.groupoid(), b.groupoid()) && a.groupoid() != b.groupoid() {
            return Err(Error::EndpointMismatch("bundles have different structure groupoids".into()));
        }
        if a.side() != b.side() {
            return Err(Error::EndpointMismatch("bundles act from different sides".into()));
        }
        if on_points.len() != a.n_points() || on_base.len() != source.n_base {
            return Err(Error::Shape("bundle map has the wrong number of entries".into()));
        }
        for p in 0..a.n_points() {
            let q = on_points[p];
            if q >= b.n_points() || on_base[source.projection[p]] >= target.n_base {
                return Err(Error::OutOfRange {
                    context: "bundle map value",
                    id: q,
                    bound: b.n_points(),
                });
            }
            if b.moment()[q] != a.moment()[p] {
                return Err(Error::NotActionMap(format!("point {p} changes moment")));
            }
            if target.projection[q] != on_base[source.projection[p]] {
                return Err(Error::NotActionMap(format!("point {p} does not cover the base map")));
            }
            for g in a.arrows_at(p) {
                if on_points[a.act(g, p)] != b.act(g, q) {
                    return Err(Error::NotActionMap(format!("not equivariant at ({g}, {p})")));
                }
            }
        }
        Ok(BundleMap {
            source,
            target,
            on_points,
            on_base,
        })
    }
}

/// Whether `p ↦ (F(p), π(p))` is an equivariant bijection from the source
/// bundle onto the pullback of the target along the base map.
pub fn bundle_map_is_pullback(m: &BundleMap) -> Result<bool> {
    let (pulled, points) = pullback_bundle(&m.target, m.source.n_base, &m.on_base)?;
    let index: HashMap<_, _> = points.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let a = &m.source.action;
    let canon: Vec<usize> = (0..a.n_points())
        .map(|p| index[&(m.on_points[p], m.source.projection[p])])
        .collect();
    let mut image = canon.clone();
    image.sort_unstable();
    image.dedup();
    if image.len() != pulled.action.n_points() || canon.len() != image.len() {
        return Ok(false);
    }
    for p in 0..a.n_points() {
        for g in a.arrows_at(p) {
            if canon[a.act(g, p)] != pulled.action.act(g, canon[p]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The gauge groupoid `(P ×_M P)/G` of a free action.
#[derive(Debug, Clone)]
pub struct GaugeGroupoid {
    pub groupoid: Arc<FiniteGroupoid>,
    /// Smallest point of each orbit, one per object.
    pub orbit_reps: Vec<usize>,
    /// Orbit (object) of every point.
    pub orbit_of: Vec<ObjectId>,
    /// Smallest pair `(q, p)` in each arrow class; the arrow runs from the
    /// orbit of `p` to the orbit of `q`.
    pub arrow_reps: Vec<(usize, usize)>,
    class: HashMap<(usize, usize), ArrowId>,
}

impl GaugeGroupoid {
    /// The arrow `[q, p]`.
    pub fn class_of(&self, q: usize, p: usize) -> Option<ArrowId> {
        self.class.get(&(q, p)).copied()
    }
}

pub fn gauge_groupoid_of_action(act: &GroupoidAction) -> Result<GaugeGroupoid> {
    if let Some((arrow, element)) = act.free_violation() {
        return Err(Error::NotFree { arrow, element });
    }
    let a = act.to_left();
    let n = a.n_points();
    let labels = a.orbit_labels();
    let n_orbits = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
    let mut orbit_reps = vec![usize::MAX; n_orbits];
    for p in (0..n).rev() {
        orbit_reps[labels[p]] = p;
    }
    let mut class = HashMap::new();
    let mut arrow_reps = Vec::new();
    for q in 0..n {
        for p in 0..n {
            if a.moment()[q] != a.moment()[p] || class.contains_key(&(q, p)) {
                continue;
            }
            let id = arrow_reps.len();
            arrow_reps.push((q, p));
            for g in a.arrows_at(p) {
                class.insert((a.act(g, q), a.act(g, p)), id);
            }
        }
    }
    // The unique g with g·from = to, for points in one orbit.
    let transport = |from: usize, to: usize| -> usize {
        a.arrows_at(from)
            .into_iter()
            .find(|&g| a.act(g, from) == to)
            .expect("points share an orbit")
    };
    let groupoid = Arc::new(FiniteGroupoid::tabulate(
        n_orbits,
        arrow_reps.iter().map(|&(_, p)| labels[p]).collect(),
        arrow_reps.iter().map(|&(q, _)| labels[q]).collect(),
        orbit_reps.iter().map(|&x| class[&(x, x)]).collect(),
        arrow_reps.iter().map(|&(q, p)| class[&(p, q)]).collect(),
        |b, c| {
            // [r, q2] ∘ [q1, p]
            let (r, q2) = arrow_reps[b];
            let (q1, p) = arrow_reps[c];
            let g = transport(q2, q1);
            class[&(a.act(g, r), p)]
        },
    ));
    Ok(GaugeGroupoid {
        groupoid,
        orbit_reps,
        orbit_of: labels,
        arrow_reps,
        class,
    })
}
