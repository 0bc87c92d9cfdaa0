use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;
use crate::morphism::GroupoidMap;
use crate::{ArrowId, ObjectId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// An action of a groupoid on the points `0..n_points` along a moment map.
///
/// A left action defines `g·p` when `moment(p) = src(g)`, landing in the
/// fibre over `tgt(g)`. A right action defines `p·g` when
/// `moment(p) = tgt(g)`, landing over `src(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidAction {
    groupoid: Arc<FiniteGroupoid>,
    side: Side,
    moment: Vec<ObjectId>,
    // table[g * n_points + p]; usize::MAX where undefined
    table: Vec<usize>,
}

const UNDEFINED: usize = usize::MAX;

impl GroupoidAction {
    /// Builds an action from `[arrow, point, result]` triples, one for every
    /// pair where the action is defined, and checks the action laws.
    pub fn new(
        groupoid: Arc<FiniteGroupoid>,
        side: Side,
        moment: Vec<ObjectId>,
        triples: &[[usize; 3]],
    ) -> Result<Self> {
        let n = moment.len();
        for &m in &moment {
            groupoid.check_object(m)?;
        }
        let mut table = vec![UNDEFINED; groupoid.n_arrows() * n];
        for &[g, p, q] in triples {
            groupoid.check_arrow(g)?;
            for x in [p, q] {
                if x >= n {
                    return Err(Error::OutOfRange {
                        context: "carrier point",
                        id: x,
                        bound: n,
                    });
                }
            }
            if !acts_on(&groupoid, side, &moment, g, p) {
                return Err(Error::ActionLaw(format!(
                    "arrow {g} cannot act on point {p}: moment mismatch"
                )));
            }
            let slot = &mut table[g * n + p];
            if *slot != UNDEFINED {
                return Err(Error::ActionLaw(format!("duplicate entry for ({g}, {p})")));
            }
            *slot = q;
        }
        let a = GroupoidAction {
            groupoid,
            side,
            moment,
            table,
        };
        a.check()?;
        Ok(a)
    }

    pub(crate) fn from_fn_unchecked(
        groupoid: Arc<FiniteGroupoid>,
        side: Side,
        moment: Vec<ObjectId>,
        f: impl Fn(ArrowId, usize) -> usize,
    ) -> Self {
        let n = moment.len();
        let mut table = vec![UNDEFINED; groupoid.n_arrows() * n];
        for g in groupoid.arrows() {
            for p in 0..n {
                if acts_on(&groupoid, side, &moment, g, p) {
                    table[g * n + p] = f(g, p);
                }
            }
        }
        GroupoidAction {
            groupoid,
            side,
            moment,
            table,
        }
    }

    pub fn check(&self) -> Result<()> {
        let g = &self.groupoid;
        let n = self.n_points();
        for a in g.arrows() {
            for p in 0..n {
                let defined = acts_on(g, self.side, &self.moment, a, p);
                let v = self.table[a * n + p];
                if defined && v == UNDEFINED {
                    return Err(Error::ActionLaw(format!("missing entry for ({a}, {p})")));
                }
                if !defined {
                    continue;
                }
                let lands = match self.side {
                    Side::Left => g.tgt(a),
                    Side::Right => g.src(a),
                };
                if self.moment[v] != lands {
                    return Err(Error::ActionLaw(format!(
                        "({a}, {p}) lands outside the fibre over {lands}"
                    )));
                }
                if g.is_unit(a) && v != p {
                    return Err(Error::ActionLaw(format!("unit {a} moves point {p}")));
                }
            }
        }
        // compatibility with composition
        for a1 in g.arrows() {
            for &a2 in g.arrows_from(g.tgt(a1)) {
                let c = g.mul(a2, a1);
                for p in 0..n {
                    let ok = match self.side {
                        Side::Left => {
                            if self.moment[p] != g.src(a1) {
                                continue;
                            }
                            self.act(c, p) == self.act(a2, self.act(a1, p))
                        }
                        Side::Right => {
                            if self.moment[p] != g.tgt(a2) {
                                continue;
                            }
                            self.act(c, p) == self.act(a1, self.act(a2, p))
                        }
                    };
                    if !ok {
                        return Err(Error::ActionLaw(format!(
                            "composite {a2}∘{a1} acts inconsistently on point {p}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn groupoid(&self) -> &Arc<FiniteGroupoid> {
        &self.groupoid
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn moment(&self) -> &[ObjectId] {
        &self.moment
    }

    pub fn n_points(&self) -> usize {
        self.moment.len()
    }

    /// `g·p` for a left action or `p·g` for a right one. Panics where the
    /// action is undefined.
    pub fn act(&self, g: ArrowId, p: usize) -> usize {
        let v = self.table[g * self.n_points() + p];
        assert!(v != UNDEFINED, "arrow {g} does not act on point {p}");
        v
    }

    pub fn try_act(&self, g: ArrowId, p: usize) -> Option<usize> {
        if g >= self.groupoid.n_arrows() || p >= self.n_points() {
            return None;
        }
        let v = self.table[g * self.n_points() + p];
        (v != UNDEFINED).then_some(v)
    }

    /// Arrows acting on `p`.
    pub fn arrows_at(&self, p: usize) -> Vec<ArrowId> {
        let g = &self.groupoid;
        match self.side {
            Side::Left => g.arrows_from(self.moment[p]).to_vec(),
            Side::Right => g.arrows().filter(|&a| g.tgt(a) == self.moment[p]).collect(),
        }
    }

    /// `[arrow, point, result]` for every defined pair, sorted.
    pub fn triples(&self) -> Vec<[usize; 3]> {
        let n = self.n_points();
        let mut out = Vec::new();
        for g in self.groupoid.arrows() {
            for p in 0..n {
                let v = self.table[g * n + p];
                if v != UNDEFINED {
                    out.push([g, p, v]);
                }
            }
        }
        out
    }

    /// The same action seen from the other side: `g·p = p·g⁻¹`.
    pub fn opposite(&self) -> GroupoidAction {
        let side = match self.side {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        };
        let g = self.groupoid.clone();
        GroupoidAction::from_fn_unchecked(g.clone(), side, self.moment.clone(), |a, p| {
            self.act(g.inverse(a), p)
        })
    }

    pub fn to_left(&self) -> GroupoidAction {
        match self.side {
            Side::Left => self.clone(),
            Side::Right => self.opposite(),
        }
    }

    /// Stabilizer-free: only units fix points.
    pub fn is_free(&self) -> bool {
        self.free_violation().is_none()
    }

    /// A non-unit arrow fixing a point, if any.
    pub fn free_violation(&self) -> Option<(ArrowId, usize)> {
        let n = self.n_points();
        for g in self.groupoid.arrows() {
            if self.groupoid.is_unit(g) {
                continue;
            }
            for p in 0..n {
                if self.table[g * n + p] == p {
                    return Some((g, p));
                }
            }
        }
        None
    }

    /// Orbit label of each point, orbits numbered by smallest point.
    pub fn orbit_labels(&self) -> Vec<usize> {
        let n = self.n_points();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for p in 0..n {
            if label[p] != usize::MAX {
                continue;
            }
            label[p] = next;
            let mut stack = vec![p];
            while let Some(q) = stack.pop() {
                for g in self.arrows_at(q) {
                    let r = self.act(g, q);
                    if label[r] == usize::MAX {
                        label[r] = next;
                        stack.push(r);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Free, and the orbits are exactly the fibres of `projection`.
    pub fn is_principal(&self, projection: &[usize]) -> bool {
        projection.len() == self.n_points()
            && self.is_free()
            && same_partition(&self.orbit_labels(), projection)
    }

    /// Whether `ξ: (g, p) ↦ (g·p, p)` is a bijection onto the pairs with
    /// equal projection. Computed without reference to orbits.
    pub fn xi_is_bijective(&self, projection: &[usize]) -> bool {
        let n = self.n_points();
        if projection.len() != n {
            return false;
        }
        let mut hit = HashMap::new();
        for p in 0..n {
            for g in self.arrows_at(p) {
                let q = self.act(g, p);
                if projection[q] != projection[p] || hit.insert((q, p), g).is_some() {
                    return false;
                }
            }
        }
        let pairs = (0..n)
            .flat_map(|q| (0..n).map(move |p| (q, p)))
            .filter(|&(q, p)| projection[q] == projection[p])
            .count();
        hit.len() == pairs
    }

    /// Action groupoid `G ⋉ P` of the left version of this action with the
    /// action map onto `G`. Arrows are pairs `(g, p)` ordered
    /// lexicographically, running `p → g·p`.
    pub fn action_map(&self) -> ActionMap {
        let left = self.to_left();
        let g = &left.groupoid;
        let mut arrows = Vec::new();
        for a in g.arrows() {
            for p in 0..left.n_points() {
                if left.try_act(a, p).is_some() {
                    arrows.push((a, p));
                }
            }
        }
        let index: HashMap<_, _> = arrows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let n = left.n_points();
        let k = Arc::new(FiniteGroupoid::tabulate(
            n,
            arrows.iter().map(|r| r.1).collect(),
            arrows.iter().map(|&(a, p)| left.act(a, p)).collect(),
            (0..n).map(|p| index[&(g.unit(left.moment[p]), p)]).collect(),
            arrows
                .iter()
                .map(|&(a, p)| index[&(g.inverse(a), left.act(a, p))])
                .collect(),
            |b, a| {
                let (gb, _) = arrows[b];
                let (ga, p) = arrows[a];
                index[&(g.mul(gb, ga), p)]
            },
        ));
        let map = GroupoidMap::new_unchecked(
            k.clone(),
            g.clone(),
            left.moment.clone(),
            arrows.iter().map(|r| r.0).collect(),
        );
        ActionMap { groupoid: k, map, arrows }
    }
}

fn acts_on(g: &FiniteGroupoid, side: Side, moment: &[ObjectId], a: ArrowId, p: usize) -> bool {
    match side {
        Side::Left => moment[p] == g.src(a),
        Side::Right => moment[p] == g.tgt(a),
    }
}

/// Whether two labelings of the same set induce the same partition.
pub(crate) fn same_partition(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut ab = HashMap::new();
    let mut ba = HashMap::new();
    for (&x, &y) in a.iter().zip(b) {
        if *ab.entry(x).or_insert(y) != y || *ba.entry(y).or_insert(x) != x {
            return false;
        }
    }
    true
}

/// The action map `G ⋉ P → G` of an action.
#[derive(Debug, Clone)]
pub struct ActionMap {
    pub groupoid: Arc<FiniteGroupoid>,
    pub map: GroupoidMap,
    /// `(g, p)` for every arrow of the action groupoid.
    pub arrows: Vec<(ArrowId, usize)>,
}

pub fn action_to_action_map(a: &GroupoidAction) -> ActionMap {
    a.action_map()
}

/// Recovers the left action from a map `m: K → G` whose source square is a
/// set pullback: for every object `p` of `K` and arrow `g` out of `m(p)`
/// there is exactly one arrow `k` out of `p` with `m(k) = g`, and
/// `g·p = tgt(k)`.
pub fn action_map_to_action(m: &GroupoidMap) -> Result<GroupoidAction> {
    let k = m.domain();
    let g = m.codomain();
    let mut triples = Vec::new();
    for p in k.objects() {
        let mut lifts: HashMap<ArrowId, ArrowId> = HashMap::new();
        for &a in k.arrows_from(p) {
            if lifts.insert(m.arrow(a), a).is_some() {
                return Err(Error::NotActionMap(format!(
                    "two arrows out of {p} map to arrow {}",
                    m.arrow(a)
                )));
            }
        }
        for &b in g.arrows_from(m.object(p)) {
            match lifts.get(&b) {
                Some(&a) => triples.push([b, p, k.tgt(a)]),
                None => {
                    return Err(Error::NotActionMap(format!(
                        "arrow {b} has no lift at object {p}"
                    )))
                }
            }
        }
    }
    GroupoidAction::new(g.clone(), Side::Left, m.on_objects().to_vec(), &triples)
}
