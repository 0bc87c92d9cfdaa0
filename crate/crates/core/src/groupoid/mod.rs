//! Finite groupoids stored as explicit tables.
//!
//! Objects are `0..n_objects` and arrows are `0..n_arrows`. Composition is
//! stored only for composable pairs, read right to left: `compose(g2, g1)`
//! is `g2 ∘ g1`, defined when `src(g2) == tgt(g1)`.

mod analysis;
mod construct;

pub use analysis::*;
pub use construct::*;

use serde::{Deserialize, Serialize};

use crate::error::{Error, LawViolation, Result};
use crate::{ArrowId, ObjectId};

/// Cap on the number of law violations collected in one report.
const MAX_VIOLATIONS: usize = 16;

/// One arrow record of the interchange format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArrowRecord {
    pub id: ArrowId,
    pub src: ObjectId,
    pub tgt: ObjectId,
}

/// Raw, unvalidated groupoid tables in the interchange layout.
///
/// `mul` rows are `[g2, g1, g2∘g1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupoidTables {
    pub n_objects: usize,
    pub arrows: Vec<ArrowRecord>,
    pub units: Vec<ArrowId>,
    pub inv: Vec<ArrowId>,
    pub mul: Vec<[ArrowId; 3]>,
}

/// A validated finite groupoid.
///
/// Values are immutable once built. Equality is equality of tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroupoid {
    n_objects: usize,
    src: Vec<ObjectId>,
    tgt: Vec<ObjectId>,
    units: Vec<ArrowId>,
    inv: Vec<ArrowId>,
    // Arrows leaving each object, ascending.
    outgoing: Vec<Vec<ArrowId>>,
    // Position of each arrow inside `outgoing[src(g)]`.
    out_pos: Vec<usize>,
    // Row of g1 starts at row_start[g1] and has one slot per arrow leaving tgt(g1).
    row_start: Vec<usize>,
    mul: Vec<ArrowId>,
}

impl FiniteGroupoid {
    /// Checks raw tables and builds the groupoid, reporting every failed law.
    pub fn from_tables(raw: &GroupoidTables) -> Result<Self> {
        let n = raw.arrows.len();
        let n_objects = raw.n_objects;
        let mut src = vec![usize::MAX; n];
        let mut tgt = vec![usize::MAX; n];
        for rec in &raw.arrows {
            if rec.id >= n {
                return Err(Error::OutOfRange {
                    context: "arrow id",
                    id: rec.id,
                    bound: n,
                });
            }
            if src[rec.id] != usize::MAX {
                return Err(Error::Malformed(format!("arrow id {} listed twice", rec.id)));
            }
            for (id, ctx) in [(rec.src, "arrow source"), (rec.tgt, "arrow target")] {
                if id >= n_objects {
                    return Err(Error::OutOfRange {
                        context: ctx,
                        id,
                        bound: n_objects,
                    });
                }
            }
            src[rec.id] = rec.src;
            tgt[rec.id] = rec.tgt;
        }
        if raw.units.len() != n_objects {
            return Err(Error::Malformed(format!(
                "{} units listed for {} objects",
                raw.units.len(),
                n_objects
            )));
        }
        if raw.inv.len() != n {
            return Err(Error::Malformed(format!(
                "{} inverses listed for {} arrows",
                raw.inv.len(),
                n
            )));
        }
        for (&id, ctx) in raw
            .units
            .iter()
            .map(|u| (u, "unit"))
            .chain(raw.inv.iter().map(|i| (i, "inverse")))
        {
            if id >= n {
                return Err(Error::OutOfRange {
                    context: ctx,
                    id,
                    bound: n,
                });
            }
        }

        let mut g = Self::skeleton_tables(n_objects, src, tgt, raw.units.clone(), raw.inv.clone());
        let mut filled = vec![false; g.mul.len()];
        for &[g2, g1, r] in &raw.mul {
            for id in [g2, g1, r] {
                if id >= n {
                    return Err(Error::OutOfRange {
                        context: "composition row",
                        id,
                        bound: n,
                    });
                }
            }
            if g.src[g2] != g.tgt[g1] {
                return Err(Error::CompositionTable(format!(
                    "row [{g2}, {g1}, {r}] is listed but {g2}, {g1} are not composable"
                )));
            }
            let slot = g.slot(g2, g1);
            if filled[slot] {
                return Err(Error::CompositionTable(format!(
                    "pair ({g2}, {g1}) listed twice"
                )));
            }
            filled[slot] = true;
            g.mul[slot] = r;
        }
        if let Some(slot) = filled.iter().position(|f| !f) {
            let (g2, g1) = g.pair_of_slot(slot);
            return Err(Error::CompositionTable(format!(
                "composable pair ({g2}, {g1}) has no row"
            )));
        }
        g.check_laws()?;
        Ok(g)
    }

    /// Tabulates a groupoid from structure maps and a composition function.
    ///
    /// No laws are checked; constructors in this crate go through here and
    /// their outputs are verified against [`FiniteGroupoid::check_laws`] in
    /// tests.
    pub(crate) fn tabulate(
        n_objects: usize,
        src: Vec<ObjectId>,
        tgt: Vec<ObjectId>,
        units: Vec<ArrowId>,
        inv: Vec<ArrowId>,
        compose: impl Fn(ArrowId, ArrowId) -> ArrowId,
    ) -> Self {
        let mut g = Self::skeleton_tables(n_objects, src, tgt, units, inv);
        for g1 in 0..g.n_arrows() {
            let start = g.row_start[g1];
            let next = &g.outgoing[g.tgt[g1]];
            for (k, &g2) in next.iter().enumerate() {
                g.mul[start + k] = compose(g2, g1);
            }
        }
        g
    }

    fn skeleton_tables(
        n_objects: usize,
        src: Vec<ObjectId>,
        tgt: Vec<ObjectId>,
        units: Vec<ArrowId>,
        inv: Vec<ArrowId>,
    ) -> Self {
        let n = src.len();
        let mut outgoing = vec![Vec::new(); n_objects];
        let mut out_pos = vec![0; n];
        for (a, &s) in src.iter().enumerate() {
            out_pos[a] = outgoing[s].len();
            outgoing[s].push(a);
        }
        let mut row_start = Vec::with_capacity(n);
        let mut total = 0;
        for &t in &tgt {
            row_start.push(total);
            total += outgoing[t].len();
        }
        FiniteGroupoid {
            n_objects,
            src,
            tgt,
            units,
            inv,
            outgoing,
            out_pos,
            row_start,
            mul: vec![usize::MAX; total],
        }
    }

    fn slot(&self, g2: ArrowId, g1: ArrowId) -> usize {
        self.row_start[g1] + self.out_pos[g2]
    }

    fn pair_of_slot(&self, slot: usize) -> (ArrowId, ArrowId) {
        let g1 = self.row_start.partition_point(|&s| s <= slot) - 1;
        let g2 = self.outgoing[self.tgt[g1]][slot - self.row_start[g1]];
        (g2, g1)
    }

    /// Checks all groupoid laws on the stored tables.
    pub fn check_laws(&self) -> Result<()> {
        let mut found = Vec::new();
        let mut push = |v: LawViolation| {
            if found.len() < MAX_VIOLATIONS {
                found.push(v);
            }
        };
        let n = self.n_arrows();
        for x in 0..self.n_objects {
            let u = self.units[x];
            if self.src[u] != x || self.tgt[u] != x {
                push(LawViolation::UnitNotLoop { object: x, unit: u });
            }
        }
        for g1 in 0..n {
            for &g2 in &self.outgoing[self.tgt[g1]] {
                let r = self.mul[self.slot(g2, g1)];
                if self.src[r] != self.src[g1] || self.tgt[r] != self.tgt[g2] {
                    push(LawViolation::CompositeEndpoints { g2, g1 });
                }
            }
        }
        for g in 0..n {
            let us = self.units[self.src[g]];
            let ut = self.units[self.tgt[g]];
            if self.try_mul(g, us) != Some(g) || self.try_mul(ut, g) != Some(g) {
                push(LawViolation::UnitLaw { arrow: g });
            }
        }
        for g in 0..n {
            let i = self.inv[g];
            let right = self.try_mul(g, i);
            let left = self.try_mul(i, g);
            if right != Some(self.units[self.tgt[g]]) || left != Some(self.units[self.src[g]]) {
                push(LawViolation::InverseLaw { arrow: g });
            }
        }
        for g1 in 0..n {
            for &g2 in &self.outgoing[self.tgt[g1]] {
                let g21 = self.mul[self.slot(g2, g1)];
                for &g3 in &self.outgoing[self.tgt[g2]] {
                    let lhs = self.try_mul(g3, g21);
                    let rhs = self
                        .try_mul(g3, g2)
                        .and_then(|g32| self.try_mul(g32, g1));
                    if lhs.is_none() || lhs != rhs {
                        push(LawViolation::Associativity { g3, g2, g1 });
                    }
                }
            }
        }
        if found.is_empty() {
            Ok(())
        } else {
            Err(Error::Laws(found))
        }
    }

    fn try_mul(&self, g2: ArrowId, g1: ArrowId) -> Option<ArrowId> {
        if g2 < self.n_arrows() && g1 < self.n_arrows() && self.src[g2] == self.tgt[g1] {
            Some(self.mul[self.slot(g2, g1)])
        } else {
            None
        }
    }

    /// Exports the canonical interchange tables (rows sorted by `(g2, g1)`).
    pub fn to_tables(&self) -> GroupoidTables {
        let arrows = (0..self.n_arrows())
            .map(|id| ArrowRecord {
                id,
                src: self.src[id],
                tgt: self.tgt[id],
            })
            .collect();
        let mut mul = Vec::with_capacity(self.mul.len());
        for g2 in 0..self.n_arrows() {
            let s = self.src[g2];
            for g1 in (0..self.n_arrows()).filter(|&g1| self.tgt[g1] == s) {
                mul.push([g2, g1, self.mul(g2, g1)]);
            }
        }
        GroupoidTables {
            n_objects: self.n_objects,
            arrows,
            units: self.units.clone(),
            inv: self.inv.clone(),
            mul,
        }
    }

    pub fn n_objects(&self) -> usize {
        self.n_objects
    }

    pub fn n_arrows(&self) -> usize {
        self.src.len()
    }

    pub fn objects(&self) -> std::ops::Range<ObjectId> {
        0..self.n_objects
    }

    pub fn arrows(&self) -> std::ops::Range<ArrowId> {
        0..self.n_arrows()
    }

    pub fn src(&self, g: ArrowId) -> ObjectId {
        self.src[g]
    }

    pub fn tgt(&self, g: ArrowId) -> ObjectId {
        self.tgt[g]
    }

    pub fn unit(&self, x: ObjectId) -> ArrowId {
        self.units[x]
    }

    pub fn inverse(&self, g: ArrowId) -> ArrowId {
        self.inv[g]
    }

    pub fn is_unit(&self, g: ArrowId) -> bool {
        self.units[self.src[g]] == g
    }

    /// `g2 ∘ g1`, or an error when the pair is not composable.
    pub fn compose(&self, g2: ArrowId, g1: ArrowId) -> Result<ArrowId> {
        for g in [g2, g1] {
            self.check_arrow(g)?;
        }
        self.try_mul(g2, g1)
            .ok_or(Error::NotComposable { g2, g1 })
    }

    /// Composition on a pair already known to be composable.
    #[inline]
    pub(crate) fn mul(&self, g2: ArrowId, g1: ArrowId) -> ArrowId {
        debug_assert_eq!(self.src[g2], self.tgt[g1], "compose({g2}, {g1})");
        self.mul[self.slot(g2, g1)]
    }

    /// Arrows with source `x`, ascending.
    pub fn arrows_from(&self, x: ObjectId) -> &[ArrowId] {
        &self.outgoing[x]
    }

    /// `G(y, x)`: the arrows `y ← x`, ascending.
    pub fn hom(&self, y: ObjectId, x: ObjectId) -> Vec<ArrowId> {
        self.outgoing[x]
            .iter()
            .copied()
            .filter(|&g| self.tgt[g] == y)
            .collect()
    }

    /// Number of arrows `y ← x` for every pair, indexed `[y][x]`.
    pub fn hom_sizes(&self) -> Vec<Vec<usize>> {
        let mut sizes = vec![vec![0; self.n_objects]; self.n_objects];
        for g in self.arrows() {
            sizes[self.tgt[g]][self.src[g]] += 1;
        }
        sizes
    }

    pub(crate) fn check_object(&self, x: ObjectId) -> Result<()> {
        if x < self.n_objects {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                context: "object id",
                id: x,
                bound: self.n_objects,
            })
        }
    }

    pub(crate) fn check_arrow(&self, g: ArrowId) -> Result<()> {
        if g < self.n_arrows() {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                context: "arrow id",
                id: g,
                bound: self.n_arrows(),
            })
        }
    }

    /// Order of an arrow that is a loop, `None` otherwise.
    pub fn loop_order(&self, g: ArrowId) -> Option<usize> {
        if self.src[g] != self.tgt[g] {
            return None;
        }
        let unit = self.units[self.src[g]];
        let mut k = 1;
        let mut p = g;
        while p != unit {
            p = self.mul(g, p);
            k += 1;
        }
        Some(k)
    }
}
