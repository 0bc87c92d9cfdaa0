//! Finite groups given by multiplication tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group on elements `0..order`, `mul(a, b) = a·b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Group {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

/// Serialized form: the Cayley table as rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub table: Vec<Vec<usize>>,
}

impl Group {
    /// Validates a Cayley table `rows[a][b] = a·b`.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        let mut table = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::GroupLaw(format!("row {a} has length {}", row.len())));
            }
            for &c in row {
                if c >= n {
                    return Err(Error::OutOfRange {
                        context: "group table entry",
                        id: c,
                        bound: n,
                    });
                }
            }
            table.extend_from_slice(row);
        }
        if n == 0 {
            return Err(Error::GroupLaw("a group has at least one element".into()));
        }
        let at = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| Error::GroupLaw("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for (a, slot) in inverse.iter_mut().enumerate() {
            *slot = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| Error::GroupLaw(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::GroupLaw(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(Group {
            order: n,
            table,
            identity,
            inverse,
        })
    }

    /// Builds a group from a multiplication already known to satisfy the axioms.
    pub(crate) fn from_fn_unchecked(order: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(mul(a, b));
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| table[e * order + a] == a))
            .expect("group has an identity");
        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| table[a * order + b] == identity)
                    .expect("group has inverses")
            })
            .collect();
        Group {
            order,
            table,
            identity,
            inverse,
        }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z/n` with `a·b = (a + b) mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        Self::from_fn_unchecked(n, |a, b| (a + b) % n)
    }

    /// The symmetric group on `n` letters, elements listed in lexicographic
    /// order of their one-line notation; `(p·q)(i) = p(q(i))`.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        Self::from_fn_unchecked(perms.len(), |a, b| {
            let comp: Vec<usize> = (0..n).map(|i| perms[a][perms[b][i]]).collect();
            index(&comp)
        })
    }

    /// Dihedral group of order `2n`: element `r^k s^e` is `2k + e`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n > 0);
        Self::from_fn_unchecked(2 * n, |a, b| {
            let (k1, e1) = (a / 2, a % 2);
            let (k2, e2) = (b / 2, b % 2);
            // s r^k = r^{-k} s
            let k = if e1 == 0 { (k1 + k2) % n } else { (k1 + n - k2) % n };
            2 * k + (e1 ^ e2)
        })
    }

    /// Direct product, element `(a, b)` is `a * |other| + b`.
    pub fn product(&self, other: &Group) -> Self {
        let m = other.order;
        Self::from_fn_unchecked(self.order * m, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != self.identity {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn to_table(&self) -> GroupTable {
        GroupTable { table: self.rows() }
    }

    /// Closure of a set of elements under multiplication.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(a) = stack.pop() {
            for &s in gens {
                let b = self.mul(a, s);
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen
    }

    /// Checks the left action laws for `action[g][x] = g·x`.
    pub fn check_action(&self, action: &[Vec<usize>]) -> Result<usize> {
        if action.len() != self.order {
            return Err(Error::ActionLaw(format!(
                "{} rows for a group of order {}",
                action.len(),
                self.order
            )));
        }
        let n_points = action[0].len();
        for (g, row) in action.iter().enumerate() {
            if row.len() != n_points {
                return Err(Error::ActionLaw(format!("row {g} has length {}", row.len())));
            }
            if let Some(&y) = row.iter().find(|&&y| y >= n_points) {
                return Err(Error::OutOfRange {
                    context: "action value",
                    id: y,
                    bound: n_points,
                });
            }
        }
        for x in 0..n_points {
            if action[self.identity][x] != x {
                return Err(Error::ActionLaw(format!("identity moves point {x}")));
            }
            for h in 0..self.order {
                for g in 0..self.order {
                    if action[h][action[g][x]] != action[self.mul(h, g)][x] {
                        return Err(Error::ActionLaw(format!(
                            "{h}·({g}·{x}) != ({h}{g})·{x}"
                        )));
                    }
                }
            }
        }
        Ok(n_points)
    }
}

impl TryFrom<&GroupTable> for Group {
    type Error = Error;

    fn try_from(t: &GroupTable) -> Result<Self> {
        Group::from_rows(&t.table)
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// `S_n` acting on `0..n` by evaluation, as `action[g][x]`.
pub fn natural_action(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
}

/// A group acting on itself by left multiplication.
pub fn left_regular_action(g: &Group) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|a| (0..g.order()).map(|b| g.mul(a, b)).collect())
        .collect()
}

/// The action on `n_points` where every element acts as the identity.
pub fn trivial_action(g: &Group, n_points: usize) -> Vec<Vec<usize>> {
    vec![(0..n_points).collect(); g.order()]
}
