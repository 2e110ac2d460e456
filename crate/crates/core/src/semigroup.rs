//! Finite semigroups given by Cayley tables, and the unit/factorization
//! class predicates.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// Dense 0-based element index into a carrier.
pub type ElementId = usize;

/// A finite semigroup on `0..order`, stored as a row-major Cayley table
/// (`table[x * order + y] = x·y`). Associativity is checked on construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<ElementId>,
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSemigroup({}; ", self.order)?;
        for (i, row) in self.table.chunks(self.order).enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, ")")
    }
}

/// Membership of a semigroup in each class of the unit/factorization
/// hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassReport {
    pub local_units: bool,
    pub weak_local_units: bool,
    pub common_weak_local_units: bool,
    pub firm: bool,
    pub factorizable: bool,
}

impl ClassReport {
    /// First implication of the chain `LU ⇒ WLU ⇒ firm ⇒ factorizable`,
    /// `CWLU ⇒ firm` that fails, if any.
    pub fn chain_violation(&self) -> Option<&'static str> {
        if self.local_units && !self.weak_local_units {
            Some("local units without weak local units")
        } else if self.weak_local_units && !self.firm {
            Some("weak local units but not firm")
        } else if self.firm && !self.factorizable {
            Some("firm but not factorizable")
        } else if self.common_weak_local_units && !self.firm {
            Some("common weak local units but not firm")
        } else {
            None
        }
    }
}

impl FiniteSemigroup {
    /// Validates a row-major table of `order * order` entries.
    pub fn new(order: usize, table: Vec<ElementId>) -> Result<Self> {
        let sg = Self::new_unchecked_assoc(order, table)?;
        if let Some((x, y, z)) = sg.associativity_violation() {
            return Err(Error::AssociativityViolation { x, y, z });
        }
        Ok(sg)
    }

    /// Builds from a vector of rows.
    pub fn from_rows(rows: &[Vec<ElementId>]) -> Result<Self> {
        let order = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != order) {
            return Err(Error::TableShape {
                expected: order,
                found: bad.len(),
            });
        }
        Self::new(order, rows.concat())
    }

    /// Shape and range checks only.
    fn new_unchecked_assoc(order: usize, table: Vec<ElementId>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptySemigroup);
        }
        if table.len() != order * order {
            return Err(Error::TableShape {
                expected: order * order,
                found: table.len(),
            });
        }
        if let Some(&value) = table.iter().find(|&&v| v >= order) {
            return Err(Error::OutOfRange { value, bound: order });
        }
        Ok(Self { order, table })
    }

    fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.table[x * self.order + y]
    }

    /// `x·y·z`.
    #[inline]
    pub fn mul3(&self, x: ElementId, y: ElementId, z: ElementId) -> ElementId {
        self.mul(self.mul(x, y), z)
    }

    pub fn table(&self) -> &[ElementId] {
        &self.table
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ElementId]> {
        self.table.chunks(self.order)
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    pub fn is_idempotent(&self, e: ElementId) -> bool {
        self.mul(e, e) == e
    }

    /// `E(S)` in increasing order.
    pub fn idempotents(&self) -> Vec<ElementId> {
        self.elements().filter(|&e| self.is_idempotent(e)).collect()
    }

    /// `t` is regular when `t = t·x·t` for some `x`.
    pub fn is_regular(&self, t: ElementId) -> bool {
        self.elements().any(|x| self.mul3(t, x, t) == t)
    }

    /// A two-sided identity, if one exists.
    pub fn identity(&self) -> Option<ElementId> {
        self.elements()
            .find(|&e| self.elements().all(|s| self.mul(e, s) == s && self.mul(s, e) == s))
    }

    pub fn is_monoid(&self) -> bool {
        self.identity().is_some()
    }

    pub fn is_left_unit_for(&self, u: ElementId, s: ElementId) -> bool {
        self.mul(u, s) == s
    }

    pub fn is_right_unit_for(&self, v: ElementId, s: ElementId) -> bool {
        self.mul(s, v) == s
    }

    /// Every `s` has idempotents `e, f` with `f·s = s = s·e`.
    pub fn has_local_units(&self) -> bool {
        let idem = self.idempotents();
        self.elements().all(|s| {
            idem.iter().any(|&f| self.is_left_unit_for(f, s)) && idem.iter().any(|&e| self.is_right_unit_for(e, s))
        })
    }

    /// Every `s` has some `u, v` with `u·s = s = s·v`.
    pub fn has_weak_local_units(&self) -> bool {
        self.elements().all(|s| {
            self.elements().any(|u| self.is_left_unit_for(u, s))
                && self.elements().any(|v| self.is_right_unit_for(v, s))
        })
    }

    /// Every pair `s, s'` has a shared left unit and a shared right unit.
    pub fn has_common_weak_local_units(&self) -> bool {
        self.common_weak_local_units_violation().is_none()
    }

    /// A pair with no common left or no common right unit.
    pub fn common_weak_local_units_violation(&self) -> Option<(ElementId, ElementId)> {
        for s in self.elements() {
            for t in s..self.order {
                let left = self
                    .elements()
                    .any(|u| self.is_left_unit_for(u, s) && self.is_left_unit_for(u, t));
                let right = self
                    .elements()
                    .any(|v| self.is_right_unit_for(v, s) && self.is_right_unit_for(v, t));
                if !(left && right) {
                    return Some((s, t));
                }
            }
        }
        None
    }

    /// `SS = S`.
    pub fn is_factorizable(&self) -> bool {
        self.first_non_product().is_none()
    }

    /// Least element not of the form `x·y`.
    pub fn first_non_product(&self) -> Option<ElementId> {
        let products: BTreeSet<_> = self.table.iter().copied().collect();
        self.elements().find(|s| !products.contains(s))
    }

    /// Firmness: `S ⊗_S S → S` is bijective.
    pub fn is_firm(&self) -> bool {
        crate::tensor::is_firm(self)
    }

    pub fn classify(&self) -> ClassReport {
        ClassReport {
            local_units: self.has_local_units(),
            weak_local_units: self.has_weak_local_units(),
            common_weak_local_units: self.has_common_weak_local_units(),
            firm: self.is_firm(),
            factorizable: self.is_factorizable(),
        }
    }

    /// Least subset closed under the product that contains `generators`.
    pub fn subsemigroup_closure(&self, generators: &[ElementId]) -> Result<BTreeSet<ElementId>> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&value) = generators.iter().find(|&&g| g >= self.order) {
            return Err(Error::OutOfRange {
                value,
                bound: self.order,
            });
        }
        let mut set: BTreeSet<_> = generators.iter().copied().collect();
        loop {
            let new: Vec<_> = set
                .iter()
                .flat_map(|&x| set.iter().map(move |&y| (x, y)))
                .map(|(x, y)| self.mul(x, y))
                .filter(|p| !set.contains(p))
                .collect();
            if new.is_empty() {
                return Ok(set);
            }
            set.extend(new);
        }
    }

    /// `{a·s·b | s ∈ S}`.
    pub fn sandwich_set(&self, a: ElementId, b: ElementId) -> BTreeSet<ElementId> {
        self.elements().map(|s| self.mul3(a, s, b)).collect()
    }

    /// `a ∈ S·a`.
    pub fn in_left_ideal_of_itself(&self, a: ElementId) -> bool {
        self.elements().any(|x| self.mul(x, a) == a)
    }

    /// `b ∈ b·S`.
    pub fn in_right_ideal_of_itself(&self, b: ElementId) -> bool {
        self.elements().any(|x| self.mul(b, x) == b)
    }

    /// Relabels elements: new element `perm[x]` plays the role of old `x`.
    pub fn relabel(&self, perm: &[ElementId]) -> Self {
        let n = self.order;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.mul(x, y)];
            }
        }
        Self { order: n, table }
    }

    /// Lexicographically least table over all relabelings.
    pub fn canonical_form(&self) -> Self {
        let mut best = self.clone();
        let mut perm: Vec<_> = self.elements().collect();
        for_each_permutation(&mut perm, 0, &mut |p| {
            let candidate = self.relabel(p);
            if candidate.table < best.table {
                best = candidate;
            }
        });
        best
    }

    /// A bijection `f` with `f(xy) = f(x)f(y)`, found by backtracking.
    pub fn find_isomorphism(&self, other: &Self) -> Option<Vec<ElementId>> {
        if self.order != other.order {
            return None;
        }
        if self.idempotents().len() != other.idempotents().len() {
            return None;
        }
        let mut map = vec![usize::MAX; self.order];
        let mut used = vec![false; self.order];
        if self.extend_isomorphism(other, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.find_isomorphism(other).is_some()
    }

    fn extend_isomorphism(&self, other: &Self, next: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if next == self.order {
            return true;
        }
        for image in 0..other.order {
            if used[image] {
                continue;
            }
            map[next] = image;
            let consistent = (0..=next).all(|x| {
                [(x, next), (next, x)].iter().all(|&(a, b)| {
                    let p = self.mul(a, b);
                    p > next || map[p] == other.mul(map[a], map[b])
                })
            }) && (0..next).all(|x| {
                // products of earlier elements landing on `next`
                (0..next).all(|y| self.mul(x, y) != next || other.mul(map[x], map[y]) == image)
            });
            if consistent {
                used[image] = true;
                if self.extend_isomorphism(other, next + 1, map, used) {
                    return true;
                }
                used[image] = false;
            }
            map[next] = usize::MAX;
        }
        false
    }
}

fn for_each_permutation(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_permutation(items, k + 1, f);
        items.swap(k, i);
    }
}
