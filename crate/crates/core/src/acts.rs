//! Finite left, right and bi-acts over Cayley-table semigroups, act
//! morphisms, and brute-force endomorphism enumeration.

use std::sync::Arc;

use crate::{saturating_pow, ElementId, Error, FiniteSemigroup, Result, SearchLimits};

/// Operations shared by left, right and bi-acts.
///
/// An act is viewed as a family of carrier transformations, one per acting
/// element; morphisms are exactly the maps commuting with all of them.
pub trait Act {
    fn carrier_size(&self) -> usize;

    /// Number of acting elements (for biacts, left ones first).
    fn operator_count(&self) -> usize;

    /// The transformation `x ↦ op·x` (or `x·op`) of the carrier.
    fn operator(&self, op: usize) -> &[usize];

    /// Whether every element is reachable by acting, on each side.
    fn is_unitary(&self) -> bool;

    /// Both acts are over the same semigroup(s).
    fn same_semigroups(&self, other: &Self) -> bool;

    /// First `(a, op)` with `f(op(a)) != op(f(a))`.
    fn equivariance_violation(&self, target: &Self, map: &[usize]) -> Option<(usize, usize)> {
        for op in 0..self.operator_count() {
            let (src, dst) = (self.operator(op), target.operator(op));
            for a in 0..self.carrier_size() {
                if map[src[a]] != dst[map[a]] {
                    return Some((a, op));
                }
            }
        }
        None
    }
}

fn same(a: &Arc<FiniteSemigroup>, b: &Arc<FiniteSemigroup>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn check_range(values: &[usize], bound: usize) -> Result<()> {
    match values.iter().find(|&&v| v >= bound) {
        Some(&value) => Err(Error::OutOfRange { value, bound }),
        None => Ok(()),
    }
}

fn image_is_everything(size: usize, ops: &[usize]) -> bool {
    let mut hit = vec![false; size];
    for &x in ops {
        hit[x] = true;
    }
    hit.into_iter().all(|h| h)
}

/// A right act `A_S`, stored operator-major: `ops[s * size + a] = a·s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightAct {
    semigroup: Arc<FiniteSemigroup>,
    size: usize,
    ops: Vec<usize>,
}

impl RightAct {
    /// `table` is row-major with one row per carrier element:
    /// `table[a * |S| + s] = a·s`.
    pub fn new(semigroup: Arc<FiniteSemigroup>, size: usize, table: &[usize]) -> Result<Self> {
        let n = semigroup.order();
        if table.len() != size * n {
            return Err(Error::TableShape {
                expected: size * n,
                found: table.len(),
            });
        }
        check_range(table, size)?;
        let mut ops = vec![0; size * n];
        for a in 0..size {
            for s in 0..n {
                ops[s * size + a] = table[a * n + s];
            }
        }
        Self::from_ops(semigroup, size, ops)
    }

    /// Builds from a closure `(a, s) ↦ a·s`.
    pub fn from_fn(
        semigroup: Arc<FiniteSemigroup>,
        size: usize,
        f: impl Fn(usize, ElementId) -> usize,
    ) -> Result<Self> {
        let n = semigroup.order();
        let ops: Vec<_> = (0..n)
            .flat_map(|s| (0..size).map(move |a| (a, s)))
            .map(|(a, s)| f(a, s))
            .collect();
        check_range(&ops, size)?;
        Self::from_ops(semigroup, size, ops)
    }

    fn from_ops(semigroup: Arc<FiniteSemigroup>, size: usize, ops: Vec<usize>) -> Result<Self> {
        let act = Self { semigroup, size, ops };
        let s = &act.semigroup;
        for a in 0..size {
            for x in s.elements() {
                let ax = act.act(a, x);
                for y in s.elements() {
                    if act.act(ax, y) != act.act(a, s.mul(x, y)) {
                        return Err(Error::CompatibilityViolation { a, s: x, t: y });
                    }
                }
            }
        }
        Ok(act)
    }

    /// `S_S`.
    pub fn regular(semigroup: Arc<FiniteSemigroup>) -> Self {
        let n = semigroup.order();
        let s = semigroup.clone();
        Self::from_fn(semigroup, n, |a, x| s.mul(a, x)).expect("regular act is valid")
    }

    #[inline]
    pub fn act(&self, a: usize, s: ElementId) -> usize {
        self.ops[s * self.size + a]
    }

    pub fn semigroup(&self) -> &Arc<FiniteSemigroup> {
        &self.semigroup
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Row-major table `a * |S| + s ↦ a·s`, as read and written by the
    /// text format.
    pub fn table(&self) -> Vec<usize> {
        let n = self.semigroup.order();
        (0..self.size)
            .flat_map(|a| (0..n).map(move |s| (a, s)))
            .map(|(a, s)| self.act(a, s))
            .collect()
    }
}

impl Act for RightAct {
    fn carrier_size(&self) -> usize {
        self.size
    }
    fn operator_count(&self) -> usize {
        self.semigroup.order()
    }
    fn operator(&self, op: usize) -> &[usize] {
        &self.ops[op * self.size..(op + 1) * self.size]
    }
    fn is_unitary(&self) -> bool {
        image_is_everything(self.size, &self.ops)
    }
    fn same_semigroups(&self, other: &Self) -> bool {
        same(&self.semigroup, &other.semigroup)
    }
}

/// A left act `_S A`, stored as `ops[s * size + a] = s·a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftAct {
    semigroup: Arc<FiniteSemigroup>,
    size: usize,
    ops: Vec<usize>,
}

impl LeftAct {
    /// `table` is row-major with one row per semigroup element:
    /// `table[s * size + a] = s·a`.
    pub fn new(semigroup: Arc<FiniteSemigroup>, size: usize, table: &[usize]) -> Result<Self> {
        let n = semigroup.order();
        if table.len() != size * n {
            return Err(Error::TableShape {
                expected: size * n,
                found: table.len(),
            });
        }
        check_range(table, size)?;
        Self::from_ops(semigroup, size, table.to_vec())
    }

    pub fn from_fn(
        semigroup: Arc<FiniteSemigroup>,
        size: usize,
        f: impl Fn(ElementId, usize) -> usize,
    ) -> Result<Self> {
        let n = semigroup.order();
        let ops: Vec<_> = (0..n)
            .flat_map(|s| (0..size).map(move |a| (s, a)))
            .map(|(s, a)| f(s, a))
            .collect();
        check_range(&ops, size)?;
        Self::from_ops(semigroup, size, ops)
    }

    fn from_ops(semigroup: Arc<FiniteSemigroup>, size: usize, ops: Vec<usize>) -> Result<Self> {
        let act = Self { semigroup, size, ops };
        let s = &act.semigroup;
        for a in 0..size {
            for y in s.elements() {
                let ya = act.act(y, a);
                for x in s.elements() {
                    if act.act(x, ya) != act.act(s.mul(x, y), a) {
                        return Err(Error::CompatibilityViolation { a, s: x, t: y });
                    }
                }
            }
        }
        Ok(act)
    }

    /// `_S S`.
    pub fn regular(semigroup: Arc<FiniteSemigroup>) -> Self {
        let n = semigroup.order();
        let s = semigroup.clone();
        Self::from_fn(semigroup, n, |x, a| s.mul(x, a)).expect("regular act is valid")
    }

    #[inline]
    pub fn act(&self, s: ElementId, a: usize) -> usize {
        self.ops[s * self.size + a]
    }

    pub fn semigroup(&self) -> &Arc<FiniteSemigroup> {
        &self.semigroup
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Row-major table `s * size + a ↦ s·a`.
    pub fn table(&self) -> Vec<usize> {
        self.ops.clone()
    }
}

impl Act for LeftAct {
    fn carrier_size(&self) -> usize {
        self.size
    }
    fn operator_count(&self) -> usize {
        self.semigroup.order()
    }
    fn operator(&self, op: usize) -> &[usize] {
        &self.ops[op * self.size..(op + 1) * self.size]
    }
    fn is_unitary(&self) -> bool {
        image_is_everything(self.size, &self.ops)
    }
    fn same_semigroups(&self, other: &Self) -> bool {
        same(&self.semigroup, &other.semigroup)
    }
}

/// An `(S, T)`-biact: a left `S`-act and a right `T`-act on one carrier
/// whose actions commute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biact {
    left: LeftAct,
    right: RightAct,
}

impl Biact {
    pub fn new(left: LeftAct, right: RightAct) -> Result<Self> {
        if left.size != right.size {
            return Err(Error::MapShape {
                expected: left.size,
                found: right.size,
            });
        }
        for s in left.semigroup.elements() {
            for a in 0..left.size {
                for t in right.semigroup.elements() {
                    if right.act(left.act(s, a), t) != left.act(s, right.act(a, t)) {
                        return Err(Error::BiactCommutation { s, a, t });
                    }
                }
            }
        }
        Ok(Self { left, right })
    }

    /// `_S S_S`.
    pub fn regular(semigroup: Arc<FiniteSemigroup>) -> Self {
        Self::new(LeftAct::regular(semigroup.clone()), RightAct::regular(semigroup)).expect("regular biact is valid")
    }

    pub fn left(&self) -> &LeftAct {
        &self.left
    }

    pub fn right(&self) -> &RightAct {
        &self.right
    }

    pub fn size(&self) -> usize {
        self.left.size
    }

    pub fn left_semigroup(&self) -> &Arc<FiniteSemigroup> {
        &self.left.semigroup
    }

    pub fn right_semigroup(&self) -> &Arc<FiniteSemigroup> {
        &self.right.semigroup
    }
}

impl Act for Biact {
    fn carrier_size(&self) -> usize {
        self.left.size
    }
    fn operator_count(&self) -> usize {
        self.left.operator_count() + self.right.operator_count()
    }
    fn operator(&self, op: usize) -> &[usize] {
        let k = self.left.operator_count();
        if op < k {
            self.left.operator(op)
        } else {
            self.right.operator(op - k)
        }
    }
    fn is_unitary(&self) -> bool {
        self.left.is_unitary() && self.right.is_unitary()
    }
    fn same_semigroups(&self, other: &Self) -> bool {
        self.left.same_semigroups(&other.left) && self.right.same_semigroups(&other.right)
    }
}

/// An equivariant map between two acts of the same kind. For biacts the
/// `s` of an [`Error::EquivarianceViolation`] indexes left operators first,
/// then right ones offset by the left semigroup's order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActMorphism {
    map: Vec<usize>,
}

impl ActMorphism {
    /// Checks `map` exhaustively for equivariance.
    pub fn new<A: Act>(source: &A, target: &A, map: Vec<usize>) -> Result<Self> {
        if !source.same_semigroups(target) {
            return Err(Error::SemigroupMismatch);
        }
        if map.len() != source.carrier_size() {
            return Err(Error::MapShape {
                expected: source.carrier_size(),
                found: map.len(),
            });
        }
        check_range(&map, target.carrier_size())?;
        if let Some((a, s)) = source.equivariance_violation(target, &map) {
            return Err(Error::EquivarianceViolation { a, s });
        }
        Ok(Self { map })
    }

    pub fn identity(size: usize) -> Self {
        Self {
            map: (0..size).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `self` after `first`: `a ↦ self(first(a))`.
    pub fn after(&self, first: &Self) -> Self {
        Self {
            map: first.map.iter().map(|&x| self.map[x]).collect(),
        }
    }
}

/// All endomorphisms of `act` in lexicographic order of their maps.
///
/// Fails when `|A|^|A|` exceeds the candidate limit. The search assigns
/// images in carrier order and prunes as soon as an equivariance constraint
/// between already-assigned points breaks.
pub fn enumerate_endomorphisms<A: Act>(act: &A, limits: SearchLimits) -> Result<Vec<ActMorphism>> {
    let n = act.carrier_size();
    limits.check(saturating_pow(n, n))?;
    // constraints[k]: (a, op) pairs whose check involves only points ≤ k,
    // with k the largest of a and op(a).
    let mut constraints: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for op in 0..act.operator_count() {
        let f = act.operator(op);
        for a in 0..n {
            constraints[a.max(f[a])].push((a, op));
        }
    }
    let mut out = Vec::new();
    let mut map = vec![0; n];
    endo_search(act, &constraints, 0, &mut map, &mut out);
    Ok(out)
}

fn endo_search<A: Act>(
    act: &A,
    constraints: &[Vec<(usize, usize)>],
    k: usize,
    map: &mut Vec<usize>,
    out: &mut Vec<ActMorphism>,
) {
    let n = act.carrier_size();
    if k == n {
        out.push(ActMorphism { map: map.clone() });
        return;
    }
    for image in 0..n {
        map[k] = image;
        let ok = constraints[k].iter().all(|&(a, op)| {
            let f = act.operator(op);
            map[f[a]] == f[map[a]]
        });
        if ok {
            endo_search(act, constraints, k + 1, map, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::small;

    fn arc(s: FiniteSemigroup) -> Arc<FiniteSemigroup> {
        Arc::new(s)
    }

    /// Filter over every self-map of the carrier.
    fn brute_force_endomorphisms<A: Act>(act: &A) -> Vec<Vec<usize>> {
        let n = act.carrier_size();
        let total = n.pow(n as u32);
        (0..total)
            .map(|mut code| {
                let mut m = vec![0; n];
                for slot in m.iter_mut().rev() {
                    *slot = code % n;
                    code /= n;
                }
                m
            })
            .filter(|m| act.equivariance_violation(act, m).is_none())
            .collect()
    }

    #[test]
    fn regular_and_trivial_acts_are_valid() {
        let z2 = arc(small::cyclic_group(2));
        let reg = RightAct::new(z2.clone(), 2, z2.table()).unwrap();
        assert_eq!(reg, RightAct::regular(z2.clone()));
        RightAct::regular(arc(small::right_zero(2)));
        let trivial = RightAct::new(z2.clone(), 2, &[0, 0, 1, 1]).unwrap();
        assert_eq!(trivial.act(1, 1), 1);
    }

    #[test]
    fn incompatible_action_rejected() {
        let z2 = arc(small::cyclic_group(2));
        // a·0 = a, a·1 = 0: (1·1)·1 = 0 but 1·(1+1) = 1.
        let err = RightAct::new(z2, 2, &[0, 0, 1, 0]).unwrap_err();
        assert!(matches!(err, Error::CompatibilityViolation { .. }));
        let n2 = arc(small::null(2));
        assert_eq!(
            LeftAct::new(n2, 2, &[0, 2, 0, 0]).unwrap_err(),
            Error::OutOfRange { value: 2, bound: 2 }
        );
    }

    #[test]
    fn unitarity() {
        assert!(RightAct::regular(arc(small::cyclic_group(2))).is_unitary());
        assert!(!RightAct::regular(arc(small::null(2))).is_unitary());
        assert!(RightAct::regular(arc(small::right_zero(2))).is_unitary());
        assert!(Biact::regular(arc(small::right_zero(2))).is_unitary());
        assert!(!LeftAct::regular(arc(small::null(2))).is_unitary());
    }

    #[test]
    fn morphism_checks() {
        let z2 = arc(small::cyclic_group(2));
        let reg = RightAct::regular(z2.clone());
        ActMorphism::new(&reg, &reg, vec![0, 1]).unwrap();
        ActMorphism::new(&reg, &reg, vec![1, 0]).unwrap();
        let rz2 = RightAct::regular(arc(small::right_zero(2)));
        assert_eq!(
            ActMorphism::new(&rz2, &rz2, vec![0, 0]),
            Err(Error::EquivarianceViolation { a: 0, s: 1 })
        );
        let other = RightAct::regular(arc(small::right_zero(2)));
        assert_eq!(
            ActMorphism::new(&reg, &other, vec![0, 1]),
            Err(Error::SemigroupMismatch)
        );
    }

    #[test]
    fn endomorphism_counts_match_brute_force() {
        let z2 = arc(small::cyclic_group(2));
        let left = LeftAct::regular(z2);
        let endos = enumerate_endomorphisms(&left, SearchLimits::default()).unwrap();
        let maps: Vec<_> = endos.iter().map(|e| e.map().to_vec()).collect();
        assert_eq!(maps, vec![vec![0, 1], vec![1, 0]]);

        let t1 = RightAct::regular(arc(small::trivial()));
        assert_eq!(enumerate_endomorphisms(&t1, SearchLimits::default()).unwrap().len(), 1);

        let rz2 = RightAct::regular(arc(small::right_zero(2)));
        let got: Vec<_> = enumerate_endomorphisms(&rz2, SearchLimits::default())
            .unwrap()
            .into_iter()
            .map(|e| e.map().to_vec())
            .collect();
        assert_eq!(got, brute_force_endomorphisms(&rz2));
        // Only the identity commutes with both constant maps.
        assert_eq!(got, vec![vec![0, 1]]);
    }

    #[test]
    fn endomorphism_guard() {
        let z3 = arc(small::cyclic_group(3));
        let act = RightAct::regular(z3);
        assert_eq!(
            enumerate_endomorphisms(&act, SearchLimits::new(26)),
            Err(Error::SearchSpaceTooLarge {
                candidates: 27,
                limit: 26
            })
        );
    }

    #[test]
    fn biact_endomorphisms_and_closure() {
        for s in [
            small::semilattice_chain(3),
            small::rectangular_band(2, 2),
            small::cyclic_group(3),
        ] {
            let bi = Biact::regular(arc(s));
            let endos = enumerate_endomorphisms(&bi, SearchLimits::default()).unwrap();
            let maps: Vec<_> = endos.iter().map(|e| e.map().to_vec()).collect();
            assert_eq!(maps, brute_force_endomorphisms(&bi));
            assert!(endos.contains(&ActMorphism::identity(bi.size())));
            for f in &endos {
                for g in &endos {
                    assert!(endos.contains(&f.after(g)));
                }
            }
        }
    }
}
