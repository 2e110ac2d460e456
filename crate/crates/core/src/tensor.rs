//! Tensor products `A ⊗_S B` of a right act and a left act, computed as the
//! quotient of `A × B` by the least equivalence identifying `(a·s, b)` with
//! `(a, s·b)`.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::acts::{LeftAct, RightAct};
use crate::union_find::UnionFind;
use crate::{Error, FiniteSemigroup, Result};

/// Elementary identification between `(a·s, b)` and `(a, s·b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TossStep {
    pub a: usize,
    pub s: usize,
    pub b: usize,
    /// `true`: from `(a·s, b)` to `(a, s·b)`; `false`: the reverse.
    pub forward: bool,
}

impl TossStep {
    fn endpoints(&self, t: &TensorProduct) -> ((usize, usize), (usize, usize)) {
        let shifted_left = (t.left.act(self.a, self.s), self.b);
        let shifted_right = (self.a, t.right.act(self.s, self.b));
        if self.forward {
            (shifted_left, shifted_right)
        } else {
            (shifted_right, shifted_left)
        }
    }
}

/// A chain of elementary steps connecting two pairs of `A × B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TossingWitness {
    pub start: (usize, usize),
    pub end: (usize, usize),
    pub steps: Vec<TossStep>,
}

impl TossingWitness {
    /// Replays the chain against the act tables; `true` iff every step
    /// starts where the previous one ended and the chain ends at `end`.
    pub fn replays(&self, t: &TensorProduct) -> bool {
        let mut at = self.start;
        for step in &self.steps {
            let (from, to) = step.endpoints(t);
            if from != at {
                return false;
            }
            at = to;
        }
        at == self.end
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// `A ⊗_S B` with class lookup.
#[derive(Debug, Clone)]
pub struct TensorProduct {
    left: RightAct,
    right: LeftAct,
    class_of: Vec<usize>,
    members: Vec<Vec<(usize, usize)>>,
}

impl TensorProduct {
    /// Quotient of `A × B` seeded with every generating identification
    /// `(a·s, b) ~ (a, s·b)`. Class ids are ordered by least member in the
    /// order `(a, b)` lexicographic.
    pub fn new(left: &RightAct, right: &LeftAct) -> Result<Self> {
        let s = left.semigroup();
        if !(Arc::ptr_eq(s, right.semigroup()) || **s == **right.semigroup()) {
            return Err(Error::SemigroupMismatch);
        }
        let (na, nb) = (left.size(), right.size());
        let mut uf = UnionFind::new(na * nb);
        for a in 0..na {
            for x in s.elements() {
                let ax = left.act(a, x);
                for b in 0..nb {
                    uf.union(ax * nb + b, a * nb + right.act(x, b));
                }
            }
        }
        let (class_of, count) = uf.canonical_labels();
        let mut members = vec![Vec::new(); count];
        for (idx, &c) in class_of.iter().enumerate() {
            members[c].push((idx / nb, idx % nb));
        }
        Ok(Self {
            left: left.clone(),
            right: right.clone(),
            class_of,
            members,
        })
    }

    pub fn left_act(&self) -> &RightAct {
        &self.left
    }

    pub fn right_act(&self) -> &LeftAct {
        &self.right
    }

    pub fn semigroup(&self) -> &Arc<FiniteSemigroup> {
        self.left.semigroup()
    }

    pub fn class_count(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn class_of(&self, a: usize, b: usize) -> usize {
        self.class_of[a * self.right.size() + b]
    }

    /// Least member of a class.
    pub fn representative(&self, class: usize) -> (usize, usize) {
        self.members[class][0]
    }

    pub fn members(&self, class: usize) -> &[(usize, usize)] {
        &self.members[class]
    }

    /// Class labels of all pairs, indexed by `a * |B| + b`.
    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    /// First generating triple `(a, s, b)` with `f(a·s, b) != f(a, s·b)`.
    pub fn balance_violation<X: PartialEq>(&self, f: impl Fn(usize, usize) -> X) -> Option<(usize, usize, usize)> {
        let s = self.semigroup();
        for a in 0..self.left.size() {
            for x in s.elements() {
                for b in 0..self.right.size() {
                    if f(self.left.act(a, x), b) != f(a, self.right.act(x, b)) {
                        return Some((a, x, b));
                    }
                }
            }
        }
        None
    }

    /// Factors a balanced map `A × B → X` through the classes.
    pub fn induced_map<X: Clone + PartialEq>(&self, f: impl Fn(usize, usize) -> X) -> Result<Vec<X>> {
        if let Some((a, s, b)) = self.balance_violation(&f) {
            return Err(Error::NotBalanced { a, s, b });
        }
        let mut values = Vec::with_capacity(self.class_count());
        for (class, members) in self.members.iter().enumerate() {
            let (a0, b0) = members[0];
            let v = f(a0, b0);
            if let Some(&(a, b)) = members.iter().find(|&&(a, b)| f(a, b) != v) {
                return Err(Error::WellDefinednessViolation(format!(
                    "class {class} has ({a0}, {b0}) and ({a}, {b}) with different values"
                )));
            }
            values.push(v);
        }
        Ok(values)
    }

    /// Left action induced on classes by a left action on `A`'s carrier
    /// (for `A` a biact): `t·(a⊗b) = (t·a)⊗b`. Well-definedness is checked
    /// over all class members.
    pub fn residual_left_action(&self, act: &LeftAct) -> Result<LeftAct> {
        if act.size() != self.left.size() {
            return Err(Error::MapShape {
                expected: self.left.size(),
                found: act.size(),
            });
        }
        let n = act.semigroup().order();
        let mut ops = vec![0; n * self.class_count()];
        for t in 0..n {
            for (class, members) in self.members.iter().enumerate() {
                let image = |&(a, b): &(usize, usize)| self.class_of(act.act(t, a), b);
                let v = image(&members[0]);
                if members.iter().any(|m| image(m) != v) {
                    return Err(Error::WellDefinednessViolation(format!(
                        "left action of {t} on class {class}"
                    )));
                }
                ops[t * self.class_count() + class] = v;
            }
        }
        LeftAct::new(act.semigroup().clone(), self.class_count(), &ops)
    }

    /// Right action induced on classes by a right action on `B`'s carrier:
    /// `(a⊗b)·t = a⊗(b·t)`.
    pub fn residual_right_action(&self, act: &RightAct) -> Result<RightAct> {
        if act.size() != self.right.size() {
            return Err(Error::MapShape {
                expected: self.right.size(),
                found: act.size(),
            });
        }
        let n = act.semigroup().order();
        let mut table = vec![0; n * self.class_count()];
        for (class, members) in self.members.iter().enumerate() {
            for t in 0..n {
                let image = |&(a, b): &(usize, usize)| self.class_of(a, act.act(b, t));
                let v = image(&members[0]);
                if members.iter().any(|m| image(m) != v) {
                    return Err(Error::WellDefinednessViolation(format!(
                        "right action of {t} on class {class}"
                    )));
                }
                table[class * n + t] = v;
            }
        }
        RightAct::new(act.semigroup().clone(), self.class_count(), &table)
    }

    /// Neighbours of a pair under one elementary step, sorted by target
    /// pair and then by step.
    fn neighbours(&self, (x, y): (usize, usize)) -> Vec<((usize, usize), TossStep)> {
        let s = self.semigroup();
        let mut out = Vec::new();
        for sx in s.elements() {
            for a in 0..self.left.size() {
                if self.left.act(a, sx) == x {
                    let step = TossStep {
                        a,
                        s: sx,
                        b: y,
                        forward: true,
                    };
                    out.push(((a, self.right.act(sx, y)), step));
                }
            }
            for b in 0..self.right.size() {
                if self.right.act(sx, b) == y {
                    let step = TossStep {
                        a: x,
                        s: sx,
                        b,
                        forward: false,
                    };
                    out.push(((self.left.act(x, sx), b), step));
                }
            }
        }
        out.sort();
        out
    }

    /// Shortest chain of elementary steps from `from` to `to`, or `None`
    /// when the pairs lie in different classes.
    pub fn tossing_witness(&self, from: (usize, usize), to: (usize, usize)) -> Option<TossingWitness> {
        let nb = self.right.size();
        let idx = |(a, b): (usize, usize)| a * nb + b;
        if from.0 >= self.left.size() || to.0 >= self.left.size() || from.1 >= nb || to.1 >= nb {
            return None;
        }
        if self.class_of[idx(from)] != self.class_of[idx(to)] {
            return None;
        }
        let mut parent: Vec<Option<((usize, usize), TossStep)>> = vec![None; self.class_of.len()];
        let mut seen = vec![false; self.class_of.len()];
        let mut queue = VecDeque::from([from]);
        seen[idx(from)] = true;
        while let Some(at) = queue.pop_front() {
            if at == to {
                break;
            }
            for (next, step) in self.neighbours(at) {
                if !seen[idx(next)] {
                    seen[idx(next)] = true;
                    parent[idx(next)] = Some((at, step));
                    queue.push_back(next);
                }
            }
        }
        let mut steps = Vec::new();
        let mut at = to;
        while at != from {
            let (prev, step) = parent[idx(at)]?;
            steps.push(step);
            at = prev;
        }
        steps.reverse();
        Some(TossingWitness {
            start: from,
            end: to,
            steps,
        })
    }
}

/// `S ⊗_S S` of the regular acts together with the induced multiplication
/// `μ: s ⊗ s' ↦ ss'` on classes.
pub fn multiplication_map(s: &FiniteSemigroup) -> (TensorProduct, Vec<usize>) {
    let s = Arc::new(s.clone());
    let t = TensorProduct::new(&RightAct::regular(s.clone()), &LeftAct::regular(s.clone()))
        .expect("regular acts share their semigroup");
    let mu = t
        .induced_map(|a, b| s.mul(a, b))
        .expect("multiplication is balanced by associativity");
    (t, mu)
}

/// `μ: S ⊗_S S → S` is bijective.
pub fn is_firm(s: &FiniteSemigroup) -> bool {
    let (t, mu) = multiplication_map(s);
    if t.class_count() != s.order() {
        return false;
    }
    let mut hit = vec![false; s.order()];
    for v in mu {
        hit[v] = true;
    }
    hit.into_iter().all(|h| h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::small;

    fn regular(s: FiniteSemigroup) -> TensorProduct {
        let s = Arc::new(s);
        TensorProduct::new(&RightAct::regular(s.clone()), &LeftAct::regular(s)).unwrap()
    }

    #[test]
    fn class_counts() {
        let z2 = regular(small::cyclic_group(2));
        assert_eq!(z2.class_count(), 2);
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(z2.class_of(a, b), (a + b) % 2);
            }
        }
        assert_eq!(regular(small::trivial()).class_count(), 1);
        let rz2 = regular(small::right_zero(2));
        assert_eq!(rz2.class_count(), 2);
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(rz2.class_of(a, b), b);
            }
        }
    }

    #[test]
    fn mismatched_semigroups_rejected() {
        let a = RightAct::regular(Arc::new(small::cyclic_group(2)));
        let b = LeftAct::regular(Arc::new(small::right_zero(2)));
        assert_eq!(TensorProduct::new(&a, &b).unwrap_err(), Error::SemigroupMismatch);
    }

    #[test]
    fn induced_maps() {
        let z2 = small::cyclic_group(2);
        let t = regular(z2.clone());
        let mu = t.induced_map(|a, b| z2.mul(a, b)).unwrap();
        assert_eq!(mu, vec![0, 1]);
        let rz2 = small::right_zero(2);
        let t = regular(rz2.clone());
        assert_eq!(t.induced_map(|a, b| rz2.mul(a, b)).unwrap(), vec![0, 1]);
        let t = regular(z2);
        assert_eq!(
            t.induced_map(|a, _| a).unwrap_err(),
            Error::NotBalanced { a: 0, s: 1, b: 0 }
        );
    }

    #[test]
    fn witnesses() {
        let t = regular(small::cyclic_group(2));
        let w = t.tossing_witness((1, 1), (1, 1)).unwrap();
        assert!(w.is_empty());
        let w = t.tossing_witness((0, 1), (1, 0)).unwrap();
        assert!(!w.is_empty());
        assert!(w.replays(&t));
        assert!(t.tossing_witness((0, 0), (0, 1)).is_none());
    }

    #[test]
    fn firmness() {
        assert!(is_firm(&small::cyclic_group(2)));
        assert!(!is_firm(&small::null(2)));
        assert!(is_firm(&small::right_zero(2)));
        assert!(is_firm(&small::rectangular_band(2, 2)));
    }

    #[test]
    fn residual_actions_on_regular_square() {
        let s = Arc::new(small::semilattice_chain(3));
        let t = TensorProduct::new(&RightAct::regular(s.clone()), &LeftAct::regular(s.clone())).unwrap();
        let left = t.residual_left_action(&LeftAct::regular(s.clone())).unwrap();
        let right = t.residual_right_action(&RightAct::regular(s.clone())).unwrap();
        for class in 0..t.class_count() {
            let (a, b) = t.representative(class);
            for x in s.elements() {
                assert_eq!(left.act(x, class), t.class_of(s.mul(x, a), b));
                assert_eq!(right.act(class, x), t.class_of(a, s.mul(b, x)));
            }
        }
    }
}
