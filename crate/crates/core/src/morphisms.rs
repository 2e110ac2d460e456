//! Semigroup morphisms and their local injectivity and lifting properties,
//! plus the correspondence between morphisms into `S_S` and semigroup
//! structures on acts.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::acts::{ActMorphism, RightAct};
use crate::{ElementId, Error, FiniteSemigroup, Result};

/// A multiplicative map between two finite semigroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupMorphism {
    source: Arc<FiniteSemigroup>,
    target: Arc<FiniteSemigroup>,
    map: Vec<ElementId>,
}

/// Quality flags of a morphism, all computed exhaustively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MorphismQuality {
    pub almost_injective: bool,
    pub surjective: bool,
    pub strict_local_iso: bool,
    pub idempotents_lift: bool,
    pub regulars_lift: bool,
}

/// The three injectivity conditions that coincide for sources with common
/// weak local units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OneSidedInjectivity {
    pub almost_injective: bool,
    pub on_right_ideals: bool,
    pub on_left_ideals: bool,
}

impl OneSidedInjectivity {
    pub fn all_agree(&self) -> bool {
        self.almost_injective == self.on_right_ideals && self.on_right_ideals == self.on_left_ideals
    }
}

fn injective_on(map: &[ElementId], set: impl IntoIterator<Item = ElementId>) -> bool {
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for x in set {
        seen.insert(map[x]);
        count += 1;
    }
    seen.len() == count
}

impl SemigroupMorphism {
    pub fn new(source: Arc<FiniteSemigroup>, target: Arc<FiniteSemigroup>, map: Vec<ElementId>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::MapShape {
                expected: source.order(),
                found: map.len(),
            });
        }
        if let Some(&value) = map.iter().find(|&&v| v >= target.order()) {
            return Err(Error::OutOfRange {
                value,
                bound: target.order(),
            });
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(Error::MultiplicativityViolation { x, y });
                }
            }
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(s: Arc<FiniteSemigroup>) -> Self {
        let map = s.elements().collect();
        Self {
            source: s.clone(),
            target: s,
            map,
        }
    }

    #[inline]
    pub fn apply(&self, x: ElementId) -> ElementId {
        self.map[x]
    }

    pub fn map(&self) -> &[ElementId] {
        &self.map
    }

    pub fn source(&self) -> &Arc<FiniteSemigroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteSemigroup> {
        &self.target
    }

    pub fn is_surjective(&self) -> bool {
        let image: BTreeSet<_> = self.map.iter().copied().collect();
        image.len() == self.target.order()
    }

    pub fn is_injective(&self) -> bool {
        injective_on(&self.map, self.source.elements())
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// A pair `(a, b)` with `a ∈ Sa`, `b ∈ bS` such that the map is not
    /// injective on `aSb`. An empty or singleton `aSb` is vacuously fine.
    pub fn almost_injectivity_violation(&self) -> Option<(ElementId, ElementId)> {
        let s = &self.source;
        let lefts: Vec<_> = s.elements().filter(|&a| s.in_left_ideal_of_itself(a)).collect();
        let rights: Vec<_> = s.elements().filter(|&b| s.in_right_ideal_of_itself(b)).collect();
        for &a in &lefts {
            for &b in &rights {
                let set = s.sandwich_set(a, b);
                debug_assert!(
                    set.iter().all(|&x| set.iter().all(|&y| set.contains(&s.mul(x, y)))),
                    "aSb is closed under the product"
                );
                if !injective_on(&self.map, set) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Injective on every `aSb` with `a ∈ Sa` and `b ∈ bS`.
    pub fn is_almost_injective(&self) -> bool {
        self.almost_injectivity_violation().is_none()
    }

    /// Injective on every principal right ideal `sS`.
    pub fn injective_on_right_ideals(&self) -> bool {
        let s = &self.source;
        s.elements()
            .all(|x| injective_on(&self.map, s.elements().map(|y| s.mul(x, y)).collect::<BTreeSet<_>>()))
    }

    /// Injective on every `Ss`.
    pub fn injective_on_left_ideals(&self) -> bool {
        let s = &self.source;
        s.elements()
            .all(|x| injective_on(&self.map, s.elements().map(|y| s.mul(y, x)).collect::<BTreeSet<_>>()))
    }

    /// Every idempotent of the target is the image of an idempotent.
    pub fn idempotents_lift(&self) -> bool {
        let lifted: BTreeSet<_> = self.source.idempotents().into_iter().map(|e| self.map[e]).collect();
        self.target.idempotents().iter().all(|f| lifted.contains(f))
    }

    /// Every regular element of the target has a regular preimage.
    pub fn regulars_lift(&self) -> bool {
        let s = &self.source;
        let lifted: BTreeSet<_> = s.elements().filter(|&x| s.is_regular(x)).map(|x| self.map[x]).collect();
        self.target
            .elements()
            .filter(|&t| self.target.is_regular(t))
            .all(|t| lifted.contains(&t))
    }

    pub fn quality(&self) -> MorphismQuality {
        let almost_injective = self.is_almost_injective();
        let surjective = self.is_surjective();
        MorphismQuality {
            almost_injective,
            surjective,
            strict_local_iso: almost_injective && surjective,
            idempotents_lift: self.idempotents_lift(),
            regulars_lift: self.regulars_lift(),
        }
    }
}

/// Evaluates almost injectivity together with injectivity on all `sS` and
/// all `Ss`. Requires the source to have common weak local units.
pub fn one_sided_injectivity(f: &SemigroupMorphism) -> Result<OneSidedInjectivity> {
    if let Some((s, t)) = f.source.common_weak_local_units_violation() {
        return Err(Error::PreconditionFailed(format!(
            "source lacks common weak local units ({s}, {t} share no unit on some side)"
        )));
    }
    Ok(OneSidedInjectivity {
        almost_injective: f.is_almost_injective(),
        on_right_ideals: f.injective_on_right_ideals(),
        on_left_ideals: f.injective_on_left_ideals(),
    })
}

/// The semigroup carried by an act through a morphism into `S_S`.
#[derive(Debug, Clone)]
pub struct ActSemigroup {
    /// Carrier of the act with `a·a' := a·ρ(a')`.
    pub semigroup: Arc<FiniteSemigroup>,
    /// `ρ` as a semigroup morphism into `S`.
    pub morphism: SemigroupMorphism,
    pub quality: MorphismQuality,
}

/// Turns `A_S` with an `S`-morphism `ρ: A → S_S` into a semigroup with
/// `a·a' = a·ρ(a')`, and checks that `ρ` is an almost injective semigroup
/// morphism along which idempotents lift whenever it is surjective.
pub fn act_to_semigroup(act: &RightAct, rho: &ActMorphism) -> Result<ActSemigroup> {
    let s = act.semigroup().clone();
    let regular = RightAct::regular(s.clone());
    let rho = ActMorphism::new(act, &regular, rho.map().to_vec())?;
    let n = act.size();
    let table = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| act.act(a, rho.apply(b)))
        .collect();
    let semigroup = Arc::new(
        FiniteSemigroup::new(n, table)
            .map_err(|e| Error::TheoremViolation(format!("act product is not associative: {e}")))?,
    );
    let morphism = SemigroupMorphism::new(semigroup.clone(), s, rho.map().to_vec())
        .map_err(|e| Error::TheoremViolation(format!("act morphism is not multiplicative: {e}")))?;
    let quality = morphism.quality();
    if let Some((a, b)) = morphism.almost_injectivity_violation() {
        return Err(Error::TheoremViolation(format!(
            "act morphism is not injective on aAb for a = {a}, b = {b}"
        )));
    }
    if quality.surjective && !quality.idempotents_lift {
        return Err(Error::TheoremViolation(
            "idempotents do not lift along a surjective act morphism".into(),
        ));
    }
    Ok(ActSemigroup {
        semigroup,
        morphism,
        quality,
    })
}

/// For a strict local isomorphism `τ: T → S` with `T` having common weak
/// local units, the right `S`-action `t ⋆ s' = t·t'` where `τ(t') = s'`.
///
/// The least preimage is used and independence from that choice is checked
/// against every other preimage; `τ` is then checked to be an `S`-morphism
/// into `S_S`.
pub fn sli_to_act(tau: &SemigroupMorphism) -> Result<RightAct> {
    let t = &tau.source;
    let s = &tau.target;
    if let Some((x, y)) = t.common_weak_local_units_violation() {
        return Err(Error::PreconditionFailed(format!(
            "source lacks common weak local units at ({x}, {y})"
        )));
    }
    let quality = tau.quality();
    if !quality.strict_local_iso {
        return Err(Error::PreconditionFailed(
            "map is not a strict local isomorphism".into(),
        ));
    }
    let mut preimages: Vec<Vec<ElementId>> = vec![Vec::new(); s.order()];
    for x in t.elements() {
        preimages[tau.apply(x)].push(x);
    }
    for (target, pre) in preimages.iter().enumerate() {
        let Some(&chosen) = pre.first() else {
            return Err(Error::WitnessNotFound(target));
        };
        for x in t.elements() {
            if let Some(&other) = pre.iter().find(|&&p| t.mul(x, p) != t.mul(x, chosen)) {
                return Err(Error::WellDefinednessViolation(format!(
                    "{x}·{chosen} != {x}·{other} although both factors map to {target}"
                )));
            }
        }
    }
    let act = RightAct::from_fn(s.clone(), t.order(), |x, target| t.mul(x, preimages[target][0]))?;
    ActMorphism::new(&act, &RightAct::regular(s.clone()), tau.map.clone())
        .map_err(|e| Error::TheoremViolation(format!("τ is not an S-morphism: {e}")))?;
    Ok(act)
}
