//! Pairs `β = (_S A, B_S)` with a pairing into `S`, the monoid `Ω^β` of
//! adjoint endomorphism pairs, its ideals `Ω_1^β ⊇ Σ^β`, and the map from
//! the Morita semigroup `B ⊗ A` onto `Σ^β`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::acts::{enumerate_endomorphisms, LeftAct, RightAct};
use crate::morita::{MoritaSemigroup, Pairing};
use crate::morphisms::{MorphismQuality, SemigroupMorphism};
use crate::{ElementId, Error, FiniteSemigroup, Result, SearchLimits};

/// A pair `β = (_S A, B_S)` with a biact morphism `⟨,⟩: A × B → S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pair {
    pairing: Pairing,
}

impl Pair {
    /// `table[a * |B| + b] = ⟨a, b⟩`.
    pub fn new(a: LeftAct, b: RightAct, table: Vec<ElementId>) -> Result<Self> {
        Ok(Self {
            pairing: Pairing::new(a, b, table)?,
        })
    }

    pub fn from_pairing(pairing: Pairing) -> Self {
        Self { pairing }
    }

    /// Regular acts with `⟨a, b⟩ = ab`.
    pub fn multiplication(s: Arc<FiniteSemigroup>) -> Self {
        Self {
            pairing: Pairing::multiplication(s),
        }
    }

    pub fn semigroup(&self) -> &Arc<FiniteSemigroup> {
        self.pairing.semigroup()
    }

    pub fn a(&self) -> &LeftAct {
        self.pairing.left()
    }

    pub fn b(&self) -> &RightAct {
        self.pairing.right()
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    #[inline]
    pub fn value(&self, a: usize, b: usize) -> ElementId {
        self.pairing.value(a, b)
    }

    pub fn a_size(&self) -> usize {
        self.a().size()
    }

    pub fn b_size(&self) -> usize {
        self.b().size()
    }

    /// `{s·a | s ∈ S}`.
    fn orbit_a(&self, a: usize) -> BTreeSet<usize> {
        self.semigroup().elements().map(|s| self.a().act(s, a)).collect()
    }

    /// `{b·s | s ∈ S}`.
    fn orbit_b(&self, b: usize) -> BTreeSet<usize> {
        self.semigroup().elements().map(|s| self.b().act(b, s)).collect()
    }
}

/// A pair of endomorphisms `ρ` of `_S A` and `σ` of `B_S`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdjointPair {
    pub rho: Vec<usize>,
    pub sigma: Vec<usize>,
}

impl AdjointPair {
    pub fn identity(pair: &Pair) -> Self {
        Self {
            rho: (0..pair.a_size()).collect(),
            sigma: (0..pair.b_size()).collect(),
        }
    }

    /// `(ρ, σ)(ρ', σ') = (ρ'ρ, σσ')`.
    pub fn product(&self, other: &Self) -> Self {
        Self {
            rho: self.rho.iter().map(|&x| other.rho[x]).collect(),
            sigma: other.sigma.iter().map(|&y| self.sigma[y]).collect(),
        }
    }

    /// `⟨ρ(a), b⟩ = ⟨a, σ(b)⟩` for all `a, b`.
    pub fn is_adjoint(&self, pair: &Pair) -> bool {
        (0..pair.a_size())
            .all(|a| (0..pair.b_size()).all(|b| pair.value(self.rho[a], b) == pair.value(a, self.sigma[b])))
    }
}

/// `[b, a] = (⟨-, b⟩a, b⟨a, -⟩)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracket {
    pub b: usize,
    pub a: usize,
    pub pair: AdjointPair,
}

/// Evaluates `[b, a]` and checks that it is an adjoint pair of
/// endomorphisms.
pub fn bracket(pair: &Pair, b: usize, a: usize) -> Result<Bracket> {
    let adjoint = raw_bracket(pair, b, a);
    if !adjoint.is_adjoint(pair) {
        return Err(Error::TheoremViolation(format!("[{b}, {a}] is not adjoint")));
    }
    crate::acts::ActMorphism::new(pair.a(), pair.a(), adjoint.rho.clone())
        .map_err(|e| Error::TheoremViolation(format!("first component of [{b}, {a}]: {e}")))?;
    crate::acts::ActMorphism::new(pair.b(), pair.b(), adjoint.sigma.clone())
        .map_err(|e| Error::TheoremViolation(format!("second component of [{b}, {a}]: {e}")))?;
    Ok(Bracket { b, a, pair: adjoint })
}

fn raw_bracket(pair: &Pair, b: usize, a: usize) -> AdjointPair {
    AdjointPair {
        rho: (0..pair.a_size()).map(|x| pair.a().act(pair.value(x, b), a)).collect(),
        sigma: (0..pair.b_size()).map(|y| pair.b().act(b, pair.value(a, y))).collect(),
    }
}

/// Duality witnesses, least index first. `a_witnesses[a]` is some `a'`
/// with `a ∈ Sa'` and `⟨a', B⟩ = S`; `b_witnesses[b]` is some `b'` with
/// `b ∈ b'S` and `⟨A, b'⟩ = S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub a_witnesses: Vec<Option<usize>>,
    pub b_witnesses: Vec<Option<usize>>,
}

impl DualityReport {
    pub fn is_dual(&self) -> bool {
        self.a_witnesses.iter().chain(&self.b_witnesses).all(Option::is_some)
    }

    /// The first element of `A` (`Ok`) or `B` (`Err`) without a witness.
    pub fn first_missing(&self) -> Option<std::result::Result<usize, usize>> {
        if let Some(a) = self.a_witnesses.iter().position(Option::is_none) {
            return Some(Ok(a));
        }
        self.b_witnesses.iter().position(Option::is_none).map(Err)
    }
}

pub fn duality(pair: &Pair) -> DualityReport {
    let n = pair.semigroup().order();
    let full_row: Vec<bool> = (0..pair.a_size())
        .map(|a| {
            (0..pair.b_size())
                .map(|b| pair.value(a, b))
                .collect::<BTreeSet<_>>()
                .len()
                == n
        })
        .collect();
    let full_col: Vec<bool> = (0..pair.b_size())
        .map(|b| {
            (0..pair.a_size())
                .map(|a| pair.value(a, b))
                .collect::<BTreeSet<_>>()
                .len()
                == n
        })
        .collect();
    let a_orbits: Vec<_> = (0..pair.a_size()).map(|a| pair.orbit_a(a)).collect();
    let b_orbits: Vec<_> = (0..pair.b_size()).map(|b| pair.orbit_b(b)).collect();
    DualityReport {
        a_witnesses: (0..pair.a_size())
            .map(|a| (0..pair.a_size()).find(|&w| full_row[w] && a_orbits[w].contains(&a)))
            .collect(),
        b_witnesses: (0..pair.b_size())
            .map(|b| (0..pair.b_size()).find(|&w| full_col[w] && b_orbits[w].contains(&b)))
            .collect(),
    }
}

pub fn is_dual_pair(pair: &Pair) -> bool {
    duality(pair).is_dual()
}

/// A semigroup of adjoint pairs, elements sorted, with the table indexed
/// accordingly.
#[derive(Debug, Clone)]
pub struct AdjointSemigroup {
    elements: Vec<AdjointPair>,
    index: BTreeMap<AdjointPair, usize>,
    semigroup: Arc<FiniteSemigroup>,
}

impl AdjointSemigroup {
    /// Builds the multiplication table of a set of pairs closed under the
    /// product.
    fn from_set(set: BTreeSet<AdjointPair>, what: &str) -> Result<Self> {
        let elements: Vec<_> = set.into_iter().collect();
        let index: BTreeMap<_, _> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for x in &elements {
            for y in &elements {
                let z = x.product(y);
                let &k = index
                    .get(&z)
                    .ok_or_else(|| Error::TheoremViolation(format!("{what} is not closed under the product")))?;
                table.push(k);
            }
        }
        let semigroup = FiniteSemigroup::new(n, table).map_err(|e| Error::TheoremViolation(format!("{what}: {e}")))?;
        Ok(Self {
            elements,
            index,
            semigroup: Arc::new(semigroup),
        })
    }

    pub fn elements(&self) -> &[AdjointPair] {
        &self.elements
    }

    pub fn index_of(&self, x: &AdjointPair) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn semigroup(&self) -> &Arc<FiniteSemigroup> {
        &self.semigroup
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// All adjoint endomorphism pairs. Checks that the identity pair is present
/// and that the set is closed under the product.
pub fn omega(pair: &Pair, limits: SearchLimits) -> Result<AdjointSemigroup> {
    let ends_a = enumerate_endomorphisms(pair.a(), limits)?;
    let ends_b = enumerate_endomorphisms(pair.b(), limits)?;
    limits.check((ends_a.len() as u64).saturating_mul(ends_b.len() as u64))?;
    let mut set = BTreeSet::new();
    for rho in &ends_a {
        for sigma in &ends_b {
            let candidate = AdjointPair {
                rho: rho.map().to_vec(),
                sigma: sigma.map().to_vec(),
            };
            if candidate.is_adjoint(pair) {
                set.insert(candidate);
            }
        }
    }
    if !set.contains(&AdjointPair::identity(pair)) {
        return Err(Error::TheoremViolation("identity pair is missing from Ω".into()));
    }
    AdjointSemigroup::from_set(set, "Ω")
}

/// Whether `indices` absorbs products with every element of `omega` on
/// both sides.
pub fn is_ideal(omega: &AdjointSemigroup, indices: &BTreeSet<usize>) -> bool {
    let t = omega.semigroup();
    indices.iter().all(|&i| {
        t.elements()
            .all(|x| indices.contains(&t.mul(i, x)) && indices.contains(&t.mul(x, i)))
    })
}

/// `ρ(A) ⊆ Sa` and `σ(B) ⊆ bS` for some `a ∈ A`, `b ∈ B`.
pub fn is_rank_one(pair: &Pair, x: &AdjointPair) -> bool {
    let image_a: BTreeSet<_> = x.rho.iter().copied().collect();
    let image_b: BTreeSet<_> = x.sigma.iter().copied().collect();
    (0..pair.a_size()).any(|a| image_a.is_subset(&pair.orbit_a(a)))
        && (0..pair.b_size()).any(|b| image_b.is_subset(&pair.orbit_b(b)))
}

/// Indices into `omega` of the rank-one pairs, checked to form an ideal.
pub fn omega1(pair: &Pair, omega: &AdjointSemigroup) -> Result<BTreeSet<usize>> {
    let indices: BTreeSet<usize> = omega
        .elements()
        .iter()
        .enumerate()
        .filter(|(_, x)| is_rank_one(pair, x))
        .map(|(i, _)| i)
        .collect();
    if !is_ideal(omega, &indices) {
        return Err(Error::TheoremViolation("Ω_1 is not an ideal of Ω".into()));
    }
    Ok(indices)
}

/// The brackets as a semigroup, with the element each `[b, a]` denotes.
#[derive(Debug, Clone)]
pub struct Sigma {
    pub semigroup: AdjointSemigroup,
    /// `bracket_index[b * |A| + a]` is the element `[b, a]`.
    pub bracket_index: Vec<usize>,
}

impl Sigma {
    pub fn of(&self, a_size: usize, b: usize, a: usize) -> usize {
        self.bracket_index[b * a_size + a]
    }
}

/// All brackets, deduplicated by their underlying pair. The product is
/// computed by composition and checked against
/// `[b, a][b', a'] = [b, ⟨a, b'⟩a']`.
pub fn sigma(pair: &Pair) -> Result<Sigma> {
    let (na, nb) = (pair.a_size(), pair.b_size());
    let mut raw = Vec::with_capacity(na * nb);
    for b in 0..nb {
        for a in 0..na {
            raw.push(bracket(pair, b, a)?.pair);
        }
    }
    let semigroup = AdjointSemigroup::from_set(raw.iter().cloned().collect(), "Σ")?;
    let bracket_index: Vec<usize> = raw.iter().map(|x| semigroup.index[x]).collect();
    let t = semigroup.semigroup();
    for b in 0..nb {
        for a in 0..na {
            for b2 in 0..nb {
                for a2 in 0..na {
                    let composed = t.mul(bracket_index[b * na + a], bracket_index[b2 * na + a2]);
                    let a3 = pair.a().act(pair.value(a, b2), a2);
                    if composed != bracket_index[b * na + a3] {
                        return Err(Error::TheoremViolation(format!(
                            "[{b},{a}][{b2},{a2}] != [{b}, <{a},{b2}>{a2}]"
                        )));
                    }
                }
            }
        }
    }
    Ok(Sigma {
        semigroup,
        bracket_index,
    })
}

/// `b ⊗ a ↦ [b, a]` from the Morita semigroup `B ⊗ A` onto `Σ^β`.
#[derive(Debug, Clone)]
pub struct HotzelMap {
    pub morita: MoritaSemigroup,
    pub sigma: Sigma,
    pub morphism: SemigroupMorphism,
    pub quality: MorphismQuality,
}

/// Builds the map on tensor classes, checking it is well defined and a
/// semigroup morphism, then that it is surjective, almost injective and
/// lifts idempotents.
pub fn hotzel_map(pair: &Pair) -> Result<HotzelMap> {
    let sigma = sigma(pair)?;
    let morita = MoritaSemigroup::new(pair.pairing())?;
    let na = pair.a_size();
    let map = morita.tensor().induced_map(|b, a| sigma.of(na, b, a))?;
    let morphism = SemigroupMorphism::new(morita.semigroup().clone(), sigma.semigroup.semigroup().clone(), map)
        .map_err(|e| Error::TheoremViolation(format!("b⊗a ↦ [b,a] is not multiplicative: {e}")))?;
    let quality = morphism.quality();
    if !quality.surjective {
        return Err(Error::TheoremViolation("b⊗a ↦ [b,a] is not surjective".into()));
    }
    if let Some((x, y)) = morphism.almost_injectivity_violation() {
        return Err(Error::TheoremViolation(format!(
            "b⊗a ↦ [b,a] is not injective on xTy for x = {x}, y = {y}"
        )));
    }
    if !quality.idempotents_lift {
        return Err(Error::TheoremViolation("idempotents of Σ do not lift".into()));
    }
    Ok(HotzelMap {
        morita,
        sigma,
        morphism,
        quality,
    })
}

fn require_wlu_dual(pair: &Pair) -> Result<DualityReport> {
    if !pair.semigroup().has_weak_local_units() {
        return Err(Error::PreconditionFailed("S lacks weak local units".into()));
    }
    let report = duality(pair);
    match report.first_missing() {
        None => Ok(report),
        Some(Ok(a)) => Err(Error::PreconditionFailed(format!(
            "pair is not dual: no witness for a = {a}"
        ))),
        Some(Err(b)) => Err(Error::PreconditionFailed(format!(
            "pair is not dual: no witness for b = {b}"
        ))),
    }
}

#[derive(Debug, Clone)]
pub struct HotzelIsoReport {
    pub duality: DualityReport,
    pub morita_order: usize,
    pub sigma_order: usize,
    pub bijective: bool,
}

/// For a dual pair over a semigroup with weak local units, checks that
/// `B ⊗ A → Σ^β` is an isomorphism.
pub fn verify_hotzel_isomorphism(pair: &Pair) -> Result<HotzelIsoReport> {
    let duality = require_wlu_dual(pair)?;
    let h = hotzel_map(pair)?;
    Ok(HotzelIsoReport {
        duality,
        morita_order: h.morita.order(),
        sigma_order: h.sigma.semigroup.order(),
        bijective: h.morphism.is_bijective(),
    })
}

#[derive(Debug, Clone)]
pub struct RankOneReport {
    pub duality: DualityReport,
    /// Whether `Ω^β` fit under the search guard.
    pub omega_enumerated: bool,
    pub omega_order: Option<usize>,
    pub omega1_size: Option<usize>,
    pub sigma_order: usize,
    /// Every bracket is rank one. Always evaluated.
    pub sigma_in_omega1: bool,
    /// `Σ^β` is an ideal of `Ω^β`, when enumerated.
    pub sigma_is_ideal: Option<bool>,
    /// `Σ^β = Ω_1^β`, when `Ω^β` was enumerated.
    pub equal: Option<bool>,
}

impl RankOneReport {
    /// Fully confirmed equality. A partial report (guard tripped) is not
    /// confirmed.
    pub fn confirmed(&self) -> bool {
        self.sigma_in_omega1 && self.equal == Some(true) && self.sigma_is_ideal == Some(true)
    }
}

/// For a dual pair over a semigroup with weak local units, compares `Σ^β`
/// with `Ω_1^β`. When `Ω^β` exceeds the guard only `Σ ⊆ Ω_1` is checked.
pub fn verify_rank_one_equality(pair: &Pair, limits: SearchLimits) -> Result<RankOneReport> {
    let duality = require_wlu_dual(pair)?;
    let sig = sigma(pair)?;
    let sigma_in_omega1 = sig.semigroup.elements().iter().all(|x| is_rank_one(pair, x));
    let mut report = RankOneReport {
        duality,
        omega_enumerated: false,
        omega_order: None,
        omega1_size: None,
        sigma_order: sig.semigroup.order(),
        sigma_in_omega1,
        sigma_is_ideal: None,
        equal: None,
    };
    let om = match omega(pair, limits) {
        Ok(om) => om,
        Err(Error::SearchSpaceTooLarge { .. }) => return Ok(report),
        Err(e) => return Err(e),
    };
    let o1 = omega1(pair, &om)?;
    let sigma_indices: BTreeSet<usize> = sig
        .semigroup
        .elements()
        .iter()
        .map(|x| {
            om.index_of(x)
                .ok_or_else(|| Error::TheoremViolation("a bracket is missing from Ω".into()))
        })
        .collect::<Result<_>>()?;
    report.omega_enumerated = true;
    report.omega_order = Some(om.order());
    report.omega1_size = Some(o1.len());
    report.sigma_is_ideal = Some(is_ideal(&om, &sigma_indices));
    report.equal = Some(sigma_indices == o1);
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoritaUnitsReport {
    pub base_local_units: bool,
    pub weak_local_units: bool,
    pub local_units: bool,
}

impl MoritaUnitsReport {
    /// `B ⊗ A` has weak local units, and local units when `S` does.
    pub fn confirmed(&self) -> bool {
        self.weak_local_units && (!self.base_local_units || self.local_units)
    }
}

/// Local unit properties of `B ⊗ A` for a dual pair over a semigroup with
/// weak local units.
pub fn morita_units_check(pair: &Pair) -> Result<MoritaUnitsReport> {
    require_wlu_dual(pair)?;
    let morita = MoritaSemigroup::new(pair.pairing())?;
    let t = morita.semigroup();
    Ok(MoritaUnitsReport {
        base_local_units: pair.semigroup().has_local_units(),
        weak_local_units: t.has_weak_local_units(),
        local_units: t.has_local_units(),
    })
}
