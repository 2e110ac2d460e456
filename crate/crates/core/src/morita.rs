//! Morita semigroups defined by pairings, Morita contexts, and the
//! morphisms a context induces.

use std::sync::Arc;

use crate::acts::{Act, Biact, LeftAct, RightAct};
use crate::morphisms::{MorphismQuality, SemigroupMorphism};
use crate::tensor::TensorProduct;
use crate::{Error, FiniteSemigroup, Result};

/// A biact morphism `⟨,⟩: _S P × Q_S → _S S_S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    left: LeftAct,
    right: RightAct,
    table: Vec<usize>,
}

impl Pairing {
    /// `table[p * |Q| + q] = ⟨p, q⟩`. Checks `⟨s·p, q⟩ = s⟨p, q⟩` and
    /// `⟨p, q·s⟩ = ⟨p, q⟩s` for all `s, p, q`.
    pub fn new(left: LeftAct, right: RightAct, table: Vec<usize>) -> Result<Self> {
        let s = left.semigroup().clone();
        if !(Arc::ptr_eq(&s, right.semigroup()) || *s == **right.semigroup()) {
            return Err(Error::SemigroupMismatch);
        }
        let (np, nq) = (left.size(), right.size());
        if table.len() != np * nq {
            return Err(Error::TableShape {
                expected: np * nq,
                found: table.len(),
            });
        }
        if let Some(&value) = table.iter().find(|&&v| v >= s.order()) {
            return Err(Error::OutOfRange {
                value,
                bound: s.order(),
            });
        }
        let pairing = Self { left, right, table };
        for x in s.elements() {
            for p in 0..np {
                for q in 0..nq {
                    let v = pairing.value(p, q);
                    if pairing.value(pairing.left.act(x, p), q) != s.mul(x, v) {
                        return Err(Error::BiactLawViolation(format!("<{x}·{p}, {q}> != {x}<{p}, {q}>")));
                    }
                    if pairing.value(p, pairing.right.act(q, x)) != s.mul(v, x) {
                        return Err(Error::BiactLawViolation(format!("<{p}, {q}·{x}> != <{p}, {q}>{x}")));
                    }
                }
            }
        }
        Ok(pairing)
    }

    pub fn from_fn(left: LeftAct, right: RightAct, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let nq = right.size();
        let table = (0..left.size() * nq).map(|i| f(i / nq, i % nq)).collect();
        Self::new(left, right, table)
    }

    /// Regular acts with `⟨p, q⟩ = pq`.
    pub fn multiplication(s: Arc<FiniteSemigroup>) -> Self {
        let m = s.clone();
        Self::from_fn(LeftAct::regular(s.clone()), RightAct::regular(s), |p, q| m.mul(p, q))
            .expect("multiplication is a biact morphism")
    }

    #[inline]
    pub fn value(&self, p: usize, q: usize) -> usize {
        self.table[p * self.right.size() + q]
    }

    pub fn left(&self) -> &LeftAct {
        &self.left
    }

    pub fn right(&self) -> &RightAct {
        &self.right
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn semigroup(&self) -> &Arc<FiniteSemigroup> {
        self.left.semigroup()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.semigroup().order()];
        for &v in &self.table {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

/// `Q ⊗_S P` with `(q⊗p)(q'⊗p') = q ⊗ ⟨p, q'⟩p'`.
#[derive(Debug, Clone)]
pub struct MoritaSemigroup {
    pairing: Pairing,
    tensor: TensorProduct,
    semigroup: Arc<FiniteSemigroup>,
    unitary: bool,
    surjectively_defined: bool,
}

impl MoritaSemigroup {
    /// Builds the product table on tensor classes and checks that it does
    /// not depend on the chosen representatives.
    pub fn new(pairing: &Pairing) -> Result<Self> {
        let tensor = TensorProduct::new(pairing.right(), pairing.left())?;
        let n = tensor.class_count();
        let product = |(q, p): (usize, usize), (q2, p2): (usize, usize)| {
            tensor.class_of(q, pairing.left.act(pairing.value(p, q2), p2))
        };
        let mut table = vec![0; n * n];
        for c1 in 0..n {
            for c2 in 0..n {
                let v = product(tensor.representative(c1), tensor.representative(c2));
                for &m1 in tensor.members(c1) {
                    for &m2 in tensor.members(c2) {
                        if product(m1, m2) != v {
                            return Err(Error::WellDefinednessViolation(format!(
                                "Morita product of classes {c1} and {c2} depends on representatives {m1:?}, {m2:?}"
                            )));
                        }
                    }
                }
                table[c1 * n + c2] = v;
            }
        }
        let semigroup = FiniteSemigroup::new(n, table)
            .map_err(|e| Error::TheoremViolation(format!("Morita product is not associative: {e}")))?;
        Ok(Self {
            unitary: pairing.left.is_unitary() && pairing.right.is_unitary(),
            surjectively_defined: pairing.is_surjective(),
            pairing: pairing.clone(),
            tensor,
            semigroup: Arc::new(semigroup),
        })
    }

    pub fn semigroup(&self) -> &Arc<FiniteSemigroup> {
        &self.semigroup
    }

    pub fn tensor(&self) -> &TensorProduct {
        &self.tensor
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    pub fn is_unitary(&self) -> bool {
        self.unitary
    }

    pub fn is_surjectively_defined(&self) -> bool {
        self.surjectively_defined
    }

    pub fn order(&self) -> usize {
        self.semigroup.order()
    }
}

/// `S ⊗_S S` as the Morita semigroup of the multiplication pairing.
pub fn tensor_square(s: Arc<FiniteSemigroup>) -> MoritaSemigroup {
    MoritaSemigroup::new(&Pairing::multiplication(s)).expect("multiplication pairing yields a semigroup")
}

/// `(S, T, _S P_T, _T Q_S, θ, φ)` with `θ` and `φ` given on tensor classes.
#[derive(Debug, Clone)]
pub struct MoritaContext {
    p: Biact,
    q: Biact,
    theta: Vec<usize>,
    phi: Vec<usize>,
    p_tensor_q: TensorProduct,
    q_tensor_p: TensorProduct,
}

/// Outcome of one law in [`verify_context`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub law: &'static str,
    /// First failing instance, if any.
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextReport {
    pub checks: Vec<LawCheck>,
    pub unitary: bool,
    pub surjective: bool,
}

impl ContextReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failure.is_none())
    }

    pub fn first_failure(&self) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.failure.is_some())
    }
}

impl MoritaContext {
    /// `theta` is indexed by classes of `P ⊗_T Q`, `phi` by classes of
    /// `Q ⊗_S P`. Only shapes and ranges are checked here; the laws are
    /// checked by [`verify_context`].
    pub fn new(p: Biact, q: Biact, theta: Vec<usize>, phi: Vec<usize>) -> Result<Self> {
        let same = |a: &Arc<FiniteSemigroup>, b: &Arc<FiniteSemigroup>| Arc::ptr_eq(a, b) || a == b;
        if !same(p.left_semigroup(), q.right_semigroup()) || !same(p.right_semigroup(), q.left_semigroup()) {
            return Err(Error::SemigroupMismatch);
        }
        let p_tensor_q = TensorProduct::new(p.right(), q.left())?;
        let q_tensor_p = TensorProduct::new(q.right(), p.left())?;
        for (map, len, bound) in [
            (&theta, p_tensor_q.class_count(), p.left_semigroup().order()),
            (&phi, q_tensor_p.class_count(), p.right_semigroup().order()),
        ] {
            if map.len() != len {
                return Err(Error::MapShape {
                    expected: len,
                    found: map.len(),
                });
            }
            if let Some(&value) = map.iter().find(|&&v| v >= bound) {
                return Err(Error::OutOfRange { value, bound });
            }
        }
        Ok(Self {
            p,
            q,
            theta,
            phi,
            p_tensor_q,
            q_tensor_p,
        })
    }

    /// Builds `θ`, `φ` from maps on pairs; both must be balanced.
    pub fn from_pair_maps(
        p: Biact,
        q: Biact,
        theta: impl Fn(usize, usize) -> usize,
        phi: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let theta = TensorProduct::new(p.right(), q.left())?.induced_map(theta)?;
        let phi = TensorProduct::new(q.right(), p.left())?.induced_map(phi)?;
        Self::new(p, q, theta, phi)
    }

    pub fn s(&self) -> &Arc<FiniteSemigroup> {
        self.p.left_semigroup()
    }

    pub fn t(&self) -> &Arc<FiniteSemigroup> {
        self.p.right_semigroup()
    }

    pub fn p(&self) -> &Biact {
        &self.p
    }

    pub fn q(&self) -> &Biact {
        &self.q
    }

    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    /// `P ⊗_T Q`.
    pub fn p_tensor_q(&self) -> &TensorProduct {
        &self.p_tensor_q
    }

    /// `Q ⊗_S P`.
    pub fn q_tensor_p(&self) -> &TensorProduct {
        &self.q_tensor_p
    }

    /// `θ(p ⊗ q)`.
    pub fn theta_of(&self, p: usize, q: usize) -> usize {
        self.theta[self.p_tensor_q.class_of(p, q)]
    }

    /// `φ(q ⊗ p)`.
    pub fn phi_of(&self, q: usize, p: usize) -> usize {
        self.phi[self.q_tensor_p.class_of(q, p)]
    }

    pub fn theta_is_bijective(&self) -> bool {
        is_bijection(&self.theta, self.s().order())
    }

    pub fn phi_is_bijective(&self) -> bool {
        is_bijection(&self.phi, self.t().order())
    }
}

fn is_bijection(map: &[usize], target: usize) -> bool {
    if map.len() != target {
        return false;
    }
    let mut hit = vec![false; target];
    for &v in map {
        hit[v] = true;
    }
    hit.into_iter().all(|h| h)
}

fn covers(map: &[usize], target: usize) -> bool {
    let mut hit = vec![false; target];
    for &v in map {
        hit[v] = true;
    }
    hit.into_iter().all(|h| h)
}

/// Checks that the biacts commute, that `θ` and `φ` are biact morphisms on
/// the tensor products, and both mixed identities
/// `θ(p⊗q)p' = pφ(q⊗p')` and `q'θ(p⊗q) = φ(q'⊗p)q`.
pub fn verify_context(ctx: &MoritaContext) -> ContextReport {
    let (s, t) = (ctx.s().clone(), ctx.t().clone());
    let (p, q) = (&ctx.p, &ctx.q);
    let mut checks = Vec::new();
    let mut push = |law: &'static str, failure: Option<String>| checks.push(LawCheck { law, failure });

    push(
        "P is an (S,T)-biact",
        Biact::new(p.left().clone(), p.right().clone())
            .err()
            .map(|e| e.to_string()),
    );
    push(
        "Q is a (T,S)-biact",
        Biact::new(q.left().clone(), q.right().clone())
            .err()
            .map(|e| e.to_string()),
    );

    let ptq = &ctx.p_tensor_q;
    let qsp = &ctx.q_tensor_p;
    push(
        "θ preserves the left S-action",
        match ptq.residual_left_action(p.left()) {
            Err(e) => Some(e.to_string()),
            Ok(act) => first(s.elements(), 0..ptq.class_count(), |x, c| {
                ctx.theta[act.act(x, c)] == s.mul(x, ctx.theta[c])
            })
            .map(|(x, c)| format!("θ({x}·class {c}) != {x}·θ(class {c})")),
        },
    );
    push(
        "θ preserves the right S-action",
        match ptq.residual_right_action(q.right()) {
            Err(e) => Some(e.to_string()),
            Ok(act) => first(0..ptq.class_count(), s.elements(), |c, x| {
                ctx.theta[act.act(c, x)] == s.mul(ctx.theta[c], x)
            })
            .map(|(c, x)| format!("θ(class {c}·{x}) != θ(class {c})·{x}")),
        },
    );
    push(
        "φ preserves the left T-action",
        match qsp.residual_left_action(q.left()) {
            Err(e) => Some(e.to_string()),
            Ok(act) => first(t.elements(), 0..qsp.class_count(), |x, c| {
                ctx.phi[act.act(x, c)] == t.mul(x, ctx.phi[c])
            })
            .map(|(x, c)| format!("φ({x}·class {c}) != {x}·φ(class {c})")),
        },
    );
    push(
        "φ preserves the right T-action",
        match qsp.residual_right_action(p.right()) {
            Err(e) => Some(e.to_string()),
            Ok(act) => first(0..qsp.class_count(), t.elements(), |c, x| {
                ctx.phi[act.act(c, x)] == t.mul(ctx.phi[c], x)
            })
            .map(|(c, x)| format!("φ(class {c}·{x}) != φ(class {c})·{x}")),
        },
    );

    let (np, nq) = (p.size(), q.size());
    let mut mixed_p = None;
    'outer: for pp in 0..np {
        for qq in 0..nq {
            for p2 in 0..np {
                let lhs = p.left().act(ctx.theta_of(pp, qq), p2);
                let rhs = p.right().act(pp, ctx.phi_of(qq, p2));
                if lhs != rhs {
                    mixed_p = Some(format!("θ({pp}⊗{qq})·{p2} = {lhs} but {pp}·φ({qq}⊗{p2}) = {rhs}"));
                    break 'outer;
                }
            }
        }
    }
    push("θ(p⊗q)p' = pφ(q⊗p')", mixed_p);

    let mut mixed_q = None;
    'outer: for q2 in 0..nq {
        for pp in 0..np {
            for qq in 0..nq {
                let lhs = q.right().act(q2, ctx.theta_of(pp, qq));
                let rhs = q.left().act(ctx.phi_of(q2, pp), qq);
                if lhs != rhs {
                    mixed_q = Some(format!("{q2}·θ({pp}⊗{qq}) = {lhs} but φ({q2}⊗{pp})·{qq} = {rhs}"));
                    break 'outer;
                }
            }
        }
    }
    push("q'θ(p⊗q) = φ(q'⊗p)q", mixed_q);

    ContextReport {
        checks,
        unitary: p.is_unitary() && q.is_unitary(),
        surjective: covers(&ctx.theta, s.order()) && covers(&ctx.phi, t.order()),
    }
}

fn first(
    xs: impl Iterator<Item = usize> + Clone,
    ys: impl Iterator<Item = usize> + Clone,
    ok: impl Fn(usize, usize) -> bool,
) -> Option<(usize, usize)> {
    for x in xs {
        for y in ys.clone() {
            if !ok(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// The two Morita semigroups of a context and `θ`, `φ` as semigroup
/// morphisms out of them.
#[derive(Debug, Clone)]
pub struct InducedMorphisms {
    /// `P ⊗_T Q` with product `(p⊗q)(p'⊗q') = p ⊗ φ(q⊗p')q'`.
    pub p_tensor_q: MoritaSemigroup,
    /// `Q ⊗_S P` with product `(q⊗p)(q'⊗p') = q ⊗ θ(p⊗q')p'`.
    pub q_tensor_p: MoritaSemigroup,
    pub theta: SemigroupMorphism,
    pub phi: SemigroupMorphism,
    pub theta_quality: MorphismQuality,
    pub phi_quality: MorphismQuality,
}

/// Builds both Morita semigroups of a valid context and checks that `θ`
/// and `φ` are almost injective semigroup morphisms, with idempotents
/// lifting along whichever of them is surjective.
pub fn context_induced_semigroup_morphisms(ctx: &MoritaContext) -> Result<InducedMorphisms> {
    let report = verify_context(ctx);
    if let Some(check) = report.first_failure() {
        return Err(Error::ContextInvalid(format!(
            "{}: {}",
            check.law,
            check.failure.as_deref().unwrap_or_default()
        )));
    }
    let (p, q) = (&ctx.p, &ctx.q);
    let over_t = Pairing::from_fn(q.left().clone(), p.right().clone(), |qq, pp| ctx.phi_of(qq, pp))?;
    let over_s = Pairing::from_fn(p.left().clone(), q.right().clone(), |pp, qq| ctx.theta_of(pp, qq))?;
    let p_tensor_q = MoritaSemigroup::new(&over_t)?;
    let q_tensor_p = MoritaSemigroup::new(&over_s)?;
    debug_assert_eq!(p_tensor_q.tensor().labels(), ctx.p_tensor_q.labels());
    debug_assert_eq!(q_tensor_p.tensor().labels(), ctx.q_tensor_p.labels());

    let theta = SemigroupMorphism::new(p_tensor_q.semigroup().clone(), ctx.s().clone(), ctx.theta.clone())
        .map_err(|e| Error::TheoremViolation(format!("θ is not a semigroup morphism: {e}")))?;
    let phi = SemigroupMorphism::new(q_tensor_p.semigroup().clone(), ctx.t().clone(), ctx.phi.clone())
        .map_err(|e| Error::TheoremViolation(format!("φ is not a semigroup morphism: {e}")))?;
    let theta_quality = theta.quality();
    let phi_quality = phi.quality();
    for (name, quality) in [("θ", theta_quality), ("φ", phi_quality)] {
        if !quality.almost_injective {
            return Err(Error::TheoremViolation(format!("{name} is not almost injective")));
        }
        if quality.surjective && !quality.idempotents_lift {
            return Err(Error::TheoremViolation(format!(
                "{name} is surjective but idempotents do not lift"
            )));
        }
    }
    Ok(InducedMorphisms {
        p_tensor_q,
        q_tensor_p,
        theta,
        phi,
        theta_quality,
        phi_quality,
    })
}

/// The context connecting a factorizable `S` with `T = S ⊗_S S`: `P` and
/// `Q` are `S` with the regular `S`-actions and `T` acting through
/// `μ: s⊗s' ↦ ss'`; `θ(p⊗q) = pq` and `φ(q⊗p) = q⊗p`.
pub fn canonical_context(s: Arc<FiniteSemigroup>) -> Result<MoritaContext> {
    if let Some(x) = s.first_non_product() {
        return Err(Error::NotFactorizable(x));
    }
    let square = tensor_square(s.clone());
    let t = square.semigroup().clone();
    let mu = square.tensor().induced_map(|a, b| s.mul(a, b))?;
    let n = s.order();

    let p = Biact::new(
        LeftAct::regular(s.clone()),
        RightAct::from_fn(t.clone(), n, |x, c| s.mul(x, mu[c]))?,
    )?;
    let q = Biact::new(
        LeftAct::from_fn(t.clone(), n, |c, x| s.mul(mu[c], x))?,
        RightAct::regular(s.clone()),
    )?;
    let ctx = MoritaContext::from_pair_maps(p, q, |a, b| s.mul(a, b), |a, b| square.tensor().class_of(a, b))?;
    let report = verify_context(&ctx);
    if let Some(check) = report.first_failure() {
        return Err(Error::TheoremViolation(format!(
            "canonical context fails {}: {}",
            check.law,
            check.failure.as_deref().unwrap_or_default()
        )));
    }
    Ok(ctx)
}

/// Outcome of checking a context between firm semigroups with bijective
/// `θ` and `φ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FirmContextReport {
    /// `θ: P ⊗_T Q → S` is a semigroup isomorphism.
    pub isomorphism: bool,
    pub unitary: bool,
    pub surjectively_defined: bool,
}

impl FirmContextReport {
    pub fn confirmed(&self) -> bool {
        self.isomorphism && self.unitary && self.surjectively_defined
    }
}

/// For firm `S`, `T` joined by a context with bijective `θ`, `φ`: checks
/// that `S` is isomorphic, via `θ`, to the Morita semigroup `P ⊗_T Q`
/// defined by `φ`, and that this Morita semigroup is unitary and
/// surjectively defined.
pub fn verify_firm_context(ctx: &MoritaContext) -> Result<FirmContextReport> {
    if !ctx.s().is_firm() || !ctx.t().is_firm() {
        return Err(Error::PreconditionFailed("S and T must both be firm".into()));
    }
    if !ctx.theta_is_bijective() || !ctx.phi_is_bijective() {
        return Err(Error::PreconditionFailed("θ and φ must be bijective".into()));
    }
    let induced = context_induced_semigroup_morphisms(ctx)?;
    Ok(FirmContextReport {
        isomorphism: induced.theta.is_bijective(),
        unitary: induced.p_tensor_q.is_unitary(),
        surjectively_defined: induced.p_tensor_q.is_surjectively_defined(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::small;

    fn arc(s: FiniteSemigroup) -> Arc<FiniteSemigroup> {
        Arc::new(s)
    }

    #[test]
    fn pairing_law_violation() {
        let z2 = arc(small::cyclic_group(2));
        let err = Pairing::from_fn(LeftAct::regular(z2.clone()), RightAct::regular(z2), |_, _| 0).unwrap_err();
        assert!(matches!(err, Error::BiactLawViolation(_)));
    }

    #[test]
    fn morita_semigroups_of_multiplication() {
        let z2 = arc(small::cyclic_group(2));
        let m = MoritaSemigroup::new(&Pairing::multiplication(z2.clone())).unwrap();
        assert_eq!(m.order(), 2);
        assert!(m.semigroup().is_isomorphic(&z2));
        assert!(m.is_unitary());
        assert!(m.is_surjectively_defined());

        let t1 = MoritaSemigroup::new(&Pairing::multiplication(arc(small::trivial()))).unwrap();
        assert_eq!(t1.order(), 1);

        let rz2 = arc(small::right_zero(2));
        let m = MoritaSemigroup::new(&Pairing::multiplication(rz2.clone())).unwrap();
        assert_eq!(m.order(), 2);
        assert!(m.is_surjectively_defined());
        assert!(m.semigroup().is_isomorphic(&rz2));
    }

    #[test]
    fn rebuilding_from_table_is_identity() {
        let s = arc(small::semilattice_chain(3));
        let m = MoritaSemigroup::new(&Pairing::multiplication(s)).unwrap();
        let again = FiniteSemigroup::new(m.order(), m.semigroup().table().to_vec()).unwrap();
        assert_eq!(&again, m.semigroup().as_ref());
    }

    fn z2_canonical_style() -> MoritaContext {
        let z2 = arc(small::cyclic_group(2));
        let m = z2.clone();
        let n = z2.clone();
        MoritaContext::from_pair_maps(
            Biact::regular(z2.clone()),
            Biact::regular(z2),
            move |a, b| m.mul(a, b),
            move |a, b| n.mul(a, b),
        )
        .unwrap()
    }

    #[test]
    fn z2_context_passes() {
        let ctx = z2_canonical_style();
        let report = verify_context(&ctx);
        assert!(report.passed(), "{report:?}");
        assert!(report.unitary && report.surjective);
        let induced = context_induced_semigroup_morphisms(&ctx).unwrap();
        assert!(induced.theta.is_bijective());
        assert!(induced.phi.is_bijective());
    }

    #[test]
    fn constant_phi_breaks_mixed_identity() {
        let good = z2_canonical_style();
        let ctx = MoritaContext::new(good.p().clone(), good.q().clone(), good.theta().to_vec(), vec![0, 0]).unwrap();
        let report = verify_context(&ctx);
        assert!(!report.passed());
        let failing: Vec<_> = report
            .checks
            .iter()
            .filter(|c| c.failure.is_some())
            .map(|c| c.law)
            .collect();
        assert!(failing.contains(&"θ(p⊗q)p' = pφ(q⊗p')"), "{failing:?}");
        assert!(matches!(
            context_induced_semigroup_morphisms(&ctx),
            Err(Error::ContextInvalid(_))
        ));
    }

    #[test]
    fn canonical_contexts() {
        for s in [small::trivial(), small::cyclic_group(2), small::right_zero(2)] {
            let s = arc(s);
            let ctx = canonical_context(s.clone()).unwrap();
            assert!(verify_context(&ctx).passed());
            assert!(ctx.theta_is_bijective());
            let induced = context_induced_semigroup_morphisms(&ctx).unwrap();
            assert!(induced.theta_quality.strict_local_iso);
            assert!(induced.theta_quality.idempotents_lift);
            let firm = verify_firm_context(&ctx).unwrap();
            assert!(firm.confirmed(), "{firm:?}");
        }
        assert_eq!(
            canonical_context(arc(small::null(2))).unwrap_err(),
            Error::NotFactorizable(1)
        );
    }

    #[test]
    fn non_bijective_theta_is_rejected() {
        // One-point acts over the chain {0 < 1}, both maps sending the single
        // class to the zero 0.
        let s = arc(small::semilattice_chain(2));
        let point = |s: &Arc<FiniteSemigroup>| {
            Biact::new(
                LeftAct::from_fn(s.clone(), 1, |_, _| 0).unwrap(),
                RightAct::from_fn(s.clone(), 1, |_, _| 0).unwrap(),
            )
            .unwrap()
        };
        let ctx = MoritaContext::new(point(&s), point(&s), vec![0], vec![0]).unwrap();
        assert!(verify_context(&ctx).passed());
        assert!(matches!(verify_firm_context(&ctx), Err(Error::PreconditionFailed(_))));
    }
}
