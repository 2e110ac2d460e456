//! Runs the structural theorems over a corpus of semigroups.
//!
//! Every check first tests its hypotheses on the instance. Instances that
//! do not satisfy them are reported as skipped, never as passed. Each
//! report line covers one theorem on one corpus member and aggregates all
//! derived cases (sandwich matrices, morphisms, endomorphisms) checked for
//! it; a failure names the first failing case.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::acts::{enumerate_endomorphisms, LeftAct, RightAct};
use crate::corpus::{enumerate_semigroups, Dedup};
use crate::dual_pairs::{
    hotzel_map, is_dual_pair, morita_units_check, sigma, verify_hotzel_isomorphism, verify_rank_one_equality, Pair,
};
use crate::morita::{canonical_context, context_induced_semigroup_morphisms, tensor_square, verify_firm_context};
use crate::morphisms::{act_to_semigroup, one_sided_injectivity, sli_to_act, MorphismQuality, SemigroupMorphism};
use crate::rees::{
    cover_injectivity, hotzel_cover, rees_factorizable, sandwich_matrices, tensor_base_cover, ReesMatrixSemigroup,
};
use crate::tensor::TensorProduct;
use crate::{saturating_pow, Error, FiniteSemigroup, Result, SearchLimits};

/// Largest `|U|`, `|V|` in Rees sweeps.
pub const MAX_REES_INDEX: usize = 2;

/// Targets of morphism sweeps have at most this order.
pub const MAX_TARGET_ORDER: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    ClassChain,
    TensorSoundness,
    MultiplicationSli,
    ContextMorphisms,
    FirmContext,
    ReesCover,
    ReesFirmInjective,
    TensorBaseCover,
    OneSidedInjectivity,
    ActSemigroup,
    SliAct,
    HotzelSli,
    HotzelIso,
    SigmaRankOne,
    BracketProduct,
    MoritaUnits,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::ClassChain,
        TheoremId::TensorSoundness,
        TheoremId::MultiplicationSli,
        TheoremId::ContextMorphisms,
        TheoremId::FirmContext,
        TheoremId::ReesCover,
        TheoremId::ReesFirmInjective,
        TheoremId::TensorBaseCover,
        TheoremId::OneSidedInjectivity,
        TheoremId::ActSemigroup,
        TheoremId::SliAct,
        TheoremId::HotzelSli,
        TheoremId::HotzelIso,
        TheoremId::SigmaRankOne,
        TheoremId::BracketProduct,
        TheoremId::MoritaUnits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::ClassChain => "class-chain",
            TheoremId::TensorSoundness => "tensor-soundness",
            TheoremId::MultiplicationSli => "multiplication-sli",
            TheoremId::ContextMorphisms => "context-morphisms",
            TheoremId::FirmContext => "firm-context",
            TheoremId::ReesCover => "rees-cover",
            TheoremId::ReesFirmInjective => "rees-firm-injective",
            TheoremId::TensorBaseCover => "tensor-base-cover",
            TheoremId::OneSidedInjectivity => "one-sided-injectivity",
            TheoremId::ActSemigroup => "act-semigroup",
            TheoremId::SliAct => "sli-act",
            TheoremId::HotzelSli => "hotzel-sli",
            TheoremId::HotzelIso => "hotzel-iso",
            TheoremId::SigmaRankOne => "sigma-rank-one",
            TheoremId::BracketProduct => "bracket-product",
            TheoremId::MoritaUnits => "morita-units",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::ClassChain => "LU ⇒ WLU ⇒ firm ⇒ factorizable and CWLU ⇒ firm",
            TheoremId::TensorSoundness => {
                "S ⊗ S identifies (a·s, b) with (a, s·b) and equals the fixed-point closure of those identifications"
            }
            TheoremId::MultiplicationSli => "for factorizable S, μ: S ⊗ S → S is a strict local isomorphism",
            TheoremId::ContextMorphisms => {
                "in the canonical context of a factorizable S, θ and φ are almost injective and lift idempotents when surjective"
            }
            TheoremId::FirmContext => {
                "for firm S, S is isomorphic via θ to a unitary surjectively defined Morita semigroup"
            }
            TheoremId::ReesCover => {
                "for factorizable S, ψ: (U×S) ⊗ (S×V) → M(S,U,V,p) is a surjective almost injective morphism lifting idempotents"
            }
            TheoremId::ReesFirmInjective => "for firm S, ψ is injective, with every collision explained by a tossing",
            TheoremId::TensorBaseCover => "for factorizable S, the cover of M(S ⊗ S,U,V,p) is an isomorphism",
            TheoremId::OneSidedInjectivity => {
                "for sources with CWLU, almost injective ⇔ injective on all sS ⇔ injective on all Ss"
            }
            TheoremId::ActSemigroup => "an act morphism ρ: A → S_S makes A a semigroup with ρ almost injective",
            TheoremId::SliAct => "a strict local isomorphism from a CWLU semigroup induces a right act",
            TheoremId::HotzelSli => "b ⊗ a ↦ [b, a] is a strict local isomorphism lifting idempotents",
            TheoremId::HotzelIso => "for dual pairs over WLU semigroups, b ⊗ a ↦ [b, a] is bijective",
            TheoremId::SigmaRankOne => "for dual pairs over WLU semigroups, Σ equals the rank-one adjoint pairs",
            TheoremId::BracketProduct => "[b, a][b', a'] = [b, ⟨a, b'⟩a'] as a product of adjoint pairs",
            TheoremId::MoritaUnits => "for dual pairs over WLU semigroups, B ⊗ A has weak local units, local if S has",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        TheoremId::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| {
            let names: Vec<_> = TheoremId::ALL.iter().map(|t| t.name()).collect();
            format!("unknown theorem `{s}`; expected one of {}", names.join(", "))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skip => "skip",
        }
    }
}

/// One theorem checked on one corpus member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub instance: String,
    pub hash: String,
    pub verdict: Verdict,
    /// Derived cases checked.
    pub cases: usize,
    /// Failure witness, or the reason for skipping.
    pub detail: Option<String>,
}

impl VerificationReport {
    /// `theorem=… instance=… hash=… verdict=… cases=… detail=…`, with the
    /// free-text detail last.
    pub fn line(&self) -> String {
        format!(
            "theorem={} instance={} hash={} verdict={} cases={} detail={}",
            self.theorem,
            self.instance,
            self.hash,
            self.verdict.name(),
            self.cases,
            self.detail.as_deref().unwrap_or("-")
        )
    }
}

/// `n=<order>:<row>/<row>/…` with rows as digit strings for orders up to
/// ten, comma separated otherwise.
pub fn describe(s: &FiniteSemigroup) -> String {
    let sep = if s.order() <= 10 { "" } else { "," };
    let rows: Vec<String> = s
        .rows()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep))
        .collect();
    format!("n={}:{}", s.order(), rows.join("/"))
}

/// First 16 hex digits of the SHA-256 of [`describe`].
pub fn instance_hash(s: &FiniteSemigroup) -> String {
    let digest = Sha256::digest(describe(s).as_bytes());
    hex::encode(&digest[..8])
}

struct Outcome {
    verdict: Verdict,
    cases: usize,
    detail: Option<String>,
}

impl Outcome {
    fn pass(cases: usize) -> Self {
        Self {
            verdict: Verdict::Pass,
            cases,
            detail: None,
        }
    }

    fn fail(cases: usize, detail: impl Into<String>) -> Self {
        Self {
            verdict: Verdict::Fail,
            cases,
            detail: Some(detail.into()),
        }
    }

    fn skip(reason: impl Into<String>) -> Self {
        Self {
            verdict: Verdict::Skip,
            cases: 0,
            detail: Some(reason.into()),
        }
    }

    /// Errors from the checked construction: guard trips skip, anything
    /// else is a failure.
    fn from_error(cases: usize, context: &str, e: Error) -> Self {
        match e {
            Error::SearchSpaceTooLarge { .. } => Self::skip(format!("{context}: {e}")),
            _ => Self::fail(cases, format!("{context}: {e}")),
        }
    }
}

/// Shared inputs of a suite run.
pub struct Suite {
    targets: Vec<Arc<FiniteSemigroup>>,
    limits: SearchLimits,
}

impl Suite {
    pub fn new(limits: SearchLimits) -> Result<Self> {
        let mut targets = Vec::new();
        for n in 1..=MAX_TARGET_ORDER {
            targets.extend(
                enumerate_semigroups(n, Dedup::Labeled, false)?
                    .into_iter()
                    .map(Arc::new),
            );
        }
        Ok(Self { targets, limits })
    }

    /// Reports in `(theorem, corpus position)` order.
    pub fn run(&self, corpus: &[FiniteSemigroup], theorems: &[TheoremId]) -> Vec<VerificationReport> {
        let mut theorems = theorems.to_vec();
        theorems.sort();
        theorems.dedup();
        let per_instance: Vec<Vec<VerificationReport>> = corpus
            .par_iter()
            .map(|s| {
                let s = Arc::new(s.clone());
                let (instance, hash) = (describe(&s), instance_hash(&s));
                theorems
                    .iter()
                    .map(|&t| {
                        let o = self.check(t, &s);
                        VerificationReport {
                            theorem: t,
                            instance: instance.clone(),
                            hash: hash.clone(),
                            verdict: o.verdict,
                            cases: o.cases,
                            detail: o.detail,
                        }
                    })
                    .collect()
            })
            .collect();
        let mut out = Vec::with_capacity(corpus.len() * theorems.len());
        for (ti, _) in theorems.iter().enumerate() {
            for reports in &per_instance {
                out.push(reports[ti].clone());
            }
        }
        out
    }

    fn check(&self, theorem: TheoremId, s: &Arc<FiniteSemigroup>) -> Outcome {
        match theorem {
            TheoremId::ClassChain => check_class_chain(s),
            TheoremId::TensorSoundness => check_tensor_soundness(s),
            TheoremId::MultiplicationSli => check_multiplication_sli(s),
            TheoremId::ContextMorphisms => check_context_morphisms(s),
            TheoremId::FirmContext => check_firm_context(s),
            TheoremId::ReesCover => check_rees_cover(s),
            TheoremId::ReesFirmInjective => check_rees_firm_injective(s),
            TheoremId::TensorBaseCover => check_tensor_base_cover(s),
            TheoremId::OneSidedInjectivity => self.check_one_sided(s),
            TheoremId::ActSemigroup => self.check_act_semigroup(s),
            TheoremId::SliAct => self.check_sli_act(s),
            TheoremId::HotzelSli => check_hotzel_sli(s),
            TheoremId::HotzelIso => check_hotzel_iso(s),
            TheoremId::SigmaRankOne => self.check_sigma_rank_one(s),
            TheoremId::BracketProduct => check_bracket_product(s),
            TheoremId::MoritaUnits => check_morita_units(s),
        }
    }

    fn check_one_sided(&self, s: &Arc<FiniteSemigroup>) -> Outcome {
        if !s.has_common_weak_local_units() {
            return Outcome::skip("source lacks common weak local units");
        }
        let mut cases = 0;
        for (ti, t) in self.targets.iter().enumerate() {
            for map in multiplicative_maps(s, t) {
                let f = SemigroupMorphism::new(s.clone(), t.clone(), map).expect("filtered multiplicative");
                cases += 1;
                match one_sided_injectivity(&f) {
                    Ok(r) if r.all_agree() => {}
                    Ok(r) => {
                        return Outcome::fail(cases, format!("target #{ti} {} map {:?}: {r:?}", describe(t), f.map()))
                    }
                    Err(e) => return Outcome::from_error(cases, "one-sided injectivity", e),
                }
            }
        }
        Outcome::pass(cases)
    }

    fn check_act_semigroup(&self, s: &Arc<FiniteSemigroup>) -> Outcome {
        let act = RightAct::regular(s.clone());
        let ends = match enumerate_endomorphisms(&act, self.limits) {
            Ok(e) => e,
            Err(e) => return Outcome::from_error(0, "endomorphisms of S_S", e),
        };
        for (i, rho) in ends.iter().enumerate() {
            match act_to_semigroup(&act, rho) {
                Ok(out) => {
                    if let Some(d) = regular_lifting_gap(&out.quality) {
                        return Outcome::fail(i + 1, format!("ρ = {:?}: {d}", rho.map()));
                    }
                }
                Err(e) => return Outcome::fail(i + 1, format!("ρ = {:?}: {e}", rho.map())),
            }
        }
        Outcome::pass(ends.len())
    }

    fn check_sli_act(&self, t: &Arc<FiniteSemigroup>) -> Outcome {
        if !t.has_common_weak_local_units() {
            return Outcome::skip("source lacks common weak local units");
        }
        let mut cases = 0;
        for target in self.targets.iter().filter(|x| x.order() <= t.order()) {
            for map in multiplicative_maps(t, target) {
                let tau = SemigroupMorphism::new(t.clone(), target.clone(), map).expect("filtered multiplicative");
                if !tau.quality().strict_local_iso {
                    continue;
                }
                cases += 1;
                if let Err(e) = sli_to_act(&tau) {
                    return Outcome::fail(cases, format!("τ into {} = {:?}: {e}", describe(target), tau.map()));
                }
            }
        }
        Outcome::pass(cases)
    }

    fn check_sigma_rank_one(&self, s: &Arc<FiniteSemigroup>) -> Outcome {
        let pair = Pair::multiplication(s.clone());
        if let Some(reason) = wlu_dual_gap(s, &pair) {
            return Outcome::skip(reason);
        }
        match verify_rank_one_equality(&pair, self.limits) {
            Ok(r) if !r.sigma_in_omega1 => Outcome::fail(1, "a bracket is not rank one"),
            Ok(r) if !r.omega_enumerated => Outcome::skip("Ω exceeds the search guard; only Σ ⊆ Ω_1 was checked"),
            Ok(r) if r.confirmed() => Outcome::pass(1),
            Ok(r) => Outcome::fail(
                1,
                format!(
                    "|Σ| = {} |Ω_1| = {:?} |Ω| = {:?} equal = {:?} ideal = {:?}",
                    r.sigma_order, r.omega1_size, r.omega_order, r.equal, r.sigma_is_ideal
                ),
            ),
            Err(e) => Outcome::from_error(1, "rank-one equality", e),
        }
    }
}

/// Regular elements fail to lift along a strict local isomorphism along
/// which idempotents lift.
fn regular_lifting_gap(q: &MorphismQuality) -> Option<&'static str> {
    (q.strict_local_iso && q.idempotents_lift && !q.regulars_lift)
        .then_some("idempotents lift along a strict local isomorphism but regular elements do not")
}

fn multiplicative_maps(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Vec<Vec<usize>> {
    let (n, m) = (s.order(), t.order());
    let total = saturating_pow(m, n) as usize;
    (0..total)
        .filter_map(|mut code| {
            let mut map = vec![0; n];
            for slot in map.iter_mut().rev() {
                *slot = code % m;
                code /= m;
            }
            let ok = s
                .elements()
                .all(|x| s.elements().all(|y| map[s.mul(x, y)] == t.mul(map[x], map[y])));
            ok.then_some(map)
        })
        .collect()
}

fn check_class_chain(s: &FiniteSemigroup) -> Outcome {
    let report = s.classify();
    match report.chain_violation() {
        None => Outcome::pass(1),
        Some(v) => Outcome::fail(1, format!("{v}: {report:?}")),
    }
}

/// Least equivalence containing the generating identifications, by
/// repeated transitive closure until nothing changes.
#[allow(clippy::needless_range_loop)]
fn closure_oracle(left: &RightAct, right: &LeftAct) -> Vec<Vec<bool>> {
    let (na, nb) = (left.size(), right.size());
    let n = na * nb;
    let mut rel = vec![vec![false; n]; n];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for a in 0..na {
        for x in left.semigroup().elements() {
            for b in 0..nb {
                let (p, q) = (left.act(a, x) * nb + b, a * nb + right.act(x, b));
                rel[p][q] = true;
                rel[q][p] = true;
            }
        }
    }
    loop {
        let mut changed = false;
        for i in 0..n {
            for k in 0..n {
                if !rel[i][k] {
                    continue;
                }
                for j in 0..n {
                    if rel[k][j] && !rel[i][j] {
                        rel[i][j] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return rel;
        }
    }
}

fn check_tensor_soundness(s: &Arc<FiniteSemigroup>) -> Outcome {
    let left = RightAct::regular(s.clone());
    let right = LeftAct::regular(s.clone());
    let t = match TensorProduct::new(&left, &right) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(0, format!("tensor construction: {e}")),
    };
    let n = s.order();
    let mut cases = 0;
    for a in 0..n {
        for x in s.elements() {
            for b in 0..n {
                cases += 1;
                if t.class_of(s.mul(a, x), b) != t.class_of(a, s.mul(x, b)) {
                    return Outcome::fail(cases, format!("class({a}·{x}, {b}) != class({a}, {x}·{b})"));
                }
            }
        }
    }
    let rel = closure_oracle(&left, &right);
    for (i, row) in rel.iter().enumerate() {
        for (j, &related) in row.iter().enumerate() {
            let same = t.class_of(i / n, i % n) == t.class_of(j / n, j % n);
            if same != related {
                return Outcome::fail(
                    cases,
                    format!(
                        "({}, {}) and ({}, {}) disagree with the closure oracle",
                        i / n,
                        i % n,
                        j / n,
                        j % n
                    ),
                );
            }
        }
    }
    Outcome::pass(cases)
}

fn require_factorizable(s: &FiniteSemigroup) -> Option<Outcome> {
    s.first_non_product()
        .map(|x| Outcome::skip(format!("not factorizable: {x} is not a product")))
}

fn check_multiplication_sli(s: &Arc<FiniteSemigroup>) -> Outcome {
    if let Some(o) = require_factorizable(s) {
        return o;
    }
    let square = tensor_square(s.clone());
    let mu = match square.tensor().induced_map(|a, b| s.mul(a, b)) {
        Ok(m) => m,
        Err(e) => return Outcome::fail(1, format!("μ: {e}")),
    };
    match SemigroupMorphism::new(square.semigroup().clone(), s.clone(), mu) {
        Ok(f) => {
            let q = f.quality();
            if !q.strict_local_iso {
                Outcome::fail(1, format!("μ is not a strict local isomorphism: {q:?}"))
            } else if let Some(d) = regular_lifting_gap(&q) {
                Outcome::fail(1, d)
            } else {
                Outcome::pass(1)
            }
        }
        Err(e) => Outcome::fail(1, format!("μ is not multiplicative: {e}")),
    }
}

fn check_context_morphisms(s: &Arc<FiniteSemigroup>) -> Outcome {
    if let Some(o) = require_factorizable(s) {
        return o;
    }
    let ctx = match canonical_context(s.clone()) {
        Ok(c) => c,
        Err(e) => return Outcome::fail(1, format!("canonical context: {e}")),
    };
    match context_induced_semigroup_morphisms(&ctx) {
        Ok(m) => {
            for (name, q) in [("θ", m.theta_quality), ("φ", m.phi_quality)] {
                if let Some(d) = regular_lifting_gap(&q) {
                    return Outcome::fail(1, format!("{name}: {d}"));
                }
            }
            Outcome::pass(1)
        }
        Err(e) => Outcome::fail(1, e.to_string()),
    }
}

fn check_firm_context(s: &Arc<FiniteSemigroup>) -> Outcome {
    if !s.is_firm() {
        return Outcome::skip("not firm");
    }
    let ctx = match canonical_context(s.clone()) {
        Ok(c) => c,
        Err(e) => return Outcome::fail(1, format!("canonical context: {e}")),
    };
    match verify_firm_context(&ctx) {
        Ok(r) if r.confirmed() => Outcome::pass(1),
        Ok(r) => Outcome::fail(1, format!("{r:?}")),
        Err(Error::PreconditionFailed(reason)) => Outcome::skip(reason),
        Err(e) => Outcome::fail(1, e.to_string()),
    }
}

/// `(|U|, |V|, p)` for every shape up to [`MAX_REES_INDEX`] whose matrix
/// count fits under the sweep cap.
fn sandwich_sweep(order: usize) -> Vec<(usize, usize, Vec<usize>)> {
    let mut out = Vec::new();
    for u in 1..=MAX_REES_INDEX {
        for v in 1..=MAX_REES_INDEX {
            if let Ok(ms) = sandwich_matrices(order, u, v) {
                out.extend(ms.into_iter().map(|p| (u, v, p)));
            }
        }
    }
    out
}

fn rees_case(u: usize, v: usize, p: &[usize]) -> String {
    format!("|U|={u} |V|={v} p={p:?}")
}

fn check_rees_cover(s: &Arc<FiniteSemigroup>) -> Outcome {
    if let Some(o) = require_factorizable(s) {
        return o;
    }
    let sweep = sandwich_sweep(s.order());
    for (i, (u, v, p)) in sweep.iter().enumerate() {
        let case = rees_case(*u, *v, p);
        let m = match ReesMatrixSemigroup::new(s.clone(), *u, *v, p.clone()) {
            Ok(m) => m,
            Err(e) => return Outcome::fail(i + 1, format!("{case}: {e}")),
        };
        if let Err(e) = rees_factorizable(&m) {
            return Outcome::fail(i + 1, format!("{case}: {e}"));
        }
        match hotzel_cover(&m) {
            Ok(cover) => {
                if let Some(d) = regular_lifting_gap(&cover.quality) {
                    return Outcome::fail(i + 1, format!("{case}: {d}"));
                }
            }
            Err(e) => return Outcome::fail(i + 1, format!("{case}: {e}")),
        }
    }
    Outcome::pass(sweep.len())
}

fn check_rees_firm_injective(s: &Arc<FiniteSemigroup>) -> Outcome {
    if !s.is_firm() {
        return Outcome::skip("not firm");
    }
    let sweep = sandwich_sweep(s.order());
    for (i, (u, v, p)) in sweep.iter().enumerate() {
        let case = rees_case(*u, *v, p);
        let result = ReesMatrixSemigroup::new(s.clone(), *u, *v, p.clone()).and_then(|m| {
            let cover = hotzel_cover(&m)?;
            Ok((cover_injectivity(&m, &cover), cover))
        });
        match result {
            Ok((inj, cover)) => {
                if !inj.injective {
                    return Outcome::fail(i + 1, format!("{case}: ψ is not injective"));
                }
                if let Some(w) = inj.witnesses.iter().find(|w| !w.replays(cover.morita.tensor())) {
                    return Outcome::fail(
                        i + 1,
                        format!("{case}: tossing {:?} → {:?} does not replay", w.start, w.end),
                    );
                }
            }
            Err(e) => return Outcome::fail(i + 1, format!("{case}: {e}")),
        }
    }
    Outcome::pass(sweep.len())
}

fn check_tensor_base_cover(s: &Arc<FiniteSemigroup>) -> Outcome {
    if let Some(o) = require_factorizable(s) {
        return o;
    }
    let square_order = tensor_square(s.clone()).order();
    let sweep = sandwich_sweep(square_order);
    for (i, (u, v, p)) in sweep.iter().enumerate() {
        let case = rees_case(*u, *v, p);
        match tensor_base_cover(s.clone(), *u, *v, p.clone()) {
            Ok(r) if r.confirmed() => {}
            Ok(r) => return Outcome::fail(i + 1, format!("{case}: {r:?}")),
            Err(e) => return Outcome::fail(i + 1, format!("{case}: {e}")),
        }
    }
    Outcome::pass(sweep.len())
}

fn check_hotzel_sli(s: &Arc<FiniteSemigroup>) -> Outcome {
    match hotzel_map(&Pair::multiplication(s.clone())) {
        Ok(h) => match regular_lifting_gap(&h.quality) {
            Some(d) => Outcome::fail(1, d),
            None => Outcome::pass(1),
        },
        Err(e) => Outcome::fail(1, e.to_string()),
    }
}

fn wlu_dual_gap(s: &FiniteSemigroup, pair: &Pair) -> Option<&'static str> {
    if !s.has_weak_local_units() {
        Some("no weak local units")
    } else if !is_dual_pair(pair) {
        Some("multiplication pair is not dual")
    } else {
        None
    }
}

fn check_hotzel_iso(s: &Arc<FiniteSemigroup>) -> Outcome {
    let pair = Pair::multiplication(s.clone());
    if let Some(reason) = wlu_dual_gap(s, &pair) {
        return Outcome::skip(reason);
    }
    match verify_hotzel_isomorphism(&pair) {
        Ok(r) if r.bijective && r.morita_order == r.sigma_order => Outcome::pass(1),
        Ok(r) => Outcome::fail(1, format!("|B⊗A| = {} |Σ| = {}", r.morita_order, r.sigma_order)),
        Err(e) => Outcome::fail(1, e.to_string()),
    }
}

fn check_bracket_product(s: &Arc<FiniteSemigroup>) -> Outcome {
    let pair = Pair::multiplication(s.clone());
    match sigma(&pair) {
        Ok(_) => Outcome::pass(pair.a_size().pow(2) * pair.b_size().pow(2)),
        Err(e) => Outcome::fail(1, e.to_string()),
    }
}

fn check_morita_units(s: &Arc<FiniteSemigroup>) -> Outcome {
    let pair = Pair::multiplication(s.clone());
    if let Some(reason) = wlu_dual_gap(s, &pair) {
        return Outcome::skip(reason);
    }
    match morita_units_check(&pair) {
        Ok(r) if r.confirmed() => Outcome::pass(1),
        Ok(r) => Outcome::fail(1, format!("{r:?}")),
        Err(e) => Outcome::fail(1, e.to_string()),
    }
}

/// Pass, fail and skip counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub cases: usize,
}

pub fn tally(reports: &[VerificationReport]) -> BTreeMap<TheoremId, Tally> {
    let mut out: BTreeMap<TheoremId, Tally> = BTreeMap::new();
    for r in reports {
        let t = out.entry(r.theorem).or_default();
        match r.verdict {
            Verdict::Pass => t.pass += 1,
            Verdict::Fail => t.fail += 1,
            Verdict::Skip => t.skip += 1,
        }
        t.cases += r.cases;
    }
    out
}

/// The machine-readable report: a header, one line per report and one
/// summary line per theorem. Contains nothing run-dependent.
pub fn render_report(corpus_description: &str, reports: &[VerificationReport]) -> String {
    let mut out = String::from("# sgx verification report\n");
    out.push_str(&format!("# corpus {corpus_description}\n"));
    for r in reports {
        out.push_str(&r.line());
        out.push('\n');
    }
    for (theorem, t) in tally(reports) {
        out.push_str(&format!(
            "summary theorem={theorem} pass={} fail={} skip={} cases={}\n",
            t.pass, t.fail, t.skip, t.cases
        ));
    }
    out
}
