//! Rees matrix semigroups `M(S, U, V, p)` and their cover by the Morita
//! semigroup `(U × S) ⊗_S (S × V)`.

use std::sync::Arc;

use crate::acts::{LeftAct, RightAct};
use crate::morita::{tensor_square, MoritaSemigroup, Pairing};
use crate::morphisms::{MorphismQuality, SemigroupMorphism};
use crate::tensor::TossingWitness;
use crate::{saturating_pow, ElementId, Error, FiniteSemigroup, Result};

/// Largest number of sandwich matrices a sweep over one base semigroup may
/// visit.
pub const SANDWICH_SWEEP_CAP: u64 = 4096;

/// Triples `(u, s, v)` with `(u, s, v)(u', s', v') = (u, s·p(v, u')·s', v')`.
/// Element `(u, s, v)` has index `(u·|S| + s)·|V| + v`.
#[derive(Debug, Clone)]
pub struct ReesMatrixSemigroup {
    base: Arc<FiniteSemigroup>,
    u: usize,
    v: usize,
    sandwich: Vec<ElementId>,
    semigroup: Arc<FiniteSemigroup>,
}

impl ReesMatrixSemigroup {
    /// `sandwich[v * |U| + u] = p(v, u)`.
    pub fn new(base: Arc<FiniteSemigroup>, u: usize, v: usize, sandwich: Vec<ElementId>) -> Result<Self> {
        if u == 0 || v == 0 {
            return Err(Error::EmptySemigroup);
        }
        if sandwich.len() != u * v {
            return Err(Error::TableShape {
                expected: u * v,
                found: sandwich.len(),
            });
        }
        if let Some(&value) = sandwich.iter().find(|&&x| x >= base.order()) {
            return Err(Error::OutOfRange {
                value,
                bound: base.order(),
            });
        }
        let n = base.order();
        let order = u * n * v;
        let mut table = vec![0; order * order];
        let idx = |i: usize, s: usize, j: usize| (i * n + s) * v + j;
        for x in 0..order {
            let (u1, s1, v1) = (x / (n * v), (x / v) % n, x % v);
            for y in 0..order {
                let (u2, s2, v2) = (y / (n * v), (y / v) % n, y % v);
                let mid = base.mul3(s1, sandwich[v1 * u + u2], s2);
                table[x * order + y] = idx(u1, mid, v2);
            }
        }
        let semigroup = FiniteSemigroup::new(order, table)
            .map_err(|e| Error::TheoremViolation(format!("Rees matrix product is not associative: {e}")))?;
        Ok(Self {
            base,
            u,
            v,
            sandwich,
            semigroup: Arc::new(semigroup),
        })
    }

    pub fn base(&self) -> &Arc<FiniteSemigroup> {
        &self.base
    }

    pub fn u_size(&self) -> usize {
        self.u
    }

    pub fn v_size(&self) -> usize {
        self.v
    }

    pub fn sandwich(&self) -> &[ElementId] {
        &self.sandwich
    }

    /// `p(v, u)`.
    pub fn sandwich_at(&self, v: usize, u: usize) -> ElementId {
        self.sandwich[v * self.u + u]
    }

    pub fn semigroup(&self) -> &Arc<FiniteSemigroup> {
        &self.semigroup
    }

    pub fn element(&self, u: usize, s: ElementId, v: usize) -> ElementId {
        (u * self.base.order() + s) * self.v + v
    }

    pub fn decode(&self, x: ElementId) -> (usize, ElementId, usize) {
        let n = self.base.order();
        (x / (n * self.v), (x / self.v) % n, x % self.v)
    }

    /// `S·im(p)·S = S`.
    pub fn sandwich_generates(&self) -> bool {
        let s = &self.base;
        let mut hit = vec![false; s.order()];
        for &p in &self.sandwich {
            for x in s.elements() {
                for y in s.elements() {
                    hit[s.mul3(x, p, y)] = true;
                }
            }
        }
        hit.into_iter().all(|h| h)
    }
}

/// Decides factorizability of `M` as `S = S·im(p)·S`, cross-checked against
/// factorizability of the Rees table itself.
pub fn rees_factorizable(m: &ReesMatrixSemigroup) -> Result<bool> {
    let via_sandwich = m.sandwich_generates();
    let direct = m.semigroup.is_factorizable();
    if via_sandwich != direct {
        return Err(Error::TheoremViolation(format!(
            "S·im(p)·S = S is {via_sandwich} but M factorizable is {direct}"
        )));
    }
    Ok(direct)
}

/// The Morita semigroup `Q ⊗_S P` with `Q = U × S`, `P = S × V` and
/// `⟨(s, v), (u, s')⟩ = s·p(v, u)·s'`, together with
/// `ψ: (u, s) ⊗ (t, v) ↦ (u, st, v)`.
#[derive(Debug, Clone)]
pub struct ReesCover {
    pub morita: MoritaSemigroup,
    pub psi: SemigroupMorphism,
    pub quality: MorphismQuality,
}

impl ReesCover {
    pub fn is_unitary(&self) -> bool {
        self.morita.is_unitary()
    }

    pub fn is_surjectively_defined(&self) -> bool {
        self.morita.is_surjectively_defined()
    }
}

/// Builds the cover of `M` for factorizable `S` and checks that `ψ` is a
/// surjective, almost injective morphism along which idempotents lift.
///
/// `Q` has index `u·|S| + s` and `P` has index `s·|V| + v`.
pub fn hotzel_cover(m: &ReesMatrixSemigroup) -> Result<ReesCover> {
    let s = m.base.clone();
    if let Some(x) = s.first_non_product() {
        return Err(Error::NotFactorizable(x));
    }
    let n = s.order();
    let (nu, nv) = (m.u, m.v);
    let q = RightAct::from_fn(s.clone(), nu * n, |qi, x| (qi / n) * n + s.mul(qi % n, x))?;
    let p = LeftAct::from_fn(s.clone(), n * nv, |x, pi| s.mul(x, pi / nv) * nv + pi % nv)?;
    let pairing = Pairing::from_fn(p, q, |pi, qi| {
        let (t, v) = (pi / nv, pi % nv);
        let (u, s2) = (qi / n, qi % n);
        s.mul3(t, m.sandwich_at(v, u), s2)
    })?;
    let morita = MoritaSemigroup::new(&pairing)?;
    let psi_map = morita.tensor().induced_map(|qi, pi| {
        let (u, a) = (qi / n, qi % n);
        let (b, v) = (pi / nv, pi % nv);
        m.element(u, s.mul(a, b), v)
    })?;
    let psi = SemigroupMorphism::new(morita.semigroup().clone(), m.semigroup.clone(), psi_map)
        .map_err(|e| Error::TheoremViolation(format!("ψ is not a semigroup morphism: {e}")))?;
    let quality = psi.quality();
    if !quality.surjective {
        return Err(Error::TheoremViolation("ψ is not surjective".into()));
    }
    if let Some((a, b)) = psi.almost_injectivity_violation() {
        return Err(Error::TheoremViolation(format!(
            "ψ is not injective on the local subsemigroup at classes {a}, {b}"
        )));
    }
    if !quality.idempotents_lift {
        return Err(Error::TheoremViolation("idempotents do not lift along ψ".into()));
    }
    Ok(ReesCover { morita, psi, quality })
}

#[derive(Debug, Clone)]
pub struct CoverInjectivity {
    pub injective: bool,
    /// For firm bases: one tossing witness per pair of `Q × P` elements
    /// with the same image in `M`, connecting it to the least such pair.
    pub witnesses: Vec<TossingWitness>,
}

/// Whether `ψ` is injective. Over a firm base, every collision
/// `(u, st, v) = (u, s't', v)` is additionally backed by an explicit tossing
/// in `Q ⊗_S P`; a missing witness makes the result non-injective.
pub fn cover_injectivity(m: &ReesMatrixSemigroup, cover: &ReesCover) -> CoverInjectivity {
    let injective = cover.psi.is_injective();
    let mut witnesses = Vec::new();
    if m.base.is_firm() {
        let t = cover.morita.tensor();
        let mut first_pair: Vec<Option<(usize, usize)>> = vec![None; m.semigroup.order()];
        let (nq, np) = (t.left_act().size(), t.right_act().size());
        for qi in 0..nq {
            for pi in 0..np {
                let image = cover.psi.apply(t.class_of(qi, pi));
                match first_pair[image] {
                    None => first_pair[image] = Some((qi, pi)),
                    Some(start) => match t.tossing_witness(start, (qi, pi)) {
                        Some(w) => witnesses.push(w),
                        None => {
                            return CoverInjectivity {
                                injective: false,
                                witnesses,
                            }
                        }
                    },
                }
            }
        }
    }
    CoverInjectivity { injective, witnesses }
}

#[derive(Debug, Clone)]
pub struct TensorBaseReport {
    /// Order of `S ⊗_S S`.
    pub square_order: usize,
    pub square_firm: bool,
    pub psi_injective: bool,
    pub rees_factorizable: bool,
    pub surjectively_defined: bool,
    pub unitary: bool,
}

impl TensorBaseReport {
    /// `ψ` is an isomorphism, and the cover is surjectively defined when
    /// `M` is factorizable.
    pub fn confirmed(&self) -> bool {
        self.square_firm && self.psi_injective && self.unitary && (!self.rees_factorizable || self.surjectively_defined)
    }
}

/// For factorizable `S`, covers `M(S ⊗ S, U, V, p)` and checks that the
/// cover is an isomorphism. `sandwich` has entries in `S ⊗ S`.
pub fn tensor_base_cover(
    s: Arc<FiniteSemigroup>,
    u: usize,
    v: usize,
    sandwich: Vec<ElementId>,
) -> Result<TensorBaseReport> {
    if let Some(x) = s.first_non_product() {
        return Err(Error::NotFactorizable(x));
    }
    let square = tensor_square(s);
    let base = square.semigroup().clone();
    let square_firm = base.is_firm();
    let m = ReesMatrixSemigroup::new(base.clone(), u, v, sandwich)?;
    let cover = hotzel_cover(&m)?;
    let rees_factorizable = rees_factorizable(&m)?;
    Ok(TensorBaseReport {
        square_order: base.order(),
        square_firm,
        psi_injective: cover.psi.is_injective(),
        rees_factorizable,
        surjectively_defined: cover.is_surjectively_defined(),
        unitary: cover.is_unitary(),
    })
}

/// All `|V| × |U|` sandwich matrices over a base of the given order, in
/// lexicographic order. Fails beyond [`SANDWICH_SWEEP_CAP`].
pub fn sandwich_matrices(order: usize, u: usize, v: usize) -> Result<Vec<Vec<ElementId>>> {
    let cells = u * v;
    let total = saturating_pow(order, cells);
    if total > SANDWICH_SWEEP_CAP {
        return Err(Error::SearchSpaceTooLarge {
            candidates: total,
            limit: SANDWICH_SWEEP_CAP,
        });
    }
    Ok((0..total as usize)
        .map(|mut code| {
            let mut m = vec![0; cells];
            for slot in m.iter_mut().rev() {
                *slot = code % order;
                code /= order;
            }
            m
        })
        .collect())
}
