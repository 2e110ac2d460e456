//! Acceptance checks. Each criterion prints one PASS or FAIL line, and the
//! process exits nonzero if any criterion fails. Every library result is
//! compared against an oracle written here from the definitions.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::sync::Arc;

use sgx_core::acts::{LeftAct, RightAct};
use sgx_core::corpus::{enumerate_semigroups, Dedup};
use sgx_core::dual_pairs::{
    bracket, hotzel_map, omega, omega1, sigma, verify_hotzel_isomorphism, verify_rank_one_equality, AdjointPair, Pair,
};
use sgx_core::morita::{canonical_context, context_induced_semigroup_morphisms};
use sgx_core::morphisms::{one_sided_injectivity, SemigroupMorphism};
use sgx_core::rees::{hotzel_cover, ReesMatrixSemigroup};
use sgx_core::tensor::TensorProduct;
use sgx_core::{FiniteSemigroup, SearchLimits};

type Check = Result<String, String>;

/// A Cayley table `t[x * n + y]`.
#[derive(Clone)]
struct Table {
    n: usize,
    t: Vec<usize>,
}

impl Table {
    fn of(s: &FiniteSemigroup) -> Self {
        Self {
            n: s.order(),
            t: s.table().to_vec(),
        }
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        self.t[x * self.n + y]
    }

    fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&e| self.mul(e, e) == e).collect()
    }
}

fn tables(cells: usize, bound: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..bound.pow(cells as u32)).map(move |mut code| {
        let mut t = vec![0; cells];
        for slot in t.iter_mut().rev() {
            *slot = code % bound;
            code /= bound;
        }
        t
    })
}

fn associative(n: usize, t: &[usize]) -> bool {
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]])))
}

/// Every associative table of order `n`, by exhaustive search.
fn naive_semigroups(n: usize) -> Vec<Vec<usize>> {
    tables(n * n, n).filter(|t| associative(n, t)).collect()
}

fn corpus() -> Vec<Arc<FiniteSemigroup>> {
    (1..=3).flat_map(naive_semigroups_of).collect()
}

fn naive_semigroups_of(n: usize) -> Vec<Arc<FiniteSemigroup>> {
    naive_semigroups(n)
        .into_iter()
        .map(|t| Arc::new(FiniteSemigroup::new(n, t).unwrap()))
        .collect()
}

/// Equivalence generated by `pairs` on `0..size`, as a reachability matrix
/// iterated to a fixed point.
fn closure_oracle(size: usize, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut rel = vec![vec![false; size]; size];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(x, y) in pairs {
        rel[x][y] = true;
        rel[y][x] = true;
    }
    loop {
        let mut changed = false;
        for i in 0..size {
            for j in 0..size {
                if rel[i][j] {
                    continue;
                }
                if (0..size).any(|k| rel[i][k] && rel[k][j]) {
                    rel[i][j] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return rel;
        }
    }
}

/// Identifications `(x·s, y) ~ (x, s·y)` on `A × B`, indexed `x·|B| + y`.
fn tensor_relation(
    n: usize,
    na: usize,
    nb: usize,
    right: impl Fn(usize, usize) -> usize,
    left: impl Fn(usize, usize) -> usize,
) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for x in 0..na {
        for s in 0..n {
            for y in 0..nb {
                pairs.push((right(x, s) * nb + y, x * nb + left(s, y)));
            }
        }
    }
    pairs
}

fn square_closure(s: &Table) -> Vec<Vec<bool>> {
    let pairs = tensor_relation(s.n, s.n, s.n, |x, y| s.mul(x, y), |x, y| s.mul(x, y));
    closure_oracle(s.n * s.n, &pairs)
}

struct Classes {
    lu: bool,
    wlu: bool,
    cwlu: bool,
    firm: bool,
    factorizable: bool,
}

fn classes(s: &Table) -> Classes {
    let n = s.n;
    let idem = s.idempotents();
    let lu = (0..n).all(|x| idem.iter().any(|&f| s.mul(f, x) == x) && idem.iter().any(|&e| s.mul(x, e) == x));
    let wlu = (0..n).all(|x| (0..n).any(|u| s.mul(u, x) == x) && (0..n).any(|v| s.mul(x, v) == x));
    let cwlu = (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).any(|u| s.mul(u, x) == x && s.mul(u, y) == y) && (0..n).any(|v| s.mul(x, v) == x && s.mul(y, v) == y)
        })
    });
    let factorizable = (0..n).all(|z| s.t.contains(&z));
    let rel = square_closure(s);
    let firm = rel.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, &related)| related == (s.mul(i / n, i % n) == s.mul(j / n, j % n)))
    });
    Classes {
        lu,
        wlu,
        cwlu,
        firm: firm && factorizable,
        factorizable,
    }
}

fn is_morphism(src: &Table, dst: &Table, f: &[usize]) -> bool {
    (0..src.n).all(|x| (0..src.n).all(|y| f[src.mul(x, y)] == dst.mul(f[x], f[y])))
}

fn injective_on(f: &[usize], set: &BTreeSet<usize>) -> bool {
    set.iter().map(|&x| f[x]).collect::<BTreeSet<_>>().len() == set.len()
}

fn almost_injective(src: &Table, f: &[usize]) -> bool {
    let n = src.n;
    let lefts = (0..n).filter(|&a| (0..n).any(|x| src.mul(x, a) == a));
    let rights: Vec<_> = (0..n).filter(|&b| (0..n).any(|x| src.mul(b, x) == b)).collect();
    for a in lefts {
        for &b in &rights {
            let set = (0..n).map(|x| src.mul(src.mul(a, x), b)).collect();
            if !injective_on(f, &set) {
                return false;
            }
        }
    }
    true
}

fn surjective(dst: &Table, f: &[usize]) -> bool {
    f.iter().collect::<BTreeSet<_>>().len() == dst.n
}

fn idempotents_lift(src: &Table, dst: &Table, f: &[usize]) -> bool {
    let lifted: BTreeSet<_> = src.idempotents().into_iter().map(|e| f[e]).collect();
    dst.idempotents().iter().all(|e| lifted.contains(e))
}

/// Surjective, almost injective, multiplicative, lifting idempotents.
fn sli_gap(m: &SemigroupMorphism) -> Option<&'static str> {
    let (src, dst) = (Table::of(m.source()), Table::of(m.target()));
    let f = m.map();
    if !is_morphism(&src, &dst, f) {
        Some("not multiplicative")
    } else if !surjective(&dst, f) {
        Some("not surjective")
    } else if !almost_injective(&src, f) {
        Some("not almost injective")
    } else if !idempotents_lift(&src, &dst, f) {
        Some("idempotents do not lift")
    } else {
        None
    }
}

fn ac1_class_hierarchy(corpus: &[Arc<FiniteSemigroup>]) -> Check {
    let mut violations = 0;
    for s in corpus {
        let c = classes(&Table::of(s));
        let r = s.classify();
        let lib = (
            r.local_units,
            r.weak_local_units,
            r.common_weak_local_units,
            r.firm,
            r.factorizable,
        );
        if lib != (c.lu, c.wlu, c.cwlu, c.firm, c.factorizable) {
            return Err(format!("classification of {s:?} disagrees with the oracle"));
        }
        let chain = (!c.lu || c.wlu) && (!c.wlu || c.firm) && (!c.firm || c.factorizable) && (!c.cwlu || c.firm);
        if !chain || r.chain_violation().is_some() {
            violations += 1;
        }
    }
    if violations > 0 {
        return Err(format!("{violations} chain violations"));
    }
    Ok(format!("{} semigroups, 0 violations", corpus.len()))
}

fn ac2_canned_classifications() -> Check {
    let rz2 = FiniteSemigroup::from_rows(&[vec![0, 1], vec![0, 1]]).unwrap();
    let z2 = FiniteSemigroup::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
    let n2 = FiniteSemigroup::from_rows(&[vec![0, 0], vec![0, 0]]).unwrap();
    let row = |s: &FiniteSemigroup| {
        let r = s.classify();
        [
            r.local_units,
            r.weak_local_units,
            r.common_weak_local_units,
            r.firm,
            r.factorizable,
        ]
    };
    let expect = [
        ("RZ2", row(&rz2), [true, true, false, true, true]),
        ("Z2", row(&z2), [true; 5]),
        ("N2", row(&n2), [false; 5]),
    ];
    for (name, got, want) in expect {
        if got != want {
            return Err(format!("{name}: got {got:?}, expected {want:?}"));
        }
    }
    Ok("RZ2 LU without CWLU, Z2 all true, N2 all false".into())
}

fn ac3_tensor_soundness(corpus: &[Arc<FiniteSemigroup>]) -> Check {
    let mut triples = 0;
    for s in corpus {
        let n = s.order();
        let t = TensorProduct::new(&RightAct::regular(s.clone()), &LeftAct::regular(s.clone()))
            .map_err(|e| e.to_string())?;
        for a in 0..n {
            for x in 0..n {
                for b in 0..n {
                    if t.class_of(s.mul(a, x), b) != t.class_of(a, s.mul(x, b)) {
                        return Err(format!("{s:?}: ({a}·{x}, {b}) and ({a}, {x}·{b}) differ"));
                    }
                    triples += 1;
                }
            }
        }
        let rel = square_closure(&Table::of(s));
        for (i, row) in rel.iter().enumerate() {
            for (j, &related) in row.iter().enumerate() {
                let same = t.class_of(i / n, i % n) == t.class_of(j / n, j % n);
                if same != related {
                    return Err(format!("{s:?}: pairs {i} and {j} disagree with the closure oracle"));
                }
            }
        }
    }
    Ok(format!("{} semigroups, {triples} generating triples", corpus.len()))
}

fn ac4_context_morphisms(corpus: &[Arc<FiniteSemigroup>]) -> Check {
    let mut contexts = 0;
    for s in corpus.iter().filter(|s| s.is_factorizable()) {
        let ctx = canonical_context(s.clone()).map_err(|e| format!("{s:?}: {e}"))?;
        let induced = context_induced_semigroup_morphisms(&ctx).map_err(|e| format!("{s:?}: {e}"))?;
        for (name, m) in [("θ", &induced.theta), ("φ", &induced.phi)] {
            let (src, dst) = (Table::of(m.source()), Table::of(m.target()));
            let f = m.map();
            if !is_morphism(&src, &dst, f) {
                return Err(format!("{s:?}: {name} is not multiplicative"));
            }
            if !almost_injective(&src, f) {
                return Err(format!("{s:?}: {name} is not almost injective"));
            }
            if surjective(&dst, f) && !idempotents_lift(&src, &dst, f) {
                return Err(format!("{s:?}: {name} is surjective without lifting idempotents"));
            }
        }
        contexts += 1;
    }
    Ok(format!("{contexts} canonical contexts"))
}

/// The Rees product `(u,s,v)(u',s',v') = (u, s·p(v,u')·s', v')` with index
/// `(u·|S| + s)·|V| + v` and `p(v, u)` stored at `v·|U| + u`.
fn rees_oracle(s: &Table, nu: usize, nv: usize, p: &[usize]) -> Table {
    let n = s.n;
    let size = nu * n * nv;
    let decode = |x: usize| (x / (n * nv), (x / nv) % n, x % nv);
    let mut t = vec![0; size * size];
    for x in 0..size {
        for y in 0..size {
            let ((u, a, v), (u2, b, v2)) = (decode(x), decode(y));
            let mid = s.mul(s.mul(a, p[v * nu + u2]), b);
            t[x * size + y] = (u * n + mid) * nv + v2;
        }
    }
    Table { n: size, t }
}

struct ReesSweep {
    covers: usize,
    firm_covers: usize,
}

fn rees_sweep(corpus: &[Arc<FiniteSemigroup>]) -> Result<ReesSweep, String> {
    let mut sweep = ReesSweep {
        covers: 0,
        firm_covers: 0,
    };
    for s in corpus.iter().filter(|s| s.is_factorizable()) {
        let st = Table::of(s);
        let n = s.order();
        let firm = classes(&st).firm;
        for (nu, nv) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            for p in tables(nu * nv, n) {
                let m = ReesMatrixSemigroup::new(s.clone(), nu, nv, p.clone()).map_err(|e| e.to_string())?;
                let oracle = rees_oracle(&st, nu, nv, &p);
                if m.semigroup().table() != oracle.t.as_slice() {
                    return Err(format!("{s:?} {p:?}: Rees product disagrees with the oracle"));
                }
                let cover = hotzel_cover(&m).map_err(|e| format!("{s:?} {p:?}: {e}"))?;
                let tensor = cover.morita.tensor();
                let expected: Vec<usize> = (0..tensor.class_count())
                    .map(|c| {
                        let (qi, pi) = tensor.representative(c);
                        let (u, a) = (qi / n, qi % n);
                        let (b, v) = (pi / nv, pi % nv);
                        (u * n + s.mul(a, b)) * nv + v
                    })
                    .collect();
                if cover.psi.map() != expected.as_slice() {
                    return Err(format!("{s:?} {p:?}: ψ is not (u,s)⊗(t,v) ↦ (u,st,v)"));
                }
                if let Some(gap) = sli_gap(&cover.psi) {
                    return Err(format!("{s:?} {p:?}: ψ {gap}"));
                }
                if firm {
                    if tensor.class_count() != oracle.n {
                        return Err(format!(
                            "{s:?} {p:?}: |Q⊗P| = {} but |M| = {}",
                            tensor.class_count(),
                            oracle.n
                        ));
                    }
                    sweep.firm_covers += 1;
                }
                sweep.covers += 1;
            }
        }
    }
    Ok(sweep)
}

fn ac5_rees_cover(sweep: &Result<ReesSweep, String>) -> Check {
    let sweep = sweep.as_ref().map_err(Clone::clone)?;
    Ok(format!(
        "{} sandwich matrices up to 2×2, all ψ strict local isomorphisms",
        sweep.covers
    ))
}

fn ac6_firm_injective(sweep: &Result<ReesSweep, String>) -> Check {
    let sweep = sweep.as_ref().map_err(Clone::clone)?;
    Ok(format!("{} covers over firm bases, all injective", sweep.firm_covers))
}

fn oracle_bracket(pair: &Pair, b: usize, a: usize) -> AdjointPair {
    let s = pair.semigroup();
    AdjointPair {
        rho: (0..pair.a_size()).map(|x| s.mul(s.mul(x, b), a)).collect(),
        sigma: (0..pair.b_size()).map(|y| s.mul(b, s.mul(a, y))).collect(),
    }
}

fn ac7_hotzel_sli(corpus: &[Arc<FiniteSemigroup>]) -> Check {
    for s in corpus {
        let pair = Pair::multiplication(s.clone());
        let h = hotzel_map(&pair).map_err(|e| format!("{s:?}: {e}"))?;
        if let Some(gap) = sli_gap(&h.morphism) {
            return Err(format!("{s:?}: b⊗a ↦ [b,a] {gap}"));
        }
        let tensor = h.morita.tensor();
        for c in 0..tensor.class_count() {
            let (b, a) = tensor.representative(c);
            if h.sigma.semigroup.elements()[h.morphism.apply(c)] != oracle_bracket(&pair, b, a) {
                return Err(format!("{s:?}: class {c} is not sent to [{b}, {a}]"));
            }
        }
    }
    Ok(format!("{} multiplication pairs", corpus.len()))
}

fn oracle_dual(s: &Table) -> bool {
    let n = s.n;
    let full = |set: BTreeSet<usize>| set.len() == n;
    let a_ok =
        (0..n).all(|a| (0..n).any(|w| (0..n).any(|x| s.mul(x, w) == a) && full((0..n).map(|y| s.mul(w, y)).collect())));
    let b_ok =
        (0..n).all(|b| (0..n).any(|w| (0..n).any(|x| s.mul(w, x) == b) && full((0..n).map(|y| s.mul(y, w)).collect())));
    a_ok && b_ok
}

/// All adjoint pairs of act endomorphisms of the multiplication pair.
fn oracle_omega(s: &Table) -> BTreeSet<AdjointPair> {
    let n = s.n;
    let left_endos: Vec<_> = tables(n, n)
        .filter(|r| (0..n).all(|x| (0..n).all(|a| r[s.mul(x, a)] == s.mul(x, r[a]))))
        .collect();
    let right_endos: Vec<_> = tables(n, n)
        .filter(|g| (0..n).all(|b| (0..n).all(|x| g[s.mul(b, x)] == s.mul(g[b], x))))
        .collect();
    let mut out = BTreeSet::new();
    for r in &left_endos {
        for g in &right_endos {
            if (0..n).all(|a| (0..n).all(|b| s.mul(r[a], b) == s.mul(a, g[b]))) {
                out.insert(AdjointPair {
                    rho: r.clone(),
                    sigma: g.clone(),
                });
            }
        }
    }
    out
}

fn oracle_rank_one(s: &Table, x: &AdjointPair) -> bool {
    let n = s.n;
    let within = |image: &[usize], orbit: &dyn Fn(usize) -> BTreeSet<usize>| {
        (0..n).any(|w| image.iter().all(|i| orbit(w).contains(i)))
    };
    within(&x.rho, &|a| (0..n).map(|t| s.mul(t, a)).collect())
        && within(&x.sigma, &|b| (0..n).map(|t| s.mul(b, t)).collect())
}

fn ac8_hotzel_iso_and_rank_one(corpus: &[Arc<FiniteSemigroup>]) -> Check {
    let mut pairs = 0;
    for s in corpus {
        let st = Table::of(s);
        let pair = Pair::multiplication(s.clone());
        if !(classes(&st).wlu && oracle_dual(&st)) {
            continue;
        }
        let iso = verify_hotzel_isomorphism(&pair).map_err(|e| format!("{s:?}: {e}"))?;
        if !iso.bijective || iso.morita_order != iso.sigma_order {
            return Err(format!("{s:?}: |B⊗A| = {} |Σ| = {}", iso.morita_order, iso.sigma_order));
        }
        let rank = verify_rank_one_equality(&pair, SearchLimits::default()).map_err(|e| format!("{s:?}: {e}"))?;
        if !rank.confirmed() {
            return Err(format!("{s:?}: {rank:?}"));
        }
        let om = oracle_omega(&st);
        let lib_om = omega(&pair, SearchLimits::default()).map_err(|e| e.to_string())?;
        if lib_om.elements().iter().cloned().collect::<BTreeSet<_>>() != om {
            return Err(format!("{s:?}: Ω disagrees with the oracle"));
        }
        let om1: BTreeSet<_> = om.iter().filter(|x| oracle_rank_one(&st, x)).cloned().collect();
        let lib_om1: BTreeSet<_> = omega1(&pair, &lib_om)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|i| lib_om.elements()[i].clone())
            .collect();
        let brackets: BTreeSet<_> = (0..st.n)
            .flat_map(|b| (0..st.n).map(move |a| (b, a)))
            .map(|(b, a)| oracle_bracket(&pair, b, a))
            .collect();
        if lib_om1 != om1 || brackets != om1 {
            return Err(format!("{s:?}: Σ = {} Ω_1 = {}", brackets.len(), om1.len()));
        }
        pairs += 1;
    }
    Ok(format!("{pairs} dual pairs over semigroups with weak local units"))
}

fn ac9_bracket_product(corpus: &[Arc<FiniteSemigroup>]) -> Check {
    let mut products = 0;
    for s in corpus {
        let pair = Pair::multiplication(s.clone());
        let n = s.order();
        let sig = sigma(&pair).map_err(|e| format!("{s:?}: {e}"))?;
        let table = sig.semigroup.semigroup();
        for b in 0..n {
            for a in 0..n {
                let lhs = bracket(&pair, b, a).map_err(|e| e.to_string())?.pair;
                for b2 in 0..n {
                    for a2 in 0..n {
                        let rhs = oracle_bracket(&pair, b2, a2);
                        let composed = AdjointPair {
                            rho: lhs.rho.iter().map(|&x| rhs.rho[x]).collect(),
                            sigma: rhs.sigma.iter().map(|&y| lhs.sigma[y]).collect(),
                        };
                        let by_formula = oracle_bracket(&pair, b, s.mul(s.mul(a, b2), a2));
                        if composed != by_formula {
                            return Err(format!("{s:?}: [{b},{a}][{b2},{a2}] differs from the bracket formula"));
                        }
                        let in_table = table.mul(sig.of(n, b, a), sig.of(n, b2, a2));
                        if sig.semigroup.elements()[in_table] != composed {
                            return Err(format!("{s:?}: Σ table entry for [{b},{a}][{b2},{a2}] is wrong"));
                        }
                        products += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{products} bracket products"))
}

fn ac10_one_sided_injectivity(corpus: &[Arc<FiniteSemigroup>]) -> Check {
    let targets: Vec<_> = (1..=2).flat_map(naive_semigroups_of).collect();
    let mut maps = 0;
    for s in corpus {
        let st = Table::of(s);
        if !classes(&st).cwlu {
            continue;
        }
        for t in &targets {
            let tt = Table::of(t);
            for f in tables(st.n, tt.n).filter(|f| is_morphism(&st, &tt, f)) {
                let right = (0..st.n).all(|x| injective_on(&f, &(0..st.n).map(|y| st.mul(x, y)).collect()));
                let left = (0..st.n).all(|x| injective_on(&f, &(0..st.n).map(|y| st.mul(y, x)).collect()));
                let almost = almost_injective(&st, &f);
                if !(almost == right && right == left) {
                    return Err(format!("{s:?} → {t:?} {f:?}: conditions differ"));
                }
                let m = SemigroupMorphism::new(s.clone(), t.clone(), f.clone()).map_err(|e| e.to_string())?;
                let lib = one_sided_injectivity(&m).map_err(|e| e.to_string())?;
                if (lib.almost_injective, lib.on_right_ideals, lib.on_left_ideals) != (almost, right, left) {
                    return Err(format!("{s:?} → {t:?} {f:?}: library disagrees with the oracle"));
                }
                maps += 1;
            }
        }
    }
    Ok(format!("{maps} multiplicative maps, 0 discrepancies"))
}

fn ac11_enumeration_counts() -> Check {
    let mut counts = Vec::new();
    for n in 1..=3 {
        let naive = naive_semigroups(n);
        let enumerated: Vec<Vec<usize>> = enumerate_semigroups(n, Dedup::Labeled, false)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|s| s.table().to_vec())
            .collect();
        if naive != enumerated {
            return Err(format!(
                "order {n}: {} enumerated, {} by recount",
                enumerated.len(),
                naive.len()
            ));
        }
        counts.push(naive.len().to_string());
    }
    if counts != ["1", "8", "113"] {
        return Err(format!("counts {}", counts.join(", ")));
    }
    Ok(format!("counts {}", counts.join(", ")))
}

fn ac12_determinism() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut reports = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("r{i}.txt"));
        let status = Command::new(env!("CARGO_BIN_EXE_sgx"))
            .args(["verify", "--order", "3", "--report"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?
            .status;
        if !status.success() {
            return Err(format!("verify exited with {status}"));
        }
        reports.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    if reports[0].is_empty() || reports[0] != reports[1] {
        return Err("reports differ".into());
    }
    Ok(format!("two reports of {} bytes are identical", reports[0].len()))
}

fn main() -> ExitCode {
    let corpus = corpus();
    let sweep = rees_sweep(&corpus);
    let results: Vec<(&str, Check)> = vec![
        ("AC1 class hierarchy", ac1_class_hierarchy(&corpus)),
        ("AC2 canned classifications", ac2_canned_classifications()),
        ("AC3 tensor soundness", ac3_tensor_soundness(&corpus)),
        ("AC4 context morphisms", ac4_context_morphisms(&corpus)),
        ("AC5 Rees cover", ac5_rees_cover(&sweep)),
        ("AC6 firm cover injective", ac6_firm_injective(&sweep)),
        ("AC7 bracket map strict local isomorphism", ac7_hotzel_sli(&corpus)),
        (
            "AC8 bracket isomorphism and rank-one equality",
            ac8_hotzel_iso_and_rank_one(&corpus),
        ),
        ("AC9 bracket product", ac9_bracket_product(&corpus)),
        ("AC10 one-sided injectivity", ac10_one_sided_injectivity(&corpus)),
        ("AC11 enumeration counts", ac11_enumeration_counts()),
        ("AC12 report determinism", ac12_determinism()),
    ];
    let mut failed = 0;
    for (name, result) in results {
        match result {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
