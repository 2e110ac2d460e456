//! `sgx`: classify semigroups, build tensor products, Morita semigroups,
//! Rees covers and dual pairs from text descriptors, enumerate small
//! semigroups and run the theorem suite.
//!
//! Exit status: 0 when nothing failed, 1 when a check failed, 2 for usage,
//! input and parse errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use sgx_core::acts::{LeftAct, RightAct};
use sgx_core::corpus::{enumerate_semigroups, find_counterexample, Corpus, Dedup, Predicate};
use sgx_core::dual_pairs::{
    duality, hotzel_map, morita_units_check, verify_hotzel_isomorphism, verify_rank_one_equality, Pair,
};
use sgx_core::format;
use sgx_core::morita::{MoritaSemigroup, Pairing};
use sgx_core::rees::{cover_injectivity, hotzel_cover, rees_factorizable, ReesMatrixSemigroup};
use sgx_core::suite::{describe, instance_hash, render_report, tally, Suite, TheoremId, Verdict};
use sgx_core::tensor::TensorProduct;
use sgx_core::{Error, FiniteSemigroup, SearchLimits};

#[derive(Parser)]
#[command(
    name = "sgx",
    version,
    about = "Finite semigroup toolkit: acts, tensor products, Morita semigroups, Rees covers, dual pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ReportArg {
    /// Write the machine-readable report to this file.
    #[arg(long, value_name = "PATH")]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Report local units, weak local units, common weak local units,
    /// firmness and factorizability.
    Classify {
        semigroup: PathBuf,
        #[command(flatten)]
        report: ReportArg,
    },
    /// Compute A ⊗_S B for a right act A and a left act B.
    Tensor {
        #[arg(long)]
        semigroup: PathBuf,
        right_act: PathBuf,
        left_act: PathBuf,
        #[command(flatten)]
        report: ReportArg,
    },
    /// Build the Morita semigroup Q ⊗_S P from a left act P, a right act Q
    /// and a pairing ⟨P, Q⟩ → S.
    MoritaBuild {
        #[arg(long)]
        semigroup: PathBuf,
        left_act: PathBuf,
        right_act: PathBuf,
        pairing: PathBuf,
        #[command(flatten)]
        report: ReportArg,
    },
    /// Build a Rees matrix semigroup and check its Morita cover.
    ReesCover {
        semigroup: PathBuf,
        rees: PathBuf,
        #[command(flatten)]
        report: ReportArg,
    },
    /// Check duality of a pair and the structure of B ⊗ A and Σ.
    DualCheck {
        pair: PathBuf,
        #[command(flatten)]
        report: ReportArg,
    },
    /// Run the theorem suite over every semigroup of order at most N.
    Verify {
        #[arg(long, default_value_t = 3)]
        order: usize,
        /// Comma-separated theorem ids; all by default.
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<TheoremId>,
        /// Allow order 4.
        #[arg(long)]
        full: bool,
        #[command(flatten)]
        report: ReportArg,
    },
    /// Write one file per semigroup of order exactly N.
    GenCorpus {
        #[arg(long)]
        order: usize,
        /// One representative per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Allow order 4.
        #[arg(long)]
        full: bool,
        #[arg(long, default_value = "corpus")]
        out: PathBuf,
        #[command(flatten)]
        report: ReportArg,
    },
    /// Find the least semigroup of order at most N satisfying a predicate.
    Counterexample {
        predicate: Predicate,
        #[arg(long)]
        order: usize,
        /// Allow order 4.
        #[arg(long)]
        full: bool,
        #[command(flatten)]
        report: ReportArg,
    },
}

/// Text for stdout, the machine-readable report, and whether any check
/// failed.
struct Output {
    human: String,
    report: String,
    failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report_path, result) = match cli.command {
        Command::Classify { semigroup, report } => (report.report, classify(&semigroup)),
        Command::Tensor {
            semigroup,
            right_act,
            left_act,
            report,
        } => (report.report, tensor(&semigroup, &right_act, &left_act)),
        Command::MoritaBuild {
            semigroup,
            left_act,
            right_act,
            pairing,
            report,
        } => (report.report, morita_build(&semigroup, &left_act, &right_act, &pairing)),
        Command::ReesCover {
            semigroup,
            rees,
            report,
        } => (report.report, rees_cover(&semigroup, &rees)),
        Command::DualCheck { pair, report } => (report.report, dual_check(&pair)),
        Command::Verify {
            order,
            theorems,
            full,
            report,
        } => (report.report, verify(order, theorems, full)),
        Command::GenCorpus {
            order,
            dedup,
            full,
            out,
            report,
        } => (report.report, gen_corpus(order, dedup, full, &out)),
        Command::Counterexample {
            predicate,
            order,
            full,
            report,
        } => (report.report, counterexample(predicate, order, full)),
    };
    let out = match result {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    print!("{}", out.human);
    if let Some(path) = report_path {
        if let Err(e) = fs::write(&path, &out.report) {
            eprintln!("error: cannot write report {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if out.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// Attaches the file name, and the line for parse errors.
fn in_file<T>(path: &Path, r: sgx_core::Result<T>) -> anyhow::Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, message } => anyhow!("{}:{line}: {message}", path.display()),
        other => anyhow!("{}: {other}", path.display()),
    })
}

fn load_semigroup(path: &Path) -> anyhow::Result<Arc<FiniteSemigroup>> {
    Ok(Arc::new(in_file(path, format::parse_semigroup(&read(path)?))?))
}

fn load_right_act(path: &Path, s: &Arc<FiniteSemigroup>) -> anyhow::Result<RightAct> {
    in_file(path, format::parse_right_act(&read(path)?, s.clone()))
}

fn load_left_act(path: &Path, s: &Arc<FiniteSemigroup>) -> anyhow::Result<LeftAct> {
    in_file(path, format::parse_left_act(&read(path)?, s.clone()))
}

/// Core errors outside any particular file.
fn plain(e: Error) -> anyhow::Error {
    match e {
        Error::OrderTooLarge { order: 4, .. } => anyhow!("{e} (pass --full to enumerate order 4)"),
        other => anyhow!("{other}"),
    }
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn classify(path: &Path) -> anyhow::Result<Output> {
    let s = load_semigroup(path)?;
    let c = s.classify();
    let human = format!(
        "order {}\nLU:{} WLU:{} CWLU:{} firm:{} factorizable:{}\n",
        s.order(),
        flag(c.local_units),
        flag(c.weak_local_units),
        flag(c.common_weak_local_units),
        flag(c.firm),
        flag(c.factorizable)
    );
    let mut report = format!(
        "instance={} hash={} lu={} wlu={} cwlu={} firm={} factorizable={}\n",
        describe(&s),
        instance_hash(&s),
        flag(c.local_units),
        flag(c.weak_local_units),
        flag(c.common_weak_local_units),
        flag(c.firm),
        flag(c.factorizable)
    );
    let violation = c.chain_violation();
    if let Some(v) = violation {
        report.push_str(&format!("verdict=fail detail={v}\n"));
    }
    Ok(Output {
        human,
        report,
        failed: violation.is_some(),
    })
}

fn tensor(sg: &Path, right: &Path, left: &Path) -> anyhow::Result<Output> {
    let s = load_semigroup(sg)?;
    let a = load_right_act(right, &s)?;
    let b = load_left_act(left, &s)?;
    let t = TensorProduct::new(&a, &b).map_err(plain)?;
    let mut human = format!(
        "|A| = {}, |B| = {}, |A ⊗ B| = {}\n",
        a.size(),
        b.size(),
        t.class_count()
    );
    let mut report = format!("classes={}\n", t.class_count());
    for c in 0..t.class_count() {
        let members: Vec<String> = t.members(c).iter().map(|(x, y)| format!("({x},{y})")).collect();
        human.push_str(&format!("class {c}: {}\n", members.join(" ")));
        report.push_str(&format!("class={c} members={}\n", members.join(",")));
    }
    Ok(Output {
        human,
        report,
        failed: false,
    })
}

fn morita_build(sg: &Path, left: &Path, right: &Path, pairing: &Path) -> anyhow::Result<Output> {
    let s = load_semigroup(sg)?;
    let p = load_left_act(left, &s)?;
    let q = load_right_act(right, &s)?;
    let (np, nq, table) = in_file(pairing, format::parse_pairing(&read(pairing)?, s.order()))?;
    if (np, nq) != (p.size(), q.size()) {
        return Err(anyhow!(
            "{}: pairing is {np}×{nq} but the acts have sizes {} and {}",
            pairing.display(),
            p.size(),
            q.size()
        ));
    }
    let pairing = in_file(pairing, Pairing::new(p, q, table))?;
    let m = MoritaSemigroup::new(&pairing).map_err(plain)?;
    let human = format!(
        "|Q ⊗ P| = {}\nunitary: {}\nsurjectively defined: {}\n{}",
        m.order(),
        flag(m.is_unitary()),
        flag(m.is_surjectively_defined()),
        format::write_semigroup(m.semigroup())
    );
    let report = format!(
        "order={} unitary={} surjectively_defined={} instance={} hash={}\n",
        m.order(),
        flag(m.is_unitary()),
        flag(m.is_surjectively_defined()),
        describe(m.semigroup()),
        instance_hash(m.semigroup())
    );
    Ok(Output {
        human,
        report,
        failed: false,
    })
}

fn rees_cover(sg: &Path, rees: &Path) -> anyhow::Result<Output> {
    let s = load_semigroup(sg)?;
    let (u, v, p) = in_file(rees, format::parse_rees(&read(rees)?, s.order()))?;
    let m = in_file(rees, ReesMatrixSemigroup::new(s.clone(), u, v, p))?;
    let mut human = format!("|M| = {}\n", m.semigroup().order());
    let mut report = format!("order={}", m.semigroup().order());
    let factorizable = match rees_factorizable(&m) {
        Ok(f) => f,
        Err(e) => {
            return Ok(Output {
                human: format!("{human}FAIL {e}\n"),
                report: format!("{report} verdict=fail detail={e}\n"),
                failed: true,
            })
        }
    };
    human.push_str(&format!("M factorizable: {}\n", flag(factorizable)));
    report.push_str(&format!(" factorizable={}", flag(factorizable)));
    match hotzel_cover(&m) {
        Ok(cover) => {
            let inj = cover_injectivity(&m, &cover);
            let q = cover.quality;
            human.push_str(&format!(
                "|Q ⊗ P| = {}\nψ surjective: {}\nψ almost injective: {}\nidempotents lift: {}\nregular elements lift: {}\nψ injective: {}\ntossing witnesses: {}\n",
                cover.morita.order(),
                flag(q.surjective),
                flag(q.almost_injective),
                flag(q.idempotents_lift),
                flag(q.regulars_lift),
                flag(inj.injective),
                inj.witnesses.len()
            ));
            report.push_str(&format!(
                " cover_order={} surjective={} almost_injective={} idempotents_lift={} regulars_lift={} injective={} witnesses={} verdict=pass\n",
                cover.morita.order(),
                flag(q.surjective),
                flag(q.almost_injective),
                flag(q.idempotents_lift),
                flag(q.regulars_lift),
                flag(inj.injective),
                inj.witnesses.len()
            ));
            let firm_failure = s.is_firm() && !inj.injective;
            if firm_failure {
                human.push_str("FAIL ψ is not injective over a firm base\n");
            }
            Ok(Output {
                human,
                report,
                failed: firm_failure,
            })
        }
        Err(Error::NotFactorizable(x)) => {
            human.push_str(&format!("cover not applicable: {x} is not a product in S\n"));
            report.push_str(" verdict=skip detail=base not factorizable\n");
            Ok(Output {
                human,
                report,
                failed: false,
            })
        }
        Err(e) => Ok(Output {
            human: format!("{human}FAIL {e}\n"),
            report: format!("{report} verdict=fail detail={e}\n"),
            failed: true,
        }),
    }
}

fn load_pair(path: &Path) -> anyhow::Result<Pair> {
    let d = in_file(path, format::parse_pair_descriptor(&read(path)?))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let s = load_semigroup(&dir.join(&d.semigroup))?;
    let a = load_left_act(&dir.join(&d.left), &s)?;
    let b = load_right_act(&dir.join(&d.right), &s)?;
    if (d.a_size, d.b_size) != (a.size(), b.size()) {
        return Err(anyhow!(
            "{}: pairing is {}×{} but the acts have sizes {} and {}",
            path.display(),
            d.a_size,
            d.b_size,
            a.size(),
            b.size()
        ));
    }
    in_file(path, Pair::new(a, b, d.table))
}

fn dual_check(path: &Path) -> anyhow::Result<Output> {
    let pair = load_pair(path)?;
    let mut human = String::new();
    let mut report = String::new();
    let mut failed = false;
    let d = duality(&pair);
    let fmt_w = |w: &[Option<usize>]| {
        w.iter()
            .map(|x| x.map_or("-".to_string(), |v| v.to_string()))
            .collect::<Vec<_>>()
            .join(",")
    };
    human.push_str(&format!(
        "dual: {}\nA witnesses: {}\nB witnesses: {}\n",
        flag(d.is_dual()),
        fmt_w(&d.a_witnesses),
        fmt_w(&d.b_witnesses)
    ));
    report.push_str(&format!(
        "dual={} a_witnesses={} b_witnesses={}\n",
        flag(d.is_dual()),
        fmt_w(&d.a_witnesses),
        fmt_w(&d.b_witnesses)
    ));
    let mut record = |name: &str, outcome: Result<String, String>| match outcome {
        Ok(detail) => {
            human.push_str(&format!("{name}: {detail}\n"));
            report.push_str(&format!("check={name} verdict=pass detail={detail}\n"));
        }
        Err(detail) => {
            failed = true;
            human.push_str(&format!("{name}: FAIL {detail}\n"));
            report.push_str(&format!("check={name} verdict=fail detail={detail}\n"));
        }
    };
    record(
        "hotzel-map",
        hotzel_map(&pair)
            .map(|h| {
                format!(
                    "|B ⊗ A| = {} |Σ| = {} bijective = {}",
                    h.morita.order(),
                    h.sigma.semigroup.order(),
                    flag(h.morphism.is_bijective())
                )
            })
            .map_err(|e| e.to_string()),
    );
    if pair.semigroup().has_weak_local_units() && d.is_dual() {
        record(
            "hotzel-iso",
            match verify_hotzel_isomorphism(&pair) {
                Ok(r) if r.bijective => Ok("isomorphism".into()),
                Ok(r) => Err(format!("|B ⊗ A| = {} |Σ| = {}", r.morita_order, r.sigma_order)),
                Err(e) => Err(e.to_string()),
            },
        );
        record(
            "sigma-rank-one",
            match verify_rank_one_equality(&pair, SearchLimits::from_env()) {
                Ok(r) if !r.omega_enumerated && r.sigma_in_omega1 => {
                    Ok("Ω exceeds the search guard; Σ ⊆ Ω_1 only".into())
                }
                Ok(r) if r.confirmed() => Ok(format!(
                    "Σ = Ω_1 ({} elements, |Ω| = {})",
                    r.sigma_order,
                    r.omega_order.unwrap_or_default()
                )),
                Ok(r) => Err(format!("{r:?}")),
                Err(e) => Err(e.to_string()),
            },
        );
        record(
            "morita-units",
            match morita_units_check(&pair) {
                Ok(r) if r.confirmed() => Ok(format!(
                    "weak local units = {} local units = {}",
                    flag(r.weak_local_units),
                    flag(r.local_units)
                )),
                Ok(r) => Err(format!("{r:?}")),
                Err(e) => Err(e.to_string()),
            },
        );
    } else {
        human.push_str("isomorphism checks skipped: the pair must be dual over a semigroup with weak local units\n");
        report.push_str(
            "check=hotzel-iso verdict=skip\ncheck=sigma-rank-one verdict=skip\ncheck=morita-units verdict=skip\n",
        );
    }
    Ok(Output { human, report, failed })
}

fn verify(order: usize, theorems: Vec<TheoremId>, full: bool) -> anyhow::Result<Output> {
    let theorems = if theorems.is_empty() {
        TheoremId::ALL.to_vec()
    } else {
        theorems
    };
    let corpus = Corpus::new(order, Dedup::Labeled, full).map_err(plain)?;
    let suite = Suite::new(SearchLimits::from_env()).map_err(plain)?;
    let reports = suite.run(&corpus.members, &theorems);
    let mut human = format!("{} semigroups of order ≤ {order}\n", corpus.len());
    let mut failed = false;
    for (theorem, t) in tally(&reports) {
        failed |= t.fail > 0;
        human.push_str(&format!(
            "{:<24} pass {:>5}  fail {:>3}  skip {:>5}  cases {:>7}\n",
            theorem.name(),
            t.pass,
            t.fail,
            t.skip,
            t.cases
        ));
    }
    for r in reports.iter().filter(|r| r.verdict == Verdict::Fail) {
        human.push_str(&format!("FAIL {}\n", r.line()));
    }
    let names: Vec<_> = theorems.iter().map(|t| t.name()).collect();
    let description = format!(
        "order<={order} labeled members={} theorems={}",
        corpus.len(),
        names.join(",")
    );
    Ok(Output {
        human,
        report: render_report(&description, &reports),
        failed,
    })
}

fn gen_corpus(order: usize, dedup: bool, full: bool, out: &Path) -> anyhow::Result<Output> {
    let mode = if dedup { Dedup::UpToIsomorphism } else { Dedup::Labeled };
    let members = enumerate_semigroups(order, mode, full).map_err(plain)?;
    fs::create_dir_all(out).with_context(|| format!("cannot create {}", out.display()))?;
    let mut report = String::new();
    for (i, s) in members.iter().enumerate() {
        let name = format!("order{order}-{i:04}.sgp");
        let path = out.join(&name);
        fs::write(&path, format::write_semigroup(s)).with_context(|| format!("cannot write {}", path.display()))?;
        report.push_str(&format!(
            "file={name} instance={} hash={}\n",
            describe(s),
            instance_hash(s)
        ));
    }
    Ok(Output {
        human: format!("wrote {} semigroups to {}\n", members.len(), out.display()),
        report,
        failed: false,
    })
}

fn counterexample(predicate: Predicate, order: usize, full: bool) -> anyhow::Result<Output> {
    let found = find_counterexample(predicate, order, full).map_err(plain)?;
    Ok(match found {
        Some(s) => Output {
            human: format!("least instance of {predicate}:\n{}", format::write_semigroup(&s)),
            report: format!(
                "predicate={predicate} bound={order} found=true instance={} hash={}\n",
                describe(&s),
                instance_hash(&s)
            ),
            failed: false,
        },
        None => Output {
            human: format!("no semigroup of order ≤ {order} satisfies {predicate}\n"),
            report: format!("predicate={predicate} bound={order} found=false\n"),
            failed: false,
        },
    })
}
