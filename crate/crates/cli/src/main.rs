//! Batch front end: parse ideal files, run a strategy bundle, emit the basis
//! and statistics, verify against the Buchberger oracle, and predict
//! termination from the order pair.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use sigbasis::engine::{self, EngineResult, RunOptions, StrategyBundle};
use sigbasis::ideal::{order_by_name, parse_ideal, IdealFile};
use sigbasis::pair::{check_pair_invariant, PairData};
use sigbasis::random::{random_ideal, RandomIdealParams};
use sigbasis::verify::{buchberger, is_groebner_basis, leading_ideal_equal};
use sigbasis::{
    check_compatibility, predict_termination, FieldSpec, MonomialOrder, Polynomial, SignatureOrder,
    TerminationPrediction,
};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "sigbasis",
    version,
    about = "Signature-based Groebner basis engine"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a basis for one ideal file.
    Run(RunArgs),
    /// Predict guaranteed termination for an order pair.
    Predict(PredictArgs),
    /// Run every strategy over a corpus and emit one CSV row per run.
    Compare(CompareArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Strategy bundle: f5, ef5, gvw or mj.
    #[arg(long)]
    algorithm: String,
    /// Ideal file path.
    #[arg(long)]
    input: PathBuf,
    /// Override the file's monomial order: lex, grlex or grevlex.
    #[arg(long)]
    order: Option<String>,
    /// Signature order: pot, schreyer, schreyer-paper, degree,
    /// matrix:<path> or bad-degree-demo.
    #[arg(long, default_value = "pot")]
    sig_order: String,
    /// Selection cap; hitting it exits with code 2.
    #[arg(long, default_value_t = 1_000_000)]
    max_steps: u64,
    /// Homogenize the input with one fresh variable first.
    #[arg(long)]
    homogenize: bool,
    /// Track full module elements and check u.f = v for every result.
    #[arg(long)]
    track_module: bool,
    /// Check the output against the Buchberger oracle.
    #[arg(long)]
    verify: bool,
    /// Use regular reductions instead of top reductions (gvw/mj).
    #[arg(long)]
    regular_reductions: bool,
    /// Write the flat stats record to this path.
    #[arg(long)]
    stats: Option<PathBuf>,
}

#[derive(Args)]
struct PredictArgs {
    /// Monomial order: lex, grlex or grevlex.
    #[arg(long, default_value = "grevlex")]
    order: String,
    /// Signature order name (see `run --sig-order`).
    #[arg(long)]
    sig_order: String,
    /// Optional ideal file anchoring the order parameters.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// Directory of .ideal files.
    #[arg(long, conflicts_with = "random")]
    corpus: Option<PathBuf>,
    /// Generate this many random instances instead.
    #[arg(long)]
    random: Option<usize>,
    /// Seed for the random corpus.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Selection cap per run.
    #[arg(long, default_value_t = 1_000_000)]
    max_steps: u64,
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Predict(args) => cmd_predict(args),
        Command::Compare(args) => cmd_compare(args),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

/// Deterministic run report; fields serialize in declaration order.
#[derive(Serialize)]
struct RunReport {
    algorithm: String,
    basis: Vec<String>,
    homogenize_variable: Option<String>,
    module_invariant: String,
    order: String,
    sig_order: String,
    signatures: Vec<String>,
    stats: BTreeMap<String, serde_json::Value>,
    terminated: bool,
    verification: String,
}

fn flat_stats(result: &EngineResult) -> BTreeMap<String, serde_json::Value> {
    let mut m = BTreeMap::new();
    let s = &result.stats;
    for kind in sigbasis::criteria::CriterionKind::all() {
        m.insert(
            format!("blocked_{}", kind.name()),
            serde_json::json!(s.blocked.get(kind.name()).copied().unwrap_or(0)),
        );
    }
    m.insert(
        "jpairs_generated".into(),
        serde_json::json!(s.jpairs_generated),
    );
    m.insert(
        "reduction_steps".into(),
        serde_json::json!(s.reduction_steps),
    );
    m.insert(
        "reductions_performed".into(),
        serde_json::json!(s.reductions_performed),
    );
    m.insert("selections".into(), serde_json::json!(s.selections));
    m.insert("steps_used".into(), serde_json::json!(s.steps_used));
    m.insert("stored".into(), serde_json::json!(s.stored));
    m.insert("syzygies_found".into(), serde_json::json!(s.syzygies_found));
    m.insert("terminated".into(), serde_json::json!(s.terminated));
    m
}

fn fresh_variable_name(vars: &[String]) -> String {
    if !vars.iter().any(|v| v == "h") {
        return "h".to_string();
    }
    let mut i = 0;
    loop {
        let cand = format!("h{}", i);
        if !vars.contains(&cand) {
            return cand;
        }
        i += 1;
    }
}

fn build_sig_order(
    name: &str,
    ord: &MonomialOrder,
    f: &[Polynomial],
    nvars: usize,
) -> Result<SignatureOrder> {
    match name {
        "pot" => Ok(SignatureOrder::pot(ord.clone())),
        "schreyer" => Ok(SignatureOrder::schreyer(ord.clone(), f)?),
        "schreyer-paper" => Ok(SignatureOrder::schreyer_paper_literal(ord.clone(), f)?),
        "degree" => Ok(SignatureOrder::degree_first(ord.clone(), f)?),
        "bad-degree-demo" => Ok(SignatureOrder::degree_reversed(ord.clone())),
        other => {
            if let Some(path) = other.strip_prefix("matrix:") {
                let rows = read_matrix(Path::new(path))?;
                Ok(SignatureOrder::custom_matrix(rows, nvars, f.len())?)
            } else {
                bail!(
                    "unknown signature order `{}` (expected pot, schreyer, schreyer-paper, \
                     degree, matrix:<path> or bad-degree-demo)",
                    other
                )
            }
        }
    }
}

fn read_matrix(path: &Path) -> Result<Vec<Vec<i64>>> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading matrix file {}", path.display()))?;
    let mut rows = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        let row: Vec<i64> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| anyhow!("bad matrix entry `{}`", t)))
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        bail!("matrix file {} is empty", path.display());
    }
    Ok(rows)
}

fn resolve_order(file_order: &MonomialOrder, flag: &Option<String>) -> Result<MonomialOrder> {
    match flag {
        None => Ok(file_order.clone()),
        Some(name) => order_by_name(name).ok_or_else(|| anyhow!("unknown order `{}`", name)),
    }
}

fn cmd_run(args: RunArgs) -> Result<i32> {
    let text = fs::read_to_string(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))?;
    let ideal = parse_ideal(&text).map_err(|e| anyhow!("{}: {}", args.input.display(), e))?;
    let order = resolve_order(&ideal.order, &args.order)?;

    let (mut gens, mut vars) = (ideal.polys.clone(), ideal.vars.clone());
    let mut homogenize_variable = None;
    if args.homogenize {
        gens = gens.iter().map(|p| p.homogenize(&order)).collect();
        let fresh = fresh_variable_name(&vars);
        vars.push(fresh.clone());
        homogenize_variable = Some(fresh);
    }
    let nvars = vars.len();

    let bundle = StrategyBundle::by_name(&args.algorithm).ok_or_else(|| {
        anyhow!(
            "unknown algorithm `{}` (expected f5, ef5, gvw or mj)",
            args.algorithm
        )
    })?;
    let sord = build_sig_order(&args.sig_order, &order, &gens, nvars)?;
    let opts = RunOptions {
        max_steps: args.max_steps,
        track_module: args.track_module,
        regular_reductions: args.regular_reductions,
        ..RunOptions::default()
    };
    let result = engine::run(&bundle, &gens, nvars, &order, &sord, &opts)?;

    let module_invariant = if args.track_module {
        let ok = result.done.iter().all(|p| {
            let pd = PairData {
                sig: p.sig.clone(),
                sig_coeff: p.sig_coeff.clone(),
                v: p.poly.clone(),
                u_full: p.u_full.clone(),
                initial: p.initial,
            };
            check_pair_invariant(&pd, &gens, &order, &sord)
        });
        if !ok {
            bail!("module invariant violated: some stored pair has u.f != v or lm(u) != sig");
        }
        "pass".to_string()
    } else {
        "skipped".to_string()
    };

    let verification = if args.verify {
        let basis = result.basis();
        let oracle = buchberger(&gens, &order);
        let ok = result.stats.terminated
            && is_groebner_basis(&basis, &order)
            && leading_ideal_equal(&basis, &oracle, &order);
        if ok {
            "pass".to_string()
        } else {
            "fail".to_string()
        }
    } else {
        "skipped".to_string()
    };

    let report = RunReport {
        algorithm: bundle.name.to_string(),
        basis: result.basis().iter().map(|p| p.format(&vars)).collect(),
        homogenize_variable,
        module_invariant,
        order: sigbasis::ideal::order_name(&order).to_string(),
        sig_order: args.sig_order.clone(),
        signatures: result.done.iter().map(|p| p.sig.format(&vars)).collect(),
        stats: flat_stats(&result),
        terminated: result.stats.terminated,
        verification: verification.clone(),
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    if let Some(path) = &args.stats {
        fs::write(path, serde_json::to_string_pretty(&report.stats)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if verification == "fail" {
        bail!("oracle verification failed");
    }
    Ok(if result.stats.terminated { 0 } else { 2 })
}

fn cmd_predict(args: PredictArgs) -> Result<i32> {
    let order =
        order_by_name(&args.order).ok_or_else(|| anyhow!("unknown order `{}`", args.order))?;
    // Anchor parameterized orders on the input when given; the verdict is
    // family-level, so placeholder anchors work for the named families.
    let (gens, nvars, ncomps) = match &args.input {
        Some(path) => {
            let text = fs::read_to_string(path)?;
            let ideal: IdealFile = parse_ideal(&text).map_err(|e| anyhow!("{}", e))?;
            let n = ideal.nvars();
            let d = ideal.polys.len();
            (ideal.polys, n, d)
        }
        None => {
            let one = Polynomial::constant(FieldSpec::Prime(32003).one(), 2);
            (vec![one.clone(), one], 2, 2)
        }
    };
    let sord = if args.input.is_none() {
        if let Some(path) = args.sig_order.strip_prefix("matrix:") {
            // Without an input the component count is unknown; analyze the
            // rows as component-blind.
            let rows = read_matrix(Path::new(path))?;
            let width = rows[0].len();
            SignatureOrder::custom_matrix(rows, width, 0)?
        } else {
            build_sig_order(&args.sig_order, &order, &gens, nvars)?
        }
    } else {
        build_sig_order(&args.sig_order, &order, &gens, nvars)?
    };
    let verdict = check_compatibility(&order, &sord, nvars, ncomps);
    let prediction = match predict_termination(&verdict) {
        TerminationPrediction::Terminates => "Terminates",
        TerminationPrediction::MayNotTerminate => "MayNotTerminate",
        TerminationPrediction::Unknown => "Unknown",
    };
    println!("{} ({:?}: {})", prediction, verdict.status, verdict.detail);
    Ok(0)
}

const COMPARE_CONFIGS: [&str; 5] = ["f5", "ef5", "srewritten", "gvw", "mj"];

fn cmd_compare(args: CompareArgs) -> Result<i32> {
    let mut instances: Vec<(String, usize, Vec<Polynomial>, MonomialOrder)> = Vec::new();
    if let Some(n) = args.random {
        let params = RandomIdealParams::default();
        let ord = MonomialOrder::GrevLex;
        for i in 0..n {
            let (nvars, gens) = random_ideal(args.seed.wrapping_add(i as u64), &params, &ord);
            instances.push((format!("random-{}", i), nvars, gens, ord.clone()));
        }
    } else if let Some(dir) = &args.corpus {
        let mut paths: Vec<PathBuf> = fs::read_dir(dir)
            .with_context(|| format!("reading corpus {}", dir.display()))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "ideal"))
            .collect();
        paths.sort();
        for path in paths {
            let text = fs::read_to_string(&path)?;
            let ideal = parse_ideal(&text).map_err(|e| anyhow!("{}: {}", path.display(), e))?;
            let name = path.file_stem().unwrap().to_string_lossy().into_owned();
            instances.push((name, ideal.nvars(), ideal.polys, ideal.order));
        }
    } else {
        bail!("compare needs --corpus DIR or --random N");
    }

    let mut out = String::from(
        "instance,config,selections,blocked_syzygy,blocked_rewritten,blocked_esyzygy,\
         blocked_erewritten,blocked_srewritten,blocked_gsyzygy,blocked_signature,\
         blocked_mpair,reductions,stored,basis_size,oracle_agrees\n",
    );
    let mut failed = false;
    for (name, nvars, gens, order) in &instances {
        let oracle = buchberger(gens, order);
        for config in COMPARE_CONFIGS {
            let bundle = StrategyBundle::by_name(config).unwrap();
            let sord = SignatureOrder::pot(order.clone());
            let opts = RunOptions {
                max_steps: args.max_steps,
                ..RunOptions::default()
            };
            let row = match engine::run(&bundle, gens, *nvars, order, &sord, &opts) {
                Ok(result) => {
                    let agrees = result.stats.terminated
                        && leading_ideal_equal(&result.basis(), &oracle, order);
                    if !agrees {
                        failed = true;
                    }
                    let blocked = |k: &str| result.stats.blocked.get(k).copied().unwrap_or(0);
                    format!(
                        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                        name,
                        config,
                        result.stats.selections,
                        blocked("syzygy"),
                        blocked("rewritten"),
                        blocked("esyzygy"),
                        blocked("erewritten"),
                        blocked("srewritten"),
                        blocked("gsyzygy"),
                        blocked("signature"),
                        blocked("mpair"),
                        result.stats.reductions_performed,
                        result.stats.stored,
                        result.basis().len(),
                        agrees
                    )
                }
                Err(e) => {
                    // constraint rejections (e.g. inhomogeneous input for f5)
                    format!(
                        "{},{},0,0,0,0,0,0,0,0,0,0,0,0,skipped ({})\n",
                        name, config, e
                    )
                }
            };
            out.push_str(&row);
        }
    }
    print!("{}", out);
    if failed {
        bail!("an instance failed oracle agreement");
    }
    Ok(0)
}
