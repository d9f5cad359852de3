//! Batch front end: compute throttling parameters over graph6 inputs or the
//! internal census, enumerate forbidden families, run theorem verifications,
//! and hunt for rule-property counterexamples.
//!
//! Output records are line-delimited and deterministic for a fixed (config,
//! seed), independent of the worker count; wall-clock timings go to stderr
//! only. Exit status is nonzero iff a verification found a counterexample, a
//! declared flag disagreed with the falsifier, or an input line was
//! malformed.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use forcelab::axioms::{falsify_axiom, replay_witness, report_to_text, Axiom, SearchBudget, Verdict};
use forcelab::census::{census_through, load_census};
use forcelab::forbidden::{
    enumerate_product_family, enumerate_weighted_family, family_to_text, minimalize, FamilyKind,
};
use forcelab::verify::{
    axiom_flag_audit, induced_path_chains, max_chain_census, omega_grid, product_sum_survey,
    psd_product_part1, savings_lemma, synchronous_optimality, witness_lemma, CheckReport,
};
use forcelab::{
    canonical_graph, forcing_number, pt_at_size, size_at_pt, throttle_product, throttle_weighted,
    to_graph6, Certificate, Graph, Rule, Weight,
};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "forcelab", version, about = "exact zero-forcing and throttling engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a throttling statistic for each input graph.
    Compute(ComputeArgs),
    /// Enumerate a forbidden family and write its file form.
    EnumerateFamily(FamilyArgs),
    /// Run a census verification for one theorem selector.
    Verify(VerifyArgs),
    /// Search a census for counterexamples to one rule property.
    CheckAxioms(AxiomArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Rule selector: z | zplus | skew | `kforce:<k>` | `boot:<r>` | hop
    #[arg(long)]
    rule: String,
    /// Bootstrap radius shorthand: `--rule boot --r 2` equals `--rule boot:2`.
    #[arg(long)]
    r: Option<u32>,
    /// Statistic: forcing-number | th | product | pt-at-size | size-at-pt
    #[arg(long)]
    stat: String,
    /// Weight for `th`, as a nonnegative rational p/q.
    #[arg(long, default_value = "1/1")]
    omega: String,
    /// Size parameter for pt-at-size, time parameter for size-at-pt.
    #[arg(long)]
    k: Option<u32>,
    /// graph6 input file (one graph per line, '#' comments allowed).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Use the census of all graphs with order min..=N instead of a file.
    #[arg(long)]
    max_order: Option<usize>,
    /// Lower end of the census order range.
    #[arg(long, default_value_t = 1)]
    min_order: usize,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Abort on the first malformed input line.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    rule: String,
    /// weighted | product
    #[arg(long)]
    kind: String,
    #[arg(long)]
    k: u32,
    #[arg(long, default_value = "1/1")]
    omega: String,
    /// Enumeration cap on member order (weighted kind).
    #[arg(long, default_value_t = 8)]
    order_cap: usize,
    /// Reduce to minimal members before writing.
    #[arg(long)]
    minimal: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// product-sum-z | psd-product-part1 | savings-lemma | witness-lemma |
    /// induced-path-chains | max-chain | synchronous-optimality | axiom-flags
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Seed for sampled checks (reserved; the built-in selectors are exhaustive).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct AxiomArgs {
    #[arg(long)]
    rule: String,
    #[arg(long)]
    axiom: String,
    #[arg(long, default_value_t = 5)]
    max_order: usize,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Compute(args) => compute(args),
        Command::EnumerateFamily(args) => enumerate_family(args),
        Command::Verify(args) => verify(args),
        Command::CheckAxioms(args) => check_axioms(args),
    }
}

fn parse_rule(selector: &str, r: Option<u32>) -> Result<Rule> {
    if selector == "boot" {
        if let Some(r) = r {
            return Ok(Rule::Bootstrap(r));
        }
    }
    Rule::parse_selector(selector).map_err(|e| anyhow!(e))
}

fn emit(output: Option<&PathBuf>, records: &[String]) -> Result<()> {
    let mut text = records.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    match output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn load_inputs(args: &ComputeArgs) -> Result<(Vec<Graph>, usize)> {
    let mut malformed = 0usize;
    let graphs = if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let mut graphs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match forcelab::parse_graph6(line) {
                Ok(g) => graphs.push(g),
                Err(err) => {
                    eprintln!("line {}: {err}", idx + 1);
                    malformed += 1;
                    if args.strict {
                        bail!("aborting on malformed input (--strict)");
                    }
                }
            }
        }
        graphs
    } else if let Some(max_order) = args.max_order {
        let dir = std::env::var_os("FORCELAB_CENSUS_DIR").map(PathBuf::from);
        let mut graphs = Vec::new();
        for n in args.min_order..=max_order {
            graphs.extend(load_census(n, dir.as_deref(), None)?);
        }
        graphs
    } else {
        bail!("need --input FILE or --max-order N");
    };
    Ok((graphs, malformed))
}

fn certificate_record(code: &str, rule: Rule, stat: &str, param: &str, cert: &Certificate) -> String {
    let blue = cert
        .blue
        .map(|b| b.to_compact_string())
        .unwrap_or_else(|| "-".into());
    let pt = cert
        .pt
        .map(|p| p.to_string())
        .unwrap_or_else(|| "inf".into());
    format!(
        "g6={code} rule={} stat={stat}{param} objective={} blue={blue} pt={pt}",
        rule.selector(),
        cert.objective
    )
}

fn compute(args: ComputeArgs) -> Result<i32> {
    let started = Instant::now();
    let rule = parse_rule(&args.rule, args.r)?;
    let (graphs, malformed) = load_inputs(&args)?;
    let omega = Weight::parse(&args.omega).map_err(|e| anyhow!(e))?;
    let stat = args.stat.clone();
    let k = args.k;
    let jobs: Vec<(usize, Graph)> = graphs.into_iter().enumerate().collect();
    let records: Result<Vec<String>> = {
        // Solve on the canonically labelled copy so the record's graph6, blue
        // set, and schedule all live in the same labelling; graphs beyond the
        // canonicalization limit keep their input labelling.
        let run_one = |g: &Graph| -> Result<String> {
            let g = canonical_graph(g).unwrap_or_else(|_| g.clone());
            let code = to_graph6(&g).map_err(|e| anyhow!(e))?;
            let (param, cert) = match stat.as_str() {
                "forcing-number" => (String::new(), forcing_number(rule, &g)),
                "th" => (format!(" omega={omega}"), throttle_weighted(rule, &g, omega)),
                "product" => (String::new(), throttle_product(rule, &g)),
                "pt-at-size" => {
                    let k = k.ok_or_else(|| anyhow!("pt-at-size needs --k"))?;
                    (format!(" k={k}"), pt_at_size(rule, &g, k as usize))
                }
                "size-at-pt" => {
                    let k = k.ok_or_else(|| anyhow!("size-at-pt needs --k"))?;
                    (format!(" p={k}"), size_at_pt(rule, &g, k))
                }
                other => bail!("unknown stat `{other}`"),
            };
            Ok(certificate_record(&code, rule, &stat, &param, &cert))
        };
        if args.workers > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(args.workers)
                .build()
                .context("building worker pool")?;
            pool.install(|| {
                use rayon::prelude::*;
                jobs.par_iter().map(|(_, g)| run_one(g)).collect()
            })
        } else {
            jobs.iter().map(|(_, g)| run_one(g)).collect()
        }
    };
    let records = records?;
    emit(args.output.as_ref(), &records)?;
    eprintln!(
        "compute: {} graphs, {} malformed lines, {} ms",
        records.len(),
        malformed,
        started.elapsed().as_millis()
    );
    Ok(if malformed > 0 { 1 } else { 0 })
}

fn enumerate_family(args: FamilyArgs) -> Result<i32> {
    let rule = parse_rule(&args.rule, None)?;
    let omega = Weight::parse(&args.omega).map_err(|e| anyhow!(e))?;
    let family = match args.kind.as_str() {
        "weighted" => enumerate_weighted_family(rule, args.k, omega, args.order_cap)
            .map_err(|e| anyhow!(e.to_string()))?,
        "product" => enumerate_product_family(rule, args.k).map_err(|e| anyhow!(e.to_string()))?,
        other => bail!("unknown family kind `{other}` (weighted | product)"),
    };
    let family = if args.minimal {
        minimalize(&family).map_err(|e| anyhow!(e.to_string()))?
    } else {
        family
    };
    let text = family_to_text(&family);
    match &args.output {
        Some(path) => std::fs::write(path, &text)?,
        None => print!("{text}"),
    }
    eprintln!(
        "enumerate-family: {} members, kind={:?}",
        family.members.len(),
        match family.kind {
            FamilyKind::Weighted(_) => "weighted",
            FamilyKind::Product => "product",
        }
    );
    Ok(0)
}

fn verify(args: VerifyArgs) -> Result<i32> {
    let started = Instant::now();
    let report: CheckReport = match args.theorem.as_str() {
        "product-sum-z" => product_sum_survey(args.max_order.unwrap_or(7), args.workers),
        "psd-product-part1" => psd_product_part1(
            args.max_order.unwrap_or(6),
            &[(Rule::Psd, 1), (Rule::Psd, 2)],
        ),
        "savings-lemma" => savings_lemma(args.max_order.unwrap_or(6), &omega_grid(), &[0, 1, 2]),
        "witness-lemma" => witness_lemma(
            args.max_order.unwrap_or(6),
            &[Rule::Standard, Rule::Psd],
            &omega_grid(),
            &[0, 1, 2],
        ),
        "induced-path-chains" => induced_path_chains(
            args.max_order.unwrap_or(5),
            &[Rule::Standard, Rule::Skew, Rule::KForcing(1)],
        ),
        "max-chain" => max_chain_census(args.max_order.unwrap_or(5), &[1, 2, 3]),
        "synchronous-optimality" => synchronous_optimality(
            args.max_order.unwrap_or(5),
            &[
                Rule::Standard,
                Rule::Psd,
                Rule::Skew,
                Rule::KForcing(2),
                Rule::Bootstrap(2),
            ],
        ),
        "axiom-flags" => axiom_flag_audit(args.max_order.unwrap_or(5)),
        other => bail!("unknown theorem selector `{other}`"),
    };
    emit(args.output.as_ref(), &report.records)?;
    for c in &report.counterexamples {
        eprintln!("counterexample: {c}");
    }
    eprintln!("{} ({} ms)", report.summary(), started.elapsed().as_millis());
    Ok(if report.passed() { 0 } else { 1 })
}

fn check_axioms(args: AxiomArgs) -> Result<i32> {
    let rule = parse_rule(&args.rule, None)?;
    let axiom = Axiom::parse(&args.axiom)
        .ok_or_else(|| anyhow!("unknown axiom `{}`", args.axiom))?;
    let corpus = census_through(args.max_order)?;
    let report = falsify_axiom(rule, axiom, &corpus, SearchBudget::default())
        .map_err(|e| anyhow!(e.to_string()))?;
    println!("{}", report_to_text(&report));
    if let Verdict::Falsified(w) = &report.verdict {
        println!("witness graph6: {}", to_graph6(&w.graph)?);
        println!("witness replays: {}", replay_witness(rule, w));
    }
    let declared_positive = Axiom::declared_for(rule).contains(&axiom);
    let declared_negative = Axiom::declared_negatives().contains(&(rule, axiom));
    let falsified = report.verdict.is_falsified();
    let ok = if declared_positive {
        !falsified
    } else if declared_negative {
        falsified
    } else {
        true
    };
    Ok(if ok { 0 } else { 1 })
}
