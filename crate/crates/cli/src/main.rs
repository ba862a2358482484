use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hfree_kernel::bounds::exponent_p;
use hfree_kernel::format::{parse_graph, parse_graphs, serialize_graph};
use hfree_kernel::generate::{gen_bounded_degree, gen_clique_free};
use hfree_kernel::kernel::{
    kernel_bound_rule0, kernel_bound_rule1, kernelize_bounded_degree_with_cap, rule0_threshold, rule1_threshold,
};
use hfree_kernel::solver::{minimum_deletion_size, BRUTE_FORCE_EDGE_LIMIT};
use hfree_kernel::verify::{
    kernelize, run_campaign, verify_seeded, BudgetCheck, Generator, KernelMode, RunReport, REPORT_SCHEMA_VERSION,
};
use hfree_kernel::{solve_branching, solve_bruteforce, Graph, KernelParams, PatternFamily, ProblemInstance};

/// Kernelization and exact solving for H-free edge deletion.
#[derive(Parser)]
#[command(name = "hfed", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kernelize one instance and print a JSON report.
    Kernelize(KernelizeArgs),
    /// Solve one instance exactly.
    Solve(SolveArgs),
    /// Compare brute-force answers before and after kernelization.
    Verify(VerifyArgs),
    /// Generate a random graph.
    Gen(GenArgs),
    /// Print thresholds and size bounds.
    Bound(BoundArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Bounded,
    Ktfree,
    Starfree,
}

#[derive(Args)]
struct FamilyArgs {
    /// Builtin names such as `K3,K1,3,P4,C5`, or `@path` to a graph file
    /// holding one graph per `p edge` block.
    #[arg(long)]
    family: String,
}

#[derive(Args)]
struct ModeArgs {
    #[arg(long, value_enum, default_value = "bounded")]
    mode: Mode,
    /// Clique order the input avoids (ktfree mode).
    #[arg(long)]
    t: Option<usize>,
    /// Star arity the input avoids (starfree mode).
    #[arg(long)]
    s: Option<usize>,
}

impl ModeArgs {
    fn resolve(&self) -> anyhow::Result<KernelMode> {
        Ok(match self.mode {
            Mode::Bounded => KernelMode::Bounded,
            Mode::Ktfree => KernelMode::Ktfree { t: self.t.context("--mode ktfree needs --t")? },
            Mode::Starfree => KernelMode::Starfree { s: self.s.context("--mode starfree needs --s")? },
        })
    }
}

#[derive(Args)]
struct KernelizeArgs {
    #[arg(long)]
    graph: PathBuf,
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    mode: ModeArgs,
    /// Assert the input has maximum degree at most this (bounded mode).
    #[arg(long)]
    delta: Option<usize>,
    /// Write the kernel graph here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also solve input and kernel by brute force and compare.
    #[arg(long)]
    verify: bool,
    /// Directory for the reproducer written on disagreement.
    #[arg(long, default_value = ".")]
    reproducer_dir: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Branch,
    Brute,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value = "branch")]
    engine: Engine,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Bounded,
    Ktfree,
}

#[derive(Args)]
struct GenParams {
    #[arg(long, value_enum, default_value = "bounded")]
    kind: Kind,
    #[arg(long, default_value_t = 10)]
    n: u32,
    /// Degree cap for `--kind bounded`.
    #[arg(long, default_value_t = 3)]
    delta: usize,
    /// Edge proposal probability.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
}

impl GenParams {
    fn generator(&self, t: Option<usize>) -> anyhow::Result<Generator> {
        if !(0.0..=1.0).contains(&self.p) {
            bail!("--p must lie in [0, 1], got {}", self.p);
        }
        if self.n == 0 {
            bail!("--n must be at least 1");
        }
        Ok(match self.kind {
            Kind::Bounded => {
                if self.delta == 0 {
                    bail!("--delta must be at least 1");
                }
                Generator::Bounded { n: self.n, delta: self.delta, p: self.p }
            }
            Kind::Ktfree => {
                let t = t.context("--kind ktfree needs --t")?;
                if t < 3 {
                    bail!("--t must be at least 3 for the generator, got {t}");
                }
                Generator::Ktfree { n: self.n, t, p: self.p }
            }
        })
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    mode: ModeArgs,
    #[arg(long, default_value_t = 4)]
    k_max: usize,
    /// Verify this graph instead of generated ones.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Number of generated instances.
    #[arg(long, default_value_t = 100)]
    seeds: u64,
    /// First seed.
    #[arg(long, env = "HFED_SEED", default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    gen: GenParams,
    #[arg(long, default_value = ".")]
    reproducer_dir: PathBuf,
    /// Write the full JSON output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    gen: GenParams,
    /// Clique order to avoid for `--kind ktfree`.
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, env = "HFED_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundArgs {
    /// Degree parameter (Δ for Rule 0, d for Rule 1).
    #[arg(long)]
    delta: usize,
    /// Largest diameter of a family member.
    #[arg(long)]
    diameter: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Serialize)]
struct SolveOutput {
    schema_version: u32,
    engine: &'static str,
    budget: usize,
    answer: bool,
    size: Option<usize>,
    edges: Vec<[u32; 2]>,
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct RuleBound {
    threshold: f64,
    radius: usize,
    bound: u64,
    bound_saturated: bool,
}

#[derive(Serialize)]
struct BoundOutput {
    schema_version: u32,
    delta: usize,
    diameter: usize,
    k: usize,
    exponent_p: f64,
    rule0: RuleBound,
    rule1: RuleBound,
}

#[derive(Serialize)]
struct VerifyOutput {
    schema_version: u32,
    instances: usize,
    disagreements: usize,
    reproducers: Vec<PathBuf>,
    reports: Vec<RunReport>,
}

/// A run that finished but found a disagreement.
struct Disagreement;

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&bytes).with_context(|| format!("parsing {}", path.display()))
}

fn load_family(spec: &str) -> anyhow::Result<PatternFamily> {
    match spec.strip_prefix('@') {
        Some(path) => {
            let bytes = fs::read(path).with_context(|| format!("reading {path}"))?;
            let graphs = parse_graphs(&bytes).with_context(|| format!("parsing {path}"))?;
            let named = graphs.into_iter().enumerate().map(|(i, g)| (format!("{path}#{}", i + 1), g)).collect();
            Ok(PatternFamily::named(named)?)
        }
        None => Ok(PatternFamily::from_builtin_names(spec)?),
    }
}

fn emit(value: &impl Serialize, out: Option<&Path>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(path) => fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn mode_label(mode: KernelMode) -> String {
    match mode {
        KernelMode::Bounded => "bounded".into(),
        KernelMode::Ktfree { t } => format!("ktfree t={t}"),
        KernelMode::Starfree { s } => format!("starfree s={s}"),
    }
}

/// Writes `g` with the failing parameters as comment lines, loadable with
/// `--graph`.
fn write_reproducer(
    dir: &Path,
    g: &Graph,
    family: &str,
    mode: KernelMode,
    k: usize,
    seed: Option<u64>,
) -> anyhow::Result<PathBuf> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let name = match seed {
        Some(seed) => format!("repro-seed{seed}-k{k}.graph"),
        None => format!("repro-k{k}.graph"),
    };
    let path = dir.join(name);
    let mut text = format!("c hfed reproducer\nc family {family}\nc mode {}\nc k {k}\n", mode_label(mode));
    if let Some(seed) = seed {
        text.push_str(&format!("c seed {seed}\n"));
    }
    text.push_str(&serialize_graph(g));
    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    log::warn!("disagreement at k={k}, reproducer written to {}", path.display());
    Ok(path)
}

fn cmd_kernelize(args: KernelizeArgs) -> anyhow::Result<Result<(), Disagreement>> {
    let started = Instant::now();
    let g = read_graph(&args.graph)?;
    let fam = load_family(&args.family.family)?;
    let mode = args.mode.resolve()?;
    let inst = ProblemInstance::new(g.clone(), args.k);
    let res = match (args.delta, mode) {
        (Some(cap), KernelMode::Bounded) => kernelize_bounded_degree_with_cap(&inst, &fam, cap)?,
        (Some(_), _) => bail!("--delta applies to --mode bounded only"),
        (None, mode) => kernelize(&inst, &fam, mode)?,
    };
    if let Some(out) = &args.out {
        fs::write(out, serialize_graph(&res.instance.graph)).with_context(|| format!("writing {}", out.display()))?;
    }
    let mut check = BudgetCheck::from_kernel(args.k, &res);
    let mut outcome = Ok(());
    if args.verify {
        for graph in [&g, &res.instance.graph] {
            if graph.edge_count() > BRUTE_FORCE_EDGE_LIMIT {
                bail!(hfree_kernel::Error::GuardExceeded { edges: graph.edge_count(), limit: BRUTE_FORCE_EDGE_LIMIT });
            }
        }
        let pre = minimum_deletion_size(&g, &fam) <= args.k;
        let post = minimum_deletion_size(&res.instance.graph, &fam) <= res.instance.budget;
        check = check.with_answers(pre, post);
        if pre != post {
            write_reproducer(&args.reproducer_dir, &g, &args.family.family, mode, args.k, None)?;
            outcome = Err(Disagreement);
        }
    }
    let report = RunReport::new(&g, &fam, mode, None, vec![check], started);
    emit(&report, None)?;
    Ok(outcome)
}

fn cmd_solve(args: SolveArgs) -> anyhow::Result<()> {
    let started = Instant::now();
    let g = read_graph(&args.graph)?;
    let fam = load_family(&args.family.family)?;
    let inst = ProblemInstance::new(g, args.k);
    let (engine, sol) = match args.engine {
        Engine::Branch => ("branch", solve_branching(&inst, &fam)),
        Engine::Brute => {
            if inst.graph.edge_count() > BRUTE_FORCE_EDGE_LIMIT {
                bail!(hfree_kernel::Error::GuardExceeded {
                    edges: inst.graph.edge_count(),
                    limit: BRUTE_FORCE_EDGE_LIMIT
                });
            }
            ("brute", solve_bruteforce(&inst, &fam))
        }
    };
    let out = SolveOutput {
        schema_version: REPORT_SCHEMA_VERSION,
        engine,
        budget: args.k,
        answer: sol.is_some(),
        size: sol.as_ref().map(|s| s.edges.len()),
        edges: sol.map(|s| s.edges.iter().map(|e| [e.u(), e.v()]).collect()).unwrap_or_default(),
        elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
    };
    emit(&out, None)
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<Result<(), Disagreement>> {
    let fam = load_family(&args.family.family)?;
    let mode = args.mode.resolve()?;
    let runs: Vec<(Graph, RunReport)> = match &args.graph {
        Some(path) => {
            let g = read_graph(path)?;
            let report = verify_seeded(&g, &fam, mode, args.k_max, None)?;
            vec![(g, report)]
        }
        None => {
            let generator = args.gen.generator(args.mode.t)?;
            let seeds: Vec<u64> = (0..args.seeds).map(|i| args.seed.wrapping_add(i)).collect();
            log::info!("verifying {} generated instances from seed {}", seeds.len(), args.seed);
            run_campaign(generator, &seeds, &fam, mode, args.k_max)?
        }
    };
    let mut reproducers = Vec::new();
    for (g, report) in &runs {
        for check in report.disagreements() {
            reproducers.push(write_reproducer(
                &args.reproducer_dir,
                g,
                &args.family.family,
                mode,
                check.k,
                report.seed,
            )?);
        }
    }
    let out = VerifyOutput {
        schema_version: REPORT_SCHEMA_VERSION,
        instances: runs.len(),
        disagreements: reproducers.len(),
        reproducers,
        reports: runs.into_iter().map(|(_, r)| r).collect(),
    };
    emit(&out, args.out.as_deref())?;
    Ok(if out.disagreements == 0 { Ok(()) } else { Err(Disagreement) })
}

fn cmd_gen(args: GenArgs) -> anyhow::Result<()> {
    let g = match args.gen.generator(args.t)? {
        Generator::Bounded { n, delta, p } => gen_bounded_degree(n, delta, p, args.seed),
        Generator::Ktfree { n, t, p } => gen_clique_free(n, t, p, args.seed),
    };
    let text = serialize_graph(&g);
    match args.out {
        Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_bound(args: BoundArgs) -> anyhow::Result<()> {
    let params = KernelParams::new(args.delta, args.diameter, args.k);
    let (t0, b0) = (rule0_threshold(&params)?, kernel_bound_rule0(&params)?);
    let (t1, b1) = (rule1_threshold(&params)?, kernel_bound_rule1(&params)?);
    let out = BoundOutput {
        schema_version: REPORT_SCHEMA_VERSION,
        delta: args.delta,
        diameter: args.diameter,
        k: args.k,
        exponent_p: exponent_p(args.delta),
        rule0: RuleBound { threshold: t0.value, radius: t0.radius, bound: b0.value, bound_saturated: b0.saturated },
        rule1: RuleBound { threshold: t1.value, radius: t1.radius, bound: b1.value, bound_saturated: b1.saturated },
    };
    emit(&out, None)
}

fn run(cli: Cli) -> anyhow::Result<Result<(), Disagreement>> {
    match cli.command {
        Command::Kernelize(args) => cmd_kernelize(args),
        Command::Solve(args) => cmd_solve(args).map(Ok),
        Command::Verify(args) => cmd_verify(args),
        Command::Gen(args) => cmd_gen(args).map(Ok),
        Command::Bound(args) => cmd_bound(args).map(Ok),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Disagreement)) => {
            eprintln!("verification failed: kernel changed the answer");
            ExitCode::from(1)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
