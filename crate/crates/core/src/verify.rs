//! Empirical safety checks: kernelize, then compare brute-force answers on
//! the input and on the kernel for every budget up to a limit.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generate::{gen_bounded_degree, gen_clique_free};
use crate::graph::{Edge, Graph};
use crate::kernel::{kernelize_bounded_degree, kernelize_restricted, HostClass, KernelResult, RuleApplied};
use crate::patterns::PatternFamily;
use crate::solver::{minimum_deletion_size, ProblemInstance, BRUTE_FORCE_EDGE_LIMIT};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KernelMode {
    Bounded,
    Ktfree { t: usize },
    Starfree { s: usize },
}

/// Runs the kernel matching `mode`.
pub fn kernelize(inst: &ProblemInstance, fam: &PatternFamily, mode: KernelMode) -> Result<KernelResult> {
    match mode {
        KernelMode::Bounded => Ok(kernelize_bounded_degree(inst, fam)),
        KernelMode::Ktfree { t } => kernelize_restricted(inst, fam, HostClass::CliqueFree { t }),
        KernelMode::Starfree { s } => kernelize_restricted(inst, fam, HostClass::StarFree { s }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        GraphSummary { vertices: g.vertex_count(), edges: g.edge_count(), max_degree: g.max_degree() }
    }
}

/// One kernelization at budget `k`, with optional brute-force answers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BudgetCheck {
    pub k: usize,
    pub rule: RuleApplied,
    pub kernel: GraphSummary,
    pub kernel_budget: usize,
    pub removed: usize,
    pub threshold: Option<f64>,
    pub radius: Option<usize>,
    pub bound: Option<u64>,
    pub bound_saturated: Option<bool>,
    pub pre: Option<bool>,
    pub post: Option<bool>,
    pub agree: Option<bool>,
}

impl BudgetCheck {
    pub fn from_kernel(k: usize, res: &KernelResult) -> Self {
        BudgetCheck {
            k,
            rule: res.rule,
            kernel: GraphSummary::of(&res.instance.graph),
            kernel_budget: res.instance.budget,
            removed: res.removed.len(),
            threshold: res.threshold.map(|t| t.value),
            radius: res.threshold.map(|t| t.radius),
            bound: res.bound.map(|b| b.value),
            bound_saturated: res.bound.map(|b| b.saturated),
            pre: None,
            post: None,
            agree: None,
        }
    }

    pub fn with_answers(mut self, pre: bool, post: bool) -> Self {
        self.pre = Some(pre);
        self.post = Some(post);
        self.agree = Some(pre == post);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub instance: GraphSummary,
    pub family: Vec<String>,
    pub mode: KernelMode,
    pub seed: Option<u64>,
    pub checks: Vec<BudgetCheck>,
    /// `false` iff some check has answers that disagree.
    pub agreement: bool,
    pub elapsed_ms: f64,
}

impl RunReport {
    pub fn new(
        g: &Graph,
        fam: &PatternFamily,
        mode: KernelMode,
        seed: Option<u64>,
        checks: Vec<BudgetCheck>,
        started: Instant,
    ) -> Self {
        let agreement = checks.iter().all(|c| c.agree != Some(false));
        RunReport {
            schema_version: REPORT_SCHEMA_VERSION,
            instance: GraphSummary::of(g),
            family: fam.names().to_vec(),
            mode,
            seed,
            checks,
            agreement,
            elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &BudgetCheck> {
        self.checks.iter().filter(|c| c.agree == Some(false))
    }
}

/// Minimum deletion sizes keyed by edge list; isolated vertices never matter.
#[derive(Default)]
pub struct OptimumCache {
    known: HashMap<Vec<Edge>, usize>,
}

impl OptimumCache {
    pub fn minimum(&mut self, g: &Graph, fam: &PatternFamily) -> usize {
        let key: Vec<Edge> = g.edges().collect();
        *self.known.entry(key).or_insert_with(|| minimum_deletion_size(g, fam))
    }

    pub fn is_yes(&mut self, inst: &ProblemInstance, fam: &PatternFamily) -> bool {
        self.minimum(&inst.graph, fam) <= inst.budget
    }
}

/// Kernelizes `(g, k)` for `k = 0..=k_max` and compares brute-force answers
/// before and after. A budget's answer is read off the brute-force minimum,
/// which is what the budgeted search would return.
pub fn verify_equivalence(g: &Graph, fam: &PatternFamily, mode: KernelMode, k_max: usize) -> Result<RunReport> {
    verify_seeded(g, fam, mode, k_max, None)
}

pub fn verify_seeded(
    g: &Graph,
    fam: &PatternFamily,
    mode: KernelMode,
    k_max: usize,
    seed: Option<u64>,
) -> Result<RunReport> {
    if g.edge_count() > BRUTE_FORCE_EDGE_LIMIT {
        return Err(Error::GuardExceeded { edges: g.edge_count(), limit: BRUTE_FORCE_EDGE_LIMIT });
    }
    let started = Instant::now();
    let mut cache = OptimumCache::default();
    let optimum = cache.minimum(g, fam);
    let mut checks = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let res = kernelize(&ProblemInstance::new(g.clone(), k), fam, mode)?;
        let post = cache.is_yes(&res.instance, fam);
        checks.push(BudgetCheck::from_kernel(k, &res).with_answers(optimum <= k, post));
    }
    Ok(RunReport::new(g, fam, mode, seed, checks, started))
}

/// Random instance source for campaigns.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Generator {
    Bounded { n: u32, delta: usize, p: f64 },
    Ktfree { n: u32, t: usize, p: f64 },
}

impl Generator {
    pub fn generate(&self, seed: u64) -> Graph {
        match *self {
            Generator::Bounded { n, delta, p } => gen_bounded_degree(n, delta, p, seed),
            Generator::Ktfree { n, t, p } => gen_clique_free(n, t, p, seed),
        }
    }
}

/// Runs [`verify_seeded`] on one generated graph per seed, in parallel. The
/// budget limit per graph is `min(k_max, |E|)`. Reports come back in seed
/// order.
pub fn run_campaign(
    generator: Generator,
    seeds: &[u64],
    fam: &PatternFamily,
    mode: KernelMode,
    k_max: usize,
) -> Result<Vec<(Graph, RunReport)>> {
    seeds
        .par_iter()
        .map(|&seed| {
            let g = generator.generate(seed);
            let k_max = k_max.min(g.edge_count());
            let report = verify_seeded(&g, fam, mode, k_max, Some(seed))?;
            Ok((g, report))
        })
        .collect()
}
