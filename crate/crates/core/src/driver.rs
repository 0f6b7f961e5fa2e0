//! Dispatch between the oracle and the structured path, with a worker pool.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::dense::{phase_one_candidates, phase_two_candidates, DenseParams};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::InputFormat;
use crate::kernel::is_minimal_cds;
use crate::oracle::{oracle_count, oracle_enumerate_par};
use crate::probe::{greedy_probe, ProbeParams, ProbeResult};
use crate::sparse::{SparsePlan, SparseStats};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Algo {
    #[default]
    Auto,
    Oracle,
    Structured,
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Self::Auto),
            "oracle" => Ok(Self::Oracle),
            "structured" => Ok(Self::Structured),
            other => Err(Error::Argument(format!("unknown algorithm `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTaken {
    Dense,
    Sparse,
    Oracle,
    SparseFallback,
}

impl fmt::Display for CaseTaken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Dense => "DENSE",
            Self::Sparse => "SPARSE",
            Self::Oracle => "ORACLE",
            Self::SparseFallback => "SPARSE_FALLBACK",
        })
    }
}

/// Default largest `n` that `Algo::Auto` sends to the oracle.
pub const DEFAULT_AUTO_THRESHOLD: usize = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub probe: ProbeParams,
    pub dense: DenseParams,
    pub algo: Algo,
    pub count_only: bool,
    pub format: InputFormat,
    pub workers: usize,
    pub auto_threshold: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            probe: ProbeParams::default(),
            dense: DenseParams::default(),
            algo: Algo::Auto,
            count_only: false,
            format: InputFormat::EdgeList,
            workers: 1,
            auto_threshold: DEFAULT_AUTO_THRESHOLD,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        self.probe.validate()?;
        self.dense.validate()?;
        if self.workers == 0 {
            return Err(Error::Argument("workers must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbeSummary {
    /// The oracle ran without probing.
    NotRun,
    /// `histogram[d]` counts vertices of degree `d` in `G'`.
    Subgraph { degree_histogram: Vec<usize> },
    Partition {
        low: usize,
        heavy: usize,
        rest: usize,
    },
}

impl fmt::Display for ProbeSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotRun => f.write_str("none"),
            Self::Subgraph { degree_histogram } => {
                f.write_str("subgraph_degrees=")?;
                let parts: Vec<String> = degree_histogram
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(d, c)| format!("{d}:{c}"))
                    .collect();
                f.write_str(&parts.join(","))
            }
            Self::Partition { low, heavy, rest } => {
                write!(f, "partition L={low} H={heavy} R={rest}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    pub case_taken: CaseTaken,
    pub mcds_count: u64,
    pub candidates_tested: u64,
    pub branches: u64,
    pub wall_time: Duration,
    pub probe_summary: ProbeSummary,
    pub sparse: Option<SparseStats>,
}

impl EnumerationReport {
    /// `key=value` lines for standard error.
    pub fn kv_lines(&self) -> Vec<String> {
        let mut lines = vec![
            format!("case_taken={}", self.case_taken),
            format!("mcds_count={}", self.mcds_count),
            format!("candidates_tested={}", self.candidates_tested),
            format!("branches={}", self.branches),
            format!("wall_ms={}", self.wall_time.as_millis()),
            format!("probe={}", self.probe_summary),
        ];
        if let Some(s) = &self.sparse {
            lines.push(format!("small_boundary_branches={}", s.small_boundary));
            lines.push(format!("scattered_branches={}", s.scattered));
            lines.push(format!("full_scan_fallbacks={}", s.fallbacks()));
        }
        lines
    }
}

/// One set per line, ids ascending and space-separated.
pub fn format_sets(sets: &[VertexSet]) -> String {
    let mut out = String::new();
    for s in sets {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out
}

/// Pools are kept per worker count so repeated calls do not respawn threads.
fn pool(workers: usize) -> Result<Arc<rayon::ThreadPool>> {
    static POOLS: OnceLock<Mutex<HashMap<usize, Arc<rayon::ThreadPool>>>> = OnceLock::new();
    let mut pools = POOLS
        .get_or_init(Default::default)
        .lock()
        .unwrap_or_else(|e| e.into_inner());
    if let Some(p) = pools.get(&workers) {
        return Ok(Arc::clone(p));
    }
    let p = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .thread_name(move |i| format!("mcds-{workers}-{i}"))
        .build()
        .map_err(|e| Error::Argument(format!("cannot start worker pool: {e}")))?;
    let p = Arc::new(p);
    pools.insert(workers, Arc::clone(&p));
    Ok(p)
}

struct Outcome {
    sets: Vec<VertexSet>,
    case_taken: CaseTaken,
    candidates_tested: u64,
    branches: u64,
    probe_summary: ProbeSummary,
    sparse: Option<SparseStats>,
}

fn run_oracle(g: &Graph, case_taken: CaseTaken, probe_summary: ProbeSummary) -> Result<Outcome> {
    let sets = oracle_enumerate_par(g)?;
    Ok(Outcome {
        sets,
        case_taken,
        candidates_tested: 1u64 << g.n(),
        branches: 0,
        probe_summary,
        sparse: None,
    })
}

fn run_dense(g: &Graph, gprime: &Graph, params: &DenseParams) -> Result<Outcome> {
    if !gprime.is_spanning_subgraph_of(g) {
        return Err(Error::Argument("probe returned a foreign subgraph".into()));
    }
    params.validate()?;
    let tested = AtomicU64::new(0);
    let check = |s: &VertexSet| {
        tested.fetch_add(1, Ordering::Relaxed);
        is_minimal_cds(g, s)
    };
    let mut sets: Vec<VertexSet> = phase_one_candidates(g.n(), params)
        .par_bridge()
        .filter(check)
        .collect();
    sets.extend(
        phase_two_candidates(gprime, params)
            .par_bridge()
            .filter(check)
            .collect::<Vec<_>>(),
    );
    let mut histogram = vec![0usize; gprime.max_degree() + 1];
    for v in 0..gprime.n() {
        histogram[gprime.degree(v)] += 1;
    }
    Ok(Outcome {
        sets,
        case_taken: CaseTaken::Dense,
        candidates_tested: tested.into_inner(),
        branches: 0,
        probe_summary: ProbeSummary::Subgraph {
            degree_histogram: histogram,
        },
        sparse: None,
    })
}

fn run_structured(g: &Graph, cfg: &RunConfig) -> Result<Outcome> {
    match greedy_probe(g, &cfg.probe) {
        ProbeResult::SpanningSubgraph { subgraph } => run_dense(g, &subgraph, &cfg.dense),
        ProbeResult::Partition { low, heavy, rest } => {
            let summary = ProbeSummary::Partition {
                low: low.len(),
                heavy: heavy.len(),
                rest: rest.len(),
            };
            let plan = match SparsePlan::new(g, &low, &heavy, &rest, cfg.probe.ell) {
                Ok(plan) => plan,
                Err(Error::PreconditionFallback(_)) => {
                    return run_oracle(g, CaseTaken::SparseFallback, summary)
                }
                Err(e) => return Err(e),
            };
            let runs: Vec<_> = (0..plan.branch_count())
                .into_par_iter()
                .map(|mask| plan.run_branch(mask))
                .collect();
            let mut stats = SparseStats::default();
            let mut sets = Vec::new();
            for run in runs {
                stats.merge(&run.stats);
                sets.extend(run.found);
            }
            Ok(Outcome {
                sets,
                case_taken: CaseTaken::Sparse,
                candidates_tested: stats.candidates_tested,
                branches: stats.branches,
                probe_summary: summary,
                sparse: Some(stats),
            })
        }
    }
}

/// Lists every minimal CDS of `g`, sorted by size and then lexicographically.
pub fn enumerate_mcds(g: &Graph, cfg: &RunConfig) -> Result<(Vec<VertexSet>, EnumerationReport)> {
    cfg.validate()?;
    let start = Instant::now();
    let algo = match cfg.algo {
        Algo::Auto if g.n() <= cfg.auto_threshold => Algo::Oracle,
        Algo::Auto => Algo::Structured,
        other => other,
    };
    let outcome = pool(cfg.workers)?.install(|| match algo {
        Algo::Oracle => run_oracle(g, CaseTaken::Oracle, ProbeSummary::NotRun),
        _ => run_structured(g, cfg),
    })?;
    let Outcome {
        mut sets,
        case_taken,
        candidates_tested,
        branches,
        probe_summary,
        sparse,
    } = outcome;
    sets.sort();
    let before = sets.len();
    sets.dedup();
    debug_assert_eq!(before, sets.len(), "an enumerator emitted a set twice");
    let report = EnumerationReport {
        case_taken,
        mcds_count: sets.len() as u64,
        candidates_tested,
        branches,
        wall_time: start.elapsed(),
        probe_summary,
        sparse,
    };
    Ok((sets, report))
}

/// Largest number of minimal CDS over connected labeled graphs on `n` vertices, with
/// the first witness in edge-mask order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    pub n: usize,
    pub max_count: u64,
    pub witness: Graph,
    pub graphs_checked: u64,
}

pub const EXTREMAL_MAX_N: usize = 7;

pub fn extremal_search(n: usize, workers: usize) -> Result<ExtremalResult> {
    if n == 0 || n > EXTREMAL_MAX_N {
        return Err(Error::Argument(format!(
            "extremal search needs 1 <= n <= {EXTREMAL_MAX_N}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let graph_of = |mask: u64| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs are valid edges")
    };
    let total = 1u64 << pairs.len();
    let best = pool(workers.max(1))?.install(|| {
        (0..total)
            .into_par_iter()
            .filter_map(|mask| {
                let g = graph_of(mask);
                if !g.is_connected_on(&g.vertices()) {
                    return None;
                }
                Some((
                    oracle_count(&g).expect("n is small"),
                    std::cmp::Reverse(mask),
                ))
            })
            .max()
    });
    let (max_count, std::cmp::Reverse(mask)) = best.expect("the complete graph is connected");
    Ok(ExtremalResult {
        n,
        max_count,
        witness: graph_of(mask),
        graphs_checked: total,
    })
}
