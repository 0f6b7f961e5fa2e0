//! Greedy construction of a bounded-degree spanning subgraph, which either succeeds
//! (few vertices of small degree) or exposes an `(L, H, R)` partition where the
//! low-degree side has few neighbors outside a small heavy set.

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeParams {
    /// Target minimum degree.
    pub ell: usize,
    /// Degree cap.
    pub h: usize,
    /// Fraction of `n` that the low-degree side must reach for the partition branch.
    pub delta: Fraction,
}

impl Default for ProbeParams {
    fn default() -> Self {
        Self {
            ell: 14,
            h: 300_000,
            delta: Fraction::from_parts(1, 60),
        }
    }
}

impl ProbeParams {
    pub fn new(ell: usize, h: usize, delta: Fraction) -> Result<Self> {
        let p = Self { ell, h, delta };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.ell == 0 || self.ell > self.h {
            return Err(Error::Argument(format!(
                "probe parameters need 1 <= ell <= h, got ell={} h={}",
                self.ell, self.h
            )));
        }
        if !self.delta.is_unit() {
            return Err(Error::Argument(format!(
                "delta must lie in [0, 1], got {}",
                self.delta
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbeResult {
    /// Spanning subgraph with maximum degree `<= h` and fewer than `delta * n`
    /// vertices of degree `< ell`.
    SpanningSubgraph { subgraph: Graph },
    /// `low` are the vertices left with subgraph degree `< ell`, `heavy` those that
    /// reached the cap `h`, `rest` everything else.
    Partition {
        low: VertexSet,
        heavy: VertexSet,
        rest: VertexSet,
    },
}

/// Which invariant of a [`ProbeResult`] failed.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ProbeViolation {
    #[error("subgraph is not a spanning subgraph of the input")]
    NotSpanning,
    #[error("vertex {0} exceeds the degree cap")]
    DegreeAboveCap(usize),
    #[error("too many vertices below the target degree")]
    TooManyLow,
    #[error("L, H, R do not partition the vertex set")]
    NotAPartition,
    #[error("|L| is below delta * n")]
    LowTooSmall,
    #[error("vertex {0} of L has at least ell neighbors outside H")]
    LowVertexTooConnected(usize),
    #[error("|H| exceeds (2 ell / h) * n")]
    HeavyTooLarge,
}

impl ProbeResult {
    /// Checks every invariant of the returned branch against the input graph.
    pub fn check(
        &self,
        g: &Graph,
        params: &ProbeParams,
    ) -> std::result::Result<(), ProbeViolation> {
        let n = g.n();
        match self {
            Self::SpanningSubgraph { subgraph } => {
                if !subgraph.is_spanning_subgraph_of(g) {
                    return Err(ProbeViolation::NotSpanning);
                }
                if let Some(v) = (0..n).find(|&v| subgraph.degree(v) > params.h) {
                    return Err(ProbeViolation::DegreeAboveCap(v));
                }
                let low = (0..n).filter(|&v| subgraph.degree(v) < params.ell).count();
                if n > 0 && !params.delta.gt_count(low, n) {
                    return Err(ProbeViolation::TooManyLow);
                }
            }
            Self::Partition { low, heavy, rest } => {
                let all = &(low | heavy) | rest;
                if all.len() != n
                    || low.intersects(heavy)
                    || low.intersects(rest)
                    || heavy.intersects(rest)
                {
                    return Err(ProbeViolation::NotAPartition);
                }
                if !params.delta.le_count(low.len(), n) {
                    return Err(ProbeViolation::LowTooSmall);
                }
                if let Some(v) = low
                    .iter()
                    .find(|&v| g.neighbors(v).difference(heavy).len() >= params.ell)
                {
                    return Err(ProbeViolation::LowVertexTooConnected(v));
                }
                // |H| <= (2 ell / h) n
                if (params.h as u128) * (heavy.len() as u128)
                    > 2 * (params.ell as u128) * (n as u128)
                {
                    return Err(ProbeViolation::HeavyTooLarge);
                }
            }
        }
        Ok(())
    }

    pub fn is_partition(&self) -> bool {
        matches!(self, Self::Partition { .. })
    }
}

/// Record of a probe run: the edges added, in order, and the potential
/// `Σ_v max(ell - deg(v), 0)` before the first and after every addition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProbeTrace {
    pub added: Vec<(usize, usize)>,
    pub potentials: Vec<u64>,
}

pub fn greedy_probe(g: &Graph, params: &ProbeParams) -> ProbeResult {
    run_probe(g, params, None)
}

pub fn greedy_probe_traced(g: &Graph, params: &ProbeParams) -> (ProbeResult, ProbeTrace) {
    let mut trace = ProbeTrace::default();
    let result = run_probe(g, params, Some(&mut trace));
    (result, trace)
}

fn run_probe(g: &Graph, params: &ProbeParams, mut trace: Option<&mut ProbeTrace>) -> ProbeResult {
    let n = g.n();
    let (ell, h) = (params.ell, params.h);
    let mut sub_adj = vec![VertexSet::new(n); n];
    let mut deg = vec![0usize; n];
    let deficit = |d: usize| ell.saturating_sub(d) as u64;
    let mut potential: u64 = (n * ell) as u64;
    if let Some(t) = trace.as_deref_mut() {
        t.potentials.push(potential);
    }

    // An edge is eligible while both ends are below h and one is below ell. Degrees
    // only grow, so eligibility is never regained: one ascending pass over deficient
    // vertices, each scanning its neighbors once, reaches the fixpoint.
    let mut edges = Vec::new();
    for u in 0..n {
        if deg[u] >= ell {
            continue;
        }
        for v in g.neighbors(u) {
            if deg[u] >= ell {
                break;
            }
            if deg[v] >= h || sub_adj[u].contains(v) {
                continue;
            }
            let before = deficit(deg[u]) + deficit(deg[v]);
            deg[u] += 1;
            deg[v] += 1;
            let after = deficit(deg[u]) + deficit(deg[v]);
            debug_assert!(after < before, "potential must strictly decrease");
            potential -= before - after;
            sub_adj[u].insert(v);
            sub_adj[v].insert(u);
            edges.push((u, v));
            if let Some(t) = trace.as_deref_mut() {
                t.added.push((u.min(v), u.max(v)));
                t.potentials.push(potential);
            }
        }
    }
    debug_assert!(edges.len() <= n * ell);

    let low = VertexSet::from_iter_in(n, (0..n).filter(|&v| deg[v] < ell));
    // n = 0 takes the subgraph branch: its invariants hold vacuously.
    let result = if n == 0 || params.delta.gt_count(low.len(), n) {
        ProbeResult::SpanningSubgraph {
            subgraph: Graph::from_edges(n, edges).expect("edges of the input graph"),
        }
    } else {
        let heavy = VertexSet::from_iter_in(n, (0..n).filter(|&v| deg[v] == h));
        let rest = (&low | &heavy).complement();
        ProbeResult::Partition { low, heavy, rest }
    };
    if let Err(violation) = result.check(g, params) {
        panic!("probe postcondition violated: {violation}");
    }
    result
}
