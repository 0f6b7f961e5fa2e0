//! Enumeration from an `(L, H, R)` partition.
//!
//! Every vertex outside the (independent) free side is decided up front: for each
//! split of `H ∪ R` into included `I` and excluded `O`, the instance is cleaned so
//! that `I ∪ O` induces no edges, then the minimal `(I, O)`-extensions inside the
//! free side are listed by one of two subcase enumerators:
//!
//! * few low-degree vertices in `R`: extensions are no larger than `|I ∪ O|`, so a
//!   size-bounded scan suffices;
//! * many low-degree vertices in `R`: a subfamily of them with pairwise disjoint
//!   neighborhoods must each be hit, which is a superset-closed condition.
//!
//! A minimal CDS `X` is recovered from its branch `I = X ∩ (H ∪ R)` as `I ∪ S`.

use crate::error::{Error, Result};
use crate::family::enumerate_upward_closed;
use crate::graph::{ContractionMap, Graph};
use crate::kernel::{is_minimal_cds, is_minimal_extension_unchecked};
use crate::subsets::SubsetsUpTo;
use crate::vertex_set::VertexSet;

/// A graph with its vertices split into free vertices and decided ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionInstance {
    pub graph: Graph,
    /// Undecided vertices, where extensions live.
    pub free: VertexSet,
    /// Vertices forced into the dominating set.
    pub included: VertexSet,
    /// Vertices forced out of it.
    pub excluded: VertexSet,
}

impl ExtensionInstance {
    pub fn new(
        graph: Graph,
        free: VertexSet,
        included: VertexSet,
        excluded: VertexSet,
    ) -> Result<Self> {
        let inst = Self {
            graph,
            free,
            included,
            excluded,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.graph.n();
        let sets = [&self.free, &self.included, &self.excluded];
        if sets.iter().any(|s| s.universe() != n) {
            return Err(Error::Argument(
                "extension sets over the wrong universe".into(),
            ));
        }
        let disjoint = self.free.is_disjoint(&self.included)
            && self.free.is_disjoint(&self.excluded)
            && self.included.is_disjoint(&self.excluded);
        let covered = self.free.len() + self.included.len() + self.excluded.len() == n;
        if !(disjoint && covered) {
            return Err(Error::Argument(
                "free, included and excluded must partition the vertex set".into(),
            ));
        }
        Ok(())
    }

    /// `I ∪ O`
    pub fn decided(&self) -> VertexSet {
        self.included.union(&self.excluded)
    }
}

/// An instance after cleaning: decided vertices induce no edges.
#[derive(Clone, Debug)]
pub struct ReducedInstance {
    pub instance: ExtensionInstance,
    /// Composite map from the pre-reduction graph.
    pub map: ContractionMap,
    pub heavy: VertexSet,
    pub rest: VertexSet,
    /// Original id of each reduced free vertex (`usize::MAX` elsewhere).
    free_origin: Vec<usize>,
}

impl ReducedInstance {
    /// Carries a set of reduced free vertices back to original ids.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_iter_in(
            self.map.old_n(),
            s.iter().map(|v| {
                let orig = self.free_origin[v];
                debug_assert_ne!(orig, usize::MAX, "lifting a non-free vertex");
                orig
            }),
        )
    }

    /// Carries a set of original free vertices to reduced ids.
    pub fn project(&self, s: &VertexSet) -> VertexSet {
        self.map.map_set(s)
    }

    /// Decided vertices induce no edge and free vertices are independent.
    pub fn is_excellent(&self) -> bool {
        let g = &self.instance.graph;
        g.is_independent(&self.instance.decided()) && g.is_independent(&self.instance.free)
    }
}

/// Greedy maximal independent subset of `l`, ascending ids.
pub fn maximal_independent_in(g: &Graph, l: &VertexSet) -> VertexSet {
    let mut chosen = g.empty_set();
    let mut blocked = g.empty_set();
    for v in l {
        if !blocked.contains(v) {
            chosen.insert(v);
            blocked.insert(v);
            blocked.union_with(g.neighbors(v));
        }
    }
    chosen
}

/// Cleans the decided part of an instance until it induces no edges:
///
/// 1. an excluded vertex adjacent to an included one is deleted (it is dominated anyway),
/// 2. edges between excluded vertices are deleted,
/// 3. edges between included vertices are contracted; the merged vertex is heavy if
///    either endpoint was.
///
/// Free vertices are never touched, and for every `S` inside the free side,
/// minimality as an extension is preserved in both directions.
pub fn reduce_instance(
    inst: &ExtensionInstance,
    heavy: &VertexSet,
    rest: &VertexSet,
) -> Result<ReducedInstance> {
    inst.validate()?;
    let n = inst.graph.n();
    if heavy.universe() != n || rest.universe() != n {
        return Err(Error::Argument(
            "heavy/rest sets over the wrong universe".into(),
        ));
    }
    if heavy.intersects(rest) || heavy.union(rest) != inst.decided() {
        return Err(Error::Argument(
            "heavy and rest must partition the decided vertices".into(),
        ));
    }
    if !inst.graph.is_independent(&inst.free) {
        return Err(Error::Argument("free vertices must be independent".into()));
    }
    if 10 * heavy.len() > inst.free.len() {
        return Err(Error::Argument("good partition needs |L| >= 10 |H|".into()));
    }

    let mut g = inst.graph.clone();
    let mut map = ContractionMap::identity(n);
    let mut free = inst.free.clone();
    let mut included = inst.included.clone();
    let mut excluded = inst.excluded.clone();
    let mut heavy = heavy.clone();
    let mut rest = rest.clone();

    loop {
        let dominated: Vec<usize> = excluded
            .iter()
            .filter(|&u| g.neighbors(u).intersects(&included))
            .collect();
        if !dominated.is_empty() {
            let mut keep = g.vertices();
            for u in dominated {
                keep.remove(u);
            }
            let (g2, step) = g.induced(&keep);
            g = g2;
            for s in [
                &mut free,
                &mut included,
                &mut excluded,
                &mut heavy,
                &mut rest,
            ] {
                *s = step.map_set(s);
            }
            map = map.compose(&step);
            continue;
        }

        if !g.is_independent(&excluded) {
            g = g.without_edges_within(&excluded);
            continue;
        }

        if let Some(&(u, v)) = g.edges_within(&included).first() {
            let either_heavy = heavy.contains(u) || heavy.contains(v);
            let (g2, step) = g.contract_edge(u, v)?;
            let w = step.image(u).expect("contracted vertex survives");
            g = g2;
            for s in [
                &mut free,
                &mut included,
                &mut excluded,
                &mut heavy,
                &mut rest,
            ] {
                *s = step.map_set(s);
            }
            if either_heavy {
                rest.remove(w);
            } else {
                heavy.remove(w);
            }
            map = map.compose(&step);
            continue;
        }
        break;
    }

    debug_assert!(map.is_injective_on(&inst.free));
    let mut free_origin = vec![usize::MAX; g.n()];
    for v in &inst.free {
        free_origin[map.image(v).expect("free vertices survive")] = v;
    }
    let reduced = ReducedInstance {
        instance: ExtensionInstance {
            graph: g,
            free,
            included,
            excluded,
        },
        map,
        heavy,
        rest,
        free_origin,
    };
    debug_assert!(reduced.instance.validate().is_ok());
    debug_assert!(reduced.is_excellent());
    Ok(reduced)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subcase {
    /// At most `|L| / 10` vertices of `R` have degree below `10 ell`.
    SmallBoundary,
    /// More than `|L| / 10` such vertices.
    ScatteredR,
}

fn low_degree_rest(red: &ReducedInstance, ell: usize) -> VertexSet {
    let g = &red.instance.graph;
    VertexSet::from_iter_in(g.n(), red.rest.iter().filter(|&v| g.degree(v) < 10 * ell))
}

pub fn classify_subcase(red: &ReducedInstance, ell: usize) -> Subcase {
    let count = low_degree_rest(red, ell).len();
    if 10 * count <= red.instance.free.len() {
        Subcase::SmallBoundary
    } else {
        Subcase::ScatteredR
    }
}

/// Candidates filtered down to minimal extensions of a reduced instance.
pub struct ExtensionStream {
    graph: Graph,
    included: VertexSet,
    candidates: Box<dyn Iterator<Item = VertexSet> + Send>,
    fallback: bool,
    tested: u64,
}

impl ExtensionStream {
    fn new(
        red: &ReducedInstance,
        candidates: Box<dyn Iterator<Item = VertexSet> + Send>,
        fallback: bool,
    ) -> Self {
        Self {
            graph: red.instance.graph.clone(),
            included: red.instance.included.clone(),
            candidates,
            fallback,
            tested: 0,
        }
    }

    /// Whether the enumerator fell back to scanning every subset of the free side.
    pub fn is_fallback(&self) -> bool {
        self.fallback
    }

    pub fn candidates_tested(&self) -> u64 {
        self.tested
    }
}

impl Iterator for ExtensionStream {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        for s in self.candidates.by_ref() {
            self.tested += 1;
            if is_minimal_extension_unchecked(&self.graph, &self.included, &s) {
                return Some(s);
            }
        }
        None
    }
}

fn require_excellent(red: &ReducedInstance) -> Result<()> {
    red.instance.validate()?;
    if !red.is_excellent() {
        return Err(Error::Argument("instance is not excellent".into()));
    }
    Ok(())
}

/// Small-boundary subcase: with `I` nonempty every minimal extension has at most
/// `|I ∪ O|` vertices, so only subsets up to that size are scanned. With `I` empty
/// the bound does not apply and every subset of the free side is scanned.
pub fn enumerate_extensions_small(red: &ReducedInstance) -> Result<ExtensionStream> {
    require_excellent(red)?;
    let inst = &red.instance;
    let fallback = inst.included.is_empty();
    let limit = if fallback {
        inst.free.len()
    } else {
        inst.decided().len().min(inst.free.len())
    };
    let candidates = SubsetsUpTo::of_set(&inst.free, limit);
    Ok(ExtensionStream::new(red, Box::new(candidates), fallback))
}

/// Greedy marking over the low-degree vertices of `R` in ascending order; the result
/// has pairwise disjoint neighborhoods.
pub fn select_scattered_r(red: &ReducedInstance, ell: usize) -> VertexSet {
    let g = &red.instance.graph;
    let small = low_degree_rest(red, ell);
    let mut marked = g.empty_set();
    let mut chosen = g.empty_set();
    for r in &small {
        if marked.contains(r) {
            continue;
        }
        chosen.insert(r);
        marked.insert(r);
        for other in &small {
            if g.neighbors(r).intersects(g.neighbors(other)) {
                marked.insert(other);
            }
        }
    }
    chosen
}

/// Scattered subcase: when `|I ∪ O| >= 2` every extension hits the neighborhood of
/// each vertex of `rprime`, so only the superset-closed family of such hitting sets
/// is walked. Otherwise every subset of the free side is scanned.
pub fn enumerate_extensions_hitting(
    red: &ReducedInstance,
    rprime: &VertexSet,
) -> Result<ExtensionStream> {
    require_excellent(red)?;
    let inst = &red.instance;
    let g = &inst.graph;
    let mut seen = g.empty_set();
    for r in rprime {
        let nb = g.neighbors(r);
        if !nb.is_subset(&inst.free) {
            return Err(Error::Argument(format!(
                "vertex {r} has neighbors outside the free side"
            )));
        }
        if nb.intersects(&seen) {
            return Err(Error::Argument(
                "hitting vertices must have pairwise disjoint neighborhoods".into(),
            ));
        }
        seen.union_with(nb);
    }

    if inst.decided().len() <= 1 {
        let all = SubsetsUpTo::of_set(&inst.free, inst.free.len());
        return Ok(ExtensionStream::new(red, Box::new(all), true));
    }
    let neighborhoods: Vec<VertexSet> = rprime.iter().map(|r| g.neighbors(r).clone()).collect();
    let hits_all = move |s: &VertexSet| neighborhoods.iter().all(|nb| nb.intersects(s));
    let family = enumerate_upward_closed(&inst.free, hits_all);
    Ok(ExtensionStream::new(red, Box::new(family), false))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SparseStats {
    pub branches: u64,
    pub candidates_tested: u64,
    pub small_boundary: u64,
    pub scattered: u64,
    pub small_fallbacks: u64,
    pub hitting_fallbacks: u64,
    /// Extensions whose union with `I` was a CDS but not a minimal one.
    pub dropped_non_minimal: u64,
}

impl SparseStats {
    pub fn merge(&mut self, other: &SparseStats) {
        self.branches += other.branches;
        self.candidates_tested += other.candidates_tested;
        self.small_boundary += other.small_boundary;
        self.scattered += other.scattered;
        self.small_fallbacks += other.small_fallbacks;
        self.hitting_fallbacks += other.hitting_fallbacks;
        self.dropped_non_minimal += other.dropped_non_minimal;
    }

    pub fn fallbacks(&self) -> u64 {
        self.small_fallbacks + self.hitting_fallbacks
    }
}

/// Largest number of decided vertices the branch counter supports.
pub const MAX_BRANCH_VERTICES: usize = 62;

/// A validated sparse-case run: the free side shrunk to an independent set and the
/// ordered list of vertices to branch on.
#[derive(Clone, Debug)]
pub struct SparsePlan<'a> {
    graph: &'a Graph,
    ell: usize,
    free: VertexSet,
    heavy: VertexSet,
    rest: VertexSet,
    branch_vertices: Vec<usize>,
}

/// The outcome of one `(I, O)` branch.
#[derive(Clone, Debug, Default)]
pub struct BranchRun {
    pub found: Vec<VertexSet>,
    pub stats: SparseStats,
}

/// Checks the sparse-case preconditions: `L, H, R` partition the vertices,
/// `|L| >= 10 |H| ell`, and every `L`-vertex has fewer than `ell` neighbors in `L ∪ R`.
pub fn sparse_preconditions(
    g: &Graph,
    low: &VertexSet,
    heavy: &VertexSet,
    rest: &VertexSet,
    ell: usize,
) -> Result<()> {
    let n = g.n();
    let fail = |msg: String| Err(Error::PreconditionFallback(msg));
    if [low, heavy, rest].iter().any(|s| s.universe() != n) {
        return fail("partition sets over the wrong universe".into());
    }
    if low.len() + heavy.len() + rest.len() != n || (&(low | heavy) | rest).len() != n {
        return fail("L, H, R do not partition the vertex set".into());
    }
    if ell == 0 {
        return fail("ell must be positive".into());
    }
    if (low.len() as u128) < 10 * (heavy.len() as u128) * (ell as u128) {
        return fail(format!(
            "|L| = {} is below 10 |H| ell = {}",
            low.len(),
            10 * heavy.len() * ell
        ));
    }
    let outside_heavy = heavy.complement();
    if let Some(v) = low
        .iter()
        .find(|&v| g.neighbors(v).intersection_len(&outside_heavy) >= ell)
    {
        return fail(format!("vertex {v} has at least {ell} neighbors in L ∪ R"));
    }
    Ok(())
}

impl<'a> SparsePlan<'a> {
    pub fn new(
        g: &'a Graph,
        low: &VertexSet,
        heavy: &VertexSet,
        rest: &VertexSet,
        ell: usize,
    ) -> Result<Self> {
        sparse_preconditions(g, low, heavy, rest, ell)?;
        let free = maximal_independent_in(g, low);
        let rest = rest.union(&low.difference(&free));
        let branch_vertices = heavy.union(&rest).to_vec();
        if branch_vertices.len() > MAX_BRANCH_VERTICES {
            return Err(Error::Capacity(format!(
                "{} decided vertices exceed the branch limit of {MAX_BRANCH_VERTICES}",
                branch_vertices.len()
            )));
        }
        Ok(Self {
            graph: g,
            ell,
            free,
            heavy: heavy.clone(),
            rest,
            branch_vertices,
        })
    }

    pub fn free(&self) -> &VertexSet {
        &self.free
    }

    pub fn branch_vertices(&self) -> &[usize] {
        &self.branch_vertices
    }

    pub fn branch_count(&self) -> u64 {
        1u64 << self.branch_vertices.len()
    }

    /// `I` for branch `mask`: bit `i` includes the `i`-th branch vertex.
    pub fn included_for(&self, mask: u64) -> VertexSet {
        VertexSet::from_iter_in(
            self.graph.n(),
            self.branch_vertices
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v),
        )
    }

    fn open_branch(&self, mask: u64) -> Branch {
        let g = self.graph;
        let included = self.included_for(mask);
        let excluded = g.vertices().difference(&self.free).difference(&included);
        let inst = ExtensionInstance {
            graph: g.clone(),
            free: self.free.clone(),
            included: included.clone(),
            excluded,
        };
        let red = reduce_instance(&inst, &self.heavy, &self.rest)
            .expect("sparse plan yields a good partition");
        let mut stats = SparseStats {
            branches: 1,
            ..SparseStats::default()
        };
        let stream = match classify_subcase(&red, self.ell) {
            Subcase::SmallBoundary => {
                stats.small_boundary += 1;
                enumerate_extensions_small(&red)
            }
            Subcase::ScatteredR => {
                stats.scattered += 1;
                let rprime = select_scattered_r(&red, self.ell);
                enumerate_extensions_hitting(&red, &rprime)
            }
        }
        .expect("reduced instance is excellent");
        if stream.is_fallback() {
            match classify_subcase(&red, self.ell) {
                Subcase::SmallBoundary => stats.small_fallbacks += 1,
                Subcase::ScatteredR => stats.hitting_fallbacks += 1,
            }
        }
        Branch {
            included,
            red,
            stream,
            stats,
        }
    }

    /// Runs one branch to completion.
    pub fn run_branch(&self, mask: u64) -> BranchRun {
        let mut branch = self.open_branch(mask);
        let mut found = Vec::new();
        while let Some(x) = branch.next_cds(self.graph) {
            found.push(x);
        }
        BranchRun {
            found,
            stats: branch.finish(),
        }
    }

    /// Streams every branch in counter order.
    pub fn iter(&self) -> SparseEnumeration<'_, 'a> {
        SparseEnumeration {
            plan: self,
            next_mask: 0,
            current: None,
            stats: SparseStats::default(),
        }
    }
}

struct Branch {
    included: VertexSet,
    red: ReducedInstance,
    stream: ExtensionStream,
    stats: SparseStats,
}

impl Branch {
    fn next_cds(&mut self, g: &Graph) -> Option<VertexSet> {
        for s in self.stream.by_ref() {
            let x = self.included.union(&self.red.lift(&s));
            if is_minimal_cds(g, &x) {
                return Some(x);
            }
            self.stats.dropped_non_minimal += 1;
        }
        None
    }

    fn finish(mut self) -> SparseStats {
        self.stats.candidates_tested = self.stream.candidates_tested();
        self.stats
    }
}

/// Pull-based stream over all branches of a [`SparsePlan`].
pub struct SparseEnumeration<'p, 'a> {
    plan: &'p SparsePlan<'a>,
    next_mask: u64,
    current: Option<Branch>,
    stats: SparseStats,
}

impl SparseEnumeration<'_, '_> {
    /// Totals over the branches finished so far.
    pub fn stats(&self) -> SparseStats {
        self.stats
    }
}

impl Iterator for SparseEnumeration<'_, '_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            if let Some(branch) = self.current.as_mut() {
                if let Some(x) = branch.next_cds(self.plan.graph) {
                    return Some(x);
                }
                let done = self.current.take().expect("branch present");
                self.stats.merge(&done.finish());
            }
            if self.next_mask >= self.plan.branch_count() {
                return None;
            }
            self.current = Some(self.plan.open_branch(self.next_mask));
            self.next_mask += 1;
        }
    }
}

/// Lists every minimal CDS of `g` from the partition `(low, heavy, rest)`.
/// Fails with [`Error::PreconditionFallback`] when the partition is unsuitable.
pub fn enumerate_sparse(
    g: &Graph,
    low: &VertexSet,
    heavy: &VertexSet,
    rest: &VertexSet,
    ell: usize,
) -> Result<(Vec<VertexSet>, SparseStats)> {
    let plan = SparsePlan::new(g, low, heavy, rest, ell)?;
    let mut it = plan.iter();
    let found: Vec<VertexSet> = it.by_ref().collect();
    Ok((found, it.stats()))
}
