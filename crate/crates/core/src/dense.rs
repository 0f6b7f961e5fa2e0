//! Enumeration when a bounded-degree spanning subgraph `G'` is available.
//!
//! Phase 1 scans every set of size at most `⌊size_cut · n⌋`. Phase 2 walks the
//! subset-closed family `{S : |L_{G'}(S)| >= threshold · n}` and keeps the larger
//! sets. A minimal CDS too large for phase 1 has many vertices of `G`-degree at most
//! two into `S`, and those stay low in any spanning subgraph, so phase 2 sees it.

use crate::error::{Error, Result};
use crate::family::{enumerate_downward_closed, DownwardClosed};
use crate::fraction::Fraction;
use crate::graph::Graph;
use crate::kernel::{is_minimal_cds, low_degree_count, LowDegreeThreshold};
use crate::subsets::SubsetsUpTo;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DenseParams {
    pub size_cut: Fraction,
    pub ls_threshold: LowDegreeThreshold,
}

impl Default for DenseParams {
    fn default() -> Self {
        Self {
            size_cut: Fraction::from_parts(4, 10),
            ls_threshold: LowDegreeThreshold::default(),
        }
    }
}

impl DenseParams {
    pub fn validate(&self) -> Result<()> {
        let f = self.size_cut;
        if f.numerator() == 0 || f.numerator() >= f.denominator() {
            return Err(Error::Argument(format!(
                "size cut must lie strictly between 0 and 1, got {f}"
            )));
        }
        Ok(())
    }

    /// Largest set size handled by the direct scan.
    pub fn phase_one_limit(&self, n: usize) -> usize {
        self.size_cut.floor_of(n)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DenseStats {
    pub phase_one_candidates: u64,
    pub phase_two_candidates: u64,
}

fn check_inputs(g: &Graph, gprime: &Graph, params: &DenseParams) -> Result<()> {
    params.validate()?;
    if !gprime.is_spanning_subgraph_of(g) {
        return Err(Error::Argument(
            "dense enumeration needs a spanning subgraph of the input graph".into(),
        ));
    }
    Ok(())
}

/// The subset-closed phase-2 family predicate, evaluated in `G'`.
pub fn phase_two_member<'a>(
    gprime: &'a Graph,
    params: &DenseParams,
) -> impl FnMut(&VertexSet) -> bool + Clone + Send + 'a {
    let threshold = params.ls_threshold;
    move |s: &VertexSet| threshold.is_met(low_degree_count(gprime, s), gprime.n())
}

/// Phase-1 candidates: all sets of size at most the cut, smallest first.
pub fn phase_one_candidates(n: usize, params: &DenseParams) -> SubsetsUpTo {
    SubsetsUpTo::new(n, (0..n).collect(), params.phase_one_limit(n))
}

/// Phase-2 candidates: members of the low-degree family above the size cut.
pub fn phase_two_candidates<'a>(
    gprime: &'a Graph,
    params: &DenseParams,
) -> impl Iterator<Item = VertexSet> + Send + 'a {
    let limit = params.phase_one_limit(gprime.n());
    enumerate_downward_closed(&gprime.vertices(), phase_two_member(gprime, params))
        .filter(move |s| s.len() > limit)
}

type SetPredicate<'a> = Box<dyn FnMut(&VertexSet) -> bool + Send + 'a>;

enum Phase<'a> {
    One(SubsetsUpTo),
    Two(std::iter::Filter<DownwardClosed<SetPredicate<'a>>, SetPredicate<'a>>),
    Done,
}

/// Streams the minimal CDS of `G`: all of phase 1's hits, then phase 2's.
pub struct DenseEnumeration<'a> {
    g: &'a Graph,
    gprime: &'a Graph,
    params: DenseParams,
    phase: Phase<'a>,
    stats: DenseStats,
}

impl DenseEnumeration<'_> {
    pub fn stats(&self) -> DenseStats {
        self.stats
    }
}

pub fn enumerate_dense<'a>(
    g: &'a Graph,
    gprime: &'a Graph,
    params: &DenseParams,
) -> Result<DenseEnumeration<'a>> {
    check_inputs(g, gprime, params)?;
    Ok(DenseEnumeration {
        g,
        gprime,
        params: *params,
        phase: Phase::One(phase_one_candidates(g.n(), params)),
        stats: DenseStats::default(),
    })
}

impl Iterator for DenseEnumeration<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            match &mut self.phase {
                Phase::One(candidates) => match candidates.next() {
                    Some(s) => {
                        self.stats.phase_one_candidates += 1;
                        if is_minimal_cds(self.g, &s) {
                            return Some(s);
                        }
                    }
                    None => {
                        let limit = self.params.phase_one_limit(self.g.n());
                        let member: SetPredicate =
                            Box::new(phase_two_member(self.gprime, &self.params));
                        let above: SetPredicate = Box::new(move |s: &VertexSet| s.len() > limit);
                        self.phase = Phase::Two(
                            enumerate_downward_closed(&self.gprime.vertices(), member)
                                .filter(above),
                        );
                    }
                },
                Phase::Two(candidates) => match candidates.next() {
                    Some(s) => {
                        self.stats.phase_two_candidates += 1;
                        if is_minimal_cds(self.g, &s) {
                            return Some(s);
                        }
                    }
                    None => self.phase = Phase::Done,
                },
                Phase::Done => return None,
            }
        }
    }
}
