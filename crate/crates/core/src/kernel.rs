//! Problem-specific predicates: connected domination, minimality, minimal
//! `(I, O)`-extensions, and the low S-degree set `L(S)`.

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Threshold on `|L(S)|` as a fraction of `n`; met when `den * |L(S)| >= num * n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowDegreeThreshold(pub Fraction);

impl Default for LowDegreeThreshold {
    fn default() -> Self {
        Self(Fraction::from_parts(1, 20))
    }
}

impl LowDegreeThreshold {
    #[inline]
    pub fn is_met(&self, low_count: usize, n: usize) -> bool {
        self.0.le_count(low_count, n)
    }
}

#[inline]
pub fn is_cds(g: &Graph, s: &VertexSet) -> bool {
    g.dominates(s) && g.is_connected_on(s)
}

/// A CDS none of whose single-vertex deletions is a CDS. Any CDS with a proper CDS
/// subset also has a removable single vertex, so this is full minimality.
pub fn is_minimal_cds(g: &Graph, s: &VertexSet) -> bool {
    if !is_cds(g, s) {
        return false;
    }
    let mut probe = s.clone();
    for v in s {
        probe.remove(v);
        let still = is_cds(g, &probe);
        probe.insert(v);
        if still {
            return false;
        }
    }
    true
}

/// Whether `s` is a minimal `(inside, outside)`-extension: `inside ∪ s` is a CDS and
/// no `inside ∪ (s ∖ {v})` is.
pub fn is_minimal_extension(
    g: &Graph,
    inside: &VertexSet,
    outside: &VertexSet,
    s: &VertexSet,
) -> Result<bool> {
    if inside.intersects(outside) || inside.intersects(s) || outside.intersects(s) {
        return Err(Error::Argument(
            "extension sets I, O and S must be pairwise disjoint".into(),
        ));
    }
    Ok(is_minimal_extension_unchecked(g, inside, s))
}

pub(crate) fn is_minimal_extension_unchecked(g: &Graph, inside: &VertexSet, s: &VertexSet) -> bool {
    let mut probe = inside.union(s);
    if !is_cds(g, &probe) {
        return false;
    }
    for v in s {
        probe.remove(v);
        let still = is_cds(g, &probe);
        probe.insert(v);
        if still {
            return false;
        }
    }
    true
}

/// `L(S) = { v : |N(v) ∩ S| <= 2 }`, members of `S` included.
pub fn low_degree_set(g: &Graph, s: &VertexSet) -> VertexSet {
    VertexSet::from_iter_in(g.n(), (0..g.n()).filter(|&v| g.s_degree(s, v) <= 2))
}

/// `|L(S)|` without materializing the set.
#[inline]
pub fn low_degree_count(g: &Graph, s: &VertexSet) -> usize {
    (0..g.n()).filter(|&v| g.s_degree(s, v) <= 2).count()
}

/// Cut vertices of `G[S]` in original ids.
pub fn cut_set_of_induced(g: &Graph, s: &VertexSet) -> VertexSet {
    g.cut_vertices_within(s)
}
