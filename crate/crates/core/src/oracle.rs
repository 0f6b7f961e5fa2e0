//! Brute-force reference: tests every subset with plain `u64` masks.
//!
//! Shares no code with the structured path beyond `Graph` and `VertexSet`, so it can
//! serve as ground truth for it.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest graph the oracle accepts.
pub const ORACLE_MAX_N: usize = 30;

const CHUNK_BITS: usize = 14;

#[derive(Clone, Debug)]
struct Masks {
    n: usize,
    closed: Vec<u64>,
    open: Vec<u64>,
}

impl Masks {
    fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n > ORACLE_MAX_N {
            return Err(Error::Capacity(format!(
                "oracle is limited to {ORACLE_MAX_N} vertices, got {n}"
            )));
        }
        let open: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u))
            .collect();
        let closed = open.iter().enumerate().map(|(v, m)| m | 1 << v).collect();
        Ok(Self { n, closed, open })
    }

    fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn dominates(&self, s: u64) -> bool {
        let mut covered = 0u64;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            covered |= self.closed[v];
        }
        covered == self.all()
    }

    fn connected(&self, s: u64) -> bool {
        if s == 0 {
            return false;
        }
        let mut seen = s & s.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.open[v] & s & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == s
    }

    fn cds(&self, s: u64) -> bool {
        self.dominates(s) && self.connected(s)
    }

    /// `base ∪ s` is a CDS and dropping any single vertex of `s` breaks that.
    fn minimal_over(&self, base: u64, s: u64) -> bool {
        if !self.cds(base | s) {
            return false;
        }
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            if self.cds((base | s) & !bit) {
                return false;
            }
        }
        true
    }

    fn to_set(&self, s: u64) -> VertexSet {
        VertexSet::from_mask(self.n, s)
    }

    fn scan(&self, lo: u64, hi: u64, out: &mut Vec<u64>) {
        for s in lo..hi {
            if self.minimal_over(0, s) {
                out.push(s);
            }
        }
    }
}

fn finish(masks: &Masks, found: Vec<u64>) -> Vec<VertexSet> {
    let mut sets: Vec<VertexSet> = found.into_iter().map(|s| masks.to_set(s)).collect();
    sets.sort();
    sets
}

/// Every minimal CDS of `g`, sorted by size and then lexicographically.
pub fn oracle_enumerate(g: &Graph) -> Result<Vec<VertexSet>> {
    let masks = Masks::new(g)?;
    let mut found = Vec::new();
    masks.scan(1, masks.all() + 1, &mut found);
    Ok(finish(&masks, found))
}

/// Same as [`oracle_enumerate`], splitting the mask range over the current rayon pool.
pub fn oracle_enumerate_par(g: &Graph) -> Result<Vec<VertexSet>> {
    let masks = Masks::new(g)?;
    let end = masks.all() + 1;
    let chunk = 1u64 << CHUNK_BITS.min(masks.n);
    let chunks = end.div_ceil(chunk);
    let found: Vec<u64> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let mut out = Vec::new();
            masks.scan((c * chunk).max(1), ((c + 1) * chunk).min(end), &mut out);
            out
        })
        .collect();
    Ok(finish(&masks, found))
}

/// Number of minimal CDS, without materializing them.
pub fn oracle_count(g: &Graph) -> Result<u64> {
    let masks = Masks::new(g)?;
    Ok((1..=masks.all())
        .filter(|&s| masks.minimal_over(0, s))
        .count() as u64)
}

/// Every minimal `(inside, outside)`-extension: sets `S` of the remaining vertices
/// with `inside ∪ S` a CDS and no `inside ∪ (S ∖ {v})` a CDS. Sorted.
pub fn oracle_extensions(
    g: &Graph,
    inside: &VertexSet,
    outside: &VertexSet,
) -> Result<Vec<VertexSet>> {
    let masks = Masks::new(g)?;
    if inside.intersects(outside) {
        return Err(Error::Argument("I and O must be disjoint".into()));
    }
    let base = inside.as_mask().expect("n <= 30");
    let free = masks.all() & !base & !outside.as_mask().expect("n <= 30");
    let mut found = Vec::new();
    // submasks of `free`, including 0 and `free`
    let mut s = free;
    loop {
        if masks.minimal_over(base, s) {
            found.push(s);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & free;
    }
    Ok(finish(&masks, found))
}
