//! Seeded random graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sparse::{maximal_independent_in, ExtensionInstance};
use crate::vertex_set::VertexSet;

pub type GraphRng = Xoshiro256PlusPlus;

pub fn rng_from_seed(seed: u64) -> GraphRng {
    GraphRng::seed_from_u64(seed)
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Argument(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    Ok(())
}

/// `G(n, p)`: each pair independently with probability `p`, pairs in lexicographic order.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    check_p(p)?;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Draws `G(n, p)` until it is connected, giving up after `max_tries` draws.
pub fn connected_gnp<R: Rng>(n: usize, p: f64, rng: &mut R, max_tries: usize) -> Result<Graph> {
    for _ in 0..max_tries {
        let g = gnp(n, p, rng)?;
        if g.is_connected_on(&g.vertices()) {
            return Ok(g);
        }
    }
    Err(Error::Argument(format!(
        "no connected G({n}, {p}) within {max_tries} draws"
    )))
}

/// Random labeled tree: each vertex `v > 0` attaches to a uniform earlier vertex,
/// then labels are shuffled.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let edges = (1..n).map(|v| (labels[v], labels[rng.gen_range(0..v)]));
    Graph::from_edges(n, edges).expect("tree edges are valid")
}

/// Connected graph: a random tree plus each remaining pair with probability `p`.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    check_p(p)?;
    let tree = random_tree(n, rng);
    let mut edges = tree.edges();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// An extension instance over a good partition, with its heavy and rest sets.
#[derive(Clone, Debug)]
pub struct GoodInstance {
    pub instance: ExtensionInstance,
    pub heavy: VertexSet,
    pub rest: VertexSet,
}

/// Random instance on `n` vertices: `G(n, p)`, a maximal independent free side `L`
/// grown from a shuffled order, at most `|L| / 10` heavy vertices, and each decided
/// vertex included with probability one half.
pub fn random_good_instance<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<GoodInstance> {
    let g = gnp(n, p, rng)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut free = g.empty_set();
    let mut blocked = g.empty_set();
    for &v in &order {
        if !blocked.contains(v) && rng.gen_bool(0.7) {
            free.insert(v);
            blocked.insert(v);
            blocked.union_with(g.neighbors(v));
        }
    }
    if free.is_empty() {
        free = maximal_independent_in(&g, &g.vertices());
    }
    let decided: Vec<usize> = g.vertices().difference(&free).to_vec();
    let heavy_count = rng.gen_range(0..=free.len() / 10).min(decided.len());
    let heavy = VertexSet::from_iter_in(n, decided.choose_multiple(rng, heavy_count).copied());
    let rest = VertexSet::from_iter_in(n, decided.iter().copied()).difference(&heavy);
    let included =
        VertexSet::from_iter_in(n, decided.iter().copied().filter(|_| rng.gen_bool(0.5)));
    let excluded = VertexSet::from_iter_in(n, decided.iter().copied()).difference(&included);
    let instance = ExtensionInstance::new(g, free, included, excluded)?;
    Ok(GoodInstance {
        instance,
        heavy,
        rest,
    })
}
