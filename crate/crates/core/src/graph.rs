//! Immutable simple undirected graphs and the structural primitives used by the
//! enumerators: domination, induced connectivity, articulation points, and the
//! deletion/contraction operations of the sparse-case reduction.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency rows are bit-packed; `adj[v]` is the open neighborhood of `v`. The
/// representation is symmetric and loop-free by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(n); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("valid edges")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid edges")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid edges")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid edges")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid edges")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn set_of(&self, members: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_iter_in(self.n(), members)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `E(self) ⊆ E(other)` on the same vertex set.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n() == other.n() && self.adj.iter().zip(&other.adj).all(|(a, b)| a.is_subset(b))
    }

    /// Number of neighbors of `v` inside `s`.
    #[inline]
    pub fn s_degree(&self, s: &VertexSet, v: usize) -> usize {
        self.adj[v].intersection_len(s)
    }

    /// Whether `G[s]` is connected. The empty set is not connected; singletons are.
    pub fn is_connected_on(&self, s: &VertexSet) -> bool {
        let Some(start) = s.first() else {
            return false;
        };
        let target = s.len();
        let mut reached = VertexSet::singleton(self.n(), start);
        let mut frontier = reached.clone();
        let mut count = 1;
        while count < target && !frontier.is_empty() {
            let mut next = VertexSet::new(self.n());
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(s);
            next.difference_with(&reached);
            count += next.len();
            reached.union_with(&next);
            frontier = next;
        }
        count == target
    }

    /// Whether every vertex outside `s` has a neighbor in `s`.
    pub fn dominates(&self, s: &VertexSet) -> bool {
        (0..self.n()).all(|v| s.contains(v) || self.adj[v].intersects(s))
    }

    /// Number of connected components of `G[s]`.
    pub fn component_count_on(&self, s: &VertexSet) -> usize {
        let mut unseen = s.clone();
        let mut components = 0;
        while let Some(start) = unseen.first() {
            components += 1;
            let mut stack = vec![start];
            unseen.remove(start);
            while let Some(v) = stack.pop() {
                for w in self.adj[v].intersection(&unseen).iter() {
                    unseen.remove(w);
                    stack.push(w);
                }
            }
        }
        components
    }

    /// Articulation points of `G`: vertices whose removal increases the number of
    /// connected components.
    pub fn cut_vertices(&self) -> VertexSet {
        self.cut_vertices_within(&self.vertices())
    }

    /// Articulation points of the induced subgraph `G[s]`, in original ids.
    ///
    /// Iterative DFS with lowpoints, linear in the size of `G[s]`.
    pub fn cut_vertices_within(&self, s: &VertexSet) -> VertexSet {
        const UNSEEN: usize = usize::MAX;
        let n = self.n();
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut cut = VertexSet::new(n);
        let mut timer = 0;

        struct Frame {
            v: usize,
            parent: usize,
            nbrs: Vec<usize>,
            next: usize,
        }

        for root in s {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            let mut stack = vec![Frame {
                v: root,
                parent: UNSEEN,
                nbrs: self.adj[root].intersection(s).to_vec(),
                next: 0,
            }];
            while let Some(top) = stack.last_mut() {
                if top.next < top.nbrs.len() {
                    let w = top.nbrs[top.next];
                    top.next += 1;
                    let v = top.v;
                    if disc[w] == UNSEEN {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push(Frame {
                            v: w,
                            parent: v,
                            nbrs: self.adj[w].intersection(s).to_vec(),
                            next: 0,
                        });
                    } else if w != top.parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    let Frame { v, parent, .. } = stack.pop().expect("non-empty");
                    if parent == UNSEEN {
                        continue;
                    }
                    low[parent] = low[parent].min(low[v]);
                    if parent == root {
                        root_children += 1;
                    } else if low[v] >= disc[parent] {
                        cut.insert(parent);
                    }
                }
            }
            if root_children >= 2 {
                cut.insert(root);
            }
        }
        cut
    }

    /// Rebuilds the graph through a vertex map; edges between merged vertices vanish
    /// and parallel edges collapse.
    fn quotient(&self, forward: &[Option<usize>], new_n: usize) -> Graph {
        let mut g = Graph::empty(new_n);
        for (u, v) in self.edges() {
            if let (Some(a), Some(b)) = (forward[u], forward[v]) {
                if a != b {
                    g.adj[a].insert(b);
                    g.adj[b].insert(a);
                }
            }
        }
        g
    }

    /// Contracts edge `uv`. The merged vertex takes the smaller id, the larger id is
    /// removed and all later ids shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, ContractionMap)> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let forward: Vec<Option<usize>> = (0..self.n())
            .map(|x| match x.cmp(&gone) {
                std::cmp::Ordering::Less => Some(x),
                std::cmp::Ordering::Equal => Some(keep),
                std::cmp::Ordering::Greater => Some(x - 1),
            })
            .collect();
        let map = ContractionMap::from_forward(forward, self.n() - 1);
        Ok((self.quotient(&map.forward, map.new_n), map))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, ContractionMap)> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        let forward: Vec<Option<usize>> = (0..self.n())
            .map(|x| match x.cmp(&v) {
                std::cmp::Ordering::Less => Some(x),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(x - 1),
            })
            .collect();
        let map = ContractionMap::from_forward(forward, self.n() - 1);
        Ok((self.quotient(&map.forward, map.new_n), map))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    /// Removes every edge with both endpoints in `s`.
    pub fn without_edges_within(&self, s: &VertexSet) -> Graph {
        let mut g = self.clone();
        for v in s {
            g.adj[v].difference_with(s);
        }
        g
    }

    /// Edges of `G[s]` in lexicographic order.
    pub fn edges_within(&self, s: &VertexSet) -> Vec<(usize, usize)> {
        s.iter()
            .flat_map(|u| {
                self.adj[u]
                    .intersection(s)
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// Whether `s` induces no edge.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// The induced subgraph `G[s]`, densely renumbered in ascending order of `s`.
    pub fn induced(&self, s: &VertexSet) -> (Graph, ContractionMap) {
        let mut forward = vec![None; self.n()];
        for (i, v) in s.iter().enumerate() {
            forward[v] = Some(i);
        }
        let map = ContractionMap::from_forward(forward, s.len());
        (self.quotient(&map.forward, map.new_n), map)
    }
}

/// Where each vertex of a graph ended up after deletions and contractions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionMap {
    forward: Vec<Option<usize>>,
    survivors: VertexSet,
    new_n: usize,
}

impl ContractionMap {
    pub fn identity(n: usize) -> Self {
        Self::from_forward((0..n).map(Some).collect(), n)
    }

    fn from_forward(forward: Vec<Option<usize>>, new_n: usize) -> Self {
        let survivors = VertexSet::from_iter_in(
            forward.len(),
            forward
                .iter()
                .enumerate()
                .filter_map(|(v, img)| img.map(|_| v)),
        );
        Self {
            forward,
            survivors,
            new_n,
        }
    }

    /// Image of an old vertex, or `None` if it was deleted.
    #[inline]
    pub fn image(&self, old: usize) -> Option<usize> {
        self.forward[old]
    }

    /// Old vertices that still have an image.
    pub fn survivors(&self) -> &VertexSet {
        &self.survivors
    }

    pub fn old_n(&self) -> usize {
        self.forward.len()
    }

    pub fn new_n(&self) -> usize {
        self.new_n
    }

    /// `self` followed by `then`.
    pub fn compose(&self, then: &ContractionMap) -> ContractionMap {
        assert_eq!(self.new_n, then.old_n(), "maps do not chain");
        let forward = self
            .forward
            .iter()
            .map(|img| img.and_then(|w| then.forward[w]))
            .collect();
        Self::from_forward(forward, then.new_n)
    }

    /// Whether no two vertices of `set` share an image and none was deleted.
    pub fn is_injective_on(&self, set: &VertexSet) -> bool {
        let mut seen = VertexSet::new(self.new_n);
        set.iter()
            .all(|v| matches!(self.forward[v], Some(w) if seen.insert(w)))
    }

    pub fn map_set(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_iter_in(self.new_n, set.iter().filter_map(|v| self.forward[v]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &Graph, m: &[usize]) -> VertexSet {
        g.set_of(m.iter().copied())
    }

    #[test]
    fn s_degree_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(c4.s_degree(&set(&c4, &[0, 1]), 2), 1);
        assert_eq!(c4.s_degree(&c4.empty_set(), 3), 0);
        let k4 = Graph::complete(4);
        assert_eq!(k4.s_degree(&set(&k4, &[1, 2, 3]), 0), 3);
    }

    #[test]
    fn connectivity_examples() {
        let p4 = Graph::path(4);
        assert!(p4.is_connected_on(&set(&p4, &[1, 2])));
        assert!(!p4.is_connected_on(&set(&p4, &[0, 3])));
        for v in 0..4 {
            assert!(p4.is_connected_on(&set(&p4, &[v])));
        }
        assert!(!p4.is_connected_on(&p4.empty_set()));
    }

    #[test]
    fn domination_examples() {
        let p4 = Graph::path(4);
        assert!(p4.dominates(&set(&p4, &[1, 2])));
        assert!(!p4.dominates(&set(&p4, &[1])));
        assert!(p4.dominates(&p4.vertices()));
    }

    #[test]
    fn cut_vertex_examples() {
        assert_eq!(Graph::path(4).cut_vertices().to_vec(), vec![1, 2]);
        assert!(Graph::complete(4).cut_vertices().is_empty());
        assert_eq!(Graph::star(3).cut_vertices().to_vec(), vec![0]);
        // two triangles sharing vertex 2, plus an isolated vertex
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(g.cut_vertices().to_vec(), vec![2]);
    }

    #[test]
    fn contraction_examples() {
        let (g, map) = Graph::path(3).contract_edge(0, 1).unwrap();
        assert_eq!(g, Graph::complete(2));
        assert_eq!(
            (0..3).map(|v| map.image(v)).collect::<Vec<_>>(),
            vec![Some(0), Some(0), Some(1)]
        );

        let (g, _) = Graph::complete(3).contract_edge(1, 2).unwrap();
        assert_eq!(g, Graph::complete(2));

        let (g, _) = Graph::cycle(4).contract_edge(0, 1).unwrap();
        assert_eq!(g, Graph::complete(3));

        assert!(matches!(
            Graph::path(3).contract_edge(0, 2),
            Err(Error::NotAnEdge(0, 2))
        ));
    }

    #[test]
    fn deletion_examples() {
        let (g, map) = Graph::path(3).delete_vertex(1).unwrap();
        assert_eq!(g, Graph::empty(2));
        assert_eq!(map.image(1), None);
        assert_eq!(map.image(2), Some(1));

        let g = Graph::complete(3).delete_edge(0, 2).unwrap();
        assert_eq!(g, Graph::path(3));

        let (g, _) = Graph::empty(1).delete_vertex(0).unwrap();
        assert_eq!(g.n(), 0);

        assert!(Graph::path(3).delete_edge(0, 2).is_err());
        assert!(Graph::path(3).delete_vertex(3).is_err());
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(
            Graph::from_edges(2, [(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap().edge_count(),
            1
        );
    }

    #[test]
    fn map_composition() {
        let g = Graph::cycle(5);
        let (g1, m1) = g.delete_vertex(0).unwrap();
        let (_, m2) = g1.contract_edge(0, 1).unwrap();
        let m = m1.compose(&m2);
        assert_eq!(m.image(0), None);
        assert_eq!(m.image(1), Some(0));
        assert_eq!(m.image(2), Some(0));
        assert_eq!(m.image(3), Some(1));
        assert_eq!(m.image(4), Some(2));
        assert!(m.is_injective_on(&g.set_of([2, 3, 4])));
        assert!(!m.is_injective_on(&g.set_of([1, 2])));
    }
}
