//! Polynomial-delay enumeration of subset-closed and superset-closed families
//! given only a membership oracle.
//!
//! Downward-closed families are explored depth-first: keep a current member `X`,
//! and for each later element `e` with `X ∪ {e}` in the family, emit it and descend.
//! Every member is reached along exactly one path (its elements in processing
//! order), and between two emissions at most `2k + 1` membership queries are made
//! for a universe of size `k`. Upward-closed families reuse the same walk on
//! complements.

use crate::vertex_set::VertexSet;

/// A membership oracle. Implemented for every `FnMut(&VertexSet) -> bool`.
pub trait Membership {
    fn contains(&mut self, set: &VertexSet) -> bool;
}

impl<F: FnMut(&VertexSet) -> bool> Membership for F {
    #[inline]
    fn contains(&mut self, set: &VertexSet) -> bool {
        self(set)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    Downward,
    Upward,
}

/// A family over `universe` described by a membership predicate and the direction
/// in which it is closed. Closure is asserted by the caller and not checked.
pub struct FamilySpec<M> {
    pub universe: VertexSet,
    pub member: M,
    pub closure: Closure,
    order: Option<Vec<usize>>,
}

impl<M: Membership> FamilySpec<M> {
    pub fn downward(universe: VertexSet, member: M) -> Self {
        Self {
            universe,
            member,
            closure: Closure::Downward,
            order: None,
        }
    }

    pub fn upward(universe: VertexSet, member: M) -> Self {
        Self {
            universe,
            member,
            closure: Closure::Upward,
            order: None,
        }
    }

    /// Processes universe elements in the given order instead of ascending id.
    /// `order` must be a permutation of the universe.
    pub fn with_order(mut self, order: Vec<usize>) -> Self {
        assert_eq!(
            order.len(),
            self.universe.len(),
            "order is not a permutation"
        );
        assert_eq!(
            VertexSet::from_iter_in(self.universe.universe(), order.iter().copied()),
            self.universe,
            "order is not a permutation of the universe"
        );
        self.order = Some(order);
        self
    }
}

impl<M: Membership> IntoIterator for FamilySpec<M> {
    type Item = VertexSet;
    type IntoIter = FamilyIter<M>;

    fn into_iter(self) -> FamilyIter<M> {
        let order = self.order.unwrap_or_else(|| self.universe.to_vec());
        match self.closure {
            Closure::Downward => FamilyIter::Down(DownwardClosed::with_order(
                self.universe.universe(),
                order,
                self.member,
            )),
            Closure::Upward => {
                FamilyIter::Up(UpwardClosed::with_order(self.universe, order, self.member))
            }
        }
    }
}

/// Enumerates a downward-closed family over `universe`, ascending element order.
pub fn enumerate_downward_closed<M: Membership>(
    universe: &VertexSet,
    member: M,
) -> DownwardClosed<M> {
    DownwardClosed::with_order(universe.universe(), universe.to_vec(), member)
}

/// Enumerates an upward-closed family over `universe` through complements.
pub fn enumerate_upward_closed<M: Membership>(universe: &VertexSet, member: M) -> UpwardClosed<M> {
    UpwardClosed::with_order(universe.clone(), universe.to_vec(), member)
}

pub enum FamilyIter<M> {
    Down(DownwardClosed<M>),
    Up(UpwardClosed<M>),
}

impl<M: Membership> Iterator for FamilyIter<M> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        match self {
            Self::Down(it) => it.next(),
            Self::Up(it) => it.next(),
        }
    }
}

struct Frame {
    set: VertexSet,
    /// Position in `order` of the next element to try adding.
    next: usize,
}

/// Pull-based depth-first walk over a downward-closed family.
pub struct DownwardClosed<M> {
    n: usize,
    order: Vec<usize>,
    member: M,
    stack: Vec<Frame>,
    started: bool,
}

impl<M: Membership> DownwardClosed<M> {
    fn with_order(n: usize, order: Vec<usize>, member: M) -> Self {
        Self {
            n,
            order,
            member,
            stack: Vec::new(),
            started: false,
        }
    }
}

impl<M: Membership> Iterator for DownwardClosed<M> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if !self.started {
            self.started = true;
            let empty = VertexSet::new(self.n);
            // Closed under subsets: no empty set means no members at all.
            if !self.member.contains(&empty) {
                return None;
            }
            self.stack.push(Frame {
                set: empty.clone(),
                next: 0,
            });
            return Some(empty);
        }
        while let Some(top) = self.stack.last_mut() {
            if top.next == self.order.len() {
                self.stack.pop();
                continue;
            }
            let pos = top.next;
            top.next += 1;
            let candidate = top.set.with(self.order[pos]);
            if self.member.contains(&candidate) {
                self.stack.push(Frame {
                    set: candidate.clone(),
                    next: pos + 1,
                });
                return Some(candidate);
            }
        }
        None
    }
}

/// Membership of the complement within a fixed universe.
pub struct Complemented<M> {
    universe: VertexSet,
    inner: M,
}

impl<M: Membership> Membership for Complemented<M> {
    #[inline]
    fn contains(&mut self, set: &VertexSet) -> bool {
        self.inner.contains(&self.universe.difference(set))
    }
}

/// Upward-closed enumeration: walk the (downward-closed) family of complements and
/// emit the complement of each discovered set.
pub struct UpwardClosed<M> {
    universe: VertexSet,
    inner: DownwardClosed<Complemented<M>>,
}

impl<M: Membership> UpwardClosed<M> {
    fn with_order(universe: VertexSet, order: Vec<usize>, member: M) -> Self {
        let inner = DownwardClosed::with_order(
            universe.universe(),
            order,
            Complemented {
                universe: universe.clone(),
                inner: member,
            },
        );
        Self { universe, inner }
    }
}

impl<M: Membership> Iterator for UpwardClosed<M> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        self.inner.next().map(|x| self.universe.difference(&x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use std::collections::BTreeSet;

    fn collect<I: Iterator<Item = VertexSet>>(it: I) -> Vec<Vec<usize>> {
        it.map(|s| s.to_vec()).collect()
    }

    #[test]
    fn at_most_one_element() {
        let u = VertexSet::full(3);
        let got = collect(enumerate_downward_closed(&u, |x: &VertexSet| x.len() <= 1));
        assert_eq!(got, vec![vec![], vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn everything() {
        let u = VertexSet::full(3);
        assert_eq!(
            enumerate_downward_closed(&u, |_: &VertexSet| true).count(),
            8
        );
        assert_eq!(enumerate_upward_closed(&u, |_: &VertexSet| true).count(), 8);
    }

    #[test]
    fn nothing() {
        let u = VertexSet::full(4);
        assert_eq!(
            enumerate_downward_closed(&u, |_: &VertexSet| false).count(),
            0
        );
        assert_eq!(
            enumerate_upward_closed(&u, |_: &VertexSet| false).count(),
            0
        );
    }

    #[test]
    fn independent_sets_of_c4() {
        let c4 = Graph::cycle(4);
        let independent = |x: &VertexSet| x.iter().all(|v| !c4.neighbors(v).intersects(x));
        let got: BTreeSet<Vec<usize>> =
            collect(enumerate_downward_closed(&c4.vertices(), independent))
                .into_iter()
                .collect();
        let want: BTreeSet<Vec<usize>> = [
            vec![],
            vec![0],
            vec![1],
            vec![2],
            vec![3],
            vec![0, 2],
            vec![1, 3],
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn contains_zero() {
        let u = VertexSet::full(2);
        let got = collect(enumerate_upward_closed(&u, |x: &VertexSet| x.contains(0)));
        let got: BTreeSet<_> = got.into_iter().collect();
        assert_eq!(got, [vec![0], vec![0, 1]].into_iter().collect());
    }

    #[test]
    fn dominating_sets_of_p4() {
        // frozen from a brute-force scan of the 16 subsets
        let p4 = Graph::path(4);
        let got: BTreeSet<Vec<usize>> =
            collect(enumerate_upward_closed(&p4.vertices(), |x: &VertexSet| {
                p4.dominates(x)
            }))
            .into_iter()
            .collect();
        let want: BTreeSet<Vec<usize>> = [
            vec![0, 2],
            vec![0, 3],
            vec![1, 2],
            vec![1, 3],
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
            vec![0, 1, 2, 3],
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn sparse_universe_and_custom_order() {
        let u = VertexSet::from_iter_in(10, [1, 4, 7, 9]);
        let member = |x: &VertexSet| x.len() <= 2;
        let a: BTreeSet<_> = FamilySpec::downward(u.clone(), member)
            .into_iter()
            .collect();
        let b: BTreeSet<_> = FamilySpec::downward(u.clone(), member)
            .with_order(vec![9, 1, 7, 4])
            .into_iter()
            .collect();
        assert_eq!(a.len(), 1 + 4 + 6);
        assert_eq!(a, b);
        assert!(a.iter().all(|s| s.is_subset(&u)));
    }
}
