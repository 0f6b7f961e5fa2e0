//! Fixed-size and size-bounded subset iterators in colexicographic order.

use crate::vertex_set::VertexSet;

/// All `k`-subsets of `elements`, colexicographic in element positions.
#[derive(Clone, Debug)]
pub struct Combinations {
    universe: usize,
    elements: Vec<usize>,
    positions: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(universe: usize, elements: Vec<usize>, k: usize) -> Self {
        let done = k > elements.len();
        Self {
            universe,
            elements,
            positions: (0..k).collect(),
            done,
        }
    }

    fn advance(&mut self) {
        let k = self.positions.len();
        let m = self.elements.len();
        // Colex successor: bump the lowest position that has room, reset those below.
        for i in 0..k {
            let limit = if i + 1 < k { self.positions[i + 1] } else { m };
            if self.positions[i] + 1 < limit {
                self.positions[i] += 1;
                for (j, p) in self.positions[..i].iter_mut().enumerate() {
                    *p = j;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let set = VertexSet::from_iter_in(
            self.universe,
            self.positions.iter().map(|&p| self.elements[p]),
        );
        self.advance();
        Some(set)
    }
}

/// All subsets of `elements` with at most `max_size` members, by increasing size.
#[derive(Clone, Debug)]
pub struct SubsetsUpTo {
    universe: usize,
    elements: Vec<usize>,
    max_size: usize,
    size: usize,
    current: Combinations,
}

impl SubsetsUpTo {
    pub fn new(universe: usize, elements: Vec<usize>, max_size: usize) -> Self {
        let max_size = max_size.min(elements.len());
        Self {
            universe,
            current: Combinations::new(universe, elements.clone(), 0),
            elements,
            max_size,
            size: 0,
        }
    }

    pub fn of_set(set: &VertexSet, max_size: usize) -> Self {
        Self::new(set.universe(), set.to_vec(), max_size)
    }
}

impl Iterator for SubsetsUpTo {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            if let Some(s) = self.current.next() {
                return Some(s);
            }
            if self.size >= self.max_size {
                return None;
            }
            self.size += 1;
            self.current = Combinations::new(self.universe, self.elements.clone(), self.size);
        }
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_order() {
        let got: Vec<Vec<usize>> = Combinations::new(4, vec![0, 1, 2, 3], 2)
            .map(|s| s.to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn counts_match_binomials() {
        for m in 0..9 {
            for k in 0..=m + 1 {
                let c = Combinations::new(m, (0..m).collect(), k).count() as u128;
                assert_eq!(c, binomial(m, k), "C({m},{k})");
            }
        }
        let total: u128 = (0..=3).map(|k| binomial(7, k)).sum();
        assert_eq!(
            SubsetsUpTo::new(7, (0..7).collect(), 3).count() as u128,
            total
        );
        assert_eq!(SubsetsUpTo::new(0, vec![], 3).count(), 1);
    }

    #[test]
    fn maps_through_elements() {
        let got: Vec<Vec<usize>> = SubsetsUpTo::new(10, vec![2, 5, 9], 1)
            .map(|s| s.to_vec())
            .collect();
        assert_eq!(got, vec![vec![], vec![2], vec![5], vec![9]]);
    }
}
