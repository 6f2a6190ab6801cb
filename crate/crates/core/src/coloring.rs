//! Vertex colorings and vertex orderings.
//!
//! Colors are positive integers; class `c` of a coloring is the set of
//! vertices assigned `c`. Solver outputs always use the compact range
//! `1..=k`, but the validators accept any positive assignment (a coloring
//! that skips a color is simply never a valid greedy or color-dominating
//! coloring, and the checkers report that honestly rather than erroring).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total assignment of positive colors to the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    /// Wraps a color list (index = vertex). Colors must be >= 1.
    pub fn new(colors: Vec<usize>) -> Result<Coloring> {
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 {
                return Err(Error::InvalidColor { v, color: c });
            }
        }
        Ok(Coloring { colors })
    }

    /// Number of vertices covered.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    /// True iff no vertices are covered.
    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color of vertex `v`.
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// The underlying color list.
    pub fn as_slice(&self) -> &[usize] {
        &self.colors
    }

    /// Largest color present (0 for the empty coloring). Equals the number of
    /// classes exactly when the coloring is compact.
    pub fn k(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// True iff every color in `1..=k` is used by at least one vertex.
    pub fn is_compact(&self) -> bool {
        let k = self.k();
        let mut seen = vec![false; k + 1];
        for &c in &self.colors {
            seen[c] = true;
        }
        (1..=k).all(|c| seen[c])
    }

    /// Order-preserving relabel of the used colors onto `1..=k`.
    pub fn compacted(&self) -> Coloring {
        let mut used: Vec<usize> = self.colors.clone();
        used.sort_unstable();
        used.dedup();
        let rank = |c: usize| used.binary_search(&c).expect("color present") + 1;
        Coloring {
            colors: self.colors.iter().map(|&c| rank(c)).collect(),
        }
    }

    /// Bitmask of the vertices colored `c` (graphs are capped at 64 vertices).
    pub fn class_mask(&self, c: usize) -> u64 {
        let mut mask = 0u64;
        for (v, &cv) in self.colors.iter().enumerate() {
            if cv == c {
                mask |= 1u64 << v;
            }
        }
        mask
    }

    /// Class masks for colors `1..=k`, indexed by `color - 1`.
    pub fn class_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.k()];
        for (v, &c) in self.colors.iter().enumerate() {
            masks[c - 1] |= 1u64 << v;
        }
        masks
    }

    /// Checks that this coloring covers exactly the vertices of `g`.
    pub fn check_fits(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::LengthMismatch {
                expected: g.n(),
                got: self.colors.len(),
            });
        }
        Ok(())
    }
}

/// A permutation of the vertices `0..n`, as visited by the greedy colorer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<usize>,
}

impl VertexOrdering {
    /// Validates that `order` is a permutation of `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Result<VertexOrdering> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation { n });
            }
            seen[v] = true;
        }
        Ok(VertexOrdering { order })
    }

    /// The identity ordering `0, 1, …, n-1`.
    pub fn identity(n: usize) -> VertexOrdering {
        VertexOrdering {
            order: (0..n).collect(),
        }
    }

    /// Number of vertices ordered.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    /// True iff the ordering is empty.
    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The visit sequence.
    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coloring_rejects_zero_colors() {
        assert_eq!(
            Coloring::new(vec![1, 0]).unwrap_err(),
            Error::InvalidColor { v: 1, color: 0 }
        );
    }

    #[test]
    fn compactness_detection_and_relabel() {
        let c = Coloring::new(vec![1, 3, 1]).unwrap();
        assert_eq!(c.k(), 3);
        assert!(!c.is_compact());
        let compacted = c.compacted();
        assert_eq!(compacted.as_slice(), &[1, 2, 1]);
        assert!(compacted.is_compact());
        // Already-compact colorings are unchanged.
        let c2 = Coloring::new(vec![2, 1, 2]).unwrap();
        assert_eq!(c2.compacted(), c2);
    }

    #[test]
    fn class_masks_partition_vertices() {
        let c = Coloring::new(vec![1, 2, 1, 3]).unwrap();
        assert_eq!(c.class_mask(1), 0b0101);
        assert_eq!(c.class_mask(2), 0b0010);
        let masks = c.class_masks();
        assert_eq!(masks, vec![0b0101, 0b0010, 0b1000]);
        assert_eq!(masks.iter().copied().fold(0, |a, b| a | b), 0b1111);
    }

    #[test]
    fn ordering_validation() {
        assert!(VertexOrdering::new(vec![2, 0, 1]).is_ok());
        assert_eq!(
            VertexOrdering::new(vec![0, 0, 1]).unwrap_err(),
            Error::NotAPermutation { n: 3 }
        );
        assert_eq!(
            VertexOrdering::new(vec![0, 3]).unwrap_err(),
            Error::NotAPermutation { n: 2 }
        );
        assert_eq!(VertexOrdering::identity(4).as_slice(), &[0, 1, 2, 3]);
    }
}
