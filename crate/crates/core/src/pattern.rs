//! Induced-subgraph pattern search.
//!
//! [`find_induced`] looks for an injection of a pattern graph into a host
//! graph that preserves both edges and non-edges (an induced embedding).
//! Pattern vertices are assigned in natural index order and host candidates
//! are tried in ascending order, so the first embedding found is the
//! lexicographically least image sequence — witnesses are reproducible.
//! Backtracking is pruned by degree (a host image needs at least the pattern
//! degree) and by exact adjacency-bitmask agreement with all previously
//! mapped pattern vertices, which also handles disconnected patterns without
//! any special casing.

use crate::graph::Graph;

/// An injection of pattern vertices into host vertices; `map[i]` is the host
/// image of pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    /// The image sequence, indexed by pattern vertex.
    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// Checks that this embedding is a valid induced embedding of `pattern`
    /// into `host`: injective, edge-preserving, and non-edge-preserving.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        let mut seen = 0u64;
        for &h in &self.map {
            if h >= host.n() || seen >> h & 1 == 1 {
                return false;
            }
            seen |= 1 << h;
        }
        for i in 0..pattern.n() {
            for j in i + 1..pattern.n() {
                if pattern.has_edge(i, j) != host.has_edge(self.map[i], self.map[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Finds the lexicographically least induced embedding of `pattern` in
/// `host`, or `None` if there is none. The empty pattern embeds trivially
/// with an empty map.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.n() > host.n() {
        return None;
    }
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = 0u64;
    if assign(host, pattern, 0, &mut map, &mut used) {
        let embedding = Embedding { map };
        debug_assert!(embedding.verify(host, pattern));
        Some(embedding)
    } else {
        None
    }
}

fn assign(host: &Graph, pattern: &Graph, i: usize, map: &mut [usize], used: &mut u64) -> bool {
    if i == pattern.n() {
        return true;
    }
    let wanted = pattern.neighbors(i);
    for candidate in host.vertices() {
        if *used >> candidate & 1 == 1 {
            continue;
        }
        if host.degree(candidate) < pattern.degree(i) {
            continue;
        }
        // Induced match against every already-mapped pattern vertex: the
        // candidate must be adjacent to exactly the images of i's pattern
        // neighbors among them.
        let ok = (0..i).all(|j| (wanted >> j & 1 == 1) == host.has_edge(candidate, map[j]));
        if !ok {
            continue;
        }
        map[i] = candidate;
        *used |= 1 << candidate;
        if assign(host, pattern, i + 1, map, used) {
            return true;
        }
        *used &= !(1u64 << candidate);
        map[i] = usize::MAX;
    }
    false
}

/// True iff none of `patterns` occurs in `host` as an induced subgraph.
/// An empty pattern list is vacuously free.
pub fn is_free(host: &Graph, patterns: &[Graph]) -> bool {
    patterns.iter().all(|p| find_induced(host, p).is_none())
}

/// The index of the first pattern found in `host`, with its embedding.
pub fn first_occurrence(host: &Graph, patterns: &[Graph]) -> Option<(usize, Embedding)> {
    patterns
        .iter()
        .enumerate()
        .find_map(|(idx, p)| find_induced(host, p).map(|e| (idx, e)))
}
