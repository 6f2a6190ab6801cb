//! Monotonicity of the b-chromatic number under induced subgraphs.
//!
//! Call a graph b-monotone when every induced subgraph H satisfies
//! b(H) <= b(G). Unlike the chromatic number, b is not monotone in general:
//! deleting vertices can unlock extra dominating classes. The exhaustive
//! check enumerates vertex subsets from largest to smallest, so the witness
//! it reports is a largest violating subset, ties broken by lexicographically
//! least vertex list. A sampling variant trades completeness for speed on
//! graphs where the 2^n scan is too slow.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bcolor::b_number;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A violating induced subgraph: its vertices (ascending) and both b values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityWitness {
    /// Vertices of the violating subset, ascending.
    pub vertices: Vec<usize>,
    /// b-chromatic number of the induced subgraph.
    pub b_subgraph: usize,
    /// b-chromatic number of the whole graph (for comparison).
    pub b_graph: usize,
}

/// Outcome of a monotonicity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonotonicityVerdict {
    /// Every induced subgraph satisfies b(H) <= b(G) (exhaustive scan).
    Monotone,
    /// No violation among the sampled subsets; not a proof of monotonicity.
    NoViolationFound {
        /// Number of subsets sampled.
        trials: usize,
    },
    /// Some induced subgraph has a strictly larger b-chromatic number.
    Violated(MonotonicityWitness),
}

impl MonotonicityVerdict {
    /// True iff a violating subset was found.
    pub fn is_violated(&self) -> bool {
        matches!(self, MonotonicityVerdict::Violated(_))
    }

    /// The witness, when one was found.
    pub fn witness(&self) -> Option<&MonotonicityWitness> {
        match self {
            MonotonicityVerdict::Violated(w) => Some(w),
            _ => None,
        }
    }
}

/// Exhaustively decides b-monotonicity by computing b on every induced
/// subgraph (2^n of them, largest first). `cap` bounds the vertex count;
/// beyond it the scan is refused rather than left to run for hours.
pub fn is_b_monotone(g: &Graph, cap: usize) -> Result<MonotonicityVerdict> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.n() > cap {
        return Err(Error::OverCap {
            n: g.n(),
            cap,
            what: "exhaustive monotonicity scan",
            hint: "raise the cap or switch to sampling",
        });
    }
    let n = g.n();
    let (b_graph, _) = b_number(g)?;
    // Largest subsets first; within a size, combinations emit vertex lists in
    // lexicographic order, so the first violation found is the reported
    // witness. Single vertices have b = 1 <= b(G) and never violate.
    for size in (2..n).rev() {
        for subset in (0..n).combinations(size) {
            if let Some(b_sub) = violation(g, &subset, b_graph)? {
                return Ok(MonotonicityVerdict::Violated(MonotonicityWitness {
                    vertices: subset,
                    b_subgraph: b_sub,
                    b_graph,
                }));
            }
        }
    }
    Ok(MonotonicityVerdict::Monotone)
}

/// Samples `trials` uniform proper subsets (empty and full skipped) looking
/// for b(H) > b(G). Finding one proves non-monotonicity; finding none proves
/// nothing. Among sampled violations the largest subset wins, ties broken by
/// lexicographically least vertex list. Deterministic for a fixed seed.
pub fn sample_b_monotone(
    g: &Graph,
    trials: usize,
    seed: u64,
    cap: usize,
) -> Result<MonotonicityVerdict> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.n() > cap {
        return Err(Error::OverCap {
            n: g.n(),
            cap,
            what: "monotonicity sampling",
            hint: "raise the cap; each sample still needs an exact b-number",
        });
    }
    let (b_graph, _) = b_number(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = g.full_mask();
    let mut best: Option<MonotonicityWitness> = None;
    for _ in 0..trials {
        let mask = rng.random_range(0..=full);
        if mask == 0 || mask == full {
            continue;
        }
        let subset = VertexSet::from_mask(mask).to_vec();
        if let Some(b_sub) = violation(g, &subset, b_graph)? {
            let candidate = MonotonicityWitness {
                vertices: subset,
                b_subgraph: b_sub,
                b_graph,
            };
            let better = match &best {
                None => true,
                Some(cur) => {
                    candidate.vertices.len() > cur.vertices.len()
                        || (candidate.vertices.len() == cur.vertices.len()
                            && candidate.vertices < cur.vertices)
                }
            };
            if better {
                best = Some(candidate);
            }
        }
    }
    Ok(match best {
        Some(witness) => MonotonicityVerdict::Violated(witness),
        None => MonotonicityVerdict::NoViolationFound { trials },
    })
}

/// Returns `Some(b(H))` when the induced subgraph on `subset` violates
/// monotonicity, pruning with the degree ceiling before the exact solve.
fn violation(g: &Graph, subset: &[usize], b_graph: usize) -> Result<Option<usize>> {
    let h = g.induced_subgraph(&VertexSet::from_members(subset)?)?;
    if h.degree_sequence().m() <= b_graph {
        return Ok(None); // b(H) <= m(H) <= b(G): cannot violate
    }
    let (b_sub, _) = b_number(&h)?;
    Ok(if b_sub > b_graph { Some(b_sub) } else { None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_b, gen_complete, gen_path};

    #[test]
    fn complete_graphs_are_monotone() {
        let verdict = is_b_monotone(&gen_complete(4).unwrap(), 14).unwrap();
        assert_eq!(verdict, MonotonicityVerdict::Monotone);
        assert!(!verdict.is_violated());
        assert!(verdict.witness().is_none());
    }

    #[test]
    fn short_paths_are_monotone() {
        for n in 1..=5 {
            let verdict = is_b_monotone(&gen_path(n).unwrap(), 14).unwrap();
            assert_eq!(verdict, MonotonicityVerdict::Monotone, "n = {n}");
        }
    }

    #[test]
    fn near_matching_bipartite_t3_loses_monotonicity() {
        // Deleting the last vertex of this 6-vertex graph leaves the path
        // 0-4-2-3-1, whose b-number 3 beats the whole graph's 2.
        let verdict = is_b_monotone(&gen_b(3).unwrap(), 14).unwrap();
        let witness = verdict.witness().expect("violation exists");
        assert_eq!(witness.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(witness.b_subgraph, 3);
        assert_eq!(witness.b_graph, 2);
    }

    #[test]
    fn near_matching_bipartite_t4_loses_monotonicity() {
        // Deleting either degree-4 vertex leaves a 7-vertex subgraph with
        // b = 4; the lexicographically least such subset drops vertex 7.
        let g = gen_b(4).unwrap();
        let verdict = is_b_monotone(&g, 14).unwrap();
        let witness = verdict.witness().expect("violation exists");
        assert_eq!(witness.vertices, vec![0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(witness.b_subgraph, 4);
        assert_eq!(witness.b_graph, 2);
        // Re-verify the witness against the exact solver.
        let h = g
            .induced_subgraph(&VertexSet::from_members(&witness.vertices).unwrap())
            .unwrap();
        assert_eq!(b_number(&h).unwrap().0, 4);
    }

    #[test]
    fn sampling_finds_the_violation_in_b4() {
        let g = gen_b(4).unwrap();
        let verdict = sample_b_monotone(&g, 400, 7, 14).unwrap();
        let witness = verdict.witness().expect("400 draws over 254 masks");
        assert!(witness.b_subgraph > witness.b_graph);
        let h = g
            .induced_subgraph(&VertexSet::from_members(&witness.vertices).unwrap())
            .unwrap();
        assert_eq!(b_number(&h).unwrap().0, witness.b_subgraph);
        // Same seed, same verdict.
        assert_eq!(sample_b_monotone(&g, 400, 7, 14).unwrap(), verdict);
    }

    #[test]
    fn sampling_reports_one_sided_silence() {
        let verdict = sample_b_monotone(&gen_complete(5).unwrap(), 50, 1, 14).unwrap();
        assert_eq!(verdict, MonotonicityVerdict::NoViolationFound { trials: 50 });
    }

    #[test]
    fn caps_refuse_oversized_scans() {
        let g = gen_b(4).unwrap();
        assert!(matches!(
            is_b_monotone(&g, 6),
            Err(Error::OverCap { n: 8, cap: 6, .. })
        ));
        assert!(matches!(
            sample_b_monotone(&g, 10, 0, 6),
            Err(Error::OverCap { n: 8, cap: 6, .. })
        ));
    }

    #[test]
    fn empty_graph_is_rejected() {
        let g = Graph::build(0, &[]).unwrap();
        assert!(matches!(is_b_monotone(&g, 14), Err(Error::EmptyGraph)));
    }
}
