//! First-fit (greedy) colorings and the exact greedy-worst-case number Γ.
//!
//! Γ(G) is the largest number of colors first-fit can be forced to use over
//! all vertex orderings. Equivalently (and this is what the exact solver
//! exploits), Γ(G) is the largest k for which the vertices can be partitioned
//! into independent classes C_1, …, C_k where every vertex of C_j has a
//! neighbor in each lower class C_i — class C_1 must then dominate everything
//! above it, so the solver extends partial colorings class-by-class: choose
//! an independent set that dominates the remainder, recurse on the remainder,
//! and memoize on the remaining-vertex bitmask. Ties are broken toward the
//! lowest-vertex-index class (ascending bitmask order), making the returned
//! witness ordering reproducible.

use std::collections::HashMap;

use itertools::Itertools;

use crate::coloring::{Coloring, VertexOrdering};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard bound on the all-orderings oracle (n! orderings).
pub const ORACLE_MAX_N: usize = 9;

/// Colors the vertices greedily in the given order: each vertex takes the
/// smallest color absent from its already-colored neighborhood.
pub fn first_fit(g: &Graph, order: &VertexOrdering) -> Result<Coloring> {
    if order.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: order.len(),
        });
    }
    let mut colors = vec![0usize; g.n()];
    for &v in order.as_slice() {
        let mut taken = 0u64; // bit c-1 = color c seen among colored neighbors
        let mut nbrs = g.neighbors(v);
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if colors[u] > 0 {
                taken |= 1u64 << (colors[u] - 1);
            }
        }
        colors[v] = (!taken).trailing_zeros() as usize + 1;
    }
    Coloring::new(colors)
}

/// True iff `c` is a proper coloring in which every vertex of color j has a
/// neighbor of every color i < j — exactly the colorings first-fit can
/// produce. Colorings of the wrong length never qualify.
pub fn is_grundy_coloring(g: &Graph, c: &Coloring) -> bool {
    if c.len() != g.n() {
        return false;
    }
    let k = c.k();
    let mut masks = vec![0u64; k + 1];
    for v in g.vertices() {
        masks[c.color(v)] |= 1u64 << v;
    }
    for v in g.vertices() {
        let cv = c.color(v);
        if g.neighbors(v) & masks[cv] != 0 {
            return false; // improper
        }
        if masks[1..cv].iter().any(|&mask| g.neighbors(v) & mask == 0) {
            return false; // missing a lower color in the neighborhood
        }
    }
    true
}

/// Exact Γ with a witness ordering on which first-fit attains it.
/// Exponential in n; callers gate input size with a solver cap.
pub fn grundy_number(g: &Graph) -> Result<(usize, VertexOrdering)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut solver = GrundySolver {
        g,
        value: HashMap::new(),
        class_choice: HashMap::new(),
    };
    let full = g.full_mask();
    let gamma = solver.solve(full);
    // Reconstruct the class partition, then visit classes bottom-up: each
    // vertex of class j then sees exactly the colors 1..j-1 on its earlier
    // neighbors and first-fit reproduces the partition.
    let mut order = Vec::with_capacity(g.n());
    let mut remaining = full;
    while remaining != 0 {
        let class = solver.class_choice[&remaining];
        let mut bits = class;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            order.push(v);
        }
        remaining &= !class;
    }
    let witness = VertexOrdering::new(order).expect("classes partition the vertex set");
    debug_assert_eq!(first_fit(g, &witness)?.k(), gamma);
    Ok((gamma, witness))
}

struct GrundySolver<'a> {
    g: &'a Graph,
    value: HashMap<u64, usize>,
    class_choice: HashMap<u64, u64>,
}

impl GrundySolver<'_> {
    /// Γ of the induced subgraph on `set`, memoized.
    fn solve(&mut self, set: u64) -> usize {
        if set == 0 {
            return 0;
        }
        if let Some(&v) = self.value.get(&set) {
            return v;
        }
        let members: Vec<usize> = {
            let mut v = Vec::new();
            let mut bits = set;
            while bits != 0 {
                v.push(bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
            v
        };
        let mut best = 0usize;
        let mut best_class = 0u64;
        // Enumerate candidate first classes in ascending bitmask order; the
        // compressed counter expands monotonically, so the first maximizer is
        // the lowest-index-first choice.
        for code in 1u64..1u64 << members.len() {
            let mut class = 0u64;
            {
                let mut c = code;
                while c != 0 {
                    let i = c.trailing_zeros() as usize;
                    c &= c - 1;
                    class |= 1u64 << members[i];
                }
            }
            // Class must be independent and must dominate the rest of `set`.
            let mut reach = 0u64;
            let mut ok = true;
            let mut bits = class;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if self.g.neighbors(v) & class != 0 {
                    ok = false;
                    break;
                }
                reach |= self.g.neighbors(v);
            }
            if !ok || set & !class & !reach != 0 {
                continue;
            }
            let candidate = 1 + self.solve(set & !class);
            if candidate > best {
                best = candidate;
                best_class = class;
            }
        }
        self.value.insert(set, best);
        self.class_choice.insert(set, best_class);
        best
    }
}

/// Reference Γ by brute force over all n! orderings. Guarded at n <= 9.
pub fn grundy_oracle(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.n() > ORACLE_MAX_N {
        return Err(Error::OverCap {
            n: g.n(),
            cap: ORACLE_MAX_N,
            what: "the all-orderings oracle",
            hint: "use the exact solver instead",
        });
    }
    let mut best = 0;
    for perm in (0..g.n()).permutations(g.n()) {
        let order = VertexOrdering::new(perm).expect("permutations are permutations");
        let k = first_fit(g, &order)?.k();
        best = best.max(k);
    }
    Ok(best)
}
