//! Color-dominating colorings and the exact b-chromatic number.
//!
//! A proper coloring is a b-coloring when every color class contains a
//! color-dominating vertex — one with a neighbor in every other class. The
//! b-chromatic number b(G) is the largest class count over all b-colorings.
//! Two cheap companions bound it: the degree ceiling m(G) (the largest i with
//! d_i >= i-1 on the non-increasing degree sequence) satisfies b(G) <= m(G),
//! and every coloring with exactly χ(G) colors is a b-coloring, so
//! χ(G) <= b(G). The exact solver walks k downward from m(G) to χ(G) and
//! returns the first feasible k with its witness coloring.
//!
//! `eliminate_classes` is the constructive half of the upper bound: starting
//! from any proper coloring it repeatedly dissolves the lowest-indexed class
//! without a dominating vertex, moving each of its vertices (ascending index)
//! to the lowest-indexed class with no neighbor of that vertex, then compacts
//! the color names. The class count strictly drops, so it terminates in a
//! b-coloring with at most b(G) classes.

use itertools::Itertools;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// True iff `c` assigns different colors to the endpoints of every edge.
/// Colorings of the wrong length are never proper.
pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    if c.len() != g.n() {
        return false;
    }
    let k = c.k();
    let mut masks = vec![0u64; k + 1];
    for v in g.vertices() {
        masks[c.color(v)] |= 1u64 << v;
    }
    g.vertices().all(|v| g.neighbors(v) & masks[c.color(v)] == 0)
}

/// Per-class domination report for a proper coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationReport {
    /// `dominators[c - 1]` is the least-indexed vertex of class `c` adjacent
    /// to every other class, or `None` if the class has no such vertex.
    pub dominators: Vec<Option<usize>>,
}

impl DominationReport {
    /// True iff every class has a dominating vertex.
    pub fn all_dominated(&self) -> bool {
        self.dominators.iter().all(|d| d.is_some())
    }
}

/// Reports, for each class `1..=k`, the least-indexed color-dominating vertex.
/// Requires a proper coloring; a single class is vacuously dominated by its
/// least vertex (there are no other classes to reach).
pub fn domination_report(g: &Graph, c: &Coloring) -> Result<DominationReport> {
    c.check_fits(g)?;
    require_proper(g, c)?;
    let k = c.k();
    let masks = c.class_masks();
    let mut dominators = vec![None; k];
    for v in g.vertices() {
        let cv = c.color(v);
        if dominators[cv - 1].is_some() {
            continue; // vertices scan in ascending order; first hit is least
        }
        let sees_all = (1..=k).all(|other| other == cv || g.neighbors(v) & masks[other - 1] != 0);
        if sees_all {
            dominators[cv - 1] = Some(v);
        }
    }
    Ok(DominationReport { dominators })
}

/// True iff `c` is a proper coloring in which every class (of the colors
/// `1..=k`, so non-compact colorings never qualify) has a dominating vertex.
pub fn is_b_coloring(g: &Graph, c: &Coloring) -> bool {
    if c.len() != g.n() || !is_proper(g, c) {
        return false;
    }
    if g.n() > 0 && !c.is_compact() {
        return false; // an empty class can never be dominated
    }
    domination_report(g, c)
        .map(|r| r.all_dominated())
        .unwrap_or(false)
}

/// Runs the class-elimination procedure from a proper coloring and returns
/// the resulting b-coloring (compact colors, class count <= the input's).
pub fn eliminate_classes(g: &Graph, c: &Coloring) -> Result<Coloring> {
    c.check_fits(g)?;
    require_proper(g, c)?;
    let mut colors: Vec<usize> = c.compacted().as_slice().to_vec();
    loop {
        let current = Coloring::new(colors.clone()).expect("colors stay positive");
        let report = domination_report(g, &current)?;
        let Some(undominated) = report.dominators.iter().position(|d| d.is_none()) else {
            break; // every class dominated: this is a b-coloring
        };
        let victim = undominated + 1;
        let k = current.k();
        let mut masks = current.class_masks();
        // Move each vertex of the dissolved class (ascending index) to the
        // lowest-indexed other class containing none of its neighbors. Such a
        // class exists: the vertex is not dominating, and earlier moves only
        // relocate its non-neighbors (the class is independent).
        let dissolved: Vec<usize> = g.vertices().filter(|&v| colors[v] == victim).collect();
        for v in dissolved {
            let target = (1..=k)
                .find(|&t| t != victim && g.neighbors(v) & masks[t - 1] == 0)
                .expect("an undominated vertex always has a free class");
            colors[v] = target;
            masks[victim - 1] &= !(1u64 << v);
            masks[target - 1] |= 1u64 << v;
        }
        colors = Coloring::new(colors)
            .expect("colors stay positive")
            .compacted()
            .as_slice()
            .to_vec();
    }
    let result = Coloring::new(colors).expect("colors stay positive");
    debug_assert!(g.n() == 0 || is_b_coloring(g, &result));
    debug_assert!(result.k() <= c.compacted().k());
    Ok(result)
}

fn require_proper(g: &Graph, c: &Coloring) -> Result<()> {
    for (u, v) in g.edges() {
        if c.color(u) == c.color(v) {
            return Err(Error::NotProper {
                u,
                v,
                color: c.color(u),
            });
        }
    }
    Ok(())
}

/// The degree ceiling m(G): the largest 1-based position i in the
/// non-increasing degree sequence with d_i >= i − 1. Satisfies
/// b(G) <= m(G) <= Δ(G) + 1.
pub fn m_number(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(g.degree_sequence().m())
}

/// Exact clique number by pivoting branch-and-bound over candidate bitmasks.
pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(clique_with_witness(g)?.0)
}

/// Exact clique number with the first maximum clique found (deterministic:
/// candidates expand in ascending vertex order).
pub fn clique_with_witness(g: &Graph) -> Result<(usize, Vec<usize>)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut best = 0u64;
    let mut best_size = 0usize;
    expand_cliques(g, 0, 0, g.full_mask(), 0, &mut best, &mut best_size);
    let mut witness = Vec::with_capacity(best_size);
    let mut bits = best;
    while bits != 0 {
        witness.push(bits.trailing_zeros() as usize);
        bits &= bits - 1;
    }
    Ok((best_size, witness))
}

fn expand_cliques(
    g: &Graph,
    clique: u64,
    clique_size: usize,
    mut candidates: u64,
    mut excluded: u64,
    best: &mut u64,
    best_size: &mut usize,
) {
    if candidates == 0 && excluded == 0 {
        if clique_size > *best_size {
            *best_size = clique_size;
            *best = clique;
        }
        return;
    }
    if clique_size + candidates.count_ones() as usize <= *best_size {
        return; // cannot beat the incumbent
    }
    // Pivot on the vertex covering the most candidates; only branch on the
    // candidates the pivot misses.
    let mut pivot = usize::MAX;
    let mut pivot_cover = usize::MAX;
    let mut pool = candidates | excluded;
    while pool != 0 {
        let u = pool.trailing_zeros() as usize;
        pool &= pool - 1;
        let cover = (candidates & !g.neighbors(u)).count_ones() as usize;
        if cover < pivot_cover {
            pivot_cover = cover;
            pivot = u;
        }
    }
    let mut branch = candidates & !g.neighbors(pivot);
    while branch != 0 {
        let v = branch.trailing_zeros() as usize;
        branch &= branch - 1;
        let v_bit = 1u64 << v;
        expand_cliques(
            g,
            clique | v_bit,
            clique_size + 1,
            candidates & g.neighbors(v),
            excluded & g.neighbors(v),
            best,
            best_size,
        );
        candidates &= !v_bit;
        excluded |= v_bit;
    }
}

/// Exact chromatic number by iterative deepening from the clique bound.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Ok(chromatic_with_witness(g)?.0)
}

/// Exact chromatic number with a witness coloring (compact, exactly χ colors).
pub fn chromatic_with_witness(g: &Graph) -> Result<(usize, Coloring)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let lower = clique_number(g)?;
    let greedy = crate::grundy::first_fit(g, &crate::coloring::VertexOrdering::identity(g.n()))?;
    let upper = greedy.k();
    // Branch on vertices in descending-degree order; cap the palette at one
    // more than the colors used so far to kill color-permutation symmetry.
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for k in lower..upper {
        let mut assignment = vec![0usize; g.n()];
        if color_with(g, &order, 0, k, 0, &mut assignment) {
            let witness = Coloring::new(assignment)?;
            debug_assert!(is_proper(g, &witness));
            return Ok((k, witness));
        }
    }
    Ok((upper, greedy))
}

fn color_with(
    g: &Graph,
    order: &[usize],
    idx: usize,
    k: usize,
    used: usize,
    assignment: &mut [usize],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    let limit = k.min(used + 1);
    for color in 1..=limit {
        let conflict = {
            let mut nbrs = g.neighbors(v);
            let mut hit = false;
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if assignment[u] == color {
                    hit = true;
                    break;
                }
            }
            hit
        };
        if conflict {
            continue;
        }
        assignment[v] = color;
        if color_with(g, order, idx + 1, k, used.max(color), assignment) {
            return true;
        }
        assignment[v] = 0;
    }
    false
}

/// Exact b-chromatic number with a witness b-coloring using exactly b(G)
/// colors. Exponential in n; callers gate input size with a solver cap.
pub fn b_number(g: &Graph) -> Result<(usize, Coloring)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = m_number(g)?;
    let (chi, chi_witness) = chromatic_with_witness(g)?;
    for k in (chi + 1..=m).rev() {
        if let Some(witness) = b_coloring_with(g, k) {
            debug_assert!(is_b_coloring(g, &witness));
            return Ok((k, witness));
        }
    }
    // Every coloring with exactly χ colors is a b-coloring: were some class
    // undominated, each of its vertices could move to a class it misses,
    // erasing the class and beating χ.
    debug_assert!(is_b_coloring(g, &chi_witness));
    Ok((chi, chi_witness))
}

/// Searches for a b-coloring with exactly `k` classes. Branches first on the
/// set of k prospective dominating vertices (degree >= k − 1; one per class,
/// ascending combinations so witnesses are reproducible), then extends to a
/// full proper coloring under domination-supply pruning.
fn b_coloring_with(g: &Graph, k: usize) -> Option<Coloring> {
    let candidates: Vec<usize> = g.vertices().filter(|&v| g.degree(v) + 1 >= k).collect();
    if candidates.len() < k {
        return None;
    }
    for chosen in candidates.iter().copied().combinations(k) {
        // Color chosen[i] with i+1; color symmetry makes trying one
        // assignment per set sufficient.
        let mut colors = vec![0usize; g.n()];
        let mut class_masks = vec![0u64; k];
        for (i, &v) in chosen.iter().enumerate() {
            colors[v] = i + 1;
            class_masks[i] |= 1u64 << v;
        }
        // missing[i]: colors (as bits c-1) class i+1's dominator still needs
        // to see. Colors of adjacent dominators are already supplied.
        let mut missing: Vec<u64> = (0..k)
            .map(|i| {
                let all = (1u64 << k) - 1;
                let mut m = all & !(1u64 << i);
                for (j, &u) in chosen.iter().enumerate() {
                    if g.has_edge(chosen[i], u) {
                        m &= !(1u64 << j);
                    }
                }
                m
            })
            .collect();
        let rest: Vec<usize> = g.vertices().filter(|v| !chosen.contains(v)).collect();
        if extend_b_coloring(g, &chosen, &rest, 0, k, &mut colors, &mut class_masks, &mut missing) {
            let witness = Coloring::new(colors).expect("all vertices colored");
            return Some(witness);
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn extend_b_coloring(
    g: &Graph,
    dominators: &[usize],
    rest: &[usize],
    idx: usize,
    k: usize,
    colors: &mut [usize],
    class_masks: &mut [u64],
    missing: &mut [u64],
) -> bool {
    if idx == rest.len() {
        return missing.iter().all(|&m| m == 0);
    }
    // Supply check: every still-missing color of every dominator must be
    // obtainable from some uncolored neighbor that can legally take it.
    for (i, &d) in dominators.iter().enumerate() {
        let mut need = missing[i];
        while need != 0 {
            let color_bit = need & need.wrapping_neg();
            need &= need - 1;
            let color_idx = color_bit.trailing_zeros() as usize;
            let mut ok = false;
            let mut nbrs = g.neighbors(d);
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if colors[u] == 0 && g.neighbors(u) & class_masks[color_idx] == 0 {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return false;
            }
        }
    }
    let v = rest[idx];
    for color in 1..=k {
        if g.neighbors(v) & class_masks[color - 1] != 0 {
            continue;
        }
        colors[v] = color;
        class_masks[color - 1] |= 1u64 << v;
        let mut touched: Vec<usize> = Vec::new();
        for (i, &d) in dominators.iter().enumerate() {
            if g.has_edge(d, v) && missing[i] >> (color - 1) & 1 == 1 {
                missing[i] &= !(1u64 << (color - 1));
                touched.push(i);
            }
        }
        if extend_b_coloring(g, dominators, rest, idx + 1, k, colors, class_masks, missing) {
            return true;
        }
        for i in touched {
            missing[i] |= 1u64 << (color - 1);
        }
        class_masks[color - 1] &= !(1u64 << v);
        colors[v] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_b, gen_caterpillar, gen_complete, gen_complete_bipartite, gen_path, gen_r};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn coloring(v: Vec<usize>) -> Coloring {
        Coloring::new(v).unwrap()
    }

    fn cycle(k: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (1..k).map(|v| (v - 1, v)).collect();
        edges.push((k - 1, 0));
        Graph::build(k, &edges).unwrap()
    }

    #[test]
    fn properness_detection() {
        let c5 = cycle(5);
        assert!(is_proper(&c5, &coloring(vec![1, 2, 1, 2, 3])));
        assert!(!is_proper(&c5, &coloring(vec![1, 2, 1, 2, 1])));
        assert!(!is_proper(&c5, &coloring(vec![1, 2, 1])));
    }

    #[test]
    fn domination_report_on_path_four() {
        // P4 with colors (1,2,1,2): vertex 0 sees color 2, vertex 1 sees
        // color 1 — both classes dominated by their least members.
        let p4 = gen_path(4).unwrap();
        let report = domination_report(&p4, &coloring(vec![1, 2, 1, 2])).unwrap();
        assert_eq!(report.dominators, vec![Some(0), Some(1)]);
        assert!(report.all_dominated());
    }

    #[test]
    fn domination_report_finds_undominated_class() {
        // P4 with colors (1,2,3,1): neither vertex of class 1 sees both
        // other colors.
        let p4 = gen_path(4).unwrap();
        let report = domination_report(&p4, &coloring(vec![1, 2, 3, 1])).unwrap();
        assert_eq!(report.dominators, vec![None, Some(1), Some(2)]);
    }

    #[test]
    fn single_class_is_vacuously_dominated() {
        let g = Graph::build(2, &[]).unwrap();
        let report = domination_report(&g, &coloring(vec![1, 1])).unwrap();
        assert_eq!(report.dominators, vec![Some(0)]);
        assert!(is_b_coloring(&g, &coloring(vec![1, 1])));
    }

    #[test]
    fn domination_report_requires_proper() {
        let p4 = gen_path(4).unwrap();
        assert!(matches!(
            domination_report(&p4, &coloring(vec![1, 1, 2, 1])),
            Err(Error::NotProper { u: 0, v: 1, color: 1 })
        ));
    }

    #[test]
    fn b_coloring_recognition() {
        let p5 = gen_path(5).unwrap();
        assert!(is_b_coloring(&p5, &coloring(vec![1, 2, 3, 1, 2])));
        // On P4, class 1 has no vertex seeing both other colors.
        let p4 = gen_path(4).unwrap();
        assert!(!is_b_coloring(&p4, &coloring(vec![1, 2, 3, 1])));
        // Non-compact colorings never qualify.
        let g = Graph::build(3, &[]).unwrap();
        assert!(!is_b_coloring(&g, &coloring(vec![1, 3, 1])));
    }

    #[test]
    fn elimination_follows_the_documented_schedule() {
        // (P4, (1,2,3,1)): class 1 undominated; vertex 0 -> class 3,
        // vertex 3 -> class 2; compacting yields (2,1,2,1).
        let p4 = gen_path(4).unwrap();
        let out = eliminate_classes(&p4, &coloring(vec![1, 2, 3, 1])).unwrap();
        assert_eq!(out.as_slice(), &[2, 1, 2, 1]);
        assert!(is_b_coloring(&p4, &out));
    }

    #[test]
    fn elimination_collapses_edgeless_rainbow() {
        let g = Graph::build(4, &[]).unwrap();
        let out = eliminate_classes(&g, &coloring(vec![1, 2, 3, 4])).unwrap();
        assert_eq!(out.as_slice(), &[1, 1, 1, 1]);
    }

    #[test]
    fn elimination_keeps_b_colorings_intact() {
        let p5 = gen_path(5).unwrap();
        let c = coloring(vec![1, 2, 3, 1, 2]);
        assert_eq!(eliminate_classes(&p5, &c).unwrap(), c);
    }

    #[test]
    fn elimination_rejects_improper_input() {
        let p4 = gen_path(4).unwrap();
        assert!(matches!(
            eliminate_classes(&p4, &coloring(vec![1, 1, 1, 1])),
            Err(Error::NotProper { .. })
        ));
    }

    #[test]
    fn m_number_of_known_graphs() {
        assert_eq!(m_number(&gen_path(4).unwrap()).unwrap(), 2);
        assert_eq!(m_number(&gen_path(5).unwrap()).unwrap(), 3);
        assert_eq!(m_number(&gen_complete(4).unwrap()).unwrap(), 4);
        assert_eq!(m_number(&cycle(6)).unwrap(), 3);
        assert_eq!(m_number(&Graph::build(1, &[]).unwrap()).unwrap(), 1);
        for t in 2..=6 {
            assert_eq!(m_number(&gen_b(t).unwrap()).unwrap(), t, "t = {t}");
        }
        for k in 2..=5 {
            assert_eq!(m_number(&gen_r(k).unwrap()).unwrap(), k, "k = {k}");
        }
        assert!(m_number(&Graph::build(0, &[]).unwrap()).is_err());
    }

    #[test]
    fn clique_number_of_known_graphs() {
        assert_eq!(clique_number(&gen_complete(5).unwrap()).unwrap(), 5);
        assert_eq!(clique_number(&gen_path(4).unwrap()).unwrap(), 2);
        assert_eq!(clique_number(&gen_b(3).unwrap()).unwrap(), 2);
        assert_eq!(clique_number(&Graph::build(3, &[]).unwrap()).unwrap(), 1);
        let (omega, witness) = clique_with_witness(&gen_complete(4).unwrap()).unwrap();
        assert_eq!(omega, 4);
        assert_eq!(witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn chromatic_number_of_known_graphs() {
        assert_eq!(chromatic_number(&gen_complete(4).unwrap()).unwrap(), 4);
        assert_eq!(chromatic_number(&gen_path(4).unwrap()).unwrap(), 2);
        assert_eq!(chromatic_number(&cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&cycle(6)).unwrap(), 2);
        assert_eq!(chromatic_number(&gen_b(4).unwrap()).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::build(3, &[]).unwrap()).unwrap(), 1);
        let (chi, witness) = chromatic_with_witness(&cycle(5)).unwrap();
        assert_eq!(chi, 3);
        assert!(is_proper(&cycle(5), &witness));
        assert_eq!(witness.k(), 3);
    }

    #[test]
    fn b_number_of_known_graphs() {
        let (b, w) = b_number(&gen_path(5).unwrap()).unwrap();
        assert_eq!(b, 3);
        assert!(is_b_coloring(&gen_path(5).unwrap(), &w));
        let (b, _) = b_number(&gen_path(4).unwrap()).unwrap();
        assert_eq!(b, 2);
        let (b, _) = b_number(&gen_complete(5).unwrap()).unwrap();
        assert_eq!(b, 5);
        let (b, _) = b_number(&gen_complete_bipartite(3, 3).unwrap()).unwrap();
        assert_eq!(b, 2);
        // C4 is the classic m > b example: m = 3, b = 2.
        let c4 = cycle(4);
        assert_eq!(m_number(&c4).unwrap(), 3);
        assert_eq!(b_number(&c4).unwrap().0, 2);
        let (b, _) = b_number(&Graph::build(4, &[]).unwrap()).unwrap();
        assert_eq!(b, 1);
        let (b, _) = b_number(&Graph::build(1, &[]).unwrap()).unwrap();
        assert_eq!(b, 1);
    }

    #[test]
    fn b_number_of_bipartite_minus_matching_is_two() {
        for t in 2..=5 {
            let (b, w) = b_number(&gen_b(t).unwrap()).unwrap();
            assert_eq!(b, 2, "t = {t}");
            assert!(is_b_coloring(&gen_b(t).unwrap(), &w));
        }
    }

    #[test]
    fn b_number_witness_uses_exactly_b_colors() {
        for g in [
            gen_path(7).unwrap(),
            gen_caterpillar(3, 2).unwrap(),
            gen_r(4).unwrap(),
            cycle(6),
        ] {
            let (b, w) = b_number(&g).unwrap();
            assert!(w.is_compact());
            assert_eq!(w.k(), b);
            assert!(is_b_coloring(&g, &w));
        }
    }

    /// Brute-force b by enumerating all set partitions (restricted-growth
    /// strings) and keeping the best proper, fully-dominated one.
    fn b_oracle(g: &Graph) -> usize {
        assert!(g.n() <= 7, "oracle is factorial-ish");
        let n = g.n();
        let mut best = 0;
        let mut labels = vec![0usize; n];
        fn recurse(g: &Graph, labels: &mut Vec<usize>, idx: usize, max_used: usize, best: &mut usize) {
            let n = g.n();
            if idx == n {
                let coloring = Coloring::new(labels.iter().map(|&l| l + 1).collect()).unwrap();
                if is_b_coloring(g, &coloring) {
                    *best = (*best).max(coloring.k());
                }
                return;
            }
            for label in 0..=max_used + 1 {
                labels[idx] = label;
                recurse(g, labels, idx + 1, max_used.max(label), best);
            }
            labels[idx] = 0;
        }
        if n == 0 {
            return 0;
        }
        labels[0] = 0;
        recurse(g, &mut labels, 1, 0, &mut best);
        best
    }

    /// Brute-force chromatic number over the same partition enumeration.
    fn chi_oracle(g: &Graph) -> usize {
        assert!(g.n() <= 7);
        let n = g.n();
        if n == 0 {
            return 0;
        }
        let mut best = usize::MAX;
        let mut labels = vec![0usize; n];
        fn recurse(g: &Graph, labels: &mut Vec<usize>, idx: usize, max_used: usize, best: &mut usize) {
            if idx == g.n() {
                let coloring = Coloring::new(labels.iter().map(|&l| l + 1).collect()).unwrap();
                if is_proper(g, &coloring) {
                    *best = (*best).min(coloring.k());
                }
                return;
            }
            for label in 0..=max_used + 1 {
                labels[idx] = label;
                recurse(g, labels, idx + 1, max_used.max(label), best);
            }
            labels[idx] = 0;
        }
        recurse(g, &mut labels, 1, 0, &mut best);
        best
    }

    /// Brute-force clique number over all vertex subsets.
    fn omega_oracle(g: &Graph) -> usize {
        assert!(g.n() <= 16);
        let mut best = 0;
        for mask in 1u64..1 << g.n() {
            let mut ok = true;
            let mut bits = mask;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if g.neighbors(v) & mask != mask & !(1 << v) {
                    ok = false;
                    break;
                }
            }
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn solvers_match_partition_oracles_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..60 {
            let n = rng.random_range(1..=6);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).unwrap();
            assert_eq!(b_number(&g).unwrap().0, b_oracle(&g), "trial {trial} {g:?}");
            assert_eq!(
                chromatic_number(&g).unwrap(),
                chi_oracle(&g),
                "trial {trial} {g:?}"
            );
            assert_eq!(
                clique_number(&g).unwrap(),
                omega_oracle(&g),
                "trial {trial} {g:?}"
            );
        }
    }

    #[test]
    fn elimination_never_beats_the_exact_b_number() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..40 {
            let n = rng.random_range(1..=8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).unwrap();
            // Random proper coloring: random visit order, random feasible color.
            let mut colors = vec![0usize; n];
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.random_range(0..=i));
            }
            for &v in &perm {
                let feasible: Vec<usize> = (1..=n)
                    .filter(|&c| {
                        let mut nbrs = g.neighbors(v);
                        while nbrs != 0 {
                            let u = nbrs.trailing_zeros() as usize;
                            nbrs &= nbrs - 1;
                            if colors[u] == c {
                                return false;
                            }
                        }
                        true
                    })
                    .collect();
                colors[v] = feasible[rng.random_range(0..feasible.len())];
            }
            let start = Coloring::new(colors).unwrap();
            let out = eliminate_classes(&g, &start).unwrap();
            assert!(is_b_coloring(&g, &out));
            assert!(out.k() <= start.compacted().k());
            assert!(out.k() <= b_number(&g).unwrap().0);
        }
    }
}
