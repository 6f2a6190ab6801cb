//! Deterministic graph family generators.
//!
//! Every family fixes its vertex numbering so that witnesses and reports are
//! reproducible across runs:
//!
//! * `path:k` — the path `0 - 1 - … - k-1`.
//! * `K:n` — the complete graph on `0..n`.
//! * `Kst:s,t` — complete bipartite, sides `0..s` and `s..s+t`.
//! * `B:t` — complete bipartite K_{t,t} (sides `0..t`, `t..2t`) minus the
//!   matching `{(i, t+i) : i = 0..t-2}`, leaving exactly two vertices of full
//!   degree t (indices `t-1` and `2t-1`).
//! * `R:k` — the radius-2 tree with root 0, children `1..k` (each adjacent to
//!   the root), and `k-2` private leaves per child, numbered child-by-child.
//! * `cat:sxl` — the caterpillar with spine `0..s` (a path) and `l` leaves
//!   per spine vertex, leaves grouped by spine vertex after the spine.
//! * `tree:n:seed=s` — a uniformly random labeled tree, decoded from a random
//!   generator-word sequence drawn from ChaCha8 seeded with `s`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// The path on `k >= 1` vertices.
pub fn gen_path(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::FamilyParam {
            message: "path requires k >= 1".into(),
        });
    }
    let edges: Vec<(usize, usize)> = (1..k).map(|v| (v - 1, v)).collect();
    Graph::build(k, &edges)
}

/// The complete graph on `n >= 1` vertices.
pub fn gen_complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::FamilyParam {
            message: "complete graph requires n >= 1".into(),
        });
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges)
}

/// The complete bipartite graph with sides `s, t >= 1`.
pub fn gen_complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    if s < 1 || t < 1 {
        return Err(Error::FamilyParam {
            message: "complete bipartite requires s, t >= 1".into(),
        });
    }
    let n = s.checked_add(t).ok_or(Error::FamilyParam {
        message: "complete bipartite size overflows".into(),
    })?;
    let mut edges = Vec::with_capacity(s * t);
    for u in 0..s {
        for v in 0..t {
            edges.push((u, s + v));
        }
    }
    Graph::build(n, &edges)
}

/// K_{t,t} minus a fixed matching of size t − 1, for `t >= 2`. The two
/// unmatched vertices (`t-1` and `2t-1`) keep full degree t.
pub fn gen_b(t: usize) -> Result<Graph> {
    if t < 2 {
        return Err(Error::FamilyParam {
            message: "the bipartite-minus-matching family requires t >= 2".into(),
        });
    }
    let n = t.checked_mul(2).ok_or(Error::FamilyParam {
        message: "family size overflows".into(),
    })?;
    let mut edges = Vec::new();
    for i in 0..t {
        for j in 0..t {
            let matched_out = i == j && i < t - 1;
            if !matched_out {
                edges.push((i, t + j));
            }
        }
    }
    Graph::build(n, &edges)
}

/// The radius-2 tree with root degree k − 1 and k − 2 private leaves per
/// child, for `k >= 2`. Order is 1 + (k−1)².
pub fn gen_r(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::FamilyParam {
            message: "the radius-2 tree family requires k >= 2".into(),
        });
    }
    let branch = k - 1;
    let n = branch
        .checked_mul(branch)
        .and_then(|sq| sq.checked_add(1))
        .ok_or(Error::FamilyParam {
            message: "family size overflows".into(),
        })?;
    let mut edges = Vec::new();
    for i in 0..branch {
        let child = 1 + i;
        edges.push((0, child));
        for j in 0..k.saturating_sub(2) {
            let leaf = 1 + branch + i * (k - 2) + j;
            edges.push((child, leaf));
        }
    }
    Graph::build(n, &edges)
}

/// The caterpillar with spine length `s >= 1` and `l >= 0` leaves per spine
/// vertex. Order is s·(l+1); spine first, then leaves grouped by spine vertex.
pub fn gen_caterpillar(s: usize, l: usize) -> Result<Graph> {
    if s < 1 {
        return Err(Error::FamilyParam {
            message: "caterpillar requires spine length s >= 1".into(),
        });
    }
    let n = l
        .checked_add(1)
        .and_then(|per| s.checked_mul(per))
        .ok_or(Error::FamilyParam {
            message: "family size overflows".into(),
        })?;
    let mut edges = Vec::new();
    for v in 1..s {
        edges.push((v - 1, v));
    }
    for i in 0..s {
        for j in 0..l {
            edges.push((i, s + i * l + j));
        }
    }
    Graph::build(n, &edges)
}

/// A uniformly random labeled tree on `n >= 1` vertices, drawn from the
/// seeded deterministic generator (ChaCha8): the generator word sequence of
/// length n − 2 is sampled uniformly and decoded into its unique tree.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::FamilyParam {
            message: "random tree requires n >= 1".into(),
        });
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let word: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.random_range(0..n))
        .collect();
    decode_tree_word(n, &word)
}

/// Decodes a generator word (length n − 2, entries in 0..n) into its labeled
/// tree: repeatedly join the smallest current leaf to the next word entry,
/// then join the last two remaining vertices.
fn decode_tree_word(n: usize, word: &[usize]) -> Result<Graph> {
    debug_assert_eq!(word.len(), n.saturating_sub(2));
    if n == 1 {
        return Graph::build(1, &[]);
    }
    let mut degree = vec![1usize; n];
    for &a in word {
        debug_assert!(a < n);
        degree[a] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in word {
        let Reverse(leaf) = leaves.pop().expect("a tree word always leaves a leaf");
        edges.push((leaf, a));
        degree[leaf] -= 1;
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let Reverse(u) = leaves.pop().expect("two vertices remain");
    let Reverse(v) = leaves.pop().expect("two vertices remain");
    edges.push((u, v));
    Graph::build(n, &edges)
}

/// A parsed family specification, as accepted on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// `path:k`
    Path { k: usize },
    /// `K:n`
    Complete { n: usize },
    /// `Kst:s,t`
    CompleteBipartite { s: usize, t: usize },
    /// `B:t`
    B { t: usize },
    /// `R:k`
    R { k: usize },
    /// `cat:sxl`
    Caterpillar { s: usize, l: usize },
    /// `tree:n:seed=s`
    RandomTree { n: usize, seed: u64 },
}

impl FamilySpec {
    /// Builds the graph this spec describes.
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Path { k } => gen_path(k),
            FamilySpec::Complete { n } => gen_complete(n),
            FamilySpec::CompleteBipartite { s, t } => gen_complete_bipartite(s, t),
            FamilySpec::B { t } => gen_b(t),
            FamilySpec::R { k } => gen_r(k),
            FamilySpec::Caterpillar { s, l } => gen_caterpillar(s, l),
            FamilySpec::RandomTree { n, seed } => gen_random_tree(n, seed),
        }
    }

    /// The family kind, without parameters.
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Path { .. } => FamilyKind::Path,
            FamilySpec::Complete { .. } => FamilyKind::Complete,
            FamilySpec::CompleteBipartite { .. } => FamilyKind::CompleteBipartite,
            FamilySpec::B { .. } => FamilyKind::B,
            FamilySpec::R { .. } => FamilyKind::R,
            FamilySpec::Caterpillar { .. } => FamilyKind::Caterpillar,
            FamilySpec::RandomTree { .. } => FamilyKind::RandomTree,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { k } => write!(f, "path:{k}"),
            FamilySpec::Complete { n } => write!(f, "K:{n}"),
            FamilySpec::CompleteBipartite { s, t } => write!(f, "Kst:{s},{t}"),
            FamilySpec::B { t } => write!(f, "B:{t}"),
            FamilySpec::R { k } => write!(f, "R:{k}"),
            FamilySpec::Caterpillar { s, l } => write!(f, "cat:{s}x{l}"),
            FamilySpec::RandomTree { n, seed } => write!(f, "tree:{n}:seed={seed}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<FamilySpec> {
        let bad = |message: &str| Error::BadFamilySpec {
            spec: spec.to_string(),
            message: message.to_string(),
        };
        let (head, rest) = spec.split_once(':').ok_or_else(|| {
            bad("expected `<family>:<params>` (e.g. B:4, path:6, cat:10x3, tree:8:seed=42)")
        })?;
        let parse_num = |text: &str, what: &str| -> Result<usize> {
            text.trim()
                .parse()
                .map_err(|_| bad(&format!("expected a number for {what}, found `{text}`")))
        };
        match head {
            "path" => Ok(FamilySpec::Path {
                k: parse_num(rest, "k")?,
            }),
            "K" => Ok(FamilySpec::Complete {
                n: parse_num(rest, "n")?,
            }),
            "Kst" => {
                let (s, t) = rest
                    .split_once(',')
                    .ok_or_else(|| bad("expected `Kst:s,t`"))?;
                Ok(FamilySpec::CompleteBipartite {
                    s: parse_num(s, "s")?,
                    t: parse_num(t, "t")?,
                })
            }
            "B" => Ok(FamilySpec::B {
                t: parse_num(rest, "t")?,
            }),
            "R" => Ok(FamilySpec::R {
                k: parse_num(rest, "k")?,
            }),
            "cat" => {
                let (s, l) = rest
                    .split_once('x')
                    .ok_or_else(|| bad("expected `cat:sxl` (spine length x leaves per vertex)"))?;
                Ok(FamilySpec::Caterpillar {
                    s: parse_num(s, "s")?,
                    l: parse_num(l, "l")?,
                })
            }
            "tree" => {
                let (n, seed_part) = rest
                    .split_once(':')
                    .ok_or_else(|| bad("expected `tree:n:seed=s`"))?;
                let seed_text = seed_part
                    .strip_prefix("seed=")
                    .ok_or_else(|| bad("expected `seed=<number>` after the order"))?;
                let seed: u64 = seed_text
                    .trim()
                    .parse()
                    .map_err(|_| bad(&format!("expected a number for seed, found `{seed_text}`")))?;
                Ok(FamilySpec::RandomTree {
                    n: parse_num(n, "n")?,
                    seed,
                })
            }
            other => Err(bad(&format!(
                "unknown family `{other}` (known: path, K, Kst, B, R, cat, tree)"
            ))),
        }
    }
}

/// A family name without parameters, as swept over a range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Path,
    Complete,
    CompleteBipartite,
    B,
    R,
    Caterpillar,
    RandomTree,
}

impl FamilyKind {
    /// The spec for the member of this family at the swept parameter value.
    /// `Caterpillar` sweeps the square members (spine = leaves = param);
    /// `CompleteBipartite` sweeps the balanced members (s = t = param);
    /// `RandomTree` sweeps the order, deriving each member's seed as
    /// `base_seed + param`.
    pub fn member(&self, param: usize, base_seed: u64) -> FamilySpec {
        match self {
            FamilyKind::Path => FamilySpec::Path { k: param },
            FamilyKind::Complete => FamilySpec::Complete { n: param },
            FamilyKind::CompleteBipartite => FamilySpec::CompleteBipartite { s: param, t: param },
            FamilyKind::B => FamilySpec::B { t: param },
            FamilyKind::R => FamilySpec::R { k: param },
            FamilyKind::Caterpillar => FamilySpec::Caterpillar { s: param, l: param },
            FamilyKind::RandomTree => FamilySpec::RandomTree {
                n: param,
                seed: base_seed.wrapping_add(param as u64),
            },
        }
    }

    /// Whether every member of this family is a tree.
    pub fn is_tree_family(&self) -> bool {
        matches!(
            self,
            FamilyKind::Path | FamilyKind::R | FamilyKind::Caterpillar | FamilyKind::RandomTree
        )
    }

    /// The name used in reports and CSV rows.
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Complete => "K",
            FamilyKind::CompleteBipartite => "Kst",
            FamilyKind::B => "B",
            FamilyKind::R => "R",
            FamilyKind::Caterpillar => "cat",
            FamilyKind::RandomTree => "tree",
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(text: &str) -> Result<FamilyKind> {
        match text {
            "path" => Ok(FamilyKind::Path),
            "K" => Ok(FamilyKind::Complete),
            "Kst" => Ok(FamilyKind::CompleteBipartite),
            "B" => Ok(FamilyKind::B),
            "R" => Ok(FamilyKind::R),
            "cat" => Ok(FamilyKind::Caterpillar),
            "tree" => Ok(FamilyKind::RandomTree),
            other => Err(Error::BadFamilySpec {
                spec: other.to_string(),
                message: "unknown family kind (known: path, K, Kst, B, R, cat, tree)".into(),
            }),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    /// BFS 2-coloring; returns the side masks when the graph is bipartite.
    fn bipartition(g: &Graph) -> Option<(u64, u64)> {
        let mut side = vec![None::<bool>; g.n()];
        for start in g.vertices() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                let su = side[u].unwrap();
                let mut nbrs = g.neighbors(u);
                while nbrs != 0 {
                    let v = nbrs.trailing_zeros() as usize;
                    nbrs &= nbrs - 1;
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut left = 0u64;
        let mut right = 0u64;
        for (v, s) in side.iter().enumerate() {
            match s.unwrap() {
                false => left |= 1 << v,
                true => right |= 1 << v,
            }
        }
        Some((left, right))
    }

    #[test]
    fn path_members() {
        assert_eq!(gen_path(1).unwrap().n(), 1);
        let p5 = gen_path(5).unwrap();
        assert_eq!(p5.edges(), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(p5.is_tree());
        assert!(gen_path(0).is_err());
    }

    #[test]
    fn complete_members() {
        let k3 = gen_complete(3).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.degree_sequence().as_slice(), &[2, 2, 2]);
        assert!(gen_complete(0).is_err());
    }

    #[test]
    fn complete_bipartite_members() {
        let c4 = gen_complete_bipartite(2, 2).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.degree_sequence().as_slice(), &[2, 2, 2, 2]);
        let k33 = gen_complete_bipartite(3, 3).unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert!(k33.vertices().all(|v| k33.degree(v) == 3));
        assert!(gen_complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn b_family_smallest_member_is_a_path() {
        let b2 = gen_b(2).unwrap();
        assert_eq!(b2.n(), 4);
        assert_eq!(b2.edge_count(), 3);
        assert!(b2.is_tree());
        assert_eq!(b2.degree_sequence().as_slice(), &[2, 2, 1, 1]);
        assert!(gen_b(1).is_err());
    }

    #[test]
    fn b_family_shape() {
        let b3 = gen_b(3).unwrap();
        assert_eq!(b3.n(), 6);
        assert_eq!(b3.edge_count(), 7);
        assert_eq!(b3.degree_sequence().as_slice(), &[3, 3, 2, 2, 2, 2]);
        let b4 = gen_b(4).unwrap();
        assert_eq!(b4.n(), 8);
        assert_eq!(b4.edge_count(), 13);
        // The two unmatched vertices keep full degree t.
        let high: Vec<usize> = b4.vertices().filter(|&v| b4.degree(v) == 4).collect();
        assert_eq!(high, vec![3, 7]);
        // Bipartite with the declared sides.
        for t in 2..=6 {
            let b = gen_b(t).unwrap();
            let (left, right) = bipartition(&b).expect("bipartite");
            let lo = left.min(right);
            let hi = left.max(right);
            assert_eq!(lo.count_ones() as usize, t);
            assert_eq!(hi.count_ones() as usize, t);
            assert_eq!(b.edge_count(), t * t - (t - 1));
        }
    }

    #[test]
    fn r_family_shape() {
        let r2 = gen_r(2).unwrap();
        assert_eq!(r2.n(), 2);
        assert_eq!(r2.edge_count(), 1);
        let r4 = gen_r(4).unwrap();
        assert_eq!(r4.n(), 10);
        assert!(r4.is_tree());
        let leaves = r4.vertices().filter(|&v| r4.degree(v) == 1).count();
        assert_eq!(leaves, 6); // (k-1)(k-2)
        assert_eq!(
            r4.degree_sequence().as_slice(),
            &[3, 3, 3, 3, 1, 1, 1, 1, 1, 1]
        );
        let r5 = gen_r(5).unwrap();
        assert_eq!(r5.n(), 17);
        assert!(r5.is_tree());
        assert_eq!(r5.vertices().filter(|&v| r5.degree(v) == 1).count(), 12);
        assert!(gen_r(1).is_err());
    }

    #[test]
    fn caterpillar_shape() {
        // No leaves: label-identical to the path.
        assert_eq!(gen_caterpillar(4, 0).unwrap(), gen_path(4).unwrap());
        // Single spine vertex: a star with center 0.
        let star = gen_caterpillar(1, 5).unwrap();
        assert_eq!(star.n(), 6);
        assert_eq!(star.degree(0), 5);
        assert!((1..6).all(|v| star.degree(v) == 1));
        let c = gen_caterpillar(3, 2).unwrap();
        assert_eq!(c.n(), 9);
        assert!(c.is_tree());
        assert_eq!(c.degree(0), 3);
        assert_eq!(c.degree(1), 4);
        assert_eq!(c.degree(2), 3);
        assert!(gen_caterpillar(0, 2).is_err());
    }

    #[test]
    fn random_tree_members_are_trees_and_deterministic() {
        assert_eq!(gen_random_tree(1, 0).unwrap().n(), 1);
        assert_eq!(gen_random_tree(2, 0).unwrap().edges(), vec![(0, 1)]);
        for seed in 0..50u64 {
            let n = 2 + (seed as usize % 9);
            let t = gen_random_tree(n, seed).unwrap();
            assert!(t.is_tree(), "seed {seed} order {n} not a tree");
            assert_eq!(t, gen_random_tree(n, seed).unwrap());
        }
        assert_ne!(
            gen_random_tree(8, 1).unwrap(),
            gen_random_tree(8, 2).unwrap()
        );
    }

    #[test]
    fn random_tree_distribution_is_uniform_on_order_four() {
        // 16 labeled trees on 4 vertices; each should appear with frequency
        // 1/16 within ±0.02 over 10,000 seeds.
        let mut counts: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
        let trials = 10_000u64;
        for seed in 0..trials {
            let t = gen_random_tree(4, seed).unwrap();
            *counts.entry(t.edges()).or_default() += 1;
        }
        assert_eq!(counts.len(), 16);
        for (tree, count) in counts {
            let freq = count as f64 / trials as f64;
            assert!(
                (freq - 1.0 / 16.0).abs() <= 0.02,
                "tree {tree:?} has frequency {freq}"
            );
        }
    }

    #[test]
    fn family_spec_parses_and_round_trips() {
        let cases = [
            ("B:4", FamilySpec::B { t: 4 }),
            ("R:5", FamilySpec::R { k: 5 }),
            ("path:6", FamilySpec::Path { k: 6 }),
            ("K:5", FamilySpec::Complete { n: 5 }),
            ("Kst:3,3", FamilySpec::CompleteBipartite { s: 3, t: 3 }),
            ("cat:10x3", FamilySpec::Caterpillar { s: 10, l: 3 }),
            ("tree:8:seed=42", FamilySpec::RandomTree { n: 8, seed: 42 }),
        ];
        for (text, expected) in cases {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec, expected);
            assert_eq!(spec.to_string(), text);
            let round: FamilySpec = spec.to_string().parse().unwrap();
            assert_eq!(round, spec);
        }
    }

    #[test]
    fn family_spec_rejects_malformed_text() {
        for text in [
            "B", "B:", "B:x", "cat:3", "cat:axb", "tree:8", "tree:8:seed=", "Q:3", "Kst:3",
            "path:-1",
        ] {
            assert!(
                text.parse::<FamilySpec>().is_err(),
                "`{text}` should not parse"
            );
        }
    }

    #[test]
    fn family_param_domains_enforced() {
        assert!("B:1".parse::<FamilySpec>().unwrap().build().is_err());
        assert!("R:1".parse::<FamilySpec>().unwrap().build().is_err());
        // Capacity: R:9 would need 65 vertices.
        assert!(matches!(
            "R:9".parse::<FamilySpec>().unwrap().build(),
            Err(Error::TooManyVertices { n: 65, .. })
        ));
        assert!("cat:0x2".parse::<FamilySpec>().unwrap().build().is_err());
        // Overflow-proof.
        assert!("cat:99999999999999999999x3".parse::<FamilySpec>().is_err());
        let huge = FamilySpec::Caterpillar {
            s: usize::MAX,
            l: usize::MAX,
        };
        assert!(huge.build().is_err());
    }

    #[test]
    fn family_kind_member_construction() {
        assert_eq!(
            FamilyKind::Caterpillar.member(3, 0),
            FamilySpec::Caterpillar { s: 3, l: 3 }
        );
        assert_eq!(
            FamilyKind::RandomTree.member(6, 40),
            FamilySpec::RandomTree { n: 6, seed: 46 }
        );
        assert_eq!("cat".parse::<FamilyKind>().unwrap(), FamilyKind::Caterpillar);
        assert!("nope".parse::<FamilyKind>().is_err());
        for kind in [
            FamilyKind::Path,
            FamilyKind::Complete,
            FamilyKind::CompleteBipartite,
            FamilyKind::B,
            FamilyKind::R,
            FamilyKind::Caterpillar,
            FamilyKind::RandomTree,
        ] {
            assert_eq!(kind.name().parse::<FamilyKind>().unwrap(), kind);
        }
    }
}
