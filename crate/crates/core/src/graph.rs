//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` row per vertex (bit `v` of row `u` is set
//! iff `u ~ v`), which keeps neighborhood queries, independence tests, and the
//! exact solvers in this crate down to a handful of word operations. Graphs
//! are immutable after construction; all operations that "modify" a graph
//! (induced subgraphs, generators) build a fresh one.

use std::fmt;

use crate::error::{Error, Result};

/// Hard capacity of the adjacency representation.
pub const MAX_VERTICES: usize = 64;

/// Bitmask with the low `n` bits set; safe for `n == 64`.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An immutable simple undirected graph (no loops, no multi-edges) on
/// vertices `0..n` with `n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an order and an edge list. Duplicate edges and
    /// both orientations of the same pair are accepted and collapsed.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge { v: u });
            }
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        let g = Graph { n, adj };
        g.debug_validate();
        Ok(g)
    }

    /// Internal constructor for rows that are already known-good.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Graph {
        let g = Graph { n: adj.len(), adj };
        g.debug_validate();
        g
    }

    #[inline]
    fn debug_validate(&self) {
        #[cfg(debug_assertions)]
        {
            assert!(self.n <= MAX_VERTICES);
            let mask = low_mask(self.n);
            for u in 0..self.n {
                assert_eq!(self.adj[u] & !mask, 0, "adjacency bits out of range");
                assert_eq!(self.adj[u] & (1u64 << u), 0, "loop at {u}");
                for v in 0..self.n {
                    assert_eq!(
                        self.adj[u] >> v & 1,
                        self.adj[v] >> u & 1,
                        "asymmetry at ({u}, {v})"
                    );
                }
            }
        }
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Iterator over the vertex indices `0..n`.
    #[inline]
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Bitmask of all vertices.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Neighborhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// True iff `u ~ v`.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Degree of `v`.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Maximum degree; 0 for graphs with no vertices.
    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|row| row.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edge list in canonical order: `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !low_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    /// Non-increasing degree sequence.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    /// Induced subgraph on `set`, with vertices relabeled `0..set.len()` in
    /// ascending order of their original indices.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        let members = set.to_vec();
        if let Some(&v) = members.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let mut rows = vec![0u64; members.len()];
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate() {
                if i != j && self.has_edge(u, v) {
                    rows[i] |= 1u64 << j;
                }
            }
        }
        Ok(Graph::from_rows(rows))
    }

    /// True iff the graph is connected. Graphs with no vertices are not
    /// connected; a single vertex is.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                next |= self.adj[v];
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.full_mask()
    }

    /// True iff the graph is a tree: connected with exactly n − 1 edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() == self.n - 1
    }

    /// Parses a graph from text in the given format.
    pub fn parse(text: &str, format: GraphFormat) -> Result<Graph> {
        match format {
            GraphFormat::Graph6 => Self::from_graph6(text),
            GraphFormat::EdgeList => Self::from_edge_list(text),
        }
    }

    /// Emits the graph as text in the given format.
    pub fn emit(&self, format: GraphFormat) -> String {
        match format {
            GraphFormat::Graph6 => self.to_graph6(),
            GraphFormat::EdgeList => self.to_edge_list(),
        }
    }

    /// Decodes the graph6 one-line format: header byte(s) give n, then the
    /// upper triangle in column-major pair order (0,1),(0,2),(1,2),(0,3),…,
    /// packed big-endian six bits per byte, each byte offset by 63.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
        if bytes.is_empty() {
            return Err(Error::Parse {
                offset: 0,
                message: "empty graph6 input".into(),
            });
        }
        let check_byte = |i: usize| -> Result<u64> {
            let b = bytes[i];
            if !(63..=126).contains(&b) {
                return Err(Error::Parse {
                    offset: i,
                    message: format!("byte {b:#04x} outside the graph6 alphabet 63..=126"),
                });
            }
            Ok(u64::from(b - 63))
        };
        let (n, body_start) = if bytes[0] == b'~' {
            if bytes.len() >= 2 && bytes[1] == b'~' {
                return Err(Error::Parse {
                    offset: 0,
                    message: "8-byte graph6 order header implies n > 64".into(),
                });
            }
            if bytes.len() < 4 {
                return Err(Error::Parse {
                    offset: bytes.len(),
                    message: "truncated graph6 order header".into(),
                });
            }
            let n = (check_byte(1)? << 12 | check_byte(2)? << 6 | check_byte(3)?) as usize;
            (n, 4)
        } else {
            (check_byte(0)? as usize, 1)
        };
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let num_bits = n * n.saturating_sub(1) / 2;
        let num_bytes = num_bits.div_ceil(6);
        if bytes.len() < body_start + num_bytes {
            return Err(Error::Parse {
                offset: bytes.len(),
                message: format!(
                    "truncated graph6 body: need {num_bytes} data bytes for n = {n}"
                ),
            });
        }
        if bytes.len() > body_start + num_bytes {
            return Err(Error::Parse {
                offset: body_start + num_bytes,
                message: "trailing data after graph6 body".into(),
            });
        }
        let mut rows = vec![0u64; n];
        let mut bit_index = 0usize;
        'pairs: for v in 1..n {
            for u in 0..v {
                let byte = check_byte(body_start + bit_index / 6)?;
                if byte >> (5 - bit_index % 6) & 1 == 1 {
                    rows[u] |= 1u64 << v;
                    rows[v] |= 1u64 << u;
                }
                bit_index += 1;
                if bit_index == num_bits {
                    break 'pairs;
                }
            }
        }
        // Padding bits in the final byte must be zero.
        if num_bits % 6 != 0 {
            let last = body_start + num_bytes - 1;
            let pad = 6 - num_bits % 6;
            if check_byte(last)? & low_mask(pad) != 0 {
                return Err(Error::Parse {
                    offset: last,
                    message: "nonzero padding bits in final graph6 byte".into(),
                });
            }
        }
        Ok(Graph::from_rows(rows))
    }

    /// Encodes the graph in graph6 format (shortest header form).
    pub fn to_graph6(&self) -> String {
        let mut out = Vec::new();
        if self.n <= 62 {
            out.push(63 + self.n as u8);
        } else {
            out.push(b'~');
            out.push(63 + ((self.n >> 12) & 0x3f) as u8);
            out.push(63 + ((self.n >> 6) & 0x3f) as u8);
            out.push(63 + (self.n & 0x3f) as u8);
        }
        let mut chunk = 0u8;
        let mut filled = 0u8;
        for v in 1..self.n {
            for u in 0..v {
                chunk <<= 1;
                chunk |= u8::from(self.has_edge(u, v));
                filled += 1;
                if filled == 6 {
                    out.push(63 + chunk);
                    chunk = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            chunk <<= 6 - filled;
            out.push(63 + chunk);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    /// Parses the edge-list format: first non-empty line is n, each following
    /// non-empty line is `u v` with 0-based endpoints.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut offset = 0usize;
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for line in text.split('\n') {
            let line_start = offset;
            offset += line.len() + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let token_offset = |tok: &str| line_start + tok.as_ptr() as usize - line.as_ptr() as usize;
            match n {
                None => {
                    n = Some(trimmed.parse().map_err(|_| Error::Parse {
                        offset: token_offset(trimmed),
                        message: format!("expected vertex count, found `{trimmed}`"),
                    })?);
                }
                Some(_) => {
                    let mut tokens = trimmed.split_whitespace();
                    let mut next_vertex = |what: &str| -> Result<usize> {
                        let tok = tokens.next().ok_or(Error::Parse {
                            offset: line_start + line.len(),
                            message: format!("missing {what} endpoint"),
                        })?;
                        tok.parse().map_err(|_| Error::Parse {
                            offset: token_offset(tok),
                            message: format!("expected vertex index, found `{tok}`"),
                        })
                    };
                    let u = next_vertex("first")?;
                    let v = next_vertex("second")?;
                    if let Some(extra) = tokens.next() {
                        return Err(Error::Parse {
                            offset: token_offset(extra),
                            message: format!("unexpected trailing token `{extra}`"),
                        });
                    }
                    edges.push((u, v));
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            offset: 0,
            message: "empty edge-list input".into(),
        })?;
        Graph::build(n, &edges)
    }

    /// Emits the canonical edge-list form: `n`, then one `u v` line per edge
    /// with `u < v`, sorted, with a trailing newline.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Textual graph formats understood by [`Graph::parse`] / [`Graph::emit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    /// One-line graph6.
    Graph6,
    /// Line-oriented `n` + `u v` rows.
    EdgeList,
}

/// A non-increasing degree sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// The degrees, largest first.
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Number of entries (= number of vertices).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True iff there are no entries.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of degrees (twice the edge count).
    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// The largest 1-based position i with d_i >= i − 1, i.e. the degree-based
    /// ceiling on the number of color-dominating classes. Zero only for the
    /// empty sequence; any vertex at all gives at least 1.
    pub fn m(&self) -> usize {
        let mut m = 0;
        for (idx, &d) in self.0.iter().enumerate() {
            let i = idx + 1;
            if d >= i - 1 {
                m = i;
            } else {
                break; // degrees only shrink while the threshold grows
            }
        }
        m
    }
}

/// A subset of the vertices of some host graph, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    mask: u64,
}

impl VertexSet {
    /// The empty set.
    pub fn empty() -> VertexSet {
        VertexSet { mask: 0 }
    }

    /// All vertices of a graph on `n` vertices.
    pub fn full(n: usize) -> Result<VertexSet> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(VertexSet { mask: low_mask(n) })
    }

    /// Builds a set from explicit members. Duplicates collapse.
    pub fn from_members(members: &[usize]) -> Result<VertexSet> {
        let mut mask = 0u64;
        for &v in members {
            if v >= MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    v,
                    n: MAX_VERTICES,
                });
            }
            mask |= 1u64 << v;
        }
        Ok(VertexSet { mask })
    }

    /// Wraps a raw bitmask.
    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet { mask }
    }

    /// The raw bitmask.
    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Membership test.
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.mask >> v & 1 == 1
    }

    /// Cardinality.
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// True iff the set is empty.
    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Members in ascending order.
    pub fn to_vec(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut m = self.mask;
        while m != 0 {
            out.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        out
    }

    /// Complement within a host of order `n`.
    pub fn complement_within(&self, n: usize) -> VertexSet {
        VertexSet {
            mask: !self.mask & low_mask(n),
        }
    }
}
