//! Immutable simple undirected graphs with bit-row adjacency, plus the
//! canonical constructions used throughout the crate: complement, join,
//! Cartesian product, prism, Mycielskian, and pendant addition.
//!
//! Vertices are `0..n-1`. Every construction returns a fresh graph with a
//! fixed, documented vertex order so that downstream witnesses and
//! certificates are reproducible byte for byte.

mod edgelist;

pub use edgelist::{parse_edge_list, serialize_edge_list, EdgeListError, EdgeListErrorKind};

use crate::bits;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    ZeroOrder,
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
}

/// A simple undirected graph. Adjacency is stored as one fixed-width bit
/// row per vertex; all set operations in the solvers are word operations
/// on these rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    fn blank(n: usize) -> Graph {
        let words = bits::words_for(n).max(1);
        Graph {
            n,
            words,
            rows: vec![0u64; n * words],
            m: 0,
        }
    }

    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::set(&mut self.rows[u * w..(u + 1) * w], v);
        bits::set(&mut self.rows[v * w..(v + 1) * w], u);
        self.m += 1;
    }

    /// Builds a graph on `n` vertices from an edge iterator. Rejects
    /// out-of-range endpoints, self-loops, and duplicate edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::blank(n);
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v)) as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::BitIter::new(self.row(v))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![0u64; self.words];
        let mut stack = vec![0usize];
        bits::set(&mut seen, 0);
        let mut found = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !bits::test(&seen, u) {
                    bits::set(&mut seen, u);
                    found += 1;
                    stack.push(u);
                }
            }
        }
        found == self.n
    }

    /// Induced subgraph on the (strictly ascending) vertex list `keep`.
    /// New vertex `i` corresponds to old vertex `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut g = Graph::blank(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g
    }

    /// Induced subgraph obtained by deleting the vertices in `drop`
    /// (need not be sorted; duplicates ignored).
    pub fn delete_vertices(&self, drop: &[usize]) -> Graph {
        let mut dead = vec![false; self.n];
        for &v in drop {
            dead[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !dead[v]).collect();
        self.induced(&keep)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}

/// Role of a vertex in a constructed graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    /// Vertex `i` of the input graph.
    Original(usize),
    /// Shadow of input vertex `i` (adjacent to the neighbors of `i`).
    Shadow(usize),
    /// The apex vertex, adjacent to every shadow.
    Apex,
    /// A vertex added by a join with an edgeless graph.
    JoinAdded,
    /// A degree-one vertex attached by `add_pendant`.
    Pendant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Mycielskian,
    Join,
    PendantAddition,
}

/// Per-vertex roles of a constructed graph, with the construction that
/// produced them.
#[derive(Clone, Debug)]
pub struct VertexLabeling {
    pub construction: Construction,
    pub roles: Vec<VertexRole>,
}

impl VertexLabeling {
    fn for_mycielskian(n: usize) -> VertexLabeling {
        let mut roles = Vec::with_capacity(2 * n + 1);
        roles.extend((0..n).map(VertexRole::Original));
        roles.extend((0..n).map(VertexRole::Shadow));
        roles.push(VertexRole::Apex);
        VertexLabeling {
            construction: Construction::Mycielskian,
            roles,
        }
    }
}

/// The complete graph `K_k`.
pub fn complete_graph(k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::ZeroOrder);
    }
    let mut g = Graph::blank(k);
    for u in 0..k {
        for v in (u + 1)..k {
            g.add_edge_unchecked(u, v);
        }
    }
    Ok(g)
}

/// The edgeless graph on `p` vertices.
pub fn empty_graph(p: usize) -> Result<Graph, GraphError> {
    if p == 0 {
        return Err(GraphError::ZeroOrder);
    }
    Ok(Graph::blank(p))
}

/// Complement on the same vertex set.
pub fn complement(g: &Graph) -> Graph {
    let mut out = Graph::blank(g.n);
    for u in 0..g.n {
        for v in (u + 1)..g.n {
            if !g.has_edge(u, v) {
                out.add_edge_unchecked(u, v);
            }
        }
    }
    out
}

/// Join `G ∨ H`: disjoint union plus all cross edges. Vertices of `g`
/// keep their indices; vertices of `h` are shifted up by `g.n()`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.n + h.n;
    let mut out = Graph::blank(n);
    for (u, v) in g.edges() {
        out.add_edge_unchecked(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge_unchecked(u + g.n, v + g.n);
    }
    for u in 0..g.n {
        for v in 0..h.n {
            out.add_edge_unchecked(u, v + g.n);
        }
    }
    out
}

/// Cartesian product `G □ H`. The pair `(u, v)` is encoded as index
/// `u * h.n() + v`; `(u,v)(x,y)` is an edge iff `u = x` and `vy ∈ E(H)`,
/// or `v = y` and `ux ∈ E(G)`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let n = g.n * h.n;
    let mut out = Graph::blank(n);
    let enc = |u: usize, v: usize| u * h.n + v;
    for u in 0..g.n {
        for (v, y) in h.edges() {
            out.add_edge_unchecked(enc(u, v), enc(u, y));
        }
    }
    for v in 0..h.n {
        for (u, x) in g.edges() {
            out.add_edge_unchecked(enc(u, v), enc(x, v));
        }
    }
    out
}

/// Prism `G □ K_2` with block vertex order: copy 1 at `0..n-1` (pair
/// `(v,1)`), copy 2 at `n..2n-1` (pair `(v,2)`), plus the matching
/// `(v,1)(v,2)`. Same graph as `cartesian_product(g, K_2)` up to the
/// interleaved-vs-block index order.
pub fn prism(g: &Graph) -> Graph {
    let n = g.n;
    let mut out = Graph::blank(2 * n);
    for (u, v) in g.edges() {
        out.add_edge_unchecked(u, v);
        out.add_edge_unchecked(u + n, v + n);
    }
    for v in 0..n {
        out.add_edge_unchecked(v, v + n);
    }
    out
}

/// Mycielskian `M(G)`: originals at `0..n-1`, shadow of vertex `i` at
/// `n+i`, apex at `2n`. Shadows copy their original's neighborhood among
/// the originals; the apex is adjacent to exactly the shadows.
pub fn mycielskian(g: &Graph) -> (Graph, VertexLabeling) {
    let n = g.n;
    let apex = 2 * n;
    let mut out = Graph::blank(2 * n + 1);
    for (u, v) in g.edges() {
        out.add_edge_unchecked(u, v);
        out.add_edge_unchecked(u, v + n);
        out.add_edge_unchecked(v, u + n);
    }
    for i in 0..n {
        out.add_edge_unchecked(i + n, apex);
    }
    (out, VertexLabeling::for_mycielskian(n))
}

/// Adds one new vertex (index `n`) adjacent exactly to `w`.
pub fn add_pendant(g: &Graph, w: usize) -> Result<Graph, GraphError> {
    if w >= g.n {
        return Err(GraphError::VertexOutOfRange { vertex: w, order: g.n });
    }
    let mut out = Graph::blank(g.n + 1);
    for (u, v) in g.edges() {
        out.add_edge_unchecked(u, v);
    }
    out.add_edge_unchecked(w, g.n);
    Ok(out)
}
