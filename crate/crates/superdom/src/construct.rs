//! Graph constructions: edge subdivision and the lexicographic product
//! with a complete graph on four vertices.

use crate::graph::{EdgeId, Graph, VertexId};

/// The `k`-subdivision of a base graph together with the id bookkeeping
/// needed to talk about both graphs at once.
///
/// Base vertices keep their ids. The edge with id `e` becomes a path of
/// `k + 1` edges whose interior vertices, listed from the smaller base
/// endpoint, get ids `n + e*k .. n + e*k + k - 1`.
#[derive(Clone, Debug)]
pub struct SubdivisionMap {
    pub graph: Graph,
    pub base_n: usize,
    pub k: usize,
}

impl SubdivisionMap {
    /// Interior vertex at position `s` (1-based) counted from base vertex
    /// `from`, which must be an endpoint of base edge `e`.
    pub fn path_vertex(&self, base: &Graph, e: EdgeId, from: VertexId, s: usize) -> VertexId {
        debug_assert!((1..=self.k).contains(&s));
        let (u, v) = base.edge(e);
        debug_assert!(from == u || from == v);
        let from_smaller = if from == u { s } else { self.k + 1 - s };
        self.base_n + e * self.k + (from_smaller - 1)
    }

    /// The full path replacing base edge `e`, listed from `from` to the
    /// opposite endpoint: `k + 2` vertices including both base endpoints.
    pub fn super_edge(&self, base: &Graph, e: EdgeId, from: VertexId) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.k + 2);
        out.push(from);
        for s in 1..=self.k {
            out.push(self.path_vertex(base, e, from, s));
        }
        out.push(base.opposite(e, from));
        out
    }

    /// True for ids belonging to the base graph rather than an interior path.
    pub fn is_base_vertex(&self, v: VertexId) -> bool {
        v < self.base_n
    }
}

/// Replaces every edge of `g` by a path with `k` interior vertices.
/// `k = 0` returns an isomorphic copy with identical ids.
pub fn subdivide(g: &Graph, k: usize) -> SubdivisionMap {
    let n = g.n();
    let mut out = Graph::new(n + k * g.m());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if k == 0 {
            out.add_edge(u, v).expect("base edges are simple");
            continue;
        }
        let first = n + e * k;
        out.add_edge(u, first).expect("fresh interior vertex");
        for s in 0..k - 1 {
            out.add_edge(first + s, first + s + 1).expect("fresh interior vertices");
        }
        out.add_edge(first + k - 1, v).expect("fresh interior vertex");
    }
    SubdivisionMap {
        graph: out,
        base_n: n,
        k,
    }
}

/// Graph on the same vertex set joining every pair at distance one or two.
pub fn square(g: &Graph) -> Graph {
    let n = g.n();
    let mut out = Graph::new(n);
    for u in 0..n {
        for w in u + 1..n {
            let close = g.has_edge(u, w)
                || g.neighbors(u).iter().any(|&x| g.has_edge(x, w));
            if close {
                out.add_edge(u, w).expect("pairs visited once");
            }
        }
    }
    out
}

/// The lexicographic product of a base graph with a complete graph on four
/// vertices, plus the id bookkeeping: base vertex `x` expands to the fiber
/// `4x .. 4x + 3`, a clique; every base edge expands to all sixteen pairs
/// between the two fibers.
#[derive(Clone, Debug)]
pub struct ProductMap {
    pub graph: Graph,
    pub base_n: usize,
}

impl ProductMap {
    pub fn fiber(&self, x: VertexId) -> [VertexId; 4] {
        [4 * x, 4 * x + 1, 4 * x + 2, 4 * x + 3]
    }

    pub fn base_of(&self, v: VertexId) -> VertexId {
        v / 4
    }
}

/// Builds the lexicographic product with a four-vertex clique.
pub fn lex_product_k4(g: &Graph) -> ProductMap {
    let mut out = Graph::new(4 * g.n());
    for x in 0..g.n() {
        for i in 0..4 {
            for j in i + 1..4 {
                out.add_edge(4 * x + i, 4 * x + j).expect("fiber clique");
            }
        }
    }
    for &(x, y) in g.edges() {
        for i in 0..4 {
            for j in 0..4 {
                out.add_edge(4 * x + i, 4 * y + j).expect("cross pairs");
            }
        }
    }
    ProductMap {
        graph: out,
        base_n: g.n(),
    }
}
