//! Simple undirected graphs with stable vertex and edge ids.
//!
//! Vertices are `0..n`. Edges are stored as `(u, v)` pairs with `u < v`;
//! the position in the edge list is the edge id. Ids are dense and never
//! reused, which lets the subdivision and reduction code address edges
//! positionally.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
    inc: Vec<Vec<EdgeId>>,
    index: HashMap<(VertexId, VertexId), EdgeId>,
}

impl Graph {
    /// Creates a graph with `n` vertices and no edges.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            inc: vec![Vec::new(); n],
            index: HashMap::new(),
        }
    }

    /// Builds a graph from an edge iterator, rejecting loops and duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Adds the edge `{u, v}` and returns its id.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u.max(v),
                n: self.n,
            });
        }
        if u == v {
            return Err(GraphError::Loop { vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if self.index.contains_key(&key) {
            return Err(GraphError::DuplicateEdge { u: key.0, v: key.1 });
        }
        let id = self.edges.len();
        self.edges.push(key);
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.inc[u].push(id);
        self.inc[v].push(id);
        self.index.insert(key, id);
        Ok(id)
    }

    /// Neighbors of `v` in insertion order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    /// Ids of edges incident to `v`, parallel to `neighbors`.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.inc[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Endpoints of edge `e` with the smaller vertex first.
    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.index.contains_key(&(u.min(v), u.max(v)))
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    /// The other endpoint of edge `e`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if v == a {
            b
        } else {
            a
        }
    }

    /// Parses the plain edge-list format: a header line `n m` followed by
    /// `m` lines `u v`. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines.next().ok_or(ParseError::MissingHeader)?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::BadHeader { line: line_no })?;
        let m: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError::BadHeader { line: line_no })?;
        if parts.next().is_some() {
            return Err(ParseError::BadHeader { line: line_no });
        }
        let mut g = Graph::new(n);
        let mut seen = 0usize;
        for (line_no, line) in lines {
            let mut parts = line.split_whitespace();
            let u: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(ParseError::BadEdgeLine { line: line_no })?;
            let v: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(ParseError::BadEdgeLine { line: line_no })?;
            if parts.next().is_some() {
                return Err(ParseError::BadEdgeLine { line: line_no });
            }
            g.add_edge(u, v)
                .map_err(|source| ParseError::BadEdge { line: line_no, source })?;
            seen += 1;
        }
        if seen != m {
            return Err(ParseError::EdgeCountMismatch { header: m, seen });
        }
        Ok(g)
    }

    /// Serializes to the edge-list format with edges sorted `(u, v)`
    /// lexicographically, so equal graphs emit identical bytes.
    pub fn to_edge_list(&self) -> String {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, sorted.len());
        for (u, v) in sorted {
            let _ = writeln!(out, "{} {}", u, v);
        }
        out
    }

    /// Component id for every vertex plus the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().1 == 1
    }

    /// Splits into component subgraphs. Each entry carries the subgraph,
    /// its local-to-global vertex map, and its local-to-global edge map.
    pub fn component_subgraphs(&self) -> Vec<(Graph, Vec<VertexId>, Vec<EdgeId>)> {
        let (comp, count) = self.components();
        let mut vmaps: Vec<Vec<VertexId>> = vec![Vec::new(); count];
        let mut local = vec![0usize; self.n];
        for v in 0..self.n {
            local[v] = vmaps[comp[v]].len();
            vmaps[comp[v]].push(v);
        }
        let mut graphs: Vec<Graph> = vmaps.iter().map(|vm| Graph::new(vm.len())).collect();
        let mut emaps: Vec<Vec<EdgeId>> = vec![Vec::new(); count];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            let c = comp[u];
            graphs[c]
                .add_edge(local[u], local[v])
                .expect("component edge is simple");
            emaps[c].push(id);
        }
        graphs
            .into_iter()
            .zip(vmaps)
            .zip(emaps)
            .map(|((g, vm), em)| (g, vm, em))
            .collect()
    }

    /// Proper 2-coloring per component, or `None` if some component has an
    /// odd cycle. Colors are 0/1 with the smallest vertex of each component
    /// colored 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = color[v] ^ 1;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// BFS distances from `src`; unreachable vertices get `None`.
    pub fn bfs_distances(&self, src: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True when every component is a tree.
    pub fn is_forest(&self) -> bool {
        let (_, count) = self.components();
        self.m() + count == self.n
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for &(u, v) in &self.edges {
            g.add_edge(u, v).expect("edges stay simple");
        }
        for &(u, v) in &other.edges {
            g.add_edge(u + self.n, v + self.n).expect("edges stay simple");
        }
        g
    }

    // ----- named families -------------------------------------------------

    /// Path on `n` vertices, 0 - 1 - ... - (n-1).
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0).unwrap();
        g
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v).unwrap();
        }
        g
    }

    /// Triangle 0-1-2 with a pendant vertex 3 attached to 2.
    pub fn paw() -> Self {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
    }

    /// Complete bipartite graph with parts `a` and `b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in 0..b {
                g.add_edge(u, a + v).unwrap();
            }
        }
        g
    }
}
