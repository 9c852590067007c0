//! Structural queries: girth, blocks, even cycles, spanning subgraphs.
//!
//! A component is called even-cycle-free when it contains no cycle of even
//! length. That holds exactly when every block of the component is a single
//! edge or an odd cycle, which is what `block_decompose` reports and what
//! the subdivision formulas consume.

use std::collections::VecDeque;

use crate::error::StructureError;
use crate::graph::{EdgeId, Graph, VertexId};

/// Length of a shortest cycle, or `None` when the graph is a forest.
///
/// Runs one BFS per start vertex; every non-tree edge `(v, w)` seen from
/// start `s` closes a walk of length `dist[v] + dist[w] + 1` through `s`,
/// and the minimum over all starts is exact.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut par_edge = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        par_edge.fill(usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for (&w, &e) in g.neighbors(v).iter().zip(g.incident_edges(v)) {
                if e == par_edge[v] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    par_edge[w] = e;
                    queue.push_back(w);
                } else {
                    let cand = dist[v] + dist[w] + 1;
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// A single bridge edge.
    Bridge,
    /// A chordless cycle of odd length.
    OddCycle,
    /// Anything else; such a block always contains an even cycle.
    Other,
}

#[derive(Clone, Debug)]
pub struct Block {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub kind: BlockKind,
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Component id per vertex, matching `Graph::components`.
    pub component: Vec<usize>,
    /// Per component: true when every block is a bridge or an odd cycle.
    pub component_even_cycle_free: Vec<bool>,
}

impl BlockDecomposition {
    /// Number of components without an even cycle.
    pub fn even_cycle_free_count(&self) -> usize {
        self.component_even_cycle_free.iter().filter(|&&b| b).count()
    }
}

/// Biconnected components via depth-first search with an edge stack.
pub fn block_decompose(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let (component, comp_count) = g.components();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut timer = 0usize;
    let mut estack: Vec<EdgeId> = Vec::new();
    let mut blocks: Vec<Block> = Vec::new();

    let mut close_block = |g: &Graph, estack: &mut Vec<EdgeId>, top_edge: EdgeId| {
        let mut edges = Vec::new();
        while let Some(e) = estack.pop() {
            edges.push(e);
            if e == top_edge {
                break;
            }
        }
        edges.sort_unstable();
        let mut vertices: Vec<VertexId> = edges
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.edge(e);
                [u, v]
            })
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        let kind = if edges.len() == 1 {
            BlockKind::Bridge
        } else if edges.len() == vertices.len() && vertices.len() % 2 == 1 {
            BlockKind::OddCycle
        } else {
            BlockKind::Other
        };
        blocks.push(Block { vertices, edges, kind });
    };

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // frame: (vertex, parent edge, next incident index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, pe, idx) = (frame.0, frame.1, frame.2);
            if idx < g.incident_edges(v).len() {
                frame.2 += 1;
                let e = g.incident_edges(v)[idx];
                if Some(e) == pe {
                    continue;
                }
                let w = g.opposite(e, v);
                if disc[w] == usize::MAX {
                    estack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    estack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(parent) = stack.last() {
                    let u = parent.0;
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        close_block(g, &mut estack, pe.expect("non-root has a parent edge"));
                    }
                }
            }
        }
    }

    let mut component_even_cycle_free = vec![true; comp_count];
    for b in &blocks {
        if b.kind == BlockKind::Other {
            component_even_cycle_free[component[b.vertices[0]]] = false;
        }
    }
    BlockDecomposition {
        blocks,
        component,
        component_even_cycle_free,
    }
}

/// Any simple cycle as a vertex sequence (closing edge implied), or `None`
/// in a forest.
pub fn find_cycle(g: &Graph) -> Option<Vec<VertexId>> {
    let all = vec![true; g.m()];
    let (component, count) = g.components();
    let mut rep = vec![usize::MAX; count];
    for v in 0..g.n() {
        if rep[component[v]] == usize::MAX {
            rep[component[v]] = v;
        }
    }
    rep.into_iter()
        .filter(|&r| r != usize::MAX)
        .find_map(|r| dfs_cycle(g, r, &all))
}

/// Finds a simple even cycle as a vertex sequence (closing edge implied),
/// or `None` when no component has one.
pub fn find_even_cycle(g: &Graph) -> Option<Vec<VertexId>> {
    let dec = block_decompose(g);
    for b in &dec.blocks {
        if b.kind != BlockKind::Other {
            continue;
        }
        return Some(even_cycle_in_block(g, b));
    }
    None
}

/// Extracts an even cycle from a block that is neither a bridge nor an odd
/// cycle. Any cycle of the block works when it is even; an odd cycle is
/// repaired with a chord or an ear, one of whose two sub-cycles must be even.
fn even_cycle_in_block(g: &Graph, b: &Block) -> Vec<VertexId> {
    let in_block_edge = mark(g.m(), &b.edges);
    let in_block_vertex = mark(g.n(), &b.vertices);

    let cycle = dfs_cycle(g, b.vertices[0], &in_block_edge).expect("block with 2+ edges has a cycle");
    if cycle.len() % 2 == 0 {
        return cycle;
    }

    let len = cycle.len();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }

    // Chord: a block edge joining two non-consecutive cycle vertices.
    for &e in &b.edges {
        let (x, y) = g.edge(e);
        if pos[x] == usize::MAX || pos[y] == usize::MAX {
            continue;
        }
        let gap = pos[x].abs_diff(pos[y]);
        if gap != 1 && gap != len - 1 {
            return splice(&cycle, &[x, y]);
        }
    }

    // Ear: a path between two cycle vertices through vertices off the cycle.
    for &start in &b.vertices {
        if pos[start] != usize::MAX {
            continue;
        }
        if !g.neighbors(start).iter().zip(g.incident_edges(start)).any(|(&w, &e)| {
            in_block_edge[e] && pos[w] != usize::MAX
        }) {
            continue;
        }
        // BFS through off-cycle block vertices from `start`.
        let mut parent = vec![usize::MAX; g.n()];
        let mut seen = vec![false; g.n()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut attachments: Vec<(VertexId, VertexId)> = Vec::new(); // (cycle vertex, via)
        while let Some(v) = queue.pop_front() {
            for (&w, &e) in g.neighbors(v).iter().zip(g.incident_edges(v)) {
                if !in_block_edge[e] || !in_block_vertex[w] {
                    continue;
                }
                if pos[w] != usize::MAX {
                    if !attachments.iter().any(|&(c, _)| c == w) {
                        attachments.push((w, v));
                    }
                } else if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if attachments.len() >= 2 {
            let (x, via_x) = attachments[0];
            let (y, via_y) = attachments[1];
            // Path x .. y through the searched region.
            let mut left = vec![x];
            let mut v = via_x;
            while v != usize::MAX {
                left.push(v);
                v = parent[v];
            }
            // left = x, via_x, ..., start. Now extend start .. via_y reversed.
            let mut right = Vec::new();
            let mut v = via_y;
            while v != usize::MAX {
                right.push(v);
                v = parent[v];
            }
            // right = via_y, ..., start; drop the shared tail with `left`.
            right.reverse();
            let mut path = left;
            let shared = path
                .iter()
                .rev()
                .zip(right.iter())
                .take_while(|(a, b)| a == b)
                .count();
            path.truncate(path.len() - shared);
            path.extend_from_slice(&right[shared - 1..]);
            // The trims above can leave the meeting vertex duplicated; dedup
            // conservatively while preserving order.
            dedup_keep_order(&mut path);
            path.push(y);
            return splice(&cycle, &path);
        }
    }
    unreachable!("a block that is neither a bridge nor an odd cycle has a chord or an ear");
}

fn mark(len: usize, ids: &[usize]) -> Vec<bool> {
    let mut f = vec![false; len];
    for &i in ids {
        f[i] = true;
    }
    f
}

fn dedup_keep_order(path: &mut Vec<VertexId>) {
    let mut seen = std::collections::HashSet::new();
    path.retain(|&v| seen.insert(v));
}

/// Any simple cycle using only flagged edges, starting the search at `root`.
fn dfs_cycle(g: &Graph, root: VertexId, edge_ok: &[bool]) -> Option<Vec<VertexId>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n]; // 0 new, 1 on stack, 2 done
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
    state[root] = 1;
    while let Some(frame) = stack.last_mut() {
        let (v, pe, idx) = (frame.0, frame.1, frame.2);
        if idx >= g.incident_edges(v).len() {
            state[v] = 2;
            stack.pop();
            continue;
        }
        frame.2 += 1;
        let e = g.incident_edges(v)[idx];
        if !edge_ok[e] || Some(e) == pe {
            continue;
        }
        let w = g.opposite(e, v);
        if state[w] == 0 {
            state[w] = 1;
            parent[w] = v;
            stack.push((w, Some(e), 0));
        } else if state[w] == 1 {
            // Back edge: walk v up to w.
            let mut cycle = vec![v];
            let mut cur = v;
            while cur != w {
                cur = parent[cur];
                cycle.push(cur);
            }
            return Some(cycle);
        }
    }
    None
}

/// Replaces one arc of `cycle` by `path` (a simple x..y path meeting the
/// cycle only at its endpoints) and returns whichever of the two resulting
/// cycles is even. Exactly one is, because the cycle is odd.
fn splice(cycle: &[VertexId], path: &[VertexId]) -> Vec<VertexId> {
    let len = cycle.len();
    let pos_of = |v: VertexId| cycle.iter().position(|&c| c == v).unwrap();
    let (x, y) = (path[0], path[path.len() - 1]);
    let (i, j) = (pos_of(x), pos_of(y));
    let p = path.len() - 1; // edges in the path

    // Arc from y forward to x (cyclically), excluding endpoints.
    let forward: Vec<VertexId> = (1..(i + len - j) % len)
        .map(|s| cycle[(j + s) % len])
        .collect();
    // Arc from y backward to x, excluding endpoints.
    let backward: Vec<VertexId> = (1..(j + len - i) % len)
        .map(|s| cycle[(j + len - s) % len])
        .collect();

    let pick = |arc: &[VertexId]| -> Vec<VertexId> {
        let mut out = path.to_vec();
        out.extend_from_slice(arc);
        out
    };
    if (p + forward.len() + 1) % 2 == 0 {
        pick(&forward)
    } else {
        debug_assert_eq!((p + backward.len() + 1) % 2, 0);
        pick(&backward)
    }
}

#[derive(Clone, Debug)]
pub struct SpanningStructure {
    /// Edge ids of the spanning subgraph: a tree (`n - 1` edges) or a
    /// unicyclic subgraph (`n` edges) whose unique cycle is even.
    pub edges: Vec<EdgeId>,
    /// Proper 2-coloring of the spanning subgraph.
    pub coloring: Vec<u8>,
    /// The even cycle when one was requested.
    pub cycle: Option<Vec<VertexId>>,
}

/// Builds a spanning tree, or, when `want_even_cycle` is set, a unicyclic
/// spanning subgraph containing an even cycle. The subgraph is bipartite
/// either way and comes with a proper 2-coloring.
pub fn spanning_structure(
    g: &Graph,
    want_even_cycle: bool,
) -> Result<SpanningStructure, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::NotConnected);
    }
    let n = g.n();
    let mut edges = Vec::new();
    let mut coloring = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    let mut cycle_out = None;

    if want_even_cycle {
        let cycle = find_even_cycle(g).ok_or(StructureError::NoEvenCycle)?;
        for (i, &v) in cycle.iter().enumerate() {
            coloring[v] = (i % 2) as u8;
            queue.push_back(v);
            let w = cycle[(i + 1) % cycle.len()];
            edges.push(g.edge_between(v, w).expect("cycle edges exist"));
        }
        cycle_out = Some(cycle);
    } else if n > 0 {
        coloring[0] = 0;
        queue.push_back(0);
    }

    while let Some(v) = queue.pop_front() {
        for (&w, &e) in g.neighbors(v).iter().zip(g.incident_edges(v)) {
            if coloring[w] == u8::MAX {
                coloring[w] = coloring[v] ^ 1;
                edges.push(e);
                queue.push_back(w);
            }
        }
    }
    edges.sort_unstable();
    Ok(SpanningStructure {
        edges,
        coloring,
        cycle: cycle_out,
    })
}
