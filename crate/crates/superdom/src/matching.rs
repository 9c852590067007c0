//! Maximum matching in general graphs via blossom contraction.

use std::collections::VecDeque;

use crate::graph::{EdgeId, Graph, VertexId};

const NONE: usize = usize::MAX;

/// A matching stored as a mate table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<usize>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.mate.iter().filter(|&&m| m != NONE).count() / 2
    }

    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        (self.mate[v] != NONE).then_some(self.mate[v])
    }

    pub fn covers(&self, v: VertexId) -> bool {
        self.mate[v] != NONE
    }

    /// Matched pairs `(u, v)` with `u < v`, in increasing order.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(v, &m)| m != NONE && v < m)
            .map(|(v, &m)| (v, m))
            .collect()
    }

    /// Edge ids of the matched pairs, in increasing order.
    pub fn edge_ids(&self, g: &Graph) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = self
            .pairs()
            .into_iter()
            .map(|(u, v)| g.edge_between(u, v).expect("matched pairs are edges"))
            .collect();
        ids.sort_unstable();
        ids
    }

    /// Builds a matching from explicit pairs; panics on shared endpoints.
    pub fn from_pairs(n: usize, pairs: &[(VertexId, VertexId)]) -> Matching {
        let mut mate = vec![NONE; n];
        for &(u, v) in pairs {
            assert!(mate[u] == NONE && mate[v] == NONE && u != v);
            mate[u] = v;
            mate[v] = u;
        }
        Matching { mate }
    }
}

struct Search<'a> {
    g: &'a Graph,
    alive: &'a [bool],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

impl Search<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns an exposed vertex whose
    /// parent chain augments the matching, or `NONE`.
    fn find_path(&mut self, root: usize) -> usize {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in self.g.neighbors(v) {
                if !self.alive[w] || self.base[v] == self.base[w] || self.mate[v] == w {
                    continue;
                }
                if w == root || (self.mate[w] != NONE && self.parent[self.mate[w]] != NONE) {
                    // Even vertex reached: contract the blossom.
                    let cur = self.lca(v, w);
                    self.blossom.fill(false);
                    self.mark_path(v, cur, w);
                    self.mark_path(w, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[w] == NONE {
                    self.parent[w] = v;
                    if self.mate[w] == NONE {
                        return w;
                    }
                    self.used[self.mate[w]] = true;
                    queue.push_back(self.mate[w]);
                }
            }
        }
        NONE
    }
}

fn max_matching_filtered(g: &Graph, alive: &[bool]) -> Matching {
    let n = g.n();
    let mut s = Search {
        g,
        alive,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: vec![0; n],
        used: vec![false; n],
        blossom: vec![false; n],
    };
    // Greedy warm start.
    for v in 0..n {
        if alive[v] && s.mate[v] == NONE {
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| alive[w] && s.mate[w] == NONE) {
                s.mate[v] = w;
                s.mate[w] = v;
            }
        }
    }
    for v in 0..n {
        if alive[v] && s.mate[v] == NONE {
            let mut u = s.find_path(v);
            while u != NONE {
                let pv = s.parent[u];
                let ppv = s.mate[pv];
                s.mate[u] = pv;
                s.mate[pv] = u;
                u = ppv;
            }
        }
    }
    Matching { mate: s.mate }
}

/// Maximum matching of the whole graph.
pub fn max_matching(g: &Graph) -> Matching {
    max_matching_filtered(g, &vec![true; g.n()])
}

/// Maximum matching size among vertices not flagged in `banned`.
pub fn max_matching_avoiding(g: &Graph, banned: &[bool]) -> usize {
    let alive: Vec<bool> = banned.iter().map(|&b| !b).collect();
    max_matching_filtered(g, &alive).size()
}

/// The maximum matching whose sorted edge-id list is lexicographically
/// smallest, found by greedy inclusion with exact feasibility checks.
pub fn canonical_max_matching(g: &Graph) -> Matching {
    let total = max_matching(g).size();
    let mut alive = vec![true; g.n()];
    let mut picked: Vec<(VertexId, VertexId)> = Vec::new();
    for e in 0..g.m() {
        if picked.len() == total {
            break;
        }
        let (u, v) = g.edge(e);
        if !alive[u] || !alive[v] {
            continue;
        }
        alive[u] = false;
        alive[v] = false;
        if picked.len() + 1 + max_matching_filtered(g, &alive).size() == total {
            picked.push((u, v));
        } else {
            alive[u] = true;
            alive[v] = true;
        }
    }
    Matching::from_pairs(g.n(), &picked)
}
