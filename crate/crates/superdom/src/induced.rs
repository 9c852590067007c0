//! Induced matchings and II-matchings.
//!
//! An induced matching is one whose covered vertices induce exactly the
//! matching edges. An II-matching splits into two induced matchings; its
//! maximum size is written `ii`. Sizes satisfy `i <= ii <= 2i` and
//! `ii <= alpha'`.

use crate::error::CertificateViolation;
use crate::graph::{EdgeId, Graph};
use crate::matching;

/// A matching partitioned into two induced halves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IiCertificate {
    pub m1: Vec<EdgeId>,
    pub m2: Vec<EdgeId>,
}

impl IiCertificate {
    pub fn size(&self) -> usize {
        self.m1.len() + self.m2.len()
    }

    /// Re-checks every invariant from scratch against `g`.
    pub fn verify(&self, g: &Graph) -> Result<(), CertificateViolation> {
        for &e in self.m1.iter().chain(&self.m2) {
            if e >= g.m() {
                return Err(CertificateViolation::EdgeOutOfRange { edge: e });
            }
        }
        let mut seen = vec![false; g.m()];
        for &e in self.m1.iter().chain(&self.m2) {
            if seen[e] {
                return Err(CertificateViolation::SidesOverlap { edge: e });
            }
            seen[e] = true;
        }
        let mut covered_by = vec![usize::MAX; g.n()];
        for &e in self.m1.iter().chain(&self.m2) {
            let (u, v) = g.edge(e);
            for x in [u, v] {
                if covered_by[x] != usize::MAX {
                    return Err(CertificateViolation::SharedEndpoint {
                        first: covered_by[x],
                        second: e,
                    });
                }
                covered_by[x] = e;
            }
        }
        for half in [&self.m1, &self.m2] {
            for (i, &e) in half.iter().enumerate() {
                let (a, b) = g.edge(e);
                for &f in &half[i + 1..] {
                    let (c, d) = g.edge(f);
                    for x in [a, b] {
                        for y in [c, d] {
                            if g.has_edge(x, y) {
                                return Err(CertificateViolation::NotInduced { u: x, v: y });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

struct Search<'a> {
    g: &'a Graph,
    halves: usize,
    /// 0 free, 1 or 2 when covered by that half.
    cover: Vec<u8>,
    /// Per half, how many covered vertices of that half are adjacent.
    adj: [Vec<u32>; 2],
    chosen: [Vec<EdgeId>; 2],
    best: IiCertificate,
    /// Stop as soon as a solution of this size is found (canonical replay
    /// and the global matching cap both use it).
    stop_at: usize,
    done: bool,
}

impl Search<'_> {
    fn addable(&self, e: EdgeId, h: usize) -> bool {
        let (u, v) = self.g.edge(e);
        self.cover[u] == 0 && self.cover[v] == 0 && self.adj[h][u] == 0 && self.adj[h][v] == 0
    }

    fn apply(&mut self, e: EdgeId, h: usize) {
        let (u, v) = self.g.edge(e);
        self.cover[u] = h as u8 + 1;
        self.cover[v] = h as u8 + 1;
        for x in [u, v] {
            for &w in self.g.neighbors(x) {
                self.adj[h][w] += 1;
            }
        }
        self.chosen[h].push(e);
    }

    fn undo(&mut self, e: EdgeId, h: usize) {
        let (u, v) = self.g.edge(e);
        self.cover[u] = 0;
        self.cover[v] = 0;
        for x in [u, v] {
            for &w in self.g.neighbors(x) {
                self.adj[h][w] -= 1;
            }
        }
        self.chosen[h].pop();
    }

    fn run(&mut self, from: EdgeId) {
        if self.done {
            return;
        }
        let cur = self.chosen[0].len() + self.chosen[1].len();
        if cur > self.best.size() {
            self.best = IiCertificate {
                m1: self.chosen[0].clone(),
                m2: self.chosen[1].clone(),
            };
            if cur >= self.stop_at {
                self.done = true;
                return;
            }
        }
        if from >= self.g.m() {
            return;
        }
        let free = self.cover.iter().filter(|&&c| c == 0).count();
        if cur + free / 2 <= self.best.size() {
            return;
        }
        let mut addable_left = 0;
        for e in from..self.g.m() {
            if (0..self.halves).any(|h| self.addable(e, h)) {
                addable_left += 1;
            }
        }
        if cur + addable_left <= self.best.size() {
            return;
        }
        for e in from..self.g.m() {
            // Symmetry: the very first edge always goes into the first half.
            let halves = if cur == 0 { 1 } else { self.halves };
            for h in 0..halves {
                if self.addable(e, h) {
                    self.apply(e, h);
                    self.run(e + 1);
                    self.undo(e, h);
                    if self.done {
                        return;
                    }
                }
            }
        }
    }
}

fn solve(g: &Graph, halves: usize, stop_at: usize) -> IiCertificate {
    let mut s = Search {
        g,
        halves,
        cover: vec![0; g.n()],
        adj: [vec![0; g.n()], vec![0; g.n()]],
        chosen: [Vec::new(), Vec::new()],
        best: IiCertificate {
            m1: Vec::new(),
            m2: Vec::new(),
        },
        stop_at,
        done: false,
    };
    s.run(0);
    s.best
}

/// Maximum induced matching, returned with an empty second half.
pub fn max_induced_matching(g: &Graph) -> IiCertificate {
    solve(g, 1, matching::max_matching(g).size().max(1))
}

/// Maximum II-matching by branch and bound over edge ids.
pub fn max_ii_matching(g: &Graph) -> IiCertificate {
    solve(g, 2, matching::max_matching(g).size().max(1))
}

/// II-matching number.
pub fn ii_number(g: &Graph) -> usize {
    max_ii_matching(g).size()
}

/// The optimal certificate whose sorted union of edge ids is smallest, with
/// ties broken toward the first half: replay the search, which tries edges
/// in ascending id order and half 1 before half 2, and keep the first
/// optimum it reaches.
pub fn canonical_max_ii_matching(g: &Graph) -> IiCertificate {
    let target = max_ii_matching(g).size();
    if target == 0 {
        return IiCertificate {
            m1: Vec::new(),
            m2: Vec::new(),
        };
    }
    solve(g, 2, target)
}

/// II-matching number of the cycle on `m >= 3` vertices, in closed form.
pub fn ii_cycle_value(m: usize) -> usize {
    assert!(m >= 3);
    match m % 4 {
        0 => m / 2,
        2 => m / 2 - 1,
        _ => (m - 1) / 2,
    }
}
