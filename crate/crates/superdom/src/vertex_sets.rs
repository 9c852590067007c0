//! Exact vertex-set solvers: maximum independent set, minimum dominating
//! set, and maximum 2-packing. All are branch-and-bound searches meant for
//! desk-scale inputs; pruning only discards provably dominated branches.

use crate::construct::square;
use crate::graph::{Graph, VertexId};

fn alive_degree(g: &Graph, alive: &[bool], v: VertexId) -> usize {
    g.neighbors(v).iter().filter(|&&w| alive[w]).count()
}

/// Exact maximum independent set size among `alive` vertices; `picked`
/// accumulates one optimal set when `track` is set.
fn mis_search(g: &Graph, mut alive: Vec<bool>, cur: Vec<VertexId>, best: &mut Vec<VertexId>) {
    let mut cur = cur;
    loop {
        // Degree-0 and degree-1 vertices can join the set without loss.
        let mut changed = false;
        for v in 0..g.n() {
            if !alive[v] {
                continue;
            }
            match alive_degree(g, &alive, v) {
                0 => {
                    alive[v] = false;
                    cur.push(v);
                    changed = true;
                }
                1 => {
                    let w = *g.neighbors(v).iter().find(|&&w| alive[w]).unwrap();
                    alive[v] = false;
                    alive[w] = false;
                    cur.push(v);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let alive_count = alive.iter().filter(|&&a| a).count();
    if alive_count == 0 {
        if cur.len() > best.len() {
            *best = cur;
        }
        return;
    }
    if cur.len() + alive_count <= best.len() {
        return;
    }
    // Branch on the highest remaining degree, smallest id on ties.
    let v = (0..g.n())
        .filter(|&v| alive[v])
        .max_by_key(|&v| (alive_degree(g, &alive, v), std::cmp::Reverse(v)))
        .unwrap();
    let mut with_v = alive.clone();
    with_v[v] = false;
    for &w in g.neighbors(v) {
        with_v[w] = false;
    }
    let mut cur_with = cur.clone();
    cur_with.push(v);
    mis_search(g, with_v, cur_with, best);
    alive[v] = false;
    mis_search(g, alive, cur, best);
}

/// Maximum independent set, sorted by id.
pub fn max_independent(g: &Graph) -> Vec<VertexId> {
    let mut best = Vec::new();
    mis_search(g, vec![true; g.n()], Vec::new(), &mut best);
    best.sort_unstable();
    best
}

fn mis_size_among(g: &Graph, alive: Vec<bool>) -> usize {
    let mut best = Vec::new();
    mis_search(g, alive, Vec::new(), &mut best);
    best.len()
}

/// The maximum independent set that is lexicographically smallest as a
/// sorted id list, built by greedy inclusion with exact feasibility checks.
pub fn canonical_max_independent(g: &Graph) -> Vec<VertexId> {
    let target = max_independent(g).len();
    let mut alive = vec![true; g.n()];
    let mut picked = Vec::new();
    for v in 0..g.n() {
        if !alive[v] || picked.len() == target {
            continue;
        }
        let mut trial = alive.clone();
        trial[v] = false;
        for &w in g.neighbors(v) {
            trial[w] = false;
        }
        if picked.len() + 1 + mis_size_among(g, trial.clone()) == target {
            picked.push(v);
            alive = trial;
        } else {
            // v is in no optimal extension of the current prefix.
            alive[v] = false;
        }
    }
    picked
}

/// Maximum 2-packing: pairwise distance at least 3, so an independent set
/// of the square graph.
pub fn max_2packing(g: &Graph) -> Vec<VertexId> {
    max_independent(&square(g))
}

/// Lexicographically smallest maximum 2-packing.
pub fn canonical_max_2packing(g: &Graph) -> Vec<VertexId> {
    canonical_max_independent(&square(g))
}

fn dominates(g: &Graph, d: &[VertexId]) -> Vec<bool> {
    let mut covered = vec![false; g.n()];
    for &v in d {
        covered[v] = true;
        for &w in g.neighbors(v) {
            covered[w] = true;
        }
    }
    covered
}

fn mds_search(g: &Graph, cur: &mut Vec<VertexId>, best: &mut Vec<VertexId>) {
    let covered = dominates(g, cur);
    let undominated: Vec<VertexId> = (0..g.n()).filter(|&v| !covered[v]).collect();
    if undominated.is_empty() {
        if cur.len() < best.len() {
            *best = cur.clone();
        }
        return;
    }
    let max_closed = undominated
        .iter()
        .map(|&v| g.degree(v) + 1)
        .max()
        .unwrap()
        .max(1);
    if cur.len() + undominated.len().div_ceil(max_closed) >= best.len() {
        return;
    }
    // Some vertex of N[v] must enter any dominating set.
    let v = undominated[0];
    let mut candidates = vec![v];
    candidates.extend_from_slice(g.neighbors(v));
    candidates.sort_unstable();
    for u in candidates {
        cur.push(u);
        mds_search(g, cur, best);
        cur.pop();
    }
}

/// Minimum dominating set, sorted by id.
pub fn min_dominating(g: &Graph) -> Vec<VertexId> {
    let mut best: Vec<VertexId> = (0..g.n()).collect();
    mds_search(g, &mut Vec::new(), &mut best);
    best.sort_unstable();
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{max_2packing_brute, max_independent_brute, min_dominating_brute};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn assert_independent(g: &Graph, s: &[VertexId]) {
        for (i, &u) in s.iter().enumerate() {
            for &w in &s[i + 1..] {
                assert!(!g.has_edge(u, w), "{u} and {w} are adjacent");
            }
        }
    }

    #[test]
    fn independent_set_values() {
        assert_eq!(max_independent(&Graph::cycle(5)).len(), 2);
        assert_eq!(max_independent(&Graph::complete(4)).len(), 1);
        assert_eq!(max_independent(&Graph::path(6)).len(), 3);
        assert_eq!(max_independent(&Graph::star(6)).len(), 6);
        assert_eq!(max_independent(&Graph::complete_bipartite(3, 4)).len(), 4);
    }

    #[test]
    fn independent_sets_are_valid_and_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for round in 0..40 {
            let n = 3 + round % 8;
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_range(0..3) == 0 {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let s = max_independent(&g);
            assert_independent(&g, &s);
            assert_eq!(s.len(), max_independent_brute(&g));
        }
    }

    #[test]
    fn canonical_independent_sets_are_lex_minimal() {
        assert_eq!(canonical_max_independent(&Graph::path(5)), vec![0, 2, 4]);
        assert_eq!(canonical_max_independent(&Graph::cycle(4)), vec![0, 2]);
        assert_eq!(canonical_max_independent(&Graph::star(3)), vec![1, 2, 3]);
        assert_eq!(canonical_max_independent(&Graph::cycle(7)).len(), 3);
    }

    #[test]
    fn two_packing_values() {
        assert_eq!(max_2packing(&Graph::path(4)).len(), 2);
        assert_eq!(max_2packing(&Graph::complete(5)).len(), 1);
        assert_eq!(max_2packing(&Graph::cycle(6)).len(), 2);
        assert_eq!(max_2packing(&Graph::cycle(9)).len(), 3);
        assert_eq!(max_2packing(&Graph::path(7)).len(), 3);
        assert_eq!(
            max_2packing(&Graph::star(4)).len(),
            max_2packing_brute(&Graph::star(4))
        );
        assert_eq!(canonical_max_2packing(&Graph::path(7)), vec![0, 3, 6]);
    }

    #[test]
    fn dominating_set_values() {
        assert_eq!(min_dominating(&Graph::cycle(5)).len(), 2);
        assert_eq!(min_dominating(&Graph::path(4)).len(), 2);
        assert_eq!(min_dominating(&Graph::star(7)).len(), 1);
        assert_eq!(min_dominating(&Graph::path(7)).len(), 3);
        assert_eq!(min_dominating(&Graph::new(3)).len(), 3);
    }

    #[test]
    fn dominating_sets_are_valid_and_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for round in 0..30 {
            let n = 2 + round % 8;
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_range(0..2) == 0 {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let d = min_dominating(&g);
            assert!(dominates(&g, &d).iter().all(|&c| c));
            assert_eq!(d.len(), min_dominating_brute(&g));
        }
    }
}
