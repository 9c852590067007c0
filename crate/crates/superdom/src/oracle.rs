//! Brute-force reference implementations.
//!
//! Everything here trades speed for obviousness: subset scans, plain
//! recursion, and textbook augmenting paths. The fast solvers elsewhere in
//! the crate are tested against these on small instances, so nothing in
//! this module may call into those solvers.

use crate::construct::square;
use crate::graph::{Graph, VertexId};

/// Largest vertex count accepted by the subset-scanning oracles.
pub const MASK_LIMIT: usize = 20;

fn neighbor_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn mask_to_set(mut mask: u64) -> Vec<VertexId> {
    let mut out = Vec::new();
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Checks the defining witness condition for `d` as a bitmask.
pub fn is_super_dom_mask(g: &Graph, d: u64) -> bool {
    let n = g.n();
    assert!(n <= MASK_LIMIT + 44, "mask oracle limited to 64 vertices");
    let nb = neighbor_masks(g);
    let full = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let outside = full & !d;
    let mut witnessed = 0u64;
    let mut rest = d & full;
    while rest != 0 {
        let y = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let private = nb[y] & outside;
        if private.count_ones() == 1 {
            witnessed |= private;
        }
    }
    witnessed == outside
}

/// Minimum super dominating set by scanning all vertex subsets.
pub fn gamma_sp_by_subsets(g: &Graph) -> (usize, Vec<VertexId>) {
    let n = g.n();
    assert!(n <= MASK_LIMIT, "subset scan limited to {MASK_LIMIT} vertices");
    let mut best_mask = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
    let mut best = n;
    for d in 0..1u64 << n {
        if (d.count_ones() as usize) < best && is_super_dom_mask(g, d) {
            best = d.count_ones() as usize;
            best_mask = d;
        }
    }
    (best, mask_to_set(best_mask))
}

/// All minimum super dominating sets, as bitmasks in increasing order.
pub fn min_super_dom_masks(g: &Graph) -> (usize, Vec<u64>) {
    let n = g.n();
    assert!(n <= MASK_LIMIT);
    let (best, _) = gamma_sp_by_subsets(g);
    let masks = (0..1u64 << n)
        .filter(|&d| d.count_ones() as usize == best && is_super_dom_mask(g, d))
        .collect();
    (best, masks)
}

/// Maximum matching size by branching on the lowest uncovered vertex.
pub fn max_matching_brute(g: &Graph) -> usize {
    fn rec(g: &Graph, from: VertexId, used: &mut [bool]) -> usize {
        let mut v = from;
        while v < g.n() && used[v] {
            v += 1;
        }
        if v >= g.n() {
            return 0;
        }
        used[v] = true;
        let mut best = rec(g, v + 1, used);
        for &w in g.neighbors(v) {
            if !used[w] {
                used[w] = true;
                best = best.max(1 + rec(g, v + 1, used));
                used[w] = false;
            }
        }
        used[v] = false;
        best
    }
    rec(g, 0, &mut vec![false; g.n()])
}

/// Maximum independent set size by include/exclude recursion.
pub fn max_independent_brute(g: &Graph) -> usize {
    assert!(g.n() <= MASK_LIMIT + 4);
    let nb = neighbor_masks(g);
    fn rec(nb: &[u64], avail: u64) -> usize {
        if avail == 0 {
            return 0;
        }
        let v = avail.trailing_zeros() as usize;
        let include = 1 + rec(nb, avail & !(nb[v] | 1 << v));
        let exclude = rec(nb, avail & !(1u64 << v));
        include.max(exclude)
    }
    let full = if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 };
    rec(&nb, full)
}

/// Minimum dominating set size by scanning all vertex subsets.
pub fn min_dominating_brute(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= MASK_LIMIT);
    let nb = neighbor_masks(g);
    let closed: Vec<u64> = (0..n).map(|v| nb[v] | 1 << v).collect();
    let full = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
    let mut best = n;
    for d in 0..1u64 << n {
        if (d.count_ones() as usize) < best {
            let covered = mask_to_set(d).iter().fold(0u64, |m, &v| m | closed[v]);
            if covered == full {
                best = d.count_ones() as usize;
            }
        }
    }
    best
}

/// Maximum 2-packing size: an independent set of the square graph.
pub fn max_2packing_brute(g: &Graph) -> usize {
    max_independent_brute(&square(g))
}

fn edges_conflict(g: &Graph, a: (VertexId, VertexId), b: (VertexId, VertexId)) -> bool {
    [a.0, a.1]
        .into_iter()
        .any(|x| [b.0, b.1].into_iter().any(|y| g.has_edge(x, y)))
}

/// Maximum induced matching size by branching on the lowest uncovered vertex.
pub fn max_induced_matching_brute(g: &Graph) -> usize {
    fn rec(
        g: &Graph,
        from: VertexId,
        covered: &mut [bool],
        chosen: &mut Vec<(VertexId, VertexId)>,
    ) -> usize {
        let mut v = from;
        while v < g.n() && covered[v] {
            v += 1;
        }
        if v >= g.n() {
            return chosen.len();
        }
        covered[v] = true;
        let mut best = rec(g, v + 1, covered, chosen);
        for &w in g.neighbors(v) {
            if w < v || covered[w] {
                continue;
            }
            if chosen.iter().any(|&f| edges_conflict(g, (v, w), f)) {
                continue;
            }
            covered[w] = true;
            chosen.push((v, w));
            best = best.max(rec(g, v + 1, covered, chosen));
            chosen.pop();
            covered[w] = false;
        }
        covered[v] = false;
        best
    }
    rec(g, 0, &mut vec![false; g.n()], &mut Vec::new())
}

/// Largest matching that splits into two induced matchings, or `None` when
/// the node budget runs out before the search is exhausted.
pub fn max_ii_brute(g: &Graph, budget: u64) -> Option<usize> {
    struct State<'a> {
        g: &'a Graph,
        covered: Vec<bool>,
        halves: [Vec<(VertexId, VertexId)>; 2],
        best: usize,
        nodes: u64,
        exhausted: bool,
    }
    fn rec(s: &mut State, from: VertexId) {
        if s.nodes == 0 {
            s.exhausted = true;
            return;
        }
        s.nodes -= 1;
        let n = s.g.n();
        let mut v = from;
        while v < n && s.covered[v] {
            v += 1;
        }
        let cur = s.halves[0].len() + s.halves[1].len();
        s.best = s.best.max(cur);
        if v >= n {
            return;
        }
        let free = (v..n).filter(|&x| !s.covered[x]).count();
        if cur + free / 2 <= s.best {
            return;
        }
        s.covered[v] = true;
        rec(s, v + 1);
        for i in 0..s.g.neighbors(v).len() {
            let w = s.g.neighbors(v)[i];
            if w < v || s.covered[w] {
                continue;
            }
            // The first edge may go to either half; take half 0 by symmetry.
            let half_count = if cur == 0 { 1 } else { 2 };
            for h in 0..half_count {
                if s.halves[h].iter().any(|&f| edges_conflict(s.g, (v, w), f)) {
                    continue;
                }
                s.covered[w] = true;
                s.halves[h].push((v, w));
                rec(s, v + 1);
                s.halves[h].pop();
                s.covered[w] = false;
            }
        }
        s.covered[v] = false;
    }
    let mut s = State {
        g,
        covered: vec![false; g.n()],
        halves: [Vec::new(), Vec::new()],
        best: 0,
        nodes: budget,
        exhausted: false,
    };
    rec(&mut s, 0);
    (!s.exhausted).then_some(s.best)
}

/// Kuhn's augmenting-path matching on an explicit bipartite adjacency.
fn kuhn(adj: &[Vec<usize>], right_count: usize) -> usize {
    fn try_augment(v: usize, adj: &[Vec<usize>], owner: &mut [usize], seen: &mut [bool]) -> bool {
        for &r in &adj[v] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if owner[r] == usize::MAX || try_augment(owner[r], adj, owner, seen) {
                owner[r] = v;
                return true;
            }
        }
        false
    }
    let mut owner = vec![usize::MAX; right_count];
    let mut matched = 0;
    for v in 0..adj.len() {
        let mut seen = vec![false; right_count];
        if try_augment(v, adj, &mut owner, &mut seen) {
            matched += 1;
        }
    }
    matched
}

/// Maximum number of vertices that can each be assigned a distinct incident
/// edge: a matching in the vertex-edge incidence graph.
pub fn incidence_match_count(g: &Graph) -> usize {
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.incident_edges(v).to_vec()).collect();
    kuhn(&adj, g.m())
}

/// Maximum matching via augmenting paths, defined only on bipartite graphs.
pub fn bipartite_matching_brute(g: &Graph) -> Option<usize> {
    let side = g.bipartition()?;
    let rights: Vec<VertexId> = (0..g.n()).filter(|&v| side[v] == 1).collect();
    let mut right_index = vec![usize::MAX; g.n()];
    for (i, &r) in rights.iter().enumerate() {
        right_index[r] = i;
    }
    let adj: Vec<Vec<usize>> = (0..g.n())
        .filter(|&v| side[v] == 0)
        .map(|v| g.neighbors(v).iter().map(|&w| right_index[w]).collect())
        .collect();
    Some(kuhn(&adj, rights.len()))
}

fn cycle_lengths(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut lengths = Vec::new();
    let mut on_path = vec![false; n];
    fn extend(
        g: &Graph,
        start: VertexId,
        v: VertexId,
        depth: usize,
        on_path: &mut [bool],
        lengths: &mut Vec<usize>,
    ) {
        for &w in g.neighbors(v) {
            if w == start && depth >= 3 {
                lengths.push(depth);
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                extend(g, start, w, depth + 1, on_path, lengths);
                on_path[w] = false;
            }
        }
    }
    for start in 0..n {
        on_path[start] = true;
        extend(g, start, start, 1, &mut on_path, &mut lengths);
        on_path[start] = false;
    }
    lengths
}

/// Length of a shortest cycle by enumerating all simple cycles.
pub fn shortest_cycle_brute(g: &Graph) -> Option<usize> {
    cycle_lengths(g).into_iter().min()
}

/// Length of a shortest even cycle by enumerating all simple cycles.
pub fn shortest_even_cycle_brute(g: &Graph) -> Option<usize> {
    cycle_lengths(g).into_iter().filter(|l| l % 2 == 0).min()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn super_domination_masks() {
        let g = Graph::cycle(4);
        assert!(is_super_dom_mask(&g, 0b0011));
        assert!(!is_super_dom_mask(&g, 0b0101));
        assert!(is_super_dom_mask(&g, 0b1111));
        assert!(!is_super_dom_mask(&g, 0b0000));
    }

    #[test]
    fn gamma_sp_small_values() {
        assert_eq!(gamma_sp_by_subsets(&Graph::path(2)).0, 1);
        assert_eq!(gamma_sp_by_subsets(&Graph::path(4)).0, 2);
        assert_eq!(gamma_sp_by_subsets(&Graph::cycle(4)).0, 2);
        assert_eq!(gamma_sp_by_subsets(&Graph::cycle(6)).0, 4);
        assert_eq!(gamma_sp_by_subsets(&Graph::complete(4)).0, 3);
        assert_eq!(gamma_sp_by_subsets(&Graph::star(3)).0, 3);
        assert_eq!(gamma_sp_by_subsets(&Graph::paw()).0, 3);
        assert_eq!(gamma_sp_by_subsets(&Graph::new(1)).0, 1);
        assert_eq!(gamma_sp_by_subsets(&Graph::new(0)).0, 0);
    }

    #[test]
    fn returned_set_is_valid() {
        let g = Graph::cycle(7);
        let (size, set) = gamma_sp_by_subsets(&g);
        assert_eq!(size, 4);
        assert_eq!(set.len(), 4);
        let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
        assert!(is_super_dom_mask(&g, mask));
    }

    #[test]
    fn optimal_sets_of_square_are_adjacent_pairs() {
        let (size, masks) = min_super_dom_masks(&Graph::cycle(4));
        assert_eq!(size, 2);
        assert_eq!(masks, vec![0b0011, 0b0110, 0b1001, 0b1100]);
    }

    #[test]
    fn matching_values() {
        assert_eq!(max_matching_brute(&Graph::path(4)), 2);
        assert_eq!(max_matching_brute(&Graph::cycle(5)), 2);
        assert_eq!(max_matching_brute(&Graph::complete(5)), 2);
        assert_eq!(max_matching_brute(&Graph::star(4)), 1);
        assert_eq!(max_matching_brute(&Graph::paw()), 2);
        assert_eq!(max_matching_brute(&Graph::new(3)), 0);
    }

    #[test]
    fn independent_set_values() {
        assert_eq!(max_independent_brute(&Graph::cycle(5)), 2);
        assert_eq!(max_independent_brute(&Graph::complete(4)), 1);
        assert_eq!(max_independent_brute(&Graph::path(6)), 3);
        assert_eq!(max_independent_brute(&Graph::star(5)), 5);
    }

    #[test]
    fn dominating_set_values() {
        assert_eq!(min_dominating_brute(&Graph::path(6)), 2);
        assert_eq!(min_dominating_brute(&Graph::cycle(7)), 3);
        assert_eq!(min_dominating_brute(&Graph::star(5)), 1);
        assert_eq!(min_dominating_brute(&Graph::complete(4)), 1);
    }

    #[test]
    fn two_packing_values() {
        assert_eq!(max_2packing_brute(&Graph::path(6)), 2);
        assert_eq!(max_2packing_brute(&Graph::cycle(7)), 2);
        assert_eq!(max_2packing_brute(&Graph::cycle(9)), 3);
        assert_eq!(max_2packing_brute(&Graph::complete(4)), 1);
        assert_eq!(max_2packing_brute(&Graph::star(5)), 1);
    }

    #[test]
    fn induced_matching_values() {
        assert_eq!(max_induced_matching_brute(&Graph::cycle(6)), 2);
        assert_eq!(max_induced_matching_brute(&Graph::cycle(7)), 2);
        assert_eq!(max_induced_matching_brute(&Graph::complete(4)), 1);
        assert_eq!(max_induced_matching_brute(&Graph::path(4)), 1);
        assert_eq!(max_induced_matching_brute(&Graph::path(5)), 2);
        assert_eq!(max_induced_matching_brute(&Graph::star(4)), 1);
    }

    #[test]
    fn ii_matching_values() {
        let ii = |g: &Graph| max_ii_brute(g, 1 << 22).unwrap();
        assert_eq!(ii(&Graph::cycle(4)), 2);
        assert_eq!(ii(&Graph::cycle(5)), 2);
        assert_eq!(ii(&Graph::cycle(6)), 2);
        assert_eq!(ii(&Graph::cycle(7)), 3);
        assert_eq!(ii(&Graph::cycle(8)), 4);
        assert_eq!(ii(&Graph::complete(3)), 1);
        assert_eq!(ii(&Graph::complete(4)), 2);
        assert_eq!(ii(&Graph::complete(5)), 2);
        assert_eq!(ii(&Graph::paw()), 2);
        assert_eq!(ii(&Graph::path(4)), 2);
    }

    #[test]
    fn ii_budget_exhaustion_reports_none() {
        assert_eq!(max_ii_brute(&Graph::cycle(8), 3), None);
    }

    #[test]
    fn incidence_matching_values() {
        assert_eq!(incidence_match_count(&Graph::path(4)), 3);
        assert_eq!(incidence_match_count(&Graph::star(4)), 4);
        assert_eq!(incidence_match_count(&Graph::cycle(5)), 5);
        assert_eq!(incidence_match_count(&Graph::paw()), 4);
        assert_eq!(incidence_match_count(&Graph::path(2).disjoint_union(&Graph::path(2))), 2);
    }

    #[test]
    fn bipartite_matching_values() {
        assert_eq!(bipartite_matching_brute(&Graph::complete_bipartite(2, 3)), Some(2));
        assert_eq!(bipartite_matching_brute(&Graph::path(5)), Some(2));
        assert_eq!(bipartite_matching_brute(&Graph::cycle(8)), Some(4));
        assert_eq!(bipartite_matching_brute(&Graph::cycle(5)), None);
    }

    #[test]
    fn cycle_length_scans() {
        assert_eq!(shortest_cycle_brute(&Graph::cycle(7)), Some(7));
        assert_eq!(shortest_cycle_brute(&Graph::paw()), Some(3));
        assert_eq!(shortest_cycle_brute(&Graph::path(5)), None);
        assert_eq!(shortest_even_cycle_brute(&Graph::cycle(6)), Some(6));
        assert_eq!(shortest_even_cycle_brute(&Graph::cycle(5)), None);
        assert_eq!(shortest_even_cycle_brute(&Graph::paw()), None);
        assert_eq!(shortest_even_cycle_brute(&Graph::complete(4)), Some(4));
        assert_eq!(shortest_even_cycle_brute(&Graph::complete_bipartite(2, 3)), Some(4));
    }
}
