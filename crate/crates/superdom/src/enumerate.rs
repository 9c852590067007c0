//! Exhaustive isomorphism-free generation of small graphs and trees, plus
//! seeded random trees. Intended for desk-scale testing sweeps.

use std::collections::HashSet;

use rand::Rng;

use crate::graph::{Graph, VertexId};

/// Edge slot index of the pair `u < v` among all pairs on `n` vertices.
fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

fn mask_of(g: &Graph) -> u64 {
    let n = g.n();
    let mut mask = 0u64;
    for &(u, v) in g.edges() {
        mask |= 1 << pair_index(n, u, v);
    }
    mask
}

fn graph_of(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if mask >> pair_index(n, u, v) & 1 == 1 {
                g.add_edge(u, v).expect("pairs are distinct and in range");
            }
        }
    }
    g
}

/// Stable vertex coloring by iterated neighborhood color multisets; the
/// color ids are ranks of invariant signatures, so isomorphic graphs get
/// matching colorings.
fn refine_colors(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut color: Vec<usize> = (0..n).map(|v| adj[v].len()).collect();
    let mut classes = color.iter().collect::<HashSet<_>>().len();
    loop {
        let mut sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = adj[v].iter().map(|&w| color[w]).collect();
                around.sort_unstable();
                (color[v], around)
            })
            .collect();
        let mut order: Vec<(usize, Vec<usize>)> = sig.clone();
        order.sort_unstable();
        order.dedup();
        if order.len() == classes && classes > 0 {
            return color;
        }
        classes = order.len();
        for v in 0..n {
            color[v] = order.binary_search(&sig[v]).expect("own signature is present");
        }
        sig.clear();
        if classes == n || n == 0 {
            return color;
        }
    }
}

/// Smallest edge mask over all relabelings that respect the refined
/// color classes; equal masks exactly characterize isomorphic graphs.
fn canonical_mask(n: usize, mask: u64) -> u64 {
    if n < 2 {
        return 0;
    }
    let g = graph_of(n, mask);
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let color = refine_colors(n, &adj);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_unstable_by_key(|&v| (color[v], v));
    for &v in &sorted {
        match classes.last_mut() {
            Some(c) if color[c[0]] == color[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut perm = vec![0usize; n];
    let mut best = u64::MAX;
    assign_class(n, &adj, &classes, 0, 0, &mut perm, &mut best);
    best
}

/// Assigns positions to one color class at a time, trying every ordering
/// within the class, and keeps the smallest permuted mask seen.
fn assign_class(
    n: usize,
    adj: &[Vec<usize>],
    classes: &[Vec<usize>],
    ci: usize,
    base: usize,
    perm: &mut Vec<usize>,
    best: &mut u64,
) {
    if ci == classes.len() {
        let mut permuted = 0u64;
        for (u, row) in adj.iter().enumerate() {
            for &v in row {
                if u < v {
                    permuted |= 1 << pair_index(n, perm[u].min(perm[v]), perm[u].max(perm[v]));
                }
            }
        }
        if permuted < *best {
            *best = permuted;
        }
        return;
    }
    let mut members = classes[ci].clone();
    permute_into(&mut members, 0, &mut |arrangement| {
        for (offset, &v) in arrangement.iter().enumerate() {
            perm[v] = base + offset;
        }
        assign_class(n, adj, classes, ci + 1, base + arrangement.len(), perm, best);
    });
}

fn permute_into(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_into(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// All simple graphs on `n` labeled-free vertices, one per isomorphism
/// class, in canonical edge-mask order. Practical for `n ≤ 8`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "edge masks use u64 slots and growth is doubly exponential");
    if n == 0 {
        return vec![Graph::new(0)];
    }
    let mut level: Vec<u64> = vec![0];
    for t in 2..=n {
        let mut seen = HashSet::new();
        for &mask in &level {
            let old = graph_of(t - 1, mask);
            for subset in 0..1u64 << (t - 1) {
                let mut g = graph_of(t, 0);
                for &(u, v) in old.edges() {
                    g.add_edge(u, v).expect("edges copied from a valid graph");
                }
                for v in 0..t - 1 {
                    if subset >> v & 1 == 1 {
                        g.add_edge(v, t - 1).expect("new vertex is in range");
                    }
                }
                seen.insert(canonical_mask(t, mask_of(&g)));
            }
        }
        level = seen.into_iter().collect();
        level.sort_unstable();
    }
    level.into_iter().map(|mask| graph_of(n, mask)).collect()
}

/// All connected graphs on `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Rooted subtree code: children codes sorted and wrapped, so equal codes
/// mean equal rooted trees.
fn rooted_code(t: &Graph, root: VertexId) -> String {
    fn go(t: &Graph, v: VertexId, parent: Option<VertexId>) -> String {
        let mut kids: Vec<String> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| Some(w) != parent)
            .map(|&w| go(t, w, Some(v)))
            .collect();
        kids.sort_unstable();
        format!("({})", kids.concat())
    }
    go(t, root, None)
}

/// The one or two middle vertices left by repeatedly peeling leaves.
fn centers(t: &Graph) -> Vec<VertexId> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<VertexId> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &w in t.neighbors(v) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let mut out: Vec<VertexId> = (0..n).filter(|&v| degree[v] >= 1).collect();
    out.sort_unstable();
    out
}

/// Isomorphism-invariant code of an unrooted tree: the smaller rooted
/// code over its centers.
fn tree_code(t: &Graph) -> String {
    centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .unwrap_or_default()
}

/// All trees on `n` vertices, one per isomorphism class, in canonical
/// code order. Practical well past `n = 12`.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Graph> = vec![Graph::new(1)];
    for t in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for tree in &level {
            for attach in 0..t - 1 {
                let mut g = Graph::new(t);
                for &(u, v) in tree.edges() {
                    g.add_edge(u, v).expect("edges copied from a valid tree");
                }
                g.add_edge(attach, t - 1).expect("new leaf is in range");
                let code = tree_code(&g);
                if seen.insert(code.clone()) {
                    next.push((code, g));
                }
            }
        }
        next.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    level
}

/// Uniform random labeled tree on `n` vertices from a random sequence
/// decode; the generator fully determines the result.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    if n < 2 {
        return g;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in &seq {
        let std::cmp::Reverse(leaf) = heap.pop().expect("a tree always has a leaf");
        g.add_edge(leaf.min(v), leaf.max(v)).expect("decode touches live vertices");
        degree[v] -= 1;
        if degree[v] == 1 {
            heap.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = heap.pop().expect("two vertices remain");
    let std::cmp::Reverse(b) = heap.pop().expect("two vertices remain");
    g.add_edge(a.min(b), a.max(b)).expect("decode touches live vertices");
    g
}
