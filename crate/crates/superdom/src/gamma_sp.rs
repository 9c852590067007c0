//! Exact super domination number via branch and bound over two-class
//! labelings.
//!
//! A set `D` is super dominating exactly when its complement `A` pairs
//! with a core `B ⊆ D` so that the cross edges `E[A, B]` form a matching
//! covering `A ∪ B`. The solver therefore searches labelings of each
//! vertex as `A`, `B`, or neither, maximizing `|A|`; then
//! `γ_sp = n − max |A|`.

use crate::batch;
use crate::graph::{Graph, VertexId};
use crate::matching;
use crate::structure;
use crate::superdom::{self, Side, SuperDomCertificate};
use crate::tree;

/// Default branch-node budget, applied per component.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

const LA: u8 = 1;
const LB: u8 = 2;
const LN: u8 = 4;
const ALL: u8 = LA | LB | LN;

/// Result of an exact solve: a proven optimum with certificate, or the
/// best bounds obtained before the node budget ran out.
#[derive(Clone, Debug)]
pub enum GammaSpOutcome {
    Exact {
        value: usize,
        certificate: SuperDomCertificate,
    },
    Incomplete {
        lower: usize,
        upper: usize,
        /// Best super dominating set found; its size is `upper`.
        best: Vec<VertexId>,
    },
}

impl GammaSpOutcome {
    /// The value when proven exact.
    pub fn exact_value(&self) -> Option<usize> {
        match self {
            GammaSpOutcome::Exact { value, .. } => Some(*value),
            GammaSpOutcome::Incomplete { .. } => None,
        }
    }

    /// `(lower, upper)`; both equal the value on exact outcomes.
    pub fn bounds(&self) -> (usize, usize) {
        match self {
            GammaSpOutcome::Exact { value, .. } => (*value, *value),
            GammaSpOutcome::Incomplete { lower, upper, .. } => (*lower, *upper),
        }
    }

    /// The best super dominating set exhibited.
    pub fn set(&self) -> &[VertexId] {
        match self {
            GammaSpOutcome::Exact { certificate, .. } => &certificate.d,
            GammaSpOutcome::Incomplete { best, .. } => best,
        }
    }
}

enum Trail {
    Assign(usize, u8),
    Shrink(usize, u8),
}

struct Csp<'a> {
    g: &'a Graph,
    /// Bitmask of labels still allowed per vertex.
    dom: Vec<u8>,
    /// Assigned label, 0 when undecided.
    lab: Vec<u8>,
    is_a: Vec<u32>,
    is_b: Vec<u32>,
    /// Undecided neighbors that still allow the class.
    may_a: Vec<u32>,
    may_b: Vec<u32>,
    n_a: usize,
    n_n: usize,
    assigned: usize,
    trail: Vec<Trail>,
    /// Branch order: degree descending, id ascending.
    order: Vec<VertexId>,
    /// Proven upper bound on `|A|`: `min(α′, ⌊n/2⌋)`.
    cap: usize,
    found: bool,
    best_a: usize,
    best_lab: Vec<u8>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl<'a> Csp<'a> {
    fn new(g: &'a Graph, forced: Option<&[u8]>, budget: u64, cap: usize) -> Csp<'a> {
        let n = g.n();
        let dom: Vec<u8> = match forced {
            Some(f) => f.to_vec(),
            None => vec![ALL; n],
        };
        let mut may_a = vec![0u32; n];
        let mut may_b = vec![0u32; n];
        for v in 0..n {
            for &u in g.neighbors(v) {
                if dom[u] & LA != 0 {
                    may_a[v] += 1;
                }
                if dom[u] & LB != 0 {
                    may_b[v] += 1;
                }
            }
        }
        let mut order: Vec<VertexId> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Csp {
            g,
            dom,
            lab: vec![0; n],
            is_a: vec![0; n],
            is_b: vec![0; n],
            may_a,
            may_b,
            n_a: 0,
            n_n: 0,
            assigned: 0,
            trail: Vec::new(),
            order,
            cap,
            found: false,
            best_a: 0,
            best_lab: vec![LN; n],
            nodes: 0,
            budget,
            exhausted: false,
        }
    }

    fn set_label(&mut self, v: usize, l: u8, work: &mut Vec<usize>) -> bool {
        if self.dom[v] & l == 0 {
            return false;
        }
        let old = self.dom[v];
        self.trail.push(Trail::Assign(v, old));
        self.dom[v] = l;
        self.lab[v] = l;
        self.assigned += 1;
        if l == LA {
            self.n_a += 1;
        } else if l == LN {
            self.n_n += 1;
        }
        let g = self.g;
        for &u in g.neighbors(v) {
            if old & LA != 0 {
                self.may_a[u] -= 1;
            }
            if old & LB != 0 {
                self.may_b[u] -= 1;
            }
            if l == LA {
                self.is_a[u] += 1;
            } else if l == LB {
                self.is_b[u] += 1;
            }
            work.push(u);
        }
        work.push(v);
        true
    }

    fn shrink(&mut self, v: usize, bit: u8, work: &mut Vec<usize>) {
        let old = self.dom[v];
        debug_assert!(self.lab[v] == 0 && old & bit != 0);
        self.trail.push(Trail::Shrink(v, old));
        self.dom[v] = old & !bit;
        let g = self.g;
        for &u in g.neighbors(v) {
            if bit == LA {
                self.may_a[u] -= 1;
            } else {
                self.may_b[u] -= 1;
            }
            work.push(u);
        }
        work.push(v);
    }

    fn undo_to(&mut self, checkpoint: usize) {
        while self.trail.len() > checkpoint {
            match self.trail.pop().unwrap() {
                Trail::Assign(v, old) => {
                    let l = self.lab[v];
                    self.lab[v] = 0;
                    self.dom[v] = old;
                    self.assigned -= 1;
                    if l == LA {
                        self.n_a -= 1;
                    } else if l == LN {
                        self.n_n -= 1;
                    }
                    let g = self.g;
                    for &u in g.neighbors(v) {
                        if old & LA != 0 {
                            self.may_a[u] += 1;
                        }
                        if old & LB != 0 {
                            self.may_b[u] += 1;
                        }
                        if l == LA {
                            self.is_a[u] -= 1;
                        } else if l == LB {
                            self.is_b[u] -= 1;
                        }
                    }
                }
                Trail::Shrink(v, old) => {
                    let removed = old ^ self.dom[v];
                    self.dom[v] = old;
                    let g = self.g;
                    for &u in g.neighbors(v) {
                        if removed & LA != 0 {
                            self.may_a[u] += 1;
                        }
                        if removed & LB != 0 {
                            self.may_b[u] += 1;
                        }
                    }
                }
            }
        }
    }

    /// Enforces, to a fixed point: an `A`-vertex ends with exactly one
    /// `B`-neighbor and vice versa; empty domains fail; singleton domains
    /// assign. Returns false on conflict.
    fn propagate(&mut self, mut work: Vec<usize>) -> bool {
        let g = self.g;
        while let Some(v) = work.pop() {
            match self.lab[v] {
                0 => {
                    let d = self.dom[v];
                    if d == 0 {
                        return false;
                    }
                    if d.count_ones() == 1 && !self.set_label(v, d, &mut work) {
                        return false;
                    }
                }
                LA => {
                    if self.is_b[v] > 1 || self.is_b[v] + self.may_b[v] == 0 {
                        return false;
                    }
                    if self.is_b[v] == 1 && self.may_b[v] > 0 {
                        for i in 0..g.neighbors(v).len() {
                            let u = g.neighbors(v)[i];
                            if self.lab[u] == 0 && self.dom[u] & LB != 0 {
                                self.shrink(u, LB, &mut work);
                            }
                        }
                    } else if self.is_b[v] == 0 && self.may_b[v] == 1 {
                        let u = g
                            .neighbors(v)
                            .iter()
                            .copied()
                            .find(|&u| self.lab[u] == 0 && self.dom[u] & LB != 0)
                            .expect("counter matches a neighbor");
                        if !self.set_label(u, LB, &mut work) {
                            return false;
                        }
                    }
                }
                LB => {
                    if self.is_a[v] > 1 || self.is_a[v] + self.may_a[v] == 0 {
                        return false;
                    }
                    if self.is_a[v] == 1 && self.may_a[v] > 0 {
                        for i in 0..g.neighbors(v).len() {
                            let u = g.neighbors(v)[i];
                            if self.lab[u] == 0 && self.dom[u] & LA != 0 {
                                self.shrink(u, LA, &mut work);
                            }
                        }
                    } else if self.is_a[v] == 0 && self.may_a[v] == 1 {
                        let u = g
                            .neighbors(v)
                            .iter()
                            .copied()
                            .find(|&u| self.lab[u] == 0 && self.dom[u] & LA != 0)
                            .expect("counter matches a neighbor");
                        if !self.set_label(u, LA, &mut work) {
                            return false;
                        }
                    }
                }
                _ => {}
            }
        }
        true
    }

    fn search(&mut self) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let n = self.g.n();
        let mut potential = self.n_a;
        for v in 0..n {
            if self.lab[v] == 0 && self.dom[v] & LA != 0 {
                potential += 1;
            }
        }
        // |A| = |B| in any completion, so (n − n_N)/2 also caps |A|.
        let ub = potential.min((n - self.n_n) / 2).min(self.cap);
        if self.found && ub <= self.best_a {
            return;
        }
        let v = match self.order.iter().copied().find(|&v| self.lab[v] == 0) {
            Some(v) => v,
            None => {
                if !self.found || self.n_a > self.best_a {
                    self.found = true;
                    self.best_a = self.n_a;
                    self.best_lab = self.lab.clone();
                }
                return;
            }
        };
        for l in [LA, LB, LN] {
            if self.dom[v] & l == 0 {
                continue;
            }
            let checkpoint = self.trail.len();
            let mut work = Vec::new();
            if self.set_label(v, l, &mut work) && self.propagate(work) {
                self.search();
            }
            self.undo_to(checkpoint);
            if self.exhausted {
                return;
            }
        }
    }
}

/// Labeling of a spanning tree, repaired by unlabeling matched pairs that
/// touch a non-tree cross edge.
fn forest_seed(g: &Graph) -> Option<(usize, Vec<u8>)> {
    if g.n() < 2 {
        return None;
    }
    let spanning = structure::spanning_structure(g, false).ok()?;
    let mut forest = Graph::new(g.n());
    for &e in &spanning.edges {
        let (u, v) = g.edge(e);
        forest.add_edge(u, v).unwrap();
    }
    let sol = tree::tree_gamma_sp_set(&forest).ok()?;
    let mut lab: Vec<u8> = sol
        .labeling
        .label
        .iter()
        .map(|s| match s {
            Side::A => LA,
            Side::B => LB,
            Side::Neither => LN,
        })
        .collect();
    let mut victims = Vec::new();
    for &(u, v) in g.edges() {
        if forest.has_edge(u, v) {
            continue;
        }
        if lab[u] | lab[v] == LA | LB {
            victims.push(u);
            victims.push(v);
        }
    }
    for w in victims {
        if let Some(p) = sol.labeling.matching.mate(w) {
            lab[w] = LN;
            lab[p] = LN;
        }
    }
    let a = lab.iter().filter(|&&l| l == LA).count();
    Some((a, lab))
}

/// Greedy maximal 2-packing as class `A`, each member witnessed by its
/// smallest neighbor.
fn packing_seed(g: &Graph) -> Option<(usize, Vec<u8>)> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let mut banned = vec![false; n];
    let mut lab = vec![LN; n];
    let mut count = 0;
    for v in 0..n {
        if banned[v] || g.degree(v) == 0 {
            continue;
        }
        lab[v] = LA;
        count += 1;
        banned[v] = true;
        for &u in g.neighbors(v) {
            banned[u] = true;
            for &w in g.neighbors(u) {
                banned[w] = true;
            }
        }
        let y = g.neighbors(v).iter().copied().min().unwrap();
        lab[y] = LB;
    }
    (count > 0).then_some((count, lab))
}

struct CompSolve {
    found: bool,
    max_a: usize,
    labels: Vec<u8>,
    proven: bool,
    cap: usize,
}

fn solve_component(g: &Graph, forced: Option<&[u8]>, budget: u64) -> CompSolve {
    let n = g.n();
    if n == 1 {
        // A lone vertex can only sit outside both classes.
        let feasible = forced.is_none_or(|f| f[0] & LN != 0);
        return CompSolve {
            found: feasible,
            max_a: 0,
            labels: vec![LN],
            proven: true,
            cap: 0,
        };
    }
    let cap = matching::max_matching(g).size().min(n / 2);
    let mut csp = Csp::new(g, forced, budget, cap);
    if forced.is_none() {
        csp.found = true;
        for seed in [forest_seed(g), packing_seed(g)].into_iter().flatten() {
            if seed.0 > csp.best_a {
                csp.best_a = seed.0;
                csp.best_lab = seed.1;
            }
        }
    }
    if csp.propagate((0..n).collect()) {
        csp.search();
    }
    CompSolve {
        found: csp.found,
        max_a: csp.best_a,
        labels: csp.best_lab,
        proven: !csp.exhausted,
        cap,
    }
}

/// Exact `γ_sp`, solving components independently and summing. The node
/// budget applies per component; exhausting it yields honest bounds
/// instead of a value.
pub fn gamma_sp_exact(g: &Graph, budget: u64) -> GammaSpOutcome {
    let comps = g.component_subgraphs();
    let solved: Vec<CompSolve> = batch::map(&comps, |(cg, _, _)| solve_component(cg, None, budget));
    let mut d: Vec<VertexId> = Vec::new();
    for ((_, vmap, _), sol) in comps.iter().zip(&solved) {
        for (local, &global) in vmap.iter().enumerate() {
            if sol.labels[local] != LA {
                d.push(global);
            }
        }
    }
    d.sort_unstable();
    if solved.iter().all(|s| s.proven) {
        let value = d.len();
        let certificate = superdom::verify_super_dom(g, &d)
            .expect("optimal labeling induces a verifying set");
        GammaSpOutcome::Exact { value, certificate }
    } else {
        let lower = comps
            .iter()
            .zip(&solved)
            .map(|((cg, _, _), s)| cg.n() - if s.proven { s.max_a } else { s.cap })
            .sum();
        GammaSpOutcome::Incomplete {
            lower,
            upper: d.len(),
            best: d,
        }
    }
}

/// The lexicographically smallest optimal set, fixed by deciding
/// membership vertex by vertex with feasibility re-solves. `None` when
/// any solve exhausts its budget.
pub fn canonical_gamma_sp_set(g: &Graph, budget: u64) -> Option<SuperDomCertificate> {
    let comps = g.component_subgraphs();
    let mut d: Vec<VertexId> = Vec::new();
    for (cg, vmap, _) in &comps {
        let base = solve_component(cg, None, budget);
        if !base.proven {
            return None;
        }
        let target = base.max_a;
        let n = cg.n();
        let mut forced = vec![ALL; n];
        for v in 0..n {
            forced[v] = LB | LN;
            let trial = solve_component(cg, Some(&forced), budget);
            if !trial.proven {
                return None;
            }
            if !(trial.found && trial.max_a == target) {
                // No optimal set keeps v inside, so v must be outside.
                forced[v] = LA;
            }
        }
        for v in 0..n {
            if forced[v] != LA {
                d.push(vmap[v]);
            }
        }
    }
    d.sort_unstable();
    Some(superdom::verify_super_dom(g, &d).expect("canonical set induces a verifying set"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.random::<f64>() < p {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    fn exact(g: &Graph) -> usize {
        gamma_sp_exact(g, DEFAULT_BUDGET)
            .exact_value()
            .expect("small instances solve within the default budget")
    }

    #[test]
    fn path_values() {
        for n in 2..=12 {
            assert_eq!(exact(&Graph::path(n)), n.div_ceil(2), "path {n}");
        }
    }

    #[test]
    fn cycle_values() {
        let expected = [
            (3, 2),
            (4, 2),
            (5, 3),
            (6, 4),
            (7, 4),
            (8, 4),
            (9, 5),
            (10, 6),
            (12, 6),
            (14, 8),
        ];
        for (n, v) in expected {
            assert_eq!(exact(&Graph::cycle(n)), v, "cycle {n}");
        }
    }

    #[test]
    fn small_family_values() {
        assert_eq!(exact(&Graph::complete(1)), 1);
        assert_eq!(exact(&Graph::complete(2)), 1);
        assert_eq!(exact(&Graph::complete(3)), 2);
        assert_eq!(exact(&Graph::complete(4)), 3);
        assert_eq!(exact(&Graph::complete(5)), 4);
        assert_eq!(exact(&Graph::paw()), 3);
        assert_eq!(exact(&Graph::star(5)), 5);
        assert_eq!(exact(&Graph::new(0)), 0);
    }

    #[test]
    fn certificates_verify_and_have_the_value() {
        match gamma_sp_exact(&Graph::cycle(7), DEFAULT_BUDGET) {
            GammaSpOutcome::Exact { value, certificate } => {
                assert_eq!(value, 4);
                assert_eq!(certificate.size(), 4);
                certificate.check_matching(&Graph::cycle(7)).unwrap();
            }
            GammaSpOutcome::Incomplete { .. } => panic!("budget must suffice"),
        }
    }

    #[test]
    fn agrees_with_subset_scan_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for round in 0..60 {
            let n = rng.random_range(1..=8);
            let p = rng.random_range(0.15..0.8);
            let g = random_graph(n, p, &mut rng);
            let (want, _) = oracle::gamma_sp_by_subsets(&g);
            assert_eq!(exact(&g), want, "round {round}");
        }
    }

    #[test]
    fn disconnected_inputs_add_up() {
        let g = Graph::path(3).disjoint_union(&Graph::cycle(4));
        assert_eq!(exact(&g), 4);
        let h = Graph::path(2).disjoint_union(&Graph::new(1));
        assert_eq!(exact(&h), 2);
        assert_eq!(exact(&Graph::new(3)), 3);
    }

    #[test]
    fn exhausted_budget_reports_honest_bounds() {
        let g = Graph::cycle(10);
        match gamma_sp_exact(&g, 1) {
            GammaSpOutcome::Exact { .. } => panic!("one node cannot prove optimality"),
            GammaSpOutcome::Incomplete { lower, upper, best } => {
                assert!(lower <= 6 && 6 <= upper, "bounds {lower}..{upper}");
                let cert = superdom::verify_super_dom(&g, &best).unwrap();
                assert_eq!(cert.size(), upper);
            }
        }
    }

    #[test]
    fn incomplete_bounds_bracket_the_truth_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(333);
        for _ in 0..20 {
            let n = rng.random_range(4..=8);
            let g = random_graph(n, 0.4, &mut rng);
            let (want, _) = oracle::gamma_sp_by_subsets(&g);
            let (lower, upper) = gamma_sp_exact(&g, 3).bounds();
            assert!(lower <= want && want <= upper, "{lower} <= {want} <= {upper}");
        }
    }

    #[test]
    fn canonical_sets_are_lex_minimal() {
        let lex_min = |g: &Graph| {
            let (_, masks) = oracle::min_super_dom_masks(g);
            masks
                .into_iter()
                .map(|m| (0..g.n()).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
                .min()
                .unwrap()
        };
        let p5 = Graph::path(5);
        let cert = canonical_gamma_sp_set(&p5, DEFAULT_BUDGET).unwrap();
        assert_eq!(cert.d, vec![0, 1, 4]);
        assert_eq!(cert.d, lex_min(&p5));
        let c4 = Graph::cycle(4);
        assert_eq!(canonical_gamma_sp_set(&c4, DEFAULT_BUDGET).unwrap().d, vec![0, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..12 {
            let n = rng.random_range(2..=7);
            let g = random_graph(n, 0.5, &mut rng);
            let cert = canonical_gamma_sp_set(&g, DEFAULT_BUDGET).unwrap();
            assert_eq!(cert.d, lex_min(&g), "n = {n}");
        }
    }

    #[test]
    fn repeated_runs_are_identical() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = random_graph(9, 0.35, &mut rng);
        let first = gamma_sp_exact(&g, DEFAULT_BUDGET);
        let second = gamma_sp_exact(&g, DEFAULT_BUDGET);
        assert_eq!(first.set(), second.set());
        assert_eq!(first.exact_value(), second.exact_value());
    }

    #[test]
    fn handles_moderate_sparse_instances() {
        assert_eq!(exact(&Graph::cycle(25)), 13);
        assert_eq!(exact(&Graph::cycle(26)), 14);
        assert_eq!(exact(&Graph::path(26)), 13);
        let mut t = Graph::star(5);
        // Attach a pendant path to one leaf to mix degrees.
        let base = t.n();
        t = t.disjoint_union(&Graph::path(6));
        t.add_edge(1, base).unwrap();
        assert_eq!(
            exact(&t),
            tree::tree_gamma_sp_set(&t).unwrap().value
        );
    }
}
