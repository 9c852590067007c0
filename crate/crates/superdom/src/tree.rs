//! Linear-time exact solver for forests: a leaf-stripping maximum matching
//! and a preorder labeling that turns it into an optimal super dominating
//! set of size `n − α′`.

use crate::error::TreeError;
use crate::graph::{Graph, VertexId};
use crate::matching::Matching;
use crate::superdom::{self, Side, SuperDomCertificate};

const NONE: usize = usize::MAX;

/// Matching plus the vertex labels produced by the preorder walk.
#[derive(Clone, Debug)]
pub struct TreeLabeling {
    pub matching: Matching,
    /// `Side::Neither` marks vertices outside both classes.
    pub label: Vec<Side>,
    /// One root per component that has a matched vertex: the smallest-id
    /// matched vertex, always labeled `A`.
    pub roots: Vec<VertexId>,
}

/// Full output of the forest solver.
#[derive(Clone, Debug)]
pub struct TreeSolution {
    pub value: usize,
    /// The optimal super dominating set, sorted.
    pub set: Vec<VertexId>,
    pub certificate: SuperDomCertificate,
    pub labeling: TreeLabeling,
    /// Elementary step count, proportional to `n + m`.
    pub ops: usize,
}

/// Maximum matching of a forest by repeatedly matching a leaf to its
/// neighbor and deleting both.
pub fn tree_max_matching(t: &Graph) -> Result<Matching, TreeError> {
    Ok(strip_leaves(t)?.0)
}

fn strip_leaves(t: &Graph) -> Result<(Matching, usize), TreeError> {
    if !t.is_forest() {
        return Err(TreeError::NotAForest);
    }
    let n = t.n();
    let mut ops = 0usize;
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut pairs = Vec::new();
    let mut queue: std::collections::VecDeque<VertexId> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = queue.pop_front() {
        ops += 1;
        if removed[v] {
            continue;
        }
        removed[v] = true;
        let live = t.neighbors(v).iter().copied().find(|&u| !removed[u]);
        ops += t.degree(v);
        if let Some(u) = live {
            // A popped leaf is unmatched, and so is its surviving neighbor.
            pairs.push((v, u));
            removed[u] = true;
            for &w in t.neighbors(u) {
                ops += 1;
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    Ok((Matching::from_pairs(n, &pairs), ops))
}

/// Labels each component in preorder from its smallest-id matched vertex:
/// the root joins `A`; a child joins the opposite class across its
/// matching edge, repeats the parent's class when matched elsewhere, and
/// stays outside otherwise. The result satisfies `E[A, B] =` matching,
/// which is re-checked before returning.
pub fn tree_gamma_sp_set(t: &Graph) -> Result<TreeSolution, TreeError> {
    let n = t.n();
    let (matching, mut ops) = strip_leaves(t)?;
    let mut label = vec![Side::Neither; n];
    let mut roots = Vec::new();
    let (comp_of, comp_count) = t.components();
    let mut members: Vec<Vec<VertexId>> = vec![Vec::new(); comp_count];
    for v in 0..n {
        members[comp_of[v]].push(v);
    }
    for comp in members {
        let root = match comp.iter().copied().find(|&v| matching.covers(v)) {
            Some(r) => r,
            None => continue, // isolated vertex: stays outside both classes
        };
        roots.push(root);
        label[root] = Side::A;
        let mut stack = vec![(root, NONE)];
        while let Some((u, parent)) = stack.pop() {
            ops += 1;
            let mut children: Vec<VertexId> = t
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&c| c != parent)
                .collect();
            children.sort_unstable();
            for c in children.into_iter().rev() {
                ops += 1;
                label[c] = match label[u] {
                    Side::A if matching.mate(u) == Some(c) => Side::B,
                    Side::B if matching.mate(u) == Some(c) => Side::A,
                    Side::A | Side::B if matching.covers(c) => label[u],
                    Side::Neither if matching.covers(c) => Side::A,
                    _ => Side::Neither,
                };
                stack.push((c, u));
            }
        }
    }
    check_labeling(t, &label, &matching)?;
    let set: Vec<VertexId> = (0..n).filter(|&v| label[v] != Side::A).collect();
    let certificate = superdom::verify_super_dom(t, &set)
        .map_err(|_| TreeError::Internal("labeled set fails the definition check"))?;
    Ok(TreeSolution {
        value: set.len(),
        set,
        certificate,
        labeling: TreeLabeling {
            matching,
            label,
            roots,
        },
        ops,
    })
}

/// `E[A, B]` must equal the matching exactly, and the classes must
/// partition the matched vertices.
fn check_labeling(t: &Graph, label: &[Side], matching: &Matching) -> Result<(), TreeError> {
    for v in 0..t.n() {
        if matching.covers(v) == (label[v] == Side::Neither) {
            return Err(TreeError::Internal(
                "classes do not partition the matched vertices",
            ));
        }
    }
    for &(u, v) in t.edges() {
        let cross = matches!(
            (label[u], label[v]),
            (Side::A, Side::B) | (Side::B, Side::A)
        );
        if cross != (matching.mate(u) == Some(v)) {
            return Err(TreeError::Internal(
                "cross edges between the classes differ from the matching",
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::max_matching;
    use crate::oracle;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn spider(legs: usize, k: usize) -> Graph {
        let m = crate::construct::subdivide(&Graph::star(legs), k);
        m.graph
    }

    fn random_attachment_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(rng.random_range(0..v), v).unwrap();
        }
        g
    }

    #[test]
    fn leaf_stripping_matches_maximally() {
        assert_eq!(tree_max_matching(&Graph::path(5)).unwrap().size(), 2);
        assert_eq!(tree_max_matching(&Graph::star(4)).unwrap().size(), 1);
        assert_eq!(tree_max_matching(&spider(3, 1)).unwrap().size(), 3);
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for n in 2..40 {
            let t = random_attachment_tree(n, &mut rng);
            assert_eq!(
                tree_max_matching(&t).unwrap().size(),
                max_matching(&t).size()
            );
        }
    }

    #[test]
    fn cycles_are_refused() {
        assert_eq!(
            tree_max_matching(&Graph::cycle(4)),
            Err(TreeError::NotAForest)
        );
        assert!(tree_gamma_sp_set(&Graph::paw()).is_err());
    }

    #[test]
    fn path_and_star_values() {
        for n in 2..=12 {
            assert_eq!(tree_gamma_sp_set(&Graph::path(n)).unwrap().value, n.div_ceil(2));
        }
        for leaves in 2..=6 {
            assert_eq!(tree_gamma_sp_set(&Graph::star(leaves)).unwrap().value, leaves);
        }
    }

    #[test]
    fn subdivided_star_values_match_closed_form() {
        for leaves in 2..=4 {
            for k in 0..=4 {
                let expected = if k % 2 == 0 {
                    leaves * (k + 2) / 2
                } else {
                    leaves * (k + 1) / 2 + 1
                };
                assert_eq!(tree_gamma_sp_set(&spider(leaves, k)).unwrap().value, expected);
            }
        }
    }

    #[test]
    fn random_trees_agree_with_subset_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..40 {
            let n = rng.random_range(2..=11);
            let t = random_attachment_tree(n, &mut rng);
            let sol = tree_gamma_sp_set(&t).unwrap();
            assert_eq!(sol.value, oracle::gamma_sp_by_subsets(&t).0);
            assert_eq!(sol.value, n - max_matching(&t).size());
            assert_eq!(sol.certificate.size(), sol.value);
        }
    }

    #[test]
    fn labeling_structure() {
        // Center 0, leaves 1..3, subdivision vertices 4..6 on edges 0-1, 0-2, 0-3.
        let t = spider(3, 1);
        let sol = tree_gamma_sp_set(&t).unwrap();
        assert_eq!(sol.value, 4);
        assert_eq!(sol.set, vec![0, 2, 3, 4]);
        // Smallest matched vertex of the single component is the root.
        assert_eq!(sol.labeling.roots, vec![1]);
        assert_eq!(sol.labeling.label[1], Side::A);
        assert_eq!(sol.labeling.label[0], Side::Neither);
    }

    #[test]
    fn forests_and_isolated_vertices() {
        let f = Graph::path(3)
            .disjoint_union(&Graph::new(1))
            .disjoint_union(&Graph::path(2));
        let sol = tree_gamma_sp_set(&f).unwrap();
        assert_eq!(sol.value, 4);
        assert!(sol.set.contains(&3));
        let lonely = tree_gamma_sp_set(&Graph::new(2)).unwrap();
        assert_eq!(lonely.value, 2);
        assert_eq!(lonely.set, vec![0, 1]);
        assert!(lonely.labeling.roots.is_empty());
    }

    #[test]
    fn operation_count_grows_linearly() {
        let at = |n: usize| tree_gamma_sp_set(&Graph::path(n)).unwrap().ops;
        let (a, b, c) = (at(200), at(400), at(800));
        assert!(b < a * 3 && c < b * 3, "ops {a} {b} {c}");
        assert!(c < 20 * 800);
        let star_ops = tree_gamma_sp_set(&Graph::star(800)).unwrap().ops;
        assert!(star_ops < 20 * 801);
    }

    #[test]
    fn deterministic_output() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let t = random_attachment_tree(30, &mut rng);
        let first = tree_gamma_sp_set(&t).unwrap();
        let second = tree_gamma_sp_set(&t).unwrap();
        assert_eq!(first.set, second.set);
        assert_eq!(first.labeling.label, second.labeling.label);
    }
}
