//! Representative-edge assignments.
//!
//! A DR-function maps each vertex of its domain to a distinct incident
//! edge. On a connected graph the largest possible domain has size `n`
//! when the graph contains a cycle and `n - 1` on a tree; the subdivision
//! placement rules consume exactly these maximizing assignments.

use std::collections::VecDeque;

use crate::error::StructureError;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::structure::{find_cycle, SpanningStructure};

/// A partial injective map from vertices to incident edges.
#[derive(Clone, Debug)]
pub struct DrFunction {
    pub assignment: Vec<Option<EdgeId>>,
}

impl DrFunction {
    pub fn domain_size(&self) -> usize {
        self.assignment.iter().filter(|a| a.is_some()).count()
    }

    pub fn domain(&self) -> Vec<VertexId> {
        (0..self.assignment.len())
            .filter(|&v| self.assignment[v].is_some())
            .collect()
    }

    /// For each edge, the vertex it represents, when any.
    pub fn image_owner(&self, g: &Graph) -> Vec<Option<VertexId>> {
        let mut owner = vec![None; g.m()];
        for (v, a) in self.assignment.iter().enumerate() {
            if let Some(e) = *a {
                debug_assert!(owner[e].is_none());
                owner[e] = Some(v);
            }
        }
        owner
    }

    /// Checks incidence and injectivity from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.m()];
        for (v, a) in self.assignment.iter().enumerate() {
            if let Some(e) = *a {
                if e >= g.m() || used[e] {
                    return false;
                }
                let (x, y) = g.edge(e);
                if x != v && y != v {
                    return false;
                }
                used[e] = true;
            }
        }
        true
    }
}

/// Assigns cycle vertices their forward cycle edge, then grows outward:
/// each newly reached vertex takes the edge it was discovered through.
fn assign_from_seed(
    g: &Graph,
    seed_cycle: Option<&[VertexId]>,
    root: Option<VertexId>,
    allowed_edge: impl Fn(EdgeId) -> bool,
) -> DrFunction {
    let mut assignment = vec![None; g.n()];
    let mut reached = vec![false; g.n()];
    let mut queue = VecDeque::new();
    if let Some(cycle) = seed_cycle {
        for (i, &v) in cycle.iter().enumerate() {
            let w = cycle[(i + 1) % cycle.len()];
            assignment[v] = Some(g.edge_between(v, w).expect("cycle edge"));
            reached[v] = true;
            queue.push_back(v);
        }
    }
    if let Some(r) = root {
        reached[r] = true;
        queue.push_back(r);
    }
    while let Some(v) = queue.pop_front() {
        for (&w, &e) in g.neighbors(v).iter().zip(g.incident_edges(v)) {
            if !reached[w] && allowed_edge(e) {
                reached[w] = true;
                assignment[w] = Some(e);
                queue.push_back(w);
            }
        }
    }
    DrFunction { assignment }
}

/// Maximum-domain DR-function of a connected graph: domain `V` when a
/// cycle exists, else `V` minus the largest vertex id, which acts as the
/// root and maps every other vertex to its parent edge.
pub fn dr_function(g: &Graph) -> Result<DrFunction, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::NotConnected);
    }
    if g.n() == 0 {
        return Ok(DrFunction { assignment: vec![] });
    }
    Ok(match find_cycle(g) {
        Some(cycle) => assign_from_seed(g, Some(&cycle), None, |_| true),
        None => assign_from_seed(g, None, Some(g.n() - 1), |_| true),
    })
}

/// DR-function whose image lies inside a spanning structure, so that the
/// structure's 2-coloring classes line up with the assigned edges.
pub fn dr_function_from_structure(g: &Graph, s: &SpanningStructure) -> DrFunction {
    if g.n() == 0 {
        return DrFunction { assignment: vec![] };
    }
    let mut in_s = vec![false; g.m()];
    for &e in &s.edges {
        in_s[e] = true;
    }
    match &s.cycle {
        Some(cycle) => assign_from_seed(g, Some(cycle), None, |e| in_s[e]),
        None => assign_from_seed(g, None, Some(g.n() - 1), |e| in_s[e]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::incidence_match_count;
    use crate::structure::spanning_structure;

    fn expected_domain(g: &Graph) -> usize {
        if g.is_forest() {
            g.n() - 1
        } else {
            g.n()
        }
    }

    #[test]
    fn domains_reach_the_maximum() {
        for g in [
            Graph::path(3),
            Graph::path(8),
            Graph::star(5),
            Graph::complete(3),
            Graph::complete(5),
            Graph::cycle(6),
            Graph::paw(),
            Graph::complete_bipartite(2, 3),
        ] {
            let f = dr_function(&g).unwrap();
            assert!(f.verify(&g));
            assert_eq!(f.domain_size(), expected_domain(&g));
            assert_eq!(f.domain_size(), incidence_match_count(&g));
        }
    }

    #[test]
    fn tree_root_is_largest_id() {
        let f = dr_function(&Graph::path(5)).unwrap();
        assert!(f.assignment[4].is_none());
        assert_eq!(f.domain(), vec![0, 1, 2, 3]);
        // Each non-root vertex takes the edge toward the root.
        assert_eq!(f.assignment[3], Graph::path(5).edge_between(3, 4));
    }

    #[test]
    fn cyclic_graph_assigns_every_vertex() {
        let g = Graph::paw();
        let f = dr_function(&g).unwrap();
        assert_eq!(f.domain().len(), 4);
        let owner = f.image_owner(&g);
        assert_eq!(owner.iter().filter(|o| o.is_some()).count(), 4);
    }

    #[test]
    fn structure_based_assignment_stays_in_structure() {
        let g = Graph::complete(4);
        let s = spanning_structure(&g, true).unwrap();
        let f = dr_function_from_structure(&g, &s);
        assert!(f.verify(&g));
        assert_eq!(f.domain_size(), 4);
        let allowed: Vec<bool> = {
            let mut v = vec![false; g.m()];
            for &e in &s.edges {
                v[e] = true;
            }
            v
        };
        for a in f.assignment.iter().flatten() {
            assert!(allowed[*a], "image edge {a} outside the structure");
        }
    }

    #[test]
    fn disconnected_input_is_refused() {
        let g = Graph::path(2).disjoint_union(&Graph::path(2));
        assert!(matches!(dr_function(&g), Err(StructureError::NotConnected)));
    }
}
