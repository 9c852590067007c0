//! Executable hardness reductions with two-way certificate translation:
//! 3-SAT to super domination on bipartite graphs, and maximum independent
//! set to II-matching via the lexicographic product with K4.

use std::fmt;

use crate::construct::{lex_product_k4, ProductMap};
use crate::error::{CnfError, TranslateError};
use crate::graph::{Graph, VertexId};
use crate::induced::IiCertificate;
use crate::matching::canonical_max_matching;
use crate::structure::girth;
use crate::superdom::{self, SuperDomCertificate};

/// A 3-CNF formula; literals are signed 1-based variable indices and may
/// repeat within a clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub vars: usize,
    pub clauses: Vec<[i64; 3]>,
}

impl CnfFormula {
    /// Validates literal ranges; every clause must hold exactly 3 literals.
    pub fn new(vars: usize, clauses: Vec<[i64; 3]>) -> Result<CnfFormula, CnfError> {
        for (ci, clause) in clauses.iter().enumerate() {
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > vars {
                    return Err(CnfError::VarOutOfRange {
                        clause: ci + 1,
                        var: lit,
                        vars,
                    });
                }
            }
        }
        Ok(CnfFormula { vars, clauses })
    }

    /// True when `phi` makes at least one literal of every clause true.
    pub fn satisfied_by(&self, phi: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause
                .iter()
                .any(|&lit| phi[lit.unsigned_abs() as usize - 1] == (lit > 0))
        })
    }
}

/// Parses a DIMACS CNF document; comment lines start with `c`, clauses
/// end with `0` and may span lines.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula, CnfError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if header.is_none() {
            if !trimmed.starts_with('p') {
                return Err(CnfError::MissingHeader);
            }
            let parts: Vec<&str> = trimmed.split_whitespace().collect();
            if parts.len() != 4 || parts[1] != "cnf" {
                return Err(CnfError::BadHeader { line: line_no });
            }
            let vars = parts[2]
                .parse()
                .map_err(|_| CnfError::BadHeader { line: line_no })?;
            let count = parts[3]
                .parse()
                .map_err(|_| CnfError::BadHeader { line: line_no })?;
            header = Some((vars, count));
            continue;
        }
        for token in trimmed.split_whitespace() {
            let lit: i64 = token.parse().map_err(|_| CnfError::BadToken {
                line: line_no,
                token: token.to_string(),
            })?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    let (vars, announced) = header.ok_or(CnfError::MissingHeader)?;
    if !current.is_empty() {
        return Err(CnfError::MissingTerminator);
    }
    if clauses.len() != announced {
        return Err(CnfError::ClauseCountMismatch {
            header: announced,
            seen: clauses.len(),
        });
    }
    let mut out = Vec::with_capacity(clauses.len());
    for (ci, clause) in clauses.iter().enumerate() {
        if clause.len() != 3 {
            return Err(CnfError::NotThreeLiterals {
                clause: ci + 1,
                len: clause.len(),
            });
        }
        out.push([clause[0], clause[1], clause[2]]);
    }
    CnfFormula::new(vars, out)
}

/// Role of one vertex in the SAT construction; indices are zero-based
/// here and rendered one-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SatRole {
    /// Negative terminal of a variable gadget.
    VarMinus(usize),
    /// Positive terminal of a variable gadget.
    VarPlus(usize),
    /// Interior gadget vertex; the second index is its position 1 to 6.
    VarPath(usize, u8),
    /// Subdivision vertex of one literal occurrence.
    Occurrence { clause: usize, var: usize },
    /// Clause vertex.
    Clause(usize),
    /// Hub adjacent to every clause vertex.
    VStar,
    /// Pendant forcing the hub into every optimal core.
    V,
}

impl fmt::Display for SatRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SatRole::VarMinus(i) => write!(f, "x{}-", i + 1),
            SatRole::VarPlus(i) => write!(f, "x{}+", i + 1),
            SatRole::VarPath(i, t) => write!(f, "x{}^{}", i + 1, t),
            SatRole::Occurrence { clause, var } => write!(f, "y{},{}", clause + 1, var + 1),
            SatRole::Clause(j) => write!(f, "c{}", j + 1),
            SatRole::VStar => write!(f, "v*"),
            SatRole::V => write!(f, "v"),
        }
    }
}

/// The graph G_F built from a formula, with role bookkeeping and the
/// decision threshold 4s + 3l + 1.
#[derive(Clone, Debug)]
pub struct SatArtifact {
    pub graph: Graph,
    pub roles: Vec<SatRole>,
    pub formula: CnfFormula,
    pub threshold: usize,
    /// The construction yields a forest when no cycle closes; such
    /// instances fall outside the girth claim and are flagged, not fixed.
    pub tree_shaped: bool,
}

impl SatArtifact {
    pub fn vars(&self) -> usize {
        self.formula.vars
    }

    pub fn clause_count(&self) -> usize {
        self.formula.clauses.len()
    }

    pub fn var_minus(&self, i: usize) -> VertexId {
        8 * i
    }

    pub fn var_plus(&self, i: usize) -> VertexId {
        8 * i + 1
    }

    /// Interior gadget vertex `x_i^t` for `t` in 1 to 6.
    pub fn var_path(&self, i: usize, t: usize) -> VertexId {
        8 * i + 1 + t
    }

    pub fn clause_vertex(&self, j: usize) -> VertexId {
        8 * self.vars() + j
    }

    /// Subdivision vertex of the `t`-th literal of clause `j`, `t` in 0 to 2.
    pub fn occurrence_vertex(&self, j: usize, t: usize) -> VertexId {
        8 * self.vars() + self.clause_count() + 3 * j + t
    }

    pub fn hub(&self) -> VertexId {
        8 * self.vars() + 4 * self.clause_count()
    }

    pub fn pendant(&self) -> VertexId {
        self.hub() + 1
    }

    /// One "vertexId role" line per vertex.
    pub fn role_sidecar(&self) -> String {
        self.roles
            .iter()
            .enumerate()
            .map(|(v, role)| format!("{v} {role}\n"))
            .collect()
    }
}

/// Builds G_F: per variable an 8-vertex gadget (induced path
/// x1 x- x2 x4 x5 x+ x6 with x3 pendant on x2), per literal occurrence a
/// subdivision vertex joining its terminal to the clause vertex, and a
/// hub v* adjacent to every clause vertex with its own pendant v.
pub fn build_gf(f: &CnfFormula) -> SatArtifact {
    let s = f.vars;
    let l = f.clauses.len();
    let n = 8 * s + 4 * l + 2;
    let mut g = Graph::new(n);
    let mut roles = Vec::with_capacity(n);
    for i in 0..s {
        roles.push(SatRole::VarMinus(i));
        roles.push(SatRole::VarPlus(i));
        for t in 1..=6 {
            roles.push(SatRole::VarPath(i, t));
        }
        let minus = 8 * i;
        let plus = 8 * i + 1;
        let path = |t: usize| 8 * i + 1 + t;
        g.add_edge(path(1), minus).expect("gadget ids are in range");
        g.add_edge(minus, path(2)).expect("gadget ids are in range");
        g.add_edge(path(2), path(4)).expect("gadget ids are in range");
        g.add_edge(path(4), path(5)).expect("gadget ids are in range");
        g.add_edge(path(5), plus).expect("gadget ids are in range");
        g.add_edge(plus, path(6)).expect("gadget ids are in range");
        g.add_edge(path(2), path(3)).expect("gadget ids are in range");
    }
    for (j, _) in f.clauses.iter().enumerate() {
        roles.push(SatRole::Clause(j));
    }
    let hub = 8 * s + 4 * l;
    for (j, clause) in f.clauses.iter().enumerate() {
        for (t, &lit) in clause.iter().enumerate() {
            let i = lit.unsigned_abs() as usize - 1;
            roles.push(SatRole::Occurrence { clause: j, var: i });
            let y = 8 * s + l + 3 * j + t;
            let terminal = if lit > 0 { 8 * i + 1 } else { 8 * i };
            g.add_edge(y, terminal).expect("occurrence ids are in range");
            g.add_edge(y, 8 * s + j).expect("occurrence ids are in range");
        }
        g.add_edge(hub, 8 * s + j).expect("hub id is in range");
    }
    roles.push(SatRole::VStar);
    roles.push(SatRole::V);
    g.add_edge(hub, hub + 1).expect("pendant id is in range");
    let tree_shaped = g.is_forest();
    SatArtifact {
        graph: g,
        roles,
        formula: f.clone(),
        threshold: 4 * s + 3 * l + 1,
        tree_shaped,
    }
}

/// Structural audit of a built instance against the construction's
/// promised numerology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatAudit {
    pub n: usize,
    pub expected_n: usize,
    pub m: usize,
    pub bipartite: bool,
    pub girth: Option<usize>,
    /// The girth-8 guarantee needs no repeated literal inside a clause
    /// and no two clauses sharing a same-polarity literal; short cycles
    /// through shared terminals appear otherwise.
    pub girth_bound_expected: bool,
    pub alpha_prime: usize,
    pub expected_alpha_prime: usize,
    pub forced_edges_present: bool,
    pub gadget_contribution_bound: bool,
    pub tree_shaped: bool,
}

impl SatAudit {
    /// Every unconditional invariant holds, and the girth bound holds
    /// whenever its precondition does.
    pub fn pass(&self) -> bool {
        self.n == self.expected_n
            && self.bipartite
            && self.alpha_prime == self.expected_alpha_prime
            && self.forced_edges_present
            && self.gadget_contribution_bound
            && (!self.girth_bound_expected || self.girth.is_none_or(|c| c >= 8))
    }
}

/// Checks counts, bipartiteness, girth, the matching number 4s + l + 1,
/// and that the found maximum matching uses the forced edges.
pub fn audit_gf(a: &SatArtifact) -> SatAudit {
    let s = a.vars();
    let l = a.clause_count();
    let g = &a.graph;
    let matching = canonical_max_matching(g);
    let mut forced = matching.mate(a.hub()) == Some(a.pendant());
    for i in 0..s {
        forced = forced
            && matching.mate(a.var_path(i, 2)) == Some(a.var_path(i, 3))
            && matching.mate(a.var_path(i, 4)) == Some(a.var_path(i, 5));
    }
    let mut gadget_bound = true;
    for i in 0..s {
        let within = (8 * i..8 * i + 8)
            .filter(|&v| matching.mate(v).is_some_and(|w| w > v || w < 8 * i || w >= 8 * i + 8))
            .count();
        gadget_bound = gadget_bound && within <= 4;
    }
    let mut repeated_literal = false;
    let mut shared_polarity = false;
    let mut seen: Vec<(i64, usize)> = Vec::new();
    for (j, clause) in a.formula.clauses.iter().enumerate() {
        for (t, &lit) in clause.iter().enumerate() {
            if clause[..t].contains(&lit) {
                repeated_literal = true;
            }
            if seen.iter().any(|&(l2, j2)| l2 == lit && j2 != j) {
                shared_polarity = true;
            }
            seen.push((lit, j));
        }
    }
    SatAudit {
        n: g.n(),
        expected_n: 8 * s + 4 * l + 2,
        m: g.m(),
        bipartite: g.is_bipartite(),
        girth: girth(g),
        girth_bound_expected: !repeated_literal && !shared_polarity,
        alpha_prime: matching.size(),
        expected_alpha_prime: 4 * s + l + 1,
        forced_edges_present: forced,
        gadget_contribution_bound: gadget_bound,
        tree_shaped: a.tree_shaped,
    }
}

/// The set D(phi) of size 4s + 3l + 1: all occurrence vertices, the
/// pendant v, and the half of each gadget selected by the truth value.
/// It super-dominates exactly when `phi` satisfies the formula.
pub fn assignment_to_superdom(
    a: &SatArtifact,
    phi: &[bool],
) -> Result<Vec<VertexId>, TranslateError> {
    if phi.len() != a.vars() {
        return Err(TranslateError::AssignmentLength {
            given: phi.len(),
            expected: a.vars(),
        });
    }
    let mut d = Vec::with_capacity(a.threshold);
    for (i, &value) in phi.iter().enumerate() {
        if value {
            d.extend([a.var_path(i, 1), a.var_path(i, 3), a.var_path(i, 5), a.var_plus(i)]);
        } else {
            d.extend([a.var_minus(i), a.var_path(i, 2), a.var_path(i, 4), a.var_path(i, 6)]);
        }
    }
    for j in 0..a.clause_count() {
        for t in 0..3 {
            d.push(a.occurrence_vertex(j, t));
        }
    }
    d.push(a.pendant());
    d.sort_unstable();
    debug_assert_eq!(d.len(), a.threshold);
    Ok(d)
}

fn contains(sorted: &[VertexId], v: VertexId) -> bool {
    sorted.binary_search(&v).is_ok()
}

/// Reads a satisfying assignment off a certificate within the threshold:
/// normalize by the exchange step until v* lies outside the set, then a
/// variable is true exactly when its positive terminal is in the core.
pub fn superdom_to_assignment(
    a: &SatArtifact,
    cert: &SuperDomCertificate,
) -> Result<Vec<bool>, TranslateError> {
    if cert.d.len() > a.threshold {
        return Err(TranslateError::AboveThreshold {
            size: cert.d.len(),
            threshold: a.threshold,
        });
    }
    let fresh =
        superdom::verify_super_dom(&a.graph, &cert.d).map_err(TranslateError::BadCertificate)?;
    let hub = a.hub();
    let fresh = if contains(&fresh.a, hub) {
        fresh
    } else if contains(&fresh.b, hub) {
        let swapped = superdom::exchange(&a.graph, &fresh);
        superdom::verify_super_dom(&a.graph, &swapped)
            .map_err(|_| TranslateError::Internal("exchanged set does not verify"))?
    } else {
        return Err(TranslateError::Internal(
            "hub vertex sits inside the set but outside its core",
        ));
    };
    let mut phi = Vec::with_capacity(a.vars());
    for i in 0..a.vars() {
        let plus = a.var_plus(i);
        if contains(&fresh.b, plus) {
            phi.push(true);
        } else if contains(&fresh.a, plus) {
            phi.push(false);
        } else {
            return Err(TranslateError::Internal(
                "positive terminal is uncovered by the certificate matching",
            ));
        }
    }
    if !a.formula.satisfied_by(&phi) {
        return Err(TranslateError::Internal(
            "translated assignment leaves a clause unsatisfied",
        ));
    }
    Ok(phi)
}

/// The product graph F with every vertex blown up into a K4 fiber, and
/// the decision threshold 2k for "alpha(F) >= k".
#[derive(Clone, Debug)]
pub struct ProductArtifact {
    pub map: ProductMap,
    pub threshold: usize,
}

impl ProductArtifact {
    /// One "vertexId (baseVertex,copyIndex)" line per product vertex.
    pub fn role_sidecar(&self) -> String {
        (0..self.map.graph.n())
            .map(|v| format!("{v} ({},{})\n", self.map.base_of(v), v % 4 + 1))
            .collect()
    }
}

/// Builds the product artifact for the question "alpha(f) >= k".
pub fn build_product(f: &Graph, k: usize) -> ProductArtifact {
    ProductArtifact {
        map: lex_product_k4(f),
        threshold: 2 * k,
    }
}

/// Turns an independent set S of `f` into the II-matching on the product
/// that pairs the first two and last two copies inside each chosen fiber.
pub fn independent_to_ii(f: &Graph, set: &[VertexId]) -> Result<IiCertificate, TranslateError> {
    let mut s: Vec<VertexId> = set.to_vec();
    s.sort_unstable();
    s.dedup();
    for &v in &s {
        if v >= f.n() {
            return Err(TranslateError::VertexOutOfRange { vertex: v, n: f.n() });
        }
    }
    for (idx, &u) in s.iter().enumerate() {
        for &v in &s[idx + 1..] {
            if f.has_edge(u, v) {
                return Err(TranslateError::NotIndependent { u, v });
            }
        }
    }
    let product = lex_product_k4(f);
    let g = &product.graph;
    let mut m1 = Vec::with_capacity(s.len());
    let mut m2 = Vec::with_capacity(s.len());
    for &x in &s {
        let [a, b, c, d] = product.fiber(x);
        m1.push(g.edge_between(a, b).expect("fibers are cliques"));
        m2.push(g.edge_between(c, d).expect("fibers are cliques"));
    }
    let cert = IiCertificate { m1, m2 };
    cert.verify(g)
        .map_err(|_| TranslateError::Internal("constructed product certificate does not verify"))?;
    Ok(cert)
}

/// Replaces each cross-fiber edge of one part by an edge inside the fiber
/// of its smaller endpoint; validity and part sizes are preserved.
fn normalize_part(
    product: &ProductMap,
    part: &mut Vec<(VertexId, VertexId)>,
    used: &mut [bool],
) -> Result<(), TranslateError> {
    for pair in part.iter_mut() {
        let (a, b) = *pair;
        if product.base_of(a) == product.base_of(b) {
            continue;
        }
        let keep = a.min(b);
        let drop = a.max(b);
        let partner = product
            .fiber(product.base_of(keep))
            .into_iter()
            .find(|&w| !used[w])
            .ok_or(TranslateError::Internal(
                "no spare fiber vertex during normalization",
            ))?;
        used[drop] = false;
        used[partner] = true;
        *pair = (keep.min(partner), keep.max(partner));
    }
    Ok(())
}

/// Reads an independent set of `f` off an II-matching certificate on the
/// product: normalize away cross edges, then each part's used fibers form
/// an independent set; the larger part is returned.
pub fn ii_to_independent(f: &Graph, cert: &IiCertificate) -> Result<Vec<VertexId>, TranslateError> {
    let product = lex_product_k4(f);
    let g = &product.graph;
    cert.verify(g).map_err(TranslateError::BadIiCertificate)?;
    let mut used = vec![false; g.n()];
    let mut parts: [Vec<(VertexId, VertexId)>; 2] = [
        cert.m1.iter().map(|&e| g.edge(e)).collect(),
        cert.m2.iter().map(|&e| g.edge(e)).collect(),
    ];
    for part in &parts {
        for &(u, v) in part {
            used[u] = true;
            used[v] = true;
        }
    }
    for part in &mut parts {
        normalize_part(&product, part, &mut used)?;
    }
    let mut out: [Vec<VertexId>; 2] = [Vec::new(), Vec::new()];
    for (side, part) in parts.iter().enumerate() {
        let mut bases: Vec<VertexId> = part.iter().map(|&(u, _)| product.base_of(u)).collect();
        bases.sort_unstable();
        let before = bases.len();
        bases.dedup();
        if bases.len() != before {
            return Err(TranslateError::Internal(
                "one part uses a fiber twice after normalization",
            ));
        }
        for (idx, &u) in bases.iter().enumerate() {
            for &v in &bases[idx + 1..] {
                if f.has_edge(u, v) {
                    return Err(TranslateError::Internal(
                        "normalized part spans adjacent fibers",
                    ));
                }
            }
        }
        out[side] = bases;
    }
    let [s1, s2] = out;
    Ok(if s2.len() > s1.len() { s2 } else { s1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::all_graphs;
    use crate::error::Refusal;
    use crate::gamma_sp::{gamma_sp_exact, DEFAULT_BUDGET};
    use crate::induced::ii_number;
    use crate::vertex_sets::{canonical_max_independent, max_independent};

    const FIG1: &str = "p cnf 4 3\n-1 2 -3 0\n1 3 -4 0\n-2 3 4 0\n";

    fn single_positive() -> CnfFormula {
        parse_dimacs_cnf("p cnf 1 1\n1 1 1 0").unwrap()
    }

    #[test]
    fn parses_the_catalog_examples() {
        let f = single_positive();
        assert_eq!((f.vars, f.clauses.len()), (1, 1));
        let fig = parse_dimacs_cnf(FIG1).unwrap();
        assert_eq!((fig.vars, fig.clauses.len()), (4, 3));
        assert_eq!(fig.clauses[0], [-1, 2, -3]);
        assert_eq!(
            parse_dimacs_cnf("p cnf 2 1\n1 -2 0"),
            Err(CnfError::NotThreeLiterals { clause: 1, len: 2 })
        );
    }

    #[test]
    fn parser_refusals_name_the_defect() {
        assert_eq!(parse_dimacs_cnf("1 2 3 0"), Err(CnfError::MissingHeader));
        assert_eq!(parse_dimacs_cnf(""), Err(CnfError::MissingHeader));
        assert_eq!(
            parse_dimacs_cnf("p cnf x 1\n1 1 1 0"),
            Err(CnfError::BadHeader { line: 1 })
        );
        assert_eq!(
            parse_dimacs_cnf("p cnf 1 1\n1 one 1 0"),
            Err(CnfError::BadToken {
                line: 2,
                token: "one".into()
            })
        );
        assert_eq!(
            parse_dimacs_cnf("p cnf 1 1\n1 1 1"),
            Err(CnfError::MissingTerminator)
        );
        assert_eq!(
            parse_dimacs_cnf("p cnf 1 2\n1 1 1 0"),
            Err(CnfError::ClauseCountMismatch { header: 2, seen: 1 })
        );
        assert_eq!(
            parse_dimacs_cnf("p cnf 1 1\n1 2 1 0"),
            Err(CnfError::VarOutOfRange {
                clause: 1,
                var: 2,
                vars: 1
            })
        );
        assert!(parse_dimacs_cnf("c comment\np cnf 1 1\nc mid\n1 1 1 0\n").is_ok());
    }

    #[test]
    fn smallest_instance_numerology() {
        let a = build_gf(&single_positive());
        assert_eq!(a.graph.n(), 14);
        assert_eq!(a.graph.m(), 15);
        assert_eq!(a.threshold, 8);
        assert!(!a.tree_shaped);
        let audit = audit_gf(&a);
        assert_eq!(audit.alpha_prime, 6);
        assert_eq!(audit.girth, Some(4));
        assert!(!audit.girth_bound_expected);
        assert!(audit.bipartite);
        assert!(audit.pass());
    }

    #[test]
    fn figure_instance_numerology() {
        let a = build_gf(&parse_dimacs_cnf(FIG1).unwrap());
        assert_eq!(a.graph.n(), 46);
        assert_eq!(a.threshold, 26);
        assert!(!a.tree_shaped);
        let audit = audit_gf(&a);
        assert_eq!(audit.alpha_prime, 20);
        assert!(audit.bipartite);
        assert_eq!(audit.girth, Some(6));
        assert!(!audit.girth_bound_expected);
        assert!(audit.pass());
    }

    #[test]
    fn distinct_variable_instance_is_a_tree() {
        let f = parse_dimacs_cnf("p cnf 3 1\n1 2 3 0").unwrap();
        let a = build_gf(&f);
        assert_eq!(a.graph.n(), 30);
        assert!(a.tree_shaped);
        let audit = audit_gf(&a);
        assert_eq!(audit.girth, None);
        assert!(audit.girth_bound_expected);
        assert!(audit.pass());
    }

    #[test]
    fn girth_eight_when_preconditions_hold() {
        let f = parse_dimacs_cnf("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0").unwrap();
        let audit = audit_gf(&build_gf(&f));
        assert!(!audit.girth_bound_expected);
        assert_eq!(audit.girth, Some(4));
        // Both polarities of one variable inside a single clause close the
        // shortest possible admissible cycle, through the whole gadget.
        let tight = parse_dimacs_cnf("p cnf 2 1\n1 -1 2 0").unwrap();
        let audit_tight = audit_gf(&build_gf(&tight));
        assert!(audit_tight.girth_bound_expected);
        assert_eq!(audit_tight.girth, Some(8));
        assert!(audit_tight.pass());
        let wide = parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0").unwrap();
        let audit_wide = audit_gf(&build_gf(&wide));
        assert!(audit_wide.girth_bound_expected);
        assert_eq!(audit_wide.girth, Some(10));
        assert!(audit_wide.pass());
    }

    #[test]
    fn role_sidecar_lines() {
        let a = build_gf(&single_positive());
        let sidecar = a.role_sidecar();
        let lines: Vec<&str> = sidecar.lines().collect();
        assert_eq!(lines.len(), 14);
        assert_eq!(lines[0], "0 x1-");
        assert_eq!(lines[1], "1 x1+");
        assert_eq!(lines[4], "4 x1^3");
        assert_eq!(lines[8], "8 c1");
        assert_eq!(lines[9], "9 y1,1");
        assert_eq!(lines[12], "12 v*");
        assert_eq!(lines[13], "13 v");
    }

    #[test]
    fn assignment_translation_verifies_iff_satisfying() {
        let a = build_gf(&single_positive());
        let yes = assignment_to_superdom(&a, &[true]).unwrap();
        assert_eq!(yes.len(), 8);
        assert!(superdom::verify_super_dom(&a.graph, &yes).is_ok());
        let no = assignment_to_superdom(&a, &[false]).unwrap();
        assert_eq!(no.len(), 8);
        match superdom::verify_super_dom(&a.graph, &no) {
            Err(Refusal::NoPrivateWitness { vertex }) => assert_eq!(vertex, a.clause_vertex(0)),
            other => panic!("expected a refusal at the clause vertex, got {other:?}"),
        }
        assert_eq!(
            assignment_to_superdom(&a, &[]),
            Err(TranslateError::AssignmentLength {
                given: 0,
                expected: 1
            })
        );
    }

    #[test]
    fn figure_instance_all_true_verifies() {
        let a = build_gf(&parse_dimacs_cnf(FIG1).unwrap());
        let d = assignment_to_superdom(&a, &[true; 4]).unwrap();
        assert_eq!(d.len(), 26);
        let cert = superdom::verify_super_dom(&a.graph, &d).unwrap();
        assert_eq!(superdom_to_assignment(&a, &cert).unwrap(), vec![true; 4]);
    }

    #[test]
    fn certificate_round_trip_and_threshold_refusal() {
        let a = build_gf(&single_positive());
        let d = assignment_to_superdom(&a, &[true]).unwrap();
        let cert = superdom::verify_super_dom(&a.graph, &d).unwrap();
        assert_eq!(superdom_to_assignment(&a, &cert).unwrap(), vec![true]);
        let solved = gamma_sp_exact(&a.graph, DEFAULT_BUDGET);
        assert_eq!(solved.exact_value(), Some(8));
        let best = superdom::verify_super_dom(&a.graph, solved.set()).unwrap();
        assert_eq!(superdom_to_assignment(&a, &best).unwrap(), vec![true]);
        let extra = (0..a.graph.n()).find(|v| !d.contains(v)).unwrap();
        let mut padded = d.clone();
        padded.push(extra);
        padded.sort_unstable();
        let fat = superdom::verify_super_dom(&a.graph, &padded).unwrap();
        assert_eq!(
            superdom_to_assignment(&a, &fat),
            Err(TranslateError::AboveThreshold {
                size: 9,
                threshold: 8
            })
        );
    }

    #[test]
    fn satisfiability_decides_the_threshold() {
        let sat = build_gf(&parse_dimacs_cnf("p cnf 1 2\n1 1 1 0\n1 1 1 0").unwrap());
        assert_eq!(
            gamma_sp_exact(&sat.graph, DEFAULT_BUDGET).exact_value(),
            Some(sat.threshold)
        );
        let unsat = build_gf(&parse_dimacs_cnf("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0").unwrap());
        assert_eq!(unsat.graph.n(), 18);
        assert_eq!(unsat.threshold, 11);
        let value = gamma_sp_exact(&unsat.graph, DEFAULT_BUDGET).exact_value().unwrap();
        assert_eq!(value, 12);
        assert!(value > unsat.threshold);
    }

    #[test]
    fn product_translation_examples() {
        let p3 = Graph::path(3);
        let cert = independent_to_ii(&p3, &[0, 2]).unwrap();
        assert_eq!(cert.size(), 4);
        assert_eq!(ii_to_independent(&p3, &cert).unwrap(), vec![0, 2]);
        let k3 = Graph::complete(3);
        let small = independent_to_ii(&k3, &[1]).unwrap();
        assert_eq!(small.size(), 2);
        assert_eq!(ii_to_independent(&k3, &small).unwrap(), vec![1]);
        assert_eq!(
            independent_to_ii(&k3, &[0, 1]),
            Err(TranslateError::NotIndependent { u: 0, v: 1 })
        );
        assert_eq!(
            independent_to_ii(&k3, &[5]),
            Err(TranslateError::VertexOutOfRange { vertex: 5, n: 3 })
        );
    }

    #[test]
    fn cross_edges_normalize_away() {
        let p2 = Graph::path(2);
        let product = lex_product_k4(&p2);
        let g = &product.graph;
        let cert = IiCertificate {
            m1: vec![g.edge_between(0, 4).unwrap()],
            m2: vec![g.edge_between(2, 3).unwrap()],
        };
        assert_eq!(ii_to_independent(&p2, &cert).unwrap(), vec![0]);
        let bad = IiCertificate {
            m1: vec![g.edge_between(0, 1).unwrap(), g.edge_between(2, 3).unwrap()],
            m2: vec![],
        };
        assert!(matches!(
            ii_to_independent(&p2, &bad),
            Err(TranslateError::BadIiCertificate(_))
        ));
    }

    #[test]
    fn product_ii_equals_twice_independence() {
        for n in 1..=4 {
            for f in all_graphs(n) {
                let alpha = max_independent(&f).len();
                let product = build_product(&f, alpha);
                assert_eq!(ii_number(&product.map.graph), 2 * alpha, "n={n}");
                assert_eq!(product.threshold, 2 * alpha);
                let forward =
                    independent_to_ii(&f, &canonical_max_independent(&f)).unwrap();
                assert_eq!(forward.size(), 2 * alpha);
                let back = ii_to_independent(&f, &forward).unwrap();
                assert_eq!(back.len(), alpha);
            }
        }
    }

    #[test]
    fn product_sidecar_lines() {
        let artifact = build_product(&Graph::path(2), 1);
        let lines: Vec<String> = artifact.role_sidecar().lines().map(String::from).collect();
        assert_eq!(lines.len(), 8);
        assert_eq!(lines[0], "0 (0,1)");
        assert_eq!(lines[5], "5 (1,2)");
        assert_eq!(artifact.threshold, 2);
    }

    #[test]
    fn empty_formula_reduces_to_an_edge() {
        let f = parse_dimacs_cnf("p cnf 0 0").unwrap();
        let a = build_gf(&f);
        assert_eq!(a.graph.n(), 2);
        assert_eq!(a.threshold, 1);
        assert!(audit_gf(&a).pass());
        assert_eq!(
            gamma_sp_exact(&a.graph, DEFAULT_BUDGET).exact_value(),
            Some(1)
        );
    }
}
