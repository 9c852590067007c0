//! Super dominating sets: verification, core extraction, the exchange
//! transform, bounds, and closed-form family values.
//!
//! `D` is super dominating when every outside vertex `x` has a witness
//! `y` in `D` with `N(y) ∩ (V∖D) = {x}`. The witnesses are automatically
//! distinct, so the cross edges between the outside set and the witness
//! set form a matching covering both.

use crate::error::{CertificateViolation, FamilyError, Refusal};
use crate::graph::{Graph, VertexId};
use crate::matching;
use crate::vertex_sets;

/// Vertex classes used by the labeling solvers: `A` is the outside set,
/// `B` the witness core, `Neither` the rest of `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
    Neither,
}

/// A verified super dominating set with its witness structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperDomCertificate {
    /// The super dominating set, sorted.
    pub d: Vec<VertexId>,
    /// Complement of `d`, sorted.
    pub a: Vec<VertexId>,
    /// The core: one witness per outside vertex, sorted.
    pub b: Vec<VertexId>,
    /// Pairs `(x, witness(x))` for `x` in `a`, sorted by `x`.
    pub witness: Vec<(VertexId, VertexId)>,
}

impl SuperDomCertificate {
    pub fn size(&self) -> usize {
        self.d.len()
    }

    /// Structural re-check: partitions, witness edges, matching that
    /// covers `a ∪ b`, and absence of other edges between `a` and `b`.
    pub fn check_matching(&self, g: &Graph) -> Result<(), CertificateViolation> {
        let n = g.n();
        let mut class = vec![0u8; n]; // 1 = d, 2 = a
        for &v in &self.d {
            if v >= n || class[v] != 0 {
                return Err(CertificateViolation::BadPartition);
            }
            class[v] = 1;
        }
        for &v in &self.a {
            if v >= n || class[v] != 0 {
                return Err(CertificateViolation::BadPartition);
            }
            class[v] = 2;
        }
        if class.iter().any(|&c| c == 0) {
            return Err(CertificateViolation::BadPartition);
        }
        let mut in_b = vec![false; n];
        for &v in &self.b {
            if v >= n || class[v] != 1 || in_b[v] {
                return Err(CertificateViolation::BadPartition);
            }
            in_b[v] = true;
        }
        let mut matched_a = vec![false; n];
        let mut matched_b = vec![false; n];
        for &(x, y) in &self.witness {
            if x >= n || y >= n || class[x] != 2 || !in_b[y] {
                return Err(CertificateViolation::BadPartition);
            }
            if !g.has_edge(x, y) {
                return Err(CertificateViolation::WitnessNotAnEdge { a: x, b: y });
            }
            if matched_a[x] {
                return Err(CertificateViolation::WitnessNotAMatching { vertex: x });
            }
            if matched_b[y] {
                return Err(CertificateViolation::WitnessNotAMatching { vertex: y });
            }
            matched_a[x] = true;
            matched_b[y] = true;
        }
        for &x in &self.a {
            if !matched_a[x] {
                return Err(CertificateViolation::ClassVertexUncovered { vertex: x });
            }
        }
        for &y in &self.b {
            if !matched_b[y] {
                return Err(CertificateViolation::ClassVertexUncovered { vertex: y });
            }
        }
        let in_witness: std::collections::HashSet<(usize, usize)> =
            self.witness.iter().copied().collect();
        for &x in &self.a {
            for &y in g.neighbors(x) {
                if in_b[y] && !in_witness.contains(&(x, y)) {
                    return Err(CertificateViolation::ExtraCrossEdge { u: x, v: y });
                }
            }
        }
        Ok(())
    }
}

/// Checks the definition directly and builds the certificate on success,
/// choosing the smallest-id witness for each outside vertex in increasing
/// id order. Refuses with the smallest failing outside vertex.
pub fn verify_super_dom(g: &Graph, d: &[VertexId]) -> Result<SuperDomCertificate, Refusal> {
    let n = g.n();
    let mut in_d = vec![false; n];
    for &v in d {
        if v >= n {
            return Err(Refusal::SetOutOfRange { vertex: v, n });
        }
        if in_d[v] {
            return Err(Refusal::SetDuplicate { vertex: v });
        }
        in_d[v] = true;
    }
    let a: Vec<VertexId> = (0..n).filter(|&v| !in_d[v]).collect();
    let outside = |v: VertexId| !in_d[v];
    let mut witness = Vec::with_capacity(a.len());
    let mut b = Vec::with_capacity(a.len());
    for &x in &a {
        let mut candidates: Vec<VertexId> = g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&y| in_d[y])
            .collect();
        if candidates.is_empty() {
            return Err(Refusal::Undominated { vertex: x });
        }
        candidates.sort_unstable();
        let found = candidates
            .into_iter()
            .find(|&y| g.neighbors(y).iter().filter(|&&w| outside(w)).count() == 1);
        match found {
            Some(y) => {
                witness.push((x, y));
                b.push(y);
            }
            None => return Err(Refusal::NoPrivateWitness { vertex: x }),
        }
    }
    b.sort_unstable();
    b.dedup();
    debug_assert_eq!(b.len(), a.len(), "witnesses are automatically distinct");
    let mut sorted_d = d.to_vec();
    sorted_d.sort_unstable();
    let cert = SuperDomCertificate {
        d: sorted_d,
        a,
        b,
        witness,
    };
    debug_assert_eq!(cert.check_matching(g), Ok(()));
    Ok(cert)
}

/// The witness core `D*` of a certificate.
pub fn extract_core(cert: &SuperDomCertificate) -> Vec<VertexId> {
    cert.b.clone()
}

/// The exchange transform `(D ∖ D*) ∪ D̄`: swaps the outside set with the
/// core, preserving cardinality and the super domination property.
pub fn exchange(g: &Graph, cert: &SuperDomCertificate) -> Vec<VertexId> {
    let mut in_out = vec![false; g.n()];
    for &v in &cert.b {
        in_out[v] = true;
    }
    let mut d: Vec<VertexId> = cert
        .d
        .iter()
        .copied()
        .filter(|&v| !in_out[v])
        .chain(cert.a.iter().copied())
        .collect();
    d.sort_unstable();
    d
}

/// Lower and upper bounds assembled from matchings and packings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    /// `max(⌈n/2⌉, n − α′, α when bipartite)`.
    pub lower: usize,
    /// `min(n − 1, n − ρ)` without isolated vertices, else `n`.
    pub upper: usize,
    pub alpha_prime: usize,
    pub rho: usize,
    /// Independence number, reported for bipartite inputs where it is a
    /// lower bound (and equals `n − α′`).
    pub alpha: Option<usize>,
    pub bipartite: bool,
    pub has_isolated: bool,
    /// Exact value, attached by callers that also ran a solver.
    pub exact: Option<usize>,
}

/// Computes every applicable bound; never runs the exact solver.
pub fn bounds(g: &Graph) -> BoundsReport {
    let n = g.n();
    let alpha_prime = matching::max_matching(g).size();
    let rho = vertex_sets::max_2packing(g).len();
    let bipartite = g.is_bipartite();
    let alpha = if bipartite {
        Some(vertex_sets::max_independent(g).len())
    } else {
        None
    };
    let has_isolated = (0..n).any(|v| g.degree(v) == 0);
    let lower = (n.div_ceil(2))
        .max(n - alpha_prime)
        .max(alpha.unwrap_or(0));
    let upper = if n == 0 {
        0
    } else if has_isolated {
        n
    } else {
        (n - 1).min(n - rho)
    };
    BoundsReport {
        n,
        lower,
        upper,
        alpha_prime,
        rho,
        alpha,
        bipartite,
        has_isolated,
        exact: None,
    }
}

/// Graph families with known closed-form values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Path on `n ≥ 2` vertices.
    Path(usize),
    /// Cycle on `n ≥ 3` vertices.
    Cycle(usize),
    /// Star with `n ≥ 2` leaves.
    Star(usize),
    /// Star with `n ≥ 2` leaves, every edge subdivided `k ≥ 0` times.
    StarSubdivision { leaves: usize, k: usize },
}

/// Closed-form super domination number for the supported families:
/// paths `⌈n/2⌉`; cycles `⌈n/2⌉`, plus one more when `n ≡ 2 (mod 4)`;
/// stars `n`; subdivided stars `n(k+2)/2` for even `k` and
/// `n(k+1)/2 + 1` for odd `k`.
pub fn gamma_sp_closed_form(family: Family) -> Result<usize, FamilyError> {
    match family {
        Family::Path(n) => {
            if n < 2 {
                return Err(FamilyError::OutOfRange {
                    family: "path",
                    requirement: "n >= 2",
                });
            }
            Ok(n.div_ceil(2))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(FamilyError::OutOfRange {
                    family: "cycle",
                    requirement: "n >= 3",
                });
            }
            Ok(if n % 4 == 2 {
                n / 2 + 1
            } else {
                n.div_ceil(2)
            })
        }
        Family::Star(n) => {
            if n < 2 {
                return Err(FamilyError::OutOfRange {
                    family: "star",
                    requirement: "n >= 2",
                });
            }
            Ok(n)
        }
        Family::StarSubdivision { leaves, k } => {
            if leaves < 2 {
                return Err(FamilyError::OutOfRange {
                    family: "star-subdivision",
                    requirement: "leaves >= 2",
                });
            }
            Ok(if k % 2 == 0 {
                leaves * (k + 2) / 2
            } else {
                leaves * (k + 1) / 2 + 1
            })
        }
    }
}
