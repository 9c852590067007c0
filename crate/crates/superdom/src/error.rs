//! Error types shared across the crate.

use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("loop at vertex {vertex} is not allowed")]
    Loop { vertex: VertexId },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: VertexId, v: VertexId },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("line {line}: header must be two integers `n m`")]
    BadHeader { line: usize },
    #[error("line {line}: edge line must be two integers `u v`")]
    BadEdgeLine { line: usize },
    #[error("line {line}: {source}")]
    BadEdge { line: usize, source: GraphError },
    #[error("header announced {header} edges but {seen} were given")]
    EdgeCountMismatch { header: usize, seen: usize },
}

/// Why a vertex set was rejected as a super dominating set.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Refusal {
    #[error("vertex {vertex} has no neighbor in the set")]
    Undominated { vertex: VertexId },
    #[error("vertex {vertex} has no private super-dominator in the set")]
    NoPrivateWitness { vertex: VertexId },
    #[error("set contains vertex {vertex}, which is out of range for n = {n}")]
    SetOutOfRange { vertex: VertexId, n: usize },
    #[error("set lists vertex {vertex} twice")]
    SetDuplicate { vertex: VertexId },
}

impl Refusal {
    /// The vertex the refusal points at.
    pub fn vertex(&self) -> VertexId {
        match *self {
            Refusal::Undominated { vertex }
            | Refusal::NoPrivateWitness { vertex }
            | Refusal::SetOutOfRange { vertex, .. }
            | Refusal::SetDuplicate { vertex } => vertex,
        }
    }
}

/// Violations found when re-checking a certificate against a graph.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateViolation {
    #[error("certificate sets do not partition the vertex set as claimed")]
    BadPartition,
    #[error("witness pair ({a}, {b}) is not an edge")]
    WitnessNotAnEdge { a: VertexId, b: VertexId },
    #[error("vertex {vertex} is matched more than once by the witness pairs")]
    WitnessNotAMatching { vertex: VertexId },
    #[error("extra edge {{{u}, {v}}} joins the two classes outside the witness pairs")]
    ExtraCrossEdge { u: VertexId, v: VertexId },
    #[error("vertex {vertex} of a class is missed by the witness pairs")]
    ClassVertexUncovered { vertex: VertexId },
    #[error("matching lists edge {edge} twice")]
    DuplicateEdge { edge: EdgeId },
    #[error("edge {edge} is out of range")]
    EdgeOutOfRange { edge: EdgeId },
    #[error("edges {first} and {second} share an endpoint")]
    SharedEndpoint { first: EdgeId, second: EdgeId },
    #[error("edge {{{u}, {v}}} joins covered vertices but is not part of the matching")]
    NotInduced { u: VertexId, v: VertexId },
    #[error("the two matchings share edge {edge}")]
    SidesOverlap { edge: EdgeId },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has no even cycle")]
    NoEvenCycle,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("graph is not a forest: it contains a cycle")]
    NotAForest,
    #[error("internal labeling check failed: {0}")]
    Internal(&'static str),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubdivisionError {
    #[error("base invariant could not be computed within the budget")]
    BaseIncomplete,
    #[error("constructed set failed verification: {0}")]
    Inconsistent(Refusal),
    #[error("constructed set has {built} vertices but the formula gives {formula}")]
    CardinalityMismatch { built: usize, formula: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} is defined here only for {requirement}")]
    OutOfRange {
        family: &'static str,
        requirement: &'static str,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CnfError {
    #[error("missing `p cnf <vars> <clauses>` header")]
    MissingHeader,
    #[error("line {line}: malformed header")]
    BadHeader { line: usize },
    #[error("line {line}: token `{token}` is not an integer")]
    BadToken { line: usize, token: String },
    #[error("clause {clause} has {len} literals; exactly 3 are required")]
    NotThreeLiterals { clause: usize, len: usize },
    #[error("clause {clause} uses variable {var}, outside 1..={vars}")]
    VarOutOfRange { clause: usize, var: i64, vars: usize },
    #[error("last clause is not terminated by 0")]
    MissingTerminator,
    #[error("header announced {header} clauses but {seen} were given")]
    ClauseCountMismatch { header: usize, seen: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TranslateError {
    #[error("assignment covers {given} variables but the formula has {expected}")]
    AssignmentLength { given: usize, expected: usize },
    #[error("certificate does not verify: {0}")]
    BadCertificate(Refusal),
    #[error("set has {size} vertices, above the decision threshold {threshold}; no conclusion")]
    AboveThreshold { size: usize, threshold: usize },
    #[error("independent set is invalid: vertices {u} and {v} are adjacent")]
    NotIndependent { u: VertexId, v: VertexId },
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("certificate is not valid on the product graph: {0}")]
    BadIiCertificate(CertificateViolation),
    #[error("internal translation invariant failed: {0}")]
    Internal(&'static str),
}
