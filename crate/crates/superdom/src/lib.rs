//! Exact algorithms, bounds, constructions, and reductions for super
//! domination in simple undirected graphs.
//!
//! A set `D` of vertices is super dominating when every vertex `x` outside
//! `D` has a witness `y` inside `D` whose only neighbor outside `D` is `x`.
//! The crate computes the minimum size of such a set exactly, specializes
//! the computation for trees and subdivided graphs, bounds it via matchings
//! and packings, and builds the reduction instances that tie the problem to
//! satisfiability and independent sets.

pub mod acceptance;
pub mod batch;
pub mod construct;
pub mod dr;
pub mod enumerate;
pub mod error;
pub mod gamma_sp;
pub mod graph;
pub mod induced;
pub mod matching;
pub mod oracle;
pub mod reductions;
pub mod sk;
pub mod structure;
pub mod superdom;
pub mod tree;
pub mod vertex_sets;
