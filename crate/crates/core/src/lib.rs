//! Exact solvers for the dichromatic number of digraphs.
//!
//! The dichromatic number of a digraph is the least number of parts in a
//! partition of its vertices such that every part induces an acyclic
//! subdigraph. This crate provides:
//!
//! - [`digraph`]: core graph types and structural predicates;
//! - [`expr`]: expression trees denoting labeled digraphs (clique-width
//!   style) and directed co-graphs, with parsers and evaluators;
//! - [`cwdp`]: a dynamic program over clique-width expressions that computes
//!   the dichromatic number exactly, with an optimal coloring as witness;
//! - [`family`]: linear-time solvers for directed co-graphs and directed
//!   cactus forests, plus input classification;
//! - [`oracle`]: brute-force reference solvers and seeded random generators,
//!   used to cross-check the fast paths;
//! - [`ilp`]: export of instances as integer linear programs in LP format;
//! - [`fileio`]: plain-text readers and writers for digraphs and colorings.

pub mod cwdp;
pub mod digraph;
pub mod expr;
pub mod family;
pub mod fileio;
pub mod ilp;
pub mod oracle;

pub use digraph::{
    acyclicity, check_acyclic_coloring, is_acyclic, reach_pairs, scc_decompose, symmetric_part,
    underlying_undirected, Acyclicity, Coloring, ColoringVerdict, Digraph, GraphError, Label,
    LabeledDigraph, ReachSet, UndiGraph,
};
