//! Algorithms for intersection graphs of non-crossing paths in a tree.
//!
//! A graph in this family is represented by a host tree whose nodes are the
//! maximal cliques of the graph; every vertex occupies a path of tree nodes,
//! and any two of these paths are non-crossing (the set differences of their
//! node sets stay connected). The crate provides:
//!
//! * [`graph`] — adjacency-list graphs, parsing, connected components,
//!   block-cut trees and twin partitions;
//! * [`chordal`] — Lex-BFS, perfect elimination orderings with hole
//!   extraction, maximal cliques and clique trees;
//! * [`model`] — annotation of a clique tree into a non-crossing path model,
//!   the terminal/junction/mixed node classification, the edge partition into
//!   pieces, and auxiliary interval graphs per piece;
//! * [`recognition`] — certifying recognition of the four graph classes
//!   (chordal, paths-in-tree, paths-in-rooted-tree, proper interval) with
//!   hole/claw/3-sun/net witnesses and certificate verification;
//! * [`domination`] — minimum (independent/connected) dominating sets and
//!   Steiner trees;
//! * [`hamiltonicity`] — Hamiltonian cycles and paths and minimum-leaf
//!   spanning trees via an Eulerian trace multigraph.

pub mod chordal;
pub mod domination;
pub mod graph;
pub mod hamiltonicity;
pub mod model;
pub mod recognition;
