//! Graphs, digraphs (boards), posets and rooted trees, with the enumerations
//! the invariants are built from.

pub mod covers;
pub mod digraph;
pub mod graph;
pub mod io;
pub mod iso;
pub mod poset;
pub mod tableaux;
pub mod tree;

pub use covers::{drop_edges, path_cycle_covers, rook_placements_full, PathCycleCover};
pub use digraph::{build_d_lambda_mu, Digraph};
pub use graph::Graph;
pub use io::{parse_structure, serialize_structure, Structure};
pub use iso::iso_classes;
pub use poset::Poset;
pub use tableaux::{enumerate_d_tableaux, enumerate_p_tableaux, popping_classes, PoppingClass, Tableau};
pub use tree::RootedTree;
