//! Tree data model, label interning, cluster algebra and Newick text.

mod build;
mod cluster;
pub mod newick;
mod profile;
mod tree;
mod universe;

pub use build::tree_from_clusters;
pub use cluster::{clusters_compatible, Cluster};
pub use newick::{parse_newick, write_newick};
pub use profile::Profile;
pub use tree::{cluster_compatible_with_tree, trees_isomorphic, Node, NodeId, Tree};
pub use universe::{Label, LabelUniverse};
