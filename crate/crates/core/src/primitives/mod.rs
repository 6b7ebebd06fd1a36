//! Subroutines shared by the consensus algorithms: Day's cluster table,
//! one-way compatibility, tree merging, LCA indexing, centroid paths,
//! induced and restricted weighted subtrees, path-maximum queries and an
//! ordered max-multiset.

mod centroid;
mod compat;
mod day;
mod lca;
mod merge;
mod multiset;
mod path_max;
mod restrict;

pub use centroid::{centroid_decompose, CentroidDecomposition, SideTree};
pub use compat::{compatibility_flags, one_way_compatible};
pub use day::{mark_common_clusters, ClusterTable};
pub use lca::{lca_query, LcaIndex};
pub(crate) use merge::merge_into;
pub use merge::merge_trees;
pub use multiset::MaxMultiset;
pub use path_max::PathMaxIndex;
pub(crate) use restrict::restrict_from_leaves;
pub use restrict::{induced_subtree, weighted_restriction, RestrictedTree};
