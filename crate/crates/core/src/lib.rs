//! Majority rule (+) and frequency difference consensus trees.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure
//! computation over in-memory trees; reading files, the command line and
//! benchmarking live in the `phylo-consensus-cli` crate.
//!
//! Module map:
//!
//! * [`phylo`]: label universe, clusters, the arena [`Tree`], Newick text,
//!   profiles and tree construction from laminar families.
//! * [`primitives`]: Day's cluster table, one-way compatibility, tree
//!   merging, LCA indexing, centroid paths, restricted weighted trees,
//!   path-maximum queries and the max-multiset used by the filter sweep.
//! * [`majority_plus`]: the linear-time majority rule (+) construction.
//! * [`freq_diff`]: cluster weights, the two cluster filters and the
//!   frequency difference construction.
//! * [`oracle`]: brute-force reference definitions used for verification.
//! * [`generate`]: seeded random tree profiles.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod freq_diff;
pub mod generate;
pub mod majority_plus;
pub mod oracle;
pub mod phylo;
pub mod primitives;

pub use error::{Error, Result};
pub use freq_diff::{
    frequency_difference_consensus, FilterImpl, FreqDiffOptions, WeightMap, WeightsMethod,
};
pub use majority_plus::majority_plus_consensus;
pub use phylo::{Cluster, Label, LabelUniverse, NodeId, Profile, Tree};
