use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::phylo::{Cluster, Profile, Tree};
use crate::primitives::{mark_common_clusters, ClusterTable};

/// Occurrence count of every cluster in a profile, sorted by cluster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMap {
    entries: Vec<(Cluster, u64)>,
}

impl WeightMap {
    fn from_unsorted(mut entries: Vec<(Cluster, u64)>) -> Self {
        entries.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        entries.dedup_by(|a, b| a.0 == b.0);
        Self { entries }
    }

    pub fn get(&self, c: &Cluster) -> Option<u64> {
        self.entries
            .binary_search_by(|(x, _)| x.cmp(c))
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Cluster, u64)> {
        self.entries.iter().map(|(c, w)| (c, *w))
    }

    /// The weight of every node of `t`, indexed by arena id (0 for
    /// tombstones).
    pub fn node_weights(&self, t: &Tree) -> Result<Vec<u64>> {
        let clusters = t.node_clusters();
        let mut out = vec![0; t.arena_len()];
        for v in t.preorder() {
            out[v] = self
                .get(&clusters[v])
                .ok_or_else(|| Error::MissingWeight(clusters[v].clone()))?;
        }
        Ok(out)
    }
}

/// Weights by listing every node's cluster as a bit vector, sorting the
/// list and counting runs. O(kn) clusters of n bits each.
pub fn compute_weights_bitvec(profile: &Profile) -> WeightMap {
    let mut all: Vec<Cluster> = Vec::new();
    for t in profile.trees() {
        let clusters = t.node_clusters();
        all.extend(t.preorder().into_iter().map(|v| clusters[v].clone()));
    }
    all.sort_unstable();
    let mut entries: Vec<(Cluster, u64)> = Vec::new();
    for c in all {
        match entries.last_mut() {
            Some((last, w)) if *last == c => *w += 1,
            _ => entries.push((c, 1)),
        }
    }
    WeightMap { entries }
}

/// Per-node weights of every tree via the bit-vector map.
pub(crate) fn node_weights_bitvec(profile: &Profile) -> Vec<Vec<u64>> {
    let map = compute_weights_bitvec(profile);
    profile
        .trees()
        .iter()
        .map(|t| {
            map.node_weights(t)
                .expect("every node cluster occurs in the profile")
        })
        .collect()
}

/// Per-node weights of every tree by testing each tree's nodes against a
/// cluster table of every tree. O(k²n), no cluster is ever materialised.
pub(crate) fn node_weights_day(profile: &Profile) -> Vec<Vec<u64>> {
    let trees = profile.trees();
    let mut out: Vec<Vec<u64>> = trees.iter().map(|t| vec![0; t.arena_len()]).collect();
    for tj in trees {
        let table = ClusterTable::new(tj);
        for (t, w) in trees.iter().zip(out.iter_mut()) {
            for (wv, hit) in w.iter_mut().zip(mark_common_clusters(t, &table)) {
                *wv += u64::from(hit);
            }
        }
    }
    out
}

/// The same map as [`compute_weights_bitvec`], counted with cluster tables.
pub fn compute_weights_day(profile: &Profile) -> WeightMap {
    let weights = node_weights_day(profile);
    let mut entries = Vec::new();
    for (t, w) in profile.trees().iter().zip(&weights) {
        let clusters = t.node_clusters();
        for v in t.preorder() {
            entries.push((clusters[v].clone(), w[v]));
        }
    }
    WeightMap::from_unsorted(entries)
}
