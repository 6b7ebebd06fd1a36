//! Frequency difference consensus.
//!
//! The consensus tree is built by threading a tree T through the profile:
//! at step j, clusters of T that lose to a crossing cluster of T_j are
//! dropped, clusters of T_j that lose to a crossing cluster of T are
//! dropped, and the survivors are merged. A final pass filters T against
//! every tree once more. Cluster weights (occurrence counts) travel with the
//! nodes, so intermediate trees never need a cluster lookup.

mod fast;
mod naive;
mod weights;

use alloc::vec::Vec;

pub use weights::{compute_weights_bitvec, compute_weights_day, WeightMap};

use crate::error::{Error, Result};
use crate::phylo::{Profile, Tree};
use crate::primitives::merge_into;

/// Which cluster filter to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FilterImpl {
    /// Quadratic, one bottom-up pass over the second tree per cluster.
    Naive,
    /// Centroid-path sweep with recursion on restricted trees.
    #[default]
    Fast,
}

/// How cluster weights are computed up front.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WeightsMethod {
    /// Sort all clusters as bit vectors. O(kn²).
    Bitvec,
    /// Cluster tables between every pair of trees. O(k²n).
    Day,
    /// `Bitvec` when k ≥ n, otherwise `Day`.
    #[default]
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FreqDiffOptions {
    pub filter: FilterImpl,
    pub weights: WeightsMethod,
}

fn filter_flags(imp: FilterImpl, a: &Tree, wa: &[u64], b: &Tree, wb: &[u64]) -> Vec<bool> {
    match imp {
        FilterImpl::Naive => naive::filter_naive(a, wa, b, wb),
        FilterImpl::Fast => fast::filter_fast(a, wa, b, wb),
    }
}

/// `t` contracted to the flagged nodes, with its weights carried along.
fn contract(t: &Tree, w: &[u64], keep: &[bool]) -> (Tree, Vec<u64>) {
    let (out, map) = t.contract(keep);
    (out, carry(w, &map))
}

fn carry(w: &[u64], map: &[Option<usize>]) -> Vec<u64> {
    let mut out = Vec::new();
    for (old, new) in map.iter().enumerate() {
        if let Some(new) = *new {
            if out.len() <= new {
                out.resize(new + 1, 0);
            }
            out[new] = w[old];
        }
    }
    out
}

fn check_pair(t_a: &Tree, t_b: &Tree) -> Result<()> {
    if t_a.universe() != t_b.universe() || t_a.leaf_set() != t_b.leaf_set() {
        return Err(Error::LeafSetMismatch { tree: 1 });
    }
    Ok(())
}

fn filter_with(imp: FilterImpl, t_a: &Tree, t_b: &Tree, w: &WeightMap) -> Result<Tree> {
    check_pair(t_a, t_b)?;
    let wa = w.node_weights(t_a)?;
    let wb = w.node_weights(t_b)?;
    Ok(t_a.contract(&filter_flags(imp, t_a, &wa, t_b, &wb)).0)
}

/// The clusters of `t_a` heavier than every crossing cluster of `t_b`,
/// found with one counting pass over `t_b` per cluster.
pub fn filter_clusters_naive(t_a: &Tree, t_b: &Tree, w: &WeightMap) -> Result<Tree> {
    filter_with(FilterImpl::Naive, t_a, t_b, w)
}

/// Same result as [`filter_clusters_naive`] in O(n log² n) time.
pub fn filter_clusters_fast(t_a: &Tree, t_b: &Tree, w: &WeightMap) -> Result<Tree> {
    filter_with(FilterImpl::Fast, t_a, t_b, w)
}

/// The frequency difference consensus tree of `profile`: every cluster that
/// occurs in more trees than each cluster incompatible with it.
pub fn frequency_difference_consensus(profile: &Profile, options: FreqDiffOptions) -> Result<Tree> {
    frequency_difference_observed(profile, options, |_, _| {})
}

/// [`frequency_difference_consensus`], calling `observe(j, t)` after the
/// j-th tree (1-based) has been folded into the running tree `t`.
pub fn frequency_difference_observed<F>(
    profile: &Profile,
    options: FreqDiffOptions,
    mut observe: F,
) -> Result<Tree>
where
    F: FnMut(usize, &Tree),
{
    let method = match options.weights {
        WeightsMethod::Auto if profile.k() >= profile.n() => WeightsMethod::Bitvec,
        WeightsMethod::Auto => WeightsMethod::Day,
        m => m,
    };
    let weights = match method {
        WeightsMethod::Day => weights::node_weights_day(profile),
        _ => weights::node_weights_bitvec(profile),
    };
    let trees = profile.trees();
    let imp = options.filter;

    let mut t = trees[0].clone();
    let mut w = weights[0].clone();
    observe(1, &t);
    for (j, (tj, wj)) in trees.iter().zip(&weights).enumerate().skip(1) {
        let (mut merged, mut wm) = contract(&t, &w, &filter_flags(imp, &t, &w, tj, wj));
        let (b, wb) = contract(tj, wj, &filter_flags(imp, tj, wj, &t, &w));
        let leaves = merged.leaf_map();
        let image = merge_into(&mut merged, &b, |l| leaves[l])?;
        wm.resize(merged.arena_len(), 0);
        for x in b.preorder() {
            wm[image[x]] = wb[x];
        }
        let (compact, map) = merged.compact();
        w = carry(&wm, &map);
        t = compact;
        observe(j + 1, &t);
    }
    for (tj, wj) in trees.iter().zip(&weights) {
        let keep = filter_flags(imp, &t, &w, tj, wj);
        (t, w) = contract(&t, &w, &keep);
    }
    Ok(t)
}
