use alloc::vec;
use alloc::vec::Vec;

use crate::phylo::{Label, Tree};

const NONE: u32 = u32::MAX;

/// Day's table: after an O(n) pass over a reference tree, answers
/// "is this cluster a cluster of the reference tree" in O(1), given the
/// cluster's (min, max, size) under the reference leaf ordering.
///
/// Leaves are ranked in depth-first order, so every reference cluster is a
/// rank interval. An interval is stored in the row of its right end when its
/// node is the leftmost child of its parent (or the root) and in the row of
/// its left end otherwise; no row receives two intervals.
#[derive(Debug, Clone)]
pub struct ClusterTable {
    rank: Vec<u32>,
    by_left: Vec<u32>,
    by_right: Vec<u32>,
}

impl ClusterTable {
    pub fn new(t_ref: &Tree) -> Self {
        let n = t_ref.universe().len();
        let mut rank = vec![NONE; n];
        let m = t_ref.arena_len();
        let mut lo = vec![NONE; m];
        let mut hi = vec![0u32; m];
        let mut next = 0u32;
        let order = t_ref.preorder();
        for &v in &order {
            if t_ref.is_leaf(v) {
                if let Some(l) = t_ref.label(v) {
                    rank[l] = next;
                    lo[v] = next;
                    hi[v] = next;
                    next += 1;
                }
            }
        }
        for &v in order.iter().rev() {
            if let Some(p) = t_ref.parent(v) {
                lo[p] = lo[p].min(lo[v]);
                hi[p] = hi[p].max(hi[v]);
            }
        }
        let leaves = next as usize;
        let mut by_left = vec![NONE; leaves];
        let mut by_right = vec![NONE; leaves];
        for &v in &order {
            if t_ref.is_leaf(v) {
                continue;
            }
            // children partition the parent's interval, so the leftmost child
            // is the one sharing the parent's left end
            let leftmost = t_ref.parent(v).is_none_or(|p| lo[p] == lo[v]);
            if leftmost {
                debug_assert_eq!(by_right[hi[v] as usize], NONE);
                by_right[hi[v] as usize] = lo[v];
            } else {
                debug_assert_eq!(by_left[lo[v] as usize], NONE);
                by_left[lo[v] as usize] = hi[v];
            }
        }
        Self {
            rank,
            by_left,
            by_right,
        }
    }

    /// Rank of a leaf label in the reference ordering.
    pub fn rank(&self, label: Label) -> Option<usize> {
        let r = *self.rank.get(label)?;
        (r != NONE).then_some(r as usize)
    }

    /// Whether the ranks `min..=max` with `size` members form a reference
    /// cluster.
    pub fn occurs(&self, min: usize, max: usize, size: usize) -> bool {
        if max < min || max - min + 1 != size {
            return false;
        }
        size == 1
            || self.by_left.get(min) == Some(&(max as u32))
            || self.by_right.get(max) == Some(&(min as u32))
    }
}

/// For every node `u` of `t`, whether Λ(t[u]) is a cluster of the table's
/// reference tree. Indexed by arena id; O(n) in total.
pub fn mark_common_clusters(t: &Tree, table: &ClusterTable) -> Vec<bool> {
    let m = t.arena_len();
    let mut lo = vec![usize::MAX; m];
    let mut hi = vec![0usize; m];
    let mut size = vec![0usize; m];
    let mut out = vec![false; m];
    for v in t.postorder() {
        if t.is_leaf(v) {
            match t.label(v).and_then(|l| table.rank(l)) {
                Some(r) => {
                    lo[v] = r;
                    hi[v] = r;
                    size[v] = 1;
                }
                None => {
                    // label missing from the reference: poisons every ancestor
                    size[v] = usize::MAX / 4;
                }
            }
        } else {
            for &c in t.children(v) {
                lo[v] = lo[v].min(lo[c]);
                hi[v] = hi[v].max(hi[c]);
                size[v] = size[v].saturating_add(size[c]);
            }
        }
        out[v] = table.occurs(lo[v], hi[v], size[v]);
    }
    out
}
