use alloc::vec;
use alloc::vec::Vec;

use super::lca::LcaIndex;
use crate::error::{Error, Result};
use crate::phylo::Tree;

/// For every node `u` of `a`, whether Λ(a[u]) is compatible with every
/// cluster of `b`. Indexed by `a`'s arena ids.
///
/// A cluster X is compatible with `b` iff it is the union of those children
/// of r = lca_b(X) that lie entirely inside X. A child c of r lies inside
/// Λ(a[u]) iff lca_a(Λ(b[c])) is in `a`'s subtree at `u`, so after bucketing
/// the children of every `b` node by the preorder rank of that LCA in `a`,
/// each test is a range sum. O(n log n) overall.
pub fn compatibility_flags(a: &Tree, b: &Tree) -> Result<Vec<bool>> {
    let a_leaf = a.leaf_map();
    let b_leaf = b.leaf_map();
    if a_leaf
        .iter()
        .map(Option::is_some)
        .ne(b_leaf.iter().map(Option::is_some))
    {
        return Err(Error::LeafSetMismatch { tree: 1 });
    }
    let idx_a = LcaIndex::new(a);
    let idx_b = LcaIndex::new(b);
    let size_a = a.leaf_counts();
    let size_b = b.leaf_counts();
    let total = size_a[a.root()];

    // lca in b of every a-cluster
    let mut r = vec![usize::MAX; a.arena_len()];
    let post_a = a.postorder();
    for &u in &post_a {
        r[u] = match a.label(u).filter(|_| a.is_leaf(u)) {
            Some(l) => b_leaf[l].ok_or(Error::LeafSetMismatch { tree: 1 })?,
            None => idx_b.lca_of(a.children(u).iter().map(|&c| r[c]))?,
        };
    }
    // lca in a of every b-cluster
    let mut s = vec![usize::MAX; b.arena_len()];
    let post_b = b.postorder();
    for &c in &post_b {
        s[c] = match b.label(c).filter(|_| b.is_leaf(c)) {
            Some(l) => a_leaf[l].ok_or(Error::LeafSetMismatch { tree: 1 })?,
            None => idx_a.lca_of(b.children(c).iter().map(|&x| s[x]))?,
        };
    }

    // children of each b node, keyed by preorder rank in a of their lca
    let mut start = vec![0usize; b.arena_len() + 1];
    for &c in &post_b {
        if let Some(p) = b.parent(c) {
            start[p + 1] += 1;
        }
    }
    for i in 0..b.arena_len() {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut items = vec![(0u32, 0u32); start[b.arena_len()]];
    for &c in &post_b {
        if let Some(p) = b.parent(c) {
            items[fill[p]] = (idx_a.preorder_rank(s[c]) as u32, size_b[c] as u32);
            fill[p] += 1;
        }
    }
    for p in 0..b.arena_len() {
        items[start[p]..start[p + 1]].sort_unstable();
    }
    let mut prefix = Vec::with_capacity(items.len() + 1);
    prefix.push(0u64);
    for &(_, sz) in &items {
        prefix.push(prefix.last().unwrap() + u64::from(sz));
    }

    let mut out = vec![false; a.arena_len()];
    for &u in &post_a {
        if size_a[u] == 1 || size_a[u] == total {
            out[u] = true;
            continue;
        }
        let p = r[u];
        let group = &items[start[p]..start[p + 1]];
        let lo = idx_a.preorder_rank(u) as u32;
        let hi = idx_a.subtree_end(u) as u32;
        let i = group.partition_point(|&(rank, _)| rank < lo);
        let j = group.partition_point(|&(rank, _)| rank < hi);
        let inside = prefix[start[p] + j] - prefix[start[p] + i];
        out[u] = inside == size_a[u] as u64;
    }
    Ok(out)
}

/// Copy of `a` keeping exactly the clusters compatible with `b`.
pub fn one_way_compatible(a: &Tree, b: &Tree) -> Result<Tree> {
    let keep = compatibility_flags(a, b)?;
    let mut out = a.clone();
    for v in a.preorder() {
        if !keep[v] {
            out.delete_node(v)?;
        }
    }
    Ok(out.compact().0)
}
