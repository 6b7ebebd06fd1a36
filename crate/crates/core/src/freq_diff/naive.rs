use alloc::vec;
use alloc::vec::Vec;

use crate::phylo::Tree;

/// For every node u of `a`, whether w(u) beats every node of `b` whose
/// cluster crosses Λ(a[u]). Indexed by arena id of `a`; O(n²).
///
/// For a cluster X with r = lca_b(X), the nodes of `b` crossing X are
/// exactly the nodes strictly below r that hold some leaf of X and some leaf
/// outside X. One bottom-up count of X-leaves per node finds them.
pub(crate) fn filter_naive(a: &Tree, wa: &[u64], b: &Tree, wb: &[u64]) -> Vec<bool> {
    let width = a.universe().len();
    let mut owner = vec![usize::MAX; width];
    let mut keep = vec![false; a.arena_len()];
    let size_a = a.leaf_counts();
    let size_b = b.leaf_counts();
    let post_b = b.postorder();
    let mut inside = vec![0usize; b.arena_len()];
    let mut stack = Vec::new();

    for u in a.preorder() {
        if a.is_leaf(u) || u == a.root() {
            keep[u] = true;
            continue;
        }
        stack.push(u);
        while let Some(x) = stack.pop() {
            match a.label(x).filter(|_| a.is_leaf(x)) {
                Some(l) => owner[l] = u,
                None => stack.extend_from_slice(a.children(x)),
            }
        }
        let total = size_a[u];
        let mut heaviest = 0;
        for &z in &post_b {
            inside[z] = match b.label(z).filter(|_| b.is_leaf(z)) {
                Some(l) => usize::from(owner[l] == u),
                None => b.children(z).iter().map(|&c| inside[c]).sum(),
            };
            let i = inside[z];
            if i > 0 && i < size_b[z] && i < total {
                heaviest = heaviest.max(wb[z]);
            }
        }
        keep[u] = wa[u] > heaviest;
    }
    keep
}
