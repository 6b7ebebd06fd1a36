use alloc::vec;
use alloc::vec::Vec;

use super::lca::LcaIndex;
use super::path_max::PathMaxIndex;
use crate::error::{Error, Result};
use crate::phylo::{Cluster, NodeId, Tree};

/// A weighted tree restricted to a subset of its leaves.
///
/// Every node carries the weight of the cluster it stands for. Where the
/// restriction contracted a nonempty path of source nodes above a kept node,
/// a unary *special* node is inserted on that edge carrying the path's
/// maximum weight.
///
/// A node is *open* when the source cluster it stands for has leaves outside
/// this tree's leaf set. Special nodes are always open. For a cluster C of
/// the restricted leaf set, a closed node with cluster Z conflicts with C
/// when the two cross; an open node conflicts with C when C meets Z without
/// being contained in it. Under these rules the heaviest conflicting node of
/// the restriction has the same weight as the heaviest source cluster
/// crossing C.
#[derive(Debug, Clone)]
pub struct RestrictedTree {
    pub tree: Tree,
    /// Indexed by arena id of `tree`.
    pub weight: Vec<u64>,
    pub special: Vec<bool>,
    pub open: Vec<bool>,
}

impl RestrictedTree {
    /// An unrestricted tree: no special nodes, nothing open.
    pub fn closed(tree: Tree, weight: Vec<u64>) -> Self {
        let len = tree.arena_len();
        Self {
            tree,
            weight,
            special: vec![false; len],
            open: vec![false; len],
        }
    }

    /// Whether node `z` conflicts with `c` under the rules above.
    pub fn conflicts(&self, z: NodeId, c: &Cluster) -> bool {
        let lz = self.tree.cluster_of(z);
        if self.open[z] {
            lz.intersects(c) && !c.is_subset(&lz)
        } else {
            !lz.is_compatible(c)
        }
    }

    /// Largest weight of a node conflicting with `c`, or 0.
    pub fn max_conflict(&self, c: &Cluster) -> u64 {
        self.tree
            .preorder()
            .into_iter()
            .filter(|&z| self.conflicts(z, c))
            .map(|z| self.weight[z])
            .max()
            .unwrap_or(0)
    }
}

/// Subtree of `t` induced by the leaf nodes `leaves`: the leaves plus the
/// LCA of every pair of them, with unary chains suppressed. Returns the tree
/// and the induced → source id map. `leaves` is reordered.
pub(crate) fn induced_from_leaves(
    t: &Tree,
    idx: &LcaIndex,
    leaves: &mut [NodeId],
) -> (Tree, Vec<NodeId>) {
    leaves.sort_unstable_by_key(|&v| idx.preorder_rank(v));
    let mut nodes = Vec::with_capacity(2 * leaves.len());
    nodes.extend_from_slice(leaves);
    for w in leaves.windows(2) {
        nodes.push(idx.lca(w[0], w[1]));
    }
    nodes.sort_unstable_by_key(|&v| idx.preorder_rank(v));
    nodes.dedup();

    let mut parents = Vec::with_capacity(nodes.len());
    let mut labels = Vec::with_capacity(nodes.len());
    let mut stack: Vec<usize> = Vec::new();
    for (i, &v) in nodes.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if idx.is_ancestor(nodes[top], v) {
                break;
            }
            stack.pop();
        }
        parents.push(stack.last().copied());
        labels.push(if t.is_leaf(v) { t.label(v) } else { None });
        stack.push(i);
    }
    (
        Tree::from_parents(t.universe_arc().clone(), &parents, &labels),
        nodes,
    )
}

/// Restriction of `src` to the leaf nodes `leaves`. `idx` and `full` index
/// `src.tree`; `full` holds the plain node weights.
pub(crate) fn restrict_from_leaves(
    src: &RestrictedTree,
    idx: &LcaIndex,
    full: &PathMaxIndex,
    src_size: &[usize],
    leaves: &mut [NodeId],
) -> RestrictedTree {
    let t = &src.tree;
    let (induced, map) = induced_from_leaves(t, idx, leaves);
    let m = induced.arena_len();
    let size = induced.leaf_counts();

    let mut parents: Vec<Option<NodeId>> = Vec::with_capacity(2 * m);
    let mut labels = Vec::with_capacity(2 * m);
    let mut weight = Vec::with_capacity(2 * m);
    let mut special = Vec::with_capacity(2 * m);
    let mut open = Vec::with_capacity(2 * m);
    // induced nodes keep their ids; special nodes are appended
    for v in 0..m {
        let s = map[v];
        parents.push(induced.parent(v));
        labels.push(induced.label(v));
        weight.push(src.weight[s]);
        special.push(false);
        open.push(src.open[s] || src_size[s] > size[v]);
    }
    for v in 0..m {
        let Some(p) = induced.parent(v) else { continue };
        let (s, sp) = (map[v], map[p]);
        if idx.depth(s) - idx.depth(sp) > 1 {
            let above = t.parent(s).expect("non-root source node");
            let z = parents.len();
            parents.push(Some(p));
            labels.push(None);
            weight.push(full.below_unchecked(sp, above));
            special.push(true);
            open.push(true);
            parents[v] = Some(z);
        }
    }
    let tree = Tree::from_parents(t.universe_arc().clone(), &parents, &labels);
    RestrictedTree {
        tree,
        weight,
        special,
        open,
    }
}

fn leaves_of(t: &Tree, c: &Cluster) -> Result<Vec<NodeId>> {
    if c.is_empty() {
        return Err(Error::EmptyCluster);
    }
    let map = t.leaf_map();
    c.labels()
        .map(|l| {
            map.get(l)
                .copied()
                .flatten()
                .ok_or_else(|| Error::UnknownLabel(t.universe().name(l).into()))
        })
        .collect()
}

/// The subtree of `t` induced by the leaves in `c`, plus the induced →
/// source node map.
pub fn induced_subtree(t: &Tree, c: &Cluster) -> Result<(Tree, Vec<NodeId>)> {
    let mut leaves = leaves_of(t, c)?;
    let idx = LcaIndex::new(t);
    Ok(induced_from_leaves(t, &idx, &mut leaves))
}

/// Restriction of the weighted tree `t_b` to the leaves in `c`. `weights`
/// is indexed by arena id of `t_b`.
pub fn weighted_restriction(t_b: &Tree, c: &Cluster, weights: &[u64]) -> Result<RestrictedTree> {
    let mut leaves = leaves_of(t_b, c)?;
    if weights.len() < t_b.arena_len() {
        return Err(Error::InvalidParameter("one weight per node is required"));
    }
    let src = RestrictedTree::closed(t_b.clone(), weights[..t_b.arena_len()].to_vec());
    let idx = LcaIndex::new(t_b);
    let full = PathMaxIndex::new(t_b, weights);
    Ok(restrict_from_leaves(
        &src,
        &idx,
        &full,
        &t_b.leaf_counts(),
        &mut leaves,
    ))
}
