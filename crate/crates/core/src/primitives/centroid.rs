use alloc::vec::Vec;

use crate::phylo::{NodeId, Tree};

/// A subtree hanging off the centroid path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SideTree {
    /// The path node this subtree hangs from.
    pub attach: NodeId,
    /// Root of the subtree; a child of `attach` that is not on the path.
    pub root: NodeId,
}

/// A root-to-leaf path that always descends into a child with the most leaf
/// descendants (the leftmost one on ties), plus every subtree hanging off it.
#[derive(Debug, Clone)]
pub struct CentroidDecomposition {
    /// Path nodes from the root down to a leaf.
    pub path: Vec<NodeId>,
    /// Side trees grouped by attachment node, in path order.
    pub side_trees: Vec<SideTree>,
}

impl CentroidDecomposition {
    /// The leaf at the bottom of the path.
    pub fn leaf(&self) -> NodeId {
        *self.path.last().expect("path is never empty")
    }
}

pub fn centroid_decompose(t: &Tree) -> CentroidDecomposition {
    let size = t.leaf_counts();
    let mut path = Vec::new();
    let mut side_trees = Vec::new();
    let mut v = t.root();
    loop {
        path.push(v);
        let children = t.children(v);
        let Some(&first) = children.first() else {
            break;
        };
        let mut heavy = first;
        for &c in &children[1..] {
            if size[c] > size[heavy] {
                heavy = c;
            }
        }
        side_trees.extend(
            children
                .iter()
                .filter(|&&c| c != heavy)
                .map(|&c| SideTree { attach: v, root: c }),
        );
        v = heavy;
    }
    CentroidDecomposition { path, side_trees }
}
