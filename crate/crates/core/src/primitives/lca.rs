use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::phylo::{NodeId, Tree};

const NONE: u32 = u32::MAX;

/// Constant-time lowest common ancestor queries via an Euler tour and a
/// sparse range-minimum table over node depths. O(m log m) to build.
#[derive(Debug, Clone)]
pub struct LcaIndex {
    euler: Vec<u32>,
    first: Vec<u32>,
    depth: Vec<u32>,
    /// Preorder rank; `tout` is one past the last rank in the subtree.
    tin: Vec<u32>,
    tout: Vec<u32>,
    sparse: Vec<Vec<u32>>,
}

impl LcaIndex {
    pub fn new(t: &Tree) -> Self {
        let m = t.arena_len();
        let mut euler = Vec::with_capacity(2 * m);
        let mut first = vec![NONE; m];
        let mut depth = vec![0u32; m];
        let mut tin = vec![NONE; m];
        let mut tout = vec![NONE; m];
        let mut rank = 0u32;
        let mut stack: Vec<(NodeId, usize)> = vec![(t.root(), 0)];
        first[t.root()] = 0;
        tin[t.root()] = 0;
        euler.push(t.root() as u32);
        rank += 1;
        while let Some(top) = stack.last_mut() {
            let (v, next) = *top;
            if let Some(&c) = t.children(v).get(next) {
                top.1 += 1;
                depth[c] = depth[v] + 1;
                first[c] = euler.len() as u32;
                tin[c] = rank;
                rank += 1;
                euler.push(c as u32);
                stack.push((c, 0));
            } else {
                tout[v] = rank;
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    euler.push(p as u32);
                }
            }
        }

        let len = euler.len();
        let mut sparse = vec![euler.clone()];
        let mut span = 1;
        while 2 * span <= len {
            let prev = sparse.last().unwrap();
            let row: Vec<u32> = (0..=len - 2 * span)
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + span]);
                    if depth[a as usize] <= depth[b as usize] {
                        a
                    } else {
                        b
                    }
                })
                .collect();
            sparse.push(row);
            span *= 2;
        }
        Self {
            euler,
            first,
            depth,
            tin,
            tout,
            sparse,
        }
    }

    pub fn lca(&self, u: NodeId, v: NodeId) -> NodeId {
        let (mut a, mut b) = (self.first[u] as usize, self.first[v] as usize);
        if a > b {
            core::mem::swap(&mut a, &mut b);
        }
        let level = (usize::BITS - 1 - (b - a + 1).leading_zeros()) as usize;
        let row = &self.sparse[level];
        let (x, y) = (row[a], row[b + 1 - (1 << level)]);
        if self.depth[x as usize] <= self.depth[y as usize] {
            x as usize
        } else {
            y as usize
        }
    }

    /// Folds pairwise LCA over `nodes` left to right.
    pub fn lca_of<I: IntoIterator<Item = NodeId>>(&self, nodes: I) -> Result<NodeId> {
        let mut it = nodes.into_iter();
        let first = it.next().ok_or(Error::EmptyCluster)?;
        Ok(it.fold(first, |acc, v| self.lca(acc, v)))
    }

    pub fn depth(&self, v: NodeId) -> usize {
        self.depth[v] as usize
    }

    /// Preorder rank of `v`.
    pub fn preorder_rank(&self, v: NodeId) -> usize {
        self.tin[v] as usize
    }

    /// Preorder ranks of `v`'s subtree form `rank(v)..subtree_end(v)`.
    pub fn subtree_end(&self, v: NodeId) -> usize {
        self.tout[v] as usize
    }

    /// `a` is `d` or one of its ancestors.
    pub fn is_ancestor(&self, a: NodeId, d: NodeId) -> bool {
        self.tin[a] <= self.tin[d] && self.tout[d] <= self.tout[a]
    }

    /// Length of the Euler tour.
    pub fn tour_len(&self) -> usize {
        self.euler.len()
    }
}

/// Lowest common ancestor of a nonempty node set.
pub fn lca_query(index: &LcaIndex, nodes: &[NodeId]) -> Result<NodeId> {
    index.lca_of(nodes.iter().copied())
}
