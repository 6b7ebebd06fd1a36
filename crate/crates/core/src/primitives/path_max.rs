use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::phylo::{NodeId, Tree};

/// Maximum-weight queries on ancestor-descendant paths, by ancestor
/// doubling: `best[j][v]` is the largest weight among `v` and its next
/// `2^j − 1` ancestors.
#[derive(Debug, Clone)]
pub struct PathMaxIndex {
    depth: Vec<usize>,
    up: Vec<Vec<NodeId>>,
    best: Vec<Vec<u64>>,
}

impl PathMaxIndex {
    /// `weights` is indexed by arena id of `t`.
    pub fn new(t: &Tree, weights: &[u64]) -> Self {
        let len = t.arena_len();
        let mut depth = vec![0usize; len];
        let mut up0 = vec![t.root(); len];
        let order = t.preorder();
        for &v in &order {
            if let Some(p) = t.parent(v) {
                depth[v] = depth[p] + 1;
                up0[v] = p;
            }
        }
        let height = order.iter().map(|&v| depth[v]).max().unwrap_or(0);
        let levels = (usize::BITS - (height + 1).leading_zeros()) as usize;
        let mut best0 = vec![0u64; len];
        for &v in &order {
            best0[v] = weights[v];
        }
        let mut up = vec![up0];
        let mut best = vec![best0];
        for j in 1..levels {
            let (pu, pb) = (&up[j - 1], &best[j - 1]);
            let mut nu = vec![0; len];
            let mut nb = vec![0; len];
            for &v in &order {
                let mid = pu[v];
                nu[v] = pu[mid];
                nb[v] = pb[v].max(pb[mid]);
            }
            up.push(nu);
            best.push(nb);
        }
        Self { depth, up, best }
    }

    /// Largest weight among the `count` nodes starting at `v` and going up.
    fn climb(&self, mut v: NodeId, mut count: usize) -> u64 {
        let mut m = 0;
        let mut j = 0;
        while count > 0 {
            if count & 1 == 1 {
                m = m.max(self.best[j][v]);
                v = self.up[j][v];
            }
            count >>= 1;
            j += 1;
        }
        m
    }

    fn check(&self, u: NodeId, v: NodeId) -> Result<usize> {
        let (du, dv) = (self.depth[u], self.depth[v]);
        if dv < du {
            return Err(Error::NotDescendant);
        }
        let diff = dv - du;
        let mut w = v;
        let mut d = diff;
        let mut j = 0;
        while d > 0 {
            if d & 1 == 1 {
                w = self.up[j][w];
            }
            d >>= 1;
            j += 1;
        }
        if w != u {
            return Err(Error::NotDescendant);
        }
        Ok(diff)
    }

    /// Largest weight on the path from `u` down to its descendant `v`, both
    /// ends included.
    pub fn path_max(&self, u: NodeId, v: NodeId) -> Result<u64> {
        let diff = self.check(u, v)?;
        Ok(self.climb(v, diff + 1))
    }

    /// Like [`PathMaxIndex::path_max`] with `u` itself left out; 0 when
    /// `u == v`.
    pub fn path_max_below(&self, u: NodeId, v: NodeId) -> Result<u64> {
        let diff = self.check(u, v)?;
        Ok(self.climb(v, diff))
    }

    /// Unchecked [`PathMaxIndex::path_max_below`] for callers that already
    /// know `u` is an ancestor of `v`.
    pub(crate) fn below_unchecked(&self, u: NodeId, v: NodeId) -> u64 {
        self.climb(v, self.depth[v] - self.depth[u])
    }
}
