//! The O(n log² n) cluster filter.
//!
//! The clusters of `a` along a centroid path form a chain X_1 ⊂ X_2 ⊂ … that
//! grows by whole side trees. A sweep up the path keeps r_i = lca_b(X_i),
//! a counter per node of `b` that detects when a node's leaves all lie in
//! X_i, and a max-multiset holding the nodes that cross X_i. Side trees are
//! handled recursively against `b` restricted to their own leaves, which
//! keeps the total work per recursion level near-linear while each side tree
//! holds at most half of the leaves.

use alloc::vec;
use alloc::vec::Vec;

use crate::phylo::{NodeId, Tree};
use crate::primitives::{
    restrict_from_leaves, LcaIndex, MaxMultiset, PathMaxIndex, RestrictedTree,
};

struct Sweep<'a> {
    a: &'a Tree,
    wa: &'a [u64],
    size_a: Vec<usize>,
    /// Leaf labels of `a` in preorder; `span[v]` is `v`'s range in it.
    leaf_seq: Vec<usize>,
    span: Vec<(usize, usize)>,
    keep: Vec<bool>,
    /// Label → leaf of the restricted tree currently being processed.
    scratch: Vec<NodeId>,
}

pub(crate) fn filter_fast(a: &Tree, wa: &[u64], b: &Tree, wb: &[u64]) -> Vec<bool> {
    let m = a.arena_len();
    let mut leaf_seq = Vec::new();
    let mut span = vec![(0, 0); m];
    for v in a.postorder() {
        span[v] = match a.children(v) {
            [] => {
                leaf_seq.push(a.label(v).expect("labeled leaf"));
                (leaf_seq.len() - 1, leaf_seq.len())
            }
            cs => cs.iter().fold((usize::MAX, 0), |(lo, hi), &c| {
                (lo.min(span[c].0), hi.max(span[c].1))
            }),
        };
    }
    // postorder visits leaves right to left
    let count = leaf_seq.len();
    leaf_seq.reverse();
    for s in span.iter_mut() {
        *s = (count - s.1, count - s.0);
    }

    let mut sweep = Sweep {
        a,
        wa,
        size_a: a.leaf_counts(),
        leaf_seq,
        span,
        keep: vec![true; m],
        scratch: vec![usize::MAX; a.universe().len()],
    };
    let root = RestrictedTree::closed(b.clone(), wb[..b.arena_len()].to_vec());
    sweep.solve(a.root(), root);
    sweep.keep[a.root()] = true;
    sweep.keep
}

impl Sweep<'_> {
    fn leaves(&self, v: NodeId) -> &[usize] {
        let (lo, hi) = self.span[v];
        &self.leaf_seq[lo..hi]
    }

    /// Decides every internal node of `a[v]`; `r` ranges over Λ(a[v]).
    fn solve(&mut self, v: NodeId, r: RestrictedTree) {
        if self.a.is_leaf(v) {
            return;
        }
        let a = self.a;
        let t = &r.tree;
        for z in t.preorder() {
            if let Some(l) = t.label(z).filter(|_| t.is_leaf(z)) {
                self.scratch[l] = z;
            }
        }

        let mut path = vec![v];
        let mut sides: Vec<Vec<NodeId>> = vec![Vec::new()];
        let mut x = v;
        while !a.is_leaf(x) {
            let cs = a.children(x);
            let mut heavy = cs[0];
            for &c in &cs[1..] {
                if self.size_a[c] > self.size_a[heavy] {
                    heavy = c;
                }
            }
            sides
                .last_mut()
                .unwrap()
                .extend(cs.iter().copied().filter(|&c| c != heavy));
            path.push(heavy);
            sides.push(Vec::new());
            x = heavy;
        }

        let idx = LcaIndex::new(t);
        let size = t.leaf_counts();
        let open_weight: Vec<u64> = (0..t.arena_len())
            .map(|z| if r.open[z] { r.weight[z] } else { 0 })
            .collect();
        let open_max = PathMaxIndex::new(t, &open_weight);
        let mut counter = vec![0usize; t.arena_len()];
        let mut touched = vec![false; t.arena_len()];
        let mut bt = MaxMultiset::with_capacity(t.arena_len());

        let saturate = |z: NodeId, counter: &mut Vec<usize>, bt: &mut MaxMultiset| {
            counter[z] = 1;
            let mut z = z;
            while counter[z] == size[z] {
                let _ = bt.remove(z);
                match t.parent(z) {
                    Some(p) => {
                        counter[p] += size[z];
                        z = p;
                    }
                    None => break,
                }
            }
        };

        let p1 = *path.last().unwrap();
        let mut anchor = self.scratch[a.label(p1).expect("labeled leaf")];
        touched[anchor] = true;
        saturate(anchor, &mut counter, &mut bt);
        let mut beta = 0u64;
        let mut batch: Vec<NodeId> = Vec::new();

        for i in (0..path.len() - 1).rev() {
            let p = path[i];
            batch.clear();
            for &s in &sides[i] {
                let (lo, hi) = self.span[s];
                batch.extend(self.leaf_seq[lo..hi].iter().map(|&l| self.scratch[l]));
            }
            let next = batch.iter().fold(anchor, |acc, &d| idx.lca(acc, d));

            if next != anchor {
                beta = beta.max(open_max.below_unchecked(next, anchor));
                let mut z = anchor;
                while z != next {
                    touched[z] = true;
                    if counter[z] < size[z] {
                        bt.insert(z, r.weight[z]);
                    }
                    z = t.parent(z).expect("anchor lies below its successor");
                }
            }
            for &d in &batch {
                beta = beta.max(open_max.below_unchecked(next, d));
                let mut z = d;
                while z != next && !touched[z] {
                    touched[z] = true;
                    if z != d && counter[z] < size[z] {
                        bt.insert(z, r.weight[z]);
                    }
                    z = t.parent(z).expect("batch leaf lies below the anchor");
                }
            }
            for &d in &batch {
                saturate(d, &mut counter, &mut bt);
            }
            anchor = next;

            let heaviest = bt.max().unwrap_or(0).max(beta);
            self.keep[p] = self.wa[p] > heaviest;
        }

        let full = PathMaxIndex::new(t, &r.weight);
        let mut jobs = Vec::new();
        for &s in sides.iter().flatten() {
            if a.is_leaf(s) {
                continue;
            }
            let mut leaves: Vec<NodeId> = self.leaves(s).iter().map(|&l| self.scratch[l]).collect();
            jobs.push((s, restrict_from_leaves(&r, &idx, &full, &size, &mut leaves)));
        }
        drop(r);
        for (s, sub) in jobs {
            self.solve(s, sub);
        }
    }
}
