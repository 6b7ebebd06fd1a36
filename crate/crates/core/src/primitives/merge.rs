use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::phylo::{Label, NodeId, Tree};

/// Inserts into `base` every cluster of `other` that `base` lacks.
///
/// Returns, for every arena id of `other`, the node of `base` carrying the
/// same cluster afterwards (`usize::MAX` for tombstones). Newly created nodes
/// are appended to `base`'s arena. `leaf_of` maps a label to its leaf in
/// `base`.
///
/// `other` is processed bottom-up. For a node b with cluster C, the image of
/// each child is lifted while its parent in `base` has at most |C| leaves.
/// If the lifted nodes are one node of size |C|, that node is C. Otherwise C
/// is compatible with `base` exactly when the lifted nodes are siblings whose
/// sizes add up to |C|, and C is inserted as a new node grouping them. Every
/// node of `base` is lifted over at most once, so the merge is linear apart
/// from the initial size count.
pub(crate) fn merge_into<F>(base: &mut Tree, other: &Tree, leaf_of: F) -> Result<Vec<NodeId>>
where
    F: Fn(Label) -> Option<NodeId>,
{
    let mut size = base.leaf_counts();
    let mut stamp = vec![usize::MAX; base.arena_len()];
    let other_size = other.leaf_counts();
    let mut image = vec![usize::MAX; other.arena_len()];
    let mut lifted: Vec<NodeId> = Vec::new();
    let incompatible = |b: NodeId| Error::MergeIncompatible(other.cluster_of(b));

    for (step, b) in other.postorder().into_iter().enumerate() {
        if other.is_leaf(b) {
            let l = other.label(b).ok_or(Error::InvalidNode("unlabeled leaf"))?;
            image[b] = leaf_of(l).ok_or(Error::LeafSetMismatch { tree: 1 })?;
            continue;
        }
        let cs = other_size[b];
        lifted.clear();
        for &c in other.children(b) {
            let mut y = image[c];
            while let Some(p) = base.parent(y) {
                if size[p] > cs {
                    break;
                }
                y = p;
            }
            if stamp[y] != step {
                stamp[y] = step;
                lifted.push(y);
            }
        }
        if lifted.len() == 1 {
            if size[lifted[0]] != cs {
                return Err(incompatible(b));
            }
            image[b] = lifted[0];
            continue;
        }
        let u = base.parent(lifted[0]).ok_or_else(|| incompatible(b))?;
        let mut sum = 0;
        for &y in &lifted {
            if base.parent(y) != Some(u) {
                return Err(incompatible(b));
            }
            sum += size[y];
        }
        if sum != cs {
            return Err(incompatible(b));
        }
        let new = base.regroup(u, &lifted);
        size.push(cs);
        stamp.push(usize::MAX);
        image[b] = new;
    }
    Ok(image)
}

/// A tree whose cluster collection is C(a) ∪ C(b), for compatible trees on
/// the same leaf set.
pub fn merge_trees(a: &Tree, b: &Tree) -> Result<Tree> {
    let mut out = a.clone();
    let leaves = a.leaf_map();
    if a.leaf_set() != b.leaf_set() {
        return Err(Error::LeafSetMismatch { tree: 1 });
    }
    merge_into(&mut out, b, |l| leaves[l])?;
    Ok(out.compact().0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{numbered_universe, random_tree_over};
    use crate::phylo::{parse_newick, tree_from_clusters, trees_isomorphic, Cluster};
    use alloc::collections::BTreeSet;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn t(s: &str) -> Tree {
        parse_newick(s, None).unwrap()
    }

    #[test]
    fn examples() {
        let x = t("(((a,b),(c,d)),e);");
        assert!(trees_isomorphic(&merge_trees(&x, &x).unwrap(), &x));
        let star = t("(a,b,c,d,e);");
        assert!(trees_isomorphic(&merge_trees(&star, &x).unwrap(), &x));
        let y = t("((a,b),(c,d),e);");
        assert!(trees_isomorphic(&merge_trees(&y, &x).unwrap(), &x));
    }

    #[test]
    fn incompatible_inputs_reported() {
        let x = t("(((a,b),(c,d)),e);");
        let y = t("((a,c),(b,d,e));");
        assert!(matches!(
            merge_trees(&x, &y),
            Err(Error::MergeIncompatible(_))
        ));
    }

    /// Random pair of compatible trees: split one random laminar family.
    #[test]
    fn union_of_compatible_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..300 {
            let n = rng.gen_range(2..=16);
            let u = numbered_universe(n);
            let full = random_tree_over(&mut rng, &u, 0.0);
            let (mut fa, mut fb) = (Vec::new(), Vec::new());
            for c in full.nontrivial_clusters() {
                match rng.gen_range(0..3) {
                    0 => fa.push(c),
                    1 => fb.push(c),
                    _ => {
                        fa.push(c.clone());
                        fb.push(c);
                    }
                }
            }
            let a = tree_from_clusters(&fa, &u).unwrap();
            let b = tree_from_clusters(&fb, &u).unwrap();
            let m = merge_trees(&a, &b).unwrap();
            m.validate().unwrap();
            let expect: BTreeSet<Cluster> = a
                .cluster_collection()
                .union(&b.cluster_collection())
                .cloned()
                .collect();
            assert_eq!(m.cluster_collection(), expect);
            assert!(trees_isomorphic(&m, &merge_trees(&b, &a).unwrap()));
        }
    }

    #[test]
    fn detects_every_incompatible_pair() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..300 {
            let n = rng.gen_range(3..=10);
            let u = numbered_universe(n);
            let a = random_tree_over(&mut rng, &u, 0.3);
            let b = random_tree_over(&mut rng, &u, 0.3);
            let compatible = b
                .cluster_collection()
                .iter()
                .all(|c| crate::phylo::cluster_compatible_with_tree(c, &a));
            assert_eq!(merge_trees(&a, &b).is_ok(), compatible);
        }
    }
}
