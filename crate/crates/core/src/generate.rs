//! Seeded random trees and profiles.
//!
//! Each tree starts from a uniformly random permutation of the labels, which
//! is split recursively at a uniformly random point until single leaves
//! remain. Every internal edge of the resulting binary tree is then
//! contracted independently with probability `contract_prob`.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::phylo::{LabelUniverse, NodeId, Profile, Tree};

/// Contraction probability used when none is given.
pub const DEFAULT_CONTRACT_PROB: f64 = 0.25;

/// Labels `t1 .. tn`, zero-padded so lexicographic and numeric order agree.
pub fn numbered_universe(n: usize) -> Arc<LabelUniverse> {
    let width = format!("{n}").len();
    let universe = LabelUniverse::new((1..=n).map(|i| format!("t{i:0width$}")));
    Arc::new(universe.expect("generated labels are distinct"))
}

/// One random tree over `universe`.
pub fn random_tree_over<R: Rng + ?Sized>(
    rng: &mut R,
    universe: &Arc<LabelUniverse>,
    contract_prob: f64,
) -> Tree {
    let n = universe.len();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    if n == 1 {
        return Tree::leaf(universe.clone(), perm[0]);
    }

    let mut parents: Vec<Option<NodeId>> = vec![None];
    let mut labels = vec![None];
    let mut stack = vec![(0usize, 0usize, n)];
    while let Some((node, lo, hi)) = stack.pop() {
        let mid = rng.gen_range(lo + 1..hi);
        for (a, b) in [(lo, mid), (mid, hi)] {
            let id = parents.len();
            parents.push(Some(node));
            if b - a == 1 {
                labels.push(Some(perm[a]));
            } else {
                labels.push(None);
                stack.push((id, a, b));
            }
        }
    }
    let mut t = Tree::from_parents(universe.clone(), &parents, &labels);
    if contract_prob > 0.0 {
        for (v, label) in labels.iter().enumerate().skip(1) {
            if label.is_none() && rng.gen_bool(contract_prob) {
                t.delete_node(v).expect("internal non-root node");
            }
        }
        t = t.compact().0;
    }
    t
}

/// One random tree over `numbered_universe(n)`.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize, contract_prob: f64) -> Tree {
    random_tree_over(rng, &numbered_universe(n), contract_prob)
}

/// `k` independent random trees over one shared universe of `n` labels.
pub fn random_profile<R: Rng + ?Sized>(
    rng: &mut R,
    k: usize,
    n: usize,
    contract_prob: f64,
) -> Result<Profile> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1"));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1"));
    }
    if !(0.0..=1.0).contains(&contract_prob) {
        return Err(Error::InvalidParameter(
            "contraction probability must lie in [0, 1]",
        ));
    }
    let universe = numbered_universe(n);
    let trees = (0..k)
        .map(|_| random_tree_over(rng, &universe, contract_prob))
        .collect();
    Profile::new(trees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phylo::write_newick;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn deterministic_per_seed() {
        let a = random_profile(&mut ChaCha8Rng::seed_from_u64(3), 4, 30, 0.25).unwrap();
        let b = random_profile(&mut ChaCha8Rng::seed_from_u64(3), 4, 30, 0.25).unwrap();
        for (x, y) in a.trees().iter().zip(b.trees()) {
            assert_eq!(write_newick(x), write_newick(y));
        }
    }

    #[test]
    fn generated_profiles_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let k = rng.gen_range(1..6);
            let n = rng.gen_range(1..40);
            let p = random_profile(&mut rng, k, n, 0.25).unwrap();
            assert_eq!((p.k(), p.n()), (k, n));
        }
    }

    #[test]
    fn zero_contraction_is_binary() {
        let t = random_tree(&mut ChaCha8Rng::seed_from_u64(1), 50, 0.0);
        assert_eq!(t.node_count(), 99);
    }

    #[test]
    fn bad_parameters() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(random_profile(&mut rng, 0, 5, 0.2).is_err());
        assert!(random_profile(&mut rng, 2, 0, 0.2).is_err());
        assert!(random_profile(&mut rng, 2, 5, 1.5).is_err());
    }
}
