//! Majority rule (+) consensus in O(kn) time.
//!
//! Phase 1 sweeps the trees once, keeping a candidate tree whose nodes carry
//! a net score: +1 for every later tree containing the cluster, −1 for every
//! later tree conflicting with it. Clusters whose score drops to zero are
//! contracted, and clusters of the current tree that fit the candidate tree
//! join it with score 1. Every majority (+) cluster survives Phase 1. Phase 2
//! tallies exact K and Q for the surviving candidates and keeps those with
//! K > Q.

use alloc::vec::Vec;

use crate::error::Result;
use crate::phylo::{Profile, Tree};
use crate::primitives::{
    compatibility_flags, mark_common_clusters, merge_into, one_way_compatible, ClusterTable,
};

/// The candidate tree at the end of Phase 1 together with its node scores
/// (indexed by arena id).
pub fn majority_plus_candidates(profile: &Profile) -> Result<(Tree, Vec<usize>)> {
    let trees = profile.trees();
    let mut t = trees[0].clone();
    let mut count = alloc::vec![1usize; t.arena_len()];
    for tj in &trees[1..] {
        let occurs = mark_common_clusters(&t, &ClusterTable::new(tj));
        let compatible = compatibility_flags(&t, tj)?;
        let mut keep = alloc::vec![true; t.arena_len()];
        for v in t.preorder() {
            if occurs[v] {
                count[v] += 1;
            } else if !compatible[v] {
                count[v] -= 1;
                keep[v] = count[v] > 0;
            }
        }
        let (mut next, map) = t.contract(&keep);
        let mut next_count = alloc::vec![0usize; next.arena_len()];
        for (old, new) in map.iter().enumerate() {
            if let Some(new) = *new {
                next_count[new] = count[old];
            }
        }

        let y = one_way_compatible(tj, &next)?;
        let leaves = next.leaf_map();
        merge_into(&mut next, &y, |l| leaves[l])?;
        next_count.resize(next.arena_len(), 1);
        let (compact, map) = next.compact();
        count = alloc::vec![0; compact.arena_len()];
        for (old, new) in map.iter().enumerate() {
            if let Some(new) = *new {
                count[new] = next_count[old];
            }
        }
        t = compact;
    }
    Ok((t, count))
}

/// The majority rule (+) consensus tree: every cluster that occurs in more
/// trees of the profile than it conflicts with.
pub fn majority_plus_consensus(profile: &Profile) -> Result<Tree> {
    let (t, _) = majority_plus_candidates(profile)?;
    let m = t.arena_len();
    let mut k = alloc::vec![0usize; m];
    let mut q = alloc::vec![0usize; m];
    for tj in profile.trees() {
        let occurs = mark_common_clusters(&t, &ClusterTable::new(tj));
        let compatible = compatibility_flags(&t, tj)?;
        for v in 0..m {
            k[v] += usize::from(occurs[v]);
            q[v] += usize::from(!compatible[v]);
        }
    }
    let keep: Vec<bool> = (0..m).map(|v| k[v] > q[v]).collect();
    Ok(t.contract(&keep).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_profile;
    use crate::oracle::{oracle_majority, oracle_majority_plus};
    use crate::phylo::{parse_newick, trees_isomorphic, LabelUniverse};
    use alloc::sync::Arc;
    use alloc::vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn profile(lines: &[&str]) -> Profile {
        let first = parse_newick(lines[0], None).unwrap();
        let u = first.universe_arc().clone();
        let trees = lines
            .iter()
            .map(|s| parse_newick(s, Some(&u)).unwrap())
            .collect();
        Profile::new(trees).unwrap()
    }

    #[test]
    fn identical_and_single() {
        let p = profile(&["(((a,b),(c,d)),e);"; 4]);
        assert!(trees_isomorphic(
            &majority_plus_consensus(&p).unwrap(),
            &p.trees()[0]
        ));
        let p = profile(&["((a,c),(b,d,e));"]);
        assert!(trees_isomorphic(
            &majority_plus_consensus(&p).unwrap(),
            &p.trees()[0]
        ));
    }

    #[test]
    fn fixture() {
        let p = profile(&[
            "(((a,b),(c,d)),e);",
            "((a,b),(c,d),e);",
            "((((a,b),c),d),e);",
            "((a,c),(b,d,e));",
        ]);
        let got = majority_plus_consensus(&p).unwrap();
        let want = parse_newick("(((a,b),c,d),e);", Some(p.universe())).unwrap();
        assert!(trees_isomorphic(&got, &want));
    }

    #[test]
    fn matches_oracle_and_candidates_cover_it() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..500 {
            let k = rng.gen_range(1..=8);
            let n = rng.gen_range(1..=12);
            let p = random_profile(&mut rng, k, n, 0.3).unwrap();
            let got = majority_plus_consensus(&p).unwrap();
            got.validate().unwrap();
            let want = oracle_majority_plus(&p);
            assert_eq!(got.cluster_collection(), want);
            assert!(oracle_majority(&p).is_subset(&want));
            let (cand, count) = majority_plus_candidates(&p).unwrap();
            assert!(want.is_subset(&cand.cluster_collection()));
            assert!(cand.preorder().iter().all(|&v| count[v] >= 1));
        }
    }

    #[test]
    fn shared_universe_not_required_to_be_identical_arc() {
        let u = Arc::new(LabelUniverse::sorted(["a", "b", "c"]).unwrap());
        let t1 = parse_newick("((a,b),c);", Some(&u)).unwrap();
        let t2 = parse_newick("((a,b),c);", None).unwrap();
        let p = Profile::new(vec![t1, t2]).unwrap();
        assert_eq!(
            majority_plus_consensus(&p)
                .unwrap()
                .nontrivial_clusters()
                .len(),
            1
        );
    }
}
