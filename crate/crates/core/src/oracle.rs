//! Brute-force consensus definitions, kept deliberately simple. Every
//! function compares clusters pairwise and is meant for testing only.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::phylo::{Cluster, Profile};

/// Tallies for one cluster occurring in a profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusEntry {
    /// Trees containing the cluster.
    pub k: usize,
    /// Trees containing a cluster incompatible with it.
    pub q: usize,
    /// Largest `k` of an occurring cluster incompatible with it, or 0.
    pub max_incompatible: usize,
}

pub type ClusterCensus = BTreeMap<Cluster, CensusEntry>;

pub fn census(profile: &Profile) -> ClusterCensus {
    let per_tree: Vec<BTreeSet<Cluster>> = profile
        .trees()
        .iter()
        .map(|t| t.cluster_collection())
        .collect();
    let mut k: BTreeMap<Cluster, usize> = BTreeMap::new();
    for set in &per_tree {
        for c in set {
            *k.entry(c.clone()).or_default() += 1;
        }
    }
    let mut out = ClusterCensus::new();
    for (c, &kc) in &k {
        let q = per_tree
            .iter()
            .filter(|set| set.iter().any(|d| !c.is_compatible(d)))
            .count();
        let max_incompatible = k
            .iter()
            .filter(|(d, _)| !c.is_compatible(d))
            .map(|(_, &kd)| kd)
            .max()
            .unwrap_or(0);
        out.insert(
            c.clone(),
            CensusEntry {
                k: kc,
                q,
                max_incompatible,
            },
        );
    }
    out
}

fn select(profile: &Profile, keep: impl Fn(&CensusEntry) -> bool) -> BTreeSet<Cluster> {
    census(profile)
        .into_iter()
        .filter(|(_, e)| keep(e))
        .map(|(c, _)| c)
        .collect()
}

/// Clusters occurring in more than half of the trees.
pub fn oracle_majority(profile: &Profile) -> BTreeSet<Cluster> {
    let k = profile.k();
    select(profile, |e| 2 * e.k > k)
}

/// Clusters occurring in more trees than they conflict with.
pub fn oracle_majority_plus(profile: &Profile) -> BTreeSet<Cluster> {
    select(profile, |e| e.k > e.q)
}

/// Clusters occurring more often than every cluster incompatible with them.
pub fn oracle_freq_diff(profile: &Profile) -> BTreeSet<Cluster> {
    select(profile, |e| e.k > e.max_incompatible)
}

/// Clusters occurring in every tree.
pub fn oracle_strict(profile: &Profile) -> BTreeSet<Cluster> {
    let k = profile.k();
    select(profile, |e| e.k == k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_profile;
    use crate::phylo::{clusters_compatible, parse_newick, LabelUniverse, Tree};
    use alloc::sync::Arc;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fixture() -> Profile {
        let u = Arc::new(LabelUniverse::sorted(["a", "b", "c", "d", "e"]).unwrap());
        let trees: Vec<Tree> = [
            "(((a,b),(c,d)),e);",
            "((a,b),(c,d),e);",
            "((((a,b),c),d),e);",
            "((a,c),(b,d,e));",
        ]
        .iter()
        .map(|s| parse_newick(s, Some(&u)).unwrap())
        .collect();
        Profile::new(trees).unwrap()
    }

    fn c(p: &Profile, names: &[&str]) -> Cluster {
        Cluster::from_names(p.universe(), names.iter().copied()).unwrap()
    }

    fn nontrivial(set: BTreeSet<Cluster>) -> BTreeSet<Cluster> {
        set.into_iter().filter(|c| !c.is_trivial()).collect()
    }

    #[test]
    fn fixture_tallies() {
        let p = fixture();
        let cs = census(&p);
        let e = |names: &[&str]| cs[&c(&p, names)];
        assert_eq!((e(&["a", "b"]).k, e(&["a", "b"]).q), (3, 1));
        assert_eq!((e(&["c", "d"]).k, e(&["c", "d"]).q), (2, 2));
        assert_eq!(
            (e(&["a", "b", "c", "d"]).k, e(&["a", "b", "c", "d"]).q),
            (2, 1)
        );
        assert_eq!(e(&["a"]).k, 4);
        assert_eq!(e(&["a"]).q, 0);
    }

    #[test]
    fn fixture_consensus_sets() {
        let p = fixture();
        let ab = c(&p, &["a", "b"]);
        let abcd = c(&p, &["a", "b", "c", "d"]);
        let cd = c(&p, &["c", "d"]);
        assert_eq!(nontrivial(oracle_majority(&p)), [ab.clone()].into());
        assert_eq!(
            nontrivial(oracle_majority_plus(&p)),
            [ab.clone(), abcd.clone()].into()
        );
        assert_eq!(nontrivial(oracle_freq_diff(&p)), [ab, abcd, cd].into());
        assert!(nontrivial(oracle_strict(&p)).is_empty());
    }

    #[test]
    fn identical_trees() {
        let t = parse_newick("(((a,b),(c,d)),e);", None).unwrap();
        let p = Profile::new(alloc::vec![t.clone(), t.clone(), t.clone()]).unwrap();
        assert!(census(&p).values().all(|e| e.q == 0 && e.k == 3));
        let all = t.cluster_collection();
        assert_eq!(oracle_majority(&p), all);
        assert_eq!(oracle_majority_plus(&p), all);
        assert_eq!(oracle_freq_diff(&p), all);
    }

    #[test]
    fn nesting_and_compatibility() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            let k = rng.gen_range(1..=8);
            let n = rng.gen_range(1..=10);
            let p = random_profile(&mut rng, k, n, 0.3).unwrap();
            for (_, e) in census(&p) {
                assert!(e.k + e.q <= k);
            }
            let strict = oracle_strict(&p);
            let maj = oracle_majority(&p);
            let plus = oracle_majority_plus(&p);
            let fd = oracle_freq_diff(&p);
            assert!(strict.is_subset(&maj) && maj.is_subset(&plus) && plus.is_subset(&fd));
            for a in &fd {
                for b in &fd {
                    assert!(clusters_compatible(a, b));
                }
            }
        }
    }
}
