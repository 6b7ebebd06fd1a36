use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::cluster::Cluster;
use super::tree::{NodeId, Tree};
use super::universe::LabelUniverse;
use crate::error::{Error, Result};

/// The unique tree whose cluster collection is `family` plus the trivial
/// clusters of `universe`.
///
/// Clusters are placed in order of decreasing size, each under its smallest
/// strict superset placed so far; leaves go under the smallest cluster that
/// holds them. O(m² · n/64) for m clusters.
pub fn tree_from_clusters<'a, I>(family: I, universe: &Arc<LabelUniverse>) -> Result<Tree>
where
    I: IntoIterator<Item = &'a Cluster>,
{
    let n = universe.len();
    let mut clusters: Vec<&Cluster> = Vec::new();
    for c in family {
        if c.is_empty() {
            return Err(Error::EmptyCluster);
        }
        if c.width() != n {
            return Err(Error::InvalidParameter(
                "cluster width differs from the universe",
            ));
        }
        if !c.is_trivial() {
            clusters.push(c);
        }
    }
    clusters.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    clusters.dedup();
    for (i, a) in clusters.iter().enumerate() {
        for b in &clusters[i + 1..] {
            if !a.is_compatible(b) {
                return Err(Error::IncompatibleClusters((*a).clone(), (*b).clone()));
            }
        }
    }
    if n == 1 {
        return Ok(Tree::leaf(universe.clone(), 0));
    }

    // node 0 is the root; node i + 1 holds clusters[i]
    let mut parents: Vec<Option<NodeId>> = vec![None];
    for (i, c) in clusters.iter().enumerate() {
        let parent = (0..i)
            .rev()
            .find(|&j| c.is_subset(clusters[j]))
            .map_or(0, |j| j + 1);
        parents.push(Some(parent));
    }
    let mut labels = vec![None; parents.len()];
    for l in 0..n {
        let home = (0..clusters.len())
            .rev()
            .find(|&j| clusters[j].contains(l))
            .map_or(0, |j| j + 1);
        parents.push(Some(home));
        labels.push(Some(l));
    }
    Ok(Tree::from_parents(universe.clone(), &parents, &labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phylo::{parse_newick, write_newick};

    fn universe() -> Arc<LabelUniverse> {
        Arc::new(LabelUniverse::sorted(["a", "b", "c", "d", "e"]).unwrap())
    }

    fn c(u: &LabelUniverse, s: &[&str]) -> Cluster {
        Cluster::from_names(u, s.iter().copied()).unwrap()
    }

    #[test]
    fn majority_plus_tree_of_fixture() {
        let u = universe();
        let fam = [c(&u, &["a", "b"]), c(&u, &["a", "b", "c", "d"])];
        let t = tree_from_clusters(&fam, &u).unwrap();
        assert_eq!(write_newick(&t), "(((a,b),c,d),e);");
        t.validate().unwrap();
    }

    #[test]
    fn empty_family_gives_star() {
        let u = universe();
        let t = tree_from_clusters(&[], &u).unwrap();
        assert_eq!(write_newick(&t), "(a,b,c,d,e);");
    }

    #[test]
    fn crossing_pair_rejected() {
        let u = universe();
        let fam = [c(&u, &["a", "b"]), c(&u, &["b", "c"])];
        assert!(matches!(
            tree_from_clusters(&fam, &u),
            Err(Error::IncompatibleClusters(_, _))
        ));
    }

    #[test]
    fn rebuilds_parsed_tree() {
        let t = parse_newick("((a,(b,c)),(d,e));", None).unwrap();
        let fam = t.cluster_collection();
        let back = tree_from_clusters(&fam, t.universe_arc()).unwrap();
        assert_eq!(back.cluster_collection(), fam);
    }
}
