use alloc::sync::Arc;
use alloc::vec::Vec;

use super::tree::Tree;
use super::universe::LabelUniverse;
use crate::error::{Error, Result};

/// k ≥ 1 trees over one label universe, each with exactly that leaf set.
#[derive(Debug, Clone)]
pub struct Profile {
    universe: Arc<LabelUniverse>,
    trees: Vec<Tree>,
}

impl Profile {
    /// Validates that every tree is well formed, shares the first tree's
    /// universe and carries every label of it exactly once.
    pub fn new(trees: Vec<Tree>) -> Result<Self> {
        let universe = trees
            .first()
            .ok_or(Error::EmptyProfile)?
            .universe_arc()
            .clone();
        for (i, t) in trees.iter().enumerate() {
            if !Arc::ptr_eq(t.universe_arc(), &universe) && **t.universe_arc() != *universe {
                return Err(Error::LeafSetMismatch { tree: i });
            }
            t.validate()?;
            if t.leaf_labels().len() != universe.len() {
                return Err(Error::LeafSetMismatch { tree: i });
            }
        }
        Ok(Self { universe, trees })
    }

    pub fn universe(&self) -> &Arc<LabelUniverse> {
        &self.universe
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    /// Number of trees.
    pub fn k(&self) -> usize {
        self.trees.len()
    }

    /// Number of leaf labels.
    pub fn n(&self) -> usize {
        self.universe.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phylo::parse_newick;
    use alloc::vec;

    #[test]
    fn rejects_empty_and_mismatched() {
        assert_eq!(Profile::new(vec![]).unwrap_err(), Error::EmptyProfile);
        let u = Arc::new(LabelUniverse::sorted(["a", "b", "c", "d"]).unwrap());
        let t1 = parse_newick("((a,b),c,d);", Some(&u)).unwrap();
        let t2 = parse_newick("((a,b),c);", Some(&u)).unwrap();
        assert_eq!(
            Profile::new(vec![t1.clone(), t2]).unwrap_err(),
            Error::LeafSetMismatch { tree: 1 }
        );
        let p = Profile::new(vec![t1.clone(), t1]).unwrap();
        assert_eq!((p.k(), p.n()), (2, 4));
    }
}
