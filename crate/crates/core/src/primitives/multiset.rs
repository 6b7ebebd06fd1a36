use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A multiset of integer keys addressed by handles `0..capacity`, with
/// O(log n) insertion, removal by handle and O(log n) maximum.
///
/// Each handle holds at most one key at a time, so equal keys are told apart
/// by their handles.
#[derive(Debug, Clone, Default)]
pub struct MaxMultiset {
    set: BTreeSet<(u64, usize)>,
    key: Vec<Option<u64>>,
}

impl MaxMultiset {
    pub fn with_capacity(capacity: usize) -> Self {
        Self {
            set: BTreeSet::new(),
            key: vec![None; capacity],
        }
    }

    /// Stores `key` under `handle`, replacing any previous key.
    pub fn insert(&mut self, handle: usize, key: u64) {
        if handle >= self.key.len() {
            self.key.resize(handle + 1, None);
        }
        if let Some(old) = self.key[handle].replace(key) {
            self.set.remove(&(old, handle));
        }
        self.set.insert((key, handle));
    }

    pub fn remove(&mut self, handle: usize) -> Result<u64> {
        let key = self
            .key
            .get_mut(handle)
            .and_then(Option::take)
            .ok_or(Error::NotPresent)?;
        self.set.remove(&(key, handle));
        Ok(key)
    }

    /// Largest key, or `None` when empty.
    pub fn max(&self) -> Option<u64> {
        self.set.last().map(|&(k, _)| k)
    }

    pub fn contains(&self, handle: usize) -> bool {
        self.key.get(handle).is_some_and(Option::is_some)
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn clear(&mut self) {
        for &(_, h) in &self.set {
            self.key[h] = None;
        }
        self.set.clear();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_operations() {
        let mut m = MaxMultiset::with_capacity(4);
        assert_eq!(m.max(), None);
        m.insert(0, 3);
        m.insert(1, 7);
        m.insert(2, 7);
        assert_eq!(m.max(), Some(7));
        m.remove(1).unwrap();
        assert_eq!(m.max(), Some(7));
        m.remove(2).unwrap();
        assert_eq!(m.max(), Some(3));
        assert_eq!(m.remove(2), Err(Error::NotPresent));
        assert_eq!(m.remove(99), Err(Error::NotPresent));
        m.clear();
        assert!(m.is_empty() && !m.contains(0));
    }

    proptest! {
        #[test]
        fn matches_a_plain_vector(ops in proptest::collection::vec((0usize..12, 0u64..20, any::<bool>()), 0..200)) {
            let mut m = MaxMultiset::with_capacity(12);
            let mut model: Vec<Option<u64>> = vec![None; 12];
            for (h, k, ins) in ops {
                if ins {
                    m.insert(h, k);
                    model[h] = Some(k);
                } else {
                    prop_assert_eq!(m.remove(h).ok(), model[h].take());
                }
                prop_assert_eq!(m.max(), model.iter().flatten().copied().max());
                prop_assert_eq!(m.len(), model.iter().flatten().count());
            }
        }
    }
}
