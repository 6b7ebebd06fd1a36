use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::universe::{Label, LabelUniverse};

const WORD: usize = 64;

/// A set of leaf labels stored as a fixed-width bit vector over a
/// [`LabelUniverse`]. All set algebra is word-parallel.
///
/// Ordering is lexicographic on the underlying words, which gives a total
/// order on clusters of one universe without hashing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cluster {
    words: Vec<u64>,
    width: usize,
}

impl Cluster {
    pub fn empty(width: usize) -> Self {
        Self {
            words: vec![0; width.div_ceil(WORD)],
            width,
        }
    }

    pub fn full(width: usize) -> Self {
        let mut c = Self::empty(width);
        for l in 0..width {
            c.insert(l);
        }
        c
    }

    pub fn singleton(width: usize, label: Label) -> Self {
        let mut c = Self::empty(width);
        c.insert(label);
        c
    }

    pub fn from_labels<I: IntoIterator<Item = Label>>(width: usize, labels: I) -> Self {
        let mut c = Self::empty(width);
        for l in labels {
            c.insert(l);
        }
        c
    }

    /// Builds a cluster from label names; `None` if a name is unknown.
    pub fn from_names<'a, I>(universe: &LabelUniverse, names: I) -> Option<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut c = Self::empty(universe.len());
        for name in names {
            c.insert(universe.ordinal(name)?);
        }
        Some(c)
    }

    /// Number of labels in the universe this cluster ranges over.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, label: Label) {
        debug_assert!(label < self.width);
        self.words[label / WORD] |= 1 << (label % WORD);
    }

    pub fn contains(&self, label: Label) -> bool {
        label < self.width && self.words[label / WORD] >> (label % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// A singleton or the whole universe.
    pub fn is_trivial(&self) -> bool {
        let n = self.len();
        n == 1 || n == self.width
    }

    pub fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Nested either way, or disjoint.
    pub fn is_compatible(&self, other: &Self) -> bool {
        let (mut ab, mut a_only, mut b_only) = (false, false, false);
        for (a, b) in self.words.iter().zip(&other.words) {
            ab |= a & b != 0;
            a_only |= a & !b != 0;
            b_only |= b & !a != 0;
        }
        !(ab && a_only && b_only)
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + bit)
            })
        })
    }

    pub fn min_label(&self) -> Option<Label> {
        self.labels().next()
    }

    pub fn display<'a>(&'a self, universe: &'a LabelUniverse) -> impl fmt::Display + 'a {
        DisplayCluster {
            cluster: self,
            universe,
        }
    }
}

impl fmt::Debug for Cluster {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels()).finish()
    }
}

struct DisplayCluster<'a> {
    cluster: &'a Cluster,
    universe: &'a LabelUniverse,
}

impl fmt::Display for DisplayCluster<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.cluster.labels().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.universe.name(l))?;
        }
        f.write_str("}")
    }
}

/// True iff `a ⊆ b`, `b ⊆ a` or `a ∩ b = ∅`.
pub fn clusters_compatible(a: &Cluster, b: &Cluster) -> bool {
    a.is_compatible(b)
}
