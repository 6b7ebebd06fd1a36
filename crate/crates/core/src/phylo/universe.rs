use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Dense ordinal of a leaf label.
pub type Label = usize;

/// Interned leaf labels. Ordinals are dense in `0..len()` and never change.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelUniverse {
    labels: Vec<String>,
    index: BTreeMap<String, Label>,
}

impl LabelUniverse {
    /// Interns `labels` in the given order.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = Self {
            labels: Vec::new(),
            index: BTreeMap::new(),
        };
        for label in labels {
            let label = label.into();
            if out.index.contains_key(&label) {
                return Err(Error::DuplicateLabel(label));
            }
            out.index.insert(label.clone(), out.labels.len());
            out.labels.push(label);
        }
        Ok(out)
    }

    /// Interns `labels` in lexicographic order.
    pub fn sorted<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        labels.sort();
        Self::new(labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn ordinal(&self, label: &str) -> Option<Label> {
        self.index.get(label).copied()
    }

    pub fn name(&self, ordinal: Label) -> &str {
        &self.labels[ordinal]
    }

    pub fn names(&self) -> &[String] {
        &self.labels
    }
}
