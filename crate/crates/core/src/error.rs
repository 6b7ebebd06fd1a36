use alloc::string::String;
use core::fmt;

use crate::phylo::Cluster;

pub type Result<T> = core::result::Result<T, Error>;

/// What went wrong while reading a Newick expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NewickErrorKind {
    UnexpectedEnd,
    UnexpectedChar(char),
    ExpectedLabel,
    UnterminatedQuote,
    MissingSemicolon,
    TrailingInput,
    InvalidBranchLength,
    /// An internal node with fewer than two children.
    UnderfullNode,
}

impl fmt::Display for NewickErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnexpectedEnd => f.write_str("unexpected end of input"),
            Self::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            Self::ExpectedLabel => f.write_str("expected a leaf label"),
            Self::UnterminatedQuote => f.write_str("unterminated quoted label"),
            Self::MissingSemicolon => f.write_str("missing terminating ';'"),
            Self::TrailingInput => f.write_str("trailing input after ';'"),
            Self::InvalidBranchLength => f.write_str("invalid branch length"),
            Self::UnderfullNode => f.write_str("internal node with fewer than two children"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Newick syntax problem; `line` and `column` are 1-based.
    Newick {
        kind: NewickErrorKind,
        offset: usize,
        line: usize,
        column: usize,
    },
    DuplicateLabel(String),
    UnknownLabel(String),
    /// Tree `tree` (0-based position in the profile) has a different leaf set.
    LeafSetMismatch {
        tree: usize,
    },
    EmptyProfile,
    EmptyCluster,
    /// Two clusters of a family cross each other.
    IncompatibleClusters(Cluster, Cluster),
    /// A cluster of the second merge input crosses the first input.
    MergeIncompatible(Cluster),
    InvalidNode(&'static str),
    /// A cluster has no entry in the weight map.
    MissingWeight(Cluster),
    NotDescendant,
    NotPresent,
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Newick {
                kind, line, column, ..
            } => {
                write!(f, "newick syntax error at {line}:{column}: {kind}")
            }
            Self::DuplicateLabel(l) => write!(f, "duplicate leaf label {l:?}"),
            Self::UnknownLabel(l) => write!(f, "unknown leaf label {l:?}"),
            Self::LeafSetMismatch { tree } => {
                write!(f, "tree {} has a different leaf label set", tree + 1)
            }
            Self::EmptyProfile => f.write_str("profile contains no trees"),
            Self::EmptyCluster => f.write_str("empty cluster"),
            Self::IncompatibleClusters(a, b) => {
                write!(f, "clusters {a:?} and {b:?} are incompatible")
            }
            Self::MergeIncompatible(c) => {
                write!(
                    f,
                    "cannot merge: cluster {c:?} is incompatible with the base tree"
                )
            }
            Self::InvalidNode(why) => write!(f, "invalid node: {why}"),
            Self::MissingWeight(c) => write!(f, "no weight recorded for cluster {c:?}"),
            Self::NotDescendant => f.write_str("node is not a descendant of the given ancestor"),
            Self::NotPresent => f.write_str("handle is not present"),
            Self::InvalidParameter(why) => write!(f, "invalid parameter: {why}"),
        }
    }
}

impl core::error::Error for Error {}
