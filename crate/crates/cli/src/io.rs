//! Tree files: one Newick tree per line. Blank lines and lines starting
//! with `#` are skipped. The label universe is taken from the first tree.

use std::fs;
use std::path::Path;

use phylo_consensus::phylo::{parse_newick, write_newick};
use phylo_consensus::{Error as CoreError, Profile, Tree};

use crate::{CliError, Result};

/// Parses the text of a tree file. `path` only labels diagnostics.
pub fn parse_profile(text: &str, path: &Path) -> Result<Profile> {
    let mut trees: Vec<Tree> = Vec::new();
    let mut lines: Vec<usize> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let indent = raw.len() - raw.trim_start().len();
        let universe = trees.first().map(|t| t.universe_arc().clone());
        let tree = parse_newick(body, universe.as_ref()).map_err(|e| match e {
            CoreError::Newick { column, .. } => CliError::Parse {
                path: path.to_owned(),
                line,
                column: column + indent,
                source: e,
            },
            CoreError::UnknownLabel(_) => CliError::LeafSet {
                path: path.to_owned(),
                line,
            },
            other => CliError::Parse {
                path: path.to_owned(),
                line,
                column: 1,
                source: other,
            },
        })?;
        trees.push(tree);
        lines.push(line);
    }
    if trees.is_empty() {
        return Err(CliError::NoTrees {
            path: path.to_owned(),
        });
    }
    Profile::new(trees).map_err(|e| match e {
        CoreError::LeafSetMismatch { tree } => CliError::LeafSet {
            path: path.to_owned(),
            line: lines[tree],
        },
        other => other.into(),
    })
}

pub fn read_profile(path: &Path) -> Result<Profile> {
    let text = fs::read_to_string(path)?;
    parse_profile(&text, path)
}

/// One canonical Newick line per tree.
pub fn format_trees<'a, I: IntoIterator<Item = &'a Tree>>(trees: I) -> String {
    let mut out = String::new();
    for t in trees {
        out.push_str(&write_newick(t));
        out.push('\n');
    }
    out
}

/// Writes `text` to `path`, or to stdout when `path` is `None`.
pub fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}
