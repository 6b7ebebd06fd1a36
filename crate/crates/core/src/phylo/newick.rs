//! Newick text for topology-only trees.
//!
//! Accepted grammar: `tree := node ';'`, `node := leaf | '(' node (',' node)+ ')'`.
//! Any node may carry a `:length` suffix and internal nodes may carry a label
//! after the closing parenthesis; both are read and dropped. Labels are bare
//! words or single-quoted strings (`''` escapes a quote). Whitespace between
//! tokens is ignored.
//!
//! Output is canonical: the children of every node are ordered by the
//! smallest leaf ordinal below them.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::tree::{NodeId, Tree};
use super::universe::{Label, LabelUniverse};
use crate::error::{Error, NewickErrorKind, Result};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, kind: NewickErrorKind, offset: usize) -> Error {
        let before = &self.text[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
        Error::Newick {
            kind,
            offset,
            line,
            column,
        }
    }

    fn unexpected(&self) -> Error {
        match self.peek() {
            Some(c) => self.error(NewickErrorKind::UnexpectedChar(c), self.pos),
            None => self.error(NewickErrorKind::UnexpectedEnd, self.pos),
        }
    }

    /// A bare or quoted label; `None` if no label starts here.
    fn label(&mut self) -> Result<Option<String>> {
        self.skip_ws();
        match self.peek() {
            Some('\'') => {
                let start = self.pos;
                self.bump();
                let mut out = String::new();
                loop {
                    match self.bump() {
                        None => return Err(self.error(NewickErrorKind::UnterminatedQuote, start)),
                        Some('\'') if self.peek() == Some('\'') => {
                            self.bump();
                            out.push('\'');
                        }
                        Some('\'') => return Ok(Some(out)),
                        Some(c) => out.push(c),
                    }
                }
            }
            Some(c) if is_bare(c) => {
                let start = self.pos;
                while self.peek().is_some_and(is_bare) {
                    self.bump();
                }
                Ok(Some(self.text[start..self.pos].into()))
            }
            _ => Ok(None),
        }
    }

    fn branch_length(&mut self) -> Result<()> {
        self.skip_ws();
        if self.peek() != Some(':') {
            return Ok(());
        }
        self.bump();
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E'))
        {
            self.bump();
        }
        if self.text[start..self.pos].parse::<f64>().is_err() {
            return Err(self.error(NewickErrorKind::InvalidBranchLength, start));
        }
        Ok(())
    }
}

fn is_bare(c: char) -> bool {
    !c.is_whitespace() && !matches!(c, '(' | ')' | ',' | ':' | ';' | '\'' | '[' | ']')
}

/// Parses one Newick tree terminated by `;`.
///
/// Without a `universe` the leaf labels are interned in lexicographic order;
/// with one, every leaf label must already belong to it.
pub fn parse_newick(text: &str, universe: Option<&Arc<LabelUniverse>>) -> Result<Tree> {
    let mut cur = Cursor { text, pos: 0 };
    let mut parents: Vec<Option<NodeId>> = Vec::new();
    let mut names: Vec<Option<String>> = Vec::new();
    // Open internal nodes and their child counts.
    let mut open: Vec<(NodeId, usize)> = Vec::new();

    loop {
        // Expecting a node.
        cur.skip_ws();
        let parent = open.last().map(|&(v, _)| v);
        if let Some(top) = open.last_mut() {
            top.1 += 1;
        }
        let id = parents.len();
        parents.push(parent);
        if cur.peek() == Some('(') {
            cur.bump();
            names.push(None);
            open.push((id, 0));
            continue;
        }
        match cur.label()? {
            Some(name) => names.push(Some(name)),
            None if cur.peek().is_none() => {
                return Err(cur.error(NewickErrorKind::UnexpectedEnd, cur.pos))
            }
            None => return Err(cur.error(NewickErrorKind::ExpectedLabel, cur.pos)),
        }
        cur.branch_length()?;

        // After a node: siblings, closing parentheses or the end.
        loop {
            cur.skip_ws();
            match cur.peek() {
                Some(',') if !open.is_empty() => {
                    cur.bump();
                    break;
                }
                Some(')') if !open.is_empty() => {
                    let at = cur.pos;
                    cur.bump();
                    let (_, kids) = open.pop().unwrap();
                    if kids < 2 {
                        return Err(cur.error(NewickErrorKind::UnderfullNode, at));
                    }
                    cur.label()?;
                    cur.branch_length()?;
                }
                Some(';') if open.is_empty() => {
                    cur.bump();
                    cur.skip_ws();
                    if cur.peek().is_some() {
                        return Err(cur.error(NewickErrorKind::TrailingInput, cur.pos));
                    }
                    return finish(parents, names, universe);
                }
                None if open.is_empty() => {
                    return Err(cur.error(NewickErrorKind::MissingSemicolon, cur.pos))
                }
                _ => return Err(cur.unexpected()),
            }
        }
    }
}

fn finish(
    parents: Vec<Option<NodeId>>,
    names: Vec<Option<String>>,
    universe: Option<&Arc<LabelUniverse>>,
) -> Result<Tree> {
    let universe = match universe {
        Some(u) => u.clone(),
        None => {
            let mut leaf_names: Vec<&String> = names.iter().flatten().collect();
            leaf_names.sort();
            if let Some(w) = leaf_names.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateLabel(w[0].clone()));
            }
            Arc::new(LabelUniverse::new(leaf_names.into_iter().cloned())?)
        }
    };
    let mut seen = vec![false; universe.len()];
    let mut labels: Vec<Option<Label>> = Vec::with_capacity(names.len());
    for name in &names {
        labels.push(match name {
            None => None,
            Some(name) => {
                let l = universe
                    .ordinal(name)
                    .ok_or_else(|| Error::UnknownLabel(name.clone()))?;
                if core::mem::replace(&mut seen[l], true) {
                    return Err(Error::DuplicateLabel(name.clone()));
                }
                Some(l)
            }
        });
    }
    Ok(Tree::from_parents(universe, &parents, &labels))
}

/// Canonical Newick text for `t`.
pub fn write_newick(t: &Tree) -> String {
    let universe = t.universe();
    let mut min_label = vec![usize::MAX; t.arena_len()];
    for v in t.postorder() {
        min_label[v] = match t.label(v).filter(|_| t.is_leaf(v)) {
            Some(l) => l,
            None => t
                .children(v)
                .iter()
                .map(|&c| min_label[c])
                .min()
                .unwrap_or(usize::MAX),
        };
    }
    enum Step {
        Enter(NodeId),
        Text(&'static str),
    }
    let mut out = String::new();
    let mut stack = vec![Step::Enter(t.root())];
    while let Some(step) = stack.pop() {
        match step {
            Step::Text(s) => out.push_str(s),
            Step::Enter(v) => {
                if t.is_leaf(v) {
                    if let Some(l) = t.label(v) {
                        push_label(&mut out, universe.name(l));
                    }
                    continue;
                }
                let mut kids = t.children(v).to_vec();
                kids.sort_by_key(|&c| min_label[c]);
                out.push('(');
                stack.push(Step::Text(")"));
                for (i, &c) in kids.iter().enumerate().rev() {
                    stack.push(Step::Enter(c));
                    if i > 0 {
                        stack.push(Step::Text(","));
                    }
                }
            }
        }
    }
    out.push(';');
    out
}

fn push_label(out: &mut String, name: &str) {
    if !name.is_empty() && name.chars().all(is_bare) {
        out.push_str(name);
    } else {
        out.push('\'');
        for c in name.chars() {
            if c == '\'' {
                out.push('\'');
            }
            out.push(c);
        }
        out.push('\'');
    }
}
