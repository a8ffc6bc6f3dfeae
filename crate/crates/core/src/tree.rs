//! Weakly increasing plane trees and their degree/level statistics.
//!
//! A tree is written `label` or `label(child,child,...)`, e.g. `0(1(2),1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiset::Multiset;

/// A rooted plane tree with labeled nodes. Child order is part of the value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WTree {
    pub label: u32,
    pub children: Vec<WTree>,
}

impl WTree {
    pub fn leaf(label: u32) -> Self {
        Self {
            label,
            children: Vec::new(),
        }
    }

    pub fn node(label: u32, children: Vec<WTree>) -> Self {
        Self { label, children }
    }

    pub fn degree(&self) -> usize {
        self.children.len()
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(WTree::size).sum::<usize>()
    }

    /// Number of edges, i.e. `p` for a tree on a multiset of size `p`.
    pub fn edges(&self) -> usize {
        self.size() - 1
    }

    /// Non-root labels, sorted.
    pub fn labels(&self) -> Vec<u32> {
        fn go(t: &WTree, out: &mut Vec<u32>) {
            for c in &t.children {
                out.push(c.label);
                go(c, out);
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out.sort_unstable();
        out
    }

    pub fn multiset(&self) -> Result<Multiset> {
        Multiset::from_labels(&self.labels())
    }

    /// Checks the ordering rules: labels weakly increase from each node
    /// to its children and across each sibling list. The root may carry
    /// any label, which lets subtrees be validated on their own.
    pub fn check_order(&self) -> Result<()> {
        let mut prev = None;
        for c in &self.children {
            if c.label < self.label {
                return Err(Error::InvalidTree(format!(
                    "labels must weakly increase along paths: {} below {}",
                    c.label, self.label
                )));
            }
            if let Some(p) = prev {
                if c.label < p {
                    return Err(Error::InvalidTree(format!(
                        "children labels not weakly increasing: {} after {} under {}",
                        c.label, p, self.label
                    )));
                }
            }
            prev = Some(c.label);
            c.check_order()?;
        }
        Ok(())
    }

    /// Full validation of a tree on a multiset: root 0, non-root labels
    /// at least 1 and contiguous, ordering rules.
    pub fn validate(&self) -> Result<Multiset> {
        if self.label != 0 {
            return Err(Error::InvalidTree(format!(
                "root must be labeled 0, found {}",
                self.label
            )));
        }
        if self.labels().first() == Some(&0) {
            return Err(Error::InvalidTree(
                "non-root labels must be at least 1".into(),
            ));
        }
        self.check_order()?;
        self.multiset()
            .map_err(|e| Error::InvalidTree(e.to_string()))
    }

    /// Copy of the tree with its root relabeled.
    pub fn with_root_label(mut self, label: u32) -> Self {
        self.label = label;
        self
    }

    fn write(&self, out: &mut String) {
        use std::fmt::Write;
        let _ = write!(out, "{}", self.label);
        if !self.children.is_empty() {
            out.push('(');
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                c.write(out);
            }
            out.push(')');
        }
    }
}

impl fmt::Display for WTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s);
        f.write_str(&s)
    }
}

pub fn format_tree(t: &WTree) -> String {
    t.to_string()
}

/// Parses and fully validates a tree on a multiset.
pub fn parse_tree(text: &str) -> Result<WTree> {
    let t = parse_unchecked(text)?;
    t.validate()?;
    Ok(t)
}

/// Parses the text grammar without checking the tree invariants.
pub fn parse_unchecked(text: &str) -> Result<WTree> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let t = p.tree()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(t)
}

impl FromStr for WTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn label(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a label"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Syntax {
                pos: start,
                msg: "label out of range".into(),
            })
    }

    fn tree(&mut self) -> Result<WTree> {
        let label = self.label()?;
        self.skip_ws();
        let mut children = Vec::new();
        if self.bytes.get(self.pos) == Some(&b'(') {
            self.pos += 1;
            loop {
                self.skip_ws();
                children.push(self.tree()?);
                self.skip_ws();
                match self.bytes.get(self.pos) {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err("expected `,` or `)`")),
                }
            }
        }
        Ok(WTree { label, children })
    }
}

/// Degree, level and activity statistics of one tree.
///
/// Levels count edges from the root, so the root sits on level 0.
/// Starred fields exclude the root; `fdeg` is keyed by full-degree
/// (number of neighbours).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatVector {
    pub nodes: usize,
    pub root_degree: usize,
    pub leaf: usize,
    pub el: usize,
    pub odd: usize,
    pub even: usize,
    pub oe: usize,
    pub ee: usize,
    pub oo: usize,
    pub eo: usize,
    pub odd_star: usize,
    pub oe_star: usize,
    pub ee_star: usize,
    pub oddf: usize,
    pub deg: BTreeMap<usize, usize>,
    pub od: BTreeMap<usize, usize>,
    pub ed_star: BTreeMap<usize, usize>,
    pub fdeg: BTreeMap<usize, usize>,
    pub act: usize,
    pub eact: usize,
    pub oact: usize,
}

impl StatVector {
    pub fn deg(&self, q: usize) -> usize {
        self.deg.get(&q).copied().unwrap_or(0)
    }

    pub fn od(&self, q: usize) -> usize {
        self.od.get(&q).copied().unwrap_or(0)
    }

    pub fn ed_star(&self, q: usize) -> usize {
        self.ed_star.get(&q).copied().unwrap_or(0)
    }

    pub fn fdeg(&self, q: usize) -> usize {
        self.fdeg.get(&q).copied().unwrap_or(0)
    }
}

fn bump(map: &mut BTreeMap<usize, usize>, key: usize) {
    *map.entry(key).or_insert(0) += 1;
}

/// Computes every statistic in a single traversal.
pub fn stats(t: &WTree) -> StatVector {
    let mut s = StatVector {
        root_degree: t.degree(),
        ..Default::default()
    };
    visit(t, 0, None, &mut s);
    s
}

// `position` is the 1-based child index together with the next sibling.
fn visit(t: &WTree, level: usize, position: Option<(usize, Option<&WTree>)>, s: &mut StatVector) {
    let d = t.degree();
    let odd_level = level % 2 == 1;
    let is_root = position.is_none();
    s.nodes += 1;
    bump(&mut s.deg, d);
    if d == 0 {
        s.leaf += 1;
    }
    if odd_level {
        bump(&mut s.od, d);
    } else {
        s.el += 1;
        if !is_root {
            bump(&mut s.ed_star, d);
        }
    }
    match (d % 2 == 1, odd_level) {
        (true, true) => s.oo += 1,
        (true, false) => s.eo += 1,
        (false, true) => s.oe += 1,
        (false, false) => s.ee += 1,
    }
    if d % 2 == 1 {
        s.odd += 1;
        if !is_root {
            s.odd_star += 1;
        }
    } else {
        s.even += 1;
        if odd_level {
            s.oe_star += 1;
        } else if !is_root {
            s.ee_star += 1;
        }
    }
    let full = if is_root { d } else { d + 1 };
    bump(&mut s.fdeg, full);
    if full % 2 == 1 {
        s.oddf += 1;
    }

    if let Some((k, next)) = position {
        let active = odd_level
            && k % 2 == 1
            && match next {
                Some(y) => y.degree() % 2 == d % 2,
                None => d % 2 == 1,
            };
        if active {
            s.act += 1;
            if d % 2 == 0 {
                s.eact += 1;
            } else {
                s.oact += 1;
            }
        }
    }

    for (i, c) in t.children.iter().enumerate() {
        let next = t.children.get(i + 1);
        visit(c, level + 1, Some((i + 1, next)), s);
    }
}
