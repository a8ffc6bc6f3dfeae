//! Weakly increasing binary trees and the triangle group action.
//!
//! `rho` sends the leftmost child of a node to its left child and the next
//! sibling of a node to its right child. Under `rho` the degree of a node
//! becomes its right-degree (length of the right chain hanging from its
//! left child) and its level becomes its left-level (left edges on the
//! root path).
//!
//! Nodes live in an arena and keep their slot across [`lambda`], so a
//! [`NodeId`] is a stable node identity inside one orbit. Equality,
//! ordering and hashing are structural and ignore the arena layout.
//!
//! Text form: `label[left|right]` with `_` for a missing child, e.g.
//! `0[1[_|2[_|_]]|_]`. A bare label is accepted as a leaf when parsing.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::tree::WTree;

pub type NodeId = usize;

#[derive(Debug, Clone)]
struct BNode {
    label: u32,
    left: Option<NodeId>,
    right: Option<NodeId>,
    parent: Option<NodeId>,
}

#[derive(Debug, Clone)]
pub struct WBTree {
    nodes: Vec<BNode>,
    root: NodeId,
}

/// Per-node positional data derived from the current shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeInfo {
    pub label: u32,
    pub left_level: usize,
    pub right_degree: usize,
    /// Node from which the last left edge on the root path starts.
    pub ancestor: Option<NodeId>,
    /// Number of edges from the ancestor down to this node.
    pub grandson_index: usize,
    pub active: bool,
}

impl WBTree {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn label(&self, id: NodeId) -> u32 {
        self.nodes[id].label
    }

    pub fn left(&self, id: NodeId) -> Option<NodeId> {
        self.nodes[id].left
    }

    pub fn right(&self, id: NodeId) -> Option<NodeId> {
        self.nodes[id].right
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.nodes[id].parent
    }

    fn push(&mut self, label: u32, parent: Option<NodeId>) -> NodeId {
        self.nodes.push(BNode {
            label,
            left: None,
            right: None,
            parent,
        });
        self.nodes.len() - 1
    }

    pub fn right_degree(&self, id: NodeId) -> usize {
        let mut d = 0;
        let mut cur = self.nodes[id].left;
        while let Some(c) = cur {
            d += 1;
            cur = self.nodes[c].right;
        }
        d
    }

    /// Positional data for every node, indexed by [`NodeId`].
    pub fn infos(&self) -> Vec<NodeInfo> {
        let mut out = vec![
            NodeInfo {
                label: 0,
                left_level: 0,
                right_degree: 0,
                ancestor: None,
                grandson_index: 0,
                active: false,
            };
            self.nodes.len()
        ];
        // chain[c]: length of the right chain starting at c
        let mut chain = vec![0usize; self.nodes.len()];
        let mut seen = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, 0usize, None, 0usize)];
        while let Some((id, ll, anc, k)) = stack.pop() {
            let n = &self.nodes[id];
            seen.push(id);
            out[id] = NodeInfo {
                label: n.label,
                left_level: ll,
                right_degree: 0,
                ancestor: anc,
                grandson_index: k,
                active: false,
            };
            if let Some(l) = n.left {
                stack.push((l, ll + 1, Some(id), 1));
            }
            if let Some(r) = n.right {
                stack.push((r, ll, anc, k + 1));
            }
        }
        // children are pushed after their parent, so reverse order is bottom-up
        for &id in seen.iter().rev() {
            chain[id] = 1 + self.nodes[id].right.map_or(0, |r| chain[r]);
        }
        for id in 0..self.nodes.len() {
            out[id].right_degree = self.nodes[id].left.map_or(0, |l| chain[l]);
        }
        for id in 0..self.nodes.len() {
            let info = out[id];
            let parity_ok = match self.nodes[id].right {
                Some(y) => out[y].right_degree % 2 == info.right_degree % 2,
                None => info.right_degree % 2 == 1,
            };
            out[id].active = info.left_level % 2 == 1 && info.grandson_index % 2 == 1 && parity_ok;
        }
        out
    }

    pub fn is_active(&self, id: NodeId) -> bool {
        self.infos()[id].active
    }

    /// Structural encoding: preorder labels with a sentinel for missing
    /// children.
    pub fn key(&self) -> Vec<u32> {
        fn go(t: &WBTree, id: Option<NodeId>, out: &mut Vec<u32>) {
            match id {
                None => out.push(u32::MAX),
                Some(i) => {
                    out.push(t.nodes[i].label);
                    go(t, t.nodes[i].left, out);
                    go(t, t.nodes[i].right, out);
                }
            }
        }
        let mut out = Vec::with_capacity(2 * self.nodes.len() + 1);
        go(self, Some(self.root), &mut out);
        out
    }

    /// Non-root labels, sorted.
    pub fn labels(&self) -> Vec<u32> {
        let mut v: Vec<u32> = (0..self.nodes.len())
            .filter(|&i| i != self.root)
            .map(|i| self.nodes[i].label)
            .collect();
        v.sort_unstable();
        v
    }

    pub fn validate(&self) -> Result<Multiset> {
        let root = &self.nodes[self.root];
        if root.label != 0 {
            return Err(Error::InvalidTree(format!(
                "root must be labeled 0, found {}",
                root.label
            )));
        }
        if root.right.is_some() {
            return Err(Error::InvalidTree("node 0 must not have a right child".into()));
        }
        if self.nodes.len() > 1 && root.left.is_none() {
            return Err(Error::InvalidTree("node 0 must have exactly one left child".into()));
        }
        for (id, n) in self.nodes.iter().enumerate() {
            if id != self.root && n.label == 0 {
                return Err(Error::InvalidTree("non-root labels must be at least 1".into()));
            }
            for c in [n.left, n.right].into_iter().flatten() {
                if self.nodes[c].label < n.label {
                    return Err(Error::InvalidTree(format!(
                        "labels must weakly increase along paths: {} below {}",
                        self.nodes[c].label, n.label
                    )));
                }
            }
        }
        Multiset::from_labels(&self.labels()).map_err(|e| Error::InvalidTree(e.to_string()))
    }

    fn write(&self, id: Option<NodeId>, out: &mut String) {
        match id {
            None => out.push('_'),
            Some(i) => {
                out.push_str(&self.nodes[i].label.to_string());
                out.push('[');
                self.write(self.nodes[i].left, out);
                out.push('|');
                self.write(self.nodes[i].right, out);
                out.push(']');
            }
        }
    }
}

impl PartialEq for WBTree {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for WBTree {}

impl Hash for WBTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for WBTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WBTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for WBTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(Some(self.root), &mut s);
        f.write_str(&s)
    }
}

impl FromStr for WBTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_binary(s)
    }
}

/// Parses and validates a weakly increasing binary tree.
pub fn parse_binary(text: &str) -> Result<WBTree> {
    let mut p = BParser {
        bytes: text.as_bytes(),
        pos: 0,
        tree: WBTree {
            nodes: Vec::new(),
            root: 0,
        },
    };
    p.skip_ws();
    let root = p
        .node(None)?
        .ok_or_else(|| p.err("the root cannot be empty"))?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    p.tree.root = root;
    p.tree.validate()?;
    Ok(p.tree)
}

struct BParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    tree: WBTree,
}

impl BParser<'_> {
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

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn node(&mut self, parent: Option<NodeId>) -> Result<Option<NodeId>> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&b'_') {
            self.pos += 1;
            return Ok(None);
        }
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a label or `_`"));
        }
        let label: u32 = std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Syntax {
                pos: start,
                msg: "label out of range".into(),
            })?;
        let id = self.tree.push(label, parent);
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&b'[') {
            self.pos += 1;
            let l = self.node(Some(id))?;
            self.expect(b'|')?;
            let r = self.node(Some(id))?;
            self.expect(b']')?;
            self.tree.nodes[id].left = l;
            self.tree.nodes[id].right = r;
        }
        Ok(Some(id))
    }
}

pub fn format_binary(b: &WBTree) -> String {
    b.to_string()
}

/// The natural bijection from plane trees to binary trees.
pub fn rho(t: &WTree) -> WBTree {
    fn go(t: &WTree, id: NodeId, b: &mut WBTree) {
        let mut prev: Option<NodeId> = None;
        for c in &t.children {
            let parent = prev.unwrap_or(id);
            let cid = b.push(c.label, Some(parent));
            match prev {
                None => b.nodes[id].left = Some(cid),
                Some(p) => b.nodes[p].right = Some(cid),
            }
            go(c, cid, b);
            prev = Some(cid);
        }
    }
    let mut b = WBTree {
        nodes: Vec::with_capacity(t.size()),
        root: 0,
    };
    let root = b.push(t.label, None);
    go(t, root, &mut b);
    b
}

/// Inverse of [`rho`]. Rejects trees whose root has a right child.
pub fn rho_inv(b: &WBTree) -> Result<WTree> {
    if b.nodes[b.root].right.is_some() {
        return Err(Error::InvalidTree(
            "node 0 must have exactly one left child and no right child".into(),
        ));
    }
    fn go(b: &WBTree, id: NodeId) -> WTree {
        let mut children = Vec::new();
        let mut cur = b.nodes[id].left;
        while let Some(c) = cur {
            children.push(go(b, c));
            cur = b.nodes[c].right;
        }
        WTree::node(b.nodes[id].label, children)
    }
    Ok(go(b, b.root))
}

/// Binary counterparts of the plane-tree statistics, plus the dynamic
/// node counts used by the group action.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BStatVector {
    pub rdeg: BTreeMap<usize, usize>,
    pub rol: BTreeMap<usize, usize>,
    pub ell: usize,
    pub ord: usize,
    pub oler: usize,
    pub eler: usize,
    pub act: usize,
    pub eact: usize,
    pub oact: usize,
    pub dme: usize,
    pub dmo: usize,
    pub ndoler: usize,
    pub ndord: usize,
}

/// Dynamic nodes: an active node `u` pairs with its right child when it
/// has one (even or odd after `u`), otherwise with its ancestor (odd).
fn dynamic_sets(b: &WBTree, infos: &[NodeInfo]) -> (HashSet<NodeId>, HashSet<NodeId>) {
    let mut even = HashSet::new();
    let mut odd = HashSet::new();
    for (u, info) in infos.iter().enumerate() {
        if !info.active {
            continue;
        }
        match b.nodes[u].right {
            Some(y) => {
                let set = if info.right_degree % 2 == 0 { &mut even } else { &mut odd };
                set.insert(u);
                set.insert(y);
            }
            None => {
                odd.insert(u);
                if let Some(w) = info.ancestor {
                    odd.insert(w);
                }
            }
        }
    }
    (even, odd)
}

pub fn bstats(b: &WBTree) -> BStatVector {
    let infos = b.infos();
    let (dyn_even, dyn_odd) = dynamic_sets(b, &infos);
    let mut s = BStatVector {
        dme: dyn_even.len(),
        dmo: dyn_odd.len(),
        ..Default::default()
    };
    for (id, info) in infos.iter().enumerate() {
        let q = info.right_degree;
        let odd_ll = info.left_level % 2 == 1;
        *s.rdeg.entry(q).or_insert(0) += 1;
        if odd_ll {
            *s.rol.entry(q).or_insert(0) += 1;
        } else {
            s.ell += 1;
        }
        if q % 2 == 1 {
            s.ord += 1;
            if !dyn_odd.contains(&id) {
                s.ndord += 1;
            }
        } else if odd_ll {
            s.oler += 1;
            if !dyn_even.contains(&id) {
                s.ndoler += 1;
            }
        } else {
            s.eler += 1;
        }
        if info.active {
            s.act += 1;
            if q % 2 == 0 {
                s.eact += 1;
            } else {
                s.oact += 1;
            }
        }
    }
    s
}

/// Depth-first visiting order whose left/right choice at a node with two
/// unvisited children depends on the active status of the node and of its
/// parent. Starts with the root; the result has one entry per node.
pub fn modified_preorder(b: &WBTree) -> Vec<NodeId> {
    preorder_with(b, &b.infos())
}

fn preorder_with(b: &WBTree, infos: &[NodeInfo]) -> Vec<NodeId> {
    let n = b.nodes.len();
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    order.push(b.root);
    visited[b.root] = true;
    let unvisited = |id: Option<NodeId>, visited: &[bool]| id.filter(|&c| !visited[c]);
    while order.len() < n {
        let (vk, x, y) = order
            .iter()
            .rev()
            .find_map(|&v| {
                let x = unvisited(b.nodes[v].left, &visited);
                let y = unvisited(b.nodes[v].right, &visited);
                (x.is_some() || y.is_some()).then_some((v, x, y))
            })
            .expect("an unvisited node is always reachable from a visited one");
        let next = match (x, y) {
            (Some(x), Some(y)) => {
                let go_right = if infos[vk].active {
                    infos[vk].right_degree % 2 == 0
                } else if let Some(w) = b.nodes[vk].parent.filter(|&w| infos[w].active) {
                    b.nodes[w].right == Some(vk)
                } else {
                    false
                };
                if go_right {
                    y
                } else {
                    x
                }
            }
            (Some(c), None) | (None, Some(c)) => c,
            (None, None) => unreachable!(),
        };
        visited[next] = true;
        order.push(next);
    }
    order
}

/// The `i`-th node (1-based, in modified preorder) for `i` in `1..=p`.
pub fn nth_node(b: &WBTree, i: usize) -> Result<NodeId> {
    let p = b.len() - 1;
    if i == 0 || i > p {
        return Err(Error::IndexOutOfRange { index: i, max: p });
    }
    Ok(modified_preorder(b)[i])
}

/// `Lambda_i`: when the `i`-th node is active, swap the left and right
/// branches at that node and at each of its (existing) children;
/// otherwise the identity.
pub fn lambda(b: &WBTree, i: usize) -> Result<WBTree> {
    let p = b.len() - 1;
    if i == 0 || i > p {
        return Err(Error::IndexOutOfRange { index: i, max: p });
    }
    let infos = b.infos();
    let u = preorder_with(b, &infos)[i];
    let mut out = b.clone();
    if !infos[u].active {
        return Ok(out);
    }
    let (x, y) = (b.nodes[u].left, b.nodes[u].right);
    for id in std::iter::once(u).chain(x).chain(y) {
        let n = &mut out.nodes[id];
        std::mem::swap(&mut n.left, &mut n.right);
    }
    Ok(out)
}

/// Closure of `b` under every `Lambda_i`, sorted structurally.
pub fn orbit(b: &WBTree) -> Vec<WBTree> {
    let p = b.len() - 1;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([b.clone()]);
    seen.insert(b.key());
    while let Some(cur) = queue.pop_front() {
        for i in 1..=p {
            let next = lambda(&cur, i).expect("index within range");
            if seen.insert(next.key()) {
                queue.push_back(next);
            }
        }
        out.push(cur);
    }
    out.sort();
    out
}

/// The unique member of the orbit with no active even node.
pub fn orbit_representative(b: &WBTree) -> WBTree {
    orbit(b)
        .into_iter()
        .find(|t| bstats(t).eact == 0)
        .expect("every orbit contains a tree without active even nodes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{parse_tree, stats};

    fn b(s: &str) -> WBTree {
        parse_binary(s).unwrap()
    }

    #[test]
    fn rho_direct_rule() {
        let t = parse_tree("0(1,2)").unwrap();
        assert_eq!(rho(&t).to_string(), "0[1[_|2[_|_]]|_]");
        assert_eq!(rho_inv(&rho(&t)).unwrap(), t);
        assert_eq!(rho(&WTree::leaf(0)).to_string(), "0[_|_]");
    }

    #[test]
    fn parse_binary_forms() {
        assert_eq!(b("0[1[_|2]|_]"), b("0[1[_|2[_|_]]|_]"));
        assert_eq!(b(" 0 [ 1 | _ ] ").to_string(), "0[1[_|_]|_]");
        assert!(matches!(parse_binary("0[1|_"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_binary("_"), Err(Error::Syntax { .. })));
        // root with a right child
        assert!(matches!(parse_binary("0[1|1]"), Err(Error::InvalidTree(_))));
        // decreasing path
        assert!(matches!(parse_binary("0[2[_|1]|_]"), Err(Error::InvalidTree(_))));
    }

    #[test]
    fn rho_inv_rejects_right_child_at_root() {
        let mut t = rho(&parse_tree("0(1)").unwrap());
        let extra = t.push(1, Some(0));
        t.nodes[0].right = Some(extra);
        assert!(rho_inv(&t).is_err());
    }

    #[test]
    fn one_edge_bstats() {
        let s = bstats(&rho(&parse_tree("0(1)").unwrap()));
        assert_eq!((s.ell, s.oler, s.eler, s.ord), (1, 1, 0, 1));
        assert_eq!(s.rdeg.get(&1), Some(&1));
        assert_eq!(s.rdeg.get(&0), Some(&1));
        assert_eq!((s.act, s.ndoler, s.ndord), (0, 1, 1));
    }

    #[test]
    fn active_agrees_with_plane_definition() {
        for text in ["0(1(2))", "0(1,1)", "0(1,1,1,1)", "0(1(2,3),2(3))"] {
            let t = parse_tree(text).unwrap();
            let (s, bs) = (stats(&t), bstats(&rho(&t)));
            assert_eq!((s.act, s.eact, s.oact), (bs.act, bs.eact, bs.oact), "{text}");
        }
    }

    #[test]
    fn preorder_of_chain_is_plain_preorder() {
        let t = b("0[1[2[_|_]|_]|_]");
        let order: Vec<u32> = modified_preorder(&t).iter().map(|&i| t.label(i)).collect();
        assert_eq!(order, vec![0, 1, 2]);
        assert_eq!(modified_preorder(&b("0")), vec![0]);
    }

    #[test]
    fn lambda_on_active_node() {
        // 0(1(2)): node 1 is active odd with only a left child
        let t = rho(&parse_tree("0(1(2))").unwrap());
        let img = lambda(&t, 1).unwrap();
        assert_eq!(rho_inv(&img).unwrap(), parse_tree("0(1,2)").unwrap());
        assert_eq!(lambda(&img, 1).unwrap(), t);
        // node 2 is inactive
        assert_eq!(lambda(&t, 2).unwrap(), t);
        assert_eq!(
            lambda(&t, 3).unwrap_err(),
            Error::IndexOutOfRange { index: 3, max: 2 }
        );
        assert!(lambda(&t, 0).is_err());
    }

    #[test]
    fn orbit_of_inactive_tree_is_singleton() {
        let t = rho(&parse_tree("0(1(2),3)").unwrap());
        assert_eq!(bstats(&t).act, 0);
        assert_eq!(orbit(&t), vec![t.clone()]);
    }

    #[test]
    fn orbit_pair() {
        let t = rho(&parse_tree("0(1,1)").unwrap());
        let o = orbit(&t);
        assert_eq!(o.len(), 2);
        assert_eq!(bstats(&orbit_representative(&t)).eact, 0);
    }
}
