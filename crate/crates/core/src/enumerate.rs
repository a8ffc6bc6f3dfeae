//! Exhaustive generation of `T_M` and `B_M`.
//!
//! Trees on `{1^p_1, ..., n^p_n}` are grown letter by letter: every tree on
//! the first `n-1` letters receives `p_n` nodes labeled `n`, arranged as
//! plane forests appended after the existing children of its nodes. A node
//! labeled `n` can only have `n`-labeled descendants and must sit to the
//! right of smaller siblings, so this reaches every tree exactly once.

use std::collections::HashMap;
use std::rc::Rc;

use crate::binary::{rho, WBTree};
use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::tree::WTree;

pub const DEFAULT_BOUND: usize = 10;

fn check_bound(m: &Multiset, bound: usize) -> Result<()> {
    if m.size() > bound {
        return Err(Error::SizeBound {
            size: m.size(),
            bound,
        });
    }
    Ok(())
}

/// Every tree in `T_M`, sorted by canonical text. Fails when `p` exceeds
/// [`DEFAULT_BOUND`].
pub fn enumerate_trees(m: &Multiset) -> Result<Vec<WTree>> {
    enumerate_trees_bounded(m, DEFAULT_BOUND)
}

pub fn enumerate_trees_bounded(m: &Multiset, bound: usize) -> Result<Vec<WTree>> {
    let mut out = Vec::new();
    for_each_tree(m, bound, |t| out.push(t))?;
    let mut keyed: Vec<(String, WTree)> = out.into_iter().map(|t| (t.to_string(), t)).collect();
    keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

/// `rho` applied to [`enumerate_trees`], in the same order.
pub fn enumerate_binary(m: &Multiset) -> Result<Vec<WBTree>> {
    enumerate_binary_bounded(m, DEFAULT_BOUND)
}

pub fn enumerate_binary_bounded(m: &Multiset, bound: usize) -> Result<Vec<WBTree>> {
    Ok(enumerate_trees_bounded(m, bound)?.iter().map(rho).collect())
}

/// Streams every tree of `T_M` to `f` without collecting or sorting.
/// The visiting order is deterministic.
pub fn for_each_tree<F: FnMut(WTree)>(m: &Multiset, bound: usize, mut f: F) -> Result<()> {
    check_bound(m, bound)?;
    let mut gen = Generator::default();
    gen.grow(WTree::leaf(0), m.multiplicities(), 1, &mut f);
    Ok(())
}

#[derive(Default)]
struct Generator {
    // plane forests with k nodes, all labeled with the given label
    forests: HashMap<(usize, u32), Rc<Vec<Vec<WTree>>>>,
}

/// `table[b]` lists the results of adding exactly `b` new nodes.
type Table<T> = Vec<Vec<T>>;

impl Generator {
    fn grow<F: FnMut(WTree)>(&mut self, tree: WTree, rest: &[u32], label: u32, f: &mut F) {
        match rest.split_first() {
            None => f(tree),
            Some((&count, tail)) => {
                let count = count as usize;
                let mut table = self.extend(&tree, label, count);
                for t in table.swap_remove(count) {
                    self.grow(t, tail, label + 1, f);
                }
            }
        }
    }

    fn forests(&mut self, k: usize, label: u32) -> Rc<Vec<Vec<WTree>>> {
        if let Some(f) = self.forests.get(&(k, label)) {
            return f.clone();
        }
        let built = if k == 0 {
            vec![Vec::new()]
        } else {
            let mut all = Vec::new();
            // first tree has a root plus `inner` descendants
            for inner in 0..k {
                let firsts = self.forests(inner, label);
                let rests = self.forests(k - 1 - inner, label);
                for below in firsts.iter() {
                    for rest in rests.iter() {
                        let mut forest = Vec::with_capacity(1 + rest.len());
                        forest.push(WTree::node(label, below.clone()));
                        forest.extend(rest.iter().cloned());
                        all.push(forest);
                    }
                }
            }
            all
        };
        let built = Rc::new(built);
        self.forests.insert((k, label), built.clone());
        built
    }

    /// Every way to add `b <= budget` nodes labeled `label` below `t`,
    /// indexed by `b`.
    fn extend(&mut self, t: &WTree, label: u32, budget: usize) -> Table<WTree> {
        let kids = self.distribute(&t.children, label, budget);
        let mut out: Table<WTree> = vec![Vec::new(); budget + 1];
        for own in 0..=budget {
            let forests = self.forests(own, label);
            for (b, lists) in kids.iter().enumerate().take(budget + 1 - own) {
                for kids in lists {
                    for forest in forests.iter() {
                        let mut children = Vec::with_capacity(kids.len() + forest.len());
                        children.extend(kids.iter().cloned());
                        children.extend(forest.iter().cloned());
                        out[b + own].push(WTree::node(t.label, children));
                    }
                }
            }
        }
        out
    }

    /// Child lists obtained by spreading `b <= budget` new nodes over
    /// `children`, indexed by `b`.
    fn distribute(&mut self, children: &[WTree], label: u32, budget: usize) -> Table<Vec<WTree>> {
        let mut acc: Table<Vec<WTree>> = vec![Vec::new(); budget + 1];
        acc[0].push(Vec::new());
        // suffix by suffix, from the last child backwards
        for child in children.iter().rev() {
            let heads = self.extend(child, label, budget);
            let mut next: Table<Vec<WTree>> = vec![Vec::new(); budget + 1];
            for (h, hs) in heads.iter().enumerate() {
                for (b, tails) in acc.iter().enumerate().take(budget + 1 - h) {
                    for head in hs {
                        for tail in tails {
                            let mut v = Vec::with_capacity(tail.len() + 1);
                            v.push(head.clone());
                            v.extend(tail.iter().cloned());
                            next[h + b].push(v);
                        }
                    }
                }
            }
            acc = next;
        }
        acc
    }
}
