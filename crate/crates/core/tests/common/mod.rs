//! Independent oracles for the integration tests.
//!
//! Nothing here calls into the library's enumerator, statistics or
//! polynomial code. Trees are produced by brute force: every plane tree
//! shape (as a preorder depth sequence) times every arrangement of the
//! multiset labels, filtered by the weakly increasing conditions.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

/// A plane tree as preorder arrays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OTree {
    pub labels: Vec<u32>,
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<usize>,
}

impl OTree {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.len()).filter(|&c| self.parent[c] == Some(v)).collect()
    }

    /// Same text form as the library: `label(child,child,...)`.
    pub fn text(&self) -> String {
        fn go(t: &OTree, v: usize, out: &mut String) {
            out.push_str(&t.labels[v].to_string());
            let kids = t.children(v);
            if !kids.is_empty() {
                out.push('(');
                for (k, c) in kids.iter().enumerate() {
                    if k > 0 {
                        out.push(',');
                    }
                    go(t, *c, out);
                }
                out.push(')');
            }
        }
        let mut s = String::new();
        go(self, 0, &mut s);
        s
    }
}

/// Preorder depth sequences of plane trees with `n` nodes.
pub fn shapes(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let last = *cur.last().unwrap();
        for d in 1..=last + 1 {
            cur.push(d);
            go(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![0], &mut out);
    out
}

fn parents(depth: &[usize]) -> Vec<Option<usize>> {
    let mut stack: Vec<usize> = Vec::new();
    let mut out = Vec::with_capacity(depth.len());
    for (v, &d) in depth.iter().enumerate() {
        stack.truncate(d);
        out.push(stack.last().copied());
        stack.push(v);
    }
    out
}

/// Distinct arrangements of a multiset given by multiplicities of 1..n.
pub fn arrangements(mult: &[u32]) -> Vec<Vec<u32>> {
    fn go(left: &mut Vec<u32>, total: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for l in 0..left.len() {
            if left[l] > 0 {
                left[l] -= 1;
                cur.push(l as u32 + 1);
                go(left, total, cur, out);
                cur.pop();
                left[l] += 1;
            }
        }
    }
    let total = mult.iter().sum::<u32>() as usize;
    let mut out = Vec::new();
    go(&mut mult.to_vec(), total, &mut Vec::new(), &mut out);
    out
}

fn weakly_increasing(t: &OTree) -> bool {
    for v in 1..t.len() {
        if t.labels[t.parent[v].unwrap()] > t.labels[v] {
            return false;
        }
    }
    for v in 0..t.len() {
        let kids = t.children(v);
        if kids.windows(2).any(|w| t.labels[w[0]] > t.labels[w[1]]) {
            return false;
        }
    }
    true
}

/// Every weakly increasing tree on the multiset, sorted by text.
pub fn trees(mult: &[u32]) -> Vec<OTree> {
    let p = mult.iter().sum::<u32>() as usize;
    let mut out = Vec::new();
    for depth in shapes(p + 1) {
        let parent = parents(&depth);
        for arr in arrangements(mult) {
            let mut labels = vec![0];
            labels.extend(arr);
            let t = OTree {
                labels,
                parent: parent.clone(),
                depth: depth.clone(),
            };
            if weakly_increasing(&t) {
                out.push(t);
            }
        }
    }
    out.sort_by_key(|t| t.text());
    out
}

/// Every multiplicity vector with all entries positive and total at most
/// `max`.
pub fn multisets(max: usize) -> Vec<Vec<u32>> {
    fn go(left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        for c in 1..=left {
            cur.push(c as u32);
            go(left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max, &mut Vec::new(), &mut out);
    out
}

pub fn spec(mult: &[u32]) -> String {
    mult.iter()
        .enumerate()
        .map(|(k, c)| format!("{}:{c}", k + 1))
        .collect::<Vec<_>>()
        .join(",")
}

/// Statistics recomputed from the preorder arrays.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OStats {
    pub leaf: usize,
    pub el: usize,
    pub ee: usize,
    pub oe: usize,
    pub oo: usize,
    pub eo: usize,
    pub odd: usize,
    pub even: usize,
    pub ee_star: usize,
    pub oe_star: usize,
    pub odd_star: usize,
    pub oddf: usize,
    pub deg: BTreeMap<usize, usize>,
    pub od: BTreeMap<usize, usize>,
    pub act: usize,
    pub eact: usize,
}

pub fn ostats(t: &OTree) -> OStats {
    let mut s = OStats::default();
    let deg: Vec<usize> = (0..t.len()).map(|v| t.children(v).len()).collect();
    for v in 0..t.len() {
        let (d, lvl, root) = (deg[v], t.depth[v], v == 0);
        let odd_d = d % 2 == 1;
        let odd_l = lvl % 2 == 1;
        s.leaf += (d == 0) as usize;
        s.el += (!odd_l) as usize;
        *s.deg.entry(d).or_insert(0) += 1;
        if odd_l {
            *s.od.entry(d).or_insert(0) += 1;
        }
        match (odd_d, odd_l) {
            (false, false) => s.ee += 1,
            (false, true) => s.oe += 1,
            (true, true) => s.oo += 1,
            (true, false) => s.eo += 1,
        }
        if odd_d {
            s.odd += 1;
        } else {
            s.even += 1;
        }
        if !root {
            match (odd_d, odd_l) {
                (true, _) => s.odd_star += 1,
                (false, true) => s.oe_star += 1,
                (false, false) => s.ee_star += 1,
            }
        }
        let full = if root { d } else { d + 1 };
        s.oddf += full % 2;
        if !root && odd_l {
            let sibs = t.children(t.parent[v].unwrap());
            let pos = sibs.iter().position(|&c| c == v).unwrap();
            let ok = match sibs.get(pos + 1) {
                Some(&y) => deg[y] % 2 == d % 2,
                None => odd_d,
            };
            if pos % 2 == 0 && ok {
                s.act += 1;
                s.eact += (!odd_d) as usize;
            }
        }
    }
    s
}

/// Monomial counts keyed by exponent vectors.
pub type Counts = BTreeMap<Vec<u32>, i128>;

pub fn tally<T>(items: &[T], key: impl Fn(&T) -> Vec<u32>) -> Counts {
    let mut out = Counts::new();
    for it in items {
        *out.entry(key(it)).or_insert(0) += 1;
    }
    out
}

/// `D^n(x)` for `x -> yz, y -> xz, z -> xy`, on exponent triples.
pub fn schett_by_grammar(n: usize) -> Counts {
    let mut cur: HashMap<[u32; 3], i128> = HashMap::from([([1, 0, 0], 1)]);
    for _ in 0..n {
        let mut next: HashMap<[u32; 3], i128> = HashMap::new();
        for ([a, b, c], k) in cur {
            if a > 0 {
                *next.entry([a - 1, b + 1, c + 1]).or_insert(0) += k * a as i128;
            }
            if b > 0 {
                *next.entry([a + 1, b - 1, c + 1]).or_insert(0) += k * b as i128;
            }
            if c > 0 {
                *next.entry([a + 1, b + 1, c - 1]).or_insert(0) += k * c as i128;
            }
        }
        cur = next;
    }
    cur.into_iter().map(|(e, k)| (e.to_vec(), k)).collect()
}

/// Euler zigzag numbers by the boustrophedon (Seidel) triangle.
pub fn euler_zigzag(n: usize) -> Vec<u128> {
    let mut out = vec![1u128];
    let mut row = vec![1u128];
    for k in 1..=n {
        let mut next = vec![0u128; k + 1];
        for j in 1..=k {
            next[j] = next[j - 1] + row[k - j];
        }
        out.push(next[k]);
        row = next;
    }
    out
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut r = 1u128;
    for i in 0..k as u128 {
        r = r * (n as u128 - i) / (i + 1);
    }
    r
}

pub fn catalan(n: u64) -> u128 {
    binom(2 * n, n) / (n as u128 + 1)
}
