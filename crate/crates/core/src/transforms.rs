//! Statistic-transporting maps on weakly increasing trees.
//!
//! All maps work on any weakly increasing tree whose root label is at most
//! every other label, so they recurse on subtrees directly. The leftmost
//! child of such a root always carries the minimum non-root label.

use crate::tree::WTree;

/// Generalised Deutsch bijection.
///
/// With `H` the subtree of the leftmost root child `m` and `u_1..u_s` the
/// remaining root children: take `hat(H)`, give its root the label of the
/// original root, insert a fresh leftmost child `m`, and hang
/// `hat(T_{u_1}), ..., hat(T_{u_s})` below that fresh node.
///
/// Satisfies `deg_q(T) = od_{q-1}(hat T)` for `q >= 1` and
/// `deg_0(T) = el(hat T)`. The single-node tree is a fixed point.
pub fn hat(t: &WTree) -> WTree {
    let Some((first, rest)) = t.children.split_first() else {
        return t.clone();
    };
    let marker = WTree::node(first.label, rest.iter().map(hat).collect());
    let mut out = hat(first).with_root_label(t.label);
    out.children.insert(0, marker);
    out
}

/// Involution exchanging `odd` and `oe` while fixing `ee`.
///
/// Decompose `T` around its leftmost root child `m`: `x` is the leftmost
/// child of `m` with subtree `F`, `v_1..v_s` are the other children of
/// `m`, `y` is the next sibling of `m` with children `u_1..u_t`, and `H` is
/// the root together with the root children to the right of `y`. Either
/// `x` or `y` may be missing. The image has
///
/// * root: `tilde(F)` relabeled with the root label (a fresh root when `x`
///   is missing), whose first two children are a new `m` and a new `x`;
/// * below `m`: `tilde(H)` relabeled `y` (only when `y` exists), then
///   `tilde(T_{u_1}), ..., tilde(T_{u_t})`;
/// * below `x`: `tilde(T_{v_1}), ..., tilde(T_{v_s})`.
///
/// `x` missing in `T` corresponds to `y` missing in the image and vice
/// versa, which is what makes the map an involution.
pub fn tilde(t: &WTree) -> WTree {
    let Some(first) = t.children.first() else {
        return t.clone();
    };
    let m = first.label;

    let (x_part, v_subtrees) = match first.children.split_first() {
        Some((x, vs)) => (Some(x), vs),
        None => (None, &[][..]),
    };
    let y = t.children.get(1);

    let mut m_children = Vec::new();
    if let Some(y) = y {
        let h = WTree::node(t.label, t.children[2..].to_vec());
        m_children.push(tilde(&h).with_root_label(y.label));
        m_children.extend(y.children.iter().map(tilde));
    }
    let m_node = WTree::node(m, m_children);

    match x_part {
        Some(x) => {
            let mut root = tilde(x).with_root_label(t.label);
            let x_node = WTree::node(x.label, v_subtrees.iter().map(tilde).collect());
            root.children.splice(0..0, [m_node, x_node]);
            root
        }
        None => WTree::node(t.label, vec![m_node]),
    }
}

/// Applies `tilde` to every root subtree. An involution with
/// `odd*(T) = ee*(psi T)`, `oe*(T) = oe*(psi T)`, `ee*(T) = odd*(psi T)`.
pub fn psi(t: &WTree) -> WTree {
    WTree::node(t.label, t.children.iter().map(tilde).collect())
}

/// Applies `hat` to every root subtree. A bijection with
/// `deg_{2d+1}(T) = ed*_{2d}(theta T) + [root degree of theta T is 2d+1]`.
pub fn theta(t: &WTree) -> WTree {
    WTree::node(t.label, t.children.iter().map(hat).collect())
}

/// Names accepted by [`apply`] and the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeMap {
    Hat,
    Tilde,
    Psi,
    Theta,
}

impl TreeMap {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "hat" => Some(Self::Hat),
            "tilde" => Some(Self::Tilde),
            "psi" => Some(Self::Psi),
            "theta" => Some(Self::Theta),
            _ => None,
        }
    }
}

pub fn apply(map: TreeMap, t: &WTree) -> WTree {
    match map {
        TreeMap::Hat => hat(t),
        TreeMap::Tilde => tilde(t),
        TreeMap::Psi => psi(t),
        TreeMap::Theta => theta(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{parse_tree, stats};

    fn t(s: &str) -> WTree {
        parse_tree(s).unwrap()
    }

    #[test]
    fn hat_base_cases() {
        assert_eq!(hat(&t("0")), t("0"));
        assert_eq!(hat(&t("0(1)")), t("0(1)"));
        assert_eq!(hat(&t("0(1(2))")), t("0(1,2)"));
        assert_eq!(hat(&t("0(1,2)")), t("0(1(2))"));
    }

    #[test]
    fn hat_is_not_an_involution() {
        // a chain goes to a star, but the star does not come back
        assert_eq!(hat(&t("0(1(2(3)))")), t("0(1,2,3)"));
        assert_eq!(hat(&t("0(1,2,3)")), t("0(1(2,3))"));
    }

    #[test]
    fn tilde_small_cases() {
        assert_eq!(tilde(&t("0")), t("0"));
        assert_eq!(tilde(&t("0(1)")), t("0(1)"));
        assert_eq!(tilde(&t("0(1(2))")), t("0(1,2)"));
        assert_eq!(tilde(&t("0(1,2)")), t("0(1(2))"));
        assert_eq!(tilde(&t("0(1(1))")), t("0(1,1)"));
        assert_eq!(tilde(&t("0(1,1)")), t("0(1(1))"));
    }

    #[test]
    fn tilde_transport_on_sample() {
        let tree = t("0(1(2,3(3)),1(2),2(3))");
        let img = tilde(&tree);
        img.validate().unwrap();
        assert_eq!(tilde(&img), tree);
        let (a, b) = (stats(&tree), stats(&img));
        assert_eq!((a.odd, a.oe, a.ee), (b.oe, b.odd, b.ee));
    }

    #[test]
    fn psi_on_increasing_pair() {
        // psi(T) = new root over tilde of each root subtree
        assert_eq!(psi(&t("0(1(2))")), t("0(1(2))"));
        assert_eq!(psi(&t("0(1,2)")), t("0(1,2)"));
        assert_eq!(psi(&t("0")), t("0"));
        assert_eq!(psi(&t("0(1(2(3)))")), t("0(1(2,3))"));
    }

    #[test]
    fn theta_small() {
        assert_eq!(theta(&t("0")), t("0"));
        let one = t("0(1)");
        assert_eq!(theta(&one), one);
        let s = stats(&one);
        assert_eq!(s.deg(1), s.ed_star(0) + 1);
    }

    #[test]
    fn maps_preserve_labels() {
        let tree = t("0(1(1,2(2)),2,3)");
        for map in [TreeMap::Hat, TreeMap::Tilde, TreeMap::Psi, TreeMap::Theta] {
            let img = apply(map, &tree);
            assert_eq!(img.validate().unwrap(), tree.validate().unwrap());
        }
    }
}
