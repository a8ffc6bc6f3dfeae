//! Exhaustive verification suites.
//!
//! Each suite runs a group of identities over every multiset up to a size
//! bound (or over the relevant index range) and reports one
//! [`CheckOutcome`] per identity, with the first counterexample found.
//! Multisets are visited smallest first and trees in canonical order, so
//! the reported counterexample is a smallest one and reports are
//! reproducible.
//!
//! Tree-based checks from every requested suite share one pass: each
//! `T_M` is enumerated once and handed to all of them. Multisets are
//! spread over threads with rayon.

use std::cell::OnceCell;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binary::{
    bstats, lambda, modified_preorder, orbit, rho, rho_inv, BStatVector, NodeInfo, WBTree,
};
use crate::combinat::{catalan, euler_numbers, factorial};
use crate::enumerate::enumerate_trees_bounded;
use crate::multiset::{count_trees, Multiset};
use crate::poly::mpoly::MPoly;
use crate::poly::schett::{
    format_schett, four_var_poly, gamma_by_action_of, gamma_expand, multiset_schett, reduce,
    reduced_exponents,
    reduced_schett, reduced_slice, schett_polys, st_relations, stat_poly_of, wxyz, xyz, IntPoly,
};
use crate::poly::upoly::{real_rooted, RootReport, UPoly};
use crate::series::closed::{closed_count, fish_count, jaco2_count, six_term_count, ternary_identity};
use crate::series::jacobi::{jacobi_schett_rows, jacobi_taylor, APoly};
use crate::series::plane::{check_algebraic_eq, lagrange_series, plane_gf, plane_schett};
use crate::transforms::{hat, psi, theta, tilde};
use crate::tree::{stats, StatVector, WTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Counting,
    Schett,
    Symmetry,
    Hat,
    Gamma,
    Action,
    Series,
    Closed,
    Jacobi,
    Euler,
    Conjecture,
    St,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Counting,
        Suite::Schett,
        Suite::Symmetry,
        Suite::Hat,
        Suite::Gamma,
        Suite::Action,
        Suite::Series,
        Suite::Closed,
        Suite::Jacobi,
        Suite::Euler,
        Suite::Conjecture,
        Suite::St,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counting => "counting",
            Suite::Schett => "schett",
            Suite::Symmetry => "symmetry",
            Suite::Hat => "hat",
            Suite::Gamma => "gamma",
            Suite::Action => "action",
            Suite::Series => "series",
            Suite::Closed => "closed",
            Suite::Jacobi => "jacobi",
            Suite::Euler => "euler",
            Suite::Conjecture => "conjecture",
            Suite::St => "st",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Ranges for the suites. Tree-based identities run over every multiset
/// with `p <= max_size`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub max_size: usize,
    /// Plane and increasing trees with at most this many nodes are
    /// scanned for real-rootedness.
    pub max_nodes: usize,
    pub series_order: usize,
    /// Plane trees with at most this many edges back the closed forms.
    pub closed_edges: usize,
    pub ternary_max: u32,
    pub jacobi_max_n: usize,
    pub st_max_m: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_size: 8,
            max_nodes: 10,
            series_order: 8,
            closed_edges: 9,
            ternary_max: 20,
            jacobi_max_n: 4,
            st_max_m: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    /// Number of objects or indices examined.
    pub cases: usize,
    pub counterexample: Option<String>,
}

type Verdict = std::result::Result<usize, String>;

fn outcome(suite: Suite, name: &str, v: Verdict) -> CheckOutcome {
    match v {
        Ok(cases) => CheckOutcome {
            suite,
            name: name.to_string(),
            passed: true,
            cases,
            counterexample: None,
        },
        Err(msg) => CheckOutcome {
            suite,
            name: name.to_string(),
            passed: false,
            cases: 0,
            counterexample: Some(msg),
        },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// One multiset with everything the tree-based checks consume.
struct Corpus {
    m: Multiset,
    trees: Vec<WTree>,
    stats: Vec<StatVector>,
    binary: OnceCell<Vec<WBTree>>,
    bstats: OnceCell<Vec<BStatVector>>,
}

impl Corpus {
    fn new(m: Multiset, bound: usize) -> crate::Result<Self> {
        let trees = enumerate_trees_bounded(&m, bound)?;
        let stats = trees.iter().map(stats).collect();
        Ok(Self {
            m,
            trees,
            stats,
            binary: OnceCell::new(),
            bstats: OnceCell::new(),
        })
    }

    fn binary(&self) -> &[WBTree] {
        self.binary.get_or_init(|| self.trees.iter().map(rho).collect())
    }

    fn bstats(&self) -> &[BStatVector] {
        self.bstats.get_or_init(|| self.binary().iter().map(bstats).collect())
    }

    fn reduced(&self) -> IntPoly {
        stat_poly_of(&self.stats, reduced_exponents)
    }
}

type CorpusCheck = fn(&Corpus) -> Verdict;
type TreeCheck = fn(&WTree, &StatVector, &WBTree, &BStatVector) -> std::result::Result<(), String>;

enum Check {
    /// Runs once, on its own range.
    Global(Box<dyn FnOnce() -> Verdict + Send>),
    /// Runs on every multiset of the shared pass.
    PerMultiset(CorpusCheck),
}

fn global(f: impl FnOnce() -> Verdict + Send + 'static) -> Check {
    Check::Global(Box::new(f))
}

/// Runs `f` on every tree of the corpus, with its statistics and binary
/// encoding.
fn each(c: &Corpus, f: TreeCheck) -> Verdict {
    let (bin, bst) = (c.binary(), c.bstats());
    for (k, t) in c.trees.iter().enumerate() {
        f(t, &c.stats[k], &bin[k], &bst[k]).map_err(|e| format!("T = {t}: {e}"))?;
    }
    Ok(c.trees.len())
}

/// Plane-tree-only variant of [`each`] that skips the binary encoding.
fn each_plane(c: &Corpus, f: fn(&WTree, &StatVector) -> std::result::Result<(), String>) -> Verdict {
    for (t, s) in c.trees.iter().zip(&c.stats) {
        f(t, s).map_err(|e| format!("T = {t}: {e}"))?;
    }
    Ok(c.trees.len())
}

type Histogram = HashMap<[u32; 3], u64>;

fn histogram(all: &[StatVector], key: impl Fn(&StatVector) -> [u32; 3]) -> Histogram {
    let mut h = Histogram::new();
    for s in all {
        *h.entry(key(s)).or_insert(0) += 1;
    }
    h
}

fn swapped(h: &Histogram, a: usize, b: usize) -> Histogram {
    h.iter()
        .map(|(k, &v)| {
            let mut k = *k;
            k.swap(a, b);
            (k, v)
        })
        .collect()
}

fn symmetric(c: &Corpus, a: usize, b: usize, key: impl Fn(&StatVector) -> [u32; 3]) -> Verdict {
    let h = histogram(&c.stats, key);
    ensure(h == swapped(&h, a, b), || "distribution is not symmetric".into())?;
    Ok(c.trees.len())
}

fn equidistributed(c: &Corpus, f: fn(&StatVector) -> usize, g: fn(&StatVector) -> usize) -> Verdict {
    let h1 = histogram(&c.stats, |s| [f(s) as u32, 0, 0]);
    let h2 = histogram(&c.stats, |s| [g(s) as u32, 0, 0]);
    ensure(h1 == h2, || "distributions differ".into())?;
    Ok(c.trees.len())
}

fn checks_of(suite: Suite, cfg: &VerifyConfig) -> Vec<(&'static str, Check)> {
    use Check::PerMultiset as per;
    let n = cfg.max_size;
    let cfg = cfg.clone();
    match suite {
        Suite::Counting => vec![
            ("product formula equals enumeration", per(counting_matches)),
            ("multiset {1^2,2^2} has 18 trees", global(figure_count)),
            ("sets give n!, uniform multisets give Catalan numbers", global(move || set_and_uniform_counts(n))),
            ("per-tree statistic identities", per(|c| each_plane(c, stat_identities))),
            (
                "leaves and even-level nodes are equidistributed",
                per(|c| equidistributed(c, |s| s.leaf, |s| s.el)),
            ),
        ],
        Suite::Schett => vec![
            ("first Schett polynomials print as expected", global(schett_display)),
            ("S_n(1,1,1) = n!", global(move || schett_values(n))),
            ("S_n is symmetric in y and z", global(move || schett_yz(n))),
            ("grammar equals enumeration over increasing trees", global(move || schett_dual_path(n))),
            ("parity pattern of Schett exponents", global(move || schett_parity(n))),
            ("four-variable grammar counts root-free statistics", global(move || four_var_dual_path(n))),
        ],
        Suite::Symmetry => vec![
            (
                "(ee, oe, odd) is symmetric in oe and odd",
                per(|c| symmetric(c, 1, 2, |s| [s.ee as u32, s.oe as u32, s.odd as u32])),
            ),
            (
                "even and oo + el are equidistributed",
                per(|c| equidistributed(c, |s| s.even, |s| s.oo + s.el)),
            ),
            (
                "(even, oo + el, ee) is symmetric in its first two entries",
                per(|c| symmetric(c, 0, 1, |s| [s.even as u32, (s.oo + s.el) as u32, s.ee as u32])),
            ),
            (
                "(odd*, oe*, ee*) is symmetric in odd* and ee*",
                per(|c| symmetric(c, 0, 2, |s| [s.odd_star as u32, s.oe_star as u32, s.ee_star as u32])),
            ),
            ("tilde is an involution exchanging odd and oe", per(tilde_contract)),
            ("psi is an involution exchanging odd* and ee*", per(psi_contract)),
            ("odd full-degree nodes are twice odd-degree nodes", per(twice_odd)),
            ("full-degree 2d+1 nodes are twice degree 2d+1 nodes", per(twice_refined)),
            ("theta is a bijection with the full-degree contract", per(theta_contract)),
        ],
        Suite::Hat => vec![
            ("hat transports deg_q to od_{q-1} and deg_0 to el", per(|c| each_plane(c, hat_transport))),
            ("hat is a bijection on each T_M", per(|c| bijective(c, hat))),
        ],
        Suite::Gamma => vec![
            ("gamma table of {1^2,2^2}", global(gamma_figure)),
            ("gamma coefficients are nonnegative and match active-node counts", per(gamma_all)),
            ("reduced slices are palindromic and unimodal", per(slices_shape)),
        ],
        Suite::Action => vec![
            ("rho is invertible and transports statistics", per(|c| each(c, rho_transport))),
            ("dynamic node relations and ndoler = ndord", per(|c| each(c, dynamic_relations))),
            ("Lambda_i: involution, preorder, eler and dynamic nodes", per(|c| each(c, lambda_contract))),
            ("Lambda_i and Lambda_j commute", per(|c| each(c, lambda_commute))),
            ("orbits: unique representative, size and orbit sums", per(orbit_contract)),
        ],
        Suite::Series => vec![
            ("first plane-tree series coefficients", global(series_display)),
            (
                "algebraic equations vanish and N(w=z) is x/z symmetric",
                global(move || series_algebraic(cfg.series_order)),
            ),
            (
                "series coefficients match plane-tree enumeration",
                global(move || series_vs_enumeration(n.min(cfg.series_order))),
            ),
            ("Lagrange extraction reproduces the series", global(move || series_lagrange(cfg.series_order))),
        ],
        Suite::Closed => vec![
            (
                "closed (oe, ee, oo, eo) count matches enumeration",
                global(move || closed_vs_enumeration(cfg.closed_edges, closed_count)),
            ),
            (
                "six-term sum matches enumeration",
                global(move || closed_vs_enumeration(cfg.closed_edges, six_term_count)),
            ),
            ("closed counts sum to Catalan numbers", global(move || closed_catalan(cfg.closed_edges))),
            ("odd = 0 count matches enumeration", global(move || jaco2_vs_enumeration(cfg.closed_edges))),
            ("ee = 0 count matches enumeration", global(move || fish_vs_enumeration(cfg.closed_edges))),
            ("ternary identity", global(move || ternary(cfg.ternary_max))),
        ],
        Suite::Jacobi => vec![
            ("sn, cn, dn Taylor coefficients", global(jacobi_display)),
            (
                "boundary Schett coefficients equal elliptic coefficients",
                global(move || jacobi_rows(cfg.jacobi_max_n)),
            ),
        ],
        Suite::Euler => vec![(
            "ee* = 0 and odd* = 0 trees are counted by Euler numbers",
            global(move || euler(n)),
        )],
        Suite::Conjecture => vec![
            (
                "plane and increasing tree slices are real-rooted",
                global(move || conjecture_families(cfg.max_nodes)),
            ),
            ("slices of every multiset are real-rooted", per(conjecture_multiset)),
        ],
        Suite::St => vec![("s/t coefficient relations", global(move || st(cfg.st_max_m)))],
    }
}

/// Runs the tree-based checks over every multiset with `p <= max`,
/// enumerating each `T_M` once. Returns one verdict per check: the total
/// case count, or the first failure in multiset order.
fn shared_pass(max: usize, checks: &[CorpusCheck]) -> Vec<Verdict> {
    if checks.is_empty() {
        return Vec::new();
    }
    let per: Vec<Vec<Verdict>> = Multiset::all_up_to(max)
        .into_par_iter()
        .map(|m| match Corpus::new(m, max) {
            Ok(c) => checks
                .iter()
                .map(|f| f(&c).map_err(|e| format!("M = {}: {e}", c.m)))
                .collect(),
            Err(e) => vec![Err(e.to_string()); checks.len()],
        })
        .collect();
    (0..checks.len())
        .map(|k| per.iter().map(|v| v[k].clone()).sum())
        .collect()
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    run_suites(&[suite], cfg)
}

/// Runs the given suites; outcomes follow the order of `suites`, then the
/// order of checks within each suite.
pub fn run_suites(suites: &[Suite], cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    let mut names = Vec::new();
    let mut globals = Vec::new();
    let mut shared = Vec::new();
    let mut shared_at = Vec::new();
    for &suite in suites {
        for (name, check) in checks_of(suite, cfg) {
            let at = names.len();
            names.push((suite, name));
            match check {
                Check::Global(f) => globals.push((at, f)),
                Check::PerMultiset(f) => {
                    shared.push(f);
                    shared_at.push(at);
                }
            }
        }
    }
    let (global_verdicts, shared_verdicts) = rayon::join(
        || globals.into_par_iter().map(|(at, f)| (at, f())).collect::<Vec<_>>(),
        || shared_pass(cfg.max_size, &shared),
    );
    let mut verdicts: Vec<Option<Verdict>> = vec![None; names.len()];
    for (at, v) in global_verdicts {
        verdicts[at] = Some(v);
    }
    for (at, v) in shared_at.into_iter().zip(shared_verdicts) {
        verdicts[at] = Some(v);
    }
    names
        .into_iter()
        .zip(verdicts)
        .map(|((suite, name), v)| outcome(suite, name, v.expect("every check ran")))
        .collect()
}

// ---- counting ---------------------------------------------------------

fn counting_matches(c: &Corpus) -> Verdict {
    let (m, trees) = (&c.m, &c.trees);
    ensure(count_trees(m) == BigInt::from(trees.len()), || {
        format!("formula {} but {} trees", count_trees(m), trees.len())
    })?;
    let distinct: HashSet<&WTree> = trees.iter().collect();
    ensure(distinct.len() == trees.len(), || "duplicate trees".into())?;
    for t in trees {
        let got = t.validate().map_err(|e| format!("{t}: {e}"))?;
        ensure(&got == m, || format!("{t} is a tree on {got}"))?;
    }
    let texts: Vec<String> = trees.iter().map(|t| t.to_string()).collect();
    ensure(texts.windows(2).all(|w| w[0] < w[1]), || "output not sorted".into())?;
    Ok(1)
}

fn figure_count() -> Verdict {
    let m: Multiset = "1:2,2:2".parse().map_err(|e: crate::Error| e.to_string())?;
    let n = enumerate_trees_bounded(&m, 4).map_err(|e| e.to_string())?.len();
    ensure(count_trees(&m) == BigInt::from(18) && n == 18, || {
        format!("formula {}, enumeration {n}", count_trees(&m))
    })?;
    Ok(1)
}

fn set_and_uniform_counts(n: usize) -> Verdict {
    for k in 0..=n {
        let s = enumerate_trees_bounded(&Multiset::set(k), n).map_err(|e| e.to_string())?;
        ensure(BigInt::from(s.len()) == factorial(k as u64), || format!("[{k}]: {}", s.len()))?;
    }
    for k in 0..=n.max(10) {
        let u = count_trees(&Multiset::uniform(k));
        ensure(u == catalan(k as u64), || format!("{{1^{k}}}: {u}"))?;
        if k <= n {
            let e = enumerate_trees_bounded(&Multiset::uniform(k), n).map_err(|e| e.to_string())?;
            ensure(BigInt::from(e.len()) == u, || format!("{{1^{k}}} enumeration {}", e.len()))?;
        }
    }
    Ok(2 * n + 2)
}

fn stat_identities(t: &WTree, s: &StatVector) -> std::result::Result<(), String> {
    let nodes = t.size();
    let p = nodes - 1;
    ensure(s.ee + s.oe + s.odd == nodes, || "ee + oe + odd != nodes".into())?;
    ensure((nodes - s.ee) % 2 == 0, || "nodes and ee differ in parity".into())?;
    let odd_sum: usize = s.deg.iter().filter(|(q, _)| *q % 2 == 1).map(|(_, c)| c).sum();
    ensure(s.odd == odd_sum, || "odd != sum of odd-degree counts".into())?;
    let oe_sum: usize = s.od.iter().filter(|(q, _)| *q % 2 == 0).map(|(_, c)| c).sum();
    ensure(s.oe == oe_sum, || "oe != sum of even od_q".into())?;
    ensure(s.oe_star == s.oe, || "oe* != oe".into())?;
    ensure(s.act == s.eact + s.oact, || "act != eact + oact".into())?;
    let edges: usize = s.deg.iter().map(|(q, c)| q * c).sum();
    ensure(edges == p, || "degrees do not sum to p".into())?;
    let root_odd = (t.degree() % 2 == 1) as usize;
    ensure(s.oddf == s.oe + s.ee_star + root_odd, || "oddf decomposition".into())
}

// ---- schett -----------------------------------------------------------

const SCHETT_DISPLAY: [&str; 5] = [
    "x",
    "yz",
    "xy^2+xz^2",
    "y^3z+yz^3+4x^2yz",
    "xy^4+14xy^2z^2+xz^4+4x^3y^2+4x^3z^2",
];

fn schett_display() -> Verdict {
    for (k, (p, want)) in schett_polys(4).iter().zip(SCHETT_DISPLAY).enumerate() {
        let got = format_schett(p);
        ensure(got == want, || format!("S_{k} = {got}, expected {want}"))?;
    }
    Ok(5)
}

fn schett_values(n: usize) -> Verdict {
    let one = BigInt::one();
    for (k, p) in schett_polys(n).iter().enumerate() {
        let v = p.eval(&[one.clone(), one.clone(), one.clone()]);
        ensure(v == factorial(k as u64), || format!("S_{k}(1,1,1) = {v}"))?;
    }
    Ok(n + 1)
}

fn schett_yz(n: usize) -> Verdict {
    for (k, p) in schett_polys(n).iter().enumerate() {
        ensure(p == &p.swap_vars(1, 2), || format!("S_{k} not symmetric"))?;
    }
    Ok(n + 1)
}

fn schett_dual_path(n: usize) -> Verdict {
    let polys = schett_polys(n);
    for (k, p) in polys.iter().enumerate() {
        let e = multiset_schett(&Multiset::set(k), n).map_err(|e| e.to_string())?;
        ensure(&e == p, || format!("n = {k}: grammar {p}, trees {e}"))?;
    }
    Ok(n + 1)
}

fn schett_parity(n: usize) -> Verdict {
    for (k, p) in schett_polys(n).iter().enumerate() {
        for (e, _) in p.terms() {
            let ok = if k % 2 == 0 {
                e[0] % 2 == 1 && e[1] % 2 == 0 && e[2] % 2 == 0
            } else {
                e[0] % 2 == 0 && e[1] % 2 == 1 && e[2] % 2 == 1
            };
            ensure(ok, || format!("S_{k} has exponents {e:?}"))?;
        }
    }
    Ok(n + 1)
}

fn four_var_dual_path(n: usize) -> Verdict {
    let ctx = wxyz();
    for k in 0..=n {
        let trees = enumerate_trees_bounded(&Multiset::set(k), n).map_err(|e| e.to_string())?;
        let mut expect = MPoly::zero(&ctx);
        for t in &trees {
            let s = stats(t);
            expect.add_term(&[1, s.ee_star as u32, s.oe_star as u32, s.odd_star as u32], BigInt::one());
        }
        let got = four_var_poly(k);
        ensure(got == expect, || format!("n = {k}: grammar {got}, trees {expect}"))?;
    }
    Ok(n + 1)
}

// ---- symmetry ---------------------------------------------------------

fn same_multiset(trees: &[WTree], images: &[WTree]) -> std::result::Result<(), String> {
    let a: HashSet<&WTree> = trees.iter().collect();
    let b: HashSet<&WTree> = images.iter().collect();
    ensure(b.len() == images.len(), || "two trees share an image".into())?;
    ensure(a == b, || "images leave T_M".into())
}

fn tilde_contract(c: &Corpus) -> Verdict {
    let images: Vec<WTree> = c.trees.iter().map(tilde).collect();
    for ((t, a), img) in c.trees.iter().zip(&c.stats).zip(&images) {
        ensure(&tilde(img) == t, || format!("tilde(tilde({t})) = {}", tilde(img)))?;
        let b = stats(img);
        ensure((a.odd, a.oe, a.ee) == (b.oe, b.odd, b.ee), || {
            format!("{t} -> {img}: (odd, oe, ee) {:?} vs {:?}", (a.odd, a.oe, a.ee), (b.odd, b.oe, b.ee))
        })?;
    }
    same_multiset(&c.trees, &images)?;
    Ok(c.trees.len())
}

fn psi_contract(c: &Corpus) -> Verdict {
    let images: Vec<WTree> = c.trees.iter().map(psi).collect();
    for ((t, a), img) in c.trees.iter().zip(&c.stats).zip(&images) {
        ensure(&psi(img) == t, || format!("psi(psi({t})) != {t}"))?;
        let b = stats(img);
        ensure(
            (a.odd_star, a.oe_star, a.ee_star) == (b.ee_star, b.oe_star, b.odd_star),
            || format!("{t} -> {img}: starred statistics not exchanged"),
        )?;
    }
    same_multiset(&c.trees, &images)?;
    Ok(c.trees.len())
}

fn twice_odd(c: &Corpus) -> Verdict {
    let f: usize = c.stats.iter().map(|s| s.oddf).sum();
    let o: usize = c.stats.iter().map(|s| s.odd).sum();
    ensure(f == 2 * o, || format!("oddf total {f}, odd total {o}"))?;
    Ok(c.trees.len())
}

fn twice_refined(c: &Corpus) -> Verdict {
    let mut full: BTreeMap<usize, usize> = BTreeMap::new();
    let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
    for s in &c.stats {
        for (&q, &k) in &s.fdeg {
            *full.entry(q).or_insert(0) += k;
        }
        for (&q, &k) in &s.deg {
            *deg.entry(q).or_insert(0) += k;
        }
    }
    for q in (1..=c.m.size() + 1).step_by(2) {
        let (a, b) = (full.get(&q).copied().unwrap_or(0), deg.get(&q).copied().unwrap_or(0));
        ensure(a == 2 * b, || format!("full-degree {q}: {a}, degree {q}: {b}"))?;
    }
    Ok(c.trees.len())
}

fn theta_contract(c: &Corpus) -> Verdict {
    let images: Vec<WTree> = c.trees.iter().map(theta).collect();
    for ((t, a), img) in c.trees.iter().zip(&c.stats).zip(&images) {
        let b = stats(img);
        for d in 0..=t.size() / 2 {
            let q = 2 * d + 1;
            let rhs = b.ed_star(2 * d) + (img.degree() == q) as usize;
            ensure(a.deg(q) == rhs, || format!("{t} -> {img}: d = {d}"))?;
        }
    }
    same_multiset(&c.trees, &images)?;
    Ok(c.trees.len())
}

// ---- hat --------------------------------------------------------------

fn hat_transport(t: &WTree, s: &StatVector) -> std::result::Result<(), String> {
    let img = hat(t);
    let h = stats(&img);
    ensure(s.deg(0) == h.el, || format!("deg_0 = {}, el(hat) = {}", s.deg(0), h.el))?;
    for q in 1..=t.size() {
        ensure(s.deg(q) == h.od(q - 1), || {
            format!("deg_{q} = {}, od_{}(hat) = {}", s.deg(q), q - 1, h.od(q - 1))
        })?;
    }
    Ok(())
}

fn bijective(c: &Corpus, f: fn(&WTree) -> WTree) -> Verdict {
    let images: Vec<WTree> = c.trees.iter().map(f).collect();
    same_multiset(&c.trees, &images)?;
    Ok(c.trees.len())
}

// ---- gamma ------------------------------------------------------------

fn gamma_figure() -> Verdict {
    let m: Multiset = "1:2,2:2".parse().map_err(|e: crate::Error| e.to_string())?;
    let r = reduced_schett(&m, 4).map_err(|e| e.to_string())?;
    let expected = crate::poly::parse_mpoly(&xyz(), "3xy+3xz+y^2+10yz+z^2").unwrap();
    ensure(r == expected, || format!("reduced polynomial {r}"))?;
    let g = gamma_expand(&r, 4).map_err(|e| e.to_string())?;
    let want: BTreeMap<(u32, u32), BigInt> = [((0, 0), 1), ((0, 1), 8), ((1, 0), 3)]
        .into_iter()
        .map(|(k, v)| (k, BigInt::from(v)))
        .collect();
    ensure(g.entries == want, || format!("table {:?}", g.entries))?;
    Ok(1)
}

fn gamma_all(c: &Corpus) -> Verdict {
    let r = c.reduced();
    let g = gamma_expand(&r, c.m.size()).map_err(|e| e.to_string())?;
    ensure(g.is_nonnegative(), || format!("negative entry in {:?}", g.entries))?;
    ensure(g.expand() == r, || "expansion does not rebuild the polynomial".into())?;
    let a = gamma_by_action_of(c.m.size(), c.bstats()).map_err(|e| e.to_string())?;
    ensure(a == g, || format!("expansion {:?}, action {:?}", g.entries, a.entries))?;
    Ok(c.trees.len())
}

/// Coefficients of `S^_{M,i}(y, 1)` padded to the slice degree.
fn padded_slice(r: &IntPoly, i: u32, d: usize) -> Vec<BigInt> {
    let s = reduced_slice(r, i);
    (0..=d).map(|k| s.coeff(k)).collect()
}

fn slices_shape(c: &Corpus) -> Verdict {
    let r = c.reduced();
    for i in r.slices(0).keys() {
        let d = c.m.size() / 2 - *i as usize;
        let v = padded_slice(&r, *i, d);
        ensure(v.iter().eq(v.iter().rev()), || format!("slice {i} not palindromic"))?;
        ensure(UPoly::new(v.clone()).is_unimodal(), || format!("slice {i} not unimodal"))?;
    }
    Ok(c.trees.len())
}

// ---- action -----------------------------------------------------------

fn rho_transport(t: &WTree, s: &StatVector, b: &WBTree, bs: &BStatVector) -> std::result::Result<(), String> {
    ensure(rho_inv(b).as_ref() == Ok(t), || format!("rho_inv(rho) differs: {b}"))?;
    ensure(bs.rdeg == s.deg, || "rdeg != deg".into())?;
    ensure(bs.rol == s.od, || "rol != od".into())?;
    ensure(
        (bs.ell, bs.ord, bs.oler, bs.eler) == (s.el, s.odd, s.oe, s.ee),
        || "level/degree parity counts differ".into(),
    )?;
    ensure((bs.act, bs.eact, bs.oact) == (s.act, s.eact, s.oact), || "active counts differ".into())
}

fn dynamic_relations(t: &WTree, _: &StatVector, _: &WBTree, s: &BStatVector) -> std::result::Result<(), String> {
    ensure(s.dme == 2 * s.eact && s.dmo == 2 * s.oact, || "dynamic count != 2 * active".into())?;
    ensure(s.dme + s.ndoler == s.oler, || "dme + ndoler != oler".into())?;
    ensure(s.dmo + s.ndord == s.ord, || "dmo + ndord != ord".into())?;
    ensure(s.ndoler == s.ndord, || format!("ndoler {} != ndord {}", s.ndoler, s.ndord))?;
    ensure(t.size() == s.oler + s.ord + s.eler, || "oler + ord + eler != nodes".into())
}

/// `(even?, partner)` of an active node: its right child when present,
/// otherwise its ancestor.
fn partner(b: &WBTree, infos: &[NodeInfo], u: usize) -> (bool, Option<usize>) {
    match b.right(u) {
        Some(y) => (infos[u].right_degree % 2 == 0, Some(y)),
        None => (false, infos[u].ancestor),
    }
}

fn lambda_contract(t: &WTree, _: &StatVector, b: &WBTree, bs: &BStatVector) -> std::result::Result<(), String> {
    let p = t.size() - 1;
    let order = modified_preorder(b);
    let infos = b.infos();
    for i in 1..=p {
        let l = lambda(b, i).map_err(|e| e.to_string())?;
        ensure(lambda(&l, i).ok().as_ref() == Some(b), || format!("Lambda_{i} not an involution"))?;
        ensure(modified_preorder(&l) == order, || format!("Lambda_{i} moves the preorder"))?;
        ensure(bstats(&l).eler == bs.eler, || format!("Lambda_{i} changes eler"))?;
        let u = order[i];
        if !infos[u].active {
            ensure(&l == b, || format!("Lambda_{i} moves an inactive node"))?;
            continue;
        }
        let linfos = l.infos();
        ensure(linfos[u].active, || format!("node {i} inactive after Lambda_{i}"))?;
        ensure(
            linfos[u].right_degree % 2 != infos[u].right_degree % 2,
            || format!("Lambda_{i} keeps the parity of node {i}"),
        )?;
        let (even_b, _) = partner(b, &infos, u);
        let (even_l, partner_l) = partner(&l, &linfos, u);
        ensure(even_b != even_l, || format!("Lambda_{i} keeps the dynamic kind"))?;
        let expected = b.left(u).or(infos[u].ancestor);
        ensure(partner_l == expected, || format!("Lambda_{i} pairs node {i} with the wrong node"))?;
        let fixed = [Some(u), infos[u].ancestor, b.left(u), b.right(u)];
        for v in 0..b.len() {
            if fixed.contains(&Some(v)) {
                continue;
            }
            ensure(
                infos[v].left_level % 2 == linfos[v].left_level % 2
                    && infos[v].right_degree % 2 == linfos[v].right_degree % 2,
                || format!("Lambda_{i} changes parities of an uninvolved node"),
            )?;
        }
    }
    Ok(())
}

fn lambda_commute(t: &WTree, _: &StatVector, b: &WBTree, _: &BStatVector) -> std::result::Result<(), String> {
    let p = t.size() - 1;
    let singles: Vec<WBTree> = (1..=p).map(|i| lambda(b, i).unwrap()).collect();
    for i in 1..=p {
        for j in i + 1..=p {
            let ij = lambda(&singles[i - 1], j).unwrap();
            let ji = lambda(&singles[j - 1], i).unwrap();
            ensure(ij == ji, || format!("Lambda_{i} and Lambda_{j} do not commute"))?;
        }
    }
    Ok(())
}

fn orbit_contract(c: &Corpus) -> Verdict {
    let ctx = xyz();
    let p = c.m.size();
    let y2z2 = crate::poly::parse_mpoly(&ctx, "y^2+z^2").unwrap();
    let all: HashSet<&WBTree> = c.binary().iter().collect();
    let mut covered = 0usize;
    for (rep, rs) in c.binary().iter().zip(c.bstats()) {
        if rs.eact != 0 {
            continue;
        }
        let o = orbit(rep);
        covered += o.len();
        ensure(o.len() == 1 << rs.act, || format!("orbit of {rep} has {} trees", o.len()))?;
        let members: Vec<BStatVector> = o.iter().map(bstats).collect();
        let reps = members.iter().filter(|s| s.eact == 0).count();
        ensure(reps == 1, || format!("orbit of {rep} has {reps} representatives"))?;
        ensure(o.iter().all(|b| all.contains(b)), || "orbit leaves B_M".into())?;
        let mut sum = MPoly::zero(&ctx);
        for s in &members {
            sum.add_term(&[s.eler as u32, s.oler as u32, s.ord as u32], BigInt::one());
        }
        let base = MPoly::monomial(&ctx, &[rs.eler as u32, rs.ndord as u32, rs.ndord as u32], BigInt::one());
        let want = &base * &y2z2.pow(rs.act as u32);
        ensure(sum == want, || format!("orbit sum of {rep} is {sum}"))?;
        ensure(p + 1 == 2 * (rs.ndord + rs.act) + rs.eler, || {
            format!("representative {rep} breaks p + 1 = 2(ndord + act) + eler")
        })?;
    }
    ensure(covered == c.trees.len(), || format!("orbits cover {covered} of {} trees", c.trees.len()))?;
    Ok(c.trees.len())
}

// ---- series -----------------------------------------------------------

const SERIES_DISPLAY: [&str; 4] = ["y", "wx", "wyz+x^2y", "w^2xz+wx^3+wxy^2+2xy^2z"];

fn series_display() -> Verdict {
    let n = plane_gf(3);
    for (k, want) in SERIES_DISPLAY.iter().enumerate() {
        let got = n.coeff(k).to_string();
        ensure(&got == want, || format!("t^{k}: {got}, expected {want}"))?;
    }
    Ok(4)
}

fn series_algebraic(order: usize) -> Verdict {
    let r = check_algebraic_eq(order);
    ensure(r.passed(), || format!("{r:?}"))?;
    Ok(order + 1)
}

fn series_vs_enumeration(max: usize) -> Verdict {
    let n = plane_gf(max);
    for k in 0..=max {
        let trees = enumerate_trees_bounded(&Multiset::uniform(k), max).map_err(|e| e.to_string())?;
        let mut expect = MPoly::zero(&wxyz());
        for t in &trees {
            let s = stats(t);
            expect.add_term(&[s.eo as u32, s.oe as u32, s.ee as u32, s.oo as u32], BigInt::one());
        }
        ensure(n.coeff(k) == &expect, || format!("t^{k}: series {}, trees {expect}", n.coeff(k)))?;
    }
    Ok(max + 1)
}

fn series_lagrange(order: usize) -> Verdict {
    let a = lagrange_series(order);
    let b = plane_gf(order);
    for k in 0..=order {
        ensure(a.coeff(k) == b.coeff(k), || format!("t^{k}: {} vs {}", a.coeff(k), b.coeff(k)))?;
    }
    Ok(order + 1)
}

// ---- closed forms -----------------------------------------------------

fn plane_stats(edges: usize) -> std::result::Result<Vec<StatVector>, String> {
    let trees = enumerate_trees_bounded(&Multiset::uniform(edges), edges).map_err(|e| e.to_string())?;
    Ok(trees.iter().map(stats).collect())
}

fn closed_vs_enumeration(max_edges: usize, f: fn(u32, u32, u32, u32) -> BigInt) -> Verdict {
    let results: Vec<Verdict> = (0..=max_edges)
        .into_par_iter()
        .map(|e| {
            let mut counts: HashMap<[u32; 4], u64> = HashMap::new();
            for s in plane_stats(e)? {
                *counts.entry([s.oe as u32, s.ee as u32, s.oo as u32, s.eo as u32]).or_insert(0) += 1;
            }
            let nodes = e as u32 + 1;
            let mut cases = 0;
            for i in 0..=nodes {
                for j in 0..=nodes - i {
                    for k in 0..=nodes - i - j {
                        let l = nodes - i - j - k;
                        let want = counts.get(&[i, j, k, l]).copied().unwrap_or(0);
                        let got = f(i, j, k, l);
                        ensure(got == BigInt::from(want), || {
                            format!("(i,j,k,l) = ({i},{j},{k},{l}): formula {got}, trees {want}")
                        })?;
                        cases += 1;
                    }
                }
            }
            Ok(cases)
        })
        .collect();
    results.into_iter().sum()
}

fn closed_catalan(max_edges: usize) -> Verdict {
    for e in 0..=max_edges {
        let nodes = e as u32 + 1;
        let mut total = BigInt::zero();
        for i in 0..=nodes {
            for j in 0..=nodes - i {
                for k in 0..=nodes - i - j {
                    total += closed_count(i, j, k, nodes - i - j - k);
                }
            }
        }
        ensure(total == catalan(e as u64), || format!("{e} edges: {total}"))?;
    }
    Ok(max_edges + 1)
}

fn jaco2_vs_enumeration(max_edges: usize) -> Verdict {
    let mut cases = 0;
    for e in 0..=max_edges {
        let stats = plane_stats(e)?;
        let nodes = e + 1;
        // oe = 2i, ee = 2j + 1, odd = 0
        for j in 0..=e / 2 {
            if (nodes - (2 * j + 1)) % 2 != 0 {
                continue;
            }
            let i = (nodes - 2 * j - 1) / 2;
            let want = stats
                .iter()
                .filter(|s| s.odd == 0 && s.oe == 2 * i && s.ee == 2 * j + 1)
                .count();
            let got = jaco2_count(i as u32, j as u32);
            ensure(got == BigInt::from(want), || format!("(i,j) = ({i},{j}): {got} vs {want}"))?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn fish_vs_enumeration(max_edges: usize) -> Verdict {
    let mut cases = 0;
    for e in 0..=max_edges {
        let stats = plane_stats(e)?;
        let nodes = e + 1;
        // oe = 2i + 1, odd = 2j + 1, ee = 0
        if nodes % 2 != 0 {
            continue;
        }
        for i in 0..nodes / 2 {
            let j = nodes / 2 - 1 - i;
            let want = stats
                .iter()
                .filter(|s| s.ee == 0 && s.oe == 2 * i + 1 && s.odd == 2 * j + 1)
                .count();
            let got = fish_count(i as u32, j as u32);
            ensure(got == BigInt::from(want), || format!("(i,j) = ({i},{j}): {got} vs {want}"))?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn ternary(max: u32) -> Verdict {
    for n in 1..=max {
        let c = ternary_identity(n);
        ensure(c.holds(), || format!("n = {n}: {} vs {}", c.lhs, c.rhs))?;
    }
    Ok(max as usize)
}

// ---- jacobi -----------------------------------------------------------

/// Displayed expansions, in powers of `alpha^2`. The `dn` entries carry an
/// extra overall factor `alpha^2` in the computed series.
const SN_DISPLAY: [(usize, &[i64]); 4] = [(1, &[1]), (3, &[-1, -1]), (5, &[1, 14, 1]), (7, &[-1, -135, -135, -1])];
const CN_DISPLAY: [(usize, &[i64]); 4] = [(0, &[1]), (2, &[-1]), (4, &[1, 4]), (6, &[-1, -44, -16])];
const DN_DISPLAY: [(usize, &[i64]); 3] = [(2, &[-1]), (4, &[4, 1]), (6, &[-16, -44, -1])];

fn jacobi_display() -> Verdict {
    let t = jacobi_taylor(9);
    let alpha2 = APoly::from_ints(&[0, 1]);
    for (k, c) in SN_DISPLAY {
        ensure(t.sn[k] == APoly::from_ints(c), || format!("sn u^{k}: {}", t.sn[k]))?;
    }
    for (k, c) in CN_DISPLAY {
        ensure(t.cn[k] == APoly::from_ints(c), || format!("cn u^{k}: {}", t.cn[k]))?;
    }
    ensure(t.dn[0] == APoly::from_ints(&[1]), || "dn u^0".into())?;
    for (k, c) in DN_DISPLAY {
        let want = APoly::from_ints(c).mul(&alpha2);
        ensure(t.dn[k] == want, || format!("dn u^{k}: {}", t.dn[k]))?;
    }
    Ok(SN_DISPLAY.len() + CN_DISPLAY.len() + DN_DISPLAY.len() + 1)
}

fn jacobi_rows(max_n: usize) -> Verdict {
    let rows = jacobi_schett_rows(max_n);
    for r in &rows {
        ensure(r.holds(), || format!("{r:?}"))?;
    }
    Ok(rows.len())
}

// ---- euler ------------------------------------------------------------

fn euler(n: usize) -> Verdict {
    let e = euler_numbers(n);
    for k in 0..=n {
        let trees = enumerate_trees_bounded(&Multiset::set(k), n).map_err(|e| e.to_string())?;
        let (mut a, mut b) = (0usize, 0usize);
        for t in &trees {
            let s = stats(t);
            a += (s.ee_star == 0) as usize;
            b += (s.odd_star == 0) as usize;
        }
        ensure(BigInt::from(a) == e[k] && BigInt::from(b) == e[k], || {
            format!("n = {k}: ee* = 0 count {a}, odd* = 0 count {b}, E_n = {}", e[k])
        })?;
    }
    Ok(n + 1)
}

// ---- conjecture -------------------------------------------------------

/// One slice of the real-rootedness scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceReport {
    pub family: String,
    pub multiset: String,
    pub i: u32,
    pub polynomial: String,
    pub report: RootReport,
}

fn scan_slices(family: &str, m: &Multiset, reduced: &IntPoly) -> Vec<SliceReport> {
    reduced
        .slices(0)
        .keys()
        .map(|&i| {
            let s = reduced_slice(reduced, i);
            SliceReport {
                family: family.to_string(),
                multiset: m.to_spec(),
                i,
                polynomial: s.to_string(),
                report: real_rooted::<BigRational>(&s),
            }
        })
        .collect()
}

/// Real-rootedness of every slice for plane trees (`{1^p}`) and increasing
/// trees (`[p]`) with at most `max_nodes` nodes. The polynomials come from
/// the plane-tree series and the Schett grammar, which other suites check
/// against enumeration.
pub fn conjecture_scan(max_nodes: usize) -> Vec<SliceReport> {
    let max_p = max_nodes.saturating_sub(1);
    let series = plane_gf(max_p);
    let schett = schett_polys(max_p);
    let mut out = Vec::new();
    for p in 0..=max_p {
        let plane = reduce(&plane_schett(series.coeff(p)));
        out.extend(scan_slices("plane", &Multiset::uniform(p), &plane));
        out.extend(scan_slices("increasing", &Multiset::set(p), &reduce(&schett[p])));
    }
    out
}

/// The same scan over every multiset with `p <= max_size`, by enumeration.
pub fn conjecture_scan_multisets(max_size: usize) -> crate::Result<Vec<SliceReport>> {
    let per: Vec<crate::Result<Vec<SliceReport>>> = Multiset::all_up_to(max_size)
        .par_iter()
        .map(|m| Ok(scan_slices("multiset", m, &reduced_schett(m, max_size)?)))
        .collect();
    let mut out = Vec::new();
    for r in per {
        out.extend(r?);
    }
    Ok(out)
}

fn slices_verdict(rows: &[SliceReport]) -> Verdict {
    for r in rows {
        ensure(r.report.real_rooted, || {
            format!("{} {} slice {}: {} is not real-rooted", r.family, r.multiset, r.i, r.polynomial)
        })?;
    }
    Ok(rows.len())
}

fn conjecture_families(max_nodes: usize) -> Verdict {
    slices_verdict(&conjecture_scan(max_nodes))
}

fn conjecture_multiset(c: &Corpus) -> Verdict {
    slices_verdict(&scan_slices("multiset", &c.m, &c.reduced()))
}

// ---- s/t relations ----------------------------------------------------

fn st(max_m: usize) -> Verdict {
    let mut cases = 0;
    for m in 1..=max_m {
        for r in st_relations(m) {
            ensure(r.s == r.t_sum, || format!("n = {}, (i,j) = ({},{}): s = {}, t sum = {}", r.n, r.i, r.j, r.s, r.t_sum))?;
            cases += 1;
        }
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()), Some(s));
        }
        assert_eq!(Suite::parse("nope"), None);
    }

    #[test]
    fn small_runs_pass() {
        let cfg = VerifyConfig {
            max_size: 4,
            max_nodes: 6,
            series_order: 4,
            closed_edges: 5,
            ternary_max: 5,
            jacobi_max_n: 2,
            st_max_m: 2,
        };
        for o in run_suites(&Suite::ALL, &cfg) {
            assert!(o.passed, "{o:?}");
        }
    }
}
