//! `witree`: enumeration, transforms and exhaustive identity checks for
//! weakly increasing trees.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage errors.

use std::fs::File;
use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use witree::binary::{format_binary, nth_node, orbit_representative, WBTree};
use witree::checks::{conjecture_scan, conjecture_scan_multisets, run_suites, SliceReport, Suite, VerifyConfig};
use witree::poly::schett::{
    format_schett, four_var_poly, gamma_by_action, gamma_expand, multiset_schett, reduce, schett_poly,
};
use witree::series::closed::{closed_count, fish_count, jaco2_count, six_term_count, ternary_identity};
use witree::series::jacobi::{jacobi_schett_rows, jacobi_taylor};
use witree::series::plane::{check_algebraic_eq, lagrange_series, plane_gf};
use witree::transforms::{apply, TreeMap};
use witree::{
    bstats, enumerate_trees_bounded, lambda, modified_preorder, orbit, parse_binary, parse_tree, rho,
    rho_inv, stats, IntPoly, Multiset, WTree,
};

mod output;

use output::{num, poly_json, stats_line};

const THREADS_ENV: &str = "WITREE_THREADS";

#[derive(Parser)]
#[command(name = "witree", version, about = "Weakly increasing trees on multisets")]
struct Cli {
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct MultisetArg {
    /// Multiset as label:count pairs, e.g. 1:2,2:2.
    #[arg(long, conflicts_with_all = ["set", "uniform"])]
    multiset: Option<String>,
    /// The set [n].
    #[arg(long, conflicts_with = "uniform")]
    set: Option<usize>,
    /// The multiset {1^n}.
    #[arg(long)]
    uniform: Option<usize>,
    /// Refuse multisets larger than this.
    #[arg(long, default_value_t = 8)]
    max_size: usize,
}

impl MultisetArg {
    fn resolve(&self) -> Result<Multiset, String> {
        let m = match (&self.multiset, self.set, self.uniform) {
            (Some(s), _, _) => s.parse().map_err(|e: witree::Error| e.to_string())?,
            (_, Some(n), _) => Multiset::set(n),
            (_, _, Some(n)) => Multiset::uniform(n),
            _ => return Err("one of --multiset, --set, --uniform is required".into()),
        };
        if m.size() > self.max_size {
            return Err(format!(
                "multiset has {} elements; pass --max-size {} to allow it",
                m.size(),
                m.size()
            ));
        }
        Ok(m)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List every weakly increasing tree on a multiset.
    Enumerate {
        #[command(flatten)]
        m: MultisetArg,
        /// Append the statistic vector of each tree.
        #[arg(long)]
        stats: bool,
        /// Print the binary encoding instead of the plane tree.
        #[arg(long)]
        binary: bool,
    },
    /// Apply a tree map; reads one tree per line from stdin without --tree.
    Transform {
        #[arg(long, value_parser = ["hat", "tilde", "psi", "theta", "rho", "rho-inv"])]
        map: String,
        #[arg(long)]
        tree: Option<String>,
    },
    /// Schett polynomials from the grammar, or S_M by enumeration.
    Schett {
        #[arg(long)]
        n: Option<usize>,
        /// Print S_0 up to S_n.
        #[arg(long)]
        all: bool,
        /// Use the grammar w -> wy, x -> yz, y -> xz, z -> xy starting at w.
        #[arg(long)]
        four_var: bool,
        /// Halve exponents.
        #[arg(long)]
        reduced: bool,
        #[command(flatten)]
        m: MultisetArg,
    },
    /// Partial gamma-expansion of the reduced multiset Schett polynomial.
    Gamma {
        #[command(flatten)]
        m: MultisetArg,
    },
    /// Run verification suites.
    Verify {
        /// Suite name or `all`; repeatable.
        #[arg(long, default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        #[arg(long, default_value_t = 10)]
        max_nodes: usize,
        #[arg(long, default_value_t = 8)]
        series_order: usize,
        #[arg(long, default_value_t = 9)]
        closed_edges: usize,
    },
    /// Plane-tree generating function N.
    Series {
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// `alg` checks the algebraic equations, `lagrange` compares with
        /// the extraction.
        #[arg(long, value_parser = ["alg", "lagrange"])]
        check: Option<String>,
        /// Compute coefficients by Lagrange extraction.
        #[arg(long)]
        lagrange: bool,
    },
    /// Closed-form plane-tree counts.
    ClosedForm {
        /// i,j,k,l for (oe, ee, oo, eo).
        #[arg(long, value_delimiter = ',')]
        stats: Option<Vec<u32>>,
        /// i,j for odd = 0, oe = 2i, ee = 2j+1.
        #[arg(long, value_delimiter = ',')]
        jaco2: Option<Vec<u32>>,
        /// i,j for ee = 0, oe = 2i+1, odd = 2j+1.
        #[arg(long, value_delimiter = ',')]
        fish: Option<Vec<u32>>,
        /// Check the ternary identity for 1..=n.
        #[arg(long)]
        ternary: Option<u32>,
    },
    /// Taylor coefficients of sn, cn, dn in powers of alpha^2.
    Jacobi {
        #[arg(long, default_value_t = 9)]
        order: usize,
        /// Compare with Schett coefficients for n up to this value.
        #[arg(long)]
        rows: Option<usize>,
    },
    /// Orbit of a binary tree under the branch-swapping action.
    Orbit {
        /// Binary tree, or a plane tree to be encoded by rho.
        #[arg(long)]
        tree: String,
    },
    /// Modified preorder of a binary tree.
    Preorder {
        #[arg(long)]
        tree: String,
        /// Also print Lambda_i of the tree.
        #[arg(long)]
        lambda: Option<usize>,
    },
    /// Real-rootedness scan of reduced Schett slices.
    Conjecture {
        #[arg(long, default_value_t = 10)]
        max_nodes: usize,
        /// Also scan every multiset with at most this many elements.
        #[arg(long)]
        multisets: Option<usize>,
    },
}

/// Report text plus whether every check passed.
struct Report {
    text: String,
    passed: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Self { text, passed: true }
    }
}

type Outcome = Result<Report, String>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    if let Ok(v) = std::env::var(THREADS_ENV) {
        match v.parse::<usize>() {
            Ok(n) => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            Err(_) => {
                eprintln!("error: {THREADS_ENV} must be a number");
                return ExitCode::from(2);
            }
        }
    }
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(report.text.as_bytes())),
        None => io::stdout().lock().write_all(report.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Enumerate { m, stats, binary } => enumerate(&m.resolve()?, m.max_size, *stats, *binary, json),
        Command::Transform { map, tree } => transform(map, tree.as_deref(), json),
        Command::Schett { n, all, four_var, reduced, m } => schett(*n, *all, *four_var, *reduced, m, json),
        Command::Gamma { m } => gamma(&m.resolve()?, m.max_size, json),
        Command::Verify { suite, max_size, max_nodes, series_order, closed_edges } => {
            let cfg = VerifyConfig {
                max_size: *max_size,
                max_nodes: *max_nodes,
                series_order: *series_order,
                closed_edges: *closed_edges,
                ..VerifyConfig::default()
            };
            verify(suite, &cfg, json)
        }
        Command::Series { order, check, lagrange } => series(*order, check.as_deref(), *lagrange, json),
        Command::ClosedForm { stats, jaco2, fish, ternary } => {
            closed_form(stats.as_deref(), jaco2.as_deref(), fish.as_deref(), *ternary, json)
        }
        Command::Jacobi { order, rows } => jacobi(*order, *rows, json),
        Command::Orbit { tree } => orbit_cmd(tree, json),
        Command::Preorder { tree, lambda } => preorder(tree, *lambda, json),
        Command::Conjecture { max_nodes, multisets } => conjecture(*max_nodes, *multisets, json),
    }
}

fn render(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn enumerate(m: &Multiset, bound: usize, with_stats: bool, binary: bool, json: bool) -> Outcome {
    let trees = enumerate_trees_bounded(m, bound).map_err(|e| e.to_string())?;
    let show = |t: &WTree| if binary { format_binary(&rho(t)) } else { t.to_string() };
    if json {
        let items: Vec<Value> = trees
            .iter()
            .map(|t| {
                let mut o = Map::new();
                o.insert("tree".into(), Value::String(show(t)));
                if with_stats {
                    o.insert("stats".into(), serde_json::to_value(stats(t)).unwrap());
                }
                Value::Object(o)
            })
            .collect();
        return Ok(Report::ok(render(json!({
            "multiset": m.to_spec(),
            "count": trees.len(),
            "trees": items,
        }))));
    }
    Ok(Report::ok(lines(trees.iter().map(|t| {
        if with_stats {
            format!("{}\t{}", show(t), stats_line(&stats(t)))
        } else {
            show(t)
        }
    }))))
}

fn transform_one(map: &str, input: &str) -> Result<String, String> {
    let err = |e: witree::Error| format!("{input}: {e}");
    match map {
        "rho" => Ok(format_binary(&rho(&parse_tree(input).map_err(err)?))),
        "rho-inv" => Ok(rho_inv(&parse_binary(input).map_err(err)?).map_err(err)?.to_string()),
        name => {
            let f = TreeMap::parse(name).ok_or_else(|| format!("unknown map {name}"))?;
            Ok(apply(f, &parse_tree(input).map_err(err)?).to_string())
        }
    }
}

fn transform(map: &str, tree: Option<&str>, json: bool) -> Outcome {
    let inputs: Vec<String> = match tree {
        Some(t) => vec![t.to_string()],
        None => io::stdin()
            .lock()
            .lines()
            .collect::<io::Result<Vec<_>>>()
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|l| l.trim().to_string())
            .filter(|l| !l.is_empty())
            .collect(),
    };
    let outputs = inputs
        .iter()
        .map(|t| transform_one(map, t))
        .collect::<Result<Vec<_>, _>>()?;
    if json {
        let items: Vec<Value> = inputs
            .iter()
            .zip(&outputs)
            .map(|(i, o)| json!({ "input": i, "output": o }))
            .collect();
        return Ok(Report::ok(render(json!({ "map": map, "results": items }))));
    }
    Ok(Report::ok(lines(outputs)))
}

fn schett(n: Option<usize>, all: bool, four_var: bool, reduced: bool, m: &MultisetArg, json: bool) -> Outcome {
    let show = |p: &IntPoly| if four_var { p.to_string() } else { format_schett(p) };
    let entries: Vec<(String, IntPoly)> = match n {
        Some(n) => {
            let range = if all { 0..=n } else { n..=n };
            range
                .map(|k| {
                    let p = if four_var { four_var_poly(k) } else { schett_poly(k) };
                    let p = if reduced && !four_var { reduce(&p) } else { p };
                    (k.to_string(), p)
                })
                .collect()
        }
        None => {
            let ms = m.resolve()?;
            let p = multiset_schett(&ms, m.max_size).map_err(|e| e.to_string())?;
            let p = if reduced { reduce(&p) } else { p };
            vec![(ms.to_spec(), p)]
        }
    };
    if json {
        let items: Vec<Value> = entries
            .iter()
            .map(|(k, p)| json!({ "index": k, "polynomial": show(p), "coefficients": poly_json(p) }))
            .collect();
        return Ok(Report::ok(render(Value::Array(items))));
    }
    let single = entries.len() == 1;
    Ok(Report::ok(lines(entries.iter().map(|(k, p)| {
        if single {
            show(p)
        } else {
            format!("S_{k} = {}", show(p))
        }
    }))))
}

fn gamma(m: &Multiset, bound: usize, json: bool) -> Outcome {
    let r = witree::poly::schett::reduced_schett(m, bound).map_err(|e| e.to_string())?;
    let table = gamma_expand(&r, m.size()).map_err(|e| e.to_string())?;
    let action = gamma_by_action(m, bound).map_err(|e| e.to_string())?;
    let agree = action == table;
    let passed = agree && table.is_nonnegative();
    if json {
        let entries: Map<String, Value> =
            table.entries.iter().map(|((i, j), g)| (format!("{i},{j}"), num(g))).collect();
        return Ok(Report {
            text: render(json!({
                "multiset": m.to_spec(),
                "p": m.size(),
                "reduced": format_schett(&r),
                "gamma": entries,
                "nonnegative": table.is_nonnegative(),
                "matches_action": agree,
            })),
            passed,
        });
    }
    let mut out = vec![
        format!("multiset {}  p = {}", m.to_spec(), m.size()),
        format!("reduced  {}", format_schett(&r)),
        "i  j  gamma".to_string(),
    ];
    out.extend(table.entries.iter().map(|((i, j), g)| format!("{i}  {j}  {g}")));
    out.push(format!("nonnegative: {}", table.is_nonnegative()));
    out.push(format!("matches active-node counts: {agree}"));
    Ok(Report { text: lines(out), passed })
}

fn verify(names: &[String], cfg: &VerifyConfig, json: bool) -> Outcome {
    let mut suites = Vec::new();
    for n in names {
        if n == "all" {
            suites.extend(Suite::ALL);
        } else {
            suites.push(Suite::parse(n).ok_or_else(|| {
                let known: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite `{n}`; expected all or one of {}", known.join(", "))
            })?);
        }
    }
    suites.sort();
    suites.dedup();
    let results = run_suites(&suites, cfg);
    let passed = results.iter().all(|o| o.passed);
    if json {
        return Ok(Report {
            text: render(json!({ "config": cfg, "passed": passed, "checks": results })),
            passed,
        });
    }
    let width = results.iter().map(|o| o.name.len()).max().unwrap_or(0);
    let mut out = Vec::new();
    for o in &results {
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        out.push(format!("{verdict}  {:<10}  {:<width$}  {} cases", o.suite.name(), o.name, o.cases));
        if let Some(c) = &o.counterexample {
            out.push(format!("      counterexample: {c}"));
        }
    }
    let failed = results.iter().filter(|o| !o.passed).count();
    out.push(format!("{} checks, {failed} failed", results.len()));
    Ok(Report { text: lines(out), passed })
}

fn series(order: usize, check: Option<&str>, lagrange: bool, json: bool) -> Outcome {
    let n = if lagrange { lagrange_series(order) } else { plane_gf(order) };
    let mut passed = true;
    let mut check_value = Value::Null;
    let mut check_lines = Vec::new();
    match check {
        Some("alg") => {
            let r = check_algebraic_eq(order);
            passed = r.passed();
            check_value = serde_json::to_value(&r).unwrap();
            let show = |v: Option<usize>| v.map_or("zero".to_string(), |k| format!("nonzero at t^{k}"));
            check_lines.push(format!("alg:N residual: {}", show(r.alg_n_first_nonzero)));
            check_lines.push(format!("alg:Nw=z residual: {}", show(r.alg_n_w_eq_z_first_nonzero)));
            check_lines.push(format!("x/z asymmetry at w = z: {}", show(r.xz_asymmetry)));
        }
        Some(_) => {
            let other = if lagrange { plane_gf(order) } else { lagrange_series(order) };
            passed = other == n;
            check_value = json!({ "lagrange_matches_fixpoint": passed });
            check_lines.push(format!("Lagrange extraction matches fixpoint: {passed}"));
        }
        None => {}
    }
    if json {
        let coeffs: Map<String, Value> =
            (0..=order).map(|k| (k.to_string(), poly_json(n.coeff(k)))).collect();
        return Ok(Report {
            text: render(json!({
                "order": order,
                "variables": ["w", "x", "y", "z"],
                "coefficients": coeffs,
                "check": check_value,
            })),
            passed,
        });
    }
    let mut out: Vec<String> = (0..=order).map(|k| format!("t^{k}: {}", n.coeff(k))).collect();
    out.extend(check_lines);
    Ok(Report { text: lines(out), passed })
}

fn closed_form(
    stats: Option<&[u32]>,
    jaco2: Option<&[u32]>,
    fish: Option<&[u32]>,
    ternary: Option<u32>,
    json: bool,
) -> Outcome {
    let mut out = Map::new();
    let mut text = Vec::new();
    let mut passed = true;
    let arity = |v: Option<&[u32]>, n: usize, flag: &str| match v {
        Some(v) if v.len() != n => Err(format!("--{flag} takes {n} comma-separated values")),
        _ => Ok(()),
    };
    arity(stats, 4, "stats")?;
    arity(jaco2, 2, "jaco2")?;
    arity(fish, 2, "fish")?;
    if let Some(&[i, j, k, l]) = stats {
        let (c, s) = (closed_count(i, j, k, l), six_term_count(i, j, k, l));
        passed &= c == s;
        text.push(format!("(oe,ee,oo,eo) = ({i},{j},{k},{l}): closed {c}, six-term {s}"));
        out.insert(format!("{i},{j},{k},{l}"), json!({ "closed": num(&c), "six_term": num(&s) }));
    }
    if let Some(&[i, j]) = jaco2 {
        let c = jaco2_count(i, j);
        text.push(format!("odd = 0, oe = {}, ee = {}: {c}", 2 * i, 2 * j + 1));
        out.insert("jaco2".into(), json!({ "i": i, "j": j, "count": num(&c) }));
    }
    if let Some(&[i, j]) = fish {
        let c = fish_count(i, j);
        text.push(format!("ee = 0, oe = {}, odd = {}: {c}", 2 * i + 1, 2 * j + 1));
        out.insert("fish".into(), json!({ "i": i, "j": j, "count": num(&c) }));
    }
    if let Some(n) = ternary {
        let mut rows = Vec::new();
        for k in 1..=n {
            let c = ternary_identity(k);
            passed &= c.holds();
            text.push(format!("ternary n = {k}: {} = {} {}", c.lhs, c.rhs, if c.holds() { "ok" } else { "FAIL" }));
            rows.push(json!({ "n": k, "lhs": num(&c.lhs), "rhs": num(&c.rhs), "holds": c.holds() }));
        }
        out.insert("ternary".into(), Value::Array(rows));
    }
    if text.is_empty() {
        return Err("pass at least one of --stats, --jaco2, --fish, --ternary".into());
    }
    let text = if json { render(Value::Object(out)) } else { lines(text) };
    Ok(Report { text, passed })
}

fn jacobi(order: usize, rows: Option<usize>, json: bool) -> Outcome {
    let t = jacobi_taylor(order);
    let tables = [("sn", &t.sn), ("cn", &t.cn), ("dn", &t.dn)];
    let mut passed = true;
    let row_list = rows.map(jacobi_schett_rows).unwrap_or_default();
    for r in &row_list {
        passed &= r.holds();
    }
    if json {
        let mut obj = Map::new();
        for (name, coeffs) in tables {
            let m: Map<String, Value> = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    let by_a: Map<String, Value> =
                        c.coeffs().iter().enumerate().map(|(a, v)| (a.to_string(), num(v))).collect();
                    (k.to_string(), Value::Object(by_a))
                })
                .collect();
            obj.insert(name.into(), Value::Object(m));
        }
        obj.insert("rows".into(), serde_json::to_value(&row_list).unwrap());
        return Ok(Report { text: render(Value::Object(obj)), passed });
    }
    let mut out = vec!["coefficients of u^k/k! as polynomials in a = alpha^2".to_string()];
    for (name, coeffs) in tables {
        for (k, c) in coeffs.iter().enumerate() {
            out.push(format!("{name} u^{k}: {}", c.to_string().replace('t', "a")));
        }
    }
    for r in &row_list {
        out.push(format!(
            "{} {} u^{} a^{}: taylor {}, schett {} and {}",
            if r.holds() { "ok  " } else { "FAIL" },
            r.function,
            r.power,
            r.alpha2,
            r.taylor,
            r.s_left,
            r.s_right
        ));
    }
    Ok(Report { text: lines(out), passed })
}

fn binary_arg(text: &str) -> Result<WBTree, String> {
    if text.contains('[') || !text.contains('(') {
        parse_binary(text).map_err(|e| e.to_string())
    } else {
        parse_tree(text).map(|t| rho(&t)).map_err(|e| e.to_string())
    }
}

fn orbit_cmd(tree: &str, json: bool) -> Outcome {
    let b = binary_arg(tree)?;
    b.validate().map_err(|e| e.to_string())?;
    let members = orbit(&b);
    let rep = orbit_representative(&b);
    let s = bstats(&rep);
    if json {
        let items: Vec<Value> = members
            .iter()
            .map(|m| {
                let s = bstats(m);
                json!({ "tree": format_binary(m), "eler": s.eler, "oler": s.oler, "ord": s.ord, "eact": s.eact })
            })
            .collect();
        return Ok(Report::ok(render(json!({
            "representative": format_binary(&rep),
            "size": members.len(),
            "act": s.act,
            "members": items,
        }))));
    }
    let mut out = vec![format!("representative {}  act = {}  size = {}", format_binary(&rep), s.act, members.len())];
    out.extend(members.iter().map(|m| {
        let s = bstats(m);
        format!("{}\teler={} oler={} ord={}", format_binary(m), s.eler, s.oler, s.ord)
    }));
    Ok(Report::ok(lines(out)))
}

fn preorder(tree: &str, lam: Option<usize>, json: bool) -> Outcome {
    let b = binary_arg(tree)?;
    b.validate().map_err(|e| e.to_string())?;
    let order = modified_preorder(&b);
    let infos = b.infos();
    let swapped = match lam {
        Some(i) => {
            nth_node(&b, i).map_err(|e| e.to_string())?;
            Some(lambda(&b, i).map_err(|e| e.to_string())?)
        }
        None => None,
    };
    if json {
        let nodes: Vec<Value> = order
            .iter()
            .enumerate()
            .map(|(k, &u)| json!({ "index": k, "label": b.label(u), "active": infos[u].active }))
            .collect();
        return Ok(Report::ok(render(json!({
            "tree": format_binary(&b),
            "order": nodes,
            "lambda": swapped.as_ref().map(format_binary),
        }))));
    }
    let mut out: Vec<String> = order
        .iter()
        .enumerate()
        .map(|(k, &u)| format!("{k}\t{}{}", b.label(u), if infos[u].active { "\tactive" } else { "" }))
        .collect();
    if let (Some(i), Some(l)) = (lam, &swapped) {
        out.push(format!("Lambda_{i}: {}", format_binary(l)));
    }
    Ok(Report::ok(lines(out)))
}

fn conjecture(max_nodes: usize, multisets: Option<usize>, json: bool) -> Outcome {
    let mut rows = conjecture_scan(max_nodes);
    if let Some(k) = multisets {
        rows.extend(conjecture_scan_multisets(k).map_err(|e| e.to_string())?);
    }
    let failed = rows.iter().filter(|r| !r.report.real_rooted).count();
    let is_constant = |r: &SliceReport| r.report.degree == Some(0);
    let constant = rows.iter().filter(|r| is_constant(r)).count();
    let passed = failed == 0;
    if json {
        return Ok(Report {
            text: render(json!({ "slices": rows, "failed": failed, "constant": constant, "passed": passed })),
            passed,
        });
    }
    let mut out: Vec<String> = rows
        .iter()
        .map(|r| {
            format!(
                "{} {} {} i={} {}  real roots {}/{}{}",
                if r.report.real_rooted { "ok  " } else { "FAIL" },
                r.family,
                r.multiset,
                r.i,
                r.polynomial,
                r.report.distinct_real_roots,
                r.report.squarefree_degree,
                if is_constant(r) { " (constant)" } else { "" },
            )
        })
        .collect();
    out.push(format!("{} slices, {failed} not real-rooted, {constant} constant", rows.len()));
    Ok(Report { text: lines(out), passed })
}
