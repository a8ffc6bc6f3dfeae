//! JSON and text helpers shared by the subcommands.

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};
use witree::{IntPoly, StatVector};

/// Exact JSON number for an arbitrary-size integer.
pub fn num(v: &BigInt) -> Value {
    Value::Number(v.to_string().parse::<Number>().expect("integers are valid JSON numbers"))
}

/// Coefficients keyed by comma-joined exponent tuples.
pub fn poly_json(p: &IntPoly) -> Value {
    let m: Map<String, Value> = p
        .terms()
        .map(|(e, c)| {
            let key: Vec<String> = e.iter().map(u32::to_string).collect();
            (key.join(","), num(c))
        })
        .collect();
    Value::Object(m)
}

fn counts(m: &std::collections::BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = m.iter().map(|(q, c)| format!("{q}:{c}")).collect();
    format!("[{}]", parts.join(","))
}

pub fn stats_line(s: &StatVector) -> String {
    format!(
        "leaf={} el={} ee={} oe={} odd={} even={} oo={} eo={} ee*={} oe*={} odd*={} oddf={} act={} eact={} oact={} deg={} od={}",
        s.leaf, s.el, s.ee, s.oe, s.odd, s.even, s.oo, s.eo, s.ee_star, s.oe_star, s.odd_star,
        s.oddf, s.act, s.eact, s.oact, counts(&s.deg), counts(&s.od)
    )
}
