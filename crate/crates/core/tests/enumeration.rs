mod common;

use num_bigint::BigInt;
use witree::{count_trees, enumerate_trees, for_each_tree, parse_tree, Multiset};

fn lib_texts(mult: &[u32]) -> Vec<String> {
    let m = Multiset::new(mult.to_vec()).unwrap();
    enumerate_trees(&m).unwrap().iter().map(|t| t.to_string()).collect()
}

#[test]
fn matches_brute_force_up_to_six() {
    for mult in common::multisets(6) {
        let oracle: Vec<String> = common::trees(&mult).iter().map(|t| t.text()).collect();
        assert_eq!(lib_texts(&mult), oracle, "M = {}", common::spec(&mult));
    }
}

#[test]
fn figure_multiset_has_eighteen_trees() {
    let m: Multiset = "1:2,2:2".parse().unwrap();
    assert_eq!(count_trees(&m), BigInt::from(18));
    assert_eq!(enumerate_trees(&m).unwrap().len(), 18);
    assert_eq!(common::trees(&[2, 2]).len(), 18);
}

#[test]
fn sets_and_uniform_multisets() {
    for n in 0..=7u64 {
        let set = Multiset::set(n as usize);
        assert_eq!(count_trees(&set), BigInt::from(common::factorial(n)));
        let uni = Multiset::uniform(n as usize);
        assert_eq!(count_trees(&uni), BigInt::from(common::catalan(n)));
    }
    assert_eq!(count_trees(&Multiset::set(12)), BigInt::from(479001600u64));
}

#[test]
fn streaming_agrees_with_collected() {
    let m: Multiset = "1:2,2:1,3:2".parse().unwrap();
    let mut streamed: Vec<String> = Vec::new();
    for_each_tree(&m, 8, |t| streamed.push(t.to_string())).unwrap();
    streamed.sort();
    let collected: Vec<String> = enumerate_trees(&m).unwrap().iter().map(|t| t.to_string()).collect();
    assert_eq!(streamed, collected);
}

#[test]
fn every_output_parses_back_and_validates() {
    let m: Multiset = "1:1,2:3".parse().unwrap();
    for t in enumerate_trees(&m).unwrap() {
        let back = parse_tree(&t.to_string()).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.validate().unwrap(), m);
    }
}

#[test]
fn size_bound_is_enforced() {
    let m = Multiset::set(11);
    assert!(enumerate_trees(&m).is_err());
    assert!(witree::enumerate_trees_bounded(&Multiset::set(3), 2).is_err());
}

#[test]
fn output_is_deterministic() {
    let m: Multiset = "1:3,2:2".parse().unwrap();
    assert_eq!(enumerate_trees(&m).unwrap(), enumerate_trees(&m).unwrap());
}
