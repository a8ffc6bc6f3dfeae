mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use witree::poly::schett::{
    format_schett, four_var_poly, gamma_by_action, gamma_expand, gamma_expand_multiset, multiset_schett,
    reduced_schett, reduced_slice, s_coeffs, schett_poly, st_relations, xyz,
};
use witree::poly::{parse_grammar, parse_mpoly, real_rooted, UPoly, VarContext};
use witree::{enumerate_trees, stats, IntPoly, Multiset};

fn counts(p: &IntPoly) -> common::Counts {
    p.terms().map(|(e, c)| (e.to_vec(), i128::try_from(c).unwrap())).collect()
}

#[test]
fn first_schett_polynomials_print_in_display_order() {
    let want = [
        "x",
        "yz",
        "xy^2+xz^2",
        "y^3z+yz^3+4x^2yz",
        "xy^4+14xy^2z^2+xz^4+4x^3y^2+4x^3z^2",
    ];
    for (n, w) in want.iter().enumerate() {
        assert_eq!(format_schett(&schett_poly(n)), *w, "S_{n}");
    }
}

#[test]
fn grammar_matches_independent_derivative() {
    for n in 0..=10 {
        assert_eq!(counts(&schett_poly(n)), common::schett_by_grammar(n), "n = {n}");
    }
}

#[test]
fn grammar_matches_brute_force_trees() {
    for n in 0..=6 {
        let mult = vec![1u32; n];
        let trees = common::trees(&mult);
        let want = common::tally(&trees, |t| {
            let s = common::ostats(t);
            vec![s.ee as u32, s.oe as u32, s.odd as u32]
        });
        assert_eq!(counts(&schett_poly(n)), want, "n = {n}");
    }
}

#[test]
fn four_variable_grammar_counts_starred_statistics() {
    for n in 0..=6 {
        let trees = common::trees(&vec![1u32; n]);
        let want = common::tally(&trees, |t| {
            let s = common::ostats(t);
            vec![1, s.ee_star as u32, s.oe_star as u32, s.odd_star as u32]
        });
        assert_eq!(counts(&four_var_poly(n)), want, "n = {n}");
    }
    assert_eq!(four_var_poly(1).to_string(), "wy");
}

#[test]
fn eulerian_grammar_example() {
    let ctx = VarContext::new(&["x", "y"]);
    let g = parse_grammar(&ctx, "x -> xy, y -> xy").unwrap();
    let x = parse_mpoly(&ctx, "x").unwrap();
    assert_eq!(g.derive(&x, 1), parse_mpoly(&ctx, "xy").unwrap());
    assert_eq!(g.derive(&x, 2), parse_mpoly(&ctx, "x^2y+xy^2").unwrap());
    assert_eq!(g.derive(&x, 3), parse_mpoly(&ctx, "x^3y+4x^2y^2+xy^3").unwrap());
}

#[test]
fn schett_coefficients_sum_to_factorials() {
    for n in 0..=9u64 {
        let total: BigInt = s_coeffs(n as usize).values().sum();
        assert_eq!(total, BigInt::from(common::factorial(n)));
    }
}

#[test]
fn figure_multiset_gamma_expansion() {
    let m: Multiset = "1:2,2:2".parse().unwrap();
    let r = reduced_schett(&m, 4).unwrap();
    let ctx = xyz();
    // 3x(y+z) + (y+z)^2 + 8yz
    let expected = parse_mpoly(&ctx, "3xy+3xz+y^2+2yz+z^2+8yz").unwrap();
    assert_eq!(r, expected);
    let g = gamma_expand(&r, 4).unwrap();
    assert_eq!(g.get(1, 0), BigInt::from(3));
    assert_eq!(g.get(0, 0), BigInt::from(1));
    assert_eq!(g.get(0, 1), BigInt::from(8));
    assert_eq!(g.entries.len(), 3);
    assert_eq!(gamma_by_action(&m, 4).unwrap(), g);
}

#[test]
fn gamma_tables_are_nonnegative_up_to_six() {
    for m in Multiset::all_up_to(6) {
        let g = gamma_expand_multiset(&m, 6).unwrap();
        assert!(g.is_nonnegative(), "M = {m}");
        assert_eq!(g.expand(), reduced_schett(&m, 6).unwrap());
        assert_eq!(gamma_by_action(&m, 6).unwrap(), g, "M = {m}");
    }
}

#[test]
fn gamma_expansion_rejects_asymmetric_input() {
    let ctx = xyz();
    let p = parse_mpoly(&ctx, "y^2+z").unwrap();
    assert!(gamma_expand(&p, 4).is_err());
}

#[test]
fn multiset_polynomial_is_symmetric_in_y_and_z() {
    for m in Multiset::all_up_to(6) {
        let s = multiset_schett(&m, 6).unwrap();
        assert_eq!(s, s.swap_vars(1, 2), "M = {m}");
    }
}

#[test]
fn s_t_relations_hold() {
    for m in 1..=4 {
        for r in st_relations(m) {
            assert_eq!(r.s, r.t_sum, "{r:?}");
        }
    }
}

#[test]
fn s_coefficients_count_trees_by_halved_statistics() {
    for n in 0..=6 {
        let trees = enumerate_trees(&Multiset::set(n)).unwrap();
        let mut want = std::collections::BTreeMap::new();
        for t in &trees {
            let s = stats(t);
            *want.entry(((s.ee / 2) as u32, (s.oe / 2) as u32)).or_insert(BigInt::from(0)) += 1;
        }
        assert_eq!(s_coeffs(n), want, "n = {n}");
    }
}

#[test]
fn real_rootedness_on_known_polynomials() {
    let rr = |c: &[i64]| real_rooted::<BigRational>(&UPoly::from_ints(c));
    assert!(rr(&[1, 3, 3, 1]).real_rooted);
    assert!(rr(&[1, 10, 1]).real_rooted);
    assert!(!rr(&[1, 0, 1]).real_rooted);
    assert!(!rr(&[1, 1, 1]).real_rooted);
    // repeated roots: (t+1)^2 (t+2)
    let r = rr(&[2, 5, 4, 1]);
    assert!(r.real_rooted);
    assert_eq!(r.squarefree_degree, 2);
    // zero roots are stripped first
    let r = rr(&[0, 0, 1, 1]);
    assert_eq!(r.zero_root_multiplicity, 2);
    assert!(r.real_rooted);
    assert!(real_rooted::<BigRational>(&UPoly::from_ints(&[])).vacuous);
    let c = rr(&[7]);
    assert!(!c.vacuous && c.real_rooted);
    // t^4 - 5t^2 + 4 has roots -2, -1, 1, 2
    assert!(rr(&[4, 0, -5, 0, 1]).real_rooted);
    // t^3 - 2 has one real root
    assert!(!rr(&[-2, 0, 0, 1]).real_rooted);
}

#[test]
fn figure_multiset_slices() {
    let r = reduced_schett(&"1:2,2:2".parse().unwrap(), 4).unwrap();
    assert_eq!(reduced_slice(&r, 0), UPoly::from_ints(&[1, 10, 1]));
    assert_eq!(reduced_slice(&r, 1), UPoly::from_ints(&[3, 3]));
}
