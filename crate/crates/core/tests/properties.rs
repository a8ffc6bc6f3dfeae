use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use witree::binary::{rho, rho_inv};
use witree::poly::schett::{schett_grammar, xyz};
use witree::poly::{real_rooted, UPoly};
use witree::{enumerate_trees, format_tree, hat, parse_tree, psi, stats, theta, tilde, IntPoly, Multiset, WTree};

fn poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(([0u32..4, 0u32..4, 0u32..4], -5i64..=5), 0..6).prop_map(|terms| {
        let mut p = IntPoly::zero(&xyz());
        for (e, c) in terms {
            p.add_term(&e, BigInt::from(c));
        }
        p
    })
}

fn tree() -> impl Strategy<Value = WTree> {
    (prop::collection::vec(1u32..=3, 0..=3), any::<prop::sample::Index>()).prop_map(|(mult, pick)| {
        let spec: Vec<String> = mult.iter().enumerate().map(|(k, c)| format!("{}:{c}", k + 1)).collect();
        let m: Multiset = spec.join(",").parse().unwrap();
        let trees = enumerate_trees(&m).unwrap();
        trees[pick.index(trees.len())].clone()
    })
}

fn rat(v: &[i64]) -> UPoly<BigRational> {
    UPoly::new(v.iter().map(|&c| BigRational::from_integer(c.into())).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn grammar_derivative_obeys_leibniz(f in poly(), g in poly()) {
        let d = schett_grammar();
        let lhs = d.derive_once(&(&f * &g));
        let rhs = &(&d.derive_once(&f) * &g) + &(&f * &d.derive_once(&g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn grammar_derivative_is_linear(f in poly(), g in poly()) {
        let d = schett_grammar();
        prop_assert_eq!(d.derive_once(&(&f + &g)), &d.derive_once(&f) + &d.derive_once(&g));
    }

    #[test]
    fn polynomial_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.swap_vars(1, 2).swap_vars(1, 2), a);
    }

    #[test]
    fn polynomial_evaluation_is_a_homomorphism(a in poly(), b in poly(), pt in [-3i64..=3, -3i64..=3, -3i64..=3]) {
        let pt: Vec<BigInt> = pt.iter().map(|&v| BigInt::from(v)).collect();
        prop_assert_eq!((&a * &b).eval(&pt), a.eval(&pt) * b.eval(&pt));
    }

    #[test]
    fn univariate_division(a in prop::collection::vec(-6i64..=6, 0..7), d in prop::collection::vec(-6i64..=6, 1..4)) {
        let (a, d) = (rat(&a), rat(&d));
        prop_assume!(!d.is_zero());
        let (q, r) = a.div_rem(&d);
        prop_assert_eq!(q.mul(&d).add(&r), a);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }

    #[test]
    fn products_of_real_linear_factors_are_real_rooted(roots in prop::collection::vec(-4i64..=4, 1..6)) {
        let p = roots.iter().fold(UPoly::<BigInt>::from_ints(&[1]), |acc, r| acc.mul(&UPoly::from_ints(&[-r, 1])));
        prop_assert!(real_rooted::<BigRational>(&p).real_rooted);
        let q = p.mul(&UPoly::from_ints(&[1, 0, 1]));
        prop_assert!(!real_rooted::<BigRational>(&q).real_rooted);
    }

    #[test]
    fn tree_text_round_trips(t in tree()) {
        prop_assert_eq!(parse_tree(&format_tree(&t)).unwrap(), t);
    }

    #[test]
    fn involutions_and_inverses(t in tree()) {
        prop_assert_eq!(tilde(&tilde(&t)), t.clone());
        prop_assert_eq!(psi(&psi(&t)), t.clone());
        prop_assert_eq!(rho_inv(&rho(&t)).unwrap(), t.clone());
    }

    #[test]
    fn maps_produce_valid_trees_on_the_same_labels(t in tree()) {
        for img in [hat(&t), tilde(&t), psi(&t), theta(&t)] {
            prop_assert!(img.validate().is_ok(), "{}", img);
            prop_assert_eq!(img.labels(), t.labels());
        }
    }

    #[test]
    fn tilde_swaps_odd_and_oe(t in tree()) {
        let (a, b) = (stats(&t), stats(&tilde(&t)));
        prop_assert_eq!((a.ee, a.oe, a.odd), (b.ee, b.odd, b.oe));
    }
}
