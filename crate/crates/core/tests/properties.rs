use std::cmp::Ordering;

use normcross::ideal::Ideal;
use normcross::poly::{Monomial, MonomialOrder, Polynomial, Ring, Q};
use proptest::prelude::*;

const N: usize = 3;

fn coeff() -> impl Strategy<Value = Q> {
    (-5i64..=5, 1i64..=4).prop_map(|(a, b)| Q::new(a.into(), b.into()))
}

fn exps(n: usize, max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max, n)
}

fn poly(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((coeff(), exps(n, 3)), 0..5).prop_map(move |ts| {
        Polynomial::from_terms(n, ts.into_iter().map(|(c, e)| (c, Monomial::from_exponents(&e))))
    })
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::DegRevLex),
        Just(MonomialOrder::Ds),
        (1usize..N).prop_map(MonomialOrder::Elimination),
    ]
}

fn monomial_ideal_gens(n: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(exps(n, 3), 1..4)
}

fn to_ideal(r: &std::sync::Arc<Ring>, gens: &[Vec<u32>]) -> Ideal {
    let ps = gens
        .iter()
        .map(|e| Polynomial::monomial(r.nvars(), Q::from_integer(1.into()), Monomial::from_exponents(e)));
    Ideal::new(r, ps).unwrap()
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in poly(N), b in poly(N), c in poly(N)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(N), a.clone());
    }

    #[test]
    fn orders_are_total_and_multiplicative(
        ord in order(), a in exps(N, 4), b in exps(N, 4), c in exps(N, 4)
    ) {
        let (a, b, c) = (Monomial::from_exponents(&a), Monomial::from_exponents(&b), Monomial::from_exponents(&c));
        prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
        prop_assert_eq!(ord.cmp(&a, &b) == Ordering::Equal, a == b);
        prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ord.cmp(&a, &b));
        let one = Monomial::one(N);
        let expected = if ord.is_local() { Ordering::Greater } else { Ordering::Less };
        if !a.is_one() {
            prop_assert_eq!(ord.cmp(&one, &a), expected);
        }
    }

    #[test]
    fn mixed_partials_commute(p in poly(N), i in 0..N, j in 0..N) {
        let pij = p.partial(i).unwrap().partial(j).unwrap();
        let pji = p.partial(j).unwrap().partial(i).unwrap();
        prop_assert_eq!(pij, pji);
    }

    #[test]
    fn parse_inverts_format(p in poly(N)) {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let text = r.format(&p);
        prop_assert_eq!(r.parse(&text).unwrap(), p);
    }

    #[test]
    fn monomial_intersection_matches_lcms(a in monomial_ideal_gens(N), b in monomial_ideal_gens(N)) {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let (i, j) = (to_ideal(&r, &a), to_ideal(&r, &b));
        let lcms: Vec<Vec<u32>> = a.iter().flat_map(|x| b.iter().map(move |y| lcm(x, y))).collect();
        let oracle = to_ideal(&r, &lcms);
        let ij = i.intersect(&j).unwrap();
        prop_assert!(ij.equals(&oracle).unwrap());
        prop_assert!(ij.equals(&j.intersect(&i).unwrap()).unwrap());
    }

    #[test]
    fn intersection_is_associative(
        a in monomial_ideal_gens(N), b in monomial_ideal_gens(N), c in monomial_ideal_gens(N)
    ) {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let (i, j, k) = (to_ideal(&r, &a), to_ideal(&r, &b), to_ideal(&r, &c));
        let left = i.intersect(&j).unwrap().intersect(&k).unwrap();
        let right = i.intersect(&j.intersect(&k).unwrap()).unwrap();
        prop_assert!(left.equals(&right).unwrap());
    }

    #[test]
    fn saturation_is_a_fixed_point(a in monomial_ideal_gens(N), f in exps(N, 1)) {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let i = to_ideal(&r, &a);
        let f = Polynomial::monomial(N, Q::from_integer(1.into()), Monomial::from_exponents(&f));
        let (sat, _) = i.saturate(&f).unwrap();
        prop_assert!(sat.quotient(&f).unwrap().equals(&sat).unwrap());
    }

    #[test]
    fn powers_in_ideal_imply_radical_membership(g in poly(2), k in 1u32..=4, extra in poly(2)) {
        let r = Ring::new(["x", "y"]).unwrap();
        let i = Ideal::new(&r, [g.pow(k), extra.clone() * g.pow(k)]).unwrap();
        prop_assert!(i.member(&g.pow(k)).unwrap());
        prop_assert!(i.radical_member(&g).unwrap());
    }
}
