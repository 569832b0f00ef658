use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;

use sl2_cohom::characters::{decompose, irreducible_character, weyl_character};
use sl2_cohom::classification::{h1_closed_form, h2_closed_form, h2_family_of, H2Kind};
use sl2_cohom::ext_one::{cline_ext1, hom_with_tensor_l1, list_ext1_partners};
use sl2_cohom::g1::g1_coh_pair;
use sl2_cohom::spectral::{e2_report, h1_via_ss, h2_via_ss};
use sl2_cohom::weights::{g1_linked, padic_collapse, padic_expand};
use sl2_cohom::{PrimeChar, Weight};

const PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

fn prime() -> impl Strategy<Value = PrimeChar> {
    prop::sample::select(PRIMES.to_vec()).prop_map(|p| PrimeChar::new(p).unwrap())
}

fn weight(max_digits: usize) -> impl Strategy<Value = Weight> {
    prime().prop_flat_map(move |p| {
        prop::collection::vec(0..p.get(), 0..=max_digits)
            .prop_map(move |d| Weight::from_digits(d, p).unwrap())
    })
}

fn weight_pair(max_digits: usize) -> impl Strategy<Value = (Weight, Weight)> {
    prime().prop_flat_map(move |p| {
        let digits = || prop::collection::vec(0..p.get(), 0..=max_digits);
        (digits(), digits()).prop_map(move |(a, b)| {
            (
                Weight::from_digits(a, p).unwrap(),
                Weight::from_digits(b, p).unwrap(),
            )
        })
    })
}

/// The Ext^1 rule read literally: try every k after padding both
/// expansions to a common length plus one.
fn ext1_by_scanning_k(r: &Weight, s: &Weight) -> u8 {
    let p = r.p().get() as i64;
    let len = r.len().max(s.len()) + 1;
    let rd: Vec<i64> = (0..len).map(|i| i64::from(r.digit(i))).collect();
    let sd: Vec<i64> = (0..len).map(|i| i64::from(s.digit(i))).collect();
    let found = (0..len - 1).any(|k| {
        (0..len).all(|i| i == k || i == k + 1 || rd[i] == sd[i])
            && rd[k] == p - 2 - sd[k]
            && (rd[k + 1] - sd[k + 1]).abs() == 1
    });
    u8::from(found)
}

proptest! {
    #[test]
    fn decimal_round_trip(hi in any::<u64>(), lo in any::<u64>(), p in prime()) {
        let n = (BigUint::from(hi) << 64u32) + lo;
        let n = n % BigUint::from(10u32).pow(30);
        let s = n.to_string();
        let w = padic_expand(&s, p).unwrap();
        prop_assert_eq!(padic_collapse(&w), s);
        prop_assert!(w.digits().iter().all(|&d| d < p.get()));
        prop_assert_ne!(w.digits().last(), Some(&0));
    }

    #[test]
    fn twist_is_additive(w in weight(6), a in 0usize..5, b in 0usize..5) {
        prop_assert_eq!(w.frobenius_twist(a).frobenius_twist(b), w.frobenius_twist(a + b));
        let (s, d0) = w.untwist_maximal();
        let (s2, d2) = w.frobenius_twist(a).untwist_maximal();
        prop_assert_eq!(&s2, &s);
        if !w.is_zero() {
            prop_assert_eq!(d2, d0 + a);
        }
        prop_assert_eq!(s.frobenius_twist(d0), w);
    }

    #[test]
    fn linkage_symmetric_reflexive(p in prime(), a in 0u32..11, b in 0u32..11) {
        let (a, b) = (a % p.get(), b % p.get());
        prop_assert!(g1_linked(a, a, p).unwrap());
        prop_assert_eq!(g1_linked(a, b, p).unwrap(), g1_linked(b, a, p).unwrap());
    }

    #[test]
    fn ext1_matches_scan_and_is_symmetric((r, s) in weight_pair(6)) {
        let d = cline_ext1(&r, &s).unwrap().dim;
        prop_assert_eq!(d, ext1_by_scanning_k(&r, &s));
        prop_assert_eq!(d, cline_ext1(&s, &r).unwrap().dim);
    }

    #[test]
    fn hom_l1_symmetric((x, y) in weight_pair(4)) {
        prop_assert_eq!(hom_with_tensor_l1(&x, &y).unwrap(), hom_with_tensor_l1(&y, &x).unwrap());
    }

    #[test]
    fn h2_twists_upward(w in weight(8), d in 1usize..4) {
        if h2_closed_form(&w) == 1 {
            prop_assert_eq!(h2_closed_form(&w.frobenius_twist(d)), 1);
        }
    }

    #[test]
    fn paths_agree_on_long_weights(w in weight(40)) {
        prop_assert_eq!(h1_via_ss(&w).unwrap(), h1_closed_form(&w));
        prop_assert_eq!(h2_via_ss(&w).unwrap(), h2_closed_form(&w));
        let rep = e2_report(&w).unwrap();
        prop_assert_eq!((rep.h1, rep.h2), (h1_closed_form(&w), h2_closed_form(&w)));
    }
}

#[test]
fn h2_not_twist_stable_downward() {
    let p = PrimeChar::new(3).unwrap();
    assert_eq!(h2_closed_form(&Weight::from_u64(6, p)), 1);
    assert_eq!(h2_closed_form(&Weight::from_u64(2, p)), 0);
}

#[test]
fn huge_family_members() {
    for p in [2u64, 3, 5, 7] {
        let p = PrimeChar::new(p).unwrap();
        let (pm2, one) = (p.p_minus_two(), 1u32);
        for e in [2usize, 17, 500] {
            for twist in [0usize, 3, 200] {
                let mut digits = vec![0; twist];
                digits.extend([pm2, one]);
                digits.extend(std::iter::repeat_n(0, e - 2));
                digits.extend([pm2, one]);
                let w = Weight::from_digits(digits, p).unwrap();
                assert_eq!(h2_closed_form(&w), 1, "p={p} e={e} d={twist}");
                assert_eq!(h2_via_ss(&w).unwrap(), 1);
                let fam = h2_family_of(&w).unwrap();
                assert_eq!(fam.kind, H2Kind::TwoFamily { e });
                assert_eq!(fam.twist, twist);
                assert_eq!(padic_expand(&w.to_decimal(), p).unwrap(), w);
            }
        }
    }
}

#[test]
fn h1_count() {
    for p in [2u64, 3, 5, 7] {
        let prime = PrimeChar::new(p).unwrap();
        let bound = 5000;
        let count = (0..=bound)
            .filter(|&n| h1_closed_form(&Weight::from_u64(n, prime)) == 1)
            .count();
        let mut expect = 0;
        let mut v = 2 * p - 2;
        while v <= bound {
            expect += 1;
            v *= p;
        }
        assert_eq!(count, expect, "p={p}");
    }
}

#[test]
fn partners_match_brute_force_scan() {
    for p in [2u64, 3, 5] {
        let prime = PrimeChar::new(p).unwrap();
        let max_digits = 4;
        let bound = p.pow(max_digits as u32);
        for s in 0..p.pow(3) {
            let s = Weight::from_u64(s, prime);
            let listed = list_ext1_partners(&s, max_digits).unwrap();
            let scanned: BTreeSet<Weight> = (0..bound)
                .map(|r| Weight::from_u64(r, prime))
                .filter(|r| cline_ext1(r, &s).unwrap().dim == 1)
                .collect();
            assert_eq!(listed, scanned, "p={p} s={s}");
        }
    }
}

#[test]
fn irreducibles_decompose_to_themselves() {
    for p in [2u64, 3, 5, 7] {
        let prime = PrimeChar::new(p).unwrap();
        for n in 0..=400 {
            let w = Weight::from_u64(n, prime);
            let f = decompose(&irreducible_character(&w).unwrap()).unwrap();
            assert_eq!(f.into_iter().collect::<Vec<_>>(), vec![(w, 1)]);
        }
    }
}

#[test]
fn tensor_dimension_multiplies() {
    let p = PrimeChar::new(3).unwrap();
    for a in 0..40u64 {
        for b in 0..40u64 {
            let ca = irreducible_character(&Weight::from_u64(a, p)).unwrap();
            let cb = irreducible_character(&Weight::from_u64(b, p)).unwrap();
            assert_eq!(
                ca.tensor(&cb).unwrap().dimension(),
                ca.dimension() * cb.dimension()
            );
        }
    }
}

#[test]
fn g1_degree_one_pairs_contain_p_minus_2_once() {
    for p in [2u64, 3, 5, 7, 11] {
        let prime = PrimeChar::new(p).unwrap();
        for a in 0..prime.get() {
            for b in 0..prime.get() {
                if !g1_coh_pair(1, a, b, prime).unwrap().present {
                    continue;
                }
                let c = weyl_character(a.into(), prime)
                    .tensor(&weyl_character(b.into(), prime))
                    .unwrap();
                let f = decompose(&c).unwrap();
                let target = Weight::from_u64(u64::from(prime.p_minus_two()), prime);
                assert_eq!(f.get(&target), Some(&1), "p={p} a={a} b={b}");
            }
        }
    }
}
