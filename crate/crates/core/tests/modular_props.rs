mod common;

use std::collections::BTreeSet;

use common::*;
use fuzzy_congruences::modular::{intersect_one_many, intersect_pair, intersect_pair_pieces, lift_intersection, member, psi};
use fuzzy_congruences::{Interval, ModSet};
use proptest::prelude::*;

prop_compose! {
    fn arb_interval(span: i64, max_len: i64)(lo in -span..span, len in 1..=max_len) -> Interval {
        iv(lo, lo + len - 1)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn projection_matches_enumeration(v in arb_interval(100, 40), m in 1i64..30) {
        let set = ModSet::project(&v, &b(m)).unwrap();
        prop_assert!(set.parts().len() <= 2);
        prop_assert!(set.is_canonical());
        prop_assert_eq!(members(&set), residues_of(&v, m));
    }

    #[test]
    fn pair_intersection_matches_enumeration(
        v in arb_interval(100, 50),
        w in arb_interval(100, 50),
        alpha in 1i64..40,
    ) {
        let pieces = intersect_pair_pieces(&v, &w, &b(alpha)).unwrap();
        prop_assert!(pieces.len() <= 2);
        let expected: BTreeSet<_> = residues_of(&v, alpha).intersection(&residues_of(&w, alpha)).copied().collect();
        prop_assert_eq!(residues_of_all(&pieces, alpha), expected.clone());
        prop_assert_eq!(members(&intersect_pair(&v, &w, &b(alpha)).unwrap()), expected);
    }

    #[test]
    fn psi_is_symmetric(v in arb_interval(100, 50), w in arb_interval(100, 50), alpha in 1i64..40) {
        prop_assert_eq!(psi(&v, &w, &b(alpha)).unwrap(), psi(&w, &v, &b(alpha)).unwrap());
    }

    #[test]
    fn one_many_matches_enumeration(
        v in arb_interval(60, 30),
        q in prop::collection::vec(arb_interval(60, 30), 0..6),
        alpha in 1i64..30,
    ) {
        let r = intersect_one_many(&v, &q, &b(alpha)).unwrap();
        let expected: BTreeSet<_> = residues_of(&v, alpha).intersection(&residues_of_all(&q, alpha)).copied().collect();
        prop_assert_eq!(residues_of_all(&r, alpha), expected);
        if !q.is_empty() {
            prop_assert!(r.len() <= q.len() + 1);
        }
        if to_i64(&v.len()) < alpha {
            for piece in &r {
                prop_assert!(v.lo() <= piece.lo() && piece.hi() <= v.hi());
            }
        }
    }

    #[test]
    fn lifted_pieces_are_minimal_representatives(
        a_set in arb_interval(200, 60),
        b_set in arb_interval(200, 60),
        a in 1i64..12,
        k in 1i64..6,
    ) {
        let ab = a * k;
        let pieces = lift_intersection(&a_set, &b_set, &b(a), &b(k)).unwrap();
        let outer = residues_of(&a_set, ab);
        let inner = residues_of(&b_set, a);
        let mut expected = Vec::new();
        let mut seen = BTreeSet::new();
        for r in &outer {
            if inner.contains(&(r % a)) && seen.insert(r % a) {
                expected.push(*r);
            }
        }
        prop_assert_eq!(points(&pieces), expected);
    }

    #[test]
    fn membership_uses_the_nonnegative_remainder(x in -500i64..500, v in arb_interval(50, 10), m in 1i64..20) {
        let set = ModSet::project(&v, &b(m)).unwrap();
        prop_assert_eq!(member(&b(x), &set), residues_of(&v, m).contains(&x.rem_euclid(m)));
    }
}

#[test]
fn canonical_forms_after_set_algebra() {
    let m = b(12);
    let s = ModSet::from_representatives(m.clone(), &[iv(1, 3), iv(4, 5), iv(10, 14)]).unwrap();
    assert!(s.is_canonical());
    assert_eq!(members(&s), [0, 1, 2, 3, 4, 5, 10, 11].into_iter().collect());
    let t = s.subtract_interval(&iv(2, 4));
    assert!(t.is_canonical());
    assert_eq!(members(&t), [0, 1, 5, 10, 11].into_iter().collect());
    let u = t.intersect(&ModSet::project(&iv(11, 13), &m).unwrap()).unwrap();
    assert_eq!(members(&u), [0, 1, 11].into_iter().collect());
}
