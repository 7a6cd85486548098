mod common;

use common::*;
use fuzzy_congruences::generate::{gen_random_dda, gen_random_tasks};
use fuzzy_congruences::oracle::{oracle_response, raw_solution};
use fuzzy_congruences::response::{bounds_lu, response_solution, satisfies_system, to_bms};
use fuzzy_congruences::{
    dda_to_bms, min_s_aggregate, min_s_binary, mixing_min_s, oracle_dda, oracle_min_s, reduction_roundtrip, reveal,
    DdaInstance, Task, TaskSet,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn tasks(v: &[(i64, i64, i64)]) -> TaskSet {
    TaskSet::new(v.iter().map(|&(c, t, j)| Task::new(c, t, j)).collect()).unwrap()
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(b(p), b(q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reveal_matches_enumeration_and_the_mixing_set_form(seed in any::<u64>()) {
        let ts = gen_random_tasks(seed, 6, 64);
        let expected = oracle_response(&ts);
        prop_assert_eq!(reveal(&ts).unwrap(), expected.clone());
        let inst = to_bms(&ts);
        prop_assert_eq!(min_s_binary(&inst).unwrap(), expected.clone());
        prop_assert_eq!(min_s_aggregate(&inst).unwrap(), expected.clone());
        if let Some(x_n) = expected {
            let xs = response_solution(&ts, &x_n).unwrap();
            prop_assert!(satisfies_system(&ts, &xs));
        }
    }

    #[test]
    fn chain_bounds_are_at_worst_an_empty_range(seed in any::<u64>(), z in 0i64..20) {
        let ts = gen_random_tasks(seed, 6, 64);
        let n = ts.len();
        for i in 0..n.saturating_sub(1) {
            for j in i + 1..n {
                let (lo, hi) = bounds_lu(&ts, i, j, &b(z)).unwrap();
                prop_assert!(lo <= &hi + 1);
            }
        }
    }

    #[test]
    fn mixing_minimum_is_exhaustively_minimal(
        rows in prop::collection::vec((-4i64..=4, -8i64..=8), 0..5),
    ) {
        let caps: Vec<BigInt> = rows.iter().map(|r| b(r.0)).collect();
        let lower: Vec<BigInt> = rows.iter().map(|r| b(r.1)).collect();
        let (s, x) = mixing_min_s(&caps, &lower).unwrap();
        for ((a, l), xi) in rows.iter().zip(&x) {
            prop_assert!(&s + b(*a) * xi >= b(*l));
        }
        let admits = |s: i64| rows.iter().all(|&(a, l)| (-20i64..=20).any(|x| s + a * x >= l));
        let brute = (0..=10).find(|&s| admits(s));
        prop_assert_eq!(Some(to_i64(&s)), brute);
    }

    #[test]
    fn reduction_preserves_feasibility(seed in any::<u64>()) {
        let d = gen_random_dda(seed, 3, 50, 10);
        prop_assert!(reduction_roundtrip(&d, &b(10_000_000)).unwrap());
        let bms = dda_to_bms(&d).unwrap();
        let reduced = oracle_min_s(&bms, &b(10_000_000)).unwrap();
        match oracle_dda(&d) {
            Some(q) => {
                prop_assert_eq!(reduced, Some(d.lambda() * &q));
                prop_assert!(raw_solution(&bms, &(d.lambda() * q)).is_some());
            }
            None => prop_assert_eq!(reduced, None),
        }
    }
}

#[test]
fn pinned_response_examples() {
    assert_eq!(reveal(&tasks(&[(1, 4, 2), (1, 2, 0)])).unwrap(), Some(b(3)));
    assert_eq!(response_solution(&tasks(&[(1, 4, 2), (1, 2, 0)]), &b(3)).unwrap(), vec![b(1), b(3)]);
    assert_eq!(reveal(&tasks(&[(1, 4, 1), (1, 2, 0)])).unwrap(), None);
    assert_eq!(reveal(&tasks(&[(1, 5, 0)])).unwrap(), Some(b(1)));
}

#[test]
fn long_equal_period_blocks() {
    let ts = tasks(&[(1, 64, 3), (1, 16, 0), (1, 16, 1), (1, 16, 2), (0, 4, 1), (1, 4, 0), (2, 2, 1)]);
    assert_eq!(reveal(&ts).unwrap(), oracle_response(&ts));
}

#[test]
fn pinned_reduction_examples() {
    let cases = [
        (vec![rat(1, 2)], 2, rat(1, 4), Some(2)),
        (vec![rat(1, 2)], 1, rat(1, 4), None),
        (vec![rat(1, 3), rat(1, 2)], 6, rat(1, 100), Some(6)),
    ];
    for (alphas, n, eps, expected) in cases {
        let d = DdaInstance::new(alphas, b(n), eps).unwrap();
        assert_eq!(oracle_dda(&d), expected.map(b));
        assert!(reduction_roundtrip(&d, &b(1_000_000)).unwrap());
        let bms = dda_to_bms(&d).unwrap();
        assert_eq!(oracle_min_s(&bms, &b(1_000_000)).unwrap(), expected.map(|q| d.lambda() * q));
    }
}
