//! Seeded random instances.
//!
//! All randomness comes from SplitMix64 (Steele, Lea and Flood's generator
//! with the published constants), so a seed fixes the instance on every
//! platform. A bounded big integer is drawn from `bits(bound) + 64` random
//! bits, consumed as little-endian 64-bit words, and reduced modulo the bound;
//! the bias is below `2^-64`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::instance::{Constraint, FscInstance};
use crate::oracle::DdaInstance;
use crate::response::{Task, TaskSet};

/// Deterministic source of bounded integers.
pub struct SeededRng(SplitMix64);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, bound)`; `bound` must be positive.
    pub fn below(&mut self, bound: &BigInt) -> BigInt {
        assert!(bound > &BigInt::zero(), "bound must be positive");
        let words = (bound.bits() as usize + 64).div_ceil(64);
        let digits: Vec<u64> = (0..words).map(|_| self.next_u64()).collect();
        let raw = BigInt::from(BigUint::new(
            digits
                .iter()
                .flat_map(|d| [*d as u32, (*d >> 32) as u32])
                .collect(),
        ));
        raw % bound
    }

    /// Uniform in `[lo, hi]`.
    pub fn between(&mut self, lo: &BigInt, hi: &BigInt) -> BigInt {
        lo + self.below(&(hi - lo + 1))
    }

    /// Uniform in `[lo, hi]` for small ranges.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        let v = self.between(&BigInt::from(lo), &BigInt::from(hi));
        u64::try_from(v).expect("within u64 range")
    }
}

/// A random harmonic instance with tight remainder intervals.
///
/// Draw order: `a_1 ∈ [1, max_ratio]`; then each ratio in `[1, max_ratio]`;
/// with `plant`, `s* ∈ [0, a_n)`; then per row its width in `[1, max(1, a_i - 1)]`,
/// a shift in `{-1, 0, 1}` periods and an offset. Planted rows contain
/// `(s* mod a_i) + shift·a_i`; unplanted rows start at a random residue.
pub fn gen_random_harmonic(n: usize, max_ratio: u64, seed: u64, plant: bool) -> FscInstance {
    assert!(n >= 1 && max_ratio >= 1, "need n >= 1 and max_ratio >= 1");
    let mut rng = SeededRng::new(seed);
    let mut caps = Vec::with_capacity(n);
    caps.push(BigInt::from(rng.range(1, max_ratio)));
    for i in 1..n {
        let ratio = rng.range(1, max_ratio);
        caps.push(&caps[i - 1] * ratio);
    }
    let planted = plant.then(|| rng.below(&caps[n - 1]));
    let one = BigInt::one();
    let rows = caps
        .iter()
        .map(|a| {
            let width = rng.between(&one, &(a - 1i32).max(one.clone()));
            let shift = rng.between(&BigInt::from(-1), &one) * a;
            let lower = match &planted {
                Some(s) => s % a + &shift - rng.below(&width),
                None => rng.below(a) + &shift,
            };
            let upper = &lower + &width - 1;
            Constraint {
                capacity: a.clone(),
                lower,
                upper,
            }
        })
        .collect();
    FscInstance::new(rows, None).expect("rows are well formed")
}

/// A random approximation instance: `1 ≤ size ≤ max_size` numbers `β/γ` with
/// `β ∈ [1, 10]` and `γ ∈ [1, max_den]`, `N ∈ [1, max_n]`, and `ε = p/q` with
/// `2 ≤ q ≤ max(2, max_den)` and `1 ≤ p < q`.
pub fn gen_random_dda(seed: u64, max_size: usize, max_n: u64, max_den: u64) -> DdaInstance {
    let mut rng = SeededRng::new(seed);
    let size = rng.range(1, max_size.max(1) as u64) as usize;
    let alphas = (0..size)
        .map(|_| {
            let beta = rng.range(1, 10);
            let gamma = rng.range(1, max_den.max(1));
            BigRational::new(beta.into(), gamma.into())
        })
        .collect();
    let n = BigInt::from(rng.range(1, max_n.max(1)));
    let q = rng.range(2, max_den.max(2));
    let p = rng.range(1, q - 1);
    DdaInstance::new(alphas, n, BigRational::new(p.into(), q.into()))
        .expect("generated within the valid ranges")
}

/// A random harmonic task set with `1 ≤ n ≤ max_n` tasks and periods at most
/// `max_period`, built from the analyzed task upwards.
///
/// Each higher-priority task gets `C_t ≤ (T_t - 1)/(n - 1)`, keeping their
/// utilization strictly below one; jitter lies in `[0, T]` so that the
/// response multiplier of the analyzed task is nonnegative.
pub fn gen_random_tasks(seed: u64, max_n: usize, max_period: u64) -> TaskSet {
    let mut rng = SeededRng::new(seed);
    let n = rng.range(1, max_n.max(1) as u64) as usize;
    let mut periods = vec![rng.range(1, 4.min(max_period.max(1)))];
    while periods.len() < n {
        let prev = *periods.last().expect("nonempty");
        let ratio = rng.range(1, 3);
        periods.push(if prev * ratio <= max_period { prev * ratio } else { prev });
    }
    periods.reverse();
    let tasks = periods
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            let c = if i + 1 == n {
                rng.range(1, t)
            } else {
                rng.range(0, (t - 1) / (n as u64 - 1))
            };
            Task::new(c, t, rng.range(0, t))
        })
        .collect();
    TaskSet::new(tasks).expect("generated task sets are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feasibility::feasible;
    use crate::instance::normalize;

    #[test]
    fn deterministic() {
        assert_eq!(gen_random_harmonic(5, 4, 9, true), gen_random_harmonic(5, 4, 9, true));
        assert_ne!(gen_random_harmonic(5, 4, 9, true), gen_random_harmonic(5, 4, 10, true));
        assert_eq!(gen_random_dda(3, 3, 50, 10), gen_random_dda(3, 3, 50, 10));
        assert_eq!(gen_random_tasks(3, 6, 64), gen_random_tasks(3, 6, 64));
    }

    #[test]
    fn planted_instances_are_feasible() {
        for seed in 0..200 {
            let inst = gen_random_harmonic(3, 4, seed, true);
            assert!(feasible(&normalize(&inst)).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn unit_capacity_row_is_redundant() {
        let inst = gen_random_harmonic(1, 1, 0, false);
        assert_eq!(inst.constraints()[0].capacity, BigInt::one());
        assert!(normalize(&inst).constraints().is_empty());
    }

    #[test]
    fn below_stays_in_range() {
        let mut rng = SeededRng::new(1);
        let bound = BigInt::from(10).pow(30);
        for _ in 0..100 {
            let v = rng.below(&bound);
            assert!(v >= BigInt::zero() && v < bound);
        }
        assert_eq!(rng.below(&BigInt::one()), BigInt::zero());
    }
}
