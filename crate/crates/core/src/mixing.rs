//! Minimizing `s` over an unbounded mixing set `s + a_i·x_i ≥ b_i`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{ceil_div, floor_div};
use crate::error::{Error, Result};

/// Rows `s + a_i·x_i ≥ b_i` with free integer multipliers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixingInstance {
    pub capacities: Vec<BigInt>,
    pub lower: Vec<BigInt>,
}

impl MixingInstance {
    pub fn new(capacities: Vec<BigInt>, lower: Vec<BigInt>) -> Result<Self> {
        if capacities.len() != lower.len() {
            return Err(Error::LengthMismatch {
                left: capacities.len(),
                right: lower.len(),
            });
        }
        Ok(MixingInstance { capacities, lower })
    }

    pub fn solve(&self) -> (BigInt, Vec<BigInt>) {
        mixing_min_s(&self.capacities, &self.lower).expect("lengths checked on construction")
    }
}

/// One-pass minimizer: the optimum is `max({0} ∪ {b_i : a_i = 0})`, since any
/// row with a nonzero capacity can be met by choosing its multiplier.
///
/// Rows already satisfied by the optimum get `x_i = 0`; others get the
/// smallest (for `a_i > 0`) or largest (for `a_i < 0`) sufficient multiplier.
pub fn mixing_min_s(capacities: &[BigInt], lower: &[BigInt]) -> Result<(BigInt, Vec<BigInt>)> {
    if capacities.len() != lower.len() {
        return Err(Error::LengthMismatch {
            left: capacities.len(),
            right: lower.len(),
        });
    }
    let s = capacities
        .iter()
        .zip(lower)
        .filter(|(a, _)| a.is_zero())
        .map(|(_, b)| b)
        .fold(BigInt::zero(), |acc, b| if *b > acc { b.clone() } else { acc });

    let x = capacities
        .iter()
        .zip(lower)
        .map(|(a, b)| {
            if &s >= b {
                BigInt::zero()
            } else if a.is_positive() {
                ceil_div(&(b - &s), a)
            } else {
                floor_div(&(b - &s), a)
            }
        })
        .collect();
    Ok((s, x))
}
