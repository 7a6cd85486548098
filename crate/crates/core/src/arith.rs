//! Integer helpers with mathematical (floor) rounding conventions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `x mod m` as the representative in `[0, m)`. `m` must be positive.
pub fn modulo(x: &BigInt, m: &BigInt) -> BigInt {
    x.mod_floor(m)
}

pub fn floor_div(x: &BigInt, d: &BigInt) -> BigInt {
    x.div_floor(d)
}

pub fn ceil_div(x: &BigInt, d: &BigInt) -> BigInt {
    -((-x).div_floor(d))
}

/// Least common multiple of the absolute values; `1` for an empty input.
pub fn lcm_all<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a BigInt>,
{
    values.into_iter().fold(BigInt::one(), |acc, v| {
        if v.is_zero() {
            acc
        } else {
            acc.lcm(&v.abs())
        }
    })
}
