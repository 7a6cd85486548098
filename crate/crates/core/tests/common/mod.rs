//! Ground truth by residue enumeration, shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use fuzzy_congruences::{Constraint, FscInstance, Interval, ModSet};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub fn b(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("small test value")
}

pub fn iv(lo: i64, hi: i64) -> Interval {
    Interval::new(lo, hi).unwrap()
}

/// `{z mod m : lo ≤ z ≤ hi}` by walking the interval.
pub fn residues(lo: i64, hi: i64, m: i64) -> BTreeSet<i64> {
    (lo..=hi.min(lo + m - 1)).map(|z| z.rem_euclid(m)).collect()
}

pub fn residues_of(v: &Interval, m: i64) -> BTreeSet<i64> {
    residues(to_i64(v.lo()), to_i64(v.hi()), m)
}

pub fn residues_of_all(pieces: &[Interval], m: i64) -> BTreeSet<i64> {
    pieces.iter().flat_map(|p| residues_of(p, m)).collect()
}

pub fn members(set: &ModSet) -> BTreeSet<i64> {
    set.parts()
        .iter()
        .flat_map(|p| to_i64(p.lo())..=to_i64(p.hi()))
        .collect()
}

pub fn points(pieces: &[Interval]) -> Vec<i64> {
    pieces
        .iter()
        .flat_map(|p| to_i64(p.lo())..=to_i64(p.hi()))
        .collect()
}

/// Whether some multiple of `a` lies in `[lower - s, upper - s]`.
pub fn row_admits(a: i64, lower: i64, upper: i64, s: i64) -> bool {
    if a == 0 {
        return lower <= s && s <= upper;
    }
    let a = a.abs();
    let top = (upper - s).div_euclid(a) * a;
    top >= lower - s
}

pub fn rows(inst: &FscInstance) -> Vec<(i64, i64, i64)> {
    inst.constraints()
        .iter()
        .map(|c| (to_i64(&c.capacity), to_i64(&c.lower), to_i64(&c.upper)))
        .collect()
}

/// Every `s` in `[0, bound)` satisfying all rows and the domain.
pub fn feasible_below(inst: &FscInstance, bound: i64) -> Vec<i64> {
    let rs = rows(inst);
    let dom = inst.s_domain().map(|d| (to_i64(d.lo()), to_i64(d.hi())));
    (0..bound)
        .filter(|&s| dom.is_none_or(|(l, h)| l <= s && s <= h))
        .filter(|&s| rs.iter().all(|&(a, l, u)| row_admits(a, l, u, s)))
        .collect()
}

pub fn fsc(rows: &[(i64, i64, i64)]) -> FscInstance {
    let cs = rows
        .iter()
        .map(|&(a, l, u)| Constraint::new(a, l, u).unwrap())
        .collect();
    FscInstance::new(cs, None).unwrap()
}
