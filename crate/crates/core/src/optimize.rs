//! Smallest and largest feasible `s` for harmonic instances.
//!
//! Two routes to the minimum: a binary search over an extra measuring row,
//! `O(n² log a_n)`, and an aggregation that repeatedly merges the last two
//! rows into a handful of candidate intervals, `O(n³)` and strongly
//! polynomial. Both rely on the fact that every feasible harmonic instance has
//! a solution below its largest capacity.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::feasibility::sweep;
use crate::instance::{Constraint, NormalizedInstance, Origin};
use crate::interval::{Interval, ModSet};
use crate::modular::lift_intersection;

/// Most pieces an aggregation step can produce: at most three nonempty
/// blocks, each contributing at most two intervals.
pub const MAX_AGGREGATION_PIECES: usize = 6;

/// Disjoint intervals `E_1 < … < E_k` inside `R_n mod a_n` that stand in for
/// the last two constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AggregationResult {
    pub pieces: Vec<Interval>,
}

impl AggregationResult {
    pub fn count(&self) -> usize {
        self.pieces.len()
    }
}

fn measure_row(top: &BigInt, lower: BigInt, upper: BigInt) -> Constraint {
    Constraint {
        capacity: top * 2,
        lower,
        upper,
    }
}

fn top_of(chain: &[Constraint]) -> BigInt {
    chain.last().map_or_else(BigInt::one, |c| c.capacity.clone())
}

fn extended(inst: &NormalizedInstance, row: Constraint) -> NormalizedInstance {
    let mut chain = inst.chain();
    let mut prov = inst.chain_provenance();
    chain.push(row);
    prov.push(Origin::Measure);
    NormalizedInstance::from_chain(chain, prov, inst)
}

fn check_bound(value: &BigInt, max: &BigInt) -> Result<()> {
    if value < &BigInt::zero() || value > max {
        return Err(Error::InvalidBound {
            value: value.clone(),
            max: max.clone(),
        });
    }
    Ok(())
}

fn nonempty_chain(inst: &NormalizedInstance) -> Result<Vec<Constraint>> {
    inst.require_harmonic()?;
    let chain = inst.chain();
    if chain.is_empty() {
        return Err(Error::Precondition("instance has no constraints".into()));
    }
    Ok(chain)
}

/// Appends the row `0 ≤ s + 2·a_n·x ≤ β`. For `β ≤ a_n` the result is
/// feasible exactly when the original has a feasible `s ≤ β`.
pub fn make_beta_instance(inst: &NormalizedInstance, beta: &BigInt) -> Result<NormalizedInstance> {
    let top = top_of(&nonempty_chain(inst)?);
    check_bound(beta, &top)?;
    Ok(extended(inst, measure_row(&top, BigInt::zero(), beta.clone())))
}

/// Appends the row `β ≤ s + 2·a_n·x ≤ a_n - 1`, feasible exactly when the
/// original has a feasible `s` in `[β, a_n)`.
pub fn make_floor_instance(inst: &NormalizedInstance, beta: &BigInt) -> Result<NormalizedInstance> {
    let top = top_of(&nonempty_chain(inst)?);
    check_bound(beta, &(&top - 1))?;
    Ok(extended(inst, measure_row(&top, beta.clone(), &top - 1)))
}

fn probe(chain: &mut Vec<Constraint>, row: Constraint) -> bool {
    chain.push(row);
    let ok = sweep(chain);
    chain.pop();
    ok
}

/// Smallest feasible `s` by binary search on the measuring row.
pub fn min_s_binary(inst: &NormalizedInstance) -> Result<Option<BigInt>> {
    inst.require_harmonic()?;
    if inst.is_infeasible() {
        return Ok(None);
    }
    let mut chain = inst.chain();
    if chain.is_empty() {
        return Ok(Some(BigInt::zero()));
    }
    if !sweep(&chain) {
        return Ok(None);
    }
    let top = top_of(&chain);
    let (mut lo, mut hi) = (BigInt::zero(), &top - 1);
    while lo < hi {
        let mid: BigInt = (&lo + &hi) >> 1;
        if probe(&mut chain, measure_row(&top, BigInt::zero(), mid.clone())) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(Some(lo))
}

/// Largest feasible `s` below the top capacity of the swept chain (with a
/// domain present, the largest feasible `s` in the domain).
pub fn max_s(inst: &NormalizedInstance) -> Result<Option<BigInt>> {
    inst.require_harmonic()?;
    if inst.is_infeasible() {
        return Ok(None);
    }
    let mut chain = inst.chain();
    if chain.is_empty() {
        return Ok(Some(BigInt::zero()));
    }
    if !sweep(&chain) {
        return Ok(None);
    }
    let top = top_of(&chain);
    let (mut lo, mut hi) = (BigInt::zero(), &top - 1);
    while lo < hi {
        let mid: BigInt = (&lo + &hi + 1) >> 1;
        if probe(&mut chain, measure_row(&top, mid.clone(), &top - 1)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Ok(Some(lo))
}

/// The candidate pieces replacing the last two rows of a chain.
///
/// Every residue class modulo `a_{n-1}` that satisfies both rows is
/// represented by its smallest member of `R_n mod a_n`.
fn aggregate(chain: &[Constraint]) -> Vec<Interval> {
    let n = chain.len();
    let (prev, last) = (&chain[n - 2], &chain[n - 1]);
    let ratio = &last.capacity / &prev.capacity;
    let pieces = lift_intersection(&last.remainders(), &prev.remainders(), &prev.capacity, &ratio)
        .expect("capacities are positive");
    debug_assert!(pieces.len() <= MAX_AGGREGATION_PIECES);
    pieces
}

/// Aggregates the last two rows of the swept chain.
pub fn aggregate_last_two(inst: &NormalizedInstance) -> Result<AggregationResult> {
    let chain = nonempty_chain(inst)?;
    if chain.len() < 2 {
        return Err(Error::Precondition(format!(
            "aggregation needs at least two constraints, got {}",
            chain.len()
        )));
    }
    Ok(AggregationResult {
        pieces: aggregate(&chain),
    })
}

/// Smallest feasible `s` by repeated aggregation.
///
/// Each round replaces rows `n-1, n` by the candidates `E_1 < … < E_k`, probes
/// the reduced instances in ascending order and continues with the first
/// feasible one; since the candidates are disjoint and hold the smallest
/// representatives, that one contains the optimum.
pub fn min_s_aggregate(inst: &NormalizedInstance) -> Result<Option<BigInt>> {
    inst.require_harmonic()?;
    if inst.is_infeasible() {
        return Ok(None);
    }
    let mut chain = inst.chain();
    loop {
        match chain.len() {
            0 => return Ok(Some(BigInt::zero())),
            1 => {
                let c = &chain[0];
                let residues = ModSet::project(&c.remainders(), &c.capacity)?;
                return Ok(residues.min().cloned());
            }
            _ => {}
        }
        let pieces = aggregate(&chain);
        let last = chain.pop().expect("at least two rows");
        chain.pop();
        let mut next = None;
        for e in pieces {
            chain.push(Constraint {
                capacity: last.capacity.clone(),
                lower: e.lo().clone(),
                upper: e.hi().clone(),
            });
            if sweep(&chain) {
                next = Some(());
                break;
            }
            chain.pop();
        }
        if next.is_none() {
            return Ok(None);
        }
    }
}
