//! Feasibility test for harmonic instances in `O(n²)`.
//!
//! Sweeps the constraints from the largest capacity down. After processing
//! constraint `i`, the pieces `Q_i` project modulo `a_i` exactly onto the
//! residues of all `s ≥ 0` satisfying constraints `i..n`. Because `a_i`
//! divides `a_{i+1}`, projecting `Q_{i+1}` further down to `a_i` loses
//! nothing, and each step adds at most one piece.

use num_bigint::BigInt;

use crate::error::Result;
use crate::instance::{Constraint, NormalizedInstance};
use crate::interval::{Interval, ModSet};
use crate::modular::intersect_one_many;

/// The pieces `Q_i` kept for one constraint of the sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceLevel {
    pub modulus: BigInt,
    pub pieces: Vec<Interval>,
}

impl TraceLevel {
    pub fn to_modset(&self) -> ModSet {
        ModSet::from_representatives(self.modulus.clone(), &self.pieces)
            .expect("capacities are positive")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub feasible: bool,
    /// `Q_n, Q_{n-1}, …, Q_1` over the swept chain (domain row included).
    pub levels: Vec<TraceLevel>,
}

/// Whether some `s ≥ 0` in the domain satisfies every constraint.
pub fn feasible(inst: &NormalizedInstance) -> Result<bool> {
    inst.require_harmonic()?;
    if inst.is_infeasible() {
        return Ok(false);
    }
    Ok(sweep(&inst.chain()))
}

/// Like [`feasible`] but records every intermediate `Q_i`.
pub fn feasibility_trace(inst: &NormalizedInstance) -> Result<Trace> {
    inst.require_harmonic()?;
    if inst.is_infeasible() {
        return Ok(Trace {
            feasible: false,
            levels: Vec::new(),
        });
    }
    let chain = inst.chain();
    let mut levels: Vec<TraceLevel> = Vec::with_capacity(chain.len());
    for (i, c) in chain.iter().enumerate().rev() {
        let pieces = match levels.last() {
            None => vec![c.remainders()],
            Some(prev) => step(c, &prev.pieces),
        };
        debug_assert!(pieces.len() <= chain.len() - i);
        levels.push(TraceLevel {
            modulus: c.capacity.clone(),
            pieces,
        });
    }
    let feasible = levels.last().is_none_or(|l| !l.pieces.is_empty());
    Ok(Trace { feasible, levels })
}

fn step(c: &Constraint, prev: &[Interval]) -> Vec<Interval> {
    intersect_one_many(&c.remainders(), prev, &c.capacity).expect("capacities are positive")
}

/// The sweep over a harmonic chain of tight rows sorted by capacity.
pub(crate) fn sweep(chain: &[Constraint]) -> bool {
    let Some((last, rest)) = chain.split_last() else {
        return true;
    };
    let mut q = vec![last.remainders()];
    for c in rest.iter().rev() {
        q = step(c, &q);
        if q.is_empty() {
            return false;
        }
    }
    true
}
