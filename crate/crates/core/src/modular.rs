//! Intersections of modular projections of integer intervals.
//!
//! For an interval `v` and modulus `α`, the projection `v mod α` is either a
//! single residue range or two ranges touching `0` and `α - 1`. The functions
//! here compute intersections of such projections without enumerating
//! residues, so they stay exact and cheap for arbitrary-precision moduli.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::modulo;
use crate::error::Result;
use crate::interval::{check_modulus, Interval, ModSet};

/// `[lo(v) mod α, hi(w) mod α]`, or `None` when that range is empty.
pub fn phi(v: &Interval, w: &Interval, alpha: &BigInt) -> Result<Option<Interval>> {
    check_modulus(alpha)?;
    Ok(Interval::checked(
        modulo(v.lo(), alpha),
        modulo(w.hi(), alpha),
    ))
}

/// `[max(lo(v), lo(w)) mod α, α + min(hi(v), hi(w)) mod α]`.
///
/// Symmetric in `v` and `w`. When both projections wrap around zero, the
/// projection of this interval is the part of the intersection that wraps.
pub fn psi(v: &Interval, w: &Interval, alpha: &BigInt) -> Result<Interval> {
    check_modulus(alpha)?;
    let lo = modulo(v.lo(), alpha).max(modulo(w.lo(), alpha));
    let hi = alpha + modulo(v.hi(), alpha).min(modulo(w.hi(), alpha));
    Ok(Interval::checked(lo, hi).expect("psi is never empty"))
}

/// Representatives of `v mod α ∩ w mod α`: at most two intervals whose
/// projections cover the intersection exactly.
///
/// Follows the case split on which of the two projections wrap around zero.
/// The pieces are not canonicalized; a piece may extend past `α - 1`.
pub fn intersect_pair_pieces(v: &Interval, w: &Interval, alpha: &BigInt) -> Result<Vec<Interval>> {
    check_modulus(alpha)?;
    let full_v = &v.len() >= alpha;
    let full_w = &w.len() >= alpha;
    match (full_v, full_w) {
        (true, true) => return Ok(vec![Interval::checked(BigInt::zero(), alpha - 1).unwrap()]),
        (true, false) => return Ok(vec![w.clone()]),
        (false, true) => return Ok(vec![v.clone()]),
        (false, false) => {}
    }
    let (lv, uv) = (modulo(v.lo(), alpha), modulo(v.hi(), alpha));
    let (lw, uw) = (modulo(w.lo(), alpha), modulo(w.hi(), alpha));
    let wrap_v = uv < lv;
    let wrap_w = uw < lw;

    let mut pieces = Vec::with_capacity(2);
    match (wrap_v, wrap_w) {
        (true, true) => {
            // Both projections contain 0 and α - 1, so the wrapping part is
            // always present; at most one of the two crossings exists.
            pieces.push(psi(v, w, alpha)?);
            if uw >= lv {
                pieces.extend(phi(v, w, alpha)?);
            } else if uv >= lw {
                pieces.extend(phi(w, v, alpha)?);
            }
        }
        (false, true) => pieces.extend(straight_vs_wrapped(lv, uv, &lw, &uw)),
        (true, false) => pieces.extend(straight_vs_wrapped(lw, uw, &lv, &uv)),
        (false, false) => pieces.extend(Interval::checked(lv.max(lw), uv.min(uw))),
    }
    Ok(pieces)
}

/// `[ls, us] ∩ ([0, uw] ∪ [lw, α))` for a non-wrapping range `[ls, us]`.
fn straight_vs_wrapped(ls: BigInt, us: BigInt, lw: &BigInt, uw: &BigInt) -> Vec<Interval> {
    let mut out = Vec::with_capacity(2);
    if &ls <= uw {
        out.push(Interval::checked(ls.clone(), (&us).min(uw).clone()).unwrap());
    }
    if lw <= &us {
        out.push(Interval::checked((&ls).max(lw).clone(), us).unwrap());
    }
    out
}

/// `v mod α ∩ w mod α` in canonical form.
pub fn intersect_pair(v: &Interval, w: &Interval, alpha: &BigInt) -> Result<ModSet> {
    let pieces = intersect_pair_pieces(v, w, alpha)?;
    ModSet::from_representatives(alpha.clone(), &pieces)
}

/// How one interval `w` of the many meets the projection of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Overlap {
    /// No common residue.
    Disjoint,
    /// `w mod α` lies inside `v mod α`; carries the matching subinterval of `v`.
    Contained(Interval),
    /// The intersection is a prefix of `v`'s residue arc (of the given
    /// length) together with a suffix (of the given length). Either may be
    /// zero; both together may cover all of `v`.
    Anchored { prefix: BigInt, suffix: BigInt },
}

/// Classifies `w` against `v` modulo `α` for a `v` shorter than `α`.
///
/// Works in offsets relative to `lo(v)`: `v`'s arc is `[0, len(v))`, and `w`'s
/// arc starts at `(lo(w) - lo(v)) mod α`. Every intersection not contained in
/// `v`'s interior touches one of `v`'s ends.
pub fn classify(v: &Interval, w: &Interval, alpha: &BigInt) -> Overlap {
    let len_v = v.len();
    let len_w = w.len().min(alpha.clone());
    if &len_w == alpha {
        return Overlap::Anchored {
            prefix: len_v,
            suffix: BigInt::zero(),
        };
    }
    let start = modulo(&(w.lo() - v.lo()), alpha);
    let end: BigInt = &start + &len_w - 1; // may exceed α - 1 when w's arc wraps
    let last: BigInt = &len_v - 1;

    let mut prefix = BigInt::zero();
    let mut suffix = BigInt::zero();
    if &end >= alpha {
        // wrapped tail of w covers offsets [0, end - α]
        prefix = BigInt::min(&end - alpha, last.clone()) + 1;
    }
    if start <= last {
        if start.is_zero() {
            prefix = prefix.max(end.clone().min(last.clone()) + 1);
        } else if end >= last {
            suffix = &len_v - &start;
        } else {
            return Overlap::Contained(
                Interval::checked(v.lo() + &start, v.lo() + &end).unwrap(),
            );
        }
    }
    if prefix.is_zero() && suffix.is_zero() {
        Overlap::Disjoint
    } else {
        Overlap::Anchored { prefix, suffix }
    }
}

/// Representatives `R` with `(⋃R) mod α = v mod α ∩ (⋃Q) mod α` and
/// `|R| ≤ |Q| + 1`.
///
/// Intervals of `Q` whose projection sits strictly inside `v`'s contribute one
/// piece each. All others touch an end of `v`'s arc, and their intersections
/// collapse into the longest prefix and the longest suffix; if those meet, the
/// whole of `v` is returned. Every returned piece is a subinterval of `v`
/// (or of a member of `Q` when `v` covers every residue).
pub fn intersect_one_many(v: &Interval, q: &[Interval], alpha: &BigInt) -> Result<Vec<Interval>> {
    check_modulus(alpha)?;
    if &v.len() >= alpha {
        return Ok(q.to_vec());
    }
    let len_v = v.len();
    let mut out = Vec::new();
    let mut prefix = BigInt::zero();
    let mut suffix = BigInt::zero();
    for w in q {
        match classify(v, w, alpha) {
            Overlap::Disjoint => {}
            Overlap::Contained(piece) => out.push(piece),
            Overlap::Anchored { prefix: p, suffix: s } => {
                if p > prefix {
                    prefix = p;
                }
                if s > suffix {
                    suffix = s;
                }
            }
        }
    }
    if &prefix + &suffix >= len_v {
        return Ok(vec![v.clone()]);
    }
    if !prefix.is_zero() {
        out.push(Interval::checked(v.lo().clone(), v.lo() + &prefix - 1).unwrap());
    }
    if !suffix.is_zero() {
        out.push(Interval::checked(v.hi() - &suffix + 1, v.hi().clone()).unwrap());
    }
    Ok(out)
}

/// Disjoint pieces `D_0, …, D_{b-1}` inside `A mod ab` whose union projects
/// modulo `a` onto `A mod a ∩ B mod a`.
///
/// Block `i` covers `[ia, (i+1)a)`. Scanning blocks in ascending order, block
/// `i` keeps the residues of `B mod a` not already claimed by an earlier block,
/// so each residue class modulo `a` is represented by its smallest element of
/// `A mod ab`. Returned pieces are sorted ascending, pairwise disjoint, and have
/// pairwise disjoint images modulo `a`.
///
/// Only blocks that meet `A mod ab` are visited, and a block fully inside it
/// exhausts the remaining residues, so the work is constant per call.
pub fn lift_intersection(a_set: &Interval, b_set: &Interval, a: &BigInt, b: &BigInt) -> Result<Vec<Interval>> {
    check_modulus(a)?;
    check_modulus(b)?;
    let ab = a * b;
    let outer = ModSet::project(a_set, &ab)?;
    let mut remaining = ModSet::project(b_set, a)?;
    let mut pieces = Vec::new();
    'parts: for part in outer.parts() {
        let first = part.lo() / a;
        let last = part.hi() / a;
        let mut block = first;
        while block <= last {
            if remaining.is_empty() {
                break 'parts;
            }
            let base = &block * a;
            let seg_lo = (part.lo() - &base).max(BigInt::zero());
            let seg_hi = (part.hi() - &base).min(a - 1);
            let seg = Interval::checked(seg_lo, seg_hi).unwrap();
            let hit = remaining.intersect_interval(&seg);
            pieces.extend(hit.parts().iter().map(|p| p.shift(&base)));
            remaining = remaining.subtract_interval(&seg);
            block += 1;
        }
    }
    Ok(pieces)
}

/// Whether `x mod α` is in `set`.
pub fn member(x: &BigInt, set: &ModSet) -> bool {
    set.contains(x)
}
