//! Problem instances, normalization and single-guess checks.
//!
//! A constraint `b ≤ s + a·x ≤ B` asks for an integer multiplier `x`; in
//! congruence form it says `s mod a` lies in the projection of `[b, B]`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{ceil_div, floor_div, lcm_all};
use crate::error::{Error, Result};
use crate::interval::Interval;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub capacity: BigInt,
    pub lower: BigInt,
    pub upper: BigInt,
}

impl Constraint {
    pub fn new(capacity: impl Into<BigInt>, lower: impl Into<BigInt>, upper: impl Into<BigInt>) -> Result<Self> {
        let c = Constraint {
            capacity: capacity.into(),
            lower: lower.into(),
            upper: upper.into(),
        };
        if c.lower > c.upper {
            return Err(Error::InvertedBounds {
                index: 0,
                lower: c.lower,
                upper: c.upper,
            });
        }
        Ok(c)
    }

    /// The remainder interval `[b, B]`.
    pub fn remainders(&self) -> Interval {
        Interval::checked(self.lower.clone(), self.upper.clone()).expect("lower <= upper")
    }

    pub fn width(&self) -> BigInt {
        &self.upper - &self.lower + 1
    }

    /// `B - b + 1 < a`: at most one multiplier fits for any `s`.
    pub fn is_tight(&self) -> bool {
        self.width() < self.capacity
    }

    /// The multiplier for `s` if one exists, assuming `capacity > 0`.
    pub fn multiplier(&self, s: &BigInt) -> Option<BigInt> {
        let x = ceil_div(&(&self.lower - s), &self.capacity);
        (x == floor_div(&(&self.upper - s), &self.capacity)).then_some(x)
    }

    /// Whether `lower ≤ s + capacity·x ≤ upper`.
    pub fn holds(&self, s: &BigInt, x: &BigInt) -> bool {
        let v = s + &self.capacity * x;
        self.lower <= v && v <= self.upper
    }
}

/// A raw bounded-mixing-set instance: constraints in input order plus an
/// optional restriction of `s` to a nonnegative interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FscInstance {
    constraints: Vec<Constraint>,
    s_domain: Option<Interval>,
}

impl FscInstance {
    pub fn new(constraints: Vec<Constraint>, s_domain: Option<Interval>) -> Result<Self> {
        for (index, c) in constraints.iter().enumerate() {
            if c.lower > c.upper {
                return Err(Error::InvertedBounds {
                    index,
                    lower: c.lower.clone(),
                    upper: c.upper.clone(),
                });
            }
        }
        if let Some(d) = &s_domain {
            if d.lo().is_negative() {
                return Err(Error::NegativeDomain(d.lo().clone()));
            }
        }
        Ok(FscInstance {
            constraints,
            s_domain,
        })
    }

    /// Builds an instance from parallel arrays.
    pub fn from_arrays(capacities: &[BigInt], lower: &[BigInt], upper: &[BigInt]) -> Result<Self> {
        if capacities.len() != lower.len() || capacities.len() != upper.len() {
            return Err(Error::LengthMismatch {
                left: capacities.len(),
                right: lower.len().min(upper.len()),
            });
        }
        let constraints = capacities
            .iter()
            .zip(lower)
            .zip(upper)
            .map(|((a, b), u)| Constraint {
                capacity: a.clone(),
                lower: b.clone(),
                upper: u.clone(),
            })
            .collect();
        FscInstance::new(constraints, None)
    }

    pub fn with_domain(mut self, s_domain: Option<Interval>) -> Result<Self> {
        if let Some(d) = &s_domain {
            if d.lo().is_negative() {
                return Err(Error::NegativeDomain(d.lo().clone()));
            }
        }
        self.s_domain = s_domain;
        Ok(self)
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn s_domain(&self) -> Option<&Interval> {
        self.s_domain.as_ref()
    }
}

/// Where a normalized constraint came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Input constraint `index`; `flipped` when its capacity sign was negated.
    Input { index: usize, flipped: bool },
    /// Encodes the solution domain.
    Domain,
    /// A bound on `s` added by an optimization routine.
    Measure,
}

/// What happened to each input constraint during normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Fate {
    Kept { position: usize, flipped: bool },
    /// Too wide to restrict `s`; the sign-adjusted row is kept for solutions.
    Redundant { row: Constraint, flipped: bool },
    /// Zero capacity, folded into the domain.
    Folded,
}

/// Instance with positive capacities, tight remainder intervals, ascending
/// capacities, and zero-capacity rows folded into the domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedInstance {
    constraints: Vec<Constraint>,
    provenance: Vec<Origin>,
    s_domain: Option<Interval>,
    fates: Vec<Fate>,
    infeasible: bool,
    harmonic: bool,
}

/// A witness `(s, x)` with `x` indexed like the input constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub s: BigInt,
    pub x: Vec<BigInt>,
}

impl Solution {
    /// Checks every constraint of the raw instance, including the domain.
    pub fn satisfies(&self, inst: &FscInstance) -> bool {
        if self.s.is_negative() || self.x.len() != inst.constraints.len() {
            return false;
        }
        if inst.s_domain.as_ref().is_some_and(|d| !d.contains(&self.s)) {
            return false;
        }
        inst.constraints
            .iter()
            .zip(&self.x)
            .all(|(c, x)| c.holds(&self.s, x))
    }
}

/// Sign flips, removal of wide rows, folding of zero-capacity rows, and a
/// stable sort by capacity.
pub fn normalize(inst: &FscInstance) -> NormalizedInstance {
    let mut domain: Option<(BigInt, Option<BigInt>)> =
        inst.s_domain.as_ref().map(|d| (d.lo().clone(), Some(d.hi().clone())));
    let mut kept: Vec<(Constraint, Origin)> = Vec::new();
    let mut fates = Vec::with_capacity(inst.constraints.len());

    for (index, c) in inst.constraints.iter().enumerate() {
        if c.capacity.is_zero() {
            let (lo, hi) = domain.take().unwrap_or((BigInt::zero(), None));
            let lo = lo.max(c.lower.clone());
            let hi = match hi {
                Some(h) => h.min(c.upper.clone()),
                None => c.upper.clone(),
            };
            domain = Some((lo, Some(hi)));
            fates.push(Fate::Folded);
            continue;
        }
        let flipped = c.capacity.is_negative();
        let row = Constraint {
            capacity: c.capacity.abs(),
            lower: c.lower.clone(),
            upper: c.upper.clone(),
        };
        if row.is_tight() {
            fates.push(Fate::Kept {
                position: kept.len(),
                flipped,
            });
            kept.push((row, Origin::Input { index, flipped }));
        } else {
            fates.push(Fate::Redundant { row, flipped });
        }
    }

    let mut order: Vec<usize> = (0..kept.len()).collect();
    order.sort_by(|&i, &j| kept[i].0.capacity.cmp(&kept[j].0.capacity));
    let mut rank = vec![0; kept.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    for f in &mut fates {
        if let Fate::Kept { position, .. } = f {
            *position = rank[*position];
        }
    }
    let mut slots: Vec<Option<(Constraint, Origin)>> = kept.into_iter().map(Some).collect();
    let (constraints, provenance): (Vec<_>, Vec<_>) =
        order.iter().map(|&i| slots[i].take().unwrap()).unzip();

    let mut infeasible = false;
    let s_domain = match domain {
        None => None,
        Some((lo, hi)) => {
            let lo = lo.max(BigInt::zero());
            let hi = hi.expect("zero-capacity rows and explicit domains are bounded");
            let d = Interval::checked(lo, hi);
            infeasible = d.is_none();
            d
        }
    };
    let harmonic = constraints
        .windows(2)
        .all(|w| (&w[1].capacity % &w[0].capacity).is_zero());

    NormalizedInstance {
        constraints,
        provenance,
        s_domain,
        fates,
        infeasible,
        harmonic,
    }
}

impl NormalizedInstance {
    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn provenance(&self) -> &[Origin] {
        &self.provenance
    }

    pub fn s_domain(&self) -> Option<&Interval> {
        self.s_domain.as_ref()
    }

    /// Set when the folded domain is empty; no `s` can be feasible.
    pub fn is_infeasible(&self) -> bool {
        self.infeasible
    }

    pub fn is_harmonic(&self) -> bool {
        self.harmonic
    }

    /// Number of constraints of the input instance.
    pub fn input_len(&self) -> usize {
        self.fates.len()
    }

    /// Errors with the first consecutive pair whose ratio is not integral.
    pub fn require_harmonic(&self) -> Result<()> {
        if self.harmonic {
            return Ok(());
        }
        for (i, w) in self.constraints.windows(2).enumerate() {
            if !(&w[1].capacity % &w[0].capacity).is_zero() {
                let index_of = |pos: usize| match self.provenance[pos] {
                    Origin::Input { index, .. } => index,
                    _ => pos,
                };
                return Err(Error::NotHarmonic {
                    lower_index: index_of(i),
                    lower: w[0].capacity.clone(),
                    upper_index: index_of(i + 1),
                    upper: w[1].capacity.clone(),
                });
            }
        }
        Ok(())
    }

    /// Intersects the domain with `[lo, hi]` (and the nonnegative integers).
    pub fn restrict_domain(&mut self, lo: BigInt, hi: BigInt) {
        if self.infeasible {
            return;
        }
        let (lo, hi) = match &self.s_domain {
            Some(d) => (lo.max(d.lo().clone()), hi.min(d.hi().clone())),
            None => (lo, hi),
        };
        self.s_domain = Interval::checked(lo.max(BigInt::zero()), hi);
        self.infeasible = self.s_domain.is_none();
    }

    /// The largest capacity, or `1` with no constraints.
    pub fn top_capacity(&self) -> BigInt {
        self.constraints
            .last()
            .map(|c| c.capacity.clone())
            .unwrap_or_else(BigInt::one)
    }

    /// The constraints actually swept by the harmonic algorithms: the
    /// normalized rows, followed by the domain encoded as a row.
    ///
    /// A domain `[l, u]` becomes capacity `2·top·⌈(u+1)/top⌉` with remainders
    /// `[l, u]`. The capacity is a multiple of every other capacity and
    /// exceeds `u`, so the row admits exactly the `s` in `[l, u]` below it.
    pub fn chain(&self) -> Vec<Constraint> {
        let mut rows = self.constraints.clone();
        if let Some(d) = &self.s_domain {
            rows.push(domain_row(&self.top_capacity(), d));
        }
        rows
    }

    pub(crate) fn chain_provenance(&self) -> Vec<Origin> {
        let mut p = self.provenance.clone();
        if self.s_domain.is_some() {
            p.push(Origin::Domain);
        }
        p
    }

    /// Builds an instance over an already harmonic, tight, sorted chain.
    pub(crate) fn from_chain(constraints: Vec<Constraint>, provenance: Vec<Origin>, fates_from: &NormalizedInstance) -> Self {
        debug_assert_eq!(constraints.len(), provenance.len());
        let harmonic = constraints
            .windows(2)
            .all(|w| (&w[1].capacity % &w[0].capacity).is_zero());
        // Input rows keep their positions; appended rows go last.
        NormalizedInstance {
            constraints,
            provenance,
            s_domain: None,
            fates: fates_from.fates.clone(),
            infeasible: fates_from.infeasible,
            harmonic,
        }
    }
}

pub(crate) fn domain_row(top: &BigInt, d: &Interval) -> Constraint {
    let blocks = ceil_div(&(d.hi() + 1), top);
    Constraint {
        capacity: BigInt::from(2) * top * blocks,
        lower: d.lo().clone(),
        upper: d.hi().clone(),
    }
}

/// `lcm` of all capacities; `1` for an empty instance. Equals the largest
/// capacity when the instance is harmonic. Every feasible instance has a
/// solution below this bound.
pub fn solution_upper_bound(inst: &NormalizedInstance) -> BigInt {
    lcm_all(inst.constraints.iter().map(|c| &c.capacity))
}

/// Decides a single guess `s` in time linear in the number of constraints.
///
/// Returns the unique witness, with multipliers of redundant rows filled in
/// by `⌈(b - s)/a⌉` and signs restored for flipped rows.
pub fn check_guess(inst: &NormalizedInstance, s: &BigInt) -> Option<Solution> {
    if inst.infeasible || s.is_negative() {
        return None;
    }
    if inst.s_domain.as_ref().is_some_and(|d| !d.contains(s)) {
        return None;
    }
    let mut xs = Vec::with_capacity(inst.constraints.len());
    for c in &inst.constraints {
        xs.push(c.multiplier(s)?);
    }
    let sign = |x: BigInt, flipped: bool| if flipped { -x } else { x };
    let x = inst
        .fates
        .iter()
        .map(|f| match f {
            Fate::Kept { position, flipped } => sign(xs[*position].clone(), *flipped),
            Fate::Redundant { row, flipped } => {
                sign(ceil_div(&(&row.lower - s), &row.capacity), *flipped)
            }
            Fate::Folded => BigInt::zero(),
        })
        .collect();
    Some(Solution { s: s.clone(), x })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    pub(crate) fn inst(rows: &[(i64, i64, i64)]) -> FscInstance {
        let cs = rows
            .iter()
            .map(|&(a, l, u)| Constraint::new(a, l, u).unwrap())
            .collect();
        FscInstance::new(cs, None).unwrap()
    }

    #[test]
    fn normalize_flips_signs() {
        let n = normalize(&inst(&[(2, 1, 1), (-4, -3, -2), (12, 7, 8)]));
        let caps: Vec<_> = n.constraints().iter().map(|c| c.capacity.clone()).collect();
        assert_eq!(caps, vec![b(2), b(4), b(12)]);
        assert_eq!(n.constraints()[1].lower, b(-3));
        assert_eq!(n.provenance()[1], Origin::Input { index: 1, flipped: true });
        assert!(n.is_harmonic());
    }

    #[test]
    fn normalize_drops_wide_rows() {
        let n = normalize(&inst(&[(3, 0, 5)]));
        assert!(n.constraints().is_empty());
        assert!(!n.is_infeasible());
    }

    #[test]
    fn normalize_folds_zero_capacities() {
        let n = normalize(&inst(&[(0, 3, 9), (0, 5, 12), (2, 1, 1)]));
        assert_eq!(n.constraints().len(), 1);
        assert_eq!(n.s_domain(), Some(&Interval::new(5, 9).unwrap()));
    }

    #[test]
    fn normalize_flags_empty_domain() {
        let n = normalize(&inst(&[(0, -5, -1), (2, 1, 1)]));
        assert!(n.is_infeasible());
        let n = normalize(&inst(&[(0, 0, 3), (0, 5, 6)]));
        assert!(n.is_infeasible());
    }

    #[test]
    fn normalize_sorts_stably() {
        let n = normalize(&inst(&[(12, 7, 8), (4, 2, 3), (4, 0, 0), (2, 1, 1)]));
        let idx: Vec<_> = n
            .provenance()
            .iter()
            .map(|o| match o {
                Origin::Input { index, .. } => *index,
                _ => usize::MAX,
            })
            .collect();
        assert_eq!(idx, vec![3, 1, 2, 0]);
    }

    #[test]
    fn check_guess_examples() {
        let n = normalize(&inst(&[(2, 1, 1), (4, 2, 3), (12, 7, 8)]));
        let sol = check_guess(&n, &b(7)).unwrap();
        assert_eq!(sol.x, vec![b(-3), b(-1), b(0)]);
        assert!(check_guess(&n, &b(0)).is_none());

        let n = normalize(&inst(&[(5, 2, 3)]));
        assert_eq!(check_guess(&n, &b(8)).unwrap().x, vec![b(-1)]);
    }

    #[test]
    fn check_guess_restores_input_order_and_signs() {
        let raw = inst(&[(12, 7, 8), (-4, 2, 3), (3, 0, 5), (0, 0, 100), (2, 1, 1)]);
        let n = normalize(&raw);
        let sol = check_guess(&n, &b(7)).unwrap();
        assert!(sol.satisfies(&raw));
        assert_eq!(sol.x[1], b(1));
        assert_eq!(sol.x[3], b(0));
    }

    #[test]
    fn check_guess_respects_domain() {
        let raw = inst(&[(5, 2, 3)]).with_domain(Some(Interval::new(10, 20).unwrap())).unwrap();
        let n = normalize(&raw);
        assert!(check_guess(&n, &b(7)).is_none());
        assert!(check_guess(&n, &b(12)).is_some());
    }

    #[test]
    fn upper_bound_is_lcm() {
        assert_eq!(solution_upper_bound(&normalize(&inst(&[(2, 1, 1), (4, 2, 3), (12, 7, 8)]))), b(12));
        assert_eq!(solution_upper_bound(&normalize(&inst(&[(4, 1, 1), (6, 2, 3)]))), b(12));
        assert_eq!(solution_upper_bound(&normalize(&inst(&[]))), b(1));
    }

    #[test]
    fn non_harmonic_error_names_input_rows() {
        let n = normalize(&inst(&[(6, 1, 1), (4, 0, 0)]));
        match n.require_harmonic() {
            Err(Error::NotHarmonic { lower_index, upper_index, .. }) => {
                assert_eq!((lower_index, upper_index), (1, 0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
