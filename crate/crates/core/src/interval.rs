//! Integer intervals and canonical residue sets.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arith::modulo;
use crate::error::{Error, Result};

/// A nonempty closed range `[lo, hi]` of integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
}

impl Interval {
    pub fn new(lo: impl Into<BigInt>, hi: impl Into<BigInt>) -> Result<Self> {
        let (lo, hi) = (lo.into(), hi.into());
        if lo > hi {
            return Err(Error::EmptyInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    /// Returns `None` instead of an error when `lo > hi`.
    pub fn checked(lo: BigInt, hi: BigInt) -> Option<Self> {
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn point(x: impl Into<BigInt>) -> Self {
        let x = x.into();
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi(&self) -> &BigInt {
        &self.hi
    }

    /// Number of integers in the interval.
    pub fn len(&self) -> BigInt {
        &self.hi - &self.lo + 1
    }

    pub fn contains(&self, x: &BigInt) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        Interval::checked(
            (&self.lo).max(&other.lo).clone(),
            (&self.hi).min(&other.hi).clone(),
        )
    }

    pub fn shift(&self, by: &BigInt) -> Interval {
        Interval {
            lo: &self.lo + by,
            hi: &self.hi + by,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// A set of residues modulo `modulus`, stored as sorted, disjoint,
/// non-adjacent parts inside `[0, modulus)`.
///
/// The representation is linear: a residue set that wraps around zero,
/// such as `{9, 0, 1}` modulo 10, is stored as `[0, 1], [9, 9]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModSet {
    modulus: BigInt,
    parts: Vec<Interval>,
}

impl ModSet {
    pub fn empty(modulus: BigInt) -> Result<Self> {
        check_modulus(&modulus)?;
        Ok(ModSet {
            modulus,
            parts: Vec::new(),
        })
    }

    pub fn full(modulus: BigInt) -> Result<Self> {
        check_modulus(&modulus)?;
        let top = &modulus - 1;
        Ok(ModSet {
            parts: vec![Interval {
                lo: BigInt::from(0),
                hi: top,
            }],
            modulus,
        })
    }

    /// Builds the canonical form from arbitrary parts that already lie in
    /// `[0, modulus)`: sorts them and merges overlapping or adjacent parts.
    pub fn from_parts(modulus: BigInt, parts: Vec<Interval>) -> Result<Self> {
        check_modulus(&modulus)?;
        for p in &parts {
            if p.lo.is_negative() || p.hi >= modulus {
                return Err(Error::Precondition(format!(
                    "part {p} is not inside [0, {modulus})"
                )));
            }
        }
        Ok(ModSet {
            modulus,
            parts: merge_sorted(parts),
        })
    }

    /// The union of the residue images of arbitrary intervals.
    pub fn from_representatives<'a, I>(modulus: BigInt, reps: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Interval>,
    {
        check_modulus(&modulus)?;
        let mut parts = Vec::new();
        for r in reps {
            parts.extend(project_parts(r, &modulus));
        }
        Ok(ModSet {
            modulus,
            parts: merge_sorted(parts),
        })
    }

    /// `{z mod modulus : z in v}`; at most two parts.
    pub fn project(v: &Interval, modulus: &BigInt) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(ModSet {
            modulus: modulus.clone(),
            parts: project_parts(v, modulus),
        })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of residues in the set.
    pub fn count(&self) -> BigInt {
        self.parts.iter().map(Interval::len).sum()
    }

    /// Whether `x mod modulus` lies in the set. Binary search over parts.
    pub fn contains(&self, x: &BigInt) -> bool {
        let r = modulo(x, &self.modulus);
        let idx = self.parts.partition_point(|p| p.hi < r);
        self.parts.get(idx).is_some_and(|p| p.lo <= r)
    }

    pub fn min(&self) -> Option<&BigInt> {
        self.parts.first().map(Interval::lo)
    }

    pub fn max(&self) -> Option<&BigInt> {
        self.parts.last().map(Interval::hi)
    }

    /// Intersection with a linear interval of residues.
    pub fn intersect_interval(&self, seg: &Interval) -> ModSet {
        let parts = self
            .parts
            .iter()
            .filter_map(|p| p.intersect(seg))
            .collect();
        ModSet {
            modulus: self.modulus.clone(),
            parts,
        }
    }

    /// Removes a linear interval of residues.
    pub fn subtract_interval(&self, seg: &Interval) -> ModSet {
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        for p in &self.parts {
            if p.hi < seg.lo || p.lo > seg.hi {
                parts.push(p.clone());
                continue;
            }
            if p.lo < seg.lo {
                parts.push(Interval {
                    lo: p.lo.clone(),
                    hi: &seg.lo - 1,
                });
            }
            if p.hi > seg.hi {
                parts.push(Interval {
                    lo: &seg.hi + 1,
                    hi: p.hi.clone(),
                });
            }
        }
        ModSet {
            modulus: self.modulus.clone(),
            parts,
        }
    }

    /// Intersection of two sets over the same modulus.
    pub fn intersect(&self, other: &ModSet) -> Result<ModSet> {
        if self.modulus != other.modulus {
            return Err(Error::Precondition(format!(
                "moduli differ: {} vs {}",
                self.modulus, other.modulus
            )));
        }
        let (mut i, mut j) = (0, 0);
        let mut parts = Vec::new();
        while i < self.parts.len() && j < other.parts.len() {
            let (a, b) = (&self.parts[i], &other.parts[j]);
            if let Some(x) = a.intersect(b) {
                parts.push(x);
            }
            if a.hi < b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        Ok(ModSet {
            modulus: self.modulus.clone(),
            parts,
        })
    }

    /// Checks the canonical-form invariants.
    pub fn is_canonical(&self) -> bool {
        if self.modulus < BigInt::one() {
            return false;
        }
        let inside = self
            .parts
            .iter()
            .all(|p| !p.lo.is_negative() && p.lo <= p.hi && p.hi < self.modulus);
        let separated = self
            .parts
            .windows(2)
            .all(|w| &w[0].hi + 1 < w[1].lo);
        inside && separated
    }
}

impl fmt::Display for ModSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}} mod {}", self.modulus)
    }
}

pub(crate) fn check_modulus(m: &BigInt) -> Result<()> {
    if *m < BigInt::one() {
        return Err(Error::InvalidModulus(m.clone()));
    }
    Ok(())
}

fn project_parts(v: &Interval, m: &BigInt) -> Vec<Interval> {
    if &v.len() >= m {
        return vec![Interval {
            lo: BigInt::from(0),
            hi: m - 1,
        }];
    }
    let l = modulo(&v.lo, m);
    let u = modulo(&v.hi, m);
    if l <= u {
        vec![Interval { lo: l, hi: u }]
    } else {
        vec![
            Interval {
                lo: BigInt::from(0),
                hi: u,
            },
            Interval { lo: l, hi: m - 1 },
        ]
    }
}

fn merge_sorted(mut parts: Vec<Interval>) -> Vec<Interval> {
    parts.sort_unstable_by(|a, b| a.lo.cmp(&b.lo));
    let mut out: Vec<Interval> = Vec::with_capacity(parts.len());
    for p in parts {
        match out.last_mut() {
            Some(last) if p.lo <= &last.hi + 1 => {
                if p.hi > last.hi {
                    last.hi = p.hi;
                }
            }
            _ => out.push(p),
        }
    }
    out
}
