//! Brute-force ground truth and the reduction from directed Diophantine
//! approximation.
//!
//! Nothing here uses the modular-interval machinery: the oracles enumerate
//! candidates and substitute them into the constraints as written.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::instance::{FscInstance, Solution};
use crate::response::TaskSet;

/// Default enumeration budget of the command-line oracle.
pub const DEFAULT_LIMIT: u64 = 10_000_000;

fn div_floor(x: &BigInt, d: &BigInt) -> BigInt {
    x.div_floor(d)
}

/// The witness for a given `s` on a raw instance, or `None`.
///
/// Rows with capacity zero require `b ≤ s ≤ B`. Other rows take the smallest
/// multiplier that lifts `s + a·x` to at least `b` and check it against `B`.
pub fn raw_solution(inst: &FscInstance, s: &BigInt) -> Option<Solution> {
    if s.is_negative() || inst.s_domain().is_some_and(|d| !d.contains(s)) {
        return None;
    }
    let mut x = Vec::with_capacity(inst.constraints().len());
    for c in inst.constraints() {
        if c.capacity.is_zero() {
            if &c.lower > s || s > &c.upper {
                return None;
            }
            x.push(BigInt::zero());
            continue;
        }
        let step = c.capacity.abs();
        // smallest k with s + step·k ≥ lower
        let k = -div_floor(&(s - &c.lower), &step);
        if s + &step * &k > c.upper {
            return None;
        }
        x.push(if c.capacity.is_negative() { -k } else { k });
    }
    Some(Solution { s: s.clone(), x })
}

/// `[lo, hi]` bounds on `s` from the domain and zero-capacity rows, plus the
/// period of the remaining rows.
struct Window {
    lo: BigInt,
    hi: Option<BigInt>,
    period: BigInt,
}

fn window(inst: &FscInstance) -> Window {
    let mut lo = BigInt::zero();
    let mut hi: Option<BigInt> = None;
    if let Some(d) = inst.s_domain() {
        lo = lo.max(d.lo().clone());
        hi = Some(d.hi().clone());
    }
    let mut period = BigInt::one();
    for c in inst.constraints() {
        if c.capacity.is_zero() {
            lo = lo.max(c.lower.clone());
            hi = Some(match hi {
                Some(h) => h.min(c.upper.clone()),
                None => c.upper.clone(),
            });
        } else {
            period = period.lcm(&c.capacity.abs());
        }
    }
    Window { lo, hi, period }
}

fn check_budget(first: &BigInt, last: &BigInt, limit: &BigInt) -> Result<()> {
    let needed = last - first + 1;
    if &needed > limit {
        return Err(Error::ResourceLimit {
            needed,
            limit: limit.clone(),
        });
    }
    Ok(())
}

/// Smallest feasible `s`, by ascending enumeration.
///
/// The feasible set is periodic with period `lcm(|a_i|)` above the lower
/// bound, so one period starting at the lower bound decides the instance.
/// Refuses with [`Error::ResourceLimit`] rather than truncating.
pub fn oracle_min_s(inst: &FscInstance, limit: &BigInt) -> Result<Option<BigInt>> {
    let w = window(inst);
    let mut last = &w.lo + &w.period - 1;
    if let Some(h) = &w.hi {
        if h < &last {
            last = h.clone();
        }
    }
    if last < w.lo {
        return Ok(None);
    }
    check_budget(&w.lo, &last, limit)?;
    let mut s = w.lo;
    while s <= last {
        if raw_solution(inst, &s).is_some() {
            return Ok(Some(s));
        }
        s += 1;
    }
    Ok(None)
}

/// Largest feasible `s`: in the bounded window when the domain or a
/// zero-capacity row bounds `s`, otherwise in `[lo, lo + lcm)`.
pub fn oracle_max_s(inst: &FscInstance, limit: &BigInt) -> Result<Option<BigInt>> {
    let w = window(inst);
    let (first, last) = match &w.hi {
        Some(h) => (BigInt::max(h - &w.period + 1, w.lo.clone()), h.clone()),
        None => (w.lo.clone(), &w.lo + &w.period - 1),
    };
    if last < first {
        return Ok(None);
    }
    check_budget(&first, &last, limit)?;
    let mut s = last;
    while s >= first {
        if raw_solution(inst, &s).is_some() {
            return Ok(Some(s));
        }
        s -= 1;
    }
    Ok(None)
}

/// Every feasible `s` in `[0, bound)`, ascending.
pub fn oracle_feasible_below(inst: &FscInstance, bound: &BigInt, limit: &BigInt) -> Result<Vec<BigInt>> {
    check_budget(&BigInt::zero(), &(bound - 1), limit)?;
    let mut out = Vec::new();
    let mut s = BigInt::zero();
    while &s < bound {
        if raw_solution(inst, &s).is_some() {
            out.push(s.clone());
        }
        s += 1;
    }
    Ok(out)
}

/// Find `Q ∈ {1..N}` with every fractional part of `Q·α_i` at most `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DdaInstance {
    alphas: Vec<BigRational>,
    n: BigInt,
    eps: BigRational,
}

impl DdaInstance {
    pub fn new(alphas: Vec<BigRational>, n: BigInt, eps: BigRational) -> Result<Self> {
        if alphas.iter().any(|a| a.is_negative()) {
            return Err(Error::Precondition("approximated numbers must be nonnegative".into()));
        }
        if n < BigInt::one() {
            return Err(Error::Precondition(format!("N must be at least 1, got {n}")));
        }
        if !eps.is_positive() || eps >= BigRational::one() {
            return Err(Error::Precondition(format!("eps must lie strictly between 0 and 1, got {eps}")));
        }
        Ok(DdaInstance { alphas, n, eps })
    }

    pub fn alphas(&self) -> &[BigRational] {
        &self.alphas
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn eps(&self) -> &BigRational {
        &self.eps
    }

    /// `λ`, the product of the numerators of the reduced `α_i`.
    pub fn lambda(&self) -> BigInt {
        self.alphas.iter().map(|a| a.numer().clone()).product()
    }
}

/// The bounded-mixing-set instance whose feasibility matches the
/// approximation problem, with `s = λ·Q`:
///
/// ```text
/// 0 ≤ s - (λ/α_i)·y_i ≤ ⌊(λ/α_i)·ε⌋   for each i
/// λ ≤ s - 0·y         ≤ λ·N
/// 0 ≤ s - λ·y'        ≤ 0
/// ```
///
/// Capacities are written with positive sign; the multipliers are free.
pub fn dda_to_bms(d: &DdaInstance) -> Result<FscInstance> {
    let lambda = d.lambda();
    if lambda.is_zero() {
        return Err(Error::Degenerate("some alpha is zero, so lambda = 0".into()));
    }
    let (ep, eq) = (d.eps.numer(), d.eps.denom());
    let mut caps = Vec::with_capacity(d.alphas.len() + 2);
    let mut lower = Vec::with_capacity(d.alphas.len() + 2);
    let mut upper = Vec::with_capacity(d.alphas.len() + 2);
    for a in &d.alphas {
        // λ/α = (λ/β)·γ
        let cap = (&lambda / a.numer()) * a.denom();
        upper.push(div_floor(&(&cap * ep), eq));
        lower.push(BigInt::zero());
        caps.push(cap);
    }
    caps.push(BigInt::zero());
    lower.push(lambda.clone());
    upper.push(&lambda * &d.n);
    caps.push(lambda.clone());
    lower.push(BigInt::zero());
    upper.push(BigInt::zero());
    FscInstance::from_arrays(&caps, &lower, &upper)
}

/// Least `Q ∈ {1..N}` whose multiples have all fractional parts at most `ε`.
pub fn oracle_dda(d: &DdaInstance) -> Option<BigInt> {
    let mut q = BigInt::one();
    while q <= d.n {
        let ok = d.alphas.iter().all(|a| {
            let v = a * BigRational::from_integer(q.clone());
            v.fract() <= d.eps
        });
        if ok {
            return Some(q);
        }
        q += 1;
    }
    None
}

/// Whether the reduced instance and the approximation problem agree on
/// feasibility, both decided by enumeration.
pub fn reduction_roundtrip(d: &DdaInstance, limit: &BigInt) -> Result<bool> {
    let bms = dda_to_bms(d)?;
    let reduced = oracle_min_s(&bms, limit)?;
    Ok(reduced.is_some() == oracle_dda(d).is_some())
}

/// Smallest `x_n` of the response-time system with `x_1 = 1`, by enumerating
/// `x_n` over the window allowed by task 1 and substituting.
pub fn oracle_response(ts: &TaskSet) -> Option<BigInt> {
    let tasks = ts.tasks();
    let n = tasks.len();
    if n == 1 {
        return Some(BigInt::one());
    }
    let last = &tasks[n - 1];
    let first = &tasks[0];
    let v1 = &first.j + &first.t;
    // v1 ≤ J_n + T_n·x_n ≤ v1 + c_1
    let mut x_n = -div_floor(&(&last.j - &v1), &last.t);
    loop {
        let w = &last.j + &last.t * &x_n;
        if w > &v1 + ts.tail(0) {
            return None;
        }
        let ok = (1..n - 1).all(|j| {
            let tj = &tasks[j];
            // largest x_j with J_j + T_j·x_j ≤ w
            let xj = div_floor(&(&w - &tj.j), &tj.t);
            w <= &tj.j + &tj.t * xj + ts.tail(j)
        });
        if ok {
            return Some(x_n);
        }
        x_n += 1;
    }
}
