//! Response-time system for harmonic tasks with release jitter.
//!
//! Tasks `τ_1 … τ_n` have periods that divide their predecessors'
//! (`T_i mod T_{i+1} = 0`); `τ_n` is the analyzed task. With
//! `c_i = C_{i+1} + … + C_{n-1}` and `x_1 = 1`, the system is
//!
//! ```text
//! J_i + T_i·x_i ≤ J_n + T_n·x_n ≤ J_i + T_i·x_i + c_i     for all i < n
//! ```
//!
//! minimizing `x_n`. Indices in this module are zero-based: task `i` here is
//! `τ_{i+1}`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{ceil_div, floor_div};
use crate::error::{Error, Result};
use crate::instance::{normalize, Constraint, FscInstance, NormalizedInstance};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Task {
    /// Processing time.
    pub c: BigInt,
    /// Period.
    pub t: BigInt,
    /// Release jitter.
    pub j: BigInt,
}

impl Task {
    pub fn new(c: impl Into<BigInt>, t: impl Into<BigInt>, j: impl Into<BigInt>) -> Self {
        Task {
            c: c.into(),
            t: t.into(),
            j: j.into(),
        }
    }
}

/// A validated task set with precomputed tail sums `c_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskSet {
    tasks: Vec<Task>,
    tail: Vec<BigInt>,
}

impl TaskSet {
    /// Checks periods, harmonicity and that the first `n - 1` tasks have
    /// total utilization below one.
    pub fn new(tasks: Vec<Task>) -> Result<Self> {
        if tasks.is_empty() {
            return Err(Error::Precondition("task set is empty".into()));
        }
        for (i, task) in tasks.iter().enumerate() {
            if task.t < BigInt::one() {
                return Err(Error::Precondition(format!("task {i}: period must be positive")));
            }
            if task.c.is_negative() || task.j.is_negative() {
                return Err(Error::Precondition(format!(
                    "task {i}: processing time and jitter must be nonnegative"
                )));
            }
        }
        for (i, w) in tasks.windows(2).enumerate() {
            if !(&w[0].t % &w[1].t).is_zero() {
                return Err(Error::Precondition(format!(
                    "periods not harmonic: T of task {} ({}) is not a multiple of T of task {} ({})",
                    i,
                    w[0].t,
                    i + 1,
                    w[1].t
                )));
            }
        }
        // Σ_{t<n-1} C_t/T_t < 1, scaled by T_0 which every such T_t divides.
        let n = tasks.len();
        let scale = &tasks[0].t;
        let demand: BigInt = tasks[..n - 1].iter().map(|k| &k.c * (scale / &k.t)).sum();
        if n > 1 && &demand >= scale {
            return Err(Error::Precondition(format!(
                "utilization of the higher-priority tasks is {demand}/{scale}, must be below 1"
            )));
        }
        let mut tail = vec![BigInt::zero(); n];
        for i in (0..n.saturating_sub(2)).rev() {
            tail[i] = &tail[i + 1] + &tasks[i + 1].c;
        }
        Ok(TaskSet { tasks, tail })
    }

    pub fn tasks(&self) -> &[Task] {
        &self.tasks
    }

    pub fn len(&self) -> usize {
        self.tasks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tasks.is_empty()
    }

    /// `c_i`, the processing time of tasks `i+1 … n-2` (zero-based).
    pub fn tail(&self, i: usize) -> &BigInt {
        &self.tail[i]
    }

    fn last(&self) -> &Task {
        self.tasks.last().expect("nonempty")
    }

    /// The range of `x_j` compatible with a given `x_n`.
    fn range_given_last(&self, j: usize, x_n: &BigInt) -> (BigInt, BigInt) {
        let (tj, tn) = (&self.tasks[j], self.last());
        let base = &tn.j - &tj.j + &tn.t * x_n;
        (
            ceil_div(&(&base - &self.tail[j]), &tj.t),
            floor_div(&base, &tj.t),
        )
    }
}

/// `(ℓ, u)`: the values of `x_j` compatible with `x_i = z`, for `i < j`.
pub fn bounds_lu(ts: &TaskSet, i: usize, j: usize, z: &BigInt) -> Result<(BigInt, BigInt)> {
    if i >= j || j >= ts.len() {
        return Err(Error::Precondition(format!(
            "bounds need i < j < {}, got i = {i}, j = {j}",
            ts.len()
        )));
    }
    let (ti, tj) = (&ts.tasks[i], &ts.tasks[j]);
    let shift = (&ti.t / &tj.t) * z;
    let lo = &shift + ceil_div(&(&ti.j - &tj.j - &ts.tail[j]), &tj.t);
    let hi = shift + floor_div(&(&ti.j - &tj.j + &ts.tail[i]), &tj.t);
    Ok((lo, hi))
}

/// Reveals `x_n` block by block, starting from `x_1 = 1`.
///
/// From the current index `i`, jumps to the last index `k` sharing the period
/// of `i + 1`; that variable is pinned to a single value by `x_i`. After `x_n`
/// is known, checks that every other variable still has an admissible value.
/// Linear in `n`.
pub fn reveal(ts: &TaskSet) -> Result<Option<BigInt>> {
    let n = ts.len();
    let mut x = BigInt::one();
    let mut k = 0;
    let mut block_end = 0;
    while k < n - 1 {
        let i = k;
        // the cursor only moves forward, so the scan is linear overall
        block_end = block_end.max(i + 1);
        while block_end + 1 < n && ts.tasks[block_end + 1].t == ts.tasks[i + 1].t {
            block_end += 1;
        }
        k = block_end;
        if &ts.tail[i] + &ts.tail[k] >= ts.tasks[k].t {
            return Err(Error::Inconsistent(format!(
                "chain step {i} -> {k} has (c_i + c_k) / T_k >= 1"
            )));
        }
        let (lo, hi) = bounds_lu(ts, i, k, &x)?;
        if lo != hi {
            return Ok(None);
        }
        x = lo;
    }
    for j in 0..n - 1 {
        let (lo, hi) = ts.range_given_last(j, &x);
        if lo > hi {
            return Ok(None);
        }
    }
    Ok(Some(x))
}

/// Expands a revealed `x_n` into a full assignment, picking the smallest
/// admissible value for every other variable.
pub fn response_solution(ts: &TaskSet, x_n: &BigInt) -> Result<Vec<BigInt>> {
    let n = ts.len();
    let mut xs = Vec::with_capacity(n);
    for j in 0..n - 1 {
        let (lo, hi) = ts.range_given_last(j, x_n);
        if lo > hi {
            return Err(Error::Inconsistent(format!(
                "no admissible value for x of task {j} given x_n = {x_n}"
            )));
        }
        xs.push(lo);
    }
    xs.push(x_n.clone());
    Ok(xs)
}

/// Whether an assignment has `x_1 = 1` and satisfies every inequality of
/// the system.
pub fn satisfies_system(ts: &TaskSet, xs: &[BigInt]) -> bool {
    let n = ts.len();
    if xs.len() != n || !xs[0].is_one() {
        return false;
    }
    let tn = ts.last();
    let w = &tn.j + &tn.t * &xs[n - 1];
    (0..n - 1).all(|i| {
        let ti = &ts.tasks[i];
        let v = &ti.j + &ti.t * &xs[i];
        v <= w && w <= &v + &ts.tail[i]
    })
}

/// The system as a raw bounded-mixing-set instance with `s = x_n`.
///
/// Row `i` reads `⌈(J_i - J_n)/T_n⌉ ≤ s - (T_i/T_n)·x_i ≤ ⌊(J_i - J_n + c_i)/T_n⌋`,
/// in input order (capacities descend). `None` when some row has no integer
/// in its bounds, which makes the system infeasible.
pub fn to_fsc(ts: &TaskSet) -> Option<FscInstance> {
    let n = ts.len();
    let tn = ts.last();
    let rows = (0..n - 1)
        .map(|i| {
            let ti = &ts.tasks[i];
            let row = Constraint {
                capacity: -(&ti.t / &tn.t),
                lower: ceil_div(&(&ti.j - &tn.j), &tn.t),
                upper: floor_div(&(&ti.j - &tn.j + &ts.tail[i]), &tn.t),
            };
            (row.lower <= row.upper).then_some(row)
        })
        .collect::<Option<Vec<_>>>()?;
    Some(FscInstance::new(rows, None).expect("bounds checked above"))
}

/// Normalized form of [`to_fsc`] with `x_1 = 1` folded into the domain of `s`:
/// row 0 with `x_1 = 1` pins `s` to `[⌈(J_1 + T_1 - J_n)/T_n⌉, ⌊(J_1 + T_1 - J_n + c_1)/T_n⌋]`.
/// A single task gives the empty instance with domain `[1, 1]`; a system with
/// an empty row gives an instance flagged infeasible.
pub fn to_bms(ts: &TaskSet) -> NormalizedInstance {
    let (t0, tn) = (&ts.tasks[0], ts.last());
    let base = &t0.j + &t0.t - &tn.j;
    let (raw, lo, hi) = match to_fsc(ts) {
        Some(raw) => (raw, ceil_div(&base, &tn.t), floor_div(&(&base + &ts.tail[0]), &tn.t)),
        None => (
            FscInstance::new(Vec::new(), None).expect("empty instance"),
            BigInt::one(),
            BigInt::zero(),
        ),
    };
    let mut inst = normalize(&raw);
    inst.restrict_domain(lo, hi);
    inst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimize::min_s_aggregate;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn ts(tasks: &[(i64, i64, i64)]) -> TaskSet {
        TaskSet::new(tasks.iter().map(|&(c, t, j)| Task::new(c, t, j)).collect()).unwrap()
    }

    #[test]
    fn reveal_examples() {
        assert_eq!(reveal(&ts(&[(1, 4, 2), (1, 2, 0)])).unwrap(), Some(b(3)));
        assert_eq!(reveal(&ts(&[(1, 4, 1), (1, 2, 0)])).unwrap(), None);
        assert_eq!(reveal(&ts(&[(1, 5, 0)])).unwrap(), Some(b(1)));
    }

    #[test]
    fn bounds_examples() {
        let a = ts(&[(1, 4, 2), (1, 2, 0)]);
        assert_eq!(bounds_lu(&a, 0, 1, &b(1)).unwrap(), (b(3), b(3)));
        let a = ts(&[(1, 4, 1), (1, 2, 0)]);
        assert_eq!(bounds_lu(&a, 0, 1, &b(1)).unwrap(), (b(3), b(2)));
        let a = ts(&[(1, 8, 3), (0, 4, 3), (1, 2, 0)]);
        assert_eq!(a.tail(0), &b(0));
        assert_eq!(bounds_lu(&a, 0, 1, &b(5)).unwrap(), (b(10), b(10)));
        assert!(bounds_lu(&a, 1, 1, &b(5)).is_err());
    }

    #[test]
    fn tail_sums() {
        let a = ts(&[(1, 16, 0), (2, 8, 0), (2, 4, 0), (1, 2, 0)]);
        assert_eq!(a.tail(0), &b(4));
        assert_eq!(a.tail(1), &b(2));
        assert_eq!(a.tail(2), &b(0));
        assert_eq!(a.tail(3), &b(0));
    }

    #[test]
    fn task_set_validation() {
        let bad = |tasks: &[(i64, i64, i64)]| {
            TaskSet::new(tasks.iter().map(|&(c, t, j)| Task::new(c, t, j)).collect()).is_err()
        };
        assert!(bad(&[(1, 6, 0), (1, 4, 0)]));
        assert!(bad(&[(2, 4, 0), (2, 4, 0), (1, 2, 0)]));
        assert!(bad(&[(1, 0, 0)]));
        assert!(bad(&[]));
        // utilization of the analyzed task itself does not count
        assert!(!bad(&[(1, 4, 0), (9, 2, 0)]));
    }

    #[test]
    fn response_solution_examples() {
        let a = ts(&[(1, 4, 2), (1, 2, 0)]);
        let xs = response_solution(&a, &b(3)).unwrap();
        assert_eq!(xs, vec![b(1), b(3)]);
        assert!(satisfies_system(&a, &xs));
        assert_eq!(response_solution(&ts(&[(1, 5, 0)]), &b(1)).unwrap(), vec![b(1)]);

        let a = ts(&[(1, 8, 0), (1, 4, 0), (1, 2, 0)]);
        let x_n = reveal(&a).unwrap().unwrap();
        let xs = response_solution(&a, &x_n).unwrap();
        assert!(satisfies_system(&a, &xs));
        assert_eq!(xs[0], b(1));
    }

    #[test]
    fn bms_form_examples() {
        let inst = to_bms(&ts(&[(1, 4, 2), (1, 2, 0)]));
        assert_eq!(inst.s_domain().map(|d| (d.lo().clone(), d.hi().clone())), Some((b(3), b(3))));
        assert_eq!(min_s_aggregate(&inst).unwrap(), Some(b(3)));

        let inst = to_bms(&ts(&[(1, 8, 0), (1, 4, 0), (1, 2, 0)]));
        let caps: Vec<_> = inst.constraints().iter().map(|c| c.capacity.clone()).collect();
        assert_eq!(caps, vec![b(2), b(4)]);
        assert!(inst.s_domain().is_some());

        let inst = to_bms(&ts(&[(1, 5, 0)]));
        assert!(inst.constraints().is_empty());
        assert_eq!(min_s_aggregate(&inst).unwrap(), Some(b(1)));
    }
}
