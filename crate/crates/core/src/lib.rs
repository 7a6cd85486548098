//! Exact solvers for fuzzy simultaneous congruences: find `s` such that for
//! every `i` some remainder in `[b_i, B_i]` is congruent to `s` modulo `a_i`.
//! Equivalently, bounded mixing sets `b_i ≤ s + a_i·x_i ≤ B_i` with integer
//! multipliers.
//!
//! General instances are NP-hard; when every capacity divides the next
//! (harmonic capacities) the modules here decide feasibility in `O(n²)` and
//! find the smallest feasible `s` in strongly polynomial `O(n³)` time. The
//! crate also covers worst-case response times of harmonic task sets with
//! release jitter, the unbounded mixing set, and brute-force oracles.
//!
//! ```
//! use fuzzy_congruences::{feasible, min_s_aggregate, normalize, FscInstance};
//! use num_bigint::BigInt;
//!
//! let caps: Vec<BigInt> = [2, 4, 12].map(BigInt::from).to_vec();
//! let lower: Vec<BigInt> = [1, 2, 7].map(BigInt::from).to_vec();
//! let upper: Vec<BigInt> = [1, 3, 8].map(BigInt::from).to_vec();
//! let inst = normalize(&FscInstance::from_arrays(&caps, &lower, &upper).unwrap());
//! assert!(feasible(&inst).unwrap());
//! assert_eq!(min_s_aggregate(&inst).unwrap(), Some(BigInt::from(7)));
//! ```

pub mod arith;
pub mod cli;
pub mod error;
pub mod feasibility;
pub mod format;
pub mod generate;
pub mod instance;
pub mod interval;
pub mod mixing;
pub mod modular;
pub mod optimize;
pub mod oracle;
pub mod response;

pub use error::{Error, Result};
pub use feasibility::{feasibility_trace, feasible, Trace, TraceLevel};
pub use instance::{check_guess, normalize, Constraint, FscInstance, NormalizedInstance, Origin, Solution};
pub use interval::{Interval, ModSet};
pub use mixing::{mixing_min_s, MixingInstance};
pub use optimize::{aggregate_last_two, max_s, min_s_aggregate, min_s_binary, AggregationResult};
pub use oracle::{dda_to_bms, oracle_dda, oracle_max_s, oracle_min_s, reduction_roundtrip, DdaInstance};
pub use response::{reveal, Task, TaskSet};
