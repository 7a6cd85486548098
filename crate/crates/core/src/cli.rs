//! Command-line front end.
//!
//! Every invocation produces exactly one JSON document. Exit codes: 0 on
//! success, 1 when the instance is infeasible, 2 for malformed input, bad
//! usage or violated preconditions, 3 when the oracle would exceed its budget.

use std::fs;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::Error;
use crate::feasibility::feasible;
use crate::format::{parse_instance, serialize_instance, Instance};
use crate::generate::{gen_random_dda, gen_random_harmonic};
use crate::instance::{check_guess, normalize, NormalizedInstance, Solution};
use crate::optimize::{max_s, min_s_aggregate, min_s_binary};
use crate::oracle::{oracle_dda, oracle_max_s, oracle_min_s, oracle_response, raw_solution, DEFAULT_LIMIT};
use crate::response::{response_solution, reveal, to_bms};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "fsc", version, about = "Fuzzy simultaneous congruences and bounded mixing sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Instance file, or `-` for standard input.
    file: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Objective {
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Binary,
    Aggregate,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide feasibility (fsc or tasks instances).
    Feasible(Input),
    /// Smallest or largest feasible s with its multipliers.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "min")]
        objective: Objective,
        #[arg(long, value_enum, default_value = "aggregate")]
        method: Method,
    },
    /// Test a single value of s.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_negative_numbers = true)]
        s: BigInt,
    },
    /// Minimize s over an unbounded mixing set.
    Mixing(Input),
    /// Response-time multipliers of the last task.
    Wcrt(Input),
    /// Brute-force answer by enumeration.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = BigInt::from(DEFAULT_LIMIT))]
        limit: BigInt,
        #[arg(long, value_enum, default_value = "min")]
        objective: Objective,
    },
    /// Print a seeded random instance.
    Gen {
        #[command(subcommand)]
        what: Generate,
    },
}

#[derive(Subcommand, Debug)]
enum Generate {
    /// Harmonic fsc instance.
    Random {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_ratio: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        plant: bool,
    },
    /// Directed Diophantine approximation instance.
    Dda {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        size: usize,
        #[arg(long, default_value_t = 50)]
        max_n: u64,
        #[arg(long, default_value_t = 10)]
        max_den: u64,
    },
}

type Outcome = std::result::Result<(i32, Value), Error>;

fn strs(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn read_instance(input: &Input) -> Result<Instance, Error> {
    let text = if input.file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("standard input: {e}")))?;
        buf
    } else {
        fs::read_to_string(&input.file).map_err(|e| Error::Parse(format!("{}: {e}", input.file)))?
    };
    parse_instance(&text)
}

fn wrong_kind(command: &str, inst: &Instance) -> Error {
    Error::Precondition(format!("`{command}` does not accept {} instances", inst.kind()))
}

fn normalized(command: &str, inst: &Instance) -> Result<NormalizedInstance, Error> {
    match inst {
        Instance::Fsc(f) => Ok(normalize(f)),
        Instance::Tasks(ts) => Ok(to_bms(ts)),
        other => Err(wrong_kind(command, other)),
    }
}

fn solution_doc(sol: Option<Solution>) -> (i32, Value) {
    match sol {
        Some(sol) => (EXIT_OK, json!({ "s": sol.s.to_string(), "x": strs(&sol.x) })),
        None => (EXIT_INFEASIBLE, json!({ "s": null, "x": null })),
    }
}

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    }
}

fn dispatch(cli: Cli) -> Outcome {
    match cli.command {
        Command::Feasible(input) => {
            let inst = normalized("feasible", &read_instance(&input)?)?;
            let ok = feasible(&inst)?;
            Ok((verdict(ok), json!({ "feasible": ok })))
        }
        Command::Solve {
            input,
            objective,
            method,
        } => {
            let inst = normalized("solve", &read_instance(&input)?)?;
            let s = match (objective, method) {
                (Objective::Min, Method::Binary) => min_s_binary(&inst)?,
                (Objective::Min, Method::Aggregate) => min_s_aggregate(&inst)?,
                (Objective::Max, Method::Binary) => max_s(&inst)?,
                (Objective::Max, Method::Aggregate) => {
                    return Err(Error::Precondition("the maximum is only available with --method binary".into()))
                }
            };
            let sol = s.map(|s| {
                check_guess(&inst, &s)
                    .ok_or_else(|| Error::Inconsistent(format!("optimum {s} fails the single-guess check")))
            });
            Ok(solution_doc(sol.transpose()?))
        }
        Command::Check { input, s } => {
            let inst = normalized("check", &read_instance(&input)?)?;
            inst.require_harmonic()?;
            let sol = check_guess(&inst, &s);
            let ok = sol.is_some();
            let x = sol.map(|sol| strs(&sol.x));
            Ok((verdict(ok), json!({ "feasible": ok, "x": x })))
        }
        Command::Mixing(input) => match read_instance(&input)? {
            Instance::Mixing(m) => {
                let (s, x) = m.solve();
                Ok((EXIT_OK, json!({ "s": s.to_string(), "x": strs(&x) })))
            }
            other => Err(wrong_kind("mixing", &other)),
        },
        Command::Wcrt(input) => match read_instance(&input)? {
            Instance::Tasks(ts) => match reveal(&ts)? {
                Some(x_n) => {
                    let xs = response_solution(&ts, &x_n)?;
                    Ok((EXIT_OK, json!({ "x_n": x_n.to_string(), "x": strs(&xs) })))
                }
                None => Ok((EXIT_INFEASIBLE, json!({ "x_n": null, "x": null }))),
            },
            other => Err(wrong_kind("wcrt", &other)),
        },
        Command::Oracle {
            input,
            limit,
            objective,
        } => {
            if limit < BigInt::from(1) {
                return Err(Error::Precondition(format!("limit must be at least 1, got {limit}")));
            }
            match read_instance(&input)? {
                Instance::Fsc(f) => {
                    let s = match objective {
                        Objective::Min => oracle_min_s(&f, &limit)?,
                        Objective::Max => oracle_max_s(&f, &limit)?,
                    };
                    Ok(solution_doc(s.and_then(|s| raw_solution(&f, &s))))
                }
                Instance::Dda(d) => {
                    if d.n() > &limit {
                        return Err(Error::ResourceLimit {
                            needed: d.n().clone(),
                            limit,
                        });
                    }
                    let q = oracle_dda(&d);
                    Ok((verdict(q.is_some()), json!({ "Q": q.map(|q| q.to_string()) })))
                }
                Instance::Tasks(ts) => {
                    let x_n = oracle_response(&ts);
                    Ok((verdict(x_n.is_some()), json!({ "x_n": x_n.map(|x| x.to_string()) })))
                }
                other => Err(wrong_kind("oracle", &other)),
            }
        }
        Command::Gen { what } => {
            let inst = match what {
                Generate::Random {
                    n,
                    max_ratio,
                    seed,
                    plant,
                } => {
                    if n == 0 || max_ratio == 0 {
                        return Err(Error::Precondition("need --n >= 1 and --max-ratio >= 1".into()));
                    }
                    Instance::Fsc(gen_random_harmonic(n, max_ratio, seed, plant))
                }
                Generate::Dda {
                    seed,
                    size,
                    max_n,
                    max_den,
                } => Instance::Dda(gen_random_dda(seed, size, max_n, max_den)),
            };
            let doc: Value = serde_json::from_str(&serialize_instance(&inst)).expect("serializer emits JSON");
            Ok((EXIT_OK, doc))
        }
    }
}

/// Runs one command. `args` excludes the program name.
pub fn run<I, T>(args: I) -> (i32, Value)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("fsc")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (EXIT_OK, json!({ "help": e.to_string() })),
                _ => (EXIT_USAGE, json!({ "error": e.to_string().trim_end() })),
            };
        }
    };
    match dispatch(cli) {
        Ok(out) => out,
        Err(e) => {
            let code = match e {
                Error::ResourceLimit { .. } => EXIT_RESOURCE,
                _ => EXIT_USAGE,
            };
            (code, json!({ "error": e.to_string() }))
        }
    }
}
