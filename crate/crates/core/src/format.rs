//! JSON instance files.
//!
//! Integers are written as decimal strings so arbitrary precision survives;
//! plain JSON integers are accepted on input. Rationals are `"p/q"` strings.
//!
//! ```json
//! {"kind":"fsc","capacities":["2","4"],"lower":["1","0"],"upper":["1","0"],"s_domain":{"lo":"0","hi":"9"}}
//! {"kind":"tasks","tasks":[{"C":"1","T":"4","J":"2"},{"C":"1","T":"2","J":"0"}]}
//! {"kind":"mixing","capacities":["2","0"],"lower":["3","7"]}
//! {"kind":"dda","alphas":["1/2"],"N":"2","eps":"1/4"}
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::instance::FscInstance;
use crate::interval::Interval;
use crate::mixing::MixingInstance;
use crate::oracle::DdaInstance;
use crate::response::{Task, TaskSet};

/// An arbitrary-precision integer as a JSON string (or number on input).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

struct IntVisitor;

impl Visitor<'_> for IntVisitor {
    type Value = Int;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Int, E> {
        Ok(Int(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Int, E> {
        Ok(Int(v.into()))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Int, E> {
        BigInt::from_str(v.trim())
            .map(Int)
            .map_err(|_| E::custom(format!("not an integer: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(IntVisitor)
    }
}

/// An exact rational as `"p/q"` (or a bare integer).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rat(pub BigRational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", self.0.numer(), self.0.denom()))
    }
}

fn parse_rational(v: &str) -> Option<BigRational> {
    let (p, q) = match v.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (v.trim(), "1"),
    };
    let p = BigInt::from_str(p).ok()?;
    let q = BigInt::from_str(q).ok()?;
    (!q.is_zero()).then(|| BigRational::new(p, q))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRat {
    Text(String),
    Whole(Int),
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = match RawRat::deserialize(d)? {
            RawRat::Text(t) => t,
            RawRat::Whole(i) => i.0.to_string(),
        };
        parse_rational(&text)
            .map(Rat)
            .ok_or_else(|| de::Error::custom(format!("not a rational: {text:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomainDoc {
    pub lo: Int,
    pub hi: Int,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskDoc {
    #[serde(rename = "C")]
    pub c: Int,
    #[serde(rename = "T")]
    pub t: Int,
    #[serde(rename = "J")]
    pub j: Int,
}

/// The on-disk document, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum InstanceFile {
    Fsc {
        capacities: Vec<Int>,
        lower: Vec<Int>,
        upper: Vec<Int>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        s_domain: Option<DomainDoc>,
    },
    Tasks {
        tasks: Vec<TaskDoc>,
    },
    Mixing {
        capacities: Vec<Int>,
        lower: Vec<Int>,
    },
    Dda {
        alphas: Vec<Rat>,
        #[serde(rename = "N")]
        n: Int,
        eps: Rat,
    },
}

/// A validated instance of any kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Fsc(FscInstance),
    Tasks(TaskSet),
    Mixing(MixingInstance),
    Dda(DdaInstance),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Fsc(_) => "fsc",
            Instance::Tasks(_) => "tasks",
            Instance::Mixing(_) => "mixing",
            Instance::Dda(_) => "dda",
        }
    }
}

fn ints(v: Vec<Int>) -> Vec<BigInt> {
    v.into_iter().map(|i| i.0).collect()
}

fn docs(v: &[BigInt]) -> Vec<Int> {
    v.iter().cloned().map(Int).collect()
}

impl TryFrom<InstanceFile> for Instance {
    type Error = Error;

    fn try_from(file: InstanceFile) -> Result<Instance> {
        Ok(match file {
            InstanceFile::Fsc {
                capacities,
                lower,
                upper,
                s_domain,
            } => {
                let inst = FscInstance::from_arrays(&ints(capacities), &ints(lower), &ints(upper))?;
                let domain = s_domain.map(|d| Interval::new(d.lo.0, d.hi.0)).transpose()?;
                Instance::Fsc(inst.with_domain(domain)?)
            }
            InstanceFile::Tasks { tasks } => Instance::Tasks(TaskSet::new(
                tasks.into_iter().map(|t| Task::new(t.c.0, t.t.0, t.j.0)).collect(),
            )?),
            InstanceFile::Mixing { capacities, lower } => {
                Instance::Mixing(MixingInstance::new(ints(capacities), ints(lower))?)
            }
            InstanceFile::Dda { alphas, n, eps } => Instance::Dda(DdaInstance::new(
                alphas.into_iter().map(|a| a.0).collect(),
                n.0,
                eps.0,
            )?),
        })
    }
}

impl From<&Instance> for InstanceFile {
    fn from(inst: &Instance) -> InstanceFile {
        match inst {
            Instance::Fsc(f) => {
                let cs = f.constraints();
                InstanceFile::Fsc {
                    capacities: cs.iter().map(|c| Int(c.capacity.clone())).collect(),
                    lower: cs.iter().map(|c| Int(c.lower.clone())).collect(),
                    upper: cs.iter().map(|c| Int(c.upper.clone())).collect(),
                    s_domain: f.s_domain().map(|d| DomainDoc {
                        lo: Int(d.lo().clone()),
                        hi: Int(d.hi().clone()),
                    }),
                }
            }
            Instance::Tasks(ts) => InstanceFile::Tasks {
                tasks: ts
                    .tasks()
                    .iter()
                    .map(|t| TaskDoc {
                        c: Int(t.c.clone()),
                        t: Int(t.t.clone()),
                        j: Int(t.j.clone()),
                    })
                    .collect(),
            },
            Instance::Mixing(m) => InstanceFile::Mixing {
                capacities: docs(&m.capacities),
                lower: docs(&m.lower),
            },
            Instance::Dda(d) => InstanceFile::Dda {
                alphas: d.alphas().iter().cloned().map(Rat).collect(),
                n: Int(d.n().clone()),
                eps: Rat(d.eps().clone()),
            },
        }
    }
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Instance::try_from(file)
}

/// Serializes an instance as a compact JSON document.
pub fn serialize_instance(inst: &Instance) -> String {
    serde_json::to_string(&InstanceFile::from(inst)).expect("instance documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        let fsc = parse_instance(
            r#"{"kind":"fsc","capacities":["2","4",12],"lower":["1","2","7"],"upper":["1","3","8"]}"#,
        )
        .unwrap();
        assert_eq!(fsc.kind(), "fsc");
        let tasks = parse_instance(r#"{"kind":"tasks","tasks":[{"C":"1","T":"4","J":"2"},{"C":1,"T":2,"J":0}]}"#).unwrap();
        assert_eq!(tasks.kind(), "tasks");
        let mix = parse_instance(r#"{"kind":"mixing","capacities":["2","0"],"lower":["3","7"]}"#).unwrap();
        assert_eq!(mix.kind(), "mixing");
        let dda = parse_instance(r#"{"kind":"dda","alphas":["1/2","3"],"N":"2","eps":"1/4"}"#).unwrap();
        match &dda {
            Instance::Dda(d) => assert_eq!(d.alphas()[1], BigRational::from_integer(3.into())),
            _ => unreachable!(),
        }
    }

    #[test]
    fn big_integers_survive() {
        let big = "123456789012345678901234567890";
        let text = format!(
            r#"{{"kind":"fsc","capacities":["{big}"],"lower":["0"],"upper":["5"],"s_domain":{{"lo":"0","hi":"{big}"}}}}"#
        );
        let inst = parse_instance(&text).unwrap();
        let back = serialize_instance(&inst);
        assert!(back.contains(big));
        assert_eq!(parse_instance(&back).unwrap(), inst);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_instance("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_instance(r#"{"kind":"fsc","capacities":["x"],"lower":[],"upper":[]}"#), Err(Error::Parse(_))));
        assert!(matches!(parse_instance(r#"{"kind":"dda","alphas":["1/0"],"N":"2","eps":"1/4"}"#), Err(Error::Parse(_))));
        assert!(parse_instance(r#"{"kind":"fsc","capacities":["2"],"lower":["3"],"upper":["1"]}"#).is_err());
        assert!(matches!(parse_instance(r#"{"kind":"other"}"#), Err(Error::Parse(_))));
    }
}
