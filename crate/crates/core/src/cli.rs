//! The `numsg` command line.
//!
//! Every subcommand produces an ordered list of `(key, value)` fields. Text
//! mode prints them as `key: value` lines; JSON mode prints a single object
//! `{"command", "input", "result"}` built from the same fields, so the two
//! modes always carry identical values.
//!
//! Exit codes: 0 ok, 1 parse error, 2 domain error, 3 verification failed.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::factorization::{
    betti_candidates, element_catenary, factorizations, r_classes, semigroup_catenary_detail,
};
use crate::prime_saturated::{verify_range, PrimeSatSpec};
use crate::saturation::{
    enumerate_saturated, is_saturated, minimal_sat_system, sat_closure, EnumerationBounds,
};
use crate::semigroup::NumericalSemigroup;
use crate::{construct, semigroup_catenary, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

pub const MAX_GENERATOR: u64 = 1_000_000;
pub const MAX_ELEMENT: u64 = 1_000_000_000;

/// Comma-separated positive integers, e.g. `5,33,34,36,37`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntList(pub Vec<u64>);

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let values = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                match t.parse::<u64>() {
                    Ok(0) => Err("values must be positive".to_string()),
                    Ok(v) => Ok(v),
                    Err(e) => Err(format!("invalid integer {t:?}: {e}")),
                }
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntList(values))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "numsg",
    version,
    about = "Factorization invariants of numerical semigroups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit one JSON object instead of text lines.
    #[arg(long, global = true)]
    pub json: bool,

    /// Also write the JSON object to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basic invariants of the semigroup generated by --gens.
    Info {
        #[arg(long)]
        gens: IntList,
    },
    /// Smallest saturated semigroup containing --set.
    SatClosure {
        #[arg(long)]
        set: IntList,
    },
    /// All factorizations of --element.
    Factorizations {
        #[arg(long)]
        gens: IntList,
        #[arg(long)]
        element: u64,
    },
    /// Catenary degree of the semigroup, or of one --element.
    Catenary {
        #[arg(long)]
        gens: IntList,
        #[arg(long)]
        element: Option<u64>,
    },
    /// The saturated semigroup with prime multiplicity --p and conductor --c.
    PrimeSat {
        #[arg(long = "p")]
        p: u64,
        #[arg(long = "c")]
        c: u64,
        /// Cross-check the closed-form catenary degree by brute force.
        #[arg(long)]
        verify: bool,
    },
    /// Every saturated semigroup with the given multiplicity and conductor.
    EnumerateSaturated {
        #[arg(long)]
        multiplicity: u64,
        #[arg(long)]
        conductor: u64,
    },
    /// Sweep the prime-multiplicity classification and catenary formulas.
    VerifyTheorems {
        #[arg(long = "p")]
        p: IntList,
        #[arg(long)]
        h_max: u64,
    },
}

/// Result of one invocation: exit code plus the text destined for stdout and
/// stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    command: &'static str,
    input: Value,
    fields: Vec<(&'static str, Value)>,
    verification_failed: bool,
}

impl Report {
    fn new(command: &'static str, input: Value) -> Self {
        Report {
            command,
            input,
            fields: Vec::new(),
            verification_failed: false,
        }
    }

    fn field(&mut self, key: &'static str, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key, value.into()));
        self
    }

    fn to_json(&self) -> Value {
        let result: Map<String, Value> = self
            .fields
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        json!({ "command": self.command, "input": self.input, "result": result })
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.fields {
            match value {
                Value::Array(items) if items.iter().any(Value::is_object) => {
                    for item in items {
                        let _ = writeln!(out, "{key}: {}", render_inline(item));
                    }
                }
                _ => {
                    let _ = writeln!(out, "{key}: {}", render_inline(value));
                }
            }
        }
        out
    }
}

fn render_inline(value: &Value) -> String {
    match value {
        Value::Null => "none".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(Value::is_array) => items
            .iter()
            .map(|v| format!("({})", render_inline(v)))
            .collect::<Vec<_>>()
            .join(" "),
        Value::Array(items) => items
            .iter()
            .map(render_inline)
            .collect::<Vec<_>>()
            .join(","),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", render_inline(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn check_gens(gens: &[u64]) -> Result<()> {
    match gens.iter().copied().max() {
        Some(g) if g > MAX_GENERATOR => Err(Error::BoundExceeded {
            what: "generator",
            value: g,
            limit: MAX_GENERATOR,
        }),
        _ => Ok(()),
    }
}

fn check_element(s: u64) -> Result<()> {
    if s > MAX_ELEMENT {
        Err(Error::BoundExceeded {
            what: "element",
            value: s,
            limit: MAX_ELEMENT,
        })
    } else {
        Ok(())
    }
}

fn semigroup(gens: &IntList) -> Result<NumericalSemigroup> {
    check_gens(&gens.0)?;
    NumericalSemigroup::from_generators(&gens.0)
}

fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Info { gens } => {
            let s = semigroup(gens)?;
            let mut r = Report::new("info", json!({ "gens": gens.0 }));
            r.field("min_gens", s.min_gens())
                .field("multiplicity", s.multiplicity())
                .field("embedding_dimension", s.embedding_dimension())
                .field("frobenius", s.frobenius())
                .field("conductor", s.conductor())
                .field("gaps", s.gaps())
                .field("apery_multiplicity", s.apery_set(s.multiplicity())?)
                .field("med", s.is_med())
                .field("arf", s.is_arf())
                .field("saturated", is_saturated(&s));
            Ok(r)
        }
        Command::SatClosure { set } => {
            check_gens(&set.0)?;
            let s = sat_closure(&set.0)?;
            let system = minimal_sat_system(&s)?;
            let mut r = Report::new("sat-closure", json!({ "set": set.0 }));
            r.field("min_gens", s.min_gens())
                .field("conductor", s.conductor())
                .field("frobenius", s.frobenius())
                .field("small_elements", s.small_elements())
                .field("sat_system", system.gens)
                .field("gcd_chain", system.gcd_chain);
            Ok(r)
        }
        Command::Factorizations { gens, element } => {
            check_element(*element)?;
            let s = semigroup(gens)?;
            let z = factorizations(&s, *element);
            let exps: Vec<Vec<u64>> = z.iter().map(|x| x.exps().to_vec()).collect();
            let mut r = Report::new(
                "factorizations",
                json!({ "gens": gens.0, "element": element }),
            );
            r.field("min_gens", s.min_gens())
                .field("element", *element)
                .field("member", s.contains_u(*element))
                .field("count", z.len())
                .field("factorizations", exps)
                .field("lengths", z.lengths());
            Ok(r)
        }
        Command::Catenary { gens, element } => {
            let s = semigroup(gens)?;
            match element {
                Some(e) => {
                    check_element(*e)?;
                    let c = element_catenary(&s, *e)?;
                    let classes = r_classes(&factorizations(&s, *e))?;
                    let mut r = Report::new("catenary", json!({ "gens": gens.0, "element": e }));
                    r.field("min_gens", s.min_gens())
                        .field("element", *e)
                        .field("catenary", c)
                        .field("r_classes", classes.len())
                        .field("class_min_lengths", classes.min_lengths);
                    Ok(r)
                }
                None => {
                    let detail = semigroup_catenary_detail(&s)?;
                    let mut r = Report::new("catenary", json!({ "gens": gens.0 }));
                    r.field("min_gens", s.min_gens())
                        .field("catenary", detail.value)
                        .field("m_value", detail.m_value)
                        .field("bottleneck_max", detail.bottleneck_max)
                        .field("attained_at", detail.attained_at)
                        .field("betti_candidates", betti_candidates(&s)?);
                    Ok(r)
                }
            }
        }
        Command::PrimeSat { p, c, verify } => {
            let spec = PrimeSatSpec::new(*p, *c)?;
            let s = construct(*p, *c)?;
            let closed = spec.closed_form_catenary();
            let mut r = Report::new("prime-sat", json!({ "p": p, "c": c, "verify": verify }));
            r.field("p", *p)
                .field("c", *c)
                .field("i", spec.i)
                .field("h", spec.h)
                .field("min_gens", s.min_gens())
                .field("closed_form", closed);
            if *verify {
                let brute = semigroup_catenary(&s)?;
                let bounds = EnumerationBounds::default();
                let unique = if *p <= bounds.max_multiplicity && *c <= bounds.max_conductor {
                    let all = enumerate_saturated(*p, *c)?;
                    Some(all.len() == 1 && all[0] == s)
                } else {
                    None
                };
                r.field("brute_force", brute)
                    .field("match", brute == closed)
                    .field("unique", unique);
                r.verification_failed = brute != closed || unique == Some(false);
            }
            Ok(r)
        }
        Command::EnumerateSaturated {
            multiplicity,
            conductor,
        } => {
            let all = enumerate_saturated(*multiplicity, *conductor)?;
            let listed: Vec<Value> = all
                .iter()
                .map(|s| json!({ "min_gens": s.min_gens(), "small_elements": s.small_elements() }))
                .collect();
            let mut r = Report::new(
                "enumerate-saturated",
                json!({ "multiplicity": multiplicity, "conductor": conductor }),
            );
            r.field("count", all.len()).field("semigroups", listed);
            Ok(r)
        }
        Command::VerifyTheorems { p, h_max } => {
            let report = verify_range(&p.0, *h_max)?;
            let mut r = Report::new("verify-theorems", json!({ "p": p.0, "h_max": h_max }));
            r.verification_failed = !report.passed();
            let value = serde_json::to_value(&report).expect("report serializes");
            r.field("cases", value["cases"].clone())
                .field("summary", value["summary"].clone());
            Ok(r)
        }
    }
}

/// Runs the command line on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };

    let report = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: EXIT_DOMAIN,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };

    let json = report.to_json();
    let mut stderr = String::new();
    if let Some(path) = &cli.out {
        let body = serde_json::to_string_pretty(&json).expect("json serializes");
        if let Err(e) = std::fs::write(path, body + "\n") {
            return Outcome {
                code: EXIT_DOMAIN,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            };
        }
    }
    let stdout = if cli.json {
        format!("{json}\n")
    } else {
        report.to_text()
    };
    let code = if report.verification_failed {
        stderr.push_str("verification failed\n");
        EXIT_VERIFICATION
    } else {
        EXIT_OK
    };
    Outcome {
        code,
        stdout,
        stderr,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_list_parsing() {
        assert_eq!(
            "5,33, 34".parse::<IntList>().unwrap(),
            IntList(vec![5, 33, 34])
        );
        assert!("5,,6".parse::<IntList>().is_err());
        assert!("0,3".parse::<IntList>().is_err());
        assert!("-3".parse::<IntList>().is_err());
    }

    #[test]
    fn text_rendering() {
        assert_eq!(render_inline(&json!([5, 33])), "5,33");
        assert_eq!(render_inline(&json!([[0, 2], [6, 0]])), "(0,2) (6,0)");
        assert_eq!(render_inline(&json!(null)), "none");
        assert_eq!(
            render_inline(&json!({"p": 5, "pass": true})),
            "p=5 pass=true"
        );
    }
}
