//! Saturated numerical semigroups of prime multiplicity.
//!
//! For a prime `p` and a conductor `c` with `c mod p != 1` there is exactly
//! one saturated semigroup with multiplicity `p` and conductor `c`:
//!
//! * `c = p h`: `<p, c+1, ..., c+p-1>`, with catenary degree `2h + 1`;
//! * `c = p h + i`, `2 <= i < p`: `<p, c, ..., c+p-1>` without `c+p-i`, with
//!   catenary degree `2h + 2` when `i < (p+2)/2` and `2h + 3` otherwise.
//!
//! [`verify_range`] checks all of this against the brute-force routines.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization::semigroup_catenary;
use crate::saturation::{enumerate_saturated_with, is_saturated, EnumerationBounds};
use crate::semigroup::NumericalSemigroup;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Validated `(p, c)` together with `c = p h + i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimeSatSpec {
    pub p: u64,
    pub c: u64,
    pub i: u64,
    pub h: u64,
}

impl PrimeSatSpec {
    pub fn new(p: u64, c: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if c < p {
            return Err(Error::ConductorBelowMultiplicity {
                multiplicity: p,
                conductor: c,
            });
        }
        let i = c % p;
        if i == 1 {
            return Err(Error::ResidueOne {
                multiplicity: p,
                conductor: c,
            });
        }
        Ok(PrimeSatSpec {
            p,
            c,
            i,
            h: (c - i) / p,
        })
    }

    /// Minimal generators of the unique saturated semigroup.
    pub fn generators(&self) -> Vec<u64> {
        let (p, c, i) = (self.p, self.c, self.i);
        let mut gens = vec![p];
        if i == 0 {
            gens.extend(c + 1..c + p);
        } else {
            gens.extend((c..c + p).filter(|&g| g != c + p - i));
        }
        gens
    }

    pub fn closed_form_catenary(&self) -> u64 {
        let h = self.h;
        if self.i == 0 {
            return 2 * h + 1;
        }
        // 2i = p + 2 cannot happen: p = 2 has no residue branch and p + 2 is
        // odd otherwise.
        debug_assert_ne!(2 * self.i, self.p + 2);
        if 2 * self.i < self.p + 2 {
            2 * h + 2
        } else {
            2 * h + 3
        }
    }
}

/// The saturated semigroup with prime multiplicity `p` and conductor `c`.
pub fn construct(p: u64, c: u64) -> Result<NumericalSemigroup> {
    let spec = PrimeSatSpec::new(p, c)?;
    let s = NumericalSemigroup::from_generators(&spec.generators())?;
    let checks = [
        (s.multiplicity() == p, "multiplicity"),
        (s.conductor() == c, "conductor"),
        (is_saturated(&s), "saturation"),
        (s.is_med(), "maximal embedding dimension"),
    ];
    if let Some((_, what)) = checks.iter().find(|(ok, _)| !ok) {
        return Err(Error::Internal(format!(
            "construct({p}, {c}) = {s} fails the {what} postcondition"
        )));
    }
    Ok(s)
}

pub fn closed_form_catenary(p: u64, c: u64) -> Result<u64> {
    PrimeSatSpec::new(p, c).map(|s| s.closed_form_catenary())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub p: u64,
    pub c: u64,
    pub i: u64,
    pub h: u64,
    pub min_gens: Vec<u64>,
    pub closed_form: u64,
    pub brute_force: Option<u64>,
    pub unique_count: usize,
    pub pass: bool,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn case(&self, p: u64, c: u64) -> Option<&CaseReport> {
        self.cases.iter().find(|k| k.p == p && k.c == c)
    }
}

// Timings are ignored when comparing summaries.
impl PartialEq for Summary {
    fn eq(&self, other: &Self) -> bool {
        (self.total, self.passed, self.failed) == (other.total, other.passed, other.failed)
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Restrict the sweep to these residues of `c` modulo `p`.
    pub residues: Option<Vec<u64>>,
    pub bounds: EnumerationBounds,
}

/// Sweeps `c = p h + i` for every `p` in `primes`, `h` in `1..=h_max` and
/// every admissible residue `i`.
pub fn verify_range(primes: &[u64], h_max: u64) -> Result<VerificationReport> {
    verify_range_with(primes, h_max, &VerifyOptions::default())
}

pub fn verify_range_with(
    primes: &[u64],
    h_max: u64,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let mut grid = Vec::new();
    for &p in &primes {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let residues = std::iter::once(0).chain(2..p);
        for h in 1..=h_max {
            for i in residues.clone() {
                if options.residues.as_ref().is_none_or(|r| r.contains(&i)) {
                    grid.push((p, p * h + i));
                }
            }
        }
    }
    for &(p, c) in &grid {
        if p > options.bounds.max_multiplicity {
            return Err(Error::BoundExceeded {
                what: "multiplicity",
                value: p,
                limit: options.bounds.max_multiplicity,
            });
        }
        if c > options.bounds.max_conductor {
            return Err(Error::BoundExceeded {
                what: "conductor",
                value: c,
                limit: options.bounds.max_conductor,
            });
        }
    }

    let cases: Vec<CaseReport> = grid
        .par_iter()
        .map(|&(p, c)| check_case(p, c, options.bounds))
        .collect::<Result<_>>()?;
    let passed = cases.iter().filter(|k| k.pass).count();
    Ok(VerificationReport {
        summary: Summary {
            total: cases.len(),
            passed,
            failed: cases.len() - passed,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        },
        cases,
    })
}

fn check_case(p: u64, c: u64, bounds: EnumerationBounds) -> Result<CaseReport> {
    let start = Instant::now();
    let spec = PrimeSatSpec::new(p, c)?;
    let closed_form = spec.closed_form_catenary();
    let mut failures = Vec::new();

    let constructed = match construct(p, c) {
        Ok(s) => Some(s),
        Err(e) => {
            failures.push(e.to_string());
            None
        }
    };
    if let Some(s) = &constructed {
        if s.embedding_dimension() as u64 != p {
            failures.push(format!(
                "embedding dimension {} != {p}",
                s.embedding_dimension()
            ));
        }
    }
    let brute_force = match constructed.as_ref().map(semigroup_catenary) {
        Some(Ok(v)) => Some(v),
        Some(Err(e)) => {
            failures.push(e.to_string());
            None
        }
        None => None,
    };
    if brute_force.is_some_and(|b| b != closed_form) {
        failures.push(format!(
            "closed form {closed_form} != brute force {}",
            brute_force.unwrap_or_default()
        ));
    }
    let enumerated = enumerate_saturated_with(p, c, bounds)?;
    if enumerated.len() != 1 {
        failures.push(format!(
            "{} saturated semigroups enumerated",
            enumerated.len()
        ));
    } else if constructed.as_ref() != Some(&enumerated[0]) {
        failures.push(format!(
            "enumerated {} differs from construction",
            enumerated[0]
        ));
    }

    Ok(CaseReport {
        p,
        c,
        i: spec.i,
        h: spec.h,
        min_gens: constructed.map_or_else(|| spec.generators(), |s| s.min_gens().to_vec()),
        closed_form,
        brute_force,
        unique_count: enumerated.len(),
        pass: failures.is_empty(),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        failure: (!failures.is_empty()).then(|| failures.join("; ")),
    })
}
