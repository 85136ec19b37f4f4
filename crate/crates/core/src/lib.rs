//! Factorization invariants of numerical semigroups.
//!
//! * [`semigroup`]: canonical representation, Apéry sets, MED and Arf tests.
//! * [`saturation`]: saturation test, `Sat(A)`, minimal SAT-systems and an
//!   exhaustive enumerator of saturated semigroups.
//! * [`factorization`]: factorization sets, distances, R-classes and
//!   catenary degrees.
//! * [`prime_saturated`]: the saturated semigroups of prime multiplicity and
//!   their catenary degrees in closed form.
//! * [`cli`]: the `numsg` command line.

pub mod cli;
pub mod error;
pub mod factorization;
pub mod prime_saturated;
pub mod saturation;
pub mod semigroup;
mod union_find;

pub use error::{Error, Result};
pub use factorization::{
    betti_candidates, distance, element_catenary, factorizations, factorizations_with_support,
    length_set, r_classes, semigroup_catenary, semigroup_catenary_detail, CatenaryDetail,
    Factorization, FactorizationSet, RClassPartition,
};
pub use prime_saturated::{
    closed_form_catenary, construct, verify_range, verify_range_with, PrimeSatSpec,
    VerificationReport, VerifyOptions,
};
pub use saturation::{
    enumerate_saturated, enumerate_saturated_containing, enumerate_saturated_with, intersection,
    is_saturated, is_saturated_sequence, minimal_sat_system, sat_closure, EnumerationBounds,
    SatSystem,
};
pub use semigroup::NumericalSemigroup;
