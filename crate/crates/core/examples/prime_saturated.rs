// The saturated semigroup with prime multiplicity p and conductor c, with
// its closed-form and brute-force catenary degrees side by side.

use numsg::{construct, semigroup_catenary, PrimeSatSpec};

pub fn run_example(p: u64, c: u64) -> numsg::Result<(u64, u64)> {
    let spec = PrimeSatSpec::new(p, c)?;
    let s = construct(p, c)?;
    let closed = spec.closed_form_catenary();
    let brute = semigroup_catenary(&s)?;
    println!(
        "p = {p}, c = {c} (h = {}, i = {}): {s}  closed form {closed}, brute force {brute}{}",
        spec.h,
        spec.i,
        if closed == brute { "" } else { "  MISMATCH" }
    );
    Ok((closed, brute))
}

fn main() -> numsg::Result<()> {
    for (p, c) in [(5, 33), (5, 30), (2, 2), (3, 11), (5, 9)] {
        run_example(p, c)?;
    }
    Ok(())
}
