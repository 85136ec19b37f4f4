// Exhaustive list of saturated semigroups with fixed multiplicity and
// conductor. With prime multiplicity there is at most one; with m = 4 there
// can be several.

use numsg::{enumerate_saturated, NumericalSemigroup};

pub fn run_example(m: u64, c: u64) -> numsg::Result<Vec<NumericalSemigroup>> {
    let all = enumerate_saturated(m, c)?;
    println!(
        "multiplicity {m}, conductor {c}: {} saturated semigroups",
        all.len()
    );
    for s in &all {
        println!("  {s}  elements below {c}: {:?}", s.small_elements());
    }
    Ok(all)
}

fn main() -> numsg::Result<()> {
    run_example(5, 33)?;
    run_example(5, 31)?;
    run_example(4, 10)?;
    run_example(6, 20).map(drop)
}
