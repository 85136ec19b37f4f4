// Smallest saturated semigroup containing a set, and its minimal SAT-system.

use numsg::{minimal_sat_system, sat_closure, NumericalSemigroup};

pub fn run_example(set: &[u64]) -> numsg::Result<NumericalSemigroup> {
    let closure = sat_closure(set)?;
    let system = minimal_sat_system(&closure)?;
    println!("Sat({set:?}) = {closure}");
    println!(
        "  elements below the conductor: {:?}",
        closure.small_elements()
    );
    println!("  conductor {}", closure.conductor());
    println!(
        "  minimal SAT-system {:?} with gcd chain {:?}",
        system.gens, system.gcd_chain
    );
    assert_eq!(sat_closure(&system.gens)?, closure);
    Ok(closure)
}

fn main() -> numsg::Result<()> {
    for set in [&[5, 33][..], &[4, 6, 7], &[9, 12, 14]] {
        run_example(set)?;
    }
    Ok(())
}
