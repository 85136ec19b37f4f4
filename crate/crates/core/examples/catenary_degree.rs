// Catenary degree of a semigroup, computed through R-classes and through
// element bottlenecks over the Betti candidates.

use numsg::{betti_candidates, element_catenary, semigroup_catenary_detail, NumericalSemigroup};

pub fn run_example(gens: &[u64]) -> numsg::Result<u64> {
    let s = NumericalSemigroup::from_generators(gens)?;
    let candidates = betti_candidates(&s)?;
    println!("S = {s}, candidates {candidates:?}");
    for &e in &candidates {
        println!("  C({e}) = {}", element_catenary(&s, e)?);
    }
    let detail = semigroup_catenary_detail(&s)?;
    println!(
        "C(S) = {} (m(S) = {}, max bottleneck = {}), attained at {:?}",
        detail.value, detail.m_value, detail.bottleneck_max, detail.attained_at
    );
    Ok(detail.value)
}

fn main() -> numsg::Result<()> {
    run_example(&[5, 33, 34, 36, 37])?;
    run_example(&[2, 3])?;
    run_example(&[5, 9, 11, 12, 13]).map(drop)
}
