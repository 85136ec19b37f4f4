// Basic invariants of a numerical semigroup.
//
//     cargo run --example semigroup_info -- 4,6,7,9,11

use numsg::{is_saturated, NumericalSemigroup};

pub fn run_example(gens: &[u64]) -> numsg::Result<NumericalSemigroup> {
    let s = NumericalSemigroup::from_generators(gens)?;
    println!("S = {s}");
    println!(
        "multiplicity {}, embedding dimension {}",
        s.multiplicity(),
        s.embedding_dimension()
    );
    println!(
        "Frobenius number {}, conductor {}, genus {}",
        s.frobenius(),
        s.conductor(),
        s.genus()
    );
    println!("gaps {:?}", s.gaps());
    if !s.is_naturals() {
        println!(
            "Ap(S, {}) = {:?}",
            s.multiplicity(),
            s.apery_set(s.multiplicity())?
        );
    }
    println!(
        "MED {}, Arf {}, saturated {}",
        s.is_med(),
        s.is_arf(),
        is_saturated(&s)
    );
    Ok(s)
}

fn main() -> numsg::Result<()> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "5,33,34,36,37".into());
    let gens: Vec<u64> = arg
        .split(',')
        .map(|t| t.trim().parse().expect("integer"))
        .collect();
    run_example(&gens).map(drop)
}
