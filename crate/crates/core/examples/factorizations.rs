// Factorization sets, lengths and R-classes of a few elements.

use numsg::{factorizations, length_set, r_classes, NumericalSemigroup};

pub fn run_example(gens: &[u64], elements: &[u64]) -> numsg::Result<()> {
    let s = NumericalSemigroup::from_generators(gens)?;
    println!("S = {s}");
    for &e in elements {
        let z = factorizations(&s, e);
        if z.is_empty() {
            println!("{e}: not in S");
            continue;
        }
        let classes = r_classes(&z)?;
        let listed: Vec<String> = z.iter().map(|x| x.to_string()).collect();
        println!("Z({e}) = {{{}}}", listed.join(", "));
        println!("  lengths {:?}", length_set(&s, e)?);
        println!(
            "  {} R-classes with minimum lengths {:?}",
            classes.len(),
            classes.min_lengths
        );
    }
    Ok(())
}

fn main() -> numsg::Result<()> {
    run_example(&[5, 33, 34, 36, 37], &(66..=74).collect::<Vec<_>>())?;
    run_example(&[5, 7, 8, 9, 11], &[22, 23])
}
