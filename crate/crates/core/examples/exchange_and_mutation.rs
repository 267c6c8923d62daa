//! Exchange polynomials of a small generalized seed, and how they move
//! under mutation.

use gencluster::exactmath::{default_names, parse_poly};
use gencluster::genseed::{GeneralizedSeed, GroundRing};

fn main() -> gencluster::Result<()> {
    let names = default_names(3);
    let string = |terms: &[&str]| -> Vec<_> { terms.iter().map(|t| parse_poly(t, &names).unwrap()).collect() };
    let seed = GeneralizedSeed::new(
        GroundRing::Rationals,
        3,
        0,
        names.clone(),
        vec![vec![0, -1, 0], vec![1, 0, -3], vec![0, 3, 0]],
        vec![1, 1, 3],
        vec![string(&["1", "1"]), string(&["1", "1"]), string(&["1", "1", "4", "1"])],
    )?;

    println!("B = {:?}, d = {:?}", seed.b, seed.d);
    for (i, f) in seed.exchange_polynomials().iter().enumerate() {
        println!("  f{} = {}", i + 1, f.to_string_with(&seed.names));
    }
    println!("acyclic: {}, coprime: {}", seed.is_acyclic(), seed.is_coprime());

    for k in 1..=3 {
        let t = seed.mutate(k)?;
        println!("\nmu_{k}: B = {:?}", t.b);
        for (i, f) in t.exchange_polynomials().iter().enumerate() {
            println!("  f{} = {}", i + 1, f.to_string_with(&t.names));
        }
        assert_eq!(t.mutate(k)?, seed);
    }
    Ok(())
}
