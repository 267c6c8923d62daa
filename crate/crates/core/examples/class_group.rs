//! Class group of the rank-2 seed with torsion Z/2, step by step: the
//! height-one primes, the valuation matrix and its Smith form.

use gencluster::classgroup::{class_group, height_one_primes, valuation_matrix, FieldMode, PrimeWitness};
use gencluster::io::parse_seed;

const SEED: &str = r#"{
  "ring": "Q", "n": 2, "m": 0,
  "B": [[0, -1], [2, 0]],
  "d": [2, 1],
  "rho": [["1", "2", "1"], ["1", "1"]]
}"#;

fn main() -> gencluster::Result<()> {
    let s = parse_seed(SEED)?;
    for (i, f) in s.exchange_polynomials().iter().enumerate() {
        println!("f{} = {}", i + 1, f.to_string_with(&s.names));
    }

    for mode in [FieldMode::Rational, FieldMode::AlgebraicallyClosed] {
        println!("\n{mode:?}");
        let primes = height_one_primes(&s, mode)?;
        for p in &primes {
            let w = match &p.witness {
                PrimeWitness::Polynomial(f) => f.to_string_with(&s.names),
                PrimeWitness::Root { block, root_index, .. } => format!("root {root_index} of {block}"),
            };
            println!("  prime over x{} with multiplicity {}: {w}", p.source, p.multiplicity);
        }
        println!("  valuation rows {:?}", valuation_matrix(&primes, s.n).rows);
        let cg = class_group(&s, mode)?;
        println!("  free rank {}, torsion {:?}", cg.free_rank, cg.torsion);
    }
    Ok(())
}
