//! Builds a seed for each small finitely generated abelian group and checks
//! that the computed class group matches.
//!
//!     cargo run --example realization -- 1 2 3    # Z + Z/2 + Z/3

use gencluster::realize::{realize_and_verify, AbelianGroupSpec};

fn main() -> gencluster::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let groups = match args.split_first() {
        Some((&free, torsion)) => vec![(free as usize, torsion.to_vec())],
        None => vec![(0, vec![2]), (2, vec![]), (2, vec![3]), (0, vec![2, 4]), (1, vec![6, 4])],
    };
    for (free, torsion) in groups {
        let g = AbelianGroupSpec::new(free, torsion)?;
        let (seed, cg, ok) = realize_and_verify(&g)?;
        println!("Z^{} + {:?}: n = {}, m = {}", g.free_rank, g.torsion, seed.n, seed.m);
        for (i, f) in seed.exchange_polynomials().iter().enumerate() {
            println!("  f{} = {}", i + 1, f.to_string_with(&seed.names));
        }
        println!("  class group: free rank {}, torsion {:?}, verified {ok}", cg.free_rank, cg.torsion);
    }
    Ok(())
}
