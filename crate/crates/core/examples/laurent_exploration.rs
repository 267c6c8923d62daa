//! Cluster variables of a rank-2 seed written in the initial cluster, and a
//! breadth-first walk of small mutation classes.

use gencluster::genseed::{expand_in_initial, explore_mutation_class, verify_laurent, GeneralizedSeed};
use gencluster::io::parse_seed;

fn main() -> gencluster::Result<()> {
    let z2 = parse_seed(r#"{"n":2,"B":[[0,-1],[2,0]],"d":[2,1],"rho":[["1","2","1"],["1","1"]]}"#)?;
    let seq = [1, 2, 1, 2, 1];
    for len in 1..=seq.len() {
        let cluster = expand_in_initial(&z2, &seq[..len])?;
        let shown: Vec<String> = cluster.iter().map(|x| x.to_string_with(&z2.names)).collect();
        println!("{:?}: {shown:?}", &seq[..len]);
    }
    println!("Laurent along {seq:?}: {}", verify_laurent(&z2, &seq)?);

    let cases = [
        ("A2", GeneralizedSeed::classical(2, 0, vec![vec![0, 1], vec![-1, 0]])?),
        ("B2", GeneralizedSeed::classical(2, 0, vec![vec![0, 1], vec![-2, 0]])?),
        ("G2", GeneralizedSeed::classical(2, 0, vec![vec![0, 1], vec![-3, 0]])?),
        ("Kronecker", GeneralizedSeed::classical(2, 0, vec![vec![0, 2], vec![-2, 0]])?),
        ("Z/2 seed", z2),
    ];
    for (name, s) in cases {
        let r = explore_mutation_class(&s, 40)?;
        let bound = if r.exhausted { "complete" } else { "stopped at the limit" };
        println!("{name}: {} seeds, {bound}", r.seeds_found);
    }
    Ok(())
}
