//! LP seeds of type A3 and Markov: exchange Laurent polynomials, one
//! mutation, and the cluster variables reachable within a few steps.

use gencluster::genseed::RationalExpression;
use gencluster::io::parse_lp_seed;
use gencluster::lpalgebra::{enumerate_lp_cluster_variables, exchange_laurent, lp_mutate};

fn show(name: &str, text: &str, depth: usize) -> gencluster::Result<()> {
    let s = parse_lp_seed(text)?;
    println!("{name}");
    for (j, h) in exchange_laurent(&s)?.into_iter().enumerate() {
        let f = s.f[j].to_string_with(&s.names);
        println!("  F{} = {f}, F^{} = {}", j + 1, j + 1, RationalExpression::laurent(h).to_string_with(&s.names));
    }
    let t = lp_mutate(&s, 1)?;
    let after: Vec<String> = t.f.iter().map(|f| f.to_string_with(&t.names)).collect();
    println!("  after mu_1: {after:?}");
    let e = enumerate_lp_cluster_variables(&s, depth)?;
    println!("  {} cluster variables within depth {depth}:", e.variables.len());
    for v in &e.variables {
        println!("    {}", v.to_string_with(&s.names));
    }
    Ok(())
}

fn main() -> gencluster::Result<()> {
    show("A3", r#"{"n":3,"F":["x2 + 1","x1 + x3","x2 + 1"]}"#, 4)?;
    show("Markov", r#"{"n":3,"F":["x2^2 + x3^2","x1^2 + x3^2","x1^2 + x2^2"]}"#, 2)
}
