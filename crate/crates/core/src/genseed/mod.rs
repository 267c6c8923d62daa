//! Generalized seeds: validation, exchange polynomials, mutation, the
//! directed graph, coprimality and expansion in the initial cluster.

mod expansion;
mod expr;
mod rank2;
mod seed;

pub use expansion::{
    expand_in_initial, expand_in_initial_with, explore_mutation_class, verify_laurent,
    verify_laurent_with, ExplorationResult, TrackedSeed,
};
pub use expr::RationalExpression;
pub use rank2::{rank2_identities, rank2_report, Rank2Report};
pub(crate) use seed::toggle_prime;
pub use seed::{
    mutate_matrix, CoprimalityCriteria, DirectedGraph, GeneralizedSeed, GroundRing, Violation,
};

