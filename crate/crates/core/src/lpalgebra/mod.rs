//! Laurent phenomenon algebras: LP seeds, exchange Laurent polynomials,
//! LP mutation, equivalence of seeds and bounded enumeration of cluster
//! variables. Supported over Z and Q.

mod enumerate;
mod equivalence;
mod seed;

pub use enumerate::{enumerate_lp_cluster_variables, lp_step, EqualExchangeLaurent, LpEnumeration};
pub use equivalence::seeds_equivalent;
pub use seed::{
    exchange_laurent, hat_exponent, lp_mutate, lp_mutate_detailed, Irreducibility, LPSeed,
    LpMutation, LpViolation,
};
