//! Exact computations for generalized cluster algebras and Laurent
//! phenomenon algebras.
//!
//! The crate is organized bottom-up: [`exactmath`] provides exact Laurent
//! polynomial arithmetic, [`genseed`] works with generalized seeds,
//! [`classgroup`] and [`realize`] compute and construct divisor class groups,
//! [`lpalgebra`] handles LP seeds, and [`cli`] / [`service`] expose everything
//! as commands and a local JSON service.

pub mod classgroup;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod genseed;
pub mod io;
pub mod lpalgebra;
pub mod realize;
pub mod report;
pub mod service;

pub use error::{Error, Result};
