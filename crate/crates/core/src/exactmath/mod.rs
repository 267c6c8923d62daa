//! Exact arithmetic: rationals, Laurent polynomials, gcd, univariate
//! factorization, Newton segments and Smith normal form.

mod factor;
mod gcd;
mod laurent;
mod parse;
mod segment;
mod snf;
mod unipoly;

pub use factor::{factor_univariate, is_irreducible, squarefree_decompose, Factorization};
pub use gcd::{coprime, gcd, gcd_univariate};
pub use laurent::{arith, default_names, divide_exact, ArithOp, Exponents, LaurentPoly};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use parse::parse_poly;
pub use segment::{segment_decompose, SegmentForm};
pub use snf::{smith_normal_form, IntegerMatrix, SmithForm};
pub use unipoly::UniPoly;

pub(crate) use laurent::{int_gcd, rat};
pub(crate) use snf::{smith_with_transforms, summarize as summarize_smith};
