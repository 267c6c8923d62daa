use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactmath::{divide_exact, gcd, LaurentPoly};

/// Element of the ambient field written as `num / den` over the initial cluster.
///
/// `den` is always a canonical polynomial (primitive, positive leading
/// coefficient, no variable divides it) coprime to `num`; any monomial or
/// constant factor of the denominator lives in `num`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalExpression {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalExpression {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::laurent(num));
        }
        let (c, u, assoc) = den.unit_decomposition();
        let neg: Vec<i64> = u.iter().map(|x| -x).collect();
        let num = num.shift(&neg).scale(&c.recip());
        if assoc.is_one() {
            return Ok(Self::laurent(num));
        }
        if let Ok(q) = divide_exact(&num, &assoc) {
            return Ok(Self::laurent(q));
        }
        let g = gcd(&num, &assoc);
        let num = divide_exact(&num, &g)?;
        let den = divide_exact(&assoc, &g)?;
        // den / g is primitive up to sign; fold the sign into the numerator.
        let (c, u, den) = den.unit_decomposition();
        let neg: Vec<i64> = u.iter().map(|x| -x).collect();
        Ok(RationalExpression {
            num: num.shift(&neg).scale(&c.recip()),
            den,
        })
    }

    pub fn laurent(p: LaurentPoly) -> Self {
        let arity = p.arity();
        RationalExpression {
            num: p,
            den: LaurentPoly::one(arity),
        }
    }

    pub fn var(arity: usize, i: usize) -> Self {
        Self::laurent(LaurentPoly::var(arity, i))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn arity(&self) -> usize {
        self.num.arity()
    }

    /// Denominator is a unit monomial (here: exactly 1 after reduction).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    /// Renders as `P` or `(P)/(Q)` with `P`, `Q` integer polynomials, e.g.
    /// `(x2 + 1)/(x1*x3)`.
    pub fn to_string_with(&self, names: &[String]) -> String {
        let arity = self.arity();
        let (u, p) = self.num.split_monomial();
        let scale = BigRational::from_integer(p.rational_content().denom().clone());
        let p = p
            .scale(&scale)
            .shift(&u.iter().map(|x| (*x).max(0)).collect::<Vec<_>>());
        let neg: Vec<i64> = u.iter().map(|x| -(*x).min(0)).collect();
        let den = &LaurentPoly::monomial(arity, neg, scale) * &self.den;
        if den.is_one() {
            return p.to_string_with(names);
        }
        let wrap = |q: &LaurentPoly, product: bool| {
            let s = q.to_string_with(names);
            if q.len() > 1 || s.starts_with('-') || (product && s.contains('*')) {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(&p, false), wrap(&den, true))
    }

    /// Evaluates a polynomial `f` (nonnegative exponents) at `values`.
    pub fn eval_polynomial(f: &LaurentPoly, values: &[RationalExpression]) -> Result<Self> {
        assert_eq!(f.arity(), values.len());
        let arity = values.first().map(|v| v.arity()).unwrap_or(0);
        if values.iter().all(|v| v.is_laurent()) {
            let nums: Vec<LaurentPoly> = values.iter().map(|v| v.num.clone()).collect();
            return Ok(Self::laurent(f.compose(&nums, arity)?));
        }
        let (num, den) = eval_fraction(f, values, arity);
        Self::new(num, den)
    }

    /// `self / other`.
    pub fn divide(&self, other: &RationalExpression) -> Result<Self> {
        if self.is_laurent() && other.is_laurent() {
            if let Ok(q) = divide_exact(&self.num, &other.num) {
                return Ok(Self::laurent(q));
            }
        }
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }
}

/// Unreduced `(numerator, denominator)` of `f(values)` over the common
/// denominator `prod den_v^(deg_v f)`.
pub(crate) fn eval_fraction(
    f: &LaurentPoly,
    values: &[RationalExpression],
    arity: usize,
) -> (LaurentPoly, LaurentPoly) {
    let nvars = values.len();
    let degs: Vec<u32> = (0..nvars)
        .map(|v| f.max_degree_in(v).unwrap_or(0).max(0) as u32)
        .collect();
    let num_pows: Vec<Vec<LaurentPoly>> = (0..nvars)
        .map(|v| powers(&values[v].num, degs[v]))
        .collect();
    let den_pows: Vec<Vec<LaurentPoly>> = (0..nvars)
        .map(|v| powers(&values[v].den, degs[v]))
        .collect();
    let mut num = LaurentPoly::zero(arity);
    for (e, c) in f.terms() {
        let mut t = LaurentPoly::constant(arity, c.clone());
        for v in 0..nvars {
            let k = e[v] as u32;
            if degs[v] == 0 {
                continue;
            }
            t = &t * &num_pows[v][k as usize];
            if !values[v].den.is_one() {
                t = &t * &den_pows[v][(degs[v] - k) as usize];
            }
        }
        num = &num + &t;
    }
    let mut den = LaurentPoly::one(arity);
    for v in 0..nvars {
        if !values[v].den.is_one() {
            den = &den * &den_pows[v][degs[v] as usize];
        }
    }
    (num, den)
}

fn powers(p: &LaurentPoly, k: u32) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::one(p.arity())];
    for i in 0..k as usize {
        out.push(&out[i] * p);
    }
    out
}

impl fmt::Display for RationalExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&crate::exactmath::default_names(self.arity())))
    }
}

impl fmt::Debug for RationalExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalExpression({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{default_names, parse_poly};

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s, &default_names(3)).unwrap()
    }

    #[test]
    fn reduces_common_factors() {
        let e = RationalExpression::new(p("x1^2 - 1"), p("2*x1*x2 + 2*x2")).unwrap();
        assert_eq!(e.denominator(), &LaurentPoly::one(3));
        assert_eq!(e.to_string_with(&default_names(3)), "(x1 - 1)/(2*x2)");
        let f = RationalExpression::new(p("x1"), p("-x2 - 1")).unwrap();
        assert_eq!(f.denominator(), &p("x2 + 1"));
        assert_eq!(f.to_string_with(&default_names(3)), "(-x1)/(x2 + 1)");
    }

    #[test]
    fn displays_laurent_as_fraction() {
        let e = RationalExpression::laurent(p("(x2 + 1)/(x1*x3)"));
        assert_eq!(e.to_string_with(&default_names(3)), "(x2 + 1)/(x1*x3)");
        let e = RationalExpression::laurent(p("x1^-1"));
        assert_eq!(e.to_string_with(&default_names(3)), "1/x1");
    }

    #[test]
    fn evaluation_with_fractions() {
        let vals = vec![
            RationalExpression::new(p("1"), p("x2 + 1")).unwrap(),
            RationalExpression::var(3, 1),
            RationalExpression::var(3, 2),
        ];
        // x1*(x2 + 1) evaluates to 1.
        let r = RationalExpression::eval_polynomial(&p("x1*x2 + x1"), &vals).unwrap();
        assert_eq!(r, RationalExpression::laurent(LaurentPoly::one(3)));
    }
}
